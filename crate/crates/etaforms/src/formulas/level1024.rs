//! Fourier coefficients of the completion at level 1024 as exact elements
//! of Q(sqrt 2), and the congruence extractors for q psi(q^8) phi(-q^64)
//! (n = 1 mod 8) and q^5 psi(-q^8) psi(-q^32) (n = 5 mod 8, after dividing
//! by sqrt 2).

use crate::algnum::{FieldElement, NumberField};
use crate::ntheory::{factorize, PrimePower};

use super::{classify, periodic_fn, Level, Periodic, Verdict};

#[derive(Debug, Default)]
struct Counts {
    /// ord_2(n)
    a: u32,
    /// product of (1 + ord) over primes of the (1,0,256) and (4,4,65) pairs
    grow: i64,
    /// total multiplicity of (4,4,65) primes
    t: u32,
    /// total multiplicity of (16,8,17) primes (all ords even, else dead)
    s: u32,
    /// ords mod 8 of (5,4,52) primes and (13,4,20) primes
    r: [u32; 8],
    sv: [u32; 8],
    dead: bool,
}

fn counts(factors: &[(u64, u32)]) -> Counts {
    let mut c = Counts {
        grow: 1,
        ..Default::default()
    };
    for &(p, e) in factors {
        if e == 0 {
            continue;
        }
        match classify(Level::L1024, p).verdict {
            Verdict::Conductor => c.a += e,
            Verdict::Ramified(_) => unreachable!("no ramified primes for -1024"),
            Verdict::ClassPair(0) => c.grow *= 1 + e as i64,
            Verdict::ClassPair(1) => {
                c.grow *= 1 + e as i64;
                c.t += e;
            }
            Verdict::ClassPair(2) => c.r[(e % 8) as usize] += 1,
            Verdict::ClassPair(3) => c.sv[(e % 8) as usize] += 1,
            Verdict::ClassPair(4) => {
                if e % 2 == 1 {
                    c.dead = true;
                }
                c.s += e;
            }
            Verdict::ClassPair(_) => unreachable!(),
            Verdict::Inert => {
                if e % 2 == 1 {
                    c.dead = true;
                }
            }
        }
    }
    c
}

/// [q^n] of the completion A(q), an exact element of Q(sqrt 2).
pub fn a(n: u64) -> FieldElement {
    assert!(n >= 1);
    let factors: Vec<(u64, u32)> = factorize(n)
        .into_iter()
        .map(|PrimePower { prime, exponent }| (prime, exponent))
        .collect();
    a_factored(&factors)
}

pub fn a_factored(factors: &[(u64, u32)]) -> FieldElement {
    let c = counts(factors);
    let table = table_route(&c);
    let residue = residue_route(&c);
    assert_eq!(table, residue, "coefficient routes disagree on {factors:?}");
    table
}

/// (-1)^{t+s/2} delta_{a,0} prod(1+ord) prod U prod V prod parity.
fn table_route(c: &Counts) -> FieldElement {
    let field = NumberField::Sqrt2;
    if c.dead || c.a > 0 {
        return FieldElement::zero(field);
    }
    let u = periodic_fn(Level::L1024, Periodic::U);
    let v = periodic_fn(Level::L1024, Periodic::V);
    let mut acc = FieldElement::from_int(field, pow_neg_one(c.t + c.s / 2) * c.grow);
    for i in 0..8 {
        for _ in 0..c.r[i] {
            acc = &acc * &u.values[i];
        }
        for _ in 0..c.sv[i] {
            acc = &acc * &v.values[i];
        }
    }
    acc
}

/// The residue-count form with k_i = r_i + s_i:
/// (-1)^{t + s/2 + s1 + r5 + k4 + k6} delta_{a + k3 + k7, 0}
/// sqrt2^{k1 + k5} prod(1 + ord) prod parity.
fn residue_route(c: &Counts) -> FieldElement {
    let field = NumberField::Sqrt2;
    let k = |i: usize| c.r[i] + c.sv[i];
    if c.dead || c.a > 0 || k(3) + k(7) > 0 {
        return FieldElement::zero(field);
    }
    let sign = pow_neg_one(c.t + c.s / 2 + c.sv[1] + c.r[5] + k(4) + k(6));
    let base = FieldElement::from_int(field, sign * c.grow);
    &base * &FieldElement::sqrt2().pow(k(1) + k(5))
}

fn pow_neg_one(e: u32) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// [q^n] q psi(q^8) phi(-q^64): equals [q^n]A(q) when n = 1 mod 8 (where
/// the coefficient is rational), else 0.
pub fn coeff_psi_phi(n: u64) -> i64 {
    if n % 8 != 1 {
        return 0;
    }
    let v = a(n);
    i64::try_from(v.to_integer().expect("coefficient rational on n = 1 mod 8")).unwrap()
}

/// [q^n] q^5 psi(-q^8) psi(-q^32): equals [q^n]A(q) / sqrt2 when
/// n = 5 mod 8, else 0.
pub fn coeff_psi_psi(n: u64) -> i64 {
    if n % 8 != 5 {
        return 0;
    }
    let v = a(n).div(&FieldElement::sqrt2());
    i64::try_from(
        v.to_integer()
            .expect("coefficient sqrt2-integral on n = 5 mod 8"),
    )
    .unwrap()
}
