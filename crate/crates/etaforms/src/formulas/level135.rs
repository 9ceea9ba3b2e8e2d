//! Fourier coefficients of the completion at level 135 and the congruence
//! extractors for its two eta-products q E(q^9) E(q^15) (supported on
//! n = 1 mod 3) and q^2 E(q^3) E(q^45) (n = 2 mod 3).

use crate::ntheory::{factorize, PrimePower};

use super::{classify, periodic_fn, Level, Periodic, Verdict};

#[derive(Debug, Default)]
struct Counts {
    /// ord_3(n) and ord_5(n)
    a: u32,
    b: u32,
    /// product of (1 + ord) over S1 and S2 primes
    grow: i64,
    /// total multiplicity of S2 = (5,5,8) primes
    t: u32,
    /// ords of S3 = (4,3,9) primes mod 3, and S4 = (2,1,17) primes mod 6
    r: [u32; 3],
    s: [u32; 6],
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
        match classify(Level::L135, p).verdict {
            Verdict::Conductor => c.a += e,
            Verdict::Ramified(_) => c.b += e,
            Verdict::ClassPair(0) => c.grow *= 1 + e as i64,
            Verdict::ClassPair(1) => {
                c.grow *= 1 + e as i64;
                c.t += e;
            }
            Verdict::ClassPair(2) => c.r[(e % 3) as usize] += 1,
            Verdict::ClassPair(3) => c.s[(e % 6) as usize] += 1,
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

/// [q^n] of the completion A(q), by the table route
/// (-1)^{b+t} delta_{a,0} prod(1 + ord) prod U prod V prod parity; the
/// residue-count route is evaluated alongside and must agree.
pub fn a(n: u64) -> i64 {
    assert!(n >= 1);
    let factors: Vec<(u64, u32)> = factorize(n)
        .into_iter()
        .map(|PrimePower { prime, exponent }| (prime, exponent))
        .collect();
    a_factored(&factors)
}

pub fn a_factored(factors: &[(u64, u32)]) -> i64 {
    let c = counts(factors);
    let table = table_route(&c);
    let residue = residue_route(&c);
    assert_eq!(table, residue, "coefficient routes disagree on {factors:?}");
    table
}

fn table_route(c: &Counts) -> i64 {
    if c.dead || c.a > 0 {
        return 0;
    }
    let u = periodic_fn(Level::L135, Periodic::U);
    let v = periodic_fn(Level::L135, Periodic::V);
    let mut prod = 1i64;
    for i in 0..6 {
        if i < 3 {
            for _ in 0..c.r[i] {
                prod *= to_int(&u.values[i]);
            }
        }
        for _ in 0..c.s[i] {
            prod *= to_int(&v.values[i]);
        }
    }
    pow_neg_one(c.b + c.t) * c.grow * prod
}

/// (-1)^{b+t+r1+s3+s4} delta_{a+r2+s2+s5,0} prod(1+ord) prod parity.
fn residue_route(c: &Counts) -> i64 {
    if c.dead || c.a > 0 || c.r[2] + c.s[2] + c.s[5] > 0 {
        return 0;
    }
    pow_neg_one(c.b + c.t + c.r[1] + c.s[3] + c.s[4]) * c.grow
}

fn to_int(v: &crate::algnum::FieldElement) -> i64 {
    i64::try_from(v.to_integer().expect("rational table value")).unwrap()
}

fn pow_neg_one(e: u32) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// [q^n] q E(q^9) E(q^15): the completion coefficient when n = 1 mod 3.
pub fn coeff_q_e9_e15(n: u64) -> i64 {
    if n % 3 == 1 {
        a(n)
    } else {
        0
    }
}

/// [q^n] q^2 E(q^3) E(q^45): the completion coefficient when n = 2 mod 3.
pub fn coeff_q2_e3_e45(n: u64) -> i64 {
    if n % 3 == 2 {
        a(n)
    } else {
        0
    }
}

/// The sign-split form of the first extractor:
/// [q^n] 2 q E(q^9) E(q^15) = (1 + (-1)^{b+t+s1+s3}) [q^n]A(q).
pub fn coeff_q_e9_e15_signed(n: u64) -> i64 {
    let factors: Vec<(u64, u32)> = factorize(n)
        .into_iter()
        .map(|PrimePower { prime, exponent }| (prime, exponent))
        .collect();
    let c = counts(&factors);
    (1 + pow_neg_one(c.b + c.t + c.s[1] + c.s[3])) * a_factored(&factors) / 2
}

/// The sign-split form of the second extractor:
/// [q^n] 2 q^2 E(q^3) E(q^45) = (1 - (-1)^{b+t+s1+s3}) [q^n]A(q).
pub fn coeff_q2_e3_e45_signed(n: u64) -> i64 {
    let factors: Vec<(u64, u32)> = factorize(n)
        .into_iter()
        .map(|PrimePower { prime, exponent }| (prime, exponent))
        .collect();
    let c = counts(&factors);
    (1 - pow_neg_one(c.b + c.t + c.s[1] + c.s[3])) * a_factored(&factors) / 2
}
