//! Fourier coefficients of the completion at level 648 and the congruence
//! extractors for the two weight-1 cusp forms g(q) (n = 1 mod 3) and h(q)
//! (n = 2 mod 3) produced by the 9s-difference identity.

use crate::ntheory::{factorize, PrimePower};

use super::{classify, periodic_fn, Level, Periodic, Verdict};

#[derive(Debug, Default)]
struct Counts {
    /// ord_3(n)
    b: u32,
    /// product of (1 + ord) over S1 primes
    grow: i64,
    /// ords of S2 primes mod 3
    r: [u32; 3],
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
        match classify(Level::L648, p).verdict {
            // p = 2 is ramified with eigenvalue 1: factor 1 for every power
            Verdict::Ramified(_) => {}
            Verdict::Conductor => c.b += e,
            // S1 merges the pairs (1,0,162) and (2,0,81)
            Verdict::ClassPair(0) | Verdict::ClassPair(1) => c.grow *= 1 + e as i64,
            // S2 merges (9,6,19) and (11,10,17)
            Verdict::ClassPair(2) | Verdict::ClassPair(3) => c.r[(e % 3) as usize] += 1,
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

/// [q^n] of the completion A(q) = g(q) + h(q).
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

/// delta_{b,0} prod(1 + ord) prod U(ord) prod parity.
fn table_route(c: &Counts) -> i64 {
    if c.dead || c.b > 0 {
        return 0;
    }
    let u = periodic_fn(Level::L648, Periodic::U);
    let mut prod = 1i64;
    for i in 0..3 {
        for _ in 0..c.r[i] {
            prod *= i64::try_from(u.values[i].to_integer().unwrap()).unwrap();
        }
    }
    c.grow * prod
}

/// (-1)^{r1} delta_{b+r2,0} prod(1 + ord) prod parity.
fn residue_route(c: &Counts) -> i64 {
    if c.dead || c.b > 0 || c.r[2] > 0 {
        return 0;
    }
    let sign = if c.r[1] % 2 == 0 { 1 } else { -1 };
    sign * c.grow
}

/// [q^n] g(q) = (B(1,0,162,q) - B(9,6,19,q)) / 2.
pub fn coeff_g(n: u64) -> i64 {
    if n % 3 == 1 {
        a(n)
    } else {
        0
    }
}

/// [q^n] h(q) = (B(2,0,81,q) - B(11,10,17,q)) / 2.
pub fn coeff_h(n: u64) -> i64 {
    if n % 3 == 2 {
        a(n)
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(coeff_g(1), 1);
        assert_eq!(coeff_g(2), 0);
        assert_eq!(coeff_h(2), 1);
        for k in 1..=10u32 {
            assert_eq!(a(2u64.pow(k)), 1, "2^{k}");
        }
        assert_eq!(a(3), 0);
        assert_eq!(a(9), 0);
    }

    #[test]
    fn extractor_supports_are_congruentially_disjoint() {
        for n in 1..=600u64 {
            if coeff_g(n) != 0 {
                assert_eq!(n % 3, 1);
            }
            if coeff_h(n) != 0 {
                assert_eq!(n % 3, 2);
            }
        }
    }
}
