//! Fourier coefficients of the completion at level 1872 and the congruence
//! extractor for q^7 E(q^12) E(q^156) (supported on n = 7 mod 12).
//!
//! Two routes yield the eta-product coefficient: [q^n]A(q)/2 on
//! n = 7 mod 12, and a closed form carrying
//! the factor (1 - (-1)^{t1+t2})/4. Both are implemented; `discrepancies`
//! reports any n where they differ instead of reconciling them silently.

use crate::ntheory::{factorize, PrimePower};

use super::{classify, Level, Verdict};

#[derive(Debug, Default)]
struct Counts {
    /// ord_2(n) + ord_3(n)
    small: u32,
    /// product of (1 + ord) over S1 primes (split with (p/3) = (-13/p) = 1)
    grow: i64,
    /// multiplicity over the pairs (4,0,117), (9,0,52), (19,16,28)
    t1: u32,
    /// multiplicity over the pairs (4,0,117), (9,0,52), (7,2,67)
    t2: u32,
    /// multiplicity over third- and fourth-genus primes (ords even or dead)
    s: u32,
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
        match classify(Level::L1872, p).verdict {
            Verdict::Conductor => c.small += e,
            // p = 13, eigenvalue 1: factor 1 for every power
            Verdict::Ramified(_) => {}
            Verdict::ClassPair(k @ (0 | 1 | 2 | 3 | 4 | 5)) => {
                c.grow *= 1 + e as i64;
                if (3..=5).contains(&k) {
                    c.t1 += e;
                }
                if (2..=4).contains(&k) {
                    c.t2 += e;
                }
            }
            Verdict::ClassPair(_) => {
                // third and fourth genus
                if e % 2 == 1 {
                    c.dead = true;
                }
                c.s += e;
            }
            Verdict::Inert => {
                if e % 2 == 1 {
                    c.dead = true;
                }
            }
        }
    }
    c
}

/// [q^n] of the completion
/// A(q) = (B(1,0,468) + B(13,0,36) - B(4,0,117) - B(9,0,52))/2
///        + 2 q^7 E(q^12) E(q^156).
pub fn a(n: u64) -> i64 {
    assert!(n >= 1);
    let factors: Vec<(u64, u32)> = factorize(n)
        .into_iter()
        .map(|PrimePower { prime, exponent }| (prime, exponent))
        .collect();
    a_factored(&factors)
}

/// (-1)^{t1 + s/2} delta_{ord2 + ord3, 0} prod(1 + ord) prod parity.
pub fn a_factored(factors: &[(u64, u32)]) -> i64 {
    let c = counts(factors);
    if c.dead || c.small > 0 {
        return 0;
    }
    pow_neg_one(c.t1 + c.s / 2) * c.grow
}

/// [q^n] q^7 E(q^12) E(q^156) by congruence extraction: [q^n]A(q)/2 on
/// n = 7 mod 12, else 0.
pub fn coeff_eta(n: u64) -> i64 {
    if n % 12 == 7 {
        let v = a(n);
        debug_assert_eq!(v % 2, 0);
        v / 2
    } else {
        0
    }
}

/// The closed form for the same coefficient:
/// (1 - (-1)^{t1+t2})/4 * (-1)^{t1+s/2} delta prod prod.
pub fn coeff_eta_closed_form(n: u64) -> i64 {
    let factors: Vec<(u64, u32)> = factorize(n)
        .into_iter()
        .map(|PrimePower { prime, exponent }| (prime, exponent))
        .collect();
    let c = counts(&factors);
    let gate = (1 - pow_neg_one(c.t1 + c.t2)) / 2; // 0 or 1
    gate * a_factored(&factors) / 2
}

/// All n up to the bound where the two routes to the eta-product
/// coefficient disagree. Expected empty.
pub fn discrepancies(bound: u64) -> Vec<u64> {
    (1..=bound)
        .filter(|&n| coeff_eta(n) != coeff_eta_closed_form(n))
        .collect()
}

fn pow_neg_one(e: u32) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(a(7), 2);
        assert_eq!(coeff_eta(7), 1);
        assert_eq!(a(13), 1);
        assert_eq!(a(2), 0);
        assert_eq!(a(3), 0);
        assert_eq!(a(1), 1);
    }

    #[test]
    fn both_routes_agree_to_600() {
        assert_eq!(discrepancies(600), vec![]);
    }

    #[test]
    fn extractor_support() {
        for n in 1..=600u64 {
            if coeff_eta(n) != 0 {
                assert_eq!(n % 12, 7);
            }
        }
    }
}
