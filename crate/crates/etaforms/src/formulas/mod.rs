//! Per-level machinery: prime classification against each discriminant,
//! the periodic eigen-coefficient tables, the multiplicative completions,
//! and the closed-form Fourier coefficient evaluators for the six levels
//! 47, 71, 135, 648, 1024, and 1872.
//!
//! Each discriminant gets its own classification criteria: the
//! Frobenius remainder congruences against the degree-5 and degree-7 class
//! polynomials (levels 47 and 71), the factorization pattern of the
//! degree-6 class polynomials (135 and 648), and genus characters refined
//! by a representation search (1024 and 1872, whose remainder-criterion
//! constants grow too large to tabulate). Every verdict can be
//! cross-checked against the brute-force representation oracle.

pub mod level1024;
pub mod level135;
pub mod level1872;
pub mod level47;
pub mod level648;
pub mod level71;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::algnum::{FieldElement, NumberField};
use crate::bqf::{self, Form};
use crate::ntheory::{self, factorize, frobenius_rem, kronecker, sqrt_mod, ModPoly, PrimePower};
use crate::qseries::{eta_quotient, theta_form, EtaQuotientSpec, QSeries};

/// One of the six levels treated explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    L47,
    L71,
    L135,
    L648,
    L1024,
    L1872,
}

pub const ALL_LEVELS: [Level; 6] = [
    Level::L47,
    Level::L71,
    Level::L135,
    Level::L648,
    Level::L1024,
    Level::L1872,
];

impl Level {
    pub fn number(self) -> u64 {
        match self {
            Level::L47 => 47,
            Level::L71 => 71,
            Level::L135 => 135,
            Level::L648 => 648,
            Level::L1024 => 1024,
            Level::L1872 => 1872,
        }
    }

    pub fn discriminant(self) -> i64 {
        -(self.number() as i64)
    }

    pub fn from_number(n: u64) -> Option<Level> {
        ALL_LEVELS.into_iter().find(|l| l.number() == n)
    }

    pub fn from_discriminant(d: i64) -> Option<Level> {
        ALL_LEVELS.into_iter().find(|l| l.discriminant() == d)
    }

    /// The coefficient field of the completions at this level.
    pub fn field(self) -> NumberField {
        match self {
            Level::L47 => NumberField::Sqrt5,
            Level::L71 => NumberField::Cos7,
            Level::L1024 => NumberField::Sqrt2,
            _ => NumberField::Rational,
        }
    }

    pub fn conductor(self) -> u64 {
        bqf::conductor(self.discriminant())
    }

    /// The class polynomial whose factorization modulo p drives the
    /// classification criteria. Ascending coefficients; the degree equals
    /// the class number.
    pub fn class_polynomial(self) -> &'static [i64] {
        match self {
            Level::L47 => &[-1, 0, 1, 2, 2, 1],
            Level::L71 => &[-1, 2, 1, -1, -1, -1, 1, 1],
            Level::L135 => &[-1, 0, 0, -1, 0, 0, 1],
            Level::L648 => &[1, -7758, -17217, -25316, -17217, -7758, 1],
            Level::L1024 => &[
                -128, -278528, -493568, -6554624, -9272384, -33443840, -14141504, -2363648, 1,
            ],
            Level::L1872 => &[
                69, -750, 2814, -5166, 4189, 858, -5144, 5608, -4200, 2574, -1094, 246, 1, -34, 24,
                -8, 1,
            ],
        }
    }

    /// One representative per class pair {(a,b,c), (a,-b,c)}, ordered to
    /// follow the S-set numbering of the classification criteria.
    pub fn class_pairs(self) -> &'static [Form] {
        match self {
            Level::L47 => &[
                Form { a: 1, b: 1, c: 12 },
                Form { a: 2, b: 1, c: 6 },
                Form { a: 3, b: 1, c: 4 },
            ],
            Level::L71 => &[
                Form { a: 1, b: 1, c: 18 },
                Form { a: 2, b: 1, c: 9 },
                Form { a: 4, b: 3, c: 5 },
                Form { a: 3, b: 1, c: 6 },
            ],
            Level::L135 => &[
                Form { a: 1, b: 1, c: 34 },
                Form { a: 5, b: 5, c: 8 },
                Form { a: 4, b: 3, c: 9 },
                Form { a: 2, b: 1, c: 17 },
            ],
            Level::L648 => &[
                Form { a: 1, b: 0, c: 162 },
                Form { a: 2, b: 0, c: 81 },
                Form { a: 9, b: 6, c: 19 },
                Form {
                    a: 11,
                    b: 10,
                    c: 17,
                },
            ],
            Level::L1024 => &[
                Form { a: 1, b: 0, c: 256 },
                Form { a: 4, b: 4, c: 65 },
                Form { a: 5, b: 4, c: 52 },
                Form { a: 13, b: 4, c: 20 },
                Form { a: 16, b: 8, c: 17 },
            ],
            Level::L1872 => &[
                Form { a: 1, b: 0, c: 468 },
                Form { a: 13, b: 0, c: 36 },
                Form { a: 7, b: 2, c: 67 },
                Form { a: 4, b: 0, c: 117 },
                Form { a: 9, b: 0, c: 52 },
                Form {
                    a: 19,
                    b: 16,
                    c: 28,
                },
                Form { a: 8, b: 4, c: 59 },
                Form { a: 11, b: 8, c: 44 },
                Form { a: 9, b: 6, c: 53 },
                Form {
                    a: 17,
                    b: 10,
                    c: 29,
                },
            ],
        }
    }

    /// Names of the completions at this level.
    pub fn completion_names(self) -> &'static [&'static str] {
        match self {
            Level::L47 => &["A1", "A2"],
            Level::L71 => &["A1", "A2", "A3"],
            _ => &["A"],
        }
    }
}

/// Where a prime sits relative to a fixed discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Represented by the class pair with this index in `class_pairs`.
    ClassPair(usize),
    /// (d/p) = 0 with p not dividing the conductor; represented by the
    /// class pair with this index.
    Ramified(usize),
    /// (d/p) = -1: represented by no form of the discriminant.
    Inert,
    /// p divides the conductor: not represented, handled by its own case
    /// in every coefficient formula.
    Conductor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeClassification {
    pub level: Level,
    pub prime: u64,
    pub verdict: Verdict,
}

impl PrimeClassification {
    /// The representing class pair, when there is one.
    pub fn pair(&self) -> Option<Form> {
        match self.verdict {
            Verdict::ClassPair(i) | Verdict::Ramified(i) => Some(self.level.class_pairs()[i]),
            _ => None,
        }
    }
}

impl std::fmt::Display for PrimeClassification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.verdict {
            Verdict::ClassPair(i) => {
                write!(f, "split, represented by {}", self.level.class_pairs()[i])
            }
            Verdict::Ramified(i) => {
                write!(
                    f,
                    "ramified, represented by {}",
                    self.level.class_pairs()[i]
                )
            }
            Verdict::Inert => write!(f, "inert"),
            Verdict::Conductor => write!(f, "divides the conductor"),
        }
    }
}

fn cache() -> &'static Mutex<HashMap<(Level, u64), Verdict>> {
    static CACHE: OnceLock<Mutex<HashMap<(Level, u64), Verdict>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Classify a prime against the discriminant of a level, with caching:
/// the coefficient evaluators re-query the same primes constantly.
pub fn classify(level: Level, p: u64) -> PrimeClassification {
    debug_assert!(ntheory::is_prime(p), "classify requires a prime");
    if let Some(&verdict) = cache().lock().unwrap().get(&(level, p)) {
        return PrimeClassification {
            level,
            prime: p,
            verdict,
        };
    }
    let verdict = classify_uncached(level, p);
    cache().lock().unwrap().insert((level, p), verdict);
    PrimeClassification {
        level,
        prime: p,
        verdict,
    }
}

/// The classification logic without the cache, exposed so the criteria can
/// be exercised directly against the representation oracle.
pub fn classify_uncached(level: Level, p: u64) -> Verdict {
    if level.conductor() % p == 0 {
        return Verdict::Conductor;
    }
    match kronecker(level.discriminant(), p) {
        -1 => Verdict::Inert,
        0 => Verdict::Ramified(representation_pair(level, p)),
        _ => match level {
            Level::L47 | Level::L71 => remainder_criteria(level, p)
                .unwrap_or_else(|| Verdict::ClassPair(representation_pair(level, p))),
            Level::L135 | Level::L648 => match pattern_criteria(level, p) {
                Some(v) => v,
                // class polynomial not squarefree mod p: oracle fallback
                None => Verdict::ClassPair(representation_pair(level, p)),
            },
            Level::L1024 | Level::L1872 => genus_refined_verdict(level, p),
        },
    }
}

/// The smallest prime landing in each class pair, in pair order.
pub fn smallest_primes_per_pair(level: Level) -> Vec<u64> {
    let pairs = level.class_pairs();
    let mut out = vec![0u64; pairs.len()];
    let mut missing = pairs.len();
    let mut p = 2u64;
    while missing > 0 {
        if ntheory::is_prime(p) {
            if let Verdict::ClassPair(i) = classify(level, p).verdict {
                if out[i] == 0 {
                    out[i] = p;
                    missing -= 1;
                }
            }
        }
        p += 1;
    }
    out
}

/// Index of the unique class pair representing p (brute force).
pub fn representation_pair(level: Level, p: u64) -> usize {
    let hits: Vec<usize> = level
        .class_pairs()
        .iter()
        .enumerate()
        .filter_map(|(i, f)| f.represents(p).then_some(i))
        .collect();
    assert_eq!(
        hits.len(),
        1,
        "prime {p} represented by {} pairs of {level:?}",
        hits.len()
    );
    hits[0]
}

/// The Frobenius-remainder congruences for levels 47 and 71.
/// Returns None when p divides the excluded constant (2 * 47 or 2 * 71),
/// where the congruences do not apply.
pub fn remainder_criteria(level: Level, p: u64) -> Option<Verdict> {
    // Non-principal criteria as (constant, coefficient of r) pairs by
    // ascending degree; r is a square root of d mod p, and the congruence
    // compares against scale * z^p mod (W, p).
    let (scale, crits): (i64, &[&[(i64, i64)]]) = match level {
        Level::L47 => (
            94,
            &[
                &[(-47, -1), (-47, -5), (-47, -11), (-47, -5), (-47, 3)],
                &[(-47, 5), (0, 12), (47, 7), (47, -1), (47, 1)],
            ],
        ),
        Level::L71 => (
            142,
            &[
                &[
                    (-213, 11),
                    (-71, -15),
                    (213, -5),
                    (142, -6),
                    (71, -5),
                    (-142, 6),
                    (-142, 2),
                ],
                &[
                    (0, 20),
                    (-71, 13),
                    (-71, -27),
                    (0, -20),
                    (0, -10),
                    (0, 16),
                    (0, 20),
                ],
                &[
                    (142, 4),
                    (71, 5),
                    (-142, -4),
                    (-142, -2),
                    (-71, 1),
                    (142, 10),
                    (142, 10),
                ],
            ],
        ),
        _ => panic!("remainder criteria exist for levels 47 and 71 only"),
    };
    if scale % p as i64 == 0 {
        return None;
    }
    let w = ModPoly::new(p, level.class_polynomial());
    let rem = frobenius_rem(&w).expect("class polynomial is monic");
    if rem == ModPoly::z(p) {
        return Some(Verdict::ClassPair(0));
    }
    let scaled = rem.scale(scale.rem_euclid(p as i64) as u64);
    let r = sqrt_mod(level.discriminant(), p).expect("split prime has a square root of d");
    let mut matches = Vec::new();
    for (which, coeffs) in crits.iter().enumerate() {
        for root in [r, p - r] {
            let target: Vec<i64> = coeffs
                .iter()
                .map(|&(c0, c1)| c0 + c1 * root as i64)
                .collect();
            if scaled == ModPoly::new(p, &target) {
                matches.push(which + 1);
                break;
            }
        }
    }
    assert_eq!(
        matches.len(),
        1,
        "criteria matched {matches:?} for p={p} at {level:?}"
    );
    Some(Verdict::ClassPair(matches[0]))
}

/// Factorization-pattern criteria for levels 135 and 648: the degree
/// multiset of the class polynomial mod p picks the class pair. Returns
/// None when the polynomial is not squarefree mod p.
pub fn pattern_criteria(level: Level, p: u64) -> Option<Verdict> {
    assert!(matches!(level, Level::L135 | Level::L648));
    let w = ModPoly::new(p, level.class_polynomial());
    if !w.is_monic() {
        return None; // leading coefficient vanished mod p
    }
    let pattern = ntheory::factor_degree_pattern(&w).ok()?;
    // pair order: principal, three-quadratics, two-cubics, irreducible
    let idx = match pattern.as_slice() {
        [1, 1, 1, 1, 1, 1] => 0,
        [2, 2, 2] => 1,
        [3, 3] => 2,
        [6] => 3,
        other => panic!("unexpected factorization pattern {other:?} for p={p} at {level:?}"),
    };
    Some(Verdict::ClassPair(idx))
}

/// Genus characters pick the genus; the representation oracle picks the
/// pair inside it (levels 1024 and 1872, which have no usable remainder
/// criteria).
pub fn genus_refined_verdict(level: Level, p: u64) -> Verdict {
    let chars = bqf::character_system(level.discriminant());
    let vector: Vec<i32> = chars.iter().map(|chi| chi.eval(p)).collect();
    let candidates: &[usize] = match level {
        Level::L1024 => match vector.as_slice() {
            [1, 1] => &[0, 1, 4],
            [1, -1] => &[2, 3],
            other => panic!("impossible character vector {other:?} for split p={p}"),
        },
        Level::L1872 => match vector.as_slice() {
            [1, 1, 1] => &[0, 1, 3, 4],
            [1, -1, -1] => &[2, 5],
            [-1, -1, -1] => &[6, 7],
            [-1, 1, 1] => &[8, 9],
            other => panic!("impossible character vector {other:?} for split p={p}"),
        },
        _ => panic!("genus refinement applies to levels 1024 and 1872 only"),
    };
    let pairs = level.class_pairs();
    let hits: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&i| pairs[i].represents(p))
        .collect();
    assert_eq!(
        hits.len(),
        1,
        "genus of p={p} contains {} representing pairs",
        hits.len()
    );
    Verdict::ClassPair(hits[0])
}

/// Which periodic eigen-coefficient table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Periodic {
    U,
    V,
    W,
}

/// A periodic arithmetic function stored as its exact table of values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicEigenFn {
    pub values: Vec<FieldElement>,
}

impl PeriodicEigenFn {
    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn eval(&self, n: u64) -> FieldElement {
        self.values[(n % self.period() as u64) as usize].clone()
    }
}

/// The periodic tables per level. Periods: 5 for level 47, 7 for 71,
/// 6 for 135 and 648 (which has no V or W), 8 for 1024. Stored exactly,
/// never evaluated through the defining sine quotients.
pub fn periodic_fn(level: Level, which: Periodic) -> PeriodicEigenFn {
    let ints = |v: &[i64]| PeriodicEigenFn {
        values: v
            .iter()
            .map(|&c| FieldElement::from_int(NumberField::Rational, c))
            .collect(),
    };
    match (level, which) {
        (Level::L47, Periodic::U) => {
            let (mu, one) = (FieldElement::mu(), FieldElement::one(NumberField::Sqrt5));
            PeriodicEigenFn {
                values: vec![
                    one.clone(),
                    -&mu,
                    mu,
                    -&one,
                    FieldElement::zero(NumberField::Sqrt5),
                ],
            }
        }
        (Level::L47, Periodic::V) => {
            let (la, one) = (
                FieldElement::lambda(),
                FieldElement::one(NumberField::Sqrt5),
            );
            PeriodicEigenFn {
                values: vec![
                    one.clone(),
                    -&la,
                    la,
                    -&one,
                    FieldElement::zero(NumberField::Sqrt5),
                ],
            }
        }
        (Level::L71, which) => {
            // the U row; V and W are its images under sigma = (alpha beta gamma)
            let k = match which {
                Periodic::U => 0,
                Periodic::V => 1,
                Periodic::W => 2,
            };
            let first = FieldElement::alpha().galois_image(k);
            let inv = FieldElement::gamma().galois_image(k).inverse();
            let one = FieldElement::one(NumberField::Cos7);
            PeriodicEigenFn {
                values: vec![
                    one.clone(),
                    first.clone(),
                    -&inv,
                    inv.clone(),
                    -&first,
                    -&one,
                    FieldElement::zero(NumberField::Cos7),
                ],
            }
        }
        (Level::L135 | Level::L648, Periodic::U) => ints(&[1, -1, 0, 1, -1, 0]),
        (Level::L135, Periodic::V) => ints(&[1, 1, 0, -1, -1, 0]),
        (Level::L1024, Periodic::U) => {
            let (r2, one) = (FieldElement::sqrt2(), FieldElement::one(NumberField::Sqrt2));
            PeriodicEigenFn {
                values: vec![
                    one.clone(),
                    r2.clone(),
                    one.clone(),
                    FieldElement::zero(NumberField::Sqrt2),
                    -&one,
                    -&r2,
                    -&one,
                    FieldElement::zero(NumberField::Sqrt2),
                ],
            }
        }
        (Level::L1024, Periodic::V) => {
            let (r2, one) = (FieldElement::sqrt2(), FieldElement::one(NumberField::Sqrt2));
            PeriodicEigenFn {
                values: vec![
                    one.clone(),
                    -&r2,
                    one.clone(),
                    FieldElement::zero(NumberField::Sqrt2),
                    -&one,
                    r2.clone(),
                    -&one,
                    FieldElement::zero(NumberField::Sqrt2),
                ],
            }
        }
        (level, which) => panic!("no {which:?} table at level {level:?}"),
    }
}

/// Table lookup at n mod period.
pub fn periodic_value(level: Level, which: Periodic, n: u64) -> FieldElement {
    periodic_fn(level, which).eval(n)
}

/// All completions of the level's eta-quotients as exact q-series: the
/// theta-series combinations that are eigenforms for every Hecke operator.
pub fn completions(level: Level, order: usize) -> Vec<QSeries> {
    let th = |a: i64, b: i64, c: i64| theta_form(&Form::new(a, b, c), order);
    let half = |s: &QSeries| s.scaled_rational(1, 2);
    match level {
        Level::L47 => {
            let (i, a, a2) = (th(1, 1, 12), th(2, 1, 6), th(3, 1, 4));
            let mu = FieldElement::mu();
            let la = FieldElement::lambda();
            let a1 = half(&(&(&i - &a.scaled(&mu)) - &a2.scaled(&la)));
            let a2s = half(&(&(&i - &a.scaled(&la)) - &a2.scaled(&mu)));
            vec![a1, a2s]
        }
        Level::L71 => {
            let (i, x, y, z) = (th(1, 1, 18), th(2, 1, 9), th(4, 3, 5), th(3, 1, 6));
            let mk = |p: &FieldElement, q: &FieldElement, r: &FieldElement| {
                half(&(&(&(&i + &x.scaled(p)) + &y.scaled(q)) + &z.scaled(r)))
            };
            let (al, be, ga) = (
                FieldElement::alpha(),
                FieldElement::beta(),
                FieldElement::gamma(),
            );
            vec![mk(&ga, &al, &be), mk(&al, &be, &ga), mk(&be, &ga, &al)]
        }
        Level::L135 => {
            vec![half(
                &(&(&th(1, 1, 34) - &th(4, 3, 9)) + &(&th(2, 1, 17) - &th(5, 5, 8))),
            )]
        }
        Level::L648 => {
            vec![half(
                &(&(&th(1, 0, 162) - &th(9, 6, 19)) + &(&th(2, 0, 81) - &th(11, 10, 17))),
            )]
        }
        Level::L1024 => {
            let principal = &th(1, 0, 256) - &th(4, 4, 65);
            let second = (&th(5, 4, 52) - &th(13, 4, 20)).scaled(&FieldElement::sqrt2());
            vec![half(&(&principal + &second))]
        }
        Level::L1872 => {
            let theta = &(&th(1, 0, 468) + &th(13, 0, 36)) - &(&th(4, 0, 117) + &th(9, 0, 52));
            let eta = eta_quotient(&EtaQuotientSpec::new(7, &[(12, 1), (156, 1)]), order);
            vec![&half(&theta) + &eta.scaled_rational(2, 1)]
        }
    }
}

/// The first (for 47 and 71: the A1) completion.
pub fn completion_series(level: Level, order: usize) -> QSeries {
    completions(level, order).swap_remove(0)
}

/// Eigenvalue of T_p on the given completion, keyed by the verdict of p.
pub fn eigenvalue(level: Level, completion: usize, verdict: Verdict) -> FieldElement {
    let field = level.field();
    let int = |n: i64| FieldElement::from_int(field, n);
    match verdict {
        Verdict::Inert | Verdict::Conductor => int(0),
        Verdict::Ramified(_) => match level {
            Level::L135 => int(-1),
            Level::L1024 => unreachable!("every ramified prime of -1024 divides the conductor"),
            _ => int(1),
        },
        Verdict::ClassPair(k) => match level {
            Level::L47 => {
                let (mu, la) = (FieldElement::mu(), FieldElement::lambda());
                let row: [FieldElement; 3] = if completion == 0 {
                    [int(2), -&mu, -&la]
                } else {
                    [int(2), -&la, -&mu]
                };
                row[k].clone()
            }
            Level::L71 => {
                let (al, be, ga) = (
                    FieldElement::alpha(),
                    FieldElement::beta(),
                    FieldElement::gamma(),
                );
                let row: [FieldElement; 4] = match completion {
                    0 => [int(2), ga, al, be],
                    1 => [int(2), al, be, ga],
                    _ => [int(2), be, ga, al],
                };
                row[k].clone()
            }
            Level::L135 => int([2, -2, -1, 1][k]),
            Level::L648 => int([2, 2, -1, -1][k]),
            Level::L1024 => {
                let r2 = FieldElement::sqrt2();
                [int(2), int(-2), r2.clone(), -&r2, int(0)][k].clone()
            }
            Level::L1872 => int([2, 2, 2, -2, -2, -2, 0, 0, 0, 0][k]),
        },
    }
}

/// Coefficient [q^n] of a completion by the multiplicative formula: the
/// product over p^e || n of the prime-power values generated by the Hecke
/// recursion from the eigenvalue table.
pub fn completion_coefficient(level: Level, completion: usize, n: u64) -> FieldElement {
    let factors: Vec<(u64, u32)> = factorize(n)
        .into_iter()
        .map(|PrimePower { prime, exponent }| (prime, exponent))
        .collect();
    completion_coefficient_factored(level, completion, &factors)
}

/// Same, for n given by its factorization (usable when n itself would
/// overflow a machine word).
pub fn completion_coefficient_factored(
    level: Level,
    completion: usize,
    factors: &[(u64, u32)],
) -> FieldElement {
    let mut acc = FieldElement::one(level.field());
    for &(p, e) in factors {
        let verdict = classify(level, p).verdict;
        let lambda = eigenvalue(level, completion, verdict);
        let chi = kronecker(level.discriminant(), p);
        acc = &acc * &crate::hecke::coeff_recursion(&lambda, chi, e);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ntheory::is_prime;

    #[test]
    fn class_polynomial_degrees_match_class_numbers() {
        for level in ALL_LEVELS {
            let degree = level.class_polynomial().len() - 1;
            let h = bqf::class_group(level.discriminant()).unwrap().order();
            assert_eq!(degree, h, "{level:?}");
        }
    }

    #[test]
    fn class_pairs_cover_the_class_group() {
        for level in ALL_LEVELS {
            let group = bqf::class_group(level.discriminant()).unwrap();
            let mut covered = std::collections::BTreeSet::new();
            for f in level.class_pairs() {
                assert!(f.is_reduced(), "{f} not reduced");
                covered.insert(*f);
                covered.insert(f.conjugate().reduce().0);
            }
            assert_eq!(covered.len(), group.order(), "{level:?}");
        }
    }

    #[test]
    fn classification_spot_checks() {
        assert_eq!(classify(Level::L47, 47).verdict, Verdict::Ramified(0));
        assert_eq!(classify(Level::L47, 53).verdict, Verdict::ClassPair(1));
        assert_eq!(classify(Level::L47, 5).verdict, Verdict::Inert);
        assert_eq!(classify(Level::L47, 2).verdict, Verdict::ClassPair(1));
        assert_eq!(classify(Level::L135, 3).verdict, Verdict::Conductor);
        assert_eq!(classify(Level::L135, 5).verdict, Verdict::Ramified(1));
        assert_eq!(classify(Level::L135, 2).verdict, Verdict::ClassPair(3));
        assert_eq!(classify(Level::L648, 2).verdict, Verdict::Ramified(1));
        assert_eq!(classify(Level::L648, 3).verdict, Verdict::Conductor);
        assert_eq!(classify(Level::L1024, 2).verdict, Verdict::Conductor);
        assert_eq!(classify(Level::L1024, 5).verdict, Verdict::ClassPair(2));
        assert_eq!(classify(Level::L1024, 17).verdict, Verdict::ClassPair(4));
        assert_eq!(classify(Level::L1872, 13).verdict, Verdict::Ramified(1));
        assert_eq!(classify(Level::L1872, 7).verdict, Verdict::ClassPair(2));
    }

    #[test]
    fn criteria_agree_with_representation_oracle_small() {
        for level in ALL_LEVELS {
            for p in (2u64..300).filter(|&p| is_prime(p)) {
                let verdict = classify_uncached(level, p);
                match verdict {
                    Verdict::ClassPair(i) | Verdict::Ramified(i) => {
                        assert_eq!(i, representation_pair(level, p), "{level:?} p={p}");
                    }
                    Verdict::Inert => {
                        assert!(level.class_pairs().iter().all(|f| !f.represents(p)));
                    }
                    Verdict::Conductor => {
                        assert_eq!(level.conductor() % p, 0);
                        assert!(level.class_pairs().iter().all(|f| !f.represents(p)));
                    }
                }
            }
        }
    }

    #[test]
    fn periodic_tables_match_eigen_recursion() {
        // each table must agree with the Hecke prime-power recursion seeded
        // by the corresponding eigenvalue
        let cases: Vec<(Level, Periodic, FieldElement, i32)> = vec![
            (Level::L47, Periodic::U, -&FieldElement::mu(), 1),
            (Level::L47, Periodic::V, -&FieldElement::lambda(), 1),
            (Level::L71, Periodic::U, FieldElement::alpha(), 1),
            (Level::L71, Periodic::V, FieldElement::beta(), 1),
            (Level::L71, Periodic::W, FieldElement::gamma(), 1),
            (
                Level::L135,
                Periodic::U,
                FieldElement::from_int(NumberField::Rational, -1),
                1,
            ),
            (
                Level::L135,
                Periodic::V,
                FieldElement::from_int(NumberField::Rational, 1),
                1,
            ),
            (Level::L1024, Periodic::U, FieldElement::sqrt2(), 1),
            (Level::L1024, Periodic::V, -&FieldElement::sqrt2(), 1),
        ];
        for (level, which, seed, chi) in cases {
            let table = periodic_fn(level, which);
            for n in 0..3 * table.period() as u64 {
                assert_eq!(
                    table.eval(n),
                    crate::hecke::coeff_recursion(&seed, chi, n as u32),
                    "{level:?} {which:?} at {n}"
                );
            }
        }
    }

    #[test]
    fn periodic_table_spot_values() {
        assert_eq!(
            periodic_value(Level::L47, Periodic::U, 2),
            FieldElement::mu()
        );
        assert_eq!(
            periodic_value(Level::L1024, Periodic::U, 1),
            FieldElement::sqrt2()
        );
        assert!(periodic_value(Level::L71, Periodic::U, 6).is_zero());
    }

    #[test]
    fn completion_normalization() {
        for level in ALL_LEVELS {
            for (i, series) in completions(level, 30).into_iter().enumerate() {
                assert!(series.coeff(0).is_zero(), "{level:?} completion {i} at q^0");
                assert_eq!(
                    series.coeff(1),
                    &FieldElement::one(level.field()),
                    "{level:?} completion {i} must have h(1) = 1"
                );
            }
        }
    }

    #[test]
    fn completion_coefficients_match_series_small() {
        for level in ALL_LEVELS {
            let all = completions(level, 200);
            for (i, series) in all.iter().enumerate() {
                for n in 1..=200u64 {
                    assert_eq!(
                        &completion_coefficient(level, i, n),
                        series.coeff(n as usize),
                        "{level:?} completion {i} at n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn completion_leading_coefficients() {
        let a = completion_series(Level::L135, 10);
        assert_eq!(a.coeff(1).to_integer().unwrap(), 1.into());
        let a = completion_series(Level::L1872, 10);
        assert_eq!(a.coeff(7).to_integer().unwrap(), 2.into());
    }
}
