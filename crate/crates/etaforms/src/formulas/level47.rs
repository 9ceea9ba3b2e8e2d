//! Fourier coefficients of q^2 E(q) E(q^47), the weight-1 eta-product of
//! level 47, through two independent routes: the Q(sqrt 5) eigen-coefficient
//! difference divided by sqrt 5, and the piecewise binomial-sum form. Both
//! are always evaluated and must agree.

use num_bigint::BigInt;

use crate::algnum::FieldElement;
use crate::ntheory::{factorize, PrimePower};

use super::{classify, periodic_fn, Level, Periodic, Verdict};

/// Residue-class counts of the prime factorization relative to d = -47.
#[derive(Debug, Default)]
struct Counts {
    /// product of (1 + ord) over principal-pair primes
    delta: i64,
    /// an inert prime divides n to odd order: the coefficient vanishes
    dead: bool,
    /// r[i] = #{p in S2 : ord_p(n) = i mod 5}
    r: [u32; 5],
    /// s[i] = #{p in S3 : ord_p(n) = i mod 5}
    s: [u32; 5],
}

fn counts(factors: &[(u64, u32)]) -> Counts {
    let mut c = Counts {
        delta: 1,
        ..Default::default()
    };
    for &(p, e) in factors {
        if e == 0 {
            continue;
        }
        match classify(Level::L47, p).verdict {
            Verdict::Ramified(_) => {}
            Verdict::ClassPair(0) => c.delta *= 1 + e as i64,
            Verdict::ClassPair(1) => c.r[(e % 5) as usize] += 1,
            Verdict::ClassPair(2) => c.s[(e % 5) as usize] += 1,
            Verdict::ClassPair(_) => unreachable!(),
            Verdict::Inert => {
                if e % 2 == 1 {
                    c.dead = true;
                }
            }
            Verdict::Conductor => unreachable!("-47 is fundamental"),
        }
    }
    c
}

/// a(n) = [q^n] q^2 E(q) E(q^47).
pub fn a(n: u64) -> i64 {
    assert!(n >= 1);
    let factors: Vec<(u64, u32)> = factorize(n)
        .into_iter()
        .map(|PrimePower { prime, exponent }| (prime, exponent))
        .collect();
    a_factored(&factors)
}

/// a(n) for n given by its prime factorization.
pub fn a_factored(factors: &[(u64, u32)]) -> i64 {
    let c = counts(factors);
    let field = field_route(&c);
    let binomial = binomial_route(&c);
    assert_eq!(
        field, binomial,
        "coefficient routes disagree on {factors:?}"
    );
    field
}

/// Delta(n) * (prod U prod V - prod V prod U) / sqrt 5, evaluated exactly
/// in Q(sqrt 5).
fn field_route(c: &Counts) -> i64 {
    if c.dead {
        return 0;
    }
    let u = periodic_fn(Level::L47, Periodic::U);
    let v = periodic_fn(Level::L47, Periodic::V);
    let mut uv = FieldElement::one(crate::algnum::NumberField::Sqrt5);
    let mut vu = uv.clone();
    for i in 0..5 {
        for _ in 0..c.r[i] {
            uv = &uv * &u.values[i];
            vu = &vu * &v.values[i];
        }
        for _ in 0..c.s[i] {
            uv = &uv * &v.values[i];
            vu = &vu * &u.values[i];
        }
    }
    let p = &uv - &vu;
    let a = p
        .div(&FieldElement::sqrt5())
        .to_integer()
        .expect("P(n)/sqrt5 is an integer");
    to_i64(&a) * c.delta
}

/// The piecewise closed form: sign * Delta(n) * b(|s1+s2-r1-r2| - 1), with
/// the sign depending on the sign of s1+s2-r1-r2.
fn binomial_route(c: &Counts) -> i64 {
    if c.dead || c.r[4] + c.s[4] > 0 {
        return 0;
    }
    let x = (c.s[1] + c.s[2]) as i64 - (c.r[1] + c.r[2]) as i64;
    if x == 0 {
        return 0;
    }
    let sign = if x > 0 {
        pow_neg_one(c.r[2] + c.r[3] + c.s[1] + c.s[3])
    } else {
        pow_neg_one(c.r[1] + c.r[3] + c.s[2] + c.s[3] + 1)
    };
    sign * c.delta * fib_b(x.unsigned_abs() as u32 - 1)
}

fn pow_neg_one(e: u32) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn to_i64(v: &BigInt) -> i64 {
    i64::try_from(v.clone()).expect("coefficient fits in i64")
}

/// b(L) = sum_{j=-L}^{L} (-1)^j C(L, ceil((L + 5j)/2)), the binomial form
/// of (lambda^{L+1} - mu^{L+1}) / sqrt 5 (a Fibonacci number).
pub fn fib_b(l: u32) -> i64 {
    let l = l as i64;
    let binom = binomial_row(l as usize);
    let mut total = 0i64;
    for j in -l..=l {
        let k = div_ceil(l + 5 * j, 2);
        if (0..=l).contains(&k) {
            let term = binom[k as usize];
            total += if j.rem_euclid(2) == 0 { term } else { -term };
        }
    }
    total
}

fn binomial_row(n: usize) -> Vec<i64> {
    let mut row = vec![1i64];
    for _ in 0..n {
        let mut next = vec![1i64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::NumberField;

    #[test]
    fn fib_b_values() {
        assert_eq!(fib_b(0), 1);
        assert_eq!(fib_b(1), 1);
        assert_eq!(fib_b(4), 5);
        // b(L) = (lambda^{L+1} - mu^{L+1}) / sqrt5, exactly
        for l in 0..=20u32 {
            let la = FieldElement::lambda().pow(l + 1);
            let mu = FieldElement::mu().pow(l + 1);
            let fib = (&la - &mu)
                .div(&FieldElement::sqrt5())
                .to_integer()
                .unwrap();
            assert_eq!(BigInt::from(fib_b(l)), fib, "b({l})");
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(a(2), 1);
        assert_eq!(a(6), 0);
        assert_eq!(a(49), -1);
        assert_eq!(a(1), 0); // q^2 E E starts at q^2
    }

    #[test]
    fn matches_completion_difference() {
        // a(n) = ([q^n]A1 - [q^n]A2) / sqrt5
        for n in 1..=400u64 {
            let a1 = super::super::completion_coefficient(Level::L47, 0, n);
            let a2 = super::super::completion_coefficient(Level::L47, 1, n);
            let diff = (&a1 - &a2).div(&FieldElement::sqrt5());
            assert_eq!(
                diff,
                FieldElement::from_int(NumberField::Sqrt5, a(n)),
                "n={n}"
            );
        }
    }
}
