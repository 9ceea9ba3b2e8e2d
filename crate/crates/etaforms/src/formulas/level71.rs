//! Fourier coefficients of q^3 E(q) E(q^71), the weight-1 eta-product of
//! level 71: the general route combines the three conjugate
//! eigen-coefficient products Delta_i in Q(2 cos(2 pi / 7)) and divides by
//! 7; for n built only from primes represented by (2, 1, 9) there is also
//! the trinomial-coefficient route G(L, M).

use crate::algnum::{FieldElement, NumberField};
use crate::ntheory::{factorize, PrimePower};

use super::{classify, periodic_fn, Level, Periodic, Verdict};

#[derive(Debug, Default)]
struct Counts {
    delta: i64,
    dead: bool,
    /// ord counts mod 7 for S2 = (2,1,9), S3 = (4,3,5), S4 = (3,1,6)
    r: [u32; 7],
    s: [u32; 7],
    t: [u32; 7],
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
        match classify(Level::L71, p).verdict {
            Verdict::Ramified(_) => {}
            Verdict::ClassPair(0) => c.delta *= 1 + e as i64,
            Verdict::ClassPair(1) => c.r[(e % 7) as usize] += 1,
            Verdict::ClassPair(2) => c.s[(e % 7) as usize] += 1,
            Verdict::ClassPair(3) => c.t[(e % 7) as usize] += 1,
            Verdict::ClassPair(_) => unreachable!(),
            Verdict::Inert => {
                if e % 2 == 1 {
                    c.dead = true;
                }
            }
            Verdict::Conductor => unreachable!("-71 is fundamental"),
        }
    }
    c
}

/// a(n) = [q^n] q^3 E(q) E(q^71).
pub fn a(n: u64) -> i64 {
    assert!(n >= 1);
    let factors: Vec<(u64, u32)> = factorize(n)
        .into_iter()
        .map(|PrimePower { prime, exponent }| (prime, exponent))
        .collect();
    a_factored(&factors)
}

/// a(n) = Delta(n)/7 times the alternating combination
/// (beta - alpha) Delta_1 + (gamma - beta) Delta_2 + (alpha - gamma) Delta_3,
/// evaluated exactly; the result is a rational integer despite the
/// cubic-field intermediates.
pub fn a_factored(factors: &[(u64, u32)]) -> i64 {
    let c = counts(factors);
    if c.dead {
        return 0;
    }
    let u = periodic_fn(Level::L71, Periodic::U);
    let v = periodic_fn(Level::L71, Periodic::V);
    let w = periodic_fn(Level::L71, Periodic::W);
    // Delta_1 = prod_{S2} W prod_{S3} U prod_{S4} V
    let mut delta1 = FieldElement::one(NumberField::Cos7);
    let mut delta2 = delta1.clone();
    let mut delta3 = delta1.clone();
    for i in 0..7 {
        for _ in 0..c.r[i] {
            delta1 = &delta1 * &w.values[i];
            delta2 = &delta2 * &u.values[i];
            delta3 = &delta3 * &v.values[i];
        }
        for _ in 0..c.s[i] {
            delta1 = &delta1 * &u.values[i];
            delta2 = &delta2 * &v.values[i];
            delta3 = &delta3 * &w.values[i];
        }
        for _ in 0..c.t[i] {
            delta1 = &delta1 * &v.values[i];
            delta2 = &delta2 * &w.values[i];
            delta3 = &delta3 * &u.values[i];
        }
    }
    // Delta_2 and Delta_3 are the sigma-images of Delta_1
    debug_assert_eq!(delta2, delta1.galois_image(1));
    debug_assert_eq!(delta3, delta1.galois_image(2));
    let (al, be, ga) = (
        FieldElement::alpha(),
        FieldElement::beta(),
        FieldElement::gamma(),
    );
    let p = &(&(&(&be - &al) * &delta1) + &(&(&ga - &be) * &delta2)) + &(&(&al - &ga) * &delta3);
    let value = p.scale_rational(&num_rational::BigRational::new(c.delta.into(), 7.into()));
    let int = value.to_integer().expect("a(n) must be a rational integer");
    i64::try_from(int).expect("a(n) fits in i64")
}

/// Trinomial coefficient T(L, M, a): the coefficient of x^a in
/// (x^2 + x + 1)^L (x + 1)^M / x^{L + ceil(M/2)}.
pub fn trinomial(l: u32, m: u32, a: i64) -> i64 {
    let shift = l as i64 + (m as i64 + 1) / 2;
    // expand (x^2+x+1)^L (x+1)^M as a plain integer polynomial
    let mut poly = vec![1i64];
    for _ in 0..l {
        poly = mul_poly(&poly, &[1, 1, 1]);
    }
    for _ in 0..m {
        poly = mul_poly(&poly, &[1, 1]);
    }
    let idx = a + shift;
    if (0..poly.len() as i64).contains(&idx) {
        poly[idx as usize]
    } else {
        0
    }
}

fn mul_poly(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// G(L, M) = sum_j [T(L, M, 2 + 7j) - T(L, M, 1 + 7j)].
pub fn g_sum(l: u32, m: u32) -> i64 {
    let range = l as i64 + m as i64;
    let mut total = 0;
    for j in -range..=range {
        total += trinomial(l, m, 2 + 7 * j) - trinomial(l, m, 1 + 7 * j);
    }
    total
}

/// a(n) for n > 1 a product of primes represented by (2, 1, 9) only:
/// delta_{r6,0} (-1)^{r1+r3+r5} G(r3 + r2, r1 + r4).
pub fn a_s2_products(factors: &[(u64, u32)]) -> i64 {
    assert!(
        !factors.is_empty(),
        "the empty product n = 1 is outside this formula"
    );
    let mut r = [0u32; 7];
    for &(p, e) in factors {
        assert_eq!(
            classify(Level::L71, p).verdict,
            Verdict::ClassPair(1),
            "{p} is not represented by (2,1,9)"
        );
        r[(e % 7) as usize] += 1;
    }
    if r[6] > 0 {
        return 0;
    }
    let sign = if (r[1] + r[3] + r[5]) % 2 == 0 { 1 } else { -1 };
    sign * g_sum(r[3] + r[2], r[1] + r[4])
}
