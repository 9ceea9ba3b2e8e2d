//! Exact truncated q-series and the standard series builders: the Euler
//! product E(q) = (q; q)_inf, the Ramanujan theta function f(a, b) with
//! its specializations phi and psi, eta-quotients, and the theta series of
//! positive definite binary quadratic forms.
//!
//! A series carries its truncation order N and exact coefficients for
//! q^0 .. q^N inclusive. Binary operations truncate to the smaller order,
//! so a coefficient index is valid exactly when it is within the recorded
//! order; nothing is ever read past it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::algnum::{FieldElement, NumberField};
use crate::bqf::Form;
use crate::{Error, Result};

/// A truncated formal power series with exact coefficients in one of the
/// fixed number fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    field: NumberField,
    coeffs: Vec<FieldElement>,
}

impl QSeries {
    pub fn zero(field: NumberField, order: usize) -> Self {
        QSeries {
            field,
            coeffs: vec![FieldElement::zero(field); order + 1],
        }
    }

    pub fn one(field: NumberField, order: usize) -> Self {
        Self::monomial(field, FieldElement::one(field), 0, order)
    }

    /// c * q^exponent truncated at the given order.
    pub fn monomial(field: NumberField, c: FieldElement, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(field, order);
        if exponent <= order {
            s.coeffs[exponent] = c.promote(field);
        }
        s
    }

    pub fn from_integer_coeffs(coeffs: &[i64]) -> Self {
        QSeries {
            field: NumberField::Rational,
            coeffs: coeffs
                .iter()
                .map(|&c| FieldElement::from_int(NumberField::Rational, c))
                .collect(),
        }
    }

    pub fn field(&self) -> NumberField {
        self.field
    }

    /// Truncation order N: coefficients are exact for q^0 .. q^N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &FieldElement {
        assert!(
            n <= self.order(),
            "coefficient index {n} beyond truncation order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, v: FieldElement) {
        assert!(n <= self.order());
        self.coeffs[n] = v.promote(self.field);
    }

    fn add_to_coeff(&mut self, n: usize, v: &FieldElement) {
        self.coeffs[n] = &self.coeffs[n] + v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Reinterpret in a larger field (or the same one).
    pub fn promote(&self, field: NumberField) -> QSeries {
        if field == self.field {
            return self.clone();
        }
        QSeries {
            field,
            coeffs: self.coeffs.iter().map(|c| c.promote(field)).collect(),
        }
    }

    /// Truncate to a smaller order.
    pub fn truncated(&self, order: usize) -> QSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        QSeries {
            field: self.field,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scaled(&self, k: &FieldElement) -> QSeries {
        let field = if k.field() == NumberField::Rational {
            self.field
        } else {
            k.field()
        };
        let s = self.promote(field);
        QSeries {
            field,
            coeffs: s.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn scaled_rational(&self, num: i64, den: i64) -> QSeries {
        self.scaled(&FieldElement::from_ratio(NumberField::Rational, num, den))
    }

    /// The substitution q -> -q: negates the odd coefficients.
    pub fn substitute_neg_q(&self) -> QSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
            .collect();
        QSeries {
            field: self.field,
            coeffs,
        }
    }

    /// The substitution q -> q^k. The result is exact to order
    /// k * (N + 1) - 1; `order` may not exceed that.
    pub fn dilate(&self, k: usize, order: usize) -> QSeries {
        assert!(k >= 1);
        assert!(
            order < k * (self.coeffs.len()),
            "dilation by {k} of an order-{} series is only exact to order {}",
            self.order(),
            k * self.coeffs.len() - 1
        );
        let mut out = QSeries::zero(self.field, order);
        for n in (0..=order).step_by(k) {
            out.coeffs[n] = self.coeffs[n / k].clone();
        }
        out
    }

    /// Index of the first coefficient where the two series differ, compared
    /// up to the smaller truncation order.
    pub fn first_difference(&self, other: &QSeries) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&n| {
            let field = merge(self.field, other.field);
            self.coeffs[n].promote(field) != other.coeffs[n].promote(field)
        })
    }

    /// Multiplicative inverse of a series with invertible constant term,
    /// by the standard recurrence.
    pub fn inverted(&self) -> QSeries {
        assert!(
            !self.coeffs[0].is_zero(),
            "series with zero constant term has no inverse"
        );
        let nonzero: Vec<usize> = self.support().into_iter().filter(|&n| n > 0).collect();
        let c0_inv = self.coeffs[0].inverse();
        let mut out = QSeries::zero(self.field, self.order());
        out.coeffs[0] = c0_inv.clone();
        for n in 1..=self.order() {
            let mut acc = FieldElement::zero(self.field);
            for &k in nonzero.iter().take_while(|&&k| k <= n) {
                acc = &acc + &(&self.coeffs[k] * &out.coeffs[n - k]);
            }
            out.coeffs[n] = &(-&acc) * &c0_inv;
        }
        out
    }

    /// Quotient self / den, requiring an invertible constant term in den.
    /// Costs O(order * support(den)).
    pub fn divided_by(&self, den: &QSeries) -> QSeries {
        assert!(
            !den.coeffs[0].is_zero(),
            "division by series with zero constant term"
        );
        let field = merge(self.field, den.field);
        let num = self.promote(field);
        let den = den.promote(field);
        let order = num.order().min(den.order());
        let nonzero: Vec<usize> = den
            .support()
            .into_iter()
            .filter(|&n| n > 0 && n <= order)
            .collect();
        let c0_inv = den.coeffs[0].inverse();
        let mut out = QSeries::zero(field, order);
        for n in 0..=order {
            let mut acc = num.coeffs[n].clone();
            for &k in nonzero.iter().take_while(|&&k| k <= n) {
                acc = &acc - &(&den.coeffs[k] * &out.coeffs[n - k]);
            }
            out.coeffs[n] = &acc * &c0_inv;
        }
        out
    }

    /// Indices of nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(n, c)| (!c.is_zero()).then_some(n))
            .collect()
    }

    /// True when every coefficient is a rational integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_zero() || c.to_integer().is_some())
    }
}

fn merge(a: NumberField, b: NumberField) -> NumberField {
    match (a, b) {
        (x, y) if x == y => x,
        (NumberField::Rational, y) => y,
        (x, NumberField::Rational) => x,
        (x, y) => panic!("number field mismatch: {x:?} vs {y:?}"),
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let field = merge(self.field, rhs.field);
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n].promote(field) + &rhs.coeffs[n].promote(field))
            .collect();
        QSeries { field, coeffs }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self + &(-rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let field = merge(self.field, rhs.field);
        let order = self.order().min(rhs.order());
        // Drive the convolution from the sparser operand.
        let (outer, inner) = if self.support().len() <= rhs.support().len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = QSeries::zero(field, order);
        for k in outer.support() {
            if k > order {
                break;
            }
            let a = outer.coeffs[k].promote(field);
            for n in 0..=order - k {
                let b = &inner.coeffs[n];
                if !b.is_zero() {
                    out.add_to_coeff(k + n, &(&a * &b.promote(field)));
                }
            }
        }
        out
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.support();
        if support.is_empty() {
            return write!(f, "0 + O(q^{})", self.order() + 1);
        }
        for (i, n) in support.iter().enumerate() {
            let c = &self.coeffs[*n];
            if i > 0 {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{n}")?,
            }
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// Prefactor exponent j and factors (s_i, r_i) describing
/// q^j * prod_i E(q^{s_i})^{r_i}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotientSpec {
    pub prefactor: usize,
    /// (scale, power) pairs; scales distinct, powers nonzero.
    pub factors: Vec<(usize, i64)>,
}

impl EtaQuotientSpec {
    pub fn new(prefactor: usize, factors: &[(usize, i64)]) -> Self {
        let mut seen = std::collections::BTreeSet::new();
        for &(s, r) in factors {
            assert!(s >= 1, "scales must be positive");
            assert!(r != 0, "powers must be nonzero");
            assert!(seen.insert(s), "duplicate scale {s}");
        }
        EtaQuotientSpec {
            prefactor,
            factors: factors.to_vec(),
        }
    }

    /// Collect possibly-repeated scales, dropping cancelled factors.
    pub fn from_merged(prefactor: usize, factors: &[(usize, i64)]) -> Self {
        let mut map: std::collections::BTreeMap<usize, i64> = std::collections::BTreeMap::new();
        for &(s, r) in factors {
            *map.entry(s).or_insert(0) += r;
        }
        let merged: Vec<(usize, i64)> = map.into_iter().filter(|&(_, r)| r != 0).collect();
        Self::new(prefactor, &merged)
    }

    /// Weight sum(r_i) / 2 as a rational.
    pub fn weight(&self) -> BigRational {
        BigRational::new(
            self.factors.iter().map(|&(_, r)| r).sum::<i64>().into(),
            2.into(),
        )
    }

    /// Whether j = sum(r_i s_i) / 24, i.e. the series is q^(1/24)-graded as
    /// an eta-quotient proper.
    pub fn is_proper(&self) -> bool {
        let sum: i64 = self.factors.iter().map(|&(s, r)| s as i64 * r).sum();
        sum % 24 == 0 && sum / 24 == self.prefactor as i64
    }

    /// The level: the smallest multiple N of lcm(s_i) with
    /// sum(r_i N / s_i) = 0 mod 24.
    pub fn level(&self) -> u64 {
        let lcm = self
            .factors
            .iter()
            .map(|&(s, _)| s as u64)
            .fold(1, num_integer::lcm);
        let mut n = lcm;
        loop {
            let sum: i64 = self
                .factors
                .iter()
                .map(|&(s, r)| r * (n / s as u64) as i64)
                .sum();
            if sum.rem_euclid(24) == 0 {
                return n;
            }
            n += lcm;
        }
    }
}

/// E(q^m) = prod_{k >= 1} (1 - q^{m k}) to the given order, generated
/// sparsely from the pentagonal number theorem.
pub fn euler_e(scale: usize, order: usize) -> QSeries {
    assert!(scale >= 1);
    let mut s = QSeries::zero(NumberField::Rational, order);
    let mut n = 0i64;
    loop {
        let mut hit = false;
        for k in [n, -n] {
            let e = scale as i64 * k * (3 * k - 1) / 2;
            if (0..=order as i64).contains(&e) {
                hit = true;
                let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
                s.add_to_coeff(
                    e as usize,
                    &FieldElement::from_int(NumberField::Rational, sign),
                );
            }
            if k == 0 {
                break;
            }
        }
        if !hit && n > 0 {
            break;
        }
        n += 1;
    }
    s
}

/// E(-q^m): the pentagonal series with q -> -q applied at scale m.
pub fn euler_e_neg(scale: usize, order: usize) -> QSeries {
    sign_twist(&euler_e(scale, order), scale)
}

/// phi(q^m) = sum q^{m n^2}.
pub fn phi(scale: usize, order: usize) -> QSeries {
    theta_f(scale as i64, scale as i64, order).expect("phi arguments are valid")
}

/// phi(-q^m) = sum (-1)^n q^{m n^2}.
pub fn phi_neg(scale: usize, order: usize) -> QSeries {
    sign_twist(&phi(scale, order), scale)
}

/// psi(q^m) = sum_{n >= 0} q^{m n (n + 1) / 2} = f(q^m, q^{3m}).
pub fn psi(scale: usize, order: usize) -> QSeries {
    theta_f(scale as i64, 3 * scale as i64, order).expect("psi arguments are valid")
}

/// psi(-q^m).
pub fn psi_neg(scale: usize, order: usize) -> QSeries {
    sign_twist(&psi(scale, order), scale)
}

/// Substitute q^scale -> -q^scale in a series supported on multiples of
/// scale: negates coefficients at odd multiples.
fn sign_twist(s: &QSeries, scale: usize) -> QSeries {
    let mut out = s.clone();
    for n in s.support() {
        assert!(n % scale == 0, "support not a multiple of {scale}");
        if (n / scale) % 2 == 1 {
            out.set_coeff(n, -s.coeff(n));
        }
    }
    out
}

/// Shift parameters for the Ramanujan theta function: rewriting
/// f(q^u, q^v) as q^e * f(q^u', q^v') by n applications of the index shift.
pub fn theta_shift(u: i64, v: i64, n: i64) -> (i64, i64, i64) {
    let e = u * n * (n + 1) / 2 + v * n * (n - 1) / 2;
    (e, u + (u + v) * n, v - (u + v) * n)
}

/// The Ramanujan theta function f(q^u, q^v) = sum_n q^{u n(n+1)/2 + v n(n-1)/2}
/// truncated at the given order. Requires u + v > 0.
///
/// If min(u, v) < 0, the arguments are first normalized by the index shift
/// to make both exponents non-negative; the call is rejected if the
/// resulting prefactor power is negative (the function then genuinely has
/// negative q-powers and is not a power series).
pub fn theta_f(u: i64, v: i64, order: usize) -> Result<QSeries> {
    if u + v <= 0 {
        return Err(Error::ThetaArguments { u, v });
    }
    if u.min(v) < 0 {
        // choose the unique shift giving non-negative exponents
        let n = if u < 0 {
            (-u).div_euclid(u + v) + i64::from((-u) % (u + v) != 0)
        } else {
            -(-v).div_euclid(u + v) - i64::from((-v) % (u + v) != 0)
        };
        let (e, nu, nv) = theta_shift(u, v, n);
        debug_assert!(nu >= 0 && nv >= 0);
        if e < 0 {
            return Err(Error::NegativeQPower { u, v, power: e });
        }
        let inner = theta_f(nu, nv, order)?;
        return Ok(&QSeries::monomial(
            NumberField::Rational,
            FieldElement::one(NumberField::Rational),
            e as usize,
            order,
        ) * &inner);
    }
    let mut s = QSeries::zero(NumberField::Rational, order);
    let one = FieldElement::one(NumberField::Rational);
    let mut n = 0i64;
    loop {
        let mut hit = false;
        for k in [n, -n] {
            let e = u * k * (k + 1) / 2 + v * k * (k - 1) / 2;
            if (0..=order as i64).contains(&e) {
                hit = true;
                s.add_to_coeff(e as usize, &one);
            }
            if k == 0 {
                break;
            }
        }
        if !hit && n > 0 {
            break;
        }
        n += 1;
    }
    Ok(s)
}

/// The theta series of a positive definite form: sum over the lattice of
/// q^{f(x, y)}, i.e. representation counts as coefficients.
pub fn theta_form(f: &Form, order: usize) -> QSeries {
    assert!(f.is_positive_definite());
    let d = f.discriminant();
    let n = order as i64;
    let mut s = QSeries::zero(NumberField::Rational, order);
    let one = FieldElement::one(NumberField::Rational);
    let ymax = isqrt(4 * f.a * n / -d);
    for y in -ymax..=ymax {
        let disc = 4 * f.a * n + d * y * y;
        if disc < 0 {
            continue;
        }
        let sq = isqrt(disc);
        let lo = -(f.b * y + sq).div_euclid(2 * f.a);
        let hi = (-f.b * y + sq).div_euclid(2 * f.a);
        for x in lo..=hi {
            let v = f.eval(x, y);
            if (0..=n).contains(&v) {
                s.add_to_coeff(v as usize, &one);
            }
        }
    }
    s
}

fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// q-expansion of q^j prod E(q^{s_i})^{r_i}. Positive powers multiply in
/// first; negative powers divide at the end, which keeps intermediate
/// coefficients small. All coefficients come out integral (checked).
pub fn eta_quotient(spec: &EtaQuotientSpec, order: usize) -> QSeries {
    let field = NumberField::Rational;
    let mut acc = QSeries::monomial(field, FieldElement::one(field), spec.prefactor, order);
    if spec.prefactor > order {
        return acc;
    }
    for &(s, r) in &spec.factors {
        if r > 0 {
            let e = euler_e(s, order);
            for _ in 0..r {
                acc = &acc * &e;
            }
        }
    }
    for &(s, r) in &spec.factors {
        if r < 0 {
            let e = euler_e(s, order);
            for _ in 0..-r {
                acc = acc.divided_by(&e);
            }
        }
    }
    debug_assert!(
        acc.has_integer_coeffs(),
        "eta-quotient with non-integral coefficients"
    );
    acc
}

/// prod_{k >= 0} (1 + sign * q^{start + k * step}) truncated at the order:
/// the q-Pochhammer-style products appearing in the triple product identity.
pub fn finite_product(start: usize, step: usize, sign: i64, order: usize) -> QSeries {
    assert!(step >= 1);
    let field = NumberField::Rational;
    let mut acc = QSeries::one(field, order);
    let mut e = start;
    while e <= order {
        let mut factor = QSeries::one(field, order);
        if e > 0 {
            factor.set_coeff(e, FieldElement::from_int(field, sign));
        } else {
            factor.set_coeff(0, FieldElement::from_int(field, 1 + sign));
        }
        acc = &acc * &factor;
        e += step;
    }
    acc
}

/// Jacobi triple product right-hand side for f(q^u, q^v):
/// (-q^u; q^{u+v}) (-q^v; q^{u+v}) (q^{u+v}; q^{u+v}) as finite products.
pub fn triple_product(u: usize, v: usize, order: usize) -> QSeries {
    let m = u + v;
    let p1 = finite_product(u, m, 1, order);
    let p2 = finite_product(v, m, 1, order);
    let p3 = finite_product(m, m, -1, order);
    &(&p1 * &p2) * &p3
}

/// The named builder identities, each as (label, lhs, rhs) at the given
/// truncation order. All pairs must agree coefficientwise.
pub fn builder_identities(order: usize) -> Vec<(String, QSeries, QSeries)> {
    let n = order;
    let q = |e: usize| {
        QSeries::monomial(
            NumberField::Rational,
            FieldElement::one(NumberField::Rational),
            e,
            n,
        )
    };
    let e = |s: usize| euler_e(s, n);
    let f = |u: i64, v: i64| theta_f(u, v, n).unwrap();
    let mut out = Vec::new();
    // triple product instances
    for (u, v) in [(1usize, 1usize), (1, 3), (1, 2), (1, 5), (2, 3), (3, 4)] {
        out.push((
            format!("jtp f(q^{u},q^{v})"),
            f(u as i64, v as i64),
            triple_product(u, v, n),
        ));
    }
    // f(q, q^2) = E^2(q^3) E(q^2) / (E(q^6) E(q))
    out.push((
        "f12".into(),
        f(1, 2),
        eta_quotient(
            &EtaQuotientSpec::new(0, &[(3, 2), (2, 1), (6, -1), (1, -1)]),
            n,
        ),
    ));
    // f(q, q^5) = E(q^12) E^2(q^2) E(q^3) / (E(q^6) E(q^4) E(q))
    out.push((
        "f15".into(),
        f(1, 5),
        eta_quotient(
            &EtaQuotientSpec::new(0, &[(12, 1), (2, 2), (3, 1), (6, -1), (4, -1), (1, -1)]),
            n,
        ),
    ));
    // E(q) = f(q^5, q^7) - q f(q, q^11)
    out.push(("pentcor".into(), e(1), &f(5, 7) - &(&q(1) * &f(1, 11))));
    // phi(q) = phi(q^9) + 2q f(q^3, q^15)
    out.push((
        "mod31".into(),
        phi(1, n),
        &phi(9, n) + &(&q(1) * &f(3, 15)).scaled_rational(2, 1),
    ));
    // phi(q) = phi(q^4) + 2q psi(q^8)
    out.push((
        "phieven".into(),
        phi(1, n),
        &phi(4, n) + &(&q(1) * &psi(8, n)).scaled_rational(2, 1),
    ));
    // psi(-q) = f(q^6, q^10) - q f(q^2, q^14)
    out.push((
        "psipsiaux".into(),
        psi(1, n).substitute_neg_q(),
        &f(6, 10) - &(&q(1) * &f(2, 14)),
    ));
    // psi(q) = f(q^3, q^6) + q psi(q^9)
    out.push(("mod32".into(), psi(1, n), &f(3, 6) + &(&q(1) * &psi(9, n))));
    // E(-q) = E^3(q^2) / (E(q^4) E(q))
    out.push((
        "e-neg".into(),
        e(1).substitute_neg_q(),
        eta_quotient(&EtaQuotientSpec::new(0, &[(2, 3), (4, -1), (1, -1)]), n),
    ));
    // phi(-q) = E^2(q) / E(q^2)
    out.push((
        "phi-neg".into(),
        phi(1, n).substitute_neg_q(),
        eta_quotient(&EtaQuotientSpec::new(0, &[(1, 2), (2, -1)]), n),
    ));
    // psi(-q) = E(q) E(q^4) / E(q^2)
    out.push((
        "psi-neg".into(),
        psi(1, n).substitute_neg_q(),
        eta_quotient(&EtaQuotientSpec::new(0, &[(1, 1), (4, 1), (2, -1)]), n),
    ));
    out
}
