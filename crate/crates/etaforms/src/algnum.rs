//! Exact arithmetic in the small real number fields the eigenvalues live in:
//! Q, Q(sqrt 5), Q(sqrt 2), and the cubic field Q(alpha) with
//! alpha = 2 cos(2 pi / 7).
//!
//! Each field is fixed and enumerated rather than generic, with a power
//! basis chosen so that every constant in the coefficient tables has small
//! integer coordinates:
//!
//! - `Sqrt5` uses theta = lambda = (1 + sqrt 5)/2, a root of x^2 - x - 1,
//!   so mu = 1 - lambda and sqrt 5 = 2 lambda - 1.
//! - `Sqrt2` uses theta = sqrt 2, a root of x^2 - 2.
//! - `Cos7` uses theta = alpha, a root of F(x) = x^3 + x^2 - 2x - 1 whose
//!   other roots are beta = 2 cos(4 pi / 7) = alpha^2 - 2 and
//!   gamma = 2 cos(6 pi / 7) = -alpha^2 - alpha + 1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// One of the four fixed real number fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberField {
    Rational,
    Sqrt5,
    Sqrt2,
    Cos7,
}

impl NumberField {
    pub fn degree(self) -> usize {
        match self {
            NumberField::Rational => 1,
            NumberField::Sqrt5 | NumberField::Sqrt2 => 2,
            NumberField::Cos7 => 3,
        }
    }

    /// Minimal polynomial of the basis generator theta, ascending
    /// coefficients, monic.
    pub fn min_poly(self) -> &'static [i64] {
        match self {
            NumberField::Rational => &[0, 1],
            NumberField::Sqrt5 => &[-1, -1, 1],
            NumberField::Sqrt2 => &[-2, 0, 1],
            NumberField::Cos7 => &[-1, -2, 1, 1],
        }
    }

    /// theta^degree expressed in the power basis.
    fn reduction_row(self) -> &'static [i64] {
        match self {
            NumberField::Rational => &[0],
            NumberField::Sqrt5 => &[1, 1],    // lambda^2 = 1 + lambda
            NumberField::Sqrt2 => &[2, 0],    // theta^2 = 2
            NumberField::Cos7 => &[1, 2, -1], // alpha^3 = 1 + 2 alpha - alpha^2
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            NumberField::Rational => "",
            NumberField::Sqrt5 => "L", // lambda
            NumberField::Sqrt2 => "r2",
            NumberField::Cos7 => "a",
        }
    }
}

/// An exact element of one of the fixed fields, as coordinates over the
/// power basis 1, theta, theta^2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: NumberField,
    coords: Vec<BigRational>,
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl FieldElement {
    pub fn zero(field: NumberField) -> Self {
        FieldElement {
            field,
            coords: vec![BigRational::zero(); field.degree()],
        }
    }

    pub fn one(field: NumberField) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: NumberField, n: i64) -> Self {
        let mut e = Self::zero(field);
        e.coords[0] = big(n);
        e
    }

    pub fn from_ratio(field: NumberField, num: i64, den: i64) -> Self {
        assert!(den != 0);
        let mut e = Self::zero(field);
        e.coords[0] = BigRational::new(BigInt::from(num), BigInt::from(den));
        e
    }

    pub fn from_rational(q: BigRational) -> Self {
        FieldElement {
            field: NumberField::Rational,
            coords: vec![q],
        }
    }

    /// Element with the given integer coordinates over the power basis.
    pub fn from_coords(field: NumberField, coords: &[i64]) -> Self {
        assert_eq!(coords.len(), field.degree());
        FieldElement {
            field,
            coords: coords.iter().map(|&c| big(c)).collect(),
        }
    }

    /// lambda = (1 + sqrt 5)/2, the basis generator of Sqrt5.
    pub fn lambda() -> Self {
        Self::from_coords(NumberField::Sqrt5, &[0, 1])
    }

    /// mu = (1 - sqrt 5)/2 = 1 - lambda.
    pub fn mu() -> Self {
        Self::from_coords(NumberField::Sqrt5, &[1, -1])
    }

    /// sqrt 5 = 2 lambda - 1.
    pub fn sqrt5() -> Self {
        Self::from_coords(NumberField::Sqrt5, &[-1, 2])
    }

    pub fn sqrt2() -> Self {
        Self::from_coords(NumberField::Sqrt2, &[0, 1])
    }

    /// alpha = 2 cos(2 pi / 7).
    pub fn alpha() -> Self {
        Self::from_coords(NumberField::Cos7, &[0, 1, 0])
    }

    /// beta = 2 cos(4 pi / 7) = alpha^2 - 2.
    pub fn beta() -> Self {
        Self::from_coords(NumberField::Cos7, &[-2, 0, 1])
    }

    /// gamma = 2 cos(6 pi / 7) = -alpha^2 - alpha + 1.
    pub fn gamma() -> Self {
        Self::from_coords(NumberField::Cos7, &[1, -1, -1])
    }

    pub fn field(&self) -> NumberField {
        self.field
    }

    /// Exact coordinate with respect to the power basis. Panics if the
    /// index is out of range for the field degree.
    pub fn coordinate(&self, i: usize) -> &BigRational {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The value as an exact rational, if all higher coordinates vanish.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        let q = self.to_rational()?;
        q.is_integer().then(|| q.to_integer())
    }

    /// Embed into a larger field. Only Rational -> anything (or the
    /// identity embedding) is supported.
    pub fn promote(&self, field: NumberField) -> Self {
        if self.field == field {
            return self.clone();
        }
        assert_eq!(
            self.field,
            NumberField::Rational,
            "cannot embed {:?} into {:?}",
            self.field,
            field
        );
        let mut e = FieldElement::zero(field);
        e.coords[0] = self.coords[0].clone();
        e
    }

    fn merge_fields(a: NumberField, b: NumberField) -> NumberField {
        match (a, b) {
            (x, y) if x == y => x,
            (NumberField::Rational, y) => y,
            (x, NumberField::Rational) => x,
            (x, y) => panic!("number field mismatch: {x:?} vs {y:?}"),
        }
    }

    /// Images of the element under the real embeddings, via the Galois
    /// action on the power basis: the identity first, then the nontrivial
    /// automorphism (quadratic fields) or sigma, sigma^2 with
    /// sigma = (alpha beta gamma) for Cos7.
    pub fn conjugates(&self) -> Vec<FieldElement> {
        match self.field {
            NumberField::Rational => vec![self.clone()],
            NumberField::Sqrt5 | NumberField::Sqrt2 => vec![self.clone(), self.galois_image(1)],
            NumberField::Cos7 => {
                vec![self.clone(), self.galois_image(1), self.galois_image(2)]
            }
        }
    }

    /// k-th power of the generator of the Galois group:
    /// conjugation for quadratic fields, sigma^k for Cos7.
    pub fn galois_image(&self, k: usize) -> FieldElement {
        let mut out = self.clone();
        for _ in 0..k % self.field.degree().max(1) {
            out = out.galois_step();
        }
        out
    }

    fn galois_step(&self) -> FieldElement {
        let c = &self.coords;
        match self.field {
            NumberField::Rational => self.clone(),
            // lambda -> mu = 1 - lambda
            NumberField::Sqrt5 => FieldElement {
                field: self.field,
                coords: vec![&c[0] + &c[1], -c[1].clone()],
            },
            NumberField::Sqrt2 => FieldElement {
                field: self.field,
                coords: vec![c[0].clone(), -c[1].clone()],
            },
            // alpha -> beta, with beta = alpha^2 - 2 and
            // beta^2 = -alpha^2 - alpha + 3
            NumberField::Cos7 => FieldElement {
                field: self.field,
                coords: vec![
                    &c[0] - &(&c[1] * big(2)) + &(&c[2] * big(3)),
                    -c[2].clone(),
                    &c[1] - &c[2],
                ],
            },
        }
    }

    /// Field norm: the product of all conjugates, a rational number.
    pub fn norm(&self) -> BigRational {
        let mut prod = FieldElement::one(self.field);
        for c in self.conjugates() {
            prod = &prod * &c;
        }
        prod.to_rational().expect("norm must be rational")
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inverse(&self) -> FieldElement {
        assert!(!self.is_zero(), "division by zero field element");
        let conj = self.conjugates();
        let mut num = FieldElement::one(self.field);
        for c in &conj[1..] {
            num = &num * c;
        }
        let n = self.norm();
        num.scale_rational(&n.recip())
    }

    pub fn div(&self, rhs: &FieldElement) -> FieldElement {
        let field = Self::merge_fields(self.field, rhs.field);
        &self.promote(field) * &rhs.promote(field).inverse()
    }

    pub fn scale_rational(&self, q: &BigRational) -> FieldElement {
        FieldElement {
            field: self.field,
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> FieldElement {
        self.scale_rational(&big(n))
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        let mut acc = FieldElement::one(self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        let field = FieldElement::merge_fields(self.field, rhs.field);
        let a = self.promote(field);
        let b = rhs.promote(field);
        FieldElement {
            field,
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let field = FieldElement::merge_fields(self.field, rhs.field);
        let a = self.promote(field);
        let b = rhs.promote(field);
        let deg = field.degree();
        // Schoolbook product, then push theta^deg, theta^{deg+1} back down.
        let mut raw = vec![BigRational::zero(); 2 * deg - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        let row: Vec<BigRational> = field.reduction_row().iter().map(|&c| big(c)).collect();
        for k in (deg..2 * deg - 1).rev() {
            let carry = std::mem::replace(&mut raw[k], BigRational::zero());
            if carry.is_zero() {
                continue;
            }
            // theta^k = theta^{k - deg} * (theta^deg in the basis)
            for (i, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    raw[k - deg + i] += &carry * r;
                }
            }
        }
        raw.truncate(deg);
        FieldElement { field, coords: raw }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.field.symbol();
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag.is_one() {
                        write!(f, "{sym}")?;
                    } else {
                        write!(f, "{mag}*{sym}")?;
                    }
                }
                _ => {
                    if mag.is_one() {
                        write!(f, "{sym}^{i}")?;
                    } else {
                        write!(f, "{mag}*{sym}^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(field: NumberField, coords: &[i64]) -> FieldElement {
        FieldElement::from_coords(field, coords)
    }

    #[test]
    fn lambda_mu_relations() {
        let lambda = FieldElement::lambda();
        let mu = FieldElement::mu();
        assert_eq!(&lambda + &mu, FieldElement::one(NumberField::Sqrt5));
        assert_eq!(
            &lambda * &mu,
            FieldElement::from_int(NumberField::Sqrt5, -1)
        );
        // both satisfy x^2 - x - 1 = 0
        for x in [&lambda, &mu] {
            let v = &(&(x * x) - x) - &FieldElement::one(NumberField::Sqrt5);
            assert!(v.is_zero());
        }
        assert_eq!(&lambda - &mu, FieldElement::sqrt5());
        let two = FieldElement::from_int(NumberField::Sqrt2, 2);
        let r2 = FieldElement::sqrt2();
        assert_eq!(&r2 * &r2, two);
    }

    #[test]
    fn cos7_roots_and_sigma() {
        let f = NumberField::Cos7;
        let alpha = FieldElement::alpha();
        let beta = FieldElement::beta();
        let gamma = FieldElement::gamma();
        // symmetric functions of the roots of F(x) = x^3 + x^2 - 2x - 1
        assert_eq!(&(&alpha + &beta) + &gamma, FieldElement::from_int(f, -1));
        let e2 = &(&(&alpha * &beta) + &(&beta * &gamma)) + &(&gamma * &alpha);
        assert_eq!(e2, FieldElement::from_int(f, -2));
        assert_eq!(&(&alpha * &beta) * &gamma, FieldElement::one(f));
        // each root satisfies F
        for x in [&alpha, &beta, &gamma] {
            let v = &(&(&x.pow(3) + &x.pow(2)) - &x.scale_int(2)) - &FieldElement::one(f);
            assert!(v.is_zero(), "F({x}) != 0");
        }
        // sigma is the 3-cycle (alpha beta gamma)
        assert_eq!(alpha.galois_image(1), beta);
        assert_eq!(beta.galois_image(1), gamma);
        assert_eq!(gamma.galois_image(1), alpha);
        assert_eq!(FieldElement::one(f).galois_image(1), FieldElement::one(f));
    }

    #[test]
    fn conjugation_cases() {
        assert_eq!(FieldElement::lambda().galois_image(1), FieldElement::mu());
        // x = 3 + 2 lambda: coordinate 1 is 2, and (x - conj x)/sqrt5 = 2
        let x = fe(NumberField::Sqrt5, &[3, 2]);
        assert_eq!(x.coordinate(1), &big(2));
        let diff = &x - &x.galois_image(1);
        assert_eq!(
            diff.div(&FieldElement::sqrt5()),
            FieldElement::from_int(NumberField::Sqrt5, 2)
        );
        assert_eq!(
            FieldElement::from_int(NumberField::Rational, 7).coordinate(0),
            &big(7)
        );
        assert_eq!(FieldElement::sqrt2().coordinate(1), &big(1));
    }

    proptest! {
        #[test]
        fn galois_action_has_right_order(coords in proptest::array::uniform3(-9i64..=9), which in 0..3usize) {
            let (field, x) = match which {
                0 => (NumberField::Sqrt5, fe(NumberField::Sqrt5, &coords[..2])),
                1 => (NumberField::Sqrt2, fe(NumberField::Sqrt2, &coords[..2])),
                _ => (NumberField::Cos7, fe(NumberField::Cos7, &coords)),
            };
            prop_assert_eq!(x.galois_image(field.degree()), x.clone());
            // x - conj(x) is conjugation-antisymmetric (trace zero) and its
            // theta-coordinate doubles the theta-coordinate of x (quadratic)
            if field.degree() == 2 {
                let diff = &x - &x.galois_image(1);
                prop_assert!((&diff + &diff.galois_image(1)).is_zero());
                prop_assert_eq!(diff.coordinate(1).clone(), x.coordinate(1) * big(2));
            }
        }

        #[test]
        fn ring_laws(a in proptest::array::uniform3(-9i64..=9),
                     b in proptest::array::uniform3(-9i64..=9),
                     c in proptest::array::uniform3(-9i64..=9)) {
            let f = NumberField::Cos7;
            let (x, y, z) = (fe(f, &a), fe(f, &b), fe(f, &c));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn inverse_roundtrip(coords in proptest::array::uniform3(-9i64..=9)) {
            let x = fe(NumberField::Cos7, &coords);
            prop_assume!(!x.is_zero());
            prop_assert_eq!(&x * &x.inverse(), FieldElement::one(NumberField::Cos7));
        }
    }

    #[test]
    fn rational_promotes_in_ops() {
        let two = FieldElement::from_int(NumberField::Rational, 2);
        let r2 = FieldElement::sqrt2();
        assert_eq!(&two * &r2, fe(NumberField::Sqrt2, &[0, 2]));
        assert_eq!((&r2 * &r2).to_integer().unwrap(), BigInt::from(2));
    }

    #[test]
    fn display_rendering() {
        assert_eq!(fe(NumberField::Sqrt5, &[3, -2]).to_string(), "3 - 2*L");
        assert_eq!(FieldElement::beta().to_string(), "-2 + a^2");
        assert_eq!(FieldElement::zero(NumberField::Cos7).to_string(), "0");
    }
}
