//! Hecke operators T_p on q-series, eigenform detection, and the
//! prime-power coefficient recursion.
//!
//! For a series sum h(n) q^n attached to discriminant d,
//! T_p maps it to sum [h(pn) + (d/p) h(n/p)] q^n, with h(n/p) = 0 when
//! p does not divide n. An input of order N determines the image only to
//! order floor(N/p), and every comparison here respects that bound.

use crate::algnum::FieldElement;
use crate::ntheory::kronecker;
use crate::qseries::QSeries;
use crate::{Error, Result};

/// Apply T_p for the discriminant d. The output order is floor(N/p).
pub fn apply_tp(s: &QSeries, d: i64, p: u64) -> Result<QSeries> {
    let n = s.order();
    if n < p as usize {
        return Err(Error::OrderTooSmall { order: n, p });
    }
    let chi = kronecker(d, p);
    let out_order = n / p as usize;
    let mut out = QSeries::zero(s.field(), out_order);
    for k in 0..=out_order {
        let mut c = s.coeff(k * p as usize).clone();
        if chi != 0 && k % p as usize == 0 {
            let lower = s.coeff(k / p as usize);
            c = match chi {
                1 => &c + lower,
                _ => &c - lower,
            };
        }
        out.set_coeff(k, c);
    }
    Ok(out)
}

/// Outcome of an eigenform test at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenOutcome {
    /// T_p(s) = lambda * s on every comparable index.
    Eigenform(FieldElement),
    /// First index where T_p(s) fails to be proportional to s, with the
    /// image coefficient and the predicted one.
    NotEigenform {
        index: usize,
        image: FieldElement,
        predicted: FieldElement,
    },
}

impl EigenOutcome {
    pub fn eigenvalue(&self) -> Option<&FieldElement> {
        match self {
            EigenOutcome::Eigenform(v) => Some(v),
            EigenOutcome::NotEigenform { .. } => None,
        }
    }
}

/// Solve T_p(s) = lambda s from the first index where s is nonzero, then
/// verify the proportionality on every index available at the output
/// order. Errors if s is zero to the comparison order.
pub fn eigen_check_detailed(s: &QSeries, d: i64, p: u64) -> Result<EigenOutcome> {
    let image = apply_tp(s, d, p)?;
    let order = image.order();
    let pivot = match s.truncated(order).first_nonzero() {
        Some(i) => i,
        None => return Err(Error::ZeroSeries),
    };
    let lambda = image.coeff(pivot).div(s.coeff(pivot));
    for n in 0..=order {
        let predicted = &lambda * &s.coeff(n).promote(lambda.field());
        if image.coeff(n).promote(lambda.field()) != predicted {
            return Ok(EigenOutcome::NotEigenform {
                index: n,
                image: image.coeff(n).clone(),
                predicted,
            });
        }
    }
    Ok(EigenOutcome::Eigenform(lambda))
}

/// The eigenvalue when s is an eigenform of T_p, None otherwise.
pub fn eigen_check(s: &QSeries, d: i64, p: u64) -> Result<Option<FieldElement>> {
    Ok(eigen_check_detailed(s, d, p)?.eigenvalue().cloned())
}

/// h(p^k) from h(p) and chi = (d/p) by the recursion
/// h(p^{k+1}) = h(p) h(p^k) - chi h(p^{k-1}), normalized to h(1) = 1.
pub fn coeff_recursion(h_p: &FieldElement, chi: i32, k: u32) -> FieldElement {
    let field = h_p.field();
    let mut prev = FieldElement::one(field);
    if k == 0 {
        return prev;
    }
    let mut cur = h_p.clone();
    let chi = FieldElement::from_int(field, chi as i64);
    for _ in 1..k {
        let next = &(h_p * &cur) - &(&chi * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::NumberField;
    use crate::bqf::Form;
    use crate::qseries::theta_form;
    use proptest::prelude::*;

    #[test]
    fn tp_of_zero_is_zero() {
        let z = QSeries::zero(NumberField::Rational, 100);
        assert!(apply_tp(&z, -47, 3).unwrap().is_zero());
    }

    #[test]
    fn tp_on_theta_of_principal_47() {
        // 2 is represented by (2,1,6): T_2 B(1,1,12) = 2 B(2,1,6)
        let b = theta_form(&Form::new(1, 1, 12), 400);
        let image = apply_tp(&b, -47, 2).unwrap();
        let expected = theta_form(&Form::new(2, 1, 6), 200).scaled_rational(2, 1);
        assert_eq!(image.first_difference(&expected), None);
    }

    #[test]
    fn tp_ramified_648() {
        // T_2 B(1,0,162) = B(2,0,81) (2 is ramified for -648)
        let b = theta_form(&Form::new(1, 0, 162), 400);
        let image = apply_tp(&b, -648, 2).unwrap();
        let expected = theta_form(&Form::new(2, 0, 81), 200);
        assert_eq!(image.first_difference(&expected), None);
    }

    #[test]
    fn tp_conductor_135() {
        // T_3 B(1,1,34) = B(1,1,4, q^3)
        let b = theta_form(&Form::new(1, 1, 34), 600);
        let image = apply_tp(&b, -135, 3).unwrap();
        let expected = theta_form(&Form::new(1, 1, 4), 66).dilate(3, 200);
        assert_eq!(image.first_difference(&expected), None);
    }

    #[test]
    fn order_too_small_rejected() {
        let s = QSeries::one(NumberField::Rational, 4);
        assert!(matches!(
            apply_tp(&s, -47, 5),
            Err(Error::OrderTooSmall { .. })
        ));
        assert!(apply_tp(&s, -47, 4).is_ok());
    }

    proptest! {
        #[test]
        fn tp_is_linear(a in proptest::collection::vec(-5i64..=5, 30),
                        b in proptest::collection::vec(-5i64..=5, 30),
                        p_idx in 0usize..3) {
            let p = [2u64, 3, 5][p_idx];
            let x = QSeries::from_integer_coeffs(&a);
            let y = QSeries::from_integer_coeffs(&b);
            let lhs = apply_tp(&(&x + &y), -47, p).unwrap();
            let rhs = &apply_tp(&x, -47, p).unwrap() + &apply_tp(&y, -47, p).unwrap();
            prop_assert_eq!(lhs.first_difference(&rhs), None);
        }
    }

    #[test]
    fn eigen_check_solves_and_verifies() {
        // B(1,1,12) is not an eigenform of T_2 for d = -47
        let b = theta_form(&Form::new(1, 1, 12), 400);
        assert_eq!(eigen_check(&b, -47, 2).unwrap(), None);
        // the zero series is rejected
        let z = QSeries::zero(NumberField::Rational, 100);
        assert!(matches!(eigen_check(&z, -47, 2), Err(Error::ZeroSeries)));
    }

    #[test]
    fn recursion_cases() {
        let q = NumberField::Rational;
        let two = FieldElement::from_int(q, 2);
        assert_eq!(coeff_recursion(&two, 1, 3), FieldElement::from_int(q, 4));
        let zero = FieldElement::zero(q);
        assert_eq!(coeff_recursion(&zero, -1, 4), FieldElement::one(q));
        assert_eq!(coeff_recursion(&zero, -1, 3), FieldElement::zero(q));
        // h(p) = -mu, chi = 1: h(p^2) = mu^2 - 1 = mu
        let neg_mu = -&FieldElement::mu();
        assert_eq!(coeff_recursion(&neg_mu, 1, 2), FieldElement::mu());
    }

    #[test]
    fn recursion_reproduces_periodic_patterns() {
        let q = NumberField::Rational;
        // eigenvalue -1, chi 1: period 6 pattern 1, -1, 0, 1, -1, 0
        let neg_one = FieldElement::from_int(q, -1);
        let expected = [1i64, -1, 0, 1, -1, 0];
        for k in 0..24u32 {
            assert_eq!(
                coeff_recursion(&neg_one, 1, k),
                FieldElement::from_int(q, expected[k as usize % 6])
            );
        }
        // eigenvalue sqrt2, chi 1: period 8 in Q(sqrt 2)
        let r2 = FieldElement::sqrt2();
        let table: [FieldElement; 8] = [
            FieldElement::one(NumberField::Sqrt2),
            r2.clone(),
            FieldElement::one(NumberField::Sqrt2),
            FieldElement::zero(NumberField::Sqrt2),
            FieldElement::from_int(NumberField::Sqrt2, -1),
            -&r2,
            FieldElement::from_int(NumberField::Sqrt2, -1),
            FieldElement::zero(NumberField::Sqrt2),
        ];
        for k in 0..32u32 {
            assert_eq!(coeff_recursion(&r2, 1, k), table[k as usize % 8]);
        }
    }
}
