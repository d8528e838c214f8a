//! Rational functions in canonical form: fully reduced, denominator constant
//! term 1, integer coefficients.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{term_count, IntPoly};
use super::series::{expand_rational, IntSeries};
use super::SeriesError;

/// A reduced fraction of integer polynomials. Invariants: `gcd(num, den)` is
/// a unit and the denominator has constant term exactly 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    /// Truncated expansion; always exact because the denominator constant
    /// term is 1.
    pub fn expand(&self, order: usize) -> IntSeries {
        expand_rational(&self.num, &self.den, order)
            .expect("canonical denominator has unit constant term")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &IntPoly| {
            if term_count(p) > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}

/// Reduces `num / den` to canonical form: divide out the polynomial GCD and
/// the shared integer content, then fix signs so the denominator constant
/// term is positive. Fails if the denominator is zero, has zero constant
/// term, or the reduced constant term is not 1 (such fractions have no
/// canonical integer representation).
pub fn normalize_rational(num: &IntPoly, den: &IntPoly) -> Result<RationalFn, SeriesError> {
    if den.is_zero() {
        return Err(SeriesError::ZeroDenominator);
    }
    if den.constant_term().is_zero() {
        return Err(SeriesError::ZeroConstantTerm);
    }
    if num.is_zero() {
        return Ok(RationalFn::zero());
    }
    let g = num.gcd(den);
    let mut num = num.div_exact(&g).expect("gcd divides numerator");
    let mut den = den.div_exact(&g).expect("gcd divides denominator");
    let content = num.content().gcd(&den.content());
    if !content.is_one() {
        num = num
            .div_exact(&IntPoly::constant(content.clone()))
            .expect("content divides");
        den = den
            .div_exact(&IntPoly::constant(content))
            .expect("content divides");
    }
    if den.constant_term().is_negative() {
        num = num.neg();
        den = den.neg();
    }
    let d0 = den.constant_term();
    if !d0.is_one() {
        return Err(SeriesError::NotCanonicalizable { constant: d0 });
    }
    Ok(RationalFn { num, den })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn common_integer_factor() {
        let r = normalize_rational(&p(&[2, 2]), &p(&[2, -4])).unwrap();
        assert_eq!(r.numerator(), &p(&[1, 1]));
        assert_eq!(r.denominator(), &p(&[1, -2]));
    }

    #[test]
    fn cancels_to_polynomial() {
        let r = normalize_rational(&p(&[1, 0, -1]), &p(&[1, -1])).unwrap();
        assert_eq!(r.numerator(), &p(&[1, 1]));
        assert_eq!(r.denominator(), &IntPoly::one());
        assert_eq!(r.to_string(), "(1 + t) / 1");
    }

    #[test]
    fn cancels_shared_polynomial_factor() {
        // ((1+t)(1-t-t^2)) / (1-t-t^2)^2 reduces to (1+t)/(1-t-t^2); the gcd
        // here was cross-checked with the Euclidean algorithm over the
        // rationals by hand.
        let fib = p(&[1, -1, -1]);
        let num = p(&[1, 1]).mul(&fib);
        let den = fib.mul(&fib);
        let r = normalize_rational(&num, &den).unwrap();
        assert_eq!(r.numerator(), &p(&[1, 1]));
        assert_eq!(r.denominator(), &fib);
        assert_eq!(r.to_string(), "(1 + t) / (1 - t - t^2)");
    }

    #[test]
    fn zero_numerator() {
        let r = normalize_rational(&IntPoly::zero(), &p(&[5, 1])).unwrap();
        assert_eq!(r, RationalFn::zero());
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(matches!(
            normalize_rational(&p(&[1]), &IntPoly::zero()),
            Err(SeriesError::ZeroDenominator)
        ));
        assert!(matches!(
            normalize_rational(&p(&[1]), &p(&[0, 1])),
            Err(SeriesError::ZeroConstantTerm)
        ));
    }

    #[test]
    fn rejects_non_unit_reduced_constant() {
        assert!(matches!(
            normalize_rational(&p(&[1]), &p(&[3, 1])),
            Err(SeriesError::NotCanonicalizable { .. })
        ));
    }

    #[test]
    fn negative_constant_flips_sign() {
        let r = normalize_rational(&p(&[1, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(r.numerator(), &p(&[-1, -1]));
        assert_eq!(r.denominator(), &p(&[1, -1]));
    }

    #[test]
    fn expansion_matches_long_division() {
        let r = normalize_rational(&p(&[1, 1]), &p(&[1, -1, -1])).unwrap();
        assert_eq!(r.expand(5), IntSeries::from_i64s(&[1, 2, 3, 5, 8, 13]));
    }
}
