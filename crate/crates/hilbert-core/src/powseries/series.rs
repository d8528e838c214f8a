//! Truncated power series with exact integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use super::SeriesError;

/// Power series truncated at an inclusive order `N`: exactly `N + 1`
/// coefficients, indexed by degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    /// Builds a series from its coefficients. The vector length fixes the
    /// truncation order; it must be nonempty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least degree 0");
        IntSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        IntSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Inclusive truncation order.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, degree: usize) -> &BigInt {
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff_mut(&mut self, degree: usize) -> &mut BigInt {
        &mut self.coeffs[degree]
    }

    pub fn is_all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    fn check_order(&self, rhs: &IntSeries) -> Result<(), SeriesError> {
        if self.order() != rhs.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(())
    }

    /// Coefficient-wise sum; orders must match.
    pub fn add(&self, rhs: &IntSeries) -> Result<IntSeries, SeriesError> {
        self.check_order(rhs)?;
        Ok(IntSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &IntSeries) -> Result<IntSeries, SeriesError> {
        self.check_order(rhs)?;
        Ok(IntSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order; orders must match.
    pub fn mul(&self, rhs: &IntSeries) -> Result<IntSeries, SeriesError> {
        self.check_order(rhs)?;
        let order = self.order();
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(IntSeries { coeffs })
    }

    /// Multiplies by `t^k`, raising the order by `k`.
    pub fn shifted(&self, k: usize) -> IntSeries {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntSeries { coeffs }
    }

    /// Explicitly lowers the order to `new_order`.
    pub fn truncated(&self, new_order: usize) -> IntSeries {
        assert!(new_order <= self.order(), "truncation cannot extend a series");
        IntSeries {
            coeffs: self.coeffs[..=new_order].to_vec(),
        }
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coeffs {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// First `order + 1` coefficients of `num / den` by power-series long
/// division. The denominator constant term must be a unit (`1` or `-1`) so
/// all quotient coefficients are exact integers.
pub fn expand_rational(
    num: &IntPoly,
    den: &IntPoly,
    order: usize,
) -> Result<IntSeries, SeriesError> {
    let d0 = den.constant_term();
    if !d0.is_one() && d0 != BigInt::from(-1) {
        return Err(SeriesError::NonUnitConstantTerm { constant: d0 });
    }
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for n in 0..=order {
        let mut acc = num.coeff(n);
        for k in 1..=n.min(den.degree().unwrap_or(0)) {
            let dk = den.coeff(k);
            if !dk.is_zero() {
                acc -= dk * &coeffs[n - k];
            }
        }
        coeffs[n] = if d0.is_one() { acc } else { -acc };
    }
    Ok(IntSeries::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powseries::generate::{self, SeriesSpec};

    fn s(coeffs: &[i64]) -> IntSeries {
        IntSeries::from_i64s(coeffs)
    }

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn add_disjoint_supports() {
        assert_eq!(s(&[1, 0, 0]).add(&s(&[0, 1, 0])).unwrap(), s(&[1, 1, 0]));
    }

    #[test]
    fn add_identity() {
        assert_eq!(s(&[1, 2, 4]).add(&s(&[0, 0, 0])).unwrap(), s(&[1, 2, 4]));
    }

    #[test]
    fn add_geometric_and_derivative_like() {
        // geometric 1/(1-2t) plus t/(1-2t)^2, checked against the term-by-term
        // convolution done by hand: [1,2,4] + [0,1,4] = [1,3,8].
        let geo = expand_rational(&IntPoly::one(), &p(&[1, -2]), 2).unwrap();
        assert_eq!(geo, s(&[1, 2, 4]));
        let deriv = expand_rational(&p(&[0, 1]), &p(&[1, -2]).pow(2), 2).unwrap();
        assert_eq!(deriv, s(&[0, 1, 4]));
        assert_eq!(geo.add(&deriv).unwrap(), s(&[1, 3, 8]));
    }

    #[test]
    fn add_order_mismatch() {
        assert!(matches!(
            s(&[1]).add(&s(&[1, 2])),
            Err(SeriesError::OrderMismatch { left: 0, right: 1 })
        ));
    }

    #[test]
    fn mul_binomial_square() {
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, 1, 0])).unwrap(), s(&[1, 2, 1]));
    }

    #[test]
    fn mul_identity() {
        let x = s(&[3, 1, 4, 1, 5]);
        let one = IntSeries::one(4);
        assert_eq!(one.mul(&x).unwrap(), x);
    }

    #[test]
    fn mul_partition_partial_sums() {
        // Multiplying by 1/(1-t) forms partial sums of the partition numbers.
        let partition = generate::generate(&SeriesSpec::Partition, 4).unwrap();
        assert_eq!(partition, s(&[1, 1, 2, 3, 5]));
        let ones = expand_rational(&IntPoly::one(), &p(&[1, -1]), 4).unwrap();
        assert_eq!(partition.mul(&ones).unwrap(), s(&[1, 2, 4, 7, 12]));
    }

    #[test]
    fn expand_geometric() {
        let e = expand_rational(&IntPoly::one(), &p(&[1, -2]), 3).unwrap();
        assert_eq!(e, s(&[1, 2, 4, 8]));
    }

    #[test]
    fn expand_binomial_identity() {
        let e = expand_rational(&IntPoly::one(), &p(&[1, -1]).pow(2), 4).unwrap();
        assert_eq!(e, s(&[1, 2, 3, 4, 5]));
    }

    #[test]
    fn expand_fibonacci_counts() {
        let e = expand_rational(&p(&[1, 1]), &p(&[1, -1, -1]), 5).unwrap();
        assert_eq!(e, s(&[1, 2, 3, 5, 8, 13]));
    }

    #[test]
    fn expand_negative_unit_constant() {
        // 1/(-1+t) = -1 - t - t^2 - ...
        let e = expand_rational(&IntPoly::one(), &p(&[-1, 1]), 3).unwrap();
        assert_eq!(e, s(&[-1, -1, -1, -1]));
    }

    #[test]
    fn expand_rejects_non_unit() {
        assert!(matches!(
            expand_rational(&IntPoly::one(), &p(&[2, 1]), 3),
            Err(SeriesError::NonUnitConstantTerm { .. })
        ));
    }

    #[test]
    fn shift_and_truncate() {
        let x = s(&[1, 2, 3]);
        assert_eq!(x.shifted(2), s(&[0, 0, 1, 2, 3]));
        assert_eq!(x.shifted(2).truncated(2), s(&[0, 0, 1]));
    }
}
