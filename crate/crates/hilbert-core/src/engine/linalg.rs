//! Exact linear algebra over integer polynomials: fraction-free (Bareiss)
//! forward elimination followed by back substitution over reduced polynomial
//! fractions.

use crate::powseries::IntPoly;

/// A raw fraction of integer polynomials, kept reduced by the polynomial GCD.
/// Unlike the public canonical type, the denominator here only needs to be
/// nonzero.
#[derive(Clone, Debug)]
pub(crate) struct PolyFrac {
    pub num: IntPoly,
    pub den: IntPoly,
}

impl PolyFrac {
    pub fn zero() -> Self {
        PolyFrac {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        PolyFrac {
            num: p,
            den: IntPoly::one(),
        }
    }

    fn reduced(num: IntPoly, den: IntPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        PolyFrac {
            num: num.div_exact(&g).expect("gcd divides"),
            den: den.div_exact(&g).expect("gcd divides"),
        }
    }

    pub fn add(&self, rhs: &PolyFrac) -> PolyFrac {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::reduced(num, self.den.mul(&rhs.den))
    }

    pub fn sub(&self, rhs: &PolyFrac) -> PolyFrac {
        let num = self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den));
        Self::reduced(num, self.den.mul(&rhs.den))
    }

    pub fn mul_poly(&self, p: &IntPoly) -> PolyFrac {
        Self::reduced(self.num.mul(p), self.den.clone())
    }

    pub fn div_poly(&self, p: &IntPoly) -> PolyFrac {
        debug_assert!(!p.is_zero());
        Self::reduced(self.num.clone(), self.den.mul(p))
    }
}

/// Solves `A x = b` exactly for a square matrix of integer polynomials with
/// nonsingular `A`. Forward elimination is fraction-free with exact divisions
/// by the previous pivot; back substitution runs over reduced fractions.
///
/// Panics if the matrix is singular; callers pass `I - t M` matrices, which
/// are invertible power-series-side (unit constant term).
pub(crate) fn solve(mut a: Vec<Vec<IntPoly>>, mut b: Vec<IntPoly>) -> Vec<PolyFrac> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    if n == 0 {
        return Vec::new();
    }
    let mut prev = IntPoly::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let pivot_row = (k + 1..n)
                .find(|&r| !a[r][k].is_zero())
                .expect("singular matrix in fraction-free elimination");
            a.swap(k, pivot_row);
            b.swap(k, pivot_row);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            let t = a[k][k].mul(&b[i]).sub(&a[i][k].mul(&b[k]));
            b[i] = t.div_exact(&prev).expect("Bareiss division is exact");
            a[i][k] = IntPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![PolyFrac::zero(); n];
    for i in (0..n).rev() {
        let mut acc = PolyFrac::from_poly(b[i].clone());
        for j in i + 1..n {
            acc = acc.sub(&x[j].mul_poly(&a[i][j]));
        }
        x[i] = acc.div_poly(&a[i][i]);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powseries::normalize_rational;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn solves_scalar_system() {
        // (1 - 2t) x = 1
        let x = solve(vec![vec![p(&[1, -2])]], vec![p(&[1])]);
        let r = normalize_rational(&x[0].num, &x[0].den).unwrap();
        assert_eq!(r.numerator(), &p(&[1]));
        assert_eq!(r.denominator(), &p(&[1, -2]));
    }

    #[test]
    fn solves_fibonacci_transfer_system() {
        // states: root, "y" for the forbidden factor yy over {x, y}:
        // x0 = 1 + t x0 + t x1, x1 = t x0
        let a = vec![
            vec![p(&[1, -1]), p(&[0, -1])],
            vec![p(&[0, -1]), p(&[1])],
        ];
        let x = solve(a, vec![p(&[1]), p(&[0])]);
        let total = x[0].add(&x[1]);
        let r = normalize_rational(&total.num, &total.den).unwrap();
        assert_eq!(r.numerator(), &p(&[1, 1]));
        assert_eq!(r.denominator(), &p(&[1, -1, -1]));
    }

    #[test]
    fn solves_with_row_swap() {
        // first pivot zero forces a swap: [[0, 1], [1, 0]] x = (1, 2)
        let a = vec![
            vec![IntPoly::zero(), p(&[1])],
            vec![p(&[1]), IntPoly::zero()],
        ];
        let x = solve(a, vec![p(&[1]), p(&[2])]);
        assert_eq!(x[0].num, p(&[2]));
        assert_eq!(x[0].den, p(&[1]));
        assert_eq!(x[1].num, p(&[1]));
    }

    #[test]
    fn three_by_three_integer_system() {
        // A = [[2,1,0],[1,2,1],[0,1,2]], b = (1,0,0); det = 4, x = (3/4, -1/2, 1/4)
        let a = vec![
            vec![p(&[2]), p(&[1]), p(&[0])],
            vec![p(&[1]), p(&[2]), p(&[1])],
            vec![p(&[0]), p(&[1]), p(&[2])],
        ];
        let x = solve(a, vec![p(&[1]), p(&[0]), p(&[0])]);
        let checks = [(&x[0], 3i64, 4i64), (&x[1], -1, 2), (&x[2], 1, 4)];
        for (frac, num, den) in checks {
            // cross-multiplied equality avoids sign-normalization concerns
            assert_eq!(
                frac.num.mul(&p(&[den])),
                frac.den.mul(&p(&[num])),
                "expected {num}/{den}"
            );
        }
    }
}
