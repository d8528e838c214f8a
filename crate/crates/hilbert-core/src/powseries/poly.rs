//! Dense integer polynomials in one variable `t`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::SeriesError;

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. The zero polynomial has an empty coefficient vector; otherwise the
/// trailing (highest-degree) coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient at degree `k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &IntPoly) -> IntPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, mut exp: u32) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplies by `t^k`.
    pub fn shifted(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Exact quotient `self / rhs`, or `None` when `rhs` does not divide
    /// `self` over the integers.
    pub fn div_exact(&self, rhs: &IntPoly) -> Option<IntPoly> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (dn, dd) = (self.degree()?, rhs.degree()?);
        if dn < dd {
            return None;
        }
        let lead = rhs.leading_coeff()?.clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in rhs.coeffs.iter().enumerate().take(dd) {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// GCD of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Pseudo-remainder of `self` by `rhs`: the remainder after multiplying
    /// `self` by `lc(rhs)^(deg self - deg rhs + 1)` so the division is
    /// integral. Requires `rhs` nonzero and `deg self >= deg rhs`.
    fn pseudo_rem(&self, rhs: &IntPoly) -> IntPoly {
        let dd = rhs.degree().expect("pseudo_rem by zero polynomial");
        let lead = rhs.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        while let Some(dn) = rem.degree() {
            if dn < dd {
                break;
            }
            let top = rem.leading_coeff().unwrap().clone();
            let shift = dn - dd;
            let mut coeffs = vec![BigInt::zero(); dn + 1];
            for (k, c) in rem.coeffs.iter().enumerate() {
                coeffs[k] = c * &lead;
            }
            for (j, c) in rhs.coeffs.iter().enumerate() {
                coeffs[shift + j] -= &top * c;
            }
            rem = Self::from_coeffs(coeffs);
        }
        rem
    }

    /// Polynomial GCD over the integers (content times primitive part),
    /// normalized to a positive leading coefficient. Uses a primitive
    /// pseudo-remainder sequence.
    pub fn gcd(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return rhs.positive_leading();
        }
        if rhs.is_zero() {
            return self.positive_leading();
        }
        let content_gcd = self.content().gcd(&rhs.content());
        let mut a = self.primitive_part();
        let mut b = rhs.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        let prim = a.positive_leading();
        prim.scaled(&content_gcd)
    }

    /// Divides all coefficients by the content; zero stays zero.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    pub fn scaled(&self, factor: &BigInt) -> IntPoly {
        if factor.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * factor).collect(),
        }
    }

    fn positive_leading(&self) -> IntPoly {
        match self.leading_coeff() {
            Some(l) if l.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Parses a sum of signed terms such as `1 - 2t + t^2` (whitespace
    /// optional). Exponents use `^`, coefficient `1` may be omitted.
    pub fn parse(input: &str) -> Result<IntPoly, SeriesError> {
        let err = |message: &str| SeriesError::PolyParse {
            input: input.to_string(),
            message: message.to_string(),
        };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial"));
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (sign, tail) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if first => (1, rest),
                _ => return Err(err("expected '+' or '-' between terms")),
            };
            first = false;
            let end = tail
                .find(['+', '-'])
                .unwrap_or(tail.len());
            let term = &tail[..end];
            rest = &tail[end..];
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (digits, var) = match term.find('t') {
                Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
                None => (term, None),
            };
            let magnitude = if digits.is_empty() {
                if var.is_none() {
                    return Err(err("term with no coefficient or variable"));
                }
                BigInt::one()
            } else {
                BigInt::from_str(digits).map_err(|_| err("bad integer coefficient"))?
            };
            let degree = match var {
                None => 0,
                Some("") => 1,
                Some(exp) => {
                    let exp = exp
                        .strip_prefix('^')
                        .ok_or_else(|| err("expected '^' after 't'"))?;
                    exp.parse::<usize>().map_err(|_| err("bad exponent"))?
                }
            };
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, BigInt::zero());
            }
            coeffs[degree] += magnitude * BigInt::from(sign);
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
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
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Number of nonzero terms; used to decide parenthesization when printing
/// rational functions.
pub(crate) fn term_count(p: &IntPoly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn trims_trailing_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(a.mul(&a), p(&[1, 2, 1]));
        assert_eq!(a.add(&p(&[0, -1])), p(&[1]));
        assert_eq!(a.sub(&a), IntPoly::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[0, 1]).shifted(2), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 0, -1]); // 1 - t^2
        let b = p(&[1, -1]); // 1 - t
        assert_eq!(a.div_exact(&b), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(b));
        assert_eq!(p(&[1, 1]).div_exact(&p(&[2])), None);
        assert_eq!(p(&[2, 2]).div_exact(&p(&[2])), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[1, -2])), None);
    }

    #[test]
    fn gcd_of_products() {
        let fib = p(&[1, -1, -1]);
        let a = p(&[1, 1]).mul(&fib);
        let b = fib.mul(&fib);
        let g = a.gcd(&b);
        // gcd is fib up to sign normalization (positive leading coefficient)
        assert_eq!(g, fib.neg());
        assert_eq!(a.div_exact(&g).unwrap().mul(&g), a);
    }

    #[test]
    fn gcd_with_content() {
        assert_eq!(p(&[2, 2]).gcd(&p(&[4, 4])), p(&[2, 2]));
        assert_eq!(p(&[6]).gcd(&p(&[4])), p(&[2]));
        assert_eq!(IntPoly::zero().gcd(&p(&[0, -3])), p(&[0, 3]));
    }

    #[test]
    fn display_signed_terms() {
        assert_eq!(p(&[1, -1, -1]).to_string(), "1 - t - t^2");
        assert_eq!(p(&[0, 2]).to_string(), "2t");
        assert_eq!(p(&[-1, 0, 3]).to_string(), "-1 + 3t^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[1]).to_string(), "1");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["1 - 2t + t^2", "t", "-t^3", "4", "1+t"] {
            let q = IntPoly::parse(s).unwrap();
            let r = IntPoly::parse(&q.to_string()).unwrap();
            assert_eq!(q, r, "round trip through display for {s}");
        }
        assert_eq!(IntPoly::parse("1-2t").unwrap(), p(&[1, -2]));
        assert_eq!(IntPoly::parse("t^2 + t^2").unwrap(), p(&[0, 0, 2]));
        assert!(IntPoly::parse("").is_err());
        assert!(IntPoly::parse("1++t").is_err());
        assert!(IntPoly::parse("t^").is_err());
        assert!(IntPoly::parse("2x").is_err());
    }
}
