//! Generators for the built-in coefficient series.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use super::series::{expand_rational, IntSeries};
use super::{binomial, SeriesError};

/// How a multiplicative function extends from primes to all of `N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MultiplicativeMap {
    /// Completely multiplicative map sending the i-th prime to the
    /// (i+1)-th prime: `2 -> 3, 3 -> 5, 5 -> 7, ...`.
    ShiftedPrimes,
    /// Explicit values on prime powers, keyed by `(p, k)` for `p^k`. Every
    /// prime power occurring in a factorization must be present.
    PrimePowerTable(BTreeMap<(u64, u32), BigInt>),
}

/// A recipe for a concrete coefficient series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SeriesSpec {
    /// Truncated expansion of `numerator / denominator`.
    Rational {
        numerator: IntPoly,
        denominator: IntPoly,
    },
    /// Partition numbers via the product `prod_{n>=1} 1/(1-t^n)`.
    Partition,
    /// `prod_{n>=1} 1/(1-t^n)^{b_n}` with `b_n = exponents[n-1]` (zero past
    /// the end of the vector).
    EulerProduct { exponents: Vec<u64> },
    /// Ones exactly at the factorials `1!, 2!, 3!, ...`.
    LacunaryFactorial,
    /// Ones exactly at the powers `base^0, base^1, base^2, ...`; requires
    /// `base >= 2`.
    LacunaryPowers { base: u64 },
    /// Values of a multiplicative function at `1, 2, 3, ...` (coefficient 0
    /// at degree 0).
    Multiplicative(MultiplicativeMap),
    /// Leaf counts of binary planar rooted trees: the series `T` solving
    /// `T = t + T^2`, i.e. the Catalan number `C(n-1)` at degree `n >= 1`.
    CatalanTrees,
    /// Explicitly listed coefficients, zero-padded past the end.
    Explicit(Vec<BigInt>),
}

/// Produces the first `order + 1` coefficients of the series described by
/// `spec`, all exact.
pub fn generate(spec: &SeriesSpec, order: usize) -> Result<IntSeries, SeriesError> {
    match spec {
        SeriesSpec::Rational {
            numerator,
            denominator,
        } => expand_rational(numerator, denominator, order),
        SeriesSpec::Partition => Ok(euler_product(order, |_| 1)),
        SeriesSpec::EulerProduct { exponents } => Ok(euler_product(order, |n| {
            exponents.get(n - 1).copied().unwrap_or(0)
        })),
        SeriesSpec::LacunaryFactorial => {
            let mut s = IntSeries::zero(order);
            let mut factorial = 1usize;
            let mut n = 1usize;
            while factorial <= order {
                *s.coeff_mut(factorial) = BigInt::one();
                n += 1;
                match factorial.checked_mul(n) {
                    Some(next) => factorial = next,
                    None => break,
                }
            }
            Ok(s)
        }
        SeriesSpec::LacunaryPowers { base } => {
            if *base < 2 {
                return Err(SeriesError::InvalidSpec(format!(
                    "lacunary power base must be at least 2, got {base}"
                )));
            }
            let mut s = IntSeries::zero(order);
            let mut power = 1u64;
            while power as usize <= order {
                *s.coeff_mut(power as usize) = BigInt::one();
                match power.checked_mul(*base) {
                    Some(next) => power = next,
                    None => break,
                }
            }
            Ok(s)
        }
        SeriesSpec::Multiplicative(map) => multiplicative_series(map, order),
        SeriesSpec::CatalanTrees => {
            let mut s = IntSeries::zero(order);
            if order >= 1 {
                *s.coeff_mut(1) = BigInt::one();
            }
            for n in 2..=order {
                let mut acc = BigInt::zero();
                for i in 1..n {
                    acc += s.coeff(i) * s.coeff(n - i);
                }
                *s.coeff_mut(n) = acc;
            }
            Ok(s)
        }
        SeriesSpec::Explicit(coeffs) => {
            let mut s = IntSeries::zero(order);
            for (n, c) in coeffs.iter().take(order + 1).enumerate() {
                *s.coeff_mut(n) = c.clone();
            }
            Ok(s)
        }
    }
}

/// Expansion of `prod_{n>=1} 1/(1-t^n)^{b(n)}` truncated at `order`.
///
/// Each factor is applied as a sparse convolution with the binomial
/// coefficients of `1/(1-t^n)^b`; the single-exponent case degenerates to an
/// in-place prefix sum with stride `n`.
fn euler_product(order: usize, b: impl Fn(usize) -> u64) -> IntSeries {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    for n in 1..=order {
        let bn = b(n);
        if bn == 0 {
            continue;
        }
        if bn == 1 {
            for j in n..=order {
                let prev = coeffs[j - n].clone();
                coeffs[j] += prev;
            }
            continue;
        }
        // factor coefficients C(k + bn - 1, k) at degrees k*n
        let mut factor = Vec::with_capacity(order / n + 1);
        for k in 0..=(order / n) as u64 {
            factor.push(binomial(k + bn - 1, k));
        }
        let mut next = vec![BigInt::zero(); order + 1];
        for (k, f) in factor.iter().enumerate() {
            let offset = k * n;
            for j in offset..=order {
                if !coeffs[j - offset].is_zero() {
                    next[j] += f * &coeffs[j - offset];
                }
            }
        }
        coeffs = next;
    }
    IntSeries::from_coeffs(coeffs)
}

fn multiplicative_series(map: &MultiplicativeMap, order: usize) -> Result<IntSeries, SeriesError> {
    let mut s = IntSeries::zero(order);
    if order == 0 {
        return Ok(s);
    }
    let spf = smallest_prime_factors(order);
    let next_prime = match map {
        MultiplicativeMap::ShiftedPrimes => Some(shifted_prime_table(order)),
        MultiplicativeMap::PrimePowerTable(_) => None,
    };
    for n in 1..=order {
        let mut value = BigInt::one();
        let mut m = n;
        while m > 1 {
            let p = spf[m];
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            let factor = match map {
                MultiplicativeMap::ShiftedPrimes => {
                    let q = next_prime.as_ref().unwrap()[p];
                    BigInt::from(q).pow(e)
                }
                MultiplicativeMap::PrimePowerTable(table) => table
                    .get(&(p as u64, e))
                    .cloned()
                    .ok_or_else(|| {
                        SeriesError::InvalidSpec(format!(
                            "prime power table has no entry for ({p}, {e})"
                        ))
                    })?,
            };
            value *= factor;
        }
        *s.coeff_mut(n) = value;
    }
    Ok(s)
}

/// Smallest prime factor for every index `0..=n` (entries 0 and 1 unused).
fn smallest_prime_factors(n: usize) -> Vec<usize> {
    let mut spf: Vec<usize> = (0..=n).collect();
    let mut p = 2;
    while p * p <= n {
        if spf[p] == p {
            let mut m = p * p;
            while m <= n {
                if spf[m] == m {
                    spf[m] = p;
                }
                m += p;
            }
        }
        p += 1;
    }
    spf
}

/// For each prime `p <= n`, the next prime after `p`; other entries are 0.
/// Sieves to `2n + 16`, enough by Bertrand's postulate.
fn shifted_prime_table(n: usize) -> Vec<usize> {
    let limit = 2 * n + 16;
    let mut is_prime = vec![true; limit + 1];
    is_prime[0] = false;
    if limit >= 1 {
        is_prime[1] = false;
    }
    let mut p = 2;
    while p * p <= limit {
        if is_prime[p] {
            let mut m = p * p;
            while m <= limit {
                is_prime[m] = false;
                m += p;
            }
        }
        p += 1;
    }
    let mut table = vec![0usize; n + 1];
    for p in 2..=n {
        if is_prime[p] {
            let mut q = p + 1;
            while !is_prime[q] {
                q += 1;
            }
            table[p] = q;
        }
    }
    table
}

/// Parses a series spec string as used by the command line and file formats:
/// `partition`, `lacunary-factorial`, `lacunary-powers:<base>`,
/// `multiplicative:shift`, `catalan`, `rational:<num>/<den>`, `file:<path>`,
/// `zero`.
pub fn parse_series_spec(input: &str) -> Result<SeriesSpec, SeriesError> {
    match input {
        "partition" => return Ok(SeriesSpec::Partition),
        "lacunary-factorial" => return Ok(SeriesSpec::LacunaryFactorial),
        "catalan" => return Ok(SeriesSpec::CatalanTrees),
        "zero" => return Ok(SeriesSpec::Explicit(Vec::new())),
        "multiplicative:shift" => {
            return Ok(SeriesSpec::Multiplicative(MultiplicativeMap::ShiftedPrimes))
        }
        _ => {}
    }
    if let Some(base) = input.strip_prefix("lacunary-powers:") {
        let base: u64 = base
            .parse()
            .map_err(|_| SeriesError::InvalidSpec(format!("bad lacunary base {base:?}")))?;
        if base < 2 {
            return Err(SeriesError::InvalidSpec(format!(
                "lacunary power base must be at least 2, got {base}"
            )));
        }
        return Ok(SeriesSpec::LacunaryPowers { base });
    }
    if let Some(frac) = input.strip_prefix("rational:") {
        let (num, den) = frac.split_once('/').ok_or_else(|| {
            SeriesError::InvalidSpec("rational spec needs the form rational:<num>/<den>".into())
        })?;
        return Ok(SeriesSpec::Rational {
            numerator: IntPoly::parse(num)?,
            denominator: IntPoly::parse(den)?,
        });
    }
    if let Some(path) = input.strip_prefix("file:") {
        return Ok(SeriesSpec::Explicit(read_coefficient_file(path)?));
    }
    Err(SeriesError::InvalidSpec(format!(
        "unknown series spec {input:?}"
    )))
}

/// Reads a coefficient file: one decimal integer per line, line `k` holding
/// the degree-`k-1` coefficient; blank lines and `#` comments are ignored.
pub fn read_coefficient_file(path: impl AsRef<Path>) -> Result<Vec<BigInt>, SeriesError> {
    let text = std::fs::read_to_string(path)?;
    parse_coefficients(&text)
}

/// Parses coefficient-file text; see [`read_coefficient_file`].
pub fn parse_coefficients(text: &str) -> Result<Vec<BigInt>, SeriesError> {
    let mut coeffs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let value = BigInt::from_str(line).map_err(|_| SeriesError::CoefficientFile {
            line: idx + 1,
            message: format!("not a decimal integer: {line:?}"),
        })?;
        coeffs.push(value);
    }
    Ok(coeffs)
}
