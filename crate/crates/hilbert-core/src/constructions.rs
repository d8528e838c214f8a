//! The built-in algebra constructions: closed-form Hilbert series, direct
//! structured basis counting, and cross-method verification.
//!
//! Every construction takes a base series `a` prescribing the degree-wise
//! set sizes `|A_n|` and produces a `(d+1)`-generated algebra whose Hilbert
//! series splits into three summands: words without `y`, words with one `y`,
//! and words with two `y` wrapping a chosen middle from `A`. The closed
//! forms and the structured counts walk independent routes to the same
//! coefficients; for the monomial variants the factor-avoidance engines give
//! a third and fourth route.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::engine::{count_automaton, count_bruteforce, EngineError};
use crate::monoid::{comm_capacity, realize_a, MonoidError};
use crate::powseries::{expand_rational, generate, IntPoly, IntSeries, SeriesError};
use crate::presentations::{
    ConstructionSpec, ConstructionVariant, Presentation, PresentationError,
};

/// Auto mode includes brute force only below this word-tree bound.
const AUTO_BRUTEFORCE_BOUND: u128 = 200_000;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl ConstructionError {
    /// Whether the root cause is a capacity/feasibility violation.
    pub fn is_capacity_violation(&self) -> bool {
        matches!(
            self,
            ConstructionError::Monoid(MonoidError::CapacityExceeded { .. })
                | ConstructionError::Monoid(MonoidError::InfeasibleUnitCount { .. })
                | ConstructionError::Presentation(PresentationError::Monoid(
                    MonoidError::CapacityExceeded { .. }
                ))
                | ConstructionError::Presentation(PresentationError::Monoid(
                    MonoidError::InfeasibleUnitCount { .. }
                ))
        )
    }
}

/// A coefficient-producing method compared by [`verify`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    ClosedForm,
    Structured,
    Automaton,
    Bruteforce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::ClosedForm => write!(f, "closed_form"),
            Method::Structured => write!(f, "structured"),
            Method::Automaton => write!(f, "automaton"),
            Method::Bruteforce => write!(f, "bruteforce"),
        }
    }
}

/// Engine selection for [`verify`]: the closed form and the structured count
/// always run; this picks the word-counting engines beyond them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EngineChoice {
    /// Automaton when the variant is monomial, brute force when cheap.
    Auto,
    /// No word counting, only closed form vs. structured.
    Structured,
    Automaton,
    Bruteforce,
}

/// One verified method with its coefficients and wall-clock cost.
#[derive(Clone, Debug)]
pub struct MethodRun {
    pub method: Method,
    pub dims: IntSeries,
    pub elapsed: Duration,
}

/// Outcome of a cross-method verification.
#[derive(Debug)]
pub struct VerificationReport {
    pub spec: ConstructionSpec,
    pub max_degree: usize,
    pub runs: Vec<MethodRun>,
    /// Lowest degree at which some run disagrees with the first one.
    pub first_mismatch: Option<usize>,
    pub agreement: bool,
}

impl VerificationReport {
    /// Assembles a report from finished runs, locating the first degree where
    /// any coefficient vector deviates from the first run.
    pub fn from_runs(spec: ConstructionSpec, max_degree: usize, runs: Vec<MethodRun>) -> Self {
        let mut first_mismatch = None;
        if let Some((reference, rest)) = runs.split_first() {
            for n in 0..=max_degree {
                if rest
                    .iter()
                    .any(|run| run.dims.coeff(n) != reference.dims.coeff(n))
                {
                    first_mismatch = Some(n);
                    break;
                }
            }
        }
        VerificationReport {
            spec,
            max_degree,
            agreement: first_mismatch.is_none(),
            first_mismatch,
            runs,
        }
    }
}

/// The base series realized through degree `n_max - 2` (what the third
/// summand consumes), with its capacity check.
fn checked_base(spec: &ConstructionSpec, n_max: usize) -> Result<IntSeries, ConstructionError> {
    spec.validate()?;
    let a = generate(&spec.base, n_max.saturating_sub(2))?;
    realize_a(&a, spec.d, spec.commutative_base())?;
    Ok(a)
}

/// Exact truncated expansion of the variant's closed-form Hilbert series.
pub fn closed_form(spec: &ConstructionSpec, n_max: usize) -> Result<IntSeries, ConstructionError> {
    let a = checked_base(spec, n_max)?;
    let d = i64::from(spec.d);
    let one_minus_dt = IntPoly::from_i64s(&[1, -d]);
    let one_minus_t = IntPoly::from_i64s(&[1, -1]);
    let t = IntPoly::from_i64s(&[0, 1]);

    // third summand t^2 a(t) / den, or zero below degree 2
    let third = |den: &IntPoly| -> Result<IntSeries, ConstructionError> {
        if n_max < 2 {
            return Ok(IntSeries::zero(n_max));
        }
        let expanded = expand_rational(&IntPoly::one(), den, n_max)?;
        Ok(a.shifted(2).mul(&expanded)?)
    };

    let series = match spec.variant {
        ConstructionVariant::Theorem1 { p } => {
            let h1 = expand_rational(&IntPoly::one(), &one_minus_dt, n_max)?;
            let h2 = expand_rational(&t, &one_minus_dt.pow(2), n_max)?;
            let h3 = third(&one_minus_dt.pow(u32::from(p)))?;
            h1.add(&h2)?.add(&h3)?
        }
        ConstructionVariant::Corollary12 { p, q } => {
            let h1 = expand_rational(&IntPoly::one(), &one_minus_dt, n_max)?;
            let h2 = expand_rational(&t, &one_minus_dt.pow(2), n_max)?;
            let den = one_minus_dt
                .pow(u32::from(p))
                .mul(&one_minus_t.pow(u32::from(q) * spec.d));
            let h3 = third(&den)?;
            h1.add(&h2)?.add(&h3)?
        }
        ConstructionVariant::Remark13 => {
            let h1 = expand_rational(&IntPoly::from_i64s(&[1, 2]), &one_minus_dt, n_max)?;
            let minus_t = {
                let mut s = IntSeries::zero(n_max);
                if n_max >= 1 {
                    *s.coeff_mut(1) = BigInt::from(1);
                }
                s
            };
            let h3 = third(&IntPoly::one())?;
            h1.sub(&minus_t)?.add(&h3)?
        }
        ConstructionVariant::Theorem14 { p } => {
            let h1 = expand_rational(&IntPoly::one(), &one_minus_t.pow(spec.d), n_max)?;
            let h2 = expand_rational(&t, &one_minus_t.pow(2 * spec.d), n_max)?;
            let h3 = third(&one_minus_t.pow(u32::from(p) * spec.d))?;
            h1.add(&h2)?.add(&h3)?
        }
    };
    Ok(series)
}

/// How one of the two sides around the `y v y` middle contributes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    /// Free words: `d^k` of degree `k`.
    Free,
    /// Commutative monomials: `C(k+d-1, d-1)` of degree `k`.
    Comm,
    /// Collapsed to the unit: degree 0 only.
    Killed,
}

impl Side {
    fn factor(self, d: u64, k: usize, d_pows: &[BigInt]) -> BigInt {
        match self {
            Side::Free => d_pows[k].clone(),
            Side::Comm => comm_capacity(d, k),
            Side::Killed => {
                if k == 0 {
                    BigInt::from(1)
                } else {
                    BigInt::zero()
                }
            }
        }
    }
}

/// Side statuses per variant: suppression and symmetrization take the left
/// side first, free sides sit rightmost.
fn side_statuses(variant: &ConstructionVariant) -> (Side, Side) {
    let assemble = |killed: u8, comm: u8, free: u8| {
        debug_assert_eq!(killed + comm + free, 2);
        let mut slots = Vec::with_capacity(2);
        slots.extend(std::iter::repeat_n(Side::Killed, killed as usize));
        slots.extend(std::iter::repeat_n(Side::Comm, comm as usize));
        slots.extend(std::iter::repeat_n(Side::Free, free as usize));
        (slots[0], slots[1])
    };
    match *variant {
        ConstructionVariant::Theorem1 { p } => assemble(2 - p, 0, p),
        ConstructionVariant::Corollary12 { p, q } => assemble(2 - p - q, q, p),
        ConstructionVariant::Remark13 => (Side::Killed, Side::Killed),
        ConstructionVariant::Theorem14 { p } => assemble(2 - p, p, 0),
    }
}

/// Dimension counts computed directly from the basis description: y-free
/// words, one-`y` words, and two-`y` words with a middle from `A`, each side
/// contributing its own factor.
pub fn structured_count(
    spec: &ConstructionSpec,
    n_max: usize,
) -> Result<IntSeries, ConstructionError> {
    let a = checked_base(spec, n_max)?;
    let d = u64::from(spec.d);
    let mut d_pows = Vec::with_capacity(n_max + 1);
    d_pows.push(BigInt::from(1));
    for _ in 1..=n_max {
        let last = d_pows.last().unwrap() * d;
        d_pows.push(last);
    }
    let commutative = spec.commutative_base();
    let base_factor = |k: usize| -> BigInt {
        if commutative {
            comm_capacity(d, k)
        } else {
            d_pows[k].clone()
        }
    };
    let (s1, s2) = side_statuses(&spec.variant);

    let mut coeffs = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        // words without y
        let mut total = base_factor(n);
        // words with one y
        if n >= 1 {
            match spec.variant {
                ConstructionVariant::Remark13 => {
                    // only an empty side survives next to the y
                    total += &d_pows[n - 1] * 2u32;
                    if n == 1 {
                        total -= 1u32; // the bare y is counted once
                    }
                }
                _ => {
                    for i in 0..=n - 1 {
                        total += base_factor(i) * base_factor(n - 1 - i);
                    }
                }
            }
        }
        // words with two y around a middle from A
        if n >= 2 {
            match spec.variant {
                ConstructionVariant::Remark13 => {
                    total += a.coeff(n - 2);
                }
                _ => {
                    for m in 0..=n - 2 {
                        let am = a.coeff(m);
                        if am.is_zero() {
                            continue;
                        }
                        let mut sides = BigInt::zero();
                        for i in 0..=n - 2 - m {
                            let left = s1.factor(d, i, &d_pows);
                            if left.is_zero() {
                                continue;
                            }
                            sides += left * s2.factor(d, n - 2 - m - i, &d_pows);
                        }
                        total += am * sides;
                    }
                }
            }
        }
        coeffs.push(total);
    }
    Ok(IntSeries::from_coeffs(coeffs))
}

/// Runs the methods selected by `engines` and compares all coefficient
/// vectors degree by degree. A mismatch is a report outcome, not an error.
pub fn verify(
    spec: &ConstructionSpec,
    n_max: usize,
    engines: EngineChoice,
) -> Result<VerificationReport, ConstructionError> {
    let mut runs = Vec::new();
    let mut push = |method: Method, result: Result<IntSeries, ConstructionError>| {
        let started = Instant::now();
        result.map(|dims| {
            runs.push(MethodRun {
                method,
                dims,
                elapsed: started.elapsed(),
            })
        })
    };
    let started = Instant::now();
    let closed = closed_form(spec, n_max)?;
    runs.push(MethodRun {
        method: Method::ClosedForm,
        dims: closed,
        elapsed: started.elapsed(),
    });
    let started = Instant::now();
    let structured = structured_count(spec, n_max)?;
    runs.push(MethodRun {
        method: Method::Structured,
        dims: structured,
        elapsed: started.elapsed(),
    });

    let word_tree = u128::from(spec.d as u32 + 1).checked_pow(n_max as u32);
    let (run_automaton, run_bruteforce) = match engines {
        EngineChoice::Structured => (false, false),
        EngineChoice::Auto => (
            spec.is_monomial(),
            spec.is_monomial() && word_tree.is_some_and(|w| w <= AUTO_BRUTEFORCE_BOUND),
        ),
        EngineChoice::Automaton => (true, false),
        EngineChoice::Bruteforce => (false, true),
    };
    if (run_automaton || run_bruteforce) && !spec.is_monomial() {
        return Err(ConstructionError::Presentation(
            PresentationError::UnsupportedVariant {
                variant: spec.variant.name().to_string(),
            },
        ));
    }
    if run_automaton || run_bruteforce {
        let pres = Presentation::structured(spec.clone(), n_max)?;
        if run_automaton {
            push(Method::Automaton, {
                count_automaton(&pres, n_max)
                    .map(|r| r.dims)
                    .map_err(ConstructionError::from)
            })?;
        }
        if run_bruteforce {
            push(Method::Bruteforce, {
                count_bruteforce(&pres, n_max)
                    .map(|r| r.dims)
                    .map_err(ConstructionError::from)
            })?;
        }
    }
    Ok(VerificationReport::from_runs(spec.clone(), n_max, runs))
}
