//! Independent counting of normal words — the monomial-algebra basis — by
//! brute-force enumeration, automaton dynamic programming, and exact
//! rationalization for finite presentations.

mod automaton;
mod linalg;

pub use automaton::{build_automaton, FactorAutomaton};

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::monoid::{Letter, Word};
use crate::powseries::{normalize_rational, IntPoly, IntSeries, RationalFn, SeriesError};
use crate::presentations::{Presentation, PresentationError, PresentationKind};

/// Guard for brute-force enumeration: `alphabet^degree` may not exceed this.
const BRUTEFORCE_GUARD: u128 = 100_000_000;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(
        "brute force would scan up to {words} words (limit {limit}); \
         use the automaton method instead"
    )]
    BruteforceTooLarge { words: u128, limit: u128 },
    #[error("automaton would need about {states} states (limit {limit}); lower the degree bound")]
    AutomatonTooLarge { states: usize, limit: usize },
    #[error("the empty word is forbidden; the presentation is degenerate")]
    EmptyWordForbidden,
    #[error("word {word} uses letters outside the automaton alphabet")]
    ForeignLetter { word: String },
    #[error("rationalization needs a finite presentation")]
    NotFinite,
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Which counting method produced a report.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CountMethod {
    Bruteforce,
    Automaton,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountMethod::Bruteforce => write!(f, "bruteforce"),
            CountMethod::Automaton => write!(f, "automaton"),
        }
    }
}

/// Degree-wise normal-word counts together with how they were obtained.
#[derive(Clone, Debug)]
pub struct CountReport {
    pub dims: IntSeries,
    pub method: CountMethod,
    /// The forbidden set was enumerated through this degree.
    pub forbidden_truncation: usize,
}

fn collect_forbidden(pres: &Presentation, n_max: usize) -> Result<Vec<Word>, EngineError> {
    let mut words = Vec::new();
    for n in 0..=n_max {
        words.extend(pres.forbidden(n)?);
    }
    Ok(words)
}

/// Counts normal words of each degree up to `n_max` by automaton dynamic
/// programming over `(degree, live state)`.
pub fn count_automaton(pres: &Presentation, n_max: usize) -> Result<CountReport, EngineError> {
    let forbidden = collect_forbidden(pres, n_max)?;
    let dims = if forbidden.iter().any(Word::is_empty) {
        IntSeries::zero(n_max)
    } else {
        let auto = build_automaton(&forbidden, pres.alphabet())?;
        let sigma = auto.alphabet().len();
        let states = auto.state_count();
        let mut current = vec![BigInt::zero(); states];
        current[auto.start() as usize] = BigInt::one();
        let mut coeffs = Vec::with_capacity(n_max + 1);
        coeffs.push(current.iter().sum());
        for _ in 1..=n_max {
            let mut next = vec![BigInt::zero(); states];
            for (state, weight) in current.iter().enumerate() {
                if weight.is_zero() || auto.is_dead(state as u32) {
                    continue;
                }
                for code in 0..sigma {
                    let target = auto.step(state as u32, code);
                    if !auto.is_dead(target) {
                        next[target as usize] += weight;
                    }
                }
            }
            coeffs.push(next.iter().sum());
            current = next;
        }
        IntSeries::from_coeffs(coeffs)
    };
    Ok(CountReport {
        dims,
        method: CountMethod::Automaton,
        forbidden_truncation: n_max,
    })
}

/// Counts normal words of each degree up to `n_max` by depth-first
/// enumeration of the word tree, pruning at the first forbidden suffix.
/// Guarded by `alphabet^n_max <= 10^8`.
pub fn count_bruteforce(pres: &Presentation, n_max: usize) -> Result<CountReport, EngineError> {
    let sigma = pres.alphabet().len() as u128;
    match sigma.checked_pow(n_max as u32) {
        Some(w) if w <= BRUTEFORCE_GUARD => {}
        w => {
            return Err(EngineError::BruteforceTooLarge {
                words: w.unwrap_or(u128::MAX),
                limit: BRUTEFORCE_GUARD,
            })
        }
    }
    let forbidden = collect_forbidden(pres, n_max)?;
    if forbidden.iter().any(Word::is_empty) {
        return Ok(CountReport {
            dims: IntSeries::zero(n_max),
            method: CountMethod::Bruteforce,
            forbidden_truncation: n_max,
        });
    }
    // group by length for the suffix test
    let mut by_length: Vec<(usize, HashSet<Vec<Letter>>)> = Vec::new();
    for word in &forbidden {
        let len = word.degree();
        match by_length.iter_mut().find(|(l, _)| *l == len) {
            Some((_, set)) => {
                set.insert(word.letters().to_vec());
            }
            None => {
                let mut set = HashSet::new();
                set.insert(word.letters().to_vec());
                by_length.push((len, set));
            }
        }
    }
    let letters: Vec<Letter> = pres.alphabet().letters().collect();
    let mut counts = vec![BigInt::zero(); n_max + 1];
    let mut stack: Vec<Letter> = Vec::with_capacity(n_max);
    counts[0] += 1u32;
    // iterative DFS: `frontier[k]` is the iterator position at depth k
    let mut choice = vec![0usize; n_max + 1];
    let mut depth = 0usize;
    loop {
        if depth == n_max || choice[depth] == letters.len() {
            if depth == 0 {
                break;
            }
            stack.pop();
            depth -= 1;
            continue;
        }
        let letter = letters[choice[depth]];
        choice[depth] += 1;
        stack.push(letter);
        let blocked = by_length.iter().any(|(len, set)| {
            *len <= stack.len() && set.contains(&stack[stack.len() - len..])
        });
        if blocked {
            stack.pop();
        } else {
            depth += 1;
            choice[depth] = 0;
            counts[depth] += 1u32;
        }
    }
    Ok(CountReport {
        dims: IntSeries::from_coeffs(counts),
        method: CountMethod::Bruteforce,
        forbidden_truncation: n_max,
    })
}

/// Exact rational Hilbert series of a finite presentation via the transfer
/// matrix of its factor automaton: with `M[j][i]` counting letters that move
/// live state `i` to live state `j`, solves `(I - tM) x = e_start` by
/// fraction-free elimination and sums `x` over all live states.
pub fn rationalize(pres: &Presentation) -> Result<RationalFn, EngineError> {
    let words = match pres.kind() {
        PresentationKind::Finite(words) => words,
        PresentationKind::Structured(_) => return Err(EngineError::NotFinite),
    };
    if words.iter().any(Word::is_empty) {
        // everything is forbidden, even the empty word
        return Ok(RationalFn::zero());
    }
    let auto = build_automaton(words, pres.alphabet())?;
    let live: Vec<u32> = (0..auto.state_count() as u32)
        .filter(|&s| !auto.is_dead(s))
        .collect();
    let index_of = |state: u32| live.binary_search(&state).ok();
    let n = live.len();
    let sigma = auto.alphabet().len();
    // A[r][c] = [r == c] - t * #{letters moving live[c] to live[r]}
    let mut a = vec![vec![IntPoly::zero(); n]; n];
    for (c, &state) in live.iter().enumerate() {
        let mut counts = vec![0i64; n];
        for code in 0..sigma {
            let target = auto.step(state, code);
            if let Some(r) = index_of(target) {
                counts[r] += 1;
            }
        }
        for (r, row) in a.iter_mut().enumerate() {
            let mut entry = IntPoly::monomial(BigInt::from(-counts[r]), 1);
            if r == c {
                entry = entry.add(&IntPoly::one());
            }
            row[c] = entry;
        }
    }
    let start_index = index_of(auto.start()).expect("start state is live");
    let mut b = vec![IntPoly::zero(); n];
    b[start_index] = IntPoly::one();
    let solution = linalg::solve(a, b);
    let mut total = linalg::PolyFrac::zero();
    for x in &solution {
        total = total.add(x);
    }
    Ok(normalize_rational(&total.num, &total.den)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{parse_word, Alphabet};
    use crate::powseries::expand_rational;
    use crate::presentations::{ConstructionSpec, ConstructionVariant};
    use crate::powseries::SeriesSpec;

    fn finite(d: u32, has_y: bool, words: &[&str]) -> Presentation {
        let ab = Alphabet::new(d, has_y);
        let words = words.iter().map(|s| parse_word(s, &ab).unwrap()).collect();
        Presentation::finite(ab, words).unwrap()
    }

    fn dims_i64(report: &CountReport) -> Vec<i64> {
        use num_traits::ToPrimitive;
        report.dims.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn bruteforce_fibonacci_language() {
        let pres = finite(1, true, &["y y"]);
        let report = count_bruteforce(&pres, 5).unwrap();
        assert_eq!(dims_i64(&report), vec![1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn bruteforce_free_algebra() {
        let pres = Presentation::free(Alphabet::new(2, false));
        let report = count_bruteforce(&pres, 3).unwrap();
        assert_eq!(dims_i64(&report), vec![1, 2, 4, 8]);
    }

    #[test]
    fn bruteforce_single_letter_blocked() {
        let pres = finite(1, false, &["x1"]);
        let report = count_bruteforce(&pres, 2).unwrap();
        assert_eq!(dims_i64(&report), vec![1, 0, 0]);
    }

    #[test]
    fn bruteforce_guard() {
        let pres = Presentation::free(Alphabet::new(9, true));
        assert!(matches!(
            count_bruteforce(&pres, 9),
            Err(EngineError::BruteforceTooLarge { .. })
        ));
    }

    #[test]
    fn automaton_fibonacci_to_ten() {
        let pres = finite(1, true, &["y y"]);
        let report = count_automaton(&pres, 10).unwrap();
        assert_eq!(
            dims_i64(&report),
            vec![1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
        );
        let expansion = expand_rational(
            &IntPoly::from_i64s(&[1, 1]),
            &IntPoly::from_i64s(&[1, -1, -1]),
            10,
        )
        .unwrap();
        assert_eq!(report.dims, expansion);
    }

    #[test]
    fn automaton_free_algebra_three_letters() {
        let pres = Presentation::free(Alphabet::new(3, false));
        let report = count_automaton(&pres, 4).unwrap();
        assert_eq!(dims_i64(&report), vec![1, 3, 9, 27, 81]);
    }

    #[test]
    fn automaton_agrees_with_bruteforce_on_finite_presentations() {
        let cases = [
            finite(2, false, &["x1 x1"]),
            finite(2, false, &["x1 x2", "x2 x1"]),
            finite(2, true, &["y y", "x1 y x1"]),
            finite(3, false, &["x1 x2 x3"]),
            finite(1, true, &["y y y", "x1 x1 x1"]),
        ];
        for pres in &cases {
            let a = count_automaton(pres, 8).unwrap();
            let b = count_bruteforce(pres, 8).unwrap();
            assert_eq!(a.dims, b.dims);
        }
    }

    #[test]
    fn automaton_agrees_with_bruteforce_on_structured_presentations() {
        for p in [0u8, 1, 2] {
            let spec = ConstructionSpec {
                d: 2,
                variant: ConstructionVariant::Theorem1 { p },
                base: SeriesSpec::Partition,
            };
            let pres = Presentation::structured(spec, 7).unwrap();
            let a = count_automaton(&pres, 7).unwrap();
            let b = count_bruteforce(&pres, 7).unwrap();
            assert_eq!(a.dims, b.dims, "p = {p}");
        }
    }

    #[test]
    fn truncation_stability() {
        let spec = ConstructionSpec {
            d: 2,
            variant: ConstructionVariant::Theorem1 { p: 1 },
            base: SeriesSpec::LacunaryPowers { base: 2 },
        };
        let shallow = Presentation::structured(spec.clone(), 8).unwrap();
        let deep = Presentation::structured(spec, 12).unwrap();
        let a = count_automaton(&shallow, 8).unwrap();
        let b = count_automaton(&deep, 12).unwrap();
        assert_eq!(a.dims.coeffs(), &b.dims.coeffs()[..=8]);
    }

    #[test]
    fn submultiplicativity_of_dimensions() {
        let pres = finite(2, true, &["y y", "x2 x2"]);
        let dims = count_automaton(&pres, 12).unwrap().dims;
        for m in 0..=12usize {
            for n in 0..=12 - m {
                assert!(
                    dims.coeff(m + n) <= &(dims.coeff(m) * dims.coeff(n)),
                    "{m} + {n}"
                );
            }
        }
    }

    #[test]
    fn empty_word_forbidden_zeroes_everything() {
        let pres =
            Presentation::finite(Alphabet::new(1, false), vec![Word::empty()]).unwrap();
        let report = count_automaton(&pres, 3).unwrap();
        assert_eq!(dims_i64(&report), vec![0, 0, 0, 0]);
        let report = count_bruteforce(&pres, 3).unwrap();
        assert_eq!(dims_i64(&report), vec![0, 0, 0, 0]);
        assert_eq!(rationalize(&pres).unwrap(), RationalFn::zero());
    }

    #[test]
    fn rationalize_fibonacci() {
        let pres = finite(1, true, &["y y"]);
        let r = rationalize(&pres).unwrap();
        assert_eq!(r.to_string(), "(1 + t) / (1 - t - t^2)");
    }

    #[test]
    fn rationalize_free_algebra() {
        for d in 1..=4u32 {
            let pres = Presentation::free(Alphabet::new(d, false));
            let r = rationalize(&pres).unwrap();
            assert_eq!(r.numerator(), &IntPoly::one());
            assert_eq!(r.denominator(), &IntPoly::from_i64s(&[1, -(d as i64)]));
        }
    }

    #[test]
    fn rationalize_square_free_single_letter() {
        let pres = finite(1, false, &["x1 x1"]);
        let r = rationalize(&pres).unwrap();
        assert_eq!(r.numerator(), &IntPoly::from_i64s(&[1, 1]));
        assert_eq!(r.denominator(), &IntPoly::one());
    }

    #[test]
    fn rationalize_matches_automaton_expansion() {
        let cases = [
            finite(1, true, &["y y"]),
            finite(2, false, &["x1 x2", "x2 x1"]),
            finite(2, true, &["y y"]),
            finite(2, false, &["x1 x1 x2"]),
            finite(3, false, &[]),
        ];
        for pres in &cases {
            let r = rationalize(pres).unwrap();
            let counted = count_automaton(pres, 30).unwrap();
            assert_eq!(r.expand(30), counted.dims);
        }
    }

    #[test]
    fn rationalize_rejects_structured() {
        let spec = ConstructionSpec {
            d: 2,
            variant: ConstructionVariant::Theorem1 { p: 2 },
            base: SeriesSpec::Partition,
        };
        let pres = Presentation::structured(spec, 6).unwrap();
        assert!(matches!(rationalize(&pres), Err(EngineError::NotFinite)));
    }
}
