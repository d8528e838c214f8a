//! Words over the alphabet `x_1, ..., x_d, y`, commutative monomials, and
//! deterministic realizations of degree-wise monomial sets.
//!
//! Enumerations are lexicographic with `x_1 < x_2 < ... < x_d < y`. A
//! realization picks, for every degree, the lexicographically first `a_n`
//! monomials; it stores only the counts and answers membership through the
//! rank of a monomial in the enumeration, which keeps realizations exact even
//! when the counts are astronomically large.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::powseries::{binomial, IntSeries};

#[derive(Debug, Error)]
pub enum MonoidError {
    #[error(
        "requested {requested} monomials of degree {degree}, but the capacity \
         for d={d} (commutative={commutative}) is {capacity}"
    )]
    CapacityExceeded {
        degree: usize,
        requested: BigInt,
        capacity: BigInt,
        d: u64,
        commutative: bool,
    },
    #[error("coefficient at degree {degree} is negative")]
    NegativeCoefficient { degree: usize },
    #[error("degree-0 coefficient {count} exceeds 1; no alphabet size works")]
    InfeasibleUnitCount { count: BigInt },
    #[error("no alphabet size below 2^63 satisfies the capacity bounds")]
    AlphabetTooLarge,
}

/// Parse failures for the textual word syntax.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unrecognized letter token {0:?}")]
    BadToken(String),
    #[error("letter index {index} out of range 1..={d}")]
    IndexOutOfRange { index: u64, d: u32 },
    #[error("letter y is not part of this alphabet")]
    YNotInAlphabet,
}

/// One generator: `x_i` with a 1-based index, or the distinguished letter `y`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    X(u32),
    Y,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X(i) => write!(f, "x{i}"),
            Letter::Y => write!(f, "y"),
        }
    }
}

/// The generating alphabet: `d` letters `x_1..x_d`, optionally extended by `y`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Alphabet {
    d: u32,
    has_y: bool,
}

impl Alphabet {
    pub fn new(d: u32, has_y: bool) -> Self {
        assert!(d >= 1, "alphabet needs at least one x letter");
        Alphabet { d, has_y }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn has_y(&self) -> bool {
        self.has_y
    }

    /// Total number of letters.
    pub fn len(&self) -> usize {
        self.d as usize + usize::from(self.has_y)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (1..=self.d)
            .map(Letter::X)
            .chain(self.has_y.then_some(Letter::Y))
    }

    /// Dense code in `0..len()`: `x_i -> i-1`, `y -> d`.
    pub fn code(&self, letter: Letter) -> Option<usize> {
        match letter {
            Letter::X(i) if i >= 1 && i <= self.d => Some(i as usize - 1),
            Letter::Y if self.has_y => Some(self.d as usize),
            _ => None,
        }
    }
}

/// A monomial in the free monoid: a finite sequence of letters. Degree is
/// length. Ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_y_free(&self) -> bool {
        self.0.iter().all(|l| *l != Letter::Y)
    }

    /// Concatenation of word fragments.
    pub fn concat(parts: &[&Word]) -> Word {
        let mut letters = Vec::with_capacity(parts.iter().map(|w| w.degree()).sum());
        for part in parts {
            letters.extend_from_slice(part.letters());
        }
        Word(letters)
    }

    /// Whether `factor` occurs as a contiguous subword.
    pub fn contains_factor(&self, factor: &Word) -> bool {
        if factor.is_empty() {
            return true;
        }
        self.0
            .windows(factor.degree())
            .any(|w| w == factor.letters())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for l in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses whitespace-separated letter tokens (`x<i>` or `y`) against an
/// alphabet. An empty string is the empty word.
pub fn parse_word(input: &str, alphabet: &Alphabet) -> Result<Word, WordParseError> {
    let mut letters = Vec::new();
    for token in input.split_whitespace() {
        if token == "y" {
            if !alphabet.has_y {
                return Err(WordParseError::YNotInAlphabet);
            }
            letters.push(Letter::Y);
            continue;
        }
        let index: u64 = token
            .strip_prefix('x')
            .and_then(|rest| rest.parse().ok())
            .ok_or_else(|| WordParseError::BadToken(token.to_string()))?;
        if index < 1 || index > u64::from(alphabet.d) {
            return Err(WordParseError::IndexOutOfRange {
                index,
                d: alphabet.d,
            });
        }
        letters.push(Letter::X(index as u32));
    }
    Ok(Word(letters))
}

/// A commutative monomial in `d` variables, stored as an exponent vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CommMonomial {
    exponents: Vec<u32>,
}

impl CommMonomial {
    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        CommMonomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    /// The commutative image of a y-free word.
    pub fn from_word(word: &Word, d: u32) -> Self {
        let mut exponents = vec![0u32; d as usize];
        for l in word.letters() {
            match l {
                Letter::X(i) => exponents[*i as usize - 1] += 1,
                Letter::Y => panic!("commutative monomials are y-free"),
            }
        }
        CommMonomial { exponents }
    }
}

impl fmt::Display for CommMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.iter().all(|&e| e == 0) {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// All `d^n` y-free words of degree `n` in lexicographic order.
pub fn enumerate_words(d: u32, n: usize) -> impl Iterator<Item = Word> {
    assert!(d >= 1);
    WordEnumerator {
        d,
        digits: vec![0; n],
        done: false,
    }
}

struct WordEnumerator {
    d: u32,
    digits: Vec<u32>,
    done: bool,
}

impl Iterator for WordEnumerator {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let word = Word(self.digits.iter().map(|&v| Letter::X(v + 1)).collect());
        // odometer increment, most significant digit first
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.digits[i] + 1 < self.d {
                self.digits[i] += 1;
                for digit in &mut self.digits[i + 1..] {
                    *digit = 0;
                }
                break;
            }
        }
        if self.digits.is_empty() {
            self.done = true;
        }
        Some(word)
    }
}

/// All `C(n+d-1, d-1)` exponent vectors of degree `n` in lexicographic order.
pub fn enumerate_comm(d: u32, n: usize) -> impl Iterator<Item = CommMonomial> {
    assert!(d >= 1);
    let mut first = vec![0u32; d as usize];
    first[d as usize - 1] = n as u32;
    CommEnumerator {
        current: Some(first),
    }
}

struct CommEnumerator {
    current: Option<Vec<u32>>,
}

impl Iterator for CommEnumerator {
    type Item = CommMonomial;

    fn next(&mut self) -> Option<CommMonomial> {
        let current = self.current.take()?;
        let d = current.len();
        // successor: bump the rightmost position with mass strictly after it,
        // then park the leftover at the end
        let mut next = None;
        let mut suffix_sum: u64 = 0;
        for i in (0..d.saturating_sub(1)).rev() {
            suffix_sum += u64::from(current[i + 1]);
            if suffix_sum > 0 {
                let mut v = current.clone();
                v[i] += 1;
                for entry in &mut v[i + 1..] {
                    *entry = 0;
                }
                v[d - 1] = (suffix_sum - 1) as u32;
                next = Some(v);
                break;
            }
        }
        self.current = next;
        Some(CommMonomial { exponents: current })
    }
}

/// Lexicographic rank of a y-free word among the degree-`n` enumeration:
/// the base-`d` value of its letter indices.
pub fn word_rank(word: &Word, d: u32) -> BigInt {
    let mut rank = BigInt::zero();
    for l in word.letters() {
        match l {
            Letter::X(i) => {
                rank = rank * d + BigInt::from(i - 1);
            }
            Letter::Y => panic!("rank is defined for y-free words"),
        }
    }
    rank
}

/// Lexicographic rank of an exponent vector among those of equal degree.
pub fn comm_rank(mono: &CommMonomial) -> BigInt {
    let d = mono.exponents.len() as u64;
    let mut rank = BigInt::zero();
    let mut remaining = mono.degree() as u64;
    for (i, &e) in mono.exponents.iter().enumerate() {
        let vars_right = d - i as u64 - 1;
        if vars_right == 0 {
            break;
        }
        for v in 0..u64::from(e) {
            rank += binomial(remaining - v + vars_right - 1, vars_right - 1);
        }
        remaining -= u64::from(e);
    }
    rank
}

/// Number of y-free words of degree `n` over `d` letters.
pub fn noncomm_capacity(d: u64, n: usize) -> BigInt {
    BigInt::from(d).pow(n as u32)
}

/// Number of commutative monomials of degree `n` in `d` variables.
pub fn comm_capacity(d: u64, n: usize) -> BigInt {
    binomial(n as u64 + d - 1, d - 1)
}

/// Degree-wise monomial sets with prescribed cardinalities: at every degree
/// `n`, the lexicographically first `a_n` monomials. Stores only the counts;
/// membership goes through monomial ranks.
#[derive(Clone, Debug)]
pub struct ASetRealization {
    d: u32,
    commutative: bool,
    counts: Vec<BigInt>,
}

impl ASetRealization {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn commutative(&self) -> bool {
        self.commutative
    }

    /// Highest realized degree.
    pub fn max_degree(&self) -> usize {
        self.counts.len() - 1
    }

    /// `|A_n|`.
    pub fn count(&self, n: usize) -> &BigInt {
        &self.counts[n]
    }

    /// Whether the unit monomial is in the set (`a_0 = 1`).
    pub fn contains_unit(&self) -> bool {
        self.counts[0].is_one()
    }

    /// Membership for y-free words; words containing `y` or exceeding the
    /// realized degree range are not members.
    pub fn contains(&self, word: &Word) -> bool {
        assert!(!self.commutative, "word membership needs a noncommutative realization");
        if !word.is_y_free() || word.degree() > self.max_degree() {
            return false;
        }
        word_rank(word, self.d) < *self.count(word.degree())
    }

    pub fn contains_comm(&self, mono: &CommMonomial) -> bool {
        assert!(self.commutative, "monomial membership needs a commutative realization");
        if mono.exponents.len() != self.d as usize || mono.degree() > self.max_degree() {
            return false;
        }
        comm_rank(mono) < *self.count(mono.degree())
    }

    /// The chosen degree-`n` words in lexicographic order.
    pub fn members(&self, n: usize) -> impl Iterator<Item = Word> + '_ {
        assert!(!self.commutative, "word members need a noncommutative realization");
        let count = self.count(n).clone();
        let mut taken = BigInt::zero();
        enumerate_words(self.d, n).take_while(move |_| {
            let more = taken < count;
            taken += 1;
            more
        })
    }

    /// The chosen degree-`n` commutative monomials in lexicographic order.
    pub fn members_comm(&self, n: usize) -> impl Iterator<Item = CommMonomial> + '_ {
        assert!(self.commutative, "monomial members need a commutative realization");
        let count = self.count(n).clone();
        let mut taken = BigInt::zero();
        enumerate_comm(self.d, n).take_while(move |_| {
            let more = taken < count;
            taken += 1;
            more
        })
    }
}

/// Realizes the sets `A_n` with `|A_n| = a_n` for every degree carried by
/// `a`, checking the capacity bound degree by degree.
pub fn realize_a(
    a: &IntSeries,
    d: u32,
    commutative: bool,
) -> Result<ASetRealization, MonoidError> {
    let capacity = |n: usize| {
        if commutative {
            comm_capacity(u64::from(d), n)
        } else {
            noncomm_capacity(u64::from(d), n)
        }
    };
    for n in 0..=a.order() {
        let coeff = a.coeff(n);
        if coeff.is_negative() {
            return Err(MonoidError::NegativeCoefficient { degree: n });
        }
        let cap = capacity(n);
        if *coeff > cap {
            return Err(MonoidError::CapacityExceeded {
                degree: n,
                requested: coeff.clone(),
                capacity: cap,
                d: u64::from(d),
                commutative,
            });
        }
    }
    Ok(ASetRealization {
        d,
        commutative,
        counts: a.coeffs().to_vec(),
    })
}

/// Smallest alphabet size `d >= 1` whose capacity admits every coefficient of
/// `a`. The coefficients must be nonnegative with `a_0 <= 1`.
pub fn minimal_d(a: &IntSeries, commutative: bool) -> Result<u64, MonoidError> {
    for n in 0..=a.order() {
        if a.coeff(n).is_negative() {
            return Err(MonoidError::NegativeCoefficient { degree: n });
        }
    }
    if *a.coeff(0) > BigInt::one() {
        return Err(MonoidError::InfeasibleUnitCount {
            count: a.coeff(0).clone(),
        });
    }
    let feasible = |d: u64| {
        (1..=a.order()).all(|n| {
            let cap = if commutative {
                comm_capacity(d, n)
            } else {
                noncomm_capacity(d, n)
            };
            *a.coeff(n) <= cap
        })
    };
    if feasible(1) {
        return Ok(1);
    }
    let mut hi = 2u64;
    while !feasible(hi) {
        hi = hi.checked_mul(2).ok_or(MonoidError::AlphabetTooLarge)?;
    }
    let mut lo = hi / 2; // infeasible
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if feasible(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
