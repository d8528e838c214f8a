//! Factor-avoidance automaton: an Aho-Corasick machine over the forbidden
//! words, with dead states at (or past) any complete match.

use std::collections::VecDeque;

use crate::monoid::{Alphabet, Word};

use super::EngineError;

/// Upper bound on `states * alphabet` transition-table entries.
const TRANSITION_LIMIT: usize = 20_000_000;

/// Deterministic, total automaton recognizing factor-freedom: a word avoids
/// every forbidden factor iff its run from the start state never touches a
/// dead state.
#[derive(Debug)]
pub struct FactorAutomaton {
    alphabet: Alphabet,
    /// Flattened `state * alphabet_len + letter_code -> state`.
    transitions: Vec<u32>,
    dead: Vec<bool>,
}

impl FactorAutomaton {
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn start(&self) -> u32 {
        0
    }

    pub fn state_count(&self) -> usize {
        self.dead.len()
    }

    pub fn dead_count(&self) -> usize {
        self.dead.iter().filter(|&&d| d).count()
    }

    pub fn live_count(&self) -> usize {
        self.state_count() - self.dead_count()
    }

    pub fn is_dead(&self, state: u32) -> bool {
        self.dead[state as usize]
    }

    pub fn step(&self, state: u32, letter_code: usize) -> u32 {
        self.transitions[state as usize * self.alphabet.len() + letter_code]
    }

    /// Runs the word from the start; `true` iff no prefix hits a dead state.
    pub fn is_normal(&self, word: &Word) -> bool {
        let mut state = self.start();
        if self.is_dead(state) {
            return false;
        }
        for &letter in word.letters() {
            let code = match self.alphabet.code(letter) {
                Some(c) => c,
                None => return false,
            };
            state = self.step(state, code);
            if self.is_dead(state) {
                return false;
            }
        }
        true
    }
}

/// Builds the automaton for a finite forbidden-word list. The list should be
/// reduced; an empty word in the list (everything forbidden) is a degenerate
/// input and is reported as an error.
pub fn build_automaton(
    words: &[Word],
    alphabet: Alphabet,
) -> Result<FactorAutomaton, EngineError> {
    if words.iter().any(|w| w.is_empty()) {
        return Err(EngineError::EmptyWordForbidden);
    }
    let sigma = alphabet.len();
    let estimated = 1 + words.iter().map(Word::degree).sum::<usize>();
    if estimated.saturating_mul(sigma) > TRANSITION_LIMIT {
        return Err(EngineError::AutomatonTooLarge {
            states: estimated,
            limit: TRANSITION_LIMIT / sigma.max(1),
        });
    }

    const NONE: u32 = u32::MAX;
    let mut children: Vec<u32> = vec![NONE; sigma]; // per-state child slots
    let mut terminal: Vec<bool> = vec![false];
    for word in words {
        let mut state = 0usize;
        for &letter in word.letters() {
            let code = alphabet
                .code(letter)
                .ok_or_else(|| EngineError::ForeignLetter {
                    word: word.to_string(),
                })?;
            let slot = state * sigma + code;
            if children[slot] == NONE {
                let new_state = terminal.len() as u32;
                children[slot] = new_state;
                terminal.push(false);
                children.resize(terminal.len() * sigma, NONE);
            }
            state = children[state * sigma + code] as usize;
        }
        terminal[state] = true;
    }

    // breadth-first failure links; transitions become total as we go
    let mut fail: Vec<u32> = vec![0; terminal.len()];
    let mut transitions = children.clone();
    let mut queue = VecDeque::new();
    for code in 0..sigma {
        let child = children[code];
        if child == NONE {
            transitions[code] = 0;
        } else {
            fail[child as usize] = 0;
            queue.push_back(child);
        }
    }
    while let Some(state) = queue.pop_front() {
        let s = state as usize;
        if terminal[fail[s] as usize] {
            terminal[s] = true;
        }
        for code in 0..sigma {
            let slot = s * sigma + code;
            let child = children[slot];
            let via_fail = transitions[fail[s] as usize * sigma + code];
            if child == NONE {
                transitions[slot] = via_fail;
            } else {
                fail[child as usize] = via_fail;
                queue.push_back(child);
            }
        }
    }

    Ok(FactorAutomaton {
        alphabet,
        transitions,
        dead: terminal,
    })
}
