//! Juggling sequences (siteswap patterns) of a fixed period.
//!
//! A word `t_0 t_1 ... t_{n-1}` of throw heights is a juggling sequence when
//! no two throws land at the same time: the landing slots `(i + t_i) mod n`
//! must all be distinct. Equivalently, the permutation sequence
//! `p_i = (t_i + i) mod n` must be a permutation of `{0, ..., n-1}`. The
//! average throw height of a valid sequence is an integer, the number of
//! balls in flight.

use std::fmt;

use serde::Serialize;

use crate::error::ParameterError;
use crate::word::Word;

/// True when the throw heights land in pairwise distinct slots modulo the
/// period.
///
/// # Examples
///
/// ```
/// use ocycle::{validate_juggling, Word};
///
/// assert!(validate_juggling(&"015".parse::<Word>().unwrap()));
/// assert!(!validate_juggling(&"105".parse::<Word>().unwrap()));
/// ```
pub fn validate_juggling(word: &Word) -> bool {
    permutation_sequence(word).is_permutation()
}

/// The landing-slot word `p_i = (t_i + i) mod n` of any height word.
pub fn permutation_sequence(word: &Word) -> PermutationSequence {
    let n = word.len() as u64;
    let symbols = word
        .symbols()
        .iter()
        .enumerate()
        .map(|(i, &t)| ((t as u64 + i as u64) % n) as u32)
        .collect();
    PermutationSequence(Word::new(symbols).expect("source word is nonempty"))
}

/// Adds the period to digit `index`, the inverse of [`reduce_digit`]. Both
/// directions preserve whether the word is a juggling sequence; raising a
/// digit adds one ball.
pub fn raise_digit(word: &Word, index: usize) -> Result<Word, ParameterError> {
    let n = word.len();
    let mut symbols = word.symbols().to_vec();
    match symbols.get_mut(index) {
        Some(digit) => *digit += n as u32,
        None => return Err(ParameterError::IndexOutOfRange { index, n }),
    }
    Word::new(symbols)
}

/// Subtracts the period from digit `index`, which must be at least the
/// period. Preserves whether the word is a juggling sequence; lowering a
/// digit removes one ball.
///
/// No normalization happens implicitly anywhere in the crate: two sequences
/// differing by a multiple of the period in one digit are distinct objects.
///
/// # Examples
///
/// ```
/// use ocycle::{reduce_digit, Word};
///
/// let w: Word = "504".parse().unwrap();
/// assert_eq!(reduce_digit(&w, 0).unwrap().to_string(), "2 0 4");
/// ```
pub fn reduce_digit(word: &Word, index: usize) -> Result<Word, ParameterError> {
    let n = word.len();
    let mut symbols = word.symbols().to_vec();
    match symbols.get_mut(index) {
        Some(digit) if (*digit as usize) >= n => *digit -= n as u32,
        Some(&mut digit) => return Err(ParameterError::DigitTooSmall { index, digit, n }),
        None => return Err(ParameterError::IndexOutOfRange { index, n }),
    }
    Word::new(symbols)
}

/// The landing-slot word of a height word; a permutation of `{0, ..., n-1}`
/// exactly when the heights form a juggling sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct PermutationSequence(Word);

impl PermutationSequence {
    /// True when every slot `0..n` appears exactly once.
    pub fn is_permutation(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        for &p in self.0.symbols() {
            // Entries are reduced mod n at construction, so p < n always.
            if std::mem::replace(&mut seen[p as usize], true) {
                return false;
            }
        }
        true
    }

    /// The underlying word.
    pub fn word(&self) -> &Word {
        &self.0
    }

    /// Slot at position `i`, if in range.
    pub fn get(&self, i: usize) -> Option<u32> {
        self.0.get(i)
    }
}

impl fmt::Display for PermutationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A validated juggling sequence with its ball count.
///
/// Construction checks validity once, so holders of this type never need to
/// re-validate. Sequences order by their height word, matching [`Word`]'s
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct JugglingSequence {
    word: Word,
    #[serde(skip)]
    balls: u32,
}

impl JugglingSequence {
    /// Validates the height word and computes the ball count.
    pub fn new(word: Word) -> Result<Self, ParameterError> {
        if !validate_juggling(&word) {
            return Err(ParameterError::NotAJugglingSequence {
                word: word.to_string(),
            });
        }
        let total: u64 = word.symbols().iter().map(|&t| t as u64).sum();
        let n = word.len() as u64;
        debug_assert_eq!(total % n, 0, "height sum of a valid sequence is n * b");
        let balls = (total / n) as u32;
        Ok(JugglingSequence { word, balls })
    }

    /// Average throw height: the number of balls in flight.
    pub fn ball_count(&self) -> u32 {
        self.balls
    }

    /// Length of the height word.
    pub fn period(&self) -> usize {
        self.word.len()
    }

    /// The height word.
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Consumes the sequence, returning the height word.
    pub fn into_word(self) -> Word {
        self.word
    }
}

impl fmt::Display for JugglingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn validity_of_the_canonical_pair() {
        // 015 juggles with two balls; swapping the first two throws makes
        // everything land at slot 1.
        assert!(validate_juggling(&w("015")));
        assert!(!validate_juggling(&w("105")));
    }

    #[test]
    fn constant_and_tiny_sequences() {
        assert!(validate_juggling(&w("000")));
        assert!(validate_juggling(&w("3")));
        assert!(validate_juggling(&w("333")));
        assert!(validate_juggling(&w("441")));
        assert!(!validate_juggling(&w("543")));
    }

    #[test]
    fn permutation_sequences_of_the_canonical_pair() {
        assert_eq!(permutation_sequence(&w("015")).word(), &w("021"));
        let degenerate = permutation_sequence(&w("105"));
        assert_eq!(degenerate.word(), &w("111"));
        assert!(!degenerate.is_permutation());
    }

    #[test]
    fn ball_counts_are_average_heights() {
        assert_eq!(JugglingSequence::new(w("015")).unwrap().ball_count(), 2);
        assert_eq!(JugglingSequence::new(w("333")).unwrap().ball_count(), 3);
        assert_eq!(JugglingSequence::new(w("000")).unwrap().ball_count(), 0);
        assert_eq!(JugglingSequence::new(w("441")).unwrap().ball_count(), 3);
    }

    #[test]
    fn invalid_sequences_are_rejected_at_construction() {
        let err = JugglingSequence::new(w("105")).unwrap_err();
        assert_eq!(
            err,
            ParameterError::NotAJugglingSequence {
                word: "1 0 5".to_string()
            }
        );
    }

    #[test]
    fn reduce_digit_subtracts_one_period() {
        assert_eq!(reduce_digit(&w("504"), 0).unwrap(), w("204"));
        assert!(validate_juggling(&w("504")));
        assert!(validate_juggling(&w("204")));
        assert_eq!(
            reduce_digit(&w("504"), 1).unwrap_err(),
            ParameterError::DigitTooSmall {
                index: 1,
                digit: 0,
                n: 3
            }
        );
        assert_eq!(
            reduce_digit(&w("504"), 9).unwrap_err(),
            ParameterError::IndexOutOfRange { index: 9, n: 3 }
        );
    }

    #[test]
    fn raise_and_reduce_are_inverse_and_shift_ball_count() {
        let base = JugglingSequence::new(w("015")).unwrap();
        let raised = JugglingSequence::new(raise_digit(base.word(), 0).unwrap()).unwrap();
        assert_eq!(raised.word(), &w("315"));
        assert_eq!(raised.ball_count(), base.ball_count() + 1);
        assert_eq!(reduce_digit(raised.word(), 0).unwrap(), w("015"));
    }

    #[test]
    fn digit_shifts_preserve_validity_in_both_directions_exhaustively() {
        // Every word of period <= 4 with digits below twice the period.
        for n in 1..=4usize {
            let cap = 2 * n;
            let total = cap.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let digits: Vec<u32> = (0..n)
                    .map(|_| {
                        let d = (c % cap) as u32;
                        c /= cap;
                        d
                    })
                    .collect();
                let word = Word::new(digits.clone()).unwrap();
                let valid = validate_juggling(&word);
                for (i, &digit) in digits.iter().enumerate() {
                    assert_eq!(
                        validate_juggling(&raise_digit(&word, i).unwrap()),
                        valid,
                        "raising digit {i} of {word} changed validity"
                    );
                    if digit >= n as u32 {
                        assert_eq!(
                            validate_juggling(&reduce_digit(&word, i).unwrap()),
                            valid,
                            "reducing digit {i} of {word} changed validity"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rotation_preserves_validity_exhaustively_for_small_periods() {
        for n in 1..=4usize {
            let cap = (2 * n) as u32;
            let total = (cap as usize).pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let digits: Vec<u32> = (0..n)
                    .map(|_| {
                        let d = (c % cap as usize) as u32;
                        c /= cap as usize;
                        d
                    })
                    .collect();
                let word = Word::new(digits).unwrap();
                let valid = validate_juggling(&word);
                for s in 0..=n {
                    assert_eq!(
                        validate_juggling(&word.rotate(s).unwrap()),
                        valid,
                        "rotating {word} by {s} changed validity"
                    );
                }
            }
        }
    }
}
