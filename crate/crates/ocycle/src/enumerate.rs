//! Exhaustive enumerators for the object families the engine cycles over.
//!
//! Every enumerator yields words in strictly increasing lexicographic order
//! with no duplicates. Deterministic order matters downstream: the engine
//! sorts digraph edges by label, so reproducible object streams give
//! byte-reproducible cycles.

use crate::error::ParameterError;
use crate::juggling::JugglingSequence;
use crate::word::{MultisetSpec, Word};

/// All distinct permutations of a multiset in lexicographic order.
///
/// # Examples
///
/// ```
/// use ocycle::{multiset_permutations, MultisetSpec};
///
/// let spec = MultisetSpec::from_symbols(&[0, 0, 1]).unwrap();
/// let words: Vec<String> = multiset_permutations(&spec)
///     .map(|w| w.to_string())
///     .collect();
/// assert_eq!(words, ["0 0 1", "0 1 0", "1 0 0"]);
/// ```
pub fn multiset_permutations(spec: &MultisetSpec) -> MultisetPermutations {
    MultisetPermutations {
        next: Some(spec.sorted_symbols()),
    }
}

/// Iterator over multiset permutations; see [`multiset_permutations`].
pub struct MultisetPermutations {
    next: Option<Vec<u32>>,
}

impl Iterator for MultisetPermutations {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Word::new(current).expect("multisets are nonempty"))
    }
}

/// The next arrangement in lexicographic order, or None at the last one.
fn successor(a: &[u32]) -> Option<Vec<u32>> {
    let mut a = a.to_vec();
    let n = a.len();
    // Rightmost ascent; beyond it the suffix is weakly decreasing.
    let i = (0..n.saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1])?;
    // Rightmost element exceeding the pivot.
    let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).expect("ascent exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    Some(a)
}

/// All arrangements of `k` distinct symbols drawn from `{0, ..., n - 1}`,
/// in lexicographic order. Requires `1 <= k <= n`.
pub fn k_permutations(n: usize, k: usize) -> Result<KPermutations, ParameterError> {
    if k == 0 || k > n {
        return Err(ParameterError::SelectionOutOfRange { k, n });
    }
    Ok(KPermutations {
        n,
        next: Some((0..k as u32).collect()),
    })
}

/// Iterator over k-permutations; see [`k_permutations`].
pub struct KPermutations {
    n: usize,
    next: Option<Vec<u32>>,
}

impl Iterator for KPermutations {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        self.next = self.advance(&current);
        Some(Word::new(current).expect("k >= 1"))
    }
}

impl KPermutations {
    /// Lexicographic successor: scan positions right to left, bump the
    /// first position that can take a larger unused symbol, then fill the
    /// tail with the smallest unused symbols in order.
    fn advance(&self, current: &[u32]) -> Option<Vec<u32>> {
        let k = current.len();
        let mut used = vec![false; self.n];
        for &c in current {
            used[c as usize] = true;
        }
        for pos in (0..k).rev() {
            used[current[pos] as usize] = false;
            let bumped = (current[pos] as usize + 1..self.n).find(|&c| !used[c]);
            if let Some(c) = bumped {
                let mut next = current[..pos].to_vec();
                next.push(c as u32);
                used[c] = true;
                let free = (0..self.n).filter(|&sym| !used[sym]);
                next.extend(free.take(k - next.len()).map(|sym| sym as u32));
                return Some(next);
            }
        }
        None
    }
}

/// All length-`n` strings over the alphabet `{0, ..., h - 1}` in which every
/// letter appears at least once, in lexicographic order. Requires
/// `1 <= h <= n`.
///
/// # Examples
///
/// ```
/// use ocycle::surjective_strings;
///
/// let words: Vec<String> = surjective_strings(3, 2)
///     .unwrap()
///     .map(|w| w.to_string())
///     .collect();
/// assert_eq!(words, ["0 0 1", "0 1 0", "0 1 1", "1 0 0", "1 0 1", "1 1 0"]);
/// ```
pub fn surjective_strings(n: usize, h: u32) -> Result<SurjectiveStrings, ParameterError> {
    if h == 0 || h as usize > n {
        return Err(ParameterError::AlphabetOutOfRange { h, n });
    }
    Ok(SurjectiveStrings {
        h,
        next: Some(vec![0; n]),
    })
}

/// Iterator over surjective strings; see [`surjective_strings`].
pub struct SurjectiveStrings {
    h: u32,
    next: Option<Vec<u32>>,
}

impl Iterator for SurjectiveStrings {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            let current = self.next.take()?;
            self.next = odometer(&current, self.h);
            if covers_alphabet(&current, self.h) {
                return Some(Word::new(current).expect("n >= 1"));
            }
        }
    }
}

fn covers_alphabet(word: &[u32], h: u32) -> bool {
    let mut seen = vec![false; h as usize];
    for &c in word {
        seen[c as usize] = true;
    }
    seen.iter().all(|&s| s)
}

/// Base-`h` increment, least significant position last.
fn odometer(word: &[u32], h: u32) -> Option<Vec<u32>> {
    let mut next = word.to_vec();
    for pos in (0..next.len()).rev() {
        if next[pos] + 1 < h {
            next[pos] += 1;
            return Some(next);
        }
        next[pos] = 0;
    }
    None
}

/// All juggling sequences of period `n` with at most `max_balls` balls,
/// sorted lexicographically.
///
/// Enumeration runs constructively rather than by filtering: every valid
/// sequence determines a permutation `p_i = (t_i + i) mod n` of the landing
/// slots, and conversely each permutation `p` yields the base heights
/// `t_i = (p_i - i) mod n`, the unique representative with all digits below
/// `n`. Raising digits by multiples of `n` (one ball each) generates the
/// rest, so the map from (permutation, per-digit raise counts) to sequences
/// is a bijection.
///
/// # Examples
///
/// ```
/// use ocycle::enumerate_juggling_sequences;
///
/// let words: Vec<String> = enumerate_juggling_sequences(1, 2)
///     .unwrap()
///     .iter()
///     .map(|j| j.to_string())
///     .collect();
/// assert_eq!(words, ["0", "1", "2"]);
/// ```
pub fn enumerate_juggling_sequences(
    n: usize,
    max_balls: u32,
) -> Result<Vec<JugglingSequence>, ParameterError> {
    if n == 0 {
        return Err(ParameterError::ZeroPeriod);
    }
    let mut out = Vec::new();
    let spec = MultisetSpec::all_distinct(n)?;
    for perm in multiset_permutations(&spec) {
        let base: Vec<u32> = perm
            .symbols()
            .iter()
            .enumerate()
            .map(|(i, &p)| (p + n as u32 - i as u32) % n as u32)
            .collect();
        let base_balls: u32 = {
            let total: u64 = base.iter().map(|&t| t as u64).sum();
            debug_assert_eq!(total % n as u64, 0);
            (total / n as u64) as u32
        };
        if base_balls > max_balls {
            continue;
        }
        let budget = max_balls - base_balls;
        push_raises(&base, 0, budget, n as u32, &mut out);
    }
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]), "duplicate sequence");
    Ok(out)
}

/// Extends `base` by every way of spending at most `budget` raises on the
/// digits from `pos` onward.
fn push_raises(base: &[u32], pos: usize, budget: u32, n: u32, out: &mut Vec<JugglingSequence>) {
    if pos == base.len() {
        let word = Word::new(base.to_vec()).expect("n >= 1");
        out.push(JugglingSequence::new(word).expect("raised digits keep validity"));
        return;
    }
    for raises in 0..=budget {
        let mut next = base.to_vec();
        next[pos] += raises * n;
        push_raises(&next, pos + 1, budget - raises, n, out);
    }
}
