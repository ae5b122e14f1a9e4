//! Words over a nonnegative integer alphabet, multiset specifications, and
//! block decompositions.
//!
//! A [`Word`] is the basic object everywhere in this crate: a fixed-length
//! string of symbols. Overlap cycles chain words by matching the suffix of
//! one against the prefix of the next, and the block machinery here (cutting
//! a word into `gcd(n, s)`-sized blocks, finding which rotation starts at a
//! given block) is what relates rotations of a word to walks in the
//! transition digraph.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParameterError;

/// Greatest common divisor of two integers, `gcd(0, b) = b`.
pub fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A nonempty, fixed-length string of nonnegative integer symbols.
///
/// Words compare lexicographically (the derived ordering on the underlying
/// vector), which the engine relies on for deterministic vertex and edge
/// ordering.
///
/// # Examples
///
/// ```
/// use ocycle::Word;
///
/// let w: Word = "015".parse().unwrap();
/// assert_eq!(w.len(), 3);
/// assert_eq!(w.to_string(), "0 1 5");
/// assert_eq!("0 1 5".parse::<Word>().unwrap(), w);
/// ```
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<u32>);

impl Word {
    /// Wraps a symbol vector, rejecting the empty word.
    pub fn new(symbols: Vec<u32>) -> Result<Self, ParameterError> {
        if symbols.is_empty() {
            return Err(ParameterError::EmptyWord);
        }
        Ok(Word(symbols))
    }

    /// Number of symbols, always at least 1.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept so clippy-style `len`/`is_empty` pairs line up.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The symbols as a slice.
    pub fn symbols(&self) -> &[u32] {
        &self.0
    }

    /// Symbol at `index`, if in range.
    pub fn get(&self, index: usize) -> Option<u32> {
        self.0.get(index).copied()
    }

    /// The first `s` symbols as a new word.
    ///
    /// # Panics
    ///
    /// Panics if `s` is 0 or exceeds the length.
    pub fn prefix(&self, s: usize) -> Word {
        assert!(s >= 1 && s <= self.len(), "prefix length {s} out of range");
        Word(self.0[..s].to_vec())
    }

    /// The last `s` symbols as a new word.
    ///
    /// # Panics
    ///
    /// Panics if `s` is 0 or exceeds the length.
    pub fn suffix(&self, s: usize) -> Word {
        assert!(s >= 1 && s <= self.len(), "suffix length {s} out of range");
        Word(self.0[self.len() - s..].to_vec())
    }

    /// Left rotation by `s` positions: symbol `i` of the result is symbol
    /// `(i + s) mod n` of `self`. Accepts the full range `0 <= s <= n`;
    /// both endpoints are the identity.
    ///
    /// # Examples
    ///
    /// ```
    /// use ocycle::Word;
    ///
    /// let w: Word = "01234".parse().unwrap();
    /// assert_eq!(w.rotate(2).unwrap().to_string(), "2 3 4 0 1");
    /// assert_eq!(w.rotate(0).unwrap(), w);
    /// assert_eq!(w.rotate(5).unwrap(), w);
    /// assert!(w.rotate(6).is_err());
    /// ```
    pub fn rotate(&self, s: usize) -> Result<Word, ParameterError> {
        let n = self.len();
        if s > n {
            return Err(ParameterError::RotationOutOfRange { s, n });
        }
        let mut out = Vec::with_capacity(n);
        out.extend_from_slice(&self.0[s..]);
        out.extend_from_slice(&self.0[..s]);
        Ok(Word(out))
    }

    /// Cuts the word into consecutive blocks of `block_size` symbols.
    /// Fails unless `block_size` divides the length.
    pub fn block_decompose(&self, block_size: usize) -> Result<BlockDecomposition, ParameterError> {
        let n = self.len();
        if block_size == 0 || !n.is_multiple_of(block_size) {
            return Err(ParameterError::BlockSizeMismatch { d: block_size, n });
        }
        let blocks = self
            .0
            .chunks_exact(block_size)
            .map(|c| Word(c.to_vec()))
            .collect();
        Ok(BlockDecomposition {
            source: self.clone(),
            block_size,
            blocks,
        })
    }

    /// Consumes the word, returning its symbols.
    pub fn into_symbols(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, sym) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{sym}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = ParameterError;

    /// Parses either whitespace/comma separated integers (`"0 1 5"`,
    /// `"0,1,5"`) or, when no separators appear, one symbol per decimal
    /// digit (`"015"`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let symbols: Vec<u32> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>().map_err(|_| ParameterError::InvalidSymbol {
                        token: t.to_string(),
                    })
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10).ok_or(ParameterError::InvalidSymbol {
                        token: c.to_string(),
                    })
                })
                .collect::<Result<_, _>>()?
        };
        Word::new(symbols)
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Self {
        w.0
    }
}

/// A multiset of symbols given by per-symbol multiplicities.
///
/// The permutations of a multiset are all distinct arrangements of its
/// symbols; [`crate::enumerate::multiset_permutations`] lists them in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultisetSpec {
    counts: BTreeMap<u32, u32>,
}

impl MultisetSpec {
    /// Builds a multiset from explicit multiplicities. Every multiplicity
    /// must be positive and the map nonempty.
    pub fn from_counts(counts: BTreeMap<u32, u32>) -> Result<Self, ParameterError> {
        if counts.is_empty() {
            return Err(ParameterError::EmptyMultiset);
        }
        if let Some((&symbol, _)) = counts.iter().find(|(_, &m)| m == 0) {
            return Err(ParameterError::ZeroMultiplicity { symbol });
        }
        Ok(MultisetSpec { counts })
    }

    /// Builds a multiset from a list of symbols with repetition.
    pub fn from_symbols(symbols: &[u32]) -> Result<Self, ParameterError> {
        if symbols.is_empty() {
            return Err(ParameterError::EmptyMultiset);
        }
        let mut counts = BTreeMap::new();
        for &s in symbols {
            *counts.entry(s).or_insert(0u32) += 1;
        }
        Ok(MultisetSpec { counts })
    }

    /// The multiset `{0, 1, ..., n - 1}` with every symbol appearing once.
    pub fn all_distinct(n: usize) -> Result<Self, ParameterError> {
        if n == 0 {
            return Err(ParameterError::EmptyMultiset);
        }
        Ok(MultisetSpec {
            counts: (0..n as u32).map(|s| (s, 1)).collect(),
        })
    }

    /// Total size counted with multiplicity; the length of each permutation.
    pub fn size(&self) -> usize {
        self.counts.values().map(|&m| m as usize).sum()
    }

    /// Multiplicity of `symbol`, zero if absent.
    pub fn multiplicity(&self, symbol: u32) -> u32 {
        self.counts.get(&symbol).copied().unwrap_or(0)
    }

    /// Number of distinct symbols.
    pub fn distinct_symbols(&self) -> usize {
        self.counts.len()
    }

    /// The multiplicity map, keyed by symbol in increasing order.
    pub fn counts(&self) -> &BTreeMap<u32, u32> {
        &self.counts
    }

    /// The symbols expanded with repetition in increasing order. This is
    /// also the lexicographically least permutation of the multiset.
    pub fn sorted_symbols(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        for (&sym, &mult) in &self.counts {
            out.extend(std::iter::repeat_n(sym, mult as usize));
        }
        out
    }

    /// Number of distinct permutations: the multinomial coefficient
    /// `n! / (m_1! m_2! ...)`.
    pub fn permutation_count(&self) -> u128 {
        // Multiply n!/(prod m_i!) incrementally to keep intermediates small:
        // place each symbol class into the remaining positions.
        let mut count: u128 = 1;
        let mut placed: usize = 0;
        for &mult in self.counts.values() {
            for i in 0..mult as usize {
                placed += 1;
                count = count * placed as u128 / (i as u128 + 1);
            }
        }
        count
    }
}

impl fmt::Display for MultisetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for (&sym, &mult) in &self.counts {
            for _ in 0..mult {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{sym}")?;
                first = false;
            }
        }
        f.write_str("}")
    }
}

/// A word cut into `m` consecutive blocks of equal size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    source: Word,
    block_size: usize,
    blocks: Vec<Word>,
}

impl BlockDecomposition {
    /// The decomposed word.
    pub fn source(&self) -> &Word {
        &self.source
    }

    /// Symbols per block.
    pub fn block_size(&self) -> usize {
        self.block_size
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The blocks in order.
    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    /// Block `i`, if in range.
    pub fn block(&self, i: usize) -> Option<&Word> {
        self.blocks.get(i)
    }

    /// Sum of the symbols in block `i`.
    pub fn weight(&self, i: usize) -> Result<u64, ParameterError> {
        let block = self
            .blocks
            .get(i)
            .ok_or(ParameterError::BlockIndexOutOfRange {
                i,
                n: self.source.len(),
                d: self.block_size,
                m: self.blocks.len(),
            })?;
        Ok(block.symbols().iter().map(|&x| x as u64).sum())
    }

    /// The word obtained by rotating the block order to start at block `i`.
    pub fn rotated_to_block(&self, i: usize) -> Result<Word, ParameterError> {
        if i >= self.blocks.len() {
            return Err(ParameterError::BlockIndexOutOfRange {
                i,
                n: self.source.len(),
                d: self.block_size,
                m: self.blocks.len(),
            });
        }
        self.source.rotate(i * self.block_size)
    }
}

/// For a word length `n` and overlap `s`, the least `j >= 0` such that
/// rotating `j` times by `s` lands on the rotation that starts at block `i`
/// of the `gcd(n, s)`-block decomposition. Equivalently, the least solution
/// of `j * s = i * gcd(n, s) (mod n)`.
///
/// A solution always exists: writing `n = m * d` and `s = k * d` with
/// `d = gcd(n, s)` forces `gcd(m, k) = 1`, so `k` is invertible mod `m`.
///
/// # Examples
///
/// ```
/// use ocycle::block_rotation_exponent;
///
/// assert_eq!(block_rotation_exponent(6, 4, 1).unwrap(), 2);
/// assert_eq!(block_rotation_exponent(5, 2, 3).unwrap(), 4);
/// ```
pub fn block_rotation_exponent(n: usize, s: usize, i: usize) -> Result<usize, ParameterError> {
    if s == 0 || s >= n {
        return Err(ParameterError::OverlapOutOfRange { s, n });
    }
    let d = gcd(n, s);
    let m = n / d;
    if i >= m {
        return Err(ParameterError::BlockIndexOutOfRange { i, n, d, m });
    }
    for j in 0..m {
        if (j * s) % n == (i * d) % n {
            return Ok(j);
        }
    }
    unreachable!("j * s mod n cycles through every multiple of gcd(n, s)")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn rotation_matches_hand_expanded_examples() {
        assert_eq!(w("01234").rotate(2).unwrap(), w("23401"));
        assert_eq!(w("015").rotate(1).unwrap(), w("150"));
        assert_eq!(w("015").rotate(2).unwrap(), w("501"));
    }

    #[test]
    fn rotation_endpoints_are_identity_and_beyond_is_rejected() {
        let x = w("0123");
        assert_eq!(x.rotate(0).unwrap(), x);
        assert_eq!(x.rotate(4).unwrap(), x);
        assert_eq!(
            x.rotate(5).unwrap_err(),
            ParameterError::RotationOutOfRange { s: 5, n: 4 }
        );
    }

    #[test]
    fn repeated_rotation_by_s_returns_home_after_n_over_gcd_steps() {
        for n in 1..=8usize {
            let x = Word::new((0..n as u32).collect()).unwrap();
            for s in 0..=n {
                let period = if s == 0 || s == n { 1 } else { n / gcd(n, s) };
                let mut y = x.clone();
                for _ in 0..period {
                    y = y.rotate(s).unwrap();
                }
                assert_eq!(y, x, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn block_decomposition_splits_evenly_and_rejects_ragged_sizes() {
        let dec = w("012345").block_decompose(2).unwrap();
        assert_eq!(dec.block_count(), 3);
        assert_eq!(dec.blocks(), &[w("01"), w("23"), w("45")]);
        assert_eq!(dec.weight(2).unwrap(), 9);
        assert_eq!(dec.rotated_to_block(1).unwrap(), w("234501"));

        assert_eq!(
            w("012345").block_decompose(4).unwrap_err(),
            ParameterError::BlockSizeMismatch { d: 4, n: 6 }
        );
        assert_eq!(
            w("012345").block_decompose(0).unwrap_err(),
            ParameterError::BlockSizeMismatch { d: 0, n: 6 }
        );
    }

    #[test]
    fn block_rotation_exponent_matches_frozen_cases() {
        // n = 6, s = 4: d = 2, blocks 01|23|45; two rotations by 4 start at
        // block 1 (2*4 = 8 = 2 mod 6).
        assert_eq!(block_rotation_exponent(6, 4, 1).unwrap(), 2);
        // n = 5, s = 2: d = 1; 4*2 = 8 = 3 mod 5.
        assert_eq!(block_rotation_exponent(5, 2, 3).unwrap(), 4);
    }

    #[test]
    fn block_rotation_exponent_is_least_and_reaches_every_block() {
        for n in 2..=12usize {
            for s in 1..n {
                let d = gcd(n, s);
                let m = n / d;
                let x = Word::new((0..n as u32).collect()).unwrap();
                let dec = x.block_decompose(d).unwrap();
                for i in 0..m {
                    let j = block_rotation_exponent(n, s, i).unwrap();
                    // Least solution: no smaller exponent works.
                    for j_smaller in 0..j {
                        assert_ne!(
                            (j_smaller * s) % n,
                            (i * d) % n,
                            "smaller exponent found for n={n} s={s} i={i}"
                        );
                    }
                    // Rotating j times by s starts the word at block i.
                    assert_eq!(
                        x.rotate((j * s) % n).unwrap(),
                        dec.rotated_to_block(i).unwrap(),
                        "n={n} s={s} i={i} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn block_rotation_exponent_zero_block_needs_no_rotation() {
        for n in 2..=9usize {
            for s in 1..n {
                assert_eq!(block_rotation_exponent(n, s, 0).unwrap(), 0);
            }
        }
    }

    #[test]
    fn block_rotation_exponent_validates_parameters() {
        assert!(matches!(
            block_rotation_exponent(6, 0, 0),
            Err(ParameterError::OverlapOutOfRange { s: 0, n: 6 })
        ));
        assert!(matches!(
            block_rotation_exponent(6, 6, 0),
            Err(ParameterError::OverlapOutOfRange { s: 6, n: 6 })
        ));
        assert!(matches!(
            block_rotation_exponent(6, 4, 3),
            Err(ParameterError::BlockIndexOutOfRange { i: 3, m: 3, .. })
        ));
    }

    #[test]
    fn multiset_spec_counts_sizes_and_permutations() {
        let m = MultisetSpec::from_symbols(&[0, 0, 1, 2]).unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(m.multiplicity(0), 2);
        assert_eq!(m.multiplicity(7), 0);
        assert_eq!(m.distinct_symbols(), 3);
        assert_eq!(m.sorted_symbols(), vec![0, 0, 1, 2]);
        // 4! / 2! = 12
        assert_eq!(m.permutation_count(), 12);

        let d = MultisetSpec::all_distinct(5).unwrap();
        assert_eq!(d.permutation_count(), 120);

        let single = MultisetSpec::from_symbols(&[3, 3, 3]).unwrap();
        assert_eq!(single.permutation_count(), 1);
    }

    #[test]
    fn multiset_spec_permutation_count_matches_factorial_ratio() {
        // Independent multinomial: n! / prod(m_i!) computed directly.
        fn fact(x: u128) -> u128 {
            (1..=x).product::<u128>().max(1)
        }
        let cases: Vec<Vec<u32>> = vec![
            vec![0],
            vec![0, 1, 2, 3],
            vec![0, 0, 1, 1],
            vec![0, 0, 0, 1, 2, 2],
            vec![5, 5, 5, 5],
        ];
        for symbols in cases {
            let m = MultisetSpec::from_symbols(&symbols).unwrap();
            let mut denom = 1u128;
            for &mult in m.counts().values() {
                denom *= fact(mult as u128);
            }
            assert_eq!(m.permutation_count(), fact(m.size() as u128) / denom);
        }
    }

    #[test]
    fn multiset_spec_rejects_empty_and_zero_multiplicity() {
        assert_eq!(
            MultisetSpec::from_symbols(&[]).unwrap_err(),
            ParameterError::EmptyMultiset
        );
        let mut counts = BTreeMap::new();
        counts.insert(4u32, 0u32);
        assert_eq!(
            MultisetSpec::from_counts(counts).unwrap_err(),
            ParameterError::ZeroMultiplicity { symbol: 4 }
        );
    }

    #[test]
    fn word_parsing_accepts_digits_and_separated_forms() {
        assert_eq!(w("015"), Word::new(vec![0, 1, 5]).unwrap());
        assert_eq!(w("0 1 5"), Word::new(vec![0, 1, 5]).unwrap());
        assert_eq!(w("10,0,12"), Word::new(vec![10, 0, 12]).unwrap());
        assert!("".parse::<Word>().is_err());
        assert!("0 x 1".parse::<Word>().is_err());
    }

    #[test]
    fn words_order_lexicographically() {
        assert!(w("012") < w("021"));
        assert!(w("10") > w("012"));
        let mut v = vec![w("21"), w("01"), w("20"), w("02")];
        v.sort();
        assert_eq!(v, vec![w("01"), w("02"), w("20"), w("21")]);
    }
}
