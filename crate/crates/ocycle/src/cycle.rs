//! Overlap cycles: assembly from Euler tours, compressed form, independent
//! verification, and the arithmetic existence predicate.
//!
//! An `s`-overlap cycle stores both views of the same object: the ordered
//! word list, and the compressed cyclic symbol string formed by writing the
//! first `n - s` symbols of each word in order. Reading `n` consecutive
//! symbols cyclically starting at position `j * (n - s)` recovers word `j`,
//! so the compressed string alone determines the cycle.

use std::fmt;

use serde::Serialize;

use crate::digraph::EulerTour;
use crate::error::ParameterError;
use crate::word::{gcd, Word};

/// A cyclic ordering of equal-length words chained by `s`-symbol overlaps,
/// together with its compressed symbol string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverlapCycle {
    overlap: usize,
    objects: Vec<Word>,
    compressed: Vec<u32>,
}

impl OverlapCycle {
    /// The overlap `s`.
    pub fn overlap(&self) -> usize {
        self.overlap
    }

    /// The words in cycle order.
    pub fn objects(&self) -> &[Word] {
        &self.objects
    }

    /// Number of words in the cycle.
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    /// The common word length `n`.
    pub fn word_len(&self) -> usize {
        self.objects[0].len()
    }

    /// The compressed cyclic string: `n - s` symbols per word, so
    /// `m * (n - s)` in total.
    pub fn compressed(&self) -> &[u32] {
        &self.compressed
    }

    /// Rebuilds a cycle from its compressed string alone by decoding at
    /// stride `word_len - overlap`. Fails unless the length is a positive
    /// multiple of the stride and the overlap fits the word length.
    pub fn from_compressed(
        word_len: usize,
        overlap: usize,
        compressed: Vec<u32>,
    ) -> Result<Self, ParameterError> {
        if overlap == 0 || overlap >= word_len {
            return Err(ParameterError::OverlapOutOfRange {
                s: overlap,
                n: word_len,
            });
        }
        let stride = word_len - overlap;
        if compressed.is_empty() || !compressed.len().is_multiple_of(stride) {
            return Err(ParameterError::BadCompressedLength {
                len: compressed.len(),
                stride,
                n: word_len,
                s: overlap,
            });
        }
        let count = compressed.len() / stride;
        let objects = decode_at_stride(&compressed, count, word_len, stride);
        Ok(OverlapCycle {
            overlap,
            objects,
            compressed,
        })
    }

    /// Rebuilds a cycle from an explicit word list, recomputing the
    /// compressed string. The list must be nonempty with equal lengths
    /// exceeding the overlap. No overlap conditions are checked here; that
    /// is [`verify_ocycle`]'s job.
    pub fn from_objects(objects: Vec<Word>, overlap: usize) -> Result<Self, ParameterError> {
        let first = objects.first().ok_or(ParameterError::EmptyObjectSet)?;
        let n = first.len();
        if let Some(bad) = objects.iter().find(|w| w.len() != n) {
            return Err(ParameterError::MixedWordLengths {
                expected: n,
                found: bad.len(),
            });
        }
        if overlap == 0 || overlap >= n {
            return Err(ParameterError::OverlapOutOfRange { s: overlap, n });
        }
        let compressed = compress(&objects, n - overlap);
        Ok(OverlapCycle {
            overlap,
            objects,
            compressed,
        })
    }

    /// The words recovered from the compressed string, independent of the
    /// stored list. Equal to [`objects`](Self::objects) exactly when the
    /// two views are consistent.
    pub fn decoded_objects(&self) -> Vec<Word> {
        decode_at_stride(
            &self.compressed,
            self.objects.len(),
            self.word_len(),
            self.word_len() - self.overlap,
        )
    }
}

impl fmt::Display for OverlapCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, sym) in self.compressed.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{sym}")?;
        }
        Ok(())
    }
}

fn compress(objects: &[Word], stride: usize) -> Vec<u32> {
    let mut compressed = Vec::with_capacity(objects.len() * stride);
    for object in objects {
        compressed.extend_from_slice(&object.symbols()[..stride]);
    }
    compressed
}

fn decode_at_stride(compressed: &[u32], count: usize, word_len: usize, stride: usize) -> Vec<Word> {
    (0..count)
        .map(|j| {
            let symbols = (0..word_len)
                .map(|i| compressed[(j * stride + i) % compressed.len()])
                .collect();
            Word::new(symbols).expect("word_len >= 1")
        })
        .collect()
}

/// Chains an Euler tour's edge labels into an overlap cycle, writing the
/// first `n - s` symbols of each label into the compressed string.
pub fn assemble_ocycle(tour: &EulerTour, s: usize) -> OverlapCycle {
    let objects: Vec<Word> = tour.labels().cloned().collect();
    assert!(!objects.is_empty(), "tours cover at least one edge");
    let n = objects[0].len();
    assert!(s >= 1 && s < n, "tour overlap out of range");
    OverlapCycle {
        overlap: s,
        objects: objects.clone(),
        compressed: compress(&objects, n - s),
    }
}

/// One defect found while verifying a cycle, or a lemma counterexample from
/// the sweep harness. Positions index the cycle's word list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    /// An expected word never appears.
    MissingObject { word: Word },
    /// A word appears that the expected set does not contain.
    UnexpectedObject { position: usize, word: Word },
    /// A word appears more than once.
    DuplicateObject { word: Word, positions: Vec<usize> },
    /// Adjacent words at `position` and `position + 1` do not overlap.
    OverlapViolation { position: usize },
    /// The final word does not chain back to the first.
    ClosureViolation { position: usize },
    /// The compressed string disagrees with the word list at this word.
    CompressionMismatch { position: usize },
    /// A claimed identity failed on a concrete input.
    LemmaCounterexample { lemma: String, detail: String },
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::MissingObject { word } => write!(f, "missing object ({word})"),
            Finding::UnexpectedObject { position, word } => {
                write!(f, "unexpected object ({word}) at position {position}")
            }
            Finding::DuplicateObject { word, positions } => {
                write!(f, "object ({word}) appears at positions {positions:?}")
            }
            Finding::OverlapViolation { position } => {
                write!(f, "overlap broken between positions {} and {}", position, position + 1)
            }
            Finding::ClosureViolation { position } => {
                write!(f, "cycle does not close: position {position} does not chain to position 0")
            }
            Finding::CompressionMismatch { position } => {
                write!(f, "compressed string disagrees with object {position}")
            }
            Finding::LemmaCounterexample { lemma, detail } => {
                write!(f, "counterexample to {lemma}: {detail}")
            }
        }
    }
}

/// Outcome of a verification: empty findings means pass.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub findings: Vec<Finding>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.findings.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass() {
            f.write_str("pass")
        } else {
            writeln!(f, "{} finding(s):", self.findings.len())?;
            for finding in &self.findings {
                writeln!(f, "  - {finding}")?;
            }
            Ok(())
        }
    }
}

/// Checks a cycle against an expected object set.
///
/// Verifies that every expected word appears exactly once, nothing else
/// appears, adjacent words overlap in exactly `s` symbols including the
/// wrap-around, and the compressed string reproduces the word list. The
/// expected set must be well formed (words of the cycle's length); order is
/// irrelevant.
pub fn verify_ocycle(
    cycle: &OverlapCycle,
    expected: &[Word],
) -> Result<VerificationReport, ParameterError> {
    let n = cycle.word_len();
    if let Some(bad) = expected.iter().find(|w| w.len() != n) {
        return Err(ParameterError::MixedWordLengths {
            expected: n,
            found: bad.len(),
        });
    }
    let s = cycle.overlap();
    let mut findings = Vec::new();

    // Exact multiset match between the cycle's words and the expected set.
    let mut positions: std::collections::BTreeMap<&Word, Vec<usize>> = Default::default();
    for (i, word) in cycle.objects().iter().enumerate() {
        positions.entry(word).or_default().push(i);
    }
    let expected_set: std::collections::BTreeSet<&Word> = expected.iter().collect();
    for word in expected {
        if !positions.contains_key(word) {
            findings.push(Finding::MissingObject { word: word.clone() });
        }
    }
    for (word, at) in &positions {
        if !expected_set.contains(*word) {
            findings.push(Finding::UnexpectedObject {
                position: at[0],
                word: (*word).clone(),
            });
        }
        if at.len() > 1 {
            findings.push(Finding::DuplicateObject {
                word: (*word).clone(),
                positions: at.clone(),
            });
        }
    }

    // Overlap conditions, wrap included.
    let m = cycle.object_count();
    for j in 0..m {
        let here = &cycle.objects()[j];
        let next = &cycle.objects()[(j + 1) % m];
        if here.suffix(s) != next.prefix(s) {
            findings.push(if j + 1 == m {
                Finding::ClosureViolation { position: j }
            } else {
                Finding::OverlapViolation { position: j }
            });
        }
    }

    // The two stored views must agree.
    for (j, (stored, decoded)) in cycle
        .objects()
        .iter()
        .zip(cycle.decoded_objects())
        .enumerate()
    {
        if *stored != decoded {
            findings.push(Finding::CompressionMismatch { position: j });
        }
    }

    Ok(VerificationReport { findings })
}

/// The arithmetic existence criterion `n - s > gcd(n, s)` for overlap
/// cycles over permutations of a size-`n` multiset and over bounded-ball
/// juggling sequences of period `n`. Requires `1 <= s <= n - 1`.
///
/// # Examples
///
/// ```
/// use ocycle::existence_predicate;
///
/// assert!(existence_predicate(5, 2).unwrap());
/// assert!(!existence_predicate(4, 2).unwrap());
/// assert!(!existence_predicate(7, 6).unwrap());
/// ```
pub fn existence_predicate(n: usize, s: usize) -> Result<bool, ParameterError> {
    if s == 0 || s >= n {
        return Err(ParameterError::OverlapOutOfRange { s, n });
    }
    Ok(n - s > gcd(n, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::build_digraph;
    use crate::enumerate::multiset_permutations;
    use crate::word::MultisetSpec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn perm_cycle(n: usize, s: usize) -> (OverlapCycle, Vec<Word>) {
        let objects: Vec<Word> =
            multiset_permutations(&MultisetSpec::all_distinct(n).unwrap()).collect();
        let tour = build_digraph(&objects, s).unwrap().euler_tour().unwrap();
        (assemble_ocycle(&tour, s), objects)
    }

    /// Test-local decoder, deliberately written differently from the
    /// library's: walks the cyclic string symbol by symbol.
    fn decode_oracle(compressed: &[u32], word_len: usize, stride: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut start = 0usize;
        for _ in 0..compressed.len() / stride {
            let mut symbols = Vec::new();
            for i in 0..word_len {
                symbols.push(compressed[(start + i) % compressed.len()]);
            }
            out.push(Word::new(symbols).unwrap());
            start += stride;
        }
        out
    }

    #[test]
    fn single_loop_word_compresses_to_its_stride() {
        let tour = build_digraph(&[w("000")], 1).unwrap().euler_tour().unwrap();
        let cycle = assemble_ocycle(&tour, 1);
        assert_eq!(cycle.compressed(), &[0, 0]);
        assert_eq!(cycle.decoded_objects(), vec![w("000")]);
        let report = verify_ocycle(&cycle, &[w("000")]).unwrap();
        assert!(report.pass(), "{report}");
    }

    #[test]
    fn assembled_permutation_cycle_verifies_and_decodes() {
        let (cycle, objects) = perm_cycle(3, 1);
        assert_eq!(cycle.object_count(), 6);
        assert_eq!(cycle.compressed().len(), 12);
        let report = verify_ocycle(&cycle, &objects).unwrap();
        assert!(report.pass(), "{report}");
        assert_eq!(
            decode_oracle(cycle.compressed(), 3, 2),
            cycle.objects().to_vec()
        );
    }

    #[test]
    fn longer_overlaps_verify_too() {
        let (cycle, objects) = perm_cycle(5, 3);
        assert_eq!(cycle.object_count(), 120);
        assert_eq!(cycle.compressed().len(), 120 * 2);
        assert!(verify_ocycle(&cycle, &objects).unwrap().pass());
        assert_eq!(
            decode_oracle(cycle.compressed(), 5, 2),
            cycle.objects().to_vec()
        );
    }

    #[test]
    fn from_compressed_round_trips() {
        let (cycle, _) = perm_cycle(4, 1);
        let rebuilt =
            OverlapCycle::from_compressed(4, 1, cycle.compressed().to_vec()).unwrap();
        assert_eq!(rebuilt, cycle);
    }

    #[test]
    fn from_compressed_rejects_ragged_lengths() {
        assert!(matches!(
            OverlapCycle::from_compressed(3, 1, vec![0, 1, 2]),
            Err(ParameterError::BadCompressedLength {
                len: 3,
                stride: 2,
                ..
            })
        ));
        assert!(matches!(
            OverlapCycle::from_compressed(3, 3, vec![0, 1, 2]),
            Err(ParameterError::OverlapOutOfRange { s: 3, n: 3 })
        ));
        assert!(matches!(
            OverlapCycle::from_compressed(3, 1, vec![]),
            Err(ParameterError::BadCompressedLength { len: 0, .. })
        ));
    }

    #[test]
    fn swapping_two_objects_breaks_overlaps() {
        let (cycle, objects) = perm_cycle(3, 1);
        let mut swapped = cycle.objects().to_vec();
        swapped.swap(1, 3);
        let tampered = OverlapCycle::from_objects(swapped, 1).unwrap();
        let report = verify_ocycle(&tampered, &objects).unwrap();
        assert!(!report.pass());
        assert!(
            report
                .findings
                .iter()
                .any(|f| matches!(f, Finding::OverlapViolation { .. })),
            "expected an overlap violation, got {report}"
        );
    }

    #[test]
    fn dropping_an_object_reports_it_missing() {
        let (cycle, objects) = perm_cycle(3, 1);
        let mut short = cycle.objects().to_vec();
        short.remove(2);
        let tampered = OverlapCycle::from_objects(short, 1).unwrap();
        let report = verify_ocycle(&tampered, &objects).unwrap();
        assert!(report
            .findings
            .iter()
            .any(|f| matches!(f, Finding::MissingObject { .. })));
    }

    #[test]
    fn duplicating_an_object_is_reported_with_positions() {
        let (cycle, objects) = perm_cycle(3, 1);
        let mut doubled = cycle.objects().to_vec();
        let copy = doubled[0].clone();
        doubled.push(copy.clone());
        let tampered = OverlapCycle::from_objects(doubled, 1).unwrap();
        let report = verify_ocycle(&tampered, &objects).unwrap();
        assert!(report.findings.iter().any(|f| matches!(
            f,
            Finding::DuplicateObject { word, positions } if *word == copy && positions.len() == 2
        )));
    }

    #[test]
    fn foreign_object_is_reported_unexpected() {
        let (cycle, _) = perm_cycle(3, 1);
        let narrowed: Vec<Word> = cycle.objects()[1..].to_vec();
        let report = verify_ocycle(&cycle, &narrowed).unwrap();
        assert!(report.findings.iter().any(|f| matches!(
            f,
            Finding::UnexpectedObject { position: 0, .. }
        )));
    }

    #[test]
    fn non_closing_order_reports_closure_violation() {
        // 012 then 120 chains forward but 120 does not wrap to 012 at s=2.
        let tampered = OverlapCycle::from_objects(vec![w("012"), w("120")], 2).unwrap();
        let expected = vec![w("012"), w("120")];
        let report = verify_ocycle(&tampered, &expected).unwrap();
        assert!(report
            .findings
            .iter()
            .any(|f| matches!(f, Finding::ClosureViolation { position: 1 })));
    }

    #[test]
    fn mismatched_expected_lengths_are_parameter_errors() {
        let (cycle, _) = perm_cycle(3, 1);
        let err = verify_ocycle(&cycle, &[w("01")]).unwrap_err();
        assert_eq!(
            err,
            ParameterError::MixedWordLengths {
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn predicate_matches_frozen_cases_and_rejects_bad_overlaps() {
        assert!(existence_predicate(5, 2).unwrap());
        assert!(!existence_predicate(4, 2).unwrap());
        for n in 2..=7usize {
            assert!(
                !existence_predicate(n, n - 1).unwrap(),
                "full-overlap case n={n} should be predicted infeasible"
            );
        }
        assert!(existence_predicate(3, 1).unwrap());
        assert!(matches!(
            existence_predicate(4, 0),
            Err(ParameterError::OverlapOutOfRange { s: 0, n: 4 })
        ));
        assert!(matches!(
            existence_predicate(4, 4),
            Err(ParameterError::OverlapOutOfRange { s: 4, n: 4 })
        ));
    }

    #[test]
    fn predicate_equals_direct_gcd_comparison_on_a_grid() {
        for n in 2..=12usize {
            for s in 1..n {
                let mut g = (n, s);
                while g.1 != 0 {
                    g = (g.1, g.0 % g.1);
                }
                assert_eq!(existence_predicate(n, s).unwrap(), n - s > g.0);
            }
        }
    }
}
