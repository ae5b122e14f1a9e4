//! On-disk interchange format for overlap cycles.
//!
//! Two encodings of the same data:
//!
//! * **text** (the default): a JSON header object on the first line, the
//!   compressed cycle as space-separated integers on the second, and
//!   optionally one object per line after that:
//!
//!   ```text
//!   {"family":"perms","n":3,"s":1,"m":6}
//!   0 1 2 1 0 2 0 2 1 2 0 1
//!   ```
//!
//! * **json**: one JSON object `{"header": ..., "compressed": [...],
//!   "objects": [...]}` covering the whole file.
//!
//! [`CycleFile::parse`] accepts either; a file that parses as a JSON object
//! with a `header` key is read as the json encoding, anything else as text.
//! The header carries enough to regenerate the object family from scratch
//! ([`CycleHeader::expected_objects`]), so a cycle file can always be
//! re-verified without trusting its optional object listing.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cycle::OverlapCycle;
use crate::enumerate::{
    enumerate_juggling_sequences, k_permutations, multiset_permutations, surjective_strings,
};
use crate::error::ParameterError;
use crate::harness::FamilyParams;
use crate::word::{MultisetSpec, Word};

/// First line of the text encoding. `family` is one of `perms`,
/// `msetperms`, `kperms`, `surjections`, or `juggling`; `n` is the word
/// length (ground set size for `kperms`, period for `juggling`); `m` is the
/// number of objects on the cycle. The optional fields belong to single
/// families: `k` to `kperms`, `h` to `surjections`, `b` to `juggling`,
/// `multiset` to `msetperms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleHeader {
    pub family: String,
    pub n: usize,
    pub s: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiset: Option<Vec<u32>>,
    pub m: usize,
}

impl CycleHeader {
    /// Builds the header for a cycle over `m` objects from family
    /// parameters. `n` is the family-level size: the period for juggling
    /// sequences and the ground set size for k-permutations (the word
    /// length is then `k`, not `n`).
    pub fn new(params: &FamilyParams, n: usize, s: usize, m: usize) -> CycleHeader {
        let mut header = CycleHeader {
            family: String::new(),
            n,
            s,
            k: None,
            h: None,
            b: None,
            multiset: None,
            m,
        };
        match params {
            FamilyParams::MultisetPermutations { symbols } => {
                let all_distinct = symbols
                    .iter()
                    .enumerate()
                    .all(|(i, &sym)| sym == i as u32);
                if all_distinct {
                    header.family = "perms".into();
                } else {
                    header.family = "msetperms".into();
                    header.multiset = Some(symbols.clone());
                }
            }
            FamilyParams::JugglingSequences { max_balls } => {
                header.family = "juggling".into();
                header.b = Some(*max_balls);
            }
            FamilyParams::SurjectiveStrings { alphabet } => {
                header.family = "surjections".into();
                header.h = Some(*alphabet);
            }
            FamilyParams::KPermutations { ground, k } => {
                header.family = "kperms".into();
                header.n = *ground;
                header.k = Some(*k);
            }
        }
        header
    }

    fn require<T: Copy>(&self, field: &str, value: Option<T>) -> Result<T, ParameterError> {
        value.ok_or_else(|| ParameterError::MissingHeaderField {
            family: self.family.clone(),
            field: field.into(),
        })
    }

    /// Recovers the family parameters named by this header.
    pub fn family_params(&self) -> Result<FamilyParams, ParameterError> {
        match self.family.as_str() {
            "perms" => Ok(FamilyParams::MultisetPermutations {
                symbols: (0..self.n as u32).collect(),
            }),
            "msetperms" => {
                let symbols = self
                    .multiset
                    .clone()
                    .ok_or_else(|| ParameterError::MissingHeaderField {
                        family: self.family.clone(),
                        field: "multiset".into(),
                    })?;
                Ok(FamilyParams::MultisetPermutations { symbols })
            }
            "kperms" => Ok(FamilyParams::KPermutations {
                ground: self.n,
                k: self.require("k", self.k)?,
            }),
            "surjections" => Ok(FamilyParams::SurjectiveStrings {
                alphabet: self.require("h", self.h)?,
            }),
            "juggling" => Ok(FamilyParams::JugglingSequences {
                max_balls: self.require("b", self.b)?,
            }),
            other => Err(ParameterError::UnknownFamily {
                family: other.into(),
            }),
        }
    }

    /// Length of each word on the cycle: `k` for k-permutations, `n`
    /// otherwise.
    pub fn word_len(&self) -> Result<usize, ParameterError> {
        match self.family_params()? {
            FamilyParams::KPermutations { k, .. } => Ok(k),
            _ => Ok(self.n),
        }
    }

    /// Regenerates the full object family this header describes, in
    /// lexicographic order.
    pub fn expected_objects(&self) -> Result<Vec<Word>, ParameterError> {
        match self.family_params()? {
            FamilyParams::MultisetPermutations { symbols } => {
                let spec = MultisetSpec::from_symbols(&symbols)?;
                if spec.size() != self.n {
                    return Err(ParameterError::MixedWordLengths {
                        expected: self.n,
                        found: spec.size(),
                    });
                }
                Ok(multiset_permutations(&spec).collect())
            }
            FamilyParams::JugglingSequences { max_balls } => {
                Ok(enumerate_juggling_sequences(self.n, max_balls)?
                    .into_iter()
                    .map(|j| j.into_word())
                    .collect())
            }
            FamilyParams::SurjectiveStrings { alphabet } => {
                Ok(surjective_strings(self.n, alphabet)?.collect())
            }
            FamilyParams::KPermutations { ground, k } => Ok(k_permutations(ground, k)?.collect()),
        }
    }
}

/// An overlap cycle plus the header describing where it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleFile {
    pub header: CycleHeader,
    pub compressed: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objects: Option<Vec<Word>>,
}

impl CycleFile {
    /// Packages a cycle under the given family parameters. `n` follows the
    /// [`CycleHeader::new`] convention. With `include_objects` the decoded
    /// object listing is embedded after the body.
    pub fn new(
        params: &FamilyParams,
        n: usize,
        cycle: &OverlapCycle,
        include_objects: bool,
    ) -> CycleFile {
        let header = CycleHeader::new(params, n, cycle.overlap(), cycle.object_count());
        CycleFile {
            header,
            compressed: cycle.compressed().to_vec(),
            objects: include_objects.then(|| cycle.objects().to_vec()),
        }
    }

    /// Reconstructs the cycle the file encodes.
    pub fn cycle(&self) -> Result<OverlapCycle, ParameterError> {
        OverlapCycle::from_compressed(
            self.header.word_len()?,
            self.header.s,
            self.compressed.clone(),
        )
    }

    /// Consistency checks tying the body and object listing to the header.
    fn validate(&self) -> Result<(), ParameterError> {
        let word_len = self.header.word_len()?;
        if self.header.s == 0 || self.header.s >= word_len {
            return Err(ParameterError::OverlapOutOfRange {
                s: self.header.s,
                n: word_len,
            });
        }
        let stride = word_len - self.header.s;
        let expected = self.header.m * stride;
        if expected == 0 || self.compressed.len() != expected {
            return Err(ParameterError::BodyLengthMismatch {
                expected,
                found: self.compressed.len(),
            });
        }
        if let Some(objects) = &self.objects {
            if objects.len() != self.header.m {
                return Err(ParameterError::ObjectCountMismatch {
                    expected: self.header.m,
                    found: objects.len(),
                });
            }
            for object in objects {
                if object.len() != word_len {
                    return Err(ParameterError::MixedWordLengths {
                        expected: word_len,
                        found: object.len(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Renders the text encoding.
    pub fn to_text(&self) -> String {
        let mut out = serde_json::to_string(&self.header).expect("header serializes");
        out.push('\n');
        for (i, symbol) in self.compressed.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{symbol}");
        }
        out.push('\n');
        if let Some(objects) = &self.objects {
            for object in objects {
                let _ = writeln!(out, "{object}");
            }
        }
        out
    }

    /// Renders the whole-file JSON encoding (single line).
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string(self).expect("file serializes");
        out.push('\n');
        out
    }

    /// Reads either encoding, validating the body against the header.
    pub fn parse(input: &str) -> Result<CycleFile, ParameterError> {
        if let Ok(value) = serde_json::from_str::<serde_json::Value>(input) {
            // The whole file is one JSON value: accept only the json
            // encoding (a bare header with no body line is an error).
            let file: CycleFile = if value.get("header").is_some() {
                serde_json::from_value(value).map_err(|err| ParameterError::MalformedHeader {
                    message: err.to_string(),
                })?
            } else {
                return Err(ParameterError::MalformedHeader {
                    message: "expected a header line followed by a body line".into(),
                });
            };
            file.validate()?;
            return Ok(file);
        }

        let mut lines = input.lines().filter(|l| !l.trim().is_empty());
        let header_line = lines.next().ok_or_else(|| ParameterError::MalformedHeader {
            message: "empty input".into(),
        })?;
        let header: CycleHeader =
            serde_json::from_str(header_line).map_err(|err| ParameterError::MalformedHeader {
                message: err.to_string(),
            })?;
        let body_line = lines.next().ok_or_else(|| ParameterError::MalformedHeader {
            message: "expected a body line after the header".into(),
        })?;
        let compressed = body_line
            .split_whitespace()
            .map(|token| {
                token
                    .parse::<u32>()
                    .map_err(|_| ParameterError::InvalidSymbol {
                        token: token.into(),
                    })
            })
            .collect::<Result<Vec<u32>, _>>()?;
        let objects: Vec<Word> = lines.map(str::parse).collect::<Result<_, _>>()?;
        let file = CycleFile {
            header,
            compressed,
            objects: (!objects.is_empty()).then_some(objects),
        };
        file.validate()?;
        Ok(file)
    }
}
