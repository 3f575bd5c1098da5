//! Binary codes and their text file format.
//!
//! The text format is one codeword per line over `{0,1}`, all lines of equal
//! length. Lines starting with `#` are comments; blank lines are skipped.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::metric::{self, DiscrepancyProfile, ProfileOptions};
use crate::word::Word;

/// A finite set of distinct words of common length, kept in insertion order.
#[derive(Debug, Clone)]
pub struct Code {
    n: usize,
    words: Vec<Word>,
    profile: OnceLock<DiscrepancyProfile>,
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.words == other.words
    }
}

impl Eq for Code {}

impl Code {
    /// Builds a code, rejecting empty input, mixed lengths and duplicates.
    pub fn new(words: Vec<Word>) -> Result<Self> {
        let first = words
            .first()
            .ok_or_else(|| Error::DegenerateCode("code has no words".into()))?;
        let n = first.len();
        let mut seen: HashMap<&Word, usize> = HashMap::with_capacity(words.len());
        for (i, w) in words.iter().enumerate() {
            if w.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: w.len(),
                });
            }
            if let Some(&j) = seen.get(w) {
                return Err(Error::DuplicateWord {
                    first: j,
                    second: i,
                });
            }
            seen.insert(w, i);
        }
        Ok(Code {
            n,
            words,
            profile: OnceLock::new(),
        })
    }

    /// Word length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of codewords `K`.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    /// Fails unless `K >= 2`.
    pub fn require_pairs(&self) -> Result<()> {
        if self.words.len() < 2 {
            Err(Error::DegenerateCode(format!(
                "need at least 2 codewords, have {}",
                self.words.len()
            )))
        } else {
            Ok(())
        }
    }

    /// Pareto profile under the default pair budget, computed once and cached.
    pub fn profile(&self) -> Result<&DiscrepancyProfile> {
        if let Some(p) = self.profile.get() {
            return Ok(p);
        }
        let p = metric::profile_with(self, &ProfileOptions::default())?;
        Ok(self.profile.get_or_init(|| p))
    }

    /// True when the XOR of any two codewords is again a codeword.
    pub fn is_xor_closed(&self) -> bool {
        let set: HashSet<&Word> = self.words.iter().collect();
        self.words.iter().enumerate().all(|(i, a)| {
            self.words[i + 1..]
                .iter()
                .all(|b| set.contains(&a.xor(b).expect("equal lengths")))
        })
    }

    /// Keeps the words whose first coordinate equals `alpha` and deletes that
    /// coordinate.
    pub fn puncture_first(&self, alpha: bool) -> Result<Code> {
        if self.n < 2 {
            return Err(Error::Parameter("puncturing needs n >= 2".into()));
        }
        let words = self
            .words
            .iter()
            .filter(|w| w.get(0) == alpha)
            .map(Word::drop_first)
            .collect::<Result<Vec<_>>>()?;
        if words.is_empty() {
            return Err(Error::DegenerateCode(format!(
                "no codeword starts with {}",
                alpha as u8
            )));
        }
        Code::new(words)
    }

    /// Parses the text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut words = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let w: Word = line.parse().map_err(|e: Error| Error::Parse {
                line: lineno + 1,
                message: e.to_string(),
            })?;
            if let Some(first) = words.first() {
                let first: &Word = first;
                if first.len() != w.len() {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        message: format!("length {} differs from {}", w.len(), first.len()),
                    });
                }
            }
            words.push(w);
        }
        Code::new(words)
    }

    /// Renders the text format, with optional leading comment lines.
    pub fn to_text(&self, comments: &[String]) -> String {
        let mut out = String::with_capacity(self.words.len() * (self.n + 1));
        for c in comments {
            let _ = writeln!(out, "# {c}");
        }
        for w in &self.words {
            let _ = writeln!(out, "{w}");
        }
        out
    }
}
