//! Fixed-length binary words packed 64 bits per limb.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported word length.
pub const MAX_WORD_LEN: usize = 1 << 20;

const LIMB_BITS: usize = 64;

/// A vector in F_2^n.
///
/// Bit `i` lives in limb `i / 64` at position `i % 64`. Bits past `len` in
/// the last limb are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: usize,
    limbs: Vec<u64>,
}

fn limb_count(len: usize) -> usize {
    len.div_ceil(LIMB_BITS)
}

impl Word {
    /// All-zero word of length `len`.
    pub fn zeros(len: usize) -> Result<Self> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::Parameter(format!(
                "word length {len} outside 1..={MAX_WORD_LEN}"
            )));
        }
        Ok(Word {
            len,
            limbs: vec![0; limb_count(len)],
        })
    }

    pub fn ones(len: usize) -> Result<Self> {
        let mut w = Self::zeros(len)?;
        for limb in w.limbs.iter_mut() {
            *limb = u64::MAX;
        }
        w.clear_tail();
        Ok(w)
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut w = Self::zeros(bits.len())?;
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                w.limbs[i / LIMB_BITS] |= 1 << (i % LIMB_BITS);
            }
        }
        Ok(w)
    }

    /// Builds a word from a function of the coordinate index.
    pub fn from_fn(len: usize, mut bit: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut w = Self::zeros(len)?;
        for i in 0..len {
            if bit(i) {
                w.limbs[i / LIMB_BITS] |= 1 << (i % LIMB_BITS);
            }
        }
        Ok(w)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; words have positive length.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        (self.limbs[i / LIMB_BITS] >> (i % LIMB_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % LIMB_BITS);
        if value {
            self.limbs[i / LIMB_BITS] |= mask;
        } else {
            self.limbs[i / LIMB_BITS] &= !mask;
        }
    }

    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Componentwise XOR.
    pub fn xor(&self, other: &Word) -> Result<Word> {
        self.check_len(other)?;
        Ok(Word {
            len: self.len,
            limbs: self
                .limbs
                .iter()
                .zip(&other.limbs)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    pub fn complement(&self) -> Word {
        let mut w = Word {
            len: self.len,
            limbs: self.limbs.iter().map(|l| !l).collect(),
        };
        w.clear_tail();
        w
    }

    /// Word with coordinate 0 removed. Fails on length-1 words.
    pub fn drop_first(&self) -> Result<Word> {
        if self.len < 2 {
            return Err(Error::Parameter("cannot drop the only coordinate".into()));
        }
        Word::from_fn(self.len - 1, |i| self.get(i + 1))
    }

    /// Coordinates at `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Result<Word> {
        Word::from_fn(indices.len(), |i| self.get(indices[i]))
    }

    pub(crate) fn check_len(&self, other: &Word) -> Result<()> {
        if self.len != other.len {
            Err(Error::DimensionMismatch {
                expected: self.len,
                actual: other.len,
            })
        } else {
            Ok(())
        }
    }

    fn clear_tail(&mut self) {
        let rem = self.len % LIMB_BITS;
        if rem != 0 {
            if let Some(last) = self.limbs.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (pos, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => {
                    return Err(Error::Syntax {
                        position: pos,
                        message: format!("unexpected character `{other}` in binary word"),
                    })
                }
            }
        }
        Word::from_bits(bits)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let w: Word = "0110100".parse().unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.to_string(), "0110100");
        assert!(w.get(1) && w.get(2) && w.get(4));
        assert_eq!(w.weight(), 3);
    }

    #[test]
    fn tail_bits_stay_clear() {
        let w = Word::ones(70).unwrap();
        assert_eq!(w.weight(), 70);
        let c = Word::zeros(70).unwrap().complement();
        assert_eq!(c, w);
        assert!(w.complement().is_zero());
    }

    #[test]
    fn rejects_bad_lengths_and_characters() {
        assert!(Word::zeros(0).is_err());
        assert!(Word::zeros(MAX_WORD_LEN + 1).is_err());
        assert!(Word::zeros(MAX_WORD_LEN).is_ok());
        assert!("01x".parse::<Word>().is_err());
        assert!("".parse::<Word>().is_err());
    }

    #[test]
    fn xor_checks_length() {
        let a: Word = "1100".parse().unwrap();
        let b: Word = "1010".parse().unwrap();
        assert_eq!(a.xor(&b).unwrap().to_string(), "0110");
        let c: Word = "101".parse().unwrap();
        assert!(matches!(a.xor(&c), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn drop_first_and_select() {
        let w: Word = "10110".parse().unwrap();
        assert_eq!(w.drop_first().unwrap().to_string(), "0110");
        assert_eq!(w.select(&[4, 0, 2]).unwrap().to_string(), "011");
        assert!("1".parse::<Word>().unwrap().drop_first().is_err());
    }
}
