//! Boolean functions `F_2^m → F_2` stored as packed truth tables.
//!
//! A point `x = (x_1, …, x_m)` is the integer `Σ x_i·2^(i-1)`, so `x_1` is the
//! least significant bit. Truth-table bit `x` holds `f(x)`, which makes the
//! truth table itself the codeword of `f` on the full space.

mod anf;
mod codes;
mod walsh;

pub use anf::parse_anf;
pub use codes::{code_from_functions, delta_via_sums, restricted_min_discrepancy, sign_sum};
pub use walsh::WalshSpectrum;

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::Word;

/// Largest supported number of variables.
pub const MAX_VARS: u32 = 24;

/// `x · y` over F_2 for points encoded as integers.
#[inline]
pub fn dot(x: u32, y: u32) -> bool {
    (x & y).count_ones() & 1 == 1
}

/// A Boolean function on `m` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    m: u32,
    table: Word,
}

impl std::fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BooleanFunction({})", self.to_hex())
    }
}

fn check_vars(m: u32) -> Result<()> {
    if m == 0 || m > MAX_VARS {
        Err(Error::TooLarge(format!("m = {m} outside 1..={MAX_VARS}")))
    } else {
        Ok(())
    }
}

impl BooleanFunction {
    pub fn from_fn(m: u32, f: impl FnMut(u32) -> bool) -> Result<Self> {
        check_vars(m)?;
        let mut f = f;
        let table = Word::from_fn(1 << m, |x| f(x as u32))?;
        Ok(BooleanFunction { m, table })
    }

    /// Wraps a truth table of length `2^m`.
    pub fn from_table(m: u32, table: Word) -> Result<Self> {
        check_vars(m)?;
        if table.len() != 1 << m {
            return Err(Error::DimensionMismatch {
                expected: 1 << m,
                actual: table.len(),
            });
        }
        Ok(BooleanFunction { m, table })
    }

    pub fn zero(m: u32) -> Result<Self> {
        Self::from_fn(m, |_| false)
    }

    pub fn one(m: u32) -> Result<Self> {
        Self::from_fn(m, |_| true)
    }

    /// `x_1 x_2 + x_3 x_4 + … + x_{m-1} x_m`, plus 1 when `complement`.
    pub fn inner_product(m: u32, complement: bool) -> Result<Self> {
        if !m.is_multiple_of(2) {
            return Err(Error::Parameter(format!(
                "inner product form needs even m, got {m}"
            )));
        }
        Self::from_fn(m, |x| {
            let pairs = (0..m / 2).filter(|i| (x >> (2 * i)) & 3 == 3).count();
            (pairs % 2 == 1) ^ complement
        })
    }

    pub fn vars(&self) -> u32 {
        self.m
    }

    /// Number of points, `2^m`.
    pub fn size(&self) -> usize {
        1 << self.m
    }

    pub fn table(&self) -> &Word {
        &self.table
    }

    #[inline]
    pub fn eval(&self, x: u32) -> bool {
        self.table.get(x as usize)
    }

    /// `(-1)^f(x)`.
    #[inline]
    pub fn sign(&self, x: u32) -> i64 {
        if self.eval(x) {
            -1
        } else {
            1
        }
    }

    /// `f + g` over F_2.
    pub fn add(&self, other: &BooleanFunction) -> Result<BooleanFunction> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected: self.m as usize,
                actual: other.m as usize,
            });
        }
        Ok(BooleanFunction {
            m: self.m,
            table: self.table.xor(&other.table)?,
        })
    }

    pub fn complement(&self) -> BooleanFunction {
        BooleanFunction {
            m: self.m,
            table: self.table.complement(),
        }
    }

    /// `x ↦ f(x + a) + b`.
    pub fn translate(&self, a: u32, b: bool) -> Result<BooleanFunction> {
        self.check_point(a)?;
        Self::from_fn(self.m, |x| self.eval(x ^ a) ^ b)
    }

    /// `x ↦ a·x + b`.
    pub fn affine(m: u32, a: u32, b: bool) -> Result<Self> {
        if a as u64 >= 1u64 << m {
            return Err(Error::Parameter(format!("point {a} outside F_2^{m}")));
        }
        Self::from_fn(m, |x| dot(a, x) ^ b)
    }

    pub fn weight(&self) -> usize {
        self.table.weight()
    }

    /// `D_f = {x : f(x) = 1}` in increasing order.
    pub fn support(&self) -> EvaluationSet {
        let points = (0..self.size() as u32).filter(|&x| self.eval(x)).collect();
        EvaluationSet { m: self.m, points }
    }

    /// `Σ_x (-1)^(f(x+a) + f(x))`.
    pub fn autocorrelation(&self, a: u32) -> Result<i64> {
        self.check_point(a)?;
        Ok((0..self.size() as u32)
            .map(|x| {
                if self.eval(x ^ a) == self.eval(x) {
                    1
                } else {
                    -1
                }
            })
            .sum())
    }

    /// Bentness via autocorrelation: zero at every nonzero shift.
    pub fn is_bent_by_autocorrelation(&self) -> bool {
        (1..self.size() as u32).all(|a| self.autocorrelation(a) == Ok(0))
    }

    pub fn walsh(&self) -> WalshSpectrum {
        WalshSpectrum::of(self)
    }

    pub fn is_bent(&self) -> bool {
        self.walsh().is_bent()
    }

    /// `ε ∈ {−1, +1}` with `W_f(0) = −ε·2^(m/2)` when `f` is bent.
    pub fn bent_sign(&self) -> Option<i8> {
        self.walsh().bent_sign()
    }

    /// Values of `f` on the points of `v`, in order.
    pub fn restrict(&self, v: &EvaluationSet) -> Result<Word> {
        if v.m != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m as usize,
                actual: v.m as usize,
            });
        }
        Word::from_fn(v.len(), |i| self.eval(v.points[i]))
    }

    fn check_point(&self, a: u32) -> Result<()> {
        if (a as usize) < self.size() {
            Ok(())
        } else {
            Err(Error::Parameter(format!(
                "point {a} outside F_2^{}",
                self.m
            )))
        }
    }

    /// Hex truth table `m=<m>;tt=<hex>`.
    ///
    /// The hex string is the truth table read as a big-endian integer whose
    /// bit `x` is `f(x)`: the first digit carries `f(2^m - 1)` in its top bit.
    /// For `m < 2` a single digit holds the `2^m` bits.
    pub fn to_hex(&self) -> String {
        let digits = (self.size() / 4).max(1);
        let mut out = format!("m={};tt=", self.m);
        for d in (0..digits).rev() {
            let mut v = 0u8;
            for b in 0..4 {
                let x = d * 4 + b;
                if x < self.size() && self.table.get(x) {
                    v |= 1 << b;
                }
            }
            let _ = write!(out, "{v:x}");
        }
        out
    }

    /// Parses the format written by [`to_hex`](Self::to_hex).
    pub fn from_hex(text: &str) -> Result<Self> {
        let syntax = |position: usize, message: &str| Error::Syntax {
            position,
            message: message.to_string(),
        };
        let text = text.trim();
        let rest = text
            .strip_prefix("m=")
            .ok_or_else(|| syntax(0, "expected `m=`"))?;
        let (m_str, tt) = rest
            .split_once(';')
            .ok_or_else(|| syntax(2, "expected `;tt=`"))?;
        let m: u32 = m_str
            .trim()
            .parse()
            .map_err(|_| syntax(2, "bad variable count"))?;
        check_vars(m)?;
        let tt_start = 2 + m_str.len() + 1;
        let hex = tt
            .strip_prefix("tt=")
            .ok_or_else(|| syntax(tt_start, "expected `tt=`"))?;
        let size = 1usize << m;
        let digits = (size / 4).max(1);
        if hex.len() != digits {
            return Err(syntax(
                tt_start + 3,
                &format!(
                    "expected {digits} hex digits for m = {m}, got {}",
                    hex.len()
                ),
            ));
        }
        let mut table = Word::zeros(size)?;
        for (i, c) in hex.chars().enumerate() {
            let v = c
                .to_digit(16)
                .ok_or_else(|| syntax(tt_start + 3 + i, "not a hex digit"))?;
            let d = digits - 1 - i;
            for b in 0..4 {
                if v >> b & 1 == 1 {
                    let x = d * 4 + b;
                    if x >= size {
                        return Err(syntax(tt_start + 3 + i, "bits beyond the truth table"));
                    }
                    table.set(x, true);
                }
            }
        }
        Ok(BooleanFunction { m, table })
    }
}

/// An ordered set of distinct points `V ⊆ F_2^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationSet {
    m: u32,
    points: Vec<u32>,
}

impl EvaluationSet {
    /// Validates `2 ≤ |V| ≤ 2^m`, range and distinctness.
    pub fn new(m: u32, points: Vec<u32>) -> Result<Self> {
        check_vars(m)?;
        let size = 1u64 << m;
        if points.len() < 2 || points.len() as u64 > size {
            return Err(Error::Parameter(format!(
                "evaluation set needs 2..={size} points, got {}",
                points.len()
            )));
        }
        let mut seen = vec![false; size as usize];
        for &p in &points {
            if p as u64 >= size {
                return Err(Error::Parameter(format!("point {p} outside F_2^{m}")));
            }
            if std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::Parameter(format!("point {p} repeated")));
            }
        }
        Ok(EvaluationSet { m, points })
    }

    /// All of `F_2^m` in integer order.
    pub fn full(m: u32) -> Result<Self> {
        Self::new(m, (0..1u32 << m).collect())
    }

    pub fn vars(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[u32] {
        &self.points
    }
}
