//! The asymmetric discrepancy `δ_r(y, x) = r·d10(y, x) + d01(y, x)` and
//! minimum discrepancy of a code.
//!
//! Every ordered pair of distinct codewords contributes a point
//! `(d10, d01)`. Because `r ≥ 1 > 0`, the minimum of `r·d10 + d01` over all
//! points is attained on the Pareto-minimal staircase of those points, so one
//! enumeration answers `δ_r(C)` for every `r` at once.

use rayon::prelude::*;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::scalar::{require_r, Scalar};
use crate::word::Word;

/// The counts `(d10, d01)` for an ordered pair `(y, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiscrepancyPair {
    /// Positions with `(y_i, x_i) = (1, 0)`.
    pub d10: u32,
    /// Positions with `(y_i, x_i) = (0, 1)`.
    pub d01: u32,
}

impl DiscrepancyPair {
    pub fn new(d10: u32, d01: u32) -> Self {
        DiscrepancyPair { d10, d01 }
    }

    /// `r·d10 + d01`.
    pub fn evaluate<S: Scalar>(&self, r: &S) -> S {
        r.clone() * S::from_count(self.d10 as u64) + S::from_count(self.d01 as u64)
    }

    pub fn hamming(&self) -> u32 {
        self.d10 + self.d01
    }

    /// The pair for the reversed orientation `(x, y)`.
    pub fn swap(&self) -> Self {
        DiscrepancyPair {
            d10: self.d01,
            d01: self.d10,
        }
    }

    /// Componentwise `<=` and not equal.
    pub fn dominates(&self, other: &Self) -> bool {
        self.d10 <= other.d10 && self.d01 <= other.d01 && self != other
    }
}

/// Counts `(d10, d01)` for `(y, x)` with two popcounts per limb.
pub fn discrepancy_pair(y: &Word, x: &Word) -> Result<DiscrepancyPair> {
    y.check_len(x)?;
    Ok(pair_unchecked(y, x))
}

#[inline]
fn pair_unchecked(y: &Word, x: &Word) -> DiscrepancyPair {
    let mut d10 = 0u32;
    let mut d01 = 0u32;
    for (a, b) in y.limbs().iter().zip(x.limbs()) {
        d10 += (a & !b).count_ones();
        d01 += (!a & b).count_ones();
    }
    DiscrepancyPair { d10, d01 }
}

/// `δ_r(y, x)`. Requires `r ≥ 1`.
pub fn delta_r<S: Scalar>(y: &Word, x: &Word, r: &S) -> Result<S> {
    require_r(r)?;
    Ok(discrepancy_pair(y, x)?.evaluate(r))
}

pub fn hamming_distance(y: &Word, x: &Word) -> Result<usize> {
    Ok(discrepancy_pair(y, x)?.hamming() as usize)
}

/// Limits for the ordered-pair enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileOptions {
    /// Maximum number of ordered pairs `K(K-1)` to enumerate.
    pub pair_budget: u64,
    /// Split rows across the rayon pool.
    pub parallel: bool,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions {
            pair_budget: 1_000_000_000,
            parallel: true,
        }
    }
}

/// A Pareto-minimal point together with the lexicographically smallest
/// ordered index pair `(y, x)` that produces it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfilePoint {
    pub pair: DiscrepancyPair,
    pub witness: (usize, usize),
}

/// The staircase of componentwise-minimal `(d10, d01)` points over all
/// ordered pairs of distinct codewords, sorted by increasing `d10`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyProfile {
    n: usize,
    points: Vec<ProfilePoint>,
}

/// `δ_r(C)` with the ordered pair attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct MinDiscrepancy<S> {
    pub value: S,
    pub witness: (usize, usize),
}

impl DiscrepancyProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[ProfilePoint] {
        &self.points
    }

    pub fn pairs(&self) -> impl Iterator<Item = DiscrepancyPair> + '_ {
        self.points.iter().map(|p| p.pair)
    }

    /// `min r·d10 + d01` over the staircase. Ties go to the smallest witness.
    pub fn evaluate<S: Scalar>(&self, r: &S) -> Result<MinDiscrepancy<S>> {
        require_r(r)?;
        let mut best: Option<MinDiscrepancy<S>> = None;
        for p in &self.points {
            let v = p.pair.evaluate(r);
            let better = match &best {
                None => true,
                Some(b) => v < b.value || (v == b.value && p.witness < b.witness),
            };
            if better {
                best = Some(MinDiscrepancy {
                    value: v,
                    witness: p.witness,
                });
            }
        }
        Ok(best.expect("profile is never empty"))
    }

    /// Minimum Hamming distance with its witness.
    pub fn min_hamming(&self) -> (usize, (usize, usize)) {
        self.points
            .iter()
            .map(|p| (p.pair.hamming() as usize, p.witness))
            .min()
            .expect("profile is never empty")
    }
}

/// Dense per-`d10` envelope: slot `a` holds the smallest `d01` seen with
/// `d10 = a`, and the smallest witness for it.
struct Envelope {
    slots: Vec<Option<(u32, (usize, usize))>>,
}

impl Envelope {
    fn new(n: usize) -> Self {
        Envelope {
            slots: vec![None; n + 1],
        }
    }

    #[inline]
    fn offer(&mut self, p: DiscrepancyPair, witness: (usize, usize)) {
        let slot = &mut self.slots[p.d10 as usize];
        match slot {
            Some((d01, w)) if (*d01, *w) <= (p.d01, witness) => {}
            _ => *slot = Some((p.d01, witness)),
        }
    }

    fn merge(mut self, other: Envelope) -> Envelope {
        for (a, s) in other.slots.into_iter().enumerate() {
            if let Some((d01, w)) = s {
                self.offer(DiscrepancyPair::new(a as u32, d01), w);
            }
        }
        self
    }

    fn into_staircase(self) -> Vec<ProfilePoint> {
        let mut out = Vec::new();
        let mut best_d01 = u32::MAX;
        for (a, s) in self.slots.into_iter().enumerate() {
            if let Some((d01, w)) = s {
                if d01 < best_d01 {
                    best_d01 = d01;
                    out.push(ProfilePoint {
                        pair: DiscrepancyPair::new(a as u32, d01),
                        witness: w,
                    });
                }
            }
        }
        out
    }
}

fn scan_rows(words: &[Word], rows: std::ops::Range<usize>, n: usize) -> Envelope {
    let mut env = Envelope::new(n);
    for i in rows {
        let y = &words[i];
        for (j, x) in words.iter().enumerate().skip(i + 1) {
            let p = pair_unchecked(y, x);
            env.offer(p, (i, j));
            env.offer(p.swap(), (j, i));
        }
    }
    env
}

/// Pareto profile of `code` with explicit limits.
pub fn profile_with(code: &Code, opts: &ProfileOptions) -> Result<DiscrepancyProfile> {
    code.require_pairs()?;
    let k = code.len() as u128;
    let needed = k * (k - 1);
    if needed > opts.pair_budget as u128 {
        return Err(Error::PairBudgetExceeded {
            needed,
            budget: opts.pair_budget,
        });
    }
    let words = code.words();
    let n = code.n();
    let rows = words.len();

    let env = if opts.parallel && rows >= 64 {
        // Contiguous row ranges; row i scans K-1-i partners.
        let chunks = (rayon::current_num_threads() * 4).min(rows);
        let step = rows.div_ceil(chunks);
        (0..chunks)
            .into_par_iter()
            .map(|c| scan_rows(words, (c * step).min(rows)..((c + 1) * step).min(rows), n))
            .reduce(|| Envelope::new(n), Envelope::merge)
    } else {
        scan_rows(words, 0..rows, n)
    };

    Ok(DiscrepancyProfile {
        n,
        points: env.into_staircase(),
    })
}

/// Pareto profile of `code` under the default budget.
pub fn profile(code: &Code) -> Result<DiscrepancyProfile> {
    profile_with(code, &ProfileOptions::default())
}

/// `δ_r(C)`: minimum of `δ_r` over ordered pairs of distinct codewords.
pub fn min_discrepancy<S: Scalar>(code: &Code, r: &S) -> Result<MinDiscrepancy<S>> {
    require_r(r)?;
    code.profile()?.evaluate(r)
}

/// `d_H(C)`.
pub fn min_hamming(code: &Code) -> Result<usize> {
    Ok(code.profile()?.min_hamming().0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;
    use crate::Rational;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn code(lines: &[&str]) -> Code {
        Code::new(lines.iter().map(|s| w(s)).collect()).unwrap()
    }

    #[test]
    fn pair_counts() {
        assert_eq!(
            discrepancy_pair(&w("1100"), &w("0110")).unwrap(),
            DiscrepancyPair::new(1, 1)
        );
        assert_eq!(
            discrepancy_pair(&w("1011"), &w("1011")).unwrap(),
            DiscrepancyPair::new(0, 0)
        );
        assert_eq!(
            discrepancy_pair(&w("1111"), &w("0000")).unwrap(),
            DiscrepancyPair::new(4, 0)
        );
        assert!(matches!(
            discrepancy_pair(&w("11"), &w("110")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn delta_values() {
        let (y, x) = (w("1100"), w("0110"));
        assert_eq!(delta_r(&y, &x, &rational(2, 1)).unwrap(), rational(3, 1));
        assert_eq!(delta_r(&y, &x, &rational(1, 1)).unwrap(), rational(2, 1));
        assert_eq!(delta_r(&y, &y, &rational(7, 3)).unwrap(), rational(0, 1));
        assert_eq!(hamming_distance(&y, &x).unwrap(), 2);
        assert_eq!(hamming_distance(&w("1111"), &w("0000")).unwrap(), 4);
        assert!(matches!(
            delta_r(&y, &x, &rational(1, 2)),
            Err(Error::Parameter(_))
        ));
        assert_eq!(delta_r(&y, &x, &2.0f64).unwrap(), 3.0);
    }

    #[test]
    fn profile_of_two_complementary_words() {
        let p = profile(&code(&["00", "11"])).unwrap();
        let pts: Vec<_> = p.pairs().collect();
        assert_eq!(
            pts,
            vec![DiscrepancyPair::new(0, 2), DiscrepancyPair::new(2, 0)]
        );
    }

    #[test]
    fn profile_of_three_words() {
        // Ordered pairs give (0,3),(3,0),(0,2),(2,0),(1,0),(0,1).
        let p = profile(&code(&["000", "111", "110"])).unwrap();
        let pts: Vec<_> = p.pairs().collect();
        assert_eq!(
            pts,
            vec![DiscrepancyPair::new(0, 1), DiscrepancyPair::new(1, 0)]
        );
        assert_eq!(p.points()[0].witness, (2, 1));
        assert_eq!(p.points()[1].witness, (1, 2));
    }

    #[test]
    fn min_discrepancy_picks_cheap_orientation() {
        let c = code(&["00", "11"]);
        let m = min_discrepancy(&c, &rational(3, 1)).unwrap();
        assert_eq!(m.value, rational(2, 1));
        assert_eq!(m.witness, (0, 1));
        assert_eq!(min_hamming(&c).unwrap(), 2);
    }

    #[test]
    fn witness_tie_break_is_lexicographic() {
        // At r = 1 both staircase points give 1; (1,2) < (2,1).
        let c = code(&["000", "111", "110"]);
        let m = min_discrepancy(&c, &Rational::from_integer(1.into())).unwrap();
        assert_eq!(m.witness, (1, 2));
    }

    #[test]
    fn degenerate_and_budget_errors() {
        let single = code(&["0101"]);
        assert!(matches!(profile(&single), Err(Error::DegenerateCode(_))));
        let c = code(&["00", "01", "10"]);
        let opts = ProfileOptions {
            pair_budget: 5,
            parallel: false,
        };
        assert_eq!(
            profile_with(&c, &opts).unwrap_err(),
            Error::PairBudgetExceeded {
                needed: 6,
                budget: 5
            }
        );
    }

    #[test]
    fn parallel_and_serial_agree() {
        let words: Vec<Word> = (0u32..200)
            .map(|i| {
                Word::from_fn(40, |b| {
                    (i.wrapping_mul(2654435761) >> (b % 32)) & 1 == 1 || b == (i as usize % 40)
                })
                .unwrap()
            })
            .collect();
        let mut uniq = Vec::new();
        for x in words {
            if !uniq.contains(&x) {
                uniq.push(x);
            }
        }
        let c = Code::new(uniq).unwrap();
        let ser = profile_with(
            &c,
            &ProfileOptions {
                pair_budget: u64::MAX,
                parallel: false,
            },
        )
        .unwrap();
        let par = profile_with(
            &c,
            &ProfileOptions {
                pair_budget: u64::MAX,
                parallel: true,
            },
        )
        .unwrap();
        assert_eq!(ser, par);
    }
}
