//! Codes `C(V, S) = {(f(x))_{x∈V} : f ∈ S}` and the character-sum form of
//! their discrepancies.

use std::collections::{BTreeSet, HashMap};

use super::{BooleanFunction, EvaluationSet};
use crate::code::Code;
use crate::error::{Error, Result};
use crate::scalar::{require_r, Scalar};

/// `Σ_{x∈V} (-1)^f(x)`.
pub fn sign_sum(f: &BooleanFunction, v: &EvaluationSet) -> i64 {
    v.points().iter().map(|&x| f.sign(x)).sum()
}

fn check_vars(f: &BooleanFunction, v: &EvaluationSet) -> Result<()> {
    if f.vars() != v.vars() {
        Err(Error::DimensionMismatch {
            expected: v.vars() as usize,
            actual: f.vars() as usize,
        })
    } else {
        Ok(())
    }
}

/// Evaluates every function of `s` on `v`, in order.
///
/// Two functions that agree on all of `V` (their difference lies in the
/// vanishing ideal of `V`) produce a [`Error::Collision`] naming both indices.
pub fn code_from_functions(v: &EvaluationSet, s: &[BooleanFunction]) -> Result<Code> {
    if s.len() < 2 {
        return Err(Error::DegenerateCode(format!(
            "need at least 2 functions, got {}",
            s.len()
        )));
    }
    let mut words = Vec::with_capacity(s.len());
    let mut seen = HashMap::with_capacity(s.len());
    for (i, f) in s.iter().enumerate() {
        check_vars(f, v)?;
        let w = f.restrict(v)?;
        if let Some(&j) = seen.get(&w) {
            return Err(Error::Collision {
                first: j,
                second: i,
            });
        }
        seen.insert(w.clone(), i);
        words.push(w);
    }
    Code::new(words)
}

/// Integer ingredients of the discrepancy of `(c_f, c_g)`:
/// `n − Σ(-1)^(f+g)` and `Σ(-1)^g − Σ(-1)^f` over `V`.
fn sum_terms(f: &BooleanFunction, g: &BooleanFunction, v: &EvaluationSet) -> (i64, i64) {
    let mut joint = 0i64;
    let mut sf = 0i64;
    let mut sg = 0i64;
    for &x in v.points() {
        let (a, b) = (f.sign(x), g.sign(x));
        joint += a * b;
        sf += a;
        sg += b;
    }
    (v.len() as i64 - joint, sg - sf)
}

fn combine<S: Scalar>(r: &S, distance_term: i64, bias_term: i64) -> S {
    let four = S::from_count(4);
    let one = S::one();
    (r.clone() + one.clone()) * S::from_int(distance_term) / four.clone()
        + (r.clone() - one) * S::from_int(bias_term) / four
}

/// `δ_r(c_f, c_g) = (r+1)/4·(n − Σ_V(-1)^(f+g)) + (r−1)/4·(Σ_V(-1)^g − Σ_V(-1)^f)`.
pub fn delta_via_sums<S: Scalar>(
    f: &BooleanFunction,
    g: &BooleanFunction,
    v: &EvaluationSet,
    r: &S,
) -> Result<S> {
    require_r(r)?;
    check_vars(f, v)?;
    check_vars(g, v)?;
    let (dist, bias) = sum_terms(f, g, v);
    if dist == 0 {
        return Err(Error::Collision {
            first: 0,
            second: 1,
        });
    }
    Ok(combine(r, dist, bias))
}

/// `δ_r(C(V, S))` using only ordered pairs with `Σ_V(-1)^g ≤ Σ_V(-1)^f`.
pub fn restricted_min_discrepancy<S: Scalar>(
    v: &EvaluationSet,
    s: &[BooleanFunction],
    r: &S,
) -> Result<S> {
    require_r(r)?;
    // Runs the distinctness check.
    code_from_functions(v, s)?;
    let sums: Vec<i64> = s.iter().map(|f| sign_sum(f, v)).collect();
    let mut terms = BTreeSet::new();
    for (i, f) in s.iter().enumerate() {
        for (j, g) in s.iter().enumerate() {
            if i != j && sums[j] <= sums[i] {
                terms.insert(sum_terms(f, g, v));
            }
        }
    }
    let value = terms
        .into_iter()
        .map(|(dist, bias)| combine(r, dist, bias))
        .reduce(|a, b| if b < a { b } else { a })
        .expect("at least one pair has sums ordered either way");
    Ok(value)
}
