//! Concrete codes: Sylvester–Hadamard, bent translates (A), affine functions
//! on a bent support (B), and Kerdock plus linear functions (C), each with
//! predicted parameters and a brute-force verification report.

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::boolean::{code_from_functions, BooleanFunction};
use crate::code::Code;
use crate::error::{Error, Result};
use crate::gf2::{kerdock_function, FieldCtx};
use crate::scalar::{rational, require_r, Scalar};
use crate::word::Word;
use crate::Rational;

/// Square ±1 matrix; row bits are 1 where the entry is −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMatrix {
    rows: Vec<Word>,
}

impl SignMatrix {
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::Parameter("empty matrix".into()));
        }
        let rows = rows
            .iter()
            .map(|row| {
                if row.len() != order {
                    return Err(Error::DimensionMismatch {
                        expected: order,
                        actual: row.len(),
                    });
                }
                Word::from_bits(
                    row.iter()
                        .map(|&e| match e {
                            1 => Ok(false),
                            -1 => Ok(true),
                            _ => Err(Error::Parameter(format!("entry {e} is not ±1"))),
                        })
                        .collect::<Result<Vec<_>>>()?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SignMatrix { rows })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        if self.rows[i].get(j) {
            -1
        } else {
            1
        }
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    /// `H·Hᵀ = n·I`: distinct rows agree in exactly half the positions.
    pub fn is_hadamard(&self) -> bool {
        let n = self.order();
        n == 1
            || (n.is_multiple_of(2)
                && (0..n).all(|i| {
                    (i + 1..n).all(|j| {
                        self.rows[i]
                            .xor(&self.rows[j])
                            .map(|d| d.weight() == n / 2)
                            .unwrap_or(false)
                    })
                }))
    }
}

/// `H_{2^t}`, the `t`-fold tensor power of `[[1,1],[1,−1]]`.
pub fn sylvester_hadamard(t: u32) -> Result<SignMatrix> {
    if !(1..=16).contains(&t) {
        return Err(Error::Parameter(format!(
            "Sylvester order exponent {t} outside 1..=16"
        )));
    }
    let n = 1usize << t;
    let rows = (0..n)
        .map(|i| Word::from_fn(n, |j| (i & j).count_ones() % 2 == 1))
        .collect::<Result<Vec<_>>>()?;
    Ok(SignMatrix { rows })
}

/// Drops the first column and maps `(-1)^c` to the bit `c`.
pub fn hadamard_code(h: &SignMatrix) -> Result<Code> {
    if h.order() < 2 {
        return Err(Error::Parameter("need order at least 2".into()));
    }
    if let Some(i) = h.rows.iter().position(|row| row.get(0)) {
        return Err(Error::Parameter(format!(
            "first column not normalized at row {i}"
        )));
    }
    if !h.is_hadamard() {
        return Err(Error::Parameter("matrix is not Hadamard".into()));
    }
    Code::new(
        h.rows
            .iter()
            .map(Word::drop_first)
            .collect::<Result<Vec<_>>>()?,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trust {
    /// Value at `r = 1` equals an independently known `d_H`.
    VerifiedFormula,
    /// Recorded for comparison only; the brute-force profile decides.
    ClaimUnderTest,
}

impl Trust {
    pub fn name(&self) -> &'static str {
        match self {
            Trust::VerifiedFormula => "verified-formula",
            Trust::ClaimUnderTest => "claim-under-test",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictionKind {
    Exact,
    LowerBound,
}

impl PredictionKind {
    pub fn name(&self) -> &'static str {
        match self {
            PredictionKind::Exact => "exact",
            PredictionKind::LowerBound => "lower_bound",
        }
    }
}

/// `α + β·r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub label: &'static str,
    pub alpha: Rational,
    pub beta: Rational,
}

impl LinearForm {
    pub fn new(label: &'static str, alpha: Rational, beta: Rational) -> Self {
        LinearForm { label, alpha, beta }
    }

    /// `(r+1)/4·a − (r−1)/4·b` rewritten as `α + β·r`.
    fn from_sum_form(label: &'static str, a: i64, b: i64) -> Self {
        LinearForm::new(label, rational(a + b, 4), rational(a - b, 4))
    }

    pub fn at(&self, r: &Rational) -> Rational {
        &self.alpha + &self.beta * r
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedParams {
    pub n: usize,
    pub k: usize,
    /// First entry is the primary prediction; the rest are alternatives.
    pub forms: Vec<LinearForm>,
    pub kind: PredictionKind,
    pub d_h_claim: Option<usize>,
    pub trust: Trust,
}

impl PredictedParams {
    pub fn primary(&self) -> &LinearForm {
        &self.forms[0]
    }

    fn to_json(&self) -> Value {
        let form = |f: &LinearForm| json!({"label": f.label, "alpha": f.alpha.render(), "beta": f.beta.render()});
        json!({
            "alpha": self.primary().alpha.render(),
            "beta": self.primary().beta.render(),
            "kind": self.kind.name(),
            "trust": self.trust.name(),
            "d_H_claim": self.d_h_claim,
            "candidates": self.forms.iter().map(form).collect::<Vec<_>>(),
        })
    }
}

/// A built code together with what it is expected to satisfy.
#[derive(Debug, Clone)]
pub struct Construction {
    pub id: &'static str,
    pub m: Option<u32>,
    pub modulus: Option<u32>,
    pub epsilon: Option<i8>,
    pub code: Code,
    pub predicted: PredictedParams,
    pub notes: Vec<String>,
}

impl Construction {
    /// Metadata object; `verified` is attached when given.
    pub fn metadata(&self, verified: Option<&VerificationReport>) -> Value {
        let mut map = Map::new();
        map.insert("construction".into(), json!(self.id));
        if let Some(m) = self.m {
            map.insert("m".into(), json!(m));
        }
        if let Some(p) = self.modulus {
            map.insert("modulus".into(), json!(format!("0x{p:x}")));
        }
        if let Some(e) = self.epsilon {
            map.insert("epsilon".into(), json!(e));
        }
        map.insert("n".into(), json!(self.code.n()));
        map.insert("K".into(), json!(self.code.len()));
        map.insert("predicted".into(), self.predicted.to_json());
        if let Some(v) = verified {
            map.insert("verified".into(), v.to_json());
        }
        Value::Object(map)
    }
}

fn require_bent(f: &BooleanFunction) -> Result<i8> {
    f.bent_sign().ok_or(Error::NotBent)
}

pub fn hadamard_construction(t: u32) -> Result<Construction> {
    let code = hadamard_code(&sylvester_hadamard(t)?)?;
    let half = (code.len() / 2) as i64;
    let predicted = PredictedParams {
        n: code.len() - 1,
        k: code.len(),
        forms: vec![LinearForm::new(
            "linear",
            rational(half, 1),
            Rational::zero(),
        )],
        kind: PredictionKind::Exact,
        d_h_claim: Some(half as usize),
        trust: Trust::VerifiedFormula,
    };
    Ok(Construction {
        id: "hadamard",
        m: Some(t),
        modulus: None,
        epsilon: None,
        code,
        predicted,
        notes: Vec::new(),
    })
}

fn bent_translate_form(m: u32) -> LinearForm {
    let k = m / 2;
    LinearForm::from_sum_form("bent-translate", 1i64 << m, 1i64 << (k + 1))
}

/// `{(f(x+a)+b)_x : a ∈ F_2^m, b ∈ F_2}` for bent `f`, ordered by `(a, b)`.
pub fn construction_a(f: &BooleanFunction) -> Result<Construction> {
    let epsilon = require_bent(f)?;
    let m = f.vars();
    let mut words = Vec::with_capacity(2 << m);
    for a in 0..1u32 << m {
        for b in [false, true] {
            words.push(f.translate(a, b)?.table().clone());
        }
    }
    let code = Code::new(words)?;
    let predicted = PredictedParams {
        n: 1 << m,
        k: 2 << m,
        forms: vec![bent_translate_form(m)],
        kind: PredictionKind::Exact,
        d_h_claim: Some(1 << (m - 1)),
        trust: Trust::VerifiedFormula,
    };
    Ok(Construction {
        id: "construction-a",
        m: Some(m),
        modulus: None,
        epsilon: Some(epsilon),
        code,
        predicted,
        notes: Vec::new(),
    })
}

/// Construction A shortened on its first coordinate.
pub fn construction_a_punctured(f: &BooleanFunction, alpha: bool) -> Result<Construction> {
    let full = construction_a(f)?;
    let m = f.vars();
    let code = full.code.puncture_first(alpha)?;
    let predicted = PredictedParams {
        n: (1 << m) - 1,
        k: 1 << m,
        forms: vec![bent_translate_form(m)],
        kind: PredictionKind::Exact,
        d_h_claim: Some(1 << (m - 1)),
        trust: Trust::VerifiedFormula,
    };
    Ok(Construction {
        id: "construction-a-punctured",
        code,
        predicted,
        ..full
    })
}

/// `{(a·x+b)_{x∈D_f} : (a,b) ≠ (0,0)}` with `D_f` in ascending order.
pub fn construction_b(f: &BooleanFunction) -> Result<Construction> {
    let epsilon = require_bent(f)?;
    let m = f.vars();
    if m < 4 {
        return Err(Error::Parameter(format!("need m >= 4, got {m}")));
    }
    let k = m / 2;
    let support = f.support();
    let functions = (0..1u32 << m)
        .flat_map(|a| [false, true].map(move |b| (a, b)))
        .skip(1)
        .map(|(a, b)| BooleanFunction::affine(m, a, b))
        .collect::<Result<Vec<_>>>()?;
    let code = code_from_functions(&support, &functions)?;
    let n = support.len() as i64;
    let half_m = 1i64 << (m - 1);
    let predicted = PredictedParams {
        n: support.len(),
        k: (2 << m) - 1,
        forms: vec![
            LinearForm::from_sum_form("minus-2^k", n - (1 << (k - 1)), half_m - (1 << k)),
            LinearForm::from_sum_form("plus-2^k", n - (1 << (k - 1)), half_m + (1 << k)),
        ],
        kind: PredictionKind::Exact,
        d_h_claim: Some((support.len() - (1 << (k - 1))) / 2),
        trust: Trust::ClaimUnderTest,
    };
    Ok(Construction {
        id: "construction-b",
        m: Some(m),
        modulus: None,
        epsilon: Some(epsilon),
        code,
        predicted,
        notes: Vec::new(),
    })
}

const MAX_KERDOCK_M: u32 = 10;

/// Every word `f_u(x, x_m) + Tr(ax) + a_m·x_m`, ordered by `(u, a, a_m)`.
pub fn kerdock_full_code(m: u32) -> Result<(FieldCtx, Code)> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(Error::Parameter(format!(
            "m must be even and >= 4, got {m}"
        )));
    }
    if m > MAX_KERDOCK_M {
        return Err(Error::TooLarge(format!("m = {m} exceeds {MAX_KERDOCK_M}")));
    }
    let ctx = FieldCtx::new(m - 1, None)?;
    let half = 1usize << (m - 1);
    let linear: Vec<Word> = ctx
        .elements()
        .map(|a| {
            Word::from_fn(half, |x| {
                let ax = ctx
                    .mul(a, ctx.element(x as u32).expect("in range"))
                    .expect("same field");
                ctx.trace(ax).expect("same field")
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut words = Vec::with_capacity(half * half * 2);
    for u in ctx.elements() {
        let f = kerdock_function(&ctx, u, m)?;
        for lin in &linear {
            for am in [false, true] {
                words.push(Word::from_fn(2 * half, |idx| {
                    let (x, xm) = (idx % half, idx >= half);
                    f.eval(idx as u32) ^ lin.get(x) ^ (am && xm)
                })?);
            }
        }
    }
    Ok((ctx, Code::new(words)?))
}

/// The full Kerdock-plus-linear family with the zero word removed.
pub fn construction_c(m: u32) -> Result<Construction> {
    let (ctx, full) = kerdock_full_code(m)?;
    let k = m / 2;
    let words: Vec<Word> = full
        .words()
        .iter()
        .filter(|w| !w.is_zero())
        .cloned()
        .collect();
    let code = Code::new(words)?;
    // (r+1)·2^(m-2) − (3r−1)·2^(k-2)
    let (big, small) = (1i64 << (m - 2), 1i64 << k);
    let bound = LinearForm::new(
        "lower-bound",
        rational(4 * big + small, 4),
        rational(4 * big - 3 * small, 4),
    );
    let predicted = PredictedParams {
        n: 1 << m,
        k: (1 << (2 * m - 1)) - 1,
        forms: vec![bound],
        kind: PredictionKind::LowerBound,
        d_h_claim: Some((1 << (m - 1)) - (1 << k)),
        trust: Trust::ClaimUnderTest,
    };
    Ok(Construction {
        id: "construction-c",
        m: Some(m),
        modulus: Some(ctx.modulus()),
        epsilon: None,
        code,
        predicted,
        notes: Vec::new(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormCheck {
    pub label: &'static str,
    pub predicted: Rational,
    /// Equality for exact predictions, `brute ≥ predicted` for lower bounds.
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub r: Rational,
    pub brute: Rational,
    pub witness: (usize, usize),
    pub forms: Vec<FormCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub construction: &'static str,
    pub n: usize,
    pub n_match: bool,
    pub k: usize,
    pub k_match: bool,
    pub d_h: usize,
    pub d_h_claim: Option<usize>,
    pub d_h_match: Option<bool>,
    pub kind: PredictionKind,
    pub trust: Trust,
    pub rows: Vec<RowCheck>,
    /// Forms that hold at every checked `r`, in declaration order.
    pub matching: Vec<&'static str>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// The primary form holds at every `r`, and `n`, `K` match.
    pub fn all_match(&self) -> bool {
        self.n_match && self.k_match && self.rows.iter().all(|row| row.forms[0].ok)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                json!({
                    "r": row.r.render(),
                    "brute": row.brute.render(),
                    "witness": [row.witness.0, row.witness.1],
                    "predicted": row.forms[0].predicted.render(),
                    "match": row.forms[0].ok,
                    "candidates": row.forms.iter().map(|f| json!({
                        "label": f.label,
                        "predicted": f.predicted.render(),
                        "match": f.ok,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "construction": self.construction,
            "n": self.n,
            "n_match": self.n_match,
            "K": self.k,
            "K_match": self.k_match,
            "d_H": self.d_h,
            "d_H_claim": self.d_h_claim,
            "d_H_match": self.d_h_match,
            "kind": self.kind.name(),
            "trust": self.trust.name(),
            "per_r": rows,
            "matching": self.matching,
            "notes": self.notes,
        })
    }
}

/// Brute-forces the profile once and checks every prediction at each `r`.
pub fn verify(c: &Construction, rs: &[Rational]) -> Result<VerificationReport> {
    for r in rs {
        require_r(r)?;
    }
    let profile = c.code.profile()?;
    let (d_h, _) = profile.min_hamming();
    let p = &c.predicted;
    let rows = rs
        .iter()
        .map(|r| {
            let brute = profile.evaluate(r)?;
            let forms = p
                .forms
                .iter()
                .map(|f| {
                    let predicted = f.at(r);
                    let ok = match p.kind {
                        PredictionKind::Exact => brute.value == predicted,
                        PredictionKind::LowerBound => brute.value >= predicted,
                    };
                    FormCheck {
                        label: f.label,
                        predicted,
                        ok,
                    }
                })
                .collect();
            Ok(RowCheck {
                r: r.clone(),
                brute: brute.value,
                witness: brute.witness,
                forms,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let matching: Vec<&'static str> = p
        .forms
        .iter()
        .enumerate()
        .filter(|(i, _)| rows.iter().all(|row| row.forms[*i].ok))
        .map(|(_, f)| f.label)
        .collect();
    let mut notes = c.notes.clone();
    let d_h_match = p.d_h_claim.map(|claim| claim == d_h);
    if d_h_match == Some(false) {
        notes.push(format!(
            "claimed d_H = {} but brute force gives {d_h}",
            p.d_h_claim.unwrap_or_default()
        ));
    }
    if p.kind == PredictionKind::LowerBound {
        let at_one = p.primary().at(&Rational::one());
        if let Some(claim) = p.d_h_claim {
            if at_one > rational(claim as i64, 1) {
                notes.push(format!(
                    "lower bound at r = 1 is {} which exceeds the claimed d_H = {claim}",
                    at_one.render()
                ));
            }
        }
    }
    if matching.is_empty() && !rows.is_empty() {
        notes.push("no candidate formula holds at every r".into());
    }
    Ok(VerificationReport {
        construction: c.id,
        n: c.code.n(),
        n_match: c.code.n() == p.n,
        k: c.code.len(),
        k_match: c.code.len() == p.k,
        d_h,
        d_h_claim: p.d_h_claim,
        d_h_match,
        kind: p.kind,
        trust: p.trust,
        rows,
        matching,
        notes,
    })
}
