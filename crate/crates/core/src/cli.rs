//! The `cncode` command line.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::boolean::{parse_anf, BooleanFunction};
use crate::bounds::{channel_r, classify_parameters, BoundStatus, BoundVerdict};
use crate::code::Code;
use crate::constructions::{
    construction_a, construction_a_punctured, construction_b, construction_c,
    hadamard_construction, verify, Construction,
};
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Scalar};
use crate::Rational;

#[derive(Debug, Parser)]
#[command(
    name = "cncode",
    version,
    about = "Binary codes under the asymmetric discrepancy δ_r"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a code and write it with a `.meta.json` sidecar.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Print n, K, d_H, the Pareto profile and δ_r for each r.
    Analyze {
        file: PathBuf,
        #[arg(long = "r", required = true, value_parser = parse_r)]
        r: Vec<Rational>,
        #[arg(long)]
        json: bool,
    },
    /// Check Singleton, Hamming and Plotkin bounds at one r.
    Bounds {
        file: PathBuf,
        #[arg(long = "r", value_parser = parse_r)]
        r: Rational,
        #[arg(long)]
        json: bool,
    },
    /// Walsh spectrum and bentness of a Boolean function.
    Walsh {
        #[arg(long, conflicts_with = "tt", required_unless_present = "tt")]
        anf: Option<String>,
        /// Truth table as `m=<m>;tt=<hex>`, or bare hex with `--m`.
        #[arg(long)]
        tt: Option<String>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Build a construction, brute-force it and compare with predictions.
    Verify {
        construction: VerifyKind,
        #[command(flatten)]
        params: ConstructionArgs,
        #[arg(long = "r", required = true, value_parser = parse_r)]
        r: Vec<Rational>,
    },
    /// r for a binary asymmetric channel with crossover probabilities p ≤ q.
    ChannelR {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
    },
}

#[derive(Debug, Subcommand)]
enum ConstructKind {
    Hadamard {
        #[arg(long)]
        t: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    BentTranslate {
        #[arg(long)]
        anf: String,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    BentSupport {
        #[arg(long)]
        anf: String,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    Kerdock {
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(short = 'o', long = "output")]
    output: PathBuf,
    /// Values of r recorded under "verified" in the metadata.
    #[arg(long = "r", value_parser = parse_r, default_values = ["1", "2"])]
    r: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyKind {
    Hadamard,
    ConstructionA,
    ConstructionAPunctured,
    ConstructionB,
    ConstructionC,
}

#[derive(Debug, Args)]
struct ConstructionArgs {
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    /// Bent input for A and B; defaults to the inner product form.
    #[arg(long)]
    anf: Option<String>,
    /// Sign of the default bent input: -1 for x1x2+…, 1 for its complement.
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    epsilon: i8,
    /// First coordinate kept by the punctured code.
    #[arg(long, default_value_t = 0)]
    alpha: u8,
}

fn parse_r(text: &str) -> std::result::Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

/// Parses `args` (including the program name), writes the payload to `out`
/// and diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(payload) => {
            let _ = out.write_all(payload.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(command: Command) -> Result<String> {
    match command {
        Command::Construct { kind } => construct(kind),
        Command::Analyze { file, r, json } => analyze(&read_code(&file)?, &r, json),
        Command::Bounds { file, r, json } => bounds(&read_code(&file)?, &r, json),
        Command::Walsh { anf, tt, m, json } => walsh(anf, tt, m, json),
        Command::Verify {
            construction,
            params,
            r,
        } => {
            let c = build(construction, &params)?;
            let report = verify(&c, &r)?;
            Ok(pretty(&c.metadata(Some(&report))))
        }
        Command::ChannelR { p, q } => Ok(format!("{:.12}\n", channel_r(p, q)?)),
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

fn read_code(path: &Path) -> Result<Code> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    Code::parse(&text)
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| Error::Parameter(format!("--{flag} is required for this construction")))
}

fn bent_input(params: &ConstructionArgs) -> Result<BooleanFunction> {
    let m = require(params.m, "m")?;
    match &params.anf {
        Some(text) => parse_anf(text, m),
        None => match params.epsilon {
            -1 => BooleanFunction::inner_product(m, false),
            1 => BooleanFunction::inner_product(m, true),
            e => Err(Error::Parameter(format!(
                "epsilon must be -1 or 1, got {e}"
            ))),
        },
    }
}

fn build(kind: VerifyKind, params: &ConstructionArgs) -> Result<Construction> {
    match kind {
        VerifyKind::Hadamard => hadamard_construction(require(params.t, "t")?),
        VerifyKind::ConstructionA => construction_a(&bent_input(params)?),
        VerifyKind::ConstructionAPunctured => match params.alpha {
            0 | 1 => construction_a_punctured(&bent_input(params)?, params.alpha == 1),
            a => Err(Error::Parameter(format!("alpha must be 0 or 1, got {a}"))),
        },
        VerifyKind::ConstructionB => construction_b(&bent_input(params)?),
        VerifyKind::ConstructionC => construction_c(require(params.m, "m")?),
    }
}

fn construct(kind: ConstructKind) -> Result<String> {
    let (c, out) = match kind {
        ConstructKind::Hadamard { t, out } => (hadamard_construction(t)?, out),
        ConstructKind::BentTranslate { anf, m, out } => {
            (construction_a(&parse_anf(&anf, m)?)?, out)
        }
        ConstructKind::BentSupport { anf, m, out } => (construction_b(&parse_anf(&anf, m)?)?, out),
        ConstructKind::Kerdock { m, out } => (construction_c(m)?, out),
    };
    let report = verify(&c, &out.r)?;
    let meta = c.metadata(Some(&report));
    let header = vec![format!("{} n={} K={}", c.id, c.code.n(), c.code.len())];
    std::fs::write(&out.output, c.code.to_text(&header)).map_err(|e| io_error(&out.output, e))?;
    let meta_path = metadata_path(&out.output);
    std::fs::write(&meta_path, pretty(&meta)).map_err(|e| io_error(&meta_path, e))?;
    Ok(format!(
        "wrote {} and {}\n",
        out.output.display(),
        meta_path.display()
    ))
}

/// `FILE` → `FILE.meta.json`.
pub fn metadata_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

fn analyze(code: &Code, rs: &[Rational], as_json: bool) -> Result<String> {
    let profile = code.profile()?;
    let (d_h, _) = profile.min_hamming();
    let values = rs
        .iter()
        .map(|r| profile.evaluate(r))
        .collect::<Result<Vec<_>>>()?;
    if as_json {
        let points: Vec<Value> = profile
            .points()
            .iter()
            .map(|p| json!({"d10": p.pair.d10, "d01": p.pair.d01, "witness": [p.witness.0, p.witness.1]}))
            .collect();
        let deltas: Vec<Value> = rs
            .iter()
            .zip(&values)
            .map(|(r, v)| json!({"r": r.render(), "delta_r": v.value.render(), "witness": [v.witness.0, v.witness.1]}))
            .collect();
        return Ok(pretty(&json!({
            "n": code.n(),
            "K": code.len(),
            "d_H": d_h,
            "profile": points,
            "delta_r": deltas,
        })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "n = {}", code.n());
    let _ = writeln!(s, "K = {}", code.len());
    let _ = writeln!(s, "d_H = {d_h}");
    let pts: Vec<String> = profile
        .pairs()
        .map(|p| format!("({},{})", p.d10, p.d01))
        .collect();
    let _ = writeln!(s, "profile (d10,d01): {}", pts.join(" "));
    for (r, v) in rs.iter().zip(&values) {
        let _ = writeln!(
            s,
            "delta_{r} = {} (witness {} -> {})",
            v.value, v.witness.0, v.witness.1
        );
    }
    Ok(s)
}

fn opt_render(v: &Option<Rational>) -> Value {
    v.as_ref().map_or(Value::Null, |x| json!(x.render()))
}

fn status_json(s: &BoundStatus) -> Value {
    json!({
        "kind": s.kind.name(),
        "parameter": s.parameter.to_string(),
        "applicable": s.applicable,
        "rhs": opt_render(&s.rhs),
        "slack": opt_render(&s.slack),
        "holds": s.holds,
        "meets": s.meets,
    })
}

fn verdict_json(v: &BoundVerdict<Rational>) -> Value {
    json!({
        "reaches_for_d_H": v.reaches_for_dh,
        "reaches_for_delta_r": v.reaches_for_delta_r,
        "d_H_status": status_json(&v.status_dh),
        "threshold": v.threshold.render(),
        "threshold_met": v.threshold_met,
        "odd_distance": v.odd_distance,
        "characterized": v.characterized,
        "agree": v.agree,
        "r_threshold": opt_render(&v.r_threshold),
        "r_below_threshold": v.r_below_threshold,
    })
}

fn bounds(code: &Code, r: &Rational, as_json: bool) -> Result<String> {
    let profile = code.profile()?;
    let (d_h, _) = profile.min_hamming();
    let delta = profile.evaluate(r)?.value;
    let rep = classify_parameters(code.n(), code.len(), d_h, delta, r)?;
    let verdicts = [&rep.singleton, &rep.hamming, &rep.plotkin];
    if as_json {
        let mut b = serde_json::Map::new();
        let mut c = serde_json::Map::new();
        for v in verdicts {
            b.insert(v.kind.name().into(), status_json(&v.status_delta_r));
            c.insert(v.kind.name().into(), verdict_json(v));
        }
        c.insert("all_agree".into(), json!(rep.all_agree()));
        return Ok(pretty(&json!({
            "n": rep.n,
            "K": rep.k,
            "d_H": rep.d_h,
            "r": rep.r.render(),
            "delta_r": rep.delta_r.render(),
            "bounds": b,
            "characterization": c,
        })));
    }
    let mut s = String::new();
    let _ = writeln!(
        s,
        "n = {}, K = {}, d_H = {}, r = {}, delta_r = {}",
        rep.n, rep.k, rep.d_h, rep.r, rep.delta_r
    );
    for v in verdicts {
        let st = &v.status_delta_r;
        let rhs = st.rhs.as_ref().map_or("n/a".to_string(), |x| x.to_string());
        let _ = writeln!(
            s,
            "{}: parameter {} applicable {} K <= {} holds {} meets {}",
            v.kind.name(),
            st.parameter,
            st.applicable,
            rhs,
            st.holds,
            st.meets
        );
        let _ = writeln!(
            s,
            "  characterization: reaches for d_H {}, delta_r > {} {}, predicted {}, direct {}, agree {}",
            v.reaches_for_dh, v.threshold, v.threshold_met, v.characterized, v.reaches_for_delta_r, v.agree
        );
    }
    Ok(s)
}

fn walsh(anf: Option<String>, tt: Option<String>, m: Option<u32>, as_json: bool) -> Result<String> {
    let f = match (anf, tt) {
        (Some(text), _) => parse_anf(&text, require(m, "m")?)?,
        (None, Some(hex)) if hex.starts_with("m=") => BooleanFunction::from_hex(&hex)?,
        (None, Some(hex)) => {
            BooleanFunction::from_hex(&format!("m={};tt={hex}", require(m, "m")?))?
        }
        (None, None) => unreachable!("clap requires one of --anf/--tt"),
    };
    let w = f.walsh();
    let eps = w.bent_sign();
    let support = f.weight();
    if as_json {
        return Ok(pretty(&json!({
            "m": f.vars(),
            "tt": f.to_hex(),
            "spectrum": w.values(),
            "bent": w.is_bent(),
            "epsilon": eps,
            "support": support,
        })));
    }
    let mut s = String::new();
    let values: Vec<String> = w.values().iter().map(i64::to_string).collect();
    let _ = writeln!(s, "{}", f.to_hex());
    let _ = writeln!(s, "spectrum: {}", values.join(" "));
    let _ = writeln!(s, "bent: {}", w.is_bent());
    let _ = writeln!(
        s,
        "epsilon: {}",
        eps.map_or("n/a".to_string(), |e| e.to_string())
    );
    let _ = writeln!(s, "|D_f| = {support}");
    Ok(s)
}
