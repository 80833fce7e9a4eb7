use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use torus_pinch::{
    cf_even_expand, counterexample_report, family_knot, is_slice_family, jvc_criterion, mat_apply,
    pinch_move, pinch_sequence, sign_sequence, surgery_result_knot, two_bridge_determinant, Error,
    Family, FamilyId, Fraction, Matrix, TorusKnot,
};

use crate::report::{
    cf_json, counterexample_json, fraction_json, knot_json, matrix_json, sequence_json, step_json,
    two_bridge_json, Status,
};
use crate::verify::{run_target, sections_document, Target};

#[derive(Debug, Parser)]
#[command(
    name = "torus-pinch",
    version,
    about = "Pinch moves on torus knots and slice certificates"
)]
pub struct Cli {
    /// Emit one JSON report document instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Suppress text output; the exit code still reports the outcome
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply one pinch move to T(P,Q)
    #[command(allow_negative_numbers = true)]
    PinchMove { p: i128, q: i128 },

    /// Pinch sequence from T(P,Q) down to the unknot
    #[command(allow_negative_numbers = true)]
    PinchSeq { p: i128, q: i128 },

    /// Pinch number of T(P,Q)
    #[command(allow_negative_numbers = true)]
    PinchNumber { p: i128, q: i128 },

    /// Parameters of K_N = T(4N,(2N+1)^2) or J_N = T(4N,(2N-1)^2)
    Family {
        #[arg(value_parser = parse_family)]
        family: Family,
        n: u64,
    },

    /// 2-bridge knot left after band surgery on a family member
    SurgeryKnot {
        #[arg(value_parser = parse_family)]
        family: Family,
        n: u64,
    },

    /// Rational tangle calculus
    Tangle {
        #[command(subcommand)]
        op: TangleOp,
    },

    /// Sign-count criterion for T(P,Q), P even and Q odd
    #[command(allow_negative_numbers = true)]
    Jvc { p: i128, q: i128 },

    /// Full counterexample certificate for a family member
    Report {
        #[arg(value_parser = parse_family)]
        family: Family,
        n: u64,
    },

    /// Check the published tables, corollaries and reports
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// Largest family index to check
        #[arg(long)]
        max_n: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum TangleOp {
    /// Even continued fraction of P/Q
    #[command(allow_negative_numbers = true)]
    Cf { p: i128, q: i128 },

    /// Image of the slope P/Q under [[A,B],[C,D]]
    #[command(allow_negative_numbers = true)]
    Apply {
        a: i128,
        b: i128,
        c: i128,
        d: i128,
        p: i128,
        q: i128,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VerifyTarget {
    Tables,
    Corollaries,
    All,
}

impl From<VerifyTarget> for Target {
    fn from(t: VerifyTarget) -> Self {
        match t {
            VerifyTarget::Tables => Target::Tables,
            VerifyTarget::Corollaries => Target::Corollaries,
            VerifyTarget::All => Target::All,
        }
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

pub struct Outcome {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: Value,
    pub status: Status,
    pub text: String,
}

struct Success {
    results: Value,
    text: String,
    status: Status,
}

impl Success {
    fn ok(results: Value, text: String) -> Self {
        Self {
            results,
            text,
            status: Status::Ok,
        }
    }
}

fn inputs<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn execute(command: Command) -> Outcome {
    let (name, inputs, result) = match command {
        Command::PinchMove { p, q } => (
            "pinch-move",
            inputs([("p", json!(p)), ("q", json!(q))]),
            cmd_pinch_move(p, q),
        ),
        Command::PinchSeq { p, q } => (
            "pinch-seq",
            inputs([("p", json!(p)), ("q", json!(q))]),
            cmd_pinch_seq(p, q),
        ),
        Command::PinchNumber { p, q } => (
            "pinch-number",
            inputs([("p", json!(p)), ("q", json!(q))]),
            cmd_pinch_number(p, q),
        ),
        Command::Family { family, n } => (
            "family",
            inputs([("family", json!(family.letter())), ("n", json!(n))]),
            cmd_family(family, n),
        ),
        Command::SurgeryKnot { family, n } => (
            "surgery-knot",
            inputs([("family", json!(family.letter())), ("n", json!(n))]),
            cmd_surgery_knot(family, n),
        ),
        Command::Tangle {
            op: TangleOp::Cf { p, q },
        } => (
            "tangle cf",
            inputs([("p", json!(p)), ("q", json!(q))]),
            cmd_tangle_cf(p, q),
        ),
        Command::Tangle {
            op: TangleOp::Apply { a, b, c, d, p, q },
        } => (
            "tangle apply",
            inputs([
                ("matrix", json!([[a, b], [c, d]])),
                ("p", json!(p)),
                ("q", json!(q)),
            ]),
            cmd_tangle_apply([a, b, c, d], p, q),
        ),
        Command::Jvc { p, q } => (
            "jvc",
            inputs([("p", json!(p)), ("q", json!(q))]),
            cmd_jvc(p, q),
        ),
        Command::Report { family, n } => (
            "report",
            inputs([("family", json!(family.letter())), ("n", json!(n))]),
            cmd_report(family, n),
        ),
        Command::Verify { target, max_n } => {
            let target = Target::from(target);
            let max_n = max_n.unwrap_or(target.default_max_n());
            (
                "verify",
                inputs([("target", json!(target.name())), ("max_n", json!(max_n))]),
                cmd_verify(target, max_n),
            )
        }
    };

    match result {
        Ok(Success {
            results,
            text,
            status,
        }) => Outcome {
            command: name.to_string(),
            inputs,
            results,
            status,
            text,
        },
        Err(e) => {
            let status = match e {
                Error::TheoremViolation { .. } => Status::Violation,
                _ => Status::Error,
            };
            Outcome {
                command: name.to_string(),
                inputs,
                results: json!({ "error": e.to_string() }),
                status,
                text: String::new(),
            }
        }
    }
}

fn knot(p: i128, q: i128) -> Result<TorusKnot, Error> {
    TorusKnot::new(p, q)
}

fn cmd_pinch_move(p: i128, q: i128) -> Result<Success, Error> {
    let step = pinch_move(&knot(p, q)?)?;
    let text = format!(
        "T{} -> T{}\nt = {}, h = {}\np-2t = {}, q-2h = {}, sign {}\n",
        step.from, step.to, step.t, step.h, step.p_minus_2t, step.q_minus_2h, step.sign
    );
    Ok(Success::ok(step_json(&step), text))
}

fn cmd_pinch_seq(p: i128, q: i128) -> Result<Success, Error> {
    let seq = pinch_sequence(&knot(p, q)?)?;
    let chain: Vec<String> = seq.knots().map(|k| k.to_string()).collect();
    let mut text = format!(
        "{}\npinch number: {}\n",
        chain.join(" -> "),
        seq.pinch_number()
    );
    if !seq.steps.is_empty() {
        let rows: Vec<[String; 5]> = seq
            .steps
            .iter()
            .map(|s| {
                [
                    s.from.to_string(),
                    s.to.to_string(),
                    s.t.to_string(),
                    s.h.to_string(),
                    s.sign.to_string(),
                ]
            })
            .collect();
        let header = ["from", "to", "t", "h", "sign"];
        let widths: Vec<usize> = (0..5)
            .map(|i| {
                rows.iter()
                    .map(|r| r[i].len())
                    .chain([header[i].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        text.push('\n');
        for row in std::iter::once(header.map(String::from)).chain(rows) {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            let _ = writeln!(text, "{}", line.join("  ").trim_end());
        }
    }
    Ok(Success::ok(sequence_json(&seq), text))
}

fn cmd_pinch_number(p: i128, q: i128) -> Result<Success, Error> {
    let seq = pinch_sequence(&knot(p, q)?)?;
    let n = seq.pinch_number();
    Ok(Success::ok(json!({ "pinch_number": n }), format!("{n}\n")))
}

fn cmd_family(family: Family, n: u64) -> Result<Success, Error> {
    let id = FamilyId::new(family, n)?;
    let k = family_knot::<i128>(id)?;
    let trivial = id.is_trivial();
    let suffix = if trivial { " (unknotted)" } else { "" };
    let results = json!({
        "family": family.letter(),
        "n": n,
        "knot": knot_json(&k),
        "trivial": trivial,
    });
    Ok(Success::ok(results, format!("{id} = T{k}{suffix}\n")))
}

fn cmd_surgery_knot(family: Family, n: u64) -> Result<Success, Error> {
    let id = FamilyId::nontrivial(family, n)?;
    let k = surgery_result_knot::<i128>(id)?;
    let cf = cf_even_expand(&k.normalized)?;
    let det = two_bridge_determinant(&k)?;
    let slice = is_slice_family(&cf);
    let (r, s) = k.matrix.apply_vector(k.t2.num(), k.t2.den())?;
    let mut results = two_bridge_json(&k);
    results["image"] = json!([r, s]);
    results["cf"] = cf_json(&cf);
    results["determinant"] = json!(det);
    results["slice_family"] = json!(slice);
    let text = format!(
        "{id} = T{}: surgery on {} bands\n\
         tangle slopes: {} and {}\n\
         normalizing matrix: {}\n\
         image column: ({r},{s})\n\
         normalized fraction: {}\n\
         even continued fraction: {cf}\n\
         determinant: {det}\n\
         slice family [k+2,k]: {}\n",
        family_knot::<i128>(id)?,
        2 * n - 1,
        k.t1,
        k.t2,
        k.matrix,
        k.normalized,
        if slice { "yes" } else { "no" },
    );
    Ok(Success::ok(results, text))
}

fn cmd_tangle_cf(p: i128, q: i128) -> Result<Success, Error> {
    let f = Fraction::new(p, q)?;
    let cf = cf_even_expand(&f)?;
    let results = json!({ "fraction": fraction_json(&f), "cf": cf_json(&cf) });
    Ok(Success::ok(results, format!("{f} = {cf}\n")))
}

fn cmd_tangle_apply([a, b, c, d]: [i128; 4], p: i128, q: i128) -> Result<Success, Error> {
    let m = Matrix::new(a, b, c, d)?;
    let f = Fraction::new(p, q)?;
    let image = mat_apply(&m, &f)?;
    let results = json!({
        "matrix": matrix_json(&m),
        "fraction": fraction_json(&f),
        "image": fraction_json(&image),
    });
    Ok(Success::ok(results, format!("{m} . {f} = {image}\n")))
}

fn cmd_jvc(p: i128, q: i128) -> Result<Success, Error> {
    let k = knot(p, q)?;
    let verdict = jvc_criterion(&k)?;
    let signs = sign_sequence(&k)?;
    let symbols: Vec<&str> = signs.signs.iter().map(|s| s.symbol()).collect();
    let results = json!({
        "signs": symbols,
        "negative_count": verdict.negative_count,
        "equals_pinch_minus_one": verdict.equals_pinch_minus_one,
    });
    let text = format!(
        "signs: {}\nnegative moves: {}\nnu - sigma/2 = pinch number - 1: {}\n",
        symbols.join(" "),
        verdict.negative_count,
        if verdict.equals_pinch_minus_one {
            "yes"
        } else {
            "no"
        },
    );
    Ok(Success::ok(results, text))
}

fn cmd_report(family: Family, n: u64) -> Result<Success, Error> {
    let r = counterexample_report::<i128>(FamilyId::new(family, n)?)?;
    let text = format!(
        "{id} = T{knot}\n\
         pinch number: {pn}\n\
         bands to a slice knot: {bands} (nonorientable 4-ball genus <= {bands})\n\
         slice fraction: {frac}\n\
         even continued fraction: {cf}\n\
         slice family [k+2,k]: {slice}\n\
         determinant: {det}\n\
         negative pinch moves: {neg}\n\
         nu - sigma/2 = pinch number - 1: {jvc}\n",
        id = r.id,
        knot = r.knot,
        pn = r.pinch_number,
        bands = r.band_count,
        frac = r.slice_fraction,
        cf = r.slice_cf,
        slice = if r.slice_recognized { "yes" } else { "no" },
        det = r.determinant,
        neg = r.jvc_negative_count,
        jvc = if r.jvc_equals_pinch_minus_one {
            "yes"
        } else {
            "no"
        },
    );
    Ok(Success::ok(counterexample_json(&r), text))
}

fn cmd_verify(target: Target, max_n: u64) -> Result<Success, Error> {
    if max_n < 2 {
        return Err(Error::InvalidFamily(format!(
            "--max-n must be at least 2, got {max_n}"
        )));
    }
    let sections = run_target(target, max_n);
    let doc = sections_document(target, max_n, &sections);
    let mut text = String::new();
    if target == Target::Tables {
        let _ = writeln!(text, "{}", sections[0].summary);
    } else {
        for s in &sections {
            let _ = writeln!(text, "{}: {}", s.name, s.summary);
        }
    }
    for s in &sections {
        for v in &s.violations {
            let _ = writeln!(text, "VIOLATION [{}] {v}", s.name);
        }
    }
    Ok(Success {
        results: doc.results,
        text,
        status: doc.status,
    })
}
