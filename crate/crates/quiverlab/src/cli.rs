//! Command-line front end: quiver and representation file formats,
//! subcommand dispatch, and text or JSON reports.
//!
//! Exit codes: 0 on success or PASS, 1 when a verification fails, 2 on
//! usage or parse errors.

use crate::linalg::{format_rat, parse_rat, Matrix, QMat};
use crate::param::{self, FlagType, FpRep};
use crate::quiver::{DimVector, Quiver, Sign};
use crate::rep::{
    ambient_dim, euler_form, ext_dim, hom_dim, lambda_membership, moment_map, FullRep, Rep,
};
use crate::roots::{self, Direction};
use crate::series::{self};
use crate::tubes;
use clap::{Parser, Subcommand};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Invalid(String),
}

fn parse_err(path: &Path, line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        path: path.display().to_string(),
        line,
        column,
        message: message.into(),
    }
}

/// Parse the quiver text format: `affine-a n` with an orientation word on
/// the next line, or `cyclic p`.
pub fn parse_quiver_text(text: &str, path: &Path) -> Result<Quiver, CliError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, 1, "empty quiver file"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or("");
    match kind {
        "affine-a" => {
            let n: usize = words
                .next()
                .and_then(|w| w.parse().ok())
                .ok_or_else(|| parse_err(path, ln + 1, 1, "expected `affine-a <n>`"))?;
            let (wln, word) = lines
                .next()
                .ok_or_else(|| parse_err(path, ln + 2, 1, "missing orientation word"))?;
            let word = word.trim();
            for (col, c) in word.chars().enumerate() {
                if Sign::from_char(c).is_err() {
                    return Err(parse_err(path, wln + 1, col + 1, format!("bad sign {c:?}")));
                }
            }
            Quiver::affine_a(n, word)
                .map_err(|e| parse_err(path, wln + 1, 1, e.to_string()))
        }
        "cyclic" => {
            let p: usize = words
                .next()
                .and_then(|w| w.parse().ok())
                .ok_or_else(|| parse_err(path, ln + 1, 1, "expected `cyclic <p>`"))?;
            if p == 0 {
                return Err(parse_err(path, ln + 1, 1, "cyclic quivers need p >= 1"));
            }
            Ok(Quiver::cyclic(p))
        }
        other => Err(parse_err(path, ln + 1, 1, format!("unknown quiver kind {other:?}"))),
    }
}

pub fn parse_quiver_file(path: &Path) -> Result<Quiver, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_quiver_text(&text, path)
}

/// Serialize a quiver in the text format; round-trips through the parser.
pub fn serialize_quiver(q: &Quiver) -> String {
    if !q.is_acyclic() {
        format!("cyclic {}\n", q.vertex_count())
    } else {
        format!("affine-a {}\n{}\n", q.vertex_count() - 1, q.orientation_word())
    }
}

fn format_matrix(m: &QMat) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            (0..m.cols()).map(|j| format_rat(m.get(i, j))).collect::<Vec<_>>().join(" ")
        })
        .collect();
    rows.join(" ; ")
}

fn parse_matrix(
    text: &str,
    rows: usize,
    cols: usize,
    path: &Path,
    line: usize,
) -> Result<QMat, CliError> {
    let mut m = Matrix::zeros(rows, cols);
    if rows == 0 || cols == 0 {
        if !text.trim().is_empty() {
            return Err(parse_err(path, line, 1, "expected an empty matrix"));
        }
        return Ok(m);
    }
    let row_texts: Vec<&str> = text.split(';').collect();
    if row_texts.len() != rows {
        return Err(parse_err(
            path,
            line,
            1,
            format!("expected {rows} matrix rows, found {}", row_texts.len()),
        ));
    }
    for (i, row) in row_texts.iter().enumerate() {
        let entries: Vec<&str> = row.split_whitespace().collect();
        if entries.len() != cols {
            return Err(parse_err(
                path,
                line,
                1,
                format!("expected {cols} entries in row {i}, found {}", entries.len()),
            ));
        }
        for (j, e) in entries.iter().enumerate() {
            let v = parse_rat(e)
                .ok_or_else(|| parse_err(path, line, 1, format!("bad rational {e:?}")))?;
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// Parsed rep-file header: the quiver, its reference string, the dimension
/// vector, and the remaining (line number, text) pairs.
type RepHeader = (Arc<Quiver>, String, DimVector, Vec<(usize, String)>);

fn rep_header_and_lines(path: &Path) -> Result<RepHeader, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hln, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, 1, "empty representation file"))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("rep") {
        return Err(parse_err(path, hln + 1, 1, "expected header `rep <quiver-file> <dims>`"));
    }
    let qref = words
        .next()
        .ok_or_else(|| parse_err(path, hln + 1, 1, "missing quiver reference"))?
        .to_string();
    let dims_text = words
        .next()
        .ok_or_else(|| parse_err(path, hln + 1, 1, "missing dimension vector"))?;
    let dims = DimVector::parse(dims_text)
        .ok_or_else(|| parse_err(path, hln + 1, 1, "bad dimension vector"))?;
    let qpath = path.parent().unwrap_or_else(|| Path::new(".")).join(&qref);
    let quiver = Arc::new(parse_quiver_file(&qpath)?);
    if dims.len() != quiver.vertex_count() || !dims.is_nonnegative() {
        return Err(parse_err(path, hln + 1, 1, "dimension vector does not fit the quiver"));
    }
    let rest: Vec<(usize, String)> = lines.map(|(n, l)| (n + 1, l.to_string())).collect();
    Ok((quiver, qref, dims, rest))
}

fn parse_map_line(
    entry: &(usize, String),
    q: &Quiver,
    h: usize,
    dims: &DimVector,
    path: &Path,
) -> Result<QMat, CliError> {
    let (line, text) = entry;
    let (head, body) = text
        .split_once(':')
        .ok_or_else(|| parse_err(path, *line, 1, "expected `start->end: entries`"))?;
    let expected = format!("{}->{}", q.start(h), q.end(h));
    if head.trim() != expected {
        return Err(parse_err(
            path,
            *line,
            1,
            format!("expected arrow {expected}, found {}", head.trim()),
        ));
    }
    parse_matrix(body, dims[q.end(h)] as usize, dims[q.start(h)] as usize, path, *line)
}

/// Parse a representation file: a header line `rep <quiver-file> <dims>`
/// followed by one line per arrow in canonical arrow order.
pub fn parse_rep_file(path: &Path) -> Result<(Rep, String), CliError> {
    let (quiver, qref, dims, lines) = rep_header_and_lines(path)?;
    let arrows = quiver.arrows();
    if lines.len() != arrows.len() {
        return Err(parse_err(
            path,
            lines.last().map_or(1, |l| l.0),
            1,
            format!("expected {} arrow lines, found {}", arrows.len(), lines.len()),
        ));
    }
    let mut maps = Vec::with_capacity(arrows.len());
    for (k, &h) in arrows.iter().enumerate() {
        maps.push(parse_map_line(&lines[k], &quiver, h, &dims, path)?);
    }
    Ok((Rep::new(quiver, dims, maps), qref))
}

/// Parse a full representation file: one line per half-edge in half-edge
/// order, covering both orientations.
pub fn parse_full_rep_file(path: &Path) -> Result<(FullRep, String), CliError> {
    let (quiver, qref, dims, lines) = rep_header_and_lines(path)?;
    let count = quiver.half_edge_count();
    if lines.len() != count {
        return Err(parse_err(
            path,
            lines.last().map_or(1, |l| l.0),
            1,
            format!("expected {} half-edge lines, found {}", count, lines.len()),
        ));
    }
    let mut maps = Vec::with_capacity(count);
    for (h, entry) in lines.iter().enumerate() {
        maps.push(parse_map_line(entry, &quiver, h, &dims, path)?);
    }
    Ok((FullRep::new(quiver, dims, maps), qref))
}

/// Serialize a representation; `quiver_ref` is the path recorded in the
/// header, resolved relative to the rep file on parse.
pub fn serialize_rep(rep: &Rep, quiver_ref: &str) -> String {
    let q = rep.quiver();
    let mut out = format!("rep {} {}\n", quiver_ref, rep.dims());
    for (k, &h) in q.arrows().iter().enumerate() {
        let _ = writeln!(out, "{}->{}: {}", q.start(h), q.end(h), format_matrix(rep.map(k)));
    }
    out
}

pub fn serialize_full_rep(rep: &FullRep, quiver_ref: &str) -> String {
    let q = rep.quiver();
    let mut out = format!("rep {} {}\n", quiver_ref, rep.dims());
    for h in 0..q.half_edge_count() {
        let _ = writeln!(out, "{}->{}: {}", q.start(h), q.end(h), format_matrix(rep.map(h)));
    }
    out
}

#[derive(Parser, Debug)]
#[command(name = "quiverlab", version, about = "Exact representation theory of affine A-type quivers")]
pub struct Cli {
    /// Emit a stable machine-readable report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed reserved for sampling subcommands; recorded in reports.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate positive roots below a bound, with defect and class.
    Roots {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        bound: String,
    },
    /// Discover the non-homogeneous tubes.
    Tubes {
        #[arg(long)]
        quiver: PathBuf,
    },
    /// List the parametrization pairs for a dimension vector.
    Param {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        dim: String,
        /// Comma-separated homogeneous parameters (defaults to primes).
        #[arg(long)]
        params: Option<String>,
    },
    /// Check the count identity degree by degree.
    Verify {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        degree: usize,
        /// Also compare each dimension vector against its graded dimension.
        #[arg(long)]
        per_dim: bool,
    },
    /// Hom, Ext and Euler form of two representations.
    Homext {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Apply the Coxeter transformation to a dimension vector, or the
    /// Coxeter functor to a representation file.
    Coxeter {
        #[arg(long)]
        quiver: Option<PathBuf>,
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long)]
        dim: Option<String>,
        #[arg(long, default_value = "plus")]
        direction: String,
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Write the resulting representation to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count stable flags of a representation over a prime field.
    Flags {
        #[arg(long)]
        rep: PathBuf,
        /// Quotient dimension vectors, semicolon separated.
        #[arg(long = "type")]
        flag_type: String,
        #[arg(long)]
        prime: u64,
    },
    /// Moment map blocks and membership in the nilpotent moment-zero locus.
    Moment {
        #[arg(long)]
        rep: PathBuf,
        /// The file lists every half-edge instead of only the arrows.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Serialize)]
struct JsonReport {
    subcommand: String,
    inputs: BTreeMap<String, String>,
    results: serde_json::Value,
    pass: bool,
}

struct Outcome {
    text: String,
    results: serde_json::Value,
    pass: bool,
}

fn parse_dim(text: &str) -> Result<DimVector, CliError> {
    DimVector::parse(text)
        .ok_or_else(|| CliError::Invalid(format!("bad dimension vector {text:?}")))
}

fn load_quiver(path: &Path) -> Result<Arc<Quiver>, CliError> {
    Ok(Arc::new(parse_quiver_file(path)?))
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn run_roots(path: &Path, bound: &str) -> Result<Outcome, CliError> {
    let q = load_quiver(path)?;
    let bound = parse_dim(bound)?;
    let records = roots::positive_roots_up_to(&q, &bound).map_err(invalid)?;
    let mut text = format!("{:<12} {:<10} {:>7}  class\n", "vector", "kind", "defect");
    let mut rows = Vec::new();
    for r in &records {
        let _ = writeln!(
            text,
            "{:<12} {:<10} {:>7}  {}",
            r.vector.to_string(),
            r.kind.to_string(),
            r.defect,
            r.class
        );
        rows.push(serde_json::json!({
            "vector": r.vector.to_string(),
            "kind": r.kind.to_string(),
            "defect": r.defect,
            "class": r.class.to_string(),
        }));
    }
    let _ = writeln!(text, "{} roots", records.len());
    Ok(Outcome { text, results: serde_json::json!({ "roots": rows }), pass: true })
}

fn run_tubes(path: &Path) -> Result<Outcome, CliError> {
    let q = load_quiver(path)?;
    let found = tubes::find_tubes(&q).map_err(invalid)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (i, t) in found.iter().enumerate() {
        let _ = writeln!(text, "tube {} period {}", i, t.period());
        let mut positions = Vec::new();
        for r in 0..t.period() {
            let h = t.connecting_arrow(r);
            let _ = writeln!(
                text,
                "  r={}: support {:?}  s={} t={}  h: {}->{}",
                r,
                t.support(r),
                t.source(r),
                t.sink(r),
                q.start(h),
                q.end(h)
            );
            positions.push(serde_json::json!({
                "r": r,
                "support": t.support(r),
                "source": t.source(r),
                "sink": t.sink(r),
                "connecting": format!("{}->{}", q.start(h), q.end(h)),
            }));
        }
        rows.push(serde_json::json!({ "period": t.period(), "positions": positions }));
    }
    let census: usize = found.iter().map(|t| t.period() - 1).sum();
    let _ = writeln!(
        text,
        "{} tube(s); sum of (period - 1) = {} = N - 2",
        found.len(),
        census
    );
    Ok(Outcome {
        text,
        results: serde_json::json!({ "tubes": rows, "census": census }),
        pass: true,
    })
}

fn run_param(path: &Path, dim: &str, params: Option<&str>) -> Result<Outcome, CliError> {
    let q = load_quiver(path)?;
    let nu = parse_dim(dim)?;
    let pairs = param::enumerate_phi(&q, &nu).map_err(invalid)?;
    let pool: Vec<crate::linalg::Rat> = match params {
        Some(text) => text
            .split(',')
            .map(|t| parse_rat(t).ok_or_else(|| CliError::Invalid(format!("bad rational {t:?}"))))
            .collect::<Result<_, _>>()?,
        None => param::default_parameters(nu.total().max(0) as usize),
    };
    let mut text = format!("phi({nu}) has {} pairs\n", pairs.len());
    let mut rows = Vec::new();
    for sl in &pairs {
        if sl.parts() > pool.len() {
            return Err(CliError::Invalid(format!(
                "need at least {} homogeneous parameters",
                sl.parts()
            )));
        }
        let x = param::stratum_representative(&q, sl, &pool[..sl.parts()]).map_err(invalid)?;
        let group_dim: i64 = x.dims().entries().iter().map(|d| d * d).sum();
        let dim = sl.parts() as i64 + group_dim - hom_dim(&x, &x).map_err(invalid)? as i64;
        let _ = writeln!(text, "  dim {:>3}  {}", dim, sl.describe());
        rows.push(serde_json::json!({ "pair": sl.describe(), "stratum_dim": dim }));
    }
    let _ = writeln!(text, "ambient dim {}", ambient_dim(&q, &nu));
    Ok(Outcome {
        text,
        results: serde_json::json!({
            "count": pairs.len(),
            "ambient_dim": ambient_dim(&q, &nu),
            "strata": rows,
        }),
        pass: true,
    })
}

fn run_verify(path: &Path, degree: usize, per_dim: bool) -> Result<Outcome, CliError> {
    let q = load_quiver(path)?;
    let phi = series::phi_series(&q, degree).map_err(invalid)?;
    let product = series::product_series(&q, degree).map_err(invalid)?;
    let mut pass = true;
    let mut text = format!("{:>6} {:>10} {:>10}  status\n", "degree", "sum|phi|", "product");
    let mut rows = Vec::new();
    for d in 0..=degree {
        let (a, b) = (phi.coefficient(d), product.coefficient(d));
        let ok = a == b;
        pass &= ok;
        let _ = writeln!(
            text,
            "{:>6} {:>10} {:>10}  {}",
            d,
            a,
            b,
            if ok { "PASS" } else { "FAIL" }
        );
        rows.push(serde_json::json!({
            "degree": d, "phi": a, "product": b, "pass": ok,
        }));
    }
    let mut per_dim_rows = Vec::new();
    if per_dim {
        let _ = writeln!(text, "{:<12} {:>8} {:>8}  status", "nu", "|phi|", "graded");
        for (nu, &count) in phi.refinement().expect("phi series carries a refinement") {
            let graded = series::pbw_dim(&q, nu).map_err(invalid)?;
            let ok = count == graded;
            pass &= ok;
            let _ = writeln!(
                text,
                "{:<12} {:>8} {:>8}  {}",
                nu.to_string(),
                count,
                graded,
                if ok { "PASS" } else { "FAIL" }
            );
            per_dim_rows.push(serde_json::json!({
                "nu": nu.to_string(), "phi": count, "graded": graded, "pass": ok,
            }));
        }
    }
    let _ = writeln!(text, "{}", if pass { "PASS" } else { "FAIL" });
    let mut results = serde_json::json!({ "degrees": rows });
    if per_dim {
        results["per_dim"] = serde_json::Value::Array(per_dim_rows);
    }
    Ok(Outcome { text, results, pass })
}

fn run_homext(a: &Path, b: &Path) -> Result<Outcome, CliError> {
    let (ra, _) = parse_rep_file(a)?;
    let (rb, _) = parse_rep_file(b)?;
    let hom = hom_dim(&ra, &rb).map_err(invalid)?;
    let ext = ext_dim(&ra, &rb).map_err(invalid)?;
    let euler = euler_form(ra.quiver(), ra.dims(), rb.dims()).map_err(invalid)?;
    let pass = hom as i64 - ext as i64 == euler;
    let text = format!("hom={hom}, ext={ext}, euler={euler}\n{}\n", if pass { "PASS" } else { "FAIL" });
    Ok(Outcome {
        text,
        results: serde_json::json!({ "hom": hom, "ext": ext, "euler": euler }),
        pass,
    })
}

#[allow(clippy::too_many_arguments)]
fn run_coxeter(
    quiver: Option<&Path>,
    rep: Option<&Path>,
    dim: Option<&str>,
    direction: &str,
    power: u32,
    out: Option<&Path>,
) -> Result<Outcome, CliError> {
    let dir = match direction {
        "plus" => Direction::Plus,
        "minus" => Direction::Minus,
        other => return Err(CliError::Invalid(format!("direction {other:?} is not plus|minus"))),
    };
    match (rep, quiver, dim) {
        (Some(rep_path), _, None) => {
            let (mut r, qref) = parse_rep_file(rep_path)?;
            let before = r.dims().clone();
            for _ in 0..power {
                r = roots::coxeter_functor(&r, dir).map_err(invalid)?;
            }
            if let Some(out_path) = out {
                std::fs::write(out_path, serialize_rep(&r, &qref)).map_err(|e| CliError::Io {
                    path: out_path.display().to_string(),
                    message: e.to_string(),
                })?;
            }
            let text = format!(
                "dims {} -> {}{}\n",
                before,
                r.dims(),
                if r.is_zero_rep() { " (zero representation)" } else { "" }
            );
            Ok(Outcome {
                text,
                results: serde_json::json!({
                    "before": before.to_string(),
                    "after": r.dims().to_string(),
                    "zero": r.is_zero_rep(),
                }),
                pass: true,
            })
        }
        (None, Some(qpath), Some(dim_text)) => {
            let q = load_quiver(qpath)?;
            let d = parse_dim(dim_text)?;
            let signed_power = match dir {
                Direction::Plus => power as i64,
                Direction::Minus => -(power as i64),
            };
            let moved = roots::coxeter_transform(&q, &d, signed_power).map_err(invalid)?;
            let text = format!("{d} -> {moved}\n");
            Ok(Outcome {
                text,
                results: serde_json::json!({
                    "before": d.to_string(),
                    "after": moved.to_string(),
                }),
                pass: true,
            })
        }
        _ => Err(CliError::Invalid(
            "pass either --rep FILE, or --quiver FILE with --dim VECTOR".to_string(),
        )),
    }
}

fn run_flags(rep: &Path, flag_type: &str, prime: u64) -> Result<Outcome, CliError> {
    let (r, _) = parse_rep_file(rep)?;
    let steps: Vec<DimVector> = flag_type
        .split(';')
        .map(|t| parse_dim(t.trim()))
        .collect::<Result<_, _>>()?;
    let ft = FlagType(steps);
    let x = FpRep::from_rational(&r, prime).map_err(invalid)?;
    let count = param::count_stable_flags(&x, &ft).map_err(invalid)?;
    Ok(Outcome {
        text: format!("{count} stable flags\n"),
        results: serde_json::json!({ "count": count }),
        pass: true,
    })
}

fn run_moment(rep: &Path, full: bool) -> Result<Outcome, CliError> {
    let x = if full {
        parse_full_rep_file(rep)?.0
    } else {
        parse_rep_file(rep)?.0.extend_by_zero()
    };
    let psi = moment_map(&x);
    let report = lambda_membership(&x);
    let mut text = String::new();
    let mut blocks = Vec::new();
    for (i, b) in psi.blocks().iter().enumerate() {
        let _ = writeln!(text, "Psi_{i}: {}", format_matrix(b));
        blocks.push(format_matrix(b));
    }
    let _ = writeln!(
        text,
        "nilpotent={} moment_zero={} in_lambda={}",
        report.nilpotent, report.moment_zero, report.in_lambda
    );
    Ok(Outcome {
        text,
        results: serde_json::json!({
            "moment_blocks": blocks,
            "nilpotent": report.nilpotent,
            "moment_zero": report.moment_zero,
            "in_lambda": report.in_lambda,
        }),
        pass: true,
    })
}

fn describe_inputs(command: &Command) -> (String, BTreeMap<String, String>) {
    let mut inputs = BTreeMap::new();
    let name = match command {
        Command::Roots { quiver, bound } => {
            inputs.insert("quiver".into(), quiver.display().to_string());
            inputs.insert("bound".into(), bound.clone());
            "roots"
        }
        Command::Tubes { quiver } => {
            inputs.insert("quiver".into(), quiver.display().to_string());
            "tubes"
        }
        Command::Param { quiver, dim, params } => {
            inputs.insert("quiver".into(), quiver.display().to_string());
            inputs.insert("dim".into(), dim.clone());
            if let Some(p) = params {
                inputs.insert("params".into(), p.clone());
            }
            "param"
        }
        Command::Verify { quiver, degree, per_dim } => {
            inputs.insert("quiver".into(), quiver.display().to_string());
            inputs.insert("degree".into(), degree.to_string());
            inputs.insert("per_dim".into(), per_dim.to_string());
            "verify"
        }
        Command::Homext { a, b } => {
            inputs.insert("a".into(), a.display().to_string());
            inputs.insert("b".into(), b.display().to_string());
            "homext"
        }
        Command::Coxeter { quiver, rep, dim, direction, power, .. } => {
            if let Some(q) = quiver {
                inputs.insert("quiver".into(), q.display().to_string());
            }
            if let Some(r) = rep {
                inputs.insert("rep".into(), r.display().to_string());
            }
            if let Some(d) = dim {
                inputs.insert("dim".into(), d.clone());
            }
            inputs.insert("direction".into(), direction.clone());
            inputs.insert("power".into(), power.to_string());
            "coxeter"
        }
        Command::Flags { rep, flag_type, prime } => {
            inputs.insert("rep".into(), rep.display().to_string());
            inputs.insert("type".into(), flag_type.clone());
            inputs.insert("prime".into(), prime.to_string());
            "flags"
        }
        Command::Moment { rep, full } => {
            inputs.insert("rep".into(), rep.display().to_string());
            inputs.insert("full".into(), full.to_string());
            "moment"
        }
    };
    (name.to_string(), inputs)
}

fn dispatch(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Roots { quiver, bound } => run_roots(quiver, bound),
        Command::Tubes { quiver } => run_tubes(quiver),
        Command::Param { quiver, dim, params } => run_param(quiver, dim, params.as_deref()),
        Command::Verify { quiver, degree, per_dim } => run_verify(quiver, *degree, *per_dim),
        Command::Homext { a, b } => run_homext(a, b),
        Command::Coxeter { quiver, rep, dim, direction, power, out } => run_coxeter(
            quiver.as_deref(),
            rep.as_deref(),
            dim.as_deref(),
            direction,
            *power,
            out.as_deref(),
        ),
        Command::Flags { rep, flag_type, prime } => run_flags(rep, flag_type, *prime),
        Command::Moment { rep, full } => run_moment(rep, *full),
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap encodes help/version as non-error output
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (name, mut inputs) = describe_inputs(&cli.command);
    inputs.insert("seed".into(), cli.seed.to_string());
    match dispatch(&cli.command) {
        Ok(outcome) => {
            if cli.json {
                let report = JsonReport {
                    subcommand: name,
                    inputs,
                    results: outcome.results,
                    pass: outcome.pass,
                };
                println!("{}", serde_json::to_string(&report).expect("serializable report"));
            } else {
                print!("{}", outcome.text);
            }
            if outcome.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
