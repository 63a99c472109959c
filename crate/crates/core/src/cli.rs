//! Command-line interface.
//!
//! Exit codes: 0 on success, 2 when a verification fails (Jacobi
//! violation, theorem check, non-derivation, candidate excess, failed
//! replay), 1 on usage and I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::dercalc::{derivation_space, is_derivation, verify_schrodinger_derivations, LinearMap};
use crate::error::{Error, Result};
use crate::io::{algebra_to_json, load_algebra, load_map, parse_vector};
use crate::latex::derivation_matrix_latex;
use crate::liecore::{
    build_abelian, build_heisenberg, build_schrodinger, build_sl2, build_so, direct_sum,
    LieAlgebra, SchrodingerBasis,
};
use crate::locder::{
    candidate_space, certify_at, orbit, witness_search, LocDerStatus, SamplingConfig,
    DEFAULT_MAX_SAMPLES, DEFAULT_STABILIZATION_WINDOW,
};
use crate::proofreplay::replay;
use crate::scalar::Scalar;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "lieder",
    version,
    about = "Derivations and local derivations of Lie algebras, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the main output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Load algebra files without checking the Jacobi identity.
    #[arg(long, global = true)]
    skip_jacobi: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and inspect algebra files.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Derivation spaces.
    #[command(subcommand)]
    Der(DerCmd),
    /// Local derivations.
    #[command(subcommand)]
    Locder(LocderCmd),
    /// Replay of the elimination argument for s_n.
    #[command(subcommand)]
    Replay(ReplayCmd),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Schrodinger,
    Sl2,
    So,
    Heisenberg,
    Abelian,
    /// sl2 ⊕ so_n
    Sl2So,
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Write the structure constants of a standard algebra.
    Build {
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check the Jacobi identity of an algebra file.
    Check { file: PathBuf },
    /// Summarize an algebra file.
    Info { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum DerCmd {
    /// Basis of Der(L); `--format latex` prints the general derivation matrix.
    Basis { file: PathBuf },
    /// Check Der(s_n) = Inn(s_n) ⊕ named outer derivations.
    VerifyTheorem { file: PathBuf },
    /// Check whether a map is a derivation.
    CheckMap { file: PathBuf, map: PathBuf },
}

#[derive(clap::Args, Debug)]
struct Sampling {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Stop random sampling after this many samples without progress.
    #[arg(long, default_value_t = DEFAULT_STABILIZATION_WINDOW)]
    stabilize: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_SAMPLES)]
    max_samples: usize,
}

#[derive(Subcommand, Debug)]
enum LocderCmd {
    /// Compare LocDer(L) with Der(L) by sampled point constraints.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Check delta(x) ∈ Der·x at one point.
    Certify {
        file: PathBuf,
        map: PathBuf,
        /// Comma-separated coordinates, e.g. `1,0,-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Search for a point where the map is not local.
    Witness {
        file: PathBuf,
        map: PathBuf,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of pseudorandom points tried after the structured ones.
        #[arg(long, default_value_t = DEFAULT_MAX_SAMPLES)]
        budget: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ReplayCmd {
    /// Normalize a map and check every eliminated coefficient.
    Run { file: PathBuf, map: PathBuf },
}

struct Ctx<'a> {
    format: Format,
    out_path: Option<PathBuf>,
    skip_jacobi: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, text: &str) -> Result<()> {
        let text = if text.ends_with('\n') {
            text.to_string()
        } else {
            format!("{text}\n")
        };
        match &self.out_path {
            Some(p) => {
                std::fs::write(p, text)?;
                let _ = writeln!(self.err, "wrote {}", p.display());
            }
            None => self.out.write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn emit_json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        let s = serde_json::to_string_pretty(value)?;
        self.emit(&s)
    }

    fn load(&self, path: &Path) -> Result<LieAlgebra> {
        load_algebra(path, self.skip_jacobi)
    }

    fn no_latex(&self) -> Result<()> {
        if self.format == Format::Latex {
            return Err(Error::InvalidParameter(
                "--format latex is only available for `der basis`".into(),
            ));
        }
        Ok(())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        format: cli.format,
        out_path: cli.out,
        skip_jacobi: cli.skip_jacobi,
        out,
        err,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            match e {
                Error::JacobiViolation { .. } => EXIT_VERIFY,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

fn dispatch(cmd: Command, ctx: &mut Ctx) -> Result<i32> {
    match cmd {
        Command::Algebra(c) => algebra_cmd(c, ctx),
        Command::Der(c) => der_cmd(c, ctx),
        Command::Locder(c) => locder_cmd(c, ctx),
        Command::Replay(ReplayCmd::Run { file, map }) => {
            ctx.no_latex()?;
            let alg = ctx.load(&file)?;
            let m = load_map(&map)?;
            let der = derivation_space(&alg);
            let trace = replay(&alg, &der, &m)?;
            match ctx.format {
                Format::Json => ctx.emit_json(&trace)?,
                _ => ctx.emit(&trace.to_text())?,
            }
            Ok(verdict(trace.decomposition_valid))
        }
    }
}

fn build(kind: Kind, n: Option<usize>) -> Result<LieAlgebra> {
    let need =
        || n.ok_or_else(|| Error::InvalidParameter("--n is required for this algebra".into()));
    match kind {
        Kind::Sl2 => Ok(build_sl2()),
        Kind::Schrodinger => build_schrodinger(need()?),
        Kind::So => build_so(need()?),
        Kind::Heisenberg => build_heisenberg(need()?),
        Kind::Abelian => Ok(build_abelian(need()?)),
        Kind::Sl2So => Ok(direct_sum(&build_sl2(), &build_so(need()?)?)),
    }
}

fn algebra_cmd(cmd: AlgebraCmd, ctx: &mut Ctx) -> Result<i32> {
    ctx.no_latex()?;
    match cmd {
        AlgebraCmd::Build { kind, n } => {
            let alg = build(kind, n)?;
            ctx.emit(&algebra_to_json(&alg))?;
            Ok(EXIT_OK)
        }
        AlgebraCmd::Check { file } => {
            let alg = load_algebra(&file, true)?;
            let bad = alg.jacobi_check();
            let l = alg.labels();
            let triples: Vec<[&str; 3]> = bad
                .iter()
                .map(|&(i, j, k)| [l[i].as_str(), l[j].as_str(), l[k].as_str()])
                .collect();
            match ctx.format {
                Format::Json => ctx.emit_json(&json!({
                    "algebra": alg.name(),
                    "dim": alg.dim(),
                    "jacobi": bad.is_empty(),
                    "violations": triples,
                }))?,
                _ => {
                    let mut s = format!("{}: dim {}\n", alg.name(), alg.dim());
                    if bad.is_empty() {
                        s.push_str("jacobi identity: ok\n");
                    } else {
                        s.push_str(&format!(
                            "jacobi identity: FAILS on {} triple(s)\n",
                            bad.len()
                        ));
                        for t in triples.iter().take(10) {
                            s.push_str(&format!("  ({}, {}, {})\n", t[0], t[1], t[2]));
                        }
                    }
                    ctx.emit(&s)?;
                }
            }
            Ok(verdict(bad.is_empty()))
        }
        AlgebraCmd::Info { file } => {
            let alg = ctx.load(&file)?;
            let center = alg.center();
            let sn = SchrodingerBasis::detect(&alg).map(|b| b.n());
            let nonzero = alg.structure_constants().count();
            match ctx.format {
                Format::Json => ctx.emit_json(&json!({
                    "algebra": alg.name(),
                    "dim": alg.dim(),
                    "labels": alg.labels(),
                    "nonzero_brackets": nonzero,
                    "dim_center": center.dim(),
                    "schrodinger_n": sn,
                }))?,
                _ => {
                    let mut s = format!("{}: dim {}\n", alg.name(), alg.dim());
                    s.push_str(&format!("basis: {}\n", alg.labels().join(", ")));
                    s.push_str(&format!("nonzero brackets: {nonzero}\n"));
                    s.push_str(&format!("center dimension: {}\n", center.dim()));
                    if let Some(n) = sn {
                        s.push_str(&format!("recognized as the Schrödinger algebra s_{n}\n"));
                    }
                    ctx.emit(&s)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// `2*e - 1/2*h`, or `0`.
pub fn format_vector(labels: &[String], v: &[Scalar]) -> String {
    let mut s = String::new();
    for (c, l) in v.iter().zip(labels).filter(|(c, _)| !c.is_zero()) {
        let neg = c.is_negative();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if a.is_one() {
            s.push_str(l);
        } else {
            s.push_str(&format!("{a}*{l}"));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// One line per basis vector with a nonzero image.
pub fn format_map(labels: &[String], m: &LinearMap) -> String {
    let lines: Vec<String> = (0..m.dim())
        .map(|c| (c, m.image_of_basis(c)))
        .filter(|(_, img)| img.iter().any(|x| !x.is_zero()))
        .map(|(c, img)| format!("{} -> {}", labels[c], format_vector(labels, &img)))
        .collect();
    if lines.is_empty() {
        "0".to_string()
    } else {
        lines.join("; ")
    }
}

fn der_cmd(cmd: DerCmd, ctx: &mut Ctx) -> Result<i32> {
    match cmd {
        DerCmd::Basis { file } => {
            let alg = ctx.load(&file)?;
            let der = derivation_space(&alg);
            let l = alg.labels();
            match ctx.format {
                Format::Latex => ctx.emit(&derivation_matrix_latex(&alg, &der))?,
                Format::Json => {
                    let outer: Vec<_> = der
                        .outer_reps()
                        .iter()
                        .map(|r| json!({"name": r.name, "map": r.map}))
                        .collect();
                    ctx.emit_json(&json!({
                        "algebra": alg.name(),
                        "dim_der": der.dim(),
                        "dim_inn": der.inner().dim(),
                        "outer": outer,
                        "basis": der.basis_maps(),
                    }))?
                }
                Format::Text => {
                    let mut s = format!(
                        "{}: dim Der = {}, dim Inn = {}\n",
                        alg.name(),
                        der.dim(),
                        der.inner().dim()
                    );
                    for r in der.outer_reps() {
                        s.push_str(&format!("outer {}: {}\n", r.name, format_map(l, &r.map)));
                    }
                    for (i, d) in der.basis_maps().iter().enumerate() {
                        s.push_str(&format!("D{}: {}\n", i + 1, format_map(l, d)));
                    }
                    ctx.emit(&s)?;
                }
            }
            Ok(EXIT_OK)
        }
        DerCmd::VerifyTheorem { file } => {
            ctx.no_latex()?;
            let alg = ctx.load(&file)?;
            let report = verify_schrodinger_derivations(&alg)?;
            match ctx.format {
                Format::Json => ctx.emit_json(&report)?,
                _ => {
                    let s = format!(
                        "{}: dim Der = {}, dim Inn = {}, outer = {} ({})\n\
                         outer maps are derivations: {}\n\
                         outer maps are not inner: {}\n\
                         direct sum: {}\n",
                        report.algebra,
                        report.dim_der,
                        report.dim_inn,
                        report.n_outer,
                        report.outer_names.join(", "),
                        report.outer_are_derivations,
                        report.outer_outside_inner,
                        report.direct_sum
                    );
                    ctx.emit(&s)?;
                }
            }
            Ok(verdict(report.all_checks_pass()))
        }
        DerCmd::CheckMap { file, map } => {
            ctx.no_latex()?;
            let alg = ctx.load(&file)?;
            let m = load_map(&map)?;
            let v = is_derivation(&alg, &m)?;
            let l = alg.labels();
            let pairs: Vec<[&str; 2]> = v
                .violations
                .iter()
                .map(|&(i, j)| [l[i].as_str(), l[j].as_str()])
                .collect();
            match ctx.format {
                Format::Json => ctx.emit_json(&json!({
                    "algebra": alg.name(),
                    "is_derivation": v.is_pass(),
                    "violations": pairs,
                }))?,
                _ => {
                    let mut s = if v.is_pass() {
                        "map is a derivation\n".to_string()
                    } else {
                        format!(
                            "map is NOT a derivation: {} violating pair(s)\n",
                            pairs.len()
                        )
                    };
                    for p in pairs.iter().take(10) {
                        s.push_str(&format!("  ({}, {})\n", p[0], p[1]));
                    }
                    ctx.emit(&s)?;
                }
            }
            Ok(verdict(v.is_pass()))
        }
    }
}

fn locder_cmd(cmd: LocderCmd, ctx: &mut Ctx) -> Result<i32> {
    ctx.no_latex()?;
    match cmd {
        LocderCmd::Classify { file, sampling } => {
            let alg = ctx.load(&file)?;
            let der = derivation_space(&alg);
            let config = SamplingConfig {
                seed: sampling.seed,
                stabilization_window: sampling.stabilize,
                max_samples: sampling.max_samples,
            };
            let (_, report) = candidate_space(&alg, &der, config)?;
            let proven = report.status == LocDerStatus::ProvenEqual;
            match ctx.format {
                Format::Json => ctx.emit_json(&report)?,
                _ => {
                    let mut s = format!(
                        "{}: dim Der = {}, dim candidate = {} after {} samples (seed {})\n",
                        report.algebra,
                        report.dim_der,
                        report.dim_candidate,
                        report.samples_used,
                        report.seed
                    );
                    if proven {
                        s.push_str(
                            "status: proven_equal (every local derivation is a derivation)\n",
                        );
                    } else {
                        s.push_str("status: candidate_excess\n");
                        for w in &report.witnesses {
                            s.push_str(&format!(
                                "  excess map: {}\n",
                                format_map(alg.labels(), &w.map)
                            ));
                            match &w.refuting_point {
                                Some(x) => s.push_str(&format!(
                                    "    not local at {}\n",
                                    format_vector(alg.labels(), x)
                                )),
                                None => s.push_str("    no refuting point found\n"),
                            }
                        }
                    }
                    ctx.emit(&s)?;
                }
            }
            Ok(verdict(proven))
        }
        LocderCmd::Certify { file, map, point } => {
            let alg = ctx.load(&file)?;
            let m = load_map(&map)?;
            let x = parse_vector(&point)?;
            let der = derivation_space(&alg);
            let coeffs = certify_at(&alg, &der, &m, &x)?;
            let image = m.apply(&x)?;
            let l = alg.labels();
            match ctx.format {
                Format::Json => ctx.emit_json(&json!({
                    "algebra": alg.name(),
                    "point": x,
                    "image": image,
                    "local": coeffs.is_some(),
                    "orbit_dim": orbit(&alg, &der, &x)?.dim(),
                    "coefficients": coeffs,
                }))?,
                _ => {
                    let mut s = format!(
                        "x = {}\ndelta(x) = {}\n",
                        format_vector(l, &x),
                        format_vector(l, &image)
                    );
                    match &coeffs {
                        Some(c) => {
                            let d = crate::dercalc::combine(alg.dim(), c, &der.basis_maps())?;
                            s.push_str(&format!(
                                "local at x: yes, via D = {}\n",
                                format_map(l, &d)
                            ));
                        }
                        None => s.push_str("local at x: NO, delta(x) is outside Der·x\n"),
                    }
                    ctx.emit(&s)?;
                }
            }
            Ok(verdict(coeffs.is_some()))
        }
        LocderCmd::Witness {
            file,
            map,
            seed,
            budget,
        } => {
            let alg = ctx.load(&file)?;
            let m = load_map(&map)?;
            let der = derivation_space(&alg);
            let in_der = der.contains(&m)?;
            let w = witness_search(&alg, &der, &m, budget, seed)?;
            match ctx.format {
                Format::Json => ctx.emit_json(&json!({
                    "algebra": alg.name(),
                    "is_derivation": in_der,
                    "witness": w,
                }))?,
                _ => {
                    let s = match (&w, in_der) {
                        (_, true) => "map is a derivation; no witness exists\n".to_string(),
                        (Some(x), _) => format!(
                            "not a local derivation: fails at x = {}\n",
                            format_vector(alg.labels(), x)
                        ),
                        (None, _) => "no refuting point found within the budget\n".to_string(),
                    };
                    ctx.emit(&s)?;
                }
            }
            Ok(verdict(w.is_none()))
        }
    }
}
