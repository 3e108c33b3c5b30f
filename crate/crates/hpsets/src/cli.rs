//! Command line surface.
//!
//! Exit codes: 0 success, 1 domain error (validation or precondition
//! failure), 2 usage error (bad arguments, unreadable input, out of
//! range dimensions). Machine output (`--format machine`) is
//! line-oriented, deterministic, and never partial on failure: it is
//! assembled in full before anything is printed.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::complex::{OrientationOutcome, SimplicialComplex};
use crate::corpus::{build_corpus, build_input};
use crate::error::{Error, Result};
use crate::files;
use crate::flags::{enumerate_signatures, flag_basis_matrix, parse_signature_list, FlagSignature};
use crate::hodge;
use crate::search::{search, ConstraintKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "hpsets",
    about = "Harmonic p-sets on triangulated manifolds",
    version
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report f-vector, Euler characteristic, pseudomanifold checks and
    /// orientability of a complex.
    Check {
        /// Generator spec (sphere:n, torus-grid:k, klein-grid:k,
        /// rp2-min) or facet file path.
        input: String,
    },
    /// Betti numbers next to harmonic space dimensions; exits 1 on any
    /// mismatch.
    Betti {
        input: String,
        /// All dimensions.
        #[arg(long, conflicts_with = "p")]
        all: bool,
        /// One dimension.
        #[arg(short)]
        p: Option<usize>,
    },
    /// Print the harmonic basis in one dimension, or project a cochain
    /// onto its harmonic representative.
    Harmonic {
        input: String,
        #[arg(short)]
        p: usize,
        /// Cochain file to project.
        #[arg(long)]
        project: Option<PathBuf>,
    },
    /// Check closedness and both dual closedness formulations of a
    /// cochain.
    DualCheck {
        input: String,
        #[arg(short)]
        p: usize,
        /// Cochain file.
        pset: PathBuf,
    },
    /// Emit the facet file of the barycentric subdivision.
    Subdivide { input: String },
    /// Emit the matrix of basic flag p-sets.
    Flags {
        input: String,
        #[arg(short)]
        p: usize,
        /// Signature list like "(1),(0,1),(1,2)"; all signatures up to
        /// --max-len when omitted.
        #[arg(long)]
        signatures: Option<String>,
        /// Maximum signature length for enumeration.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Solve for coefficient vectors whose flag p-set combination is
    /// harmonic on every corpus member.
    Search {
        /// Corpus member specs.
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(short)]
        p: usize,
        /// Signature list like "(2),(0,2),(1,2)".
        #[arg(long)]
        signatures: String,
        /// Use orientation-signed basic p-sets (top degree only).
        #[arg(long)]
        signed: bool,
        /// Also require invariance under one barycentric subdivision.
        #[arg(long)]
        subinv: bool,
    },
}

/// Exit status plus the full report text.
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::UnknownGenerator(_)
            | Error::FileUnreadable { .. }
            | Error::DimensionOutOfRange { .. }
            | Error::MalformedSignature(_)
            | Error::InvalidRange(_)
            | Error::EmptyCorpus
    )
}

fn result_of(out: Result<String>) -> CommandResult {
    match out {
        Ok(stdout) => CommandResult {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => CommandResult {
            exit_code: if usage_error(&e) { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn run(cli: Cli) -> CommandResult {
    let format = cli.format;
    match cli.command {
        Command::Check { input } => result_of(cmd_check(&input, format)),
        Command::Betti { input, all, p } => result_of(cmd_betti(&input, all, p, format)),
        Command::Harmonic { input, p, project } => {
            result_of(cmd_harmonic(&input, p, project.as_deref(), format))
        }
        Command::DualCheck { input, p, pset } => {
            result_of(cmd_dual_check(&input, p, &pset, format))
        }
        Command::Subdivide { input } => result_of(cmd_subdivide(&input)),
        Command::Flags {
            input,
            p,
            signatures,
            max_len,
        } => result_of(cmd_flags(&input, p, signatures.as_deref(), max_len, format)),
        Command::Search {
            inputs,
            p,
            signatures,
            signed,
            subinv,
        } => result_of(cmd_search(&inputs, p, &signatures, signed, subinv, format)),
    }
}

fn check_dim(p: usize, complex: &SimplicialComplex) -> Result<()> {
    if p > complex.dim() {
        return Err(Error::DimensionOutOfRange {
            p,
            lo: 0,
            hi: complex.dim(),
        });
    }
    Ok(())
}

fn cmd_check(input: &str, format: Format) -> Result<String> {
    let (name, k) = build_input(input)?;
    let f = k.f_vector();
    let report = k.validate_manifold();
    let orientable = if report.is_closed_pseudomanifold() {
        matches!(k.orient()?, OrientationOutcome::Orientable(_))
    } else {
        false
    };
    let mut out = String::new();
    match format {
        Format::Machine => {
            writeln!(
                out,
                "complex name={} n={} f={} chi={}",
                name,
                k.dim(),
                f,
                k.euler_characteristic()
            )
            .unwrap();
            writeln!(
                out,
                "manifold pure={} ridge={} connected={} pseudomanifold={}",
                report.pure,
                report.ridge_ok,
                report.connected,
                report.is_closed_pseudomanifold()
            )
            .unwrap();
            writeln!(out, "orientation orientable={orientable}").unwrap();
        }
        Format::Human => {
            writeln!(out, "{name}: dimension {}", k.dim()).unwrap();
            writeln!(out, "  f-vector {f}, Euler characteristic {}", k.euler_characteristic())
                .unwrap();
            writeln!(
                out,
                "  pure: {}, ridge condition: {}, connected: {}",
                yes_no(report.pure),
                yes_no(report.ridge_ok),
                yes_no(report.connected)
            )
            .unwrap();
            writeln!(
                out,
                "  closed connected pseudomanifold: {}",
                yes_no(report.is_closed_pseudomanifold())
            )
            .unwrap();
            writeln!(out, "  orientable: {}", yes_no(orientable)).unwrap();
        }
    }
    Ok(out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_betti(input: &str, all: bool, p: Option<usize>, format: Format) -> Result<String> {
    let (name, k) = build_input(input)?;
    let dims: Vec<usize> = match (all, p) {
        (true, _) => (0..=k.dim()).collect(),
        (false, Some(p)) => {
            check_dim(p, &k)?;
            vec![p]
        }
        (false, None) => (0..=k.dim()).collect(),
    };
    let mut out = String::new();
    let mut mismatch = false;
    let mut lines = Vec::new();
    for p in dims {
        let b = hodge::betti(&k, p)?;
        let kernel = hodge::harmonic_basis(&k, p)?.basis.len();
        if b != kernel {
            mismatch = true;
        }
        lines.push((p, b, kernel));
    }
    match format {
        Format::Machine => {
            for (p, b, kernel) in &lines {
                writeln!(
                    out,
                    "betti p={p} b={b} harmonic={kernel} match={}",
                    b == kernel
                )
                .unwrap();
            }
        }
        Format::Human => {
            writeln!(out, "{name}: Betti numbers and harmonic space dimensions").unwrap();
            for (p, b, kernel) in &lines {
                writeln!(
                    out,
                    "  p={p}: b_p={b} dim ker laplacian={kernel}{}",
                    if b == kernel { "" } else { "  MISMATCH" }
                )
                .unwrap();
            }
        }
    }
    if mismatch {
        // a mismatch falsifies the uniqueness theorem, i.e. a bug
        return Err(Error::ValidationFailed {
            name,
            reason: "harmonic dimension differs from Betti number".to_string(),
        });
    }
    Ok(out)
}

fn cmd_harmonic(
    input: &str,
    p: usize,
    project: Option<&std::path::Path>,
    format: Format,
) -> Result<String> {
    let (name, k) = build_input(input)?;
    check_dim(p, &k)?;
    let mut out = String::new();
    match project {
        None => {
            let basis = hodge::harmonic_basis(&k, p)?;
            match format {
                Format::Machine => {
                    writeln!(out, "harmonic-basis p={p} dim={}", basis.basis.len()).unwrap();
                    for eta in &basis.basis {
                        out.push_str(&files::format_cochain(&k, eta));
                    }
                }
                Format::Human => {
                    writeln!(
                        out,
                        "{name}: harmonic basis in dimension {p} has {} member(s)",
                        basis.basis.len()
                    )
                    .unwrap();
                    for (i, eta) in basis.basis.iter().enumerate() {
                        writeln!(out, "  basis member {i}:").unwrap();
                        for line in files::format_cochain(&k, eta).lines().skip(1) {
                            writeln!(out, "    {line}").unwrap();
                        }
                    }
                }
            }
        }
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                // a missing cochain file is a domain error for this command
                Error::MalformedCochainFile {
                    line: 0,
                    msg: format!("cannot read `{}`: {e}", path.display()),
                }
            })?;
            let eta = files::parse_cochain(&text, &k)?;
            if eta.dim() != p {
                return Err(Error::DimensionMismatch {
                    expected: p,
                    got: eta.dim(),
                });
            }
            let projected = hodge::harmonic_projection(&k, &eta)?;
            match format {
                Format::Machine => {
                    out.push_str(&files::format_cochain(&k, &projected));
                }
                Format::Human => {
                    writeln!(out, "{name}: harmonic projection in dimension {p}:").unwrap();
                    for line in files::format_cochain(&k, &projected).lines().skip(1) {
                        writeln!(out, "  {line}").unwrap();
                    }
                }
            }
        }
    }
    Ok(out)
}

fn cmd_dual_check(
    input: &str,
    p: usize,
    pset: &std::path::Path,
    format: Format,
) -> Result<String> {
    let (name, k) = build_input(input)?;
    check_dim(p, &k)?;
    let text = std::fs::read_to_string(pset).map_err(|e| Error::MalformedCochainFile {
        line: 0,
        msg: format!("cannot read `{}`: {e}", pset.display()),
    })?;
    let eta = files::parse_cochain(&text, &k)?;
    if eta.dim() != p {
        return Err(Error::DimensionMismatch {
            expected: p,
            got: eta.dim(),
        });
    }

    let closed = hodge::is_closed(&k, &eta)?;
    let transpose = crate::dual::dual_closed_via_transpose(&k, &eta)?;
    // the explicit path needs an orientation; degrade gracefully
    let explicit = match k.orient()? {
        OrientationOutcome::Orientable(o) => {
            let dual = crate::dual::dual_complex(&k, &o)?;
            Some(dual.is_dual_closed(&eta)?)
        }
        OrientationOutcome::NonOrientable { .. } => None,
    };

    let mut out = String::new();
    match format {
        Format::Machine => {
            let explicit_text = match explicit {
                Some(b) => b.to_string(),
                None => "not-orientable".to_string(),
            };
            let agree_text = match explicit {
                Some(b) => (b == transpose).to_string(),
                None => "not-applicable".to_string(),
            };
            writeln!(
                out,
                "dual-check p={p} closed={closed} dual_transpose={transpose} dual_explicit={explicit_text} agree={agree_text}"
            )
            .unwrap();
        }
        Format::Human => {
            writeln!(out, "{name}: dual closedness of the given {p}-set").unwrap();
            writeln!(out, "  closed: {}", yes_no(closed)).unwrap();
            writeln!(out, "  dual closed (transpose condition): {}", yes_no(transpose)).unwrap();
            match explicit {
                Some(b) => {
                    writeln!(out, "  dual closed (explicit dual complex): {}", yes_no(b))
                        .unwrap();
                    writeln!(out, "  both formulations agree: {}", yes_no(b == transpose))
                        .unwrap();
                }
                None => {
                    writeln!(
                        out,
                        "  dual closed (explicit dual complex): unavailable, not orientable"
                    )
                    .unwrap();
                }
            }
        }
    }
    Ok(out)
}

fn cmd_subdivide(input: &str) -> Result<String> {
    let (name, k) = build_input(input)?;
    let (sd, map) = crate::subdivision::barycentric_subdivision(&k);
    // carry the orientation through the emitted vertex order when the
    // input is orientable
    let orientation = match k.orient() {
        Ok(OrientationOutcome::Orientable(o)) => {
            Some(crate::subdivision::transport_orientation(&k, &o, &sd, &map))
        }
        _ => None,
    };
    let mut out = String::new();
    writeln!(out, "# barycentric subdivision of {name}").unwrap();
    writeln!(out, "# f-vector {}", sd.f_vector()).unwrap();
    out.push_str(&files::format_facets(&sd, orientation.as_ref()));
    Ok(out)
}

fn cmd_flags(
    input: &str,
    p: usize,
    signatures: Option<&str>,
    max_len: Option<usize>,
    format: Format,
) -> Result<String> {
    let (name, k) = build_input(input)?;
    check_dim(p, &k)?;
    let sigs: Vec<FlagSignature> = match signatures {
        Some(text) => parse_signature_list(text)?,
        None => enumerate_signatures(k.dim(), p, max_len.unwrap_or(k.dim() + 1))?,
    };
    let m = flag_basis_matrix(&k, p, &sigs)?;
    let sig_names: Vec<String> = sigs.iter().map(ToString::to_string).collect();
    let mut out = String::new();
    match format {
        Format::Machine => {
            writeln!(out, "flags p={p} signatures={}", sig_names.join(",")).unwrap();
            for (cell, row) in m.cells.iter().zip(&m.counts) {
                let counts: Vec<String> = row.iter().map(u64::to_string).collect();
                writeln!(out, "row {cell} {}", counts.join(" ")).unwrap();
            }
        }
        Format::Human => {
            writeln!(
                out,
                "{name}: flag counts at each {p}-cell for signatures {}",
                sig_names.join(" ")
            )
            .unwrap();
            for (cell, row) in m.cells.iter().zip(&m.counts) {
                let counts: Vec<String> = row.iter().map(u64::to_string).collect();
                writeln!(out, "  [{cell}] {}", counts.join(" ")).unwrap();
            }
        }
    }
    Ok(out)
}

/// Machine-format search report, shared with the C API.
pub fn search_machine_report(
    outcome: &crate::search::SearchOutcome,
    p: usize,
    signed: bool,
    subinv: bool,
) -> String {
    let sig_names: Vec<String> = outcome
        .solution
        .signatures
        .iter()
        .map(ToString::to_string)
        .collect();
    let mut out = String::new();
    writeln!(
        out,
        "search p={p} signed={signed} subinv={subinv} signatures={} corpus={}",
        sig_names.join(","),
        outcome.solution.members.join(",")
    )
    .unwrap();
    writeln!(
        out,
        "system rows={} cols={}",
        outcome.system.matrix.rows(),
        outcome.system.matrix.cols()
    )
    .unwrap();
    writeln!(out, "solution dim={}", outcome.solution.dim()).unwrap();
    for (i, a) in outcome.solution.basis.iter().enumerate() {
        let coeffs: Vec<String> = sig_names
            .iter()
            .zip(a)
            .map(|(s, v)| format!("{s}={v}"))
            .collect();
        writeln!(out, "candidate index={i} {}", coeffs.join(" ")).unwrap();
    }
    for (i, member_reports) in outcome.reports.iter().enumerate() {
        for r in member_reports {
            writeln!(
                out,
                "invariance candidate={i} member={} closed={} sd_closed={} invariant={}",
                r.member, r.base_closed, r.subdivided_closed, r.class_invariant
            )
            .unwrap();
            for row in &r.rows {
                writeln!(
                    out,
                    "pairing candidate={i} member={} cycle={} base={} subdivided={} difference={}",
                    r.member, row.cycle, row.on_base, row.on_subdivision, row.difference
                )
                .unwrap();
            }
        }
    }
    out
}

fn cmd_search(
    inputs: &[String],
    p: usize,
    signatures: &str,
    signed: bool,
    subinv: bool,
    format: Format,
) -> Result<String> {
    let sigs = parse_signature_list(signatures)?;
    let corpus = build_corpus(inputs)?;
    let outcome = search(&corpus, p, &sigs, signed, subinv)?;
    let sig_names: Vec<String> = sigs.iter().map(ToString::to_string).collect();

    let mut out = String::new();
    match format {
        Format::Machine => {
            out.push_str(&search_machine_report(&outcome, p, signed, subinv));
        }
        Format::Human => {
            writeln!(
                out,
                "search in dimension {p} ({}signed{}) over {}",
                if signed { "" } else { "un" },
                if subinv {
                    ", requiring subdivision invariance"
                } else {
                    ""
                },
                outcome.solution.members.join(", ")
            )
            .unwrap();
            writeln!(out, "signatures: {}", sig_names.join(" ")).unwrap();
            writeln!(
                out,
                "constraint system: {} rows, {} columns",
                outcome.system.matrix.rows(),
                outcome.system.matrix.cols()
            )
            .unwrap();
            let zero_rows = (0..outcome.system.matrix.rows())
                .filter(|&r| {
                    outcome
                        .system
                        .matrix
                        .row(r)
                        .iter()
                        .all(num_traits::Zero::is_zero)
                })
                .count();
            writeln!(out, "  ({zero_rows} zero rows retained for provenance)").unwrap();
            let kinds: Vec<ConstraintKind> = [
                ConstraintKind::Closedness,
                ConstraintKind::DualClosedness,
                ConstraintKind::SubdivisionInvariance,
            ]
            .into_iter()
            .filter(|k| outcome.system.provenance.iter().any(|r| r.kind == *k))
            .collect();
            for kind in kinds {
                let count = outcome
                    .system
                    .provenance
                    .iter()
                    .filter(|r| r.kind == kind)
                    .count();
                writeln!(out, "  {count} {kind} rows").unwrap();
            }
            writeln!(out, "solution space dimension: {}", outcome.solution.dim()).unwrap();
            for (i, a) in outcome.solution.basis.iter().enumerate() {
                let coeffs: Vec<String> = sig_names
                    .iter()
                    .zip(a)
                    .map(|(s, v)| format!("{s} -> {v}"))
                    .collect();
                writeln!(out, "  candidate {i}: {}", coeffs.join(", ")).unwrap();
            }
            for (i, member_reports) in outcome.reports.iter().enumerate() {
                for r in member_reports {
                    writeln!(
                        out,
                        "  candidate {i} on {}: closed {} / {}, class invariant: {}",
                        r.member,
                        yes_no(r.base_closed),
                        yes_no(r.subdivided_closed),
                        yes_no(r.class_invariant)
                    )
                    .unwrap();
                    for row in &r.rows {
                        writeln!(
                            out,
                            "    cycle {}: pairing {} on the base, {} subdivided, difference {}",
                            row.cycle, row.on_base, row.on_subdivision, row.difference
                        )
                        .unwrap();
                    }
                }
            }
        }
    }
    Ok(out)
}
