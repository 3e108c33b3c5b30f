//! The search harness: find coefficient vectors making a linear
//! combination of basic flag p-sets harmonic on every corpus member,
//! and test whether the class of a candidate survives barycentric
//! subdivision.
//!
//! Harmonicity of the combination is a homogeneous linear system in the
//! coefficients; its exact nullspace is the solution space. Class
//! comparison across one subdivision step is again linear in the
//! coefficients, so requiring it intersects the solution space with
//! further hyperplanes.

use num_traits::Zero;

use crate::cochain::{pairing, Chain, Cochain};
use crate::complex::{Orientation, SimplicialComplex};
use crate::corpus::{Corpus, CorpusMember};
use crate::error::{Error, Result};
use crate::flags::{flag_pset, oriented_flag_pset, FlagSignature};
use crate::hodge::{homology_basis, is_closed};
use crate::matrix::{RatMat, RowSpace};
use crate::rational::Rational;
use crate::subdivision::{barycentric_subdivision, transport_orientation, SubdivisionMap};

/// Which harmonicity condition a constraint row encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    Closedness,
    DualClosedness,
    SubdivisionInvariance,
}

impl std::fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ConstraintKind::Closedness => "closedness",
            ConstraintKind::DualClosedness => "dual-closedness",
            ConstraintKind::SubdivisionInvariance => "subdivision-invariance",
        };
        f.write_str(s)
    }
}

/// Where a constraint row came from. Zero rows are kept so the full
/// provenance is auditable.
#[derive(Debug, Clone)]
pub struct ConstraintRow {
    pub member: String,
    pub kind: ConstraintKind,
    /// Cell the condition is attached to, when it is a cell condition.
    pub cell: Option<String>,
    /// Cycle index, for subdivision-invariance rows.
    pub cycle: Option<usize>,
}

/// The stacked homogeneous system: one column per signature, one row
/// per condition over all corpus members.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pub p: usize,
    pub signed: bool,
    pub signatures: Vec<FlagSignature>,
    pub matrix: RatMat,
    pub provenance: Vec<ConstraintRow>,
    pub members: Vec<String>,
}

/// Exact nullspace of a constraint system, echelon normalized.
#[derive(Debug, Clone)]
pub struct CoefficientSolution {
    pub signatures: Vec<FlagSignature>,
    pub members: Vec<String>,
    pub basis: Vec<Vec<Rational>>,
}

impl CoefficientSolution {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// One pairing comparison between a candidate on the base complex and
/// on its subdivision.
#[derive(Debug, Clone)]
pub struct InvarianceRow {
    pub cycle: usize,
    pub on_base: Rational,
    pub on_subdivision: Rational,
    /// on_subdivision - on_base
    pub difference: Rational,
}

/// Class comparison of one candidate on one member across one
/// barycentric subdivision step.
#[derive(Debug, Clone)]
pub struct InvarianceReport {
    pub member: String,
    pub base_closed: bool,
    pub subdivided_closed: bool,
    pub rows: Vec<InvarianceRow>,
    /// Both candidates closed and every difference exactly zero.
    pub class_invariant: bool,
}

/// Search result: the solution basis plus, per basis vector and member,
/// the subdivision invariance report.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub system: ConstraintSystem,
    pub solution: CoefficientSolution,
    /// `reports[candidate][member]`
    pub reports: Vec<Vec<InvarianceReport>>,
}

/// The basic (optionally orientation-signed) p-set of one signature.
fn basic_pset(
    complex: &SimplicialComplex,
    orientation: Option<&Orientation>,
    p: usize,
    signature: &FlagSignature,
    signed: bool,
) -> Result<Cochain> {
    if signed {
        let o = orientation.ok_or(Error::NotOrientable)?;
        if p != complex.dim() {
            return Err(Error::DimensionMismatch {
                expected: complex.dim(),
                got: p,
            });
        }
        oriented_flag_pset(complex, o, signature)
    } else {
        flag_pset(complex, p, signature)
    }
}

/// The candidate p-set of a coefficient vector: the linear combination
/// of the basic p-sets.
pub fn evaluate_candidate(
    complex: &SimplicialComplex,
    orientation: Option<&Orientation>,
    coefficients: &[Rational],
    signatures: &[FlagSignature],
    p: usize,
    signed: bool,
) -> Result<Cochain> {
    if coefficients.len() != signatures.len() {
        return Err(Error::LengthMismatch {
            expected: signatures.len(),
            got: coefficients.len(),
        });
    }
    let mut acc = Cochain::zero(complex, p);
    for (a, sig) in coefficients.iter().zip(signatures) {
        let eta = basic_pset(complex, orientation, p, sig, signed)?;
        if !a.is_zero() {
            acc = acc.add(&eta.scaled(a));
        }
    }
    Ok(acc)
}

fn check_member_preconditions(
    member: &CorpusMember,
    p: usize,
    signed: bool,
) -> Result<()> {
    if member.complex.dim() < p {
        return Err(Error::DimensionMismatch {
            expected: p,
            got: member.complex.dim(),
        });
    }
    if signed {
        if member.orientation.is_none() {
            return Err(Error::SignedRequiresOrientation {
                member: member.name.clone(),
            });
        }
        if member.complex.dim() != p {
            return Err(Error::DimensionMismatch {
                expected: member.complex.dim(),
                got: p,
            });
        }
    }
    Ok(())
}

/// Stacks, for every member, the closedness rows (coboundary applied to
/// each basic p-set) and the dual closedness rows (transpose condition
/// applied to each basic p-set). Zero rows are retained with their
/// provenance.
pub fn harmonic_constraint_system(
    corpus: &Corpus,
    p: usize,
    signatures: &[FlagSignature],
    signed: bool,
) -> Result<ConstraintSystem> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut provenance = Vec::new();

    for member in corpus.members() {
        check_member_preconditions(member, p, signed)?;
        let k = &member.complex;
        let n = k.dim();

        // basic p-sets, one per signature
        let mut columns = Vec::with_capacity(signatures.len());
        for sig in signatures {
            columns.push(basic_pset(k, member.orientation.as_ref(), p, sig, signed)?);
        }

        // closedness: one row per (p+1)-cell
        if p < n {
            let d = crate::hodge::coboundary(k, p)?;
            let images: Vec<Vec<Rational>> =
                columns.iter().map(|c| d.apply(c.values())).collect();
            for cell_idx in 0..k.cell_count(p + 1) {
                rows.push(images.iter().map(|im| im[cell_idx].clone()).collect());
                provenance.push(ConstraintRow {
                    member: member.name.clone(),
                    kind: ConstraintKind::Closedness,
                    cell: Some(k.cell(p + 1, cell_idx).to_string()),
                    cycle: None,
                });
            }
        }

        // dual closedness: one row per (p-1)-cell
        if p >= 1 {
            let boundary = k.boundary_matrix(p)?;
            let images: Vec<Vec<Rational>> = columns
                .iter()
                .map(|c| boundary.apply(c.values()))
                .collect();
            for cell_idx in 0..k.cell_count(p - 1) {
                rows.push(images.iter().map(|im| im[cell_idx].clone()).collect());
                provenance.push(ConstraintRow {
                    member: member.name.clone(),
                    kind: ConstraintKind::DualClosedness,
                    cell: Some(k.cell(p - 1, cell_idx).to_string()),
                    cycle: None,
                });
            }
        }
    }

    let matrix = if rows.is_empty() {
        RatMat::zeros(0, signatures.len())
    } else {
        RatMat::from_rows(rows)
    };
    Ok(ConstraintSystem {
        p,
        signed,
        signatures: signatures.to_vec(),
        matrix,
        provenance,
        members: corpus.members().iter().map(|m| m.name.clone()).collect(),
    })
}

/// Exact nullspace of the stacked system, echelon normalized.
pub fn solve_coefficients(system: &ConstraintSystem) -> CoefficientSolution {
    CoefficientSolution {
        signatures: system.signatures.clone(),
        members: system.members.clone(),
        basis: system.matrix.nullspace(),
    }
}

/// Everything needed to compare a member against its subdivision: the
/// subdivision itself, the chain map, the transported orientation, and
/// the homology cycles with their images.
pub struct SubdivisionContext {
    pub subdivided: SimplicialComplex,
    pub map: SubdivisionMap,
    /// Orientation of the subdivision transported along the chain map,
    /// so signed candidates compare classes under the canonical
    /// identification.
    pub orientation: Option<Orientation>,
    pub cycles: Vec<Chain>,
    pub pushed: Vec<Chain>,
}

impl SubdivisionContext {
    pub fn new(member: &CorpusMember, p: usize) -> Result<SubdivisionContext> {
        let k = &member.complex;
        let (subdivided, map) = barycentric_subdivision(k);
        let orientation = member
            .orientation
            .as_ref()
            .map(|o| transport_orientation(k, o, &subdivided, &map));
        let cycles = homology_basis(k, p)?;
        let pushed = cycles
            .iter()
            .map(|z| map.push_cycle(z))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubdivisionContext {
            subdivided,
            map,
            orientation,
            cycles,
            pushed,
        })
    }
}

fn invariance_report_in(
    member: &CorpusMember,
    ctx: &SubdivisionContext,
    coefficients: &[Rational],
    signatures: &[FlagSignature],
    p: usize,
    signed: bool,
) -> Result<InvarianceReport> {
    let k = &member.complex;
    let base = evaluate_candidate(
        k,
        member.orientation.as_ref(),
        coefficients,
        signatures,
        p,
        signed,
    )?;
    let subdivided = evaluate_candidate(
        &ctx.subdivided,
        ctx.orientation.as_ref(),
        coefficients,
        signatures,
        p,
        signed,
    )?;
    let base_closed = is_closed(k, &base)?;
    let subdivided_closed = is_closed(&ctx.subdivided, &subdivided)?;

    let mut rows = Vec::with_capacity(ctx.cycles.len());
    let mut all_zero = true;
    for (i, (z, pushed)) in ctx.cycles.iter().zip(&ctx.pushed).enumerate() {
        let on_base = pairing(&base, z)?;
        let on_subdivision = pairing(&subdivided, pushed)?;
        let difference = &on_subdivision - &on_base;
        if !difference.is_zero() {
            all_zero = false;
        }
        rows.push(InvarianceRow {
            cycle: i,
            on_base,
            on_subdivision,
            difference,
        });
    }
    Ok(InvarianceReport {
        member: member.name.clone(),
        base_closed,
        subdivided_closed,
        rows,
        class_invariant: base_closed && subdivided_closed && all_zero,
    })
}

/// Compares the candidate's cohomology class on a member against its
/// class on the barycentric subdivision, by pairing with a homology
/// basis transported along the chain map. A failed closedness check is
/// reported, not raised.
pub fn check_subdivision_invariance(
    member: &CorpusMember,
    coefficients: &[Rational],
    signatures: &[FlagSignature],
    p: usize,
    signed: bool,
) -> Result<InvarianceReport> {
    check_member_preconditions(member, p, signed)?;
    let ctx = SubdivisionContext::new(member, p)?;
    invariance_report_in(member, &ctx, coefficients, signatures, p, signed)
}

/// Runs the full program over the corpus: assemble the harmonicity
/// system, optionally intersect with the subdivision-invariance
/// conditions, solve exactly, and report the invariance behaviour of
/// every basis candidate on every member.
pub fn search(
    corpus: &Corpus,
    p: usize,
    signatures: &[FlagSignature],
    signed: bool,
    require_subdivision_invariance: bool,
) -> Result<SearchOutcome> {
    let mut system = harmonic_constraint_system(corpus, p, signatures, signed)?;

    let mut contexts = Vec::with_capacity(corpus.len());
    for member in corpus.members() {
        contexts.push(SubdivisionContext::new(member, p)?);
    }

    if require_subdivision_invariance {
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (member, ctx) in corpus.members().iter().zip(&contexts) {
            // per signature, the pairing difference of the basic p-sets
            let mut base_psets = Vec::with_capacity(signatures.len());
            let mut sub_psets = Vec::with_capacity(signatures.len());
            for sig in signatures {
                base_psets.push(basic_pset(
                    &member.complex,
                    member.orientation.as_ref(),
                    p,
                    sig,
                    signed,
                )?);
                sub_psets.push(basic_pset(
                    &ctx.subdivided,
                    ctx.orientation.as_ref(),
                    p,
                    sig,
                    signed,
                )?);
            }
            for (ci, (z, pushed)) in ctx.cycles.iter().zip(&ctx.pushed).enumerate() {
                let mut row = Vec::with_capacity(signatures.len());
                for (eta, eta_sub) in base_psets.iter().zip(&sub_psets) {
                    row.push(&pairing(eta_sub, pushed)? - &pairing(eta, z)?);
                }
                rows.push(row);
                system.provenance.push(ConstraintRow {
                    member: member.name.clone(),
                    kind: ConstraintKind::SubdivisionInvariance,
                    cell: None,
                    cycle: Some(ci),
                });
            }
        }
        if !rows.is_empty() {
            system.matrix = system.matrix.vstack(&RatMat::from_rows(rows));
        }
    }

    let solution = solve_coefficients(&system);

    let mut reports = Vec::with_capacity(solution.basis.len());
    for candidate in &solution.basis {
        let mut member_reports = Vec::with_capacity(corpus.len());
        for (member, ctx) in corpus.members().iter().zip(&contexts) {
            member_reports.push(invariance_report_in(
                member, ctx, candidate, signatures, p, signed,
            )?);
        }
        reports.push(member_reports);
    }

    Ok(SearchOutcome {
        system,
        solution,
        reports,
    })
}

/// True when `vector` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rational>], vector: &[Rational]) -> bool {
    let mut span = RowSpace::new();
    for b in basis {
        span.insert(b.clone());
    }
    span.contains(vector)
}
