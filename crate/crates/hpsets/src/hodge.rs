//! Harmonicity as exact linear algebra: coboundaries, the
//! combinatorial Laplacian, harmonic bases, harmonic projection, Betti
//! numbers and homology bases.
//!
//! A p-set is closed when the coboundary annihilates it, harmonic when
//! additionally the transpose condition (dual closedness) holds; the
//! harmonic p-sets form the kernel of the Laplacian, and each rational
//! cohomology class contains exactly one of them. Everything here is
//! computed over exact rationals; no operation rounds.

use num_traits::Zero;

use crate::cochain::{Chain, Cochain};
use crate::complex::SimplicialComplex;
use crate::dual::dual_closed_via_transpose;
use crate::error::{Error, Result};
use crate::matrix::{IncidenceMatrix, LinearSolver, RatMat, RowSpace};
use crate::rational::Rational;

/// Basis of the harmonic p-sets, in reduced echelon form over the cell
/// order. Its size is the p-th Betti number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicBasis {
    pub dim: usize,
    pub basis: Vec<Cochain>,
}

/// Coboundary operator from p-sets to (p+1)-sets: the transpose of the
/// boundary operator, shape f_{p+1} x f_p.
pub fn coboundary(complex: &SimplicialComplex, p: usize) -> Result<IncidenceMatrix> {
    if p >= complex.dim() {
        return Err(Error::DimensionOutOfRange {
            p,
            lo: 0,
            hi: complex.dim().saturating_sub(1),
        });
    }
    Ok(complex.boundary_matrix(p + 1)?.transpose())
}

/// A p-set is closed when it sums to zero over the boundary of every
/// (p+1)-cell. In top degree there is nothing to check.
pub fn is_closed(complex: &SimplicialComplex, cochain: &Cochain) -> Result<bool> {
    let p = cochain.dim();
    cochain.check_on(complex, p)?;
    if p >= complex.dim() {
        return Ok(true);
    }
    let d = coboundary(complex, p)?;
    Ok(d.apply(cochain.values()).iter().all(Zero::is_zero))
}

/// Harmonic: closed and dual closed. Both are linear conditions that
/// depend only on the combinatorial structure.
pub fn is_harmonic(complex: &SimplicialComplex, cochain: &Cochain) -> Result<bool> {
    Ok(is_closed(complex, cochain)? && dual_closed_via_transpose(complex, cochain)?)
}

/// Combinatorial Laplacian on p-sets with unit weights; symmetric and
/// positive semidefinite, kernel the harmonic space. Missing terms at
/// the ends of the complex are zero.
pub fn laplacian(complex: &SimplicialComplex, p: usize) -> Result<RatMat> {
    let n = complex.dim();
    if p > n {
        return Err(Error::DimensionOutOfRange { p, lo: 0, hi: n });
    }
    let size = complex.cell_count(p);
    let mut acc = vec![vec![0i64; size]; size];
    if p < n {
        let d = coboundary(complex, p)?;
        let up = d.transpose().mul_dense(&d);
        for (r, row) in up.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                acc[r][c] += v;
            }
        }
    }
    if p > 0 {
        let d_below = coboundary(complex, p - 1)?;
        let down = d_below.mul_dense(&d_below.transpose());
        for (r, row) in down.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                acc[r][c] += v;
            }
        }
    }
    Ok(RatMat::from_dense_int(&acc))
}

/// Exact nullspace basis of the Laplacian, echelon normalized. Every
/// member is harmonic and the count equals the Betti number.
pub fn harmonic_basis(complex: &SimplicialComplex, p: usize) -> Result<HarmonicBasis> {
    let lap = laplacian(complex, p)?;
    let basis = lap
        .nullspace()
        .into_iter()
        .map(|v| Cochain::new(p, v))
        .collect();
    Ok(HarmonicBasis { dim: p, basis })
}

/// Betti number by rank-nullity over the rationals: the p-th cell count
/// minus the ranks of the boundary operators on either side.
pub fn betti(complex: &SimplicialComplex, p: usize) -> Result<usize> {
    let n = complex.dim();
    if p > n {
        return Err(Error::DimensionOutOfRange { p, lo: 0, hi: n });
    }
    let rank_down = if p >= 1 {
        complex.boundary_matrix(p)?.to_rat_mat().rank()
    } else {
        0
    };
    let rank_up = if p < n {
        complex.boundary_matrix(p + 1)?.to_rat_mat().rank()
    } else {
        0
    };
    Ok(complex.cell_count(p) - rank_down - rank_up)
}

/// Orthogonal projection onto the harmonic space for a fixed (complex,
/// dimension), reusing one elimination across many projections.
///
/// The harmonic representative of a closed p-set differs from it by a
/// coboundary found from the consistent normal equations; it pairs
/// equally with every cycle.
pub struct HarmonicProjector {
    p: usize,
    below: Option<(IncidenceMatrix, LinearSolver)>,
}

impl HarmonicProjector {
    pub fn new(complex: &SimplicialComplex, p: usize) -> Result<HarmonicProjector> {
        let n = complex.dim();
        if p > n {
            return Err(Error::DimensionOutOfRange { p, lo: 0, hi: n });
        }
        let below = if p >= 1 {
            let d = coboundary(complex, p - 1)?;
            let normal = d.transpose().mul_dense(&d);
            let solver = LinearSolver::new(&RatMat::from_dense_int(&normal));
            Some((d, solver))
        } else {
            None
        };
        Ok(HarmonicProjector { p, below })
    }

    /// Projects a closed p-set onto its harmonic representative.
    pub fn project(&self, complex: &SimplicialComplex, eta: &Cochain) -> Result<Cochain> {
        eta.check_on(complex, self.p)?;
        if !is_closed(complex, eta)? {
            return Err(Error::NotClosed);
        }
        let Some((d, solver)) = &self.below else {
            // degree zero: closed means locally constant, already harmonic
            return Ok(eta.clone());
        };
        let rhs = d.apply_transpose(eta.values());
        let beta = solver
            .solve(&rhs)
            .expect("normal equations are always consistent");
        let correction = Cochain::new(self.p, d.apply(&beta));
        Ok(eta.sub(&correction))
    }
}

/// One-shot harmonic projection; see [`HarmonicProjector`] for the
/// reusable form.
pub fn harmonic_projection(complex: &SimplicialComplex, eta: &Cochain) -> Result<Cochain> {
    HarmonicProjector::new(complex, eta.dim())?.project(complex, eta)
}

/// Cycles spanning the rational homology in dimension p: an echelon
/// normalized complement of the boundary space inside the cycle space.
pub fn homology_basis(complex: &SimplicialComplex, p: usize) -> Result<Vec<Chain>> {
    let n = complex.dim();
    if p > n {
        return Err(Error::DimensionOutOfRange { p, lo: 0, hi: n });
    }

    // cycle space: kernel of the boundary, or everything at p = 0
    let cycles: Vec<Vec<Rational>> = if p >= 1 {
        complex.boundary_matrix(p)?.to_rat_mat().nullspace()
    } else {
        let m = complex.cell_count(0);
        (0..m)
            .map(|i| {
                let mut v = vec![Rational::zero(); m];
                v[i] = num_traits::One::one();
                v
            })
            .collect()
    };

    // boundary space
    let mut boundaries = RowSpace::new();
    if p < n {
        let b = complex.boundary_matrix(p + 1)?;
        for col in 0..b.cols() {
            let mut v = vec![Rational::zero(); b.rows()];
            for &(r, s) in b.column(col) {
                v[r] = crate::rational::int(i64::from(s));
            }
            boundaries.insert(v);
        }
    }

    // greedy complement of the boundaries inside the cycles
    let mut span = boundaries;
    let mut complement = Vec::new();
    for z in cycles {
        let residue = span.reduce(z);
        if residue.iter().all(Rational::is_zero) {
            continue;
        }
        span.insert(residue.clone());
        complement.push(residue);
    }
    if complement.is_empty() {
        return Ok(Vec::new());
    }
    let mut normalized = RatMat::from_rows(complement);
    normalized.rref();
    Ok((0..normalized.rows())
        .map(|r| Chain::new(p, normalized.row_vec(r)))
        .collect())
}
