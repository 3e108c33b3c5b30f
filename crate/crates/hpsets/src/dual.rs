//! The dual block decomposition of an oriented triangulated manifold.
//!
//! Each p-cell A determines an (n-p)-cell of the dual decomposition;
//! dual cells are represented abstractly by their generating primal
//! cells, and all dual information is carried by incidence numbers.
//! The incidence sign convention is normalized so that dual closedness
//! of a p-set agrees with the transpose of the primal coboundary
//! condition; that equivalence is the binding correctness check, and it
//! pins the signs up to a global per-dimension factor which is chosen
//! to be +1.

use num_traits::Zero;

use crate::cochain::Cochain;
use crate::complex::{FVector, Orientation, SimplicialComplex};
use crate::error::{Error, Result};
use crate::matrix::IncidenceMatrix;
use crate::rational::Rational;

/// A value per dual cell of one dual dimension. Dual cells are indexed
/// by their generating primal cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCochain {
    /// n - p, where p is the generating primal dimension.
    pub dual_dim: usize,
    /// Indexed by the primal p-cell order.
    pub values: Vec<Rational>,
}

/// Dual cell decomposition: the bijection A -> dual cell of dimension
/// n - dim A, together with the dual incidence numbers.
#[derive(Debug, Clone)]
pub struct DualComplex {
    n: usize,
    primal_f: FVector,
    orientation: Orientation,
    /// incidence[p] for p in 1..=n: rows are p-cells A, columns are
    /// (p-1)-cells B, entry the incidence of the dual of B on the dual
    /// of A. Index 0 is unused.
    incidence: Vec<IncidenceMatrix>,
}

/// Builds the dual decomposition. The complex must be a closed
/// connected pseudomanifold and the orientation coherent.
pub fn dual_complex(
    complex: &SimplicialComplex,
    orientation: &Orientation,
) -> Result<DualComplex> {
    let report = complex.validate_manifold();
    if !report.is_closed_pseudomanifold() {
        return Err(Error::NotPseudomanifold(report.failure_reason()));
    }
    if orientation.len() != complex.cell_count(complex.dim()) {
        return Err(Error::LengthMismatch {
            expected: complex.cell_count(complex.dim()),
            got: orientation.len(),
        });
    }
    let n = complex.dim();

    // assembled from the coface side: for each (p-1)-cell B, walk the
    // p-cells A containing it and read off the sign of the omitted
    // vertex. This is the same incidence number the boundary operator
    // produces from the face side, arrived at independently.
    let mut incidence = vec![IncidenceMatrix::zero(0, 0)];
    for p in 1..=n {
        let mut m = IncidenceMatrix::zero(complex.cell_count(p), complex.cell_count(p - 1));
        for (b_idx, b) in complex.cells(p - 1).iter().enumerate() {
            for a_idx in complex.coface_indices(p - 1, b_idx) {
                let a = complex.cell(p, a_idx);
                let omitted = a
                    .vertices()
                    .iter()
                    .position(|v| !b.vertices().contains(v))
                    .expect("a proper coface omits exactly one vertex");
                let sign = if omitted % 2 == 0 { 1 } else { -1 };
                m.push(a_idx, b_idx, sign);
            }
        }
        incidence.push(m);
    }

    Ok(DualComplex {
        n,
        primal_f: complex.f_vector(),
        orientation: orientation.clone(),
        incidence,
    })
}

impl DualComplex {
    pub fn manifold_dim(&self) -> usize {
        self.n
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    /// Counts of dual cells per dual dimension: the reversed primal
    /// f-vector.
    pub fn f_vector(&self) -> FVector {
        let mut f = self.primal_f.0.clone();
        f.reverse();
        FVector(f)
    }

    /// Incidence block for primal dimension p (1..=n): entry (A, B) is
    /// the coefficient of the dual of A in the dual boundary of the
    /// dual of B.
    pub fn incidence(&self, p: usize) -> Result<&IncidenceMatrix> {
        if p < 1 || p > self.n {
            return Err(Error::DimensionOutOfRange {
                p,
                lo: 1,
                hi: self.n,
            });
        }
        Ok(&self.incidence[p])
    }

    /// Dual boundary operator on dual q-chains (dual q-cells are primal
    /// (n-q)-cells), mapping to dual (q-1)-chains.
    pub fn dual_boundary(&self, q: usize) -> Result<&IncidenceMatrix> {
        if q < 1 || q > self.n {
            return Err(Error::DimensionOutOfRange {
                p: q,
                lo: 1,
                hi: self.n,
            });
        }
        self.incidence(self.n - q + 1)
    }

    /// The dual of a primal p-set: the rule sending the dual of A to
    /// the value at A.
    pub fn dualize(&self, cochain: &Cochain) -> Result<DualCochain> {
        let p = cochain.dim();
        if p > self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: p,
            });
        }
        if cochain.len() != self.primal_f.0[p] {
            return Err(Error::LengthMismatch {
                expected: self.primal_f.0[p],
                got: cochain.len(),
            });
        }
        Ok(DualCochain {
            dual_dim: self.n - p,
            values: cochain.values().to_vec(),
        })
    }

    /// Inverse of [`Self::dualize`] through the identification of a cell with
    /// the dual of its dual.
    pub fn dualize_back(&self, dual: &DualCochain) -> Result<Cochain> {
        if dual.dual_dim > self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: dual.dual_dim,
            });
        }
        Ok(Cochain::new(self.n - dual.dual_dim, dual.values.clone()))
    }

    /// Closedness of the dual (n-p)-set of a p-set, evaluated on the
    /// dual decomposition: for every (p-1)-cell B, the values of the
    /// p-set summed over the dual boundary of the dual of B vanish.
    pub fn is_dual_closed(&self, cochain: &Cochain) -> Result<bool> {
        let p = cochain.dim();
        if p > self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: p,
            });
        }
        if cochain.len() != self.primal_f.0[p] {
            return Err(Error::LengthMismatch {
                expected: self.primal_f.0[p],
                got: cochain.len(),
            });
        }
        if p == 0 {
            // no (p-1)-cells, nothing to check
            return Ok(true);
        }
        let m = &self.incidence[p];
        Ok(m.apply_transpose(cochain.values()).iter().all(Zero::is_zero))
    }
}

/// The same dual closedness condition phrased algebraically: the
/// transpose of the primal coboundary annihilates the p-set. Needs no
/// orientation, so it also serves complexes where the dual
/// decomposition does not exist.
pub fn dual_closed_via_transpose(
    complex: &SimplicialComplex,
    cochain: &Cochain,
) -> Result<bool> {
    let p = cochain.dim();
    cochain.check_on(complex, p)?;
    if p == 0 {
        return Ok(true);
    }
    let boundary = complex.boundary_matrix(p)?;
    Ok(boundary.apply(cochain.values()).iter().all(Zero::is_zero))
}
