//! Barycentric subdivision and its chain map.
//!
//! The subdivision has one vertex per cell of the base complex,
//! ordered by (dimension, cell index), and one facet per maximal chain
//! of cells. The chain map sends each p-cell to the signed sum of the
//! p-simplices subdividing it and commutes with the boundary
//! operators.

use itertools::Itertools;

use crate::complex::{Orientation, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::matrix::IncidenceMatrix;
use crate::Chain;

/// Chain map from chains of the base complex to chains of its
/// barycentric subdivision, one matrix per dimension.
#[derive(Debug, Clone)]
pub struct SubdivisionMap {
    maps: Vec<IncidenceMatrix>,
}

impl SubdivisionMap {
    /// Matrix for dimension p, shape f'_p x f_p.
    pub fn matrix(&self, p: usize) -> &IncidenceMatrix {
        &self.maps[p]
    }

    pub fn max_dim(&self) -> usize {
        self.maps.len() - 1
    }

    /// Transports a chain to the subdivision. Cycles stay cycles.
    pub fn push_cycle(&self, chain: &Chain) -> Result<Chain> {
        let p = chain.dim();
        if p >= self.maps.len() {
            return Err(Error::DimensionMismatch {
                expected: self.maps.len() - 1,
                got: p,
            });
        }
        let m = &self.maps[p];
        if chain.len() != m.cols() {
            return Err(Error::LengthMismatch {
                expected: m.cols(),
                got: chain.len(),
            });
        }
        Ok(Chain::new(p, m.apply(chain.values())))
    }
}

/// Builds the barycentric subdivision and its chain map.
pub fn barycentric_subdivision(
    complex: &SimplicialComplex,
) -> (SimplicialComplex, SubdivisionMap) {
    let n = complex.dim();
    let f = complex.f_vector();

    // vertex of the subdivision for cell (p, index)
    let mut offset = vec![0usize; n + 1];
    for p in 1..=n {
        offset[p] = offset[p - 1] + f.0[p - 1];
    }
    let sd_vertex = |p: usize, idx: usize| offset[p] + idx;

    // one facet per maximal chain, listed in ascending dimension so the
    // input order is already canonical
    let mut facets: Vec<Vec<u64>> = Vec::new();
    for facet in complex.cells(n) {
        for perm in facet.vertices().iter().permutations(facet.vertices().len()) {
            let mut sorted: Vec<VertexId> = Vec::with_capacity(n + 1);
            let mut chain_vertices = Vec::with_capacity(n + 1);
            for &v in perm {
                let pos = sorted.partition_point(|u| *u < v);
                sorted.insert(pos, v);
                let cell = Simplex::from_sorted(sorted.clone());
                let idx = complex
                    .cell_index(&cell)
                    .expect("faces of a facet are cells of the complex");
                chain_vertices.push(sd_vertex(cell.dim(), idx) as u64);
            }
            facets.push(chain_vertices);
        }
    }
    let subdivided = SimplicialComplex::build(&facets).expect("subdivision facets are valid");

    // chain map: a p-cell goes to the signed sum of the chains of its
    // own faces, one per ordering of its vertices, with the sign of the
    // ordering as coefficient
    let mut maps = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let mut m = IncidenceMatrix::zero(subdivided.cell_count(p), complex.cell_count(p));
        for (col, cell) in complex.cells(p).iter().enumerate() {
            for perm in cell.vertices().iter().permutations(cell.vertices().len()) {
                let ordering: Vec<VertexId> = perm.iter().copied().copied().collect();
                let sign = permutation_parity(&ordering);
                let mut sorted: Vec<VertexId> = Vec::with_capacity(p + 1);
                let mut chain_cell = Vec::with_capacity(p + 1);
                for &v in &ordering {
                    let pos = sorted.partition_point(|u| *u < v);
                    sorted.insert(pos, v);
                    let face = Simplex::from_sorted(sorted.clone());
                    let idx = complex.cell_index(&face).expect("closed under faces");
                    chain_cell.push(VertexId(sd_vertex(face.dim(), idx)));
                }
                let sd_cell = Simplex::from_sorted(chain_cell);
                let row = subdivided
                    .cell_index(&sd_cell)
                    .expect("chain simplices appear in the subdivision");
                m.push(row, col, sign);
            }
        }
        maps.push(m);
    }

    (subdivided, SubdivisionMap { maps })
}

fn permutation_parity(verts: &[VertexId]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if verts[i] > verts[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Orientation of the subdivision induced by an orientation of the
/// base: the image of the fundamental cycle under the chain map.
pub fn transport_orientation(
    complex: &SimplicialComplex,
    orientation: &Orientation,
    subdivided: &SimplicialComplex,
    map: &SubdivisionMap,
) -> Orientation {
    let n = complex.dim();
    let fundamental = Chain::new(
        n,
        orientation
            .signs()
            .iter()
            .map(|&s| crate::rational::int(i64::from(s)))
            .collect(),
    );
    let pushed = map.push_cycle(&fundamental).expect("dimensions agree");
    let signs: Vec<i8> = pushed
        .values()
        .iter()
        .map(|v| {
            if *v == crate::rational::int(1) {
                1i8
            } else if *v == crate::rational::int(-1) {
                -1i8
            } else {
                panic!("each subdivided facet receives a unit coefficient");
            }
        })
        .collect();
    assert_eq!(signs.len(), subdivided.cell_count(n));
    Orientation::new(signs)
}
