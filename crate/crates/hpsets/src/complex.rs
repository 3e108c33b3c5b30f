//! Simplicial complexes: construction from facet lists, signed boundary
//! operators, pseudomanifold validation and coherent orientation.
//!
//! Cells are kept in canonical form (strictly increasing vertex lists)
//! and indexed lexicographically within each dimension. All signs
//! derive from the alternating convention on sorted vertex lists; a
//! coherent orientation of the facets is carried separately as an
//! [`Orientation`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::IncidenceMatrix;

/// Dense vertex index, 0..V-1 after build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A cell in canonical form: strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    verts: Vec<VertexId>,
}

impl Simplex {
    /// Builds the canonical form from an arbitrary ordering of distinct
    /// vertices; also returns the parity of the sorting permutation.
    pub fn from_unordered(verts: Vec<VertexId>) -> Result<(Simplex, i8)> {
        let parity = sort_parity(&verts)
            .ok_or_else(|| Error::DegenerateFacet(join_ids(&verts)))?;
        let mut verts = verts;
        verts.sort_unstable();
        Ok((Simplex { verts }, parity))
    }

    /// Wraps a vertex list already known to be strictly increasing.
    pub fn from_sorted(verts: Vec<VertexId>) -> Simplex {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        Simplex { verts }
    }

    pub fn vertex(v: VertexId) -> Simplex {
        Simplex { verts: vec![v] }
    }

    pub fn dim(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    /// Codimension-one faces with their incidence signs: omitting the
    /// vertex at position `i` carries sign (-1)^i.
    pub fn faces(&self) -> impl Iterator<Item = (Simplex, i8)> + '_ {
        (0..self.verts.len()).map(move |i| {
            let mut v = self.verts.clone();
            v.remove(i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            (Simplex { verts: v }, sign)
        })
    }

    pub fn contains(&self, other: &Simplex) -> bool {
        other.verts.iter().all(|v| self.verts.binary_search(v).is_ok())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.verts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parity of the permutation sorting `verts`; None when a vertex repeats.
fn sort_parity(verts: &[VertexId]) -> Option<i8> {
    let mut inversions = 0usize;
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            match verts[i].cmp(&verts[j]) {
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

fn join_ids(verts: &[VertexId]) -> String {
    verts
        .iter()
        .map(VertexId::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Cell counts per dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(p, &f)| if p % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Pseudomanifold checks; all three must hold for the dual
/// decomposition to exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldReport {
    /// Every cell of lower dimension lies in at least one facet.
    pub pure: bool,
    /// Every ridge ((n-1)-cell) lies in exactly two facets.
    pub ridge_ok: bool,
    /// The facet adjacency graph is connected.
    pub connected: bool,
    /// Ridges violating the two-facet condition, with their facet counts.
    pub bad_ridges: Vec<(Simplex, usize)>,
}

impl ManifoldReport {
    pub fn is_closed_pseudomanifold(&self) -> bool {
        self.pure && self.ridge_ok && self.connected
    }

    pub fn failure_reason(&self) -> String {
        let mut parts = Vec::new();
        if !self.pure {
            parts.push("not pure");
        }
        if !self.ridge_ok {
            parts.push("a ridge is not shared by exactly two facets");
        }
        if !self.connected {
            parts.push("facet adjacency graph is disconnected");
        }
        if parts.is_empty() {
            parts.push("no failure");
        }
        parts.join("; ")
    }
}

/// Signs on the facets making their signed sum a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    signs: Vec<i8>,
}

impl Orientation {
    pub fn new(signs: Vec<i8>) -> Orientation {
        debug_assert!(signs.iter().all(|&s| s == 1 || s == -1));
        Orientation { signs }
    }

    pub fn sign(&self, facet: usize) -> i8 {
        self.signs[facet]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}

/// Outcome of the orientation search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrientationOutcome {
    Orientable(Orientation),
    /// A closed walk of facet indices along which sign propagation is
    /// inconsistent.
    NonOrientable { witness: Vec<usize> },
}

impl OrientationOutcome {
    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            OrientationOutcome::Orientable(o) => Some(o),
            OrientationOutcome::NonOrientable { .. } => None,
        }
    }
}

/// A finite simplicial complex, closed under faces, with stable
/// lexicographic cell indices per dimension.
///
/// Immutable after build; all operations are pure and the complex can
/// be shared freely across threads.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    dim: usize,
    /// cells[p] sorted lexicographically
    cells: Vec<Vec<Simplex>>,
    index: Vec<BTreeMap<Simplex, usize>>,
    /// Parity of each input facet's vertex order against canonical
    /// order, in facet index order. Lets a facet file carry an
    /// orientation.
    facet_parity: Vec<i8>,
    /// Dense vertex id -> id used in the input.
    original_ids: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds the closure of the given facets. Vertex ids are relabeled
    /// densely (preserving order); the input vertex order of each facet
    /// only survives as its parity.
    pub fn build(facets: &[Vec<u64>]) -> Result<SimplicialComplex> {
        if facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        let size = facets[0].len();
        for f in facets {
            if f.len() != size {
                return Err(Error::MixedDimension(size, f.len()));
            }
        }
        let dim = size - 1;

        // dense relabeling, order preserving
        let mut ids: Vec<u64> = facets.iter().flatten().copied().collect();
        ids.sort_unstable();
        ids.dedup();
        let lookup: BTreeMap<u64, VertexId> = ids
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, VertexId(i)))
            .collect();

        let mut canon_facets = Vec::with_capacity(facets.len());
        let mut seen = BTreeSet::new();
        for f in facets {
            let verts: Vec<VertexId> = f.iter().map(|v| lookup[v]).collect();
            let (simplex, parity) = Simplex::from_unordered(verts)?;
            if !seen.insert(simplex.clone()) {
                return Err(Error::DuplicateFacet(simplex.to_string()));
            }
            canon_facets.push((simplex, parity));
        }

        // close under faces
        let mut per_dim: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); dim + 1];
        for (facet, _) in &canon_facets {
            per_dim[dim].insert(facet.clone());
        }
        for p in (1..=dim).rev() {
            let lower: Vec<Simplex> = per_dim[p]
                .iter()
                .flat_map(|cell| cell.faces().map(|(face, _)| face))
                .collect();
            per_dim[p - 1].extend(lower);
        }

        let cells: Vec<Vec<Simplex>> = per_dim
            .into_iter()
            .map(|set| set.into_iter().collect())
            .collect();
        let index: Vec<BTreeMap<Simplex, usize>> = cells
            .iter()
            .map(|list| {
                list.iter()
                    .enumerate()
                    .map(|(i, s)| (s.clone(), i))
                    .collect()
            })
            .collect();

        // facet parity in facet index (lexicographic) order
        let mut facet_parity = vec![1i8; cells[dim].len()];
        for (facet, parity) in &canon_facets {
            facet_parity[index[dim][facet]] = *parity;
        }

        Ok(SimplicialComplex {
            dim,
            cells,
            index,
            facet_parity,
            original_ids: ids,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.cells.iter().map(Vec::len).collect())
    }

    pub fn cell_count(&self, p: usize) -> usize {
        self.cells.get(p).map_or(0, Vec::len)
    }

    pub fn cells(&self, p: usize) -> &[Simplex] {
        &self.cells[p]
    }

    pub fn cell(&self, p: usize, i: usize) -> &Simplex {
        &self.cells[p][i]
    }

    pub fn cell_index(&self, cell: &Simplex) -> Option<usize> {
        self.index.get(cell.dim())?.get(cell).copied()
    }

    /// Parity of each input facet's vertex order, by facet index.
    pub fn facet_parity(&self) -> &[i8] {
        &self.facet_parity
    }

    /// Vertex ids as they appeared in the input, indexed by dense id.
    pub fn original_ids(&self) -> &[u64] {
        &self.original_ids
    }

    pub fn original_id(&self, v: VertexId) -> u64 {
        self.original_ids[v.0]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Signed boundary operator from p-chains to (p-1)-chains, shape
    /// f_{p-1} x f_p. The column of a cell has signs (-1)^i on the face
    /// omitting its i-th vertex.
    pub fn boundary_matrix(&self, p: usize) -> Result<IncidenceMatrix> {
        if p < 1 || p > self.dim {
            return Err(Error::DimensionOutOfRange {
                p,
                lo: 1,
                hi: self.dim,
            });
        }
        let mut m = IncidenceMatrix::zero(self.cell_count(p - 1), self.cell_count(p));
        for (col, cell) in self.cells[p].iter().enumerate() {
            for (face, sign) in cell.faces() {
                let row = self.index[p - 1][&face];
                m.push(row, col, sign);
            }
        }
        Ok(m)
    }

    /// Indices of the (p+1)-cells containing the given p-cell.
    pub fn coface_indices(&self, p: usize, cell_idx: usize) -> Vec<usize> {
        if p + 1 > self.dim {
            return Vec::new();
        }
        let cell = &self.cells[p][cell_idx];
        self.cells[p + 1]
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains(cell))
            .map(|(i, _)| i)
            .collect()
    }

    /// Runs the closed-pseudomanifold checks. Failures are carried in
    /// the report, not raised.
    pub fn validate_manifold(&self) -> ManifoldReport {
        let n = self.dim;
        let facets = &self.cells[n];

        let pure = (0..n).all(|p| {
            self.cells[p]
                .iter()
                .all(|cell| facets.iter().any(|f| f.contains(cell)))
        });

        let mut ridge_ok = true;
        let mut bad_ridges = Vec::new();
        let mut ridge_facets: Vec<Vec<usize>> = Vec::new();
        if n >= 1 {
            ridge_facets = vec![Vec::new(); self.cell_count(n - 1)];
            for (fi, facet) in facets.iter().enumerate() {
                for (ridge, _) in facet.faces() {
                    ridge_facets[self.index[n - 1][&ridge]].push(fi);
                }
            }
            for (ri, fs) in ridge_facets.iter().enumerate() {
                if fs.len() != 2 {
                    ridge_ok = false;
                    bad_ridges.push((self.cells[n - 1][ri].clone(), fs.len()));
                }
            }
        }

        // facet adjacency via shared ridges
        let mut connected = true;
        if facets.len() > 1 {
            let mut visited = vec![false; facets.len()];
            let mut stack = vec![0usize];
            visited[0] = true;
            while let Some(f) = stack.pop() {
                for fs in &ridge_facets {
                    if !fs.contains(&f) {
                        continue;
                    }
                    for &g in fs {
                        if !visited[g] {
                            visited[g] = true;
                            stack.push(g);
                        }
                    }
                }
            }
            connected = visited.iter().all(|&v| v);
        }

        ManifoldReport {
            pure,
            ridge_ok,
            connected,
            bad_ridges,
        }
    }

    /// Searches for a coherent orientation by propagating signs across
    /// shared ridges, normalized so the lexicographically first facet
    /// gets +1. Requires the ridge condition; on failure returns a
    /// closed walk of facets witnessing the inconsistency.
    pub fn orient(&self) -> Result<OrientationOutcome> {
        let report = self.validate_manifold();
        if !report.pure || !report.ridge_ok {
            return Err(Error::NotPseudomanifold(report.failure_reason()));
        }
        let n = self.dim;
        if n == 0 {
            // points carry the trivial orientation
            return Ok(OrientationOutcome::Orientable(Orientation::new(vec![
                1;
                self.cell_count(0)
            ])));
        }
        let facets = &self.cells[n];
        let boundary = self.boundary_matrix(n)?;

        // ridge -> the two facets containing it
        let mut ridge_facets: Vec<Vec<usize>> = vec![Vec::new(); self.cell_count(n - 1)];
        for (fi, facet) in facets.iter().enumerate() {
            for (ridge, _) in facet.faces() {
                ridge_facets[self.index[n - 1][&ridge]].push(fi);
            }
        }

        let mut signs: Vec<i8> = vec![0; facets.len()];
        let mut parent: Vec<Option<usize>> = vec![None; facets.len()];
        for start in 0..facets.len() {
            if signs[start] != 0 {
                continue;
            }
            signs[start] = 1;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                for (ri, fs) in ridge_facets.iter().enumerate() {
                    if fs.len() != 2 || !fs.contains(&f) {
                        continue;
                    }
                    let g = if fs[0] == f { fs[1] } else { fs[0] };
                    // coherence: sign(f)*[df:r] + sign(g)*[dg:r] = 0
                    let sf = boundary.entry(ri, f);
                    let sg = boundary.entry(ri, g);
                    let required = -signs[f] * sf * sg;
                    if signs[g] == 0 {
                        signs[g] = required;
                        parent[g] = Some(f);
                        queue.push_back(g);
                    } else if signs[g] != required {
                        return Ok(OrientationOutcome::NonOrientable {
                            witness: conflict_walk(&parent, f, g),
                        });
                    }
                }
            }
        }

        Ok(OrientationOutcome::Orientable(Orientation::new(signs)))
    }
}

/// Closed walk through the propagation forest connecting two facets
/// whose signs conflict.
fn conflict_walk(parent: &[Option<usize>], a: usize, b: usize) -> Vec<usize> {
    let path_to_root = |mut f: usize| {
        let mut path = vec![f];
        while let Some(p) = parent[f] {
            path.push(p);
            f = p;
        }
        path
    };
    let pa = path_to_root(a);
    let pb = path_to_root(b);
    // trim the shared tail so the walk passes through the lowest
    // common ancestor once
    let mut ia = pa.len();
    let mut ib = pb.len();
    while ia > 1 && ib > 1 && pa[ia - 1] == pb[ib - 1] && pa[ia - 2] == pb[ib - 2] {
        ia -= 1;
        ib -= 1;
    }
    let mut walk = pa[..ia].to_vec();
    // pb[ib-1] is the common ancestor already present in the walk
    walk.extend(pb[..ib - 1].iter().rev());
    walk
}
