//! Shared test support: an independent dense elimination oracle written
//! directly against the textbook definitions, plus fixture helpers.
//! The oracle deliberately shares no code with the library's solver.

// index-style loops are deliberate here: the oracle follows the
// textbook formulation rather than the library's idioms
#![allow(dead_code, clippy::needless_range_loop)]

use hpsets::complex::{Orientation, OrientationOutcome, SimplicialComplex};
use hpsets::matrix::IncidenceMatrix;
use hpsets::rational::Rational;
use num_traits::{One, Signed, Zero};

pub type DenseMat = Vec<Vec<Rational>>;

/// Textbook Gauss-Jordan elimination into reduced row echelon form,
/// returning the pivot columns. Pivot choice: largest absolute value in
/// the column (plain partial pivoting), unlike the library's
/// first-nonzero rule.
pub fn oracle_rref(mat: &mut DenseMat) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut lead = 0usize;
    for col in 0..cols {
        if lead >= rows {
            break;
        }
        let mut best: Option<usize> = None;
        for r in lead..rows {
            if !mat[r][col].is_zero()
                && best.is_none_or(|b: usize| mat[r][col].abs() > mat[b][col].abs())
            {
                best = Some(r);
            }
        }
        let Some(best) = best else { continue };
        mat.swap(lead, best);
        let pivot = mat[lead][col].clone();
        for c in 0..cols {
            mat[lead][c] = &mat[lead][c] / &pivot;
        }
        for r in 0..rows {
            if r == lead || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for c in 0..cols {
                let delta = &factor * &mat[lead][c];
                mat[r][c] = &mat[r][c] - &delta;
            }
        }
        pivots.push(col);
        lead += 1;
    }
    pivots
}

pub fn oracle_rank(mat: &DenseMat) -> usize {
    let mut copy = mat.clone();
    oracle_rref(&mut copy).len()
}

/// Nullspace basis from the reduced form: one vector per free column,
/// then normalized to its own reduced echelon form so the result is
/// directly comparable with the library's canonical output.
pub fn oracle_nullspace(mat: &DenseMat, cols: usize) -> DenseMat {
    let mut reduced = mat.clone();
    let pivots = oracle_rref(&mut reduced);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis: DenseMat = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -reduced[row][free].clone();
        }
        basis.push(v);
    }
    oracle_rref(&mut basis);
    basis
}

/// Independent harmonic projection: orthogonally project onto the
/// span of the oracle's own Laplacian kernel basis, solving the Gram
/// system with the oracle eliminator. No code shared with the library's
/// normal-equation route.
pub fn oracle_harmonic_projection(
    complex: &SimplicialComplex,
    p: usize,
    eta: &[Rational],
) -> Vec<Rational> {
    let lap = ratmat_to_dense(&hpsets::laplacian(complex, p).unwrap());
    let cols = complex.cell_count(p);
    let basis = oracle_nullspace(&lap, cols);
    if basis.is_empty() {
        return vec![Rational::zero(); cols];
    }
    let dot = |a: &[Rational], b: &[Rational]| -> Rational {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    };
    // solve (V Vᵀ) c = V eta, then return Vᵀ c
    let mut augmented: DenseMat = basis
        .iter()
        .map(|row| {
            let mut r: Vec<Rational> = basis.iter().map(|other| dot(row, other)).collect();
            r.push(dot(row, eta));
            r
        })
        .collect();
    let pivots = oracle_rref(&mut augmented);
    assert_eq!(pivots.len(), basis.len(), "gram matrix is invertible");
    let coefficients: Vec<Rational> = augmented
        .iter()
        .map(|row| row.last().unwrap().clone())
        .collect();
    let mut projected = vec![Rational::zero(); cols];
    for (c, row) in coefficients.iter().zip(&basis) {
        for (out, v) in projected.iter_mut().zip(row) {
            *out = &*out + &(c * v);
        }
    }
    projected
}

pub fn incidence_to_dense(m: &IncidenceMatrix) -> DenseMat {
    let mut out = vec![vec![Rational::zero(); m.cols()]; m.rows()];
    for col in 0..m.cols() {
        for &(row, sign) in m.column(col) {
            out[row][col] = Rational::from_integer(sign.into());
        }
    }
    out
}

pub fn ratmat_to_dense(m: &hpsets::matrix::RatMat) -> DenseMat {
    (0..m.rows()).map(|r| m.row_vec(r)).collect()
}

/// Tiny deterministic generator for random rationals; splitmix64 core
/// so the suite never depends on external RNG stability.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> TestRng {
        TestRng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn rational(&mut self) -> Rational {
        let num = (self.next_u64() % 41) as i64 - 20;
        let den = (self.next_u64() % 12) as i64 + 1;
        Rational::new(num.into(), den.into())
    }

    pub fn rationals(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.rational()).collect()
    }
}

/// A named test member with its orientation when one exists.
pub struct Member {
    pub name: String,
    pub complex: SimplicialComplex,
    pub orientation: Option<Orientation>,
}

impl Member {
    fn from_complex(name: &str, complex: SimplicialComplex) -> Member {
        let orientation = match complex.orient().expect("corpus members are pseudomanifolds") {
            OrientationOutcome::Orientable(o) => Some(o),
            OrientationOutcome::NonOrientable { .. } => None,
        };
        Member {
            name: name.to_string(),
            complex,
            orientation,
        }
    }
}

/// The acceptance corpus: the five base members plus the barycentric
/// subdivision of each surface.
pub fn acceptance_members() -> Vec<Member> {
    let base: Vec<(&str, SimplicialComplex)> = vec![
        (
            "sphere:2",
            SimplicialComplex::build(&hpsets::corpus::sphere(2).unwrap()).unwrap(),
        ),
        (
            "sphere:3",
            SimplicialComplex::build(&hpsets::corpus::sphere(3).unwrap()).unwrap(),
        ),
        (
            "torus-grid:3",
            SimplicialComplex::build(&hpsets::corpus::torus_grid(3).unwrap()).unwrap(),
        ),
        (
            "klein-grid:3",
            SimplicialComplex::build(&hpsets::corpus::klein_grid(3).unwrap()).unwrap(),
        ),
        (
            "rp2-min",
            SimplicialComplex::build(&hpsets::corpus::rp2_min()).unwrap(),
        ),
    ];
    let mut members = Vec::new();
    for (name, complex) in base {
        let surface = complex.dim() == 2;
        members.push(Member::from_complex(name, complex));
        if surface {
            let (sd, _) = hpsets::subdivision::barycentric_subdivision(
                &members.last().unwrap().complex,
            );
            members.push(Member::from_complex(&format!("sd({name})"), sd));
        }
    }
    members
}

/// Expected rational Betti numbers per base member name.
pub fn expected_betti(name: &str) -> Vec<usize> {
    let base = name
        .strip_prefix("sd(")
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(name);
    match base {
        "sphere:2" => vec![1, 0, 1],
        "sphere:3" => vec![1, 0, 0, 1],
        "torus-grid:3" => vec![1, 2, 1],
        "klein-grid:3" => vec![1, 1, 0],
        "rp2-min" => vec![1, 0, 0],
        _ => panic!("unknown member {name}"),
    }
}
