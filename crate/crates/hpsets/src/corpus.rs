//! Built-in triangulation generators and corpus assembly.
//!
//! A corpus member is named by a generator spec (`sphere:n`,
//! `torus-grid:k`, `klein-grid:k`, `rp2-min`) or by the path of a facet
//! file. Generators emit facets whose vertex order carries a coherent
//! orientation where one exists.

use std::path::{Path, PathBuf};

use crate::complex::{Orientation, OrientationOutcome, SimplicialComplex};
use crate::error::{Error, Result};
use crate::files;

/// Directory prepended to the search path for facet files.
pub const CORPUS_DIR_ENV: &str = "HPSETS_CORPUS_DIR";

const RP2_MIN: &str = include_str!("../../../corpus/rp2-min.txt");

/// Boundary of the (n+1)-simplex: the n-sphere on n+2 vertices.
/// Facet vertex orders realize the coherent orientation.
pub fn sphere(n: usize) -> Result<Vec<Vec<u64>>> {
    if n < 1 {
        return Err(Error::UnknownGenerator(format!(
            "sphere:{n} (need n >= 1)"
        )));
    }
    let mut facets = Vec::with_capacity(n + 2);
    for omit in 0..=(n + 1) as u64 {
        let mut f: Vec<u64> = (0..=(n + 1) as u64).filter(|&v| v != omit).collect();
        // the omitted vertex contributes sign (-1)^omit; flip odd ones
        if omit % 2 == 1 {
            f.swap(0, 1);
        }
        facets.push(f);
    }
    Ok(facets)
}

/// k x k grid triangulation of the torus, both wraps plain.
/// f = (k^2, 3k^2, 2k^2); needs k >= 3 to stay simplicial.
pub fn torus_grid(k: usize) -> Result<Vec<Vec<u64>>> {
    if k < 3 {
        return Err(Error::UnknownGenerator(format!(
            "torus-grid:{k} (need k >= 3)"
        )));
    }
    let id = |a: usize, b: usize| ((a % k) * k + (b % k)) as u64;
    let mut facets = Vec::with_capacity(2 * k * k);
    for a in 0..k {
        for b in 0..k {
            let p00 = id(a, b);
            let p10 = id(a + 1, b);
            let p01 = id(a, b + 1);
            let p11 = id(a + 1, b + 1);
            facets.push(vec![p00, p10, p11]);
            facets.push(vec![p00, p11, p01]);
        }
    }
    Ok(facets)
}

/// k x k grid triangulation of the Klein bottle: one wrap plain, the
/// other reverses the fiber.
pub fn klein_grid(k: usize) -> Result<Vec<Vec<u64>>> {
    if k < 3 {
        return Err(Error::UnknownGenerator(format!(
            "klein-grid:{k} (need k >= 3)"
        )));
    }
    let id = |a: usize, b: usize| {
        let b = b % k;
        if a == k {
            // crossing the seam reverses the fiber direction
            ((k - b) % k) as u64
        } else {
            (a * k + b) as u64
        }
    };
    let mut facets = Vec::with_capacity(2 * k * k);
    for a in 0..k {
        for b in 0..k {
            let p00 = id(a, b);
            let p10 = id(a + 1, b);
            let p01 = id(a, b + 1);
            let p11 = id(a + 1, b + 1);
            facets.push(vec![p00, p10, p11]);
            facets.push(vec![p00, p11, p01]);
        }
    }
    Ok(facets)
}

/// The 6-vertex projective plane, shipped as a facet file and verified
/// by the test suite rather than trusted.
pub fn rp2_min() -> Vec<Vec<u64>> {
    files::parse_facet_lines(RP2_MIN).expect("embedded facet file parses")
}

/// What an input spec string refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSpec {
    Generator(String),
    File(PathBuf),
}

/// A spec is a generator when it is `rp2-min` or has a known prefix
/// followed by `:`; anything else names a facet file.
pub fn classify_spec(spec: &str) -> InputSpec {
    if spec == "rp2-min" {
        return InputSpec::Generator(spec.to_string());
    }
    if let Some((prefix, _)) = spec.split_once(':') {
        if matches!(prefix, "sphere" | "torus-grid" | "klein-grid") {
            return InputSpec::Generator(spec.to_string());
        }
    }
    InputSpec::File(PathBuf::from(spec))
}

fn generator_facets(spec: &str) -> Result<Vec<Vec<u64>>> {
    if spec == "rp2-min" {
        return Ok(rp2_min());
    }
    let Some((prefix, arg)) = spec.split_once(':') else {
        return Err(Error::UnknownGenerator(spec.to_string()));
    };
    let param: usize = arg
        .parse()
        .map_err(|_| Error::UnknownGenerator(spec.to_string()))?;
    match prefix {
        "sphere" => sphere(param),
        "torus-grid" => torus_grid(param),
        "klein-grid" => klein_grid(param),
        _ => Err(Error::UnknownGenerator(spec.to_string())),
    }
}

/// Resolves a facet file path. Relative paths are tried under
/// `HPSETS_CORPUS_DIR` first when that is set, then as given.
pub fn resolve_facet_path(path: &Path) -> PathBuf {
    if path.is_absolute() {
        return path.to_path_buf();
    }
    if let Ok(dir) = std::env::var(CORPUS_DIR_ENV) {
        let candidate = Path::new(&dir).join(path);
        if candidate.exists() {
            return candidate;
        }
    }
    path.to_path_buf()
}

/// Builds a complex from a generator spec or facet file path.
/// The input string doubles as the member name.
pub fn build_input(spec: &str) -> Result<(String, SimplicialComplex)> {
    let facets = match classify_spec(spec) {
        InputSpec::Generator(g) => generator_facets(&g)?,
        InputSpec::File(path) => files::read_facet_file(&resolve_facet_path(&path))?,
    };
    Ok((spec.to_string(), SimplicialComplex::build(&facets)?))
}

/// A named, validated member: a closed connected pseudomanifold with
/// its orientation when one exists.
#[derive(Debug, Clone)]
pub struct CorpusMember {
    pub name: String,
    pub complex: SimplicialComplex,
    pub orientation: Option<Orientation>,
}

/// Validated collection of triangulations quantified over by the
/// search harness.
#[derive(Debug, Clone)]
pub struct Corpus {
    members: Vec<CorpusMember>,
}

impl Corpus {
    pub fn members(&self) -> &[CorpusMember] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Builds, validates and orients every spec, in the given order.
/// Members failing the pseudomanifold checks are rejected.
pub fn build_corpus(specs: &[String]) -> Result<Corpus> {
    if specs.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut members = Vec::with_capacity(specs.len());
    let mut seen = std::collections::BTreeSet::new();
    for spec in specs {
        if !seen.insert(spec.clone()) {
            return Err(Error::ValidationFailed {
                name: spec.clone(),
                reason: "duplicate corpus member name".to_string(),
            });
        }
        let (name, complex) = build_input(spec)?;
        let report = complex.validate_manifold();
        if !report.is_closed_pseudomanifold() {
            return Err(Error::ValidationFailed {
                name,
                reason: report.failure_reason(),
            });
        }
        let orientation = match complex.orient()? {
            OrientationOutcome::Orientable(o) => Some(o),
            OrientationOutcome::NonOrientable { .. } => None,
        };
        members.push(CorpusMember {
            name,
            complex,
            orientation,
        });
    }
    Ok(Corpus { members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::FVector;

    #[test]
    fn sphere_generator() {
        let k = SimplicialComplex::build(&sphere(2).unwrap()).unwrap();
        assert_eq!(k.f_vector(), FVector(vec![4, 6, 4]));
        // facet input order is already coherent
        assert!(matches!(
            k.orient().unwrap(),
            OrientationOutcome::Orientable(_)
        ));
        let k3 = SimplicialComplex::build(&sphere(3).unwrap()).unwrap();
        assert_eq!(k3.f_vector(), FVector(vec![5, 10, 10, 5]));
        assert_eq!(k3.euler_characteristic(), 0);
    }

    #[test]
    fn sphere_facet_order_carries_orientation() {
        for n in 1..=3 {
            let k = SimplicialComplex::build(&sphere(n).unwrap()).unwrap();
            // the parity-signed facet sum must be a cycle
            let b = k.boundary_matrix(n).unwrap();
            let chain: Vec<_> = k
                .facet_parity()
                .iter()
                .map(|&s| crate::rational::int(i64::from(s)))
                .collect();
            assert!(
                b.apply(&chain).iter().all(num_traits::Zero::is_zero),
                "sphere:{n} facet order is not coherent"
            );
        }
    }

    #[test]
    fn sphere_zero_rejected() {
        assert!(matches!(sphere(0), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn torus_generator() {
        let k = SimplicialComplex::build(&torus_grid(3).unwrap()).unwrap();
        assert_eq!(k.f_vector(), FVector(vec![9, 27, 18]));
        assert_eq!(k.euler_characteristic(), 0);
        assert!(k.validate_manifold().is_closed_pseudomanifold());
        assert!(matches!(
            k.orient().unwrap(),
            OrientationOutcome::Orientable(_)
        ));
    }

    #[test]
    fn torus_facet_order_carries_orientation() {
        let k = SimplicialComplex::build(&torus_grid(3).unwrap()).unwrap();
        let b = k.boundary_matrix(2).unwrap();
        let chain: Vec<_> = k
            .facet_parity()
            .iter()
            .map(|&s| crate::rational::int(i64::from(s)))
            .collect();
        assert!(b.apply(&chain).iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn klein_generator() {
        let k = SimplicialComplex::build(&klein_grid(3).unwrap()).unwrap();
        assert_eq!(k.f_vector(), FVector(vec![9, 27, 18]));
        assert_eq!(k.euler_characteristic(), 0);
        assert!(k.validate_manifold().is_closed_pseudomanifold());
        assert!(matches!(
            k.orient().unwrap(),
            OrientationOutcome::NonOrientable { .. }
        ));
    }

    #[test]
    fn small_grids_rejected() {
        assert!(torus_grid(2).is_err());
        assert!(klein_grid(2).is_err());
    }

    #[test]
    fn rp2_is_the_minimal_projective_plane() {
        let k = SimplicialComplex::build(&rp2_min()).unwrap();
        assert_eq!(k.f_vector(), FVector(vec![6, 15, 10]));
        assert_eq!(k.euler_characteristic(), 1);
        assert!(k.validate_manifold().is_closed_pseudomanifold());
        assert!(matches!(
            k.orient().unwrap(),
            OrientationOutcome::NonOrientable { .. }
        ));
    }

    #[test]
    fn classify_specs() {
        assert_eq!(
            classify_spec("sphere:2"),
            InputSpec::Generator("sphere:2".into())
        );
        assert_eq!(
            classify_spec("rp2-min"),
            InputSpec::Generator("rp2-min".into())
        );
        assert_eq!(
            classify_spec("rp2-min.txt"),
            InputSpec::File(PathBuf::from("rp2-min.txt"))
        );
        assert_eq!(
            classify_spec("meshes/torus.txt"),
            InputSpec::File(PathBuf::from("meshes/torus.txt"))
        );
    }

    #[test]
    fn corpus_build_and_orientations() {
        let corpus =
            build_corpus(&["sphere:2".to_string(), "torus-grid:3".to_string()]).unwrap();
        assert_eq!(corpus.len(), 2);
        assert!(corpus.members().iter().all(|m| m.orientation.is_some()));

        let corpus = build_corpus(&["rp2-min".to_string()]).unwrap();
        assert!(corpus.members()[0].orientation.is_none());
    }

    #[test]
    fn corpus_rejects_bad_specs() {
        assert!(matches!(build_corpus(&[]), Err(Error::EmptyCorpus)));
        assert!(matches!(
            build_corpus(&["sphere:0".to_string()]),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(matches!(
            build_corpus(&["no-such-file.txt".to_string()]),
            Err(Error::FileUnreadable { .. })
        ));
    }
}
