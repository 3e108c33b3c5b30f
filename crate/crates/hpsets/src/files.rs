//! Text formats: facet files and cochain (pset) files.
//!
//! Facet file: one facet per line, whitespace separated non-negative
//! integer vertex ids; `#` starts a comment line; vertex order within a
//! line is significant (it carries the orientation parity).
//!
//! Cochain file: header line `pset <p>`, then one line per p-cell with
//! the comma separated sorted vertex ids, whitespace, and the value as
//! `num/den` (denominator omitted when 1). Cells may appear in any
//! order; missing or duplicate cells are errors.

use std::path::Path;

use crate::cochain::Cochain;
use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::rational::parse_rational;

pub fn parse_facet_lines(text: &str) -> Result<Vec<Vec<u64>>> {
    let mut facets = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut facet = Vec::new();
        for token in line.split_whitespace() {
            let id: u64 = token.parse().map_err(|_| Error::MalformedFacetFile {
                line: lineno + 1,
                msg: format!("`{token}` is not a non-negative integer vertex id"),
            })?;
            facet.push(id);
        }
        facets.push(facet);
    }
    Ok(facets)
}

pub fn read_facet_file(path: &Path) -> Result<Vec<Vec<u64>>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::FileUnreadable {
        path: path.to_path_buf(),
        source,
    })?;
    parse_facet_lines(&text)
}

/// Renders the facets of a complex, one per line. With an orientation,
/// the first two vertices of a facet are swapped when its sign is -1,
/// so the emitted order carries the orientation.
pub fn format_facets(
    complex: &SimplicialComplex,
    orientation: Option<&crate::complex::Orientation>,
) -> String {
    let n = complex.dim();
    let mut out = String::new();
    for (i, facet) in complex.cells(n).iter().enumerate() {
        let mut ids: Vec<u64> = facet
            .vertices()
            .iter()
            .map(|&v| complex.original_id(v))
            .collect();
        if let Some(o) = orientation {
            if o.sign(i) == -1 && ids.len() >= 2 {
                ids.swap(0, 1);
            }
        }
        let line: Vec<String> = ids.iter().map(u64::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a cochain file against a complex. Every p-cell must appear
/// exactly once, named by its original vertex ids.
pub fn parse_cochain(text: &str, complex: &SimplicialComplex) -> Result<Cochain> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::MalformedCochainFile {
        line: 1,
        msg: "empty file".to_string(),
    })?;
    let dim: usize = header
        .strip_prefix("pset")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::MalformedCochainFile {
            line: header_line,
            msg: format!("expected header `pset <p>`, found `{header}`"),
        })?;
    if dim > complex.dim() {
        return Err(Error::DimensionOutOfRange {
            p: dim,
            lo: 0,
            hi: complex.dim(),
        });
    }

    // map original ids back to dense ids
    let reverse: std::collections::BTreeMap<u64, VertexId> = complex
        .original_ids()
        .iter()
        .enumerate()
        .map(|(i, &orig)| (orig, VertexId(i)))
        .collect();

    let mut values: Vec<Option<crate::rational::Rational>> =
        vec![None; complex.cell_count(dim)];
    for (lineno, line) in lines {
        let bad = |msg: String| Error::MalformedCochainFile { line: lineno, msg };
        let mut parts = line.split_whitespace();
        let cell_text = parts.next().ok_or_else(|| bad("missing cell".into()))?;
        let value_text = parts.next().ok_or_else(|| bad("missing value".into()))?;
        if parts.next().is_some() {
            return Err(bad("trailing tokens".into()));
        }
        let mut verts = Vec::new();
        for tok in cell_text.split(',') {
            let orig: u64 = tok
                .parse()
                .map_err(|_| bad(format!("`{tok}` is not a vertex id")))?;
            let v = *reverse
                .get(&orig)
                .ok_or_else(|| Error::CellNotFound(cell_text.to_string()))?;
            verts.push(v);
        }
        if !verts.windows(2).all(|w| w[0] < w[1]) {
            return Err(bad(format!("cell `{cell_text}` is not strictly sorted")));
        }
        let cell = Simplex::from_sorted(verts);
        if cell.dim() != dim {
            return Err(bad(format!(
                "cell `{cell_text}` has dimension {}, header says {dim}",
                cell.dim()
            )));
        }
        let idx = complex
            .cell_index(&cell)
            .ok_or_else(|| Error::CellNotFound(cell_text.to_string()))?;
        if values[idx].is_some() {
            return Err(bad(format!("duplicate cell `{cell_text}`")));
        }
        values[idx] = Some(parse_rational(value_text)?);
    }

    let mut out = Vec::with_capacity(values.len());
    for (idx, v) in values.into_iter().enumerate() {
        match v {
            Some(v) => out.push(v),
            None => {
                return Err(Error::MalformedCochainFile {
                    line: 0,
                    msg: format!("missing cell [{}]", complex.cell(dim, idx)),
                })
            }
        }
    }
    Ok(Cochain::new(dim, out))
}

pub fn read_cochain_file(path: &Path, complex: &SimplicialComplex) -> Result<Cochain> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::FileUnreadable {
        path: path.to_path_buf(),
        source,
    })?;
    parse_cochain(&text, complex)
}

/// Canonical cochain file text: cells in index order, original ids.
pub fn format_cochain(complex: &SimplicialComplex, cochain: &Cochain) -> String {
    let mut out = format!("pset {}\n", cochain.dim());
    for (idx, cell) in complex.cells(cochain.dim()).iter().enumerate() {
        let ids: Vec<String> = cell
            .vertices()
            .iter()
            .map(|&v| complex.original_id(v).to_string())
            .collect();
        out.push_str(&format!("{} {}\n", ids.join(","), cochain.value(idx)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn sphere2() -> SimplicialComplex {
        SimplicialComplex::build(&crate::corpus::sphere(2).unwrap()).unwrap()
    }

    #[test]
    fn facet_lines_with_comments() {
        let text = "# a comment\n0 1 2\n\n  2 1 3\n";
        assert_eq!(
            parse_facet_lines(text).unwrap(),
            vec![vec![0, 1, 2], vec![2, 1, 3]]
        );
    }

    #[test]
    fn facet_lines_reject_junk() {
        assert!(matches!(
            parse_facet_lines("0 1 x"),
            Err(Error::MalformedFacetFile { line: 1, .. })
        ));
        assert!(matches!(
            parse_facet_lines("0 1 2\n0 -1 2"),
            Err(Error::MalformedFacetFile { line: 2, .. })
        ));
    }

    #[test]
    fn facet_round_trip_preserves_orientation() {
        let k = sphere2();
        let crate::complex::OrientationOutcome::Orientable(o) = k.orient().unwrap() else {
            panic!()
        };
        let text = format_facets(&k, Some(&o));
        let k2 = SimplicialComplex::build(&parse_facet_lines(&text).unwrap()).unwrap();
        assert_eq!(k2.f_vector(), k.f_vector());
        // the emitted parity is the orientation itself
        assert_eq!(k2.facet_parity(), o.signs());
    }

    #[test]
    fn cochain_round_trip() {
        let k = sphere2();
        let values = vec![int(1), ratio(-1, 2), int(0), ratio(22, 7), int(3), int(-9)];
        let eta = Cochain::new(1, values);
        let text = format_cochain(&k, &eta);
        assert_eq!(parse_cochain(&text, &k).unwrap(), eta);
    }

    #[test]
    fn cochain_in_any_order() {
        let k = sphere2();
        let text = "pset 2\n1,2,3 4\n0,1,2 1\n0,2,3 3\n0,1,3 2\n";
        let eta = parse_cochain(text, &k).unwrap();
        assert_eq!(
            eta.values(),
            &[int(1), int(2), int(3), int(4)]
        );
    }

    #[test]
    fn cochain_rejects_missing_and_duplicate() {
        let k = sphere2();
        assert!(matches!(
            parse_cochain("pset 2\n0,1,2 1\n", &k),
            Err(Error::MalformedCochainFile { .. })
        ));
        let dup = "pset 2\n0,1,2 1\n0,1,2 2\n1,2,3 4\n0,2,3 3\n0,1,3 2\n";
        assert!(matches!(
            parse_cochain(dup, &k),
            Err(Error::MalformedCochainFile { .. })
        ));
    }

    #[test]
    fn cochain_rejects_unknown_cell_and_bad_header() {
        let k = sphere2();
        assert!(matches!(
            parse_cochain("pset 1\n7,9 1\n", &k),
            Err(Error::CellNotFound(_))
        ));
        assert!(matches!(
            parse_cochain("cochain 1\n0,1 1\n", &k),
            Err(Error::MalformedCochainFile { .. })
        ));
    }
}
