//! Basic flag-count p-sets.
//!
//! A flag signature is an increasing list of dimensions containing an
//! anchor dimension p. The value of the basic p-set for a signature at
//! a p-cell A is the number of chains of cells with those dimensions
//! passing through A. This chain-through-the-anchor realization is one
//! concrete flag-count rule; it sits behind [`FlagCountRule`] so a
//! different rule can be swapped in without touching the callers.

use std::fmt;
use std::str::FromStr;

use crate::cochain::Cochain;
use crate::complex::{Orientation, Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Strictly increasing dimensions; the anchor must be among them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlagSignature {
    dims: Vec<usize>,
}

impl FlagSignature {
    pub fn new(dims: Vec<usize>) -> Result<FlagSignature> {
        if dims.is_empty() {
            return Err(Error::InvalidRange("signature must be nonempty".into()));
        }
        if !dims.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidRange(format!(
                "signature dimensions must be strictly increasing, got {dims:?}"
            )));
        }
        Ok(FlagSignature { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.dims.binary_search(&p).is_ok()
    }

    fn require_anchor(&self, p: usize) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::AnchorMissing {
                anchor: p,
                signature: self.to_string(),
            })
        }
    }
}

impl fmt::Display for FlagSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for FlagSignature {
    type Err = Error;

    /// Parses `(0,1,3)`.
    fn from_str(s: &str) -> Result<FlagSignature> {
        let bad = || Error::MalformedSignature(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let dims = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        FlagSignature::new(dims).map_err(|_| bad())
    }
}

/// Parses a comma separated list of parenthesized signatures, e.g.
/// `(2),(0,2),(1,2)`.
pub fn parse_signature_list(s: &str) -> Result<Vec<FlagSignature>> {
    let bad = || Error::MalformedSignature(s.to_string());
    let mut out = Vec::new();
    let mut rest = s.trim();
    if rest.is_empty() {
        return Ok(out);
    }
    loop {
        if !rest.starts_with('(') {
            return Err(bad());
        }
        let close = rest.find(')').ok_or_else(bad)?;
        out.push(rest[..=close].parse()?);
        rest = rest[close + 1..].trim_start();
        if rest.is_empty() {
            return Ok(out);
        }
        rest = rest.strip_prefix(',').ok_or_else(bad)?.trim_start();
    }
}

/// All signatures over dimensions 0..=n containing the anchor p, with
/// at most `max_len` entries, ordered by length and then
/// lexicographically.
pub fn enumerate_signatures(n: usize, p: usize, max_len: usize) -> Result<Vec<FlagSignature>> {
    if p > n {
        return Err(Error::InvalidRange(format!("anchor {p} exceeds dimension {n}")));
    }
    if max_len < 1 {
        return Err(Error::InvalidRange("max_len must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..=n).rev().map(|d| vec![d]).collect();
    while let Some(current) = stack.pop() {
        if current.len() <= max_len && current.contains(&p) {
            out.push(FlagSignature::new(current.clone()).expect("built increasing"));
        }
        if current.len() < max_len {
            let last = *current.last().expect("nonempty");
            for next in (last + 1..=n).rev() {
                let mut extended = current.clone();
                extended.push(next);
                stack.push(extended);
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.dims.cmp(&b.dims)));
    Ok(out)
}

/// Pluggable flag-count rule: the number attached to a pair of a p-cell
/// and its ambient complex for one signature.
pub trait FlagCountRule {
    fn count(
        &self,
        complex: &SimplicialComplex,
        p: usize,
        cell_index: usize,
        signature: &FlagSignature,
    ) -> Result<u64>;
}

/// Counts chains of cells with the signature's dimensions whose p-entry
/// is the given cell.
pub struct ChainsThroughCell;

impl FlagCountRule for ChainsThroughCell {
    fn count(
        &self,
        complex: &SimplicialComplex,
        p: usize,
        cell_index: usize,
        signature: &FlagSignature,
    ) -> Result<u64> {
        signature.require_anchor(p)?;
        if let Some(&top) = signature.dims().last() {
            if top > complex.dim() {
                return Err(Error::DimensionOutOfRange {
                    p: top,
                    lo: 0,
                    hi: complex.dim(),
                });
            }
        }
        let anchor_pos = signature
            .dims()
            .iter()
            .position(|&d| d == p)
            .expect("anchor checked above");
        let below = &signature.dims()[..anchor_pos];
        let above = &signature.dims()[anchor_pos + 1..];
        let cell = complex.cell(p, cell_index);
        Ok(descending_chains(cell, below) * ascending_chains(complex, p, cell_index, above))
    }
}

/// Chains of faces of `cell` with the given dimensions, largest last.
fn descending_chains(cell: &Simplex, dims: &[usize]) -> u64 {
    let Some((&top, rest)) = dims.split_last() else {
        return 1;
    };
    let mut total = 0;
    for face in combinations(cell.vertices(), top + 1) {
        total += descending_chains(&Simplex::from_sorted(face), rest);
    }
    total
}

/// Chains of cofaces of the given cell with the given dimensions,
/// smallest first.
fn ascending_chains(
    complex: &SimplicialComplex,
    p: usize,
    cell_index: usize,
    dims: &[usize],
) -> u64 {
    let Some((&next, rest)) = dims.split_first() else {
        return 1;
    };
    if next > complex.dim() {
        return 0;
    }
    let cell = complex.cell(p, cell_index);
    let mut total = 0;
    for (idx, candidate) in complex.cells(next).iter().enumerate() {
        if candidate.contains(cell) {
            total += ascending_chains(complex, next, idx, rest);
        }
    }
    total
}

fn combinations<T: Clone>(items: &[T], size: usize) -> Vec<Vec<T>> {
    use itertools::Itertools;
    items.iter().cloned().combinations(size).collect()
}

/// Flag count at one cell under the default rule.
pub fn flag_count(
    complex: &SimplicialComplex,
    cell: &Simplex,
    signature: &FlagSignature,
) -> Result<u64> {
    let p = cell.dim();
    let idx = complex
        .cell_index(cell)
        .ok_or_else(|| Error::CellNotFound(cell.to_string()))?;
    ChainsThroughCell.count(complex, p, idx, signature)
}

/// The basic p-set of a signature: the flag count at every p-cell.
pub fn flag_pset(
    complex: &SimplicialComplex,
    p: usize,
    signature: &FlagSignature,
) -> Result<Cochain> {
    flag_pset_with(&ChainsThroughCell, complex, p, signature)
}

pub fn flag_pset_with(
    rule: &impl FlagCountRule,
    complex: &SimplicialComplex,
    p: usize,
    signature: &FlagSignature,
) -> Result<Cochain> {
    signature.require_anchor(p)?;
    let values = (0..complex.cell_count(p))
        .map(|idx| {
            rule.count(complex, p, idx, signature)
                .map(|c| crate::rational::int(c as i64))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Cochain::new(p, values))
}

/// Orientation-signed basic n-set, the sign carrier for top-degree
/// candidates: unsigned flag counts have no chance of being harmonic in
/// top degree unless the orientation sign is injected.
pub fn oriented_flag_pset(
    complex: &SimplicialComplex,
    orientation: &Orientation,
    signature: &FlagSignature,
) -> Result<Cochain> {
    let n = complex.dim();
    signature.require_anchor(n)?;
    let unsigned = flag_pset(complex, n, signature)?;
    let values = unsigned
        .values()
        .iter()
        .zip(orientation.signs())
        .map(|(v, &s)| if s == 1 { v.clone() } else { -v.clone() })
        .collect();
    Ok(Cochain::new(n, values))
}

/// Matrix of basic p-sets: rows are p-cells (labeled), columns are
/// signatures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagBasisMatrix {
    pub p: usize,
    pub signatures: Vec<FlagSignature>,
    /// `counts[cell][signature]`
    pub counts: Vec<Vec<u64>>,
    /// Row labels: the p-cells in index order.
    pub cells: Vec<Simplex>,
}

pub fn flag_basis_matrix(
    complex: &SimplicialComplex,
    p: usize,
    signatures: &[FlagSignature],
) -> Result<FlagBasisMatrix> {
    for s in signatures {
        s.require_anchor(p)?;
    }
    let mut counts = Vec::with_capacity(complex.cell_count(p));
    for idx in 0..complex.cell_count(p) {
        let row = signatures
            .iter()
            .map(|s| ChainsThroughCell.count(complex, p, idx, s))
            .collect::<Result<Vec<_>>>()?;
        counts.push(row);
    }
    Ok(FlagBasisMatrix {
        p,
        signatures: signatures.to_vec(),
        counts,
        cells: complex.cells(p).to_vec(),
    })
}
