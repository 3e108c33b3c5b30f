//! Values attached to cells: a p-set assigns a rational to every
//! p-cell, a chain assigns coefficients to cells of one dimension.
//! Both are plain value vectors over the lexicographic cell order of a
//! fixed complex.

use num_traits::Zero;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A p-set: one rational per p-cell, in cell index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    dim: usize,
    values: Vec<Rational>,
}

/// A formal sum of p-cells with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    dim: usize,
    values: Vec<Rational>,
}

macro_rules! impl_cell_values {
    ($name:ident) => {
        impl $name {
            pub fn new(dim: usize, values: Vec<Rational>) -> $name {
                $name { dim, values }
            }

            pub fn zero(complex: &SimplicialComplex, dim: usize) -> $name {
                $name {
                    dim,
                    values: vec![Rational::zero(); complex.cell_count(dim)],
                }
            }

            pub fn dim(&self) -> usize {
                self.dim
            }

            pub fn values(&self) -> &[Rational] {
                &self.values
            }

            pub fn value(&self, cell: usize) -> &Rational {
                &self.values[cell]
            }

            pub fn set(&mut self, cell: usize, v: Rational) {
                self.values[cell] = v;
            }

            pub fn len(&self) -> usize {
                self.values.len()
            }

            pub fn is_empty(&self) -> bool {
                self.values.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.values.iter().all(Rational::is_zero)
            }

            /// Checks the value vector matches the complex's p-cell count.
            pub fn check_on(&self, complex: &SimplicialComplex, dim: usize) -> Result<()> {
                if self.dim != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: self.dim,
                    });
                }
                let expected = complex.cell_count(dim);
                if self.values.len() != expected {
                    return Err(Error::LengthMismatch {
                        expected,
                        got: self.values.len(),
                    });
                }
                Ok(())
            }

            pub fn scaled(&self, factor: &Rational) -> $name {
                $name {
                    dim: self.dim,
                    values: self.values.iter().map(|v| v * factor).collect(),
                }
            }

            pub fn add(&self, other: &$name) -> $name {
                assert_eq!(self.dim, other.dim);
                assert_eq!(self.values.len(), other.values.len());
                $name {
                    dim: self.dim,
                    values: self
                        .values
                        .iter()
                        .zip(&other.values)
                        .map(|(a, b)| a + b)
                        .collect(),
                }
            }

            pub fn sub(&self, other: &$name) -> $name {
                assert_eq!(self.dim, other.dim);
                assert_eq!(self.values.len(), other.values.len());
                $name {
                    dim: self.dim,
                    values: self
                        .values
                        .iter()
                        .zip(&other.values)
                        .map(|(a, b)| a - b)
                        .collect(),
                }
            }
        }
    };
}

impl_cell_values!(Cochain);
impl_cell_values!(Chain);

/// Evaluates a p-set against a p-chain: the sum of value times
/// coefficient over all p-cells.
pub fn pairing(cochain: &Cochain, chain: &Chain) -> Result<Rational> {
    if cochain.dim() != chain.dim() {
        return Err(Error::DimensionMismatch {
            expected: cochain.dim(),
            got: chain.dim(),
        });
    }
    if cochain.len() != chain.len() {
        return Err(Error::LengthMismatch {
            expected: cochain.len(),
            got: chain.len(),
        });
    }
    let mut acc = Rational::zero();
    for (a, b) in cochain.values().iter().zip(chain.values()) {
        if !a.is_zero() && !b.is_zero() {
            acc += a * b;
        }
    }
    Ok(acc)
}

/// The cochain taking the orientation sign on each facet.
pub fn orientation_cochain(
    complex: &SimplicialComplex,
    orientation: &crate::complex::Orientation,
) -> Cochain {
    Cochain::new(
        complex.dim(),
        orientation
            .signs()
            .iter()
            .map(|&s| crate::rational::int(i64::from(s)))
            .collect(),
    )
}
