use rand::Rng;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::linearized::LinearizedPoly;

/// A message `u = (u_0, .., u_{k-1})` over GF(q^m). Its message polynomial is
/// `f_u(X) = sum_i u_i X^{q^i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Message(Vec<FieldElement>);

impl Message {
    pub fn new(symbols: Vec<FieldElement>) -> Self {
        Message(symbols)
    }

    pub fn zero(k: usize) -> Self {
        Message(vec![FieldElement::ZERO; k])
    }

    pub fn random<R: Rng + ?Sized>(field: &Field, k: usize, rng: &mut R) -> Self {
        Message((0..k).map(|_| field.random(rng)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn polynomial(&self, field: &Field) -> LinearizedPoly {
        LinearizedPoly::new(field, self.0.clone())
    }

    /// All `k*m` GF(q) coordinates, symbol by symbol.
    pub fn coords(&self, field: &Field) -> Vec<u32> {
        self.0.iter().flat_map(|&u| field.coords(u)).collect()
    }

    pub fn from_coords(field: &Field, coords: &[u32]) -> Result<Self> {
        let m = field.m();
        if !coords.len().is_multiple_of(m) {
            return Err(Error::ShapeMismatch(format!("{} coordinates is not a multiple of m = {m}", coords.len())));
        }
        coords.chunks(m).map(|c| field.from_coords(c)).collect::<Result<Vec<_>>>().map(Message)
    }

    /// JSON form: one coordinate array per symbol.
    pub fn to_json(&self, field: &Field) -> Vec<Vec<u32>> {
        self.0.iter().map(|&u| field.coords(u)).collect()
    }

    pub fn from_json(field: &Field, symbols: &[Vec<u32>]) -> Result<Self> {
        symbols.iter().map(|c| field.from_coords(c)).collect::<Result<Vec<_>>>().map(Message)
    }
}

impl From<Vec<FieldElement>> for Message {
    fn from(v: Vec<FieldElement>) -> Self {
        Message(v)
    }
}
