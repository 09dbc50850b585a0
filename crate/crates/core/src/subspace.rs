//! Subspaces of GF(q)^N in canonical RREF form, their sum and intersection,
//! the subspace distance, and random sampling.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{BaseField, FieldArith, Matrix};

/// Retry cap for rejection sampling.
pub const MAX_ATTEMPTS: usize = 1000;

/// A subspace of GF(q)^N. The basis is the RREF of any spanning set with the
/// zero rows removed, so two subspaces are equal iff their bases are.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: BaseField,
    ambient: usize,
    basis: Matrix<u32>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(N={}, {:?})", self.ambient, self.basis.to_rows())
    }
}

/// JSON form `{ambient_dim, basis}` with RREF basis rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<u32>>,
}

impl Subspace {
    /// Span of the given vectors, each of length `ambient`.
    pub fn span(field: &BaseField, ambient: usize, vectors: &[Vec<u32>]) -> Result<Subspace> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::AmbientMismatch { left: ambient, right: v.len() });
            }
            if let Some(&bad) = v.iter().find(|&&c| !field.contains(c)) {
                return Err(Error::NotAnElement { value: bad as u64, size: field.q() });
            }
        }
        Ok(Self::from_matrix(field, &Matrix::from_rows(ambient, vectors)))
    }

    pub(crate) fn from_matrix(field: &BaseField, m: &Matrix<u32>) -> Subspace {
        let ech = m.rref(field);
        Subspace { field: field.clone(), ambient: m.cols(), basis: ech.matrix.take_rows(ech.rank) }
    }

    pub fn zero(field: &BaseField, ambient: usize) -> Subspace {
        Subspace { field: field.clone(), ambient, basis: Matrix::filled(0, ambient, 0) }
    }

    pub fn full(field: &BaseField, ambient: usize) -> Subspace {
        Subspace { field: field.clone(), ambient, basis: Matrix::identity(field, ambient) }
    }

    pub fn field(&self) -> &BaseField {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<u32> {
        &self.basis
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.ambient
            && self.basis.vstack(&Matrix::new(1, self.ambient, v.to_vec())).rank(&self.field) == self.dim()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Self::from_matrix(&self.field, &self.basis.vstack(&other.basis)))
    }

    /// Intersection by the kernel method: `(a, b)` with `a A = b B` gives the
    /// common vectors `a A`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let f = &self.field;
        let (da, db) = (self.dim(), other.dim());
        // Columns of [A^T | -B^T]: kernel vectors are (a, b) with A^T a = B^T b.
        let stacked =
            self.basis.vstack(&Matrix::new(db, self.ambient, other.basis.data().iter().map(|&x| f.neg(x)).collect()));
        let kernel = stacked.transpose().kernel_basis(f);
        let coeffs = Matrix::new(kernel.rows(), da, kernel.row_iter().flat_map(|r| r[..da].to_vec()).collect());
        Ok(Self::from_matrix(f, &coeffs.mul(f, &self.basis)))
    }

    /// `dim(A + B) - dim(A ∩ B)`.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        let s = self.sum(other)?.dim();
        let i = self.intersect(other)?.dim();
        Ok(s - i)
    }

    /// Uniform `t`-dimensional subspace of `self`.
    pub fn random_subspace<R: Rng + ?Sized>(&self, t: usize, rng: &mut R) -> Result<Subspace> {
        let n = self.dim();
        if t > n {
            return Err(Error::DimTooLarge { requested: t, available: n });
        }
        let f = &self.field;
        for _ in 0..MAX_ATTEMPTS {
            let coeffs = random_matrix(f, t, n, rng);
            if coeffs.rank(f) == t {
                return Ok(Self::from_matrix(f, &coeffs.mul(f, &self.basis)));
            }
        }
        Err(Error::RetryLimit(MAX_ATTEMPTS))
    }

    /// Uniform `t`-dimensional subspace `E` with `E ∩ self = {0}`.
    pub fn random_complement<R: Rng + ?Sized>(&self, t: usize, rng: &mut R) -> Result<Subspace> {
        let available = self.ambient - self.dim();
        if t > available {
            return Err(Error::DimTooLarge { requested: t, available });
        }
        let f = &self.field;
        for _ in 0..MAX_ATTEMPTS {
            let e = random_matrix(f, t, self.ambient, rng);
            if self.basis.vstack(&e).rank(f) == self.dim() + t {
                return Ok(Self::from_matrix(f, &e));
            }
        }
        Err(Error::RetryLimit(MAX_ATTEMPTS))
    }

    pub fn to_json(&self) -> SubspaceJson {
        SubspaceJson { ambient_dim: self.ambient, basis: self.basis.to_rows() }
    }

    /// Parses the JSON form. Any spanning set is accepted and canonicalized.
    pub fn from_json(field: &BaseField, json: &SubspaceJson) -> Result<Subspace> {
        Self::span(field, json.ambient_dim, &json.basis)
    }
}

pub(crate) fn random_matrix<R: Rng + ?Sized>(f: &BaseField, rows: usize, cols: usize, rng: &mut R) -> Matrix<u32> {
    let q = f.q();
    Matrix::new(rows, cols, (0..rows * cols).map(|_| rng.gen_range(0..q) as u32).collect())
}
