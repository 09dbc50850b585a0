//! List-decodable subspace codes.
//!
//! A message `u` is sent as the GF(q)-span of the `n` vectors
//! `(α_i, f_u(α_i), f_u(γα_i), .., f_u(γ^{s-1}α_i))` inside
//! `W = <α_1..α_n> ⊕ GF(q^m)^s`, an `(n + sm)`-dimensional space over GF(q).
//! Coordinates: the first `n` express the first component in the basis
//! `α_1..α_n`; each following block of `m` is a field element in the
//! polynomial basis.
//!
//! Decoding interpolates `Q_0(X) + sum_i Q_i(Y_i)` through a basis of the
//! received space and then solves for every `f` of q-degree `< k` with
//! `Q_0(X) + sum_i Q_i(f(γ^{i-1}X)) = 0`. The transmitted message is in the
//! output whenever `sρ + t < ns - s(k-1)` for `ρ` erasures and `t` errors.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldArith, FieldElement, Matrix};
use crate::interpolation::{self, InterpolationPoint, InterpolationPolynomials};
use crate::message::Message;
use crate::recovery::{recover_messages, AffineSolutionSpace};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceCode {
    field: Field,
    n: usize,
    k: usize,
    s: usize,
    alphas: Vec<FieldElement>,
    gamma: FieldElement,
}

/// Rates and guaranteed radius for a given erasure count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusInfo {
    /// Largest error count `t` with `sρ + t < ns - s(k-1)`; negative means
    /// no guarantee at this `ρ`.
    pub t_max: i64,
    /// `km / (n(n+sm))`.
    pub symbol_rate: Ratio<i64>,
    /// `k / n`.
    pub packet_rate: Ratio<i64>,
    /// `s - s(k-1)/n`, erasures weighted by `s`.
    pub normalized_radius: Ratio<i64>,
}

/// `⌈(r + s(k-1) + 1) / (s+1)⌉`, rejected when it falls below `k`.
pub fn decoder_d(r: usize, k: usize, s: usize) -> Result<usize> {
    let d = (r + s * (k - 1) + 1).div_ceil(s + 1);
    if r == 0 || d < k {
        return Err(Error::DegenerateReceivedSpace { r, d, k });
    }
    Ok(d)
}

impl SubspaceCode {
    /// Uses `α_i = x^{i-1}` (the first `n` polynomial basis vectors) and the
    /// field's lex-first primitive element as `γ`.
    pub fn new(field: &Field, n: usize, k: usize, s: usize) -> Result<Self> {
        if n > field.m() {
            return Err(Error::BadParams(format!("need n <= m, got n = {n}, m = {}", field.m())));
        }
        let alphas = (0..n).map(|j| field.basis_element(j)).collect();
        Self::with_points(field, n, k, s, alphas, field.primitive_element())
    }

    pub fn with_points(
        field: &Field,
        n: usize,
        k: usize,
        s: usize,
        alphas: Vec<FieldElement>,
        gamma: FieldElement,
    ) -> Result<Self> {
        let m = field.m();
        if !(1 <= k && k <= n && n <= m) {
            return Err(Error::BadParams(format!("need 1 <= k <= n <= m, got k = {k}, n = {n}, m = {m}")));
        }
        if s == 0 {
            return Err(Error::BadParams("s must be at least 1".into()));
        }
        if alphas.len() != n {
            return Err(Error::BadParams(format!("expected {n} evaluation points, got {}", alphas.len())));
        }
        let coords: Vec<Vec<u32>> = alphas.iter().map(|&a| field.coords(a)).collect();
        if Matrix::from_rows(m, &coords).rank(field.base()) != n {
            return Err(Error::BadParams("evaluation points are not GF(q)-independent".into()));
        }
        if !field.generates_full_field(gamma) {
            return Err(Error::BadParams("γ lies in a proper subfield".into()));
        }
        Ok(SubspaceCode { field: field.clone(), n, k, s, alphas, gamma })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn alphas(&self) -> &[FieldElement] {
        &self.alphas
    }

    pub fn gamma(&self) -> FieldElement {
        self.gamma
    }

    /// Ambient dimension `N = n + sm`.
    pub fn ambient_dim(&self) -> usize {
        self.n + self.s * self.field.m()
    }

    fn shifts(&self) -> Vec<FieldElement> {
        std::iter::successors(Some(FieldElement::ONE), |&g| Some(self.field.mul(g, self.gamma))).take(self.s).collect()
    }

    pub fn encode(&self, u: &Message) -> Result<Subspace> {
        if u.len() != self.k {
            return Err(Error::WrongMessageLength { expected: self.k, got: u.len() });
        }
        let f = &self.field;
        let poly = u.polynomial(f);
        let shifts = self.shifts();
        let rows: Vec<Vec<u32>> = self
            .alphas
            .iter()
            .enumerate()
            .map(|(i, &alpha)| {
                let mut v = vec![0u32; self.n];
                v[i] = 1;
                for &g in &shifts {
                    v.extend(f.coords(poly.eval(f.mul(g, alpha))));
                }
                v
            })
            .collect();
        Subspace::span(f.base(), self.ambient_dim(), &rows)
    }

    /// Reads `(x, y_1, .., y_s)` off each basis vector of `u`.
    pub fn interpolation_points(&self, u: &Subspace) -> Result<Vec<InterpolationPoint>> {
        if u.ambient_dim() != self.ambient_dim() {
            return Err(Error::AmbientMismatch { left: self.ambient_dim(), right: u.ambient_dim() });
        }
        let f = &self.field;
        let m = f.m();
        u.basis()
            .row_iter()
            .map(|row| {
                let x = row[..self.n]
                    .iter()
                    .zip(&self.alphas)
                    .fold(FieldElement::ZERO, |acc, (&c, &a)| f.add(acc, f.mul(f.embed(c), a)));
                let ys = (0..self.s)
                    .map(|j| f.from_coords(&row[self.n + j * m..self.n + (j + 1) * m]))
                    .collect::<Result<Vec<_>>>()?;
                Ok(InterpolationPoint { x, ys })
            })
            .collect()
    }

    pub fn interpolate(&self, u: &Subspace) -> Result<InterpolationPolynomials> {
        let points = self.interpolation_points(u)?;
        let d = decoder_d(points.len(), self.k, self.s)?;
        interpolation::interpolate(&self.field, &points, d, self.k, self.s)
    }

    pub fn list_decode(&self, u: &Subspace) -> Result<AffineSolutionSpace> {
        let q = self.interpolate(u)?;
        recover_messages(&q, self.gamma, self.k)
    }

    pub fn radius_info(&self, rho: usize) -> RadiusInfo {
        radius_info(self.n, self.k, self.s, self.field.m(), rho)
    }

    /// True when `sρ + t < ns - s(k-1)`.
    pub fn within_guarantee(&self, rho: usize, t: usize) -> bool {
        rho <= self.n && (t as i64) <= self.radius_info(rho).t_max
    }
}

pub fn radius_info(n: usize, k: usize, s: usize, m: usize, rho: usize) -> RadiusInfo {
    let (n, k, s, m, rho) = (n as i64, k as i64, s as i64, m as i64, rho as i64);
    RadiusInfo {
        t_max: n * s - s * (k - 1) - s * rho - 1,
        symbol_rate: Ratio::new(k * m, n * (n + s * m)),
        packet_rate: Ratio::new(k, n),
        normalized_radius: Ratio::from_integer(s) - Ratio::new(s * (k - 1), n),
    }
}
