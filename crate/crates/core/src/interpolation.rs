//! Multivariate linearized interpolation shared by both list decoders.
//!
//! Finds a nonzero `Q(X, Y_1, .., Y_s) = Q_0(X) + sum_i Q_i(Y_i)` with
//! `qdeg Q_0 <= d-1` and `qdeg Q_i <= d-k` that vanishes on every point, by
//! Gaussian elimination over GF(q^m).

use crate::error::{Error, Result};
use crate::galois::{Field, FieldArith, FieldElement, Matrix};
use crate::linearized::LinearizedPoly;

/// An interpolation point `(x, y_1, .., y_s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationPoint {
    pub x: FieldElement,
    pub ys: Vec<FieldElement>,
}

/// `Q_0, .., Q_s` together with the degree parameter `d` they were built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationPolynomials {
    polys: Vec<LinearizedPoly>,
    d: usize,
}

impl InterpolationPolynomials {
    /// Checks the q-degree constraints for the given `k`.
    pub fn new(polys: Vec<LinearizedPoly>, d: usize, k: usize) -> Result<Self> {
        if polys.len() < 2 {
            return Err(Error::BadParams("need Q_0 and at least one Q_i".into()));
        }
        if polys[0].q_degree() > d as isize - 1 {
            return Err(Error::BadParams(format!("qdeg Q_0 exceeds d-1 = {}", d as isize - 1)));
        }
        let limit = d as isize - k as isize;
        if polys[1..].iter().any(|p| p.q_degree() > limit) {
            return Err(Error::BadParams(format!("qdeg Q_i exceeds d-k = {limit}")));
        }
        Ok(InterpolationPolynomials { polys, d })
    }

    pub(crate) fn from_parts(polys: Vec<LinearizedPoly>, d: usize) -> Self {
        InterpolationPolynomials { polys, d }
    }

    pub fn polys(&self) -> &[LinearizedPoly] {
        &self.polys
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of `Y` variables.
    pub fn s(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.polys.iter().all(LinearizedPoly::is_zero)
    }

    pub fn eval(&self, point: &InterpolationPoint) -> FieldElement {
        let f = self.polys[0].field();
        point.ys.iter().zip(&self.polys[1..]).fold(self.polys[0].eval(point.x), |acc, (&y, q)| f.add(acc, q.eval(y)))
    }

    /// `Q_0(X) + sum_i Q_i(f(gamma^{i-1} X))` as a linearized polynomial.
    pub fn substitute(&self, gamma: FieldElement, f_u: &LinearizedPoly) -> LinearizedPoly {
        self.polys[0].add(&self.substitute_homogeneous(gamma, f_u))
    }

    /// The same without the `Q_0` term.
    pub fn substitute_homogeneous(&self, gamma: FieldElement, f_u: &LinearizedPoly) -> LinearizedPoly {
        let field = self.polys[0].field();
        let mut shift = FieldElement::ONE;
        let mut acc = LinearizedPoly::zero(field);
        for q in &self.polys[1..] {
            acc = acc.add(&q.compose(&f_u.precompose_scalar(shift)));
            shift = field.mul(shift, gamma);
        }
        acc
    }
}

/// Number of unknown coefficients, `d(s+1) - s(k-1)`.
pub fn unknown_count(d: usize, k: usize, s: usize) -> usize {
    d + s * (d + 1 - k)
}

/// Builds the homogeneous system (one row per point, unknowns ordered
/// `q_{0,0..d-1}`, then `q_{1,0..d-k}`, .., `q_{s,0..d-k}`) and returns the
/// first kernel basis vector as `Q_0..Q_s`.
pub fn interpolate(
    field: &Field,
    points: &[InterpolationPoint],
    d: usize,
    k: usize,
    s: usize,
) -> Result<InterpolationPolynomials> {
    if d < k || k == 0 {
        return Err(Error::BadParams(format!("need 1 <= k <= d, got k = {k}, d = {d}")));
    }
    let width = d + 1 - k;
    let cols = unknown_count(d, k, s);
    let mut rows = Vec::with_capacity(points.len());
    for pt in points {
        if pt.ys.len() != s {
            return Err(Error::ShapeMismatch(format!(
                "interpolation point has {} y-values, expected {s}",
                pt.ys.len()
            )));
        }
        let mut row = Vec::with_capacity(cols);
        row.extend(frobenius_powers(field, pt.x, d));
        for &y in &pt.ys {
            row.extend(frobenius_powers(field, y, width));
        }
        rows.push(row);
    }
    let system = Matrix::from_rows(cols, &rows);
    let kernel = system.kernel_basis(field);
    if kernel.rows() == 0 {
        return Err(Error::ZeroInterpolation);
    }
    let v = kernel.row(0);
    let mut polys = vec![LinearizedPoly::new(field, v[..d].to_vec())];
    for i in 0..s {
        let start = d + i * width;
        polys.push(LinearizedPoly::new(field, v[start..start + width].to_vec()));
    }
    Ok(InterpolationPolynomials { polys, d })
}

/// `x, x^q, .., x^{q^{count-1}}`.
fn frobenius_powers(field: &Field, x: FieldElement, count: usize) -> impl Iterator<Item = FieldElement> + '_ {
    let mut cur = x;
    (0..count).map(move |j| {
        if j > 0 {
            cur = field.frobenius(cur, 1);
        }
        cur
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_point_bivariate() {
        // s = 1, k = 1, r = 1: d = 1, unknowns q_{0,0}, q_{1,0} with
        // q_{0,0} x + q_{1,0} y = 0. Kernel (free column 1): (-y/x, 1).
        let f = Field::binary(4).unwrap();
        let x = FieldElement::ONE;
        let y = f.element(9).unwrap();
        let q = interpolate(&f, &[InterpolationPoint { x, ys: vec![y] }], 1, 1, 1).unwrap();
        assert_eq!(q.polys()[0], LinearizedPoly::monomial(&f, 0, f.neg(y)));
        assert_eq!(q.polys()[1], LinearizedPoly::identity(&f));
        assert!(q.eval(&InterpolationPoint { x, ys: vec![y] }).is_zero());
    }

    #[test]
    fn random_points_are_annihilated() {
        let f = Field::binary(6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (k, s, r) = (2usize, 2usize, 5usize);
        let d = (r + s * (k - 1) + 1).div_ceil(s + 1);
        let pts: Vec<_> = (0..r)
            .map(|_| InterpolationPoint { x: f.random(&mut rng), ys: (0..s).map(|_| f.random(&mut rng)).collect() })
            .collect();
        let q = interpolate(&f, &pts, d, k, s).unwrap();
        assert!(!q.is_zero());
        assert!(q.polys()[0].q_degree() < d as isize);
        assert!(q.polys()[1..].iter().all(|p| p.q_degree() <= (d - k) as isize));
        for p in &pts {
            assert!(q.eval(p).is_zero());
        }
    }

    #[test]
    fn degree_constraints_are_checked() {
        let f = Field::binary(4).unwrap();
        let big = LinearizedPoly::monomial(&f, 3, FieldElement::ONE);
        let id = LinearizedPoly::identity(&f);
        assert!(InterpolationPolynomials::new(vec![big.clone(), id.clone()], 3, 1).is_err());
        assert!(InterpolationPolynomials::new(vec![id.clone(), big], 4, 2).is_err());
        assert!(InterpolationPolynomials::new(vec![id.clone(), id], 1, 1).is_ok());
    }
}
