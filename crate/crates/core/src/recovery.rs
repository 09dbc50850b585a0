//! Message recovery: every `f` of q-degree `< k` with
//!
//! ```text
//! Q_0(X) + Q_1(f(X)) + Q_2(f(γX)) + .. + Q_s(f(γ^{s-1}X)) = 0
//! ```
//!
//! The coefficient of `X^{q^p}` on the left is
//! `q_{0,p} + sum_l A_{p-l}(γ^{q^p}) u_l^{q^{p-l}}` with
//! `A_t(X) = q_{1,t} + q_{2,t} X + .. + q_{s,t} X^{s-1}`. Each term is a
//! GF(q)-linear function of the coordinates of `u`, so requiring every
//! coefficient to vanish is one linear system over GF(q) in `k*m` unknowns.
//! Its solution set is an affine GF(q)-subspace of dimension at most
//! `m(s-1)`.

use crate::error::{Error, Result};
use crate::galois::{solve_affine, Field, FieldArith, FieldElement, Matrix};
use crate::interpolation::InterpolationPolynomials;
use crate::linearized::LinearizedPoly;
use crate::message::Message;

/// The decoder's output list as an affine GF(q)-subspace of GF(q^m)^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolutionSpace {
    field: Field,
    k: usize,
    solution: Option<(Message, Vec<Message>)>,
}

impl AffineSolutionSpace {
    pub fn infeasible(field: &Field, k: usize) -> Self {
        AffineSolutionSpace { field: field.clone(), k, solution: None }
    }

    pub fn new(field: &Field, particular: Message, basis: Vec<Message>) -> Self {
        AffineSolutionSpace { field: field.clone(), k: particular.len(), solution: Some((particular, basis)) }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// True when no message satisfies the recovery equation.
    pub fn is_infeasible(&self) -> bool {
        self.solution.is_none()
    }

    /// GF(q)-dimension, `None` when infeasible.
    pub fn dim(&self) -> Option<usize> {
        self.solution.as_ref().map(|(_, b)| b.len())
    }

    pub fn particular(&self) -> Option<&Message> {
        self.solution.as_ref().map(|(p, _)| p)
    }

    pub fn basis(&self) -> &[Message] {
        self.solution.as_ref().map_or(&[], |(_, b)| b.as_slice())
    }

    /// Number of messages in the list, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        match self.dim() {
            None => 0,
            Some(d) => (self.field.q() as u128).checked_pow(d as u32).unwrap_or(u128::MAX),
        }
    }

    pub fn contains(&self, u: &Message) -> bool {
        let Some((p, basis)) = &self.solution else {
            return false;
        };
        if u.len() != self.k {
            return false;
        }
        let f = &self.field;
        let base = f.base();
        let diff: Vec<u32> = u.coords(f).iter().zip(p.coords(f)).map(|(&a, b)| base.sub(a, b)).collect();
        let rows: Vec<Vec<u32>> = basis.iter().map(|b| b.coords(f)).collect();
        let width = self.k * f.m();
        let span = Matrix::from_rows(width, &rows);
        span.rank(base) == span.vstack(&Matrix::new(1, width, diff)).rank(base)
    }

    /// Materializes the list in lex order of the GF(q) coefficient vectors
    /// (first basis coefficient most significant).
    pub fn enumerate(&self, cap: usize) -> Result<Vec<Message>> {
        let Some((p, basis)) = &self.solution else {
            return Ok(Vec::new());
        };
        let dim = basis.len();
        let size = self.size();
        if size > cap as u128 {
            return Err(Error::ListCapExceeded { dim, cap });
        }
        let f = &self.field;
        let q = f.q();
        let mut out = Vec::with_capacity(size as usize);
        for idx in 0..size as u64 {
            let mut symbols = p.symbols().to_vec();
            let mut rest = idx;
            for b in basis.iter().rev() {
                let c = f.embed((rest % q) as u32);
                rest /= q;
                if c.is_zero() {
                    continue;
                }
                for (s, &bs) in symbols.iter_mut().zip(b.symbols()) {
                    *s = f.add(*s, f.mul(c, bs));
                }
            }
            out.push(Message::new(symbols));
        }
        Ok(out)
    }
}

/// Strips Frobenius layers while every `q_{i,0}` vanishes:
/// `Q_i(Y) = (Q_i'(Y))^q` with `q'_{i,j} = q_{i,j+1}^{1/q}`, which leaves
/// the solution set unchanged.
pub fn normalize(q: &InterpolationPolynomials) -> InterpolationPolynomials {
    let field = q.polys()[0].field().clone();
    let m = field.m();
    let mut polys = q.polys().to_vec();
    let mut stripped = 0;
    while polys.iter().any(|p| !p.is_zero()) && polys.iter().all(|p| p.coeff(0).is_zero()) {
        polys = polys
            .iter()
            .map(|p| {
                let coeffs = p.coeffs().iter().skip(1).map(|&c| field.frobenius(c, m - 1)).collect();
                LinearizedPoly::new(&field, coeffs)
            })
            .collect();
        stripped += 1;
    }
    InterpolationPolynomials::from_parts(polys, q.d().saturating_sub(stripped).max(1))
}

/// All messages of length `k` whose polynomial solves the recovery equation
/// with shifts `γ^0, .., γ^{s-1}` on `Q_1, .., Q_s`.
pub fn recover_messages(q: &InterpolationPolynomials, gamma: FieldElement, k: usize) -> Result<AffineSolutionSpace> {
    if q.is_zero() {
        return Err(Error::ZeroInterpolation);
    }
    let field = q.polys()[0].field().clone();
    let m = field.m();
    if k == 0 || k > m {
        return Err(Error::BadParams(format!("need 1 <= k <= m = {m}, got {k}")));
    }
    let q = normalize(q);
    let polys = q.polys();
    let s = q.s();
    let base = field.base();

    // Highest coefficient position of P(X) that can be nonzero.
    let mut top = polys[0].q_degree();
    for p in &polys[1..] {
        if !p.is_zero() {
            top = top.max(p.q_degree() + k as isize - 1);
        }
    }
    let positions = (top + 1) as usize;

    let shifts: Vec<FieldElement> =
        std::iter::successors(Some(FieldElement::ONE), |&g| Some(field.mul(g, gamma))).take(s).collect();
    let unit: Vec<FieldElement> = (0..m).map(|c| field.basis_element(c)).collect();

    let mut system = Matrix::zeros(base, positions * m, k * m);
    let mut rhs = vec![0u32; positions * m];
    for p in 0..positions {
        for (c, v) in field.coords(field.neg(polys[0].coeff(p))).into_iter().enumerate() {
            rhs[p * m + c] = v;
        }
        let shifted: Vec<FieldElement> = shifts.iter().map(|&g| field.frobenius(g, p)).collect();
        for l in 0..k.min(p + 1) {
            let t = p - l;
            // A_t(γ^{q^p})
            let a = polys[1..]
                .iter()
                .zip(&shifted)
                .fold(FieldElement::ZERO, |acc, (qi, &g)| field.add(acc, field.mul(qi.coeff(t), g)));
            if a.is_zero() {
                continue;
            }
            for (c, &e) in unit.iter().enumerate() {
                let image = field.mul(a, field.frobenius(e, t));
                for (row, v) in field.coords(image).into_iter().enumerate() {
                    system.set(p * m + row, l * m + c, v);
                }
            }
        }
    }

    let Some(sol) = solve_affine(base, &system, &rhs) else {
        return Ok(AffineSolutionSpace::infeasible(&field, k));
    };
    let particular = Message::from_coords(&field, &sol.particular)?;
    let basis = sol.kernel.row_iter().map(|r| Message::from_coords(&field, r)).collect::<Result<Vec<_>>>()?;

    if !q.substitute(gamma, &particular.polynomial(&field)).is_zero()
        || basis.iter().any(|b| !q.substitute_homogeneous(gamma, &b.polynomial(&field)).is_zero())
    {
        return Err(Error::RecoveryCheckFailed);
    }
    Ok(AffineSolutionSpace::new(&field, particular, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_poly(f: &Field, len: usize, rng: &mut impl Rng) -> LinearizedPoly {
        LinearizedPoly::new(f, (0..len).map(|_| f.random(rng)).collect())
    }

    fn brute_force(q: &InterpolationPolynomials, gamma: FieldElement, f: &Field, k: usize) -> Vec<Message> {
        let total = f.size().pow(k as u32);
        (0..total)
            .map(|idx| {
                let mut rest = idx;
                Message::new(
                    (0..k)
                        .map(|_| {
                            let e = f.element(rest % f.size()).unwrap();
                            rest /= f.size();
                            e
                        })
                        .collect(),
                )
            })
            .filter(|u| q.substitute(gamma, &u.polynomial(f)).is_zero())
            .collect()
    }

    /// The forward recursion: solve coefficient i for u_i, branching over all
    /// of GF(q^m) when A(γ^{q^i}) = 0, then keep candidates that zero P.
    fn recursion_oracle(q: &InterpolationPolynomials, gamma: FieldElement, f: &Field, k: usize) -> Vec<Message> {
        let q = normalize(q);
        let polys = q.polys();
        let s = q.s();
        let a_t = |t: usize, x: FieldElement| {
            let mut acc = FieldElement::ZERO;
            let mut pw = FieldElement::ONE;
            for qi in &polys[1..=s] {
                acc = f.add(acc, f.mul(qi.coeff(t), pw));
                pw = f.mul(pw, x);
            }
            acc
        };
        let mut partial: Vec<Vec<FieldElement>> = vec![Vec::new()];
        for i in 0..k {
            let gi = f.frobenius(gamma, i);
            let lead = a_t(0, gi);
            let mut next = Vec::new();
            for u in partial {
                let mut rest = polys[0].coeff(i);
                for (j, &uj) in u.iter().enumerate() {
                    rest = f.add(rest, f.mul(a_t(i - j, gi), f.frobenius(uj, i - j)));
                }
                if !lead.is_zero() {
                    let mut v = u.clone();
                    v.push(f.neg(f.div(rest, lead).unwrap()));
                    next.push(v);
                } else if rest.is_zero() {
                    for e in f.elements() {
                        let mut v = u.clone();
                        v.push(e);
                        next.push(v);
                    }
                }
            }
            partial = next;
        }
        let mut out: Vec<Message> =
            partial.into_iter().map(Message::new).filter(|u| q.substitute(gamma, &u.polynomial(f)).is_zero()).collect();
        out.sort();
        out
    }

    #[test]
    fn identity_q1_gives_negated_q0() {
        let f = Field::binary(4).unwrap();
        let gamma = f.primitive_element();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let k = 3;
        let q0 = random_poly(&f, k, &mut rng);
        let q = InterpolationPolynomials::new(
            vec![q0.clone(), LinearizedPoly::identity(&f), LinearizedPoly::zero(&f)],
            k,
            k,
        )
        .unwrap();
        let space = recover_messages(&q, gamma, k).unwrap();
        assert_eq!(space.dim(), Some(0));
        let mut expected: Vec<FieldElement> = q0.neg().coeffs().to_vec();
        expected.resize(k, FieldElement::ZERO);
        assert_eq!(space.particular().unwrap().symbols(), expected.as_slice());
    }

    #[test]
    fn s1_is_unique_or_infeasible() {
        let f = Field::binary(5).unwrap();
        let gamma = f.primitive_element();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let q =
                InterpolationPolynomials::new(vec![random_poly(&f, 3, &mut rng), random_poly(&f, 2, &mut rng)], 3, 2)
                    .unwrap();
            if q.is_zero() {
                continue;
            }
            let space = recover_messages(&q, gamma, 2).unwrap();
            assert!(space.dim().is_none_or(|d| d == 0));
        }
    }

    #[test]
    fn matches_brute_force_and_recursion_on_gf8() {
        let f = Field::binary(3).unwrap();
        let gamma = f.primitive_element();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut feasible = 0;
        for trial in 0..60 {
            let k = 1 + trial % 2;
            let s = 2;
            let d = k + rng.gen_range(0..2);
            let mut polys = vec![random_poly(&f, d, &mut rng)];
            for _ in 0..s {
                polys.push(random_poly(&f, d - k + 1, &mut rng));
            }
            let mut q = InterpolationPolynomials::new(polys, d, k).unwrap();
            if trial % 3 == 0 {
                // Plant a root: Q_0 := -(sum_i Q_i ⊗ f_u(γ^{i-1}X)).
                let u = Message::random(&f, k, &mut rng);
                let h = q.substitute_homogeneous(gamma, &u.polynomial(&f));
                let mut polys = q.polys().to_vec();
                polys[0] = h.neg();
                q = InterpolationPolynomials::new(polys, d, k).unwrap();
            }
            if q.is_zero() {
                continue;
            }
            let space = recover_messages(&q, gamma, k).unwrap();
            let mut got = space.enumerate(1 << 12).unwrap();
            got.sort();
            let mut want = brute_force(&q, gamma, &f, k);
            want.sort();
            assert_eq!(got, want);
            assert_eq!(recursion_oracle(&q, gamma, &f, k), want);
            assert!(space.dim().is_none_or(|d| d <= f.m() * (s - 1)));
            feasible += usize::from(!got.is_empty());
        }
        assert!(feasible >= 20);
    }

    #[test]
    fn normalization_preserves_solutions() {
        let f = Field::binary(4).unwrap();
        let gamma = f.primitive_element();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let u = Message::random(&f, 2, &mut rng);
        let q1 = LinearizedPoly::new(&f, vec![FieldElement::ZERO, f.random(&mut rng)]);
        let q2 = LinearizedPoly::new(&f, vec![FieldElement::ZERO, f.random(&mut rng)]);
        let base = InterpolationPolynomials::new(vec![LinearizedPoly::zero(&f), q1, q2], 3, 2).unwrap();
        let q0 = base.substitute_homogeneous(gamma, &u.polynomial(&f)).neg();
        let mut polys = base.polys().to_vec();
        polys[0] = q0;
        let q = InterpolationPolynomials::new(polys, 3, 2).unwrap();
        assert!(q.polys().iter().all(|p| p.coeff(0).is_zero()));
        let n = normalize(&q);
        assert!(n.polys().iter().any(|p| !p.coeff(0).is_zero()));
        let space = recover_messages(&q, gamma, 2).unwrap();
        assert!(space.contains(&u));
        assert!(space.dim().unwrap() <= f.m());
    }

    #[test]
    fn enumerate_edge_cases() {
        let f = Field::binary(3).unwrap();
        assert!(AffineSolutionSpace::infeasible(&f, 2).enumerate(1).unwrap().is_empty());
        let p = Message::new(vec![f.element(5).unwrap()]);
        let single = AffineSolutionSpace::new(&f, p.clone(), vec![]);
        assert_eq!(single.enumerate(1).unwrap(), vec![p.clone()]);
        let b1 = Message::new(vec![FieldElement::ONE]);
        let b2 = Message::new(vec![f.element(2).unwrap()]);
        let plane = AffineSolutionSpace::new(&f, p.clone(), vec![b1, b2]);
        let all = plane.enumerate(4).unwrap();
        let idx: Vec<u32> = all.iter().map(|m| m.symbols()[0].index()).collect();
        // 5, 5^2, 5^1, 5^1^2
        assert_eq!(idx, vec![5, 7, 4, 6]);
        assert_eq!(plane.enumerate(3), Err(Error::ListCapExceeded { dim: 2, cap: 3 }));
        assert!(plane.contains(&Message::new(vec![f.element(6).unwrap()])));
        assert!(!plane.contains(&Message::new(vec![f.element(0).unwrap()])));
    }

    #[test]
    fn zero_interpolation_is_rejected() {
        let f = Field::binary(3).unwrap();
        let z = LinearizedPoly::zero(&f);
        let q = InterpolationPolynomials::new(vec![z.clone(), z], 1, 1).unwrap();
        assert_eq!(recover_messages(&q, f.primitive_element(), 1), Err(Error::ZeroInterpolation));
    }
}
