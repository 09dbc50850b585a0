//! Linearized polynomials `sum_i a_i X^{q^i}` over GF(q^m) under addition and
//! symbolic composition.

use std::fmt;

use crate::galois::{Field, FieldArith, FieldElement};

/// A linearized polynomial in canonical form: the last stored coefficient is
/// nonzero, and the zero polynomial stores no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearizedPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl LinearizedPoly {
    /// `coeffs[i]` multiplies `X^{q^i}`.
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> Self {
        let mut p = LinearizedPoly { field: field.clone(), coeffs };
        p.canonicalize();
        p
    }

    pub fn zero(field: &Field) -> Self {
        LinearizedPoly { field: field.clone(), coeffs: Vec::new() }
    }

    /// `c X^{q^i}`.
    pub fn monomial(field: &Field, i: usize, c: FieldElement) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; i + 1];
        coeffs[i] = c;
        LinearizedPoly::new(field, coeffs)
    }

    /// The identity map `X`.
    pub fn identity(field: &Field) -> Self {
        LinearizedPoly::monomial(field, 0, FieldElement::ONE)
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `X^{q^i}` (zero past the end).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// q-degree, `-1` for the zero polynomial.
    pub fn q_degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        let mut acc = FieldElement::ZERO;
        let mut xi = x;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                xi = f.frobenius(xi, 1);
            }
            acc = f.add(acc, f.mul(a, xi));
        }
        acc
    }

    pub fn add(&self, other: &LinearizedPoly) -> LinearizedPoly {
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        LinearizedPoly::new(f, coeffs)
    }

    pub fn neg(&self) -> LinearizedPoly {
        let f = &self.field;
        LinearizedPoly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &LinearizedPoly) -> LinearizedPoly {
        self.add(&other.neg())
    }

    /// `c * f(X)`.
    pub fn scale(&self, c: FieldElement) -> LinearizedPoly {
        let f = &self.field;
        LinearizedPoly::new(f, self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// `f(cX)`, i.e. coefficients `a_i c^{q^i}`.
    pub fn precompose_scalar(&self, c: FieldElement) -> LinearizedPoly {
        let f = &self.field;
        let coeffs = self.coeffs.iter().enumerate().map(|(i, &a)| f.mul(a, f.frobenius(c, i))).collect();
        LinearizedPoly::new(f, coeffs)
    }

    /// `self ⊗ other = self(other(X))`, with
    /// `(f ⊗ g)_k = sum_{i+j=k} f_i g_j^{q^i}`.
    pub fn compose(&self, other: &LinearizedPoly) -> LinearizedPoly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return LinearizedPoly::zero(f);
        }
        let mut coeffs = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, f.frobenius(b, i)));
            }
        }
        LinearizedPoly::new(f, coeffs)
    }
}

impl fmt::Debug for LinearizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `a0 X^[0] + a1 X^[1] + ...` with coefficients printed as coordinate
/// vectors; zero terms are skipped.
impl fmt::Display for LinearizedPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let coords = self.field.coords(c);
            write!(out, "{coords:?} X^[{i}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Field {
        Field::new(2, 1, 2, Some(vec![1, 1, 1])).unwrap()
    }

    #[test]
    fn frobenius_monomial_on_gf4() {
        let f = gf4();
        let w = f.basis_element(1);
        let p = LinearizedPoly::monomial(&f, 1, FieldElement::ONE);
        assert_eq!(p.eval(w), f.add(w, FieldElement::ONE));
        assert_eq!(p.eval(FieldElement::ZERO), FieldElement::ZERO);
    }

    #[test]
    fn two_term_cancellation_on_gf4() {
        // ωX + X^[1] at ω: ω² + ω² = 0.
        let f = gf4();
        let w = f.basis_element(1);
        let p = LinearizedPoly::new(&f, vec![w, FieldElement::ONE]);
        assert_eq!(p.eval(w), FieldElement::ZERO);
    }

    #[test]
    fn q_degree_and_canonical_form() {
        let f = Field::binary(4).unwrap();
        assert_eq!(LinearizedPoly::monomial(&f, 3, FieldElement::ONE).q_degree(), 3);
        assert_eq!(LinearizedPoly::zero(&f).q_degree(), -1);
        let p = LinearizedPoly::new(&f, vec![FieldElement::ONE, FieldElement::ZERO]);
        assert_eq!(p.coeffs().len(), 1);
        assert!(p.add(&p.neg()).is_zero());
        assert_eq!(p.add(&LinearizedPoly::zero(&f)), p);
    }

    #[test]
    fn monomial_composition_rule() {
        let f = Field::binary(4).unwrap();
        let c = f.element(6).unwrap();
        let frob = LinearizedPoly::monomial(&f, 1, FieldElement::ONE);
        let cx = LinearizedPoly::monomial(&f, 0, c);
        assert_eq!(frob.compose(&cx), LinearizedPoly::monomial(&f, 1, f.frobenius(c, 1)));
        assert_eq!(frob.compose(&LinearizedPoly::identity(&f)), frob);
        // X^[1] ⊗ cX ≠ cX ⊗ X^[1] for c outside GF(2).
        assert_ne!(frob.compose(&cx), cx.compose(&frob));
    }

    #[test]
    fn display_form() {
        let f = gf4();
        let p = LinearizedPoly::new(&f, vec![FieldElement::ONE, FieldElement::ZERO, f.basis_element(1)]);
        assert_eq!(p.to_string(), "[1, 0] X^[0] + [0, 1] X^[2]");
        assert_eq!(LinearizedPoly::zero(&f).to_string(), "0");
    }
}
