use std::fmt::Debug;

/// Arithmetic of a finite field whose elements are small `Copy` values.
///
/// Both the coefficient field GF(q) and the extension GF(q^m) implement this,
/// so the dense linear algebra in [`super::matrix`] runs over either.
pub trait FieldArith {
    type Elem: Copy + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;
    /// Number of elements.
    fn order(&self) -> u64;
    /// The element with the given canonical index in `0..order()`.
    fn element_at(&self, index: u64) -> Self::Elem;
    fn index_of(&self, a: Self::Elem) -> u64;

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn pow(&self, a: Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}
