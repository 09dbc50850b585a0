//! The extension field GF(q^m) in a polynomial basis over GF(q).
//!
//! An element is stored as the integer `sum_i c_i q^i` of its coordinate
//! vector `(c_0, .., c_{m-1})` with respect to `1, x, .., x^{m-1}`, where `x`
//! is a root of the field's modulus. The integer order of these indices is the
//! "lex order" used for every deterministic choice (modulus, primitive
//! element).

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::arith::FieldArith;
use super::base::BaseField;
use super::poly;
use crate::error::{Error, Result};

/// An element of GF(q^m), identified by its coordinate index.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// JSON descriptor `{p, e, m, modulus}`; `modulus` lists `c_0..c_m` as
/// GF(q) indices (plain residues when `e = 1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    #[serde(default = "one")]
    pub e: usize,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> usize {
    1
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct FieldInner {
    base: BaseField,
    m: usize,
    size: u64,
    modulus: Vec<u32>,
    /// Modulus as a bit mask, for the q = 2 fast path.
    modulus_bits: u64,
    tables: Option<Tables>,
    primitive: OnceLock<FieldElement>,
}

/// GF(q^m); cheap to clone, immutable after construction.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl Field {
    /// Largest supported field size (elements are `u32` indices).
    pub const SIZE_CAP: u64 = 1 << 32;
    /// Log/antilog tables are built up to this size.
    pub const TABLE_CAP: u64 = 1 << 16;

    /// Builds GF((p^e)^m). Without an explicit modulus the first monic
    /// irreducible polynomial of degree `m` in lex order is used.
    pub fn new(p: u64, e: usize, m: usize, modulus: Option<Vec<u32>>) -> Result<Field> {
        let base = BaseField::new(p, e)?;
        if m == 0 {
            return Err(Error::BadParams("extension degree m must be >= 1".into()));
        }
        let q = base.q();
        let size = q.checked_pow(m as u32).filter(|&s| s <= Self::SIZE_CAP).ok_or(Error::SizeCap { q, m })?;
        let modulus = match modulus {
            Some(c) => {
                if c.len() != m + 1 {
                    return Err(Error::BadModulus(format!("expected {} coefficients, got {}", m + 1, c.len())));
                }
                if let Some(&bad) = c.iter().find(|&&x| !base.contains(x)) {
                    return Err(Error::BadModulus(format!("coefficient {bad} is not in GF({q})")));
                }
                if c[m] != 1 {
                    return Err(Error::BadModulus("modulus must be monic".into()));
                }
                if !poly::is_irreducible(&base, &c) {
                    return Err(Error::ReducibleModulus { q, degree: m });
                }
                c
            }
            None => poly::first_irreducible(&base, m),
        };
        let modulus_bits =
            if q == 2 { modulus.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i)) } else { 0 };
        let mut inner = FieldInner { base, m, size, modulus, modulus_bits, tables: None, primitive: OnceLock::new() };
        if size <= Self::TABLE_CAP {
            let field = Field(Arc::new(inner));
            let g = field.search_primitive();
            let mut exp = vec![0u32; (size - 1) as usize];
            let mut log = vec![0u32; size as usize];
            let mut cur = FieldElement::ONE;
            for (i, slot) in exp.iter_mut().enumerate() {
                *slot = cur.0;
                log[cur.0 as usize] = i as u32;
                cur = field.slow_mul(cur, g);
            }
            inner = Arc::try_unwrap(field.0).ok().expect("sole owner");
            inner.tables = Some(Tables { exp, log });
            let _ = inner.primitive.set(g);
        }
        Ok(Field(Arc::new(inner)))
    }

    /// GF(2^m) with the default modulus.
    pub fn binary(m: usize) -> Result<Field> {
        Field::new(2, 1, m, None)
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Field> {
        Field::new(d.p, d.e, d.m, d.modulus.clone())
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor { p: self.p(), e: self.e(), m: self.m(), modulus: Some(self.0.modulus.clone()) }
    }

    pub fn base(&self) -> &BaseField {
        &self.0.base
    }

    pub fn p(&self) -> u64 {
        self.0.base.p()
    }

    pub fn e(&self) -> usize {
        self.0.base.e()
    }

    /// Size of the coefficient field GF(q).
    pub fn q(&self) -> u64 {
        self.0.base.q()
    }

    pub fn m(&self) -> usize {
        self.0.m
    }

    /// q^m.
    pub fn size(&self) -> u64 {
        self.0.size
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn element(&self, index: u64) -> Result<FieldElement> {
        if index >= self.0.size {
            return Err(Error::NotAnElement { value: index, size: self.0.size });
        }
        Ok(FieldElement(index as u32))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.size).map(|i| FieldElement(i as u32))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        FieldElement(rng.gen_range(0..self.0.size) as u32)
    }

    /// Coordinates over GF(q) in the polynomial basis.
    pub fn coords(&self, a: FieldElement) -> Vec<u32> {
        poly::digits(a.0 as u64, self.q(), self.m()).into_iter().map(|d| d as u32).collect()
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FieldElement> {
        if coords.len() != self.m() {
            return Err(Error::ShapeMismatch(format!("expected {} coordinates, got {}", self.m(), coords.len())));
        }
        if let Some(&bad) = coords.iter().find(|&&c| !self.base().contains(c)) {
            return Err(Error::NotAnElement { value: bad as u64, size: self.q() });
        }
        Ok(self.pack(coords.iter().map(|&c| c as u64)))
    }

    fn pack(&self, coords: impl DoubleEndedIterator<Item = u64>) -> FieldElement {
        FieldElement(poly::undigits(coords, self.q()) as u32)
    }

    /// The GF(q) scalar `c` viewed as a constant of GF(q^m).
    pub fn embed(&self, c: u32) -> FieldElement {
        debug_assert!(self.base().contains(c));
        FieldElement(c)
    }

    /// x^j, the j-th polynomial basis vector.
    pub fn basis_element(&self, j: usize) -> FieldElement {
        assert!(j < self.m(), "basis index out of range");
        FieldElement(self.q().pow(j as u32) as u32)
    }

    /// a^{q^i}.
    pub fn frobenius(&self, a: FieldElement, i: usize) -> FieldElement {
        let i = i % self.m();
        if i == 0 || a.0 <= 1 {
            return a;
        }
        if let Some(t) = &self.0.tables {
            let n = self.0.size - 1;
            let qi = (self.q() as u128).pow(i as u32) % n as u128;
            let l = (t.log[a.0 as usize] as u128 * qi) % n as u128;
            return FieldElement(t.exp[l as usize]);
        }
        let mut x = a;
        for _ in 0..i {
            x = self.pow(x, self.q());
        }
        x
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.0.size - 1;
        for r in poly::prime_factors(ord) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == FieldElement::ONE {
                ord /= r;
            }
        }
        Ok(ord)
    }

    pub fn is_primitive(&self, a: FieldElement) -> bool {
        self.multiplicative_order(a).is_ok_and(|o| o == self.0.size - 1)
    }

    /// The lex-smallest element of multiplicative order q^m - 1.
    pub fn primitive_element(&self) -> FieldElement {
        *self.0.primitive.get_or_init(|| self.search_primitive())
    }

    fn search_primitive(&self) -> FieldElement {
        let n = self.0.size - 1;
        let factors = poly::prime_factors(n);
        (1..self.0.size)
            .map(|i| FieldElement(i as u32))
            .find(|&g| factors.iter().all(|&r| self.slow_pow(g, n / r) != FieldElement::ONE))
            .expect("multiplicative group is cyclic")
    }

    /// True iff `a, a^q, .., a^{q^{m-1}}` are pairwise distinct, i.e. `a`
    /// lies in no proper subfield.
    pub fn generates_full_field(&self, a: FieldElement) -> bool {
        (1..self.m()).all(|i| self.frobenius(a, i) != a)
    }

    fn slow_pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let (mut base, mut acc) = (a, FieldElement::ONE);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn slow_mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let inner = &*self.0;
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        if inner.base.q() == 2 {
            // Carry-less product then reduction by the modulus.
            let (a, b) = (a.0 as u64, b.0 as u64);
            let mut prod: u128 = 0;
            for i in 0..32 {
                if (b >> i) & 1 == 1 {
                    prod ^= (a as u128) << i;
                }
            }
            let m = inner.m;
            let modulus = inner.modulus_bits as u128;
            for bit in (m..2 * m).rev() {
                if (prod >> bit) & 1 == 1 {
                    prod ^= modulus << (bit - m);
                }
            }
            return FieldElement(prod as u32);
        }
        let base = &inner.base;
        let to_poly = |x: FieldElement| -> Vec<u32> { self.coords(x) };
        let r = poly::mulmod(base, &to_poly(a), &to_poly(b), &inner.modulus);
        self.pack(r.into_iter().map(u64::from))
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.base == other.0.base && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.q(), self.m(), self.0.modulus)
    }
}

impl FieldArith for Field {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }
    fn one(&self) -> FieldElement {
        FieldElement::ONE
    }
    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let base = &self.0.base;
        if base.q() == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let q = base.q();
        let da = poly::digits(a.0 as u64, q, self.0.m);
        let db = poly::digits(b.0 as u64, q, self.0.m);
        self.pack(da.iter().zip(&db).map(|(&x, &y)| base.add(x as u32, y as u32) as u64))
    }
    fn neg(&self, a: FieldElement) -> FieldElement {
        let base = &self.0.base;
        if base.p() == 2 {
            return a;
        }
        let da = poly::digits(a.0 as u64, base.q(), self.0.m);
        self.pack(da.iter().map(|&x| base.neg(x as u32) as u64))
    }
    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.0.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    return FieldElement::ZERO;
                }
                let n = self.0.size - 1;
                let l = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % n;
                FieldElement(t.exp[l as usize])
            }
            None => self.slow_mul(a, b),
        }
    }
    fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return None;
        }
        match &self.0.tables {
            Some(t) => {
                let n = self.0.size - 1;
                let l = (n - t.log[a.0 as usize] as u64) % n;
                Some(FieldElement(t.exp[l as usize]))
            }
            None => Some(self.slow_pow(a, self.0.size - 2)),
        }
    }
    fn order(&self) -> u64 {
        self.0.size
    }
    fn element_at(&self, index: u64) -> FieldElement {
        FieldElement(index as u32)
    }
    fn index_of(&self, a: FieldElement) -> u64 {
        a.0 as u64
    }
}

impl Field {
    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }
}
