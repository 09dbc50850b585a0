//! The coefficient field GF(q), q = p^e.
//!
//! Elements are `u32` indices in `0..q`. For `e = 1` the index is the residue
//! mod p. For `e > 1` the index packs the base-p coordinates (constant term
//! least significant) with respect to the lex-first irreducible polynomial of
//! degree `e` over GF(p), and multiplication goes through log/antilog tables.

use std::fmt;
use std::sync::Arc;

use super::arith::FieldArith;
use super::poly;
use crate::error::{Error, Result};

/// GF(p) for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !poly::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl FieldArith for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p) as u32
    }
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            (self.p - a as u64) as u32
        }
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p) as u32
    }
    fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let qt = r0 / r1;
            (r0, r1) = (r1, r0 - qt * r1);
            (t0, t1) = (t1, t0 - qt * t1);
        }
        Some(t0.rem_euclid(self.p as i128) as u32)
    }
    fn order(&self) -> u64 {
        self.p
    }
    fn element_at(&self, index: u64) -> u32 {
        index as u32
    }
    fn index_of(&self, a: u32) -> u64 {
        a as u64
    }
}

struct BaseInner {
    prime: PrimeField,
    e: usize,
    q: u64,
    /// Defining polynomial over GF(p), low degree first; empty when `e = 1`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// GF(q) with q = p^e; cheap to clone.
#[derive(Clone)]
pub struct BaseField(Arc<BaseInner>);

impl BaseField {
    /// Cap on q when `e > 1` (table mode).
    pub const TABLE_CAP: u64 = 1 << 16;

    pub fn new(p: u64, e: usize) -> Result<Self> {
        let prime = PrimeField::new(p)?;
        if e == 0 {
            return Err(Error::BadParams("base degree e must be >= 1".into()));
        }
        if e == 1 {
            if p > u32::MAX as u64 {
                return Err(Error::SizeCap { q: p, m: 1 });
            }
            return Ok(BaseField(Arc::new(BaseInner {
                prime,
                e,
                q: p,
                modulus: Vec::new(),
                exp: Vec::new(),
                log: Vec::new(),
            })));
        }
        let q = p.checked_pow(e as u32).filter(|&q| q <= Self::TABLE_CAP).ok_or(Error::BaseFieldCap { p, e })?;
        let modulus = poly::first_irreducible(&prime, e);
        let slow_mul = |a: u64, b: u64| -> u64 {
            let da: Vec<u32> = poly::digits(a, p, e).into_iter().map(|d| d as u32).collect();
            let db: Vec<u32> = poly::digits(b, p, e).into_iter().map(|d| d as u32).collect();
            let r = poly::mulmod(&prime, &da, &db, &modulus);
            poly::undigits(r.into_iter().map(u64::from), p)
        };
        let factors = poly::prime_factors(q - 1);
        let slow_pow = |a: u64, mut k: u64| {
            let (mut base, mut acc) = (a, 1u64);
            while k > 0 {
                if k & 1 == 1 {
                    acc = slow_mul(acc, base);
                }
                base = slow_mul(base, base);
                k >>= 1;
            }
            acc
        };
        let generator = (1..q)
            .find(|&g| factors.iter().all(|&r| slow_pow(g, (q - 1) / r) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u64;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur as u32;
            log[cur as usize] = i as u32;
            cur = slow_mul(cur, generator);
        }
        Ok(BaseField(Arc::new(BaseInner { prime, e, q, modulus, exp, log })))
    }

    pub fn p(&self) -> u64 {
        self.0.prime.p
    }

    pub fn e(&self) -> usize {
        self.0.e
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Defining polynomial of GF(q) over GF(p) (empty for prime q).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn contains(&self, a: u32) -> bool {
        (a as u64) < self.0.q
    }
}

impl PartialEq for BaseField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.prime == other.0.prime && self.0.e == other.0.e)
    }
}

impl Eq for BaseField {}

impl fmt::Debug for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p(), self.e())
    }
}

impl FieldArith for BaseField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if inner.e == 1 {
            return inner.prime.add(a, b);
        }
        let p = inner.prime.p;
        if p == 2 {
            return a ^ b;
        }
        let da = poly::digits(a as u64, p, inner.e);
        let db = poly::digits(b as u64, p, inner.e);
        poly::undigits(da.iter().zip(&db).map(|(x, y)| (x + y) % p), p) as u32
    }
    fn neg(&self, a: u32) -> u32 {
        let inner = &*self.0;
        if inner.e == 1 {
            return inner.prime.neg(a);
        }
        let p = inner.prime.p;
        if p == 2 {
            return a;
        }
        let da = poly::digits(a as u64, p, inner.e);
        poly::undigits(da.iter().map(|x| (p - x) % p), p) as u32
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if inner.e == 1 {
            return inner.prime.mul(a, b);
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let n = inner.q - 1;
        let l = (inner.log[a as usize] as u64 + inner.log[b as usize] as u64) % n;
        inner.exp[l as usize]
    }
    fn inv(&self, a: u32) -> Option<u32> {
        let inner = &*self.0;
        if inner.e == 1 {
            return inner.prime.inv(a);
        }
        if a == 0 {
            return None;
        }
        let n = inner.q - 1;
        let l = (n - inner.log[a as usize] as u64) % n;
        Some(inner.exp[l as usize])
    }
    fn order(&self) -> u64 {
        self.0.q
    }
    fn element_at(&self, index: u64) -> u32 {
        index as u32
    }
    fn index_of(&self, a: u32) -> u64 {
        a as u64
    }
}
