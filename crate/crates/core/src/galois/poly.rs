//! Dense univariate polynomials over a [`FieldArith`], used for modulus
//! selection and irreducibility testing. Coefficients are stored low degree
//! first.

use super::arith::FieldArith;

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn trim<F: FieldArith>(f: &F, a: &mut Vec<F::Elem>) {
    while a.last().is_some_and(|&c| f.is_zero(c)) {
        a.pop();
    }
}

/// Remainder of `a` modulo a nonzero polynomial `m`.
pub(crate) fn rem<F: FieldArith>(f: &F, a: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
    let mut m = m.to_vec();
    trim(f, &mut m);
    let mut r = a.to_vec();
    trim(f, &mut r);
    let dm = m.len() - 1;
    let lead_inv = f.inv(m[dm]).expect("nonzero leading coefficient");
    while r.len() > dm {
        let top = r.len() - 1;
        let c = f.mul(r[top], lead_inv);
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, mi));
        }
        trim(f, &mut r);
    }
    r
}

pub(crate) fn mul<F: FieldArith>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if f.is_zero(ai) {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(ai, bj));
        }
    }
    trim(f, &mut out);
    out
}

pub(crate) fn mulmod<F: FieldArith>(f: &F, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
    rem(f, &mul(f, a, b), m)
}

fn powmod<F: FieldArith>(f: &F, a: &[F::Elem], mut exp: u64, m: &[F::Elem]) -> Vec<F::Elem> {
    let mut base = rem(f, a, m);
    let mut acc = rem(f, &[f.one()], m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        base = mulmod(f, &base, &base, m);
        exp >>= 1;
    }
    acc
}

fn gcd<F: FieldArith>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(f, &mut a);
    trim(f, &mut b);
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility over the field `f`: no factor of degree `<= deg/2`, i.e.
/// `gcd(X^{|f|^i} - X, poly) = 1` for `1 <= i <= deg/2`.
pub(crate) fn is_irreducible<F: FieldArith>(f: &F, poly: &[F::Elem]) -> bool {
    let mut p = poly.to_vec();
    trim(f, &mut p);
    if p.len() < 2 {
        return false;
    }
    let deg = p.len() - 1;
    let q = f.order();
    let x = vec![f.zero(), f.one()];
    let mut h = rem(f, &x, &p);
    for _ in 1..=deg / 2 {
        h = powmod(f, &h, q, &p);
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), f.zero());
        diff[1] = f.sub(diff[1], f.one());
        let g = gcd(f, &diff, &p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Digits of `index` in base `radix`, least significant first.
pub(crate) fn digits(mut index: u64, radix: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(index % radix);
        index /= radix;
    }
    out
}

pub(crate) fn undigits(digits: impl DoubleEndedIterator<Item = u64>, radix: u64) -> u64 {
    digits.rev().fold(0, |acc, d| acc * radix + d)
}

/// First monic irreducible polynomial of the given degree, enumerating the
/// lower coefficients by increasing index (constant term least significant).
pub(crate) fn first_irreducible<F: FieldArith>(f: &F, degree: usize) -> Vec<F::Elem> {
    let q = f.order();
    let count = q.pow(degree as u32);
    for idx in 0..count {
        let mut poly: Vec<F::Elem> = digits(idx, q, degree).into_iter().map(|d| f.element_at(d)).collect();
        poly.push(f.one());
        if is_irreducible(f, &poly) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
