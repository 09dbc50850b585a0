//! Property checks shared by the property suite and the acceptance harness.
//! Each returns a short summary on success and the failing case otherwise.

#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use rankcodes::galois::{BaseField, FieldArith};
use rankcodes::subspace::Subspace;
use rankcodes::{Field, FieldElement, LinearizedPoly};

/// Both GF(16) presentations: over GF(2) (m = 4) and over GF(4) (m = 2).
pub fn gf16_fields() -> Vec<Field> {
    vec![Field::new(2, 1, 4, None).unwrap(), Field::new(2, 2, 2, None).unwrap()]
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

fn poly(f: &Field, coeffs: &[u64]) -> LinearizedPoly {
    LinearizedPoly::new(f, coeffs.iter().map(|&c| f.element(c).unwrap()).collect())
}

fn elem(f: &Field, i: u64) -> FieldElement {
    f.element(i).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..16, 0..7)
}

/// Additivity, GF(q)-homogeneity and `(f ⊗ g)(a) = f(g(a))`.
pub fn linearized_identities(cases: u32) -> Result<String, String> {
    for f in gf16_fields() {
        let q = f.q();
        let fa = f.clone();
        runner(cases)
            .run(&(coeffs(), 0u64..16, 0u64..16), |(c, a, b)| {
                let p = poly(&fa, &c);
                let (a, b) = (elem(&fa, a), elem(&fa, b));
                prop_assert_eq!(p.eval(fa.add(a, b)), fa.add(p.eval(a), p.eval(b)));
                Ok(())
            })
            .map_err(|e| format!("additivity over GF({q}): {e}"))?;
        let fh = f.clone();
        runner(cases)
            .run(&(coeffs(), 0u64..q, 0u64..16), |(c, lambda, a)| {
                let p = poly(&fh, &c);
                let lambda = fh.embed(lambda as u32);
                let a = elem(&fh, a);
                prop_assert_eq!(p.eval(fh.mul(lambda, a)), fh.mul(lambda, p.eval(a)));
                Ok(())
            })
            .map_err(|e| format!("homogeneity over GF({q}): {e}"))?;
        let fc = f.clone();
        runner(cases)
            .run(&(coeffs(), coeffs(), 0u64..16), |(c1, c2, a)| {
                let (p, r) = (poly(&fc, &c1), poly(&fc, &c2));
                let a = elem(&fc, a);
                prop_assert_eq!(p.compose(&r).eval(a), p.eval(r.eval(a)));
                Ok(())
            })
            .map_err(|e| format!("composition over GF({q}): {e}"))?;
    }
    Ok(format!("{cases} cases x 3 identities x 2 presentations of GF(16)"))
}

/// Every subspace of GF(2)^4.
pub fn all_subspaces_gf2_4() -> Vec<Subspace> {
    let f = BaseField::new(2, 1).unwrap();
    let vectors: Vec<Vec<u32>> = (0u32..16).map(|v| (0..4).map(|i| (v >> i) & 1).collect()).collect();
    let mut found: BTreeMap<Vec<Vec<u32>>, Subspace> = BTreeMap::new();
    let zero = Subspace::zero(&f, 4);
    found.insert(zero.to_json().basis, zero);
    let mut frontier: Vec<Subspace> = found.values().cloned().collect();
    while let Some(s) = frontier.pop() {
        for v in &vectors {
            let t = s.sum(&Subspace::span(&f, 4, std::slice::from_ref(v)).unwrap()).unwrap();
            let key = t.to_json().basis;
            if let std::collections::btree_map::Entry::Vacant(slot) = found.entry(key) {
                slot.insert(t.clone());
                frontier.push(t);
            }
        }
    }
    found.into_values().collect()
}

fn check_axioms(a: &Subspace, b: &Subspace) -> Result<(), String> {
    let sum = a.sum(b).map_err(|e| e.to_string())?.dim();
    let cap = a.intersect(b).map_err(|e| e.to_string())?.dim();
    if sum + cap != a.dim() + b.dim() {
        return Err(format!("modular identity fails: {sum} + {cap} != {} + {}", a.dim(), b.dim()));
    }
    let (dab, dba) = (a.distance(b).unwrap(), b.distance(a).unwrap());
    if dab != dba {
        return Err("asymmetric distance".into());
    }
    if (dab == 0) != (a == b) {
        return Err("d(A, B) = 0 must hold exactly when A = B".into());
    }
    Ok(())
}

/// Metric axioms and `dim(A+B) + dim(A∩B) = dim A + dim B` over every pair
/// (and triangle inequality over every triple) of subspaces of GF(2)^4.
pub fn subspace_exhaustive_gf2_4() -> Result<String, String> {
    let all = all_subspaces_gf2_4();
    if all.len() != 67 {
        return Err(format!("expected 67 subspaces of GF(2)^4, found {}", all.len()));
    }
    let n = all.len();
    let mut dist = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            check_axioms(&all[i], &all[j])?;
            dist[i * n + j] = all[i].distance(&all[j]).unwrap();
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if dist[i * n + k] > dist[i * n + j] + dist[j * n + k] {
                    return Err(format!("triangle inequality fails on ({i}, {j}, {k})"));
                }
            }
        }
    }
    Ok(format!("{n} subspaces, {} pairs, {} triples", n * n, n * n * n))
}

fn subspace_strategy(ambient: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..2, ambient), 0..=ambient)
}

/// The same properties on random subspaces of GF(2)^8.
pub fn subspace_random_gf2_8(cases: u32) -> Result<String, String> {
    let f = BaseField::new(2, 1).unwrap();
    runner(cases)
        .run(&(subspace_strategy(8), subspace_strategy(8), subspace_strategy(8)), |(a, b, c)| {
            let a = Subspace::span(&f, 8, &a).unwrap();
            let b = Subspace::span(&f, 8, &b).unwrap();
            let c = Subspace::span(&f, 8, &c).unwrap();
            check_axioms(&a, &b).map_err(TestCaseError::fail)?;
            prop_assert!(a.distance(&c).unwrap() <= a.distance(&b).unwrap() + b.distance(&c).unwrap());
            Ok(())
        })
        .map_err(|e| format!("GF(2)^8: {e}"))?;
    Ok(format!("{cases} random triples in GF(2)^8"))
}
