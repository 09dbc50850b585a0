//! Corruption models: the operator channel on subspaces and additive rank-t
//! errors on folded codewords.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::folded::FoldedCodeword;
use crate::galois::{BaseField, Field, Matrix};
use crate::subspace::{random_matrix, Subspace};

/// Retry budget for rejection-sampled full-rank factors.
const MAX_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChannelMode {
    Subspace,
    Rank,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChannelSpec {
    pub mode: ChannelMode,
    #[serde(default)]
    pub rho: usize,
    pub t: usize,
    pub seed: u64,
}

/// Keeps a random `(dim V - ρ)`-subspace of `v` and adjoins a random
/// `t`-dimensional `E` with `E ∩ V = {0}`.
pub fn operator_channel<R: Rng + ?Sized>(v: &Subspace, rho: usize, t: usize, rng: &mut R) -> Result<Subspace> {
    if rho > v.dim() {
        return Err(Error::DimTooLarge { requested: rho, available: v.dim() });
    }
    let kept = v.random_subspace(v.dim() - rho, rng)?;
    let errors = v.random_complement(t, rng)?;
    kept.sum(&errors)
}

/// `Y = X + A·B` with `A` a full-rank `g × t` and `B` a full-rank `t × hm`
/// matrix over GF(q), so `rank(X - Y) = t`.
pub fn rank_error_channel<R: Rng + ?Sized>(
    field: &Field,
    x: &FoldedCodeword,
    t: usize,
    rng: &mut R,
) -> Result<FoldedCodeword> {
    let cols = x.h() * field.m();
    let limit = x.g().min(cols);
    if t > limit {
        return Err(Error::RankTooLarge { requested: t, available: limit });
    }
    if t == 0 {
        return Ok(x.clone());
    }
    let base = field.base();
    let a = full_rank_matrix(base, x.g(), t, rng)?;
    let b = full_rank_matrix(base, t, cols, rng)?;
    let e = FoldedCodeword::from_expanded(field, x.h(), &a.mul(base, &b))?;
    x.add(field, &e)
}

fn full_rank_matrix<R: Rng + ?Sized>(f: &BaseField, rows: usize, cols: usize, rng: &mut R) -> Result<Matrix<u32>> {
    let want = rows.min(cols);
    for _ in 0..MAX_ATTEMPTS {
        let m = random_matrix(f, rows, cols, rng);
        if m.rank(f) == want {
            return Ok(m);
        }
    }
    Err(Error::RetryLimit(MAX_ATTEMPTS))
}

/// Seed for trial `trial` of cell `(rho, t)` derived from a master seed
/// (splitmix64 finalizer over the mixed inputs).
pub fn trial_seed(master: u64, rho: usize, t: usize, trial: usize) -> u64 {
    let mut z = master;
    for v in [rho as u64, t as u64, trial as u64] {
        z = splitmix(z ^ v.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    }
    z
}

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::folded::{rank_distance, FoldedGabidulin};
    use crate::message::Message;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn operator_channel_accounting() {
        let f = BaseField::new(2, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let v = Subspace::full(&f, 10).random_subspace(4, &mut rng).unwrap();
        assert_eq!(operator_channel(&v, 0, 0, &mut rng).unwrap(), v);
        for rho in 0..=4 {
            for t in 0..=6 {
                let u = operator_channel(&v, rho, t, &mut rng).unwrap();
                assert_eq!(u.dim(), 4 - rho + t);
                assert_eq!(u.intersect(&v).unwrap().dim(), 4 - rho);
            }
        }
        assert!(operator_channel(&v, 5, 0, &mut rng).is_err());
        assert!(operator_channel(&v, 0, 7, &mut rng).is_err());
    }

    #[test]
    fn operator_channel_is_deterministic() {
        let f = BaseField::new(3, 1).unwrap();
        let v = Subspace::full(&f, 6).random_subspace(3, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        let a = operator_channel(&v, 1, 2, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = operator_channel(&v, 1, 2, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rank_errors_have_exact_rank() {
        let f = Field::binary(8).unwrap();
        let code = FoldedGabidulin::new(&f, 8, 2, 4, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = code.encode(&Message::random(&f, 2, &mut rng)).unwrap();
        assert_eq!(rank_error_channel(&f, &x, 0, &mut rng).unwrap(), x);
        for t in 0..=2 {
            for _ in 0..20 {
                let y = rank_error_channel(&f, &x, t, &mut rng).unwrap();
                assert_eq!(rank_distance(&f, &x, &y), Ok(t));
            }
        }
        assert!(matches!(rank_error_channel(&f, &x, 3, &mut rng), Err(Error::RankTooLarge { .. })));
    }

    #[test]
    fn spec_json() {
        let s = ChannelSpec { mode: ChannelMode::Subspace, rho: 1, t: 2, seed: 7 };
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"mode":"subspace","rho":1,"t":2,"seed":7}"#);
        assert_eq!(serde_json::from_str::<ChannelSpec>(&json).unwrap(), s);
    }

    #[test]
    fn trial_seeds_differ() {
        let seeds: std::collections::HashSet<_> =
            (0..3).flat_map(|r| (0..3).flat_map(move |t| (0..10).map(move |i| trial_seed(1, r, t, i)))).collect();
        assert_eq!(seeds.len(), 90);
        assert_eq!(trial_seed(5, 1, 2, 3), trial_seed(5, 1, 2, 3));
    }
}
