#![allow(dead_code)]

use std::sync::Arc;

use nullkit::coeff::{FieldSpec, Scalar};
use nullkit::poly::{GridSpec, Monomial, Polynomial, Ring};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(field: FieldSpec, n: usize) -> Arc<Ring> {
    Ring::new(field, (1..=n).map(|i| format!("x{i}"))).unwrap()
}

pub fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

pub fn scalar(field: FieldSpec, v: i64) -> Scalar {
    Scalar::from_i64(field, v)
}

/// Small integers over ℚ, uniform residues over 𝔽_p.
pub fn rand_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field.modulus() {
        Some(p) => scalar(field, rng.gen_range(0..i64::from(p))),
        None => scalar(field, rng.gen_range(-9..=9)),
    }
}

pub fn rand_monomial(n: usize, max_deg: u32, rng: &mut ChaCha8Rng) -> Monomial {
    let d = rng.gen_range(0..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

pub fn rand_poly(ring: &Arc<Ring>, max_deg: u32, max_terms: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<_> =
        (0..k).map(|_| (rand_monomial(ring.nvars(), max_deg, rng), rand_scalar(ring.field(), rng))).collect();
    Polynomial::from_terms(ring, terms).unwrap()
}

/// `k` distinct values drawn from `pool`.
pub fn distinct(pool: &[i64], k: usize, rng: &mut ChaCha8Rng) -> Vec<i64> {
    let mut v: Vec<i64> = pool.choose_multiple(rng, k).copied().collect();
    v.sort();
    v
}

pub fn grid(field: FieldSpec, sets: &[Vec<i64>]) -> GridSpec {
    let refs: Vec<&[i64]> = sets.iter().map(Vec::as_slice).collect();
    GridSpec::from_i64(field, &refs).unwrap()
}

/// Every point of `𝔽_p^n`.
pub fn all_points(field: FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    let p = i64::from(field.modulus().expect("finite field"));
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|pt: Vec<Scalar>| {
                (0..p).map(move |a| {
                    let mut q = pt.clone();
                    q.push(scalar(field, a));
                    q
                })
            })
            .collect();
    }
    out
}
