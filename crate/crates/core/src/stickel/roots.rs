//! Roots of univariate polynomials inside the base field.
//!
//! Over 𝔽_p: exhaustive evaluation for small p, otherwise `gcd(P, Z^p − Z)`
//! followed by Cantor–Zassenhaus splitting. Over ℚ: roots of the squarefree
//! part modulo a good prime ℓ, Hensel-lifted far enough that rational
//! reconstruction recovers every root `u/v` with `|u|, v` bounded by the
//! extreme coefficients, then verified exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{is_prime, FieldSpec, Scalar};
use crate::upoly::UPoly;

/// Moduli below this are scanned exhaustively.
pub const EXHAUSTIVE_LIMIT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub value: Scalar,
    pub multiplicity: u32,
}

/// Distinct roots in `K` with multiplicities, ascending by value. `p ≠ 0`.
pub(crate) fn roots_with_multiplicity(p: &UPoly) -> Vec<Root> {
    let distinct = match p.field() {
        FieldSpec::Rationals => rational_roots(p),
        FieldSpec::Prime(_) => fp_roots(p),
    };
    let mut out: Vec<Root> = distinct
        .into_iter()
        .map(|value| {
            let lin = UPoly::linear_root(&value);
            let mut rest = p.clone();
            let mut multiplicity = 0;
            loop {
                let (q, r) = rest.divrem(&lin);
                if !r.is_zero() {
                    break;
                }
                multiplicity += 1;
                rest = q;
            }
            Root { value, multiplicity }
        })
        .collect();
    out.sort_by(|a, b| a.value.cmp(&b.value));
    out
}

fn fp_roots(p: &UPoly) -> Vec<Scalar> {
    let field = p.field();
    let modulus = field.modulus().expect("prime field");
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    if modulus < EXHAUSTIVE_LIMIT {
        return (0..i64::from(modulus)).map(|a| Scalar::from_i64(field, a)).filter(|a| p.eval(a).is_zero()).collect();
    }
    let f = p.monic();
    let z = UPoly::x(field);
    let frob = z.powmod(u64::from(modulus), &f).sub(&z);
    let g = f.gcd(&frob);
    let mut rng = ChaCha8Rng::seed_from_u64(u64::from(modulus));
    let mut out = Vec::new();
    split_linear(&g, u64::from(modulus), &mut rng, &mut out);
    out
}

/// `g` is monic and a product of distinct linear factors; p is odd.
fn split_linear(g: &UPoly, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Scalar>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(-&g.coeff(0)),
        Some(_) => loop {
            let field = g.field();
            let a = Scalar::from_i64(field, rng.gen_range(0..p as i64));
            let shifted = UPoly::x(field).add(&UPoly::constant(a));
            let h = shifted.powmod((p - 1) / 2, g).sub(&UPoly::one(field));
            let d = g.gcd(&h);
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && dd < g.degree().expect("nonzero") {
                let (rest, _) = g.divrem(&d);
                split_linear(&d, p, rng, out);
                split_linear(&rest.monic(), p, rng, out);
                return;
            }
        },
    }
}

/// Scales a rational polynomial to a primitive integer one.
fn primitive_integer(p: &UPoly) -> Vec<BigInt> {
    let qs: Vec<&BigRational> = p.coeffs().iter().map(|c| c.as_rational().expect("rational")).collect();
    let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

fn rational_roots(p: &UPoly) -> Vec<Scalar> {
    let q = FieldSpec::Rationals;
    let mut out = Vec::new();
    let shift = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        out.push(Scalar::zero(q));
    }
    let rest = UPoly::new(q, p.coeffs()[shift..].to_vec());
    if rest.degree().unwrap_or(0) == 0 {
        return out;
    }
    let (sqfree, _) = rest.divrem(&rest.gcd(&rest.derivative()));
    let s = primitive_integer(&sqfree);
    if s.len() <= 1 {
        return out;
    }
    let lead = s.last().expect("nonempty").abs();
    let bound = s[0].abs().max(lead.clone());
    let target: BigInt = &bound * &bound * 2;
    let ell = good_prime(&s);
    let fl = FieldSpec::prime(ell).expect("prime");
    let reduced = UPoly::new(fl, s.iter().map(|c| Scalar::from_bigint(fl, c)).collect());
    let ds: Vec<BigInt> = s.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();
    for r0 in fp_roots(&reduced) {
        let mut modulus = BigInt::from(ell);
        let mut r = BigInt::from(r0.residue().expect("residue"));
        while modulus <= target {
            modulus = &modulus * &modulus;
            let fv = horner(&s, &r, &modulus);
            let dv = horner(&ds, &r, &modulus);
            let inv = mod_inverse(&dv, &modulus).expect("simple root mod ell");
            r = (r - fv * inv).mod_floor(&modulus);
        }
        if let Some((u, v)) = reconstruct(&r, &modulus, &bound) {
            let cand = BigRational::new(u, v);
            if eval_rational(&s, &cand).is_zero() {
                out.push(Scalar::from_rational(q, &cand).expect("nonzero denominator"));
            }
        }
    }
    out
}

/// A prime ℓ not dividing the lead and keeping `s` squarefree modulo ℓ.
fn good_prime(s: &[BigInt]) -> u64 {
    let mut ell = 1009u64;
    loop {
        if is_prime(ell) {
            let f = FieldSpec::prime(ell).expect("prime");
            let red = UPoly::new(f, s.iter().map(|c| Scalar::from_bigint(f, c)).collect());
            if red.degree() == Some(s.len() - 1) && red.gcd(&red.derivative()).degree() == Some(0) {
                return ell;
            }
        }
        ell += 2;
    }
}

fn horner(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn eval_rational(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Finds `u/v ≡ r (mod m)` with `|u| ≤ bound` and `0 < v ≤ bound`.
fn reconstruct(r: &BigInt, m: &BigInt, bound: &BigInt) -> Option<(BigInt, BigInt)> {
    let (mut r0, mut r1) = (m.clone(), r.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1.abs() > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > bound {
        return None;
    }
    let (u, v) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    u.gcd(&v).is_one().then_some((u, v))
}
