mod common;

use std::sync::Arc;

use common::*;
use nullkit::coeff::{FieldSpec, Scalar};
use nullkit::graded::{
    dim_mult, hilbert_samuel, hilbert_samuel_polynomial, odd_system_solve, series_monomial_quotient,
    series_quot_regular, series_shift, GradedSeries, OddConfig,
};
use nullkit::ideal::{buchberger, default_order, finiteness_check, quotient_basis, Finiteness};
use nullkit::parse::{format_poly, parse_poly, PolyJson};
use nullkit::poly::{grid_reduce, resultant, tilt_axes, Degree, GridSpec, Monomial, Polynomial, Ring, TiltMode};
use nullkit::realrad::{verify_real_radical_cert, RealRadicalCertificate};
use nullkit::stickel::{solve_points, QuotientAlgebra};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn field_of(prime: bool) -> FieldSpec {
    if prime {
        fp(101)
    } else {
        FieldSpec::Rationals
    }
}

fn rand_grid(field: FieldSpec, n: usize, max_size: usize, rng: &mut ChaCha8Rng) -> GridSpec {
    let pool: Vec<i64> = match field.modulus() {
        Some(p) => (0..i64::from(p)).collect(),
        None => (-12..=12).collect(),
    };
    let sets: Vec<Vec<i64>> = (0..n).map(|_| distinct(&pool, rng.gen_range(1..=max_size), rng)).collect();
    grid(field, &sets)
}

fn rand_point(field: FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    (0..n).map(|_| rand_scalar(field, rng)).collect()
}

/// Random monic polynomial of degree `deg` in `x_var` alone.
fn univariate(ring: &Arc<Ring>, var: usize, deg: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let mut f = Polynomial::monomial(ring, Monomial::var_power(ring.nvars(), var, deg), Scalar::one(ring.field()));
    for k in 0..deg {
        let c = rand_scalar(ring.field(), rng);
        f = &f + &Polynomial::monomial(ring, Monomial::var_power(ring.nvars(), var, k), c);
    }
    f
}

// coeff

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn inverse_law(num in -10_000i64..10_000, den in 1i64..10_000, prime in any::<bool>()) {
        let field = field_of(prime);
        let a = Scalar::from_ratio(field, &BigInt::from(num), &BigInt::from(den));
        prop_assume!(a.is_ok());
        let a = a.unwrap();
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn canonical_representatives(num in any::<i64>(), den in any::<i64>(), p in prop::sample::select(vec![2u64, 3, 101, 65_521])) {
        prop_assume!(den != 0);
        let q = Scalar::from_ratio(FieldSpec::Rationals, &BigInt::from(num), &BigInt::from(den)).unwrap();
        let r = q.as_rational().unwrap();
        prop_assert!(r.denom().is_positive());
        prop_assert!(r.numer().abs().gcd(r.denom()).is_one());
        let x = Scalar::from_i64(fp(p), num);
        prop_assert!(u64::from(x.residue().unwrap()) < p);
    }

    #[test]
    fn prime_field_matches_integers(a in any::<i32>(), b in any::<i32>(), c in any::<i32>(), p in prop::sample::select(vec![2u64, 7, 101, 10_007, 65_521])) {
        let f = fp(p);
        let (a, b, c) = (i64::from(a), i64::from(b), i64::from(c));
        let lhs = &(&Scalar::from_i64(f, a) * &Scalar::from_i64(f, b)) - &Scalar::from_i64(f, c);
        let rhs = (i128::from(a) * i128::from(b) - i128::from(c)).rem_euclid(i128::from(p));
        prop_assert_eq!(i128::from(lhs.residue().unwrap()), rhs);
    }
}

// poly and parse

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn grid_reduce_reconstructs(seed in any::<u64>(), prime in any::<bool>()) {
        let mut rng = rng(seed);
        let field = field_of(prime);
        let n = rng.gen_range(1..=3);
        let r = ring(field, n);
        let f = rand_poly(&r, 7, 8, &mut rng);
        let g = rand_grid(field, n, 4, &mut rng);
        let red = grid_reduce(&f, &g).unwrap();
        let gs = g.vanishing_polys(&r).unwrap();
        let mut acc = red.remainder.clone();
        for (q, gi) in red.quotients.iter().zip(&gs) {
            acc = &acc + &(q * gi);
        }
        prop_assert_eq!(&acc, &f);
        for (i, size) in g.sizes().into_iter().enumerate() {
            if let Degree::Finite(d) = red.remainder.degree_in(i) {
                prop_assert!(d < size as u64);
            }
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(seed in any::<u64>(), prime in any::<bool>()) {
        let mut rng = rng(seed);
        let field = field_of(prime);
        let n = rng.gen_range(1..=3);
        let r = ring(field, n);
        let f = rand_poly(&r, 5, 6, &mut rng);
        let g = rand_poly(&r, 5, 6, &mut rng);
        let pt = rand_point(field, n, &mut rng);
        let (fa, ga) = (f.evaluate(&pt).unwrap(), g.evaluate(&pt).unwrap());
        prop_assert_eq!((&f + &g).evaluate(&pt).unwrap(), &fa + &ga);
        prop_assert_eq!((&f * &g).evaluate(&pt).unwrap(), &fa * &ga);
    }

    #[test]
    fn format_parse_roundtrip(seed in any::<u64>(), prime in any::<bool>()) {
        let mut rng = rng(seed);
        let field = field_of(prime);
        let r = ring(field, rng.gen_range(1..=3));
        let mut f = rand_poly(&r, 6, 7, &mut rng);
        if !prime && rng.gen_bool(0.5) {
            let den = Scalar::from_i64(field, rng.gen_range(2..30));
            f = f.scale(&den.inv().unwrap());
        }
        let text = format_poly(&f);
        prop_assert_eq!(parse_poly(&text, &r).unwrap(), f.clone());
        prop_assert_eq!(PolyJson::encode(&f).decode().unwrap(), f);
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn tilt_normalizes_and_inverts(seed in any::<u64>(), prime in any::<bool>(), power in any::<bool>()) {
        let mut rng = rng(seed);
        let field = field_of(prime);
        let n = rng.gen_range(1..=3);
        let r = ring(field, n);
        let f = rand_poly(&r, 4, 5, &mut rng);
        prop_assume!(!f.is_constant());
        let var = rng.gen_range(0..n);
        let mode = if power { TiltMode::Power } else { TiltMode::Linear };
        let t = tilt_axes(&f, var, mode).unwrap();
        prop_assert_eq!(t.tilted.degree_in(var), Degree::Finite(t.degree));
        if mode == TiltMode::Linear {
            prop_assert_eq!(Degree::Finite(t.degree), f.degree());
        }
        let lead = &t.tilted.coefficients_in(var)[t.degree as usize];
        prop_assert_eq!(lead.constant_value(), Some(t.leading.clone()));
        prop_assert!(!t.leading.is_zero());
        prop_assert_eq!(t.inverse.apply(&t.tilted).unwrap(), f);
    }

    #[test]
    fn resultant_vanishes_over_shared_roots(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let field = fp(13);
        let r = ring(field, 2);
        let planted = rng.gen_bool(0.5);
        let (a0, b0) = (rng.gen_range(0..13), rng.gen_range(0..13));
        let lin_x = &Polynomial::var(&r, 0) - &Polynomial::from_i64(&r, a0);
        let lin_y = &Polynomial::var(&r, 1) - &Polynomial::from_i64(&r, b0);
        let make = |rng: &mut ChaCha8Rng| {
            let base = &univariate(&r, 1, rng.gen_range(1..=3), rng) + &rand_poly(&r, 2, 3, rng);
            if planted {
                &(&lin_y * &base) + &(&lin_x * &rand_poly(&r, 2, 3, rng))
            } else {
                base
            }
        };
        let (f, g) = (make(&mut rng), make(&mut rng));
        prop_assume!(f.degree_in(1) != Degree::Finite(0) && g.degree_in(1) != Degree::Finite(0));
        let res = resultant(&f, &g, 1).unwrap();
        for _ in 0..20 {
            let a = scalar(field, rng.gen_range(0..13));
            let shared = (0..13).any(|b| {
                let pt = [a.clone(), scalar(field, b)];
                f.evaluate(&pt).unwrap().is_zero() && g.evaluate(&pt).unwrap().is_zero()
            });
            if shared {
                prop_assert!(res.evaluate(&[a, Scalar::zero(field)]).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn parser_is_total_on_fuzzed_input() {
    const ALPHABET: &[u8] = b"x1x2x3y 0123456789+-*^()/.";
    let r = ring(fp(7), 3);
    let q = ring(FieldSpec::Rationals, 3);
    let mut rng = rng(7);
    let check = |text: &str, ring: &Arc<Ring>| {
        if let Err(e) = parse_poly(text, ring) {
            assert!(e.span.start <= e.span.end && e.span.end <= text.len(), "{text:?}: {e}");
            assert!(text.is_char_boundary(e.span.start) && text.is_char_boundary(e.span.end), "{text:?}: {e}");
        }
    };
    for i in 0..100_000 {
        let len = rng.gen_range(0..24);
        let bytes: Vec<u8> = (0..len).map(|_| rng.gen()).collect();
        let text = String::from_utf8_lossy(&bytes);
        check(&text, if i % 2 == 0 { &r } else { &q });
        let near: Vec<u8> = (0..len).map(|_| ALPHABET[rng.gen_range(0..ALPHABET.len())]).collect();
        check(std::str::from_utf8(&near).unwrap(), if i % 2 == 0 { &q } else { &r });
    }
}

// ideal

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn normal_form_detects_combinations(seed in any::<u64>(), prime in any::<bool>()) {
        let mut rng = rng(seed);
        let field = if prime { fp(31) } else { FieldSpec::Rationals };
        let n = rng.gen_range(1..=3);
        let r = ring(field, n);
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=n)).map(|_| rand_poly(&r, 2, 3, &mut rng)).collect();
        let gb = buchberger(&gens, &default_order(&r)).unwrap();
        let mut comb = Polynomial::zero(&r);
        for g in &gens {
            comb = &comb + &(&rand_poly(&r, 2, 3, &mut rng) * g);
        }
        prop_assert!(gb.normal_form(&comb).unwrap().is_zero());
        let tail = gb.normal_form(&rand_poly(&r, 3, 3, &mut rng)).unwrap();
        prop_assert_eq!(gb.normal_form(&(&comb + &tail)).unwrap(), tail);
    }

    #[test]
    fn groebner_is_idempotent(seed in any::<u64>(), prime in any::<bool>()) {
        let mut rng = rng(seed);
        let field = if prime { fp(31) } else { FieldSpec::Rationals };
        let n = rng.gen_range(1..=3);
        let r = ring(field, n);
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3)).map(|_| rand_poly(&r, 3, 3, &mut rng)).collect();
        let order = default_order(&r);
        let gb = buchberger(&gens, &order).unwrap();
        prop_assume!(!gb.is_zero_ideal());
        let again = buchberger(&gb.generators(), &order).unwrap();
        prop_assert_eq!(again.generators(), gb.generators());
    }
}

fn size_profiles(n: usize, cap: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for s in 1..=cap {
        for mut rest in size_profiles(n - 1, cap / s) {
            rest.insert(0, s);
            out.push(rest);
        }
    }
    out
}

#[test]
fn grid_ideals_have_product_dimension() {
    let mut rng = rng(11);
    for field in [FieldSpec::Rationals, fp(67)] {
        let pool: Vec<i64> = match field.modulus() {
            Some(p) => (0..i64::from(p)).collect(),
            None => (-40..=40).collect(),
        };
        for n in 1..=3 {
            for sizes in size_profiles(n, 64) {
                let sets: Vec<Vec<i64>> = sizes.iter().map(|&k| distinct(&pool, k, &mut rng)).collect();
                let g = grid(field, &sets);
                let r = ring(field, n);
                let gens = g.vanishing_polys(&r).unwrap();
                let total: usize = sizes.iter().product();
                assert_eq!(finiteness_check(&gens).unwrap(), Finiteness::Finite { dim: total }, "{sizes:?}");
                let gb = buchberger(&gens, &default_order(&r)).unwrap();
                assert_eq!(quotient_basis(&gb).unwrap().len(), total);
            }
        }
    }
}

// stickel

/// Zero-dimensional by construction: one univariate generator per variable.
fn zero_dim_ideal(r: &Arc<Ring>, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let mut gens: Vec<Polynomial> = (0..r.nvars()).map(|v| univariate(r, v, rng.gen_range(1..=3), rng)).collect();
    for _ in 0..rng.gen_range(0..=2) {
        gens.push(rand_poly(r, 2, 3, rng));
    }
    gens
}

proptest! {
    #![proptest_config(config(150))]

    #[test]
    fn solve_matches_exhaustive_scan(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let mut rng = rng(seed);
        let field = fp(p);
        let n = rng.gen_range(1..=2);
        let r = ring(field, n);
        let gens = zero_dim_ideal(&r, &mut rng);
        let sols = solve_points(&gens).unwrap();
        let mut scan: Vec<Vec<Scalar>> = all_points(field, n)
            .into_iter()
            .filter(|pt| gens.iter().all(|g| g.evaluate(pt).unwrap().is_zero()))
            .collect();
        scan.sort();
        let mut got = sols.points.clone();
        got.sort();
        prop_assert_eq!(got, scan);
    }

    #[test]
    fn multiplication_matrices_commute(seed in any::<u64>(), prime in any::<bool>()) {
        let mut rng = rng(seed);
        let field = if prime { fp(11) } else { FieldSpec::Rationals };
        let r = ring(field, rng.gen_range(2..=3));
        let gens = zero_dim_ideal(&r, &mut rng);
        let qa = match QuotientAlgebra::from_generators(&gens) {
            Ok(qa) => qa,
            Err(_) => return Ok(()),
        };
        let ms: Vec<_> = (0..r.nvars()).map(|v| qa.mult_matrix(v).unwrap()).collect();
        for i in 0..ms.len() {
            for j in i + 1..ms.len() {
                prop_assert_eq!(ms[i].mul(&ms[j]), ms[j].mul(&ms[i]));
            }
        }
    }

    #[test]
    fn solutions_are_sound(seed in any::<u64>(), prime in any::<bool>()) {
        let mut rng = rng(seed);
        let field = if prime { fp(101) } else { FieldSpec::Rationals };
        let r = ring(field, rng.gen_range(1..=3));
        let gens = zero_dim_ideal(&r, &mut rng);
        let sols = solve_points(&gens).unwrap();
        for pt in &sols.points {
            for g in &gens {
                prop_assert!(g.evaluate(pt).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn grid_roundtrip_over_f11() {
    let mut rng = rng(5);
    let field = fp(11);
    let pool: Vec<i64> = (0..11).collect();
    for n in 1..=3 {
        for sizes in size_profiles(n, 27).into_iter().filter(|s| s.iter().all(|&k| k <= 11)) {
            let sets: Vec<Vec<i64>> = sizes.iter().map(|&k| distinct(&pool, k, &mut rng)).collect();
            let g = grid(field, &sets);
            let r = ring(field, n);
            let sols = solve_points(&g.vanishing_polys(&r).unwrap()).unwrap();
            let mut expect: Vec<Vec<Scalar>> = g.points().collect();
            expect.sort();
            assert_eq!(sols.points, expect, "{sets:?}");
            assert!(!sols.may_have_nonrational);
        }
    }
}

// graded

fn rand_monomial_series(nvars: u32, free: u32, rng: &mut ChaCha8Rng) -> GradedSeries {
    let gens: Vec<Monomial> = (0..rng.gen_range(0..=3))
        .map(|_| {
            let mut e = vec![0u32; (nvars + free) as usize];
            for slot in e.iter_mut().take(nvars as usize) {
                *slot = rng.gen_range(0..=3);
            }
            if e.iter().all(|&x| x == 0) {
                e[0] = 1;
            }
            Monomial::new(e)
        })
        .collect();
    series_monomial_quotient(nvars + free, &gens).unwrap()
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn regular_quotient_scales_multiplicity(seed in any::<u64>(), delta in 1u32..5) {
        let mut rng = rng(seed);
        let s = series_shift(&rand_monomial_series(rng.gen_range(1..=3), rng.gen_range(0..=2), &mut rng), rng.gen_range(0..4));
        prop_assume!(s.denom_power() >= 1);
        let t = series_quot_regular(&s, delta).unwrap();
        let (before, after) = (dim_mult(&s), dim_mult(&t));
        prop_assert_eq!(after.pd, before.pd - 1);
        let scaled = before.mult.unwrap() * BigInt::from(delta);
        let got = after.mult.or(after.total_dimension).unwrap();
        prop_assert_eq!(got, scaled);
    }

    #[test]
    fn constructed_series_are_nonnegative(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let free = rng.gen_range(0..=2);
        let mut s = rand_monomial_series(rng.gen_range(1..=3), free, &mut rng);
        for _ in 0..rng.gen_range(0..=free) {
            s = series_quot_regular(&s, rng.gen_range(1..=3)).unwrap();
        }
        let extra = rand_monomial_series(rng.gen_range(1..=2), 0, &mut rng);
        s = s.add(&series_shift(&extra, rng.gen_range(0..5)));
        for c in s.dims(30) {
            prop_assert!(!c.is_negative());
        }
        let hs = hilbert_samuel_polynomial(&s);
        for m in hs.valid_from.max(0)..hs.valid_from.max(0) + 15 {
            prop_assert_eq!(hs.eval(m), hilbert_samuel(&s, m));
        }
    }
}

#[test]
fn multiplicity_is_additive_over_top_dimension() {
    let mut rng = rng(19);
    for _ in 0..20 {
        let k = rng.gen_range(2..=4);
        let parts: Vec<GradedSeries> = (0..k)
            .map(|_| {
                let s = rand_monomial_series(rng.gen_range(1..=3), rng.gen_range(0..=1), &mut rng);
                series_shift(&s, rng.gen_range(0..6))
            })
            .collect();
        let sum = parts.iter().fold(GradedSeries::zero(), |acc, s| acc.add(s));
        let top = parts.iter().map(|s| dim_mult(s).pd).max().unwrap();
        let expect: BigInt =
            parts.iter().map(dim_mult).filter(|d| d.pd == top).map(|d| d.mult.or(d.total_dimension).unwrap()).sum();
        let got = dim_mult(&sum);
        assert_eq!(got.pd, top);
        assert_eq!(got.mult.or(got.total_dimension).unwrap(), expect);
    }
}

#[test]
fn odd_solutions_lie_on_the_sphere() {
    let mut rng = rng(23);
    for _ in 0..8 {
        let nvars = rng.gen_range(2..=4);
        let r = ring(FieldSpec::Rationals, nvars);
        let forms: Vec<Polynomial> = (0..rng.gen_range(1..nvars))
            .map(|_| {
                let d = if rng.gen_bool(0.5) { 1 } else { 3 };
                let terms: Vec<_> = (0..4)
                    .map(|_| {
                        let mut e = vec![0u32; nvars];
                        for _ in 0..d {
                            e[rng.gen_range(0..nvars)] += 1;
                        }
                        (Monomial::new(e), scalar(FieldSpec::Rationals, rng.gen_range(-5..=5)))
                    })
                    .collect();
                Polynomial::from_terms(&r, terms).unwrap()
            })
            .filter(|f| !f.is_zero())
            .collect();
        if forms.is_empty() {
            continue;
        }
        let cfg = OddConfig::default();
        let sol = odd_system_solve(&forms, &cfg).unwrap();
        let norm = sol.point.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-12, "norm {norm}");
        assert!(sol.phi < cfg.tol);
    }
}

// realrad

proptest! {
    #![proptest_config(config(60))]

    #[test]
    fn valid_certificates_vanish_on_rational_zeros(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let field = FieldSpec::Rationals;
        let r = ring(field, 2);
        let lin = |rng: &mut ChaCha8Rng| {
            let terms = vec![
                (Monomial::var_power(2, 0, 1), scalar(field, rng.gen_range(-3..=3))),
                (Monomial::var_power(2, 1, 1), scalar(field, rng.gen_range(-3..=3))),
                (Monomial::one(2), scalar(field, rng.gen_range(-3..=3))),
            ];
            Polynomial::from_terms(&r, terms).unwrap()
        };
        let roots = |var: usize, rng: &mut ChaCha8Rng| {
            (0..rng.gen_range(1..=3)).fold(Polynomial::one(&r), |acc, _| {
                &acc * &(&Polynomial::var(&r, var) - &Polynomial::from_i64(&r, rng.gen_range(-3..=3)))
            })
        };
        let (f, a) = (lin(&mut rng), lin(&mut rng));
        prop_assume!(!f.is_zero());
        let mut gens = vec![&f.pow(2) + &a.pow(2), roots(0, &mut rng), roots(1, &mut rng)];
        let cert = RealRadicalCertificate { f: f.clone(), m: 1, sos_terms: vec![a.clone()], ideal_gens: gens.clone() };
        prop_assert!(verify_real_radical_cert(&cert).unwrap());
        if rng.gen_bool(0.5) {
            gens[0] = rand_poly(&r, 2, 3, &mut rng);
        }
        let cert = RealRadicalCertificate { f: f.clone(), m: rng.gen_range(1..=2), sos_terms: vec![a], ideal_gens: gens.clone() };
        if verify_real_radical_cert(&cert).unwrap() {
            for pt in solve_points(&gens).unwrap().points {
                prop_assert!(f.evaluate(&pt).unwrap().is_zero());
            }
        }
    }
}
