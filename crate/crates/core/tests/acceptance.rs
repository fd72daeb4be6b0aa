//! Acceptance suite: one PASS/FAIL line per criterion, each checked against
//! an independent oracle and a wall-clock limit.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nullkit::coeff::{FieldSpec, Scalar};
use nullkit::combnull::{cn_membership, dyson_coefficient, kp_coefficient, restricted_sumset, sumset, SumsetInstance};
use nullkit::graded::{
    dim_mult, odd_system_solve, series_monomial_quotient, series_poly_ring, series_quot_regular, OddConfig,
};
use nullkit::ideal::{buchberger, default_order, quotient_basis, radical_membership};
use nullkit::poly::{resultant, GridSpec, Monomial, Polynomial, Ring};
use nullkit::realrad::{motzkin, nonneg_sample_check};
use nullkit::stickel::{separator, solve_points, verify_stickelberger, QuotientAlgebra};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use common::*;

type Check = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)*));
        }
    };
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("Dyson constant term equals the multinomial", 10, dyson),
        ("Coefficient formula over grids equals the direct coefficient", 5, coefficient_formula),
        ("Erdős–Heilbronn and Cauchy–Davenport bounds", 30, sumsets),
        ("Eigenvalue solver recovers grid varieties", 60, stickelberger),
        ("Sylvester resultant detects common roots", 10, resultants),
        ("Rabinowitsch membership matches the power oracle", 60, radicals),
        ("Hilbert series, complete intersections, free rings", 10, hilbert),
        ("Odd-degree forms have a common zero on the sphere", 60, odd_forms),
        ("Grid membership and Motzkin facts", 5, grid_membership),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > Duration::from_secs(limit) => Err(format!("{detail}; over the {limit} s limit")),
            other => other,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("[{tag}] criterion {}: {name} ({:.2} s / {limit} s) {detail}", i + 1, elapsed.as_secs_f64());
        failed += usize::from(result.is_err());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

fn dyson() -> Check {
    let q = FieldSpec::Rationals;
    let mut cases = 0;
    for n in 2..=3u32 {
        for code in 0..3u64.pow(n) {
            let alpha: Vec<u64> = (0..n).map(|i| code / 3u64.pow(i) % 3 + 1).collect();
            let total: u64 = alpha.iter().sum();
            let expected = alpha.iter().fold(factorial(total), |acc, &a| acc / factorial(a));
            let r = dyson_coefficient(&alpha).map_err(|e| format!("{alpha:?}: {e}"))?;
            ensure!(r.c == Scalar::from_bigint(q, &expected), "{alpha:?}: C = {} but expected {expected}", r.c);
            ensure!(r.equal && r.multinomial == r.c, "{alpha:?}: reported multinomial {}", r.multinomial);
            cases += 1;
        }
    }
    Ok(format!("{cases} exponent vectors, all exact"))
}

fn coefficient_formula() -> Check {
    let mut rng = rng(2);
    let mut nonzero = 0;
    for field in [FieldSpec::Rationals, fp(101)] {
        for _ in 0..100 {
            let n = rng.gen_range(1..=3);
            let r = ring(field, n);
            let nu: Vec<u64> = loop {
                let v: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
                if v.iter().sum::<u64>() > 0 {
                    break v;
                }
            };
            let bound = nu.iter().sum::<u64>().min(6) as u32;
            let mut f = rand_poly(&r, bound, 8, &mut rng);
            let top = Monomial::new(nu.iter().map(|&v| v as u32).collect());
            if nu.iter().sum::<u64>() <= 6 && rng.gen_bool(0.7) {
                f = &f + &Polynomial::monomial(&r, top.clone(), rand_scalar(field, &mut rng));
            }
            let pool: Vec<i64> = (-12..=12).collect();
            let sets: Vec<Vec<i64>> = nu.iter().map(|&v| distinct(&pool, v as usize + 1, &mut rng)).collect();
            let g = grid(field, &sets);
            let got = kp_coefficient(&f, &nu, &g).map_err(|e| format!("{f:?}, ν = {nu:?}: {e}"))?;
            let direct = f.coeff(&top);
            ensure!(got == direct, "{f:?}, ν = {nu:?}: formula {got}, direct {direct}");
            nonzero += usize::from(!direct.is_zero());
        }
    }
    Ok(format!("200 polynomials over Q and F_101, {nonzero} with nonzero target coefficient"))
}

fn subset(mask: u32, p: u64) -> Vec<u64> {
    (0..p).filter(|i| mask >> i & 1 == 1).collect()
}

fn check_pair(p: u64, m: Vec<u64>, n: Vec<u64>) -> Result<(), String> {
    let mut full = BTreeSet::new();
    let mut restricted = BTreeSet::new();
    for &a in &m {
        for &b in &n {
            full.insert((a + b) % p);
            if a != b {
                restricted.insert((a + b) % p);
            }
        }
    }
    let (sm, sn) = (m.len() as i64, n.len() as i64);
    let inst = SumsetInstance::new(p, m.clone(), n.clone()).map_err(|e| e.to_string())?;
    let s = sumset(&inst);
    let r = restricted_sumset(&inst);
    ensure!(s.set == full.iter().copied().collect::<Vec<_>>(), "p={p} {m:?}+{n:?}: set differs");
    ensure!(r.set == restricted.iter().copied().collect::<Vec<_>>(), "p={p} {m:?}+'{n:?}: set differs");
    ensure!(full.len() as i64 >= (p as i64).min(sm + sn - 1), "Cauchy–Davenport fails for p={p} {m:?} {n:?}");
    ensure!(restricted.len() as i64 >= (p as i64).min(sm + sn - 3), "Erdős–Heilbronn fails for p={p} {m:?} {n:?}");
    ensure!(s.holds && r.holds, "bound flags disagree for p={p} {m:?} {n:?}");
    Ok(())
}

fn sumsets() -> Check {
    let mut pairs = 0;
    for p in [3u64, 5, 7] {
        for a in 1..1u32 << p {
            for b in 1..1u32 << p {
                check_pair(p, subset(a, p), subset(b, p))?;
                pairs += 1;
            }
        }
    }
    let mut rng = rng(3);
    for p in [11u64, 13, 17] {
        let all: Vec<u64> = (0..p).collect();
        for _ in 0..200 {
            let km = rng.gen_range(1..=p as usize);
            let kn = rng.gen_range(1..=p as usize);
            let m: Vec<u64> = all.choose_multiple(&mut rng, km).copied().collect();
            let n: Vec<u64> = all.choose_multiple(&mut rng, kn).copied().collect();
            check_pair(p, m, n)?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs ({} exhaustive over p = 3, 5, 7)", pairs - 600))
}

/// Size profiles `(s_1, …, s_n)` with `n ≤ 3`, `s_i ≤ max`, and `∏ s_i ≤ 27`.
fn profiles(max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (1..=max).map(|s| vec![s]).collect();
    while let Some(v) = stack.pop() {
        if v.iter().product::<usize>() > 27 {
            continue;
        }
        if v.len() < 3 {
            for s in 1..=max {
                let mut w = v.clone();
                w.push(s);
                stack.push(w);
            }
        }
        out.push(v);
    }
    out.sort();
    out
}

fn subsets_of_size(pool: &[i64], k: usize) -> Vec<Vec<i64>> {
    if k == 0 {
        return vec![vec![]];
    }
    if pool.len() < k {
        return vec![];
    }
    let mut with: Vec<Vec<i64>> = subsets_of_size(&pool[1..], k - 1);
    with.iter_mut().for_each(|s| s.insert(0, pool[0]));
    with.extend(subsets_of_size(&pool[1..], k));
    with
}

fn check_grid_solve(field: FieldSpec, sets: &[Vec<i64>], scan: bool) -> Result<usize, String> {
    let n = sets.len();
    let r = ring(field, n);
    let g = grid(field, sets);
    let gens = g.vanishing_polys(&r).map_err(|e| e.to_string())?;
    let sols = solve_points(&gens).map_err(|e| format!("{sets:?}: {e}"))?;
    let mut expected: Vec<Vec<Scalar>> = g.points().collect();
    expected.sort();
    ensure!(sols.points == expected, "{field} {sets:?}: recovered {:?}", sols.points);
    ensure!(!sols.may_have_nonrational, "{field} {sets:?}: flagged non-rational points");
    if scan {
        let zeros: Vec<Vec<Scalar>> = all_points(field, n)
            .into_iter()
            .filter(|pt| gens.iter().all(|h| h.evaluate(pt).unwrap().is_zero()))
            .collect();
        ensure!(sols.points == zeros, "{field} {sets:?}: exhaustive scan disagrees");
    }
    let qa = QuotientAlgebra::from_generators(&gens).map_err(|e| e.to_string())?;
    for (j, pt) in sols.points.iter().enumerate() {
        let sep = separator(&r, &sols.points, j).map_err(|e| e.to_string())?;
        ensure!(
            verify_stickelberger(&qa, pt, &sep).map_err(|e| e.to_string())?,
            "{sets:?}: eigenvector check at {pt:?}"
        );
    }
    Ok(sols.points.len())
}

fn stickelberger() -> Check {
    let mut rng = rng(4);
    let mut instances = 0;
    let mut points = 0;
    for p in [5u64, 7] {
        let field = fp(p);
        let pool: Vec<i64> = (0..p as i64).collect();
        for prof in profiles(p as usize) {
            let choices: Vec<Vec<Vec<i64>>> = prof.iter().map(|&s| subsets_of_size(&pool, s)).collect();
            let total: usize = choices.iter().map(Vec::len).product();
            // every subset tuple when affordable, otherwise a fixed-seed sample
            let tuples: Vec<Vec<Vec<i64>>> = if total <= 40 || (p == 5 && prof.len() <= 2) {
                (0..total)
                    .map(|mut idx| {
                        choices
                            .iter()
                            .map(|c| {
                                let pick = c[idx % c.len()].clone();
                                idx /= c.len();
                                pick
                            })
                            .collect()
                    })
                    .collect()
            } else {
                (0..12).map(|_| choices.iter().map(|c| c.choose(&mut rng).unwrap().clone()).collect()).collect()
            };
            for sets in tuples {
                points += check_grid_solve(field, &sets, sets.len() <= 2)?;
                instances += 1;
            }
        }
    }
    let pool: Vec<i64> = (-6..=6).collect();
    for prof in profiles(6) {
        let samples = if prof.iter().product::<usize>() >= 16 { 1 } else { 3 };
        for _ in 0..samples {
            let sets: Vec<Vec<i64>> = prof.iter().map(|&s| distinct(&pool, s, &mut rng)).collect();
            points += check_grid_solve(FieldSpec::Rationals, &sets, false)?;
            instances += 1;
        }
    }
    Ok(format!("{instances} grid ideals, {points} points verified"))
}

/// Dense residues mod p, ascending, trailing zeros trimmed.
fn dense(f: &Polynomial, var: usize, p: u64) -> Vec<u64> {
    let mut out = vec![];
    for (m, c) in f.terms() {
        let k = m.exps()[var] as usize;
        if out.len() <= k {
            out.resize(k + 1, 0);
        }
        out[k] = (out[k] + u64::from(c.residue().unwrap())) % p;
    }
    trim(out)
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Euclid's algorithm mod p; returns the degree of the gcd.
fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let c = a.last().unwrap() * inv % p;
            for (i, &bi) in b.iter().enumerate() {
                a[i + shift] = (a[i + shift] + p - c * bi % p) % p;
            }
            a = trim(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn resultants() -> Check {
    let p = 10007u64;
    let field = fp(p);
    let mut rng = rng(5);
    let r1 = ring(field, 1);
    let x = Polynomial::var(&r1, 0);
    let (mut zero, mut nonzero) = (0, 0);
    for i in 0..200 {
        let (f, g) = if i % 2 == 0 {
            let a = Polynomial::constant(&r1, rand_scalar(field, &mut rng));
            let lin = &x - &a;
            let f1 = rand_poly(&r1, 4, 5, &mut rng);
            let g1 = rand_poly(&r1, 4, 5, &mut rng);
            if f1.is_zero() || g1.is_zero() {
                continue;
            }
            (&lin * &f1, &lin * &g1)
        } else {
            let f = rand_poly(&r1, 5, 6, &mut rng);
            let g = rand_poly(&r1, 5, 6, &mut rng);
            if f.is_constant() || g.is_constant() {
                continue;
            }
            (f, g)
        };
        let res = resultant(&f, &g, 0).map_err(|e| e.to_string())?;
        let common = gcd_degree(dense(&f, 0, p), dense(&g, 0, p), p) > 0;
        ensure!(res.is_zero() == common, "{f:?}, {g:?}: resultant {res:?}, gcd nontrivial = {common}");
        if common {
            zero += 1;
        } else {
            nonzero += 1;
        }
    }
    ensure!(zero >= 90 && nonzero >= 50, "degenerate sample: {zero} zero, {nonzero} nonzero");

    // Res_y(f, g) ∈ ⟨f, g⟩ ∩ K[x]: it vanishes below every common zero
    let r2 = ring(field, 2);
    let mut specializations = 0;
    while specializations < 20 {
        let pt = vec![rand_scalar(field, &mut rng), rand_scalar(field, &mut rng)];
        let plant = |h: Polynomial| {
            let v = h.evaluate(&pt).unwrap();
            &h - &Polynomial::constant(&r2, v)
        };
        let f = plant(rand_poly(&r2, 3, 6, &mut rng));
        let g = plant(rand_poly(&r2, 3, 6, &mut rng));
        if f.degree_in(1).finite().unwrap_or(0) == 0 || g.degree_in(1).finite().unwrap_or(0) == 0 {
            continue;
        }
        let res = resultant(&f, &g, 1).map_err(|e| e.to_string())?;
        let at = res.evaluate(&[pt[0].clone(), Scalar::zero(field)]).unwrap();
        ensure!(at.is_zero(), "Res_y({f:?}, {g:?}) does not vanish at x = {}", pt[0]);
        specializations += 1;
    }
    Ok(format!("{zero} pairs with common roots, {nonzero} coprime; 20 planted elimination checks"))
}

fn radicals() -> Check {
    let p = 31u64;
    let field = fp(p);
    let mut rng = rng(6);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..50 {
        let n = if rng.gen_bool(0.8) { 2 } else { 3 };
        let r = ring(field, n);
        let mut gens = Vec::new();
        let mut sqfree = Vec::new();
        for v in 0..n {
            let xv = Polynomial::var(&r, v);
            let roots = distinct(&(0..p as i64).collect::<Vec<_>>(), rng.gen_range(1..=2), &mut rng);
            let mut full = Polynomial::one(&r);
            let mut red = Polynomial::one(&r);
            for a in roots {
                let lin = &xv - &Polynomial::constant(&r, scalar(field, a));
                full = &full * &lin.pow(rng.gen_range(1..=2));
                red = &red * &lin;
            }
            gens.push(full);
            sqfree.push(red);
        }
        if rng.gen_bool(0.5) {
            gens.push(rand_poly(&r, 2, 3, &mut rng));
        }
        let noise = rand_poly(&r, 2, 3, &mut rng);
        let f = match rng.gen_range(0..5) {
            0 => noise,
            1 => sqfree[rng.gen_range(0..n)].clone(),
            2 => &sqfree[rng.gen_range(0..n)] * &noise,
            3 => &(&noise * &gens[0]) + &sqfree[0],
            _ => &(&noise * &gens[0]) + &rand_poly(&r, 1, 2, &mut rng),
        };
        let gb = buchberger(&gens, &default_order(&r)).map_err(|e| e.to_string())?;
        let oracle = if gb.is_unit() {
            true
        } else {
            let dim = quotient_basis(&gb).map_err(|e| e.to_string())?.len() as u32;
            gb.normal_form(&f.pow(dim.max(1))).map_err(|e| e.to_string())?.is_zero()
        };
        let got = radical_membership(&f, &gens).map_err(|e| e.to_string())?;
        ensure!(got == oracle, "f = {f:?}, gens = {gens:?}: Rabinowitsch {got}, power oracle {oracle}");
        if got {
            yes += 1;
        } else {
            no += 1;
        }
    }
    Ok(format!("50 ideals over F_31 ({yes} members, {no} non-members)"))
}

fn standard_count(n: usize, gens: &[Monomial], d: u32) -> BigInt {
    let c = Monomial::all_of_degree(n, d).into_iter().filter(|m| !gens.iter().any(|g| g.divides(m))).count();
    BigInt::from(c)
}

fn hilbert() -> Check {
    let mut rng = rng(7);
    for _ in 0..50 {
        let n = rng.gen_range(1..=4);
        let k = rng.gen_range(1..=5);
        let gens: Vec<Monomial> = (0..k)
            .map(|_| loop {
                let m = rand_monomial(n, 4, &mut rng);
                if !m.is_one() || rng.gen_bool(0.05) {
                    break m;
                }
            })
            .collect();
        let s = series_monomial_quotient(n as u32, &gens).map_err(|e| e.to_string())?;
        for d in 0..=12 {
            let want = standard_count(n, &gens, d);
            ensure!(
                s.coefficient(i64::from(d)) == want,
                "{gens:?} in {n} vars, degree {d}: series {} vs count {want}",
                s.coefficient(i64::from(d))
            );
        }
    }

    let mut ci = 0;
    for nvars in 1..=4u32 {
        let mut stack: Vec<Vec<u32>> = vec![vec![]];
        while let Some(degs) = stack.pop() {
            let prod: u32 = degs.iter().product();
            if !degs.is_empty() {
                let mut s = series_poly_ring(nvars);
                for &d in &degs {
                    s = series_quot_regular(&s, d).map_err(|e| e.to_string())?;
                }
                let dm = dim_mult(&s);
                let e = dm.mult.clone().or(dm.total_dimension.clone()).unwrap();
                ensure!(e == BigInt::from(prod), "degrees {degs:?} in {nvars} vars: e = {e}");
                ensure!(dm.pd == i64::from(nvars) - 1 - degs.len() as i64, "degrees {degs:?}: pd = {}", dm.pd);
                let powers: Vec<Monomial> =
                    degs.iter().enumerate().map(|(i, &d)| Monomial::var_power(nvars as usize, i, d)).collect();
                ensure!(
                    series_monomial_quotient(nvars, &powers).unwrap() == s,
                    "degrees {degs:?}: monomial route differs"
                );
                ci += 1;
            }
            if degs.len() < nvars as usize {
                let last = degs.last().copied().unwrap_or(1);
                for d in last..=24 {
                    if prod * d <= 24 {
                        let mut next = degs.clone();
                        next.push(d);
                        stack.push(next);
                    }
                }
            }
        }
    }
    for n in 1..=8u32 {
        let dm = dim_mult(&series_poly_ring(n));
        ensure!(dm.pd == i64::from(n) - 1 && dm.mult == Some(BigInt::from(1)), "free ring in {n} vars: {dm:?}");
    }
    Ok(format!("50 monomial ideals through degree 12, {ci} complete intersections, free rings up to 8 vars"))
}

fn odd_forms() -> Check {
    let mut rng = rng(8);
    let cfg = OddConfig { tol: 1e-8, ..OddConfig::default() };
    let mut restarts = 0;
    for case in 0..20 {
        let n = case % 3 + 1;
        let r = Ring::new(FieldSpec::Rationals, (0..=n).map(|i| format!("T{i}"))).unwrap();
        let forms: Vec<Polynomial> = (0..n)
            .map(|_| loop {
                let d = if rng.gen_bool(0.5) { 1 } else { 3 };
                let terms = Monomial::all_of_degree(n + 1, d)
                    .into_iter()
                    .map(|m| (m, scalar(FieldSpec::Rationals, rng.gen_range(-5..=5))));
                let f = Polynomial::from_terms(&r, terms).unwrap();
                if !f.is_zero() {
                    break f;
                }
            })
            .collect();
        let sol = odd_system_solve(&forms, &cfg).map_err(|e| format!("{forms:?}: {e}"))?;
        let norm: f64 = sol.point.iter().map(|x| x * x).sum::<f64>().sqrt();
        ensure!((norm - 1.0).abs() < 1e-12, "{forms:?}: |t| = {norm}");
        let phi: f64 = forms
            .iter()
            .map(|f| {
                f.terms()
                    .map(|(m, c)| {
                        c.to_f64() * m.exps().iter().zip(&sol.point).map(|(&e, x)| x.powi(e as i32)).product::<f64>()
                    })
                    .sum::<f64>()
                    .powi(2)
            })
            .sum();
        ensure!(phi < cfg.tol, "{forms:?}: Φ = {phi:e}");
        restarts += sol.restart;
    }
    Ok(format!("20 systems solved to Φ < 1e-8, {restarts} failed restarts in total"))
}

fn grid_membership() -> Check {
    let mut rng = rng(9);
    let (mut members, mut others) = (0, 0);
    for i in 0..200 {
        let field = [FieldSpec::Rationals, fp(7), fp(11)][i % 3];
        let n = rng.gen_range(1..=3);
        let r = ring(field, n);
        let pool: Vec<i64> = match field.modulus() {
            Some(p) => (0..i64::from(p)).collect(),
            None => (-5..=5).collect(),
        };
        let sets: Vec<Vec<i64>> = (0..n).map(|_| distinct(&pool, rng.gen_range(1..=3), &mut rng)).collect();
        let g: GridSpec = grid(field, &sets);
        let f = if rng.gen_bool(0.5) {
            let vps = g.vanishing_polys(&r).unwrap();
            vps.iter().fold(Polynomial::zero(&r), |acc, v| &acc + &(v * &rand_poly(&r, 2, 3, &mut rng)))
        } else {
            rand_poly(&r, 4, 5, &mut rng)
        };
        let oracle = g.points().all(|pt| f.evaluate(&pt).unwrap().is_zero());
        let got = cn_membership(&f, &g).map_err(|e| e.to_string())?;
        ensure!(got == oracle, "{f:?} on {sets:?}: membership {got}, scan {oracle}");
        if got {
            members += 1;
        } else {
            others += 1;
        }
    }

    let m = motzkin();
    let q = |v: i64| scalar(FieldSpec::Rationals, v);
    let one = q(1);
    for y in -20..=20 {
        ensure!(m.evaluate(&[q(0), q(y)]).unwrap() == one, "M(0, {y}) ≠ 1");
        ensure!(m.evaluate(&[q(y), q(0)]).unwrap() == one, "M({y}, 0) ≠ 1");
    }
    let axis: Vec<i64> = (-3..=3).collect();
    let chk = nonneg_sample_check(&m, &grid(FieldSpec::Rationals, &[axis.clone(), axis.clone()])).unwrap();
    let mut oracle_min = i64::MAX;
    let mut at = Vec::new();
    for &x in &axis {
        for &y in &axis {
            let v = x.pow(4) * y * y + x * x * y.pow(4) - 3 * x * x * y * y + 1;
            if v < oracle_min {
                oracle_min = v;
                at.clear();
            }
            if v == oracle_min {
                at.push(vec![q(x), q(y)]);
            }
        }
    }
    ensure!(oracle_min == 0 && chk.min_value == q(0) && chk.all_nonneg, "Motzkin grid minimum {}", chk.min_value);
    ensure!(chk.minimizers == at && at.len() == 4, "Motzkin minimizers {:?}", chk.minimizers);
    Ok(format!("200 instances ({members} members, {others} non-members); Motzkin axes and grid minimum"))
}
