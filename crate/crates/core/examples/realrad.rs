//! Check real-radical certificates and sample the Motzkin polynomial.

use nullkit::coeff::FieldSpec;
use nullkit::parse::{format_poly, parse_poly};
use nullkit::poly::{GridSpec, Ring};
use nullkit::realrad::{motzkin, nonneg_sample_check, verify_real_radical_cert, RealRadicalCertificate};

fn main() {
    let ring = Ring::new(FieldSpec::Rationals, ["X", "Y"]).unwrap();
    let p = |s: &str| parse_poly(s, &ring).unwrap();

    let good = RealRadicalCertificate { f: p("X"), m: 1, sos_terms: vec![p("Y")], ideal_gens: vec![p("X^2 + Y^2")] };
    println!("X^2 + Y^2 in <X^2 + Y^2>: {}", verify_real_radical_cert(&good).unwrap());
    let bad = RealRadicalCertificate { f: p("X"), m: 1, sos_terms: vec![], ideal_gens: vec![p("Y")] };
    println!("X^2 in <Y>: {}", verify_real_radical_cert(&bad).unwrap());

    let m = motzkin();
    println!("Motzkin: {}", format_poly(&m));
    let axis: Vec<i64> = (-3..=3).collect();
    let grid = GridSpec::from_i64(FieldSpec::Rationals, &[&axis, &axis]).unwrap();
    let chk = nonneg_sample_check(&m, &grid).unwrap();
    let at: Vec<String> = chk.minimizers.iter().map(|pt| format!("({}, {})", pt[0], pt[1])).collect();
    println!("grid minimum {} at {}; nonnegative on grid: {}", chk.min_value, at.join(" "), chk.all_nonneg);
}
