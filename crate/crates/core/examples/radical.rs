//! Radical membership, finiteness and the quotient basis of an ideal.

use nullkit::coeff::FieldSpec;
use nullkit::ideal::{buchberger, default_order, finiteness_check, quotient_basis, radical_membership};
use nullkit::parse::{format_poly, parse_poly};
use nullkit::poly::Ring;

fn main() {
    let ring = Ring::new(FieldSpec::Rationals, ["x", "y"]).unwrap();
    let p = |s: &str| parse_poly(s, &ring).unwrap();
    let gens = vec![p("x^2"), p("y^3 - x*y")];

    let gb = buchberger(&gens, &default_order(&ring)).unwrap();
    for g in gb.generators() {
        println!("basis element: {}", format_poly(&g));
    }
    println!("finiteness: {:?}", finiteness_check(&gens).unwrap());
    let standard: Vec<Vec<u32>> = quotient_basis(&gb).unwrap().iter().map(|m| m.exps().to_vec()).collect();
    println!("standard monomials: {standard:?}");

    for f in ["x", "y", "x + y", "x + 1"] {
        println!("{f:>6} in radical: {}", radical_membership(&p(f), &gens).unwrap());
    }
}
