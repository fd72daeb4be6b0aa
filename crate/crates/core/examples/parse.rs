//! Parse, print and JSON-encode polynomials; show a located syntax error.

use nullkit::coeff::FieldSpec;
use nullkit::parse::{format_poly, parse_poly, poly_to_json, PolyJson};
use nullkit::poly::Ring;

fn main() {
    let q = Ring::new(FieldSpec::Rationals, ["x", "y"]).unwrap();
    let f = parse_poly("(x - 1)*(x - 2) + 1/2*y", &q).unwrap();
    println!("over Q:   {}", format_poly(&f));

    let f7 = Ring::new(FieldSpec::prime(7).unwrap(), ["x", "y"]).unwrap();
    let g = parse_poly("(x - 1)*(x - 2) + 1/2*y", &f7).unwrap();
    println!("over F_7: {}", format_poly(&g));

    let json = poly_to_json(&f);
    println!("json:     {json}");
    let back = serde_json::from_str::<PolyJson>(&json).unwrap().decode().unwrap();
    assert_eq!(back, f);

    let err = parse_poly("x^2 + 3y", &q).unwrap_err();
    println!("error:    {} ({})", err, err.code());
}
