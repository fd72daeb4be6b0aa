//! Solve a zero-dimensional system from the eigenvalues of multiplication maps.

use nullkit::coeff::FieldSpec;
use nullkit::parse::{format_poly, parse_poly};
use nullkit::poly::Ring;
use nullkit::stickel::{char_poly, separator, solve_points, verify_stickelberger, QuotientAlgebra};

fn main() {
    let ring = Ring::new(FieldSpec::Rationals, ["x", "y"]).unwrap();
    let gens = vec![parse_poly("x^2 - 3*x + 2", &ring).unwrap(), parse_poly("y^2 - x*y", &ring).unwrap()];

    let qa = QuotientAlgebra::from_generators(&gens).unwrap();
    let basis: Vec<String> = qa.basis().iter().map(|m| format!("{:?}", m.exps())).collect();
    println!("quotient dimension {} with basis exponents {}", qa.dim(), basis.join(" "));
    for var in 0..2 {
        let m = qa.mult_matrix(var).unwrap();
        println!("char poly of multiplication by {}: {:?}", ring.vars()[var], char_poly(&m, ring.field()).unwrap());
    }

    let sols = solve_points(&gens).unwrap();
    for (j, pt) in sols.points.iter().enumerate() {
        let coords: Vec<String> = pt.iter().map(ToString::to_string).collect();
        let g = separator(&ring, &sols.points, j).unwrap();
        let ok = verify_stickelberger(&qa, pt, &g).unwrap();
        println!("point ({})  separator {}  eigenvector check {ok}", coords.join(", "), format_poly(&g));
    }
    println!("may have non-rational points: {}", sols.may_have_nonrational);
}
