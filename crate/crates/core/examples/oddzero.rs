//! Find a common real zero of odd-degree forms on the unit sphere.

use nullkit::coeff::FieldSpec;
use nullkit::graded::{odd_system_solve, OddConfig};
use nullkit::parse::parse_poly;
use nullkit::poly::Ring;

fn main() {
    let ring = Ring::new(FieldSpec::Rationals, ["T0", "T1", "T2"]).unwrap();
    let forms = vec![
        parse_poly("T0^3 - 2*T1^3 + T2^3 + T0*T1*T2", &ring).unwrap(),
        parse_poly("T0^2*T1 - 5*T2^3 + 3*T1*T2^2", &ring).unwrap(),
    ];
    let cfg = OddConfig { tol: 1e-12, ..OddConfig::default() };
    let sol = odd_system_solve(&forms, &cfg).unwrap();
    println!("point {:?}", sol.point);
    println!("residual {:e} after restart {}", sol.phi, sol.restart);
}
