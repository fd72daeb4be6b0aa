//! Eliminate `y` from two plane curves and read off the common x-coordinates.

use nullkit::coeff::FieldSpec;
use nullkit::parse::{format_poly, parse_poly};
use nullkit::poly::{resultant, sylvester_matrix, Ring};

fn main() {
    let ring = Ring::new(FieldSpec::Rationals, ["x", "y"]).unwrap();
    let circle = parse_poly("x^2 + y^2 - 5", &ring).unwrap();
    let line = parse_poly("y - x - 1", &ring).unwrap();

    let s = sylvester_matrix(&circle, &line, 1).unwrap();
    println!("Sylvester matrix in y is {}x{}", s.rows(), s.cols());

    let r = resultant(&circle, &line, 1).unwrap();
    println!("Res_y = {}", format_poly(&r));
    // 2x^2 + 2x - 4 = 2(x - 1)(x + 2): intersections at x = 1 and x = -2
}
