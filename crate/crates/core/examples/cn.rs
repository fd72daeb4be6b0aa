//! Grid membership, a nonvanishing point, and a top coefficient read from grid values.

use nullkit::coeff::FieldSpec;
use nullkit::combnull::{cn_membership, cn_witness, kp_coefficient};
use nullkit::parse::parse_poly;
use nullkit::poly::{GridSpec, Monomial, Ring};

fn main() {
    let ring = Ring::new(FieldSpec::prime(7).unwrap(), ["x", "y"]).unwrap();
    let grid = GridSpec::from_i64(ring.field(), &[&[0, 1, 2], &[1, 3]]).unwrap();

    let g = parse_poly("x*(x - 1)*(x - 2)*y", &ring).unwrap();
    println!("x(x-1)(x-2)y vanishes on the grid: {}", cn_membership(&g, &grid).unwrap());

    let f = parse_poly("x^2*y + 3*x*y + x + 5", &ring).unwrap();
    println!("f vanishes on the grid: {}", cn_membership(&f, &grid).unwrap());
    let pt = cn_witness(&f, &[2, 1], &grid).unwrap();
    println!("f is nonzero at ({}, {})", pt[0], pt[1]);

    let c = kp_coefficient(&f, &[2, 1], &grid).unwrap();
    println!("coefficient of x^2*y from grid values: {c} (direct: {})", f.coeff(&Monomial::new(vec![2, 1])));
}
