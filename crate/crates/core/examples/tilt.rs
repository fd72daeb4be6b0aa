//! Make a polynomial monic in a chosen variable by a change of coordinates.

use nullkit::coeff::FieldSpec;
use nullkit::parse::{format_poly, parse_poly};
use nullkit::poly::{tilt_axes, Ring, TiltMode};

fn main() {
    let ring = Ring::new(FieldSpec::Rationals, ["x", "y"]).unwrap();
    let f = parse_poly("x*y - 1", &ring).unwrap();

    for mode in [TiltMode::Linear, TiltMode::Power] {
        let t = tilt_axes(&f, 1, mode).unwrap();
        println!("{mode:?}: {}  (degree {} in y, leading {})", format_poly(&t.tilted), t.degree, t.leading);
        let back = t.inverse.apply(&t.tilted).unwrap();
        assert_eq!(back, f);
    }
}
