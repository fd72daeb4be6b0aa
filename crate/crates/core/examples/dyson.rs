//! The Dyson constant term by three independent routes.

use nullkit::combnull::{dyson_closed_form, dyson_coefficient, dyson_via_kp};

fn main() {
    for alpha in [vec![1, 1], vec![2, 1], vec![2, 2, 2], vec![1, 2, 3]] {
        let r = dyson_coefficient(&alpha).unwrap();
        let kp = dyson_via_kp(&alpha).unwrap();
        let closed = dyson_closed_form(&alpha).unwrap();
        println!("alpha {alpha:?}: expansion {}  grid formula {kp}  multinomial {closed}  equal {}", r.c, r.equal);
    }
}
