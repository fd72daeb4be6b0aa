//! Restricted and ordinary sumsets in Z/p against their lower bounds.

use nullkit::combnull::{restricted_sumset, sumset, SumsetInstance};

fn main() {
    let cases =
        [(7, vec![0, 1, 2], vec![0, 1, 2]), (11, vec![1, 4, 9], vec![2, 3]), (5, vec![0, 1, 2, 3], vec![1, 2, 3])];
    for (p, m, n) in cases {
        let inst = SumsetInstance::new(p, m.clone(), n.clone()).unwrap();
        let r = restricted_sumset(&inst);
        let s = sumset(&inst);
        println!("p = {p}, M = {m:?}, N = {n:?}");
        println!("  M + N      = {:?}  (|.| = {}, bound {}, holds {})", s.set, s.set.len(), s.bound, s.holds);
        println!("  M +' N     = {:?}  (|.| = {}, bound {}, holds {})", r.set, r.set.len(), r.bound, r.holds);
    }
}
