//! Poincaré series, dimension and multiplicity of graded quotients.

use nullkit::graded::{
    dim_mult, format_laurent, hilbert_samuel, hilbert_samuel_polynomial, series_monomial_quotient, series_poly_ring,
    series_quot_regular, GradedSeries,
};
use nullkit::poly::Monomial;

fn report(name: &str, s: &GradedSeries) {
    let dm = dim_mult(s);
    let dims: Vec<String> = s.dims(8).iter().map(ToString::to_string).collect();
    let h: Vec<String> = (0..=8).map(|m| hilbert_samuel(s, m).to_string()).collect();
    let hp = hilbert_samuel_polynomial(s);
    println!("{name}");
    println!("  series  ({}) / (1 - Z)^{}", format_laurent(s.numerator()), s.denom_power());
    println!("  pd {}  e {:?}  total {:?}", dm.pd, dm.mult, dm.total_dimension);
    println!("  dims    {}", dims.join(" "));
    println!("  h(m)    {}", h.join(" "));
    println!("  H = {:?} from m = {}", hp.e, hp.valid_from);
}

fn main() {
    report("K[T0,T1,T2]", &series_poly_ring(3));

    let ci = series_quot_regular(&series_quot_regular(&series_poly_ring(3), 2).unwrap(), 3).unwrap();
    report("complete intersection of degrees 2, 3 in K[T0,T1,T2]", &ci);

    let staircase = [Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1])];
    report("K[T0,T1]/(T0^2, T0*T1)", &series_monomial_quotient(2, &staircase).unwrap());
}
