//! The determinant for n = 11, shape (5,1), as a p-ratio product and in
//! Z[x]. Pass `--direct` to also evaluate the 165 x 165 Gram matrix (slow).

use temperley_lieb::gramdet::{
    branching_product, closed_form_det, closed_form_product, det_report, g_factor_product, worked_example_polynomial,
};
use temperley_lieb::tableaux::Partition;

fn main() -> temperley_lieb::Result<()> {
    let lambda = Partition::new(5, 1);
    for j in 0..5 {
        let mu = Partition::new(j, 11 - 2 * j);
        println!("g({lambda}, {mu}) = {}", g_factor_product(lambda, mu)?);
    }
    println!("closed:    {}", closed_form_product(lambda));
    println!("branching: {}", branching_product(lambda));
    let det = closed_form_det(lambda);
    println!("equals p_7 (p_3 - 2p_1)^10 p_5^43 (p_3 - p_1)^100 p_3^131: {}", det.as_poly() == Some(&worked_example_polynomial()));
    println!("degree {}", det.num().degree().unwrap_or(0));
    if std::env::args().any(|a| a == "--direct") {
        let r = det_report(lambda, 64, true)?;
        println!("direct route agrees: {}", r.agree);
    }
    Ok(())
}
