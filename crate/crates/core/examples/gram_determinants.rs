//! Gram determinants by Bareiss elimination, the branching law and the
//! closed product formula.

use temperley_lieb::gramdet::{closed_form_product, det_report};
use temperley_lieb::tableaux::partitions_of;

fn main() -> temperley_lieb::Result<()> {
    let max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    for n in 1..=max {
        for lambda in partitions_of(n) {
            let r = det_report(lambda, 64, true)?;
            println!("n = {n}, {lambda}: {} = {}  [agree: {}]", closed_form_product(lambda), r.closed, r.agree);
        }
    }
    Ok(())
}
