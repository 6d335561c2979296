//! The Murphy cellular basis: every basis element is a single diagram.

use temperley_lieb::murphy::{m_lambda_word, murphy_bijection, star_symmetry_check, v_word, MurphyIndex};
use temperley_lieb::tableaux::{partitions_of, tableaux};

fn main() -> temperley_lieb::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for lambda in partitions_of(n) {
        println!("{lambda}: m_lambda = {:?}", m_lambda_word(lambda).letters);
        for t in tableaux(lambda).iter() {
            println!("  v_t for {:?} = {:?}", t.fseq(), v_word(t).letters);
        }
        let list = tableaux(lambda);
        let idx = MurphyIndex::new(list[list.len() - 1].clone(), list[0].clone())?;
        let (d, loops) = idx.word().diagram();
        println!("  {idx} = {d} (loops {loops})");
    }
    let basis = murphy_bijection(n)?;
    println!("{} distinct loop-free basis diagrams", basis.len());
    println!("{}", star_symmetry_check(n));
    Ok(())
}
