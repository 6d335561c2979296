//! The seminormal basis over Q(x): vectors, norms and the action of e_k.

use temperley_lieb::seminormal::{seminormal_check, spectrum, SeminormalBasis};
use temperley_lieb::tableaux::{partitions_of, Partition};

fn main() -> temperley_lieb::Result<()> {
    for k in 1..=4 {
        let vals: Vec<String> = spectrum(k).values.iter().map(|p| p.to_string()).collect();
        println!("R({k}) = {{{}}}", vals.join(", "));
    }
    let lambda = Partition::new(2, 1);
    let basis = SeminormalBasis::new(lambda)?;
    for (i, t) in basis.module().basis().iter().enumerate() {
        let f: Vec<String> = basis.vector(i).support().iter().map(|(u, c)| format!("({c}) m{:?}", u.fseq())).collect();
        println!("f{:?} = {}\n    norm {}", t.fseq(), f.join(" + "), basis.pairing(i, i));
    }
    let e = basis.ek_matrix(3)?;
    for s in 0..basis.dim() {
        let row: Vec<String> = (0..basis.dim()).map(|t| e[(s, t)].to_string()).collect();
        println!("e_3 row {s}: {}", row.join("  "));
    }
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            println!("{}", seminormal_check(lambda));
        }
    }
    Ok(())
}
