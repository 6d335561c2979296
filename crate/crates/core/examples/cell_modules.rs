//! Cell modules as link states: generator actions, the Gram matrix and the
//! restriction filtration.

use temperley_lieb::cellmod::{module_structure_check, restriction_filtration_check, CellModule, CellVector};
use temperley_lieb::exactring::IntPoly;
use temperley_lieb::tableaux::{partitions_of, Partition};

fn main() -> temperley_lieb::Result<()> {
    let lambda = Partition::new(1, 2);
    let module = CellModule::new(lambda);
    println!("C^{lambda}, dimension {}", module.dim());
    for (t, s) in module.basis().iter().zip(module.states()) {
        println!("  m{:?}  link state {}", t.fseq(), serde_json::to_string(s).unwrap());
    }
    for k in 1..lambda.n() {
        let action = module.generator_action(k)?;
        println!("e_{k}: {action:?}");
    }
    let v: CellVector<IntPoly> = CellVector::basis_vector(lambda, 1);
    println!("m_1 e_1 = {}", serde_json::to_string(&module.act_generator(&v, 1)?).unwrap());
    println!("Gram matrix:\n{}", module.gram_matrix());

    for n in 1..=6 {
        for lambda in partitions_of(n) {
            let mut r = module_structure_check(lambda);
            r.absorb(restriction_filtration_check(lambda));
            println!("{r}");
        }
    }
    Ok(())
}
