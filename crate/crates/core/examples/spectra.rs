//! Triangular action of the Jucys-Murphy elements on cell modules, their
//! eigenvalues r_t(k), and the separation of tableaux by those values.

use temperley_lieb::cellmod::CellModule;
use temperley_lieb::exactring::IntPoly;
use temperley_lieb::jucys::{jm_matrices, separation_check, spectrum_table, triangular_action_check};
use temperley_lieb::tableaux::{partitions_of, Partition};

fn main() {
    let lambda = Partition::new(1, 1);
    let (ts, _) = jm_matrices::<IntPoly>(&CellModule::new(lambda));
    println!("T_3 on C^{lambda}: {:?}", ts[3].to_rows().iter().map(|r| r.iter().map(|p| p.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());

    let table = spectrum_table(Partition::new(2, 1));
    for row in &table.rows {
        let r: Vec<String> = row.r.iter().map(|p| p.to_string()).collect();
        println!("{:?}: r = [{}]", row.tableau, r.join(", "));
    }
    for n in 1..=7 {
        for lambda in partitions_of(n) {
            println!("{}", triangular_action_check(lambda));
        }
    }
    for n in 1..=10 {
        println!("{}", separation_check(n));
    }
}
