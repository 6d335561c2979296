//! Jucys-Murphy elements as diagram combinations and the identities they
//! satisfy.

use temperley_lieb::jucys::{alternate_family, central_element, jm_element, shifted_jm, verify_jm_properties};

fn main() -> temperley_lieb::Result<()> {
    for i in 0..=4 {
        println!("T_{i} = {}", jm_element(4, i)?);
    }
    println!("z_4 = {}", central_element(4, 4)?);
    println!("T^(2)_3 in A_5 = {}", shifted_jm(5, 2, 3)?);
    let alt = alternate_family(5);
    println!("second recursion agrees up to T_5: {}", (0..=5).all(|i| alt[i] == jm_element(5, i).unwrap()));
    for n in 2..=6 {
        println!("{}", verify_jm_properties(n));
    }
    Ok(())
}
