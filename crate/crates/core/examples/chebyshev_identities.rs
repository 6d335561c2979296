//! The sequence p_0 = 0, p_1 = 1, p_{i+1} = x p_i - p_{i-1} and its
//! product and telescoping identities.

use temperley_lieb::exactring::{check_p_identities, p};

fn main() {
    for i in 0..=8 {
        println!("p_{i} = {}", p(i));
    }
    println!("{}", check_p_identities(20));
}
