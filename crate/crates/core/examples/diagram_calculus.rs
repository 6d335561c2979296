//! Composing planar diagrams, the defining relations, and basis sizes.

use temperley_lieb::diagrams::{catalan, enumerate_diagrams, relations_check, word_diagram, PlanarDiagram, TLElement};
use temperley_lieb::exactring::IntPoly;

fn main() -> temperley_lieb::Result<()> {
    let e1 = PlanarDiagram::generator(3, 1)?;
    let e2 = PlanarDiagram::generator(3, 2)?;
    let (d, loops) = e1.compose(&e2)?;
    println!("e_1 e_2 = {d} (loops: {loops})");
    let (d, loops) = word_diagram(3, &[1, 1])?;
    println!("e_1 e_1 = x^{loops} {d}");
    println!("json: {}", serde_json::to_string(&d).unwrap());

    let a = &TLElement::<IntPoly>::generator(4, 1)? + &TLElement::generator(4, 3)?;
    println!("(e_1 + e_3)^2 = {}", &a * &a);

    for n in 2..=6 {
        println!("{}", relations_check(n));
    }
    for n in 1..=10 {
        println!("n = {n:2}: {} diagrams (Catalan {})", enumerate_diagrams(n).len(), catalan(n));
    }
    Ok(())
}
