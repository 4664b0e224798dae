//! Finite fields: deterministic GF(p^t) construction, arithmetic, color
//! sets of k-th roots of unity, and the two zero tests.
//!
//! Run with: cargo run --example finite_fields

use orichrome::field::Field;
use orichrome::poly::Polynomial;

fn main() {
    println!("--- construction ---");
    for (p, t) in [(2, 2), (7, 1), (5, 2), (2, 3)] {
        println!("{}", Field::new(p, t).unwrap());
    }

    println!("\n--- GF(4) multiplication table ---");
    let gf4 = Field::new(2, 2).unwrap();
    for a in gf4.elements() {
        let row: Vec<String> = gf4
            .elements()
            .map(|b| gf4.mul(&a, &b).unwrap().to_string())
            .collect();
        println!("  {}", row.join(" | "));
    }
    let g = gf4.element(&[0, 1]).unwrap();
    println!("g * g = {} (the modulus at work)", gf4.mul(&g, &g).unwrap());

    println!("\n--- Frobenius: a^q = a ---");
    for (p, t) in [(3, 1), (2, 3), (5, 1), (3, 2)] {
        let f = Field::new(p, t).unwrap();
        let holds = f.elements().all(|a| f.pow(&a, f.order()).unwrap() == a);
        println!("q = {:>3}: {}", f.order(), holds);
    }

    println!("\n--- color sets ---");
    // with q = mk + 1, the image of x -> x^m is exactly the k-th roots of
    // unity: a k-element palette inside the field
    let gf7 = Field::new(7, 1).unwrap();
    for k in [2u32, 3, 6] {
        let colors: Vec<String> = gf7
            .color_set(k)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!("GF(7), k = {k}: {{{}}}", colors.join(", "));
    }
    let colors: Vec<String> = gf4
        .color_set(3)
        .unwrap()
        .iter()
        .map(|c| c.to_string())
        .collect();
    println!(
        "GF(4), k = 3: {{{}}} (every nonzero element)",
        colors.join(", ")
    );

    println!("\n--- identically zero vs formally zero ---");
    let gf2 = Field::new(2, 1).unwrap();
    let fermat = Polynomial::from_terms(1, [(vec![2], 1), (vec![1], 1)]).unwrap();
    println!(
        "x^2 + x over GF(2): formally nonzero, identically zero = {}",
        gf2.is_identically_zero(&fermat).unwrap()
    );
    // once every per-variable degree stays below q, the two notions agree
    let low_degree = Polynomial::from_terms(1, [(vec![1], 1), (vec![0], 1)]).unwrap();
    println!(
        "x + 1 over GF(2): degree-bounded test = {}, exhaustive test = {}",
        gf2.degree_bounded_zero_test(&low_degree).unwrap(),
        gf2.is_identically_zero(&low_degree).unwrap()
    );
    let doubled = Polynomial::from_terms(1, [(vec![1], 2)]).unwrap();
    println!(
        "2x over GF(2): coefficient vanishes in the field, zero = {}",
        gf2.degree_bounded_zero_test(&doubled).unwrap()
    );
}
