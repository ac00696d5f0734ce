//! Classes of `(Z/NZ)_0^N / <W>` and their permutation orbits.
//!
//! cargo run --example classes_and_orbits -- 5

use dwork::charcomb::{class_count, enumerate_classes, sn_orbits, CharClass, Permutation, WeightVector};

fn main() -> dwork::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let w = WeightVector::classical(n)?;
    println!("N = {n}: {} classes", class_count(&w));

    let first: Vec<_> = enumerate_classes(&w).into_iter().take(6).collect();
    for c in &first {
        println!("  {c}  coset size {}", c.coset_elements().len());
    }

    for orbit in sn_orbits(n)? {
        println!("orbit of {}: {} classes", orbit.normal_form, orbit.size());
    }

    // swapping two coordinates preserves the classical weight
    if n >= 2 {
        let c = CharClass::classical(&vec![0; n as usize])?;
        let swapped = c.permuted(&Permutation::transposition(n as usize, 0, 1)?)?;
        assert_eq!(c, swapped);
    }

    let skew = WeightVector::new(vec![3, 3, 0, 0, 0, 0])?;
    println!("W = {:?}: ord(W) = {}, {} classes", skew.entries(), skew.order(), class_count(&skew));
    Ok(())
}
