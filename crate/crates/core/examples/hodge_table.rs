//! Dimensions and Hodge-Tate weights of the eigenspaces, with duals.

use dwork::charcomb::{sn_orbits, CharClass, WeightVector};
use dwork::hodge::{dual_class, hodge_data, relabel_invariance_report, total_dimension, Semantics};

fn main() -> dwork::Result<()> {
    let w = WeightVector::classical(5)?;
    println!("{:<16} {:>5} {:>4}  HT", "v", "orbit", "dim");
    for orbit in sn_orbits(5)? {
        let c = CharClass::new(&w, &orbit.normal_form)?;
        let h = hodge_data(&c, Semantics::Set);
        println!("{:<16} {:>5} {:>4}  {:?}", c.to_string(), orbit.size(), h.dimension, h.weights);
    }
    println!("total dimension {}", total_dimension(&w));

    let c = CharClass::classical(&[0, 0, 1, 1, 3])?;
    let h = hodge_data(&c, Semantics::Set);
    for u in &h.representatives {
        println!("  totally nonzero {u}");
    }
    let d = dual_class(&c);
    println!("dual {d}: {:?}", hodge_data(&d, Semantics::Set).weights);
    println!("unchanged under every unit relabelling: {}", relabel_invariance_report(&c));

    // ord(W) = 2 < N: the two readings of the coset disagree
    let skew = WeightVector::new(vec![3, 3, 0, 0, 0, 0])?;
    let c = CharClass::new(&skew, &dwork::charcomb::ResidueVector::new(6, vec![1; 6])?)?;
    println!(
        "{c} under W = (3,3,0,0,0,0): set {:?}, indexed {:?}",
        hodge_data(&c, Semantics::Set).weights,
        hodge_data(&c, Semantics::Indexed).weights
    );
    Ok(())
}
