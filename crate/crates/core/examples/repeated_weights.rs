//! Classes whose Hodge-Tate weights repeat.

use dwork::charcomb::WeightVector;
use dwork::hodge::{classical_repeat_witness, repeated_ht_scan, weighted_repeat_witness, witness_census, Semantics};

fn main() -> dwork::Result<()> {
    let quintic = WeightVector::classical(5)?;
    println!("N = 5: {} classes with a repeat", repeated_ht_scan(&quintic, Semantics::Set).len());

    for n in [6, 8, 9, 10] {
        let r = classical_repeat_witness(n)?;
        println!("N = {n}: {} has weight {} x{}", r.class, r.repeated_value, r.multiplicity);
        for u in &r.witnesses {
            println!("    {u}");
        }
    }

    let w = WeightVector::new(vec![3, 3, 0, 0, 0, 0])?;
    let r = weighted_repeat_witness(&w)?;
    println!("W = (3,3,0,0,0,0): {} via {:?}, weights {:?}", r.class, r.method, r.weights.weights);

    for n in 3..=6 {
        let census = witness_census(n);
        let ok = census.iter().filter(|(_, r, confirmed)| r.is_ok() && *confirmed).count();
        println!("N = {n}: {ok} of {} non-classical weights have a confirmed witness", census.len());
        for (w, r, _) in census.iter().filter(|(_, r, _)| r.is_err()) {
            println!("    {:?}: {}", w.entries(), r.as_ref().unwrap_err());
        }
    }
    Ok(())
}
