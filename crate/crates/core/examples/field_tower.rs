//! Extension fields and counts of one fiber along a tower.

use std::sync::Arc;

use dwork::pointcount::{embed, field_make, tower_counts, CountOptions, FiberSpec};

fn main() -> dwork::Result<()> {
    let f9 = field_make(3, 2)?;
    println!("F_9 = F_3[x]/{:?}, generator {}", f9.modulus(), f9.generator());
    let f81 = field_make(3, 4)?;
    let a = f9.from_coeffs(&[1, 2])?;
    println!("1 + 2x in F_9 is {} in F_81", embed(&f9, &f81, a)?);

    let f = Arc::new(field_make(11, 1)?);
    let spec = FiberSpec::classical(5, f, 2)?;
    for level in tower_counts(&spec, 2, &CountOptions::default())? {
        println!(
            "q = {:<4} #Y_t = {:<8} a_q = {:?}  Weil: {:?}",
            level.spec.q(),
            level.projective_count,
            level.middle_trace,
            level.weil_bound_holds()
        );
    }

    let f3 = Arc::new(field_make(3, 1)?);
    let quartic = FiberSpec::classical(4, f3, 0)?;
    for level in tower_counts(&quartic, 3, &CountOptions::default())? {
        println!("quartic over F_{}: {}", level.spec.q(), level.projective_count);
    }
    Ok(())
}
