//! The diagonal group maps each fiber to itself.

use std::sync::Arc;

use dwork::pointcount::{
    field_make, gamma_w_elements, group_action_check_all, roots_of_unity, CountOptions, FiberSpec,
};

fn main() -> dwork::Result<()> {
    let f = Arc::new(field_make(11, 1)?);
    println!("mu_5 in F_11: {:?}", roots_of_unity(&f, 5)?);
    for t in 0..11 {
        let Ok(spec) = FiberSpec::classical(5, f.clone(), t) else { continue };
        let gammas = gamma_w_elements(&spec)?;
        let ok = group_action_check_all(&spec, &gammas[1..], &CountOptions::default())?;
        println!("t = {t:<2} {} nontrivial elements, stable: {ok}", gammas.len() - 1);
    }
    Ok(())
}
