//! Points on one fiber over a prime field, both counters, and the trace.
//!
//! cargo run --release --example point_count -- 11 2

use std::sync::Arc;

use dwork::pointcount::{count_projective_fast, count_projective_naive, field_make, CountOptions, FiberSpec};

fn main() -> dwork::Result<()> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(11);
    let t: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let f = Arc::new(field_make(p, 1)?);
    let opts = CountOptions::default();

    let spec = match FiberSpec::classical(5, f.clone(), t) {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("t = {t}: {e}");
            return Ok(());
        }
    };
    let naive = count_projective_naive(&spec, &opts)?;
    let fast = count_projective_fast(&spec, &opts)?;
    println!("naive {} in {:?}", naive.projective_count, naive.elapsed);
    println!("fast  {} in {:?}", fast.projective_count, fast.elapsed);
    println!("a_q = {:?}, Weil bound holds: {:?}", fast.middle_trace, fast.weil_bound_holds());

    println!("smooth parameters over F_{p}:");
    for t in 0..p as u32 {
        match FiberSpec::classical(5, f.clone(), t) {
            Ok(s) => println!("  t = {t:<3} #Y_t = {}", count_projective_fast(&s, &opts)?.projective_count),
            Err(e) => println!("  t = {t:<3} {e}"),
        }
    }
    Ok(())
}
