//! Direct enumeration of points.

use std::time::Instant;

use rayon::prelude::*;

use super::fiber::{FiberCount, FiberSpec, Strategy};
use super::field::{Elem, FiniteField};
use super::{run_in_pool, CountOptions};
use crate::error::{Error, Result};

/// `x -> x^N` and `x -> x^{w_i}` for every element.
struct PowerTables {
    pow_n: Vec<Elem>,
    mono: Vec<Vec<Elem>>,
}

impl PowerTables {
    fn new(spec: &FiberSpec) -> Self {
        let f = spec.field();
        let q = f.order();
        let n = spec.n() as u64;
        let pow_n = (0..q).map(|x| f.pow(x, n)).collect();
        let mono = spec.weight().entries().iter().map(|&w| (0..q).map(|x| f.pow(x, w as u64)).collect()).collect();
        PowerTables { pow_n, mono }
    }
}

/// Counts tails `(x_pos, ..., x_{N-1})` with `sum + sum x_i^N == prod * prod x_i^{w_i}`.
fn count_tail(f: &FiniteField, tables: &PowerTables, pos: usize, sum: Elem, prod: Elem) -> u64 {
    let n = tables.mono.len();
    let q = f.order();
    if pos == n {
        return (sum == prod) as u64;
    }
    let mono = &tables.mono[pos];
    if pos == n - 1 {
        let mut hits = 0;
        for x in 0..q as usize {
            if f.add(sum, tables.pow_n[x]) == f.mul(prod, mono[x]) {
                hits += 1;
            }
        }
        return hits;
    }
    (0..q as usize).map(|x| count_tail(f, tables, pos + 1, f.add(sum, tables.pow_n[x]), f.mul(prod, mono[x]))).sum()
}

fn par_count_tail(f: &FiniteField, tables: &PowerTables, pos: usize, sum: Elem, prod: Elem) -> u64 {
    let n = tables.mono.len();
    if pos + 1 >= n {
        return count_tail(f, tables, pos, sum, prod);
    }
    let mono = &tables.mono[pos];
    (0..f.order() as usize)
        .into_par_iter()
        .map(|x| count_tail(f, tables, pos + 1, f.add(sum, tables.pow_n[x]), f.mul(prod, mono[x])))
        .sum()
}

fn check_budget(required: u64, options: &CountOptions) -> Result<()> {
    if required > options.budget {
        return Err(Error::BudgetExceeded { required, budget: options.budget });
    }
    Ok(())
}

/// Iterates every point of `P^{N-1}(F_q)` written with its first nonzero
/// coordinate equal to 1 and counts the zeros of the defining form. Works for
/// any weight and any field.
pub fn count_projective_naive(spec: &FiberSpec, options: &CountOptions) -> Result<FiberCount> {
    check_budget(spec.projective_size(), options)?;
    let start = Instant::now();
    let f = spec.field();
    let tables = PowerTables::new(spec);
    let n = spec.n() as usize;
    let c = spec.scaled_t();
    let count = run_in_pool(options.workers, || {
        let mut total = 0;
        // leading coordinate at position `lead`, zeros before it
        let mut prefix_prod = c;
        for lead in 0..n {
            let prod = f.mul(prefix_prod, tables.mono[lead][1]);
            total += par_count_tail(f, &tables, lead + 1, 1, prod);
            prefix_prod = f.mul(prefix_prod, tables.mono[lead][0]);
        }
        total
    })?;
    Ok(FiberCount::new(spec.clone(), count, Strategy::Naive, start.elapsed()))
}

/// Number of solutions in `F_q^N`, origin included.
pub fn count_affine_cone(spec: &FiberSpec, options: &CountOptions) -> Result<u64> {
    let q = spec.q() as u128;
    let required = u64::try_from(q.pow(spec.n())).unwrap_or(u64::MAX);
    check_budget(required, options)?;
    let tables = PowerTables::new(spec);
    run_in_pool(options.workers, || par_count_tail(spec.field(), &tables, 0, 0, spec.scaled_t()))
}

/// Normalized points of the fiber, in enumeration order, at most `limit`.
pub fn fiber_points(spec: &FiberSpec, limit: Option<usize>, options: &CountOptions) -> Result<Vec<Vec<Elem>>> {
    check_budget(spec.projective_size(), options)?;
    let f = spec.field();
    let n = spec.n() as usize;
    let q = f.order();
    let limit = limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    let mut point = vec![0; n];
    for lead in 0..n {
        let tail = n - lead - 1;
        for index in 0..(q as u64).pow(tail as u32) {
            point.iter_mut().for_each(|x| *x = 0);
            point[lead] = 1;
            let mut rest = index;
            for slot in point[lead + 1..].iter_mut().rev() {
                *slot = (rest % q as u64) as Elem;
                rest /= q as u64;
            }
            if spec.evaluate(&point) == 0 {
                out.push(point.clone());
                if out.len() >= limit {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// Rescales a point so that its first nonzero coordinate is 1.
pub fn normalize(f: &FiniteField, x: &[Elem]) -> Option<Vec<Elem>> {
    let lead = *x.iter().find(|&&v| v != 0)?;
    let inv = f.inv(lead)?;
    Some(x.iter().map(|&v| f.mul(v, inv)).collect())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::field::field_make;
    use super::*;

    #[test]
    fn fermat_cubic_over_f7() {
        // x^3 + y^3 + z^3 = 0 over F_7 (t = 0): 9 points
        let f = Arc::new(field_make(7, 1).unwrap());
        let spec = FiberSpec::classical(3, f, 0).unwrap();
        let count = count_projective_naive(&spec, &CountOptions::default()).unwrap();
        assert_eq!(count.projective_count, 9);
        assert_eq!(fiber_points(&spec, None, &CountOptions::default()).unwrap().len(), 9);
    }

    #[test]
    fn cone_matches_projective() {
        let f = Arc::new(field_make(11, 1).unwrap());
        for t in [0, 2, 3, 7] {
            let spec = FiberSpec::classical(4, f.clone(), t).unwrap();
            let opts = CountOptions::default();
            let proj = count_projective_naive(&spec, &opts).unwrap().projective_count;
            let cone = count_affine_cone(&spec, &opts).unwrap();
            assert_eq!((cone - 1) % 10, 0);
            assert_eq!((cone - 1) / 10, proj);
        }
    }

    #[test]
    fn points_are_normalized_and_on_the_fiber() {
        let f = Arc::new(field_make(11, 1).unwrap());
        let spec = FiberSpec::classical(5, f.clone(), 2).unwrap();
        let opts = CountOptions::default();
        let pts = fiber_points(&spec, None, &opts).unwrap();
        assert_eq!(pts.len() as u64, count_projective_naive(&spec, &opts).unwrap().projective_count);
        for p in &pts {
            assert_eq!(spec.evaluate(p), 0);
            assert_eq!(normalize(&f, p).as_ref(), Some(p));
        }
        assert_eq!(fiber_points(&spec, Some(7), &opts).unwrap().len(), 7);
    }

    #[test]
    fn budget_refusal() {
        let f = Arc::new(field_make(11, 1).unwrap());
        let spec = FiberSpec::classical(5, f, 2).unwrap();
        let opts = CountOptions { budget: 1000, ..CountOptions::default() };
        assert_eq!(
            count_projective_naive(&spec, &opts).unwrap_err(),
            Error::BudgetExceeded { required: 16105, budget: 1000 }
        );
    }
}
