use std::sync::Arc;

use super::fiber::{projective_size, FiberCount, FiberSpec};
use super::field::{field_make, Elem, FiniteField};
use super::naive::count_projective_naive;
use super::CountOptions;
use crate::error::{Error, Result};

/// Embeds an element of `small` into `large`, where `large` is an extension
/// of `small` over the same prime, by sending the generator of `small` to a
/// root of its defining polynomial in `large`.
pub fn embed(small: &FiniteField, large: &FiniteField, a: Elem) -> Result<Elem> {
    if small.characteristic() != large.characteristic() || !large.degree().is_multiple_of(small.degree()) {
        return Err(Error::Unsupported("fields are not nested".into()));
    }
    if small.is_prime_field() {
        return Ok(a);
    }
    let modulus = small.modulus();
    let eval = |x: Elem| modulus.iter().rev().fold(0, |acc, &c| large.add(large.mul(acc, x), large.from_int(c as i64)));
    let root = (0..large.order())
        .find(|&x| eval(x) == 0)
        .ok_or_else(|| Error::Unsupported("defining polynomial has no root in the extension".into()))?;
    let mut acc = 0;
    let mut power = 1;
    for c in small.coeffs(a) {
        acc = large.add(acc, large.mul(large.from_int(c as i64), power));
        power = large.mul(power, root);
    }
    Ok(acc)
}

/// Total candidates the naive counter visits over levels `1..=m_max`.
pub fn tower_cost(spec: &FiberSpec, m_max: u32) -> u64 {
    let q = spec.q();
    (1..=m_max)
        .map(|m| match q.checked_pow(m) {
            Some(qm) => projective_size(qm, spec.n()),
            None => u64::MAX,
        })
        .fold(0u64, |acc, c| acc.saturating_add(c))
}

/// Counts of the same fiber over `F_{q^m}` for `m = 1..=m_max`.
pub fn tower_counts(spec: &FiberSpec, m_max: u32, options: &CountOptions) -> Result<Vec<FiberCount>> {
    if m_max == 0 {
        return Err(Error::InvalidDegree);
    }
    let required = tower_cost(spec, m_max);
    if required > options.budget {
        return Err(Error::BudgetExceeded { required, budget: options.budget });
    }
    let base = spec.field();
    let mut out = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        let level = if m == 1 {
            spec.clone()
        } else {
            let large = Arc::new(field_make(base.characteristic() as u64, base.degree() * m)?);
            let t = embed(base, &large, spec.t())?;
            FiberSpec::new(spec.weight().clone(), large, t)?
        };
        out.push(count_projective_naive(&level, options)?);
    }
    Ok(out)
}
