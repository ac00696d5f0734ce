//! The diagonal group `Gamma_W = {(zeta_i) in mu_N^N : prod zeta_i^{w_i} = 1}`
//! acting on fibers by scaling coordinates.

use super::fiber::FiberSpec;
use super::field::{Elem, FiniteField};
use super::naive::{fiber_points, normalize};
use super::CountOptions;
use crate::error::{Error, Result};

/// `mu_N` in `F_q` as powers of a fixed primitive `N`-th root, `zeta^0` first.
pub fn roots_of_unity(f: &FiniteField, n: u32) -> Result<Vec<Elem>> {
    let q = f.order() as u64;
    if !(q - 1).is_multiple_of(n as u64) {
        return Err(Error::RootsOfUnityMissing { q, n });
    }
    let zeta = f.pow(f.generator(), (q - 1) / n as u64);
    let mut out = Vec::with_capacity(n as usize);
    let mut x = 1;
    for _ in 0..n {
        out.push(x);
        x = f.mul(x, zeta);
    }
    Ok(out)
}

/// Representatives of `Gamma_W / Delta`: exponent vectors with last entry 0
/// and `sum e_i w_i = 0 mod N`, in lexicographic order of exponents. The
/// identity comes first.
pub fn gamma_w_elements(spec: &FiberSpec) -> Result<Vec<Vec<Elem>>> {
    let n = spec.n();
    let mu = roots_of_unity(spec.field(), n)?;
    let w = spec.weight().entries();
    let len = n as usize;
    let mut out = Vec::new();
    let free = (n as u64).pow(n - 1);
    for index in 0..free {
        let mut exps = vec![0u64; len];
        let mut rest = index;
        for slot in exps[..len - 1].iter_mut().rev() {
            *slot = rest % n as u64;
            rest /= n as u64;
        }
        let relation: u64 = exps.iter().zip(w).map(|(&e, &wi)| e * wi as u64).sum();
        if relation.is_multiple_of(n as u64) {
            out.push(exps.iter().map(|&e| mu[e as usize]).collect());
        }
    }
    Ok(out)
}

fn validate_gamma(spec: &FiberSpec, gamma: &[Elem]) -> Result<()> {
    let f = spec.field();
    let n = spec.n();
    let q = f.order() as u64;
    if !(q - 1).is_multiple_of(n as u64) {
        return Err(Error::RootsOfUnityMissing { q, n });
    }
    if gamma.len() != n as usize {
        return Err(Error::LengthMismatch { expected: n as usize, found: gamma.len() });
    }
    if gamma.iter().any(|&z| z as u64 >= q || z == 0 || f.pow(z, n as u64) != 1) {
        return Err(Error::NotRootOfUnity(gamma.to_vec()));
    }
    let relation = gamma.iter().zip(spec.weight().entries()).fold(1, |acc, (&z, &w)| f.mul(acc, f.pow(z, w as u64)));
    if relation != 1 {
        return Err(Error::WeightRelation);
    }
    Ok(())
}

/// Checks that `gamma` maps the sampled points of `Y_t(F_q)` (all of them
/// when `sample` is `None`) back onto the fiber, and that the diagonal
/// `mu_N` fixes every sampled projective point.
pub fn group_action_check(
    spec: &FiberSpec,
    gamma: &[Elem],
    sample: Option<usize>,
    options: &CountOptions,
) -> Result<bool> {
    validate_gamma(spec, gamma)?;
    let points = fiber_points(spec, sample, options)?;
    action_preserves(spec, &[gamma.to_vec()], &points)
}

/// Same check for many group elements against one enumeration of points.
pub fn group_action_check_all(spec: &FiberSpec, gammas: &[Vec<Elem>], options: &CountOptions) -> Result<bool> {
    for g in gammas {
        validate_gamma(spec, g)?;
    }
    let points = fiber_points(spec, None, options)?;
    action_preserves(spec, gammas, &points)
}

fn action_preserves(spec: &FiberSpec, gammas: &[Vec<Elem>], points: &[Vec<Elem>]) -> Result<bool> {
    let f = spec.field();
    let mu = roots_of_unity(f, spec.n())?;
    for x in points {
        for gamma in gammas {
            let image: Vec<Elem> = x.iter().zip(gamma).map(|(&xi, &z)| f.mul(xi, z)).collect();
            if spec.evaluate(&image) != 0 {
                return Ok(false);
            }
        }
        for &zeta in &mu {
            let scaled: Vec<Elem> = x.iter().map(|&xi| f.mul(xi, zeta)).collect();
            if normalize(f, &scaled).as_deref() != Some(x.as_slice()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
