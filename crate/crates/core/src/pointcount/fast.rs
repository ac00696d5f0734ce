//! Stratified counter for the classical weight over prime fields.
//!
//! A projective point either has a zero coordinate, in which case the
//! monomial vanishes and only the diagonal equation on its support matters,
//! or lies in the torus, where we fix `x_N = 1` and solve for `x_1` through a
//! table lookup.

use std::time::Instant;

use rayon::prelude::*;

use super::fiber::{FiberCount, FiberSpec, Strategy};
use super::field::{Elem, FiniteField};
use super::{run_in_pool, CountOptions};
use crate::error::{Error, Result};

/// Largest prime for which the `q x q` solution table is built.
pub const MAX_FAST_PRIME: u32 = 4096;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `D(s)` for `s = 0..=max`: solutions of `x_1^N + ... + x_s^N = 0` with
/// every `x_i` nonzero, via repeated additive convolution of
/// `r(a) = #{x != 0 : x^N = a}`.
fn diagonal_zero_counts(f: &FiniteField, pow_n: &[Elem], max: usize) -> Vec<u64> {
    let q = f.order() as usize;
    let mut r = vec![0u64; q];
    for &y in &pow_n[1..] {
        r[y as usize] += 1;
    }
    let support: Vec<(usize, u64)> = r.iter().enumerate().filter(|(_, &c)| c > 0).map(|(a, &c)| (a, c)).collect();
    let mut dist = vec![0u64; q];
    dist[0] = 1;
    let mut out = vec![1u64];
    for _ in 0..max {
        let mut next = vec![0u64; q];
        for (a, &da) in dist.iter().enumerate() {
            if da == 0 {
                continue;
            }
            for &(b, cb) in &support {
                let s = f.add(a as Elem, b as Elem) as usize;
                next[s] += da * cb;
            }
        }
        dist = next;
        out.push(dist[0]);
    }
    out
}

/// `table[c * q + a] = #{x != 0 : x^N - c x = a}`.
fn solution_table(f: &FiniteField, pow_n: &[Elem]) -> Vec<u16> {
    let q = f.order() as usize;
    let mut table = vec![0u16; q * q];
    for x in 1..q {
        let xn = pow_n[x];
        for c in 0..q {
            let a = f.sub(xn, f.mul(c as Elem, x as Elem)) as usize;
            table[c * q + a] += 1;
        }
    }
    table
}

struct Torus<'a> {
    f: &'a FiniteField,
    pow_n: &'a [Elem],
    table: &'a [u16],
    /// Number of free middle coordinates `x_2, ..., x_{N-1}`.
    middle: usize,
}

impl Torus<'_> {
    fn walk(&self, depth: usize, sum: Elem, prod: Elem) -> u64 {
        let q = self.f.order() as usize;
        if depth == self.middle {
            let a = self.f.neg(sum) as usize;
            return self.table[prod as usize * q + a] as u64;
        }
        (1..q).map(|x| self.walk(depth + 1, self.f.add(sum, self.pow_n[x]), self.f.mul(prod, x as Elem))).sum()
    }

    fn par_walk(&self, sum: Elem, prod: Elem) -> u64 {
        if self.middle == 0 {
            return self.walk(0, sum, prod);
        }
        let q = self.f.order() as usize;
        (1..q).into_par_iter().map(|x| self.walk(1, self.f.add(sum, self.pow_n[x]), self.f.mul(prod, x as Elem))).sum()
    }
}

/// Whether [`count_projective_fast`] accepts the fiber at all.
pub fn fast_counter_supports(spec: &FiberSpec) -> bool {
    let f = spec.field();
    spec.weight().is_classical() && f.is_prime_field() && f.order() <= MAX_FAST_PRIME
}

pub fn count_projective_fast(spec: &FiberSpec, options: &CountOptions) -> Result<FiberCount> {
    if !spec.weight().is_classical() {
        return Err(Error::Unsupported("the stratified counter needs the classical weight".into()));
    }
    let f = spec.field();
    if !f.is_prime_field() {
        return Err(Error::Unsupported("the stratified counter needs a prime field".into()));
    }
    if f.order() > MAX_FAST_PRIME {
        return Err(Error::Unsupported(format!("the stratified counter supports q <= {MAX_FAST_PRIME}")));
    }
    let n = spec.n() as usize;
    let q = f.order() as u64;
    let required = (q - 1).pow(n.saturating_sub(2) as u32) + q * q;
    if required > options.budget {
        return Err(Error::BudgetExceeded { required, budget: options.budget });
    }
    let start = Instant::now();
    let pow_n: Vec<Elem> = (0..f.order()).map(|x| f.pow(x, n as u64)).collect();

    // points with exact support of size s < N
    let diag = diagonal_zero_counts(f, &pow_n, n - 1);
    let mut boundary = 0u64;
    for (s, &d) in diag.iter().enumerate().skip(1) {
        debug_assert_eq!(d % (q - 1), 0);
        boundary += binomial(n as u64, s as u64) * (d / (q - 1));
    }

    // torus: x_N = 1, x_2..x_{N-1} free, x_1 from the table
    let table = solution_table(f, &pow_n);
    let torus = Torus { f, pow_n: &pow_n, table: &table, middle: n - 2 };
    let interior = run_in_pool(options.workers, || torus.par_walk(1, spec.scaled_t()))?;

    Ok(FiberCount::new(spec.clone(), boundary + interior, Strategy::Fast, start.elapsed()))
}
