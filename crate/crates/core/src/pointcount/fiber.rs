use std::sync::Arc;
use std::time::Duration;

use super::field::{Elem, FiniteField};
use crate::charcomb::{gcd, WeightVector};
use crate::error::{Error, Result};

/// Default cap on evaluated candidates per invocation.
pub const DEFAULT_BUDGET: u64 = 2_000_000_000;

/// One fiber `Y_t : sum x_i^N = N t prod x_i^{w_i}` over a finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberSpec {
    weight: WeightVector,
    t: Elem,
    field: Arc<FiniteField>,
}

impl FiberSpec {
    /// Checks that `N` is invertible in the field and that `t^N != 1`.
    pub fn new(weight: WeightVector, field: Arc<FiniteField>, t: Elem) -> Result<Self> {
        let n = weight.modulus();
        if n < 2 {
            return Err(Error::OutOfDomain("fibers need N >= 2".into()));
        }
        field.element(t as u64)?;
        if gcd(field.characteristic() as u64, n as u64) != 1 {
            return Err(Error::BadCharacteristic { q: field.order() as u64, n });
        }
        if field.pow(t, n as u64) == 1 {
            return Err(Error::SingularFiber { n });
        }
        Ok(FiberSpec { weight, t, field })
    }

    pub fn classical(n: u32, field: Arc<FiniteField>, t: Elem) -> Result<Self> {
        Self::new(WeightVector::classical(n)?, field, t)
    }

    pub fn n(&self) -> u32 {
        self.weight.modulus()
    }

    pub fn weight(&self) -> &WeightVector {
        &self.weight
    }

    pub fn t(&self) -> Elem {
        self.t
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    /// `N t` as a field element.
    pub(crate) fn scaled_t(&self) -> Elem {
        let f = &self.field;
        f.mul(f.from_int(self.n() as i64), self.t)
    }

    /// Evaluates `sum x_i^N - N t prod x_i^{w_i}`.
    pub fn evaluate(&self, x: &[Elem]) -> Elem {
        let f = &self.field;
        let n = self.n() as u64;
        let mut sum = 0;
        let mut prod = self.scaled_t();
        for (&xi, &wi) in x.iter().zip(self.weight.entries()) {
            sum = f.add(sum, f.pow(xi, n));
            prod = f.mul(prod, f.pow(xi, wi as u64));
        }
        f.sub(sum, prod)
    }

    /// Set when `q <= N`: the count is exact but the reduction may be bad.
    pub fn notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        if self.q() <= self.n() as u64 {
            notes.push(format!("bad reduction possible: q = {} <= N = {}", self.q(), self.n()));
        }
        notes
    }

    /// Number of normalized points of `P^{N-1}(F_q)`.
    pub fn projective_size(&self) -> u64 {
        projective_size(self.q(), self.n())
    }
}

pub(crate) fn projective_size(q: u64, n: u32) -> u64 {
    let q = q as u128;
    match q.checked_pow(n) {
        Some(qn) => u64::try_from((qn - 1) / (q - 1)).unwrap_or(u64::MAX),
        None => u64::MAX,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Naive,
    Fast,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Naive => "naive",
            Strategy::Fast => "fast",
        }
    }
}

#[derive(Debug, Clone)]
pub struct FiberCount {
    pub spec: FiberSpec,
    pub projective_count: u64,
    /// `None` when the middle dimension `N - 2` is even.
    pub middle_trace: Option<i64>,
    pub strategy: Strategy,
    pub elapsed: Duration,
}

impl FiberCount {
    pub(crate) fn new(spec: FiberSpec, projective_count: u64, strategy: Strategy, elapsed: Duration) -> Self {
        let middle_trace = middle_trace(projective_count, spec.q(), spec.n()).ok();
        FiberCount { spec, projective_count, middle_trace, strategy, elapsed }
    }

    /// `|a_q| <= b q^{(N-2)/2}` with `b` the primitive middle Betti number.
    pub fn weil_bound_holds(&self) -> Option<bool> {
        let a = self.middle_trace?;
        let n = self.spec.n();
        Some(weil_bound_holds(a, self.spec.q(), n - 2, middle_betti(n)))
    }
}

/// `1 + q + ... + q^d`.
pub fn lefschetz_sum(q: u64, d: u32) -> i128 {
    (0..=d).map(|j| (q as i128).pow(j)).sum()
}

/// Trace of Frobenius on the primitive middle cohomology, recovered from a
/// projective point count: the non-middle cohomology contributes
/// `1 + q + ... + q^{N-2}` and, for odd `N - 2`, the middle enters with a
/// minus sign.
pub fn middle_trace(count: u64, q: u64, n: u32) -> Result<i64> {
    if n < 3 || (n - 2).is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "middle trace needs an odd-dimensional fiber, N - 2 = {} is not odd",
            n as i64 - 2
        )));
    }
    let a = lefschetz_sum(q, n - 2) - count as i128;
    i64::try_from(a).map_err(|_| Error::Unsupported("trace does not fit in 64 bits".into()))
}

/// Exact integer test of `|a| <= b q^{d/2}`, i.e. `a^2 <= b^2 q^d`.
pub fn weil_bound_holds(a: i64, q: u64, d: u32, betti: u64) -> bool {
    let lhs = (a.unsigned_abs() as u128).pow(2);
    let rhs =
        (betti as u128).checked_pow(2).and_then(|b2| (q as u128).checked_pow(d).and_then(|qd| b2.checked_mul(qd)));
    match rhs {
        Some(r) => lhs <= r,
        None => true,
    }
}

/// Primitive middle Betti number of a smooth degree-`N` hypersurface in
/// `P^{N-1}`: `((N-1)^N + (-1)^N (N-1)) / N`.
pub fn middle_betti(n: u32) -> u64 {
    let n_i = n as i128;
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    (((n_i - 1).pow(n) + sign * (n_i - 1)) / n_i) as u64
}

#[cfg(test)]
mod tests {
    use super::super::field::field_make;
    use super::*;

    #[test]
    fn spec_guards() {
        let f = Arc::new(field_make(11, 1).unwrap());
        assert_eq!(FiberSpec::classical(5, f.clone(), 1).unwrap_err(), Error::SingularFiber { n: 5 });
        // 3 is a fifth root of unity mod 11
        assert_eq!(FiberSpec::classical(5, f.clone(), 3).unwrap_err(), Error::SingularFiber { n: 5 });
        assert!(FiberSpec::classical(5, f.clone(), 2).is_ok());
        let f5 = Arc::new(field_make(5, 1).unwrap());
        assert_eq!(FiberSpec::classical(5, f5, 2).unwrap_err(), Error::BadCharacteristic { q: 5, n: 5 });
        let f3 = Arc::new(field_make(3, 2).unwrap());
        assert_eq!(FiberSpec::classical(6, f3, 2).unwrap_err(), Error::BadCharacteristic { q: 9, n: 6 });
        assert!(FiberSpec::classical(5, f, 11).is_err());
    }

    #[test]
    fn traces() {
        assert_eq!(middle_trace(1 + 11 + 121 + 1331, 11, 5), Ok(0));
        assert_eq!(middle_trace(1464, 11, 5), Ok(0));
        assert_eq!(middle_trace(1400, 11, 5), Ok(64));
        assert!(middle_trace(10, 11, 4).is_err());
        assert_eq!(middle_trace(12, 11, 3), Ok(0));
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(middle_betti(5), 204);
        assert_eq!(middle_betti(3), 2);
        assert_eq!(middle_betti(4), 21);
    }

    #[test]
    fn weil_bound_arithmetic() {
        // 204 * 11^{3/2} ~ 7442.4
        assert!(weil_bound_holds(7442, 11, 3, 204));
        assert!(!weil_bound_holds(7443, 11, 3, 204));
        assert!(weil_bound_holds(-7442, 11, 3, 204));
    }

    #[test]
    fn projective_sizes() {
        assert_eq!(projective_size(11, 5), 16105);
        assert_eq!(projective_size(2, 3), 7);
    }
}
