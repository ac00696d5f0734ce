//! Classes whose Hodge-Tate multiset contains a repeated weight.

use rayon::prelude::*;

use super::{first_repeat, hodge_data, ht_of_vector, semantics_diverge, weights_into, HodgeData, Semantics};
use crate::charcomb::{gcd, CharClass, ClassWalker, ResidueVector, WeightVector};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessMethod {
    /// Explicit family of classes for the classical weight.
    ClassicalFamily,
    /// Explicit construction from the zero entries and `gcd(w_i, N)`.
    Construction,
    /// Construction degenerated; first class found by lexicographic scan.
    Search,
    /// Produced by [`repeated_ht_scan`].
    Scan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub class: CharClass,
    pub weights: HodgeData,
    pub repeated_value: u32,
    pub multiplicity: usize,
    /// Coset members whose weight is `repeated_value`.
    pub witnesses: Vec<ResidueVector>,
    pub method: WitnessMethod,
    /// Set and indexed readings of the class disagree.
    pub semantics_diverge: bool,
}

impl WitnessReport {
    fn build(class: CharClass, weights: HodgeData, repeated_value: u32, method: WitnessMethod) -> Self {
        let witnesses: Vec<ResidueVector> =
            weights.representatives.iter().filter(|u| ht_of_vector(u).ok() == Some(repeated_value)).cloned().collect();
        let multiplicity = weights.multiplicity(repeated_value);
        let semantics_diverge = semantics_diverge(&class);
        WitnessReport { class, weights, repeated_value, multiplicity, witnesses, method, semantics_diverge }
    }
}

/// Repeated-weight class for the classical weight.
///
/// For `N >= 8` this is `[(4, N-2, N-2, 0, ..., 0)]`, where
/// `(5, N-1, N-1, 1, ..., 1)` and `(7, 1, 1, 3, ..., 3)` both have weight 2.
/// For `N = 6` it is `[(0, 0, 0, 2, 2, 2)]`, with `(2, 2, 2, 4, 4, 4)` and
/// `(5, 5, 5, 1, 1, 1)` sharing a weight; that weight is evaluated here
/// rather than assumed.
pub fn classical_repeat_witness(n: u32) -> Result<WitnessReport> {
    let (seed, pair): (Vec<u32>, [Vec<u32>; 2]) = match n {
        6 => (vec![0, 0, 0, 2, 2, 2], [vec![2, 2, 2, 4, 4, 4], vec![5, 5, 5, 1, 1, 1]]),
        n if n >= 8 => {
            let len = n as usize;
            let mut seed = vec![0; len];
            seed[..3].copy_from_slice(&[4, n - 2, n - 2]);
            let mut a = vec![1; len];
            a[..3].copy_from_slice(&[5, n - 1, n - 1]);
            let mut b = vec![3; len];
            b[..3].copy_from_slice(&[7, 1, 1]);
            (seed, [a, b])
        }
        _ => {
            return Err(Error::OutOfDomain(format!(
                "the classical repeated-weight family needs N = 6 or N >= 8, got N = {n}"
            )))
        }
    };
    let class = CharClass::classical(&seed)?;
    let first = ResidueVector::new(n, pair[0].clone())?;
    let second = ResidueVector::new(n, pair[1].clone())?;
    let value = ht_of_vector(&first)?;
    if ht_of_vector(&second)? != value || !class.contains(&first) || !class.contains(&second) {
        return Err(Error::OutOfDomain(format!("family representatives do not certify a repeat for N = {n}")));
    }
    let weights = hodge_data(&class, Semantics::Set);
    let report = WitnessReport::build(class, weights, value, WitnessMethod::ClassicalFamily);
    debug_assert!(report.multiplicity >= 2);
    Ok(report)
}

/// The vector built from `W`: pivot on the first zero weight, put `0` where
/// `gcd(w_i, N) = 1` and `1` where it exceeds 1, and fix the pivot entry by
/// the zero-sum condition.
pub(crate) fn construction_vector(weight: &WeightVector) -> Option<(usize, ResidueVector)> {
    let n = weight.modulus();
    let pivot = weight.entries().iter().position(|&w| w == 0)?;
    let mut v: Vec<u32> = weight.entries().iter().map(|&w| if gcd(w as u64, n as u64) == 1 { 0 } else { 1 }).collect();
    v[pivot] = 0;
    let others: u32 = v.iter().sum();
    v[pivot] = (n - others % n) % n;
    Some((pivot, ResidueVector::from_raw(n, v)))
}

/// Repeated-weight class for a non-classical weight, read with indexed
/// semantics.
///
/// The constructed class has every `v + kW` with `k != 0` totally nonzero,
/// and those `N - 1` weights cannot all be distinct. The construction needs
/// the pivot entry to come out nonzero; when it does not (every other weight
/// is prime to `N`), the lexicographically first repeated class is returned
/// instead, and [`Error::NoWitness`] if there is none.
pub fn weighted_repeat_witness(weight: &WeightVector) -> Result<WitnessReport> {
    let n = weight.modulus();
    if n < 3 || weight.is_classical() {
        return Err(Error::OutOfDomain(format!(
            "needs N >= 3 and a non-classical weight, got N = {n}, W = {:?}",
            weight.entries()
        )));
    }
    let (_, v) = construction_vector(weight).expect("non-classical weights have a zero entry");
    let class = CharClass::new(weight, &v)?;
    let data = hodge_data(&class, Semantics::Indexed);
    if let Some((value, _)) = data.first_repeat() {
        if data.dimension + 1 >= n as usize {
            return Ok(WitnessReport::build(class, data, value, WitnessMethod::Construction));
        }
    }
    let mut found = repeated_ht_scan_limited(weight, Semantics::Indexed, Some(1));
    match found.pop() {
        Some(mut report) => {
            report.method = WitnessMethod::Search;
            Ok(report)
        }
        None => Err(Error::NoWitness { n, weight: weight.entries().to_vec() }),
    }
}

/// Every class whose weight multiset has a repeat, in canonical order.
pub fn repeated_ht_scan(weight: &WeightVector, semantics: Semantics) -> Vec<WitnessReport> {
    repeated_ht_scan_limited(weight, semantics, None)
}

fn repeated_ht_scan_limited(weight: &WeightVector, semantics: Semantics, limit: Option<usize>) -> Vec<WitnessReport> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(weight.modulus() as usize);
    for class in ClassWalker::new(weight) {
        weights_into(class.representative().entries(), weight.entries(), semantics, &mut buf);
        if let Some((value, _)) = first_repeat(&buf) {
            let data = hodge_data(&class, semantics);
            out.push(WitnessReport::build(class, data, value, WitnessMethod::Scan));
            if limit.is_some_and(|l| out.len() >= l) {
                break;
            }
        }
    }
    out
}

/// Runs [`weighted_repeat_witness`] for every non-classical weight of length
/// `n` in parallel, pairing each result with whether a full scan confirms it.
pub fn witness_census(n: u32) -> Vec<(WeightVector, Result<WitnessReport>, bool)> {
    WeightVector::all(n)
        .into_par_iter()
        .filter(|w| !w.is_classical())
        .map(|w| {
            let result = weighted_repeat_witness(&w);
            let confirmed = match &result {
                Ok(r) => scan_contains(&w, &r.class),
                Err(_) => false,
            };
            (w, result, confirmed)
        })
        .collect()
}

/// Whether the indexed scan for `weight` reports `class`, without
/// materialising the full report list.
pub fn scan_contains(weight: &WeightVector, class: &CharClass) -> bool {
    let mut buf = Vec::new();
    ClassWalker::new(weight).any(|c| {
        weights_into(c.representative().entries(), weight.entries(), Semantics::Indexed, &mut buf);
        first_repeat(&buf).is_some() && &c == class
    })
}
