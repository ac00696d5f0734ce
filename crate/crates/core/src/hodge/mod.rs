//! Dimensions and Hodge-Tate multisets of the eigenspaces.
//!
//! For a class `[v]`, the eigenspace dimension is the number of totally
//! nonzero elements of the coset `v + <W>`, and each such element `u`
//! contributes the weight `(sum of lifts of u) / N - 1`.

mod witness;

pub use witness::{
    classical_repeat_witness, repeated_ht_scan, scan_contains, weighted_repeat_witness, witness_census, WitnessMethod,
    WitnessReport,
};

use crate::charcomb::{units, CharClass, ClassWalker, ResidueVector, WeightVector};
use crate::error::{Error, Result};

/// How a coset is read when collecting its totally nonzero members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semantics {
    /// Distinct coset elements.
    Set,
    /// The `N` elements `v + kW`, `k = 0..N`, repeats kept.
    Indexed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeData {
    pub dimension: usize,
    /// Sorted ascending.
    pub weights: Vec<u32>,
    pub semantics: Semantics,
    /// The totally nonzero members that produced `weights`. Sorted for set
    /// semantics, in `k` order for indexed semantics.
    pub representatives: Vec<ResidueVector>,
}

impl HodgeData {
    /// Smallest weight occurring at least twice, with its multiplicity.
    pub fn first_repeat(&self) -> Option<(u32, usize)> {
        first_repeat(&self.weights)
    }

    pub fn multiplicity(&self, weight: u32) -> usize {
        self.weights.iter().filter(|&&w| w == weight).count()
    }

    pub fn has_repeat(&self) -> bool {
        self.first_repeat().is_some()
    }
}

pub(crate) fn first_repeat(sorted: &[u32]) -> Option<(u32, usize)> {
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        if j - i >= 2 {
            return Some((sorted[i], j - i));
        }
        i = j;
    }
    None
}

/// Hodge-Tate weight of a totally nonzero vector.
pub fn ht_of_vector(u: &ResidueVector) -> Result<u32> {
    if !u.is_totally_nonzero() {
        return Err(Error::NotTotallyNonzero(u.entries().to_vec()));
    }
    Ok((u.lift_sum() / u.modulus() as u64 - 1) as u32)
}

pub fn hodge_data(c: &CharClass, semantics: Semantics) -> HodgeData {
    let members: Vec<ResidueVector> = match semantics {
        Semantics::Set => c.coset_elements(),
        Semantics::Indexed => c.coset_elements_indexed().into_iter().map(|(_, u)| u).collect(),
    };
    let representatives: Vec<ResidueVector> = members.into_iter().filter(|u| u.is_totally_nonzero()).collect();
    let mut weights: Vec<u32> =
        representatives.iter().map(|u| ht_of_vector(u).expect("filtered to totally nonzero")).collect();
    weights.sort_unstable();
    HodgeData { dimension: representatives.len(), weights, semantics, representatives }
}

/// Whether set and indexed readings of the class disagree.
pub fn semantics_diverge(c: &CharClass) -> bool {
    c.weight().order() != c.modulus()
        && hodge_data(c, Semantics::Set).weights != hodge_data(c, Semantics::Indexed).weights
}

/// The class of `-v`, paired with `[v]` by Poincare duality.
pub fn dual_class(c: &CharClass) -> CharClass {
    c.negated()
}

/// True when scaling the label by every unit leaves the weight multiset
/// unchanged.
pub fn relabel_invariance_report(c: &CharClass) -> bool {
    let base = hodge_data(c, Semantics::Set).weights;
    units(c.modulus()).into_iter().all(|u| {
        let scaled = c.scaled(u).expect("units scale");
        hodge_data(&scaled, Semantics::Set).weights == base
    })
}

/// Sum of the eigenspace dimensions over all classes.
pub fn total_dimension(weight: &WeightVector) -> u64 {
    ClassWalker::new(weight).map(|c| hodge_data(&c, Semantics::Set).dimension as u64).sum()
}

/// Allocation-free weight collection for bulk scans. Fills `out` with the
/// sorted weights of the class represented by `rep`.
pub(crate) fn weights_into(rep: &[u32], weight: &[u32], semantics: Semantics, out: &mut Vec<u32>) {
    let n = rep.len() as u64;
    let span = match semantics {
        Semantics::Indexed => n,
        Semantics::Set => {
            let g = weight.iter().fold(n, |g, &w| crate::charcomb::gcd(g, w as u64));
            n / g
        }
    };
    out.clear();
    'k: for k in 0..span {
        let mut sum = 0u64;
        for (&v, &w) in rep.iter().zip(weight) {
            let e = (v as u64 + k * (w as u64 % n)) % n;
            if e == 0 {
                continue 'k;
            }
            sum += e;
        }
        out.push((sum / n - 1) as u32);
    }
    out.sort_unstable();
}
