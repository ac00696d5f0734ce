use std::fmt;

use super::vector::{ResidueVector, WeightVector};
use crate::error::{Error, Result};

/// A coset `v + <W>` in `(Z/NZ)_0^N / <W>`, labelled by its lexicographically
/// smallest element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharClass {
    weight: WeightVector,
    representative: ResidueVector,
}

impl CharClass {
    pub fn new(weight: &WeightVector, v: &ResidueVector) -> Result<Self> {
        if weight.modulus() != v.modulus() {
            return Err(Error::ModulusMismatch { weight: weight.modulus(), vector: v.modulus() });
        }
        let representative =
            (0..weight.order() as u64).map(|k| v.add_multiple(weight, k)).min().expect("order is at least 1");
        Ok(CharClass { weight: weight.clone(), representative })
    }

    /// Shorthand for a class under the classical weight.
    pub fn classical(entries: &[u32]) -> Result<Self> {
        let n = entries.len() as u32;
        let v = ResidueVector::new(n, entries.to_vec())?;
        Self::new(&WeightVector::classical(n)?, &v)
    }

    pub(crate) fn from_canonical(weight: WeightVector, representative: ResidueVector) -> Self {
        CharClass { weight, representative }
    }

    pub fn weight(&self) -> &WeightVector {
        &self.weight
    }

    pub fn representative(&self) -> &ResidueVector {
        &self.representative
    }

    pub fn modulus(&self) -> u32 {
        self.representative.modulus()
    }

    /// Distinct elements of the coset, sorted. There are `ord(W)` of them.
    pub fn coset_elements(&self) -> Vec<ResidueVector> {
        let mut out: Vec<ResidueVector> =
            (0..self.weight.order() as u64).map(|k| self.representative.add_multiple(&self.weight, k)).collect();
        out.sort();
        out
    }

    /// The `N` pairs `(k, v + kW)` for `k = 0..N`, starting from the canonical
    /// representative. Repeats appear when `ord(W) < N`.
    pub fn coset_elements_indexed(&self) -> Vec<(u32, ResidueVector)> {
        (0..self.modulus()).map(|k| (k, self.representative.add_multiple(&self.weight, k as u64))).collect()
    }

    /// Class of `-v`.
    pub fn negated(&self) -> CharClass {
        CharClass::new(&self.weight, &self.representative.neg()).expect("same modulus")
    }

    /// Class of `c * v` for a unit `c`.
    pub fn scaled(&self, c: u32) -> Result<CharClass> {
        CharClass::new(&self.weight, &self.representative.scale(c)?)
    }

    pub fn contains(&self, u: &ResidueVector) -> bool {
        u.modulus() == self.modulus()
            && CharClass::new(&self.weight, u).map(|c| c.representative == self.representative).unwrap_or(false)
    }
}

impl fmt::Debug for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

/// Number of zero-sum vectors of length `n` modulo `n`: `n^(n-1)`.
pub(crate) fn zero_sum_count(n: u32) -> u64 {
    (n as u64).pow(n.saturating_sub(1))
}

/// Walks the classes of `(Z/NZ)_0^N / <W>` in lexicographic order of their
/// canonical representatives.
///
/// Zero-sum vectors are indexed by their first `N - 1` entries read as a
/// base-`N` number, so index order is lexicographic order. The first
/// unvisited index is always the minimum of its coset; visiting it marks the
/// rest of the coset.
pub struct ClassWalker {
    weight: WeightVector,
    n: u32,
    visited: Vec<u64>,
    cursor: u64,
    end: u64,
}

impl ClassWalker {
    pub fn new(weight: &WeightVector) -> Self {
        let n = weight.modulus();
        let end = zero_sum_count(n);
        ClassWalker { weight: weight.clone(), n, visited: vec![0; (end as usize).div_ceil(64)], cursor: 0, end }
    }

    fn index_of(&self, entries: &[u32]) -> u64 {
        let n = self.n as u64;
        entries[..entries.len() - 1].iter().fold(0u64, |acc, &e| acc * n + e as u64)
    }

    fn decode(&self, mut index: u64) -> Vec<u32> {
        let n = self.n as usize;
        let mut entries = vec![0u32; n];
        for slot in entries[..n - 1].iter_mut().rev() {
            *slot = (index % self.n as u64) as u32;
            index /= self.n as u64;
        }
        let partial: u64 = entries[..n - 1].iter().map(|&e| e as u64).sum();
        entries[n - 1] = ((self.n as u64 - partial % self.n as u64) % self.n as u64) as u32;
        entries
    }

    fn is_visited(&self, index: u64) -> bool {
        self.visited[(index / 64) as usize] >> (index % 64) & 1 == 1
    }

    fn mark(&mut self, index: u64) {
        self.visited[(index / 64) as usize] |= 1 << (index % 64);
    }
}

impl Iterator for ClassWalker {
    type Item = CharClass;

    fn next(&mut self) -> Option<CharClass> {
        while self.cursor < self.end && self.is_visited(self.cursor) {
            self.cursor += 1;
        }
        if self.cursor >= self.end {
            return None;
        }
        let rep = ResidueVector::from_raw(self.n, self.decode(self.cursor));
        for k in 0..self.weight.order() as u64 {
            let u = rep.add_multiple(&self.weight, k);
            let idx = self.index_of(u.entries());
            self.mark(idx);
        }
        Some(CharClass::from_canonical(self.weight.clone(), rep))
    }
}

/// Every class exactly once, sorted by canonical representative.
pub fn enumerate_classes(weight: &WeightVector) -> Vec<CharClass> {
    ClassWalker::new(weight).collect()
}

/// Expected number of classes, `N^(N-1) / ord(W)`.
pub fn class_count(weight: &WeightVector) -> u64 {
    zero_sum_count(weight.modulus()) / weight.order() as u64
}
