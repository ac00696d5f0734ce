use std::fmt;

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// A zero-sum vector in `(Z/NZ)^N`, stored through canonical lifts in `0..N`.
///
/// The derived ordering compares entries lexicographically, which is the
/// order residue classes are listed in everywhere in this crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueVector {
    modulus: u32,
    entries: Vec<u32>,
}

impl ResidueVector {
    /// Builds a vector from canonical lifts. Entries must already lie in
    /// `0..modulus`, the length must equal the modulus and the sum must
    /// vanish modulo the modulus.
    pub fn new(modulus: u32, entries: Vec<u32>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if entries.len() != modulus as usize {
            return Err(Error::LengthMismatch { expected: modulus as usize, found: entries.len() });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= modulus) {
            return Err(Error::EntryOutOfRange { value: bad as u64, modulus });
        }
        let sum: u64 = entries.iter().map(|&e| e as u64).sum();
        if !sum.is_multiple_of(modulus as u64) {
            return Err(Error::NotZeroSum { sum, modulus });
        }
        Ok(ResidueVector { modulus, entries })
    }

    /// Like [`ResidueVector::new`] but reduces arbitrary integers first.
    pub fn from_integers(modulus: u32, values: &[i64]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let m = modulus as i64;
        Self::new(modulus, values.iter().map(|v| v.rem_euclid(m) as u32).collect())
    }

    pub fn zero(modulus: u32) -> Result<Self> {
        Self::new(modulus, vec![0; modulus as usize])
    }

    /// Internal constructor for values already known to satisfy the invariants.
    pub(crate) fn from_raw(modulus: u32, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), modulus as usize);
        debug_assert_eq!(entries.iter().map(|&e| e as u64).sum::<u64>() % modulus as u64, 0);
        ResidueVector { modulus, entries }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// No entry is zero.
    pub fn is_totally_nonzero(&self) -> bool {
        self.entries.iter().all(|&e| e != 0)
    }

    pub fn zero_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e == 0).count()
    }

    /// Sum of the canonical lifts (a multiple of the modulus).
    pub fn lift_sum(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum()
    }

    /// `self + k * w`, entrywise modulo N.
    pub fn add_multiple(&self, w: &WeightVector, k: u64) -> ResidueVector {
        let n = self.modulus as u64;
        let entries = self
            .entries
            .iter()
            .zip(w.entries())
            .map(|(&v, &wi)| ((v as u64 + (k % n) * (wi as u64 % n)) % n) as u32)
            .collect();
        ResidueVector { modulus: self.modulus, entries }
    }

    pub fn neg(&self) -> ResidueVector {
        let n = self.modulus;
        let entries = self.entries.iter().map(|&e| if e == 0 { 0 } else { n - e }).collect();
        ResidueVector { modulus: n, entries }
    }

    /// Entrywise multiplication by a unit `c` modulo N.
    pub fn scale(&self, c: u32) -> Result<ResidueVector> {
        let n = self.modulus as u64;
        if gcd(c as u64 % n, n) != 1 {
            return Err(Error::NotAUnit { value: c, modulus: self.modulus });
        }
        let entries = self.entries.iter().map(|&e| (e as u64 * c as u64 % n) as u32).collect();
        Ok(ResidueVector { modulus: self.modulus, entries })
    }

    /// Entries sorted ascending by canonical lift.
    pub fn sorted(&self) -> ResidueVector {
        let mut entries = self.entries.clone();
        entries.sort_unstable();
        ResidueVector { modulus: self.modulus, entries }
    }
}

impl fmt::Debug for ResidueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ResidueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Exponents `W = (w_1, ..., w_N)` of the right-hand monomial; non-negative
/// and summing to `N`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    entries: Vec<u32>,
}

impl WeightVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let len = entries.len();
        let sum: u64 = entries.iter().map(|&e| e as u64).sum();
        if len == 0 || sum != len as u64 {
            return Err(Error::InvalidWeight { entries, len });
        }
        Ok(WeightVector { entries })
    }

    /// `(1, 1, ..., 1)`.
    pub fn classical(n: u32) -> Result<Self> {
        Self::new(vec![1; n as usize])
    }

    pub fn modulus(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_classical(&self) -> bool {
        self.entries.iter().all(|&w| w == 1)
    }

    /// Additive order of `W` in `(Z/NZ)^N`: `N / gcd(N, w_1, ..., w_N)`.
    pub fn order(&self) -> u32 {
        let n = self.modulus() as u64;
        let g = self.entries.iter().fold(n, |g, &w| gcd(g, w as u64));
        (n / g) as u32
    }

    /// `W` reduced modulo `N`, as a zero-sum residue vector.
    pub fn as_residue(&self) -> ResidueVector {
        let n = self.modulus();
        ResidueVector::from_raw(n, self.entries.iter().map(|&w| w % n).collect())
    }

    /// Every weight vector of length `n` (compositions of `n` into `n`
    /// non-negative parts), in lexicographic order.
    pub fn all(n: u32) -> Vec<WeightVector> {
        fn rec(slots: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<WeightVector>) {
            if slots == 1 {
                cur.push(remaining);
                out.push(WeightVector { entries: cur.clone() });
                cur.pop();
                return;
            }
            for x in 0..=remaining {
                cur.push(x);
                rec(slots - 1, remaining - x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n as usize, n, &mut Vec::with_capacity(n as usize), &mut out);
        }
        out
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.entries)
    }
}
