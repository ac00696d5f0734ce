//! Arithmetic on the character group `(Z/NZ)_0^N / <W>`: residue vectors,
//! cosets of `W`, canonical forms and symmetric-group orbits.

mod class;
mod orbit;
mod vector;

pub use class::{class_count, enumerate_classes, CharClass, ClassWalker};
pub use orbit::{apply_permutation, apply_unit_scaling, orbit_normal_form, sn_orbits, Orbit, Permutation};
pub use vector::{ResidueVector, WeightVector};

pub(crate) use vector::gcd;

/// Units of `Z/NZ`, ascending.
pub fn units(n: u32) -> Vec<u32> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&c| gcd(c as u64, n as u64) == 1).collect()
}
