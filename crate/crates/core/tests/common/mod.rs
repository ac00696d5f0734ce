//! Reference implementations that share no code with the library. They are
//! slow and direct on purpose.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// All vectors in `(Z/nZ)^n` with entries summing to 0 mod `n`.
pub fn zero_sum_vectors(n: u32) -> Vec<Vec<u32>> {
    let len = n as usize;
    let total = (n as u64).pow(n);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut v = vec![0u32; len];
        let mut r = idx;
        for slot in v.iter_mut() {
            *slot = (r % n as u64) as u32;
            r /= n as u64;
        }
        if v.iter().map(|&x| x as u64).sum::<u64>() % n as u64 == 0 {
            out.push(v);
        }
    }
    out
}

/// The coset `{v + kW}` as a set.
pub fn coset(v: &[u32], w: &[u32]) -> BTreeSet<Vec<u32>> {
    let n = v.len() as u32;
    (0..n).map(|k| v.iter().zip(w).map(|(&a, &b)| (a + k * b) % n).collect()).collect()
}

/// The coset members for `k = 0..N`, repeats kept.
pub fn coset_indexed(v: &[u32], w: &[u32]) -> Vec<Vec<u32>> {
    let n = v.len() as u32;
    (0..n).map(|k| v.iter().zip(w).map(|(&a, &b)| (a + k * b) % n).collect()).collect()
}

pub fn key(v: &[u32], w: &[u32]) -> Vec<u32> {
    coset(v, w).into_iter().next().unwrap()
}

pub fn ht(u: &[u32]) -> u32 {
    let n = u.len() as u32;
    u.iter().sum::<u32>() / n - 1
}

/// `(dimension, sorted weights, sorted totally nonzero members)` under set
/// semantics.
pub fn hodge(v: &[u32], w: &[u32]) -> (usize, Vec<u32>, Vec<Vec<u32>>) {
    let reps: Vec<Vec<u32>> = coset(v, w).into_iter().filter(|u| u.iter().all(|&x| x != 0)).collect();
    let mut hts: Vec<u32> = reps.iter().map(|u| ht(u)).collect();
    hts.sort();
    (reps.len(), hts, reps)
}

pub fn hodge_indexed(v: &[u32], w: &[u32]) -> Vec<u32> {
    let mut hts: Vec<u32> =
        coset_indexed(v, w).into_iter().filter(|u| u.iter().all(|&x| x != 0)).map(|u| ht(&u)).collect();
    hts.sort();
    hts
}

/// Canonical keys of every class.
pub fn classes(w: &[u32]) -> BTreeSet<Vec<u32>> {
    zero_sum_vectors(w.len() as u32).iter().map(|v| key(v, w)).collect()
}

/// Orbits of `S_n` on the classes of the classical weight, by breadth-first
/// search over adjacent transpositions. Returns the orbits as sets of keys.
pub fn sn_orbits_bfs(n: u32) -> Vec<BTreeSet<Vec<u32>>> {
    let w = vec![1u32; n as usize];
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut orbits = Vec::new();
    for c in classes(&w) {
        if seen.contains(&c) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut queue = VecDeque::from([c.clone()]);
        orbit.insert(c);
        while let Some(x) = queue.pop_front() {
            for i in 0..n as usize - 1 {
                let mut y = x.clone();
                y.swap(i, i + 1);
                let k = key(&y, &w);
                if orbit.insert(k.clone()) {
                    queue.push_back(k);
                }
            }
        }
        seen.extend(orbit.iter().cloned());
        orbits.push(orbit);
    }
    orbits
}

/// Totally nonzero zero-sum vectors in `{1..n-1}^n`, grouped by weight.
pub fn totally_nonzero_by_weight(n: u32) -> BTreeMap<u32, u64> {
    let mut out = BTreeMap::new();
    for v in zero_sum_vectors(n) {
        if v.iter().all(|&x| x != 0) {
            *out.entry(ht(&v)).or_insert(0) += 1;
        }
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Projective points of `sum x_i^N = N t prod x_i^{w_i}` over the prime
/// field `F_p`, by counting the affine cone and dividing.
pub fn count_prime(p: u64, w: &[u32], t: u64) -> u64 {
    let n = w.len();
    let c = (n as u64 % p) * (t % p) % p;
    let mut x = vec![0u64; n];
    let mut cone = 0u64;
    loop {
        let lhs = x.iter().fold(0, |s, &xi| (s + pow_mod(xi, n as u64, p)) % p);
        let rhs = x.iter().zip(w).fold(c, |s, (&xi, &wi)| s * pow_mod(xi, wi as u64, p) % p);
        if lhs == rhs {
            cone += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return (cone - 1) / (p - 1);
            }
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Projective points of the same form over the prime field, listed with the
/// first nonzero coordinate equal to 1.
pub fn points_prime(p: u64, w: &[u32], t: u64) -> Vec<Vec<u64>> {
    let n = w.len();
    let c = (n as u64 % p) * (t % p) % p;
    let mut out = Vec::new();
    for idx in 0..p.pow(n as u32) {
        let mut x = vec![0u64; n];
        let mut r = idx;
        for slot in x.iter_mut() {
            *slot = r % p;
            r /= p;
        }
        if x.iter().find(|&&v| v != 0) != Some(&1) {
            continue;
        }
        let lhs = x.iter().fold(0, |s, &xi| (s + pow_mod(xi, n as u64, p)) % p);
        let rhs = x.iter().zip(w).fold(c, |s, (&xi, &wi)| s * pow_mod(xi, wi as u64, p) % p);
        if lhs == rhs {
            out.push(x);
        }
    }
    out
}

pub fn on_fiber(p: u64, w: &[u32], t: u64, x: &[u64]) -> bool {
    let n = w.len();
    let c = (n as u64 % p) * (t % p) % p;
    let lhs = x.iter().fold(0, |s, &xi| (s + pow_mod(xi, n as u64, p)) % p);
    let rhs = x.iter().zip(w).fold(c, |s, (&xi, &wi)| s * pow_mod(xi, wi as u64, p) % p);
    lhs == rhs
}

pub fn normalize_prime(p: u64, x: &[u64]) -> Vec<u64> {
    let lead = *x.iter().find(|&&v| v != 0).unwrap();
    let inv = pow_mod(lead, p - 2, p);
    x.iter().map(|&v| v * inv % p).collect()
}

/// `F_9 = F_3[i]/(i^2 + 1)` as pairs `(a, b) = a + b i`.
pub mod f9 {
    pub type E = (u64, u64);

    pub fn add(x: E, y: E) -> E {
        ((x.0 + y.0) % 3, (x.1 + y.1) % 3)
    }

    pub fn mul(x: E, y: E) -> E {
        ((x.0 * y.0 + 2 * x.1 * y.1) % 3, (x.0 * y.1 + x.1 * y.0) % 3)
    }

    pub fn pow(x: E, e: u32) -> E {
        (0..e).fold((1, 0), |acc, _| mul(acc, x))
    }

    pub fn all() -> Vec<E> {
        (0..9).map(|i| (i % 3, i / 3)).collect()
    }

    /// Projective points of `sum x_i^N = N t prod x_i` over `F_9`.
    pub fn count_classical(n: usize, t: E) -> u64 {
        let elems = all();
        let c = mul(((n as u64) % 3, 0), t);
        let mut cone = 0u64;
        let total = 9u64.pow(n as u32);
        for idx in 0..total {
            let mut r = idx;
            let mut sum = (0, 0);
            let mut prod = c;
            for _ in 0..n {
                let x = elems[(r % 9) as usize];
                r /= 9;
                sum = add(sum, pow(x, n as u32));
                prod = mul(prod, x);
            }
            if sum == prod {
                cone += 1;
            }
        }
        (cone - 1) / 8
    }
}
