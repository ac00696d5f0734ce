//! One test per acceptance criterion. Each prints a `[PASS]` or `[FAIL]`
//! line straight to stderr, so the line shows up even when output capture
//! is on, and then asserts.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use dwork::charcomb::{enumerate_classes, sn_orbits, units, CharClass, ResidueVector, WeightVector};
use dwork::hodge::{
    classical_repeat_witness, dual_class, hodge_data, ht_of_vector, repeated_ht_scan, witness_census, Semantics,
};
use dwork::pointcount::{
    count_projective_fast, count_projective_naive, field_make, gamma_w_elements, group_action_check_all, lefschetz_sum,
    middle_betti, roots_of_unity, tower_counts, weil_bound_holds, CountOptions, FiberCount, FiberSpec,
};
use dwork::report::QUINTIC_LISTED;
use dwork::Error;
use rand::{Rng, SeedableRng};

fn verdict(id: u32, name: &str, ok: bool, detail: &str) {
    let line = format!("[{}] AC-{id:02} {name}: {detail}\n", if ok { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().lock().write_all(line.as_bytes());
    assert!(ok, "AC-{id:02} {name}: {detail}");
}

fn class(v: &[u32]) -> CharClass {
    CharClass::classical(v).unwrap()
}

fn rv(v: &[u32]) -> ResidueVector {
    ResidueVector::new(v.len() as u32, v.to_vec()).unwrap()
}

#[test]
fn ac01_dimension_and_weight_table() {
    let start = Instant::now();
    // (class, dimension, weights) as tabulated; the zero class is not in the
    // printed table and comes from the direct coset computation
    let zero = common::hodge(&[0; 5], &[1; 5]);
    let expected: Vec<([u32; 5], usize, Vec<u32>)> = vec![
        ([0, 1, 2, 3, 4], 0, vec![]),
        ([0, 0, 1, 1, 3], 2, vec![1, 2]),
        ([0, 0, 1, 2, 2], 2, vec![1, 2]),
        ([0, 0, 2, 4, 4], 2, vec![1, 2]),
        ([0, 0, 3, 3, 4], 2, vec![1, 2]),
        ([0, 0, 0, 1, 4], 2, vec![1, 2]),
        ([0, 0, 0, 2, 3], 2, vec![1, 2]),
        ([0, 0, 0, 0, 0], zero.0, zero.1),
    ];
    let mut bad = Vec::new();
    for (v, dim, hts) in &expected {
        let h = hodge_data(&class(v), Semantics::Set);
        if h.dimension != *dim || &h.weights != hts {
            bad.push(format!("{v:?} -> ({}, {:?})", h.dimension, h.weights));
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(1) && expected.len() == QUINTIC_LISTED.len();
    verdict(1, "dimension/HT table", ok, &format!("8 rows, mismatches {bad:?}, {elapsed:?}"));
}

#[test]
fn ac02_totally_nonzero_representatives() {
    let start = Instant::now();
    let rows: Vec<([u32; 5], [[u32; 5]; 2])> = vec![
        ([0, 0, 1, 2, 2], [[1, 1, 2, 3, 3], [2, 2, 3, 4, 4]]),
        ([0, 0, 2, 4, 4], [[2, 2, 4, 1, 1], [4, 4, 1, 3, 3]]),
        ([0, 0, 3, 3, 4], [[3, 3, 1, 1, 2], [4, 4, 2, 2, 3]]),
        ([0, 0, 0, 1, 4], [[2, 2, 2, 3, 1], [3, 3, 3, 4, 2]]),
        ([0, 0, 0, 2, 3], [[1, 1, 1, 3, 4], [4, 4, 4, 1, 2]]),
    ];
    let mut bad = Vec::new();
    for (v, reps) in &rows {
        let ours: BTreeSet<Vec<u32>> =
            hodge_data(&class(v), Semantics::Set).representatives.iter().map(|u| u.entries().to_vec()).collect();
        let theirs: BTreeSet<Vec<u32>> = reps.iter().map(|r| r.to_vec()).collect();
        if ours != theirs {
            bad.push(format!("{v:?} -> {ours:?}"));
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(1);
    verdict(2, "totally nonzero representatives", ok, &format!("5 rows, mismatches {bad:?}, {elapsed:?}"));
}

#[test]
fn ac03_orbit_coverage_and_census() {
    let start = Instant::now();
    let orbits = sn_orbits(5).unwrap();
    let listed: BTreeSet<Vec<u32>> = QUINTIC_LISTED.iter().map(|v| v.to_vec()).collect();
    let forms: BTreeSet<Vec<u32>> = orbits.iter().map(|o| o.normal_form.entries().to_vec()).collect();

    // partition of the 125 classes
    let mut all: Vec<CharClass> = orbits.iter().flat_map(|o| o.classes.clone()).collect();
    let total = all.len();
    all.sort();
    all.dedup();
    let partition = total == 125 && all.len() == 125;

    // every orbit contains a listed class
    let covered = orbits.iter().all(|o| o.classes.iter().any(|c| listed.contains(c.representative().entries())));

    // census against a direct count of totally nonzero zero-sum vectors
    let mut census = [0u64; 5];
    for c in enumerate_classes(&WeightVector::classical(5).unwrap()) {
        census[hodge_data(&c, Semantics::Set).dimension] += 1;
    }
    let total_dim: u64 = census.iter().enumerate().map(|(d, &k)| d as u64 * k).sum();
    let direct: u64 = common::totally_nonzero_by_weight(5).values().sum();
    let census_ok = census == [24, 0, 100, 0, 1] && total_dim == 204 && direct == 204;

    let exact = orbits.len() == 8 && forms == listed;
    let elapsed = start.elapsed();
    let ok = exact && partition && covered && census_ok && elapsed < Duration::from_secs(1);
    verdict(
        3,
        "orbit list and census",
        ok,
        &format!(
            "{} orbits (expected 8), normal forms equal the list: {}, partition of 125: {partition}, \
             every orbit holds a listed class: {covered}, census 1/100/24 = {total_dim} (direct {direct}): {census_ok}, {elapsed:?}",
            orbits.len(),
            forms == listed
        ),
    );
}

#[test]
fn ac04_duality() {
    let w = WeightVector::classical(5).unwrap();
    let mut bad_classes = 0;
    for c in enumerate_classes(&w) {
        let h = hodge_data(&c, Semantics::Set);
        let d = hodge_data(&dual_class(&c), Semantics::Set);
        let mut reflected: Vec<u32> = h.weights.iter().map(|&x| 3 - x).collect();
        reflected.sort();
        if reflected != d.weights || h.dimension != d.dimension {
            bad_classes += 1;
        }
    }
    let mut checked = 0;
    let mut bad_vectors = 0;
    for v in common::zero_sum_vectors(5) {
        if v.iter().all(|&x| x != 0) {
            checked += 1;
            let u = rv(&v);
            if ht_of_vector(&u).unwrap() + ht_of_vector(&u.neg()).unwrap() != 3 {
                bad_vectors += 1;
            }
        }
    }
    let ok = bad_classes == 0 && bad_vectors == 0 && checked == 204;
    verdict(
        4,
        "duality",
        ok,
        &format!("125 classes ({bad_classes} bad), {checked} totally nonzero vectors ({bad_vectors} bad)"),
    );
}

#[test]
fn ac05_relabel_invariance() {
    let mut bad = Vec::new();
    for v in &QUINTIC_LISTED {
        let c = class(v);
        let base = hodge_data(&c, Semantics::Set).weights;
        for u in units(5) {
            if hodge_data(&c.scaled(u).unwrap(), Semantics::Set).weights != base {
                bad.push((v.to_vec(), u));
            }
        }
    }
    verdict(5, "relabel invariance", bad.is_empty(), &format!("8 classes x 4 units, failures {bad:?}"));
}

#[test]
fn ac06_classical_repeated_weights() {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in 8..=11u32 {
        let len = n as usize;
        let mut seed = vec![0; len];
        seed[0] = 4;
        seed[1] = n - 2;
        seed[2] = n - 2;
        let c = class(&seed);
        let h = hodge_data(&c, Semantics::Set);
        let mut a = vec![1; len];
        a[0] = 5;
        a[1] = n - 1;
        a[2] = n - 1;
        let mut b = vec![3; len];
        b[0] = 7;
        b[1] = 1;
        b[2] = 1;
        let named =
            [rv(&a), rv(&b)].iter().all(|u| c.contains(u) && ht_of_vector(u) == Ok(2) && h.representatives.contains(u));
        let lib = classical_repeat_witness(n).unwrap();
        let this = h.multiplicity(2) >= 2 && named && lib.class == c && lib.repeated_value == 2;
        ok &= this;
        notes.push(format!(
            "N={n}: weight 2 x{} {}",
            h.multiplicity(2),
            if named { "named pair found" } else { "named pair missing" }
        ));
    }
    let c6 = class(&[0, 0, 0, 2, 2, 2]);
    let h6 = hodge_data(&c6, Semantics::Set);
    let lib6 = classical_repeat_witness(6).unwrap();
    let six = h6.has_repeat() && lib6.class == c6 && lib6.multiplicity >= 2;
    ok &= six;
    notes.push(format!("N=6: weights {:?}, repeated value {} x{}", h6.weights, lib6.repeated_value, lib6.multiplicity));
    verdict(6, "classical repeated weights", ok, &notes.join("; "));
}

#[test]
fn ac07_weighted_repeated_weights() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut total = 0;
    for n in 3..=7 {
        for (w, result, confirmed) in witness_census(n) {
            total += 1;
            let good = match &result {
                Ok(r) => r.weights.semantics == Semantics::Indexed && r.weights.has_repeat() && confirmed,
                Err(_) => false,
            };
            if !good {
                failures.push(format!("{:?}", w.entries()));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(60);
    verdict(
        7,
        "weighted repeated weights",
        ok,
        &format!("{total} weight vectors, {} without a witness {failures:?}, {elapsed:?}", failures.len()),
    );
}

#[test]
fn ac08_quintic_weights_are_distinct() {
    let w = WeightVector::classical(5).unwrap();
    let set = repeated_ht_scan(&w, Semantics::Set).len();
    let indexed = repeated_ht_scan(&w, Semantics::Indexed).len();
    let direct = common::classes(&[1; 5])
        .iter()
        .filter(|v| common::hodge(v, &[1; 5]).1.windows(2).any(|p| p[0] == p[1]))
        .count();
    verdict(
        8,
        "quintic weights distinct",
        set == 0 && indexed == 0 && direct == 0,
        &format!("125 classes, repeats: set {set}, indexed {indexed}, direct {direct}"),
    );
}

fn smooth_specs(q: u64) -> Vec<FiberSpec> {
    let f = Arc::new(field_make(q, 1).unwrap());
    (0..q as u32).filter_map(|t| FiberSpec::classical(5, f.clone(), t).ok()).collect()
}

fn random_specs(q: u64, k: usize) -> Vec<FiberSpec> {
    let f = Arc::new(field_make(q, 1).unwrap());
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    while out.len() < k {
        let t = rng.random_range(0..q as u32);
        if let Ok(s) = FiberSpec::classical(5, f.clone(), t) {
            out.push(s);
        }
    }
    out
}

#[test]
fn ac09_counter_equivalence() {
    let start = Instant::now();
    let opts = CountOptions::default();
    let mut specs = smooth_specs(11);
    specs.extend(smooth_specs(31));
    specs.extend(random_specs(101, 10));
    let mut bad = Vec::new();
    for s in &specs {
        let a = count_projective_naive(s, &opts).unwrap().projective_count;
        let b = count_projective_fast(s, &opts).unwrap().projective_count;
        if a != b {
            bad.push((s.q(), s.t(), a, b));
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(120);
    verdict(9, "naive = fast", ok, &format!("{} fibers, mismatches {bad:?}, {elapsed:?}", specs.len()));
}

fn trace_ok(c: &FiberCount) -> bool {
    let q = c.spec.q();
    let Some(a) = c.middle_trace else { return false };
    c.projective_count as i128 + a as i128 == lefschetz_sum(q, 3)
        && 1 + q as i128 + (q as i128).pow(2) + (q as i128).pow(3) == lefschetz_sum(q, 3)
        && weil_bound_holds(a, q, 3, 204)
        && c.weil_bound_holds() == Some(true)
}

#[test]
fn ac10_trace_identity_and_weil_bound() {
    let opts = CountOptions::default();
    let mut specs = smooth_specs(11);
    specs.extend(smooth_specs(31));
    specs.extend(random_specs(101, 10));
    let mut bad = Vec::new();
    for s in &specs {
        let c = count_projective_fast(s, &opts).unwrap();
        if !trace_ok(&c) {
            bad.push((s.q(), s.t()));
        }
    }
    let mut levels = 0;
    for s in smooth_specs(11) {
        for c in tower_counts(&s, 2, &opts).unwrap() {
            levels += 1;
            if !trace_ok(&c) {
                bad.push((c.spec.q(), s.t()));
            }
        }
    }
    let ok = bad.is_empty() && middle_betti(5) == 204;
    verdict(
        10,
        "trace identity and Weil bound",
        ok,
        &format!("{} fibers and {levels} tower levels over F_11, F_121, failures {bad:?}", specs.len()),
    );
}

#[test]
fn ac11_smooth_locus_guard() {
    let bin = env!("CARGO_BIN_EXE_dwork");
    let mut checked = Vec::new();
    let mut bad = Vec::new();
    for q in [7u64, 11, 31, 41, 101] {
        let f = field_make(q, 1).unwrap();
        let roots: Vec<u32> = (1..q as u32).filter(|&t| f.pow(t, 5) == 1).collect();
        let expected = if q % 5 == 1 { 5 } else { 1 };
        if roots.len() != expected {
            bad.push(format!("q={q}: {} fifth roots", roots.len()));
        }
        for &t in &roots {
            let code = Command::new(bin)
                .args(["count", "--N", "5", "--p", &q.to_string(), "--t", &t.to_string()])
                .output()
                .unwrap()
                .status
                .code();
            let lib = FiberSpec::classical(5, Arc::new(field_make(q, 1).unwrap()), t);
            if code != Some(3) || lib != Err(Error::SingularFiber { n: 5 }) {
                bad.push(format!("q={q} t={t}: exit {code:?}"));
            }
        }
        checked.push(format!("q={q}: {roots:?}"));
    }
    verdict(11, "smooth-locus guard", bad.is_empty(), &format!("rejected {}; failures {bad:?}", checked.join(", ")));
}

#[test]
fn ac12_group_stability() {
    let start = Instant::now();
    let f = Arc::new(field_make(11, 1).unwrap());
    let singular = FiberSpec::classical(5, f.clone(), 3).is_err();

    // the group does not depend on t; take it from any smooth fiber
    let gammas = gamma_w_elements(&FiberSpec::classical(5, f.clone(), 2).unwrap()).unwrap();
    let nontrivial: Vec<Vec<u32>> = gammas[1..].to_vec();
    let mu = roots_of_unity(&f, 5).unwrap();

    // t = 3 itself, through direct enumeration of the equation
    let points = common::points_prime(11, &[1; 5], 3);
    let mut moved_off = 0;
    let mut delta_moves = 0;
    for x in &points {
        for g in &nontrivial {
            let y: Vec<u64> = x.iter().zip(g).map(|(&a, &z)| a * z as u64 % 11).collect();
            if !common::on_fiber(11, &[1; 5], 3, &y) {
                moved_off += 1;
            }
        }
        for &z in &mu {
            let y: Vec<u64> = x.iter().map(|&a| a * z as u64 % 11).collect();
            if &common::normalize_prime(11, &y) != x {
                delta_moves += 1;
            }
        }
    }

    // every smooth t through the library
    let opts = CountOptions::default();
    let smooth: Vec<(u32, bool)> = (0..11)
        .filter_map(|t| FiberSpec::classical(5, f.clone(), t).ok())
        .map(|s| (s.t(), group_action_check_all(&s, &nontrivial, &opts).unwrap()))
        .collect();

    let elapsed = start.elapsed();
    let ok = nontrivial.len() == 124
        && moved_off == 0
        && delta_moves == 0
        && smooth.iter().all(|&(_, ok)| ok)
        && elapsed < Duration::from_secs(10);
    verdict(
        12,
        "group stability",
        ok,
        &format!(
            "{} nontrivial elements; t = 3 (singular: {singular}) has {} points, {moved_off} images off the fiber, \
             {delta_moves} moved by the diagonal; smooth t {:?}; {elapsed:?}",
            nontrivial.len(),
            points.len(),
            smooth
        ),
    );
}
