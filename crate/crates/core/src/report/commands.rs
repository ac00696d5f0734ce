use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use super::*;
use crate::charcomb::{class_count, orbit_normal_form, sn_orbits, CharClass, ClassWalker, ResidueVector, WeightVector};
use crate::error::{Error, Result};
use crate::hodge::{
    self, classical_repeat_witness, dual_class, hodge_data, relabel_invariance_report, semantics_diverge,
    weighted_repeat_witness, HodgeData, Semantics, WitnessMethod, WitnessReport,
};
use crate::pointcount::{
    count_projective_fast, count_projective_naive, fast_counter_supports, field_make, middle_betti, tower_counts,
    CountOptions, FiberCount, FiberSpec,
};

/// The eight quintic classes whose orbits cover the whole group, in their
/// traditional order.
pub const QUINTIC_LISTED: [[u32; 5]; 8] = [
    [0, 1, 2, 3, 4],
    [0, 0, 1, 1, 3],
    [0, 0, 1, 2, 2],
    [0, 0, 2, 4, 4],
    [0, 0, 3, 3, 4],
    [0, 0, 0, 1, 4],
    [0, 0, 0, 2, 3],
    [0, 0, 0, 0, 0],
];

/// Positions in [`QUINTIC_LISTED`] whose totally nonzero members are tabulated.
pub const QUINTIC_TABULATED: [usize; 5] = [2, 3, 4, 5, 6];

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn to_vecs(v: &[ResidueVector]) -> Vec<Vec<u32>> {
    v.iter().map(|u| u.entries().to_vec()).collect()
}

/// Comma-separated integers, e.g. `0,0,1,1,3`.
pub fn parse_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| Error::Usage(format!("cannot parse {part:?} in {s:?} as an integer")))
        })
        .collect()
}

fn weight_from(n: u32, w: Option<&[i64]>) -> Result<WeightVector> {
    if n == 0 {
        return Err(Error::Usage("N must be at least 1".into()));
    }
    let Some(w) = w else { return WeightVector::classical(n) };
    if w.len() != n as usize {
        return Err(Error::LengthMismatch { expected: n as usize, found: w.len() });
    }
    let entries = w
        .iter()
        .map(|&x| u32::try_from(x).map_err(|_| Error::Usage(format!("weight entry {x} is negative"))))
        .collect::<Result<Vec<u32>>>()?;
    WeightVector::new(entries)
}

fn echo(name: &str, weight: &WeightVector, extra: &[String]) -> String {
    let mut parts = vec![name.to_string(), format!("--N {}", weight.modulus())];
    if !weight.is_classical() {
        parts.push(format!("--W {}", join(weight.entries())));
    }
    parts.extend(extra.iter().cloned());
    parts.join(" ")
}

fn census(weight: &WeightVector) -> (Vec<CensusRow>, u64) {
    let mut by_dim: BTreeMap<usize, u64> = BTreeMap::new();
    for c in ClassWalker::new(weight) {
        *by_dim.entry(hodge_data(&c, Semantics::Set).dimension).or_default() += 1;
    }
    let total = by_dim.iter().map(|(&d, &k)| d as u64 * k).sum();
    (by_dim.into_iter().map(|(dimension, classes)| CensusRow { dimension, classes }).collect(), total)
}

/// `classes`: every class with its canonical representative, or the
/// permutation orbits when `orbits` is set (classical weight only).
pub fn cmd_classes(n: u32, w: Option<&[i64]>, orbits: bool) -> Result<ReportDocument> {
    let weight = weight_from(n, w)?;
    let start = Instant::now();
    let payload = if orbits {
        if !weight.is_classical() {
            return Err(Error::NonClassicalWeight);
        }
        let rows: Vec<OrbitRow> = sn_orbits(n)?
            .into_iter()
            .map(|o| {
                let data = hodge_data(&o.classes[0], Semantics::Set);
                OrbitRow {
                    normal_form: o.normal_form.entries().to_vec(),
                    size: o.size(),
                    dimension: data.dimension,
                    weights: data.weights,
                    classes: o.classes.iter().map(|c| c.representative().entries().to_vec()).collect(),
                }
            })
            .collect();
        Payload::OrbitTable(OrbitTable { class_count: class_count(&weight), orbit_count: rows.len(), orbits: rows })
    } else {
        let classes: Vec<ClassRow> = ClassWalker::new(&weight)
            .map(|c| {
                let data = hodge_data(&c, Semantics::Set);
                ClassRow {
                    class: c.representative().entries().to_vec(),
                    coset_size: weight.order() as usize,
                    dimension: data.dimension,
                    weights: data.weights,
                }
            })
            .collect();
        Payload::ClassTable(ClassTable { class_count: classes.len() as u64, classes })
    };
    let extra = if orbits { vec!["--orbits".to_string()] } else { vec![] };
    let mut doc = ReportDocument::new(echo("classes", &weight, &extra), n, weight.entries().to_vec(), payload);
    doc.timings.push(("classes".into(), start.elapsed()));
    Ok(doc)
}

fn hodge_row(c: &CharClass, orbit_size: Option<usize>) -> HodgeRow {
    let set = hodge_data(c, Semantics::Set);
    let indexed = hodge_data(c, Semantics::Indexed);
    HodgeRow {
        class: c.representative().entries().to_vec(),
        orbit_size,
        dimension: set.dimension,
        semantics_diverge: set.weights != indexed.weights,
        weights: set.weights,
        indexed_weights: indexed.weights,
    }
}

/// `hodge`: the dimension/weight table, or the detail of the class of `v`.
pub fn cmd_hodge(n: u32, w: Option<&[i64]>, v: Option<&[i64]>) -> Result<ReportDocument> {
    let weight = weight_from(n, w)?;
    let start = Instant::now();
    let (payload, extra) = match v {
        Some(v) => {
            if v.len() != n as usize {
                return Err(Error::LengthMismatch { expected: n as usize, found: v.len() });
            }
            let input = ResidueVector::from_integers(n, v)?;
            let class = CharClass::new(&weight, &input)?;
            let set = hodge_data(&class, Semantics::Set);
            let indexed = hodge_data(&class, Semantics::Indexed);
            let dual = dual_class(&class);
            let detail = ClassDetail {
                input: input.entries().to_vec(),
                class: class.representative().entries().to_vec(),
                dimension: set.dimension,
                weights: set.weights.clone(),
                representatives: to_vecs(&set.representatives),
                indexed_weights: indexed.weights.clone(),
                indexed_representatives: to_vecs(&indexed.representatives),
                semantics_diverge: semantics_diverge(&class),
                dual_class: dual.representative().entries().to_vec(),
                dual_weights: hodge_data(&dual, Semantics::Set).weights,
                relabel_invariant: relabel_invariance_report(&class),
            };
            (Payload::ClassDetail(detail), vec![format!("--v {}", join(input.entries()))])
        }
        None => {
            let mut rows = if weight.is_classical() {
                sn_orbits(n)?
                    .iter()
                    .map(|o| {
                        let rep = CharClass::new(&weight, &o.normal_form)?;
                        Ok(hodge_row(&rep, Some(o.size())))
                    })
                    .collect::<Result<Vec<_>>>()?
            } else {
                ClassWalker::new(&weight).map(|c| hodge_row(&c, None)).collect()
            };
            rows.sort_by(|a, b| a.class.cmp(&b.class));
            let (census, total_dimension) = census(&weight);
            (Payload::HodgeTable(HodgeTable { rows, census, total_dimension }), vec![])
        }
    };
    let mut doc = ReportDocument::new(echo("hodge", &weight, &extra), n, weight.entries().to_vec(), payload);
    doc.timings.push(("hodge".into(), start.elapsed()));
    Ok(doc)
}

fn semantics_name(s: Semantics) -> String {
    match s {
        Semantics::Set => "set",
        Semantics::Indexed => "indexed",
    }
    .to_string()
}

fn method_name(m: WitnessMethod) -> String {
    match m {
        WitnessMethod::ClassicalFamily => "classical_family",
        WitnessMethod::Construction => "construction",
        WitnessMethod::Search => "search",
        WitnessMethod::Scan => "scan",
    }
    .to_string()
}

/// Walks every class once, counting repeated-weight classes.
fn scan(weight: &WeightVector, semantics: Semantics, target: Option<&CharClass>) -> (ScanSummary, bool) {
    let mut buf = Vec::new();
    let mut scanned = 0;
    let mut repeated = 0;
    let mut first = None;
    let mut contains = false;
    for c in ClassWalker::new(weight) {
        scanned += 1;
        hodge::weights_into(c.representative().entries(), weight.entries(), semantics, &mut buf);
        if hodge::first_repeat(&buf).is_some() {
            repeated += 1;
            if first.is_none() {
                first = Some(c.representative().entries().to_vec());
            }
            if target == Some(&c) {
                contains = true;
            }
        }
    }
    let summary = ScanSummary {
        performed: true,
        semantics: semantics_name(semantics),
        classes_scanned: scanned,
        repeated_classes: repeated,
        first_repeated: first,
    };
    (summary, contains)
}

/// Work of a full scan: the walker visits `N^(N-1)` indices and each class
/// costs `N` coset steps.
fn scan_cost(n: u32) -> u64 {
    (n as u64).checked_pow(n).unwrap_or(u64::MAX)
}

fn witness_fields(report: &WitnessReport) -> (Vec<u32>, Vec<u32>, Vec<Vec<u32>>) {
    (report.class.representative().entries().to_vec(), report.weights.weights.clone(), to_vecs(&report.witnesses))
}

/// `witness`: a class with a repeated weight, cross-checked against a full
/// scan when the budget allows.
pub fn cmd_witness(n: u32, w: Option<&[i64]>, budget: u64) -> Result<ReportDocument> {
    let weight = weight_from(n, w)?;
    if n < 3 {
        return Err(Error::OutOfDomain(format!("witness needs N >= 3, got N = {n}")));
    }
    let start = Instant::now();
    let semantics = if weight.is_classical() { Semantics::Set } else { Semantics::Indexed };
    let found: Result<WitnessReport> = if weight.is_classical() {
        if n == 6 || n >= 8 {
            classical_repeat_witness(n)
        } else {
            Err(Error::NoWitness { n, weight: weight.entries().to_vec() })
        }
    } else {
        weighted_repeat_witness(&weight)
    };
    let found = match found {
        Ok(r) => Some(r),
        Err(Error::NoWitness { .. }) => None,
        Err(e) => return Err(e),
    };
    let mut warnings = Vec::new();
    let (scan_summary, contains) = if scan_cost(n) <= budget {
        let (summary, contains) = scan(&weight, semantics, found.as_ref().map(|r| &r.class));
        (summary, Some(contains))
    } else {
        warnings.push(format!("scan skipped: {} steps exceed the budget {budget}", scan_cost(n)));
        let summary = ScanSummary {
            performed: false,
            semantics: semantics_name(semantics),
            classes_scanned: 0,
            repeated_classes: 0,
            first_repeated: None,
        };
        (summary, None)
    };
    let agreement = contains.map(|contains| match &found {
        Some(_) => contains,
        // no family member: the scan's first hit becomes the witness below
        None => weight.is_classical() || scan_summary.repeated_classes == 0,
    });
    let found = match found {
        None if weight.is_classical() && scan_summary.repeated_classes > 0 => {
            let first = scan_summary.first_repeated.clone().expect("a repeated class was seen");
            let class = CharClass::new(&weight, &ResidueVector::new(n, first)?)?;
            let data: HodgeData = hodge_data(&class, semantics);
            let (value, _) = data.first_repeat().expect("scan saw a repeat");
            let witnesses =
                data.representatives.iter().filter(|u| hodge::ht_of_vector(u).ok() == Some(value)).cloned().collect();
            Some(WitnessReport {
                multiplicity: data.multiplicity(value),
                semantics_diverge: false,
                class,
                weights: data,
                repeated_value: value,
                witnesses,
                method: WitnessMethod::Scan,
            })
        }
        other => other,
    };
    let payload = match &found {
        Some(r) => {
            let (class, weights, witnesses) = witness_fields(r);
            let message = format!(
                "class [({})] has weight {} with multiplicity {}",
                join(&class),
                r.repeated_value,
                r.multiplicity
            );
            WitnessPayload {
                found: true,
                method: Some(method_name(r.method)),
                semantics: semantics_name(semantics),
                class: Some(class),
                weights,
                repeated_value: Some(r.repeated_value),
                multiplicity: r.multiplicity,
                witnesses,
                semantics_diverge: r.semantics_diverge,
                scan: scan_summary,
                agreement,
                message,
            }
        }
        None => {
            let message = if scan_summary.performed {
                format!(
                    "no repeated-weight class exists: none found after scanning {} classes",
                    scan_summary.classes_scanned
                )
            } else {
                "no repeated-weight class found".to_string()
            };
            WitnessPayload {
                found: false,
                method: None,
                semantics: semantics_name(semantics),
                class: None,
                weights: vec![],
                repeated_value: None,
                multiplicity: 0,
                witnesses: vec![],
                semantics_diverge: false,
                scan: scan_summary,
                agreement,
                message,
            }
        }
    };
    let mut doc =
        ReportDocument::new(echo("witness", &weight, &[]), n, weight.entries().to_vec(), Payload::Witness(payload));
    doc.warnings = warnings;
    doc.timings.push(("witness".into(), start.elapsed()));
    Ok(doc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyChoice {
    Naive,
    Fast,
    Both,
    /// Fast when supported, naive otherwise.
    Auto,
}

impl StrategyChoice {
    pub fn name(self) -> &'static str {
        match self {
            StrategyChoice::Naive => "naive",
            StrategyChoice::Fast => "fast",
            StrategyChoice::Both => "both",
            StrategyChoice::Auto => "auto",
        }
    }
}

impl std::str::FromStr for StrategyChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(StrategyChoice::Naive),
            "fast" => Ok(StrategyChoice::Fast),
            "both" => Ok(StrategyChoice::Both),
            "auto" => Ok(StrategyChoice::Auto),
            _ => Err(Error::Usage(format!("unknown strategy {s:?}; expected naive, fast, both or auto"))),
        }
    }
}

/// A field element given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementInput {
    /// An integer in the prime field, `0 <= t < p`.
    Integer(u64),
    /// Polynomial coefficients over the prime field, constant term first.
    Coefficients(Vec<u32>),
}

/// `3` is an integer; `1,0,2` are coefficients.
pub fn parse_element(s: &str) -> Result<ElementInput> {
    if s.contains(',') {
        let values = parse_list(s)?;
        let coeffs = values
            .into_iter()
            .map(|x| u32::try_from(x).map_err(|_| Error::Usage(format!("coefficient {x} is out of range"))))
            .collect::<Result<Vec<u32>>>()?;
        Ok(ElementInput::Coefficients(coeffs))
    } else {
        s.trim().parse::<u64>().map(ElementInput::Integer).map_err(|_| Error::Usage(format!("cannot parse t = {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct CountRequest {
    pub n: u32,
    pub w: Option<Vec<i64>>,
    pub p: u64,
    pub m: u32,
    pub t: ElementInput,
    pub strategy: StrategyChoice,
    /// Count over `F_{q^k}` for `k = 1..=tower` as well.
    pub tower: Option<u32>,
}

fn count_row(c: &FiberCount) -> CountRow {
    CountRow {
        strategy: c.strategy.name().to_string(),
        projective_count: c.projective_count,
        middle_trace: c.middle_trace,
        weil_bound_holds: c.weil_bound_holds(),
    }
}

/// `count`: points of one fiber, its middle trace and the Weil check.
pub fn cmd_count(req: &CountRequest, options: &CountOptions) -> Result<ReportDocument> {
    let weight = weight_from(req.n, req.w.as_deref())?;
    let field = Arc::new(field_make(req.p, req.m)?);
    let t = match &req.t {
        ElementInput::Integer(v) => {
            if *v >= req.p {
                return Err(Error::Usage(format!("t = {v} is not a canonical lift into F_{}", req.p)));
            }
            field.from_int(*v as i64)
        }
        ElementInput::Coefficients(c) => field.from_coeffs(c)?,
    };
    let spec = FiberSpec::new(weight.clone(), field.clone(), t)?;
    let fast_supported = fast_counter_supports(&spec);
    let mut counts = Vec::new();
    match req.strategy {
        StrategyChoice::Naive => counts.push(count_projective_naive(&spec, options)?),
        StrategyChoice::Fast => counts.push(count_projective_fast(&spec, options)?),
        StrategyChoice::Both => {
            counts.push(count_projective_naive(&spec, options)?);
            counts.push(count_projective_fast(&spec, options)?);
        }
        StrategyChoice::Auto if fast_supported => counts.push(count_projective_fast(&spec, options)?),
        StrategyChoice::Auto => counts.push(count_projective_naive(&spec, options)?),
    }
    let counts_agree =
        (counts.len() > 1).then(|| counts.windows(2).all(|w| w[0].projective_count == w[1].projective_count));
    let tower_start = Instant::now();
    let tower = match req.tower {
        Some(levels) => tower_counts(&spec, levels, options)?
            .into_iter()
            .enumerate()
            .map(|(i, c)| TowerLevel {
                m: i as u32 + 1,
                q: c.spec.q(),
                t: c.spec.field().coeffs(c.spec.t()),
                projective_count: c.projective_count,
                middle_trace: c.middle_trace,
                weil_bound_holds: c.weil_bound_holds(),
            })
            .collect(),
        None => vec![],
    };
    let tower_elapsed = tower_start.elapsed();
    let mut warnings = spec.notes();
    if weight.modulus() >= 3 && (weight.modulus() - 2) % 2 == 0 {
        warnings.push(format!("N - 2 = {} is even; the middle trace is not reported", weight.modulus() - 2));
    }
    let mut timings: Vec<(String, std::time::Duration)> =
        counts.iter().map(|c| (c.strategy.name().to_string(), c.elapsed)).collect();
    let t_coeffs = field.coeffs(t);
    let mut extra = vec![format!("--p {}", req.p)];
    if req.m != 1 {
        extra.push(format!("--m {}", req.m));
    }
    extra.push(format!("--t {}", join(&t_coeffs)));
    extra.push(format!("--strategy {}", req.strategy.name()));
    if let Some(levels) = req.tower {
        extra.push(format!("--tower {levels}"));
        timings.push(("tower".into(), tower_elapsed));
    }
    let payload = CountPayload {
        p: req.p,
        m: req.m,
        q: spec.q(),
        modulus: field.modulus().to_vec(),
        t: t_coeffs,
        middle_betti: middle_betti(weight.modulus()),
        counts: counts.iter().map(count_row).collect(),
        counts_agree,
        tower,
    };
    let mut doc = ReportDocument::new(
        echo("count", &weight, &extra),
        req.n,
        weight.entries().to_vec(),
        Payload::FiberCounts(payload),
    );
    doc.warnings = warnings;
    doc.timings = timings;
    Ok(doc)
}

/// `report`: the quintic tables in one document.
pub fn cmd_report() -> Result<ReportDocument> {
    let start = Instant::now();
    let weight = WeightVector::classical(5)?;
    let listed: Vec<(usize, CharClass)> =
        QUINTIC_LISTED.iter().enumerate().map(|(i, v)| Ok((i + 1, CharClass::classical(v)?))).collect::<Result<_>>()?;
    let orbits = sn_orbits(5)?;
    let orbit_size = |c: &CharClass| -> Result<usize> {
        let nf = orbit_normal_form(c)?;
        Ok(orbits.iter().find(|o| o.normal_form == nf).map(|o| o.size()).unwrap_or(0))
    };
    let by_class = |rows: &mut Vec<(usize, CharClass)>| rows.sort_by(|a, b| a.1.cmp(&b.1));
    let mut sorted = listed.clone();
    by_class(&mut sorted);

    let listed_rows = sorted
        .iter()
        .map(|(order, c)| {
            Ok(ListedClass {
                display_order: *order,
                class: c.representative().entries().to_vec(),
                normal_form: orbit_normal_form(c)?.entries().to_vec(),
                orbit_size: orbit_size(c)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let orbit_rows: Vec<OrbitSummary> = orbits
        .iter()
        .map(|o| {
            let mut hits: Vec<usize> =
                listed.iter().filter(|(_, c)| o.classes.contains(c)).map(|(order, _)| *order).collect();
            hits.sort_unstable();
            OrbitSummary { normal_form: o.normal_form.entries().to_vec(), size: o.size(), listed: hits }
        })
        .collect();
    let cover = orbit_rows.iter().all(|o| !o.listed.is_empty());

    let hodge_table = sorted
        .iter()
        .map(|(order, c)| {
            let data = hodge_data(c, Semantics::Set);
            ListedHodgeRow {
                display_order: *order,
                class: c.representative().entries().to_vec(),
                dimension: data.dimension,
                weights: data.weights,
            }
        })
        .collect();
    let nonzero_representatives = sorted
        .iter()
        .filter(|(order, _)| QUINTIC_TABULATED.contains(&(order - 1)))
        .map(|(order, c)| RepresentativeRow {
            display_order: *order,
            class: c.representative().entries().to_vec(),
            representatives: to_vecs(&hodge_data(c, Semantics::Set).representatives),
        })
        .collect();
    let (census, total_dimension) = census(&weight);
    let duality = sorted
        .iter()
        .map(|(order, c)| {
            let d = dual_class(c);
            let weights = hodge_data(c, Semantics::Set).weights;
            let dual_weights = hodge_data(&d, Semantics::Set).weights;
            let mut reflected: Vec<u32> = weights.iter().map(|&h| 3 - h).collect();
            reflected.sort_unstable();
            Ok(DualRow {
                display_order: *order,
                class: c.representative().entries().to_vec(),
                dual_class: d.representative().entries().to_vec(),
                dual_normal_form: orbit_normal_form(&d)?.entries().to_vec(),
                reflected: reflected == dual_weights,
                weights,
                dual_weights,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut warnings = Vec::new();
    if orbits.len() != QUINTIC_LISTED.len() {
        warnings.push(format!(
            "the {} listed classes fall into {} permutation orbits",
            QUINTIC_LISTED.len(),
            orbits.len()
        ));
    }
    let payload = FullReport {
        listed: listed_rows,
        orbits: orbit_rows,
        listed_cover_all_orbits: cover,
        hodge_table,
        nonzero_representatives,
        census,
        total_dimension,
        middle_betti: middle_betti(5),
        duality,
    };
    let mut doc = ReportDocument::new("report".into(), 5, weight.entries().to_vec(), Payload::Report(payload));
    doc.warnings = warnings;
    doc.timings.push(("report".into(), start.elapsed()));
    Ok(doc)
}
