use std::fmt::Write;

use super::*;

fn vec(v: &[u32]) -> String {
    let inner: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("({})", inner.join(","))
}

fn class(v: &[u32]) -> String {
    format!("[{}]", vec(v))
}

fn multiset(v: &[u32]) -> String {
    let inner: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn vecs(v: &[Vec<u32>]) -> String {
    let inner: Vec<String> = v.iter().map(|u| vec(u)).collect();
    format!("{{{}}}", inner.join(","))
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_else(|| "-".into())
}

fn census_lines(out: &mut String, census: &[CensusRow], total: u64) {
    let terms: Vec<String> = census.iter().rev().map(|r| format!("{} x dim {}", r.classes, r.dimension)).collect();
    let _ = writeln!(out, "census: {} = {}", terms.join(" + "), total);
}

/// Plain-text rendering. Carries the same numbers as the JSON form, plus
/// timings.
pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", doc.command);
    let _ = writeln!(out, "N = {}, W = {}", doc.n, vec(&doc.w));
    match &doc.payload {
        Payload::ClassTable(t) => {
            let _ = writeln!(out, "{} classes", t.class_count);
            for r in &t.classes {
                let _ = writeln!(out, "{:<24} dim {:<3} HT {}", class(&r.class), r.dimension, multiset(&r.weights));
            }
        }
        Payload::OrbitTable(t) => {
            let _ = writeln!(out, "{} classes in {} orbits", t.class_count, t.orbit_count);
            for o in &t.orbits {
                let _ = writeln!(
                    out,
                    "orbit {} size {} dim {} HT {}",
                    class(&o.normal_form),
                    o.size,
                    o.dimension,
                    multiset(&o.weights)
                );
                for c in &o.classes {
                    let _ = writeln!(out, "  {}", class(c));
                }
            }
        }
        Payload::HodgeTable(t) => {
            let _ = writeln!(out, "{:<24} {:>5} {:>5}  HT", "v", "orbit", "dim");
            for r in &t.rows {
                let mut line = format!(
                    "{:<24} {:>5} {:>5}  {}",
                    class(&r.class),
                    opt(&r.orbit_size),
                    r.dimension,
                    multiset(&r.weights)
                );
                if r.semantics_diverge {
                    let _ = write!(line, "  indexed {}", multiset(&r.indexed_weights));
                }
                let _ = writeln!(out, "{line}");
            }
            census_lines(&mut out, &t.census, t.total_dimension);
        }
        Payload::ClassDetail(d) => {
            let _ = writeln!(out, "v = {} in class {}", vec(&d.input), class(&d.class));
            let _ = writeln!(out, "dim {} HT {}", d.dimension, multiset(&d.weights));
            let _ = writeln!(out, "totally nonzero representatives {}", vecs(&d.representatives));
            if d.semantics_diverge {
                let _ = writeln!(
                    out,
                    "indexed reading: HT {} from {}",
                    multiset(&d.indexed_weights),
                    vecs(&d.indexed_representatives)
                );
            }
            let _ = writeln!(out, "dual {} HT {}", class(&d.dual_class), multiset(&d.dual_weights));
            let _ = writeln!(out, "relabel invariant: {}", d.relabel_invariant);
        }
        Payload::Witness(w) => {
            let _ = writeln!(out, "{}", w.message);
            if let Some(c) = &w.class {
                let _ =
                    writeln!(out, "method {} ({} semantics), HT {}", opt(&w.method), w.semantics, multiset(&w.weights));
                let _ = writeln!(out, "witnesses {}", vecs(&w.witnesses));
                let _ = writeln!(out, "class {} semantics diverge: {}", class(c), w.semantics_diverge);
            }
            if w.scan.performed {
                let _ = writeln!(
                    out,
                    "scan: {} classes, {} with a repeat, first {}",
                    w.scan.classes_scanned,
                    w.scan.repeated_classes,
                    w.scan.first_repeated.as_deref().map(class).unwrap_or_else(|| "-".into())
                );
            } else {
                let _ = writeln!(out, "scan: skipped");
            }
            let _ = writeln!(out, "agreement: {}", opt(&w.agreement));
        }
        Payload::FiberCounts(c) => {
            if c.m == 1 {
                let _ = writeln!(out, "F_{}, t = {}", c.q, vec(&c.t));
            } else {
                let _ = writeln!(out, "F_{} = F_{}[x]/{}, t = {}", c.q, c.p, vec(&c.modulus), vec(&c.t));
            }
            for r in &c.counts {
                let _ = writeln!(
                    out,
                    "{:<6} #Y_t = {:<12} a_q = {:<10} Weil bound (b = {}): {}",
                    r.strategy,
                    r.projective_count,
                    opt(&r.middle_trace),
                    c.middle_betti,
                    opt(&r.weil_bound_holds)
                );
            }
            if let Some(agree) = c.counts_agree {
                let _ = writeln!(out, "counts agree: {agree}");
            }
            for l in &c.tower {
                let _ = writeln!(
                    out,
                    "m = {:<3} q = {:<10} t = {:<12} #Y_t = {:<14} a_q = {:<12} Weil: {}",
                    l.m,
                    l.q,
                    vec(&l.t),
                    l.projective_count,
                    opt(&l.middle_trace),
                    opt(&l.weil_bound_holds)
                );
            }
        }
        Payload::Report(r) => {
            let _ = writeln!(out, "listed classes (#, class, orbit normal form, orbit size):");
            for l in &r.listed {
                let _ = writeln!(
                    out,
                    "  {} {:<20} {:<16} {}",
                    l.display_order,
                    class(&l.class),
                    vec(&l.normal_form),
                    l.orbit_size
                );
            }
            let _ = writeln!(out, "orbits ({}), every orbit listed: {}", r.orbits.len(), r.listed_cover_all_orbits);
            for o in &r.orbits {
                let listed: Vec<String> = o.listed.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "  {:<16} size {:<3} listed #{}", vec(&o.normal_form), o.size, listed.join(",#"));
            }
            let _ = writeln!(out, "dimension and HT:");
            for h in &r.hodge_table {
                let _ = writeln!(
                    out,
                    "  {} {:<20} {} {}",
                    h.display_order,
                    class(&h.class),
                    h.dimension,
                    multiset(&h.weights)
                );
            }
            let _ = writeln!(out, "totally nonzero representatives:");
            for t in &r.nonzero_representatives {
                let _ = writeln!(out, "  {} {:<20} {}", t.display_order, class(&t.class), vecs(&t.representatives));
            }
            census_lines(&mut out, &r.census, r.total_dimension);
            let _ = writeln!(out, "middle Betti number {}", r.middle_betti);
            let _ = writeln!(out, "duality:");
            for d in &r.duality {
                let _ = writeln!(
                    out,
                    "  {} {:<20} <-> {:<20} orbit {:<16} HT {} / {} reflected {}",
                    d.display_order,
                    class(&d.class),
                    class(&d.dual_class),
                    vec(&d.dual_normal_form),
                    multiset(&d.weights),
                    multiset(&d.dual_weights),
                    d.reflected
                );
            }
        }
    }
    for w in &doc.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    for (label, elapsed) in &doc.timings {
        let _ = writeln!(out, "time {label}: {:.3}s", elapsed.as_secs_f64());
    }
    out
}
