//! Per-graph theorem checks shared by `verify` and the acceptance suite.
//! Each check compares a combinatorial criterion with an algebraic oracle.

use std::collections::BTreeMap;
use std::fmt;

use regedge::covers::MAX_ORACLE_VERTICES;
use regedge::hilbert::{binomial_hs_test, krull_dimension, krull_dimension_from_independent_sets};
use regedge::regularity::{augmented_graph, no_associated_prime_squares, no_minimal_cover_contains};
use regedge::*;

/// Pass/fail counts for one named check, with the first failure kept for
/// the report.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

/// Aggregated results of many checks over many graphs. Check names are kept
/// in sorted order so the summary is deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub tallies: BTreeMap<String, Tally>,
    /// Known deviations that are reported but do not fail verification,
    /// with a count and the first example.
    pub observations: BTreeMap<String, (usize, String)>,
    pub notes: Vec<String>,
}

impl Summary {
    pub fn record(&mut self, check: &str, ok: bool, detail: impl FnOnce() -> String) {
        let t = self.tallies.entry(check.to_owned()).or_default();
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
            if t.first_failure.is_none() {
                t.first_failure = Some(detail());
            }
        }
    }

    /// Records `Ok(true)` as a pass and anything else as a failure.
    pub fn record_result(&mut self, check: &str, result: Result<bool>, detail: impl FnOnce() -> String) {
        match result {
            Ok(ok) => self.record(check, ok, detail),
            Err(e) => self.record(check, false, || format!("{}: {e}", detail())),
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    pub fn observe(&mut self, what: &str, example: impl FnOnce() -> String) {
        self.observations
            .entry(what.to_owned())
            .and_modify(|(n, _)| *n += 1)
            .or_insert_with(|| (1, example()));
    }

    pub fn merge(&mut self, other: Summary) {
        for (name, t) in other.tallies {
            let mine = self.tallies.entry(name).or_default();
            mine.passed += t.passed;
            mine.failed += t.failed;
            if mine.first_failure.is_none() {
                mine.first_failure = t.first_failure;
            }
        }
        for (what, (count, example)) in other.observations {
            self.observations
                .entry(what)
                .and_modify(|(n, _)| *n += count)
                .or_insert((count, example));
        }
        for n in other.notes {
            self.note(n);
        }
    }

    pub fn passed(&self) -> usize {
        self.tallies.values().map(|t| t.passed).sum()
    }

    pub fn failed(&self) -> usize {
        self.tallies.values().map(|t| t.failed).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, t) in &self.tallies {
            let status = if t.failed == 0 { "ok" } else { "FAIL" };
            writeln!(f, "{status} {name}: passed={} failed={}", t.passed, t.failed)?;
            if let Some(first) = &t.first_failure {
                writeln!(f, "  first failure: {}", first.replace('\n', " | "))?;
            }
        }
        for (what, (count, example)) in &self.observations {
            writeln!(f, "note: {what}: {count} graph(s), first {}", example.replace('\n', " | "))?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        writeln!(f, "total: passed={} failed={}", self.passed(), self.failed())
    }
}

pub fn edge_name(g: &Graph, e: Edge) -> String {
    format!("{{{},{}}}", g.name(e.0), g.name(e.1))
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|&e| edge_name(g, e)).collect();
    let loops: Vec<&str> = g.loops().iter().map(|v| g.name(v)).collect();
    format!("n={} edges=[{}] loops=[{}]", g.order(), edges.join(" "), loops.join(" "))
}

/// The three regularity readings of `e`: Property P, the associated-prime
/// oracle and the Hilbert-series test.
pub fn regularity_views(g: &Graph, e: Edge) -> Result<[bool; 3]> {
    Ok([
        is_regular_edge(g, e)?,
        is_regular_edge_oracle(g, e)?,
        regularity_hs_test(g, e, e.0)?,
    ])
}

/// The seven readings of regularity of `u + v` for a non-adjacent pair.
pub fn binomial_views(g: &Graph, u: VertexId, v: VertexId) -> Result<[bool; 7]> {
    let hat = augmented_graph(g, u, v)?;
    Ok([
        is_binomial_regular(g, u, v)?,
        binomial_hs_test(g, u, v)?,
        regularity_hs_test(&hat, Edge(u, v), u)?,
        no_associated_prime_squares(g, u, v)?,
        no_associated_prime_squares(&hat, u, v)?,
        no_minimal_cover_contains(g, u, v),
        no_minimal_cover_contains(&hat, u, v),
    ])
}

/// Every perfect matching of `g`, each listed from the lowest vertex up.
pub fn perfect_matchings(g: &Graph) -> Vec<Vec<Edge>> {
    fn go(g: &Graph, free: VertexSet, acc: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
        let Some(v) = free.iter().next() else {
            out.push(acc.clone());
            return;
        };
        for u in g.adjacent(v).intersection(free).without(v).iter() {
            acc.push(Edge(v, u));
            go(g, free.without(v).without(u), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if g.order().is_multiple_of(2) {
        go(g, g.all_vertices(), &mut Vec::new(), &mut out);
    }
    out
}

/// Whether some perfect matching consists of Property P edges.
pub fn has_property_p_perfect_matching(g: &Graph) -> Result<bool> {
    for m in perfect_matchings(g) {
        let mut all = true;
        for &e in &m {
            all &= has_property_p(g, e)?;
        }
        if all {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether contracting the certificate's edges one after another keeps the
/// K-polynomial unchanged at every step.
pub fn certificate_preserves_k(g: &Graph, cert: &RegularSequenceCertificate) -> Result<bool> {
    let k = k_polynomial(g).poly;
    let mut current = g.clone();
    for e in cert.oriented_edges() {
        let e = Edge(current.vertex(g.name(e.0))?, current.vertex(g.name(e.1))?);
        current = contract_edge(&current, e)?;
        if k_polynomial(&current).poly != k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the matching formula for the h-vector agrees with the Hilbert
/// series, has non-negative entries and stops by `ind(G)`.
pub fn matching_formula_holds(g: &Graph, m: &Matching) -> Result<bool> {
    let via = h_vector_via_matching(g, m)?;
    let direct = h_vector(g)?;
    let s = via.degree().unwrap_or(0);
    Ok(via.same_values(&direct) && via.is_nonnegative() && s <= g.induced_matching_number())
}

/// Runs every applicable generic check on one graph.
pub fn check_graph(summary: &mut Summary, label: &str, g: &Graph) {
    let detail = || format!("{label}: {}", describe(g));
    let oracle_ok = g.order() <= MAX_ORACLE_VERTICES;

    let k = k_polynomial(g);
    let h = h_vector(g);
    summary.record("dimension readings agree", krull_dimension(g) == krull_dimension_from_independent_sets(g), detail);

    for e in g.edges() {
        let edge_detail = || format!("{}: edge {}", detail(), edge_name(g, e));
        if oracle_ok {
            let views = regularity_views(g, e);
            summary.record_result(
                "regularity three-way agreement",
                views.map(|v| v.iter().all(|&b| b == v[0])),
                edge_detail,
            );
        }
        if matches!(is_regular_edge(g, e), Ok(true)) {
            let kept = contract_edge(g, e).map(|c| k_polynomial(&c).poly == k.poly);
            summary.record_result("regular contraction keeps K", kept, edge_detail);
            let kept = polarize_edge(g, e)
                .and_then(|p| h_vector(&p))
                .map(|hp| h.as_ref().is_ok_and(|h| *h == hp));
            summary.record_result("regular polarization keeps h", kept, edge_detail);
        }
    }

    let cert = find_regular_matching(g);
    summary.record_result("certificates keep K", certificate_preserves_k(g, &cert), detail);
    let checked = cert
        .matching(g)
        .and_then(|m| check_regular_sequence(g, &m))
        .map(|v| v.is_certified());
    summary.record_result("certificates pass the checker", checked, detail);

    if !g.is_simple() {
        return;
    }
    let consistent = f_vector(g)
        .and_then(|f| h_from_f(&f, g.order() - height(g)))
        .map(|via_f| h.as_ref().is_ok_and(|h| *h == via_f));
    summary.record_result("h-vector equals Stanley transform", consistent, detail);

    if oracle_ok {
        for u in g.vertex_ids() {
            for v in g.vertex_ids().filter(|&v| v > u && !g.has_edge(u, v)) {
                let views = binomial_views(g, u, v);
                summary.record_result(
                    "binomial regularity seven-way agreement",
                    views.map(|v| v.iter().all(|&b| b == v[0])),
                    || format!("{}: pair {},{}", detail(), g.name(u), g.name(v)),
                );
            }
        }
    }

    if g.order() > 0 && g.isolated_vertices().is_empty() {
        let vwc = coveredness_class(g).map(|c| c == CoverednessClass::VeryWellCovered);
        let agree = vwc.and_then(|vwc| Ok(vwc == has_property_p_perfect_matching(g)?));
        summary.record_result("very well covered iff Property P perfect matching", agree, detail);
        if let (Ok(lm), Ok(class)) = (levit_mandrescu_holds(g), coveredness_class(g)) {
            if lm != (class == CoverednessClass::VeryWellCovered) {
                summary.observe("|V|-ht = |E|-mat disagrees with very-well-coveredness", || {
                    format!("{} (identity {}, class {class})", detail(), if lm { "holds" } else { "fails" })
                });
            }
        }
    }

    if cert.len() * 2 == g.order() && g.order() > 0 {
        let holds = cert.matching(g).and_then(|m| matching_formula_holds(g, &m));
        summary.record_result("matching formula for the h-vector", holds, detail);
    }
}
