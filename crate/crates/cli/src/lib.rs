//! Command implementations behind the `regedge` binary. Every command is a
//! thin adapter over the `regedge` library and returns plain text with a
//! stable key order.

pub mod suites;

use std::fmt;
use std::path::Path;

use regedge::generate::all_graphs;
use regedge::reductions::identify_vertices;
use regedge::*;

use suites::{check_graph, edge_name, Summary};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAPACITY: i32 = 3;
}

/// An error together with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => exit::CAPACITY,
            _ => exit::USAGE,
        };
        CliError { code, message: e.to_string() }
    }
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: exit::USAGE, message: message.into() }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn load_graph(path: &Path) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    })
}

/// The corpus shipped with the binary, as `(file name, contents)`.
pub const CORPUS: &[(&str, &str)] = &[
    ("c4.el", include_str!("../../../corpus/c4.el")),
    ("c5.el", include_str!("../../../corpus/c5.el")),
    ("example1.el", include_str!("../../../corpus/example1.el")),
    ("example2.el", include_str!("../../../corpus/example2.el")),
    ("example3.el", include_str!("../../../corpus/example3.el")),
    ("p3.el", include_str!("../../../corpus/p3.el")),
    ("p4.el", include_str!("../../../corpus/p4.el")),
    ("remark-counterexample.el", include_str!("../../../corpus/remark-counterexample.el")),
    ("star.el", include_str!("../../../corpus/star.el")),
    ("triangle.el", include_str!("../../../corpus/triangle.el")),
    ("whiskered-triangle.el", include_str!("../../../corpus/whiskered-triangle.el")),
];

// ---------------------------------------------------------------- analyze

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFlags {
    pub edge: String,
    pub property_p: bool,
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub vertices: usize,
    pub edges: usize,
    pub loops: usize,
    pub edge_flags: Vec<EdgeFlags>,
    /// `None` for graphs with loops, where the classes are not defined.
    pub coveredness: Option<CoverednessClass>,
    pub certificate: Vec<String>,
    pub series: SeriesReport,
    pub notes: Vec<String>,
}

impl AnalysisReport {
    pub fn regular_edge_count(&self) -> usize {
        self.edge_flags.iter().filter(|f| f.regular).count()
    }
}

pub fn analyze(g: &Graph) -> CliResult<AnalysisReport> {
    let mut edge_flags = Vec::new();
    for e in g.edges() {
        edge_flags.push(EdgeFlags {
            edge: edge_name(g, e),
            property_p: has_property_p(g, e)?,
            regular: is_regular_edge(g, e)?,
        });
    }
    let coveredness = if g.is_simple() { Some(coveredness_class(g)?) } else { None };
    let cert = find_regular_matching(g);
    let series = series_report(g)?;
    let mut notes = Vec::new();
    if !g.is_simple() {
        notes.push("graph has loops: coveredness and f-vector are not defined".to_owned());
    }
    if 2 * cert.len() == g.order() && g.order() > 0 && g.is_simple() {
        let via = h_vector_via_matching(g, &cert.matching(g)?)?;
        notes.push(format!("perfect regular matching found; h-vector by induced matchings {via}"));
    }
    Ok(AnalysisReport {
        vertices: g.order(),
        edges: g.edge_count(),
        loops: g.loop_count(),
        edge_flags,
        coveredness,
        certificate: cert.binomials(g),
        series,
        notes,
    })
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices)?;
        writeln!(f, "edges: {}", self.edges)?;
        writeln!(f, "loops: {}", self.loops)?;
        for e in &self.edge_flags {
            writeln!(f, "edge {}: property_p={} regular={}", e.edge, e.property_p, e.regular)?;
        }
        writeln!(f, "regular_edges: {}", self.regular_edge_count())?;
        match self.coveredness {
            Some(c) => writeln!(f, "coveredness: {c}")?,
            None => writeln!(f, "coveredness: none")?,
        }
        writeln!(f, "certificate_length: {}", self.certificate.len())?;
        writeln!(f, "certificate: {}", self.certificate.join(", "))?;
        write!(f, "{}", self.series)?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------- reduce

/// Parses `x1,y1;x2,y2` style pairs; each pair is `survivor,other` unless
/// `survivors` names the other endpoint.
pub fn parse_edge_pairs(specs: &[String]) -> CliResult<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    for spec in specs {
        for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            match item.split(',').map(str::trim).collect::<Vec<_>>().as_slice() {
                [a, b] if !a.is_empty() && !b.is_empty() => pairs.push((a.to_string(), b.to_string())),
                _ => return Err(CliError::usage(format!("expected an edge as `u,v`, found {item:?}"))),
            }
        }
    }
    Ok(pairs)
}

pub fn reduce(
    g: &Graph,
    pairs: &[(String, String)],
    kind: ReductionKind,
    survivors: &[String],
) -> CliResult<(Graph, ReductionTrace)> {
    if !survivors.is_empty() && survivors.len() != pairs.len() {
        return Err(CliError::usage(format!(
            "{} survivors given for {} edges",
            survivors.len(),
            pairs.len()
        )));
    }
    let mut edges = Vec::with_capacity(pairs.len());
    for (i, (a, b)) in pairs.iter().enumerate() {
        let e = Edge(g.vertex(a)?, g.vertex(b)?);
        let e = match survivors.get(i) {
            None => e,
            Some(s) if s == a => e,
            Some(s) if s == b => e.reversed(),
            Some(s) => return Err(CliError::usage(format!("survivor {s} is not an endpoint of {a},{b}"))),
        };
        edges.push(e);
    }
    let m = Matching::new(g, edges)?;
    Ok(apply_sequence(g, &m, kind)?)
}

pub fn render_reduction(result: &Graph, trace: &ReductionTrace) -> String {
    let mut out = result.to_edge_list();
    for line in trace.to_string().lines() {
        out.push_str(&format!("# {line}\n"));
    }
    out
}

// ---------------------------------------------------------------- regseq

pub fn regseq(g: &Graph) -> String {
    let cert = find_regular_matching(g);
    let mut out = format!("steps: {}\n", cert.len());
    for (i, (s, b)) in cert.steps.iter().zip(cert.binomials(g)).enumerate() {
        out.push_str(&format!(
            "step {}: edge {} survivor={} sequence_element={b}\n",
            i + 1,
            edge_name(g, s.edge),
            g.name(s.edge.0)
        ));
    }
    out
}

// ---------------------------------------------------------------- verify

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Exhaustive,
}

pub fn corpus_from_dir(dir: &Path) -> CliResult<Vec<(String, String)>> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::usage(e.to_string()))?.path();
        if path.extension().is_some_and(|x| x == "el") {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
            let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
            files.push((name, text));
        }
    }
    files.sort();
    Ok(files)
}

pub fn embedded_corpus() -> Vec<(String, String)> {
    CORPUS.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect()
}

fn named_edge(g: &Graph, a: &str, b: &str) -> Result<Edge> {
    let e = Edge(g.vertex(a)?, g.vertex(b)?);
    if g.contains_edge(e) {
        Ok(e)
    } else {
        Err(Error::Domain(format!("{a}{b} is not an edge")))
    }
}

fn hvec(g: &Graph) -> Result<Vec<i64>> {
    let h = h_vector(g)?;
    Ok(h.trimmed().iter().map(|c| i64::try_from(c).unwrap_or(i64::MAX)).collect())
}

/// The three h-vector computations on one graph: Hilbert series, Stanley
/// transform of the f-vector, and the series report.
pub fn three_h_vectors(g: &Graph) -> Result<[HVector; 3]> {
    let d = g.order() - height(g);
    Ok([h_vector(g)?, h_from_f(&f_vector(g)?, d)?, series_report(g)?.hvector])
}

/// Contracts `x1x2`, `x4x6` and identifies `x3` with `x5`, checking the
/// K-polynomial after each step.
pub fn example3_sequence_keeps_k(g: &Graph) -> Result<bool> {
    let k = k_polynomial(g).poly;
    let g1 = contract_edge(g, named_edge(g, "x1", "x2")?)?;
    let g2 = contract_edge(&g1, named_edge(&g1, "x4", "x6")?)?;
    let g3 = identify_vertices(&g2, g2.vertex("x3")?, g2.vertex("x5")?)?;
    Ok([&g1, &g2, &g3].iter().all(|h| k_polynomial(h).poly == k))
}

/// Statements tied to particular corpus files.
fn check_named(summary: &mut Summary, name: &str, g: &Graph) {
    let detail = || name.to_owned();
    let cert_len = find_regular_matching(g).len();
    let regular = |g: &Graph| g.edges().into_iter().filter(|&e| is_regular_edge(g, e).unwrap_or(false)).count();
    match name {
        "example1.el" => {
            let agree = three_h_vectors(g).and_then(|[a, b, c]| {
                let m = Matching::from_names(g, &[("x1", "y1"), ("x2", "y2"), ("x3", "y3"), ("x4", "y4")])?;
                let via = h_vector_via_matching(g, &m)?;
                Ok(a == b && b == c && via.same_values(&a))
            });
            summary.record_result("example 1: h-vector paths agree", agree, detail);
            if let Ok(h) = h_vector(g) {
                if h.trimmed() != HVector::from_i64s(&[1, 4, 2]).trimmed() {
                    summary.note(format!(
                        "example1.el: the drawn nine-edge graph has h-vector {h}; the stated value (1,4,2) is not reproduced"
                    ));
                }
            }
        }
        "example2.el" => {
            let ok = three_h_vectors(g).map(|hs| hs.iter().all(|h| h.trimmed() == HVector::from_i64s(&[1, 3, -2, -1]).trimmed()));
            summary.record_result("example 2: h-vector (1,3,-2,-1) three ways", ok, detail);
            let f = f_vector(g).map(|f| f.entries == vec![1, 7, 13, 8, 1]);
            summary.record_result("example 2: f-vector (1,7,13,8,1)", f, detail);
            summary.record("example 2: regular sequence of length 3", cert_len == 3, detail);
        }
        "example3.el" => {
            let h = hvec(g).map(|h| h == vec![1, 2, -2]);
            summary.record_result("example 3: h-vector (1,2,-2)", h, detail);
            let num = series_report(g).map(|r| r.numerator.to_string() == "1+2t-2t^2");
            summary.record_result("example 3: numerator 1+2t-2t^2", num, detail);
            let bin = g.vertex("x3").and_then(|u| is_binomial_regular(g, u, g.vertex("x5")?));
            summary.record_result("example 3: x3 + x5 regular", bin, detail);
            summary.record_result("example 3: sequence keeps K", example3_sequence_keeps_k(g), detail);
        }
        "star.el" => summary.record("star: longest regular sequence 1", cert_len == 1, detail),
        "triangle.el" => {
            summary.record("triangle: no regular edges", regular(g) == 0 && cert_len == 0, detail)
        }
        "c4.el" => summary.record("c4: all edges regular", regular(g) == 4 && cert_len == 1, detail),
        "whiskered-triangle.el" => {
            let ok = h_vector(g).map(|h| h.trimmed() == HVector::from_i64s(&[1, 3]).trimmed());
            summary.record_result("whiskered triangle: h-vector (1,3,0,0)", ok, detail);
        }
        "remark-counterexample.el" => {
            let ok = (|| {
                let e1 = named_edge(g, "x1", "y1")?;
                let e2 = named_edge(g, "x2", "y2")?;
                let p = polarize_edge(g, e1)?;
                let e2p = named_edge(&p, "x2", "y2")?;
                Ok(is_regular_edge(g, e1)? && is_regular_edge(g, e2)? && regularity_hs_test(&p, e2p, e2p.0)?)
            })();
            summary.record_result("remark: second edge stays regular after polarizing", ok, detail);
        }
        _ => {}
    }
}

pub fn verify_corpus(files: &[(String, String)]) -> Summary {
    let mut summary = Summary::default();
    for (name, text) in files {
        match parse_edge_list(text) {
            Ok(g) => {
                summary.record("corpus file parses", true, String::new);
                check_graph(&mut summary, name, &g);
                check_named(&mut summary, name, &g);
            }
            Err(e) => summary.record("corpus file parses", false, || format!("{name}: {e}")),
        }
    }
    summary
}

/// All simple graphs on up to six vertices and all looped graphs on up to
/// five, one worker thread per vertex count.
pub fn verify_exhaustive() -> Summary {
    let jobs: Vec<(usize, bool)> = (0..=6).map(|n| (n, false)).chain((1..=5).map(|n| (n, true))).collect();
    let parts: Vec<Summary> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|&(n, looped)| {
                scope.spawn(move || {
                    let mut summary = Summary::default();
                    let graphs = all_graphs(n, if looped { n } else { 0 }).filter(|g| g.is_simple() != looped);
                    for g in graphs {
                        check_graph(&mut summary, &format!("all graphs n={n}"), &g);
                    }
                    summary
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut summary = Summary::default();
    for p in parts {
        summary.merge(p);
    }
    summary
}

pub fn verify(level: Level, corpus: &[(String, String)]) -> Summary {
    let mut summary = verify_corpus(corpus);
    if level == Level::Exhaustive {
        summary.merge(verify_exhaustive());
    }
    summary
}
