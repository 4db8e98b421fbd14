//! Property P, regular edges, regular binomials `x ± y`, and regular
//! sequences built from matchings.

use std::collections::HashMap;
use std::fmt;

use crate::covers::{associated_primes, enumerate_minimal_vertex_covers};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Matching, VertexId, VertexSet};

/// Neither endpoint is looped, and every `a ∈ N(x)\{y}`, `b ∈ N(y)\{x}` are
/// distinct and adjacent.
pub fn has_property_p(g: &Graph, e: Edge) -> Result<bool> {
    g.require_edge(e)?;
    Ok(property_p_unchecked(g, e))
}

fn property_p_unchecked(g: &Graph, Edge(x, y): Edge) -> bool {
    if g.has_loop(x) || g.has_loop(y) {
        return false;
    }
    let near_x = g.adjacent(x).without(y);
    let near_y = g.adjacent(y).without(x);
    near_x.is_disjoint(near_y) && near_x.iter().all(|a| near_y.is_subset(g.adjacent(a)))
}

fn touches_loop(g: &Graph, v: VertexId) -> bool {
    !g.adjacent(v).is_disjoint(g.loops())
}

/// Whether `x + y` is a nonzerodivisor on `R/I(G)`: exactly Property P,
/// with or without loops. An edge with a looped endpoint is never regular.
pub fn is_regular_edge(g: &Graph, e: Edge) -> Result<bool> {
    g.require_edge(e)?;
    Ok(regular_unchecked(g, e))
}

fn regular_unchecked(g: &Graph, e: Edge) -> bool {
    property_p_unchecked(g, e)
}

/// At most one of `N(x)`, `N(y)` meets the loop set.
pub fn loops_one_sided(g: &Graph, e: Edge) -> Result<bool> {
    g.require_edge(e)?;
    Ok(!(touches_loop(g, e.0) && touches_loop(g, e.1)))
}

/// Property P together with [`loops_one_sided`]. This implies regularity
/// but is strictly stronger once loops are present: with loops at adjacent
/// `a ∈ N(x)` and `b ∈ N(y)` the edge `{x, y}` can still be regular.
pub fn has_property_p_one_sided(g: &Graph, e: Edge) -> Result<bool> {
    Ok(has_property_p(g, e)? && loops_one_sided(g, e)?)
}

/// Regularity straight from the definition: no associated prime contains
/// both endpoints.
pub fn is_regular_edge_oracle(g: &Graph, e: Edge) -> Result<bool> {
    g.require_edge(e)?;
    let both = e.vertices();
    Ok(associated_primes(g)?
        .iter()
        .all(|q| !both.is_subset(q.generators)))
}

/// The graph with the extra edge `{u, v}`.
pub fn augmented_graph(g: &Graph, u: VertexId, v: VertexId) -> Result<Graph> {
    let mut h = g.clone();
    h.add_edge(u, v)?;
    Ok(h)
}

fn check_binomial_pair(g: &Graph, u: VertexId, v: VertexId) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.is_simple() {
        return Err(Error::domain("binomial regularity is classified for graphs without loops"));
    }
    if u == v {
        return Err(Error::domain("a binomial needs two distinct vertices"));
    }
    if g.has_edge(u, v) {
        return Err(Error::domain(format!(
            "{{{},{}}} is an edge; use is_regular_edge",
            g.name(u),
            g.name(v)
        )));
    }
    Ok(())
}

/// Whether `u ± v` is regular on `R/I(G)` for a non-adjacent pair, decided
/// by Property P of `{u, v}` in the augmented graph.
pub fn is_binomial_regular(g: &Graph, u: VertexId, v: VertexId) -> Result<bool> {
    check_binomial_pair(g, u, v)?;
    has_property_p(&augmented_graph(g, u, v)?, Edge(u, v))
}

/// No minimal vertex cover contains both `u` and `v`.
pub fn no_minimal_cover_contains(g: &Graph, u: VertexId, v: VertexId) -> bool {
    let pair = VertexSet::EMPTY.with(u).with(v);
    enumerate_minimal_vertex_covers(g)
        .iter()
        .all(|c| !pair.is_subset(c.generators))
}

/// For a monomial prime `Q`, `uv ∈ Q^2` exactly when `u, v ∈ Q`.
pub fn no_associated_prime_squares(g: &Graph, u: VertexId, v: VertexId) -> Result<bool> {
    let pair = VertexSet::EMPTY.with(u).with(v);
    Ok(associated_primes(g)?
        .iter()
        .all(|q| !pair.is_subset(q.generators)))
}

/// One step of a certified regular sequence. `edge.0` is the designated
/// vertex `x_i`, which survives contraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateStep {
    pub edge: Edge,
    /// Whether the neighbourhood condition was checked at this step (every
    /// step but the first).
    pub separated: bool,
}

/// A matching whose binomial sums `x_1+y_1, ..., x_t+y_t` form a regular
/// sequence. For `i >= 2`, `N(x_i)` avoids every earlier matched vertex and
/// every loop vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RegularSequenceCertificate {
    pub steps: Vec<CertificateStep>,
}

impl RegularSequenceCertificate {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn oriented_edges(&self) -> Vec<Edge> {
        self.steps.iter().map(|s| s.edge).collect()
    }

    pub fn matching(&self, g: &Graph) -> Result<Matching> {
        Matching::new(g, self.oriented_edges())
    }

    /// `x1+x2, x3+x4, ...` using the graph's vertex names.
    pub fn binomials(&self, g: &Graph) -> Vec<String> {
        self.steps
            .iter()
            .map(|s| format!("{} + {}", g.name(s.edge.0), g.name(s.edge.1)))
            .collect()
    }
}

impl fmt::Display for RegularSequenceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| format!("({},{})", s.edge.0.index(), s.edge.1.index()))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceVerdict {
    Certified(RegularSequenceCertificate),
    Rejected { step: usize, reason: String },
}

impl SequenceVerdict {
    pub fn certificate(&self) -> Option<&RegularSequenceCertificate> {
        match self {
            SequenceVerdict::Certified(c) => Some(c),
            SequenceVerdict::Rejected { .. } => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        self.certificate().is_some()
    }
}

/// The endpoint of `e` (tried in the given orientation first) whose
/// neighbourhood avoids `blocked`.
fn separated_orientation(g: &Graph, e: Edge, blocked: VertexSet) -> Option<Edge> {
    [e, e.reversed()]
        .into_iter()
        .find(|o| g.adjacent(o.0).is_disjoint(blocked))
}

/// Checks the sufficient condition for the edges of `m`, in order, to give a
/// regular sequence of binomials: every edge is regular and, from the second
/// edge on, some endpoint has no neighbour among earlier matched vertices or
/// loop vertices.
pub fn check_regular_sequence(g: &Graph, m: &Matching) -> Result<SequenceVerdict> {
    let mut steps = Vec::with_capacity(m.len());
    let mut used = VertexSet::EMPTY;
    for (i, &e) in m.edges().iter().enumerate() {
        if !used.is_disjoint(e.vertices()) {
            return Err(Error::domain("matching edges are not pairwise disjoint"));
        }
        if !is_regular_edge(g, e)? {
            return Ok(SequenceVerdict::Rejected {
                step: i + 1,
                reason: format!("{} is not a regular edge", g.edge_label(e)),
            });
        }
        let step = if i == 0 {
            CertificateStep { edge: e, separated: false }
        } else {
            match separated_orientation(g, e, used.union(g.loops())) {
                Some(edge) => CertificateStep { edge, separated: true },
                None => {
                    return Ok(SequenceVerdict::Rejected {
                        step: i + 1,
                        reason: format!(
                            "both endpoints of {} have neighbours among earlier edges or loops",
                            g.edge_label(e)
                        ),
                    })
                }
            }
        };
        used = used.union(e.vertices());
        steps.push(step);
    }
    Ok(SequenceVerdict::Certified(RegularSequenceCertificate { steps }))
}

/// Longest certified sequence reachable by exhaustive backtracking over
/// edge choice, orientation and position. Candidates are explored in
/// canonical edge order, so ties resolve deterministically.
pub fn find_regular_matching(g: &Graph) -> RegularSequenceCertificate {
    let regular: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&e| regular_unchecked(g, e))
        .collect();
    let mut search = Search {
        g,
        regular: &regular,
        memo: HashMap::new(),
    };
    let mut steps = Vec::new();
    let mut used = VertexSet::EMPTY;
    loop {
        let (len, choice) = search.best(used);
        let Some(idx) = choice else { break };
        let e = regular[idx];
        let step = if used.is_empty() {
            CertificateStep { edge: e, separated: false }
        } else {
            let edge = separated_orientation(g, e, used.union(g.loops()))
                .expect("search only chooses separated edges");
            CertificateStep { edge, separated: true }
        };
        steps.push(step);
        used = used.union(e.vertices());
        debug_assert!(len >= 1);
    }
    RegularSequenceCertificate { steps }
}

struct Search<'a> {
    g: &'a Graph,
    regular: &'a [Edge],
    memo: HashMap<u64, (usize, Option<usize>)>,
}

impl Search<'_> {
    /// Longest extension from the matched set `used`, and the first edge of
    /// one such extension.
    fn best(&mut self, used: VertexSet) -> (usize, Option<usize>) {
        if let Some(&hit) = self.memo.get(&used.bits()) {
            return hit;
        }
        let blocked = used.union(self.g.loops());
        let mut best = (0, None);
        for (idx, &e) in self.regular.iter().enumerate() {
            if !used.is_disjoint(e.vertices()) {
                continue;
            }
            if !used.is_empty() && separated_orientation(self.g, e, blocked).is_none() {
                continue;
            }
            let (rest, _) = self.best(used.union(e.vertices()));
            if rest + 1 > best.0 {
                best = (rest + 1, Some(idx));
            }
        }
        self.memo.insert(used.bits(), best);
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn edge(g: &Graph, a: &str, b: &str) -> Edge {
        Edge(g.vertex(a).unwrap(), g.vertex(b).unwrap())
    }

    const C4: &str = "x1 x2\nx2 x3\nx3 x4\nx4 x1";
    const TRI: &str = "a b\nb c\nc a";
    const EX1: &str = "x1 y1\nx2 y2\nx3 y3\nx4 y4\nx1 y2\nx1 y3\nx1 y4\nx2 y3\nx2 y4";
    const EX2: &str = "x1 x2\nx2 x3\nx3 x4\nx4 x5\nx5 x6\nx6 x7\nx2 x7\nx2 x5";
    const EX3: &str = "x1 x2\nx2 x3\nx2 x4\nx4 x5\nx4 x6";

    #[test]
    fn property_p_examples() {
        let p4 = parse_edge_list("a b\nb c\nc d").unwrap();
        assert!(has_property_p(&p4, edge(&p4, "a", "b")).unwrap());
        assert!(!has_property_p(&p4, edge(&p4, "b", "c")).unwrap());
        let c4 = parse_edge_list(C4).unwrap();
        assert!(has_property_p(&c4, edge(&c4, "x1", "x2")).unwrap());
        let tri = parse_edge_list(TRI).unwrap();
        for e in tri.edges() {
            assert!(!has_property_p(&tri, e).unwrap());
        }
        assert!(has_property_p(&c4, edge(&c4, "x1", "x3")).is_err());
    }

    #[test]
    fn regular_edges() {
        let c4 = parse_edge_list(C4).unwrap();
        assert!(is_regular_edge(&c4, edge(&c4, "x1", "x2")).unwrap());
        let star = parse_edge_list("x y1\nx y2\nx y3").unwrap();
        assert!(star.edges().iter().all(|&e| is_regular_edge(&star, e).unwrap()));

        // loops at a and b sit on both sides of {x, y}, yet no associated
        // prime, (a,x,b) or (a,y,b), holds both x and y
        let g = parse_edge_list("a a\na x\nx y\ny b\nb b\na b").unwrap();
        let xy = edge(&g, "x", "y");
        assert!(has_property_p(&g, xy).unwrap());
        assert!(!loops_one_sided(&g, xy).unwrap());
        assert!(!has_property_p_one_sided(&g, xy).unwrap());
        assert!(is_regular_edge(&g, xy).unwrap());
        assert!(is_regular_edge_oracle(&g, xy).unwrap());

        let looped = parse_edge_list("x x\nx y").unwrap();
        assert!(!is_regular_edge(&looped, edge(&looped, "x", "y")).unwrap());
    }

    #[test]
    fn oracle_examples() {
        let tri = parse_edge_list(TRI).unwrap();
        assert!(!is_regular_edge_oracle(&tri, edge(&tri, "a", "b")).unwrap());
        let c4 = parse_edge_list(C4).unwrap();
        assert!(is_regular_edge_oracle(&c4, edge(&c4, "x1", "x2")).unwrap());
        let p3 = parse_edge_list("a b\nb c").unwrap();
        assert!(is_regular_edge_oracle(&p3, edge(&p3, "a", "b")).unwrap());
    }

    #[test]
    fn binomial_examples() {
        let ex3 = parse_edge_list(EX3).unwrap();
        let (x3, x5) = (ex3.vertex("x3").unwrap(), ex3.vertex("x5").unwrap());
        assert!(is_binomial_regular(&ex3, x3, x5).unwrap());

        let p3 = parse_edge_list("a b\nb c").unwrap();
        let (a, c) = (p3.vertex("a").unwrap(), p3.vertex("c").unwrap());
        assert!(!is_binomial_regular(&p3, a, c).unwrap());
        assert!(!no_minimal_cover_contains(&p3, a, c));

        let iso = parse_edge_list("u\nv").unwrap();
        assert!(is_binomial_regular(&iso, VertexId(0), VertexId(1)).unwrap());

        assert!(is_binomial_regular(&p3, a, p3.vertex("b").unwrap()).is_err());
        assert!(is_binomial_regular(&p3, a, a).is_err());
        let looped = parse_edge_list("a a\nb").unwrap();
        assert!(is_binomial_regular(&looped, VertexId(0), VertexId(1)).is_err());
    }

    #[test]
    fn sequence_checks() {
        let ex2 = parse_edge_list(EX2).unwrap();
        let m = Matching::from_names(&ex2, &[("x1", "x2"), ("x3", "x4"), ("x6", "x7")]).unwrap();
        let verdict = check_regular_sequence(&ex2, &m).unwrap();
        let cert = verdict.certificate().expect("certified");
        assert_eq!(cert.len(), 3);
        // x3 touches x2, so x4 is the designated vertex
        assert_eq!(cert.steps[1].edge, edge(&ex2, "x4", "x3"));

        let c4 = parse_edge_list(C4).unwrap();
        let m = Matching::from_names(&c4, &[("x1", "x2"), ("x3", "x4")]).unwrap();
        assert!(matches!(
            check_regular_sequence(&c4, &m).unwrap(),
            SequenceVerdict::Rejected { step: 2, .. }
        ));

        let m = Matching::from_names(&c4, &[("x1", "x2")]).unwrap();
        assert!(check_regular_sequence(&c4, &m).unwrap().is_certified());

        let tri = parse_edge_list(TRI).unwrap();
        let m = Matching::from_names(&tri, &[("a", "b")]).unwrap();
        assert!(matches!(
            check_regular_sequence(&tri, &m).unwrap(),
            SequenceVerdict::Rejected { step: 1, .. }
        ));
    }

    #[test]
    fn search_lengths() {
        assert!(find_regular_matching(&parse_edge_list(TRI).unwrap()).is_empty());
        assert_eq!(find_regular_matching(&parse_edge_list(C4).unwrap()).len(), 1);
        let ex1 = parse_edge_list(EX1).unwrap();
        let cert = find_regular_matching(&ex1);
        assert_eq!(cert.len(), 4);
        assert!(ex1.is_perfect_matching(&cert.matching(&ex1).unwrap()));
        assert_eq!(find_regular_matching(&parse_edge_list(EX2).unwrap()).len(), 3);
        assert_eq!(find_regular_matching(&parse_edge_list("x y1\nx y2\nx y3").unwrap()).len(), 1);
        assert!(find_regular_matching(&Graph::new()).is_empty());
    }

    #[test]
    fn found_certificates_recheck() {
        for doc in [C4, EX1, EX2, EX3, "a b\nc d\ne f\na c", "x x\nx y\ny z\nz w\nw v"] {
            let g = parse_edge_list(doc).unwrap();
            let cert = find_regular_matching(&g);
            let m = cert.matching(&g).unwrap();
            assert_eq!(check_regular_sequence(&g, &m).unwrap(), SequenceVerdict::Certified(cert));
        }
    }
}
