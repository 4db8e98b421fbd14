//! Contraction `G_e` and polarization `G^e` of an edge, and their iterates.
//!
//! Quotienting `R/I(G)` by `x + y` (or `x - y`) substitutes `y -> ∓x`, which
//! as a monomial ideal is [`identify_vertices`]. Contracting an edge is the
//! special case where the substitution turns `xy` into the loop `x^2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Matching, VertexId};

/// The graph of `I(G) + (x - y)` after eliminating `drop`: every edge
/// `{a, drop}` becomes `{a, keep}` and a loop at `drop` moves to `keep`.
/// When `keep` and `drop` are adjacent the result has a loop at `keep`.
pub fn identify_vertices(g: &Graph, keep: VertexId, drop: VertexId) -> Result<Graph> {
    g.check_vertex(keep)?;
    g.check_vertex(drop)?;
    if keep == drop {
        return Err(Error::domain("cannot identify a vertex with itself"));
    }
    let image = |v: VertexId| if v == drop { keep } else { v };
    let mut out = Graph::new();
    for v in g.vertex_ids().filter(|&v| v != drop) {
        out.add_vertex(g.name(v))?;
    }
    let new_id = |out: &Graph, v: VertexId| out.vertex(g.name(image(v)));
    for v in g.loops().iter() {
        let id = new_id(&out, v)?;
        out.add_loop(id)?;
    }
    for e in g.edges() {
        let a = new_id(&out, e.0)?;
        let b = new_id(&out, e.1)?;
        if a == b {
            out.add_loop(a)?;
        } else {
            out.add_edge(a, b)?;
        }
    }
    Ok(out)
}

/// `G_e` for `e = (x, y)`: `y` is removed and `x` survives with a loop.
pub fn contract_edge(g: &Graph, e: Edge) -> Result<Graph> {
    g.require_edge(e)?;
    identify_vertices(g, e.0, e.1)
}

/// `G^e` for `e = (x, y)`: the edges `{a, y}` with `a != x` move to `x`, and
/// `y` stays behind as a leaf on `x`.
pub fn polarize_edge(g: &Graph, e: Edge) -> Result<Graph> {
    g.require_edge(e)?;
    let Edge(x, y) = e;
    let mut out = Graph::new();
    for v in g.vertex_ids() {
        out.add_vertex(g.name(v))?;
    }
    for v in g.loops().iter().filter(|&v| v != y) {
        out.add_loop(v)?;
    }
    for Edge(a, b) in g.edges() {
        let (a, b) = match (a == y, b == y) {
            (false, false) => (a, b),
            (true, _) if b == x => (x, y),
            (_, true) if a == x => (x, y),
            (true, _) => (b, x),
            (_, true) => (a, x),
        };
        out.add_edge(a, b)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    Contract,
    Polarize,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionKind::Contract => "contract",
            ReductionKind::Polarize => "polarize",
        })
    }
}

impl std::str::FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "contract" => Ok(ReductionKind::Contract),
            "polarize" => Ok(ReductionKind::Polarize),
            other => Err(Error::domain(format!("unknown reduction kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub survivor: String,
    pub other: String,
    pub kind: ReductionKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub source: Graph,
    pub steps: Vec<ReductionStep>,
    pub result: Graph,
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(
                f,
                "step {}: {} {{{},{}}} survivor={}",
                i + 1,
                s.kind,
                s.survivor,
                s.other,
                s.survivor
            )?;
        }
        Ok(())
    }
}

/// Left fold of the single-edge reduction over the matching, each edge
/// oriented with its first vertex surviving.
pub fn apply_sequence(g: &Graph, m: &Matching, kind: ReductionKind) -> Result<(Graph, ReductionTrace)> {
    let mut current = g.clone();
    let mut steps = Vec::with_capacity(m.len());
    for &Edge(x, y) in m.edges() {
        let (xn, yn) = (g.name(x), g.name(y));
        let e = Edge(current.vertex(xn)?, current.vertex(yn)?);
        current = match kind {
            ReductionKind::Contract => contract_edge(&current, e)?,
            ReductionKind::Polarize => polarize_edge(&current, e)?,
        };
        steps.push(ReductionStep {
            survivor: xn.to_owned(),
            other: yn.to_owned(),
            kind,
        });
    }
    let trace = ReductionTrace {
        source: g.clone(),
        steps,
        result: current.clone(),
    };
    Ok((current, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn edge(g: &Graph, a: &str, b: &str) -> Edge {
        Edge(g.vertex(a).unwrap(), g.vertex(b).unwrap())
    }

    const C4: &str = "x1 x2\nx2 x3\nx3 x4\nx4 x1";

    #[test]
    fn contract_c4() {
        let c4 = parse_edge_list(C4).unwrap();
        let h = contract_edge(&c4, edge(&c4, "x1", "x2")).unwrap();
        assert_eq!(h, parse_edge_list("x1 x1\nx1 x3\nx3 x4\nx4 x1").unwrap());
    }

    #[test]
    fn contract_single_edge_and_star() {
        let e = parse_edge_list("x y").unwrap();
        assert_eq!(contract_edge(&e, edge(&e, "x", "y")).unwrap(), parse_edge_list("x x").unwrap());

        let star = parse_edge_list("x y1\nx y2\nx y3").unwrap();
        let j = contract_edge(&star, edge(&star, "x", "y1")).unwrap();
        assert_eq!(j, parse_edge_list("x x\nx y2\nx y3").unwrap());
    }

    #[test]
    fn contraction_merges_common_neighbours_and_migrates_loops() {
        let g = parse_edge_list("x y\nx a\ny a\ny y").unwrap();
        let h = contract_edge(&g, edge(&g, "x", "y")).unwrap();
        assert_eq!(h, parse_edge_list("x x\nx a").unwrap());
    }

    #[test]
    fn contract_rejects_non_edges() {
        let c4 = parse_edge_list(C4).unwrap();
        assert!(contract_edge(&c4, edge(&c4, "x1", "x3")).is_err());
        assert!(polarize_edge(&c4, edge(&c4, "x1", "x3")).is_err());
    }

    #[test]
    fn identify_non_adjacent_pair() {
        let p3 = parse_edge_list("a b\nb c").unwrap();
        let h = identify_vertices(&p3, p3.vertex("a").unwrap(), p3.vertex("c").unwrap()).unwrap();
        assert_eq!(h, parse_edge_list("a b").unwrap());
    }

    #[test]
    fn polarize_c4_and_single_edge() {
        let c4 = parse_edge_list(C4).unwrap();
        let h = polarize_edge(&c4, edge(&c4, "x1", "x2")).unwrap();
        assert_eq!(h, parse_edge_list("x1 x2\nx1 x3\nx3 x4\nx4 x1").unwrap());
        assert!(h.is_leaf(h.vertex("x2").unwrap()));

        let e = parse_edge_list("x y").unwrap();
        assert_eq!(polarize_edge(&e, edge(&e, "x", "y")).unwrap(), e);
    }

    #[test]
    fn counts_change_as_expected() {
        let g = parse_edge_list("a b\nb c\nc d\nd a\na c\nd e").unwrap();
        for e in g.edges() {
            for e in [e, e.reversed()] {
                assert_eq!(contract_edge(&g, e).unwrap().order(), g.order() - 1);
                assert_eq!(polarize_edge(&g, e).unwrap().order(), g.order());
            }
        }
    }

    #[test]
    fn sequences_on_the_bipartite_example() {
        let g = parse_edge_list(
            "x1 y1\nx2 y2\nx3 y3\nx4 y4\nx1 y2\nx1 y3\nx1 y4\nx2 y3\nx2 y4",
        )
        .unwrap();
        let m = Matching::from_names(&g, &[("x1", "y1"), ("x2", "y2"), ("x3", "y3"), ("x4", "y4")])
            .unwrap();

        let (contracted, trace) = apply_sequence(&g, &m, ReductionKind::Contract).unwrap();
        let centre = parse_edge_list(
            "x1 x1\nx2 x2\nx3 x3\nx4 x4\nx1 x2\nx1 x3\nx1 x4\nx2 x3\nx2 x4",
        )
        .unwrap();
        assert_eq!(contracted.order(), 4);
        assert_eq!(contracted.edges().len(), centre.edges().len());
        assert_eq!(contracted.loop_count(), 4);
        for e in centre.edges() {
            let (a, b) = (centre.name(e.0), centre.name(e.1));
            assert!(contracted.has_edge(contracted.vertex(a).unwrap(), contracted.vertex(b).unwrap()));
        }
        assert_eq!(trace.steps.len(), 4);
        assert_eq!(trace.steps[0].survivor, "x1");

        let (polarized, _) = apply_sequence(&g, &m, ReductionKind::Polarize).unwrap();
        assert_eq!(polarized.edge_count(), 9);
        assert!(polarized.is_simple());
        for y in ["y1", "y2", "y3", "y4"] {
            assert!(polarized.is_leaf(polarized.vertex(y).unwrap()));
        }
        for (a, b) in [("x1", "x2"), ("x1", "x3"), ("x1", "x4"), ("x2", "x3"), ("x2", "x4")] {
            assert!(polarized.has_edge(polarized.vertex(a).unwrap(), polarized.vertex(b).unwrap()));
        }

        let (same, trace) = apply_sequence(&g, &Matching::default(), ReductionKind::Contract).unwrap();
        assert_eq!(same, g);
        assert!(trace.steps.is_empty());
    }
}
