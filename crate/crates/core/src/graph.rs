//! Graphs with loops, the edge-list document format, and the enumeration
//! primitives the rest of the crate is built on.
//!
//! Vertices are identified by name; the dense index of a vertex is its
//! first-appearance position. Vertex sets are machine words, so a graph holds
//! at most [`MAX_VERTICES`] vertices.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }

    fn bit(self) -> u64 {
        1u64 << self.0
    }
}

/// A set of vertices of a single graph, stored as a bitmask.
///
/// The ordering is the canonical one used for every enumeration in the
/// crate: by cardinality, then lexicographically on the sorted indices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.0 & v.bit() != 0
    }

    pub fn insert(&mut self, v: VertexId) {
        self.0 |= v.bit();
    }

    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !v.bit();
    }

    pub fn with(self, v: VertexId) -> Self {
        VertexSet(self.0 | v.bit())
    }

    pub fn without(self, v: VertexId) -> Self {
        VertexSet(self.0 & !v.bit())
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(VertexId(i))
            }
        })
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the first differing index belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An edge between two distinct vertices. The pair is ordered: the first
/// vertex plays the surviving role in contractions and matchings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge(pub VertexId, pub VertexId);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        Edge(a, b)
    }

    /// Lower index first.
    pub fn normalized(self) -> Self {
        if self.0 <= self.1 {
            self
        } else {
            Edge(self.1, self.0)
        }
    }

    pub fn reversed(self) -> Self {
        Edge(self.1, self.0)
    }

    pub fn vertices(self) -> VertexSet {
        VertexSet::EMPTY.with(self.0).with(self.1)
    }

    pub fn same_pair(self, other: Edge) -> bool {
        self.normalized() == other.normalized()
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Edge {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0, self.1).cmp(&(other.0, other.1))
    }
}

/// A finite graph whose edge ideal is generated by `xy` for each edge and
/// `v^2` for each loop vertex `v`.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    adj: Vec<u64>,
    loops: u64,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.adj == other.adj && self.loops == other.loops
    }
}

impl Eq for Graph {}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Graph on `n` isolated vertices named `x1..xn`.
    pub fn with_vertices(n: usize) -> Result<Self> {
        let mut g = Graph::new();
        for i in 1..=n {
            g.add_vertex(&format!("x{i}"))?;
        }
        Ok(g)
    }

    /// Builds a graph from names and index pairs; `(i, i)` denotes a loop.
    pub fn from_index_pairs(names: &[&str], pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new();
        for name in names {
            g.add_vertex(name)?;
        }
        for &(a, b) in pairs {
            if a >= g.order() || b >= g.order() {
                return Err(Error::domain(format!("vertex index out of range in ({a}, {b})")));
            }
            if a == b {
                g.add_loop(VertexId(a))?;
            } else {
                g.add_edge(VertexId(a), VertexId(b))?;
            }
        }
        Ok(g)
    }

    /// Returns the existing id when the name is already declared.
    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if let Some(&v) = self.index.get(name) {
            return Ok(v);
        }
        if !valid_name(name) {
            return Err(Error::domain(format!("invalid vertex name {name:?}")));
        }
        if self.names.len() == MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                actual: MAX_VERTICES + 1,
                limit: MAX_VERTICES,
            });
        }
        let v = VertexId(self.names.len());
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), v);
        self.adj.push(0);
        Ok(v)
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::domain("an edge needs two distinct vertices; use add_loop"));
        }
        self.adj[a.0] |= b.bit();
        self.adj[b.0] |= a.bit();
        Ok(())
    }

    pub fn add_loop(&mut self, v: VertexId) -> Result<()> {
        self.check_vertex(v)?;
        self.loops |= v.bit();
        Ok(())
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.names.len() {
            Ok(())
        } else {
            Err(Error::domain(format!("unknown vertex index {}", v.0)))
        }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::domain(format!("unknown vertex {name:?}")))
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.names.len()).map(VertexId)
    }

    pub fn all_vertices(&self) -> VertexSet {
        if self.names.len() == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << self.names.len()) - 1)
        }
    }

    pub fn loops(&self) -> VertexSet {
        VertexSet(self.loops)
    }

    pub fn has_loop(&self, v: VertexId) -> bool {
        self.loops & v.bit() != 0
    }

    pub fn is_simple(&self) -> bool {
        self.loops == 0
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a != b && a.0 < self.adj.len() && self.adj[a.0] & b.bit() != 0
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    pub(crate) fn require_edge(&self, e: Edge) -> Result<()> {
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{} is not an edge of the graph",
                self.edge_label(e)
            )))
        }
    }

    /// Open neighbourhood without the loop check; panics on a foreign id.
    pub fn adjacent(&self, v: VertexId) -> VertexSet {
        VertexSet(self.adj[v.0])
    }

    /// `N(v)` or `N[v]`. A loop at `v` does not put `v` in its open
    /// neighbourhood.
    pub fn neighbors(&self, v: VertexId, closed: bool) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let open = self.adjacent(v);
        Ok(if closed { open.with(v) } else { open })
    }

    /// Union of the open neighbourhoods of the vertices in `s`.
    pub fn neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adjacent(v)))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacent(v).len()
    }

    /// A vertex lying on exactly one edge and carrying no loop.
    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.degree(v) == 1 && !self.has_loop(v)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertex_ids()
            .filter(|&v| self.adj[v.0] == 0 && !self.has_loop(v))
            .collect()
    }

    /// Non-loop edges, lower index first, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (i, &row) in self.adj.iter().enumerate() {
            let higher = row & !((2u64 << i).wrapping_sub(1));
            out.extend(VertexSet(higher).iter().map(|j| Edge(VertexId(i), j)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn loop_count(&self) -> usize {
        self.loops.count_ones() as usize
    }

    pub fn edge_label(&self, e: Edge) -> String {
        format!("{}{}", self.name(e.0), self.name(e.1))
    }

    pub fn set_label(&self, s: VertexSet) -> String {
        let parts: Vec<&str> = s.iter().map(|v| self.name(v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v.0] & s.0 == 0)
    }

    /// Every independent set (loops do not restrict membership), in
    /// canonical order, optionally capped at `max_size` elements.
    pub fn independent_sets(&self, max_size: Option<usize>) -> Vec<VertexSet> {
        let cap = max_size.unwrap_or(usize::MAX);
        let mut out = vec![VertexSet::EMPTY];
        self.extend_independent(VertexSet::EMPTY, self.all_vertices().0, cap, &mut out);
        out.sort();
        out
    }

    fn extend_independent(&self, current: VertexSet, candidates: u64, cap: usize, out: &mut Vec<VertexSet>) {
        if current.len() >= cap {
            return;
        }
        let mut rest = candidates;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = current.with(VertexId(i));
            out.push(next);
            self.extend_independent(next, rest & !self.adj[i], cap, out);
        }
    }

    /// Maximal independent sets of the graph restricted to `within`.
    pub(crate) fn maximal_independent_sets(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, within.0, 0, within.0, &mut out);
        out
    }

    // Bron–Kerbosch with pivoting on the complement graph: cliques of the
    // complement are independent sets here.
    fn bron_kerbosch(&self, r: u64, p: u64, x: u64, within: u64, out: &mut Vec<VertexSet>) {
        if p == 0 && x == 0 {
            out.push(VertexSet(r));
            return;
        }
        let non_adj = |v: usize| within & !self.adj[v] & !(1u64 << v);
        let pivot = {
            let px = p | x;
            VertexSet(px)
                .iter()
                .max_by_key(|u| (p & non_adj(u.0)).count_ones())
                .map(|u| u.0)
                .unwrap()
        };
        let mut candidates = p & !non_adj(pivot);
        let mut p = p;
        let mut x = x;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let nv = non_adj(v);
            self.bron_kerbosch(r | (1u64 << v), p & nv, x & nv, within, out);
            p &= !(1u64 << v);
            x |= 1u64 << v;
        }
    }

    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if !s.is_subset(self.all_vertices()) {
            return Err(Error::domain("induced_subgraph: set contains unknown vertices"));
        }
        let keep: Vec<VertexId> = s.iter().collect();
        let mut g = Graph::new();
        for &v in &keep {
            g.add_vertex(self.name(v))?;
        }
        for (new_a, &a) in keep.iter().enumerate() {
            if self.has_loop(a) {
                g.add_loop(VertexId(new_a))?;
            }
            for (new_b, &b) in keep.iter().enumerate().skip(new_a + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(VertexId(new_a), VertexId(new_b))?;
                }
            }
        }
        Ok(g)
    }

    /// Largest size of a set of pairwise disjoint (non-loop) edges.
    pub fn matching_number(&self) -> usize {
        let mut memo = HashMap::new();
        self.max_matching(self.all_vertices().0, &mut memo)
    }

    fn max_matching(&self, avail: u64, memo: &mut HashMap<u64, usize>) -> usize {
        let Some(v) = self.first_with_neighbor(avail) else {
            return 0;
        };
        if let Some(&m) = memo.get(&avail) {
            return m;
        }
        let without_v = avail & !(1u64 << v);
        let mut best = self.max_matching(without_v, memo);
        for u in VertexSet(self.adj[v] & avail).iter() {
            best = best.max(1 + self.max_matching(without_v & !u.bit(), memo));
        }
        memo.insert(avail, best);
        best
    }

    /// Largest matching no two of whose edges are joined by an edge.
    pub fn induced_matching_number(&self) -> usize {
        let mut memo = HashMap::new();
        self.max_induced_matching(self.all_vertices().0, &mut memo)
    }

    fn max_induced_matching(&self, avail: u64, memo: &mut HashMap<u64, usize>) -> usize {
        let Some(v) = self.first_with_neighbor(avail) else {
            return 0;
        };
        if let Some(&m) = memo.get(&avail) {
            return m;
        }
        let mut best = self.max_induced_matching(avail & !(1u64 << v), memo);
        let closed_v = self.adj[v] | (1u64 << v);
        for u in VertexSet(self.adj[v] & avail).iter() {
            let blocked = closed_v | self.adj[u.0] | u.bit();
            best = best.max(1 + self.max_induced_matching(avail & !blocked, memo));
        }
        memo.insert(avail, best);
        best
    }

    fn first_with_neighbor(&self, avail: u64) -> Option<usize> {
        VertexSet(avail)
            .iter()
            .map(|v| v.0)
            .find(|&v| self.adj[v] & avail != 0)
    }

    /// `(matching number, induced matching number)`.
    pub fn matching_stats(&self) -> (usize, usize) {
        (self.matching_number(), self.induced_matching_number())
    }

    pub fn is_perfect_matching(&self, m: &Matching) -> bool {
        m.vertices() == self.all_vertices()
    }

    /// Pairwise disjoint edges of the graph with no graph edge joining
    /// endpoints of two different listed edges.
    pub fn is_induced_matching(&self, edges: &[Edge]) -> bool {
        let mut used = VertexSet::EMPTY;
        for &e in edges {
            if !self.contains_edge(e) || !used.is_disjoint(e.vertices()) {
                return false;
            }
            used = used.union(e.vertices());
        }
        edges.iter().all(|&e| {
            let others = used.difference(e.vertices());
            self.neighborhood_of(e.vertices()).is_disjoint(others)
        })
    }

    /// Canonical edge-list document; parsing it reproduces `self`,
    /// including vertex order.
    pub fn to_edge_list(&self) -> String {
        let mut lines: Vec<String> = Vec::new();
        // invariant: exactly the vertices with index < declared have appeared
        let mut declared = 0usize;
        let declare_to = |lines: &mut Vec<String>, declared: &mut usize, upto: usize| {
            while *declared < upto {
                lines.push(self.names[*declared].clone());
                *declared += 1;
            }
        };
        for v in self.vertex_ids() {
            let mut row: Vec<VertexId> = Vec::new();
            if self.has_loop(v) {
                row.push(v);
            }
            row.extend(self.adjacent(v).iter().filter(|&u| u > v));
            if row.is_empty() {
                declare_to(&mut lines, &mut declared, v.0 + 1);
                continue;
            }
            for u in row {
                declare_to(&mut lines, &mut declared, v.0);
                if declared < u.0 && !(declared == v.0 && u.0 == v.0 + 1) {
                    declare_to(&mut lines, &mut declared, u.0);
                }
                declared = declared.max(u.0 + 1);
                lines.push(format!("{} {}", self.name(v), self.name(u)));
            }
        }
        let mut doc = lines.join("\n");
        if !doc.is_empty() {
            doc.push('\n');
        }
        doc
    }
}

/// Parses the edge-list format: `# comment`, blank, `u v` (edge), `u u`
/// (loop) or `u` (vertex declaration).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        for t in &tokens {
            if !valid_name(t) {
                return Err(Error::parse(line_no, format!("malformed vertex name {t:?}")));
            }
        }
        let intern = |g: &mut Graph, t: &str| {
            g.add_vertex(t).map_err(|e| match e {
                Error::Capacity { .. } => e,
                other => Error::parse(line_no, other.to_string()),
            })
        };
        match tokens.as_slice() {
            [u] => {
                intern(&mut g, u)?;
            }
            [u, v] if u == v => {
                let u = intern(&mut g, u)?;
                g.add_loop(u)?;
            }
            [u, v] => {
                let u = intern(&mut g, u)?;
                let v = intern(&mut g, v)?;
                g.add_edge(u, v)?;
            }
            _ => {
                return Err(Error::parse(
                    line_no,
                    format!("expected one or two vertex names, found {}", tokens.len()),
                ))
            }
        }
    }
    Ok(g)
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_edge_list(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// An ordered list of pairwise disjoint edges of a host graph. The first
/// vertex of each edge is its designated (`x_i`) vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(g: &Graph, edges: Vec<Edge>) -> Result<Self> {
        let mut used = VertexSet::EMPTY;
        for &e in &edges {
            g.require_edge(e)?;
            if !used.is_disjoint(e.vertices()) {
                return Err(Error::domain(format!(
                    "matching edges are not pairwise disjoint at {}",
                    g.edge_label(e)
                )));
            }
            used = used.union(e.vertices());
        }
        Ok(Matching { edges })
    }

    /// Builds a matching from `(first, second)` vertex names.
    pub fn from_names(g: &Graph, pairs: &[(&str, &str)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|(a, b)| Ok(Edge(g.vertex(a)?, g.vertex(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Matching::new(g, edges)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.edges
            .iter()
            .fold(VertexSet::EMPTY, |acc, e| acc.union(e.vertices()))
    }

    pub fn designated(&self) -> VertexSet {
        self.edges.iter().map(|e| e.0).collect()
    }
}

/// Canonical sorted, deduplicated list of vertex sets.
pub(crate) fn canonical_sets(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect()
}
