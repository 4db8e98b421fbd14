//! Minimal vertex covers and associated primes of edge ideals.
//!
//! [`associated_primes`] is a brute-force oracle computed from monomial colon
//! ideals alone; it shares no code with the cover enumeration so that the two
//! can be checked against each other.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{canonical_sets, Graph, VertexId, VertexSet};

/// Vertex limit for the colon-ideal oracle.
pub const MAX_ORACLE_VERTICES: usize = 20;

/// A prime ideal generated by the variables of a vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialPrime {
    pub generators: VertexSet,
}

impl MonomialPrime {
    pub fn new(generators: VertexSet) -> Self {
        MonomialPrime { generators }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.generators.contains(v)
    }

    pub fn height(&self) -> usize {
        self.generators.len()
    }

    pub fn label(&self, g: &Graph) -> String {
        let parts: Vec<&str> = self.generators.iter().map(|v| g.name(v)).collect();
        format!("({})", parts.join(","))
    }
}

/// A monomial of `k[V]`, one exponent per vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exponents: vec![0; nvars],
        }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// `self / gcd(self, m)`, the generator of `(self) : m`.
    pub fn colon(&self, m: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&m.exponents)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// The variable this monomial equals, if it is a single variable.
    pub fn as_variable(&self) -> Option<VertexId> {
        if self.degree() != 1 {
            return None;
        }
        self.exponents.iter().position(|&e| e == 1).map(VertexId)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Minimal generators of `I(G)`: `xy` per edge and `v^2` per loop.
pub fn edge_ideal_generators(g: &Graph) -> Vec<Monomial> {
    let n = g.order();
    let mut gens = Vec::with_capacity(g.edge_count() + g.loop_count());
    for e in g.edges() {
        let mut m = Monomial::one(n);
        m.exponents[e.0.index()] = 1;
        m.exponents[e.1.index()] = 1;
        gens.push(m);
    }
    for v in g.loops().iter() {
        let mut m = Monomial::one(n);
        m.exponents[v.index()] = 2;
        gens.push(m);
    }
    gens
}

/// Minimal covers of the subgraph induced on `within`: every edge inside
/// `within` is met and every loop vertex in `within` is included.
pub(crate) fn minimal_covers_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let looped = g.loops().intersection(within);
    let free = within.difference(looped);
    canonical_sets(
        g.maximal_independent_sets(free)
            .into_iter()
            .map(|s| within.difference(s)),
    )
}

/// All inclusion-minimal vertex covers, loop vertices included, in canonical
/// order.
pub fn enumerate_minimal_vertex_covers(g: &Graph) -> Vec<MonomialPrime> {
    minimal_covers_within(g, g.all_vertices())
        .into_iter()
        .map(MonomialPrime::new)
        .collect()
}

/// Height of `I(G)`: the size of a smallest vertex cover.
pub fn height(g: &Graph) -> usize {
    enumerate_minimal_vertex_covers(g)
        .iter()
        .map(MonomialPrime::height)
        .min()
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverednessClass {
    NotWellCovered,
    WellCovered,
    VeryWellCovered,
}

impl fmt::Display for CoverednessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverednessClass::NotWellCovered => "not_well_covered",
            CoverednessClass::WellCovered => "well_covered",
            CoverednessClass::VeryWellCovered => "very_well_covered",
        })
    }
}

fn require_simple(g: &Graph, what: &str) -> Result<()> {
    if g.is_simple() {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} is defined for graphs without loops")))
    }
}

pub fn coveredness_class(g: &Graph) -> Result<CoverednessClass> {
    require_simple(g, "coveredness")?;
    let covers = enumerate_minimal_vertex_covers(g);
    let size = covers[0].height();
    if covers.iter().any(|c| c.height() != size) {
        return Ok(CoverednessClass::NotWellCovered);
    }
    if g.isolated_vertices().is_empty() && 2 * size == g.order() {
        Ok(CoverednessClass::VeryWellCovered)
    } else {
        Ok(CoverednessClass::WellCovered)
    }
}

/// Whether `|V| - ht(G) = |E| - mat(G)`.
pub fn levit_mandrescu_holds(g: &Graph) -> Result<bool> {
    require_simple(g, "the Levit-Mandrescu identity")?;
    if !g.isolated_vertices().is_empty() {
        return Err(Error::domain(
            "the Levit-Mandrescu identity is stated for graphs without isolated vertices",
        ));
    }
    let lhs = g.order() as i64 - height(g) as i64;
    let rhs = g.edge_count() as i64 - g.matching_number() as i64;
    Ok(lhs == rhs)
}

pub(crate) fn check_oracle_capacity(g: &Graph) -> Result<()> {
    if g.order() > MAX_ORACLE_VERTICES {
        Err(Error::Capacity {
            what: "vertex count for the colon-ideal oracle",
            actual: g.order(),
            limit: MAX_ORACLE_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Associated primes of `R/I(G)` by exhausting the colon ideals `(I : m)`
/// over the divisors `m` of the lcm of the generators.
pub fn associated_primes(g: &Graph) -> Result<Vec<MonomialPrime>> {
    check_oracle_capacity(g)?;
    let gens = edge_ideal_generators(g);
    let n = g.order();
    let lcm = gens.iter().fold(Monomial::one(n), |acc, m| acc.lcm(m));

    let mut found = Vec::new();
    let mut witness = Monomial::one(n);
    loop {
        if let Some(p) = prime_colon(&gens, &witness) {
            found.push(p);
        }
        // advance the mixed-radix counter bounded by lcm
        let mut i = 0;
        while i < n && witness.exponents[i] == lcm.exponents[i] {
            witness.exponents[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        witness.exponents[i] += 1;
    }
    Ok(canonical_sets(found).into_iter().map(MonomialPrime::new).collect())
}

/// The variable set generating `(I : m)` when that colon is a monomial prime.
fn prime_colon(gens: &[Monomial], m: &Monomial) -> Option<VertexSet> {
    let quotients: Vec<Monomial> = gens.iter().map(|gen| gen.colon(m)).collect();
    if quotients.iter().any(Monomial::is_one) {
        // m lies in I, so the colon is the unit ideal
        return None;
    }
    let linear: VertexSet = quotients.iter().filter_map(Monomial::as_variable).collect();
    let absorbed = quotients.iter().all(|q| {
        linear
            .iter()
            .any(|v| q.exponents[v.index()] > 0)
    });
    absorbed.then_some(linear)
}

/// Candidate primes `N[A] ∪ K` for loop subsets `A` and minimal covers `K` of
/// the graph induced on `V \ N[A]`.
pub fn loop_extended_primes(g: &Graph) -> Result<Vec<MonomialPrime>> {
    check_oracle_capacity(g)?;
    let loops: Vec<VertexId> = g.loops().iter().collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << loops.len()) {
        let a: VertexSet = loops
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        let closed = a.union(g.neighborhood_of(a));
        let rest = g.all_vertices().difference(closed);
        out.extend(
            minimal_covers_within(g, rest)
                .into_iter()
                .map(|k| closed.union(k)),
        );
    }
    Ok(canonical_sets(out).into_iter().map(MonomialPrime::new).collect())
}
