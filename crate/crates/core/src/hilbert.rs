//! Hilbert series of `R/I(G)` for graphs with loops.
//!
//! A monomial survives in `R/I(G)` exactly when its support `S` is
//! independent and each loop vertex of `S` has exponent one. Summing over
//! supports gives the K-polynomial
//!
//! ```text
//! K(t) = Σ_S t^|S| (1-t)^(n - |S \ L|)
//! ```
//!
//! so that `HS(t) = K(t) / (1-t)^n`. The reduced numerator (the h-polynomial)
//! is `K(t) / (1-t)^(n-d)` with `d` the Krull dimension.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::covers;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Matching, VertexId};
use crate::poly::IntPoly;
use crate::reductions::{contract_edge, identify_vertices};

/// `K(t)` with `HS_{R/I}(t) = K(t) / (1-t)^nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPolynomial {
    pub poly: IntPoly,
    pub nvars: usize,
}

impl fmt::Display for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/(1-t)^{}", self.poly, self.nvars)
    }
}

fn fmt_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// Face counts `(f_{-1}, f_0, ..., f_{d-1})` of the independence complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    pub entries: Vec<u64>,
}

impl FVector {
    pub fn new(entries: Vec<u64>) -> Self {
        FVector { entries }
    }

    /// Dimension of the complex plus one.
    pub fn facet_bound(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.entries)
    }
}

/// `(h_0, ..., h_d)`; entries past the numerator's degree are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    pub entries: Vec<BigInt>,
}

impl HVector {
    pub fn from_i64s(entries: &[i64]) -> Self {
        HVector {
            entries: entries.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Entries with trailing zeros removed.
    pub fn trimmed(&self) -> &[BigInt] {
        let len = self
            .entries
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |i| i + 1);
        &self.entries[..len]
    }

    /// Largest index with a nonzero entry.
    pub fn degree(&self) -> Option<usize> {
        self.trimmed().len().checked_sub(1)
    }

    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.entries.clone())
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(|c| i64::try_from(c).ok()).collect()
    }

    /// Equality up to trailing zeros.
    pub fn same_values(&self, other: &HVector) -> bool {
        self.trimmed() == other.trimmed()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|c| !c.is_negative())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Parenthesized with trailing zeros trimmed, e.g. `(1,3,-2,-1)`.
impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, self.trimmed())
    }
}

/// `counts[s][j]` = number of independent sets `S` with `|S| = s` and
/// `|S \ L| = j`.
fn independence_profile(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let mut counts = vec![vec![0u64; n + 1]; n + 1];
    counts[0][0] = 1;
    let loops = g.loops().bits();
    let adj: Vec<u64> = g.vertex_ids().map(|v| g.adjacent(v).bits()).collect();
    fn walk(adj: &[u64], loops: u64, size: usize, free: usize, candidates: u64, counts: &mut [Vec<u64>]) {
        let mut rest = candidates;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let free = free + usize::from(loops & (1u64 << i) == 0);
            counts[size + 1][free] += 1;
            walk(adj, loops, size + 1, free, rest & !adj[i], counts);
        }
    }
    walk(&adj, loops, 0, 0, g.all_vertices().bits(), &mut counts);
    counts
}

pub fn k_polynomial(g: &Graph) -> KPolynomial {
    let n = g.order();
    let profile = independence_profile(g);
    let mut poly = IntPoly::zero();
    for (s, row) in profile.iter().enumerate() {
        for (j, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = &IntPoly::monomial(BigInt::from(count), s) * &IntPoly::one_minus_t_pow(n - j);
            poly = &poly + &term;
        }
    }
    KPolynomial { poly, nvars: n }
}

/// Krull dimension `n - ht(G)` from the loop-aware cover enumeration.
pub fn krull_dimension(g: &Graph) -> usize {
    g.order() - covers::height(g)
}

/// Krull dimension read off independent sets: the largest `|S \ L|`.
pub fn krull_dimension_from_independent_sets(g: &Graph) -> usize {
    let profile = independence_profile(g);
    profile
        .iter()
        .flat_map(|row| row.iter().enumerate().filter(|(_, &c)| c > 0).map(|(j, _)| j))
        .max()
        .unwrap_or(0)
}

pub fn f_vector(g: &Graph) -> Result<FVector> {
    if !g.is_simple() {
        return Err(Error::domain(
            "the f-vector is defined for the independence complex of a graph without loops",
        ));
    }
    let profile = independence_profile(g);
    let mut entries: Vec<u64> = profile.iter().map(|row| row.iter().sum()).collect();
    while entries.len() > 1 && entries.last() == Some(&0) {
        entries.pop();
    }
    Ok(FVector::new(entries))
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `h_k = Σ_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_{i-1}` for `k = 0..d`.
pub fn h_from_f(f: &FVector, d: usize) -> Result<HVector> {
    if f.entries.is_empty() {
        return Err(Error::domain("empty f-vector"));
    }
    if d < f.entries.len() - 1 {
        return Err(Error::domain(format!(
            "dimension {d} is smaller than the complex's facet size {}",
            f.entries.len() - 1
        )));
    }
    let entries = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let fi = f.entries.get(i).copied().unwrap_or(0);
                    let term = binomial(d - i, k - i) * BigInt::from(fi);
                    if (k - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    Ok(HVector { entries })
}

/// The numerator of the reduced Hilbert series, by exact division of the
/// K-polynomial.
pub fn h_vector(g: &Graph) -> Result<HVector> {
    let d = krull_dimension(g);
    h_vector_from_k(&k_polynomial(g), d)
}

pub(crate) fn h_vector_from_k(k: &KPolynomial, d: usize) -> Result<HVector> {
    let numerator = k.poly.div_one_minus_t_pow(k.nvars - d)?;
    let mut entries = numerator.coeffs().to_vec();
    if entries.len() < d + 1 {
        entries.resize(d + 1, BigInt::zero());
    }
    Ok(HVector { entries })
}

/// `h_i` = number of `i`-subsets of the matching that are induced matchings.
pub fn h_vector_via_matching(g: &Graph, m: &Matching) -> Result<HVector> {
    if !g.is_simple() {
        return Err(Error::domain("matching h-vectors are defined for graphs without loops"));
    }
    if !g.is_perfect_matching(m) {
        return Err(Error::domain("the matching is not perfect"));
    }
    let edges = m.edges();
    // conflict[i]: matching edges joined to edge i by some graph edge
    let conflict: Vec<u64> = edges
        .iter()
        .map(|e| {
            let reach = g.neighborhood_of(e.vertices());
            edges
                .iter()
                .enumerate()
                .filter(|(_, f)| !f.same_pair(*e) && !reach.is_disjoint(f.vertices()))
                .fold(0u64, |acc, (j, _)| acc | (1 << j))
        })
        .collect();
    let mut counts = vec![0u64; edges.len() + 1];
    counts[0] = 1;
    fn walk(conflict: &[u64], size: usize, candidates: u64, counts: &mut [u64]) {
        let mut rest = candidates;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            counts[size + 1] += 1;
            walk(conflict, size + 1, rest & !conflict[i], counts);
        }
    }
    let all = if edges.len() == 64 { u64::MAX } else { (1u64 << edges.len()) - 1 };
    walk(&conflict, 0, all, &mut counts);
    Ok(HVector {
        entries: counts.into_iter().map(BigInt::from).collect(),
    })
}

/// Regularity of `x + y` for an edge `{x, y}`: the K-polynomial is unchanged
/// by contracting the edge.
pub fn regularity_hs_test(g: &Graph, e: Edge, survivor: VertexId) -> Result<bool> {
    g.require_edge(e)?;
    let oriented = if survivor == e.0 {
        e
    } else if survivor == e.1 {
        e.reversed()
    } else {
        return Err(Error::domain("the survivor must be an endpoint of the edge"));
    };
    Ok(k_polynomial(&contract_edge(g, oriented)?).poly == k_polynomial(g).poly)
}

/// Regularity of `u ± v` for any two distinct vertices, by the same
/// K-polynomial comparison after identifying `v` with `u`.
pub fn binomial_hs_test(g: &Graph, u: VertexId, v: VertexId) -> Result<bool> {
    Ok(k_polynomial(&identify_vertices(g, u, v)?).poly == k_polynomial(g).poly)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kpoly: KPolynomial,
    pub numerator: IntPoly,
    pub dim: usize,
    pub height: usize,
    /// `None` for graphs with loops.
    pub fvector: Option<FVector>,
    pub hvector: HVector,
    pub matching_number: usize,
    pub induced_matching_number: usize,
}

pub fn series_report(g: &Graph) -> Result<SeriesReport> {
    let kpoly = k_polynomial(g);
    let height = covers::height(g);
    let dim = g.order() - height;
    let hvector = h_vector_from_k(&kpoly, dim)?;
    let fvector = if g.is_simple() { Some(f_vector(g)?) } else { None };
    let (matching_number, induced_matching_number) = g.matching_stats();
    Ok(SeriesReport {
        numerator: hvector.to_poly(),
        kpoly,
        dim,
        height,
        fvector,
        hvector,
        matching_number,
        induced_matching_number,
    })
}

impl fmt::Display for SeriesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kpoly: {}", self.kpoly)?;
        writeln!(f, "numerator: {}", self.numerator)?;
        writeln!(f, "dim: {}", self.dim)?;
        writeln!(f, "height: {}", self.height)?;
        match &self.fvector {
            Some(fv) => writeln!(f, "fvector: {fv}")?,
            None => writeln!(f, "fvector: none")?,
        }
        writeln!(f, "hvector: {}", self.hvector)?;
        writeln!(f, "matching_number: {}", self.matching_number)?;
        writeln!(f, "induced_matching_number: {}", self.induced_matching_number)
    }
}
