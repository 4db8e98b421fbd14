//! Regular edges, regular sequences and Hilbert series for edge ideals of
//! graphs that may carry loops.
//!
//! Every decision procedure here has a brute-force counterpart in the crate
//! (colon-ideal associated primes, cover enumeration, exact Hilbert series),
//! and the test suites check them against each other.

pub mod covers;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hilbert;
pub mod poly;
pub mod reductions;
pub mod regularity;

pub use covers::{
    associated_primes, coveredness_class, enumerate_minimal_vertex_covers, height,
    levit_mandrescu_holds, loop_extended_primes, CoverednessClass, Monomial, MonomialPrime,
};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, Edge, Graph, Matching, VertexId, VertexSet};
pub use hilbert::{
    binomial_hs_test, f_vector, h_from_f, h_vector, h_vector_via_matching, k_polynomial, regularity_hs_test,
    series_report, FVector, HVector, KPolynomial, SeriesReport,
};
pub use poly::IntPoly;
pub use reductions::{apply_sequence, contract_edge, polarize_edge, ReductionKind, ReductionTrace};
pub use regularity::{
    check_regular_sequence, find_regular_matching, has_property_p, is_binomial_regular,
    is_regular_edge, is_regular_edge_oracle, loops_one_sided,
    has_property_p_one_sided, RegularSequenceCertificate, SequenceVerdict,
};
