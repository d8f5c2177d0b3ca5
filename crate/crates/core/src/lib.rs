//! Odd prime labelings of graphs: family generators, constructive
//! labelers, a verifier, exhaustive search oracles, and the table-driven
//! labelings of the maximal coprime graphs R_n (n ≤ 50).
//!
//! An odd prime labeling of a graph on n vertices is a bijection from the
//! vertex set onto {1, 3, ..., 2n-1} such that every edge joins coprime
//! labels.

pub mod coprime;
pub mod dot;
pub mod error;
pub mod families;
pub mod graph;
pub mod labelers;
pub mod rn;
pub mod search;

pub use error::{Error, Result};
pub use families::{build_family, family_order, FamilySpec};
pub use graph::{expected_label_set, gcd, verify_labeling, Graph, Labeling, VerificationReport};
pub use labelers::{classify, label_family, LabelerId, Verdict};
pub use rn::{convert_prime_to_odd, rn_sequence, verify_rn};
pub use search::{
    exhaustive_search, independence_number, lemma2_check, BoundCheck, SearchOutcome, SearchVerdict,
};
