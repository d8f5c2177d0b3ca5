//! Graph and labeling data model plus the odd-prime-labeling verifier.
//!
//! Vertices are 1-indexed everywhere, matching the usual v_1..v_n
//! conventions. Edges are stored as sorted unordered pairs.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Greatest common divisor of two positive integers.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// The label set {1, 3, ..., 2n-1} for a graph of order n.
pub fn expected_label_set(n: usize) -> BTreeSet<u64> {
    (0..n).map(|i| 2 * i as u64 + 1).collect()
}

/// A simple undirected graph with 1-indexed vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    names: Option<BTreeMap<usize, String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    names: Option<BTreeMap<usize, String>>,
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.into_iter().collect(),
            names: g.names,
        }
    }
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Graph> {
        let mut g = Graph::new(raw.n, raw.edges)?;
        if let Some(names) = raw.names {
            for (&v, name) in &names {
                if v < 1 || v > g.n {
                    return Err(Error::InvalidGraph(format!(
                        "name for vertex {v} outside [1, {}]",
                        g.n
                    )));
                }
                g.set_name(v, name.clone());
            }
        }
        Ok(g)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw = RawGraph::deserialize(deserializer)?;
        Graph::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    /// Builds a graph of order `n` from an edge list, normalizing each pair
    /// to (min, max) and rejecting self-loops and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("order must be positive".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u < 1 || v < 1 || u > n || v > n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) has an endpoint outside [1, {n}]"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph {
            n,
            edges: set,
            names: None,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted pairs, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Adjacency lists indexed 1..=n (index 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn set_name(&mut self, v: usize, name: String) {
        debug_assert!(v >= 1 && v <= self.n);
        self.names.get_or_insert_with(BTreeMap::new).insert(v, name);
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names.as_ref()?.get(&v).map(String::as_str)
    }

    /// The spanning subgraph keeping only edges accepted by `keep`.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        Graph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(u, v)| keep(u, v))
                .collect(),
            names: self.names.clone(),
        }
    }
}

/// An assignment of odd labels to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    pub labels: BTreeMap<usize, u64>,
}

impl Labeling {
    pub fn new(labels: impl IntoIterator<Item = (usize, u64)>) -> Labeling {
        Labeling {
            labels: labels.into_iter().collect(),
        }
    }

    pub fn get(&self, v: usize) -> Option<u64> {
        self.labels.get(&v).copied()
    }
}

impl FromIterator<(usize, u64)> for Labeling {
    fn from_iter<I: IntoIterator<Item = (usize, u64)>>(iter: I) -> Self {
        Labeling::new(iter)
    }
}

/// Outcome of checking a labeling against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub is_valid: bool,
    pub missing_labels: Vec<u64>,
    pub extra_labels: Vec<u64>,
    pub duplicated_labels: Vec<u64>,
    /// Edges (u, v) whose endpoint labels share the recorded gcd > 1,
    /// sorted lexicographically by (u, v).
    pub violating_edges: Vec<(usize, usize, u64)>,
}

/// Checks that `ell` is an odd prime labeling of `g`: the labels must be
/// exactly {1, 3, ..., 2n-1} and every edge must join coprime labels.
pub fn verify_labeling(g: &Graph, ell: &Labeling) -> Result<VerificationReport> {
    for v in 1..=g.order() {
        if !ell.labels.contains_key(&v) {
            return Err(Error::PartialLabeling(v));
        }
    }

    let expected = expected_label_set(g.order());
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for v in 1..=g.order() {
        *counts.entry(ell.labels[&v]).or_insert(0) += 1;
    }

    let missing_labels: Vec<u64> = expected
        .iter()
        .copied()
        .filter(|l| !counts.contains_key(l))
        .collect();
    let extra_labels: Vec<u64> = counts
        .keys()
        .copied()
        .filter(|l| !expected.contains(l))
        .collect();
    let duplicated_labels: Vec<u64> = counts
        .iter()
        .filter(|&(_, &c)| c > 1)
        .map(|(&l, _)| l)
        .collect();

    let mut violating_edges = Vec::new();
    for (u, v) in g.edges() {
        let d = gcd(ell.labels[&u], ell.labels[&v]);
        if d > 1 {
            violating_edges.push((u, v, d));
        }
    }

    let is_valid = missing_labels.is_empty()
        && extra_labels.is_empty()
        && duplicated_labels.is_empty()
        && violating_edges.is_empty();

    Ok(VerificationReport {
        is_valid,
        missing_labels,
        extra_labels,
        duplicated_labels,
        violating_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(9, 13), 1);
        assert_eq!(gcd(21, 35), 7);
        assert_eq!(gcd(1, 999), 1);
        assert_eq!(gcd(35, 21), 7);
    }

    #[test]
    fn gcd_subtraction_and_shift_identities() {
        for a in 1..60u64 {
            for b in 1..a {
                assert_eq!(gcd(a, b), gcd(b, a));
                assert_eq!(gcd(a, b), gcd(a, a - b));
                assert_eq!(gcd(a, b), gcd(a + 3 * b, b));
            }
        }
    }

    #[test]
    fn label_set() {
        assert_eq!(expected_label_set(1), BTreeSet::from([1]));
        assert_eq!(expected_label_set(4), BTreeSet::from([1, 3, 5, 7]));
        let s = expected_label_set(10);
        assert_eq!(s.len(), 10);
        assert_eq!(s.iter().max(), Some(&19));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 4)]).is_err());
        assert!(Graph::new(0, []).is_err());
        // duplicates collapse under set semantics
        let g = Graph::new(3, [(1, 2), (2, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn verify_valid_path() {
        let g = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        let l = Labeling::new([(1, 1), (2, 3), (3, 5)]);
        let r = verify_labeling(&g, &l).unwrap();
        assert!(r.is_valid);
    }

    #[test]
    fn verify_reports_defects() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        let l = Labeling::new([(1, 3), (2, 9)]);
        let r = verify_labeling(&g, &l).unwrap();
        assert!(!r.is_valid);
        assert_eq!(r.violating_edges, vec![(1, 2, 3)]);
        assert_eq!(r.missing_labels, vec![1]);
        assert_eq!(r.extra_labels, vec![9]);
    }

    #[test]
    fn verify_even_cycle_from_proof_ordering() {
        // C_4 labeled by alternating the clockwise and counter-clockwise
        // walks: v1=1, v4=3, v2=5, v3=7.
        let g = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let l = Labeling::new([(1, 1), (2, 5), (3, 7), (4, 3)]);
        assert!(verify_labeling(&g, &l).unwrap().is_valid);
    }

    #[test]
    fn partial_labeling_is_an_error() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        let l = Labeling::new([(1, 1)]);
        assert_eq!(verify_labeling(&g, &l), Err(Error::PartialLabeling(2)));
    }

    #[test]
    fn duplicated_labels_detected() {
        let g = Graph::new(2, []).unwrap();
        let l = Labeling::new([(1, 1), (2, 1)]);
        let r = verify_labeling(&g, &l).unwrap();
        assert!(!r.is_valid);
        assert_eq!(r.duplicated_labels, vec![1]);
        assert_eq!(r.missing_labels, vec![3]);
    }

    #[test]
    fn json_round_trip() {
        let mut g = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        g.set_name(1, "v_1".into());
        let s = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(g, back);

        let l = Labeling::new([(1, 1), (2, 3), (3, 5)]);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"labels":{"1":1,"2":3,"3":5}}"#);
        let back: Labeling = serde_json::from_str(&s).unwrap();
        assert_eq!(l, back);
    }
}
