//! Exhaustive oracle and infeasibility certification: exact independence
//! number, the independence-bound check, and complete backtracking search
//! for odd prime labelings.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{gcd, verify_labeling, Graph, Labeling};

/// Hard cap on the order handled by the bitset independence solver.
pub const INDEPENDENCE_ORDER_LIMIT: usize = 64;

/// Default node budget for the exhaustive labeling search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

/// Exact independence number β(G), by branch and bound over 64-bit
/// vertex sets. A greedy independent set seeds the lower bound; a greedy
/// clique cover of the remaining candidates gives the upper bound.
pub fn independence_number(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > INDEPENDENCE_ORDER_LIMIT {
        return Err(Error::OrderLimitExceeded {
            order: n,
            limit: INDEPENDENCE_ORDER_LIMIT,
        });
    }

    // adjacency masks, 0-indexed
    let mut adj = vec![0u64; n];
    for (u, v) in g.edges() {
        adj[u - 1] |= 1 << (v - 1);
        adj[v - 1] |= 1 << (u - 1);
    }

    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };

    // greedy lower bound: repeatedly take a minimum-degree candidate
    let mut best = {
        let mut cand = full;
        let mut count = 0usize;
        while cand != 0 {
            let mut pick = 0usize;
            let mut pick_deg = usize::MAX;
            let mut c = cand;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                let d = (adj[v] & cand).count_ones() as usize;
                if d < pick_deg {
                    pick_deg = d;
                    pick = v;
                }
            }
            cand &= !(adj[pick] | (1 << pick));
            count += 1;
        }
        count
    };

    fn clique_cover_bound(cand: u64, adj: &[u64]) -> usize {
        // greedily partition candidates into cliques; the number of
        // cliques bounds the independent set size from above
        let mut remaining = cand;
        let mut cliques = 0usize;
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            remaining &= remaining - 1;
            let mut clique_adj = adj[v];
            let mut c = remaining;
            while c != 0 {
                let u = c.trailing_zeros() as usize;
                c &= c - 1;
                if clique_adj & (1 << u) != 0 {
                    remaining &= !(1u64 << u);
                    clique_adj &= adj[u];
                    c &= remaining;
                }
            }
            cliques += 1;
        }
        cliques
    }

    fn branch(cand: u64, size: usize, best: &mut usize, adj: &[u64]) {
        if size > *best {
            *best = size;
        }
        if cand == 0 || size + clique_cover_bound(cand, adj) <= *best {
            return;
        }
        // branch on the candidate of maximum degree within the candidate set
        let mut pick = 0usize;
        let mut pick_deg = 0usize;
        let mut c = cand;
        let mut first = true;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let d = (adj[v] & cand).count_ones() as usize;
            if first || d > pick_deg {
                first = false;
                pick_deg = d;
                pick = v;
            }
        }
        // include pick
        branch(cand & !(adj[pick] | (1 << pick)), size + 1, best, adj);
        // exclude pick
        branch(cand & !(1u64 << pick), size, best, adj);
    }

    branch(full, 0, &mut best, &adj);
    Ok(best)
}

/// Result of checking β(G) against the necessary bound ⌊(n+1)/3⌋.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum BoundCheck {
    Pass { beta: usize, bound: usize },
    Fail { beta: usize, bound: usize },
}

impl BoundCheck {
    pub fn passed(&self) -> bool {
        matches!(self, BoundCheck::Pass { .. })
    }
}

/// Any graph of order n with an odd prime labeling must satisfy
/// β(G) ≥ ⌊(n+1)/3⌋, since the ⌊(n+1)/3⌋ labels divisible by 3 must sit
/// on pairwise non-adjacent vertices. A Fail certifies non-existence.
pub fn lemma2_check(g: &Graph) -> Result<BoundCheck> {
    let beta = independence_number(g)?;
    let bound = (g.order() + 1) / 3;
    Ok(if beta >= bound {
        BoundCheck::Pass { beta, bound }
    } else {
        BoundCheck::Fail { beta, bound }
    })
}

/// Verdict of an exhaustive labeling search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SearchVerdict {
    Found { labeling: Labeling },
    ExhaustedNoSolution,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    #[serde(flatten)]
    pub verdict: SearchVerdict,
    pub nodes_explored: u64,
    #[serde(with = "duration_millis")]
    pub elapsed: Duration,
}

mod duration_millis {
    use super::Duration;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        d.as_millis().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_millis(u64::deserialize(d)?))
    }
}

/// Complete backtracking search for an odd prime labeling of `g`.
///
/// Vertices are assigned in order of decreasing degree; every unused odd
/// label coprime to all already-labeled neighbors is tried. ExhaustedNoSolution
/// is therefore a proof of non-existence. `budget` caps the number of
/// assignment nodes explored before giving up with BudgetExceeded.
pub fn exhaustive_search(g: &Graph, budget: u64) -> SearchOutcome {
    let start = Instant::now();
    let n = g.order();

    // vertex order: decreasing degree, ties by vertex id
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let adj = g.adjacency();
    let labels: Vec<u64> = (0..n).map(|i| 2 * i as u64 + 1).collect();

    let mut assigned: Vec<u64> = vec![0; n + 1]; // 0 = unlabeled
    let mut used = vec![false; n];
    let mut nodes: u64 = 0;
    let mut exceeded = false;

    #[allow(clippy::too_many_arguments)]
    fn backtrack(
        depth: usize,
        order: &[usize],
        adj: &[Vec<usize>],
        labels: &[u64],
        assigned: &mut [u64],
        used: &mut [bool],
        nodes: &mut u64,
        budget: u64,
        exceeded: &mut bool,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for (i, &l) in labels.iter().enumerate() {
            if used[i] {
                continue;
            }
            if adj[v]
                .iter()
                .any(|&u| assigned[u] != 0 && gcd(assigned[u], l) != 1)
            {
                continue;
            }
            *nodes += 1;
            if *nodes > budget {
                *exceeded = true;
                return false;
            }
            assigned[v] = l;
            used[i] = true;
            if backtrack(
                depth + 1,
                order,
                adj,
                labels,
                assigned,
                used,
                nodes,
                budget,
                exceeded,
            ) {
                return true;
            }
            assigned[v] = 0;
            used[i] = false;
            if *exceeded {
                return false;
            }
        }
        false
    }

    let found = backtrack(
        0,
        &order,
        &adj,
        &labels,
        &mut assigned,
        &mut used,
        &mut nodes,
        budget,
        &mut exceeded,
    );

    let verdict = if found {
        let ell = Labeling::new((1..=n).map(|v| (v, assigned[v])));
        debug_assert!(verify_labeling(g, &ell)
            .map(|r| r.is_valid)
            .unwrap_or(false));
        SearchVerdict::Found { labeling: ell }
    } else if exceeded {
        SearchVerdict::BudgetExceeded
    } else {
        SearchVerdict::ExhaustedNoSolution
    };

    SearchOutcome {
        verdict,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    }
}
