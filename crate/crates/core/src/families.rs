//! Constructors for the graph families under study, with role-annotated
//! vertex names and deterministic vertex numbering.
//!
//! Numbering conventions (part of the public contract):
//! - spine / outer-ring / path vertices come first, auxiliary vertices
//!   follow in (i, j) lexicographic order;
//! - stacked prisms and grids place v_{i,j} at id (i-1)*k + j, where i
//!   indexes polygons (resp. path layers) and j positions on the cycle;
//! - perfect binary trees use heap order: the children of id x are 2x
//!   and 2x+1;
//! - generalized Petersen graphs put outer vertices v_1..v_n at 1..n and
//!   inner vertices u_1..u_n at n+1..2n.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{gcd, Graph};

/// Parameter record selecting one graph family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    DisjointCycles { lengths: Vec<usize> },
    Snake { k: usize, n: usize },
    CycleChain { k: usize, n: usize },
    Book { n: usize, k: usize },
    GeneralizedPetersen { n: usize, k: usize },
    StackedPrism { k: usize, n: usize },
    Grid { m: usize, n: usize },
    PathPower { n: usize, k: usize },
    CyclePower { n: usize, k: usize },
    Spider { legs: Vec<usize> },
    PerfectBinaryTree { levels: usize },
    Caterpillar { spine: usize, leaves: Vec<usize> },
    TToedCaterpillar { n: usize, t: usize },
    Firecracker { n: usize, k: usize },
    MaximalPrimeGraph { n: usize },
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

impl FamilySpec {
    /// Parses a spec from a family tag and a JSON parameter object, the
    /// form the CLI uses.
    pub fn from_tag_params(tag: &str, params: &str) -> Result<FamilySpec> {
        let mut value: serde_json::Value = serde_json::from_str(params)
            .map_err(|e| bad(format!("params is not valid JSON: {e}")))?;
        let obj = value
            .as_object_mut()
            .ok_or_else(|| bad("params must be a JSON object"))?;
        obj.insert("family".into(), serde_json::Value::String(tag.into()));
        let spec: FamilySpec = serde_json::from_value(value)
            .map_err(|e| bad(format!("unknown family or bad params: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::DisjointCycles { .. } => "disjoint_cycles",
            FamilySpec::Snake { .. } => "snake",
            FamilySpec::CycleChain { .. } => "cycle_chain",
            FamilySpec::Book { .. } => "book",
            FamilySpec::GeneralizedPetersen { .. } => "generalized_petersen",
            FamilySpec::StackedPrism { .. } => "stacked_prism",
            FamilySpec::Grid { .. } => "grid",
            FamilySpec::PathPower { .. } => "path_power",
            FamilySpec::CyclePower { .. } => "cycle_power",
            FamilySpec::Spider { .. } => "spider",
            FamilySpec::PerfectBinaryTree { .. } => "perfect_binary_tree",
            FamilySpec::Caterpillar { .. } => "caterpillar",
            FamilySpec::TToedCaterpillar { .. } => "t_toed_caterpillar",
            FamilySpec::Firecracker { .. } => "firecracker",
            FamilySpec::MaximalPrimeGraph { .. } => "maximal_prime_graph",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::DisjointCycles { ref lengths } => {
                if lengths.is_empty() {
                    return Err(bad("disjoint_cycles needs at least one cycle"));
                }
                if let Some(&k) = lengths.iter().find(|&&k| k < 3) {
                    return Err(bad(format!("cycle length {k} < 3")));
                }
            }
            FamilySpec::Snake { k, n } => {
                if k < 3 || n < 2 {
                    return Err(bad("snake requires k >= 3 and n >= 2"));
                }
            }
            FamilySpec::CycleChain { k, n } => {
                if k < 3 || n < 1 {
                    return Err(bad("cycle_chain requires k >= 3 and n >= 1"));
                }
            }
            FamilySpec::Book { n, k } => {
                if n < 1 || k < 3 {
                    return Err(bad("book requires n >= 1 pages of size k >= 3"));
                }
            }
            FamilySpec::GeneralizedPetersen { n, k } => {
                if n < 3 || k < 1 || k > (n - 1) / 2 {
                    return Err(bad(
                        "generalized_petersen requires n >= 3 and 1 <= k <= (n-1)/2",
                    ));
                }
            }
            FamilySpec::StackedPrism { k, n } => {
                if k < 3 || n < 1 {
                    return Err(bad("stacked_prism requires k >= 3 and n >= 1"));
                }
            }
            FamilySpec::Grid { m, n } => {
                if m < 2 || n < 1 {
                    return Err(bad("grid requires m >= 2 and n >= 1"));
                }
            }
            FamilySpec::PathPower { n, k } => {
                if n < 2 || k < 1 {
                    return Err(bad("path_power requires n >= 2 and k >= 1"));
                }
                if n <= k + 1 {
                    return Err(bad(format!(
                        "path_power with n = {n} <= k+1 = {} is the complete graph",
                        k + 1
                    )));
                }
            }
            FamilySpec::CyclePower { n, k } => {
                if n < 3 || k < 1 {
                    return Err(bad("cycle_power requires n >= 3 and k >= 1"));
                }
                if n <= k + 1 {
                    return Err(bad(format!(
                        "cycle_power with n = {n} <= k+1 = {} is the complete graph",
                        k + 1
                    )));
                }
            }
            FamilySpec::Spider { ref legs } => {
                if legs.is_empty() {
                    return Err(bad("spider needs at least one leg"));
                }
                if legs.iter().any(|&l| l < 1) {
                    return Err(bad("spider legs must have length >= 1"));
                }
            }
            FamilySpec::PerfectBinaryTree { levels } => {
                if levels < 1 {
                    return Err(bad("perfect_binary_tree requires levels >= 1"));
                }
            }
            FamilySpec::Caterpillar { spine, ref leaves } => {
                if spine < 2 {
                    return Err(bad("caterpillar requires a spine of length >= 2"));
                }
                if leaves.len() != spine.saturating_sub(2) {
                    return Err(bad(format!(
                        "caterpillar with spine {spine} needs {} leaf counts (one per interior vertex), got {}",
                        spine - 2,
                        leaves.len()
                    )));
                }
            }
            FamilySpec::TToedCaterpillar { n, .. } => {
                if n < 1 {
                    return Err(bad("t_toed_caterpillar requires n >= 1"));
                }
            }
            FamilySpec::Firecracker { n, k } => {
                if n < 2 || k < 3 {
                    return Err(bad("firecracker requires n >= 2 and k >= 3"));
                }
            }
            FamilySpec::MaximalPrimeGraph { n } => {
                if n < 1 {
                    return Err(bad("maximal_prime_graph requires n >= 1"));
                }
            }
        }
        Ok(())
    }
}

/// Closed-form order of the family, without materializing the graph.
pub fn family_order(spec: &FamilySpec) -> Result<usize> {
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::DisjointCycles { ref lengths } => lengths.iter().sum(),
        FamilySpec::Snake { k, n } => (k - 1) * (n - 1) + 1,
        FamilySpec::CycleChain { k, n } => n * (k - 1) + 1,
        FamilySpec::Book { n, k } => (k - 2) * n + 2,
        FamilySpec::GeneralizedPetersen { n, .. } => 2 * n,
        FamilySpec::StackedPrism { k, n } => k * n,
        FamilySpec::Grid { m, n } => m * n,
        FamilySpec::PathPower { n, .. } => n,
        FamilySpec::CyclePower { n, .. } => n,
        FamilySpec::Spider { ref legs } => 1 + legs.iter().sum::<usize>(),
        FamilySpec::PerfectBinaryTree { levels } => (1 << levels) - 1,
        FamilySpec::Caterpillar { spine, ref leaves } => spine + leaves.iter().sum::<usize>(),
        FamilySpec::TToedCaterpillar { n, t } => n * (t + 1) + 2,
        FamilySpec::Firecracker { n, k } => n * k,
        FamilySpec::MaximalPrimeGraph { n } => n,
    })
}

/// Builds the graph for `spec` with the documented vertex numbering and
/// role-annotated vertex names (v_i, u_i, w_{i,j}, ...).
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        FamilySpec::DisjointCycles { ref lengths } => build_disjoint_cycles(lengths),
        FamilySpec::Snake { k, n } => build_snake(k, n),
        FamilySpec::CycleChain { k, n } => build_cycle_chain(k, n),
        FamilySpec::Book { n, k } => build_book(n, k),
        FamilySpec::GeneralizedPetersen { n, k } => build_generalized_petersen(n, k),
        FamilySpec::StackedPrism { k, n } => build_stacked_prism(k, n),
        FamilySpec::Grid { m, n } => build_grid(m, n),
        FamilySpec::PathPower { n, k } => build_path_power(n, k),
        FamilySpec::CyclePower { n, k } => build_cycle_power(n, k),
        FamilySpec::Spider { ref legs } => build_spider(legs),
        FamilySpec::PerfectBinaryTree { levels } => build_perfect_binary_tree(levels),
        FamilySpec::Caterpillar { spine, ref leaves } => build_caterpillar(spine, leaves),
        FamilySpec::TToedCaterpillar { n, t } => build_t_toed_caterpillar(n, t),
        FamilySpec::Firecracker { n, k } => build_firecracker(n, k),
        FamilySpec::MaximalPrimeGraph { n } => build_maximal_prime_graph(n),
    }
}

fn build_disjoint_cycles(lengths: &[usize]) -> Result<Graph> {
    let order: usize = lengths.iter().sum();
    let mut edges = Vec::new();
    let mut base = 0;
    for &k in lengths {
        for j in 0..k {
            edges.push((base + j + 1, base + (j + 1) % k + 1));
        }
        base += k;
    }
    let mut g = Graph::new(order, edges)?;
    let mut base = 0;
    for (i, &k) in lengths.iter().enumerate() {
        for j in 1..=k {
            g.set_name(base + j, format!("v_{{{},{}}}", i + 1, j));
        }
        base += k;
    }
    Ok(g)
}

fn build_snake(k: usize, n: usize) -> Result<Graph> {
    // base path v_1..v_n at 1..n, then w_{i,j} for i in 1..n-1, j in 1..k-2
    let w = |i: usize, j: usize| n + (i - 1) * (k - 2) + j;
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push((i, i + 1));
        if k == 3 {
            edges.push((i, w(i, 1)));
            edges.push((w(i, 1), i + 1));
        } else {
            edges.push((i, w(i, 1)));
            for j in 1..k - 2 {
                edges.push((w(i, j), w(i, j + 1)));
            }
            edges.push((w(i, k - 2), i + 1));
        }
    }
    let mut g = Graph::new((k - 1) * (n - 1) + 1, edges)?;
    for i in 1..=n {
        g.set_name(i, format!("v_{i}"));
    }
    for i in 1..n {
        for j in 1..=k - 2 {
            g.set_name(w(i, j), format!("w_{{{i},{j}}}"));
        }
    }
    Ok(g)
}

/// Counts of internal vertices on the two paths joining consecutive
/// junctions of a cycle chain; the w-path is the shorter one for odd k.
pub(crate) fn chain_path_lengths(k: usize) -> (usize, usize) {
    if k.is_multiple_of(2) {
        (k / 2 - 1, k / 2 - 1)
    } else {
        ((k - 3) / 2, (k - 1) / 2)
    }
}

fn build_cycle_chain(k: usize, n: usize) -> Result<Graph> {
    let (wlen, xlen) = chain_path_lengths(k);
    let seg = wlen + xlen; // = k - 2
    let w = |i: usize, j: usize| n + 1 + (i - 1) * seg + j;
    let x = |i: usize, j: usize| n + 1 + (i - 1) * seg + wlen + j;
    let mut edges = Vec::new();
    for i in 1..=n {
        if wlen == 0 {
            edges.push((i, i + 1));
        } else {
            edges.push((i, w(i, 1)));
            for j in 1..wlen {
                edges.push((w(i, j), w(i, j + 1)));
            }
            edges.push((w(i, wlen), i + 1));
        }
        edges.push((i, x(i, 1)));
        for j in 1..xlen {
            edges.push((x(i, j), x(i, j + 1)));
        }
        edges.push((x(i, xlen), i + 1));
    }
    let mut g = Graph::new(n * (k - 1) + 1, edges)?;
    for i in 1..=n + 1 {
        g.set_name(i, format!("v_{i}"));
    }
    for i in 1..=n {
        for j in 1..=wlen {
            g.set_name(w(i, j), format!("w_{{{i},{j}}}"));
        }
        for j in 1..=xlen {
            g.set_name(x(i, j), format!("x_{{{i},{j}}}"));
        }
    }
    Ok(g)
}

fn build_book(n: usize, k: usize) -> Result<Graph> {
    // u = 1, v = 2, pages w_{i,j} follow lexicographically
    let w = |i: usize, j: usize| 2 + (i - 1) * (k - 2) + j;
    let mut edges = vec![(1, 2)];
    for i in 1..=n {
        edges.push((1, w(i, 1)));
        for j in 1..k - 2 {
            edges.push((w(i, j), w(i, j + 1)));
        }
        edges.push((w(i, k - 2), 2));
    }
    let mut g = Graph::new((k - 2) * n + 2, edges)?;
    g.set_name(1, "u".into());
    g.set_name(2, "v".into());
    for i in 1..=n {
        for j in 1..=k - 2 {
            g.set_name(w(i, j), format!("w_{{{i},{j}}}"));
        }
    }
    Ok(g)
}

fn build_generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i + 1, (i + 1) % n + 1)); // outer ring
        edges.push((n + i + 1, n + (i + k) % n + 1)); // inner star
        edges.push((i + 1, n + i + 1)); // spokes
    }
    let mut g = Graph::new(2 * n, edges)?;
    for i in 1..=n {
        g.set_name(i, format!("v_{i}"));
        g.set_name(n + i, format!("u_{i}"));
    }
    Ok(g)
}

fn build_stacked_prism(k: usize, n: usize) -> Result<Graph> {
    let id = |i: usize, j: usize| (i - 1) * k + j;
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in 1..=k {
            edges.push((id(i, j), id(i, j % k + 1)));
        }
        if i < n {
            for j in 1..=k {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    let mut g = Graph::new(k * n, edges)?;
    for i in 1..=n {
        for j in 1..=k {
            g.set_name(id(i, j), format!("v_{{{i},{j}}}"));
        }
    }
    Ok(g)
}

fn build_grid(m: usize, n: usize) -> Result<Graph> {
    // Y_{m,n} with the ring-closing edges {v_{i,m}, v_{i,1}} removed;
    // built directly so m = 2 also works.
    let id = |i: usize, j: usize| (i - 1) * m + j;
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in 1..m {
            edges.push((id(i, j), id(i, j + 1)));
        }
        if i < n {
            for j in 1..=m {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    let mut g = Graph::new(m * n, edges)?;
    for i in 1..=n {
        for j in 1..=m {
            g.set_name(id(i, j), format!("v_{{{i},{j}}}"));
        }
    }
    Ok(g)
}

fn build_path_power(n: usize, k: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=(i + k).min(n) {
            edges.push((i, j));
        }
    }
    let mut g = Graph::new(n, edges)?;
    for i in 1..=n {
        g.set_name(i, format!("v_{i}"));
    }
    Ok(g)
}

fn build_cycle_power(n: usize, k: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let d = (j - i).min(n - (j - i));
            if d <= k {
                edges.push((i, j));
            }
        }
    }
    let mut g = Graph::new(n, edges)?;
    for i in 1..=n {
        g.set_name(i, format!("v_{i}"));
    }
    Ok(g)
}

fn build_spider(legs: &[usize]) -> Result<Graph> {
    let order = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in legs {
        edges.push((1, next));
        for _ in 1..len {
            edges.push((next, next + 1));
            next += 1;
        }
        next += 1;
    }
    let mut g = Graph::new(order, edges)?;
    g.set_name(1, "v".into());
    let mut next = 2;
    for (i, &len) in legs.iter().enumerate() {
        for j in 1..=len {
            g.set_name(next, format!("p_{{{},{}}}", i + 1, j));
            next += 1;
        }
    }
    Ok(g)
}

fn build_perfect_binary_tree(levels: usize) -> Result<Graph> {
    let order = (1usize << levels) - 1;
    let mut edges = Vec::new();
    for x in 1..=order / 2 {
        edges.push((x, 2 * x));
        edges.push((x, 2 * x + 1));
    }
    let mut g = Graph::new(order, edges)?;
    for x in 1..=order {
        let level = usize::BITS as usize - x.leading_zeros() as usize;
        let j = x - (1 << (level - 1)) + 1;
        g.set_name(x, format!("v_{{{level},{j}}}"));
    }
    Ok(g)
}

fn build_caterpillar(spine: usize, leaves: &[usize]) -> Result<Graph> {
    let order = spine + leaves.iter().sum::<usize>();
    let mut edges = Vec::new();
    for i in 1..spine {
        edges.push((i, i + 1));
    }
    let mut next = spine + 1;
    for (idx, &cnt) in leaves.iter().enumerate() {
        let v = idx + 2; // interior vertices are v_2..v_{spine-1}
        for _ in 0..cnt {
            edges.push((v, next));
            next += 1;
        }
    }
    let mut g = Graph::new(order, edges)?;
    for i in 1..=spine {
        g.set_name(i, format!("v_{i}"));
    }
    let mut next = spine + 1;
    for (idx, &cnt) in leaves.iter().enumerate() {
        for j in 1..=cnt {
            g.set_name(next, format!("u_{{{},{}}}", idx + 2, j));
            next += 1;
        }
    }
    Ok(g)
}

fn build_t_toed_caterpillar(n: usize, t: usize) -> Result<Graph> {
    // spine u, v_1..v_n, w at ids 1, 2..n+1, n+2; toes follow
    let v = |i: usize| 1 + i;
    let toe = |i: usize, j: usize| n + 2 + (i - 1) * t + j;
    let mut edges = vec![(1, v(1)), (v(n), n + 2)];
    for i in 1..n {
        edges.push((v(i), v(i + 1)));
    }
    for i in 1..=n {
        for j in 1..=t {
            edges.push((v(i), toe(i, j)));
        }
    }
    let mut g = Graph::new(n * (t + 1) + 2, edges)?;
    g.set_name(1, "u".into());
    g.set_name(n + 2, "w".into());
    for i in 1..=n {
        g.set_name(v(i), format!("v_{i}"));
        for j in 1..=t {
            g.set_name(toe(i, j), format!("x_{{{i},{j}}}"));
        }
    }
    Ok(g)
}

fn build_firecracker(n: usize, k: usize) -> Result<Graph> {
    // path v_1..v_n at 1..n, star centers u_i at n+i, leaves w_{i,j} follow
    let u = |i: usize| n + i;
    let w = |i: usize, j: usize| 2 * n + (i - 1) * (k - 2) + j;
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push((i, i + 1));
    }
    for i in 1..=n {
        edges.push((i, u(i)));
        for j in 1..=k - 2 {
            edges.push((u(i), w(i, j)));
        }
    }
    let mut g = Graph::new(n * k, edges)?;
    for i in 1..=n {
        g.set_name(i, format!("v_{i}"));
        g.set_name(u(i), format!("u_{i}"));
        for j in 1..=k - 2 {
            g.set_name(w(i, j), format!("w_{{{i},{j}}}"));
        }
    }
    Ok(g)
}

fn build_maximal_prime_graph(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if gcd(i as u64, j as u64) == 1 {
                edges.push((i, j));
            }
        }
    }
    let mut g = Graph::new(n, edges)?;
    for i in 1..=n {
        g.set_name(i, format!("v_{i}"));
    }
    Ok(g)
}
