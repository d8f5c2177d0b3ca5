//! One constructive labeler per proven theorem, each returning a
//! `Labeling` that passes `verify_labeling` on the matching family graph,
//! plus the `classify` aggregation of the known verdicts.

use serde::{Deserialize, Serialize};

use crate::coprime::{bertrand_prime, coprime_matching, reorder_power_of_two};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{gcd, Labeling};

/// Identifies which constructive labeler realizes an odd prime labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelerId {
    DisjointCycles,
    Snake,
    CycleChain,
    Book,
    Prism,
    StackedPrism,
    Grid,
    Spider,
    PerfectBinaryTree,
    CaterpillarMaxDeg5,
    TToedCaterpillar,
    Firecracker,
    PathPower2,
    CyclePower2,
    SmallPower,
    RnTable,
}

/// What is known about the odd primality of a family instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// An odd prime labeling exists. `labeler` names the constructor in
    /// this crate when one is implemented; `None` marks results known
    /// from prior work only (ladders, GP(n,2), plain paths).
    OddPrime { labeler: Option<LabelerId> },
    /// Ruled out by the independence bound: beta < floor((n+1)/3).
    NotOddPrime { beta: usize, bound: usize },
    /// Open in general.
    Conjectured,
}

/// The alternating clockwise/counter-clockwise visit order
/// v_1, v_k, v_2, v_{k-1}, ... used by the cycle labelers.
fn alternating_order(k: usize) -> Vec<usize> {
    let (mut lo, mut hi) = (1, k);
    let mut order = Vec::with_capacity(k);
    while lo <= hi {
        order.push(lo);
        if lo != hi {
            order.push(hi);
        }
        lo += 1;
        hi -= 1;
    }
    order
}

/// Labels each cycle in turn from the smallest unused odd value, walking
/// the cycle in the alternating order so adjacent labels differ by 2 or 4.
pub fn label_disjoint_cycles(lengths: &[usize]) -> Result<Labeling> {
    FamilySpec::DisjointCycles {
        lengths: lengths.to_vec(),
    }
    .validate()?;
    let mut labels = Vec::new();
    let mut next = 1u64;
    let mut base = 0usize;
    for &k in lengths {
        for v in alternating_order(k) {
            labels.push((base + v, next));
            next += 2;
        }
        base += k;
    }
    Ok(Labeling::new(labels))
}

/// Sequential labels along v_1, w_{1,*}, v_2, ..., giving
/// l(v_i) = 2(k-1)(i-1)+1.
pub fn label_snake(k: usize, n: usize) -> Result<Labeling> {
    FamilySpec::Snake { k, n }.validate()?;
    let w = |i: usize, j: usize| n + (i - 1) * (k - 2) + j;
    let mut labels = Vec::new();
    let mut next = 1u64;
    for i in 1..n {
        labels.push((i, next));
        next += 2;
        for j in 1..=k - 2 {
            labels.push((w(i, j), next));
            next += 2;
        }
    }
    labels.push((n, next));
    Ok(Labeling::new(labels))
}

pub fn label_cycle_chain(k: usize, n: usize) -> Result<Labeling> {
    FamilySpec::CycleChain { k, n }.validate()?;
    let (wlen, xlen) = crate::families::chain_path_lengths(k);
    let seg = wlen + xlen;
    let w = |i: usize, j: usize| n + 1 + (i - 1) * seg + j;
    let x = |i: usize, j: usize| n + 1 + (i - 1) * seg + wlen + j;
    let mut labels = vec![(1usize, 1u64)];
    let mut next = 3u64;
    for i in 1..=n {
        // interleave the two internal paths; even k starts on the w-path,
        // odd k starts on the (longer) x-path
        let mut order = Vec::new();
        if k.is_multiple_of(2) {
            for j in 1..=wlen {
                order.push(w(i, j));
                order.push(x(i, j));
            }
        } else {
            for j in 1..=wlen {
                order.push(x(i, j));
                order.push(w(i, j));
            }
            order.push(x(i, xlen));
        }
        order.push(i + 1);
        for v in order {
            labels.push((v, next));
            next += 2;
        }
    }
    Ok(Labeling::new(labels))
}

/// Pages get consecutive odd runs; the largest Bertrand prime in
/// ((k-2)n+2, 2(k-2)n+4) is moved onto v, sliding the affected page down
/// one position.
pub fn label_book(n: usize, k: usize) -> Result<Labeling> {
    FamilySpec::Book { n, k }.validate()?;
    let w = |i: usize, j: usize| 2 + (i - 1) * (k - 2) + j;
    let top = 2 * ((k - 2) * n) as u64 + 3;
    let mut labels = vec![(1usize, 1u64), (2usize, top)];
    for i in 1..=n {
        for j in 1..=k - 2 {
            labels.push((w(i, j), 1 + 2 * ((i - 1) * (k - 2) + j) as u64));
        }
    }
    let t = ((k - 2) * n + 2) as u64;
    let p = bertrand_prime(t);
    if p != top {
        // p currently sits at w_{a,b}; move it to v and close the gap
        let pos = ((p - 3) / 2) as usize; // 0-based among the page vertices
        let (a, b) = (pos / (k - 2) + 1, pos % (k - 2) + 1);
        labels[1] = (2, p);
        for j in b..=k - 3 {
            labels[2 + (a - 1) * (k - 2) + j - 1] = (w(a, j), p + 2 * (j - b + 1) as u64);
        }
        labels[2 + (a - 1) * (k - 2) + (k - 2) - 1] = (w(a, k - 2), top);
    }
    Ok(Labeling::new(labels))
}

/// l(u_i) = 4i-3, l(v_i) = 4i-1, swapping the labels of u_1 and v_1 when
/// n = 1 (mod 3) so neither ring closes on a shared factor of 3.
pub fn label_prism(n: usize) -> Result<Labeling> {
    FamilySpec::GeneralizedPetersen { n, k: 1 }.validate()?;
    let mut labels = Vec::new();
    for i in 1..=n as u64 {
        labels.push((n + i as usize, 4 * i - 3)); // u_i (inner)
        labels.push((i as usize, 4 * i - 1)); // v_i (outer)
    }
    if n % 3 == 1 {
        labels[0] = (n + 1, 3);
        labels[1] = (1, 1);
    }
    Ok(Labeling::new(labels))
}

const Y3_TABLE: [[u64; 3]; 3] = [[1, 3, 5], [9, 11, 7], [17, 13, 15]];
const Y5_TABLE: [[u64; 5]; 5] = [
    [1, 3, 7, 9, 5],
    [17, 19, 15, 11, 13],
    [25, 21, 23, 27, 29],
    [33, 37, 39, 35, 31],
    [49, 45, 41, 43, 47],
];
const Y6_TABLE: [[u64; 6]; 3] = [
    [1, 9, 11, 3, 7, 5],
    [17, 13, 15, 19, 23, 21],
    [33, 29, 31, 35, 27, 25],
];

/// Seed-table labelings for k in {3, 5, 6} (rows repeat with a constant
/// shift per period) and the alternating-order labeling for k = 2^m.
pub fn label_stacked_prism(k: usize, n: usize) -> Result<Labeling> {
    FamilySpec::StackedPrism { k, n }.validate()?;
    let id = |i: usize, j: usize| (i - 1) * k + j;
    let mut labels = Vec::new();
    match k {
        3 | 5 | 6 => {
            let (period, shift): (usize, u64) = match k {
                3 => (3, 18),
                5 => (5, 50),
                _ => (3, 36),
            };
            let seed = |b: usize, j: usize| match k {
                3 => Y3_TABLE[b][j],
                5 => Y5_TABLE[b][j],
                _ => Y6_TABLE[b][j],
            };
            for i in 1..=n {
                // i = period*a + b with 1 <= b <= period
                let b = (i - 1) % period + 1;
                let a = ((i - b) / period) as u64;
                for j in 1..=k {
                    labels.push((id(i, j), seed(b - 1, j - 1) + shift * a));
                }
            }
        }
        _ if k.is_power_of_two() => {
            for i in 1..=n {
                let base = 2 * ((i - 1) * k) as u64;
                for (p, j) in alternating_order(k).into_iter().enumerate() {
                    labels.push((id(i, j), base + 2 * p as u64 + 1));
                }
            }
        }
        _ => return Err(Error::UnsupportedPolygon(k)),
    }
    Ok(Labeling::new(labels))
}

/// The stacked-prism labeling restricted to the grid: valid because the
/// grid is a spanning subgraph of Y_{m,n} with the same vertex numbering.
pub fn label_grid(m: usize, n: usize) -> Result<Labeling> {
    FamilySpec::Grid { m, n }.validate()?;
    if m == 2 {
        return Err(Error::UnsupportedPolygon(m));
    }
    label_stacked_prism(m, n)
}

/// Center gets 1; each leg takes the next run of consecutive odd values
/// outward.
pub fn label_spider(legs: &[usize]) -> Result<Labeling> {
    FamilySpec::Spider {
        legs: legs.to_vec(),
    }
    .validate()?;
    let mut labels = vec![(1usize, 1u64)];
    let mut next = 3u64;
    let mut id = 2usize;
    for &len in legs {
        for _ in 0..len {
            labels.push((id, next));
            id += 1;
            next += 2;
        }
    }
    Ok(Labeling::new(labels))
}

/// Root 1; the children of a level-k vertex labeled x get x + 2^k and
/// x + 2^{k+1}, so level k holds exactly {2^k - 1, ..., 2^{k+1} - 3}.
pub fn label_perfect_binary_tree(levels: usize) -> Result<Labeling> {
    FamilySpec::PerfectBinaryTree { levels }.validate()?;
    let order = (1usize << levels) - 1;
    let mut labels = vec![0u64; order + 1];
    labels[1] = 1;
    for x in 1..=order / 2 {
        let level = usize::BITS as usize - x.leading_zeros() as usize;
        labels[2 * x] = labels[x] + (1 << level);
        labels[2 * x + 1] = labels[x] + (1 << (level + 1));
    }
    Ok(Labeling::new((1..=order).map(|v| (v, labels[v]))))
}

/// Left-to-right scan of the spine; each interior vertex takes the
/// smallest value in its window that avoids the prime factors its degree
/// case requires, and its leaves absorb the rest of the window.
pub fn label_caterpillar_maxdeg5(spine: usize, leaves: &[usize]) -> Result<Labeling> {
    FamilySpec::Caterpillar {
        spine,
        leaves: leaves.to_vec(),
    }
    .validate()?;
    for (idx, &cnt) in leaves.iter().enumerate() {
        let degree = cnt + 2;
        if degree > 5 {
            return Err(Error::DegreeTooLarge {
                vertex: idx + 2,
                degree,
            });
        }
    }
    let mut labels = vec![(1usize, 1u64)];
    let mut next = 3u64;
    let mut leaf_id = spine + 1;
    for (idx, &cnt) in leaves.iter().enumerate() {
        let v = idx + 2;
        let window: Vec<u64> = (0..=cnt as u64).map(|s| next + 2 * s).collect();
        let chosen = match cnt {
            0 => window[0],
            1 => *window
                .iter()
                .find(|&&x| x % 3 != 0)
                .expect("two consecutive odds"),
            _ => *window
                .iter()
                .find(|&&x| x % 3 != 0 && x % 5 != 0)
                .expect("window of 3 or 4 odds avoids 3 and 5"),
        };
        labels.push((v, chosen));
        for &x in window.iter().filter(|&&x| x != chosen) {
            labels.push((leaf_id, x));
            leaf_id += 1;
        }
        next += 2 * (cnt as u64 + 1);
    }
    labels.push((spine, next));
    Ok(Labeling::new(labels))
}

/// Interior spine pre-labeled 2i-1, ends of the spine take the two labels
/// past the range, the interior is reordered so a label coprime to the
/// w-end sits at v_n, and each toe block is filled by a coprime matching.
pub fn label_t_toed_caterpillar(n: usize, t: usize) -> Result<Labeling> {
    FamilySpec::TToedCaterpillar { n, t }.validate()?;
    let big = [2 * (n * (t + 1)) as u64 + 3, 2 * (n * (t + 1)) as u64 + 1];

    // pick the interior label for v_n and the label for w
    let (target, w_label) = if n == 1 {
        (1, big[0])
    } else {
        let mut found = None;
        'outer: for k in 2..=n as u64 {
            for &b in &big {
                if gcd(2 * k - 1, b) == 1 {
                    found = Some((2 * k - 1, b));
                    break 'outer;
                }
            }
        }
        found.ok_or(Error::MatchingFailure { n, a: big[1], b: 2 })?
    };
    let u_label = if w_label == big[0] { big[1] } else { big[0] };

    let mut labels = vec![(1usize, u_label), (n + 2, w_label), (2usize, 1u64)];
    let mut spine = vec![1u64];
    if n > 1 {
        let reordered = reorder_power_of_two(3, n - 1, target)?;
        for (i, &lab) in reordered.iter().enumerate() {
            labels.push((2 + i + 1, lab));
        }
        spine.extend(reordered);
    }

    let toe = |i: usize, j: usize| n + 2 + (i - 1) * t + j;
    for j in 1..=t {
        let h = coprime_matching(n, 2 * (n * j) as u64 + 1, 2)?;
        for (i, &m) in spine.iter().enumerate() {
            let img = h.map(m).expect("spine label in matching domain");
            labels.push((toe(i + 1, j), img));
        }
    }
    Ok(Labeling::new(labels))
}

/// Path vertices take 2n+1..4n-1; centers take the matching preimages of
/// their path vertex; each leaf block is a further coprime matching image
/// of the center labels.
#[allow(clippy::needless_range_loop)] // vertices are 1-indexed throughout
pub fn label_firecracker(n: usize, k: usize) -> Result<Labeling> {
    FamilySpec::Firecracker { n, k }.validate()?;
    let h = coprime_matching(n, 2 * n as u64 + 1, 2)?;
    let mut labels = Vec::new();
    let mut center = vec![0u64; n + 1];
    for i in 1..=n {
        let v_label = 2 * (n + i) as u64 - 1;
        labels.push((i, v_label));
        let u_label = h.inverse(v_label).expect("image of the matching");
        center[i] = u_label;
        labels.push((n + i, u_label));
    }
    let w = |i: usize, j: usize| 2 * n + (i - 1) * (k - 2) + j;
    for j in 1..=k - 2 {
        let hj = coprime_matching(n, 2 * ((j + 1) * n) as u64 + 1, 2)?;
        for i in 1..=n {
            labels.push((w(i, j), hj.map(center[i]).expect("center label in domain")));
        }
    }
    Ok(Labeling::new(labels))
}

/// l(v_i) = 2i-1; distance-1 and distance-2 labels differ by 2 or 4.
pub fn label_path_power2(n: usize) -> Result<Labeling> {
    if n < 2 {
        return Err(Error::InvalidParameters(
            "path power requires n >= 2".into(),
        ));
    }
    Ok(Labeling::new((1..=n).map(|i| (i, 2 * i as u64 - 1))))
}

/// Same identity labeling as the path square; the wrap edges work exactly
/// when 2n-1 avoids the factor 3, i.e. n != 2 (mod 3).
pub fn label_cycle_power2(n: usize) -> Result<Labeling> {
    if n < 3 {
        return Err(Error::InvalidParameters(
            "cycle power requires n >= 3".into(),
        ));
    }
    if n % 3 == 2 {
        return Err(Error::ProvablyInfeasible {
            beta: n / 3,
            bound: (n + 1) / 3,
        });
    }
    Ok(Labeling::new((1..=n).map(|i| (i, 2 * i as u64 - 1))))
}

/// The finitely many odd prime cases of P_n^k for k in {3, 4, 5}.
const SMALL_POWER_CASES: &[(usize, usize, &[u64])] = &[
    (5, 3, &[3, 1, 5, 7, 9]),
    (6, 3, &[3, 1, 5, 7, 9, 11]),
    (7, 3, &[3, 1, 5, 7, 9, 11, 13]),
    (9, 3, &[3, 1, 5, 7, 9, 11, 13, 17, 15]),
    (10, 3, &[3, 1, 5, 7, 9, 11, 13, 17, 15, 19]),
    (13, 3, &[3, 1, 5, 7, 9, 11, 13, 25, 21, 19, 23, 17, 15]),
    (6, 4, &[3, 1, 5, 7, 11, 9]),
    (7, 4, &[3, 1, 5, 7, 11, 9, 13]),
    (7, 5, &[3, 1, 5, 7, 11, 13, 9]),
];

/// Closed-form independence numbers for powers of paths and cycles.
pub fn power_independence(spec: &FamilySpec) -> Option<usize> {
    match *spec {
        FamilySpec::PathPower { n, k } => Some(n.div_ceil(k + 1)),
        FamilySpec::CyclePower { n, k } => Some(n / (k + 1)),
        _ => None,
    }
}

/// Explicit labelings for the nine odd prime higher-power cases;
/// everything else fails the independence bound.
pub fn label_small_power(spec: &FamilySpec) -> Result<Labeling> {
    spec.validate()?;
    let (n, k) = match *spec {
        FamilySpec::PathPower { n, k } | FamilySpec::CyclePower { n, k } => (n, k),
        _ => {
            return Err(Error::InvalidParameters(
                "label_small_power expects a path or cycle power".into(),
            ))
        }
    };
    if k < 3 {
        return Err(Error::InvalidParameters(
            "label_small_power handles k >= 3 only".into(),
        ));
    }
    if let FamilySpec::PathPower { .. } = spec {
        if let Some(&(_, _, seq)) = SMALL_POWER_CASES
            .iter()
            .find(|&&(cn, ck, _)| cn == n && ck == k)
        {
            return Ok(Labeling::new(
                seq.iter().enumerate().map(|(i, &l)| (i + 1, l)),
            ));
        }
    }
    Err(Error::ProvablyInfeasible {
        beta: power_independence(spec).expect("path or cycle power"),
        bound: (n + 1) / 3,
    })
}

/// Dispatches to the labeler proven for `spec`.
pub fn label_family(spec: &FamilySpec) -> Result<Labeling> {
    spec.validate()?;
    match *spec {
        FamilySpec::DisjointCycles { ref lengths } => label_disjoint_cycles(lengths),
        FamilySpec::Snake { k, n } => label_snake(k, n),
        FamilySpec::CycleChain { k, n } => label_cycle_chain(k, n),
        FamilySpec::Book { n, k } => label_book(n, k),
        FamilySpec::GeneralizedPetersen { n, k: 1 } => label_prism(n),
        FamilySpec::GeneralizedPetersen { n, k } => Err(Error::NoKnownLabeler(format!(
            "generalized_petersen n={n} k={k}"
        ))),
        FamilySpec::StackedPrism { k, n } => label_stacked_prism(k, n),
        FamilySpec::Grid { m, n } => label_grid(m, n),
        FamilySpec::PathPower { n, k: 1 } | FamilySpec::PathPower { n, k: 2 } => {
            label_path_power2(n)
        }
        FamilySpec::PathPower { .. } => label_small_power(spec),
        FamilySpec::CyclePower { n, k: 1 } => label_disjoint_cycles(&[n]),
        FamilySpec::CyclePower { n, k: 2 } => label_cycle_power2(n),
        FamilySpec::CyclePower { .. } => label_small_power(spec),
        FamilySpec::Spider { ref legs } => label_spider(legs),
        FamilySpec::PerfectBinaryTree { levels } => label_perfect_binary_tree(levels),
        FamilySpec::Caterpillar { spine, ref leaves } => label_caterpillar_maxdeg5(spine, leaves),
        FamilySpec::TToedCaterpillar { n, t } => label_t_toed_caterpillar(n, t),
        FamilySpec::Firecracker { n, k } => label_firecracker(n, k),
        FamilySpec::MaximalPrimeGraph { n } => {
            let seq = crate::rn::rn_sequence(n)?;
            Ok(Labeling::new(
                seq.into_iter().enumerate().map(|(i, l)| (i + 1, l)),
            ))
        }
    }
}

fn proven_polygon(k: usize) -> bool {
    matches!(k, 3 | 5 | 6) || (k >= 4 && k.is_power_of_two())
}

/// Aggregates the known theorem statements into a verdict per spec.
pub fn classify(spec: &FamilySpec) -> Result<Verdict> {
    spec.validate()?;
    let odd_prime = |l: LabelerId| Verdict::OddPrime { labeler: Some(l) };
    Ok(match *spec {
        FamilySpec::DisjointCycles { .. } => odd_prime(LabelerId::DisjointCycles),
        FamilySpec::Snake { .. } => odd_prime(LabelerId::Snake),
        FamilySpec::CycleChain { .. } => odd_prime(LabelerId::CycleChain),
        FamilySpec::Book { .. } => odd_prime(LabelerId::Book),
        FamilySpec::GeneralizedPetersen { k: 1, .. } => odd_prime(LabelerId::Prism),
        // GP(n,2) is odd prime by prior work; no constructor here
        FamilySpec::GeneralizedPetersen { k: 2, .. } => Verdict::OddPrime { labeler: None },
        FamilySpec::GeneralizedPetersen { .. } => Verdict::Conjectured,
        FamilySpec::StackedPrism { k, .. } if proven_polygon(k) => {
            odd_prime(LabelerId::StackedPrism)
        }
        FamilySpec::StackedPrism { .. } => Verdict::Conjectured,
        FamilySpec::Grid { m, .. } if proven_polygon(m) => odd_prime(LabelerId::Grid),
        // ladders and single-layer grids (paths) are odd prime by prior work
        FamilySpec::Grid { m: 2, .. } | FamilySpec::Grid { n: 1, .. } => {
            Verdict::OddPrime { labeler: None }
        }
        FamilySpec::Grid { .. } => Verdict::Conjectured,
        FamilySpec::PathPower { k: 1, .. } | FamilySpec::PathPower { k: 2, .. } => {
            odd_prime(LabelerId::PathPower2)
        }
        FamilySpec::PathPower { n, k } => {
            if SMALL_POWER_CASES
                .iter()
                .any(|&(cn, ck, _)| cn == n && ck == k)
            {
                odd_prime(LabelerId::SmallPower)
            } else {
                Verdict::NotOddPrime {
                    beta: power_independence(spec).expect("path power"),
                    bound: (n + 1) / 3,
                }
            }
        }
        FamilySpec::CyclePower { k: 1, .. } => odd_prime(LabelerId::DisjointCycles),
        FamilySpec::CyclePower { n, k: 2 } => {
            if n % 3 != 2 {
                odd_prime(LabelerId::CyclePower2)
            } else {
                Verdict::NotOddPrime {
                    beta: n / 3,
                    bound: (n + 1) / 3,
                }
            }
        }
        FamilySpec::CyclePower { n, .. } => Verdict::NotOddPrime {
            beta: power_independence(spec).expect("cycle power"),
            bound: (n + 1) / 3,
        },
        FamilySpec::Spider { .. } => odd_prime(LabelerId::Spider),
        FamilySpec::PerfectBinaryTree { .. } => odd_prime(LabelerId::PerfectBinaryTree),
        FamilySpec::Caterpillar { ref leaves, .. } => {
            if leaves.iter().all(|&c| c + 2 <= 5) {
                odd_prime(LabelerId::CaterpillarMaxDeg5)
            } else {
                // the all-trees conjecture covers the rest
                Verdict::Conjectured
            }
        }
        FamilySpec::TToedCaterpillar { .. } => odd_prime(LabelerId::TToedCaterpillar),
        FamilySpec::Firecracker { .. } => odd_prime(LabelerId::Firecracker),
        FamilySpec::MaximalPrimeGraph { n } => {
            if n <= 50 {
                odd_prime(LabelerId::RnTable)
            } else {
                Verdict::Conjectured
            }
        }
    })
}
