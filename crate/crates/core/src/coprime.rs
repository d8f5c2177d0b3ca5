//! Number-theoretic building blocks: coprime matchings between label sets,
//! the power-of-two reordering of a run of consecutive odd integers,
//! primality, and Bertrand primes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::gcd;

/// A bijection from the first n odd integers onto an arithmetic
/// progression a, a+b, ..., a+(n-1)b pairing each element with a
/// coprime partner.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoprimeMatching {
    /// (domain element, its image), sorted by domain element.
    pub pairs: Vec<(u64, u64)>,
}

impl CoprimeMatching {
    pub fn map(&self, m: u64) -> Option<u64> {
        self.pairs.iter().find(|&&(d, _)| d == m).map(|&(_, s)| s)
    }

    pub fn inverse(&self, s: u64) -> Option<u64> {
        self.pairs.iter().find(|&&(_, c)| c == s).map(|&(d, _)| d)
    }
}

/// Constructs a coprime matching from {1, 3, ..., 2n-1} onto
/// {a, a+b, ..., a+(n-1)b} via augmenting paths on the coprimality graph.
///
/// Existence is guaranteed when a and b share no odd prime divisor less
/// than 2n-1; a failure under that hypothesis indicates a bug.
pub fn coprime_matching(n: usize, a: u64, b: u64) -> Result<CoprimeMatching> {
    if n == 0 || a == 0 || b == 0 {
        return Err(Error::InvalidParameters(
            "coprime_matching requires n, a, b >= 1".into(),
        ));
    }
    let limit = 2 * n as u64 - 1;
    let mut g = gcd(a, b);
    while g.is_multiple_of(2) {
        g /= 2;
    }
    // g now carries the shared odd part; any prime factor below 2n-1
    // violates the matching theorem's hypothesis.
    let mut rest = g;
    let mut p = 3;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            if p < limit {
                return Err(Error::HypothesisViolated { a, b, limit });
            }
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 2;
    }
    if rest > 1 && rest < limit {
        return Err(Error::HypothesisViolated { a, b, limit });
    }

    let domain: Vec<u64> = (0..n).map(|i| 2 * i as u64 + 1).collect();
    let codomain: Vec<u64> = (0..n).map(|i| a + i as u64 * b).collect();

    // Kuhn's algorithm. Domain scanned in increasing order; within an
    // augmenting path, codomain candidates are tried in decreasing order.
    let mut matched: Vec<Option<usize>> = vec![None; n]; // codomain idx -> domain idx
    fn augment(
        d: usize,
        domain: &[u64],
        codomain: &[u64],
        matched: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for c in (0..codomain.len()).rev() {
            if visited[c] || gcd(domain[d], codomain[c]) != 1 {
                continue;
            }
            visited[c] = true;
            match matched[c] {
                None => {
                    matched[c] = Some(d);
                    return true;
                }
                Some(owner) => {
                    if augment(owner, domain, codomain, matched, visited) {
                        matched[c] = Some(d);
                        return true;
                    }
                }
            }
        }
        false
    }

    for d in 0..n {
        let mut visited = vec![false; n];
        if !augment(d, &domain, &codomain, &mut matched, &mut visited) {
            return Err(Error::MatchingFailure { n, a, b });
        }
    }

    let mut pairs = vec![(0, 0); n];
    for (c, owner) in matched.iter().enumerate() {
        let d = owner.expect("perfect matching");
        pairs[d] = (domain[d], codomain[c]);
    }
    Ok(CoprimeMatching { pairs })
}

/// Reorders the consecutive odd run m, m+2, ..., m+2(count-1) so that it
/// ends at `target` while every successive difference is a power of two.
///
/// Walks the binary expansion of (last - target): the entries
/// target, target+2^{a_1}, target+2^{a_1}+2^{a_2}, ... are pulled out and
/// re-appended in reverse.
pub fn reorder_power_of_two(m: u64, count: usize, target: u64) -> Result<Vec<u64>> {
    if count == 0 || m.is_multiple_of(2) {
        return Err(Error::InvalidParameters(
            "reorder_power_of_two requires an odd start and count >= 1".into(),
        ));
    }
    let last = m + 2 * (count as u64 - 1);
    if target < m || target > last || target.is_multiple_of(2) {
        return Err(Error::TargetNotInSequence {
            start: m,
            count,
            target,
        });
    }
    let seq: Vec<u64> = (0..count as u64).map(|i| m + 2 * i).collect();
    if target == last {
        return Ok(seq);
    }

    let diff = last - target;
    let mut removed = Vec::new();
    let mut acc = target;
    let mut bit = 63u32;
    // exponents of diff in decreasing order; each is >= 1 since diff is even
    loop {
        if diff & (1 << bit) != 0 {
            removed.push(acc);
            acc += 1 << bit;
        }
        if bit == 0 {
            break;
        }
        bit -= 1;
    }
    debug_assert_eq!(acc, last);
    // acc reached `last`, which stays in place; `removed` holds the partial
    // sums short of it, starting with `target` itself.
    let mut out: Vec<u64> = seq.into_iter().filter(|x| !removed.contains(x)).collect();
    out.extend(removed.into_iter().rev());
    Ok(out)
}

/// Deterministic trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The largest prime strictly between t and 2t. Bertrand's postulate
/// guarantees one exists for every t > 1.
pub fn bertrand_prime(t: u64) -> u64 {
    assert!(t > 1, "bertrand_prime requires t > 1");
    let mut p = 2 * t - 1;
    while p > t {
        if is_prime(p) {
            return p;
        }
        p -= 1;
    }
    unreachable!("Bertrand's postulate: a prime exists in ({t}, {})", 2 * t)
}
