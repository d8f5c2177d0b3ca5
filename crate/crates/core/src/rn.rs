//! Label sequences for the maximal prime graph R_n (n <= 50) and the
//! conversion of a prime labeling into an odd prime labeling.
//!
//! Each row serves a range of orders: for an order n inside the range,
//! the first n entries of the row form the labeling. The rows are static
//! data; a one-time self-check fails fast on any transcription defect.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::families::{build_family, FamilySpec};
use crate::graph::{gcd, verify_labeling, Labeling, VerificationReport};

struct Row {
    lo: usize,
    hi: usize,
    seq: &'static [u64],
}

#[rustfmt::skip]
const ROWS: &[Row] = &[
    Row { lo: 1, hi: 4, seq: &[1, 3, 5, 7] },
    Row { lo: 5, hi: 7, seq: &[1, 3, 5, 9, 7, 11, 13] },
    Row { lo: 8, hi: 10, seq: &[1, 3, 5, 9, 7, 15, 11, 13, 17, 19] },
    Row { lo: 11, hi: 12, seq: &[1, 3, 5, 9, 7, 15, 11, 13, 17, 21, 19, 23] },
    Row { lo: 13, hi: 16, seq: &[1, 3, 5, 9, 7, 15, 11, 13, 25, 21, 17, 23, 19, 27, 29, 31] },
    Row { lo: 17, hi: 17, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 17, 19, 33, 23, 29, 31] },
    Row { lo: 18, hi: 22, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 17, 13, 19, 33, 35, 23, 29,
        31, 37, 39, 41, 43] },
    Row { lo: 23, hi: 27, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 19, 23,
        29, 31, 37, 41, 39, 43, 47, 49, 51, 53] },
    Row { lo: 28, hi: 28, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 19, 23,
        29, 31, 41, 55, 39, 37, 43, 49, 51, 47, 53] },
    Row { lo: 29, hi: 31, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 57, 23,
        19, 29, 37, 55, 39, 31, 41, 49, 51, 43, 47, 53, 59, 61] },
    Row { lo: 32, hi: 33, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 57, 23,
        19, 29, 63, 55, 39, 31, 37, 49, 51, 41, 43, 47, 53, 59, 61, 65] },
    Row { lo: 34, hi: 34, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 23, 19,
        29, 31, 63, 55, 39, 37, 41, 49, 51, 43, 47, 53, 59, 61, 67, 65, 57] },
    Row { lo: 35, hi: 37, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 23, 19,
        29, 31, 63, 55, 39, 37, 41, 49, 51, 43, 47, 53, 59, 61, 69, 65, 57, 67, 71, 73] },
    Row { lo: 38, hi: 38, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 23, 19,
        75, 29, 63, 55, 39, 31, 37, 49, 51, 41, 43, 47, 53, 59, 69, 65, 57, 61, 67, 71, 73] },
    Row { lo: 39, hi: 40, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 23, 19,
        75, 29, 63, 55, 39, 31, 37, 49, 51, 41, 43, 47, 53, 59, 69, 65, 57, 77, 61, 67, 71, 73,
        79] },
    Row { lo: 41, hi: 42, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 81, 19,
        75, 23, 63, 55, 39, 29, 31, 49, 51, 37, 41, 43, 47, 53, 59, 65, 57, 77, 61, 67, 69, 71,
        73, 79, 83] },
    Row { lo: 43, hi: 43, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 81, 19,
        75, 23, 63, 55, 39, 29, 31, 49, 51, 37, 41, 43, 47, 53, 59, 65, 57, 77, 61, 67, 69, 85,
        71, 73, 79, 83] },
    Row { lo: 44, hi: 45, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 13, 45, 17, 33, 35, 81, 19,
        75, 23, 63, 55, 39, 31, 29, 49, 51, 37, 41, 43, 47, 53, 59, 65, 57, 77, 61, 67, 69, 85,
        71, 73, 79, 83, 87, 89] },
    Row { lo: 46, hi: 46, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 29, 45, 17, 33, 35, 81, 19,
        75, 23, 63, 55, 39, 31, 65, 49, 51, 37, 13, 41, 91, 43, 47, 53, 57, 77, 59, 61, 69, 85,
        67, 71, 73, 79, 87, 83, 89] },
    Row { lo: 47, hi: 47, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 29, 45, 17, 33, 35, 81, 19,
        75, 23, 63, 55, 39, 31, 65, 49, 51, 37, 13, 41, 91, 43, 47, 53, 57, 77, 59, 61, 69, 85,
        67, 71, 73, 79, 87, 83, 93, 89] },
    Row { lo: 48, hi: 49, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 29, 45, 17, 33, 35, 81, 59,
        75, 23, 63, 55, 39, 31, 65, 49, 51, 37, 13, 41, 91, 43, 47, 19, 53, 77, 57, 61, 69, 85,
        67, 71, 73, 79, 87, 83, 93, 89, 95, 97] },
    Row { lo: 50, hi: 50, seq: &[1, 3, 5, 9, 7, 15, 11, 27, 25, 21, 29, 45, 17, 33, 35, 81, 59,
        75, 23, 63, 55, 39, 31, 65, 49, 51, 37, 99, 41, 91, 43, 47, 19, 53, 77, 57, 61, 69, 85,
        67, 71, 73, 79, 87, 83, 93, 89, 95, 97, 13] },
];

fn table_check() {
    static CHECKED: OnceLock<()> = OnceLock::new();
    CHECKED.get_or_init(|| {
        let mut next = 1;
        for row in ROWS {
            assert_eq!(row.lo, next, "ranges must partition 1..=50");
            assert!(row.lo <= row.hi);
            next = row.hi + 1;
            assert_eq!(row.seq.len(), row.hi, "row [{},{}] length", row.lo, row.hi);
            let mut seen = std::collections::BTreeSet::new();
            for &l in row.seq {
                assert!(l % 2 == 1 && l < 2 * row.hi as u64);
                assert!(
                    seen.insert(l),
                    "duplicate label {l} in row [{},{}]",
                    row.lo,
                    row.hi
                );
            }
        }
        assert_eq!(next, 51);
    });
}

/// The first n entries of the Table row whose range contains n.
pub fn rn_sequence(n: usize) -> Result<Vec<u64>> {
    table_check();
    if !(1..=50).contains(&n) {
        return Err(Error::OrderOutOfRange(n));
    }
    let row = ROWS
        .iter()
        .find(|r| r.lo <= n && n <= r.hi)
        .expect("ranges partition 1..=50");
    Ok(row.seq[..n].to_vec())
}

/// Builds R_n, applies the table sequence as its labeling, and verifies.
pub fn verify_rn(n: usize) -> Result<VerificationReport> {
    let seq = rn_sequence(n)?;
    let g = build_family(&FamilySpec::MaximalPrimeGraph { n })?;
    let ell = Labeling::new(seq.into_iter().enumerate().map(|(i, l)| (i + 1, l)));
    verify_labeling(&g, &ell)
}

/// Composes a prime labeling with the table row of its order, turning it
/// into an odd prime labeling of the same graph.
pub fn convert_prime_to_odd(
    g: &crate::graph::Graph,
    prime: &std::collections::BTreeMap<usize, usize>,
) -> Result<Labeling> {
    let n = g.order();
    let seq = rn_sequence(n)?;
    for v in 1..=n {
        match prime.get(&v) {
            None => return Err(Error::PartialLabeling(v)),
            Some(&p) if p < 1 || p > n => {
                return Err(Error::InvalidParameters(format!(
                    "prime label {p} of vertex {v} outside 1..={n}"
                )))
            }
            _ => {}
        }
    }
    let mut seen = vec![false; n + 1];
    for (&v, &p) in prime {
        if v >= 1 && v <= n {
            if seen[p] {
                return Err(Error::InvalidParameters(format!(
                    "prime label {p} used more than once"
                )));
            }
            seen[p] = true;
        }
    }
    let mut violations = Vec::new();
    for (u, v) in g.edges() {
        let d = gcd(prime[&u] as u64, prime[&v] as u64);
        if d > 1 {
            violations.push((u, v, d));
        }
    }
    if !violations.is_empty() {
        return Err(Error::NotAPrimeLabeling(violations));
    }
    Ok(Labeling::new((1..=n).map(|v| (v, seq[prime[&v] - 1]))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn sequence_examples() {
        assert_eq!(
            rn_sequence(12).unwrap(),
            vec![1, 3, 5, 9, 7, 15, 11, 13, 17, 21, 19, 23]
        );
        assert_eq!(rn_sequence(4).unwrap(), vec![1, 3, 5, 7]);
        let s = rn_sequence(50).unwrap();
        assert_eq!(s.len(), 50);
        assert_eq!(&s[47..], &[95, 97, 13]);
        assert_eq!(rn_sequence(1).unwrap(), vec![1]);
        assert_eq!(rn_sequence(51), Err(Error::OrderOutOfRange(51)));
        assert_eq!(rn_sequence(0), Err(Error::OrderOutOfRange(0)));
    }

    #[test]
    fn sequences_stay_in_range() {
        for n in 1..=50 {
            let s = rn_sequence(n).unwrap();
            assert_eq!(s.len(), n);
            assert!(s.iter().all(|&l| l < 2 * n as u64), "n={n}");
        }
    }

    #[test]
    fn verify_small_orders() {
        assert!(verify_rn(1).unwrap().is_valid);
        assert!(verify_rn(12).unwrap().is_valid);
    }

    #[test]
    fn convert_path() {
        let g = build_family(&FamilySpec::PathPower { n: 4, k: 1 }).unwrap();
        let prime: BTreeMap<usize, usize> = (1..=4).map(|v| (v, v)).collect();
        let l = convert_prime_to_odd(&g, &prime).unwrap();
        assert_eq!(
            (1..=4).map(|v| l.get(v).unwrap()).collect::<Vec<_>>(),
            vec![1, 3, 5, 7]
        );
    }

    #[test]
    fn convert_cycle() {
        let g = build_family(&FamilySpec::DisjointCycles { lengths: vec![6] }).unwrap();
        let prime: BTreeMap<usize, usize> = (1..=6).map(|v| (v, v)).collect();
        let l = convert_prime_to_odd(&g, &prime).unwrap();
        assert_eq!(
            (1..=6).map(|v| l.get(v).unwrap()).collect::<Vec<_>>(),
            vec![1, 3, 5, 9, 7, 11]
        );
        assert_eq!(crate::graph::gcd(l.get(6).unwrap(), l.get(1).unwrap()), 1);
        assert!(crate::graph::verify_labeling(&g, &l).unwrap().is_valid);
    }

    #[test]
    fn convert_rejects_non_prime_labeling() {
        // C_4 with prime labels 2,4,3,1: the edge (1,2) carries gcd 2
        let g = crate::graph::Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let prime: BTreeMap<usize, usize> = [(1, 2), (2, 4), (3, 3), (4, 1)].into();
        match convert_prime_to_odd(&g, &prime) {
            Err(Error::NotAPrimeLabeling(viol)) => assert_eq!(viol, vec![(1, 2, 2)]),
            other => panic!("expected NotAPrimeLabeling, got {other:?}"),
        }
    }
}
