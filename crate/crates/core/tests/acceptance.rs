//! End-to-end acceptance suite. Each numbered check prints one pass/fail
//! line; the test fails if any check fails.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use oddprime::search::DEFAULT_SEARCH_BUDGET;
use oddprime::{
    build_family, classify, convert_prime_to_odd, exhaustive_search, family_order, gcd,
    independence_number, label_family, lemma2_check, rn_sequence, verify_labeling, verify_rn,
    BoundCheck, FamilySpec, Labeling, SearchVerdict, Verdict,
};

/// The full constructive grid: every family/parameter pair with a proven
/// labeling procedure.
fn soundness_grid() -> Vec<FamilySpec> {
    let mut specs = Vec::new();

    // disjoint unions of up to 3 cycles with lengths 3..=8
    for a in 3..=8usize {
        specs.push(FamilySpec::DisjointCycles { lengths: vec![a] });
        for b in a..=8 {
            specs.push(FamilySpec::DisjointCycles {
                lengths: vec![a, b],
            });
            for c in b..=8 {
                specs.push(FamilySpec::DisjointCycles {
                    lengths: vec![a, b, c],
                });
            }
        }
    }

    for k in 3..=8 {
        for n in 2..=6 {
            specs.push(FamilySpec::Snake { k, n });
        }
        for n in 1..=5 {
            specs.push(FamilySpec::CycleChain { k, n });
        }
        for n in 1..=6 {
            specs.push(FamilySpec::Book { n, k });
        }
    }

    for n in 3..=30 {
        specs.push(FamilySpec::GeneralizedPetersen { n, k: 1 });
    }

    for k in [3, 5, 6, 4, 8, 16] {
        for n in 1..=6 {
            specs.push(FamilySpec::StackedPrism { k, n });
            specs.push(FamilySpec::Grid { m: k, n });
        }
    }

    // all spider leg multisets with total length <= 10
    fn spider_rec(min: usize, budget: usize, legs: &mut Vec<usize>, out: &mut Vec<FamilySpec>) {
        if !legs.is_empty() {
            out.push(FamilySpec::Spider { legs: legs.clone() });
        }
        for l in min..=budget {
            legs.push(l);
            spider_rec(l, budget - l, legs, out);
            legs.pop();
        }
    }
    spider_rec(1, 10, &mut Vec::new(), &mut specs);

    for levels in 1..=6 {
        specs.push(FamilySpec::PerfectBinaryTree { levels });
    }

    // 100 random caterpillars with maximum degree 5 (interior spine
    // vertices carry at most 3 leaves)
    let mut rng = StdRng::seed_from_u64(0x0dd);
    for _ in 0..100 {
        let spine = rng.gen_range(2..=20usize);
        let leaves: Vec<usize> = (0..spine.saturating_sub(2))
            .map(|_| rng.gen_range(0..=3usize))
            .collect();
        specs.push(FamilySpec::Caterpillar { spine, leaves });
    }

    for n in 1..=8 {
        for t in 0..=5 {
            specs.push(FamilySpec::TToedCaterpillar { n, t });
        }
    }

    for n in 2..=8 {
        for k in 3..=6 {
            specs.push(FamilySpec::Firecracker { n, k });
        }
    }

    // squares of paths and cycles; n <= k+1 degenerates to a complete
    // graph and is rejected by the constructor, so both ranges start at 4
    for n in 4..=30 {
        specs.push(FamilySpec::PathPower { n, k: 2 });
        if n % 3 != 2 {
            specs.push(FamilySpec::CyclePower { n, k: 2 });
        }
    }

    // the finitely many higher powers of paths that are odd prime
    for (n, k) in [
        (5, 3),
        (6, 3),
        (7, 3),
        (9, 3),
        (10, 3),
        (13, 3),
        (6, 4),
        (7, 4),
        (7, 5),
    ] {
        specs.push(FamilySpec::PathPower { n, k });
    }

    specs
}

fn check1_soundness_grid() -> Result<(), String> {
    let grid = soundness_grid();
    for spec in &grid {
        let g = build_family(spec).map_err(|e| format!("{spec:?}: build: {e}"))?;
        let ell = label_family(spec).map_err(|e| format!("{spec:?}: label: {e}"))?;
        let report = verify_labeling(&g, &ell).map_err(|e| format!("{spec:?}: verify: {e}"))?;
        if !report.is_valid {
            return Err(format!("{spec:?}: invalid labeling: {report:?}"));
        }
    }
    Ok(())
}

fn check2_rn_table() -> Result<(), String> {
    for n in 1..=50 {
        let report = verify_rn(n).map_err(|e| format!("R_{n}: {e}"))?;
        if !report.is_valid {
            return Err(format!("R_{n}: table labeling invalid: {report:?}"));
        }
    }
    Ok(())
}

fn check3_nonexistence() -> Result<(), String> {
    for (n, k) in [(5, 2), (8, 2), (11, 2), (5, 3), (6, 3), (7, 4)] {
        let g = build_family(&FamilySpec::CyclePower { n, k }).map_err(|e| e.to_string())?;
        let out = exhaustive_search(&g, DEFAULT_SEARCH_BUDGET);
        if out.verdict != SearchVerdict::ExhaustedNoSolution {
            return Err(format!(
                "C_{n}^{k}: expected exhaustion, got {:?}",
                out.verdict
            ));
        }
    }

    let mut failing = vec![];
    for (n, k) in [(8, 3), (11, 3), (12, 3), (14, 3), (8, 4), (8, 5)] {
        failing.push(FamilySpec::PathPower { n, k });
    }
    for k in 3..=5 {
        for n in k + 2..=20 {
            failing.push(FamilySpec::CyclePower { n, k });
        }
    }
    for spec in &failing {
        let g = build_family(spec).map_err(|e| format!("{spec:?}: {e}"))?;
        match lemma2_check(&g).map_err(|e| format!("{spec:?}: {e}"))? {
            BoundCheck::Fail { .. } => {}
            BoundCheck::Pass { beta, bound } => {
                return Err(format!(
                    "{spec:?}: expected Fail, got Pass({beta} >= {bound})"
                ));
            }
        }
    }
    Ok(())
}

fn check4_independence_formulas() -> Result<(), String> {
    for k in 1..=6usize {
        for n in k + 2..=24 {
            let p = build_family(&FamilySpec::PathPower { n, k }).map_err(|e| e.to_string())?;
            let beta = independence_number(&p).map_err(|e| e.to_string())?;
            let expect = (n + k) / (k + 1); // ceil(n / (k+1))
            if beta != expect {
                return Err(format!("P_{n}^{k}: beta {beta} != {expect}"));
            }
            let c = build_family(&FamilySpec::CyclePower { n, k }).map_err(|e| e.to_string())?;
            let beta = independence_number(&c).map_err(|e| e.to_string())?;
            let expect = n / (k + 1);
            if beta != expect {
                return Err(format!("C_{n}^{k}: beta {beta} != {expect}"));
            }
        }
    }
    Ok(())
}

fn check5_oracle_agreement() -> Result<(), String> {
    for spec in soundness_grid() {
        let order = family_order(&spec).map_err(|e| format!("{spec:?}: {e}"))?;
        if order > 12 {
            continue;
        }
        let g = build_family(&spec).map_err(|e| format!("{spec:?}: {e}"))?;
        let out = exhaustive_search(&g, DEFAULT_SEARCH_BUDGET);
        match out.verdict {
            SearchVerdict::Found { labeling } => {
                let r = verify_labeling(&g, &labeling).map_err(|e| e.to_string())?;
                if !r.is_valid {
                    return Err(format!("{spec:?}: search returned invalid labeling"));
                }
            }
            other => return Err(format!("{spec:?}: search gave {other:?}")),
        }
        match classify(&spec).map_err(|e| format!("{spec:?}: {e}"))? {
            Verdict::OddPrime { .. } => {}
            other => return Err(format!("{spec:?}: classify gave {other:?}, search found")),
        }
    }
    Ok(())
}

fn check6_property_suites() -> Result<(), String> {
    // spanning subgraphs inherit validity
    let mut rng = StdRng::seed_from_u64(31);
    for trial in 0..200 {
        let n = rng.gen_range(2..=50usize);
        let g = build_family(&FamilySpec::MaximalPrimeGraph { n }).map_err(|e| e.to_string())?;
        let seq = rn_sequence(n).map_err(|e| e.to_string())?;
        let ell = Labeling::new(seq.into_iter().enumerate().map(|(i, l)| (i + 1, l)));
        if !verify_labeling(&g, &ell)
            .map_err(|e| e.to_string())?
            .is_valid
        {
            return Err(format!("trial {trial}: base labeling of R_{n} invalid"));
        }
        let sub = g.spanning_subgraph(|_, _| rng.gen_bool(0.5));
        if !verify_labeling(&sub, &ell)
            .map_err(|e| e.to_string())?
            .is_valid
        {
            return Err(format!("trial {trial}: subgraph of R_{n} lost validity"));
        }
    }

    // odd numbers are coprime to their power-of-two shifts
    for a in (1..10_000u64).step_by(2) {
        for k in 1..=12 {
            if gcd(a, a + (1 << k)) != 1 {
                return Err(format!("gcd({a}, {a} + 2^{k}) != 1"));
            }
        }
    }

    // reordering a consecutive odd run: permutation, ends at the target,
    // and every successive difference is a power of two
    for m in (1..200u64).step_by(2) {
        for count in 1..=64usize {
            for idx in 0..count as u64 {
                let target = m + 2 * idx;
                let out = oddprime::coprime::reorder_power_of_two(m, count, target)
                    .map_err(|e| format!("reorder({m},{count},{target}): {e}"))?;
                let mut sorted = out.clone();
                sorted.sort_unstable();
                let expect: Vec<u64> = (0..count as u64).map(|i| m + 2 * i).collect();
                if sorted != expect {
                    return Err(format!("reorder({m},{count},{target}): not a permutation"));
                }
                if *out.last().unwrap() != target {
                    return Err(format!("reorder({m},{count},{target}): wrong tail"));
                }
                for w in out.windows(2) {
                    let d = w[0].abs_diff(w[1]);
                    if !d.is_power_of_two() {
                        return Err(format!(
                            "reorder({m},{count},{target}): gap {d} between {} and {}",
                            w[0], w[1]
                        ));
                    }
                }
            }
        }
    }

    // bertrand_prime returns the largest prime strictly inside (t, 2t)
    for t in 2..=10_000u64 {
        let p = oddprime::coprime::bertrand_prime(t);
        if !(t < p && p < 2 * t) || !oddprime::coprime::is_prime(p) {
            return Err(format!("bertrand_prime({t}) = {p} malformed"));
        }
        if ((p + 1)..2 * t).any(oddprime::coprime::is_prime) {
            return Err(format!("bertrand_prime({t}) = {p} is not the largest"));
        }
    }
    Ok(())
}

fn check7_conversion() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(47);
    for trial in 0..100 {
        let n = rng.gen_range(1..=50usize);
        let g = build_family(&FamilySpec::MaximalPrimeGraph { n }).map_err(|e| e.to_string())?;
        let sub = g.spanning_subgraph(|_, _| rng.gen_bool(0.6));
        let prime: std::collections::BTreeMap<usize, usize> = (1..=n).map(|v| (v, v)).collect();
        let ell = convert_prime_to_odd(&sub, &prime)
            .map_err(|e| format!("trial {trial} (n={n}): {e}"))?;
        if !verify_labeling(&sub, &ell)
            .map_err(|e| e.to_string())?
            .is_valid
        {
            return Err(format!("trial {trial} (n={n}): converted labeling invalid"));
        }
    }
    Ok(())
}

type Check = fn() -> Result<(), String>;

#[test]
fn acceptance() {
    let checks: Vec<(&str, Check)> = vec![
        ("1 constructive soundness grid", check1_soundness_grid),
        ("2 table labelings of R_n, n = 1..50", check2_rn_table),
        ("3 non-existence certificates", check3_nonexistence),
        (
            "4 closed-form independence numbers",
            check4_independence_formulas,
        ),
        ("5 oracle agreement at order <= 12", check5_oracle_agreement),
        ("6 arithmetic property suites", check6_property_suites),
        ("7 prime-to-odd conversion soundness", check7_conversion),
    ];
    let mut failures = Vec::new();
    for (name, check) in checks {
        match check() {
            Ok(()) => println!("criterion {name}: PASS"),
            Err(msg) => {
                println!("criterion {name}: FAIL — {msg}");
                failures.push(format!("{name}: {msg}"));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "failed criteria:\n{}",
        failures.join("\n")
    );
}
