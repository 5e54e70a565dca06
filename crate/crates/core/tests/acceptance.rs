//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::{p, partition_counts, partitions_of, partitions_up_to};
use nlrep::detection::{
    validate_witness, verify_even_theorem, verify_odd_theorem, witness_all_even, witness_distinct_odd,
    witness_hook, witness_rectangle,
};
use nlrep::lr::{lr_coefficient, Coefficient, LrCache};
use nlrep::newell_littlewood::{nl_coefficient, nl_coefficient_unreduced, tensor_decompose, Family, GroupSpec};
use nlrep::oracle::lr_via_polynomials;
use nlrep::partitions::{classify, ShapeFamily};
use nlrep::tableaux::{SkewShape, SkewTableau, Word};
use nlrep::Partition;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

struct Golden {
    name: &'static str,
    outer: &'static [u32],
    inner: &'static [u32],
    rows: &'static [&'static [u32]],
    word: &'static [u32],
}

const GOLDEN: &[Golden] = &[
    Golden { name: "first LR tableau", outer: &[6, 4, 4, 2], inner: &[3, 2, 1], rows: &[&[1, 1, 1], &[1, 2], &[2, 2, 3], &[3, 4]], word: &[1, 1, 1, 2, 1, 3, 2, 2, 4, 3] },
    Golden { name: "all-even T", outer: &[6, 4, 4, 2, 2], inner: &[3, 2, 2, 1, 1], rows: &[&[1, 1, 1], &[2, 2], &[3, 3], &[4], &[5]], word: &[1, 1, 1, 2, 2, 3, 3, 4, 5] },
    Golden { name: "distinct-odd T1", outer: &[7, 5, 3, 1], inner: &[4, 3, 1], rows: &[&[1, 1, 1], &[2, 2], &[3, 3], &[4]], word: &[1, 1, 1, 2, 2, 3, 3, 4] },
    Golden { name: "distinct-odd T2", outer: &[7, 5, 3, 1], inner: &[3, 2, 2, 1], rows: &[&[1, 1, 1, 1], &[2, 2, 2], &[3], &[]], word: &[1, 1, 1, 1, 2, 2, 2, 3] },
    Golden { name: "distinct-odd T3", outer: &[7, 5, 3, 1], inner: &[4, 3, 1], rows: &[&[1, 1, 1], &[1, 2], &[2, 2], &[3]], word: &[1, 1, 1, 2, 1, 2, 2, 3] },
    Golden { name: "odd-arm hook T", outer: &[6, 1, 1, 1, 1], inner: &[3, 1, 1], rows: &[&[1, 1, 1], &[], &[], &[2], &[3]], word: &[1, 1, 1, 2, 3] },
    Golden { name: "even-arm hook T1", outer: &[5, 1, 1, 1], inner: &[3, 1], rows: &[&[1, 1], &[], &[2], &[3]], word: &[1, 1, 2, 3] },
    Golden { name: "even-arm hook T2", outer: &[5, 1, 1, 1], inner: &[2, 1, 1], rows: &[&[1, 1, 1], &[], &[], &[2]], word: &[1, 1, 1, 2] },
    Golden { name: "even-arm hook T3", outer: &[5, 1, 1, 1], inner: &[3, 1], rows: &[&[1, 1], &[], &[1], &[2]], word: &[1, 1, 1, 2] },
];

fn golden_tableau(g: &Golden) -> SkewTableau {
    let shape = SkewShape::new(p(g.outer), p(g.inner)).unwrap();
    SkewTableau::new(shape, g.rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn ac1_golden_tableaux() -> Outcome {
    let start = Instant::now();
    let cache = LrCache::new();
    for g in GOLDEN {
        let t = golden_tableau(g);
        ensure(t.is_lr_tableau(), || format!("{} is not an LR tableau", g.name))?;
        ensure(t.word() == Word(g.word.to_vec()), || format!("{} word {} != {:?}", g.name, t.word(), g.word))?;
    }
    // the witness builders reproduce the same fillings
    let built: Vec<SkewTableau> = [
        witness_all_even(&p(&[6, 4, 4, 2, 2])).unwrap().certificates[0].tableau.clone(),
    ]
    .into_iter()
    .chain(witness_distinct_odd(&p(&[7, 5, 3, 1])).unwrap().certificates.iter().map(|c| c.tableau.clone()))
    .chain([witness_hook(&p(&[6, 1, 1, 1, 1]), &cache).unwrap().certificates[0].tableau.clone()])
    .chain(witness_hook(&p(&[5, 1, 1, 1]), &cache).unwrap().certificates.iter().map(|c| c.tableau.clone()))
    .collect();
    for (g, t) in GOLDEN[1..].iter().zip(&built) {
        ensure(*t == golden_tableau(g), || format!("builder output differs from {}:\n{t}", g.name))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{} tableaux, words exact, {} reproduced by builders, {:.2?}", GOLDEN.len(), built.len(), start.elapsed()))
}

fn ac2_odd_sweep() -> Outcome {
    let start = Instant::now();
    let counts = partition_counts(11);
    let expected: Vec<u64> = (1..=11).step_by(2).map(|n| counts[n]).collect();
    ensure(expected == [1, 3, 7, 15, 30, 56], || format!("p(n) table {expected:?}"))?;
    let cache = LrCache::new();
    let report = verify_odd_theorem(11, &cache, Some(1)).map_err(|e| e.to_string())?;
    let checked: Vec<u64> = report.checked.values().map(|&c| c as u64).collect();
    ensure(checked == expected, || format!("checked per size {checked:?}, expected {expected:?}"))?;
    ensure(report.total_checked() == 112, || format!("checked {}", report.total_checked()))?;
    ensure(report.passed(), || format!("counterexamples {:?}", report.counterexamples))?;
    ensure(report.records.iter().all(|r| r.n.is_zero()), || "nonzero N".into())?;
    within(start.elapsed(), Duration::from_secs(300))?;
    Ok(format!("112 partitions of odd size <= 11, all N = 0 by the unreduced sum, {:.2?}", start.elapsed()))
}

fn ac3_even_sweep() -> Outcome {
    let start = Instant::now();
    let cache = LrCache::new();
    let report = verify_even_theorem(12, &cache, Some(4)).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("failures {:?}", report.failures))?;
    for rec in &report.records {
        let v = &rec.verdict;
        if v.matched_families.is_empty() {
            continue;
        }
        ensure(v.n_lambda_lambda_lambda.value() >= 1, || format!("N = 0 for {}", v.lambda))?;
        let w = v.witness.as_ref().ok_or_else(|| format!("no witness for {}", v.lambda))?;
        validate_witness(&v.lambda, w, &cache).map_err(|e| e.to_string())?;
    }
    within(start.elapsed(), Duration::from_secs(900))?;
    Ok(format!(
        "{} classified partitions of even size 2..=12, tally {:?}, certificate paths {:?}, {} unclassified, {:.2?}",
        report.classified,
        report.family_tally,
        report.path_tally,
        report.unclassified.len(),
        start.elapsed()
    ))
}

fn random_partition(rng: &mut ChaCha8Rng, n: u32) -> Partition {
    let all = partitions_of(n);
    all[rng.gen_range(0..all.len())].clone()
}

fn ac4_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut exhaustive = 0;
    for a in partitions_up_to(4) {
        for b in partitions_up_to(4) {
            for nu in partitions_of(a.size() + b.size()) {
                let lhs = lr_coefficient(&a, &b, &nu).map_err(|e| e.to_string())?;
                let rhs = lr_via_polynomials(&a, &b, &nu).map_err(|e| e.to_string())?;
                ensure(lhs == rhs, || format!("c^{nu}_({a},{b}): tableaux {lhs}, polynomials {rhs}"))?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1e77);
    let mut nonzero = 0;
    for _ in 0..200 {
        let n = rng.gen_range(0..=12u32);
        let k = rng.gen_range(0..=n);
        let a = random_partition(&mut rng, k);
        let b = random_partition(&mut rng, n - k);
        // half the time pick nu from the product's support so the check is not vacuous
        let nu = if rng.gen_bool(0.5) {
            let support: Vec<Partition> = partitions_of(n)
                .into_iter()
                .filter(|nu| !lr_coefficient(&a, &b, nu).unwrap().is_zero())
                .collect();
            support[rng.gen_range(0..support.len())].clone()
        } else {
            random_partition(&mut rng, n)
        };
        let lhs = lr_coefficient(&a, &b, &nu).map_err(|e| e.to_string())?;
        let rhs = lr_via_polynomials(&a, &b, &nu).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("c^{nu}_({a},{b}): tableaux {lhs}, polynomials {rhs}"))?;
        nonzero += usize::from(!lhs.is_zero());
    }
    within(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{exhaustive} exhaustive triples + 200 seeded random ({nonzero} nonzero), {:.2?}", start.elapsed()))
}

fn ac5_nl_structure() -> Outcome {
    let start = Instant::now();
    let cache = LrCache::new();
    let small = partitions_up_to(5);
    let mut checked = 0;
    for a in &small {
        for b in &small {
            for c in &small {
                let base = nl_coefficient(a, b, c, &cache).map_err(|e| e.to_string())?;
                for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                    let v = nl_coefficient(x, y, z, &cache).map_err(|e| e.to_string())?;
                    ensure(v == base, || format!("N not symmetric at ({a},{b},{c})"))?;
                }
                if (a.size() + b.size() + c.size()) % 2 == 1 {
                    let full = nl_coefficient_unreduced(a, b, c, &cache).map_err(|e| e.to_string())?;
                    ensure(full.is_zero(), || format!("odd total but N = {full} at ({a},{b},{c})"))?;
                }
                let unit = nl_coefficient(a, &Partition::empty(), c, &cache).map_err(|e| e.to_string())?;
                ensure(unit == Coefficient(u64::from(a == c)), || format!("unit law fails at ({a},{c})"))?;
                checked += 1;
            }
        }
    }
    for n in 0..=8 {
        for nu in partitions_of(n) {
            for k in 0..=n {
                for a in partitions_of(k) {
                    for b in partitions_of(n - k) {
                        let nl = nl_coefficient(&a, &b, &nu, &cache).map_err(|e| e.to_string())?;
                        let lr = lr_coefficient(&a, &b, &nu).map_err(|e| e.to_string())?;
                        ensure(nl == lr, || format!("top degree N != c at ({a},{b},{nu})"))?;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} triples of size <= 5 (S3, parity, unit) + top degree to 8, {:.2?}", start.elapsed()))
}

fn ac6_family_independence() -> Outcome {
    let start = Instant::now();
    let cache = LrCache::new();
    let groups = [Family::B, Family::C, Family::D].map(|f| GroupSpec::new(f, 6).unwrap());
    let mut pairs = 0;
    let mut with_inadmissible = 0;
    for a in partitions_up_to(3) {
        for b in partitions_up_to(3) {
            let [rb, rc, rd] = groups.map(|g| tensor_decompose(&a, &b, g, &cache).unwrap());
            ensure(rb.terms == rc.terms, || format!("B and C differ on {a} x {b}"))?;
            let mut d_all = rd.terms.clone();
            d_all.extend(rd.inadmissible.iter().cloned());
            d_all.sort_by(|x, y| y.0.cmp(&x.0));
            ensure(d_all == rb.terms, || format!("D multiplicities differ on {a} x {b}"))?;
            if rd.inadmissible.is_empty() {
                ensure(rd.terms == rb.terms, || format!("D terms differ on {a} x {b}"))?;
            } else {
                with_inadmissible += 1;
            }
            pairs += 1;
        }
    }
    let one = p(&[1]);
    let sp4 = tensor_decompose(&one, &one, GroupSpec::new(Family::C, 2).unwrap(), &cache).unwrap();
    let expect = vec![(p(&[2]), Coefficient(1)), (p(&[1, 1]), Coefficient(1)), (Partition::empty(), Coefficient(1))];
    ensure(sp4.terms == expect, || format!("Sp(4) standard square {:?}", sp4.terms))?;
    Ok(format!(
        "{pairs} pairs agree across B6/C6/D6 ({with_inadmissible} with SO(12) terms of full length set aside), Sp(4) (1)x(1) exact, {:.2?}",
        start.elapsed()
    ))
}

fn ac7_conjugation() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 0..=8 {
        for lam in partitions_of(n) {
            for k in 0..=n {
                for mu in partitions_of(k) {
                    for nu in partitions_of(n - k) {
                        let c = lr_coefficient(&mu, &nu, &lam).unwrap();
                        let cc = lr_coefficient(&mu.conjugate(), &nu.conjugate(), &lam.conjugate()).unwrap();
                        ensure(c == cc, || format!("conjugation fails at {lam} / ({mu},{nu})"))?;
                        checked += 1;
                    }
                }
            }
        }
    }
    let cache = LrCache::new();
    let mut rects = 0;
    for lam in partitions_up_to(12) {
        let rect = classify(&lam).iter().any(|f| matches!(f, ShapeFamily::Rectangle { .. }));
        if !rect || lam.size() % 2 == 1 {
            continue;
        }
        let w = witness_rectangle(&lam).map_err(|e| e.to_string())?;
        validate_witness(&lam, &w, &cache).map_err(|e| e.to_string())?;
        rects += 1;
    }
    Ok(format!("{checked} LR triples with |lambda| <= 8, {rects} even rectangles validated, {:.2?}", start.elapsed()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("AC1 golden tableaux", ac1_golden_tableaux),
        ("AC2 odd-size vanishing sweep", ac2_odd_sweep),
        ("AC3 even-size family sweep", ac3_even_sweep),
        ("AC4 LR oracle equivalence", ac4_oracle_equivalence),
        ("AC5 Newell-Littlewood structure", ac5_nl_structure),
        ("AC6 family independence", ac6_family_independence),
        ("AC7 conjugation identity", ac7_conjugation),
    ];
    let mut results = BTreeMap::new();
    for (name, run) in criteria {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match &outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => println!("FAIL {name}: {why}"),
        }
        results.insert(name, outcome.is_ok());
    }
    let failed = results.values().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
