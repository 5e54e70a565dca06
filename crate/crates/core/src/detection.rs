//! Cubic detection: `S_[lambda](G)` is detected by the triple tensor power
//! exactly when `N^lambda_{lambda lambda} > 0`.
//!
//! For the four even-size shape families an explicit witness triple
//! `(alpha, beta, gamma)` is built together with three LR tableaux proving
//! `c^lambda_{alpha beta}`, `c^lambda_{beta gamma}` and `c^lambda_{alpha gamma}`
//! are positive. Each planned filling is validated; when a filling (or the
//! triple itself) is degenerate the builder falls back to search and
//! records that it did.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lr::{Coefficient, LrCache};
use crate::newell_littlewood::{nl_coefficient, nl_coefficient_unreduced};
use crate::partitions::{classify, enumerate_partitions, partitions_inside, Partition, ShapeFamily};
use crate::tableaux::{fill_rows_in_order, first_lr_tableau, SkewShape, SkewTableau};

pub const MAX_ODD_SWEEP: u32 = 13;
pub const MAX_EVEN_SWEEP: u32 = 12;

/// How a certificate tableau was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificatePath {
    /// The explicit row-by-row filling, validated.
    Constructed,
    /// Triple obtained by conjugating an all-even witness; tableau found by
    /// enumeration on the un-conjugated shape.
    Conjugated,
    /// Found by search after the planned filling or triple failed.
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub inner: Partition,
    pub content: Partition,
    #[serde(serialize_with = "tableau_as_json")]
    pub tableau: SkewTableau,
    pub path: CertificatePath,
}

fn tableau_as_json<S: serde::Serializer>(t: &SkewTableau, s: S) -> std::result::Result<S::Ok, S::Error> {
    t.to_json().serialize(s)
}

/// `(alpha, beta, gamma)` with certificates, in the order
/// `lambda/alpha` content `beta`, `lambda/beta` content `gamma`,
/// `lambda/alpha` content `gamma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessTriple {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub family: Option<ShapeFamily>,
    pub certificates: [Certificate; 3],
}

impl WitnessTriple {
    /// `"constructed"` unless some certificate needed the fallback search.
    pub fn path(&self) -> &'static str {
        if self.certificates.iter().any(|c| c.path == CertificatePath::Fallback) {
            "fallback"
        } else {
            "constructed"
        }
    }
}

fn certify(
    lambda: &Partition,
    inner: &Partition,
    content: &Partition,
    planned: Option<SkewTableau>,
    planned_path: CertificatePath,
) -> Result<Certificate> {
    let shape = SkewShape::new(lambda.clone(), inner.clone())?;
    if let Some(t) = planned {
        if t.is_lr_tableau() && t.content() == content.parts() {
            return Ok(Certificate {
                inner: inner.clone(),
                content: content.clone(),
                tableau: t,
                path: planned_path,
            });
        }
    }
    let path = match planned_path {
        CertificatePath::Conjugated => CertificatePath::Conjugated,
        _ => CertificatePath::Fallback,
    };
    let tableau = first_lr_tableau(&shape, content).ok_or_else(|| {
        Error::Invariant(format!(
            "no LR tableau of shape {shape} and content {content}"
        ))
    })?;
    Ok(Certificate { inner: inner.clone(), content: content.clone(), tableau, path })
}

/// Certificates for a triple, using the row-by-row filling for each.
fn certify_by_rows(
    lambda: &Partition,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Result<[Certificate; 3]> {
    let planned = |inner: &Partition, content: &Partition| -> Result<Certificate> {
        let shape = SkewShape::new(lambda.clone(), inner.clone())?;
        let t = fill_rows_in_order(&shape, content).ok();
        certify(lambda, inner, content, t, CertificatePath::Constructed)
    };
    Ok([planned(alpha, beta)?, planned(beta, gamma)?, planned(alpha, gamma)?])
}

fn halve(parts: impl IntoIterator<Item = u32>) -> Result<Partition> {
    Partition::new(parts.into_iter().collect())
}

fn check_family(lambda: &Partition, pred: impl Fn(&ShapeFamily) -> bool, what: &str) -> Result<ShapeFamily> {
    classify(lambda)
        .into_iter()
        .find(|f| pred(f))
        .ok_or_else(|| Error::Precondition(format!("{lambda} is not {what}")))
}

/// All parts even: `alpha = beta = gamma = lambda / 2`.
pub fn witness_all_even(lambda: &Partition) -> Result<WitnessTriple> {
    let family = check_family(lambda, |f| *f == ShapeFamily::AllEven, "a partition with all parts even")?;
    let half = halve(lambda.parts().iter().map(|p| p / 2))?;
    let certificates = certify_by_rows(lambda, &half, &half, &half)?;
    Ok(WitnessTriple {
        alpha: half.clone(),
        beta: half.clone(),
        gamma: half,
        family: Some(family),
        certificates,
    })
}

/// Distinct odd parts, even length `2k`: `alpha = gamma` takes `(p+1)/2`
/// from the first `k` rows and `(p-1)/2` from the rest, `beta` the
/// complement.
pub fn witness_distinct_odd(lambda: &Partition) -> Result<WitnessTriple> {
    let family = check_family(
        lambda,
        |f| *f == ShapeFamily::DistinctOddEvenLength,
        "a partition of even length with distinct odd parts",
    )?;
    let k = lambda.length() / 2;
    let parts = lambda.parts();
    let alpha = halve(
        parts.iter().enumerate().map(|(i, &p)| if i < k { (p + 1) / 2 } else { (p - 1) / 2 }),
    )?;
    let beta = halve(
        parts.iter().enumerate().map(|(i, &p)| if i < k { (p - 1) / 2 } else { (p + 1) / 2 }),
    )?;
    let certificates = certify_by_rows(lambda, &alpha, &beta, &alpha)?;
    Ok(WitnessTriple {
        alpha: alpha.clone(),
        beta,
        gamma: alpha,
        family: Some(family),
        certificates,
    })
}

fn hook(arm: u32, leg: u32) -> Result<Partition> {
    let mut parts = vec![1 + arm];
    parts.extend(std::iter::repeat(1).take(leg as usize));
    Partition::new(parts)
}

/// Hooks `(1+a, 1^b)` of even size.
///
/// `a` odd: `alpha = beta = gamma = (1+(a-1)/2, 1^(b/2))`.
/// `a` even: `alpha = gamma = (1+a/2, 1^((b-1)/2))`,
/// `beta = (a/2, 1^((b+1)/2))`. With `a = 0` that `beta` is not a
/// partition and the triple is found by search instead.
pub fn witness_hook(lambda: &Partition, cache: &LrCache) -> Result<WitnessTriple> {
    let family = check_family(lambda, |f| matches!(f, ShapeFamily::Hook { .. }), "a hook")?;
    let ShapeFamily::Hook { arm, leg } = family else { unreachable!() };
    if lambda.size() % 2 != 0 {
        return Err(Error::Precondition(format!("hook {lambda} has odd size")));
    }
    let (alpha, beta, gamma) = if arm % 2 == 1 {
        let a = hook((arm - 1) / 2, leg / 2)?;
        (a.clone(), a.clone(), a)
    } else if arm >= 2 {
        let a = hook(arm / 2, (leg - 1) / 2)?;
        let b = hook(arm / 2 - 1, (leg + 1) / 2)?;
        (a.clone(), b, a)
    } else {
        let mut w = search_witness(lambda, cache)?
            .ok_or_else(|| Error::Invariant(format!("no witness triple for hook {lambda}")))?;
        w.family = Some(family);
        return Ok(w);
    };
    let certificates = certify_by_rows(lambda, &alpha, &beta, &gamma)?;
    Ok(WitnessTriple { alpha, beta, gamma, family: Some(family), certificates })
}

/// Rectangles `m x k` of even size. Even `k` is the all-even case; otherwise
/// `m` is even, the all-even witness of the conjugate is conjugated back,
/// and certificates are found by enumeration on the original shapes.
pub fn witness_rectangle(lambda: &Partition) -> Result<WitnessTriple> {
    let family = check_family(lambda, |f| matches!(f, ShapeFamily::Rectangle { .. }), "a rectangle")?;
    let ShapeFamily::Rectangle { rows, cols } = family else { unreachable!() };
    if (rows * cols) % 2 != 0 {
        return Err(Error::Precondition(format!("rectangle {lambda} has odd size")));
    }
    if cols % 2 == 0 {
        let mut w = witness_all_even(lambda)?;
        w.family = Some(family);
        return Ok(w);
    }
    let transposed = witness_all_even(&lambda.conjugate())?;
    let alpha = transposed.alpha.conjugate();
    let beta = transposed.beta.conjugate();
    let gamma = transposed.gamma.conjugate();
    let conj = CertificatePath::Conjugated;
    let certificates = [
        certify(lambda, &alpha, &beta, None, conj)?,
        certify(lambda, &beta, &gamma, None, conj)?,
        certify(lambda, &alpha, &gamma, None, conj)?,
    ];
    Ok(WitnessTriple { alpha, beta, gamma, family: Some(family), certificates })
}

/// First triple (reverse-lex in `alpha`, then `beta`, then `gamma`) with all
/// three coefficients positive; `None` when `N^lambda_{lambda lambda} = 0`.
pub fn search_witness(lambda: &Partition, cache: &LrCache) -> Result<Option<WitnessTriple>> {
    if lambda.size() % 2 != 0 {
        return Ok(None);
    }
    let half = lambda.size() / 2;
    for alpha in partitions_inside(lambda, half) {
        for (beta, _) in cache.support(lambda, &alpha)? {
            for (gamma, _) in cache.support(lambda, &beta)? {
                if cache.get(&alpha, &gamma, lambda)?.is_zero() {
                    continue;
                }
                let fb = CertificatePath::Fallback;
                let certificates = [
                    certify(lambda, &alpha, &beta, None, fb)?,
                    certify(lambda, &beta, &gamma, None, fb)?,
                    certify(lambda, &alpha, &gamma, None, fb)?,
                ];
                return Ok(Some(WitnessTriple { alpha, beta, gamma, family: None, certificates }));
            }
        }
    }
    Ok(None)
}

/// Witness from the highest-priority family `lambda` belongs to, if any.
pub fn family_witness(lambda: &Partition, cache: &LrCache) -> Result<Option<WitnessTriple>> {
    if lambda.size() % 2 != 0 {
        return Ok(None);
    }
    let Some(family) = classify(lambda).into_iter().next() else {
        return Ok(None);
    };
    let w = match family {
        ShapeFamily::AllEven => witness_all_even(lambda)?,
        ShapeFamily::DistinctOddEvenLength => witness_distinct_odd(lambda)?,
        ShapeFamily::Hook { .. } => witness_hook(lambda, cache)?,
        ShapeFamily::Rectangle { .. } => witness_rectangle(lambda)?,
    };
    Ok(Some(w))
}

/// Checks sizes, shapes, contents, the LR conditions and that each
/// certificate's coefficient is positive.
pub fn validate_witness(lambda: &Partition, w: &WitnessTriple, cache: &LrCache) -> Result<()> {
    let fail = |msg: String| Err(Error::Invariant(format!("witness for {lambda}: {msg}")));
    let half = lambda.size() / 2;
    if lambda.size() % 2 != 0 || [&w.alpha, &w.beta, &w.gamma].iter().any(|p| p.size() != half) {
        return fail("triple sizes are not |lambda|/2".into());
    }
    let expected = [(&w.alpha, &w.beta), (&w.beta, &w.gamma), (&w.alpha, &w.gamma)];
    for (cert, (inner, content)) in w.certificates.iter().zip(expected) {
        let t = &cert.tableau;
        if t.shape().outer() != lambda || t.shape().inner() != inner || &cert.inner != inner {
            return fail(format!("certificate shape {} is not {lambda}/{inner}", t.shape()));
        }
        if t.content() != content.parts() || &cert.content != content {
            return fail(format!("certificate content {:?} is not {content}", t.content()));
        }
        if !t.is_lr_tableau() {
            return fail(format!("certificate\n{t}is not an LR tableau"));
        }
        if cache.get(inner, content, lambda)?.is_zero() {
            return fail(format!("c^{lambda}_({inner},{content}) is zero"));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectionVerdict {
    pub lambda: Partition,
    pub n_lambda_lambda_lambda: Coefficient,
    pub detected: bool,
    pub matched_families: BTreeSet<ShapeFamily>,
    pub witness: Option<WitnessTriple>,
}

impl DetectionVerdict {
    /// One JSON report object.
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "lambda": self.lambda,
            "size": self.lambda.size(),
            "families": self.matched_families,
            "N": self.n_lambda_lambda_lambda,
            "detected": self.detected,
        });
        if let Some(w) = &self.witness {
            obj["witness"] = serde_json::to_value(w).expect("witness serializes");
            obj["path"] = w.path().into();
        }
        obj
    }
}

/// Decides detection by computing `N^lambda_{lambda lambda}` and attaches a
/// family witness when one applies.
pub fn detects(lambda: &Partition, cache: &LrCache) -> Result<DetectionVerdict> {
    let n = nl_coefficient(lambda, lambda, lambda, cache)?;
    let witness = family_witness(lambda, cache)?;
    Ok(DetectionVerdict {
        lambda: lambda.clone(),
        n_lambda_lambda_lambda: n,
        detected: !n.is_zero(),
        matched_families: classify(lambda),
        witness,
    })
}

fn run_parallel<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn sweep_partitions(sizes: impl Iterator<Item = u32>) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for s in sizes {
        out.extend(enumerate_partitions(s, None, None)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct OddRecord {
    pub lambda: Partition,
    pub size: u32,
    pub families: BTreeSet<ShapeFamily>,
    #[serde(rename = "N")]
    pub n: Coefficient,
    pub detected: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OddReport {
    pub max_size: u32,
    /// Partitions checked per odd size.
    pub checked: BTreeMap<u32, usize>,
    pub records: Vec<OddRecord>,
    pub counterexamples: Vec<Partition>,
}

impl OddReport {
    pub fn total_checked(&self) -> usize {
        self.checked.values().sum()
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// For every odd-size `lambda` up to `max_size`, evaluates
/// `N^lambda_{lambda lambda}` by the unreduced sum and expects zero.
pub fn verify_odd_theorem(max_size: u32, cache: &LrCache, jobs: Option<usize>) -> Result<OddReport> {
    if max_size > MAX_ODD_SWEEP {
        return Err(Error::BoundExceeded(format!(
            "odd sweep size {max_size} exceeds {MAX_ODD_SWEEP}"
        )));
    }
    let lambdas = sweep_partitions((1..=max_size).step_by(2))?;
    let values: Vec<Result<Coefficient>> = run_parallel(jobs, || {
        lambdas
            .par_iter()
            .map(|l| nl_coefficient_unreduced(l, l, l, cache))
            .collect()
    })?;
    let mut report = OddReport {
        max_size,
        checked: BTreeMap::new(),
        records: Vec::new(),
        counterexamples: Vec::new(),
    };
    for (lambda, n) in lambdas.into_iter().zip(values) {
        let n = n?;
        *report.checked.entry(lambda.size()).or_default() += 1;
        if !n.is_zero() {
            report.counterexamples.push(lambda.clone());
        }
        report.records.push(OddRecord {
            size: lambda.size(),
            families: classify(&lambda),
            n,
            detected: !n.is_zero(),
            lambda,
        });
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct EvenRecord {
    pub verdict: DetectionVerdict,
    /// Problem found for a classified partition, if any.
    pub failure: Option<String>,
}

impl EvenRecord {
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = self.verdict.to_json();
        if let Some(f) = &self.failure {
            obj["failure"] = f.clone().into();
        }
        obj
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EvenReport {
    pub max_size: u32,
    /// Classified partitions per family letter (a partition may count twice).
    pub family_tally: BTreeMap<char, usize>,
    /// Certificates per path over all witnesses built.
    pub path_tally: BTreeMap<String, usize>,
    pub classified: usize,
    /// Even partitions in no family, with their `N`.
    pub unclassified: Vec<(Partition, Coefficient)>,
    pub failures: Vec<(Partition, String)>,
    #[serde(skip)]
    pub records: Vec<EvenRecord>,
}

impl EvenReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_even(lambda: &Partition, cache: &LrCache) -> Result<EvenRecord> {
    let families = classify(lambda);
    let n = nl_coefficient(lambda, lambda, lambda, cache)?;
    let mut failure = None;
    let witness = if families.is_empty() {
        None
    } else {
        match family_witness(lambda, cache) {
            Ok(Some(w)) => {
                if let Err(e) = validate_witness(lambda, &w, cache) {
                    failure = Some(e.to_string());
                }
                Some(w)
            }
            Ok(None) => {
                failure = Some("no witness built".into());
                None
            }
            Err(Error::Overflow) => return Err(Error::Overflow),
            Err(e) => {
                failure = Some(e.to_string());
                None
            }
        }
    };
    if !families.is_empty() && n.is_zero() {
        failure.get_or_insert_with(|| "N is zero for a classified partition".into());
    }
    Ok(EvenRecord {
        verdict: DetectionVerdict {
            lambda: lambda.clone(),
            n_lambda_lambda_lambda: n,
            detected: !n.is_zero(),
            matched_families: families,
            witness,
        },
        failure,
    })
}

/// For every even-size `lambda` (2 through `max_size`) in one of the four
/// families, builds and validates the family witness and checks
/// `N^lambda_{lambda lambda} >= 1`. Unclassified partitions are recorded
/// with their `N` only.
pub fn verify_even_theorem(max_size: u32, cache: &LrCache, jobs: Option<usize>) -> Result<EvenReport> {
    if max_size > MAX_EVEN_SWEEP {
        return Err(Error::BoundExceeded(format!(
            "even sweep size {max_size} exceeds {MAX_EVEN_SWEEP}"
        )));
    }
    let lambdas = sweep_partitions((2..=max_size).step_by(2))?;
    let records: Vec<Result<EvenRecord>> =
        run_parallel(jobs, || lambdas.par_iter().map(|l| check_even(l, cache)).collect())?;
    let mut report = EvenReport {
        max_size,
        family_tally: BTreeMap::new(),
        path_tally: BTreeMap::new(),
        classified: 0,
        unclassified: Vec::new(),
        failures: Vec::new(),
        records: Vec::new(),
    };
    for record in records {
        let record = record?;
        let v = &record.verdict;
        if v.matched_families.is_empty() {
            report.unclassified.push((v.lambda.clone(), v.n_lambda_lambda_lambda));
        } else {
            report.classified += 1;
            for f in &v.matched_families {
                *report.family_tally.entry(f.letter()).or_default() += 1;
            }
        }
        if let Some(w) = &v.witness {
            for c in &w.certificates {
                let key = serde_json::to_value(c.path).unwrap().as_str().unwrap().to_string();
                *report.path_tally.entry(key).or_default() += 1;
            }
        }
        if let Some(f) = &record.failure {
            report.failures.push((v.lambda.clone(), f.clone()));
        }
        report.records.push(record);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::Word;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn words(w: &WitnessTriple) -> Vec<Vec<u32>> {
        w.certificates.iter().map(|c| c.tableau.word().0).collect()
    }

    #[test]
    fn all_even_example() {
        let w = witness_all_even(&p(&[6, 4, 4, 2, 2])).unwrap();
        assert_eq!(w.alpha, p(&[3, 2, 2, 1, 1]));
        assert_eq!(w.beta, w.alpha);
        assert_eq!(w.gamma, w.alpha);
        assert_eq!(w.certificates[0].tableau.word(), Word(vec![1, 1, 1, 2, 2, 3, 3, 4, 5]));
        assert_eq!(w.path(), "constructed");

        let e = witness_all_even(&Partition::empty()).unwrap();
        assert!(e.alpha.is_empty());
        assert!(e.certificates.iter().all(|c| c.tableau.word().0.is_empty()));

        let w = witness_all_even(&p(&[2, 2])).unwrap();
        assert_eq!(w.alpha, p(&[1, 1]));
        validate_witness(&p(&[2, 2]), &w, &LrCache::new()).unwrap();

        assert!(matches!(witness_all_even(&p(&[3, 1])), Err(Error::Precondition(_))));
    }

    #[test]
    fn distinct_odd_example() {
        let w = witness_distinct_odd(&p(&[7, 5, 3, 1])).unwrap();
        assert_eq!(w.alpha, p(&[4, 3, 1]));
        assert_eq!(w.gamma, p(&[4, 3, 1]));
        assert_eq!(w.beta, p(&[3, 2, 2, 1]));
        assert_eq!(
            words(&w),
            vec![
                vec![1, 1, 1, 2, 2, 3, 3, 4],
                vec![1, 1, 1, 1, 2, 2, 2, 3],
                vec![1, 1, 1, 2, 1, 2, 2, 3]
            ]
        );
        assert_eq!(w.path(), "constructed");
    }

    #[test]
    fn distinct_odd_small_cases() {
        let cache = LrCache::new();
        let w = witness_distinct_odd(&p(&[3, 1])).unwrap();
        assert_eq!((w.alpha.clone(), w.beta.clone(), w.gamma.clone()), (p(&[2]), p(&[1, 1]), p(&[2])));
        validate_witness(&p(&[3, 1]), &w, &cache).unwrap();
        let w = witness_distinct_odd(&p(&[5, 3])).unwrap();
        assert_eq!((w.alpha.clone(), w.beta.clone(), w.gamma.clone()), (p(&[3, 1]), p(&[2, 2]), p(&[3, 1])));
        validate_witness(&p(&[5, 3]), &w, &cache).unwrap();
        assert!(witness_distinct_odd(&p(&[5, 3, 1])).is_err());
    }

    #[test]
    fn hook_examples() {
        let cache = LrCache::new();
        let w = witness_hook(&p(&[6, 1, 1, 1, 1]), &cache).unwrap();
        assert_eq!(w.alpha, p(&[3, 1, 1]));
        assert_eq!(w.certificates[0].tableau.word(), Word(vec![1, 1, 1, 2, 3]));

        let w = witness_hook(&p(&[5, 1, 1, 1]), &cache).unwrap();
        assert_eq!(w.alpha, p(&[3, 1]));
        assert_eq!(w.gamma, p(&[3, 1]));
        assert_eq!(w.beta, p(&[2, 1, 1]));
        assert_eq!(words(&w), vec![vec![1, 1, 2, 3], vec![1, 1, 1, 2], vec![1, 1, 1, 2]]);
        assert_eq!(w.path(), "constructed");
    }

    #[test]
    fn hook_without_arm_uses_search() {
        let cache = LrCache::new();
        let lam = p(&[1, 1]);
        let w = witness_hook(&lam, &cache).unwrap();
        assert_eq!((w.alpha.clone(), w.beta.clone(), w.gamma.clone()), (p(&[1]), p(&[1]), p(&[1])));
        assert_eq!(w.path(), "fallback");
        validate_witness(&lam, &w, &cache).unwrap();
        let w = witness_hook(&p(&[1, 1, 1, 1]), &cache).unwrap();
        validate_witness(&p(&[1, 1, 1, 1]), &w, &cache).unwrap();
        assert!(witness_hook(&p(&[3, 1, 1]), &cache).is_err());
    }

    #[test]
    fn rectangle_cases() {
        let cache = LrCache::new();
        let w = witness_rectangle(&p(&[4, 4])).unwrap();
        assert_eq!(w.alpha, p(&[2, 2]));
        let lam = p(&[3, 3]);
        let w = witness_rectangle(&lam).unwrap();
        assert_eq!((w.alpha.clone(), w.beta.clone(), w.gamma.clone()), (p(&[3]), p(&[3]), p(&[3])));
        assert!(cache.get(&p(&[3]), &p(&[3]), &lam).unwrap().value() >= 1);
        validate_witness(&lam, &w, &cache).unwrap();
        let w = witness_rectangle(&p(&[1, 1])).unwrap();
        validate_witness(&p(&[1, 1]), &w, &cache).unwrap();
        assert!(detects(&p(&[1, 1]), &cache).unwrap().detected);
        assert!(witness_rectangle(&p(&[3, 3, 3])).is_err());
    }

    #[test]
    fn verdicts() {
        let cache = LrCache::new();
        let v = detects(&p(&[3]), &cache).unwrap();
        assert!(!v.detected);
        assert!(v.n_lambda_lambda_lambda.is_zero());
        assert!(v.witness.is_none());
        let v = detects(&p(&[2]), &cache).unwrap();
        assert!(v.detected);
        assert_eq!(v.n_lambda_lambda_lambda, Coefficient(1));
        let v = detects(&p(&[4, 3, 2, 1]), &cache).unwrap();
        assert!(v.matched_families.is_empty());
        assert!(v.witness.is_none());
        assert_eq!(v.detected, !v.n_lambda_lambda_lambda.is_zero());
        let v = detects(&Partition::empty(), &cache).unwrap();
        assert!(v.detected);
    }

    #[test]
    fn verdict_json() {
        let cache = LrCache::new();
        let v = detects(&p(&[7, 5, 3, 1]), &cache).unwrap();
        let json = v.to_json();
        assert_eq!(json["lambda"], serde_json::json!([7, 5, 3, 1]));
        assert_eq!(json["size"], 16);
        assert_eq!(json["detected"], true);
        assert_eq!(json["path"], "constructed");
        assert_eq!(json["witness"]["beta"], serde_json::json!([3, 2, 2, 1]));
        assert_eq!(json["families"][0]["family"], "distinct_odd_even_length");
    }

    #[test]
    fn small_sweeps() {
        let cache = LrCache::new();
        let odd = verify_odd_theorem(5, &cache, None).unwrap();
        assert_eq!(odd.total_checked(), 11);
        assert!(odd.passed());
        let one = verify_odd_theorem(1, &cache, None).unwrap();
        assert_eq!(one.records.len(), 1);
        assert_eq!(one.records[0].lambda, p(&[1]));
        assert!(verify_odd_theorem(99, &cache, None).is_err());

        let even = verify_even_theorem(2, &cache, None).unwrap();
        assert!(even.passed());
        assert_eq!(even.records.len(), 2);
        assert!(even.records.iter().all(|r| r.verdict.detected));
        assert!(verify_even_theorem(14, &cache, None).is_err());
    }

    #[test]
    fn six_box_sweep() {
        let cache = LrCache::new();
        let report = verify_even_theorem(6, &cache, Some(2)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        let unclassified: Vec<_> = report.unclassified.iter().map(|(l, _)| l.clone()).collect();
        assert!(unclassified.contains(&p(&[3, 2, 1])));
        for lam in [&[6][..], &[4, 2], &[2, 2, 2], &[3, 1], &[5, 1], &[3, 1, 1, 1], &[2, 1, 1], &[3, 3], &[2, 2], &[1, 1, 1, 1]] {
            let rec = report.records.iter().find(|r| r.verdict.lambda == p(lam)).unwrap();
            assert!(rec.verdict.detected, "{lam:?}");
            assert!(rec.verdict.witness.is_some());
        }
    }
}
