//! Newell-Littlewood coefficients and tensor products for the classical
//! groups `SO(2n+1)`, `Sp(2n)` and `SO(2n)`.
//!
//! `N^nu_{lambda mu} = sum over (alpha, beta, gamma) of
//! c^lambda_{alpha beta} * c^mu_{alpha gamma} * c^nu_{beta gamma}`.
//! The three families share these multiplicities; only the rank filter on
//! the output differs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::{Coefficient, LrCache};
use crate::partitions::{all_partitions_inside, enumerate_partitions, partitions_inside, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `SO(2n+1)`
    B,
    /// `Sp(2n)`
    C,
    /// `SO(2n)`
    D,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Precondition(format!("unknown group family {other:?}, expected B, C or D"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

/// A classical group of the given family and rank `n`. Type D requires `n`
/// even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    family: Family,
    rank: u32,
}

impl GroupSpec {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Precondition("rank must be positive".into()));
        }
        if family == Family::D && rank % 2 != 0 {
            return Err(Error::Precondition(format!(
                "SO(2n) requires even rank n, got n = {rank}"
            )));
        }
        Ok(GroupSpec { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Dimension `2n + delta` of the standard representation.
    pub fn dim(&self) -> u32 {
        match self.family {
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }

    /// Longest admissible highest weight: `n`, or `n - 1` for type D where
    /// the last coordinate must vanish.
    pub fn max_length(&self) -> usize {
        match self.family {
            Family::B | Family::C => self.rank as usize,
            Family::D => self.rank as usize - 1,
        }
    }

    pub fn check_weight(&self, p: &Partition) -> Result<()> {
        if p.length() > self.max_length() {
            let why = match self.family {
                Family::D => "SO(2n) weights must have lambda_n = 0, so at most n - 1 parts",
                _ => "weights have at most n parts",
            };
            return Err(Error::Precondition(format!(
                "{p} has {} parts but {self} allows at most {}: {why}",
                p.length(),
                self.max_length()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank;
        match self.family {
            Family::B => write!(f, "SO({})", 2 * n + 1),
            Family::C => write!(f, "Sp({})", 2 * n),
            Family::D => write!(f, "SO({})", 2 * n),
        }
    }
}

/// One nonzero term of the triple sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportTerm {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    /// `c^lambda_{alpha beta}`
    pub c_lambda: Coefficient,
    /// `c^mu_{alpha gamma}`
    pub c_mu: Coefficient,
    /// `c^nu_{beta gamma}`
    pub c_nu: Coefficient,
}

impl SupportTerm {
    pub fn product(&self) -> Result<Coefficient> {
        self.c_lambda.checked_mul(self.c_mu)?.checked_mul(self.c_nu)
    }
}

fn half_sizes(lambda: &Partition, mu: &Partition, nu: &Partition) -> Option<(u32, u32, u32)> {
    let (l, m, n) = (lambda.size() as i64, mu.size() as i64, nu.size() as i64);
    let a = l + m - n;
    let b = l + n - m;
    let c = m + n - l;
    if a < 0 || b < 0 || c < 0 {
        return None;
    }
    Some(((a / 2) as u32, (b / 2) as u32, (c / 2) as u32))
}

/// The triples contributing to `N^nu_{lambda mu}` with all three
/// coefficients nonzero. `|lambda| + |mu| + |nu|` must be even.
pub fn nl_sum_support(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cache: &LrCache,
) -> Result<Vec<SupportTerm>> {
    if (lambda.size() + mu.size() + nu.size()) % 2 != 0 {
        return Err(Error::Precondition(
            "support is defined only when |lambda| + |mu| + |nu| is even".into(),
        ));
    }
    let Some((alpha_size, _, _)) = half_sizes(lambda, mu, nu) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for alpha in partitions_inside(&lambda.meet(mu), alpha_size) {
        let betas = cache.support(lambda, &alpha)?;
        if betas.is_empty() {
            continue;
        }
        let gammas = cache.support(mu, &alpha)?;
        for (beta, c_lambda) in &betas {
            if !beta.is_contained_in(nu) {
                continue;
            }
            for (gamma, c_mu) in &gammas {
                let c_nu = cache.get(beta, gamma, nu)?;
                if c_nu.is_zero() {
                    continue;
                }
                out.push(SupportTerm {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    gamma: gamma.clone(),
                    c_lambda: *c_lambda,
                    c_mu: *c_mu,
                    c_nu,
                });
            }
        }
    }
    Ok(out)
}

/// `N^nu_{lambda mu}`. Returns zero straight away when the total size is odd.
pub fn nl_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cache: &LrCache,
) -> Result<Coefficient> {
    if (lambda.size() + mu.size() + nu.size()) % 2 != 0 {
        return Ok(Coefficient::ZERO);
    }
    let mut total = Coefficient::ZERO;
    for term in nl_sum_support(lambda, mu, nu, cache)? {
        total = total.checked_add(term.product()?)?;
    }
    Ok(total)
}

/// `N^nu_{lambda mu}` summed over every `alpha` inside `lambda` and `mu` of
/// every size, without using the parity shortcut or the forced sizes. Only
/// the vanishing of individual LR coefficients prunes the sum.
pub fn nl_coefficient_unreduced(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cache: &LrCache,
) -> Result<Coefficient> {
    let mut total = Coefficient::ZERO;
    for alpha in all_partitions_inside(&lambda.meet(mu)) {
        let betas = cache.support(lambda, &alpha)?;
        let gammas = cache.support(mu, &alpha)?;
        for (beta, c_lambda) in &betas {
            for (gamma, c_mu) in &gammas {
                let c_nu = cache.get(beta, gamma, nu)?;
                let term = c_lambda.checked_mul(*c_mu)?.checked_mul(c_nu)?;
                total = total.checked_add(term)?;
            }
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionResult {
    pub group: GroupSpec,
    pub lambda: Partition,
    pub mu: Partition,
    /// Nonzero terms, reverse-lex in `nu`.
    pub terms: Vec<(Partition, Coefficient)>,
    /// Type D only: nonzero terms with `nu_n > 0`, which do not label a
    /// single irreducible representation.
    pub inadmissible: Vec<(Partition, Coefficient)>,
    /// `l(lambda) + l(mu) <= n`; outside this range the formula is applied
    /// as is, without modification rules.
    pub stable: bool,
}

impl DecompositionResult {
    pub fn multiplicity(&self, nu: &Partition) -> Coefficient {
        self.terms
            .iter()
            .find(|(p, _)| p == nu)
            .map_or(Coefficient::ZERO, |(_, c)| *c)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let list = |terms: &[(Partition, Coefficient)]| -> Vec<serde_json::Value> {
            terms
                .iter()
                .map(|(nu, c)| serde_json::json!({ "nu": nu, "mult": c }))
                .collect()
        };
        serde_json::json!({
            "group": { "family": self.group.family(), "rank": self.group.rank() },
            "lambda": self.lambda,
            "mu": self.mu,
            "terms": list(&self.terms),
            "inadmissible": list(&self.inadmissible),
            "stable": self.stable,
        })
    }
}

/// Decomposes the tensor product of the irreducibles with highest weights
/// `lambda` and `mu` of `group`.
pub fn tensor_decompose(
    lambda: &Partition,
    mu: &Partition,
    group: GroupSpec,
    cache: &LrCache,
) -> Result<DecompositionResult> {
    group.check_weight(lambda)?;
    group.check_weight(mu)?;
    let top = lambda.size() + mu.size();
    let first_bound = lambda.first_part() + mu.first_part();
    let mut candidates = Vec::new();
    let mut size = top as i64;
    while size >= 0 {
        candidates.extend(enumerate_partitions(
            size as u32,
            Some(group.rank() as usize),
            Some(first_bound),
        )?);
        size -= 2;
    }
    let values: Vec<Result<Coefficient>> = candidates
        .par_iter()
        .map(|nu| nl_coefficient(lambda, mu, nu, cache))
        .collect();
    let mut terms = Vec::new();
    let mut inadmissible = Vec::new();
    for (nu, value) in candidates.into_iter().zip(values) {
        let value = value?;
        if value.is_zero() {
            continue;
        }
        if nu.length() > group.max_length() {
            inadmissible.push((nu, value));
        } else {
            terms.push((nu, value));
        }
    }
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    inadmissible.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(DecompositionResult {
        group,
        lambda: lambda.clone(),
        mu: mu.clone(),
        terms,
        inadmissible,
        stable: lambda.length() + mu.length() <= group.rank() as usize,
    })
}
