//! Independent LR coefficients from Schur polynomial multiplication.
//!
//! `s_lambda * s_mu` is expanded back into Schur polynomials by repeatedly
//! peeling off the lexicographically greatest monomial. Only the
//! semistandard filler is shared with the tableau code; the lattice-word
//! logic is not used here. This path exists to cross-check
//! [`crate::lr::lr_coefficient`], never to replace it.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::lr::Coefficient;
use crate::partitions::Partition;
use crate::tableaux::{enumerate_semistandard, SkewShape};

/// Largest `|lambda| + |mu|` the oracle accepts.
pub const MAX_ORACLE_DEGREE: u32 = 14;

/// Polynomial in `vars` commuting variables with integer coefficients.
/// Exponent vectors always have exactly `vars` entries; zero terms are not
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiDegreePolynomial {
    vars: usize,
    terms: HashMap<Vec<u32>, i64>,
}

impl MultiDegreePolynomial {
    pub fn zero(vars: usize) -> Self {
        MultiDegreePolynomial { vars, terms: HashMap::new() }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &HashMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: &[u32]) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    /// Sum of all coefficients (the value at `x = (1, ..., 1)`).
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, exponent: Vec<u32>, coeff: i64) -> Result<()> {
        if exponent.len() != self.vars {
            return Err(Error::Precondition(format!(
                "exponent vector of length {} in a polynomial of {} variables",
                exponent.len(),
                self.vars
            )));
        }
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry(exponent) {
            Entry::Occupied(mut slot) => {
                let v = slot.get().checked_add(coeff).ok_or(Error::Overflow)?;
                if v == 0 {
                    slot.remove();
                } else {
                    slot.insert(v);
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
        Ok(())
    }

    pub fn mul(&self, other: &MultiDegreePolynomial) -> Result<MultiDegreePolynomial> {
        if self.vars != other.vars {
            return Err(Error::Precondition("variable counts differ".into()));
        }
        let mut out = MultiDegreePolynomial::zero(self.vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                let entry = out.terms.entry(e).or_insert(0);
                *entry = entry.checked_add(c).ok_or(Error::Overflow)?;
            }
        }
        out.terms.retain(|_, c| *c != 0);
        Ok(out)
    }

    /// `self -= coeff * other`
    fn sub_scaled(&mut self, other: &MultiDegreePolynomial, coeff: i64) -> Result<()> {
        for (e, &c) in &other.terms {
            let delta = c.checked_mul(coeff).ok_or(Error::Overflow)?;
            let entry = self.terms.entry(e.clone()).or_insert(0);
            *entry = entry.checked_sub(delta).ok_or(Error::Overflow)?;
        }
        self.terms.retain(|_, c| *c != 0);
        Ok(())
    }

    /// True iff every permutation of an exponent vector carries the same
    /// coefficient, checked on sorted representatives.
    pub fn is_symmetric(&self) -> bool {
        let mut by_sorted: HashMap<Vec<u32>, (i64, usize)> = HashMap::new();
        for (e, &c) in &self.terms {
            let mut s = e.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            let slot = by_sorted.entry(s).or_insert((c, 0));
            if slot.0 != c {
                return false;
            }
            slot.1 += 1;
        }
        by_sorted.iter().all(|(sorted, &(_, seen))| seen == distinct_permutations(sorted))
    }

    fn leading(&self) -> Option<(&Vec<u32>, i64)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0)).map(|(e, &c)| (e, c))
    }
}

fn distinct_permutations(sorted: &[u32]) -> usize {
    let n = sorted.len();
    let mut result: u128 = 1;
    for i in 1..=n as u128 {
        result *= i;
    }
    let mut i = 0;
    while i < n {
        let run = sorted[i..].iter().take_while(|&&x| x == sorted[i]).count();
        for j in 1..=run as u128 {
            result /= j;
        }
        i += run;
    }
    result as usize
}

/// `s_lambda(x_1, ..., x_m)` as the sum of `x^content` over semistandard
/// tableaux of shape `lambda` with entries at most `m`.
pub fn schur_polynomial(lambda: &Partition, m: usize) -> Result<MultiDegreePolynomial> {
    if lambda.length() > m {
        return Err(Error::Precondition(format!(
            "{lambda} has more than {m} parts; s_lambda vanishes in {m} variables"
        )));
    }
    let mut poly = MultiDegreePolynomial::zero(m);
    for t in enumerate_semistandard(&SkewShape::straight(lambda.clone()), m as u32) {
        let mut exponent = t.content();
        exponent.resize(m, 0);
        let entry = poly.terms.entry(exponent).or_insert(0);
        *entry += 1;
    }
    Ok(poly)
}

/// Coefficients of `p` in the Schur basis of degree `degree` in `m`
/// variables.
pub fn expand_in_schur_basis(
    p: &MultiDegreePolynomial,
    degree: u32,
    m: usize,
) -> Result<BTreeMap<Partition, i64>> {
    expand(p, degree, m, None)
}

fn expand(
    p: &MultiDegreePolynomial,
    degree: u32,
    m: usize,
    stop_below: Option<&Partition>,
) -> Result<BTreeMap<Partition, i64>> {
    if p.vars() != m {
        return Err(Error::Precondition(format!(
            "polynomial has {} variables, expected {m}",
            p.vars()
        )));
    }
    let non_symmetric = |why: String| Error::Precondition(format!("not a symmetric polynomial: {why}"));
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    // each round removes the current leading monomial for good, and there
    // are finitely many monomials of this degree in m variables
    while let Some((lead, coeff)) = rest.leading() {
        if lead.iter().sum::<u32>() != degree {
            return Err(non_symmetric(format!("monomial {lead:?} has the wrong degree")));
        }
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(non_symmetric(format!("leading exponent {lead:?} is not a partition")));
        }
        let shape = Partition::new(lead.clone())?;
        if let Some(stop) = stop_below {
            if shape.parts() < stop.parts() {
                break;
            }
        }
        rest.sub_scaled(&schur_polynomial(&shape, m)?, coeff)?;
        if rest.terms.contains_key(lead_key(&shape, m).as_slice()) {
            return Err(non_symmetric("subtraction did not clear the leading term".into()));
        }
        out.insert(shape, coeff);
    }
    Ok(out)
}

fn lead_key(shape: &Partition, m: usize) -> Vec<u32> {
    let mut v = shape.parts().to_vec();
    v.resize(m, 0);
    v
}

/// `c^nu_{lambda mu}` as the coefficient of `s_nu` in `s_lambda * s_mu`,
/// computed in `max(l(lambda) + l(mu), l(nu), 1)` variables.
pub fn lr_via_polynomials(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Coefficient> {
    let m = (lambda.length() + mu.length()).max(nu.length()).max(1);
    lr_via_polynomials_in(lambda, mu, nu, m)
}

/// As [`lr_via_polynomials`] with an explicit variable count `m`, which must
/// be at least `l(lambda) + l(mu)` for the answer to be exact.
pub fn lr_via_polynomials_in(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    m: usize,
) -> Result<Coefficient> {
    let degree = lambda.size() + mu.size();
    if degree > MAX_ORACLE_DEGREE {
        return Err(Error::BoundExceeded(format!(
            "oracle degree {degree} exceeds {MAX_ORACLE_DEGREE}"
        )));
    }
    if nu.size() != degree || nu.length() > m || lambda.length() > m || mu.length() > m {
        return Ok(Coefficient::ZERO);
    }
    let product = schur_polynomial(lambda, m)?.mul(&schur_polynomial(mu, m)?)?;
    let expansion = expand(&product, degree, m, Some(nu))?;
    let c = expansion.get(nu).copied().unwrap_or(0);
    u64::try_from(c)
        .map(Coefficient)
        .map_err(|_| Error::Invariant(format!("negative Schur coefficient {c} for {nu}")))
}
