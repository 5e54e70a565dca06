//! Littlewood-Richardson coefficients by LR tableau enumeration, with a
//! shared memo store.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{partitions_inside, Partition};
use crate::tableaux::{count_lr_tableaux, SkewShape};

/// Exact non-negative multiplicity. Arithmetic is checked and reports
/// [`Error::Overflow`] instead of wrapping.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coefficient(pub u64);

impl Coefficient {
    pub const ZERO: Coefficient = Coefficient(0);
    pub const ONE: Coefficient = Coefficient(1);

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn checked_add(self, other: Coefficient) -> Result<Coefficient> {
        self.0.checked_add(other.0).map(Coefficient).ok_or(Error::Overflow)
    }

    pub fn checked_mul(self, other: Coefficient) -> Result<Coefficient> {
        self.0.checked_mul(other.0).map(Coefficient).ok_or(Error::Overflow)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for Coefficient {
    fn from(v: u64) -> Self {
        Coefficient(v)
    }
}

/// `c^nu_{lambda mu}`: the number of LR tableaux of shape `nu/lambda` and
/// content `mu`. Zero when sizes or containments rule the triple out.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Coefficient> {
    if lambda.size() + mu.size() != nu.size()
        || !lambda.is_contained_in(nu)
        || !mu.is_contained_in(nu)
    {
        return Ok(Coefficient::ZERO);
    }
    if mu.is_empty() {
        return Ok(Coefficient::ONE);
    }
    let shape = SkewShape::new(nu.clone(), lambda.clone())?;
    Ok(Coefficient(count_lr_tableaux(&shape, mu)))
}

type Key = (Partition, Partition, Partition);

/// Memo store for LR coefficients. Readers proceed concurrently; inserts take
/// the write lock. Two threads may both compute a missing entry, which is
/// harmless since the values agree.
#[derive(Debug)]
pub struct LrCache {
    map: RwLock<HashMap<Key, Coefficient>>,
    capacity: Option<usize>,
    enabled: bool,
    hits: AtomicU64,
    computed: AtomicU64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub entries: usize,
    pub hits: u64,
    /// Number of times a coefficient was actually enumerated.
    pub computed: u64,
}

impl Default for LrCache {
    fn default() -> Self {
        LrCache::new()
    }
}

impl LrCache {
    pub fn new() -> Self {
        LrCache::with_capacity(None)
    }

    /// A store that stops inserting once it holds `capacity` entries.
    pub fn with_capacity(capacity: Option<usize>) -> Self {
        LrCache {
            map: RwLock::new(HashMap::new()),
            capacity,
            enabled: true,
            hits: AtomicU64::new(0),
            computed: AtomicU64::new(0),
        }
    }

    /// A pass-through store that never remembers anything.
    pub fn disabled() -> Self {
        LrCache { enabled: false, ..LrCache::new() }
    }

    /// Lower indices ordered by (size, parts); `c` is symmetric in them.
    pub fn key(lambda: &Partition, mu: &Partition, nu: &Partition) -> Key {
        let ka = (lambda.size(), lambda);
        let kb = (mu.size(), mu);
        if ka <= kb {
            (lambda.clone(), mu.clone(), nu.clone())
        } else {
            (mu.clone(), lambda.clone(), nu.clone())
        }
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Coefficient> {
        if lambda.size() + mu.size() != nu.size()
            || !lambda.is_contained_in(nu)
            || !mu.is_contained_in(nu)
        {
            return Ok(Coefficient::ZERO);
        }
        if !self.enabled {
            self.computed.fetch_add(1, Ordering::Relaxed);
            return lr_coefficient(lambda, mu, nu);
        }
        let key = LrCache::key(lambda, mu, nu);
        if let Some(&c) = self.map.read().get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(c);
        }
        self.computed.fetch_add(1, Ordering::Relaxed);
        let value = lr_coefficient(&key.0, &key.1, &key.2)?;
        let mut map = self.map.write();
        if self.capacity.map_or(true, |cap| map.len() < cap) {
            map.insert(key, value);
        }
        Ok(value)
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            entries: self.map.read().len(),
            hits: self.hits.load(Ordering::Relaxed),
            computed: self.computed.load(Ordering::Relaxed),
        }
    }

    pub fn clear(&self) {
        self.map.write().clear();
    }

    /// Every `beta` of size `|outer| - |alpha|` with `c^outer_{alpha beta} > 0`,
    /// reverse-lex, paired with the coefficient.
    pub fn support(
        &self,
        outer: &Partition,
        alpha: &Partition,
    ) -> Result<Vec<(Partition, Coefficient)>> {
        if !alpha.is_contained_in(outer) {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for beta in partitions_inside(outer, outer.size() - alpha.size()) {
            let c = self.get(alpha, &beta, outer)?;
            if !c.is_zero() {
                out.push((beta, c));
            }
        }
        Ok(out)
    }
}

/// Memoised `c^nu_{lambda mu}`; identical to [`lr_coefficient`].
pub fn lr_coefficient_memo(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cache: &LrCache,
) -> Result<Coefficient> {
    cache.get(lambda, mu, nu)
}
