//! Integer partitions: construction, the shorthand text grammar, conjugation,
//! containment, shape families and bounded enumeration.
//!
//! A [`Partition`] never stores trailing zeros, so structural equality is
//! partition equality and the empty vector is the empty partition.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest total accepted by [`enumerate_partitions`].
pub const MAX_ENUMERATION_TOTAL: u32 = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from a weakly decreasing sequence. Zero parts are
    /// only allowed as a trailing run and are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::NotAPartition(format!("{parts:?} has an interior zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Internal constructor for sequences already known to be canonical.
    pub(crate) fn from_canonical(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().map_or(true, |&p| p > 0));
        Partition { parts }
    }

    /// Parses the shorthand grammar, e.g. `4^2,3,1^2`. The empty string is
    /// the empty partition; one pair of surrounding parentheses is accepted.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse { input: text.to_string(), reason };
        let mut body = text.trim();
        if let Some(inner) = body.strip_prefix('(') {
            body = inner
                .strip_suffix(')')
                .ok_or_else(|| err("unbalanced parenthesis".into()))?
                .trim();
        }
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for term in body.split(',') {
            let term = term.trim();
            let (value, repeat) = match term.split_once('^') {
                Some((v, r)) => (v.trim(), Some(r.trim())),
                None => (term, None),
            };
            let value: u32 = value
                .parse()
                .map_err(|_| err(format!("malformed part {term:?}")))?;
            if value == 0 {
                return Err(err("parts must be positive".into()));
            }
            let repeat: u32 = match repeat {
                Some(r) => r
                    .parse()
                    .map_err(|_| err(format!("malformed exponent in {term:?}")))?,
                None => 1,
            };
            if repeat == 0 {
                return Err(err(format!("exponent must be positive in {term:?}")));
            }
            if let Some(&prev) = parts.last() {
                if prev < value {
                    return Err(err(format!("parts increase at {term:?}")));
                }
            }
            parts.extend(std::iter::repeat(value).take(repeat as usize));
        }
        Ok(Partition { parts })
    }

    /// Canonical shorthand: runs of length two or more are written `p^a`.
    pub fn render(&self) -> String {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if run >= 2 {
                out.push(format!("{p}^{run}"));
            } else {
                out.push(p.to_string());
            }
            i += run;
        }
        out.join(",")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The part at `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first_part(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part() as usize;
        let mut cols = Vec::with_capacity(width);
        for j in 1..=self.first_part() {
            cols.push(self.parts.iter().take_while(|&&p| p >= j).count() as u32);
        }
        Partition { parts: cols }
    }

    /// True iff the diagram of `self` sits inside the diagram of `outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.length() <= outer.length()
            && self.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
    }

    /// Componentwise minimum, the largest partition inside both.
    pub fn meet(&self, other: &Partition) -> Partition {
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Partition { parts }
    }

    pub fn classify(&self) -> BTreeSet<ShapeFamily> {
        classify(self)
    }
}

pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.is_contained_in(outer)
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

impl Index<usize> for Partition {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.parts[i]
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Shape families singled out by the even-size detection results.
///
/// Variant order is the witness priority: all-even first, rectangles last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ShapeFamily {
    AllEven,
    DistinctOddEvenLength,
    Hook { arm: u32, leg: u32 },
    Rectangle { rows: u32, cols: u32 },
}

impl ShapeFamily {
    /// Single-letter label (a)-(d).
    pub fn letter(&self) -> char {
        match self {
            ShapeFamily::AllEven => 'a',
            ShapeFamily::DistinctOddEvenLength => 'b',
            ShapeFamily::Hook { .. } => 'c',
            ShapeFamily::Rectangle { .. } => 'd',
        }
    }
}

impl fmt::Display for ShapeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeFamily::AllEven => write!(f, "all-even"),
            ShapeFamily::DistinctOddEvenLength => write!(f, "distinct-odd-even-length"),
            ShapeFamily::Hook { arm, leg } => write!(f, "hook(arm={arm},leg={leg})"),
            ShapeFamily::Rectangle { rows, cols } => write!(f, "rectangle({rows}x{cols})"),
        }
    }
}

/// Every family `p` belongs to. The empty partition is all-even and
/// distinct-odd of even length (both vacuously) but neither a hook nor a
/// rectangle.
pub fn classify(p: &Partition) -> BTreeSet<ShapeFamily> {
    let parts = p.parts();
    let mut out = BTreeSet::new();
    if parts.iter().all(|x| x % 2 == 0) {
        out.insert(ShapeFamily::AllEven);
    }
    let distinct = parts.windows(2).all(|w| w[0] > w[1]);
    if distinct && parts.iter().all(|x| x % 2 == 1) && parts.len() % 2 == 0 {
        out.insert(ShapeFamily::DistinctOddEvenLength);
    }
    if let Some((&first, rest)) = parts.split_first() {
        if rest.iter().all(|&x| x == 1) {
            out.insert(ShapeFamily::Hook { arm: first - 1, leg: rest.len() as u32 });
        }
        if rest.iter().all(|&x| x == first) {
            out.insert(ShapeFamily::Rectangle { rows: parts.len() as u32, cols: first });
        }
    }
    out
}

/// All partitions of `total` with at most `max_length` parts, each at most
/// `max_part`, in reverse-lexicographic order.
pub fn enumerate_partitions(
    total: u32,
    max_length: Option<usize>,
    max_part: Option<u32>,
) -> Result<Vec<Partition>> {
    if total > MAX_ENUMERATION_TOTAL {
        return Err(Error::BoundExceeded(format!(
            "partition enumeration total {total} exceeds {MAX_ENUMERATION_TOTAL}"
        )));
    }
    let max_length = max_length.unwrap_or(usize::MAX);
    let max_part = max_part.unwrap_or(u32::MAX);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill_partitions(total, max_part.min(total), max_length, &mut stack, &mut |parts| {
        out.push(Partition::from_canonical(parts.to_vec()));
    });
    Ok(out)
}

fn fill_partitions(
    remaining: u32,
    cap: u32,
    slots: usize,
    stack: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if remaining == 0 {
        emit(stack);
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=cap.min(remaining)).rev() {
        // the remaining slots must be able to absorb what is left
        if (part as u64).saturating_mul(slots as u64) < remaining as u64 {
            break;
        }
        stack.push(part);
        fill_partitions(remaining - part, part, slots - 1, stack, emit);
        stack.pop();
    }
}

/// Partitions of `size` whose diagrams fit inside `outer`, reverse-lex.
pub fn partitions_inside(outer: &Partition, size: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if size > outer.size() {
        return out;
    }
    let mut stack = Vec::new();
    fill_inside(outer.parts(), size, u32::MAX, &mut stack, &mut out);
    out
}

fn fill_inside(
    outer: &[u32],
    remaining: u32,
    cap: u32,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_canonical(stack.clone()));
        return;
    }
    let row = stack.len();
    if row >= outer.len() {
        return;
    }
    let room: u32 = outer[row..].iter().map(|&o| o.min(cap)).sum();
    if room < remaining {
        return;
    }
    for part in (1..=outer[row].min(cap).min(remaining)).rev() {
        stack.push(part);
        fill_inside(outer, remaining - part, part, stack, out);
        stack.pop();
    }
}

/// Every partition whose diagram fits inside `outer`, all sizes, ordered by
/// size then reverse-lex.
pub fn all_partitions_inside(outer: &Partition) -> Vec<Partition> {
    (0..=outer.size()).flat_map(|s| partitions_inside(outer, s)).collect()
}
