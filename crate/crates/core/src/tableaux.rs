//! Skew shapes, skew tableaux, reading words and the Littlewood-Richardson
//! conditions, plus the backtracking filler that enumerates LR tableaux and
//! semistandard tableaux.
//!
//! Boxes are filled in reading order (rows top to bottom, each row right to
//! left). In that order every row and column constraint only looks at boxes
//! that are already filled, and the lattice condition is a prefix property,
//! so each partial filling can be rejected as soon as it goes wrong.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::Precondition(format!(
                "inner shape {inner} is not contained in outer shape {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `outer` with nothing removed.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.outer.length()
    }

    /// Column range (0-based, half open) of the skew boxes in `row`.
    pub fn row_span(&self, row: usize) -> std::ops::Range<usize> {
        self.inner.part(row) as usize..self.outer.part(row) as usize
    }

    pub fn row_len(&self, row: usize) -> usize {
        (self.outer.part(row) - self.inner.part(row)) as usize
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        self.row_span(row).contains(&col)
    }

    /// Boxes in reading order: top to bottom, right to left in each row.
    pub fn reading_order(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|r| self.row_span(r).rev().map(move |c| (r, c)))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A word over the positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn is_lattice(&self) -> bool {
        is_lattice(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", letters.join(","))
    }
}

/// A filling of a skew shape by positive integers. `rows[r]` lists the
/// entries of the skew boxes of row `r` from left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::Precondition(format!(
                "shape {shape} has {} rows but {} rows of entries were given",
                shape.rows(),
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(Error::Precondition(format!(
                    "row {} of {shape} has {} boxes but {} entries were given",
                    r + 1,
                    shape.row_len(r),
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::Precondition("tableau entries must be positive".into()));
            }
        }
        Ok(SkewTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at `(row, col)` in diagram coordinates, `None` outside the skew shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<u32> {
        let span = self.shape.row_span(row);
        span.contains(&col).then(|| self.rows[row][col - span.start])
    }

    pub fn word(&self) -> Word {
        word(self)
    }

    /// `content[j-1]` is the number of entries equal to `j`.
    pub fn content(&self) -> Vec<u32> {
        let mut counts: Vec<u32> = Vec::new();
        for &e in self.rows.iter().flatten() {
            let idx = e as usize - 1;
            if counts.len() <= idx {
                counts.resize(idx + 1, 0);
            }
            counts[idx] += 1;
        }
        counts
    }

    pub fn is_semistandard(&self) -> bool {
        is_semistandard(self)
    }

    pub fn is_lr_tableau(&self) -> bool {
        is_lr_tableau(self)
    }

    /// One line per row; inner boxes are `.`.
    pub fn to_ascii(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for r in 0..self.shape.rows() {
            let mut cells = Vec::new();
            for c in 0..self.shape.outer().part(r) as usize {
                let cell = match self.entry(r, c) {
                    Some(e) => e.to_string(),
                    None => ".".to_string(),
                };
                cells.push(format!("{cell:>width$}"));
            }
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> TableauJson {
        let rows = (0..self.shape.rows())
            .map(|r| {
                (0..self.shape.outer().part(r) as usize)
                    .map(|c| self.entry(r, c))
                    .collect()
            })
            .collect();
        TableauJson {
            outer: self.shape.outer().clone(),
            inner: self.shape.inner().clone(),
            rows,
        }
    }

    pub fn from_json(json: &TableauJson) -> Result<Self> {
        let shape = SkewShape::new(json.outer.clone(), json.inner.clone())?;
        if json.rows.len() != shape.rows() {
            return Err(Error::Precondition("row count does not match outer shape".into()));
        }
        let mut rows = Vec::with_capacity(shape.rows());
        for (r, row) in json.rows.iter().enumerate() {
            if row.len() != shape.outer().part(r) as usize {
                return Err(Error::Precondition(format!("row {} has the wrong length", r + 1)));
            }
            let span = shape.row_span(r);
            let mut entries = Vec::with_capacity(span.len());
            for (c, cell) in row.iter().enumerate() {
                match (span.contains(&c), cell) {
                    (true, Some(e)) => entries.push(*e),
                    (false, None) => {}
                    _ => {
                        return Err(Error::Precondition(format!(
                            "cell ({}, {}) does not match the skew shape",
                            r + 1,
                            c + 1
                        )))
                    }
                }
            }
            rows.push(entries);
        }
        SkewTableau::new(shape, rows)
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

/// JSON form of a tableau: full rows of the outer shape, `null` in inner boxes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub outer: Partition,
    pub inner: Partition,
    pub rows: Vec<Vec<Option<u32>>>,
}

pub fn word(t: &SkewTableau) -> Word {
    Word(t.rows.iter().flat_map(|row| row.iter().rev().copied()).collect())
}

/// Rows weakly increase left to right; columns strictly increase top to
/// bottom wherever both boxes lie in the skew shape.
pub fn is_semistandard(t: &SkewTableau) -> bool {
    let shape = &t.shape;
    for r in 0..shape.rows() {
        if t.rows[r].windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        if r == 0 {
            continue;
        }
        for c in shape.row_span(r) {
            if let (Some(above), Some(here)) = (t.entry(r - 1, c), t.entry(r, c)) {
                if above >= here {
                    return false;
                }
            }
        }
    }
    true
}

/// Every prefix contains at least as many `j`s as `j+1`s, for every `j`.
pub fn is_lattice(w: &Word) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &letter in &w.0 {
        if letter == 0 {
            return false;
        }
        let idx = letter as usize - 1;
        if counts.len() <= idx {
            counts.resize(idx + 1, 0);
        }
        counts[idx] += 1;
        if idx > 0 && counts[idx] > counts[idx - 1] {
            return false;
        }
    }
    true
}

pub fn is_lr_tableau(t: &SkewTableau) -> bool {
    is_semistandard(t) && is_lattice(&t.word())
}

/// Constraints applied by the backtracking filler.
#[derive(Debug, Clone, Copy)]
pub(crate) struct FillRules<'a> {
    /// Largest admissible entry.
    pub max_entry: u32,
    /// Exact content to realise, if any.
    pub content: Option<&'a [u32]>,
    /// Enforce the lattice condition on the reading word.
    pub lattice: bool,
}

/// Enumerates every semistandard filling of `shape` obeying `rules`, calling
/// `visit` with the filled diagram (row-major, diagram coordinates, zero in
/// inner boxes). Smaller entries are tried first at each box, so output order
/// is deterministic.
pub(crate) fn fill_semistandard(
    shape: &SkewShape,
    rules: FillRules<'_>,
    visit: &mut dyn FnMut(&[Vec<u32>]),
) {
    if let Some(content) = rules.content {
        if content.iter().sum::<u32>() != shape.size() {
            return;
        }
    }
    let mut grid: Vec<Vec<u32>> = (0..shape.rows())
        .map(|r| vec![0; shape.outer().part(r) as usize])
        .collect();
    let order = shape.reading_order();
    let mut counts = vec![0u32; rules.max_entry as usize + 1];
    let mut state = Filler { shape, rules, order: &order, grid: &mut grid, counts: &mut counts };
    state.step(0, visit);
}

struct Filler<'a, 'r> {
    shape: &'a SkewShape,
    rules: FillRules<'r>,
    order: &'a [(usize, usize)],
    grid: &'a mut Vec<Vec<u32>>,
    counts: &'a mut Vec<u32>,
}

impl Filler<'_, '_> {
    fn step(&mut self, k: usize, visit: &mut dyn FnMut(&[Vec<u32>])) {
        if k == self.order.len() {
            visit(self.grid);
            return;
        }
        let (r, c) = self.order[k];
        let mut lo = 1;
        if r > 0 && self.shape.contains_box(r - 1, c) {
            lo = self.grid[r - 1][c] + 1;
        }
        let mut hi = self.rules.max_entry;
        if c + 1 < self.grid[r].len() {
            hi = hi.min(self.grid[r][c + 1]);
        }
        for v in lo..=hi {
            let i = v as usize;
            if let Some(content) = self.rules.content {
                if self.counts[i] >= content[i - 1] {
                    continue;
                }
            }
            if self.rules.lattice && v > 1 && self.counts[i] >= self.counts[i - 1] {
                continue;
            }
            self.counts[i] += 1;
            self.grid[r][c] = v;
            self.step(k + 1, visit);
            self.grid[r][c] = 0;
            self.counts[i] -= 1;
        }
    }
}

fn skew_rows(shape: &SkewShape, grid: &[Vec<u32>]) -> Vec<Vec<u32>> {
    (0..shape.rows()).map(|r| grid[r][shape.row_span(r)].to_vec()).collect()
}

fn lr_rules(content: &Partition) -> FillRules<'_> {
    FillRules { max_entry: content.length() as u32, content: Some(content.parts()), lattice: true }
}

/// All LR tableaux of `shape` with the given content, in filler order.
pub fn enumerate_lr_tableaux(shape: &SkewShape, content: &Partition) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    fill_semistandard(shape, lr_rules(content), &mut |grid| {
        out.push(SkewTableau { shape: shape.clone(), rows: skew_rows(shape, grid) });
    });
    out
}

/// First LR tableau in filler order, if any.
pub fn first_lr_tableau(shape: &SkewShape, content: &Partition) -> Option<SkewTableau> {
    // The filler has no early exit; shapes reaching here are desk sized.
    let mut found = None;
    fill_semistandard(shape, lr_rules(content), &mut |grid| {
        if found.is_none() {
            found = Some(SkewTableau { shape: shape.clone(), rows: skew_rows(shape, grid) });
        }
    });
    found
}

/// Number of LR tableaux of `shape` with the given content.
pub fn count_lr_tableaux(shape: &SkewShape, content: &Partition) -> u64 {
    let mut n = 0u64;
    fill_semistandard(shape, lr_rules(content), &mut |_| n += 1);
    n
}

/// Semistandard tableaux of straight or skew shape with entries at most
/// `max_entry`, no content or lattice restriction.
pub fn enumerate_semistandard(shape: &SkewShape, max_entry: u32) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    let rules = FillRules { max_entry, content: None, lattice: false };
    fill_semistandard(shape, rules, &mut |grid| {
        out.push(SkewTableau { shape: shape.clone(), rows: skew_rows(shape, grid) });
    });
    out
}

/// Fills the content letters `1^{c1} 2^{c2} ...` in increasing order into the
/// skew rows, top row first, each row left to right. This realises the
/// explicit row-by-row witness fillings; the result is not validated.
pub fn fill_rows_in_order(shape: &SkewShape, content: &Partition) -> Result<SkewTableau> {
    if content.size() != shape.size() {
        return Err(Error::Precondition(format!(
            "content {content} has {} boxes but shape {shape} has {}",
            content.size(),
            shape.size()
        )));
    }
    let mut letters = content
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(j, &n)| std::iter::repeat(j as u32 + 1).take(n as usize));
    let rows = (0..shape.rows())
        .map(|r| letters.by_ref().take(shape.row_len(r)).collect())
        .collect();
    SkewTableau::new(shape.clone(), rows)
}
