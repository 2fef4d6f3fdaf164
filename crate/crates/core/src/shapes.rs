//! Partitions, skew shapes, and the shape surgeries used by the expansion
//! formulas.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are dropped on construction, so `(0)` and `()` are the
/// same value. Ordering is by size first, then reverse lexicographic, which
/// is the canonical order used for every printed expansion.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        if parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The single row `(m)`.
    pub fn row(m: usize) -> Self {
        Partition::new(vec![m]).unwrap()
    }

    /// The single column `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition::new(vec![1; m]).unwrap()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn is_row(&self) -> bool {
        self.parts.len() <= 1
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Partition::new(parts).unwrap()
    }

    /// `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Boxes as 1-based `(row, column)` pairs, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// Hook lengths, in the order of [`Partition::boxes`].
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.boxes().map(|(r, c)| (self.part(r - 1) - c) + (conj.part(c - 1) - r) + 1).collect()
    }

    /// Componentwise intersection of diagrams.
    pub fn intersection(&self, other: &Partition) -> Partition {
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| *a.min(b)).collect();
        Partition::new(parts).unwrap()
    }

    /// Adds one box to each of the first `h` rows, treating absent rows as
    /// empty. The result is always a partition.
    pub fn add_column_strip(&self, h: usize) -> Partition {
        let len = self.len().max(h);
        let parts = (0..len).map(|i| self.part(i) + usize::from(i < h)).collect();
        Partition::new(parts).expect("adding a column strip keeps parts weakly decreasing")
    }

    /// The 1-based `(row, column)` corners whose removal leaves a partition.
    pub fn removable_corners(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i + 1, self.part(i)))
            .collect()
    }

    /// All partitions contained in `self`, in canonical order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        sub_rec(&self.parts, usize::MAX, &mut current, &mut out);
        out.sort();
        out
    }
}

fn sub_rec(bound: &[usize], cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let i = current.len();
    out.push(Partition::new(current.clone()).unwrap());
    if i == bound.len() {
        return;
    }
    for v in 1..=bound[i].min(cap) {
        current.push(v);
        sub_rec(bound, v, current, out);
        current.pop();
    }
}

/// Partitions of `n` with at most `max_len` parts, in canonical order
/// (reverse lexicographic).
pub fn partitions_of(n: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    part_rec(n, n, max_len, &mut current, &mut out);
    out
}

fn part_rec(remaining: usize, cap: usize, max_len: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(current.clone()).unwrap());
        return;
    }
    if current.len() == max_len {
        return;
    }
    for v in (1..=cap.min(remaining)).rev() {
        current.push(v);
        part_rec(remaining - v, v, max_len, current, out);
        current.pop();
    }
}

/// Every partition of size at most `max_size`, in canonical order.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|n| partitions_of(n, n)).collect()
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

/// Comma syntax: `3,1`. The empty partition is `""` or `"0"`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// Prints the comma syntax; the empty partition prints as `0`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let text: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemovalMode {
    Row,
    Column,
}

/// A skew diagram `outer / inner` stored as raw row lengths.
///
/// Shapes produced by box removal need not be valid; invalid shapes are
/// ordinary values that every counting routine maps to zero.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
    /// Set when a column removal produced a non-monotone column sequence,
    /// which row lengths cannot express.
    #[serde(skip)]
    broken: bool,
}

impl SkewShape {
    /// Builds a shape from raw row lengths; validity is not checked.
    pub fn from_rows(outer: Vec<usize>, inner: Vec<usize>) -> Self {
        let mut shape = SkewShape { outer, inner, broken: false };
        shape.trim();
        shape
    }

    pub fn new(outer: &Partition, inner: &Partition) -> Self {
        SkewShape::from_rows(outer.parts().to_vec(), inner.parts().to_vec())
    }

    pub fn straight(outer: &Partition) -> Self {
        SkewShape::new(outer, &Partition::empty())
    }

    fn trim(&mut self) {
        while self.outer.last() == Some(&0) {
            self.outer.pop();
        }
        while self.inner.last() == Some(&0) {
            self.inner.pop();
        }
    }

    pub fn outer_rows(&self) -> &[usize] {
        &self.outer
    }

    pub fn inner_rows(&self) -> &[usize] {
        &self.inner
    }

    /// Outer length of row `r` (1-based), zero past the end.
    pub fn outer_at(&self, r: usize) -> usize {
        self.outer.get(r - 1).copied().unwrap_or(0)
    }

    pub fn inner_at(&self, r: usize) -> usize {
        self.inner.get(r - 1).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn is_valid(&self) -> bool {
        !self.broken
            && self.outer.windows(2).all(|w| w[0] >= w[1])
            && self.inner.windows(2).all(|w| w[0] >= w[1])
            && (0..self.inner.len()).all(|i| self.inner[i] <= self.outer.get(i).copied().unwrap_or(0))
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// The outer and inner partitions, when valid.
    pub fn partitions(&self) -> Option<(Partition, Partition)> {
        if !self.is_valid() {
            return None;
        }
        Some((Partition::new(self.outer.clone()).ok()?, Partition::new(self.inner.clone()).ok()?))
    }

    /// Number of boxes; only meaningful for valid shapes.
    pub fn size(&self) -> usize {
        (1..=self.outer.len()).map(|r| self.outer_at(r).saturating_sub(self.inner_at(r))).sum()
    }

    /// Boxes as 1-based `(row, column)` in reading order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        (1..=self.outer.len())
            .flat_map(|r| (self.inner_at(r) + 1..=self.outer_at(r)).map(move |c| (r, c)))
            .collect()
    }

    pub fn contains_box(&self, r: usize, c: usize) -> bool {
        r >= 1 && c > self.inner_at(r) && c <= self.outer_at(r)
    }

    /// Removes the rightmost box of row `j` (row mode) or the lowest box of
    /// column `j` (column mode), if there is one. The result may be invalid.
    pub fn remove_box(&self, j: usize, mode: RemovalMode) -> SkewShape {
        match mode {
            RemovalMode::Row => {
                if j == 0 || self.outer_at(j) <= self.inner_at(j) {
                    return self.clone();
                }
                let mut out = self.clone();
                out.outer[j - 1] -= 1;
                out.trim();
                out
            }
            RemovalMode::Column => {
                let Some(r) = (1..=self.outer.len()).rev().find(|&r| self.contains_box(r, j)) else {
                    return self.clone();
                };
                if self.outer_at(r) == j {
                    return self.remove_box(r, RemovalMode::Row);
                }
                // the box is not at the end of its row: the remaining boxes
                // no longer form a skew diagram
                let mut out = self.clone();
                out.broken = true;
                out
            }
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.outer, self.inner)?;
        if !self.is_valid() {
            write!(f, " (invalid)")?;
        }
        Ok(())
    }
}

/// Result of the `mu^(p)` surgery: the new shape (or `None` when the column
/// sequence is not a partition), the pivot `a`, and the sign `(-1)^(a+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftResult {
    pub shape: Option<Partition>,
    pub pivot: usize,
    pub sign: i32,
}

/// Inserts a column of length `p + a - 1` at the pivot `a`, the first index
/// with `p >= mu'_a - a`. Columns left of the pivot shrink by one and those
/// right of it shift over by one.
pub fn mu_shift(mu: &Partition, p: i64) -> Result<ShiftResult, Error> {
    if p + (mu.size() as i64) < 0 {
        return Err(Error::Precondition(format!("mu_shift needs p + |mu| >= 0, got p = {p}, |mu| = {}", mu.size())));
    }
    let conj = mu.conjugate();
    let col = |i: usize| conj.part(i - 1) as i64;
    let pivot = (1..).find(|&i| p >= col(i) - i as i64).unwrap();
    let span = conj.len() + 1;
    let columns: Vec<i64> = (1..=span.max(pivot))
        .map(|i| match i.cmp(&pivot) {
            Ordering::Less => col(i) - 1,
            Ordering::Equal => p + pivot as i64 - 1,
            Ordering::Greater => col(i - 1),
        })
        .collect();
    let valid = columns.iter().all(|&c| c >= 0) && columns.windows(2).all(|w| w[0] >= w[1]);
    let shape = valid.then(|| {
        let cols = Partition::new(columns.iter().map(|&c| c as usize).collect()).unwrap();
        cols.conjugate()
    });
    let sign = if pivot % 2 == 1 { 1 } else { -1 };
    Ok(ShiftResult { shape, pivot, sign })
}
