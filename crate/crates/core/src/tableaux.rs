//! Semistandard and standard Young tableaux on (skew) shapes: enumeration in
//! a fixed canonical order, counting, parity tableaux, G-pairs, and the two
//! explicit bijections onto G-pairs.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::Error;
use crate::scalar::{binomial, factorial};
use crate::shapes::{Partition, RemovalMode, SkewShape};

/// A filling of a skew shape by positive integers.
///
/// `rows[r]` holds the entries of row `r + 1`, left to right, for the boxes
/// of the skew shape only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        let fits = (1..=shape.num_rows().max(rows.len())).all(|r| {
                let want = shape.outer_at(r).saturating_sub(shape.inner_at(r));
                rows.get(r - 1).map_or(0, Vec::len) == want
            });
        if !shape.is_valid() || !fits {
            return Err(Error::Precondition(format!("rows {rows:?} do not fill shape {shape:?}")));
        }
        let mut rows = rows;
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Ok(Tableau { shape, rows })
    }

    /// A straight-shape tableau read off its rows.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::new(SkewShape::straight(&shape), rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at 1-based `(row, column)`, if that box belongs to the shape.
    pub fn get(&self, r: usize, c: usize) -> Option<u32> {
        if !self.shape.contains_box(r, c) {
            return None;
        }
        self.rows.get(r - 1).map(|row| row[c - self.shape.inner_at(r) - 1])
    }

    /// `(row, column, entry)` in reading order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let start = self.shape.inner_at(i + 1);
            row.iter().enumerate().map(move |(j, &v)| (i + 1, start + j + 1, v))
        })
    }

    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.concat()
    }

    pub fn is_semistandard(&self) -> bool {
        self.entries().all(|(r, c, v)| {
            v >= 1
                && self.get(r, c + 1).is_none_or(|right| v <= right)
                && self.get(r + 1, c).is_none_or(|below| v < below)
        })
    }

    pub fn is_standard(&self) -> bool {
        let mut seen = self.reading_word();
        seen.sort_unstable();
        let distinct = seen.windows(2).all(|w| w[0] < w[1]);
        distinct
            && self.is_semistandard()
            && self.entries().all(|(r, c, v)| self.get(r, c + 1).is_none_or(|right| v < right))
    }

    /// Multiplicity of each label `1..=n`.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        let mut wt = vec![0; n];
        for (_, _, v) in self.entries() {
            wt[v as usize - 1] += 1;
        }
        wt
    }

    /// Entries of the first column, top to bottom (straight shapes).
    pub fn first_column(&self) -> Vec<u32> {
        (1..=self.shape.num_rows()).filter_map(|r| self.get(r, 1)).collect()
    }

    /// Row index of `label`, if present.
    pub fn row_of(&self, label: u32) -> Option<usize> {
        self.entries().find(|&(_, _, v)| v == label).map(|(r, _, _)| r)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Tableaux serialize as their row arrays.
impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

/// A pair `(S, T)` with `S` semistandard and `T` standard.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GPair {
    pub s: Tableau,
    pub t: Tableau,
}

impl Serialize for GPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GPair", 2)?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("t", &self.t)?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    Semistandard,
    Standard,
}

/// Depth-first enumeration of fillings in reading-word lexicographic order.
pub struct Fillings {
    shape: SkewShape,
    boxes: Vec<(usize, usize)>,
    /// index into `boxes` of the left and upper neighbours
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    lo: u32,
    hi: u32,
    rule: Rule,
    vals: Vec<u32>,
    started: bool,
    done: bool,
}

impl Fillings {
    fn new(shape: &SkewShape, lo: u32, hi: u32, rule: Rule) -> Self {
        let boxes = if shape.is_valid() { shape.boxes() } else { Vec::new() };
        let index: HashMap<(usize, usize), usize> = boxes.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let left = boxes.iter().map(|&(r, c)| index.get(&(r, c.wrapping_sub(1))).copied()).collect();
        let above = boxes.iter().map(|&(r, c)| index.get(&(r.wrapping_sub(1), c)).copied()).collect();
        Fillings {
            shape: shape.clone(),
            boxes,
            left,
            above,
            lo,
            hi,
            rule,
            vals: Vec::new(),
            started: false,
            done: !shape.is_valid(),
        }
    }

    fn candidate(&self, idx: usize, from: u32) -> Option<u32> {
        let mut min = from.max(self.lo);
        if let Some(l) = self.left[idx] {
            let bound = self.vals[l] + u32::from(self.rule == Rule::Standard);
            min = min.max(bound);
        }
        if let Some(a) = self.above[idx] {
            min = min.max(self.vals[a] + 1);
        }
        (min..=self.hi).find(|v| self.rule == Rule::Semistandard || !self.vals.contains(v))
    }

    fn advance(&mut self, mut bump: bool) -> bool {
        loop {
            if bump {
                let Some(v) = self.vals.pop() else { return false };
                let idx = self.vals.len();
                match self.candidate(idx, v + 1) {
                    Some(c) => {
                        self.vals.push(c);
                        bump = false;
                    }
                    None => continue,
                }
            }
            if self.vals.len() == self.boxes.len() {
                return true;
            }
            let idx = self.vals.len();
            match self.candidate(idx, self.lo) {
                Some(c) => self.vals.push(c),
                None => bump = true,
            }
        }
    }

    fn current(&self) -> Tableau {
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); self.shape.num_rows()];
        for (&(r, _), &v) in self.boxes.iter().zip(&self.vals) {
            rows[r - 1].push(v);
        }
        Tableau { shape: self.shape.clone(), rows: trim_rows(rows) }
    }
}

fn trim_rows(mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    rows
}

impl Iterator for Fillings {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let found = self.advance(self.started);
        self.started = true;
        if found {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// Semistandard tableaux of `shape` with entries in `[lo, hi]`.
pub fn enumerate_ssyt(shape: &SkewShape, lo: u32, hi: u32) -> Fillings {
    Fillings::new(shape, lo.max(1), hi, Rule::Semistandard)
}

/// Standard tableaux of `shape` with distinct labels drawn from `[n]`.
pub fn enumerate_syt(shape: &SkewShape, n: u32) -> Fillings {
    Fillings::new(shape, 1, n, Rule::Standard)
}

thread_local! {
    static SKEW_SYT: RefCell<HashMap<(Vec<usize>, Vec<usize>), BigInt>> = RefCell::new(HashMap::new());
}

/// `f^{shape}`: standard fillings using exactly the labels `1..=|shape|`.
pub fn f_count(shape: &SkewShape) -> BigInt {
    if !shape.is_valid() {
        return BigInt::zero();
    }
    if shape.is_straight() {
        let outer = Partition::new(shape.outer_rows().to_vec()).unwrap();
        return hook_length(&outer);
    }
    skew_f(shape)
}

/// Hook length formula.
pub fn hook_length(shape: &Partition) -> BigInt {
    let hooks: BigInt = shape.hooks().into_iter().map(BigInt::from).product();
    factorial(shape.size()) / hooks
}

fn skew_f(shape: &SkewShape) -> BigInt {
    if !shape.is_valid() {
        return BigInt::zero();
    }
    if shape.size() == 0 {
        return BigInt::one();
    }
    let key = (shape.outer_rows().to_vec(), shape.inner_rows().to_vec());
    if let Some(hit) = SKEW_SYT.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    // the largest label sits at the end of some row
    let total: BigInt = (1..=shape.num_rows())
        .map(|j| shape.remove_box(j, RemovalMode::Row))
        .filter(|s| s != shape)
        .map(|s| skew_f(&s))
        .sum();
    SKEW_SYT.with(|m| m.borrow_mut().insert(key, total.clone()));
    total
}

/// `f^{shape, n}`: standard fillings with labels from `[n]`.
pub fn count_syt(shape: &SkewShape, n: usize) -> BigInt {
    if !shape.is_valid() {
        return BigInt::zero();
    }
    binomial(n as i64, shape.size() as i64) * f_count(shape)
}

/// Semistandard fillings with entries in `[lo, hi]`. Straight shapes use the
/// hook-content formula; skew shapes a horizontal-strip recursion.
pub fn count_ssyt(shape: &SkewShape, lo: u32, hi: u32) -> BigInt {
    if !shape.is_valid() {
        return BigInt::zero();
    }
    let letters = if hi >= lo { (hi - lo + 1) as i64 } else { 0 };
    if shape.is_straight() {
        let outer = Partition::new(shape.outer_rows().to_vec()).unwrap();
        return hook_content(&outer, letters);
    }
    horizontal_strip_count(shape, letters as usize)
}

/// Hook-content formula for `|SSYT(shape, m letters)|`.
pub fn hook_content(shape: &Partition, letters: i64) -> BigInt {
    let mut num = BigInt::one();
    for (r, c) in shape.boxes() {
        let factor = letters + c as i64 - r as i64;
        if factor <= 0 {
            return BigInt::zero();
        }
        num *= BigInt::from(factor);
    }
    let den: BigInt = shape.hooks().into_iter().map(BigInt::from).product();
    num / den
}

fn horizontal_strip_count(shape: &SkewShape, letters: usize) -> BigInt {
    let outer = shape.outer_rows().to_vec();
    let rows = outer.len();
    let pad = |v: &[usize]| (0..rows).map(|i| v.get(i).copied().unwrap_or(0)).collect::<Vec<_>>();
    let mut states: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    states.insert(pad(shape.inner_rows()), BigInt::one());
    for _ in 0..letters {
        let mut next: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (nu, ways) in &states {
            let mut rho = nu.clone();
            strips(nu, &outer, 0, &mut rho, &mut |r| {
                *next.entry(r.to_vec()).or_insert_with(BigInt::zero) += ways;
            });
        }
        states = next;
    }
    states.get(&outer).cloned().unwrap_or_else(BigInt::zero)
}

/// Calls `emit` for every `rho` with `nu ⊆ rho ⊆ outer` and `rho / nu` a
/// horizontal strip.
fn strips(nu: &[usize], outer: &[usize], i: usize, rho: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if i == nu.len() {
        emit(rho);
        return;
    }
    let cap = if i == 0 { outer[0] } else { outer[i].min(nu[i - 1]) };
    for v in nu[i]..=cap {
        rho[i] = v;
        strips(nu, outer, i + 1, rho, emit);
    }
    rho[i] = nu[i];
}

/// The smallest label of `[n]` missing from the first column, or `n + 1`
/// when the first column holds all of `[n]`.
pub fn smallest_absent_label(t: &Tableau, n: u32) -> u32 {
    let column = t.first_column();
    (1..=n).find(|v| !column.contains(v)).unwrap_or(n + 1)
}

/// Standard tableaux of shape `mu` over `[n]` whose smallest label absent
/// from the first column is odd.
pub fn parity_tableaux(mu: &Partition, n: u32) -> impl Iterator<Item = Tableau> {
    enumerate_syt(&SkewShape::straight(mu), n).filter(move |t| smallest_absent_label(t, n) % 2 == 1)
}

/// The G-condition: whenever `i` sits in row `r` of `t`, the `i`-th smallest
/// entry of `s` exceeds `r`. Ties among equal entries of `s` are ordered
/// lower row first-larger, then further-right column larger.
pub fn is_g_pair(s: &Tableau, t: &Tableau) -> bool {
    let mut ordered: Vec<(u32, usize, usize)> = s.entries().map(|(r, c, v)| (v, r, c)).collect();
    if ordered.len() != t.entries().count() {
        return false;
    }
    ordered.sort_unstable();
    t.entries().all(|(r, _, i)| {
        let idx = i as usize;
        idx >= 1 && idx <= ordered.len() && ordered[idx - 1].0 as usize > r
    })
}

/// All pairs in `G(lam, mu, n)`, grouped by the standard tableau.
pub fn g_pairs(lam: &SkewShape, mu: &SkewShape, n: u32) -> Result<impl Iterator<Item = GPair>, Error> {
    if lam.is_valid() && mu.is_valid() && lam.size() != mu.size() {
        return Err(Error::Precondition(format!("G-pairs need equal sizes, got {lam:?} and {mu:?}")));
    }
    let lam = lam.clone();
    let k = if mu.is_valid() { mu.size() as u32 } else { 0 };
    Ok(enumerate_syt(mu, k).flat_map(move |t| {
        let probe = t.clone();
        enumerate_ssyt(&lam, 1, n)
            .filter(move |s| is_g_pair(s, &probe))
            .map(move |s| GPair { s, t: t.clone() })
    }))
}

/// Relabels the entries of `rows` by their rank among all entries.
fn standardize(rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut all: Vec<u32> = rows.concat();
    all.sort_unstable();
    rows.iter()
        .map(|row| row.iter().map(|v| all.binary_search(v).unwrap() as u32 + 1).collect())
        .collect()
}

/// Sends a standard tableau of shape `mu + (1^{n-1})` to the pair
/// `(S', T)`: the gaps between consecutive first-column labels give the
/// multiplicities in the one-row `S'`, and `T` standardizes the remaining
/// columns.
pub fn rowcase_bijection(t: &Tableau, n: u32) -> Result<GPair, Error> {
    let bad = || Error::Precondition(format!("{t:?} is not standard of shape mu + (1^{})", n.saturating_sub(1)));
    if n == 0 || !t.shape().is_straight() || !t.is_standard() {
        return Err(bad());
    }
    let total = t.shape().size() as u32;
    let mut labels = t.reading_word();
    labels.sort_unstable();
    if labels != (1..=total).collect::<Vec<_>>() || t.shape().num_rows() != (n - 1) as usize {
        return Err(bad());
    }
    let mut marks = t.first_column();
    marks.push(total + 1);
    let mut s_row = Vec::new();
    for i in 2..=n {
        let gap = marks[i as usize - 1] - marks[i as usize - 2] - 1;
        s_row.extend(std::iter::repeat_n(i, gap as usize));
    }
    let rest: Vec<Vec<u32>> = t.rows().iter().map(|row| row[1..].to_vec()).collect();
    let t_rows = trim_rows(standardize(&rest));
    Ok(GPair { s: Tableau::from_rows(trim_rows(vec![s_row]))?, t: Tableau::from_rows(t_rows)? })
}

/// Inverse of [`rowcase_bijection`].
pub fn rowcase_bijection_inverse(pair: &GPair, n: u32) -> Result<Tableau, Error> {
    let bad = || Error::Precondition(format!("{pair:?} is not in G((k), mu, {n})"));
    let s = &pair.s;
    let t = &pair.t;
    if n == 0 || !s.shape().is_straight() || s.rows().len() > 1 || !t.shape().is_straight() || !t.is_standard() {
        return Err(bad());
    }
    let mu_len = t.rows().len();
    if mu_len > (n - 1) as usize || !is_g_pair(s, t) {
        return Err(bad());
    }
    let word = s.reading_word();
    if word.iter().any(|&v| v < 2 || v > n) {
        return Err(bad());
    }
    let mut marks = vec![1u32];
    for i in 2..n {
        let count = word.iter().filter(|&&v| v == i).count() as u32;
        marks.push(marks.last().unwrap() + count + 1);
    }
    let total = word.len() as u32 + n - 1;
    let rest: Vec<u32> = (1..=total).filter(|v| !marks.contains(v)).collect();
    let rows: Vec<Vec<u32>> = (0..(n - 1) as usize)
        .map(|r| {
            let mut row = vec![marks[r]];
            if let Some(trow) = t.rows().get(r) {
                row.extend(trow.iter().map(|&j| rest[j as usize - 1]));
            }
            row
        })
        .collect();
    let out = Tableau::from_rows(rows).map_err(|_| bad())?;
    if out.is_standard() {
        Ok(out)
    } else {
        Err(bad())
    }
}

fn column_tableau(k: usize) -> Tableau {
    Tableau::from_rows((1..=k as u32).map(|i| vec![i]).collect()).unwrap()
}

/// Whether `s` is a one-row tableau over `[n]` with first entry above 1 and
/// no adjacent pair equal to `(p + i, p + i)`.
pub fn is_forbidden_pair_free(s: &[u32], p: u32) -> bool {
    s.windows(2).enumerate().all(|(i, w)| !(w[0] == w[1] && w[0] == p + i as u32 + 1))
}

fn reflect(row: &[u32], p: u32) -> Vec<u32> {
    // a = max{i : row_i <= p + i - 1}
    let a = (1..=row.len()).rev().find(|&i| row[i - 1] < p + i as u32);
    match a {
        None => row.to_vec(),
        Some(a) => (1..=row.len())
            .map(|i| if i > a { row[i - 1] } else { p + a as u32 + 1 - row[a - i] })
            .collect(),
    }
}

/// Maps a one-row `S` (first entry above 1, no adjacent `(p+i, p+i)`) to the
/// pair `(S', T)` in `G((k), (1^k), n)` by reversing and reflecting the
/// prefix up to the last index with `S(1,i) <= p + i - 1`.
pub fn rowcolumn_bijection(s: &Tableau, p: u32, n: u32) -> Result<GPair, Error> {
    let word = s.reading_word();
    let k = word.len() as u32;
    let ok = s.shape().is_straight()
        && s.rows().len() <= 1
        && s.is_semistandard()
        && word.iter().all(|&v| v >= 2 && v <= n)
        && p >= 1
        && p + k <= n + 1
        && is_forbidden_pair_free(&word, p);
    if !ok {
        return Err(Error::Precondition(format!("{s:?} is not a valid input for p = {p}, n = {n}")));
    }
    let image = reflect(&word, p);
    Ok(GPair { s: Tableau::from_rows(trim_rows(vec![image]))?, t: column_tableau(word.len()) })
}

/// Inverse of [`rowcolumn_bijection`].
pub fn rowcolumn_bijection_inverse(pair: &GPair, p: u32, n: u32) -> Result<Tableau, Error> {
    let word = pair.s.reading_word();
    let k = word.len();
    let ok = pair.s.shape().is_straight()
        && pair.s.rows().len() <= 1
        && pair.s.is_semistandard()
        && pair.t == column_tableau(k)
        && word.iter().all(|&v| v <= n)
        && is_g_pair(&pair.s, &pair.t)
        && p >= 1
        && p as usize + k <= n as usize + 1;
    if !ok {
        return Err(Error::Precondition(format!("{pair:?} is not in G((k), (1^k), {n})")));
    }
    Tableau::from_rows(trim_rows(vec![reflect(&word, p)]))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn straight(s: &str) -> SkewShape {
        SkewShape::straight(&p(s))
    }

    #[test]
    fn small_ssyt_counts() {
        assert_eq!(enumerate_ssyt(&straight("1,1"), 1, 3).count(), 3);
        assert_eq!(enumerate_ssyt(&straight("2"), 1, 3).count(), 6);
        assert_eq!(enumerate_ssyt(&straight("1,1"), 2, 3).count(), 1);
        assert_eq!(enumerate_ssyt(&straight(""), 1, 3).count(), 1);
        assert_eq!(enumerate_ssyt(&straight("1,1,1"), 1, 2).count(), 0);
    }

    #[test]
    fn small_syt_counts() {
        assert_eq!(enumerate_syt(&straight("1"), 2).count(), 2);
        assert_eq!(enumerate_syt(&straight("3,3"), 6).count(), 5);
        let skew = SkewShape::new(&p("2,2"), &p("1"));
        assert_eq!(enumerate_syt(&skew, 3).count(), 2);
        assert_eq!(count_syt(&skew, 3), BigInt::from(2));
        assert_eq!(count_syt(&straight("3,3"), 6), BigInt::from(5));
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let words: Vec<Vec<u32>> = enumerate_ssyt(&straight("2,1"), 1, 3).map(|t| t.reading_word()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert_eq!(words.first().unwrap(), &vec![1, 1, 2]);
    }

    #[test]
    fn invalid_shapes_are_empty() {
        let bad = SkewShape::from_rows(vec![1, 2], vec![]);
        assert_eq!(enumerate_ssyt(&bad, 1, 3).count(), 0);
        assert_eq!(count_syt(&bad, 3), BigInt::zero());
        assert_eq!(count_ssyt(&bad, 1, 3), BigInt::zero());
    }

    #[test]
    fn column_ssyt_is_binomial() {
        for n in 0..7 {
            assert_eq!(count_ssyt(&straight("1,1"), 1, n), binomial(n as i64, 2));
        }
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_tableaux(&p("1,1"), 3).count(), 2);
        assert_eq!(parity_tableaux(&p("2"), 3).count(), 1);
        for n in 1..7u32 {
            let expected = usize::from(n % 2 == 0);
            assert_eq!(parity_tableaux(&Partition::column(n as usize), n).count(), expected, "n = {n}");
        }
    }

    #[test]
    fn g_pair_examples() {
        assert_eq!(g_pairs(&straight("4"), &straight("2,2"), 3).unwrap().count(), 5);
        assert_eq!(g_pairs(&straight("2"), &straight("2"), 3).unwrap().count(), 3);
        assert!(g_pairs(&straight("2"), &straight("1"), 3).is_err());
    }

    #[test]
    fn listed_g_pairs_in_order() {
        let got: Vec<(Vec<u32>, Vec<Vec<u32>>)> = g_pairs(&straight("4"), &straight("2,2"), 3)
            .unwrap()
            .map(|g| (g.s.reading_word(), g.t.rows().to_vec()))
            .collect();
        let t1 = vec![vec![1, 2], vec![3, 4]];
        let t2 = vec![vec![1, 3], vec![2, 4]];
        let want = vec![
            (vec![2, 2, 3, 3], t1.clone()),
            (vec![2, 3, 3, 3], t1.clone()),
            (vec![3, 3, 3, 3], t1),
            (vec![2, 3, 3, 3], t2.clone()),
            (vec![3, 3, 3, 3], t2),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn rowcase_bijection_matches_listing() {
        let shapes = [
            vec![vec![1, 2, 3], vec![4, 5, 6]],
            vec![vec![1, 2, 4], vec![3, 5, 6]],
            vec![vec![1, 3, 4], vec![2, 5, 6]],
            vec![vec![1, 2, 5], vec![3, 4, 6]],
            vec![vec![1, 3, 5], vec![2, 4, 6]],
        ];
        let pairs: Vec<GPair> = g_pairs(&straight("4"), &straight("2,2"), 3).unwrap().collect();
        for (rows, pair) in shapes.iter().zip(&pairs) {
            let t = Tableau::from_rows(rows.clone()).unwrap();
            let image = rowcase_bijection(&t, 3).unwrap();
            assert_eq!(&image, pair);
            assert_eq!(rowcase_bijection_inverse(&image, 3).unwrap(), t);
        }
    }

    #[test]
    fn rowcase_bijection_rejects_other_shapes() {
        let t = Tableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        assert!(rowcase_bijection(&t, 2).is_err());
        assert!(rowcase_bijection(&t, 3).is_ok());
        let empty = Tableau::from_rows(vec![]).unwrap();
        let pair = rowcase_bijection(&empty, 1).unwrap();
        assert_eq!(rowcase_bijection_inverse(&pair, 1).unwrap(), empty);
    }

    #[test]
    fn rowcolumn_table_for_p2() {
        let table = [
            ([2, 2, 2], [4, 4, 4]),
            ([2, 2, 3], [3, 4, 4]),
            ([2, 2, 4], [2, 4, 4]),
            ([2, 3, 3], [3, 3, 4]),
            ([2, 3, 4], [2, 3, 4]),
        ];
        for (src, dst) in table {
            let s = Tableau::from_rows(vec![src.to_vec()]).unwrap();
            let pair = rowcolumn_bijection(&s, 2, 4).unwrap();
            assert_eq!(pair.s.reading_word(), dst.to_vec());
            assert_eq!(rowcolumn_bijection_inverse(&pair, 2, 4).unwrap(), s);
        }
    }

    #[test]
    fn rowcolumn_identity_for_p1() {
        let inputs: Vec<Tableau> = enumerate_ssyt(&straight("3"), 2, 4)
            .filter(|s| is_forbidden_pair_free(&s.reading_word(), 1))
            .collect();
        let words: Vec<Vec<u32>> = inputs.iter().map(Tableau::reading_word).collect();
        assert_eq!(words, vec![vec![2, 3, 4], vec![2, 4, 4], vec![3, 3, 4], vec![3, 4, 4], vec![4, 4, 4]]);
        for s in &inputs {
            assert_eq!(rowcolumn_bijection(s, 1, 4).unwrap().s, *s);
        }
    }

    #[test]
    fn rowcolumn_rejects_bad_inputs() {
        let s = Tableau::from_rows(vec![vec![1, 3]]).unwrap();
        assert!(rowcolumn_bijection(&s, 1, 4).is_err());
        let s = Tableau::from_rows(vec![vec![2, 2]]).unwrap();
        assert!(rowcolumn_bijection(&s, 1, 4).is_err());
        assert!(rowcolumn_bijection(&s, 2, 4).is_ok());
        assert!(rowcolumn_bijection(&s, 4, 4).is_err());
    }

    #[test]
    fn streams_are_valid_and_distinct() {
        let shapes = [straight("2,1"), straight("3,2"), SkewShape::new(&p("3,2,1"), &p("1,1"))];
        for shape in &shapes {
            let all: Vec<Tableau> = enumerate_ssyt(shape, 1, 4).collect();
            assert!(all.iter().all(Tableau::is_semistandard));
            let set: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            let syt: Vec<Tableau> = enumerate_syt(shape, 6).collect();
            assert!(syt.iter().all(Tableau::is_standard));
        }
    }

    #[test]
    fn json_is_row_arrays() {
        let t = Tableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,2],[3]]");
        let shape = SkewShape::new(&p("2,1"), &p("1"));
        assert_eq!(serde_json::to_string(&shape).unwrap(), r#"{"outer":[2,1],"inner":[1]}"#);
    }
}
