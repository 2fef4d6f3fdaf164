//! Chain complexes of injective words decorated with sequences, their exact
//! homology, symmetric group characters on the top homology, and Frobenius
//! characteristics.
//!
//! `C_i(A, M)` has basis the pairs `(w, S)` with `w` an injective word of
//! length `i` over `A` and `S` a length-`i` sequence over `M`, nondecreasing
//! for the column complex and strictly increasing for the row complex. The
//! boundary deletes position `l` from both with sign `(-1)^{l-1}`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::linalg::{kernel, rank, SparseMatrix};
use crate::scalar::{binomial, factorial, falling};
use crate::shapes::{partitions_of, Partition, SkewShape};
use crate::sympoly::{expand_schur, power_sum, SchurExpansion, SparsePoly};
use crate::tableaux::f_count;

type Expansion = SchurExpansion<BigInt>;

/// The prime used for the rank pre-pass, `2^61 - 1`.
pub const RANK_PRIME: u64 = (1 << 61) - 1;

/// Largest matrix side eliminated densely when the modular pass cannot
/// certify the ranks.
pub const DENSE_GUARD: usize = 1200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    /// Nondecreasing sequences; the symmetric group acts with a sign.
    Column,
    /// Strictly increasing sequences; no sign in the action.
    Row,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BasisElement {
    pub word: Vec<u32>,
    pub seq: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct ChainComplex {
    kind: ComplexKind,
    alphabet: Vec<u32>,
    marks: Vec<u32>,
    bases: Vec<Vec<BasisElement>>,
    /// `boundaries[i]` is `∂_i : C_i -> C_{i-1}`; entry 0 is the empty map.
    boundaries: Vec<SparseMatrix>,
}

/// Number of length-`i` sequences over `m` marks of the given kind.
pub fn sequence_count(kind: ComplexKind, m: usize, i: usize) -> BigInt {
    match kind {
        ComplexKind::Column => binomial((m + i) as i64 - 1, i as i64),
        ComplexKind::Row => binomial(m as i64, i as i64),
    }
}

/// `dim C_i(A, M)` without building anything.
pub fn chain_dims(kind: ComplexKind, a: usize, m: usize) -> Vec<BigInt> {
    (0..=a).map(|i| falling(a, i) * sequence_count(kind, m, i)).collect()
}

fn words(alphabet: &[u32], len: usize) -> Vec<Vec<u32>> {
    fn rec(alphabet: &[u32], len: usize, used: &mut Vec<bool>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for (j, &a) in alphabet.iter().enumerate() {
            if !used[j] {
                used[j] = true;
                cur.push(a);
                rec(alphabet, len, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(alphabet, len, &mut vec![false; alphabet.len()], &mut Vec::new(), &mut out);
    out
}

fn sequences(kind: ComplexKind, marks: &[u32], len: usize) -> Vec<Vec<u32>> {
    fn rec(kind: ComplexKind, marks: &[u32], from: usize, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for j in from..marks.len() {
            cur.push(marks[j]);
            let next = if kind == ComplexKind::Column { j } else { j + 1 };
            rec(kind, marks, next, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(kind, marks, 0, len, &mut Vec::new(), &mut out);
    out
}

impl ChainComplex {
    /// Builds the complex on `alphabet` and `marks` (each sorted and
    /// deduplicated first). Refuses when `Σ dim C_i` exceeds `guard`.
    pub fn build(kind: ComplexKind, alphabet: &[u32], marks: &[u32], guard: usize) -> Result<Self, Error> {
        let mut alphabet = alphabet.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        let mut marks = marks.to_vec();
        marks.sort_unstable();
        marks.dedup();
        if alphabet.is_empty() || marks.is_empty() {
            return Err(Error::Precondition("alphabet and mark sets must be nonempty".into()));
        }
        let total: BigInt = chain_dims(kind, alphabet.len(), marks.len()).into_iter().sum();
        if total > BigInt::from(guard) {
            let dim = total.to_usize().unwrap_or(usize::MAX);
            return Err(Error::Guard { what: "chain complex".into(), dim, guard });
        }
        let k = alphabet.len();
        let bases: Vec<Vec<BasisElement>> = (0..=k)
            .map(|i| {
                let seqs = sequences(kind, &marks, i);
                words(&alphabet, i)
                    .into_iter()
                    .flat_map(|word| seqs.iter().map(move |seq| BasisElement { word: word.clone(), seq: seq.clone() }))
                    .collect()
            })
            .collect();
        let mut boundaries = vec![SparseMatrix::zero(0, 1)];
        for i in 1..=k {
            let index: HashMap<&BasisElement, usize> = bases[i - 1].iter().enumerate().map(|(j, b)| (b, j)).collect();
            let mut d = SparseMatrix::zero(bases[i - 1].len(), bases[i].len());
            for (col, b) in bases[i].iter().enumerate() {
                let mut entries: Vec<(usize, i64)> = (0..i)
                    .map(|l| {
                        let mut face = b.clone();
                        face.word.remove(l);
                        face.seq.remove(l);
                        (index[&face], if l % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                entries.sort_unstable();
                d.columns[col] = entries;
            }
            boundaries.push(d);
        }
        let c = ChainComplex { kind, alphabet, marks, bases, boundaries };
        for i in 1..k {
            assert!(c.boundaries[i].mul(&c.boundaries[i + 1]).is_zero(), "boundary squares to nonzero in degree {i}");
        }
        Ok(c)
    }

    /// The complex on `A = [a]`, `M = [m]`.
    pub fn standard(kind: ComplexKind, a: usize, m: usize, guard: usize) -> Result<Self, Error> {
        let alphabet: Vec<u32> = (1..=a as u32).collect();
        let marks: Vec<u32> = (1..=m as u32).collect();
        ChainComplex::build(kind, &alphabet, &marks, guard)
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn alphabet(&self) -> &[u32] {
        &self.alphabet
    }

    pub fn marks(&self) -> &[u32] {
        &self.marks
    }

    /// Top degree `k = |A|`.
    pub fn top(&self) -> usize {
        self.alphabet.len()
    }

    pub fn basis(&self, i: usize) -> &[BasisElement] {
        &self.bases[i]
    }

    pub fn boundary(&self, i: usize) -> &SparseMatrix {
        &self.boundaries[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims().iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

/// How the boundary ranks were established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankCertificate {
    /// Modular ranks made every lower homology group vanish; since rational
    /// ranks dominate modular ones and `rank ∂_i + rank ∂_{i+1} <= dim C_i`,
    /// they are the rational ranks.
    ModularSandwich,
    /// Fraction-free elimination over the integers.
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Homology {
    pub dims: Vec<usize>,
    /// `ranks[i] = rank ∂_i`, with `ranks[0] = 0`.
    pub ranks: Vec<usize>,
    pub homology: Vec<usize>,
    pub certificate: RankCertificate,
}

impl Homology {
    pub fn vanishes_below_top(&self) -> bool {
        self.homology[..self.homology.len() - 1].iter().all(|&h| h == 0)
    }

    pub fn top(&self) -> usize {
        *self.homology.last().unwrap()
    }
}

fn homology_from_ranks(dims: &[usize], ranks: &[usize]) -> Option<Vec<usize>> {
    (0..dims.len())
        .map(|i| {
            let next = ranks.get(i + 1).copied().unwrap_or(0);
            dims[i].checked_sub(ranks[i] + next)
        })
        .collect()
}

/// Exact `dim H_i` for every degree.
pub fn homology_dims(c: &ChainComplex) -> Result<Homology, Error> {
    let dims = c.dims();
    let k = c.top();
    let mut ranks = vec![0];
    ranks.extend((1..=k).map(|i| c.boundary(i).rank_mod(RANK_PRIME)));
    let modular = homology_from_ranks(&dims, &ranks).expect("modular ranks respect ∂∂ = 0");
    if modular[..k].iter().all(|&h| h == 0) {
        return Ok(Homology { dims, ranks, homology: modular, certificate: RankCertificate::ModularSandwich });
    }
    let mut exact = vec![0];
    for i in 1..=k {
        let d = c.boundary(i);
        let side = d.nrows.max(d.ncols);
        if side > DENSE_GUARD {
            return Err(Error::Guard { what: format!("dense elimination of the degree-{i} boundary"), dim: side, guard: DENSE_GUARD });
        }
        exact.push(rank(&d.to_dense::<BigInt>()));
    }
    let homology = homology_from_ranks(&dims, &exact).expect("exact ranks respect ∂∂ = 0");
    Ok(Homology { dims, ranks: exact, homology, certificate: RankCertificate::Exact })
}

/// A conjugacy class of the symmetric group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    pub rho: Partition,
    /// Centralizer order `z_ρ = Π i^{m_i} m_i!`.
    pub z: BigInt,
}

impl CycleType {
    pub fn new(rho: Partition) -> Self {
        let mut z = BigInt::one();
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &part in rho.parts() {
            *counts.entry(part).or_default() += 1;
        }
        for (&part, &m) in &counts {
            z *= BigInt::from(part).pow(m as u32) * factorial(m);
        }
        CycleType { rho, z }
    }

    /// All classes of `S_k`, in canonical partition order.
    pub fn all(k: usize) -> Vec<CycleType> {
        partitions_of(k, k).into_iter().map(CycleType::new).collect()
    }

    /// Class size `k! / z_ρ`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.rho.size()) / &self.z
    }

    pub fn sign(&self) -> i64 {
        let even = self.rho.parts().iter().filter(|&&p| p % 2 == 0).count();
        if even % 2 == 0 { 1 } else { -1 }
    }

    pub fn fixed_points(&self) -> usize {
        self.rho.parts().iter().filter(|&&p| p == 1).count()
    }

    /// A permutation of `0..k` of this type: consecutive blocks cycled.
    pub fn representative(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.rho.size());
        let mut start = 0;
        for &part in self.rho.parts() {
            for j in 0..part {
                perm.push(start + (j + 1) % part);
            }
            start += part;
        }
        perm
    }
}

fn check_class(c: &ChainComplex, rho: &CycleType) -> Result<(), Error> {
    if rho.rho.size() != c.top() {
        return Err(Error::Precondition(format!("cycle type {} does not act on {} letters", rho.rho, c.top())));
    }
    Ok(())
}

fn action_sign(kind: ComplexKind, rho: &CycleType) -> i64 {
    match kind {
        ComplexKind::Column => rho.sign(),
        ComplexKind::Row => 1,
    }
}

/// Character of the top homology at `rho` by the Hopf trace formula. Only
/// meaningful once the lower homology is known to vanish.
pub fn character_hopf(c: &ChainComplex, rho: &CycleType) -> Result<BigInt, Error> {
    check_class(c, rho)?;
    let k = c.top();
    let fixed = rho.fixed_points();
    let sign = BigInt::from(action_sign(c.kind, rho));
    let mut total = BigInt::zero();
    for i in 0..=k.min(fixed) {
        let trace = &sign * falling(fixed, i) * sequence_count(c.kind, c.marks.len(), i);
        if i % 2 == 0 {
            total += trace;
        } else {
            total -= trace;
        }
    }
    Ok(if k % 2 == 0 { total } else { -total })
}

/// Largest `dim C_k` for which [`character_direct`] will run.
pub const DIRECT_GUARD: usize = 2000;

/// Trace of a representative of `rho` on `H_k = ker ∂_k`, from an explicit
/// kernel basis.
pub fn character_direct(c: &ChainComplex, rho: &CycleType) -> Result<BigInt, Error> {
    check_class(c, rho)?;
    let k = c.top();
    let top = c.basis(k);
    if top.len() > DIRECT_GUARD {
        return Err(Error::Guard { what: "top chain group".into(), dim: top.len(), guard: DIRECT_GUARD });
    }
    let d: Vec<Vec<BigRational>> = c.boundary(k).to_dense::<BigInt>().into_iter()
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let ker = kernel(&d, top.len());
    let perm = rho.representative();
    let index: HashMap<&BasisElement, usize> = top.iter().enumerate().map(|(j, b)| (b, j)).collect();
    // preimage[j]: the basis element sent to j by the permutation
    let mut preimage = vec![0; top.len()];
    for (j, b) in top.iter().enumerate() {
        let moved = BasisElement {
            word: b.word.iter().map(|&w| c.alphabet[perm[c.alphabet.binary_search(&w).unwrap()]]).collect(),
            seq: b.seq.clone(),
        };
        preimage[index[&moved]] = j;
    }
    let sign = BigRational::from_integer(BigInt::from(action_sign(c.kind, rho)));
    let mut trace = BigRational::zero();
    for (f, v) in ker.free.iter().zip(&ker.vectors) {
        trace += &sign * &v[preimage[*f]];
    }
    assert!(trace.is_integer(), "character value {trace} is not an integer");
    Ok(trace.to_integer())
}

/// `Σ_ρ χ(ρ) p_ρ / z_ρ` in `k` variables, Schur-expanded.
pub fn frobenius_from_character(k: usize, chi: impl Fn(&CycleType) -> BigInt) -> Expansion {
    let mut poly = SparsePoly::<BigInt>::zero(k);
    for class in CycleType::all(k) {
        let mut p_rho = SparsePoly::one(k);
        for &part in class.rho.parts() {
            p_rho = &p_rho * &power_sum(part as u32, k);
        }
        poly.add_scaled(&p_rho, &(chi(&class) * class.class_size()));
    }
    let kfact = factorial(k);
    let divided = poly.map(|c| {
        assert!((c % &kfact).is_zero(), "class sum {c} not divisible by {kfact}");
        c / &kfact
    });
    expand_schur(&divided).expect("a class function gives a symmetric polynomial")
}

/// Frobenius characteristic of the top homology via the Hopf trace. Errors
/// when some lower homology group is nonzero.
pub fn frobenius_ch(c: &ChainComplex, h: &Homology) -> Result<Expansion, Error> {
    if !h.vanishes_below_top() {
        return Err(Error::LowerHomology(h.homology.clone()));
    }
    Ok(frobenius_from_character(c.top(), |rho| character_hopf(c, rho).expect("class matches the alphabet")))
}

/// `Σ_i (-1)^{k-i} weight(i) s_{base(k-i)} s_1^i` in `k` variables, through
/// `s_ν s_1^i = Σ_μ f^{μ/ν} s_μ`.
fn pieri_sum(k: usize, weight: impl Fn(usize) -> BigInt, base: impl Fn(usize) -> Partition) -> Expansion {
    let mut out = SchurExpansion::zero(k);
    for mu in partitions_of(k, k) {
        let mut c = BigInt::zero();
        for i in 0..=k {
            let nu = base(k - i);
            let term = weight(i) * f_count(&SkewShape::new(&mu, &nu));
            if (k - i) % 2 == 0 {
                c += term;
            } else {
                c -= term;
            }
        }
        out.add(mu, c);
    }
    out
}

/// `c_{n,k} = Σ_i (-1)^{k-i} C(n-k+i, i) s_{(1^{k-i})} s_1^i`.
pub fn c_nk(n: usize, k: usize) -> Result<Expansion, Error> {
    if k == 0 || n < k {
        return Err(Error::Precondition(format!("c_(n,k) needs n >= k >= 1, got n={n}, k={k}")));
    }
    Ok(pieri_sum(k, |i| binomial((n - k + i) as i64, i as i64), Partition::column))
}

/// `r_{n,k} = Σ_i (-1)^{k-i} C(n+k-1, i) s_{(k-i)} s_1^i`.
pub fn r_nk(n: usize, k: usize) -> Result<Expansion, Error> {
    if k == 0 || n == 0 {
        return Err(Error::Precondition(format!("r_(n,k) needs n, k >= 1, got n={n}, k={k}")));
    }
    Ok(pieri_sum(k, |i| binomial((n + k - 1) as i64, i as i64), Partition::row))
}

/// What a vanishing check concluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VanishingStatus {
    /// Lower homology vanishes, as proved for the column complex or as
    /// conjectured for the row complex within range.
    Vanishes,
    /// Column complex with nonzero lower homology: contradicts the proved vanishing.
    Contradiction,
    /// Row complex with `|M| < 2|A| - 1`; no claim is made there.
    OutsideConjectureRange,
    /// Row complex in range with nonzero lower homology.
    CounterexampleCandidate,
}

#[derive(Debug, Clone, Serialize)]
pub struct VanishingReport {
    pub kind: ComplexKind,
    #[serde(rename = "A")]
    pub a: Vec<u32>,
    #[serde(rename = "M")]
    pub m: Vec<u32>,
    pub dims: Vec<usize>,
    pub homology: Vec<usize>,
    pub vanishing_below_top: bool,
    /// `|M| >= 2|A| - 1` for the row complex; `None` for the column complex.
    pub conjecture_hypothesis: Option<bool>,
    pub certificate: RankCertificate,
    pub status: VanishingStatus,
    pub ch_top: Option<Expansion>,
}

/// Builds `C_*([a], [m])`, computes its homology and, with `characters`,
/// the Frobenius characteristic of the top homology when it is the only
/// nonzero group.
pub fn check_vanishing(kind: ComplexKind, a: usize, m: usize, guard: usize, characters: bool) -> Result<VanishingReport, Error> {
    let c = ChainComplex::standard(kind, a, m, guard)?;
    let h = homology_dims(&c)?;
    let vanishing = h.vanishes_below_top();
    let hypothesis = match kind {
        ComplexKind::Column => None,
        ComplexKind::Row => Some(m + 1 >= 2 * a),
    };
    let status = match (kind, vanishing, hypothesis) {
        (_, true, _) => VanishingStatus::Vanishes,
        (ComplexKind::Column, false, _) => VanishingStatus::Contradiction,
        (ComplexKind::Row, false, Some(true)) => VanishingStatus::CounterexampleCandidate,
        (ComplexKind::Row, false, _) => VanishingStatus::OutsideConjectureRange,
    };
    let ch_top = if characters && vanishing { Some(frobenius_ch(&c, &h)?) } else { None };
    Ok(VanishingReport {
        kind,
        a: c.alphabet.clone(),
        m: c.marks.clone(),
        dims: h.dims.clone(),
        homology: h.homology.clone(),
        vanishing_below_top: vanishing,
        conjecture_hypothesis: hypothesis,
        certificate: h.certificate,
        status,
        ch_top,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: usize = 100_000;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn exp(n: usize, pairs: &[(&str, i64)]) -> Expansion {
        SchurExpansion::from_pairs(n, pairs.iter().map(|(m, c)| (p(m), BigInt::from(*c))))
    }

    #[test]
    fn small_bases() {
        let c = ChainComplex::standard(ComplexKind::Column, 2, 2, G).unwrap();
        assert_eq!(c.basis(2).len(), 6);
        assert_eq!(c.basis(2)[0], BasisElement { word: vec![1, 2], seq: vec![1, 1] });
        assert_eq!(c.basis(2)[3], BasisElement { word: vec![2, 1], seq: vec![1, 1] });
        assert_eq!(ChainComplex::standard(ComplexKind::Column, 2, 2, G).unwrap().dims(), vec![1, 4, 6]);
        assert_eq!(ChainComplex::standard(ComplexKind::Row, 2, 3, G).unwrap().basis(2).len(), 6);
        assert!(ChainComplex::build(ComplexKind::Row, &[], &[1], G).is_err());
        assert!(ChainComplex::standard(ComplexKind::Column, 12, 2, G).is_err());
    }

    #[test]
    fn homology_examples() {
        let c = ChainComplex::standard(ComplexKind::Column, 2, 2, G).unwrap();
        assert_eq!(homology_dims(&c).unwrap().homology, vec![0, 0, 3]);
        for n in 1..=5 {
            let c = ChainComplex::standard(ComplexKind::Column, 1, n, G).unwrap();
            assert_eq!(homology_dims(&c).unwrap().homology, vec![0, n - 1]);
        }
        let c = ChainComplex::standard(ComplexKind::Row, 2, 3, G).unwrap();
        assert_eq!(homology_dims(&c).unwrap().homology, vec![0, 0, 1]);
    }

    #[test]
    fn exact_fallback_outside_range() {
        let c = ChainComplex::standard(ComplexKind::Row, 2, 2, G).unwrap();
        let h = homology_dims(&c).unwrap();
        assert_eq!(h.certificate, RankCertificate::Exact);
        assert_eq!(c.euler_characteristic(), h.homology.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum::<i64>());
    }

    #[test]
    fn cycle_types() {
        let classes = CycleType::all(4);
        let total: BigInt = classes.iter().map(CycleType::class_size).sum();
        assert_eq!(total, BigInt::from(24));
        assert_eq!(CycleType::new(p("2,1,1")).z, BigInt::from(4));
        assert_eq!(CycleType::new(p("3,1")).representative(), vec![1, 2, 0, 3]);
    }

    #[test]
    fn characters() {
        let c = ChainComplex::standard(ComplexKind::Column, 2, 2, G).unwrap();
        let id = CycleType::new(p("1,1"));
        let swap = CycleType::new(p("2"));
        assert_eq!(character_hopf(&c, &id).unwrap(), BigInt::from(3));
        assert_eq!(character_hopf(&c, &swap).unwrap(), BigInt::from(-1));
        assert_eq!(character_direct(&c, &id).unwrap(), BigInt::from(3));
        assert_eq!(character_direct(&c, &swap).unwrap(), BigInt::from(-1));
        let row = ChainComplex::standard(ComplexKind::Row, 2, 3, G).unwrap();
        assert_eq!(character_direct(&row, &id).unwrap(), BigInt::one());
        for n in 1..=4 {
            let c = ChainComplex::standard(ComplexKind::Column, 1, n, G).unwrap();
            assert_eq!(character_hopf(&c, &CycleType::new(p("1"))).unwrap(), BigInt::from(n - 1));
        }
    }

    #[test]
    fn frobenius_examples() {
        let c = ChainComplex::standard(ComplexKind::Column, 2, 2, G).unwrap();
        let h = homology_dims(&c).unwrap();
        assert_eq!(frobenius_ch(&c, &h).unwrap(), exp(2, &[("2", 1), ("1,1", 2)]));
        let row = ChainComplex::standard(ComplexKind::Row, 2, 3, G).unwrap();
        let h = homology_dims(&row).unwrap();
        assert_eq!(frobenius_ch(&row, &h).unwrap(), exp(2, &[("2", 1)]));
        let bad = ChainComplex::standard(ComplexKind::Row, 2, 2, G).unwrap();
        let h = homology_dims(&bad).unwrap();
        if !h.vanishes_below_top() {
            assert!(matches!(frobenius_ch(&bad, &h), Err(Error::LowerHomology(_))));
        }
    }

    #[test]
    fn c_and_r() {
        for n in 1..=5 {
            assert_eq!(c_nk(n, 1).unwrap(), exp(1, &[("1", n as i64 - 1)]));
        }
        assert_eq!(c_nk(3, 2).unwrap(), exp(2, &[("2", 1), ("1,1", 2)]));
        assert_eq!(r_nk(3, 2).unwrap(), exp(2, &[("2", 3), ("1,1", 2)]));
        assert_eq!(r_nk(2, 2).unwrap(), exp(2, &[("2", 1)]));
    }

    #[test]
    fn reports() {
        let r = check_vanishing(ComplexKind::Row, 2, 3, G, true).unwrap();
        assert_eq!(r.status, VanishingStatus::Vanishes);
        assert_eq!(r.conjecture_hypothesis, Some(true));
        let r = check_vanishing(ComplexKind::Row, 2, 2, G, true).unwrap();
        assert_eq!(r.conjecture_hypothesis, Some(false));
        assert!(matches!(r.status, VanishingStatus::Vanishes | VanishingStatus::OutsideConjectureRange));
        let r = check_vanishing(ComplexKind::Column, 2, 2, G, true).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["homology"], serde_json::json!([0, 0, 3]));
        assert_eq!(json["conjecture_hypothesis"], serde_json::Value::Null);
        assert_eq!(json["ch_top"], serde_json::json!([{"mu": [2], "coeff": "1"}, {"mu": [1, 1], "coeff": "2"}]));
    }
}
