//! Exact sparse multivariate polynomials, Schur polynomials (by tableaux and
//! by the bialternant quotient), Schur-basis expansion, and the symmetric
//! derivation `nabla = sum_i d/dx_i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::scalar::Scalar;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::enumerate_ssyt;

pub type Exponent = Vec<u32>;

/// A polynomial in `nvars` variables: exponent vector to nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly<R> {
    nvars: usize,
    terms: BTreeMap<Exponent, R>,
}

impl<R: Scalar> SparsePoly<R> {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: R) -> Self {
        let mut p = SparsePoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::constant(nvars, R::one())
    }

    /// The variable `x_{i+1}` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        SparsePoly::monomial(e, R::one())
    }

    pub fn monomial(expo: Exponent, c: R) -> Self {
        let mut p = SparsePoly::zero(expo.len());
        p.add_term(expo, c);
        p
    }

    /// `sum_i coeffs[i] * x_{i+1}`.
    pub fn linear(coeffs: &[R]) -> Self {
        let n = coeffs.len();
        let mut p = SparsePoly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, R> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, expo: Exponent, c: R) {
        assert_eq!(expo.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += other * c`.
    pub fn add_scaled(&mut self, other: &SparsePoly<R>, c: &R) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v.clone() * c.clone());
        }
    }

    pub fn coeff(&self, expo: &[u32]) -> Result<R, Error> {
        if expo.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: expo.len() });
        }
        Ok(self.terms.get(expo).cloned().unwrap_or_else(R::zero))
    }

    /// Lexicographically greatest monomial and its coefficient.
    pub fn leading(&self) -> Option<(&Exponent, &R)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c.clone())).collect();
        SparsePoly { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = SparsePoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Total degrees present.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|e| e.iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Applies a permutation of the variables: `x_i -> x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Checks symmetry, returning a witness pair of monomials that differ by
    /// an adjacent transposition but carry different coefficients.
    pub fn check_symmetric(&self) -> Result<(), Error> {
        for (e, c) in &self.terms {
            for i in 0..self.nvars.saturating_sub(1) {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                let other = self.terms.get(&swapped).cloned().unwrap_or_else(R::zero);
                if other != *c {
                    return Err(Error::NotSymmetric {
                        left: e.clone(),
                        left_coeff: c.to_string(),
                        right: swapped,
                        right_coeff: other.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// `sum_i d/dx_i`, applied `k` times.
    pub fn nabla(&self, k: u32) -> Self {
        let mut current = self.clone();
        for _ in 0..k {
            let mut next = SparsePoly::zero(self.nvars);
            for (e, c) in &current.terms {
                for i in 0..self.nvars {
                    if e[i] > 0 {
                        let mut f = e.clone();
                        f[i] -= 1;
                        next.add_term(f, c.clone() * R::from_u32(e[i]).expect("exponent fits"));
                    }
                }
            }
            current = next;
        }
        current
    }

    /// Substitutes `forms[i]` for `x_{i+1}`. All forms must share a variable
    /// count, which becomes the variable count of the result.
    pub fn substitute(&self, forms: &[SparsePoly<R>]) -> SparsePoly<R> {
        assert_eq!(forms.len(), self.nvars, "one form per variable");
        let target = forms.first().map_or(0, SparsePoly::nvars);
        let mut cache: HashMap<(usize, u32), SparsePoly<R>> = HashMap::new();
        let mut out = SparsePoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = SparsePoly::constant(target, c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let power = cache.entry((i, x)).or_insert_with(|| forms[i].pow(x)).clone();
                term = &term * &power;
            }
            out.add_scaled(&term, &R::one());
        }
        out
    }

    /// Exact division by a divisor whose leading coefficient divides every
    /// leading coefficient met along the way. Panics on a nonzero remainder.
    pub fn div_exact(&self, divisor: &SparsePoly<R>) -> SparsePoly<R> {
        let (lead_e, lead_c) = divisor.leading().expect("division by the zero polynomial");
        let (lead_e, lead_c) = (lead_e.clone(), lead_c.clone());
        let mut rem = self.clone();
        let mut quotient = SparsePoly::zero(self.nvars);
        while let Some((e, c)) = rem.leading() {
            let shift: Option<Exponent> =
                e.iter().zip(&lead_e).map(|(a, b)| a.checked_sub(*b)).collect();
            let (Some(shift), Some(q)) = (shift, c.exact_div(&lead_c)) else {
                panic!("polynomial division is not exact: remainder has leading term {e:?}");
            };
            let step = SparsePoly::monomial(shift, q);
            rem = &rem - &(&step * divisor);
            quotient = &quotient + &step;
        }
        quotient
    }

    /// Converts to another scalar type.
    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> SparsePoly<S> {
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }
}

impl<'a, R: Scalar> Add<&'a SparsePoly<R>> for &'a SparsePoly<R> {
    type Output = SparsePoly<R>;

    fn add(self, rhs: &SparsePoly<R>) -> SparsePoly<R> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a, R: Scalar> Sub<&'a SparsePoly<R>> for &'a SparsePoly<R> {
    type Output = SparsePoly<R>;

    fn sub(self, rhs: &SparsePoly<R>) -> SparsePoly<R> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a, R: Scalar> Mul<&'a SparsePoly<R>> for &'a SparsePoly<R> {
    type Output = SparsePoly<R>;

    fn mul(self, rhs: &SparsePoly<R>) -> SparsePoly<R> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = SparsePoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<R: Scalar> Neg for SparsePoly<R> {
    type Output = SparsePoly<R>;

    fn neg(self) -> SparsePoly<R> {
        self.scale(&-R::one())
    }
}

impl<R: Scalar> fmt::Debug for SparsePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{x}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurMethod {
    Tableaux,
    Bialternant,
}

/// The Schur polynomial `s_lam(x_1..x_n)`; zero when `lam` has more than `n`
/// parts.
pub fn schur<R: Scalar>(lam: &Partition, n: usize, method: SchurMethod) -> SparsePoly<R> {
    if lam.len() > n {
        return SparsePoly::zero(n);
    }
    match method {
        SchurMethod::Tableaux => schur_tableaux(lam, n),
        SchurMethod::Bialternant => schur_bialternant(lam, n),
    }
}

fn schur_tableaux<R: Scalar>(lam: &Partition, n: usize) -> SparsePoly<R> {
    let mut p = SparsePoly::zero(n);
    for t in enumerate_ssyt(&SkewShape::straight(lam), 1, n as u32) {
        p.add_term(t.weight(n), R::one());
    }
    p
}

/// Antisymmetrization of the monomial `x^expo`.
fn alternant<R: Scalar>(expo: &[u32]) -> SparsePoly<R> {
    let n = expo.len();
    let mut out = SparsePoly::zero(n);
    for (perm, sign) in permutations_with_sign(n) {
        let mut e = vec![0; n];
        for (i, &x) in expo.iter().enumerate() {
            e[perm[i]] = x;
        }
        let c = if sign { R::one() } else { -R::one() };
        out.add_term(e, c);
    }
    out
}

/// All permutations of `0..n` with their parity (`true` = even).
fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = vec![(Vec::new(), true)];
    for k in 0..n {
        let mut next = Vec::with_capacity(out.len() * (k + 1));
        for (perm, sign) in &out {
            for pos in 0..=k {
                let mut q = perm.clone();
                q.insert(pos, k);
                // inserting at `pos` jumps over `k - pos` smaller entries
                let flips = (k - pos) % 2 == 1;
                next.push((q, *sign != flips));
            }
        }
        out = next;
    }
    out
}

fn schur_bialternant<R: Scalar>(lam: &Partition, n: usize) -> SparsePoly<R> {
    let delta: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let shifted: Vec<u32> = (0..n).map(|i| lam.part(i) as u32 + delta[i]).collect();
    let numerator = alternant::<R>(&shifted);
    let vandermonde = alternant::<R>(&delta);
    numerator.div_exact(&vandermonde)
}

/// The power sum `p_r(x_1..x_n)`.
pub fn power_sum<R: Scalar>(r: u32, n: usize) -> SparsePoly<R> {
    let mut out = SparsePoly::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = r;
        out.add_term(e, R::one());
    }
    out
}

/// A symmetric polynomial written in the Schur basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurExpansion<R> {
    nvars: usize,
    coeffs: BTreeMap<Partition, R>,
}

impl<R: Scalar> SchurExpansion<R> {
    pub fn zero(nvars: usize) -> Self {
        SchurExpansion { nvars, coeffs: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, R> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &Partition) -> R {
        self.coeffs.get(mu).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c * s_mu`. Partitions longer than `nvars` are dropped since
    /// their Schur polynomials vanish.
    pub fn add(&mut self, mu: Partition, c: R) {
        if c.is_zero() || mu.len() > self.nvars {
            return;
        }
        let entry = self.coeffs.entry(mu.clone()).or_insert_with(R::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.remove(&mu);
        }
    }

    pub fn from_pairs(nvars: usize, pairs: impl IntoIterator<Item = (Partition, R)>) -> Self {
        let mut out = SchurExpansion::zero(nvars);
        for (mu, c) in pairs {
            out.add(mu, c);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &R)> {
        self.coeffs.iter()
    }

    /// Rebuilds the polynomial `sum_mu c_mu s_mu`.
    pub fn to_poly(&self) -> SparsePoly<R> {
        let mut out = SparsePoly::zero(self.nvars);
        for (mu, c) in &self.coeffs {
            out.add_scaled(&schur::<R>(mu, self.nvars, SchurMethod::Tableaux), c);
        }
        out
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

/// Expands a symmetric polynomial in the Schur basis by repeatedly peeling
/// off the lexicographically leading monomial.
pub fn expand_schur<R: Scalar>(p: &SparsePoly<R>) -> Result<SchurExpansion<R>, Error> {
    p.check_symmetric()?;
    let n = p.nvars();
    let mut rem = p.clone();
    let mut out = SchurExpansion::zero(n);
    let mut cache: HashMap<Partition, SparsePoly<R>> = HashMap::new();
    while let Some((e, c)) = rem.leading() {
        let parts: Vec<usize> = e.iter().map(|&x| x as usize).collect();
        let mu = Partition::new(parts).expect("leading monomial of a symmetric polynomial is a partition");
        let c = c.clone();
        let s = cache.entry(mu.clone()).or_insert_with(|| schur(&mu, n, SchurMethod::Tableaux));
        rem.add_scaled(s, &-c.clone());
        out.add(mu, c);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct Entry {
    mu: Vec<usize>,
    coeff: String,
}

/// Serialized as `[{"mu": [parts], "coeff": "<decimal>"}, ...]` in canonical
/// partition order.
impl<R: Scalar> Serialize for SchurExpansion<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (mu, c) in &self.coeffs {
            seq.serialize_element(&Entry { mu: mu.parts().to_vec(), coeff: c.to_string() })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for SchurExpansion<BigInt> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<Entry>::deserialize(deserializer)?;
        let mut nvars = 0;
        let mut pairs = Vec::new();
        for e in entries {
            let mu = Partition::new(e.mu).map_err(de::Error::custom)?;
            let c: BigInt = e.coeff.parse().map_err(de::Error::custom)?;
            nvars = nvars.max(mu.len());
            pairs.push((mu, c));
        }
        Ok(SchurExpansion::from_pairs(nvars, pairs))
    }
}

impl<R: Scalar> fmt::Display for SchurExpansion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.coeffs.iter().map(|(mu, c)| format!("{mu:?}:{c}")).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::shapes::partitions_of;

    type P = SparsePoly<BigInt>;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn mono(e: &[u32], c: i64) -> P {
        SparsePoly::monomial(e.to_vec(), BigInt::from(c))
    }

    #[test]
    fn schur_examples() {
        let s11: P = schur(&p("1,1"), 3, SchurMethod::Tableaux);
        let expected = &(&mono(&[1, 1, 0], 1) + &mono(&[0, 1, 1], 1)) + &mono(&[1, 0, 1], 1);
        assert_eq!(s11, expected);
        let s21: P = schur(&p("2,1"), 2, SchurMethod::Tableaux);
        assert_eq!(s21, &mono(&[2, 1], 1) + &mono(&[1, 2], 1));
        assert!(schur::<BigInt>(&p("1,1,1"), 2, SchurMethod::Tableaux).is_zero());
        assert!(schur::<BigInt>(&p("1,1,1"), 2, SchurMethod::Bialternant).is_zero());
    }

    #[test]
    fn bialternant_agrees_with_tableaux() {
        for n in 1..=4 {
            for size in 0..=5 {
                for lam in partitions_of(size, n) {
                    let a: P = schur(&lam, n, SchurMethod::Tableaux);
                    let b: P = schur(&lam, n, SchurMethod::Bialternant);
                    assert_eq!(a, b, "lam = {lam:?}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn machine_integer_coefficients() {
        let a: SparsePoly<i64> = schur(&p("2,1"), 3, SchurMethod::Bialternant);
        let b: SparsePoly<i64> = schur(&p("2,1"), 3, SchurMethod::Tableaux);
        assert_eq!(a, b);
        assert_eq!(a.coeff(&[1, 1, 1]).unwrap(), 2);
    }

    #[test]
    fn expansion_examples() {
        let s1: P = schur(&p("1"), 3, SchurMethod::Tableaux);
        let sq = &s1 * &s1;
        let e = expand_schur(&sq).unwrap();
        assert_eq!(e.coeff(&p("2")), BigInt::from(1));
        assert_eq!(e.coeff(&p("1,1")), BigInt::from(1));

        // m_2 + 3 m_11 = s_2 + 2 s_11
        let mut q = P::zero(3);
        for i in 0..3 {
            let mut e = vec![0; 3];
            e[i] = 2;
            q.add_term(e, BigInt::from(1));
            for j in i + 1..3 {
                let mut e = vec![0; 3];
                e[i] = 1;
                e[j] = 1;
                q.add_term(e, BigInt::from(3));
            }
        }
        let e = expand_schur(&q).unwrap();
        assert_eq!(e, SchurExpansion::from_pairs(3, [(p("2"), BigInt::from(1)), (p("1,1"), BigInt::from(2))]));
        assert!(expand_schur(&P::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_symmetric() {
        let q = mono(&[1, 0], 1);
        match expand_schur(&q) {
            Err(Error::NotSymmetric { left, right, .. }) => {
                assert_eq!(left, vec![1, 0]);
                assert_eq!(right, vec![0, 1]);
            }
            other => panic!("expected a symmetry witness, got {other:?}"),
        }
    }

    #[test]
    fn nabla_examples() {
        let s21: P = schur(&p("2,1"), 3, SchurMethod::Tableaux);
        let d3 = s21.nabla(3);
        assert_eq!(d3, P::constant(3, BigInt::from(48)));
        let s11: P = schur(&p("1,1"), 3, SchurMethod::Tableaux);
        let s1: P = schur(&p("1"), 3, SchurMethod::Tableaux);
        assert_eq!(s11.nabla(1), s1.scale(&BigInt::from(2)));
        assert!(P::constant(3, BigInt::from(7)).nabla(1).is_zero());
    }

    #[test]
    fn monomial_lookup() {
        let s11: P = schur(&p("1,1"), 3, SchurMethod::Tableaux);
        assert_eq!(s11.coeff(&[1, 1, 0]).unwrap(), BigInt::from(1));
        assert_eq!(s11.coeff(&[2, 0, 0]).unwrap(), BigInt::from(0));
        assert!(s11.coeff(&[1, 1]).is_err());
        let s21: P = schur(&p("2,1"), 2, SchurMethod::Tableaux);
        assert_eq!(s21.coeff(&[2, 1]).unwrap(), BigInt::from(1));
    }

    #[test]
    fn substitution() {
        // (x1 + x2)^2 with x1 -> 2 y1, x2 -> y1 + y2
        let sq = (&mono(&[1, 0], 1) + &mono(&[0, 1], 1)).pow(2);
        let forms = [mono(&[1, 0], 2), &mono(&[1, 0], 1) + &mono(&[0, 1], 1)];
        let got = sq.substitute(&forms);
        let expected = (&mono(&[1, 0], 3) + &mono(&[0, 1], 1)).pow(2);
        assert_eq!(got, expected);
    }

    #[test]
    fn json_round_trip() {
        let e = SchurExpansion::from_pairs(3, [(p("2"), BigInt::from(1)), (p("1,1"), BigInt::from(2))]);
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(text, r#"[{"mu":[2],"coeff":"1"},{"mu":[1,1],"coeff":"2"}]"#);
        let back: SchurExpansion<BigInt> = serde_json::from_str(&text).unwrap();
        assert_eq!(back.coeffs(), e.coeffs());
    }
}
