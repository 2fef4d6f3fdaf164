//! Chern plethysm `s̄_λ(x_1..x_n) = s_λ(e_1 - x_1, ..., e_1 - x_n)` and the
//! independent routes to its Schur coefficients.
//!
//! [`sbar_direct`] substitutes the roots and expands; every other function
//! here is an alternative that must agree with it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::linalg::determinant;
use crate::scalar::{binomial, factorial};
use crate::shapes::{partitions_of, Partition, SkewShape};
use crate::sympoly::{expand_schur, schur, SchurExpansion, SchurMethod, SparsePoly};
use crate::tableaux::{count_ssyt, enumerate_ssyt, f_count, g_pairs, hook_length, parity_tableaux, Tableau};

type Expansion = SchurExpansion<BigInt>;
type Poly = SparsePoly<BigInt>;

/// One linear form per tableau in `SSYT(mu, n)`: the sum of `x_i` over its
/// entries, in canonical tableau order.
pub fn plethysm_roots(mu: &Partition, n: usize) -> Vec<Poly> {
    enumerate_ssyt(&SkewShape::straight(mu), 1, n as u32)
        .map(|t| {
            let mut coeffs = vec![BigInt::zero(); n];
            for v in t.reading_word() {
                coeffs[v as usize - 1] += 1;
            }
            SparsePoly::linear(&coeffs)
        })
        .collect()
}

/// `s_lam` evaluated at the roots of `mu` over `n` variables, as a polynomial.
pub fn chern_plethysm_poly(lam: &Partition, mu: &Partition, n: usize) -> Poly {
    let roots = plethysm_roots(mu, n);
    if roots.is_empty() {
        return if lam.is_empty() { SparsePoly::one(n) } else { SparsePoly::zero(n) };
    }
    schur::<BigInt>(lam, roots.len(), SchurMethod::Tableaux).substitute(&roots)
}

/// Schur expansion of `s_lam` evaluated at the roots of `mu`.
pub fn chern_plethysm(lam: &Partition, mu: &Partition, n: usize) -> Expansion {
    expand_schur(&chern_plethysm_poly(lam, mu, n)).expect("plethysm of symmetric roots is symmetric")
}

/// `s̄_lam(x_1..x_n)` as a polynomial.
pub fn sbar_poly(lam: &Partition, n: usize) -> Poly {
    chern_plethysm_poly(lam, &Partition::column(n.saturating_sub(1)), n)
}

/// Reference expansion by direct substitution.
pub fn sbar_direct(lam: &Partition, n: usize) -> Expansion {
    chern_plethysm(lam, &Partition::column(n.saturating_sub(1)), n)
}

/// Which of the two equivalent alternating-sum formulas to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AltForm {
    /// Skew standard counts with the content product over `λ/ν`.
    Skew,
    /// Hook-length and hook-content quotients over the rationals.
    HookContent,
}

fn content_product(lam: &Partition, nu: &Partition, n: usize) -> BigInt {
    lam.boxes()
        .filter(|&(r, c)| c > nu.part(r - 1))
        .map(|(r, c)| BigInt::from(n as i64 - r as i64 + c as i64))
        .product()
}

/// `[s_mu] s̄_lam` via the alternating sum over `ν ⊆ λ ∩ μ`.
pub fn coeff_alternating(lam: &Partition, mu: &Partition, n: usize, form: AltForm) -> BigInt {
    if lam.size() != mu.size() || lam.len() > n || mu.len() > n {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    for nu in lam.intersection(mu).subpartitions() {
        let sign = if nu.size() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let lam_nu = SkewShape::new(lam, &nu);
        let mu_nu = SkewShape::new(mu, &nu);
        let term = match form {
            AltForm::Skew => {
                let num = f_count(&lam_nu) * f_count(&mu_nu) * content_product(lam, &nu, n);
                let den = factorial(lam_nu.size());
                assert!(
                    (&num % &den).is_zero(),
                    "inexact division in alternating sum: lam={lam} mu={mu} nu={nu} n={n}: {num}/{den}"
                );
                num / den
            }
            AltForm::HookContent => {
                let q = BigRational::from_integer(binomial(lam.size() as i64, nu.size() as i64))
                    * BigRational::from_integer(f_count(&mu_nu))
                    * BigRational::new(hook_length(&nu) * f_count(&lam_nu), hook_length(lam))
                    * BigRational::new(
                        count_ssyt(&SkewShape::straight(lam), 1, n as u32),
                        count_ssyt(&SkewShape::straight(&nu), 1, n as u32),
                    );
                assert!(q.is_integer(), "non-integral hook-content term: lam={lam} mu={mu} nu={nu} n={n}: {q}");
                q.to_integer()
            }
        };
        total += sign * term;
    }
    total
}

/// Full expansion from the alternating formula; needs no polynomial algebra.
pub fn sbar_alternating(lam: &Partition, n: usize) -> Expansion {
    let mut out = SchurExpansion::zero(n);
    if lam.len() > n {
        return out;
    }
    for mu in partitions_of(lam.size(), n) {
        let c = coeff_alternating(lam, &mu, n, AltForm::Skew);
        out.add(mu, c);
    }
    out
}

/// `s̄_{(1^k)}` by counting parity tableaux.
pub fn expand_column_case(k: usize, n: usize) -> Result<Expansion, Error> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("column case needs 1 <= k <= n, got k={k}, n={n}")));
    }
    let mut out = SchurExpansion::zero(n);
    for mu in partitions_of(k, n) {
        let c = parity_tableaux(&mu, n as u32).count();
        out.add(mu, BigInt::from(c));
    }
    Ok(out)
}

/// `s̄_{(k)}` with coefficient `f^{μ + (1^{n-1})}` at each `μ` with fewer
/// than `n` parts.
pub fn expand_row_case(k: usize, n: usize) -> Result<Expansion, Error> {
    if k == 0 || n == 0 {
        return Err(Error::Precondition(format!("row case needs k, n >= 1, got k={k}, n={n}")));
    }
    let mut out = SchurExpansion::zero(n);
    for mu in partitions_of(k, n - 1) {
        let c = f_count(&SkewShape::straight(&mu.add_column_strip(n - 1)));
        out.add(mu, c);
    }
    Ok(out)
}

/// `[s_{(|lam|)}] s̄_lam` as the number of SSYT of `lam` over `[2, n]`. For
/// `n = 1` the alphabet is empty and only the empty shape has a filling.
pub fn coeff_single_row(lam: &Partition, n: usize) -> Result<BigInt, Error> {
    if n == 0 {
        return Err(Error::Precondition("single-row count needs n >= 1".into()));
    }
    Ok(count_ssyt(&SkewShape::straight(lam), 2, n as u32))
}

fn check_two_rows(lam: &Partition, a: usize, b: usize) -> Result<(), Error> {
    if a < b || a + b != lam.size() {
        return Err(Error::Precondition(format!("need a >= b and a + b = |lam|, got ({a},{b}) for {lam}")));
    }
    Ok(())
}

/// `[s_{(a,b)}] s̄_lam` as a sum over `p <= b` of G-pairs on
/// `(lam/(p,p), (a,b)/(p,p))` whose semistandard side has every 2 in its
/// first row. Zero when `s_{(a,b)}` vanishes in `n` variables.
pub fn coeff_two_rows(lam: &Partition, a: usize, b: usize, n: usize) -> Result<BigInt, Error> {
    two_row_pairs(lam, a, b, n, true)
}

/// The same sum without the first-row restriction on 2's. It overcounts once
/// `lam` has three or more rows; kept for discrepancy reports.
pub fn coeff_two_rows_unrestricted(lam: &Partition, a: usize, b: usize, n: usize) -> Result<BigInt, Error> {
    two_row_pairs(lam, a, b, n, false)
}

fn two_row_pairs(lam: &Partition, a: usize, b: usize, n: usize, twos_in_first_row: bool) -> Result<BigInt, Error> {
    check_two_rows(lam, a, b)?;
    if b > 0 && n < 2 {
        return Ok(BigInt::zero());
    }
    let mut total = 0usize;
    for p in 0..=b {
        let left = SkewShape::from_rows(lam.parts().to_vec(), vec![p, p]);
        let right = SkewShape::from_rows(vec![a, b], vec![p, p]);
        if !left.is_valid() || !right.is_valid() {
            continue;
        }
        total += g_pairs(&left, &right, n as u32)?
            .filter(|g| !twos_in_first_row || g.s.entries().all(|(r, _, v)| v != 2 || r == 1))
            .count();
    }
    Ok(BigInt::from(total))
}

/// `[x_1^a x_2^b] s̄_lam` from the binomial double sum over two-row `ν`.
/// Any `a, b >= 0` with `a + b = |lam|` is accepted; needs two variables.
pub fn monomial_two_rows(lam: &Partition, a: usize, b: usize, n: usize) -> Result<BigInt, Error> {
    if n < 2 {
        return Err(Error::Precondition(format!("two-variable monomials need n >= 2, got {n}")));
    }
    let total = a + b;
    if total != lam.size() {
        return Ok(BigInt::zero());
    }
    let mut out = BigInt::zero();
    for size in 0..=total {
        for nu2 in 0..=size / 2 {
            let nu1 = size - nu2;
            let skew = SkewShape::from_rows(lam.parts().to_vec(), vec![nu1, nu2]);
            let count = count_ssyt(&skew, 3, n as u32);
            if count.is_zero() {
                continue;
            }
            let inner: BigInt = (nu2..=nu1)
                .map(|d| binomial((total - size) as i64, a as i64 - d as i64))
                .sum();
            out += count * inner;
        }
    }
    Ok(out)
}

/// `[s_{(a,b)}] s̄_lam` as a difference of two monomial coefficients.
pub fn coeff_two_rows_monomial(lam: &Partition, a: usize, b: usize, n: usize) -> Result<BigInt, Error> {
    check_two_rows(lam, a, b)?;
    let mut c = monomial_two_rows(lam, a, b, n)?;
    if b > 0 {
        c -= monomial_two_rows(lam, a + 1, b - 1, n)?;
    }
    Ok(c)
}

/// Which reading of the single-column filling conditions to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnVariant {
    /// Rowwise forbidden pairs plus the column rule, as forced by the path model.
    Corrected,
    /// The conditions exactly as printed; kept for discrepancy reports.
    Printed,
}

/// Pair predicates for fillings of `lam`, 1-based `(r, c)`, values `i64`.
fn admissible(variant: ColumnVariant, p: i64, rows: &[Vec<i64>], r: usize, c: usize, v: i64) -> bool {
    let (ri, ci) = (r as i64, c as i64);
    match variant {
        ColumnVariant::Corrected => {
            if c > 1 {
                let left = rows[r - 1][c - 2];
                let banned = p - ri + (ci - 1) + 1;
                if left > v || (left == banned && v == banned) {
                    return false;
                }
            }
            if r > 1 {
                let up = rows[r - 2][c - 1];
                let allowed = p - (ri - 1) + ci;
                if !(up < v || (up == v && v == allowed)) {
                    return false;
                }
            }
            true
        }
        ColumnVariant::Printed => {
            if r > 1 {
                let up = rows[r - 2][c - 1];
                // condition (1) read at the upper box (r-1, c)
                let first = up <= v && !(up == v && v == p - (ri - 1) + ci);
                // condition (2) read at (r, c)
                let second = up < v || (up == v && v == p - ri + ci);
                if !(first && second) {
                    return false;
                }
            }
            true
        }
    }
}

fn check_column_range(lam: &Partition, n: usize, p: usize) -> Result<(), Error> {
    if p < lam.len() || p + lam.part(0) > n {
        return Err(Error::Precondition(format!(
            "need l(lam) <= p <= n - lam_1, got p={p} for lam={lam}, n={n}"
        )));
    }
    Ok(())
}

/// The fillings of `lam` by `[2, n]` satisfying the chosen conditions, in
/// reading-word lexicographic order.
pub fn column_fillings(lam: &Partition, n: usize, p: usize, variant: ColumnVariant) -> Result<Vec<Tableau>, Error> {
    check_column_range(lam, n, p)?;
    let boxes: Vec<(usize, usize)> = lam.boxes().collect();
    let mut rows: Vec<Vec<i64>> = lam.parts().iter().map(|&m| vec![0; m]).collect();
    let mut out = Vec::new();
    fill(&boxes, 0, variant, p as i64, n as i64, &mut rows, &mut out);
    Ok(out)
}

fn fill(
    boxes: &[(usize, usize)],
    at: usize,
    variant: ColumnVariant,
    p: i64,
    n: i64,
    rows: &mut Vec<Vec<i64>>,
    out: &mut Vec<Tableau>,
) {
    if at == boxes.len() {
        let rows = rows.iter().map(|row| row.iter().map(|&v| v as u32).collect()).collect();
        out.push(Tableau::from_rows(rows).expect("fillings match their shape"));
        return;
    }
    let (r, c) = boxes[at];
    for v in 2..=n {
        if admissible(variant, p, rows, r, c, v) {
            rows[r - 1][c - 1] = v;
            fill(boxes, at + 1, variant, p, n, rows, out);
        }
    }
    rows[r - 1][c - 1] = 0;
}

/// `[s_{(1^{|lam|})}] s̄_lam` as a count of constrained fillings.
pub fn coeff_column(lam: &Partition, n: usize, p: usize, variant: ColumnVariant) -> Result<BigInt, Error> {
    Ok(BigInt::from(column_fillings(lam, n, p, variant)?.len()))
}

/// `[s_{(1^m)}] s̄_{(m)}`, with the conventions `m = 0 -> 1` and `m < 0 -> 0`.
pub fn row_column_entry(m: i64, n: usize) -> BigInt {
    match m {
        m if m < 0 => BigInt::zero(),
        0 => BigInt::one(),
        m if m as usize >= n => BigInt::zero(),
        m => f_count(&SkewShape::straight(&Partition::column(m as usize).add_column_strip(n - 1))),
    }
}

/// `[s_{(1^{|lam|})}] s̄_lam` as the Jacobi–Trudi determinant of single-row
/// column coefficients.
pub fn coeff_column_jacobi_trudi(lam: &Partition, n: usize) -> BigInt {
    let l = lam.len();
    let matrix: Vec<Vec<BigInt>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| row_column_entry(lam.part(i - 1) as i64 - i as i64 + j as i64, n))
                .collect()
        })
        .collect();
    determinant(&matrix)
}

/// `B_{n,k}`: the product over all `k`-subsets of `[n]` of the sum of their
/// variables.
pub fn boolean_product(n: usize, k: usize) -> Result<Poly, Error> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("boolean product needs 1 <= k <= n, got n={n}, k={k}")));
    }
    let mut out = SparsePoly::one(n);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut coeffs = vec![BigInt::zero(); n];
        for &i in &subset {
            coeffs[i] = BigInt::one();
        }
        out = &out * &SparsePoly::linear(&coeffs);
        // next subset in lex order
        let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(out)
}

/// True when every coefficient of `e` is nonnegative and supported in degree `d`.
pub fn is_positive_of_degree(e: &Expansion, d: usize) -> bool {
    e.iter().all(|(mu, c)| mu.size() == d && !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn exp(n: usize, pairs: &[(&str, i64)]) -> Expansion {
        SchurExpansion::from_pairs(n, pairs.iter().map(|(m, c)| (p(m), BigInt::from(*c))))
    }

    #[test]
    fn roots_of_small_shapes() {
        let roots = plethysm_roots(&p("1,1"), 3);
        let lin = |v: [i64; 3]| SparsePoly::linear(&v.map(BigInt::from));
        assert_eq!(roots, vec![lin([1, 1, 0]), lin([1, 0, 1]), lin([0, 1, 1])]);
        assert_eq!(plethysm_roots(&p("2"), 2).len(), 3);
    }

    #[test]
    fn direct_examples() {
        for n in 1..=5 {
            assert_eq!(sbar_direct(&p("1"), n), exp(n, &[("1", n as i64 - 1)]));
            assert_eq!(sbar_direct(&p(""), n), exp(n, &[("", 1)]));
        }
        assert_eq!(sbar_direct(&p("1,1"), 3), exp(3, &[("2", 1), ("1,1", 2)]));
    }

    #[test]
    fn alternating_examples() {
        assert_eq!(sbar_alternating(&p("2"), 3), exp(3, &[("2", 3), ("1,1", 2)]));
        assert_eq!(coeff_alternating(&p("1,1"), &p("1,1"), 3, AltForm::Skew), BigInt::from(2));
        assert_eq!(coeff_alternating(&p("1,1"), &p("1"), 3, AltForm::Skew), BigInt::zero());
        for form in [AltForm::Skew, AltForm::HookContent] {
            assert_eq!(coeff_alternating(&p("2,1"), &p("1,1,1"), 4, form), sbar_direct(&p("2,1"), 4).coeff(&p("1,1,1")));
        }
    }

    #[test]
    fn column_and_row_cases() {
        assert_eq!(expand_column_case(2, 3).unwrap(), exp(3, &[("2", 1), ("1,1", 2)]));
        assert_eq!(expand_column_case(2, 2).unwrap(), exp(2, &[("1,1", 1)]));
        assert_eq!(expand_row_case(2, 3).unwrap(), exp(3, &[("2", 3), ("1,1", 2)]));
        assert_eq!(expand_row_case(2, 2).unwrap(), exp(2, &[("2", 1)]));
        assert_eq!(expand_row_case(4, 3).unwrap().coeff(&p("2,2")), BigInt::from(5));
    }

    #[test]
    fn one_and_two_rows() {
        assert_eq!(coeff_single_row(&p("1,1"), 3).unwrap(), BigInt::from(1));
        assert_eq!(coeff_single_row(&p("2"), 3).unwrap(), BigInt::from(3));
        assert_eq!(coeff_single_row(&p("1,1,1"), 2).unwrap(), BigInt::zero());
        assert_eq!(coeff_two_rows(&p("1,1"), 2, 0, 3).unwrap(), BigInt::from(1));
        assert_eq!(coeff_two_rows(&p("2"), 1, 1, 3).unwrap(), BigInt::from(2));
        assert_eq!(coeff_two_rows_monomial(&p("2"), 1, 1, 3).unwrap(), BigInt::from(2));
        assert!(coeff_two_rows(&p("2"), 0, 2, 3).is_err());
        assert_eq!(coeff_two_rows(&p("1,1,1"), 2, 1, 3).unwrap(), BigInt::from(1));
        assert_eq!(coeff_two_rows_unrestricted(&p("1,1,1"), 2, 1, 3).unwrap(), BigInt::from(2));
        let oracle = sbar_direct(&p("2,2"), 3).coeff(&p("2,2"));
        assert_eq!(coeff_two_rows(&p("2,2"), 2, 2, 3).unwrap(), oracle);
    }

    #[test]
    fn column_multiplicity() {
        let rows = |ts: Vec<Tableau>| ts.into_iter().map(|t| t.rows().to_vec()).collect::<Vec<_>>();
        let got = column_fillings(&p("1,1"), 3, 2, ColumnVariant::Corrected).unwrap();
        assert_eq!(rows(got), vec![vec![vec![2], vec![2]], vec![vec![2], vec![3]]]);
        let got = column_fillings(&p("2"), 3, 1, ColumnVariant::Corrected).unwrap();
        assert_eq!(rows(got), vec![vec![vec![2, 3]], vec![vec![3, 3]]]);
        assert_eq!(coeff_column(&p("1,1"), 3, 2, ColumnVariant::Printed).unwrap(), BigInt::one());
        assert!(coeff_column(&p("1,1"), 3, 1, ColumnVariant::Corrected).is_err());
        assert_eq!(coeff_column_jacobi_trudi(&p("1,1"), 3), BigInt::from(2));
        assert_eq!(coeff_column_jacobi_trudi(&p("2,1"), 4), sbar_direct(&p("2,1"), 4).coeff(&p("1,1,1")));
    }

    #[test]
    fn boolean_products() {
        let x = |i| SparsePoly::<BigInt>::var(2, i);
        assert_eq!(boolean_product(2, 1).unwrap(), &x(0) * &x(1));
        assert_eq!(boolean_product(3, 3).unwrap(), SparsePoly::linear(&[1, 1, 1].map(BigInt::from)));
        let b = expand_schur(&boolean_product(3, 2).unwrap()).unwrap();
        // (x2+x3)(x1+x3)(x1+x2) = e1 e2 - e3
        assert_eq!(b, exp(3, &[("2,1", 1)]));
        assert_eq!(b, sbar_direct(&p("1,1,1"), 3));
    }
}
