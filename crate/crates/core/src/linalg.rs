//! Exact linear algebra: fraction-free (Bareiss) elimination for ranks and
//! determinants over any [`Scalar`], a sparse rank routine modulo a large
//! prime for the big boundary matrices, and kernel bases over a field.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Dense row-major matrix.
pub type Dense<R> = Vec<Vec<R>>;

/// Determinant by fraction-free Gaussian elimination. Every intermediate
/// entry is a minor of the input, so all divisions are exact.
pub fn determinant<R: Scalar>(matrix: &[Vec<R>]) -> R {
    let n = matrix.len();
    if n == 0 {
        return R::one();
    }
    assert!(matrix.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    let mut a: Dense<R> = matrix.to_vec();
    let mut prev = R::one();
    let mut negate = false;
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return R::zero();
        };
        if pivot != k {
            a.swap(pivot, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].clone() * a[i][j].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step produced an inexact division");
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Rank by fraction-free elimination.
pub fn rank<R: Scalar>(matrix: &[Vec<R>]) -> usize {
    let nrows = matrix.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = matrix[0].len();
    let mut a: Dense<R> = matrix.to_vec();
    let mut prev = R::one();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pivot) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(pivot, r);
        for i in r + 1..nrows {
            for j in col + 1..ncols {
                let num = a[r][col].clone() * a[i][j].clone() - a[i][col].clone() * a[r][j].clone();
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step produced an inexact division");
            }
            a[i][col] = R::zero();
        }
        prev = a[r][col].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form over a field. Returns the reduced matrix and the
/// pivot columns.
pub fn rref<F: Scalar>(matrix: &[Vec<F>]) -> (Dense<F>, Vec<usize>) {
    let nrows = matrix.len();
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut a: Dense<F> = matrix.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let lead = a[r][col].clone();
        for j in col..ncols {
            a[r][j] = a[r][j].clone() / lead.clone();
        }
        for i in 0..nrows {
            if i != r && !a[i][col].is_zero() {
                let factor = a[i][col].clone();
                for j in col..ncols {
                    let v = a[i][j].clone() - factor.clone() * a[r][j].clone();
                    a[i][j] = v;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (a, pivots)
}

/// A kernel basis in reduced form: one vector per free column `f`, with a 1
/// at `f` and zeros at every other free column.
#[derive(Clone, Debug)]
pub struct Kernel<F> {
    pub free: Vec<usize>,
    pub vectors: Vec<Vec<F>>,
}

pub fn kernel<F: Scalar>(matrix: &[Vec<F>], ncols: usize) -> Kernel<F> {
    let (reduced, pivots) = rref(matrix);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let vectors = free
        .iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced[row][f].clone();
            }
            v
        })
        .collect();
    Kernel { free, vectors }
}

/// Sparse matrix with small integer entries stored by column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    /// `columns[j]` holds `(row, value)` pairs sorted by row.
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, columns: vec![Vec::new(); ncols] }
    }

    pub fn to_dense<R: Scalar>(&self) -> Dense<R> {
        let mut out = vec![vec![R::zero(); self.ncols]; self.nrows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                out[i][j] = R::from_i64(v).expect("entry fits");
            }
        }
        out
    }

    /// `self * rhs`, exact over the integers.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch in product");
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(k, b) in col {
                    for &(i, a) in &self.columns[k] {
                        *acc.entry(i).or_insert(0) += a * b;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: rhs.ncols, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Rank over the field with `modulus` elements. This is a lower bound for
    /// the rank over the rationals; callers certify it separately.
    pub fn rank_mod(&self, modulus: u64) -> usize {
        let reduce = |v: i64| -> u64 { v.rem_euclid(modulus as i64) as u64 };
        // pivot rows keyed by leading index, normalized to leading coefficient 1
        let mut basis: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
        for col in &self.columns {
            let mut v: Vec<(usize, u64)> =
                col.iter().map(|&(i, x)| (i, reduce(x))).filter(|&(_, x)| x != 0).collect();
            while let Some(&(lead, c)) = v.first() {
                match basis.get(&lead) {
                    Some(pivot) => v = axpy(&v, pivot, modulus - c, modulus),
                    None => {
                        let inv = mod_inv(c, modulus);
                        let normalized = v.iter().map(|&(i, x)| (i, mul_mod(x, inv, modulus))).collect();
                        basis.insert(lead, normalized);
                        break;
                    }
                }
            }
        }
        basis.len()
    }
}

/// `v + scale * w` over Z/m, both sparse and sorted.
fn axpy(v: &[(usize, u64)], w: &[(usize, u64)], scale: u64, m: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j == w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i == v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push(v[i]);
            i += 1;
        } else if take_w {
            out.push((w[j].0, mul_mod(w[j].1, scale, m)));
            j += 1;
        } else {
            let x = (v[i].1 + mul_mod(w[j].1, scale, m)) % m;
            if x != 0 {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_inv(a: u64, m: u64) -> u64 {
    // m is prime
    let mut result = 1u64;
    let mut base = a % m;
    let mut e = m - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;

    fn big(rows: &[&[i64]]) -> Dense<BigInt> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&big(&[&[2, 2], &[1, 2]])), BigInt::from(2));
        assert_eq!(determinant(&big(&[&[2, 3], &[1, 2]])), BigInt::from(1));
        assert_eq!(determinant(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant::<BigInt>(&[]), BigInt::from(1));
        let m = big(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(determinant(&m), BigInt::from(4));
        let m64: Dense<i64> = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(determinant(&m64), 4);
    }

    #[test]
    fn determinant_matches_leibniz() {
        // 4x4 against permutation expansion
        let m = big(&[&[3, 1, 4, 1], &[5, 9, 2, 6], &[5, 3, 5, 8], &[9, 7, 9, 3]]);
        let mut total = BigInt::from(0);
        let perms = permutations(4);
        for p in perms {
            let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let mut term = BigInt::from(if inversions % 2 == 0 { 1 } else { -1 });
            for (i, &pi) in p.iter().enumerate() {
                term *= m[i][pi].clone();
            }
            total += term;
        }
        assert_eq!(determinant(&m), total);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn ranks() {
        let m = big(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&big(&[&[0, 0], &[0, 0]])), 0);
        let tall = big(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(rank(&tall), 2);
    }

    #[test]
    fn kernel_of_rank_one() {
        let m: Dense<BigRational> = big(&[&[1, 2, 3]])
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect();
        let k = kernel(&m, 3);
        assert_eq!(k.free, vec![1, 2]);
        for v in &k.vectors {
            let dot = v[0].clone() + v[1].clone() * BigRational::from_integer(2.into())
                + v[2].clone() * BigRational::from_integer(3.into());
            assert!(num_traits::Zero::is_zero(&dot));
        }
    }

    #[test]
    fn sparse_rank_agrees_with_exact() {
        let dense = [[1i64, -1, 0, 0], [0, 1, -1, 0], [-1, 0, 1, 0], [0, 0, 0, 2]];
        let mut s = SparseMatrix::zero(4, 4);
        for (i, row) in dense.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    s.columns[j].push((i, v));
                }
            }
        }
        assert_eq!(s.rank_mod(2_305_843_009_213_693_951), 3);
        assert_eq!(rank(&s.to_dense::<BigInt>()), 3);
        // rank drops modulo 2 because of the entry 2
        assert_eq!(s.rank_mod(2), 2);
    }
}
