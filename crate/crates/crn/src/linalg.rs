//! Exact rational dense linear algebra: reduced row-echelon form, rank and
//! nullspace bases.
//!
//! Everything downstream reduces to integer rank equalities, so all
//! arithmetic is done over arbitrary-precision rationals. There is no
//! floating-point fallback anywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational scalar.
pub type Rational = BigRational;

/// Shorthand for building a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from a row-major nested vector. Panics if the rows are
    /// ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer-literal convenience constructor, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// New matrix made of the selected columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, cols.len());
        for (k, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                out[(i, k)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect()
    }

    /// Reduced row-echelon form together with the ascending pivot-column
    /// list. The RREF of a matrix is unique, which makes every rank and
    /// kernel computation in the crate deterministic.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m[(pivot_row, col)].clone();
            for j in col..m.cols {
                let v = &m[(pivot_row, j)] / &inv;
                m[(pivot_row, j)] = v;
            }
            for i in 0..m.rows {
                if i == pivot_row || m[(i, col)].is_zero() {
                    continue;
                }
                let factor = m[(i, col)].clone();
                for j in col..m.cols {
                    let v = &m[(i, j)] - &factor * &m[(pivot_row, j)];
                    m[(i, j)] = v;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Number of pivots of the RREF.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical nullspace basis, returned as a matrix whose columns are the
    /// basis vectors. Built by the RREF free-variable construction: free
    /// columns are taken in ascending order and each free variable is set
    /// to 1 in turn.
    pub fn nullspace_basis(&self) -> RationalMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = RationalMatrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis[(f, k)] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                basis[(p, k)] = -r[(i, f)].clone();
            }
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Scales a vector so its first nonzero entry is +1; zero vectors are
/// returned unchanged. Two vectors are proportional iff their canonical
/// forms are equal, which is how equivalence classes are detected.
pub fn canonicalize_direction(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(first) => {
            let scale = first.recip();
            v.iter().map(|x| x * &scale).collect()
        }
        None => v.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_identity_is_fixed_point() {
        let m = RationalMatrix::identity(2);
        let (r, pivots) = m.rref();
        assert_eq!(r, m);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let m = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, RationalMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rank_zero_matrix() {
        assert_eq!(RationalMatrix::zeros(3, 4).rank(), 0);
    }

    // Incidence matrix of the A/B/C/0 branching network, rows A,B,C,0.
    #[test]
    fn rank_of_abc_incidence_is_three() {
        let ia = RationalMatrix::from_i64(&[
            &[-1, 0, -1, 0, 0],
            &[1, -1, 0, -1, 0],
            &[0, 1, 0, 0, -1],
            &[0, 0, 1, 1, 1],
        ]);
        assert_eq!(ia.rank(), 3);
        assert_eq!(ia.transpose().rank(), 3);
    }

    #[test]
    fn nullspace_of_invertible_is_empty() {
        let m = RationalMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.nullspace_basis().cols(), 0);
    }

    #[test]
    fn nullspace_vectors_are_exact_kernel_elements() {
        let m = RationalMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let basis = m.nullspace_basis();
        assert_eq!(basis.cols(), 3 - m.rank());
        for k in 0..basis.cols() {
            let v = basis.column(k);
            assert!(m.apply(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn canonicalize_scales_first_nonzero_to_one() {
        let v = vec![rat(0, 1), rat(-2, 3), rat(4, 1)];
        let c = canonicalize_direction(&v);
        assert_eq!(c, vec![rat(0, 1), rat(1, 1), rat(-6, 1)]);
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-4i64..5, r * c).prop_map(move |vals| {
                let rows = vals
                    .chunks(c)
                    .map(|ch| ch.iter().map(|&v| rat(v, 1)).collect())
                    .collect();
                RationalMatrix::from_rows(rows)
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            prop_assert_eq!(m.rank() + m.nullspace_basis().cols(), m.cols());
        }

        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let (r, _) = m.rref();
            let (rr, _) = r.rref();
            prop_assert_eq!(r, rr);
        }

        #[test]
        fn rank_equals_transpose_rank(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn nullspace_annihilates(m in small_matrix()) {
            let basis = m.nullspace_basis();
            for k in 0..basis.cols() {
                let v = basis.column(k);
                prop_assert!(m.apply(&v).iter().all(Zero::is_zero));
            }
        }
    }
}
