//! Dense exact integer matrices: Smith normal form, rank, determinant and
//! diophantine solving. Sizes here are desk scale; clarity over blocking.

use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;
use crate::{Error, Result};

/// Row-major integer matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> IntMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map(Vec::len).unwrap_or(0);
        let mut data = Vec::with_capacity(height * width);
        for row in rows {
            if row.len() != width {
                return Err(Error::DimensionMismatch {
                    expected: width,
                    got: row.len(),
                });
            }
            data.extend(row.iter().cloned());
        }
        Self::new(height, width, data)
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Self { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut data = vec![T::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a.clone() * other.get(k, j).clone();
                    data[i * other.cols + j] = data[i * other.cols + j].clone() + term;
                }
            }
        }
        Self { rows: self.rows, cols: other.cols, data }
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| crate::scalar::dot(self.row(i), v))
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j && !self.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn row_addmul(&mut self, dst: usize, src: usize, c: &T) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let term = c.clone() * self.get(src, j).clone();
            self.set(dst, j, self.get(dst, j).clone() + term);
        }
    }

    /// col[dst] += c * col[src]
    fn col_addmul(&mut self, dst: usize, src: usize, c: &T) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let term = c.clone() * self.get(i, src).clone();
            self.set(i, dst, self.get(i, dst).clone() + term);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// Fraction-free Bareiss determinant.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return T::zero();
                };
                m.swap_rows(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j).clone() * m.get(k, k).clone()
                        - m.get(i, k).clone() * m.get(k, j).clone();
                    m.set(i, j, num / prev.clone());
                }
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        if negate {
            -d
        } else {
            d
        }
    }
}

/// `u * m * v = d` with `d` diagonal, non-negative, each entry dividing the
/// next, and `u`, `v` unimodular. `v_inv` is tracked alongside so callers can
/// move between the original and transformed column coordinates exactly.
#[derive(Debug, Clone)]
pub struct SmithDecomposition<T> {
    pub u: IntMatrix<T>,
    pub d: IntMatrix<T>,
    pub v: IntMatrix<T>,
    pub v_inv: IntMatrix<T>,
}

impl<T: Scalar> SmithDecomposition<T> {
    pub fn rank(&self) -> usize {
        let steps = self.d.rows().min(self.d.cols());
        (0..steps).filter(|&i| !self.d.get(i, i).is_zero()).count()
    }

    pub fn elementary_divisors(&self) -> Vec<T> {
        let steps = self.d.rows().min(self.d.cols());
        (0..steps)
            .map(|i| self.d.get(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }
}

/// Smith normal form. Pivot rule: smallest absolute value among nonzero
/// entries of the trailing submatrix, ties broken by (row, col) lexicographic
/// order, so the decomposition is deterministic.
pub fn smith_normal_form<T: Scalar>(m: &IntMatrix<T>) -> SmithDecomposition<T> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // Column op wrappers keep v_inv consistent: for a op with matrix E applied
    // on the right of `a`, v gains E on the right and v_inv gains E^{-1} on
    // the left.
    let steps = rows.min(cols);
    'outer: for k in 0..steps {
        loop {
            let mut pivot: Option<(T, usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    let entry = a.get(i, j);
                    if entry.is_zero() {
                        continue;
                    }
                    let abs = entry.abs();
                    let better = match &pivot {
                        None => true,
                        Some((best, _, _)) => abs < *best,
                    };
                    if better {
                        pivot = Some((abs, i, j));
                    }
                }
            }
            let Some((_, pi, pj)) = pivot else {
                break 'outer;
            };
            if pi != k {
                a.swap_rows(k, pi);
                u.swap_rows(k, pi);
            }
            if pj != k {
                a.swap_cols(k, pj);
                v.swap_cols(k, pj);
                v_inv.swap_rows(k, pj);
            }

            let mut clean = true;
            for i in k + 1..rows {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let q = a.get(i, k).clone() / a.get(k, k).clone();
                let c = -q;
                a.row_addmul(i, k, &c);
                u.row_addmul(i, k, &c);
                if !a.get(i, k).is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if a.get(k, j).is_zero() {
                    continue;
                }
                let q = a.get(k, j).clone() / a.get(k, k).clone();
                let c = -q;
                a.col_addmul(j, k, &c);
                v.col_addmul(j, k, &c);
                // E = I + c*E_{kj}; E^{-1} = I - c*E_{kj} acts on rows of v_inv.
                let back = -c;
                v_inv.row_addmul(k, j, &back);
                if !a.get(k, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }

            let mut fixup = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !a.get(i, j).mod_floor(a.get(k, k)).is_zero() {
                        fixup = Some(i);
                        break 'scan;
                    }
                }
            }
            match fixup {
                Some(i) => {
                    let one = T::one();
                    a.row_addmul(k, i, &one);
                    u.row_addmul(k, i, &one);
                }
                None => break,
            }
        }
        if a.get(k, k).is_negative() {
            a.negate_row(k);
            u.negate_row(k);
        }
    }

    debug_assert!(a.is_diagonal(), "smith normal form left non-diagonal output");
    SmithDecomposition { u, d: a, v, v_inv }
}

/// Rank of a list of integer row vectors via fraction-free elimination.
pub fn rank_of_rows<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let mut basis: Vec<Vec<T>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in rows {
        let mut work = row.clone();
        for (b, &p) in basis.iter().zip(&pivots) {
            if work[p].is_zero() {
                continue;
            }
            let g = b[p].gcd(&work[p]);
            let bf = b[p].clone() / g.clone();
            let wf = work[p].clone() / g;
            for (w, bv) in work.iter_mut().zip(b.iter()) {
                *w = w.clone() * bf.clone() - bv.clone() * wf.clone();
            }
        }
        let Some(p) = work.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if let Some(reduced) = crate::scalar::primitive(&work) {
            work = reduced;
        }
        basis.push(work);
        pivots.push(p);
    }
    basis.len()
}

/// Integer solutions of `A x = b`: a particular solution plus a lattice basis
/// of the homogeneous solutions, or `None` when no integer solution exists.
pub fn solve_diophantine<T: Scalar>(
    a: &IntMatrix<T>,
    b: &[T],
) -> Option<(Vec<T>, Vec<Vec<T>>)> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b);
    let steps = a.rows().min(a.cols());
    let mut y = vec![T::zero(); a.cols()];
    for i in 0..a.rows() {
        if i < steps && !snf.d.get(i, i).is_zero() {
            let d = snf.d.get(i, i);
            if !c[i].mod_floor(d).is_zero() {
                return None;
            }
            y[i] = c[i].clone() / d.clone();
        } else if !c[i].is_zero() {
            return None;
        }
    }
    let x0 = snf.v.mul_vec(&y);
    let mut basis = Vec::new();
    for j in 0..a.cols() {
        let free = j >= steps || snf.d.get(j, j).is_zero();
        if free {
            basis.push(snf.v.col(j));
        }
    }
    Some((x0, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int_vec, Int};

    fn m(rows: &[&[i64]]) -> IntMatrix<Int> {
        let rows: Vec<Vec<Int>> = rows.iter().map(|r| int_vec(r)).collect();
        IntMatrix::from_rows(&rows).unwrap()
    }

    fn check_snf(input: &IntMatrix<Int>) -> SmithDecomposition<Int> {
        let snf = smith_normal_form(input);
        assert_eq!(snf.u.mul(input).mul(&snf.v), snf.d, "u*m*v != d");
        assert!(snf.d.is_diagonal());
        assert_eq!(snf.u.det().abs(), Int::from(1), "u not unimodular");
        assert_eq!(snf.v.det().abs(), Int::from(1), "v not unimodular");
        assert_eq!(
            snf.v.mul(&snf.v_inv),
            IntMatrix::identity(input.cols()),
            "v_inv is not the inverse of v"
        );
        let divisors = snf.elementary_divisors();
        for w in divisors.windows(2) {
            assert!(
                (w[1].clone() % w[0].clone()).is_zero(),
                "divisibility chain broken: {:?}",
                divisors
            );
        }
        for d in &divisors {
            assert!(*d > Int::from(0));
        }
        snf
    }

    #[test]
    fn snf_diagonal_2_3() {
        let input = m(&[&[2, 0], &[0, 3]]);
        let snf = check_snf(&input);
        assert_eq!(snf.elementary_divisors(), int_vec(&[1, 6]));
    }

    #[test]
    fn snf_identity() {
        let input = m(&[&[1, 0], &[0, 1]]);
        let snf = check_snf(&input);
        assert_eq!(snf.d, IntMatrix::identity(2));
    }

    #[test]
    fn snf_row_gcd() {
        let input = m(&[&[2, 4]]);
        let snf = check_snf(&input);
        assert_eq!(snf.elementary_divisors(), int_vec(&[2]));
        assert_eq!(snf.d, m(&[&[2, 0]]));
    }

    #[test]
    fn snf_known_divisors() {
        // 1x1 minors gcd 3, full determinant 3*21*1... classic worked example.
        let input = m(&[&[-6, 111, -36, 6], &[5, -672, 210, 74], &[0, -255, 81, 24], &[-7, 255, -81, -10]]);
        let snf = check_snf(&input);
        assert_eq!(snf.elementary_divisors(), int_vec(&[1, 3, 21]));
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank_of_rows(&[int_vec(&[1, 1]), int_vec(&[2, 2])]), 1);
        assert_eq!(rank_of_rows(&[int_vec(&[2, 0]), int_vec(&[3, 0]), int_vec(&[0, 1])]), 2);
        assert_eq!(rank_of_rows::<Int>(&[int_vec(&[0, 0])]), 0);
    }

    #[test]
    fn diophantine_solves_and_detects_infeasibility() {
        // 2a = -1 has no integer solution.
        let a = m(&[&[2]]);
        assert!(solve_diophantine(&a, &int_vec(&[-1])).is_none());

        let a = m(&[&[2, -1]]);
        let (x0, basis) = solve_diophantine(&a, &int_vec(&[0])).unwrap();
        assert_eq!(crate::scalar::dot(&int_vec(&[2, -1]), &x0), Int::from(0));
        assert_eq!(basis.len(), 1);
        assert_eq!(crate::scalar::dot(&int_vec(&[2, -1]), &basis[0]), Int::from(0));
    }
}
