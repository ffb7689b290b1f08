//! Small exact integer matrices.
//!
//! Everything here works over the integers with unimodular column operations;
//! there is deliberately no floating point anywhere. Sizes stay tiny (the
//! largest matrices in the crate are stacked face matrices of rank < 100), so
//! `i64` entries and dense storage are plenty.

use serde::{Deserialize, Serialize};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Build from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Stack vertically: `self` on top of `other` (equal column counts).
    pub fn stack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.cols, "shape mismatch in stack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        IntMat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> IntMat {
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| -x).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: i64) {
        if q == 0 {
            return;
        }
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] += q * v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Column echelon data: `h = a · u` with `u` unimodular, pivots listed as
/// (row, col) pairs with strictly increasing rows and contiguous columns.
pub struct ColumnEchelon {
    pub h: IntMat,
    pub u: IntMat,
    pub pivots: Vec<(usize, usize)>,
}

/// Hermite-style column reduction. Euclidean elimination makes each pivot row
/// zero to the right of its pivot; pivots are made positive and the entries to
/// their left are reduced into `[0, pivot)`, so the result is the canonical
/// column Hermite form of the input's column lattice.
pub fn column_echelon(a: &IntMat) -> ColumnEchelon {
    let mut h = a.clone();
    let mut u = IntMat::identity(a.cols());
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next_col = 0;

    for row in 0..h.rows() {
        if next_col >= h.cols() {
            break;
        }
        // Euclidean elimination across columns next_col.. on this row.
        loop {
            let mut best: Option<usize> = None;
            for j in next_col..h.cols() {
                let v = h[(row, j)];
                if v != 0 && best.map_or(true, |b| h[(row, b)].abs() > v.abs()) {
                    best = Some(j);
                }
            }
            let Some(p) = best else { break };
            h.swap_cols(next_col, p);
            u.swap_cols(next_col, p);
            let pivot = h[(row, next_col)];
            let mut done = true;
            for j in next_col + 1..h.cols() {
                let q = h[(row, j)].div_euclid(pivot);
                h.add_col(j, next_col, -q);
                u.add_col(j, next_col, -q);
                if h[(row, j)] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(row, next_col)] != 0 {
            if h[(row, next_col)] < 0 {
                h.negate_col(next_col);
                u.negate_col(next_col);
            }
            // Canonical reduction of the columns left of the pivot.
            let pivot = h[(row, next_col)];
            for j in 0..next_col {
                let q = h[(row, j)].div_euclid(pivot);
                h.add_col(j, next_col, -q);
                u.add_col(j, next_col, -q);
            }
            pivots.push((row, next_col));
            next_col += 1;
        }
    }

    ColumnEchelon { h, u, pivots }
}

/// Canonical basis of the integer kernel `{x : a·x = 0}`, one column per
/// basis vector. The basis itself is Hermite-reduced, so it depends only on
/// the kernel lattice, not on the reduction path.
pub fn kernel_basis(a: &IntMat) -> IntMat {
    let ech = column_echelon(a);
    let rank = ech.pivots.len();
    let n = a.cols();
    let mut raw = IntMat::zeros(n, n - rank);
    for (out_j, j) in (rank..n).enumerate() {
        for i in 0..n {
            raw[(i, out_j)] = ech.u[(i, j)];
        }
    }
    // Canonicalize the basis of the kernel lattice.
    column_echelon(&raw).h
}

/// Solve `b · x = v` over the integers, one column of `x` per column of `v`.
/// Returns `None` if any column has no integral solution.
pub fn solve_columns(b: &IntMat, v: &IntMat) -> Option<IntMat> {
    assert_eq!(b.rows(), v.rows(), "shape mismatch in solve");
    let ech = column_echelon(b);
    let mut x = IntMat::zeros(b.cols(), v.cols());
    for col in 0..v.cols() {
        let mut res = v.column(col);
        let mut y = vec![0i64; b.cols()];
        for &(r, c) in &ech.pivots {
            let pivot = ech.h[(r, c)];
            if res[r] % pivot != 0 {
                return None;
            }
            let t = res[r] / pivot;
            y[c] = t;
            if t != 0 {
                for i in 0..b.rows() {
                    res[i] -= t * ech.h[(i, c)];
                }
            }
        }
        if res.iter().any(|&x| x != 0) {
            return None;
        }
        let xs = ech.u.mul_vec(&y);
        for (i, &value) in xs.iter().enumerate() {
            x[(i, col)] = value;
        }
    }
    Some(x)
}

/// Rank over the rationals (= number of Hermite pivots).
pub fn rank(a: &IntMat) -> usize {
    column_echelon(a).pivots.len()
}

/// Nonzero diagonal of the Smith normal form, each entry dividing the next.
/// Used by tests to compare homology with torsion; plain row+column Euclidean
/// reduction is fine at these sizes.
pub fn smith_diagonal(a: &IntMat) -> Vec<i64> {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut diag = Vec::new();
    let mut top = 0;

    'outer: while top < rows.min(cols) {
        // Find a nonzero entry in the remaining block.
        let mut found = None;
        for i in top..rows {
            for j in top..cols {
                if m[(i, j)] != 0 {
                    found = Some((i, j));
                    break;
                }
            }
            if found.is_some() {
                break;
            }
        }
        let Some((pi, pj)) = found else { break 'outer };
        // Move it to the corner.
        m.swap_cols(top, pj);
        for j in 0..cols {
            let tmp = m[(top, j)];
            m[(top, j)] = m[(pi, j)];
            m[(pi, j)] = tmp;
        }
        // Reduce until the corner divides its row and column exactly.
        loop {
            let mut clean = true;
            for i in top + 1..rows {
                let q = m[(i, top)].div_euclid(m[(top, top)]);
                if q != 0 {
                    for j in top..cols {
                        let sub = q * m[(top, j)];
                        m[(i, j)] -= sub;
                    }
                }
                if m[(i, top)] != 0 {
                    // Swap rows to continue the Euclidean descent.
                    for j in top..cols {
                        let tmp = m[(top, j)];
                        m[(top, j)] = m[(i, j)];
                        m[(i, j)] = tmp;
                    }
                    clean = false;
                }
            }
            for j in top + 1..cols {
                let q = m[(top, j)].div_euclid(m[(top, top)]);
                m.add_col(j, top, -q);
                if m[(top, j)] != 0 {
                    m.swap_cols(top, j);
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if m[(top, top)] < 0 {
            m.negate_col(top);
        }
        diag.push(m[(top, top)]);
        top += 1;
    }

    // Fix the divisibility chain d1 | d2 | ... with gcd/lcm passes.
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let a = diag[i];
            let b = diag[j];
            let g = gcd(a, b);
            diag[i] = g;
            diag[j] = a / g * b;
        }
    }
    diag
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
