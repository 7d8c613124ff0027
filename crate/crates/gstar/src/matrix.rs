//! Exact dense matrices over Q(zeta_m) and the linear algebra the rest of
//! the crate leans on: rank, nullspace, and an incremental row-space used for
//! span membership and change-of-basis bookkeeping.
//!
//! Rank runs fraction-free in the Bareiss style: each elimination step forms
//! the two-by-two minor against the current pivot and divides by the previous
//! pivot, which is an exact division. Columns are visited sparsest first
//! (fewest nonzero entries, ties by index), which keeps fill-in low on the
//! very sparse evaluation matrices produced by the codimension module. The
//! rank itself is independent of any of these choices.

use crate::scalar::CycScalar;

/// Dense matrix whose entries all live in a single Q(zeta_m); mixing orders
/// lifts the whole matrix to the least common multiple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    order: u64,
    entries: Vec<CycScalar>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            order: 1,
            entries: vec![CycScalar::zero(); rows * cols],
        }
    }

    pub fn from_columns(cols_in: Vec<Vec<CycScalar>>) -> Self {
        let cols = cols_in.len();
        let rows = cols_in.first().map_or(0, |c| c.len());
        let mut m = ExactMatrix::zero(rows, cols);
        for (j, col) in cols_in.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn from_rows(rows_in: Vec<Vec<CycScalar>>) -> Self {
        let rows = rows_in.len();
        let cols = rows_in.first().map_or(0, |r| r.len());
        let mut m = ExactMatrix::zero(rows, cols);
        for (i, row) in rows_in.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, CycScalar::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        let m = num_integer::lcm(self.order, v.order());
        if m != self.order {
            for e in self.entries.iter_mut() {
                *e = e.lift_to(m);
            }
            self.order = m;
        }
        self.entries[i * self.cols + j] = v.lift_to(m);
    }

    pub fn row(&self, i: usize) -> Vec<CycScalar> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zero(self.cols, self.rows);
        t.order = self.order;
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn trace(&self) -> CycScalar {
        let mut t = CycScalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add(self.get(i, i));
        }
        t
    }

    pub fn matmul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul with mismatched shapes");
        let mut out = ExactMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Columns of `other` appended on the right; row counts must agree.
    pub fn hstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.rows, other.rows, "hstack with mismatched row counts");
        let mut m = ExactMatrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    fn sparse_first_column_order(&self) -> Vec<usize> {
        let mut weights: Vec<(usize, usize)> = (0..self.cols)
            .map(|j| {
                let nz = (0..self.rows).filter(|&i| !self.get(i, j).is_zero()).count();
                (nz, j)
            })
            .collect();
        weights.sort();
        weights.into_iter().map(|(_, j)| j).collect()
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<CycScalar>> = (0..self.rows).map(|i| self.row(i)).collect();
        let col_order = self.sparse_first_column_order();
        let mut prev = CycScalar::one();
        let mut rank = 0usize;
        for (step, &c) in col_order.iter().enumerate() {
            let Some(pivot_row) = (rank..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot_row);
            let prev_inv = prev.inverse().expect("previous pivot is nonzero");
            let pivot = a[rank][c].clone();
            let remaining: Vec<usize> = col_order[step + 1..].to_vec();
            for i in rank + 1..self.rows {
                if a[i][c].is_zero() {
                    // The minor update with a zero multiplier still rescales
                    // the row by pivot / prev, which keeps later divisions
                    // exact; skipping it entirely would break the recurrence.
                    for &j in &remaining {
                        a[i][j] = a[i][j].mul(&pivot).mul(&prev_inv);
                    }
                    continue;
                }
                let lead = std::mem::replace(&mut a[i][c], CycScalar::zero());
                for &j in &remaining {
                    let t = a[i][j].mul(&pivot).sub(&lead.mul(&a[rank][j]));
                    a[i][j] = t.mul(&prev_inv);
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Basis for the right nullspace: independent vectors v with M v = 0,
    /// exactly cols - rank of them, each normalised so its first nonzero
    /// coordinate is 1. Derived from the reduced echelon form with free
    /// variables taken in ascending column order.
    pub fn nullspace(&self) -> Vec<Vec<CycScalar>> {
        let (rref, pivots) = self.reduced_echelon();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![CycScalar::zero(); self.cols];
            v[free] = CycScalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = rref[r][free].neg();
            }
            normalise_leading(&mut v);
            basis.push(v);
        }
        basis
    }

    /// One exact solution x of M x = rhs with every free variable set to
    /// zero, or None when the system is inconsistent.
    pub fn solve(&self, rhs: &[CycScalar]) -> Option<Vec<CycScalar>> {
        assert_eq!(rhs.len(), self.rows, "rhs length must match row count");
        let aug = self.hstack(&ExactMatrix::from_columns(vec![rhs.to_vec()]));
        let (rref, pivots) = aug.reduced_echelon();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![CycScalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rref[r][self.cols].clone();
        }
        Some(x)
    }

    /// Reduced row echelon form over the field, returning the nonzero rows
    /// and their pivot columns. Pivots are scaled to 1 and cleared above and
    /// below. Used for nullspace extraction, not for rank (which goes the
    /// fraction-free route above); the two agree, and tests hold them to it.
    pub fn reduced_echelon(&self) -> (Vec<Vec<CycScalar>>, Vec<usize>) {
        let mut a: Vec<Vec<CycScalar>> = (0..self.rows).map(|i| self.row(i)).collect();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].inverse().expect("pivot is nonzero");
            for j in c..self.cols {
                a[r][j] = a[r][j].mul(&inv);
            }
            for i in 0..self.rows {
                if i == r || a[i][c].is_zero() {
                    continue;
                }
                let f = std::mem::replace(&mut a[i][c], CycScalar::zero());
                for j in c + 1..self.cols {
                    let t = a[i][j].sub(&f.mul(&a[r][j]));
                    a[i][j] = t;
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        a.truncate(r);
        (a, pivots)
    }
}

/// Scale a vector so its first nonzero coordinate becomes 1.
pub fn normalise_leading(v: &mut [CycScalar]) {
    if let Some(lead) = v.iter().find(|c| !c.is_zero()) {
        let inv = lead.inverse().expect("leading coefficient is nonzero");
        for c in v.iter_mut() {
            *c = c.mul(&inv);
        }
    }
}

/// Incrementally maintained row space in reduced echelon form. Supports span
/// membership, canonical residues modulo the span, and coordinates of a
/// member with respect to the echelon basis.
#[derive(Debug, Clone)]
pub struct RowSpace {
    ncols: usize,
    rows: Vec<Vec<CycScalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> Self {
        RowSpace { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn basis(&self) -> &[Vec<CycScalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of v modulo the span: v minus its projection, with all pivot
    /// coordinates cleared. The residue is zero exactly when v is a member.
    pub fn reduce(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(v.len(), self.ncols);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if w[p].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut w[p], CycScalar::zero());
            for j in 0..self.ncols {
                if j != p && !row[j].is_zero() {
                    let t = w[j].sub(&f.mul(&row[j]));
                    w[j] = t;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[CycScalar]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Insert v, returning true when it enlarged the span.
    pub fn insert(&mut self, v: &[CycScalar]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = w[p].inverse().expect("leading coefficient is nonzero");
        for c in w.iter_mut() {
            *c = c.mul(&inv);
        }
        // Clear the new pivot column in the existing rows to stay reduced.
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = std::mem::replace(&mut row[p], CycScalar::zero());
                for j in 0..w.len() {
                    if j != p && !w[j].is_zero() {
                        let t = row[j].sub(&f.mul(&w[j]));
                        row[j] = t;
                    }
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    /// Coordinates of v in the echelon basis, or None when v is outside the
    /// span. Rows are reduced, so the coordinate at basis row r is just the
    /// pivot-column entry of v.
    pub fn coords(&self, v: &[CycScalar]) -> Option<Vec<CycScalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}
