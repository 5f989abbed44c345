//! Dense linear algebra over `F_q`: reduced row-echelon form and an
//! incrementally maintained echelon basis for spans.

use crate::field::{FieldCtx, FieldElem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElem>,
}

impl FqMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FqMatrix {
            rows,
            cols,
            entries: vec![FieldElem::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = FieldElem::ONE;
        }
        m
    }

    /// Builds a matrix from equally long rows. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<FieldElem>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix row");
            entries.extend(row);
        }
        FqMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[FieldElem]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.entries[i * self.cols + j]
    }

    /// Pivot column of each row (first nonzero entry), `None` for zero rows.
    pub fn pivots(&self) -> Vec<Option<usize>> {
        self.iter_rows()
            .map(|r| r.iter().position(|c| !c.is_zero()))
            .collect()
    }

    /// Reduced row-echelon form with zero rows dropped, and the rank.
    pub fn row_reduce(&self, field: &FieldCtx) -> (FqMatrix, usize) {
        let mut basis = EchelonBasis::new(self.cols);
        for row in self.iter_rows() {
            basis.insert(field, row.to_vec());
        }
        let rank = basis.rank();
        (basis.into_matrix(), rank)
    }
}

/// `fq_row_reduce`: reduced row-echelon form and rank.
pub fn fq_row_reduce(m: &FqMatrix, field: &FieldCtx) -> (FqMatrix, usize) {
    m.row_reduce(field)
}

/// A subspace of `F_q^cols` held as reduced row-echelon rows with strictly
/// increasing, normalized pivots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<Vec<FieldElem>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        EchelonBasis {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<FieldElem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating every pivot column; zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, field: &FieldCtx, mut v: Vec<FieldElem>) -> Vec<FieldElem> {
        debug_assert_eq!(v.len(), self.cols);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c.is_zero() {
                continue;
            }
            for (x, &r) in v[pc..].iter_mut().zip(&row[pc..]) {
                if !r.is_zero() {
                    *x = field.sub(*x, field.mul(c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, field: &FieldCtx, v: &[FieldElem]) -> bool {
        self.reduce(field, v.to_vec()).iter().all(|c| c.is_zero())
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, field: &FieldCtx, v: Vec<FieldElem>) -> bool {
        let mut v = self.reduce(field, v);
        let Some(pc) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = field.inv(v[pc]).expect("pivot is nonzero");
        for x in &mut v[pc..] {
            *x = field.mul(*x, inv);
        }
        // clear the new pivot column from existing rows
        for row in &mut self.rows {
            let c = row[pc];
            if c.is_zero() {
                continue;
            }
            for (x, &r) in row[pc..].iter_mut().zip(&v[pc..]) {
                *x = field.sub(*x, field.mul(c, r));
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    /// True when `self` is a subspace of `other`.
    pub fn is_subspace_of(&self, field: &FieldCtx, other: &EchelonBasis) -> bool {
        self.rank() <= other.rank() && self.rows.iter().all(|r| other.contains(field, r))
    }

    /// Every vector of the span, each exactly once: all `F_q`-combinations of
    /// the rows, starting with the zero vector.
    pub fn span_elements<'a>(&'a self, field: &'a FieldCtx) -> SpanIter<'a> {
        SpanIter {
            basis: self,
            field,
            digits: vec![0; self.rank()],
            current: vec![FieldElem::ZERO; self.cols],
            started: false,
            done: false,
        }
    }

    pub fn into_matrix(self) -> FqMatrix {
        FqMatrix::from_rows(self.cols, self.rows)
    }

    pub fn to_matrix(&self) -> FqMatrix {
        FqMatrix::from_rows(self.cols, self.rows.clone())
    }
}

/// Odometer over the coefficient vectors of an [`EchelonBasis`]; each step
/// updates the current vector by one scaled row.
pub struct SpanIter<'a> {
    basis: &'a EchelonBasis,
    field: &'a FieldCtx,
    digits: Vec<u32>,
    current: Vec<FieldElem>,
    started: bool,
    done: bool,
}

impl Iterator for SpanIter<'_> {
    type Item = Vec<FieldElem>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        let q = self.field.order() as u32;
        for (i, digit) in self.digits.iter_mut().enumerate() {
            let old = FieldElem::from_raw(*digit);
            *digit = (*digit + 1) % q;
            let new = FieldElem::from_raw(*digit);
            let delta = self.field.sub(new, old);
            for (x, &r) in self.current.iter_mut().zip(&self.basis.rows[i]) {
                if !r.is_zero() {
                    *x = self.field.add(*x, self.field.mul(delta, r));
                }
            }
            if *digit != 0 {
                return Some(self.current.clone());
            }
        }
        self.done = true;
        None
    }
}
