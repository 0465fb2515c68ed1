use std::fmt;
use std::ops::Range;

use super::{FieldSpec, LinalgError, Subspace};

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        FMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from raw entries, checking that every entry is already reduced.
    pub fn from_vec(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        data: Vec<u32>,
    ) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape {
                expected: (rows, cols),
                found: data.len(),
            });
        }
        if let Some(&bad) = data.iter().find(|&&x| x >= field.p()) {
            return Err(LinalgError::EntryOutOfRange { entry: bad, p: field.p() });
        }
        Ok(FMatrix { field, rows, cols, data })
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: FieldSpec, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        FMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub(crate) fn from_raw(field: FieldSpec, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        FMatrix { field, rows, cols, data }
    }

    /// Column vector from entries.
    pub fn column(field: FieldSpec, v: &[u32]) -> Self {
        Self::from_raw(field, v.len(), 1, v.to_vec())
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.field.p());
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col_vec(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn mul(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let p = self.field.p();
        let n = other.cols;
        let mut out = vec![0u32; self.rows * n];
        let mut acc = vec![0u32; n];
        // Entries are < 97, so up to 400k products fit in a u32 accumulator.
        let flush_every = (u32::MAX / ((p - 1) * (p - 1)).max(1)) as usize;
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0usize;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (x, &b) in acc.iter_mut().zip(brow) {
                    *x += a * b;
                }
                pending += 1;
                if pending >= flush_every {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (o, &x) in out[i * n..(i + 1) * n].iter_mut().zip(&acc) {
                *o = x % p;
            }
        }
        FMatrix::from_raw(self.field, self.rows, n, out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.shape(), other.shape());
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        FMatrix::from_raw(f, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.shape(), other.shape());
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        FMatrix::from_raw(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: u32) -> FMatrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        FMatrix::from_raw(f, self.rows, self.cols, data)
    }

    pub fn neg(&self) -> FMatrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.neg(a)).collect();
        FMatrix::from_raw(f, self.rows, self.cols, data)
    }

    /// `self += s * other`
    pub fn add_scaled_assign(&mut self, s: u32, other: &FMatrix) {
        assert_eq!(self.shape(), other.shape());
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(s, b));
        }
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> FMatrix {
        assert!(rows.end <= self.rows && cols.end <= self.cols);
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for r in rows.clone() {
            data.extend_from_slice(&self.data[r * self.cols + cols.start..r * self.cols + cols.end]);
        }
        FMatrix::from_raw(self.field, rows.len(), cols.len(), data)
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &FMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(r));
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> FMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        FMatrix::from_raw(self.field, idx.len(), self.cols, data)
    }

    pub fn hstack(blocks: &[&FMatrix]) -> FMatrix {
        let first = blocks.first().expect("hstack of nothing");
        let rows = first.rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = FMatrix::zeros(first.field, rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.set_block(0, c0, b);
            c0 += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&FMatrix]) -> FMatrix {
        let first = blocks.first().expect("vstack of nothing");
        let cols = first.cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        FMatrix::from_raw(first.field, rows, cols, data)
    }

    pub fn block_diag(field: FieldSpec, blocks: &[&FMatrix]) -> FMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = FMatrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Kronecker product; entry `((i, k), (j, l))` is `self[i][j] * other[k][l]`.
    pub fn kron(&self, other: &FMatrix) -> FMatrix {
        let f = self.field;
        let (r2, c2) = other.shape();
        let mut out = FMatrix::zeros(f, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        out.set(i * r2 + k, j * c2 + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    /// Flattens row-major into a single row vector.
    pub fn flatten(&self) -> Vec<u32> {
        self.data.clone()
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Rref {
            rank: pivots.len(),
            matrix: m,
            pivots,
        }
    }

    /// Gauss-Jordan elimination in place; returns pivot columns.
    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            if inv != 1 {
                for j in c..cols {
                    self.data[r * cols + j] = f.mul(self.data[r * cols + j], inv);
                }
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let pivot_tail = &pivot_row[c..];
            let p = f.p();
            let eliminate = |row: &mut [u32]| {
                let factor = row[c];
                if factor != 0 {
                    let neg = p - factor;
                    for (x, &y) in row[c..].iter_mut().zip(pivot_tail) {
                        *x = (*x + neg * y) % p;
                    }
                }
            };
            before.chunks_exact_mut(cols).for_each(eliminate);
            after.chunks_exact_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Eliminate along the shorter side.
        if self.rows > self.cols {
            self.transpose().rank()
        } else {
            self.clone().rref_in_place().len()
        }
    }

    /// Null space `{v : self * v = 0}` as a canonical subspace of `F^cols`.
    pub fn kernel_basis(&self) -> Subspace {
        let r = self.rref();
        let free: Vec<usize> = {
            let mut is_pivot = vec![false; self.cols];
            r.pivots.iter().for_each(|&c| is_pivot[c] = true);
            (0..self.cols).filter(|&c| !is_pivot[c]).collect()
        };
        let f = self.field;
        let mut basis = FMatrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(k, fc, 1);
            for (i, &pc) in r.pivots.iter().enumerate() {
                basis.set(k, pc, f.neg(r.matrix.get(i, fc)));
            }
        }
        Subspace::from_rows(self.cols, &basis)
    }

    /// Column space as a canonical subspace of `F^rows`.
    pub fn image_basis(&self) -> Subspace {
        Subspace::from_rows(self.rows, &self.transpose())
    }

    /// Some `X` with `self * X = b`, or `None` when inconsistent.
    pub fn solve_right(&self, b: &FMatrix) -> Result<Option<FMatrix>, LinalgError> {
        if self.rows != b.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "solve_right",
                left: self.shape(),
                right: b.shape(),
            });
        }
        let aug = FMatrix::hstack(&[self, b]);
        let r = aug.rref();
        if r.pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = FMatrix::zeros(self.field, self.cols, b.cols);
        for (i, &pc) in r.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.matrix.get(i, self.cols + j));
            }
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FMatrix<F_{}>{}x{}[", self.field.p(), self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn rref_of_identity() {
        let id = FMatrix::identity(f(2), 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_duplicated_row() {
        let m = FMatrix::from_rows(f(2), &[[1, 1], [1, 1]]);
        let r = m.rref();
        assert_eq!(r.matrix, FMatrix::from_rows(f(2), &[[1, 1], [0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn full_rank_over_f5() {
        // det = 2*3 - 4*1 = 2 mod 5
        let m = FMatrix::from_rows(f(5), &[[2, 4], [1, 3]]);
        assert_eq!(m.rref().rank, 2);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_edge_cases() {
        let z = FMatrix::zeros(f(3), 2, 3);
        assert_eq!(z.kernel_basis().dim(), 3);
        let id = FMatrix::identity(f(3), 4);
        assert_eq!(id.kernel_basis().dim(), 0);
        let m = FMatrix::from_rows(f(2), &[[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.basis(), &FMatrix::from_rows(f(2), &[[1, 1]]));
    }

    #[test]
    fn kernel_of_empty_shapes() {
        let m = FMatrix::zeros(f(2), 0, 3);
        assert_eq!(m.kernel_basis().dim(), 3);
        let m = FMatrix::zeros(f(2), 3, 0);
        assert_eq!(m.kernel_basis().dim(), 0);
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn solve_right_cases() {
        let a = FMatrix::identity(f(7), 3);
        let b = FMatrix::from_rows(f(7), &[[1, 2], [3, 4], [5, 6]]);
        assert_eq!(a.solve_right(&b).unwrap().unwrap(), b);

        let a = FMatrix::from_rows(f(2), &[[1, 1]]);
        let b = FMatrix::from_rows(f(2), &[[1]]);
        let x = a.solve_right(&b).unwrap().unwrap();
        let candidates = [
            FMatrix::from_rows(f(2), &[[1], [0]]),
            FMatrix::from_rows(f(2), &[[0], [1]]),
        ];
        assert!(candidates.contains(&x));

        let a = FMatrix::zeros(f(3), 2, 2);
        let b = FMatrix::from_rows(f(3), &[[1], [0]]);
        assert_eq!(a.solve_right(&b).unwrap(), None);

        let b = FMatrix::zeros(f(3), 3, 1);
        assert!(a.solve_right(&b).is_err());
    }

    #[test]
    fn product_and_transpose() {
        let a = FMatrix::from_rows(f(5), &[[1, 2, 3], [4, 0, 1]]);
        let b = FMatrix::from_rows(f(5), &[[1, 0], [2, 1], [0, 4]]);
        assert_eq!(a.mul(&b), FMatrix::from_rows(f(5), &[[5, 14], [4, 4]]));
        assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
    }
}
