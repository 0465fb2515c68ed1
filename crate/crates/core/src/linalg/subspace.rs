use super::{FMatrix, FieldSpec};

/// A linear subspace of `F^n`, stored as the reduced row-echelon form of a basis.
///
/// Equality of subspaces is equality of this canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: FMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: FMatrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: FMatrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(ambient_dim: usize, m: &FMatrix) -> Self {
        assert_eq!(m.cols(), ambient_dim);
        let mut r = m.clone();
        let pivots = r.rref_in_place();
        let basis = r.submatrix(0..pivots.len(), 0..ambient_dim);
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn from_vectors(field: FieldSpec, ambient_dim: usize, vs: &[Vec<u32>]) -> Self {
        let mut b = EchelonBuilder::new(field, ambient_dim);
        for v in vs {
            b.insert(v.clone());
        }
        b.into_subspace()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    /// RREF basis, one vector per row.
    pub fn basis(&self) -> &FMatrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn vector(&self, i: usize) -> &[u32] {
        self.basis.row(i)
    }

    /// Coordinates of a vector known to lie in the subspace: its entries at the pivots.
    pub fn coordinates_unchecked(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    /// Coordinates in the canonical basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let coords = self.coordinates_unchecked(v);
        self.residual(v).iter().all(|&x| x == 0).then_some(coords)
    }

    /// `v` minus its projection along the pivot coordinates.
    fn residual(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient_dim);
        let f = self.field();
        let mut r = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let s = r[pc];
            if s != 0 {
                for (x, &b) in r.iter_mut().zip(self.basis.row(i)) {
                    *x = f.sub(*x, f.mul(s, b));
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.residual(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.vector(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::from_rows(
            self.ambient_dim,
            &FMatrix::vstack(&[&self.basis, &other.basis]),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let f = self.field();
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(f, self.ambient_dim);
        }
        // a*U = b*W  <=>  (a, -b) in ker [U^T | -W^T]
        let sys = FMatrix::hstack(&[&self.basis.transpose(), &other.basis.transpose().neg()]);
        let ker = sys.kernel_basis();
        let a_part = ker.basis().submatrix(0..ker.dim(), 0..self.dim());
        Subspace::from_rows(self.ambient_dim, &a_part.mul(&self.basis))
    }

    /// Indices of the standard basis vectors completing the subspace (the non-pivot columns).
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        self.pivots.iter().for_each(|&c| is_pivot[c] = true);
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// Projection `F^n -> F^n / self` in coordinates of the complementary standard vectors.
    pub fn quotient_projection(&self) -> FMatrix {
        let f = self.field();
        let comp = self.complement_indices();
        let mut q = FMatrix::zeros(f, comp.len(), self.ambient_dim);
        for (a, &c) in comp.iter().enumerate() {
            q.set(a, c, 1);
        }
        for (i, &pc) in self.pivots.iter().enumerate() {
            for (a, &c) in comp.iter().enumerate() {
                q.set(a, pc, f.neg(self.basis.get(i, c)));
            }
        }
        q
    }

    /// Section of [`Self::quotient_projection`] sending quotient coordinates to standard vectors.
    pub fn quotient_lift(&self) -> FMatrix {
        let comp = self.complement_indices();
        let mut l = FMatrix::zeros(self.field(), self.ambient_dim, comp.len());
        for (a, &c) in comp.iter().enumerate() {
            l.set(c, a, 1);
        }
        l
    }
}

/// Incrementally grown basis kept in fully reduced echelon form.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    field: FieldSpec,
    ambient_dim: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(field: FieldSpec, ambient_dim: usize) -> Self {
        EchelonBuilder {
            field,
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let s = v[pc];
            if s != 0 {
                let neg = f.neg(s);
                for (x, &b) in v.iter_mut().zip(row) {
                    if b != 0 {
                        *x = f.add(*x, f.mul(neg, b));
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(v[pc]);
        v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        for row in &mut self.rows {
            let s = row[pc];
            if s != 0 {
                let neg = f.neg(s);
                for (x, &b) in row.iter_mut().zip(&v) {
                    if b != 0 {
                        *x = f.add(*x, f.mul(neg, b));
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut data = Vec::with_capacity(self.rows.len() * self.ambient_dim);
        for &i in &order {
            data.extend_from_slice(&self.rows[i]);
        }
        let pivots = order.iter().map(|&i| self.pivots[i]).collect();
        Subspace {
            ambient_dim: self.ambient_dim,
            basis: FMatrix::from_raw(self.field, order.len(), self.ambient_dim, data),
            pivots,
        }
    }
}
