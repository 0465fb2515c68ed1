//! Hom spaces, tensor products over commutative algebras, and the adjunction between them.

mod tensor;

pub use tensor::{
    counit_map, homothety, is_semidualizing, tensor_map, tensor_over_algebra, unit_map,
    SemidualizingReport, TensorModule,
};

use crate::algebra::{Module, ModuleMap};
use crate::linalg::{FMatrix, Subspace};
use crate::{Error, Result};

/// The space of module maps `source -> target`.
///
/// Maps are flattened row-major into `F^(t*s)`; the basis is the RREF of the solution space,
/// so coordinates are read off at the pivots.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Module,
    target: Module,
    space: Subspace,
}

impl HomSpace {
    pub fn source(&self) -> &Module {
        &self.source
    }
    pub fn target(&self) -> &Module {
        &self.target
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis_matrix(&self, k: usize) -> FMatrix {
        let (t, s) = (self.target.dim(), self.source.dim());
        FMatrix::from_vec(self.source.field(), t, s, self.space.vector(k).to_vec())
            .expect("basis vector has map shape")
    }

    pub fn basis_map(&self, k: usize) -> ModuleMap {
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), self.basis_matrix(k))
    }

    pub fn basis_maps(&self) -> Vec<ModuleMap> {
        (0..self.dim()).map(|k| self.basis_map(k)).collect()
    }

    /// Coordinates of a matrix, or `None` if it is not a module map.
    pub fn coordinates(&self, f: &FMatrix) -> Option<Vec<u32>> {
        if f.shape() != (self.target.dim(), self.source.dim()) {
            return None;
        }
        self.space.coordinates(f.data())
    }

    /// Coordinates of a matrix known to be a module map.
    pub fn coordinates_unchecked(&self, f: &FMatrix) -> Vec<u32> {
        debug_assert!(self.space.contains(f.data()));
        self.space.coordinates_unchecked(f.data())
    }

    pub fn combine(&self, coeffs: &[u32]) -> FMatrix {
        let f = self.source.field();
        let mut out = vec![0; self.space.ambient_dim()];
        for (k, &x) in coeffs.iter().enumerate() {
            if x != 0 {
                for (o, &b) in out.iter_mut().zip(self.space.vector(k)) {
                    *o = f.add(*o, f.mul(x, b));
                }
            }
        }
        FMatrix::from_vec(f, self.target.dim(), self.source.dim(), out).expect("map shape")
    }

    /// `Hom(source, target)` as a module via post-composition; requires commutativity.
    pub fn as_module(&self) -> Result<Module> {
        let a = self.source.algebra();
        if !a.is_commutative() {
            return Err(Error::NotCommutative("Hom as a module"));
        }
        let f = a.field();
        let h = self.dim();
        let action = (0..a.dim())
            .map(|i| {
                let mut m = FMatrix::zeros(f, h, h);
                for j in 0..h {
                    let img = self.target.act(i).mul(&self.basis_matrix(j));
                    for (r, x) in self.coordinates_unchecked(&img).into_iter().enumerate() {
                        m.set(r, j, x);
                    }
                }
                m
            })
            .collect();
        Ok(Module::from_parts(a.clone(), h, action))
    }
}

fn is_regular(m: &Module) -> bool {
    let a = m.algebra();
    m.dim() == a.dim() && (0..a.dim()).all(|i| m.act(i) == a.left_mult(i))
}

/// Basis of the space of module maps `m -> n`.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.field();
    let (s, t) = (m.dim(), n.dim());
    let space = if s == 0 || t == 0 {
        Subspace::zero(f, s * t)
    } else if is_regular(m) {
        // a map out of the regular module is determined by the image of the unit
        let a = m.algebra();
        let vs: Vec<Vec<u32>> = (0..t)
            .map(|q| {
                let mut x = vec![0; t * s];
                for i in 0..a.dim() {
                    for r in 0..t {
                        x[r * s + i] = n.act(i).get(r, q);
                    }
                }
                x
            })
            .collect();
        Subspace::from_vectors(f, t * s, &vs)
    } else {
        let gens = m.algebra().generators();
        // X rho^m_g - rho^n_g X = 0, unknown x_{ac} at a*s + c
        let mut eqs = FMatrix::zeros(f, gens.len() * t * s, t * s);
        for (gi, &g) in gens.iter().enumerate() {
            let (rm, rn) = (m.act(g), n.act(g));
            for a in 0..t {
                for b in 0..s {
                    let row = eqs.row_mut((gi * t + a) * s + b);
                    for c in 0..s {
                        let v = rm.get(c, b);
                        if v != 0 {
                            row[a * s + c] = f.add(row[a * s + c], v);
                        }
                    }
                    for c in 0..t {
                        let v = rn.get(a, c);
                        if v != 0 {
                            row[c * s + b] = f.sub(row[c * s + b], v);
                        }
                    }
                }
            }
        }
        eqs.kernel_basis()
    };
    Ok(HomSpace {
        source: m.clone(),
        target: n.clone(),
        space,
    })
}

/// `Hom(c, n)` as a module over a commutative algebra.
pub fn hom_module(c: &Module, n: &Module) -> Result<Module> {
    hom_space(c, n)?.as_module()
}

/// Matrix of `Hom(c, g): Hom(c, n) -> Hom(c, n')`, `f -> g f`, in the given bases.
pub fn postcompose_matrix(g: &ModuleMap, from: &HomSpace, to: &HomSpace) -> FMatrix {
    let f = g.source().field();
    let mut out = FMatrix::zeros(f, to.dim(), from.dim());
    for j in 0..from.dim() {
        let img = g.matrix().mul(&from.basis_matrix(j));
        for (r, x) in to.coordinates_unchecked(&img).into_iter().enumerate() {
            out.set(r, j, x);
        }
    }
    out
}

/// Matrix of `Hom(g, n): Hom(m', n) -> Hom(m, n)`, `f -> f g`, in the given bases.
pub fn precompose_matrix(g: &ModuleMap, from: &HomSpace, to: &HomSpace) -> FMatrix {
    let f = g.source().field();
    let mut out = FMatrix::zeros(f, to.dim(), from.dim());
    for j in 0..from.dim() {
        let img = from.basis_matrix(j).mul(g.matrix());
        for (r, x) in to.coordinates_unchecked(&img).into_iter().enumerate() {
            out.set(r, j, x);
        }
    }
    out
}

/// `Hom(c, g)` as a module map between Hom modules.
pub fn hom_functor_map(c: &Module, g: &ModuleMap) -> Result<ModuleMap> {
    let from = hom_space(c, g.source())?;
    let to = hom_space(c, g.target())?;
    let m = postcompose_matrix(g, &from, &to);
    Ok(ModuleMap::new_unchecked(from.as_module()?, to.as_module()?, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_sum, regular_module, zero_module};
    use crate::corpus;
    use std::sync::Arc;

    #[test]
    fn hom_from_regular_has_target_dimension() {
        for a in corpus::algebras_f2() {
            let a = Arc::new(a);
            let r = regular_module(&a);
            let rr = direct_sum(&a, &[&r, &r]);
            assert_eq!(hom_space(&r, &rr).unwrap().dim(), 2 * a.dim());
        }
    }

    #[test]
    fn hom_k_into_dual_numbers_is_one_dimensional() {
        let a = Arc::new(corpus::truncated_poly(2));
        let k = corpus::residue_field(&a);
        let h = hom_space(&k, &regular_module(&a)).unwrap();
        assert_eq!(h.dim(), 1);
        let f = h.basis_map(0);
        assert_eq!(f.matrix().col_vec(0), vec![0, 1]);
    }

    #[test]
    fn hom_into_zero_is_zero() {
        let a = Arc::new(corpus::r3());
        let h = hom_space(&regular_module(&a), &zero_module(&a)).unwrap();
        assert_eq!(h.dim(), 0);
    }

    #[test]
    fn generic_path_agrees_with_regular_shortcut() {
        let a = Arc::new(corpus::upper_triangular());
        let r = regular_module(&a);
        // an isomorphic copy of the regular module with a scrambled basis defeats the shortcut
        let f = a.field();
        let p = FMatrix::from_rows(f, &[[1, 1, 0], [0, 1, 0], [0, 1, 1]]);
        let pinv = FMatrix::from_rows(f, &[[1, 1, 0], [0, 1, 0], [0, 1, 1]]);
        assert!(p.mul(&pinv).is_identity());
        let action = r.actions().iter().map(|x| p.mul(x).mul(&pinv)).collect();
        let r2 = Module::new(a.clone(), action).unwrap();
        for n in corpus::modules_of("t2") {
            assert_eq!(
                hom_space(&r, &n.1).unwrap().dim(),
                hom_space(&r2, &n.1).unwrap().dim(),
                "{}",
                n.0
            );
        }
    }

    #[test]
    fn mismatched_algebras_rejected() {
        let a = Arc::new(corpus::r3());
        let b = Arc::new(corpus::truncated_poly(3));
        let err = hom_space(&regular_module(&a), &regular_module(&b)).unwrap_err();
        assert_eq!(err, Error::AlgebraMismatch);
    }
}
