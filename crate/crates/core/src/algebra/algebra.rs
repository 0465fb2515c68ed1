use std::fmt;

use serde::Serialize;

use crate::linalg::{EchelonBuilder, FMatrix, FieldSpec};
use crate::{Error, Result};

/// A finite-dimensional unital associative algebra given by structure constants
/// `b_i * b_j = sum_k c[i][j][k] b_k`.
#[derive(Clone)]
pub struct Algebra {
    name: String,
    field: FieldSpec,
    dim: usize,
    constants: Vec<u32>,
    unit: Vec<u32>,
    commutative: bool,
    left_mult: Vec<FMatrix>,
    generators: Vec<usize>,
}

/// One violated algebra axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AlgebraViolation {
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { j: usize },
    RightUnit { j: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub name: String,
    pub dim: usize,
    pub commutative: bool,
    pub violations: Vec<AlgebraViolation>,
}

impl AlgebraReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Algebra {
    /// Builds an algebra from a flat `[i][j][k]` constant table. Shapes and entry ranges
    /// are checked here; the axioms are checked by [`validate_algebra`].
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        dim: usize,
        constants: Vec<u32>,
        unit: Vec<u32>,
    ) -> Result<Self> {
        if constants.len() != dim * dim * dim {
            return Err(Error::Shape(format!(
                "structure constants: expected {} entries, found {}",
                dim * dim * dim,
                constants.len()
            )));
        }
        if unit.len() != dim {
            return Err(Error::Shape(format!(
                "unit: expected {dim} entries, found {}",
                unit.len()
            )));
        }
        let p = field.p();
        if constants.iter().chain(&unit).any(|&x| x >= p) {
            return Err(Error::InvalidAlgebra(format!("entries must lie in [0, {p})")));
        }
        let commutative = (0..dim).all(|i| {
            (0..dim).all(|j| {
                (0..dim).all(|k| constants[(i * dim + j) * dim + k] == constants[(j * dim + i) * dim + k])
            })
        });
        let left_mult = (0..dim)
            .map(|i| {
                let mut l = FMatrix::zeros(field, dim, dim);
                for j in 0..dim {
                    for k in 0..dim {
                        l.set(k, j, constants[(i * dim + j) * dim + k]);
                    }
                }
                l
            })
            .collect();
        let mut a = Algebra {
            name: name.into(),
            field,
            dim,
            constants,
            unit,
            commutative,
            left_mult,
            generators: Vec::new(),
        };
        a.generators = a.compute_generators();
        Ok(a)
    }

    /// Like [`Algebra::new`] but rejects algebras that fail validation.
    pub fn new_validated(
        name: impl Into<String>,
        field: FieldSpec,
        dim: usize,
        constants: Vec<u32>,
        unit: Vec<u32>,
    ) -> Result<Self> {
        let a = Self::new(name, field, dim, constants, unit)?;
        let report = validate_algebra(&a);
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidAlgebra(format!("{} violates {v:?}", a.name)));
        }
        Ok(a)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[u32] {
        &self.unit
    }
    pub fn is_commutative(&self) -> bool {
        self.commutative
    }
    pub fn constants(&self) -> &[u32] {
        &self.constants
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> u32 {
        self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Matrix of left multiplication by `b_i` in the basis `b_0..b_{n-1}`.
    pub fn left_mult(&self, i: usize) -> &FMatrix {
        &self.left_mult[i]
    }

    /// Basis indices that, with the unit, generate the algebra.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let n = self.dim;
        let mut out = vec![0; n];
        for (i, &ai) in a.iter().enumerate().take(n) {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate().take(n) {
                if bj == 0 {
                    continue;
                }
                let s = f.mul(ai, bj);
                for (k, o) in out.iter_mut().enumerate() {
                    *o = f.add(*o, f.mul(s, self.c(i, j, k)));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    /// The algebra with reversed multiplication.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mut c = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[(i * n + j) * n + k] = self.c(j, i, k);
                }
            }
        }
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None if self.commutative => self.name.clone(),
            None => format!("{}^op", self.name),
        };
        Algebra::new(name, self.field, n, c, self.unit.clone()).expect("opposite of a well-formed table")
    }

    fn compute_generators(&self) -> Vec<usize> {
        let n = self.dim;
        let mut span = EchelonBuilder::new(self.field, n);
        let mut members: Vec<Vec<u32>> = Vec::new();
        let add = |v: Vec<u32>, span: &mut EchelonBuilder, members: &mut Vec<Vec<u32>>| {
            if span.insert(v.clone()) {
                members.push(v);
            }
        };
        add(self.unit.clone(), &mut span, &mut members);
        let close = |span: &mut EchelonBuilder, members: &mut Vec<Vec<u32>>| loop {
            let before = members.len();
            let snapshot = members.clone();
            for a in &snapshot {
                for b in &snapshot {
                    let ab = self.mul(a, b);
                    if span.insert(ab.clone()) {
                        members.push(ab);
                    }
                }
            }
            if members.len() == before {
                break;
            }
        };
        close(&mut span, &mut members);
        let mut gens = Vec::new();
        for i in 0..n {
            let e = self.basis_vector(i);
            if !span.contains(&e) {
                gens.push(i);
                add(e, &mut span, &mut members);
                close(&mut span, &mut members);
            }
        }
        gens
    }
}

/// Structural equality: field, structure constants and unit. Names are labels only.
impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.constants == other.constants
            && self.unit == other.unit
    }
}
impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra({}, F_{}, dim {})",
            self.name,
            self.field.p(),
            self.dim
        )
    }
}

/// Checks associativity and both unit laws on basis elements.
pub fn validate_algebra(a: &Algebra) -> AlgebraReport {
    let n = a.dim;
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let bij: Vec<u32> = (0..n).map(|k| a.c(i, j, k)).collect();
            for k in 0..n {
                let left = a.mul(&bij, &a.basis_vector(k));
                let bjk: Vec<u32> = (0..n).map(|l| a.c(j, k, l)).collect();
                let right = a.mul(&a.basis_vector(i), &bjk);
                if left != right {
                    violations.push(AlgebraViolation::Associativity { i, j, k });
                }
            }
        }
    }
    for j in 0..n {
        let e = a.basis_vector(j);
        if a.mul(a.unit(), &e) != e {
            violations.push(AlgebraViolation::LeftUnit { j });
        }
        if a.mul(&e, a.unit()) != e {
            violations.push(AlgebraViolation::RightUnit { j });
        }
    }
    AlgebraReport {
        name: a.name.clone(),
        dim: n,
        commutative: a.commutative,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn corpus_algebras_validate() {
        for a in corpus::algebras_f2() {
            assert!(validate_algebra(&a).is_valid(), "{a:?}");
        }
    }

    #[test]
    fn x_squared_equals_x_is_still_an_algebra() {
        // F_2[x]/(x^2 - x): a different but valid algebra
        let f = FieldSpec::new(2).unwrap();
        let a = Algebra::new("idem", f, 2, vec![1, 0, 0, 1, 0, 1, 0, 1], vec![1, 0]).unwrap();
        assert!(validate_algebra(&a).is_valid());
    }

    #[test]
    fn broken_unit_reported() {
        let f = FieldSpec::new(2).unwrap();
        // dual numbers with the unit moved to x
        let a = Algebra::new("bad", f, 2, vec![1, 0, 0, 1, 0, 1, 0, 0], vec![0, 1]).unwrap();
        let report = validate_algebra(&a);
        assert!(report.violations.contains(&AlgebraViolation::LeftUnit { j: 0 }));
        assert!(report.violations.contains(&AlgebraViolation::RightUnit { j: 1 }));
    }

    #[test]
    fn upper_triangular_is_noncommutative() {
        let t = corpus::upper_triangular();
        assert!(validate_algebra(&t).is_valid());
        assert!(!t.is_commutative());
        assert_ne!(t.opposite(), t);
        assert_eq!(t.opposite().opposite(), t);
    }

    #[test]
    fn generators_are_small() {
        assert_eq!(corpus::truncated_poly(3).generators(), &[1]);
        assert_eq!(corpus::r3().generators(), &[1, 2]);
        assert!(corpus::field_algebra(FieldSpec::new(5).unwrap()).generators().is_empty());
    }
}
