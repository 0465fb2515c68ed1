use std::collections::HashMap;
use std::ops::Range;
use std::sync::{Arc, OnceLock};

use crate::algebra::{direct_sum, Algebra, Module};
use crate::hom::{hom_space, HomSpace};
use crate::linalg::FMatrix;
use crate::Result;

/// A direct sum kept as its list of summands.
///
/// Power terms `C^r` repeat one shared module, so Hom computations between terms only ever
/// solve one small system per pair of distinct pieces.
#[derive(Clone, Debug)]
pub struct Term {
    algebra: Arc<Algebra>,
    pieces: Vec<Module>,
    offsets: Vec<usize>,
    module: OnceLock<Module>,
}

impl Term {
    pub fn new(algebra: &Arc<Algebra>, pieces: Vec<Module>) -> Self {
        let mut offsets = Vec::with_capacity(pieces.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for p in &pieces {
            acc += p.dim();
            offsets.push(acc);
        }
        Term {
            algebra: algebra.clone(),
            pieces,
            offsets,
            module: OnceLock::new(),
        }
    }

    pub fn power(c: &Module, r: usize) -> Self {
        Self::new(c.algebra(), vec![c.clone(); r])
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Self::new(algebra, Vec::new())
    }

    pub fn single(m: &Module) -> Self {
        Self::new(m.algebra(), vec![m.clone()])
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
    pub fn pieces(&self) -> &[Module] {
        &self.pieces
    }
    pub fn dim(&self) -> usize {
        self.offsets[self.pieces.len()]
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn range(&self, t: usize) -> Range<usize> {
        self.offsets[t]..self.offsets[t + 1]
    }

    /// The direct sum as one module.
    pub fn module(&self) -> &Module {
        self.module.get_or_init(|| {
            let refs: Vec<&Module> = self.pieces.iter().collect();
            direct_sum(&self.algebra, &refs)
        })
    }
}

/// Memoized Hom spaces between pieces, keyed by module identity.
#[derive(Default)]
pub struct HomCache {
    // the modules are held so their addresses stay valid keys
    entries: HashMap<(usize, usize), (Module, Module, Arc<HomSpace>)>,
}

impl HomCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, m: &Module, n: &Module) -> Result<Arc<HomSpace>> {
        let key = (m.key(), n.key());
        if let Some((_, _, h)) = self.entries.get(&key) {
            return Ok(h.clone());
        }
        let h = Arc::new(hom_space(m, n)?);
        self.entries.insert(key, (m.clone(), n.clone(), h.clone()));
        Ok(h)
    }
}

struct Block {
    t: usize,
    v: usize,
    space: Arc<HomSpace>,
    offset: usize,
}

/// Basis of `Hom(source, target)` between terms: the concatenation over piece pairs
/// `(t, v)` of bases of `Hom(P_t, Q_v)`, in row-major order of `(t, v)`.
pub struct BlockHom {
    source: Term,
    target: Term,
    blocks: Vec<Block>,
    dim: usize,
}

impl BlockHom {
    pub fn new(source: &Term, target: &Term, cache: &mut HomCache) -> Result<Self> {
        let mut blocks = Vec::new();
        let mut offset = 0;
        for (t, p) in source.pieces().iter().enumerate() {
            for (v, q) in target.pieces().iter().enumerate() {
                let space = cache.get(p, q)?;
                let d = space.dim();
                if d > 0 {
                    blocks.push(Block { t, v, space, offset });
                    offset += d;
                }
            }
        }
        Ok(BlockHom {
            source: source.clone(),
            target: target.clone(),
            blocks,
            dim: offset,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn source(&self) -> &Term {
        &self.source
    }
    pub fn target(&self) -> &Term {
        &self.target
    }

    /// Visits every basis element as `(index, source piece, target piece, block matrix)`.
    pub fn for_each_basis(&self, mut f: impl FnMut(usize, usize, usize, &FMatrix)) {
        for b in &self.blocks {
            for k in 0..b.space.dim() {
                f(b.offset + k, b.t, b.v, &b.space.basis_matrix(k));
            }
        }
    }

    /// Coordinates of a full `target.dim x source.dim` matrix known to be a module map.
    pub fn coordinates(&self, full: &FMatrix) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for b in &self.blocks {
            let rows = self.target.range(b.v);
            let cols = self.source.range(b.t);
            let s = cols.len();
            for (k, &pc) in b.space.space().pivots().iter().enumerate() {
                out[b.offset + k] = full.get(rows.start + pc / s, cols.start + pc % s);
            }
        }
        out
    }

    /// Full matrix of a coordinate vector.
    pub fn combine(&self, coeffs: &[u32]) -> FMatrix {
        let f = self.source.algebra().field();
        let mut out = FMatrix::zeros(f, self.target.dim(), self.source.dim());
        for b in &self.blocks {
            let local = &coeffs[b.offset..b.offset + b.space.dim()];
            if local.iter().any(|&x| x != 0) {
                let m = b.space.combine(local);
                let block = out
                    .submatrix(self.target.range(b.v), self.source.range(b.t))
                    .add(&m);
                out.set_block(self.target.range(b.v).start, self.source.range(b.t).start, &block);
            }
        }
        out
    }
}

/// Matrix of `Hom(d, N): Hom(Y_{j-1}, N) -> Hom(Y_j, N)`, `β -> β ∘ d`, where `d: Y_j -> Y_{j-1}`.
///
/// `from` and `to` may have arbitrary target terms; the map is block-sparse in the target piece.
pub fn precompose_blocks(from: &BlockHom, to: &BlockHom, d: &FMatrix) -> FMatrix {
    let f = from.source().algebra().field();
    let mut out = FMatrix::zeros(f, to.dim(), from.dim());
    let tgt = from.target();
    from.for_each_basis(|col, t, v, gamma| {
        let rows = from.source().range(t);
        let d_rows = d.submatrix(rows, 0..d.cols());
        let img = gamma.mul(&d_rows);
        let mut full = FMatrix::zeros(f, tgt.dim(), d.cols());
        full.set_block(tgt.range(v).start, 0, &img);
        for (r, x) in to.coordinates(&full).into_iter().enumerate() {
            if x != 0 {
                out.set(r, col, x);
            }
        }
    });
    out
}

/// Matrix of `Hom(X, g): Hom(X, Q) -> Hom(X, Q')`, `β -> g ∘ β`, where `g: Q -> Q'`.
pub fn postcompose_blocks(from: &BlockHom, to: &BlockHom, g: &FMatrix) -> FMatrix {
    let f = from.source().algebra().field();
    let mut out = FMatrix::zeros(f, to.dim(), from.dim());
    let src = from.source();
    from.for_each_basis(|col, t, v, gamma| {
        let cols = from.target().range(v);
        let g_cols = g.submatrix(0..g.rows(), cols);
        let img = g_cols.mul(gamma);
        let mut full = FMatrix::zeros(f, g.rows(), src.dim());
        full.set_block(0, src.range(t).start, &img);
        for (r, x) in to.coordinates(&full).into_iter().enumerate() {
            if x != 0 {
                out.set(r, col, x);
            }
        }
    });
    out
}
