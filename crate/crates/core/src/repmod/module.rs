use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, QuotientMap};
use crate::presalg::Algebra;
use crate::scalar::Scalar;

/// A finite-dimensional representation: a vector space per vertex and a
/// matrix per arrow, mapping the source fiber to the target fiber.
///
/// Paths act left to right, so `a*b` acts as `M_b · M_a`. In module terms
/// these are right modules over the path algebra.
#[derive(Clone, Debug)]
pub struct Module<F> {
    alg: Arc<Algebra<F>>,
    dims: Vec<usize>,
    mats: Vec<Matrix<F>>,
}

/// Vertex-wise linear maps; `comps[v]` is `dim N_v × dim M_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap<F> {
    pub comps: Vec<Matrix<F>>,
}

impl<F: Scalar> Module<F> {
    /// Checks matrix shapes and that every relation acts as zero.
    pub fn new(alg: Arc<Algebra<F>>, dims: Vec<usize>, mats: Vec<Matrix<F>>) -> Result<Self> {
        let alg2 = alg.clone();
        let q = alg2.quiver();
        if dims.len() != q.n_vertices() || mats.len() != q.arrows().len() {
            return Err(Error::InvalidModule(
                "shape does not match the quiver".into(),
            ));
        }
        for (a, m) in q.arrows().iter().zip(&mats) {
            if m.rows() != dims[a.tgt] || m.cols() != dims[a.src] {
                return Err(Error::InvalidModule(format!(
                    "arrow `{}` has the wrong shape",
                    a.name
                )));
            }
        }
        let m = Module { alg, dims, mats };
        for r in m.alg.relations() {
            let (s, t) = m.alg.quiver().word_ends(&r.terms[0].1).unwrap();
            let mut acc = Matrix::zeros(m.dims[t], m.dims[s]);
            for (c, w) in &r.terms {
                acc = acc.add(&m.act_word(s, w).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidModule(format!(
                    "relation `{}` does not vanish",
                    r.display(m.alg.quiver())
                )));
            }
        }
        if let Some(c) = m.alg.cutoff() {
            // Truncated algebras also kill every path above the cutoff; checking
            // the basis layer just beyond it suffices.
            for b in m.alg.basis() {
                for (ai, a) in q.arrows().iter().enumerate() {
                    if a.src == b.tgt && b.degree + a.degree > c {
                        let mut w = b.word.clone();
                        w.push(ai);
                        if !m.act_word(b.src, &w).is_zero() {
                            return Err(Error::InvalidModule(
                                "path above the degree cutoff acts".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn zero(alg: Arc<Algebra<F>>) -> Self {
        let dims = vec![0; alg.n_vertices()];
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(0, 0))
            .collect();
        Module { alg, dims, mats }
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn arrow(&self, a: usize) -> &Matrix<F> {
        &self.mats[a]
    }

    pub fn arrows(&self) -> &[Matrix<F>] {
        &self.mats
    }

    /// Action of the path `word` from `src`: a `dim M_tgt × dim M_src` matrix.
    pub fn act_word(&self, src: usize, word: &[usize]) -> Matrix<F> {
        let mut m = Matrix::identity(self.dims[src]);
        for &a in word {
            m = self.mats[a].mul(&m);
        }
        m
    }

    /// Action of a basis path of the algebra.
    pub fn act_basis(&self, b: usize) -> Matrix<F> {
        let p = &self.alg.basis()[b];
        self.act_word(p.src, &p.word)
    }

    /// Offsets of each vertex in the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            off.push(acc);
            acc += d;
        }
        off
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg)
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Indecomposable projective `e_v A`: its fiber at `w` has basis the paths from `v` to `w`.
    pub fn projective(alg: &Arc<Algebra<F>>, v: usize) -> Self {
        let n = alg.n_vertices();
        let dims: Vec<usize> = (0..n).map(|w| alg.block(v, w).len()).collect();
        let pos = |w: usize, b: usize| alg.block(v, w).iter().position(|&x| x == b).unwrap();
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(dims[a.tgt], dims[a.src]);
                for (j, &b) in alg.block(v, a.src).iter().enumerate() {
                    for (t, c) in alg.right_arrow(ai, b) {
                        m[(pos(a.tgt, *t), j)] = c.clone();
                    }
                }
                m
            })
            .collect();
        Module {
            alg: alg.clone(),
            dims,
            mats,
        }
    }

    /// Indecomposable injective, the dual of the projective over the opposite algebra.
    pub fn injective(alg: &Arc<Algebra<F>>, v: usize) -> Self {
        Module::projective(&alg.opposite(), v).dual()
    }

    pub fn simple(alg: &Arc<Algebra<F>>, v: usize) -> Self {
        let mut dims = vec![0; alg.n_vertices()];
        dims[v] = 1;
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.tgt], dims[a.src]))
            .collect();
        Module {
            alg: alg.clone(),
            dims,
            mats,
        }
    }

    /// The regular module `A_A` as the sum of the indecomposable projectives.
    pub fn regular(alg: &Arc<Algebra<F>>) -> Self {
        let ps: Vec<Module<F>> = (0..alg.n_vertices())
            .map(|v| Module::projective(alg, v))
            .collect();
        Module::direct_sum(alg, &ps).0
    }

    /// Direct sum with its canonical injections and projections.
    pub fn direct_sum(
        alg: &Arc<Algebra<F>>,
        parts: &[Module<F>],
    ) -> (Self, Vec<ModuleMap<F>>, Vec<ModuleMap<F>>) {
        let n = alg.n_vertices();
        let dims: Vec<usize> = (0..n)
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(dims[a.tgt], dims[a.src]);
                let (mut r, mut c) = (0, 0);
                for p in parts {
                    m.set_block(r, c, &p.mats[ai]);
                    r += p.dims[a.tgt];
                    c += p.dims[a.src];
                }
                m
            })
            .collect();
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        let mut off = vec![0; n];
        for p in parts {
            let i = (0..n)
                .map(|v| {
                    Matrix::from_fn(dims[v], p.dims[v], |r, c| {
                        if r == off[v] + c {
                            F::one()
                        } else {
                            F::zero()
                        }
                    })
                })
                .collect::<Vec<_>>();
            let pr = i.iter().map(Matrix::transpose).collect();
            inj.push(ModuleMap { comps: i });
            proj.push(ModuleMap { comps: pr });
            for v in 0..n {
                off[v] += p.dims[v];
            }
        }
        (
            Module {
                alg: alg.clone(),
                dims,
                mats,
            },
            inj,
            proj,
        )
    }

    /// The submodule spanned by the columns of `spans[v]`, with its inclusion.
    ///
    /// The spans must be linearly independent and stable under the arrows.
    pub fn submodule(&self, spans: &[Matrix<F>]) -> (Self, ModuleMap<F>) {
        let dims: Vec<usize> = spans.iter().map(Matrix::cols).collect();
        let mats = self
            .alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let img = self.mats[ai].mul(&spans[a.src]);
                spans[a.tgt]
                    .solve_matrix(&img)
                    .expect("span is not a submodule")
            })
            .collect();
        (
            Module {
                alg: self.alg.clone(),
                dims,
                mats,
            },
            ModuleMap {
                comps: spans.to_vec(),
            },
        )
    }

    /// The quotient by the submodule spanned by `spans[v]`, with the projection.
    pub fn quotient(&self, spans: &[Matrix<F>]) -> (Self, ModuleMap<F>) {
        let qs: Vec<QuotientMap<F>> = (0..self.dims.len())
            .map(|v| QuotientMap::new(self.dims[v], &spans[v].col_vecs()))
            .collect();
        let dims: Vec<usize> = qs.iter().map(QuotientMap::dim).collect();
        let proj_mat = |v: usize| {
            let cols: Vec<Vec<F>> = (0..self.dims[v])
                .map(|j| {
                    let mut e = vec![F::zero(); self.dims[v]];
                    e[j] = F::one();
                    qs[v].project(&e)
                })
                .collect();
            Matrix::from_cols(dims[v], &cols)
        };
        let projs: Vec<Matrix<F>> = (0..self.dims.len()).map(proj_mat).collect();
        let mats = self
            .alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let cols: Vec<Vec<F>> = (0..dims[a.src])
                    .map(|j| {
                        let mut q = vec![F::zero(); dims[a.src]];
                        q[j] = F::one();
                        let lifted = qs[a.src].lift(&q);
                        qs[a.tgt].project(&self.mats[ai].mul_vec(&lifted))
                    })
                    .collect();
                Matrix::from_cols(dims[a.tgt], &cols)
            })
            .collect();
        (
            Module {
                alg: self.alg.clone(),
                dims,
                mats,
            },
            ModuleMap { comps: projs },
        )
    }

    /// The radical `M · rad A`, as column spans per vertex.
    pub fn radical_spans(&self) -> Vec<Matrix<F>> {
        let q = self.alg.quiver();
        (0..self.dims.len())
            .map(|v| {
                let mut span = Matrix::zeros(self.dims[v], 0);
                for (ai, a) in q.arrows().iter().enumerate() {
                    if a.tgt == v {
                        span = span.hstack(&self.mats[ai]);
                    }
                }
                span.column_basis()
            })
            .collect()
    }

    pub fn radical(&self) -> (Self, ModuleMap<F>) {
        self.submodule(&self.radical_spans())
    }

    pub fn top(&self) -> (Self, ModuleMap<F>) {
        self.quotient(&self.radical_spans())
    }

    /// Socle: joint kernel of all arrows leaving each vertex.
    pub fn socle_spans(&self) -> Vec<Matrix<F>> {
        let q = self.alg.quiver();
        (0..self.dims.len())
            .map(|v| {
                let mut stack = Matrix::zeros(0, self.dims[v]);
                for (ai, a) in q.arrows().iter().enumerate() {
                    if a.src == v {
                        stack = stack.vstack(&self.mats[ai]);
                    }
                }
                stack.kernel_basis()
            })
            .collect()
    }

    /// Standard duality `Hom_k(-, k)`, a module over the opposite algebra.
    pub fn dual(&self) -> Self {
        let op = self.alg.opposite();
        let mats = self.mats.iter().map(Matrix::transpose).collect();
        Module {
            alg: op,
            dims: self.dims.clone(),
            mats,
        }
    }

    /// Transports the module to an algebra with the same presentation.
    pub fn rebase(&self, alg: &Arc<Algebra<F>>) -> Result<Self> {
        if !self.alg.same_as(alg) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Module {
            alg: alg.clone(),
            dims: self.dims.clone(),
            mats: self.mats.clone(),
        })
    }

    /// Multiset key that isomorphic modules share.
    pub fn dim_key(&self) -> Vec<usize> {
        self.dims.clone()
    }
}

impl<F: Scalar> ModuleMap<F> {
    pub fn zero(m: &Module<F>, n: &Module<F>) -> Self {
        ModuleMap {
            comps: (0..m.dims.len())
                .map(|v| Matrix::zeros(n.dims[v], m.dims[v]))
                .collect(),
        }
    }

    pub fn identity(m: &Module<F>) -> Self {
        ModuleMap {
            comps: m.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    /// `self ∘ g`: apply `g` first.
    pub fn after(&self, g: &Self) -> Self {
        ModuleMap {
            comps: self
                .comps
                .iter()
                .zip(&g.comps)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        ModuleMap {
            comps: self
                .comps
                .iter()
                .zip(&o.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ModuleMap {
            comps: self
                .comps
                .iter()
                .zip(&o.comps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        ModuleMap {
            comps: self.comps.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.comps
            .iter()
            .all(|c| c.is_square() && c.rank() == c.rows())
    }

    pub fn inverse(&self) -> Option<Self> {
        Some(ModuleMap {
            comps: self
                .comps
                .iter()
                .map(Matrix::inverse)
                .collect::<Option<Vec<_>>>()?,
        })
    }

    /// Whether the squares commute for every arrow.
    pub fn is_homomorphism(&self, m: &Module<F>, n: &Module<F>) -> bool {
        m.alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(ai, a)| n.mats[ai].mul(&self.comps[a.src]) == self.comps[a.tgt].mul(&m.mats[ai]))
    }

    /// Entries concatenated vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<F> {
        self.comps
            .iter()
            .flat_map(|c| c.entries().iter().cloned())
            .collect()
    }

    /// Dual map `D N -> D M`.
    pub fn dual(&self) -> Self {
        ModuleMap {
            comps: self.comps.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn kernel(&self, m: &Module<F>) -> (Module<F>, ModuleMap<F>) {
        m.submodule(
            &self
                .comps
                .iter()
                .map(Matrix::kernel_basis)
                .collect::<Vec<_>>(),
        )
    }

    pub fn image(&self, n: &Module<F>) -> (Module<F>, ModuleMap<F>) {
        n.submodule(
            &self
                .comps
                .iter()
                .map(Matrix::column_basis)
                .collect::<Vec<_>>(),
        )
    }

    pub fn cokernel(&self, n: &Module<F>) -> (Module<F>, ModuleMap<F>) {
        n.quotient(
            &self
                .comps
                .iter()
                .map(Matrix::column_basis)
                .collect::<Vec<_>>(),
        )
    }

    /// Block map between direct sums: `blocks[i][j]: parts_m[j] -> parts_n[i]`.
    pub fn from_blocks(
        blocks: &[Vec<ModuleMap<F>>],
        m_dims: &[Vec<usize>],
        n_dims: &[Vec<usize>],
    ) -> Self {
        let nv = m_dims.first().or(n_dims.first()).map_or(0, Vec::len);
        let comps = (0..nv)
            .map(|v| {
                let rows: usize = n_dims.iter().map(|d| d[v]).sum();
                let cols: usize = m_dims.iter().map(|d| d[v]).sum();
                let mut out = Matrix::zeros(rows, cols);
                let mut r = 0;
                for (i, nd) in n_dims.iter().enumerate() {
                    let mut c = 0;
                    for (j, md) in m_dims.iter().enumerate() {
                        out.set_block(r, c, &blocks[i][j].comps[v]);
                        c += md[v];
                    }
                    r += nd[v];
                }
                out
            })
            .collect();
        ModuleMap { comps }
    }
}
