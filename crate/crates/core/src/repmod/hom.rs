use crate::error::Result;
use crate::exactla::Matrix;
use crate::repmod::module::{Module, ModuleMap};
use crate::scalar::Scalar;

/// A basis of `Hom(M, N)` with cheap coordinates.
///
/// The basis comes from the kernel of the commuting-square system, so each
/// basis map is 1 at its own free unknown and 0 at the others; coordinates of
/// any homomorphism are read off at those positions.
#[derive(Clone, Debug)]
pub struct HomSpace<F> {
    pub basis: Vec<ModuleMap<F>>,
    free: Vec<usize>,
}

impl<F: Scalar> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homomorphism in this basis.
    pub fn coords(&self, f: &ModuleMap<F>) -> Vec<F> {
        let flat = f.flatten();
        self.free.iter().map(|&i| flat[i].clone()).collect()
    }

    pub fn combine(&self, coeffs: &[F], m: &Module<F>, n: &Module<F>) -> ModuleMap<F> {
        let mut acc = ModuleMap::zero(m, n);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }
}

pub fn hom_space<F: Scalar>(m: &Module<F>, n: &Module<F>) -> Result<HomSpace<F>> {
    m.check_same(n)?;
    let nv = m.dims().len();
    let mut off = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        off.push(total);
        total += n.dims()[v] * m.dims()[v];
    }
    let q = m.algebra().quiver();
    let n_eq: usize = q
        .arrows()
        .iter()
        .map(|a| n.dims()[a.tgt] * m.dims()[a.src])
        .sum();
    let mut eq: Matrix<F> = Matrix::zeros(n_eq, total);
    let mut row = 0;
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.src, a.tgt);
        let (ms, nt, ns, mt) = (m.dims()[s], n.dims()[t], n.dims()[s], m.dims()[t]);
        let (na, ma) = (n.arrow(ai), m.arrow(ai));
        // (N_a f_s - f_t M_a)[i][j] = 0
        for i in 0..nt {
            for j in 0..ms {
                for k in 0..ns {
                    let c = &na[(i, k)];
                    if !c.is_zero() {
                        let col = off[s] + k * ms + j;
                        eq[(row, col)] = eq[(row, col)].clone() + c.clone();
                    }
                }
                for k in 0..mt {
                    let c = &ma[(k, j)];
                    if !c.is_zero() {
                        let col = off[t] + i * mt + k;
                        eq[(row, col)] = eq[(row, col)].clone() - c.clone();
                    }
                }
                row += 1;
            }
        }
    }
    let (ker, free) = eq.kernel_with_free();
    let basis = (0..ker.cols())
        .map(|j| {
            let col = ker.col(j);
            ModuleMap {
                comps: (0..nv)
                    .map(|v| {
                        let (r, c) = (n.dims()[v], m.dims()[v]);
                        Matrix::from_fn(r, c, |i, k| col[off[v] + i * c + k].clone())
                    })
                    .collect(),
            }
        })
        .collect();
    Ok(HomSpace { basis, free })
}

/// A basis of `Hom(M, N)`.
pub fn hom_basis<F: Scalar>(m: &Module<F>, n: &Module<F>) -> Result<Vec<ModuleMap<F>>> {
    Ok(hom_space(m, n)?.basis)
}
