//! Syzygies, cosyzygies and the Cohen-Macaulay test for window modules.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::QuotientMap;
use crate::presalg::Algebra;
use crate::repmod::{
    decompose, ext_space, hom_space, is_projective, map_from_generators, projective_cover, Cover,
    Module, Resolution,
};
use crate::scalar::Scalar;
use crate::yoncat::window::{UModule, UModuleMap, YonedaWindow};

/// A minimal projective presentation `P1 --d--> P0 --> X --> 0`.
#[derive(Clone, Debug)]
pub struct Presentation<F> {
    pub p0: Cover<F>,
    pub p1: Cover<F>,
    pub d: UModuleMap<F>,
}

impl<F: Scalar> Presentation<F> {
    /// The presented module, rebuilt as a cokernel.
    pub fn cokernel(&self) -> UModule<F> {
        self.d.cokernel(&self.p0.proj).0
    }
}

impl<F: Scalar> YonedaWindow<F> {
    pub fn syzygy(&self, x: &UModule<F>) -> Result<UModule<F>> {
        self.require_margin(x, 0, 1, "syzygy")?;
        let c = projective_cover(x);
        Ok(c.pi.kernel(&c.proj).0)
    }

    pub fn presentation(&self, x: &UModule<F>) -> Result<Presentation<F>> {
        self.require_margin(x, 0, 1, "presentation")?;
        let p0 = projective_cover(x);
        let (k, inc) = p0.pi.kernel(&p0.proj);
        let p1 = projective_cover(&k);
        let d = inc.after(&p1.pi);
        Ok(Presentation { p0, p1, d })
    }

    /// Indecomposable summands of `x` that are not projective.
    pub fn nonprojective_summands(&self, x: &UModule<F>) -> Result<Vec<UModule<F>>> {
        Ok(decompose(x)?
            .into_iter()
            .filter(|m| !is_projective(m))
            .collect())
    }

    pub fn strip_projectives(&self, x: &UModule<F>) -> Result<UModule<F>> {
        let parts = self.nonprojective_summands(x)?;
        Ok(Module::direct_sum(self.op(), &parts).0)
    }

    /// A left approximation of `x` by a sum of window projectives.
    ///
    /// Only projectives generated at or below the top degree of `x` receive
    /// nonzero maps. Working downwards, a map is kept only if it does not
    /// factor through the maps already kept, so few redundant summands occur.
    pub fn left_approximation(&self, x: &UModule<F>) -> Result<(UModule<F>, UModuleMap<F>)> {
        let wop = self.op();
        let mut verts: Vec<usize> = Vec::new();
        let mut maps: Vec<UModuleMap<F>> = Vec::new();
        if let Some(&top) = self.top_degrees(x).last() {
            let mut cands: Vec<usize> = (0..wop.n_vertices())
                .filter(|&v| self.degree(v) <= top)
                .collect();
            cands.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
            for v in cands {
                let pv = Module::projective(wop, v);
                let hom = hom_space(x, &pv)?;
                if hom.dim() == 0 {
                    continue;
                }
                let mut spans = Vec::new();
                for (&u, f) in verts.iter().zip(&maps) {
                    for e in 0..pv.dims()[u] {
                        let mut img = vec![F::zero(); pv.dims()[u]];
                        img[e] = F::one();
                        let h = map_from_generators(wop, &[u], &pv, &[img]);
                        spans.push(hom.coords(&h.after(f)));
                    }
                }
                let quot = QuotientMap::new(hom.dim(), &spans);
                for k in 0..quot.dim() {
                    let mut e = vec![F::zero(); quot.dim()];
                    e[k] = F::one();
                    verts.push(v);
                    maps.push(hom.combine(&quot.lift(&e), x, &pv));
                }
            }
        }
        let parts: Vec<UModule<F>> = verts.iter().map(|&v| Module::projective(wop, v)).collect();
        let (sum, incl, _) = Module::direct_sum(wop, &parts);
        let mut phi = UModuleMap::zero(x, &sum);
        for (f, i) in maps.iter().zip(&incl) {
            phi = phi.add(&i.after(f));
        }
        Ok((sum, phi))
    }

    /// `Ω⁻¹ x` without projective summands, via the left projective approximation.
    ///
    /// Fails unless the approximation is injective, which holds exactly for
    /// first syzygies.
    pub fn cosyzygy(&self, x: &UModule<F>) -> Result<UModule<F>> {
        self.require_margin(x, 3, 1, "cosyzygy")?;
        let (p, phi) = self.left_approximation(x)?;
        if !phi.is_injective() {
            return Err(Error::InvalidModule(
                "cosyzygy of a module that is not a first syzygy".into(),
            ));
        }
        self.strip_projectives(&phi.cokernel(&p).0)
    }

    /// `Ext¹(x, U(-, M_i[-g])) = 0` for every window projective that can pair
    /// with the first syzygy.
    pub fn is_cm(&self, x: &UModule<F>) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        self.require_margin(x, 0, 2, "is_cm")?;
        let omega = self.syzygy(x)?;
        let Some(&top) = self.top_degrees(&omega).last() else {
            return Ok(true);
        };
        let mut res = Resolution::new(x);
        for v in 0..self.op().n_vertices() {
            if self.degree(v) > top {
                continue;
            }
            if ext_space(&mut res, &Module::projective(self.op(), v), 1)?.dim() != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Embedding into a projective, if `x` is a first syzygy.
    pub fn syzygy_witness(&self, x: &UModule<F>) -> Result<Option<(UModule<F>, UModuleMap<F>)>> {
        let (p, phi) = self.left_approximation(x)?;
        Ok(phi.is_injective().then_some((p, phi)))
    }

    /// Kernel of `f: x -> y` together with a verified minimal presentation.
    pub fn weak_kernel(
        &self,
        f: &UModuleMap<F>,
        x: &UModule<F>,
        y: &UModule<F>,
    ) -> Result<(UModule<F>, UModuleMap<F>, Presentation<F>)> {
        if !f.is_homomorphism(x, y) {
            return Err(Error::InvalidModule(
                "weak_kernel needs a module map".into(),
            ));
        }
        let (k, inc) = f.kernel(x);
        let pres = self.presentation(&k)?;
        if pres.cokernel().dims() != k.dims() {
            return Err(Error::NotFinitelyPresented(
                "kernel presentation is not exact".into(),
            ));
        }
        Ok((k, inc, pres))
    }

    /// The graded Yoneda algebra by quiver and relations.
    ///
    /// When `Λ` has global dimension beyond the window width the algebra is
    /// truncated, and a relation in the top visible degree signals that
    /// further relations may be hidden.
    pub fn yoneda_presentation(&self) -> Result<Arc<Algebra<F>>> {
        let g = self.gamma();
        if let Some(c) = g.cutoff() {
            let q = g.quiver();
            for rel in g.relations() {
                let d = rel.terms.first().map_or(0, |(_, w)| q.word_degree(w));
                if d >= c {
                    return Err(Error::WindowTooSmall(format!(
                        "relation {} sits in the truncation degree {c}",
                        rel.display(q)
                    )));
                }
            }
        }
        Ok(g.clone())
    }
}
