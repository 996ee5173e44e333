use crate::error::Result;
use crate::exactla::QuotientMap;
use crate::repmod::hom::{hom_basis, hom_space, HomSpace};
use crate::repmod::module::{Module, ModuleMap};
use crate::repmod::resolution::projective_cover;
use crate::scalar::Scalar;

/// `Hom(X, Y)` modulo maps factoring through a projective module.
#[derive(Clone, Debug)]
pub struct StableHom<F> {
    pub hom: HomSpace<F>,
    quot: QuotientMap<F>,
    /// Representatives of a basis of the quotient.
    pub basis: Vec<ModuleMap<F>>,
}

impl<F: Scalar> StableHom<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn class_coords(&self, f: &ModuleMap<F>) -> Vec<F> {
        self.quot.project(&self.hom.coords(f))
    }

    pub fn is_zero_class(&self, f: &ModuleMap<F>) -> bool {
        self.class_coords(f).iter().all(F::is_zero)
    }
}

/// A map into `Y` factors through a projective iff it factors through the cover of `Y`.
pub fn stable_hom<F: Scalar>(x: &Module<F>, y: &Module<F>) -> Result<StableHom<F>> {
    x.check_same(y)?;
    let hom = hom_space(x, y)?;
    let cover = projective_cover(y);
    let spans: Vec<Vec<F>> = hom_basis(x, &cover.proj)?
        .iter()
        .map(|f| hom.coords(&cover.pi.after(f)))
        .collect();
    let quot = QuotientMap::new(hom.dim(), &spans);
    let basis = (0..quot.dim())
        .map(|k| {
            let mut e = vec![F::zero(); quot.dim()];
            e[k] = F::one();
            hom.combine(&quot.lift(&e), x, y)
        })
        .collect();
    Ok(StableHom { hom, quot, basis })
}
