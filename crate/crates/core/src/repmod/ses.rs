use crate::repmod::module::{Module, ModuleMap};
use crate::scalar::Scalar;

/// `0 -> A -f-> B -g-> C -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSeq<F> {
    pub a: Module<F>,
    pub b: Module<F>,
    pub c: Module<F>,
    pub f: ModuleMap<F>,
    pub g: ModuleMap<F>,
}

impl<F: Scalar> ShortExactSeq<F> {
    /// Checks that both maps are homomorphisms and the sequence is exact at every vertex.
    pub fn is_exact(&self) -> bool {
        if !self.f.is_homomorphism(&self.a, &self.b) || !self.g.is_homomorphism(&self.b, &self.c) {
            return false;
        }
        if !self.f.is_injective() || !self.g.is_surjective() || !self.g.after(&self.f).is_zero() {
            return false;
        }
        self.a
            .dims()
            .iter()
            .zip(self.b.dims())
            .zip(self.c.dims())
            .all(|((x, y), z)| x + z == *y)
    }

    /// Split iff `g` has a section; solved as a linear system on `Hom(C, B)`.
    pub fn splits(&self) -> bool {
        let Ok(h) = crate::repmod::hom_space(&self.c, &self.b) else {
            return false;
        };
        // g∘s = id is linear in the coordinates of s.
        let target = ModuleMap::identity(&self.c).flatten();
        let cols: Vec<Vec<F>> = h.basis.iter().map(|s| self.g.after(s).flatten()).collect();
        let m = crate::exactla::Matrix::from_cols(target.len(), &cols);
        m.solve(&target).is_some()
    }
}
