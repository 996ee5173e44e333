//! Transpose and Auslander-Reiten translates.
//!
//! The minimal presentation `P_1 -> P_0 -> M` is stored as a matrix of
//! algebra elements. Applying `Hom(-, A)` turns each entry into the same
//! element read in the opposite algebra, which shares the basis indexing.

use crate::presalg::Algebra;
use crate::repmod::module::Module;
use crate::repmod::resolution::{generator_images, map_from_generators, proj_sum, resolve};
use crate::scalar::Scalar;

/// `Tr M`, a module over the opposite algebra.
pub fn transpose<F: Scalar>(m: &Module<F>) -> Module<F> {
    let alg = m.algebra();
    let op = alg.opposite();
    let r = resolve(m, 1);
    let v0 = &r.covers[0].verts;
    let v1 = &r.covers[1].verts;
    if v1.is_empty() {
        return Module::zero(op);
    }
    let d = r.differential(1);
    // gens[j] lives in (P_0)_{u_j}; its i-th segment is the entry x_ij.
    let gens = generator_images(alg, v1, &d);
    let images: Vec<Vec<F>> = v0
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut out = Vec::new();
            for (j, &u) in v1.iter().enumerate() {
                let off = segment(alg, v0, i, u);
                out.extend_from_slice(&gens[j][off..off + alg.block(v, u).len()]);
            }
            out
        })
        .collect();
    let target = proj_sum(&op, v1);
    let f = map_from_generators(&op, v0, &target, &images);
    f.cokernel(&target).0
}

fn segment<F: Scalar>(alg: &Algebra<F>, verts: &[usize], i: usize, w: usize) -> usize {
    verts[..i].iter().map(|&v| alg.block(v, w).len()).sum()
}

/// `τ M = D Tr M`.
pub fn tau<F: Scalar>(m: &Module<F>) -> Module<F> {
    transpose(m).dual()
}

/// `τ⁻ M = Tr D M`.
pub fn tau_inverse<F: Scalar>(m: &Module<F>) -> Module<F> {
    transpose(&m.dual())
}
