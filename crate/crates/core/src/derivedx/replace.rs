use crate::derivedx::complex::{map_to_elements, BoundedComplex, ProjComplex};
use crate::error::{Error, Result};
use crate::repmod::{generator_images, map_from_generators, projective_cover, Module, ModuleMap};
use crate::scalar::Scalar;

/// `f: A -> M` written through a monomorphism `ι: Z -> M` containing its image.
fn factor_through<F: Scalar>(f: &ModuleMap<F>, iota: &ModuleMap<F>) -> ModuleMap<F> {
    ModuleMap {
        comps: f
            .comps
            .iter()
            .zip(&iota.comps)
            .map(|(a, i)| i.solve_matrix(a).expect("image lies in the submodule"))
            .collect(),
    }
}

/// A projective complex `Q` with a quasi-isomorphism `Q -> X`.
///
/// Built downwards from the top degree: `Q^k` covers the cycles of the
/// partial cone of `Q^{>k} -> X` modulo the image of `X^{k-1}`, which keeps
/// the cone exact in degree `k`. Below `X` this continues as a projective
/// resolution and stops once the cycles vanish; `max_len` bounds how far.
pub fn projective_replacement<F: Scalar>(
    x: &BoundedComplex<F>,
    max_len: usize,
) -> Result<ProjComplex<F>> {
    replace(x, max_len, None)
}

/// The brutal truncation `σ^{≥stop}` of a projective replacement, for
/// algebras whose replacements need not terminate.
pub fn truncated_replacement<F: Scalar>(x: &BoundedComplex<F>, stop: i64) -> ProjComplex<F> {
    replace(x, usize::MAX, Some(stop)).expect("a truncated replacement always terminates")
}

fn replace<F: Scalar>(
    x: &BoundedComplex<F>,
    max_len: usize,
    stop: Option<i64>,
) -> Result<ProjComplex<F>> {
    let alg = x.algebra().clone();
    let (lo, hi) = x.range();
    if hi < lo {
        return Ok(ProjComplex::zero(&alg));
    }
    let mut verts_rev: Vec<Vec<usize>> = Vec::new();
    let mut diffs_rev: Vec<ModuleMap<F>> = Vec::new();
    let mut q_above = Module::zero(alg.clone());
    let mut q_above2 = Module::zero(alg.clone());
    let mut d_above = ModuleMap::zero(&q_above, &q_above2);
    let mut phi_above = ModuleMap::zero(&q_above, &x.term(hi + 1));
    let mut k = hi;
    loop {
        let xk = x.term(k);
        let xk1 = x.term(k + 1);
        let (m, inc, pr) = Module::direct_sum(&alg, &[q_above.clone(), xk.clone()]);
        let (_, tinc, _) = Module::direct_sum(&alg, &[q_above2.clone(), xk1.clone()]);
        let delta = tinc[0]
            .after(&d_above)
            .after(&pr[0])
            .add(&tinc[1].after(&phi_above.after(&pr[0]).add(&x.diff(k).after(&pr[1]))));
        let (z, iota) = delta.kernel(&m);
        if (k < lo && z.is_zero()) || stop.is_some_and(|s| k < s) {
            break;
        }
        if lo - k > i64::try_from(max_len).unwrap_or(i64::MAX) {
            return Err(Error::InfiniteGlobalDimension(max_len));
        }
        let eps = factor_through(&inc[1].after(&x.diff(k - 1)), &iota);
        let (cq, quot) = eps.cokernel(&z);
        let cover = projective_cover(&cq);
        // Lift each generator image through the surjection `Z -> C`.
        let images: Vec<Vec<F>> = generator_images(&alg, &cover.verts, &cover.pi)
            .iter()
            .zip(&cover.verts)
            .map(|(g, &v)| quot.comps[v].solve(g).expect("quotient map is surjective"))
            .collect();
        let rho = map_from_generators(&alg, &cover.verts, &z, &images);
        let lifted = iota.after(&rho);
        let d_new = pr[0].after(&lifted).scale(&-F::one());
        let phi_new = pr[1].after(&lifted);
        verts_rev.push(cover.verts.clone());
        diffs_rev.push(d_new.clone());
        q_above2 = q_above;
        q_above = cover.proj;
        d_above = d_new;
        phi_above = phi_new;
        k -= 1;
    }
    let n = verts_rev.len();
    let verts: Vec<Vec<usize>> = verts_rev.into_iter().rev().collect();
    // diffs_rev[t] leaves degree hi - t; the one leaving the top is zero.
    let diffs = (0..n.saturating_sub(1))
        .map(|s| map_to_elements(&alg, &verts[s], &verts[s + 1], &diffs_rev[n - 1 - s]))
        .collect();
    let lo_q = hi - n as i64 + 1;
    Ok(ProjComplex {
        alg,
        lo: lo_q,
        verts,
        diffs,
    }
    .trimmed())
}
