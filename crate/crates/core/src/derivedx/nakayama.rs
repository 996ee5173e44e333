use std::sync::Arc;

use serde::Serialize;

use crate::derivedx::complex::{BoundedComplex, ProjComplex};
use crate::derivedx::homotopy::complex_iso;
use crate::derivedx::minimal::minimal_form;
use crate::derivedx::replace::projective_replacement;
use crate::error::{Error, Result};
use crate::presalg::Algebra;
use crate::repmod::{global_dimension, map_from_generators, Module, ModuleMap};
use crate::scalar::Scalar;

/// `ν(a): I(v) -> I(w)` for the map `P(v) -> P(w)` given by `a ∈ e_w A e_v`.
///
/// Over the opposite algebra `a` defines `P(w) -> P(v)`; its dual is `ν(a)`.
pub fn nakayama_entry<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    v: usize,
    w: usize,
    a: &[F],
) -> ModuleMap<F> {
    let op = alg.opposite();
    let target = Module::projective(&op, v);
    let img: Vec<F> = op.block(v, w).iter().map(|&b| a[b].clone()).collect();
    map_from_generators(&op, &[w], &target, &[img]).dual()
}

/// `ν` applied termwise: a complex of injectives.
pub fn termwise_nakayama<F: Scalar>(c: &ProjComplex<F>) -> BoundedComplex<F> {
    let alg = c.algebra();
    let inj = |vs: &[usize]| -> Vec<Module<F>> {
        vs.iter().map(|&v| Module::injective(alg, v)).collect()
    };
    let (lo, hi) = c.range();
    let terms: Vec<Module<F>> = (lo..=hi)
        .map(|k| Module::direct_sum(alg, &inj(c.verts(k))).0)
        .collect();
    let diffs = (lo..hi)
        .map(|k| {
            let (src, tgt) = (c.verts(k), c.verts(k + 1));
            let d = c.diff(k);
            let blocks: Vec<Vec<ModuleMap<F>>> = tgt
                .iter()
                .enumerate()
                .map(|(j, &w)| {
                    src.iter()
                        .enumerate()
                        .map(|(i, &v)| nakayama_entry(alg, v, w, &d[j][i]))
                        .collect()
                })
                .collect();
            let dims = |vs: &[usize]| {
                inj(vs)
                    .iter()
                    .map(|m| m.dims().to_vec())
                    .collect::<Vec<_>>()
            };
            ModuleMap::from_blocks(&blocks, &dims(src), &dims(tgt))
        })
        .collect();
    BoundedComplex::new(alg, lo, terms, diffs).expect("ν is an additive functor")
}

/// Global dimension, or `InfiniteGlobalDimension` past a search bound of `dim A + 1`.
pub fn finite_global_dimension<F: Scalar>(alg: &Arc<Algebra<F>>) -> Result<usize> {
    let bound = alg.dim() + 1;
    global_dimension(alg, bound).ok_or(Error::InfiniteGlobalDimension(bound))
}

fn nakayama_with<F: Scalar>(c: &ProjComplex<F>, gd: usize) -> Result<ProjComplex<F>> {
    let inj = termwise_nakayama(c);
    Ok(minimal_form(&projective_replacement(&inj, gd + 1)?))
}

/// The derived Nakayama functor on a bounded complex of projectives, in minimal form.
pub fn derived_nakayama<F: Scalar>(c: &ProjComplex<F>) -> Result<ProjComplex<F>> {
    let gd = finite_global_dimension(c.algebra())?;
    nakayama_with(c, gd)
}

/// `ν^b` of the regular module, with the number of summands after each step.
pub fn nakayama_power<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    b: usize,
) -> Result<(ProjComplex<F>, Vec<usize>)> {
    let gd = finite_global_dimension(alg)?;
    let mut c = ProjComplex::regular(alg);
    let mut sizes = Vec::with_capacity(b);
    for _ in 0..b {
        c = nakayama_with(&c, gd)?;
        sizes.push(c.size());
    }
    Ok((c, sizes))
}

#[derive(Clone, Debug, Serialize)]
pub struct CyReport {
    pub a: i64,
    pub b: usize,
    pub verdict: bool,
    pub iterations: usize,
    /// Summands of the minimal form after each application of `ν`.
    pub minimal_sizes: Vec<usize>,
    /// Whether every intermediate complex had radical differentials.
    pub all_minimal: bool,
}

/// Compares `ν^b(A)` with `A[a]` on the regular module.
///
/// This is an object-level check; naturality of the isomorphism is not tested.
pub fn cy_report<F: Scalar>(alg: &Arc<Algebra<F>>, a: i64, b: usize) -> Result<CyReport> {
    if b == 0 {
        return Err(Error::InvalidModule(
            "the power of ν must be positive".into(),
        ));
    }
    let gd = finite_global_dimension(alg)?;
    let mut c = ProjComplex::regular(alg);
    let mut sizes = Vec::with_capacity(b);
    let mut all_minimal = true;
    for _ in 0..b {
        c = nakayama_with(&c, gd)?;
        all_minimal &= c.is_radical();
        sizes.push(c.size());
    }
    let verdict = complex_iso(&c, &ProjComplex::regular(alg).shift(a))?;
    Ok(CyReport {
        a,
        b,
        verdict,
        iterations: b,
        minimal_sizes: sizes,
        all_minimal,
    })
}

/// Whether `ν^b(A) ≅ A[a]` in the derived category.
pub fn cy_check<F: Scalar>(alg: &Arc<Algebra<F>>, a: i64, b: usize) -> Result<bool> {
    Ok(cy_report(alg, a, b)?.verdict)
}

/// Simply-laced Dynkin types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Dynkin {
    A(usize),
    D(usize),
    E(usize),
}

impl Dynkin {
    /// Tabulated Coxeter number.
    pub fn coxeter_number(self) -> Option<usize> {
        match self {
            Dynkin::A(n) if n >= 1 => Some(n + 1),
            Dynkin::D(n) if n >= 4 => Some(2 * n - 2),
            Dynkin::E(6) => Some(12),
            Dynkin::E(7) => Some(18),
            Dynkin::E(8) => Some(30),
            _ => None,
        }
    }

    /// `(a, b)` with `ν^b ≅ [a]` for a path algebra of this type: `(h - 2, h)`.
    pub fn path_algebra_cy(self) -> Option<(i64, usize)> {
        self.coxeter_number().map(|h| (h as i64 - 2, h))
    }

    /// `(a, b)` for the stable Auslander algebra of a path algebra: `(2h - 6, h)`.
    pub fn stable_auslander_cy(self) -> Option<(i64, usize)> {
        self.coxeter_number().map(|h| (2 * h as i64 - 6, h))
    }
}
