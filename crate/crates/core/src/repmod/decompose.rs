//! Krull-Schmidt decomposition by Fitting splitting.
//!
//! The radical of `End(M)` is the radical of the trace form `(x, y) ↦ tr(xy)`
//! on `M`. When the quotient is one-dimensional `M` is indecomposable;
//! otherwise some endomorphism `b` has a rational eigenvalue `λ` with
//! `b - λ` not nilpotent, and `M = ker (b-λ)^N ⊕ im (b-λ)^N`.

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::repmod::hom::{hom_space, HomSpace};
use crate::repmod::module::{Module, ModuleMap};
use crate::scalar::Scalar;

/// `End(M)` together with a column basis (in hom coordinates) of its radical.
pub fn end_radical<F: Scalar>(m: &Module<F>) -> Result<(HomSpace<F>, Matrix<F>)> {
    let p = F::characteristic();
    if p != 0 && p as usize <= m.dim() {
        return Err(Error::RadicalUnavailable(p));
    }
    let e = hom_space(m, m)?;
    let d = e.dim();
    let gram = Matrix::from_fn(d, d, |k, l| trace(&e.basis[k].after(&e.basis[l])));
    Ok((e, gram.kernel_basis()))
}

fn trace<F: Scalar>(f: &ModuleMap<F>) -> F {
    f.comps.iter().fold(F::zero(), |acc, c| acc + c.trace())
}

pub fn is_indecomposable<F: Scalar>(m: &Module<F>) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let (e, rad) = end_radical(m)?;
    Ok(e.dim() - rad.cols() == 1)
}

/// A summand of `M` with its inclusion.
#[derive(Clone, Debug)]
pub struct Summand<F> {
    pub module: Module<F>,
    pub incl: ModuleMap<F>,
}

/// Indecomposable summands of `M`, with inclusions into `M`.
pub fn decompose_with_maps<F: Scalar>(m: &Module<F>) -> Result<Vec<Summand<F>>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let (e, rad) = end_radical(m)?;
    if e.dim() - rad.cols() == 1 {
        return Ok(vec![Summand {
            module: m.clone(),
            incl: ModuleMap::identity(m),
        }]);
    }
    let (ker, im) = fitting_split(m, &e)?;
    let mut out = Vec::new();
    for spans in [ker, im] {
        let (sub, incl) = m.submodule(&spans);
        for s in decompose_with_maps(&sub)? {
            out.push(Summand {
                incl: incl.after(&s.incl),
                module: s.module,
            });
        }
    }
    Ok(out)
}

pub fn decompose<F: Scalar>(m: &Module<F>) -> Result<Vec<Module<F>>> {
    Ok(decompose_with_maps(m)?
        .into_iter()
        .map(|s| s.module)
        .collect())
}

type Spans<F> = Vec<Matrix<F>>;

fn fitting_split<F: Scalar>(m: &Module<F>, e: &HomSpace<F>) -> Result<(Spans<F>, Spans<F>)> {
    let b = &e.basis;
    let singles = b.iter().cloned();
    let sums = (0..b.len()).flat_map(|k| (k + 1..b.len()).map(move |l| b[k].add(&b[l])));
    let prods = (0..b.len()).flat_map(|k| (0..b.len()).map(move |l| b[k].after(&b[l])));
    let n = m.dim() as u32;
    for cand in singles.chain(sums).chain(prods) {
        let total = cand
            .comps
            .iter()
            .fold(Matrix::zeros(0, 0), |acc, c| acc.direct_sum(c));
        for lambda in F::rational_roots(&total.minimal_polynomial()) {
            let phi: Vec<Matrix<F>> = cand
                .comps
                .iter()
                .map(|c| c.sub(&Matrix::identity(c.rows()).scale(&lambda)).pow(n))
                .collect();
            if phi.iter().all(Matrix::is_zero) {
                continue;
            }
            let ker = phi.iter().map(Matrix::kernel_basis).collect();
            let im = phi.iter().map(Matrix::column_basis).collect();
            return Ok((ker, im));
        }
    }
    Err(Error::NonSplitEndo)
}

fn iso_between_indecomposables<F: Scalar>(
    a: &Module<F>,
    b: &Module<F>,
) -> Result<Option<ModuleMap<F>>> {
    if a.dims() != b.dims() {
        return Ok(None);
    }
    // Non-isomorphisms form a subspace, so some basis map is an iso if any is.
    Ok(hom_space(a, b)?.basis.into_iter().find(ModuleMap::is_iso))
}

fn iso_indecomposables<F: Scalar>(a: &Module<F>, b: &Module<F>) -> Result<bool> {
    Ok(iso_between_indecomposables(a, b)?.is_some())
}

/// An isomorphism `x -> y`, if one exists.
pub fn iso_witness<F: Scalar>(x: &Module<F>, y: &Module<F>) -> Result<Option<ModuleMap<F>>> {
    x.check_same(y)?;
    if x.dims() != y.dims() {
        return Ok(None);
    }
    let dx = decompose_with_maps(x)?;
    let dy = decompose_with_maps(y)?;
    if dx.len() != dy.len() {
        return Ok(None);
    }
    let mut free: Vec<bool> = vec![true; dy.len()];
    let mut pairs = Vec::new();
    for a in &dx {
        let mut hit = None;
        for (k, b) in dy.iter().enumerate() {
            if free[k] {
                if let Some(f) = iso_between_indecomposables(&a.module, &b.module)? {
                    hit = Some((k, f));
                    break;
                }
            }
        }
        let Some((k, f)) = hit else { return Ok(None) };
        free[k] = false;
        pairs.push((k, f));
    }
    // Projections onto the summands of x come from inverting [incl_1 .. incl_r].
    let nv = x.dims().len();
    let mut comps = Vec::with_capacity(nv);
    for v in 0..nv {
        let n = x.dims()[v];
        let mut j = Matrix::zeros(n, 0);
        for s in &dx {
            j = j.hstack(&s.incl.comps[v]);
        }
        let jinv = j.inverse().expect("summands span the module");
        let mut phi = Matrix::zeros(n, n);
        let mut row = 0;
        for (s, (k, f)) in dx.iter().zip(&pairs) {
            let d = s.module.dims()[v];
            let proj = jinv.block(row, 0, d, n);
            row += d;
            phi = phi.add(&dy[*k].incl.comps[v].mul(&f.comps[v]).mul(&proj));
        }
        comps.push(phi);
    }
    Ok(Some(ModuleMap { comps }))
}

pub fn is_isomorphic<F: Scalar>(x: &Module<F>, y: &Module<F>) -> Result<bool> {
    Ok(iso_witness(x, y)?.is_some())
}

/// Indecomposable summands grouped by isomorphism class, with multiplicities.
pub fn decompose_grouped<F: Scalar>(m: &Module<F>) -> Result<Vec<(Module<F>, usize)>> {
    let mut out: Vec<(Module<F>, usize)> = Vec::new();
    for x in decompose(m)? {
        let mut found = false;
        for (y, c) in out.iter_mut() {
            if iso_indecomposables(&x, y)? {
                *c += 1;
                found = true;
                break;
            }
        }
        if !found {
            out.push((x, 1));
        }
    }
    Ok(out)
}

/// Isomorphism test for modules already known to be indecomposable.
pub fn is_isomorphic_indecomposable<F: Scalar>(a: &Module<F>, b: &Module<F>) -> Result<bool> {
    a.check_same(b)?;
    iso_indecomposables(a, b)
}
