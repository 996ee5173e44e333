use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arknit::knit::{ar_quiver, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM};
use crate::error::Result;
use crate::exactla::{Matrix, QuotientMap};
use crate::presalg::{from_structure, Algebra, FdAlgebra, RadElem};
use crate::repmod::{
    end_radical, ext_space, hom_basis, hom_space, HomSpace, Module, ModuleMap, Resolution,
};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StableQuotientSpec {
    ModuloProjectives,
    ModuloInjectives,
}

/// Hom space between two summands, with the chosen radical part modulo the ideal.
struct Block<F> {
    hom: HomSpace<F>,
    quot: QuotientMap<F>,
    /// Columns in quotient coordinates.
    basis: Matrix<F>,
    reps: Vec<ModuleMap<F>>,
    offset: usize,
}

/// `End(⊕ mods)` modulo maps factoring through `add(through)`, re-presented by quiver and relations.
///
/// `mods` must be pairwise non-isomorphic indecomposables outside `add(through)`.
pub fn quotient_endomorphism_algebra<F: Scalar>(
    mods: &[Module<F>],
    through: &[Module<F>],
    names: &[String],
) -> Result<Algebra<F>> {
    let n = mods.len();
    let mut blocks: Vec<Vec<Block<F>>> = Vec::with_capacity(n);
    let mut rad = Vec::new();
    let into_t: Vec<Vec<Vec<ModuleMap<F>>>> = mods
        .iter()
        .map(|x| {
            through
                .iter()
                .map(|t| hom_basis(x, t))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let from_t: Vec<Vec<Vec<ModuleMap<F>>>> = mods
        .iter()
        .map(|x| {
            through
                .iter()
                .map(|t| hom_basis(t, x))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let (hom, radical) = if i == j {
                end_radical(&mods[i])?
            } else {
                let h = hom_space(&mods[i], &mods[j])?;
                let d = h.dim();
                (h, Matrix::identity(d))
            };
            let mut spans = Vec::new();
            for k in 0..through.len() {
                for f in &into_t[i][k] {
                    for g in &from_t[j][k] {
                        spans.push(hom.coords(&g.after(f)));
                    }
                }
            }
            let quot = QuotientMap::new(hom.dim(), &spans);
            let projected: Vec<Vec<F>> =
                radical.col_vecs().iter().map(|r| quot.project(r)).collect();
            let basis = Matrix::from_cols(quot.dim(), &projected).column_basis();
            let reps: Vec<ModuleMap<F>> = basis
                .col_vecs()
                .iter()
                .map(|b| hom.combine(&quot.lift(b), &mods[i], &mods[j]))
                .collect();
            let offset = rad.len();
            rad.extend((0..reps.len()).map(|_| RadElem {
                src: i,
                tgt: j,
                degree: 0,
            }));
            row.push(Block {
                hom,
                quot,
                basis,
                reps,
                offset,
            });
        }
        blocks.push(row);
    }
    let locate: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .flat_map(|(i, j)| (0..blocks[i][j].reps.len()).map(move |k| (i, j, k)))
        .collect();
    let total = rad.len();
    let fd = FdAlgebra::new(names.to_vec(), rad, None, |p, q| {
        let (i, j, a) = locate[p];
        let (_, k, b) = locate[q];
        let comp = blocks[j][k].reps[b].after(&blocks[i][j].reps[a]);
        let blk = &blocks[i][k];
        let c = blk
            .basis
            .solve(&blk.quot.project(&blk.hom.coords(&comp)))
            .expect("composite of radical maps");
        let mut out = vec![F::zero(); total];
        for (t, x) in c.into_iter().enumerate() {
            out[blk.offset + t] = x;
        }
        out
    });
    from_structure(&fd)
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Basic Auslander algebra `End(⊕ indecomposables)`.
pub fn auslander_algebra<F: Scalar>(alg: &Arc<Algebra<F>>) -> Result<Arc<Algebra<F>>> {
    let q = ar_quiver(alg, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM)?;
    Ok(Arc::new(quotient_endomorphism_algebra(
        &q.vertices,
        &[],
        &names(q.len()),
    )?))
}

/// Auslander algebra modulo maps factoring through projectives or injectives.
pub fn stable_auslander_algebra<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    spec: StableQuotientSpec,
) -> Result<Arc<Algebra<F>>> {
    let q = ar_quiver(alg, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM)?;
    let flags = match spec {
        StableQuotientSpec::ModuloProjectives => &q.projective,
        StableQuotientSpec::ModuloInjectives => &q.injective,
    };
    let (through, keep): (Vec<_>, Vec<_>) = q
        .vertices
        .iter()
        .cloned()
        .zip(flags)
        .partition(|(_, f)| **f);
    let through: Vec<Module<F>> = through.into_iter().map(|(m, _)| m).collect();
    let keep: Vec<Module<F>> = keep.into_iter().map(|(m, _)| m).collect();
    Ok(Arc::new(quotient_endomorphism_algebra(
        &keep,
        &through,
        &names(keep.len()),
    )?))
}

/// Non-projective indecomposables `X` with `Ext^i(t, X) = 0` for `i ∈ degrees`
/// (and `Ext^i(X, t) = 0` as well when `two_sided`).
pub fn rigid_locus<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    t: &Module<F>,
    degrees: &[usize],
    two_sided: bool,
) -> Result<Vec<Module<F>>> {
    let q = ar_quiver(alg, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM)?;
    let mut rt = Resolution::new(t);
    let mut out = Vec::new();
    for (x, &proj) in q.vertices.iter().zip(&q.projective) {
        if proj {
            continue;
        }
        let mut ok = true;
        for &i in degrees {
            if ext_space(&mut rt, x, i)?.dim() != 0 {
                ok = false;
                break;
            }
        }
        if ok && two_sided {
            let mut rx = Resolution::new(x);
            for &i in degrees {
                if ext_space(&mut rx, t, i)?.dim() != 0 {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            out.push(x.clone());
        }
    }
    Ok(out)
}
