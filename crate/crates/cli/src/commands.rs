//! Commands that work directly on the presented algebra.

use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};

use yoneda_core::arknit::{
    ar_quiver, enumerate_indecomposables, rigid_locus, stable_auslander_algebra, StableQuotientSpec,
};
use yoneda_core::derivedx::cy_report;
use yoneda_core::error::Result;
use yoneda_core::exactla::Matrix;
use yoneda_core::presalg::{build_algebra, veronese, Algebra, BuildOptions, Quiver, Relation};
use yoneda_core::repmod::{global_dimension, is_isomorphic, is_projective, Module};
use yoneda_core::scalar::Scalar;
use yoneda_core::yoncat::YonedaWindow;

use crate::algfile::{AlgebraFile, FieldSpec};
use crate::report::Outcome;

pub fn field_of<F: Scalar>() -> FieldSpec {
    match F::characteristic() {
        0 => FieldSpec::Q,
        p => FieldSpec::Fp(p),
    }
}

pub fn presentation_json<F: Scalar>(alg: &Algebra<F>) -> Value {
    let q = alg.quiver();
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|a| json!({"name": a.name, "source": q.vertices()[a.src], "target": q.vertices()[a.tgt], "degree": a.degree}))
        .collect();
    let rels: Vec<String> = alg.relations().iter().map(|r| r.display(q)).collect();
    json!({
        "vertices": q.vertices(),
        "arrows": arrows,
        "relations": rels,
        "dim": alg.dim(),
        "text": AlgebraFile::from_algebra(alg, field_of::<F>()).to_canonical(),
    })
}

/// `None` without expectations, otherwise whether some expected algebra
/// has the same presentation profile.
pub fn matches_expected<F: Scalar>(alg: &Algebra<F>, expected: &[Arc<Algebra<F>>]) -> Option<bool> {
    (!expected.is_empty()).then(|| {
        expected
            .iter()
            .any(|e| yoneda_core::presalg::profile_isomorphic(alg, e))
    })
}

/// Two lists of pairwise non-isomorphic indecomposables agree up to isomorphism.
fn same_classes<F: Scalar>(a: &[Module<F>], b: &[Module<F>]) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    for x in a {
        let mut found = false;
        for y in b {
            if x.dims() == y.dims() && is_isomorphic(x, y)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

fn dims_list<F: Scalar>(ms: &[Module<F>]) -> Value {
    json!(ms.iter().map(|m| m.dims().to_vec()).collect::<Vec<_>>())
}

pub fn ar_quiver_cmd<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    max_count: usize,
    max_dim: usize,
    dot: Option<&Path>,
) -> Result<Outcome> {
    let bounds = json!({"max_count": max_count, "max_dim": max_dim});
    let q = ar_quiver(alg, max_count, max_dim)?;
    let mut witnesses = json!({
        "count": q.len(),
        "projective": q.projective.iter().filter(|&&p| p).count(),
        "injective": q.injective.iter().filter(|&&p| p).count(),
        "quiver": q.to_json(),
    });
    if let Some(path) = dot {
        if let Err(e) = std::fs::write(path, q.to_dot()) {
            return Ok(Outcome::new(false, bounds, witnesses)
                .with_reason(format!("cannot write {}: {e}", path.display())));
        }
        witnesses["dot"] = json!(path.display().to_string());
    }
    Ok(Outcome::new(true, bounds, witnesses))
}

/// `e_v A` modulo its paths of positive degree, for every vertex.
fn degree_zero_parts<F: Scalar>(alg: &Arc<Algebra<F>>) -> Vec<Module<F>> {
    (0..alg.n_vertices())
        .map(|v| {
            let p = Module::projective(alg, v);
            let spans: Vec<Matrix<F>> = (0..alg.n_vertices())
                .map(|w| {
                    let blk = alg.block(v, w);
                    let cols: Vec<Vec<F>> = (0..blk.len())
                        .filter(|&j| alg.basis()[blk[j]].degree > 0)
                        .map(|j| {
                            let mut e = vec![F::zero(); blk.len()];
                            e[j] = F::one();
                            e
                        })
                        .collect();
                    Matrix::from_cols(blk.len(), &cols)
                })
                .collect();
            p.quotient(&spans).0
        })
        .collect()
}

/// `A / A e A` for the idempotent `e` on `killed`, with the surviving vertex
/// and arrow indices.
fn idempotent_quotient<F: Scalar>(
    alg: &Algebra<F>,
    killed: &[usize],
) -> Result<(Arc<Algebra<F>>, Vec<usize>, Vec<usize>)> {
    let q = alg.quiver();
    let verts: Vec<usize> = (0..q.n_vertices())
        .filter(|v| !killed.contains(v))
        .collect();
    let mut nq = Quiver::new(verts.iter().map(|&v| q.vertices()[v].clone()))?;
    let mut arrows = Vec::new();
    let mut new_index = vec![None; q.arrows().len()];
    for (i, a) in q.arrows().iter().enumerate() {
        if !killed.contains(&a.src) && !killed.contains(&a.tgt) {
            let s = verts.iter().position(|&v| v == a.src).unwrap();
            let t = verts.iter().position(|&v| v == a.tgt).unwrap();
            new_index[i] = Some(nq.push_arrow(&a.name, s, t, a.degree)?);
            arrows.push(i);
        }
    }
    let rels: Vec<Relation<F>> = alg
        .relations()
        .iter()
        .map(|r| {
            Relation::new(
                r.terms
                    .iter()
                    .filter_map(|(c, w)| {
                        w.iter()
                            .map(|&a| new_index[a])
                            .collect::<Option<Vec<_>>>()
                            .map(|w| (c.clone(), w))
                    })
                    .collect(),
            )
        })
        .filter(|r| !r.is_zero())
        .collect();
    let opts = BuildOptions {
        cutoff: alg.cutoff(),
        ..BuildOptions::default()
    };
    Ok((Arc::new(build_algebra(nq, rels, opts)?), verts, arrows))
}

/// Regards a module over `A / A e A` as an `A`-module.
fn inflate<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    m: &Module<F>,
    verts: &[usize],
    arrows: &[usize],
) -> Result<Module<F>> {
    let mut dims = vec![0; alg.n_vertices()];
    for (k, &v) in verts.iter().enumerate() {
        dims[v] = m.dims()[k];
    }
    let mats = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| match arrows.iter().position(|&x| x == i) {
            Some(k) => m.arrow(k).clone(),
            None => Matrix::zeros(dims[a.tgt], dims[a.src]),
        })
        .collect();
    Module::new(alg.clone(), dims, mats)
}

/// The rigid locus of the degree-zero part `A₀` of a graded algebra.
///
/// Two-sided, the locus should be `add A₀` minus projectives. One-sided, it
/// should consist of the modules killed by the idempotent `e` of the vertices
/// where `e_v A₀` is projective, which are the modules over `A / A e A`.
pub fn rigid_cmd<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    degrees: &[usize],
    two_sided: bool,
) -> Result<Outcome> {
    let bounds = json!({"degrees": degrees, "two_sided": two_sided});
    let parts = degree_zero_parts(alg);
    let t = Module::direct_sum(alg, &parts).0;
    let e_vertices: Vec<usize> = (0..parts.len())
        .filter(|&v| is_projective(&parts[v]))
        .collect();
    let t_summands: Vec<Module<F>> = parts
        .iter()
        .filter(|m| !is_projective(m))
        .cloned()
        .collect();
    let locus = rigid_locus(alg, &t, degrees, two_sided)?;
    let q = ar_quiver(
        alg,
        yoneda_core::arknit::DEFAULT_MAX_COUNT,
        yoneda_core::arknit::DEFAULT_MAX_DIM,
    )?;
    let annihilated: Vec<Module<F>> = q
        .vertices
        .iter()
        .zip(&q.projective)
        .filter(|(m, &p)| !p && e_vertices.iter().all(|&v| m.dims()[v] == 0))
        .map(|(m, _)| m.clone())
        .collect();
    let (quot, verts, arrows) = idempotent_quotient(alg, &e_vertices)?;
    let inflated = enumerate_indecomposables(
        &quot,
        yoneda_core::arknit::DEFAULT_MAX_COUNT,
        yoneda_core::arknit::DEFAULT_MAX_DIM,
    )?
    .iter()
    .map(|m| inflate(alg, m, &verts, &arrows))
    .collect::<Result<Vec<_>>>()?;
    let equals_add_t = same_classes(&locus, &t_summands)?;
    let equals_annihilated = same_classes(&locus, &annihilated)?;
    let annihilated_is_quotient_image = same_classes(&annihilated, &inflated)?;
    let names = alg.quiver().vertices();
    let witnesses = json!({
        "count": locus.len(),
        "locus": dims_list(&locus),
        "t_summands": dims_list(&t_summands),
        "e_vertices": e_vertices.iter().map(|&v| names[v].clone()).collect::<Vec<_>>(),
        "annihilated_by_e": dims_list(&annihilated),
        "quotient_module_count": inflated.len(),
        "locus_equals_add_t": equals_add_t,
        "locus_equals_annihilated": equals_annihilated,
        "annihilated_is_quotient_image": annihilated_is_quotient_image,
    });
    let passed = if two_sided {
        equals_add_t
    } else {
        equals_annihilated && annihilated_is_quotient_image
    };
    let reason = if two_sided {
        "locus differs from the non-projective summands of the degree-zero part"
    } else {
        "locus differs from the modules annihilated by e"
    };
    Ok(Outcome::new(passed, bounds, witnesses).with_reason(reason))
}

pub fn yoneda_cmd<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    lo: i64,
    hi: i64,
    expected: &[Arc<Algebra<F>>],
) -> Result<Outcome> {
    let bounds = json!({"window": [lo, hi]});
    let w = YonedaWindow::build(alg, lo, hi)?;
    let g = w.yoneda_presentation()?;
    let q = g.quiver();
    let positive: Vec<Value> = q
        .arrows()
        .iter()
        .filter(|a| a.degree > 0)
        .map(|a| json!({"name": a.name, "source": q.vertices()[a.src], "target": q.vertices()[a.tgt], "degree": a.degree}))
        .collect();
    let matched = matches_expected(&g, expected);
    let witnesses = json!({
        "presentation": presentation_json(&g),
        "positive_degree_arrows": positive,
        "indecomposables": w.r(),
        "global_dimension": w.global_dimension(),
        "matches_expected": matched,
    });
    Ok(Outcome::new(matched != Some(false), bounds, witnesses)
        .with_reason("presentation differs from the expected algebra"))
}

pub fn stable_auslander_cmd<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    spec: StableQuotientSpec,
    expected: &[Arc<Algebra<F>>],
) -> Result<Outcome> {
    let bounds = json!({"modulo": spec});
    let s = stable_auslander_algebra(alg, spec)?;
    let matched = matches_expected(&s, expected);
    let witnesses = json!({"presentation": presentation_json(&s), "matches_expected": matched});
    Ok(Outcome::new(matched != Some(false), bounds, witnesses)
        .with_reason("stable Auslander algebra differs from the expected algebra"))
}

pub fn cy_cmd<F: Scalar>(alg: &Arc<Algebra<F>>, a: i64, b: usize) -> Result<Outcome> {
    let bounds = json!({"a": a, "b": b});
    let r = cy_report(alg, a, b)?;
    let passed = r.verdict;
    let witnesses = serde_json::to_value(&r).expect("report serializes");
    Ok(Outcome::new(passed, bounds, witnesses)
        .with_reason(format!("ν^{b}(A) is not isomorphic to A[{a}]")))
}

/// Veronese subalgebra `A^(l)` and its global dimension. For a Yoneda algebra
/// the top degree `d` of `A` is the global dimension of the underlying
/// algebra, and the expected bound is `3d - 1` for `2 ≤ l ≤ d`.
pub fn veronese_cmd<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    l: usize,
    gd_bound: usize,
    expected: &[Arc<Algebra<F>>],
) -> Result<Outcome> {
    let bounds = json!({"l": l, "gd_bound": gd_bound});
    let d = alg.basis().iter().map(|b| b.degree).max().unwrap_or(0);
    let v = Arc::new(veronese(alg, l)?);
    let gd = global_dimension(&v, gd_bound);
    // Expected presentations of Veronese algebras are given ungraded.
    let matched = (!expected.is_empty()).then(|| {
        expected
            .iter()
            .any(|e| yoneda_core::presalg::profile_isomorphic_ungraded(&v, e))
    });
    let bound = 3 * d - 1;
    let witnesses = json!({
        "presentation": presentation_json(&v),
        "global_dimension": gd,
        "top_degree": d,
        "bound": bound,
        "l_in_range": (2..=d).contains(&(l as i64)),
        "matches_expected": matched,
    });
    let Some(g) = gd else {
        return Ok(Outcome::new(false, bounds, witnesses).with_reason(format!(
            "global dimension exceeds --gd-bound {gd_bound}; treated as infinite"
        )));
    };
    let passed = (g as i64) <= bound && matched != Some(false);
    Ok(Outcome::new(passed, bounds, witnesses)
        .with_reason(format!("global dimension {g} against bound {bound}")))
}
