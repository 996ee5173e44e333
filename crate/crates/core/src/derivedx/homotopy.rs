use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derivedx::complex::ProjComplex;
use crate::derivedx::minimal::minimal_form;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::scalar::Scalar;

/// Coordinates of degree-preserving graded maps `P -> Q`: one unknown per
/// basis path of each entry `P^k_i -> Q^k_j`.
struct MapCoords {
    index: HashMap<(i64, usize, usize, usize), usize>,
    n: usize,
}

impl MapCoords {
    /// Unknowns for maps `P^k -> Q^{k + offset}`.
    fn new<F: Scalar>(p: &ProjComplex<F>, q: &ProjComplex<F>, offset: i64) -> Self {
        let mut index = HashMap::new();
        let (lo, hi) = p.range();
        for k in lo..=hi {
            for (j, &w) in q.verts(k + offset).iter().enumerate() {
                for (i, &v) in p.verts(k).iter().enumerate() {
                    for &b in p.alg.block(w, v) {
                        let n = index.len();
                        index.insert((k, j, i, b), n);
                    }
                }
            }
        }
        let n = index.len();
        MapCoords { index, n }
    }
}

/// Chain maps `P -> Q` as columns over [`MapCoords`], and the null-homotopic ones.
struct ChainSpace<F> {
    coords: MapCoords,
    chain: Matrix<F>,
    null_rank: usize,
}

fn accumulate<F: Scalar>(col: &mut [F], coords: &MapCoords, k: i64, j: usize, i: usize, e: &[F]) {
    for (b, c) in e.iter().enumerate() {
        if !c.is_zero() {
            let r = coords.index[&(k, j, i, b)];
            col[r] = col[r].clone() + c.clone();
        }
    }
}

fn chain_space<F: Scalar>(p: &ProjComplex<F>, q: &ProjComplex<F>) -> ChainSpace<F> {
    let alg = &p.alg;
    let coords = MapCoords::new(p, q, 0);
    let lo = p.range().0;
    // Rows: entries of `d_Q f - f d_P`, P^k -> Q^{k+1}.
    let deltas = MapCoords::new(p, q, 1);
    let mut cons = Matrix::zeros(deltas.n, coords.n);
    for (&(k, j, i, b), &c) in &coords.index {
        let mut col = vec![F::zero(); deltas.n];
        let unit = alg.unit(b);
        let dq = q.diff(k);
        for (l, row) in dq.iter().enumerate() {
            accumulate(&mut col, &deltas, k, l, i, &alg.mul(&row[j], &unit));
        }
        if k > lo {
            let dp = p.diff(k - 1);
            for (m, e) in dp[i].iter().enumerate() {
                let neg: Vec<F> = alg.mul(&unit, e).into_iter().map(|x| -x).collect();
                accumulate(&mut col, &deltas, k - 1, j, m, &neg);
            }
        }
        for (r, x) in col.into_iter().enumerate() {
            cons[(r, c)] = x;
        }
    }
    let chain = cons.kernel_basis();
    // Homotopies h^k: P^k -> Q^{k-1} give d_Q h + h d_P.
    let homs = MapCoords::new(p, q, -1);
    let mut null = Matrix::zeros(coords.n, homs.n);
    for (&(k, j, i, b), &c) in &homs.index {
        let mut col = vec![F::zero(); coords.n];
        let unit = alg.unit(b);
        for (l, row) in q.diff(k - 1).iter().enumerate() {
            accumulate(&mut col, &coords, k, l, i, &alg.mul(&row[j], &unit));
        }
        if k > lo {
            for (m, e) in p.diff(k - 1)[i].iter().enumerate() {
                accumulate(&mut col, &coords, k - 1, j, m, &alg.mul(&unit, e));
            }
        }
        for (r, x) in col.into_iter().enumerate() {
            null[(r, c)] = x;
        }
    }
    ChainSpace {
        coords,
        chain,
        null_rank: null.rank(),
    }
}

/// `dim Hom_K(P, Q[s])`, which is `dim Hom_D` for bounded projective complexes.
pub fn hom_dim<F: Scalar>(p: &ProjComplex<F>, q: &ProjComplex<F>, s: i64) -> Result<usize> {
    if !p.alg.same_as(&q.alg) {
        return Err(Error::AlgebraMismatch);
    }
    let sp = chain_space(p, &q.shift(s));
    Ok(sp.chain.cols() - sp.null_rank)
}

fn sorted_terms<F: Scalar>(c: &ProjComplex<F>) -> Vec<Vec<usize>> {
    c.verts
        .iter()
        .map(|v| {
            let mut v = v.clone();
            v.sort_unstable();
            v
        })
        .collect()
}

/// Whether `f`, given in chain coordinates, is invertible modulo the radical.
fn invertible<F: Scalar>(
    p: &ProjComplex<F>,
    q: &ProjComplex<F>,
    coords: &MapCoords,
    f: &[F],
) -> bool {
    let alg = &p.alg;
    let (lo, hi) = p.range();
    for k in lo..=hi {
        for v in 0..alg.n_vertices() {
            let src: Vec<usize> = (0..p.verts(k).len())
                .filter(|&i| p.verts(k)[i] == v)
                .collect();
            let tgt: Vec<usize> = (0..q.verts(k).len())
                .filter(|&j| q.verts(k)[j] == v)
                .collect();
            if src.len() != tgt.len() {
                return false;
            }
            let e = alg.idempotent(v);
            let m = Matrix::from_fn(tgt.len(), src.len(), |r, c| {
                f[coords.index[&(k, tgt[r], src[c], e)]].clone()
            });
            if m.rank() != src.len() {
                return false;
            }
        }
    }
    true
}

/// Whether two projective complexes are isomorphic in the homotopy category.
///
/// Minimal complexes are homotopy equivalent iff isomorphic, and an
/// isomorphism is a chain map invertible modulo the radical. Random
/// combinations of a chain map basis find one if it exists, except on a
/// proper Zariski-closed set.
pub fn complex_iso<F: Scalar>(c1: &ProjComplex<F>, c2: &ProjComplex<F>) -> Result<bool> {
    if !c1.alg.same_as(&c2.alg) {
        return Err(Error::AlgebraMismatch);
    }
    let (m1, m2) = (minimal_form(c1), minimal_form(c2));
    if m1.is_zero() || m2.is_zero() {
        return Ok(m1.is_zero() && m2.is_zero());
    }
    if m1.range() != m2.range() || sorted_terms(&m1) != sorted_terms(&m2) {
        return Ok(false);
    }
    let sp = chain_space(&m1, &m2);
    let basis = sp.chain.col_vecs();
    if basis.is_empty() {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e75);
    for _ in 0..16 {
        let mut f = vec![F::zero(); sp.coords.n];
        for col in &basis {
            let r = F::from_i64(rng.gen_range(-40..=40));
            for (x, y) in f.iter_mut().zip(col) {
                *x = x.clone() + r.clone() * y.clone();
            }
        }
        if invertible(&m1, &m2, &sp.coords, &f) {
            return Ok(true);
        }
    }
    Ok(false)
}
