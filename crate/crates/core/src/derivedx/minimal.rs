use crate::derivedx::complex::{is_zero_elem, ProjComplex};
use crate::presalg::Algebra;
use crate::scalar::Scalar;

/// Inverse of a unit `λe_v + r` of the local ring `e_v A e_v`.
fn local_inverse<F: Scalar>(alg: &Algebra<F>, v: usize, u: &[F]) -> Vec<F> {
    let e = alg.idempotent(v);
    let lam_inv = u[e].inv();
    // x = -λ⁻¹ r is nilpotent, so the geometric series terminates.
    let mut x: Vec<F> = u.iter().map(|c| -(c.clone() * lam_inv.clone())).collect();
    x[e] = F::zero();
    let mut term = alg.unit(e);
    let mut sum = term.clone();
    loop {
        term = alg.mul(&term, &x);
        if is_zero_elem(&term) {
            break;
        }
        for (s, t) in sum.iter_mut().zip(&term) {
            *s = s.clone() + t.clone();
        }
    }
    sum.into_iter().map(|c| c * lam_inv.clone()).collect()
}

/// An entry `(k, j, i)` of `diffs[k]` that is invertible.
fn find_unit<F: Scalar>(c: &ProjComplex<F>) -> Option<(usize, usize, usize)> {
    for (k, d) in c.diffs.iter().enumerate() {
        for (j, row) in d.iter().enumerate() {
            for (i, e) in row.iter().enumerate() {
                let v = c.verts[k][i];
                if v == c.verts[k + 1][j] && !e[c.alg.idempotent(v)].is_zero() {
                    return Some((k, j, i));
                }
            }
        }
    }
    None
}

/// Splits off the contractible summand `P(v) --φ--> P(v)` at entry `(k, j, i)`.
fn eliminate<F: Scalar>(c: &mut ProjComplex<F>, k: usize, j: usize, i: usize) {
    let alg = c.alg.clone();
    let v = c.verts[k][i];
    let d = &c.diffs[k];
    let phi_inv = local_inverse(&alg, v, &d[j][i]);
    let new_d: Vec<Vec<Vec<F>>> = (0..d.len())
        .filter(|&l| l != j)
        .map(|l| {
            (0..d[l].len())
                .filter(|&m| m != i)
                .map(|m| {
                    let corr = alg.mul(&alg.mul(&d[l][i], &phi_inv), &d[j][m]);
                    d[l][m]
                        .iter()
                        .zip(corr)
                        .map(|(a, b)| a.clone() - b)
                        .collect()
                })
                .collect()
        })
        .collect();
    c.diffs[k] = new_d;
    if k > 0 {
        c.diffs[k - 1].remove(i);
    }
    if k + 1 < c.diffs.len() {
        for row in &mut c.diffs[k + 1] {
            row.remove(j);
        }
    }
    c.verts[k].remove(i);
    c.verts[k + 1].remove(j);
}

/// A homotopy equivalent complex whose differentials have radical entries.
///
/// Repeatedly splits off `P --iso--> P` summands by Gaussian elimination.
pub fn minimal_form<F: Scalar>(c: &ProjComplex<F>) -> ProjComplex<F> {
    let mut out = c.clone();
    while let Some((k, j, i)) = find_unit(&out) {
        eliminate(&mut out, k, j, i);
    }
    out.trimmed()
}
