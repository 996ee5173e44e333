//! Isomorphism proxy for basic algebras given by quiver and relations.
//!
//! Two algebras are matched when some bijection of vertices carries, for every
//! ordered pair of vertices, the multiset of (radical layer, degree) of basis
//! paths in `e_v A e_w` onto the same multiset. This implies equal graded quivers,
//! equal Loewy-layered Cartan matrices and equal dimensions.

use std::collections::BTreeMap;

use crate::presalg::Algebra;
use crate::scalar::Scalar;

type Profile = BTreeMap<(usize, i64), usize>;

fn profiles<F: Scalar>(a: &Algebra<F>, graded: bool) -> Vec<Vec<Profile>> {
    let n = a.n_vertices();
    (0..n)
        .map(|v| {
            (0..n)
                .map(|w| {
                    let mut p = Profile::new();
                    for &b in a.block(v, w) {
                        let bp = &a.basis()[b];
                        *p.entry((bp.word.len(), if graded { bp.degree } else { 0 }))
                            .or_default() += 1;
                    }
                    p
                })
                .collect()
        })
        .collect()
}

/// A vertex bijection `σ` (indexed by vertices of `a`) under which the profiles agree.
pub fn profile_match<F: Scalar>(a: &Algebra<F>, b: &Algebra<F>) -> Option<Vec<usize>> {
    match_profiles(a, b, true)
}

fn match_profiles<F: Scalar>(a: &Algebra<F>, b: &Algebra<F>, graded: bool) -> Option<Vec<usize>> {
    let n = a.n_vertices();
    if n != b.n_vertices() || a.dim() != b.dim() {
        return None;
    }
    let pa = profiles(a, graded);
    let pb = profiles(b, graded);
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        pa: &[Vec<Profile>],
        pb: &[Vec<Profile>],
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = pa.len();
        if k == n {
            return true;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            let ok = (0..k).all(|j| pa[k][j] == pb[c][sigma[j]] && pa[j][k] == pb[sigma[j]][c])
                && pa[k][k] == pb[c][c];
            if ok {
                sigma[k] = c;
                used[c] = true;
                if go(k + 1, pa, pb, sigma, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }
    go(0, &pa, &pb, &mut sigma, &mut used).then_some(sigma)
}

pub fn profile_isomorphic<F: Scalar>(a: &Algebra<F>, b: &Algebra<F>) -> bool {
    profile_match(a, b).is_some()
}

/// As [`profile_isomorphic`], forgetting the grading.
pub fn profile_isomorphic_ungraded<F: Scalar>(a: &Algebra<F>, b: &Algebra<F>) -> bool {
    match_profiles(a, b, false).is_some()
}
