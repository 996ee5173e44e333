use std::sync::Arc;

use crate::error::{Error, Result};
use crate::presalg::Algebra;
use crate::repmod::{generator_images, map_from_generators, proj_sum, Module, ModuleMap};
use crate::scalar::Scalar;

/// A bounded cochain complex of modules, `terms[k]` sitting in degree `lo + k`.
#[derive(Clone, Debug)]
pub struct BoundedComplex<F> {
    alg: Arc<Algebra<F>>,
    lo: i64,
    terms: Vec<Module<F>>,
    /// `diffs[k]: terms[k] -> terms[k + 1]`.
    diffs: Vec<ModuleMap<F>>,
}

impl<F: Scalar> BoundedComplex<F> {
    /// Checks that every differential is a module map and that `d∘d = 0`.
    pub fn new(
        alg: &Arc<Algebra<F>>,
        lo: i64,
        terms: Vec<Module<F>>,
        diffs: Vec<ModuleMap<F>>,
    ) -> Result<Self> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::InvalidModule(
                "need one differential between consecutive terms".into(),
            ));
        }
        for t in &terms {
            if !t.algebra().same_as(alg) {
                return Err(Error::AlgebraMismatch);
            }
        }
        for (k, d) in diffs.iter().enumerate() {
            if !d.is_homomorphism(&terms[k], &terms[k + 1]) {
                return Err(Error::InvalidModule(format!(
                    "differential in degree {} is not a module map",
                    lo + k as i64
                )));
            }
            if k > 0 && !d.after(&diffs[k - 1]).is_zero() {
                return Err(Error::InvalidModule(format!(
                    "d∘d ≠ 0 in degree {}",
                    lo + k as i64 - 1
                )));
            }
        }
        Ok(BoundedComplex {
            alg: alg.clone(),
            lo,
            terms,
            diffs,
        })
    }

    pub fn zero(alg: &Arc<Algebra<F>>) -> Self {
        BoundedComplex {
            alg: alg.clone(),
            lo: 0,
            terms: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// `m` placed in degree `deg`.
    pub fn stalk(m: &Module<F>, deg: i64) -> Self {
        BoundedComplex {
            alg: m.algebra().clone(),
            lo: deg,
            terms: vec![m.clone()],
            diffs: Vec::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.alg
    }

    /// Lowest and highest stored degree; `hi < lo` for the empty complex.
    pub fn range(&self) -> (i64, i64) {
        (self.lo, self.lo + self.terms.len() as i64 - 1)
    }

    fn index(&self, k: i64) -> Option<usize> {
        let i = k - self.lo;
        (0..self.terms.len() as i64)
            .contains(&i)
            .then_some(i as usize)
    }

    /// The term in degree `k`, zero outside the range.
    pub fn term(&self, k: i64) -> Module<F> {
        self.index(k)
            .map_or_else(|| Module::zero(self.alg.clone()), |i| self.terms[i].clone())
    }

    /// `d^k: X^k -> X^{k+1}`.
    pub fn diff(&self, k: i64) -> ModuleMap<F> {
        match (self.index(k), self.index(k + 1)) {
            (Some(i), Some(_)) => self.diffs[i].clone(),
            _ => ModuleMap::zero(&self.term(k), &self.term(k + 1)),
        }
    }

    /// `X[n]`: degree `k` holds `X^{k+n}`, differentials scaled by `(-1)^n`.
    pub fn shift(&self, n: i64) -> Self {
        let sign = if n.rem_euclid(2) == 1 {
            -F::one()
        } else {
            F::one()
        };
        BoundedComplex {
            alg: self.alg.clone(),
            lo: self.lo - n,
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    pub fn direct_sum(&self, o: &Self) -> Result<Self> {
        if !self.alg.same_as(&o.alg) {
            return Err(Error::AlgebraMismatch);
        }
        if self.terms.is_empty() {
            return Ok(o.clone());
        }
        if o.terms.is_empty() {
            return Ok(self.clone());
        }
        let lo = self.lo.min(o.lo);
        let hi = self.range().1.max(o.range().1);
        let sums: Vec<_> = (lo..=hi)
            .map(|k| Module::direct_sum(&self.alg, &[self.term(k), o.term(k)]))
            .collect();
        let diffs = (lo..hi)
            .map(|k| {
                let (i, j) = ((k - lo) as usize, (k - lo + 1) as usize);
                let a = sums[j].1[0].after(&self.diff(k)).after(&sums[i].2[0]);
                let b = sums[j].1[1].after(&o.diff(k)).after(&sums[i].2[1]);
                a.add(&b)
            })
            .collect();
        Ok(BoundedComplex {
            alg: self.alg.clone(),
            lo,
            terms: sums.into_iter().map(|s| s.0).collect(),
            diffs,
        })
    }

    /// `H^k = ker d^k / im d^{k-1}`.
    pub fn cohomology(&self, k: i64) -> Module<F> {
        let x = self.term(k);
        let (z, inc) = self.diff(k).kernel(&x);
        let into_z: Vec<_> = self
            .diff(k - 1)
            .comps
            .iter()
            .zip(&inc.comps)
            .map(|(d, i)| {
                i.solve_matrix(&d.column_basis())
                    .expect("boundaries are cycles")
            })
            .collect();
        z.quotient(&into_z).0
    }

    pub fn is_acyclic(&self) -> bool {
        let (lo, hi) = self.range();
        (lo..=hi).all(|k| self.cohomology(k).is_zero())
    }

    /// `D X` over the opposite algebra: `D X^{-k}` in degree `k`.
    pub fn dual(&self) -> Self {
        let (_, hi) = self.range();
        BoundedComplex {
            alg: self.alg.opposite(),
            lo: -hi,
            terms: self.terms.iter().rev().map(Module::dual).collect(),
            diffs: self.diffs.iter().rev().map(ModuleMap::dual).collect(),
        }
    }

    /// Drops zero terms at both ends.
    pub fn trimmed(&self) -> Self {
        let keep: Vec<usize> = (0..self.terms.len())
            .filter(|&i| !self.terms[i].is_zero())
            .collect();
        let (Some(&a), Some(&b)) = (keep.first(), keep.last()) else {
            return Self::zero(&self.alg);
        };
        BoundedComplex {
            alg: self.alg.clone(),
            lo: self.lo + a as i64,
            terms: self.terms[a..=b].to_vec(),
            diffs: self.diffs[a..b].to_vec(),
        }
    }
}

/// A bounded complex of projectives `⊕_i P(verts[k][i])` in degree `lo + k`.
///
/// Differentials are matrices of algebra elements: `diffs[k][j][i] ∈ e_w A e_v`
/// maps summand `i = P(v)` to summand `j = P(w)` by left multiplication.
#[derive(Clone, Debug)]
pub struct ProjComplex<F> {
    pub(crate) alg: Arc<Algebra<F>>,
    pub(crate) lo: i64,
    pub(crate) verts: Vec<Vec<usize>>,
    pub(crate) diffs: Vec<Vec<Vec<Vec<F>>>>,
}

/// `b·a` entrywise as a matrix product.
pub(crate) fn compose<F: Scalar>(
    alg: &Algebra<F>,
    outer: &[Vec<Vec<F>>],
    inner: &[Vec<Vec<F>>],
) -> Vec<Vec<Vec<F>>> {
    let cols = inner.first().map_or(0, Vec::len);
    outer
        .iter()
        .map(|row| {
            (0..cols)
                .map(|i| {
                    let mut acc = vec![F::zero(); alg.dim()];
                    for (l, b) in row.iter().enumerate() {
                        let p = alg.mul(b, &inner[l][i]);
                        for (x, y) in acc.iter_mut().zip(p) {
                            *x = x.clone() + y;
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub(crate) fn is_zero_elem<F: Scalar>(a: &[F]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// The module map `⊕ P(src) -> ⊕ P(tgt)` given by an element matrix.
pub fn elements_to_map<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    src: &[usize],
    tgt: &[usize],
    entries: &[Vec<Vec<F>>],
) -> ModuleMap<F> {
    let target = proj_sum(alg, tgt);
    let images: Vec<Vec<F>> = src
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            tgt.iter()
                .enumerate()
                .flat_map(|(j, &w)| {
                    alg.block(w, v)
                        .iter()
                        .map(move |&b| entries[j][i][b].clone())
                })
                .collect()
        })
        .collect();
    map_from_generators(alg, src, &target, &images)
}

/// Inverse of [`elements_to_map`].
pub fn map_to_elements<F: Scalar>(
    alg: &Algebra<F>,
    src: &[usize],
    tgt: &[usize],
    f: &ModuleMap<F>,
) -> Vec<Vec<Vec<F>>> {
    let gens = generator_images(alg, src, f);
    let mut out = vec![vec![vec![F::zero(); alg.dim()]; src.len()]; tgt.len()];
    for (i, &v) in src.iter().enumerate() {
        let mut pos = 0;
        for (j, &w) in tgt.iter().enumerate() {
            for &b in alg.block(w, v) {
                out[j][i][b] = gens[i][pos].clone();
                pos += 1;
            }
        }
    }
    out
}

impl<F: Scalar> ProjComplex<F> {
    pub fn new(
        alg: &Arc<Algebra<F>>,
        lo: i64,
        verts: Vec<Vec<usize>>,
        diffs: Vec<Vec<Vec<Vec<F>>>>,
    ) -> Result<Self> {
        let c = ProjComplex {
            alg: alg.clone(),
            lo,
            verts,
            diffs,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        if self.diffs.len() + 1 != self.verts.len().max(1) {
            return Err(Error::InvalidModule(
                "need one differential between consecutive terms".into(),
            ));
        }
        for (k, d) in self.diffs.iter().enumerate() {
            let (src, tgt) = (&self.verts[k], &self.verts[k + 1]);
            if d.len() != tgt.len() || d.iter().any(|r| r.len() != src.len()) {
                return Err(Error::InvalidModule(format!(
                    "differential {k} has the wrong shape"
                )));
            }
            for (j, &w) in tgt.iter().enumerate() {
                for (i, &v) in src.iter().enumerate() {
                    let e = &d[j][i];
                    if e.len() != self.alg.dim()
                        || (0..e.len())
                            .any(|b| !e[b].is_zero() && !self.alg.block(w, v).contains(&b))
                    {
                        return Err(Error::InvalidModule(format!(
                            "entry ({j},{i}) of differential {k} is not in e_w A e_v"
                        )));
                    }
                }
            }
            if k > 0 {
                let dd = compose(&self.alg, d, &self.diffs[k - 1]);
                if !dd.iter().flatten().all(|e| is_zero_elem(e)) {
                    return Err(Error::InvalidModule(format!(
                        "d∘d ≠ 0 in degree {}",
                        self.lo + k as i64 - 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Arc<Algebra<F>>) -> Self {
        ProjComplex {
            alg: alg.clone(),
            lo: 0,
            verts: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// `⊕ P(verts)` in degree `deg`.
    pub fn stalk(alg: &Arc<Algebra<F>>, verts: Vec<usize>, deg: i64) -> Self {
        ProjComplex {
            alg: alg.clone(),
            lo: deg,
            verts: vec![verts],
            diffs: Vec::new(),
        }
    }

    /// The regular module in degree 0.
    pub fn regular(alg: &Arc<Algebra<F>>) -> Self {
        Self::stalk(alg, (0..alg.n_vertices()).collect(), 0)
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.alg
    }

    pub fn range(&self) -> (i64, i64) {
        (self.lo, self.lo + self.verts.len() as i64 - 1)
    }

    pub fn verts(&self, k: i64) -> &[usize] {
        let i = k - self.lo;
        if (0..self.verts.len() as i64).contains(&i) {
            &self.verts[i as usize]
        } else {
            &[]
        }
    }

    /// The element matrix of `d^k`, empty rows or columns outside the range.
    pub fn diff(&self, k: i64) -> Vec<Vec<Vec<F>>> {
        let i = k - self.lo;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            vec![
                vec![vec![F::zero(); self.alg.dim()]; self.verts(k).len()];
                self.verts(k + 1).len()
            ]
        }
    }

    /// Number of indecomposable summands over all degrees.
    pub fn size(&self) -> usize {
        self.verts.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.size() == 0
    }

    pub fn shift(&self, n: i64) -> Self {
        let odd = n.rem_euclid(2) == 1;
        let diffs = self
            .diffs
            .iter()
            .map(|d| {
                d.iter()
                    .map(|r| {
                        r.iter()
                            .map(|e| {
                                if odd {
                                    e.iter().map(|x| -x.clone()).collect()
                                } else {
                                    e.clone()
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ProjComplex {
            alg: self.alg.clone(),
            lo: self.lo - n,
            verts: self.verts.clone(),
            diffs,
        }
    }

    pub fn direct_sum(&self, o: &Self) -> Result<Self> {
        if !self.alg.same_as(&o.alg) {
            return Err(Error::AlgebraMismatch);
        }
        if self.verts.is_empty() {
            return Ok(o.clone());
        }
        if o.verts.is_empty() {
            return Ok(self.clone());
        }
        let lo = self.lo.min(o.lo);
        let hi = self.range().1.max(o.range().1);
        let verts: Vec<Vec<usize>> = (lo..=hi)
            .map(|k| [self.verts(k), o.verts(k)].concat())
            .collect();
        let zero = vec![F::zero(); self.alg.dim()];
        let diffs = (lo..hi)
            .map(|k| {
                let (a, b) = (self.diff(k), o.diff(k));
                let (ac, bc) = (self.verts(k).len(), o.verts(k).len());
                let mut rows = Vec::new();
                for r in a {
                    rows.push(
                        r.into_iter()
                            .chain(std::iter::repeat(zero.clone()).take(bc))
                            .collect(),
                    );
                }
                for r in b {
                    rows.push(std::iter::repeat(zero.clone()).take(ac).chain(r).collect());
                }
                rows
            })
            .collect();
        Ok(ProjComplex {
            alg: self.alg.clone(),
            lo,
            verts,
            diffs,
        })
    }

    /// The same complex as modules and module maps.
    pub fn to_complex(&self) -> BoundedComplex<F> {
        let terms = self.verts.iter().map(|v| proj_sum(&self.alg, v)).collect();
        let diffs = self
            .diffs
            .iter()
            .enumerate()
            .map(|(k, d)| elements_to_map(&self.alg, &self.verts[k], &self.verts[k + 1], d))
            .collect();
        BoundedComplex {
            alg: self.alg.clone(),
            lo: self.lo,
            terms,
            diffs,
        }
    }

    /// Whether every differential entry lies in the radical.
    pub fn is_radical(&self) -> bool {
        self.diffs.iter().enumerate().all(|(k, d)| {
            d.iter().enumerate().all(|(j, r)| {
                r.iter().enumerate().all(|(i, e)| {
                    let (v, w) = (self.verts[k][i], self.verts[k + 1][j]);
                    v != w || e[self.alg.idempotent(v)].is_zero()
                })
            })
        })
    }

    /// Drops empty degrees at both ends.
    pub fn trimmed(&self) -> Self {
        let keep: Vec<usize> = (0..self.verts.len())
            .filter(|&i| !self.verts[i].is_empty())
            .collect();
        let (Some(&a), Some(&b)) = (keep.first(), keep.last()) else {
            return Self::zero(&self.alg);
        };
        ProjComplex {
            alg: self.alg.clone(),
            lo: self.lo + a as i64,
            verts: self.verts[a..=b].to_vec(),
            diffs: self.diffs[a..b].to_vec(),
        }
    }
}
