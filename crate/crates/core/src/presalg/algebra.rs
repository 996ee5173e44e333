use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::exactla::{Echelon, QuotientMap};
use crate::presalg::quiver::{Quiver, Relation};
use crate::scalar::Scalar;

/// Sparse vector over the basis of an algebra.
pub type Sparse<F> = Vec<(usize, F)>;

/// A basis path: stationary when `word` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisPath {
    pub src: usize,
    pub tgt: usize,
    pub word: Vec<usize>,
    pub degree: i64,
}

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub max_len: usize,
    /// Kill every path of degree above the cutoff.
    pub cutoff: Option<i64>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_len: 30,
            cutoff: None,
        }
    }
}

/// `kQ/I` with a path basis and right multiplication by arrows.
///
/// Paths compose left to right: the word `[a, b]` is `a` followed by `b`.
/// The basis is prefix closed, so every basis word is a basis word times an
/// arrow, and `right[a][b]` holds the normal form of `basis[b] · a`.
#[derive(Debug)]
pub struct Algebra<F> {
    quiver: Quiver,
    relations: Vec<Relation<F>>,
    basis: Vec<BasisPath>,
    right: Vec<Vec<Sparse<F>>>,
    idem: Vec<usize>,
    blocks: Vec<Vec<Vec<usize>>>,
    cutoff: Option<i64>,
    fingerprint: u64,
    opp: OnceLock<Arc<Algebra<F>>>,
    origin: Option<Weak<Algebra<F>>>,
}

impl<F: Scalar> Algebra<F> {
    /// Assembles an algebra from a prefix-closed basis and its right action.
    pub(crate) fn from_parts(
        quiver: Quiver,
        relations: Vec<Relation<F>>,
        basis: Vec<BasisPath>,
        right: Vec<Vec<Sparse<F>>>,
        cutoff: Option<i64>,
    ) -> Self {
        let n = quiver.n_vertices();
        let mut idem = vec![usize::MAX; n];
        let mut blocks = vec![vec![Vec::new(); n]; n];
        for (i, b) in basis.iter().enumerate() {
            if b.word.is_empty() {
                idem[b.src] = i;
            }
            blocks[b.src][b.tgt].push(i);
        }
        assert!(idem.iter().all(|&i| i != usize::MAX), "missing idempotent");
        let mut h = DefaultHasher::new();
        quiver.hash(&mut h);
        basis.hash(&mut h);
        for col in &right {
            for v in col {
                for (i, c) in v {
                    i.hash(&mut h);
                    c.to_string().hash(&mut h);
                }
            }
        }
        cutoff.hash(&mut h);
        Algebra {
            quiver,
            relations,
            basis,
            right,
            idem,
            blocks,
            cutoff,
            fingerprint: h.finish(),
            opp: OnceLock::new(),
            origin: None,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    pub fn basis(&self) -> &[BasisPath] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }

    pub fn cutoff(&self) -> Option<i64> {
        self.cutoff
    }

    /// Structural identity: equal fingerprints mean identical presentations.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same_as(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || self.fingerprint == other.fingerprint
    }

    /// Basis index of the idempotent at `v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.idem[v]
    }

    /// Basis indices of `e_v A e_w`, i.e. paths from `v` to `w`.
    pub fn block(&self, v: usize, w: usize) -> &[usize] {
        &self.blocks[v][w]
    }

    /// `basis[b] · arrow` in normal form.
    pub fn right_arrow(&self, arrow: usize, b: usize) -> &Sparse<F> {
        &self.right[arrow][b]
    }

    pub fn unit(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    /// `x · arrow`.
    pub fn mul_arrow(&self, x: &[F], arrow: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (b, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, d) in &self.right[arrow][b] {
                out[*t] = out[*t].clone() + c.clone() * d.clone();
            }
        }
        out
    }

    pub fn mul_word(&self, x: &[F], word: &[usize]) -> Vec<F> {
        let mut v = x.to_vec();
        for &a in word {
            v = self.mul_arrow(&v, a);
        }
        v
    }

    /// Normal form of the path `word` starting at `src`.
    pub fn nf(&self, src: usize, word: &[usize]) -> Vec<F> {
        self.mul_word(&self.unit(self.idem[src]), word)
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (j, c) in y.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.mul_word(x, &self.basis[j].word);
            // Stationary words multiply by the idempotent, which the word alone misses.
            let p = if self.basis[j].word.is_empty() {
                self.restrict_tgt(&p, self.basis[j].src)
            } else {
                p
            };
            for (o, v) in out.iter_mut().zip(p) {
                if !v.is_zero() {
                    *o = o.clone() + c.clone() * v;
                }
            }
        }
        out
    }

    fn restrict_tgt(&self, x: &[F], v: usize) -> Vec<F> {
        x.iter()
            .enumerate()
            .map(|(i, c)| {
                if self.basis[i].tgt == v {
                    c.clone()
                } else {
                    F::zero()
                }
            })
            .collect()
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<F> {
        if self.basis[i].tgt != self.basis[j].src {
            return vec![F::zero(); self.dim()];
        }
        self.mul_word(&self.unit(i), &self.basis[j].word)
    }

    pub fn is_graded(&self) -> bool {
        self.quiver.is_graded()
    }

    /// Least `n` with `rad^n = 0`.
    pub fn loewy_length(&self) -> usize {
        // rad^k is spanned by `rad^(k-1) · arrow`, starting from the idempotents.
        let mut layer: Vec<Vec<F>> = (0..self.n_vertices())
            .map(|v| self.unit(self.idem[v]))
            .collect();
        let mut n = 0;
        while !layer.is_empty() {
            let mut ech = Echelon::new(self.dim());
            for x in &layer {
                for a in 0..self.quiver.arrows().len() {
                    ech.insert(&self.mul_arrow(x, a));
                }
            }
            layer = ech.basis().to_vec();
            n += 1;
        }
        n
    }

    pub fn element_name(&self, x: &[F]) -> String {
        let mut parts = Vec::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let b = &self.basis[i];
            let w = self.quiver.word_name(b.src, &b.word);
            parts.push(if c.is_one() { w } else { format!("{c}*{w}") });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl<F: Scalar> Algebra<F> {
    /// The opposite algebra: arrows and basis words reversed, same basis order.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        if let Some(o) = self.origin.as_ref().and_then(Weak::upgrade) {
            return o;
        }
        self.opp
            .get_or_init(|| {
                let mut op = self.build_opposite();
                op.origin = Some(Arc::downgrade(self));
                Arc::new(op)
            })
            .clone()
    }

    fn build_opposite(&self) -> Self {
        let quiver = self.quiver.reversed();
        let basis: Vec<BasisPath> = self
            .basis
            .iter()
            .map(|b| BasisPath {
                src: b.tgt,
                tgt: b.src,
                word: b.word.iter().rev().copied().collect(),
                degree: b.degree,
            })
            .collect();
        // Right multiplication by `a` in the opposite is left multiplication by `a` here.
        let right = (0..quiver.arrows().len())
            .map(|a| {
                let arrow = &self.quiver.arrows()[a];
                let av = self.nf(arrow.src, &[a]);
                (0..self.dim())
                    .map(|b| {
                        if self.basis[b].src != arrow.tgt {
                            return Vec::new();
                        }
                        let w = &self.basis[b].word;
                        let v = if w.is_empty() {
                            av.clone()
                        } else {
                            self.mul_word(&av, w)
                        };
                        to_sparse(&v)
                    })
                    .collect()
            })
            .collect();
        let relations = self.relations.iter().map(Relation::reversed).collect();
        Algebra::from_parts(quiver, relations, basis, right, self.cutoff)
    }
}

pub(crate) fn to_sparse<F: Scalar>(v: &[F]) -> Sparse<F> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Computes a basis of `kQ/I` one path length at a time.
///
/// Relations must be homogeneous in path length. At length `l` the candidate
/// words are basis words of length `l-1` extended by one arrow; the relations
/// (premultiplied by shorter basis words) cut this space down to the next
/// layer. Building stops at the first empty layer.
pub fn build_algebra<F: Scalar>(
    q: Quiver,
    rels: Vec<Relation<F>>,
    opts: BuildOptions,
) -> Result<Algebra<F>> {
    if opts.max_len == 0 {
        return Err(Error::NotAdmissible("max_len must be positive".into()));
    }
    let rels: Vec<Relation<F>> = rels
        .into_iter()
        .map(|r| Relation::new(r.terms))
        .filter(|r| !r.is_zero())
        .collect();
    let mut shapes = Vec::new();
    for r in &rels {
        shapes.push(r.validate(&q)?);
    }
    let n = q.n_vertices();
    let n_arrows = q.arrows().len();
    let mut basis: Vec<BasisPath> = (0..n)
        .map(|v| BasisPath {
            src: v,
            tgt: v,
            word: Vec::new(),
            degree: 0,
        })
        .collect();
    let mut right: Vec<Vec<Sparse<F>>> = vec![Vec::new(); n_arrows];
    let mut layers: Vec<Vec<usize>> = vec![(0..n).collect()];

    // Extend the right tables for basis index `b` once its layer successor is known.
    let mut len = 1;
    loop {
        if len > opts.max_len {
            return Err(Error::NotAdmissible(format!(
                "no stabilization by path length {}",
                opts.max_len
            )));
        }
        let prev = &layers[len - 1];
        let mut coords: Vec<(usize, usize)> = Vec::new();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        for &b in prev {
            for (a, arr) in q.arrows().iter().enumerate() {
                if arr.src == basis[b].tgt {
                    index.insert((b, a), coords.len());
                    coords.push((b, a));
                }
            }
        }
        let mut ech = Echelon::new(coords.len());
        if let Some(c) = opts.cutoff {
            for (k, &(b, a)) in coords.iter().enumerate() {
                if basis[b].degree + q.arrows()[a].degree > c {
                    let mut v = vec![F::zero(); coords.len()];
                    v[k] = F::one();
                    ech.insert(&v);
                }
            }
        }
        for (r, &(src, _, rlen, _)) in rels.iter().zip(&shapes) {
            if rlen > len {
                continue;
            }
            for &p in &layers[len - rlen] {
                if basis[p].tgt != src {
                    continue;
                }
                let mut v = vec![F::zero(); coords.len()];
                let pv = unit_vec::<F>(basis.len(), p);
                for (c, w) in &r.terms {
                    let (last, head) = w.split_last().unwrap();
                    let mut x = pv.clone();
                    for &a in head {
                        x = apply_right(&right, a, &x, basis.len());
                    }
                    for (b, coef) in x.iter().enumerate() {
                        if !coef.is_zero() {
                            let k = index[&(b, *last)];
                            v[k] = v[k].clone() + c.clone() * coef.clone();
                        }
                    }
                }
                ech.insert(&v);
            }
        }
        let quot = QuotientMap::from_echelon(ech);
        let start = basis.len();
        let mut layer = Vec::new();
        for &k in quot.free_coords() {
            let (b, a) = coords[k];
            let mut word = basis[b].word.clone();
            word.push(a);
            let arr = &q.arrows()[a];
            basis.push(BasisPath {
                src: basis[b].src,
                tgt: arr.tgt,
                word,
                degree: basis[b].degree + arr.degree,
            });
            layer.push(basis.len() - 1);
        }
        // Right tables of the previous layer.
        for col in right.iter_mut() {
            col.resize(start, Vec::new());
        }
        for (k, &(b, a)) in coords.iter().enumerate() {
            let mut e = vec![F::zero(); coords.len()];
            e[k] = F::one();
            let proj = quot.project(&e);
            right[a][b] = proj
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (start + i, c))
                .collect();
        }
        if layer.is_empty() {
            break;
        }
        layers.push(layer);
        len += 1;
    }
    let dim = basis.len();
    for col in right.iter_mut() {
        col.resize(dim, Vec::new());
    }
    Ok(Algebra::from_parts(q, rels, basis, right, opts.cutoff))
}

fn unit_vec<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

fn apply_right<F: Scalar>(right: &[Vec<Sparse<F>>], a: usize, x: &[F], n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (b, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (t, d) in right[a].get(b).map(Vec::as_slice).unwrap_or(&[]) {
            out[*t] = out[*t].clone() + c.clone() * d.clone();
        }
    }
    out
}

/// Convenience constructor from vertex names, `(name, src, tgt, degree)`
/// arrows and relation strings such as `"a*b - c*d"`.
pub fn presented<F: Scalar>(
    vertices: &[&str],
    arrows: &[(&str, &str, &str, i64)],
    relations: &[&str],
    opts: BuildOptions,
) -> Result<Algebra<F>> {
    let mut q = Quiver::new(vertices.iter().copied())?;
    for (name, s, t, d) in arrows {
        q.add_arrow(name, s, t, *d)?;
    }
    let rels = relations
        .iter()
        .map(|r| {
            Relation::parse(&q, r)
                .map_err(|e| Error::InvalidRelation(format!("`{r}` col {}: {}", e.col, e.msg)))
        })
        .collect::<Result<Vec<_>>>()?;
    build_algebra(q, rels, opts)
}
