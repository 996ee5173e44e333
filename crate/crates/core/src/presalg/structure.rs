use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::{Echelon, Matrix};
use crate::presalg::algebra::{to_sparse, Algebra, BasisPath, Sparse};
use crate::presalg::quiver::{Quiver, Relation};
use crate::scalar::Scalar;

/// One basis vector of the radical, homogeneous for vertices and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadElem {
    pub src: usize,
    pub tgt: usize,
    pub degree: i64,
}

/// A basic algebra given abstractly: vertices, a basis of the radical and
/// the products of radical basis elements.
///
/// `product(i, j)` is "i then j" and is only consulted for composable pairs
/// whose degree stays within the cutoff.
#[derive(Clone, Debug)]
pub struct FdAlgebra<F> {
    pub vertices: Vec<String>,
    pub rad: Vec<RadElem>,
    pub products: HashMap<(usize, usize), Sparse<F>>,
    pub cutoff: Option<i64>,
}

impl<F: Scalar> FdAlgebra<F> {
    pub fn new(
        vertices: Vec<String>,
        rad: Vec<RadElem>,
        cutoff: Option<i64>,
        mut product: impl FnMut(usize, usize) -> Vec<F>,
    ) -> Self {
        let mut products = HashMap::new();
        for i in 0..rad.len() {
            for j in 0..rad.len() {
                if rad[i].tgt != rad[j].src {
                    continue;
                }
                if cutoff.is_some_and(|c| rad[i].degree + rad[j].degree > c) {
                    continue;
                }
                let p = to_sparse(&product(i, j));
                if !p.is_empty() {
                    products.insert((i, j), p);
                }
            }
        }
        FdAlgebra {
            vertices,
            rad,
            products,
            cutoff,
        }
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() + self.rad.len()
    }

    /// `x · rad[j]` for `x` in radical coordinates.
    fn mul_rad(&self, x: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.rad.len()];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some(p) = self.products.get(&(i, j)) {
                for (t, d) in p {
                    out[*t] = out[*t].clone() + c.clone() * d.clone();
                }
            }
        }
        out
    }
}

fn arrow_name(i: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if i < 26 {
        (letters[i] as char).to_string()
    } else {
        format!("{}{}", letters[i % 26] as char, i / 26)
    }
}

/// Value of a path: either a stationary idempotent or a radical vector.
#[derive(Clone)]
enum PathValue<F> {
    Idem,
    Rad(Vec<F>),
}

/// Re-presents an abstract algebra by a quiver with relations.
///
/// Arrows are radical basis elements spanning a complement of rad² in each
/// (source, target, degree) block. The path basis is chosen greedily by
/// length, and relations are rewriting rules reduced to a minimal set when
/// the truncated path space is small enough.
pub fn from_structure<F: Scalar>(fd: &FdAlgebra<F>) -> Result<Algebra<F>> {
    Ok(from_structure_with_arrows(fd)?.0)
}

/// As [`from_structure`], also returning the radical element chosen for each arrow.
pub fn from_structure_with_arrows<F: Scalar>(
    fd: &FdAlgebra<F>,
) -> Result<(Algebra<F>, Vec<usize>)> {
    let r = fd.rad.len();
    let mut sq = Echelon::new(r);
    for p in fd.products.values() {
        let mut v = vec![F::zero(); r];
        for (t, c) in p {
            v[*t] = c.clone();
        }
        sq.insert(&v);
    }
    let mut quiver = Quiver::new(fd.vertices.clone())?;
    let mut arrow_elem = Vec::new();
    let mut ech = sq.clone();
    for (i, e) in fd.rad.iter().enumerate() {
        let mut v = vec![F::zero(); r];
        v[i] = F::one();
        if ech.insert(&v) {
            quiver.push_arrow(&arrow_name(arrow_elem.len()), e.src, e.tgt, e.degree)?;
            arrow_elem.push(i);
        }
    }
    // Greedy prefix-closed path basis.
    let n = fd.vertices.len();
    let mut basis: Vec<BasisPath> = (0..n)
        .map(|v| BasisPath {
            src: v,
            tgt: v,
            word: Vec::new(),
            degree: 0,
        })
        .collect();
    let mut values: Vec<PathValue<F>> = (0..n).map(|_| PathValue::Idem).collect();
    let mut chosen = Echelon::new(r);
    let mut rules: Vec<(usize, usize, Vec<F>)> = Vec::new(); // (basis word, arrow, value)
    let mut layer: Vec<usize> = (0..n).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &b in &layer {
            for (a, &elem) in arrow_elem.iter().enumerate() {
                let arr = &quiver.arrows()[a];
                if arr.src != basis[b].tgt {
                    continue;
                }
                let deg = basis[b].degree + arr.degree;
                let v = match &values[b] {
                    PathValue::Idem => {
                        let mut v = vec![F::zero(); r];
                        v[elem] = F::one();
                        v
                    }
                    PathValue::Rad(x) => {
                        if fd.cutoff.is_some_and(|c| deg > c) {
                            vec![F::zero(); r]
                        } else {
                            fd.mul_rad(x, elem)
                        }
                    }
                };
                if chosen.insert(&v) {
                    let mut word = basis[b].word.clone();
                    word.push(a);
                    basis.push(BasisPath {
                        src: basis[b].src,
                        tgt: arr.tgt,
                        word,
                        degree: deg,
                    });
                    values.push(PathValue::Rad(v));
                    next.push(basis.len() - 1);
                } else {
                    rules.push((b, a, v));
                }
            }
        }
        layer = next;
    }
    if basis.len() != fd.dim() {
        return Err(Error::NotGenerated(format!(
            "paths span {} of {} dimensions",
            basis.len(),
            fd.dim()
        )));
    }
    // Coordinates of radical vectors in the path basis.
    let rad_words: Vec<usize> = (n..basis.len()).collect();
    let cols: Vec<Vec<F>> = rad_words
        .iter()
        .map(|&b| match &values[b] {
            PathValue::Rad(v) => v.clone(),
            PathValue::Idem => unreachable!(),
        })
        .collect();
    let inv = Matrix::from_cols(r, &cols)
        .inverse()
        .ok_or_else(|| Error::NotGenerated("path values are dependent".into()))?;
    let coords = |v: &[F]| -> Sparse<F> {
        inv.mul_vec(v)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (n + i, c))
            .collect()
    };
    let dim = basis.len();
    let mut right: Vec<Vec<Sparse<F>>> = vec![vec![Vec::new(); dim]; arrow_elem.len()];
    let mut word_index: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, b) in basis.iter().enumerate().skip(n) {
        let (last, _) = b.word.split_last().unwrap();
        let parent = basis
            .iter()
            .position(|p| p.src == b.src && p.word[..] == b.word[..b.word.len() - 1])
            .unwrap();
        word_index.insert((parent, *last), i);
    }
    for (&(p, a), &i) in &word_index {
        right[a][p] = vec![(i, F::one())];
    }
    for (b, a, v) in &rules {
        right[*a][*b] = coords(v);
    }
    let loewy = nilpotency_index(fd, &arrow_elem);
    let relations = minimal_relations(&quiver, &basis, &rules, &coords, fd.cutoff, loewy);
    Ok((
        Algebra::from_parts(quiver, relations, basis, right, fd.cutoff),
        arrow_elem,
    ))
}

/// Converts rewriting rules to relations and keeps a minimal generating set.
fn minimal_relations<F: Scalar>(
    q: &Quiver,
    basis: &[BasisPath],
    rules: &[(usize, usize, Vec<F>)],
    coords: &dyn Fn(&[F]) -> Sparse<F>,
    cutoff: Option<i64>,
    loewy: usize,
) -> Vec<Relation<F>> {
    let rels: Vec<Relation<F>> = rules
        .iter()
        .filter(|(b, a, _)| cutoff.is_none_or(|c| basis[*b].degree + q.arrows()[*a].degree <= c))
        .map(|(b, a, v)| {
            let mut w = basis[*b].word.clone();
            w.push(*a);
            let mut terms = vec![(F::one(), w)];
            for (i, c) in coords(v) {
                terms.push((-c, basis[i].word.clone()));
            }
            Relation::new(terms)
        })
        .collect();
    reduce_relations(q, rels, loewy)
}

/// Least `N` with `rad^N = 0`.
fn nilpotency_index<F: Scalar>(fd: &FdAlgebra<F>, arrow_elem: &[usize]) -> usize {
    let r = fd.rad.len();
    let mut power: Vec<Vec<F>> = (0..r)
        .map(|i| {
            let mut v = vec![F::zero(); r];
            v[i] = F::one();
            v
        })
        .collect();
    let mut n = 1;
    while !power.is_empty() {
        let mut ech = Echelon::new(r);
        for x in &power {
            for &a in arrow_elem {
                ech.insert(&fd.mul_rad(x, a));
            }
        }
        power = ech.basis().to_vec();
        n += 1;
    }
    n
}

/// Drops relations lying in `J·I + I·J`, computed in paths of length ≤ `loewy`.
///
/// Every path of length `loewy` vanishes in the algebra, so longer paths lie
/// in `J·I` and truncating there loses nothing.
pub(crate) fn reduce_relations<F: Scalar>(
    q: &Quiver,
    rels: Vec<Relation<F>>,
    loewy: usize,
) -> Vec<Relation<F>> {
    const MAX_PATHS: usize = 4000;
    let n_arrows = q.arrows().len();
    // Enumerate nonempty paths up to length `loewy`.
    let mut paths: Vec<Vec<usize>> = (0..n_arrows).map(|a| vec![a]).collect();
    let mut frontier = paths.clone();
    for _ in 1..loewy {
        let mut next = Vec::new();
        for p in &frontier {
            let t = q.arrows()[*p.last().unwrap()].tgt;
            for (a, arr) in q.arrows().iter().enumerate() {
                if arr.src == t {
                    let mut w = p.clone();
                    w.push(a);
                    next.push(w);
                }
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
        if paths.len() > MAX_PATHS {
            return rels;
        }
    }
    let index: HashMap<&[usize], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let vec_of = |terms: &[(F, Vec<usize>)]| -> Vec<F> {
        let mut v = vec![F::zero(); paths.len()];
        for (c, w) in terms {
            if let Some(&i) = index.get(w.as_slice()) {
                v[i] = v[i].clone() + c.clone();
            }
        }
        v
    };
    let ends = |w: &[usize]| q.word_ends(w).unwrap();
    let mut jiij = Echelon::new(paths.len());
    for r in &rels {
        let (s, t) = ends(&r.terms[0].1);
        let min_len = r.terms.iter().map(|(_, w)| w.len()).min().unwrap();
        let room = loewy.saturating_sub(min_len);
        let lefts: Vec<&Vec<usize>> = paths
            .iter()
            .filter(|p| p.len() <= room && q.arrows()[*p.last().unwrap()].tgt == s)
            .collect();
        let rights: Vec<&Vec<usize>> = paths
            .iter()
            .filter(|p| p.len() <= room && q.arrows()[p[0]].src == t)
            .collect();
        let empty: Vec<usize> = Vec::new();
        let mut pre: Vec<&Vec<usize>> = vec![&empty];
        pre.extend(lefts);
        let mut post: Vec<&Vec<usize>> = vec![&empty];
        post.extend(rights);
        for p in &pre {
            for s2 in &post {
                if p.is_empty() && s2.is_empty() {
                    continue;
                }
                if p.len() + s2.len() + min_len > loewy {
                    continue;
                }
                let terms: Vec<(F, Vec<usize>)> = r
                    .terms
                    .iter()
                    .map(|(c, w)| {
                        let mut x = (*p).clone();
                        x.extend(w);
                        x.extend(s2.iter());
                        (c.clone(), x)
                    })
                    .collect();
                jiij.insert(&vec_of(&terms));
            }
        }
    }
    let mut kept = Vec::new();
    for r in rels {
        if jiij.insert(&vec_of(&r.terms)) {
            kept.push(r);
        }
    }
    kept
}

/// The subalgebra spanned by basis paths of degree divisible by `l`, regraded by `1/l`.
pub fn veronese<F: Scalar>(alg: &Algebra<F>, l: usize) -> Result<Algebra<F>> {
    if l == 0 {
        return Err(Error::NotFinite("Veronese index must be positive".into()));
    }
    let l = l as i64;
    let selected: Vec<usize> = (0..alg.dim())
        .filter(|&i| !alg.basis()[i].word.is_empty() && alg.basis()[i].degree % l == 0)
        .collect();
    let pos: HashMap<usize, usize> = selected.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let rad: Vec<RadElem> = selected
        .iter()
        .map(|&i| {
            let b = &alg.basis()[i];
            RadElem {
                src: b.src,
                tgt: b.tgt,
                degree: b.degree / l,
            }
        })
        .collect();
    let fd = FdAlgebra::new(
        alg.quiver().vertices().to_vec(),
        rad,
        alg.cutoff().map(|c| c.div_euclid(l)),
        |i, j| {
            let p = alg.mul_basis(selected[i], selected[j]);
            let mut v = vec![F::zero(); selected.len()];
            for (t, c) in p.into_iter().enumerate() {
                if !c.is_zero() {
                    v[pos[&t]] = c;
                }
            }
            v
        },
    );
    from_structure(&fd)
}
