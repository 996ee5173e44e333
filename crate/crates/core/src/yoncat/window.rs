use std::collections::HashMap;
use std::sync::Arc;

use crate::arknit::{ar_quiver, ARQuiver, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::presalg::{from_structure_with_arrows, Algebra, FdAlgebra, RadElem};
use crate::repmod::{
    end_radical, ext_space, global_dimension, hom_space, map_from_generators, proj_sum,
    projective_cover, yoneda_product_fixed, ExtSpace, HomSpace, Module, ModuleMap, Resolution,
};
use crate::scalar::Scalar;

/// A module over the opposite window algebra, i.e. a contravariant functor on
/// the window objects `M_i[-g]`.
pub type UModule<F> = Module<F>;
pub type UModuleMap<F> = ModuleMap<F>;

/// Radical part of `Ext^d(M_i, M_j)`: all of it for `d > 0` or `i ≠ j`.
enum Block<F> {
    Hom { hom: HomSpace<F>, rad: Matrix<F> },
    Ext(ExtSpace<F>),
}

impl<F: Scalar> Block<F> {
    fn reps(&self, mi: &Module<F>, mj: &Module<F>) -> Vec<ModuleMap<F>> {
        match self {
            Block::Hom { hom, rad } => rad
                .col_vecs()
                .iter()
                .map(|c| hom.combine(c, mi, mj))
                .collect(),
            Block::Ext(e) => e.basis.clone(),
        }
    }

    fn coords(&self, f: &ModuleMap<F>) -> Vec<F> {
        match self {
            Block::Hom { hom, rad } => rad
                .solve(&hom.coords(f))
                .expect("composite of radical maps is radical"),
            Block::Ext(e) => e.class_coords(f),
        }
    }
}

/// An arrow of the graded Yoneda algebra with a representative `Ω^d M_src -> M_tgt`.
#[derive(Clone, Debug)]
pub struct GradedArrow<F> {
    pub src: usize,
    pub tgt: usize,
    pub degree: usize,
    pub rep: ModuleMap<F>,
}

/// The full subcategory of the Yoneda category on the objects `M_i[-g]`,
/// `lo ≤ g ≤ hi`, presented as a basic algebra.
///
/// Vertex `(i, g)` has graded degree `g`; a class in `Ext^d(M_i, M_j)` gives
/// arrows `(i, g) -> (j, g - d)`. Representable functors `U(-, M_i[-g])` are
/// the projectives of the opposite algebra and live in degrees `≥ g`.
pub struct YonedaWindow<F> {
    lambda: Arc<Algebra<F>>,
    ar: ARQuiver<F>,
    res: Vec<Resolution<F>>,
    gamma: Arc<Algebra<F>>,
    arrows: Vec<GradedArrow<F>>,
    gd: Option<usize>,
    lo: i64,
    hi: i64,
    w: Arc<Algebra<F>>,
    wop: Arc<Algebra<F>>,
    lifts: Vec<(usize, i64)>,
    lift_of: HashMap<(usize, i64), usize>,
}

impl<F: Scalar> YonedaWindow<F> {
    pub fn build(lambda: &Arc<Algebra<F>>, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::WindowTooSmall(format!("empty window {lo}..{hi}")));
        }
        let width = (hi - lo) as usize;
        let ar = ar_quiver(lambda, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM)?;
        let mods = ar.vertices.clone();
        let r = mods.len();
        let gd = global_dimension(lambda, width);
        // Ext vanishes above gd, so no truncation is needed once gd fits.
        let exact_top = gd.filter(|&g| g <= width);
        let top = exact_top.unwrap_or(width);
        let cutoff = if exact_top.is_some() {
            None
        } else {
            Some(width as i64)
        };
        let mut res: Vec<Resolution<F>> = mods.iter().map(Resolution::new).collect();
        for rm in &mut res {
            rm.extend_to(top.max(1));
        }
        let mut blocks: HashMap<(usize, usize, usize), Block<F>> = HashMap::new();
        let mut rad = Vec::new();
        let mut reps = Vec::new();
        let mut offset: HashMap<(usize, usize, usize), usize> = HashMap::new();
        for d in 0..=top {
            for i in 0..r {
                for j in 0..r {
                    let blk = if d == 0 {
                        if i == j {
                            let (hom, rad) = end_radical(&mods[i])?;
                            Block::Hom { hom, rad }
                        } else {
                            let hom = hom_space(&mods[i], &mods[j])?;
                            let n = hom.dim();
                            Block::Hom {
                                hom,
                                rad: Matrix::identity(n),
                            }
                        }
                    } else {
                        Block::Ext(ext_space(&mut res[i], &mods[j], d)?)
                    };
                    offset.insert((i, j, d), rad.len());
                    for f in blk.reps(&mods[i], &mods[j]) {
                        rad.push(RadElem {
                            src: i,
                            tgt: j,
                            degree: d as i64,
                        });
                        reps.push(f);
                    }
                    blocks.insert((i, j, d), blk);
                }
            }
        }
        let total = rad.len();
        let names: Vec<String> = (1..=r).map(|i| i.to_string()).collect();
        let fd = FdAlgebra::new(names, rad.clone(), cutoff, |x, y| {
            let (ex, ey) = (&rad[x], &rad[y]);
            let (d1, d2) = (ex.degree as usize, ey.degree as usize);
            let mut out = vec![F::zero(); total];
            if d1 + d2 > top {
                return out;
            }
            let z = yoneda_product_fixed(&reps[y], d2, &res[ey.src], &reps[x], d1, &res[ex.src])
                .expect("composable classes");
            let key = (ex.src, ey.tgt, d1 + d2);
            let off = offset[&key];
            for (k, c) in blocks[&key].coords(&z).into_iter().enumerate() {
                out[off + k] = c;
            }
            out
        });
        let (gamma, arrow_elem) = from_structure_with_arrows(&fd)?;
        let arrows = arrow_elem
            .iter()
            .map(|&e| GradedArrow {
                src: rad[e].src,
                tgt: rad[e].tgt,
                degree: rad[e].degree as usize,
                rep: reps[e].clone(),
            })
            .collect();
        let gamma = Arc::new(gamma);
        let (w, lifts) = cover_window(&gamma, r, lo, hi)?;
        let lift_of = lifts.iter().enumerate().map(|(k, &key)| (key, k)).collect();
        let w = Arc::new(w);
        let wop = w.opposite();
        Ok(YonedaWindow {
            lambda: lambda.clone(),
            ar,
            res,
            gamma,
            arrows,
            gd,
            lo,
            hi,
            w,
            wop,
            lifts,
            lift_of,
        })
    }

    pub fn lambda(&self) -> &Arc<Algebra<F>> {
        &self.lambda
    }

    pub fn ar(&self) -> &ARQuiver<F> {
        &self.ar
    }

    pub fn indecomposables(&self) -> &[Module<F>] {
        &self.ar.vertices
    }

    pub fn r(&self) -> usize {
        self.ar.len()
    }

    pub fn bounds(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn width(&self) -> usize {
        (self.hi - self.lo) as usize
    }

    /// Global dimension of `Λ` if it is below the window width.
    pub fn global_dimension(&self) -> Option<usize> {
        self.gd
    }

    /// The graded Yoneda algebra, truncated above the window width when `Λ`
    /// has larger global dimension.
    pub fn gamma(&self) -> &Arc<Algebra<F>> {
        &self.gamma
    }

    pub fn graded_arrows(&self) -> &[GradedArrow<F>] {
        &self.arrows
    }

    pub fn resolution(&self, i: usize) -> &Resolution<F> {
        &self.res[i]
    }

    /// The window algebra; U-modules are modules over its opposite.
    pub fn window_algebra(&self) -> &Arc<Algebra<F>> {
        &self.w
    }

    pub fn op(&self) -> &Arc<Algebra<F>> {
        &self.wop
    }

    pub fn vertex(&self, i: usize, g: i64) -> Option<usize> {
        (i < self.r() && (self.lo..=self.hi).contains(&g))
            .then(|| (g - self.lo) as usize * self.r() + i)
    }

    /// `(indecomposable, degree)` of a window vertex.
    pub fn vertex_info(&self, v: usize) -> (usize, i64) {
        (v % self.r(), self.lo + (v / self.r()) as i64)
    }

    pub fn degree(&self, v: usize) -> i64 {
        self.vertex_info(v).1
    }

    /// `(graded arrow, source degree)` of a window arrow.
    pub fn arrow_lift(&self, a: usize) -> (usize, i64) {
        self.lifts[a]
    }

    /// `dim Hom_U(M_i[a], M_j[b]) = dim Ext^{b-a}(M_i, M_j)`, read off the window.
    pub fn hom_dim(&self, i: usize, a: i64, j: usize, b: i64) -> Option<usize> {
        Some(self.w.block(self.vertex(i, -a)?, self.vertex(j, -b)?).len())
    }

    /// Degrees carrying a nonzero fiber, as `(min, max)`.
    pub fn support(&self, x: &UModule<F>) -> Option<(i64, i64)> {
        let degs: Vec<i64> = (0..x.dims().len())
            .filter(|&v| x.dims()[v] > 0)
            .map(|v| self.degree(v))
            .collect();
        Some((*degs.iter().min()?, *degs.iter().max()?))
    }

    /// Degrees of the generators, with multiplicity.
    pub fn top_degrees(&self, x: &UModule<F>) -> Vec<i64> {
        let mut d: Vec<i64> = projective_cover(x)
            .verts
            .iter()
            .map(|&v| self.degree(v))
            .collect();
        d.sort_unstable();
        d
    }

    /// Fails unless every generator of `x` lies in `[lo + below, hi - above]`.
    pub fn require_margin(&self, x: &UModule<F>, below: i64, above: i64, what: &str) -> Result<()> {
        let tops = self.top_degrees(x);
        if let (Some(&a), Some(&b)) = (tops.first(), tops.last()) {
            if a < self.lo + below || b > self.hi - above {
                return Err(Error::WindowTooSmall(format!(
                    "{what}: generators in degrees {a}..{b} need margins {below} below and {above} above inside {}..{}",
                    self.lo, self.hi
                )));
            }
        }
        Ok(())
    }

    pub fn projective(&self, i: usize, g: i64) -> Result<UModule<F>> {
        let v = self
            .vertex(i, g)
            .ok_or_else(|| Error::WindowTooSmall(format!("degree {g} outside window")))?;
        Ok(Module::projective(&self.wop, v))
    }

    /// `U₀(-, A)` placed in degree `g`: `Hom_Λ(M_i, A)` at `(i, g)`, where only
    /// degree-zero maps act.
    pub fn u0_module(&self, a: &Module<F>, g: i64) -> Result<UModule<F>> {
        a.check_same(&self.ar.vertices[0])?;
        let homs: Vec<HomSpace<F>> = self
            .ar
            .vertices
            .iter()
            .map(|m| hom_space(m, a))
            .collect::<Result<_>>()?;
        let mut dims = vec![0; self.wop.n_vertices()];
        for (i, h) in homs.iter().enumerate() {
            let v = self
                .vertex(i, g)
                .ok_or_else(|| Error::WindowTooSmall(format!("degree {g} outside window")))?;
            dims[v] = h.dim();
        }
        let q = self.wop.quiver();
        let mats = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, arr)| {
                let mut m = Matrix::zeros(dims[arr.tgt], dims[arr.src]);
                let (alpha, h) = self.lifts[k];
                let ga = &self.arrows[alpha];
                if ga.degree == 0 && h == g {
                    // Opposite arrow (j, g) -> (i, g) acts by φ ↦ φ ∘ α.
                    let (i, j) = (ga.src, ga.tgt);
                    for (c, phi) in homs[j].basis.iter().enumerate() {
                        let col = homs[i].coords(&phi.after(&ga.rep));
                        for (row, x) in col.into_iter().enumerate() {
                            m[(row, c)] = x;
                        }
                    }
                }
                m
            })
            .collect();
        Module::new(self.wop.clone(), dims, mats)
    }

    /// Moves a basis element of `e_u W^op e_v` by `s` degrees, as coordinates in the shifted block.
    fn shift_element(&self, u: usize, v: usize, coeffs: &[F], s: i64) -> Result<Vec<F>> {
        let (ui, ug) = self.vertex_info(u);
        let (vi, vg) = self.vertex_info(v);
        let too_small = || Error::WindowTooSmall(format!("shift by {s} leaves the window"));
        let u2 = self.vertex(ui, ug + s).ok_or_else(too_small)?;
        let v2 = self.vertex(vi, vg + s).ok_or_else(too_small)?;
        let src_block = self.wop.block(u, v);
        let dst_block = self.wop.block(u2, v2);
        let mut out = vec![F::zero(); dst_block.len()];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let word: Vec<usize> = self.wop.basis()[src_block[k]]
                .word
                .iter()
                .map(|&a| {
                    let (alpha, h) = self.lifts[a];
                    self.lift_of
                        .get(&(alpha, h + s))
                        .copied()
                        .ok_or_else(too_small)
                })
                .collect::<Result<_>>()?;
            let nf = self.wop.nf(u2, &word);
            for (t, &b) in dst_block.iter().enumerate() {
                out[t] = out[t].clone() + c.clone() * nf[b].clone();
            }
        }
        Ok(out)
    }

    /// The degree shift `X(s)`, rebuilt from a minimal presentation of `X`.
    pub fn shift(&self, x: &UModule<F>, s: i64) -> Result<UModule<F>> {
        if s == 0 || x.is_zero() {
            return Ok(x.clone());
        }
        self.require_margin(x, 0, 2, "shift")?;
        let c0 = projective_cover(x);
        let (k, inc) = c0.pi.kernel(&c0.proj);
        let c1 = projective_cover(&k);
        let d = inc.after(&c1.pi);
        let too_small = || Error::WindowTooSmall(format!("shift by {s} leaves the window"));
        let shift_vert = |v: usize| {
            let (i, g) = self.vertex_info(v);
            self.vertex(i, g + s).ok_or_else(too_small)
        };
        let v0: Vec<usize> = c0
            .verts
            .iter()
            .map(|&v| shift_vert(v))
            .collect::<Result<_>>()?;
        let v1: Vec<usize> = c1
            .verts
            .iter()
            .map(|&v| shift_vert(v))
            .collect::<Result<_>>()?;
        let images = crate::repmod::generator_images(&self.wop, &c1.verts, &d);
        let mut shifted = Vec::with_capacity(images.len());
        for (img, &tv) in images.iter().zip(&c1.verts) {
            let mut out = Vec::new();
            let mut pos = 0;
            for &u in &c0.verts {
                let n = self.wop.block(u, tv).len();
                out.extend(self.shift_element(u, tv, &img[pos..pos + n], s)?);
                pos += n;
            }
            shifted.push(out);
        }
        let p0 = proj_sum(&self.wop, &v0);
        let f = map_from_generators(&self.wop, &v1, &p0, &shifted);
        Ok(f.cokernel(&p0).0)
    }

    /// Shifts `x` so that its lowest generator sits in degree `g`.
    pub fn normalize(&self, x: &UModule<F>, g: i64) -> Result<UModule<F>> {
        match self.top_degrees(x).first() {
            Some(&m) => self.shift(x, g - m),
            None => Ok(x.clone()),
        }
    }
}

/// Covering of the graded algebra restricted to degrees `lo..=hi`.
///
/// Radical basis: every nontrivial basis path `b: i -> j` of `gamma`, placed at
/// source degree `g` with `g - deg b ≥ lo`. Returns the algebra and, for each
/// arrow, the lifted `(gamma arrow, source degree)`.
fn cover_window<F: Scalar>(
    gamma: &Algebra<F>,
    r: usize,
    lo: i64,
    hi: i64,
) -> Result<(Algebra<F>, Vec<(usize, i64)>)> {
    let idx = |i: usize, g: i64| (g - lo) as usize * r + i;
    let names: Vec<String> = (lo..=hi)
        .flat_map(|g| (1..=r).map(move |i| format!("{i}@{g}")))
        .collect();
    let basis = gamma.basis();
    let mut rad = Vec::new();
    let mut place: Vec<(usize, i64)> = Vec::new();
    let mut index: HashMap<(usize, i64), usize> = HashMap::new();
    for (b, p) in basis.iter().enumerate().skip(r) {
        for g in lo..=hi {
            if g - p.degree < lo {
                continue;
            }
            index.insert((b, g), rad.len());
            rad.push(RadElem {
                src: idx(p.src, g),
                tgt: idx(p.tgt, g - p.degree),
                degree: p.degree,
            });
            place.push((b, g));
        }
    }
    let total = rad.len();
    let fd = FdAlgebra::new(names, rad, None, |x, y| {
        let (bx, g) = place[x];
        let (by, _) = place[y];
        let mut out = vec![F::zero(); total];
        for (t, c) in gamma.mul_basis(bx, by).into_iter().enumerate() {
            if !c.is_zero() {
                out[index[&(t, g)]] = c;
            }
        }
        out
    });
    let (w, arrow_elem) = from_structure_with_arrows(&fd)?;
    let lifts = arrow_elem
        .iter()
        .map(|&e| {
            let (b, g) = place[e];
            (basis[b].word[0], g)
        })
        .collect();
    Ok((w, lifts))
}
