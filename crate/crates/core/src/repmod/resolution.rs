use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, QuotientMap};
use crate::presalg::Algebra;
use crate::repmod::hom::{hom_space, HomSpace};
use crate::repmod::module::{Module, ModuleMap};
use crate::scalar::Scalar;

/// `⊕ P(v)` over the listed vertices, in order.
pub fn proj_sum<F: Scalar>(alg: &Arc<Algebra<F>>, verts: &[usize]) -> Module<F> {
    let parts: Vec<Module<F>> = verts.iter().map(|&v| Module::projective(alg, v)).collect();
    Module::direct_sum(alg, &parts).0
}

/// Position of the generator of summand `i` inside the fiber of `⊕ P(verts)` at `verts[i]`.
pub fn generator_index<F: Scalar>(alg: &Algebra<F>, verts: &[usize], i: usize) -> usize {
    let v = verts[i];
    verts[..i]
        .iter()
        .map(|&u| alg.block(u, v).len())
        .sum::<usize>()
}

/// The map `⊕ P(verts) -> M` sending generator `i` to `images[i] ∈ M_{verts[i]}`.
pub fn map_from_generators<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    verts: &[usize],
    target: &Module<F>,
    images: &[Vec<F>],
) -> ModuleMap<F> {
    let n = alg.n_vertices();
    let comps = (0..n)
        .map(|w| {
            let cols_total: usize = verts.iter().map(|&v| alg.block(v, w).len()).sum();
            let mut m = Matrix::zeros(target.dims()[w], cols_total);
            let mut c = 0;
            for (i, &v) in verts.iter().enumerate() {
                for &b in alg.block(v, w) {
                    let img = target.act_basis(b).mul_vec(&images[i]);
                    for (r, x) in img.into_iter().enumerate() {
                        m[(r, c)] = x;
                    }
                    c += 1;
                }
            }
            m
        })
        .collect();
    ModuleMap { comps }
}

/// Images of the generators of `⊕ P(verts)` under `f`.
pub fn generator_images<F: Scalar>(
    alg: &Algebra<F>,
    verts: &[usize],
    f: &ModuleMap<F>,
) -> Vec<Vec<F>> {
    (0..verts.len())
        .map(|i| f.comps[verts[i]].col(generator_index(alg, verts, i)))
        .collect()
}

/// A projective cover `π: ⊕ P(verts) -> M`.
#[derive(Clone, Debug)]
pub struct Cover<F> {
    pub verts: Vec<usize>,
    pub proj: Module<F>,
    pub pi: ModuleMap<F>,
}

/// Minimal projective cover, generated by lifts of a basis of the top.
pub fn projective_cover<F: Scalar>(m: &Module<F>) -> Cover<F> {
    let alg = m.algebra().clone();
    let rad = m.radical_spans();
    let mut verts = Vec::new();
    let mut images = Vec::new();
    for v in 0..m.dims().len() {
        let q = QuotientMap::new(m.dims()[v], &rad[v].col_vecs());
        for k in 0..q.dim() {
            let mut e = vec![F::zero(); q.dim()];
            e[k] = F::one();
            verts.push(v);
            images.push(q.lift(&e));
        }
    }
    let proj = proj_sum(&alg, &verts);
    let pi = map_from_generators(&alg, &verts, m, &images);
    Cover { verts, proj, pi }
}

/// A minimal projective resolution, truncated at a chosen length.
///
/// `syz[i]` is the i-th syzygy (`syz[0] = M`), `covers[i]` covers it and
/// `iota[i]` embeds `syz[i+1]` into `covers[i].proj`.
#[derive(Clone, Debug)]
pub struct Resolution<F> {
    pub syz: Vec<Module<F>>,
    pub covers: Vec<Cover<F>>,
    pub iota: Vec<ModuleMap<F>>,
}

impl<F: Scalar> Resolution<F> {
    pub fn new(m: &Module<F>) -> Self {
        Resolution {
            syz: vec![m.clone()],
            covers: Vec::new(),
            iota: Vec::new(),
        }
    }

    /// Ensures covers `P_0 .. P_n` and syzygies up to `Ω^{n+1}` exist.
    pub fn extend_to(&mut self, n: usize) {
        while self.covers.len() <= n {
            let top = self.syz.last().unwrap();
            let cover = projective_cover(top);
            let (k, inc) = cover.pi.kernel(&cover.proj);
            self.covers.push(cover);
            self.iota.push(inc);
            self.syz.push(k);
        }
    }

    pub fn syzygy(&mut self, n: usize) -> &Module<F> {
        if n > 0 {
            self.extend_to(n - 1);
        }
        &self.syz[n]
    }

    /// Differential `P_i -> P_{i-1}` for `i ≥ 1`.
    pub fn differential(&self, i: usize) -> ModuleMap<F> {
        self.iota[i - 1].after(&self.covers[i].pi)
    }

    /// Index of the last nonzero term, or `None` if it has not terminated yet.
    pub fn length(&self) -> Option<usize> {
        self.syz
            .iter()
            .position(Module::is_zero)
            .map(|i| i.saturating_sub(1))
    }
}

pub fn resolve<F: Scalar>(m: &Module<F>, n: usize) -> Resolution<F> {
    let mut r = Resolution::new(m);
    r.extend_to(n);
    r
}

/// `P_0, ..., P_n` and the differentials `P_i -> P_{i-1}` of a minimal resolution.
pub fn minimal_projective_resolution<F: Scalar>(
    m: &Module<F>,
    n: usize,
) -> (Vec<Module<F>>, Vec<ModuleMap<F>>) {
    let r = resolve(m, n);
    let mut mods = Vec::new();
    let mut maps = Vec::new();
    for i in 0..=n {
        if r.covers[i].proj.is_zero() {
            break;
        }
        mods.push(r.covers[i].proj.clone());
        if i > 0 {
            maps.push(r.differential(i));
        }
    }
    (mods, maps)
}

/// Lifts `f: X -> Y` along covers to `P_X -> P_Y` with `π_Y ψ = f π_X`.
pub fn lift_to_covers<F: Scalar>(
    f: &ModuleMap<F>,
    cx: &Cover<F>,
    cy: &Cover<F>,
    y: &Module<F>,
) -> ModuleMap<F> {
    let alg = y.algebra();
    let gens = generator_images(alg, &cx.verts, &cx.pi);
    let images: Vec<Vec<F>> = cx
        .verts
        .iter()
        .zip(gens)
        .map(|(&v, g)| {
            let target = f.comps[v].mul_vec(&g);
            cy.pi.comps[v].solve(&target).expect("cover is surjective")
        })
        .collect();
    map_from_generators(alg, &cx.verts, &cy.proj, &images)
}

/// Restricts `ψ: P -> P'` to kernels `K -> K'` given embeddings.
pub fn restrict_to_kernels<F: Scalar>(
    psi: &ModuleMap<F>,
    iota: &ModuleMap<F>,
    iota2: &ModuleMap<F>,
) -> ModuleMap<F> {
    ModuleMap {
        comps: psi
            .comps
            .iter()
            .zip(iota.comps.iter().zip(&iota2.comps))
            .map(|(p, (i, i2))| i2.solve_matrix(&p.mul(i)).expect("map preserves kernels"))
            .collect(),
    }
}

/// `Ω^k f: Ω^{a+k} X -> Ω^{b+k} Y` for `f: Ω^a X -> Ω^b Y`, using fixed resolutions.
pub fn syzygy_map<F: Scalar>(
    f: &ModuleMap<F>,
    rx: &mut Resolution<F>,
    a: usize,
    ry: &mut Resolution<F>,
    b: usize,
    k: usize,
) -> ModuleMap<F> {
    if k > 0 {
        rx.extend_to(a + k - 1);
        ry.extend_to(b + k - 1);
    }
    chain_lift(f, rx, a, ry, b, k).pop().unwrap().1
}

/// The lifts `P_{a+s} X -> P_{b+s} Y` for `s < k` of `f: Ω^a X -> Ω^b Y`, each
/// paired with the induced map `Ω^{a+s} X -> Ω^{b+s} Y` it covers. The last entry is
/// `(zero placeholder, Ω^k f)`.
///
/// Both resolutions must already reach the needed length.
pub fn chain_lift<F: Scalar>(
    f: &ModuleMap<F>,
    rx: &Resolution<F>,
    a: usize,
    ry: &Resolution<F>,
    b: usize,
    k: usize,
) -> Vec<(ModuleMap<F>, ModuleMap<F>)> {
    let mut out = Vec::with_capacity(k + 1);
    let mut g = f.clone();
    for s in 0..k {
        let psi = lift_to_covers(&g, &rx.covers[a + s], &ry.covers[b + s], &ry.syz[b + s]);
        let next = restrict_to_kernels(&psi, &rx.iota[a + s], &ry.iota[b + s]);
        out.push((psi, g));
        g = next;
    }
    out.push((ModuleMap { comps: Vec::new() }, g));
    out
}

/// `Ext^n(M, N)` as `Hom(Ω^n M, N)` modulo maps extending along `Ω^n M -> P_{n-1}`.
#[derive(Clone, Debug)]
pub struct ExtSpace<F> {
    pub degree: usize,
    pub hom: HomSpace<F>,
    quot: QuotientMap<F>,
    /// Representatives `Ω^n M -> N` of a basis.
    pub basis: Vec<ModuleMap<F>>,
}

impl<F: Scalar> ExtSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the class of `f: Ω^n M -> N`.
    pub fn class_coords(&self, f: &ModuleMap<F>) -> Vec<F> {
        self.quot.project(&self.hom.coords(f))
    }

    pub fn is_zero_class(&self, f: &ModuleMap<F>) -> bool {
        self.class_coords(f).iter().all(|c| c.is_zero())
    }
}

pub fn ext_space<F: Scalar>(
    rm: &mut Resolution<F>,
    n_mod: &Module<F>,
    n: usize,
) -> Result<ExtSpace<F>> {
    let om = rm.syzygy(n).clone();
    om.check_same(n_mod)?;
    let hom = hom_space(&om, n_mod)?;
    let alg = n_mod.algebra().clone();
    let mut spanning = Vec::new();
    if n > 0 {
        let cover = &rm.covers[n - 1];
        let iota = &rm.iota[n - 1];
        for (i, &v) in cover.verts.iter().enumerate() {
            for k in 0..n_mod.dims()[v] {
                let mut images: Vec<Vec<F>> = cover
                    .verts
                    .iter()
                    .map(|&u| vec![F::zero(); n_mod.dims()[u]])
                    .collect();
                images[i][k] = F::one();
                let g = map_from_generators(&alg, &cover.verts, n_mod, &images);
                spanning.push(hom.coords(&g.after(iota)));
            }
        }
    }
    let quot = QuotientMap::new(hom.dim(), &spanning);
    let basis = (0..quot.dim())
        .map(|k| {
            let mut e = vec![F::zero(); quot.dim()];
            e[k] = F::one();
            hom.combine(&quot.lift(&e), &om, n_mod)
        })
        .collect();
    Ok(ExtSpace {
        degree: n,
        hom,
        quot,
        basis,
    })
}

/// Dimension and class representatives of `Ext^n(M, N)`.
pub fn ext<F: Scalar>(
    m: &Module<F>,
    n_mod: &Module<F>,
    n: usize,
) -> Result<(usize, Vec<ModuleMap<F>>)> {
    let mut r = Resolution::new(m);
    let e = ext_space(&mut r, n_mod, n)?;
    Ok((e.dim(), e.basis))
}

/// Yoneda product of `f ∈ Ext^i(B, C)` and `g ∈ Ext^j(A, B)`, a map `Ω^{i+j} A -> C`.
///
/// `g: Ω^j A -> B` is pushed through the fixed resolutions to
/// `Ω^{i+j} A -> Ω^i B` and composed with `f`.
pub fn yoneda_product<F: Scalar>(
    f: &ModuleMap<F>,
    i: usize,
    rb: &mut Resolution<F>,
    g: &ModuleMap<F>,
    j: usize,
    ra: &mut Resolution<F>,
) -> Result<ModuleMap<F>> {
    ra.syzygy(i + j);
    rb.syzygy(i);
    yoneda_product_fixed(f, i, rb, g, j, ra)
}

/// [`yoneda_product`] over resolutions that already reach `Ω^{i+j} A` and `Ω^i B`.
pub fn yoneda_product_fixed<F: Scalar>(
    f: &ModuleMap<F>,
    i: usize,
    rb: &Resolution<F>,
    g: &ModuleMap<F>,
    j: usize,
    ra: &Resolution<F>,
) -> Result<ModuleMap<F>> {
    if g.comps
        .iter()
        .zip(rb.syz[0].dims())
        .any(|(c, &d)| c.rows() != d)
        || f.comps
            .iter()
            .zip(rb.syz[i].dims())
            .any(|(c, &d)| c.cols() != d)
    {
        return Err(Error::DegreeMismatch("classes do not compose".into()));
    }
    let lifted = chain_lift(g, ra, j, rb, 0, i).pop().unwrap().1;
    Ok(f.after(&lifted))
}

/// Maximum projective dimension of the simples, if all are at most `bound`.
pub fn global_dimension<F: Scalar>(alg: &Arc<Algebra<F>>, bound: usize) -> Option<usize> {
    let mut gd = 0;
    for v in 0..alg.n_vertices() {
        let mut r = Resolution::new(&Module::simple(alg, v));
        r.extend_to(bound);
        match r.length() {
            Some(l) => gd = gd.max(l),
            None => return None,
        }
    }
    Some(gd)
}

pub fn is_projective<F: Scalar>(m: &Module<F>) -> bool {
    projective_cover(m).proj.dim() == m.dim()
}

pub fn is_injective<F: Scalar>(m: &Module<F>) -> bool {
    is_projective(&m.dual())
}
