//! The projective resolution of `U(-, L)` for a bounded complex `L`.
//!
//! `L` is replaced by a complex of injectives `I`, brutally truncated just
//! above the window. Fibers of `U(-, L)` are `H^g Hom_Λ(M_i, I)`, computed
//! with the unsigned differential `φ ↦ d∘φ`; a class `Ω^d M_i -> M_j` acts by
//! dimension shifting through the injective terms.

use std::collections::HashMap;

use crate::derivedx::{truncated_replacement, BoundedComplex};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, QuotientMap};
use crate::repmod::{
    decompose_with_maps, hom_space, iso_witness, map_from_generators, proj_sum, HomSpace, Module,
    ModuleMap, Resolution,
};
use crate::scalar::Scalar;
use crate::yoncat::window::{UModule, UModuleMap, YonedaWindow};

/// `0 -> U(-, BL) --d--> U(-, ZL) --eps--> U(-, L) -> 0` inside the window.
#[derive(Clone, Debug)]
pub struct StdResolution<F> {
    /// `(indecomposable, degree)` of the summands `M_j[-k]` of `ZL` and `BL`.
    pub zl_objects: Vec<(usize, i64)>,
    pub bl_objects: Vec<(usize, i64)>,
    pub zl: UModule<F>,
    pub bl: UModule<F>,
    pub target: UModule<F>,
    pub d: UModuleMap<F>,
    pub eps: UModuleMap<F>,
}

impl<F: Scalar> StdResolution<F> {
    /// `d` injective, `eps` surjective, and `im d = ker eps` by dimension count.
    pub fn is_exact(&self) -> bool {
        let dims_ok = (0..self.zl.dims().len())
            .all(|v| self.zl.dims()[v] == self.bl.dims()[v] + self.target.dims()[v]);
        dims_ok
            && self.d.is_injective()
            && self.eps.is_surjective()
            && self.eps.after(&self.d).is_zero()
            && self.d.is_homomorphism(&self.bl, &self.zl)
            && self.eps.is_homomorphism(&self.zl, &self.target)
    }

    /// Projective dimension at most one, with zero meaning `BL` vanishes.
    pub fn projective_dimension(&self) -> usize {
        usize::from(!self.bl.is_zero())
    }
}

/// `Hom_Λ(M_i, I^•)` in the window degrees, with its cohomology.
struct HomComplex<F> {
    homs: HashMap<i64, HomSpace<F>>,
    cycles: HashMap<i64, Matrix<F>>,
    quot: HashMap<i64, QuotientMap<F>>,
}

impl<F: Scalar> HomComplex<F> {
    fn new(m: &Module<F>, inj: &BoundedComplex<F>, lo: i64, hi: i64) -> Result<Self> {
        let mut homs = HashMap::new();
        for g in lo - 1..=hi + 1 {
            homs.insert(g, hom_space(m, &inj.term(g))?);
        }
        let delta = |g: i64| -> Matrix<F> {
            let cols: Vec<Vec<F>> = homs[&g]
                .basis
                .iter()
                .map(|f| homs[&(g + 1)].coords(&inj.diff(g).after(f)))
                .collect();
            Matrix::from_cols(homs[&(g + 1)].dim(), &cols)
        };
        let mut cycles = HashMap::new();
        let mut quot = HashMap::new();
        for g in lo..=hi {
            let z = delta(g).kernel_basis();
            let bounds: Vec<Vec<F>> = delta(g - 1)
                .col_vecs()
                .iter()
                .map(|b| z.solve(b).expect("boundaries are cycles"))
                .collect();
            quot.insert(g, QuotientMap::new(z.cols(), &bounds));
            cycles.insert(g, z);
        }
        Ok(HomComplex { homs, cycles, quot })
    }

    fn dim(&self, g: i64) -> usize {
        self.quot[&g].dim()
    }

    fn class(&self, g: i64, f: &ModuleMap<F>) -> Vec<F> {
        let z = self.cycles[&g]
            .solve(&self.homs[&g].coords(f))
            .expect("a cocycle");
        self.quot[&g].project(&z)
    }

    fn cocycle(&self, g: i64, e: &[F], m: &Module<F>, target: &Module<F>) -> ModuleMap<F> {
        let c = self.cycles[&g].mul_vec(&self.quot[&g].lift(e));
        self.homs[&g].combine(&c, m, target)
    }
}

/// `θ: B -> J` with `θ ι = ψ`, for `ι: A -> B` mono and `J` injective.
fn extend<F: Scalar>(
    psi: &ModuleMap<F>,
    iota: &ModuleMap<F>,
    b: &Module<F>,
    j: &Module<F>,
) -> Result<ModuleMap<F>> {
    let hom = hom_space(b, j)?;
    let target = psi.flatten();
    let cols: Vec<Vec<F>> = hom.basis.iter().map(|h| h.after(iota).flatten()).collect();
    let c = Matrix::from_cols(target.len(), &cols)
        .solve(&target)
        .ok_or_else(|| Error::InvalidModule("target term is not injective".into()))?;
    Ok(hom.combine(&c, b, j))
}

/// Carries a cocycle `Ω^d M -> Z^m I` to `M -> Z^{m+d} I` by `d` steps of
/// dimension shifting along the resolution of `M`.
fn push<F: Scalar>(
    psi: ModuleMap<F>,
    d: usize,
    m: i64,
    res: &Resolution<F>,
    inj: &BoundedComplex<F>,
) -> Result<ModuleMap<F>> {
    let mut psi = psi;
    let mut m = m;
    for t in (1..=d).rev() {
        let cover = &res.covers[t - 1];
        let theta = extend(&psi, &res.iota[t - 1], &cover.proj, &inj.term(m))?;
        let dt = inj.diff(m).after(&theta);
        // `dt` kills Ω^t, so it factors through the cover `P_{t-1} -> Ω^{t-1}`.
        let comps = dt
            .comps
            .iter()
            .zip(&cover.pi.comps)
            .map(|(a, p)| {
                a.mul(
                    &p.solve_matrix(&Matrix::identity(p.rows()))
                        .expect("cover is surjective"),
                )
            })
            .collect();
        psi = ModuleMap { comps };
        m += 1;
    }
    Ok(psi)
}

impl<F: Scalar> YonedaWindow<F> {
    /// A complex of injectives quasi-isomorphic to `l` in degrees up to the
    /// window top, truncated one degree above it.
    pub fn injective_model(&self, l: &BoundedComplex<F>) -> Result<BoundedComplex<F>> {
        if !l.algebra().same_as(self.lambda()) {
            return Err(Error::AlgebraMismatch);
        }
        let (lo, hi) = self.bounds();
        if l.range().0 < lo {
            return Err(Error::WindowTooSmall(format!(
                "complex starts in degree {} below the window {lo}..{hi}",
                l.range().0
            )));
        }
        let q = truncated_replacement(&l.dual(), -(hi + 1));
        Ok(q.to_complex().dual())
    }

    /// `U(-, L)` for a complex of injectives `inj`.
    pub fn u_module_of_injectives(&self, inj: &BoundedComplex<F>) -> Result<UModule<F>> {
        let (lo, hi) = self.bounds();
        let cx: Vec<HomComplex<F>> = self
            .indecomposables()
            .iter()
            .map(|m| HomComplex::new(m, inj, lo, hi))
            .collect::<Result<_>>()?;
        let wop = self.op();
        let dims: Vec<usize> = (0..wop.n_vertices())
            .map(|v| {
                let (i, g) = self.vertex_info(v);
                cx[i].dim(g)
            })
            .collect();
        let mut mats = Vec::new();
        for (k, arr) in wop.quiver().arrows().iter().enumerate() {
            let ga = &self.graded_arrows()[self.arrow_lift(k).0];
            let (j, g1) = self.vertex_info(arr.src);
            let (i, g2) = self.vertex_info(arr.tgt);
            debug_assert_eq!((j, i, g2 - g1), (ga.tgt, ga.src, ga.degree as i64));
            let mj = &self.indecomposables()[j];
            let mut mat = Matrix::zeros(dims[arr.tgt], dims[arr.src]);
            for c in 0..dims[arr.src] {
                let mut e = vec![F::zero(); dims[arr.src]];
                e[c] = F::one();
                let phi = cx[j].cocycle(g1, &e, mj, &inj.term(g1));
                let pushed = push(phi.after(&ga.rep), ga.degree, g1, self.resolution(i), inj)?;
                for (r, x) in cx[i].class(g2, &pushed).into_iter().enumerate() {
                    mat[(r, c)] = x;
                }
            }
            mats.push(mat);
        }
        Module::new(wop.clone(), dims, mats)
    }

    /// `U(-, L)` for a bounded complex of `Λ`-modules.
    pub fn u_module_of_complex(&self, l: &BoundedComplex<F>) -> Result<UModule<F>> {
        self.u_module_of_injectives(&self.injective_model(l)?)
    }

    /// Indecomposable summands of `n` as indices of `Λ`-indecomposables, with
    /// maps `M_j -> n`.
    fn summands_of(&self, n: &Module<F>) -> Result<Vec<(usize, ModuleMap<F>)>> {
        let mut out = Vec::new();
        for s in decompose_with_maps(n)? {
            let mut found = None;
            for (j, m) in self.indecomposables().iter().enumerate() {
                if let Some(w) = iso_witness(m, &s.module)? {
                    found = Some((j, s.incl.after(&w)));
                    break;
                }
            }
            out.push(found.ok_or_else(|| {
                Error::InvalidModule("summand is not among the indecomposables".into())
            })?);
        }
        Ok(out)
    }

    /// The resolution `0 -> U(-, BL) -> U(-, ZL) -> U(-, L) -> 0` with
    /// `ZL = ⊕ Z^k I [-k]` and `BL = ⊕ B^k I [-k]` over window degrees `k`.
    ///
    /// `eps` sends the generator of `M_j[-k] ⊂ ZL` to the class of the
    /// inclusion `M_j -> Z^k ⊂ I^k`; `d` embeds `U(-, BL)` as its kernel.
    pub fn std_resolution_of_complex(&self, l: &BoundedComplex<F>) -> Result<StdResolution<F>> {
        let inj = self.injective_model(l)?;
        let target = self.u_module_of_injectives(&inj)?;
        let (lo, hi) = self.bounds();
        let cx: Vec<HomComplex<F>> = self
            .indecomposables()
            .iter()
            .map(|m| HomComplex::new(m, &inj, lo, hi))
            .collect::<Result<_>>()?;
        let mut zl_objects = Vec::new();
        let mut bl_objects = Vec::new();
        let mut zverts = Vec::new();
        let mut images = Vec::new();
        for k in lo..=hi {
            let ik = inj.term(k);
            let (z, zinc) = inj.diff(k).kernel(&ik);
            for (j, s) in self.summands_of(&z)? {
                zl_objects.push((j, k));
                zverts.push(self.vertex(j, k).expect("degree inside the window"));
                images.push(cx[j].class(k, &zinc.after(&s)));
            }
            let (b, _) = inj.diff(k - 1).image(&ik);
            for (j, _) in self.summands_of(&b)? {
                bl_objects.push((j, k));
            }
        }
        let wop = self.op();
        let bverts: Vec<usize> = bl_objects
            .iter()
            .map(|&(j, k)| self.vertex(j, k).expect("degree inside the window"))
            .collect();
        let zl = proj_sum(wop, &zverts);
        let bl = proj_sum(wop, &bverts);
        let eps = map_from_generators(wop, &zverts, &target, &images);
        let (ker, kinc) = eps.kernel(&zl);
        let d = match iso_witness(&bl, &ker)? {
            Some(w) => kinc.after(&w),
            None => ModuleMap::zero(&bl, &zl),
        };
        Ok(StdResolution {
            zl_objects,
            bl_objects,
            zl,
            bl,
            target,
            d,
            eps,
        })
    }
}
