//! The tilting subcategory `U₀`, its endomorphism algebra and the induced t-structure.

use serde::Serialize;

use crate::arknit::{
    enumerate_indecomposables, quotient_endomorphism_algebra, stable_auslander_algebra,
    StableQuotientSpec, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM,
};
use crate::error::{Error, Result};
use crate::exactla::QuotientMap;
use crate::presalg::Algebra;
use crate::repmod::{
    decompose, hom_basis, hom_space, is_projective, projective_cover, stable_hom, Module,
};
use crate::scalar::Scalar;
use crate::yoncat::cm::CmEnumeration;
use crate::yoncat::window::{UModule, YonedaWindow};

/// Shifts tried when looking for heart members and t-structure pairs.
const T_SHIFTS: std::ops::RangeInclusive<i64> = -2..=2;

#[derive(Clone, Debug, Default, Serialize)]
pub struct TiltingReport {
    pub ext_bound: usize,
    /// `(A, B, i)` with a nonzero stable map `U₀(-,A) -> Ω^{-i} U₀(-,B)`, `i ≠ 0`.
    pub ext_violations: Vec<(usize, usize, i64)>,
    /// `(A, B, s)` with a nonzero stable map `U₀(-,A) -> U₀(-,B)(s)`, `s = ±1`.
    pub shift_violations: Vec<(usize, usize, i64)>,
    /// Enumerated classes receiving no nonzero stable map from any shifted `Ω^n U₀`.
    pub unreached: Vec<usize>,
}

impl TiltingReport {
    pub fn passed(&self) -> bool {
        self.ext_violations.is_empty()
            && self.shift_violations.is_empty()
            && self.unreached.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TMembership {
    pub in_t_le_0: bool,
    pub in_t_ge_0: bool,
}

impl TMembership {
    pub fn in_heart(&self) -> bool {
        self.in_t_le_0 && self.in_t_ge_0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityReport {
    pub pairs: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HeartReport {
    /// `(class, shift)` pairs whose shift lies in the heart.
    pub heart_count: usize,
    /// Indecomposables of `mod` of the projectively stable Auslander algebra.
    pub expected_count: usize,
    /// `(A, B, stable dim over U, dim modulo injectives over Λ)` where these differ.
    pub hom_mismatches: Vec<(usize, usize, usize, usize)>,
}

impl HeartReport {
    pub fn passed(&self) -> bool {
        self.heart_count == self.expected_count && self.hom_mismatches.is_empty()
    }
}

/// `dim Hom_Λ(a, b)` modulo maps factoring through the listed injectives.
fn hom_mod_injectives<F: Scalar>(
    a: &Module<F>,
    b: &Module<F>,
    injectives: &[Module<F>],
) -> Result<usize> {
    let hom = hom_space(a, b)?;
    let mut spans = Vec::new();
    for i in injectives {
        let into = hom_basis(a, i)?;
        let out = hom_basis(i, b)?;
        for f in &into {
            for g in &out {
                spans.push(hom.coords(&g.after(f)));
            }
        }
    }
    Ok(QuotientMap::new(hom.dim(), &spans).dim())
}

impl<F: Scalar> YonedaWindow<F> {
    /// Indices of the non-injective indecomposables of `Λ`.
    pub fn non_injective(&self) -> Vec<usize> {
        (0..self.r()).filter(|&i| !self.ar().injective[i]).collect()
    }

    /// `U₀(-, A)` at degree `g` for every non-injective indecomposable `A`.
    pub fn tilting_objects(&self, g: i64) -> Result<Vec<UModule<F>>> {
        self.non_injective()
            .into_iter()
            .map(|i| self.u0_module(&self.indecomposables()[i], g))
            .collect()
    }

    fn omega_power(&self, x: &UModule<F>, n: i64) -> Result<UModule<F>> {
        let mut o = x.clone();
        for _ in 0..n.unsigned_abs() {
            o = if n > 0 {
                self.strip_projectives(&self.syzygy(&o)?)?
            } else {
                self.cosyzygy(&o)?
            };
        }
        Ok(o)
    }

    /// Vanishing of stable maps between the tilting objects and their
    /// suspensions and shifts, and generation of the enumerated classes.
    pub fn tilting_check(&self, ext_bound: usize, e: &CmEnumeration<F>) -> Result<TiltingReport> {
        let c = e.centre;
        let t = self.tilting_objects(c)?;
        let idx = self.non_injective();
        let mut rep = TiltingReport {
            ext_bound,
            ..Default::default()
        };
        for (b, tb) in t.iter().enumerate() {
            for i in (1..=ext_bound as i64).flat_map(|i| [i, -i]) {
                // Ω^{-i} is the i-th suspension.
                let target = self.omega_power(tb, -i)?;
                for (a, ta) in t.iter().enumerate() {
                    if stable_hom(ta, &target)?.dim() != 0 {
                        rep.ext_violations.push((idx[a], idx[b], i));
                    }
                }
            }
            for s in [-1, 1] {
                let target = self.shift(tb, s)?;
                for (a, ta) in t.iter().enumerate() {
                    if stable_hom(ta, &target)?.dim() != 0 {
                        rep.shift_violations.push((idx[a], idx[b], s));
                    }
                }
            }
        }
        let mut gens = Vec::new();
        for ta in &t {
            for n in 0..3 {
                let o = self.omega_power(ta, n)?;
                for s in T_SHIFTS {
                    if let Ok(g) = self.shift(&o, s) {
                        gens.push(g);
                    }
                }
            }
        }
        for (k, x) in e.classes.iter().enumerate() {
            let mut hit = false;
            for g in &gens {
                if stable_hom(g, x)?.dim() != 0 {
                    hit = true;
                    break;
                }
            }
            if !hit {
                rep.unreached.push(k);
            }
        }
        Ok(rep)
    }

    /// Stable endomorphism algebra of `⊕ U₀(-, A)` over the non-injective `A`.
    pub fn end_of_tilting(&self) -> Result<Algebra<F>> {
        let c = self.bounds().0 + self.width() as i64 / 2;
        let t = self.tilting_objects(c)?;
        let mut verts: Vec<usize> = t.iter().flat_map(|x| projective_cover(x).verts).collect();
        verts.sort_unstable();
        verts.dedup();
        let through: Vec<UModule<F>> = verts
            .iter()
            .map(|&v| Module::projective(self.op(), v))
            .collect();
        let names: Vec<String> = self
            .non_injective()
            .iter()
            .map(|i| (i + 1).to_string())
            .collect();
        quotient_endomorphism_algebra(&t, &through, &names)
    }

    /// Membership of a CM module without projective summands in the aisle
    /// `t^{≤0}` and coaisle `t^{≥0}`.
    ///
    /// The defining triangle `A → B → C` sits in the degrees of the tops of
    /// `P0` for `A`, and of `P1` and `P2` lowered by one for `C` and `B`.
    pub fn t_membership(&self, x: &UModule<F>) -> Result<TMembership> {
        if decompose(x)?.iter().any(is_projective) {
            return Err(Error::NonRadicalPresentation(
                "module has a projective summand".into(),
            ));
        }
        self.require_margin(x, 0, 3, "t_membership")?;
        let mut degs = self.top_degrees(x);
        let o1 = self.syzygy(x)?;
        let o2 = self.syzygy(&o1)?;
        degs.extend(
            self.top_degrees(&o1)
                .into_iter()
                .chain(self.top_degrees(&o2))
                .map(|d| d - 1),
        );
        Ok(TMembership {
            in_t_le_0: degs.iter().all(|&d| d <= 0),
            in_t_ge_0: degs.iter().all(|&d| d >= 0),
        })
    }

    /// `Y ∈ t^{≥1}` iff its suspension lies in `t^{≥0}`.
    pub fn in_t_ge_1(&self, y: &UModule<F>) -> Result<bool> {
        Ok(self.t_membership(&self.cosyzygy(y)?)?.in_t_ge_0)
    }

    /// Shifts of the enumerated classes, as `(class, shift, module)`.
    fn shifted_classes(&self, e: &CmEnumeration<F>) -> Result<Vec<(usize, i64, UModule<F>)>> {
        let mut out = Vec::new();
        for (k, x) in e.classes.iter().enumerate() {
            for s in T_SHIFTS {
                out.push((k, s, self.shift(x, s - e.centre)?));
            }
        }
        Ok(out)
    }

    /// No nonzero stable maps from `t^{≤0}` to `t^{≥1}` among shifted classes.
    pub fn orthogonality_check(&self, e: &CmEnumeration<F>) -> Result<OrthogonalityReport> {
        let all = self.shifted_classes(e)?;
        let mut le0 = Vec::new();
        let mut ge1 = Vec::new();
        for (_, _, x) in &all {
            if self.t_membership(x)?.in_t_le_0 {
                le0.push(x);
            }
            if self.in_t_ge_1(x)? {
                ge1.push(x);
            }
        }
        let mut rep = OrthogonalityReport {
            pairs: 0,
            violations: 0,
        };
        for x in &le0 {
            for y in &ge1 {
                rep.pairs += 1;
                if stable_hom(x, y)?.dim() != 0 {
                    rep.violations += 1;
                }
            }
        }
        Ok(rep)
    }

    /// Heart members among the shifted classes.
    pub fn heart_members(&self, e: &CmEnumeration<F>) -> Result<Vec<(usize, i64)>> {
        let mut out = Vec::new();
        for (k, s, x) in self.shifted_classes(e)? {
            if self.t_membership(&x)?.in_heart() {
                out.push((k, s));
            }
        }
        Ok(out)
    }

    /// Compares the heart with `mod` of the stable Auslander algebra by object
    /// count, and the tilting objects with `Λ`-maps modulo injectives by Hom dimension.
    pub fn heart_equivalence_check(&self, e: &CmEnumeration<F>) -> Result<HeartReport> {
        let heart_count = self.heart_members(e)?.len();
        let idx = self.non_injective();
        let expected_count = if idx.is_empty() {
            0
        } else {
            let sg =
                stable_auslander_algebra(self.lambda(), StableQuotientSpec::ModuloProjectives)?;
            enumerate_indecomposables(&sg, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM)?.len()
        };
        let injectives: Vec<Module<F>> = (0..self.r())
            .filter(|&i| self.ar().injective[i])
            .map(|i| self.indecomposables()[i].clone())
            .collect();
        let t = self.tilting_objects(e.centre)?;
        let mut hom_mismatches = Vec::new();
        for (a, ta) in t.iter().enumerate() {
            for (b, tb) in t.iter().enumerate() {
                let u = stable_hom(ta, tb)?.dim();
                let l = hom_mod_injectives(
                    &self.indecomposables()[idx[a]],
                    &self.indecomposables()[idx[b]],
                    &injectives,
                )?;
                if u != l {
                    hom_mismatches.push((idx[a], idx[b], u, l));
                }
            }
        }
        Ok(HeartReport {
            heart_count,
            expected_count,
            hom_mismatches,
        })
    }
}
