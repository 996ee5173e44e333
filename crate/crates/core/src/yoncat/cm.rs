use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::repmod::{ext_space, is_isomorphic, is_projective, stable_hom, Module, Resolution};
use crate::scalar::Scalar;
use crate::yoncat::window::{UModule, YonedaWindow};

/// `Ω³ X ≅ X(PERIODICITY_SHIFT)` in the stable category, where `X(1)` moves
/// every fiber up one degree. Fixed by running the check on linear `A3`.
pub const PERIODICITY_SHIFT: i64 = 1;

/// Degree shifts tried when forming cones between two classes.
const CONE_SHIFTS: std::ops::RangeInclusive<i64> = -2..=2;

pub const DEFAULT_MAX_CLASSES: usize = 200;

/// Non-projective indecomposable CM modules up to degree shift, each
/// normalized so that its lowest generator sits at `centre`.
#[derive(Clone, Debug)]
pub struct CmEnumeration<F> {
    pub classes: Vec<UModule<F>>,
    pub centre: i64,
    /// False if the class bound was hit or some candidate left the window.
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinReport {
    /// Largest `n ≤ probe` with `Ext^n(S, P) ≠ 0` over U-modules.
    pub left: usize,
    /// The same over modules on the other side.
    pub right: usize,
    pub probe: usize,
}

impl GorensteinReport {
    pub fn max_id(&self) -> usize {
        self.left.max(self.right)
    }
}

fn is_too_small(e: &Error) -> bool {
    matches!(e, Error::WindowTooSmall(_))
}

impl<F: Scalar> YonedaWindow<F> {
    fn centre(&self) -> i64 {
        let (lo, hi) = self.bounds();
        lo + (hi - lo) / 2
    }

    /// Adds the non-projective summands of `x` as new classes; returns false
    /// if a summand could not be normalized inside the window.
    fn absorb(
        &self,
        x: &UModule<F>,
        c: i64,
        classes: &mut Vec<UModule<F>>,
        queue: &mut VecDeque<usize>,
    ) -> Result<bool> {
        let mut ok = true;
        for s in self.nonprojective_summands(x)? {
            let n = match self.normalize(&s, c) {
                Ok(n) => n,
                Err(e) if is_too_small(&e) => {
                    ok = false;
                    continue;
                }
                Err(e) => return Err(e),
            };
            let mut seen = false;
            for y in classes.iter() {
                if y.dims() == n.dims() && is_isomorphic(y, &n)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                queue.push_back(classes.len());
                classes.push(n);
            }
        }
        Ok(ok)
    }

    /// Cones of a stable-Hom basis of `x -> y`, via `coker(x -> y ⊕ Q)` with
    /// `x -> Q` the injective projective approximation.
    fn cones(&self, x: &UModule<F>, y: &UModule<F>) -> Result<Vec<UModule<F>>> {
        let sh = stable_hom(x, y)?;
        if sh.dim() == 0 {
            return Ok(Vec::new());
        }
        let (q, iota) = self.left_approximation(x)?;
        let (sum, incl, _) = Module::direct_sum(self.op(), &[y.clone(), q]);
        let j = incl[1].after(&iota);
        Ok(sh
            .basis
            .iter()
            .map(|f| incl[0].after(f).add(&j).cokernel(&sum).0)
            .collect())
    }

    /// Closure of `{U₀(-, A)}` under syzygy, cosyzygy, summands, degree shift
    /// and cones of stable maps.
    ///
    /// Cones are needed: syzygies of the seeds only reach the shifts of the
    /// tilting objects, not the whole stable category.
    pub fn enumerate_cm(&self, max_classes: usize) -> Result<CmEnumeration<F>> {
        let (lo, hi) = self.bounds();
        if hi - lo < 8 {
            return Err(Error::WindowTooSmall(format!(
                "CM enumeration needs width ≥ 8, got {lo}..{hi}"
            )));
        }
        let c = self.centre();
        let mut classes: Vec<UModule<F>> = Vec::new();
        let mut queue = VecDeque::new();
        let mut closed = true;
        for (i, m) in self.indecomposables().iter().enumerate() {
            if !self.ar().injective[i] {
                closed &= self.absorb(&self.u0_module(m, c)?, c, &mut classes, &mut queue)?;
            }
        }
        while let Some(k) = queue.pop_front() {
            if classes.len() > max_classes {
                closed = false;
                break;
            }
            let x = classes[k].clone();
            let mut fresh = Vec::new();
            let mut attempt = |r: Result<Vec<UModule<F>>>| -> Result<()> {
                match r {
                    Ok(v) => fresh.extend(v),
                    Err(e) if is_too_small(&e) => closed = false,
                    Err(e) => return Err(e),
                }
                Ok(())
            };
            attempt(self.syzygy(&x).map(|m| vec![m]))?;
            attempt(self.cosyzygy(&x).map(|m| vec![m]))?;
            for j in 0..=k {
                let y = classes[j].clone();
                for t in CONE_SHIFTS {
                    attempt(self.shift(&y, t).and_then(|yt| self.cones(&x, &yt)))?;
                    if j != k {
                        attempt(self.shift(&x, t).and_then(|xt| self.cones(&y, &xt)))?;
                    }
                }
            }
            for m in fresh {
                closed &= self.absorb(&m, c, &mut classes, &mut queue)?;
            }
        }
        Ok(CmEnumeration {
            classes,
            centre: c,
            closed,
        })
    }

    /// `Ω³ X ≅ X(PERIODICITY_SHIFT)` up to projective summands.
    pub fn check_shift_periodicity(&self, x: &UModule<F>) -> Result<bool> {
        let x = self.strip_projectives(x)?;
        let mut o = x.clone();
        for _ in 0..3 {
            o = self.strip_projectives(&self.syzygy(&o)?)?;
        }
        if x.is_zero() || o.is_zero() {
            return Ok(x.is_zero() && o.is_zero());
        }
        is_isomorphic(&o, &self.shift(&x, PERIODICITY_SHIFT)?)
    }

    /// Injective dimension of the projectives, probed by `Ext^n(S, P)` for
    /// `n ≤ 3`, simples at the centre and projectives three degrees inside
    /// the window. Other simples are degree shifts of the tested ones.
    pub fn gorenstein_check(&self) -> Result<GorensteinReport> {
        const PROBE: usize = 3;
        let (lo, hi) = self.bounds();
        if hi - lo < 2 * PROBE as i64 {
            return Err(Error::WindowTooSmall(format!(
                "Gorenstein probe needs width ≥ {}",
                2 * PROBE
            )));
        }
        let c = self.centre();
        let inner: Vec<usize> = (0..self.op().n_vertices())
            .filter(|&v| (lo + PROBE as i64..=hi - PROBE as i64).contains(&self.degree(v)))
            .collect();
        let side = |alg: &std::sync::Arc<crate::presalg::Algebra<F>>| -> Result<usize> {
            let mut worst = 0;
            for i in 0..self.r() {
                let s = Module::simple(alg, self.vertex(i, c).expect("centre lies in the window"));
                let mut res = Resolution::new(&s);
                for &v in &inner {
                    let p = Module::projective(alg, v);
                    for n in (worst + 1)..=PROBE {
                        if ext_space(&mut res, &p, n)?.dim() != 0 {
                            worst = n;
                        }
                    }
                }
            }
            Ok(worst)
        };
        Ok(GorensteinReport {
            left: side(self.op())?,
            right: side(self.window_algebra())?,
            probe: PROBE,
        })
    }

    /// Every class of the enumeration passes the Ext test and embeds in a projective.
    pub fn verify_cm_classes(&self, e: &CmEnumeration<F>) -> Result<bool> {
        for x in &e.classes {
            if is_projective(x) || !self.is_cm(x)? || self.syzygy_witness(x)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
