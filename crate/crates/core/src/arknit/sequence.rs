use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::repmod::{
    end_radical, ext_space, is_indecomposable, syzygy_map, tau, Module, ModuleMap, Resolution,
    ShortExactSeq,
};
use crate::scalar::Scalar;

/// The almost split sequence `0 -> τX -> E -> X -> 0`.
///
/// Its class spans part of the socle of `Ext¹(X, τX)` as a right
/// `End(X)`-module; the first socle basis vector is used.
pub fn almost_split_sequence<F: Scalar>(x: &Module<F>) -> Result<ShortExactSeq<F>> {
    if !is_indecomposable(x)? {
        return Err(Error::NotIndecomposable);
    }
    let t = tau(x);
    if t.is_zero() {
        return Err(Error::ProjectiveInput);
    }
    let mut res = Resolution::new(x);
    let ext = ext_space(&mut res, &t, 1)?;
    let (end, rad) = end_radical(x)?;

    // η ↦ η∘Ω(r) for each radical endomorphism r, stacked.
    let d = ext.dim();
    let mut action = Matrix::zeros(0, d);
    for k in 0..rad.cols() {
        let r = end.combine(&rad.col(k), x, x);
        let mut res2 = res.clone();
        let om = syzygy_map(&r, &mut res, 0, &mut res2, 0, 1);
        let cols: Vec<Vec<F>> = ext
            .basis
            .iter()
            .map(|e| ext.class_coords(&e.after(&om)))
            .collect();
        action = action.vstack(&Matrix::from_cols(d, &cols));
    }
    let socle = action.kernel_basis();
    let coeffs = socle.col(0);
    let eta = ext
        .basis
        .iter()
        .zip(&coeffs)
        .fold(ModuleMap::zero(&res.syz[1], &t), |acc, (b, c)| {
            acc.add(&b.scale(c))
        });
    Ok(pushout(&res, &eta, &t))
}

/// Pushes `0 -> Ω X -> P_0 -> X -> 0` out along `eta: Ω X -> T`.
pub fn pushout<F: Scalar>(
    res: &Resolution<F>,
    eta: &ModuleMap<F>,
    t: &Module<F>,
) -> ShortExactSeq<F> {
    let alg = t.algebra();
    let cover = &res.covers[0];
    let iota = &res.iota[0];
    let x = &res.syz[0];
    let (sum, inj, proj) = Module::direct_sum(alg, &[cover.proj.clone(), t.clone()]);
    let spans: Vec<Matrix<F>> = (0..alg.n_vertices())
        .map(|v| {
            inj[0].comps[v]
                .mul(&iota.comps[v])
                .sub(&inj[1].comps[v].mul(&eta.comps[v]))
        })
        .collect();
    let (e, q) = sum.quotient(&spans);
    let f = q.after(&inj[1]);
    let through = cover.pi.after(&proj[0]);
    let g = ModuleMap {
        comps: q
            .comps
            .iter()
            .zip(&through.comps)
            .map(|(qv, cv)| {
                qv.transpose()
                    .solve_matrix(&cv.transpose())
                    .expect("map vanishes on the pushout relations")
                    .transpose()
            })
            .collect(),
    };
    ShortExactSeq {
        a: t.clone(),
        b: e,
        c: x.clone(),
        f,
        g,
    }
}
