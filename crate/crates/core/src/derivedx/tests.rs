use std::sync::Arc;

use num_traits::Zero;
use proptest::prelude::*;

use super::*;
use crate::arknit::{
    enumerate_indecomposables, stable_auslander_algebra, StableQuotientSpec, DEFAULT_MAX_COUNT,
    DEFAULT_MAX_DIM,
};
use crate::catalog;
use crate::error::Error;
use crate::presalg::Algebra;
use crate::repmod::{ext, is_isomorphic, proj_sum, Module, ModuleMap};
use crate::scalar::{Rat, Scalar};

type A = Arc<Algebra<Rat>>;

fn resolution_of(m: &Module<Rat>) -> ProjComplex<Rat> {
    projective_replacement(&BoundedComplex::stalk(m, 0), 10).unwrap()
}

/// `P(v) --id--> P(v)` in degrees `deg, deg + 1`.
fn contractible(alg: &A, v: usize, deg: i64) -> ProjComplex<Rat> {
    ProjComplex::new(
        alg,
        deg,
        vec![vec![v], vec![v]],
        vec![vec![vec![alg.unit(alg.idempotent(v))]]],
    )
    .unwrap()
}

fn indecomposables(alg: &A) -> Vec<Module<Rat>> {
    enumerate_indecomposables(alg, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM).unwrap()
}

#[test]
fn shift_and_sum_of_module_complexes() {
    let a = catalog::linear_a::<Rat>(2);
    let p = Module::projective(&a, 1);
    let c = BoundedComplex::stalk(&p, 0).shift(2);
    assert_eq!(c.range(), (-2, -2));
    let s = c.direct_sum(&BoundedComplex::stalk(&p, 1)).unwrap();
    assert_eq!(s.range(), (-2, 1));
    assert!(s.term(0).is_zero());
    assert_eq!(s.cohomology(1).dim(), p.dim());
}

#[test]
fn non_complex_is_rejected() {
    let a = catalog::truncated_poly::<Rat>(2);
    let p = Module::projective(&a, 0);
    let x = ModuleMap::identity(&p);
    let r = BoundedComplex::new(
        &a,
        0,
        vec![p.clone(), p.clone(), p.clone()],
        vec![x.clone(), x],
    );
    assert!(matches!(r, Err(Error::InvalidModule(_))));
}

#[test]
fn minimal_form_trivial_cases() {
    let a = catalog::linear_a::<Rat>(3);
    let reg = ProjComplex::regular(&a);
    let m = minimal_form(&reg);
    assert_eq!(m.range(), (0, 0));
    assert_eq!(m.size(), 3);
    let with = reg
        .direct_sum(&contractible(&a, 1, -1))
        .unwrap()
        .direct_sum(&contractible(&a, 2, 0))
        .unwrap();
    assert_eq!(with.size(), 7);
    let m = minimal_form(&with);
    assert_eq!(m.size(), 3);
    assert_eq!(m.range(), (0, 0));
    assert!(minimal_form(&contractible(&a, 0, 3)).is_zero());
    // A projective module resolves to a single term.
    let r = minimal_form(&resolution_of(&Module::projective(&a, 0)));
    assert_eq!((r.range(), r.size()), ((0, 0), 1));
}

#[test]
fn element_maps_round_trip() {
    let a = catalog::a3_zero_relation::<Rat>();
    let src = vec![1, 2];
    let tgt = vec![0, 1];
    let mut e = vec![vec![vec![Rat::zero(); a.dim()]; 2]; 2];
    e[0][0] = a.nf(0, &[0]);
    e[1][1] = a.nf(1, &[1]);
    e[1][0] = a
        .unit(a.idempotent(1))
        .iter()
        .map(|x| x.clone() + x.clone())
        .collect();
    let f = elements_to_map(&a, &src, &tgt, &e);
    assert!(f.is_homomorphism(&proj_sum(&a, &src), &proj_sum(&a, &tgt)));
    assert_eq!(map_to_elements(&a, &src, &tgt, &f), e);
}

#[test]
fn nakayama_entries_are_functorial() {
    let a = catalog::linear_a::<Rat>(3);
    for u in 0..3 {
        for v in 0..3 {
            for w in 0..3 {
                for &x in a.block(v, u) {
                    for &y in a.block(w, v) {
                        // x: P(u) -> P(v), y: P(v) -> P(w); composite y·x.
                        let comp = a.mul(&a.unit(y), &a.unit(x));
                        let lhs = nakayama_entry(&a, u, w, &comp);
                        let rhs = nakayama_entry(&a, v, w, &a.unit(y)).after(&nakayama_entry(
                            &a,
                            u,
                            v,
                            &a.unit(x),
                        ));
                        assert_eq!(lhs, rhs);
                        let iu = Module::injective(&a, u);
                        let iw = Module::injective(&a, w);
                        assert!(lhs.is_homomorphism(&iu, &iw));
                    }
                }
            }
        }
    }
}

#[test]
fn nakayama_of_regular_is_dual_in_degree_zero() {
    for a in [
        catalog::linear_a::<Rat>(3),
        catalog::a3_zero_relation(),
        catalog::two_cycle_zero(),
    ] {
        let nu = derived_nakayama(&ProjComplex::regular(&a))
            .unwrap()
            .to_complex();
        let (lo, hi) = nu.range();
        let injs: Vec<Module<Rat>> = (0..a.n_vertices())
            .map(|v| Module::injective(&a, v))
            .collect();
        let d = Module::direct_sum(&a, &injs).0;
        for k in lo..=hi {
            let h = nu.cohomology(k);
            if k == 0 {
                assert!(is_isomorphic(&h, &d).unwrap());
            } else {
                assert!(h.is_zero(), "H^{k} should vanish");
            }
        }
    }
}

#[test]
fn nakayama_is_identity_on_semisimple() {
    let a = catalog::semisimple::<Rat>(2);
    let c = ProjComplex::stalk(&a, vec![0, 1, 1], 2);
    assert!(complex_iso(&derived_nakayama(&c).unwrap(), &c).unwrap());
    assert!(cy_check(&a, 0, 1).unwrap());
}

#[test]
fn nakayama_over_a2_sends_sink_projective_to_injective_envelope() {
    // P(2) = S(2) is simple, so ν P(2) = I(2) = P(1).
    let a = catalog::linear_a::<Rat>(2);
    let nu = derived_nakayama(&ProjComplex::stalk(&a, vec![1], 0)).unwrap();
    assert!(complex_iso(&nu, &ProjComplex::stalk(&a, vec![0], 0)).unwrap());
    // ν P(1) = I(1) = S(1), resolved by P(2) -> P(1).
    let nu = derived_nakayama(&ProjComplex::stalk(&a, vec![0], 0)).unwrap();
    assert_eq!(nu.range(), (-1, 0));
    assert_eq!((nu.verts(-1), nu.verts(0)), (&[1usize][..], &[0usize][..]));
    assert!(nu.is_radical());
}

#[test]
fn complex_iso_trivial_cases() {
    let a = catalog::linear_a::<Rat>(3);
    let s1 = resolution_of(&Module::simple(&a, 0));
    assert!(complex_iso(&s1, &s1).unwrap());
    assert!(complex_iso(&s1, &s1.direct_sum(&contractible(&a, 2, -3)).unwrap()).unwrap());
    let p = ProjComplex::stalk(&a, vec![1], 0);
    assert!(!complex_iso(&p, &p.shift(1)).unwrap());
    // Same terms, different differential.
    let s2 = resolution_of(&Module::simple(&a, 1));
    let split = ProjComplex::stalk(&a, vec![1], 0)
        .direct_sum(&ProjComplex::stalk(&a, vec![2], -1))
        .unwrap();
    assert_eq!(s2.size(), split.size());
    assert!(!complex_iso(&s2, &split).unwrap());
    let other = catalog::linear_a::<Rat>(2);
    assert_eq!(
        complex_iso(&p, &ProjComplex::regular(&other)),
        Err(Error::AlgebraMismatch)
    );
}

#[test]
fn calabi_yau_dimensions_of_path_algebras() {
    let a2 = catalog::linear_a::<Rat>(2);
    assert!(cy_check(&a2, 1, 3).unwrap());
    assert!(!cy_check(&a2, 1, 2).unwrap());
    assert!(!cy_check(&a2, 0, 3).unwrap());
    let (a, b) = Dynkin::A(3).path_algebra_cy().unwrap();
    let rep = cy_report(&catalog::linear_a::<Rat>(3), a, b).unwrap();
    assert!(rep.verdict && rep.all_minimal);
    assert_eq!(rep.iterations, 4);
    assert_eq!(rep.minimal_sizes.len(), 4);
}

#[test]
fn calabi_yau_of_stable_auslander_algebra_of_a3() {
    let a3 = catalog::linear_a::<Rat>(3);
    let sg = stable_auslander_algebra(&a3, StableQuotientSpec::ModuloProjectives).unwrap();
    let (a, b) = Dynkin::A(3).stable_auslander_cy().unwrap();
    assert_eq!((a, b), (2, 4));
    let rep = cy_report(&sg, a, b).unwrap();
    assert!(rep.verdict && rep.all_minimal, "{rep:?}");
}

#[test]
fn calabi_yau_powers_compose() {
    let a2 = catalog::linear_a::<Rat>(2);
    assert!(cy_check(&a2, 2, 6).unwrap());
    let k = catalog::semisimple::<Rat>(1);
    assert!(cy_check(&k, 0, 1).unwrap() && cy_check(&k, 0, 2).unwrap());
}

#[test]
fn coxeter_table() {
    let h: Vec<_> = [
        Dynkin::A(4),
        Dynkin::D(5),
        Dynkin::E(6),
        Dynkin::E(7),
        Dynkin::E(8),
        Dynkin::D(3),
    ]
    .iter()
    .map(|t| t.coxeter_number())
    .collect();
    assert_eq!(
        h,
        vec![Some(5), Some(8), Some(12), Some(18), Some(30), None]
    );
}

#[test]
fn infinite_global_dimension_is_reported() {
    let a = catalog::truncated_poly::<Rat>(2);
    assert!(matches!(
        derived_nakayama(&ProjComplex::regular(&a)),
        Err(Error::InfiniteGlobalDimension(_))
    ));
    assert!(matches!(
        cy_check(&a, 0, 1),
        Err(Error::InfiniteGlobalDimension(_))
    ));
}

#[test]
fn derived_homs_between_modules_are_ext_groups() {
    let a = catalog::a3_zero_relation::<Rat>();
    let inds = indecomposables(&a);
    let res: Vec<_> = inds.iter().map(resolution_of).collect();
    for (x, px) in inds.iter().zip(&res) {
        for (y, py) in inds.iter().zip(&res) {
            for s in 0..3 {
                assert_eq!(hom_dim(px, py, s as i64).unwrap(), ext(x, y, s).unwrap().0);
            }
        }
    }
}

#[test]
fn serre_duality_on_a3() {
    let a = catalog::linear_a::<Rat>(3);
    let res: Vec<_> = indecomposables(&a).iter().map(resolution_of).collect();
    for px in &res {
        let nx = derived_nakayama(px).unwrap();
        for py in &res {
            for s in -1..=2 {
                let lhs = hom_dim(px, py, s).unwrap();
                let rhs = hom_dim(&py.shift(s), &nx, 0).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn nakayama_commutes_with_shift() {
    let a = catalog::a3_zero_relation::<Rat>();
    for m in indecomposables(&a) {
        let p = resolution_of(&m);
        let lhs = derived_nakayama(&p.shift(1)).unwrap();
        let rhs = derived_nakayama(&p).unwrap().shift(1);
        assert!(complex_iso(&lhs, &rhs).unwrap());
    }
}

/// A random complex of modules `X^0 -> X^1` built as `f: M -> N` for
/// indecomposables `M, N` and a random homomorphism.
fn random_two_term(alg: &A, seed: u64) -> BoundedComplex<Rat> {
    use rand::{Rng, SeedableRng};
    let inds = indecomposables(alg);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let m = &inds[rng.gen_range(0..inds.len())];
    let n = &inds[rng.gen_range(0..inds.len())];
    let hom = crate::repmod::hom_space(m, n).unwrap();
    let coeffs: Vec<Rat> = (0..hom.dim())
        .map(|_| Rat::from_i64(rng.gen_range(-3..=3)))
        .collect();
    let f = hom.combine(&coeffs, m, n);
    BoundedComplex::new(alg, 0, vec![m.clone(), n.clone()], vec![f]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn replacement_preserves_cohomology(seed in any::<u64>(), which in 0usize..3) {
        let alg = [catalog::linear_a::<Rat>(3), catalog::a3_zero_relation(), catalog::two_cycle_zero()][which].clone();
        let x = random_two_term(&alg, seed);
        let q = projective_replacement(&x, 10).unwrap();
        let qc = q.to_complex();
        for k in -4..=2 {
            prop_assert!(is_isomorphic(&qc.cohomology(k), &x.cohomology(k)).unwrap());
        }
        let m = minimal_form(&q);
        prop_assert!(m.is_radical());
        prop_assert!(complex_iso(&m, &q).unwrap());
    }

    #[test]
    fn minimal_form_removes_random_contractibles(v in 0usize..3, deg in -2i64..3, seed in any::<u64>()) {
        let alg = catalog::a3_zero_relation::<Rat>();
        let x = random_two_term(&alg, seed);
        let q = minimal_form(&projective_replacement(&x, 10).unwrap());
        let padded = q.direct_sum(&contractible(&alg, v, deg)).unwrap();
        let m = minimal_form(&padded);
        prop_assert_eq!(m.size(), q.size());
        prop_assert!(complex_iso(&m, &q).unwrap());
    }
}
