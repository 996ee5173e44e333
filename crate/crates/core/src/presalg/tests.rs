use std::sync::Arc;

use super::*;
use crate::catalog;
use crate::scalar::Rat;

fn words(alg: &Algebra<Rat>) -> Vec<String> {
    alg.basis()
        .iter()
        .map(|b| alg.quiver().word_name(b.src, &b.word))
        .collect()
}

#[test]
fn linear_a3_has_six_paths() {
    let a = catalog::linear_a::<Rat>(3);
    assert_eq!(a.dim(), 6);
    assert_eq!(words(&a), ["e1", "e2", "e3", "a1", "a2", "a1*a2"]);
}

#[test]
fn dual_numbers() {
    assert_eq!(catalog::truncated_poly::<Rat>(2).dim(), 2);
}

#[test]
fn two_cycle_with_zero_relation() {
    let a = catalog::two_cycle_zero::<Rat>();
    assert_eq!(a.dim(), 5);
    let mut w = words(&a);
    w.sort();
    assert_eq!(w, ["a", "b", "b*a", "e1", "e2"]);
}

#[test]
fn short_relation_is_rejected() {
    let r = presented::<Rat>(
        &["1", "2"],
        &[("a", "1", "2", 0)],
        &["a"],
        BuildOptions::default(),
    );
    assert!(matches!(r, Err(crate::error::Error::NotAdmissible(_))));
}

#[test]
fn nonnilpotent_loop_does_not_stabilize() {
    let r = presented::<Rat>(
        &["1"],
        &[("x", "1", "1", 0)],
        &[],
        BuildOptions {
            max_len: 8,
            cutoff: None,
        },
    );
    assert!(matches!(r, Err(crate::error::Error::NotAdmissible(_))));
}

#[test]
fn cutoff_truncates_by_degree() {
    let a = presented::<Rat>(
        &["1"],
        &[("x", "1", "1", 1)],
        &[],
        BuildOptions {
            max_len: 30,
            cutoff: Some(4),
        },
    )
    .unwrap();
    assert_eq!(a.dim(), 5);
}

#[test]
fn opposite_is_an_involution() {
    let a = catalog::loop_with_tail::<Rat>();
    let op = a.opposite();
    let back = op.opposite();
    assert!(Arc::ptr_eq(&a, &back));
    assert_eq!(op.dim(), a.dim());
    for b in 0..a.dim() {
        assert_eq!(
            op.basis()[b].word.iter().rev().copied().collect::<Vec<_>>(),
            a.basis()[b].word
        );
    }
}

#[test]
fn opposite_of_linear_a3() {
    let a = catalog::linear_a::<Rat>(3);
    let op = a.opposite();
    assert_eq!(op.dim(), 6);
    let arr = &op.quiver().arrows()[0];
    assert_eq!((arr.src, arr.tgt), (1, 0));
}

#[test]
fn commutative_loop_is_self_opposite() {
    let a = catalog::truncated_poly::<Rat>(3);
    let op = a.opposite();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            assert_eq!(a.mul_basis(i, j), op.mul_basis(i, j));
        }
    }
}

#[test]
fn veronese_of_ungraded_is_identity() {
    let a = catalog::a3_zero_relation::<Rat>();
    let v = veronese(&a, 2).unwrap();
    assert_eq!(v.dim(), a.dim());
    assert_eq!(v.quiver().arrows().len(), 2);
    assert_eq!(v.relations().len(), 1);
}

#[test]
fn from_structure_recovers_mesh_algebra() {
    let a = catalog::preprojective_a::<Rat>(3);
    let v = veronese(&a, 1).unwrap();
    assert_eq!(v.dim(), a.dim());
    assert_eq!(v.quiver().arrows().len(), 4);
    assert_eq!(v.relations().len(), 3);
}

#[test]
fn preprojective_dimensions() {
    assert_eq!(catalog::preprojective_a::<Rat>(1).dim(), 1);
    assert_eq!(catalog::preprojective_a::<Rat>(2).dim(), 4);
    assert_eq!(catalog::preprojective_a::<Rat>(3).dim(), 10);
}

#[test]
fn relation_parser_reports_columns() {
    let a = catalog::linear_a::<Rat>(3);
    let e = Relation::<Rat>::parse(a.quiver(), "a1*a2 + zz").unwrap_err();
    assert_eq!(e.col, 9);
    let e = Relation::<Rat>::parse(a.quiver(), "a2*a1").unwrap_err();
    assert_eq!(e.col, 4);
    let r = Relation::<Rat>::parse(a.quiver(), "-3/2*a1*a2").unwrap();
    assert_eq!(r.terms[0].0, Rat::new(-3, 2));
}

#[test]
fn ungraded_comparison_forgets_degrees() {
    let graded = |d| {
        presented::<Rat>(
            &["1", "2"],
            &[("a", "1", "2", d)],
            &[],
            BuildOptions::default(),
        )
        .unwrap()
    };
    let (a, b) = (graded(0), graded(1));
    assert!(!profile_isomorphic(&a, &b));
    assert!(profile_isomorphic_ungraded(&a, &b));
    let c = catalog::linear_a::<Rat>(2);
    assert!(profile_isomorphic(&a, &c));
}

mod props {
    use proptest::prelude::*;

    use super::*;

    /// Random relation on the Kronecker-like quiver 1 -> 2 -> 3 with doubled arrows.
    fn relation() -> impl Strategy<Value = Vec<(i64, i64, usize, usize)>> {
        prop::collection::vec((-4i64..=4, 1i64..=3, 0usize..2, 2usize..4), 1..4)
    }

    proptest! {
        #[test]
        fn relation_display_parses_back(terms in relation()) {
            let mut q = Quiver::new(["1", "2", "3"]).unwrap();
            for (n, s, t) in [("a", "1", "2"), ("b", "1", "2"), ("c", "2", "3"), ("d", "2", "3")] {
                q.add_arrow(n, s, t, 0).unwrap();
            }
            let rel = Relation::new(
                terms.into_iter().map(|(p, d, x, y)| (Rat::new(p, d), vec![x, y])).collect(),
            );
            prop_assume!(!rel.is_zero());
            let text = rel.display(&q);
            let back = Relation::<Rat>::parse(&q, &text).unwrap();
            prop_assert_eq!(back.display(&q), text);
        }

        #[test]
        fn linear_a_dimension_counts_paths(n in 1usize..7) {
            prop_assert_eq!(catalog::linear_a::<Rat>(n).dim(), n * (n + 1) / 2);
        }
    }
}
