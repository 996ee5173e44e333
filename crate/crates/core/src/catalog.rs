//! Small algebras used throughout the tests and examples.

use std::sync::Arc;

use crate::presalg::{presented, Algebra, BuildOptions};
use crate::scalar::Scalar;

fn build<F: Scalar>(v: &[&str], a: &[(&str, &str, &str, i64)], r: &[&str]) -> Arc<Algebra<F>> {
    Arc::new(presented(v, a, r, BuildOptions::default()).expect("catalog algebra is admissible"))
}

/// `n` isolated vertices.
pub fn semisimple<F: Scalar>(n: usize) -> Arc<Algebra<F>> {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    build(&refs, &[], &[])
}

/// Path algebra of `1 -> 2 -> ... -> n`.
pub fn linear_a<F: Scalar>(n: usize) -> Arc<Algebra<F>> {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<String> = (1..n).map(|i| format!("a{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let arr: Vec<(&str, &str, &str, i64)> = (0..n.saturating_sub(1))
        .map(|i| (arrows[i].as_str(), refs[i], refs[i + 1], 0))
        .collect();
    build(&refs, &arr, &[])
}

/// `1 -a-> 2 -b-> 3` with `ab = 0`.
pub fn a3_zero_relation<F: Scalar>() -> Arc<Algebra<F>> {
    build(
        &["1", "2", "3"],
        &[("a", "1", "2", 0), ("b", "2", "3", 0)],
        &["a*b"],
    )
}

/// Two vertices with arrows both ways and `ab = 0`.
pub fn two_cycle_zero<F: Scalar>() -> Arc<Algebra<F>> {
    build(
        &["1", "2"],
        &[("a", "1", "2", 0), ("b", "2", "1", 0)],
        &["a*b"],
    )
}

/// `k[x]/(x^n)`.
pub fn truncated_poly<F: Scalar>(n: usize) -> Arc<Algebra<F>> {
    let rel = vec!["x"; n].join("*");
    build(&["1"], &[("x", "1", "1", 0)], &[rel.as_str()])
}

/// A loop `a` and an arrow `b` leaving its vertex, with `a² = ab = 0`.
pub fn loop_with_tail<F: Scalar>() -> Arc<Algebra<F>> {
    build(
        &["1", "2"],
        &[("a", "1", "1", 0), ("b", "1", "2", 0)],
        &["a*a", "a*b"],
    )
}

/// Path algebra of `1 -> 2 <- 3`.
pub fn a3_sink<F: Scalar>() -> Arc<Algebra<F>> {
    build(
        &["1", "2", "3"],
        &[("a", "1", "2", 0), ("b", "3", "2", 0)],
        &[],
    )
}

/// Path algebra of `1 <- 2 -> 3`.
pub fn a3_source<F: Scalar>() -> Arc<Algebra<F>> {
    build(
        &["1", "2", "3"],
        &[("a", "2", "1", 0), ("b", "2", "3", 0)],
        &[],
    )
}

/// Preprojective algebra of type `A_n`.
pub fn preprojective_a<F: Scalar>(n: usize) -> Arc<Algebra<F>> {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let up: Vec<String> = (1..n).map(|i| format!("u{i}")).collect();
    let down: Vec<String> = (1..n).map(|i| format!("d{i}")).collect();
    let mut arr = Vec::new();
    for i in 0..n.saturating_sub(1) {
        arr.push((up[i].as_str(), refs[i], refs[i + 1], 0));
        arr.push((down[i].as_str(), refs[i + 1], refs[i], 0));
    }
    let mut rels = Vec::new();
    for v in 0..n {
        let mut terms = Vec::new();
        if v + 1 < n {
            terms.push(format!("{}*{}", up[v], down[v]));
        }
        if v > 0 {
            terms.push(format!("{}*{}", down[v - 1], up[v - 1]));
        }
        match terms.len() {
            1 => rels.push(terms[0].clone()),
            2 => rels.push(format!("{} - {}", terms[0], terms[1])),
            _ => {}
        }
    }
    let rel_refs: Vec<&str> = rels.iter().map(String::as_str).collect();
    build(&refs, &arr, &rel_refs)
}

fn build_graded<F: Scalar>(
    v: &[&str],
    a: &[(&str, &str, &str, i64)],
    r: &[&str],
    cutoff: Option<i64>,
) -> Arc<Algebra<F>> {
    let opts = BuildOptions {
        cutoff,
        ..BuildOptions::default()
    };
    Arc::new(presented(v, a, r, opts).expect("catalog algebra is admissible"))
}

/// Graded `ZA3/[1]` with mesh relations: the Yoneda algebra of linear `A3`.
pub fn yoneda_linear_a3<F: Scalar>() -> Arc<Algebra<F>> {
    build_graded(
        &["1", "2", "3", "4", "5", "6"],
        &[
            ("a", "1", "2", 0),
            ("b", "2", "3", 0),
            ("c", "2", "4", 0),
            ("d", "3", "5", 0),
            ("e", "4", "5", 0),
            ("f", "5", "6", 0),
            ("g", "5", "1", 1),
            ("h", "6", "2", 1),
        ],
        &["a*b", "b*d - c*e", "h*c", "d*f", "e*g", "f*h - g*a"],
        None,
    )
}

/// Yoneda algebra of `1 -> 2 -> 3` with the zero relation.
pub fn yoneda_a3_zero_relation<F: Scalar>() -> Arc<Algebra<F>> {
    build_graded(
        &["1", "2", "3", "4", "5"],
        &[
            ("a", "1", "2", 0),
            ("b", "2", "3", 0),
            ("x", "3", "1", 1),
            ("c", "3", "4", 0),
            ("d", "4", "5", 0),
            ("y", "5", "3", 1),
        ],
        &["a*b", "b*x", "d*y", "c*d", "y*c", "x*a"],
        None,
    )
}

/// Yoneda algebra of the two-cycle with one zero relation.
pub fn yoneda_two_cycle_zero<F: Scalar>() -> Arc<Algebra<F>> {
    build_graded(
        &["1", "2", "3", "4", "5"],
        &[
            ("a", "1", "3", 0),
            ("x", "1", "3", 1),
            ("b", "3", "5", 0),
            ("c", "3", "2", 0),
            ("d", "5", "4", 0),
            ("e", "2", "4", 0),
            ("f", "4", "1", 0),
            ("y", "4", "1", 1),
        ],
        &["a*c", "b*d - c*e", "e*f", "f*x - y*a", "x*b", "d*y"],
        None,
    )
}

/// Yoneda algebra of the dual numbers, truncated above degree `cutoff`.
pub fn yoneda_dual_numbers<F: Scalar>(cutoff: i64) -> Arc<Algebra<F>> {
    build_graded(
        &["1", "2"],
        &[("p", "1", "2", 0), ("q", "2", "1", 0), ("x", "1", "1", 1)],
        &["p*q", "x*p", "q*x"],
        Some(cutoff),
    )
}
