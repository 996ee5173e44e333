use std::fmt::Write as _;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::arknit::sequence::almost_split_sequence;
use crate::error::{Error, Result};
use crate::presalg::Algebra;
use crate::repmod::{
    decompose, decompose_grouped, is_injective, is_isomorphic_indecomposable, is_projective,
    tau_inverse, Module, ShortExactSeq,
};
use crate::scalar::Scalar;

pub const DEFAULT_MAX_COUNT: usize = 2000;
pub const DEFAULT_MAX_DIM: usize = 200;

/// Auslander-Reiten quiver of a representation-finite algebra.
#[derive(Clone, Debug)]
pub struct ARQuiver<F> {
    pub vertices: Vec<Module<F>>,
    /// `(source, target, multiplicity)` of irreducible maps.
    pub arrows: Vec<(usize, usize, usize)>,
    pub tau: Vec<Option<usize>>,
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
    /// The almost split sequence ending at each non-projective vertex.
    pub sequences: Vec<Option<ShortExactSeq<F>>>,
}

struct IsoList<F> {
    mods: Vec<Module<F>>,
    max_count: usize,
    max_dim: usize,
}

impl<F: Scalar> IsoList<F> {
    fn find(&self, m: &Module<F>) -> Result<Option<usize>> {
        for (i, x) in self.mods.iter().enumerate() {
            if x.dims() == m.dims() && is_isomorphic_indecomposable(x, m)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    fn add(&mut self, m: Module<F>) -> Result<usize> {
        if let Some(i) = self.find(&m)? {
            return Ok(i);
        }
        if m.dim() > self.max_dim {
            return Err(Error::BoundExceeded {
                what: "module dimension".into(),
                limit: self.max_dim,
            });
        }
        if self.mods.len() >= self.max_count {
            return Err(Error::BoundExceeded {
                what: "indecomposable count".into(),
                limit: self.max_count,
            });
        }
        self.mods.push(m);
        Ok(self.mods.len() - 1)
    }
}

/// Knits the AR quiver from the projectives, closing under `τ⁻` and middle terms.
pub fn ar_quiver<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    max_count: usize,
    max_dim: usize,
) -> Result<ARQuiver<F>> {
    let mut list = IsoList {
        mods: Vec::new(),
        max_count,
        max_dim,
    };
    for v in 0..alg.n_vertices() {
        list.add(Module::projective(alg, v))?;
    }
    let mut projective = Vec::new();
    let mut injective = Vec::new();
    let mut tau = Vec::new();
    let mut sequences = Vec::new();
    let mut preds: Vec<Vec<(Module<F>, usize)>> = Vec::new();
    let mut i = 0;
    while i < list.mods.len() {
        let x = list.mods[i].clone();
        let proj = is_projective(&x);
        let inj = is_injective(&x);
        if proj {
            let parts = decompose_grouped(&x.radical().0)?;
            for (p, _) in &parts {
                list.add(p.clone())?;
            }
            preds.push(parts);
            tau.push(None);
            sequences.push(None);
        } else {
            let seq = almost_split_sequence(&x)?;
            let parts = decompose_grouped(&seq.b)?;
            for (p, _) in &parts {
                list.add(p.clone())?;
            }
            tau.push(Some(list.add(seq.a.clone())?));
            preds.push(parts);
            sequences.push(Some(seq));
        }
        if !inj {
            list.add(tau_inverse(&x))?;
        }
        projective.push(proj);
        injective.push(inj);
        i += 1;
    }
    let mut arrows = Vec::new();
    for (t, parts) in preds.iter().enumerate() {
        for (p, mult) in parts {
            let s = list.find(p)?.expect("predecessor was added");
            arrows.push((s, t, *mult));
        }
    }
    arrows.sort_unstable();
    Ok(ARQuiver {
        vertices: list.mods,
        arrows,
        tau,
        projective,
        injective,
        sequences,
    })
}

pub fn enumerate_indecomposables<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    max_count: usize,
    max_dim: usize,
) -> Result<Vec<Module<F>>> {
    Ok(ar_quiver(alg, max_count, max_dim)?.vertices)
}

impl<F: Scalar> ARQuiver<F> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Index of the vertex isomorphic to an indecomposable `m`.
    pub fn index_of(&self, m: &Module<F>) -> Result<Option<usize>> {
        for (i, x) in self.vertices.iter().enumerate() {
            if x.dims() == m.dims() && is_isomorphic_indecomposable(x, m)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Multiset of vertex indices for the indecomposable summands of `m`.
    pub fn summand_indices(&self, m: &Module<F>) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for x in decompose(m)? {
            out.push(self.index_of(&x)?.ok_or(Error::NotIndecomposable)?);
        }
        out.sort_unstable();
        Ok(out)
    }

    fn label(&self, i: usize) -> String {
        let d: Vec<String> = self.vertices[i]
            .dims()
            .iter()
            .map(usize::to_string)
            .collect();
        d.join("")
    }

    /// Graphviz rendering; vertices are labelled by dimension vectors, τ is dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph ar {\n  rankdir=LR;\n");
        for i in 0..self.len() {
            let shape = if self.projective[i] { "box" } else { "ellipse" };
            let _ = writeln!(s, "  v{i} [label=\"{}\", shape={shape}];", self.label(i));
        }
        for &(a, b, m) in &self.arrows {
            for _ in 0..m {
                let _ = writeln!(s, "  v{a} -> v{b};");
            }
        }
        for (i, t) in self.tau.iter().enumerate() {
            if let Some(t) = t {
                let _ = writeln!(s, "  v{i} -> v{t} [style=dashed, constraint=false];");
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        let verts: Vec<Value> = (0..self.len())
            .map(|i| {
                json!({
                    "id": i,
                    "dims": self.vertices[i].dims(),
                    "projective": self.projective[i],
                    "injective": self.injective[i],
                    "tau": self.tau[i],
                })
            })
            .collect();
        let arrows: Vec<Value> = self
            .arrows
            .iter()
            .map(|&(a, b, m)| json!({"source": a, "target": b, "multiplicity": m}))
            .collect();
        json!({ "vertices": verts, "arrows": arrows })
    }
}
