use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
    pub degree: i64,
}

/// Finite quiver with named vertices and graded arrows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        Ok(Quiver {
            vertices,
            arrows: Vec::new(),
        })
    }

    /// Adds an arrow between named vertices and returns its index.
    pub fn add_arrow(&mut self, name: &str, src: &str, tgt: &str, degree: i64) -> Result<usize> {
        let s = self
            .vertex_index(src)
            .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex `{src}`")))?;
        let t = self
            .vertex_index(tgt)
            .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex `{tgt}`")))?;
        self.push_arrow(name, s, t, degree)
    }

    pub fn push_arrow(&mut self, name: &str, src: usize, tgt: usize, degree: i64) -> Result<usize> {
        if degree < 0 {
            return Err(Error::InvalidQuiver(format!(
                "arrow `{name}` has negative degree"
            )));
        }
        if self.arrow_index(name).is_some() || self.vertex_index(name).is_some() {
            return Err(Error::InvalidQuiver(format!("duplicate name `{name}`")));
        }
        if src >= self.vertices.len() || tgt >= self.vertices.len() {
            return Err(Error::InvalidQuiver(format!(
                "arrow `{name}` has an undeclared endpoint"
            )));
        }
        self.arrows.push(Arrow {
            name: name.to_string(),
            src,
            tgt,
            degree,
        });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn is_graded(&self) -> bool {
        self.arrows.iter().any(|a| a.degree != 0)
    }

    /// The quiver with every arrow reversed.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    src: a.tgt,
                    tgt: a.src,
                    degree: a.degree,
                })
                .collect(),
        }
    }

    /// Source and target of a nonempty word, or `None` if it does not compose.
    pub fn word_ends(&self, word: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*word.first()?)?;
        let mut at = first.tgt;
        for &a in &word[1..] {
            let arr = self.arrows.get(a)?;
            if arr.src != at {
                return None;
            }
            at = arr.tgt;
        }
        Some((first.src, at))
    }

    pub fn word_degree(&self, word: &[usize]) -> i64 {
        word.iter().map(|&a| self.arrows[a].degree).sum()
    }

    pub fn word_name(&self, src: usize, word: &[usize]) -> String {
        if word.is_empty() {
            format!("e{}", self.vertices[src])
        } else {
            word.iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Parses `a*b*c` into arrow indices.
    pub fn parse_word(&self, s: &str) -> Result<Vec<usize>> {
        let word = s
            .split('*')
            .map(|t| {
                let t = t.trim();
                self.arrow_index(t)
                    .ok_or_else(|| Error::InvalidRelation(format!("unknown arrow `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.word_ends(&word)
            .ok_or_else(|| Error::InvalidRelation(format!("`{s}` does not compose")))?;
        Ok(word)
    }
}

/// Linear combination of parallel paths of the same length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation<F> {
    pub terms: Vec<(F, Vec<usize>)>,
}

impl<F: Scalar> Relation<F> {
    /// Merges repeated words and drops zero coefficients.
    pub fn new(terms: Vec<(F, Vec<usize>)>) -> Self {
        let mut order: Vec<Vec<usize>> = Vec::new();
        let mut acc: HashMap<Vec<usize>, F> = HashMap::new();
        for (c, w) in terms {
            if !acc.contains_key(&w) {
                order.push(w.clone());
            }
            let e = acc.entry(w).or_insert_with(F::zero);
            *e = e.clone() + c;
        }
        let terms = order
            .into_iter()
            .filter_map(|w| {
                let c = acc.remove(&w).unwrap();
                (!c.is_zero()).then_some((c, w))
            })
            .collect();
        Relation { terms }
    }

    pub fn monomial(word: Vec<usize>) -> Self {
        Relation {
            terms: vec![(F::one(), word)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Checks composability and parallelism; returns (src, tgt, length, degree).
    pub fn validate(&self, q: &Quiver) -> Result<(usize, usize, usize, i64)> {
        let Some((_, w0)) = self.terms.first() else {
            return Err(Error::InvalidRelation("empty relation".into()));
        };
        let ends = q
            .word_ends(w0)
            .ok_or_else(|| Error::InvalidRelation("relation term does not compose".into()))?;
        let (len, deg) = (w0.len(), q.word_degree(w0));
        for (_, w) in &self.terms {
            if q.word_ends(w) != Some(ends) {
                return Err(Error::InvalidRelation(format!(
                    "terms of `{}` are not parallel",
                    self.display(q)
                )));
            }
            if w.len() < 2 {
                return Err(Error::NotAdmissible(format!(
                    "relation `{}` has a term of length < 2",
                    self.display(q)
                )));
            }
            if q.word_degree(w) != deg {
                return Err(Error::Inhomogeneous(format!(
                    "degrees differ in `{}`",
                    self.display(q)
                )));
            }
            if w.len() != len {
                return Err(Error::Inhomogeneous(format!(
                    "path lengths differ in `{}`",
                    self.display(q)
                )));
            }
        }
        Ok((ends.0, ends.1, len, deg))
    }

    pub fn reversed(&self) -> Self {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c.clone(), w.iter().rev().copied().collect()))
                .collect(),
        }
    }

    /// Signed combination such as `a*b - 2*c*d`.
    pub fn display(&self, q: &Quiver) -> String {
        let mut s = String::new();
        for (i, (c, w)) in self.terms.iter().enumerate() {
            let word = q.word_name(0, w);
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", cs),
            };
            if i == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            if mag != "1" {
                s.push_str(&format!("{mag}*"));
            }
            s.push_str(&word);
        }
        s
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// A parse failure at a 1-based column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub col: usize,
    pub msg: String,
}

impl<F: Scalar> Relation<F> {
    /// Parses a signed combination of words, e.g. `a*b - 2*c*d` or `-1/2*x*x`.
    pub fn parse(q: &Quiver, s: &str) -> std::result::Result<Self, ParseError> {
        let err = |col: usize, msg: String| ParseError { col: col + 1, msg };
        let bytes = s.as_bytes();
        let mut i = 0;
        let mut terms = Vec::new();
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let mut first = true;
        loop {
            skip_ws(&mut i);
            let mut sign = 1i64;
            if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                sign = if bytes[i] == b'-' { -1 } else { 1 };
                i += 1;
                skip_ws(&mut i);
            } else if !first {
                return Err(err(i, "expected `+` or `-`".into()));
            }
            first = false;
            // Optional coefficient.
            let mut coef = F::one();
            if i < bytes.len() && bytes[i].is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: i64 = s[start..i]
                    .parse()
                    .map_err(|_| err(start, "coefficient too large".into()))?;
                let mut den = 1i64;
                if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    let ds = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if ds == i {
                        return Err(err(ds, "expected denominator".into()));
                    }
                    den = s[ds..i]
                        .parse()
                        .map_err(|_| err(ds, "denominator too large".into()))?;
                }
                coef =
                    F::from_ratio(num, den).ok_or_else(|| err(start, "zero denominator".into()))?;
                skip_ws(&mut i);
                if i >= bytes.len() || bytes[i] != b'*' {
                    return Err(err(i, "expected `*` after coefficient".into()));
                }
                i += 1;
                skip_ws(&mut i);
            }
            let mut word = Vec::new();
            loop {
                skip_ws(&mut i);
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'')
                {
                    i += 1;
                }
                if start == i {
                    return Err(err(start, "expected arrow name".into()));
                }
                let name = &s[start..i];
                let a = q
                    .arrow_index(name)
                    .ok_or_else(|| err(start, format!("unknown arrow `{name}`")))?;
                if let Some(&prev) = word.last() {
                    let prev: &Arrow = &q.arrows()[prev];
                    if prev.tgt != q.arrows()[a].src {
                        return Err(err(
                            start,
                            format!("`{}` does not compose with `{name}`", prev.name),
                        ));
                    }
                }
                word.push(a);
                skip_ws(&mut i);
                if i < bytes.len() && bytes[i] == b'*' {
                    i += 1;
                } else {
                    break;
                }
            }
            terms.push((F::from_i64(sign) * coef, word));
            skip_ws(&mut i);
            if i >= bytes.len() {
                break;
            }
        }
        Ok(Relation::new(terms))
    }
}
