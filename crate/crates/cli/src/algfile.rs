//! The text format for presented algebras.
//!
//! ```text
//! [quiver]
//! vertices: 1 2 3
//! a: 1 -> 2 deg=0
//! b: 2 -> 3
//! [relations]
//! a*b
//! [options]
//! field = Q
//! max_path_len = 30
//! ```
//!
//! `#` starts a comment. Every parse failure carries a 1-based line and column.

use std::fmt;
use std::sync::Arc;

use yoneda_core::error::{Error, Result as CoreResult};
use yoneda_core::presalg::{build_algebra, Algebra, BuildOptions, Quiver, Relation};
use yoneda_core::scalar::{Rat, Scalar};

/// Primes accepted for `Fp:<p>`; each needs its own monomorphization.
pub const SUPPORTED_PRIMES: &[u64] = &[2, 3, 5, 7, 32003];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FieldSpec {
    pub fn parse(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Q);
        }
        let p = s
            .strip_prefix("Fp:")
            .ok_or_else(|| format!("unknown field `{s}`, expected `Q` or `Fp:<p>`"))?
            .parse::<u64>()
            .map_err(|_| format!("bad prime in `{s}`"))?;
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(format!(
                "unsupported prime {p}; supported: {SUPPORTED_PRIMES:?}"
            ));
        }
        Ok(FieldSpec::Fp(p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub src: String,
    pub tgt: String,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    /// Relations in canonical text form.
    pub relations: Vec<String>,
    pub field: FieldSpec,
    pub max_path_len: usize,
    pub cutoff: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

fn diag(line: usize, col: usize, msg: impl Into<String>) -> Diagnostic {
    Diagnostic {
        line,
        col,
        msg: msg.into(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Quiver,
    Relations,
    Options,
}

fn is_name(s: &str) -> bool {
    !s.is_empty()
        && s.bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'\'')
}

/// Column (1-based) of `part` inside `line`, where `part` is a subslice.
fn col_of(line: &str, part: &str) -> usize {
    part.as_ptr() as usize - line.as_ptr() as usize + 1
}

fn quiver_of(vertices: &[String], arrows: &[ArrowDecl]) -> CoreResult<Quiver> {
    let mut q = Quiver::new(vertices.iter().cloned())?;
    for a in arrows {
        q.add_arrow(&a.name, &a.src, &a.tgt, a.degree)?;
    }
    Ok(q)
}

impl AlgebraFile {
    pub fn parse(text: &str) -> std::result::Result<Self, Diagnostic> {
        let mut section = Section::None;
        let mut vertices: Option<Vec<String>> = None;
        let mut arrows: Vec<ArrowDecl> = Vec::new();
        let mut rel_lines: Vec<(usize, usize, String)> = Vec::new();
        let mut field = FieldSpec::Q;
        let mut max_path_len = BuildOptions::default().max_len;
        let mut cutoff = None;
        for (ln, raw) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = raw.split('#').next().unwrap_or("");
            let body = line.trim();
            if body.is_empty() {
                continue;
            }
            let col = col_of(raw, body);
            if body.starts_with('[') {
                section = match body {
                    "[quiver]" => Section::Quiver,
                    "[relations]" => Section::Relations,
                    "[options]" => Section::Options,
                    _ => return Err(diag(ln, col, format!("unknown section `{body}`"))),
                };
                continue;
            }
            match section {
                Section::None => return Err(diag(ln, col, "content before the first section")),
                Section::Quiver => {
                    let (head, rest) = body.split_once(':').ok_or_else(|| {
                        diag(ln, col, "expected `vertices: ...` or `name: src -> tgt`")
                    })?;
                    let head = head.trim();
                    if head == "vertices" {
                        if vertices.is_some() {
                            return Err(diag(ln, col, "vertices declared twice"));
                        }
                        let mut vs: Vec<String> = Vec::new();
                        for tok in rest
                            .split(|c: char| c.is_whitespace() || c == ',')
                            .filter(|t| !t.is_empty())
                        {
                            if !is_name(tok) {
                                return Err(diag(
                                    ln,
                                    col_of(raw, tok),
                                    format!("bad vertex name `{tok}`"),
                                ));
                            }
                            if vs.iter().any(|v| v == tok) {
                                return Err(diag(
                                    ln,
                                    col_of(raw, tok),
                                    format!("duplicate vertex `{tok}`"),
                                ));
                            }
                            vs.push(tok.to_string());
                        }
                        vertices = Some(vs);
                        continue;
                    }
                    let vs = vertices
                        .as_ref()
                        .ok_or_else(|| diag(ln, col, "arrow before the `vertices:` line"))?;
                    if !is_name(head) {
                        return Err(diag(ln, col, format!("bad arrow name `{head}`")));
                    }
                    if arrows.iter().any(|a| a.name == head) || vs.iter().any(|v| v == head) {
                        return Err(diag(ln, col, format!("duplicate name `{head}`")));
                    }
                    let mut toks = rest.split_whitespace();
                    let src = toks
                        .next()
                        .ok_or_else(|| diag(ln, col_of(raw, rest), "missing source vertex"))?;
                    let arrow_tok = toks.next();
                    if arrow_tok != Some("->") {
                        let c = arrow_tok.map_or(raw.len() + 1, |t| col_of(raw, t));
                        return Err(diag(ln, c, "expected `->`"));
                    }
                    let tgt = toks
                        .next()
                        .ok_or_else(|| diag(ln, raw.len() + 1, "missing target vertex"))?;
                    for v in [src, tgt] {
                        if !vs.iter().any(|x| x == v) {
                            return Err(diag(ln, col_of(raw, v), format!("unknown vertex `{v}`")));
                        }
                    }
                    let mut degree = 0;
                    if let Some(t) = toks.next() {
                        let d = t
                            .strip_prefix("deg=")
                            .ok_or_else(|| diag(ln, col_of(raw, t), "expected `deg=<n>`"))?;
                        degree = d.parse::<i64>().ok().filter(|&d| d >= 0).ok_or_else(|| {
                            diag(ln, col_of(raw, t) + 4, format!("bad degree `{d}`"))
                        })?;
                    }
                    if let Some(t) = toks.next() {
                        return Err(diag(ln, col_of(raw, t), format!("unexpected `{t}`")));
                    }
                    arrows.push(ArrowDecl {
                        name: head.to_string(),
                        src: src.into(),
                        tgt: tgt.into(),
                        degree,
                    });
                }
                Section::Relations => rel_lines.push((ln, col, body.to_string())),
                Section::Options => {
                    let (k, v) = body
                        .split_once('=')
                        .ok_or_else(|| diag(ln, col, "expected `key = value`"))?;
                    let vcol = col_of(raw, v.trim_start());
                    match k.trim() {
                        "field" => field = FieldSpec::parse(v).map_err(|m| diag(ln, vcol, m))?,
                        "max_path_len" => {
                            max_path_len = v
                                .trim()
                                .parse::<usize>()
                                .ok()
                                .filter(|&n| n > 0)
                                .ok_or_else(|| {
                                    diag(ln, vcol, "max_path_len must be a positive integer")
                                })?;
                        }
                        "cutoff" => {
                            cutoff = Some(
                                v.trim()
                                    .parse::<i64>()
                                    .map_err(|_| diag(ln, vcol, "cutoff must be an integer"))?,
                            );
                        }
                        other => return Err(diag(ln, col, format!("unknown option `{other}`"))),
                    }
                }
            }
        }
        let vertices = vertices
            .ok_or_else(|| diag(1, 1, "missing `[quiver]` section with a `vertices:` line"))?;
        let q = quiver_of(&vertices, &arrows).map_err(|e| diag(1, 1, e.to_string()))?;
        let mut relations = Vec::new();
        for (ln, col, text) in rel_lines {
            let r =
                Relation::<Rat>::parse(&q, &text).map_err(|e| diag(ln, col + e.col - 1, e.msg))?;
            r.validate(&q).map_err(|e| diag(ln, col, e.to_string()))?;
            relations.push(r.display(&q));
        }
        Ok(AlgebraFile {
            vertices,
            arrows,
            relations,
            field,
            max_path_len,
            cutoff,
        })
    }

    /// Canonical text: comments dropped, explicit degrees, all options listed.
    pub fn to_canonical(&self) -> String {
        let mut s = String::from("[quiver]\n");
        s.push_str(&format!("vertices: {}\n", self.vertices.join(" ")));
        for a in &self.arrows {
            s.push_str(&format!(
                "{}: {} -> {} deg={}\n",
                a.name, a.src, a.tgt, a.degree
            ));
        }
        s.push_str("[relations]\n");
        for r in &self.relations {
            s.push_str(r);
            s.push('\n');
        }
        s.push_str("[options]\n");
        s.push_str(&format!("field = {}\n", self.field));
        s.push_str(&format!("max_path_len = {}\n", self.max_path_len));
        if let Some(c) = self.cutoff {
            s.push_str(&format!("cutoff = {c}\n"));
        }
        s
    }

    /// The presented algebra over `F`. Fails if a coefficient is undefined in `F`
    /// or the ideal is not admissible.
    pub fn build<F: Scalar>(&self) -> CoreResult<Arc<Algebra<F>>> {
        let q = quiver_of(&self.vertices, &self.arrows)?;
        let rels = self
            .relations
            .iter()
            .map(|r| {
                Relation::<F>::parse(&q, r)
                    .map_err(|e| Error::InvalidRelation(format!("`{r}` col {}: {}", e.col, e.msg)))
            })
            .collect::<CoreResult<Vec<_>>>()?;
        let opts = BuildOptions {
            max_len: self.max_path_len,
            cutoff: self.cutoff,
        };
        Ok(Arc::new(build_algebra(q, rels, opts)?))
    }

    /// The presentation of an algebra, in file form.
    pub fn from_algebra<F: Scalar>(alg: &Algebra<F>, field: FieldSpec) -> Self {
        let q = alg.quiver();
        let vertices = q.vertices().to_vec();
        let arrows = q
            .arrows()
            .iter()
            .map(|a| ArrowDecl {
                name: a.name.clone(),
                src: vertices[a.src].clone(),
                tgt: vertices[a.tgt].clone(),
                degree: a.degree,
            })
            .collect();
        let relations = alg.relations().iter().map(|r| r.display(q)).collect();
        AlgebraFile {
            vertices,
            arrows,
            relations,
            field,
            max_path_len: BuildOptions::default().max_len,
            cutoff: alg.cutoff(),
        }
    }
}
