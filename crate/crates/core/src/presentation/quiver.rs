use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// Vertices and arrows. Loops and oriented cycles are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// `arrows` are `(name, src, tgt)` by vertex name. Vertex and arrow names share
    /// one namespace.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let mut q = Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
        };
        for v in vertices {
            q.add_vertex(v.as_ref())?;
        }
        for (name, s, t) in arrows {
            q.add_arrow(name.as_ref(), s.as_ref(), t.as_ref())?;
        }
        Ok(q)
    }

    fn name_taken(&self, name: &str) -> bool {
        self.vertices.iter().any(|v| v == name) || self.arrows.iter().any(|a| a.name == name)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        if self.name_taken(name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        self.vertices.push(name.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, name: &str, src: &str, tgt: &str) -> Result<usize> {
        if self.name_taken(name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        let src = self.vertex_index(src)?;
        let tgt = self.vertex_index(tgt)?;
        self.arrows.push(Arrow {
            name: name.to_string(),
            src,
            tgt,
        });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    /// Parses `a1*a2*...*am`. Composition is right to left.
    pub fn parse_word(&self, text: &str) -> Result<PathWord> {
        let arrows = text
            .split('*')
            .map(|s| self.arrow_index(s.trim()))
            .collect::<Result<Vec<_>>>()?;
        PathWord::new(self, arrows).ok_or_else(|| Error::NotComposable(text.to_string()))
    }
}

/// A path: the trivial path at a vertex, or arrows `a1 * ... * am` where `am` is
/// traversed first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    src: usize,
    tgt: usize,
    arrows: Vec<usize>,
}

impl PathWord {
    pub fn trivial(vertex: usize) -> Self {
        PathWord {
            src: vertex,
            tgt: vertex,
            arrows: Vec::new(),
        }
    }

    /// `None` unless `src(a_i) = tgt(a_{i+1})` throughout and the list is nonempty.
    pub fn new(quiver: &Quiver, arrows: Vec<usize>) -> Option<Self> {
        let first = *arrows.first()?;
        let last = *arrows.last()?;
        let ok = arrows.iter().all(|&a| a < quiver.arrows.len())
            && arrows
                .windows(2)
                .all(|w| quiver.arrows[w[0]].src == quiver.arrows[w[1]].tgt);
        ok.then(|| PathWord {
            src: quiver.arrows[last].src,
            tgt: quiver.arrows[first].tgt,
            arrows,
        })
    }

    pub fn src(&self) -> usize {
        self.src
    }
    pub fn tgt(&self) -> usize {
        self.tgt
    }
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            return alloc::format!("e_{}", quiver.vertices[self.src]);
        }
        let names: Vec<&str> = self
            .arrows
            .iter()
            .map(|&a| quiver.arrows[a].name.as_str())
            .collect();
        names.join("*")
    }
}

/// A linear combination of parallel paths of length at least two, set to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationElem {
    terms: Vec<(i64, PathWord)>,
}

impl RelationElem {
    pub fn terms(&self) -> &[(i64, PathWord)] {
        &self.terms
    }
    pub fn src(&self) -> usize {
        self.terms[0].1.src
    }
    pub fn tgt(&self) -> usize {
        self.terms[0].1.tgt
    }
}

/// A total order on vertices, stored from smallest to largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOrder {
    ascending: Vec<usize>,
    rank: Vec<usize>,
}

impl LinearOrder {
    pub fn new(ascending: Vec<usize>) -> Result<Self> {
        let n = ascending.len();
        let mut rank = alloc::vec![usize::MAX; n];
        for (r, &v) in ascending.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::InvalidOrder(alloc::format!(
                    "{ascending:?} is not a permutation"
                )));
            }
            rank[v] = r;
        }
        Ok(LinearOrder { ascending, rank })
    }

    /// Parses `x < y < z` or `z > y > x` against the given vertex names.
    pub fn parse<S: AsRef<str>>(text: &str, vertices: &[S]) -> Result<Self> {
        let has_lt = text.contains('<');
        let has_gt = text.contains('>');
        if has_lt && has_gt {
            return Err(Error::InvalidOrder("mixes `<` and `>`".to_string()));
        }
        let sep = if has_gt { '>' } else { '<' };
        let mut seq = Vec::new();
        for name in text.split(sep) {
            let name = name.trim();
            let idx = vertices
                .iter()
                .position(|v| v.as_ref() == name)
                .ok_or_else(|| Error::InvalidOrder(alloc::format!("unknown vertex `{name}`")))?;
            seq.push(idx);
        }
        if has_gt {
            seq.reverse();
        }
        if seq.len() != vertices.len() {
            return Err(Error::InvalidOrder(alloc::format!(
                "names {} of {} vertices",
                seq.len(),
                vertices.len()
            )));
        }
        Self::new(seq)
    }

    pub fn len(&self) -> usize {
        self.ascending.len()
    }
    pub fn is_empty(&self) -> bool {
        self.ascending.is_empty()
    }
    pub fn ascending(&self) -> &[usize] {
        &self.ascending
    }
    pub fn descending(&self) -> impl Iterator<Item = usize> + '_ {
        self.ascending.iter().rev().copied()
    }
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }
    pub fn less(&self, v: usize, w: usize) -> bool {
        self.rank[v] < self.rank[w]
    }

    pub fn display<S: AsRef<str>>(&self, vertices: &[S]) -> String {
        let names: Vec<&str> = self.ascending.iter().map(|&v| vertices[v].as_ref()).collect();
        names.join(" < ")
    }

    /// Every linear order on `n` vertices, in lexicographic order of the ascending
    /// sequence.
    pub fn all(n: usize) -> Vec<LinearOrder> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = alloc::vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<LinearOrder>) {
            if cur.len() == n {
                out.push(LinearOrder::new(cur.clone()).unwrap());
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

/// A quiver with relations over a field, plus an optional preferred order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<RelationElem>,
    declared_order: Option<LinearOrder>,
}

impl Presentation {
    /// Relations are lists of `(coefficient, word)`; words must be composable, parallel
    /// and of length at least two.
    pub fn new(
        field: FieldSpec,
        quiver: Quiver,
        relations: Vec<Vec<(i64, PathWord)>>,
        declared_order: Option<LinearOrder>,
    ) -> Result<Self> {
        let field = field.validate()?;
        let mut rels = Vec::with_capacity(relations.len());
        for (index, terms) in relations.into_iter().enumerate() {
            let Some((_, first)) = terms.first() else {
                return Err(Error::EmptyRelation { index });
            };
            let (s, t) = (first.src, first.tgt);
            for (_, w) in &terms {
                if w.len() < 2 {
                    return Err(Error::ShortRelationTerm {
                        index,
                        term: w.display(&quiver),
                    });
                }
                if w.src != s || w.tgt != t {
                    return Err(Error::NonParallelTerms { index });
                }
            }
            rels.push(RelationElem { terms });
        }
        if let Some(o) = &declared_order {
            if o.len() != quiver.vertex_count() {
                return Err(Error::InvalidOrder(
                    "declared order does not cover every vertex".to_string(),
                ));
            }
        }
        Ok(Presentation {
            field,
            quiver,
            relations: rels,
            declared_order,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[RelationElem] {
        &self.relations
    }
    pub fn declared_order(&self) -> Option<&LinearOrder> {
        self.declared_order.as_ref()
    }

    pub fn with_field(&self, field: FieldSpec) -> Result<Self> {
        let mut p = self.clone();
        p.field = field.validate()?;
        Ok(p)
    }

    /// Twice the number of arrows and vertices, plus the longest relation term.
    pub fn default_length_cap(&self) -> usize {
        let longest = self
            .relations
            .iter()
            .flat_map(|r| r.terms.iter().map(|(_, w)| w.len()))
            .max()
            .unwrap_or(0);
        2 * (self.quiver.arrows.len() + self.quiver.vertices.len()) + longest
    }
}
