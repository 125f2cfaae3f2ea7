use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::quiver::{PathWord, Presentation};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, MultTable, Subspace};

/// Upper bound on the number of paths enumerated while building an algebra.
pub const PATH_LIMIT: usize = 20_000;

/// A basis element of an algebra: a morphism `src -> tgt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElem {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
    /// The element as a word in the algebra's arrows (empty for idempotents); `None`
    /// when the algebra was not built from a presentation.
    pub word: Option<Vec<usize>>,
}

/// A generator of the radical modulo its square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrowInfo {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
    pub basis: usize,
}

/// A basic finite-dimensional algebra with one primitive idempotent per vertex, given
/// by a basis of morphisms and structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTable<F: Field> {
    field: F,
    vertices: Vec<String>,
    arrows: Vec<ArrowInfo>,
    basis: Vec<BasisElem>,
    mult: Vec<Vec<(usize, F::Elem)>>,
    idempotents: Vec<usize>,
    radical_basis: Vec<usize>,
    hom_blocks: Vec<Vec<Vec<usize>>>,
    pos_in_block: Vec<usize>,
}

impl<F: Field> AlgebraTable<F> {
    /// Assembles a table and checks the unit and associativity.
    pub(crate) fn from_parts(
        field: &F,
        vertices: Vec<String>,
        arrows: Vec<ArrowInfo>,
        basis: Vec<BasisElem>,
        mult: Vec<Vec<(usize, F::Elem)>>,
        idempotents: Vec<usize>,
    ) -> Result<Self> {
        let n = vertices.len();
        let d = basis.len();
        let mut hom_blocks = vec![vec![Vec::new(); n]; n];
        let mut pos_in_block = vec![0; d];
        for (i, b) in basis.iter().enumerate() {
            pos_in_block[i] = hom_blocks[b.src][b.tgt].len();
            hom_blocks[b.src][b.tgt].push(i);
        }
        let radical_basis = (0..d).filter(|i| !idempotents.contains(i)).collect();
        let t = AlgebraTable {
            field: field.clone(),
            vertices,
            arrows,
            basis,
            mult,
            idempotents,
            radical_basis,
            hom_blocks,
            pos_in_block,
        };
        t.check_axioms()?;
        Ok(t)
    }

    fn check_axioms(&self) -> Result<()> {
        let f = &self.field;
        let d = self.dim();
        for (v, &e) in self.idempotents.iter().enumerate() {
            for (i, b) in self.basis.iter().enumerate() {
                let expect = |hit: bool| if hit { vec![(i, f.one())] } else { Vec::new() };
                if self.mul_basis(e, i) != expect(b.tgt == v).as_slice()
                    || self.mul_basis(i, e) != expect(b.src == v).as_slice()
                {
                    return Err(Error::NonAssociative);
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for k in 0..d {
                    let mut left = BTreeMap::new();
                    for (m, c) in ij {
                        for (r, x) in self.mul_basis(*m, k) {
                            accumulate(f, &mut left, *r, f.mul(c, x));
                        }
                    }
                    let mut right = BTreeMap::new();
                    for (m, c) in self.mul_basis(j, k) {
                        for (r, x) in self.mul_basis(i, *m) {
                            accumulate(f, &mut right, *r, f.mul(c, x));
                        }
                    }
                    if left != right {
                        return Err(Error::NonAssociative);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }
    pub fn arrows(&self) -> &[ArrowInfo] {
        &self.arrows
    }
    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }
    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }
    pub fn radical_basis(&self) -> &[usize] {
        &self.radical_basis
    }
    /// Basis indices of `A(src, tgt)`, the morphisms `src -> tgt`.
    pub fn hom_block(&self, src: usize, tgt: usize) -> &[usize] {
        &self.hom_blocks[src][tgt]
    }
    /// Position of a basis element inside its hom block.
    pub fn pos_in_block(&self, i: usize) -> usize {
        self.pos_in_block[i]
    }
    /// `b_i * b_j` as a sparse combination (`b_j` acts first).
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.mult[i * self.dim() + j]
    }
    pub fn is_radical(&self, i: usize) -> bool {
        !self.idempotents.contains(&i)
    }
    /// Whether every basis element carries a word in the arrows.
    pub fn has_arrow_words(&self) -> bool {
        self.basis.iter().all(|b| b.word.is_some())
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&xy, c));
                }
            }
        }
        out
    }

    pub fn to_mult_table(&self) -> MultTable<F> {
        let f = &self.field;
        let d = self.dim();
        let consts = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut v = vec![f.zero(); d];
                        for (k, c) in self.mul_basis(i, j) {
                            v[*k] = c.clone();
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let mut one = vec![f.zero(); d];
        for &e in &self.idempotents {
            one[e] = f.one();
        }
        MultTable::new(f, consts, one).expect("tables are checked on construction")
    }

    /// Span of the radical basis in basis coordinates.
    pub fn radical_subspace(&self) -> Subspace<F> {
        let f = &self.field;
        Subspace::from_vectors(
            f,
            self.dim(),
            self.radical_basis.iter().map(|&i| unit(f, self.dim(), i)),
        )
    }

    /// The opposite algebra: same basis and labels, reversed products and morphisms.
    pub fn opposite(&self) -> Self {
        let d = self.dim();
        let n = self.vertex_count();
        let mut mult = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                mult[i * d + j] = self.mult[j * d + i].clone();
            }
        }
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElem {
                src: b.tgt,
                tgt: b.src,
                label: b.label.clone(),
                word: b.word.as_ref().map(|w| w.iter().rev().copied().collect()),
            })
            .collect();
        let arrows = self
            .arrows
            .iter()
            .map(|a| ArrowInfo {
                name: a.name.clone(),
                src: a.tgt,
                tgt: a.src,
                basis: a.basis,
            })
            .collect();
        let mut hom_blocks = vec![vec![Vec::new(); n]; n];
        for (v, row) in hom_blocks.iter_mut().enumerate() {
            for (w, cell) in row.iter_mut().enumerate() {
                *cell = self.hom_blocks[w][v].clone();
            }
        }
        AlgebraTable {
            field: self.field.clone(),
            vertices: self.vertices.clone(),
            arrows,
            basis,
            mult,
            idempotents: self.idempotents.clone(),
            radical_basis: self.radical_basis.clone(),
            hom_blocks,
            pos_in_block: self.pos_in_block.clone(),
        }
    }

    /// The full subcategory on the given vertices, `eAe` for `e` the sum of their
    /// idempotents, together with the basis indices of its elements inside `A`.
    ///
    /// Its arrows are a basis of `rad/rad²` chosen among basis elements; basis
    /// elements other than idempotents and arrows carry no word.
    pub fn full_subcategory(&self, vertices: &[usize]) -> Result<(Self, Vec<usize>)> {
        let f = &self.field;
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() || keep.iter().any(|&v| v >= self.vertex_count()) {
            return Err(Error::InvalidOrder("vertex subset".to_string()));
        }
        let local = |v: usize| keep.iter().position(|&x| x == v);
        let embedding: Vec<usize> = (0..self.dim())
            .filter(|&i| local(self.basis[i].src).is_some() && local(self.basis[i].tgt).is_some())
            .collect();
        let back = |i: usize| embedding.iter().position(|&x| x == i);
        let d = embedding.len();
        let mut mult = vec![Vec::new(); d * d];
        for (a, &i) in embedding.iter().enumerate() {
            for (b, &j) in embedding.iter().enumerate() {
                mult[a * d + b] = self
                    .mul_basis(i, j)
                    .iter()
                    .map(|(k, c)| (back(*k).expect("closed under products"), c.clone()))
                    .collect();
            }
        }
        let idempotents: Vec<usize> = keep
            .iter()
            .map(|&v| back(self.idempotents[v]).unwrap())
            .collect();
        // rad² inside the subalgebra, then a complement by basis elements.
        let rad: Vec<usize> = (0..d).filter(|i| !idempotents.contains(i)).collect();
        let squares = rad.iter().flat_map(|&i| {
            let mult = &mult;
            rad.iter().map(move |&j| {
                let mut v = vec![f.zero(); d];
                for (k, c) in &mult[i * d + j] {
                    v[*k] = c.clone();
                }
                v
            })
        });
        let mut span = Subspace::from_vectors(f, d, squares);
        let mut gens = Vec::new();
        for &i in &rad {
            let e = unit(f, d, i);
            if !span.contains_vector(&e) {
                span = span.sum(&Subspace::from_vectors(f, d, [e]))?;
                gens.push(i);
            }
        }
        let basis: Vec<BasisElem> = embedding
            .iter()
            .enumerate()
            .map(|(a, &i)| {
                let b = &self.basis[i];
                let word = if idempotents.contains(&a) {
                    Some(Vec::new())
                } else {
                    gens.iter().position(|&g| g == a).map(|k| vec![k])
                };
                BasisElem {
                    src: local(b.src).unwrap(),
                    tgt: local(b.tgt).unwrap(),
                    label: b.label.clone(),
                    word,
                }
            })
            .collect();
        let arrows = gens
            .iter()
            .map(|&g| ArrowInfo {
                name: basis[g].label.clone(),
                src: basis[g].src,
                tgt: basis[g].tgt,
                basis: g,
            })
            .collect();
        let names = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        let sub = Self::from_parts(f, names, arrows, basis, mult, idempotents)?;
        Ok((sub, embedding))
    }

    /// Matrix of left multiplication by `b_i` restricted to `A(v, -)`, as a map
    /// `A(v, src b_i) -> A(v, tgt b_i)` in hom-block coordinates.
    pub fn left_action_on_column(&self, i: usize, v: usize) -> Matrix<F> {
        let b = &self.basis[i];
        let from = self.hom_block(v, b.src);
        let to = self.hom_block(v, b.tgt);
        let mut m = Matrix::zeros(&self.field, to.len(), from.len());
        for (col, &j) in from.iter().enumerate() {
            for (k, c) in self.mul_basis(i, j) {
                m.set(self.pos_in_block[*k], col, c.clone());
            }
        }
        m
    }
}

pub(crate) fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

fn accumulate<F: Field>(f: &F, acc: &mut BTreeMap<usize, F::Elem>, k: usize, x: F::Elem) {
    if f.is_zero(&x) {
        return;
    }
    let entry = acc.entry(k).or_insert_with(|| f.zero());
    *entry = f.add(entry, &x);
    if f.is_zero(entry) {
        acc.remove(&k);
    }
}

/// Echelon rows keyed by pivot; a row's other entries sit in later columns.
struct SparseEchelon<F: Field> {
    field: F,
    rows: BTreeMap<usize, Vec<(usize, F::Elem)>>,
}

impl<F: Field> SparseEchelon<F> {
    fn reduce(&self, mut v: BTreeMap<usize, F::Elem>) -> BTreeMap<usize, F::Elem> {
        let f = &self.field;
        let mut cursor = 0;
        loop {
            let Some(k) = v.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k)) else {
                break;
            };
            let c = v.remove(&k).unwrap();
            for (col, x) in &self.rows[&k][1..] {
                accumulate(f, &mut v, *col, f.neg(&f.mul(&c, x)));
            }
            cursor = k + 1;
        }
        v
    }

    fn insert(&mut self, v: BTreeMap<usize, F::Elem>) {
        let f = &self.field;
        let v = self.reduce(v);
        let Some((&p, lead)) = v.iter().next() else {
            return;
        };
        let inv = f.inv(lead).unwrap();
        let row = v.iter().map(|(k, x)| (*k, f.mul(x, &inv))).collect();
        self.rows.insert(p, row);
    }
}

fn concat(a: &PathWord, b: &PathWord, quiver: &super::quiver::Quiver) -> PathWord {
    debug_assert_eq!(a.src(), b.tgt());
    if a.is_trivial() {
        return b.clone();
    }
    if b.is_trivial() {
        return a.clone();
    }
    let mut arrows = a.arrows().to_vec();
    arrows.extend_from_slice(b.arrows());
    PathWord::new(quiver, arrows).expect("composable")
}

/// Deglex key: shorter words first, then lexicographic in arrow indices.
type WordKey = (usize, Vec<usize>, usize);

fn key(w: &PathWord) -> WordKey {
    (w.len(), w.arrows().to_vec(), w.src())
}

/// Builds `kQ/I` as a basis of normal words with structure constants.
///
/// For each length `m` up to the cap, the ideal is spanned modulo paths longer than
/// `m` and reduced with the largest word as pivot. The first `m` at which every path
/// of length `m` reduces to zero fixes the algebra; the normal words of length below
/// `m` form the basis.
pub fn build_algebra<F: Field>(
    pres: &Presentation,
    field: &F,
    length_cap: Option<usize>,
) -> Result<AlgebraTable<F>> {
    let cap = length_cap.unwrap_or_else(|| pres.default_length_cap());
    let quiver = pres.quiver();
    let mut layers: Vec<Vec<PathWord>> =
        vec![(0..quiver.vertex_count()).map(PathWord::trivial).collect()];
    for m in 1..=cap {
        let mut next = Vec::new();
        for p in &layers[m - 1] {
            for (b, arrow) in quiver.arrows().iter().enumerate() {
                if arrow.tgt != p.src() {
                    continue;
                }
                let mut arrows = p.arrows().to_vec();
                arrows.push(b);
                next.push(PathWord::new(quiver, arrows).unwrap());
            }
        }
        next.sort_by_key(key);
        layers.push(next);
        let total: usize = layers.iter().map(Vec::len).sum();
        if total > PATH_LIMIT {
            return Err(Error::TooManyPaths(PATH_LIMIT));
        }
        if let Some(table) = try_length(pres, field, &layers, m)? {
            return Ok(table);
        }
    }
    Err(Error::NotFiniteDimensional(cap))
}

fn try_length<F: Field>(
    pres: &Presentation,
    field: &F,
    layers: &[Vec<PathWord>],
    m: usize,
) -> Result<Option<AlgebraTable<F>>> {
    let quiver = pres.quiver();
    let ascending: Vec<&PathWord> = layers.iter().flatten().collect();
    let total = ascending.len();
    // Larger words get smaller coordinates so that they become pivots.
    let coord: BTreeMap<WordKey, usize> = ascending
        .iter()
        .enumerate()
        .map(|(i, w)| (key(w), total - 1 - i))
        .collect();
    let mut ech = SparseEchelon {
        field: field.clone(),
        rows: BTreeMap::new(),
    };
    for rel in pres.relations() {
        let shortest = rel.terms().iter().map(|(_, w)| w.len()).min().unwrap();
        if shortest > m {
            continue;
        }
        for lu in 0..=m - shortest {
            for lv in 0..=m - shortest - lu {
                for u in layers[lu].iter().filter(|u| u.src() == rel.tgt()) {
                    for v in layers[lv].iter().filter(|v| v.tgt() == rel.src()) {
                        let mut elem = BTreeMap::new();
                        for (c, w) in rel.terms() {
                            if w.len() + lu + lv > m {
                                continue;
                            }
                            let word = concat(&concat(u, w, quiver), v, quiver);
                            accumulate(field, &mut elem, coord[&key(&word)], field.from_i64(*c));
                        }
                        ech.insert(elem);
                    }
                }
            }
        }
    }
    if !layers[m].iter().all(|w| ech.rows.contains_key(&coord[&key(w)])) {
        return Ok(None);
    }
    // Basis: idempotents, arrows, then the remaining normal words in deglex order.
    let mut words: Vec<PathWord> = layers[0].clone();
    words.extend((0..quiver.arrows().len()).map(|a| PathWord::new(quiver, vec![a]).unwrap()));
    for layer in layers.iter().take(m).skip(2) {
        for w in layer {
            if !ech.rows.contains_key(&coord[&key(w)]) {
                words.push(w.clone());
            }
        }
    }
    let index_of: BTreeMap<usize, usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (coord[&key(w)], i))
        .collect();
    let d = words.len();
    let mut mult = vec![Vec::new(); d * d];
    for (i, a) in words.iter().enumerate() {
        for (j, b) in words.iter().enumerate() {
            if a.src() != b.tgt() || a.len() + b.len() >= m {
                continue;
            }
            let w = concat(a, b, quiver);
            let mut v = BTreeMap::new();
            v.insert(coord[&key(&w)], field.one());
            let r = ech.reduce(v);
            let mut entries: Vec<(usize, F::Elem)> =
                r.into_iter().map(|(k, c)| (index_of[&k], c)).collect();
            entries.sort_by_key(|e| e.0);
            mult[i * d + j] = entries;
        }
    }
    let basis = words
        .iter()
        .map(|w| BasisElem {
            src: w.src(),
            tgt: w.tgt(),
            label: w.display(quiver),
            word: Some(w.arrows().to_vec()),
        })
        .collect();
    let arrows = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| ArrowInfo {
            name: arrow.name.clone(),
            src: arrow.src,
            tgt: arrow.tgt,
            basis: quiver.vertex_count() + a,
        })
        .collect();
    let idempotents = (0..quiver.vertex_count()).collect();
    AlgebraTable::from_parts(
        field,
        quiver.vertices().to_vec(),
        arrows,
        basis,
        mult,
        idempotents,
    )
    .map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{algebra_radical, PrimeField, Rationals};
    use crate::fixtures::*;
    use alloc::string::String;

    /// Independent reduction: rewrite factors by oriented rules until stable.
    /// `None` stands for the zero path.
    fn rewrite(word: &[&str], rules: &[(&[&str], Option<&[&str]>)]) -> Option<Vec<String>> {
        let mut w: Vec<String> = word.iter().map(|s| String::from(*s)).collect();
        'outer: loop {
            for (lhs, rhs) in rules {
                if lhs.len() > w.len() {
                    continue;
                }
                for s in 0..=w.len() - lhs.len() {
                    if w[s..s + lhs.len()].iter().zip(lhs.iter()).all(|(a, b)| a == b) {
                        let rhs = (*rhs)?;
                        let mut next: Vec<String> = w[..s].to_vec();
                        next.extend(rhs.iter().map(|x| String::from(*x)));
                        next.extend_from_slice(&w[s + lhs.len()..]);
                        w = next;
                        continue 'outer;
                    }
                }
            }
            return Some(w);
        }
    }

    /// Compares every product in the table against the rewriting oracle.
    fn check_against_oracle(p: &Presentation, rules: &[(&[&str], Option<&[&str]>)], dim: usize) {
        let a = q(p);
        assert_eq!(a.dim(), dim);
        let names: Vec<&str> = p.quiver().arrows().iter().map(|x| x.name.as_str()).collect();
        let word_of = |i: usize| -> Vec<&str> { a.basis()[i].word.as_ref().unwrap().iter().map(|&k| names[k]).collect() };
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let (bi, bj) = (&a.basis()[i], &a.basis()[j]);
                let got = a.mul_basis(i, j);
                if bi.src != bj.tgt {
                    assert!(got.is_empty());
                    continue;
                }
                let mut w = word_of(i);
                w.extend(word_of(j));
                match rewrite(&w, rules) {
                    None => assert!(got.is_empty(), "{} * {}", bi.label, bj.label),
                    Some(nf) => {
                        assert_eq!(got.len(), 1);
                        let (k, c) = &got[0];
                        assert!(Rationals.is_one(c));
                        if nf.is_empty() {
                            assert_eq!(*k, if i == j { i } else if a.idempotents().contains(&i) { j } else { i });
                        } else {
                            assert_eq!(word_of(*k), nf);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn e3_2_basis_and_products() {
        check_against_oracle(&e3_2(), &[(&["a", "d"], None), (&["d", "d"], None)], 4);
        let a = q(&e3_2());
        let labels: Vec<&str> = a.basis().iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, ["e_x", "e_y", "d", "a"]);
    }

    #[test]
    fn e3_1_identifies_parallel_paths() {
        let rules: &[(&[&str], Option<&[&str]>)] = &[
            (&["d", "d"], None),
            (&["d", "g"], None),
            (&["d", "e"], None),
            (&["e", "b"], Some(&["g", "a"])),
        ];
        check_against_oracle(&e3_1(), rules, 10);
        let a = q(&e3_1());
        assert_eq!(a.hom_block(0, 3).len(), 1);
    }

    #[test]
    fn e4_1_and_e4_2() {
        let rules: &[(&[&str], Option<&[&str]>)] = &[
            (&["d", "b"], Some(&["b", "r"])),
            (&["d", "d"], None),
            (&["r", "r"], None),
            (&["d", "a"], None),
        ];
        check_against_oracle(&e4_1(), rules, 8);
        let a = q(&e4_1());
        let y = 1;
        let column: usize = (0..3).map(|w| a.hom_block(y, w).len()).sum();
        assert_eq!(column, 4);
        let rules: &[(&[&str], Option<&[&str]>)] =
            &[(&["d", "a"], Some(&["a", "r"])), (&["d", "d"], None), (&["r", "r"], None)];
        check_against_oracle(&e4_2(), rules, 6);
        check_against_oracle(&two_cycle(), &[(&["b", "a", "b"], None)], 7);
    }

    #[test]
    fn blocks_partition_the_basis() {
        for p in [e3_1(), e3_2(), e4_1(), e4_2(), two_cycle(), no_witness(), hereditary(), dual_numbers()] {
            let a = q(&p);
            let n = a.vertex_count();
            let total: usize = (0..n).flat_map(|v| (0..n).map(move |w| (v, w))).map(|(v, w)| a.hom_block(v, w).len()).sum();
            assert_eq!(total, a.dim());
            assert!(a.to_mult_table().is_nilpotent(&a.radical_subspace()));
        }
    }

    #[test]
    fn radical_of_e3_2_is_the_arrow_span() {
        let a = q(&e3_2());
        let r = algebra_radical(&a.to_mult_table());
        assert_eq!(r, a.radical_subspace());
        assert_eq!(r.dim(), 2);
        let mt = a.to_mult_table();
        // J² = 0 here: both products of arrows vanish.
        assert!(a.mul_basis(2, 2).is_empty() && a.mul_basis(3, 2).is_empty());
        assert!(algebra_radical(&mt.quotient(&r).unwrap()).is_zero());
    }

    #[test]
    fn radical_agrees_across_fields() {
        for p in [e3_1(), e3_2(), e4_1(), e4_2(), two_cycle()] {
            for prime in [2, 3, 5] {
                let f = PrimeField::new(prime).unwrap();
                let a = build_algebra(&p, &f, None).unwrap();
                let r = algebra_radical(&a.to_mult_table());
                assert_eq!(r, a.radical_subspace(), "p = {prime}");
            }
            let a = q(&p);
            assert_eq!(algebra_radical(&a.to_mult_table()), a.radical_subspace());
        }
    }

    #[test]
    fn opposite_algebra() {
        let d = q(&dual_numbers());
        assert_eq!(d.opposite(), d);
        let a = q(&e3_1());
        assert_eq!(a.opposite().opposite(), a);
        let b = q(&e4_1());
        let op = b.opposite();
        assert_eq!(op.hom_block(2, 0).len(), b.hom_block(0, 2).len());
        assert_eq!(op.hom_block(2, 0).len(), 1);
    }

    #[test]
    fn infinite_dimensional_is_reported() {
        let p = pres(&["x"], &[("d", "x", "x")], &[]);
        assert_eq!(build_algebra(&p, &Rationals, Some(6)), Err(Error::NotFiniteDimensional(6)));
        let p = pres(&["x"], &[("d", "x", "x")], &[&[(1, "d*d*d")]]);
        assert_eq!(build_algebra(&p, &Rationals, None).unwrap().dim(), 3);
    }

    #[test]
    fn full_subcategory_of_e3_1() {
        let a = q(&e3_1());
        let (b, emb) = a.full_subcategory(&[1, 2, 3]).unwrap();
        assert_eq!(b.dim(), 6);
        assert_eq!(emb.len(), 6);
        assert_eq!(b.arrows().len(), 3);
        let (whole, _) = a.full_subcategory(&[0, 1, 2, 3]).unwrap();
        assert_eq!(whole.dim(), a.dim());
        assert_eq!(whole.arrows().len(), 5);
    }
}
