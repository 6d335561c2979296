//! The Murphy cellular basis `m_uv = v_u* m_λ v_v`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::diagrams::{enumerate_diagrams, word_diagram, PlanarDiagram, TLElement};
use crate::exactring::IntPoly;
use crate::report::Report;
use crate::tableaux::{partitions_of, tableaux, HalfDiagram, Partition, UpDownTableau};
use crate::Error;

/// A word `e_{i_1} e_{i_2} ⋯` in the generators, left to right.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorWord {
    pub n: usize,
    pub letters: Vec<usize>,
}

impl GeneratorWord {
    pub fn empty(n: usize) -> Self {
        GeneratorWord { n, letters: Vec::new() }
    }

    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self, Error> {
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, max: n.saturating_sub(1) });
        }
        Ok(GeneratorWord { n, letters })
    }

    pub fn reversed(&self) -> Self {
        GeneratorWord { n: self.n, letters: self.letters.iter().rev().copied().collect() }
    }

    pub fn concat(&self, other: &GeneratorWord) -> Self {
        assert_eq!(self.n, other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GeneratorWord { n: self.n, letters }
    }

    /// The diagram of the word and the number of loops it closes.
    pub fn diagram(&self) -> (PlanarDiagram, usize) {
        word_diagram(self.n, &self.letters).expect("letters validated on construction")
    }

    pub fn element(&self) -> TLElement<IntPoly> {
        let (d, loops) = self.diagram();
        TLElement::term(d, IntPoly::x_pow(loops))
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("e{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `w_{i,j}`: `e_i ⋯ e_{j-1}` if `i < j`, `e_{i-1} ⋯ e_j` if `j < i`, else empty.
pub fn w_word(n: usize, i: usize, j: usize) -> Result<GeneratorWord, Error> {
    for k in [i, j] {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
    }
    let letters = if i < j {
        (i..j).collect()
    } else if j < i {
        (j..i).rev().collect()
    } else {
        Vec::new()
    };
    GeneratorWord::new(n, letters)
}

/// `e_1 e_3 ⋯ e_{2f-1}`.
pub fn m_lambda_word(lambda: Partition) -> GeneratorWord {
    GeneratorWord { n: lambda.n(), letters: (0..lambda.f).map(|k| 2 * k + 1).collect() }
}

pub fn m_lambda(lambda: Partition) -> TLElement<IntPoly> {
    m_lambda_word(lambda).element()
}

/// The recursive word `v_t`: each arc step `k` landing on `f` arcs
/// prepends `w_{2f,k}`.
pub fn v_word(t: &UpDownTableau) -> GeneratorWord {
    let n = t.n();
    let mut letters: Vec<usize> = Vec::new();
    for k in 1..=n {
        if t.arc_step(k) {
            let f = t.fseq()[k];
            let mut next: Vec<usize> = (2 * f..k).collect();
            next.extend_from_slice(&letters);
            letters = next;
        }
    }
    GeneratorWord { n, letters }
}

/// `v_t*`, built by the mirrored recursion (appending `w_{k,2f}`).
pub fn vstar_word(t: &UpDownTableau) -> GeneratorWord {
    let n = t.n();
    let mut letters: Vec<usize> = Vec::new();
    for k in 1..=n {
        if t.arc_step(k) {
            let f = t.fseq()[k];
            letters.extend((2 * f..k).rev());
        }
    }
    GeneratorWord { n, letters }
}

/// Index `(λ, u, v)` of a Murphy basis element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MurphyIndex {
    pub lambda: Partition,
    pub u: UpDownTableau,
    pub v: UpDownTableau,
}

impl MurphyIndex {
    pub fn new(u: UpDownTableau, v: UpDownTableau) -> Result<Self, Error> {
        if u.shape() != v.shape() {
            return Err(Error::InvalidTableau(format!("shapes {} and {} differ", u.shape(), v.shape())));
        }
        Ok(MurphyIndex { lambda: u.shape(), u, v })
    }

    pub fn word(&self) -> GeneratorWord {
        vstar_word(&self.u).concat(&m_lambda_word(self.lambda)).concat(&v_word(&self.v))
    }
}

impl fmt::Display for MurphyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m[{}; {:?}, {:?}]", self.lambda, self.u.fseq(), self.v.fseq())
    }
}

pub fn murphy_element(idx: &MurphyIndex) -> TLElement<IntPoly> {
    idx.word().element()
}

/// The diagram of `m_λ v_t`.
pub fn m_lambda_v(t: &UpDownTableau) -> (PlanarDiagram, usize) {
    m_lambda_word(t.shape()).concat(&v_word(t)).diagram()
}

/// The bottom half of the diagram `m_λ v_t`.
pub fn half_diagram_of(t: &UpDownTableau) -> HalfDiagram {
    let (d, _) = m_lambda_v(t);
    let (arcs, _) = d.bottom_half();
    HalfDiagram::from_arcs(t.n(), arcs).expect("bottom half of a planar diagram is planar")
}

/// The Murphy basis of `A_n` as a lookup from diagrams to indices.
pub struct MurphyBasis {
    n: usize,
    lookup: HashMap<PlanarDiagram, (Partition, u32, u32)>,
}

impl MurphyBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.lookup.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lookup.is_empty()
    }

    /// `(λ, position of u, position of v)` in the canonical tableau order.
    pub fn index_of(&self, d: &PlanarDiagram) -> Option<(Partition, usize, usize)> {
        self.lookup.get(d).map(|&(l, u, v)| (l, u as usize, v as usize))
    }

    pub fn murphy_index_of(&self, d: &PlanarDiagram) -> Option<MurphyIndex> {
        self.index_of(d).map(|(lambda, u, v)| {
            let list = tableaux(lambda);
            MurphyIndex { lambda, u: list[u].clone(), v: list[v].clone() }
        })
    }
}

/// Evaluates every `m_uv`, checking that each is a single diagram with
/// coefficient 1 and that they are pairwise distinct and exhaust the
/// `C_n` diagrams.
pub fn murphy_bijection(n: usize) -> Result<MurphyBasis, Error> {
    let parts = partitions_of(n);
    let per_lambda: Vec<Result<Vec<(PlanarDiagram, u32, u32)>, Error>> = parts
        .par_iter()
        .map(|&lambda| {
            let list = tableaux(lambda);
            let mw = m_lambda_word(lambda);
            let left: Vec<(PlanarDiagram, usize)> =
                list.iter().map(|u| vstar_word(u).concat(&mw).diagram()).collect();
            let right: Vec<(PlanarDiagram, usize)> = list.iter().map(|v| v_word(v).diagram()).collect();
            let mut out = Vec::with_capacity(list.len() * list.len());
            for (ui, (a, la)) in left.iter().enumerate() {
                for (vi, (b, lb)) in right.iter().enumerate() {
                    let (d, l) = a.compose_same(b);
                    if la + lb + l != 0 {
                        let idx = MurphyIndex { lambda, u: list[ui].clone(), v: list[vi].clone() };
                        return Err(Error::NonzeroLoops(idx.to_string()));
                    }
                    out.push((d, ui as u32, vi as u32));
                }
            }
            Ok(out)
        })
        .collect();
    let mut lookup = HashMap::new();
    for (lambda, res) in parts.iter().zip(per_lambda) {
        for (d, u, v) in res? {
            if lookup.insert(d, (*lambda, u, v)).is_some() {
                return Err(Error::MurphyCollision(d.to_string()));
            }
        }
    }
    let expected = crate::diagrams::catalan(n);
    if lookup.len() as u128 != expected {
        return Err(Error::MurphyCollision(format!("{} elements, expected {expected}", lookup.len())));
    }
    Ok(MurphyBasis { n, lookup })
}

pub fn arc_grade(d: &PlanarDiagram) -> usize {
    d.arc_grade()
}

/// `m_uv* = m_vu` for every basis element.
pub fn star_symmetry_check(n: usize) -> Report {
    let mut rep = Report::new(format!("Murphy star symmetry, n = {n}"));
    for lambda in partitions_of(n) {
        let list = tableaux(lambda);
        for u in list.iter() {
            for v in list.iter() {
                let a = murphy_element(&MurphyIndex { lambda, u: u.clone(), v: v.clone() });
                let b = murphy_element(&MurphyIndex { lambda, u: v.clone(), v: u.clone() });
                rep.check(a.star() == b, || format!("{lambda} u={:?} v={:?}", u.fseq(), v.fseq()));
            }
        }
    }
    rep
}

/// `arc_grade(ab) >= max(arc_grade(a), arc_grade(b))` for all diagram pairs.
pub fn ideal_property_check(n: usize) -> Report {
    let mut rep = Report::new(format!("arc filtration is two-sided, n = {n}"));
    let all = enumerate_diagrams(n);
    let bad: Vec<String> = all
        .par_iter()
        .flat_map_iter(|a| {
            all.iter().filter_map(move |b| {
                let (d, _) = a.compose_same(b);
                (d.arc_grade() < a.arc_grade().max(b.arc_grade())).then(|| format!("{a} * {b}"))
            })
        })
        .collect();
    rep.check(bad.is_empty(), || format!("{} violations, first {}", bad.len(), bad[0]));
    rep
}

/// For every `u` of shape `λ = (f, ·)` and every diagram `b`, the diagram of
/// `m_λ v_u b` is either `m_λ v_v` for some `v`, or a basis element
/// `m_rt` of a more dominant shape with `v_r` a word in `e_{2f+1}, …`.
pub fn triangular_right_action_check(n: usize, basis: &MurphyBasis) -> Report {
    let mut rep = Report::new(format!("triangular right action, n = {n}"));
    let all = enumerate_diagrams(n);
    for lambda in partitions_of(n) {
        let list = tableaux(lambda);
        for u in list.iter() {
            let (base, _) = m_lambda_v(u);
            for b in &all {
                let (d, _) = base.compose_same(b);
                let Some(idx) = basis.murphy_index_of(&d) else {
                    rep.fail(format!("{d} missing from basis"));
                    continue;
                };
                if idx.lambda == lambda {
                    rep.check(idx.u == list[0], || format!("{lambda} u={:?} b={b}: lands at {idx}", u.fseq()));
                } else {
                    let ok = idx.lambda.f > lambda.f
                        && v_word(&idx.u).letters.iter().all(|&i| i > 2 * lambda.f);
                    rep.check(ok, || format!("{lambda} u={:?} b={b}: leaks to {idx}", u.fseq()));
                }
            }
        }
    }
    rep
}

/// For tableaux `s ≠ t` of the same shape whose shapes agree except at
/// `k - 1`: `s` has one arc fewer there iff `v_s = v_t e_{k-1}`.
pub fn restriction_criterion_check(n: usize) -> Report {
    let mut rep = Report::new(format!("restriction criterion, n = {n}"));
    for lambda in partitions_of(n) {
        let list = tableaux(lambda);
        for s in list.iter() {
            for t in list.iter() {
                if s == t {
                    continue;
                }
                let diff: Vec<usize> = (0..=n).filter(|&i| s.fseq()[i] != t.fseq()[i]).collect();
                if diff.len() != 1 || diff[0] < 1 || diff[0] + 1 >= n {
                    continue;
                }
                let k = diff[0] + 1;
                let cond = s.fseq()[k - 1] + 1 == t.fseq()[k - 1];
                let vs = v_word(s).element();
                let vte = v_word(t).concat(&GeneratorWord { n, letters: vec![k - 1] }).element();
                let eq = vs == vte;
                rep.check(cond == eq, || {
                    format!("s={:?} t={:?} k={k}: condition {cond}, v_s = v_t e_(k-1) {eq}", s.fseq(), t.fseq())
                });
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_tableaux;

    fn gen(n: usize, i: usize) -> TLElement<IntPoly> {
        TLElement::generator(n, i).unwrap()
    }

    #[test]
    fn w_words() {
        assert!(w_word(4, 2, 2).unwrap().letters.is_empty());
        assert_eq!(w_word(4, 2, 4).unwrap().letters, vec![2, 3]);
        assert_eq!(w_word(4, 4, 2).unwrap().letters, vec![3, 2]);
        assert!(w_word(4, 5, 2).is_err());
    }

    #[test]
    fn m_lambda_examples() {
        assert_eq!(m_lambda(Partition::new(0, 4)), TLElement::one(4));
        assert_eq!(m_lambda(Partition::new(1, 1)), gen(3, 1));
        assert_eq!(m_lambda(Partition::new(2, 0)), &gen(4, 1) * &gen(4, 3));
        assert_eq!(arc_grade(&PlanarDiagram::identity(4)), 0);
        assert_eq!(arc_grade(&PlanarDiagram::generator(4, 1).unwrap()), 1);
        assert_eq!(m_lambda(Partition::new(2, 0)).as_single().unwrap().0.arc_grade(), 2);
    }

    #[test]
    fn v_word_examples() {
        let l = Partition::new(1, 1);
        let t = enumerate_tableaux(l);
        assert!(v_word(&t[0]).letters.is_empty());
        assert_eq!(v_word(&t[1]).letters, vec![2]);
        let t4 = UpDownTableau::from_fseq(vec![0, 0, 0, 1, 2]).unwrap();
        assert_eq!(v_word(&t4).letters, vec![2]);
        for n in 1..=8 {
            for lambda in partitions_of(n) {
                for t in enumerate_tableaux(lambda) {
                    assert_eq!(vstar_word(&t), v_word(&t).reversed());
                }
                assert!(v_word(&UpDownTableau::maximal(lambda)).letters.is_empty());
            }
        }
    }

    #[test]
    fn murphy_element_examples() {
        let l = Partition::new(1, 1);
        let t = enumerate_tableaux(l);
        let top = MurphyIndex::new(t[0].clone(), t[0].clone()).unwrap();
        assert_eq!(murphy_element(&top), m_lambda(l));
        let ab = MurphyIndex::new(t[0].clone(), t[1].clone()).unwrap();
        assert_eq!(murphy_element(&ab), &gen(3, 1) * &gen(3, 2));
    }

    #[test]
    fn half_diagrams_agree_with_link_states() {
        for n in 1..=10 {
            for lambda in partitions_of(n) {
                for t in enumerate_tableaux(lambda) {
                    assert_eq!(half_diagram_of(&t), t.link_state(), "{t:?}");
                }
            }
        }
        let t = enumerate_tableaux(Partition::new(1, 1));
        assert_eq!(half_diagram_of(&t[1]).arcs(), &[(1, 2)]);
    }

    #[test]
    fn bijection_small() {
        for n in 1..=9 {
            let b = murphy_bijection(n).unwrap();
            assert_eq!(b.len() as u128, crate::diagrams::catalan(n));
        }
        let b = murphy_bijection(2).unwrap();
        let id = b.index_of(&PlanarDiagram::identity(2)).unwrap();
        assert_eq!(id.0, Partition::new(0, 2));
        let e1 = b.index_of(&PlanarDiagram::generator(2, 1).unwrap()).unwrap();
        assert_eq!(e1.0, Partition::new(1, 0));
    }

    #[test]
    fn structural_checks_small() {
        for n in 1..=6 {
            assert!(star_symmetry_check(n).passed());
            assert!(ideal_property_check(n).passed());
            let b = murphy_bijection(n).unwrap();
            let r = triangular_right_action_check(n, &b);
            assert!(r.passed(), "{r}");
            let r = restriction_criterion_check(n);
            assert!(r.passed(), "{r}");
            assert!(r.checked() > 0 || n < 4);
        }
    }
}
