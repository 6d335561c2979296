//! Two-part partitions, up-down tableaux and half-diagrams.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::Error;

/// The pair `(f, m)`: `f` arcs and `m` defects, a partition of `2f + m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Partition {
    pub f: usize,
    pub m: usize,
}

impl Partition {
    pub fn new(f: usize, m: usize) -> Self {
        Partition { f, m }
    }

    /// `(f, n - 2f)`, checking that it is a partition of `n`.
    pub fn of(n: usize, f: usize) -> Result<Self, Error> {
        if 2 * f > n {
            return Err(Error::InvalidPartition { n, f, m: 0 });
        }
        Ok(Partition { f, m: n - 2 * f })
    }

    pub fn n(&self) -> usize {
        2 * self.f + self.m
    }

    /// Partitions of `n - 1` with an edge into `self`.
    pub fn predecessors(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        if self.f > 0 {
            out.push(Partition::new(self.f - 1, self.m + 1));
        }
        if self.m > 0 {
            out.push(Partition::new(self.f, self.m - 1));
        }
        out
    }
}

impl From<[usize; 2]> for Partition {
    fn from([f, m]: [usize; 2]) -> Self {
        Partition { f, m }
    }
}

impl From<Partition> for [usize; 2] {
    fn from(p: Partition) -> Self {
        [p.f, p.m]
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.f, self.m)
    }
}

/// All partitions of `n`, most dominant first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    (0..=n / 2).rev().map(|f| Partition::new(f, n - 2 * f)).collect()
}

pub fn dominates(lambda: Partition, mu: Partition) -> Result<bool, Error> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch(lambda.n(), mu.n()));
    }
    Ok(lambda.f >= mu.f)
}

/// A path `(0,0) = λ^(0) → λ^(1) → … → λ^(n)` in the Bratteli diagram,
/// stored as the arc counts `f_0, …, f_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpDownTableau {
    fseq: Vec<usize>,
}

impl UpDownTableau {
    pub fn from_fseq(fseq: Vec<usize>) -> Result<Self, Error> {
        if fseq.first() != Some(&0) {
            return Err(Error::InvalidTableau("must start at (0,0)".into()));
        }
        for k in 1..fseq.len() {
            let (a, b) = (fseq[k - 1], fseq[k]);
            if !(b == a || b == a + 1) || 2 * b > k {
                return Err(Error::InvalidTableau(format!("bad step at {k} in {fseq:?}")));
            }
        }
        Ok(UpDownTableau { fseq })
    }

    /// The most dominant tableau of shape `λ`: every arc as early as possible.
    pub fn maximal(lambda: Partition) -> Self {
        let n = lambda.n();
        let fseq = (0..=n).map(|k| (k / 2).min(lambda.f)).collect();
        UpDownTableau { fseq }
    }

    pub fn n(&self) -> usize {
        self.fseq.len() - 1
    }

    pub fn fseq(&self) -> &[usize] {
        &self.fseq
    }

    pub fn shape(&self) -> Partition {
        self.shape_at(self.n())
    }

    /// `λ^(k)`; panics if `k > n`.
    pub fn shape_at(&self, k: usize) -> Partition {
        let f = self.fseq[k];
        Partition::new(f, k - 2 * f)
    }

    pub fn try_shape_at(&self, k: usize) -> Result<Partition, Error> {
        if k > self.n() {
            return Err(Error::IndexOutOfRange { index: k, max: self.n() });
        }
        Ok(self.shape_at(k))
    }

    /// The prefix `t|_k`.
    pub fn restrict(&self, k: usize) -> Result<UpDownTableau, Error> {
        if k > self.n() {
            return Err(Error::IndexOutOfRange { index: k, max: self.n() });
        }
        Ok(UpDownTableau { fseq: self.fseq[..=k].to_vec() })
    }

    /// True if step `k` closes an arc, i.e. `f_k = f_{k-1} + 1`.
    pub fn arc_step(&self, k: usize) -> bool {
        k >= 1 && self.fseq[k] > self.fseq[k - 1]
    }

    /// Extends by one step; `arc` selects the arc-closing move.
    pub fn extend(&self, arc: bool) -> Option<UpDownTableau> {
        let k = self.fseq.len();
        let last = *self.fseq.last().unwrap();
        let f = if arc { last + 1 } else { last };
        if 2 * f > k {
            return None;
        }
        let mut fseq = self.fseq.clone();
        fseq.push(f);
        Some(UpDownTableau { fseq })
    }

    /// Tableau dominance: `shape(self|_k) ⊵ shape(other|_k)` for every `k`.
    pub fn dominates(&self, other: &UpDownTableau) -> bool {
        self.fseq.len() == other.fseq.len() && self.fseq.iter().zip(&other.fseq).all(|(a, b)| a >= b)
    }

    /// The link state of `n` points this path builds: each arc step matches
    /// the new point with the nearest unmatched point to its left.
    pub fn link_state(&self) -> HalfDiagram {
        let n = self.n();
        let mut open: Vec<usize> = Vec::new();
        let mut arcs = Vec::new();
        for k in 1..=n {
            if self.arc_step(k) {
                let a = open.pop().expect("valid tableau has an open point");
                arcs.push((a, k - 1));
            } else {
                open.push(k - 1);
            }
        }
        HalfDiagram::from_arcs(n, arcs).expect("link state is planar")
    }
}

impl fmt::Display for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..=self.n()).map(|k| self.shape_at(k).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{:?}", self.fseq)
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    n: usize,
    fseq: Vec<usize>,
}

impl Serialize for UpDownTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableauJson { n: self.n(), fseq: self.fseq.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UpDownTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        if j.fseq.len() != j.n + 1 {
            return Err(serde::de::Error::custom("fseq length must be n + 1"));
        }
        UpDownTableau::from_fseq(j.fseq).map_err(serde::de::Error::custom)
    }
}

/// All tableaux of shape `λ`, in the canonical order: descending
/// lexicographic on the arc counts, which refines tableau dominance and
/// starts with `t^λ`.
pub fn enumerate_tableaux(lambda: Partition) -> Vec<UpDownTableau> {
    let n = lambda.n();
    let mut out = Vec::new();
    let mut fseq = vec![0usize];
    fn rec(n: usize, target: usize, fseq: &mut Vec<usize>, out: &mut Vec<UpDownTableau>) {
        let k = fseq.len() - 1;
        let f = fseq[k];
        if k == n {
            if f == target {
                out.push(UpDownTableau { fseq: fseq.clone() });
            }
            return;
        }
        let remaining = n - k;
        for next in [f + 1, f] {
            if 2 * next > k + 1 || next > target || target - next > remaining - 1 {
                continue;
            }
            fseq.push(next);
            rec(n, target, fseq, out);
            fseq.pop();
        }
    }
    rec(n, lambda.f, &mut fseq, &mut out);
    out
}

type TableauList = Arc<Vec<UpDownTableau>>;

fn cache() -> &'static RwLock<HashMap<Partition, TableauList>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, TableauList>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Cached [`enumerate_tableaux`].
pub fn tableaux(lambda: Partition) -> TableauList {
    if let Some(t) = cache().read().unwrap().get(&lambda) {
        return t.clone();
    }
    let list = Arc::new(enumerate_tableaux(lambda));
    cache().write().unwrap().entry(lambda).or_insert(list).clone()
}

/// Position of every tableau in the canonical order.
pub fn tableau_index(list: &[UpDownTableau]) -> HashMap<UpDownTableau, usize> {
    list.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()
}

/// Number of tableaux of shape `λ`, by path counting.
pub fn dim(lambda: Partition) -> u128 {
    let n = lambda.n();
    // counts[f] = number of paths to (f, k - 2f)
    let mut counts = vec![0u128; n / 2 + 2];
    counts[0] = 1;
    for k in 1..=n {
        let mut next = vec![0u128; n / 2 + 2];
        for f in 0..=k / 2 {
            let stay = if 2 * f < k { counts[f] } else { 0 };
            let grow = if f > 0 { counts[f - 1] } else { 0 };
            next[f] = stay + grow;
        }
        counts = next;
    }
    counts[lambda.f]
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `C(n, f) - C(n, f - 1)`.
pub fn dim_by_binomials(lambda: Partition) -> u128 {
    let n = lambda.n();
    let f = lambda.f;
    binomial(n, f) - if f > 0 { binomial(n, f - 1) } else { 0 }
}

/// A noncrossing partial matching of `n` points on a line; unmatched points
/// are defects and may not sit under an arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfDiagram {
    n: usize,
    arcs: Vec<(usize, usize)>,
    defects: Vec<usize>,
}

impl HalfDiagram {
    /// Points are 0-based; arcs are normalized to `a < b` and sorted.
    pub fn from_arcs(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self, Error> {
        let mut partner = vec![usize::MAX; n];
        for &(a, b) in &arcs {
            if a >= n || b >= n || a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidDiagram(format!("bad arc ({a}, {b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        let mut stack = Vec::new();
        let mut defects = Vec::new();
        for i in 0..n {
            let q = partner[i];
            if q == usize::MAX {
                if !stack.is_empty() {
                    return Err(Error::InvalidDiagram(format!("defect {i} under an arc")));
                }
                defects.push(i);
            } else if q > i {
                stack.push(i);
            } else if stack.pop() != Some(q) {
                return Err(Error::InvalidDiagram("arcs cross".into()));
            }
        }
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        arcs.sort();
        Ok(HalfDiagram { n, arcs, defects })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn defects(&self) -> &[usize] {
        &self.defects
    }

    /// `partner[i]`, or `None` for a defect.
    pub fn partners(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.n];
        for &(a, b) in &self.arcs {
            p[a] = Some(b);
            p[b] = Some(a);
        }
        p
    }
}

impl fmt::Display for HalfDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs.iter().map(|(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
        let defects: Vec<String> = self.defects.iter().map(|d| (d + 1).to_string()).collect();
        write!(f, "arcs {{{}}} defects {{{}}}", arcs.join(", "), defects.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct HalfJson {
    arcs: Vec<[usize; 2]>,
    defects: Vec<usize>,
}

impl Serialize for HalfDiagram {
    /// 1-based points.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        HalfJson {
            arcs: self.arcs.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
            defects: self.defects.iter().map(|d| d + 1).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HalfDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = HalfJson::deserialize(d)?;
        let n = 2 * j.arcs.len() + j.defects.len();
        if j.arcs.iter().flatten().chain(&j.defects).any(|&p| p == 0) {
            return Err(serde::de::Error::custom("points are 1-based"));
        }
        let h = HalfDiagram::from_arcs(n, j.arcs.iter().map(|&[a, b]| (a - 1, b - 1)).collect())
            .map_err(serde::de::Error::custom)?;
        let defects: Vec<usize> = j.defects.iter().map(|d| d - 1).collect();
        if h.defects != defects {
            return Err(serde::de::Error::custom("defects do not match arcs"));
        }
        Ok(h)
    }
}

/// All half-diagrams on `n` points with `f` arcs, sorted.
pub fn enumerate_half_diagrams(n: usize, f: usize) -> Vec<HalfDiagram> {
    let mut out: Vec<HalfDiagram> =
        enumerate_tableaux(match Partition::of(n, f) {
            Ok(l) => l,
            Err(_) => return Vec::new(),
        })
        .iter()
        .map(UpDownTableau::link_state)
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn brute_half_diagrams(n: usize, f: usize) -> HashSet<HalfDiagram> {
        // every subset of pairs, filtered through the validator
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut out = HashSet::new();
        fn rec(
            pairs: &[(usize, usize)],
            start: usize,
            chosen: &mut Vec<(usize, usize)>,
            f: usize,
            n: usize,
            out: &mut HashSet<HalfDiagram>,
        ) {
            if chosen.len() == f {
                if let Ok(h) = HalfDiagram::from_arcs(n, chosen.clone()) {
                    out.insert(h);
                }
                return;
            }
            for i in start..pairs.len() {
                chosen.push(pairs[i]);
                rec(pairs, i + 1, chosen, f, n, out);
                chosen.pop();
            }
        }
        rec(&pairs, 0, &mut Vec::new(), f, n, &mut out);
        out
    }

    #[test]
    fn partition_lists() {
        assert_eq!(partitions_of(3), vec![Partition::new(1, 1), Partition::new(0, 3)]);
        assert_eq!(partitions_of(4), vec![Partition::new(2, 0), Partition::new(1, 2), Partition::new(0, 4)]);
        let p11 = partitions_of(11);
        assert_eq!(p11.len(), 6);
        assert_eq!(p11[0], Partition::new(5, 1));
        assert!(dominates(Partition::new(1, 1), Partition::new(0, 3)).unwrap());
        assert!(!dominates(Partition::new(0, 3), Partition::new(1, 1)).unwrap());
        assert!(dominates(Partition::new(2, 0), Partition::new(2, 0)).unwrap());
        assert!(dominates(Partition::new(2, 0), Partition::new(0, 3)).is_err());
        assert!(Partition::of(3, 2).is_err());
    }

    #[test]
    fn small_tableaux() {
        let t = enumerate_tableaux(Partition::new(1, 1));
        assert_eq!(t.len(), 2);
        let shapes: Vec<Partition> = (1..=3).map(|k| t[0].shape_at(k)).collect();
        assert_eq!(shapes, vec![Partition::new(0, 1), Partition::new(1, 0), Partition::new(1, 1)]);
        assert_eq!(t[1].restrict(2).unwrap().shape(), Partition::new(0, 2));
        assert_eq!(enumerate_tableaux(Partition::new(1, 0)).len(), 1);
        assert_eq!(enumerate_tableaux(Partition::new(4, 3)).len(), 165);
        for t in &enumerate_tableaux(Partition::new(2, 3)) {
            assert_eq!(t.restrict(t.n()).unwrap(), *t);
            assert_eq!(t.shape_at(0), Partition::new(0, 0));
        }
        assert!(t[0].restrict(4).is_err());
    }

    #[test]
    fn canonical_order_refines_dominance() {
        for n in 1..=9 {
            for lambda in partitions_of(n) {
                let list = enumerate_tableaux(lambda);
                assert_eq!(list[0], UpDownTableau::maximal(lambda));
                for (i, s) in list.iter().enumerate() {
                    for t in &list[i + 1..] {
                        assert!(s > t, "strictly descending");
                        assert!(!t.dominates(s), "{t:?} after {s:?} but dominates it");
                    }
                    assert!(list[0].dominates(s));
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim(Partition::new(1, 1)), 2);
        assert_eq!(dim(Partition::new(5, 1)), 132);
        assert_eq!(binomial(11, 5) - binomial(11, 4), 132);
        assert_eq!(dim(Partition::new(4, 3)), 165);
        for n in 0..=14 {
            let mut total = 0u128;
            for lambda in partitions_of(n) {
                assert_eq!(dim(lambda), dim_by_binomials(lambda), "{lambda}");
                if n <= 12 {
                    assert_eq!(dim(lambda), enumerate_tableaux(lambda).len() as u128);
                }
                total += dim(lambda) * dim(lambda);
            }
            assert_eq!(total, crate::diagrams::catalan(n));
        }
    }

    #[test]
    fn bratteli_recursion() {
        for n in 1..=14 {
            for lambda in partitions_of(n) {
                let sum: u128 = lambda.predecessors().into_iter().filter(|p| 2 * p.f <= n - 1).map(dim).sum();
                assert_eq!(sum, dim(lambda));
            }
        }
    }

    #[test]
    fn link_states_are_a_bijection() {
        for n in 1..=10 {
            for lambda in partitions_of(n) {
                let list = enumerate_tableaux(lambda);
                let states: HashSet<HalfDiagram> = list.iter().map(UpDownTableau::link_state).collect();
                assert_eq!(states.len(), list.len());
                if n <= 8 {
                    assert_eq!(states, brute_half_diagrams(n, lambda.f));
                }
            }
        }
    }

    #[test]
    fn link_state_examples() {
        let t = enumerate_tableaux(Partition::new(1, 1));
        assert_eq!(t[0].link_state().arcs(), &[(0, 1)]);
        assert_eq!(t[0].link_state().defects(), &[2]);
        assert_eq!(t[1].link_state().arcs(), &[(1, 2)]);
        assert_eq!(t[1].link_state().defects(), &[0]);
        let all = &enumerate_tableaux(Partition::new(0, 5))[0];
        assert_eq!(all.link_state().defects().len(), 5);
    }

    #[test]
    fn json_forms() {
        let t = &enumerate_tableaux(Partition::new(1, 1))[1];
        let s = serde_json::to_string(t).unwrap();
        assert_eq!(s, r#"{"n":3,"fseq":[0,0,0,1]}"#);
        assert_eq!(&serde_json::from_str::<UpDownTableau>(&s).unwrap(), t);
        assert!(serde_json::from_str::<UpDownTableau>(r#"{"n":2,"fseq":[0,1,1]}"#).is_err());
        let h = t.link_state();
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(s, r#"{"arcs":[[2,3]],"defects":[1]}"#);
        assert_eq!(serde_json::from_str::<HalfDiagram>(&s).unwrap(), h);
        assert_eq!(serde_json::to_string(&Partition::new(2, 3)).unwrap(), "[2,3]");
    }

    #[test]
    fn half_diagram_validation() {
        assert!(HalfDiagram::from_arcs(4, vec![(0, 2), (1, 3)]).is_err());
        assert!(HalfDiagram::from_arcs(3, vec![(0, 2)]).is_err());
        assert!(HalfDiagram::from_arcs(4, vec![(0, 3), (1, 2)]).is_ok());
    }
}
