//! The Temperley-Lieb diagram monoid and linear combinations of diagrams.
//!
//! Endpoints of an `n`-diagram are numbered `0..2n`: bottom points `0..n`
//! left to right, then top points right to left, so top position `j` (from
//! the left, 0-based) is endpoint `2n - 1 - j`. In this boundary order a
//! noncrossing pairing is a balanced bracket word, and a diagram is stored as
//! the bitmask of its opening brackets.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactring::{IntPoly, RatFunc, Scalar};
use crate::Error;

/// Largest supported number of points per row.
pub const MAX_N: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarDiagram {
    n: u8,
    openers: u64,
}

type Partners = [u8; 2 * MAX_N];

impl PlanarDiagram {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N, "n = {n} exceeds {MAX_N}");
        // bottom j pairs with top j: brackets open on 0..n, close on n..2n
        PlanarDiagram { n: n as u8, openers: low_bits(n) }
    }

    /// The generator `e_i`, `1 <= i <= n - 1`.
    pub fn generator(n: usize, i: usize) -> Result<Self, Error> {
        if n > MAX_N {
            return Err(Error::TooLarge(n));
        }
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let mut pairs = Vec::with_capacity(n);
        for j in 0..n {
            if j != i - 1 && j != i {
                pairs.push((j, 2 * n - 1 - j));
            }
        }
        pairs.push((i - 1, i));
        pairs.push((2 * n - 1 - i, 2 * n - i));
        Self::from_pairs(n, &pairs)
    }

    /// Builds a diagram from endpoint pairs in the canonical encoding.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, Error> {
        if n > MAX_N {
            return Err(Error::TooLarge(n));
        }
        if pairs.len() != n {
            return Err(Error::InvalidDiagram(format!("{} pairs for n = {n}", pairs.len())));
        }
        let mut partner = vec![usize::MAX; 2 * n];
        for &(a, b) in pairs {
            if a >= 2 * n || b >= 2 * n || a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidDiagram(format!("bad pair ({a}, {b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        let mut stack = Vec::new();
        let mut openers = 0u64;
        for (i, &q) in partner.iter().enumerate() {
            if q > i {
                openers |= 1 << i;
                stack.push(i);
            } else if stack.pop() != Some(q) {
                return Err(Error::InvalidDiagram("pairs cross".into()));
            }
        }
        Ok(PlanarDiagram { n: n as u8, openers })
    }

    /// Reconstructs a diagram from an opener mask; `None` if unbalanced.
    pub fn from_openers(n: usize, openers: u64) -> Option<Self> {
        if n > MAX_N || (2 * n < 64 && openers >> (2 * n) != 0) {
            return None;
        }
        let mut depth = 0i32;
        for i in 0..2 * n {
            depth += if openers >> i & 1 == 1 { 1 } else { -1 };
            if depth < 0 {
                return None;
            }
        }
        (depth == 0).then_some(PlanarDiagram { n: n as u8, openers })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn openers(&self) -> u64 {
        self.openers
    }

    fn partner_array(&self) -> Partners {
        let mut partner = [0u8; 2 * MAX_N];
        let mut stack = [0u8; 2 * MAX_N];
        let mut top = 0;
        for i in 0..2 * self.n() {
            if self.openers >> i & 1 == 1 {
                stack[top] = i as u8;
                top += 1;
            } else {
                top -= 1;
                let o = stack[top];
                partner[i] = o;
                partner[o as usize] = i as u8;
            }
        }
        partner
    }

    /// The partner of every endpoint.
    pub fn partners(&self) -> Vec<usize> {
        let p = self.partner_array();
        p[..2 * self.n()].iter().map(|&q| q as usize).collect()
    }

    /// Sorted pairs `(a, b)` with `a < b`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partners().into_iter().enumerate().filter(|&(a, b)| a < b).collect()
    }

    /// Stacks `self` above `other` and returns the product diagram together
    /// with the number of closed loops removed.
    pub fn compose(&self, other: &PlanarDiagram) -> Result<(PlanarDiagram, usize), Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(self.compose_same(other))
    }

    pub(crate) fn compose_same(&self, other: &PlanarDiagram) -> (PlanarDiagram, usize) {
        let n = self.n();
        let m = 2 * n;
        let pa = self.partner_array();
        let pb = other.partner_array();
        // Nodes 0..2n are the endpoints of `self`, 2n..4n those of `other`.
        let mut uf = UnionFind::new(2 * m);
        for i in 0..m {
            uf.union(i, pa[i] as usize);
            uf.union(m + i, m + pb[i] as usize);
        }
        for i in 0..n {
            uf.union(i, m + (m - 1 - i));
        }
        // External endpoints: bottom of `other` and top of `self`.
        let mut first = [u8::MAX; 4 * MAX_N];
        let mut partner = [0u8; 2 * MAX_N];
        for k in 0..m {
            let node = if k < n { m + k } else { k };
            let root = uf.find(node);
            if first[root] == u8::MAX {
                first[root] = k as u8;
            } else {
                let j = first[root] as usize;
                partner[j] = k as u8;
                partner[k] = j as u8;
            }
        }
        let mut loops = 0;
        let mut seen = [false; 4 * MAX_N];
        for i in 0..n {
            let root = uf.find(i);
            if first[root] == u8::MAX && !seen[root] {
                seen[root] = true;
                loops += 1;
            }
        }
        let mut openers = 0u64;
        for (k, &q) in partner[..m].iter().enumerate() {
            if q as usize > k {
                openers |= 1 << k;
            }
        }
        (PlanarDiagram { n: self.n, openers }, loops)
    }

    /// Vertical reflection.
    pub fn star(&self) -> PlanarDiagram {
        let m = 2 * self.n();
        let p = self.partner_array();
        let mut openers = 0u64;
        for k in 0..m {
            // endpoint k maps to m-1-k
            let image = m - 1 - k;
            let image_partner = m - 1 - p[k] as usize;
            if image_partner > image {
                openers |= 1 << image;
            }
        }
        PlanarDiagram { n: self.n, openers }
    }

    /// Embedding into `n + 1` points by appending a through strand on the right.
    pub fn embed(&self) -> PlanarDiagram {
        let n = self.n();
        assert!(n < MAX_N);
        let mut pairs: Vec<(usize, usize)> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| {
                let shift = |e: usize| if e < n { e } else { e + 2 };
                (shift(a), shift(b))
            })
            .collect();
        pairs.push((n, n + 1));
        Self::from_pairs(n + 1, &pairs).expect("embedding preserves planarity")
    }

    /// Number of arcs joining two bottom points.
    pub fn arc_grade(&self) -> usize {
        let n = self.n();
        let p = self.partner_array();
        (0..n).filter(|&i| (p[i] as usize) < n && (p[i] as usize) > i).count()
    }

    /// Number of strands joining the bottom row to the top row.
    pub fn through_strands(&self) -> usize {
        self.n() - 2 * self.arc_grade()
    }

    /// Arcs and defects of the bottom row, both 0-based.
    pub fn bottom_half(&self) -> (Vec<(usize, usize)>, Vec<usize>) {
        let n = self.n();
        let p = self.partner_array();
        let mut arcs = Vec::new();
        let mut defects = Vec::new();
        for i in 0..n {
            let q = p[i] as usize;
            if q >= n {
                defects.push(i);
            } else if q > i {
                arcs.push((i, q));
            }
        }
        (arcs, defects)
    }

    /// Arcs and defects of the top row, by position from the left, 0-based.
    pub fn top_half(&self) -> (Vec<(usize, usize)>, Vec<usize>) {
        self.star().bottom_half()
    }
}

fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

struct UnionFind {
    parent: [u8; 4 * MAX_N],
}

impl UnionFind {
    fn new(size: usize) -> Self {
        let mut parent = [0u8; 4 * MAX_N];
        for (i, p) in parent.iter_mut().enumerate().take(size) {
            *p = i as u8;
        }
        UnionFind { parent }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let up = self.parent[self.parent[x] as usize];
            self.parent[x] = up;
            x = up as usize;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb) as u8;
        }
    }
}

impl fmt::Display for PlanarDiagram {
    /// Pairs with 1-based labels, primes on the top row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let label = |e: usize| if e < n { format!("{}", e + 1) } else { format!("{}'", 2 * n - e) };
        let parts: Vec<String> = self.pairs().into_iter().map(|(a, b)| format!("{}-{}", label(a), label(b))).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    pairs: Vec<[usize; 2]>,
}

impl Serialize for PlanarDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DiagramJson { n: self.n(), pairs: self.pairs().into_iter().map(|(a, b)| [a, b]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlanarDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = DiagramJson::deserialize(d)?;
        let pairs: Vec<(usize, usize)> = j.pairs.into_iter().map(|[a, b]| (a, b)).collect();
        PlanarDiagram::from_pairs(j.n, &pairs).map_err(serde::de::Error::custom)
    }
}

/// All noncrossing diagrams on `n` points, in increasing opener-mask order.
pub fn enumerate_diagrams(n: usize) -> Vec<PlanarDiagram> {
    assert!(n <= MAX_N);
    let mut out = Vec::new();
    fn rec(n: usize, pos: usize, open: usize, used: usize, mask: u64, out: &mut Vec<PlanarDiagram>) {
        if pos == 2 * n {
            out.push(PlanarDiagram { n: n as u8, openers: mask });
            return;
        }
        if open > 0 {
            rec(n, pos + 1, open - 1, used, mask, out);
        }
        if used < n {
            rec(n, pos + 1, open + 1, used + 1, mask | 1 << pos, out);
        }
    }
    rec(n, 0, 0, 0, 0, &mut out);
    out.sort();
    out
}

/// Catalan numbers by the convolution recurrence.
pub fn catalan(n: usize) -> u128 {
    let mut c = vec![1u128];
    for k in 0..n {
        let next = (0..=k).map(|i| c[i] * c[k - i]).sum();
        c.push(next);
    }
    c[n]
}

/// Evaluates a word `e_{i_1} e_{i_2} ...` to a single diagram and loop count.
pub fn word_diagram(n: usize, word: &[usize]) -> Result<(PlanarDiagram, usize), Error> {
    let mut d = PlanarDiagram::identity(n);
    let mut loops = 0;
    for &i in word {
        let (next, l) = d.compose_same(&PlanarDiagram::generator(n, i)?);
        d = next;
        loops += l;
    }
    Ok((d, loops))
}

/// Evaluates a generator word as an algebra element `x^c D`.
pub fn word_to_element<S: Scalar>(n: usize, word: &[usize]) -> Result<TLElement<S>, Error> {
    let (d, loops) = word_diagram(n, word)?;
    Ok(TLElement::term(d, S::x_pow(loops)))
}

/// A finite linear combination of `n`-diagrams.
#[derive(Clone, PartialEq, Eq)]
pub struct TLElement<S> {
    n: usize,
    terms: BTreeMap<PlanarDiagram, S>,
}

impl<S: Scalar> TLElement<S> {
    pub fn zero(n: usize) -> Self {
        TLElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_diagram(PlanarDiagram::identity(n))
    }

    pub fn from_diagram(d: PlanarDiagram) -> Self {
        Self::term(d, S::one())
    }

    pub fn term(d: PlanarDiagram, c: S) -> Self {
        let mut e = Self::zero(d.n());
        if !c.is_zero() {
            e.terms.insert(d, c);
        }
        e
    }

    pub fn generator(n: usize, i: usize) -> Result<Self, Error> {
        Ok(Self::from_diagram(PlanarDiagram::generator(n, i)?))
    }

    /// The scalar `c` times the identity.
    pub fn scalar(n: usize, c: S) -> Self {
        Self::term(PlanarDiagram::identity(n), c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarDiagram, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &PlanarDiagram) -> S {
        self.terms.get(d).cloned().unwrap_or_else(S::zero)
    }

    /// If the element is `c D` for a single diagram, returns `(D, c)`.
    pub fn as_single(&self) -> Option<(PlanarDiagram, &S)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(d, c)| (*d, c))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, d: PlanarDiagram, c: &S) {
        debug_assert_eq!(d.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TLElement<S>, c: &S) {
        assert_eq!(self.n, other.n, "size mismatch");
        for (d, v) in &other.terms {
            self.add_term(*d, &v.mul_ref(c));
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        TLElement { n: self.n, terms: self.terms.iter().map(|(d, v)| (*d, v.mul_ref(c))).collect() }
    }

    pub fn star(&self) -> Self {
        TLElement { n: self.n, terms: self.terms.iter().map(|(d, v)| (d.star(), v.clone())).collect() }
    }

    pub fn embed(&self) -> Self {
        TLElement { n: self.n + 1, terms: self.terms.iter().map(|(d, v)| (d.embed(), v.clone())).collect() }
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &TLElement<S>) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TLElement<T> {
        let mut out = TLElement::zero(self.n);
        for (d, v) in &self.terms {
            out.add_term(*d, &f(v));
        }
        out
    }

    pub fn mul_generator(&self, i: usize) -> Result<Self, Error> {
        Ok(self * &Self::generator(self.n, i)?)
    }

    pub fn generator_mul(&self, i: usize) -> Result<Self, Error> {
        Ok(&Self::generator(self.n, i)? * self)
    }
}

impl TLElement<IntPoly> {
    pub fn to_ratfunc(&self) -> TLElement<RatFunc> {
        self.map_coeffs(|c| RatFunc::from(c.clone()))
    }
}

impl<S: Scalar> Add for &TLElement<S> {
    type Output = TLElement<S>;
    fn add(self, rhs: &TLElement<S>) -> TLElement<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &S::one());
        out
    }
}

impl<S: Scalar> Sub for &TLElement<S> {
    type Output = TLElement<S>;
    fn sub(self, rhs: &TLElement<S>) -> TLElement<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &S::one().neg_ref());
        out
    }
}

impl<S: Scalar> Neg for &TLElement<S> {
    type Output = TLElement<S>;
    fn neg(self) -> TLElement<S> {
        self.scale(&S::one().neg_ref())
    }
}

impl<S: Scalar> Mul for &TLElement<S> {
    type Output = TLElement<S>;
    fn mul(self, rhs: &TLElement<S>) -> TLElement<S> {
        assert_eq!(self.n, rhs.n, "size mismatch");
        let mut acc: BTreeMap<PlanarDiagram, S> = BTreeMap::new();
        let mut x_pows: Vec<S> = vec![S::one()];
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let (d, loops) = a.compose_same(b);
                while x_pows.len() <= loops {
                    x_pows.push(S::x_pow(x_pows.len()));
                }
                let c = ca.mul_ref(cb);
                let c = if loops == 0 { c } else { c.mul_ref(&x_pows[loops]) };
                match acc.get_mut(&d) {
                    Some(v) => v.add_assign_ref(&c),
                    None => {
                        acc.insert(d, c);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        TLElement { n: self.n, terms: acc }
    }
}

impl<S: Scalar> fmt::Display for TLElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c}){d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar> fmt::Debug for TLElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The defining relations among the generators of `A_n` and the size of
/// the diagram basis.
pub fn relations_check(n: usize) -> crate::Report {
    let mut rep = crate::Report::new(format!("diagram relations, n = {n}"));
    let e = |i| TLElement::<IntPoly>::generator(n, i).expect("index in range");
    for i in 1..n {
        let ei = e(i);
        rep.check(&ei * &ei == ei.scale(&IntPoly::x()), || format!("e_{i}^2 != x e_{i}"));
        for j in 1..n {
            let ej = e(j);
            if i.abs_diff(j) == 1 {
                rep.check(&(&ei * &ej) * &ei == ei, || format!("e_{i} e_{j} e_{i} != e_{i}"));
            } else if i.abs_diff(j) > 1 {
                rep.check(&ei * &ej == &ej * &ei, || format!("e_{i} e_{j} != e_{j} e_{i}"));
            }
        }
    }
    let count = enumerate_diagrams(n).len() as u128;
    rep.check(count == catalan(n), || format!("{count} diagrams, expected {}", catalan(n)));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type E = TLElement<IntPoly>;

    fn e(n: usize, i: usize) -> E {
        E::generator(n, i).unwrap()
    }

    #[test]
    fn generators_match_their_pictures() {
        let d = PlanarDiagram::generator(2, 1).unwrap();
        assert_eq!(d.pairs(), vec![(0, 1), (2, 3)]);
        let d = PlanarDiagram::generator(3, 2).unwrap();
        // 1-1', 2-3, 2'-3'
        assert_eq!(d.to_string(), "{1-1', 2-3, 3'-2'}");
        assert!(PlanarDiagram::generator(3, 3).is_err());
        assert!(PlanarDiagram::generator(3, 0).is_err());
    }

    #[test]
    fn relations_by_composition() {
        let g = |n, i| PlanarDiagram::generator(n, i).unwrap();
        assert_eq!(g(2, 1).compose(&g(2, 1)).unwrap(), (g(2, 1), 1));
        let (d, l) = g(3, 1).compose(&g(3, 2)).unwrap();
        assert_eq!(l, 0);
        assert_eq!(d.compose(&g(3, 1)).unwrap(), (g(3, 1), 0));
        let id = PlanarDiagram::identity(4);
        for d in enumerate_diagrams(4) {
            assert_eq!(id.compose(&d).unwrap(), (d, 0));
            assert_eq!(d.compose(&id).unwrap(), (d, 0));
        }
        assert!(g(3, 1).compose(&g(4, 1)).is_err());
    }

    #[test]
    fn defining_relations_up_to_eight() {
        for n in 2..=8 {
            for i in 1..n {
                let ei = e(n, i);
                assert_eq!(&ei * &ei, ei.scale(&IntPoly::x()));
                for j in 1..n {
                    let ej = e(n, j);
                    if i.abs_diff(j) == 1 {
                        assert_eq!(&(&ei * &ej) * &ei, ei);
                    } else if i.abs_diff(j) > 1 {
                        assert_eq!(&ei * &ej, &ej * &ei);
                    }
                }
            }
        }
    }

    #[test]
    fn catalan_counts() {
        for n in 1..=12 {
            assert_eq!(enumerate_diagrams(n).len() as u128, catalan(n), "n = {n}");
        }
        assert_eq!(catalan(12), 208012);
        assert_eq!(enumerate_diagrams(3).len(), 5);
    }

    #[test]
    fn words() {
        let w: E = word_to_element(3, &[]).unwrap();
        assert_eq!(w, E::one(3));
        let w: E = word_to_element(2, &[1, 1]).unwrap();
        assert_eq!(w, e(2, 1).scale(&IntPoly::x()));
        let w: E = word_to_element(4, &[1, 3]).unwrap();
        assert_eq!(w, &e(4, 1) * &e(4, 3));
        assert!(w.as_single().unwrap().1.is_one());
        assert!(word_to_element::<IntPoly>(4, &[4]).is_err());
    }

    #[test]
    fn star_examples() {
        for i in 1..5 {
            assert_eq!(PlanarDiagram::generator(5, i).unwrap().star(), PlanarDiagram::generator(5, i).unwrap());
        }
        let a = &e(3, 1) * &e(3, 2);
        assert_eq!(a.star(), &e(3, 2) * &e(3, 1));
        for n in 1..=6 {
            for d in enumerate_diagrams(n) {
                assert_eq!(d.star().star(), d);
                assert_eq!(d.star().arc_grade(), d.top_half().0.len());
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let d = PlanarDiagram::generator(4, 2).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"n":4,"pairs":[[0,7],[1,2],[3,4],[5,6]]}"#);
        let back: PlanarDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<PlanarDiagram>(r#"{"n":2,"pairs":[[0,2],[1,3]]}"#).is_err());
    }

    #[test]
    fn from_openers_validates() {
        for d in enumerate_diagrams(5) {
            assert_eq!(PlanarDiagram::from_openers(5, d.openers()), Some(d));
        }
        assert_eq!(PlanarDiagram::from_openers(2, 0b0011 << 1), None);
    }

    fn diagram(n: usize) -> impl Strategy<Value = PlanarDiagram> {
        let all = enumerate_diagrams(n);
        (0..all.len()).prop_map(move |i| all[i])
    }

    fn word(n: usize) -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(1..n, 0..12)
    }

    proptest! {
        #[test]
        fn composition_is_associative((a, b, c) in (1usize..=8).prop_flat_map(|n| (diagram(n), diagram(n), diagram(n)))) {
            let (ab, l1) = a.compose(&b).unwrap();
            let (ab_c, l2) = ab.compose(&c).unwrap();
            let (bc, l3) = b.compose(&c).unwrap();
            let (a_bc, l4) = a.compose(&bc).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(l1 + l2, l3 + l4);
        }

        #[test]
        fn star_reverses_words(w in (2usize..=8).prop_flat_map(|n| (Just(n), word(n)))) {
            let (n, w) = w;
            let fwd: E = word_to_element(n, &w).unwrap();
            let rev: Vec<usize> = w.iter().rev().copied().collect();
            let back: E = word_to_element(n, &rev).unwrap();
            prop_assert_eq!(fwd.star(), back);
        }

        #[test]
        fn arc_grade_is_an_ideal_filtration((a, b) in (1usize..=8).prop_flat_map(|n| (diagram(n), diagram(n)))) {
            let (d, _) = a.compose(&b).unwrap();
            prop_assert!(d.arc_grade() >= a.arc_grade().max(b.arc_grade()));
        }

        #[test]
        fn embedding_is_multiplicative((a, b) in (1usize..=7).prop_flat_map(|n| (diagram(n), diagram(n)))) {
            let (ab, l) = a.compose(&b).unwrap();
            let (ea_eb, l2) = a.embed().compose(&b.embed()).unwrap();
            prop_assert_eq!(ab.embed(), ea_eb);
            prop_assert_eq!(l, l2);
        }
    }
}
