//! Cell modules `C^λ`, their generator actions and the cellular form.
//!
//! The basis vector `m_t` of `C^λ` is modelled by the link state of `t`
//! (the bottom half of the diagram `m_λ v_t`). That model is the production
//! path; the `algebraic_*` functions recompute the same data by composing
//! full diagrams and reading the result in the Murphy basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::diagrams::{PlanarDiagram, TLElement};
use crate::exactring::{IntPoly, Matrix, Scalar};
use crate::murphy::{m_lambda_v, MurphyBasis};
use crate::report::Report;
use crate::tableaux::{tableaux, HalfDiagram, Partition, UpDownTableau};
use crate::Error;

/// Image of a basis vector under a diagram: `x^loops m_target`, or zero.
pub type SparseImage = Option<(usize, usize)>;

pub struct CellModule {
    lambda: Partition,
    basis: Arc<Vec<UpDownTableau>>,
    states: Vec<HalfDiagram>,
    index: HashMap<HalfDiagram, usize>,
}

impl CellModule {
    pub fn new(lambda: Partition) -> Self {
        let basis = tableaux(lambda);
        let states: Vec<HalfDiagram> = basis.iter().map(UpDownTableau::link_state).collect();
        let index = states.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
        CellModule { lambda, basis, states, index }
    }

    pub fn lambda(&self) -> Partition {
        self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[UpDownTableau] {
        &self.basis
    }

    pub fn states(&self) -> &[HalfDiagram] {
        &self.states
    }

    pub fn position(&self, t: &UpDownTableau) -> Option<usize> {
        self.basis.binary_search_by(|s| t.cmp(s)).ok()
    }

    fn check_generator(&self, k: usize) -> Result<(), Error> {
        if k == 0 || k >= self.n() {
            return Err(Error::IndexOutOfRange { index: k, max: self.n().saturating_sub(1) });
        }
        Ok(())
    }

    /// `m_t e_k` for every basis vector, by reconnecting link states.
    pub fn generator_action(&self, k: usize) -> Result<Vec<SparseImage>, Error> {
        self.check_generator(k)?;
        let (a, b) = (k - 1, k);
        Ok(self
            .states
            .iter()
            .map(|h| {
                let p = h.partners();
                match (p[a], p[b]) {
                    (None, None) => None,
                    (Some(q), _) if q == b => Some((self.index[h], 1)),
                    (pa, pb) => {
                        let mut arcs: Vec<(usize, usize)> =
                            h.arcs().iter().copied().filter(|&(u, v)| u != a && u != b && v != a && v != b).collect();
                        arcs.push((a, b));
                        if let (Some(q1), Some(q2)) = (pa, pb) {
                            arcs.push((q1.min(q2), q1.max(q2)));
                        }
                        let next = HalfDiagram::from_arcs(h.n(), arcs).expect("reconnection is planar");
                        Some((self.index[&next], 0))
                    }
                }
            })
            .collect())
    }

    /// `m_t d` for a single diagram `d`, by stacking `d` under `m_λ v_t`.
    pub fn diagram_action(&self, d: &PlanarDiagram) -> Vec<SparseImage> {
        assert_eq!(d.n(), self.n(), "size mismatch");
        self.basis
            .iter()
            .map(|t| {
                let (top, _) = m_lambda_v(t);
                let (prod, loops) = top.compose_same(d);
                if prod.arc_grade() > self.lambda.f {
                    return None;
                }
                let (arcs, _) = prod.bottom_half();
                let h = HalfDiagram::from_arcs(self.n(), arcs).expect("planar");
                Some((self.index[&h], loops))
            })
            .collect()
    }

    pub fn generator_matrix<S: Scalar>(&self, k: usize) -> Result<Matrix<S>, Error> {
        Ok(sparse_to_matrix(&self.generator_action(k)?))
    }

    /// Matrix of right multiplication by `b`; row `t` holds `m_t b`.
    pub fn element_matrix<S: Scalar>(&self, b: &TLElement<S>) -> Matrix<S> {
        assert_eq!(b.n(), self.n(), "size mismatch");
        let dim = self.dim();
        let mut out: Matrix<S> = Matrix::zeros(dim, dim);
        for (d, c) in b.terms() {
            for (row, img) in self.diagram_action(d).into_iter().enumerate() {
                if let Some((col, loops)) = img {
                    let v = c.mul_ref(&S::x_pow(loops));
                    out[(row, col)].add_assign_ref(&v);
                }
            }
        }
        out
    }

    pub fn act_generator<S: Scalar>(&self, v: &CellVector<S>, k: usize) -> Result<CellVector<S>, Error> {
        if v.lambda != self.lambda {
            return Err(Error::InvalidPartition { n: v.lambda.n(), f: v.lambda.f, m: v.lambda.m });
        }
        let action = self.generator_action(k)?;
        let mut out = vec![S::zero(); self.dim()];
        for (i, c) in v.coords.iter().enumerate() {
            if let (false, Some((j, loops))) = (c.is_zero(), action[i]) {
                out[j].add_assign_ref(&c.mul_ref(&S::x_pow(loops)));
            }
        }
        Ok(CellVector { lambda: self.lambda, coords: out })
    }

    pub fn act_element<S: Scalar>(&self, v: &CellVector<S>, b: &TLElement<S>) -> CellVector<S> {
        CellVector { lambda: self.lambda, coords: self.element_matrix(b).left_apply(&v.coords) }
    }

    /// `⟨m_s, m_t⟩` by gluing the link state of `s` onto the mirror image of
    /// that of `t`: zero if a defect closes up, otherwise `x^loops`.
    pub fn form_exponent(&self, s: usize, t: usize) -> Option<usize> {
        link_pairing(&self.states[s], &self.states[t])
    }

    pub fn cellular_form(&self, s: &UpDownTableau, t: &UpDownTableau) -> Result<IntPoly, Error> {
        let (i, j) = match (self.position(s), self.position(t)) {
            (Some(i), Some(j)) => (i, j),
            _ => {
                let bad = if self.position(s).is_none() { s } else { t };
                return Err(Error::InvalidTableau(format!("{bad:?} is not of shape {}", self.lambda)));
            }
        };
        Ok(self.form_exponent(i, j).map_or_else(IntPoly::zero, IntPoly::x_pow))
    }

    pub fn gram_matrix(&self) -> GramMatrix {
        let dim = self.dim();
        let rows: Vec<Vec<IntPoly>> = (0..dim)
            .into_par_iter()
            .map(|i| (0..dim).map(|j| self.form_exponent(i, j).map_or_else(IntPoly::zero, IntPoly::x_pow)).collect())
            .collect();
        GramMatrix { lambda: self.lambda, order: self.basis.clone(), entries: Matrix::from_rows(rows) }
    }

    /// The bilinear form extended to coordinate vectors.
    pub fn form<S: Scalar>(&self, gram: &Matrix<S>, u: &[S], v: &[S]) -> S {
        let gv: Vec<S> = gram.transpose().left_apply(v);
        u.iter().zip(&gv).fold(S::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
    }
}

/// Pairing of two link states on the same points.
pub fn link_pairing(s: &HalfDiagram, t: &HalfDiagram) -> Option<usize> {
    let n = s.n();
    let ps = s.partners();
    let pt = t.partners();
    let mut seen = vec![false; n];
    let mut loops = 0;
    // Paths start at defects of s and must end at defects of t.
    for &d in s.defects() {
        let mut cur = d;
        let mut on_t = true;
        loop {
            seen[cur] = true;
            let next = if on_t { pt[cur] } else { ps[cur] };
            match next {
                Some(q) => {
                    seen[q] = true;
                    cur = q;
                    on_t = !on_t;
                }
                None => {
                    if !on_t {
                        // walked back into a defect of s
                        return None;
                    }
                    break;
                }
            }
        }
    }
    for start in 0..n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut cur = start;
        let mut on_t = true;
        while !seen[cur] {
            seen[cur] = true;
            let q = if on_t { pt[cur] } else { ps[cur] };
            cur = q.expect("closed component");
            on_t = !on_t;
        }
    }
    Some(loops)
}

pub fn sparse_to_matrix<S: Scalar>(action: &[SparseImage]) -> Matrix<S> {
    let dim = action.len();
    let mut m = Matrix::zeros(dim, dim);
    for (i, img) in action.iter().enumerate() {
        if let Some((j, loops)) = img {
            m[(i, *j)] = S::x_pow(*loops);
        }
    }
    m
}

/// A vector of `C^λ` in the canonical tableau order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellVector<S> {
    pub lambda: Partition,
    pub coords: Vec<S>,
}

impl<S: Scalar> CellVector<S> {
    pub fn basis_vector(lambda: Partition, i: usize) -> Self {
        let dim = tableaux(lambda).len();
        let mut coords = vec![S::zero(); dim];
        coords[i] = S::one();
        CellVector { lambda, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Nonzero coordinates keyed by tableau.
    pub fn support(&self) -> Vec<(UpDownTableau, S)> {
        let list = tableaux(self.lambda);
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (list[i].clone(), c.clone())).collect()
    }
}

impl<S: Scalar + Serialize> Serialize for CellVector<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> Result<Z::Ok, Z::Error> {
        #[derive(Serialize)]
        struct Entry<'a, S> {
            tableau: Vec<usize>,
            coeff: &'a S,
        }
        let list = tableaux(self.lambda);
        let entries: Vec<Entry<S>> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| Entry { tableau: list[i].fseq().to_vec(), coeff: c })
            .collect();
        entries.serialize(s)
    }
}

/// The Gram matrix of the cellular form in the canonical tableau order.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub lambda: Partition,
    pub order: Arc<Vec<UpDownTableau>>,
    pub entries: Matrix<IntPoly>,
}

impl Serialize for GramMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct G<'a> {
            lambda: Partition,
            order: Vec<&'a [usize]>,
            entries: Vec<Vec<IntPoly>>,
        }
        G { lambda: self.lambda, order: self.order.iter().map(|t| t.fseq()).collect(), entries: self.entries.to_rows() }
            .serialize(s)
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.entries.rows() {
            let row: Vec<String> = self.entries.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "{}", row.join("\t"))?;
        }
        Ok(())
    }
}

pub fn gram_matrix(lambda: Partition) -> GramMatrix {
    CellModule::new(lambda).gram_matrix()
}

/// `m_t e_k` by composing `m_λ v_t` with `e_k` and reading the product in
/// the Murphy basis; products in the higher ideal vanish.
pub fn algebraic_generator_action(
    module: &CellModule,
    basis: &MurphyBasis,
    k: usize,
) -> Result<Vec<SparseImage>, Error> {
    module.check_generator(k)?;
    let ek = PlanarDiagram::generator(module.n(), k)?;
    let top = &module.basis()[0];
    module
        .basis()
        .iter()
        .map(|t| {
            let (d, l0) = m_lambda_v(t);
            let (prod, loops) = d.compose_same(&ek);
            let (mu, u, v) = basis
                .index_of(&prod)
                .ok_or_else(|| Error::MurphyCollision(format!("{prod} not in basis")))?;
            if mu.f > module.lambda().f {
                return Ok(None);
            }
            let list = tableaux(mu);
            if mu != module.lambda() || list[u] != *top {
                return Err(Error::MurphyCollision(format!("{t:?} e_{k} lands outside m_λ A_n")));
            }
            Ok(Some((v, l0 + loops)))
        })
        .collect()
}

/// `⟨m_s, m_t⟩` from `m_λ v_s (m_λ v_t)* ≡ ⟨m_s, m_t⟩ m_λ`.
pub fn algebraic_form(s: &UpDownTableau, t: &UpDownTableau) -> IntPoly {
    let lambda = s.shape();
    let (ds, ls) = m_lambda_v(s);
    let (dt, lt) = m_lambda_v(t);
    let (prod, loops) = ds.compose_same(&dt.star());
    if prod.arc_grade() > lambda.f {
        return IntPoly::zero();
    }
    let (m, _) = crate::murphy::m_lambda_word(lambda).diagram();
    assert_eq!(prod, m, "surviving product is a multiple of m_λ");
    IntPoly::x_pow(ls + lt + loops)
}

/// Link-state and full-diagram routes agree on every generator action and
/// every form value.
pub fn routes_agree_check(lambda: Partition, basis: &MurphyBasis) -> Report {
    let module = CellModule::new(lambda);
    let mut rep = Report::new(format!("cell module routes agree, {lambda}"));
    for k in 1..module.n() {
        let fast = module.generator_action(k).unwrap();
        match algebraic_generator_action(&module, basis, k) {
            Ok(slow) => {
                rep.check(fast == slow, || format!("e_{k} action differs"));
            }
            Err(e) => rep.fail(format!("e_{k}: {e}")),
        }
        let via_diagram = module.diagram_action(&PlanarDiagram::generator(module.n(), k).unwrap());
        rep.check(fast == via_diagram, || format!("e_{k} diagram action differs"));
    }
    let gram = module.gram_matrix();
    for (i, s) in module.basis().iter().enumerate() {
        for (j, t) in module.basis().iter().enumerate() {
            rep.check(gram.entries[(i, j)] == algebraic_form(s, t), || format!("form at {s:?}, {t:?}"));
        }
    }
    rep
}

/// Relations of the generators, symmetry and monomiality of the Gram
/// matrix, and invariance `⟨u e_k, v⟩ = ⟨u, v e_k⟩`.
pub fn module_structure_check(lambda: Partition) -> Report {
    let module = CellModule::new(lambda);
    let n = module.n();
    let mut rep = Report::new(format!("cell module structure, {lambda}"));
    let mats: Vec<Matrix<IntPoly>> = (1..n).map(|k| module.generator_matrix(k).unwrap()).collect();
    let x = IntPoly::x();
    for i in 0..mats.len() {
        let a = &mats[i];
        rep.check(a.mul(a) == a.scale(&x), || format!("e_{0}^2 = x e_{0}", i + 1));
        for j in 0..mats.len() {
            let b = &mats[j];
            if i.abs_diff(j) == 1 {
                rep.check(a.mul(b).mul(a) == *a, || format!("e_{} e_{} e_{0}", i + 1, j + 1));
            } else if i.abs_diff(j) > 1 {
                rep.check(a.mul(b) == b.mul(a), || format!("e_{} e_{} commute", i + 1, j + 1));
            }
        }
    }
    let g = module.gram_matrix().entries;
    rep.check(g == g.transpose(), || "Gram matrix not symmetric".into());
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            let e = &g[(i, j)];
            let ok = e.is_zero() || matches!(e.as_monomial(), Some((c, d)) if c == num_bigint::BigInt::from(1) && d <= lambda.f);
            rep.check(ok, || format!("entry ({i},{j}) = {e}"));
        }
    }
    for (k, m) in mats.iter().enumerate() {
        let lhs = m.mul(&g);
        rep.check(lhs == lhs.transpose(), || format!("form not e_{}-invariant", k + 1));
    }
    let f = lambda.f;
    rep.check(g.rows() > 0 && g[(0, 0)] == IntPoly::x_pow(f), || "⟨m_tλ, m_tλ⟩ ≠ x^f".into());
    rep
}

/// Under `e_1, …, e_{n-2}`, the span of the `m_t` whose last step adds a
/// defect is a submodule isomorphic to `C^{(f, n-2f-1)}`, and the quotient
/// is isomorphic to `C^{(f-1, n-2f+1)}`, both via `t ↦ t|_{n-1}`.
pub fn restriction_filtration_check(lambda: Partition) -> Report {
    let n = lambda.n();
    let mut rep = Report::new(format!("restriction filtration, {lambda}"));
    if n < 2 {
        return rep;
    }
    let module = CellModule::new(lambda);
    let in_sub: Vec<bool> = module.basis().iter().map(|t| !t.arc_step(n)).collect();
    let pieces: Vec<(bool, Option<CellModule>)> = vec![
        (true, (lambda.m > 0).then(|| CellModule::new(Partition::new(lambda.f, lambda.m - 1)))),
        (false, (lambda.f > 0).then(|| CellModule::new(Partition::new(lambda.f - 1, lambda.m + 1)))),
    ];
    for k in 1..n - 1 {
        let action = module.generator_action(k).unwrap();
        for (t, img) in action.iter().enumerate() {
            if in_sub[t] {
                rep.check(img.is_none_or(|(j, _)| in_sub[j]), || {
                    format!("e_{k} moves {:?} out of the submodule", module.basis()[t].fseq())
                });
            }
        }
        for (sub, small) in &pieces {
            let Some(small) = small else { continue };
            let small_action = small.generator_action(k).unwrap();
            for (t, img) in action.iter().enumerate() {
                if in_sub[t] != *sub {
                    continue;
                }
                let restricted = module.basis()[t].restrict(n - 1).unwrap();
                let Some(i) = small.position(&restricted) else {
                    rep.fail(format!("{restricted:?} missing from {}", small.lambda()));
                    continue;
                };
                // in the quotient, images landing in the submodule vanish
                let projected = img.filter(|(j, _)| in_sub[*j] == *sub).map(|(j, l)| {
                    let r = module.basis()[j].restrict(n - 1).unwrap();
                    (small.position(&r), l)
                });
                let expected = small_action[i].map(|(j, l)| (Some(j), l));
                rep.check(projected == expected, || {
                    format!("e_{k} on {:?}: {projected:?} vs {expected:?} in {}", module.basis()[t].fseq(), small.lambda())
                });
            }
        }
    }
    rep
}
