//! The seminormal basis `f_t` of `C^λ` over `ℚ(x)`: simultaneous
//! eigenvectors of the Jucys-Murphy elements, their norms, and the action
//! of the generators in that basis.

use serde::Serialize;

use crate::cellmod::{CellModule, CellVector};
use crate::exactring::{bareiss_det, p, IntPoly, Matrix, RatFunc};
use crate::jucys::{jm_matrices, r_value, z_value};
use crate::report::Report;
use crate::tableaux::{partitions_of, tableaux, Partition, UpDownTableau};
use crate::Error;

/// The distinct values `r_t(k)` over all tableaux of length `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumSet {
    pub k: usize,
    pub values: Vec<IntPoly>,
}

impl SpectrumSet {
    pub fn contains(&self, r: &IntPoly) -> bool {
        self.values.binary_search(r).is_ok()
    }
}

pub fn spectrum(k: usize) -> SpectrumSet {
    let mut values: Vec<IntPoly> = partitions_of(k)
        .into_iter()
        .flat_map(|lambda| tableaux(lambda).iter().map(|t| r_value(t, k)).collect::<Vec<_>>())
        .collect();
    values.sort();
    values.dedup();
    SpectrumSet { k, values }
}

/// Coordinates of `f_t` in the Murphy basis.
pub type SeminormalVector = CellVector<RatFunc>;

fn rf(p: &IntPoly) -> RatFunc {
    RatFunc::from(p.clone())
}

fn to_rf(m: &Matrix<IntPoly>) -> Matrix<RatFunc> {
    m.map(rf)
}

fn r_vector(t: &UpDownTableau) -> Vec<IntPoly> {
    (0..=t.n()).map(|k| r_value(t, k)).collect()
}

/// Every `f_t` of one cell module, with the data used to build them.
pub struct SeminormalBasis {
    module: CellModule,
    vectors: Vec<Vec<RatFunc>>,
    gram: Matrix<RatFunc>,
}

impl SeminormalBasis {
    /// Builds each `f_t` by projecting `m_t` onto the joint eigenspace of
    /// `T_2, …, T_n` with eigenvalues `r_t(k)`; only the eigenvalues that
    /// occur in `C^λ` are used.
    pub fn new(lambda: Partition) -> Result<Self, Error> {
        let module = CellModule::new(lambda);
        let n = lambda.n();
        let basis = module.basis().to_vec();
        let dim = basis.len();
        let rvecs: Vec<Vec<IntPoly>> = basis.iter().map(r_vector).collect();
        for a in 0..dim {
            for b in a + 1..dim {
                if rvecs[a] == rvecs[b] {
                    return Err(Error::SpectrumDegenerate { k: n, value: format!("{:?}", rvecs[a]) });
                }
            }
        }
        let (jm, _) = jm_matrices::<IntPoly>(&module);
        let mut local: Vec<Vec<IntPoly>> = (0..=n).map(|k| rvecs.iter().map(|r| r[k].clone()).collect()).collect();
        for vals in &mut local {
            vals.sort();
            vals.dedup();
        }
        let vectors = (0..dim)
            .map(|i| {
                let mut v = vec![IntPoly::zero(); dim];
                v[i] = IntPoly::one();
                let mut den = IntPoly::one();
                for k in 2..=n {
                    let own = &rvecs[i][k];
                    for r in local[k].iter().filter(|r| *r != own) {
                        v = jm[k].sub_scalar(r).left_apply(&v);
                        den = &den * &(own - r);
                    }
                }
                v.into_iter().map(|c| RatFunc::from_parts(c, den.clone())).collect()
            })
            .collect();
        let gram = to_rf(&module.gram_matrix().entries);
        Ok(SeminormalBasis { module, vectors, gram })
    }

    pub fn lambda(&self) -> Partition {
        self.module.lambda()
    }

    pub fn module(&self) -> &CellModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn coords(&self, i: usize) -> &[RatFunc] {
        &self.vectors[i]
    }

    pub fn vector(&self, i: usize) -> SeminormalVector {
        CellVector { lambda: self.lambda(), coords: self.vectors[i].clone() }
    }

    /// `⟨f_s, f_t⟩`.
    pub fn pairing(&self, s: usize, t: usize) -> RatFunc {
        self.module.form(&self.gram, &self.vectors[s], &self.vectors[t])
    }

    pub fn norms(&self) -> Vec<RatFunc> {
        (0..self.dim()).map(|i| self.pairing(i, i)).collect()
    }

    /// Coordinates of `w` in the `f`-basis; `w` is given in the Murphy basis.
    pub fn in_f_basis(&self, w: &[RatFunc]) -> Vec<RatFunc> {
        let dim = self.dim();
        let mut y = vec![RatFunc::zero(); dim];
        for c in (0..dim).rev() {
            let mut acc = w[c].clone();
            for s in c + 1..dim {
                if !y[s].is_zero() && !self.vectors[s][c].is_zero() {
                    acc = &acc - &(&y[s] * &self.vectors[s][c]);
                }
            }
            y[c] = acc;
        }
        y
    }

    /// Entry `(s, t)` is `e_k(s, t)`: the coefficient of `f_s` in `f_t e_k`.
    pub fn ek_matrix(&self, k: usize) -> Result<Matrix<RatFunc>, Error> {
        let m = to_rf(&self.module.generator_matrix::<IntPoly>(k)?);
        let dim = self.dim();
        let mut out = Matrix::zeros(dim, dim);
        for t in 0..dim {
            let y = self.in_f_basis(&m.left_apply(&self.vectors[t]));
            for (s, c) in y.into_iter().enumerate() {
                out[(s, t)] = c;
            }
        }
        Ok(out)
    }
}

pub fn ft_vector(t: &UpDownTableau) -> Result<SeminormalVector, Error> {
    let basis = SeminormalBasis::new(t.shape())?;
    let i = basis.module.position(t).expect("tableau of its own shape");
    Ok(basis.vector(i))
}

/// `m_t F_t` with `F_t` the full product of resolvent factors over the
/// spectra of all tableaux of length `k`, for `k = 2, …, n`.
pub fn ft_vector_literal(t: &UpDownTableau) -> Result<SeminormalVector, Error> {
    let module = CellModule::new(t.shape());
    let (jm, _) = jm_matrices::<IntPoly>(&module);
    let i = module.position(t).expect("tableau of its own shape");
    let mut v = vec![RatFunc::zero(); module.dim()];
    v[i] = RatFunc::one();
    for k in 2..=t.n() {
        let own = r_value(t, k);
        let tk = to_rf(&jm[k]);
        for r in spectrum(k).values.iter().filter(|r| **r != own) {
            let scale = RatFunc::from_parts(IntPoly::one(), &own - r);
            v = tk.sub_scalar(&rf(r)).left_apply(&v).iter().map(|c| c * &scale).collect();
        }
    }
    Ok(CellVector { lambda: t.shape(), coords: v })
}

pub fn ek_coefficients(lambda: Partition, k: usize) -> Result<Matrix<RatFunc>, Error> {
    if k == 0 || k >= lambda.n() {
        return Err(Error::IndexOutOfRange { index: k, max: lambda.n().saturating_sub(1) });
    }
    SeminormalBasis::new(lambda)?.ek_matrix(k)
}

/// `⟨f_t, f_t⟩` from the cellular form.
pub fn norm(t: &UpDownTableau) -> Result<RatFunc, Error> {
    let basis = SeminormalBasis::new(t.shape())?;
    let i = basis.module.position(t).expect("tableau of its own shape");
    Ok(basis.pairing(i, i))
}

/// The tableau obtained by moving the arc step at `k + 1` to `k`, if `t`
/// has a non-arc step at `k` followed by an arc step and the move is legal.
pub fn raise_at(t: &UpDownTableau, k: usize) -> Option<UpDownTableau> {
    if k == 0 || k >= t.n() || t.arc_step(k) || !t.arc_step(k + 1) {
        return None;
    }
    let mut fseq = t.fseq().to_vec();
    fseq[k] += 1;
    UpDownTableau::from_fseq(fseq).ok()
}

/// `γ_s / γ_t` for `t ⊳ s` coupled at `k`, with `shape(t|_k) = (i, k-2i)`.
pub fn norm_ratio(k: usize, i: usize) -> RatFunc {
    let j = k - 2 * i;
    RatFunc::from_parts(&p(j + 1) * &p(j + 3), p(j + 2).pow(2))
}

/// `⟨f_t, f_t⟩` from `γ_{t^λ} = x^f` and the norm ratios along a chain of
/// single-step raises up to `t^λ`.
pub fn norm_by_chain(t: &UpDownTableau) -> RatFunc {
    let mut acc = RatFunc::one();
    let mut cur = t.clone();
    loop {
        let Some((k, up)) = (1..cur.n()).find_map(|k| raise_at(&cur, k).map(|u| (k, u))) else { break };
        acc = &acc * &norm_ratio(k, up.fseq()[k]);
        cur = up;
    }
    debug_assert_eq!(cur, UpDownTableau::maximal(t.shape()));
    &acc * &RatFunc::from(IntPoly::x_pow(t.shape().f))
}

/// One output row: `f_t`, its norm and its `r`-values.
#[derive(Clone, Debug, Serialize)]
pub struct SeminormalRow {
    pub tableau: Vec<usize>,
    pub coords: SeminormalVector,
    pub gamma: RatFunc,
    pub r: Vec<IntPoly>,
}

pub fn seminormal_rows(lambda: Partition) -> Result<Vec<SeminormalRow>, Error> {
    let basis = SeminormalBasis::new(lambda)?;
    Ok(basis
        .module
        .basis()
        .iter()
        .enumerate()
        .map(|(i, t)| SeminormalRow {
            tableau: t.fseq().to_vec(),
            coords: basis.vector(i),
            gamma: basis.pairing(i, i),
            r: r_vector(t),
        })
        .collect())
}

/// Every property of the seminormal basis of `C^λ`.
pub fn seminormal_check(lambda: Partition) -> Report {
    let mut rep = Report::new(format!("seminormal basis, {lambda}"));
    let basis = match SeminormalBasis::new(lambda) {
        Ok(b) => b,
        Err(e) => {
            rep.fail(e.to_string());
            return rep;
        }
    };
    let n = lambda.n();
    let list = basis.module.basis().to_vec();
    let dim = list.len();
    let (ts, zs) = jm_matrices::<IntPoly>(&basis.module);
    let (ts, zs): (Vec<_>, Vec<_>) = (ts.iter().map(to_rf).collect(), zs.iter().map(to_rf).collect());

    for (i, t) in list.iter().enumerate() {
        let f = basis.coords(i);
        rep.check(f[i].is_one(), || format!("f_{:?} has coefficient {} at itself", t.fseq(), f[i]));
        for (j, u) in list.iter().enumerate() {
            if j != i && !f[j].is_zero() {
                rep.check(u.dominates(t), || format!("f_{:?} involves m_{:?}", t.fseq(), u.fseq()));
            }
        }
        match ft_vector_literal(t) {
            Ok(lit) => {
                rep.check(lit.coords == f, || format!("literal F_t differs at {:?}", t.fseq()));
            }
            Err(e) => rep.fail(e.to_string()),
        }
        for k in 0..=n {
            let want = rf(&r_value(t, k));
            let got = ts[k].left_apply(f);
            rep.check(got.iter().zip(f).all(|(g, c)| *g == c * &want), || format!("f_{:?} T_{k}", t.fseq()));
            let want = rf(&z_value(t, k));
            let got = zs[k].left_apply(f);
            rep.check(got.iter().zip(f).all(|(g, c)| *g == c * &want), || format!("f_{:?} z_{k}", t.fseq()));
        }
    }

    let mut gammas = Vec::with_capacity(dim);
    for s in 0..dim {
        for t in 0..dim {
            let v = basis.pairing(s, t);
            if s == t {
                gammas.push(v);
            } else {
                rep.check(v.is_zero(), || format!("<f_{:?}, f_{:?}> = {v}", list[s].fseq(), list[t].fseq()));
            }
        }
    }
    for (t, g) in list.iter().zip(&gammas) {
        let c = norm_by_chain(t);
        rep.check(c == *g, || format!("norm of {:?}: direct {g}, chain {c}", t.fseq()));
    }
    let prod = gammas.iter().fold(RatFunc::one(), |a, g| &a * g);
    match bareiss_det(&basis.module.gram_matrix().entries) {
        Ok(d) => {
            rep.check(prod == rf(&d), || format!("product of norms {prod} vs det {d}"));
        }
        Err(e) => rep.fail(e.to_string()),
    }

    let x = RatFunc::x();
    for k in 1..n {
        let e = match basis.ek_matrix(k) {
            Ok(e) => e,
            Err(err) => {
                rep.fail(err.to_string());
                continue;
            }
        };
        for (ti, t) in list.iter().enumerate() {
            let partner = raise_at(t, k).or_else(|| lower_at(t, k));
            let pi = partner.as_ref().and_then(|u| basis.module.position(u));
            let flat = t.shape_at(k - 1).m == t.shape_at(k + 1).m;
            for si in 0..dim {
                if e[(si, ti)].is_zero() {
                    continue;
                }
                rep.check(flat, || format!("e_{k} moves f_{:?} although its defect count changes", t.fseq()));
                rep.check(si == ti || Some(si) == pi, || {
                    format!("e_{k}({:?}, {:?}) nonzero", list[si].fseq(), t.fseq())
                });
                let (rs, rt) = (r_vector(&list[si]), r_vector(t));
                let same = (0..=n).filter(|&j| j != k && j != k + 1).all(|j| rs[j] == rt[j]);
                rep.check(same, || format!("e_{k}({:?}, {:?}): r-values differ away from k", list[si].fseq(), t.fseq()));
            }
            // coupled pair with t the more dominant member
            let Some(si) = lower_at(t, k).and_then(|s| basis.module.position(&s)) else { continue };
            if e[(si, ti)].is_zero() {
                rep.fail(format!("e_{k}: pair {:?} / {:?} not coupled", t.fseq(), list[si].fseq()));
                continue;
            }
            let s = &list[si];
            let i = t.fseq()[k];
            let j = k - 2 * i;
            let ett = RatFunc::from_parts(p(j + 1), p(j + 2));
            let ess = RatFunc::from_parts(p(j + 3), p(j + 2));
            rep.check(e[(ti, ti)] == ett, || format!("e_{k}(t,t) at {:?}: {}", t.fseq(), e[(ti, ti)]));
            rep.check(e[(si, si)] == ess, || format!("e_{k}(s,s) at {:?}: {}", s.fseq(), e[(si, si)]));
            rep.check(e[(si, ti)].is_one(), || format!("e_{k}(s,t) at {:?}: {}", t.fseq(), e[(si, ti)]));
            rep.check(e[(ti, si)] == &ett * &ess, || format!("e_{k}(t,s) at {:?}: {}", t.fseq(), e[(ti, si)]));
            rep.check(&e[(ti, ti)] + &e[(si, si)] == x, || format!("e_{k} diagonal sum at {:?}", t.fseq()));
            for (u, ui) in [(t, ti), (s, si)] {
                let num = &r_value(u, k + 1) + &z_value_below(u, k);
                let den = &(&p(k) - &(&IntPoly::x() * &z_value_below(u, k))) - &(&IntPoly::from(2) * &r_value(u, k));
                let ok = !den.is_zero() && RatFunc::from_parts(num, den) == e[(ui, ui)];
                rep.check(ok, || format!("e_{k} diagonal vs r and z values at {:?}", u.fseq()));
            }
            let want = &gammas[ti] * &norm_ratio(k, i);
            rep.check(gammas[si] == want, || format!("norm ratio at {:?} -> {:?}", t.fseq(), s.fseq()));
        }
    }
    rep
}

fn z_value_below(t: &UpDownTableau, k: usize) -> IntPoly {
    z_value(t, k - 1)
}

/// Inverse of [`raise_at`].
pub fn lower_at(t: &UpDownTableau, k: usize) -> Option<UpDownTableau> {
    if k == 0 || k >= t.n() || !t.arc_step(k) || t.arc_step(k + 1) {
        return None;
    }
    let mut fseq = t.fseq().to_vec();
    fseq[k] -= 1;
    UpDownTableau::from_fseq(fseq).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_tableaux;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn ratio(a: &[i64], b: &[i64]) -> RatFunc {
        RatFunc::from_parts(poly(a), poly(b))
    }

    #[test]
    fn spectra() {
        assert_eq!(spectrum(1).values, vec![IntPoly::zero()]);
        assert_eq!(spectrum(2).values.len(), 2);
        assert!(spectrum(2).contains(&IntPoly::zero()) && spectrum(2).contains(&IntPoly::x()));
        let s3 = spectrum(3);
        for v in [poly(&[-1]), poly(&[-1, 0, 1]), IntPoly::zero()] {
            assert!(s3.contains(&v), "{v}");
        }
    }

    #[test]
    fn n3_vectors_and_norms() {
        let lambda = Partition::new(1, 1);
        let list = enumerate_tableaux(lambda);
        let (a, b) = (&list[0], &list[1]);
        let fa = ft_vector(a).unwrap();
        assert_eq!(fa.coords, vec![RatFunc::one(), RatFunc::zero()]);
        let fb = ft_vector(b).unwrap();
        assert_eq!(fb.coords, vec![ratio(&[-1], &[0, 1]), RatFunc::one()]);
        assert_eq!(ft_vector_literal(b).unwrap(), fb);
        assert_eq!(norm(a).unwrap(), RatFunc::x());
        assert_eq!(norm(b).unwrap(), ratio(&[-1, 0, 1], &[0, 1]));
        assert_eq!(norm_by_chain(b), ratio(&[-1, 0, 1], &[0, 1]));
        assert_eq!(norm_ratio(2, 1), ratio(&[-1, 0, 1], &[0, 0, 1]));
    }

    #[test]
    fn n3_ek() {
        let e = ek_coefficients(Partition::new(1, 1), 2).unwrap();
        assert_eq!(e[(0, 0)], ratio(&[1], &[0, 1]));
        assert_eq!(e[(1, 1)], ratio(&[-1, 0, 1], &[0, 1]));
        assert_eq!(e[(1, 0)], RatFunc::one());
        assert_eq!(e[(0, 1)], ratio(&[-1, 0, 1], &[0, 0, 1]));
        let e1 = ek_coefficients(Partition::new(1, 1), 1).unwrap();
        assert_eq!(e1[(0, 0)], RatFunc::x());
        assert!(e1[(1, 1)].is_zero() && e1[(0, 1)].is_zero() && e1[(1, 0)].is_zero());
        assert!(ek_coefficients(Partition::new(1, 1), 3).is_err());
    }

    #[test]
    fn top_tableau_vector_is_murphy_vector() {
        for lambda in partitions_of(6) {
            let top = UpDownTableau::maximal(lambda);
            let f = ft_vector(&top).unwrap();
            let mut want = vec![RatFunc::zero(); f.coords.len()];
            want[0] = RatFunc::one();
            assert_eq!(f.coords, want);
        }
    }

    #[test]
    fn coupled_pair_r_values_differ_at_k_plus_one() {
        let list = enumerate_tableaux(Partition::new(1, 1));
        let e = ek_coefficients(Partition::new(1, 1), 2).unwrap();
        assert!(!e[(1, 0)].is_zero());
        assert_ne!(r_value(&list[0], 3), r_value(&list[1], 3));
        assert_eq!(r_value(&list[0], 1), r_value(&list[1], 1));
    }

    #[test]
    fn small_sweeps() {
        for n in 1..=5 {
            for lambda in partitions_of(n) {
                let r = seminormal_check(lambda);
                assert!(r.passed(), "{r}");
            }
        }
    }
}
