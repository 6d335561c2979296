//! Jucys-Murphy elements `T_i`, the central elements `z_i`, their shifted
//! versions, and their eigenvalues on cell modules.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::cellmod::CellModule;
use crate::diagrams::TLElement;
use crate::exactring::{p, IntPoly, Matrix, Scalar};
use crate::report::Report;
use crate::tableaux::{partitions_of, Partition, UpDownTableau};
use crate::Error;

type El = TLElement<IntPoly>;

fn gen(n: usize, i: usize) -> El {
    El::generator(n, i).expect("generator index checked by caller")
}

fn xp(k: usize) -> IntPoly {
    IntPoly::x_pow(k)
}

/// `z_i = Σ_k x^k T_{i-k}`, with `z_0 = z_1 = 0`.
fn z_from(ts: &[El], i: usize, n: usize) -> El {
    if i < 2 {
        return El::zero(n);
    }
    let mut z = El::zero(n);
    for k in 0..=i {
        z.add_scaled(&ts[i - k], &xp(k));
    }
    z
}

/// The family `T^{(k)}_0, …, T^{(k)}_len` in `A_n`; `k = 1` gives the
/// Jucys-Murphy elements.
fn family(n: usize, k: usize, len: usize) -> (Vec<El>, Vec<El>) {
    let mut ts = vec![El::zero(n), El::zero(n)];
    let mut zs = vec![El::zero(n), El::zero(n)];
    if len >= 2 {
        ts.push(gen(n, k));
        zs.push(z_from(&ts, 2, n));
    }
    for i in 2..len {
        let g = k + i - 1;
        let e = gen(n, g);
        let e_prev = gen(n, g - 1);
        let t = &ts[i];
        let mut next = -&(&e * t);
        next = &next - &(t * &e);
        next = &next + &(&(&(&e * &e_prev) * t) * &e);
        next = &next - &zs[i - 1];
        next = &next - &(&zs[i - 2] * &e);
        ts.push(next);
        zs.push(z_from(&ts, i + 1, n));
    }
    ts.truncate(len + 1);
    zs.truncate(len + 1);
    (ts, zs)
}

/// `T_0, …, T_n` and `z_0, …, z_n` in `A_n`.
pub struct JMCache {
    n: usize,
    t: Vec<El>,
    z: Vec<El>,
}

impl JMCache {
    pub fn new(n: usize) -> Self {
        let (t, z) = family(n, 1, n);
        JMCache { n, t, z }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self, i: usize) -> Result<&El, Error> {
        self.t.get(i).ok_or(Error::IndexOutOfRange { index: i, max: self.n })
    }

    pub fn z(&self, i: usize) -> Result<&El, Error> {
        self.z.get(i).ok_or(Error::IndexOutOfRange { index: i, max: self.n })
    }
}

/// Shared per-`n` cache.
pub fn jm_cache(n: usize) -> Arc<JMCache> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<JMCache>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.read().unwrap().get(&n) {
        return c.clone();
    }
    let built = Arc::new(JMCache::new(n));
    cache.write().unwrap().entry(n).or_insert(built).clone()
}

pub fn jm_element(n: usize, i: usize) -> Result<El, Error> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(jm_cache(n).t[i].clone())
}

pub fn central_element(n: usize, i: usize) -> Result<El, Error> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(jm_cache(n).z[i].clone())
}

/// `T^{(k)}_i` in `A_n`; it involves `e_k, …, e_{k+i-2}`.
pub fn shifted_jm(n: usize, k: usize, i: usize) -> Result<El, Error> {
    if k == 0 || (i >= 2 && k + i - 2 >= n) {
        return Err(Error::IndexOutOfRange { index: k + i.saturating_sub(2), max: n.saturating_sub(1) });
    }
    Ok(family(n, k, i).0.swap_remove(i))
}

/// `z^{(k)}_i` in `A_n`.
pub fn shifted_central(n: usize, k: usize, i: usize) -> Result<El, Error> {
    if k == 0 || (i >= 2 && k + i - 2 >= n) {
        return Err(Error::IndexOutOfRange { index: k + i.saturating_sub(2), max: n.saturating_sub(1) });
    }
    Ok(family(n, k, i).1.swap_remove(i))
}

/// `T_0, …, T_n` from `T_{i+1} = -e_i T_i - T_i e_i + (p_i - x z_{i-1}) e_i - z_{i-1}`.
pub fn alternate_family(n: usize) -> Vec<El> {
    let mut ts = vec![El::zero(n), El::zero(n)];
    if n >= 2 {
        ts.push(gen(n, 1));
    }
    for i in 2..n {
        let e = gen(n, i);
        let t = &ts[i];
        let z1 = z_from(&ts, i - 1, n);
        let coeff = &El::scalar(n, p(i)) - &z1.scale(&IntPoly::x());
        let mut next = -&(&e * t);
        next = &next - &(t * &e);
        next = &next + &(&coeff * &e);
        next = &next - &z1;
        ts.push(next);
    }
    ts
}

/// `r_t(k)`.
pub fn r_value(t: &UpDownTableau, k: usize) -> IntPoly {
    if k < 2 {
        return IntPoly::zero();
    }
    let i = t.fseq()[k];
    if t.arc_step(k) {
        &(&p(i) - &(&IntPoly::x() * &p(i - 1))) * &p(k - i + 1)
    } else {
        &(&p(k - i + 1) - &(&IntPoly::x() * &p(k - i))) * &p(i)
    }
}

/// `z_t(k) = p_i p_{k-i+1}` where `shape(t|_k) = (i, k-2i)`.
pub fn z_value(t: &UpDownTableau, k: usize) -> IntPoly {
    let i = t.fseq()[k];
    &p(i) * &p(k - i + 1)
}

/// `Σ_j x^j r_t(k-j)`.
pub fn z_value_by_sum(t: &UpDownTableau, k: usize) -> IntPoly {
    let mut acc = IntPoly::zero();
    for j in 0..=k {
        acc += &(&xp(j) * &r_value(t, k - j));
    }
    acc
}

/// `r_t(k)` and `z_t(k)` for every tableau of one shape.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumTable {
    pub lambda: Partition,
    pub rows: Vec<SpectrumRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumRow {
    pub tableau: Vec<usize>,
    pub r: Vec<IntPoly>,
    pub z: Vec<IntPoly>,
}

pub fn spectrum_table(lambda: Partition) -> SpectrumTable {
    let n = lambda.n();
    let rows = crate::tableaux::tableaux(lambda)
        .iter()
        .map(|t| SpectrumRow {
            tableau: t.fseq().to_vec(),
            r: (0..=n).map(|k| r_value(t, k)).collect(),
            z: (0..=n).map(|k| z_value(t, k)).collect(),
        })
        .collect();
    SpectrumTable { lambda, rows }
}

/// Matrices of `T_0, …, T_n` on `C^λ`, by running the defining recursion
/// on the generator matrices.
pub fn jm_matrices<S: Scalar>(module: &CellModule) -> (Vec<Matrix<S>>, Vec<Matrix<S>>) {
    let n = module.n();
    let dim = module.dim();
    let e: Vec<Matrix<S>> =
        (0..n).map(|k| if k == 0 { Matrix::zeros(dim, dim) } else { module.generator_matrix(k).unwrap() }).collect();
    let zero = Matrix::<S>::zeros(dim, dim);
    let mut ts = vec![zero.clone(), zero.clone()];
    if n >= 2 {
        ts.push(e[1].clone());
    }
    let z_at = |ts: &[Matrix<S>], i: usize| -> Matrix<S> {
        if i < 2 {
            return zero.clone();
        }
        (0..=i).fold(zero.clone(), |acc, k| acc.add(&ts[i - k].scale(&S::x_pow(k))))
    };
    for i in 2..n {
        let t = &ts[i];
        let next = e[i]
            .mul(t)
            .neg()
            .sub(&t.mul(&e[i]))
            .add(&e[i].mul(&e[i - 1]).mul(t).mul(&e[i]))
            .sub(&z_at(&ts, i - 1))
            .sub(&e[i].mul(&z_at(&ts, i - 2)));
        ts.push(next);
    }
    ts.truncate(n + 1);
    let zs = (0..ts.len()).map(|i| z_at(&ts, i)).collect();
    (ts, zs)
}

/// Checks, on `C^λ`, that `T_k` and `z_k` act triangularly with diagonals
/// `r_t(k)` and `z_t(k)`, that the recursion and the explicit elements give
/// the same matrices, and the eigenvalues of `z_i` on `m_{t^λ}`.
pub fn triangular_action_check(lambda: Partition) -> Report {
    let n = lambda.n();
    let mut rep = Report::new(format!("JM triangularity, {lambda}"));
    let module = CellModule::new(lambda);
    let (ts, zs) = jm_matrices::<IntPoly>(&module);
    let cache = jm_cache(n);
    let basis = module.basis();
    for k in 0..=n {
        rep.check(module.element_matrix(&cache.t[k]) == ts[k], || format!("T_{k}: element and recursion differ"));
        for (name, mat, value) in [("T", &ts[k], r_value as fn(&UpDownTableau, usize) -> IntPoly), ("z", &zs[k], z_value)]
        {
            for (i, t) in basis.iter().enumerate() {
                for (j, v) in basis.iter().enumerate() {
                    let entry = &mat[(i, j)];
                    if i == j {
                        let want = value(t, k);
                        rep.check(*entry == want, || format!("{name}_{k} diagonal at {:?}: {entry} vs {want}", t.fseq()));
                    } else if !entry.is_zero() {
                        rep.check(v.dominates(t), || format!("{name}_{k} entry at ({:?}, {:?})", t.fseq(), v.fseq()));
                    }
                }
                if name == "z" {
                    let sum = z_value_by_sum(t, k);
                    rep.check(sum == value(t, k), || format!("z_t({k}) sum at {:?}", t.fseq()));
                }
            }
        }
        // eigenvalues of z_k on m_{t^λ}
        if k >= 1 {
            let f = lambda.f;
            let scalar = if k > 2 * f { &p(f) * &p(k - f + 1) } else { &p(k / 2) * &p(k - k / 2 + 1) };
            let row = zs[k].row(0);
            let ok = row[0] == scalar && row[1..].iter().all(IntPoly::is_zero);
            rep.check(ok, || format!("m_tλ z_{k} is not {scalar} m_tλ"));
        }
    }
    rep
}

/// Distinct tableaux with a common restriction to `n - 1` have distinct
/// `r`-values at `n`.
pub fn separation_check(n: usize) -> Report {
    let mut rep = Report::new(format!("JM separation, n = {n}"));
    if n == 0 {
        return rep;
    }
    let lists: Vec<_> = partitions_of(n).into_iter().map(crate::tableaux::tableaux).collect();
    let mut by_prefix: HashMap<&[usize], Vec<&UpDownTableau>> = HashMap::new();
    for t in lists.iter().flat_map(|l| l.iter()) {
        by_prefix.entry(&t.fseq()[..n]).or_default().push(t);
    }
    for group in by_prefix.values() {
        for (a, s) in group.iter().enumerate() {
            for t in &group[a + 1..] {
                let (rs, rt) = (r_value(s, n), r_value(t, n));
                rep.check(rs != rt, || format!("{:?} and {:?} share r = {rs}", s.fseq(), t.fseq()));
            }
        }
    }
    rep
}

/// The algebraic identities satisfied by the `T_i`, `z_i` and their
/// shifted versions, checked as exact identities in `A_n`.
pub fn verify_jm_properties(n: usize) -> Report {
    let mut rep = Report::new(format!("JM identities, n = {n}"));
    if n < 2 {
        return rep;
    }
    let cache = jm_cache(n);
    let (t, z) = (&cache.t, &cache.z);
    let e = |i: usize| gen(n, i);
    let x = IntPoly::x();
    let scal = |c: IntPoly| El::scalar(n, c);

    let pairs: Vec<(usize, usize)> = (0..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter(|&&(i, j)| !t[i].commutator(&t[j]).is_zero())
        .map(|(i, j)| format!("[T_{i}, T_{j}] != 0"))
        .collect();
    rep.check(bad.is_empty(), || bad.join("; "));

    for i in 0..=n {
        rep.check(t[i].star() == t[i], || format!("T_{i}* != T_{i}"));
        rep.check(z[i].star() == z[i], || format!("z_{i}* != z_{i}"));
        for k in 1..i {
            rep.check(z[i].commutator(&e(k)).is_zero(), || format!("z_{i} does not commute with e_{k}"));
        }
        for k in 1..i.saturating_sub(1) {
            rep.check(t[i].commutator(&e(k)).is_zero(), || format!("T_{i} does not commute with e_{k}"));
        }
    }
    for i in 2..n {
        let lhs = &(&e(i) * &e(i - 1)) * &(&t[i] * &e(i));
        rep.check(lhs == &(&e(i) * &t[i]) * &(&e(i - 1) * &e(i)), || format!("e_{i} e_{} T_{i} e_{i}", i - 1));
        if i + 1 < n {
            let a = &(&e(i + 1) * &e(i)) * &(&t[i] * &e(i + 1));
            let b = &(&e(i + 1) * &t[i]) * &(&e(i) * &e(i + 1));
            rep.check(a == b, || format!("e_{} e_{i} T_{i} e_{}", i + 1, i + 1));
        }
        let s = &t[i].scale(&x) + &t[i + 1];
        rep.check(s.commutator(&e(i)).is_zero(), || format!("x T_{i} + T_{} does not commute with e_{i}", i + 1));
        rep.check(e(i - 1).commutator(&t[i + 1]).is_zero(), || format!("e_{} T_{}", i - 1, i + 1));
        // e_i e_{i-1} T_i e_i and e_i T_i e_i
        let rhs = &(&(&z[i - 2] - &z[i - 1].scale(&x)) + &scal(p(i))) * &e(i);
        rep.check(lhs == rhs, || format!("e_{i} e_{} T_{i} e_{i} closed form", i - 1));
        let lhs2 = &(&e(i) * &t[i]) * &e(i);
        let rhs2 = &(&scal(p(i - 1)) - &z[i - 1].scale(&IntPoly::from(2))) * &e(i);
        rep.check(lhs2 == rhs2, || format!("e_{i} T_{i} e_{i} closed form"));
        // powers of T_{i+1} against e_i
        let base = &(&scal(p(i + 1)) - &z[i].scale(&x)) + &z[i - 1];
        let (mut l, mut r) = (e(i), e(i));
        for power in 1..=3 {
            l = &l * &t[i + 1];
            r = &r * &base;
            rep.check(l == r, || format!("e_{i} T_{}^{power}", i + 1));
        }
    }
    let alt = alternate_family(n);
    for i in 0..=n {
        rep.check(alt[i] == t[i], || format!("alternate recursion differs at T_{i}"));
    }
    for k in 1..n {
        // the k-shifted family fits while k + i - 1 <= n - 1
        let len = n - k + 1;
        let (tk, zk) = family(n, k, len);
        if k == 1 {
            rep.check(tk == *t, || "T^(1) != T".into());
        }
        let (tk2, zk2) = if k + 2 < n { family(n, k + 2, n - k - 1) } else { (vec![El::zero(n); 2], vec![El::zero(n); 2]) };
        for i in 2..len {
            if i > tk2.len() {
                break;
            }
            let ek = e(k);
            let lhs = &zk[i] * &ek;
            let rhs = &(&ek * &zk2[i - 2]) + &ek.scale(&p(i));
            rep.check(lhs == rhs, || format!("z^({k})_{i} e_{k}"));
            let lhs = &tk[i + 1] * &ek;
            let rhs = &(&ek * &tk2[i - 1]) - &ek.scale(&p(i - 1));
            rep.check(lhs == rhs, || format!("T^({k})_{} e_{k}", i + 1));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_tableaux;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn first_elements() {
        assert!(jm_element(3, 0).unwrap().is_zero());
        assert!(jm_element(3, 1).unwrap().is_zero());
        assert_eq!(jm_element(3, 2).unwrap(), gen(3, 1));
        let want = &(&(-&(&gen(3, 2) * &gen(3, 1))) - &(&gen(3, 1) * &gen(3, 2))) + &gen(3, 2).scale(&IntPoly::x());
        assert_eq!(jm_element(3, 3).unwrap(), want);
        assert!(jm_element(3, 4).is_err());
    }

    #[test]
    fn shifted_elements() {
        assert_eq!(shifted_jm(4, 3, 2).unwrap(), gen(4, 3));
        assert!(shifted_jm(5, 2, 0).unwrap().is_zero());
        for n in 2..=6 {
            for i in 0..=n {
                assert_eq!(shifted_jm(n, 1, i).unwrap(), jm_element(n, i).unwrap());
            }
        }
        assert!(shifted_jm(4, 4, 2).is_err());
    }

    #[test]
    fn r_values_n3() {
        let list = enumerate_tableaux(Partition::new(1, 1));
        assert_eq!(r_value(&list[0], 3), poly(&[-1]));
        assert_eq!(r_value(&list[1], 3), poly(&[-1, 0, 1]));
        for t in &list {
            assert!(r_value(t, 0).is_zero() && r_value(t, 1).is_zero());
        }
        let m = CellModule::new(Partition::new(1, 1));
        let (ts, _) = jm_matrices::<IntPoly>(&m);
        assert_eq!(ts[3].to_rows(), vec![vec![poly(&[-1]), IntPoly::zero()], vec![poly(&[0, -1]), poly(&[-1, 0, 1])]]);
        assert!(ts[1].is_zero() && ts[0].is_zero());
    }

    #[test]
    fn spectrum_rows() {
        let s = spectrum_table(Partition::new(1, 1));
        assert_eq!(s.rows.len(), 2);
        assert_eq!(s.rows[1].r[3], poly(&[-1, 0, 1]));
        assert_eq!(s.rows[0].z[2], poly(&[0, 1]));
    }

    #[test]
    fn small_sweeps() {
        for n in 1..=5 {
            let r = verify_jm_properties(n);
            assert!(r.passed(), "{r}");
            assert!(separation_check(n).passed());
            for lambda in partitions_of(n) {
                let r = triangular_action_check(lambda);
                assert!(r.passed(), "{r}");
            }
        }
        assert_eq!(separation_check(1).checked(), 0);
        assert_eq!(separation_check(3).checked(), 1);
    }

    #[test]
    fn z_on_top_tableau_n5() {
        let lambda = Partition::new(1, 3);
        let m = CellModule::new(lambda);
        let (_, zs) = jm_matrices::<IntPoly>(&m);
        assert_eq!(zs[5][(0, 0)], &p(1) * &p(5));
    }
}
