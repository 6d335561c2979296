//! Gram determinants of cell modules: directly, by the branching law and
//! by the closed product formula.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use crate::cellmod::CellModule;
use crate::exactring::{bareiss_det, det_by_evaluation, p, IntPoly, RatFunc};
use crate::report::Report;
use crate::tableaux::{dim, dominates, partitions_of, Partition};
use crate::Error;

/// A formal product `Π p_i^{e_i}` with integer exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PProduct {
    exps: BTreeMap<usize, i64>,
}

impl PProduct {
    pub fn one() -> Self {
        Self::default()
    }

    /// `(p_a / p_b)^e`.
    pub fn ratio_pow(a: usize, b: usize, e: i64) -> Self {
        let mut out = Self::one();
        out.push(a, e);
        out.push(b, -e);
        out
    }

    fn push(&mut self, i: usize, e: i64) {
        // p_1 = 1
        if e == 0 || i == 1 {
            return;
        }
        let slot = self.exps.entry(i).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&i);
        }
    }

    pub fn mul(&self, other: &PProduct) -> PProduct {
        let mut out = self.clone();
        for (&i, &e) in &other.exps {
            out.push(i, e);
        }
        out
    }

    pub fn exponent(&self, i: usize) -> i64 {
        self.exps.get(&i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<usize, i64> {
        &self.exps
    }

    /// Panics if the product involves `p_0 = 0` in a denominator.
    pub fn to_ratfunc(&self) -> RatFunc {
        let mut num = IntPoly::one();
        let mut den = IntPoly::one();
        for (&i, &e) in &self.exps {
            let f = p(i).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = &num * &f;
            } else {
                den = &den * &f;
            }
        }
        RatFunc::from_parts(num, den)
    }
}

impl fmt::Display for PProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(i, e)| if *e == 1 { format!("p_{i}") } else { format!("p_{i}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for PProduct {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, i64> = self.exps.iter().map(|(i, e)| (format!("p_{i}"), *e)).collect();
        map.serialize(s)
    }
}

fn dim_i64(lambda: Partition) -> i64 {
    i64::try_from(dim(lambda)).expect("dimension fits in i64")
}

/// `g_{λ,μ} = (p_{n-i-j+1} / p_{i-j})^{dim μ}` for `λ = (i, n-2i) ⊳ μ = (j, n-2j)`.
pub fn g_factor_product(lambda: Partition, mu: Partition) -> Result<PProduct, Error> {
    let n = lambda.n();
    if mu.n() != n {
        return Err(Error::SizeMismatch(n, mu.n()));
    }
    if !dominates(lambda, mu)? || lambda == mu {
        return Err(Error::NotStrictlyDominated(lambda.to_string(), mu.to_string()));
    }
    let (i, j) = (lambda.f, mu.f);
    Ok(PProduct::ratio_pow(n - i - j + 1, i - j, dim_i64(mu)))
}

pub fn g_factor(lambda: Partition, mu: Partition) -> Result<RatFunc, Error> {
    Ok(g_factor_product(lambda, mu)?.to_ratfunc())
}

/// The closed formula as a formal product: over `μ` strictly below `λ`, or
/// `det((f-1, 1)) x^{dim λ}` when `λ` has no defects.
pub fn closed_form_product(lambda: Partition) -> PProduct {
    let n = lambda.n();
    if lambda.f == 0 {
        return PProduct::one();
    }
    if lambda.m == 0 {
        let mu = Partition::new(lambda.f - 1, 1);
        let mut out = closed_form_product(mu);
        out.push(2, dim_i64(lambda));
        return out;
    }
    (0..lambda.f)
        .map(|j| g_factor_product(lambda, Partition::new(j, n - 2 * j)).expect("λ dominates μ"))
        .fold(PProduct::one(), |a, g| a.mul(&g))
}

pub fn closed_form_det(lambda: Partition) -> RatFunc {
    closed_form_product(lambda).to_ratfunc()
}

/// `det(λ) = Π_{ν→λ} det(ν) · (p_{n-2f+2} / p_{n-2f+1})^{dim(f-1, n-2f+1)}`,
/// memoized.
pub fn branching_product(lambda: Partition) -> PProduct {
    static MEMO: OnceLock<RwLock<HashMap<Partition, PProduct>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.read().unwrap().get(&lambda) {
        return v.clone();
    }
    let out = if lambda.f == 0 {
        PProduct::one()
    } else {
        let mu = Partition::new(lambda.f - 1, lambda.m + 1);
        let base = lambda.predecessors().into_iter().fold(PProduct::one(), |a, nu| a.mul(&branching_product(nu)));
        base.mul(&PProduct::ratio_pow(lambda.m + 2, lambda.m + 1, dim_i64(mu)))
    };
    memo.write().unwrap().insert(lambda, out.clone());
    out
}

pub fn branching_det(lambda: Partition) -> RatFunc {
    branching_product(lambda).to_ratfunc()
}

/// Determinant of the Gram matrix: Bareiss up to `direct_limit` rows, and
/// evaluation-interpolation with degree bound `f · dim λ` above that.
pub fn direct_det(lambda: Partition, direct_limit: usize) -> Result<IntPoly, Error> {
    let gram = CellModule::new(lambda).gram_matrix().entries;
    if gram.rows() <= direct_limit {
        bareiss_det(&gram)
    } else {
        det_by_evaluation(&gram, lambda.f * gram.rows())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DetReport {
    pub lambda: Partition,
    pub dim: u128,
    pub direct: Option<IntPoly>,
    pub branching: RatFunc,
    pub closed: RatFunc,
    pub closed_product: PProduct,
    pub agree: bool,
}

impl DetReport {
    /// The common value when all computed routes agree.
    pub fn value(&self) -> Option<&RatFunc> {
        self.agree.then_some(&self.closed)
    }
}

/// All three determinants; the direct one is skipped when `direct_limit`
/// is zero or `compute_direct` is false.
pub fn det_report(lambda: Partition, direct_limit: usize, compute_direct: bool) -> Result<DetReport, Error> {
    let closed_product = closed_form_product(lambda);
    let closed = closed_product.to_ratfunc();
    let branching = branching_det(lambda);
    let direct = if compute_direct { Some(direct_det(lambda, direct_limit)?) } else { None };
    let agree = closed == branching && direct.as_ref().is_none_or(|d| RatFunc::from(d.clone()) == closed);
    Ok(DetReport { lambda, dim: dim(lambda), direct, branching, closed, closed_product, agree })
}

/// Triple agreement for every `λ ⊢ n`, polynomiality of the closed value
/// and the dimension identity behind the branching exponents.
pub fn gramdet_check(n: usize, direct_limit: usize) -> Report {
    let mut rep = Report::new(format!("Gram determinants, n = {n}"));
    for lambda in partitions_of(n) {
        match det_report(lambda, direct_limit, true) {
            Ok(r) => {
                rep.check(r.agree, || {
                    format!("{lambda}: direct {:?}, branching {}, closed {}", r.direct, r.branching, r.closed)
                });
                rep.check(r.closed.as_poly().is_some(), || format!("{lambda}: closed value {} not a polynomial", r.closed));
            }
            Err(e) => rep.fail(format!("{lambda}: {e}")),
        }
        let below: u128 = lambda.predecessors().into_iter().map(dim).sum();
        if n > 0 {
            rep.check(below == dim(lambda), || format!("{lambda}: dim {} vs restriction {below}", dim(lambda)));
        }
    }
    rep
}

/// `n = 11`, `λ = (5, 1)`: the displayed p-ratio product.
pub fn worked_example_product() -> PProduct {
    [(7, 5, 1), (6, 4, 10), (5, 3, 44), (4, 2, 110), (3, 1, 165)]
        .into_iter()
        .fold(PProduct::one(), |a, (i, j, e)| a.mul(&PProduct::ratio_pow(i, j, e)))
}

/// `p_7 (p_3 - 2p_1)^10 p_5^43 (p_3 - p_1)^100 p_3^131`.
pub fn worked_example_polynomial() -> IntPoly {
    let a = &p(3) - &(&IntPoly::from(2) * &p(1));
    let b = &p(3) - &p(1);
    let mut out = p(7);
    for (f, e) in [(a, 10), (p(5), 43), (b, 100), (p(3), 131)] {
        out = &out * &f.pow(e);
    }
    out
}
