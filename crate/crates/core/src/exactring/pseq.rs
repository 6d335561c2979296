//! The sequence `p_0 = 0, p_1 = 1, p_{i+1} = x p_i - p_{i-1}` and its product
//! identities.

use std::sync::{OnceLock, RwLock};

use super::poly::IntPoly;
use crate::report::Report;

/// Grow-only cache of `p_0, p_1, ...`.
#[derive(Debug)]
pub struct PSequence {
    cache: RwLock<Vec<IntPoly>>,
}

impl Default for PSequence {
    fn default() -> Self {
        Self::new()
    }
}

impl PSequence {
    pub fn new() -> Self {
        PSequence { cache: RwLock::new(vec![IntPoly::zero(), IntPoly::one()]) }
    }

    pub fn get(&self, i: usize) -> IntPoly {
        if let Some(p) = self.cache.read().unwrap().get(i) {
            return p.clone();
        }
        let mut cache = self.cache.write().unwrap();
        let x = IntPoly::x();
        while cache.len() <= i {
            let k = cache.len();
            let next = &(&x * &cache[k - 1]) - &cache[k - 2];
            cache.push(next);
        }
        cache[i].clone()
    }

    pub fn cached_len(&self) -> usize {
        self.cache.read().unwrap().len()
    }
}

fn global() -> &'static PSequence {
    static SEQ: OnceLock<PSequence> = OnceLock::new();
    SEQ.get_or_init(PSequence::new)
}

/// `p_i` from the shared cache.
pub fn p(i: usize) -> IntPoly {
    global().get(i)
}

/// Checks the product formulas for `p_{2i}`, `p_{2i+1}` and the two
/// telescoped sums of even- and odd-indexed terms, for every admissible index
/// up to `i_max`.
///
/// * `p_{2i} = p_{i-k+1} p_{i+k} - p_{i-k} p_{i+k-1}`, `1 <= k <= i`
/// * `p_{2i+1} = p_{i-k+1} p_{i+k+1} - p_{i-k} p_{i+k}`, `0 <= k <= i`
/// * `p_{2j} + ... + p_{2i} = p_{i-k+1} p_{i+k} - p_{j-k} p_{j+k-1}`, `1 <= k <= j <= i`
/// * `p_{2j+1} + ... + p_{2i+1} = p_{i-k+1} p_{i+k+1} - p_{j-k} p_{j+k}`, `0 <= k <= j <= i`
pub fn check_p_identities(i_max: usize) -> Report {
    let mut report = Report::new(format!("p-sequence identities, indices <= {i_max}"));
    let pp = |a: usize, b: usize| &p(a) * &p(b);

    for i in 1..=i_max {
        for k in 1..=i {
            let rhs = &pp(i - k + 1, i + k) - &pp(i - k, i + k - 1);
            report.check(p(2 * i) == rhs, || format!("p_2i product form fails at i={i}, k={k}"));
        }
    }
    for i in 0..=i_max {
        for k in 0..=i {
            let rhs = &pp(i - k + 1, i + k + 1) - &pp(i - k, i + k);
            report.check(p(2 * i + 1) == rhs, || format!("p_2i+1 product form fails at i={i}, k={k}"));
        }
    }
    for i in 0..=i_max {
        let mut even = IntPoly::zero();
        let mut odd = IntPoly::zero();
        for j in (0..=i).rev() {
            even += &p(2 * j);
            odd += &p(2 * j + 1);
            for k in 1..=j {
                let rhs = &pp(i - k + 1, i + k) - &pp(j - k, j + k - 1);
                report.check(even == rhs, || format!("even telescoped sum fails at i={i}, j={j}, k={k}"));
            }
            for k in 0..=j {
                let rhs = &pp(i - k + 1, i + k + 1) - &pp(j - k, j + k);
                report.check(odd == rhs, || format!("odd telescoped sum fails at i={i}, j={j}, k={k}"));
            }
        }
    }
    report
}
