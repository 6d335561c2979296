//! Exact determinants of integer-polynomial matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::matrix::Matrix;
use super::poly::IntPoly;
use crate::Error;

/// Fraction-free (Bareiss) elimination over Z[x].
pub fn bareiss_det(m: &Matrix<IntPoly>) -> Result<IntPoly, Error> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(IntPoly::one());
    }
    let mut a = m.to_rows();
    let mut prev = IntPoly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(IntPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = IntPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Bareiss elimination over Z.
pub fn bareiss_det_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let t = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = t / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// The `i`-th point of the sequence 0, 1, -1, 2, -2, ...
pub fn evaluation_point(i: usize) -> BigInt {
    let k = i.div_ceil(2) as i64;
    BigInt::from(if i % 2 == 1 { k } else { -k })
}

/// Determinant by evaluation at `degree_bound + 1` integers and interpolation.
///
/// One extra point is evaluated; if the interpolant disagrees there, the bound
/// was too small and [`Error::DegreeBoundExceeded`] is returned.
pub fn det_by_evaluation(m: &Matrix<IntPoly>, degree_bound: usize) -> Result<IntPoly, Error> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let points: Vec<BigInt> = (0..degree_bound + 2).map(evaluation_point).collect();
    let values: Vec<BigInt> = points
        .par_iter()
        .map(|pt| {
            let rows = (0..m.rows())
                .map(|i| m.row(i).iter().map(|e| e.eval(pt)).collect())
                .collect();
            bareiss_det_int(rows)
        })
        .collect();
    let poly = interpolate(&points[..=degree_bound], &values[..=degree_bound])?;
    let check = &points[degree_bound + 1];
    if poly.eval(check) != values[degree_bound + 1] {
        return Err(Error::DegreeBoundExceeded(degree_bound));
    }
    Ok(poly)
}

/// Newton interpolation through distinct integer points; the interpolant must
/// have integer coefficients.
pub fn interpolate(points: &[BigInt], values: &[BigInt]) -> Result<IntPoly, Error> {
    assert_eq!(points.len(), values.len());
    let n = points.len();
    let mut dd: Vec<BigRational> = values.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = BigRational::from_integer(&points[i] - &points[i - level]);
            dd[i] = (&dd[i] - &dd[i - 1]) / denom;
        }
    }
    // Expand the Newton form by Horner's rule.
    let mut coeffs: Vec<BigRational> = Vec::new();
    for i in (0..n).rev() {
        // coeffs = coeffs * (x - points[i]) + dd[i]
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * BigRational::from_integer(points[i].clone());
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    let ints = coeffs
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegralInterpolant)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntPoly::from_coeffs(ints))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Laplace expansion along the first row; independent of both routes.
    fn cofactor_det(m: &[Vec<IntPoly>]) -> IntPoly {
        let n = m.len();
        if n == 0 {
            return IntPoly::one();
        }
        let mut acc = IntPoly::zero();
        for j in 0..n {
            let minor: Vec<Vec<IntPoly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect())
                .collect();
            let term = &m[0][j] * &cofactor_det(&minor);
            if j % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    }

    #[test]
    fn two_by_two() {
        let m = Matrix::from_rows(vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[1]), p(&[0, 1])]]);
        assert_eq!(bareiss_det(&m).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(det_by_evaluation(&m, 2).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(cofactor_det(&m.to_rows()), p(&[-1, 0, 1]));
    }

    #[test]
    fn trivial_shapes() {
        assert_eq!(bareiss_det(&Matrix::<IntPoly>::identity(5)).unwrap(), IntPoly::one());
        let single = Matrix::from_rows(vec![vec![IntPoly::x()]]);
        assert_eq!(bareiss_det(&single).unwrap(), IntPoly::x());
        assert_eq!(det_by_evaluation(&Matrix::<IntPoly>::zeros(4, 4), 7).unwrap(), IntPoly::zero());
        let mut diag = Matrix::<IntPoly>::zeros(3, 3);
        for i in 0..3 {
            diag[(i, i)] = IntPoly::x();
        }
        assert_eq!(det_by_evaluation(&diag, 3).unwrap(), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn errors() {
        let m = Matrix::<IntPoly>::zeros(2, 3);
        assert!(matches!(bareiss_det(&m), Err(Error::NotSquare { .. })));
        let mut diag = Matrix::<IntPoly>::zeros(3, 3);
        for i in 0..3 {
            diag[(i, i)] = IntPoly::x();
        }
        assert!(matches!(det_by_evaluation(&diag, 2), Err(Error::DegreeBoundExceeded(2))));
    }

    #[test]
    fn pivoting_needed() {
        let m = Matrix::from_rows(vec![
            vec![IntPoly::zero(), p(&[1]), p(&[0, 1])],
            vec![p(&[1]), IntPoly::zero(), p(&[2])],
            vec![p(&[0, 1]), p(&[3]), IntPoly::zero()],
        ]);
        assert_eq!(bareiss_det(&m).unwrap(), cofactor_det(&m.to_rows()));
    }

    #[test]
    fn evaluation_points_alternate() {
        let pts: Vec<i64> = (0..5).map(|i| evaluation_point(i).try_into().unwrap()).collect();
        assert_eq!(pts, vec![0, 1, -1, 2, -2]);
    }

    fn poly_matrix(size: usize) -> impl Strategy<Value = Matrix<IntPoly>> {
        prop::collection::vec(prop::collection::vec(-3i64..=3, 1..=4), size * size).prop_map(move |entries| {
            let rows = entries.chunks(size).map(|r| r.iter().map(|c| IntPoly::from_i64s(c)).collect()).collect();
            Matrix::from_rows(rows)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn routes_agree(m in (1usize..=8).prop_flat_map(poly_matrix)) {
            let bound = 3 * m.rows();
            let direct = bareiss_det(&m).unwrap();
            prop_assert_eq!(&direct, &det_by_evaluation(&m, bound).unwrap());
            if m.rows() <= 5 {
                prop_assert_eq!(&direct, &cofactor_det(&m.to_rows()));
            }
        }
    }
}
