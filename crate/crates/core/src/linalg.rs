//! Exact integer linear algebra: fraction-free determinants, minors, rank,
//! Hermite and Smith normal forms with unimodular transforms, kernel lattice
//! bases, and particular integer solutions of `Ax = b`.
//!
//! Conventions used throughout:
//! - Hermite normal form is row-style: pivots positive, entries above a pivot
//!   reduced into `[0, pivot)`, zero rows collected at the bottom, and
//!   `u * input = h` with `|det u| = 1`.
//! - Smith normal form satisfies `u * input * v = s` with a nonnegative
//!   diagonal and each diagonal entry dividing the next nonzero one.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::util::{floor_div, k_subsets, vec_is_zero};

/// Row Hermite normal form `h` together with the unimodular `u` such that
/// `u * input = h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfResult {
    pub h: IntMatrix,
    pub u: IntMatrix,
}

/// Smith normal form `s` together with unimodular `u`, `v` such that
/// `u * input * v = s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

/// Exact determinant by fraction-free Bareiss elimination.
///
/// The 0x0 determinant is 1 (empty product), which the complementary-minor
/// checks rely on.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut w = m.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if w.at(k, k).is_zero() {
            match (k + 1..n).find(|&r| !w.at(r, k).is_zero()) {
                Some(r) => {
                    w.swap_rows(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                // Bareiss condensation: the division by the previous pivot is exact.
                let t = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                *w.at_mut(i, j) = t / &prev;
            }
            *w.at_mut(i, k) = BigInt::zero();
        }
        prev = w.at(k, k).clone();
    }
    let det = w.at(n - 1, n - 1).clone();
    Ok(if sign < 0 { -det } else { det })
}

/// Rank over the rationals, read off the Hermite normal form.
pub fn rank(m: &IntMatrix) -> usize {
    let h = hermite_normal_form(m).h;
    (0..h.rows()).filter(|&r| !h.row_is_zero(r)).count()
}

/// Determinants of all `k x k` column-submatrices, one per k-subset of the
/// columns in lexicographic order. All rows are used, so `k` must equal the
/// row count; pass an explicit row set through [`maximal_minors_in_rows`]
/// otherwise.
pub fn maximal_minors(m: &IntMatrix, k: usize) -> Result<Vec<(Vec<usize>, BigInt)>> {
    if k > m.rows() || k > m.cols() {
        return Err(Error::Dimension(format!(
            "{k}x{k} minors of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    if k != m.rows() {
        return Err(Error::Dimension(format!(
            "k = {k} below the row count {}; select rows explicitly",
            m.rows()
        )));
    }
    k_subsets(m.cols(), k)
        .into_iter()
        .map(|cols| {
            let d = determinant(&m.select_columns(&cols))?;
            Ok((cols, d))
        })
        .collect()
}

/// As [`maximal_minors`], but over an explicit set of `k` rows.
pub fn maximal_minors_in_rows(
    m: &IntMatrix,
    rows: &[usize],
    k: usize,
) -> Result<Vec<(Vec<usize>, BigInt)>> {
    if rows.len() != k || k > m.cols() {
        return Err(Error::Dimension(format!(
            "{k}x{k} minors over {} selected rows of a {}x{} matrix",
            rows.len(),
            m.rows(),
            m.cols()
        )));
    }
    if rows.windows(2).any(|w| w[0] >= w[1]) || rows.iter().any(|&r| r >= m.rows()) {
        return Err(Error::Dimension(
            "row set must be strictly increasing and in range".into(),
        ));
    }
    k_subsets(m.cols(), k)
        .into_iter()
        .map(|cols| {
            let d = determinant(&m.submatrix(rows, &cols))?;
            Ok((cols, d))
        })
        .collect()
}

/// Row Hermite normal form with its unimodular transform.
pub fn hermite_normal_form(m: &IntMatrix) -> HnfResult {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivot_row = 0usize;

    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclidean reduction within the column until one nonzero entry is left.
        loop {
            let best = (pivot_row..rows)
                .filter(|&r| !h.at(r, col).is_zero())
                .min_by_key(|&r| h.at(r, col).abs());
            let Some(best) = best else { break };
            h.swap_rows(pivot_row, best);
            u.swap_rows(pivot_row, best);
            let mut cleared = true;
            for r in pivot_row + 1..rows {
                if h.at(r, col).is_zero() {
                    continue;
                }
                // truncating quotient leaves |remainder| < |pivot|
                let q = -(h.at(r, col) / h.at(pivot_row, col));
                if !q.is_zero() {
                    h.add_scaled_row(r, pivot_row, &q);
                    u.add_scaled_row(r, pivot_row, &q);
                }
                if !h.at(r, col).is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                break;
            }
        }
        if h.at(pivot_row, col).is_zero() {
            continue; // no pivot in this column
        }
        if h.at(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        // reduce the entries above the pivot into [0, pivot)
        let pivot = h.at(pivot_row, col).clone();
        for r in 0..pivot_row {
            let q = -floor_div(h.at(r, col), &pivot);
            if !q.is_zero() {
                h.add_scaled_row(r, pivot_row, &q);
                u.add_scaled_row(r, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    HnfResult { h, u }
}

/// Shape predicate for a row Hermite normal form: positive pivots in strictly
/// increasing columns, entries above each pivot in `[0, pivot)`, zero rows at
/// the bottom.
pub fn is_row_hnf(h: &IntMatrix) -> bool {
    let mut last_pivot_col: Option<usize> = None;
    let mut seen_zero_row = false;
    for r in 0..h.rows() {
        let pivot_col = (0..h.cols()).find(|&c| !h.at(r, c).is_zero());
        match pivot_col {
            None => seen_zero_row = true,
            Some(c) => {
                if seen_zero_row {
                    return false;
                }
                if let Some(prev) = last_pivot_col {
                    if c <= prev {
                        return false;
                    }
                }
                last_pivot_col = Some(c);
                let pivot = h.at(r, c);
                if !pivot.is_positive() {
                    return false;
                }
                for above in 0..r {
                    let e = h.at(above, c);
                    if e.is_negative() || e >= pivot {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Smith normal form with both unimodular transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // pivot: a nonzero entry of smallest magnitude in the trailing block
        let mut pivot_pos: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if s.at(r, c).is_zero() {
                    continue;
                }
                if pivot_pos
                    .map(|(pr, pc)| s.at(r, c).abs() < s.at(pr, pc).abs())
                    .unwrap_or(true)
                {
                    pivot_pos = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot_pos else { break };
        s.swap_rows(t, pr);
        u.swap_rows(t, pr);
        s.swap_cols(t, pc);
        v.swap_cols(t, pc);

        'reduce: loop {
            // clear the column below the pivot
            for r in t + 1..rows {
                if s.at(r, t).is_zero() {
                    continue;
                }
                let q = -(s.at(r, t) / s.at(t, t));
                if !q.is_zero() {
                    s.add_scaled_row(r, t, &q);
                    u.add_scaled_row(r, t, &q);
                }
                if !s.at(r, t).is_zero() {
                    // leftover remainder is smaller than the pivot; promote it
                    s.swap_rows(t, r);
                    u.swap_rows(t, r);
                    continue 'reduce;
                }
            }
            // clear the row right of the pivot
            for c in t + 1..cols {
                if s.at(t, c).is_zero() {
                    continue;
                }
                let q = -(s.at(t, c) / s.at(t, t));
                if !q.is_zero() {
                    s.add_scaled_col(c, t, &q);
                    v.add_scaled_col(c, t, &q);
                }
                if !s.at(t, c).is_zero() {
                    s.swap_cols(t, c);
                    v.swap_cols(t, c);
                    continue 'reduce;
                }
            }
            // enforce divisibility of the whole trailing block by the pivot
            for r in t + 1..rows {
                for c in t + 1..cols {
                    if !(s.at(r, c) % s.at(t, t)).is_zero() {
                        s.add_scaled_col(t, c, &BigInt::one());
                        v.add_scaled_col(t, c, &BigInt::one());
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        if s.at(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, s, v }
}

/// A lattice basis for the integer kernel `{x : a * x = 0}`, one basis vector
/// per row. Extracted from the unimodular transform of the Hermite normal
/// form of the transpose: the transform rows facing zero rows of the HNF are
/// exactly the kernel basis.
pub fn kernel_lattice_basis(a: &IntMatrix) -> IntMatrix {
    let t = a.transpose(); // n x m
    let HnfResult { h, u } = hermite_normal_form(&t);
    let n = a.cols();
    let rank = (0..h.rows()).filter(|&r| !h.row_is_zero(r)).count();
    let rows: Vec<usize> = (rank..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    u.submatrix(&rows, &cols)
}

/// Some integer solution of `a * x = b`, or `None` when no integer solution
/// exists. No sign constraint is imposed on `x`.
///
/// Works through the HNF of the transpose: with `u * a^T = h`, a solution of
/// `z^T h = b^T` is found by forward substitution along the echelon rows, and
/// `x = u^T z`.
pub fn solve_linear_integer(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for a {}x{} matrix",
            b.len(),
            a.rows(),
            a.cols()
        )));
    }
    let n = a.cols();
    let t = a.transpose(); // n x m
    let HnfResult { h, u } = hermite_normal_form(&t);
    let mut residual = b.to_vec();
    let mut z = vec![BigInt::zero(); n];
    for i in 0..h.rows() {
        let Some(pivot_col) = (0..h.cols()).find(|&c| !h.at(i, c).is_zero()) else {
            break; // zero rows only from here on
        };
        let num = &residual[pivot_col];
        let den = h.at(i, pivot_col);
        if !(num % den).is_zero() {
            return Ok(None);
        }
        let coeff = num / den;
        for c in 0..h.cols() {
            let delta = &coeff * h.at(i, c);
            residual[c] -= delta;
        }
        z[i] = coeff;
    }
    if !vec_is_zero(&residual) {
        return Ok(None);
    }
    let x = u.transpose().mul_vec(&z)?;
    debug_assert_eq!(a.mul_vec(&x)?, b.to_vec());
    Ok(Some(x))
}

/// Exact inverse of a unimodular matrix via the adjugate; errors when
/// `|det| != 1`.
pub fn inverse_unimodular(m: &IntMatrix) -> Result<IntMatrix> {
    let det = determinant(m)?;
    if det.abs() != BigInt::one() {
        return Err(Error::NotUnimodular { det });
    }
    let n = m.rows();
    let mut inv = IntMatrix::zero(n, n);
    let all: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..n {
            // adjugate entry (i, j) = cofactor (j, i); dividing by det = +-1
            // is a multiplication.
            let rows: Vec<usize> = all.iter().copied().filter(|&r| r != j).collect();
            let cols: Vec<usize> = all.iter().copied().filter(|&c| c != i).collect();
            let minor = determinant(&m.submatrix(&rows, &cols))?;
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            *inv.at_mut(i, j) = minor * sign * &det;
        }
    }
    debug_assert_eq!(m.mul(&inv)?, IntMatrix::identity(n));
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::int_vec;

    /// Independent oracle: naive cofactor expansion along the first row.
    fn cofactor_det(m: &IntMatrix) -> BigInt {
        assert!(m.is_square());
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let rows: Vec<usize> = (1..n).collect();
        let mut acc = BigInt::zero();
        for c in 0..n {
            let cols: Vec<usize> = (0..n).filter(|&k| k != c).collect();
            let term = m.at(0, c) * cofactor_det(&m.submatrix(&rows, &cols));
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn determinant_identity_and_2x2() {
        assert_eq!(determinant(&IntMatrix::identity(3)).unwrap(), BigInt::one());
        let m = IntMatrix::from_i64(2, 2, &[1, 2, 3, 4]).unwrap();
        assert_eq!(determinant(&m).unwrap(), BigInt::from(-2));
        assert_eq!(determinant(&IntMatrix::zero(0, 0)).unwrap(), BigInt::one());
    }

    #[test]
    fn determinant_rejects_non_square() {
        let m = IntMatrix::from_i64(1, 2, &[1, 2]).unwrap();
        assert!(matches!(determinant(&m), Err(Error::Dimension(_))));
    }

    #[test]
    fn determinant_matches_cofactor_oracle() {
        // a fixed 4x4 with entries in [-9, 9], plus a singular one
        let m = IntMatrix::from_i64(4, 4, &[3, -7, 2, 0, 5, 1, -9, 4, -2, 8, 6, -3, 0, -1, 7, 2])
            .unwrap();
        assert_eq!(determinant(&m).unwrap(), cofactor_det(&m));
        let s = IntMatrix::from_i64(3, 3, &[1, 2, 3, 2, 4, 6, 0, 1, 1]).unwrap();
        assert_eq!(determinant(&s).unwrap(), cofactor_det(&s));
        assert_eq!(determinant(&s).unwrap(), BigInt::zero());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&IntMatrix::identity(2)), 2);
        assert_eq!(rank(&IntMatrix::from_i64(2, 2, &[1, 2, 2, 4]).unwrap()), 1);
        assert_eq!(rank(&IntMatrix::zero(0, 3)), 0);
    }

    #[test]
    fn minors_of_single_row_are_entries() {
        let m = IntMatrix::from_i64(1, 3, &[1, 1, 2]).unwrap();
        let minors = maximal_minors(&m, 1).unwrap();
        assert_eq!(
            minors,
            alloc::vec![
                (alloc::vec![0], BigInt::from(1)),
                (alloc::vec![1], BigInt::from(1)),
                (alloc::vec![2], BigInt::from(2)),
            ]
        );
    }

    #[test]
    fn minors_of_identity() {
        let minors = maximal_minors(&IntMatrix::identity(2), 2).unwrap();
        assert_eq!(minors, alloc::vec![(alloc::vec![0, 1], BigInt::one())]);
    }

    #[test]
    fn minors_match_per_subset_determinants() {
        let m = IntMatrix::from_i64(2, 3, &[1, 2, 3, 0, 1, 1]).unwrap();
        for (cols, value) in maximal_minors(&m, 2).unwrap() {
            assert_eq!(value, determinant(&m.select_columns(&cols)).unwrap());
            assert_eq!(value, cofactor_det(&m.select_columns(&cols)));
        }
    }

    #[test]
    fn minors_reject_bad_k() {
        let m = IntMatrix::from_i64(2, 3, &[1, 2, 3, 0, 1, 1]).unwrap();
        assert!(maximal_minors(&m, 3).is_err());
        assert!(maximal_minors(&m, 1).is_err());
        assert_eq!(
            maximal_minors_in_rows(&m, &[1], 1).unwrap(),
            alloc::vec![
                (alloc::vec![0], BigInt::zero()),
                (alloc::vec![1], BigInt::one()),
                (alloc::vec![2], BigInt::one()),
            ]
        );
    }

    fn assert_hnf_contract(m: &IntMatrix) {
        let HnfResult { h, u } = hermite_normal_form(m);
        assert!(is_row_hnf(&h), "not in HNF: {h}");
        assert_eq!(u.mul(m).unwrap(), h);
        assert_eq!(determinant(&u).unwrap().abs(), BigInt::one());
    }

    #[test]
    fn hnf_identity_and_swap() {
        let HnfResult { h, u } = hermite_normal_form(&IntMatrix::identity(3));
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(u, IntMatrix::identity(3));

        let m = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]).unwrap();
        let HnfResult { h, u } = hermite_normal_form(&m);
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, m); // the swap itself
    }

    #[test]
    fn hnf_collects_gcd_in_pivot() {
        let m = IntMatrix::from_i64(2, 1, &[4, 6]).unwrap();
        let HnfResult { h, u } = hermite_normal_form(&m);
        assert_eq!(h, IntMatrix::from_i64(2, 1, &[2, 0]).unwrap());
        assert_eq!(determinant(&u).unwrap().abs(), BigInt::one());
        assert_eq!(u.mul(&m).unwrap(), h);
    }

    #[test]
    fn hnf_contract_on_mixed_shapes() {
        for m in [
            IntMatrix::from_i64(3, 3, &[2, 4, 4, -6, 6, 12, 10, -4, -16]).unwrap(),
            IntMatrix::from_i64(2, 4, &[3, 1, -4, 2, 0, 5, 2, -1]).unwrap(),
            IntMatrix::from_i64(4, 2, &[2, 6, -2, 4, 8, 0, 3, 3]).unwrap(),
            IntMatrix::zero(2, 3),
            IntMatrix::zero(0, 2),
        ] {
            assert_hnf_contract(&m);
        }
    }

    fn assert_snf_contract(m: &IntMatrix) {
        let SnfResult { u, s, v } = smith_normal_form(m);
        assert_eq!(u.mul(m).unwrap().mul(&v).unwrap(), s);
        assert_eq!(determinant(&u).unwrap().abs(), BigInt::one());
        assert_eq!(determinant(&v).unwrap().abs(), BigInt::one());
        // diagonal, nonnegative, divisibility chain
        for r in 0..s.rows() {
            for c in 0..s.cols() {
                if r != c {
                    assert!(s.at(r, c).is_zero(), "off-diagonal junk in {s}");
                }
            }
        }
        let diag: Vec<BigInt> = (0..s.rows().min(s.cols()))
            .map(|i| s.at(i, i).clone())
            .collect();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if !w[1].is_zero() {
                assert!(
                    !w[0].is_zero() && (&w[1] % &w[0]).is_zero(),
                    "divisibility chain broken in {s}"
                );
            }
        }
    }

    #[test]
    fn snf_examples() {
        let SnfResult { s, .. } = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(s, IntMatrix::identity(3));

        let m = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]).unwrap();
        assert_snf_contract(&m);
        let SnfResult { s, .. } = smith_normal_form(&m);
        assert_eq!(s, IntMatrix::from_i64(2, 2, &[1, 0, 0, 6]).unwrap());

        let m = IntMatrix::from_i64(1, 2, &[2, 4]).unwrap();
        let SnfResult { s, .. } = smith_normal_form(&m);
        assert_eq!(s, IntMatrix::from_i64(1, 2, &[2, 0]).unwrap());
    }

    #[test]
    fn snf_contract_on_mixed_shapes() {
        for m in [
            IntMatrix::from_i64(3, 3, &[2, 4, 4, -6, 6, 12, 10, -4, -16]).unwrap(),
            IntMatrix::from_i64(2, 3, &[6, 10, 15, 4, -2, 0]).unwrap(),
            IntMatrix::from_i64(3, 2, &[0, 0, 4, 6, 9, 3]).unwrap(),
            IntMatrix::zero(2, 2),
        ] {
            assert_snf_contract(&m);
        }
    }

    #[test]
    fn kernel_basis_small_cases() {
        let a = IntMatrix::from_i64(1, 2, &[1, 1]).unwrap();
        let h = kernel_lattice_basis(&a);
        assert_eq!(h.rows(), 1);
        assert!(a.mul(&h.transpose()).unwrap().is_zero());
        assert_eq!(h.at(0, 0).abs(), BigInt::one());
        assert_eq!(h.at(0, 1).abs(), BigInt::one());

        let a = IntMatrix::from_i64(1, 2, &[1, 2]).unwrap();
        let h = kernel_lattice_basis(&a);
        assert!(a.mul(&h.transpose()).unwrap().is_zero());
        assert_eq!(h.at(0, 0).abs(), BigInt::from(2));
        assert_eq!(h.at(0, 1).abs(), BigInt::one());

        let h = kernel_lattice_basis(&IntMatrix::identity(2));
        assert_eq!(h.rows(), 0);
        assert_eq!(h.cols(), 2);

        // no equations at all: the kernel is the full lattice
        let h = kernel_lattice_basis(&IntMatrix::zero(0, 3));
        assert_eq!(h, IntMatrix::identity(3));
    }

    #[test]
    fn hnf_predicate_rejects_malformed_inputs() {
        // negative pivot
        assert!(!is_row_hnf(&IntMatrix::from_i64(1, 1, &[-2]).unwrap()));
        // entry above the pivot not reduced into [0, pivot)
        assert!(!is_row_hnf(
            &IntMatrix::from_i64(2, 2, &[1, 5, 0, 3]).unwrap()
        ));
        // zero row above a nonzero row
        assert!(!is_row_hnf(
            &IntMatrix::from_i64(2, 2, &[0, 0, 0, 1]).unwrap()
        ));
        // pivot columns not strictly increasing
        assert!(!is_row_hnf(
            &IntMatrix::from_i64(2, 2, &[1, 0, 1, 0]).unwrap()
        ));
        assert!(is_row_hnf(&IntMatrix::from_i64(2, 2, &[1, 2, 0, 3]).unwrap()));
    }

    #[test]
    fn kernel_basis_spans_brute_forced_kernel() {
        // every kernel vector in a small signed box must be an integer
        // combination of the basis rows
        let a = IntMatrix::from_i64(2, 4, &[1, 2, -1, 0, 0, 1, 1, -2]).unwrap();
        let h = kernel_lattice_basis(&a);
        assert!(a.mul(&h.transpose()).unwrap().is_zero());
        let ht = h.transpose();
        let bound = 3i64;
        let mut z = [-bound, -bound, -bound, -bound];
        loop {
            let zv = int_vec(&z);
            if a.mul_vec(&zv).unwrap().iter().all(Zero::is_zero) {
                let y = solve_linear_integer(&ht, &zv).unwrap();
                assert!(y.is_some(), "kernel vector {z:?} outside the lattice");
            }
            let mut i = 3;
            loop {
                z[i] += 1;
                if z[i] <= bound {
                    break;
                }
                z[i] = -bound;
                if i == 0 {
                    return;
                }
                i -= 1;
            }
        }
    }

    #[test]
    fn solve_examples() {
        let a = IntMatrix::from_i64(1, 1, &[2]).unwrap();
        assert_eq!(solve_linear_integer(&a, &int_vec(&[1])).unwrap(), None);

        let a = IntMatrix::identity(2);
        assert_eq!(
            solve_linear_integer(&a, &int_vec(&[3, 1])).unwrap(),
            Some(int_vec(&[3, 1]))
        );

        let a = IntMatrix::from_i64(1, 2, &[1, 1]).unwrap();
        let x = solve_linear_integer(&a, &int_vec(&[2])).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), int_vec(&[2]));

        assert!(matches!(
            solve_linear_integer(&a, &int_vec(&[1, 2])),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn solve_detects_rational_only_systems() {
        // x + 2y = 2, x + 2y = 3 has no solution at all
        let a = IntMatrix::from_i64(2, 2, &[1, 2, 1, 2]).unwrap();
        assert_eq!(solve_linear_integer(&a, &int_vec(&[2, 3])).unwrap(), None);
    }

    #[test]
    fn unimodular_inverse() {
        let m = IntMatrix::from_i64(2, 2, &[1, 1, 0, 1]).unwrap();
        let inv = inverse_unimodular(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), IntMatrix::identity(2));
        assert_eq!(
            inverse_unimodular(&IntMatrix::zero(0, 0)).unwrap(),
            IntMatrix::zero(0, 0)
        );
        let bad = IntMatrix::from_i64(2, 2, &[2, 0, 0, 1]).unwrap();
        assert!(matches!(
            inverse_unimodular(&bad),
            Err(Error::NotUnimodular { .. })
        ));
    }
}
