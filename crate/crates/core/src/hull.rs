//! Exact convex-combination membership over the rationals.
//!
//! `in_convex_hull(p, points)` decides whether `p` is a convex combination of
//! `points` by phase-1 simplex with Bland's rule on exact `BigRational`
//! arithmetic. Artificial columns are dropped once they leave the basis, so
//! the tableau only ever carries the lambda columns.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// True when `p` equals `sum lambda_i q_i` for some `lambda >= 0` summing
/// to 1 over `points`.
pub(crate) fn in_convex_hull(p: &[BigInt], points: &[Vec<BigInt>]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = p.len();
    let rows = dim + 1;
    let cols = points.len();

    let ratio = |v: &BigInt| BigRational::from_integer(v.clone());

    // constraint rows: coordinates, then the convexity row (sum lambda = 1)
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(rows);
    for r in 0..dim {
        tableau.push(points.iter().map(|q| ratio(&q[r])).collect());
        rhs.push(ratio(&p[r]));
    }
    tableau.push(vec![BigRational::one(); cols]);
    rhs.push(BigRational::one());

    // normalize so every artificial basic variable starts nonnegative
    for r in 0..rows {
        if rhs[r].is_negative() {
            for e in tableau[r].iter_mut() {
                *e = -core::mem::take(e);
            }
            rhs[r] = -core::mem::take(&mut rhs[r]);
        }
    }

    // basis[r] = Some(j) when lambda_j is basic in row r, None while the
    // artificial variable still occupies the row
    let mut basis: Vec<Option<usize>> = vec![None; rows];
    // reduced costs of the lambda columns for minimizing the artificial sum
    let mut reduced: Vec<BigRational> = (0..cols)
        .map(|j| {
            -(0..rows)
                .map(|r| tableau[r][j].clone())
                .sum::<BigRational>()
        })
        .collect();

    loop {
        // Bland: lowest-index improving column
        let Some(enter) = (0..cols).find(|&j| reduced[j].is_negative()) else {
            break;
        };
        // ratio test; Bland's tie-break on the basic variable index, with
        // artificials ordered after the lambda columns
        let mut leave: Option<(BigRational, usize, usize)> = None;
        for r in 0..rows {
            if !tableau[r][enter].is_positive() {
                continue;
            }
            let candidate = &rhs[r] / &tableau[r][enter];
            let basic_index = basis[r].unwrap_or(cols + r);
            let better = match &leave {
                None => true,
                Some((c, b, _)) => candidate < *c || (candidate == *c && basic_index < *b),
            };
            if better {
                leave = Some((candidate, basic_index, r));
            }
        }
        let Some((_, _, lr)) = leave else {
            // the phase-1 objective is bounded below, so an unbounded column
            // cannot improve it; nothing more to gain
            break;
        };

        // pivot on (lr, enter)
        let pivot = tableau[lr][enter].clone();
        for e in tableau[lr].iter_mut() {
            *e /= &pivot;
        }
        rhs[lr] /= &pivot;
        for r in 0..rows {
            if r == lr || tableau[r][enter].is_zero() {
                continue;
            }
            let factor = tableau[r][enter].clone();
            for j in 0..cols {
                let delta = &factor * &tableau[lr][j];
                tableau[r][j] -= delta;
            }
            let delta = &factor * &rhs[lr];
            rhs[r] -= delta;
        }
        let factor = reduced[enter].clone();
        for j in 0..cols {
            let delta = &factor * &tableau[lr][j];
            reduced[j] -= delta;
        }
        basis[lr] = Some(enter);
    }

    // feasible iff every row still held by an artificial variable is zero
    (0..rows).all(|r| basis[r].is_some() || rhs[r].is_zero())
}
