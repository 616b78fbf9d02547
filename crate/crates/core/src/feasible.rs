//! Complete feasibility search for `Ax = b, 0 <= x <= d` over the integers.
//!
//! Searching the box coordinate by coordinate dies on wide boxes: single
//! equations barely constrain early variables, so the tree branches on
//! `~d` values per level. Instead the box is pulled back through the kernel
//! parametrization `x = H^T y + x1`, which turns the equations into plain
//! inequalities over the `n - m` kernel coordinates. Fourier-Motzkin
//! elimination then yields, per level, the exact rational bounds of the
//! projected polytope, so the depth-first search never enters a prefix
//! without rational completions; only integrality gaps can force
//! backtracking.
//!
//! Everything is exact: projections stay in integers (combination by the
//! positive/negative pivot pair), and each derived inequality is
//! gcd-normalized with a floored right-hand side, which preserves integer
//! points while tightening the rational relaxation.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::linalg::{kernel_lattice_basis, solve_linear_integer};
use crate::matrix::IntMatrix;
use crate::util::{ceil_div, floor_div};

/// `coeffs . y <= rhs`
#[derive(Clone, Debug, PartialEq, Eq)]
struct Inequality {
    coeffs: Vec<BigInt>,
    rhs: BigInt,
}

impl Inequality {
    /// Divides by the gcd of the coefficients, flooring the right-hand side;
    /// exact on integer points.
    fn normalize(mut self) -> Self {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if g > BigInt::from(1) {
            for c in self.coeffs.iter_mut() {
                *c = &*c / &g;
            }
            self.rhs = floor_div(&self.rhs, &g);
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// The per-level inequality systems: `levels[k]` constrains `y_0 .. y_k`
/// and is the exact projection of `levels[k + 1]`.
struct Projection {
    levels: Vec<Vec<Inequality>>,
}

impl Projection {
    fn build(full: Vec<Inequality>, vars: usize) -> Option<Projection> {
        let mut levels = vec![Vec::new(); vars];
        let mut current: Vec<Inequality> = full.into_iter().map(Inequality::normalize).collect();
        for k in (0..vars).rev() {
            // constant inequalities decide emptiness outright
            for ineq in &current {
                if ineq.is_trivial() && ineq.rhs.is_negative() {
                    return None;
                }
            }
            current.retain(|ineq| !ineq.is_trivial());
            current.sort_by(|a, b| a.coeffs.cmp(&b.coeffs).then(a.rhs.cmp(&b.rhs)));
            current.dedup();
            levels[k] = current.clone();
            if k == 0 {
                break;
            }
            current = eliminate_last(&current, k);
        }
        Some(Projection { levels })
    }
}

/// Fourier-Motzkin step: removes variable `var` (the last active one),
/// returning inequalities over `y_0 .. y_{var-1}`.
fn eliminate_last(system: &[Inequality], var: usize) -> Vec<Inequality> {
    let mut zero = Vec::new();
    let mut upper = Vec::new(); // coeff > 0: bounds var from above
    let mut lower = Vec::new(); // coeff < 0: bounds var from below
    for ineq in system {
        let c = &ineq.coeffs[var];
        if c.is_zero() {
            zero.push(Inequality {
                coeffs: ineq.coeffs[..var].to_vec(),
                rhs: ineq.rhs.clone(),
            });
        } else if c.is_positive() {
            upper.push(ineq);
        } else {
            lower.push(ineq);
        }
    }
    let mut out = zero;
    for up in &upper {
        let a = &up.coeffs[var];
        for low in &lower {
            let b = -&low.coeffs[var];
            // b * up + a * low cancels the pivot coefficient
            let coeffs: Vec<BigInt> = (0..var)
                .map(|j| &b * &up.coeffs[j] + a * &low.coeffs[j])
                .collect();
            let rhs = &b * &up.rhs + a * &low.rhs;
            out.push(Inequality { coeffs, rhs }.normalize());
        }
    }
    out
}

/// Exact integer bounds for `y_k` once `prefix` (= `y_0 .. y_{k-1}`) is
/// fixed; `None` when no integer fits.
fn level_bounds(system: &[Inequality], prefix: &[BigInt], k: usize) -> Option<(BigInt, BigInt)> {
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for ineq in system {
        let c = &ineq.coeffs[k];
        if c.is_zero() {
            continue; // carried in the lower level, already satisfied
        }
        let mut t = ineq.rhs.clone();
        for (coeff, value) in ineq.coeffs[..k].iter().zip(prefix) {
            t -= coeff * value;
        }
        if c.is_positive() {
            let bound = floor_div(&t, c);
            if hi.as_ref().map(|h| bound < *h).unwrap_or(true) {
                hi = Some(bound);
            }
        } else {
            let bound = ceil_div(&t, c);
            if lo.as_ref().map(|l| bound > *l).unwrap_or(true) {
                lo = Some(bound);
            }
        }
    }
    // a kernel coordinate is always bounded both ways inside a box
    let (lo, hi) = (lo?, hi?);
    if lo > hi {
        None
    } else {
        Some((lo, hi))
    }
}

fn dfs(projection: &Projection, prefix: &mut Vec<BigInt>, vars: usize, forbid_zero: bool) -> bool {
    let k = prefix.len();
    if k == vars {
        return !(forbid_zero && prefix.iter().all(Zero::is_zero));
    }
    let Some((lo, hi)) = level_bounds(&projection.levels[k], prefix, k) else {
        return false;
    };
    let mut value = lo;
    while value <= hi {
        prefix.push(value.clone());
        if dfs(projection, prefix, vars, forbid_zero) {
            return true;
        }
        prefix.pop();
        value += 1;
    }
    false
}

/// Decides whether `a x = b` has an integer solution with `0 <= x_i <= d`;
/// `forbid_zero` additionally excludes the all-zero solution (used for
/// recession-ray queries on homogeneous systems).
pub(crate) fn exists_solution_in_box(
    a: &IntMatrix,
    b: &[BigInt],
    d: &BigInt,
    forbid_zero: bool,
) -> bool {
    let Some(particular) = solve_linear_integer(a, b).expect("shapes checked by caller") else {
        return false;
    };
    let h = kernel_lattice_basis(a);
    let q = h.rows();
    if q == 0 {
        let in_box = particular.iter().all(|v| !v.is_negative() && v <= d);
        return in_box && !(forbid_zero && particular.iter().all(Zero::is_zero));
    }
    // box constraints in kernel coordinates: 0 <= (H^T y + x1)_i <= d
    let mut ineqs = Vec::with_capacity(2 * a.cols());
    for i in 0..a.cols() {
        let row: Vec<BigInt> = (0..q).map(|j| h.at(j, i).clone()).collect();
        let negated: Vec<BigInt> = row.iter().map(|v| -v).collect();
        ineqs.push(Inequality {
            coeffs: row,
            rhs: d - &particular[i],
        });
        ineqs.push(Inequality {
            coeffs: negated,
            rhs: particular[i].clone(),
        });
    }
    let Some(projection) = Projection::build(ineqs, q) else {
        return false;
    };
    // with a full-rank kernel basis, x = 0 corresponds exactly to the y
    // solving H^T y = -x1, and for homogeneous systems that is y = 0
    let forbid_zero_y = forbid_zero && particular.iter().all(Zero::is_zero);
    let mut prefix = Vec::with_capacity(q);
    dfs(&projection, &mut prefix, q, forbid_zero_y)
}

/// The lexicographically smallest integer solution with `0 <= x_i <= d`,
/// found by fixing coordinates left to right: each coordinate takes the
/// smallest value whose remaining subsystem stays solvable inside the box.
pub(crate) fn lex_min_solution_in_box(
    a: &IntMatrix,
    b: &[BigInt],
    d: &BigInt,
) -> Option<Vec<BigInt>> {
    if !exists_solution_in_box(a, b, d, false) {
        return None;
    }
    let n = a.cols();
    let all: Vec<usize> = (0..n).collect();
    let mut residual = b.to_vec();
    let mut solution = Vec::with_capacity(n);
    for k in 0..n {
        let tail = a.select_columns(&all[k + 1..]);
        let column = a.column(k);
        let mut value = BigInt::zero();
        loop {
            if value > *d {
                // a feasible prefix always extends within the box
                debug_assert!(false, "lex-min scan ran past the box bound");
                return None;
            }
            if exists_solution_in_box(&tail, &residual, d, false) {
                break;
            }
            for (r, c) in residual.iter_mut().zip(&column) {
                *r -= c;
            }
            value += 1;
        }
        solution.push(value);
    }
    debug_assert_eq!(a.mul_vec(&solution).unwrap(), b.to_vec());
    Some(solution)
}
