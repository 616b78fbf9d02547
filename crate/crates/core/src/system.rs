//! Linear Diophantine systems `Ax = b` with the full-row-rank contract, the
//! minor bound `d` of the augmented matrix, gcd saturation, the kernel
//! parametrization of the integer solution coset, and the complete bounded
//! search that realizes the per-coordinate bound.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::feasible::{exists_solution_in_box, lex_min_solution_in_box};
use crate::linalg::{
    inverse_unimodular, kernel_lattice_basis, maximal_minors, rank, smith_normal_form,
    solve_linear_integer, SnfResult,
};
use crate::matrix::IntMatrix;
use crate::util::vec_is_zero;

/// Default cap on the minor bound `d`; searches above it are refused with
/// [`Error::BoundTooLarge`] instead of truncated.
pub const DEFAULT_D_CAP: u64 = 10_000;

/// A system `Ax = b` whose matrix has full row rank (checked at
/// construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineSystem {
    a: IntMatrix,
    b: Vec<BigInt>,
}

impl DiophantineSystem {
    pub fn new(a: IntMatrix, b: Vec<BigInt>) -> Result<Self> {
        let m = a.rows();
        let n = a.cols();
        if b.len() != m {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {m} equations",
                b.len()
            )));
        }
        if m == 0 {
            return Err(Error::InvalidSystem(
                "at least one equation is required".into(),
            ));
        }
        if n < m {
            return Err(Error::InvalidSystem(format!(
                "{n} unknowns cannot support {m} independent equations"
            )));
        }
        let r = rank(&a);
        if r != m {
            return Err(Error::RankDeficient {
                rank: r,
                expected: m,
            });
        }
        Ok(DiophantineSystem { a, b })
    }

    pub fn from_i64(rows: usize, cols: usize, a: &[i64], b: &[i64]) -> Result<Self> {
        Self::new(
            IntMatrix::from_i64(rows, cols, a)?,
            b.iter().map(|&v| BigInt::from(v)).collect(),
        )
    }

    pub fn a(&self) -> &IntMatrix {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    /// Number of equations (the row count of `A`).
    pub fn num_equations(&self) -> usize {
        self.a.rows()
    }

    /// Number of unknowns (the column count of `A`).
    pub fn num_vars(&self) -> usize {
        self.a.cols()
    }

    /// The augmented matrix `(A b)`.
    pub fn augmented(&self) -> IntMatrix {
        self.a
            .augment_column(&self.b)
            .expect("b length checked at construction")
    }
}

/// The kernel parametrization `x = H^T y + x1` of the integer solution coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelRepresentation {
    x1: Vec<BigInt>,
    h: IntMatrix,
}

impl KernelRepresentation {
    /// The particular integer solution (not sign-constrained).
    pub fn particular(&self) -> &[BigInt] {
        &self.x1
    }

    /// The kernel lattice basis, one generator per row.
    pub fn basis(&self) -> &IntMatrix {
        &self.h
    }

    /// Maps coset coordinates to an ambient solution: `H^T y + x1`.
    pub fn to_ambient(&self, y: &[BigInt]) -> Result<Vec<BigInt>> {
        if y.len() != self.h.rows() {
            return Err(Error::Dimension(format!(
                "coset coordinates of length {} against a basis of {} rows",
                y.len(),
                self.h.rows()
            )));
        }
        let mut x = self.h.transpose().mul_vec(y)?;
        for (xi, pi) in x.iter_mut().zip(&self.x1) {
            *xi += pi;
        }
        Ok(x)
    }

    /// Inverse of [`Self::to_ambient`]: recovers the unique `y` with
    /// `H^T y + x1 = x`, failing with [`Error::NotInCoset`] when `x` does not
    /// solve the system.
    pub fn from_ambient(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.h.cols() {
            return Err(Error::Dimension(format!(
                "ambient vector of length {} against {} unknowns",
                x.len(),
                self.h.cols()
            )));
        }
        let delta: Vec<BigInt> = x.iter().zip(&self.x1).map(|(a, b)| a - b).collect();
        match solve_linear_integer(&self.h.transpose(), &delta)? {
            Some(y) => {
                debug_assert_eq!(self.to_ambient(&y)?, x.to_vec());
                Ok(y)
            }
            None => Err(Error::NotInCoset),
        }
    }
}

/// A nonnegative solution together with the minor bound it is certified
/// against: every coordinate of `x0` is at most `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionCertificate {
    pub x0: Vec<BigInt>,
    pub d: BigInt,
}

/// Outcome of dividing the gcd content out of a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationResult {
    pub a_prime: IntMatrix,
    pub b_prime: Vec<BigInt>,
    /// The gcd of the maximal minors of the original matrix.
    pub g: BigInt,
}

/// The bound `d`: the maximum absolute value of the `m x m` minors of the
/// augmented matrix `(A b)`. Full row rank forces `d >= 1`.
pub fn minor_bound(sys: &DiophantineSystem) -> BigInt {
    let aug = sys.augmented();
    let minors = maximal_minors(&aug, sys.num_equations())
        .expect("augmented matrix always admits m x m minors");
    let d = minors
        .into_iter()
        .map(|(_, v)| v.abs())
        .max()
        .expect("at least one subset exists");
    debug_assert!(d.is_positive());
    d
}

/// gcd of the absolute values of all maximal minors; zero only for
/// rank-deficient input.
pub fn gcd_maximal_minors(a: &IntMatrix) -> Result<BigInt> {
    if a.rows() > a.cols() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix has no full set of row-sized minors",
            a.rows(),
            a.cols()
        )));
    }
    let mut g = BigInt::zero();
    for (_, value) in maximal_minors(a, a.rows())? {
        g = g.gcd(&value);
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

/// Divides the minor gcd out of a full-row-rank matrix: returns `(a', g)`
/// where the integer solution sets of `a x = c` and the rescaled system
/// correspond and `gcd_maximal_minors(a') = 1`.
///
/// `a'` is the top `m` rows of `v^{-1}` from the Smith decomposition
/// `u a v = s`; those rows extend to a unimodular matrix, which is what makes
/// the minor gcd collapse to 1.
pub fn saturate_matrix(a: &IntMatrix) -> Result<(IntMatrix, BigInt)> {
    let (a_prime, _, g) = saturation_transform(a)?;
    Ok((a_prime, g))
}

fn saturation_transform(a: &IntMatrix) -> Result<(IntMatrix, SnfResult, BigInt)> {
    let m = a.rows();
    let snf = smith_normal_form(a);
    for i in 0..m {
        if snf.s.at(i, i).is_zero() {
            return Err(Error::RankDeficient {
                rank: i,
                expected: m,
            });
        }
    }
    let g = gcd_maximal_minors(a)?;
    let v_inv = inverse_unimodular(&snf.v)?;
    let rows: Vec<usize> = (0..m).collect();
    let cols: Vec<usize> = (0..a.cols()).collect();
    let a_prime = v_inv.submatrix(&rows, &cols);
    debug_assert_eq!(gcd_maximal_minors(&a_prime)?, BigInt::one());
    Ok((a_prime, snf, g))
}

/// Saturates a whole system: the returned `(a', b')` has the same integer
/// solution set as `(A, b)` and `gcd_maximal_minors(a') = 1`.
///
/// Requires the system to have an integer solution; otherwise the divided
/// right-hand side would be fractional.
pub fn saturate(sys: &DiophantineSystem) -> Result<SaturationResult> {
    if solve_linear_integer(sys.a(), sys.b())?.is_none() {
        return Err(Error::Infeasible);
    }
    let (a_prime, snf, g) = saturation_transform(sys.a())?;
    let ub = snf.u.mul_vec(sys.b())?;
    let m = sys.num_equations();
    let mut b_prime = Vec::with_capacity(m);
    for i in 0..m {
        let s_i = snf.s.at(i, i);
        debug_assert!(
            (&ub[i] % s_i).is_zero(),
            "feasible system must divide evenly"
        );
        b_prime.push(&ub[i] / s_i);
    }
    Ok(SaturationResult {
        a_prime,
        b_prime,
        g,
    })
}

/// The coset parametrization `(x1, H)` of all integer solutions.
pub fn kernel_representation(sys: &DiophantineSystem) -> Result<KernelRepresentation> {
    let x1 = solve_linear_integer(sys.a(), sys.b())?.ok_or(Error::Infeasible)?;
    let h = kernel_lattice_basis(sys.a());
    Ok(KernelRepresentation { x1, h })
}

/// Searches the box `[0, d]^n` for a nonnegative solution, `d` being the
/// minor bound. The box is exhaustive for feasibility, so `None` means the
/// system has no nonnegative integer solution at all. Returns the
/// lexicographically smallest solution. Uses [`DEFAULT_D_CAP`].
pub fn find_bounded_solution(sys: &DiophantineSystem) -> Result<Option<SolutionCertificate>> {
    find_bounded_solution_with_cap(sys, DEFAULT_D_CAP)
}

/// As [`find_bounded_solution`] with an explicit cap on `d`; a bound above
/// the cap is reported as [`Error::BoundTooLarge`], never silently truncated.
pub fn find_bounded_solution_with_cap(
    sys: &DiophantineSystem,
    cap: u64,
) -> Result<Option<SolutionCertificate>> {
    let d = minor_bound(sys);
    if vec_is_zero(sys.b()) {
        // 0 is always a solution of the homogeneous system
        return Ok(Some(SolutionCertificate {
            x0: vec![BigInt::zero(); sys.num_vars()],
            d,
        }));
    }
    if d > BigInt::from(cap) {
        return Err(Error::BoundTooLarge { bound: d, cap });
    }
    Ok(lex_min_solution_in_box(sys.a(), sys.b(), &d).map(|x0| SolutionCertificate { x0, d }))
}

/// Whether the system has any nonnegative integer solution.
pub fn is_feasible(sys: &DiophantineSystem) -> Result<bool> {
    is_feasible_with_cap(sys, DEFAULT_D_CAP)
}

pub fn is_feasible_with_cap(sys: &DiophantineSystem, cap: u64) -> Result<bool> {
    Ok(find_bounded_solution_with_cap(sys, cap)?.is_some())
}

/// Whether the nonnegative solution set is bounded, i.e. the recession cone
/// `{x >= 0 : Ax = 0}` is trivial.
///
/// Decided by searching for a nonzero nonnegative kernel point with
/// coordinates at most the largest `m x m` minor of `A`: extreme-ray
/// generators have minor-sized coordinates by Cramer's rule, so an empty box
/// means an empty cone.
pub fn is_bounded(sys: &DiophantineSystem) -> Result<bool> {
    is_bounded_with_cap(sys, DEFAULT_D_CAP)
}

pub fn is_bounded_with_cap(sys: &DiophantineSystem, cap: u64) -> Result<bool> {
    let minors = maximal_minors(sys.a(), sys.num_equations())?;
    let d0 = minors
        .into_iter()
        .map(|(_, v)| v.abs())
        .max()
        .expect("at least one subset exists");
    debug_assert!(d0.is_positive());
    if d0 > BigInt::from(cap) {
        return Err(Error::BoundTooLarge { bound: d0, cap });
    }
    let zero = vec![BigInt::zero(); sys.num_equations()];
    Ok(!exists_solution_in_box(sys.a(), &zero, &d0, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::int_vec;

    fn sys(rows: usize, cols: usize, a: &[i64], b: &[i64]) -> DiophantineSystem {
        DiophantineSystem::from_i64(rows, cols, a, b).unwrap()
    }

    #[test]
    fn construction_enforces_the_contract() {
        assert!(matches!(
            DiophantineSystem::from_i64(2, 2, &[1, 2, 2, 4], &[1, 2]),
            Err(Error::RankDeficient {
                rank: 1,
                expected: 2
            })
        ));
        assert!(matches!(
            DiophantineSystem::from_i64(2, 1, &[1, 1], &[1, 1]),
            Err(Error::InvalidSystem(_))
        ));
        assert!(matches!(
            DiophantineSystem::from_i64(1, 2, &[1, 1], &[1, 2]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn minor_bound_examples() {
        assert_eq!(minor_bound(&sys(1, 2, &[1, 1], &[2])), BigInt::from(2));
        assert_eq!(minor_bound(&sys(1, 2, &[2, 3], &[1])), BigInt::from(3));
        // 2x2 minors of (A b): columns (1,0),(2,1),(3,1) give 1, 1, -1
        assert_eq!(
            minor_bound(&sys(2, 2, &[1, 2, 0, 1], &[3, 1])),
            BigInt::one()
        );
    }

    #[test]
    fn minor_bound_is_invariant_under_row_signs_and_swaps() {
        let base = sys(2, 3, &[1, 2, -1, 0, 3, 2], &[4, 5]);
        let swapped = sys(2, 3, &[0, 3, 2, 1, 2, -1], &[5, 4]);
        let negated = sys(2, 3, &[-1, -2, 1, 0, 3, 2], &[-4, 5]);
        let d = minor_bound(&base);
        assert_eq!(minor_bound(&swapped), d);
        assert_eq!(minor_bound(&negated), d);
    }

    #[test]
    fn gcd_of_minors_examples() {
        let m = IntMatrix::from_i64(1, 2, &[2, 4]).unwrap();
        assert_eq!(gcd_maximal_minors(&m).unwrap(), BigInt::from(2));
        let m = IntMatrix::from_i64(2, 3, &[1, 0, 0, 0, 1, 0]).unwrap();
        assert_eq!(gcd_maximal_minors(&m).unwrap(), BigInt::one());
        let m = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]).unwrap();
        assert_eq!(gcd_maximal_minors(&m).unwrap(), BigInt::from(6));
        let tall = IntMatrix::from_i64(2, 1, &[1, 1]).unwrap();
        assert!(gcd_maximal_minors(&tall).is_err());
    }

    #[test]
    fn saturate_divides_a_single_row() {
        let s = saturate(&sys(1, 2, &[2, 4], &[6])).unwrap();
        assert_eq!(s.g, BigInt::from(2));
        assert_eq!(s.a_prime, IntMatrix::from_i64(1, 2, &[1, 2]).unwrap());
        assert_eq!(s.b_prime, int_vec(&[3]));
    }

    #[test]
    fn saturate_keeps_already_saturated_systems_row_equivalent() {
        let original = sys(2, 3, &[1, 0, 2, 0, 1, -1], &[3, 1]);
        let s = saturate(&original).unwrap();
        assert_eq!(s.g, BigInt::one());
        assert_eq!(gcd_maximal_minors(&s.a_prime).unwrap(), BigInt::one());
        // same row lattice: identical Hermite normal forms
        let lhs = crate::linalg::hermite_normal_form(&original.augmented()).h;
        let rhs =
            crate::linalg::hermite_normal_form(&s.a_prime.augment_column(&s.b_prime).unwrap()).h;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn saturate_preserves_the_solution_set() {
        let original = sys(2, 2, &[2, 0, 0, 3], &[2, 3]);
        let s = saturate(&original).unwrap();
        assert_eq!(s.g, BigInt::from(6));
        assert_eq!(gcd_maximal_minors(&s.a_prime).unwrap(), BigInt::one());
        // brute force over [-5, 5]^2: both systems must agree everywhere
        let mut solutions = Vec::new();
        for x in -5i64..=5 {
            for y in -5i64..=5 {
                let v = int_vec(&[x, y]);
                let lhs = original.a().mul_vec(&v).unwrap() == original.b().to_vec();
                let rhs = s.a_prime.mul_vec(&v).unwrap() == s.b_prime;
                assert_eq!(lhs, rhs, "disagreement at ({x}, {y})");
                if lhs {
                    solutions.push((x, y));
                }
            }
        }
        assert_eq!(solutions, alloc::vec![(1, 1)]);
    }

    #[test]
    fn saturate_requires_integer_feasibility() {
        assert!(matches!(
            saturate(&sys(1, 2, &[2, 4], &[3])),
            Err(Error::Infeasible)
        ));
    }

    #[test]
    fn kernel_representation_examples() {
        let rep = kernel_representation(&sys(1, 2, &[1, 1], &[2])).unwrap();
        assert_eq!(rep.particular().iter().sum::<BigInt>(), BigInt::from(2));
        assert_eq!(rep.basis().rows(), 1);

        let rep = kernel_representation(&sys(2, 2, &[1, 0, 0, 1], &[3, 1])).unwrap();
        assert_eq!(rep.particular(), &int_vec(&[3, 1])[..]);
        assert_eq!(rep.basis().rows(), 0);

        assert!(matches!(
            kernel_representation(&sys(1, 2, &[2, 4], &[3])),
            Err(Error::Infeasible)
        ));
    }

    #[test]
    fn ambient_mapping_round_trips() {
        let system = sys(1, 2, &[1, 1], &[2]);
        let rep = kernel_representation(&system).unwrap();
        for y in -4i64..=4 {
            let x = rep.to_ambient(&int_vec(&[y])).unwrap();
            assert_eq!(system.a().mul_vec(&x).unwrap(), system.b().to_vec());
            assert_eq!(rep.from_ambient(&x).unwrap(), int_vec(&[y]));
        }
        // y = 0 lands on the particular solution
        assert_eq!(
            rep.to_ambient(&int_vec(&[0])).unwrap(),
            rep.particular().to_vec()
        );
        assert!(matches!(
            rep.from_ambient(&int_vec(&[1, 2])),
            Err(Error::NotInCoset)
        ));
        assert!(matches!(
            rep.to_ambient(&int_vec(&[1, 2])),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn bounded_solution_examples() {
        // solutions in [0,2]^2 are (0,2), (1,1), (2,0); lexicographically
        // smallest wins
        let cert = find_bounded_solution(&sys(1, 2, &[1, 1], &[2]))
            .unwrap()
            .unwrap();
        assert_eq!(cert.x0, int_vec(&[0, 2]));
        assert_eq!(cert.d, BigInt::from(2));

        assert_eq!(
            find_bounded_solution(&sys(1, 2, &[2, 3], &[1])).unwrap(),
            None
        );

        let cert = find_bounded_solution(&sys(1, 1, &[1], &[5]))
            .unwrap()
            .unwrap();
        assert_eq!(cert.x0, int_vec(&[5]));
        assert_eq!(cert.d, BigInt::from(5));
    }

    #[test]
    fn zero_rhs_short_circuits() {
        let cert = find_bounded_solution(&sys(1, 2, &[7, -11], &[0]))
            .unwrap()
            .unwrap();
        assert_eq!(cert.x0, int_vec(&[0, 0]));
        assert_eq!(cert.d, BigInt::from(11));
    }

    #[test]
    fn cap_is_an_error_not_a_truncation() {
        let err = find_bounded_solution(&sys(1, 1, &[1], &[20_000])).unwrap_err();
        assert!(matches!(err, Error::BoundTooLarge { cap: 10_000, .. }));
        let ok = find_bounded_solution_with_cap(&sys(1, 1, &[1], &[20_000]), 30_000)
            .unwrap()
            .unwrap();
        assert_eq!(ok.x0, int_vec(&[20_000]));
    }

    #[test]
    fn feasibility_examples() {
        assert!(is_feasible(&sys(1, 2, &[1, 1], &[2])).unwrap());
        assert!(!is_feasible(&sys(1, 1, &[2], &[1])).unwrap());
        assert!(is_feasible(&sys(1, 2, &[1, -1], &[0])).unwrap());
    }

    #[test]
    fn boundedness_examples() {
        assert!(is_bounded(&sys(1, 2, &[1, 1], &[2])).unwrap());
        assert!(!is_bounded(&sys(1, 2, &[1, -1], &[0])).unwrap());
        assert!(is_bounded(&sys(2, 2, &[1, 2, 0, 1], &[3, 1])).unwrap());
    }

    #[test]
    fn boundedness_respects_the_cap() {
        // the ray box bound comes from the matrix minors, not from b
        assert!(matches!(
            is_bounded(&sys(1, 2, &[10_007, 1], &[1])),
            Err(Error::BoundTooLarge { cap: 10_000, .. })
        ));
        assert!(is_bounded_with_cap(&sys(1, 2, &[10_007, 1], &[1]), 20_000).unwrap());
    }

    #[test]
    fn search_returns_lexicographically_smallest() {
        // 2x + 3y = 12: solutions (0,4), (3,2), (6,0); d = 12
        let cert = find_bounded_solution(&sys(1, 2, &[2, 3], &[12]))
            .unwrap()
            .unwrap();
        assert_eq!(cert.x0, int_vec(&[0, 4]));
    }
}
