//! Randomized and exhaustive verification: seeded instance generation,
//! brute-force oracles, the per-coordinate bound check, the
//! complementary-minor duality check, the bounded-case vertex check, and
//! campaign drivers that run any of them over a seeded trial sequence.
//!
//! Randomness comes exclusively from ChaCha20 (`rand_chacha`), seeded with
//! `seed_from_u64`; identical parameters reproduce identical campaigns.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::hull::in_convex_hull;
use crate::linalg::{determinant, kernel_lattice_basis, rank};
use crate::matrix::IntMatrix;
use crate::system::{
    find_bounded_solution_with_cap, gcd_maximal_minors, minor_bound, saturate, saturate_matrix,
    DiophantineSystem, SolutionCertificate, DEFAULT_D_CAP,
};
use crate::util::{complement, k_subsets};

/// Default point budget for exhaustive enumerations.
pub const DEFAULT_ENUM_BUDGET: u64 = 10_000_000;

/// How often a rank-deficient draw may be retried before giving up.
const RANK_RETRY_LIMIT: u32 = 100;

/// How often a filtered draw (oracle mode) may be retried.
const FILTER_RETRY_LIMIT: u32 = 1_000;

/// Parameters for seeded instance generation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub m: usize,
    pub n: usize,
    /// Matrix entries are drawn uniformly from `[-entry_bound, entry_bound]`.
    pub entry_bound: u32,
    /// Witness entries are drawn uniformly from `[0, witness_bound]`.
    pub witness_bound: u32,
    pub seed: u64,
}

impl GenParams {
    pub fn validate(&self) -> Result<()> {
        if self.m < 1 || self.m > self.n {
            return Err(Error::InvalidParams(format!(
                "need 1 <= m <= n, got m = {}, n = {}",
                self.m, self.n
            )));
        }
        if self.entry_bound == 0 {
            return Err(Error::InvalidParams("entry_bound must be positive".into()));
        }
        Ok(())
    }

    fn with_seed(&self, seed: u64) -> GenParams {
        GenParams {
            seed,
            ..self.clone()
        }
    }
}

/// Knobs shared by the checkers; the defaults match the documented desk
/// scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    /// Cap on the minor bound before the solver refuses to search.
    pub d_cap: u64,
    /// The confirmation oracle runs only for up to this many unknowns...
    pub oracle_max_vars: usize,
    /// ...and only when `d` is at most this large.
    pub oracle_d_max: u64,
    /// Point budget for exhaustive enumerations.
    pub enum_budget: u64,
    /// Largest solution set the exact vertex test will accept.
    pub hull_point_cap: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            d_cap: DEFAULT_D_CAP,
            oracle_max_vars: 4,
            oracle_d_max: 50,
            enum_budget: DEFAULT_ENUM_BUDGET,
            hull_point_cap: 200,
        }
    }
}

/// Uniform draw from `[lo, hi]` by rejection from the raw 64-bit stream; no
/// dependence on any library's range-sampling details.
fn uniform_in<R: RngCore>(rng: &mut R, lo: i64, hi: i64) -> i64 {
    debug_assert!(lo <= hi);
    let span = (hi - lo) as u64 + 1;
    let limit = u64::MAX - u64::MAX % span;
    loop {
        let x = rng.next_u64();
        if x < limit {
            return lo + (x % span) as i64;
        }
    }
}

/// Matrix with entries uniform in `[-bound, bound]`.
pub fn random_matrix<R: RngCore>(rng: &mut R, rows: usize, cols: usize, bound: u32) -> IntMatrix {
    let entries = (0..rows * cols)
        .map(|_| BigInt::from(uniform_in(rng, -(bound as i64), bound as i64)))
        .collect();
    IntMatrix::new(rows, cols, entries).expect("shape matches by construction")
}

fn random_witness<R: RngCore>(rng: &mut R, n: usize, bound: u32) -> Vec<BigInt> {
    (0..n)
        .map(|_| BigInt::from(uniform_in(rng, 0, bound as i64)))
        .collect()
}

fn draw_full_rank<R: RngCore>(rng: &mut R, p: &GenParams) -> Result<IntMatrix> {
    for _ in 0..RANK_RETRY_LIMIT {
        let a = random_matrix(rng, p.m, p.n, p.entry_bound);
        if rank(&a) == p.m {
            return Ok(a);
        }
    }
    Err(Error::GeneratorExhausted {
        tries: RANK_RETRY_LIMIT,
    })
}

fn draw_feasible<R: RngCore>(
    rng: &mut R,
    p: &GenParams,
) -> Result<(DiophantineSystem, Vec<BigInt>)> {
    let a = draw_full_rank(rng, p)?;
    let w = random_witness(rng, p.n, p.witness_bound);
    let b = a.mul_vec(&w)?;
    let sys = DiophantineSystem::new(a, b)?;
    Ok((sys, w))
}

/// A feasible-by-construction instance: `A` is resampled until it has full
/// row rank, the witness `w` is nonnegative, and `b = A w`. Deterministic in
/// the seed.
pub fn random_feasible_instance(p: &GenParams) -> Result<(DiophantineSystem, Vec<BigInt>)> {
    p.validate()?;
    let mut rng = ChaCha20Rng::seed_from_u64(p.seed);
    draw_feasible(&mut rng, p)
}

/// All nonnegative solutions with coordinates at most `cap`, in
/// lexicographic order, by plain nested enumeration. Deliberately free of
/// pruning so it can serve as an oracle for the solver.
pub fn brute_force_box_search(sys: &DiophantineSystem, cap: u64) -> Result<Vec<Vec<BigInt>>> {
    brute_force_box_search_with_budget(sys, cap, DEFAULT_ENUM_BUDGET)
}

pub fn brute_force_box_search_with_budget(
    sys: &DiophantineSystem,
    cap: u64,
    budget: u64,
) -> Result<Vec<Vec<BigInt>>> {
    enumerate_box(
        sys.a(),
        sys.b(),
        &BigInt::zero(),
        &BigInt::from(cap),
        budget,
    )
}

/// As [`brute_force_box_search`] over the signed box `[-cap, cap]^n`; used to
/// compare integer solution sets before and after saturation.
pub fn brute_force_signed_box(
    a: &IntMatrix,
    b: &[BigInt],
    cap: u64,
    budget: u64,
) -> Result<Vec<Vec<BigInt>>> {
    enumerate_box(a, b, &-BigInt::from(cap), &BigInt::from(cap), budget)
}

fn enumerate_box(
    a: &IntMatrix,
    b: &[BigInt],
    lo: &BigInt,
    hi: &BigInt,
    budget: u64,
) -> Result<Vec<Vec<BigInt>>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for {} equations",
            b.len(),
            a.rows()
        )));
    }
    let n = a.cols();
    let width: BigInt = hi - lo + 1;
    if width.is_negative() || width.is_zero() {
        return Ok(Vec::new());
    }
    let points = num_traits::pow::pow(width, n);
    if points > BigInt::from(budget) {
        return Err(Error::BudgetExceeded { points, budget });
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut residual = b.to_vec();
    enumerate_rec(a, lo, hi, &mut current, &mut residual, &mut out);
    Ok(out)
}

fn enumerate_rec(
    a: &IntMatrix,
    lo: &BigInt,
    hi: &BigInt,
    current: &mut Vec<BigInt>,
    residual: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    let depth = current.len();
    if depth == a.cols() {
        if residual.iter().all(Zero::is_zero) {
            out.push(current.clone());
        }
        return;
    }
    let column = a.column(depth);
    for (r, c) in residual.iter_mut().zip(&column) {
        *r -= c * lo;
    }
    let mut value = lo.clone();
    while value <= *hi {
        current.push(value.clone());
        enumerate_rec(a, lo, hi, current, residual, out);
        current.pop();
        for (r, c) in residual.iter_mut().zip(&column) {
            *r -= c;
        }
        value += 1;
    }
    for (r, c) in residual.iter_mut().zip(&column) {
        *r += c * &value;
    }
}

/// Outcome of checking the per-coordinate bound on one system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub d: BigInt,
    pub feasible: bool,
    pub certificate: Option<SolutionCertificate>,
    /// `!feasible`, or a certificate exists with all coordinates at most `d`.
    pub holds: bool,
    /// Set when the confirmation oracle ran: whether solver and oracle agree.
    pub oracle_agreement: Option<bool>,
}

pub fn check_theorem(sys: &DiophantineSystem) -> Result<TheoremReport> {
    check_theorem_with_config(sys, &CheckConfig::default())
}

pub fn check_theorem_with_config(
    sys: &DiophantineSystem,
    config: &CheckConfig,
) -> Result<TheoremReport> {
    let d = minor_bound(sys);
    let certificate = find_bounded_solution_with_cap(sys, config.d_cap)?;
    let mut feasible = certificate.is_some();
    let mut oracle_agreement = None;
    if certificate.is_none()
        && sys.num_vars() <= config.oracle_max_vars
        && d <= BigInt::from(config.oracle_d_max)
    {
        // confirm the infeasibility claim by exhaustive enumeration
        let cap = d.to_u64().expect("d <= oracle_d_max fits");
        let solutions = brute_force_box_search_with_budget(sys, cap, config.enum_budget)?;
        feasible = !solutions.is_empty();
        oracle_agreement = Some(solutions.is_empty());
    }
    let holds = !feasible
        || certificate.as_ref().is_some_and(|c| {
            c.d == d
                && c.x0.len() == sys.num_vars()
                && c.x0.iter().all(|v| !v.is_negative() && *v <= d)
                && sys
                    .a()
                    .mul_vec(&c.x0)
                    .map(|ax| ax == sys.b())
                    .unwrap_or(false)
        });
    Ok(TheoremReport {
        d,
        feasible,
        certificate,
        holds,
        oracle_agreement,
    })
}

/// One complementary-minor pair that failed to match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaViolation {
    pub column_set: Vec<usize>,
    pub minor_a: BigInt,
    pub minor_h: BigInt,
}

/// Outcome of the complementary-minor duality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub holds: bool,
    pub pairs_checked: usize,
    pub violation: Option<LemmaViolation>,
}

/// Checks, for every m-subset `I` of columns, that `|det A_I|` equals the
/// determinant of the kernel basis on the complementary columns. Requires
/// full row rank and gcd-1 maximal minors (saturate first otherwise).
pub fn check_lemma(a: &IntMatrix) -> Result<LemmaReport> {
    let m = a.rows();
    let n = a.cols();
    let r = rank(a);
    if r != m {
        return Err(Error::RankDeficient {
            rank: r,
            expected: m,
        });
    }
    let g = gcd_maximal_minors(a)?;
    if !g.is_one() {
        return Err(Error::GcdNotOne { gcd: g });
    }
    let h = kernel_lattice_basis(a);
    let mut pairs_checked = 0;
    for column_set in k_subsets(n, m) {
        let minor_a = determinant(&a.select_columns(&column_set))?.abs();
        let co = complement(n, &column_set);
        let minor_h = determinant(&h.select_columns(&co))?.abs();
        pairs_checked += 1;
        if minor_a != minor_h {
            return Ok(LemmaReport {
                holds: false,
                pairs_checked,
                violation: Some(LemmaViolation {
                    column_set,
                    minor_a,
                    minor_h,
                }),
            });
        }
    }
    Ok(LemmaReport {
        holds: true,
        pairs_checked,
        violation: None,
    })
}

/// Outcome of the bounded-case vertex check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexReport {
    pub holds: bool,
    /// Whether every enumerated solution stayed inside `[0, d]^n`; a `false`
    /// here is a counterexample to the Cramer containment and makes the
    /// check fail outright.
    pub shell_empty: bool,
    pub solution_count: usize,
    pub vertex_count: usize,
}

pub fn check_vertex_remark(sys: &DiophantineSystem) -> Result<VertexReport> {
    check_vertex_remark_with_config(sys, &CheckConfig::default())
}

/// Enumerates the full bounded solution set over `[0, 2d]^n`, insists the
/// shell `(d, 2d]` is empty, identifies the vertices of the convex hull by
/// the exact convex-combination test, and reports whether some vertex has
/// every coordinate at most `d` (all of them do once containment holds).
///
/// An empty solution set passes vacuously.
pub fn check_vertex_remark_with_config(
    sys: &DiophantineSystem,
    config: &CheckConfig,
) -> Result<VertexReport> {
    if !crate::system::is_bounded_with_cap(sys, config.d_cap)? {
        return Err(Error::Unbounded);
    }
    let d = minor_bound(sys);
    let two_d = BigInt::from(2) * &d;
    let solutions = enumerate_box(
        sys.a(),
        sys.b(),
        &BigInt::zero(),
        &two_d,
        config.enum_budget,
    )?;
    let shell_empty = solutions.iter().all(|x| x.iter().all(|coord| *coord <= d));
    if !shell_empty {
        return Ok(VertexReport {
            holds: false,
            shell_empty: false,
            solution_count: solutions.len(),
            vertex_count: 0,
        });
    }
    if solutions.is_empty() {
        return Ok(VertexReport {
            holds: true,
            shell_empty: true,
            solution_count: 0,
            vertex_count: 0,
        });
    }
    if solutions.len() > config.hull_point_cap {
        return Err(Error::TooManySolutions {
            count: solutions.len(),
            cap: config.hull_point_cap,
        });
    }
    let mut vertex_count = 0usize;
    let mut some_vertex_in_bound = false;
    for (i, point) in solutions.iter().enumerate() {
        let others: Vec<Vec<BigInt>> = solutions
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.clone())
            .collect();
        if !in_convex_hull(point, &others) {
            vertex_count += 1;
            if point.iter().all(|coord| *coord <= d) {
                some_vertex_in_bound = true;
            }
        }
    }
    debug_assert!(vertex_count >= 1, "a nonempty finite set has a vertex");
    Ok(VertexReport {
        holds: some_vertex_in_bound,
        shell_empty: true,
        solution_count: solutions.len(),
        vertex_count,
    })
}

/// What a campaign exercises on each generated instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CampaignMode {
    /// Generate feasible instances and check the per-coordinate bound.
    Theorem,
    /// Generate full-rank matrices, saturate, and check the minor duality.
    Lemma,
    /// Compare the solver against the brute-force oracle, mixing feasible
    /// and perturbed (possibly infeasible) right-hand sides.
    Oracle,
    /// Inflate row gcds, saturate, and compare integer solution sets.
    Saturation,
}

impl CampaignMode {
    pub fn name(&self) -> &'static str {
        match self {
            CampaignMode::Theorem => "theorem",
            CampaignMode::Lemma => "lemma",
            CampaignMode::Oracle => "oracle",
            CampaignMode::Saturation => "saturation",
        }
    }
}

/// One failed trial with everything needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignFailure {
    pub trial: u64,
    pub seed: u64,
    pub system: Option<DiophantineSystem>,
    pub detail: String,
}

/// Aggregate outcome of a campaign; failures are ordered by trial index.
#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub mode: CampaignMode,
    pub params: GenParams,
    pub trials: u64,
    pub failures: Vec<CampaignFailure>,
    pub elapsed_ms: u64,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `trials` independent checks seeded `seed, seed + 1, ...`; trial
/// errors are recorded as failures, never raised. Deterministic in
/// `(params, trials, mode)` apart from `elapsed_ms`.
pub fn fuzz_campaign(p: &GenParams, trials: u64, mode: CampaignMode) -> Result<CampaignReport> {
    fuzz_campaign_with_config(p, trials, mode, &CheckConfig::default())
}

pub fn fuzz_campaign_with_config(
    p: &GenParams,
    trials: u64,
    mode: CampaignMode,
    config: &CheckConfig,
) -> Result<CampaignReport> {
    p.validate()?;
    #[cfg(feature = "std")]
    let start = std::time::Instant::now();

    let mut failures = Vec::new();
    for trial in 0..trials {
        let seed = p.seed.wrapping_add(trial);
        let trial_params = p.with_seed(seed);
        if let Err(failure) = run_trial(&trial_params, mode, config) {
            failures.push(CampaignFailure {
                trial,
                seed,
                system: failure.system,
                detail: failure.detail,
            });
        }
    }

    #[cfg(feature = "std")]
    let elapsed_ms = start.elapsed().as_millis() as u64;
    #[cfg(not(feature = "std"))]
    let elapsed_ms = 0u64;

    Ok(CampaignReport {
        mode,
        params: p.clone(),
        trials,
        failures,
        elapsed_ms,
    })
}

struct TrialFailure {
    system: Option<DiophantineSystem>,
    detail: String,
}

impl TrialFailure {
    fn new(system: Option<&DiophantineSystem>, detail: String) -> Self {
        TrialFailure {
            system: system.cloned(),
            detail,
        }
    }
}

fn run_trial(
    p: &GenParams,
    mode: CampaignMode,
    config: &CheckConfig,
) -> core::result::Result<(), TrialFailure> {
    let mut rng = ChaCha20Rng::seed_from_u64(p.seed);
    match mode {
        CampaignMode::Theorem => {
            let (sys, _witness) =
                draw_feasible(&mut rng, p).map_err(|e| TrialFailure::new(None, e.to_string()))?;
            match check_theorem_with_config(&sys, config) {
                Ok(report) if report.holds => Ok(()),
                Ok(report) => Err(TrialFailure::new(
                    Some(&sys),
                    format!(
                        "bound check failed: d = {}, feasible = {}, certificate = {:?}",
                        report.d, report.feasible, report.certificate
                    ),
                )),
                Err(e) => Err(TrialFailure::new(Some(&sys), e.to_string())),
            }
        }
        CampaignMode::Lemma => {
            let a =
                draw_full_rank(&mut rng, p).map_err(|e| TrialFailure::new(None, e.to_string()))?;
            let (saturated, _g) = saturate_matrix(&a)
                .map_err(|e| TrialFailure::new(None, format!("saturation failed on {a}: {e}")))?;
            match check_lemma(&saturated) {
                Ok(report) if report.holds => Ok(()),
                Ok(report) => Err(TrialFailure::new(
                    None,
                    format!("duality violated on {saturated}: {:?}", report.violation),
                )),
                Err(e) => Err(TrialFailure::new(
                    None,
                    format!("lemma check on {saturated}: {e}"),
                )),
            }
        }
        CampaignMode::Oracle => {
            let perturb = p.seed % 2 == 1;
            let sys = draw_oracle_instance(&mut rng, p, perturb, config)
                .map_err(|e| TrialFailure::new(None, e.to_string()))?;
            compare_solver_with_oracle(&sys, config)
        }
        CampaignMode::Saturation => {
            let (sys, _witness) =
                draw_feasible(&mut rng, p).map_err(|e| TrialFailure::new(None, e.to_string()))?;
            let inflated = inflate_row_gcds(&mut rng, &sys)
                .map_err(|e| TrialFailure::new(Some(&sys), e.to_string()))?;
            check_saturation_roundtrip(&inflated, config)
        }
    }
}

/// Draws instances until the minor bound is small enough for the exhaustive
/// oracle; odd seeds also bump one right-hand-side entry, which may or may
/// not break feasibility.
fn draw_oracle_instance<R: RngCore>(
    rng: &mut R,
    p: &GenParams,
    perturb: bool,
    config: &CheckConfig,
) -> Result<DiophantineSystem> {
    for _ in 0..FILTER_RETRY_LIMIT {
        let a = draw_full_rank(rng, p)?;
        let w = random_witness(rng, p.n, p.witness_bound);
        let mut b = a.mul_vec(&w)?;
        if perturb {
            let idx = uniform_in(rng, 0, p.m as i64 - 1) as usize;
            b[idx] += uniform_in(rng, 1, 3);
        }
        let sys = DiophantineSystem::new(a, b)?;
        let d = minor_bound(&sys);
        if d > BigInt::from(config.oracle_d_max) {
            continue;
        }
        let points = num_traits::pow::pow(&d + 1, sys.num_vars());
        if points > BigInt::from(config.enum_budget) {
            continue;
        }
        return Ok(sys);
    }
    Err(Error::GeneratorExhausted {
        tries: FILTER_RETRY_LIMIT,
    })
}

fn compare_solver_with_oracle(
    sys: &DiophantineSystem,
    config: &CheckConfig,
) -> core::result::Result<(), TrialFailure> {
    let d = minor_bound(sys);
    let cap = d.to_u64().expect("filtered to the oracle range");
    let solver = find_bounded_solution_with_cap(sys, config.d_cap)
        .map_err(|e| TrialFailure::new(Some(sys), e.to_string()))?;
    let oracle = brute_force_box_search_with_budget(sys, cap, config.enum_budget)
        .map_err(|e| TrialFailure::new(Some(sys), e.to_string()))?;
    match (&solver, oracle.first()) {
        (None, None) => Ok(()),
        (Some(cert), Some(smallest)) if &cert.x0 == smallest => Ok(()),
        _ => Err(TrialFailure::new(
            Some(sys),
            format!(
                "solver/oracle mismatch: solver = {:?}, oracle head = {:?}",
                solver.as_ref().map(|c| &c.x0),
                oracle.first()
            ),
        )),
    }
}

/// Multiplies each row (and its right-hand side) by a small factor, inflating
/// the gcd of the maximal minors without touching the solution set.
fn inflate_row_gcds<R: RngCore>(rng: &mut R, sys: &DiophantineSystem) -> Result<DiophantineSystem> {
    let m = sys.num_equations();
    let n = sys.num_vars();
    let mut entries = Vec::with_capacity(m * n);
    let mut b = Vec::with_capacity(m);
    for i in 0..m {
        let factor = BigInt::from(uniform_in(rng, 1, 3));
        for j in 0..n {
            entries.push(sys.a().at(i, j) * &factor);
        }
        b.push(&sys.b()[i] * &factor);
    }
    DiophantineSystem::new(IntMatrix::new(m, n, entries)?, b)
}

fn check_saturation_roundtrip(
    sys: &DiophantineSystem,
    config: &CheckConfig,
) -> core::result::Result<(), TrialFailure> {
    let result = saturate(sys).map_err(|e| TrialFailure::new(Some(sys), e.to_string()))?;
    let gcd_after = gcd_maximal_minors(&result.a_prime)
        .map_err(|e| TrialFailure::new(Some(sys), e.to_string()))?;
    if !gcd_after.is_one() {
        return Err(TrialFailure::new(
            Some(sys),
            format!("saturated matrix still has minor gcd {gcd_after}"),
        ));
    }
    let cap = 4u64;
    let before = brute_force_signed_box(sys.a(), sys.b(), cap, config.enum_budget)
        .map_err(|e| TrialFailure::new(Some(sys), e.to_string()))?;
    let after = brute_force_signed_box(&result.a_prime, &result.b_prime, cap, config.enum_budget)
        .map_err(|e| TrialFailure::new(Some(sys), e.to_string()))?;
    if before != after {
        return Err(TrialFailure::new(
            Some(sys),
            format!(
                "solution sets diverge after saturation: {} vs {} points in the box",
                before.len(),
                after.len()
            ),
        ));
    }
    Ok(())
}
