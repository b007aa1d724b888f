//! Stationary states of the Nagumo equation on an `n`-vertex cycle.
//!
//! Solutions are labelled by the word whose decoupled root `w|_a` they are
//! continued from: starting at `d = 0`, the branch is followed upward in `d`
//! with a Newton corrector while the Jacobian stays nonsingular. Along such
//! a branch the Jacobian is symmetric with no zero eigenvalue, so the number
//! of positive eigenvalues is conserved and must equal the number of `a`
//! letters in the word; a step that lands anywhere else is rejected.
//!
//! A periodic word labels the same lattice pattern as its primitive root, so
//! [`solve_type`] continues the root and extends the result. A root of length
//! one is an uncoupled vertex: its neighbours are itself.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;
use thiserror::Error;

use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("the cycle needs at least two vertices, got {0}")]
    TooShort(usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid continuation config: {0}")]
    InvalidConfig(String),
    #[error("initial guess has non-finite entries")]
    NonFinite,
    #[error("Newton did not converge (residual {residual:e})")]
    MaxIters { residual: f64 },
    #[error("singular Jacobian")]
    SingularJacobian,
    #[error("Newton iterate left the box [-0.5, 1.5]^n")]
    DivergedOutOfBox,
    #[error("no solution of this type: branch stopped at d = {d_reached}")]
    NotInRegion { d_reached: f64 },
    #[error("stability of {word} disagrees with its alphabet")]
    StabilityMismatch { word: String },
}

type Result<T> = std::result::Result<T, SolveError>;

/// Detuning `a ∈ (0, 1)` and coupling `d ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Params {
    pub a: f64,
    pub d: f64,
}

impl Params {
    pub fn new(a: f64, d: f64) -> Result<Self> {
        if !(a > 0.0 && a < 1.0) {
            return Err(SolveError::InvalidParams(format!(
                "a = {a} is not in (0, 1)"
            )));
        }
        if !(d >= 0.0 && d.is_finite()) {
            return Err(SolveError::InvalidParams(format!(
                "d = {d} is not a finite d >= 0"
            )));
        }
        Ok(Params { a, d })
    }

    /// The mirror `(1 - a, d)`.
    pub fn mirrored(self) -> Params {
        Params {
            a: 1.0 - self.a,
            d: self.d,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuationConfig {
    /// Max-norm residual accepted by Newton.
    pub newton_tol: f64,
    pub max_newton_iters: usize,
    pub d_step_init: f64,
    /// Continuation stops once the step would shrink below this; it is also
    /// the final width of the bracket around a fold.
    pub d_step_min: f64,
    pub step_shrink: f64,
    /// `|det J| / |det J(d = 0)|` below which a stopped branch counts as
    /// having reached a fold.
    pub det_guard: f64,
    /// Largest max-norm change of `u` accepted in one step.
    pub max_jump: f64,
    /// Largest relative change of any (sorted) Jacobian eigenvalue accepted
    /// in one step. Keeps the branch from stepping over a point where an
    /// eigenvalue touches zero without changing sign.
    pub eigen_guard: f64,
}

impl Default for ContinuationConfig {
    fn default() -> Self {
        ContinuationConfig {
            newton_tol: 1e-12,
            max_newton_iters: 25,
            d_step_init: 1e-3,
            d_step_min: 1e-10,
            step_shrink: 0.5,
            det_guard: 1e-3,
            max_jump: 0.25,
            eigen_guard: 0.5,
        }
    }
}

impl ContinuationConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("newton_tol", self.newton_tol),
            ("d_step_init", self.d_step_init),
            ("d_step_min", self.d_step_min),
            ("det_guard", self.det_guard),
            ("max_jump", self.max_jump),
            ("eigen_guard", self.eigen_guard),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(SolveError::InvalidConfig(format!(
                    "{name} must be positive"
                )));
            }
        }
        if self.max_newton_iters == 0 {
            return Err(SolveError::InvalidConfig(
                "max_newton_iters must be positive".into(),
            ));
        }
        if self.d_step_min >= self.d_step_init {
            return Err(SolveError::InvalidConfig(
                "d_step_min must be smaller than d_step_init".into(),
            ));
        }
        if !(self.step_shrink > 0.0 && self.step_shrink < 1.0) {
            return Err(SolveError::InvalidConfig(
                "step_shrink must lie in (0, 1)".into(),
            ));
        }
        Ok(())
    }
}

/// `f(s; a) = s(1 - s)(s - a)`.
pub fn cubic(s: f64, a: f64) -> f64 {
    s * (1.0 - s) * (s - a)
}

/// `∂f/∂s`.
pub fn cubic_deriv(s: f64, a: f64) -> f64 {
    -3.0 * s * s + 2.0 * (1.0 + a) * s - a
}

fn check_len(n: usize) -> Result<()> {
    if n < 2 {
        return Err(SolveError::TooShort(n));
    }
    Ok(())
}

/// `h_i = d(u_{i-1} - 2u_i + u_{i+1}) + f(u_i; a)` with cyclic indices. For
/// `n = 2` both neighbours are the other vertex, so the coupling is
/// `2d(u_2 - u_1)`.
pub fn residual(u: &[f64], p: &Params) -> Result<Vec<f64>> {
    check_len(u.len())?;
    Ok(cyclic_residual(u, p))
}

fn cyclic_residual(u: &[f64], p: &Params) -> Vec<f64> {
    let n = u.len();
    (0..n)
        .map(|i| {
            let left = u[(i + n - 1) % n];
            let right = u[(i + 1) % n];
            p.d * (left - 2.0 * u[i] + right) + cubic(u[i], p.a)
        })
        .collect()
}

fn max_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// `D_1 h(u; a, d)`: cyclic tridiagonal, symmetric.
pub fn jacobian(u: &[f64], p: &Params) -> Result<DMatrix<f64>> {
    check_len(u.len())?;
    Ok(cyclic_jacobian(u, p))
}

fn cyclic_jacobian(u: &[f64], p: &Params) -> DMatrix<f64> {
    let n = u.len();
    let mut j = DMatrix::zeros(n, n);
    for i in 0..n {
        j[(i, i)] = cubic_deriv(u[i], p.a) - 2.0 * p.d;
        j[(i, (i + 1) % n)] += p.d;
        j[(i, (i + n - 1) % n)] += p.d;
    }
    j
}

/// Eigen-data of a Jacobian.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub det: f64,
}

impl Spectrum {
    pub fn of(j: &DMatrix<f64>) -> Spectrum {
        let mut eigenvalues: Vec<f64> = j
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect();
        eigenvalues.sort_by(|x, y| x.total_cmp(y));
        let det = eigenvalues.iter().product();
        Spectrum { eigenvalues, det }
    }

    /// Number of positive eigenvalues.
    pub fn unstable_dimension(&self) -> usize {
        self.eigenvalues.iter().filter(|&&e| e > 0.0).count()
    }

    pub fn is_singular(&self) -> bool {
        self.eigenvalues.contains(&0.0) || self.det == 0.0
    }

    pub fn det_sign(&self) -> i8 {
        if self.det > 0.0 {
            1
        } else if self.det < 0.0 {
            -1
        } else {
            0
        }
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("n >= 1")
    }
}

/// A Newton root.
#[derive(Debug, Clone, PartialEq)]
pub struct Root {
    pub u: Vec<f64>,
    pub residual_norm: f64,
    pub iterations: usize,
    pub spectrum: Spectrum,
}

/// Newton's method on `h(·; a, d) = 0` from `u0`.
pub fn newton_solve(u0: &[f64], p: &Params, cfg: &ContinuationConfig) -> Result<Root> {
    check_len(u0.len())?;
    newton(u0, p, cfg)
}

fn newton(u0: &[f64], p: &Params, cfg: &ContinuationConfig) -> Result<Root> {
    if u0.iter().any(|x| !x.is_finite()) {
        return Err(SolveError::NonFinite);
    }
    let mut u = u0.to_vec();
    for iterations in 0..=cfg.max_newton_iters {
        let r = cyclic_residual(&u, p);
        let norm = max_norm(&r);
        let j = cyclic_jacobian(&u, p);
        if norm <= cfg.newton_tol {
            let spectrum = Spectrum::of(&j);
            if spectrum.is_singular() {
                return Err(SolveError::SingularJacobian);
            }
            return Ok(Root {
                u,
                residual_norm: norm,
                iterations,
                spectrum,
            });
        }
        if iterations == cfg.max_newton_iters {
            return Err(SolveError::MaxIters { residual: norm });
        }
        let rhs = -DVector::from_vec(r);
        let step = j.lu().solve(&rhs).ok_or(SolveError::SingularJacobian)?;
        for (ui, si) in u.iter_mut().zip(step.iter()) {
            *ui += si;
        }
        if u.iter().any(|&x| !(-0.5..=1.5).contains(&x)) {
            return Err(SolveError::DivergedOutOfBox);
        }
    }
    unreachable!("loop returns on its last iteration")
}

/// A point on a continued branch.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchPoint {
    pub d: f64,
    pub root: Root,
}

/// Outcome of following a branch from `d = 0` towards a target.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchTrace {
    /// Last accepted point.
    pub last: BranchPoint,
    /// Smallest rejected `d` above `last.d`, if the branch stopped early.
    pub failed_at: Option<f64>,
    /// `|det J|` at `d = 0`.
    pub initial_det: f64,
    pub steps: usize,
}

impl BranchTrace {
    pub fn reached(&self, target: f64) -> bool {
        self.failed_at.is_none() && self.last.d >= target
    }

    /// `|det J(last)| / |det J(0)|`.
    pub fn det_ratio(&self) -> f64 {
        (self.last.root.spectrum.det / self.initial_det).abs()
    }
}

fn decoupled_root(word: &Word, a: f64) -> Root {
    let u = word.values(a);
    let p = Params { a, d: 0.0 };
    let spectrum = Spectrum::of(&cyclic_jacobian(&u, &p));
    Root {
        u,
        residual_norm: 0.0,
        iterations: 0,
        spectrum,
    }
}

/// Follows the type-`word` branch from `(w|_a, a, 0)` up to `d_target`, on
/// the cycle of length `word.len()` (one vertex is allowed).
///
/// Steps start at `d_step_init`, are multiplied by `step_shrink` after each
/// rejected step and regrow after three accepted steps in a row. A step is
/// accepted when Newton converges, the unstable dimension still equals the
/// number of `a` letters, `u` moved by at most `max_jump` and no eigenvalue
/// changed by more than `eigen_guard` times its size. The trace
/// stops early once the step falls below `d_step_min`.
pub fn trace_branch(
    word: &Word,
    a: f64,
    d_target: f64,
    cfg: &ContinuationConfig,
) -> Result<BranchTrace> {
    cfg.validate()?;
    Params::new(a, d_target)?;
    let expected_unstable = word.letters().iter().filter(|&&l| l == Letter::A).count();
    let start = decoupled_root(word, a);
    let initial_det = start.spectrum.det.abs();
    let mut last = BranchPoint {
        d: 0.0,
        root: start,
    };
    let mut step = cfg.d_step_init;
    let mut streak = 0usize;
    let mut steps = 0usize;
    let mut failed_at: Option<f64> = None;

    while last.d < d_target {
        let d_next = (last.d + step).min(d_target);
        steps += 1;
        let p = Params { a, d: d_next };
        let accepted = match newton(&last.root.u, &p, cfg) {
            Ok(root) => {
                let jump = last
                    .root
                    .u
                    .iter()
                    .zip(&root.u)
                    .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
                let same_type = root.spectrum.unstable_dimension() == expected_unstable
                    && root.spectrum.det_sign() == last.root.spectrum.det_sign();
                let smooth = last
                    .root
                    .spectrum
                    .eigenvalues
                    .iter()
                    .zip(&root.spectrum.eigenvalues)
                    .all(|(old, new)| (new - old).abs() <= cfg.eigen_guard * old.abs());
                (same_type && smooth && jump <= cfg.max_jump).then_some(root)
            }
            Err(_) => None,
        };
        match accepted {
            Some(root) => {
                last = BranchPoint { d: d_next, root };
                if failed_at.is_some_and(|f| f <= d_next) {
                    failed_at = None;
                }
                streak += 1;
                if streak >= 3 && step < cfg.d_step_init {
                    step = (step / cfg.step_shrink).min(cfg.d_step_init);
                    streak = 0;
                }
            }
            None => {
                failed_at = Some(failed_at.map_or(d_next, |f: f64| f.min(d_next)));
                streak = 0;
                step *= cfg.step_shrink;
                if step < cfg.d_step_min {
                    break;
                }
            }
        }
    }
    if last.d >= d_target {
        failed_at = None;
    }
    Ok(BranchTrace {
        last,
        failed_at,
        initial_det,
        steps,
    })
}

/// A stationary state of known type.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Equilibrium {
    #[serde(serialize_with = "serialize_word")]
    pub word: Word,
    pub u: Vec<f64>,
    pub params: Params,
    pub det_sign: i8,
    pub stable: bool,
    pub residual_norm: f64,
    /// Newton iterations spent on the final continuation step.
    pub newton_iterations: usize,
    pub continuation_steps: usize,
}

fn serialize_word<S: serde::Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

/// The equilibrium of type `word` at `p`, or [`SolveError::NotInRegion`] if
/// its branch ends before `p.d`.
///
/// The branch is continued on the primitive root of `word` and extended
/// periodically. `det_sign` and `stable` describe the full `n`-vertex
/// Jacobian at the returned state.
pub fn solve_type(word: &Word, p: &Params, cfg: &ContinuationConfig) -> Result<Equilibrium> {
    check_len(word.len())?;
    let p = Params::new(p.a, p.d)?;
    let root_word = word.primitive_root();
    let trace = trace_branch(&root_word, p.a, p.d, cfg)?;
    if !trace.reached(p.d) {
        return Err(SolveError::NotInRegion {
            d_reached: trace.last.d,
        });
    }
    let root = trace.last.root;
    let u: Vec<f64> = root.u.iter().copied().cycle().take(word.len()).collect();
    let spectrum = Spectrum::of(&cyclic_jacobian(&u, &p));
    let stable = spectrum.max_eigenvalue() < 0.0;
    if stable != word.is_binary() {
        return Err(SolveError::StabilityMismatch {
            word: word.to_string(),
        });
    }
    Ok(Equilibrium {
        word: word.clone(),
        det_sign: spectrum.det_sign(),
        stable,
        residual_norm: max_norm(&cyclic_residual(&u, &p)),
        newton_iterations: root.iterations,
        continuation_steps: trace.steps,
        u,
        params: p,
    })
}

/// Max residual of the lattice equation on the periodic extension of
/// `e.u`, evaluated at every site of `window_periods` consecutive periods.
pub fn lde_residual_check(e: &Equilibrium, window_periods: usize) -> f64 {
    let n = e.u.len() as isize;
    let sites = window_periods as isize * n;
    // Sites -1..=sites, so every evaluated site has both neighbours.
    let lattice: Vec<f64> = (-1..=sites)
        .map(|i| e.u[i.rem_euclid(n) as usize])
        .collect();
    let Params { a, d } = e.params;
    lattice
        .windows(3)
        .map(|w| (d * (w[0] - 2.0 * w[1] + w[2]) + cubic(w[1], a)).abs())
        .fold(0.0, f64::max)
}
