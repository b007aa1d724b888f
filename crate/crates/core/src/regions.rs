//! Upper boundaries of the existence regions `Ω_w` in the `(a, d)` plane.
//!
//! For each detuning `a` the branch of type `w` is continued upward in `d`
//! until it folds or hits the scan ceiling `d_cap`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::gde::{self, ContinuationConfig, Params, SolveError};
use crate::words::{GroupKind, Word};

/// Scan ceiling used when none is given. Above every region boundary of
/// interest for the words this crate is used with.
pub const DEFAULT_D_CAP: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Terminal {
    /// The branch stopped and the Jacobian determinant had collapsed.
    Fold,
    /// The branch reached the scan ceiling.
    DmaxCap,
    /// The step floor was hit without evidence of a fold.
    StepFloor,
}

impl Terminal {
    pub fn as_str(self) -> &'static str {
        match self {
            Terminal::Fold => "FOLD",
            Terminal::DmaxCap => "DMAX_CAP",
            Terminal::StepFloor => "STEP_FLOOR",
        }
    }
}

impl fmt::Display for Terminal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Terminal {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "FOLD" => Ok(Terminal::Fold),
            "DMAX_CAP" => Ok(Terminal::DmaxCap),
            "STEP_FLOOR" => Ok(Terminal::StepFloor),
            other => Err(format!("unknown terminal {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionSample {
    pub a: f64,
    pub d_max: f64,
    pub terminal: Terminal,
    /// `|det J|` at `d_max` relative to its `d = 0` value; the fold
    /// certificate.
    pub det_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionBoundary {
    #[serde(serialize_with = "serialize_word")]
    pub word: Word,
    pub samples: Vec<RegionSample>,
    pub d_cap: f64,
}

fn serialize_word<S: serde::Serializer>(w: &Word, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

/// The mirror `T(a, d) = (1 - a, d)` acting on sampled boundaries.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MirrorTransform;

impl MirrorTransform {
    pub fn apply_params(self, p: Params) -> Params {
        p.mirrored()
    }

    /// Mirrors every sample; the result is again sorted by `a`. The word is
    /// replaced by its value permutation, matching `Ω_w = T(Ω_{π(w)})`.
    pub fn apply(self, boundary: &RegionBoundary) -> RegionBoundary {
        let samples = boundary
            .samples
            .iter()
            .rev()
            .map(|s| RegionSample { a: 1.0 - s.a, ..*s })
            .collect();
        RegionBoundary {
            word: boundary.word.permute_values(),
            samples,
            d_cap: boundary.d_cap,
        }
    }
}

/// `count` equispaced points from `a_min` to `a_max` inclusive.
pub fn uniform_grid(a_min: f64, a_max: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![a_min],
        _ => (0..count)
            .map(|i| a_min + (a_max - a_min) * i as f64 / (count - 1) as f64)
            .collect(),
    }
}

/// `{k / 200 : k = 1..199}`, symmetric about `1/2`.
pub fn default_a_grid() -> Vec<f64> {
    (1..200).map(|k| k as f64 / 200.0).collect()
}

/// Largest `d ≤ d_cap` reached by the type-`w` branch at detuning `a`.
/// The branch is that of the primitive root of `w`.
///
/// When the branch stops early the last accepted `d` is returned; the
/// rejected step above it is at most `2·d_step_min` away.
pub fn d_max(
    w: &Word,
    a: f64,
    cfg: &ContinuationConfig,
    d_cap: f64,
) -> Result<RegionSample, SolveError> {
    if !(d_cap > 0.0 && d_cap.is_finite()) {
        return Err(SolveError::InvalidParams(format!(
            "d_cap = {d_cap} must be positive"
        )));
    }
    let trace = gde::trace_branch(&w.primitive_root(), a, d_cap, cfg)?;
    let det_ratio = trace.det_ratio();
    let (d_max, terminal) = if trace.reached(d_cap) {
        (d_cap, Terminal::DmaxCap)
    } else if det_ratio < cfg.det_guard {
        (trace.last.d, Terminal::Fold)
    } else {
        (trace.last.d, Terminal::StepFloor)
    };
    Ok(RegionSample {
        a,
        d_max,
        terminal,
        det_ratio,
    })
}

/// `d_max` at every grid point. Grid points are evaluated in parallel; the
/// samples come back in grid order.
pub fn scan_region(
    w: &Word,
    a_grid: &[f64],
    cfg: &ContinuationConfig,
    d_cap: f64,
) -> Result<RegionBoundary, SolveError> {
    if a_grid.windows(2).any(|p| p[0] >= p[1]) {
        return Err(SolveError::InvalidParams(
            "a-grid must be strictly increasing".into(),
        ));
    }
    let samples = a_grid
        .par_iter()
        .map(|&a| d_max(w, a, cfg, d_cap))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RegionBoundary {
        word: w.clone(),
        samples,
        d_cap,
    })
}

/// Largest deviations between `d_max(w, ·)` and the boundaries of its
/// symmetry images.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetryReport {
    #[serde(serialize_with = "serialize_word")]
    pub word: Word,
    /// Over all rotations `r^i(w)`.
    pub rotation_deviation: f64,
    /// Over all reflections `s r^i(w)`.
    pub reflection_deviation: f64,
    /// `max_a |d_max(w, a) - d_max(π(w), 1 - a)|`.
    pub mirror_deviation: f64,
}

impl SymmetryReport {
    pub fn max_deviation(&self) -> f64 {
        self.rotation_deviation
            .max(self.reflection_deviation)
            .max(self.mirror_deviation)
    }
}

fn max_deviation(lhs: &[RegionSample], rhs: &[RegionSample]) -> f64 {
    lhs.iter()
        .zip(rhs)
        .map(|(x, y)| (x.d_max - y.d_max).abs())
        .fold(0.0, f64::max)
}

/// Checks `Ω_w = Ω_{g(w)}` for the rotations and reflections `g` and
/// `Ω_w = T(Ω_{π(w)})` on `a_grid`, each image scanned independently.
pub fn verify_region_symmetries(
    w: &Word,
    a_grid: &[f64],
    cfg: &ContinuationConfig,
    d_cap: f64,
) -> Result<SymmetryReport, SolveError> {
    let n = w.len();
    let base = scan_region(w, a_grid, cfg, d_cap)?;

    let rotations: BTreeSet<Word> = (1..n).map(|i| w.rotate_by(i)).collect();
    let reflections: BTreeSet<Word> = w.images(GroupKind::Dihedral)[n..].iter().cloned().collect();
    let deviation_over = |images: &BTreeSet<Word>| -> Result<f64, SolveError> {
        images
            .iter()
            .filter(|img| *img != w)
            .map(|img| {
                Ok(max_deviation(
                    &base.samples,
                    &scan_region(img, a_grid, cfg, d_cap)?.samples,
                ))
            })
            .try_fold(0.0, |m, dev: Result<f64, SolveError>| Ok(f64::max(m, dev?)))
    };
    let rotation_deviation = deviation_over(&rotations)?;
    let reflection_deviation = deviation_over(&reflections)?;

    let swapped = w.permute_values();
    let mirrored: Vec<RegionSample> = a_grid
        .par_iter()
        .map(|&a| d_max(&swapped, 1.0 - a, cfg, d_cap))
        .collect::<Result<_, _>>()?;
    let mirror_deviation = max_deviation(&base.samples, &mirrored);

    Ok(SymmetryReport {
        word: w.clone(),
        rotation_deviation,
        reflection_deviation,
        mirror_deviation,
    })
}

/// Whether `p ∈ Ω_w`.
pub fn membership(w: &Word, p: &Params, cfg: &ContinuationConfig) -> bool {
    gde::solve_type(w, p, cfg).is_ok()
}
