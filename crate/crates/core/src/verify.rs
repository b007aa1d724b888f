//! Cross-checks of the closed-form counts against brute-force orbit
//! enumeration, and sweeps of the arithmetic identities behind them.

use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{self, Count, CountError};
use crate::numtheory::{self, ArithError};
use crate::words::{self, Alphabet, GroupKind, WordError};

/// Source of closed-form class counts. [`ClosedForms`] is the real one; the
/// trait lets the harness be exercised with deliberately broken formulas.
pub trait CountFormulas: Sync {
    fn class_count(
        &self,
        alphabet: Alphabet,
        group: GroupKind,
        lyndon: bool,
        n: u64,
    ) -> Result<Count, CountError>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClosedForms;

impl CountFormulas for ClosedForms {
    fn class_count(
        &self,
        alphabet: Alphabet,
        group: GroupKind,
        lyndon: bool,
        n: u64,
    ) -> Result<Count, CountError> {
        counting::class_count(alphabet, group, lyndon, n)
    }
}

/// Largest word lengths enumerated per alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub a2_max: usize,
    pub a3_max: usize,
}

impl Default for EnumerationBounds {
    fn default() -> Self {
        EnumerationBounds {
            a2_max: 12,
            a3_max: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub alphabet: String,
    pub group: String,
    pub lyndon: bool,
    pub n: usize,
    pub formula: Option<Count>,
    pub enumerated: usize,
}

impl CountCheck {
    pub fn passed(&self) -> bool {
        self.formula == Some(self.enumerated as Count)
    }
}

/// Every `(alphabet, group, lyndon, n)` combination within `bounds`, in a
/// fixed order.
pub fn verify_counts(
    formulas: &dyn CountFormulas,
    bounds: EnumerationBounds,
) -> Result<Vec<CountCheck>, WordError> {
    let mut cases = Vec::new();
    for (alphabet, max) in [(Alphabet::A2, bounds.a2_max), (Alphabet::A3, bounds.a3_max)] {
        for n in 1..=max {
            for group in GroupKind::ALL {
                for lyndon in [false, true] {
                    cases.push((alphabet, group, lyndon, n));
                }
            }
        }
    }
    cases
        .into_par_iter()
        .map(|(alphabet, group, lyndon, n)| {
            let enumerated = words::enumerate_orbits(n, alphabet, group, lyndon)?.len();
            Ok(CountCheck {
                alphabet: alphabet.to_string(),
                group: group.to_string(),
                lyndon,
                n,
                formula: formulas.class_count(alphabet, group, lyndon, n as u64).ok(),
                enumerated,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checked: u64,
    /// `n` with `Σ_{d|n} φ(d) ≠ n`.
    pub totient_sum_failures: Vec<u64>,
    /// `n` where a convolution sum differs from its `μ(n)` value.
    pub convolution_failures: Vec<u64>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.totient_sum_failures.is_empty() && self.convolution_failures.is_empty()
    }
}

/// Checks `Σ_{d|n} φ(d) = n` and the three convolution identities for
/// `n = 1..=n_max`.
pub fn verify_identities(n_max: u64) -> Result<IdentityReport, ArithError> {
    let rows: Vec<(u64, bool, bool)> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let totient_sum: u64 = numtheory::divisors(n)?
                .into_iter()
                .map(numtheory::euler_phi)
                .sum::<Result<u64, _>>()?;
            let conv = numtheory::convolution_identity_check(n)?.holds_for(n)?;
            Ok((n, totient_sum == n, conv))
        })
        .collect::<Result<_, ArithError>>()?;
    let mut report = IdentityReport {
        checked: n_max,
        ..IdentityReport::default()
    };
    for (n, totient_ok, conv_ok) in rows {
        if !totient_ok {
            report.totient_sum_failures.push(n);
        }
        if !conv_ok {
            report.convolution_failures.push(n);
        }
    }
    Ok(report)
}

/// Checks `f(n) = Σ_{d|n} g(d)` inverts back to `g`.
pub fn verify_mobius_round_trip(g: &[i128]) -> bool {
    numtheory::mobius_inversion(&numtheory::divisor_sum_transform(g)) == g
}

#[cfg(test)]
mod tests {
    use super::*;

    struct OffByOne;

    impl CountFormulas for OffByOne {
        fn class_count(
            &self,
            alphabet: Alphabet,
            group: GroupKind,
            lyndon: bool,
            n: u64,
        ) -> Result<Count, CountError> {
            let c = counting::class_count(alphabet, group, lyndon, n)?;
            Ok(if group == GroupKind::DihedralPi && lyndon && n == 5 {
                c + 1
            } else {
                c
            })
        }
    }

    #[test]
    fn small_bounds_pass() {
        let bounds = EnumerationBounds {
            a2_max: 6,
            a3_max: 4,
        };
        let checks = verify_counts(&ClosedForms, bounds).unwrap();
        assert_eq!(checks.len(), (6 + 4) * 8);
        assert!(checks.iter().all(CountCheck::passed));
    }

    #[test]
    fn injected_fault_is_caught() {
        let bounds = EnumerationBounds {
            a2_max: 6,
            a3_max: 5,
        };
        let checks = verify_counts(&OffByOne, bounds).unwrap();
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
        assert_eq!(failed.len(), 2);
        assert!(failed
            .iter()
            .all(|c| c.n == 5 && c.lyndon && c.group == "dpi"));
    }

    #[test]
    fn identities_small() {
        let report = verify_identities(500).unwrap();
        assert!(report.passed());
        assert_eq!(report.checked, 500);
    }

    #[test]
    fn round_trip() {
        let g: Vec<i128> = (1..=50).map(|n| (n * n) % 17 - 8).collect();
        assert!(verify_mobius_round_trip(&g));
    }
}
