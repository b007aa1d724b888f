//! Closed-form counts of necklaces, bracelets, their value-permuted and
//! Lyndon (aperiodic) variants, and the region totals built from them.
//!
//! Every formula is evaluated from its divisor-sum form in exact `i128`
//! arithmetic. The single division by `n`, `2n` or `4n` happens last and
//! fails loudly if it is not exact.

use serde::Serialize;
use thiserror::Error;

use crate::numtheory::{divisors, euler_phi, mobius, ArithError};
use crate::words::{Alphabet, GroupKind};

/// Exact count.
pub type Count = i128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("{0} must be at least {1}")]
    OutOfRange(&'static str, u64),
    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error("{formula}: {numerator} is not divisible by {denominator}")]
    Inexact {
        formula: &'static str,
        numerator: Count,
        denominator: Count,
    },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

type Result<T> = std::result::Result<T, CountError>;

fn pow(base: u32, exp: u64, formula: &'static str) -> Result<Count> {
    let exp = u32::try_from(exp).map_err(|_| CountError::Overflow(formula))?;
    Count::from(base)
        .checked_pow(exp)
        .ok_or(CountError::Overflow(formula))
}

fn mul(a: Count, b: Count, formula: &'static str) -> Result<Count> {
    a.checked_mul(b).ok_or(CountError::Overflow(formula))
}

fn add(a: Count, b: Count, formula: &'static str) -> Result<Count> {
    a.checked_add(b).ok_or(CountError::Overflow(formula))
}

fn exact_div(numerator: Count, denominator: Count, formula: &'static str) -> Result<Count> {
    if numerator % denominator != 0 {
        return Err(CountError::Inexact {
            formula,
            numerator,
            denominator,
        });
    }
    Ok(numerator / denominator)
}

fn check_args(k: u32, n: u64) -> Result<()> {
    if k == 0 {
        return Err(CountError::OutOfRange("alphabet size", 1));
    }
    if n == 0 {
        return Err(CountError::OutOfRange("word length", 1));
    }
    Ok(())
}

fn phi(d: u64) -> Result<Count> {
    Ok(Count::from(euler_phi(d)?))
}

fn mu(d: u64) -> Result<Count> {
    Ok(Count::from(mobius(d)?))
}

/// `Σ_{d|n} φ(d) k^{n/d}`, the fixed-point total of all rotations.
fn rotation_fixed_points(k: u32, n: u64, formula: &'static str) -> Result<Count> {
    divisors(n)?.into_iter().try_fold(0, |acc, d| {
        add(
            acc,
            mul(phi(d)?, pow(k, n / d, formula)?, formula)?,
            formula,
        )
    })
}

/// `Σ_{d|n} μ(n/d) k^d`.
fn aperiodic_words(k: u32, n: u64, formula: &'static str) -> Result<Count> {
    divisors(n)?.into_iter().try_fold(0, |acc, d| {
        add(acc, mul(mu(n / d)?, pow(k, d, formula)?, formula)?, formula)
    })
}

/// `Σ_{d|n} μ(n/d) x(d)`.
fn mobius_transform(
    n: u64,
    formula: &'static str,
    x: impl Fn(u64) -> Result<Count>,
) -> Result<Count> {
    divisors(n)?.into_iter().try_fold(0, |acc, d| {
        add(acc, mul(mu(n / d)?, x(d)?, formula)?, formula)
    })
}

/// Necklaces: `N_k(n) = (1/n) Σ_{d|n} φ(d) k^{n/d}`.
pub fn necklaces(k: u32, n: u64) -> Result<Count> {
    const F: &str = "necklaces";
    check_args(k, n)?;
    exact_div(rotation_fixed_points(k, n, F)?, Count::from(n), F)
}

/// Reflection contribution to the bracelet count:
/// `(k+1)/2 · k^{n/2}` for even `n`, `k^{(n+1)/2}` for odd `n`.
pub fn bracelet_correction(k: u32, n: u64) -> Result<Count> {
    const F: &str = "bracelet correction";
    check_args(k, n)?;
    if n.is_multiple_of(2) {
        exact_div(mul(Count::from(k) + 1, pow(k, n / 2, F)?, F)?, 2, F)
    } else {
        pow(k, n.div_ceil(2), F)
    }
}

/// Bracelets: `B_k(n) = ½[N_k(n) + X_{B,k}(n)]`.
pub fn bracelets(k: u32, n: u64) -> Result<Count> {
    const F: &str = "bracelets";
    check_args(k, n)?;
    let n_c = Count::from(n);
    let numerator = add(
        rotation_fixed_points(k, n, F)?,
        mul(n_c, bracelet_correction(k, n)?, F)?,
        F,
    )?;
    exact_div(numerator, mul(2, n_c, F)?, F)
}

/// `2n · N^π(n)`: the fixed-point total of the `2n` elements of `C_n^Π`.
fn permuted_rotation_fixed_points(
    alphabet: Alphabet,
    n: u64,
    formula: &'static str,
) -> Result<Count> {
    let k = alphabet.size();
    divisors(n)?.into_iter().try_fold(0, |acc, d| {
        let power = pow(k, n / d, formula)?;
        let term = match (alphabet, d % 2 == 0) {
            (_, true) => mul(2, mul(phi(d)?, power, formula)?, formula)?,
            (Alphabet::A2, false) => mul(phi(d)?, power, formula)?,
            (Alphabet::A3, false) => mul(phi(d)?, add(1, power, formula)?, formula)?,
        };
        add(acc, term, formula)
    })
}

/// Permuted necklaces (`C_n^Π` classes).
///
/// `A2`: `(1/2n)[Σ_{d odd} φ(d) 2^{n/d} + 2 Σ_{d even} φ(d) 2^{n/d}]`;
/// `A3`: `(1/2n)[Σ_{d odd} φ(d)(1 + 3^{n/d}) + 2 Σ_{d even} φ(d) 3^{n/d}]`.
pub fn permuted_necklaces(alphabet: Alphabet, n: u64) -> Result<Count> {
    const F: &str = "permuted necklaces";
    check_args(1, n)?;
    exact_div(
        permuted_rotation_fixed_points(alphabet, n, F)?,
        mul(2, Count::from(n), F)?,
        F,
    )
}

/// Reflection contribution to the permuted bracelet count.
///
/// `A2`: `2^{n/2}` (even), `2^{(n-1)/2}` (odd);
/// `A3`: `(4/3)·3^{n/2}` (even), `2·3^{(n-1)/2}` (odd).
pub fn permuted_bracelet_correction(alphabet: Alphabet, n: u64) -> Result<Count> {
    const F: &str = "permuted bracelet correction";
    check_args(1, n)?;
    match (alphabet, n.is_multiple_of(2)) {
        (Alphabet::A2, true) => pow(2, n / 2, F),
        (Alphabet::A2, false) => pow(2, (n - 1) / 2, F),
        (Alphabet::A3, true) => exact_div(mul(4, pow(3, n / 2, F)?, F)?, 3, F),
        (Alphabet::A3, false) => mul(2, pow(3, (n - 1) / 2, F)?, F),
    }
}

/// Permuted bracelets: `B^π(n) = ½[N^π(n) + X^π_B(n)]`.
pub fn permuted_bracelets(alphabet: Alphabet, n: u64) -> Result<Count> {
    const F: &str = "permuted bracelets";
    check_args(1, n)?;
    let two_n = mul(2, Count::from(n), F)?;
    let numerator = add(
        permuted_rotation_fixed_points(alphabet, n, F)?,
        mul(two_n, permuted_bracelet_correction(alphabet, n)?, F)?,
        F,
    )?;
    exact_div(numerator, mul(2, two_n, F)?, F)
}

/// Lyndon necklaces: `NL_k(n) = (1/n) Σ_{d|n} μ(n/d) k^d`.
pub fn lyndon_necklaces(k: u32, n: u64) -> Result<Count> {
    const F: &str = "Lyndon necklaces";
    check_args(k, n)?;
    exact_div(aperiodic_words(k, n, F)?, Count::from(n), F)
}

/// Lyndon bracelets:
/// `BL_k(n) = ½[NL_k(n) + Σ_{d|n} μ(n/d) X_{B,k}(d)]`.
pub fn lyndon_bracelets(k: u32, n: u64) -> Result<Count> {
    const F: &str = "Lyndon bracelets";
    check_args(k, n)?;
    let n_c = Count::from(n);
    let reflections = mobius_transform(n, F, |d| bracelet_correction(k, d))?;
    let numerator = add(aperiodic_words(k, n, F)?, mul(n_c, reflections, F)?, F)?;
    exact_div(numerator, mul(2, n_c, F)?, F)
}

/// The correction term of the three-letter permuted Lyndon necklaces:
/// `1` at `n = 1`, `-1` at powers of two `n = 2^α` (`α ≥ 1`), `0` otherwise.
pub fn lyndon_permutation_correction(n: u64) -> Count {
    match n {
        1 => 1,
        _ if n.is_power_of_two() => -1,
        _ => 0,
    }
}

/// `2n · NL^π(n)`.
fn permuted_aperiodic_words(alphabet: Alphabet, n: u64, formula: &'static str) -> Result<Count> {
    let k = alphabet.size();
    let odd_sum = divisors(n)?
        .into_iter()
        .filter(|d| d % 2 == 1)
        .try_fold(0, |acc, d| {
            add(acc, mul(mu(d)?, pow(k, n / d, formula)?, formula)?, formula)
        })?;
    match alphabet {
        Alphabet::A2 => Ok(odd_sum),
        Alphabet::A3 => add(odd_sum, lyndon_permutation_correction(n), formula),
    }
}

/// Permuted Lyndon necklaces.
///
/// `A2`: `(1/2n) Σ_{d|n, d odd} μ(d) 2^{n/d}`;
/// `A3`: `(1/2n)[Σ_{d|n, d odd} μ(d) 3^{n/d} + X_NL(n)]`.
pub fn permuted_lyndon_necklaces(alphabet: Alphabet, n: u64) -> Result<Count> {
    const F: &str = "permuted Lyndon necklaces";
    check_args(1, n)?;
    exact_div(
        permuted_aperiodic_words(alphabet, n, F)?,
        mul(2, Count::from(n), F)?,
        F,
    )
}

/// Permuted Lyndon bracelets, the number of region classes of length `n`:
///
/// `BL^π(n) = (1/4n)[2n·NL^π(n) + 2n Σ_{d|n} μ(n/d) X^π_B(d)]`.
pub fn permuted_lyndon_bracelets(alphabet: Alphabet, n: u64) -> Result<Count> {
    const F: &str = "permuted Lyndon bracelets";
    check_args(1, n)?;
    let two_n = mul(2, Count::from(n), F)?;
    let reflections = mobius_transform(n, F, |d| permuted_bracelet_correction(alphabet, d))?;
    let numerator = add(
        permuted_aperiodic_words(alphabet, n, F)?,
        mul(two_n, reflections, F)?,
        F,
    )?;
    exact_div(numerator, mul(2, two_n, F)?, F)
}

/// Upper bound on the number of qualitatively distinct regions over all
/// word lengths up to `n`: `1 + Σ_{m=2}^{n} BL^π(m)`.
pub fn total_regions(alphabet: Alphabet, n: u64) -> Result<Count> {
    const F: &str = "total regions";
    if n < 2 {
        return Err(CountError::OutOfRange("word length for totals", 2));
    }
    (2..=n).try_fold(1, |acc, m| {
        add(acc, permuted_lyndon_bracelets(alphabet, m)?, F)
    })
}

/// The closed-form class count for `group` acting on words of length `n`,
/// restricted to aperiodic words when `lyndon`.
pub fn class_count(alphabet: Alphabet, group: GroupKind, lyndon: bool, n: u64) -> Result<Count> {
    let k = alphabet.size();
    match (group, lyndon) {
        (GroupKind::Cyclic, false) => necklaces(k, n),
        (GroupKind::Dihedral, false) => bracelets(k, n),
        (GroupKind::CyclicPi, false) => permuted_necklaces(alphabet, n),
        (GroupKind::DihedralPi, false) => permuted_bracelets(alphabet, n),
        (GroupKind::Cyclic, true) => lyndon_necklaces(k, n),
        (GroupKind::Dihedral, true) => lyndon_bracelets(k, n),
        (GroupKind::CyclicPi, true) => permuted_lyndon_necklaces(alphabet, n),
        (GroupKind::DihedralPi, true) => permuted_lyndon_bracelets(alphabet, n),
    }
}

/// All counts for one alphabet at one length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlphabetCounts {
    pub necklaces: Count,
    pub bracelets: Count,
    pub permuted_necklaces: Count,
    pub permuted_bracelets: Count,
    pub lyndon_necklaces: Count,
    pub lyndon_bracelets: Count,
    pub permuted_lyndon_necklaces: Count,
    pub permuted_lyndon_bracelets: Count,
    /// `None` for `n < 2`.
    pub total: Option<Count>,
}

impl AlphabetCounts {
    pub fn compute(alphabet: Alphabet, n: u64) -> Result<Self> {
        let k = alphabet.size();
        Ok(AlphabetCounts {
            necklaces: necklaces(k, n)?,
            bracelets: bracelets(k, n)?,
            permuted_necklaces: permuted_necklaces(alphabet, n)?,
            permuted_bracelets: permuted_bracelets(alphabet, n)?,
            lyndon_necklaces: lyndon_necklaces(k, n)?,
            lyndon_bracelets: lyndon_bracelets(k, n)?,
            permuted_lyndon_necklaces: permuted_lyndon_necklaces(alphabet, n)?,
            permuted_lyndon_bracelets: permuted_lyndon_bracelets(alphabet, n)?,
            total: if n >= 2 {
                Some(total_regions(alphabet, n)?)
            } else {
                None
            },
        })
    }

    /// The eight class counts in the order necklaces, bracelets, permuted
    /// necklaces, permuted bracelets, then the four Lyndon variants.
    pub fn classes(&self) -> [Count; 8] {
        [
            self.necklaces,
            self.bracelets,
            self.permuted_necklaces,
            self.permuted_bracelets,
            self.lyndon_necklaces,
            self.lyndon_bracelets,
            self.permuted_lyndon_necklaces,
            self.permuted_lyndon_bracelets,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub n: u64,
    pub a2: AlphabetCounts,
    pub a3: AlphabetCounts,
}

impl CountTable {
    pub fn for_alphabet(&self, alphabet: Alphabet) -> &AlphabetCounts {
        match alphabet {
            Alphabet::A2 => &self.a2,
            Alphabet::A3 => &self.a3,
        }
    }
}

pub fn count_table(n: u64) -> Result<CountTable> {
    Ok(CountTable {
        n,
        a2: AlphabetCounts::compute(Alphabet::A2, n)?,
        a3: AlphabetCounts::compute(Alphabet::A3, n)?,
    })
}
