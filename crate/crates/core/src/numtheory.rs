//! Exact arithmetic functions used by the counting formulas.
//!
//! Inputs are word lengths, so everything here factors by trial division.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("arithmetic function is undefined at n = 0")]
    Zero,
}

/// Prime factorization as `(prime, exponent)` pairs in ascending order.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>, ArithError> {
    if n == 0 {
        return Err(ArithError::Zero);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(factors)
}

/// The Möbius function: `(-1)^k` for a product of `k` distinct primes, `0`
/// when a squared prime divides `n`.
pub fn mobius(n: u64) -> Result<i8, ArithError> {
    let factors = factorize(n)?;
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64, ArithError> {
    let factors = factorize(n)?;
    Ok(factors.iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>, ArithError> {
    if n == 0 {
        return Err(ArithError::Zero);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// The three divisor sums of `μ(n/d)·(n/d)·φ(d)`: over all divisors, over
/// even divisors and over odd divisors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvolutionSums {
    pub all: i64,
    pub even: i64,
    pub odd: i64,
}

impl ConvolutionSums {
    /// Whether the sums take the values forced by `μ(n)`: `all = μ(n)` always,
    /// and for even `n` also `even = -μ(n)` and `odd = 2μ(n)`.
    pub fn holds_for(&self, n: u64) -> Result<bool, ArithError> {
        let mu = i64::from(mobius(n)?);
        let mut ok = self.all == mu;
        if n.is_multiple_of(2) {
            ok &= self.even == -mu && self.odd == 2 * mu;
        }
        Ok(ok)
    }
}

pub fn convolution_identity_check(n: u64) -> Result<ConvolutionSums, ArithError> {
    let mut sums = ConvolutionSums {
        all: 0,
        even: 0,
        odd: 0,
    };
    for d in divisors(n)? {
        let q = n / d;
        let term = i64::from(mobius(q)?) * q as i64 * euler_phi(d)? as i64;
        sums.all += term;
        if d % 2 == 0 {
            sums.even += term;
        } else {
            sums.odd += term;
        }
    }
    Ok(sums)
}

/// `F(n) = Σ_{d|n} g(d)` for `n = 1..=g.len()`; `g[0]` holds `g(1)`.
pub fn divisor_sum_transform(g: &[i128]) -> Vec<i128> {
    let mut f = vec![0i128; g.len()];
    for d in 1..=g.len() {
        for multiple in (d..=g.len()).step_by(d) {
            f[multiple - 1] += g[d - 1];
        }
    }
    f
}

/// Inverse of [`divisor_sum_transform`]: `g(n) = Σ_{d|n} μ(n/d) F(d)`.
pub fn mobius_inversion(f: &[i128]) -> Vec<i128> {
    (1..=f.len() as u64)
        .map(|n| {
            divisors(n)
                .expect("n >= 1")
                .into_iter()
                .map(|d| i128::from(mobius(n / d).expect("n >= 1")) * f[d as usize - 1])
                .sum()
        })
        .collect()
}
