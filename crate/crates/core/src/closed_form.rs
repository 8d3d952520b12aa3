//! Closed forms for `G_n = P_2 ⊠ C_n` and for `G_n^r`, the same graph with
//! `r` vertical edges removed. All values are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

fn check_n(n: usize) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be >= 3, got {n}")));
    }
    Ok(BigInt::from(n))
}

fn check_nr(n: usize, r: usize) -> Result<BigInt> {
    let big = check_n(n)?;
    if r > n {
        return Err(Error::InvalidParameter(format!(
            "r must lie in 0..={n}, got {r}"
        )));
    }
    Ok(big)
}

fn pow(base: u32, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// `Kf(C_n) = (n³ - n) / 12`.
pub fn kf_cycle(n: usize) -> Result<BigRational> {
    let n = check_n(n)?;
    Ok(BigRational::new(&n * &n * &n - &n, 12.into()))
}

/// `Kf(G_n) = (n³ + 4n² - n) / 12`.
pub fn kf_gn(n: usize) -> Result<BigRational> {
    kf_grn(n, 0)
}

/// `τ(G_n) = n · 2^(2n-2) · 3^n`.
pub fn tau_gn(n: usize) -> Result<BigInt> {
    tau_grn(n, 0)
}

/// `Kf*(G_n) = (25n³ + 100n² - 25n) / 12`.
pub fn kf_star_gn(n: usize) -> Result<BigRational> {
    let n = check_n(n)?;
    let n2 = &n * &n;
    let num = BigInt::from(25) * &n2 * &n + BigInt::from(100) * &n2 - BigInt::from(25) * &n;
    Ok(BigRational::new(num, 12.into()))
}

/// Wiener index of `G_n`: `(n³ + n)/2` for odd `n`, `(n³ + 2n)/2` for even.
pub fn wiener_gn(n: usize) -> Result<BigInt> {
    let big = check_n(n)?;
    let linear = if n % 2 == 0 { &big * 2 } else { big.clone() };
    Ok((&big * &big * &big + linear) / 2)
}

/// Every vertex of `G_n` has degree 5, so `Gut(G_n) = 25 · W(G_n)`.
pub fn gutman_gn(n: usize) -> Result<BigInt> {
    Ok(wiener_gn(n)? * 25)
}

/// `Kf(G_n^r) = (n³ + 4n² + (2r - 1)n) / 12`.
pub fn kf_grn(n: usize, r: usize) -> Result<BigRational> {
    let n = check_nr(n, r)?;
    let linear = BigInt::from(2 * r) - 1;
    let num = &n * &n * &n + BigInt::from(4) * &n * &n + linear * &n;
    Ok(BigRational::new(num, 12.into()))
}

/// `τ(G_n^r) = n · 2^(2n+r-2) · 3^(n-r)`.
pub fn tau_grn(n: usize, r: usize) -> Result<BigInt> {
    let big = check_nr(n, r)?;
    Ok(big * pow(2, 2 * n + r - 2) * pow(3, n - r))
}

/// `W(G_n^r) = W(G_n) + r`: each removed vertical edge turns one distance-1
/// pair into a distance-2 pair.
pub fn wiener_grn(n: usize, r: usize) -> Result<BigInt> {
    check_nr(n, r)?;
    Ok(wiener_gn(n)? + r)
}

/// Every closed-form value available for `(n, r)`.
///
/// Kf* and the Gutman index only have closed forms at `r = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFormulaResult {
    pub n: usize,
    pub r: usize,
    pub kf: BigRational,
    pub kf_star: Option<BigRational>,
    pub tau: BigInt,
    pub wiener: BigInt,
    pub gutman: Option<BigInt>,
    pub ratio_kf_wiener: BigRational,
}

pub fn family_formulas(n: usize, r: usize) -> Result<FamilyFormulaResult> {
    let kf = kf_grn(n, r)?;
    let wiener = wiener_grn(n, r)?;
    let (kf_star, gutman) = if r == 0 {
        (Some(kf_star_gn(n)?), Some(gutman_gn(n)?))
    } else {
        (None, None)
    };
    Ok(FamilyFormulaResult {
        n,
        r,
        ratio_kf_wiener: &kf / BigRational::from(wiener.clone()),
        kf,
        kf_star,
        tau: tau_grn(n, r)?,
        wiener,
        gutman,
    })
}

/// `Kf/W` for `G_n^r` and its distance from the limit `1/6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioReport {
    pub n: usize,
    pub r: usize,
    pub ratio: BigRational,
    pub deviation: BigRational,
}

pub fn ratio_report(n: usize, r: usize) -> Result<RatioReport> {
    let ratio = kf_grn(n, r)? / BigRational::from(wiener_grn(n, r)?);
    let deviation = (&ratio - BigRational::new(1.into(), 6.into())).abs();
    debug_assert!(!deviation.is_zero());
    Ok(RatioReport {
        n,
        r,
        ratio,
        deviation,
    })
}
