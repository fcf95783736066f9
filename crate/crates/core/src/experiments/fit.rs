use serde::Serialize;

use super::ThresholdEstimate;
use crate::density::{eta, lower_bound_exponent, Rational};
use crate::error::{Error, Result};

/// Reference exponents for `p_c` against `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentBrackets {
    pub t: usize,
    /// `−1/η(t)`.
    pub upper: Rational,
    /// `−t/(2t − 3)`.
    pub lower: Rational,
    /// The exact exponent where upper and lower bounds are known to match
    /// (`t = 4`: `−10/13`).
    pub exact: Option<Rational>,
}

impl ExponentBrackets {
    pub fn new(t: usize) -> Result<Self> {
        Ok(ExponentBrackets {
            t,
            upper: -eta(t)?.recip(),
            lower: -lower_bound_exponent(t)?,
            exact: (t == 4).then(|| -eta(4).expect("t = 4").recip()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExponentFit {
    /// `(n, p_hat)` pairs.
    pub points: Vec<(f64, f64)>,
    pub slope: f64,
    pub intercept: f64,
    /// Root mean square of the residuals in log space.
    pub residual: f64,
    pub brackets: Option<ExponentBrackets>,
}

/// Least squares `ln y = slope · ln x + intercept` over at least three
/// distinct positive `x` values.
pub fn fit_power_law(points: &[(f64, f64)]) -> Result<ExponentFit> {
    if let Some(&(x, y)) = points.iter().find(|(x, y)| !(*x > 0.0 && *y > 0.0)) {
        return Err(Error::InvalidParameter(format!("point ({x}, {y}) is not positive")));
    }
    let mut xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    if xs.len() < 3 {
        return Err(Error::TooFewPoints(xs.len()));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = logs.iter().map(|&(x, y)| (y - slope * x - intercept).powi(2)).sum();
    Ok(ExponentFit {
        points: points.to_vec(),
        slope,
        intercept,
        residual: (sse / k).sqrt(),
        brackets: None,
    })
}

/// Fits `p_hat` against `n`. When all estimates share one `t ≥ 4` the fit
/// also carries the reference exponents for that `t`.
pub fn fit_exponent(estimates: &[ThresholdEstimate]) -> Result<ExponentFit> {
    let points: Vec<_> = estimates.iter().map(|e| (e.n as f64, e.p_hat)).collect();
    let mut fit = fit_power_law(&points)?;
    let t = estimates[0].t;
    if estimates.iter().all(|e| e.t == t) && t >= 4 {
        fit.brackets = Some(ExponentBrackets::new(t)?);
    }
    Ok(fit)
}
