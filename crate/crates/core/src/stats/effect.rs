//! Cohen's d, Welch's t-test and the Student-t distribution.

use crate::error::{Error, Result};

use super::SampleSet;

/// Relative tolerance of the incomplete beta continued fraction.
const BETA_CF_EPS: f64 = 1e-15;
const BETA_CF_MAX_ITER: usize = 10_000;

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Sample variance (n - 1 denominator).
pub fn variance(values: &[f64]) -> f64 {
    let m = mean(values);
    values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (values.len() as f64 - 1.0)
}

fn require_two(x: &SampleSet, y: &SampleSet) -> Result<()> {
    let got = x.len().min(y.len());
    if got < 2 {
        return Err(Error::InsufficientSamples { needed: 2, got });
    }
    Ok(())
}

/// `(mean(x) - mean(y)) / s_pooled` with the pooled sample standard deviation.
///
/// Magnitudes around 0.2, 0.5 and 0.8 are conventionally read as small,
/// medium and large; at 0.8 one group's mean sits near the other's 79th
/// percentile.
pub fn cohens_d(x: &SampleSet, y: &SampleSet) -> Result<f64> {
    require_two(x, y)?;
    let (nx, ny) = (x.len() as f64, y.len() as f64);
    let pooled = ((nx - 1.0) * variance(&x.values) + (ny - 1.0) * variance(&y.values)) / (nx + ny - 2.0);
    if pooled <= 0.0 {
        return Err(Error::DegenerateSamples);
    }
    Ok((mean(&x.values) - mean(&y.values)) / pooled.sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WelchT {
    pub t: f64,
    pub df: f64,
    /// Two-sided.
    pub p: f64,
}

/// Unequal-variance t-test with Welch-Satterthwaite degrees of freedom.
pub fn welch_t(x: &SampleSet, y: &SampleSet) -> Result<WelchT> {
    require_two(x, y)?;
    let (nx, ny) = (x.len() as f64, y.len() as f64);
    let qx = variance(&x.values) / nx;
    let qy = variance(&y.values) / ny;
    let se2 = qx + qy;
    if se2 <= 0.0 {
        return Err(Error::DegenerateSamples);
    }
    let t = (mean(&x.values) - mean(&y.values)) / se2.sqrt();
    let df = se2 * se2 / (qx * qx / (nx - 1.0) + qy * qy / (ny - 1.0));
    Ok(WelchT {
        t,
        df,
        p: two_sided_p(t, df),
    })
}

/// `P(|T| >= |t|)` for Student's t with `df` degrees of freedom.
pub fn two_sided_p(t: f64, df: f64) -> f64 {
    if t.is_nan() {
        return f64::NAN;
    }
    let x = df / (df + t * t);
    regularized_incomplete_beta(x, df / 2.0, 0.5).clamp(0.0, 1.0)
}

/// Student-t cumulative distribution function.
pub fn student_t_cdf(t: f64, df: f64) -> f64 {
    let tail = 0.5 * two_sided_p(t, df);
    if t > 0.0 {
        1.0 - tail
    } else {
        tail
    }
}

/// Natural log of the gamma function for `x > 0` (Lanczos, g = 7).
pub fn ln_gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// `I_x(a, b)` via the continued fraction (modified Lentz).
pub fn regularized_incomplete_beta(x: f64, a: f64, b: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    let front = ln_front.exp();
    // The fraction converges fast for x below the mean; use symmetry otherwise.
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_continued_fraction(x, a, b) / a
    } else {
        1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b
    }
}

fn beta_continued_fraction(x: f64, a: f64, b: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=BETA_CF_MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < BETA_CF_EPS {
            break;
        }
    }
    h
}
