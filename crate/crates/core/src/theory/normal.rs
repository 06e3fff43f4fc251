//! Standard normal distribution function.
//!
//! Upper tail from the rational approximation 26.2.17 of Abramowitz and
//! Stegun, absolute error below 7.5e-8 on the whole line.

const P: f64 = 0.231_641_9;
const B: [f64; 5] = [0.319_381_530, -0.356_563_782, 1.781_477_937, -1.821_255_978, 1.330_274_429];

/// `P(Z > x)` for a standard normal `Z`.
pub fn normal_sf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        return 1.0 - normal_sf(-x);
    }
    let t = 1.0 / (1.0 + P * x);
    let poly = t * (B[0] + t * (B[1] + t * (B[2] + t * (B[3] + t * B[4]))));
    let density = (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
    density * poly
}

/// `P(Z <= x)`.
pub fn normal_cdf(x: f64) -> f64 {
    1.0 - normal_sf(x)
}
