use super::vector::ProbabilityVector;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::theory::PExponent;

fn check_support<T: Real>(dist: &[T], reference: &[T]) -> Result<()> {
    if dist.len() != reference.len() {
        return Err(Error::SpaceMismatch { expected: reference.len(), found: dist.len() });
    }
    match dist.iter().zip(reference).position(|(&x, &r)| r == T::zero() && x > T::zero()) {
        Some(state) => Err(Error::SupportViolation { state, mass: dist[state].to_f64_lossy() }),
        None => Ok(()),
    }
}

/// `||dist/reference - 1||` in `L^p(reference)`, on slices.
pub(crate) fn lp_distance<T: Real>(dist: &[T], reference: &[T], p: PExponent) -> T {
    let ratios = dist.iter().zip(reference).filter(|(_, &r)| r > T::zero());
    match p {
        PExponent::Infinite => ratios.map(|(&x, &r)| (x / r - T::one()).abs()).fold(T::zero(), T::max),
        PExponent::Finite(p) if p == 1.0 => ratios.map(|(&x, &r)| (x - r).abs()).sum(),
        PExponent::Finite(p) if p == 2.0 => {
            ratios.map(|(&x, &r)| (x - r) * (x - r) / r).sum::<T>().sqrt()
        }
        PExponent::Finite(p) => {
            let pt = T::lit(p);
            let sum: T = ratios.map(|(&x, &r)| r * (x / r - T::one()).abs().powf(pt)).sum();
            sum.powf(T::one() / pt)
        }
    }
}

/// Total-variation distance `(1/2) sum |dist - reference|`, on slices.
pub(crate) fn tv_distance<T: Real>(dist: &[T], reference: &[T]) -> T {
    T::lit(0.5) * dist.iter().zip(reference).map(|(&x, &r)| (x - r).abs()).sum::<T>()
}

/// `||dist/reference - 1||_{L^p(reference)}` for `p` in `[1, inf]`; `p = 1`
/// gives twice the total-variation distance.
pub fn distance_to_stationarity<T: Real>(
    dist: &ProbabilityVector<T>,
    reference: &ProbabilityVector<T>,
    p: PExponent,
) -> Result<T> {
    if let PExponent::Finite(x) = p {
        if !(x >= 1.0) {
            return Err(Error::POutOfRange(x));
        }
    }
    if dist.space() != reference.space() {
        return Err(Error::SpaceMismatch { expected: reference.len(), found: dist.len() });
    }
    check_support(dist.values(), reference.values())?;
    Ok(lp_distance(dist.values(), reference.values(), p))
}

pub fn total_variation<T: Real>(dist: &ProbabilityVector<T>, reference: &ProbabilityVector<T>) -> Result<T> {
    check_support(dist.values(), reference.values())?;
    Ok(tv_distance(dist.values(), reference.values()))
}

/// The L^2 distance through the expansion `sum dist^2 / reference - 1`
/// (`n sum dist^2 - 1` for a uniform reference).
pub fn l2_distance_by_expansion<T: Real>(dist: &ProbabilityVector<T>, reference: &ProbabilityVector<T>) -> Result<T> {
    check_support(dist.values(), reference.values())?;
    let sum: T = dist
        .values()
        .iter()
        .zip(reference.values())
        .filter(|(_, &r)| r > T::zero())
        .map(|(&x, &r)| x * x / r)
        .sum();
    Ok((sum - T::one()).max(T::zero()).sqrt())
}
