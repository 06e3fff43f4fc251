use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::RegularGraph;
use crate::scalar::Real;

/// State space of a walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    Vertices,
    DirectedEdges,
}

impl Space {
    pub fn size(self, graph: &RegularGraph) -> usize {
        match self {
            Space::Vertices => graph.n(),
            Space::DirectedEdges => graph.num_directed_edges(),
        }
    }
}

/// A probability distribution over vertices or directed edges.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector<T> {
    space: Space,
    values: Vec<T>,
}

impl<T: Real> ProbabilityVector<T> {
    /// Checks nonnegativity and unit mass (to `T::MASS_TOLERANCE`).
    pub fn new(space: Space, values: Vec<T>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !(*v >= T::zero())) {
            return Err(Error::InvalidDistribution(format!("entry {i} is {}", values[i])));
        }
        let mass: T = values.iter().copied().sum();
        if (mass.to_f64_lossy() - 1.0).abs() > T::MASS_TOLERANCE {
            return Err(Error::InvalidDistribution(format!("total mass {mass}")));
        }
        Ok(ProbabilityVector { space, values })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_raw(space: Space, values: Vec<T>) -> Self {
        ProbabilityVector { space, values }
    }

    pub fn point_mass(space: Space, len: usize, state: usize) -> Result<Self> {
        if state >= len {
            return Err(Error::VertexOutOfRange(state, len));
        }
        let mut values = vec![T::zero(); len];
        values[state] = T::one();
        Ok(ProbabilityVector { space, values })
    }

    pub fn uniform(space: Space, len: usize) -> Self {
        let w = T::one() / T::from_count(len);
        ProbabilityVector { space, values: vec![w; len] }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mass(&self) -> T {
        self.values.iter().copied().sum()
    }

    pub(crate) fn check_space(&self, space: Space, len: usize) -> Result<()> {
        if self.space != space || self.values.len() != len {
            return Err(Error::SpaceMismatch { expected: len, found: self.values.len() });
        }
        Ok(())
    }
}

/// Uniform distribution on the space, or on one parity class of a bipartite
/// graph: vertices of side `parity`, or directed edges whose tail lies on
/// side `parity`.
pub fn stationary<T: Real>(space: Space, graph: &RegularGraph, parity: Option<u8>) -> Result<ProbabilityVector<T>> {
    let len = space.size(graph);
    let Some(parity) = parity else {
        return Ok(ProbabilityVector::uniform(space, len));
    };
    let sides = graph.bipartition().ok_or(Error::ParityOnNonBipartite)?;
    let d = graph.d();
    let side_of = |i: usize| match space {
        Space::Vertices => sides[i],
        Space::DirectedEdges => sides[i / d],
    };
    let count = (0..len).filter(|&i| side_of(i) == parity % 2).count();
    let w = T::one() / T::from_count(count);
    let values = (0..len).map(|i| if side_of(i) == parity % 2 { w } else { T::zero() }).collect();
    Ok(ProbabilityVector::from_raw(space, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::named;

    #[test]
    fn uniform_references() {
        let k4 = named::complete(4).unwrap();
        let v = stationary::<f64>(Space::Vertices, &k4, None).unwrap();
        assert_eq!(v.values(), &[0.25; 4]);
        let e = stationary::<f64>(Space::DirectedEdges, &k4, None).unwrap();
        assert_eq!(e.len(), 12);
        assert!(e.values().iter().all(|&x| x == 1.0 / 12.0));
        assert_eq!(stationary::<f64>(Space::Vertices, &k4, Some(0)), Err(Error::ParityOnNonBipartite));
    }

    #[test]
    fn parity_reference_on_k33() {
        let k33 = named::complete_bipartite(3).unwrap();
        let v = stationary::<f64>(Space::Vertices, &k33, Some(0)).unwrap();
        assert_eq!(v.values(), &[1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0, 0.0, 0.0]);
        let e = stationary::<f64>(Space::DirectedEdges, &k33, Some(1)).unwrap();
        assert!((e.mass() - 1.0).abs() < 1e-15);
        assert_eq!(e.values().iter().filter(|&&x| x > 0.0).count(), 9);
    }

    #[test]
    fn validation() {
        assert!(ProbabilityVector::<f64>::new(Space::Vertices, vec![0.5, 0.6]).is_err());
        assert!(ProbabilityVector::<f64>::new(Space::Vertices, vec![1.5, -0.5]).is_err());
        assert!(ProbabilityVector::<f64>::new(Space::Vertices, vec![0.5, 0.5]).is_ok());
        assert!(ProbabilityVector::<f32>::new(Space::Vertices, vec![0.1; 10]).is_ok());
        assert!(ProbabilityVector::<f64>::point_mass(Space::Vertices, 3, 3).is_err());
    }
}
