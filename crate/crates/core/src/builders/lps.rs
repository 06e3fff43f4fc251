//! Lubotzky-Phillips-Sarnak Cayley graphs over `PSL(2, F_q)` / `PGL(2, F_q)`.
//!
//! Generators come from the `p + 1` integer quaternions
//! `a0 + a1 i + a2 j + a3 k` of norm `p` with `a0` odd positive and
//! `a1, a2, a3` even, sent to
//!
//! ```text
//! [  a0 + ι a1   a2 + ι a3 ]
//! [ -a2 + ι a3   a0 - ι a1 ]      (mod q, ι^2 = -1)
//! ```
//!
//! Group elements are 2x2 matrices modulo scalars, canonicalized by scaling
//! the first nonzero entry (row-major) to 1. Vertices are the elements
//! reachable from the identity, numbered in sorted order of their canonical
//! entries. Edges join `x` and `x s`.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{LpsGroup, Provenance, RegularGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpsParams {
    /// Degree is `p + 1`.
    pub p: u64,
    /// Field size.
    pub q: u64,
}

type Mat = [u64; 4];

fn is_prime(m: u64) -> bool {
    m >= 2 && (2..).take_while(|k| k * k <= m).all(|k| m % k != 0)
}

fn is_square_mod(a: u64, q: u64) -> bool {
    (1..q).any(|x| x * x % q == a % q)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn mul(a: &Mat, b: &Mat, q: u64) -> Mat {
    [
        (a[0] * b[0] + a[1] * b[2]) % q,
        (a[0] * b[1] + a[1] * b[3]) % q,
        (a[2] * b[0] + a[3] * b[2]) % q,
        (a[2] * b[1] + a[3] * b[3]) % q,
    ]
}

fn canonical(m: Mat, q: u64) -> Mat {
    let lead = *m.iter().find(|&&x| x != 0).expect("invertible matrix is nonzero");
    let inv = pow_mod(lead, q - 2, q);
    m.map(|x| x * inv % q)
}

fn key(m: &Mat, q: u64) -> u64 {
    ((m[0] * q + m[1]) * q + m[2]) * q + m[3]
}

impl LpsParams {
    /// Checks primality, congruences and `q > 2 sqrt(p)`; returns the group.
    pub fn validate(&self) -> Result<LpsGroup> {
        let LpsParams { p, q } = *self;
        let bad = |m: String| Err(Error::BadParams(m));
        if !is_prime(p) || p % 4 != 1 {
            return bad(format!("p = {p} must be a prime congruent to 1 mod 4"));
        }
        if !is_prime(q) || q % 4 != 1 {
            return bad(format!("q = {q} must be a prime congruent to 1 mod 4"));
        }
        if p == q {
            return bad("p and q must differ".into());
        }
        if q * q <= 4 * p {
            return bad(format!("q = {q} must exceed 2 sqrt(p)"));
        }
        Ok(if is_square_mod(p, q) { LpsGroup::Psl } else { LpsGroup::Pgl })
    }

    pub fn degree(&self) -> usize {
        (self.p + 1) as usize
    }

    /// Expected vertex count for the validated group.
    pub fn order(&self) -> Result<usize> {
        let q = self.q as usize;
        Ok(match self.validate()? {
            LpsGroup::Psl => q * (q * q - 1) / 2,
            LpsGroup::Pgl => q * (q * q - 1),
        })
    }
}

/// Integer quaternions of norm `p` with `a0` odd positive and the rest even.
fn quaternions(p: u64) -> Vec<[i64; 4]> {
    let p = p as i64;
    let r = (1..).take_while(|k| k * k <= p).last().unwrap_or(0);
    let evens: Vec<i64> = (-r..=r).filter(|a| a % 2 == 0).collect();
    let mut out = Vec::new();
    for a0 in (1..=r).step_by(2) {
        for &a1 in &evens {
            for &a2 in &evens {
                for &a3 in &evens {
                    if a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == p {
                        out.push([a0, a1, a2, a3]);
                    }
                }
            }
        }
    }
    out
}

/// Canonical generator matrices; closed under inversion, `p + 1` of them.
pub fn lps_generators(params: &LpsParams) -> Result<Vec<[u64; 4]>> {
    params.validate()?;
    let (p, q) = (params.p, params.q);
    let iota = (1..q).find(|x| x * x % q == q - 1).expect("q = 1 mod 4 has sqrt(-1)");
    let qi = q as i64;
    let red = |x: i64| x.rem_euclid(qi) as u64;
    let gens: Vec<Mat> = quaternions(p)
        .into_iter()
        .map(|[a0, a1, a2, a3]| {
            let i = iota;
            canonical(
                [
                    (red(a0) + i * red(a1)) % q,
                    (red(a2) + i * red(a3)) % q,
                    (red(-a2) + i * red(a3)) % q,
                    (red(a0) + i * red(-a1)) % q,
                ],
                q,
            )
        })
        .collect();
    if gens.len() != params.degree() {
        return Err(Error::BadParams(format!("found {} quaternions of norm {p}, expected {}", gens.len(), p + 1)));
    }
    Ok(gens)
}

pub fn build_lps(params: &LpsParams) -> Result<RegularGraph> {
    let group = params.validate()?;
    let expected = params.order()?;
    let q = params.q;
    let gens = lps_generators(params)?;
    let identity = canonical([1, 0, 0, 1], q);
    let mut seen: HashMap<u64, Mat> = HashMap::from([(key(&identity, q), identity)]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = canonical(mul(&x, s, q), q);
            if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(key(&y, q)) {
                slot.insert(y);
                queue.push_back(y);
            }
            if seen.len() > expected {
                return Err(Error::BadParams(format!("generated group exceeds expected order {expected}")));
            }
        }
    }
    if seen.len() != expected {
        return Err(Error::BadParams(format!("generators span {} elements, expected {expected}", seen.len())));
    }
    let mut elements: Vec<(u64, Mat)> = seen.into_iter().collect();
    elements.sort_unstable_by_key(|&(k, _)| k);
    let index: HashMap<u64, usize> = elements.iter().enumerate().map(|(i, &(k, _))| (k, i)).collect();
    let mut lists = Vec::with_capacity(elements.len());
    for (u, (_, x)) in elements.iter().enumerate() {
        let mut list: Vec<usize> = gens.iter().map(|s| index[&key(&canonical(mul(x, s, q), q), q)]).collect();
        if list.contains(&u) {
            return Err(Error::NonSimple(format!("loop at vertex {u}")));
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NonSimple(format!("parallel edge at vertex {u}")));
        }
        lists.push(list);
    }
    let provenance = Provenance::Lps { p: params.p, q, group, bipartite: group == LpsGroup::Pgl };
    let graph = RegularGraph::from_adjacency(lists, provenance)?;
    if graph.is_bipartite() != (group == LpsGroup::Pgl) {
        return Err(Error::InvariantViolation(format!(
            "LPS({}, {q}) bipartiteness {} does not match group {group:?}",
            params.p,
            graph.is_bipartite()
        )));
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inverse_in_set(s: &Mat, gens: &[Mat], q: u64) -> bool {
        let identity = canonical([1, 0, 0, 1], q);
        gens.iter().any(|t| canonical(mul(s, t, q), q) == identity)
    }

    #[test]
    fn parameter_validation() {
        assert_eq!(LpsParams { p: 5, q: 29 }.validate().unwrap(), LpsGroup::Psl);
        assert_eq!(LpsParams { p: 5, q: 13 }.validate().unwrap(), LpsGroup::Pgl);
        assert_eq!(LpsParams { p: 5, q: 17 }.validate().unwrap(), LpsGroup::Pgl);
        assert!(LpsParams { p: 7, q: 29 }.validate().is_err());
        assert!(LpsParams { p: 5, q: 5 }.validate().is_err());
        assert!(LpsParams { p: 13, q: 5 }.validate().is_err());
        assert!(LpsParams { p: 5, q: 23 }.validate().is_err());
        assert_eq!(LpsParams { p: 5, q: 29 }.order().unwrap(), 12180);
        assert_eq!(LpsParams { p: 5, q: 13 }.order().unwrap(), 2184);
        assert_eq!(LpsParams { p: 5, q: 17 }.order().unwrap(), 4896);
    }

    #[test]
    fn generators_closed_under_inversion() {
        for (p, q) in [(5, 13), (5, 29), (13, 17)] {
            let params = LpsParams { p, q };
            let gens = lps_generators(&params).unwrap();
            assert_eq!(gens.len() as u64, p + 1);
            for s in &gens {
                assert!(inverse_in_set(s, &gens, q), "p={p} q={q}");
            }
        }
    }

    #[test]
    fn lps_5_13_is_bipartite_pgl() {
        let g = build_lps(&LpsParams { p: 5, q: 13 }).unwrap();
        assert_eq!((g.n(), g.d()), (2184, 6));
        assert!(g.is_bipartite());
    }
}
