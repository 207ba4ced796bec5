//! Vertex normal surfaces by a filtered double description.

use super::{matching_equations, NormalCoordinates};
use crate::error::{OrbError, Result};
use crate::orbtri::OrbifoldTriangulation;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
struct Ray {
    coords: Vec<BigInt>,
    /// bit i set when coordinate i is zero
    zeros: Vec<u64>,
}

fn bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

fn zero_bits(coords: &[BigInt]) -> Vec<u64> {
    let mut w = vec![0u64; (coords.len() + 63) / 64];
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            w[i / 64] |= 1 << (i % 64);
        }
    }
    w
}

fn contains(sup: &[u64], sub: &[u64]) -> bool {
    sup.iter().zip(sub).all(|(a, b)| a & b == *b)
}

/// Quad condition on the union of supports, read off the common zero set.
fn admissible(common_zeros: &[u64], tets: usize) -> bool {
    (0..tets).all(|t| (0..3).filter(|&q| !bit(common_zeros, 7 * t + 4 + q)).count() <= 1)
}

fn normalize(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// Extremal rays of the admissible part of the projective solution cone, as primitive
/// integer vectors sorted lexicographically. With `bound = Some(k)`, more than `k`
/// intermediate rays aborts with `BoundExceeded`, carrying whatever rays already
/// satisfy every matching equation.
pub fn vertex_solutions(tri: &OrbifoldTriangulation, bound: Option<usize>) -> Result<Vec<NormalCoordinates>> {
    let tets = tri.tet_count();
    let dim = 7 * tets;
    let eqs = matching_equations(tri);
    let mut rays: Vec<Ray> = (0..dim)
        .map(|i| {
            let mut c = vec![BigInt::zero(); dim];
            c[i] = BigInt::one();
            let zeros = zero_bits(&c);
            Ray { coords: c, zeros }
        })
        .collect();
    for (k, row) in eqs.iter().enumerate() {
        let eval = |r: &Ray| -> BigInt { row.iter().map(|&(i, c)| &r.coords[i] * BigInt::from(c)).sum() };
        let vals: Vec<BigInt> = rays.iter().map(eval).collect();
        let mut next: Vec<Ray> = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (i, v) in vals.iter().enumerate() {
            if v.is_zero() {
                next.push(rays[i].clone());
            } else if v.is_positive() {
                pos.push(i);
            } else {
                neg.push(i);
            }
        }
        for &p in &pos {
            for &n in &neg {
                let common: Vec<u64> = rays[p].zeros.iter().zip(&rays[n].zeros).map(|(a, b)| a & b).collect();
                if !admissible(&common, tets) {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == n || !contains(&r.zeros, &common));
                if !adjacent {
                    continue;
                }
                let a = &vals[p];
                let b = -&vals[n];
                let coords: Vec<BigInt> = rays[n]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(x, y)| a * x + &b * y)
                    .collect();
                let coords = normalize(coords);
                let zeros = zero_bits(&coords);
                next.push(Ray { coords, zeros });
            }
        }
        if let Some(limit) = bound {
            if next.len() > limit {
                let rest = &eqs[k + 1..];
                let partial = next
                    .iter()
                    .filter(|r| {
                        rest.iter().all(|row| {
                            row.iter().map(|&(i, c)| &r.coords[i] * BigInt::from(c)).sum::<BigInt>().is_zero()
                        })
                    })
                    .filter_map(|r| r.coords.iter().map(|x| x.to_u64()).collect::<Option<Vec<u64>>>())
                    .collect();
                return Err(OrbError::BoundExceeded { partial });
            }
        }
        rays = next;
    }
    let mut out = Vec::with_capacity(rays.len());
    for r in rays {
        let data: Option<Vec<u64>> = r.coords.iter().map(|x| x.to_u64()).collect();
        let data = data.ok_or_else(|| OrbError::InvalidCoordinates("vertex solution exceeds u64".into()))?;
        out.push(NormalCoordinates::from_vec(data)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}
