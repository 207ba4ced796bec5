//! Brute-force sweep of small normal coordinates.

use orbicomplex::normal::matching_equations;
use orbicomplex::orbtri::OrbifoldTriangulation;
use std::collections::{BTreeSet, HashMap};

pub const MAX_ENTRY: u64 = 3;

/// Admissible single-tet blocks with entries at most `MAX_ENTRY`.
fn blocks() -> Vec<[u64; 7]> {
    let mut out = Vec::new();
    let r = MAX_ENTRY + 1;
    for code in 0..r.pow(4) {
        let mut b = [0u64; 7];
        let mut c = code;
        for v in 0..4 {
            b[v] = c % r;
            c /= r;
        }
        out.push(b);
        for q in 0..3 {
            for n in 1..=MAX_ENTRY {
                let mut b2 = b;
                b2[4 + q] = n;
                out.push(b2);
            }
        }
    }
    out
}

/// Rank over the rationals by fraction-free elimination.
fn rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * a - m[r][j] * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
                if g > 1 {
                    for x in m[i].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        r += 1;
    }
    r
}

fn is_vertex(x: &[u64], eqs: &[Vec<(usize, i64)>]) -> bool {
    let g = x.iter().fold(0u64, |g, &v| num_integer::gcd(g, v));
    if g != 1 {
        return false;
    }
    let support: Vec<usize> = (0..x.len()).filter(|&i| x[i] > 0).collect();
    let m: Vec<Vec<i128>> = eqs
        .iter()
        .map(|row| {
            support
                .iter()
                .map(|&s| row.iter().filter(|&&(i, _)| i == s).map(|&(_, c)| c as i128).sum())
                .collect()
        })
        .collect();
    rank(m) + 1 == support.len()
}

pub fn brute_force(tri: &OrbifoldTriangulation) -> BTreeSet<Vec<u64>> {
    let n = tri.tet_count();
    let eqs = matching_equations(tri);
    let tet_of = |i: usize| i / 7;
    let local: Vec<Vec<&Vec<(usize, i64)>>> = (0..n)
        .map(|t| eqs.iter().filter(|r| r.iter().all(|&(i, _)| tet_of(i) == t)).collect())
        .collect();
    let per_tet: Vec<Vec<[u64; 7]>> = (0..n)
        .map(|t| {
            blocks()
                .into_iter()
                .filter(|b| {
                    local[t]
                        .iter()
                        .all(|r| r.iter().map(|&(i, c)| c * b[i - 7 * t] as i64).sum::<i64>() == 0)
                })
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    if n == 1 {
        for b in &per_tet[0] {
            if b.iter().any(|&x| x > 0) && is_vertex(b, &eqs) {
                out.insert(b.to_vec());
            }
        }
        return out;
    }
    assert_eq!(n, 2);
    let cross: Vec<&Vec<(usize, i64)>> = eqs
        .iter()
        .filter(|r| r.iter().any(|&(i, _)| tet_of(i) == 0) && r.iter().any(|&(i, _)| tet_of(i) == 1))
        .collect();
    let key = |b: &[u64; 7], t: usize, sign: i64| -> Vec<i64> {
        cross
            .iter()
            .map(|r| sign * r.iter().filter(|&&(i, _)| tet_of(i) == t).map(|&(i, c)| c * b[i - 7 * t] as i64).sum::<i64>())
            .collect()
    };
    let mut index: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
    for (k, b) in per_tet[1].iter().enumerate() {
        index.entry(key(b, 1, -1)).or_default().push(k);
    }
    for a in &per_tet[0] {
        let Some(ks) = index.get(&key(a, 0, 1)) else { continue };
        for &k in ks {
            let x: Vec<u64> = a.iter().chain(per_tet[1][k].iter()).copied().collect();
            if x.iter().any(|&v| v > 0) && is_vertex(&x, &eqs) {
                out.insert(x);
            }
        }
    }
    out
}
