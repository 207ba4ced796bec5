//! Small shared helpers.

/// Union-find with path halving and a parity bit per element.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    /// Root of `x` and the parity of `x` relative to it.
    pub fn find(&mut self, x: usize) -> (usize, bool) {
        let mut path = Vec::new();
        let mut r = x;
        while self.parent[r] != r {
            path.push(r);
            r = self.parent[r];
        }
        // compress, accumulating parity from the root downwards
        let mut acc = false;
        for &node in path.iter().rev() {
            acc ^= self.parity[node];
            self.parity[node] = acc;
            self.parent[node] = r;
        }
        (r, if path.is_empty() { false } else { self.parity[x] })
    }

    pub fn root(&mut self, x: usize) -> usize {
        self.find(x).0
    }

    /// Merges the classes of `a` and `b` so that parity(a) ^ parity(b) == `odd`.
    /// Returns `false` if they were already joined with the opposite parity.
    pub fn union(&mut self, a: usize, b: usize, odd: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return (pa ^ pb) == odd;
        }
        self.parent[rb] = ra;
        self.parity[rb] = pa ^ pb ^ odd;
        true
    }

    /// Dense class labels numbered by first appearance.
    pub fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut map = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut next = 0;
        for x in 0..n {
            let r = self.root(x);
            if map[r] == usize::MAX {
                map[r] = next;
                next += 1;
            }
            out[x] = map[r];
        }
        (out, next)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}
