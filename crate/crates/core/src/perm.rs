//! Permutations of the four vertex labels of a tetrahedron.

use std::fmt;

/// A permutation of `{0,1,2,3}`, stored as the image of each label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4([u8; 4]);

/// All 24 permutations in lexicographic order of their image strings.
pub const ALL_PERMS: [Perm4; 24] = {
    let mut out = [Perm4([0, 1, 2, 3]); 24];
    let mut n = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                let d = 6 - a - b - c;
                if a != b && a != c && b != c && d < 4 && d != a && d != b && d != c {
                    out[n] = Perm4([a as u8, b as u8, c as u8, d as u8]);
                    n += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    /// Builds a permutation from images; `None` unless they form a bijection.
    pub fn new(images: [u8; 4]) -> Option<Perm4> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm4(images))
    }

    /// Parses a 4-digit image string such as `"1032"`.
    pub fn parse(s: &str) -> Option<Perm4> {
        let b = s.as_bytes();
        if b.len() != 4 {
            return None;
        }
        let mut img = [0u8; 4];
        for (k, &c) in b.iter().enumerate() {
            if !c.is_ascii_digit() {
                return None;
            }
            img[k] = c - b'0';
        }
        Perm4::new(img)
    }

    #[inline]
    pub fn apply(self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(self) -> [u8; 4] {
        self.0
    }

    pub fn inverse(self) -> Perm4 {
        let mut out = [0u8; 4];
        for i in 0..4 {
            out[self.0[i] as usize] = i as u8;
        }
        Perm4(out)
    }

    /// `self.compose(other)` maps `i` to `self(other(i))`.
    pub fn compose(self, other: Perm4) -> Perm4 {
        let mut out = [0u8; 4];
        for i in 0..4 {
            out[i] = self.0[other.0[i] as usize];
        }
        Perm4(out)
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(self) -> i32 {
        let mut inv = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Position of this permutation in [`ALL_PERMS`].
    pub fn index(self) -> usize {
        ALL_PERMS.iter().position(|&p| p == self).unwrap()
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(a: usize, b: usize) -> Perm4 {
        let mut img = [0u8, 1, 2, 3];
        img.swap(a, b);
        Perm4(img)
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// Tetrahedron edges as vertex pairs: 0:01 1:02 2:03 3:12 4:13 5:23.
pub const EDGE_VERTS: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// Index of the edge joining vertices `a` and `b`.
pub fn edge_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("not an edge: {a}{b}"),
    }
}

/// The vertices of face `f` in increasing order.
pub fn face_verts(f: usize) -> [usize; 3] {
    let mut out = [0; 3];
    let mut k = 0;
    for v in 0..4 {
        if v != f {
            out[k] = v;
            k += 1;
        }
    }
    out
}
