//! The Weyl group `W(D5)`: permutations of five indices with an even number of sign changes.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use super::graph::{vertex_of_subset, vertex_subset};

/// `E -> perm(E) xor flips` on even subsets and `w_i -> ±w_{perm(i)}` on weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    perm: [u8; 5],
    flips: u8,
}

impl SignedPerm {
    pub fn identity() -> Self {
        Self {
            perm: [0, 1, 2, 3, 4],
            flips: 0,
        }
    }

    /// `perm[i]` is the image of index `i`; `flips` must have even popcount.
    pub fn new(perm: [u8; 5], flips: u8) -> Option<Self> {
        let mut seen = 0u8;
        for &p in &perm {
            if p >= 5 {
                return None;
            }
            seen |= 1 << p;
        }
        (seen == 0b11111 && flips < 32 && flips.count_ones().is_multiple_of(2)).then_some(Self { perm, flips })
    }

    /// Pure sign change at an even subset.
    pub fn flip(mask: u8) -> Self {
        Self::new([0, 1, 2, 3, 4], mask).expect("even flip set")
    }

    pub fn transposition(i: usize, j: usize) -> Self {
        let mut perm = [0, 1, 2, 3, 4];
        perm.swap(i, j);
        Self { perm, flips: 0 }
    }

    pub fn perm(&self) -> [u8; 5] {
        self.perm
    }

    pub fn flips(&self) -> u8 {
        self.flips
    }

    fn permute_mask(&self, mask: u8) -> u8 {
        (0..5)
            .filter(|&i| mask & (1 << i) != 0)
            .fold(0, |acc, i| acc | (1 << self.perm[i]))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            perm: std::array::from_fn(|i| self.perm[other.perm[i] as usize]),
            flips: self.permute_mask(other.flips) ^ self.flips,
        }
    }

    pub fn inverse(&self) -> Self {
        let mut perm = [0; 5];
        for i in 0..5 {
            perm[self.perm[i] as usize] = i as u8;
        }
        let inv = Self { perm, flips: 0 };
        Self {
            perm,
            flips: inv.permute_mask(self.flips),
        }
    }

    pub fn act_subset(&self, mask: u8) -> u8 {
        self.permute_mask(mask) ^ self.flips
    }

    pub fn act_vertex(&self, v: usize) -> usize {
        vertex_of_subset(self.act_subset(vertex_subset(v)))
    }

    /// Action on (doubled) weights: slot `perm(i)` receives `±w_i`.
    pub fn act_weights(&self, w: [i64; 5]) -> [i64; 5] {
        let mut out = [0; 5];
        for i in 0..5 {
            let j = self.perm[i] as usize;
            out[j] = if self.flips & (1 << j) != 0 { -w[i] } else { w[i] };
        }
        out
    }

    pub fn order(&self) -> u32 {
        let mut g = *self;
        let mut n = 1;
        while g != Self::identity() {
            g = g.compose(self);
            n += 1;
        }
        n
    }
}

/// The five involutions of the `D5` diagram:
/// `(12), (23), (34), (45)` and `(45)` composed with the sign change at `{4, 5}`.
pub fn coxeter_generators() -> [SignedPerm; 5] {
    let t45 = SignedPerm::transposition(3, 4);
    [
        SignedPerm::transposition(0, 1),
        SignedPerm::transposition(1, 2),
        SignedPerm::transposition(2, 3),
        t45,
        SignedPerm::flip(0b11000).compose(&t45),
    ]
}

/// Orders of pairwise products `g_i g_j`.
pub fn coxeter_matrix(gens: &[SignedPerm]) -> Vec<Vec<u32>> {
    gens.iter()
        .map(|a| gens.iter().map(|b| a.compose(b).order()).collect())
        .collect()
}

/// The expected `D5` matrix in generator order: a chain `1-2-3-4` with `5` attached to `3`.
pub fn d5_coxeter_matrix() -> Vec<Vec<u32>> {
    let edges = [(0, 1), (1, 2), (2, 3), (2, 4)];
    (0..5)
        .map(|i| {
            (0..5)
                .map(|j| {
                    if i == j {
                        1
                    } else if edges.contains(&(i, j)) || edges.contains(&(j, i)) {
                        3
                    } else {
                        2
                    }
                })
                .collect()
        })
        .collect()
}

/// Closure of `gens` under composition.
pub fn generated_group(gens: &[SignedPerm]) -> Vec<SignedPerm> {
    let mut seen = HashSet::from([SignedPerm::identity()]);
    let mut queue = VecDeque::from([SignedPerm::identity()]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g);
            if seen.insert(h) {
                queue.push_back(h);
            }
        }
    }
    let mut out: Vec<SignedPerm> = seen.into_iter().collect();
    out.sort();
    out
}

fn permutations() -> Vec<[u8; 5]> {
    let mut out = Vec::with_capacity(120);
    let mut p = [0u8, 1, 2, 3, 4];
    // Heap's algorithm.
    let mut c = [0usize; 5];
    out.push(p);
    let mut i = 0;
    while i < 5 {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// All 1920 elements, enumerated once.
pub fn wd5_elements() -> &'static [SignedPerm] {
    static ELEMENTS: OnceLock<Vec<SignedPerm>> = OnceLock::new();
    ELEMENTS.get_or_init(|| {
        let mut out = Vec::with_capacity(1920);
        for perm in permutations() {
            for flips in 0..32u8 {
                if let Some(g) = SignedPerm::new(perm, flips) {
                    out.push(g);
                }
            }
        }
        out.sort();
        out
    })
}
