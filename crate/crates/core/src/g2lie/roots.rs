//! Root system of type G2 with `α1` long and `α2` short.

use serde::Serialize;

/// Root coordinates in the basis of simple roots.
pub type RootCoords = [i64; 2];

pub const CARTAN: [[i64; 2]; 2] = [[2, -1], [-3, 2]];

/// Invariant form on the root lattice, `(α1, α1) = 6`, `(α2, α2) = 2`.
const GRAM: [[i64; 2]; 2] = [[6, -3], [-3, 2]];

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Root {
    pub coords: RootCoords,
    pub long: bool,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.coords[0] >= 0 && self.coords[1] >= 0
    }

    pub fn neg(&self) -> Root {
        Root {
            coords: [-self.coords[0], -self.coords[1]],
            long: self.long,
        }
    }

    /// `α(h_i)` for the simple coroot `h_i`.
    pub fn on_coroot(&self, i: usize) -> i64 {
        self.coords[0] * CARTAN[i][0] + self.coords[1] * CARTAN[i][1]
    }

    /// `α(c1 h1 + c2 h2)`.
    pub fn eval(&self, h: [i64; 2]) -> i64 {
        h[0] * self.on_coroot(0) + h[1] * self.on_coroot(1)
    }
}

fn pairing(a: RootCoords, b: RootCoords) -> i64 {
    (0..2)
        .flat_map(|i| (0..2).map(move |j| a[i] * GRAM[i][j] * b[j]))
        .sum()
}

/// `<β, α^∨> = 2(β, α)/(α, α)`.
pub fn cartan_integer(beta: RootCoords, alpha: RootCoords) -> i64 {
    2 * pairing(beta, alpha) / pairing(alpha, alpha)
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystemG2 {
    pub simple_roots: [RootCoords; 2],
    /// Positive roots by height, then their negatives in the same order.
    pub all_roots: Vec<Root>,
    pub cartan_matrix: [[i64; 2]; 2],
}

impl RootSystemG2 {
    /// Generates the roots as the Weyl orbit of the simple roots.
    pub fn new() -> Self {
        let simple = [[1, 0], [0, 1]];
        let mut found: Vec<RootCoords> = simple.to_vec();
        let mut frontier = found.clone();
        while let Some(beta) = frontier.pop() {
            for s in simple {
                let c = cartan_integer(beta, s);
                let image = [beta[0] - c * s[0], beta[1] - c * s[1]];
                if !found.contains(&image) {
                    found.push(image);
                    frontier.push(image);
                }
            }
        }
        let mut positive: Vec<RootCoords> = found
            .iter()
            .copied()
            .filter(|r| r[0] >= 0 && r[1] >= 0)
            .collect();
        positive.sort_by_key(|r| (r[0] + r[1], -r[0]));
        let long_len = pairing(simple[0], simple[0]);
        let root = |c: RootCoords| Root {
            coords: c,
            long: pairing(c, c) == long_len,
        };
        let mut all_roots: Vec<Root> = positive.iter().map(|&c| root(c)).collect();
        all_roots.extend(positive.iter().map(|&c| root([-c[0], -c[1]])));
        RootSystemG2 {
            simple_roots: simple,
            all_roots,
            cartan_matrix: CARTAN,
        }
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.all_roots[..self.all_roots.len() / 2]
    }

    pub fn index_of(&self, coords: RootCoords) -> Option<usize> {
        self.all_roots.iter().position(|r| r.coords == coords)
    }

    pub fn contains(&self, coords: RootCoords) -> bool {
        self.index_of(coords).is_some()
    }

    /// The highest root `2α1 + 3α2`.
    pub fn highest_root(&self) -> Root {
        *self
            .positive_roots()
            .iter()
            .max_by_key(|r| r.coords[0] + r.coords[1])
            .expect("nonempty root system")
    }

    pub fn long_count(&self) -> usize {
        self.all_roots.iter().filter(|r| r.long).count()
    }

    /// `(p, q)` with `β - pα, …, β + qα` the `α`-string through `β`.
    pub fn string(&self, alpha: RootCoords, beta: RootCoords) -> (i64, i64) {
        let step = |k: i64| [beta[0] + k * alpha[0], beta[1] + k * alpha[1]];
        let mut p = 0;
        while self.contains(step(-(p + 1))) {
            p += 1;
        }
        let mut q = 0;
        while self.contains(step(q + 1)) {
            q += 1;
        }
        (p, q)
    }

    /// Every `α`-string through a root `β ≠ ±α` satisfies `p - q = <β, α^∨>`.
    pub fn strings_consistent(&self) -> bool {
        self.all_roots.iter().all(|a| {
            self.all_roots.iter().all(|b| {
                let (a, b) = (a.coords, b.coords);
                if a == b || a == [-b[0], -b[1]] {
                    return true;
                }
                let (p, q) = self.string(a, b);
                p - q == cartan_integer(b, a)
            })
        })
    }

    /// `α(h) ≠ 0` for all roots.
    pub fn is_regular(&self, h: [i64; 2]) -> bool {
        self.all_roots.iter().all(|r| r.eval(h) != 0)
    }
}

impl Default for RootSystemG2 {
    fn default() -> Self {
        Self::new()
    }
}
