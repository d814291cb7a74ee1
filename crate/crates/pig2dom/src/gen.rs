//! Seeded, reproducible instance generation.
//!
//! The PRNG is SplitMix64 (Steele, Lea & Flood's published 64-bit generator)
//! and random decisions are made through integer threshold comparisons only,
//! so identical parameters produce byte-identical instances on every
//! platform, and reimplementations in other languages can match them
//! bit-exactly.

use crate::straight::StraightGraph;

/// SplitMix64: state advances by the golden-ratio increment, output is the
/// finalizer mix of the new state.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }
}

/// Instance families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenModel {
    /// Random straight graph with the given expected normalized reach gap.
    Straight { density: f64 },
    /// Same distribution, presented as an inclusion-free interval family.
    Intervals { density: f64 },
    /// `reach(i) = min(i + k, n)`.
    PathPower { k: usize },
}

/// A fully determined instance: identical specs generate identical graphs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub model: GenModel,
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> StraightGraph {
        match self.model {
            GenModel::Straight { density } => random_straight(self.n, density, self.seed),
            GenModel::Intervals { density } => {
                let (g, _) = StraightGraph::from_intervals(&random_intervals(
                    self.n, density, self.seed,
                ))
                .expect("generated families are inclusion-free");
                g
            }
            GenModel::PathPower { k } => path_power(self.n, k),
        }
    }
}

/// Geometric sample with success probability `1 / (mean + 1)`, capped at
/// `cap`, produced by Bernoulli trials on raw 64-bit draws (no transcendental
/// functions, hence reproducible).
fn geometric_capped(rng: &mut SplitMix64, mean: f64, cap: usize) -> usize {
    if cap == 0 || mean <= 0.0 {
        return 0;
    }
    let q = mean / (mean + 1.0); // continuation probability
    let threshold = (q * 18_446_744_073_709_551_616.0) as u64; // q * 2^64
    let mut gap = 0;
    while gap < cap && rng.next_u64() < threshold {
        gap += 1;
    }
    gap
}

/// Random straight graph: reach gaps `reach(i) - i` are geometric with mean
/// `density * (n - i)`, then a left-to-right pass restores monotonicity.
/// `density >= 1` yields the complete graph.
pub fn random_straight(n: usize, density: f64, seed: u64) -> StraightGraph {
    let mut rng = SplitMix64::new(seed);
    let mut reach = Vec::with_capacity(n);
    for i in 1..=n {
        let cap = n - i;
        let gap = if density >= 1.0 {
            cap
        } else {
            geometric_capped(&mut rng, density * cap as f64, cap)
        };
        reach.push(i + gap);
    }
    for i in 1..n {
        if reach[i] < reach[i - 1] {
            reach[i] = reach[i - 1];
        }
    }
    StraightGraph::from_reach(n, &reach).expect("generator output is always a straight encoding")
}

/// An inclusion-free interval family whose intersection graph is
/// `random_straight(n, density, seed)`: the i-th interval is
/// `[i, reach(i) + i/(n+1)]`, so lefts and rights are strictly increasing
/// and `left_j <= right_i` exactly when `j <= reach(i)`.
pub fn random_intervals(n: usize, density: f64, seed: u64) -> Vec<(f64, f64)> {
    let g = random_straight(n, density, seed);
    (1..=n)
        .map(|i| {
            (
                i as f64,
                g.reach(i) as f64 + i as f64 / (n + 1) as f64,
            )
        })
        .collect()
}

/// The k-th power of a path: `reach(i) = min(i + k, n)`.
pub fn path_power(n: usize, k: usize) -> StraightGraph {
    let reach: Vec<usize> = (1..=n).map(|i| (i + k).min(n)).collect();
    StraightGraph::from_reach(n, &reach).expect("path powers are straight")
}

/// The 10-vertex golden fixture; its augmentation is the worked example the
/// unit tests pin down edge by edge.
pub fn fixture_fig4() -> StraightGraph {
    StraightGraph::from_reach(10, &[3, 4, 5, 7, 7, 8, 9, 10, 10, 10])
        .expect("fixture is a straight encoding")
}
