//! Seeded sampling utilities backing the sampled audits and property
//! suites. All randomness in the crate flows through [`Rng`] seeded from a
//! user-visible integer, so every report is reproducible byte for byte.

use rand::Rng as _;
use rand::SeedableRng;

use crate::error::Result;
use crate::sets::SetExpr;
use crate::vector::Vector;

/// The one RNG used everywhere; ChaCha gives identical streams across
/// platforms for a fixed seed.
pub type Rng = rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}

/// Point source for sampled audits.
///
/// `Box` draws uniformly from `[-w, w]^n` and keeps members (rejection), so
/// it only works for sets of positive volume; `Explicit` filters a given
/// list through the membership test, which is how lower-dimensional sets
/// such as rays are audited.
#[derive(Debug, Clone)]
pub enum Sampler {
    Box { half_width: f64 },
    Explicit(Vec<Vector>),
}

impl Sampler {
    pub fn box_draw(half_width: f64) -> Sampler {
        Sampler::Box { half_width }
    }

    pub fn explicit(points: Vec<Vector>) -> Sampler {
        Sampler::Explicit(points)
    }

    /// Up to `n` points of `set`. Rejection gives up after a bounded number
    /// of attempts and returns what it found.
    pub fn draw(&self, set: &SetExpr, n: usize, tol: f64, rng: &mut Rng) -> Result<Vec<Vector>> {
        let dim = set.dim()?;
        match self {
            Sampler::Box { half_width } => {
                let mut out = Vec::with_capacity(n);
                let max_attempts = 400 * n.max(1);
                let mut attempts = 0;
                while out.len() < n && attempts < max_attempts {
                    attempts += 1;
                    let y = uniform_box(dim, *half_width, rng);
                    if set.contains(&y, tol)? {
                        out.push(y);
                    }
                }
                Ok(out)
            }
            Sampler::Explicit(points) => {
                let mut out = Vec::with_capacity(n);
                for p in points {
                    if out.len() >= n {
                        break;
                    }
                    if set.contains(p, tol)? {
                        out.push(p.clone());
                    }
                }
                Ok(out)
            }
        }
    }

    /// Raw box points without any membership filter (for probing both sides
    /// of a boundary).
    pub fn draw_raw(&self, dim: usize, n: usize, rng: &mut Rng) -> Vec<Vector> {
        let half_width = match self {
            Sampler::Box { half_width } => *half_width,
            Sampler::Explicit(_) => 1.0,
        };
        (0..n).map(|_| uniform_box(dim, half_width, rng)).collect()
    }
}

pub fn uniform_box(dim: usize, half_width: f64, rng: &mut Rng) -> Vector {
    Vector::new(
        (0..dim)
            .map(|_| rng.random_range(-half_width..half_width))
            .collect(),
    )
    .expect("finite by construction")
}

/// Uniform point of `[lo, hi]^dim`.
pub fn uniform_range(dim: usize, lo: f64, hi: f64, rng: &mut Rng) -> Vector {
    Vector::new((0..dim).map(|_| rng.random_range(lo..hi)).collect())
        .expect("finite by construction")
}

/// A random unit-ish direction with entries in `[-1, 1]`, rejecting
/// near-zero draws.
pub fn random_direction(dim: usize, rng: &mut Rng) -> Vector {
    loop {
        let v = uniform_box(dim, 1.0, rng);
        if v.norm2() > 0.3 {
            return v;
        }
    }
}

/// Deterministic boundary skeleton: the origin, the signed axes, pairwise
/// axis sums and differences, and the all-ones diagonals. Sampled audits
/// append these (membership-filtered) so that counterexamples sitting on
/// faces — which random volume draws almost never hit — still get probed.
pub fn skeleton_probes(dim: usize) -> Vec<Vector> {
    let mut probes = vec![Vector::zeros(dim)];
    for i in 0..dim {
        for s in [1.0, -1.0] {
            probes.push(Vector::axis(dim, i).scale(s));
        }
    }
    for i in 0..dim {
        for j in (i + 1)..dim {
            let (ei, ej) = (Vector::axis(dim, i), Vector::axis(dim, j));
            probes.push(ei.add(&ej));
            probes.push(ei.sub(&ej));
            probes.push(ej.sub(&ei));
            probes.push(ei.add(&ej).neg());
        }
    }
    probes.push(Vector::new(vec![1.0; dim]).unwrap());
    probes.push(Vector::new(vec![-1.0; dim]).unwrap());
    probes
}
