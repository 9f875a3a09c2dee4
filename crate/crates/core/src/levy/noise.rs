use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson, StandardNormal};

use super::{LevyMeasure, TimeGrid};
use crate::error::{check_len, Error, Result};

/// `count` arrivals of atom `atom` within one grid step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JumpEvent {
    pub atom: usize,
    pub count: u32,
}

/// Brownian increments and per-atom jump counts of one path on a grid.
///
/// Jump events are stored compactly: the events of step `i` are
/// `events[offsets[i]..offsets[i + 1]]`, ordered by atom index.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseRealization {
    dt: f64,
    n_atoms: usize,
    brownian: Vec<f64>,
    offsets: Vec<usize>,
    events: Vec<JumpEvent>,
}

// Substream ids within one path. Keeping the Brownian and jump draws apart
// means switching jumps on or off leaves the Brownian path untouched.
const BROWNIAN_STREAM: u64 = 0;
const JUMP_STREAM: u64 = 1;

fn path_rng(seed: u64, path_index: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(path_index.wrapping_mul(2).wrapping_add(stream));
    rng
}

/// Draws the noise of path `path_index` under master seed `seed`.
///
/// The output is a pure function of `(measure, grid, seed, path_index)`.
pub fn sample_noise(
    measure: &LevyMeasure,
    grid: &TimeGrid,
    seed: u64,
    path_index: u64,
) -> NoiseRealization {
    let n = grid.steps();
    let dt = grid.dt();
    let sqrt_dt = dt.sqrt();

    let mut rng = path_rng(seed, path_index, BROWNIAN_STREAM);
    let brownian = (0..n)
        .map(|_| {
            let z: f64 = rng.sample(StandardNormal);
            z * sqrt_dt
        })
        .collect();

    let poissons: Vec<Poisson<f64>> = measure
        .intensities()
        .map(|w| Poisson::new(w * dt).expect("atom intensities are positive and finite"))
        .collect();
    let mut rng = path_rng(seed, path_index, JUMP_STREAM);
    let mut offsets = Vec::with_capacity(n + 1);
    let mut events = Vec::new();
    offsets.push(0);
    for _ in 0..n {
        for (atom, dist) in poissons.iter().enumerate() {
            let count = dist.sample(&mut rng) as u32;
            if count > 0 {
                events.push(JumpEvent { atom, count });
            }
        }
        offsets.push(events.len());
    }

    NoiseRealization {
        dt,
        n_atoms: measure.len(),
        brownian,
        offsets,
        events,
    }
}

impl NoiseRealization {
    /// Builds a realization from explicit increments and per-step counts
    /// (`counts[i][k]` arrivals of atom `k` during step `i`).
    pub fn from_parts(grid: &TimeGrid, brownian: Vec<f64>, counts: &[Vec<u32>]) -> Result<Self> {
        check_len("brownian increments", grid.steps(), brownian.len())?;
        check_len("jump count rows", grid.steps(), counts.len())?;
        let n_atoms = counts.first().map_or(0, Vec::len);
        let mut offsets = vec![0];
        let mut events = Vec::new();
        for row in counts {
            check_len("jump counts per step", n_atoms, row.len())?;
            events.extend(
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(atom, &count)| JumpEvent { atom, count }),
            );
            offsets.push(events.len());
        }
        if brownian.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter(
                "non-finite brownian increment".into(),
            ));
        }
        Ok(Self {
            dt: grid.dt(),
            n_atoms,
            brownian,
            offsets,
            events,
        })
    }

    pub fn steps(&self) -> usize {
        self.brownian.len()
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    pub fn brownian_increments(&self) -> &[f64] {
        &self.brownian
    }

    pub fn events(&self, step: usize) -> &[JumpEvent] {
        &self.events[self.offsets[step]..self.offsets[step + 1]]
    }

    pub fn has_jumps(&self) -> bool {
        !self.events.is_empty()
    }

    /// Total number of arrivals across all atoms and steps.
    pub fn total_jumps(&self) -> u64 {
        self.events.iter().map(|e| u64::from(e.count)).sum()
    }

    /// `W_{t_i}` for every grid point, starting at zero.
    pub fn brownian_path(&self) -> Vec<f64> {
        let mut w = Vec::with_capacity(self.steps() + 1);
        let mut acc = 0.0;
        w.push(acc);
        for dw in &self.brownian {
            acc += dw;
            w.push(acc);
        }
        w
    }

    /// Sums `f(event)` over the jumps of each step.
    pub fn jump_sum_per_step(&self, mut f: impl FnMut(JumpEvent) -> f64) -> Vec<f64> {
        (0..self.steps())
            .map(|i| self.events(i).iter().map(|&e| f(e)).sum())
            .collect()
    }

    /// Merges each block of `factor` consecutive steps into one, so the
    /// coarse realization is the same sample path seen on a grid with
    /// `factor` times the step size.
    pub fn coarsen(&self, factor: usize) -> Result<Self> {
        if factor == 0 || !self.steps().is_multiple_of(factor) {
            return Err(Error::GridMismatch(format!(
                "cannot coarsen {} steps by a factor of {factor}",
                self.steps()
            )));
        }
        let coarse_steps = self.steps() / factor;
        let mut brownian = Vec::with_capacity(coarse_steps);
        let mut offsets = vec![0];
        let mut events = Vec::new();
        let mut counts = vec![0u32; self.n_atoms];
        for block in 0..coarse_steps {
            let range = block * factor..(block + 1) * factor;
            brownian.push(self.brownian[range.clone()].iter().sum());
            counts.iter_mut().for_each(|c| *c = 0);
            for step in range {
                for e in self.events(step) {
                    counts[e.atom] += e.count;
                }
            }
            events.extend(
                counts
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(atom, &count)| JumpEvent { atom, count }),
            );
            offsets.push(events.len());
        }
        Ok(Self {
            dt: self.dt * factor as f64,
            n_atoms: self.n_atoms,
            brownian,
            offsets,
            events,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bernoulli() -> LevyMeasure {
        LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0).unwrap()
    }

    #[test]
    fn empty_measure_has_no_jumps() {
        let grid = TimeGrid::new(1.0, 500).unwrap();
        let noise = sample_noise(&LevyMeasure::empty(), &grid, 7, 3);
        assert!(!noise.has_jumps());
        assert_eq!(noise.steps(), 500);
        assert!((0..500).all(|i| noise.events(i).is_empty()));
    }

    #[test]
    fn deterministic_per_seed_and_path() {
        let grid = TimeGrid::new(1.0, 1000).unwrap();
        let a = sample_noise(&bernoulli(), &grid, 42, 9);
        let b = sample_noise(&bernoulli(), &grid, 42, 9);
        assert_eq!(a, b);
        let c = sample_noise(&bernoulli(), &grid, 42, 10);
        assert_ne!(a.brownian_increments(), c.brownian_increments());
        let d = sample_noise(&bernoulli(), &grid, 43, 9);
        assert_ne!(a.brownian_increments(), d.brownian_increments());
    }

    #[test]
    fn jumps_do_not_perturb_brownian_draws() {
        let grid = TimeGrid::new(1.0, 200).unwrap();
        let with = sample_noise(&bernoulli(), &grid, 5, 1);
        let without = sample_noise(&LevyMeasure::empty(), &grid, 5, 1);
        assert_eq!(with.brownian_increments(), without.brownian_increments());
    }

    #[test]
    fn coarsen_preserves_totals() {
        let grid = TimeGrid::new(1.0, 1000).unwrap();
        let fine = sample_noise(&bernoulli(), &grid, 1, 0);
        let coarse = fine.coarsen(4).unwrap();
        assert_eq!(coarse.steps(), 250);
        assert_eq!(coarse.total_jumps(), fine.total_jumps());
        let wf = fine.brownian_path();
        let wc = coarse.brownian_path();
        for (i, w) in wc.iter().enumerate() {
            assert!((w - wf[4 * i]).abs() < 1e-12);
        }
        assert!(fine.coarsen(3).is_err());
    }

    #[test]
    fn from_parts_validates_shape() {
        let grid = TimeGrid::new(1.0, 2).unwrap();
        assert!(NoiseRealization::from_parts(&grid, vec![0.0], &[vec![0], vec![1]]).is_err());
        let ok = NoiseRealization::from_parts(&grid, vec![0.1, -0.1], &[vec![0, 2], vec![1, 0]])
            .unwrap();
        assert_eq!(ok.events(0), &[JumpEvent { atom: 1, count: 2 }]);
        assert_eq!(ok.total_jumps(), 3);
    }
}
