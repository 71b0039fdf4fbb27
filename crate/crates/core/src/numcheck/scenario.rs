//! Seeded random draws for one numeric comparison.

use std::collections::HashMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::quad::QuadConfig;
use super::sphere::{cross_polytope, random_point, sphere_area};
use super::symbols::NumericModel;
use crate::algebra::Generator;
use crate::drivers::VStarMode;
use crate::error::{Error, Result};

/// How the `ξ'` sphere integral is sampled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SphereRule {
    /// Randomly rotated cross-polytopes (exact through degree 3), averaged.
    CrossPolytope { rotations: usize },
    /// Antithetic Monte Carlo pairs.
    MonteCarlo { pairs: usize },
}

/// Trapezoid rule on `|η - i| = radius` for the `π⁺` projection.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourConfig {
    pub points: usize,
    pub radius: f64,
}

impl Default for ContourConfig {
    fn default() -> Self {
        Self { points: 48, radius: 0.4 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericScenario {
    pub n: usize,
    pub seed: u64,
    pub h_prime: f64,
    pub v: Vec<f64>,
    pub v_star: Vec<f64>,
    pub mode: VStarMode,
    pub quad: QuadConfig,
    pub contour: ContourConfig,
    pub rule: SphereRule,
    /// Directions `ξ'` on `S^{n-2}`, grouped by rotation for cross-polytope rules.
    pub directions: Vec<Vec<f64>>,
}

fn unit_draw(rng: &mut ChaCha8Rng) -> f64 {
    let mag: f64 = rng.random_range(0.5..1.5);
    if rng.random_bool(0.5) {
        mag
    } else {
        -mag
    }
}

impl NumericScenario {
    pub fn new(n: usize, seed: u64, mode: VStarMode, rule: SphereRule) -> Result<Self> {
        if n < 3 {
            return Err(Error::UnsupportedDimension(n));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h_prime = unit_draw(&mut rng);
        let v: Vec<f64> = (0..n).map(|_| unit_draw(&mut rng)).collect();
        let v_star: Vec<f64> = (0..n).map(|_| unit_draw(&mut rng)).collect();
        let directions = match rule {
            SphereRule::CrossPolytope { rotations } => {
                (0..rotations.max(1)).flat_map(|_| cross_polytope(&mut rng, n - 1)).collect()
            }
            SphereRule::MonteCarlo { pairs } => (0..pairs)
                .flat_map(|_| {
                    let x = random_point(&mut rng, n - 1);
                    let y = x.iter().map(|t| -t).collect();
                    [x, y]
                })
                .collect(),
        };
        Ok(Self {
            n,
            seed,
            h_prime,
            v,
            v_star,
            mode,
            quad: QuadConfig::default(),
            contour: ContourConfig::default(),
            rule,
            directions,
        })
    }

    /// `|S^{n-2}|`, the area of the `ξ'` sphere.
    pub fn omega(&self) -> f64 {
        sphere_area(self.n - 2)
    }

    /// `v^*` components as used by the model.
    pub fn effective_v_star(&self) -> &[f64] {
        match self.mode {
            VStarMode::Dual => &self.v,
            VStarMode::Independent => &self.v_star,
        }
    }

    pub fn model(&self) -> Result<NumericModel> {
        NumericModel::new(self.n, self.h_prime, self.v.clone(), self.effective_v_star().to_vec())
    }

    /// Values for every generator an exact boundary result can contain.
    pub fn assignment(&self) -> HashMap<Generator, Complex64> {
        let mut a = HashMap::new();
        let r = |x: f64| Complex64::new(x, 0.0);
        a.insert(Generator::H, r(self.h_prime));
        a.insert(Generator::Pi, r(std::f64::consts::PI));
        a.insert(Generator::Omega, r(self.omega()));
        for k in 0..self.n {
            a.insert(Generator::V(k as u8 + 1), r(self.v[k]));
            a.insert(Generator::VS(k as u8 + 1), r(self.effective_v_star()[k]));
        }
        a
    }

    pub fn assignment_at(&self, xi_prime: &[f64]) -> HashMap<Generator, Complex64> {
        let mut a = self.assignment();
        for (i, x) in xi_prime.iter().enumerate() {
            a.insert(Generator::Xi(i as u8 + 1), Complex64::new(*x, 0.0));
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_from_seed() {
        let rule = SphereRule::CrossPolytope { rotations: 1 };
        let a = NumericScenario::new(4, 11, VStarMode::Dual, rule).unwrap();
        let b = NumericScenario::new(4, 11, VStarMode::Dual, rule).unwrap();
        let c = NumericScenario::new(4, 12, VStarMode::Dual, rule).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.h_prime, c.h_prime);
        assert_eq!(a.directions.len(), 6);
    }
}
