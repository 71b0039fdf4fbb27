//! Sampling rules on the unit sphere `S^{m-1} ⊂ ℝ^m`.

use rand::Rng;
use rand_distr::StandardNormal;

/// Surface area of `S^k ⊂ ℝ^{k+1}`.
pub fn sphere_area(k: usize) -> f64 {
    match k {
        0 => 2.0,
        1 => 2.0 * std::f64::consts::PI,
        _ => 2.0 * std::f64::consts::PI / (k as f64 - 1.0) * sphere_area(k - 2),
    }
}

/// Uniform point on `S^{m-1}` from normalized Gaussians.
pub fn random_point<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..m).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

/// Haar-random orthonormal basis (rows) by Gram-Schmidt on Gaussian vectors.
pub fn random_rotation<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Vec<Vec<f64>> {
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(m);
    while rows.len() < m {
        let mut v: Vec<f64> = (0..m).map(|_| rng.sample(StandardNormal)).collect();
        for r in &rows {
            let d: f64 = v.iter().zip(r).map(|(a, b)| a * b).sum();
            for (x, y) in v.iter_mut().zip(r) {
                *x -= d * y;
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            rows.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    rows
}

/// Vertices `±Q e_i` of a rotated cross-polytope: equal weights integrate every
/// polynomial of degree ≤ 3 exactly (a spherical 3-design).
pub fn cross_polytope<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Vec<Vec<f64>> {
    random_rotation(rng, m)
        .into_iter()
        .flat_map(|r| {
            let neg: Vec<f64> = r.iter().map(|x| -x).collect();
            [r, neg]
        })
        .collect()
}

/// Sample mean and standard error of `f` over `pairs` antithetic pairs `±x`.
pub fn monte_carlo_mean<R, F>(rng: &mut R, m: usize, pairs: usize, mut f: F) -> (f64, f64)
where
    R: Rng + ?Sized,
    F: FnMut(&[f64]) -> f64,
{
    let (mut sum, mut sq) = (0.0, 0.0);
    for _ in 0..pairs {
        let x = random_point(rng, m);
        let y: Vec<f64> = x.iter().map(|v| -v).collect();
        let s = 0.5 * (f(&x) + f(&y));
        sum += s;
        sq += s * s;
    }
    let k = pairs as f64;
    let mean = sum / k;
    let var = (sq / k - mean * mean).max(0.0);
    (mean, (var / k).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn areas() {
        assert!((sphere_area(2) - 4.0 * std::f64::consts::PI).abs() < 1e-14);
        assert!((sphere_area(4) - 8.0 / 3.0 * std::f64::consts::PI.powi(2)).abs() < 1e-13);
    }

    #[test]
    fn cross_polytope_is_a_three_design() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pts = cross_polytope(&mut rng, 5);
        let mean = |f: &dyn Fn(&[f64]) -> f64| pts.iter().map(|p| f(p)).sum::<f64>() / pts.len() as f64;
        assert!((mean(&|p| p[0] * p[0]) - 0.2).abs() < 1e-14);
        assert!(mean(&|p| p[0] * p[1]).abs() < 1e-14);
        assert!(mean(&|p| p[0] * p[1] * p[2] + p[3].powi(3)).abs() < 1e-14);
    }
}
