//! Gauss–Legendre rules and product quadrature on the unit sphere.

use std::f64::consts::{PI, TAU};

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`,
/// ordered by increasing node.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "a quadrature rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi's initial guess, then Newton on P_n.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    let d = nf * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Product rule for `(1/4π) ∫∫ f(θ, φ) sin θ dθ dφ`: Gauss–Legendre in
/// `cos θ` times the uniform (trapezoidal) rule in `φ`.
#[derive(Debug, Clone)]
pub struct SphereQuadrature {
    points: Vec<(f64, f64, f64)>,
}

impl SphereQuadrature {
    pub const DEFAULT_THETA_NODES: usize = 16;
    pub const DEFAULT_PHI_NODES: usize = 32;

    pub fn new(theta_nodes: usize, phi_nodes: usize) -> Self {
        assert!(phi_nodes >= 1);
        let (x, w) = gauss_legendre(theta_nodes);
        let mut points = Vec::with_capacity(theta_nodes * phi_nodes);
        for (xi, wi) in x.iter().zip(&w) {
            let theta = xi.clamp(-1.0, 1.0).acos();
            for j in 0..phi_nodes {
                let phi = TAU * j as f64 / phi_nodes as f64;
                // Weights sum to 2 in cos θ and to 1 after the 1/N_φ factor.
                points.push((theta, phi, wi / (2.0 * phi_nodes as f64)));
            }
        }
        Self { points }
    }

    /// `(θ, φ, weight)` triples; weights sum to one.
    pub fn points(&self) -> &[(f64, f64, f64)] {
        &self.points
    }

    /// Weighted sum, accumulated in node order.
    pub fn average<F: FnMut(f64, f64) -> f64>(&self, mut f: F) -> f64 {
        self.points.iter().map(|&(t, p, w)| w * f(t, p)).sum()
    }
}

impl Default for SphereQuadrature {
    fn default() -> Self {
        Self::new(Self::DEFAULT_THETA_NODES, Self::DEFAULT_PHI_NODES)
    }
}
