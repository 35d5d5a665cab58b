//! Gauss–Legendre nodes and weights on [-1, 1].

use std::f64::consts::PI;

/// Evaluate P_n(x) and its derivative with the three-term recurrence.
///
/// P_0 = 1, P_1 = x, (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1};
/// the derivative uses (x^2 - 1) P'_n = n (x P_n - P_{n-1}).
pub fn legendre_pn_and_deriv(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 1..n {
        let p_next = ((2 * k + 1) as f64 * x * p - k as f64 * p_prev) / (k + 1) as f64;
        p_prev = p;
        p = p_next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Gauss–Legendre nodes (ascending) and weights for an `n`-point rule.
///
/// Nodes are found by Newton iteration from the Tricomi initial guess,
/// converged to a residual below 1e-14; weights are 2 / ((1-x^2) P'_n(x)^2).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for k in 0..n {
        let mut x = (PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_pn_and_deriv(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 && p.abs() < 1e-14 {
                break;
            }
        }
        // Newton guess order gives descending x; store ascending.
        nodes[n - 1 - k] = x;
        weights[n - 1 - k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_rule_closed_form() {
        let (x, w) = gauss_legendre(2);
        let r = 1.0 / 3f64.sqrt();
        assert!((x[0] + r).abs() < 1e-15);
        assert!((x[1] - r).abs() < 1e-15);
        assert!((w[0] - 1.0).abs() < 1e-15);
        assert!((w[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn weights_sum_to_two() {
        for n in [4, 16, 32, 63] {
            let (_, w) = gauss_legendre(n);
            let s: f64 = w.iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "n={n} sum={s}");
        }
    }

    #[test]
    fn integrates_monomials_exactly() {
        // An n-point rule is exact through degree 2n-1.
        let (x, w) = gauss_legendre(8);
        for d in 0..16usize {
            let q: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(d as i32)).sum();
            let exact = if d % 2 == 0 { 2.0 / (d as f64 + 1.0) } else { 0.0 };
            assert!((q - exact).abs() < 1e-13, "degree {d}: {q} vs {exact}");
        }
    }

    #[test]
    fn nodes_ascending_and_interior() {
        let (x, _) = gauss_legendre(32);
        for i in 1..x.len() {
            assert!(x[i] > x[i - 1]);
        }
        assert!(x[0] > -1.0 && x[31] < 1.0);
    }
}
