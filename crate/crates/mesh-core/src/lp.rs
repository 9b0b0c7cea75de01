//! A small dense two-phase simplex for equality-form linear programs
//! `min c·y` subject to `A y = b`, `y ≥ 0`, with few rows (here: 4).
//!
//! The Chebyshev-center problem `max r` subject to `n_f·c + r ≤ d_f` over
//! facet planes is solved through its dual, which has exactly this shape with one column
//! per facet; the simplex multipliers at optimality recover the primal
//! `(center, r)`.

use crate::error::MeshError;

/// Result of [`solve_min_lp`]: optimal objective, primal solution of the
/// equality-form problem, and the row multipliers π (optimal solution of the
/// dual inequality-form problem).
pub struct LpSolution {
    pub objective: f64,
    pub y: Vec<f64>,
    pub multipliers: Vec<f64>,
}

/// Solves `min c·y, A y = b, y ≥ 0`. `a` is row-major with `rows.len() == b.len()`;
/// every row must have `c.len()` entries. Requires `b ≥ 0` componentwise
/// (callers can flip row signs).
pub fn solve_min_lp(a: &[Vec<f64>], b: &[f64], c: &[f64], tol: f64) -> Result<LpSolution, MeshError> {
    let m = b.len();
    let n = c.len();
    debug_assert!(a.len() == m && a.iter().all(|r| r.len() == n));
    debug_assert!(b.iter().all(|&x| x >= 0.0));

    // Column access helper; columns n..n+m are phase-1 artificials (identity).
    let col = |j: usize, i: usize| -> f64 {
        if j < n {
            a[i][j]
        } else if j - n == i {
            1.0
        } else {
            0.0
        }
    };

    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut x_b: Vec<f64> = b.to_vec();

    // phase 1: drive artificials to zero
    let phase1_cost = |j: usize| if j >= n { 1.0 } else { 0.0 };
    simplex_loop(m, n + m, &col, &phase1_cost, &mut basis, &mut x_b, tol, true)?;
    let infeas: f64 = basis
        .iter()
        .zip(x_b.iter())
        .filter(|(&j, _)| j >= n)
        .map(|(_, &v)| v)
        .sum();
    if infeas > tol.max(1e-9) {
        return Err(MeshError::SolverFailure(format!(
            "LP infeasible (phase-1 residual {infeas:.3e})"
        )));
    }

    // phase 2: real objective; artificials may linger in the basis at zero but
    // are barred from entering.
    let phase2_cost = |j: usize| if j < n { c[j] } else { 0.0 };
    simplex_loop(m, n, &col, &phase2_cost, &mut basis, &mut x_b, tol, false)?;

    let mut y = vec![0.0; n];
    for (&j, &v) in basis.iter().zip(x_b.iter()) {
        if j < n {
            y[j] = v;
        }
    }
    let objective = y.iter().zip(c.iter()).map(|(yi, ci)| yi * ci).sum();
    let multipliers = solve_multipliers(m, &col, &phase2_cost, &basis)?;
    Ok(LpSolution {
        objective,
        y,
        multipliers,
    })
}

#[allow(clippy::too_many_arguments)]
fn simplex_loop(
    m: usize,
    n_enterable: usize,
    col: &dyn Fn(usize, usize) -> f64,
    cost: &dyn Fn(usize) -> f64,
    basis: &mut [usize],
    x_b: &mut [f64],
    tol: f64,
    phase1: bool,
) -> Result<(), MeshError> {
    let max_iters = 200 * (n_enterable + m) + 1000;
    for _ in 0..max_iters {
        let pi = solve_multipliers(m, col, cost, basis)?;
        // Bland's rule: smallest index with negative reduced cost.
        let mut entering = None;
        for j in 0..n_enterable {
            if basis.contains(&j) {
                continue;
            }
            let red = cost(j) - (0..m).map(|i| pi[i] * col(j, i)).sum::<f64>();
            if red < -tol {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else {
            return Ok(());
        };
        // direction d = B^{-1} A_j
        let aj: Vec<f64> = (0..m).map(|i| col(j, i)).collect();
        let bmat: Vec<Vec<f64>> = (0..m)
            .map(|i| basis.iter().map(|&k| col(k, i)).collect())
            .collect();
        let d = solve_dense(&bmat, &aj)
            .ok_or_else(|| MeshError::SolverFailure("singular simplex basis".into()))?;
        // ratio test (Bland tie-break on basis column index)
        let mut leave: Option<(usize, f64)> = None;
        for i in 0..m {
            if d[i] > tol {
                let ratio = x_b[i] / d[i];
                match leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < lr - tol || (ratio < lr + tol && basis[i] < basis[li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((li, theta)) = leave else {
            if phase1 {
                return Err(MeshError::SolverFailure("phase-1 unbounded".into()));
            }
            return Err(MeshError::SolverFailure("LP unbounded".into()));
        };
        for i in 0..m {
            x_b[i] -= theta * d[i];
            if x_b[i] < 0.0 {
                x_b[i] = 0.0;
            }
        }
        x_b[li] = theta;
        basis[li] = j;
    }
    Err(MeshError::SolverFailure("simplex iteration limit".into()))
}

fn solve_multipliers(
    m: usize,
    col: &dyn Fn(usize, usize) -> f64,
    cost: &dyn Fn(usize) -> f64,
    basis: &[usize],
) -> Result<Vec<f64>, MeshError> {
    // B^T π = c_B
    let bt: Vec<Vec<f64>> = (0..m)
        .map(|r| (0..m).map(|i| col(basis[r], i)).collect())
        .collect();
    let cb: Vec<f64> = basis.iter().map(|&j| cost(j)).collect();
    solve_dense(&bt, &cb).ok_or_else(|| MeshError::SolverFailure("singular basis transpose".into()))
}

/// Gaussian elimination with partial pivoting; None when singular.
fn solve_dense(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    let mut m: Vec<Vec<f64>> = a.iter().map(|r| r.clone()).collect();
    let mut x = b.to_vec();
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| m[i][k].abs().total_cmp(&m[j][k].abs()))?;
        if m[piv][k].abs() < 1e-300 {
            return None;
        }
        m.swap(k, piv);
        x.swap(k, piv);
        for i in k + 1..n {
            let f = m[i][k] / m[k][k];
            if f == 0.0 {
                continue;
            }
            for j in k..n {
                m[i][j] -= f * m[k][j];
            }
            x[i] -= f * x[k];
        }
    }
    for k in (0..n).rev() {
        let mut s = x[k];
        for j in k + 1..n {
            s -= m[k][j] * x[j];
        }
        x[k] = s / m[k][k];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_lp() {
        // min y1 + 2 y2  s.t.  y1 + y2 = 1, y ≥ 0 → y = (1, 0)
        let a = vec![vec![1.0, 1.0]];
        let sol = solve_min_lp(&a, &[1.0], &[1.0, 2.0], 1e-12).unwrap();
        assert!((sol.objective - 1.0).abs() < 1e-12);
        assert!((sol.y[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn infeasible_detected() {
        // y1 = 1 and y1 = 2 simultaneously
        let a = vec![vec![1.0], vec![1.0]];
        assert!(solve_min_lp(&a, &[1.0, 2.0], &[1.0], 1e-12).is_err());
    }

    #[test]
    fn multipliers_match_dual() {
        // min 3y1 + 2y2, y1 + y2 = 1 → optimum at y2, objective 2, π = 2
        let a = vec![vec![1.0, 1.0]];
        let sol = solve_min_lp(&a, &[1.0], &[3.0, 2.0], 1e-12).unwrap();
        assert!((sol.multipliers[0] - 2.0).abs() < 1e-12);
    }
}
