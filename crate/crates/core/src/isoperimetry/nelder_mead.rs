//! Derivative-free simplex minimization (Nelder–Mead) with the
//! dimension-adaptive coefficients of Gao and Han, which behave much better
//! than the classic `(1, 2, ½, ½)` choice beyond a handful of dimensions.

#[derive(Clone, Debug)]
pub struct NelderMead {
    /// Edge length of the initial simplex.
    pub initial_step: f64,
    /// Converged once every vertex is within `xtol` of the best one and the
    /// function values span at most `ftol`.
    pub xtol: f64,
    pub ftol: f64,
    pub max_evals: usize,
}

impl Default for NelderMead {
    fn default() -> Self {
        NelderMead {
            initial_step: 0.1,
            xtol: 1e-10,
            ftol: 1e-15,
            max_evals: 200_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub evals: usize,
    pub iterations: usize,
    pub converged: bool,
}

impl NelderMead {
    pub fn minimize<F>(&self, mut f: F, x0: &[f64]) -> Minimum
    where
        F: FnMut(&[f64]) -> f64,
    {
        let n = x0.len();
        let nf = n as f64;
        let (alpha, gamma, rho, sigma) = if n >= 2 {
            (1.0, 1.0 + 2.0 / nf, 0.75 - 1.0 / (2.0 * nf), 1.0 - 1.0 / nf)
        } else {
            (1.0, 2.0, 0.5, 0.5)
        };

        let mut evals = 0usize;
        let mut eval = |x: &[f64], evals: &mut usize| {
            *evals += 1;
            let v = f(x);
            if v.is_nan() {
                f64::INFINITY
            } else {
                v
            }
        };

        let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
        simplex.push(x0.to_vec());
        for i in 0..n {
            let mut x = x0.to_vec();
            x[i] += self.initial_step;
            simplex.push(x);
        }
        let mut values: Vec<f64> = simplex.iter().map(|x| eval(x, &mut evals)).collect();

        let mut iterations = 0;
        let mut converged = false;
        let mut centroid = vec![0.0; n];
        let mut trial = vec![0.0; n];
        let mut trial2 = vec![0.0; n];

        while evals < self.max_evals {
            iterations += 1;
            let mut order: Vec<usize> = (0..=n).collect();
            order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
            simplex = order.iter().map(|&i| simplex[i].clone()).collect();
            values = order.iter().map(|&i| values[i]).collect();

            let spread = values[n] - values[0];
            let size = simplex[1..]
                .iter()
                .flat_map(|x| x.iter().zip(&simplex[0]).map(|(a, b)| (a - b).abs()))
                .fold(0.0, f64::max);
            if size <= self.xtol && spread <= self.ftol {
                converged = true;
                break;
            }

            centroid.iter_mut().for_each(|c| *c = 0.0);
            for x in &simplex[..n] {
                for (c, v) in centroid.iter_mut().zip(x) {
                    *c += v / nf;
                }
            }

            for j in 0..n {
                trial[j] = centroid[j] + alpha * (centroid[j] - simplex[n][j]);
            }
            let fr = eval(&trial, &mut evals);

            if fr < values[0] {
                for j in 0..n {
                    trial2[j] = centroid[j] + gamma * (trial[j] - centroid[j]);
                }
                let fe = eval(&trial2, &mut evals);
                if fe < fr {
                    simplex[n].copy_from_slice(&trial2);
                    values[n] = fe;
                } else {
                    simplex[n].copy_from_slice(&trial);
                    values[n] = fr;
                }
                continue;
            }
            if fr < values[n - 1] {
                simplex[n].copy_from_slice(&trial);
                values[n] = fr;
                continue;
            }

            let outside = fr < values[n];
            for j in 0..n {
                trial2[j] = if outside {
                    centroid[j] + rho * (trial[j] - centroid[j])
                } else {
                    centroid[j] + rho * (simplex[n][j] - centroid[j])
                };
            }
            let fc = eval(&trial2, &mut evals);
            if (outside && fc <= fr) || (!outside && fc < values[n]) {
                simplex[n].copy_from_slice(&trial2);
                values[n] = fc;
                continue;
            }

            // shrink toward the best vertex
            for i in 1..=n {
                for j in 0..n {
                    simplex[i][j] = simplex[0][j] + sigma * (simplex[i][j] - simplex[0][j]);
                }
                values[i] = eval(&simplex[i], &mut evals);
            }
        }

        let best = (0..=n)
            .min_by(|&a, &b| values[a].total_cmp(&values[b]))
            .unwrap_or(0);
        Minimum {
            x: simplex[best].clone(),
            value: values[best],
            evals,
            iterations,
            converged,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_bowl() {
        let nm = NelderMead::default();
        let m = nm.minimize(
            |x| (x[0] - 1.0).powi(2) + 10.0 * (x[1] + 2.0).powi(2) + (x[2] - 0.5).powi(2),
            &[0.0, 0.0, 0.0],
        );
        assert!(m.converged);
        assert!((m.x[0] - 1.0).abs() < 1e-7);
        assert!((m.x[1] + 2.0).abs() < 1e-7);
        assert!((m.x[2] - 0.5).abs() < 1e-7);
    }

    #[test]
    fn rosenbrock() {
        let nm = NelderMead {
            initial_step: 0.5,
            ..NelderMead::default()
        };
        let m = nm.minimize(
            |x| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2),
            &[-1.2, 1.0],
        );
        assert!((m.x[0] - 1.0).abs() < 1e-6 && (m.x[1] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn respects_eval_budget() {
        let nm = NelderMead {
            max_evals: 50,
            ..NelderMead::default()
        };
        let m = nm.minimize(|x| x.iter().map(|v| v * v).sum(), &[3.0; 6]);
        assert!(!m.converged);
        assert!(m.evals <= 50 + 7);
    }
}
