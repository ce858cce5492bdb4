use super::{check_dimension, OptimizeResult, OptimizerConfig, OptimizerKind, Tracker};
use crate::error::Result;

struct Vertex {
    x: Vec<f64>,
    f: f64,
}

/// Minimizes `objective` with the Nelder-Mead simplex method.
///
/// The initial simplex is `x0` plus `x0 + initial_step * e_i` for every coordinate.
/// Stops when the evaluation budget is spent, or when the simplex values span less
/// than `config.tolerance` and the simplex fits within `config.x_tolerance` of its
/// best vertex. The value test alone would stop on a simplex straddling a minimum
/// symmetrically.
pub fn nelder_mead<F>(objective: F, x0: &[f64], config: &OptimizerConfig) -> Result<OptimizeResult>
where
    F: FnMut(&[f64]) -> f64,
{
    config.validate()?;
    check_dimension(x0)?;
    let OptimizerKind::NelderMead {
        reflection,
        expansion,
        contraction,
        shrink,
        initial_step,
    } = config.kind
    else {
        return super::spsa(objective, x0, config);
    };
    let mut tracker = Tracker::new(objective, config.max_evals);
    let n = x0.len();

    let mut simplex = Vec::with_capacity(n + 1);
    simplex.push(Vertex {
        x: x0.to_vec(),
        f: tracker.eval(x0)?,
    });
    for i in 0..n {
        if tracker.exhausted() {
            return Ok(tracker.finish());
        }
        let mut x = x0.to_vec();
        x[i] += initial_step;
        let f = tracker.eval(&x)?;
        simplex.push(Vertex { x, f });
    }

    let along = |from: &[f64], to: &[f64], t: f64| -> Vec<f64> {
        from.iter().zip(to).map(|(a, b)| a + t * (b - a)).collect()
    };

    loop {
        simplex.sort_by(|a, b| a.f.total_cmp(&b.f));
        if tracker.exhausted() || converged(&simplex, config) {
            break;
        }
        let mut centroid = vec![0.0; n];
        for v in &simplex[..n] {
            for (c, xi) in centroid.iter_mut().zip(&v.x) {
                *c += xi / n as f64;
            }
        }
        let worst = &simplex[n];
        let xr = along(&centroid, &worst.x, -reflection);
        let fr = tracker.eval(&xr)?;

        if fr < simplex[0].f {
            if tracker.exhausted() {
                simplex[n] = Vertex { x: xr, f: fr };
                break;
            }
            let xe = along(&centroid, &xr, expansion);
            let fe = tracker.eval(&xe)?;
            simplex[n] = if fe < fr {
                Vertex { x: xe, f: fe }
            } else {
                Vertex { x: xr, f: fr }
            };
            continue;
        }
        if fr < simplex[n - 1].f {
            simplex[n] = Vertex { x: xr, f: fr };
            continue;
        }
        if tracker.exhausted() {
            break;
        }
        // contraction, outside if the reflection improved on the worst point
        let (xc, fc_target) = if fr < simplex[n].f {
            (along(&centroid, &xr, contraction), fr)
        } else {
            (along(&centroid, &simplex[n].x, contraction), simplex[n].f)
        };
        let fc = tracker.eval(&xc)?;
        if fc < fc_target {
            simplex[n] = Vertex { x: xc, f: fc };
            continue;
        }
        let best = simplex[0].x.clone();
        for v in simplex.iter_mut().skip(1) {
            if tracker.exhausted() {
                break;
            }
            v.x = along(&best, &v.x, shrink);
            v.f = tracker.eval(&v.x)?;
        }
    }
    Ok(tracker.finish())
}

fn converged(simplex: &[Vertex], config: &OptimizerConfig) -> bool {
    let best = &simplex[0];
    let f_spread = simplex[simplex.len() - 1].f - best.f;
    let x_spread = simplex[1..]
        .iter()
        .flat_map(|v| v.x.iter().zip(&best.x).map(|(a, b)| (a - b).abs()))
        .fold(0.0, f64::max);
    f_spread < config.tolerance && x_spread <= config.x_tolerance
}
