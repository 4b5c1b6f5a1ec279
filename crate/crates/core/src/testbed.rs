//! Benchmark functions, evaluation grids and normalized discrete error norms.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::newton::NewtonInterpolant;
use crate::nodes::{Family, Interval, NodeSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TestFunction {
    /// `1 / (1 + 6.25 x^2)`
    Runge,
    /// `1` for `x > 0`, `0` for `x <= 0`
    Heaviside,
    /// `x - floor(x)`
    Sawtooth,
    /// `sqrt(|x|)`
    SqrtAbs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothness {
    Analytic,
    Discontinuous,
    /// Continuous but only Hölder, not differentiable.
    Holder,
}

impl TestFunction {
    pub const ALL: [TestFunction; 4] = [
        TestFunction::Runge,
        TestFunction::Heaviside,
        TestFunction::Sawtooth,
        TestFunction::SqrtAbs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TestFunction::Runge => "runge",
            TestFunction::Heaviside => "heaviside",
            TestFunction::Sawtooth => "sawtooth",
            TestFunction::SqrtAbs => "sqrtabs",
        }
    }

    pub fn smoothness(self) -> Smoothness {
        match self {
            TestFunction::Runge => Smoothness::Analytic,
            TestFunction::Heaviside | TestFunction::Sawtooth => Smoothness::Discontinuous,
            TestFunction::SqrtAbs => Smoothness::Holder,
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            TestFunction::Runge => 1.0 / (1.0 + 6.25 * x * x),
            TestFunction::Heaviside => {
                if x > 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            TestFunction::Sawtooth => x - x.floor(),
            TestFunction::SqrtAbs => x.abs().sqrt(),
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TestFunction::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown test function `{s}`")))
    }
}

/// Evaluates the test function named `id`.
pub fn test_function(id: &str, x: f64) -> Result<f64> {
    Ok(id.parse::<TestFunction>()?.eval(x))
}

/// `2n + 1` equispaced points on `[-2, 2]`; symmetric, with `0` and both
/// endpoints represented exactly.
pub fn standard_grid(n: usize) -> Vec<f64> {
    let n = n.max(1);
    let nf = n as f64;
    (0..=2 * n)
        .map(|i| 2.0 * (i as f64 - nf) / nf)
        .collect()
}

/// `2n + 1` equispaced points from `lo` to `hi` inclusive, i.e. `2n` strips.
pub fn evaluation_grid(interval: Interval, n: usize) -> Vec<f64> {
    let grid = standard_grid(n);
    if interval.is_standard() {
        return grid;
    }
    grid.into_iter().map(|u| interval.from_standard(u)).collect()
}

/// Discrete norms normalized so that the constant `1` has norm `1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Norms {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

/// Trapezoidal `L1` and `L2` norms and the sample maximum, for samples on an
/// equispaced grid covering the whole interval.
///
/// The normalized trapezoid weights `w_i / L` are `1 / N` inside and `1 / 2N` at
/// the ends for `N` strips, independent of the interval, so the sums are formed
/// in that order: integer-valued sample sums stay exact.
pub fn norms(errors: &[f64]) -> Result<Norms> {
    if errors.len() < 2 {
        return Err(Error::invalid(format!(
            "norms need at least 2 samples, got {}",
            errors.len()
        )));
    }
    let strips = (errors.len() - 1) as f64;
    let (first, last) = (errors[0].abs(), errors[errors.len() - 1].abs());
    let inner = &errors[1..errors.len() - 1];

    let abs_sum: f64 = inner.iter().map(|e| e.abs()).sum();
    let sq_sum: f64 = inner.iter().map(|e| e * e).sum();
    let l1 = (abs_sum + 0.5 * (first + last)) / strips;
    let l2 = ((sq_sum + 0.5 * (first * first + last * last)) / strips).sqrt();
    let linf = errors.iter().fold(0.0f64, |m, e| {
        if m.is_nan() || e.is_nan() {
            f64::NAN
        } else {
            m.max(e.abs())
        }
    });
    Ok(Norms { l1, l2, linf })
}

/// One row of a convergence study.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorRecord {
    pub function: TestFunction,
    pub family: Family,
    pub n: usize,
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
    /// Largest defect of the interpolation condition at the nodes.
    pub residual: f64,
    /// Seconds spent fitting and evaluating.
    pub wall_time: f64,
}

/// Interpolates `function` at `nodes` and measures the error on the
/// `2n`-strip grid of the node interval.
///
/// The fit and the grid evaluation run in standard coordinates; the function
/// itself is sampled at the original coordinates.
pub fn measure(function: TestFunction, nodes: &NodeSequence) -> Result<ErrorRecord> {
    let start = Instant::now();
    let interval = nodes.interval();
    let values: Vec<f64> = nodes.values().iter().map(|&x| function.eval(x)).collect();
    let p = NewtonInterpolant::fit(&nodes.standard_values(), &values)?;

    let errors: Vec<f64> = standard_grid(nodes.len())
        .into_iter()
        .map(|u| {
            let x = if interval.is_standard() {
                u
            } else {
                interval.from_standard(u)
            };
            p.evaluate(u) - function.eval(x)
        })
        .collect();
    let Norms { l1, l2, linf } = norms(&errors)?;
    let residual = p.residual(&values);

    Ok(ErrorRecord {
        function,
        family: nodes.family(),
        n: nodes.len(),
        l1,
        l2,
        linf,
        residual,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nodes::fast_leja;

    #[test]
    fn function_values() {
        assert_eq!(TestFunction::Runge.eval(0.0), 1.0);
        assert_eq!(TestFunction::Runge.eval(2.0), 0.038461538461538464);
        assert_eq!(TestFunction::Heaviside.eval(0.0), 0.0);
        assert_eq!(TestFunction::Heaviside.eval(1e-300), 1.0);
        assert_eq!(TestFunction::Sawtooth.eval(-0.5), 0.5);
        assert_eq!(TestFunction::Sawtooth.eval(1.0), 0.0);
        assert_eq!(TestFunction::SqrtAbs.eval(-4.0), 2.0);
        assert_eq!(test_function("runge", 0.0).unwrap(), 1.0);
        assert!(matches!(
            test_function("cosine", 0.0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn grids() {
        assert_eq!(evaluation_grid(Interval::STANDARD, 1), vec![-2.0, 0.0, 2.0]);
        assert_eq!(
            evaluation_grid(Interval::STANDARD, 2),
            vec![-2.0, -1.0, 0.0, 1.0, 2.0]
        );
        assert_eq!(
            evaluation_grid(Interval::new(0.0, 1.0).unwrap(), 2),
            vec![0.0, 0.25, 0.5, 0.75, 1.0]
        );
        for n in [3, 7, 100, 4097] {
            let g = standard_grid(n);
            assert_eq!(g.len(), 2 * n + 1);
            assert_eq!(g[n], 0.0);
            assert_eq!((g[0], g[2 * n]), (-2.0, 2.0));
        }
    }

    #[test]
    fn norms_of_constant_are_one() {
        for n in [1, 3, 10, 4096] {
            let ones = vec![1.0; 2 * n + 1];
            let r = norms(&ones).unwrap();
            assert_eq!((r.l1, r.l2, r.linf), (1.0, 1.0, 1.0));
        }
    }

    #[test]
    fn norms_of_identity_and_step() {
        let grid = standard_grid(2000);
        let r = norms(&grid).unwrap();
        assert!((r.l1 - 1.0).abs() < 1e-3);
        assert!((r.l2 - 1.1547005383792515).abs() < 1e-3);
        assert_eq!(r.linf, 2.0);

        let step: Vec<f64> = grid.iter().map(|&x| TestFunction::Heaviside.eval(x)).collect();
        let r = norms(&step).unwrap();
        assert!((r.l1 - 0.5).abs() < 1e-3);
        assert!((r.l2 - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-3);
        assert_eq!(r.linf, 1.0);
    }

    #[test]
    fn norms_need_two_samples() {
        assert!(norms(&[1.0]).is_err());
        assert!(norms(&[]).is_err());
    }

    #[test]
    fn norms_propagate_non_finite() {
        let r = norms(&[0.0, f64::NAN, 1.0]).unwrap();
        assert!(r.linf.is_nan());
        let r = norms(&[0.0, f64::INFINITY, 1.0]).unwrap();
        assert_eq!(r.linf, f64::INFINITY);
    }

    #[test]
    fn trapezoid_defect_shrinks_quadratically() {
        // l2 of x^2 on [-2, 2] is sqrt(16 / 5).
        let exact = (16.0f64 / 5.0).sqrt();
        let defect = |n: usize| {
            let e: Vec<f64> = standard_grid(n).iter().map(|x| x * x).collect();
            (norms(&e).unwrap().l2 - exact).abs()
        };
        for n in [16, 32, 64, 128] {
            let ratio = defect(n) / defect(2 * n);
            assert!((ratio - 4.0).abs() < 0.1, "n={n} ratio={ratio}");
        }
    }

    #[test]
    fn measure_runge_on_two_nodes() {
        let nodes = fast_leja(Interval::STANDARD, 2).unwrap();
        let r = measure(TestFunction::Runge, &nodes).unwrap();
        assert_eq!(r.n, 2);
        assert_eq!(r.family, Family::FastLeja);
        assert_eq!(r.linf, 1.0 - 1.0 / 26.0);
        assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn measure_on_mapped_interval_matches_standard() {
        // sqrt(|x - 2|) on [0, 4] is the standard-interval sqrtabs shifted by 2.
        let i = Interval::new(0.0, 4.0).unwrap();
        let standard = measure(TestFunction::SqrtAbs, &fast_leja(Interval::STANDARD, 64).unwrap()).unwrap();
        let shifted_nodes = fast_leja(i, 64).unwrap();
        let values: Vec<f64> = shifted_nodes.values().iter().map(|&x| (x - 2.0).abs().sqrt()).collect();
        let p = NewtonInterpolant::fit(&shifted_nodes.standard_values(), &values).unwrap();
        let errors: Vec<f64> = evaluation_grid(i, 64)
            .iter()
            .map(|&x| p.evaluate(i.to_standard(x)) - (x - 2.0).abs().sqrt())
            .collect();
        let shifted = norms(&errors).unwrap();
        assert!((shifted.linf - standard.linf).abs() < 1e-12);
        assert!((shifted.l1 - standard.l1).abs() < 1e-12);
    }
}
