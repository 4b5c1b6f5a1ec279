//! Newton-form interpolation.
//!
//! For nodes `x_1..x_n` the interpolant is
//! `N(x) = a_1 + (x - x_1)(a_2 + (x - x_2)(a_3 + ...))`. The coefficients come from
//! forward substitution on the lower-triangular system `N(x_j) = y_j`: node `j`
//! contributes `a_j = (y_j - N_{j-1}(x_j)) / prod_{i<j}(x_j - x_i)`. Fitting and
//! appending share one kernel, so a one-shot fit and a node-by-node build give
//! bitwise-identical coefficients.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct NewtonInterpolant {
    nodes: Vec<f64>,
    coeffs: Vec<f64>,
}

impl NewtonInterpolant {
    /// Interpolates `values` at `nodes`, taken in the given order.
    pub fn fit(nodes: &[f64], values: &[f64]) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::invalid(format!(
                "fit needs equally many nodes and values, got {} and {}",
                nodes.len(),
                values.len()
            )));
        }
        if nodes.is_empty() {
            return Err(Error::invalid("fit needs at least one node"));
        }
        let mut sorted = nodes.to_vec();
        sorted.sort_by(f64::total_cmp);
        if let Some(pair) = sorted.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::DuplicateNode(pair[0]));
        }

        let mut p = NewtonInterpolant {
            nodes: Vec::with_capacity(nodes.len()),
            coeffs: Vec::with_capacity(nodes.len()),
        };
        p.nodes.push(nodes[0]);
        p.coeffs.push(values[0]);
        for (&x, &y) in nodes.iter().zip(values).skip(1) {
            p.push(x, y)?;
        }
        Ok(p)
    }

    /// A new interpolant with one more node; existing coefficients are unchanged.
    pub fn append_node(&self, x_new: f64, y_new: f64) -> Result<Self> {
        let mut p = self.clone();
        p.push(x_new, y_new)?;
        Ok(p)
    }

    /// In-place form of [`NewtonInterpolant::append_node`].
    pub fn push(&mut self, x_new: f64, y_new: f64) -> Result<()> {
        let (value, product) = self.value_and_node_product(x_new)?;
        self.nodes.push(x_new);
        self.coeffs.push((y_new - value) / product);
        Ok(())
    }

    /// Horner evaluation fused with the node polynomial `prod_i (x - x_i)`.
    fn value_and_node_product(&self, x: f64) -> Result<(f64, f64)> {
        let n = self.nodes.len();
        let last = x - self.nodes[n - 1];
        if last == 0.0 {
            return Err(Error::DuplicateNode(x));
        }
        let mut value = self.coeffs[n - 1];
        let mut product = last;
        for k in (0..n - 1).rev() {
            let d = x - self.nodes[k];
            if d == 0.0 {
                return Err(Error::DuplicateNode(x));
            }
            value = value * d + self.coeffs[k];
            product *= d;
        }
        Ok((value, product))
    }

    /// Horner scheme: `n - 1` multiply-add steps.
    pub fn evaluate(&self, x: f64) -> f64 {
        let n = self.coeffs.len();
        let mut r = self.coeffs[n - 1];
        for k in (0..n - 1).rev() {
            r = r * (x - self.nodes[k]) + self.coeffs[k];
        }
        r
    }

    pub fn evaluate_grid(&self, xs: &[f64]) -> Vec<f64> {
        xs.iter().map(|&x| self.evaluate(x)).collect()
    }

    /// Largest defect `|N(x_j) - y_j|` of the interpolation condition.
    pub fn residual(&self, values: &[f64]) -> f64 {
        self.nodes
            .iter()
            .zip(values)
            .map(|(&x, &y)| (self.evaluate(x) - y).abs())
            .fold(0.0, f64::max)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}
