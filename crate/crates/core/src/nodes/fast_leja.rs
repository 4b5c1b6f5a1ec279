use super::{prefer, Family, Interval, NodeSequence};
use crate::error::{Error, Result};

/// A midpoint candidate between two coordinate-adjacent selected nodes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Candidate {
    position: f64,
    log_mdist: f64,
    left: f64,
    right: f64,
}

impl Candidate {
    fn between(left: f64, right: f64, selected: &[f64]) -> Self {
        let position = 0.5 * (left + right);
        Candidate {
            position,
            log_mdist: super::log_multiplicative_distance(position, selected),
            left,
            right,
        }
    }

    /// Position in standard coordinates.
    pub fn position(&self) -> f64 {
        self.position
    }

    /// Running `sum_k ln|position - x_k|` over all selected nodes.
    pub fn log_mdist(&self) -> f64 {
        self.log_mdist
    }

    /// The adjacent selected nodes this candidate bisects.
    pub fn neighbors(&self) -> (f64, f64) {
        (self.left, self.right)
    }
}

/// Working state of the Fast Leja recursion.
///
/// The recursion always runs on the standard interval `[-2, 2]`; [`CandidatePool::selected`]
/// maps the result onto the target interval. Building once on the standard
/// interval makes every target interval an exact affine image of the same
/// sequence, which is what lets a stored node library serve any interval.
#[derive(Clone, Debug)]
pub struct CandidatePool {
    interval: Interval,
    selected: Vec<f64>,
    candidates: Vec<Candidate>,
}

impl CandidatePool {
    /// The pool holding `S_2 = [hi, lo]` and the single candidate at the midpoint.
    pub fn new(interval: Interval) -> Self {
        let selected = vec![2.0, -2.0];
        let candidates = vec![Candidate::between(-2.0, 2.0, &selected)];
        CandidatePool {
            interval,
            selected,
            candidates,
        }
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn len(&self) -> usize {
        self.selected.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selected.is_empty()
    }

    /// Selected nodes in standard coordinates, in selection order.
    pub fn standard_nodes(&self) -> &[f64] {
        &self.selected
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    /// The selected nodes on the pool's interval.
    pub fn selected(&self) -> NodeSequence {
        self.selected_prefix(self.selected.len())
    }

    /// The first `n` selected nodes on the pool's interval.
    pub fn selected_prefix(&self, n: usize) -> NodeSequence {
        let n = n.min(self.selected.len());
        let standard = NodeSequence::new_unchecked(
            Interval::STANDARD,
            Family::FastLeja,
            self.selected[..n].to_vec(),
        );
        standard.map_to(self.interval)
    }

    /// Selects one more node, returning it in standard coordinates.
    pub fn select_next(&mut self) -> f64 {
        let mut best = 0;
        for (i, c) in self.candidates.iter().enumerate().skip(1) {
            let b = &self.candidates[best];
            if prefer(c.log_mdist, c.position, b.log_mdist, b.position) {
                best = i;
            }
        }
        let chosen = self.candidates.swap_remove(best);
        let x = chosen.position;
        for c in &mut self.candidates {
            c.log_mdist += (c.position - x).abs().ln();
        }
        self.selected.push(x);
        for (left, right) in [(chosen.left, x), (x, chosen.right)] {
            let c = Candidate::between(left, right, &self.selected);
            // Adjacent nodes closer than one ulp leave no room for a midpoint.
            if c.position != left && c.position != right {
                self.candidates.push(c);
            }
        }
        x
    }

    /// Selects `extra` further nodes; the existing prefix is left untouched.
    pub fn extend(&mut self, extra: usize) {
        self.selected.reserve(extra);
        self.candidates.reserve(extra);
        for _ in 0..extra {
            self.select_next();
        }
    }

    /// Grows the pool until it holds at least `n` nodes.
    pub fn extend_to(&mut self, n: usize) {
        let extra = n.saturating_sub(self.selected.len());
        self.extend(extra);
    }
}

/// The first `n` Fast Leja points on `interval`.
pub fn fast_leja(interval: Interval, n: usize) -> Result<NodeSequence> {
    if n < 2 {
        return Err(Error::invalid(format!("fast_leja requires n >= 2, got {n}")));
    }
    let mut pool = CandidatePool::new(interval);
    pool.extend_to(n);
    Ok(pool.selected())
}

/// Continues the recursion of `pool` by `extra` nodes.
pub fn fast_leja_extend(mut pool: CandidatePool, extra: usize) -> CandidatePool {
    pool.extend(extra);
    pool
}
