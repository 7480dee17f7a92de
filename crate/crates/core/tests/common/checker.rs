use fbsplit::geometry::Halfspace;
use fbsplit::vector::{dot, norm, norm_sq, sub};
use fbsplit::{IterationTrace, LineSearchResult, Observer};

/// Observer asserting the per-step guarantees of both methods against the
/// known solution `x* = 0`.
pub struct Checker {
    pub delta: f64,
    pub beta_upper: f64,
    pub radius: f64,
    pub max_depth: u32,
    pub searches: usize,
    pub halfspaces: usize,
    /// Largest `⟨g, 0 - x̄⟩` seen; separation requires it to stay <= 1e-9.
    pub worst_separation: f64,
    /// Smallest `slope - threshold` at accepted trials.
    pub worst_acceptance: f64,
    /// Smallest margin in the corollary bound.
    pub worst_corollary: f64,
    pub minimality_failures: usize,
}

impl Checker {
    pub fn new(delta: f64, beta_upper: f64, radius: f64) -> Self {
        Checker {
            delta,
            beta_upper,
            radius,
            max_depth: 0,
            searches: 0,
            halfspaces: 0,
            worst_separation: f64::NEG_INFINITY,
            worst_acceptance: f64::INFINITY,
            worst_corollary: f64::INFINITY,
            minimality_failures: 0,
        }
    }

    pub fn assert_ok(&self) {
        assert!(self.worst_separation <= 1e-9, "separation {}", self.worst_separation);
        assert!(self.worst_acceptance >= -1e-12, "acceptance {}", self.worst_acceptance);
        assert!(self.worst_corollary >= -1e-12, "corollary {}", self.worst_corollary);
        assert_eq!(self.minimality_failures, 0);
        assert!(self.max_depth <= 60, "depth {}", self.max_depth);
    }
}

impl Observer for Checker {
    fn line_search(&mut self, _k: usize, _i: usize, x: &[f64], j_point: &[f64], r: &LineSearchResult) {
        self.searches += 1;
        self.max_depth = self.max_depth.max(r.j);
        self.worst_acceptance = self.worst_acceptance.min(r.slope - r.threshold);
        match (r.j, r.rejected_slope) {
            (0, None) => {}
            (_, Some(prev)) if prev < r.threshold => {}
            _ => self.minimality_failures += 1,
        }
        assert!(norm(&r.ubar) <= self.radius);
        let bound = r.alpha * self.delta / self.beta_upper * norm_sq(&sub(x, j_point));
        let lhs = dot(&r.normal, &sub(x, &r.xbar));
        self.worst_corollary = self.worst_corollary.min(lhs - bound);
    }

    fn halfspace(&mut self, _k: usize, _i: usize, h: &Halfspace) {
        self.halfspaces += 1;
        let origin = vec![0.0; h.dim()];
        self.worst_separation = self.worst_separation.max(h.signed_gap(&origin));
    }
}

/// Largest increase of the distance to the target between consecutive records.
pub fn worst_fejer_increase(trace: &IterationTrace) -> f64 {
    trace
        .records
        .windows(2)
        .map(|w| w[1].fejer_dist.unwrap() - w[0].fejer_dist.unwrap())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Max step over the last 10% of records vs. the median over the first 10%.
pub fn vanishing_steps(trace: &IterationTrace) -> (f64, f64) {
    let steps: Vec<f64> = trace.records.iter().filter_map(|r| r.step_norm).collect();
    let tenth = (steps.len() / 10).max(1);
    let mut head = steps[..tenth].to_vec();
    head.sort_by(f64::total_cmp);
    let median = head[head.len() / 2];
    let tail_max = steps[steps.len() - tenth..].iter().copied().fold(0.0, f64::max);
    (tail_max, median)
}
