/// Feasibility guards for the exponential operations.
///
/// Every guarded operation refuses work beyond these thresholds with
/// [`Error::TooLarge`](crate::Error::TooLarge) instead of truncating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Ground size for the definitional `2ⁿ` menu sweep of the top-difference metric.
    pub direct_max_n: usize,
    /// Ground size for sweeping every complete preorder (Fubini growth).
    pub total_enum_max_n: usize,
    /// Ground size for sweeping every preorder.
    pub preorder_enum_max_n: usize,
    /// Ground size for the Kemeny-Snell-Bogart minimizer sweep.
    pub ksb_sweep_max_n: usize,
    /// Number of completions an enumeration may produce.
    pub max_completions: u128,
    /// Steps allowed in the order-ideal search behind the index of a general preorder.
    pub max_search_steps: u64,
    /// Layer size for the per-layer subset sweep of the canonical-completion condition.
    pub condition_star_max_layer: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            direct_max_n: 20,
            total_enum_max_n: 9,
            preorder_enum_max_n: 4,
            ksb_sweep_max_n: 5,
            max_completions: 2_000_000,
            max_search_steps: 50_000_000,
            condition_star_max_layer: 20,
        }
    }
}

impl Limits {
    /// Raises (or lowers) every ground-size guard to `n`.
    pub fn with_max_n(mut self, n: usize) -> Self {
        self.direct_max_n = n;
        self.total_enum_max_n = n;
        self.preorder_enum_max_n = n;
        self.ksb_sweep_max_n = n;
        self
    }
}
