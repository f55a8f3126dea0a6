use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;

/// Outcome of an exhaustive sweep. Serializes to
/// `{theorem, grid, checked, counterexamples}`; timing and the count of
/// cells outside the hypotheses stay out of the payload so that repeated
/// runs are byte-identical.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport<C> {
    pub theorem: String,
    pub grid: BTreeMap<String, i64>,
    pub checked: usize,
    pub counterexamples: Vec<C>,
    /// Cells visited outside the hypotheses where the claimed conclusion
    /// fails. Expected; never counted as counterexamples.
    #[serde(skip)]
    pub outside_hypothesis: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl<C> VerifyReport<C> {
    pub fn is_verified(&self) -> bool {
        self.counterexamples.is_empty()
    }
}
