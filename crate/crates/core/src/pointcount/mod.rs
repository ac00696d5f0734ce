//! Point counts of single fibers over finite fields, and the identities they
//! must satisfy: the trace identity for the middle cohomology, the Weil
//! bound, and stability under the diagonal group action.

mod action;
mod fast;
mod fiber;
mod field;
mod naive;
mod tower;

pub use action::{gamma_w_elements, group_action_check, group_action_check_all, roots_of_unity};
pub use fast::{count_projective_fast, fast_counter_supports, MAX_FAST_PRIME};
pub use fiber::{
    lefschetz_sum, middle_betti, middle_trace, weil_bound_holds, FiberCount, FiberSpec, Strategy, DEFAULT_BUDGET,
};
pub use field::{field_make, is_irreducible, is_prime, Elem, FiniteField, MAX_EXTENSION_ORDER};
pub use naive::{count_affine_cone, count_projective_naive, fiber_points, normalize};
pub use tower::{embed, tower_cost, tower_counts};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Maximum number of candidates one call may evaluate.
    pub budget: u64,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { workers: None, budget: DEFAULT_BUDGET }
    }
}

pub(crate) fn run_in_pool<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(job()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::Usage(format!("cannot start {w} workers: {e}")))?;
            Ok(pool.install(job))
        }
    }
}
