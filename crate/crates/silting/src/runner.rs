use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use silting_core::classify::RootRunner;

/// Runs search roots on a rayon pool. Results come back in root order, so
/// output does not depend on the number of workers.
pub struct RayonRunner {
    pool: ThreadPool,
}

impl RayonRunner {
    /// `None` or `Some(0)` means one worker per core.
    pub fn new(workers: Option<usize>) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = ThreadPoolBuilder::new()
            .num_threads(workers.unwrap_or(0))
            .build()?;
        Ok(RayonRunner { pool })
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl RootRunner for RayonRunner {
    fn run<T, G>(&self, roots: usize, task: G) -> Vec<T>
    where
        T: Send,
        G: Fn(usize) -> T + Sync + Send,
    {
        self.pool
            .install(|| (0..roots).into_par_iter().map(&task).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_root_order() {
        let r = RayonRunner::new(Some(4)).unwrap();
        assert_eq!(r.workers(), 4);
        assert_eq!(r.run(100, |i| i * i), (0..100).map(|i| i * i).collect::<Vec<_>>());
    }
}
