use std::num::NonZeroUsize;

/// Worker configuration for the enumerators.
///
/// Search trees are cut at `split_depth`; every subtree below the cut is an
/// independent job and results are merged in job order, so outputs do not
/// depend on `threads`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub threads: usize,
    pub split_depth: usize,
    /// Count bridges even when the class-𝒢 certificate fails (logged).
    pub skip_class_check: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            threads: std::thread::available_parallelism().map_or(1, NonZeroUsize::get),
            split_depth: 3,
            skip_class_check: false,
        }
    }
}

impl EnumOptions {
    pub fn with_threads(threads: usize) -> Self {
        EnumOptions {
            threads: threads.max(1),
            ..EnumOptions::default()
        }
    }

    pub(crate) fn install<R, F>(&self, f: F) -> R
    where
        R: Send,
        F: FnOnce() -> R + Send,
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads.max(1))
            .build()
            .expect("failed to start worker pool")
            .install(f)
    }
}
