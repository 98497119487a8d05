//! Sequential or rayon-backed evaluation of data-parallel loops.
//!
//! With the `parallel` feature off only [`Execution::Sequential`] exists and
//! rayon is not linked.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Defaults to `Parallel` when the feature is enabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Execution {
    /// `range.flat_map(f)`, results in index order for both modes.
    pub fn flat_map_range<R, I, F>(self, range: Range<usize>, f: F) -> Vec<R>
    where
        F: Fn(usize) -> I + Sync + Send,
        I: IntoIterator<Item = R>,
        R: Send,
    {
        match self {
            Execution::Sequential => range.flat_map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => range.into_par_iter().flat_map_iter(f).collect(),
        }
    }

    /// `items.iter().map(f)`, order preserved.
    pub fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        F: Fn(&T) -> R + Sync + Send,
        R: Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let f = |i: usize| (0..i % 4).map(move |j| i * 10 + j);
        let seq = Execution::Sequential.flat_map_range(0..200, f);
        assert_eq!(Execution::default().flat_map_range(0..200, f), seq);
        let xs: Vec<u64> = (0..100).collect();
        assert_eq!(
            Execution::default().map_slice(&xs, |x| x * x),
            Execution::Sequential.map_slice(&xs, |x| x * x)
        );
    }
}
