//! Execution strategy for the exhaustive sweeps.
//!
//! Every sweep maps independent work items and then reduces the results in
//! input order, so reports are identical under either strategy.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled; sequential otherwise.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Order-preserving map over `0..len`.
    pub fn map_range<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(f).collect()
            }
            _ => (0..len).map(f).collect(),
        }
    }

    /// Order-preserving map over a slice.
    pub fn map<I, T, F>(self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_and_keep_order() {
        let seq = Exec::Sequential.map_range(1000, |i| i * i);
        let par = Exec::Parallel.map_range(1000, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(seq[31], 961);
        let words = ["a", "bb", "ccc"];
        assert_eq!(Exec::Parallel.map(&words, |w| w.len()), vec![1, 2, 3]);
    }
}
