//! Restricted growth strings with a capped alphabet.
//!
//! A string `a` of length `n` qualifies when `a[0] = 0`, every `a[i]` is at
//! most one more than the maximum of `a[..i]`, and every entry is below `k`.
//! These are exactly the set partitions of `n` items into at most `k` blocks,
//! so walking them visits every coloring with at most `k` colors once up to
//! renaming of the colors.

/// Lexicographic walk over restricted growth strings.
///
/// Use [`RestrictedGrowth::current`] and [`RestrictedGrowth::advance`] in
/// hot loops; the `Iterator` impl clones each string.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    a: Vec<usize>,
    // prefix maxima: max[i] = max(a[0..=i])
    max: Vec<usize>,
    k: usize,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl RestrictedGrowth {
    pub fn new(n: usize, k: usize) -> Self {
        let state = if n > 0 && k == 0 { State::Done } else { State::Fresh };
        RestrictedGrowth {
            a: vec![0; n],
            max: vec![0; n],
            k,
            state,
        }
    }

    pub fn current(&self) -> &[usize] {
        &self.a
    }

    /// Moves to the next string; false once the walk is exhausted. The first
    /// call positions on the all-zero string.
    pub fn advance(&mut self) -> bool {
        match self.state {
            State::Done => return false,
            State::Fresh => {
                self.state = State::Running;
                return true;
            }
            State::Running => {}
        }
        let n = self.a.len();
        for i in (1..n).rev() {
            let limit = (self.max[i - 1] + 1).min(self.k - 1);
            if self.a[i] < limit {
                self.a[i] += 1;
                self.max[i] = self.max[i - 1].max(self.a[i]);
                for j in (i + 1)..n {
                    self.a[j] = 0;
                    self.max[j] = self.max[i];
                }
                return true;
            }
        }
        self.state = State::Done;
        false
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().then(|| self.a.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Stirling numbers of the second kind by the usual recurrence.
    fn stirling2(n: usize, k: usize) -> u64 {
        let mut s = vec![vec![0u64; k + 1]; n + 1];
        s[0][0] = 1;
        for i in 1..=n {
            for j in 1..=k.min(i) {
                s[i][j] = j as u64 * s[i - 1][j] + s[i - 1][j - 1];
            }
        }
        s[n][..=k].iter().sum()
    }

    #[test]
    fn counts_match_partitions() {
        for n in 1..=8 {
            for k in 1..=n + 1 {
                let count = RestrictedGrowth::new(n, k).count() as u64;
                assert_eq!(count, stirling2(n, k), "n={n} k={k}");
            }
        }
        // Bell(10)
        assert_eq!(RestrictedGrowth::new(10, 10).count(), 115_975);
    }

    #[test]
    fn order_and_shape() {
        let all: Vec<_> = RestrictedGrowth::new(3, 3).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
        let capped: Vec<_> = RestrictedGrowth::new(3, 2).collect();
        assert_eq!(capped.len(), 4);
        assert!(capped.iter().all(|s| s.iter().all(|&c| c < 2)));
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(RestrictedGrowth::new(4, 0).count(), 0);
        assert_eq!(RestrictedGrowth::new(1, 1).collect::<Vec<_>>(), vec![vec![0]]);
        assert_eq!(
            RestrictedGrowth::new(0, 0).collect::<Vec<_>>(),
            vec![Vec::<usize>::new()]
        );
    }
}
