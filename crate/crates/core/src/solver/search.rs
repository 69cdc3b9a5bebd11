//! Lexicographic backtracking search for sets with monochromatic bounded-sum
//! closure.
//!
//! Elements are added in increasing order. Adding `x` to a partial set `P`
//! introduces exactly the sums `x + Σ F` with `F ⊆ P`, `|F| < n`; those are
//! checked against the color of the first element and the branch is cut at the
//! first disagreement. Because branches are explored in increasing order, the
//! first complete set found is the lexicographically least one.

use rayon::prelude::*;

use super::SolutionCandidate;
use crate::colorings::{Color, Coloring};
use crate::error::{Error, Result};

/// Colors are tabulated up front when the largest reachable sum is at most this.
const TABLE_LIMIT: u64 = 1 << 24;

enum Palette<'a, C: ?Sized> {
    Table(Vec<Color>),
    Direct(&'a C),
}

impl<C: Coloring + ?Sized> Palette<'_, C> {
    fn get(&self, n: u64) -> Color {
        match self {
            Palette::Table(t) => t[n as usize],
            Palette::Direct(c) => c.color(n),
        }
    }
}

struct Searcher<'a, C: ?Sized> {
    palette: Palette<'a, C>,
    horizon: u64,
    sum_bound: usize,
    size: usize,
}

impl<'a, C: Coloring + ?Sized> Searcher<'a, C> {
    fn new(c: &'a C, horizon: u64, sum_bound: usize, size: usize) -> Self {
        // sum of the `min(n, size)` largest elements of [1, horizon]
        let terms = sum_bound.min(size) as u64;
        let max_sum = terms.checked_mul(horizon).filter(|&m| m <= TABLE_LIMIT);
        let palette = match max_sum {
            Some(m) => Palette::Table(
                std::iter::once(Color(0))
                    .chain((1..=m).map(|n| c.color(n)))
                    .collect(),
            ),
            None => Palette::Direct(c),
        };
        Searcher {
            palette,
            horizon,
            sum_bound,
            size,
        }
    }

    /// Least completion whose first element is `first`.
    fn branch(&self, first: u64) -> Option<Vec<u64>> {
        let target = self.palette.get(first);
        // levels[j] holds Σ F for every j-subset F of the partial set, j < n
        let mut levels: Vec<Vec<u64>> = vec![Vec::new(); self.sum_bound];
        levels[0].push(0);
        let mut chosen = Vec::with_capacity(self.size);
        self.push(&mut levels, &mut chosen, first);
        if self.extend(&mut levels, &mut chosen, target) {
            Some(chosen)
        } else {
            None
        }
    }

    fn admissible(&self, levels: &[Vec<u64>], x: u64, target: Color) -> bool {
        levels
            .iter()
            .flatten()
            .all(|&s| self.palette.get(s + x) == target)
    }

    fn push(&self, levels: &mut [Vec<u64>], chosen: &mut Vec<u64>, x: u64) -> Vec<usize> {
        let marks: Vec<usize> = levels.iter().map(Vec::len).collect();
        for j in (1..levels.len()).rev() {
            let (lower, upper) = levels.split_at_mut(j);
            upper[0].extend(lower[j - 1].iter().map(|&s| s + x));
        }
        chosen.push(x);
        marks
    }

    fn pop(levels: &mut [Vec<u64>], chosen: &mut Vec<u64>, marks: &[usize]) {
        for (level, &mark) in levels.iter_mut().zip(marks) {
            level.truncate(mark);
        }
        chosen.pop();
    }

    fn extend(&self, levels: &mut [Vec<u64>], chosen: &mut Vec<u64>, target: Color) -> bool {
        if chosen.len() == self.size {
            return true;
        }
        let remaining = (self.size - chosen.len()) as u64;
        let last = *chosen.last().expect("branch starts with one element");
        // leave room for the elements still to be placed
        let top = self.horizon + 1 - remaining;
        for x in last + 1..=top {
            if !self.admissible(levels, x, target) {
                continue;
            }
            let marks = self.push(levels, chosen, x);
            if self.extend(levels, chosen, target) {
                return true;
            }
            Self::pop(levels, chosen, &marks);
        }
        false
    }

    fn first_candidates(&self) -> std::ops::RangeInclusive<u64> {
        1..=self.horizon + 1 - self.size as u64
    }
}

fn check_params(horizon: u64, sum_bound: usize, size: usize) -> Result<bool> {
    if sum_bound == 0 {
        return Err(Error::domain("sum bound must be at least 1"));
    }
    if size == 0 {
        return Err(Error::domain("target size must be at least 1"));
    }
    Ok(size as u64 <= horizon)
}

/// The lexicographically least `X ⊆ [1, horizon]` with `|X| = size` and
/// `FS^{≤sum_bound}(X)` monochromatic, if one exists.
pub fn search_monochromatic<C: Coloring + ?Sized>(
    c: &C,
    horizon: u64,
    sum_bound: usize,
    size: usize,
) -> Result<Option<SolutionCandidate>> {
    if !check_params(horizon, sum_bound, size)? {
        return Ok(None);
    }
    let searcher = Searcher::new(c, horizon, sum_bound, size);
    searcher
        .first_candidates()
        .find_map(|first| searcher.branch(first))
        .map(|xs| SolutionCandidate::new(xs, sum_bound))
        .transpose()
}

/// Same answer as [`search_monochromatic`], with first-element branches spread
/// over `jobs` worker threads.
pub fn search_monochromatic_parallel<C: Coloring + ?Sized>(
    c: &C,
    horizon: u64,
    sum_bound: usize,
    size: usize,
    jobs: usize,
) -> Result<Option<SolutionCandidate>> {
    if jobs <= 1 {
        return search_monochromatic(c, horizon, sum_bound, size);
    }
    if !check_params(horizon, sum_bound, size)? {
        return Ok(None);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::domain(format!("cannot start {jobs} workers: {e}")))?;
    let searcher = Searcher::new(c, horizon, sum_bound, size);
    let found = pool.install(|| {
        searcher
            .first_candidates()
            .into_par_iter()
            .find_map_first(|first| searcher.branch(first))
    });
    found
        .map(|xs| SolutionCandidate::new(xs, sum_bound))
        .transpose()
}
