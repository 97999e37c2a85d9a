//! Offline computation of every abelian run of a word.
//!
//! Pipeline, per half-length `p`: abelian squares → maximal powers →
//! anchored runs (powers extended by head and tail) labelled with the
//! identifier of their period. The anchored runs of all lengths are then
//! ordered by (period, start) and one sweep per period keeps the runs not
//! properly contained in another anchored run with the same period,
//! collapsing equal spans to their shortest-tail factorization.

pub mod naming;
pub mod powers;
pub mod squares;

use rayon::prelude::*;

use crate::alphabet::Alphabet;
use crate::error::Result;
use crate::parikh::parikh_of;
use crate::run::{sort_runs, Run};

pub use naming::{name_fragments, FingerprintNamer, Namer, NamingMode, PeriodId, RankNamer};
pub use powers::{extend_to_anchored_runs, maximal_powers, AnchoredRunRec, MaxPower};
pub use squares::{abelian_squares, SquareOcc};

use powers::{extend_one, powers_of_half, Room};
use squares::{squares_of_half, DiffCounter};

#[derive(Clone, Copy, Debug, Default)]
pub struct AllRunsOptions {
    pub mode: NamingMode,
    /// Seed for the randomized namer; fresh entropy when `None`.
    pub seed: Option<u64>,
    /// Process half-lengths on the rayon pool.
    pub parallel: bool,
}

impl AllRunsOptions {
    pub fn new(mode: NamingMode) -> Self {
        AllRunsOptions {
            mode,
            ..Default::default()
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }
}

fn anchored_for_half(word: &[u8], half: usize, namer: &Namer) -> Vec<AnchoredRunRec> {
    let mut diff = DiffCounter::new();
    let mut square_at = Vec::new();
    let mut powers = Vec::new();
    let mut room = Room::new();
    squares_of_half(word, half, &mut diff, &mut square_at);
    powers_of_half(half, &square_at, &mut powers);
    powers
        .iter()
        .map(|power| extend_one(word, power, namer, &mut room))
        .collect()
}

/// Every anchored run with at least two cores, over all periods.
pub fn all_anchored_runs(word: &[u8], namer: &Namer, parallel: bool) -> Vec<AnchoredRunRec> {
    let halves = 1..=word.len() / 2;
    if parallel {
        halves
            .into_par_iter()
            .flat_map_iter(|half| anchored_for_half(word, half, namer))
            .collect()
    } else {
        halves.flat_map(|half| anchored_for_half(word, half, namer)).collect()
    }
}

/// Keeps the anchored runs not properly contained in another one with the
/// same period; equal spans keep their shortest tail.
pub fn filter_abelian(mut anchored: Vec<AnchoredRunRec>) -> Vec<AnchoredRunRec> {
    anchored.sort_unstable_by_key(|r| (r.period_id, r.start, std::cmp::Reverse(r.end), r.tail));
    let mut out = Vec::new();
    for bucket in anchored.chunk_by(|a, b| a.period_id == b.period_id) {
        let mut reach: Option<usize> = None;
        for group in bucket.chunk_by(|a, b| a.start == b.start && a.end == b.end) {
            let first = group[0];
            if reach.is_some_and(|r| r >= first.end) {
                continue;
            }
            reach = Some(first.end);
            out.push(first);
        }
    }
    out
}

/// All abelian runs of `word` over its first-occurrence alphabet, sorted by
/// (norm, start, end, period).
pub fn all_abelian_runs(word: &[u8], options: AllRunsOptions) -> Vec<Run> {
    all_abelian_runs_with(word, &Alphabet::from_word(word), options)
        .expect("alphabet built from the word")
}

/// As [`all_abelian_runs`], with period vectors expressed over `alphabet`.
pub fn all_abelian_runs_with(word: &[u8], alphabet: &Alphabet, options: AllRunsOptions) -> Result<Vec<Run>> {
    let namer = name_fragments(word, options.mode, options.seed);
    let kept = filter_abelian(all_anchored_runs(word, &namer, options.parallel));
    let mut runs = kept
        .into_iter()
        .map(|r| {
            let core = &word[r.core_start()..r.core_start() + r.norm];
            Ok(Run::new(r.start, r.head, r.tail, r.end, parikh_of(core, alphabet)?))
        })
        .collect::<Result<Vec<_>>>()?;
    sort_runs(&mut runs);
    Ok(runs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_all_runs;

    fn tuples(runs: &[Run]) -> Vec<(usize, usize, usize, usize, String)> {
        runs.iter()
            .map(|r| (r.start, r.head, r.tail, r.end, r.period.to_string()))
            .collect()
    }

    #[test]
    fn known_runs() {
        for mode in [NamingMode::Deterministic, NamingMode::Randomized] {
            let opts = AllRunsOptions::new(mode).seed(3);
            let t = tuples(&all_abelian_runs(b"ababaaa", opts));
            assert!(t.contains(&(0, 1, 1, 5, "1,1".into())), "{t:?}");
            assert!(!t.iter().any(|r| (r.0, r.3, r.4.as_str()) == (0, 4, "1,1")));

            let t = tuples(&all_abelian_runs(b"abaababaabbb", opts));
            assert!(t.contains(&(0, 3, 1, 11, "2,2".into())), "{t:?}");
        }
    }

    #[test]
    fn matches_oracle_on_small_word() {
        let w = b"abaabab";
        let expected = oracle_all_runs(w);
        assert!(!expected.is_empty());
        for mode in [NamingMode::Deterministic, NamingMode::Randomized] {
            assert_eq!(all_abelian_runs(w, AllRunsOptions::new(mode)), expected);
        }
        let parallel = all_abelian_runs(w, AllRunsOptions::new(NamingMode::Deterministic).parallel(true));
        assert_eq!(parallel, expected);
    }

    #[test]
    fn short_words() {
        assert!(all_abelian_runs(b"", AllRunsOptions::default()).is_empty());
        assert!(all_abelian_runs(b"a", AllRunsOptions::default()).is_empty());
        assert_eq!(all_abelian_runs(b"aa", AllRunsOptions::default()).len(), 1);
    }
}
