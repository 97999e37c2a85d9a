//! Online scanner for runs of one fixed period.
//!
//! The scanner keeps, for every anchor class `m` modulo `p`, the start `B[m]`
//! of the longest suffix of the input read so far that is periodic with the
//! period anchored at `m` (or ∞). A containment window `w[k..i]` gives the
//! left edge of the longest suffix whose Parikh vector fits in the period;
//! every step advances `k` and retires the anchor classes it passes. A
//! retired entry whose suffix had at least two cores is an anchored run that
//! ended just before the current symbol.
//!
//! In abelian mode the finite entries are also kept in a list ordered by
//! value, so the minimum of `B` is its first element. An anchored run is
//! reported as an abelian run only if its entry held the step's initial
//! minimum and the minimum strictly grows once it is retired; the last such
//! anchor in the scan order is the one with the shortest tail.
//!
//! Each symbol is reported on no later than the push of the symbol after it,
//! and total work is O(n) with O(σ + p) memory.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::anchor_list::AnchorList;
use crate::error::{Error, Result};
use crate::parikh::ParikhVector;
use crate::run::Run;
use crate::tracker::{SparseTracker, WindowTracker};

/// Marker for an anchor class with no periodic suffix.
pub const INF: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Report every anchored run.
    Anchored,
    /// Report only runs maximal over all anchors.
    Abelian,
}

#[derive(Clone, Debug)]
enum Counters {
    Dense {
        slot: Box<[u16; 256]>,
        tracker: WindowTracker,
    },
    Sparse(SparseTracker),
}

impl Counters {
    #[inline]
    fn push(&mut self, symbol: u8) {
        match self {
            Counters::Dense { slot, tracker } => tracker.extend_right(slot[symbol as usize] as usize),
            Counters::Sparse(t) => t.extend_right(symbol),
        }
    }

    #[inline]
    fn pop(&mut self, symbol: u8) {
        let r = match self {
            Counters::Dense { slot, tracker } => tracker.shrink_left(slot[symbol as usize] as usize),
            Counters::Sparse(t) => t.shrink_left(symbol),
        };
        debug_assert!(r.is_ok());
    }

    #[inline]
    fn contained(&self) -> bool {
        match self {
            Counters::Dense { tracker, .. } => tracker.is_contained(),
            Counters::Sparse(t) => t.is_contained(),
        }
    }
}

/// One anchor class retired by the cursor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kill {
    /// Cursor position; its residue mod `p` is the retired anchor class.
    pub position: usize,
    /// Value the entry held before retirement.
    pub value: Option<usize>,
    /// The run reported by this retirement, if any.
    pub run: Option<Run>,
}

/// Read-only view of `(i, k, B, L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    /// Number of symbols consumed.
    pub i: usize,
    pub k: usize,
    pub b: Vec<Option<usize>>,
    pub list: Vec<usize>,
}

impl fmt::Display for Snapshot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} B=[", self.k)?;
        for (idx, v) in self.b.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            match v {
                Some(v) => write!(f, "{v}")?,
                None => f.write_str("∞")?,
            }
        }
        f.write_str("] L=(")?;
        for (idx, a) in self.list.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug)]
pub struct ScannerState {
    period: ParikhVector,
    p: usize,
    mode: Mode,
    b: Vec<usize>,
    list: AnchorList,
    k: usize,
    i: usize,
    counters: Counters,
    // Last p+1 symbols; the window w[k..i] never holds more.
    recent: Vec<u8>,
    cursor_moves: usize,
    finished: bool,
}

impl ScannerState {
    /// Fresh scanner for `period`, whose components follow `alphabet`'s order.
    pub fn new(period: ParikhVector, alphabet: &Alphabet, mode: Mode) -> Result<Self> {
        Self::new_at(period, alphabet, mode, 0)
    }

    /// Scanner whose first symbol is at global position `origin`. Reported
    /// positions are global.
    pub fn new_at(
        period: ParikhVector,
        alphabet: &Alphabet,
        mode: Mode,
        origin: usize,
    ) -> Result<Self> {
        if period.dim() != alphabet.len() {
            return Err(Error::DimensionMismatch {
                expected: alphabet.len(),
                found: period.dim(),
            });
        }
        let p = period.norm();
        if p == 0 {
            return Err(Error::ZeroNorm);
        }
        let dim = period.dim();
        let mut slot = Box::new([dim as u16; 256]);
        for (index, &symbol) in alphabet.symbols().iter().enumerate() {
            slot[symbol as usize] = index as u16;
        }
        let mut b = vec![INF; p];
        let mut list = AnchorList::new(p);
        b[origin % p] = origin;
        list.push_back(origin % p);
        Ok(ScannerState {
            counters: Counters::Dense {
                slot,
                tracker: WindowTracker::new(&period),
            },
            period,
            p,
            mode,
            b,
            list,
            k: origin,
            i: origin,
            recent: vec![0; p + 1],
            cursor_moves: 0,
            finished: false,
        })
    }

    /// Switches to hash-based counters holding O(p) entries instead of
    /// σ-sized arrays. Only valid before the first push.
    pub fn sparse(mut self, alphabet: &Alphabet) -> Self {
        assert_eq!(self.k, self.i, "sparse() must be called on a fresh scanner");
        let bound = self
            .period
            .counts()
            .iter()
            .enumerate()
            .map(|(index, &c)| (alphabet.symbol(index).expect("dimension checked"), c));
        self.counters = Counters::Sparse(SparseTracker::new(bound));
        self
    }

    pub fn period(&self) -> &ParikhVector {
        &self.period
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Global position of the next symbol to be read.
    pub fn position(&self) -> usize {
        self.i
    }

    /// Total number of cursor increments so far.
    pub fn cursor_moves(&self) -> usize {
        self.cursor_moves
    }

    pub fn is_finished(&self) -> bool {
        self.finished
    }

    /// Smallest finite entry of `B`, read from the head of the list.
    #[inline]
    fn minimum(&self) -> usize {
        self.list.first().map_or(INF, |a| self.b[a])
    }

    /// One iteration of the outer loop; `None` is the end-of-input pass.
    fn step<F>(&mut self, symbol: Option<u8>, mut sink: F)
    where
        F: FnMut(&ScannerState, &Kill),
    {
        let p = self.p;
        let i = self.i;
        if let Some(s) = symbol {
            self.recent[i % (p + 1)] = s;
            self.counters.push(s);
        }
        let b_min = self.minimum();
        loop {
            let advance = match symbol {
                Some(_) => !self.counters.contained(),
                None => self.k <= i,
            };
            if !advance {
                break;
            }
            let k = self.k;
            if k + p > i {
                let anchor = k % p;
                let b = std::mem::replace(&mut self.b[anchor], INF);
                self.list.remove(anchor);
                let mut run = None;
                if b != INF && b + 2 * p <= k {
                    let report = match self.mode {
                        Mode::Anchored => true,
                        Mode::Abelian => b == b_min && self.minimum() > b,
                    };
                    if report {
                        run = Some(Run::new(b, (k - b) % p, i - k, i - 1, self.period.clone()));
                    }
                }
                let kill = Kill {
                    position: k,
                    value: (b != INF).then_some(b),
                    run,
                };
                sink(self, &kill);
            }
            if symbol.is_some() {
                let left = self.recent[k % (p + 1)];
                self.counters.pop(left);
            }
            self.k += 1;
            self.cursor_moves += 1;
        }
        if symbol.is_some() {
            if self.k + p > i + 1 {
                let anchor = (i + 1) % p;
                debug_assert_eq!(self.b[anchor], INF);
                self.b[anchor] = self.k;
                self.list.push_back(anchor);
            }
            self.i += 1;
        }
    }

    /// Consumes one symbol and returns the runs ending just before it.
    pub fn push(&mut self, symbol: u8) -> Result<Vec<Run>> {
        let mut out = Vec::new();
        self.push_with(symbol, |_, kill| {
            if let Some(run) = &kill.run {
                out.push(run.clone());
            }
        })?;
        Ok(out)
    }

    /// Like [`push`](Self::push) but hands every retirement to `sink`
    /// together with the state right after it.
    pub fn push_with<F>(&mut self, symbol: u8, sink: F) -> Result<()>
    where
        F: FnMut(&ScannerState, &Kill),
    {
        if self.finished {
            return Err(Error::AlreadyFinished);
        }
        self.step(Some(symbol), sink);
        Ok(())
    }

    /// End-of-input pass: retires every remaining anchor and returns the runs
    /// ending at the last symbol.
    pub fn finish(&mut self) -> Result<Vec<Run>> {
        let mut out = Vec::new();
        self.finish_with(|_, kill| {
            if let Some(run) = &kill.run {
                out.push(run.clone());
            }
        })?;
        Ok(out)
    }

    pub fn finish_with<F>(&mut self, sink: F) -> Result<()>
    where
        F: FnMut(&ScannerState, &Kill),
    {
        if self.finished {
            return Err(Error::AlreadyFinished);
        }
        self.step(None, sink);
        self.finished = true;
        Ok(())
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot {
            i: self.i,
            k: self.k,
            b: self.b.iter().map(|&v| (v != INF).then_some(v)).collect(),
            list: self.list.iter().collect(),
        }
    }

    /// Checks the list/array agreement: the list holds exactly the finite
    /// entries, in non-decreasing order of value.
    pub fn check_list(&self) -> std::result::Result<(), String> {
        let listed: Vec<usize> = self.list.iter().collect();
        for (a, &v) in self.b.iter().enumerate() {
            if (v != INF) != self.list.contains(a) {
                return Err(format!("anchor {a} value {v} vs list membership"));
            }
        }
        if listed.len() != self.b.iter().filter(|&&v| v != INF).count() {
            return Err("list length".into());
        }
        if listed.windows(2).any(|w| self.b[w[0]] > self.b[w[1]]) {
            return Err(format!("list {listed:?} not ordered by {:?}", self.b));
        }
        Ok(())
    }
}

fn scan(word: &[u8], period: &ParikhVector, alphabet: &Alphabet, mode: Mode) -> Result<Vec<Run>> {
    let mut scanner = ScannerState::new(period.clone(), alphabet, mode)?;
    let mut out = Vec::new();
    for &s in word {
        out.extend(scanner.push(s)?);
    }
    out.extend(scanner.finish()?);
    Ok(out)
}

/// All anchored runs of `period` in `word`, ordered by end position.
pub fn anchored_runs(word: &[u8], period: &ParikhVector, alphabet: &Alphabet) -> Result<Vec<Run>> {
    scan(word, period, alphabet, Mode::Anchored)
}

/// All abelian runs of `period` in `word`, ordered by end position.
pub fn abelian_runs(word: &[u8], period: &ParikhVector, alphabet: &Alphabet) -> Result<Vec<Run>> {
    scan(word, period, alphabet, Mode::Abelian)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::from_symbols(b"ab").unwrap()
    }

    fn pv(c: &[u32]) -> ParikhVector {
        ParikhVector::new(c.to_vec())
    }

    fn tuples(runs: &[Run]) -> Vec<(usize, usize, usize, usize)> {
        runs.iter().map(|r| (r.start, r.head, r.tail, r.end)).collect()
    }

    #[test]
    fn initial_state() {
        let s = ScannerState::new(pv(&[2, 2]), &ab(), Mode::Abelian).unwrap();
        assert_eq!(s.snapshot().to_string(), "k=0 B=[0,∞,∞,∞] L=(0)");
        let s = ScannerState::new(pv(&[1, 1]), &ab(), Mode::Abelian).unwrap();
        assert_eq!(s.snapshot().b, vec![Some(0), None]);
    }

    #[test]
    fn zero_norm_rejected() {
        assert_eq!(
            ScannerState::new(pv(&[0, 0]), &ab(), Mode::Abelian).unwrap_err(),
            Error::ZeroNorm
        );
        assert!(matches!(
            ScannerState::new(pv(&[1]), &ab(), Mode::Abelian),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn example_word_reports_at_finish() {
        let mut s = ScannerState::new(pv(&[2, 2]), &ab(), Mode::Abelian).unwrap();
        for &c in b"abaababaabbb" {
            assert!(s.push(c).unwrap().is_empty());
        }
        assert_eq!(tuples(&s.finish().unwrap()), vec![(0, 3, 1, 11)]);
        assert_eq!(s.finish(), Err(Error::AlreadyFinished));
        assert_eq!(s.push(b'a'), Err(Error::AlreadyFinished));
    }

    #[test]
    fn shortest_tail_representation() {
        assert_eq!(
            tuples(&abelian_runs(b"ababa", &pv(&[1, 1]), &ab()).unwrap()),
            vec![(0, 1, 0, 4)]
        );
        assert_eq!(
            tuples(&abelian_runs(b"abab", &pv(&[1, 1]), &ab()).unwrap()),
            vec![(0, 0, 0, 3)]
        );
        assert_eq!(
            tuples(&abelian_runs(b"ababaaa", &pv(&[1, 1]), &ab()).unwrap()),
            vec![(0, 1, 1, 5)]
        );
        assert_eq!(
            tuples(&abelian_runs(b"abaababa", &pv(&[1, 1]), &ab()).unwrap()),
            vec![(0, 1, 1, 7)]
        );
    }

    #[test]
    fn anchored_mode_keeps_non_maximal_runs() {
        let runs = anchored_runs(b"ababaaa", &pv(&[1, 1]), &ab()).unwrap();
        let t = tuples(&runs);
        assert!(t.contains(&(0, 0, 1, 4)), "{t:?}");
        assert!(t.contains(&(0, 1, 1, 5)), "{t:?}");
    }

    #[test]
    fn empty_input() {
        let mut s = ScannerState::new(pv(&[1, 1]), &ab(), Mode::Abelian).unwrap();
        assert!(s.finish().unwrap().is_empty());
    }

    #[test]
    fn foreign_symbols_break_runs() {
        let runs = abelian_runs(b"ababxabab", &pv(&[1, 1]), &ab()).unwrap();
        assert_eq!(tuples(&runs), vec![(0, 0, 0, 3), (5, 0, 0, 8)]);
    }

    #[test]
    fn sparse_counters_agree() {
        let word = b"abaababaabbbabbabab";
        let alphabet = ab();
        for counts in [[1, 1], [2, 1], [2, 2], [1, 3]] {
            let period = pv(&counts);
            let dense = abelian_runs(word, &period, &alphabet).unwrap();
            let mut s = ScannerState::new(period, &alphabet, Mode::Abelian)
                .unwrap()
                .sparse(&alphabet);
            let mut sparse = Vec::new();
            for &c in word {
                sparse.extend(s.push(c).unwrap());
            }
            sparse.extend(s.finish().unwrap());
            assert_eq!(dense, sparse);
        }
    }

    #[test]
    fn list_invariant_holds_throughout() {
        let word = b"abbabaabbbaabababbaab";
        let alphabet = ab();
        let mut s = ScannerState::new(pv(&[2, 1]), &alphabet, Mode::Abelian).unwrap();
        for &c in word {
            s.push_with(c, |st, _| st.check_list().unwrap()).unwrap();
            s.check_list().unwrap();
        }
        s.finish_with(|st, _| st.check_list().unwrap()).unwrap();
        assert!(s.cursor_moves() <= word.len() + 1);
    }
}
