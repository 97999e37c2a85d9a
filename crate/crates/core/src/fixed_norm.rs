//! Online scanner for runs of every period of one norm `p`.
//!
//! The word is cut into blocks `w[s..s+p-1]`; blocks with `s ≡ k (mod p)`
//! belong to lane `k`. When a lane completes a block and has no phase
//! running, it starts one with that block's Parikh vector as the period:
//!
//! - anchored mode follows the chain of equal consecutive blocks, extended by
//!   the longest admissible head and tail;
//! - abelian mode starts a fixed-period scanner at `max(s-p, 0)`, replays the
//!   buffered symbols up to the end of the block and then feeds it live
//!   until the lane's anchor class is retired, keeping only a run reported by
//!   that retirement.
//!
//! All lanes see each symbol before anything is emitted, and runs ending at
//! the same position are pooled and deduplicated by (start, end, period),
//! keeping the shortest tail.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::fixed_period::{Mode, ScannerState};
use crate::parikh::ParikhVector;
use crate::run::Run;

#[derive(Clone, Debug)]
struct ChainPhase {
    period: ParikhVector,
    start: usize,
    head: usize,
    cores: usize,
    partial: Vec<u32>,
    partial_len: usize,
}

#[derive(Clone, Debug)]
enum Phase {
    Chain(ChainPhase),
    Scan(Box<ScannerState>),
}

/// Per-anchor state: the running phase, if any.
#[derive(Clone, Debug)]
pub struct AnchorLane {
    anchor: usize,
    phase: Option<Phase>,
}

impl AnchorLane {
    pub fn anchor(&self) -> usize {
        self.anchor
    }

    pub fn is_active(&self) -> bool {
        self.phase.is_some()
    }

    /// Period of the running phase.
    pub fn current_period(&self) -> Option<&ParikhVector> {
        match &self.phase {
            Some(Phase::Chain(c)) => Some(&c.period),
            Some(Phase::Scan(s)) => Some(s.period()),
            None => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct NormScanner {
    p: usize,
    mode: Mode,
    alphabet: Alphabet,
    i: usize,
    // Last 2p symbols, indexed by position mod 2p.
    recent: Vec<u8>,
    // Counts of the last p symbols.
    block: Vec<u32>,
    lanes: Vec<AnchorLane>,
    phases: usize,
    finished: bool,
}

impl NormScanner {
    /// Scanner for norm `p` over a fixed alphabet; symbols outside it are
    /// rejected by [`push`](Self::push).
    pub fn new(p: usize, alphabet: Alphabet, mode: Mode) -> Result<Self> {
        if p == 0 {
            return Err(Error::ZeroNorm);
        }
        Ok(NormScanner {
            p,
            mode,
            block: vec![0; alphabet.len()],
            alphabet,
            i: 0,
            recent: vec![0; 2 * p],
            lanes: (0..p).map(|anchor| AnchorLane { anchor, phase: None }).collect(),
            phases: 0,
            finished: false,
        })
    }

    pub fn norm(&self) -> usize {
        self.p
    }

    pub fn lanes(&self) -> &[AnchorLane] {
        &self.lanes
    }

    /// Number of phases started so far.
    pub fn phases_started(&self) -> usize {
        self.phases
    }

    pub fn position(&self) -> usize {
        self.i
    }

    #[inline]
    fn at(&self, position: usize) -> u8 {
        self.recent[position % (2 * self.p)]
    }

    #[inline]
    fn index(&self, symbol: u8) -> usize {
        self.alphabet.index_of(symbol).expect("symbol validated on push")
    }

    /// Length of the longest suffix of `w[..s]`, at most `p`, whose Parikh
    /// vector fits in `period`.
    fn head_len(&self, s: usize, period: &ParikhVector) -> usize {
        let mut room = period.counts().to_vec();
        let mut h = 0;
        while h < self.p.min(s) {
            let c = self.index(self.at(s - 1 - h));
            if room[c] == 0 {
                break;
            }
            room[c] -= 1;
            h += 1;
        }
        h
    }

    pub fn push(&mut self, symbol: u8) -> Result<Vec<Run>> {
        if self.finished {
            return Err(Error::AlreadyFinished);
        }
        let i = self.i;
        let p = self.p;
        let c = self.alphabet.index_of(symbol).ok_or(Error::UnknownSymbol {
            symbol,
            position: i,
        })?;
        self.recent[i % (2 * p)] = symbol;
        self.block[c] += 1;
        if i >= p {
            let old = self.index(self.at(i - p));
            self.block[old] -= 1;
        }

        let mut found = Vec::new();
        for lane in 0..p {
            if let Some(run) = self.feed_lane(lane, symbol, c) {
                found.push(run);
            }
        }

        if i + 1 >= p {
            let s = i + 1 - p;
            if self.lanes[s % p].phase.is_none() {
                self.start_phase(s);
            }
        }
        self.i += 1;
        Ok(pool(found, self.mode))
    }

    fn feed_lane(&mut self, lane: usize, symbol: u8, c: usize) -> Option<Run> {
        let p = self.p;
        let i = self.i;
        let mut ended = false;
        let mut kept = None;
        match self.lanes[lane].phase.as_mut()? {
            Phase::Chain(chain) => {
                chain.partial[c] += 1;
                if chain.partial[c] > chain.period.get(c) {
                    ended = true;
                    if chain.cores >= 2 {
                        kept = Some(Run::new(
                            chain.start,
                            chain.head,
                            chain.partial_len,
                            i - 1,
                            chain.period.clone(),
                        ));
                    }
                } else {
                    chain.partial_len += 1;
                    if chain.partial_len == p {
                        chain.cores += 1;
                        chain.partial_len = 0;
                        chain.partial.iter_mut().for_each(|x| *x = 0);
                    }
                }
            }
            Phase::Scan(scanner) => {
                scanner
                    .push_with(symbol, |_, kill| {
                        if kill.position % p == lane && !ended {
                            ended = true;
                            kept = kill.run.clone();
                        }
                    })
                    .expect("lane scanner is never finished while running");
            }
        }
        if ended {
            self.lanes[lane].phase = None;
        }
        kept
    }

    fn start_phase(&mut self, s: usize) {
        let p = self.p;
        let lane = s % p;
        let period = ParikhVector::new(self.block.clone());
        let head = self.head_len(s, &period);
        // A fresh phase never has a full equal block right before it: that
        // block would already be part of a running phase in this lane.
        assert!(head < p, "phase at {s} has an equal preceding block");
        let phase = match self.mode {
            Mode::Anchored => Phase::Chain(ChainPhase {
                period,
                start: s - head,
                head,
                cores: 1,
                partial: vec![0; self.alphabet.len()],
                partial_len: 0,
            }),
            Mode::Abelian => {
                let origin = s.saturating_sub(p);
                let mut scanner = ScannerState::new_at(period, &self.alphabet, Mode::Abelian, origin)
                    .expect("block vector has norm p and alphabet dimension");
                for x in origin..s + p {
                    scanner
                        .push_with(self.at(x), |_, _| {})
                        .expect("fresh scanner");
                }
                Phase::Scan(Box::new(scanner))
            }
        };
        self.lanes[lane].phase = Some(phase);
        self.phases += 1;
    }

    /// Ends every running phase and returns the runs ending at the last symbol.
    pub fn finish(&mut self) -> Result<Vec<Run>> {
        if self.finished {
            return Err(Error::AlreadyFinished);
        }
        self.finished = true;
        let p = self.p;
        let n = self.i;
        let mut found = Vec::new();
        for lane in &mut self.lanes {
            match lane.phase.take() {
                None => {}
                Some(Phase::Chain(chain)) => {
                    if chain.cores >= 2 {
                        found.push(Run::new(chain.start, chain.head, chain.partial_len, n - 1, chain.period));
                    }
                }
                Some(Phase::Scan(mut scanner)) => {
                    let anchor = lane.anchor;
                    let mut ended = false;
                    scanner
                        .finish_with(|_, kill| {
                            if kill.position % p == anchor && !ended {
                                ended = true;
                                if let Some(run) = &kill.run {
                                    found.push(run.clone());
                                }
                            }
                        })
                        .expect("lane scanner finished once");
                }
            }
        }
        Ok(pool(found, self.mode))
    }
}

/// Orders runs by start. In abelian mode, runs sharing (start, end, period)
/// are collapsed to the shortest tail; anchored runs differing only in
/// anchor are distinct and all kept.
fn pool(mut runs: Vec<Run>, mode: Mode) -> Vec<Run> {
    if runs.len() < 2 {
        return runs;
    }
    runs.sort_by(|a, b| (a.start, a.end, a.period.counts(), a.tail).cmp(&(b.start, b.end, b.period.counts(), b.tail)));
    if mode == Mode::Anchored {
        return runs;
    }
    runs.dedup_by(|later, earlier| {
        later.start == earlier.start && later.end == earlier.end && later.period == earlier.period
    });
    runs
}

fn scan(word: &[u8], p: usize, alphabet: &Alphabet, mode: Mode) -> Result<Vec<Run>> {
    let mut scanner = NormScanner::new(p, alphabet.clone(), mode)?;
    let mut out = Vec::new();
    for &s in word {
        out.extend(scanner.push(s)?);
    }
    out.extend(scanner.finish()?);
    Ok(out)
}

/// Anchored runs of all periods of norm `p`, sorted by (end, start).
pub fn anchored_runs_norm(word: &[u8], p: usize) -> Result<Vec<Run>> {
    anchored_runs_norm_with(word, p, &Alphabet::from_word(word))
}

pub fn anchored_runs_norm_with(word: &[u8], p: usize, alphabet: &Alphabet) -> Result<Vec<Run>> {
    scan(word, p, alphabet, Mode::Anchored)
}

/// Abelian runs of all periods of norm `p`, sorted by (end, start).
pub fn abelian_runs_norm(word: &[u8], p: usize) -> Result<Vec<Run>> {
    abelian_runs_norm_with(word, p, &Alphabet::from_word(word))
}

pub fn abelian_runs_norm_with(word: &[u8], p: usize, alphabet: &Alphabet) -> Result<Vec<Run>> {
    scan(word, p, alphabet, Mode::Abelian)
}
