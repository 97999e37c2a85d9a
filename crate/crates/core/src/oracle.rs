//! Brute-force reference implementations, written directly from the
//! definitions of periodic factorizations, anchored runs and abelian runs.
//!
//! Nothing here shares logic with the detectors; the alphabet and vector
//! types are only used as data carriers. Cost is polynomial with high degree,
//! so these are meant for short words.

use std::collections::BTreeSet;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::parikh::ParikhVector;
use crate::run::{sort_runs, Run};

/// Certificate that a fragment is periodic: head length, tail length, number
/// of cores and the anchor of the factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorizationWitness {
    pub head: usize,
    pub tail: usize,
    pub cores: usize,
    pub anchor: usize,
}

/// Prefix counts per distinct byte of the word, plus the target counts.
struct Frame {
    symbols: Vec<u8>,
    prefix: Vec<Vec<u32>>,
    target: [u32; 256],
    p: usize,
}

impl Frame {
    fn new(word: &[u8], period: &ParikhVector, alphabet: &Alphabet) -> Self {
        let symbols: Vec<u8> = word.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let prefix = symbols
            .iter()
            .map(|&s| {
                let mut acc = 0u32;
                let mut v = vec![0u32];
                for &c in word {
                    acc += (c == s) as u32;
                    v.push(acc);
                }
                v
            })
            .collect();
        let mut target = [0u32; 256];
        for (index, &count) in period.counts().iter().enumerate() {
            if let Some(s) = alphabet.symbol(index) {
                target[s as usize] = count;
            }
        }
        Frame {
            symbols,
            prefix,
            target,
            p: period.norm(),
        }
    }

    fn count(&self, sym: usize, start: usize, len: usize) -> u32 {
        self.prefix[sym][start + len] - self.prefix[sym][start]
    }

    /// Parikh vector of `w[start..start+len]` is contained in or equal to the period.
    fn fits(&self, start: usize, len: usize) -> bool {
        self.symbols
            .iter()
            .enumerate()
            .all(|(x, &s)| self.count(x, start, len) <= self.target[s as usize])
    }

    /// Parikh vector of `w[start..start+len]` equals the period.
    fn equals(&self, start: usize, len: usize) -> bool {
        len == self.p
            && self
                .symbols
                .iter()
                .enumerate()
                .all(|(x, &s)| self.count(x, start, len) == self.target[s as usize])
    }

    /// Checks the factorization of `w[i..=j]` with head length `h`.
    fn factorization(&self, i: usize, j: usize, h: usize) -> Option<FactorizationWitness> {
        let p = self.p;
        let len = j + 1 - i;
        if h >= p || h > len {
            return None;
        }
        let cores = (len - h) / p;
        let tail = (len - h) % p;
        if !self.fits(i, h) || !self.fits(j + 1 - tail, tail) {
            return None;
        }
        if !(0..cores).all(|c| self.equals(i + h + c * p, p)) {
            return None;
        }
        Some(FactorizationWitness {
            head: h,
            tail,
            cores,
            anchor: (i + h) % p,
        })
    }

    /// All factorizations of `w[i..=j]` having at least two cores.
    fn periodic_witnesses(&self, i: usize, j: usize) -> Vec<FactorizationWitness> {
        (0..self.p)
            .filter_map(|h| self.factorization(i, j, h))
            .filter(|f| f.cores >= 2)
            .collect()
    }

    fn anchored_witness(&self, i: usize, j: usize, anchor: usize) -> Option<FactorizationWitness> {
        let h = (anchor + self.p - i % self.p) % self.p;
        self.factorization(i, j, h).filter(|f| f.cores >= 2)
    }
}

fn check_range(word: &[u8], i: usize, j: usize) -> Result<()> {
    if i > j || j >= word.len() {
        return Err(Error::InvalidRange {
            start: i,
            end: j,
            len: word.len(),
        });
    }
    Ok(())
}

/// Returns the factorization of `w[i..=j]` with the most cores (at least
/// two), ties going to the shortest tail; `None` if the fragment is not
/// periodic with `period`.
pub fn oracle_is_periodic(
    word: &[u8],
    i: usize,
    j: usize,
    period: &ParikhVector,
    alphabet: &Alphabet,
) -> Result<Option<FactorizationWitness>> {
    check_range(word, i, j)?;
    if period.norm() == 0 {
        return Err(Error::ZeroNorm);
    }
    let frame = Frame::new(word, period, alphabet);
    Ok(frame
        .periodic_witnesses(i, j)
        .into_iter()
        .max_by_key(|f| (f.cores, std::cmp::Reverse(f.tail))))
}

/// Every periodic factorization (two or more cores) of `w[i..=j]`.
pub fn oracle_witnesses(
    word: &[u8],
    i: usize,
    j: usize,
    period: &ParikhVector,
    alphabet: &Alphabet,
) -> Result<Vec<FactorizationWitness>> {
    check_range(word, i, j)?;
    if period.norm() == 0 {
        return Err(Error::ZeroNorm);
    }
    Ok(Frame::new(word, period, alphabet).periodic_witnesses(i, j))
}

fn to_run(i: usize, j: usize, f: FactorizationWitness, period: &ParikhVector) -> Run {
    Run::new(i, f.head, f.tail, j, period.clone())
}

/// Abelian runs of `period`: periodic fragments where neither one-letter
/// extension is periodic, each given by its shortest-tail factorization.
/// Sorted by (end, start).
#[allow(clippy::needless_range_loop)]
pub fn oracle_abelian_runs(word: &[u8], period: &ParikhVector, alphabet: &Alphabet) -> Vec<Run> {
    let n = word.len();
    if period.norm() == 0 || n == 0 {
        return Vec::new();
    }
    let frame = Frame::new(word, period, alphabet);
    let witness: Vec<Vec<Option<FactorizationWitness>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j < i {
                        return None;
                    }
                    frame.periodic_witnesses(i, j).into_iter().min_by_key(|f| f.tail)
                })
                .collect()
        })
        .collect();
    let periodic = |i: usize, j: usize| witness[i][j].is_some();
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..=j {
            let Some(f) = witness[i][j] else { continue };
            if i > 0 && periodic(i - 1, j) {
                continue;
            }
            if j + 1 < n && periodic(i, j + 1) {
                continue;
            }
            out.push(to_run(i, j, f, period));
        }
    }
    out
}

/// Anchored runs of `period`, one entry per (span, anchor). Sorted by
/// (end, start, anchor-determined tail descending), matching the order in
/// which a left-to-right scan retires them.
pub fn oracle_anchored_runs(word: &[u8], period: &ParikhVector, alphabet: &Alphabet) -> Vec<Run> {
    let n = word.len();
    let p = period.norm();
    if p == 0 || n == 0 {
        return Vec::new();
    }
    let frame = Frame::new(word, period, alphabet);
    let mut out = Vec::new();
    for anchor in 0..p {
        let at = |i: usize, j: usize| frame.anchored_witness(i, j, anchor);
        for j in 0..n {
            for i in 0..=j {
                let Some(f) = at(i, j) else { continue };
                if i > 0 && at(i - 1, j).is_some() {
                    continue;
                }
                if j + 1 < n && at(i, j + 1).is_some() {
                    continue;
                }
                out.push(to_run(i, j, f, period));
            }
        }
    }
    out.sort_by_key(|r| (r.end, std::cmp::Reverse(r.tail), r.start));
    out
}

/// Distinct Parikh vectors (over `alphabet`) of the length-`p` fragments.
fn fragment_vectors(word: &[u8], p: usize, alphabet: &Alphabet) -> BTreeSet<ParikhVector> {
    let mut out = BTreeSet::new();
    if p == 0 || p > word.len() {
        return out;
    }
    for start in 0..=word.len() - p {
        let mut counts = vec![0u32; alphabet.len()];
        for &c in &word[start..start + p] {
            if let Some(index) = alphabet.index_of(c) {
                counts[index] += 1;
            }
        }
        let v = ParikhVector::new(counts);
        if v.norm() == p {
            out.insert(v);
        }
    }
    out
}

/// Union of the per-period results over every period of norm `p`. Only
/// vectors occurring as a length-`p` fragment can be the core of a run, so
/// the union ranges over those. Sorted by (end, start, period).
pub fn oracle_runs_norm(word: &[u8], p: usize, alphabet: &Alphabet, anchored: bool) -> Vec<Run> {
    let mut out = Vec::new();
    for v in fragment_vectors(word, p, alphabet) {
        if anchored {
            out.extend(oracle_anchored_runs(word, &v, alphabet));
        } else {
            out.extend(oracle_abelian_runs(word, &v, alphabet));
        }
    }
    out.sort_by(|a, b| {
        (a.end, a.start, a.period.counts(), a.tail).cmp(&(b.end, b.start, b.period.counts(), b.tail))
    });
    out
}

/// Every abelian run of the word, over its first-occurrence alphabet, in
/// canonical order (norm, start, end, period).
pub fn oracle_all_runs(word: &[u8]) -> Vec<Run> {
    oracle_all_runs_with(word, &Alphabet::from_word(word))
}

pub fn oracle_all_runs_with(word: &[u8], alphabet: &Alphabet) -> Vec<Run> {
    let mut out = Vec::new();
    for p in 1..=word.len() / 2 {
        out.extend(oracle_runs_norm(word, p, alphabet, false));
    }
    sort_runs(&mut out);
    out
}

/// All abelian squares `(start, half)`, sorted by (half, start).
pub fn oracle_squares(word: &[u8]) -> Vec<(usize, usize)> {
    let n = word.len();
    let mut out = Vec::new();
    for half in 1..=n / 2 {
        for start in 0..=n - 2 * half {
            let mut left = word[start..start + half].to_vec();
            let mut right = word[start + half..start + 2 * half].to_vec();
            left.sort_unstable();
            right.sort_unstable();
            if left == right {
                out.push((start, half));
            }
        }
    }
    out
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
    fn two_factorizations_of_abbabba() {
        let w = b"abbabba";
        let all = oracle_witnesses(w, 0, 6, &pv(&[1, 2]), &ab()).unwrap();
        let shapes: Vec<_> = all.iter().map(|f| (f.head, f.tail)).collect();
        assert!(shapes.contains(&(1, 0)));
        assert!(shapes.contains(&(0, 1)));
        assert!(oracle_is_periodic(w, 0, 6, &pv(&[1, 2]), &ab()).unwrap().is_some());
    }

    #[test]
    fn periodic_witness_examples() {
        let f = oracle_is_periodic(b"ababaaa", 0, 5, &pv(&[1, 1]), &ab())
            .unwrap()
            .unwrap();
        assert_eq!((f.head, f.tail, f.cores), (1, 1, 2));
        assert_eq!(oracle_is_periodic(b"ab", 0, 1, &pv(&[1, 1]), &ab()).unwrap(), None);
        assert!(oracle_is_periodic(b"ab", 1, 2, &pv(&[1, 1]), &ab()).is_err());
        assert!(oracle_is_periodic(b"ab", 1, 0, &pv(&[1, 1]), &ab()).is_err());
    }

    #[test]
    fn abelian_run_examples() {
        assert_eq!(tuples(&oracle_abelian_runs(b"ababaaa", &pv(&[1, 1]), &ab())), vec![(0, 1, 1, 5)]);
        assert_eq!(tuples(&oracle_abelian_runs(b"abab", &pv(&[1, 1]), &ab())), vec![(0, 0, 0, 3)]);
        assert_eq!(tuples(&oracle_abelian_runs(b"ababa", &pv(&[1, 1]), &ab())), vec![(0, 1, 0, 4)]);
        assert_eq!(
            tuples(&oracle_abelian_runs(b"abaababaabbb", &pv(&[2, 2]), &ab())),
            vec![(0, 3, 1, 11)]
        );
        assert_eq!(
            tuples(&oracle_abelian_runs(b"abaababa", &pv(&[1, 1]), &ab())),
            vec![(0, 1, 1, 7)]
        );
    }

    #[test]
    fn anchored_run_examples() {
        let runs = oracle_anchored_runs(b"ababaaa", &pv(&[1, 1]), &ab());
        let zero_anchored: Vec<_> = runs.iter().filter(|r| r.anchor() == 0).map(Run::span).collect();
        assert!(zero_anchored.contains(&(0, 4)));
        assert!(runs.iter().any(|r| r.span() == (0, 5)));
    }

    #[test]
    fn aggregates() {
        assert!(oracle_all_runs(b"a").is_empty());
        assert!(oracle_all_runs(b"").is_empty());
        assert_eq!(oracle_squares(b"aababa"), vec![(0, 1), (1, 2), (2, 2), (0, 3)]);
        assert_eq!(oracle_squares(b"aaaa"), vec![(0, 1), (1, 1), (2, 1), (0, 2)]);
        assert!(oracle_squares(b"ab").is_empty());
    }

    // Over every fragment of every short binary word: the shortest-tail
    // factorization is also one with the most cores.
    #[test]
    fn shortest_tail_maximizes_cores() {
        let alphabet = ab();
        for n in 1..=9usize {
            for code in 0..(1u32 << n) {
                let w: Vec<u8> = (0..n).map(|b| if code >> b & 1 == 1 { b'b' } else { b'a' }).collect();
                for x in 0..=n as u32 / 2 {
                    for y in 0..=(n as u32 / 2 - x) {
                        let period = pv(&[x, y]);
                        if period.norm() == 0 {
                            continue;
                        }
                        let frame = Frame::new(&w, &period, &alphabet);
                        for i in 0..n {
                            for j in i..n {
                                let all = frame.periodic_witnesses(i, j);
                                if all.is_empty() {
                                    continue;
                                }
                                let shortest = all.iter().min_by_key(|f| f.tail).unwrap();
                                let most = all.iter().map(|f| f.cores).max().unwrap();
                                assert_eq!(shortest.cores, most);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn outputs_satisfy_run_invariants() {
        let w = b"abaababaabbbaab";
        for r in oracle_all_runs(w) {
            r.check(w.len()).unwrap();
        }
    }
}
