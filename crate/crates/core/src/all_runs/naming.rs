//! Identifiers for fragments such that two fragments share an identifier iff
//! they are abelian-equivalent.
//!
//! Randomized mode: each byte gets a random weight modulo the Mersenne prime
//! 2^61 - 1 and a fragment's fingerprint is the sum of its weights, read off
//! a prefix-sum array in O(1). Two distinct vectors of equal length collide
//! with probability at most 2^-61.
//!
//! Deterministic mode: for each length, the Parikh vectors of all windows of
//! that length are produced by one slide, sorted by full-vector comparison and
//! given dense ranks. Tables are built lazily, one per requested length.

use std::str::FromStr;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::error::Error;

const MODULUS: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodId {
    pub norm: u32,
    pub tag: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NamingMode {
    #[default]
    Randomized,
    Deterministic,
}

impl FromStr for NamingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "randomized" => Ok(NamingMode::Randomized),
            "deterministic" => Ok(NamingMode::Deterministic),
            other => Err(Error::UnsupportedMode(other.to_string())),
        }
    }
}

#[inline]
fn add_mod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

#[derive(Clone, Debug)]
pub struct FingerprintNamer {
    prefix: Vec<u64>,
}

impl FingerprintNamer {
    pub fn new(word: &[u8], seed: Option<u64>) -> Self {
        let mut rng = match seed {
            Some(s) => ChaCha8Rng::seed_from_u64(s),
            None => ChaCha8Rng::from_entropy(),
        };
        let weights: Vec<u64> = (0..256).map(|_| rng.gen_range(0..MODULUS)).collect();
        let mut prefix = Vec::with_capacity(word.len() + 1);
        let mut acc = 0;
        prefix.push(acc);
        for &c in word {
            acc = add_mod(acc, weights[c as usize]);
            prefix.push(acc);
        }
        FingerprintNamer { prefix }
    }

    #[inline]
    pub fn id(&self, start: usize, len: usize) -> PeriodId {
        let tag = add_mod(self.prefix[start + len], MODULUS - self.prefix[start]);
        PeriodId { norm: len as u32, tag }
    }
}

#[derive(Debug)]
pub struct RankNamer {
    word: Vec<u8>,
    alphabet: Alphabet,
    tables: Vec<OnceLock<Vec<u32>>>,
}

impl RankNamer {
    pub fn new(word: &[u8]) -> Self {
        RankNamer {
            word: word.to_vec(),
            alphabet: Alphabet::from_word(word),
            tables: (0..=word.len()).map(|_| OnceLock::new()).collect(),
        }
    }

    fn ranks(&self, len: usize) -> Vec<u32> {
        let n = self.word.len();
        if len == 0 || len > n {
            return vec![0; n + 1 - len.min(n)];
        }
        let sigma = self.alphabet.len();
        let windows = n - len + 1;
        let index = |c: u8| self.alphabet.index_of(c).expect("alphabet built from word");
        let mut vectors = vec![0u32; windows * sigma];
        let mut cur = vec![0u32; sigma];
        for &c in &self.word[..len] {
            cur[index(c)] += 1;
        }
        for start in 0..windows {
            if start > 0 {
                cur[index(self.word[start - 1])] -= 1;
                cur[index(self.word[start + len - 1])] += 1;
            }
            vectors[start * sigma..(start + 1) * sigma].copy_from_slice(&cur);
        }
        let key = |s: usize| &vectors[s * sigma..(s + 1) * sigma];
        let mut order: Vec<usize> = (0..windows).collect();
        order.sort_unstable_by(|&a, &b| key(a).cmp(key(b)));
        let mut ranks = vec![0u32; windows];
        let mut rank = 0;
        for (pos, &s) in order.iter().enumerate() {
            if pos > 0 && key(order[pos - 1]) != key(s) {
                rank += 1;
            }
            ranks[s] = rank;
        }
        ranks
    }

    pub fn id(&self, start: usize, len: usize) -> PeriodId {
        let table = self.tables[len].get_or_init(|| self.ranks(len));
        PeriodId {
            norm: len as u32,
            tag: table[start] as u64,
        }
    }
}

/// Fragment namer answering `id(start, len)` in O(1) (amortized, for the
/// deterministic mode).
#[derive(Debug)]
pub enum Namer {
    Randomized(FingerprintNamer),
    Deterministic(Box<RankNamer>),
}

impl Namer {
    #[inline]
    pub fn id(&self, start: usize, len: usize) -> PeriodId {
        match self {
            Namer::Randomized(n) => n.id(start, len),
            Namer::Deterministic(n) => n.id(start, len),
        }
    }
}

/// Builds a namer for `word`. `seed` fixes the random weights of the
/// randomized mode and is ignored by the deterministic one.
pub fn name_fragments(word: &[u8], mode: NamingMode, seed: Option<u64>) -> Namer {
    match mode {
        NamingMode::Randomized => Namer::Randomized(FingerprintNamer::new(word, seed)),
        NamingMode::Deterministic => Namer::Deterministic(Box::new(RankNamer::new(word))),
    }
}
