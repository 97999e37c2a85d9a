//! Parikh vectors: per-letter occurrence counts over an indexed alphabet.

use std::fmt;
use std::str::FromStr;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// Letter counts in alphabet order, with a cached norm (the total count).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParikhVector {
    counts: Vec<u32>,
    norm: usize,
}

impl ParikhVector {
    pub fn new(counts: Vec<u32>) -> Self {
        let norm = counts.iter().map(|&c| c as usize).sum();
        ParikhVector { counts, norm }
    }

    pub fn zeros(dim: usize) -> Self {
        ParikhVector {
            counts: vec![0; dim],
            norm: 0,
        }
    }

    #[inline]
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    #[inline]
    pub fn get(&self, index: usize) -> u32 {
        self.counts.get(index).copied().unwrap_or(0)
    }

    #[inline]
    pub fn norm(&self) -> usize {
        self.norm
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.counts.len()
    }

    pub fn increment(&mut self, index: usize) {
        self.counts[index] += 1;
        self.norm += 1;
    }

    /// Panics if the component is already zero.
    pub fn decrement(&mut self, index: usize) {
        assert!(self.counts[index] > 0, "component {index} is zero");
        self.counts[index] -= 1;
        self.norm -= 1;
    }

    fn check_dim(&self, other: &ParikhVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    /// `inner ⊆ self`: every component of `inner` is at most the one in `self`.
    pub fn contains(&self, inner: &ParikhVector) -> Result<bool> {
        self.check_dim(inner)?;
        Ok(inner
            .counts
            .iter()
            .zip(&self.counts)
            .all(|(i, o)| i <= o))
    }

    /// `inner ⊂ self`: contained and not equal.
    pub fn strictly_contains(&self, inner: &ParikhVector) -> Result<bool> {
        Ok(self.contains(inner)? && inner.norm < self.norm)
    }
}

/// Parikh vector of `word` over `alphabet`.
pub fn parikh_of(word: &[u8], alphabet: &Alphabet) -> Result<ParikhVector> {
    let mut counts = vec![0u32; alphabet.len()];
    for (position, &symbol) in word.iter().enumerate() {
        let index = alphabet
            .index_of(symbol)
            .ok_or(Error::UnknownSymbol { symbol, position })?;
        counts[index] += 1;
    }
    Ok(ParikhVector {
        counts,
        norm: word.len(),
    })
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for ParikhVector {
    type Err = Error;

    /// Comma-separated counts in alphabet order, e.g. `"2,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::ParsePeriod(s.to_string()));
        }
        s.split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(ParikhVector::new)
            .map_err(|_| Error::ParsePeriod(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pv(c: &[u32]) -> ParikhVector {
        ParikhVector::new(c.to_vec())
    }

    #[test]
    fn counts_in_alphabet_order() {
        let ab = Alphabet::from_symbols(b"ab").unwrap();
        assert_eq!(parikh_of(b"aab", &ab).unwrap(), pv(&[2, 1]));
        assert_eq!(parikh_of(b"abba", &ab).unwrap(), pv(&[2, 2]));
        let empty = parikh_of(b"", &ab).unwrap();
        assert_eq!(empty, pv(&[0, 0]));
        assert_eq!(empty.norm(), 0);
    }

    #[test]
    fn unknown_symbol_reports_position() {
        let ab = Alphabet::from_symbols(b"ab").unwrap();
        assert_eq!(
            parikh_of(b"abca", &ab),
            Err(Error::UnknownSymbol {
                symbol: b'c',
                position: 2
            })
        );
    }

    #[test]
    fn containment() {
        assert!(pv(&[2, 2]).contains(&pv(&[1, 2])).unwrap());
        assert!(pv(&[2, 2]).contains(&pv(&[2, 2])).unwrap());
        assert!(!pv(&[2, 2]).strictly_contains(&pv(&[2, 2])).unwrap());
        assert!(pv(&[2, 2]).strictly_contains(&pv(&[2, 1])).unwrap());
        assert!(!pv(&[1, 1]).contains(&pv(&[2, 0])).unwrap());
        assert_eq!(
            pv(&[1, 1]).contains(&pv(&[1])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn parse_and_display() {
        let p: ParikhVector = "2,2".parse().unwrap();
        assert_eq!(p, pv(&[2, 2]));
        assert_eq!(p.norm(), 4);
        assert_eq!(p.to_string(), "2,2");
        assert_eq!(" 1, 0 ,3".parse::<ParikhVector>().unwrap(), pv(&[1, 0, 3]));
        assert!("".parse::<ParikhVector>().is_err());
        assert!("1,,2".parse::<ParikhVector>().is_err());
        assert!("1,-2".parse::<ParikhVector>().is_err());
        assert!("a".parse::<ParikhVector>().is_err());
    }

    #[test]
    fn mutation_keeps_norm() {
        let mut p = ParikhVector::zeros(3);
        p.increment(1);
        p.increment(1);
        p.increment(2);
        assert_eq!(p.norm(), 3);
        p.decrement(1);
        assert_eq!(p, pv(&[0, 1, 1]));
        assert_eq!(p.norm(), 2);
    }

    fn sorted(w: &[u8]) -> Vec<u8> {
        let mut v = w.to_vec();
        v.sort_unstable();
        v
    }

    // Exhaustive: equal Parikh vectors iff anagrams, words up to length 8 over {a,b,c}.
    #[test]
    fn parikh_equality_is_anagram_relation() {
        let abc = Alphabet::from_symbols(b"abc").unwrap();
        for len in 0..=8usize {
            let total = 3usize.pow(len as u32);
            let mut by_vector = std::collections::HashMap::new();
            for code in 0..total {
                let mut w = Vec::with_capacity(len);
                let mut c = code;
                for _ in 0..len {
                    w.push(b"abc"[c % 3]);
                    c /= 3;
                }
                let v = parikh_of(&w, &abc).unwrap();
                assert_eq!(v.norm(), len);
                let key = sorted(&w);
                let prev = by_vector.entry(v).or_insert_with(|| key.clone());
                assert_eq!(*prev, key);
            }
        }
    }

    proptest! {
        #[test]
        fn norm_is_length(w in proptest::collection::vec(0u8..6, 0..64)) {
            let alphabet = Alphabet::from_word(&w);
            prop_assert_eq!(parikh_of(&w, &alphabet).unwrap().norm(), w.len());
        }

        #[test]
        fn parse_roundtrip(c in proptest::collection::vec(0u32..1000, 1..8)) {
            let p = ParikhVector::new(c);
            prop_assert_eq!(p.to_string().parse::<ParikhVector>().unwrap(), p);
        }
    }
}
