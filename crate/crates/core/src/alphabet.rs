//! Byte alphabets with constant-time lookup in both directions.

use crate::error::{Error, Result};

const ABSENT: u16 = u16::MAX;

/// An ordered set of byte symbols, indexed `0..size`.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbol_to_index: [u16; 256],
    index_to_symbol: Vec<u8>,
}

impl Alphabet {
    pub fn empty() -> Self {
        Alphabet {
            symbol_to_index: [ABSENT; 256],
            index_to_symbol: Vec::new(),
        }
    }

    /// Distinct symbols of `word` in order of first occurrence.
    pub fn from_word(word: &[u8]) -> Self {
        let mut alphabet = Self::empty();
        for &symbol in word {
            alphabet.insert(symbol);
        }
        alphabet
    }

    /// Explicit declaration; the order given is the index order.
    pub fn from_symbols(symbols: &[u8]) -> Result<Self> {
        let mut alphabet = Self::empty();
        for &symbol in symbols {
            if alphabet.index_of(symbol).is_some() {
                return Err(Error::DuplicateSymbol(symbol));
            }
            alphabet.insert(symbol);
        }
        Ok(alphabet)
    }

    /// Adds `symbol` if absent and returns its index.
    pub fn insert(&mut self, symbol: u8) -> usize {
        match self.index_of(symbol) {
            Some(index) => index,
            None => {
                let index = self.index_to_symbol.len();
                self.symbol_to_index[symbol as usize] = index as u16;
                self.index_to_symbol.push(symbol);
                index
            }
        }
    }

    #[inline]
    pub fn index_of(&self, symbol: u8) -> Option<usize> {
        match self.symbol_to_index[symbol as usize] {
            ABSENT => None,
            index => Some(index as usize),
        }
    }

    #[inline]
    pub fn symbol(&self, index: usize) -> Option<u8> {
        self.index_to_symbol.get(index).copied()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.index_to_symbol
    }

    pub fn len(&self) -> usize {
        self.index_to_symbol.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index_to_symbol.is_empty()
    }
}

impl std::fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(
                self.index_to_symbol
                    .iter()
                    .enumerate()
                    .map(|(i, &s)| ((s as char), i)),
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_occurrence_order() {
        let a = Alphabet::from_word(b"aababa");
        assert_eq!(a.len(), 2);
        assert_eq!(a.index_of(b'a'), Some(0));
        assert_eq!(a.index_of(b'b'), Some(1));

        let c = Alphabet::from_word(b"cba");
        assert_eq!(c.symbols(), b"cba");
        assert_eq!(c.index_of(b'a'), Some(2));
    }

    #[test]
    fn empty_word_gives_empty_alphabet() {
        let a = Alphabet::from_word(b"");
        assert!(a.is_empty());
        assert_eq!(a.index_of(b'a'), None);
    }

    #[test]
    fn lookups_are_inverse() {
        let a = Alphabet::from_word(b"the quick brown fox");
        for i in 0..a.len() {
            assert_eq!(a.index_of(a.symbol(i).unwrap()), Some(i));
        }
        assert_eq!(a.symbol(a.len()), None);
    }

    #[test]
    fn duplicate_declaration_rejected() {
        assert_eq!(
            Alphabet::from_symbols(b"aba"),
            Err(Error::DuplicateSymbol(b'a'))
        );
        assert_eq!(Alphabet::from_symbols(b"ba").unwrap().symbols(), b"ba");
    }

    #[test]
    fn full_byte_range() {
        let all: Vec<u8> = (0..=255).collect();
        let a = Alphabet::from_symbols(&all).unwrap();
        assert_eq!(a.len(), 256);
        assert_eq!(a.index_of(255), Some(255));
    }
}
