//! Sliding-window containment tracking against a fixed bound.
//!
//! The window `w[k..i]` grows on the right and shrinks on the left. A
//! violation counter holds the number of components where the window exceeds
//! the bound, so `window ⊆ bound` is answered in O(1).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::parikh::ParikhVector;

/// Dense tracker over alphabet indices.
///
/// Any index `>= bound.dim()` is a symbol outside the bound's alphabet; all of
/// them share one extra slot whose bound is zero, so a single occurrence is a
/// violation.
#[derive(Clone, Debug)]
pub struct WindowTracker {
    bound: Vec<u32>,
    window: Vec<u32>,
    violations: usize,
    len: usize,
}

impl WindowTracker {
    pub fn new(bound: &ParikhVector) -> Self {
        let mut b = bound.counts().to_vec();
        b.push(0);
        WindowTracker {
            window: vec![0; b.len()],
            bound: b,
            violations: 0,
            len: 0,
        }
    }

    #[inline]
    fn slot(&self, index: usize) -> usize {
        index.min(self.bound.len() - 1)
    }

    #[inline]
    pub fn extend_right(&mut self, index: usize) {
        let s = self.slot(index);
        self.window[s] += 1;
        if self.window[s] == self.bound[s] + 1 {
            self.violations += 1;
        }
        self.len += 1;
    }

    /// `index` must be the leftmost symbol of the window.
    #[inline]
    pub fn shrink_left(&mut self, index: usize) -> Result<()> {
        let s = self.slot(index);
        if self.len == 0 || self.window[s] == 0 {
            return Err(Error::EmptyWindow);
        }
        if self.window[s] == self.bound[s] + 1 {
            self.violations -= 1;
        }
        self.window[s] -= 1;
        self.len -= 1;
        Ok(())
    }

    #[inline]
    pub fn is_contained(&self) -> bool {
        self.violations == 0
    }

    pub fn violations(&self) -> usize {
        self.violations
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Counts for the bound's alphabet; foreign symbols are not included.
    pub fn window(&self) -> ParikhVector {
        ParikhVector::new(self.window[..self.window.len() - 1].to_vec())
    }

    /// Number of foreign symbols currently in the window.
    pub fn foreign(&self) -> u32 {
        self.window[self.window.len() - 1]
    }
}

/// Byte-keyed tracker storing only non-zero entries, so its size is
/// proportional to the bound's norm rather than the alphabet.
#[derive(Clone, Debug, Default)]
pub struct SparseTracker {
    bound: HashMap<u8, u32>,
    window: HashMap<u8, u32>,
    violations: usize,
    len: usize,
}

impl SparseTracker {
    pub fn new(bound: impl IntoIterator<Item = (u8, u32)>) -> Self {
        SparseTracker {
            bound: bound.into_iter().filter(|&(_, c)| c > 0).collect(),
            ..Default::default()
        }
    }

    #[inline]
    pub fn extend_right(&mut self, symbol: u8) {
        let limit = self.bound.get(&symbol).copied().unwrap_or(0);
        let count = self.window.entry(symbol).or_insert(0);
        *count += 1;
        if *count == limit + 1 {
            self.violations += 1;
        }
        self.len += 1;
    }

    #[inline]
    pub fn shrink_left(&mut self, symbol: u8) -> Result<()> {
        let limit = self.bound.get(&symbol).copied().unwrap_or(0);
        let Some(count) = self.window.get_mut(&symbol) else {
            return Err(Error::EmptyWindow);
        };
        if *count == limit + 1 {
            self.violations -= 1;
        }
        *count -= 1;
        if *count == 0 {
            self.window.remove(&symbol);
        }
        self.len -= 1;
        Ok(())
    }

    #[inline]
    pub fn is_contained(&self) -> bool {
        self.violations == 0
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of stored entries (bound plus window).
    pub fn footprint(&self) -> usize {
        self.bound.len() + self.window.len()
    }
}
