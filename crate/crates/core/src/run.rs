use std::fmt;

use crate::parikh::ParikhVector;

/// A periodic fragment `w[start..=end]` with its factorization: a head of
/// length `head`, two or more cores with Parikh vector `period`, and a tail of
/// length `tail`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Run {
    pub start: usize,
    pub head: usize,
    pub tail: usize,
    pub end: usize,
    pub period: ParikhVector,
}

impl Run {
    pub fn new(start: usize, head: usize, tail: usize, end: usize, period: ParikhVector) -> Self {
        Run {
            start,
            head,
            tail,
            end,
            period,
        }
    }

    #[inline]
    pub fn norm(&self) -> usize {
        self.period.norm()
    }

    /// Common residue of the core start positions modulo the norm.
    pub fn anchor(&self) -> usize {
        (self.start + self.head) % self.norm()
    }

    pub fn cores(&self) -> usize {
        (self.end + 1 - self.start - self.head - self.tail) / self.norm()
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Start of the first core.
    pub fn core_start(&self) -> usize {
        self.start + self.head
    }

    /// `(start, end)` span.
    pub fn span(&self) -> (usize, usize) {
        (self.start, self.end)
    }

    /// Checks the tuple arithmetic against a word of length `n`; returns a
    /// description of the first violated condition.
    pub fn check(&self, n: usize) -> Result<(), String> {
        let p = self.norm();
        if p == 0 {
            return Err("zero-norm period".into());
        }
        if self.head >= p || self.tail >= p {
            return Err(format!("head {} / tail {} not below norm {p}", self.head, self.tail));
        }
        if self.start > self.end || self.end >= n {
            return Err(format!("span [{}, {}] invalid for length {n}", self.start, self.end));
        }
        let body = (self.end + 1 - self.start)
            .checked_sub(self.head + self.tail)
            .ok_or("head and tail exceed the span")?;
        if body % p != 0 {
            return Err(format!("core region {body} not a multiple of {p}"));
        }
        if body / p < 2 {
            return Err(format!("only {} cores", body / p));
        }
        Ok(())
    }
}

impl fmt::Debug for Run {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})@({})",
            self.start, self.head, self.tail, self.end, self.period
        )
    }
}

/// Canonical output order: norm, start, end, then period counts.
pub fn sort_runs(runs: &mut [Run]) {
    runs.sort_by(|a, b| {
        (a.norm(), a.start, a.end, a.period.counts(), a.tail)
            .cmp(&(b.norm(), b.start, b.end, b.period.counts(), b.tail))
    });
}
