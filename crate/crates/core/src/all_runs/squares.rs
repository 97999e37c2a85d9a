//! Abelian squares by sliding a difference counter per half-length.

/// `w[start..start+2*half]` with equal-Parikh halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareOcc {
    pub start: usize,
    pub half: usize,
}

/// Per-symbol difference between two windows, with a count of non-zero
/// entries so equality is an O(1) test.
pub(crate) struct DiffCounter {
    diff: [i32; 256],
    nonzero: usize,
}

impl DiffCounter {
    pub(crate) fn new() -> Self {
        DiffCounter {
            diff: [0; 256],
            nonzero: 0,
        }
    }

    #[inline]
    fn add(&mut self, symbol: u8, delta: i32) {
        let d = &mut self.diff[symbol as usize];
        let before = *d != 0;
        *d += delta;
        match (before, *d != 0) {
            (false, true) => self.nonzero += 1,
            (true, false) => self.nonzero -= 1,
            _ => {}
        }
    }

    fn clear(&mut self) {
        self.diff = [0; 256];
        self.nonzero = 0;
    }
}

/// Marks `square_at[i]` for every square of half-length `half`; the slice
/// is resized to the number of candidate starts.
pub(crate) fn squares_of_half(word: &[u8], half: usize, diff: &mut DiffCounter, square_at: &mut Vec<bool>) {
    let n = word.len();
    square_at.clear();
    if half == 0 || 2 * half > n {
        return;
    }
    diff.clear();
    for &c in &word[..half] {
        diff.add(c, 1);
    }
    for &c in &word[half..2 * half] {
        diff.add(c, -1);
    }
    let last = n - 2 * half;
    square_at.reserve(last + 1);
    for i in 0..=last {
        square_at.push(diff.nonzero == 0);
        if i < last {
            // left window loses w[i] and gains w[i+half]; right window loses
            // w[i+half] and gains w[i+2*half]
            diff.add(word[i], -1);
            diff.add(word[i + half], 2);
            diff.add(word[i + 2 * half], -1);
        }
    }
}

/// All abelian squares, sorted by (half, start). O(n²) time overall.
pub fn abelian_squares(word: &[u8]) -> Vec<SquareOcc> {
    let mut diff = DiffCounter::new();
    let mut square_at = Vec::new();
    let mut out = Vec::new();
    for half in 1..=word.len() / 2 {
        squares_of_half(word, half, &mut diff, &mut square_at);
        out.extend(
            square_at
                .iter()
                .enumerate()
                .filter(|(_, &s)| s)
                .map(|(start, _)| SquareOcc { start, half }),
        );
    }
    out
}
