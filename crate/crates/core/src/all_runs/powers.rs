//! Maximal abelian powers and their extension to anchored runs.

use super::naming::{Namer, PeriodId};
use super::squares::SquareOcc;

/// Chain of `blocks >= 2` consecutive abelian-equivalent blocks of length
/// `half`, maximal in both directions for its anchor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaxPower {
    pub start: usize,
    pub end: usize,
    pub half: usize,
    pub blocks: usize,
}

impl MaxPower {
    pub fn anchor(&self) -> usize {
        self.start % self.half
    }
}

/// An anchored run labelled with the identifier of its cores' Parikh vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AnchoredRunRec {
    pub start: usize,
    pub head: usize,
    pub tail: usize,
    pub end: usize,
    pub norm: usize,
    pub period_id: PeriodId,
}

impl AnchoredRunRec {
    pub fn anchor(&self) -> usize {
        (self.start + self.head) % self.norm
    }

    pub fn cores(&self) -> usize {
        (self.end + 1 - self.start - self.head - self.tail) / self.norm
    }

    pub fn core_start(&self) -> usize {
        self.start + self.head
    }
}

/// Appends the maximal powers of half-length `half` given the square marks.
pub(crate) fn powers_of_half(half: usize, square_at: &[bool], out: &mut Vec<MaxPower>) {
    for start in 0..square_at.len() {
        if !square_at[start] || (start >= half && square_at[start - half]) {
            continue;
        }
        let mut squares = 1;
        while start + squares * half < square_at.len() && square_at[start + squares * half] {
            squares += 1;
        }
        out.push(MaxPower {
            start,
            end: start + (squares + 1) * half - 1,
            half,
            blocks: squares + 1,
        });
    }
}

/// Merges overlapping squares `(i, p)` and `(i + p, p)` into maximal powers,
/// sorted by (half, start).
pub fn maximal_powers(word: &[u8], squares: &[SquareOcc]) -> Vec<MaxPower> {
    let n = word.len();
    let mut out = Vec::new();
    let mut square_at = Vec::new();
    let mut sorted = squares.to_vec();
    sorted.sort_by_key(|s| (s.half, s.start));
    for group in sorted.chunk_by(|a, b| a.half == b.half) {
        let half = group[0].half;
        square_at.clear();
        square_at.resize(n + 1 - 2 * half, false);
        for s in group {
            square_at[s.start] = true;
        }
        powers_of_half(half, &square_at, &mut out);
    }
    out
}

/// Scratch counts indexed by byte, restored to zero after each use.
pub(crate) struct Room {
    room: [u32; 256],
}

impl Room {
    pub(crate) fn new() -> Self {
        Room { room: [0; 256] }
    }

    /// Longest head and tail (each shorter than `half`) around the power
    /// whose Parikh vectors fit in the cores' vector.
    pub(crate) fn head_tail(&mut self, word: &[u8], power: &MaxPower) -> (usize, usize) {
        let p = power.half;
        let core = &word[power.start..power.start + p];

        let load = |room: &mut [u32; 256]| {
            for &c in core {
                room[c as usize] += 1;
            }
        };
        let clear = |room: &mut [u32; 256]| {
            for &c in core {
                room[c as usize] = 0;
            }
        };

        load(&mut self.room);
        let mut head = 0;
        while head + 1 < p && head < power.start {
            let c = word[power.start - 1 - head] as usize;
            if self.room[c] == 0 {
                break;
            }
            self.room[c] -= 1;
            head += 1;
        }
        clear(&mut self.room);

        load(&mut self.room);
        let mut tail = 0;
        while tail + 1 < p && power.end + 1 + tail < word.len() {
            let c = word[power.end + 1 + tail] as usize;
            if self.room[c] == 0 {
                break;
            }
            self.room[c] -= 1;
            tail += 1;
        }
        clear(&mut self.room);
        (head, tail)
    }
}

pub(crate) fn extend_one(word: &[u8], power: &MaxPower, namer: &Namer, room: &mut Room) -> AnchoredRunRec {
    let (head, tail) = room.head_tail(word, power);
    AnchoredRunRec {
        start: power.start - head,
        head,
        tail,
        end: power.end + tail,
        norm: power.half,
        period_id: namer.id(power.start, power.half),
    }
}

/// Extends each maximal power by its longest admissible head and tail,
/// giving every anchored run with at least two cores.
pub fn extend_to_anchored_runs(word: &[u8], powers: &[MaxPower], namer: &Namer) -> Vec<AnchoredRunRec> {
    let mut room = Room::new();
    powers
        .iter()
        .map(|power| extend_one(word, power, namer, &mut room))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::all_runs::naming::{name_fragments, NamingMode};
    use crate::all_runs::squares::abelian_squares;

    fn powers(w: &[u8]) -> Vec<(usize, usize, usize, usize)> {
        maximal_powers(w, &abelian_squares(w))
            .iter()
            .map(|p| (p.start, p.end, p.half, p.blocks))
            .collect()
    }

    #[test]
    fn unary_powers() {
        let p = powers(b"aaaa");
        assert!(p.contains(&(0, 3, 2, 2)));
        assert!(p.contains(&(0, 3, 1, 4)));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn no_squares_no_powers() {
        assert!(powers(b"ab").is_empty());
    }

    #[test]
    fn example_word_power() {
        assert!(powers(b"abaababaabbb").contains(&(3, 10, 4, 2)));
    }

    fn extended(w: &[u8]) -> Vec<(usize, usize, usize, usize)> {
        let namer = name_fragments(w, NamingMode::Deterministic, None);
        let ps = maximal_powers(w, &abelian_squares(w));
        extend_to_anchored_runs(w, &ps, &namer)
            .iter()
            .map(|r| (r.start, r.head, r.tail, r.end))
            .collect()
    }

    #[test]
    fn extension_examples() {
        assert!(extended(b"abaababaabbb").contains(&(0, 3, 1, 11)));
        assert!(extended(b"aaaa").contains(&(0, 0, 0, 3)));
        let r = extended(b"ababaaa");
        assert!(r.contains(&(0, 0, 1, 4)), "{r:?}");
        assert!(r.contains(&(0, 1, 1, 5)), "{r:?}");
    }

    #[test]
    fn room_is_restored() {
        let w = b"abcabcabcaab";
        let mut room = Room::new();
        for p in maximal_powers(w, &abelian_squares(w)) {
            room.head_tail(w, &p);
            assert!(room.room.iter().all(|&c| c == 0));
        }
    }
}
