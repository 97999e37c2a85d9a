//! Intrusive doubly-linked list over anchor indices `0..p`.
//!
//! Nodes live in fixed arrays indexed by anchor, so the pointer of an anchor
//! is the anchor itself and insert/delete/first are O(1).

const NIL: usize = usize::MAX;

#[derive(Clone, Debug)]
pub struct AnchorList {
    prev: Vec<usize>,
    next: Vec<usize>,
    linked: Vec<bool>,
    head: usize,
    tail: usize,
}

impl AnchorList {
    pub fn new(capacity: usize) -> Self {
        AnchorList {
            prev: vec![NIL; capacity],
            next: vec![NIL; capacity],
            linked: vec![false; capacity],
            head: NIL,
            tail: NIL,
        }
    }

    pub fn push_back(&mut self, anchor: usize) {
        debug_assert!(!self.linked[anchor], "anchor {anchor} already linked");
        self.prev[anchor] = self.tail;
        self.next[anchor] = NIL;
        if self.tail == NIL {
            self.head = anchor;
        } else {
            self.next[self.tail] = anchor;
        }
        self.tail = anchor;
        self.linked[anchor] = true;
    }

    /// Unlinks `anchor`; returns false if it was not in the list.
    pub fn remove(&mut self, anchor: usize) -> bool {
        if !self.linked[anchor] {
            return false;
        }
        let (p, n) = (self.prev[anchor], self.next[anchor]);
        if p == NIL {
            self.head = n;
        } else {
            self.next[p] = n;
        }
        if n == NIL {
            self.tail = p;
        } else {
            self.prev[n] = p;
        }
        self.prev[anchor] = NIL;
        self.next[anchor] = NIL;
        self.linked[anchor] = false;
        true
    }

    #[inline]
    pub fn first(&self) -> Option<usize> {
        (self.head != NIL).then_some(self.head)
    }

    #[inline]
    pub fn contains(&self, anchor: usize) -> bool {
        self.linked[anchor]
    }

    pub fn is_empty(&self) -> bool {
        self.head == NIL
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut cur = self.head;
        std::iter::from_fn(move || {
            if cur == NIL {
                return None;
            }
            let out = cur;
            cur = self.next[cur];
            Some(out)
        })
    }
}
