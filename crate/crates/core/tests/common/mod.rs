#![allow(dead_code)]

use abelian_runs::{ParikhVector, Run};

/// Every word of length `n` over `symbols`, in lexicographic-by-code order.
pub fn words(symbols: &[u8], n: usize) -> impl Iterator<Item = Vec<u8>> + '_ {
    let total = symbols.len().pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let s = symbols[code % symbols.len()];
                code /= symbols.len();
                s
            })
            .collect()
    })
}

/// Every vector of dimension `dim` with norm in `1..=max_norm`.
pub fn periods(dim: usize, max_norm: usize) -> Vec<ParikhVector> {
    fn rec(dim: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == dim {
            out.push(cur.clone());
            return;
        }
        for c in 0..=left {
            cur.push(c as u32);
            rec(dim, left - c, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(dim, max_norm, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(ParikhVector::new)
        .filter(|v| v.norm() >= 1)
        .collect()
}

pub type Tuple = (usize, usize, usize, usize, Vec<u32>);

pub fn tuple(r: &Run) -> Tuple {
    (r.start, r.head, r.tail, r.end, r.period.counts().to_vec())
}

pub fn sorted_tuples(runs: &[Run]) -> Vec<Tuple> {
    let mut v: Vec<_> = runs.iter().map(tuple).collect();
    v.sort();
    v
}
