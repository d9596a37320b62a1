use std::collections::HashMap;

use crate::{Error, Result};

/// A partition, rows weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram(Vec<usize>);

/// Cell contents and corner data of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contents {
    /// `(row, col, col - row)` per cell, rows top to bottom, 0-based.
    pub cells: Vec<(usize, usize, i64)>,
    /// Removable cells `(row, col, content)`, top to bottom.
    pub corners: Vec<(usize, usize, i64)>,
    pub total: i64,
    /// `(height a, width b)` when every row has the same length.
    pub rectangle: Option<(usize, usize)>,
}

impl YoungDiagram {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("not a partition: {parts:?}")));
        }
        Ok(YoungDiagram(parts))
    }

    pub fn row(n: usize) -> Self {
        YoungDiagram(if n == 0 { vec![] } else { vec![n] })
    }

    pub fn column(n: usize) -> Self {
        YoungDiagram(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Self {
        let w = self.0.first().copied().unwrap_or(0);
        YoungDiagram((0..w).map(|c| self.0.iter().filter(|&&r| r > c).count()).collect())
    }

    pub fn contents(&self) -> Contents {
        let mut cells = Vec::new();
        let mut corners = Vec::new();
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                cells.push((r, c, c as i64 - r as i64));
            }
            let below = self.0.get(r + 1).copied().unwrap_or(0);
            if len > below {
                corners.push((r, len - 1, len as i64 - 1 - r as i64));
            }
        }
        let total = cells.iter().map(|c| c.2).sum();
        let rectangle = match self.0.first() {
            Some(&b) if self.0.iter().all(|&p| p == b) => Some((self.0.len(), b)),
            _ => None,
        };
        Contents { cells, corners, total, rectangle }
    }

    /// Dimension of the irreducible by the hook length formula.
    pub fn hook_dimension(&self) -> usize {
        let t = self.transpose();
        let mut hooks: u128 = 1;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                hooks *= ((len - c - 1) + (t.0[c] - r - 1) + 1) as u128;
            }
        }
        let fact: u128 = (1..=self.size() as u128).product();
        (fact / hooks) as usize
    }

    /// Standard tableaux as row-reading words, sorted lexicographically.
    pub fn standard_tableaux(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut out = Vec::new();
        let mut fill: Vec<Vec<usize>> = self.0.iter().map(|_| Vec::new()).collect();
        fn rec(parts: &[usize], k: usize, n: usize, fill: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<usize>>) {
            if k > n {
                out.push(fill.iter().flatten().copied().collect());
                return;
            }
            for r in 0..parts.len() {
                let c = fill[r].len();
                if c < parts[r] && (r == 0 || fill[r - 1].len() > c) {
                    fill[r].push(k);
                    rec(parts, k + 1, n, fill, out);
                    fill[r].pop();
                }
            }
        }
        rec(&self.0, 1, n, &mut fill, &mut out);
        out.sort();
        out
    }

    /// Map from a row-reading word back to `(row, col)` of each entry `1..=n`.
    pub fn positions(&self, word: &[usize]) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); word.len() + 1];
        let mut k = 0;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                pos[word[k]] = (r, c);
                k += 1;
            }
        }
        pos
    }
}

/// All partitions of `n`, in reverse lexicographic order starting with `(n)`.
pub fn partitions(n: usize) -> Vec<YoungDiagram> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if rem == 0 {
            out.push(YoungDiagram(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn index_words(words: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect()
}
