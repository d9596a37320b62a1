use std::fmt;

/// A permutation of `{0,…,n-1}` stored by images.
///
/// Composition is right-to-left: `(σ∘τ)(x) = σ(τ(x))`. Generators
/// `s_m` are 0-based here and swap `m, m+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Panics unless `images` is a bijection of `0..len`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x < images.len() && !seen[x], "not a permutation: {images:?}");
            seen[x] = true;
        }
        Perm(images)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, j);
        Perm(v)
    }

    pub fn adjacent(n: usize, m: usize) -> Self {
        Self::transposition(n, m, m + 1)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Place permutation of a tuple: `σ(j)_{σ(k)} = j_k`.
    pub fn act_on<T: Clone>(&self, j: &[T]) -> Vec<T> {
        let mut out = j.to_vec();
        for (k, x) in j.iter().enumerate() {
            out[self.0[k]] = x.clone();
        }
        out
    }

    /// Adjacent generators `[m_1,…,m_k]` with `self = s_{m_1}∘⋯∘s_{m_k}`,
    /// of minimal length.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.0.clone();
        let mut peeled = Vec::new();
        // p ∘ s_i swaps entries i, i+1 of the image list
        while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
            p.swap(i, i + 1);
            peeled.push(i);
        }
        peeled.reverse();
        peeled
    }

    pub fn length(&self) -> usize {
        let n = self.0.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .count()
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths, weakly decreasing.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// A representative of the class with the given cycle type: consecutive
    /// cycles `(0 1 … λ_1-1)(λ_1 …)…`.
    pub fn of_cycle_type(parts: &[usize]) -> Perm {
        let n = parts.iter().sum();
        let mut v: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in parts {
            for k in 0..len {
                v[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Perm(v)
    }

    /// All permutations of `0..n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_multiply_back() {
        for n in 0..=5 {
            for p in Perm::all(n) {
                let w = p.reduced_word();
                assert_eq!(w.len(), p.length());
                let prod = w
                    .iter()
                    .fold(Perm::identity(n), |acc, &m| acc.compose(&Perm::adjacent(n, m)));
                assert_eq!(prod, p);
            }
        }
    }

    #[test]
    fn place_action_is_left_action() {
        let j = ['a', 'b', 'c', 'd'];
        for s in Perm::all(4) {
            for t in Perm::all(4).into_iter().step_by(5) {
                assert_eq!(s.compose(&t).act_on(&j), s.act_on(&t.act_on(&j)));
            }
        }
        assert_eq!(Perm::adjacent(3, 0).act_on(&[1, 2, 3]), vec![2, 1, 3]);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Perm::of_cycle_type(&[3, 1]).cycle_type(), vec![3, 1]);
        assert_eq!(Perm::identity(3).cycle_type(), vec![1, 1, 1]);
        assert_eq!(Perm::transposition(4, 0, 3).sign(), -1);
        assert_eq!(Perm::all(4).len(), 24);
    }
}
