use crate::ratmat::{Mat, Scalar};
use crate::{Error, Result};

use super::perm::Perm;
use super::young::{index_words, YoungDiagram};

/// Matrices of the adjacent transpositions `s_0,…,s_{n-2}` (0-based) in a
/// representation of S_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrices {
    pub degree: usize,
    pub dim: usize,
    pub gens: Vec<Mat>,
}

impl RepMatrices {
    pub fn trivial(n: usize) -> Self {
        Self::scalar_rep(n, Scalar::one())
    }

    pub fn sign(n: usize) -> Self {
        Self::scalar_rep(n, Scalar::int(-1))
    }

    fn scalar_rep(n: usize, s: Scalar) -> Self {
        RepMatrices {
            degree: n,
            dim: 1,
            gens: (0..n.saturating_sub(1)).map(|_| Mat::scalar(1, &s)).collect(),
        }
    }

    /// Matrix of an arbitrary permutation via its reduced word.
    pub fn matrix_of(&self, p: &Perm) -> Mat {
        p.reduced_word()
            .iter()
            .fold(Mat::identity(self.dim), |acc, &m| &acc * &self.gens[m])
    }

    pub fn character(&self, p: &Perm) -> Scalar {
        self.matrix_of(p).trace()
    }

    /// Involution, braid and distant-commutation relations.
    pub fn check_relations(&self) -> bool {
        let id = Mat::identity(self.dim);
        let g = &self.gens;
        for m in 0..g.len() {
            if g[m].shape() != (self.dim, self.dim) || &g[m] * &g[m] != id {
                return false;
            }
            if m + 1 < g.len() {
                let lhs = &(&g[m] * &g[m + 1]) * &g[m];
                let rhs = &(&g[m + 1] * &g[m]) * &g[m + 1];
                if lhs != rhs {
                    return false;
                }
            }
            for k in m + 2..g.len() {
                if &g[m] * &g[k] != &g[k] * &g[m] {
                    return false;
                }
            }
        }
        true
    }

    /// `Σ_{m=2}^n s_{1m}` in this representation.
    pub fn star_sum(&self) -> Mat {
        let mut acc = Mat::zeros(self.dim, self.dim);
        for m in 1..self.degree {
            acc = &acc + &self.matrix_of(&Perm::transposition(self.degree, 0, m));
        }
        acc
    }
}

/// Young's seminormal form on standard tableaux.
///
/// For `k, k+1` in different rows and columns of `T`, with
/// `ρ = c(k+1) − c(k)`, `s_k T = T/ρ + b·T'` where `T' = s_kT` and `b = 1` when
/// `k+1` lies below `k` in `T`, `b = 1 − 1/ρ²` otherwise.
pub fn seminormal_rep(mu: &YoungDiagram) -> RepMatrices {
    let n = mu.size();
    let tabs = mu.standard_tableaux();
    let index = index_words(&tabs);
    let dim = tabs.len();
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for k in 1..n {
        let mut g = Mat::zeros(dim, dim);
        for (t, word) in tabs.iter().enumerate() {
            let pos = mu.positions(word);
            let (r1, c1) = pos[k];
            let (r2, c2) = pos[k + 1];
            if r1 == r2 {
                g.set(t, t, Scalar::one());
                continue;
            }
            if c1 == c2 {
                g.set(t, t, Scalar::int(-1));
                continue;
            }
            let rho = (c2 as i64 - r2 as i64) - (c1 as i64 - r1 as i64);
            let inv_rho = Scalar::frac(1, rho);
            g.set(t, t, inv_rho.clone());
            let swapped: Vec<usize> = word
                .iter()
                .map(|&x| if x == k { k + 1 } else if x == k + 1 { k } else { x })
                .collect();
            let t2 = index[&swapped];
            let b = if r2 > r1 { Scalar::one() } else { Scalar::one() - &inv_rho * &inv_rho };
            g.set(t2, t, b);
        }
        gens.push(g);
    }
    RepMatrices { degree: n, dim, gens }
}

/// Minimal coset representatives for S_n / (S_{n_1}×⋯×S_{n_r}).
///
/// Each representative is increasing on every block of consecutive positions;
/// they are listed in lexicographic order of their image lists.
pub fn young_coset_reps(sizes: &[usize]) -> Vec<Perm> {
    let n: usize = sizes.iter().sum();
    let block_of: Vec<usize> = sizes.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat_n(b, s)).collect();
    let mut out = Vec::new();
    for p in Perm::all(n) {
        let im = p.images();
        if (1..n).all(|k| block_of[k] != block_of[k - 1] || im[k - 1] < im[k]) {
            out.push(p);
        }
    }
    out
}

/// An induced representation together with the coset data used to build it.
#[derive(Clone, Debug)]
pub struct Induced {
    pub rep: RepMatrices,
    pub sizes: Vec<usize>,
    pub cosets: Vec<Perm>,
    /// Dimension of the outer tensor product `X_1 ⊗ ⋯ ⊗ X_r`.
    pub inner_dim: usize,
}

/// Decompose `g σ_c = σ_{c'} h` with `h` in the Young subgroup. Returns `c'`
/// and the block permutations `h_ℓ`.
pub fn coset_step(sizes: &[usize], cosets: &[Perm], g: &Perm, c: usize) -> (usize, Vec<Perm>) {
    let gs = g.compose(&cosets[c]);
    let mut images = Vec::with_capacity(gs.degree());
    let mut start = 0;
    for &s in sizes {
        let mut block: Vec<usize> = gs.images()[start..start + s].to_vec();
        block.sort_unstable();
        images.extend(block);
        start += s;
    }
    let target = Perm::from_images(images);
    let c2 = cosets.iter().position(|p| *p == target).expect("coset representative");
    let h = target.inverse().compose(&gs);
    let mut hs = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &s in sizes {
        let local: Vec<usize> = (start..start + s).map(|x| h.apply(x) - start).collect();
        hs.push(Perm::from_images(local));
        start += s;
    }
    (c2, hs)
}

/// Kronecker product of block matrices, the first factor most significant.
pub fn tensor_matrix(blocks: &[RepMatrices], hs: &[Perm]) -> Mat {
    blocks
        .iter()
        .zip(hs)
        .fold(Mat::identity(1), |acc, (x, h)| acc.kron(&x.matrix_of(h)))
}

/// Induce the outer tensor of the `X_ℓ` from the Young subgroup to S_n. The
/// basis is coset-major, then tensor index.
pub fn induce_rep(n: usize, blocks: &[(usize, RepMatrices)]) -> Result<Induced> {
    let sizes: Vec<usize> = blocks.iter().map(|b| b.0).collect();
    if sizes.iter().sum::<usize>() != n {
        return Err(Error::SizeMismatch(format!("block sizes {sizes:?} do not sum to {n}")));
    }
    if let Some((s, x)) = blocks.iter().find(|(s, x)| x.degree != *s) {
        return Err(Error::SizeMismatch(format!("block of size {s} carries an S_{} rep", x.degree)));
    }
    let reps: Vec<RepMatrices> = blocks.iter().map(|b| b.1.clone()).collect();
    let inner_dim: usize = reps.iter().map(|x| x.dim).product();
    let cosets = young_coset_reps(&sizes);
    let dim = cosets.len() * inner_dim;
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for m in 0..n.saturating_sub(1) {
        let g = Perm::adjacent(n, m);
        let mut mat = Mat::zeros(dim, dim);
        for c in 0..cosets.len() {
            let (c2, hs) = coset_step(&sizes, &cosets, &g, c);
            mat.set_block(c2 * inner_dim, c * inner_dim, &tensor_matrix(&reps, &hs));
        }
        gens.push(mat);
    }
    Ok(Induced { rep: RepMatrices { degree: n, dim, gens }, sizes, cosets, inner_dim })
}

/// Whether `x ± ν Σ_{m=2}^r s_{1m}` are both units of `𝕜[S_r]`, decided from
/// their left regular representation matrices.
pub fn central_sum_invertible(x: &Scalar, nu: &Scalar, r: usize) -> Result<bool> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    if r > 6 {
        return Err(Error::ResourceLimit(format!("regular representation of S_{r} exceeds S_6")));
    }
    let elems = Perm::all(r);
    let index: std::collections::HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let size = elems.len();
    let left = |g: &Perm| {
        let mut m = Mat::zeros(size, size);
        for (h, p) in elems.iter().enumerate() {
            m.set(index[&g.compose(p)], h, Scalar::one());
        }
        m
    };
    let mut c = Mat::zeros(size, size);
    for m in 1..r {
        c = &c + &left(&Perm::transposition(r, 0, m));
    }
    let base = Mat::scalar(size, x);
    for s in [nu.clone(), -nu] {
        let elt = &base + &c.scale(&s);
        if elt.rank() < size {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symg::young::partitions;

    fn yd(p: &[usize]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    #[test]
    fn row_and_column_reps() {
        let r = seminormal_rep(&yd(&[4]));
        assert!(r.gens.iter().all(|g| *g == Mat::identity(1)));
        let s = seminormal_rep(&yd(&[1, 1]));
        assert_eq!(s.gens, vec![Mat::from_ints(&[[-1]])]);
    }

    #[test]
    fn hook_rep_of_s3() {
        let r = seminormal_rep(&yd(&[2, 1]));
        assert_eq!(r.dim, 2);
        for t in [Perm::transposition(3, 0, 1), Perm::transposition(3, 0, 2), Perm::transposition(3, 1, 2)] {
            assert!(r.character(&t).is_zero());
        }
        let c = r.star_sum();
        // eigenvalues {1,-1}: trace 0 and C² = 1
        assert!(c.trace().is_zero());
        assert_eq!(&c * &c, Mat::identity(2));
    }

    #[test]
    fn relations_up_to_five() {
        for n in 1..=5 {
            for mu in partitions(n) {
                assert!(seminormal_rep(&mu).check_relations(), "{mu:?}");
            }
        }
    }

    #[test]
    fn central_sum_examples() {
        for r in 1..=4 {
            assert!(central_sum_invertible(&Scalar::one(), &Scalar::zero(), r).unwrap());
        }
        assert!(!central_sum_invertible(&Scalar::zero(), &Scalar::one(), 1).unwrap());
        assert!(!central_sum_invertible(&Scalar::int(2), &Scalar::one(), 3).unwrap());
        assert!(matches!(
            central_sum_invertible(&Scalar::one(), &Scalar::one(), 7),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn induce_examples() {
        let t1 = RepMatrices::trivial(1);
        let ind = induce_rep(2, &[(1, t1.clone()), (1, t1.clone())]).unwrap();
        assert_eq!(ind.rep.dim, 2);
        assert_eq!(ind.rep.gens[0], Mat::from_ints(&[[0, 1], [1, 0]]));

        let ind = induce_rep(2, &[(2, RepMatrices::sign(2))]).unwrap();
        assert_eq!(ind.rep.dim, 1);
        assert_eq!(ind.rep.gens[0], Mat::from_ints(&[[-1]]));

        let ind = induce_rep(3, &[(2, RepMatrices::trivial(2)), (1, t1)]).unwrap();
        assert_eq!(ind.rep.dim, 3);
        assert_eq!(ind.rep.character(&Perm::identity(3)), Scalar::int(3));
        assert_eq!(ind.rep.character(&Perm::transposition(3, 0, 1)), Scalar::int(1));
        assert!(ind.rep.check_relations());

        assert!(induce_rep(3, &[(2, RepMatrices::trivial(2))]).is_err());
    }

    #[test]
    fn coset_reps_are_minimal() {
        let reps = young_coset_reps(&[2, 1]);
        let images: Vec<Vec<usize>> = reps.iter().map(|p| p.images().to_vec()).collect();
        assert_eq!(images, vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 2, 0]]);
    }
}
