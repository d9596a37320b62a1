use std::collections::BTreeMap;

use crate::ratmat::{Mat, Scalar};
use crate::{Error, Result};

/// A commutative cube on `Δ = {0, …, size−1}`: a space `Z(J)` for every
/// subset `J` (a bitmask) and maps `ψ_{J,p}: Z(J) → Z(J ∪ p)` for `p ∉ J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cube {
    size: usize,
    dims: Vec<usize>,
    maps: BTreeMap<(u32, usize), Mat>,
}

impl Cube {
    pub fn new(size: usize, dims: Vec<usize>) -> Result<Self> {
        if dims.len() != 1 << size {
            return Err(Error::ShapeMismatch(format!("{} spaces for a {size}-cube", dims.len())));
        }
        Ok(Cube { size, dims, maps: BTreeMap::new() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self, j: u32) -> usize {
        self.dims[j as usize]
    }

    pub fn set_map(&mut self, j: u32, p: usize, m: Mat) -> Result<()> {
        if j & (1 << p) != 0 || p >= self.size {
            return Err(Error::InvalidArgument(format!("no map out of {j:#b} along {p}")));
        }
        let expect = (self.dim(j | (1 << p)), self.dim(j));
        if m.shape() != expect {
            return Err(Error::ShapeMismatch(format!("ψ({j:#b},{p}) has shape {:?}, expected {expect:?}", m.shape())));
        }
        self.maps.insert((j, p), m);
        Ok(())
    }

    pub fn map(&self, j: u32, p: usize) -> Mat {
        self.maps.get(&(j, p)).cloned().unwrap_or_else(|| Mat::zeros(self.dim(j | (1 << p)), self.dim(j)))
    }

    /// `ψ_{J∪p,q} ψ_{J,p} = ψ_{J∪q,p} ψ_{J,q}` for all `J` and `p ≠ q` outside it.
    pub fn is_commutative(&self) -> bool {
        for j in 0..(1u32 << self.size) {
            for p in 0..self.size {
                for q in p + 1..self.size {
                    if j & (1 << p) != 0 || j & (1 << q) != 0 {
                        continue;
                    }
                    if &self.map(j | (1 << p), q) * &self.map(j, p) != &self.map(j | (1 << q), p) * &self.map(j, q) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The subcube on `Δ∖q` with `Z_0(J) = Z(J)` or, with `with_q`,
    /// `Z_1(J) = Z(J ∪ q)`.
    pub fn face(&self, q: usize, with_q: bool) -> Cube {
        let lift = |m: u32| {
            let low = m & ((1 << q) - 1);
            let high = (m >> q) << (q + 1);
            low | high | if with_q { 1 << q } else { 0 }
        };
        let size = self.size - 1;
        let dims = (0..(1u32 << size)).map(|m| self.dim(lift(m))).collect();
        let mut out = Cube { size, dims, maps: BTreeMap::new() };
        for m in 0..(1u32 << size) {
            for p in (0..size).filter(|&p| m & (1 << p) == 0) {
                let orig = if p < q { p } else { p + 1 };
                out.maps.insert((m, p), self.map(lift(m), orig));
            }
        }
        out
    }
}

/// Subsets of size `r` in increasing mask order.
pub(crate) fn masks_of_weight(size: usize, r: usize) -> Vec<u32> {
    (0..(1u32 << size)).filter(|m| m.count_ones() as usize == r).collect()
}

/// `(−1)^{#{q∈J : q>p}}`.
pub(crate) fn wedge_sign(j: u32, p: usize) -> Scalar {
    if (j >> (p + 1)).count_ones().is_multiple_of(2) {
        Scalar::one()
    } else {
        Scalar::int(-1)
    }
}

/// A bounded cochain complex `C^0 → C^1 → …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub dims: Vec<usize>,
    /// `d[r]: C^r → C^{r+1}`.
    pub d: Vec<Mat>,
}

impl Complex {
    pub fn new(dims: Vec<usize>, d: Vec<Mat>) -> Result<Self> {
        if d.len() + 1 != dims.len().max(1) {
            return Err(Error::ShapeMismatch(format!("{} differentials for {} terms", d.len(), dims.len())));
        }
        for (r, m) in d.iter().enumerate() {
            if m.shape() != (dims[r + 1], dims[r]) {
                return Err(Error::ShapeMismatch(format!("d_{r} has shape {:?}", m.shape())));
            }
        }
        Ok(Complex { dims, d })
    }

    pub fn squares_to_zero(&self) -> bool {
        self.d.windows(2).all(|w| (&w[1] * &w[0]).is_zero())
    }

    pub fn euler(&self) -> i64 {
        self.dims.iter().enumerate().map(|(r, &d)| if r % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

/// `C^r = ⊕_{|J|=r} Z(J) ⊗ det(J)` with the ascending wedge basis.
pub fn complex_from_cube(c: &Cube) -> Result<Complex> {
    if !c.is_commutative() {
        return Err(Error::InvalidArgument("non-commutative cube".into()));
    }
    let offsets: Vec<BTreeMap<u32, usize>> = (0..=c.size)
        .map(|r| {
            let mut off = 0;
            masks_of_weight(c.size, r)
                .into_iter()
                .map(|m| {
                    let o = off;
                    off += c.dim(m);
                    (m, o)
                })
                .collect()
        })
        .collect();
    let dims: Vec<usize> = (0..=c.size).map(|r| masks_of_weight(c.size, r).iter().map(|&m| c.dim(m)).sum()).collect();
    let mut d = Vec::with_capacity(c.size);
    for r in 0..c.size {
        let mut m = Mat::zeros(dims[r + 1], dims[r]);
        for (&j, &col) in &offsets[r] {
            for p in (0..c.size).filter(|&p| j & (1 << p) == 0) {
                let k = j | (1 << p);
                m.set_block(offsets[r + 1][&k], col, &c.map(j, p).scale(&wedge_sign(j, p)));
            }
        }
        d.push(m);
    }
    let x = Complex::new(dims, d)?;
    if !x.squares_to_zero() {
        return Err(Error::Internal("d² ≠ 0".into()));
    }
    Ok(x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cohomology {
    pub dims: Vec<usize>,
    /// Columns span `H^0 = Ker d_0`.
    pub h0_basis: Mat,
}

impl Cohomology {
    pub fn higher_vanish(&self) -> bool {
        self.dims.iter().skip(1).all(|&d| d == 0)
    }
}

/// `dim H^r = dim Ker d_r − rank d_{r−1}`.
pub fn cohomology(x: &Complex) -> Cohomology {
    let n = x.dims.len();
    let ranks: Vec<usize> = x.d.iter().map(Mat::rank).collect();
    let dims = (0..n)
        .map(|r| {
            let ker = x.dims[r] - ranks.get(r).copied().unwrap_or(0);
            ker - if r > 0 { ranks[r - 1] } else { 0 }
        })
        .collect();
    let h0_basis = match x.d.first() {
        Some(d0) => d0.kernel_basis(),
        None => Mat::identity(x.dims.first().copied().unwrap_or(0)),
    };
    Cohomology { dims, h0_basis }
}

/// Term-wise data of `0 → C(Z_1)[−1] → C(Z) → C(Z_0) → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeReport {
    pub exact: bool,
    pub chain_maps: bool,
    pub euler: (i64, i64, i64),
    pub cohomology_euler: (i64, i64, i64),
}

impl ConeReport {
    pub fn pass(&self) -> bool {
        self.exact
            && self.chain_maps
            && self.euler.0 == self.euler.1 - self.euler.2
            && self.cohomology_euler.0 == self.cohomology_euler.1 - self.cohomology_euler.2
    }
}

fn block_offsets(c: &Cube, r: usize) -> BTreeMap<u32, usize> {
    let mut off = 0;
    masks_of_weight(c.size, r)
        .into_iter()
        .map(|m| {
            let o = off;
            off += c.dim(m);
            (m, o)
        })
        .collect()
}

/// Build the cone sequence along `q` and check it.
pub fn cone_check(c: &Cube, q: usize) -> Result<ConeReport> {
    if q >= c.size {
        return Err(Error::InvalidArgument(format!("{q} is not in the cube")));
    }
    let z0 = c.face(q, false);
    let z1 = c.face(q, true);
    let (x, x0, x1) = (complex_from_cube(c)?, complex_from_cube(&z0)?, complex_from_cube(&z1)?);
    let lift = |m: u32| (m & ((1 << q) - 1)) | ((m >> q) << (q + 1));
    let mut iotas = Vec::new();
    let mut rhos = Vec::new();
    let mut exact = true;
    for r in 0..=c.size {
        let big = block_offsets(c, r);
        // ι: C^{r−1}(Z_1) → C^r(Z), x ⊗ e_J ↦ x ⊗ e_J ∧ e_q
        let src_dim = if r > 0 { x1.dims[r - 1] } else { 0 };
        let mut iota = Mat::zeros(x.dims[r], src_dim);
        if r > 0 {
            for (&m, &o) in &block_offsets(&z1, r - 1) {
                let j = lift(m);
                let dim = z1.dim(m);
                iota.set_block(big[&(j | (1 << q))], o, &Mat::identity(dim).scale(&wedge_sign(j, q)));
            }
        }
        let tgt_dim = if r < x0.dims.len() { x0.dims[r] } else { 0 };
        let mut rho = Mat::zeros(tgt_dim, x.dims[r]);
        if r < x0.dims.len() {
            for (&m, &o) in &block_offsets(&z0, r) {
                rho.set_block(o, big[&lift(m)], &Mat::identity(z0.dim(m)));
            }
        }
        exact &= iota.rank() == src_dim
            && rho.rank() == tgt_dim
            && (&rho * &iota).is_zero()
            && x.dims[r] == src_dim + tgt_dim;
        iotas.push(iota);
        rhos.push(rho);
    }
    let mut chain_maps = true;
    for r in 0..c.size {
        // d ι = −ι d_1 and ρ d = d_0 ρ
        let lhs = &x.d[r] * &iotas[r];
        let rhs = if r > 0 { -&(&iotas[r + 1] * &x1.d[r - 1]) } else { Mat::zeros(lhs.rows(), lhs.cols()) };
        chain_maps &= lhs == rhs;
        let lhs = &rhos[r + 1] * &x.d[r];
        let rhs = if r < x0.d.len() { &x0.d[r] * &rhos[r] } else { Mat::zeros(lhs.rows(), lhs.cols()) };
        chain_maps &= lhs == rhs;
    }
    let heuler = |x: &Complex| {
        cohomology(x).dims.iter().enumerate().map(|(r, &d)| if r % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    };
    Ok(ConeReport {
        exact,
        chain_maps,
        euler: (x.euler(), x0.euler(), x1.euler()),
        cohomology_euler: (heuler(&x), heuler(&x0), heuler(&x1)),
    })
}
