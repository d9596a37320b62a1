use super::cube::Cube;
use crate::ratmat::Mat;
use crate::{Error, Result};

/// Independent columns of `m`, chosen at the pivots of its reduced form.
pub fn column_basis(m: &Mat) -> Mat {
    let pivots = m.rref().pivots;
    let cols: Vec<Vec<_>> = pivots.iter().map(|&c| m.col(c)).collect();
    Mat::from_columns(m.rows(), &cols)
}

/// The cube of images of commuting idempotents `ψ_1, …, ψ_m` on one space:
/// `Z(J) = Im ∏_{q∈J} ψ_q`, with `ψ_{J,p}` the restriction of `ψ_p`.
pub fn idempotent_cube(psis: &[Mat]) -> Result<Cube> {
    let k = psis.first().map_or(0, Mat::rows);
    for (a, p) in psis.iter().enumerate() {
        if p.shape() != (k, k) {
            return Err(Error::ShapeMismatch(format!("ψ_{} is {:?}", a + 1, p.shape())));
        }
        if &(p * p) != p {
            return Err(Error::InvalidArgument(format!("ψ_{} is not idempotent", a + 1)));
        }
        if psis[..a].iter().any(|q| (p * q) != (q * p)) {
            return Err(Error::InvalidArgument(format!("ψ_{} does not commute with an earlier map", a + 1)));
        }
    }
    let size = psis.len();
    let bases: Vec<Mat> = (0..(1u32 << size))
        .map(|j| {
            let prod = (0..size)
                .filter(|&q| j & (1 << q) != 0)
                .fold(Mat::identity(k), |acc, q| &psis[q] * &acc);
            column_basis(&prod)
        })
        .collect();
    let mut cube = Cube::new(size, bases.iter().map(Mat::cols).collect())?;
    for j in 0..(1u32 << size) {
        for p in (0..size).filter(|&p| j & (1 << p) == 0) {
            let image = &psis[p] * &bases[j as usize];
            let m = bases[(j | (1 << p)) as usize].solve_columns(&image)?;
            cube.set_map(j, p, m)?;
        }
    }
    Ok(cube)
}
