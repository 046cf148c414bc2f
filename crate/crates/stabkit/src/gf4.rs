//! GF(4) arithmetic on bit pairs and the GF(4)-linearity test.
//!
//! An element a + b*xi of the four-element field is stored as the bit pair
//! (a, b); addition is componentwise xor. Scalar multiplication by xi acts
//! on a packed 2n-bit Pauli vector as the per-qubit map (z, x) -> (x, z+x),
//! which cycles the bit patterns of Z -> X -> Y -> Z. A binary stabilizer
//! space is GF(4)-linear exactly when it is closed under that map; the
//! block identity of [`is_gf4_linear`] decides this from the generator
//! matrix alone, and [`is_xi_closed`] is the definitional cross-check.

use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::lclifford::{Gl2, LocalCliffordOp};
use crate::stabilizer::StabilizerGroup;

/// An element a + b*xi of GF(4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gf4Element {
    pub a: bool,
    pub b: bool,
}

/// The four field elements.
pub const GF4_ZERO: Gf4Element = Gf4Element { a: false, b: false };
pub const GF4_ONE: Gf4Element = Gf4Element { a: true, b: false };
pub const GF4_XI: Gf4Element = Gf4Element { a: false, b: true };
pub const GF4_XI_SQ: Gf4Element = Gf4Element { a: true, b: true };

impl Gf4Element {
    pub fn new(a: bool, b: bool) -> Self {
        Gf4Element { a, b }
    }

    pub fn is_zero(self) -> bool {
        !self.a && !self.b
    }
}

impl Add for Gf4Element {
    type Output = Gf4Element;
    fn add(self, rhs: Gf4Element) -> Gf4Element {
        Gf4Element {
            a: self.a ^ rhs.a,
            b: self.b ^ rhs.b,
        }
    }
}

/// Field multiplication: (a, b) * (a', b') = (aa' + bb', ab' + ba' + bb').
impl Mul for Gf4Element {
    type Output = Gf4Element;
    fn mul(self, rhs: Gf4Element) -> Gf4Element {
        Gf4Element {
            a: (self.a & rhs.a) ^ (self.b & rhs.b),
            b: (self.a & rhs.b) ^ (self.b & rhs.a) ^ (self.b & rhs.b),
        }
    }
}

pub fn gf4_mul(p: Gf4Element, q: Gf4Element) -> Gf4Element {
    p * q
}

/// Scalar multiplication of a packed 2n-bit Pauli vector by xi: per qubit,
/// (z_i, x_i) -> (x_i, z_i + x_i). Applying it three times is the identity.
pub fn xi_scale(v: &BitVec) -> Result<BitVec> {
    if v.len() % 2 != 0 {
        return Err(Error::Domain(format!(
            "xi_scale needs an even-length vector, got {}",
            v.len()
        )));
    }
    let n = v.len() / 2;
    let mut out = BitVec::zeros(v.len());
    for i in 0..n {
        let z = v.get(i);
        let x = v.get(n + i);
        out.set(i, x);
        out.set(n + i, z ^ x);
    }
    Ok(out)
}

/// GF(4)-linearity via the generator-block identity
/// `Sz^T Sz + Sx^T Sx + Sz^T Sx = 0`, where Sz and Sx are the z and x
/// blocks of the generator matrix.
pub fn is_gf4_linear(g: &StabilizerGroup) -> bool {
    let n = g.num_qubits();
    let s = g.gen_matrix();
    let sz = BitMatrix::from_rows((0..n).map(|i| s.row(i).clone()).collect());
    let sx = BitMatrix::from_rows((0..n).map(|i| s.row(n + i).clone()).collect());
    let szt = sz.transpose();
    let m1 = szt.mul(&sz);
    let m2 = sx.transpose().mul(&sx);
    let m3 = szt.mul(&sx);
    (0..n).all(|r| {
        let mut row = m1.row(r).clone();
        row.xor_assign(m2.row(r));
        row.xor_assign(m3.row(r));
        row.is_zero()
    })
}

/// Definitional GF(4)-linearity: the xi-scaled image of every generator
/// column still lies in the stabilizer space. Must agree with
/// [`is_gf4_linear`] on every group.
pub fn is_xi_closed(g: &StabilizerGroup) -> bool {
    (0..g.num_qubits()).all(|j| {
        let col = g.gen_matrix().column(j);
        let scaled = xi_scale(&col).expect("generator columns have even length");
        g.contains_bits(&scaled)
    })
}

/// The local Clifford operation whose every tensor factor is the binary
/// xi-scaling matrix [[0,1],[1,1]]. For a GF(4)-linear group it maps the
/// stabilizer space to itself.
pub fn clifford_v(n: usize) -> LocalCliffordOp {
    LocalCliffordOp::from_factors(vec![Gl2::from_index(4); n])
}
