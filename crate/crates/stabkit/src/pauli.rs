//! Pauli operators in the binary symplectic representation.
//!
//! An n-qubit Pauli is a pair of length-n bit vectors (z, x) plus a phase
//! exponent e with overall phase i^e. Per qubit, (z, x) encodes the letter:
//! (0,0) = I, (0,1) = X, (1,0) = Z, (1,1) = Y. The z block always precedes
//! the x block when the two are packed into a single 2n-bit vector.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::dense::CMatrix;
use crate::error::{Error, Result};
use crate::gf2::BitVec;

/// Default qubit cap for dense expansion of a single Pauli.
pub const DEFAULT_DENSE_CAP: usize = 12;

/// A single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    /// The (z, x) bit pair for this letter.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (false, true),
            Letter::Z => (true, false),
            Letter::Y => (true, true),
        }
    }

    pub fn from_bits(z: bool, x: bool) -> Self {
        match (z, x) {
            (false, false) => Letter::I,
            (false, true) => Letter::X,
            (true, false) => Letter::Z,
            (true, true) => Letter::Y,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    /// The 2x2 matrix of this letter.
    pub fn dense(self) -> CMatrix {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        match self {
            Letter::I => CMatrix::from_rows(&[&[l, o], &[o, l]]),
            Letter::X => CMatrix::from_rows(&[&[o, l], &[l, o]]),
            Letter::Y => CMatrix::from_rows(&[&[o, -i], &[i, o]]),
            Letter::Z => CMatrix::from_rows(&[&[l, o], &[o, -l]]),
        }
    }
}

/// i-exponent of the product of two letters: letter_a * letter_b equals
/// i^PHASE_TABLE[a][b] times the letter with xored bits. Indexed by
/// 2*z + x, so I=0, X=1, Z=2, Y=3.
const PHASE_TABLE: [[u8; 4]; 4] = [
    // b:  I  X  Z  Y
    /* I */ [0, 0, 0, 0],
    /* X */ [0, 0, 3, 1], // X*Z = -iY, X*Y = iZ
    /* Z */ [0, 1, 0, 3], // Z*X = iY,  Z*Y = -iX
    /* Y */ [0, 3, 1, 0], // Y*X = -iZ, Y*Z = iX
];

/// A signed n-qubit Pauli operator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    n: usize,
    z: BitVec,
    x: BitVec,
    phase_exp: u8,
}

impl PauliOperator {
    /// The identity operator on `n` qubits.
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            n,
            z: BitVec::zeros(n),
            x: BitVec::zeros(n),
            phase_exp: 0,
        }
    }

    /// Assembles an operator from its binary parts. `phase_exp` is taken
    /// modulo 4.
    pub fn from_parts(z: BitVec, x: BitVec, phase_exp: u8) -> Result<Self> {
        if z.len() != x.len() {
            return Err(Error::DimensionMismatch {
                left: z.len(),
                right: x.len(),
            });
        }
        Ok(PauliOperator {
            n: z.len(),
            z,
            x,
            phase_exp: phase_exp & 3,
        })
    }

    /// Splits a packed 2n-bit vector (z block first) into an operator.
    pub fn from_packed_bits(bits: &BitVec, phase_exp: u8) -> Result<Self> {
        if bits.len() % 2 != 0 {
            return Err(Error::Domain(format!(
                "packed Pauli vector has odd length {}",
                bits.len()
            )));
        }
        let n = bits.len() / 2;
        Self::from_parts(bits.slice(0..n), bits.slice(n..2 * n), phase_exp)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    /// Phase exponent e, with overall phase i^e.
    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    /// True when the overall phase is +/-1.
    pub fn is_hermitian(&self) -> bool {
        self.phase_exp % 2 == 0
    }

    pub fn is_identity_bits(&self) -> bool {
        self.z.is_zero() && self.x.is_zero()
    }

    pub fn letter(&self, qubit: usize) -> Letter {
        Letter::from_bits(self.z.get(qubit), self.x.get(qubit))
    }

    /// The packed 2n-bit vector, z block first.
    pub fn packed_bits(&self) -> BitVec {
        self.z.concat(&self.x)
    }

    /// Flips the sign of the operator.
    pub fn negated(&self) -> Self {
        let mut p = self.clone();
        p.phase_exp = (p.phase_exp + 2) & 3;
        p
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Group product. Bit parts add modulo 2; the phase accumulates the
    /// per-qubit i-exponents of the 2x2 letter products.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.mul_assign_right(other)?;
        Ok(out)
    }

    /// In-place right multiplication: `self = self * other`. Avoids
    /// allocating in enumeration loops.
    pub fn mul_assign_right(&mut self, other: &Self) -> Result<()> {
        self.check_dims(other)?;
        let mut t = u32::from(self.phase_exp) + u32::from(other.phase_exp);
        for i in 0..self.n {
            let a = 2 * usize::from(self.z.get(i)) + usize::from(self.x.get(i));
            let b = 2 * usize::from(other.z.get(i)) + usize::from(other.x.get(i));
            t += u32::from(PHASE_TABLE[a][b]);
        }
        self.z.xor_assign(&other.z);
        self.x.xor_assign(&other.x);
        self.phase_exp = (t & 3) as u8;
        Ok(())
    }

    /// True when the operators commute: the symplectic inner product of
    /// their bit vectors vanishes.
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_dims(other)?;
        Ok(!(self.z.dot(&other.x) ^ self.x.dot(&other.z)))
    }

    /// The set of qubits on which the operator acts non-trivially.
    pub fn support(&self) -> SupportMask {
        SupportMask {
            n: self.n,
            bits: self.z.or(&self.x),
        }
    }

    pub fn weight(&self) -> usize {
        self.z.or(&self.x).count_ones()
    }

    /// Dense matrix alpha * M_1 (x) ... (x) M_n, capped at
    /// [`DEFAULT_DENSE_CAP`] qubits.
    pub fn to_dense(&self) -> Result<CMatrix> {
        self.to_dense_with_cap(DEFAULT_DENSE_CAP)
    }

    pub fn to_dense_with_cap(&self, cap: usize) -> Result<CMatrix> {
        if self.n > cap {
            return Err(Error::resource("dense Pauli expansion", self.n, cap, ""));
        }
        let mut m = CMatrix::identity(1);
        for i in 0..self.n {
            m = m.kron(&self.letter(i).dense());
        }
        let phase = Complex64::new(0.0, 1.0).powu(u32::from(self.phase_exp));
        Ok(m.scale(phase))
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.phase_exp {
            0 => {}
            1 => write!(f, "+i")?,
            2 => write!(f, "-")?,
            _ => write!(f, "-i")?,
        }
        for i in 0..self.n {
            write!(f, "{}", self.letter(i).to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Orders by letters (I < X < Y < Z per qubit, leftmost first), then by
/// phase exponent. Used to pick deterministic witnesses.
impl Ord for PauliOperator {
    fn cmp(&self, other: &Self) -> Ordering {
        let min = self.n.min(other.n);
        for i in 0..min {
            match self.letter(i).cmp(&other.letter(i)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.n
            .cmp(&other.n)
            .then(self.phase_exp.cmp(&other.phase_exp))
    }
}

impl PartialOrd for PauliOperator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Parses `sign? [IXYZ]+` with sign one of `+`, `-`, `+i`, `-i`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let mut phase_exp = 0u8;
        if let Some(&c) = chars.first() {
            if c == '+' || c == '-' {
                let minus = c == '-';
                pos = 1;
                if chars.get(1) == Some(&'i') {
                    pos = 2;
                    phase_exp = if minus { 3 } else { 1 };
                } else {
                    phase_exp = if minus { 2 } else { 0 };
                }
            }
        }
        if pos == chars.len() {
            return Err(Error::PauliParse {
                position: pos + 1,
                message: "empty Pauli body".to_string(),
            });
        }
        let n = chars.len() - pos;
        let mut z = BitVec::zeros(n);
        let mut x = BitVec::zeros(n);
        for (i, &c) in chars[pos..].iter().enumerate() {
            let letter = match c {
                'I' => Letter::I,
                'X' => Letter::X,
                'Y' => Letter::Y,
                'Z' => Letter::Z,
                other => {
                    return Err(Error::PauliParse {
                        position: pos + i + 1,
                        message: format!("invalid character '{other}'"),
                    })
                }
            };
            let (zb, xb) = letter.bits();
            z.set(i, zb);
            x.set(i, xb);
        }
        Ok(PauliOperator { n, z, x, phase_exp })
    }
}

/// A subset of qubit positions, stored as a bitmask. Indices are 0-based
/// internally; human-facing output is 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SupportMask {
    n: usize,
    bits: BitVec,
}

impl SupportMask {
    pub fn empty(n: usize) -> Self {
        SupportMask {
            n,
            bits: BitVec::zeros(n),
        }
    }

    pub fn full(n: usize) -> Self {
        SupportMask {
            n,
            bits: BitVec::from_bools(&vec![true; n]),
        }
    }

    /// Builds a mask from 0-based qubit indices.
    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        SupportMask {
            n,
            bits: BitVec::from_indices(n, indices),
        }
    }

    pub fn from_bits(bits: BitVec) -> Self {
        SupportMask {
            n: bits.len(),
            bits,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn contains(&self, qubit: usize) -> bool {
        self.bits.get(qubit)
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty_set(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn is_full(&self) -> bool {
        self.weight() == self.n
    }

    /// 0-based indices, ascending.
    pub fn indices(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    /// 1-based indices, ascending.
    pub fn indices_1based(&self) -> Vec<usize> {
        self.bits.ones().map(|i| i + 1).collect()
    }

    pub fn complement(&self) -> Self {
        let mut bits = BitVec::zeros(self.n);
        for i in 0..self.n {
            bits.set(i, !self.bits.get(i));
        }
        SupportMask { n: self.n, bits }
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        SupportMask {
            n: self.n,
            bits: self.bits.or(&other.bits),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_strict_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }
}

impl fmt::Display for SupportMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.bits.ones().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SupportMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn parse_encodes_letters() {
        let op = p("+XZ");
        assert_eq!(op.num_qubits(), 2);
        assert_eq!(op.phase_exp(), 0);
        assert_eq!(op.letter(0), Letter::X);
        assert_eq!(op.letter(1), Letter::Z);
        // X -> z=0,x=1 and Z -> z=1,x=0
        assert!(!op.z_bits().get(0) && op.x_bits().get(0));
        assert!(op.z_bits().get(1) && !op.x_bits().get(1));
    }

    #[test]
    fn parse_signs() {
        assert_eq!(p("-YY").phase_exp(), 2);
        assert_eq!(p("+iX").phase_exp(), 1);
        assert_eq!(p("-iX").phase_exp(), 3);
        assert_eq!(p("X").phase_exp(), 0);
    }

    #[test]
    fn parse_rejects_bad_letter() {
        let err = "XQ".parse::<PauliOperator>().unwrap_err();
        assert_eq!(
            err,
            Error::PauliParse {
                position: 2,
                message: "invalid character 'Q'".to_string()
            }
        );
    }

    #[test]
    fn parse_rejects_empty_body() {
        assert!(matches!(
            "".parse::<PauliOperator>(),
            Err(Error::PauliParse { .. })
        ));
        assert!(matches!(
            "-i".parse::<PauliOperator>(),
            Err(Error::PauliParse { position: 3, .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for s in ["XZ", "-YY", "+iIXYZ", "-iZ", "I"] {
            let op = p(s);
            assert_eq!(p(&op.to_string()), op);
        }
    }

    #[test]
    fn multiply_x_times_z_is_minus_i_y() {
        let prod = p("X").multiply(&p("Z")).unwrap();
        assert_eq!(prod, p("-iY"));
    }

    #[test]
    fn multiply_identity_is_neutral() {
        let op = p("-YXZ");
        let id = PauliOperator::identity(3);
        assert_eq!(op.multiply(&id).unwrap(), op);
        assert_eq!(id.multiply(&op).unwrap(), op);
    }

    #[test]
    fn multiply_xx_zz_gives_minus_yy() {
        let prod = p("XX").multiply(&p("ZZ")).unwrap();
        assert_eq!(prod, p("-YY"));
    }

    #[test]
    fn multiply_rejects_dimension_mismatch() {
        assert!(matches!(
            p("X").multiply(&p("XX")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn commutation_basics() {
        assert!(!p("X").commutes(&p("Z")).unwrap());
        assert!(p("XX").commutes(&p("ZZ")).unwrap());
        assert!(p("XYZ").commutes(&PauliOperator::identity(3)).unwrap());
    }

    #[test]
    fn support_examples() {
        assert_eq!(p("IXYI").support().indices_1based(), vec![2, 3]);
        assert!(PauliOperator::identity(4).support().is_empty_set());
        assert_eq!(p("ZZII").support().indices_1based(), vec![1, 2]);
    }

    #[test]
    fn dense_single_qubit() {
        let z = p("Z").to_dense().unwrap();
        assert_eq!(z[(0, 0)], Complex64::new(1.0, 0.0));
        assert_eq!(z[(1, 1)], Complex64::new(-1.0, 0.0));
        assert_eq!(z[(0, 1)], Complex64::new(0.0, 0.0));

        let my = p("-Y").to_dense().unwrap();
        assert_eq!(my[(0, 1)], Complex64::new(0.0, 1.0));
        assert_eq!(my[(1, 0)], Complex64::new(0.0, -1.0));
    }

    #[test]
    fn dense_kron_order() {
        // XZ = sigma_x (x) sigma_z: qubit 1 is the most significant factor.
        let m = p("XZ").to_dense().unwrap();
        let expected = p("X").to_dense().unwrap().kron(&p("Z").to_dense().unwrap());
        assert!(m.approx_eq(&expected, 0.0));
    }

    #[test]
    fn dense_cap_enforced() {
        let op = PauliOperator::identity(13);
        assert!(matches!(op.to_dense(), Err(Error::Resource { .. })));
        assert!(op.to_dense_with_cap(13).is_ok());
    }

    #[test]
    fn dense_multiplication_matches_bit_algebra() {
        let cases = ["XYZI", "-ZZXY", "+iYIXZ", "IIII", "-iXXXX"];
        for a in cases {
            for b in cases {
                let pa = p(a);
                let pb = p(b);
                let dense_prod = pa.to_dense().unwrap().mul(&pb.to_dense().unwrap());
                let bit_prod = pa.multiply(&pb).unwrap().to_dense().unwrap();
                assert!(dense_prod.approx_eq(&bit_prod, 1e-12), "{a} * {b}");
            }
        }
    }

    #[test]
    fn support_mask_ops() {
        let a = SupportMask::from_indices(4, &[0, 1]);
        let b = SupportMask::from_indices(4, &[0, 1, 3]);
        assert!(a.is_subset(&b));
        assert!(a.is_strict_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.complement().indices_1based(), vec![3, 4]);
        assert_eq!(a.to_string(), "{1,2}");
    }

    #[test]
    fn pauli_ordering_is_letterwise() {
        let mut ops = [p("ZI"), p("XX"), p("IY"), p("-XX")];
        ops.sort();
        assert_eq!(
            ops.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
            vec!["IY", "XX", "-XX", "ZI"]
        );
    }
}
