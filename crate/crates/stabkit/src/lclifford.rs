//! The binary local Clifford group and its action on stabilizer groups.
//!
//! A local Clifford operation is one invertible 2x2 binary matrix per qubit
//! (the blocks of the 2n x 2n symplectic block-diagonal form) plus a Pauli
//! conjugation layer carrying sign information. Each of the six GL(2, F_2)
//! factors is tied to a fixed single-qubit Clifford unitary, so the
//! bit-level action and the dense conjugation action agree sign for sign.

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::config;
use crate::dense::CMatrix;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::pauli::{Letter, PauliOperator, SupportMask};
use crate::stabilizer::StabilizerGroup;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Qubit cap for dense expansion of a local Clifford unitary.
pub const DENSE_UNITARY_CAP: usize = 6;

/// One of the six invertible 2x2 matrices over GF(2), acting on (z, x)
/// column pairs. The fixed unitary representatives are I, H, S and their
/// products; conjugation signs follow from that choice.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gl2(u8);

/// (matrix rows [a, b; c, d], name, sign flip under conjugation for X, Y, Z)
type FactorRow = ([[bool; 2]; 2], &'static str, [bool; 3]);

const FACTOR_TABLE: [FactorRow; 6] = [
    // identity: X -> X, Y -> Y, Z -> Z
    ([[true, false], [false, true]], "I", [false, false, false]),
    // Hadamard: X -> Z, Y -> -Y, Z -> X
    ([[false, true], [true, false]], "H", [false, true, false]),
    // phase gate: X -> Y, Y -> -X, Z -> Z
    ([[true, true], [false, true]], "S", [false, true, false]),
    // H S H: X -> X, Y -> Z, Z -> -Y
    ([[true, false], [true, true]], "HSH", [false, false, true]),
    // H S: X -> -Y, Y -> -Z, Z -> X (cycles Z -> X -> Y -> Z on bits)
    ([[false, true], [true, true]], "HS", [true, true, false]),
    // S H: X -> Z, Y -> X, Z -> Y
    ([[true, true], [true, false]], "SH", [false, false, false]),
];

impl Gl2 {
    pub const COUNT: usize = 6;

    /// All six factors in canonical search order (identity first).
    pub fn all() -> [Gl2; 6] {
        [Gl2(0), Gl2(1), Gl2(2), Gl2(3), Gl2(4), Gl2(5)]
    }

    pub fn identity() -> Gl2 {
        Gl2(0)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(idx: usize) -> Gl2 {
        assert!(idx < 6, "factor index out of range");
        Gl2(idx as u8)
    }

    pub fn name(self) -> &'static str {
        FACTOR_TABLE[self.index()].1
    }

    /// Matrix entries [[a, b], [c, d]].
    pub fn entries(self) -> [[bool; 2]; 2] {
        FACTOR_TABLE[self.index()].0
    }

    /// Looks a factor up by matrix entries; `None` when singular.
    pub fn from_entries(m: [[bool; 2]; 2]) -> Option<Gl2> {
        (0..6).map(Gl2).find(|f| f.entries() == m)
    }

    /// Action on a (z, x) bit pair.
    pub fn apply_bits(self, z: bool, x: bool) -> (bool, bool) {
        let [[a, b], [c, d]] = self.entries();
        ((a & z) ^ (b & x), (c & z) ^ (d & x))
    }

    /// Sign flip picked up when the representative unitary conjugates the
    /// given letter. Identity letters never flip.
    pub fn conj_flips_sign(self, letter: Letter) -> bool {
        let flips = FACTOR_TABLE[self.index()].2;
        match letter {
            Letter::I => false,
            Letter::X => flips[0],
            Letter::Y => flips[1],
            Letter::Z => flips[2],
        }
    }

    /// `self.compose(other)` applies `other` first: the matrix product
    /// self * other.
    pub fn compose(self, other: Gl2) -> Gl2 {
        let [[a1, b1], [c1, d1]] = self.entries();
        let [[a2, b2], [c2, d2]] = other.entries();
        let m = [
            [(a1 & a2) ^ (b1 & c2), (a1 & b2) ^ (b1 & d2)],
            [(c1 & a2) ^ (d1 & c2), (c1 & b2) ^ (d1 & d2)],
        ];
        Gl2::from_entries(m).expect("product of invertible matrices is invertible")
    }

    /// Matrix inverse: [[d, b], [c, a]] (every GL(2, F_2) element has
    /// determinant 1).
    pub fn inverse(self) -> Gl2 {
        let [[a, b], [c, d]] = self.entries();
        Gl2::from_entries([[d, b], [c, a]]).expect("inverse of an invertible matrix")
    }

    /// The fixed 2x2 unitary representative.
    pub fn dense(self) -> CMatrix {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let h = CMatrix::from_rows(&[&[s, s], &[s, -s]]);
        let sg = CMatrix::from_rows(&[&[l, o], &[o, i]]);
        match self.index() {
            0 => CMatrix::identity(2),
            1 => h,
            2 => sg,
            3 => h.mul(&sg).mul(&h),
            4 => h.mul(&sg),
            5 => sg.mul(&h),
            _ => unreachable!(),
        }
    }
}

impl std::fmt::Debug for Gl2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A local Clifford operation: one GL(2, F_2) factor per qubit plus a Pauli
/// sign-fixing layer. The operation acts by conjugation; the layer is
/// applied after the factors.
#[derive(Clone, PartialEq, Eq)]
pub struct LocalCliffordOp {
    n: usize,
    factors: Vec<Gl2>,
    pauli_layer: PauliOperator,
}

impl LocalCliffordOp {
    pub fn identity(n: usize) -> Self {
        Self::from_factors(vec![Gl2::identity(); n])
    }

    pub fn from_factors(factors: Vec<Gl2>) -> Self {
        let n = factors.len();
        LocalCliffordOp {
            n,
            factors,
            pauli_layer: PauliOperator::identity(n),
        }
    }

    pub fn with_layer(mut self, layer: PauliOperator) -> Self {
        assert_eq!(layer.num_qubits(), self.n, "layer size mismatch");
        self.pauli_layer = layer;
        self
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[Gl2] {
        &self.factors
    }

    pub fn pauli_layer(&self) -> &PauliOperator {
        &self.pauli_layer
    }

    pub fn is_identity(&self) -> bool {
        self.factors.iter().all(|f| *f == Gl2::identity()) && self.pauli_layer.is_identity_bits()
    }

    /// The assembled 2n x 2n binary matrix with diagonal blocks A, B, C, D.
    pub fn assembled_matrix(&self) -> BitMatrix {
        let n = self.n;
        let mut q = BitMatrix::zeros(2 * n, 2 * n);
        for (i, f) in self.factors.iter().enumerate() {
            let [[a, b], [c, d]] = f.entries();
            q.set(i, i, a);
            q.set(i, n + i, b);
            q.set(n + i, i, c);
            q.set(n + i, n + i, d);
        }
        q
    }

    fn check_n(&self, other_n: usize) -> Result<()> {
        if self.n != other_n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other_n,
            });
        }
        Ok(())
    }

    /// Conjugates a Pauli operator: bits move under the per-qubit factors,
    /// the sign tracks the representative unitaries and the Pauli layer.
    pub fn apply_to_pauli(&self, p: &PauliOperator) -> Result<PauliOperator> {
        self.check_n(p.num_qubits())?;
        let image = self.factor_image(p);
        // The layer conjugation flips the sign by the symplectic product
        // with the image bits.
        let flip = self.pauli_layer.z_bits().dot(image.x_bits())
            ^ self.pauli_layer.x_bits().dot(image.z_bits());
        Ok(if flip { image.negated() } else { image })
    }

    /// Factor part of the conjugation, ignoring the Pauli layer.
    fn factor_image(&self, p: &PauliOperator) -> PauliOperator {
        let mut z = BitVec::zeros(self.n);
        let mut x = BitVec::zeros(self.n);
        let mut flip = false;
        for i in 0..self.n {
            let letter = p.letter(i);
            flip ^= self.factors[i].conj_flips_sign(letter);
            let (zb, xb) = letter.bits();
            let (nz, nx) = self.factors[i].apply_bits(zb, xb);
            z.set(i, nz);
            x.set(i, nx);
        }
        let phase = (p.phase_exp() + if flip { 2 } else { 0 }) & 3;
        PauliOperator::from_parts(z, x, phase).expect("lengths match")
    }

    /// Image of a packed 2n-bit vector under the factors alone.
    fn factor_image_bits(&self, v: &BitVec, assigned: usize) -> BitVec {
        let mut w = BitVec::zeros(2 * self.n);
        for i in 0..assigned {
            let (nz, nx) = self.factors[i].apply_bits(v.get(i), v.get(self.n + i));
            if nz {
                w.set(i, true);
            }
            if nx {
                w.set(self.n + i, true);
            }
        }
        w
    }

    /// Conjugates a whole stabilizer group; the result passes validation.
    pub fn apply(&self, g: &StabilizerGroup) -> Result<StabilizerGroup> {
        self.check_n(g.num_qubits())?;
        let images: Result<Vec<PauliOperator>> = g
            .generators()
            .iter()
            .map(|gen| self.apply_to_pauli(gen))
            .collect();
        StabilizerGroup::build(images?)
    }

    /// `a.compose(b)` acts as `b` first, then `a`.
    ///
    /// The factor matrices multiply, but the product of two representative
    /// unitaries is only Pauli-equivalent to the representative of the
    /// product factor, so the combined layer is solved from sign probes on
    /// the single-qubit Z and X operators.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_n(other.n)?;
        let factors: Vec<Gl2> = self
            .factors
            .iter()
            .zip(&other.factors)
            .map(|(a, b)| a.compose(*b))
            .collect();
        let candidate = Self::from_factors(factors);
        let mut rows = Vec::with_capacity(2 * self.n);
        let mut rhs = BitVec::zeros(2 * self.n);
        for (k, probe) in basis_paulis(self.n).enumerate() {
            let expected = self.apply_to_pauli(&other.apply_to_pauli(&probe)?)?;
            let image = candidate.factor_image(&probe);
            debug_assert_eq!(image.packed_bits(), expected.packed_bits());
            let w = image.packed_bits();
            rows.push(w.slice(self.n..2 * self.n).concat(&w.slice(0..self.n)));
            rhs.set(k, image.phase_exp() != expected.phase_exp());
        }
        let solution = BitMatrix::from_rows(rows)
            .solve(&rhs)
            .expect("composite sign pattern is Pauli-realizable");
        let layer = PauliOperator::from_parts(
            solution.slice(0..self.n),
            solution.slice(self.n..2 * self.n),
            0,
        )?;
        Ok(candidate.with_layer(layer))
    }

    /// The inverse operation: factor inverses plus a sign-correcting layer
    /// solved from the round trips of the single-qubit Z and X operators.
    pub fn inverse(&self) -> Self {
        let inv_factors: Vec<Gl2> = self.factors.iter().map(|f| f.inverse()).collect();
        let candidate = Self::from_factors(inv_factors);
        let mut z = BitVec::zeros(self.n);
        let mut x = BitVec::zeros(self.n);
        for i in 0..self.n {
            // A residual sign on the Z_i round trip is cancelled by an X in
            // the layer at qubit i, and vice versa.
            for letter in [Letter::Z, Letter::X] {
                let (zb, xb) = letter.bits();
                let mut zv = BitVec::zeros(self.n);
                let mut xv = BitVec::zeros(self.n);
                zv.set(i, zb);
                xv.set(i, xb);
                let single = PauliOperator::from_parts(zv, xv, 0).expect("lengths match");
                let roundtrip = candidate
                    .apply_to_pauli(&self.apply_to_pauli(&single).expect("dims match"))
                    .expect("dims match");
                debug_assert!(roundtrip.z_bits() == single.z_bits());
                debug_assert!(roundtrip.x_bits() == single.x_bits());
                let flipped = roundtrip.phase_exp() != 0;
                match letter {
                    Letter::Z => x.set(i, flipped),
                    _ => z.set(i, flipped),
                }
            }
        }
        let layer = PauliOperator::from_parts(z, x, 0).expect("lengths match");
        candidate.with_layer(layer)
    }

    /// Dense unitary: the Pauli layer times the tensor product of the
    /// factor representatives. Conjugating a dense Pauli by it reproduces
    /// [`Self::apply_to_pauli`] exactly.
    pub fn to_dense_unitary(&self) -> Result<CMatrix> {
        if self.n > DENSE_UNITARY_CAP {
            return Err(Error::resource(
                "dense local Clifford unitary",
                self.n,
                DENSE_UNITARY_CAP,
                "",
            ));
        }
        let mut u = CMatrix::identity(1);
        for f in &self.factors {
            u = u.kron(&f.dense());
        }
        Ok(self.pauli_layer.to_dense()?.mul(&u))
    }
}

impl std::fmt::Debug for LocalCliffordOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LocalCliffordOp[")?;
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", factor.name())?;
        }
        write!(f, "; layer {}]", self.pauli_layer)
    }
}

impl std::fmt::Display for LocalCliffordOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            let [[a, b], [c, d]] = factor.entries();
            writeln!(
                f,
                "qubit {}: [{} {}; {} {}]  ({})",
                i + 1,
                u8::from(a),
                u8::from(b),
                u8::from(c),
                u8::from(d),
                factor.name()
            )?;
        }
        write!(f, "pauli layer: {}", self.pauli_layer)
    }
}

/// Single-qubit Z and X operators on n qubits: Z_1, X_1, Z_2, X_2, ...
fn basis_paulis(n: usize) -> impl Iterator<Item = PauliOperator> {
    (0..n).flat_map(move |i| {
        [Letter::Z, Letter::X].into_iter().map(move |letter| {
            let (zb, xb) = letter.bits();
            let mut z = BitVec::zeros(n);
            let mut x = BitVec::zeros(n);
            z.set(i, zb);
            x.set(i, xb);
            PauliOperator::from_parts(z, x, 0).expect("lengths match")
        })
    })
}

/// A uniformly random local Clifford operation, deterministic per seed:
/// independent uniform factors plus a uniform Pauli layer.
pub fn random_lc(n: usize, seed: u64) -> LocalCliffordOp {
    let mut rng = StdRng::seed_from_u64(seed);
    random_lc_with_rng(n, &mut rng)
}

pub fn random_lc_with_rng(n: usize, rng: &mut impl Rng) -> LocalCliffordOp {
    let factors: Vec<Gl2> = (0..n)
        .map(|_| Gl2::from_index(rng.gen_range(0..6)))
        .collect();
    let mut z = BitVec::zeros(n);
    let mut x = BitVec::zeros(n);
    for i in 0..n {
        z.set(i, rng.gen());
        x.set(i, rng.gen());
    }
    let layer = PauliOperator::from_parts(z, x, 0).expect("lengths match");
    LocalCliffordOp::from_factors(factors).with_layer(layer)
}

/// Solves for the Pauli layer that makes the factor-level map send the
/// signed generators of `g1` onto signed members of `g2`. The factor map
/// must already send the binary space of `g1` into that of `g2`; any layer
/// present on `q` is ignored.
pub fn fix_signs(
    q: &LocalCliffordOp,
    g1: &StabilizerGroup,
    g2: &StabilizerGroup,
) -> Result<PauliOperator> {
    let n = g1.num_qubits();
    if q.num_qubits() != n || g2.num_qubits() != n {
        return Err(Error::DimensionMismatch {
            left: q.num_qubits(),
            right: n,
        });
    }
    let factors_only = LocalCliffordOp::from_factors(q.factors.clone());
    let mut rows = Vec::with_capacity(n);
    let mut rhs = BitVec::zeros(n);
    for (j, gen) in g1.generators().iter().enumerate() {
        let image = factors_only.factor_image(gen);
        let bits = image.packed_bits();
        let member = g2.element_from_bits(&bits).ok_or_else(|| {
            Error::Internal("fix_signs: bit-level map does not match code spaces".to_string())
        })?;
        // Row encodes the symplectic product <layer, image bits>.
        rows.push(bits.slice(n..2 * n).concat(&bits.slice(0..n)));
        rhs.set(j, image.phase_exp() != member.phase_exp());
    }
    let solution = BitMatrix::from_rows(rows)
        .solve(&rhs)
        .ok_or_else(|| Error::Internal("fix_signs: sign system infeasible".to_string()))?;
    PauliOperator::from_parts(solution.slice(0..n), solution.slice(n..2 * n), 0)
}

/// Searches the 6^n per-qubit factor assignments for a local Clifford
/// operation mapping `g1` onto `g2`, backtracking qubit by qubit: a partial
/// assignment dies as soon as some element of `g1` supported on the
/// assigned prefix maps outside the space of `g2`. Returns the
/// lexicographically first certificate (signs fixed), or `None` after an
/// exhaustive search.
pub fn lc_equivalent(
    g1: &StabilizerGroup,
    g2: &StabilizerGroup,
) -> Result<Option<LocalCliffordOp>> {
    lc_equivalent_with_cap(g1, g2, config::max_lc_qubits())
}

pub fn lc_equivalent_with_cap(
    g1: &StabilizerGroup,
    g2: &StabilizerGroup,
    cap: usize,
) -> Result<Option<LocalCliffordOp>> {
    let search = LcSearch::prepare(g1, g2, cap)?;
    #[cfg(feature = "parallel")]
    let found = search.run_parallel();
    #[cfg(not(feature = "parallel"))]
    let found = search.run_sequential();
    search.certify(found)
}

/// Single-threaded search; reference path for the parallel version.
pub fn lc_equivalent_sequential(
    g1: &StabilizerGroup,
    g2: &StabilizerGroup,
    cap: usize,
) -> Result<Option<LocalCliffordOp>> {
    let search = LcSearch::prepare(g1, g2, cap)?;
    let found = search.run_sequential();
    search.certify(found)
}

struct LcSearch<'a> {
    n: usize,
    g1: &'a StabilizerGroup,
    g2: &'a StabilizerGroup,
    /// For each prefix length k: packed bit vectors of a basis of the
    /// elements of g1 supported on qubits 0..k.
    prefix_bases: Vec<Vec<BitVec>>,
    /// Membership rows of g2: w is in the space iff every row dot w is 0.
    member_rows: Vec<BitVec>,
}

impl<'a> LcSearch<'a> {
    fn prepare(g1: &'a StabilizerGroup, g2: &'a StabilizerGroup, cap: usize) -> Result<Self> {
        let n = g1.num_qubits();
        if g2.num_qubits() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: g2.num_qubits(),
            });
        }
        if n > cap {
            return Err(Error::resource(
                "local Clifford search",
                n,
                cap,
                &format!("set {} to raise the cap", config::LC_CAP_ENV),
            ));
        }
        let prefix_bases = (0..=n)
            .map(|k| {
                let omega = SupportMask::from_indices(n, &(0..k).collect::<Vec<_>>());
                g1.support_subgroup(&omega)
                    .iter()
                    .map(PauliOperator::packed_bits)
                    .collect()
            })
            .collect();
        let member_rows = (0..n)
            .map(|j| {
                let col = g2.gen_matrix().column(j);
                col.slice(n..2 * n).concat(&col.slice(0..n))
            })
            .collect();
        Ok(LcSearch {
            n,
            g1,
            g2,
            prefix_bases,
            member_rows,
        })
    }

    fn image_in_g2(&self, op: &LocalCliffordOp, v: &BitVec, assigned: usize) -> bool {
        let w = op.factor_image_bits(v, assigned);
        self.member_rows.iter().all(|row| !row.dot(&w))
    }

    fn prefix_ok(&self, op: &LocalCliffordOp, assigned: usize) -> bool {
        self.prefix_bases[assigned]
            .iter()
            .all(|v| self.image_in_g2(op, v, assigned))
    }

    fn dfs(&self, op: &mut LocalCliffordOp, level: usize) -> Option<Vec<Gl2>> {
        if level == self.n {
            return Some(op.factors.clone());
        }
        for f in Gl2::all() {
            op.factors[level] = f;
            if self.prefix_ok(op, level + 1) {
                if let Some(found) = self.dfs(op, level + 1) {
                    return Some(found);
                }
            }
        }
        op.factors[level] = Gl2::identity();
        None
    }

    fn run_sequential(&self) -> Option<Vec<Gl2>> {
        let mut op = LocalCliffordOp::identity(self.n);
        self.dfs(&mut op, 0)
    }

    /// Splits the search by first-qubit factor; the reducer keeps the
    /// lowest-index hit, so the result matches the sequential order.
    #[cfg(feature = "parallel")]
    fn run_parallel(&self) -> Option<Vec<Gl2>> {
        if self.n == 0 {
            return self.run_sequential();
        }
        (0..Gl2::COUNT)
            .into_par_iter()
            .map(|f0| {
                let mut op = LocalCliffordOp::identity(self.n);
                op.factors[0] = Gl2::from_index(f0);
                if !self.prefix_ok(&op, 1) {
                    return None;
                }
                self.dfs(&mut op, 1)
            })
            .find_first(Option::is_some)
            .flatten()
    }

    fn certify(&self, found: Option<Vec<Gl2>>) -> Result<Option<LocalCliffordOp>> {
        let Some(factors) = found else {
            return Ok(None);
        };
        let op = LocalCliffordOp::from_factors(factors);
        let layer = fix_signs(&op, self.g1, self.g2)?;
        let full = op.with_layer(layer);
        if !full.apply(self.g1)?.same_signed_group(self.g2) {
            return Err(Error::Internal(
                "lc_equivalent: certified map fails signed-group check".to_string(),
            ));
        }
        Ok(Some(full))
    }
}
