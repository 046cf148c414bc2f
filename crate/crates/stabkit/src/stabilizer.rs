//! Stabilizer groups of pure n-qubit states.
//!
//! A group is stored as n signed commuting generators together with the
//! 2n x n binary generator matrix whose column j stacks (z_j, x_j). The
//! generator matrix satisfies S^T P S = 0 for the symplectic form P that
//! swaps the z and x blocks, and has full rank n.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::config;
use crate::dense::CMatrix;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::pauli::{PauliOperator, SupportMask};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Qubit cap for the dense rank-1 projector oracle.
pub const DENSE_PROJECTOR_CAP: usize = 6;

/// Support-size cap for dense reduced states.
pub const REDUCED_DENSITY_CAP: usize = 10;

/// Dimension cap for enumerating a support-restricted subgroup.
pub const SUBGROUP_ENUM_CAP: usize = 24;

/// A validated stabilizer group on n qubits.
#[derive(Clone, PartialEq, Eq)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliOperator>,
    gen_matrix: BitMatrix,
}

/// The elements of a group with support exactly `omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCount {
    pub omega: SupportMask,
    pub a_omega: u64,
    /// Up to three elements with support exactly `omega`, in ascending
    /// letterwise order.
    pub witnesses: Vec<PauliOperator>,
}

/// Outcome of a full-entanglement check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entanglement {
    pub fully_entangled: bool,
    /// When the state splits, a nonempty proper qubit subset across which
    /// it factorizes.
    pub witness: Option<SupportMask>,
}

impl StabilizerGroup {
    /// Validates a full generating set: n commuting, Hermitian, independent
    /// generators on n qubits.
    pub fn build(gens: Vec<PauliOperator>) -> Result<Self> {
        let Some(first) = gens.first() else {
            return Err(Error::Domain("empty generator list".to_string()));
        };
        let n = first.num_qubits();
        if gens.len() != n {
            return Err(Error::WrongGeneratorCount {
                expected: n,
                found: gens.len(),
            });
        }
        for g in &gens {
            if g.num_qubits() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: g.num_qubits(),
                });
            }
        }
        for (i, g) in gens.iter().enumerate() {
            if !g.is_hermitian() {
                return Err(Error::NonHermitianGenerator { index: i + 1 });
            }
            for (j, h) in gens.iter().enumerate().skip(i + 1) {
                if !g.commutes(h)? {
                    return Err(Error::NonCommutingGenerators {
                        first: i + 1,
                        second: j + 1,
                    });
                }
            }
        }
        let gen_matrix = Self::assemble_matrix(n, &gens);
        if gen_matrix.rank() < n {
            // Name a dependency: a nonzero kernel combination multiplies to
            // the identity bits, with sign +1 (redundant generators) or -1
            // (the group would contain -I).
            let combo_vec = gen_matrix
                .kernel_basis()
                .into_iter()
                .next()
                .expect("rank-deficient matrix has a kernel vector");
            let combination: Vec<usize> = combo_vec.ones().map(|i| i + 1).collect();
            let mut product = PauliOperator::identity(n);
            for i in combo_vec.ones() {
                product = product.multiply(&gens[i])?;
            }
            return Err(if product.phase_exp() == 2 {
                Error::MinusIdentity { combination }
            } else {
                Error::DependentGenerators { combination }
            });
        }
        Ok(StabilizerGroup {
            n,
            generators: gens,
            gen_matrix,
        })
    }

    /// Parses whitespace-separated Pauli strings and builds the group.
    pub fn from_strings(strings: &[&str]) -> Result<Self> {
        let gens: Result<Vec<PauliOperator>> = strings.iter().map(|s| s.parse()).collect();
        Self::build(gens?)
    }

    fn assemble_matrix(n: usize, gens: &[PauliOperator]) -> BitMatrix {
        let mut m = BitMatrix::zeros(2 * n, n);
        for (j, g) in gens.iter().enumerate() {
            for i in 0..n {
                m.set(i, j, g.z_bits().get(i));
                m.set(n + i, j, g.x_bits().get(i));
            }
        }
        m
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// The 2n x n binary generator matrix (z block on top).
    pub fn gen_matrix(&self) -> &BitMatrix {
        &self.gen_matrix
    }

    /// The symplectic partner of `v`: blocks swapped, so that
    /// `a^T P b == swap(a) . b`.
    fn symplectic_partner(v: &BitVec) -> BitVec {
        let n = v.len() / 2;
        v.slice(n..2 * n).concat(&v.slice(0..n))
    }

    /// True when the packed 2n-bit vector lies in the binary stabilizer
    /// space, i.e. S^T P v = 0.
    pub fn contains_bits(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), 2 * self.n, "membership: wrong vector length");
        let pv = Self::symplectic_partner(v);
        (0..self.n).all(|j| !self.gen_matrix.column(j).dot(&pv))
    }

    /// The signed group element with the given member bits: decomposes the
    /// bits over the generators and multiplies them out. `None` when the
    /// bits are not in the stabilizer space.
    pub fn element_from_bits(&self, v: &BitVec) -> Option<PauliOperator> {
        let coeffs = self.gen_matrix.solve(v)?;
        let mut product = PauliOperator::identity(self.n);
        for j in coeffs.ones() {
            product = product
                .multiply(&self.generators[j])
                .expect("generators share n");
        }
        Some(product)
    }

    /// True when the two groups are equal as *signed* groups: same binary
    /// space, and each generator of `other` decomposes in `self` with the
    /// same sign.
    pub fn same_signed_group(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        other.generators.iter().all(|g| {
            self.element_from_bits(&g.packed_bits())
                .is_some_and(|member| member == *g)
        })
    }

    /// Streams all 2^n signed elements in Gray-code order over generator
    /// subsets; the first element is the identity.
    pub fn enumerate_elements(&self) -> Result<ElementIter<'_>> {
        self.enumerate_elements_with_cap(config::max_enum_qubits())
    }

    pub fn enumerate_elements_with_cap(&self, cap: usize) -> Result<ElementIter<'_>> {
        if self.n > cap {
            return Err(Error::resource(
                "group enumeration",
                self.n,
                cap,
                &format!("set {} to raise the cap", config::ENUM_CAP_ENV),
            ));
        }
        Ok(ElementIter::over(&self.generators, self.n))
    }

    /// A basis of the subgroup of elements supported inside `omega`,
    /// computed by restricting the generator matrix rows outside `omega`
    /// and taking the kernel. No 2^n enumeration is involved. An empty
    /// basis means only the identity qualifies.
    pub fn support_subgroup(&self, omega: &SupportMask) -> Vec<PauliOperator> {
        self.support_subgroup_coeffs(omega)
            .into_iter()
            .map(|c| {
                let mut product = PauliOperator::identity(self.n);
                for j in c.ones() {
                    product = product
                        .multiply(&self.generators[j])
                        .expect("generators share n");
                }
                product
            })
            .collect()
    }

    /// Coefficient vectors (over the generators) of a basis of the
    /// support-restricted subgroup.
    fn support_subgroup_coeffs(&self, omega: &SupportMask) -> Vec<BitVec> {
        assert_eq!(omega.num_qubits(), self.n, "support mask size mismatch");
        let mut rows = Vec::new();
        for i in 0..self.n {
            if !omega.contains(i) {
                rows.push(self.gen_matrix.row(i).clone());
                rows.push(self.gen_matrix.row(self.n + i).clone());
            }
        }
        if rows.is_empty() {
            // Whole group: the standard basis of coefficient space.
            return (0..self.n)
                .map(|j| BitVec::from_indices(self.n, &[j]))
                .collect();
        }
        BitMatrix::from_rows(rows).kernel_basis()
    }

    /// Dimension of the support-restricted subgroup.
    pub fn support_subgroup_dim(&self, omega: &SupportMask) -> usize {
        assert_eq!(omega.num_qubits(), self.n, "support mask size mismatch");
        let mut rows = Vec::new();
        for i in 0..self.n {
            if !omega.contains(i) {
                rows.push(self.gen_matrix.row(i).clone());
                rows.push(self.gen_matrix.row(self.n + i).clone());
            }
        }
        if rows.is_empty() {
            return self.n;
        }
        let m = BitMatrix::from_rows(rows);
        m.cols() - m.rank()
    }

    /// Counts the elements with support exactly `omega`, with up to three
    /// witnesses. Enumerates the support-restricted subgroup, whose
    /// dimension is typically far below n.
    pub fn a_omega(&self, omega: &SupportMask) -> SupportCount {
        let basis = self.support_subgroup(omega);
        assert!(
            basis.len() <= SUBGROUP_ENUM_CAP,
            "support subgroup dimension {} exceeds enumeration cap {}",
            basis.len(),
            SUBGROUP_ENUM_CAP
        );
        let mut count = 0u64;
        let mut witnesses: Vec<PauliOperator> = Vec::new();
        for element in ElementIter::over(&basis, self.n) {
            if element.support() == *omega {
                count += 1;
                insert_witness(&mut witnesses, &element);
            }
        }
        SupportCount {
            omega: omega.clone(),
            a_omega: count,
            witnesses,
        }
    }

    /// Tallies every element of the group by exact support. The map key is
    /// the support bitmask; counts sum to 2^n (the empty support counts the
    /// identity). Parallel when the `parallel` feature is enabled.
    pub fn support_tally(&self) -> Result<SupportTally> {
        self.support_tally_with_cap(config::max_enum_qubits())
    }

    pub fn support_tally_with_cap(&self, cap: usize) -> Result<SupportTally> {
        if self.n > cap {
            return Err(Error::resource(
                "support tally",
                self.n,
                cap,
                &format!("set {} to raise the cap", config::ENUM_CAP_ENV),
            ));
        }
        #[cfg(feature = "parallel")]
        {
            Ok(self.tally_parallel())
        }
        #[cfg(not(feature = "parallel"))]
        {
            Ok(self.tally_range(0, 1u64 << self.n))
        }
    }

    /// Single-threaded tally; reference path for the parallel version.
    pub fn support_tally_sequential(&self) -> Result<SupportTally> {
        if self.n > config::max_enum_qubits() {
            return Err(Error::resource(
                "support tally",
                self.n,
                config::max_enum_qubits(),
                &format!("set {} to raise the cap", config::ENUM_CAP_ENV),
            ));
        }
        Ok(self.tally_range(0, 1u64 << self.n))
    }

    #[cfg(feature = "parallel")]
    fn tally_parallel(&self) -> SupportTally {
        let total = 1u64 << self.n;
        let threads = rayon::current_num_threads() as u64;
        if threads <= 1 || total < 1024 {
            // Splitting only pays for itself with real workers: each block
            // re-hashes its share into a map that the reduction walks again.
            return self.tally_range(0, total);
        }
        let blocks = (threads * 4).next_power_of_two().min(total);
        let block_len = total / blocks;
        (0..blocks)
            .into_par_iter()
            .map(|b| self.tally_range(b * block_len, (b + 1) * block_len))
            .reduce(SupportTally::default, SupportTally::merge)
    }

    /// Tallies the Gray-code positions `start..end`. Within a block only
    /// low generator indices flip, so each block is an independent walk
    /// from its own seed element.
    fn tally_range(&self, start: u64, end: u64) -> SupportTally {
        let mut tally = SupportTally::default();
        let gray_start = start ^ (start >> 1);
        let mut current = PauliOperator::identity(self.n);
        for j in 0..self.generators.len() {
            if gray_start >> j & 1 == 1 {
                current
                    .mul_assign_right(&self.generators[j])
                    .expect("generators share n");
            }
        }
        for k in start..end {
            tally.record(&current);
            let next = k + 1;
            if next < end {
                let flip = next.trailing_zeros() as usize;
                current
                    .mul_assign_right(&self.generators[flip])
                    .expect("generators share n");
            }
        }
        tally
    }

    /// The reduced state on `omega` as a dense matrix: the normalized sum
    /// of the restrictions of all elements supported inside `omega`.
    pub fn reduced_density_dense(&self, omega: &SupportMask) -> Result<CMatrix> {
        let k = omega.weight();
        if k > REDUCED_DENSITY_CAP {
            return Err(Error::resource(
                "dense reduced state",
                k,
                REDUCED_DENSITY_CAP,
                "",
            ));
        }
        let basis = self.support_subgroup(omega);
        let keep = omega.indices();
        let dim = 1usize << k;
        let mut sum = CMatrix::zeros(dim, dim);
        for element in ElementIter::over(&basis, self.n) {
            sum.add_assign(&restrict_dense(&element, &keep));
        }
        Ok(sum.scale(Complex64::new(1.0 / dim as f64, 0.0)))
    }

    /// The rank-1 projector onto the stabilized state: the normalized sum
    /// of all 2^n dense group elements.
    pub fn dense_projector(&self) -> Result<CMatrix> {
        if self.n > DENSE_PROJECTOR_CAP {
            return Err(Error::resource(
                "dense projector",
                self.n,
                DENSE_PROJECTOR_CAP,
                "",
            ));
        }
        let dim = 1usize << self.n;
        let mut sum = CMatrix::zeros(dim, dim);
        for element in ElementIter::over(&self.generators, self.n) {
            sum.add_assign(&element.to_dense()?);
        }
        Ok(sum.scale(Complex64::new(1.0 / dim as f64, 0.0)))
    }

    /// Full-entanglement check. Routes through graph form and connectivity;
    /// [`Self::entanglement_by_scan`] is the independent oracle.
    pub fn entanglement(&self) -> Entanglement {
        let (graph, _) = crate::graphstate::graph_form_factors(self);
        if let Some(component) = graph.disconnected_component() {
            Entanglement {
                fully_entangled: false,
                witness: Some(SupportMask::from_bits(component)),
            }
        } else {
            Entanglement {
                fully_entangled: true,
                witness: None,
            }
        }
    }

    pub fn is_fully_entangled(&self) -> bool {
        self.entanglement().fully_entangled
    }

    /// Oracle full-entanglement check: scans every bipartition (omega,
    /// complement) and reports a split where the restricted subgroup
    /// dimensions add up to n. Exponential in n; intended for small n.
    pub fn entanglement_by_scan(&self) -> Entanglement {
        assert!(self.n <= 24, "bipartition scan is exponential in n");
        for mask in 1..(1u64 << self.n) - 1 {
            let indices: Vec<usize> = (0..self.n).filter(|&i| mask >> i & 1 == 1).collect();
            let omega = SupportMask::from_indices(self.n, &indices);
            let dim_in = self.support_subgroup_dim(&omega);
            let dim_out = self.support_subgroup_dim(&omega.complement());
            if dim_in + dim_out == self.n {
                return Entanglement {
                    fully_entangled: false,
                    witness: Some(omega),
                };
            }
        }
        Entanglement {
            fully_entangled: true,
            witness: None,
        }
    }
}

impl std::fmt::Debug for StabilizerGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StabilizerGroup[")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

/// The dense matrix of an element restricted to the qubits in `keep`
/// (ascending); all other positions must be the identity.
fn restrict_dense(element: &PauliOperator, keep: &[usize]) -> CMatrix {
    let mut m = CMatrix::identity(1);
    for &q in keep {
        m = m.kron(&element.letter(q).dense());
    }
    let phase = Complex64::new(0.0, 1.0).powu(u32::from(element.phase_exp()));
    m.scale(phase)
}

/// Keeps `witnesses` as the up-to-three smallest elements seen; clones
/// only on actual insertion.
fn insert_witness(witnesses: &mut Vec<PauliOperator>, element: &PauliOperator) {
    let pos = witnesses.partition_point(|w| w < element);
    if pos < 3 {
        witnesses.insert(pos, element.clone());
        witnesses.truncate(3);
    }
}

/// Gray-code iterator over the span of a list of commuting generators.
/// Yields 2^k signed elements, identity first; consecutive elements differ
/// by one generator multiplication.
pub struct ElementIter<'a> {
    generators: &'a [PauliOperator],
    current: PauliOperator,
    index: u64,
    total: u64,
}

impl<'a> ElementIter<'a> {
    fn over(generators: &'a [PauliOperator], n: usize) -> Self {
        assert!(generators.len() < 64, "span too large to enumerate");
        ElementIter {
            generators,
            current: PauliOperator::identity(n),
            index: 0,
            total: 1u64 << generators.len(),
        }
    }

    /// Enumerates the subgroup spanned by an explicit basis.
    pub fn span(basis: &'a [PauliOperator], n: usize) -> Self {
        Self::over(basis, n)
    }
}

impl Iterator for ElementIter<'_> {
    type Item = PauliOperator;

    fn next(&mut self) -> Option<PauliOperator> {
        if self.index == self.total {
            return None;
        }
        let out = self.current.clone();
        debug_assert!(
            !(out.is_identity_bits() && out.phase_exp() != 0),
            "-I or imaginary identity reached during enumeration"
        );
        self.index += 1;
        if self.index < self.total {
            let flip = self.index.trailing_zeros() as usize;
            self.current = self
                .current
                .multiply(&self.generators[flip])
                .expect("generators share n");
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

/// Counts and witnesses per exact support, keyed by support bitmask.
#[derive(Clone, Debug, Default)]
pub struct SupportTally {
    map: HashMap<BitVec, TallyEntry>,
}

#[derive(Clone, Debug, Default)]
pub struct TallyEntry {
    pub count: u64,
    pub witnesses: Vec<PauliOperator>,
}

impl SupportTally {
    fn record(&mut self, element: &PauliOperator) {
        let key = element.support().bits().clone();
        let entry = self.map.entry(key).or_default();
        entry.count += 1;
        insert_witness(&mut entry.witnesses, element);
    }

    fn merge(mut self, other: SupportTally) -> SupportTally {
        for (key, entry) in other.map {
            match self.map.entry(key) {
                std::collections::hash_map::Entry::Occupied(mut o) => {
                    let target = o.get_mut();
                    target.count += entry.count;
                    for w in entry.witnesses {
                        insert_witness(&mut target.witnesses, &w);
                    }
                }
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(entry);
                }
            }
        }
        self
    }

    pub fn get(&self, support_bits: &BitVec) -> Option<&TallyEntry> {
        self.map.get(support_bits)
    }

    pub fn count(&self, support_bits: &BitVec) -> u64 {
        self.map.get(support_bits).map_or(0, |e| e.count)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BitVec, &TallyEntry)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn total_count(&self) -> u64 {
        self.map.values().map(|e| e.count).sum()
    }

    /// True when the two tallies agree exactly (counts per support).
    pub fn same_counts(&self, other: &SupportTally) -> bool {
        self.map.len() == other.map.len()
            && self
                .map
                .iter()
                .all(|(k, e)| other.map.get(k).is_some_and(|o| o.count == e.count))
    }
}

/// Verifies that no product of generators yields -I, by full enumeration.
/// Independence of Hermitian commuting generators already rules this out;
/// this is the on-demand cross-check.
pub fn verify_no_minus_identity(group: &StabilizerGroup) -> Result<()> {
    for element in group.enumerate_elements()? {
        if element.is_identity_bits() && element.phase_exp() != 0 {
            return Err(Error::Internal(
                "enumeration reached the identity with a nonzero phase".to_string(),
            ));
        }
    }
    Ok(())
}
