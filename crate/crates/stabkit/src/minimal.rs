//! Minimal supports and the local-equivalence criteria built on them.
//!
//! A minimal support is the support of a group element with no element
//! supported strictly inside it. The subgroup generated by all minimal
//! elements drives the main criterion: when X, Y and Z all occur on every
//! qubit within that subgroup, local unitary and local Clifford equivalence
//! classes of the state coincide. The four sufficient conditions of
//! `corollary1_conditions` each imply the criterion on fully entangled
//! states of at least two qubits.
//!
//! For GHZ states the minimal supports are exactly the qubit pairs, each
//! carrying one Z-pair element, so the minimal subgroup is the rank-(n-1)
//! group of even-weight Z-type strings (odd-weight Z strings are not group
//! members) and the coverage criterion fails with {Z} on every qubit.

use std::fmt;

use crate::error::Result;
use crate::gf2::SpanBasis;
use crate::pauli::{Letter, PauliOperator, SupportMask};
use crate::stabilizer::{ElementIter, StabilizerGroup, SupportCount, SupportTally};

/// The subset of {X, Y, Z} seen at one qubit position.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct LetterSet(u8);

impl LetterSet {
    const X: u8 = 1;
    const Y: u8 = 2;
    const Z: u8 = 4;

    pub fn empty() -> Self {
        LetterSet(0)
    }

    pub fn insert(&mut self, letter: Letter) {
        match letter {
            Letter::I => {}
            Letter::X => self.0 |= Self::X,
            Letter::Y => self.0 |= Self::Y,
            Letter::Z => self.0 |= Self::Z,
        }
    }

    pub fn contains(&self, letter: Letter) -> bool {
        match letter {
            Letter::I => false,
            Letter::X => self.0 & Self::X != 0,
            Letter::Y => self.0 & Self::Y != 0,
            Letter::Z => self.0 & Self::Z != 0,
        }
    }

    /// True when all of X, Y, Z are present.
    pub fn is_complete(&self) -> bool {
        self.0 == Self::X | Self::Y | Self::Z
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (bit, c) in [(Self::X, 'X'), (Self::Y, 'Y'), (Self::Z, 'Z')] {
            if self.0 & bit != 0 {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Minimal supports of a group, a basis of the subgroup they generate, and
/// the per-qubit letter coverage within that subgroup.
#[derive(Clone, Debug)]
pub struct MinimalSupportTable {
    /// Minimal supports with their counts and witnesses, ordered by the
    /// sorted index lists.
    pub entries: Vec<SupportCount>,
    /// Independent minimal elements spanning the minimal subgroup.
    pub m_basis: Vec<PauliOperator>,
    /// Letters occurring at each qubit across the minimal subgroup.
    pub per_qubit_coverage: Vec<LetterSet>,
}

/// Outcome of the coverage criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Outcome {
    pub holds: bool,
    pub coverage: Vec<LetterSet>,
}

/// The four sufficient conditions, evaluated only on fully entangled
/// states of at least two qubits (they presuppose both).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Corollary1Flags {
    /// The group is generated by its minimal elements.
    pub i: bool,
    /// The group corresponds to a GF(4)-linear code.
    pub ii: bool,
    /// Every element with nonminimal support contains a minimal support
    /// with three elements.
    pub iii: bool,
    /// The minimal supports with three elements jointly cover all qubits.
    pub iv: bool,
}

impl Corollary1Flags {
    pub fn any(&self) -> bool {
        self.i || self.ii || self.iii || self.iv
    }
}

/// One failed clause in a [`lemma1_verify`] run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma1Violation {
    pub omega: SupportMask,
    pub a_omega: u64,
    pub reason: String,
}

/// Outcome of checking every minimal support against the count lemma:
/// each count is 1 or 3, counts of 3 need even support size, and the three
/// witnesses then show X, Y, Z at every covered position.
#[derive(Clone, Debug)]
pub struct Lemma1Report {
    pub entries_checked: usize,
    pub violations: Vec<Lemma1Violation>,
}

impl Lemma1Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Shared computation behind the public criteria: one tally, one table.
pub(crate) struct MinimalAnalysis {
    pub tally: SupportTally,
    pub table: MinimalSupportTable,
}

impl MinimalAnalysis {
    pub fn compute(g: &StabilizerGroup) -> Result<Self> {
        let tally = g.support_tally()?;
        let table = table_from_tally(g, &tally);
        Ok(MinimalAnalysis { tally, table })
    }
}

/// Sort key: supports compare as their sorted index lists.
fn support_key(mask: &SupportMask) -> Vec<usize> {
    mask.indices()
}

fn table_from_tally(g: &StabilizerGroup, tally: &SupportTally) -> MinimalSupportTable {
    let n = g.num_qubits();

    // Distinct nonempty supports, weight first so that subset filtering
    // only looks at already-accepted lighter masks.
    let mut masks: Vec<SupportMask> = tally
        .iter()
        .filter(|(bits, _)| !bits.is_zero())
        .map(|(bits, _)| SupportMask::from_bits(bits.clone()))
        .collect();
    masks.sort_by_key(|m| (m.weight(), support_key(m)));

    let mut minimal: Vec<SupportMask> = Vec::new();
    for mask in masks {
        if !minimal.iter().any(|held| held.is_strict_subset(&mask)) {
            minimal.push(mask);
        }
    }
    minimal.sort_by_key(support_key);

    // Counts and witnesses come from the restricted-subgroup route, which
    // is independent of the tally that discovered the supports.
    let entries: Vec<SupportCount> = minimal.iter().map(|omega| g.a_omega(omega)).collect();
    for entry in &entries {
        debug_assert_eq!(entry.a_omega, tally.count(entry.omega.bits()));
    }

    // Greedy independent subset of the minimal elements. Counts of a
    // minimal support never exceed three, so the witnesses are all of them.
    let mut span = SpanBasis::new();
    let mut m_basis = Vec::new();
    for entry in &entries {
        for witness in &entry.witnesses {
            if span.insert(&witness.packed_bits()) {
                m_basis.push(witness.clone());
            }
        }
    }

    // Coverage is taken over the whole subgroup generated by the minimal
    // elements, not just over the witnesses.
    let mut per_qubit_coverage = vec![LetterSet::empty(); n];
    for element in ElementIter::span(&m_basis, n) {
        for (i, coverage) in per_qubit_coverage.iter_mut().enumerate() {
            coverage.insert(element.letter(i));
        }
    }

    MinimalSupportTable {
        entries,
        m_basis,
        per_qubit_coverage,
    }
}

/// Enumerates the group, collects its inclusion-minimal supports, and
/// assembles the table described on [`MinimalSupportTable`].
pub fn minimal_supports(g: &StabilizerGroup) -> Result<MinimalSupportTable> {
    Ok(MinimalAnalysis::compute(g)?.table)
}

/// True when X, Y and Z all occur on every qubit within the subgroup
/// generated by the minimal elements.
pub fn theorem1_criterion(g: &StabilizerGroup) -> Result<Theorem1Outcome> {
    Ok(theorem1_from_table(&minimal_supports(g)?))
}

pub fn theorem1_from_table(table: &MinimalSupportTable) -> Theorem1Outcome {
    Theorem1Outcome {
        holds: table.per_qubit_coverage.iter().all(LetterSet::is_complete),
        coverage: table.per_qubit_coverage.clone(),
    }
}

/// Evaluates the four sufficient conditions. On states that are not fully
/// entangled (or on a single qubit) all flags are false: the conditions
/// presuppose a fully entangled state on at least two qubits, and only
/// then does each flag imply the coverage criterion.
pub fn corollary1_conditions(g: &StabilizerGroup) -> Result<Corollary1Flags> {
    let analysis = MinimalAnalysis::compute(g)?;
    let fully_entangled = g.is_fully_entangled();
    Ok(corollary1_from_parts(g, &analysis, fully_entangled))
}

pub(crate) fn corollary1_from_parts(
    g: &StabilizerGroup,
    analysis: &MinimalAnalysis,
    fully_entangled: bool,
) -> Corollary1Flags {
    let n = g.num_qubits();
    if !fully_entangled || n < 2 {
        return Corollary1Flags::default();
    }
    let table = &analysis.table;

    let i = table.m_basis.len() == n;
    let ii = crate::gf4::is_gf4_linear(g);

    let a3_supports: Vec<&SupportMask> = table
        .entries
        .iter()
        .filter(|e| e.a_omega == 3)
        .map(|e| &e.omega)
        .collect();

    // (iii): every element whose support is nonminimal must contain an
    // A=3 minimal support. Elements sharing a support impose the same
    // requirement, so the scan runs over the distinct occupied supports.
    let minimal_set: Vec<&SupportMask> = table.entries.iter().map(|e| &e.omega).collect();
    let iii = analysis
        .tally
        .iter()
        .filter(|(bits, _)| !bits.is_zero())
        .map(|(bits, _)| SupportMask::from_bits(bits.clone()))
        .filter(|support| !minimal_set.iter().any(|m| **m == *support))
        .all(|support| a3_supports.iter().any(|omega| omega.is_subset(&support)));

    // (iv): the A=3 minimal supports jointly cover every qubit.
    let mut covered = SupportMask::empty(n);
    for omega in &a3_supports {
        covered = covered.union(omega);
    }
    let iv = !a3_supports.is_empty() && covered.is_full();

    let flags = Corollary1Flags { i, ii, iii, iv };
    debug_assert!(
        {
            let t1 = theorem1_from_table(table).holds;
            (!flags.ii || flags.i) && (!flags.iii || flags.i) && (!flags.any() || t1)
        },
        "corollary implication chain violated"
    );
    flags
}

/// Checks the count lemma on every minimal support of the group.
pub fn lemma1_verify(g: &StabilizerGroup) -> Result<Lemma1Report> {
    Ok(lemma1_from_table(&minimal_supports(g)?))
}

pub fn lemma1_from_table(table: &MinimalSupportTable) -> Lemma1Report {
    let mut violations = Vec::new();
    for entry in &table.entries {
        match entry.a_omega {
            1 => {}
            3 => {
                if entry.omega.weight() % 2 != 0 {
                    violations.push(Lemma1Violation {
                        omega: entry.omega.clone(),
                        a_omega: 3,
                        reason: "count 3 on an odd-size support".to_string(),
                    });
                }
                if entry.witnesses.len() != 3 {
                    violations.push(Lemma1Violation {
                        omega: entry.omega.clone(),
                        a_omega: 3,
                        reason: format!("expected 3 witnesses, kept {}", entry.witnesses.len()),
                    });
                    continue;
                }
                for i in entry.omega.indices() {
                    let mut seen = LetterSet::empty();
                    for w in &entry.witnesses {
                        seen.insert(w.letter(i));
                    }
                    if !seen.is_complete() {
                        violations.push(Lemma1Violation {
                            omega: entry.omega.clone(),
                            a_omega: 3,
                            reason: format!("witnesses realize only {{{seen}}} at qubit {}", i + 1),
                        });
                    }
                }
            }
            other => violations.push(Lemma1Violation {
                omega: entry.omega.clone(),
                a_omega: other,
                reason: format!("count {other} is neither 1 nor 3"),
            }),
        }
    }
    Lemma1Report {
        entries_checked: table.entries.len(),
        violations,
    }
}
