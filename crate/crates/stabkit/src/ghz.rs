//! GHZ stabilizers, classification, and explicit local Clifford
//! certificates into GHZ form.
//!
//! A fully entangled state on three or more qubits is locally Clifford
//! equivalent to the GHZ state exactly when every consecutive qubit pair
//! supports exactly one group element. The certificate construction reads
//! those unique pair elements off as a chain, completes them with one
//! full-support generator, and maps both onto the standard GHZ generators
//! qubit by qubit.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, SpanBasis};
use crate::lclifford::{fix_signs, lc_equivalent_with_cap, Gl2, LocalCliffordOp};
use crate::pauli::{Letter, SupportMask};
use crate::stabilizer::StabilizerGroup;

/// A local Clifford operation carrying a group onto the GHZ stabilizer.
#[derive(Clone, Debug)]
pub struct GhzCertificate {
    pub op: LocalCliffordOp,
    pub target_n: usize,
}

/// The n-qubit GHZ stabilizer: X on every qubit, plus Z on each
/// consecutive pair, all signs +.
pub fn ghz_stabilizer(n: usize) -> Result<StabilizerGroup> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "GHZ stabilizer needs at least 2 qubits, got {n}"
        )));
    }
    let mut gens = vec!["X".repeat(n)];
    for i in 0..n - 1 {
        let mut letters = vec!['I'; n];
        letters[i] = 'Z';
        letters[i + 1] = 'Z';
        gens.push(letters.into_iter().collect());
    }
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    StabilizerGroup::from_strings(&refs)
}

/// True when the state lies in the GHZ class. States that are not fully
/// entangled never qualify. On two qubits every fully entangled stabilizer
/// state is an EPR state, which is the two-qubit GHZ; from three qubits on
/// the consecutive-pair counts decide.
pub fn is_lc_ghz(g: &StabilizerGroup) -> bool {
    let n = g.num_qubits();
    if n < 2 || !g.is_fully_entangled() {
        return false;
    }
    if n == 2 {
        return true;
    }
    (0..n - 1).all(|i| {
        let omega = SupportMask::from_indices(n, &[i, i + 1]);
        g.a_omega(&omega).a_omega == 1
    })
}

/// Builds a certificate mapping `g` onto `ghz_stabilizer(n)` as signed
/// groups. Fails with a domain error when `g` is not in the GHZ class.
pub fn ghz_certificate(g: &StabilizerGroup) -> Result<GhzCertificate> {
    let n = g.num_qubits();
    if !is_lc_ghz(g) {
        return Err(Error::Domain(
            "state is not in the GHZ class; no certificate exists".to_string(),
        ));
    }
    let target = ghz_stabilizer(n)?;
    if n == 2 {
        // Pair counts do not apply on two qubits; the exhaustive search
        // over 36 factor assignments settles it directly.
        let op = lc_equivalent_with_cap(g, &target, 2)?.ok_or_else(|| {
            Error::Internal("fully entangled 2-qubit state not equivalent to EPR".to_string())
        })?;
        return Ok(GhzCertificate { op, target_n: 2 });
    }

    // The unique element on each consecutive pair. Commutation forces the
    // shared letter at each overlap, giving one letter b_i per qubit.
    let mut chain = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let omega = SupportMask::from_indices(n, &[i, i + 1]);
        let count = g.a_omega(&omega);
        if count.a_omega != 1 {
            return Err(Error::Internal(format!(
                "consecutive pair {omega} carries {} elements after classification",
                count.a_omega
            )));
        }
        chain.push(count.witnesses[0].clone());
    }
    let mut chain_letters = Vec::with_capacity(n);
    chain_letters.push(chain[0].letter(0));
    for i in 1..n - 1 {
        let shared = chain[i - 1].letter(i);
        if chain[i].letter(i) != shared {
            return Err(Error::Internal(format!(
                "chain elements disagree at qubit {}",
                i + 1
            )));
        }
        chain_letters.push(shared);
    }
    chain_letters.push(chain[n - 2].letter(n - 1));

    // Any generator outside the chain span completes a generating set, and
    // it necessarily has full support with a letter different from the
    // chain letter everywhere; anything else would starve a qubit of its
    // third Pauli, impossible for a fully entangled state.
    let mut chain_span = SpanBasis::new();
    for element in &chain {
        chain_span.insert(&element.packed_bits());
    }
    let completion = g
        .generators()
        .iter()
        .find(|gen| !chain_span.contains(&gen.packed_bits()))
        .ok_or_else(|| Error::Internal("generators lie inside the chain span".to_string()))?;
    for (i, &chain_letter) in chain_letters.iter().enumerate() {
        let a = completion.letter(i);
        if a == Letter::I || a == chain_letter {
            return Err(Error::Internal(format!(
                "completing generator is degenerate at qubit {}: {a:?} vs {chain_letter:?}",
                i + 1
            )));
        }
    }

    // Per qubit, the factor is pinned by sending the chain letter to Z and
    // the completion letter to X: invert the 2x2 matrix whose columns are
    // those two bit pairs.
    let factors: Vec<Gl2> = (0..n)
        .map(|i| {
            let (bz, bx) = chain_letters[i].bits();
            let (az, ax) = completion.letter(i).bits();
            let mut m = BitMatrix::zeros(2, 2);
            m.set(0, 0, bz);
            m.set(1, 0, bx);
            m.set(0, 1, az);
            m.set(1, 1, ax);
            let inv = m
                .inverse()
                .expect("distinct non-identity letters are independent");
            Gl2::from_entries([
                [inv.get(0, 0), inv.get(0, 1)],
                [inv.get(1, 0), inv.get(1, 1)],
            ])
            .expect("inverse of an invertible 2x2 matrix")
        })
        .collect();

    let op = LocalCliffordOp::from_factors(factors);
    let layer = fix_signs(&op, g, &target)?;
    let op = op.with_layer(layer);
    if !op.apply(g)?.same_signed_group(&target) {
        return Err(Error::Internal(
            "GHZ certificate fails signed-group verification".to_string(),
        ));
    }
    Ok(GhzCertificate { op, target_n: n })
}
