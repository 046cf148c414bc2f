//! Runtime caps, overridable through the environment.
//!
//! Precedence for tools built on this crate is flag > environment > default;
//! the functions here resolve the environment/default part.

/// Default cap on qubit count for full group enumeration (2^n elements).
pub const DEFAULT_MAX_ENUM_QUBITS: usize = 20;

/// Default cap on qubit count for the exhaustive local Clifford search (6^n leaves).
pub const DEFAULT_MAX_LC_QUBITS: usize = 8;

/// Environment variable overriding [`DEFAULT_MAX_ENUM_QUBITS`].
pub const ENUM_CAP_ENV: &str = "STAB_MAX_ENUM_QUBITS";

/// Environment variable overriding [`DEFAULT_MAX_LC_QUBITS`].
pub const LC_CAP_ENV: &str = "STAB_MAX_LC_QUBITS";

fn env_cap(var: &str, default: usize) -> usize {
    match std::env::var(var) {
        Ok(s) => s.trim().parse().unwrap_or(default),
        Err(_) => default,
    }
}

/// Effective enumeration cap: `STAB_MAX_ENUM_QUBITS` or the default of 20.
pub fn max_enum_qubits() -> usize {
    env_cap(ENUM_CAP_ENV, DEFAULT_MAX_ENUM_QUBITS)
}

/// Effective LC search cap: `STAB_MAX_LC_QUBITS` or the default of 8.
pub fn max_lc_qubits() -> usize {
    env_cap(LC_CAP_ENV, DEFAULT_MAX_LC_QUBITS)
}
