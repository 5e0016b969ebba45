//! Partitions, symmetric-function expansions and polynomial oracles.

pub mod brute;
pub mod coeff;
pub mod expansion;
pub mod partition;
pub mod peel;
pub mod poly;

pub use brute::{
    brute_chromatic, brute_chromatic_with_budget, brute_chromatic_x, chromatic_m_coefficients,
    chromatic_m_coefficients_t, DEFAULT_BRUTE_BUDGET,
};
pub use coeff::{Coefficient, JsonCoeff, TPoly};
pub use expansion::{jacobi_trudi_e, jacobi_trudi_h, omega_on_eh, omega_on_s, s_to_h, Basis, SymExpansion};
pub use partition::{partitions, partitions_max_len, Partition};
pub use peel::{monomial_coefficient, peel, symmetric_to_basis};
pub use poly::{e_poly, expansion_to_polynomial, h_poly, m_poly, IntPolyCache, MultiPoly, PolyCache};

use num_bigint::BigInt;

use crate::error::Result;
use crate::order::HessenbergFunction;
use crate::tableaux::gasharov_expansion;

/// h-expansion of `ωX_G` at `t = 1`, via Gasharov and Jacobi–Trudi.
pub fn coefficients_in_h(f: &HessenbergFunction) -> SymExpansion<BigInt> {
    s_to_h(&gasharov_expansion(f)).expect("Gasharov expansion is in the s basis")
}

/// t-graded h-expansion of `ωX_G(x, t)`: the e-expansion of `X_G(x, t)` read off
/// its monomial coefficients, with `e` relabelled to `h`.
pub fn coefficients_in_h_t(f: &HessenbergFunction) -> Result<SymExpansion<TPoly>> {
    let m = chromatic_m_coefficients_t(f)?;
    Ok(peel(&m, f.n() as u32, Basis::E)?.relabel(Basis::H))
}

/// e-expansion of `X_G` at `t = 1` from its monomial coefficients, independent
/// of any tableau enumeration.
pub fn coefficients_in_e_oracle(f: &HessenbergFunction) -> Result<SymExpansion<BigInt>> {
    let m = chromatic_m_coefficients(f)?;
    peel(&m, f.n() as u32, Basis::E)
}
