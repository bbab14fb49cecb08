//! Special functions: gamma/beta, Gauss hypergeometric, orthogonal
//! polynomials, Weierstrass and Jacobi elliptic functions, the Y family, and
//! the Calogero-Sutherland eigenfunctions.
//!
//! Everything is pure and safe for concurrent use; series truncation is
//! governed by [`crate::series::SeriesControl`] passed by value.

mod cs;
mod ellip;
mod gamma;
mod hyp;
mod orthopoly;
mod weier;
mod ybig;

pub use cs::{cs_eigenpair, cs_eigenpair_x, cs_phi_jet, cs_residual, CsConfig};
pub use ellip::{
    gauss64, jacobi_elliptic, sn_by_integral_inversion, sn_cn_dn_jet, EllipticModulus,
};
pub use gamma::{beta, gamma, gamma_limit, gamma_product, pochhammer, EULER_GAMMA};
pub use hyp::{chu_vandermonde, hyp2f1};
pub use orthopoly::{chebyshev_t, chebyshev_u, jacobi_p, legendre_p};
pub use weier::{
    legendre_relation_value,
    g2_zero_lattice, lattice_data, sigma_complex, sigma_w, weierstrass_invariants, wp,
    wp_complex, wp_jet, wp_lattice_sum_oracle, wp_prime, wp_prime_complex, zeta_complex, zeta_w,
    LatticeData, LatticeSpec, POLE_EXCLUSION,
};
