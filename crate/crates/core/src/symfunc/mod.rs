//! Polynomials in `x_1, x_2, ...` graded by `deg x_k = k`, elementary and
//! Jacobi-Trudi Schur polynomials, power monomials `P_ρ`, and the
//! contravariant form of the bosonic Fock space.
//!
//! Conventions: the Heisenberg algebra acts by `a_n = ∂/∂x_n` and
//! `a_{-n} = n x_n` (central charge one, zero charge). The contravariant
//! form makes these adjoint, which gives
//! `(x^λ, x^μ) = δ_{λμ} ∏_i l_i! / i^{l_i}` on monomials, `l_i` being the
//! multiplicity of `i` in `λ`. The often-quoted `∏ l_i!` omits the
//! `i^{l_i}` factor and is not used here.

mod poly;
mod schur;

pub use poly::{GradedPolynomial, Monomial};
pub use schur::{
    contravariant_form, elementary_schur, frobenius_expand, monomial, power_monomial,
    schur_in_monomials, schur_poly, DEFAULT_SYMFUNC_CAP,
};
