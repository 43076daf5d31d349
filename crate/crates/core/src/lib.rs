//! Lex and expansive points on Hilbert schemes of Clements–Lindström schemes.

pub mod betti;
pub mod enumeration;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod matrix;
pub mod monomial;
pub mod points;
pub mod poly;
pub mod ring;

pub use betti::{
    betti_ambient, betti_eliahou_kervaire, betti_quadratic_recursion, betti_resolution_oracle, bounds_report, BettiTable,
    BoundsReport, FieldSpec, Over, Provenance, Window,
};
pub use enumeration::{almost_lex_points, certified_degree_bound, strongly_stable_points, Enumeration, EnumerationBudget};
pub use error::{Error, Result};
pub use hilbert::{hf_hp_threshold, hilbert_function, hilbert_polynomial, hilbert_polynomial_ideal, series_numerator, SeriesNumerator};
pub use matrix::{default_matrix, parse_matrix, Case, DEFAULT_MATRIX};
pub use ideal::{Classification, Decomposition, MonomialIdeal, Side};
pub use monomial::{monomials_of_degree, MonoOrder, Monomial};
pub use poly::{gotzmann_number, hp_difference_constant, hp_preceq, HilbertPoly};
pub use ring::{ClRing, ExtNat};
pub use points::{
    check_axiom, check_candidate, chain, exp_chain, exp_point, exp_zero_dimensional, hilb_nonempty, hyperplane_check, is_expansive,
    lex_chain, lex_eq_exp_case, lex_point, linear_forms_check, Axiom, AxiomInstance, AxiomReport, Chain, ChainKind,
    ChainStep, LexExpCase, Witnesses,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/hilbert.md")]
    mod hilbert {}
    #[doc = include_str!("../../../book/src/points.md")]
    mod points {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/betti.md")]
    mod betti {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
