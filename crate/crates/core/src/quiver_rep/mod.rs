//! The module category of a simply-laced Dynkin path algebra over an exact
//! field.

mod catalog;
mod quiver;
mod rep;
mod resolution;

pub use catalog::{build_catalog, IndCatalog};
pub use quiver::{Path, Quiver};
pub use rep::{
    cokernel_rep, euler_form, hom_basis, hom_dim, injective_sum, kernel_rep,
    morphism_from_projectives, projective_sum, subquotient, Rep, RepMorphism,
};
pub use resolution::{nakayama_inverse_homology, presentation, tau, tau_inverse, Presentation};

/// Direction of the AR translate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TranslateDirection {
    Tau,
    TauInverse,
}

pub fn translate<F: crate::field::Field>(
    field: &F,
    q: &Quiver,
    m: &Rep<F>,
    direction: TranslateDirection,
) -> Rep<F> {
    match direction {
        TranslateDirection::Tau => tau(field, q, m),
        TranslateDirection::TauInverse => tau_inverse(field, q, m),
    }
}

/// `dim Ext^1(M, N)` from a minimal projective presentation of `M`.
pub fn ext1_dim<F: crate::field::Field>(field: &F, q: &Quiver, m: &Rep<F>, n: &Rep<F>) -> usize {
    presentation(field, q, m).ext_dim(field, q, n)
}
