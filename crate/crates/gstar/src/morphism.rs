//! Exact verification that a candidate map between algebras, given by the
//! images of the source basis, is an embedding: injective, multiplicative,
//! star-preserving, and degree-preserving. Witness extraction leans on this
//! to certify every structural match it reports.

use thiserror::Error;

use crate::algebra::{el_add, el_scale, Element, GradedStarAlgebra};
use crate::matrix::ExactMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error("source and target have different (group, tau) contexts")]
    ContextMismatch,
    #[error("expected {expected} basis images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("images are linearly dependent")]
    NotInjective,
    #[error("image of basis vector {i} is not homogeneous of the source degree")]
    DegreeMismatch { i: usize },
    #[error("product of images of basis vectors {i} and {j} differs from the image of their product")]
    ProductMismatch { i: usize, j: usize },
    #[error("star of the image of basis vector {i} differs from the image of its star")]
    StarMismatch { i: usize },
    #[error("dimensions differ, the embedding is not onto")]
    NotSurjective,
}

/// Pushes a source element through the candidate map by linearity.
fn push(images: &[Element], target: &GradedStarAlgebra, v: &Element) -> Element {
    let mut out = target.zero_element();
    for (c, im) in v.iter().zip(images) {
        if !c.is_zero() {
            out = el_add(&out, &el_scale(c, im));
        }
    }
    out
}

/// Verifies that b_i -> images[i] extends to an injective homomorphism of
/// graded algebras with involution. The cyclotomic orders of the two sides
/// may differ; scalars are compared after lifting.
pub fn verify_embedding(
    source: &GradedStarAlgebra,
    target: &GradedStarAlgebra,
    images: &[Element],
) -> Result<(), MorphismError> {
    if source.group() != target.group() || source.tau() != target.tau() {
        return Err(MorphismError::ContextMismatch);
    }
    if images.len() != source.dim() {
        return Err(MorphismError::WrongImageCount { expected: source.dim(), got: images.len() });
    }
    if ExactMatrix::from_columns(images.to_vec()).rank() != source.dim() {
        return Err(MorphismError::NotInjective);
    }
    for (i, im) in images.iter().enumerate() {
        if target.homogeneous_degree(im) != Some(source.degree_of_basis(i)) {
            return Err(MorphismError::DegreeMismatch { i });
        }
    }
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = target.mul(&images[i], &images[j]);
            let rhs = push(
                images,
                target,
                &source.mul(&source.basis_element(i), &source.basis_element(j)),
            );
            if lhs != rhs {
                return Err(MorphismError::ProductMismatch { i, j });
            }
        }
    }
    for (i, im) in images.iter().enumerate() {
        let lhs = target.star(im);
        let rhs = push(images, target, &source.star(&source.basis_element(i)));
        if lhs != rhs {
            return Err(MorphismError::StarMismatch { i });
        }
    }
    Ok(())
}

/// An embedding between algebras of equal dimension.
pub fn verify_isomorphism(
    source: &GradedStarAlgebra,
    target: &GradedStarAlgebra,
    images: &[Element],
) -> Result<(), MorphismError> {
    verify_embedding(source, target, images)?;
    if source.dim() != target.dim() {
        return Err(MorphismError::NotSurjective);
    }
    Ok(())
}
