//! Codimension sequences in four flavors.
//!
//! A multilinear monomial of degree `n` is a word using each of the
//! variables `x1..xn` exactly once; depending on the flavor the letters
//! carry group degrees, stars, both, or neither. The codimension at
//! degree `n` is the rank of the evaluation matrix whose rows are these
//! monomials and whose columns are indexed by tuples of basis elements
//! together with an output coordinate. That rank is the dimension of the
//! multilinear monomial space modulo the identities of the algebra, so
//! it is invariant under any change of homogeneous basis.

use crate::algebra::{Element, GradedStarAlgebra};
use crate::group::FiniteGroup;
use crate::matrix::ExactMatrix;
use crate::poly::{is_identity, GStarPolynomial, Letter};
use crate::scalar::CycScalar;
use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

/// Which family of multilinear monomials to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Plain variables, substituted by arbitrary elements.
    Ordinary,
    /// Variables may carry a star; substitutions stay unrestricted.
    Star,
    /// Variables carry group degrees and are substituted homogeneously.
    Graded,
    /// Degrees and stars together.
    Gstar,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [Flavor::Ordinary, Flavor::Star, Flavor::Graded, Flavor::Gstar];

    fn graded(self) -> bool {
        matches!(self, Flavor::Graded | Flavor::Gstar)
    }

    fn starred(self) -> bool {
        matches!(self, Flavor::Star | Flavor::Gstar)
    }
}

impl std::fmt::Display for Flavor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Flavor::Ordinary => "ORDINARY",
            Flavor::Star => "STAR",
            Flavor::Graded => "GRADED",
            Flavor::Gstar => "GSTAR",
        };
        write!(f, "{name}")
    }
}

/// Size guards for codimension computations.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Largest monomial space that may be enumerated at one degree.
    pub max_monomials: u128,
    /// Process multidegree blocks one at a time instead of in parallel.
    /// Both modes produce identical results; this only trades speed.
    pub sequential: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_monomials: 200_000,
            sequential: false,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodimError {
    /// The monomial space at this degree exceeds the configured cap.
    #[error("SizeLimit: degree needs {required} monomials, cap is {cap}")]
    SizeLimit { required: u128, cap: u128 },
    /// The two algebras do not share a group, involution and scalar field.
    #[error("MismatchedContext: the algebras live over different (group, involution, field) data")]
    MismatchedContext,
    /// An invariant that holds for every valid input failed.
    #[error("InternalInconsistency: {0}")]
    InternalInconsistency(String),
}

/// Codimension values at one degree, one per flavor. Construction checks
/// the chain c_n <= c_n^* <= c_n^#, c_n <= c_n^G <= c_n^# and
/// c_n^# <= 2^n |G|^n c_n, so a returned report always has
/// `inequalities_ok == true`; a violation surfaces as an error instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodimReport {
    pub n: usize,
    pub c_n: usize,
    pub c_n_g: usize,
    pub c_n_star: usize,
    pub c_n_sharp: usize,
    pub inequalities_ok: bool,
}

/// Outcome of a degreewise identity-containment test.
#[derive(Debug, Clone, PartialEq)]
pub enum Containment {
    Contained,
    SeparatedBy(GStarPolynomial),
}

/// Number of multilinear monomials at degree `n` over a group of the
/// given order, saturating at `u128::MAX`.
pub fn monomial_count(n: usize, flavor: Flavor, group_order: usize) -> u128 {
    let mut count: u128 = 1;
    for k in 1..=n {
        count = count.saturating_mul(k as u128);
    }
    let mut per_var: u128 = 1;
    if flavor.graded() {
        per_var = per_var.saturating_mul(group_order as u128);
    }
    if flavor.starred() {
        per_var = per_var.saturating_mul(2);
    }
    for _ in 0..n {
        count = count.saturating_mul(per_var);
    }
    count
}

fn guard(n: usize, flavor: Flavor, group_order: usize, limits: &Limits) -> Result<(), CodimError> {
    let required = monomial_count(n, flavor, group_order);
    if required > limits.max_monomials {
        return Err(CodimError::SizeLimit {
            required,
            cap: limits.max_monomials,
        });
    }
    Ok(())
}

fn word(sigma: &[usize], degrees: Option<&[usize]>, stars: &[bool]) -> Vec<Letter> {
    sigma
        .iter()
        .zip(stars)
        .map(|(&v, &star)| Letter {
            var: v + 1,
            degree: degrees.map_or(0, |d| d[v]),
            star,
        })
        .collect()
}

fn star_patterns(n: usize, flavor: Flavor) -> Vec<Vec<bool>> {
    if flavor.starred() {
        (0..n)
            .map(|_| [false, true].into_iter())
            .multi_cartesian_product()
            .collect()
    } else {
        vec![vec![false; n]]
    }
}

fn degree_classes(n: usize, flavor: Flavor, group_order: usize) -> Vec<Option<Vec<usize>>> {
    if !flavor.graded() {
        return vec![None];
    }
    (0..n)
        .map(|_| 0..group_order)
        .multi_cartesian_product()
        .map(Some)
        .collect()
}

/// All multilinear monomials at degree `n`, ordered lexicographically in
/// (permutation word, degree tuple, star tuple). Letters of ungraded
/// flavors carry the identity degree tag; their substitutions are
/// nevertheless unrestricted.
pub fn monomial_basis(
    n: usize,
    flavor: Flavor,
    group: &FiniteGroup,
    limits: &Limits,
) -> Result<Vec<Vec<Letter>>, CodimError> {
    assert!(n >= 1, "degree must be at least 1");
    guard(n, flavor, group.order(), limits)?;
    let degree_patterns = degree_classes(n, flavor, group.order());
    let stars = star_patterns(n, flavor);
    let mut out = Vec::new();
    for sigma in (0..n).permutations(n) {
        for degrees in &degree_patterns {
            for pattern in &stars {
                out.push(word(&sigma, degrees.as_deref(), pattern));
            }
        }
    }
    Ok(out)
}

/// Monomials of one multidegree class, ordered so that concatenating the
/// classes in lexicographic degree order under a common permutation word
/// reproduces the order of `monomial_basis`.
fn class_monomials(n: usize, flavor: Flavor, degrees: Option<&[usize]>) -> Vec<Vec<Letter>> {
    let stars = star_patterns(n, flavor);
    let mut out = Vec::new();
    for sigma in (0..n).permutations(n) {
        for pattern in &stars {
            out.push(word(&sigma, degrees, pattern));
        }
    }
    out
}

/// Basis indices each variable may take in this class.
fn class_choices(a: &GradedStarAlgebra, n: usize, degrees: Option<&[usize]>) -> Vec<Vec<usize>> {
    (0..n)
        .map(|v| match degrees {
            None => (0..a.dim()).collect(),
            Some(d) => (0..a.dim()).filter(|&i| a.degree_of_basis(i) == d[v]).collect(),
        })
        .collect()
}

fn evaluate_word(a: &GradedStarAlgebra, letters: &[Letter], tuple: &[usize]) -> Element {
    let mut acc: Option<Element> = None;
    for letter in letters {
        let mut el = a.basis_element(tuple[letter.var - 1]);
        if letter.star {
            el = a.star(&el);
        }
        acc = Some(match acc {
            None => el,
            Some(prev) => a.mul(&prev, &el),
        });
    }
    acc.expect("words are nonempty")
}

/// Evaluation matrix of one class block: rows follow `monomials`, columns
/// run over the admissible tuples in lexicographic order, each tuple
/// contributing one column per output coordinate.
fn class_matrix(
    a: &GradedStarAlgebra,
    monomials: &[Vec<Letter>],
    choices: &[Vec<usize>],
) -> ExactMatrix {
    if choices.iter().any(|c| c.is_empty()) {
        return ExactMatrix::zero(monomials.len(), 0);
    }
    let tuples: Vec<Vec<usize>> = choices
        .iter()
        .map(|c| c.iter().copied())
        .multi_cartesian_product()
        .collect();
    let mut rows = Vec::with_capacity(monomials.len());
    for letters in monomials {
        let mut row = Vec::with_capacity(tuples.len() * a.dim());
        for tuple in &tuples {
            row.extend(evaluate_word(a, letters, tuple));
        }
        rows.push(row);
    }
    ExactMatrix::from_rows(rows)
}

/// Full evaluation matrix at degree `n`: rows in `monomial_basis` order,
/// columns over all `dim^n` substitution tuples times the output
/// coordinate. Graded flavors substitute homogeneously, so a tuple whose
/// degrees disagree with a row's letters contributes a zero entry there.
/// Intended for small inputs; `codimension` works blockwise instead.
pub fn evaluation_matrix(
    a: &GradedStarAlgebra,
    n: usize,
    flavor: Flavor,
    limits: &Limits,
) -> Result<ExactMatrix, CodimError> {
    let monomials = monomial_basis(n, flavor, a.group(), limits)?;
    let tuples: Vec<Vec<usize>> = (0..n)
        .map(|_| 0..a.dim())
        .multi_cartesian_product()
        .collect();
    let enforce = flavor.graded();
    let mut rows = Vec::with_capacity(monomials.len());
    for letters in &monomials {
        let mut row = Vec::with_capacity(tuples.len() * a.dim());
        for tuple in &tuples {
            let mismatched = enforce
                && letters
                    .iter()
                    .any(|l| a.degree_of_basis(tuple[l.var - 1]) != l.degree);
            if mismatched {
                row.extend(a.zero_element());
            } else {
                row.extend(evaluate_word(a, letters, tuple));
            }
        }
        rows.push(row);
    }
    Ok(ExactMatrix::from_rows(rows))
}

/// The codimension at degree `n`: rank of the evaluation matrix, computed
/// as a sum of independent multidegree blocks. Blocks are processed in
/// parallel unless `limits.sequential` is set; the result is identical
/// either way.
pub fn codimension(
    a: &GradedStarAlgebra,
    n: usize,
    flavor: Flavor,
    limits: &Limits,
) -> Result<usize, CodimError> {
    assert!(n >= 1, "degree must be at least 1");
    guard(n, flavor, a.group().order(), limits)?;
    let classes = degree_classes(n, flavor, a.group().order());
    let block_rank = |degrees: &Option<Vec<usize>>| -> usize {
        let choices = class_choices(a, n, degrees.as_deref());
        if choices.iter().any(|c| c.is_empty()) {
            return 0;
        }
        let monomials = class_monomials(n, flavor, degrees.as_deref());
        class_matrix(a, &monomials, &choices).rank()
    };
    let total = if limits.sequential {
        classes.iter().map(block_rank).sum()
    } else {
        classes.par_iter().map(block_rank).sum()
    };
    Ok(total)
}

/// Codimensions of all four flavors at degree `n`, with the comparison
/// chain between them verified.
pub fn codim_report(
    a: &GradedStarAlgebra,
    n: usize,
    limits: &Limits,
) -> Result<CodimReport, CodimError> {
    let c_n = codimension(a, n, Flavor::Ordinary, limits)?;
    let c_n_star = codimension(a, n, Flavor::Star, limits)?;
    let c_n_g = codimension(a, n, Flavor::Graded, limits)?;
    let c_n_sharp = codimension(a, n, Flavor::Gstar, limits)?;
    let order = a.group().order() as u128;
    let upper = 2u128
        .saturating_pow(n as u32)
        .saturating_mul(order.saturating_pow(n as u32))
        .saturating_mul(c_n as u128);
    let checks = [
        (c_n <= c_n_star, "c_n <= c_n^*"),
        (c_n_star <= c_n_sharp, "c_n^* <= c_n^#"),
        (c_n <= c_n_g, "c_n <= c_n^G"),
        (c_n_g <= c_n_sharp, "c_n^G <= c_n^#"),
        ((c_n_sharp as u128) <= upper, "c_n^# <= 2^n |G|^n c_n"),
    ];
    if let Some((_, label)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(CodimError::InternalInconsistency(format!(
            "codimension chain violated at degree {n}: {label} fails \
             with c_n={c_n}, c_n^G={c_n_g}, c_n^*={c_n_star}, c_n^#={c_n_sharp}"
        )));
    }
    Ok(CodimReport {
        n,
        c_n,
        c_n_g,
        c_n_star,
        c_n_sharp,
        inequalities_ok: true,
    })
}

/// Decides whether every multilinear identity of `a` at degree `n` is an
/// identity of `q`. The two algebras must share their (group, involution,
/// field) context. On failure the returned polynomial is an identity of
/// `a` but not of `q`, built from the first violating multidegree class
/// in lexicographic order.
pub fn contains_at_degree(
    a: &GradedStarAlgebra,
    q: &GradedStarAlgebra,
    n: usize,
    limits: &Limits,
) -> Result<Containment, CodimError> {
    assert!(n >= 1, "degree must be at least 1");
    if !a.same_context(q) {
        return Err(CodimError::MismatchedContext);
    }
    guard(n, Flavor::Gstar, a.group().order(), limits)?;
    let classes = degree_classes(n, Flavor::Gstar, a.group().order());
    let class_ranks = |degrees: &Option<Vec<usize>>| -> (usize, usize) {
        let monomials = class_monomials(n, Flavor::Gstar, degrees.as_deref());
        let ea = class_matrix(a, &monomials, &class_choices(a, n, degrees.as_deref()));
        let eq = class_matrix(q, &monomials, &class_choices(q, n, degrees.as_deref()));
        (ea.rank(), ea.hstack(&eq).rank())
    };
    let ranks: Vec<(usize, usize)> = if limits.sequential {
        classes.iter().map(class_ranks).collect()
    } else {
        classes.par_iter().map(class_ranks).collect()
    };
    for (degrees, &(alone, combined)) in classes.iter().zip(&ranks) {
        if combined == alone {
            continue;
        }
        let monomials = class_monomials(n, Flavor::Gstar, degrees.as_deref());
        let ea = class_matrix(a, &monomials, &class_choices(a, n, degrees.as_deref()));
        let eq = class_matrix(q, &monomials, &class_choices(q, n, degrees.as_deref()));
        let kernel = ea.transpose().nullspace();
        for v in kernel {
            let survives = (0..eq.cols()).any(|j| {
                let mut s = CycScalar::zero();
                for (i, vi) in v.iter().enumerate() {
                    if !vi.is_zero() {
                        s = s.add(&vi.mul(eq.get(i, j)));
                    }
                }
                !s.is_zero()
            });
            if !survives {
                continue;
            }
            let terms = v
                .into_iter()
                .zip(monomials.iter())
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, m)| (c, m.clone()))
                .collect();
            let f = GStarPolynomial::from_terms(terms);
            debug_assert!(is_identity(a, &f).unwrap_or(false));
            debug_assert!(!is_identity(q, &f).unwrap_or(true));
            return Ok(Containment::SeparatedBy(f));
        }
        return Err(CodimError::InternalInconsistency(format!(
            "degree {n}: a class gained rank yet no kernel vector separates"
        )));
    }
    Ok(Containment::Contained)
}

/// The closed-form upper bound dimA * m * sum_{k<s} C(n,k) dimJ^k on the
/// full codimension of an algebra with polynomial growth, where m counts
/// the simple summands and s is the nilpotency index of the radical.
pub fn polynomial_bound(n: u64, dim_a: u64, m: u64, dim_j: u64, s: u64) -> BigUint {
    let mut sum = BigUint::zero();
    let mut k = 0u64;
    while k < s && k <= n {
        let choose = num_integer::binomial(BigUint::from(n), BigUint::from(k));
        sum += choose * BigUint::from(dim_j).pow(k as u32);
        k += 1;
    }
    BigUint::from(dim_a) * BigUint::from(m) * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, CatalogId};
    use crate::group::{FiniteGroup, GroupInvolution};

    fn trivial_context() -> (FiniteGroup, GroupInvolution) {
        let g = FiniteGroup::cyclic(1);
        let t = GroupInvolution::identity_map(&g).unwrap();
        (g, t)
    }

    fn c2_context() -> (FiniteGroup, GroupInvolution) {
        let g = FiniteGroup::cyclic(2);
        let t = GroupInvolution::identity_map(&g).unwrap();
        (g, t)
    }

    fn sign_pair() -> GradedStarAlgebra {
        let (g, t) = trivial_context();
        build(CatalogId::Fc2Star, &g, &t).unwrap()
    }

    fn reflection() -> GradedStarAlgebra {
        let (g, t) = c2_context();
        build(CatalogId::MRhoTau { g: 1 }, &g, &t).unwrap()
    }

    fn words_as_text(words: &[Vec<Letter>]) -> Vec<String> {
        words
            .iter()
            .map(|w| w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "))
            .collect()
    }

    #[test]
    fn monomial_counts_follow_the_flavor() {
        assert_eq!(monomial_count(3, Flavor::Ordinary, 2), 6);
        assert_eq!(monomial_count(3, Flavor::Star, 2), 48);
        assert_eq!(monomial_count(3, Flavor::Graded, 2), 48);
        assert_eq!(monomial_count(3, Flavor::Gstar, 2), 384);
        let limits = Limits::default();
        let g = FiniteGroup::cyclic(2);
        for flavor in Flavor::ALL {
            for n in 1..=3 {
                let basis = monomial_basis(n, flavor, &g, &limits).unwrap();
                assert_eq!(basis.len() as u128, monomial_count(n, flavor, 2));
            }
        }
    }

    #[test]
    fn monomials_come_out_in_global_order() {
        let limits = Limits::default();
        let c2 = FiniteGroup::cyclic(2);
        let gstar = monomial_basis(1, Flavor::Gstar, &c2, &limits).unwrap();
        assert_eq!(words_as_text(&gstar), ["x1_1", "x1_1*", "x1_g", "x1_g*"]);
        let ordinary = monomial_basis(2, Flavor::Ordinary, &c2, &limits).unwrap();
        assert_eq!(words_as_text(&ordinary), ["x1_1 x2_1", "x2_1 x1_1"]);
    }

    #[test]
    fn the_size_cap_reports_the_required_count() {
        let tight = Limits {
            max_monomials: 10,
            sequential: true,
        };
        let g = FiniteGroup::cyclic(2);
        let err = monomial_basis(3, Flavor::Star, &g, &tight).unwrap_err();
        assert_eq!(
            err,
            CodimError::SizeLimit {
                required: 48,
                cap: 10
            }
        );
        let err = monomial_basis(6, Flavor::Gstar, &g, &Limits::default()).unwrap_err();
        assert_eq!(
            err,
            CodimError::SizeLimit {
                required: 2_949_120,
                cap: 200_000
            }
        );
    }

    #[test]
    fn sign_pair_evaluation_matrix_in_coordinates() {
        let a = sign_pair();
        let m = evaluation_matrix(&a, 1, Flavor::Gstar, &Limits::default()).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 4));
        let expect = [[1i64, 0, 0, 1], [1, 0, 0, -1]];
        for i in 0..2 {
            for j in 0..4 {
                assert_eq!(
                    m.get(i, j).clone(),
                    CycScalar::from_integer(expect[i][j]),
                    "entry ({i},{j})"
                );
            }
        }
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn field_codimension_is_one_in_every_flavor() {
        let (g, t) = c2_context();
        let a = build(CatalogId::Field, &g, &t).unwrap();
        let limits = Limits::default();
        for n in 1..=3 {
            for flavor in Flavor::ALL {
                assert_eq!(codimension(&a, n, flavor, &limits).unwrap(), 1, "{flavor} at {n}");
            }
        }
    }

    #[test]
    fn sign_pair_full_codimensions_double() {
        let a = sign_pair();
        let limits = Limits::default();
        let sharp: Vec<usize> = (1..=4)
            .map(|n| codimension(&a, n, Flavor::Gstar, &limits).unwrap())
            .collect();
        assert_eq!(sharp, [2, 4, 8, 16]);
        for n in 1..=3 {
            assert_eq!(codimension(&a, n, Flavor::Ordinary, &limits).unwrap(), 1);
        }
    }

    #[test]
    fn reflection_report_matches_frozen_values() {
        let a = reflection();
        let limits = Limits::default();
        let r1 = codim_report(&a, 1, &limits).unwrap();
        assert_eq!((r1.c_n, r1.c_n_g, r1.c_n_star, r1.c_n_sharp), (1, 2, 2, 3));
        assert!(r1.inequalities_ok);
        for n in 2..=3 {
            let r = codim_report(&a, n, &limits).unwrap();
            assert!(r.inequalities_ok, "chain holds at degree {n}");
        }
    }

    #[test]
    fn bound_examples() {
        assert_eq!(polynomial_bound(3, 2, 1, 1, 2), BigUint::from(8u32));
        assert_eq!(polynomial_bound(2, 4, 2, 2, 2), BigUint::from(40u32));
        assert_eq!(polynomial_bound(5, 7, 3, 9, 1), BigUint::from(21u32));
    }

    #[test]
    fn an_algebra_contains_its_own_identities() {
        let a = reflection();
        let limits = Limits::default();
        for n in 1..=2 {
            assert_eq!(
                contains_at_degree(&a, &a, n, &limits).unwrap(),
                Containment::Contained
            );
        }
    }

    #[test]
    fn the_field_separates_from_the_sign_pair_by_the_star_difference() {
        let (g, t) = trivial_context();
        let field = build(CatalogId::Field, &g, &t).unwrap();
        let pair = sign_pair();
        let out = contains_at_degree(&field, &pair, 1, &Limits::default()).unwrap();
        match out {
            Containment::SeparatedBy(f) => assert_eq!(f.to_string(), "x1_1 - x1_1*"),
            Containment::Contained => panic!("expected a separating polynomial"),
        }
    }

    #[test]
    fn graded_root_and_sign_pair_separate_both_ways() {
        let (g, t) = c2_context();
        let root = build(CatalogId::FcpTau { h: 1, p: 2 }, &g, &t).unwrap();
        let pair = build(CatalogId::Fc2StarG { s: 1 }, &g, &t).unwrap();
        let limits = Limits::default();
        match contains_at_degree(&root, &pair, 1, &limits).unwrap() {
            Containment::SeparatedBy(f) => assert_eq!(f.to_string(), "x1_g - x1_g*"),
            Containment::Contained => panic!("expected separation"),
        }
        match contains_at_degree(&pair, &root, 1, &limits).unwrap() {
            Containment::SeparatedBy(f) => assert_eq!(f.to_string(), "x1_g + x1_g*"),
            Containment::Contained => panic!("expected separation"),
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let a = reflection();
        let seq = Limits {
            sequential: true,
            ..Limits::default()
        };
        let par = Limits::default();
        for flavor in Flavor::ALL {
            assert_eq!(
                codimension(&a, 2, flavor, &seq).unwrap(),
                codimension(&a, 2, flavor, &par).unwrap()
            );
        }
        let (g, t) = c2_context();
        let pair = build(CatalogId::Fc2StarG { s: 1 }, &g, &t).unwrap();
        assert_eq!(
            contains_at_degree(&a, &pair, 2, &seq).unwrap(),
            contains_at_degree(&a, &pair, 2, &par).unwrap()
        );
    }

    #[test]
    fn the_global_matrix_rank_matches_the_blocked_sum() {
        let a = reflection();
        let limits = Limits::default();
        for flavor in Flavor::ALL {
            let rank = evaluation_matrix(&a, 2, flavor, &limits).unwrap().rank();
            assert_eq!(rank, codimension(&a, 2, flavor, &limits).unwrap(), "{flavor}");
        }
    }

    #[test]
    fn mismatched_contexts_are_refused() {
        let (g2, t2) = c2_context();
        let g3 = FiniteGroup::cyclic(3);
        let t3 = GroupInvolution::identity_map(&g3).unwrap();
        let a = build(CatalogId::Fc2Star, &g2, &t2).unwrap();
        let b = build(CatalogId::Fc2Star, &g3, &t3).unwrap();
        assert_eq!(
            contains_at_degree(&a, &b, 1, &Limits::default()).unwrap_err(),
            CodimError::MismatchedContext
        );
    }

    #[test]
    fn report_values_survive_scalar_extension() {
        let a = sign_pair();
        let wide = a.extend_scalars(4).unwrap();
        let limits = Limits::default();
        for n in 1..=2 {
            let before = codim_report(&a, n, &limits).unwrap();
            let after = codim_report(&wide, n, &limits).unwrap();
            assert_eq!(before, after);
        }
    }
}
