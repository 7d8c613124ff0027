//! The named small algebras whose presence in a variety forces exponential
//! codimension growth, the per-context exclusion list built from them, and
//! the normalization of homogeneous involutions on prime-order group
//! algebras to their catalog form.

use thiserror::Error;

use crate::algebra::{twisted_group_algebra, GradedStarAlgebra};
use crate::group::{is_prime, FiniteGroup, GroupInvolution};
use crate::matrix::ExactMatrix;
use crate::scalar::CycScalar;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid catalog parameters: {0}")]
    InvalidParameters(String),
    #[error("not an involution on the group algebra: {0}")]
    NotAnInvolution(String),
}

/// Identifier of a catalog member; element parameters are group indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CatalogId {
    /// Two-dimensional, trivially graded, star negating the order-two unit.
    Fc2Star,
    /// Same algebra graded by an order-two element s fixed by tau.
    Fc2StarG { s: usize },
    /// Group algebra of a prime-order cyclic subgroup, canonical grading,
    /// star permuting the group basis along tau.
    FcpTau { h: usize, p: usize },
    /// Four-dimensional reflection algebra with radical in degrees g, tau(g).
    MRhoTau { g: usize },
    /// The base field alone.
    Field,
}

impl std::fmt::Display for CatalogId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogId::Fc2Star => write!(f, "FC2_STAR"),
            CatalogId::Fc2StarG { s } => write!(f, "FC2_STAR_G(s={s})"),
            CatalogId::FcpTau { h, p } => write!(f, "FCP_TAU(h={h},p={p})"),
            CatalogId::MRhoTau { g } => write!(f, "M_RHO_TAU(g={g})"),
            CatalogId::Field => write!(f, "FIELD"),
        }
    }
}

/// Builds the catalog member over (group, tau). Group-algebra members carry
/// cyclotomic order p so later normalization arguments have the roots of
/// unity they need; everything else is rational.
pub fn build(
    id: CatalogId,
    group: &FiniteGroup,
    tau: &GroupInvolution,
) -> Result<GradedStarAlgebra, CatalogError> {
    match id {
        CatalogId::Field => {
            let mut products = BTreeMap::new();
            products.insert((0, 0), vec![(0, CycScalar::one())]);
            Ok(GradedStarAlgebra::new(
                group.clone(),
                tau.clone(),
                1,
                vec!["1".into()],
                vec![group.identity()],
                products,
                ExactMatrix::identity(1),
            ))
        }
        CatalogId::Fc2Star => Ok(sign_pair(group, tau, group.identity())),
        CatalogId::Fc2StarG { s } => {
            if group.element_order(s) != 2 {
                return Err(CatalogError::InvalidParameters(format!(
                    "element {s} must have order 2"
                )));
            }
            if tau.apply(s) != s {
                return Err(CatalogError::InvalidParameters(format!(
                    "element {s} must be fixed by tau"
                )));
            }
            Ok(sign_pair(group, tau, s))
        }
        CatalogId::FcpTau { h, p } => {
            if !is_prime(p) {
                return Err(CatalogError::InvalidParameters(format!("{p} is not prime")));
            }
            if group.element_order(h) != p {
                return Err(CatalogError::InvalidParameters(format!(
                    "element {h} has order {}, expected {p}",
                    group.element_order(h)
                )));
            }
            if tau.apply(h) != h && tau.apply(h) != group.inv(h) {
                return Err(CatalogError::InvalidParameters(format!(
                    "tau must fix or invert element {h}"
                )));
            }
            let subgroup = group.subgroup_generated(&[h]);
            // Q(zeta_2) = Q, so p = 2 stays at the rational order and the
            // member shares a scalar context with the rest of the catalog.
            let order = if p == 2 { 1 } else { p as u64 };
            twisted_group_algebra(
                group,
                tau,
                order,
                &subgroup,
                |_, _| CycScalar::one(),
                |_| CycScalar::one(),
            )
            .map_err(|e| CatalogError::InvalidParameters(e.to_string()))
        }
        CatalogId::MRhoTau { g } => {
            let one = CycScalar::one;
            let mut products = BTreeMap::new();
            products.insert((0, 0), vec![(0, one())]);
            products.insert((1, 1), vec![(1, one())]);
            products.insert((0, 2), vec![(2, one())]);
            products.insert((2, 1), vec![(2, one())]);
            products.insert((1, 3), vec![(3, one())]);
            products.insert((3, 0), vec![(3, one())]);
            let mut star = ExactMatrix::zero(4, 4);
            star.set(0, 0, one());
            star.set(1, 1, one());
            star.set(2, 3, one());
            star.set(3, 2, one());
            Ok(GradedStarAlgebra::new(
                group.clone(),
                tau.clone(),
                1,
                vec!["a".into(), "c".into(), "b".into(), "d".into()],
                vec![group.identity(), group.identity(), g, tau.apply(g)],
                products,
                star,
            ))
        }
    }
}

/// Basis {1, u} with u^2 = 1, deg u = s, star fixing 1 and negating u.
fn sign_pair(group: &FiniteGroup, tau: &GroupInvolution, s: usize) -> GradedStarAlgebra {
    let one = CycScalar::one;
    let mut products = BTreeMap::new();
    products.insert((0, 0), vec![(0, one())]);
    products.insert((0, 1), vec![(1, one())]);
    products.insert((1, 0), vec![(1, one())]);
    products.insert((1, 1), vec![(0, one())]);
    let mut star = ExactMatrix::identity(2);
    star.set(1, 1, CycScalar::from_integer(-1));
    GradedStarAlgebra::new(
        group.clone(),
        tau.clone(),
        1,
        vec!["1".into(), "u".into()],
        vec![group.identity(), s],
        products,
        star,
    )
}

/// Structural equality used to deduplicate the exclusion list: same degree
/// map, same products, same star matrix (labels and declared cyclotomic
/// order do not matter).
pub fn structurally_equal(a: &GradedStarAlgebra, b: &GradedStarAlgebra) -> bool {
    a.dim() == b.dim()
        && a.degrees() == b.degrees()
        && a.products() == b.products()
        && a.star_matrix() == b.star_matrix()
}

/// The full exclusion list for (group, tau): the trivially graded sign pair;
/// one reflection algebra per degree up to g = tau(g) identification; one
/// prime-order group algebra per prime-order cyclic subgroup compatible with
/// tau; and, when the group order is even, a sign pair in every tau-fixed
/// degree of order two.
pub fn iota_list(
    group: &FiniteGroup,
    tau: &GroupInvolution,
) -> Vec<(CatalogId, GradedStarAlgebra)> {
    let mut out = Vec::new();
    out.push((CatalogId::Fc2Star, build(CatalogId::Fc2Star, group, tau).unwrap()));
    for g in 0..group.order() {
        // M^g and M^{tau(g)} have the same support and star; keep the
        // smaller index.
        if g <= tau.apply(g) {
            let id = CatalogId::MRhoTau { g };
            out.push((id, build(id, group, tau).unwrap()));
        }
    }
    let mut seen_subgroups: BTreeSet<Vec<usize>> = BTreeSet::new();
    for h in 0..group.order() {
        let p = group.element_order(h);
        if !is_prime(p) {
            continue;
        }
        if tau.apply(h) != h && tau.apply(h) != group.inv(h) {
            continue;
        }
        let subgroup = group.subgroup_generated(&[h]);
        if !seen_subgroups.insert(subgroup) {
            continue;
        }
        let id = CatalogId::FcpTau { h, p };
        out.push((id, build(id, group, tau).unwrap()));
    }
    if group.order() % 2 == 0 {
        for s in 0..group.order() {
            if group.element_order(s) == 2 && tau.apply(s) == s {
                let id = CatalogId::Fc2StarG { s };
                out.push((id, build(id, group, tau).unwrap()));
            }
        }
    }
    debug_assert!(out
        .iter()
        .enumerate()
        .all(|(i, (_, a))| out[..i].iter().all(|(_, b)| !structurally_equal(a, b))));
    out
}

/// Canonical form of a homogeneous involution e_h -> alpha e_{h^i} on the
/// group algebra of the cyclic subgroup generated by h, together with the
/// diagonal change of basis carrying the catalog member onto the input:
/// basis vector e_{h^k} of the catalog maps to change[k] * e_{h^k}.
#[derive(Debug, Clone, PartialEq)]
pub struct FcpNormalization {
    pub id: CatalogId,
    pub change_of_basis: Vec<CycScalar>,
}

/// Decides which catalog member the involution e_h -> alpha e_{h^i} is
/// conjugate to. Requires i^2 = 1 mod p, alpha^p = 1, consistency with the
/// ambient tau, and (when the exponent preserves degrees and p is odd)
/// alpha = 1; everything else is rejected.
pub fn normalize_fcp_involution(
    group: &FiniteGroup,
    tau: &GroupInvolution,
    h: usize,
    exponent: i64,
    alpha: &CycScalar,
) -> Result<FcpNormalization, CatalogError> {
    let p = group.element_order(h);
    if !is_prime(p) {
        return Err(CatalogError::InvalidParameters(format!(
            "element {h} has non-prime order {p}"
        )));
    }
    let i = exponent.rem_euclid(p as i64) as usize;
    if (i * i) % p != 1 % p {
        return Err(CatalogError::NotAnInvolution(format!(
            "exponent {exponent} squared is not 1 modulo {p}"
        )));
    }
    let ap = alpha.pow(p as i64).expect("nonzero scalar");
    if !ap.is_one() {
        return Err(CatalogError::NotAnInvolution(format!(
            "scalar {alpha} is not a {p}-th root of unity"
        )));
    }
    let hi = group.pow(h, i);
    if tau.apply(h) != hi {
        return Err(CatalogError::NotAnInvolution(format!(
            "tau sends {h} to {}, but the star shifts its degree to {hi}",
            tau.apply(h)
        )));
    }
    let degree_preserving = hi == h;
    let dim = p;
    if p == 2 {
        // alpha is 1 or -1; -1 is the signed pair, +1 the group algebra.
        let id = if alpha.is_one() {
            CatalogId::FcpTau { h, p }
        } else {
            CatalogId::Fc2StarG { s: h }
        };
        return Ok(FcpNormalization { id, change_of_basis: vec![CycScalar::one(); dim] });
    }
    if degree_preserving {
        // (e_h)** = alpha^2 e_h forces alpha^2 = 1; odd p then forces 1.
        if !alpha.is_one() {
            return Err(CatalogError::NotAnInvolution(format!(
                "degree-preserving star on odd prime order needs scalar 1, got {alpha}"
            )));
        }
        return Ok(FcpNormalization {
            id: CatalogId::FcpTau { h, p },
            change_of_basis: vec![CycScalar::one(); dim],
        });
    }
    // Degree-inverting: pick beta with beta^p = 1 and beta^2 = alpha, namely
    // alpha^((p+1)/2); e_{h^k} -> beta^{-k} e_{h^k} carries the catalog star
    // e_{h^k} -> e_{h^{-k}} onto e_{h^k} -> alpha^k e_{h^{-k}}.
    let beta = alpha.pow(((p + 1) / 2) as i64).expect("nonzero scalar");
    debug_assert!(beta.mul(&beta) == *alpha);
    let change = (0..dim)
        .map(|k| beta.pow(-(k as i64)).expect("root of unity"))
        .collect();
    Ok(FcpNormalization { id: CatalogId::FcpTau { h, p }, change_of_basis: change })
}

/// The input algebra of the normalization problem: group algebra of the
/// subgroup generated by h, canonical grading, star e_{h^k} ->
/// alpha^k e_{h^{ik}}. Exposed so the normalization can be cross-checked.
pub fn fcp_with_star(
    group: &FiniteGroup,
    tau: &GroupInvolution,
    h: usize,
    exponent: i64,
    alpha: &CycScalar,
    cyclo_order: u64,
) -> GradedStarAlgebra {
    let p = group.element_order(h);
    let i = exponent.rem_euclid(p as i64) as usize;
    let members = group.subgroup_generated(&[h]);
    assert_eq!(members.len(), p, "subgroup must be generated by h");
    let position = |x: usize| members.binary_search(&x).expect("closure");
    let mut products = BTreeMap::new();
    for (a, &x) in members.iter().enumerate() {
        for (b, &y) in members.iter().enumerate() {
            products.insert((a, b), vec![(position(group.mul(x, y)), CycScalar::one())]);
        }
    }
    let mut star = ExactMatrix::zero(p, p);
    for k in 0..p {
        let from = position(group.pow(h, k));
        let to = position(group.pow(h, (i * k) % p));
        star.set(from, to, alpha.pow(k as i64).expect("nonzero"));
    }
    let labels = members
        .iter()
        .map(|&x| if x == group.identity() { "1".into() } else { format!("e{x}") })
        .collect();
    GradedStarAlgebra::new(
        group.clone(),
        tau.clone(),
        cyclo_order,
        labels,
        members,
        products,
        star,
    )
}
