//! Jacobson radical, its powers, the semisimple quotient, idempotent
//! splitting and lifting, and the predicate profile that drives the growth
//! classifier.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::{lcm, Roots};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::{el_add, el_is_zero, el_scale, el_sub, Element, GradedStarAlgebra, QuotientMap};
use crate::matrix::{ExactMatrix, RowSpace};
use crate::scalar::CycScalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("semisimple part does not split into one-dimensional pieces over the declared cyclotomic order; retry after extending scalars to order {suggested}")]
    NonSplit { suggested: u64 },
}

/// Radical chain data plus the predicates on the semisimple part that decide
/// growth: trivial support, trivial star action, and off-diagonal radical
/// products falling into the radical square.
#[derive(Debug, Clone)]
pub struct WMProfile {
    pub radical_basis: Vec<Element>,
    /// Smallest s with J^s = 0; 1 when the algebra is semisimple.
    pub nilpotency_index: usize,
    pub ss_dim: usize,
    pub ss_commutative: bool,
    /// Every nonidentity-degree basis vector dies in the quotient by J.
    pub ss_support_trivial: bool,
    /// Star fixes the identity-degree part of the quotient by J pointwise.
    pub ss_star_trivial: bool,
    pub offdiag_in_jsq: bool,
    /// Number of primitive idempotents of the semisimple quotient, when it
    /// is commutative and splits over the declared cyclotomic order.
    pub primitive_idempotents: Option<usize>,
}

/// Nullspace of the trace form of the regular representation; valid in
/// characteristic zero. The result is checked to be a graded, star-stable,
/// two-sided ideal.
pub fn jacobson_radical(a: &GradedStarAlgebra) -> Vec<Element> {
    let d = a.dim();
    let traces: Vec<CycScalar> = (0..d)
        .map(|k| a.left_mul_matrix(&a.basis_element(k)).trace())
        .collect();
    // tr(L_x L_y) = tr(L_{xy}), so the Gram entry is a structure-constant
    // combination of basis traces.
    let mut gram = ExactMatrix::zero(d, d);
    for (&(i, j), terms) in a.products() {
        let mut s = CycScalar::zero();
        for (l, c) in terms {
            s = s.add(&c.mul(&traces[*l]));
        }
        gram.set(i, j, s);
    }
    let radical = gram.nullspace();
    let mut span = RowSpace::new(d);
    for v in &radical {
        span.insert(v);
    }
    for v in &radical {
        for g in a.degree_support(v) {
            assert!(span.contains(&a.component(v, g)), "radical must be graded");
        }
        assert!(span.contains(&a.star(v)), "radical must be star-stable");
        for i in 0..d {
            let b = a.basis_element(i);
            assert!(
                span.contains(&a.mul(&b, v)) && span.contains(&a.mul(v, &b)),
                "radical must be a two-sided ideal"
            );
        }
    }
    radical
}

/// Bases of J, J^2, ... down to the last nonzero power, and the first
/// exponent s with J^s = 0.
pub fn radical_powers(
    a: &GradedStarAlgebra,
    radical: &[Element],
) -> (Vec<Vec<Element>>, usize) {
    let mut chain: Vec<Vec<Element>> = Vec::new();
    if radical.is_empty() {
        return (chain, 1);
    }
    chain.push(radical.to_vec());
    loop {
        let prev = chain.last().unwrap();
        let mut next = RowSpace::new(a.dim());
        for u in prev {
            for v in radical {
                next.insert(&a.mul(u, v));
            }
        }
        if next.dim() == 0 {
            break;
        }
        assert!(next.dim() < prev.len(), "radical powers must strictly decrease");
        chain.push(next.basis().to_vec());
        assert!(chain.len() <= a.dim(), "radical must be nilpotent");
    }
    let s = chain.len() + 1;
    (chain, s)
}

/// The quotient by the radical, with the projection map attached.
pub fn semisimple_quotient(a: &GradedStarAlgebra) -> (GradedStarAlgebra, QuotientMap) {
    let radical = jacobson_radical(a);
    a.quotient_by_ideal(&radical)
        .expect("radical is a graded star-stable ideal")
}

pub fn wm_profile(a: &GradedStarAlgebra) -> WMProfile {
    let radical = jacobson_radical(a);
    let (chain, s) = radical_powers(a, &radical);
    let mut jspan = RowSpace::new(a.dim());
    for v in &radical {
        jspan.insert(v);
    }
    let mut j2span = RowSpace::new(a.dim());
    if let Some(second) = chain.get(1) {
        for v in second {
            j2span.insert(v);
        }
    }
    let identity = a.group().identity();
    let commutators_fall_into = |space: &RowSpace| {
        (0..a.dim()).all(|i| {
            (0..i).all(|j| {
                let bi = a.basis_element(i);
                let bj = a.basis_element(j);
                space.contains(&el_sub(&a.mul(&bi, &bj), &a.mul(&bj, &bi)))
            })
        })
    };
    let ss_commutative = commutators_fall_into(&jspan);
    let offdiag_in_jsq = commutators_fall_into(&j2span);
    let ss_support_trivial = (0..a.dim()).all(|i| {
        a.degree_of_basis(i) == identity || jspan.contains(&a.basis_element(i))
    });
    // Star triviality is judged on the identity-degree part only; outside
    // it a nontrivial support already decides the classification.
    let ss_star_trivial = (0..a.dim()).all(|i| {
        if a.degree_of_basis(i) != identity {
            return true;
        }
        let b = a.basis_element(i);
        jspan.contains(&el_sub(&a.star(&b), &b))
    });
    let primitive_idempotents = if ss_commutative {
        let (quotient, _) = semisimple_quotient(a);
        split_idempotents(&quotient).ok().map(|es| es.len())
    } else {
        None
    };
    WMProfile {
        nilpotency_index: s,
        ss_dim: a.dim() - jspan.dim(),
        radical_basis: radical,
        ss_commutative,
        ss_support_trivial,
        ss_star_trivial,
        offdiag_in_jsq,
        primitive_idempotents,
    }
}

/// Primitive orthogonal idempotents of a commutative semisimple algebra,
/// summing to the unity, each spanning a one-dimensional corner. Splitting
/// happens by probing multiplication-operator eigenvalues of the form
/// rational times a declared root of unity; when no probe splits a corner of
/// dimension two or more, NonSplit suggests a larger cyclotomic order.
pub fn split_idempotents(s: &GradedStarAlgebra) -> Result<Vec<Element>, StructureError> {
    if s.dim() == 0 {
        return Ok(Vec::new());
    }
    let unity = s.unity().expect("semisimple algebra has a unity");
    let mut finished: Vec<Element> = Vec::new();
    let mut stack = vec![unity.clone()];
    while let Some(e) = stack.pop() {
        let mut corner = RowSpace::new(s.dim());
        for i in 0..s.dim() {
            corner.insert(&s.mul(&e, &s.mul(&s.basis_element(i), &e)));
        }
        debug_assert!(corner.contains(&e));
        let dc = corner.dim();
        if dc <= 1 {
            finished.push(e);
            continue;
        }
        let mut scalar_line = RowSpace::new(s.dim());
        scalar_line.insert(&e);
        let mut kernel: Option<Vec<Element>> = None;
        'probe: for i in 0..s.dim() {
            let x = s.mul(&e, &s.mul(&s.basis_element(i), &e));
            if scalar_line.contains(&x) {
                continue;
            }
            let mat = corner_action(s, &corner, &x);
            for lambda in field_eigenvalue_candidates(&char_poly(&mat), s.cyclo_order()) {
                let mut shifted = mat.clone();
                for r in 0..dc {
                    shifted.set(r, r, shifted.get(r, r).sub(&lambda));
                }
                let null = shifted.nullspace();
                if !null.is_empty() && null.len() < dc {
                    let basis = null
                        .iter()
                        .map(|coords| combine(s, &corner, coords))
                        .collect();
                    kernel = Some(basis);
                    break 'probe;
                }
            }
        }
        let Some(kernel) = kernel else {
            let suggested = lcm(s.cyclo_order(), s.group().exponent() as u64);
            return Err(StructureError::NonSplit { suggested });
        };
        let u = ideal_unity(s, &kernel);
        let v = el_sub(&e, &u);
        assert!(s.mul(&u, &u) == u && s.mul(&v, &v) == v, "split pieces are idempotent");
        assert!(el_is_zero(&s.mul(&u, &v)), "split pieces are orthogonal");
        assert!(!el_is_zero(&u) && !el_is_zero(&v));
        stack.push(v);
        stack.push(u);
    }
    let mut total = s.zero_element();
    for e in &finished {
        total = el_add(&total, e);
    }
    assert!(el_is_zero(&el_sub(&total, &unity)), "idempotents sum to the unity");
    finished.sort_by_key(|e| e.iter().map(|c| format!("{c}")).collect::<Vec<_>>());
    Ok(finished)
}

/// Orthogonal idempotents of A reducing to the given quotient idempotents.
/// A star-fixed quotient idempotent lifts to a star-fixed element; a
/// homogeneous identity-degree one stays homogeneous of identity degree.
pub fn lift_idempotents(
    a: &GradedStarAlgebra,
    map: &QuotientMap,
    quotient_idempotents: &[Element],
) -> Vec<Element> {
    let half = CycScalar::ratio(1, 2);
    let three = CycScalar::from_integer(3);
    let two = CycScalar::from_integer(2);
    let mut lifted: Vec<Element> = Vec::new();
    let mut fsum = a.zero_element();
    for ebar in quotient_idempotents {
        let mut x = map.section(ebar);
        if map.project(&a.star(&x)) == *ebar {
            x = el_scale(&half, &el_add(&x, &a.star(&x)));
        }
        // Push into the corner orthogonal to everything lifted so far.
        let fx = a.mul(&fsum, &x);
        let xf = a.mul(&x, &fsum);
        let fxf = a.mul(&fsum, &xf);
        x = el_add(&el_sub(&el_sub(&x, &fx), &xf), &fxf);
        let mut steps = 0;
        while !el_is_zero(&el_sub(&a.mul(&x, &x), &x)) {
            let x2 = a.mul(&x, &x);
            let x3 = a.mul(&x2, &x);
            x = el_sub(&el_scale(&three, &x2), &el_scale(&two, &x3));
            steps += 1;
            assert!(steps <= 64, "idempotent lifting must converge");
        }
        assert!(
            el_is_zero(&a.mul(&fsum, &x)) && el_is_zero(&a.mul(&x, &fsum)),
            "lifted idempotents must stay orthogonal"
        );
        assert_eq!(map.project(&x), *ebar, "lift must reduce to its input");
        fsum = el_add(&fsum, &x);
        lifted.push(x);
    }
    lifted
}

/// Matrix of left multiplication by x on the corner, in corner coordinates.
fn corner_action(s: &GradedStarAlgebra, corner: &RowSpace, x: &Element) -> ExactMatrix {
    let cols: Vec<Vec<CycScalar>> = corner
        .basis()
        .iter()
        .map(|c| {
            corner
                .coords(&s.mul(x, &c.to_vec()))
                .expect("corner is closed under multiplication")
        })
        .collect();
    ExactMatrix::from_columns(cols)
}

fn combine(s: &GradedStarAlgebra, corner: &RowSpace, coords: &[CycScalar]) -> Element {
    let mut out = s.zero_element();
    for (c, row) in coords.iter().zip(corner.basis()) {
        out = el_add(&out, &el_scale(c, &row.to_vec()));
    }
    out
}

/// The element of the ideal spanned by `basis` acting as its unity.
fn ideal_unity(s: &GradedStarAlgebra, basis: &[Element]) -> Element {
    let r = basis.len();
    let mut rows: Vec<Vec<CycScalar>> = Vec::new();
    let mut rhs: Vec<CycScalar> = Vec::new();
    for w in basis {
        let images: Vec<Element> = basis.iter().map(|b| s.mul(b, w)).collect();
        for c in 0..s.dim() {
            rows.push((0..r).map(|l| images[l][c].clone()).collect());
            rhs.push(w[c].clone());
        }
    }
    let coords = ExactMatrix::from_rows(rows)
        .solve(&rhs)
        .expect("semisimple ideal has a unity");
    combine_plain(s, basis, &coords)
}

fn combine_plain(s: &GradedStarAlgebra, basis: &[Element], coords: &[CycScalar]) -> Element {
    let mut out = s.zero_element();
    for (c, b) in coords.iter().zip(basis) {
        out = el_add(&out, &el_scale(c, b));
    }
    out
}

/// Monic characteristic polynomial, ascending coefficients.
fn char_poly(mat: &ExactMatrix) -> Vec<CycScalar> {
    let n = mat.rows();
    let mut coeffs = vec![CycScalar::zero(); n + 1];
    coeffs[n] = CycScalar::one();
    let mut aux = mat.clone();
    for k in 1..=n {
        let c = aux
            .trace()
            .scale(&BigRational::new(BigInt::from(-1), BigInt::from(k as i64)));
        coeffs[n - k] = c.clone();
        if k == n {
            break;
        }
        for i in 0..n {
            let cur = aux.get(i, i).add(&c);
            aux.set(i, i, cur);
        }
        aux = mat.matmul(&aux);
    }
    coeffs
}

/// Eigenvalue candidates of the form q * zeta^j lying in Q(zeta_order),
/// verified against the characteristic polynomial; deterministic order.
fn field_eigenvalue_candidates(poly: &[CycScalar], order: u64) -> Vec<CycScalar> {
    let mut found: Vec<CycScalar> = Vec::new();
    for j in 0..order.max(1) {
        let zj = CycScalar::root_of_unity(order, j as i64);
        let shifted: Vec<CycScalar> = poly
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul(&zj.pow(i as i64).expect("root of unity")))
            .collect();
        for q in rational_root_candidates(&shifted) {
            let lambda = zj.scale(&q);
            if eval_poly(poly, &lambda).is_zero() && !found.contains(&lambda) {
                found.push(lambda);
            }
        }
    }
    found
}

fn eval_poly(poly: &[CycScalar], at: &CycScalar) -> CycScalar {
    let mut acc = CycScalar::zero();
    for c in poly.iter().rev() {
        acc = acc.mul(at).add(c);
    }
    acc
}

/// Rational root candidates of a polynomial with cyclotomic coefficients:
/// a rational root is a root of every coordinate polynomial, so candidates
/// come from the first nonzero coordinate row.
fn rational_root_candidates(poly: &[CycScalar]) -> Vec<BigRational> {
    let order = poly.iter().fold(1u64, |acc, c| lcm(acc, c.order()));
    let lifted: Vec<Vec<BigRational>> =
        poly.iter().map(|c| c.lift_to(order).coeffs().to_vec()).collect();
    let width = lifted.first().map_or(0, |v| v.len());
    for r in 0..width {
        let row: Vec<BigRational> = lifted.iter().map(|v| v[r].clone()).collect();
        if row.iter().all(|q| q.is_zero()) {
            continue;
        }
        let den = row
            .iter()
            .fold(BigInt::from(1), |acc, q| lcm(acc, q.denom().clone()));
        let scale = BigRational::from_integer(den);
        let ints: Vec<BigInt> = row.iter().map(|q| (q * &scale).to_integer()).collect();
        let lo = ints.iter().position(|v| !v.is_zero()).unwrap();
        let hi = ints.iter().rposition(|v| !v.is_zero()).unwrap();
        let mut out: BTreeSet<BigRational> = BTreeSet::new();
        if lo > 0 {
            out.insert(BigRational::zero());
        }
        if hi > lo {
            for p in positive_divisors(&ints[lo]) {
                for q in positive_divisors(&ints[hi]) {
                    let candidate = BigRational::new(p.clone(), q.clone());
                    out.insert(-&candidate);
                    out.insert(candidate);
                }
            }
        }
        return out.into_iter().collect();
    }
    Vec::new()
}

/// Positive divisors of |n|; complete when |n| fits comfortably, otherwise a
/// deterministic partial list (small divisors, their complements, |n|).
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let abs = n.abs();
    let mut out: BTreeSet<BigInt> = BTreeSet::new();
    if let Some(v) = abs.to_u64() {
        let bound = v.sqrt().min(1_000_000);
        for d in 1..=bound {
            if v % d == 0 {
                out.insert(BigInt::from(d));
                out.insert(BigInt::from(v / d));
            }
        }
    } else {
        for d in 1u64..=10_000 {
            let big = BigInt::from(d);
            if (&abs % &big).is_zero() {
                out.insert(big.clone());
                out.insert(&abs / &big);
            }
        }
        out.insert(abs);
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, fcp_with_star, CatalogId};
    use crate::group::{FiniteGroup, GroupInvolution};
    use std::collections::BTreeMap;

    fn trivial_context() -> (FiniteGroup, GroupInvolution) {
        let g = FiniteGroup::cyclic(1);
        let t = GroupInvolution::identity_map(&g).unwrap();
        (g, t)
    }

    fn c2_id() -> (FiniteGroup, GroupInvolution) {
        let g = FiniteGroup::cyclic(2);
        let t = GroupInvolution::identity_map(&g).unwrap();
        (g, t)
    }

    /// span{1, j} with j^2 = 0, trivial grading and star.
    fn dual_numbers() -> GradedStarAlgebra {
        let (g, t) = trivial_context();
        let one = CycScalar::one;
        let mut products = BTreeMap::new();
        products.insert((0, 0), vec![(0, one())]);
        products.insert((0, 1), vec![(1, one())]);
        products.insert((1, 0), vec![(1, one())]);
        GradedStarAlgebra::new(
            g,
            t,
            1,
            vec!["1".into(), "j".into()],
            vec![0, 0],
            products,
            ExactMatrix::identity(2),
        )
    }

    /// span{j, j^2} with j^3 = 0.
    fn nilpotent_chain() -> GradedStarAlgebra {
        let (g, t) = trivial_context();
        let mut products = BTreeMap::new();
        products.insert((0, 0), vec![(1, CycScalar::one())]);
        GradedStarAlgebra::new(
            g,
            t,
            1,
            vec!["j".into(), "jj".into()],
            vec![0, 0],
            products,
            ExactMatrix::identity(2),
        )
    }

    /// span{p, n}: p^2 = p + n, pn = np = n, n^2 = 0. The unity is p - n,
    /// the radical is span{n}, and the section of the quotient idempotent is
    /// not idempotent, so lifting has to iterate.
    fn crooked_line() -> GradedStarAlgebra {
        let (g, t) = trivial_context();
        let one = CycScalar::one;
        let mut products = BTreeMap::new();
        products.insert((0, 0), vec![(0, one()), (1, one())]);
        products.insert((0, 1), vec![(1, one())]);
        products.insert((1, 0), vec![(1, one())]);
        GradedStarAlgebra::new(
            g,
            t,
            1,
            vec!["p".into(), "n".into()],
            vec![0, 0],
            products,
            ExactMatrix::identity(2),
        )
    }

    fn reflection() -> GradedStarAlgebra {
        let (g, t) = c2_id();
        build(CatalogId::MRhoTau { g: 1 }, &g, &t).unwrap()
    }

    #[test]
    fn radical_of_reflection_is_the_nilpotent_part() {
        let m = reflection();
        let rad = jacobson_radical(&m);
        let mut span = RowSpace::new(4);
        for v in &rad {
            span.insert(v);
        }
        assert_eq!(span.dim(), 2);
        assert!(span.contains(&m.basis_element(2)));
        assert!(span.contains(&m.basis_element(3)));
        let (chain, s) = radical_powers(&m, &rad);
        assert_eq!(s, 2);
        assert_eq!(chain.len(), 1);
    }

    #[test]
    fn group_algebra_is_semisimple() {
        let c3 = FiniteGroup::cyclic(3);
        let t = GroupInvolution::identity_map(&c3).unwrap();
        let a = build(CatalogId::FcpTau { h: 1, p: 3 }, &c3, &t).unwrap();
        let rad = jacobson_radical(&a);
        assert!(rad.is_empty());
        assert_eq!(radical_powers(&a, &rad).1, 1);
    }

    #[test]
    fn nilpotent_chains_have_the_right_index() {
        let d = dual_numbers();
        let rad = jacobson_radical(&d);
        assert_eq!(rad.len(), 1);
        assert!(el_is_zero(&el_sub(&rad[0], &d.basis_element(1))));
        assert_eq!(radical_powers(&d, &rad).1, 2);

        let n = nilpotent_chain();
        let rad = jacobson_radical(&n);
        assert_eq!(rad.len(), 2);
        let (chain, s) = radical_powers(&n, &rad);
        assert_eq!(s, 3);
        assert_eq!(chain[1].len(), 1);
    }

    #[test]
    fn semisimple_quotient_has_zero_radical() {
        for a in [reflection(), dual_numbers(), crooked_line(), nilpotent_chain()] {
            let (q, _) = semisimple_quotient(&a);
            assert!(q.validate().ok());
            assert!(jacobson_radical(&q).is_empty());
        }
    }

    #[test]
    fn quotient_of_reflection_is_two_diagonal_lines() {
        let m = reflection();
        let (q, map) = semisimple_quotient(&m);
        assert_eq!(q.dim(), 2);
        assert_eq!(map.complement(), &[0, 1]);
        let e0 = q.basis_element(0);
        let e1 = q.basis_element(1);
        assert_eq!(q.mul(&e0, &e0), e0);
        assert_eq!(q.mul(&e1, &e1), e1);
        assert!(el_is_zero(&q.mul(&e0, &e1)));
        assert_eq!(q.star(&e0), e0);
    }

    #[test]
    fn radical_of_direct_sum_splits_by_block() {
        let m = reflection();
        let (c2, t) = c2_id();
        let mut products = BTreeMap::new();
        products.insert((0, 0), vec![(0, CycScalar::one())]);
        products.insert((0, 1), vec![(1, CycScalar::one())]);
        products.insert((1, 0), vec![(1, CycScalar::one())]);
        let d = GradedStarAlgebra::new(
            c2,
            t,
            1,
            vec!["1".into(), "j".into()],
            vec![0, 0],
            products,
            ExactMatrix::identity(2),
        );
        let sum = m.direct_sum(&d).unwrap();
        let rad = jacobson_radical(&sum);
        assert_eq!(rad.len(), 3);
        for v in &rad {
            let support: Vec<usize> =
                (0..6).filter(|&i| !v[i].is_zero()).collect();
            assert!(
                support.iter().all(|&i| i < 4) || support.iter().all(|&i| i >= 4),
                "radical vector must stay inside one summand"
            );
        }
    }

    #[test]
    fn profile_of_the_reflection_algebra() {
        let p = wm_profile(&reflection());
        assert_eq!(p.nilpotency_index, 2);
        assert_eq!(p.ss_dim, 2);
        assert!(p.ss_commutative);
        assert!(p.ss_support_trivial);
        assert!(p.ss_star_trivial);
        assert!(!p.offdiag_in_jsq);
        assert_eq!(p.primitive_idempotents, Some(2));
    }

    #[test]
    fn profile_of_the_sign_pair() {
        let (c2, t) = c2_id();
        let a = build(CatalogId::Fc2Star, &c2, &t).unwrap();
        let p = wm_profile(&a);
        assert_eq!(p.nilpotency_index, 1);
        assert!(p.ss_commutative);
        assert!(p.ss_support_trivial);
        assert!(!p.ss_star_trivial);
        assert!(p.offdiag_in_jsq);
        assert_eq!(p.primitive_idempotents, Some(2));
    }

    #[test]
    fn profile_of_a_graded_group_algebra() {
        let c3 = FiniteGroup::cyclic(3);
        let t = GroupInvolution::identity_map(&c3).unwrap();
        let a = build(CatalogId::FcpTau { h: 1, p: 3 }, &c3, &t).unwrap();
        let p = wm_profile(&a);
        assert!(!p.ss_support_trivial);
        assert!(p.ss_star_trivial);
        assert_eq!(p.primitive_idempotents, Some(3));
    }

    #[test]
    fn split_field_pair() {
        let (c1, t) = trivial_context();
        let f = build(CatalogId::Field, &c1, &t).unwrap();
        let sum = f.direct_sum(&f).unwrap();
        let es = split_idempotents(&sum).unwrap();
        assert_eq!(es.len(), 2);
        assert!(es.contains(&sum.basis_element(0)));
        assert!(es.contains(&sum.basis_element(1)));
    }

    #[test]
    fn split_order_two_group_algebra_over_the_rationals() {
        let (c2, t) = c2_id();
        let a = fcp_with_star(&c2, &t, 1, 1, &CycScalar::one(), 1);
        let es = split_idempotents(&a).unwrap();
        assert_eq!(es.len(), 2);
        let half = CycScalar::ratio(1, 2);
        let plus = vec![half.clone(), half.clone()];
        let minus = vec![half.clone(), half.neg()];
        assert!(es.contains(&plus) && es.contains(&minus));
        for e in &es {
            assert_eq!(a.mul(e, e), *e);
        }
        assert!(el_is_zero(&a.mul(&es[0], &es[1])));
    }

    #[test]
    fn split_order_three_needs_a_larger_field() {
        let c3 = FiniteGroup::cyclic(3);
        let t = GroupInvolution::identity_map(&c3).unwrap();
        let over_q = fcp_with_star(&c3, &t, 1, 1, &CycScalar::one(), 1);
        assert_eq!(
            split_idempotents(&over_q),
            Err(StructureError::NonSplit { suggested: 3 })
        );
        let over_q3 = over_q.extend_scalars(3).unwrap();
        let es = split_idempotents(&over_q3).unwrap();
        assert_eq!(es.len(), 3);
        let third = CycScalar::ratio(1, 3);
        let omega = CycScalar::root_of_unity(3, 1);
        for i in 0..3i64 {
            let w = omega.pow(-i).unwrap();
            let expected = vec![
                third.clone(),
                third.mul(&w),
                third.mul(&w.mul(&w)),
            ];
            assert!(es.contains(&expected), "missing character idempotent {i}");
        }
        let mut sum = over_q3.zero_element();
        for e in &es {
            assert_eq!(over_q3.mul(e, e), *e);
            sum = el_add(&sum, e);
        }
        assert_eq!(Some(sum), over_q3.unity());
    }

    #[test]
    fn lift_recovers_the_reflection_corners() {
        let m = reflection();
        let (q, map) = semisimple_quotient(&m);
        let es = split_idempotents(&q).unwrap();
        let lifted = lift_idempotents(&m, &map, &es);
        assert_eq!(lifted.len(), 2);
        assert!(lifted.contains(&m.basis_element(0)));
        assert!(lifted.contains(&m.basis_element(1)));
    }

    #[test]
    fn lift_iterates_when_the_section_is_not_idempotent() {
        let a = crooked_line();
        let (q, map) = semisimple_quotient(&a);
        assert_eq!(q.dim(), 1);
        let es = split_idempotents(&q).unwrap();
        let lifted = lift_idempotents(&a, &map, &es);
        // p - n is the unity, the only idempotent lifting the quotient one.
        let expected = el_sub(&a.basis_element(0), &a.basis_element(1));
        assert_eq!(lifted, vec![expected.clone()]);
        assert_eq!(Some(expected), a.unity());
    }

    #[test]
    fn lifted_idempotents_can_stay_star_fixed_and_homogeneous() {
        let m = reflection();
        let (q, map) = semisimple_quotient(&m);
        let es = split_idempotents(&q).unwrap();
        for e in lift_idempotents(&m, &map, &es) {
            assert_eq!(m.star(&e), e);
            assert_eq!(m.homogeneous_degree(&e), Some(m.group().identity()));
        }
    }
}
