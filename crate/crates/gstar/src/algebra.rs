//! The central value of the crate: a finite-dimensional graded algebra with
//! an F-linear homogeneous involution, given entirely by structure constants
//! over Q(zeta_m).
//!
//! The basis is required homogeneous (every basis vector has one degree), so
//! grading checks are pure index bookkeeping. The involution is a matrix on
//! that basis, not a permutation, so signed and twisted stars are expressible.
//! Validation is exhaustive: associativity on all triples, grading on all
//! products, star squared, the anti-automorphism law, and degree shift by tau.
//!
//! Elements are plain coordinate vectors (`Element`). All constructions here
//! return new immutable values; zero-dimensional algebras are legal
//! degenerate cases and every operation tolerates them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::group::{FiniteGroup, GroupInvolution};
use crate::matrix::{ExactMatrix, RowSpace};
use crate::scalar::CycScalar;

/// Coordinate vector with respect to the algebra's basis.
pub type Element = Vec<CycScalar>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("algebras live over different (group, tau, cyclotomic order) contexts")]
    MismatchedContext,
    #[error("generator {0} is not homogeneous")]
    NonHomogeneousGenerator(usize),
    #[error("span is not a two-sided ideal: product with spanning vector {0} escapes")]
    NotAnIdeal(usize),
    #[error("span is not star-stable")]
    NotStarStable,
    #[error("span is not graded: a degree component of spanning vector {0} escapes")]
    NotGraded(usize),
    #[error("cocycle identity fails at elements ({0}, {1}, {2})")]
    NotACocycle(usize, usize, usize),
    #[error("requested star violates the involution axioms")]
    StarAxiomFailure,
    #[error("cyclotomic order {target} is not a multiple of {current}")]
    BadOrder { current: u64, target: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Associativity,
    Grading,
    StarInvolutive,
    StarAntiAutomorphism,
    StarHomogeneity,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Axiom::Associativity => "associativity",
            Axiom::Grading => "grading",
            Axiom::StarInvolutive => "star_involutive",
            Axiom::StarAntiAutomorphism => "star_anti_automorphism",
            Axiom::StarHomogeneity => "star_homogeneity",
        };
        f.write_str(name)
    }
}

/// One failed axiom with the basis indices that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Finite-dimensional G-graded algebra with homogeneous involution, as
/// structure constants b_i b_j = sum_k c_ijk b_k over Q(zeta_m).
#[derive(Debug, Clone, PartialEq)]
pub struct GradedStarAlgebra {
    group: FiniteGroup,
    tau: GroupInvolution,
    cyclo_order: u64,
    basis_labels: Vec<String>,
    degree: Vec<usize>,
    /// Sparse products; entries sorted by output index, zero-free.
    products: BTreeMap<(usize, usize), Vec<(usize, CycScalar)>>,
    /// Row i is the image of b_i: star(b_i) = sum_j S(i, j) b_j.
    star: ExactMatrix,
}

impl GradedStarAlgebra {
    pub fn new(
        group: FiniteGroup,
        tau: GroupInvolution,
        cyclo_order: u64,
        basis_labels: Vec<String>,
        degree: Vec<usize>,
        products: BTreeMap<(usize, usize), Vec<(usize, CycScalar)>>,
        star: ExactMatrix,
    ) -> GradedStarAlgebra {
        let dim = basis_labels.len();
        assert_eq!(degree.len(), dim, "degree map length must match basis size");
        assert!(degree.iter().all(|&g| g < group.order()), "degree out of group range");
        assert_eq!(star.rows(), dim, "star matrix must be dim x dim");
        assert_eq!(star.cols(), dim, "star matrix must be dim x dim");
        assert!(
            cyclo_order % star.order() == 0,
            "star entries must live in the declared cyclotomic field"
        );
        let mut canonical = BTreeMap::new();
        for ((i, j), terms) in products {
            assert!(i < dim && j < dim, "product index out of range");
            let mut merged: BTreeMap<usize, CycScalar> = BTreeMap::new();
            for (k, c) in terms {
                assert!(k < dim, "product output index out of range");
                assert!(
                    cyclo_order % c.order() == 0,
                    "structure constant outside the declared cyclotomic field"
                );
                let slot = merged.entry(k).or_insert_with(CycScalar::zero);
                *slot = slot.add(&c);
            }
            let cleaned: Vec<(usize, CycScalar)> = merged
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.lift_to(cyclo_order)))
                .collect();
            if !cleaned.is_empty() {
                canonical.insert((i, j), cleaned);
            }
        }
        let mut lifted_star = ExactMatrix::zero(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                lifted_star.set(i, j, star.get(i, j).lift_to(cyclo_order));
            }
        }
        GradedStarAlgebra {
            group,
            tau,
            cyclo_order,
            basis_labels,
            degree,
            products: canonical,
            star: lifted_star,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn tau(&self) -> &GroupInvolution {
        &self.tau
    }

    pub fn cyclo_order(&self) -> u64 {
        self.cyclo_order
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis_labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn degree_of_basis(&self, i: usize) -> usize {
        self.degree[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn star_matrix(&self) -> &ExactMatrix {
        &self.star
    }

    pub fn products(&self) -> &BTreeMap<(usize, usize), Vec<(usize, CycScalar)>> {
        &self.products
    }

    /// Degrees with a nonzero homogeneous component.
    pub fn support(&self) -> BTreeSet<usize> {
        self.degree.iter().copied().collect()
    }

    pub fn same_context(&self, other: &GradedStarAlgebra) -> bool {
        self.group == other.group
            && self.tau == other.tau
            && self.cyclo_order == other.cyclo_order
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> GradedStarAlgebra {
        assert_eq!(labels.len(), self.dim());
        self.basis_labels = labels;
        self
    }

    pub fn zero_element(&self) -> Element {
        vec![CycScalar::zero(); self.dim()]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut v = self.zero_element();
        v[i] = CycScalar::one();
        v
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = self.zero_element();
        for (&(i, j), terms) in &self.products {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            let f = x[i].mul(&y[j]);
            for (k, c) in terms {
                out[*k] = out[*k].add(&f.mul(c));
            }
        }
        out
    }

    pub fn star(&self, x: &Element) -> Element {
        let mut out = self.zero_element();
        for i in 0..self.dim() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                let s = self.star.get(i, j);
                if !s.is_zero() {
                    out[j] = out[j].add(&x[i].mul(s));
                }
            }
        }
        out
    }

    /// Projection onto the degree-g coordinates.
    pub fn component(&self, x: &Element, g: usize) -> Element {
        let mut out = self.zero_element();
        for i in 0..self.dim() {
            if self.degree[i] == g {
                out[i] = x[i].clone();
            }
        }
        out
    }

    /// Degrees carrying a nonzero coordinate of x.
    pub fn degree_support(&self, x: &Element) -> BTreeSet<usize> {
        (0..self.dim())
            .filter(|&i| !x[i].is_zero())
            .map(|i| self.degree[i])
            .collect()
    }

    /// The degree of a nonzero homogeneous element; None for zero or mixed.
    pub fn homogeneous_degree(&self, x: &Element) -> Option<usize> {
        let degs = self.degree_support(x);
        if degs.len() == 1 {
            degs.into_iter().next()
        } else {
            None
        }
    }

    /// Matrix of left multiplication by x: column j holds the coordinates
    /// of x * b_j.
    pub fn left_mul_matrix(&self, x: &Element) -> ExactMatrix {
        let d = self.dim();
        let cols = (0..d).map(|j| self.mul(x, &self.basis_element(j))).collect();
        let m = ExactMatrix::from_columns(cols);
        debug_assert_eq!((m.rows(), m.cols()), (d, d));
        m
    }

    /// The two-sided unity, when one exists. Solved exactly from the linear
    /// system e * b_j = b_j = b_j * e.
    pub fn unity(&self) -> Option<Element> {
        let d = self.dim();
        if d == 0 {
            return None;
        }
        let mut rows: Vec<Vec<CycScalar>> = Vec::new();
        let mut rhs: Vec<CycScalar> = Vec::new();
        for j in 0..d {
            // x * b_j = b_j, coordinate k: sum_i c_ijk x_i = delta_jk.
            for k in 0..d {
                let mut row = vec![CycScalar::zero(); d];
                for i in 0..d {
                    if let Some(terms) = self.products.get(&(i, j)) {
                        if let Some((_, c)) = terms.iter().find(|(out, _)| *out == k) {
                            row[i] = c.clone();
                        }
                    }
                }
                rows.push(row);
                rhs.push(if j == k { CycScalar::one() } else { CycScalar::zero() });
            }
            // b_j * x = b_j, coordinate k: sum_i c_jik x_i = delta_jk.
            for k in 0..d {
                let mut row = vec![CycScalar::zero(); d];
                for i in 0..d {
                    if let Some(terms) = self.products.get(&(j, i)) {
                        if let Some((_, c)) = terms.iter().find(|(out, _)| *out == k) {
                            row[i] = c.clone();
                        }
                    }
                }
                rows.push(row);
                rhs.push(if j == k { CycScalar::one() } else { CycScalar::zero() });
            }
        }
        ExactMatrix::from_rows(rows).solve(&rhs)
    }

    /// Human-readable form of an element in the basis labels.
    pub fn format_element(&self, x: &Element) -> String {
        let mut parts: Vec<String> = Vec::new();
        for i in 0..self.dim() {
            if x[i].is_zero() {
                continue;
            }
            let c = &x[i];
            let label = &self.basis_labels[i];
            let piece = if c.is_one() {
                label.clone()
            } else if c.neg().is_one() {
                format!("-{label}")
            } else {
                let lit = c.to_string();
                if lit.contains(' ') {
                    format!("({lit})*{label}")
                } else {
                    format!("{lit}*{label}")
                }
            };
            parts.push(piece);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            let mut out = parts[0].clone();
            for p in &parts[1..] {
                if let Some(rest) = p.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(rest);
                } else {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
            out
        }
    }

    /// Exhaustive axiom check; the report lists every violated axiom with a
    /// witnessing index tuple.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut violations = Vec::new();
        for ((i, j), terms) in &self.products {
            let target = self.group.mul(self.degree[*i], self.degree[*j]);
            for (k, _) in terms {
                if self.degree[*k] != target {
                    violations.push(Violation { axiom: Axiom::Grading, witness: vec![*i, *j, *k] });
                }
            }
        }
        'assoc: for i in 0..d {
            let bi = self.basis_element(i);
            for j in 0..d {
                let bj = self.basis_element(j);
                let ij = self.mul(&bi, &bj);
                for k in 0..d {
                    let bk = self.basis_element(k);
                    let left = self.mul(&ij, &bk);
                    let right = self.mul(&bi, &self.mul(&bj, &bk));
                    if left != right {
                        violations.push(Violation {
                            axiom: Axiom::Associativity,
                            witness: vec![i, j, k],
                        });
                        // One witness suffices; the full triple scan is cubic.
                        break 'assoc;
                    }
                }
            }
        }
        for i in 0..d {
            let twice = self.star(&self.star(&self.basis_element(i)));
            if twice != self.basis_element(i) {
                violations.push(Violation { axiom: Axiom::StarInvolutive, witness: vec![i] });
            }
        }
        for i in 0..d {
            let bi = self.basis_element(i);
            for j in 0..d {
                let bj = self.basis_element(j);
                let lhs = self.star(&self.mul(&bi, &bj));
                let rhs = self.mul(&self.star(&bj), &self.star(&bi));
                if lhs != rhs {
                    violations.push(Violation {
                        axiom: Axiom::StarAntiAutomorphism,
                        witness: vec![i, j],
                    });
                }
            }
        }
        for i in 0..d {
            let expected = self.tau.apply(self.degree[i]);
            for j in 0..d {
                if !self.star.get(i, j).is_zero() && self.degree[j] != expected {
                    violations.push(Violation {
                        axiom: Axiom::StarHomogeneity,
                        witness: vec![i, j],
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    /// Componentwise sum; both sides must share the full context.
    pub fn direct_sum(&self, other: &GradedStarAlgebra) -> Result<GradedStarAlgebra, AlgebraError> {
        if !self.same_context(other) {
            return Err(AlgebraError::MismatchedContext);
        }
        let da = self.dim();
        let db = other.dim();
        let mut labels = self.basis_labels.clone();
        for l in &other.basis_labels {
            let mut candidate = l.clone();
            while labels.contains(&candidate) {
                candidate.push('\'');
            }
            labels.push(candidate);
        }
        let mut degree = self.degree.clone();
        degree.extend_from_slice(&other.degree);
        let mut products = self.products.clone();
        for ((i, j), terms) in &other.products {
            products.insert(
                (da + i, da + j),
                terms.iter().map(|(k, c)| (da + k, c.clone())).collect(),
            );
        }
        let mut star = ExactMatrix::zero(da + db, da + db);
        for i in 0..da {
            for j in 0..da {
                star.set(i, j, self.star.get(i, j).clone());
            }
        }
        for i in 0..db {
            for j in 0..db {
                star.set(da + i, da + j, other.star.get(i, j).clone());
            }
        }
        Ok(GradedStarAlgebra::new(
            self.group.clone(),
            self.tau.clone(),
            self.cyclo_order,
            labels,
            degree,
            products,
            star,
        ))
    }

    /// B + B with the opposite product on the second copy and the exchange
    /// involution (a, b)* = (b, a); degrees on the second copy are shifted
    /// by tau. The star of the input is ignored: the construction supplies
    /// its own.
    pub fn exchange_double(&self) -> GradedStarAlgebra {
        let d = self.dim();
        let mut labels: Vec<String> = self.basis_labels.iter().map(|l| format!("{l}.l")).collect();
        labels.extend(self.basis_labels.iter().map(|l| format!("{l}.r")));
        let mut degree = self.degree.clone();
        degree.extend(self.degree.iter().map(|&g| self.tau.apply(g)));
        let mut products = BTreeMap::new();
        for ((i, j), terms) in &self.products {
            products.insert((*i, *j), terms.clone());
        }
        // Second copy multiplies opposite: (0, b_i)(0, b_j) = (0, b_j b_i).
        for i in 0..d {
            for j in 0..d {
                if let Some(terms) = self.products.get(&(j, i)) {
                    products.insert(
                        (d + i, d + j),
                        terms.iter().map(|(k, c)| (d + k, c.clone())).collect(),
                    );
                }
            }
        }
        let mut star = ExactMatrix::zero(2 * d, 2 * d);
        for i in 0..d {
            star.set(i, d + i, CycScalar::one());
            star.set(d + i, i, CycScalar::one());
        }
        GradedStarAlgebra::new(
            self.group.clone(),
            self.tau.clone(),
            self.cyclo_order,
            labels,
            degree,
            products,
            star,
        )
    }

    /// Closure of homogeneous generators under products, star, and span,
    /// returned with the inclusion images of the new basis.
    pub fn subalgebra_generated(
        &self,
        gens: &[Element],
    ) -> Result<(GradedStarAlgebra, Vec<Element>), AlgebraError> {
        for (idx, g) in gens.iter().enumerate() {
            if self.degree_support(g).len() > 1 {
                return Err(AlgebraError::NonHomogeneousGenerator(idx));
            }
        }
        let mut space = RowSpace::new(self.dim());
        let mut reps: Vec<Element> = Vec::new();
        let mut queue: VecDeque<Element> = gens.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            if !space.insert(&v) {
                continue;
            }
            queue.push_back(self.star(&v));
            queue.push_back(self.mul(&v, &v));
            for w in &reps {
                queue.push_back(self.mul(&v, w));
                queue.push_back(self.mul(w, &v));
            }
            reps.push(v);
        }
        let labels = reps
            .iter()
            .enumerate()
            .map(|(idx, r)| {
                let nonzero: Vec<usize> = (0..self.dim()).filter(|&i| !r[i].is_zero()).collect();
                match nonzero.as_slice() {
                    [single] if r[*single].is_one() => self.basis_labels[*single].clone(),
                    _ => format!("s{idx}"),
                }
            })
            .collect();
        let degree = reps
            .iter()
            .map(|r| {
                self.homogeneous_degree(r)
                    .expect("closure of homogeneous elements stays homogeneous")
            })
            .collect();
        let coords = ExactMatrix::from_columns(reps.clone());
        let express = |v: &Element| {
            coords
                .solve(v)
                .expect("closure is multiplicatively and star closed")
        };
        let mut products = BTreeMap::new();
        for (i, x) in reps.iter().enumerate() {
            for (j, y) in reps.iter().enumerate() {
                let prod = express(&self.mul(x, y));
                let terms: Vec<(usize, CycScalar)> = prod
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    products.insert((i, j), terms);
                }
            }
        }
        let star_rows: Vec<Vec<CycScalar>> =
            reps.iter().map(|x| express(&self.star(x))).collect();
        let sub = GradedStarAlgebra::new(
            self.group.clone(),
            self.tau.clone(),
            self.cyclo_order,
            labels,
            degree,
            products,
            ExactMatrix::from_rows(star_rows),
        );
        debug_assert!(sub.validate().ok());
        Ok((sub, reps))
    }

    /// Quotient by a graded star-stable two-sided ideal, with the projection
    /// and a linear section attached.
    pub fn quotient_by_ideal(
        &self,
        ideal: &[Element],
    ) -> Result<(GradedStarAlgebra, QuotientMap), AlgebraError> {
        let mut span = RowSpace::new(self.dim());
        for v in ideal {
            span.insert(v);
        }
        for (idx, v) in ideal.iter().enumerate() {
            for j in 0..self.dim() {
                let bj = self.basis_element(j);
                if !span.contains(&self.mul(&bj, v)) || !span.contains(&self.mul(v, &bj)) {
                    return Err(AlgebraError::NotAnIdeal(idx));
                }
            }
        }
        for v in ideal {
            if !span.contains(&self.star(v)) {
                return Err(AlgebraError::NotStarStable);
            }
        }
        for (idx, v) in ideal.iter().enumerate() {
            for &g in &self.degree_support(v) {
                if !span.contains(&self.component(v, g)) {
                    return Err(AlgebraError::NotGraded(idx));
                }
            }
        }
        // Rebuild from homogeneous components so the echelon rows are
        // homogeneous and reduction preserves homogeneity.
        let mut homog = RowSpace::new(self.dim());
        for v in ideal {
            for &g in &self.degree_support(v) {
                homog.insert(&self.component(v, g));
            }
        }
        debug_assert_eq!(homog.dim(), span.dim());
        let pivot_set: BTreeSet<usize> = homog.pivots().iter().copied().collect();
        let complement: Vec<usize> =
            (0..self.dim()).filter(|i| !pivot_set.contains(i)).collect();
        let map = QuotientMap { ideal_space: homog, complement, ambient_dim: self.dim() };
        let labels = map.complement.iter().map(|&i| self.basis_labels[i].clone()).collect();
        let degree = map.complement.iter().map(|&i| self.degree[i]).collect();
        let mut products = BTreeMap::new();
        for (qi, &i) in map.complement.iter().enumerate() {
            for (qj, &j) in map.complement.iter().enumerate() {
                let prod = map.project(&self.mul(&self.basis_element(i), &self.basis_element(j)));
                let terms: Vec<(usize, CycScalar)> = prod
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    products.insert((qi, qj), terms);
                }
            }
        }
        let star_rows: Vec<Vec<CycScalar>> = map
            .complement
            .iter()
            .map(|&i| map.project(&self.star(&self.basis_element(i))))
            .collect();
        let star = if star_rows.is_empty() {
            ExactMatrix::zero(0, 0)
        } else {
            ExactMatrix::from_rows(star_rows)
        };
        let quotient = GradedStarAlgebra::new(
            self.group.clone(),
            self.tau.clone(),
            self.cyclo_order,
            labels,
            degree,
            products,
            star,
        );
        debug_assert!(quotient.validate().ok());
        Ok((quotient, map))
    }

    /// Same structure constants over the larger field Q(zeta_target).
    pub fn extend_scalars(&self, target: u64) -> Result<GradedStarAlgebra, AlgebraError> {
        if target == 0 || target % self.cyclo_order != 0 {
            return Err(AlgebraError::BadOrder { current: self.cyclo_order, target });
        }
        let mut out = self.clone();
        out.cyclo_order = target;
        for terms in out.products.values_mut() {
            for (_, c) in terms.iter_mut() {
                *c = c.lift_to(target);
            }
        }
        let d = self.dim();
        let mut star = ExactMatrix::zero(d, d);
        for i in 0..d {
            for j in 0..d {
                star.set(i, j, self.star.get(i, j).lift_to(target));
            }
        }
        out.star = star;
        Ok(out)
    }
}

/// Projection onto a complement of basis coordinates modulo an ideal, plus
/// the section picking the complement representative.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    ideal_space: RowSpace,
    complement: Vec<usize>,
    ambient_dim: usize,
}

impl QuotientMap {
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// Coordinates of v + I in the quotient basis.
    pub fn project(&self, v: &Element) -> Element {
        let reduced = self.ideal_space.reduce(v);
        self.complement.iter().map(|&i| reduced[i].clone()).collect()
    }

    /// The canonical representative of a quotient element.
    pub fn section(&self, w: &Element) -> Element {
        assert_eq!(w.len(), self.complement.len());
        let mut v = vec![CycScalar::zero(); self.ambient_dim];
        for (c, &i) in w.iter().zip(self.complement.iter()) {
            v[i] = c.clone();
        }
        v
    }
}

/// Element sum, defined coordinatewise.
pub fn el_add(x: &Element, y: &Element) -> Element {
    x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
}

pub fn el_sub(x: &Element, y: &Element) -> Element {
    x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
}

pub fn el_scale(c: &CycScalar, x: &Element) -> Element {
    x.iter().map(|a| c.mul(a)).collect()
}

pub fn el_is_zero(x: &Element) -> bool {
    x.iter().all(|c| c.is_zero())
}

/// Twisted group algebra F^sigma[H] inside the (G, tau) context: basis e_h
/// for h in the subgroup, products e_a e_b = sigma(a, b) e_ab, degree of e_h
/// equal to h, and star e_h = star_root(h) e_tau(h).
pub fn twisted_group_algebra(
    group: &FiniteGroup,
    tau: &GroupInvolution,
    cyclo_order: u64,
    subgroup: &[usize],
    sigma: impl Fn(usize, usize) -> CycScalar,
    star_root: impl Fn(usize) -> CycScalar,
) -> Result<GradedStarAlgebra, AlgebraError> {
    let mut members: Vec<usize> = subgroup.to_vec();
    members.sort_unstable();
    members.dedup();
    let position = |h: usize| members.binary_search(&h);
    for &a in &members {
        for &b in &members {
            assert!(
                position(group.mul(a, b)).is_ok(),
                "element set is not closed under the product"
            );
        }
    }
    if members.iter().any(|&h| position(tau.apply(h)).is_err()) {
        return Err(AlgebraError::StarAxiomFailure);
    }
    for &a in &members {
        for &b in &members {
            for &c in &members {
                let lhs = sigma(a, b).mul(&sigma(group.mul(a, b), c));
                let rhs = sigma(b, c).mul(&sigma(a, group.mul(b, c)));
                if lhs != rhs {
                    return Err(AlgebraError::NotACocycle(a, b, c));
                }
            }
        }
    }
    let dim = members.len();
    let labels = members
        .iter()
        .map(|&h| if h == group.identity() { "1".to_string() } else { format!("e{h}") })
        .collect();
    let mut products = BTreeMap::new();
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            let s = sigma(a, b);
            assert!(s.is_root_of_unity(), "cocycle values must be roots of unity");
            let k = position(group.mul(a, b)).unwrap();
            products.insert((i, j), vec![(k, s)]);
        }
    }
    let mut star = ExactMatrix::zero(dim, dim);
    for (i, &h) in members.iter().enumerate() {
        let j = position(tau.apply(h)).unwrap();
        let r = star_root(h);
        assert!(r.is_root_of_unity(), "star coefficients must be roots of unity");
        star.set(i, j, r);
    }
    let algebra = GradedStarAlgebra::new(
        group.clone(),
        tau.clone(),
        cyclo_order,
        labels,
        members.clone(),
        products,
        star,
    );
    if !algebra.validate().ok() {
        return Err(AlgebraError::StarAxiomFailure);
    }
    Ok(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> CycScalar {
        CycScalar::one()
    }

    /// The four-dimensional algebra with basis a, c, b, d, products a^2 = a,
    /// c^2 = c, ab = b, bc = b, cd = d, da = d, reflection star a <-> a,
    /// c <-> c, b <-> d, graded by deg b = g, deg d = tau(g).
    fn reflection_algebra(
        group: &FiniteGroup,
        tau: &GroupInvolution,
        g: usize,
    ) -> GradedStarAlgebra {
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
        GradedStarAlgebra::new(
            group.clone(),
            tau.clone(),
            1,
            vec!["a".into(), "c".into(), "b".into(), "d".into()],
            vec![group.identity(), group.identity(), g, tau.apply(g)],
            products,
            star,
        )
    }

    fn field_algebra(group: &FiniteGroup, tau: &GroupInvolution) -> GradedStarAlgebra {
        let mut products = BTreeMap::new();
        products.insert((0, 0), vec![(0, one())]);
        GradedStarAlgebra::new(
            group.clone(),
            tau.clone(),
            1,
            vec!["1".into()],
            vec![group.identity()],
            products,
            ExactMatrix::identity(1),
        )
    }

    #[test]
    fn reflection_algebra_validates() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let m = reflection_algebra(&c2, &tau, 1);
        let report = m.validate();
        assert!(report.ok(), "violations: {:?}", report.violations);
        assert_eq!(m.support().len(), 2);
    }

    #[test]
    fn broken_star_is_flagged() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let mut m = reflection_algebra(&c2, &tau, 1);
        // Overwrite the star to fix b and d pointwise: the anti-automorphism
        // law now fails on (a, b) since (ab)* = b but b*a* = 0.
        let mut star = ExactMatrix::identity(4);
        star.set(2, 2, one());
        star.set(3, 3, one());
        m.star = star;
        let report = m.validate();
        assert!(!report.ok());
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::StarAntiAutomorphism));
    }

    #[test]
    fn wrong_degree_product_is_flagged() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let mut m = reflection_algebra(&c2, &tau, 1);
        // deg(a) deg(a) = 1 but b has degree g.
        m.products.insert((0, 0), vec![(2, one())]);
        let report = m.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::Grading && v.witness == vec![0, 0, 2]));
    }

    #[test]
    fn direct_sum_of_fields() {
        let c1 = FiniteGroup::cyclic(1);
        let tau = GroupInvolution::identity_map(&c1).unwrap();
        let f = field_algebra(&c1, &tau);
        let ff = f.direct_sum(&f).unwrap();
        assert_eq!(ff.dim(), 2);
        assert!(ff.validate().ok());
        let e1 = ff.basis_element(0);
        let e2 = ff.basis_element(1);
        assert_eq!(ff.mul(&e1, &e1), e1);
        assert!(el_is_zero(&ff.mul(&e1, &e2)));
        assert_eq!(ff.labels(), &["1".to_string(), "1'".to_string()]);
        assert_eq!(ff.unity().unwrap(), el_add(&e1, &e2));
    }

    #[test]
    fn mismatched_context_is_rejected() {
        let c1 = FiniteGroup::cyclic(1);
        let c2 = FiniteGroup::cyclic(2);
        let t1 = GroupInvolution::identity_map(&c1).unwrap();
        let t2 = GroupInvolution::identity_map(&c2).unwrap();
        let a = field_algebra(&c1, &t1);
        let b = field_algebra(&c2, &t2);
        assert_eq!(a.direct_sum(&b).unwrap_err(), AlgebraError::MismatchedContext);
    }

    #[test]
    fn exchange_double_swaps_idempotents() {
        let c1 = FiniteGroup::cyclic(1);
        let tau = GroupInvolution::identity_map(&c1).unwrap();
        let d = field_algebra(&c1, &tau).exchange_double();
        assert_eq!(d.dim(), 2);
        assert!(d.validate().ok());
        let e1 = d.basis_element(0);
        let e2 = d.basis_element(1);
        assert_eq!(d.star(&e1), e2);
        assert_eq!(d.star(&e2), e1);
        assert!(el_is_zero(&d.mul(&e1, &e2)));
    }

    #[test]
    fn exchange_double_of_noncommutative_base() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let m = reflection_algebra(&c2, &tau, 1);
        let d = m.exchange_double();
        assert_eq!(d.dim(), 8);
        assert!(d.validate().ok());
        // Right copy multiplies opposite: (0,a)(0,b) = (0, ba) = 0 while
        // (0,b)(0,a) = (0, ab) = (0, b).
        let a_r = d.basis_element(4);
        let b_r = d.basis_element(6);
        assert!(el_is_zero(&d.mul(&a_r, &b_r)));
        assert_eq!(d.mul(&b_r, &a_r), b_r);
    }

    #[test]
    fn twisted_group_algebra_signs() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        // FC2 with u* = -u, trivial G-degrees would need the trivial group;
        // here degrees are canonical and the star negates the generator.
        let a = twisted_group_algebra(
            &c2,
            &tau,
            1,
            &[0, 1],
            |_, _| CycScalar::one(),
            |h| if h == 0 { CycScalar::one() } else { CycScalar::from_integer(-1) },
        )
        .unwrap();
        assert!(a.validate().ok());
        let u = a.basis_element(1);
        assert_eq!(a.star(&u), el_scale(&CycScalar::from_integer(-1), &u));
        assert_eq!(a.mul(&u, &u), a.basis_element(0));
    }

    #[test]
    fn twisted_group_algebra_rejects_bad_cocycle() {
        let c3 = FiniteGroup::cyclic(3);
        let tau = GroupInvolution::inversion(&c3);
        let err = twisted_group_algebra(
            &c3,
            &tau,
            3,
            &[0, 1, 2],
            // Not a cocycle: flips sign on one pair only.
            |a, b| {
                if (a, b) == (1, 1) {
                    CycScalar::from_integer(-1)
                } else {
                    CycScalar::one()
                }
            },
            |_| CycScalar::one(),
        )
        .unwrap_err();
        assert!(matches!(err, AlgebraError::NotACocycle(..)));
    }

    #[test]
    fn subalgebra_of_group_algebra() {
        let c4 = FiniteGroup::cyclic(4);
        let tau = GroupInvolution::inversion(&c4);
        let fc4 = twisted_group_algebra(
            &c4,
            &tau,
            1,
            &[0, 1, 2, 3],
            |_, _| CycScalar::one(),
            |_| CycScalar::one(),
        )
        .unwrap();
        let (sub, reps) = fc4.subalgebra_generated(&[fc4.basis_element(2)]).unwrap();
        assert_eq!(sub.dim(), 2);
        assert_eq!(reps.len(), 2);
        assert_eq!(sub.support().into_iter().collect::<Vec<_>>(), vec![0, 2]);
        // Regenerating from the returned basis is a fixed point.
        let (again, _) = fc4.subalgebra_generated(&reps).unwrap();
        assert_eq!(again, sub);
    }

    #[test]
    fn subalgebra_rejects_mixed_generator() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let m = reflection_algebra(&c2, &tau, 1);
        let mixed = el_add(&m.basis_element(0), &m.basis_element(2));
        assert_eq!(
            m.subalgebra_generated(&[mixed]).unwrap_err(),
            AlgebraError::NonHomogeneousGenerator(0)
        );
    }

    #[test]
    fn full_generating_set_recovers_everything() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let m = reflection_algebra(&c2, &tau, 1);
        let gens: Vec<Element> = (0..4).map(|i| m.basis_element(i)).collect();
        let (sub, _) = m.subalgebra_generated(&gens).unwrap();
        assert_eq!(sub.dim(), 4);
    }

    #[test]
    fn quotient_by_radical_of_reflection_algebra() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let m = reflection_algebra(&c2, &tau, 1);
        let ideal = vec![m.basis_element(2), m.basis_element(3)];
        let (q, map) = m.quotient_by_ideal(&ideal).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.validate().ok());
        assert_eq!(map.project(&m.basis_element(2)), q.zero_element());
        let pa = map.project(&m.basis_element(0));
        assert_eq!(q.mul(&pa, &pa), pa);
        assert_eq!(q.star(&pa), pa);
        // Projection is an algebra map on a sample pair.
        let x = el_add(&m.basis_element(0), &m.basis_element(2));
        let y = m.basis_element(1);
        assert_eq!(
            map.project(&m.mul(&x, &y)),
            q.mul(&map.project(&x), &map.project(&y))
        );
    }

    #[test]
    fn quotient_by_everything_is_zero_dimensional() {
        let c1 = FiniteGroup::cyclic(1);
        let tau = GroupInvolution::identity_map(&c1).unwrap();
        let f = field_algebra(&c1, &tau);
        let (q, _) = f.quotient_by_ideal(&[f.basis_element(0)]).unwrap();
        assert_eq!(q.dim(), 0);
        assert!(q.validate().ok());
        assert!(q.unity().is_none());
    }

    #[test]
    fn quotient_rejects_non_star_stable_span() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let m = reflection_algebra(&c2, &tau, 1);
        // span{b} is a two-sided ideal but b* = d escapes it.
        assert_eq!(
            m.quotient_by_ideal(&[m.basis_element(2)]).unwrap_err(),
            AlgebraError::NotStarStable
        );
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let m = reflection_algebra(&c2, &tau, 1);
        // span{a} is not an ideal: ab = b escapes.
        assert_eq!(
            m.quotient_by_ideal(&[m.basis_element(0)]).unwrap_err(),
            AlgebraError::NotAnIdeal(0)
        );
    }

    #[test]
    fn extend_scalars_preserves_products() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let m = reflection_algebra(&c2, &tau, 1);
        let ext = m.extend_scalars(4).unwrap();
        assert_eq!(ext.cyclo_order(), 4);
        assert!(ext.validate().ok());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(
                    ext.mul(&ext.basis_element(i), &ext.basis_element(j)),
                    m.mul(&m.basis_element(i), &m.basis_element(j))
                );
            }
        }
        assert_eq!(
            ext.extend_scalars(6).unwrap_err(),
            AlgebraError::BadOrder { current: 4, target: 6 }
        );
    }

    #[test]
    fn unity_of_reflection_algebra() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let m = reflection_algebra(&c2, &tau, 1);
        let e = m.unity().unwrap();
        assert_eq!(e, el_add(&m.basis_element(0), &m.basis_element(1)));
        // A nilpotent algebra has none.
        let mut products = BTreeMap::new();
        products.insert((0, 0), vec![(1, one())]);
        let nil = GradedStarAlgebra::new(
            c2.clone(),
            tau.clone(),
            1,
            vec!["j".into(), "j2".into()],
            vec![0, 0],
            products,
            ExactMatrix::identity(2),
        );
        assert!(nil.validate().ok());
        assert!(nil.unity().is_none());
    }

    #[test]
    fn format_element_styles() {
        let c2 = FiniteGroup::cyclic(2);
        let tau = GroupInvolution::identity_map(&c2).unwrap();
        let m = reflection_algebra(&c2, &tau, 1);
        let x = el_add(
            &m.basis_element(0),
            &el_scale(&CycScalar::ratio(-1, 2), &m.basis_element(2)),
        );
        assert_eq!(m.format_element(&x), "a - 1/2*b");
        assert_eq!(m.format_element(&m.zero_element()), "0");
    }
}
