//! Finite groups as explicit multiplication tables, order-reversing group
//! involutions, and the prime-order element search that powers witness
//! extraction for gradings with nontrivial support.
//!
//! Groups live at desk scale (order at most a dozen or so), so everything is
//! an index table: elements are `0..order`, products are table lookups, and
//! validation is exhaustive over all pairs and triples.

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    /// A failure of tau(tau(g)) = g is reported as the pair (g, g); a failure
    /// of tau(gh) = tau(h)tau(g) as the pair (g, h).
    #[error("not a group involution: axioms fail at pair ({g}, {h})")]
    NotAnInvolution { g: usize, h: usize },
    #[error("subgroup contains no nontrivial element")]
    TrivialSubgroup,
}

/// Finite group on indices `0..order` with an explicit product table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    identity: usize,
    /// Row-major: `table[a * order + b]` is the product ab.
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Cyclic group of order n; element k is the k-th power of the generator.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1, "cyclic group needs positive order");
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        FiniteGroup { order: n, identity: 0, table, inverse }
    }

    /// Validates a row-major product table: identity, two-sided inverses,
    /// associativity. Closure is implicit in the index representation.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup(format!("row {i} is not length {n}")));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(GroupError::NotAGroup(format!("entry {v} out of range in row {i}")));
            }
        }
        let table: Vec<usize> = rows.iter().flatten().copied().collect();
        let at = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| GroupError::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| {
                    GroupError::NotAGroup(format!("element {a} has no two-sided inverse"))
                })?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { order: n, identity, table, inverse })
    }

    /// Symmetric group on `n` letters, elements being the permutations of
    /// `0..n` in lexicographic order (so index 0 is the identity). Product
    /// p * q acts as "apply q, then p".
    pub fn symmetric(n: usize) -> FiniteGroup {
        assert!((1..=5).contains(&n), "symmetric group supported for 1 <= n <= 5");
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).expect("closure");
        let order = perms.len();
        let mut table = vec![0usize; order * order];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                table[i * order + j] = index_of(&composed);
            }
        }
        let inverse = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0usize; n];
                for (x, &px) in p.iter().enumerate() {
                    inv[px] = x;
                }
                index_of(&inv)
            })
            .collect();
        FiniteGroup { order, identity: 0, table, inverse }
    }

    /// Direct product with lexicographic indexing: (a, b) = a * |B| + b.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let n = a.order * b.order;
        let mut table = vec![0usize; n * n];
        for (x1, y1) in (0..a.order).cartesian_product(0..b.order) {
            for (x2, y2) in (0..a.order).cartesian_product(0..b.order) {
                let lhs = x1 * b.order + y1;
                let rhs = x2 * b.order + y2;
                table[lhs * n + rhs] = a.mul(x1, x2) * b.order + b.mul(y1, y2);
            }
        }
        let inverse = (0..a.order)
            .cartesian_product(0..b.order)
            .map(|(x, y)| a.inv(x) * b.order + b.inv(y))
            .collect();
        FiniteGroup {
            order: n,
            identity: a.identity * b.order + b.identity,
            table,
            inverse,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut acc = g;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |e, g| num_integer::lcm(e, self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order)
            .cartesian_product(0..self.order)
            .all(|(a, b)| self.mul(a, b) == self.mul(b, a))
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut members = std::collections::BTreeSet::new();
        members.insert(self.identity);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        members.into_iter().collect()
    }

    /// Row-major table rows, for serialization.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

/// Permutation tau of the group with tau(tau(g)) = g and
/// tau(gh) = tau(h) tau(g); the degree bookkeeping for homogeneous
/// involutions on graded algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInvolution {
    map: Vec<usize>,
}

impl GroupInvolution {
    /// Validates both involution axioms on all pairs.
    pub fn validate(group: &FiniteGroup, map: Vec<usize>) -> Result<GroupInvolution, GroupError> {
        let n = group.order();
        if map.len() != n {
            return Err(GroupError::NotAGroup(format!(
                "involution map has length {}, group has order {n}",
                map.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(GroupError::NotAGroup("involution map is not a permutation".into()));
            }
            seen[v] = true;
        }
        for g in 0..n {
            if map[map[g]] != g {
                return Err(GroupError::NotAnInvolution { g, h: g });
            }
        }
        for g in 0..n {
            for h in 0..n {
                if map[group.mul(g, h)] != group.mul(map[h], map[g]) {
                    return Err(GroupError::NotAnInvolution { g, h });
                }
            }
        }
        Ok(GroupInvolution { map })
    }

    /// The identity map; a valid involution exactly on abelian groups.
    pub fn identity_map(group: &FiniteGroup) -> Result<GroupInvolution, GroupError> {
        GroupInvolution::validate(group, (0..group.order()).collect())
    }

    /// g maps to its inverse; valid on every group.
    pub fn inversion(group: &FiniteGroup) -> GroupInvolution {
        let map = (0..group.order()).map(|g| group.inv(g)).collect();
        GroupInvolution { map }
    }

    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_degree_preserving(&self) -> bool {
        self.map.iter().enumerate().all(|(g, &tg)| g == tg)
    }
}

/// All group involutions of `group`, by brute force over permutations fixing
/// the identity. Intended for small groups only.
pub fn enumerate_involutions(group: &FiniteGroup) -> Vec<GroupInvolution> {
    let n = group.order();
    let others: Vec<usize> = (0..n).filter(|&g| g != group.identity()).collect();
    let mut found = Vec::new();
    for perm in others.iter().copied().permutations(others.len()) {
        let mut map = vec![0usize; n];
        map[group.identity()] = group.identity();
        for (&from, &to) in others.iter().zip(perm.iter()) {
            map[from] = to;
        }
        if let Ok(tau) = GroupInvolution::validate(group, map) {
            found.push(tau);
        }
    }
    found
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeKind {
    TauFixed,
    TauInverting,
}

/// Element of prime order compatible with tau: tau(g) is g (TauFixed) or
/// g^{-1} (TauInverting, only reported when those differ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeElement {
    pub element: usize,
    pub prime: usize,
    pub kind: PrimeKind,
}

pub(crate) fn smallest_prime_factor(n: usize) -> usize {
    assert!(n >= 2);
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 1;
    }
    n
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && smallest_prime_factor(n) == n
}

/// Finds g in the subgroup of prime order p with tau(g) in {g, g^{-1}}.
///
/// Nontrivial elements h are scanned in index order. When h tau(h) = 1 the
/// candidate is a prime-order power of h itself (tau then inverts it); when
/// h tau(h) is nontrivial it is tau-fixed and a prime-order power of it is
/// taken instead. Among all candidates the smallest prime wins, ties going
/// to the earliest scan position.
pub fn find_prime_element(
    group: &FiniteGroup,
    tau: &GroupInvolution,
    subgroup: &[usize],
) -> Result<PrimeElement, GroupError> {
    let mut members: Vec<usize> = subgroup.to_vec();
    members.sort_unstable();
    members.dedup();
    for &a in &members {
        assert!(
            members.binary_search(&tau.apply(a)).is_ok(),
            "subgroup is not closed under tau"
        );
        for &b in &members {
            assert!(
                members.binary_search(&group.mul(a, b)).is_ok(),
                "element set is not closed under the product"
            );
        }
    }
    let mut best: Option<PrimeElement> = None;
    for &h in members.iter().filter(|&&h| h != group.identity()) {
        let ht = group.mul(h, tau.apply(h));
        // ht = 1 forces tau(h) = h^{-1}, so powers of h stay tau-compatible;
        // otherwise ht is a nontrivial tau-fixed element.
        let x = if ht == group.identity() { h } else { ht };
        let n = group.element_order(x);
        let p = smallest_prime_factor(n);
        let g = group.pow(x, n / p);
        let kind = if tau.apply(g) == g { PrimeKind::TauFixed } else { PrimeKind::TauInverting };
        debug_assert!(g != group.identity());
        debug_assert_eq!(group.pow(g, p), group.identity());
        debug_assert!(tau.apply(g) == g || tau.apply(g) == group.inv(g));
        if best.is_none_or(|b| p < b.prime) {
            best = Some(PrimeElement { element: g, prime: p, kind });
        }
    }
    best.ok_or(GroupError::TrivialSubgroup)
}
