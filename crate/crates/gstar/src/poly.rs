//! Polynomials in the free graded algebra with involution: a small text
//! syntax, canonical term lists, evaluation in a concrete algebra,
//! multilinearization, and the identity test.
//!
//! Syntax: terms joined by + and -, each term an optional coefficient
//! (a rational like 2/3, or any scalar literal in parentheses) followed by
//! juxtaposed factors. A factor is a variable `x<k>_<degree>` with optional
//! trailing `*`, a parenthesized expression, or a commutator bracket
//! `[f, g]`; factors take an optional positive power `^n`. Degree names:
//! `1` for the group identity, `g` for element 1, `gK` for element K.

use std::collections::BTreeMap;

use itertools::Itertools;
use thiserror::Error;

use crate::algebra::{el_add, el_is_zero, el_scale, Element, GradedStarAlgebra};
use crate::scalar::{parse_scalar, CycScalar};

#[derive(Debug, Error, PartialEq)]
pub enum PolyError {
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown degree name {name:?} at position {pos}")]
    UnknownDegreeName { pos: usize, name: String },
    #[error("variable x{var} was not assigned an element of its declared degree")]
    DegreeMismatch { var: usize },
    #[error("polynomial degree names do not fit the algebra's group")]
    ContextMismatch,
}

/// One variable occurrence: index, declared degree, star flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Letter {
    pub var: usize,
    pub degree: usize,
    pub star: bool,
}

impl std::fmt::Display for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "x{}_", self.var)?;
        if self.degree == 0 {
            write!(f, "1")?;
        } else if self.degree == 1 {
            write!(f, "g")?;
        } else {
            write!(f, "g{}", self.degree)?;
        }
        if self.star {
            write!(f, "*")?;
        }
        Ok(())
    }
}

/// Canonical term list: words sorted, coefficients nonzero, no duplicates.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GStarPolynomial {
    terms: Vec<(CycScalar, Vec<Letter>)>,
}

impl GStarPolynomial {
    pub fn zero() -> Self {
        GStarPolynomial { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<(CycScalar, Vec<Letter>)>) -> Self {
        let mut sorted: BTreeMap<Vec<Letter>, CycScalar> = BTreeMap::new();
        for (c, word) in terms {
            let entry = sorted.entry(word).or_insert_with(CycScalar::zero);
            *entry = entry.add(&c);
        }
        GStarPolynomial {
            terms: sorted
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (c, w))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(CycScalar, Vec<Letter>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &GStarPolynomial) -> GStarPolynomial {
        let mut all = self.terms.clone();
        all.extend(rhs.terms.iter().cloned());
        GStarPolynomial::from_terms(all)
    }

    pub fn neg(&self) -> GStarPolynomial {
        GStarPolynomial {
            terms: self.terms.iter().map(|(c, w)| (c.neg(), w.clone())).collect(),
        }
    }

    pub fn sub(&self, rhs: &GStarPolynomial) -> GStarPolynomial {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &CycScalar) -> GStarPolynomial {
        if c.is_zero() {
            return GStarPolynomial::zero();
        }
        GStarPolynomial {
            terms: self.terms.iter().map(|(d, w)| (c.mul(d), w.clone())).collect(),
        }
    }

    pub fn mul(&self, rhs: &GStarPolynomial) -> GStarPolynomial {
        let mut out = Vec::new();
        for (c, w) in &self.terms {
            for (d, v) in &rhs.terms {
                let mut word = w.clone();
                word.extend(v.iter().copied());
                out.push((c.mul(d), word));
            }
        }
        GStarPolynomial::from_terms(out)
    }

    pub fn pow(&self, e: u32) -> GStarPolynomial {
        assert!(e >= 1, "polynomial powers are positive");
        let mut out = self.clone();
        for _ in 1..e {
            out = out.mul(self);
        }
        out
    }

    /// Commutator self*rhs - rhs*self.
    pub fn commutator(&self, rhs: &GStarPolynomial) -> GStarPolynomial {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Map var index -> declared degree, over all terms.
    pub fn variables(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for (_, word) in &self.terms {
            for l in word {
                out.insert(l.var, l.degree);
            }
        }
        out
    }

    /// Every variable appears exactly once in every term.
    pub fn is_multilinear(&self) -> bool {
        let vars: Vec<usize> = self.variables().keys().copied().collect();
        self.terms.iter().all(|(_, word)| {
            word.len() == vars.len()
                && vars
                    .iter()
                    .all(|v| word.iter().filter(|l| l.var == *v).count() == 1)
        })
    }

    /// Largest word length.
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(_, w)| w.len()).max().unwrap_or(0)
    }
}

impl std::fmt::Display for GStarPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, word)) in self.terms.iter().enumerate() {
            let (negative, body) = term_text(c, word);
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

fn term_text(c: &CycScalar, word: &[Letter]) -> (bool, String) {
    let letters = word.iter().map(|l| l.to_string()).join(" ");
    if let Some(q) = c.as_rational() {
        let negative = q < num_rational::BigRational::from_integer(0.into());
        let abs = if negative { c.neg() } else { c.clone() };
        if abs.is_one() {
            (negative, letters)
        } else {
            (negative, format!("{abs}*{letters}"))
        }
    } else {
        (false, format!("({c})*{letters}"))
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    cyclo_order: u64,
    declared: BTreeMap<usize, usize>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::SyntaxError { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, ch: u8) -> Result<(), PolyError> {
        if self.peek() == Some(ch) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected {:?}", ch as char))
        }
    }

    fn integer(&mut self) -> Result<usize, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| PolyError::SyntaxError { pos: start, msg: "integer too large".into() })
    }

    fn expr(&mut self) -> Result<GStarPolynomial, PolyError> {
        let mut negative = false;
        if let Some(c) = self.peek() {
            if c == b'-' {
                self.pos += 1;
                negative = true;
            } else if c == b'+' {
                self.pos += 1;
            }
        }
        let first = self.term()?;
        let mut out = if negative { first.neg() } else { first };
        while let Some(c) = self.peek() {
            if c == b'+' || c == b'-' {
                self.pos += 1;
                let t = self.term()?;
                out = if c == b'+' { out.add(&t) } else { out.sub(&t) };
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<GStarPolynomial, PolyError> {
        let coeff = self.coefficient()?;
        let mut factors: Vec<GStarPolynomial> = Vec::new();
        loop {
            match self.peek() {
                Some(b'x') | Some(b'(') | Some(b'[') => factors.push(self.factor()?),
                Some(b'*') if !factors.is_empty() => {
                    // optional separator between factors
                    self.pos += 1;
                }
                _ => break,
            }
        }
        if factors.is_empty() {
            return match &coeff {
                Some(c) if c.is_zero() => Ok(GStarPolynomial::zero()),
                Some(_) => self.err("a term needs at least one variable"),
                None => self.err("expected a term"),
            };
        }
        let mut out = factors[0].clone();
        for f in &factors[1..] {
            out = out.mul(f);
        }
        if let Some(c) = coeff {
            out = out.scale(&c);
        }
        Ok(out)
    }

    /// Leading coefficient of a term: a bare rational followed by `*`, or a
    /// parenthesized scalar literal followed by `*`.
    fn coefficient(&mut self) -> Result<Option<CycScalar>, PolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let mut end = self.pos;
                while end < self.text.len()
                    && (self.text[end].is_ascii_digit() || self.text[end] == b'/')
                {
                    end += 1;
                }
                let literal = std::str::from_utf8(&self.text[start..end]).unwrap();
                let value = parse_scalar(literal, self.cyclo_order).map_err(|e| {
                    PolyError::SyntaxError { pos: start, msg: e.to_string() }
                })?;
                self.pos = end;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
                Ok(Some(value))
            }
            Some(b'(') => {
                let open = self.pos;
                let close = match self.matching_paren(open) {
                    Some(c) => c,
                    None => return self.err("unbalanced parenthesis"),
                };
                let mut after = close + 1;
                while after < self.text.len() && self.text[after].is_ascii_whitespace() {
                    after += 1;
                }
                if self.text.get(after) != Some(&b'*') {
                    return Ok(None);
                }
                let inner = std::str::from_utf8(&self.text[open + 1..close]).unwrap();
                match parse_scalar(inner, self.cyclo_order) {
                    Ok(v) => {
                        self.pos = after + 1;
                        Ok(Some(v))
                    }
                    Err(_) => Ok(None),
                }
            }
            _ => Ok(None),
        }
    }

    fn matching_paren(&self, open: usize) -> Option<usize> {
        let mut depth = 0usize;
        for (i, &c) in self.text.iter().enumerate().skip(open) {
            if c == b'(' {
                depth += 1;
            } else if c == b')' {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
        }
        None
    }

    fn factor(&mut self) -> Result<GStarPolynomial, PolyError> {
        let base = match self.peek() {
            Some(b'x') => self.variable()?,
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                inner
            }
            Some(b'[') => {
                self.pos += 1;
                let left = self.expr()?;
                self.expect(b',')?;
                let right = self.expr()?;
                self.expect(b']')?;
                left.commutator(&right)
            }
            _ => return self.err("expected a factor"),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            if e == 0 {
                return self.err("powers must be positive");
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn variable(&mut self) -> Result<GStarPolynomial, PolyError> {
        self.expect(b'x')?;
        let var = self.integer()?;
        if var == 0 {
            return self.err("variable indices start at 1");
        }
        self.expect(b'_')?;
        let name_start = self.pos;
        while self.pos < self.text.len()
            && (self.text[self.pos] == b'g' || self.text[self.pos].is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == name_start {
            // Not a recognized degree token; take the stray word for the error.
            while self.pos < self.text.len() && self.text[self.pos].is_ascii_alphanumeric() {
                self.pos += 1;
            }
            return Err(PolyError::UnknownDegreeName {
                pos: name_start,
                name: std::str::from_utf8(&self.text[name_start..self.pos]).unwrap().into(),
            });
        }
        let name = std::str::from_utf8(&self.text[name_start..self.pos]).unwrap().to_string();
        let degree = match name.as_str() {
            "1" => 0,
            "g" => 1,
            _ if name.starts_with('g') && name[1..].chars().all(|c| c.is_ascii_digit()) => {
                name[1..].parse().map_err(|_| PolyError::UnknownDegreeName {
                    pos: name_start,
                    name: name.clone(),
                })?
            }
            _ => {
                return Err(PolyError::UnknownDegreeName { pos: name_start, name });
            }
        };
        if let Some(&previous) = self.declared.get(&var) {
            if previous != degree {
                return Err(PolyError::SyntaxError {
                    pos: name_start,
                    msg: format!("variable x{var} already has a different degree tag"),
                });
            }
        } else {
            self.declared.insert(var, degree);
        }
        let star = if self.text.get(self.pos) == Some(&b'*') {
            self.pos += 1;
            true
        } else {
            false
        };
        Ok(GStarPolynomial::from_terms(vec![(
            CycScalar::one(),
            vec![Letter { var, degree, star }],
        )]))
    }
}

/// Parses the syntax described in the module docs; `cyclo_order` fixes what
/// the letter z means inside scalar coefficients.
pub fn parse(text: &str, cyclo_order: u64) -> Result<GStarPolynomial, PolyError> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
        cyclo_order,
        declared: BTreeMap::new(),
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}

/// Evaluates f with each variable replaced by its assigned element; starred
/// letters use the star image. Every assigned element must be zero or
/// homogeneous of the variable's declared degree.
pub fn evaluate(
    a: &GradedStarAlgebra,
    f: &GStarPolynomial,
    assignment: &BTreeMap<usize, Element>,
) -> Result<Element, PolyError> {
    for (var, degree) in f.variables() {
        let el = assignment.get(&var).ok_or(PolyError::DegreeMismatch { var })?;
        if !el_is_zero(el) && a.homogeneous_degree(el) != Some(degree) {
            return Err(PolyError::DegreeMismatch { var });
        }
    }
    let mut out = a.zero_element();
    for (c, word) in f.terms() {
        let mut acc: Option<Element> = None;
        for l in word {
            let el = &assignment[&l.var];
            let value = if l.star { a.star(el) } else { el.clone() };
            acc = Some(match acc {
                None => value,
                Some(prev) => a.mul(&prev, &value),
            });
        }
        if let Some(v) = acc {
            out = el_add(&out, &el_scale(c, &v));
        }
    }
    Ok(out)
}

/// Splits f into multihomogeneous components and fully polarizes each; in
/// characteristic zero f is an identity exactly when every output is. Output
/// variables are renumbered 1..n, each appearing once per term.
pub fn multilinearize(f: &GStarPolynomial) -> Vec<GStarPolynomial> {
    let mut components: BTreeMap<BTreeMap<usize, usize>, Vec<(CycScalar, Vec<Letter>)>> =
        BTreeMap::new();
    for (c, word) in f.terms() {
        let mut multidegree: BTreeMap<usize, usize> = BTreeMap::new();
        for l in word {
            *multidegree.entry(l.var).or_insert(0) += 1;
        }
        components.entry(multidegree).or_default().push((c.clone(), word.clone()));
    }
    let mut out = Vec::new();
    for (multidegree, terms) in components {
        // Fresh indices: variable v with multiplicity d takes the next d
        // slots, in ascending order of v.
        let mut base: BTreeMap<usize, usize> = BTreeMap::new();
        let mut next = 0usize;
        for (&v, &d) in &multidegree {
            base.insert(v, next);
            next += d;
        }
        let mut polarized: Vec<(CycScalar, Vec<Letter>)> = Vec::new();
        for (c, word) in terms {
            let mut per_var_positions: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (i, l) in word.iter().enumerate() {
                per_var_positions.entry(l.var).or_default().push(i);
            }
            // All ways to hand each variable's occurrences its fresh names.
            let vars: Vec<usize> = per_var_positions.keys().copied().collect();
            let assignment_sets: Vec<Vec<Vec<usize>>> = vars
                .iter()
                .map(|v| {
                    let d = per_var_positions[v].len();
                    (0..d).permutations(d).collect()
                })
                .collect();
            for combo in assignment_sets.into_iter().multi_cartesian_product() {
                let mut renamed = word.clone();
                for (v, perm) in vars.iter().zip(combo) {
                    for (slot, &position) in perm.iter().zip(&per_var_positions[v]) {
                        renamed[position].var = base[v] + slot + 1;
                    }
                }
                polarized.push((c.clone(), renamed));
            }
        }
        let p = GStarPolynomial::from_terms(polarized);
        if !p.is_zero() {
            debug_assert!(p.is_multilinear());
            out.push(p);
        }
    }
    out
}

/// True exactly when f vanishes under every admissible substitution in A:
/// multilinearize, then check each piece on all basis tuples of matching
/// degrees.
pub fn is_identity(a: &GradedStarAlgebra, f: &GStarPolynomial) -> Result<bool, PolyError> {
    let order = a.group().order();
    if f.variables().values().any(|&d| d >= order) {
        return Err(PolyError::ContextMismatch);
    }
    for piece in multilinearize(f) {
        let vars: Vec<(usize, usize)> = piece.variables().into_iter().collect();
        let choices: Vec<Vec<usize>> = vars
            .iter()
            .map(|&(_, degree)| {
                (0..a.dim()).filter(|&i| a.degree_of_basis(i) == degree).collect()
            })
            .collect();
        if choices.iter().any(|c| c.is_empty()) {
            // A variable over an empty graded component only admits zero.
            continue;
        }
        for tuple in choices.into_iter().multi_cartesian_product() {
            let assignment: BTreeMap<usize, Element> = vars
                .iter()
                .zip(&tuple)
                .map(|(&(v, _), &i)| (v, a.basis_element(i)))
                .collect();
            let value = evaluate(a, &piece, &assignment)?;
            if !el_is_zero(&value) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
