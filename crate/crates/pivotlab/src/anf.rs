//! Boolean functions in algebraic normal form, and Z4-valued phase
//! functions.
//!
//! A function GF(2)^n -> GF(2) is stored as the set of monomials of its
//! ANF. Monomials are bitmasks over the variables, so products and
//! divisibility tests are single word operations; n is capped at 31.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported variable count; one neighbourhood fits a machine word.
pub const MAX_VARS: usize = 31;

/// A product of distinct variables encoded as a bitmask (bit i set means
/// x_i occurs). The empty mask is the constant term 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    /// Builds a monomial from explicit variable indices, rejecting repeats.
    pub fn from_vars(vars: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &v in vars {
            if v >= MAX_VARS {
                return Err(Error::TooManyVariables { n: v + 1 });
            }
            let bit = 1u32 << v;
            if mask & bit != 0 {
                return Err(Error::DuplicateVariable { var: v });
            }
            mask |= bit;
        }
        Ok(Monomial(mask))
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains_var(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |&i| mask >> i & 1 == 1)
    }

    /// True when every variable of `self` occurs in `other`.
    pub fn divides(self, other: Monomial) -> bool {
        self.0 & other.0 == self.0
    }

    /// Product of monomials; repeated variables collapse (x_i^2 = x_i).
    pub fn product(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    /// Evaluate at the point whose bits give the variable assignment.
    pub fn evaluate(self, point: u32) -> bool {
        point & self.0 == self.0
    }

    fn without_var(self, i: usize) -> Monomial {
        Monomial(self.0 & !(1 << i))
    }
}

/// A Boolean function GF(2)^n -> GF(2), stored as a sorted, duplicate-free
/// list of ANF monomials. Addition of terms is symmetric difference.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    terms: Vec<Monomial>,
}

impl BooleanFunction {
    /// The zero function on n variables.
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables supported");
        BooleanFunction { n, terms: Vec::new() }
    }

    /// The constant-one function.
    pub fn one(n: usize) -> Self {
        Self::from_terms(n, [Monomial::ONE])
    }

    /// The single variable x_i.
    pub fn variable(n: usize, i: usize) -> Self {
        assert!(i < n);
        Self::from_terms(n, [Monomial(1 << i)])
    }

    /// Sum of the given monomials over GF(2); repeats cancel pairwise.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(n: usize, terms: I) -> Self {
        let mut f = Self::zero(n);
        for t in terms {
            debug_assert!(t.0 < 1 << n, "monomial outside the variable range");
            f.toggle(t);
        }
        f
    }

    /// ANF with monomial masks taken directly from bit words.
    pub fn from_masks<I: IntoIterator<Item = u32>>(n: usize, masks: I) -> Self {
        Self::from_terms(n, masks.into_iter().map(Monomial))
    }

    /// Recovers the ANF of a truth table (Moebius transform). The table is
    /// indexed by assignment bits, so `table[k]` is the value at point k.
    pub fn from_truth_table(n: usize, table: &[bool]) -> Self {
        assert!(n <= MAX_VARS && table.len() == 1 << n);
        let mut coeffs: Vec<bool> = table.to_vec();
        for i in 0..n {
            let bit = 1usize << i;
            for k in 0..coeffs.len() {
                if k & bit != 0 {
                    coeffs[k] ^= coeffs[k ^ bit];
                }
            }
        }
        Self::from_terms(
            n,
            coeffs
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c)
                .map(|(k, _)| Monomial(k as u32)),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest monomial degree, 0 for the zero function.
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|t| t.degree()).max().unwrap_or(0)
    }

    fn toggle(&mut self, t: Monomial) {
        match self.terms.binary_search(&t) {
            Ok(pos) => {
                self.terms.remove(pos);
            }
            Err(pos) => self.terms.insert(pos, t),
        }
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.n, right: other.n })
        }
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        }
    }

    /// GF(2) sum: the term sets combine by symmetric difference.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for &t in &other.terms {
            out.toggle(t);
        }
        Ok(out)
    }

    /// Pointwise AND; the ANF product with idempotent variables and GF(2)
    /// coefficient reduction.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = Self::zero(self.n);
        for &a in &self.terms {
            for &b in &other.terms {
                out.toggle(a.product(b));
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: u32) -> bool {
        let mut acc = false;
        for &t in &self.terms {
            acc ^= t.evaluate(point);
        }
        acc
    }

    pub fn truth_table(&self) -> Vec<bool> {
        (0u32..1 << self.n).map(|k| self.evaluate(k)).collect()
    }

    /// The restriction f|_{x_i=a}, a function independent of x_i.
    pub fn restrict(&self, i: usize, a: bool) -> Result<Self> {
        self.check_var(i)?;
        let mut out = Self::zero(self.n);
        for &t in &self.terms {
            if !t.contains_var(i) {
                out.toggle(t);
            } else if a {
                out.toggle(t.without_var(i));
            }
        }
        Ok(out)
    }

    /// All terms that multiply x_i, with x_i removed: f = x_i * nb + f|_{x_i=0}.
    pub fn neighbourhood(&self, i: usize) -> Result<Self> {
        self.check_var(i)?;
        let mut out = Self::zero(self.n);
        for &t in &self.terms {
            if t.contains_var(i) {
                out.toggle(t.without_var(i));
            }
        }
        Ok(out)
    }

    /// Exact ANF membership of the monomial.
    pub fn contains_term(&self, g: Monomial) -> bool {
        self.terms.binary_search(&g).is_ok()
    }

    /// True when some monomial r makes g*r a term of self; r = 1 is
    /// allowed, so every term is also a multiplying term.
    pub fn is_multiplying_term(&self, g: Monomial) -> bool {
        self.terms.iter().any(|&t| g.divides(t))
    }

    /// True when the function depends on every variable of the monomial.
    pub fn depends_on(&self, g: Monomial) -> bool {
        g.vars().all(|i| self.terms.iter().any(|t| t.contains_var(i)))
    }

    /// Terms of degree at most one.
    pub fn affine_part(&self) -> Self {
        Self::from_terms(self.n, self.terms.iter().copied().filter(|t| t.degree() <= 1))
    }

    /// Drops constant and linear terms; orbit code works on this normal form.
    pub fn strip_affine(&self) -> Self {
        Self::from_terms(self.n, self.terms.iter().copied().filter(|t| t.degree() >= 2))
    }

    /// Applies a vertex/variable relabelling: variable i becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        Self::from_terms(
            self.n,
            self.terms.iter().map(|t| {
                let mut mask = 0u32;
                for v in t.vars() {
                    mask |= 1 << perm[v];
                }
                Monomial(mask)
            }),
        )
    }

    /// Parses the text form `n=<int>; <term>+<term>+...` where a term is
    /// `x<i>*x<j>*...` or `1`. `0` denotes the empty sum. Whitespace is
    /// ignored everywhere.
    pub fn parse(input: &str) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = compact
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse("expected leading `n=<int>;`".into()))?;
        let (n_str, body) = rest
            .split_once(';')
            .ok_or_else(|| Error::Parse("expected `;` after the variable count".into()))?;
        let n: usize = n_str
            .parse()
            .map_err(|_| Error::Parse(format!("invalid variable count `{n_str}`")))?;
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n });
        }
        if body == "0" {
            return Ok(Self::zero(n));
        }
        if body.is_empty() {
            return Err(Error::Parse("empty term list; use `0` for the zero function".into()));
        }
        let mut f = Self::zero(n);
        for term in body.split('+') {
            if term == "1" {
                f.toggle(Monomial::ONE);
                continue;
            }
            let mut mask = 0u32;
            for factor in term.split('*') {
                let idx_str = factor
                    .strip_prefix('x')
                    .ok_or_else(|| Error::Parse(format!("bad factor `{factor}`")))?;
                let idx: usize = idx_str
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable index `{idx_str}`")))?;
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, n });
                }
                let bit = 1u32 << idx;
                if mask & bit != 0 {
                    return Err(Error::DuplicateVariable { var: idx });
                }
                mask |= bit;
            }
            f.toggle(Monomial(mask));
        }
        Ok(f)
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; ", self.n)?;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, "+")?;
            }
            if *t == Monomial::ONE {
                write!(f, "1")?;
            } else {
                let mut first = true;
                for v in t.vars() {
                    if !first {
                        write!(f, "*")?;
                    }
                    write!(f, "x{v}")?;
                    first = false;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Member of the high-flat-count family: the complete bipartite quadratic
/// between the first t and the remaining n-t variables, the clique on the
/// remaining n-t, plus an arbitrary function h of the first t variables and
/// an affine part a.
pub fn family_member(
    n: usize,
    t: usize,
    h: &BooleanFunction,
    a: &BooleanFunction,
) -> Result<BooleanFunction> {
    if n > MAX_VARS {
        return Err(Error::TooManyVariables { n });
    }
    if t + 1 > n {
        return Err(Error::InvalidInput(format!("need t <= n-1, got t={t}, n={n}")));
    }
    if h.n() != n || a.n() != n {
        return Err(Error::DimensionMismatch { left: n, right: if h.n() != n { h.n() } else { a.n() } });
    }
    if h.terms().iter().any(|m| m.vars().any(|v| v >= t)) {
        return Err(Error::InvalidInput(format!("h must only touch x0..x{}", t.wrapping_sub(1))));
    }
    if a.degree() > 1 {
        return Err(Error::InvalidInput("a must be affine".into()));
    }
    let mut f = BooleanFunction::zero(n);
    for i in 0..t {
        for j in t..n {
            f.toggle(Monomial(1 << i | 1 << j));
        }
    }
    for i in t..n {
        for j in i + 1..n {
            f.toggle(Monomial(1 << i | 1 << j));
        }
    }
    let f = f.add(h)?;
    f.add(a)
}

/// The quadratic of the complete graph on n vertices.
pub fn clique_function(n: usize) -> BooleanFunction {
    family_member(n.max(1), 0, &BooleanFunction::zero(n), &BooleanFunction::zero(n))
        .expect("clique parameters are always valid")
}

/// A function GF(2)^n -> Z4 stored as a dense table of 2^n values.
///
/// Identities involving these are checked pointwise, so the table form is
/// the natural representation at this scale.
#[derive(Clone, PartialEq, Eq)]
pub struct Z4Function {
    n: usize,
    table: Vec<u8>,
}

impl Z4Function {
    pub fn zero(n: usize) -> Self {
        assert!(n <= 14, "Z4 tables are dense; n is capped at 14");
        Z4Function { n, table: vec![0; 1 << n] }
    }

    pub fn from_table(n: usize, table: Vec<u8>) -> Self {
        assert_eq!(table.len(), 1 << n);
        assert!(table.iter().all(|&v| v < 4));
        Z4Function { n, table }
    }

    /// Lift of a Boolean function: q = 2p, table entries in {0, 2}.
    pub fn from_boolean_doubled(p: &BooleanFunction) -> Self {
        let mut z = Self::zero(p.n());
        for k in 0..z.table.len() {
            z.table[k] = if p.evaluate(k as u32) { 2 } else { 0 };
        }
        z
    }

    /// Builds the combination sum(coeff * \[phi\]) mod 4: every Boolean
    /// summand is evaluated, embedded into Z4, scaled, and the results are
    /// added mod 4. GF(2) reduction happens inside each summand only.
    pub fn combine(n: usize, parts: &[(u8, BooleanFunction)]) -> Result<Self> {
        let mut z = Self::zero(n);
        for (coeff, phi) in parts {
            if phi.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: phi.n() });
            }
            for k in 0..z.table.len() {
                if phi.evaluate(k as u32) {
                    z.table[k] = (z.table[k] + coeff) & 3;
                }
            }
        }
        Ok(z)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, point: u32) -> u8 {
        self.table[point as usize]
    }

    /// Adds another Z4 function pointwise mod 4.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(a, b)| (a + b) & 3)
            .collect();
        Ok(Z4Function { n: self.n, table })
    }

    /// The restriction p|_{x_j=a}, read as a function on the full cube that
    /// ignores x_j.
    pub fn restrict(&self, j: usize, a: bool) -> Result<Self> {
        if j >= self.n {
            return Err(Error::IndexOutOfRange { index: j, n: self.n });
        }
        let bit = 1usize << j;
        let mut z = Self::zero(self.n);
        for k in 0..z.table.len() {
            let src = if a { k | bit } else { k & !bit };
            z.table[k] = self.table[src];
        }
        Ok(z)
    }
}

impl fmt::Debug for Z4Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Function(n={}, {:?})", self.n, self.table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(s: &str) -> BooleanFunction {
        BooleanFunction::parse(s).unwrap()
    }

    #[test]
    fn add_is_involutive_and_cancels() {
        let f = bf("n=3; x0*x1");
        assert!(f.add(&f).unwrap().is_zero());
        let g = bf("n=3; x0*x1+x1*x2");
        let h = bf("n=3; x1*x2");
        assert_eq!(g.add(&h).unwrap(), bf("n=3; x0*x1"));
    }

    #[test]
    fn add_rejects_mismatched_n() {
        let f = bf("n=3; x0");
        let g = bf("n=4; x0");
        assert!(matches!(f.add(&g), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn multiply_examples() {
        let s = bf("n=2; x0+x1");
        assert_eq!(s.multiply(&s).unwrap(), s);
        let a = bf("n=2; x0");
        let b = bf("n=2; x0*x1");
        assert_eq!(a.multiply(&b).unwrap(), b);
        let l = bf("n=5; x1+x2");
        let r = bf("n=5; x3+x4");
        assert_eq!(
            l.multiply(&r).unwrap(),
            bf("n=5; x1*x3+x1*x4+x2*x3+x2*x4")
        );
    }

    #[test]
    fn pointwise_semantics_of_add_and_multiply() {
        // Exhaustive check that ANF arithmetic matches truth tables.
        for n in 1..=3usize {
            let nm = 1usize << n;
            let space = 1usize << nm;
            for fa in 0..space {
                let ta: Vec<bool> = (0..nm).map(|k| fa >> k & 1 == 1).collect();
                let f = BooleanFunction::from_truth_table(n, &ta);
                for k in 0..nm as u32 {
                    assert_eq!(f.evaluate(k), ta[k as usize]);
                }
                let gb = fa.wrapping_mul(0x9e37) % space;
                let tb: Vec<bool> = (0..nm).map(|k| gb >> k & 1 == 1).collect();
                let g = BooleanFunction::from_truth_table(n, &tb);
                let sum = f.add(&g).unwrap();
                let prod = f.multiply(&g).unwrap();
                for k in 0..nm as u32 {
                    assert_eq!(sum.evaluate(k), ta[k as usize] ^ tb[k as usize]);
                    assert_eq!(prod.evaluate(k), ta[k as usize] & tb[k as usize]);
                }
            }
        }
    }

    #[test]
    fn pointwise_semantics_randomized_larger_n() {
        // Random pairs, every point checked, up to six variables.
        let mut rng = crate::rng::SplitMix64::new(404);
        for n in 4..=6usize {
            for _ in 0..20 {
                let nm = 1usize << n;
                let ta: Vec<bool> = (0..nm).map(|_| rng.bool()).collect();
                let tb: Vec<bool> = (0..nm).map(|_| rng.bool()).collect();
                let f = BooleanFunction::from_truth_table(n, &ta);
                let g = BooleanFunction::from_truth_table(n, &tb);
                let sum = f.add(&g).unwrap();
                let prod = f.multiply(&g).unwrap();
                for k in 0..nm as u32 {
                    assert_eq!(sum.evaluate(k), ta[k as usize] ^ tb[k as usize]);
                    assert_eq!(prod.evaluate(k), ta[k as usize] & tb[k as usize]);
                }
            }
        }
    }

    #[test]
    fn restriction_sum_is_the_neighbourhood() {
        // f|_{x_i=0} + f|_{x_i=1} recovers the terms multiplying x_i.
        let mut rng = crate::rng::SplitMix64::new(77);
        for n in 2..=5usize {
            for _ in 0..20 {
                let table: Vec<bool> = (0..1usize << n).map(|_| rng.bool()).collect();
                let f = BooleanFunction::from_truth_table(n, &table);
                for i in 0..n {
                    let sum = f
                        .restrict(i, false)
                        .unwrap()
                        .add(&f.restrict(i, true).unwrap())
                        .unwrap();
                    assert_eq!(sum, f.neighbourhood(i).unwrap());
                    assert!(sum.terms().iter().all(|t| !t.contains_var(i)));
                }
            }
        }
    }

    #[test]
    fn restrict_examples() {
        let f = bf("n=2; x0*x1+x1");
        assert!(f.restrict(1, false).unwrap().is_zero());
        assert_eq!(f.restrict(1, true).unwrap(), bf("n=2; x0+1"));
        assert!(matches!(f.restrict(5, false), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn restriction_sum_for_triangle() {
        // p0 + p1 + x0 + 1 for the triangle restricted on x0.
        let p = bf("n=3; x0*x1+x0*x2+x1*x2");
        let p0 = p.restrict(0, false).unwrap();
        let p1 = p.restrict(0, true).unwrap();
        let sum = p0
            .add(&p1)
            .unwrap()
            .add(&bf("n=3; x0+1"))
            .unwrap();
        assert_eq!(sum, bf("n=3; x0+x1+x2+1"));
    }

    #[test]
    fn neighbourhood_reads_off_terms() {
        let f = bf("n=3; x0*x1+x1*x2");
        assert_eq!(f.neighbourhood(1).unwrap(), bf("n=3; x0+x2"));
        let g = bf("n=4; x0*x1*x2+x0*x3");
        assert_eq!(g.neighbourhood(0).unwrap(), bf("n=4; x1*x2+x3"));
        assert!(g.neighbourhood(1).unwrap() == bf("n=4; x0*x2"));
        let h = bf("n=3; x0*x1");
        assert!(h.neighbourhood(2).unwrap().is_zero());
    }

    #[test]
    fn decomposition_by_neighbourhood() {
        // f = x_i * nb(f, i) + f|_{x_i=0} as ANFs, for every i.
        let samples = [
            bf("n=4; x0*x1+x1*x2+x2*x3+x0*x1*x2"),
            bf("n=4; 1+x0+x0*x1*x2*x3"),
            bf("n=4; x1"),
            BooleanFunction::zero(4),
        ];
        for f in &samples {
            for i in 0..4 {
                let xi = BooleanFunction::variable(4, i);
                let rebuilt = xi
                    .multiply(&f.neighbourhood(i).unwrap())
                    .unwrap()
                    .add(&f.restrict(i, false).unwrap())
                    .unwrap();
                assert_eq!(&rebuilt, f);
            }
        }
    }

    #[test]
    fn term_and_multiplying_term() {
        let f = bf("n=3; x0*x1*x2");
        let m01 = Monomial::from_vars(&[0, 1]).unwrap();
        assert!(!f.contains_term(m01));
        assert!(f.is_multiplying_term(m01));
        let g = bf("n=3; x0*x1");
        assert!(g.contains_term(m01));
        // x0*x1 multiplies the remainder of x0*x1 + x0*x1*x3.
        let h = bf("n=4; x0*x1+x0*x1*x3");
        let rest = h.add(&bf("n=4; x0*x1")).unwrap();
        assert!(rest.is_multiplying_term(Monomial::from_vars(&[0, 1]).unwrap()));
    }

    #[test]
    fn membership_chain_is_ordered() {
        // term => multiplying => dependence: every function through n = 4,
        // randomized at n = 5.
        for n in 1..=4usize {
            let points = 1usize << n;
            for code in 0u32..1 << points {
                let table: Vec<bool> = (0..points).map(|k| code >> k & 1 == 1).collect();
                let f = BooleanFunction::from_truth_table(n, &table);
                for mask in 0u32..1 << n {
                    let g = Monomial(mask);
                    if f.contains_term(g) {
                        assert!(f.is_multiplying_term(g));
                    }
                    if f.is_multiplying_term(g) {
                        assert!(f.depends_on(g));
                    }
                }
            }
        }
        let mut rng = crate::rng::SplitMix64::new(808);
        for _ in 0..200 {
            let table: Vec<bool> = (0..32).map(|_| rng.bool()).collect();
            let f = BooleanFunction::from_truth_table(5, &table);
            for mask in 0u32..32 {
                let g = Monomial(mask);
                if f.contains_term(g) {
                    assert!(f.is_multiplying_term(g));
                }
                if f.is_multiplying_term(g) {
                    assert!(f.depends_on(g));
                }
            }
        }
    }

    #[test]
    fn family_member_small_cases() {
        let z3 = BooleanFunction::zero(3);
        assert_eq!(
            family_member(3, 0, &z3, &z3).unwrap(),
            bf("n=3; x0*x1+x0*x2+x1*x2")
        );
        let h = bf("n=4; x0*x1");
        let z4 = BooleanFunction::zero(4);
        assert_eq!(
            family_member(4, 2, &h, &z4).unwrap(),
            bf("n=4; x0*x2+x0*x3+x1*x2+x1*x3+x2*x3+x0*x1")
        );
    }

    #[test]
    fn family_member_rejects_bad_h_and_a() {
        let h_bad = bf("n=4; x2");
        let z4 = BooleanFunction::zero(4);
        assert!(family_member(4, 2, &h_bad, &z4).is_err());
        let a_bad = bf("n=4; x0*x1");
        assert!(family_member(4, 2, &z4, &a_bad).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["n=3; 0", "n=3; 1", "n=4; x0*x1+x2", "n=5; 1+x0+x1*x2*x4"] {
            let f = bf(s);
            assert_eq!(BooleanFunction::parse(&f.to_string()).unwrap(), f);
        }
        assert_eq!(bf("n = 3 ; x0 * x1 + x2"), bf("n=3; x0*x1+x2"));
    }

    #[test]
    fn parse_rejections() {
        assert!(BooleanFunction::parse("x0+x1").is_err());
        assert!(BooleanFunction::parse("n=3; x0*x0").is_err());
        assert!(BooleanFunction::parse("n=3; x7").is_err());
        assert!(BooleanFunction::parse("n=99; x0").is_err());
        assert!(BooleanFunction::parse("n=3; ").is_err());
    }

    #[test]
    fn strip_affine_keeps_higher_terms() {
        let f = bf("n=3; 1+x0+x0*x1+x0*x1*x2");
        assert_eq!(f.strip_affine(), bf("n=3; x0*x1+x0*x1*x2"));
        assert_eq!(f.affine_part(), bf("n=3; 1+x0"));
    }

    #[test]
    fn z4_lift_and_combine() {
        let p = bf("n=2; x0*x1");
        let q = Z4Function::from_boolean_doubled(&p);
        assert_eq!(
            (0..4).map(|k| q.value(k)).collect::<Vec<_>>(),
            vec![0, 0, 0, 2]
        );
        // 2[x0+x1] + 3[x1] + 2 at x0=x1=1 is 0 + 3 + 2 = 1 mod 4.
        let combo = Z4Function::combine(
            2,
            &[
                (2, bf("n=2; x0+x1")),
                (3, bf("n=2; x1")),
                (2, BooleanFunction::one(2)),
            ],
        )
        .unwrap();
        assert_eq!(combo.value(0b11), 1);
    }

    #[test]
    fn z4_restrict_ignores_the_fixed_bit() {
        let z = Z4Function::from_table(2, vec![0, 1, 2, 3]);
        let r = z.restrict(0, true).unwrap();
        assert_eq!((0..4).map(|k| r.value(k)).collect::<Vec<_>>(), vec![1, 1, 3, 3]);
    }
}
