//! Multivariate polynomials over `F_q` with standard grading.
//!
//! Terms are kept sorted descending under grevlex (the crate's canonical
//! order), with no stored zero coefficients, so structural equality is
//! semantic equality. Operations that depend on a [`MonomialOrder`] take
//! it explicitly.

mod monomial;
mod parse;

pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

/// Degrees beyond this are rejected at construction.
pub const MAX_DEGREE: u32 = 65536;

struct RingInner {
    field: Field,
    vars: Vec<String>,
}

/// The polynomial ring `F_q[x1, ..., xm]`. Cheap to clone; two rings are
/// interchangeable when the field and the variable count agree.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

impl Ring {
    /// Ring with default variable names `x1, ..., xm`.
    pub fn new(field: Field, nvars: usize) -> Ring {
        let vars = (1..=nvars).map(|i| format!("x{i}")).collect();
        Ring(Arc::new(RingInner { field, vars }))
    }

    pub fn with_names(field: Field, names: Vec<String>) -> Ring {
        Ring(Arc::new(RingInner { field, vars: names }))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    /// Ring with one auxiliary variable prepended at position 0, used by
    /// the elimination-based ideal operations.
    pub(crate) fn with_aux_front(&self) -> Ring {
        let mut vars = Vec::with_capacity(self.nvars() + 1);
        vars.push("t#".to_string());
        vars.extend(self.0.vars.iter().cloned());
        Ring(Arc::new(RingInner {
            field: self.0.field.clone(),
            vars,
        }))
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.vars.len() == other.0.vars.len())
    }
}

impl Eq for Ring {}

impl Hash for Ring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.field.hash(state);
        self.0.vars.len().hash(state);
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))
    }
}

/// One monomial with its nonzero raw coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub mon: Monomial,
    pub c: u32,
}

/// A polynomial in a [`Ring`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, &ring.field().one()).unwrap()
    }

    pub fn constant(ring: &Ring, c: &FieldElement) -> Result<Polynomial> {
        if c.field() != ring.field() {
            return Err(Error::FieldMismatch);
        }
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term {
                mon: Monomial::one(ring.nvars()),
                c: c.index(),
            }]
        };
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// The variable `x_i` (0-based).
    pub fn variable(ring: &Ring, i: usize) -> Polynomial {
        assert!(i < ring.nvars(), "variable index out of range");
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                mon: Monomial::variable(ring.nvars(), i),
                c: 1,
            }],
        }
    }

    /// Builds a polynomial from monomial/coefficient pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (Monomial, FieldElement)>,
    {
        let field = ring.field().clone();
        let mut map: std::collections::HashMap<Monomial, u32> = std::collections::HashMap::new();
        for (mon, c) in terms {
            if c.field() != &field {
                return Err(Error::FieldMismatch);
            }
            if mon.nvars() != ring.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: ring.nvars(),
                    got: mon.nvars(),
                });
            }
            if mon.total_degree() > MAX_DEGREE {
                return Err(Error::DegreeLimit(mon.total_degree() as u64));
            }
            let e = map.entry(mon).or_insert(0);
            *e = field.add_raw(*e, c.index());
        }
        let raw: Vec<Term> = map
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(mon, c)| Term { mon, c })
            .collect();
        Ok(Polynomial::from_raw(ring, raw))
    }

    /// Normalizes a raw term list (sorts descending grevlex; caller
    /// guarantees distinct monomials and nonzero coefficients).
    pub(crate) fn from_raw(ring: &Ring, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_unstable_by(|a, b| MonomialOrder::Grevlex.cmp(&b.mon, &a.mon));
        debug_assert!(terms.iter().all(|t| t.c != 0));
        debug_assert!(terms.windows(2).all(|w| w[0].mon != w[1].mon));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldElement)> + '_ {
        self.terms
            .iter()
            .map(move |t| (&t.mon, self.ring.field().from_index(t.c)))
    }

    pub(crate) fn terms_raw(&self) -> &[Term] {
        &self.terms
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mon.total_degree()).max()
    }

    /// True when all terms share one total degree; the zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.mon.total_degree();
                self.terms.iter().all(|t| t.mon.total_degree() == d)
            }
        }
    }

    /// The common degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.total_degree()
        }
    }

    /// The maximal term under `ord` with its coefficient.
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(Monomial, FieldElement)> {
        let t = self.leading_raw(ord).ok_or(Error::ZeroPolynomial)?;
        Ok((t.mon.clone(), self.ring.field().from_index(t.c)))
    }

    pub fn leading_monomial(&self, ord: MonomialOrder) -> Result<Monomial> {
        Ok(self.leading_term(ord)?.0)
    }

    pub(crate) fn leading_raw(&self, ord: MonomialOrder) -> Option<&Term> {
        match ord {
            MonomialOrder::Grevlex => self.terms.first(),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| ord.cmp(&a.mon, &b.mon)),
        }
    }

    pub fn try_add(&self, rhs: &Polynomial) -> Result<Polynomial> {
        self.same_ring(rhs)?;
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let a = &self.terms[i];
            let b = &rhs.terms[j];
            match MonomialOrder::Grevlex.cmp(&a.mon, &b.mon) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add_raw(a.c, b.c);
                    if c != 0 {
                        out.push(Term {
                            mon: a.mon.clone(),
                            c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn try_sub(&self, rhs: &Polynomial) -> Result<Polynomial> {
        self.try_add(&rhs.negate())
    }

    pub fn try_mul(&self, rhs: &Polynomial) -> Result<Polynomial> {
        self.same_ring(rhs)?;
        let field = self.ring.field();
        let mut map: std::collections::HashMap<Monomial, u32> =
            std::collections::HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                let mon = a.mon.mul(&b.mon);
                let prod = field.mul_raw(a.c, b.c);
                let e = map.entry(mon).or_insert(0);
                *e = field.add_raw(*e, prod);
            }
        }
        let raw: Vec<Term> = map
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(mon, c)| Term { mon, c })
            .collect();
        Ok(Polynomial::from_raw(&self.ring, raw))
    }

    pub fn negate(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.clone(),
                    c: field.neg_raw(t.c),
                })
                .collect(),
        }
    }

    pub fn scalar_mul(&self, c: &FieldElement) -> Result<Polynomial> {
        if c.field() != self.ring.field() {
            return Err(Error::FieldMismatch);
        }
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let field = self.ring.field();
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.clone(),
                    c: field.mul_raw(t.c, c.index()),
                })
                .collect(),
        })
    }

    /// Multiplies by a single term (no allocation churn; used heavily by
    /// the division algorithm).
    pub(crate) fn mul_term(&self, mon: &Monomial, c: u32) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.mul(mon),
                    c: field.mul_raw(t.c, c),
                })
                .collect(),
        }
    }

    /// Scales so the leading coefficient under `ord` is 1.
    pub fn monic(&self, ord: MonomialOrder) -> Result<Polynomial> {
        let (_, lc) = self.leading_term(ord)?;
        self.scalar_mul(&lc.inv()?)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).unwrap();
            }
        }
        acc
    }

    /// Exact value at a point, coordinatewise in the ring's field.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let field = self.ring.field();
        for c in point {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        let raw: Vec<u32> = point.iter().map(|c| c.index()).collect();
        Ok(field.from_index(self.evaluate_raw(&raw)))
    }

    pub(crate) fn evaluate_raw(&self, point: &[u32]) -> u32 {
        let field = self.ring.field();
        let mut acc = 0u32;
        for t in &self.terms {
            let mut v = t.c;
            for (i, &e) in t.mon.exps().iter().enumerate() {
                if e > 0 {
                    v = field.mul_raw(v, field.pow_raw(point[i], e as u64));
                    if v == 0 {
                        break;
                    }
                }
            }
            acc = field.add_raw(acc, v);
        }
        acc
    }

    /// Same polynomial viewed in the ring with an auxiliary variable
    /// prepended at position 0.
    pub(crate) fn lift_aux_front(&self, bigger: &Ring) -> Polynomial {
        debug_assert_eq!(bigger.nvars(), self.ring.nvars() + 1);
        Polynomial {
            ring: bigger.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.prepend_var(0),
                    c: t.c,
                })
                .collect(),
        }
    }

    /// Inverse of [`lift_aux_front`]: drops variable 0, which must not
    /// occur in any term.
    pub(crate) fn drop_aux_front(&self, smaller: &Ring) -> Polynomial {
        debug_assert_eq!(smaller.nvars() + 1, self.ring.nvars());
        debug_assert!(self.terms.iter().all(|t| t.mon.exp(0) == 0));
        Polynomial::from_raw(
            smaller,
            self.terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.drop_first_var(),
                    c: t.c,
                })
                .collect(),
        )
    }

    /// Terms cloned and sorted descending under `ord`.
    pub(crate) fn sorted_terms(&self, ord: MonomialOrder) -> Vec<Term> {
        let mut terms = self.terms.clone();
        if ord != MonomialOrder::Grevlex {
            terms.sort_unstable_by(|a, b| ord.cmp(&b.mon, &a.mon));
        }
        terms
    }

    fn same_ring(&self, rhs: &Polynomial) -> Result<()> {
        if self.ring == rhs.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Canonical text under `ord`: terms descending, explicit `*`, `^`
    /// for powers, composite coefficients parenthesized.
    pub fn format_with_order(&self, ord: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let field = self.ring.field();
        let terms = self.sorted_terms(ord);
        let mut out = String::new();
        for (k, t) in terms.iter().enumerate() {
            if k > 0 {
                out.push('+');
            }
            let coeff = field.from_index(t.c).to_string();
            if t.mon.is_one() {
                out.push_str(&coeff);
                continue;
            }
            if coeff != "1" {
                if coeff.contains('+') {
                    out.push('(');
                    out.push_str(&coeff);
                    out.push_str(")*");
                } else {
                    out.push_str(&coeff);
                    out.push('*');
                }
            }
            let mut first = true;
            for (i, &e) in t.mon.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    out.push('*');
                }
                first = false;
                out.push_str(self.ring.var_name(i));
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_order(MonomialOrder::Grevlex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl std::ops::$trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$checked(&rhs).expect("ring mismatch")
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negate()
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negate()
    }
}
