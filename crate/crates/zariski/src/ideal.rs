//! Ideals and the operations the saturation method is built from: sum,
//! product, intersection, colon, saturation, and the affine
//! field-equation ideal.
//!
//! Intersections introduce one auxiliary variable `t` prepended at
//! position 0 and eliminate it under `Elim(1)`; colon ideals divide the
//! intersection with a principal ideal; saturation iterates the colon
//! to its fixpoint. Every result is certified by the chain stabilizing,
//! not by a round count.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, exact_div, ideal_member, reduce_basis, GroebnerBasis};
use crate::poly::{MonomialOrder, Polynomial, Ring};

/// Colon rounds after which saturation reports [`Error::IterationLimit`].
/// The ascending chain always stabilizes long before this; the cap only
/// guards against an engine defect.
pub const MAX_COLON_ROUNDS: usize = 64;

/// An ideal of a polynomial ring, held as a generator list with cached
/// reduced Groebner bases per monomial order.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    homogeneous: bool,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>,
}

impl Ideal {
    /// Builds an ideal from generators; zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = gens.iter().all(|g| g.is_homogeneous());
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            homogeneous,
            cache: Arc::new(Mutex::new(HashMap::new())),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The homogeneous maximal ideal `(x1, ..., xm)`.
    pub fn maximal_homogeneous(ring: &Ring) -> Ideal {
        let gens = (0..ring.nvars())
            .map(|i| Polynomial::variable(ring, i))
            .collect();
        Ideal::new(ring, gens).unwrap()
    }

    /// Principal ideal `(f)`.
    pub fn principal(f: &Polynomial) -> Ideal {
        Ideal::new(f.ring(), vec![f.clone()]).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// True when every generator is homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// The cached reduced Groebner basis under `ord`.
    pub fn reduced_basis(&self, ord: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if self.is_zero_ideal() {
            return Err(Error::EmptyInput);
        }
        let mut cache = self.cache.lock().unwrap();
        if let Some(gb) = cache.get(&ord) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(reduce_basis(&buchberger(&self.gens, ord)?));
        cache.insert(ord, gb.clone());
        Ok(gb)
    }

    /// Membership via a zero normal form.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero_ideal() {
            return Ok(f.is_zero());
        }
        Ok(ideal_member(f, self.reduced_basis(MonomialOrder::Grevlex)?.as_ref()))
    }

    /// True when `1` lies in the ideal.
    pub fn is_unit(&self) -> Result<bool> {
        if self.is_zero_ideal() {
            return Ok(false);
        }
        Ok(self.reduced_basis(MonomialOrder::Grevlex)?.is_unit())
    }

    /// Ideal equality: reduced Groebner bases under grevlex coincide
    /// termwise.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        match (self.is_zero_ideal(), other.is_zero_ideal()) {
            (true, true) => return Ok(true),
            (true, false) | (false, true) => return Ok(false),
            _ => {}
        }
        let a = self.reduced_basis(MonomialOrder::Grevlex)?;
        let b = other.reduced_basis(MonomialOrder::Grevlex)?;
        Ok(a.polys() == b.polys())
    }

    /// Whether this ideal contains every generator of `other`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sum `I + J`: generated by the concatenated generator lists.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Product `I * J`: generated by the pairwise generator products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.try_mul(g)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Intersection `I ∩ J` by eliminating `t` from `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let aux = self.ring.with_aux_front();
        let t = Polynomial::variable(&aux, 0);
        let one_minus_t = Polynomial::one(&aux).try_sub(&t)?;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in &self.gens {
            gens.push(t.try_mul(&f.lift_aux_front(&aux))?);
        }
        for g in &other.gens {
            gens.push(one_minus_t.try_mul(&g.lift_aux_front(&aux))?);
        }
        let gb = reduce_basis(&buchberger(&gens, MonomialOrder::Elim(1))?);
        let kept: Vec<Polynomial> = gb
            .polys()
            .iter()
            .filter(|p| {
                p.leading_monomial(MonomialOrder::Elim(1))
                    .map(|m| m.exp(0) == 0)
                    .unwrap_or(false)
            })
            .map(|p| p.drop_aux_front(&self.ring))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Colon by a polynomial, `I : (f)`, via `(I ∩ (f)) / f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        if f.total_degree() == Some(0) {
            return Ok(self.clone()); // unit multiple
        }
        let meet = self.intersect(&Ideal::principal(f))?;
        let gens: Vec<Polynomial> = meet
            .gens
            .iter()
            .map(|g| {
                exact_div(g, f).expect("every generator of I ∩ (f) is a multiple of f")
            })
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// Colon by an ideal: the intersection of the colons by the
    /// generators of `other`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if other.is_zero_ideal() {
            return Err(Error::ZeroIdeal);
        }
        let mut acc: Option<Ideal> = None;
        for f in &other.gens {
            let part = self.colon_poly(f)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersect(&part)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Saturation `I : f^inf` by iterating the colon to its fixpoint.
    pub fn saturate_poly(&self, f: &Polynomial) -> Result<Ideal> {
        let mut current = self.clone();
        for _ in 0..MAX_COLON_ROUNDS {
            let next = current.colon_poly(f)?;
            if next.equals(&current)? {
                return Ok(next);
            }
            current = next;
        }
        Err(Error::IterationLimit(MAX_COLON_ROUNDS))
    }

    /// Saturation `I : J^inf` by iterating the ideal colon to its
    /// fixpoint.
    pub fn saturate_ideal(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.clone();
        for _ in 0..MAX_COLON_ROUNDS {
            let next = current.colon_ideal(other)?;
            if next.equals(&current)? {
                return Ok(next);
            }
            current = next;
        }
        Err(Error::IterationLimit(MAX_COLON_ROUNDS))
    }

    /// Whether a homogeneous ideal has no component supported on the
    /// homogeneous maximal ideal, i.e. `I : m = I`.
    pub fn is_saturated(&self) -> Result<bool> {
        if !self.homogeneous {
            return Err(Error::NotHomogeneous);
        }
        let m = Ideal::maximal_homogeneous(&self.ring);
        self.colon_ideal(&m)?.equals(self)
    }

    /// The affine field-equation ideal `I + (x1^q - x1, ..., xm^q - xm)`,
    /// which is the (radical) affine vanishing ideal of the rational
    /// points of `I`.
    pub fn affine_field_ideal(&self) -> Result<Ideal> {
        let ring = &self.ring;
        let q = ring.field().q();
        let mut gens = self.gens.clone();
        for i in 0..ring.nvars() {
            let x = Polynomial::variable(ring, i);
            gens.push(x.pow(q).try_sub(&x)?);
        }
        Ideal::new(ring, gens)
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
