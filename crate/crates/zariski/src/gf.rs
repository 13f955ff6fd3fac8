//! Exact arithmetic in `F_q`, `q = p^k`.
//!
//! A [`Field`] is built from `q` alone: the characteristic and extension
//! degree are recovered by factoring, and the modulus is the canonical
//! (lexicographically smallest) monic irreducible of degree `k` over
//! `F_p`, so two fields with the same `q` are always identical.
//!
//! Elements are encoded as integers in `[0, q)` in base `p`, least
//! significant coefficient first; `0` and `1` are literal, and `g`
//! denotes the residue class of `x` modulo the field modulus.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 65536;
/// Largest supported extension degree.
pub const MAX_EXTENSION_DEGREE: u32 = 8;

/// Construction data of `F_{p^k}`: characteristic, extension degree and
/// the canonical modulus (coefficient vector, low to high, monic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
    pub modulus: Vec<u64>,
}

struct FieldData {
    spec: FieldSpec,
    q: u32,
    /// exp[i] = g0^i for a fixed multiplicative generator g0, i in [0, q-1).
    exp: Vec<u32>,
    /// log[exp[i]] = i; log[0] is unused.
    log: Vec<u32>,
    inv: Vec<u32>,
    neg: Vec<u32>,
    /// Dense addition table for small fields; empty above [`ADD_TABLE_LIMIT`].
    add: Vec<u32>,
}

const ADD_TABLE_LIMIT: u32 = 512;

/// A finite field `F_q`. Cheap to clone and share; all operations are pure.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.spec.p == other.0.spec.p && self.0.spec.k == other.0.spec.k)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.spec.p.hash(state);
        self.0.spec.k.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(q={})", self.0.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

impl Field {
    /// Builds `F_q`. Fails with [`Error::NotPrimePower`] unless `q = p^k`
    /// for a prime `p`, and with [`Error::FieldTooLarge`] beyond `p^8` or
    /// `2^16`.
    pub fn new(q: u64) -> Result<Field> {
        let (p, k) = factor_prime_power(q)?;
        if q > MAX_FIELD_SIZE || k > MAX_EXTENSION_DEGREE {
            return Err(Error::FieldTooLarge { q });
        }
        let modulus = canonical_modulus(p, k);
        let spec = FieldSpec { p, k, modulus };
        Ok(Field(Arc::new(FieldData::build(spec, q as u32))))
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn characteristic(&self) -> u64 {
        self.0.spec.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.spec.k
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            val: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            val: 1,
        }
    }

    /// The residue class of `x` (the `g` of the element grammar), present
    /// only in proper extensions.
    pub fn generator(&self) -> Option<FieldElement> {
        if self.0.spec.k >= 2 {
            Some(FieldElement {
                field: self.clone(),
                val: self.0.spec.p as u32,
            })
        } else {
            None
        }
    }

    /// Embeds an integer through the prime subfield (reduction mod `p`).
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.0.spec.p as i64;
        let r = n.rem_euclid(p) as u32;
        FieldElement {
            field: self.clone(),
            val: r,
        }
    }

    /// Element with the given canonical encoding in `[0, q)`.
    pub fn from_index(&self, index: u32) -> FieldElement {
        assert!(index < self.0.q, "element index {index} out of range");
        FieldElement {
            field: self.clone(),
            val: index,
        }
    }

    /// All `q` elements in canonical encoding order `0, 1, ..., q-1`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |v| self.from_index(v))
    }

    /// Elements of the subfield `F_{p^l}` for `l | k`, in encoding order.
    pub fn subfield_elements(&self, l: u32) -> Result<Vec<FieldElement>> {
        if l == 0 || !self.0.spec.k.is_multiple_of(l) {
            return Err(Error::NotPrimePower(self.0.spec.p.pow(l.max(1))));
        }
        let sub_order = self.0.spec.p.pow(l);
        Ok(self
            .elements()
            .filter(|a| a.pow(sub_order).val == a.val)
            .collect())
    }

    #[inline]
    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        let d = &*self.0;
        if d.spec.p == 2 {
            return a ^ b;
        }
        if d.spec.k == 1 {
            let s = a as u64 + b as u64;
            return (s % d.spec.p) as u32;
        }
        if !d.add.is_empty() {
            return d.add[(a as usize) * (d.q as usize) + b as usize];
        }
        digitwise_add(a, b, d.spec.p as u32, d.spec.k)
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = &*self.0;
        let idx = d.log[a as usize] + d.log[b as usize];
        let n = d.q - 1;
        d.exp[if idx >= n { idx - n } else { idx } as usize]
    }

    #[inline]
    pub(crate) fn inv_raw(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.0.inv[a as usize])
    }

    pub(crate) fn pow_raw(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = (self.0.q - 1) as u64;
        let e = (e % n) as u32;
        let idx = (self.0.log[a as usize] as u64 * e as u64 % n) as usize;
        self.0.exp[idx]
    }
}

fn digitwise_add(a: u32, b: u32, p: u32, k: u32) -> u32 {
    let mut out = 0u32;
    let mut base = 1u32;
    let (mut a, mut b) = (a, b);
    for _ in 0..k {
        let s = (a % p + b % p) % p;
        out += s * base;
        a /= p;
        b /= p;
        base *= p;
    }
    out
}

impl FieldData {
    fn build(spec: FieldSpec, q: u32) -> FieldData {
        let p = spec.p as u32;
        let k = spec.k;
        // Multiplication before tables exist: polynomial product mod the
        // modulus, on base-p digit vectors.
        let mul_slow = |a: u32, b: u32| -> u32 {
            let av = digits(a as u64, spec.p, k);
            let bv = digits(b as u64, spec.p, k);
            let mut prod = vec![0u64; (2 * k) as usize];
            for (i, &ai) in av.iter().enumerate() {
                if ai == 0 {
                    continue;
                }
                for (j, &bj) in bv.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + ai * bj) % spec.p;
                }
            }
            poly_mod_in_place(&mut prod, &spec.modulus, spec.p);
            undigits(&prod, spec.p) as u32
        };

        let n = q - 1;
        let factors = prime_factors(n as u64);
        let mut g0 = 0u32;
        for cand in 1..q {
            let ok = factors.iter().all(|&r| {
                let mut acc = 1u32;
                let mut e = (n as u64 / r) as u32;
                let mut base = cand;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = mul_slow(acc, base);
                    }
                    base = mul_slow(base, base);
                    e >>= 1;
                }
                acc != 1
            });
            if ok {
                g0 = cand;
                break;
            }
        }
        debug_assert!(g0 != 0);

        let mut exp = vec![0u32; n as usize];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u32;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = acc;
            log[acc as usize] = i as u32;
            acc = mul_slow(acc, g0);
        }
        debug_assert_eq!(acc, 1, "generator order mismatch");

        let mut inv = vec![0u32; q as usize];
        for a in 1..q {
            let i = log[a as usize];
            inv[a as usize] = exp[((n - i) % n) as usize];
        }

        let mut neg = vec![0u32; q as usize];
        for a in 0..q {
            neg[a as usize] = if spec.p == 2 {
                a
            } else {
                let av = digits(a as u64, spec.p, k);
                let nv: Vec<u64> = av.iter().map(|&d| (spec.p - d) % spec.p).collect();
                undigits(&nv, spec.p) as u32
            };
        }

        let add = if q <= ADD_TABLE_LIMIT && p != 2 && k > 1 {
            let mut t = vec![0u32; (q as usize) * (q as usize)];
            for a in 0..q {
                for b in 0..q {
                    t[(a as usize) * (q as usize) + b as usize] = digitwise_add(a, b, p, k);
                }
            }
            t
        } else {
            Vec::new()
        };

        FieldData {
            spec,
            q,
            exp,
            log,
            inv,
            neg,
            add,
        }
    }
}

fn digits(mut n: u64, p: u64, k: u32) -> Vec<u64> {
    let mut out = vec![0u64; k as usize];
    for d in out.iter_mut() {
        *d = n % p;
        n /= p;
    }
    out
}

fn undigits(ds: &[u64], p: u64) -> u64 {
    let mut out = 0u64;
    for &d in ds.iter().rev() {
        out = out * p + d;
    }
    out
}

/// Reduces a digit vector modulo a monic polynomial over `F_p`.
fn poly_mod_in_place(f: &mut Vec<u64>, modulus: &[u64], p: u64) {
    let deg_m = modulus.len() - 1;
    while f.len() > deg_m {
        let lead = *f.last().unwrap();
        let d = f.len() - 1;
        if lead != 0 {
            for (i, &mc) in modulus.iter().enumerate().take(deg_m) {
                let sub = (lead * mc) % p;
                let idx = d - deg_m + i;
                f[idx] = (f[idx] + p * p - sub) % p;
            }
        }
        f.pop();
    }
}

fn factor_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 0u64;
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Ok((q, 1)); // q itself is prime
    }
    let mut rest = q;
    let mut k = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, k))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The lexicographically smallest monic irreducible of degree `k` over
/// `F_p`, comparing coefficient tuples `(a_{k-1}, ..., a_0)` ascending.
fn canonical_modulus(p: u64, k: u32) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1]; // x
    }
    // Tuple order coincides with the numeric order of sum a_i p^i.
    for n in 0..p.pow(k) {
        let mut cand = digits(n, p, k);
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("an irreducible of degree {k} over F_{p} always exists")
}

/// Irreducibility over `F_p`: root search for degree <= 3, trial division
/// by all lower-degree monic polynomials up to degree k/2 otherwise.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k <= 1 {
        return k == 1;
    }
    let eval = |a: u64| -> u64 {
        let mut acc = 0u64;
        for &c in f.iter().rev() {
            acc = (acc * a + c) % p;
        }
        acc
    };
    if (0..p).any(|a| eval(a) == 0) {
        return false;
    }
    if k <= 3 {
        return true;
    }
    for d in 2..=(k / 2) {
        for n in 0..p.pow(d as u32) {
            let mut g = digits(n, p, d as u32);
            g.push(1);
            if poly_divides(&g, f, p) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(g: &[u64], f: &[u64], p: u64) -> bool {
    let mut r: Vec<u64> = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for i in 0..=dg {
                r[shift + i] = (r[shift + i] + p * p - (lead * g[i]) % p) % p;
            }
        }
        r.pop();
    }
    r.iter().all(|&c| c == 0)
}

/// An element of a [`Field`]. Immutable; arithmetic is exact.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    val: u32,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Canonical integer encoding in `[0, q)`.
    pub fn index(&self) -> u32 {
        self.val
    }

    pub fn is_zero(&self) -> bool {
        self.val == 0
    }

    pub fn is_one(&self) -> bool {
        self.val == 1
    }

    pub fn try_add(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.same_field(rhs)?;
        Ok(self.lift(self.field.add_raw(self.val, rhs.val)))
    }

    pub fn try_sub(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.same_field(rhs)?;
        Ok(self.lift(self.field.sub_raw(self.val, rhs.val)))
    }

    pub fn try_mul(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.same_field(rhs)?;
        Ok(self.lift(self.field.mul_raw(self.val, rhs.val)))
    }

    /// Multiplicative inverse; [`Error::DivisionByZero`] on 0.
    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.lift(self.field.inv_raw(self.val)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.lift(self.field.pow_raw(self.val, e))
    }

    fn same_field(&self, rhs: &FieldElement) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn lift(&self, val: u32) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            val,
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.val == other.val
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.val.cmp(&other.val)
    }
}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.val.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self, self.field)
    }
}

macro_rules! fe_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field mismatch")
            }
        }
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$checked(&rhs).expect("field mismatch")
            }
        }
    };
}

fe_binop!(Add, add, try_add);
fe_binop!(Sub, sub, try_sub);
fe_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.lift(self.field.neg_raw(self.val))
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Canonical text form: decimal in prime fields, a sum of powers of `g`
/// with prime-subfield coefficients otherwise, highest power first.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.field.characteristic();
        let k = self.field.extension_degree();
        if k == 1 || self.val == 0 {
            return write!(f, "{}", self.val % p as u32);
        }
        let ds = digits(self.val as u64, p, k);
        let mut first = true;
        for i in (0..ds.len()).rev() {
            let c = ds[i];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "g")?,
                (1, c) => write!(f, "{c}*g")?,
                (i, 1) => write!(f, "g^{i}")?,
                (i, c) => write!(f, "{c}*g^{i}")?,
            }
        }
        Ok(())
    }
}

/// Parses the element grammar `int | g | e^int | e*e | e+e | e-e | (e)`.
pub fn parse_element(field: &Field, text: &str) -> Result<FieldElement> {
    let mut p = ElementParser {
        field,
        chars: text.char_indices().collect(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct ElementParser<'a> {
    field: &'a Field,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl ElementParser<'_> {
    fn err(&self, msg: &str) -> Error {
        let col = self
            .chars
            .get(self.pos)
            .map(|&(i, _)| i + 1)
            .unwrap_or(self.chars.last().map(|&(i, _)| i + 2).unwrap_or(1));
        Error::parse(1, col, msg)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expr(&mut self) -> Result<FieldElement> {
        self.skip_ws();
        let negate = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc + t;
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc - t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FieldElement> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                let t = self.factor()?;
                acc = acc * t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<FieldElement> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<FieldElement> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some('g') => {
                self.pos += 1;
                self.field
                    .generator()
                    .ok_or_else(|| self.err("`g` is only defined in proper extension fields"))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.field.from_int(n as i64))
            }
            _ => Err(self.err("expected an integer, `g`, or `(`")),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut n: u64 = 0;
        while let Some(c) = self.peek() {
            if let Some(d) = c.to_digit(10) {
                n = n
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(d as u64))
                    .ok_or_else(|| self.err("integer literal too large"))?;
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_small_q(limit: u32) -> Vec<u32> {
        (2..=limit).filter(|&q| Field::new(q as u64).is_ok()).collect()
    }

    #[test]
    fn make_field_examples() {
        let f2 = Field::new(2).unwrap();
        assert_eq!((f2.characteristic(), f2.extension_degree()), (2, 1));
        assert_eq!(f2.spec().modulus, vec![0, 1]);

        let f4 = Field::new(4).unwrap();
        assert_eq!((f4.characteristic(), f4.extension_degree()), (2, 2));
        // x^2 + x + 1
        assert_eq!(f4.spec().modulus, vec![1, 1, 1]);

        assert_eq!(Field::new(12), Err(Error::NotPrimePower(12)));
        assert_eq!(Field::new(0), Err(Error::NotPrimePower(0)));
        assert_eq!(Field::new(1), Err(Error::NotPrimePower(1)));
    }

    #[test]
    fn field_121_works_and_big_fields_fail() {
        let f = Field::new(121).unwrap();
        assert_eq!(f.spec().modulus, vec![1, 0, 1]); // x^2 + 1
        for a in f.elements() {
            if !a.is_zero() {
                assert!((a.inv().unwrap() * a).is_one());
            }
        }
        assert!(matches!(Field::new(3u64.pow(11)), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn add_mul_examples() {
        let f3 = Field::new(3).unwrap();
        assert_eq!(f3.from_int(2) + f3.from_int(1), f3.zero());

        let f4 = Field::new(4).unwrap();
        let g = f4.generator().unwrap();
        assert_eq!(&g * &g, &g + &f4.one()); // forced by g^2+g+1=0
        for a in f4.elements() {
            assert!((&a + &a).is_zero()); // characteristic 2
        }
    }

    #[test]
    fn inv_examples() {
        let f5 = Field::new(5).unwrap();
        assert_eq!(f5.from_int(2).inv().unwrap(), f5.from_int(3));
        let f4 = Field::new(4).unwrap();
        let g = f4.generator().unwrap();
        assert_eq!(g.inv().unwrap(), &g + &f4.one());
        assert_eq!(f4.one().inv().unwrap(), f4.one());
        assert_eq!(f4.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn elements_enumeration() {
        let f2 = Field::new(2).unwrap();
        let els: Vec<u32> = f2.elements().map(|a| a.index()).collect();
        assert_eq!(els, vec![0, 1]);

        let f4 = Field::new(4).unwrap();
        let names: Vec<String> = f4.elements().map(|a| a.to_string()).collect();
        assert_eq!(names, vec!["0", "1", "g", "g+1"]);

        assert_eq!(Field::new(9).unwrap().elements().count(), 9);
    }

    #[test]
    fn field_mismatch_detected() {
        let f2 = Field::new(2).unwrap();
        let f3 = Field::new(3).unwrap();
        assert_eq!(f2.one().try_add(&f3.one()), Err(Error::FieldMismatch));
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in all_small_q(16) {
            let f = Field::new(q as u64).unwrap();
            let els: Vec<FieldElement> = f.elements().collect();
            for a in &els {
                assert_eq!(&(a + &f.zero()), a);
                assert_eq!(&(a * &f.one()), a);
                assert!((a + &-a).is_zero());
                for b in &els {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for c in &els {
                        assert_eq!((a + b) + c.clone(), a + &(b + c));
                        assert_eq!((a * b) * c.clone(), a * &(b * c));
                        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive_small() {
        for q in all_small_q(16) {
            let f = Field::new(q as u64).unwrap();
            let p = f.characteristic();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!((&a + &b).pow(p), a.pow(p) + b.pow(p));
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_structure_up_to_64() {
        for q in all_small_q(64) {
            let f = Field::new(q as u64).unwrap();
            let mut found_primitive = false;
            for a in f.elements() {
                assert_eq!(a.pow(q as u64), a); // a^q = a
                if !a.is_zero() {
                    assert!(a.pow(q as u64 - 1).is_one()); // a^{q-1} = 1
                    let order = (1..=q as u64 - 1)
                        .find(|&e| a.pow(e).is_one())
                        .unwrap();
                    assert_eq!((q as u64 - 1) % order, 0);
                    found_primitive |= order == q as u64 - 1;
                }
            }
            assert!(found_primitive, "F_{q}^* must be cyclic");
        }
    }

    #[test]
    fn parse_format_round_trip() {
        for q in [2u64, 3, 4, 5, 8, 9, 16, 25, 27] {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                let text = a.to_string();
                assert_eq!(parse_element(&f, &text).unwrap(), a, "q={q} text={text}");
            }
        }
    }

    #[test]
    fn parse_examples() {
        let f4 = Field::new(4).unwrap();
        let e = parse_element(&f4, "g+1").unwrap();
        assert_eq!(e.index(), 3); // rep (1,1)

        let f5 = Field::new(5).unwrap();
        assert_eq!(parse_element(&f5, "7").unwrap(), f5.from_int(2));

        let f3 = Field::new(3).unwrap();
        assert!(matches!(parse_element(&f3, "g"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&f4, "g+"), Err(Error::Parse { .. })));
        assert_eq!(parse_element(&f4, "g^2*g+(1+g)").unwrap(), f4.from_index(2) ,
            "g^3=1 so g^2*g=1, plus 1+g gives g");
    }

    #[test]
    fn subfields() {
        let f4 = Field::new(4).unwrap();
        let sub: Vec<u32> = f4.subfield_elements(1).unwrap().iter().map(|a| a.index()).collect();
        assert_eq!(sub, vec![0, 1]);
        let f16 = Field::new(16).unwrap();
        assert_eq!(f16.subfield_elements(2).unwrap().len(), 4);
        assert_eq!(f16.subfield_elements(4).unwrap().len(), 16);
    }
}
