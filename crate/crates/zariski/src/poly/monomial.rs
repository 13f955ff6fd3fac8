//! Exponent vectors and the three monomial orders used by the crate.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A power product `x1^e1 * ... * xm^em`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Monomial {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    /// The monomial 1 in `nvars` variables.
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
        }
    }

    /// `x_i` (0-based) in `nvars` variables.
    pub fn variable(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor` when `divisor` divides `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), divisor.nvars());
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&divisor.exps) {
            if b > a {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degree in the first `b` variables (the block an elimination order
    /// compares first).
    pub fn block_degree(&self, b: usize) -> u32 {
        self.exps.iter().take(b).sum()
    }

    pub(crate) fn prepend_var(&self, extra: u32) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + 1);
        exps.push(extra);
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    pub(crate) fn drop_first_var(&self) -> Monomial {
        Monomial {
            exps: self.exps[1..].iter().copied().collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A total, multiplicative order on monomials with 1 minimal.
///
/// `Elim(b)` compares the total degree in the first `b` variables and
/// breaks ties by grevlex on the full vector, which makes it an
/// elimination order for those variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    Elim(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::Grevlex => cmp_grevlex(a, b),
            MonomialOrder::Elim(k) => a
                .block_degree(*k)
                .cmp(&b.block_degree(*k))
                .then_with(|| cmp_grevlex(a, b)),
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Elim(k) => write!(f, "elim({k})"),
        }
    }
}

fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps().iter().zip(b.exps()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: the monomial with the smaller exponent at the
    // rightmost difference is the larger one.
    for (x, y) in a.exps().iter().zip(b.exps()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}
