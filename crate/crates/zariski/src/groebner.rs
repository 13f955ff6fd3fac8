//! Buchberger's algorithm, normal forms, and reduced Groebner bases.
//!
//! The pair queue runs in the normal strategy (smallest lcm degree
//! first) with the coprime-leading-term and chain criteria; divisor
//! selection in the division algorithm is the first basis element in
//! list order whose leading term divides, so every output is
//! deterministic and the reduced basis is the unique canonical form of
//! its ideal.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::poly::Term;
use crate::stats;

/// A Groebner basis of an ideal under a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    polys: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True when the basis is `{1}` (the unit ideal).
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].total_degree() == Some(0)
    }

    /// Checks the Buchberger criterion: every S-polynomial of basis pairs
    /// reduces to zero. Quadratic; intended for tests.
    pub fn verify(&self) -> bool {
        for i in 0..self.polys.len() {
            for j in (i + 1)..self.polys.len() {
                let s = s_polynomial(&self.polys[i], &self.polys[j], self.order);
                let r = normal_form(&s, &self.polys, self.order)
                    .expect("basis elements share a ring");
                if !r.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Remainder of multivariate division of `f` by the list `divisors`: no
/// term of the result is divisible by any leading term of a divisor, and
/// `f - result` lies in the ideal they generate.
pub fn normal_form(
    f: &Polynomial,
    divisors: &[Polynomial],
    ord: MonomialOrder,
) -> Result<Polynomial> {
    let nonzero: Vec<&Polynomial> = divisors.iter().filter(|d| !d.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::EmptyInput);
    }
    for d in &nonzero {
        if d.ring() != f.ring() {
            return Err(Error::RingMismatch);
        }
    }
    let table: Vec<Divisor> = nonzero.iter().map(|d| Divisor::new(d, ord)).collect();
    Ok(divide(f, &table, ord, false).remainder)
}

/// `f / divisor` when the division is exact, `None` otherwise.
pub(crate) fn exact_div(f: &Polynomial, divisor: &Polynomial) -> Option<Polynomial> {
    if f.is_zero() {
        return Some(Polynomial::zero(f.ring()));
    }
    let ord = MonomialOrder::Grevlex;
    let table = [Divisor::new(divisor, ord)];
    let out = divide(f, &table, ord, true);
    if out.remainder.is_zero() {
        Some(Polynomial::from_raw(f.ring(), out.quotient))
    } else {
        None
    }
}

struct Divisor {
    lt: Monomial,
    lc_inv: u32,
    /// Trailing terms, ascending under the division order.
    tail: Vec<Term>,
}

impl Divisor {
    fn new(p: &Polynomial, ord: MonomialOrder) -> Divisor {
        let mut sorted = p.sorted_terms(ord);
        debug_assert!(!sorted.is_empty());
        sorted.reverse(); // ascending
        let lead = sorted.pop().unwrap();
        let lc_inv = p
            .ring()
            .field()
            .inv_raw(lead.c)
            .expect("nonzero leading coefficient");
        Divisor {
            lt: lead.mon,
            lc_inv,
            tail: sorted,
        }
    }
}

struct DivisionOutput {
    remainder: Polynomial,
    /// Quotient terms for the single-divisor case, unsorted.
    quotient: Vec<Term>,
}

/// Core division loop over term lists kept ascending under `ord`.
fn divide(
    f: &Polynomial,
    divisors: &[Divisor],
    ord: MonomialOrder,
    early_exit_on_remainder: bool,
) -> DivisionOutput {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let mut work = f.sorted_terms(ord);
    work.reverse(); // ascending: pop() yields the current maximum
    let mut remainder: Vec<Term> = Vec::new();
    let mut quotient: Vec<Term> = Vec::new();

    'outer: while let Some(head) = work.pop() {
        for d in divisors {
            if let Some(u) = head.mon.checked_div(&d.lt) {
                stats::count_reduction_step();
                let c = field.mul_raw(head.c, d.lc_inv);
                if early_exit_on_remainder {
                    quotient.push(Term {
                        mon: u.clone(),
                        c,
                    });
                }
                if !d.tail.is_empty() {
                    let sub: Vec<Term> = d
                        .tail
                        .iter()
                        .map(|t| Term {
                            mon: t.mon.mul(&u),
                            c: field.mul_raw(t.c, c),
                        })
                        .collect();
                    work = sub_merge(work, &sub, &field, ord);
                }
                continue 'outer;
            }
        }
        if early_exit_on_remainder {
            return DivisionOutput {
                remainder: Polynomial::from_raw(&ring, vec![head]),
                quotient,
            };
        }
        remainder.push(head);
    }

    DivisionOutput {
        remainder: Polynomial::from_raw(&ring, remainder),
        quotient,
    }
}

/// `work - sub`, both ascending under `ord`.
fn sub_merge(work: Vec<Term>, sub: &[Term], field: &Field, ord: MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(work.len() + sub.len());
    let mut w = work.into_iter().peekable();
    let mut s = sub.iter().peekable();
    loop {
        match (w.peek(), s.peek()) {
            (Some(a), Some(b)) => match ord.cmp(&a.mon, &b.mon) {
                std::cmp::Ordering::Less => out.push(w.next().unwrap()),
                std::cmp::Ordering::Greater => {
                    let b = s.next().unwrap();
                    out.push(Term {
                        mon: b.mon.clone(),
                        c: field.neg_raw(b.c),
                    });
                }
                std::cmp::Ordering::Equal => {
                    let a = w.next().unwrap();
                    let b = s.next().unwrap();
                    let c = field.sub_raw(a.c, b.c);
                    if c != 0 {
                        out.push(Term { mon: a.mon, c });
                    }
                }
            },
            (Some(_), None) => out.push(w.next().unwrap()),
            (None, Some(_)) => {
                let b = s.next().unwrap();
                out.push(Term {
                    mon: b.mon.clone(),
                    c: field.neg_raw(b.c),
                });
            }
            (None, None) => return out,
        }
    }
}

/// S-polynomial of two nonzero polynomials (not normalized).
fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Polynomial {
    let field = f.ring().field();
    let lf = f.leading_raw(ord).expect("nonzero");
    let lg = g.leading_raw(ord).expect("nonzero");
    let lcm = lf.mon.lcm(&lg.mon);
    let uf = lcm.checked_div(&lf.mon).unwrap();
    let ug = lcm.checked_div(&lg.mon).unwrap();
    let cf = field.inv_raw(lf.c).unwrap();
    let cg = field.inv_raw(lg.c).unwrap();
    let a = f.mul_term(&uf, cf);
    let b = g.mul_term(&ug, cg);
    a.try_sub(&b).expect("same ring")
}

/// Buchberger's algorithm: a Groebner basis of the ideal generated by
/// `gens` under `ord`.
pub fn buchberger(gens: &[Polynomial], ord: MonomialOrder) -> Result<GroebnerBasis> {
    let nonzero: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let first = nonzero.first().ok_or(Error::EmptyInput)?;
    let ring = first.ring().clone();
    for g in &nonzero {
        if g.ring() != &ring {
            return Err(Error::RingMismatch);
        }
    }

    let mut basis: Vec<Polynomial> = Vec::with_capacity(nonzero.len());
    let mut leads: Vec<Monomial> = Vec::new();
    let mut divisors: Vec<Divisor> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    // min-heap on (lcm total degree, i, j)
    let mut queue: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();

    let push = |p: Polynomial,
                    basis: &mut Vec<Polynomial>,
                    leads: &mut Vec<Monomial>,
                    divisors: &mut Vec<Divisor>,
                    pending: &mut HashSet<(usize, usize)>,
                    queue: &mut BinaryHeap<Reverse<(u32, usize, usize)>>| {
        let p = p.monic(ord).expect("nonzero polynomial");
        let lt = p.leading_monomial(ord).unwrap();
        let j = basis.len();
        for (i, lead) in leads.iter().enumerate() {
            let deg = lead.lcm(&lt).total_degree();
            pending.insert((i, j));
            queue.push(Reverse((deg, i, j)));
        }
        divisors.push(Divisor::new(&p, ord));
        leads.push(lt);
        basis.push(p);
    };

    for g in nonzero {
        push(g, &mut basis, &mut leads, &mut divisors, &mut pending, &mut queue);
    }

    while let Some(Reverse((_, i, j))) = queue.pop() {
        pending.remove(&(i, j));
        // coprime criterion
        if leads[i].is_coprime_with(&leads[j]) {
            continue;
        }
        // chain criterion: a third element divides the lcm and both of
        // its pairs with i, j were already treated
        let lcm = leads[i].lcm(&leads[j]);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chained {
            continue;
        }
        stats::count_s_pair();
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = divide(&s, &divisors, ord, false).remainder;
        if !r.is_zero() {
            push(r, &mut basis, &mut leads, &mut divisors, &mut pending, &mut queue);
        }
    }

    Ok(GroebnerBasis {
        ring,
        polys: basis,
        order: ord,
        reduced: false,
    })
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The unique reduced Groebner basis of the ideal of `gb`: monic
/// generators, no term divisible by another leading term, sorted
/// ascending by leading monomial.
pub fn reduce_basis(gb: &GroebnerBasis) -> GroebnerBasis {
    let ord = gb.order;
    // drop elements whose leading term another element divides
    let mut sorted: Vec<&Polynomial> = gb.polys.iter().collect();
    sorted.sort_by(|a, b| {
        ord.cmp(
            &a.leading_monomial(ord).unwrap(),
            &b.leading_monomial(ord).unwrap(),
        )
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    let mut kept_lts: Vec<Monomial> = Vec::new();
    for p in sorted {
        let lt = p.leading_monomial(ord).unwrap();
        if !kept_lts.iter().any(|k| k.divides(&lt)) {
            minimal.push(p.monic(ord).unwrap());
            kept_lts.push(lt);
        }
    }
    // tail-reduce every element against the others
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        if minimal.len() == 1 {
            reduced.push(minimal[i].clone());
            break;
        }
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = normal_form(&minimal[i], &others, ord).expect("same ring");
        debug_assert!(!r.is_zero(), "minimal basis element reduced to zero");
        reduced.push(r.monic(ord).unwrap());
    }
    reduced.sort_by(|a, b| {
        ord.cmp(
            &a.leading_monomial(ord).unwrap(),
            &b.leading_monomial(ord).unwrap(),
        )
    });
    GroebnerBasis {
        ring: gb.ring.clone(),
        polys: reduced,
        order: ord,
        reduced: true,
    }
}

/// Membership test `f` in the ideal of `gb` via a zero normal form.
pub fn ideal_member(f: &Polynomial, gb: &GroebnerBasis) -> bool {
    if f.is_zero() {
        return true;
    }
    normal_form(f, &gb.polys, gb.order)
        .map(|r| r.is_zero())
        .unwrap_or(false)
}
