//! Hilbert series, dimension, and degree of graded quotients `S/I`.
//!
//! Everything reduces to the leading-term ideal: the Hilbert function of
//! `S/I` equals that of `S/LT(I)`, and for a monomial ideal the series
//! numerator follows from the pivot recursion
//! `K(M) = K(M + (x)) + t * K(M : x)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Hilbert data of a graded quotient `S/I`: the series numerator
/// `N(t)` over `(1-t)^dim`, the Krull dimension of `S/I`, the degree
/// `N(1)`, and the height `m - dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub numerator: Vec<i64>,
    pub dim: usize,
    pub degree: u64,
    pub height: usize,
}

/// The monomial ideal generated by the leading terms of the reduced
/// Groebner basis of a homogeneous ideal.
pub fn leading_term_ideal(ideal: &Ideal, ord: MonomialOrder) -> Result<Ideal> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if ideal.is_zero_ideal() {
        return Ok(Ideal::zero(ideal.ring()));
    }
    let gb = ideal.reduced_basis(ord)?;
    let ring = ideal.ring();
    let one = ring.field().one();
    let gens = gb
        .polys()
        .iter()
        .map(|p| {
            let lm = p.leading_monomial(ord).expect("basis elements are nonzero");
            Polynomial::from_terms(ring, [(lm, one.clone())])
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// Hilbert data of `S/M` for a monomial ideal `M`.
///
/// Fails with [`Error::UnitIdeal`] when `1` lies in `M` (the zero ring
/// has no degree).
pub fn hilbert_series(monomial_ideal: &Ideal) -> Result<HilbertData> {
    let nvars = monomial_ideal.ring().nvars();
    let gens: Vec<Monomial> = monomial_ideal
        .generators()
        .iter()
        .map(|g| {
            assert!(
                g.num_terms() == 1,
                "hilbert_series requires a monomial ideal"
            );
            g.terms_raw()[0].mon.clone()
        })
        .collect();
    let mut memo: HashMap<Vec<Vec<u32>>, Vec<i64>> = HashMap::new();
    let k = numerator_full(minimalize(gens), nvars, &mut memo);
    hilbert_data_from_full_numerator(k, nvars)
}

fn hilbert_data_from_full_numerator(mut k: Vec<i64>, nvars: usize) -> Result<HilbertData> {
    trim(&mut k);
    if k.is_empty() {
        return Err(Error::UnitIdeal);
    }
    let mut pole_drop = 0usize;
    while k.iter().sum::<i64>() == 0 {
        k = divide_by_one_minus_t(&k);
        pole_drop += 1;
    }
    debug_assert!(pole_drop <= nvars);
    let degree = k.iter().sum::<i64>();
    debug_assert!(degree > 0, "degree of a proper ideal is positive");
    Ok(HilbertData {
        numerator: k,
        dim: nvars - pole_drop,
        degree: degree as u64,
        height: pole_drop,
    })
}

/// `K(t) / (1 - t)` for a polynomial with `K(1) = 0` (prefix sums).
fn divide_by_one_minus_t(k: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(k.len().saturating_sub(1));
    let mut acc = 0i64;
    for &c in &k[..k.len() - 1] {
        acc += c;
        out.push(acc);
    }
    trim(&mut out);
    out
}

fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `K(t)` of `S/M` written over the full `(1-t)^nvars`.
fn numerator_full(
    gens: Vec<Monomial>,
    nvars: usize,
    memo: &mut HashMap<Vec<Vec<u32>>, Vec<i64>>,
) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    // pure powers of distinct variables: product formula
    let support = |g: &Monomial| g.exps().iter().filter(|&&e| e > 0).count();
    if gens.iter().all(|g| support(g) == 1) {
        let mut k = vec![1i64];
        for g in &gens {
            k = mul_one_minus_power(&k, g.total_degree() as usize);
        }
        return k;
    }

    let key: Vec<Vec<u32>> = gens.iter().map(|g| g.exps().to_vec()).collect();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }

    // pivot: the most frequent variable among non-pure-power generators
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        if support(g) > 1 {
            for (i, &e) in g.exps().iter().enumerate() {
                if e > 0 {
                    counts[i] += 1;
                }
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i)
        .unwrap();
    debug_assert!(counts[pivot] > 0);

    // K(M) = K(M + (x)) + t * K(M : x)
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exp(pivot) == 0)
        .cloned()
        .collect();
    plus.push(Monomial::variable(nvars, pivot));
    let plus_k = numerator_full(minimalize(plus), nvars, memo);

    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            if g.exp(pivot) > 0 {
                g.checked_div(&Monomial::variable(nvars, pivot)).unwrap()
            } else {
                g.clone()
            }
        })
        .collect();
    let colon_k = numerator_full(minimalize(colon), nvars, memo);

    let mut out = plus_k;
    if out.len() < colon_k.len() + 1 {
        out.resize(colon_k.len() + 1, 0);
    }
    for (i, &c) in colon_k.iter().enumerate() {
        out[i + 1] += c;
    }
    trim(&mut out);
    memo.insert(key, out.clone());
    out
}

/// `k * (1 - t^d)`.
fn mul_one_minus_power(k: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; k.len() + d];
    for (i, &c) in k.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    trim(&mut out);
    out
}

/// Removes duplicate and divisible generators.
fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut sorted = gens;
    sorted.sort_by_key(|g| g.total_degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for g in sorted {
        if !out.iter().any(|kept| kept.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Hilbert data of `S/I` for a proper homogeneous ideal, through the
/// grevlex leading-term ideal.
pub fn hilbert_data(ideal: &Ideal) -> Result<HilbertData> {
    let lt = leading_term_ideal(ideal, MonomialOrder::Grevlex)?;
    hilbert_series(&lt)
}

/// `deg(S/I)`.
pub fn degree_of(ideal: &Ideal) -> Result<u64> {
    Ok(hilbert_data(ideal)?.degree)
}

/// Krull dimension of `S/I`.
pub fn dim_of(ideal: &Ideal) -> Result<usize> {
    Ok(hilbert_data(ideal)?.dim)
}

/// `height(I) = m - dim(S/I)`.
pub fn height_of(ideal: &Ideal) -> Result<usize> {
    Ok(hilbert_data(ideal)?.height)
}

/// Hilbert function `HF(d) = dim_K (S/I)_d`: the number of degree-`d`
/// monomials outside the leading-term ideal.
pub fn hilbert_function(ideal: &Ideal, d: u32) -> Result<u64> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let nvars = ideal.ring().nvars();
    let k = if ideal.is_zero_ideal() {
        vec![1i64]
    } else {
        let lt = leading_term_ideal(ideal, MonomialOrder::Grevlex)?;
        let gens: Vec<Monomial> = lt
            .generators()
            .iter()
            .map(|g| g.terms_raw()[0].mon.clone())
            .collect();
        let mut memo = HashMap::new();
        numerator_full(minimalize(gens), nvars, &mut memo)
    };
    // coefficient of t^d in K(t) / (1-t)^nvars
    let mut series = vec![0i64; d as usize + 1];
    for (i, &c) in k.iter().enumerate().take(d as usize + 1) {
        series[i] = c;
    }
    for _ in 0..nvars {
        for i in 1..series.len() {
            series[i] += series[i - 1];
        }
    }
    let hf = series[d as usize];
    debug_assert!(hf >= 0);
    Ok(hf as u64)
}

/// Smallest `d` with `HF(d) = HF(d+1)`, together with that value.
///
/// Certifies the eventual value only for Cohen-Macaulay dimension-one
/// quotients (vanishing ideals of point sets), where the Hilbert
/// function is nondecreasing and two equal consecutive values imply
/// constancy. Capped at `2 (q+1) m`.
pub fn regularity_plateau(ideal: &Ideal) -> Result<(u32, u64)> {
    let cap = 2 * (ideal.ring().field().q() + 1) * ideal.ring().nvars() as u32;
    let mut prev = hilbert_function(ideal, 0)?;
    for d in 1..=cap {
        let next = hilbert_function(ideal, d)?;
        if next == prev {
            return Ok((d - 1, prev));
        }
        prev = next;
    }
    Err(Error::PlateauNotFound(cap))
}

/// Number of points of `V_X(F)`: `0` when `(I(X) : (F)) = I(X)`, and
/// `deg(S/(I(X) + (F)))` otherwise.
///
/// `x_ideal` must be the vanishing ideal of a finite point set
/// (saturated, `dim <= 1`); `F` must be homogeneous and not all zero.
pub fn count_common_zeros(x_ideal: &Ideal, polys: &[Polynomial]) -> Result<u64> {
    if !x_ideal.is_homogeneous() || polys.iter().any(|f| !f.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let f_ideal = Ideal::new(x_ideal.ring(), polys.to_vec())?;
    if f_ideal.is_zero_ideal() {
        return Err(Error::ZeroIdeal);
    }
    if x_ideal.colon_ideal(&f_ideal)?.equals(x_ideal)? {
        Ok(0)
    } else {
        degree_of(&x_ideal.sum(&f_ideal)?)
    }
}
