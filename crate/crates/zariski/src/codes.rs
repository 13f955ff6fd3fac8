//! Parameters of projective Reed-Muller-type evaluation codes and of
//! affine variety codes.
//!
//! For a point set `X` and degree `d`, the code `C_X(d)` is the image of
//! the degree-`d` forms under normalized evaluation at the points of
//! `X`; with the pivot normalization the normalizers `f_i = x_pivot^d`
//! satisfy `f_i(P_i) = 1`, so the generator matrix is plain evaluation.
//! Its rank is the code dimension and equals the Hilbert function of
//! `S/I(X)` at `d`; the minimum distance comes from exhaustive search
//! over the message space when that is small enough.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::hilbert;
use crate::ideal::Ideal;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::projective::{vanishing_ideal_oracle, PointSet};
use crate::{DEFAULT_MESSAGE_LIMIT, DEFAULT_POINT_LIMIT};

/// Evaluations of the degree-`d` monomial basis at a point set.
#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    field: Field,
    monomials: Vec<Monomial>,
    /// `rows[r][c]` is the value of monomial `r` at point `c`.
    rows: Vec<Vec<u32>>,
}

impl GeneratorMatrix {
    /// One row per degree-`d` monomial (descending grevlex), one column
    /// per point of `X` in canonical order.
    pub fn new(points: &PointSet, ring: &Ring, d: u32) -> Result<GeneratorMatrix> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let monomials = monomials_of_degree(ring.nvars(), d);
        let rows = monomials
            .iter()
            .map(|mon| {
                let poly =
                    Polynomial::from_terms(ring, [(mon.clone(), ring.field().one())])?;
                Ok(points
                    .iter()
                    .map(|p| poly.evaluate_raw(p.coords_raw()))
                    .collect())
            })
            .collect::<Result<Vec<Vec<u32>>>>()?;
        Ok(GeneratorMatrix {
            field: ring.field().clone(),
            monomials,
            rows,
        })
    }

    /// Number of columns (the code length `n`).
    pub fn ncols(&self) -> usize {
        self.rows.first().map(|r| r.len()).unwrap_or(0)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Row labels: the degree-`d` monomials, descending grevlex.
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn entry(&self, row: usize, col: usize) -> crate::gf::FieldElement {
        self.field.from_index(self.rows[row][col])
    }

    pub fn rank(&self) -> usize {
        echelon(&self.field, self.rows.clone()).len()
    }

    /// A row basis of the code (nonzero rows of the row echelon form).
    pub fn row_basis(&self) -> Vec<Vec<u32>> {
        echelon(&self.field, self.rows.clone())
    }

    /// CSV of field-element text, one line per matrix row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|&c| self.field.from_index(c).to_string())
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// All monomials of total degree `d` in `nvars` variables, descending
/// grevlex.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, d);
    out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(Monomial::new(current.iter().copied()));
        return;
    }
    for e in 0..=remaining {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

/// Row echelon form over `F_q`; returns the nonzero rows.
fn echelon(field: &Field, mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv_raw(rows[rank][col]).unwrap();
        for x in rows[rank][col..].iter_mut() {
            *x = field.mul_raw(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = field.sub_raw(*x, field.mul_raw(factor, pv));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// Basic parameters of `C_X(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeParameters {
    pub q: u32,
    pub m: usize,
    pub d: u32,
    /// Code length `n = |X|`.
    pub n: usize,
    /// Code dimension `k = rank = HF_{S/I(X)}(d)`.
    pub k: usize,
    /// Minimum Hamming distance, or `None` when `q^k` exceeds the
    /// search limit (never an estimate).
    pub d_min: Option<u64>,
}

/// Length, dimension, and (when the message space is small enough)
/// minimum distance of the projective Reed-Muller-type code `C_X(d)`.
pub fn code_parameters(points: &PointSet, ring: &Ring, d: u32) -> Result<CodeParameters> {
    code_parameters_bounded(points, ring, d, DEFAULT_MESSAGE_LIMIT)
}

pub fn code_parameters_bounded(
    points: &PointSet,
    ring: &Ring,
    d: u32,
    message_limit: u128,
) -> Result<CodeParameters> {
    let matrix = GeneratorMatrix::new(points, ring, d)?;
    let basis = matrix.row_basis();
    let k = basis.len();
    // The dimension must equal the Hilbert function of S/I(X) at d:
    // the kernel of the evaluation map is exactly I(X)_d.
    let oracle = vanishing_ideal_oracle(points, ring)?;
    let hf = hilbert::hilbert_function(&oracle, d)?;
    assert_eq!(
        k as u64, hf,
        "generator-matrix rank disagrees with the Hilbert function"
    );
    let d_min = min_distance(ring.field(), &basis, message_limit);
    Ok(CodeParameters {
        q: ring.field().q(),
        m: ring.nvars(),
        d,
        n: points.len(),
        k,
        d_min,
    })
}

/// Recomputes the parameters with one explicit normalizer `f` of degree
/// `d` used for every point (the `f_i` in the evaluation map). `f` must
/// not vanish at any point of `X`; the parameters do not depend on this
/// choice.
pub fn code_parameters_with_normalizer(
    points: &PointSet,
    ring: &Ring,
    d: u32,
    normalizer: &Polynomial,
    message_limit: u128,
) -> Result<CodeParameters> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if normalizer.homogeneous_degree() != Some(d) {
        return Err(Error::NotHomogeneous);
    }
    let field = ring.field().clone();
    let mut scales = Vec::with_capacity(points.len());
    for p in points.iter() {
        let v = normalizer.evaluate_raw(p.coords_raw());
        if v == 0 {
            return Err(Error::NonvanishingWitnessInvalid);
        }
        scales.push(field.inv_raw(v)?);
    }
    let plain = GeneratorMatrix::new(points, ring, d)?;
    let rows: Vec<Vec<u32>> = plain
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .zip(&scales)
                .map(|(&c, &s)| field.mul_raw(c, s))
                .collect()
        })
        .collect();
    let basis = echelon(&field, rows);
    let k = basis.len();
    let d_min = min_distance(&field, &basis, message_limit);
    Ok(CodeParameters {
        q: field.q(),
        m: ring.nvars(),
        d,
        n: points.len(),
        k,
        d_min,
    })
}

/// Exhaustive minimum-weight search over the `q^k` messages; `None`
/// when the space exceeds `limit` or the code is trivial.
fn min_distance(field: &Field, basis: &[Vec<u32>], limit: u128) -> Option<u64> {
    let k = basis.len();
    if k == 0 {
        return None;
    }
    let q = field.q() as u128;
    if q.pow(k as u32) > limit {
        return None;
    }
    let n = basis[0].len();
    let mut best: u64 = u64::MAX;
    let mut message = vec![0u32; k];
    loop {
        // advance the odometer; the all-zero message is skipped
        let mut i = k;
        loop {
            if i == 0 {
                return Some(best);
            }
            i -= 1;
            message[i] += 1;
            if message[i] < field.q() {
                break;
            }
            message[i] = 0;
        }
        let mut weight = 0u64;
        for col in 0..n {
            let mut acc = 0u32;
            for (row, &c) in basis.iter().zip(&message) {
                if c != 0 {
                    acc = field.add_raw(acc, field.mul_raw(c, row[col]));
                }
            }
            if acc != 0 {
                weight += 1;
            }
        }
        if weight > 0 && weight < best {
            best = weight;
        }
    }
}

/// Parameters of the affine variety code: evaluation of the standard
/// monomials of degree at most `l_degree` at the rational points of
/// `I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineCodeParameters {
    pub q: u32,
    pub m: usize,
    pub l_degree: u32,
    pub n: usize,
    pub k: usize,
}

pub fn affine_code_parameters(ideal: &Ideal, l_degree: u32) -> Result<AffineCodeParameters> {
    affine_code_parameters_bounded(ideal, l_degree, DEFAULT_POINT_LIMIT)
}

pub fn affine_code_parameters_bounded(
    ideal: &Ideal,
    l_degree: u32,
    point_limit: usize,
) -> Result<AffineCodeParameters> {
    let ring = ideal.ring();
    let field = ring.field().clone();
    let points = affine_variety_points(ideal, point_limit)?;
    if points.is_empty() {
        return Err(Error::EmptyVariety);
    }
    let n = points.len();

    // Standard monomials of the field-equation ideal span S/I(X); the
    // evaluation map is an isomorphism onto F_q^n, which we verify.
    let iq = ideal.affine_field_ideal()?;
    let gb = iq.reduced_basis(MonomialOrder::Grevlex)?;
    let lead: Vec<Monomial> = gb
        .polys()
        .iter()
        .map(|p| p.leading_monomial(MonomialOrder::Grevlex).unwrap())
        .collect();
    let mut standard: Vec<Monomial> = Vec::new();
    let mut exps = vec![0u32; ring.nvars()];
    enumerate_below_q(&mut standard, &mut exps, 0, field.q(), &lead);
    standard.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
    assert_eq!(
        standard.len(),
        n,
        "standard monomial count must equal the point count"
    );
    let eval_rows = |mons: &[Monomial]| -> Result<Vec<Vec<u32>>> {
        mons.iter()
            .map(|mon| {
                let poly = Polynomial::from_terms(ring, [(mon.clone(), field.one())])?;
                Ok(points.iter().map(|p| poly.evaluate_raw(p)).collect())
            })
            .collect()
    };
    let full_rank = echelon(&field, eval_rows(&standard)?).len();
    assert_eq!(full_rank, n, "evaluation on S/I(X) must be an isomorphism");

    let bounded: Vec<Monomial> = standard
        .into_iter()
        .filter(|m| m.total_degree() <= l_degree)
        .collect();
    let k = echelon(&field, eval_rows(&bounded)?).len();
    Ok(AffineCodeParameters {
        q: field.q(),
        m: ring.nvars(),
        l_degree,
        n,
        k,
    })
}

fn enumerate_below_q(
    out: &mut Vec<Monomial>,
    exps: &mut Vec<u32>,
    var: usize,
    q: u32,
    lead: &[Monomial],
) {
    if var == exps.len() {
        let m = Monomial::new(exps.iter().copied());
        if !lead.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for e in 0..q {
        exps[var] = e;
        enumerate_below_q(out, exps, var + 1, q, lead);
    }
    exps[var] = 0;
}

/// The rational affine points of `I` (all generators vanish), each as a
/// raw coordinate vector, in lexicographic order.
pub(crate) fn affine_variety_points(ideal: &Ideal, limit: usize) -> Result<Vec<Vec<u32>>> {
    let ring = ideal.ring();
    let q = ring.field().q() as u128;
    let total = q.pow(ring.nvars() as u32);
    if total > limit as u128 {
        return Err(Error::SizeLimit {
            needed: total as usize,
            limit,
        });
    }
    let mut out = Vec::new();
    let mut point = vec![0u32; ring.nvars()];
    loop {
        if ideal.generators().iter().all(|g| g.evaluate_raw(&point) == 0) {
            out.push(point.clone());
        }
        let mut i = ring.nvars();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            point[i] += 1;
            if point[i] < ring.field().q() {
                break;
            }
            point[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::projective::enumerate_projective_space;

    fn ring(q: u64, n: usize) -> Ring {
        Ring::new(Field::new(q).unwrap(), n)
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(
            r,
            gens.iter()
                .map(|t| parse_polynomial(r, t, 1).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn generator_matrix_for_p1_f2() {
        let r = ring(2, 2);
        let points = enumerate_projective_space(r.field(), 2).unwrap();
        // points sorted: [0:1], [1:0], [1:1]
        let m = GeneratorMatrix::new(&points, &r, 1).unwrap();
        assert_eq!(m.nrows(), 2);
        assert_eq!(m.ncols(), 3);
        // row of x1: (0, 1, 1); row of x2: (1, 0, 1)
        assert_eq!(m.rows, vec![vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.to_csv(), "0,1,1\n1,0,1\n");
    }

    #[test]
    fn pivot_monomial_rows_are_one_at_their_point() {
        let r = ring(4, 3);
        let points = enumerate_projective_space(r.field(), 3).unwrap();
        let d = 2;
        let m = GeneratorMatrix::new(&points, &r, d).unwrap();
        for (c, p) in points.iter().enumerate() {
            let mon = Monomial::new((0..3).map(|i| if i == p.pivot() { d } else { 0 }));
            let row = m.monomials().iter().position(|x| *x == mon).unwrap();
            assert!(m.entry(row, c).is_one());
        }
    }

    #[test]
    fn parameters_for_p1_f2_degree_1() {
        let r = ring(2, 2);
        let points = enumerate_projective_space(r.field(), 2).unwrap();
        let params = code_parameters(&points, &r, 1).unwrap();
        assert_eq!((params.n, params.k), (3, 2));
        assert_eq!(params.d_min, Some(2));
    }

    #[test]
    fn distance_by_definition_on_the_tiny_code() {
        // enumerate all four codewords of the [3,2] code directly
        let r = ring(2, 2);
        let points = enumerate_projective_space(r.field(), 2).unwrap();
        let m = GeneratorMatrix::new(&points, &r, 1).unwrap();
        let rows = m.row_basis();
        let mut weights = Vec::new();
        for a in 0..2u32 {
            for b in 0..2u32 {
                if (a, b) == (0, 0) {
                    continue;
                }
                let w = (0..3)
                    .filter(|&c| {
                        let f = r.field();
                        f.add_raw(f.mul_raw(a, rows[0][c]), f.mul_raw(b, rows[1][c])) != 0
                    })
                    .count();
                weights.push(w as u64);
            }
        }
        assert_eq!(weights.iter().min(), Some(&2));
    }

    #[test]
    fn dimension_reaches_point_count_at_the_plateau() {
        let r = ring(2, 3);
        let points = enumerate_projective_space(r.field(), 3).unwrap(); // 7 points
        let oracle = vanishing_ideal_oracle(&points, &r).unwrap();
        let (d0, value) = crate::hilbert::regularity_plateau(&oracle).unwrap();
        assert_eq!(value, 7);
        let params = code_parameters(&points, &r, d0).unwrap();
        assert_eq!(params.k, 7);
        assert_eq!(params.n, 7);
    }

    #[test]
    fn parameters_do_not_depend_on_the_normalizer() {
        let r = ring(2, 2);
        let points = enumerate_projective_space(r.field(), 2).unwrap();
        let plain = code_parameters(&points, &r, 1).unwrap();
        // x1 + x2 vanishes at [1:1]; the swap must be rejected
        let bad = parse_polynomial(&r, "x1+x2", 1).unwrap();
        assert_eq!(
            code_parameters_with_normalizer(&points, &r, 1, &bad, DEFAULT_MESSAGE_LIMIT),
            Err(Error::NonvanishingWitnessInvalid)
        );
        // over F_3 the sum of coordinates works on all of P^1(F_3)
        let r3 = ring(3, 2);
        let pts3 = enumerate_projective_space(r3.field(), 2).unwrap();
        let keep = pts3
            .iter()
            .filter(|p| {
                parse_polynomial(&r3, "x1+x2", 1)
                    .unwrap()
                    .evaluate_raw(p.coords_raw())
                    != 0
            })
            .cloned()
            .collect::<Vec<_>>();
        let x = PointSet::from_points(keep);
        let f = parse_polynomial(&r3, "(x1+x2)^2", 1).unwrap();
        let swapped =
            code_parameters_with_normalizer(&x, &r3, 2, &f, DEFAULT_MESSAGE_LIMIT).unwrap();
        let plain3 = code_parameters(&x, &r3, 2).unwrap();
        assert_eq!(swapped.n, plain3.n);
        assert_eq!(swapped.k, plain3.k);
        assert_eq!(swapped.d_min, plain3.d_min);
        let _ = plain;
    }

    #[test]
    fn parameters_survive_representative_scrambling() {
        // feeding scaled representatives in a different order produces
        // the same canonical point set, hence identical parameters
        let r = ring(4, 3);
        let f4 = r.field().clone();
        let pts = enumerate_projective_space(r.field(), 3).unwrap();
        let subset: Vec<_> = pts.iter().take(5).cloned().collect();
        let x1 = PointSet::from_points(subset.clone());
        let scrambled: Vec<_> = subset
            .iter()
            .rev()
            .enumerate()
            .map(|(k, p)| {
                let lambda = f4.from_index(1 + (k as u32 % 3));
                let coords: Vec<_> =
                    p.coords().iter().map(|c| c * &lambda).collect();
                crate::projective::ProjectivePoint::new(&coords).unwrap()
            })
            .collect();
        let x2 = PointSet::from_points(scrambled);
        assert_eq!(x1, x2);
        let p1 = code_parameters(&x1, &r, 1).unwrap();
        let p2 = code_parameters(&x2, &r, 1).unwrap();
        assert_eq!(p1, p2);
    }

    #[test]
    fn affine_code_examples() {
        // I = (0), m = 1, q = 2, degree 1: full space, n = k = 2
        let r1 = ring(2, 1);
        let p0 = affine_code_parameters(&Ideal::zero(&r1), 1).unwrap();
        assert_eq!((p0.n, p0.k), (2, 2));

        // I = (x1 + x2) over F_2: two points, dimension 2
        let r = ring(2, 2);
        let p1 = affine_code_parameters(&ideal(&r, &["x1+x2"]), 1).unwrap();
        assert_eq!((p1.n, p1.k), (2, 2));
        assert!(p1.k <= p1.n);

        // empty affine variety
        let bad = ideal(&r, &["x1+1", "x1"]);
        assert_eq!(affine_code_parameters(&bad, 1), Err(Error::EmptyVariety));
    }
}
