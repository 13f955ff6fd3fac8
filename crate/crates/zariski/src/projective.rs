//! Projective points over `F_q` and the vanishing-ideal machinery: point
//! enumeration, point ideals, `I(P^{m-1})`, variety computation, the
//! emptiness criterion, the intersection oracle, and the saturation
//! method.
//!
//! The central fact: for a homogeneous ideal `I` with nonempty finite
//! variety `X` in `P^{m-1}(F_q)`,
//!
//! ```text
//! I(X) = (I + I(P^{m-1})) : m^inf,   m = (x1, ..., xm),
//! ```
//!
//! which [`vanishing_ideal_saturation`] computes and
//! [`vanishing_ideal_oracle`] (intersection of point ideals) verifies.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::hilbert;
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, Polynomial, Ring};
use crate::DEFAULT_POINT_LIMIT;

/// A point of `P^{m-1}(F_q)`, normalized so the first nonzero
/// coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    field: Field,
    coords: Vec<u32>,
    pivot: usize,
}

impl ProjectivePoint {
    /// Normalizes a coordinate vector (scales by the inverse of the
    /// first nonzero coordinate). All-zero vectors are rejected.
    pub fn new(coords: &[FieldElement]) -> Result<ProjectivePoint> {
        let field = coords.first().ok_or(Error::ZeroPoint)?.field().clone();
        for c in coords {
            if c.field() != &field {
                return Err(Error::FieldMismatch);
            }
        }
        let raw: Vec<u32> = coords.iter().map(|c| c.index()).collect();
        Self::from_raw(field, raw)
    }

    pub(crate) fn from_raw(field: Field, mut raw: Vec<u32>) -> Result<ProjectivePoint> {
        let pivot = raw.iter().position(|&c| c != 0).ok_or(Error::ZeroPoint)?;
        if raw[pivot] != 1 {
            let scale = field.inv_raw(raw[pivot])?;
            for c in raw.iter_mut() {
                *c = field.mul_raw(*c, scale);
            }
        }
        Ok(ProjectivePoint {
            field,
            coords: raw,
            pivot,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Number of homogeneous coordinates (`m`).
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Index of the first nonzero (hence 1) coordinate.
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn coords(&self) -> Vec<FieldElement> {
        self.coords
            .iter()
            .map(|&c| self.field.from_index(c))
            .collect()
    }

    pub(crate) fn coords_raw(&self) -> &[u32] {
        &self.coords
    }

    /// The vanishing ideal of this point: the `m-1` linear forms
    /// `x_i - a_i * x_k` for `i != k`, `k` the pivot.
    pub fn vanishing_ideal(&self, ring: &Ring) -> Result<Ideal> {
        if ring.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if ring.nvars() != self.coords.len() {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                got: self.coords.len(),
            });
        }
        let mut gens = Vec::with_capacity(self.coords.len() - 1);
        let pivot_var = Polynomial::variable(ring, self.pivot);
        for (i, &a) in self.coords.iter().enumerate() {
            if i == self.pivot {
                continue;
            }
            let xi = Polynomial::variable(ring, i);
            let scaled = pivot_var.scalar_mul(&self.field.from_index(a))?;
            gens.push(xi.try_sub(&scaled)?);
        }
        Ideal::new(ring, gens)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, &c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{}", self.field.from_index(c))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite set of distinct normalized projective points, sorted by
/// coordinate encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<ProjectivePoint>,
}

impl PointSet {
    pub fn from_points(mut points: Vec<ProjectivePoint>) -> PointSet {
        points.sort_by(|a, b| a.coords.cmp(&b.coords));
        points.dedup_by(|a, b| a.coords == b.coords);
        PointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = &ProjectivePoint> {
        self.points.iter()
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.points
            .binary_search_by(|candidate| candidate.coords.cmp(&p.coords))
            .is_ok()
    }
}

/// All points of `P^{m-1}(F_q)`, sorted; `(q^m - 1)/(q - 1)` of them.
pub fn enumerate_projective_space(field: &Field, m: usize) -> Result<PointSet> {
    enumerate_projective_space_bounded(field, m, DEFAULT_POINT_LIMIT)
}

pub fn enumerate_projective_space_bounded(
    field: &Field,
    m: usize,
    limit: usize,
) -> Result<PointSet> {
    assert!(m >= 1, "projective space needs at least one variable");
    let q = field.q() as u128;
    let count = (q.pow(m as u32) - 1) / (q - 1);
    if count > limit as u128 {
        return Err(Error::SizeLimit {
            needed: count as usize,
            limit,
        });
    }
    let mut points = Vec::with_capacity(count as usize);
    for pivot in 0..m {
        let tail = m - pivot - 1;
        let mut counters = vec![0u32; tail];
        loop {
            let mut coords = vec![0u32; m];
            coords[pivot] = 1;
            for (i, &c) in counters.iter().enumerate() {
                coords[pivot + 1 + i] = c;
            }
            points.push(ProjectivePoint {
                field: field.clone(),
                coords,
                pivot,
            });
            // odometer over the free coordinates
            let mut i = tail;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                counters[i] += 1;
                if counters[i] < field.q() {
                    break;
                }
                counters[i] = 0;
            }
            if counters.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    debug_assert_eq!(points.len(), count as usize);
    Ok(PointSet::from_points(points))
}

/// The projectivization `[A_1 x ... x A_m]` of a Cartesian product of
/// coordinate subsets: all projective classes of nonzero tuples.
pub fn cartesian_point_set(sets: &[Vec<FieldElement>]) -> Result<PointSet> {
    if sets.iter().any(|s| s.is_empty()) {
        return Err(Error::EmptyPointSet);
    }
    let field = sets
        .first()
        .and_then(|s| s.first())
        .ok_or(Error::EmptyPointSet)?
        .field()
        .clone();
    let mut points = Vec::new();
    let mut tuple = vec![0usize; sets.len()];
    loop {
        let coords: Vec<u32> = tuple
            .iter()
            .zip(sets)
            .map(|(&i, s)| s[i].index())
            .collect();
        if coords.iter().any(|&c| c != 0) {
            points.push(ProjectivePoint::from_raw(field.clone(), coords)?);
        }
        let mut i = sets.len();
        loop {
            if i == 0 {
                return Ok(PointSet::from_points(points));
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < sets[i].len() {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// The vanishing ideal of a single projective point.
pub fn point_ideal(point: &ProjectivePoint, ring: &Ring) -> Result<Ideal> {
    point.vanishing_ideal(ring)
}

/// `I(P^{m-1}) = ( x_i^q x_j - x_i x_j^q : i < j )`.
pub fn projective_space_ideal(ring: &Ring) -> Ideal {
    let q = ring.field().q();
    let m = ring.nvars();
    let mut gens = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in (i + 1)..m {
            let xi = Polynomial::variable(ring, i);
            let xj = Polynomial::variable(ring, j);
            let a = xi.pow(q).try_mul(&xj).unwrap();
            let b = xi.try_mul(&xj.pow(q)).unwrap();
            gens.push(a.try_sub(&b).unwrap());
        }
    }
    Ideal::new(ring, gens).unwrap()
}

/// All points of `P^{m-1}(F_q)` where every generator vanishes.
pub fn variety_points(ideal: &Ideal) -> Result<PointSet> {
    variety_points_bounded(ideal, DEFAULT_POINT_LIMIT)
}

pub fn variety_points_bounded(ideal: &Ideal, limit: usize) -> Result<PointSet> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ring = ideal.ring();
    let space = enumerate_projective_space_bounded(ring.field(), ring.nvars(), limit)?;
    let points = space
        .points
        .into_iter()
        .filter(|p| {
            ideal
                .generators()
                .iter()
                .all(|g| g.evaluate_raw(p.coords_raw()) == 0)
        })
        .collect();
    Ok(PointSet { points })
}

/// Algebraic emptiness criterion: `V(I)` is empty in `P^{m-1}(F_q)` iff
/// `(I(P^{m-1}) : I) = I(P^{m-1})`.
pub fn is_empty_variety(ideal: &Ideal) -> Result<bool> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if ideal.is_zero_ideal() {
        return Ok(false); // V(0) is the whole space
    }
    let ip = projective_space_ideal(ideal.ring());
    ip.colon_ideal(ideal)?.equals(&ip)
}

/// Ground-truth vanishing ideal: the intersection of the point ideals,
/// folded in canonical point order.
pub fn vanishing_ideal_oracle(points: &PointSet, ring: &Ring) -> Result<Ideal> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut acc: Option<Ideal> = None;
    for p in points.iter() {
        let ideal = p.vanishing_ideal(ring)?;
        acc = Some(match acc {
            None => ideal,
            Some(prev) => prev.intersect(&ideal)?,
        });
    }
    Ok(acc.unwrap())
}

/// The saturation method: `I(X) = (I + I(P^{m-1})) : m^inf` for a
/// homogeneous ideal with nonempty variety.
pub fn vanishing_ideal_saturation(ideal: &Ideal) -> Result<Ideal> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if is_empty_variety(ideal)? {
        return Err(Error::EmptyVariety);
    }
    let ring = ideal.ring();
    let iq = ideal.sum(&projective_space_ideal(ring))?;
    iq.saturate_ideal(&Ideal::maximal_homogeneous(ring))
}

/// Single-polynomial variant: `I(X) = (I + I(P^{m-1})) : f^inf` for a
/// homogeneous `f` that vanishes at no point of `X`. The hypothesis is
/// certified after the fact; a witness that vanishes somewhere on `X`
/// yields [`Error::NonvanishingWitnessInvalid`].
pub fn vanishing_ideal_poly(ideal: &Ideal, witness: &Polynomial) -> Result<Ideal> {
    if !ideal.is_homogeneous() || !witness.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if witness.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if is_empty_variety(ideal)? {
        return Err(Error::EmptyVariety);
    }
    let ring = ideal.ring();
    let iq = ideal.sum(&projective_space_ideal(ring))?;
    let candidate = iq.saturate_poly(witness)?;
    let reference = vanishing_ideal_saturation(ideal)?;
    let stable = candidate.colon_poly(witness)?.equals(&candidate)?;
    if !stable || !candidate.equals(&reference)? {
        return Err(Error::NonvanishingWitnessInvalid);
    }
    Ok(candidate)
}

/// Everything the saturation theorem asserts about one input ideal, in
/// checkable form.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub q: u32,
    pub m: usize,
    /// `|X| = |V(I)|` by enumeration.
    pub point_count: usize,
    /// `deg(S/(I + I(P^{m-1})))`.
    pub degree_sum_ideal: u64,
    /// `deg(S/I(X))`.
    pub degree_vanishing_ideal: u64,
    pub height_sum_ideal: usize,
    pub height_vanishing_ideal: usize,
    /// `(I_q : m) = I_q`.
    pub sum_ideal_saturated: bool,
    /// saturation result equals the point-ideal intersection oracle.
    pub saturation_equals_oracle: bool,
    /// `I_q = I(X)` (no saturation was needed).
    pub sum_ideal_equals_vanishing_ideal: bool,
    /// Largest generator degree in the reduced grevlex basis of `I(X)`.
    pub max_generator_degree: u32,
    /// `max_generator_degree < q + 1`: only `I = I(X)` itself can then
    /// satisfy `I + I(P^{m-1}) = I(X)`.
    pub impos_applicable: bool,
}

/// Runs the full saturation-vs-oracle comparison for one ideal.
pub fn check_theorem(ideal: &Ideal) -> Result<TheoremReport> {
    check_theorem_bounded(ideal, DEFAULT_POINT_LIMIT)
}

pub fn check_theorem_bounded(ideal: &Ideal, limit: usize) -> Result<TheoremReport> {
    let ring = ideal.ring();
    let points = variety_points_bounded(ideal, limit)?;
    if points.is_empty() {
        return Err(Error::EmptyVariety);
    }
    let iq = ideal.sum(&projective_space_ideal(ring))?;
    let oracle = vanishing_ideal_oracle(&points, ring)?;
    let saturation = vanishing_ideal_saturation(ideal)?;
    let gb = oracle.reduced_basis(MonomialOrder::Grevlex)?;
    let max_generator_degree = gb
        .polys()
        .iter()
        .filter_map(|p| p.total_degree())
        .max()
        .unwrap_or(0);
    let q = ring.field().q();
    Ok(TheoremReport {
        q,
        m: ring.nvars(),
        point_count: points.len(),
        degree_sum_ideal: hilbert::degree_of(&iq)?,
        degree_vanishing_ideal: hilbert::degree_of(&oracle)?,
        height_sum_ideal: hilbert::height_of(&iq)?,
        height_vanishing_ideal: hilbert::height_of(&oracle)?,
        sum_ideal_saturated: iq.is_saturated()?,
        saturation_equals_oracle: saturation.equals(&oracle)?,
        sum_ideal_equals_vanishing_ideal: iq.equals(&oracle)?,
        max_generator_degree,
        impos_applicable: max_generator_degree < q + 1,
    })
}
