//! Larger determinantal instances. `rational_normal_curve_over_f9` is
//! the single-polynomial saturation showcase; `scaled_scroll_over_f3`
//! cross-checks the degree/point-count identity on a 9-variable
//! determinantal ideal. Both are heavier than the unit tests, so they
//! are ignored by default; run with `cargo test -- --ignored`.

use zariski::hilbert::degree_of;
use zariski::ideal::Ideal;
use zariski::poly::{parse_polynomial, Polynomial, Ring};
use zariski::projective::{
    projective_space_ideal, variety_points, vanishing_ideal_oracle, vanishing_ideal_poly,
    vanishing_ideal_saturation,
};
use zariski::Field;

/// 2x2 minors of the 2 x (n-1) matrix with rows (x1..x_{n-1}) and
/// (x2..x_n): the rational normal curve of degree n-1.
fn rnc_minors(r: &Ring) -> Vec<Polynomial> {
    let n = r.nvars();
    let mut gens = Vec::new();
    for i in 0..(n - 1) {
        for j in (i + 1)..(n - 1) {
            let a = Polynomial::variable(r, i);
            let b = Polynomial::variable(r, j + 1);
            let c = Polynomial::variable(r, i + 1);
            let d = Polynomial::variable(r, j);
            gens.push(a.try_mul(&b).unwrap().try_sub(&c.try_mul(&d).unwrap()).unwrap());
        }
    }
    gens
}

#[test]
#[ignore = "minutes-long: six variables over F_9"]
fn rational_normal_curve_over_f9() {
    let f9 = Field::new(9).unwrap();
    let names = (0..6).map(|i| format!("x{i}")).collect();
    let r = Ring::with_names(f9, names);
    let i = Ideal::new(&r, rnc_minors(&r)).unwrap();

    // the curve has q + 1 = 10 rational points
    let points = variety_points(&i).unwrap();
    assert_eq!(points.len(), 10);

    let oracle = vanishing_ideal_oracle(&points, &r).unwrap();
    let sat = vanishing_ideal_saturation(&i).unwrap();
    assert!(sat.equals(&oracle).unwrap());

    // single-polynomial saturation with the classical witness
    let witness = parse_polynomial(&r, "x0-x4-x5", 1).unwrap();
    for p in points.iter() {
        assert!(!witness.evaluate(&p.coords()).unwrap().is_zero());
    }
    let by_poly = vanishing_ideal_poly(&i, &witness).unwrap();
    assert!(by_poly.equals(&oracle).unwrap());

    // and the colon stability the witness certificate relies on
    assert!(oracle.colon_poly(&witness).unwrap().equals(&oracle).unwrap());
}

/// 2x2 minors of a 2x9 matrix built from three 3-variable blocks
/// (a0,a1,a2) with second row cyclically shifted: columns (a_k, a_{k+1
/// mod 3}).
fn cyclic_scroll_minors(r: &Ring) -> Vec<Polynomial> {
    let top: Vec<usize> = (0..9).collect();
    let bottom: Vec<usize> = (0..9)
        .map(|c| {
            let block = c / 3;
            let k = c % 3;
            block * 3 + (k + 1) % 3
        })
        .collect();
    let mut gens = Vec::new();
    for i in 0..9 {
        for j in (i + 1)..9 {
            let a = Polynomial::variable(r, top[i]);
            let b = Polynomial::variable(r, bottom[j]);
            let c = Polynomial::variable(r, top[j]);
            let d = Polynomial::variable(r, bottom[i]);
            let m = a.try_mul(&b).unwrap().try_sub(&c.try_mul(&d).unwrap()).unwrap();
            if !m.is_zero() {
                gens.push(m);
            }
        }
    }
    gens
}

#[test]
#[ignore = "heavy: 9 variables over F_3"]
fn scaled_scroll_over_f3() {
    let f3 = Field::new(3).unwrap();
    let r = Ring::new(f3, 9);
    let i = Ideal::new(&r, cyclic_scroll_minors(&r)).unwrap();

    // rank <= 1 forces each block proportional with the same unit
    // ratio, and over F_3 only ratio 1 survives: the diagonal plane
    let points = variety_points(&i).unwrap();
    assert_eq!(points.len(), 13);

    // |X| = deg(S/(I + I(P^8)))
    let iq = i.sum(&projective_space_ideal(&r)).unwrap();
    assert_eq!(degree_of(&iq).unwrap(), 13);
}
