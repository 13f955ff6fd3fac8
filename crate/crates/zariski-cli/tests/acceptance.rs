//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `--nocapture`). Criteria cover the golden worked
//! examples, the randomized saturation-vs-oracle property suite, the
//! degree and zero-counting identities, the emptiness criterion, the
//! affine case, code parameters, and the bench comparison.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zariski::codes::{
    code_parameters_bounded, code_parameters_with_normalizer, GeneratorMatrix,
};
use zariski::hilbert::{
    count_common_zeros, degree_of, height_of, hilbert_function, regularity_plateau,
};
use zariski::ideal_file::IdealFile;
use zariski::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Ring};
use zariski::projective::{
    is_empty_variety, projective_space_ideal, variety_points, vanishing_ideal_oracle,
    vanishing_ideal_poly, vanishing_ideal_saturation, PointSet,
};
use zariski::{Field, FieldElement, Ideal};

fn testdata(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("testdata");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn zariski_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zariski"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn load(name: &str) -> IdealFile {
    let text = std::fs::read_to_string(testdata(name)).unwrap();
    IdealFile::parse(&text).unwrap()
}

// --- randomized suite -------------------------------------------------

fn random_homogeneous_poly(r: &Ring, rng: &mut ChaCha8Rng, degree: u32) -> Polynomial {
    let q = r.field().q();
    let nvars = r.nvars();
    let terms: Vec<(Monomial, FieldElement)> = (0..(2 + rng.gen_range(0..3)))
        .map(|_| {
            let mut exps = vec![0u32; nvars];
            let mut left = degree;
            for e in exps.iter_mut().take(nvars - 1) {
                *e = rng.gen_range(0..=left);
                left -= *e;
            }
            exps[nvars - 1] = left;
            (
                Monomial::new(exps),
                r.field().from_index(rng.gen_range(0..q)),
            )
        })
        .collect();
    Polynomial::from_terms(r, terms).unwrap()
}

fn random_homogeneous_ideal(r: &Ring, rng: &mut ChaCha8Rng) -> Ideal {
    let q = r.field().q();
    let gens: Vec<Polynomial> = (0..rng.gen_range(1..=2))
        .map(|_| {
            let degree = rng.gen_range(1..=q + 1);
            random_homogeneous_poly(r, rng, degree)
        })
        .filter(|f| !f.is_zero())
        .collect();
    Ideal::new(r, gens).unwrap()
}

/// The deterministic instance suite shared by criteria 4, 5, and 8:
/// at least 200 homogeneous ideals with nonempty variety across
/// q in {2,3,4}, m in {2,3}.
fn suite() -> Vec<(Ring, Ideal, PointSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a71);
    let mut out = Vec::new();
    for q in [2u64, 3, 4] {
        for m in [2usize, 3] {
            let r = Ring::new(Field::new(q).unwrap(), m);
            let mut accepted = 0;
            let mut attempts = 0;
            while accepted < 34 {
                attempts += 1;
                assert!(attempts < 5000, "rejection sampling stalled at q={q} m={m}");
                let i = random_homogeneous_ideal(&r, &mut rng);
                if i.is_zero_ideal() {
                    continue;
                }
                let points = variety_points(&i).unwrap();
                if points.is_empty() {
                    continue;
                }
                out.push((r.clone(), i, points));
                accepted += 1;
            }
        }
    }
    assert!(out.len() >= 200);
    out
}

// --- criteria ----------------------------------------------------------

#[test]
fn criterion_1_cartesian_example_needs_no_saturation() {
    let start = Instant::now();
    let file = testdata("cartesian_f4.zar");

    // `vanish --method sat` returns exactly the reduced basis of the
    // three listed generators of I(X)
    let out = zariski_cmd(&["vanish", &file, "I12sq", "--method", "sat"]);
    assert!(out.status.success());
    let parsed = load("cartesian_f4.zar");
    let ix = parsed.ideal("IX").unwrap();
    let expected: String = ix
        .reduced_basis(MonomialOrder::Grevlex)
        .unwrap()
        .polys()
        .iter()
        .map(|g| format!("{g}\n"))
        .collect();
    assert_eq!(stdout(&out), expected);

    // `check` reports I + I(P^2) already saturated and equal to I(X)
    let check = zariski_cmd(&["check", &file, "I12sq", "--json"]);
    assert!(check.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&check)).unwrap();
    assert_eq!(v["sum_ideal_saturated"], true);
    assert_eq!(v["sum_ideal_equals_vanishing_ideal"], true);
    assert_eq!(v["saturation_equals_oracle"], true);
    assert_eq!(v["point_count"], 13);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!("ACCEPTANCE 1 (cartesian example, saturated sum ideal): PASS");
}

#[test]
fn criterion_2_modified_component_breaks_saturatedness() {
    let start = Instant::now();
    let parsed = load("cartesian_f4.zar");
    let r = parsed.ring();
    let i = parsed.ideal("I13sq").unwrap();
    let ix = parsed.ideal("IX").unwrap();

    // the four listed generators are I(X) ∩ (x1,x3)^2
    let x1x3 = Ideal::new(
        r,
        vec![
            parse_polynomial(r, "x1", 1).unwrap(),
            parse_polynomial(r, "x3", 1).unwrap(),
        ],
    )
    .unwrap();
    let squared = x1x3.product(&x1x3).unwrap();
    assert!(i.equals(&ix.intersect(&squared).unwrap()).unwrap());

    let i4 = i.sum(&projective_space_ideal(r)).unwrap();
    // I_4 strictly below I(X)
    assert!(ix.contains_ideal(&i4).unwrap());
    assert!(!i4.equals(ix).unwrap());
    // same degree and height
    assert_eq!(degree_of(&i4).unwrap(), degree_of(ix).unwrap());
    assert_eq!(height_of(&i4).unwrap(), 2);
    assert_eq!(height_of(ix).unwrap(), 2);
    // not saturated, and saturation recovers I(X)
    assert!(!i4.is_saturated().unwrap());
    assert!(vanishing_ideal_saturation(i).unwrap().equals(ix).unwrap());

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}");
    println!("ACCEPTANCE 2 (modified primary component): PASS");
}

#[test]
fn criterion_3_low_degree_generators_force_uniqueness() {
    let parsed = load("f2_points_f4.zar");
    let r = parsed.ring();
    let ix = parsed.ideal("IX").unwrap();

    let gb = ix.reduced_basis(MonomialOrder::Grevlex).unwrap();
    let max_degree = gb
        .polys()
        .iter()
        .filter_map(|g| g.total_degree())
        .max()
        .unwrap();
    assert_eq!(max_degree, 3);
    assert!(max_degree < r.field().q() + 1);
    assert_eq!(r.field().q() + 1, 5);

    let sum = ix.sum(&projective_space_ideal(r)).unwrap();
    assert!(sum.equals(ix).unwrap());
    println!("ACCEPTANCE 3 (degree-3 generators below q+1=5): PASS");
}

#[test]
fn criterion_4_saturation_equals_oracle_on_200_random_ideals() {
    let start = Instant::now();
    let instances = suite();
    let total = instances.len();
    let mut failures = 0usize;
    for (r, ideal, points) in &instances {
        let sat = vanishing_ideal_saturation(ideal).unwrap();
        let oracle = vanishing_ideal_oracle(points, r).unwrap();
        if !sat.equals(&oracle).unwrap() {
            failures += 1;
            eprintln!("saturation/oracle mismatch: {ideal:?}");
        }
        let iq = ideal.sum(&projective_space_ideal(r)).unwrap();
        if degree_of(&iq).unwrap() != points.len() as u64 {
            failures += 1;
            eprintln!("degree/point-count mismatch: {ideal:?}");
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(failures, 0);
    assert!(total >= 200);
    assert!(elapsed.as_secs() < 600, "took {elapsed:?}");
    println!(
        "ACCEPTANCE 4 (saturation = oracle on {total} random ideals, {:.1}s): PASS",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_5_degree_and_zero_count_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xcafe);
    let instances = suite();
    let mut zero_branch = 0usize;
    let mut positive_branch = 0usize;
    for (r, _, points) in &instances {
        let ix = vanishing_ideal_oracle(points, r).unwrap();
        let n = points.len() as u64;

        // deg(S/I(X)) = |X|
        assert_eq!(degree_of(&ix).unwrap(), n);

        // Hilbert function plateau = |X|
        let (_, plateau) = regularity_plateau(&ix).unwrap();
        assert_eq!(plateau, n);

        // zero-counting lemma against direct evaluation, both branches
        let mut check = |polys: &[Polynomial]| {
            if polys.iter().all(|f| f.is_zero()) {
                return;
            }
            let by_eval = points
                .iter()
                .filter(|p| {
                    polys
                        .iter()
                        .all(|f| f.evaluate(&p.coords()).unwrap().is_zero())
                })
                .count() as u64;
            let by_lemma = count_common_zeros(&ix, polys).unwrap();
            assert_eq!(by_lemma, by_eval);
            if by_lemma == 0 {
                zero_branch += 1;
            } else {
                positive_branch += 1;
            }
        };
        // the generators of I(X) vanish on all of X
        check(ix.generators());
        // random forms exercise both branches
        for _ in 0..2 {
            let degree = rng.gen_range(1..=r.field().q());
            let f = random_homogeneous_poly(r, &mut rng, degree);
            if !f.is_zero() {
                check(std::slice::from_ref(&f));
            }
        }
    }
    assert!(zero_branch > 0, "the zero branch never fired");
    assert!(positive_branch > 0, "the positive branch never fired");
    println!(
        "ACCEPTANCE 5 (degree/plateau/zero-count identities, {} zero + {} positive): PASS",
        zero_branch, positive_branch
    );
}

#[test]
fn criterion_6_emptiness_criterion_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xe317);
    let mut checked = 0usize;
    let mut empty_count = 0usize;
    while checked < 100 {
        for q in [2u64, 3] {
            for m in [2usize, 3] {
                let r = Ring::new(Field::new(q).unwrap(), m);
                let i = random_homogeneous_ideal(&r, &mut rng);
                if i.is_zero_ideal() {
                    continue;
                }
                let by_colon = is_empty_variety(&i).unwrap();
                let by_enum = variety_points(&i).unwrap().is_empty();
                assert_eq!(by_colon, by_enum, "q={q} m={m} {i:?}");
                if by_enum {
                    empty_count += 1;
                }
                checked += 1;
            }
        }
    }
    assert!(empty_count > 0, "no empty varieties sampled");
    println!(
        "ACCEPTANCE 6 (emptiness criterion on {checked} ideals, {empty_count} empty): PASS"
    );
}

#[test]
fn criterion_7_affine_field_ideal_is_the_point_intersection() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xaff1);
    let mut checked = 0usize;
    let mut nonempty = 0usize;
    while checked < 50 {
        for q in [2u64, 3] {
            for m in [2usize, 3] {
                let r = Ring::new(Field::new(q).unwrap(), m);
                // random affine (not necessarily homogeneous) ideal
                let gens: Vec<Polynomial> = (0..rng.gen_range(1..=2))
                    .map(|_| {
                        let terms: Vec<(Monomial, FieldElement)> = (0..3)
                            .map(|_| {
                                let exps: Vec<u32> =
                                    (0..m).map(|_| rng.gen_range(0..=1)).collect();
                                (
                                    Monomial::new(exps),
                                    r.field().from_index(rng.gen_range(0..q as u32)),
                                )
                            })
                            .collect();
                        Polynomial::from_terms(&r, terms).unwrap()
                    })
                    .filter(|f| !f.is_zero())
                    .collect();
                let i = Ideal::new(&r, gens).unwrap();
                let iq = i.affine_field_ideal().unwrap();

                // enumerate the affine points of V(I)
                let mut expected: Option<Ideal> = None;
                let mut point = vec![0u32; m];
                let mut count = 0;
                'outer: loop {
                    let fe: Vec<FieldElement> =
                        point.iter().map(|&c| r.field().from_index(c)).collect();
                    if i
                        .generators()
                        .iter()
                        .all(|g| g.evaluate(&fe).unwrap().is_zero())
                    {
                        count += 1;
                        let gens: Vec<Polynomial> = (0..m)
                            .map(|k| {
                                let x = Polynomial::variable(&r, k);
                                let c = Polynomial::constant(&r, &fe[k]).unwrap();
                                x.try_sub(&c).unwrap()
                            })
                            .collect();
                        let pt_ideal = Ideal::new(&r, gens).unwrap();
                        expected = Some(match expected {
                            None => pt_ideal,
                            Some(prev) => prev.intersect(&pt_ideal).unwrap(),
                        });
                    }
                    let mut k = m;
                    loop {
                        if k == 0 {
                            break 'outer;
                        }
                        k -= 1;
                        point[k] += 1;
                        if point[k] < r.field().q() {
                            break;
                        }
                        point[k] = 0;
                    }
                }

                match expected {
                    Some(expected) => {
                        assert!(
                            iq.equals(&expected).unwrap(),
                            "q={q} m={m} {i:?} ({count} points)"
                        );
                        nonempty += 1;
                    }
                    None => {
                        // no rational points: the field-equation ideal
                        // collapses to the unit ideal
                        assert!(iq.is_unit().unwrap(), "q={q} m={m} {i:?}");
                    }
                }
                checked += 1;
            }
        }
    }
    assert!(nonempty > 0);
    println!(
        "ACCEPTANCE 7 (affine vanishing ideal on {checked} instances, {nonempty} nonempty): PASS"
    );
}

#[test]
fn criterion_8_code_parameters() {
    // [3, 2, 2] code on P^1(F_2) at degree 1, via the CLI
    let out = zariski_cmd(&["code", &testdata("p1_f2.zar"), "P1", "--degree", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n\tk\td_min\td\tq\tm\n3\t2\t2\t1\t2\t2\n");

    // dim C_X(d) = HF(d) for every suite point set, up to the plateau
    let instances = suite();
    let mut swap_checked = 0usize;
    for (r, _, points) in &instances {
        let ix = vanishing_ideal_oracle(points, r).unwrap();
        let (d0, _) = regularity_plateau(&ix).unwrap();
        for d in 1..=(d0 + 1).max(2) {
            let rank = GeneratorMatrix::new(points, r, d).unwrap().rank();
            let hf = hilbert_function(&ix, d).unwrap();
            assert_eq!(rank as u64, hf, "q={} d={d}", r.field().q());
        }

        // normalizer swap: f_i = (x1 + ... + xm)^d when nonvanishing
        let sum_of_coords = (0..r.nvars())
            .map(|i| Polynomial::variable(r, i))
            .reduce(|a, b| a.try_add(&b).unwrap())
            .unwrap();
        let d = 2u32.min(d0 + 1);
        if points
            .iter()
            .all(|p| !sum_of_coords.evaluate(&p.coords()).unwrap().is_zero())
        {
            let plain = code_parameters_bounded(points, r, d, 1 << 16).unwrap();
            let swapped = code_parameters_with_normalizer(
                points,
                r,
                d,
                &sum_of_coords.pow(d),
                1 << 16,
            )
            .unwrap();
            assert_eq!(plain.n, swapped.n);
            assert_eq!(plain.k, swapped.k);
            assert_eq!(plain.d_min, swapped.d_min);
            swap_checked += 1;
        }
    }
    assert!(swap_checked > 0, "the normalizer swap never applied");
    println!(
        "ACCEPTANCE 8 (code parameters; {} normalizer swaps): PASS",
        swap_checked
    );
}

#[test]
fn criterion_9_bench_shows_saturation_ahead_on_the_family() {
    // Not the paper-scale scroll (explicitly out of scope); the bench
    // must still show the saturation strictly faster than the oracle on
    // the growing nested Cartesian family over F_4.
    let file = testdata("cartesian_family_f4.zar");
    let mut totals = (0.0f64, 0.0f64);
    let mut wins = Vec::new();
    for name in ["X7", "X13", "X21"] {
        let out = zariski_cmd(&["bench", &file, name, "--repeat", "3"]);
        assert!(out.status.success());
        let text = stdout(&out);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[3], "results agree: yes");
        let sat_ms: f64 = lines[1].split('\t').nth(1).unwrap().parse().unwrap();
        let oracle_ms: f64 = lines[2].split('\t').nth(1).unwrap().parse().unwrap();
        totals.0 += sat_ms;
        totals.1 += oracle_ms;
        wins.push((name, sat_ms < oracle_ms));
    }
    // saturation wins where the point count grows, and in aggregate
    assert!(
        wins.iter().filter(|(_, w)| *w).count() >= 2,
        "saturation should win on the larger family members: {wins:?}"
    );
    assert!(wins.last().unwrap().1, "saturation must win at 21 points");
    assert!(
        totals.0 < totals.1,
        "saturation total {:.1}ms vs oracle total {:.1}ms",
        totals.0,
        totals.1
    );
    println!(
        "ACCEPTANCE 9 (bench: saturation {:.1}ms vs oracle {:.1}ms across the family): PASS",
        totals.0, totals.1
    );
}

#[test]
#[ignore = "stretch instance, minutes-long; run with -- --ignored"]
fn criterion_9_stretch_rational_normal_curve_over_f9() {
    let parsed = load("rnc_f9.zar");
    let r = parsed.ring();
    let i = parsed.ideal("RNC").unwrap();

    let points = variety_points(i).unwrap();
    assert_eq!(points.len(), 10); // q + 1

    let oracle = vanishing_ideal_oracle(&points, r).unwrap();
    let sat = vanishing_ideal_saturation(i).unwrap();
    assert!(sat.equals(&oracle).unwrap());

    let witness = parse_polynomial(r, "x0-x4-x5", 1).unwrap();
    let by_poly = vanishing_ideal_poly(i, &witness).unwrap();
    assert!(by_poly.equals(&oracle).unwrap());
    println!("ACCEPTANCE 9-stretch (rational normal curve over F_9): PASS");
}
