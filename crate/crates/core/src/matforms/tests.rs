use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::field::FieldSpec;
use crate::groebner::{dimension_and_height, ideal_equal, intersect};
use crate::ring::MonomialOrder;

fn xyz() -> Arc<PolyRing> {
    PolyRing::xyz(FieldSpec::Rational)
}

fn mat(r: &Arc<PolyRing>, rows: &[&[&str]]) -> LinearMatrix {
    let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
    LinearMatrix::parse(r, &rows).unwrap()
}

fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> IdealHandle {
    IdealHandle::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect()).unwrap()
}

fn xy_phi(r: &Arc<PolyRing>) -> LinearMatrix {
    mat(r, &[&["z", "0"], &["-x", "z"], &["0", "-y"]])
}

fn xyy_phi(r: &Arc<PolyRing>) -> LinearMatrix {
    mat(r, &[&["z", "0", "0"], &["-x", "z", "0"], &["0", "-y", "z"], &["0", "0", "-y"]])
}

fn t_ring(n: usize) -> Arc<PolyRing> {
    let names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    PolyRing::new(&names, MonomialOrder::Degrevlex, FieldSpec::Rational).unwrap()
}

#[test]
fn minors_examples() {
    let r = xyz();
    let d = mat(&r, &[&["x", "0"], &["0", "y"]]);
    assert!(ideal_equal(&minors_ideal(&d, 2).unwrap(), &ideal(&r, &["x*y"])).unwrap());
    let phi = xy_phi(&r);
    assert!(ideal_equal(&minors_ideal(&phi, 2).unwrap(), &ideal(&r, &["x*y", "y*z", "z^2"])).unwrap());
    assert!(ideal_equal(&minors_ideal(&phi, 1).unwrap(), &ideal(&r, &["x", "y", "z"])).unwrap());
    assert!(matches!(minors_ideal(&phi, 3), Err(Error::OutOfRange(_))));
    assert_eq!(minors(&phi, 2).unwrap().len(), 3);
}

#[test]
fn hilbert_burch_examples() {
    let r = xyz();
    let f = hilbert_burch_generators(&xy_phi(&r)).unwrap();
    let printed: Vec<String> = f.iter().map(|p| p.to_string()).collect();
    assert_eq!(printed, ["x*y", "y*z", "z^2"]);

    let phi = xyy_phi(&r);
    let f = hilbert_burch_generators(&phi).unwrap();
    let up_to_sign: Vec<String> = f.iter().map(|p| p.primitive().to_string()).collect();
    assert_eq!(up_to_sign, ["x*y^2", "y^2*z", "y*z^2", "z^3"]);
    for col in row_times(&f, &phi).unwrap() {
        assert!(col.is_zero());
    }

    let twin = mat(&r, &[&["x", "y"], &["x", "y"], &["z", "x"]]);
    let f = hilbert_burch_generators(&twin).unwrap();
    assert!(f[2].is_zero());
    assert!(row_times(&f, &twin).unwrap().iter().all(|c| c.is_zero()));
    assert!(hilbert_burch_generators(&mat(&r, &[&["x", "y"]])).is_err());
}

fn swap_x_y(r: &PolyRing) -> ScalarMatrix {
    ScalarMatrix::from_ints(r.field(), &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]])
}

#[test]
fn conjugation_examples() {
    let r = xyz();
    let f = r.field();
    let phi = xyy_phi(&r);
    let id = ConjugationAction::identity(&r, 4, 3);
    assert_eq!(conjugate(&phi, &id).unwrap(), phi);

    let mut row_op = ScalarMatrix::identity(f, 4);
    row_op.swap_rows(0, 1);
    let mut col_op = ScalarMatrix::identity(f, 3);
    col_op.set(0, 0, f.from_int(-1));
    let act = ConjugationAction {
        coord_change: ScalarMatrix::identity(f, 3),
        row_op,
        col_op,
    };
    let c = conjugate(&phi, &act).unwrap();
    assert_eq!(c, mat(&r, &[&["x", "z", "0"], &["-z", "0", "0"], &["0", "-y", "z"], &["0", "0", "-y"]]));
    assert!(is_chaos_canonical(&c, 1));
    assert_eq!(conjugate(&c, &act.inverse().unwrap()).unwrap(), phi);

    let swap = ConjugationAction {
        coord_change: swap_x_y(&r),
        ..ConjugationAction::identity(&r, 3, 2)
    };
    let yx = mat(&r, &[&["z", "0"], &["-y", "z"], &["0", "-x"]]);
    assert_eq!(conjugate(&xy_phi(&r), &swap).unwrap(), yx);

    let singular = ConjugationAction {
        coord_change: ScalarMatrix::zeros(f, 3, 3),
        ..ConjugationAction::identity(&r, 3, 2)
    };
    assert!(matches!(conjugate(&xy_phi(&r), &singular), Err(Error::NotInvertibleAction(_))));
}

#[test]
fn rank_examples() {
    let r = xyz();
    let p = |a: i64, b: i64, c: i64| vec![Rat::from_int(a), Rat::from_int(b), Rat::from_int(c)];
    let phi = xyy_phi(&r);
    assert_eq!(rank_at_point(&phi, &p(1, 0, 0)).unwrap(), 1);
    assert_eq!(rank_at_point(&phi, &p(0, 1, 0)).unwrap(), 2);
    let zero = mat(&r, &[&["0", "0"], &["0", "0"]]);
    assert_eq!(rank_at_point(&zero, &p(1, 2, 3)).unwrap(), 0);
    assert_eq!(rank_at_point(&phi, &p(0, 0, 0)), Err(Error::ZeroPoint));
}

#[test]
fn one_generic_examples() {
    let t = t_ring(4);
    let hankel = mat(&t, &[&["t1", "t2"], &["t2", "t3"]]);
    assert!(one_generic_test(&hankel).unwrap().one_generic);

    let diag = mat(&t, &[&["t1", "0"], &["0", "t2"]]);
    let v = one_generic_test(&diag).unwrap();
    assert!(!v.one_generic);
    let w = v.witness.unwrap();
    assert_eq!(w.row_combination, ["1", "0"]);
    assert_eq!(w.column_combination, ["0", "1"]);

    let b_prime = mat(&t, &[&["-t3", "-t4"], &["t1", "t3"]]);
    assert!(one_generic_test(&b_prime).unwrap().one_generic);

    // (t1 t2; t2 -t1): generalized zero only over an extension (a1^2 + a2^2)
    let twisted = mat(&t, &[&["t1", "t2"], &["t2", "-t1"]]);
    let v = one_generic_test(&twisted).unwrap();
    assert!(!v.one_generic);
    assert!(v.witness.is_none());
    assert_eq!(v.gcd, "a1^2 + a2^2");

    assert!(one_generic_test(&mat(&t, &[&["t1"]])).is_err());
}

#[test]
fn structured_examples() {
    let t = PolyRing::new(&["t0", "t1", "t2", "t3", "t4"], MonomialOrder::Degrevlex, FieldSpec::Rational).unwrap();
    let c = structured_matrix(&t, &StructuredKind::Catalecticant2Step, &[0, 1, 2, 3, 4]).unwrap();
    assert_eq!(c, mat(&t, &[&["t0", "t1", "t2"], &["t2", "t3", "t4"]]));
    let h = structured_matrix(&t, &StructuredKind::Hankel, &[2, 3, 4]).unwrap();
    assert_eq!(h, mat(&t, &[&["t2", "t3"], &["t3", "t4"]]));

    let names = ["x", "y", "z", "t0", "t1", "t2"];
    let rt = PolyRing::new(&names, MonomialOrder::Degrevlex, FieldSpec::Rational).unwrap();
    let x = parse_poly(&rt, "x").unwrap();
    let mz = parse_poly(&rt, "-z").unwrap();
    let s = structured_matrix(&rt, &StructuredKind::ScrollBlock(x, mz), &[3, 4, 5]).unwrap();
    assert_eq!(s, mat(&rt, &[&["x", "t0", "t1"], &["-z", "t1", "t2"]]));
    assert!(structured_matrix(&t, &StructuredKind::Hankel, &[0]).is_err());
    assert!(structured_matrix(&t, &StructuredKind::Hankel, &[0, 9]).is_err());
}

#[test]
fn canonicalization_examples() {
    let r = xyz();
    let phi = xyy_phi(&r);
    let p = vec![parse_poly(&r, "y").unwrap(), parse_poly(&r, "z").unwrap()];
    let (c, act) = canonicalize_chaos_form(&phi, &p, 1).unwrap();
    assert!(is_chaos_canonical(&c, 1));
    assert_eq!(conjugate(&phi, &act).unwrap(), c);
    // same ideal of maximal minors
    let a = IdealHandle::new(&r, hilbert_burch_generators(&phi).unwrap()).unwrap();
    let b = IdealHandle::new(&r, hilbert_burch_generators(&c).unwrap()).unwrap();
    assert!(ideal_equal(&a, &b).unwrap());

    let (again, _) = canonicalize_chaos_form(&c, &p, 1).unwrap();
    assert!(is_chaos_canonical(&again, 1));

    let q = vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "z").unwrap()];
    assert_eq!(
        canonicalize_chaos_form(&phi, &q, 1).unwrap_err(),
        Error::RankMismatch { expected: 1, found: 2 }
    );
    let bad = vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "2*x").unwrap()];
    assert_eq!(canonicalize_chaos_form(&phi, &bad, 1).unwrap_err(), Error::NotRationalLinear);

    // a point away from the coordinate axes
    let moved = ConjugationAction {
        coord_change: ScalarMatrix::from_ints(r.field(), &[vec![1, 0, 0], vec![1, 1, 0], vec![2, 0, 1]]),
        ..ConjugationAction::identity(&r, 4, 3)
    };
    let phi2 = conjugate(&phi, &moved).unwrap();
    let pts = rational_points(&minors_ideal(&phi2, 2).unwrap()).unwrap();
    let pt = pts
        .iter()
        .find(|pt| rank_at_point(&phi2, pt.coords()).unwrap() == 1)
        .unwrap();
    let prime = linear_prime_of_point(&r, pt).unwrap();
    let (c2, _) = canonicalize_chaos_form(&phi2, &prime, 1).unwrap();
    assert!(is_chaos_canonical(&c2, 1));
}

#[test]
fn rational_point_examples() {
    let r = xyz();
    let pts = rational_points(&ideal(&r, &["x*y", "y*z", "z^2"])).unwrap();
    let printed: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
    assert_eq!(printed, ["(0:1:0)", "(1:0:0)"]);
    assert!(rational_points(&ideal(&r, &["x^2 - 2*y^2", "z"])).unwrap().is_empty());
    let two = intersect(&ideal(&r, &["x", "y"]), &ideal(&r, &["x - z", "y - 2*z"])).unwrap();
    let printed: Vec<String> = rational_points(&two).unwrap().iter().map(|p| p.to_string()).collect();
    assert_eq!(printed, ["(0:0:1)", "(1:2:1)"]);
    // (0:0:1) is on the scheme, so another projection center is needed
    let through_center = intersect(&ideal(&r, &["x", "y"]), &ideal(&r, &["y", "z"])).unwrap();
    assert_eq!(rational_points(&through_center).unwrap().len(), 2);
    let prime = linear_prime_of_point(&r, &ProjectivePoint(vec![Rat::ONE, Rat::ONE, Rat::ONE])).unwrap();
    let printed: Vec<String> = prime.iter().map(|p| p.to_string()).collect();
    assert_eq!(printed, ["x - y", "x - z"]);
    let j = ideal(&r, &["x^2", "y"]);
    assert!(radical_contains(&j, &parse_poly(&r, "x").unwrap()).unwrap());
    assert!(!radical_contains(&j, &parse_poly(&r, "z").unwrap()).unwrap());
}

fn random_action(r: &PolyRing, seed: &[i64]) -> Option<ConjugationAction> {
    let f = r.field();
    let take = |k: usize, off: usize| -> ScalarMatrix {
        let rows = (0..k).map(|i| (0..k).map(|j| seed[off + i * k + j]).collect()).collect::<Vec<_>>();
        ScalarMatrix::from_ints(f, &rows)
    };
    let a = ConjugationAction {
        coord_change: take(3, 0),
        row_op: take(4, 9),
        col_op: take(3, 25),
    };
    (a.coord_change.is_invertible() && a.row_op.is_invertible() && a.col_op.is_invertible()).then_some(a)
}

fn heights(m: &LinearMatrix) -> Vec<usize> {
    (1..=m.ncols())
        .map(|t| dimension_and_height(&minors_ideal(m, t).unwrap()).1)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn heights_survive_conjugation(seed in proptest::collection::vec(-2i64..=2, 34)) {
        let r = xyz();
        let Some(act) = random_action(&r, &seed) else { return Ok(()); };
        let phi = xyy_phi(&r);
        let c = conjugate(&phi, &act).unwrap();
        prop_assert_eq!(heights(&c), heights(&phi));
        prop_assert_eq!(conjugate(&c, &act.inverse().unwrap()).unwrap(), phi);
    }

    #[test]
    fn one_genericity_is_invariant(a in proptest::collection::vec(-3i64..=3, 4), c in proptest::collection::vec(-3i64..=3, 4)) {
        let t = t_ring(4);
        let f = t.field();
        let left = ScalarMatrix::from_ints(f, &[a[..2].to_vec(), a[2..].to_vec()]);
        let right = ScalarMatrix::from_ints(f, &[c[..2].to_vec(), c[2..].to_vec()]);
        prop_assume!(left.is_invertible() && right.is_invertible());
        for m in [
            mat(&t, &[&["-t3", "-t4"], &["t1", "t3"]]),
            mat(&t, &[&["t1", "0"], &["0", "t2"]]),
            mat(&t, &[&["t1", "t2"], &["t2", "-t1"]]),
        ] {
            let moved = m.scalar_transform(&left, &right).unwrap();
            prop_assert_eq!(
                one_generic_test(&moved).unwrap().one_generic,
                one_generic_test(&m).unwrap().one_generic
            );
        }
    }
}
