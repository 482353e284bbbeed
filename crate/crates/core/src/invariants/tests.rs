use std::sync::Arc;
use std::time::Instant;

use super::*;
use crate::field::FieldSpec;
use crate::groebner::{dimension_and_height, ideal_equal, IdealHandle};
use crate::matforms::{hilbert_burch_generators, minors_ideal, row_times, LinearMatrix};
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::ring::PolyRing;

fn xyz() -> Arc<PolyRing> {
    PolyRing::xyz(FieldSpec::Rational)
}

fn mat(r: &Arc<PolyRing>, rows: &[&[&str]]) -> LinearMatrix {
    let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
    LinearMatrix::parse(r, &rows).unwrap()
}

/// Diagonal `z`, subdiagonal `-c_i`.
fn bidiagonal(letters: &str) -> LinearMatrix {
    let r = xyz();
    let n = letters.len() + 1;
    let mut rows = vec![vec![Poly::zero(&r); n - 1]; n];
    for (i, c) in letters.chars().enumerate() {
        rows[i][i] = parse_poly(&r, "z").unwrap();
        rows[i + 1][i] = parse_poly(&r, &format!("-{c}")).unwrap();
    }
    LinearMatrix::new(&r, rows).unwrap()
}

fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> IdealHandle {
    IdealHandle::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect()).unwrap()
}

fn forms(r: &Arc<PolyRing>, gens: &[&str]) -> Vec<Poly> {
    gens.iter().map(|g| parse_poly(r, g).unwrap()).collect()
}

/// The canonical form of the "xyy" matrix used in the worked example.
fn xyy_canonical() -> LinearMatrix {
    mat(&xyz(), &[&["x", "z", "0"], &["-z", "0", "0"], &["0", "-y", "z"], &["0", "0", "-y"]])
}

#[test]
fn chaos_examples() {
    let p = chaos_invariant(&bidiagonal("xy")).unwrap();
    assert_eq!(p.heights, [3, 2]);
    assert_eq!(p.u, 1);

    let p = chaos_invariant(&bidiagonal("xxyy")).unwrap();
    assert_eq!(p.u, 2);
    assert_eq!(p.heights, [3, 3, 2, 2]);
    let by_point: Vec<(String, usize, usize)> = p
        .local
        .iter()
        .map(|l| (l.point.to_string(), l.profile.u_p, l.profile.mu))
        .collect();
    assert_eq!(by_point, [("(0:1:0)".to_string(), 2, 3), ("(1:0:0)".to_string(), 2, 3)]);
    assert_eq!(p.min_local_u(), Some(p.u));
    assert!(p.universal_prime.is_none());

    assert_eq!(
        chaos_invariant(&bidiagonal("yy")).unwrap_err(),
        Error::Hypothesis {
            t: 1,
            found: 2,
            expected: 3
        }
    );
    assert!(chaos_invariant(&mat(&xyz(), &[&["x", "y"]])).is_err());
}

#[test]
fn universal_prime_for_small_chaos() {
    // u = 1, n = 5: I_2, I_3 share the single minimal prime (y, z)
    let p = chaos_invariant(&bidiagonal("xyyy")).unwrap();
    assert_eq!(p.u, 1);
    let q = p.universal_prime.unwrap();
    assert!(q.holds());
    assert_eq!(q.point.unwrap().to_string(), "(1:0:0)");
    assert_eq!(q.single_minimal_prime.iter().map(|c| c.0).collect::<Vec<_>>(), [2, 3]);
}

#[test]
fn local_examples() {
    let r = xyz();
    let phi = bidiagonal("xyy");
    let at_p = local_profile(&phi, &forms(&r, &["x", "z"])).unwrap();
    assert_eq!(
        at_p,
        LocalProfile {
            u_p: 2,
            mu: 2,
            complete_intersection: true
        }
    );
    let at_q = local_profile(&phi, &forms(&r, &["y", "z"])).unwrap();
    assert_eq!((at_q.u_p, at_q.mu, at_q.complete_intersection), (1, 3, false));
    let xxyy = local_profile(&bidiagonal("xxyy"), &forms(&r, &["y", "z"])).unwrap();
    assert_eq!((xxyy.u_p, xxyy.mu), (2, 3));
    assert_eq!(local_profile(&phi, &forms(&r, &["x", "y"])), Err(Error::NotContained));
}

#[test]
fn jacobian_dual_examples() {
    let jd = jacobian_dual(&bidiagonal("xy")).unwrap();
    let tr = t_ring(3, FieldSpec::Rational);
    assert_eq!(jd.b, mat(&tr, &[&["-t2", "0"], &["0", "-t3"], &["t1", "t2"]]));

    let canon = dual::CanonicalForm {
        phi: xyy_canonical(),
        action: crate::matforms::ConjugationAction::identity(&xyz(), 4, 3),
        u: 1,
        point: crate::matforms::ProjectivePoint::parse("(1:0:0)").unwrap(),
        prime: forms(&xyz(), &["y", "z"]),
    };
    let jd = jacobian_dual_canonical(&canon).unwrap();
    let t4 = t_ring(4, FieldSpec::Rational);
    assert_eq!(jd.b.transpose().row(0), &forms(&t4, &["t1", "0", "-t2"])[..]);
    assert_eq!(jd.b_prime.unwrap(), mat(&t4, &[&["-t3", "-t4"], &["t1", "t3"]]));

    let zero_col = mat(&xyz(), &[&["x", "0"], &["y", "0"], &["z", "0"]]);
    let jd = jacobian_dual(&zero_col).unwrap();
    assert!((0..3).all(|v| jd.b.get(v, 1).is_zero()));
}

#[test]
fn canonical_form_matches_predicate() {
    for seq in ["xyy", "xxyy", "xyxy", "yxy"] {
        let phi = bidiagonal(seq);
        let u = chaos_invariant(&phi).unwrap().u;
        let c = canonical_form(&phi, u).unwrap().unwrap();
        assert!(crate::matforms::is_chaos_canonical(&c.phi, u), "{seq}");
        let jd = jacobian_dual_canonical(&c).unwrap();
        let first_row = jd.b.row(0);
        assert!(first_row[u..].iter().all(|e| e.is_zero()), "{seq}");
    }
}

#[test]
fn symmetric_examples() {
    let phi = bidiagonal("xy");
    let sym = symmetric_ideal(&phi).unwrap();
    let big = sym.ring().clone();
    let printed: Vec<String> = sym.gens().iter().map(|g| g.to_string()).collect();
    assert_eq!(printed, ["z*t1 - x*t2", "z*t2 - y*t3"]);
    assert!(sym.gens().iter().all(|g| g.is_homogeneous() && g.degree() == Some(2)));
    // t_i ↦ f_i kills every generator
    let f = hilbert_burch_generators(&phi).unwrap();
    let mut images: Vec<Poly> = (0..3).map(|v| Poly::var(phi.ring(), v)).collect();
    images.extend(f);
    for g in sym.gens() {
        assert!(g.substitute(&images).unwrap().is_zero());
    }
    assert_eq!(big.nvars(), 6);
}

#[test]
fn rees_and_fiber_for_the_worked_example() {
    let phi = xyy_canonical();
    let rees = rees_ideal(&phi).unwrap();
    let big = rees.ideal.ring().clone();
    let expected = ideal(&big, &["t1*x - t2*z", "t1*z - t3*y", "t3*z - t4*y", "t3^2 - t1*t4"]);
    assert!(ideal_equal(&rees.ideal, &expected).unwrap());
    assert_eq!(rees.dim, 4);
    assert_eq!(rees.cross_check, Some(true));

    let fiber = fiber_ideal(&phi).unwrap();
    assert!(ideal_equal(&fiber, &ideal(fiber.ring(), &["t3^2 - t1*t4"])).unwrap());
    assert_eq!(dimension_and_height(&fiber).0, 3);

    let ft = fiber_type_check(&phi, &fiber, &rees.ideal).unwrap();
    assert!(ft.fiber_type);
    assert!(ft.nonzero_remainders.is_empty());

    // the elimination kernel of t_i ↦ f_i T, computed independently
    let oracle = rees_kernel_oracle(&phi);
    assert!(ideal_equal(&rees.ideal, &oracle).unwrap());
}

/// `ker(k[x, y, z, t] → k[x, y, z, T], t_i ↦ f_i T)` by elimination of `T`.
fn rees_kernel_oracle(phi: &LinearMatrix) -> IdealHandle {
    let n = phi.nrows();
    let xt = xt_ring(n, FieldSpec::Rational);
    let mut names = xt.vars().to_vec();
    names.push("T".into());
    let big = PolyRing::new(&names, crate::ring::MonomialOrder::Degrevlex, FieldSpec::Rational).unwrap();
    let t_big = Poly::var(&big, n + 3);
    let f = hilbert_burch_generators(phi).unwrap();
    let rels: Vec<Poly> = f
        .iter()
        .enumerate()
        .map(|(i, fi)| &Poly::var(&big, 3 + i) - &(&fi.to_ring(&big).unwrap() * &t_big))
        .collect();
    let k = crate::groebner::eliminate(&IdealHandle::new(&big, rels).unwrap(), &[n + 3]).unwrap();
    k.to_ring(&xt).unwrap()
}

#[test]
fn fiber_type_on_a_fiber_type_family_with_larger_n() {
    let phi = bidiagonal("xyyy");
    let start = Instant::now();
    let rees = rees_ideal(&phi).unwrap();
    let fiber = fiber_ideal(&phi).unwrap();
    assert!(fiber_type_check(&phi, &fiber, &rees.ideal).unwrap().fiber_type);
    assert_eq!(dimension_and_height(&fiber).0, 3);
    assert!(start.elapsed().as_secs() < 30);
}

#[test]
fn birationality_examples() {
    let phi = bidiagonal("xy");
    let f = hilbert_burch_generators(&phi).unwrap();
    let jd = jacobian_dual(&phi).unwrap();
    let q = fiber_ideal(&phi).unwrap();
    let data = birationality_and_inverse(&jd.b, &f, &q).unwrap();
    assert_eq!(data.rank_mod_fiber, 2);
    assert!(data.inverse_identity);
    let c = parse_poly(phi.ring(), data.common_factor.as_ref().unwrap()).unwrap();
    assert_eq!(c.degree(), Some(3));

    let phi = xyy_canonical();
    let f = hilbert_burch_generators(&phi).unwrap();
    let jd = jacobian_dual(&phi).unwrap();
    let q = fiber_ideal(&phi).unwrap();
    let data = birationality_and_inverse(&jd.b, &f, &q).unwrap();
    assert_eq!(data.rank_mod_fiber, 2);
    assert!(data.inverse_identity);
    // the 2-minor t1*t3 of columns 1, 2 is not in (t3^2 - t1*t4)
    assert!(!q.contains(&parse_poly(q.ring(), "t1*t3").unwrap()));
}

#[test]
fn depth_zero_examples() {
    let phi = bidiagonal("xyy");
    let i = minors_ideal(&phi, 3).unwrap();
    let d = depth_zero_square_check(&i).unwrap();
    assert!(d.holds);
    let w = parse_poly(phi.ring(), d.witness.as_ref().unwrap()).unwrap();
    assert!(!i.power(2).contains(&w));
    let ci = ideal(&xyz(), &["x", "y"]);
    assert!(!depth_zero_square_check(&ci).unwrap().holds);
}

#[test]
fn reduction_examples() {
    let q = fiber_ideal(&xyy_canonical()).unwrap();
    let rep = reduction_number_report(&q, 0).unwrap();
    assert_eq!(rep.analytic_spread, 3);
    assert_eq!(rep.fiber_cm, crate::groebner::CmVerdict::Cm);
    assert_eq!(rep.reduction_number, Some(1));
    assert!(rep.hf_equals_hp.iter().all(|&b| b));
}

#[test]
fn linear_syzygy_examples() {
    let r = xyz();
    let SyzygyOutcome::Presented(phi) = linear_syzygy_matrix(&forms(&r, &["x*y", "y*z", "z^2"])).unwrap() else {
        panic!("expected a presentation");
    };
    assert_eq!((phi.nrows(), phi.ncols()), (3, 2));
    let gens = forms(&r, &["x*y", "y*z", "z^2"]);
    assert!(row_times(&gens, &phi).unwrap().iter().all(|c| c.is_zero()));
    assert_eq!(heights(&phi).unwrap(), heights(&bidiagonal("xy")).unwrap());

    let cube = forms(&r, &["x^3", "x^2*y", "x*y^2", "y^3"]);
    let SyzygyOutcome::Presented(phi) = linear_syzygy_matrix(&cube).unwrap() else {
        panic!("expected a presentation");
    };
    assert_eq!(phi.ncols(), 3);

    // (x^2, yz, zx) has the syzygies (z, 0, -x) and (0, x, -y), whose
    // 2-minors give back the ideal
    assert!(matches!(
        linear_syzygy_matrix(&forms(&r, &["x^2", "y*z", "z*x"])).unwrap(),
        SyzygyOutcome::Presented(_)
    ));
    match linear_syzygy_matrix(&forms(&r, &["x^2", "y^2", "x*z"])).unwrap() {
        SyzygyOutcome::NotLinearlyPresented { nullity } => assert_eq!(nullity, 1),
        SyzygyOutcome::Presented(_) => panic!("not linearly presented"),
    }
    assert_eq!(linear_syzygy_matrix(&forms(&r, &["x", "y^2"])).unwrap_err(), Error::MixedDegrees);
}
