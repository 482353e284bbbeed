use std::time::Instant;

use super::instance::{InputSpec, InstanceSpec, Task};
use super::models::{
    alternating_square_monomials, catalecticant_ideal, hankel_pair_ideal, is_alternating, scroll_pair_ideal,
    separating_shape,
};
use super::report::{
    AnalysisReport, Certificate, CheckRecord, DualSection, FiberSection, IdealSection, InputEcho, ReesSection,
    TimingEntry,
};
use crate::error::{Error, Result};
use crate::families::{
    arrangement_family, degenerate_arrangement_check, fat_point_ideal, localized_minimal_generators,
    monomial_family_over, Arrangement, ArrangementFamily, BasicEntrySequence, FatPointSpec,
    MonomialFamily,
};
use crate::groebner::{
    dimension_and_height, graded_piece_dimension, hilbert_series, ideal_equal, CmVerdict, IdealHandle, Piece,
};
use crate::invariants::{
    birationality_and_inverse, canonical_form, chaos_invariant, depth_zero_square_check, fiber_ideal,
    fiber_type_check, jacobian_dual, jacobian_dual_canonical, linear_syzygy_matrix, local_profile,
    reduction_number_report, rees_ideal, symmetric_ideal, ChaosProfile, SyzygyOutcome,
};
use crate::matforms::{
    hilbert_burch_generators, linear_prime_of_point, minors_ideal, one_generic_test, LinearMatrix,
};
use crate::parse::parse_poly;
use crate::poly::Poly;

/// Largest `n` for which the powers `I^2, I^3` are compared with the
/// fiber's Hilbert function.
pub const HILBERT_CROSS_CHECK_MAX_N: usize = 7;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub timing: bool,
}

enum Family {
    Plain,
    Sequence(BasicEntrySequence, MonomialFamily),
    Arrangement(Arrangement, ArrangementFamily),
    FatPoints(FatPointSpec),
}

struct Prepared {
    phi: LinearMatrix,
    family: Family,
}

fn parse_all(ring: &std::sync::Arc<crate::ring::PolyRing>, texts: &[String]) -> Result<Vec<Poly>> {
    texts.iter().map(|t| parse_poly(ring, t)).collect()
}

fn presentation_of(gens: &[Poly]) -> Result<LinearMatrix> {
    match linear_syzygy_matrix(gens)? {
        SyzygyOutcome::Presented(phi) => Ok(phi),
        SyzygyOutcome::NotLinearlyPresented { nullity } => Err(Error::NotLinearlyPresented { nullity }),
    }
}

fn prepare(inst: &InstanceSpec) -> Result<Prepared> {
    let ring = inst.ring()?;
    Ok(match &inst.input {
        InputSpec::Matrix { rows } => Prepared {
            phi: LinearMatrix::parse(&ring, rows)?,
            family: Family::Plain,
        },
        InputSpec::Generators { polys } => Prepared {
            phi: presentation_of(&parse_all(&ring, polys)?)?,
            family: Family::Plain,
        },
        InputSpec::Sequence { letters } => {
            let seq = BasicEntrySequence::new(letters)?;
            let fam = monomial_family_over(&seq, &ring)?;
            Prepared {
                phi: fam.phi.clone(),
                family: Family::Sequence(seq, fam),
            }
        }
        InputSpec::Arrangement { forms } => {
            let a = Arrangement::parse(&ring, forms)?;
            let fam = arrangement_family(&a)?;
            Prepared {
                phi: fam.phi.clone(),
                family: Family::Arrangement(a, fam),
            }
        }
        InputSpec::FatPoints { points } => {
            let entries = points
                .iter()
                .map(|p| Ok((parse_all(&ring, &p.prime)?, p.mult)))
                .collect::<Result<Vec<_>>>()?;
            let spec = FatPointSpec::new(&ring, entries)?;
            let res = fat_point_ideal(&spec)?;
            if !res.equigenerated {
                return Err(Error::MixedDegrees);
            }
            let Some(phi) = res.phi.clone() else {
                return Err(Error::NotLinearlyPresented {
                    nullity: res.nullity.unwrap_or(0),
                });
            };
            Prepared {
                phi,
                family: Family::FatPoints(spec),
            }
        }
    })
}

struct Clock {
    entries: Option<Vec<TimingEntry>>,
    last: Instant,
}

impl Clock {
    fn new(on: bool) -> Clock {
        Clock {
            entries: on.then(Vec::new),
            last: Instant::now(),
        }
    }

    fn lap(&mut self, stage: &str) {
        if let Some(e) = &mut self.entries {
            e.push(TimingEntry {
                stage: stage.to_string(),
                seconds: self.last.elapsed().as_secs_f64(),
            });
        }
        self.last = Instant::now();
    }
}

fn section(ideal: &IdealHandle) -> IdealSection {
    IdealSection {
        generators: ideal.gb().iter().map(|g| g.primitive().to_string()).collect(),
        gb_hash: ideal.gb_hash(),
    }
}

fn equality_check(name: &str, computed: &IdealHandle, expected: &IdealHandle, what: &str) -> Result<CheckRecord> {
    let ok = ideal_equal(computed, expected)?;
    Ok(CheckRecord::verdict(
        name,
        ok,
        if ok { format!("{what} agree") } else { format!("{what} differ") },
        Certificate::GbHash {
            computed: computed.gb_hash(),
            expected: expected.to_ring(computed.ring())?.gb_hash(),
        },
    ))
}

/// `I_2(m)`, the zero ideal when `m` has fewer than two columns.
fn two_minors_ideal(m: &LinearMatrix) -> Result<IdealHandle> {
    if m.ncols() < 2 || m.nrows() < 2 {
        return Ok(IdealHandle::zero(m.ring()));
    }
    minors_ideal(m, 2)
}

fn bool_values(v: &[bool]) -> Vec<i64> {
    v.iter().map(|&b| b as i64).collect()
}

/// Runs the requested tasks on one instance.
pub fn analyze(inst: &InstanceSpec, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let mut clock = Clock::new(opts.timing);
    let prep = prepare(inst)?;
    let phi = &prep.phi;
    let n = phi.nrows();
    let gens = hilbert_burch_generators(phi)?;
    clock.lap("prepare");

    let chaos: ChaosProfile = chaos_invariant(phi)?;
    let u = chaos.u;
    clock.lap("chaos");
    let mut checks = vec![CheckRecord::verdict(
        "standing_hypotheses",
        true,
        "ht I_1(phi) = 3 and ht I_(n-1)(phi) = 2",
        Certificate::Values {
            computed: vec![chaos.heights[0] as i64, chaos.heights[n - 2] as i64],
            expected: vec![3, 2],
        },
    )];
    if let Some(up) = &chaos.universal_prime {
        checks.push(CheckRecord::verdict(
            "universal_prime",
            up.holds(),
            "one rational prime is minimal over I_t(phi) for all t > u",
            Certificate::Values {
                computed: up.single_minimal_prime.iter().map(|&(_, ok)| ok as i64).collect(),
                expected: vec![1; up.single_minimal_prime.len()],
            },
        ));
    }

    let wants_fiber = [Task::Fiber, Task::FiberType, Task::Birationality, Task::Reduction, Task::HilbertCrossCheck]
        .iter()
        .any(|&t| inst.wants(t));
    let wants_rees = inst.wants(Task::Rees) || inst.wants(Task::FiberType);
    let wants_dual = [Task::JacobianDual, Task::OneGeneric, Task::Birationality, Task::FiberType]
        .iter()
        .any(|&t| inst.wants(t));

    let fiber = if wants_fiber { Some(fiber_ideal(phi)?) } else { None };
    let fiber_hilbert = fiber.as_ref().map(hilbert_series).transpose()?;
    clock.lap("fiber");
    let rees = if wants_rees { Some(rees_ideal(phi)?) } else { None };
    clock.lap("rees");
    let fiber_type = match (&fiber, &rees) {
        (Some(q), Some(j)) if inst.wants(Task::FiberType) => Some(fiber_type_check(phi, q, &j.ideal)?),
        _ => None,
    };
    clock.lap("fiber_type");

    let mut dual_section = None;
    let mut one_generic = None;
    let mut birationality = None;
    if wants_dual {
        let jd = jacobian_dual(phi)?;
        let canon = canonical_form(phi, u)?;
        let jdc = canon.as_ref().map(jacobian_dual_canonical).transpose()?;
        let b_prime = jdc.as_ref().and_then(|d| d.b_prime.clone());
        if let Some(bp) = &b_prime {
            if inst.wants(Task::OneGeneric) {
                let og = one_generic_test(bp)?;
                let dim = dimension_and_height(&two_minors_ideal(bp)?).0;
                checks.push(CheckRecord::verdict(
                    "scroll",
                    og.one_generic && dim == u as i64 + 2,
                    "B' is 1-generic and dim k[t]/I_2(B') = u + 2",
                    Certificate::Values {
                        computed: vec![og.one_generic as i64, dim],
                        expected: vec![1, u as i64 + 2],
                    },
                ));
                one_generic = Some(og);
            }
        } else if inst.wants(Task::OneGeneric) {
            checks.push(CheckRecord::skip("scroll", "no rational point for the canonical form"));
        }
        if u == 1 {
            let (_, ht) = dimension_and_height(&minors_ideal(&jd.b, 2)?);
            checks.push(CheckRecord::verdict(
                "jacobian_dual_codim",
                ht == n - 1,
                "codim I_2(B) = n - 1",
                Certificate::Dimension {
                    computed: ht as i64,
                    expected: n as i64 - 1,
                },
            ));
        }
        let mut canonical_fiber = None;
        if let (1, Some(c), Some(bp)) = (u, &canon, &b_prime) {
            if inst.wants(Task::FiberType) {
                let qc = fiber_ideal(&c.phi)?;
                let i2 = two_minors_ideal(bp)?;
                checks.push(equality_check("u1_fiber_equations", &qc, &i2, "fiber ideal and I_2(B')")?);
                let jc = rees_ideal(&c.phi)?;
                let candidate = symmetric_ideal(&c.phi)?;
                let candidate = candidate.sum(&i2.to_ring(candidate.ring())?)?;
                checks.push(equality_check(
                    "u1_rees_equations",
                    &jc.ideal,
                    &candidate,
                    "Rees ideal and (symmetric relations, I_2(B'))",
                )?);
                canonical_fiber = Some(section(&qc));
            }
        }
        if let (Some(q), true) = (&fiber, inst.wants(Task::Birationality)) {
            match birationality_and_inverse(&jd.b, &gens, q) {
                Ok(data) => {
                    checks.push(CheckRecord::verdict(
                        "birational",
                        data.rank_mod_fiber == 2 && data.inverse_identity,
                        "rank of B modulo Q is 2 and the inverse quadrics recover (x, y, z)",
                        Certificate::Values {
                            computed: vec![data.rank_mod_fiber as i64, data.inverse_identity as i64],
                            expected: vec![2, 1],
                        },
                    ));
                    birationality = Some(data);
                }
                Err(Error::NoRankTwoSlice) => checks.push(CheckRecord::verdict(
                    "birational",
                    false,
                    "rank 2 modulo Q but no 2-column slice of rank 2",
                    Certificate::Values {
                        computed: vec![2, 0],
                        expected: vec![2, 1],
                    },
                )),
                Err(e) => return Err(e),
            }
        }
        dual_section = Some(DualSection {
            b: jd.b.to_strings(),
            canonical_u: canon.as_ref().map(|c| c.u),
            canonical_phi: canon.as_ref().map(|c| c.phi.to_strings()),
            b_prime: b_prime.as_ref().map(|b| b.to_strings()),
            action: canon.as_ref().map(|c| c.action.to_strings()),
            canonical_fiber,
        });
    }
    clock.lap("jacobian_dual");

    if let (Some(ft), 1) = (&fiber_type, u) {
        checks.push(CheckRecord::verdict(
            "u1_fiber_type",
            ft.fiber_type,
            "Rees ideal is generated by the symmetric and fiber relations",
            Certificate::Witness {
                polynomial: ft.nonzero_remainders.first().cloned().unwrap_or_default(),
            },
        ));
    }

    let ideal = IdealHandle::new(phi.ring(), gens.clone())?;
    let depth_zero_square = if inst.wants(Task::Depth) {
        let d = depth_zero_square_check(&ideal)?;
        checks.push(CheckRecord::verdict(
            "depth_zero_square",
            d.holds,
            "I^2 : m^inf differs from I^2",
            Certificate::Witness {
                polynomial: d.witness.clone().unwrap_or_default(),
            },
        ));
        Some(d)
    } else {
        None
    };
    clock.lap("depth");

    let reduction = match (&fiber, inst.wants(Task::Reduction)) {
        (Some(q), true) => Some(reduction_number_report(q, inst.seed)?),
        _ => None,
    };
    clock.lap("reduction");

    if let (Some(hs), true) = (&fiber_hilbert, inst.wants(Task::HilbertCrossCheck)) {
        if n <= HILBERT_CROSS_CHECK_MAX_N {
            let mut computed = Vec::new();
            for t in 1..=3u32 {
                computed.push(graded_piece_dimension(&ideal.power(t), t * (n as u32 - 1), Piece::Ideal)? as i64);
            }
            let expected: Vec<i64> = (1..=3).map(|t| hs.function_values[t] as i64).collect();
            checks.push(CheckRecord::verdict(
                "hilbert_fiber_powers",
                computed == expected,
                "dim (I^t)_(t(n-1)) equals the fiber Hilbert function for t = 1, 2, 3",
                Certificate::Values { computed, expected },
            ));
        } else {
            checks.push(CheckRecord::skip(
                "hilbert_fiber_powers",
                format!("n > {HILBERT_CROSS_CHECK_MAX_N}"),
            ));
        }
    }
    clock.lap("hilbert");

    family_checks(
        inst,
        &prep,
        &chaos,
        &gens,
        fiber.as_ref(),
        rees.as_ref().map(|r| &r.ideal),
        &fiber_type,
        &reduction,
        &mut checks,
    )?;
    clock.lap("family");

    let report = AnalysisReport {
        input: InputEcho {
            instance: inst.clone(),
            n,
            phi: phi.to_strings(),
            generators: gens.iter().map(|g| g.to_string()).collect(),
        },
        heights: Some(chaos.heights.clone()),
        u: Some(u),
        local_profiles: inst.wants(Task::Chaos).then(|| chaos.local.clone()),
        universal_prime: if inst.wants(Task::Chaos) {
            chaos.universal_prime.clone()
        } else {
            None
        },
        jacobian_dual: dual_section.filter(|_| inst.wants(Task::JacobianDual) || inst.wants(Task::FiberType)),
        one_generic,
        fiber: match (&fiber, fiber_hilbert, inst.wants(Task::Fiber)) {
            (Some(q), Some(h), true) => Some(FiberSection {
                ideal: section(q),
                hilbert: h,
            }),
            _ => None,
        },
        rees: match (&rees, inst.wants(Task::Rees)) {
            (Some(j), true) => Some(ReesSection {
                ideal: section(&j.ideal),
                saturated_by: j.saturated_by,
                cross_check: j.cross_check,
                dim: j.dim,
            }),
            _ => None,
        },
        fiber_type,
        birationality,
        depth_zero_square,
        reduction,
        checks,
        timing: clock.entries,
    };
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn family_checks(
    inst: &InstanceSpec,
    prep: &Prepared,
    chaos: &ChaosProfile,
    gens: &[Poly],
    fiber: Option<&IdealHandle>,
    rees: Option<&IdealHandle>,
    fiber_type: &Option<crate::invariants::FiberTypeCheck>,
    reduction: &Option<crate::invariants::ReductionReport>,
    checks: &mut Vec<CheckRecord>,
) -> Result<()> {
    let n = prep.phi.nrows();
    let u = chaos.u;
    match &prep.family {
        Family::Plain => {}
        Family::Sequence(seq, fam) => {
            checks.push(CheckRecord::verdict(
                "monomial_two_primes",
                fam.minimal_primes.len() == 2,
                "exactly two minimal primes",
                Certificate::Dimension {
                    computed: fam.minimal_primes.len() as i64,
                    expected: 2,
                },
            ));
            if inst.wants(Task::Chaos) {
                let mut computed = Vec::new();
                let mut expected = Vec::new();
                for point in &fam.minimal_primes {
                    let Some(v) = point.coords().iter().position(|c| !c.is_zero()) else {
                        continue;
                    };
                    let prime = linear_prime_of_point(prep.phi.ring(), point)?;
                    computed.push(local_profile(&prep.phi, &prime)?.mu as i64);
                    expected.push(localized_minimal_generators(gens, v)?.len() as i64);
                }
                checks.push(CheckRecord::verdict(
                    "local_generators",
                    computed == expected,
                    "n - rank phi(p) equals the monomial count of I_p at each minimal prime",
                    Certificate::Values { computed, expected },
                ));
            }
            let letters = seq.letters();
            if is_alternating(letters) && n >= 4 {
                if let Some(q) = fiber {
                    checks.push(equality_check(
                        "alternating_catalecticant",
                        q,
                        &catalecticant_ideal(gens)?,
                        "fiber ideal and I_2(catalecticant)",
                    )?);
                    let i2b = minors_ideal(&jacobian_dual(&prep.phi)?.b, 2)?;
                    let monos = alternating_square_monomials(i2b.ring(), n);
                    let missing = monos.iter().find(|m| !i2b.contains(m));
                    checks.push(CheckRecord::verdict(
                        "alternating_squares",
                        missing.is_none(),
                        "t_0 t_(n-1) and t_i^2 lie in I_2(B)",
                        Certificate::Witness {
                            polynomial: missing.map(|m| m.to_string()).unwrap_or_default(),
                        },
                    ));
                }
            }
            if let Some((r, _)) = separating_shape(letters) {
                if let Some(q) = fiber {
                    checks.push(equality_check(
                        "separating_hankel",
                        q,
                        &hankel_pair_ideal(gens, r)?,
                        "fiber ideal and (I_2(H_1), I_2(H_2))",
                    )?);
                }
                if let Some(j) = rees {
                    checks.push(equality_check(
                        "separating_scroll",
                        j,
                        &scroll_pair_ideal(gens, r)?,
                        "Rees ideal and (I_2(S_1), I_2(S_2))",
                    )?);
                }
                if let Some(ft) = fiber_type {
                    checks.push(CheckRecord::verdict(
                        "separating_fiber_type",
                        ft.fiber_type,
                        "Rees ideal is of fiber type",
                        Certificate::Witness {
                            polynomial: ft.nonzero_remainders.first().cloned().unwrap_or_default(),
                        },
                    ));
                }
                if let Some(rep) = reduction {
                    checks.push(cm_check("separating_cm", rep.fiber_cm));
                }
            }
            if is_alternating(letters) {
                if let Some(rep) = reduction {
                    checks.push(cm_check("alternating_cm", rep.fiber_cm));
                }
            }
        }
        Family::Arrangement(a, fam) => {
            checks.push(CheckRecord::verdict(
                "arrangement_minors",
                fam.minors_match,
                "signed minors of phi are the (n-1)-fold products up to scalars",
                Certificate::Values {
                    computed: vec![fam.minors_match as i64],
                    expected: vec![1],
                },
            ));
            checks.push(CheckRecord::verdict(
                "fat_identity",
                fam.fat_identity,
                "I equals the intersection of p^(m_p)",
                Certificate::Values {
                    computed: fam.points.iter().map(|p| p.multiplicity as i64).collect(),
                    expected: fam.points.iter().map(|p| p.lines.len() as i64 - 1).collect(),
                },
            ));
            checks.push(fat_u_check(n, u, fam.points[0].multiplicity));
            if inst.wants(Task::Reduction) {
                let rep = degenerate_arrangement_check(a, inst.seed)?;
                let conds = [rep.concurrent, rep.u == 1, rep.reduction_number.is_some_and(|r| r <= 1)];
                checks.push(CheckRecord::verdict(
                    "degenerate_conditions",
                    rep.conditions_agree && rep.fat_shape == rep.concurrent,
                    "concurrency, u = 1, r(I) <= 1 and the fat shape agree",
                    Certificate::Values {
                        computed: bool_values(&[conds[0], conds[1], conds[2], rep.fat_shape]),
                        expected: bool_values(&[conds[0]; 4]),
                    },
                ));
                if let (Some(ids), Some(mu)) = (rep.identities_hold, rep.mu_square) {
                    checks.push(CheckRecord::verdict(
                        "degenerate_identities",
                        ids && mu == rep.mu_square_expected as u64,
                        "sum m = 2n - 3, sum m^2 = n^2 - 3n + 3, mu(I^2) = 3(n - 1)",
                        Certificate::Values {
                            computed: vec![rep.sum_m as i64, rep.sum_m_squared as i64, mu as i64],
                            expected: vec![
                                2 * n as i64 - 3,
                                (n * n) as i64 - 3 * n as i64 + 3,
                                rep.mu_square_expected as i64,
                            ],
                        },
                    ));
                }
            }
        }
        Family::FatPoints(spec) => {
            checks.push(fat_u_check(n, u, spec.max_multiplicity() as usize));
        }
    }
    Ok(())
}

fn cm_check(name: &str, verdict: CmVerdict) -> CheckRecord {
    CheckRecord::verdict(
        name,
        verdict == CmVerdict::Cm,
        "special fiber is Cohen-Macaulay",
        Certificate::Verdict {
            computed: format!("{verdict:?}").to_lowercase(),
            expected: "cm".into(),
        },
    )
}

fn fat_u_check(n: usize, u: usize, m1: usize) -> CheckRecord {
    let expected = n as i64 - m1 as i64 - 1;
    CheckRecord::verdict(
        "fat_point_u",
        u as i64 == expected,
        "u = n - m_1 - 1",
        Certificate::Dimension {
            computed: u as i64,
            expected,
        },
    )
}
