//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use loopbraid::catalog::sample::{scalar, tw2_irreducible, tw_params};
use loopbraid::catalog::{counterexample6, tuba_wenzl, tw2, Family, Tw2Family, TwParams};
use loopbraid::extend::{
    certify_no_extension, cube_root_candidates, nonstandard_3d, polynomial_s_solve, slb3_test, standard_extensions,
    standard_k_candidates, uniqueness_linearized, vb3_lift, CertificateVerdict, ExtensionCertificate, OracleConfig,
    UniquenessVerdict,
};
use loopbraid::linalg::algebra_dimension;
use loopbraid::{CMatrix, CycNum, Field, GroupKind, LBRep};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DRAWS: usize = 25;
const WORKING_CONDUCTOR: u32 = 12;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field() -> Field {
    Field::new(WORKING_CONDUCTOR)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn holds(rep: &LBRep, kind: GroupKind) -> bool {
    rep.verify(kind).map(|r| r.all_hold()).unwrap_or(false)
}

fn relation_suites() -> Outcome {
    let families = [
        Family::Tw2,
        Family::Tw3,
        Family::Tw4,
        Family::Tw5,
        Family::Binomial,
        Family::V1,
        Family::Abeq,
        Family::Lkb3,
        Family::Perm3,
    ];
    let f = field();
    for (i, fam) in families.into_iter().enumerate() {
        let mut r = rng(100 + i as u64);
        for draw in 0..DRAWS {
            let rep = fam.sample(&mut r, &f).map_err(|e| format!("{fam} draw {draw}: {e}"))?;
            ensure(rep.target() == fam.target() && holds(&rep, fam.target()), || {
                format!("{fam} draw {draw} fails {}", fam.target())
            })?;
        }
    }
    Ok(format!("9 families x {DRAWS} draws verified"))
}

fn tw_lambda(p: &TwParams) -> Vec<CycNum> {
    match p {
        TwParams::Dim2 { lambda, .. } => lambda.to_vec(),
        TwParams::Dim3 { lambda } => lambda.to_vec(),
        TwParams::Dim4 { lambda, .. } => lambda.to_vec(),
        TwParams::Dim5 { lambda, .. } => lambda.to_vec(),
    }
}

fn trace_identities() -> Outcome {
    let f = field();
    let mut r = rng(200);
    for draw in 0..DRAWS {
        for dim in 2..=5 {
            let p = tw_params(&mut r, &f, dim);
            let rep = tuba_wenzl(&p).map_err(|e| e.to_string())?;
            let (a, b) = (rep.a_mat(), rep.b_mat());
            let ab = a * b;
            let n = rep.conductor();
            let lam: Vec<CycNum> = tw_lambda(&p).iter().map(|x| x.promote(n).unwrap()).collect();
            let ok = match &p {
                TwParams::Dim2 { .. } => &ab.trace() * &ab.trace() == ab.det(),
                TwParams::Dim3 { .. } => {
                    let (l1, l2, l3) = (&lam[0], &lam[1], &lam[2]);
                    let prod = &(l1 * l2) * l3;
                    let b2 = b * b;
                    let expected = &(&(&prod * &(l1 + l2)) * &(l1 + l3)) * &(l2 + l3);
                    ab.trace().is_zero()
                        && (&b2 * &ab).trace().is_zero()
                        && (&ab * &ab).trace().is_zero()
                        && (&(&b2 * &b2) * &ab).trace() == expected
                        && ab.pow(3).unwrap().as_scalar() == Some(&prod * &prod)
                }
                TwParams::Dim4 { gamma_sq, .. } => {
                    let g2 = gamma_sq.promote(n).unwrap();
                    ab.trace() == -&g2 && ab.pow(3).unwrap().as_scalar() == Some(-g2.pow(3).unwrap())
                }
                TwParams::Dim5 { gamma, .. } => {
                    let s = ab.scale(&gamma.promote(n).unwrap().pow(-2).unwrap());
                    s.pow(3).unwrap().is_identity() && s.trace() == -CycNum::one(&s.field().clone())
                }
            };
            ensure(ok, || format!("dim {dim} draw {draw}: identity fails"))?;
        }
    }
    Ok(format!("tw2..tw5 x {DRAWS} draws, all identities exact"))
}

struct Built {
    family: Family,
    exts: Vec<(LBRep, ExtensionCertificate)>,
}

fn build_extensions() -> Result<Vec<Built>, String> {
    let f = field();
    let mut out = Vec::new();
    for (i, fam) in [Family::Tw2, Family::Tw3, Family::Tw4, Family::Tw5, Family::Binomial].into_iter().enumerate() {
        let mut r = rng(300 + i as u64);
        for draw in 0..DRAWS {
            let rep = fam.sample(&mut r, &f).map_err(|e| format!("{fam} draw {draw}: {e}"))?;
            let (search, exts) = standard_extensions(&rep).map_err(|e| format!("{fam} draw {draw}: {e}"))?;
            ensure(!exts.is_empty(), || format!("{fam} draw {draw}: {}", search.status.reason()))?;
            out.push(Built { family: fam, exts });
        }
    }
    Ok(out)
}

fn standard_completeness(built: &[Built]) -> Outcome {
    let mut count = 0;
    for b in built {
        for (ext, cert) in &b.exts {
            ensure(holds(ext, GroupKind::LB3), || format!("{} extension fails LB3", b.family))?;
            ensure(cert.s.pow(3).unwrap().is_identity(), || "S^3 != I".into())?;
            count += 1;
        }
    }
    Ok(format!("{} draws, {count} certificates, all LB3-verified", built.len()))
}

fn counterexample() -> Outcome {
    let rep = counterexample6();
    let (a, b) = (rep.a_mat(), rep.b_mat());
    ensure(algebra_dimension(&[a, b]) == 36, || "algebra dimension != 36".into())?;
    let search = standard_k_candidates(a, b).map_err(|e| e.to_string())?;
    ensure(search.candidates.is_empty(), || "standard k-candidates found".into())?;
    let cands = cube_root_candidates(a, b).map_err(|e| e.to_string())?;
    ensure(cands.len() == 6, || format!("{} exact candidates instead of 6", cands.len()))?;
    let config = OracleConfig { starts: 2000, tol: 1e-9, cluster_radius: 1e-6, ..OracleConfig::default() };
    let report = certify_no_extension(a, b, &cands, &config).map_err(|e| e.to_string())?;
    ensure(report.candidates.iter().all(|c| c.exact_relations && !c.trace_is_integer), || {
        "an exact candidate step failed".into()
    })?;
    ensure(report.verdict == CertificateVerdict::NoExtension, || report.summary.clone())?;
    ensure(report.oracle.clusters.len() <= 6, || "more than 6 clusters".into())?;
    Ok(format!(
        "dim 36, 0 k-candidates, {} converged of {} starts into {} clusters, all exact candidates; {}",
        report.oracle.converged,
        config.starts,
        report.oracle.clusters.len(),
        report.summary
    ))
}

/// No two eigenvalues equal or negatives of each other.
fn generic(lam: &[CycNum]) -> bool {
    lam.iter().enumerate().all(|(i, x)| lam[i + 1..].iter().all(|y| x != y && x != &-y))
}

fn uniqueness() -> Outcome {
    let f = field();
    let mut r = rng(500);
    for (dim, n_d) in [(4, 9), (5, 14)] {
        let mut done = 0;
        while done < 10 {
            let p = tw_params(&mut r, &f, dim);
            if !generic(&tw_lambda(&p)) {
                continue;
            }
            let rep = tuba_wenzl(&p).map_err(|e| e.to_string())?;
            let sys = uniqueness_linearized(rep.a_mat(), rep.b_mat()).map_err(|e| e.to_string())?;
            ensure(sys.rank == n_d && sys.n_d == n_d && sys.verdict == UniquenessVerdict::UniqueStandard, || {
                format!("dim {dim}: rank {} of {}", sys.rank, sys.n_d)
            })?;
            let (_, exts) = standard_extensions(&rep).map_err(|e| e.to_string())?;
            ensure(!exts.is_empty(), || "no standard extension".into())?;
            for (ext, _) in &exts {
                let poly = polynomial_s_solve(ext.a_mat(), ext.b_mat(), &ext.s().unwrap()).map_err(|e| e.to_string())?;
                ensure(poly.is_standard(), || "polynomial form is not a0 only".into())?;
            }
            done += 1;
        }
    }
    Ok("10 tw4 draws rank 9/9, 10 tw5 draws rank 14/14, all S = a0 AB".into())
}

fn slb3_logic() -> Outcome {
    let f = field();
    let mut r = rng(600);
    for draw in 0..DRAWS {
        let rep = Family::Perm3.sample(&mut r, &f).map_err(|e| e.to_string())?;
        let rep = rep.with_target(GroupKind::LB3).map_err(|e| e.to_string())?;
        let report = slb3_test(&rep).map_err(|e| e.to_string())?;
        ensure(report.direct && report.commutator == Some(true), || format!("perm3 draw {draw}: {report:?}"))?;
    }
    let mut zero_trace = 0;
    for draw in 0..50 {
        let [l1, l2] = tw2_irreducible(&mut r, &f);
        let rep = tw2(Tw2Family::Irreducible, &l1, &l2).map_err(|e| e.to_string())?;
        let (_, exts) = standard_extensions(&rep).map_err(|e| e.to_string())?;
        let traceless = rep.b_mat().trace().is_zero();
        zero_trace += usize::from(traceless);
        for (ext, _) in &exts {
            let report = slb3_test(ext).map_err(|e| e.to_string())?;
            ensure(report.direct == traceless, || format!("tw2 draw {draw}: slb3 {} vs Tr(B) = 0 {traceless}", report.direct))?;
            if let Some(c) = report.commutator {
                ensure(c == report.direct, || "commutator route disagrees".into())?;
            }
        }
    }
    let mut nonstandard = 0;
    while nonstandard < DRAWS {
        let (l1, l2, z) = (scalar(&mut r, &f), scalar(&mut r, &f), scalar(&mut r, &f));
        if z.pow(3).unwrap() == &l1 / &l2 {
            continue;
        }
        let rep = nonstandard_3d(&l1, &l2, &z).map_err(|e| e.to_string())?;
        ensure(holds(&rep, GroupKind::SLB3), || "nonstandard_3d fails SLB3".into())?;
        ensure(!rep.s().unwrap().is_proportional_to(&rep.ab().unwrap()), || "S proportional to AB".into())?;
        nonstandard += 1;
    }
    Ok(format!(
        "perm3 x {DRAWS} both routes; 50 tw2 draws ({zero_trace} with Tr(B) = 0) match; nonstandard_3d x {DRAWS} SLB3, S not ~ AB"
    ))
}

fn structural(built: &[Built]) -> Outcome {
    let mut projectors = 0;
    let mut l2 = 0;
    let mut triangles = 0;
    for b in built {
        for (ext, cert) in &b.exts {
            let s = &cert.s;
            let d = s.dim();
            let [p1, pw, pw2] = s.eigenprojectors_order3().map_err(|e| e.to_string())?;
            let ps = [&p1, &pw, &pw2];
            let complete = &(&p1 + &pw) + &pw2;
            let mut ok = complete.is_identity();
            for (i, p) in ps.iter().enumerate() {
                ok &= &(*p * *p) == *p;
                for (j, q) in ps.iter().enumerate() {
                    if i != j {
                        ok &= (*p * *q).is_zero();
                    }
                }
            }
            ensure(ok, || "eigenprojector identities fail".into())?;
            projectors += 1;
            let c = ext.l2_conditions().map_err(|e| e.to_string())?;
            ensure(c.iter().all(|x| *x == c[0]) && c[0], || format!("L2 conditions {c:?}"))?;
            l2 += 1;
            if matches!(b.family, Family::Tw4 | Family::Tw5) {
                let (a, bm) = (ext.a_mat(), ext.b_mat());
                let bsa = &(bm * s) * a;
                ensure(
                    (a * bm).is_skew_lower()
                        && s.is_skew_lower()
                        && bsa.is_skew_lower()
                        && (s * s).is_skew_upper()
                        && (&bsa * &bsa).is_skew_upper(),
                    || format!("skew triangularity fails in dim {d}"),
                )?;
                triangles += 1;
            }
        }
    }
    let mut r = rng(700);
    let f = field();
    for d in 1..=6 {
        for _ in 0..100 {
            let x = CMatrix::from_fn(&f, d, d, |_, _| {
                if r.gen_bool(0.3) {
                    CycNum::zero(&f)
                } else {
                    scalar(&mut r, &f)
                }
            });
            ensure(x.char_poly().eval_matrix(&x).is_zero(), || format!("Cayley-Hamilton fails in dim {d}"))?;
        }
    }
    Ok(format!(
        "{projectors} projector triples, Cayley-Hamilton 6 x 100, L2 chain on {l2} reps, {triangles} tw4/tw5 skew checks"
    ))
}

fn vb3(built: &[Built]) -> Outcome {
    let mut count = 0;
    for b in built {
        for (ext, cert) in &b.exts {
            let lifted = vb3_lift(ext, &cert.k).map_err(|e| format!("{}: {e}", b.family))?;
            ensure(holds(&lifted, GroupKind::VB3), || format!("{} lift fails VB3", b.family))?;
            ensure(lifted.s().unwrap().trace() == cert.s.trace(), || "Tr(new S) != Tr(kAB)".into())?;
            count += 1;
        }
    }
    Ok(format!("{count} lifts verified VB3 with Tr(S) preserved"))
}

fn run(n: usize, title: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
    });
    let secs = start.elapsed().as_secs_f64();
    match res {
        Ok(detail) => {
            println!("criterion {n} [{title}]: PASS ({secs:.1}s) {detail}");
            true
        }
        Err(why) => {
            println!("criterion {n} [{title}]: FAIL ({secs:.1}s) {why}");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= run(1, "relation suites", relation_suites);
    ok &= run(2, "trace and cube identities", trace_identities);
    let built = build_extensions();
    let built_ref = &built;
    let with_built = |f: fn(&[Built]) -> Outcome| move || built_ref.as_ref().map_err(Clone::clone).and_then(|b| f(b));
    ok &= run(3, "standard-extension completeness", with_built(standard_completeness));
    ok &= run(4, "counterexample", counterexample);
    ok &= run(5, "uniqueness linearization", uniqueness);
    ok &= run(6, "SLB3 logic", slb3_logic);
    ok &= run(7, "structural properties", with_built(structural));
    ok &= run(8, "VB3 lift", with_built(vb3));
    if ok {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: some criteria fail");
        ExitCode::FAILURE
    }
}
