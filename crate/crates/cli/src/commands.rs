use std::env;
use std::path::{Path, PathBuf};

use loopbraid::catalog::{
    abeq_family, binomial_rep, counterexample6, lkb3, perm3, tw2, tw3, tw4, tw5, v1_family, BinomialParams,
    BlockVariant, Family, Sign, Tw2Family,
};
use loopbraid::extend::{
    certify_no_extension, cube_root_candidates, conjecture_sweep, extend_with_k, nonstandard_3d, slb3_test,
    standard_extensions, standard_k_candidates, uniqueness_linearized, vb3_lift, CertificateVerdict, ExtensionCertificate,
    KSearch, KStatus, LinearizedSystem, OracleConfig, Slb3Report,
};
use loopbraid::linalg::algebra_dimension;
use loopbraid::rep::Verdict;
use loopbraid::{CycNum, Field, GroupKind, LBRep, Relation};
use serde::Serialize;

use crate::report::{emit, read_rep, write_json, Failure, Input, Outcome, NO_EXTENSION, RELATIONS_FAIL};
use crate::{ConstructArgs, Mode, OracleArgs};

const SEED_VAR: &str = "LOOPBRAID_SEED";

fn num(s: &str) -> Outcome<CycNum> {
    CycNum::parse(s).map_err(|e| Failure::input(format!("{s:?}: {e}")))
}

fn flag(v: &Option<String>, name: &str) -> Outcome<CycNum> {
    num(v.as_deref().ok_or_else(|| Failure::input(format!("--{name} is required")))?)
}

fn lambdas(args: &ConstructArgs, arity: usize) -> Outcome<Vec<CycNum>> {
    if args.lambda.len() != arity {
        return Err(Failure::input(format!("expected {arity} values for --lambda, got {}", args.lambda.len())));
    }
    args.lambda.iter().map(|s| num(s)).collect()
}

fn block(s: &str) -> Outcome<BlockVariant> {
    match s.to_ascii_lowercase().as_str() {
        "plain" => Ok(BlockVariant::Plain),
        "capped" => Ok(BlockVariant::Capped),
        _ => Err(Failure::input(format!("block variant must be plain or capped, got {s:?}"))),
    }
}

fn seed(flag: u64) -> Outcome<u64> {
    match env::var(SEED_VAR) {
        Ok(s) => s.trim().parse().map_err(|e| Failure::input(format!("{SEED_VAR}={s:?}: {e}"))),
        Err(_) => Ok(flag),
    }
}

fn require(rep: &LBRep, kind: GroupKind) -> Outcome<()> {
    let report = rep.verify(kind)?;
    if report.all_hold() {
        Ok(())
    } else {
        Err(Failure::input(format!("input is not a {kind} representation: {:?} fail", report.failing())))
    }
}

pub fn construct(args: &ConstructArgs) -> Outcome<()> {
    let family: Family = args.family.parse()?;
    let rep = match family {
        Family::Tw2 => {
            let variant = match args.variant.to_ascii_lowercase().as_str() {
                "reducible" => Tw2Family::Reducible,
                "irreducible" => Tw2Family::Irreducible,
                v => return Err(Failure::input(format!("--variant must be reducible or irreducible, got {v:?}"))),
            };
            let l = lambdas(args, 2)?;
            tw2(variant, &l[0], &l[1])?
        }
        Family::Tw3 => {
            let l = lambdas(args, 3)?;
            tw3(&l[0], &l[1], &l[2])?
        }
        Family::Tw4 => {
            let l: [CycNum; 4] = lambdas(args, 4)?.try_into().unwrap();
            tw4(&l, &flag(&args.gamma2, "gamma2")?)?
        }
        Family::Tw5 => {
            let l: [CycNum; 5] = lambdas(args, 5)?.try_into().unwrap();
            tw5(&l, &flag(&args.gamma, "gamma")?)?
        }
        Family::Binomial => {
            if args.lambda.len() < 2 {
                return Err(Failure::input("binomial needs at least two values for --lambda"));
            }
            let l = lambdas(args, args.lambda.len())?;
            binomial_rep(&BinomialParams::new(l, flag(&args.c, "c")?)?)?
        }
        Family::Counterexample6 => counterexample6(),
        Family::V1 => {
            let l = lambdas(args, 1)?;
            v1_family(&l[0], &flag(&args.x, "x")?)?
        }
        Family::Abeq => {
            let n = args.n.ok_or_else(|| Failure::input("--n is required"))?;
            let (d1, d2) = if n % 2 == 1 { ("plain", "capped") } else { ("capped", "plain") };
            let a1 = block(args.a1.as_deref().unwrap_or(d1))?;
            let a2 = block(args.a2.as_deref().unwrap_or(d2))?;
            let sign = match args.sign.as_str() {
                "plus" | "+" => Sign::Plus,
                "minus" | "-" => Sign::Minus,
                s => return Err(Failure::input(format!("--sign must be plus or minus, got {s:?}"))),
            };
            abeq_family(n, &flag(&args.mu, "mu")?, &flag(&args.sqrt_mu, "sqrt-mu")?, a1, a2, sign)?
        }
        Family::Lkb3 => lkb3(&flag(&args.q, "q")?, &flag(&args.t, "t")?)?,
        Family::Perm3 => perm3(&flag(&args.t, "t")?)?,
    };
    write_json(&rep, args.out.as_ref())
}

#[derive(Serialize)]
struct RelationLine {
    relation: &'static str,
    verdict: Verdict,
}

#[derive(Serialize)]
struct VerifyBody {
    group: GroupKind,
    all_hold: bool,
    failing: Vec<&'static str>,
    relations: Vec<RelationLine>,
}

pub fn verify(file: &Path, group: GroupKind, out: Option<&PathBuf>) -> Outcome<()> {
    let input = read_rep(file)?;
    let report = input.rep.verify(group)?;
    let body = VerifyBody {
        group,
        all_hold: report.all_hold(),
        failing: report.failing().iter().map(|r| r.name()).collect(),
        relations: Relation::ALL
            .iter()
            .map(|&r| RelationLine { relation: r.name(), verdict: report.verdict(r) })
            .collect(),
    };
    emit("verify", Some(&input), &body, out)?;
    if body.all_hold {
        Ok(())
    } else {
        Err(Failure::new(RELATIONS_FAIL, format!("{group} relations fail: {}", body.failing.join(", "))))
    }
}

#[derive(Serialize)]
struct ExtendBody {
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    promoted_to: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    search: Option<KSearch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<ExtensionCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<CycNum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<GroupKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    representation: Option<LBRep>,
}

impl ExtendBody {
    fn new(mode: &'static str) -> ExtendBody {
        ExtendBody { mode, promoted_to: None, search: None, certificate: None, k: None, verified: None, representation: None }
    }

    fn built(mut self, rep: LBRep, kind: GroupKind) -> Outcome<ExtendBody> {
        require(&rep, kind)?;
        self.verified = Some(kind);
        self.representation = Some(rep);
        Ok(self)
    }
}

/// The report body, with the failure to exit with when the search came up empty.
type Extended = (ExtendBody, Option<Failure>);

fn extend_standard(input: &Input, k: Option<&str>) -> Outcome<Extended> {
    let mut body = ExtendBody::new("standard");
    require(&input.rep, GroupKind::B3)?;
    if let Some(k) = k {
        let (rep, cert) = extend_with_k(&input.rep, &num(k)?)?;
        body.certificate = Some(cert);
        return Ok((body.built(rep, GroupKind::LB3)?, None));
    }
    let mut rep = input.rep.clone();
    loop {
        let (search, mut exts) = standard_extensions(&rep)?;
        if let KStatus::RootsNotInField { suggested_conductor } = search.status {
            if body.promoted_to.is_none() {
                rep = rep.promote(suggested_conductor)?;
                body.promoted_to = Some(suggested_conductor);
                continue;
            }
        }
        let reason = search.status.reason();
        body.search = Some(search);
        if exts.is_empty() {
            return Ok((body, Some(Failure::new(NO_EXTENSION, format!("no standard extension: {reason}")))));
        }
        let (ext, cert) = exts.remove(0);
        body.certificate = Some(cert);
        return Ok((body.built(ext, GroupKind::LB3)?, None));
    }
}

fn extend_nonstandard(input: &Input, z: Option<&str>) -> Outcome<Extended> {
    let z = num(z.ok_or_else(|| Failure::input("--z is required for nonstandard3"))?)?;
    let rep = &input.rep;
    let a = rep.a().ok_or_else(|| Failure::input("input has no A"))?;
    if a.dim() != 3 || !a.is_upper_triangular() {
        return Err(Failure::input("nonstandard3 needs a 3-dimensional input of the form tw3(l1, l2, -l2)"));
    }
    let (l1, l2, l3) = (&a[(0, 0)], &a[(1, 1)], &a[(2, 2)]);
    let expected = tw3(l1, l2, l3)?;
    if !(l2 + l3).is_zero() || expected.a_mat() != a || Some(expected.b_mat()) != rep.b() {
        return Err(Failure::input("input is not tw3(l1, l2, -l2)"));
    }
    Ok((ExtendBody::new("nonstandard3").built(nonstandard_3d(l1, l2, &z)?, GroupKind::SLB3)?, None))
}

fn extend_vb3(input: &Input, k: Option<&str>) -> Outcome<Extended> {
    require(&input.rep, GroupKind::LB3)?;
    let k = match k {
        Some(k) => num(k)?,
        None => {
            let search = standard_k_candidates(input.rep.a_mat(), input.rep.b_mat())?;
            match search.candidates.first() {
                Some(c) => c.k.clone(),
                None => {
                    let reason = search.status.reason();
                    let mut body = ExtendBody::new("vb3");
                    body.search = Some(search);
                    return Ok((body, Some(Failure::new(NO_EXTENSION, format!("no candidate k: {reason}")))));
                }
            }
        }
    };
    let mut body = ExtendBody::new("vb3");
    body.k = Some(k.clone());
    Ok((body.built(vb3_lift(&input.rep, &k)?, GroupKind::VB3)?, None))
}

pub fn extend(file: &Path, mode: Mode, z: Option<&str>, k: Option<&str>, out: Option<&PathBuf>) -> Outcome<()> {
    let input = read_rep(file)?;
    let (body, failure) = match mode {
        Mode::Standard => extend_standard(&input, k)?,
        Mode::Nonstandard3 => extend_nonstandard(&input, z)?,
        Mode::Vb3 => extend_vb3(&input, k)?,
    };
    emit("extend", Some(&input), &body, out)?;
    failure.map_or(Ok(()), Err)
}

#[derive(Serialize)]
struct AnalyzeBody {
    target: GroupKind,
    dim: usize,
    conductor: u32,
    algebra_dimension: usize,
    irreducible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    uniqueness: Option<LinearizedSystem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    slb3: Option<Slb3Report>,
}

pub fn analyze(file: &Path, uniqueness: bool, slb3: bool, out: Option<&PathBuf>) -> Outcome<()> {
    let input = read_rep(file)?;
    let rep = &input.rep;
    let body = AnalyzeBody {
        target: rep.target(),
        dim: rep.dim(),
        conductor: rep.conductor(),
        algebra_dimension: algebra_dimension(&rep.generators()),
        irreducible: rep.is_irreducible(),
        uniqueness: if uniqueness {
            require(rep, GroupKind::B3)?;
            Some(uniqueness_linearized(rep.a_mat(), rep.b_mat())?)
        } else {
            None
        },
        slb3: if slb3 { Some(slb3_test(rep)?) } else { None },
    };
    emit("analyze", Some(&input), &body, out)
}

pub fn certify(file: &Path, args: &OracleArgs, out: Option<&PathBuf>) -> Outcome<()> {
    let input = read_rep(file)?;
    require(&input.rep, GroupKind::B3)?;
    let (a, b) = (input.rep.a_mat(), input.rep.b_mat());
    let config = OracleConfig {
        starts: args.starts,
        tol: args.tol,
        cluster_radius: args.cluster_radius,
        seed: seed(args.seed)?,
        ..OracleConfig::default()
    };
    let candidates = cube_root_candidates(a, b)?;
    let report = certify_no_extension(a, b, &candidates, &config)?;
    emit("certify", Some(&input), &report, out)?;
    if report.verdict == CertificateVerdict::OracleInconclusive {
        return Err(Failure::new(RELATIONS_FAIL, report.summary));
    }
    Ok(())
}

#[derive(Serialize)]
struct SweepBody {
    #[serde(flatten)]
    report: loopbraid::extend::SweepReport,
    rate: f64,
}

pub fn sweep(family: &str, draws: usize, seed_flag: u64, conductor: u32, out: Option<&PathBuf>) -> Outcome<()> {
    let family: Family = family.parse()?;
    if conductor == 0 {
        return Err(Failure::input("--conductor must be positive"));
    }
    let report = conjecture_sweep(family, draws, seed(seed_flag)?, &Field::new(conductor))?;
    let rate = report.rate();
    emit("sweep", None, &SweepBody { report, rate }, out)
}
