//! Pole orders `Λ`, `Λ^nr`, `α`, `α₊` and `𝔡` of intertwining operators.
//!
//! `Λ(L(m), L(n)) = hom_Π(C(m), C(n))` and `Λ(Z(m), Z(n)) = hom_Π(C(n), C(m))`.
//! These are identities when one of `m, n, m*, n*` is balanced; outside
//! that range the report is flagged conjectural. Every generic Hom is
//! computed by one of three backends: the Speh closed form, best matchings
//! (one side a ladder) or the randomized oracle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::az::az_involution;
use crate::error::{Error, Result};
use crate::matching::{coker_via_matching, hom_via_matching};
use crate::multiseg::{arranged_form, is_ladder, is_regular_balanced, is_speh, Multisegment};
use crate::pi_oracle::{
    coker_coxeter, generic_ext1, generic_ext1_direct, generic_hom, is_rigid_component, strongly_commute, SampleConfig,
};
use crate::qrep::{alpha, alpha_plus};
use crate::random::{uniform, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Speh,
    Matching,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Speh, Method::Matching, Method::Oracle];

    /// Whether the backend's hypothesis holds for the pair (symmetric in `m`, `n`).
    pub fn applies(self, m: &Multisegment, n: &Multisegment) -> bool {
        match self {
            Method::Speh => is_speh(m) && is_speh(n),
            Method::Matching => is_ladder(m) || is_ladder(n),
            Method::Oracle => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::Speh => "speh",
            Method::Matching => "matching",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `auto` or a forced backend.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodChoice {
    #[default]
    Auto,
    Speh,
    Matching,
    Oracle,
}

impl FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(MethodChoice::Auto),
            "speh" => Ok(MethodChoice::Speh),
            "matching" => Ok(MethodChoice::Matching),
            "oracle" => Ok(MethodChoice::Oracle),
            other => Err(Error::Config(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PoleOptions {
    pub method: MethodChoice,
    /// Run every applicable backend and all cross-checks.
    pub check: bool,
    pub cfg: SampleConfig,
}

impl PoleOptions {
    pub fn auto(cfg: SampleConfig) -> Self {
        PoleOptions { method: MethodChoice::Auto, check: false, cfg }
    }

    pub fn checked(cfg: SampleConfig) -> Self {
        PoleOptions { method: MethodChoice::Auto, check: true, cfg }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crosscheck {
    pub name: String,
    pub passed: bool,
}

impl Crosscheck {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Crosscheck { name: name.into(), passed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleReport {
    pub m: Multisegment,
    pub n: Multisegment,
    /// `Λ(Z(m), Z(n))`.
    #[serde(rename = "lambda_Z")]
    pub lambda_z: i64,
    /// `Λ(L(m), L(n))`.
    #[serde(rename = "lambda_L")]
    pub lambda_l: i64,
    /// `Λ^nr(L(m), L(n))`.
    pub lambda_nr: i64,
    pub alpha: i64,
    pub alpha_plus: i64,
    pub frak_d: i64,
    pub method: Method,
    /// No balanced input among `m, n, m*, n*`.
    pub conjectural: bool,
    pub crosschecks: Vec<Crosscheck>,
}

impl PoleReport {
    pub fn all_passed(&self) -> bool {
        self.crosschecks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.crosschecks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}

fn hom_by(method: Method, m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> Result<usize> {
    match method {
        Method::Speh => speh_lambda(m, n),
        Method::Matching => hom_via_matching(m, n),
        Method::Oracle => Ok(generic_hom(m, n, cfg)),
    }
}

fn coker_by(method: Method, m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> Result<usize> {
    match method {
        Method::Speh => speh_lambda_nr(m, n),
        Method::Matching => coker_via_matching(m, n),
        Method::Oracle => Ok(coker_coxeter(m, n, cfg)),
    }
}

/// First applicable backend in precedence order, or the forced one.
pub fn select_method(m: &Multisegment, n: &Multisegment, choice: MethodChoice) -> Result<Method> {
    let forced = match choice {
        MethodChoice::Auto => return Ok(Method::ALL.into_iter().find(|b| b.applies(m, n)).unwrap()),
        MethodChoice::Speh => Method::Speh,
        MethodChoice::Matching => Method::Matching,
        MethodChoice::Oracle => Method::Oracle,
    };
    if forced.applies(m, n) {
        Ok(forced)
    } else {
        Err(Error::Precondition(format!("method {forced} does not apply to ({m}, {n})")))
    }
}

type Quantity = fn(Method, &Multisegment, &Multisegment, &SampleConfig) -> Result<usize>;

/// Evaluates with the selected backend; in check mode also with every other
/// applicable backend, recording one cross-check per extra backend.
fn evaluate(
    label: &str,
    q: Quantity,
    m: &Multisegment,
    n: &Multisegment,
    opts: &PoleOptions,
    checks: &mut Vec<Crosscheck>,
) -> Result<(usize, Method)> {
    let method = select_method(m, n, opts.method)?;
    let value = q(method, m, n, &opts.cfg)?;
    if opts.check {
        for other in Method::ALL {
            if other != method && other.applies(m, n) {
                let v = q(other, m, n, &opts.cfg)?;
                checks.push(Crosscheck::new(format!("{label}:{method}={other}"), v == value));
            }
        }
    }
    Ok((value, method))
}

fn auto_hom(m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> usize {
    let method = select_method(m, n, MethodChoice::Auto).unwrap();
    hom_by(method, m, n, cfg).expect("auto backend applies")
}

/// Builds the full report. Cross-check failures are recorded, not raised;
/// only unmet preconditions of a forced backend are errors.
pub fn pole_report(m: &Multisegment, n: &Multisegment, opts: &PoleOptions) -> Result<PoleReport> {
    opts.cfg.validate()?;
    let mut checks = Vec::new();
    let (hom_mn, method) = evaluate("lambda_L", hom_by, m, n, opts, &mut checks)?;
    let (hom_nm, _) = evaluate("lambda_Z", hom_by, n, m, opts, &mut checks)?;
    let a = alpha(m, n);
    let ap = alpha_plus(m, n);
    let lambda_l = hom_mn as i64;
    let lambda_z = hom_nm as i64;
    let lambda_nr = lambda_l - ap;
    let frak_d = lambda_l + lambda_z + a;

    if opts.check {
        let (coker, _) = evaluate("lambda_nr", coker_by, m, n, opts, &mut checks)?;
        checks.push(Crosscheck::new("lambda_nr=coker", coker as i64 == lambda_nr));

        let (ms, ns) = (az_involution(m), az_involution(n));
        checks.push(Crosscheck::new("az_transport", auto_hom(&ms, &ns, &opts.cfg) as i64 == lambda_z));
        let (md, nd) = (m.dual(), n.dual());
        checks.push(Crosscheck::new("contragredient", auto_hom(&nd, &md, &opts.cfg) as i64 == lambda_l));
        checks.push(Crosscheck::new("az_duality", auto_hom(&ns, &ms, &opts.cfg) as i64 == lambda_l));

        let ext = generic_ext1_direct(m, n, &opts.cfg) as i64;
        checks.push(Crosscheck::new("crawley_boevey", ext == frak_d));
        checks.push(Crosscheck::new("nonnegative", lambda_nr >= 0 && frak_d >= 0));
    }

    Ok(PoleReport {
        m: m.clone(),
        n: n.clone(),
        lambda_z,
        lambda_l,
        lambda_nr,
        alpha: a,
        alpha_plus: ap,
        frak_d,
        method,
        conjectural: is_conjectural(m, n),
        crosschecks: checks,
    })
}

/// Like [`pole_report`], but any failed cross-check is an error.
pub fn compute(m: &Multisegment, n: &Multisegment, opts: &PoleOptions) -> Result<PoleReport> {
    let report = pole_report(m, n, opts)?;
    if report.all_passed() {
        Ok(report)
    } else {
        Err(disagreement(&report))
    }
}

fn disagreement(report: &PoleReport) -> Error {
    Error::Disagreement {
        quantity: report.failures().join(","),
        details: serde_json::to_string(report).unwrap_or_default(),
    }
}

/// True when none of `m, n, m*, n*` is balanced, so the formula is unproven for the pair.
pub fn is_conjectural(m: &Multisegment, n: &Multisegment) -> bool {
    ![m.clone(), n.clone(), az_involution(m), az_involution(n)].iter().any(is_regular_balanced)
}

fn checked_value(
    label: &str,
    q: Quantity,
    m: &Multisegment,
    n: &Multisegment,
    cfg: &SampleConfig,
) -> Result<usize> {
    let opts = PoleOptions::checked(*cfg);
    let mut checks = Vec::new();
    let (v, _) = evaluate(label, q, m, n, &opts, &mut checks)?;
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(Error::Disagreement { quantity: c.name.clone(), details: format!("m = {m}, n = {n}") }),
        None => Ok(v),
    }
}

/// `Λ(L(m), L(n))`, all applicable backends required to agree.
#[allow(non_snake_case)]
pub fn lambda_L(m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> Result<usize> {
    checked_value("lambda_L", hom_by, m, n, cfg)
}

/// `Λ(Z(m), Z(n)) = hom_Π(C(n), C(m))`; must also equal `Λ(L(m*), L(n*))`.
#[allow(non_snake_case)]
pub fn lambda_Z(m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> Result<usize> {
    let direct = checked_value("lambda_Z", hom_by, n, m, cfg)?;
    let via_az = checked_value("lambda_Z", hom_by, &az_involution(m), &az_involution(n), cfg)?;
    if direct != via_az {
        return Err(Error::Disagreement {
            quantity: "az_transport".into(),
            details: format!("m = {m}, n = {n}: direct {direct}, via AZ {via_az}"),
        });
    }
    Ok(direct)
}

/// `Λ^nr(L(m), L(n)) = Λ(L(m), L(n)) - α₊(m, n)`.
pub fn lambda_nr(m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> Result<usize> {
    let v = lambda_L(m, n, cfg)? as i64 - alpha_plus(m, n);
    let coker = checked_value("lambda_nr", coker_by, m, n, cfg)?;
    if v != coker as i64 {
        return Err(Error::Disagreement {
            quantity: "lambda_nr".into(),
            details: format!("m = {m}, n = {n}: lambda_L - alpha_plus = {v}, coker = {coker}"),
        });
    }
    Ok(coker)
}

/// `𝔡(Z(m), Z(n)) = Λ(Z(m),Z(n)) + Λ(Z(n),Z(m)) + α(m, n)`, checked against `ext¹_Π`.
pub fn frak_d(m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> Result<usize> {
    let d = lambda_Z(m, n, cfg)? as i64 + lambda_Z(n, m, cfg)? as i64 + alpha(m, n);
    let ext = generic_ext1(n, m, cfg) as i64;
    if d != ext || d < 0 {
        return Err(Error::Disagreement {
            quantity: "frak_d".into(),
            details: format!("m = {m}, n = {n}: frak_d {d}, ext1 {ext}"),
        });
    }
    Ok(d as usize)
}

fn speh_listings(m: &Multisegment, n: &Multisegment) -> Result<Option<(Vec<crate::Segment>, Vec<crate::Segment>)>> {
    for x in [m, n] {
        if !is_speh(x) {
            return Err(Error::Precondition(format!("{x} is not a Speh multisegment")));
        }
    }
    if m.is_empty() || n.is_empty() {
        return Ok(None);
    }
    Ok(Some((arranged_form(m), arranged_form(n))))
}

/// `min(#{j : shift(Γ_j) ≺ Δ_1}, #{i : shift(Γ_l) ≺ Δ_i})` for Speh `m = ΣΔ_i`, `n = ΣΓ_j`.
pub fn speh_lambda(m: &Multisegment, n: &Multisegment) -> Result<usize> {
    let Some((d, g)) = speh_listings(m, n)? else { return Ok(0) };
    let left = g.iter().filter(|gj| gj.shift().precedes(&d[0])).count();
    let last = g.last().unwrap().shift();
    let right = d.iter().filter(|di| last.precedes(di)).count();
    Ok(left.min(right))
}

/// `min(#{j : Γ_j ≺ Δ_k}, #{i : Γ_1 ≺ Δ_i})` for Speh `m`, `n`.
pub fn speh_lambda_nr(m: &Multisegment, n: &Multisegment) -> Result<usize> {
    let Some((d, g)) = speh_listings(m, n)? else { return Ok(0) };
    let dk = d.last().unwrap();
    let left = g.iter().filter(|gj| gj.precedes(dk)).count();
    let right = d.iter().filter(|di| g[0].precedes(di)).count();
    Ok(left.min(right))
}

pub fn leclerc() -> Multisegment {
    "[4,5]+[2,4]+[3,3]+[1,2]".parse().unwrap()
}

/// The pair `(m₁, m₂) = ([1,4]+[2,5], [1,2]+[2,3]+[3,4]+[4,5])`.
pub fn leclerc_pair() -> (Multisegment, Multisegment) {
    ("[1,4]+[2,5]".parse().unwrap(), "[1,2]+[2,3]+[3,4]+[4,5]".parse().unwrap())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeclercSuite {
    pub reports: Vec<PoleReport>,
    pub checks: Vec<Crosscheck>,
}

impl LeclercSuite {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.reports.iter().all(PoleReport::all_passed)
    }

    /// Pass/fail verdicts with check names, for seed-stability comparisons.
    pub fn verdicts(&self) -> Vec<(String, bool)> {
        self.checks.iter().map(|c| (c.name.clone(), c.passed)).collect()
    }
}

/// Runs the Leclerc battery without raising on failure. The additivity
/// check uses `randoms` multisegments with at most 4 segments in `[0,6]`.
pub fn leclerc_battery(cfg: &SampleConfig, randoms: usize) -> Result<LeclercSuite> {
    let lec = leclerc();
    let (m1, m2) = leclerc_pair();
    let opts = PoleOptions::checked(*cfg);
    let lec_report = pole_report(&lec, &lec, &opts)?;
    let pair_report = pole_report(&m1, &m2, &opts)?;
    let mut checks = vec![
        Crosscheck::new("lambda_Z(lec,lec)=2", lec_report.lambda_z == 2),
        Crosscheck::new("frak_d(lec,lec)=0", lec_report.frak_d == 0),
        Crosscheck::new("strongly_commute(lec,lec)", strongly_commute(&lec, &lec, cfg)),
        Crosscheck::new("not is_rigid_component(lec)", !is_rigid_component(&lec, cfg)),
    ];
    let sum = m1.sum(&m2);
    let shape = Shape::new(4, 0, 6)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ns: Vec<Multisegment> = (0..randoms).map(|_| uniform(&mut rng, &shape)).collect();
    let additive = crate::par::map_indexed(ns.len(), cfg.parallel, |k| {
        let n = &ns[k];
        generic_hom(n, &sum, cfg) == generic_hom(n, &m1, cfg) + generic_hom(n, &m2, cfg)
    });
    for (n, ok) in ns.iter().zip(additive) {
        checks.push(Crosscheck::new(format!("additivity({n})"), ok));
    }
    Ok(LeclercSuite { reports: vec![lec_report, pair_report], checks })
}

/// The Leclerc battery; fails naming the first identity that does not hold.
pub fn leclerc_suite(cfg: &SampleConfig) -> Result<LeclercSuite> {
    let suite = leclerc_battery(cfg, 50)?;
    if let Some(c) = suite.checks.iter().find(|c| !c.passed) {
        return Err(Error::Battery(c.name.clone()));
    }
    if let Some(r) = suite.reports.iter().find(|r| !r.all_passed()) {
        return Err(Error::Battery(format!("({}, {}): {}", r.m, r.n, r.failures().join(","))));
    }
    Ok(suite)
}

/// Multisegments on several cuspidal lines, keyed by a line label.
/// Pole orders and `α` add over lines.
pub type Lined = BTreeMap<String, Multisegment>;

/// Sums the per-line reports over the union of the lines of `m` and `n`.
pub fn lined_report(m: &Lined, n: &Lined, opts: &PoleOptions) -> Result<PoleReport> {
    let empty = Multisegment::empty();
    let mut lines: Vec<&String> = m.keys().chain(n.keys()).collect();
    lines.sort();
    lines.dedup();
    let mut total = PoleReport {
        m: empty.clone(),
        n: empty.clone(),
        lambda_z: 0,
        lambda_l: 0,
        lambda_nr: 0,
        alpha: 0,
        alpha_plus: 0,
        frak_d: 0,
        method: Method::Speh,
        conjectural: false,
        crosschecks: Vec::new(),
    };
    for line in lines {
        let r = pole_report(m.get(line).unwrap_or(&empty), n.get(line).unwrap_or(&empty), opts)?;
        total.lambda_z += r.lambda_z;
        total.lambda_l += r.lambda_l;
        total.lambda_nr += r.lambda_nr;
        total.alpha += r.alpha;
        total.alpha_plus += r.alpha_plus;
        total.frak_d += r.frak_d;
        total.method = total.method.max(r.method);
        total.conjectural |= r.conjectural;
        total.crosschecks.extend(r.crosschecks.into_iter().map(|c| Crosscheck::new(format!("{line}/{}", c.name), c.passed)));
    }
    Ok(total)
}
