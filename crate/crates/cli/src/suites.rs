use std::io::{self, Write};

use msl::az::{az_involution, speh_dual};
use msl::matching::{best_matching, build_instance, coker_via_matching, hom_via_matching};
use msl::multiseg::{euler_plus, grdim, is_balanced, sym_form, Segment};
use msl::par::map_indexed;
use msl::pi_oracle::{coker_coxeter, ext1_pi, generic_hom, generic_point, hom_pi, is_rigid_component, SampleConfig};
use msl::poles::{leclerc_battery, pole_report, PoleOptions};
use msl::qrep::{
    alpha, alpha_plus, ext1_qplus, ext1_qplus_explicit, ext1_qplus_segments, hom_qplus, hom_qplus_explicit,
    hom_qplus_segments,
};
use msl::random::{ladder, regular, speh, stream, uniform, Shape};
use msl::{Error, Multisegment};
use serde::Serialize;

use crate::Suite;

/// Outcome of one battery. `failures` holds up to five failing cases,
/// smallest first.
#[derive(Debug, Clone, Serialize)]
pub struct Battery {
    pub suite: &'static str,
    pub name: &'static str,
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub batteries: Vec<Battery>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.batteries.iter().all(|b| b.passed == b.total)
    }

    pub fn failed_names(&self) -> Vec<String> {
        self.batteries.iter().filter(|b| b.passed < b.total).map(|b| format!("{}/{}", b.suite, b.name)).collect()
    }

    pub fn print<W: Write>(&self, out: &mut W) -> io::Result<()> {
        for b in &self.batteries {
            let verdict = if b.passed == b.total { "ok" } else { "FAIL" };
            writeln!(out, "{:<8} {:<28} {:>5}/{:<5} {verdict}", b.suite, b.name, b.passed, b.total)?;
            for f in &b.failures {
                writeln!(out, "    minimal failing case: {f}")?;
            }
        }
        let total: usize = self.batteries.iter().map(|b| b.total).sum();
        let passed: usize = self.batteries.iter().map(|b| b.passed).sum();
        writeln!(out, "{passed}/{total} cases passed")?;
        writeln!(out, "{}", serde_json::to_string(self).expect("summary serializes"))
    }
}

/// A case result: `None` on success, otherwise `(size, description)`.
type Case = Option<(usize, String)>;

struct Ctx<'a> {
    count: usize,
    shape: &'a Shape,
    cfg: &'a SampleConfig,
    out: Vec<Battery>,
}

impl Ctx<'_> {
    fn collect(&mut self, suite: &'static str, name: &'static str, cases: Vec<Case>) {
        let total = cases.len();
        let mut failures: Vec<(usize, String)> = cases.into_iter().flatten().collect();
        let passed = total - failures.len();
        failures.sort();
        failures.truncate(5);
        self.out.push(Battery { suite, name, total, passed, failures: failures.into_iter().map(|f| f.1).collect() });
    }

    /// Runs `case` on `count` seeded indices.
    fn battery<F>(&mut self, suite: &'static str, name: &'static str, tag: u64, case: F)
    where
        F: Fn(u64, &Shape, &SampleConfig) -> Case + Sync,
    {
        let (shape, cfg) = (self.shape, self.cfg);
        let seed = cfg.seed ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        let inner = SampleConfig { parallel: false, ..*cfg };
        let cases = map_indexed(self.count, cfg.parallel, |k| case(seed.wrapping_add(k as u64), shape, &inner));
        self.collect(suite, name, cases);
    }
}

fn fail(ok: bool, size: usize, what: impl FnOnce() -> String) -> Case {
    if ok {
        None
    } else {
        Some((size, what()))
    }
}

fn pair_size(m: &Multisegment, n: &Multisegment) -> usize {
    m.degree() + n.degree()
}

fn two(s: u64, shape: &Shape) -> (Multisegment, Multisegment) {
    let mut rng = stream(s, 0);
    (uniform(&mut rng, shape), uniform(&mut rng, shape))
}

fn core(ctx: &mut Ctx) {
    ctx.battery("core", "parse_round_trip", 1, |s, shape, _| {
        let m = uniform(&mut stream(s, 0), shape);
        let back: Result<Multisegment, _> = m.to_string().parse();
        fail(back.as_ref() == Ok(&m), m.degree(), || m.to_string())
    });
    ctx.battery("core", "dual_involution", 2, |s, shape, _| {
        let m = uniform(&mut stream(s, 0), shape);
        fail(m.dual().dual() == m && grdim(&m.dual()) == grdim(&m).reflect(), m.degree(), || m.to_string())
    });
    ctx.battery("core", "precedence_duality", 3, |s, shape, _| {
        let (m, n) = two(s, shape);
        let ok = m.iter().all(|d| n.iter().all(|g| d.precedes(g) == g.dual().precedes(&d.dual())));
        fail(ok, pair_size(&m, &n), || format!("{m} ; {n}"))
    });
    ctx.battery("core", "sym_form_symmetric", 4, |s, shape, _| {
        let (m, n) = two(s, shape);
        let (d, e) = (grdim(&m), grdim(&n));
        let ok = sym_form(&d, &e) == sym_form(&e, &d) && sym_form(&d, &e) == euler_plus(&d, &e) + euler_plus(&e, &d);
        fail(ok, pair_size(&m, &n), || format!("{m} ; {n}"))
    });
    ctx.battery("core", "balanced_witness", 5, |s, shape, _| {
        let m = regular(&mut stream(s, 0), shape);
        let ok = match is_balanced(&m) {
            Ok((bal, w)) => bal == w.is_none() && w.is_none_or(|w| w.is_valid()),
            Err(_) => false,
        };
        fail(ok, m.degree(), || m.to_string())
    });
}

fn az(ctx: &mut Ctx) {
    ctx.battery("az", "involution", 11, |s, shape, _| {
        let m = uniform(&mut stream(s, 0), shape);
        let star = az_involution(&m);
        fail(az_involution(&star) == m, m.degree(), || format!("{m} -> {star}"))
    });
    ctx.battery("az", "grdim", 12, |s, shape, _| {
        let m = uniform(&mut stream(s, 0), shape);
        fail(grdim(&az_involution(&m)) == grdim(&m), m.degree(), || m.to_string())
    });
    ctx.battery("az", "speh_law", 13, |s, shape, _| {
        let m = speh(&mut stream(s, 0), shape);
        fail(speh_dual(&m) == Some(az_involution(&m)), m.degree(), || m.to_string())
    });
}

fn qrep(ctx: &mut Ctx) {
    let (lo, hi) = (ctx.shape.lo, ctx.shape.hi);
    let segs: Vec<Segment> = (lo..=hi).flat_map(|a| (a..=hi).map(move |b| Segment::new(a, b).unwrap())).collect();
    let pairs: Vec<(Segment, Segment)> = segs.iter().flat_map(|d| segs.iter().map(move |g| (*d, *g))).collect();
    let cases = map_indexed(pairs.len(), ctx.cfg.parallel, |k| {
        let (d, g) = pairs[k];
        let (md, mg) = (Multisegment::new([d]), Multisegment::new([g]));
        let ok = hom_qplus_segments(&d, &g) == hom_qplus_explicit(&md, &mg)
            && ext1_qplus_segments(&d, &g) == ext1_qplus_explicit(&md, &mg);
        fail(ok, d.len() + g.len(), || format!("{d} ; {g}"))
    });
    ctx.collect("qrep", "segment_closed_forms", cases);
    ctx.battery("qrep", "euler_identity", 21, |s, shape, _| {
        let (m, n) = two(s, shape);
        let lhs = hom_qplus(&m, &n) as i64 - ext1_qplus(&m, &n) as i64;
        fail(lhs == euler_plus(&grdim(&m), &grdim(&n)), pair_size(&m, &n), || format!("{m} ; {n}"))
    });
    ctx.battery("qrep", "alpha_forms", 22, |s, shape, _| {
        let (m, n) = two(s, shape);
        let d = sym_form(&grdim(&m), &grdim(&n));
        let ok = alpha_plus(&m, &n) + alpha_plus(&n, &m) == d && alpha(&m, &n) == alpha(&n, &m) && alpha(&m, &n) == -d;
        fail(ok, pair_size(&m, &n), || format!("{m} ; {n}"))
    });
}

fn oracle(ctx: &mut Ctx) {
    ctx.battery("oracle", "moment_map_relation", 31, |s, shape, cfg| {
        let m = uniform(&mut stream(s, 0), shape);
        let x = generic_point(&m, cfg, s);
        fail(x.relation_holds(&cfg.field()), m.degree(), || m.to_string())
    });
    ctx.battery("oracle", "crawley_boevey", 32, |s, shape, cfg| {
        let (m, n) = two(s, shape);
        let f = cfg.field();
        let (x, y) = (generic_point(&m, cfg, 0), generic_point(&n, cfg, 1));
        let cb = hom_pi(&f, &x, &y) as i64 + hom_pi(&f, &y, &x) as i64 - sym_form(&grdim(&m), &grdim(&n));
        fail(ext1_pi(&f, &x, &y) as i64 == cb, pair_size(&m, &n), || format!("{m} ; {n}"))
    });
    ctx.battery("oracle", "duality", 33, |s, shape, cfg| {
        let (m, n) = two(s, shape);
        let h = generic_hom(&m, &n, cfg);
        let ok = generic_hom(&n.dual(), &m.dual(), cfg) == h
            && generic_hom(&az_involution(&n), &az_involution(&m), cfg) == h;
        fail(ok, pair_size(&m, &n), || format!("{m} ; {n}"))
    });
    ctx.battery("oracle", "samples_monotone", 34, |s, shape, cfg| {
        let (m, n) = two(s, shape);
        let more = SampleConfig { samples: cfg.samples * 2, ..*cfg };
        fail(generic_hom(&m, &n, &more) <= generic_hom(&m, &n, cfg), pair_size(&m, &n), || format!("{m} ; {n}"))
    });
    ctx.battery("oracle", "balanced_iff_rigid", 35, |s, shape, cfg| {
        let m = regular(&mut stream(s, 0), shape);
        let bal = is_balanced(&m).map(|b| b.0).unwrap_or(false);
        fail(bal == is_rigid_component(&m, cfg), m.degree(), || format!("{m}: balanced {bal}"))
    });
}

fn matching(ctx: &mut Ctx) {
    ctx.battery("matching", "ladder_vs_oracle", 41, |s, shape, cfg| {
        let mut rng = stream(s, 0);
        let l = ladder(&mut rng, shape);
        let other = uniform(&mut rng, shape);
        let (m, n) = if s % 2 == 0 { (l, other) } else { (other, l) };
        let ok = hom_via_matching(&m, &n).ok() == Some(generic_hom(&m, &n, cfg))
            && coker_via_matching(&m, &n).ok() == Some(coker_coxeter(&m, &n, cfg));
        fail(ok, pair_size(&m, &n), || format!("{m} ; {n}"))
    });
    ctx.battery("matching", "matching_valid", 42, |s, shape, _| {
        let (m, n) = two(s, shape);
        let inst = build_instance(&m, &n);
        fail(best_matching(&inst).is_valid_for(&inst), pair_size(&m, &n), || format!("{m} ; {n}"))
    });
}

fn poles(ctx: &mut Ctx) {
    ctx.battery("poles", "checked_reports", 51, |s, shape, cfg| {
        let (m, n) = two(s, shape);
        match pole_report(&m, &n, &PoleOptions::checked(*cfg)) {
            Ok(r) => fail(r.all_passed(), pair_size(&m, &n), || format!("{m} ; {n}: {}", r.failures().join(","))),
            Err(e) => Some((pair_size(&m, &n), format!("{m} ; {n}: {e}"))),
        }
    });
    ctx.battery("poles", "frak_d_symmetric", 52, |s, shape, cfg| {
        let (m, n) = two(s, shape);
        let opts = PoleOptions::auto(*cfg);
        let (a, b) = (pole_report(&m, &n, &opts), pole_report(&n, &m, &opts));
        let ok = matches!((&a, &b), (Ok(a), Ok(b)) if a.frak_d == b.frak_d && a.frak_d >= 0);
        fail(ok, pair_size(&m, &n), || format!("{m} ; {n}"))
    });
    ctx.battery("poles", "block_additivity", 53, |s, shape, cfg| {
        let (m1, n1) = two(s, shape);
        let (m2, n2) = two(s ^ 1, shape);
        let gap = shape.hi - shape.lo + 2;
        let (m2, n2) = (m2.translate(gap), n2.translate(gap));
        let opts = PoleOptions::auto(*cfg);
        let ok = (|| -> Result<bool, Error> {
            let whole = pole_report(&m1.sum(&m2), &n1.sum(&n2), &opts)?;
            let a = pole_report(&m1, &n1, &opts)?;
            let b = pole_report(&m2, &n2, &opts)?;
            Ok(whole.lambda_l == a.lambda_l + b.lambda_l
                && whole.lambda_z == a.lambda_z + b.lambda_z
                && whole.alpha == a.alpha + b.alpha)
        })()
        .unwrap_or(false);
        fail(ok, pair_size(&m1, &n1) + pair_size(&m2, &n2), || format!("{m1}+{m2} ; {n1}+{n2}"))
    });
}

fn leclerc(ctx: &mut Ctx) -> Result<(), Error> {
    let suite = leclerc_battery(ctx.cfg, 50)?;
    let mut cases: Vec<Case> = suite.checks.iter().map(|c| fail(c.passed, 0, || c.name.clone())).collect();
    cases.extend(suite.reports.iter().map(|r| fail(r.all_passed(), 0, || format!("{} ; {}", r.m, r.n))));
    ctx.collect("leclerc", "battery", cases);
    Ok(())
}

pub fn run(suite: Suite, count: usize, shape: &Shape, cfg: &SampleConfig) -> Result<Summary, Error> {
    let mut ctx = Ctx { count, shape, cfg, out: Vec::new() };
    let all = suite == Suite::All;
    if all || suite == Suite::Core {
        core(&mut ctx);
    }
    if all || suite == Suite::Az {
        az(&mut ctx);
    }
    if all || suite == Suite::Qrep {
        qrep(&mut ctx);
    }
    if all || suite == Suite::Oracle {
        oracle(&mut ctx);
    }
    if all || suite == Suite::Matching {
        matching(&mut ctx);
    }
    if all || suite == Suite::Poles {
        poles(&mut ctx);
    }
    if all || suite == Suite::Leclerc {
        leclerc(&mut ctx)?;
    }
    Ok(Summary { batteries: ctx.out })
}
