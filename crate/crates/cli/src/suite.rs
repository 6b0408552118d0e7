//! The check battery run for each kind of scenario.

use std::sync::Arc;
use std::time::Instant;

use quadstruct::algebra::{check_structurable, verify_isomorphism, StructurableMode};
use quadstruct::clifford::{CliffordContext, SYMBOLS};
use quadstruct::fts::{check_fts_axioms, fts_from_skew_dim_one, quartic, supplementary_pair};
use quadstruct::quadrangular::{
    check_axioms, check_etype_module_compat, check_fts_bridge, check_identities, check_module_compat, fts_from_quadrangular,
    isotope_multiplier_check, pq_decompose, verify_pq_similarity, Quadrangular,
};
use quadstruct::report::sample_rng;
use quadstruct::zoo::{check_jordan_norm, jordan_plus, ETypeAlgebra, LambdaWitness, MatrixAlgebra};
use quadstruct::{CheckReport, Field, InvolutiveAlgebra, Mode, SkewDimOneContext};
use rayon::prelude::*;

use crate::config::{Backend, ScenarioConfig};
use crate::instance::Instance;
use crate::report::VerificationReport;
use crate::{with_field, CliError};

/// Largest dimension for which the structurable identity is checked on every
/// basis quadruple over ℚ; finite fields are always exhaustive.
const RATIONAL_EXHAUSTIVE_DIM: usize = 16;

/// Norm-axiom samples taken while building the Cayley-Dickson double for χ.
const CD_BUILD_SAMPLES: usize = 20;

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Run the exhaustive basis checks; off for fuzzing.
    pub exhaustive: bool,
    /// Perturb one structure constant (and transpose `h` for quadrangular
    /// kinds) to exercise the failure path.
    pub debug_mutate: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { exhaustive: true, debug_mutate: false }
    }
}

pub fn run_suite(cfg: &ScenarioConfig, opts: SuiteOptions) -> Result<VerificationReport, CliError> {
    let mut notes = cfg.validate()?;
    let checks = with_field!(cfg.field, f => battery(&f, cfg, opts, &mut notes)?);
    Ok(VerificationReport::new(cfg.clone(), checks, notes))
}

/// Seeded sampled checks only, with `iterations` samples each.
pub fn fuzz(cfg: &ScenarioConfig, iterations: usize, seed: u64) -> Result<VerificationReport, CliError> {
    let cfg = ScenarioConfig { samples: iterations, seed, ..cfg.clone() };
    let opts = SuiteOptions { exhaustive: false, debug_mutate: false };
    let mut report = run_suite(&cfg, opts)?;
    report.checks.retain(|c| c.mode == Mode::Sampled);
    Ok(VerificationReport::new(report.scenario, report.checks, report.notes))
}

type Task<'a> = (&'static str, Box<dyn FnOnce() -> Result<Vec<CheckReport>, CliError> + Send + 'a>);

fn task<'a>(label: &'static str, f: impl FnOnce() -> Result<Vec<CheckReport>, CliError> + Send + 'a) -> Task<'a> {
    (label, Box::new(f))
}

#[derive(Clone, Copy)]
struct Sampling {
    samples: usize,
    seed: u64,
    height: u32,
}

fn battery<F: Field>(f: &F, cfg: &ScenarioConfig, opts: SuiteOptions, notes: &mut Vec<String>) -> Result<Vec<CheckReport>, CliError> {
    let inst = Instance::build(f, cfg)?;
    let sm = Sampling { samples: cfg.samples, seed: cfg.seed, height: cfg.height };
    let exhaustive_structurable = opts.exhaustive && (cfg.field != Backend::Rational || inst.algebra().dim() <= RATIONAL_EXHAUSTIVE_DIM);

    if !opts.exhaustive {
        let mut rng = sample_rng(sm.seed, 0);
        let x = f.random_vector(&mut rng, inst.algebra().dim(), sm.height);
        notes.push(format!("sample trace: seed {} starts at x = {}", sm.seed, f.format_vector(&x)));
    }
    let mut early = Vec::new();
    let ctx = if opts.debug_mutate {
        let (mutated, note) = mutate(inst.algebra());
        notes.push(note);
        match SkewDimOneContext::with_s0(Arc::new(mutated.clone()), inst.context().s0().to_vec()) {
            Ok(c) => Some(c),
            Err(e) => {
                let mut r = CheckReport::new("skew_dim_one_context", "dim S = 1 with s0 skew", Mode::Exhaustive);
                r.record(false, || e.to_string());
                early.push(r);
                let mut v = mutated.validate();
                v.name = "algebra_well_formed".into();
                early.push(v);
                None
            }
        }
    } else {
        Some(inst.context().clone())
    };
    let mut tasks: Vec<Task<'_>> = Vec::new();
    if let Some(ctx) = ctx.as_ref() {
        generic_tasks(&mut tasks, ctx, sm, exhaustive_structurable, inst_is_etype(&inst));
    }
    if !opts.debug_mutate {
        match &inst {
            Instance::EType(x) => etype_tasks(&mut tasks, x, sm, opts),
            Instance::Matrix(m) => matrix_tasks(&mut tasks, m, sm),
            Instance::Cd { bq, .. } => {
                let bq = bq.clone();
                let bq2 = bq.clone();
                tasks.push(task("jordan_norm", move || {
                    let nrd = |z: &[F::Elem]| bq.nrd(z).expect("16 coordinates");
                    Ok(vec![check_jordan_norm(&jordan_plus(bq.algebra())?, &nrd, sm.samples, sm.seed, sm.height)])
                }));
                tasks.push(task("left_regular_det", move || Ok(vec![left_regular_det(&bq2, sm)?])));
            }
            Instance::Pq { .. } => {}
        }
    } else {
        notes.push("kind-specific checks skipped under mutation".into());
    }
    if let Instance::Pq { omega, .. } = &inst {
        let omega = if opts.debug_mutate { omega.transposed() } else { omega.clone() };
        pq_tasks(&mut tasks, omega, sm, opts);
    }

    let results: Vec<(&'static str, Result<Vec<CheckReport>, CliError>)> = tasks
        .into_par_iter()
        .map(|(label, run)| {
            let start = Instant::now();
            let out = run().map(|mut rs| {
                let elapsed = start.elapsed();
                for r in &mut rs {
                    r.elapsed = Some(elapsed);
                }
                rs
            });
            (label, out)
        })
        .collect();
    let mut checks = early;
    for (label, res) in results {
        match res {
            Ok(rs) => checks.extend(rs),
            Err(e) if opts.debug_mutate => {
                let mut r = CheckReport::new(format!("{label}_construction"), "construction succeeds", Mode::Exhaustive);
                r.record(false, || e.to_string());
                checks.push(r);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(checks)
}

fn inst_is_etype<F: Field>(inst: &Instance<F>) -> bool {
    matches!(inst, Instance::EType(_))
}

/// Adds one to the first structure constant among non-unit basis products.
fn mutate<F: Field>(a: &InvolutiveAlgebra<F>) -> (InvolutiveAlgebra<F>, String) {
    let f = a.field();
    let n = a.dim();
    for i in 1..n {
        for j in 1..n {
            if let Some((k, c)) = a.basis_product(i, j).first() {
                let c2 = f.add(c, &f.one());
                let note = format!(
                    "debug mutation: {}·{} coefficient on {} changed from {} to {}",
                    a.names()[i],
                    a.names()[j],
                    a.names()[*k],
                    f.format(c),
                    f.format(&c2)
                );
                return (a.with_constant(i, j, *k, c2), note);
            }
        }
    }
    let c = f.one();
    (a.with_constant(n - 1, n - 1, 0, c), "debug mutation: last basis square set to 1".into())
}

/// Runs `body` on each sample in parallel; `body` records into one report per
/// entry of `names`, and the parts are merged in sample order.
fn par_sampled(
    names: &[(&str, &str)],
    sm: Sampling,
    body: impl Fn(u64, &mut [CheckReport]) -> Result<(), CliError> + Sync,
) -> Result<Vec<CheckReport>, CliError> {
    let fresh = || names.iter().map(|(n, a)| CheckReport::new(*n, *a, Mode::Sampled)).collect::<Vec<_>>();
    let parts: Vec<Vec<CheckReport>> = (0..sm.samples as u64)
        .into_par_iter()
        .map(|s| {
            let mut rs = fresh();
            body(s, &mut rs)?;
            Ok(rs)
        })
        .collect::<Result<_, CliError>>()?;
    let mut out = fresh();
    for part in parts {
        for (o, p) in out.iter_mut().zip(part) {
            o.merge(p);
        }
    }
    Ok(out)
}

fn renamed(prefix: &str, reports: Vec<CheckReport>) -> Vec<CheckReport> {
    reports
        .into_iter()
        .map(|mut r| {
            r.name = format!("{prefix}{}", r.name);
            r
        })
        .collect()
}

fn generic_tasks<'a, F: Field>(tasks: &mut Vec<Task<'a>>, ctx: &'a SkewDimOneContext<F>, sm: Sampling, exhaustive: bool, etype: bool) {
    let a = ctx.algebra();
    tasks.push(task("algebra_well_formed", move || Ok(vec![a.validate(), ctx.check_s0_law()])));
    tasks.push(task("structurable_identity", move || {
        let mode = if exhaustive {
            StructurableMode::Exhaustive
        } else {
            StructurableMode::Sampled { samples: sm.samples, seed: sm.seed, height: sm.height }
        };
        Ok(vec![check_structurable(a, mode)])
    }));
    tasks.push(task("fts_axioms", move || {
        Ok(check_fts_axioms(&fts_from_skew_dim_one(ctx), sm.samples, sm.seed, sm.height))
    }));
    if !etype {
        tasks.push(task("conjugate_inverse", move || conjugate_inverse(ctx, None, sm)));
    }
}

/// `V_{x,x̂} = V_{x̂,x} = id` on sampled `x` with `ν(x) ≠ 0`, and for E-types
/// agreement with the closed formula.
fn conjugate_inverse<F: Field>(ctx: &SkewDimOneContext<F>, x: Option<&ETypeAlgebra<F>>, sm: Sampling) -> Result<Vec<CheckReport>, CliError> {
    let f = ctx.field();
    let n = ctx.dim();
    let mut names = vec![("conjugate_inverse", "V_{x,xhat} = V_{xhat,x} = id")];
    if x.is_some() {
        names.push(("conjugate_inverse_closed", "xhat = s0 * (xxx/6) / (-gamma^2 nu(x))"));
    }
    par_sampled(&names, sm, |s, rs| {
        let mut rng = sample_rng(sm.seed, s);
        let v = f.random_vector(&mut rng, n, sm.height);
        if f.is_zero(&ctx.conjugate_norm(&v)) {
            return Ok(());
        }
        let xh = ctx.conjugate_inverse(&v)?;
        rs[0].record(ctx.is_conjugate_inverse_pair(&v, &xh), || format!("sample {s}: x = {}", f.format_vector(&v)));
        if let Some(x) = x {
            let closed = x.conjugate_inverse_closed(&v)?;
            rs[1].record(closed == xh, || format!("sample {s}: x = {}", f.format_vector(&v)));
        }
        Ok(())
    })
}

/// The ψ summary: rows `1, ℓ, m, ℓm`, columns `1, n, r, nr`; each entry is a
/// sign, the indices of the `s`-factors and the image symbol.
const PSI_TABLE: [[(i8, &[u8], &[u8]); 4]; 4] = [
    [(1, &[], &[]), (1, &[], &[4, 6]), (1, &[], &[5, 6]), (1, &[6], &[4, 5])],
    [(1, &[], &[2]), (-1, &[2, 4, 6], &[3, 5]), (1, &[2, 5, 6], &[3, 4]), (1, &[2, 4, 5, 6], &[3, 6])],
    [(1, &[], &[3]), (1, &[3, 4, 6], &[2, 5]), (-1, &[3, 5, 6], &[2, 4]), (-1, &[3, 4, 5, 6], &[2, 6])],
    [(1, &[], &[2, 3]), (-1, &[2, 3, 4, 6], &[5]), (1, &[2, 3, 5, 6], &[4]), (-1, &[], &[6])],
];

fn psi_table_check<F: Field>(c: &CliffordContext<F>) -> Result<CheckReport, CliError> {
    let f = c.field();
    let table = c.psi_table()?;
    let mut r = CheckReport::new("psi_table", "psi on 1,l,m,lm x 1,n,r,nr matches the summary table", Mode::Exhaustive);
    for (a, row) in PSI_TABLE.iter().enumerate() {
        for (b, &(sign, factors, word)) in row.iter().enumerate() {
            let mut want = factors.iter().fold(f.one(), |acc, &g| f.mul(&acc, c.s(g)));
            if sign < 0 {
                want = f.neg(&want);
            }
            let (coef, sym) = &table[a][b];
            r.record(SYMBOLS[*sym] == word && *coef == want, || {
                format!("entry ({a},{b}): got {} v{:?}, expected {} v{:?}", f.format(coef), SYMBOLS[*sym], f.format(&want), word)
            });
        }
    }
    Ok(r)
}

fn left_regular_det<F: Field>(bq: &quadstruct::clifford::Biquaternion<F>, sm: Sampling) -> Result<CheckReport, CliError> {
    let f = bq.algebra().field();
    let mut rs = par_sampled(&[("left_regular_det", "det(L_z) = Nrd(z)^4")], sm, |s, rs| {
        let mut rng = sample_rng(sm.seed, s);
        let z = f.random_vector(&mut rng, 16, sm.height);
        let want = f.pow(&bq.nrd(&z)?, 4);
        rs[0].record(bq.left_regular_det(&z) == want, || format!("sample {s}: z = {}", f.format_vector(&z)));
        Ok(())
    })?;
    Ok(rs.remove(0))
}

fn etype_tasks<'a, F: Field>(tasks: &mut Vec<Task<'a>>, x: &'a ETypeAlgebra<F>, sm: Sampling, opts: SuiteOptions) {
    let f = x.field();
    tasks.push(task("conjugate_inverse", move || conjugate_inverse(x.context(), Some(x), sm)));
    tasks.push(task("etype_k_restriction", move || Ok(vec![x.check_k_restriction()])));
    tasks.push(task("etype_module", move || Ok(check_etype_module_compat(x, sm.samples, sm.seed, sm.height)?)));
    if x.kind() != quadstruct::clifford::EKind::E8 {
        return;
    }
    let c = x.clifford();
    tasks.push(task("biquaternion_psi", move || {
        let bq = quadstruct::clifford::matched_biquaternion(c)?;
        let q = c.quotient_algebra()?;
        Ok(vec![verify_isomorphism("biquaternion_psi", bq.algebra(), &q, &c.psi_matrix()), psi_table_check(c)?])
    }));
    tasks.push(task("norm_coincidence", move || {
        let bq = quadstruct::clifford::matched_biquaternion(c)?;
        par_sampled(&[("norm_coincidence", "nu(psi z) = Nrd(z)")], sm, |s, rs| {
            let mut rng = sample_rng(sm.seed, s);
            let z = f.random_vector(&mut rng, 16, sm.height);
            let nu = x.context().conjugate_norm(&x.psi_embed(&z)?);
            let nrd = bq.nrd(&z)?;
            rs[0].record(nu == nrd, || format!("sample {s}: nu = {}, Nrd = {}", f.format(&nu), f.format(&nrd)));
            Ok(())
        })
    }));
    tasks.push(task("left_regular_det", move || {
        let bq = quadstruct::clifford::matched_biquaternion(c)?;
        Ok(vec![left_regular_det(&bq, sm)?])
    }));
    if opts.exhaustive {
        tasks.push(task("chi_isomorphism", move || {
            let cd = x.biquaternion_cd(CD_BUILD_SAMPLES, sm.seed)?;
            let chi = x.chi_matrix(&cd)?;
            Ok(vec![verify_isomorphism("chi_isomorphism", x.algebra(), cd.algebra(), &chi)])
        }));
    }
    tasks.push(task("lambda_witness", move || lambda_witness(x, sm)));
}

fn lambda_witness<F: Field>(x: &ETypeAlgebra<F>, sm: Sampling) -> Result<Vec<CheckReport>, CliError> {
    let f = x.field();
    let w = LambdaWitness::new(x)?;
    let d = w.delta_field();
    let mut beta = CheckReport::new("beta_3456", "beta_3456 = 1", Mode::Exhaustive);
    let b = x.clifford().beta_sign(3, 4, 5, 6)?;
    beta.record(b == 1, || format!("beta_3456 = {b}"));
    let mut value = CheckReport::new("lambda_witness", "g(u'_1, e pi(e)) = 2 at x = (v2 + gamma v34 + gamma v56)/(2 gamma^2)", Mode::Exhaustive);
    let got = w.witness(&w.sample_point())?;
    value.record(got == d.from_i64(2), || format!("witness = {}", d.format(&got)));
    let mut rho = par_sampled(&[("lambda_rho", "g(u'_1, e pi(e)) = 16 gamma^4 rho(x)")], sm, |s, rs| {
        let mut rng = sample_rng(sm.seed, s);
        let mut p = f.random_vector(&mut rng, x.dim(), sm.height);
        p[0] = f.zero();
        p[1] = f.zero();
        let (lhs, rhs) = (w.witness(&p)?, w.rho_scaled(&p));
        rs[0].record(lhs == rhs, || format!("sample {s}: {} vs {}", d.format(&lhs), d.format(&rhs)));
        Ok(())
    })?;
    Ok(vec![beta, value, rho.remove(0)])
}

fn matrix_tasks<'a, F: Field>(tasks: &mut Vec<Task<'a>>, m: &'a MatrixAlgebra<F>, sm: Sampling) {
    let f = m.jordan().field();
    tasks.push(task("cubic_adjoint_identity", move || Ok(vec![m.jordan().check(sm.samples, sm.seed, sm.height)])));
    tasks.push(task("matrix_closed_forms", move || {
        let t = fts_from_skew_dim_one(m.context());
        let twelve_mu = f.mul(&f.from_i64(12), m.context().mu());
        let n = m.algebra().dim();
        par_sampled(
            &[("matrix_bform_closed", "<x,y> = k1k2' - k2k1' + eta(T(j1,j2') - T(j2,j1'))"), ("matrix_nu_closed", "nu(x) = <x,xxx>/(12 mu) in closed form")],
            sm,
            |s, rs| {
                let mut rng = sample_rng(sm.seed, s);
                let x = f.random_vector(&mut rng, n, sm.height);
                let y = f.random_vector(&mut rng, n, sm.height);
                rs[0].record(m.bform_closed(&x, &y) == t.bform(&x, &y), || format!("sample {s}"));
                let via_form = f.div(&quartic(&t, &x), &twelve_mu).expect("12 mu is invertible");
                rs[1].record(m.nu_closed(&x) == via_form, || format!("sample {s}: x = {}", f.format_vector(&x)));
                Ok(())
            },
        )
    }));
    tasks.push(task("supplementary_pair", move || {
        let t = fts_from_skew_dim_one(m.context());
        let n = m.algebra().dim();
        let mut x = f.zeros(n);
        x[0] = f.one();
        x[n - 1] = f.one();
        let mut r = CheckReport::new("supplementary_pair", "u1, u2 strictly regular with <u1,u2> = 1", Mode::Exhaustive);
        let res = supplementary_pair(&t, &x, &f.one());
        r.record(res.is_ok(), || format!("{:?}", res.as_ref().err()));
        Ok(vec![r])
    }));
}

fn pq_tasks<'a, F: Field>(tasks: &mut Vec<Task<'a>>, o: Quadrangular<F>, sm: Sampling, opts: SuiteOptions) {
    let o = Arc::new(o);
    let k = o.field().clone();
    let (o1, o2, o3, o4, o5, o6, o7) = (o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone());
    tasks.push(task("pq_axioms", move || Ok(check_axioms(&o1, sm.samples, sm.seed, sm.height))));
    tasks.push(task("pq_identities", move || Ok(check_identities(&o2, sm.samples, sm.seed, sm.height))));
    tasks.push(task("pq_fts", move || {
        let mut rs = check_fts_bridge(&o3, sm.samples, sm.seed, sm.height);
        rs.extend(renamed("pq_", check_fts_axioms(&fts_from_quadrangular(&o3), sm.samples, sm.seed, sm.height)));
        Ok(rs)
    }));
    tasks.push(task("module_compat", move || Ok(check_module_compat(&o4, sm.samples, sm.seed, sm.height)?)));
    let k1 = k.clone();
    tasks.push(task("pq_decomposition", move || {
        let dec = pq_decompose(&o5)?;
        let ps = dec.structurable(&k1.one())?;
        Ok(vec![dec.check(), ps.check_cubic_formula(sm.samples, sm.seed, sm.height)])
    }));
    if opts.exhaustive {
        let k2 = k.clone();
        tasks.push(task("pq_similarity", move || {
            let mut out = Vec::new();
            for (scale, expected, prefix) in [(k2.half(), 1, "pq_similarity_half_"), (k2.one(), 2, "pq_similarity_unit_")] {
                let (lambda, rs) = verify_pq_similarity(&o6, &scale, sm.samples, sm.seed, sm.height)?;
                let mut r = CheckReport::new(format!("{prefix}multiplier"), format!("similarity multiplier = {expected}"), Mode::Exhaustive);
                r.record(lambda == k2.from_i64(expected), || format!("detected {}", k2.format(&lambda)));
                out.push(r);
                out.extend(renamed(prefix, rs));
            }
            Ok(out)
        }));
        tasks.push(task("pq_isotope", move || {
            let u = k.unit_vector(o7.dim_l(), 1);
            let (_, rs) = isotope_multiplier_check(&o7, &u, sm.samples, sm.seed, sm.height)?;
            Ok(renamed("pq_isotope_", rs))
        }));
    }
}
