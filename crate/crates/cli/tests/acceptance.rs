//! The twelve acceptance criteria, each at exact equality. Prints one line per
//! criterion and exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use quadstruct::algebra::{check_structurable, verify_isomorphism, StructurableMode};
use quadstruct::clifford::{matched_biquaternion, EKind, SYMBOLS};
use quadstruct::fts::{check_fts_axioms, fts_from_skew_dim_one, quartic, supplementary_pair, TripleSystem};
use quadstruct::quadrangular::{
    check_axioms, check_etype_module_compat, check_identities, check_module_compat, fts_from_quadrangular,
    pseudo_quadratic_quadrangular, verify_pq_similarity, Quadrangular, QuadraticPair,
};
use quadstruct::report::sample_rng;
use quadstruct::scalars::{rat, Rational};
use quadstruct::zoo::{
    cayley_dickson, check_jordan_norm, e_type_algebra, jordan_plus, matrix_structurable, split_cubic_jordan, ETypeAlgebra,
    LambdaWitness,
};
use quadstruct::{CheckReport, Field, PrimeField, Rationals, SkewDimOneContext};
use quadstruct_cli::{parse_scenario, run_suite, SuiteOptions};

type Outcome = Result<String, String>;

fn demo_s() -> [Rational; 5] {
    [rat(2, 1), rat(3, 1), rat(1, 2), rat(5, 1), rat(-1, 15)]
}

fn e8_q() -> ETypeAlgebra<Rationals> {
    e_type_algebra(Rationals, EKind::E8, rat(-1, 1), &demo_s()).unwrap()
}

fn e8_fp() -> ETypeAlgebra<PrimeField> {
    let f = PrimeField::new(101).unwrap();
    let s: Vec<_> = demo_s().iter().map(|c| f.parse(&Rationals.format(c)).unwrap()).collect();
    e_type_algebra(f, EKind::E8, f.from_i64(2), &s).unwrap()
}

fn e7_q() -> ETypeAlgebra<Rationals> {
    e_type_algebra(Rationals, EKind::E7, rat(-1, 1), &[rat(3, 1), rat(1, 1), rat(1, 1)]).unwrap()
}

fn e6_q() -> ETypeAlgebra<Rationals> {
    e_type_algebra(Rationals, EKind::E6, rat(-1, 1), &[rat(2, 1), rat(3, 1)]).unwrap()
}

/// `ℚ(γ)`, `γ² = −1`, rank two with coefficients `γ, γ`.
fn pq_ext() -> Quadrangular<Rationals> {
    let pair = QuadraticPair::extension(Rationals, rat(-1, 1)).unwrap();
    let g = vec![rat(0, 1), rat(1, 1)];
    pseudo_quadratic_quadrangular(pair, vec![g.clone(), g]).unwrap()
}

/// `(−1,−1)_ℚ`, rank one with coefficient `i`.
fn pq_quat() -> Quadrangular<Rationals> {
    let pair = QuadraticPair::quaternion(Rationals, rat(-1, 1), rat(-1, 1)).unwrap();
    pseudo_quadratic_quadrangular(pair, vec![vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)]]).unwrap()
}

fn require(reports: &[CheckReport], min_cases: u64) -> Result<(), String> {
    for r in reports {
        if !r.passed() {
            return Err(format!("{}: {} failures, first {:?}", r.name, r.failures, r.counterexample));
        }
        if r.cases < min_cases {
            return Err(format!("{}: only {} cases", r.name, r.cases));
        }
    }
    Ok(())
}

fn c1_structurable() -> Outcome {
    let start = Instant::now();
    let r = check_structurable(e8_fp().algebra(), StructurableMode::Exhaustive);
    let fp_time = start.elapsed();
    require(&[r.clone()], 32u64.pow(4))?;
    if fp_time > Duration::from_secs(300) {
        return Err(format!("exhaustive check took {fp_time:?}"));
    }
    let q = check_structurable(e8_q().algebra(), StructurableMode::Sampled { samples: 500, seed: 1, height: 9 });
    require(&[q.clone()], 500)?;
    Ok(format!("E8/F_101 {} quadruples in {:.1}s; E8/Q {} samples", r.cases, fp_time.as_secs_f64(), q.cases))
}

/// Rows `1, ℓ, m, ℓm`; columns `1, n, r, nr`: sign, `s`-indices, image symbol.
const PSI_SUMMARY: [[(i64, &[u8], &[u8]); 4]; 4] = [
    [(1, &[], &[]), (1, &[], &[4, 6]), (1, &[], &[5, 6]), (1, &[6], &[4, 5])],
    [(1, &[], &[2]), (-1, &[2, 4, 6], &[3, 5]), (1, &[2, 5, 6], &[3, 4]), (1, &[2, 4, 5, 6], &[3, 6])],
    [(1, &[], &[3]), (1, &[3, 4, 6], &[2, 5]), (-1, &[3, 5, 6], &[2, 4]), (-1, &[3, 4, 5, 6], &[2, 6])],
    [(1, &[], &[2, 3]), (-1, &[2, 3, 4, 6], &[5]), (1, &[2, 3, 5, 6], &[4]), (-1, &[], &[6])],
];

fn c2_psi() -> Outcome {
    let start = Instant::now();
    let x = e8_q();
    let c = x.clifford();
    let bq = matched_biquaternion(c).map_err(|e| e.to_string())?;
    let q = c.quotient_algebra().map_err(|e| e.to_string())?;
    let iso = verify_isomorphism("psi", bq.algebra(), &q, &c.psi_matrix());
    require(&[iso.clone()], 2 + 256 + 16)?;
    let table = c.psi_table().map_err(|e| e.to_string())?;
    let f = Rationals;
    for (a, row) in PSI_SUMMARY.iter().enumerate() {
        for (b, &(sign, idx, word)) in row.iter().enumerate() {
            let coef = idx.iter().fold(f.from_i64(sign), |acc, &g| f.mul(&acc, c.s(g)));
            let (got, sym) = &table[a][b];
            if *got != coef || SYMBOLS[*sym] != word {
                return Err(format!("table entry ({a},{b}) is {} v{:?}", f.format(got), SYMBOLS[*sym]));
            }
        }
    }
    // ℓ⊗n ↦ −s₂s₄s₆ v₃₅ = 1/15 v₃₅ for the demo parameters
    if table[1][1].0 != rat(1, 15) {
        return Err("l⊗n entry".into());
    }
    let t = start.elapsed();
    if t > Duration::from_secs(1) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("{} basis products and 16 table entries in {:.3}s", iso.cases, t.as_secs_f64()))
}

fn c3_chi() -> Outcome {
    let start = Instant::now();
    let x = e8_q();
    let cd = x.biquaternion_cd(20, 3).map_err(|e| e.to_string())?;
    let chi = x.chi_matrix(&cd).map_err(|e| e.to_string())?;
    let r = verify_isomorphism("chi", x.algebra(), cd.algebra(), &chi);
    require(&[r.clone()], 2 + 32 * 32 + 32)?;
    let t = start.elapsed();
    if t > Duration::from_secs(30) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("{} cases including involution in {:.2}s", r.cases, t.as_secs_f64()))
}

fn c4_norm() -> Outcome {
    let x = e8_q();
    let bq = matched_biquaternion(x.clifford()).map_err(|e| e.to_string())?;
    let f = Rationals;
    for s in 0..200 {
        let mut rng = sample_rng(4, s);
        let z = f.random_vector(&mut rng, 16, 9);
        let nu = x.context().conjugate_norm(&x.psi_embed(&z).map_err(|e| e.to_string())?);
        let nrd = bq.nrd(&z).map_err(|e| e.to_string())?;
        if nu != nrd {
            return Err(format!("sample {s}: nu = {}, Nrd = {}", f.format(&nu), f.format(&nrd)));
        }
    }
    Ok("200 samples".into())
}

/// `V_{x,x̂} = V_{x̂,x} = id` on 100 samples with `ν ≠ 0`; with `closed`, also
/// the E-type formula.
fn conjugate_pairs<F: Field>(ctx: &SkewDimOneContext<F>, closed: Option<&ETypeAlgebra<F>>) -> Result<u64, String> {
    let f = ctx.field();
    let mut done = 0;
    let mut s = 0;
    while done < 100 {
        let mut rng = sample_rng(5, s);
        s += 1;
        let x = f.random_vector(&mut rng, ctx.dim(), 9);
        if f.is_zero(&ctx.conjugate_norm(&x)) {
            continue;
        }
        let xh = ctx.conjugate_inverse(&x).map_err(|e| e.to_string())?;
        if !ctx.is_conjugate_inverse_pair(&x, &xh) {
            return Err(format!("not a pair at x = {}", f.format_vector(&x)));
        }
        if let Some(e) = closed {
            if e.conjugate_inverse_closed(&x).map_err(|e| e.to_string())? != xh {
                return Err(format!("closed formula differs at x = {}", f.format_vector(&x)));
            }
        }
        done += 1;
    }
    Ok(done)
}

fn c5_conjugate_inverse() -> Outcome {
    let mut parts = Vec::new();
    for (name, x) in [("E6", e6_q()), ("E7", e7_q()), ("E8", e8_q())] {
        parts.push(format!("{name} {}", conjugate_pairs(x.context(), Some(&x))?));
    }
    let m = matrix_structurable(split_cubic_jordan(Rationals), rat(1, 1)).map_err(|e| e.to_string())?;
    parts.push(format!("M(J,1) {}", conjugate_pairs(m.context(), None)?));
    let cd = x_cd();
    parts.push(format!("CD {}", conjugate_pairs(cd.context(), None)?));
    for (name, o) in [("pq-ext", pq_ext()), ("pq-quat", pq_quat())] {
        let ps = quadstruct::quadrangular::pq_decompose(&o).and_then(|d| d.structurable(&rat(1, 1))).map_err(|e| e.to_string())?;
        parts.push(format!("{name} {}", conjugate_pairs(ps.context(), None)?));
    }
    Ok(parts.join(", "))
}

fn x_cd() -> quadstruct::zoo::CayleyDickson<Rationals> {
    let bq = quadstruct::clifford::Biquaternion::new(&Rationals, rat(-1, 1), rat(-1, 1), rat(-1, 1), rat(-3, 1)).unwrap();
    let plus = Arc::new(jordan_plus(bq.algebra()).unwrap());
    let nrd = |z: &[Rational]| bq.nrd(z).unwrap();
    let trace = |z: &[Rational], w: &[Rational]| bq.trace_form(z, w);
    cayley_dickson(plus, &nrd, &trace, rat(-1, 1), 20, 1).unwrap()
}

fn c6_fts() -> Outcome {
    let mut systems: Vec<(&str, TripleSystem<Rationals>)> = vec![
        ("E6", fts_from_skew_dim_one(e6_q().context())),
        ("E7", fts_from_skew_dim_one(e7_q().context())),
        ("E8", fts_from_skew_dim_one(e8_q().context())),
    ];
    let m = matrix_structurable(split_cubic_jordan(Rationals), rat(1, 1)).map_err(|e| e.to_string())?;
    systems.push(("M(J,1)", fts_from_skew_dim_one(m.context())));
    systems.push(("CD", fts_from_skew_dim_one(x_cd().context())));
    for (name, o) in [("pq-ext", pq_ext()), ("pq-quat", pq_quat())] {
        systems.push((name, fts_from_quadrangular(&o)));
        let ps = quadstruct::quadrangular::pq_decompose(&o).and_then(|d| d.structurable(&rat(1, 1))).map_err(|e| e.to_string())?;
        systems.push((name, ps.fts()));
    }
    for (name, t) in &systems {
        let rs = check_fts_axioms(t, 500, 6, 9);
        require(&rs, 1).map_err(|e| format!("{name}: {e}"))?;
        let ii = rs.iter().find(|r| r.name == "fts_axiom_ii").expect("axiom ii report");
        if ii.cases < 500 {
            return Err(format!("{name}: axiom (ii) ran {} cases", ii.cases));
        }
    }
    let t = fts_from_skew_dim_one(m.context());
    let mut x = Rationals.zeros(8);
    x[0] = rat(1, 1);
    x[7] = rat(1, 1);
    let (u1, u2) = supplementary_pair(&t, &x, &rat(1, 1)).map_err(|e| e.to_string())?;
    if t.bform(&u1, &u2) != rat(1, 1) {
        return Err("<u1,u2> != 1".into());
    }
    Ok(format!("{} systems; supplementary pair on M(J,1)", systems.len()))
}

fn c7_quadrangular() -> Outcome {
    for (name, o) in [("pq-ext", pq_ext()), ("pq-quat", pq_quat())] {
        let mut rs = check_axioms(&o, 500, 7, 9);
        rs.extend(check_identities(&o, 500, 7, 9));
        for r in &rs {
            if !r.passed() {
                return Err(format!("{name}: {} fails: {:?}", r.name, r.counterexample));
            }
            if r.mode == quadstruct::Mode::Sampled && r.cases < 499 {
                return Err(format!("{name}: {} ran {} cases", r.name, r.cases));
            }
        }
    }
    Ok("A1-A3, B1-B3, C, D1, D2 and identities (i)-(v) on both instances".into())
}

fn c8_module() -> Outcome {
    for (name, o) in [("pq-ext", pq_ext()), ("pq-quat", pq_quat())] {
        let rs = check_module_compat(&o, 200, 8, 9).map_err(|e| e.to_string())?;
        require(&rs, 199).map_err(|e| format!("{name}: {e}"))?;
    }
    for (name, x) in [("E6", e6_q()), ("E7", e7_q()), ("E8", e8_q())] {
        let rs = check_etype_module_compat(&x, 200, 8, 9).map_err(|e| e.to_string())?;
        require(&rs, 195).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok("pq-ext, pq-quat, E6, E7, E8".into())
}

fn c9_similarity() -> Outcome {
    let mut out = Vec::new();
    for (name, o) in [("pq-ext", pq_ext()), ("pq-quat", pq_quat())] {
        let (lambda, rs) = verify_pq_similarity(&o, &rat(1, 2), 200, 9, 9).map_err(|e| e.to_string())?;
        require(&rs, 1)?;
        if lambda != rat(1, 1) {
            return Err(format!("{name}: multiplier {lambda} at s0 = e/2"));
        }
        let (lambda2, rs) = verify_pq_similarity(&o, &rat(1, 1), 200, 9, 9).map_err(|e| e.to_string())?;
        require(&rs, 1)?;
        if lambda2 != rat(2, 1) {
            return Err(format!("{name}: multiplier {lambda2} at s0 = e"));
        }
        out.push(format!("{name}: isometry at s0 = e/2 on {} basis triples, multiplier 2 at s0 = e", rs[0].cases));
    }
    Ok(out.join("; "))
}

fn c10_witness() -> Outcome {
    let x = e8_q();
    if x.clifford().beta_sign(3, 4, 5, 6).map_err(|e| e.to_string())? != 1 {
        return Err("beta_3456 != 1".into());
    }
    let w = LambdaWitness::new(&x).map_err(|e| e.to_string())?;
    let d = w.delta_field();
    let value = w.witness(&w.sample_point()).map_err(|e| e.to_string())?;
    if value != d.from_i64(2) {
        return Err(format!("witness = {}", d.format(&value)));
    }
    let f = Rationals;
    for s in 0..100 {
        let mut rng = sample_rng(10, s);
        let mut p = f.random_vector(&mut rng, 32, 9);
        p[0] = rat(0, 1);
        p[1] = rat(0, 1);
        if w.witness(&p).map_err(|e| e.to_string())? != w.rho_scaled(&p) {
            return Err(format!("sample {s}"));
        }
    }
    Ok("witness 2, 100 rho samples, beta_3456 = 1".into())
}

fn c11_norms() -> Outcome {
    let f = Rationals;
    let m = matrix_structurable(split_cubic_jordan(f), rat(1, 1)).map_err(|e| e.to_string())?;
    let t = fts_from_skew_dim_one(m.context());
    let twelve_mu = f.mul(&f.from_i64(12), m.context().mu());
    for s in 0..200 {
        let mut rng = sample_rng(11, s);
        let x = f.random_vector(&mut rng, 8, 9);
        if m.nu_closed(&x) != f.div(&quartic(&t, &x), &twelve_mu).unwrap() {
            return Err(format!("nu closed form, sample {s}"));
        }
    }
    let bq = matched_biquaternion(e8_q().clifford()).map_err(|e| e.to_string())?;
    let nrd = |z: &[Rational]| bq.nrd(z).unwrap();
    let r = check_jordan_norm(&jordan_plus(bq.algebra()).map_err(|e| e.to_string())?, &nrd, 200, 11, 9);
    require(&[r], 200)?;
    for s in 0..200 {
        let mut rng = sample_rng(12, s);
        let z = f.random_vector(&mut rng, 16, 9);
        if bq.left_regular_det(&z) != f.pow(&nrd(&z), 4) {
            return Err(format!("det(L_z), sample {s}"));
        }
    }
    Ok("nu closed form, Jordan norm axioms and det(L_z) on 200 samples each".into())
}

fn c12_determinism() -> Outcome {
    let text = "kind = \"e8\"\nfield = \"fp:101\"\nsamples = 50\nseed = 12\n[params]\ngamma_sq = \"2\"\ns = [\"2\", \"3\", \"1/2\", \"5\", \"-1/15\"]\n";
    let cfg = parse_scenario(text).map_err(|e| e.to_string())?;
    let a = run_suite(&cfg, SuiteOptions::default()).map_err(|e| e.to_string())?.to_json();
    let b = run_suite(&cfg, SuiteOptions::default()).map_err(|e| e.to_string())?.to_json();
    if a != b {
        return Err("reports differ".into());
    }
    Ok(format!("{} identical bytes", a.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("structurable identity on E8", c1_structurable),
        ("psi isomorphism and summary table", c2_psi),
        ("chi isomorphism onto the Cayley-Dickson double", c3_chi),
        ("nu(psi z) = Nrd(z)", c4_norm),
        ("conjugate inverses", c5_conjugate_inverse),
        ("FTS axioms and supplementary pair", c6_fts),
        ("quadrangular axioms and identities", c7_quadrangular),
        ("module compatibility", c8_module),
        ("pq similarity", c9_similarity),
        ("lambda witness", c10_witness),
        ("M(J,eta) and Nrd norms", c11_norms),
        ("deterministic reports", c12_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:2} PASS {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} FAIL {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} of 12 passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
