//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//! All comparisons are exact (tolerance zero); runtime limits are wall-clock.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use inseparable::algebroid::{derivation_module, galois_homotopy_data, verify_restricted_axioms, RestrictedLieAlgebroid};
use inseparable::galois::harness::{
    cartier_suite, frobenius_derivations_agree, p_power_suite, random_intermediate, random_pair, six_term_suite,
    sweedler,
};
use inseparable::galois::{
    check_essential_image, frobenius_chain_report, is_simple, jacobson_roundtrip, lifted_pair, modularity_test,
    verify_modular_conditions, ModularityVerdict, DEFAULT_BUDGET,
};
use inseparable::linalg::Matrix;
use inseparable::random::{trial_rng, DEFAULT_SEED};
use inseparable::tower::{AmbientField, IntermediateField};

const SWEEDLER_LIMIT: Duration = Duration::from_secs(30);
const CARTIER_LIMIT: Duration = Duration::from_secs(120);

type Check = Result<String, String>;

fn ensure(cond: bool, detail: String) -> Check {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn sweedler_non_modular() -> Check {
    let mut notes = Vec::new();
    for p in [2u32, 3] {
        let start = Instant::now();
        let (f, k) = sweedler(p).map_err(err)?;
        let degree = f.degree_over(&k).map_err(err)?;
        let exponent = f.exponent_over(&k).map_err(err)?;
        let verdict = modularity_test(&f, &k, DEFAULT_BUDGET, DEFAULT_SEED).map_err(err)?;
        let ModularityVerdict::NotModular(w) = verdict else {
            return Err(format!("p={p}: verdict {}", verdict.label()));
        };
        let c = &w.certificate;
        let (fi, ki) = lifted_pair(&f, &k, w.level).map_err(err)?;
        let recheck = c.relation_value().is_zero()
            && c.coefficients.iter().any(|m| !m.is_zero())
            && c.coefficients.iter().all(|m| ki.contains(m))
            && c.elements.iter().all(|b| fi.contains(b));
        let elapsed = start.elapsed();
        let ok = degree == (p as u64).pow(3) && exponent == 2 && recheck && elapsed <= SWEEDLER_LIMIT;
        notes.push(format!("p={p}: [F:K]={degree} exp={exponent} cert={} {:.2?}", c.elements.len(), elapsed));
        if !ok {
            return Err(notes.join("; "));
        }
    }
    Ok(notes.join("; "))
}

fn cartier_equality() -> Check {
    let start = Instant::now();
    let s = cartier_suite(50, DEFAULT_SEED).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(s.passed() && elapsed <= CARTIER_LIMIT, format!("{}/{} pairs equal, {elapsed:.2?}", s.passes, s.trials))
}

fn jacobson_round_trips() -> Check {
    let mut notes = Vec::new();
    let mut ok = true;
    for p in [2u32, 3] {
        let a = AmbientField::standard(p, 2, 1).map_err(err)?;
        let r = jacobson_roundtrip(&IntermediateField::full(&a), &IntermediateField::base(&a), 25, DEFAULT_SEED)
            .map_err(err)?;
        ok &= r.field_passes == 25 && r.algebroid_passes == 25 && r.reversal_passes == 25;
        notes.push(format!("p={p}: E {}/25, g {}/25, reversal {}/25", r.field_passes, r.algebroid_passes, r.reversal_passes));
    }
    ensure(ok, notes.join("; "))
}

fn six_term_exactness() -> Check {
    let s = six_term_suite(100, DEFAULT_SEED).map_err(err)?;
    let a = AmbientField::standard(2, 1, 2).map_err(err)?;
    let chain = frobenius_chain_report(&a).map_err(err)?;
    let link = chain.links.first().ok_or("missing Frobenius link")?;
    let ok = s.passed() && link.exact && link.euler && link.zero_map;
    ensure(ok, format!("{}/{} towers; F^4 < F^2 < F zero map: {}", s.passes, s.trials, link.zero_map))
}

fn restricted_axioms() -> Check {
    let mut notes = Vec::new();
    let mut ok = true;
    for p in [2u32, 3] {
        let a = AmbientField::standard(p, 2, 1).map_err(err)?;
        let m = derivation_module(&IntermediateField::full(&a), &IntermediateField::base(&a)).map_err(err)?;
        let g = RestrictedLieAlgebroid::span(m.presentation(), m.basis()).map_err(err)?;
        let r = verify_restricted_axioms(&g, 50, DEFAULT_SEED).map_err(err)?;
        ok &= r.passed && r.scalar == 50 && r.adjoint == 50 && r.sum_formula == 50;
        notes.push(format!("p={p}: {}/{}/{} of 50", r.scalar, r.adjoint, r.sum_formula));
    }
    ensure(ok, notes.join("; "))
}

fn essential_image() -> Check {
    let mut forward = 0;
    for t in 0..20u64 {
        let mut rng = trial_rng(DEFAULT_SEED, t);
        let p = if t % 2 == 0 { 2 } else { 3 };
        let a = AmbientField::standard(p, 2, 1 + (p == 2) as u32 * (t % 4 == 0) as u32).map_err(err)?;
        let (f, k) = random_pair(&mut rng, &a);
        let m = derivation_module(&f, &k).map_err(err)?;
        let e = random_intermediate(&mut rng, &f, &k);
        let data = galois_homotopy_data(&e, &m).map_err(err)?;
        forward += check_essential_image(&data, &m).map_err(err)?.verdict as u32;
    }
    // violations built from K < K(x) < F_2(x, y) over F_2(x^2, y^2)
    let a = AmbientField::standard(2, 2, 1).map_err(err)?;
    let m = derivation_module(&IntermediateField::full(&a), &IntermediateField::base(&a)).map_err(err)?;
    let data = galois_homotopy_data(&IntermediateField::closure(&a, &[a.var(0)]), &m).map_err(err)?;
    let flags = |d: &inseparable::algebroid::AlgebroidHomotopyData| -> Result<[bool; 3], String> {
        let r = check_essential_image(d, &m).map_err(err)?;
        Ok([r.injectivity, r.vanishing, r.balance])
    };
    let mut anchor = data.clone();
    anchor.anchor_pi1 = Matrix::zeros(a.ring(), data.pi1_dim, m.dim());
    let mut vanishing = data.clone();
    vanishing.vanishing_outside_01 = false;
    let mut balance = data.clone();
    balance.pi0_dim += 1;
    let got = [flags(&anchor)?, flags(&vanishing)?, flags(&balance)?];
    let want = [[false, true, true], [true, false, true], [true, true, false]];
    ensure(forward == 20 && got == want, format!("forward {forward}/20; violations {got:?}"))
}

fn simplicity_criterion() -> Check {
    let a = AmbientField::standard(2, 1, 2).map_err(err)?;
    let r1 = is_simple(&IntermediateField::full(&a), &IntermediateField::base(&a)).map_err(err)?;
    let b = AmbientField::standard(2, 2, 1).map_err(err)?;
    let r2 = is_simple(&IntermediateField::full(&b), &IntermediateField::base(&b)).map_err(err)?;
    let c = AmbientField::standard(3, 2, 2).map_err(err)?;
    let (x, y) = (c.var(0), c.var(1));
    let k = IntermediateField::closure(&c, &[x.pow(3), y.pow(3).add(&x)]);
    let r3 = is_simple(&IntermediateField::full(&c), &k).map_err(err)?;
    let ok = r1.simple && r1.search_agrees && !r2.simple && r2.search_agrees && r3.simple && r3.search_agrees;
    ensure(ok, format!("dim Omega: {}, {}, {}", r1.omega_dim, r2.omega_dim, r3.omega_dim))
}

fn modular_characterization() -> Check {
    let a = AmbientField::standard(2, 2, 2).map_err(err)?;
    let (x, y) = (a.var(0), a.var(1));
    let k = IntermediateField::closure(&a, &[x.pow(2), y.pow(4)]);
    let f = IntermediateField::full(&a);
    let v = modularity_test(&f, &k, DEFAULT_BUDGET, DEFAULT_SEED).map_err(err)?;
    let ModularityVerdict::Modular { degrees, conditions, .. } = v else {
        return Err(format!("verdict {}", v.label()));
    };
    let (sf, sk) = sweedler(2).map_err(err)?;
    let u = sf.generators()[0].clone();
    let z = sf.ambient().var(2);
    let parts = [sk.adjoin(&[u]), sk.adjoin(&[z])];
    let s = verify_modular_conditions(&sf, &sk, &parts).map_err(err)?;
    let ok = degrees == [2, 4]
        && conditions.condition1
        && conditions.condition2
        && conditions.condition3
        && s.condition1
        && !s.condition3;
    ensure(ok, format!("degrees {degrees:?}, conditions {}; Sweedler condition (3) {}", conditions.passed, s.condition3))
}

fn derivations_kill_powers() -> Check {
    let s = p_power_suite(100, DEFAULT_SEED).map_err(err)?;
    let mut agree = true;
    for (p, n) in [(2u32, 1usize), (2, 2), (3, 1), (3, 2)] {
        agree &= frobenius_derivations_agree(&AmbientField::standard(p, n, 2).map_err(err)?).map_err(err)?;
    }
    ensure(s.passed() && agree, format!("{}/{} elements; Der rows agree at e=2: {agree}", s.passes, s.trials))
}

fn insep(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_insep")).args(args).output().map_err(err)?;
    if !out.status.success() {
        return Err(format!("insep {args:?} exited with {}", out.status));
    }
    Ok(out.stdout)
}

fn determinism() -> Check {
    let spec = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs").join("sweedler_p2.json");
    let spec = spec.to_str().ok_or("spec path")?;
    let mut same = Vec::new();
    for cmd in ["selftest", "analyze"] {
        let args = [cmd, "--seed", "42", "--json", "--spec", spec];
        let a = insep(&args)?;
        let b = insep(&args)?;
        same.push(a == b && !a.is_empty());
    }
    ensure(same.iter().all(|&s| s), format!("selftest identical: {}, analyze identical: {}", same[0], same[1]))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("Sweedler extension is not modular (p = 2, 3)", sweedler_non_modular),
        ("Cartier equality on 50 random pairs", cartier_equality),
        ("Jacobson round trips (p = 2, 3)", jacobson_round_trips),
        ("six-term exactness and Euler vanishing", six_term_exactness),
        ("restricted Lie axioms (p = 2, 3)", restricted_axioms),
        ("essential-image conditions", essential_image),
        ("simplicity criterion", simplicity_criterion),
        ("modular characterization", modular_characterization),
        ("derivations kill p-th powers", derivations_kill_powers),
        ("determinism of selftest and analyze", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (status, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status}: {name} ({detail}) [{:.2?}]", i + 1, start.elapsed());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
