use std::sync::Arc;

use inseparable::algebroid::{
    fixed_field, galois_homotopy_data, restricted_closure, Derivation, DerivationModule,
};
use inseparable::cotangent::{cotangent_complex, euler_check, homology, six_term};
use inseparable::funcfield::RatFunc;
use inseparable::galois::harness::selftest;
use inseparable::galois::{
    analyze, check_essential_image, frobenius_chain_report, jacobson_roundtrip, modularity_test, ConditionReport,
    ModularityVerdict, SimplicityReport,
};
use inseparable::linalg::Matrix;
use inseparable::random::trial_rng;
use inseparable::tower::TriangularPresentation;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::spec::ProblemSpec;

pub const COMMANDS: [&str; 10] = [
    "analyze",
    "cotangent",
    "derivations",
    "fixed-field",
    "galois-check",
    "modularity",
    "six-term",
    "frobenius-chain",
    "roundtrip",
    "selftest",
];

const DEFAULT_TRIALS: u32 = 10;

/// A command result; `inconclusive` maps to its own exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub result: Value,
    pub inconclusive: bool,
}

impl Outcome {
    fn done(result: Value) -> Self {
        Outcome { result, inconclusive: false }
    }
}

pub fn run_command(command: &str, spec: &ProblemSpec) -> CliResult<Outcome> {
    let ctx = |e| CliError::math(command, e);
    match command {
        "analyze" => {
            let r = analyze(&spec.f, &spec.k, spec.seed, spec.budget).map_err(ctx)?;
            let inconclusive = matches!(r.modularity, ModularityVerdict::Inconclusive { .. });
            let mut out = json!({
                "degree": r.degree,
                "exponent": r.exponent,
                "generators": list(spec, r.generators()),
                "min_generators": r.min_generators,
                "cotangent": {"pi0_dim": r.pi0_dim, "pi1_dim": r.pi1_dim, "cartier_equal": r.cartier_equal},
                "der_dim": r.der_dim,
                "simplicity": simplicity(spec, &r.simplicity),
                "modularity": modularity(spec, &r.modularity),
            });
            if let Some(rt) = r.roundtrip {
                out["roundtrip"] = roundtrip_json(&rt);
            }
            Ok(Outcome { result: out, inconclusive })
        }
        "cotangent" => {
            let pres = presentation(spec)?;
            let c = cotangent_complex(&pres);
            let h = homology(&c, spec.ambient.ring());
            Ok(Outcome::done(json!({
                "presentation": presentation_json(spec, &pres),
                "jacobian": matrix(spec, &c.jacobian),
                "pi0_dim": h.pi0_dim,
                "pi1_dim": h.pi1_dim,
                "pi0_basis": h.pi0_basis.iter().map(|&j| format!("d{}", j + 1)).collect::<Vec<_>>(),
                "pi1_basis": h.pi1_basis.iter().map(|v| list(spec, v)).collect::<Vec<_>>(),
            })))
        }
        "derivations" => {
            let m = module(spec)?;
            Ok(Outcome::done(json!({
                "presentation": presentation_json(spec, m.presentation()),
                "dim": m.dim(),
                "basis": m.basis().iter().map(|d| list(spec, d.values())).collect::<Vec<_>>(),
            })))
        }
        "fixed-field" => {
            let m = module(spec)?;
            let pres = m.presentation();
            let Some(values) = &spec.derivations else {
                return Err(CliError::Schema("fixed-field needs a `derivations` list".into()));
            };
            let seeds = values
                .iter()
                .map(|v| {
                    if v.len() != pres.len() {
                        return Err(CliError::Schema(format!(
                            "each derivation needs {} values, one per presentation generator",
                            pres.len()
                        )));
                    }
                    Derivation::new(pres, v.clone()).map_err(ctx)
                })
                .collect::<CliResult<Vec<_>>>()?;
            let g = restricted_closure(pres, &seeds).map_err(ctx)?;
            let fix = fixed_field(&g).map_err(ctx)?;
            Ok(Outcome::done(json!({
                "presentation": presentation_json(spec, pres),
                "closure_dim": g.dim(),
                "closure_basis": g.basis().iter().map(|d| list(spec, d.values())).collect::<Vec<_>>(),
                "fixed_field": {
                    "generators": list(spec, fix.generators()),
                    "degree_over_K": fix.degree_over(&spec.k).map_err(ctx)?,
                    "degree_F_over": spec.f.degree_over(&fix).map_err(ctx)?,
                },
            })))
        }
        "galois-check" => {
            let m = module(spec)?;
            let mut fields = Vec::new();
            if let Some(e) = &spec.e {
                fields.push(e.clone());
            } else {
                let trials = spec.raw.trials.unwrap_or(DEFAULT_TRIALS);
                for t in 0..trials {
                    let mut rng = trial_rng(spec.seed, t as u64);
                    fields.push(inseparable::galois::harness::random_intermediate(&mut rng, &spec.f, &spec.k));
                }
            }
            let mut checks = Vec::new();
            let mut all = true;
            for e in &fields {
                let data = galois_homotopy_data(e, &m).map_err(ctx)?;
                let r = check_essential_image(&data, &m).map_err(ctx)?;
                all &= r.verdict;
                checks.push(json!({
                    "E_generators": list(spec, e.generators()),
                    "fib_pi0_dim": data.fib_pi0_dim,
                    "fib_pi1_dim": data.fib_pi1_dim,
                    "conditions": conditions(&r),
                }));
            }
            Ok(Outcome::done(json!({"checks": checks, "all_pass": all})))
        }
        "modularity" => {
            let v = modularity_test(&spec.f, &spec.k, spec.budget, spec.seed).map_err(ctx)?;
            let inconclusive = matches!(v, ModularityVerdict::Inconclusive { .. });
            Ok(Outcome { result: modularity(spec, &v), inconclusive })
        }
        "six-term" => {
            let Some(e) = &spec.e else {
                return Err(CliError::Schema("six-term needs `E.generators`".into()));
            };
            let s = six_term(&spec.f, e, &spec.k).map_err(ctx)?;
            Ok(Outcome::done(json!({
                "nodes": ["pi1(F/E)", "pi1(F/K)", "pi1(E/K)", "pi0(F/E)", "pi0(F/K)", "pi0(E/K)"],
                "dims": s.dims,
                "ranks": s.ranks,
                "maps": s.maps.iter().map(|m| matrix(spec, m)).collect::<Vec<_>>(),
                "exact_at": s.exact_at,
                "first_injective": s.first_injective,
                "last_surjective": s.last_surjective,
                "exact": s.is_exact(),
                "euler_zero": euler_check(&s.dims),
            })))
        }
        "frobenius-chain" => {
            let r = frobenius_chain_report(&spec.ambient).map_err(ctx)?;
            Ok(Outcome::done(json!({
                "expected_dim": r.expected_dim,
                "levels": r.levels.iter().map(|l| json!({
                    "i": l.i, "pi0_dim": l.pi0_dim, "pi1_dim": l.pi1_dim, "der_dim": l.der_dim,
                })).collect::<Vec<_>>(),
                "links": r.links.iter().map(|l| json!({
                    "i": l.i, "dims": l.dims, "exact": l.exact, "euler_zero": l.euler, "zero_map": l.zero_map,
                })).collect::<Vec<_>>(),
                "passed": r.passed,
            })))
        }
        "roundtrip" => {
            let trials = spec.raw.trials.unwrap_or(DEFAULT_TRIALS);
            let r = jacobson_roundtrip(&spec.f, &spec.k, trials, spec.seed).map_err(ctx)?;
            Ok(Outcome::done(roundtrip_json(&r)))
        }
        "selftest" => {
            let r = selftest(spec.seed).map_err(ctx)?;
            Ok(Outcome::done(json!({
                "seed": r.seed,
                "suites": r.suites.iter().map(|s| json!({
                    "name": s.name, "trials": s.trials, "passes": s.passes, "passed": s.passed(),
                })).collect::<Vec<_>>(),
                "passed": r.passed,
            })))
        }
        other => Err(CliError::UnknownCommand(other.into())),
    }
}

fn list(spec: &ProblemSpec, v: &[RatFunc]) -> Vec<String> {
    v.iter().map(|f| spec.print(f)).collect()
}

fn matrix(spec: &ProblemSpec, m: &Matrix) -> Vec<Vec<String>> {
    (0..m.nrows()).map(|i| list(spec, &m.row(i))).collect()
}

fn presentation(spec: &ProblemSpec) -> CliResult<Arc<TriangularPresentation>> {
    TriangularPresentation::new(&spec.f, &spec.k, spec.presentation.as_deref())
        .map(Arc::new)
        .map_err(|e| CliError::math("presentation", e))
}

fn module(spec: &ProblemSpec) -> CliResult<DerivationModule> {
    Ok(DerivationModule::new(&presentation(spec)?))
}

fn presentation_json(spec: &ProblemSpec, pres: &TriangularPresentation) -> Value {
    let p = spec.ambient.p() as u64;
    let rows: Vec<Value> = (0..pres.len())
        .map(|i| {
            let u = &pres.gens()[i];
            let e = pres.exps()[i];
            json!({
                "generator": spec.print(u),
                "exponent": e,
                "power": spec.print(&u.pow(p.pow(e))),
            })
        })
        .collect();
    json!({"generators": rows, "degree": pres.degree()})
}

fn conditions(r: &ConditionReport) -> Value {
    json!({
        "injectivity": r.injectivity,
        "vanishing": r.vanishing,
        "balance": r.balance,
        "dims": {
            "pi0_dim": r.dims.pi0_dim,
            "pi1_dim": r.dims.pi1_dim,
            "anchor_rank": r.dims.anchor_rank,
            "target_dim": r.dims.target_dim,
        },
        "verdict": r.verdict,
    })
}

fn simplicity(spec: &ProblemSpec, s: &SimplicityReport) -> Value {
    json!({
        "trivial": s.trivial,
        "simple": s.simple,
        "omega_dim": s.omega_dim,
        "generator": s.generator.as_ref().map(|g| spec.print(g)),
        "search_agrees": s.search_agrees,
    })
}

fn roundtrip_json(r: &inseparable::galois::RoundTripReport) -> Value {
    json!({
        "trials": r.trials,
        "field_passes": r.field_passes,
        "algebroid_passes": r.algebroid_passes,
        "reversal_passes": r.reversal_passes,
        "passed": r.passed,
    })
}

pub fn modularity(spec: &ProblemSpec, v: &ModularityVerdict) -> Value {
    match v {
        ModularityVerdict::Modular { generators, parts, degrees, conditions: c } => json!({
            "verdict": v.label(),
            "generators": list(spec, generators),
            "degrees": degrees,
            "parts": parts.iter().map(|e| list(spec, e.generators())).collect::<Vec<_>>(),
            "conditions": {
                "essential_image": c.condition1,
                "fibre_dim_one": c.condition2,
                "direct_sum": c.condition3,
                "degree_product": c.degree_product,
                "passed": c.passed,
            },
        }),
        ModularityVerdict::NotModular(w) => json!({
            "verdict": v.label(),
            "criterion": w.criterion,
            "level": w.level,
            "certificate": {
                "elements": list(spec, &w.certificate.elements),
                "coefficients": list(spec, &w.certificate.coefficients),
                "relation_is_zero": w.certificate.relation_value().is_zero(),
            },
        }),
        ModularityVerdict::Inconclusive { candidates_tried, disjoint_levels } => json!({
            "verdict": v.label(),
            "candidates_tried": candidates_tried,
            "disjoint_levels": disjoint_levels,
        }),
    }
}
