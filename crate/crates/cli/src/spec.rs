//! JSON problem specs.
//!
//! ```json
//! {"p": 2, "variables": ["x", "y", "z"], "exponent_bound": 2,
//!  "F": {"generators": ["x*z+y", "z"]}, "K": {"generators": ["x^2", "y^2"]}}
//! ```
//!
//! The base field `F_p(x_j^{p^{e_j}})` is always implicit. `K` is `B` adjoined the `K`
//! generators and `F` is `K` adjoined the `F` generators, unless `F.over` is `"base"`,
//! in which case `F` is `B` adjoined its own generators only.

use std::sync::Arc;

use inseparable::funcfield::RatFunc;
use inseparable::random::DEFAULT_SEED;
use inseparable::tower::{AmbientField, IntermediateField};
use inseparable::galois::DEFAULT_BUDGET;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::expr::{parse_expression, print_ratfunc};

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ExponentBound {
    Uniform(u32),
    PerVariable(Vec<u32>),
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    #[serde(default)]
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over: Option<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawSpec {
    pub p: u32,
    pub variables: Vec<String>,
    pub exponent_bound: ExponentBound,
    #[serde(rename = "F", default)]
    pub f: FieldSpec,
    #[serde(rename = "K", default)]
    pub k: FieldSpec,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub e: Option<FieldSpec>,
    /// Generators of `F` over `K` to present with, in order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<Vec<String>>,
    /// Derivations as values on the presentation generators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivations: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct ProblemSpec {
    pub raw: RawSpec,
    pub ambient: Arc<AmbientField>,
    pub k_generators: Vec<RatFunc>,
    pub f_generators: Vec<RatFunc>,
    pub e_generators: Option<Vec<RatFunc>>,
    pub presentation: Option<Vec<RatFunc>>,
    pub derivations: Option<Vec<Vec<RatFunc>>>,
    pub k: IntermediateField,
    pub f: IntermediateField,
    pub e: Option<IntermediateField>,
    pub seed: u64,
    pub budget: usize,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> CliResult<ProblemSpec> {
        let raw: RawSpec = serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))?;
        ProblemSpec::from_raw(raw)
    }

    pub fn from_raw(raw: RawSpec) -> CliResult<ProblemSpec> {
        if raw.variables.is_empty() {
            return Err(CliError::Schema("at least one variable is required".into()));
        }
        for (i, v) in raw.variables.iter().enumerate() {
            if !is_identifier(v) {
                return Err(CliError::Schema(format!("`{v}` is not a valid variable name")));
            }
            if raw.variables[..i].contains(v) {
                return Err(CliError::Schema(format!("variable `{v}` declared twice")));
            }
        }
        let exps = match &raw.exponent_bound {
            ExponentBound::Uniform(e) => vec![*e; raw.variables.len()],
            ExponentBound::PerVariable(v) if v.len() == raw.variables.len() => v.clone(),
            ExponentBound::PerVariable(v) => {
                return Err(CliError::Schema(format!(
                    "exponent_bound lists {} entries for {} variables",
                    v.len(),
                    raw.variables.len()
                )))
            }
        };
        let ambient = AmbientField::with_exponents(raw.p, raw.variables.clone(), exps)
            .map_err(|e| CliError::Schema(e.to_string()))?;
        let names = ambient.names().to_vec();
        let parse_all = |what: &str, list: &[String]| -> CliResult<Vec<RatFunc>> {
            list.iter()
                .map(|s| parse_expression(s, ambient.ring(), &names).map_err(|e| with_context(e, what, s)))
                .collect()
        };
        let k_generators = parse_all("K generator", &raw.k.generators)?;
        let f_generators = parse_all("F generator", &raw.f.generators)?;
        let e_generators = raw.e.as_ref().map(|e| parse_all("E generator", &e.generators)).transpose()?;
        let presentation = raw.presentation.as_deref().map(|p| parse_all("presentation generator", p)).transpose()?;
        let derivations = raw
            .derivations
            .as_ref()
            .map(|ds| ds.iter().map(|d| parse_all("derivation value", d)).collect::<CliResult<Vec<_>>>())
            .transpose()?;

        let k = IntermediateField::closure(&ambient, &k_generators);
        let relative = match raw.f.over.as_deref() {
            None | Some("K") => true,
            Some("base") => false,
            Some(other) => return Err(CliError::Schema(format!("F.over must be \"K\" or \"base\", not `{other}`"))),
        };
        let f = if relative { k.adjoin(&f_generators) } else { IntermediateField::closure(&ambient, &f_generators) };
        if let Some((g, _)) = raw.k.generators.iter().zip(&k_generators).find(|(_, g)| !f.contains(g)) {
            return Err(CliError::math(
                format!("K generator `{g}` does not lie in F"),
                inseparable::Error::NotASubfield("K is not contained in F"),
            ));
        }
        let e = match &e_generators {
            Some(gens) => {
                let e = k.adjoin(gens);
                if let Some((s, _)) = raw.e.as_ref().unwrap().generators.iter().zip(gens).find(|(_, g)| !f.contains(g)) {
                    return Err(CliError::math(
                        format!("E generator `{s}` does not lie in F"),
                        inseparable::Error::NotATower,
                    ));
                }
                Some(e)
            }
            None => None,
        };
        Ok(ProblemSpec {
            seed: raw.seed.unwrap_or(DEFAULT_SEED),
            budget: raw.budget.unwrap_or(DEFAULT_BUDGET),
            raw,
            ambient,
            k_generators,
            f_generators,
            e_generators,
            presentation,
            derivations,
            k,
            f,
            e,
        })
    }

    pub fn names(&self) -> &[String] {
        self.ambient.names()
    }

    pub fn print(&self, f: &RatFunc) -> String {
        print_ratfunc(f, self.names())
    }

    /// The problem with every expression in canonical form.
    pub fn echo(&self) -> serde_json::Value {
        let list = |v: &[RatFunc]| v.iter().map(|g| self.print(g)).collect::<Vec<_>>();
        let mut out = serde_json::json!({
            "p": self.ambient.p(),
            "variables": self.names(),
            "exponent_bound": self.ambient.exponents(),
            "F": {"generators": list(&self.f_generators), "over": self.raw.f.over.as_deref().unwrap_or("K")},
            "K": {"generators": list(&self.k_generators)},
            "seed": self.seed,
            "budget": self.budget,
        });
        if let Some(e) = &self.e_generators {
            out["E"] = serde_json::json!({"generators": list(e)});
        }
        if let Some(p) = &self.presentation {
            out["presentation"] = serde_json::json!(list(p));
        }
        if let Some(ds) = &self.derivations {
            out["derivations"] = serde_json::json!(ds.iter().map(|d| list(d)).collect::<Vec<_>>());
        }
        out
    }
}

fn with_context(e: CliError, what: &str, src: &str) -> CliError {
    match e {
        CliError::Parse { pos, msg } => CliError::Parse { pos, msg: format!("{msg} in {what} `{src}`") },
        other => other,
    }
}
