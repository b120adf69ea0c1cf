//! Stable JSON form of a [`Proposition`]. Big integers and rationals are
//! strings; polynomials are coefficient arrays, lowest degree first.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use rps_core::arith::{MultiPoly, Rational, UniPoly, Var};
use rps_core::asymptotics::{AsymptoticEstimate, Deltas};
use rps_core::cluster::WeightEnumerator;
use rps_core::guess::{AlgebraicEquation, HolonomicRecurrence};
use rps_core::holonomic::LinearODE;
use rps_core::words::InstanceSpec;

use crate::pipeline::{Artifact, Proposition, Status};

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("invalid content: {0}")]
    Content(String),
}

impl From<rps_core::Error> for JsonError {
    fn from(e: rps_core::Error) -> Self {
        JsonError::Content(e.to_string())
    }
}

type Result<T> = std::result::Result<T, JsonError>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecJson {
    pub m: usize,
    pub patterns: Vec<String>,
    pub weights: Vec<i64>,
    pub target: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumeratorJson {
    pub numerator: String,
    pub denominator: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraicJson {
    /// `coefficients[j][i]` multiplies `t^i P^j`.
    pub coefficients: Vec<Vec<String>>,
    pub deg_t: usize,
    pub deg_p: usize,
    pub verified_order: i64,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OdeJson {
    pub order: usize,
    /// `coefficients[i][k]` multiplies `t^k P^(i)`.
    pub coefficients: Vec<Vec<String>>,
    pub inhomogeneous: Vec<String>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RecurrenceJson {
    pub order: usize,
    /// `coefficients[i][k]` multiplies `n^k a(n+i)`.
    pub coefficients: Vec<Vec<String>>,
    pub verified_range: Option<(usize, usize)>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeltasJson {
    pub mu: f64,
    pub theta: f64,
    #[serde(rename = "C")]
    pub c: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AsymptoticsJson {
    pub mu: f64,
    pub theta: f64,
    #[serde(rename = "C")]
    pub c: f64,
    pub period: usize,
    pub residue: usize,
    pub deltas: DeltasJson,
    pub dominant_root: Option<f64>,
    pub root_agrees: bool,
    pub reliable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum StatusJson {
    VerifiedToOrder { order: i64 },
    VerifiedOnRange { from: usize, to: usize },
    CrossCheckedAgainstOracle { through: usize },
    OracleOnly { through: usize },
    Converged,
    Failed { reason: String },
    Absent { reason: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropositionJson {
    pub spec: SpecJson,
    pub terms: Vec<String>,
    pub enumerator: Option<EnumeratorJson>,
    pub algebraic: Option<AlgebraicJson>,
    pub ode: Option<OdeJson>,
    pub recurrence: Option<RecurrenceJson>,
    pub asymptotics: Option<AsymptoticsJson>,
    pub verification: BTreeMap<String, StatusJson>,
    pub notes: Vec<String>,
    pub version: String,
}

fn poly_json(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn poly_from(c: &[String], var: Var) -> Result<UniPoly> {
    let coeffs = c
        .iter()
        .map(|s| s.parse::<Rational>().map_err(|_| JsonError::Content(format!("bad rational {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(coeffs, var))
}

fn status_json(s: &Status) -> StatusJson {
    match s {
        Status::VerifiedToOrder(order) => StatusJson::VerifiedToOrder { order: *order },
        Status::VerifiedOnRange(from, to) => StatusJson::VerifiedOnRange { from: *from, to: *to },
        Status::CrossCheckedAgainstOracle(n) => StatusJson::CrossCheckedAgainstOracle { through: *n },
        Status::OracleOnly(n) => StatusJson::OracleOnly { through: *n },
        Status::Converged => StatusJson::Converged,
        Status::Failed(reason) => StatusJson::Failed { reason: reason.clone() },
    }
}

fn status_from(s: &StatusJson) -> Option<Status> {
    Some(match s {
        StatusJson::VerifiedToOrder { order } => Status::VerifiedToOrder(*order),
        StatusJson::VerifiedOnRange { from, to } => Status::VerifiedOnRange(*from, *to),
        StatusJson::CrossCheckedAgainstOracle { through } => Status::CrossCheckedAgainstOracle(*through),
        StatusJson::OracleOnly { through } => Status::OracleOnly(*through),
        StatusJson::Converged => Status::Converged,
        StatusJson::Failed { reason } => Status::Failed(reason.clone()),
        StatusJson::Absent { .. } => return None,
    })
}

fn artifact_json<T, J>(a: &Artifact<T>, f: impl Fn(&T) -> J) -> (Option<J>, StatusJson) {
    match a {
        Artifact::Present { value, status } => (Some(f(value)), status_json(status)),
        Artifact::Absent { reason } => (None, StatusJson::Absent { reason: reason.clone() }),
    }
}

fn artifact_from<T, J>(value: Option<&J>, status: Option<&StatusJson>, name: &str, f: impl Fn(&J) -> Result<T>) -> Result<Artifact<T>> {
    let status = status.ok_or_else(|| JsonError::Content(format!("missing verification entry for {name}")))?;
    match (value, status_from(status)) {
        (Some(v), Some(s)) => Ok(Artifact::Present { value: f(v)?, status: s }),
        (None, None) => match status {
            StatusJson::Absent { reason } => Ok(Artifact::Absent { reason: reason.clone() }),
            _ => unreachable!(),
        },
        _ => Err(JsonError::Content(format!("{name}: value and verification entry disagree"))),
    }
}

pub fn to_json(p: &Proposition) -> PropositionJson {
    let spec = &p.spec;
    let mut verification = BTreeMap::new();
    verification.insert("terms".to_string(), status_json(&p.terms_status));
    let (enumerator, s) = artifact_json(&p.enumerator, |f: &WeightEnumerator| EnumeratorJson {
        numerator: f.numerator().to_string(),
        denominator: f.denominator().to_string(),
    });
    verification.insert("enumerator".into(), s);
    let (algebraic, s) = artifact_json(&p.algebraic, |e: &AlgebraicEquation| AlgebraicJson {
        coefficients: e.p_coefficients().iter().map(poly_json).collect(),
        deg_t: e.deg_t(),
        deg_p: e.deg_p(),
        verified_order: e.verified_order,
        text: e.to_string(),
    });
    verification.insert("algebraic".into(), s);
    let (ode, s) = artifact_json(&p.ode, |o: &LinearODE| OdeJson {
        order: o.order(),
        coefficients: o.coefficients().iter().map(poly_json).collect(),
        inhomogeneous: poly_json(o.inhomogeneous()),
        text: o.to_string(),
    });
    verification.insert("ode".into(), s);
    let (recurrence, s) = artifact_json(&p.recurrence, |r: &HolonomicRecurrence| RecurrenceJson {
        order: r.order(),
        coefficients: r.coefficients().iter().map(poly_json).collect(),
        verified_range: r.verified_range,
        text: r.to_string(),
    });
    verification.insert("recurrence".into(), s);
    let (asymptotics, s) = artifact_json(&p.asymptotics, |a: &AsymptoticEstimate| AsymptoticsJson {
        mu: a.mu,
        theta: a.theta,
        c: a.c,
        period: a.period,
        residue: a.residue,
        deltas: DeltasJson { mu: a.deltas.mu, theta: a.deltas.theta, c: a.deltas.c },
        dominant_root: a.dominant_root,
        root_agrees: a.root_agrees,
        reliable: a.reliable,
    });
    verification.insert("asymptotics".into(), s);
    PropositionJson {
        spec: SpecJson {
            m: spec.alphabet_size(),
            patterns: (0..spec.patterns().len()).map(|i| spec.render_pattern(i)).collect(),
            weights: spec.weights().to_vec(),
            target: spec.target(),
        },
        terms: p.terms.iter().map(|a| a.to_string()).collect(),
        enumerator,
        algebraic,
        ode,
        recurrence,
        asymptotics,
        verification,
        notes: p.notes.clone(),
        version: crate::VERSION.to_string(),
    }
}

pub fn from_json(j: &PropositionJson) -> Result<Proposition> {
    let pats: Vec<&str> = j.spec.patterns.iter().map(String::as_str).collect();
    let spec = InstanceSpec::parse(j.spec.m, &pats, j.spec.weights.clone(), j.spec.target)?;
    let terms = j
        .terms
        .iter()
        .map(|s| s.parse::<BigUint>().map_err(|_| JsonError::Content(format!("bad term {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    let v = &j.verification;
    let terms_status = v
        .get("terms")
        .and_then(status_from)
        .ok_or_else(|| JsonError::Content("missing status for terms".into()))?;
    let vars: Vec<Var> = std::iter::once(Var::T).chain((1..=pats.len()).map(|i| Var::Z(i as u16))).collect();
    let enumerator = artifact_from(j.enumerator.as_ref(), v.get("enumerator"), "enumerator", |e| {
        let num = MultiPoly::parse(&e.numerator, vars.clone())?;
        let den = MultiPoly::parse(&e.denominator, vars.clone())?;
        Ok(WeightEnumerator::from_parts(spec.clone(), num, den)?)
    })?;
    let algebraic = artifact_from(j.algebraic.as_ref(), v.get("algebraic"), "algebraic", |a| {
        let c = a.coefficients.iter().map(|c| poly_from(c, Var::T)).collect::<Result<Vec<_>>>()?;
        let mut eq = AlgebraicEquation::from_p_coefficients(&c)?;
        eq.verified_order = a.verified_order;
        Ok(eq)
    })?;
    let ode = artifact_from(j.ode.as_ref(), v.get("ode"), "ode", |o| {
        let c = o.coefficients.iter().map(|c| poly_from(c, Var::T)).collect::<Result<Vec<_>>>()?;
        Ok(LinearODE::new(c, poly_from(&o.inhomogeneous, Var::T)?)?)
    })?;
    let recurrence = artifact_from(j.recurrence.as_ref(), v.get("recurrence"), "recurrence", |r| {
        let c = r.coefficients.iter().map(|c| poly_from(c, Var::N)).collect::<Result<Vec<_>>>()?;
        let mut rec = HolonomicRecurrence::new(c)?;
        rec.verified_range = r.verified_range;
        Ok(rec)
    })?;
    let asymptotics = artifact_from(j.asymptotics.as_ref(), v.get("asymptotics"), "asymptotics", |a| {
        Ok(AsymptoticEstimate {
            mu: a.mu,
            theta: a.theta,
            c: a.c,
            period: a.period,
            residue: a.residue,
            deltas: Deltas { mu: a.deltas.mu, theta: a.deltas.theta, c: a.deltas.c },
            dominant_root: a.dominant_root,
            root_agrees: a.root_agrees,
            reliable: a.reliable,
        })
    })?;
    Ok(Proposition { spec, terms, terms_status, enumerator, algebraic, ode, recurrence, asymptotics, notes: j.notes.clone() })
}

/// Pretty-printed JSON; stable for fixed input.
pub fn to_string(p: &Proposition) -> String {
    serde_json::to_string_pretty(&to_json(p)).expect("proposition serializes")
}

pub fn from_str(text: &str) -> Result<Proposition> {
    let j: PropositionJson = serde_json::from_str(text)?;
    from_json(&j)
}

