use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use rps_core::arith::Rational;
use rps_core::asymptotics::{estimate_asymptotics, AsymptoticEstimate};
use rps_core::cluster::{build_enumerator, WeightEnumerator};
use rps_core::diagonal::expand_diagonal;
use rps_core::guess::{search_algebraic, search_recurrence, verify_algebraic, verify_recurrence, AlgebraicEquation, HolonomicRecurrence};
use rps_core::holonomic::{algebraic_to_ode, extend_sequence, ode_to_recurrence, verify_ode, LinearODE};
use rps_core::words::{oracle_terms, InstanceSpec};
use rps_core::Error;

/// Budgets for one solve. `terms` counts terms, so the default covers
/// `a(0..=49)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOptions {
    pub terms: usize,
    pub guard: usize,
    pub max_deg_t: usize,
    pub max_deg_p: usize,
    pub max_order: usize,
    pub max_deg: usize,
    pub asymptotic_terms: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { terms: 50, guard: 10, max_deg_t: 12, max_deg_p: 12, max_order: 8, max_deg: 12, asymptotic_terms: 2000 }
    }
}

/// Evidence attached to a present artifact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    /// A series identity holds through `t^order`.
    VerifiedToOrder(i64),
    /// A recurrence holds for every `n` in the inclusive range.
    VerifiedOnRange(usize, usize),
    /// Agrees with the independent oracle through `a(through)`.
    CrossCheckedAgainstOracle(usize),
    /// Computed by the oracle alone; no second route was available.
    OracleOnly(usize),
    /// Extrapolation converged; the deltas live on the estimate.
    Converged,
    Failed(String),
}

impl Status {
    pub fn passing(&self) -> bool {
        !matches!(self, Status::Failed(_))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Artifact<T> {
    Present { value: T, status: Status },
    Absent { reason: String },
}

impl<T> Artifact<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Artifact::Present { value, .. } => Some(value),
            Artifact::Absent { .. } => None,
        }
    }

    pub fn status(&self) -> Option<&Status> {
        match self {
            Artifact::Present { status, .. } => Some(status),
            Artifact::Absent { .. } => None,
        }
    }

    fn absent(reason: impl Into<String>) -> Self {
        Artifact::Absent { reason: reason.into() }
    }
}

/// Everything known about one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Proposition {
    pub spec: InstanceSpec,
    pub terms: Vec<BigUint>,
    pub terms_status: Status,
    pub enumerator: Artifact<WeightEnumerator>,
    pub algebraic: Artifact<AlgebraicEquation>,
    pub ode: Artifact<LinearODE>,
    pub recurrence: Artifact<HolonomicRecurrence>,
    pub asymptotics: Artifact<AsymptoticEstimate>,
    pub notes: Vec<String>,
}

fn to_rationals(terms: &[BigUint]) -> Vec<Rational> {
    terms.iter().map(|x| Rational::from_integer(x.clone().into())).collect()
}

/// Guess both objects on `terms`, keeping what is already found.
fn guess_round(
    terms: &[Rational],
    opts: &SolveOptions,
    algebraic: &mut Option<AlgebraicEquation>,
    recurrence: &mut Option<HolonomicRecurrence>,
    notes: &mut Vec<String>,
) {
    if algebraic.is_none() {
        match search_algebraic(terms, opts.max_deg_t, opts.max_deg_p, opts.guard) {
            Ok(found) => *algebraic = found,
            Err(e) => notes.push(format!("algebraic search: {e}")),
        }
    }
    if recurrence.is_none() {
        match search_recurrence(terms, opts.max_order, opts.max_deg, opts.guard) {
            Ok(found) => *recurrence = found,
            Err(e) => notes.push(format!("recurrence search: {e}")),
        }
    }
}

/// Run the whole pipeline on one instance. Never fails: every stage that
/// cannot deliver leaves its artifact absent with a reason.
pub fn solve_instance(spec: &InstanceSpec, opts: &SolveOptions) -> Proposition {
    let n_max = opts.terms.max(1) - 1;
    let mut notes = Vec::new();
    let terms = oracle_terms(spec, n_max);

    let (enumerator, terms_status) = match build_enumerator(spec) {
        Ok(f) => match expand_diagonal(&f, n_max).and_then(|d| d.integer_terms()) {
            Ok(diag) if diag == terms => (Artifact::Present { value: f, status: Status::CrossCheckedAgainstOracle(n_max) }, Status::CrossCheckedAgainstOracle(n_max)),
            Ok(diag) => {
                let n = diag.iter().zip(&terms).position(|(a, b)| a != b).unwrap_or(0);
                let reason = format!("diagonal and oracle disagree at n = {n}");
                log::error!("{}: {reason}", spec.canonical_key());
                return aborted(spec, terms, f, reason);
            }
            Err(e) => (Artifact::absent(format!("diagonal expansion failed: {e}")), Status::OracleOnly(n_max)),
        },
        Err(Error::Unsupported(why)) => (Artifact::absent(format!("unsupported instance for the cluster method: {why}")), Status::OracleOnly(n_max)),
        Err(e) => (Artifact::absent(format!("cluster method failed: {e}")), Status::OracleOnly(n_max)),
    };

    let mut work = to_rationals(&terms);
    let mut algebraic = None;
    let mut recurrence = None;
    guess_round(&work, opts, &mut algebraic, &mut recurrence, &mut notes);
    if algebraic.is_none() || recurrence.is_none() {
        let doubled = 2 * opts.terms;
        notes.push(format!("escalated guessing to {doubled} terms"));
        work = to_rationals(&oracle_terms(spec, doubled - 1));
        guess_round(&work, opts, &mut algebraic, &mut recurrence, &mut notes);
    }
    let full = work.len() as i64 - 1;

    let algebraic_art = match &algebraic {
        Some(eq) if verify_algebraic(eq, &work) == full => Artifact::Present { value: eq.clone(), status: Status::VerifiedToOrder(full) },
        Some(_) => Artifact::absent("algebraic equation failed verification"),
        None => Artifact::absent("no algebraic equation within the degree budget"),
    };

    let mut derived_recurrence = None;
    let ode = match &algebraic_art {
        Artifact::Present { value, .. } => match algebraic_to_ode(value) {
            Ok(ode) => {
                let order = verify_ode(&ode, &work);
                if order == full - ode.order() as i64 {
                    derived_recurrence = ode_to_recurrence(&ode).ok();
                    Artifact::Present { value: ode, status: Status::VerifiedToOrder(order) }
                } else {
                    Artifact::absent(format!("derived ODE holds only through t^{order}"))
                }
            }
            Err(e) => Artifact::absent(format!("ODE derivation failed: {e}")),
        },
        Artifact::Absent { .. } => Artifact::absent("no algebraic equation to derive from"),
    };

    if recurrence.is_none() {
        if let Some(rec) = derived_recurrence.clone() {
            notes.push("recurrence taken from the derived ODE".into());
            recurrence = Some(rec);
        }
    }
    let recurrence_art = match recurrence {
        Some(mut rec) => match verify_recurrence(&rec, &work) {
            Some((lo, hi)) => {
                rec.verified_range = Some((lo, hi));
                Artifact::Present { value: rec, status: Status::VerifiedOnRange(lo, hi) }
            }
            None => Artifact::absent("recurrence failed verification"),
        },
        None => Artifact::absent("no recurrence within the order and degree budget"),
    };

    if let (Some(direct), Some(derived)) = (recurrence_art.value(), &derived_recurrence) {
        if direct != derived {
            let agree = match (extend_sequence(direct, &work, 200), extend_sequence(derived, &work, 200)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
            notes.push(format!(
                "guessed and ODE-derived recurrences {} through n = 200",
                if agree { "agree" } else { "DISAGREE" }
            ));
        }
    }

    let asymptotics = match recurrence_art.value() {
        Some(rec) => asymptotics_for(rec, &work, opts),
        None => Artifact::absent("no recurrence to extend"),
    };

    Proposition {
        spec: spec.clone(),
        terms,
        terms_status,
        enumerator,
        algebraic: algebraic_art,
        ode,
        recurrence: recurrence_art,
        asymptotics,
        notes,
    }
}

fn asymptotics_for(rec: &HolonomicRecurrence, seeds: &[Rational], opts: &SolveOptions) -> Artifact<AsymptoticEstimate> {
    if seeds.iter().all(|a| a.is_zero()) {
        return Artifact::absent("sequence is identically zero on the computed range");
    }
    let n_max = opts.asymptotic_terms.max(seeds.len()) - 1;
    let extended = match extend_sequence(rec, seeds, n_max) {
        Ok(x) => x,
        Err(e) => return Artifact::absent(format!("cannot extend the sequence: {e}")),
    };
    match estimate_asymptotics(rec, &extended) {
        Ok(est) if est.reliable => Artifact::Present { value: est, status: Status::Converged },
        Ok(est) => Artifact::absent(format!(
            "extrapolation did not settle (deltas: mu {:.1e}, theta {:.1e}, C {:.1e})",
            est.deltas.mu, est.deltas.theta, est.deltas.c
        )),
        Err(e) => Artifact::absent(format!("asymptotics unavailable: {e}")),
    }
}

fn aborted(spec: &InstanceSpec, terms: Vec<BigUint>, f: WeightEnumerator, reason: String) -> Proposition {
    let gone = || format!("aborted: {reason}");
    Proposition {
        spec: spec.clone(),
        terms,
        terms_status: Status::Failed(reason.clone()),
        enumerator: Artifact::Present { value: f, status: Status::Failed(reason.clone()) },
        algebraic: Artifact::absent(gone()),
        ode: Artifact::absent(gone()),
        recurrence: Artifact::absent(gone()),
        asymptotics: Artifact::absent(gone()),
        notes: vec![reason],
    }
}
