//! Plain-text proposition statements in the style of a webbook.

use std::fmt::Write;

use rps_core::words::{InstanceSpec, Lettering, Symmetry};

use crate::pipeline::{Artifact, Proposition, Status};
use crate::webbook::Webbook;

/// Terms shown inline before eliding.
const SHOWN_TERMS: usize = 30;

fn alphabet(spec: &InstanceSpec) -> String {
    let m = spec.alphabet_size();
    let letters: Vec<String> = match spec.lettering() {
        Lettering::Coin => vec!["H".into(), "T".into()],
        Lettering::Latin => (0..m).map(|i| ((b'a' + i as u8) as char).to_string()).collect(),
    };
    format!("{{{}}}", letters.join(", "))
}

/// `#HT(w) - #TT(w) = 0`
pub fn relation(spec: &InstanceSpec) -> String {
    let mut out = String::new();
    for (i, &c) in spec.weights().iter().enumerate() {
        let count = format!("#{}(w)", spec.render_pattern(i));
        let mag = c.unsigned_abs();
        let body = if mag == 1 { count } else { format!("{mag}*{count}") };
        match (i, c < 0) {
            (0, true) => out.push_str(&format!("-{body}")),
            (0, false) => out.push_str(&body),
            (_, true) => out.push_str(&format!(" - {body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
        }
    }
    format!("{out} = {}", spec.target())
}

fn status_text(s: &Status) -> String {
    match s {
        Status::VerifiedToOrder(m) => format!("verified through t^{m}"),
        Status::VerifiedOnRange(lo, hi) => format!("verified for {lo} <= n <= {hi}"),
        Status::CrossCheckedAgainstOracle(n) => format!("cross-checked against direct counting through n = {n}"),
        Status::OracleOnly(n) => format!("direct counting through n = {n}"),
        Status::Converged => "extrapolation converged".into(),
        Status::Failed(why) => format!("FAILED: {why}"),
    }
}

fn line<T>(out: &mut String, label: &str, a: &Artifact<T>, show: impl Fn(&T) -> String) {
    match a {
        Artifact::Present { value, status } => {
            let _ = writeln!(out, "  {label}: {}", show(value));
            let _ = writeln!(out, "    [{}]", status_text(status));
        }
        Artifact::Absent { reason } => {
            let _ = writeln!(out, "  {label}: not available ({reason})");
        }
    }
}

/// Statement of one proposition, numbered `index`.
pub fn proposition_text(p: &Proposition, index: usize) -> String {
    let spec = &p.spec;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Proposition {index}. Let a(n) be the number of words w of length n over {} with {}.",
        alphabet(spec),
        relation(spec)
    );
    let shown: Vec<String> = p.terms.iter().take(SHOWN_TERMS).map(|a| a.to_string()).collect();
    let more = if p.terms.len() > SHOWN_TERMS { ", ..." } else { "" };
    let _ = writeln!(out, "  a(0..{}) = {}{more}", p.terms.len().saturating_sub(1), shown.join(", "));
    let _ = writeln!(out, "    [{}]", status_text(&p.terms_status));
    line(&mut out, "Weight-enumerator denominator", &p.enumerator, |f| f.denominator().to_string());
    line(&mut out, "P(t) = sum a(n) t^n satisfies", &p.algebraic, |e| e.to_string());
    line(&mut out, "Differential equation", &p.ode, |o| o.to_string());
    line(&mut out, "Recurrence", &p.recurrence, |r| r.to_string());
    line(&mut out, "Asymptotics", &p.asymptotics, |a| a.render());
    for note in &p.notes {
        let _ = writeln!(out, "  Note: {note}");
    }
    out
}

fn symmetry_text(s: Symmetry) -> &'static str {
    match s {
        Symmetry::LetterPerms => "letter permutations",
        Symmetry::LetterPermsAndReversal => "letter permutations and reversal",
    }
}

/// The whole webbook; byte-identical for identical input.
pub fn webbook_text(w: &Webbook) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Pairs of distinct words of length {} over an alphabet of {} letters, up to {}.",
        w.k,
        w.m,
        symmetry_text(w.symmetry)
    );
    let _ = writeln!(out, "This webbook contains {} propositions.", w.propositions.len());
    for (i, (p, class)) in w.propositions.iter().zip(&w.classes).enumerate() {
        let _ = writeln!(out);
        out.push_str(&proposition_text(p, i + 1));
        let _ = writeln!(out, "  Equivalent pairs: {}", class.orbit.len());
    }
    out
}
