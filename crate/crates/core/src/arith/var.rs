use core::fmt;

/// Symbolic tag for an indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Generating-function variable.
    T,
    /// Sequence index.
    N,
    /// Constant-term variable.
    S,
    /// The unknown series in an algebraic equation.
    P,
    /// Marker for the occurrences of pattern `i` (1-based).
    Z(u16),
}

impl Var {
    pub fn parse(name: &str) -> Option<Var> {
        match name {
            "t" => Some(Var::T),
            "n" => Some(Var::N),
            "s" => Some(Var::S),
            "P" => Some(Var::P),
            _ => name.strip_prefix('z')?.parse().ok().map(Var::Z),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T => f.write_str("t"),
            Var::N => f.write_str("n"),
            Var::S => f.write_str("s"),
            Var::P => f.write_str("P"),
            Var::Z(i) => write!(f, "z{i}"),
        }
    }
}
