//! Result type of a single property trial.

use serde::Serialize;
use serde_json::Value;

use crate::rng::RngError;

/// A falsified trial: why, and the inputs (plus any intermediate values)
/// that reproduce it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub reason: String,
    pub inputs: Value,
}

impl Failure {
    pub fn new(reason: impl Into<String>, inputs: Value) -> Self {
        Failure { reason: reason.into(), inputs }
    }
}

impl From<revpaste::Error> for Failure {
    fn from(e: revpaste::Error) -> Self {
        Failure::new(format!("unexpected error: {e}"), Value::Null)
    }
}

impl From<RngError> for Failure {
    fn from(e: RngError) -> Self {
        Failure::new(format!("generator error: {e}"), Value::Null)
    }
}

pub type Outcome = Result<(), Failure>;

/// JSON object of named witnesses: `witness!("A" => a, "n" => n)`.
macro_rules! witness {
    ($($name:literal => $val:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut map = serde_json::Map::new();
        $( map.insert($name.to_string(), $crate::codec::Witness::witness(&$val)); )*
        serde_json::Value::Object(map)
    }};
}

/// Fails the trial with `reason` and the named witnesses unless `cond` holds.
macro_rules! ensure {
    ($cond:expr, $reason:expr $(, $name:literal => $val:expr)* $(,)?) => {
        if !$cond {
            return Err($crate::outcome::Failure::new($reason, witness!($($name => $val),*)));
        }
    };
}

/// Like `ensure!` for an equality; both sides are added to the witnesses.
macro_rules! ensure_eq {
    ($lhs:expr, $rhs:expr, $reason:expr $(, $name:literal => $val:expr)* $(,)?) => {{
        let (lhs, rhs) = (&$lhs, &$rhs);
        if lhs != rhs {
            return Err($crate::outcome::Failure::new(
                $reason,
                witness!($($name => $val,)* "lhs" => lhs, "rhs" => rhs),
            ));
        }
    }};
}
