use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families with fixed vertex numberings:
///
/// - `complete [n]`: `K_n` on `0..n`.
/// - `cycle [n]`, `n >= 3`: edges `i ~ i+1 (mod n)`.
/// - `path [n]`: edges `i ~ i+1` for `i < n-1`.
/// - `star [k]`, `k >= 1`: `K_{1,k}` with centre `0` and leaves `1..=k`.
/// - `complete_multipartite [p1, ..., pr]`: parts are consecutive blocks
///   of sizes `p1, ..., pr`; vertices in different parts are adjacent.
/// - `petersen []`: outer cycle `0..5`, inner pentagram `5 + i ~ 5 + (i+2) % 5`,
///   spokes `i ~ 5 + i`.
/// - `edgeless [n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    Star,
    CompleteMultipartite,
    Petersen,
    Edgeless,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Complete,
        Family::Cycle,
        Family::Path,
        Family::Star,
        Family::CompleteMultipartite,
        Family::Petersen,
        Family::Edgeless,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Star => "star",
            Family::CompleteMultipartite => "complete_multipartite",
            Family::Petersen => "petersen",
            Family::Edgeless => "edgeless",
        }
    }

    pub fn params_help(self) -> &'static str {
        match self {
            Family::Complete | Family::Path | Family::Edgeless => "N (N >= 1)",
            Family::Cycle => "N (N >= 3)",
            Family::Star => "K (K >= 1 leaves)",
            Family::CompleteMultipartite => "P1 P2 ... (part sizes, each >= 1)",
            Family::Petersen => "(none)",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

pub fn family(which: Family, params: &[usize]) -> Result<Graph> {
    let invalid = |reason: &str| Error::InvalidFamilyParams {
        family: which.name().to_string(),
        reason: reason.to_string(),
    };
    let single = |min: usize| -> Result<usize> {
        match params {
            [n] if *n >= min => Ok(*n),
            [_] => Err(invalid(&format!("size must be at least {min}"))),
            _ => Err(invalid("expected exactly one size parameter")),
        }
    };
    match which {
        Family::Complete => {
            let n = single(1)?;
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::Cycle => {
            let n = single(3)?;
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Path => {
            let n = single(1)?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Star => {
            let k = single(1)?;
            Graph::new(k + 1, (1..=k).map(|leaf| (0, leaf)))
        }
        Family::Edgeless => Graph::edgeless(single(1)?),
        Family::CompleteMultipartite => {
            if params.is_empty() || params.contains(&0) {
                return Err(invalid("need at least one part, every part of size >= 1"));
            }
            let mut part = Vec::new();
            for (i, &size) in params.iter().enumerate() {
                part.extend(std::iter::repeat_n(i, size));
            }
            let n = part.len();
            let part = &part;
            Graph::new(
                n,
                (0..n).flat_map(|u| (u + 1..n).filter(move |&v| part[u] != part[v]).map(move |v| (u, v))),
            )
        }
        Family::Petersen => {
            if !params.is_empty() {
                return Err(invalid("takes no parameters"));
            }
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            let spokes = (0..5).map(|i| (i, 5 + i));
            Graph::new(10, outer.chain(inner).chain(spokes))
        }
    }
}
