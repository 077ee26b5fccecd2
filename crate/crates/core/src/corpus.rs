//! Small named configurations used by the test suite, the verification
//! battery and the CLI's `--corpus` flag.

use crate::arrangement::{boolean, braid, VectorConfiguration};
use crate::exactmath::scalar::{rat, Rat};

/// Coordinate cross in the plane: `y1, y2`.
pub fn b2() -> VectorConfiguration {
    boolean(2, 0)
}

/// Three generic lines in the plane: `y1, y2, y1 + y2` (uniform of rank 2 on
/// three elements).
pub fn u23() -> VectorConfiguration {
    VectorConfiguration::new(
        2,
        vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)], vec![rat(1), rat(1)]],
    )
}

/// Five covectors in dimension three, one repeated verbatim:
/// `y1, y2, y3, y2, y1 - y2`. The repeat makes the multiarrangement strictly
/// coarser than its set of hyperplanes, which several tests lean on.
pub fn example_g() -> VectorConfiguration {
    VectorConfiguration::new(
        3,
        vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(-1), rat(0)],
        ],
    )
}

/// Two pencils of three hyperplanes in dimension three: the first three
/// covectors share the kernel line `e3`, the last three the line `e2`.
pub fn two_pencils() -> VectorConfiguration {
    VectorConfiguration::new(
        3,
        vec![
            vec![rat(1), rat(1), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(-1), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(1)],
            vec![rat(0), rat(0), rat(1)],
            vec![rat(-1), rat(0), rat(1)],
        ],
    )
}

/// [`u23`] with multiplicities (2, 1, 1): the first covector doubled, so the
/// ground set has a genuinely parallel pair.
pub fn u23_multi() -> VectorConfiguration {
    u23().expand_multiset(&[2, 1, 1]).expect("multiplicities match u23")
}

/// `n` covectors on the moment curve `(1, t, t^2, ...)` in dimension `d`,
/// `t = 0, 1, ..., n-1`: any `d` of them are independent, so the matroid is
/// uniform of rank `min(n, d)`.
pub fn generic_moment(n: usize, d: usize) -> VectorConfiguration {
    let covectors = (0..n)
        .map(|t| {
            let mut row = Vec::with_capacity(d);
            let mut power = Rat::from_integer(1.into());
            for _ in 0..d {
                row.push(power.clone());
                power *= rat(t as i64);
            }
            row
        })
        .collect();
    VectorConfiguration::new(d, covectors)
}

/// Names accepted by [`by_name`].
pub fn names() -> Vec<&'static str> {
    vec!["b2", "u23", "u23-211", "g", "two-pencils", "braid3", "braid4", "boolean21"]
}

pub fn by_name(name: &str) -> Option<VectorConfiguration> {
    match name {
        "b2" => Some(b2()),
        "u23" => Some(u23()),
        "u23-211" => Some(u23_multi()),
        "g" => Some(example_g()),
        "two-pencils" => Some(two_pencils()),
        "braid3" => Some(braid(3)),
        "braid4" => Some(braid(4)),
        "boolean21" => Some(boolean(2, 1)),
        _ => None,
    }
}
