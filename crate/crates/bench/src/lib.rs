//! Benchmark inputs shared by the criterion benches.

use altdiag::{enumerate_alternating, CanonicalClass, DiagramParams};

/// Every in-range alternating class for `n`, as diagram parameters.
pub fn alternating_params(n: i64) -> Vec<DiagramParams> {
    enumerate_alternating(n)
        .expect("n >= 1")
        .iter()
        .map(|c| c.to_params().expect("in-range class"))
        .collect()
}

/// A weak family-1 class with twist boxes on both sides.
pub fn weak_class(n: i64) -> CanonicalClass {
    "M1(3;0[2],1[-1],0)"
        .parse::<CanonicalClass>()
        .map(|c| CanonicalClass { n, ..c })
        .expect("class notation")
}
