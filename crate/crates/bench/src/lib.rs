//! Empty library target; the crate exists for its Criterion benches.
