//! Small algebras used throughout the test suites and by `verify-fixture`.

use std::sync::Arc;

use crate::pathalg::{parse_algebra, Algebra};

/// Path algebra of `1 -> 2` over the rationals.
pub const A2: &str = "\
field Q
vertices 1 2
arrow a : 1 -> 2
";

/// `1 -> 2 -> 3 -> 4 <- 5 <- 6` with the single zero relation of length 3.
pub const GAMMA: &str = "\
field Q
vertices 1 2 3 4 5 6
arrow a : 1 -> 2
arrow b : 2 -> 3
arrow g : 3 -> 4
arrow d : 5 -> 4
arrow e : 6 -> 5
relation g*b*a
";

/// Oriented three-cycle with two zero relations of length 3.
pub const C3: &str = "\
field Q
vertices 1 2 3
arrow a : 1 -> 2
arrow b : 2 -> 3
arrow g : 3 -> 1
relation g*b*a
relation a*g*b
module X31 { dim 1 0 1 ; map g = [[1]] }
module M = S(1) + X31 + DA
";

/// Commutative square `1 -> 2 -> 4`, `1 -> 3 -> 4`.
pub const SQUARE: &str = "\
field Q
vertices 1 2 3 4
arrow a : 1 -> 2
arrow b : 2 -> 4
arrow c : 1 -> 3
arrow d : 3 -> 4
relation b*a - d*c
";

fn load(text: &str) -> Arc<Algebra> {
    parse_algebra(text).expect("fixture parses").algebra
}

pub fn a2() -> Arc<Algebra> {
    load(A2)
}

pub fn gamma() -> Arc<Algebra> {
    load(GAMMA)
}

pub fn c3() -> Arc<Algebra> {
    load(C3)
}

pub fn commutative_square() -> Arc<Algebra> {
    load(SQUARE)
}
