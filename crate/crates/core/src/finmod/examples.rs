//! Small named algebras used in tests and documentation.

use super::FiniteAlgebra;

/// The chain `0 < 1 = e` with fuse equal to meet.
pub fn two_chain() -> FiniteAlgebra {
    FiniteAlgebra::residuated(2, 1, vec![1, 1, 0, 1], vec![0, 0, 0, 1])
        .expect("chain is residuated")
}

/// Subsets of the monoid `{e, a}` with `aa = a`, ordered by inclusion, with
/// the complex product. Element `i` is the subset with bitmask `i`
/// (bit 0 is `e`, bit 1 is `a`), so `e = 1`.
pub fn powerset_ea() -> FiniteAlgebra {
    let n = 4;
    // Product of singletons: e·e = e, everything else is a.
    let point = |x: usize, y: usize| if x == 0 && y == 0 { 0 } else { 1 };
    let mut leq = vec![0; n * n];
    let mut fuse = vec![0; n * n];
    for s in 0..n {
        for t in 0..n {
            leq[s * n + t] = u8::from(s & t == s);
            let mut p = 0;
            for x in 0..2 {
                for y in 0..2 {
                    if s >> x & 1 == 1 && t >> y & 1 == 1 {
                        p |= 1 << point(x, y);
                    }
                }
            }
            fuse[s * n + t] = p;
        }
    }
    FiniteAlgebra::residuated(n, 1, leq, fuse).expect("powerset is residuated")
}

/// The two-element group `{e, a}` as a sirmonoid (`e = 0`).
pub fn z2() -> FiniteAlgebra {
    let xor = vec![0, 1, 1, 0];
    FiniteAlgebra {
        size: 2,
        e: 0,
        f: None,
        leq: None,
        meet: None,
        join: None,
        fuse: Some(xor.clone()),
        ldiv: xor.clone(),
        rdiv: xor,
    }
}
