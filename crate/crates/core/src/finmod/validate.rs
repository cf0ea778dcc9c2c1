use std::fmt;

use super::{FiniteAlgebra, Signature};

/// A failed law together with the elements witnessing the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn new(law: &'static str, witness: Vec<usize>) -> Violation {
        Violation { law, witness }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(usize::to_string).collect();
        write!(f, "{} fails at ({})", self.law, w.join(", "))
    }
}

/// Every law of `signature` that `a` breaks, with witnesses.
///
/// The list is empty iff `a` is an algebra of the signature. Malformed tables
/// are reported on their own, since nothing else can be evaluated then.
pub fn validate(a: &FiniteAlgebra, signature: Signature) -> Vec<Violation> {
    let mut out = a.shape_violations();
    let needed: &[(&'static str, bool)] = match signature {
        Signature::Lattice => &[
            ("order table present", a.leq.is_some()),
            ("meet table present", a.meet.is_some()),
            ("join table present", a.join.is_some()),
            ("fuse table present", a.fuse.is_some()),
        ],
        Signature::Sirmonoid => &[("fuse table present", a.fuse.is_some())],
        Signature::PseudoBci => &[],
    };
    for &(law, ok) in needed {
        if !ok {
            out.push(Violation::new(law, vec![]));
        }
    }
    if !out.is_empty() {
        return out;
    }
    let mut v = Checker { a, out };
    match signature {
        Signature::Lattice => {
            v.lattice();
            v.monoid();
            v.residuation(|x, y| a.le(x, y));
        }
        Signature::Sirmonoid => {
            v.monoid();
            v.derived_order();
            v.residuation(|x, y| a.derived_le(x, y));
            v.bci_axioms();
            v.fuse_axiom();
        }
        Signature::PseudoBci => {
            v.derived_order();
            v.bci_axioms();
        }
    }
    v.out
}

struct Checker<'a> {
    a: &'a FiniteAlgebra,
    out: Vec<Violation>,
}

impl Checker<'_> {
    fn fail(&mut self, law: &'static str, witness: &[usize]) {
        self.out.push(Violation::new(law, witness.to_vec()));
    }

    fn n(&self) -> usize {
        self.a.size
    }

    fn lattice(&mut self) {
        let a = self.a;
        let n = self.n();
        for x in 0..n {
            if !a.le(x, x) {
                self.fail("order is reflexive", &[x]);
            }
            for y in 0..n {
                if x != y && a.le(x, y) && a.le(y, x) {
                    self.fail("order is antisymmetric", &[x, y]);
                }
                for z in 0..n {
                    if a.le(x, y) && a.le(y, z) && !a.le(x, z) {
                        self.fail("order is transitive", &[x, y, z]);
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let m = a.meet_of(x, y).expect("checked present");
                let j = a.join_of(x, y).expect("checked present");
                let glb = a.le(m, x)
                    && a.le(m, y)
                    && (0..n).all(|z| !(a.le(z, x) && a.le(z, y)) || a.le(z, m));
                let lub = a.le(x, j)
                    && a.le(y, j)
                    && (0..n).all(|z| !(a.le(x, z) && a.le(y, z)) || a.le(j, z));
                if !glb {
                    self.fail("meet is the greatest lower bound", &[x, y]);
                }
                if !lub {
                    self.fail("join is the least upper bound", &[x, y]);
                }
            }
        }
    }

    fn monoid(&mut self) {
        let a = self.a;
        let n = self.n();
        let m = |x, y| a.mul(x, y).expect("checked present");
        for x in 0..n {
            if m(a.e, x) != x || m(x, a.e) != x {
                self.fail("e is a unit", &[x]);
            }
            for y in 0..n {
                for z in 0..n {
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        self.fail("fuse is associative", &[x, y, z]);
                    }
                }
            }
        }
    }

    /// `b ≤ a\c ⟺ ab ≤ c ⟺ a ≤ c/b` for every triple `(a, b, c)`.
    fn residuation(&mut self, le: impl Fn(usize, usize) -> bool) {
        let a = self.a;
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mid = le(a.mul(x, y).expect("checked present"), z);
                    if le(y, a.ld(x, z)) != mid || le(x, a.rd(z, y)) != mid {
                        self.fail("residuation", &[x, y, z]);
                    }
                }
            }
        }
    }

    /// `a\b = e ⟺ b/a = e` makes `⪯` well defined; it must be a partial
    /// order with `e` maximal.
    fn derived_order(&mut self) {
        let a = self.a;
        let n = self.n();
        let e = a.e;
        for x in 0..n {
            if !a.derived_le(x, x) {
                self.fail("x\\x = e", &[x]);
            }
            if a.derived_le(e, x) && x != e {
                self.fail("e is maximal", &[x]);
            }
            for y in 0..n {
                if a.derived_le(x, y) != (a.rd(y, x) == e) {
                    self.fail("x\\y = e iff y/x = e", &[x, y]);
                }
                if x != y && a.derived_le(x, y) && a.derived_le(y, x) {
                    self.fail("x\\y = e & y\\x = e => x = y", &[x, y]);
                }
                for z in 0..n {
                    if a.derived_le(x, y) && a.derived_le(y, z) && !a.derived_le(x, z) {
                        self.fail("derived order is transitive", &[x, y, z]);
                    }
                }
            }
        }
    }

    /// The residual axioms shared by sirmonoids and pseudo BCI-algebras.
    fn bci_axioms(&mut self) {
        let a = self.a;
        let n = self.n();
        let (l, r, e) = (|x, y| a.ld(x, y), |x, y| a.rd(x, y), a.e);
        for x in 0..n {
            if l(e, x) != x {
                self.fail("e\\x = x", &[x]);
            }
            if r(x, e) != x {
                self.fail("x/e = x", &[x]);
            }
            for y in 0..n {
                for z in 0..n {
                    if r(r(l(x, z), l(y, z)), l(x, y)) != e {
                        self.fail("((x\\z)/(y\\z))/(x\\y) = e", &[x, y, z]);
                    }
                    if l(r(y, x), l(r(z, y), r(z, x))) != e {
                        self.fail("(y/x)\\((z/y)\\(z/x)) = e", &[x, y, z]);
                    }
                }
            }
        }
    }

    fn fuse_axiom(&mut self) {
        let a = self.a;
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let xy = a.mul(x, y).expect("checked present");
                    if a.ld(xy, z) != a.ld(y, a.ld(x, z)) {
                        self.fail("(xy)\\z = y\\(x\\z)", &[x, y, z]);
                    }
                }
            }
        }
    }
}
