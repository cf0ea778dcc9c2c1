use super::Term;

// Binding strength, loosest first. `+`, `->` and the prefix operators never
// appear in printed output because they are expanded at parse time.
const JOIN: u8 = 1;
const MEET: u8 = 2;
const RESIDUAL: u8 = 4;
const FUSE: u8 = 5;
const ATOM: u8 = 7;

/// Print with the minimal parentheses needed for [`super::parse_term`] to
/// rebuild the same tree.
pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    write_term(t, 0, &mut out);
    out
}

fn level(t: &Term) -> u8 {
    match t {
        Term::Var(_) | Term::E | Term::F => ATOM,
        Term::Join(..) => JOIN,
        Term::Meet(..) => MEET,
        Term::LDiv(..) | Term::RDiv(..) => RESIDUAL,
        Term::Fuse(..) => FUSE,
    }
}

fn write_term(t: &Term, min_level: u8, out: &mut String) {
    let paren = level(t) < min_level;
    if paren {
        out.push('(');
    }
    match t {
        Term::Var(v) => out.push_str(v),
        Term::E => out.push('e'),
        Term::F => out.push('f'),
        Term::Join(l, r) => binary(l, " \\/ ", r, JOIN, JOIN + 1, out),
        Term::Meet(l, r) => binary(l, " /\\ ", r, MEET, MEET + 1, out),
        Term::LDiv(l, r) => binary(l, " \\ ", r, FUSE, FUSE, out),
        Term::RDiv(l, r) => binary(l, " / ", r, FUSE, FUSE, out),
        Term::Fuse(l, r) => binary(l, " * ", r, FUSE, FUSE + 1, out),
    }
    if paren {
        out.push(')');
    }
}

fn binary(l: &Term, op: &str, r: &Term, left_min: u8, right_min: u8, out: &mut String) {
    write_term(l, left_min, out);
    out.push_str(op);
    write_term(r, right_min, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Term {
        Term::var("x")
    }
    fn y() -> Term {
        Term::var("y")
    }

    #[test]
    fn examples() {
        assert_eq!(print_term(&Term::ldiv(x(), x())), "x \\ x");
        assert_eq!(print_term(&Term::E), "e");
        assert_eq!(
            print_term(&Term::meet(Term::join(x(), y()), Term::E)),
            "(x \\/ y) /\\ e"
        );
    }

    #[test]
    fn chained_residuals_get_parentheses() {
        let t = Term::ldiv(Term::ldiv(x(), Term::E), Term::E);
        assert_eq!(print_term(&t), "(x \\ e) \\ e");
        let u = Term::rdiv(x(), Term::rdiv(y(), x()));
        assert_eq!(print_term(&u), "x / (y / x)");
    }

    #[test]
    fn right_nested_fuse_keeps_its_shape() {
        let t = Term::fuse(x(), Term::fuse(y(), x()));
        assert_eq!(print_term(&t), "x * (y * x)");
        let u = Term::fuse(Term::fuse(x(), y()), x());
        assert_eq!(print_term(&u), "x * y * x");
    }
}
