use super::{validate, FiniteAlgebra, FinmodError, Signature};

/// Finite first-order properties, each decided by exhaustive quantification.
///
/// `~x` is `x\e`; the four `Tilde*` properties are meant for e-cyclic algebras,
/// where it coincides with `e/x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PropertyName {
    IsRL,
    IsIntegral,
    IsIntegrallyClosed,
    IsECyclic,
    /// `~(x\y) = ~y/~x`
    TildeOfLDiv,
    /// `~(y/x) = ~x\~y`
    TildeOfRDiv,
    /// `x·~x·y ≤ e ⟹ y ≤ e`
    LeftTildeCancel,
    /// `y·~x·x ≤ e ⟹ y ≤ e`
    RightTildeCancel,
    IsSirmonoid,
    IsPseudoBCI,
    /// `xᵏ = e ⟹ x = e` for `1 ≤ k ≤ n`.
    TorsionFreeUpTo(usize),
    IsCommutative,
    /// Involutive, commutative, integrally closed, pointed, with `f·f = f`.
    IsCasari,
}

pub fn check_property(a: &FiniteAlgebra, p: PropertyName) -> Result<bool, FinmodError> {
    let n = a.size;
    let e = a.e;
    let elems = || 0..n;
    let pairs = || elems().flat_map(move |x| elems().map(move |y| (x, y)));
    let tilde = |x| a.ld(x, e);
    let need = |present: bool, what: &str| {
        if present {
            Ok(())
        } else {
            Err(FinmodError::SignatureMismatch(format!(
                "{p:?} needs {what}"
            )))
        }
    };
    Ok(match p {
        PropertyName::IsRL => {
            need(a.signature() == Signature::Lattice, "a lattice signature")?;
            validate(a, Signature::Lattice).is_empty()
        }
        PropertyName::IsIntegral => elems().all(|x| a.le(x, e)),
        PropertyName::IsIntegrallyClosed => elems().all(|x| a.ld(x, x) == e && a.rd(x, x) == e),
        PropertyName::IsECyclic => elems().all(|x| a.ld(x, e) == a.rd(e, x)),
        PropertyName::TildeOfLDiv => {
            pairs().all(|(x, y)| tilde(a.ld(x, y)) == a.rd(tilde(y), tilde(x)))
        }
        PropertyName::TildeOfRDiv => {
            pairs().all(|(x, y)| tilde(a.rd(y, x)) == a.ld(tilde(x), tilde(y)))
        }
        PropertyName::LeftTildeCancel | PropertyName::RightTildeCancel => {
            need(a.fuse.is_some(), "fuse")?;
            let mut ok = true;
            for (x, y) in pairs() {
                let prod = if p == PropertyName::LeftTildeCancel {
                    a.mul(a.mul(x, tilde(x))?, y)?
                } else {
                    a.mul(a.mul(y, tilde(x))?, x)?
                };
                if a.le(prod, e) && !a.le(y, e) {
                    ok = false;
                    break;
                }
            }
            ok
        }
        PropertyName::IsSirmonoid => {
            need(a.fuse.is_some(), "fuse")?;
            validate(a, Signature::Sirmonoid).is_empty()
        }
        PropertyName::IsPseudoBCI => validate(a, Signature::PseudoBci).is_empty(),
        PropertyName::TorsionFreeUpTo(k) => {
            need(a.fuse.is_some(), "fuse")?;
            let mut ok = true;
            for x in elems().filter(|&x| x != e) {
                let mut power = x;
                for _ in 1..=k {
                    if power == e {
                        ok = false;
                        break;
                    }
                    power = a.mul(power, x)?;
                }
            }
            ok
        }
        PropertyName::IsCommutative => match &a.fuse {
            Some(_) => pairs().all(|(x, y)| a.mul(x, y).ok() == a.mul(y, x).ok()),
            None => pairs().all(|(x, y)| a.ld(x, y) == a.rd(y, x)),
        },
        PropertyName::IsCasari => {
            let f =
                a.f.ok_or_else(|| FinmodError::SignatureMismatch("IsCasari needs f".into()))?;
            need(a.signature() == Signature::Lattice, "a lattice signature")?;
            check_property(a, PropertyName::IsRL)?
                && check_property(a, PropertyName::IsCommutative)?
                && check_property(a, PropertyName::IsIntegrallyClosed)?
                && elems().all(|x| a.ld(a.ld(x, f), f) == x)
                && a.mul(f, f)? == f
        }
    })
}
