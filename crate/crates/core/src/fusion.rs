//! Fusion products of simple and projective modules.

use alloc::format;

use crate::error::{Error, Result};
use crate::labels::{epsilon, epsilon2, FormalSum, LabelKind, ModuleLabel};
use crate::symbolic::rational::{half, int, is_integer, to_i64, Rational};

fn typical(n: Rational, ehat: Rational) -> ModuleLabel {
    ModuleLabel::typical(n, ehat).expect("shifted typical weight stays typical")
}

fn sum(parts: impl IntoIterator<Item = (ModuleLabel, u64)>) -> FormalSum {
    parts.into_iter().collect()
}

/// The three-term pattern `X_{c+1} ⊕ 2·X_c ⊕ X_{c-1}`.
fn triple(center: Rational, make: impl Fn(Rational) -> ModuleLabel) -> FormalSum {
    sum([
        (make(&center + int(1)), 1),
        (make(center.clone()), 2),
        (make(center - int(1)), 1),
    ])
}

/// Fusion product of two labels. Parity flags are ignored and the result carries
/// none.
pub fn fuse(a: &ModuleLabel, b: &ModuleLabel) -> Result<FormalSum> {
    use LabelKind::*;
    let undetermined = || {
        Err(Error::Undetermined(format!(
            "fusion not determined for {} x {}",
            crate::text::render(a),
            crate::text::render(b)
        )))
    };
    let out = match (&a.kind, &b.kind) {
        (VermaV0 { .. }, _) | (_, VermaV0 { .. }) => return undetermined(),

        (AtypicalA { n, ell }, AtypicalA { n: n2, ell: l2 }) => FormalSum::single(
            ModuleLabel::atypical(n + n2 - epsilon2(*ell, *l2), ell + l2),
        ),

        (AtypicalA { n, ell }, TypicalV { n: n2, ehat })
        | (TypicalV { n: n2, ehat }, AtypicalA { n, ell }) => {
            FormalSum::single(typical(n + n2 - epsilon(*ell), ehat + int(*ell)))
        }

        (TypicalV { n, ehat }, TypicalV { n: n2, ehat: e2 }) => {
            let s = ehat + e2;
            let m = n + n2;
            if !is_integer(&s) {
                sum([
                    (typical(&m + half(), s.clone()), 1),
                    (typical(m - half(), s), 1),
                ])
            } else {
                let l = to_i64(&s).expect("small integer weight");
                if l != 0 && is_integer(e2) {
                    return undetermined();
                }
                FormalSum::single(ModuleLabel::projective(m + epsilon(l), l))
            }
        }

        (AtypicalA { n, ell }, ProjectiveP { n: n2, ell: l2 })
        | (ProjectiveP { n: n2, ell: l2 }, AtypicalA { n, ell }) => FormalSum::single(
            ModuleLabel::projective(n + n2 - epsilon2(*ell, *l2), ell + l2),
        ),

        (TypicalV { n, ehat }, ProjectiveP { n: n2, ell: l2 })
        | (ProjectiveP { n: n2, ell: l2 }, TypicalV { n, ehat }) => {
            let s = ehat + int(*l2);
            triple(n + n2 - epsilon(*l2), |c| typical(c, s.clone()))
        }

        (ProjectiveP { n, ell }, ProjectiveP { n: n2, ell: l2 }) => {
            let l = ell + l2;
            triple(n + n2 - epsilon2(*ell, *l2), |c| ModuleLabel::projective(c, l))
        }
    };
    Ok(out)
}

/// Bilinear extension of [`fuse`] to direct sums.
pub fn fuse_formal(a: &FormalSum, b: &FormalSum) -> Result<FormalSum> {
    let mut out = FormalSum::new();
    for (x, m) in a {
        for (y, m2) in b {
            out = out.add(&fuse(x, y)?.scale(m * m2));
        }
    }
    Ok(out)
}

/// Check that fusion descends to the Grothendieck group: the composition
/// factors of `a ⊠ b` agree with the fusion of the composition factors.
pub fn k_ring_check(a: &ModuleLabel, b: &ModuleLabel) -> Result<bool> {
    let lhs = fuse(a, b)?.k_decompose();
    let rhs = fuse_formal(&a.k_decompose().without_parity(), &b.k_decompose().without_parity())?
        .k_decompose();
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rational::rat;

    fn a(n: Rational, l: i64) -> ModuleLabel {
        ModuleLabel::atypical(n, l)
    }

    fn v(n: Rational, e: Rational) -> ModuleLabel {
        ModuleLabel::typical(n, e).unwrap()
    }

    #[test]
    fn atypical_rules() {
        assert_eq!(fuse(&a(int(1), 0), &a(int(2), 0)).unwrap(), FormalSum::single(a(int(3), 0)));
        assert_eq!(
            fuse(&a(rat(1, 2), -2), &a(rat(-1, 2), 2)).unwrap(),
            FormalSum::single(ModuleLabel::unit())
        );
    }

    #[test]
    fn typical_rules() {
        let (n, e) = (rat(1, 3), rat(2, 5));
        assert_eq!(
            fuse(&v(n.clone(), e.clone()), &v(-n, -e)).unwrap(),
            FormalSum::single(ModuleLabel::projective(int(0), 0))
        );
        assert_eq!(
            fuse(&v(rat(1, 4), half()), &v(rat(1, 4), half())).unwrap(),
            FormalSum::single(ModuleLabel::projective(int(1), 1))
        );
        let s = fuse(&v(int(0), rat(1, 3)), &v(int(0), rat(1, 3))).unwrap();
        assert_eq!(s.total_multiplicity(), 2);
    }

    #[test]
    fn projective_rules() {
        assert_eq!(
            fuse(&a(int(0), 1), &ModuleLabel::projective(int(0), 0)).unwrap(),
            FormalSum::single(ModuleLabel::projective(int(0), 1))
        );
        let vp = fuse(&v(int(0), rat(1, 3)), &ModuleLabel::projective(int(0), 0)).unwrap();
        assert_eq!(vp.multiplicity(&v(int(0), rat(1, 3))), 2);
        assert_eq!(vp.total_multiplicity(), 4);
    }

    #[test]
    fn reducible_verma_rejected() {
        let r = fuse(&ModuleLabel::verma0(int(0), 1), &v(int(0), half()));
        assert!(matches!(r, Err(Error::Undetermined(_))));
    }

    #[test]
    fn formal_extension() {
        let two = FormalSum::single(a(int(0), 1)).scale(2);
        assert_eq!(
            fuse_formal(&two, &FormalSum::single(a(int(0), -1))).unwrap(),
            FormalSum::single(ModuleLabel::unit()).scale(2)
        );
    }

    #[test]
    fn grothendieck_examples() {
        let n = rat(1, 4);
        let e = rat(3, 7);
        assert!(k_ring_check(&a(n.clone(), 2), &ModuleLabel::projective(int(1), -1)).unwrap());
        assert!(k_ring_check(&ModuleLabel::unit(), &ModuleLabel::unit()).unwrap());
        assert!(k_ring_check(&v(n.clone(), e.clone()), &v(-n, -e)).unwrap());
    }
}
