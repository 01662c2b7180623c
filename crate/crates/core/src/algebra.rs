//! Closed-form multiplication, powers, roots and classification.
//!
//! None of these depend on the ambient dimension: the product of two
//! elements of `M_n` is again in `M_n`, and the formulas are the same in
//! the unbounded semigroup. Only [`classify`] needs the ambient, to
//! recognise the identity `<0,1,n>`.

use std::fmt;
use std::ops::Mul;

use crate::element::{Ambient, Element, Triplet};

#[inline]
fn add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("triplet arithmetic overflowed i64")
}

#[inline]
fn sub(a: i64, b: i64) -> i64 {
    a.checked_sub(b).expect("triplet arithmetic overflowed i64")
}

/// Product `xy`. `<d,k,m><d',k',m'>` is `<d+d', max(k,k'-d), min(m,m'-d)>`
/// when that block is nonempty and zero otherwise.
pub fn multiply(x: Element, y: Element) -> Element {
    match (x, y) {
        (Element::NonZero(a), Element::NonZero(b)) => multiply_triplets(a, b),
        _ => Element::Zero,
    }
}

#[inline]
pub fn multiply_triplets(a: Triplet, b: Triplet) -> Element {
    let d = add(a.d(), b.d());
    let k = a.k().max(sub(b.k(), a.d()));
    let m = a.m().min(sub(b.m(), a.d()));
    if k > m {
        Element::Zero
    } else {
        Element::NonZero(Triplet::from_raw(d, k, m))
    }
}

impl Mul for Element {
    type Output = Element;

    fn mul(self, rhs: Element) -> Element {
        multiply(self, rhs)
    }
}

/// `xy != 0`, decided by `k' - m <= d <= m' - k` without forming the product.
#[inline]
pub fn is_nonzero_product(x: Element, y: Element) -> bool {
    match (x, y) {
        (Element::NonZero(a), Element::NonZero(b)) => triplets_nonzero_product(a, b),
        _ => false,
    }
}

#[inline]
pub fn triplets_nonzero_product(a: Triplet, b: Triplet) -> bool {
    b.k() - a.m() <= a.d() && a.d() <= b.m() - a.k()
}

/// `x^j` for `j >= 1` in closed form.
///
/// # Panics
/// If `j == 0`; the semigroup has no empty product.
pub fn power(x: Element, j: u32) -> Element {
    assert!(j >= 1, "power exponent must be positive");
    let t = match x {
        Element::Zero => return Element::Zero,
        Element::NonZero(t) => t,
    };
    // i128 so that huge exponents cannot overflow; a nonzero result always fits i64.
    let steps = i128::from(j) - 1;
    let d = i128::from(t.d());
    let k = i128::from(t.k()) - steps * d.min(0);
    let m = i128::from(t.m()) - steps * d.max(0);
    if k > m {
        return Element::Zero;
    }
    let narrow = |v: i128| i64::try_from(v).expect("nonzero power fits i64");
    Element::NonZero(Triplet::from_raw(narrow(d * i128::from(j)), narrow(k), narrow(m)))
}

/// Number of ones in the matrix; zero for `0`.
pub fn ones_count(x: Element) -> i64 {
    x.triplet().map_or(0, Triplet::ones)
}

/// The matrix transpose `<-d, k+d, m+d>`, which is also the unique inverse.
pub fn transpose(x: Element) -> Element {
    match x {
        Element::Zero => Element::Zero,
        Element::NonZero(t) => Element::NonZero(transpose_triplet(t)),
    }
}

#[inline]
pub fn transpose_triplet(t: Triplet) -> Triplet {
    Triplet::from_raw(-t.d(), add(t.k(), t.d()), add(t.m(), t.d()))
}

/// `xy == yx`, evaluated from the two commutation conditions rather than
/// by forming both products.
pub fn commutes(x: Element, y: Element) -> bool {
    let (a, b) = match (x, y) {
        (Element::NonZero(a), Element::NonZero(b)) => (a, b),
        _ => return true,
    };
    let (d, k, m) = (a.d(), a.k(), a.m());
    let (dp, kp, mp) = (b.d(), b.k(), b.m());
    let k_xy = k.max(kp - d);
    let m_xy = m.min(mp - d);
    let k_yx = kp.max(k - dp);
    let m_yx = mp.min(m - dp);
    let both_nonzero_equal = k_xy == k_yx && m_xy == m_yx && k_xy <= m_xy;
    let both_zero = k_xy > m_xy && k_yx > m_yx;
    both_nonzero_equal || both_zero
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Zero,
    Identity,
    Idempotent,
    Nilpotent { index: i64 },
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Zero => f.write_str("zero"),
            Classification::Identity => f.write_str("identity"),
            Classification::Idempotent => f.write_str("idempotent"),
            Classification::Nilpotent { index } => write!(f, "nilpotent (index {index})"),
        }
    }
}

/// Every element is idempotent (`d = 0`) or nilpotent (`d != 0`). The zero
/// carries no index.
pub fn classify(x: Element, ambient: Ambient) -> Classification {
    let t = match x {
        Element::Zero => return Classification::Zero,
        Element::NonZero(t) => t,
    };
    if t.d() != 0 {
        return Classification::Nilpotent { index: nilpotency_index(t) };
    }
    if ambient.identity() == Some(t) {
        Classification::Identity
    } else {
        Classification::Idempotent
    }
}

/// `1 + ceil((m-k+1)/|d|)` for `d != 0`.
///
/// # Panics
/// If `t` is diagonal.
pub fn nilpotency_index(t: Triplet) -> i64 {
    let step = t.d().checked_abs().expect("triplet arithmetic overflowed i64");
    assert!(step != 0, "diagonal elements are idempotent");
    1 + (t.ones() + step - 1) / step
}

/// The unique `j`th root of a nonzero element, or `None` when `j` does not
/// divide `d`. Roots of zero are not unique; see
/// [`crate::enumeration::roots_by_search`].
///
/// # Panics
/// If `j == 0`.
pub fn root(x: Triplet, j: u32) -> Option<Triplet> {
    assert!(j >= 1, "root order must be positive");
    let j = i64::from(j);
    if x.d() % j != 0 {
        return None;
    }
    let d = x.d() / j;
    let k = x.k() + (j - 1) * d.min(0);
    let m = x.m() + (j - 1) * d.max(0);
    Some(Triplet::from_raw(d, k, m))
}

/// Outcome of testing a candidate identity of the unbounded semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityWitness {
    pub candidate: Triplet,
    pub witness: Triplet,
    /// `candidate * witness`, which differs from `witness`.
    pub product: Element,
}

/// Rejection of a candidate that is not diagonal; it still carries a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("candidate {} is off the main diagonal; witness {}", .0.candidate, .0.witness)]
pub struct OffDiagonalCandidate(pub IdentityWitness);

/// Shows a diagonal candidate `<0,k,m>` is not an identity of the unbounded
/// semigroup by exhibiting `<0,k,m+1>`, which it fails to fix.
///
/// Candidates with `d != 0` are rejected, carrying the witness `<0,k+d,m+d>`
/// whose product with the candidate lands back on diagonal `d`.
pub fn no_identity_witness(candidate: Triplet) -> Result<IdentityWitness, OffDiagonalCandidate> {
    if candidate.d() != 0 {
        let witness = Triplet::from_raw(0, add(candidate.k(), candidate.d()), add(candidate.m(), candidate.d()));
        return Err(OffDiagonalCandidate(IdentityWitness {
            candidate,
            witness,
            product: multiply_triplets(candidate, witness),
        }));
    }
    let witness = Triplet::from_raw(0, candidate.k(), add(candidate.m(), 1));
    Ok(IdentityWitness {
        candidate,
        witness,
        product: multiply_triplets(candidate, witness),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(n: i64) -> Ambient {
        Ambient::finite(n).unwrap()
    }

    fn el(d: i64, k: i64, m: i64) -> Element {
        Element::new(d, k, m, Ambient::Unbounded).unwrap()
    }

    fn tr(d: i64, k: i64, m: i64) -> Triplet {
        Triplet::new(d, k, m, Ambient::Unbounded).unwrap()
    }

    // S_2 under e=<0,1,1>, f=<0,2,2>, a=<1,1,1>, b=<-1,2,2>
    fn brandt() -> (Element, Element, Element, Element) {
        (el(0, 1, 1), el(0, 2, 2), el(1, 1, 1), el(-1, 2, 2))
    }

    #[test]
    fn diagonal_three_product() {
        assert_eq!(el(1, 1, 3) * el(2, 3, 4), el(3, 2, 3));
        assert!(is_nonzero_product(el(1, 1, 3), el(2, 3, 4)));
    }

    #[test]
    fn brandt_products() {
        let (e, f, a, b) = brandt();
        assert_eq!(a * b, e);
        assert_eq!(b * a, f);
        assert_eq!(a * a, Element::Zero);
        assert_eq!(b * b, Element::Zero);
        assert!(!is_nonzero_product(a, a));
        assert!(!is_nonzero_product(Element::Zero, a));
        assert!(!is_nonzero_product(a, Element::Zero));
    }

    #[test]
    fn identity_fixes_everything_in_m4() {
        let one = Element::NonZero(fin(4).identity().unwrap());
        for d in -3..=3i64 {
            for k in 1..=4 {
                for m in k..=4 {
                    if let Ok(x) = Element::new(d, k, m, fin(4)) {
                        assert_eq!(one * x, x);
                        assert_eq!(x * one, x);
                    }
                }
            }
        }
    }

    #[test]
    fn powers() {
        assert_eq!(power(el(1, 1, 4), 2), el(2, 1, 3));
        assert_eq!(power(el(0, 2, 3), 5), el(0, 2, 3));
        assert_eq!(power(el(-1, 2, 2), 2), Element::Zero);
        assert_eq!(power(Element::Zero, 3), Element::Zero);
        assert_eq!(power(el(1, 1, 3), u32::MAX), Element::Zero);
        assert_eq!(power(el(0, 1, 3), u32::MAX), el(0, 1, 3));
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn zeroth_power_panics() {
        power(el(0, 1, 1), 0);
    }

    #[test]
    fn classification() {
        assert_eq!(classify(el(-1, 2, 2), fin(2)), Classification::Nilpotent { index: 2 });
        assert_eq!(classify(el(1, 1, 3), fin(6)), Classification::Nilpotent { index: 4 });
        assert_eq!(classify(el(2, 1, 2), fin(6)), Classification::Nilpotent { index: 2 });
        assert_eq!(classify(el(0, 1, 5), fin(5)), Classification::Identity);
        assert_eq!(classify(el(0, 1, 5), fin(6)), Classification::Idempotent);
        assert_eq!(classify(el(0, 1, 5), Ambient::Unbounded), Classification::Idempotent);
        assert_eq!(classify(Element::Zero, fin(3)), Classification::Zero);
    }

    #[test]
    fn ones() {
        assert_eq!(ones_count(Element::Zero), 0);
        assert_eq!(ones_count(el(1, 1, 3)), 3);
        assert_eq!(ones_count(el(0, 1, 7)), 7);
    }

    #[test]
    fn roots() {
        assert_eq!(root(tr(3, 2, 3), 3), Some(tr(1, 2, 5)));
        assert_eq!(power(el(1, 2, 5), 3), el(3, 2, 3));
        assert_eq!(root(tr(1, 1, 1), 2), None);
        assert_eq!(root(tr(0, 3, 7), 4), Some(tr(0, 3, 7)));
        assert_eq!(root(tr(-2, 3, 4), 2), Some(tr(-1, 2, 4)));
        assert_eq!(power(el(-1, 2, 4), 2), el(-2, 3, 4));
    }

    #[test]
    fn transposes() {
        assert_eq!(transpose(el(1, 1, 3)), el(-1, 2, 4));
        assert_eq!(transpose(Element::Zero), Element::Zero);
        assert_eq!(transpose(el(0, 2, 5)), el(0, 2, 5));
    }

    #[test]
    fn commutation() {
        let (e, f, a, b) = brandt();
        assert!(commutes(e, f));
        assert!(!commutes(a, b));
        assert!(commutes(Element::Zero, a));
        assert!(commutes(a, Element::Zero));
        assert!(commutes(a, a));
    }

    #[test]
    fn no_identity() {
        let w = no_identity_witness(tr(0, 1, 5)).unwrap();
        assert_eq!(w.witness, tr(0, 1, 6));
        assert_eq!(w.product, el(0, 1, 5));
        assert_ne!(w.product, Element::NonZero(w.witness));

        assert_eq!(no_identity_witness(tr(0, 3, 3)).unwrap().witness, tr(0, 3, 4));

        let rejected = no_identity_witness(tr(2, 1, 1)).unwrap_err().0;
        assert_ne!(rejected.product, Element::NonZero(rejected.witness));
        assert_eq!(rejected.product, el(2, 1, 1));
    }
}
