//! Enumeration of `M_n`, `S_n` and their subsemigroup families; order
//! formulas, generated closures and Cayley tables.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::algebra::{classify, multiply, power, Classification};
use crate::element::{Ambient, Element, Triplet};
use crate::error::{EnumerationError, ValidationError};

/// Nonzero elements of `M_n` in canonical `(d, k, m)` order.
pub fn nonzero_elements(n: i64) -> impl Iterator<Item = Triplet> {
    (-(n - 1)..=n - 1).flat_map(move |d| {
        let k_min = 1 - d.min(0);
        let m_max = n - d.max(0);
        (k_min..=m_max).flat_map(move |k| (k..=m_max).map(move |m| Triplet::from_raw(d, k, m)))
    })
}

/// A named subsemigroup of `M_n`.
///
/// Each family is `0` together with the nonzero elements satisfying a
/// predicate on `(d, k, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `M_n`
    Monoid,
    /// `S_n = M_n \ {1}`
    Semigroup,
    UpperTriangular,
    StrictlyUpperTriangular,
    UpperFull,
    StrictlyUpperFull,
    LowerTriangular,
    StrictlyLowerTriangular,
    LowerFull,
    StrictlyLowerFull,
    Diagonal,
    /// Single-entry matrices, `m = k`.
    SingleEntry,
    /// `d` an integer multiple of `d0`, `1 <= d0 <= n-1`.
    DiagonalMultipleOf(i64),
    /// `d >= d0`, `1 <= d0 <= n-1`.
    DiagonalAtLeast(i64),
    /// First row and first column are zero.
    ZeroFirstRowAndColumn,
    /// First row and last column are zero.
    ZeroFirstRowAndLastColumn,
    /// At most `j` ones, `2 <= j <= n`.
    AtMostOnes(i64),
}

impl Family {
    /// The named families that take no parameter.
    pub const TABLE: [Family; 12] = [
        Family::Monoid,
        Family::Semigroup,
        Family::UpperTriangular,
        Family::StrictlyUpperTriangular,
        Family::UpperFull,
        Family::StrictlyUpperFull,
        Family::LowerTriangular,
        Family::StrictlyLowerTriangular,
        Family::LowerFull,
        Family::StrictlyLowerFull,
        Family::Diagonal,
        Family::SingleEntry,
    ];

    /// Every family for dimension `n`, with all admissible parameters.
    pub fn all(n: i64) -> Vec<Family> {
        let mut out = Family::TABLE.to_vec();
        out.push(Family::ZeroFirstRowAndColumn);
        out.push(Family::ZeroFirstRowAndLastColumn);
        for d0 in 1..n {
            out.push(Family::DiagonalMultipleOf(d0));
            out.push(Family::DiagonalAtLeast(d0));
        }
        for j in 2..=n {
            out.push(Family::AtMostOnes(j));
        }
        out
    }

    pub fn validate(self, n: i64) -> Result<(), EnumerationError> {
        Ambient::finite(n)?;
        let check = |value: i64, min: i64, max: i64| {
            if (min..=max).contains(&value) {
                Ok(())
            } else {
                Err(EnumerationError::ParameterOutOfRange { value, min, max, n })
            }
        };
        match self {
            Family::DiagonalMultipleOf(d0) | Family::DiagonalAtLeast(d0) => check(d0, 1, n - 1),
            Family::AtMostOnes(j) => check(j, 2, n),
            _ => Ok(()),
        }
    }

    /// Membership of a nonzero element of `M_n`; `0` belongs to every family.
    pub fn contains(self, n: i64, t: Triplet) -> bool {
        let (d, k, m) = (t.d(), t.k(), t.m());
        match self {
            Family::Monoid => true,
            Family::Semigroup => !(d == 0 && k == 1 && m == n),
            Family::UpperTriangular => d >= 0,
            Family::StrictlyUpperTriangular => d > 0,
            Family::UpperFull => d >= 0 && k == 1 && m == n - d,
            Family::StrictlyUpperFull => d > 0 && k == 1 && m == n - d,
            Family::LowerTriangular => d <= 0,
            Family::StrictlyLowerTriangular => d < 0,
            Family::LowerFull => d <= 0 && k == 1 - d && m == n,
            Family::StrictlyLowerFull => d < 0 && k == 1 - d && m == n,
            Family::Diagonal => d == 0,
            Family::SingleEntry => m == k,
            Family::DiagonalMultipleOf(d0) => d % d0 == 0,
            Family::DiagonalAtLeast(d0) => d >= d0,
            Family::ZeroFirstRowAndColumn => k >= 2 && k + d >= 2,
            Family::ZeroFirstRowAndLastColumn => k >= 2 && m + d < n,
            Family::AtMostOnes(j) => t.ones() <= j,
        }
    }

    pub fn contains_element(self, n: i64, x: Element) -> bool {
        x.triplet().is_none_or(|t| self.contains(n, t))
    }

    /// The family of transposes, when it is again a named family.
    pub fn transpose(self) -> Option<Family> {
        Some(match self {
            Family::Monoid => Family::Monoid,
            Family::Semigroup => Family::Semigroup,
            Family::UpperTriangular => Family::LowerTriangular,
            Family::StrictlyUpperTriangular => Family::StrictlyLowerTriangular,
            Family::UpperFull => Family::LowerFull,
            Family::StrictlyUpperFull => Family::StrictlyLowerFull,
            Family::LowerTriangular => Family::UpperTriangular,
            Family::StrictlyLowerTriangular => Family::StrictlyUpperTriangular,
            Family::LowerFull => Family::UpperFull,
            Family::StrictlyLowerFull => Family::StrictlyUpperFull,
            Family::Diagonal => Family::Diagonal,
            Family::SingleEntry => Family::SingleEntry,
            Family::DiagonalMultipleOf(d0) => Family::DiagonalMultipleOf(d0),
            Family::AtMostOnes(j) => Family::AtMostOnes(j),
            Family::ZeroFirstRowAndColumn => Family::ZeroFirstRowAndColumn,
            Family::DiagonalAtLeast(_) | Family::ZeroFirstRowAndLastColumn => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Monoid => f.write_str("Mn"),
            Family::Semigroup => f.write_str("Sn"),
            Family::UpperTriangular => f.write_str("UT"),
            Family::StrictlyUpperTriangular => f.write_str("SUT"),
            Family::UpperFull => f.write_str("UF"),
            Family::StrictlyUpperFull => f.write_str("SUF"),
            Family::LowerTriangular => f.write_str("LT"),
            Family::StrictlyLowerTriangular => f.write_str("SLT"),
            Family::LowerFull => f.write_str("LF"),
            Family::StrictlyLowerFull => f.write_str("SLF"),
            Family::Diagonal => f.write_str("D"),
            Family::SingleEntry => f.write_str("B"),
            Family::DiagonalMultipleOf(d0) => write!(f, "MultipleOf({d0})"),
            Family::DiagonalAtLeast(d0) => write!(f, "AtLeast({d0})"),
            Family::ZeroFirstRowAndColumn => f.write_str("ZeroFirstRowCol"),
            Family::ZeroFirstRowAndLastColumn => f.write_str("ZeroFirstRowLastCol"),
            Family::AtMostOnes(j) => write!(f, "AtMostOnes({j})"),
        }
    }
}

impl FromStr for Family {
    type Err = EnumerationError;

    /// Accepts the [`Display`](fmt::Display) tags, case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || EnumerationError::UnknownFamily(s.to_string());
        let lower = s.trim().to_ascii_lowercase();
        if let Some((name, rest)) = lower.split_once('(') {
            let arg: i64 = rest.strip_suffix(')').and_then(|a| a.trim().parse().ok()).ok_or_else(unknown)?;
            return match name.trim() {
                "multipleof" => Ok(Family::DiagonalMultipleOf(arg)),
                "atleast" => Ok(Family::DiagonalAtLeast(arg)),
                "atmostones" => Ok(Family::AtMostOnes(arg)),
                _ => Err(unknown()),
            };
        }
        Ok(match lower.as_str() {
            "mn" => Family::Monoid,
            "sn" => Family::Semigroup,
            "ut" => Family::UpperTriangular,
            "sut" => Family::StrictlyUpperTriangular,
            "uf" => Family::UpperFull,
            "suf" => Family::StrictlyUpperFull,
            "lt" => Family::LowerTriangular,
            "slt" => Family::StrictlyLowerTriangular,
            "lf" => Family::LowerFull,
            "slf" => Family::StrictlyLowerFull,
            "d" => Family::Diagonal,
            "b" => Family::SingleEntry,
            "zerofirstrowcol" => Family::ZeroFirstRowAndColumn,
            "zerofirstrowlastcol" => Family::ZeroFirstRowAndLastColumn,
            _ => return Err(unknown()),
        })
    }
}

/// Members of `family` in `M_n`, zero first, then lexicographic by `(d, k, m)`.
pub fn enumerate(n: i64, family: Family) -> Result<Vec<Element>, EnumerationError> {
    family.validate(n)?;
    let mut out = vec![Element::Zero];
    out.extend(nonzero_elements(n).filter(|&t| family.contains(n, t)).map(Element::NonZero));
    Ok(out)
}

/// Closed-form order (zero included).
pub fn order_formula(n: i64, family: Family) -> Result<i64, EnumerationError> {
    family.validate(n)?;
    let pyramid = n * (n + 1) * (2 * n + 1) / 6;
    Ok(match family {
        Family::Monoid => pyramid + 1,
        Family::Semigroup => pyramid,
        Family::UpperTriangular | Family::LowerTriangular => 1 + n * (n + 1) * (n + 2) / 6,
        Family::StrictlyUpperTriangular | Family::StrictlyLowerTriangular => 1 + (n - 1) * n * (n + 1) / 6,
        Family::UpperFull | Family::LowerFull => 1 + n,
        Family::StrictlyUpperFull | Family::StrictlyLowerFull => n,
        Family::Diagonal => 1 + n * (n + 1) / 2,
        Family::SingleEntry => 1 + n * n,
        other => return Err(EnumerationError::NoFormula(other.to_string())),
    })
}

/// Idempotents of `S_n` (zero included): `n(n+1)/2`.
pub fn count_idempotents(n: i64) -> i64 {
    n * (n + 1) / 2
}

/// Nilpotents of `S_n` (zero included): `n^3/3 - n/3 + 1`.
pub fn count_nilpotents(n: i64) -> i64 {
    (n * n * n - n) / 3 + 1
}

/// `(idempotents, nilpotents)` of `S_n` by classifying every element.
/// Zero counts towards both.
pub fn tally_classes(n: i64) -> Result<(i64, i64), EnumerationError> {
    let ambient = Ambient::finite(n)?;
    let mut idempotents = 0;
    let mut nilpotents = 0;
    for x in enumerate(n, Family::Semigroup)? {
        match classify(x, ambient) {
            Classification::Zero => {
                idempotents += 1;
                nilpotents += 1;
            }
            Classification::Idempotent => idempotents += 1,
            Classification::Nilpotent { .. } => nilpotents += 1,
            Classification::Identity => unreachable!("S_n excludes the identity"),
        }
    }
    Ok((idempotents, nilpotents))
}

/// Least multiplication-closed set containing `generators`.
///
/// Worklist over an insertion-ordered vector: when element `i` is
/// processed it is multiplied on both sides by every element `0..=i`, so
/// each ordered pair is formed exactly once.
pub fn closure(generators: impl IntoIterator<Item = Element>) -> BTreeSet<Element> {
    let mut seen: HashSet<Element> = HashSet::new();
    let mut order: Vec<Element> = Vec::new();
    for g in generators {
        if seen.insert(g) {
            order.push(g);
        }
    }
    let mut i = 0;
    while i < order.len() {
        let a = order[i];
        for j in 0..=i {
            let b = order[j];
            for p in [multiply(a, b), multiply(b, a)] {
                if seen.insert(p) {
                    order.push(p);
                }
            }
        }
        i += 1;
    }
    order.into_iter().collect()
}

/// `{<1,k,m> : 1 <= k <= m <= n-1}`, the minimal generating set of `SUT_n`.
pub fn generating_set_a(n: i64) -> Result<Vec<Element>, ValidationError> {
    Ambient::finite(n)?;
    let mut out = Vec::new();
    for k in 1..n {
        for m in k..n {
            out.push(Element::NonZero(Triplet::from_raw(1, k, m)));
        }
    }
    Ok(out)
}

/// Writes `x` in `SUT_n` as a power of a generator: zero is `<1,1,1>^2` and
/// `<d,k,m>` is `<1,k,m+d-1>^d`.
pub fn express_as_power(x: Element, n: i64) -> Result<(Triplet, u32), EnumerationError> {
    let ambient = Ambient::finite(n)?;
    let not_in = || EnumerationError::NotInFamily {
        element: x.to_string(),
        family: format!("SUT_{n}"),
    };
    match x {
        Element::Zero => Ok((Triplet::from_raw(1, 1, 1), 2)),
        Element::NonZero(t) => {
            if !t.is_valid_in(ambient) || !Family::StrictlyUpperTriangular.contains(n, t) {
                return Err(not_in());
            }
            let exponent = u32::try_from(t.d()).map_err(|_| not_in())?;
            Ok((Triplet::from_raw(1, t.k(), t.m() + t.d() - 1), exponent))
        }
    }
}

/// True iff no proper subset `A_n \ {g}` generates `SUT_n`.
pub fn verify_minimality(n: i64) -> Result<bool, EnumerationError> {
    let target: BTreeSet<Element> = enumerate(n, Family::StrictlyUpperTriangular)?.into_iter().collect();
    let gens = generating_set_a(n)?;
    Ok((0..gens.len()).all(|skip| {
        let rest = gens.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &g)| g);
        closure(rest) != target
    }))
}

/// All `y` in `M_n` with `y^j = x`, by exhaustive search.
pub fn roots_by_search(n: i64, x: Element, j: u32) -> Result<Vec<Element>, EnumerationError> {
    Ok(enumerate(n, Family::Monoid)?.into_iter().filter(|&y| power(y, j) == x).collect())
}

/// Multiplication table over an ordered list of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    elements: Vec<Element>,
    products: Vec<Vec<Element>>,
}

impl CayleyTable {
    pub fn new(elements: Vec<Element>) -> Self {
        let products = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| multiply(a, b)).collect())
            .collect();
        CayleyTable { elements, products }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn products(&self) -> &[Vec<Element>] {
        &self.products
    }

    pub fn product(&self, row: usize, col: usize) -> Element {
        self.products[row][col]
    }

    /// Every product is itself listed.
    pub fn is_closed(&self) -> bool {
        let members: HashSet<&Element> = self.elements.iter().collect();
        self.products.iter().flatten().all(|p| members.contains(p))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.elements.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.products[i][j] == self.products[j][i]))
    }

    /// The same table with rows and columns in the order of `order`, which
    /// must be a permutation of the elements.
    pub fn reordered(&self, order: &[Element]) -> Option<CayleyTable> {
        let as_set: BTreeSet<&Element> = order.iter().collect();
        let mine: BTreeSet<&Element> = self.elements.iter().collect();
        (order.len() == self.elements.len() && as_set == mine).then(|| CayleyTable::new(order.to_vec()))
    }

    /// CSV with a header row and header column of canonical element strings.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.elements.iter().map(Element::to_string));
        w.write_record(&header).expect("in-memory csv");
        for (a, row) in self.elements.iter().zip(&self.products) {
            let mut rec = vec![a.to_string()];
            rec.extend(row.iter().map(Element::to_string));
            w.write_record(&rec).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv output is utf-8")
    }

    /// Aligned text table labelled with canonical element strings.
    pub fn to_ascii(&self) -> String {
        let labels: HashMap<Element, String> = self.elements.iter().map(|e| (*e, e.to_string())).collect();
        self.render_ascii(&labels)
    }

    /// Aligned text table with custom labels; every listed element needs one.
    pub fn to_ascii_with_labels(&self, labels: &[(Element, &str)]) -> Option<String> {
        let labels: HashMap<Element, String> = labels.iter().map(|&(e, s)| (e, s.to_string())).collect();
        self.elements.iter().all(|e| labels.contains_key(e)).then(|| self.render_ascii(&labels))
    }

    fn render_ascii(&self, labels: &HashMap<Element, String>) -> String {
        let label = |e: &Element| labels.get(e).cloned().unwrap_or_else(|| e.to_string());
        let width = self
            .elements
            .iter()
            .chain(self.products.iter().flatten())
            .map(|e| label(e).chars().count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        out.push_str(&format!("{:>width$} |", ""));
        for e in &self.elements {
            out.push_str(&format!(" {:>width$}", label(e)));
        }
        out.push('\n');
        out.push_str(&"-".repeat(width + 1));
        out.push('+');
        out.push_str(&"-".repeat((width + 1) * self.elements.len()));
        out.push('\n');
        for (a, row) in self.elements.iter().zip(&self.products) {
            out.push_str(&format!("{:>width$} |", label(a)));
            for p in row {
                out.push_str(&format!(" {:>width$}", label(p)));
            }
            out.push('\n');
        }
        out
    }
}

/// Full table over `enumerate(n, family)`.
pub fn cayley_table(n: i64, family: Family) -> Result<CayleyTable, EnumerationError> {
    Ok(CayleyTable::new(enumerate(n, family)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(d: i64, k: i64, m: i64) -> Element {
        Element::new(d, k, m, Ambient::Unbounded).unwrap()
    }

    #[test]
    fn s2_elements() {
        let s2 = enumerate(2, Family::Semigroup).unwrap();
        assert_eq!(s2, vec![Element::Zero, el(-1, 2, 2), el(0, 1, 1), el(0, 2, 2), el(1, 1, 1)]);
        assert_eq!(enumerate(2, Family::Monoid).unwrap().len(), 6);
    }

    #[test]
    fn spot_orders() {
        assert_eq!(enumerate(3, Family::StrictlyUpperTriangular).unwrap().len(), 5);
        assert_eq!(enumerate(4, Family::UpperFull).unwrap().len(), 5);
        assert_eq!(order_formula(3, Family::Semigroup).unwrap(), 14);
        assert_eq!(order_formula(2, Family::Monoid).unwrap(), 6);
        assert_eq!(order_formula(3, Family::Diagonal).unwrap(), 7);
    }

    #[test]
    fn extra_families_have_no_formula() {
        assert!(matches!(
            order_formula(5, Family::DiagonalAtLeast(2)),
            Err(EnumerationError::NoFormula(_))
        ));
        assert!(matches!(order_formula(5, Family::AtMostOnes(2)), Err(EnumerationError::NoFormula(_))));
    }

    #[test]
    fn parameter_ranges() {
        assert!(enumerate(4, Family::DiagonalMultipleOf(0)).is_err());
        assert!(enumerate(4, Family::DiagonalMultipleOf(4)).is_err());
        assert!(enumerate(4, Family::DiagonalAtLeast(3)).is_ok());
        assert!(enumerate(4, Family::AtMostOnes(1)).is_err());
        assert!(enumerate(4, Family::AtMostOnes(5)).is_err());
        assert!(enumerate(1, Family::Monoid).is_err());
    }

    #[test]
    fn at_most_n_ones_is_everything() {
        assert_eq!(enumerate(5, Family::AtMostOnes(5)).unwrap(), enumerate(5, Family::Monoid).unwrap());
    }

    #[test]
    fn class_counts() {
        assert_eq!((count_idempotents(2), count_nilpotents(2)), (3, 3));
        assert_eq!(count_idempotents(3), 6);
        assert_eq!(tally_classes(3).unwrap(), (6, 9));
        assert_eq!(count_nilpotents(3), 9);
    }

    #[test]
    fn generating_sets() {
        assert_eq!(generating_set_a(3).unwrap(), vec![el(1, 1, 1), el(1, 1, 2), el(1, 2, 2)]);
        assert_eq!(generating_set_a(2).unwrap(), vec![el(1, 1, 1)]);
        assert_eq!(generating_set_a(4).unwrap().len(), 6);
    }

    #[test]
    fn shift_closures() {
        for n in 2..=7 {
            let upper = closure([el(1, 1, n - 1)]);
            let suf: BTreeSet<_> = enumerate(n, Family::StrictlyUpperFull).unwrap().into_iter().collect();
            assert_eq!(upper, suf);
            let lower = closure([el(-1, 2, n)]);
            let slf: BTreeSet<_> = enumerate(n, Family::StrictlyLowerFull).unwrap().into_iter().collect();
            assert_eq!(lower, slf);
        }
        assert!(closure([]).is_empty());
    }

    #[test]
    fn powers_in_sut() {
        assert_eq!(express_as_power(el(3, 2, 3), 6).unwrap(), (Triplet::new(1, 2, 5, Ambient::Unbounded).unwrap(), 3));
        assert_eq!(express_as_power(Element::Zero, 4).unwrap(), (Triplet::new(1, 1, 1, Ambient::Unbounded).unwrap(), 2));
        assert_eq!(express_as_power(el(1, 2, 2), 3).unwrap().1, 1);
        assert!(matches!(express_as_power(el(0, 1, 1), 3), Err(EnumerationError::NotInFamily { .. })));
        assert!(matches!(express_as_power(el(1, 1, 5), 3), Err(EnumerationError::NotInFamily { .. })));
    }

    #[test]
    fn minimality_small() {
        assert!(verify_minimality(2).unwrap());
        assert!(verify_minimality(3).unwrap());
        assert!(verify_minimality(5).unwrap());
    }

    #[test]
    fn zero_has_three_square_roots_in_m2() {
        let roots = roots_by_search(2, Element::Zero, 2).unwrap();
        assert_eq!(roots, vec![Element::Zero, el(-1, 2, 2), el(1, 1, 1)]);
    }

    #[test]
    fn diagonal_table_is_a_semilattice() {
        let t = cayley_table(2, Family::Diagonal).unwrap();
        let (e, one, f) = (el(0, 1, 1), el(0, 1, 2), el(0, 2, 2));
        assert_eq!(t.elements(), &[Element::Zero, e, one, f]);
        assert!(t.is_commutative() && t.is_closed());
        // without the identity: {0, e, f} with e f = 0
        let sub = CayleyTable::new(vec![Element::Zero, e, f]);
        assert!(sub.is_closed());
        assert_eq!(sub.products()[1], vec![Element::Zero, e, Element::Zero]);
        assert_eq!(sub.products()[2], vec![Element::Zero, Element::Zero, f]);
        for &x in t.elements() {
            assert_eq!(multiply(x, x), x);
        }
    }

    #[test]
    fn single_entry_table_follows_brandt_rule() {
        let n = 4;
        let t = cayley_table(n, Family::SingleEntry).unwrap();
        // (k,p) = <p-k,k,k>
        let pos = |e: Element| e.triplet().map(|t| (t.k(), t.k() + t.d()));
        for (i, &a) in t.elements().iter().enumerate() {
            for (j, &b) in t.elements().iter().enumerate() {
                let expected = match (pos(a), pos(b)) {
                    (Some((k, p)), Some((kp, pp))) if kp == p => Some((k, pp)),
                    _ => None,
                };
                assert_eq!(pos(t.product(i, j)), expected);
            }
        }
        assert_eq!(t.elements().len() as i64, order_formula(n, Family::SingleEntry).unwrap());
    }

    #[test]
    fn family_tags_round_trip() {
        for f in Family::all(5) {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert_eq!("sut".parse::<Family>().unwrap(), Family::StrictlyUpperTriangular);
        assert!("XYZ".parse::<Family>().is_err());
        assert!("AtLeast(x)".parse::<Family>().is_err());
    }

    #[test]
    fn csv_quotes_triplets() {
        let csv = CayleyTable::new(vec![Element::Zero, el(0, 1, 1), el(0, 2, 2)]).to_csv();
        assert_eq!(
            csv,
            ",0,\"<0,1,1>\",\"<0,2,2>\"\n0,0,0,0\n\"<0,1,1>\",0,\"<0,1,1>\",0\n\"<0,2,2>\",0,0,\"<0,2,2>\"\n"
        );
    }
}
