//! Elements `0` and `<d,k,m>` together with the ambient they are validated in.
//!
//! A nonzero element is a 0/1 matrix whose ones sit on the single diagonal
//! `d` (0 is the main diagonal, positive is above it) and occupy rows `k`
//! through `m` without gaps. The same triplet is valid in many finite
//! monoids `M_n` and in the unbounded semigroup, so the ambient is never
//! stored inside the value.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{ParseElementError, ValidationError};

/// Matrix dimension of a finite monoid `M_n`; always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dimension(i64);

impl Dimension {
    pub fn new(n: i64) -> Result<Self, ValidationError> {
        if n < 2 {
            return Err(ValidationError::DimensionTooSmall { n });
        }
        Ok(Dimension(n))
    }

    #[inline]
    pub fn get(self) -> i64 {
        self.0
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Where an element is validated: the unbounded semigroup of infinite
/// matrices, or the monoid `M_n` of `n x n` matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    Unbounded,
    Finite(Dimension),
}

impl Ambient {
    pub fn finite(n: i64) -> Result<Self, ValidationError> {
        Dimension::new(n).map(Ambient::Finite)
    }

    pub fn dimension(self) -> Option<i64> {
        match self {
            Ambient::Unbounded => None,
            Ambient::Finite(n) => Some(n.get()),
        }
    }

    /// The monoid identity `<0,1,n>`; the unbounded semigroup has none.
    pub fn identity(self) -> Option<Triplet> {
        self.dimension().map(|n| Triplet::from_raw(0, 1, n))
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Unbounded => f.write_str("S_inf"),
            Ambient::Finite(n) => write!(f, "M_{n}"),
        }
    }
}

/// Nonzero element `<d,k,m>`.
///
/// Field order is `(d, k, m)` so the derived `Ord` is the canonical
/// lexicographic order used by every enumeration and table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triplet {
    d: i64,
    k: i64,
    m: i64,
}

impl Triplet {
    /// Validates `<d,k,m>` against `ambient`. Never clamps.
    pub fn new(d: i64, k: i64, m: i64, ambient: Ambient) -> Result<Self, ValidationError> {
        let min_k = 1 - d.min(0);
        if k < min_k {
            return Err(ValidationError::RowBelowMinimum { d, k, min: min_k });
        }
        if k > m {
            return Err(ValidationError::EmptyBlock { k, m });
        }
        if let Ambient::Finite(n) = ambient {
            let n = n.get();
            let max_m = n - d.max(0);
            if m > max_m {
                return Err(ValidationError::RowAboveMaximum { d, m, max: max_m, n });
            }
        }
        Ok(Triplet { d, k, m })
    }

    /// Caller guarantees the triplet invariants.
    #[inline]
    pub(crate) const fn from_raw(d: i64, k: i64, m: i64) -> Self {
        Triplet { d, k, m }
    }

    #[inline]
    pub fn d(self) -> i64 {
        self.d
    }

    #[inline]
    pub fn k(self) -> i64 {
        self.k
    }

    #[inline]
    pub fn m(self) -> i64 {
        self.m
    }

    /// Number of ones in the matrix, `m - k + 1`.
    #[inline]
    pub fn ones(self) -> i64 {
        self.m - self.k + 1
    }

    pub fn is_valid_in(self, ambient: Ambient) -> bool {
        Triplet::new(self.d, self.k, self.m, ambient).is_ok()
    }
}

impl fmt::Display for Triplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{},{}>", self.d, self.k, self.m)
    }
}

/// The universal value: the absorbing zero or a nonzero triplet.
///
/// `Zero` sorts before every triplet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Zero,
    NonZero(Triplet),
}

impl Element {
    pub fn new(d: i64, k: i64, m: i64, ambient: Ambient) -> Result<Self, ValidationError> {
        Triplet::new(d, k, m, ambient).map(Element::NonZero)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        matches!(self, Element::Zero)
    }

    #[inline]
    pub fn triplet(self) -> Option<Triplet> {
        match self {
            Element::Zero => None,
            Element::NonZero(t) => Some(t),
        }
    }

    pub fn is_valid_in(self, ambient: Ambient) -> bool {
        match self {
            Element::Zero => true,
            Element::NonZero(t) => t.is_valid_in(ambient),
        }
    }

    /// Parses either the text form (`0`, `<d,k,m>`) or the JSON form
    /// (`"zero"`, `{"d":..,"k":..,"m":..}`), validating in `ambient`.
    pub fn parse_in(s: &str, ambient: Ambient) -> Result<Self, crate::Error> {
        let trimmed = s.trim();
        let elem = if trimmed.starts_with('{') || trimmed.starts_with('"') {
            let raw: Element = serde_json::from_str(trimmed)
                .map_err(|e| ParseElementError::new(0, format!("invalid JSON element: {e}")))?;
            raw
        } else {
            trimmed.parse::<RawElement>()?.validate(Ambient::Unbounded)?
        };
        if let Element::NonZero(t) = elem {
            Triplet::new(t.d, t.k, t.m, ambient)?;
        }
        Ok(elem)
    }

    /// JSON form: `"zero"` or `{"d":1,"k":1,"m":3}`.
    pub fn to_json(self) -> String {
        serde_json::to_string(&self).expect("element serialization is infallible")
    }
}

impl From<Triplet> for Element {
    fn from(t: Triplet) -> Self {
        Element::NonZero(t)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Zero => f.write_str("0"),
            Element::NonZero(t) => t.fmt(f),
        }
    }
}

/// Text form parsed without validation; the shape is checked, the
/// inequalities are not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RawElement {
    Zero,
    Triplet(i64, i64, i64),
}

impl RawElement {
    pub fn validate(self, ambient: Ambient) -> Result<Element, ValidationError> {
        match self {
            RawElement::Zero => Ok(Element::Zero),
            RawElement::Triplet(d, k, m) => Element::new(d, k, m, ambient),
        }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<(), ParseElementError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(ParseElementError::new(self.pos, format!("expected '{want}', found '{c}'"))),
            None => Err(ParseElementError::new(self.pos, format!("expected '{want}', found end of input"))),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseElementError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(ParseElementError::new(start, "expected an integer".to_string()));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|e| ParseElementError::new(start, format!("integer out of range: {e}")))
    }
}

impl FromStr for RawElement {
    type Err = ParseElementError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor { src: s, pos: 0 };
        cur.skip_ws();
        let out = match cur.peek() {
            Some('0') => {
                cur.pos += 1;
                RawElement::Zero
            }
            Some('<') => {
                cur.pos += 1;
                let d = cur.integer()?;
                cur.expect(',')?;
                let k = cur.integer()?;
                cur.expect(',')?;
                let m = cur.integer()?;
                cur.expect('>')?;
                RawElement::Triplet(d, k, m)
            }
            Some(c) => {
                return Err(ParseElementError::new(cur.pos, format!("expected '0' or '<', found '{c}'")))
            }
            None => return Err(ParseElementError::new(0, "empty element".to_string())),
        };
        cur.skip_ws();
        if let Some(c) = cur.peek() {
            return Err(ParseElementError::new(cur.pos, format!("unexpected trailing '{c}'")));
        }
        Ok(out)
    }
}

/// Parses the text form and validates it in the unbounded semigroup.
impl FromStr for Element {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(s.parse::<RawElement>()?.validate(Ambient::Unbounded)?)
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Element::Zero => serializer.serialize_str("zero"),
            Element::NonZero(t) => {
                let mut map = serializer.serialize_map(Some(3))?;
                map.serialize_entry("d", &t.d)?;
                map.serialize_entry("k", &t.k)?;
                map.serialize_entry("m", &t.m)?;
                map.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Fields {
            d: i64,
            k: i64,
            m: i64,
        }

        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Tag(String),
            Fields(Fields),
        }

        match Repr::deserialize(deserializer)? {
            Repr::Tag(s) if s == "zero" => Ok(Element::Zero),
            Repr::Tag(s) => Err(de::Error::custom(format!("unknown element tag {s:?}, expected \"zero\""))),
            Repr::Fields(f) => Element::new(f.d, f.k, f.m, Ambient::Unbounded).map_err(de::Error::custom),
        }
    }
}
