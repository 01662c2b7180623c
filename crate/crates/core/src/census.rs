//! Census of nonzero products over `M_n \ {0}`.
//!
//! `psi(n)` is counted two independent ways: literal enumeration of ordered
//! pairs with the O(1) nonzero-product test, and a per-`x` count in which
//! the inner sum over `(k', m')` collapses to an arithmetic series for each
//! `d'`. Both are compared against the conjectured closed form
//! `((n+1)^7 - n^7 - (n+1)^3 + n^3) / 120`, which is verified here, not
//! proven.

use std::fmt::Write as _;

use num_integer::Integer;
use num_rational::Ratio;

use crate::algebra::triplets_nonzero_product;
use crate::element::Triplet;
use crate::enumeration::nonzero_elements;
use crate::error::CensusError;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Largest dimension the census accepts.
pub const MAX_N: i64 = 10_000;

/// Default cap on `n` for the quadratic pair enumeration.
pub const DEFAULT_DIRECT_BUDGET: i64 = 24;

pub type Rational = Ratio<i128>;

fn check_n(n: i64, min: i64) -> Result<(), CensusError> {
    if n < min {
        return Err(CensusError::TooSmall { n, min });
    }
    if n > MAX_N {
        return Err(CensusError::TooLarge { n, max: MAX_N });
    }
    Ok(())
}

/// `|S_n|`, the square pyramidal number.
pub fn semigroup_order(n: i64) -> i128 {
    let n = i128::from(n);
    n * (n + 1) * (2 * n + 1) / 6
}

fn sum_over<F>(items: &[Triplet], f: F) -> i128
where
    F: Fn(&Triplet) -> i128 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).sum()
    }
}

/// Ordered pairs `(x, y)` of nonzero elements of `M_n` with `xy != 0`, by
/// literal enumeration. Refuses `n > cap`.
pub fn psi_direct(n: i64, cap: i64) -> Result<i128, CensusError> {
    check_n(n, 1)?;
    if n > cap {
        return Err(CensusError::BudgetExceeded { n, cap });
    }
    let elems: Vec<Triplet> = nonzero_elements(n).collect();
    Ok(sum_over(&elems, |&x| {
        elems.iter().filter(|&&y| triplets_nonzero_product(x, y)).count() as i128
    }))
}

/// Number of nonzero `y` in `M_n` with `xy != 0`.
///
/// For a fixed `d'` the admissible `y` satisfy
/// `lo <= k' <= min(hi, m + d)` and `max(k', k + d) <= m' <= hi`; the
/// count over `k'` splits at `k' = k + d` into a constant run and an
/// arithmetic series.
pub fn right_compatible_count(x: Triplet, n: i64) -> i64 {
    let (d, k, m) = (x.d(), x.k(), x.m());
    let upper = m + d;
    let lower = k + d;
    let mut total = 0;
    for dp in -(n - 1)..=n - 1 {
        let lo = 1 - dp.min(0);
        let hi = n - dp.max(0);
        let top = hi.min(upper);
        if top < lo {
            continue;
        }
        // k' <= lower: m' ranges over [lower, hi]
        let flat_end = top.min(lower);
        if flat_end >= lo && hi >= lower {
            total += (flat_end - lo + 1) * (hi - lower + 1);
        }
        // k' > lower: m' ranges over [k', hi]
        let start = lo.max(lower + 1);
        if start <= top {
            let count = top - start + 1;
            total += count * (hi + 1) - (start + top) * count / 2;
        }
    }
    total
}

/// `psi(n)` as the sum of [`right_compatible_count`] over all nonzero `x`.
pub fn psi_reduced(n: i64) -> Result<i128, CensusError> {
    check_n(n, 1)?;
    let elems: Vec<Triplet> = nonzero_elements(n).collect();
    Ok(sum_over(&elems, |&x| i128::from(right_compatible_count(x, n))))
}

/// The conjectured closed form `((n+1)^7 - n^7 - (n+1)^3 + n^3) / 120`.
pub fn psi_conjecture(n: i64) -> Result<i128, CensusError> {
    check_n(n, 1)?;
    let numerator = polynexus_numerator(n);
    let (q, r) = numerator.div_rem(&120);
    assert_eq!(r, 0, "numerator for n = {n} is not divisible by 120");
    Ok(q)
}

/// `(n+1)^7 - n^7 - (n+1)^3 + n^3`.
pub fn polynexus_numerator(n: i64) -> i128 {
    let a = i128::from(n) + 1;
    let b = i128::from(n);
    a.pow(7) - b.pow(7) - a.pow(3) + b.pow(3)
}

/// Fraction of nonzero products among ordered pairs from `S_n \ {0}`,
/// given `psi(n)`.
pub fn ratio_from_psi(n: i64, psi: i128) -> Rational {
    let s = semigroup_order(n);
    Ratio::new(psi - 2 * s + 1, (s - 1) * (s - 1))
}

/// `r(n)` from the reduced count.
pub fn ratio(n: i64) -> Result<Rational, CensusError> {
    check_n(n, 2)?;
    Ok(ratio_from_psi(n, psi_reduced(n)?))
}

/// `3(7n^5+28n^4+63n^3+18n^2-84n-120) / (10(n-1)(2n^2+5n+6)^2)`; equals
/// `r(n)` wherever the conjectured `psi` is correct.
pub fn ratio_closed_form(n: i64) -> Result<Rational, CensusError> {
    check_n(n, 2)?;
    let n = i128::from(n);
    let numerator = 3 * (7 * n.pow(5) + 28 * n.pow(4) + 63 * n.pow(3) + 18 * n.pow(2) - 84 * n - 120);
    let q = 2 * n * n + 5 * n + 6;
    Ok(Ratio::new(numerator, 10 * (n - 1) * q * q))
}

/// Decimal rendering rounded half away from zero.
pub fn to_decimal(r: &Rational, places: u32) -> String {
    let scale = 10i128.pow(places);
    let num = *r.numer() * scale;
    let den = *r.denom();
    let (q, rem) = num.abs().div_rem(&den.abs());
    let rounded = if rem * 2 >= den.abs() { q + 1 } else { q };
    let negative = (num < 0) != (den < 0) && rounded != 0;
    let int_part = rounded / scale;
    let frac_part = rounded % scale;
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0width$}", width = places as usize)
    }
}

pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: i64,
    /// Only computed when `n` is within the direct budget.
    pub psi_direct: Option<i128>,
    pub psi_reduced: i128,
    pub psi_conjecture: i128,
    pub ratio: Rational,
    /// Conditional on the conjecture.
    pub ratio_closed_form: Rational,
    /// Every computed count equals the conjectured value.
    pub conjecture_ok: bool,
}

impl CensusRow {
    pub fn compute(n: i64, direct_budget: i64) -> Result<Self, CensusError> {
        check_n(n, 2)?;
        let psi_direct = if n <= direct_budget { Some(psi_direct(n, direct_budget)?) } else { None };
        let psi_reduced = psi_reduced(n)?;
        let psi_conjecture = psi_conjecture(n)?;
        let conjecture_ok = psi_reduced == psi_conjecture && psi_direct.is_none_or(|p| p == psi_conjecture);
        Ok(CensusRow {
            n,
            psi_direct,
            psi_reduced,
            psi_conjecture,
            ratio: ratio_from_psi(n, psi_reduced),
            ratio_closed_form: ratio_closed_form(n)?,
            conjecture_ok,
        })
    }

    /// `psi_direct` agrees with `psi_reduced` wherever it was computed.
    pub fn methods_agree(&self) -> bool {
        self.psi_direct.is_none_or(|p| p == self.psi_reduced)
    }
}

/// One row per `n` in `n_min..=n_max`.
pub fn census_sweep(n_min: i64, n_max: i64, direct_budget: i64) -> Result<Vec<CensusRow>, CensusError> {
    if n_min > n_max {
        return Err(CensusError::EmptyRange { n_min, n_max });
    }
    check_n(n_min, 2)?;
    check_n(n_max, 2)?;
    (n_min..=n_max).map(|n| CensusRow::compute(n, direct_budget)).collect()
}

pub const CSV_HEADER: [&str; 6] = ["n", "psi_reduced", "psi_conjecture", "conjecture_ok", "ratio", "ratio_closed_form"];

/// CSV with columns `n, psi_reduced, psi_conjecture, conjecture_ok, ratio,
/// ratio_closed_form`; ratios as exact fractions.
pub fn to_csv(rows: &[CensusRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory csv");
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.psi_reduced.to_string(),
            r.psi_conjecture.to_string(),
            r.conjecture_ok.to_string(),
            rational_string(&r.ratio),
            rational_string(&r.ratio_closed_form),
        ])
        .expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv output is utf-8")
}

/// Two whitespace-separated columns `n r(n)` for plotting.
pub fn to_gnuplot(rows: &[CensusRow]) -> String {
    let mut out = String::from("# n r(n)\n");
    for r in rows {
        writeln!(out, "{} {}", r.n, to_decimal(&r.ratio, 8)).expect("writing to a String");
    }
    out
}

/// Aligned human-readable table.
pub fn to_table(rows: &[CensusRow]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>5} {:>14} {:>14} {:>14} {:>4} {:>8} {:>8}",
        "n", "psi_direct", "psi_reduced", "psi_conjecture", "ok", "r(n)", "r_cond"
    )
    .expect("writing to a String");
    for r in rows {
        let direct = r.psi_direct.map_or_else(|| "-".to_string(), |p| p.to_string());
        writeln!(
            out,
            "{:>5} {:>14} {:>14} {:>14} {:>4} {:>8} {:>8}",
            r.n,
            direct,
            r.psi_reduced,
            r.psi_conjecture,
            if r.conjecture_ok { "yes" } else { "NO" },
            to_decimal(&r.ratio, 4),
            to_decimal(&r.ratio_closed_form, 4),
        )
        .expect("writing to a String");
    }
    out.push_str("r_cond: closed form conditional on the conjectured psi(n)\n");
    out
}
