//! Exhaustive checks of the algebraic invariants, grouped into named
//! suites. Each suite compares a closed form against enumeration or the
//! dense matrix oracle up to a dimension bound.

use std::collections::BTreeSet;

use crate::algebra::{classify, commutes, multiply, power, root, transpose, Classification};
use crate::census;
use crate::diagram::{layout, trace_product};
use crate::element::{Ambient, Element};
use crate::enumeration::{
    closure, count_idempotents, count_nilpotents, enumerate, express_as_power, generating_set_a, order_formula,
    roots_by_search, tally_classes, verify_minimality, CayleyTable, Family,
};
use crate::matrix::{from_matrix, mat_multiply, mat_nilpotency_index, to_matrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, failures: Vec<String>, checked: usize) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{checked} cases")
        } else {
            let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
            format!("{} of {checked} cases failed; first: {}", failures.len(), shown.join("; "))
        };
        CheckOutcome { name: name.into(), passed, detail }
    }
}

/// Suite names with their default dimension bound.
pub const SUITES: [(&str, i64); 13] = [
    ("orders", 50),
    ("oracle", 6),
    ("associativity", 4),
    ("counts", 30),
    ("index", 8),
    ("roots", 5),
    ("inverse", 5),
    ("commutation", 5),
    ("generators", 8),
    ("families", 20),
    ("census", 70),
    ("diagrams", 4),
    ("matrix", 8),
];

pub fn default_bound(suite: &str) -> Option<i64> {
    SUITES.iter().find(|(s, _)| *s == suite).map(|&(_, n)| n)
}

/// Runs one suite, or every suite for `"all"`. `n_max` overrides the
/// default bound.
pub fn run_suite(suite: &str, n_max: Option<i64>) -> Option<Vec<CheckOutcome>> {
    if suite == "all" {
        return Some(SUITES.iter().flat_map(|(s, _)| run_suite(s, n_max).unwrap_or_default()).collect());
    }
    let n = n_max.or_else(|| default_bound(suite))?.max(2);
    Some(match suite {
        "orders" => vec![orders(n)],
        "oracle" => vec![oracle(n)],
        "associativity" => vec![associativity(n)],
        "counts" => vec![counts(n)],
        "index" => vec![index(n)],
        "roots" => vec![roots(n, 4)],
        "inverse" => vec![inverse(n)],
        "commutation" => vec![commutation(n)],
        "generators" => vec![generators(n)],
        "families" => vec![families(n)],
        "census" => vec![census_check(n)],
        "diagrams" => vec![diagrams(n)],
        "matrix" => vec![matrix_round_trip(n)],
        _ => return None,
    })
}

fn monoid(n: i64) -> Vec<Element> {
    enumerate(n, Family::Monoid).expect("n >= 2")
}

fn fin(n: i64) -> Ambient {
    Ambient::finite(n).expect("n >= 2")
}

pub fn orders(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    for n in 2..=n_max {
        let count = enumerate(n, Family::Monoid).expect("n >= 2").len() as i64;
        let formula = (2 * n * n * n + 3 * n * n + n) / 6 + 1;
        if count != formula {
            failures.push(format!("n={n}: {count} != {formula}"));
        }
    }
    CheckOutcome::new("order of M_n", failures, (n_max - 1) as usize)
}

pub fn oracle(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=n_max {
        let nu = n as usize;
        let elems = monoid(n);
        let mats: Vec<_> = elems.iter().map(|&e| to_matrix(e, nu)).collect();
        for (x, mx) in elems.iter().zip(&mats) {
            for (y, my) in elems.iter().zip(&mats) {
                checked += 1;
                let algebraic = to_matrix(multiply(*x, *y), nu);
                let naive = mat_multiply(mx, my).expect("same dimension");
                if algebraic != naive {
                    failures.push(format!("n={n}: {x} {y}"));
                }
            }
        }
    }
    CheckOutcome::new("triplet product matches matrix product", failures, checked)
}

pub fn associativity(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=n_max {
        let elems = monoid(n);
        for &x in &elems {
            for &y in &elems {
                let xy = multiply(x, y);
                for &z in &elems {
                    checked += 1;
                    if multiply(xy, z) != multiply(x, multiply(y, z)) {
                        failures.push(format!("n={n}: ({x} {y}) {z}"));
                    }
                }
            }
        }
    }
    CheckOutcome::new("associativity", failures, checked)
}

pub fn counts(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    for n in 2..=n_max {
        let tally = tally_classes(n).expect("n >= 2");
        let formula = (count_idempotents(n), count_nilpotents(n));
        if tally != formula {
            failures.push(format!("n={n}: tally {tally:?} != formula {formula:?}"));
        }
    }
    CheckOutcome::new("idempotent and nilpotent counts", failures, (n_max - 1) as usize)
}

pub fn index(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=n_max {
        for x in monoid(n) {
            if let Classification::Nilpotent { index } = classify(x, fin(n)) {
                checked += 1;
                let oracle = mat_nilpotency_index(&to_matrix(x, n as usize)).map(|l| l as i64);
                if oracle != Some(index) || !(2..=n).contains(&index) {
                    failures.push(format!("n={n}: {x} formula {index} oracle {oracle:?}"));
                }
            }
        }
    }
    CheckOutcome::new("nilpotency index", failures, checked)
}

pub fn roots(n_max: i64, j_max: u32) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=n_max {
        let elems = monoid(n);
        for &x in &elems {
            let Element::NonZero(t) = x else { continue };
            for j in 1..=j_max {
                checked += 1;
                let found = roots_by_search(n, x, j).expect("n >= 2");
                let divisible = t.d() % i64::from(j) == 0;
                let computed = root(t, j).map(Element::NonZero);
                let ok = match computed {
                    Some(y) => divisible && found == vec![y] && power(y, j) == x,
                    None => !divisible && found.is_empty(),
                };
                if !ok {
                    failures.push(format!("n={n}: {x}, j={j}: computed {computed:?}, search {found:?}"));
                }
            }
        }
    }
    CheckOutcome::new("roots exist iff j divides d, and are unique", failures, checked)
}

pub fn inverse(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=n_max {
        let elems = monoid(n);
        for &x in &elems {
            let xt = transpose(x);
            if multiply(multiply(x, xt), x) != x || multiply(multiply(xt, x), xt) != xt {
                failures.push(format!("n={n}: {x} is not inverse to {xt}"));
            }
            for &y in &elems {
                checked += 1;
                if transpose(multiply(x, y)) != multiply(transpose(y), xt) {
                    failures.push(format!("n={n}: transpose of {x} {y}"));
                }
            }
        }
    }
    CheckOutcome::new("transpose is the inverse and reverses products", failures, checked)
}

pub fn commutation(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=n_max {
        let elems = monoid(n);
        for &x in &elems {
            for &y in &elems {
                checked += 1;
                if commutes(x, y) != (multiply(x, y) == multiply(y, x)) {
                    failures.push(format!("n={n}: {x} {y}"));
                }
            }
        }
    }
    CheckOutcome::new("commutation criterion", failures, checked)
}

pub fn generators(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=n_max {
        checked += 1;
        let sut: BTreeSet<Element> = enumerate(n, Family::StrictlyUpperTriangular).expect("n >= 2").into_iter().collect();
        let gens = generating_set_a(n).expect("n >= 2");
        if gens.len() as i64 != n * (n - 1) / 2 {
            failures.push(format!("n={n}: |A_n| = {}", gens.len()));
        }
        if closure(gens.iter().copied()) != sut {
            failures.push(format!("n={n}: A_n does not generate SUT_n"));
        }
        if !verify_minimality(n).expect("n >= 2") {
            failures.push(format!("n={n}: A_n is not minimal"));
        }
        for &x in &sut {
            let (g, e) = express_as_power(x, n).expect("member of SUT_n");
            if power(Element::NonZero(g), e) != x {
                failures.push(format!("n={n}: {x} != {g}^{e}"));
            }
        }
        let suf: BTreeSet<Element> = enumerate(n, Family::StrictlyUpperFull).expect("n >= 2").into_iter().collect();
        let shift = Element::new(1, 1, n - 1, fin(n)).expect("shift matrix");
        let generated = closure([shift]);
        if generated != suf || generated.len() as i64 != n {
            failures.push(format!("n={n}: shift closure has {} elements", generated.len()));
        }
    }
    CheckOutcome::new("generating sets of SUT_n and SUF_n", failures, checked)
}

pub fn families(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=n_max {
        for family in Family::all(n) {
            checked += 1;
            let members = enumerate(n, family).expect("valid family");
            if let Ok(formula) = order_formula(n, family) {
                if formula != members.len() as i64 {
                    failures.push(format!("n={n} {family}: order {} != formula {formula}", members.len()));
                }
            }
            // closure and transposes are quadratic in the family size
            if n > 6 {
                continue;
            }
            let table = CayleyTable::new(members.clone());
            if !table.is_closed() {
                failures.push(format!("n={n} {family}: not closed"));
            }
            let commutative = table.is_commutative();
            let expect_commutative = match family {
                Family::UpperFull
                | Family::StrictlyUpperFull
                | Family::LowerFull
                | Family::StrictlyLowerFull
                | Family::Diagonal => Some(true),
                Family::UpperTriangular | Family::StrictlyUpperTriangular if n >= 3 => Some(false),
                Family::LowerTriangular | Family::StrictlyLowerTriangular if n >= 3 => Some(false),
                _ => None,
            };
            if expect_commutative.is_some_and(|c| c != commutative) {
                failures.push(format!("n={n} {family}: commutative = {commutative}"));
            }
            if let Some(t) = family.transpose() {
                let transposed: BTreeSet<Element> = members.iter().map(|&x| transpose(x)).collect();
                let other: BTreeSet<Element> = enumerate(n, t).expect("valid family").into_iter().collect();
                if transposed != other {
                    failures.push(format!("n={n}: transpose of {family} is not {t}"));
                }
            }
        }
        let set = |f| enumerate(n, f).expect("valid family").into_iter().collect::<BTreeSet<Element>>();
        let ut_lt: BTreeSet<_> = set(Family::UpperTriangular).intersection(&set(Family::LowerTriangular)).copied().collect();
        if set(Family::Diagonal) != ut_lt {
            failures.push(format!("n={n}: D_n is not UT_n ∩ LT_n"));
        }
        // the full families only share the zero and the identity
        let uf_lf: BTreeSet<_> = set(Family::UpperFull).intersection(&set(Family::LowerFull)).copied().collect();
        let zero_and_one = BTreeSet::from([Element::Zero, Element::NonZero(fin(n).identity().expect("finite"))]);
        if uf_lf != zero_and_one {
            failures.push(format!("n={n}: UF_n ∩ LF_n is not {{0, 1}}"));
        }
    }
    CheckOutcome::new("subsemigroup families", failures, checked)
}

pub fn census_check(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    let direct_max = n_max.min(12);
    for n in 2..=n_max {
        let reduced = census::psi_reduced(n).expect("n in range");
        let conjectured = census::psi_conjecture(n).expect("n in range");
        if reduced != conjectured {
            failures.push(format!("n={n}: psi {reduced} != conjectured {conjectured}"));
        }
        if n <= direct_max {
            let direct = census::psi_direct(n, direct_max).expect("within budget");
            if direct != reduced {
                failures.push(format!("n={n}: direct {direct} != reduced {reduced}"));
            }
        }
    }
    CheckOutcome::new("product census against the conjectured closed form", failures, (n_max - 1) as usize)
}

pub fn diagrams(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=n_max {
        let elems = monoid(n);
        for &x in &elems {
            let edges = layout(x, n).edges;
            if edges.len() as i64 != crate::algebra::ones_count(x) {
                failures.push(format!("n={n}: {x} edge count"));
            }
            for &y in &elems {
                checked += 1;
                if trace_product(x, y, n) != layout(multiply(x, y), n).edges {
                    failures.push(format!("n={n}: traced {x} {y}"));
                }
            }
        }
    }
    CheckOutcome::new("graphical multiplication", failures, checked)
}

pub fn matrix_round_trip(n_max: i64) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=n_max {
        for x in monoid(n) {
            checked += 1;
            let m = to_matrix(x, n as usize);
            if from_matrix(&m).ok() != Some(x) {
                failures.push(format!("n={n}: {x}"));
            }
            if to_matrix(transpose(x), n as usize) != m.transpose() {
                failures.push(format!("n={n}: transpose of {x}"));
            }
        }
    }
    CheckOutcome::new("matrix round trip", failures, checked)
}
