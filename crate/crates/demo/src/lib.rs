//! Browser bindings for the static demo page in `www/`.
//!
//! Each exported function takes plain strings and numbers and returns a
//! JSON or SVG string; errors come back as a thrown JS string.

use std::fmt::Write as _;

use rookmon::census;
use rookmon::diagram;
use rookmon::{classify, multiply, power, transpose, Ambient, Classification, Element};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest dimension the page accepts; diagrams get unreadable beyond it.
pub const MAX_DIAGRAM_N: i64 = 24;
/// Largest `n` on the ratio curve.
pub const MAX_CURVE_N: i64 = 120;

fn ambient(n: i64) -> Result<Ambient, String> {
    if n > MAX_DIAGRAM_N {
        return Err(format!("n must be at most {MAX_DIAGRAM_N}"));
    }
    Ambient::finite(n).map_err(|e| e.to_string())
}

fn parse(s: &str, amb: Ambient) -> Result<Element, String> {
    Element::parse_in(s, amb).map_err(|e| e.to_string())
}

/// `{"product": "<..>", "svg": "..."}` for the stacked diagram of `x y`.
pub fn product_diagram(n: i64, x: &str, y: &str) -> Result<String, String> {
    let amb = ambient(n)?;
    let (x, y) = (parse(x, amb)?, parse(y, amb)?);
    let value = json!({
        "product": multiply(x, y).to_string(),
        "svg": diagram::render_product(x, y, n),
    });
    Ok(value.to_string())
}

/// Successive powers of `x` until they vanish or repeat, with the
/// classification and the transpose.
pub fn explore_powers(n: i64, x: &str) -> Result<String, String> {
    let amb = ambient(n)?;
    let x = parse(x, amb)?;
    let mut powers = Vec::new();
    for j in 1..=(n as u32 + 1) {
        let p = power(x, j);
        powers.push(json!({ "j": j, "element": p.to_string(), "svg": diagram::render_svg(p, n) }));
        if p.is_zero() || (j > 1 && p == x) {
            break;
        }
    }
    let index = match classify(x, amb) {
        Classification::Nilpotent { index } => Some(index),
        _ => None,
    };
    let value = json!({
        "element": x.to_string(),
        "classification": classify(x, amb).to_string(),
        "index": index,
        "transpose": transpose(x).to_string(),
        "powers": powers,
    });
    Ok(value.to_string())
}

/// SVG line chart of `r(n)` for `2 <= n <= n_max` against its limit 21/40.
pub fn ratio_curve(n_max: i64) -> Result<String, String> {
    if !(3..=MAX_CURVE_N).contains(&n_max) {
        return Err(format!("n_max must lie in 3..={MAX_CURVE_N}"));
    }
    let points: Vec<(i64, f64)> = (2..=n_max)
        .map(|n| {
            let r = census::ratio(n).map_err(|e| e.to_string())?;
            Ok((n, *r.numer() as f64 / *r.denom() as f64))
        })
        .collect::<Result<_, String>>()?;

    let (w, h, pad) = (640.0, 320.0, 40.0);
    let (y_lo, y_hi) = (0.49, 0.55);
    let sx = |n: i64| pad + (n - 2) as f64 * (w - 2.0 * pad) / (n_max - 2) as f64;
    let sy = |r: f64| h - pad - (r - y_lo) * (h - 2.0 * pad) / (y_hi - y_lo);

    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">"#);
    let _ = writeln!(
        s,
        r##"<line x1="{pad}" y1="{y}" x2="{x2}" y2="{y}" stroke="#999" stroke-dasharray="4 4"/>"##,
        y = sy(21.0 / 40.0),
        x2 = w - pad
    );
    let _ = writeln!(s, r##"<text x="{}" y="{}" font-size="11" fill="#666">21/40</text>"##, w - pad + 2.0, sy(0.525) + 4.0);
    let path: Vec<String> = points.iter().map(|&(n, r)| format!("{:.2},{:.2}", sx(n), sy(r))).collect();
    let _ = writeln!(s, r#"<polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#, path.join(" "));
    for &(n, r) in &points {
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="steelblue"><title>n = {n}, r = {r:.6}</title></circle>"#,
            sx(n),
            sy(r)
        );
    }
    let _ = writeln!(s, r#"<line x1="{pad}" y1="{b}" x2="{x2}" y2="{b}" stroke="black"/>"#, b = h - pad, x2 = w - pad);
    let _ = writeln!(s, r#"<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{b}" stroke="black"/>"#, b = h - pad);
    for tick in [0.49, 0.50, 0.51, 0.52, 0.53, 0.54, 0.55] {
        let _ = writeln!(s, r#"<text x="{}" y="{:.2}" font-size="10" text-anchor="end">{tick:.2}</text>"#, pad - 4.0, sy(tick) + 3.0);
    }
    for n in [2, n_max / 2, n_max] {
        let _ = writeln!(s, r#"<text x="{:.2}" y="{}" font-size="10" text-anchor="middle">{n}</text>"#, sx(n), h - pad + 14.0);
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[wasm_bindgen(js_name = productDiagram)]
pub fn product_diagram_js(n: i32, x: &str, y: &str) -> Result<String, JsValue> {
    product_diagram(i64::from(n), x, y).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = explorePowers)]
pub fn explore_powers_js(n: i32, x: &str) -> Result<String, JsValue> {
    explore_powers(i64::from(n), x).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = ratioCurve)]
pub fn ratio_curve_js(n_max: i32) -> Result<String, JsValue> {
    ratio_curve(i64::from(n_max)).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_the_diagram_example() {
        let v: serde_json::Value = serde_json::from_str(&product_diagram(6, "<1,1,3>", "<2,3,4>").unwrap()).unwrap();
        assert_eq!(v["product"], "<3,2,3>");
        assert!(v["svg"].as_str().unwrap().contains("class=\"product\""));
    }

    #[test]
    fn invalid_input_is_an_error() {
        assert!(product_diagram(2, "<1,1,3>", "0").is_err());
        assert!(product_diagram(99, "0", "0").is_err());
        assert!(explore_powers(4, "<1,1").is_err());
    }

    #[test]
    fn powers_stop_at_zero() {
        let v: serde_json::Value = serde_json::from_str(&explore_powers(5, "<2,1,3>").unwrap()).unwrap();
        let elems: Vec<&str> = v["powers"].as_array().unwrap().iter().map(|p| p["element"].as_str().unwrap()).collect();
        assert_eq!(elems, ["<2,1,3>", "<4,1,1>", "0"]);
        assert_eq!(v["index"], 3);
        assert_eq!(v["transpose"], "<-2,3,5>");
    }

    #[test]
    fn idempotent_powers_stop_at_repeat() {
        let v: serde_json::Value = serde_json::from_str(&explore_powers(3, "<0,1,2>").unwrap()).unwrap();
        assert_eq!(v["powers"].as_array().unwrap().len(), 2);
        assert_eq!(v["classification"], "idempotent");
    }

    #[test]
    fn curve_has_one_marker_per_n() {
        let svg = ratio_curve(30).unwrap();
        assert_eq!(svg.matches("<circle").count(), 29);
        assert!(ratio_curve(2).is_err());
    }
}
