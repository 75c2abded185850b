//! Plain-decimal number formatting shared by the library printers and the
//! CLI. Values are rendered with up to 12 significant digits and no exponent
//! notation, so every printed value can be re-read by the expression parser.

use num_complex::Complex64;

/// Formats `x` with at most `sig` significant digits as a plain decimal,
/// trimming trailing zeros ("1", "-0.5", "3.14159265359").
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        // not parseable, but better than panicking on a degenerate value
        return format!("{x}");
    }
    let sig = sig.max(1);
    let exp10 = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - exp10).max(0) as usize;
    let mut s = format!("{:.*}", decimals, x);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Formats a complex value as `a+bi` (or `a-bi`) with 12 significant digits
/// per component, e.g. `1+0i`, `-0.5-2.25i`.
pub fn fmt_complex(z: Complex64) -> String {
    let re = fmt_sig(z.re, 12);
    let im_abs = fmt_sig(z.im.abs(), 12);
    let sign = if z.im.is_sign_negative() && z.im != 0.0 { '-' } else { '+' };
    format!("{re}{sign}{im_abs}i")
}
