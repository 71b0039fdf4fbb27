//! LaTeX rendering of exact results in the usual notation: `h'(0)`, `π`, `Ω`,
//! `⟨v,dx_n⟩`, with frame sums collapsed to `|v|²`, `⟨v,v^*⟩` and `div v`.

use num_traits::{One, Signed, Zero};
use wres_core::algebra::GaussianRational;
use wres_core::{Generator, Monomial, Poly};

fn rational(r: &num_rational::BigRational) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let a = r.abs();
    if a.denom().is_one() {
        format!("{sign}{}", a.numer())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

/// Coefficient prefix; `bare` is set when no factor follows.
fn coefficient(c: &GaussianRational, bare: bool) -> String {
    let one = num_rational::BigRational::one();
    if c.im.is_zero() {
        return match () {
            _ if bare => rational(&c.re),
            _ if c.re == one => String::new(),
            _ if c.re == -one => "-".into(),
            _ => rational(&c.re),
        };
    }
    let imag = |r: &num_rational::BigRational| {
        if *r == one {
            "i".to_string()
        } else if *r == -one.clone() {
            "-i".to_string()
        } else {
            format!("{}i", rational(r))
        }
    };
    if c.re.is_zero() {
        return imag(&c.im);
    }
    let im = imag(&c.im);
    let joined = if im.starts_with('-') { format!("{}{im}", rational(&c.re)) } else { format!("{}+{im}", rational(&c.re)) };
    format!("\\left({joined}\\right)")
}

fn generator(g: Generator, dim: usize) -> String {
    let normal = |k: u8| k as usize == dim;
    match g {
        Generator::H => "h'(0)".into(),
        Generator::S => "s".into(),
        Generator::Pi => "\\pi".into(),
        Generator::Omega => "\\Omega".into(),
        Generator::V(k) if normal(k) => "\\langle v,dx_n\\rangle".into(),
        Generator::V(k) => format!("\\langle v,e_{{{k}}}\\rangle"),
        Generator::VS(k) if normal(k) => "\\langle v^*,\\partial_{x_n}\\rangle".into(),
        Generator::VS(k) => format!("\\langle v^*,e_{{{k}}}\\rangle"),
        Generator::W(j, k) => format!("\\langle\\nabla_{{e_{{{j}}}}}v,e_{{{k}}}\\rangle"),
        Generator::WS(j, k) => format!("\\langle\\nabla_{{e_{{{j}}}}}v^*,e_{{{k}}}\\rangle"),
        Generator::Xi(i) => format!("\\xi_{{{i}}}"),
        Generator::R(i, j, k, l) => format!("R_{{{i}{j}{k}{l}}}"),
    }
}

fn power(base: String, e: u16) -> String {
    if e == 1 {
        base
    } else {
        format!("{base}^{{{e}}}")
    }
}

/// Concatenates factors, separating a trailing control word from a following letter.
fn join(parts: &[String]) -> String {
    let mut out = String::new();
    for p in parts {
        let ends_in_word = {
            let tail: String = out.chars().rev().take_while(|c| c.is_ascii_alphabetic()).collect();
            !tail.is_empty() && out[..out.len() - tail.len()].ends_with('\\')
        };
        if ends_in_word && p.starts_with(|c: char| c.is_ascii_alphabetic()) {
            out.push(' ');
        }
        out.push_str(p);
    }
    out
}

struct Item {
    coeff: GaussianRational,
    rest: Monomial,
    extra: Vec<String>,
    /// Display order: curvature terms, then collapsed sums, then the rest.
    rank: usize,
}

/// Frame sums whose terms share coefficient and cofactor.
const SUMS: [(&str, fn(u8) -> Vec<(Generator, u16)>); 5] = [
    ("|v|^{2}", |i| vec![(Generator::V(i), 2)]),
    ("|v^*|^{2}", |i| vec![(Generator::VS(i), 2)]),
    ("\\langle v,v^*\\rangle", |i| vec![(Generator::V(i), 1), (Generator::VS(i), 1)]),
    ("\\operatorname{div}v", |i| vec![(Generator::W(i, i), 1)]),
    ("\\operatorname{div}v^*", |i| vec![(Generator::WS(i, i), 1)]),
];

fn strip(m: &Monomial, pattern: &[(Generator, u16)]) -> Option<Monomial> {
    let mut rest = m.clone();
    for &(g, e) in pattern {
        if m.degree_in(g) != e {
            return None;
        }
        rest = rest.div_gen(g, e)?;
    }
    Some(rest)
}

fn collapse(p: &Poly, dim: usize) -> Vec<Item> {
    let mut remaining: Vec<(Monomial, GaussianRational)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let mut items = Vec::new();
    for (idx, (name, pattern)) in SUMS.into_iter().enumerate() {
        loop {
            let mut found = None;
            'search: for (m, c) in &remaining {
                let Some(rest) = strip(m, &pattern(1)) else { continue };
                let mut members = Vec::with_capacity(dim);
                for i in 1..=dim as u8 {
                    let want = Monomial::from_factors(pattern(i)).mul(&rest);
                    match remaining.iter().position(|(m2, c2)| *m2 == want && c2 == c) {
                        Some(pos) => members.push(pos),
                        None => continue 'search,
                    }
                }
                found = Some((members, c.clone(), rest));
                break;
            }
            let Some((mut members, coeff, rest)) = found else { break };
            members.sort_unstable();
            for pos in members.into_iter().rev() {
                remaining.remove(pos);
            }
            items.push(Item { coeff, rest, extra: vec![name.to_string()], rank: idx + 1 });
        }
    }
    items.extend(remaining.into_iter().map(|(rest, coeff)| {
        let curvature = rest.degree_in(Generator::S) > 0 || rest.degree_in(Generator::H) > 0;
        Item { coeff, rest, extra: Vec::new(), rank: if curvature { 0 } else { SUMS.len() + 1 } }
    }));
    items.sort_by(|a, b| a.rank.cmp(&b.rank).then(a.rest.cmp(&b.rest)).then(a.extra.cmp(&b.extra)));
    items
}

fn render_item(item: &Item, dim: usize) -> String {
    let mut parts = Vec::new();
    let pi = item.rest.degree_in(Generator::Pi);
    if pi > 0 {
        parts.push(power(generator(Generator::Pi, dim), pi));
    }
    for &(g, e) in item.rest.factors() {
        if g != Generator::Pi && g != Generator::Omega {
            parts.push(power(generator(g, dim), e));
        }
    }
    parts.extend(item.extra.iter().cloned());
    let om = item.rest.degree_in(Generator::Omega);
    if om > 0 {
        parts.push(power(generator(Generator::Omega, dim), om));
    }
    let c = coefficient(&item.coeff, parts.is_empty());
    join(&[vec![c], parts].concat())
}

fn sum(p: &Poly, dim: usize) -> String {
    let mut out = String::new();
    for item in collapse(p, dim) {
        let s = render_item(&item, dim);
        if !out.is_empty() && !s.starts_with('-') {
            out.push('+');
        }
        out.push_str(&s);
    }
    out
}

/// Renders `p`, pulling a common `Ω` out as `\left[…\right]\Omega`.
pub fn poly(p: &Poly, dim: usize) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let all_omega = p.terms().all(|(m, _)| m.degree_in(Generator::Omega) == 1);
    if all_omega {
        let inner = Poly::from_terms(p.terms().map(|(m, c)| (m.div_gen(Generator::Omega, 1).expect("degree 1"), c.clone())));
        return format!("\\left[{}\\right]\\Omega", sum(&inner, dim));
    }
    sum(p, dim)
}

/// `prefactor\left(trace\right)` for interior densities.
pub fn product(prefactor: &Poly, factor: &Poly, dim: usize) -> String {
    if factor.is_zero() {
        return "0".into();
    }
    format!("{}\\left({}\\right)", sum(prefactor, dim), sum(factor, dim))
}
