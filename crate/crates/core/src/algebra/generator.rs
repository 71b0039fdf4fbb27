//! The fixed alphabet of commuting symbols the coefficient ring is built over.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A commuting scalar symbol. Frame indices are 1-based.
///
/// The derived order is the canonical monomial order; it also fixes the order
/// in which terms are printed (mean curvature first, then curvature, then the
/// perturbation vector).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// `h'(0)`, the normal derivative of the collar warping function.
    H,
    /// Scalar curvature `s`.
    S,
    /// `R_{ijkl}`, stored with `i < j`, `k < l`.
    R(u8, u8, u8, u8),
    /// `<v, e_k>`
    V(u8),
    /// `<v*, e_k>`
    VS(u8),
    /// `<∇_{e_j} v, e_k>`
    W(u8, u8),
    /// `<∇_{e_j} v*, e_k>`
    WS(u8, u8),
    /// Tangential covector component `ξ'_i`, `1 <= i <= n-1`.
    Xi(u8),
    Pi,
    /// Volume of the unit co-sphere the tangential integral runs over.
    Omega,
}

impl Generator {
    /// Canonical curvature generator with the sign picked up by reordering
    /// both antisymmetric index pairs. `None` when the entry vanishes.
    pub fn riemann(i: u8, j: u8, k: u8, l: u8) -> Option<(i8, Generator)> {
        if i == j || k == l {
            return None;
        }
        let mut sign = 1i8;
        let (a, b) = if i < j { (i, j) } else { sign = -sign; (j, i) };
        let (c, d) = if k < l { (k, l) } else { sign = -sign; (l, k) };
        Some((sign, Generator::R(a, b, c, d)))
    }

    pub fn is_xi(&self) -> bool {
        matches!(self, Generator::Xi(_))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::H => write!(f, "H"),
            Generator::S => write!(f, "S"),
            Generator::R(i, j, k, l) => write!(f, "R{i}_{j}_{k}_{l}"),
            Generator::V(k) => write!(f, "V{k}"),
            Generator::VS(k) => write!(f, "VS{k}"),
            Generator::W(j, k) => write!(f, "W{j}_{k}"),
            Generator::WS(j, k) => write!(f, "WS{j}_{k}"),
            Generator::Xi(i) => write!(f, "XI{i}"),
            Generator::Pi => write!(f, "PI"),
            Generator::Omega => write!(f, "OMEGA"),
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn indices(s: &str, count: usize) -> Option<Vec<u8>> {
    let parts: Vec<u8> = s.split('_').map(|p| p.parse().ok()).collect::<Option<_>>()?;
    (parts.len() == count).then_some(parts)
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("unknown generator {s:?}"));
        let g = match s {
            "H" => Generator::H,
            "S" => Generator::S,
            "PI" => Generator::Pi,
            "OMEGA" => Generator::Omega,
            _ => {
                // Longest prefixes first so "VS" is not read as "V".
                if let Some(rest) = s.strip_prefix("VS") {
                    Generator::VS(indices(rest, 1).ok_or_else(bad)?[0])
                } else if let Some(rest) = s.strip_prefix("WS") {
                    let ix = indices(rest, 2).ok_or_else(bad)?;
                    Generator::WS(ix[0], ix[1])
                } else if let Some(rest) = s.strip_prefix("XI") {
                    Generator::Xi(indices(rest, 1).ok_or_else(bad)?[0])
                } else if let Some(rest) = s.strip_prefix('V') {
                    Generator::V(indices(rest, 1).ok_or_else(bad)?[0])
                } else if let Some(rest) = s.strip_prefix('W') {
                    let ix = indices(rest, 2).ok_or_else(bad)?;
                    Generator::W(ix[0], ix[1])
                } else if let Some(rest) = s.strip_prefix('R') {
                    let ix = indices(rest, 4).ok_or_else(bad)?;
                    Generator::R(ix[0], ix[1], ix[2], ix[3])
                } else {
                    return Err(bad());
                }
            }
        };
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn riemann_canonical_sign() {
        assert_eq!(Generator::riemann(1, 2, 3, 4), Some((1, Generator::R(1, 2, 3, 4))));
        assert_eq!(Generator::riemann(2, 1, 3, 4), Some((-1, Generator::R(1, 2, 3, 4))));
        assert_eq!(Generator::riemann(2, 1, 4, 3), Some((1, Generator::R(1, 2, 3, 4))));
        assert_eq!(Generator::riemann(1, 1, 3, 4), None);
    }

    #[test]
    fn names_parse_back() {
        for g in [
            Generator::H,
            Generator::S,
            Generator::R(1, 2, 3, 4),
            Generator::V(4),
            Generator::VS(6),
            Generator::W(1, 2),
            Generator::WS(3, 3),
            Generator::Xi(2),
            Generator::Pi,
            Generator::Omega,
        ] {
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
        assert!("Q1".parse::<Generator>().is_err());
    }
}
