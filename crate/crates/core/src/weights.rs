//! Weight triples `(ρ, τ, σ)` and their canonical families.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeightTriple {
    pub rho: Rational,
    pub tau: Rational,
    pub sigma: Rational,
}

impl WeightTriple {
    pub fn new(rho: Rational, tau: Rational, sigma: Rational) -> Self {
        WeightTriple { rho, tau, sigma }
    }

    pub fn from_i64(rho: i64, tau: i64, sigma: i64) -> Self {
        Self::new(rho.into(), tau.into(), sigma.into())
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self::new(&self.rho * c, &self.tau * c, &self.sigma * c)
    }

    /// `(ρ², τ², σ²)`, the weight of a commutator of two derivations.
    pub fn squared(&self) -> Self {
        Self::new(&self.rho * &self.rho, &self.tau * &self.tau, &self.sigma * &self.sigma)
    }

    pub fn is_zero(&self) -> bool {
        self.rho.is_zero() && self.tau.is_zero() && self.sigma.is_zero()
    }
}

impl fmt::Display for WeightTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.rho, self.tau, self.sigma)
    }
}

impl fmt::Debug for WeightTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The canonical families every triple reduces to, plus `EndS` for `(0,0,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    D111,
    D110,
    D101,
    D100,
    D011,
    D001,
    D010,
    D01Delta,
    EndS,
}

impl Family {
    /// The eight families with a defining equation, in table order.
    pub const TABLE_ORDER: [Family; 8] = [
        Family::D111,
        Family::D110,
        Family::D101,
        Family::D100,
        Family::D011,
        Family::D001,
        Family::D010,
        Family::D01Delta,
    ];

    /// Compact tag used on the command line and in CSV output.
    pub fn tag(self) -> &'static str {
        match self {
            Family::D111 => "111",
            Family::D110 => "110",
            Family::D101 => "101",
            Family::D100 => "100",
            Family::D011 => "011",
            Family::D001 => "001",
            Family::D010 => "010",
            Family::D01Delta => "01d",
            Family::EndS => "000",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::D111 => "D111",
            Family::D110 => "D110",
            Family::D101 => "D101",
            Family::D100 => "D100",
            Family::D011 => "D011",
            Family::D001 => "D001",
            Family::D010 => "D010",
            Family::D01Delta => "D01δ",
            Family::EndS => "EndS",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('D').unwrap_or(t);
        Ok(match t {
            "111" => Family::D111,
            "110" => Family::D110,
            "101" => Family::D101,
            "100" => Family::D100,
            "011" => Family::D011,
            "001" => Family::D001,
            "010" => Family::D010,
            "01d" | "01δ" | "01delta" => Family::D01Delta,
            "000" | "EndS" => Family::EndS,
            _ => return Err(Error::parse("family", format!("unknown family tag {s:?}"))),
        })
    }
}

/// How the `ρ = 0` families map to the derivation predicate.
///
/// `Displayed` solves the family's displayed equation
/// (`d(p)∗q = p∗d(q)`, `d(p)∗q = δ p∗d(q)`). `Literal` substitutes the
/// family label `(0,1,1)` / `(0,1,δ)` directly into
/// `ρ d(p∗q) = τ d(p)∗q + σ p∗d(q)`, which flips the sign of the right
/// hand side.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum SignReading {
    #[default]
    Displayed,
    Literal,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CanonicalWeightClass {
    family: Family,
    delta: Option<Rational>,
}

impl CanonicalWeightClass {
    /// A family other than `D01Delta`.
    pub fn plain(family: Family) -> Self {
        assert!(family != Family::D01Delta, "D01δ needs a delta");
        CanonicalWeightClass { family, delta: None }
    }

    pub fn with_delta(delta: Rational) -> Result<Self> {
        if delta.is_zero() || delta.is_one() {
            return Err(Error::BadDelta(delta.to_string()));
        }
        Ok(CanonicalWeightClass {
            family: Family::D01Delta,
            delta: Some(delta),
        })
    }

    /// Builds a class from a family and an optional delta; `delta` is
    /// required for `D01Delta` and ignored otherwise.
    pub fn from_family(family: Family, delta: Option<Rational>) -> Result<Self> {
        match family {
            Family::D01Delta => Self::with_delta(delta.ok_or_else(|| Error::BadDelta("missing".into()))?),
            f => Ok(Self::plain(f)),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn delta(&self) -> Option<&Rational> {
        self.delta.as_ref()
    }

    /// The triple that names the family, e.g. `(0,1,δ)`.
    pub fn label_triple(&self) -> WeightTriple {
        let t = |a, b, c| WeightTriple::from_i64(a, b, c);
        match self.family {
            Family::D111 => t(1, 1, 1),
            Family::D110 => t(1, 1, 0),
            Family::D101 => t(1, 0, 1),
            Family::D100 => t(1, 0, 0),
            Family::D011 => t(0, 1, 1),
            Family::D001 => t(0, 0, 1),
            Family::D010 => t(0, 1, 0),
            Family::D01Delta => {
                WeightTriple::new(Rational::zero(), Rational::one(), self.delta.clone().expect("delta"))
            }
            Family::EndS => t(0, 0, 0),
        }
    }

    /// The triple whose derivation predicate coincides with the family's
    /// displayed equation.
    pub fn defining_equations(&self) -> Result<WeightTriple> {
        self.solver_triple(SignReading::Displayed)
    }

    pub fn solver_triple(&self, reading: SignReading) -> Result<WeightTriple> {
        match (self.family, reading) {
            (Family::EndS, _) => Err(Error::UnboundedSpace),
            (Family::D011 | Family::D01Delta, SignReading::Displayed) => {
                let label = self.label_triple();
                Ok(WeightTriple::new(label.rho, label.tau, -label.sigma))
            }
            _ => Ok(self.label_triple()),
        }
    }
}

impl fmt::Display for CanonicalWeightClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.delta {
            Some(d) => write!(f, "{}, delta={}", self.family, d),
            None => write!(f, "{}", self.family),
        }
    }
}

impl fmt::Debug for CanonicalWeightClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Buckets a raw triple into its family.
///
/// With `ρ ≠ 0` the triple is normalized to `(1, τ/ρ, σ/ρ)` and each of the
/// last two entries is read as 1 when nonzero, so non-conforming triples
/// such as `(1,2,0)` land in the family with the same zero pattern. With
/// `ρ = 0, τ ≠ 0` the ratio `σ/τ` selects `D010` (0), `D011` (1) or
/// `D01Delta` with `δ = σ/τ`.
pub fn canonicalize_triple(t: &WeightTriple) -> CanonicalWeightClass {
    if !t.rho.is_zero() {
        let family = match (t.tau.is_zero(), t.sigma.is_zero()) {
            (false, false) => Family::D111,
            (false, true) => Family::D110,
            (true, false) => Family::D101,
            (true, true) => Family::D100,
        };
        return CanonicalWeightClass::plain(family);
    }
    if !t.tau.is_zero() {
        let ratio = &t.sigma / &t.tau;
        return if ratio.is_zero() {
            CanonicalWeightClass::plain(Family::D010)
        } else if ratio.is_one() {
            CanonicalWeightClass::plain(Family::D011)
        } else {
            CanonicalWeightClass::with_delta(ratio).expect("ratio outside {0, 1}")
        };
    }
    if !t.sigma.is_zero() {
        CanonicalWeightClass::plain(Family::D001)
    } else {
        CanonicalWeightClass::plain(Family::EndS)
    }
}

/// Whether `t` is a nonzero multiple of its family's label triple, i.e.
/// whether the scaling rule maps it onto the family exactly.
pub fn is_conforming(t: &WeightTriple) -> bool {
    let class = canonicalize_triple(t);
    let label = class.label_triple();
    let scale = [&t.rho, &t.tau, &t.sigma]
        .into_iter()
        .zip([&label.rho, &label.tau, &label.sigma])
        .find(|(_, l)| !l.is_zero())
        .map(|(x, l)| x / l);
    match scale {
        None => t.is_zero(),
        Some(c) => label.scaled(&c) == *t,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(r: i64, t: i64, s: i64) -> CanonicalWeightClass {
        canonicalize_triple(&WeightTriple::from_i64(r, t, s))
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canon(2, 2, 2).family(), Family::D111);
        assert_eq!(canon(2, 2, 0).family(), Family::D110);
        assert_eq!(canon(3, 0, 3).family(), Family::D101);
        assert_eq!(canon(-1, 0, 0).family(), Family::D100);
        assert_eq!(canon(0, 0, 5).family(), Family::D001);
        assert_eq!(canon(0, 4, 0).family(), Family::D010);
        assert_eq!(canon(0, 3, 3).family(), Family::D011);
        let c = canon(0, 2, 6);
        assert_eq!(c.family(), Family::D01Delta);
        assert_eq!(c.delta(), Some(&Rational::from(3)));
        assert_eq!(canon(0, 0, 0).family(), Family::EndS);
    }

    #[test]
    fn conformance() {
        assert!(is_conforming(&WeightTriple::from_i64(2, 2, 0)));
        assert!(is_conforming(&WeightTriple::from_i64(0, 2, 6)));
        assert!(is_conforming(&WeightTriple::from_i64(0, 0, 0)));
        assert!(!is_conforming(&WeightTriple::from_i64(1, 2, 0)));
        assert_eq!(canon(1, 2, 0).family(), Family::D110);
    }

    #[test]
    fn defining_triples() {
        let d = |f| CanonicalWeightClass::plain(f).defining_equations().unwrap();
        assert_eq!(d(Family::D111), WeightTriple::from_i64(1, 1, 1));
        assert_eq!(d(Family::D011), WeightTriple::from_i64(0, 1, -1));
        assert_eq!(d(Family::D010), WeightTriple::from_i64(0, 1, 0));
        let delta = CanonicalWeightClass::with_delta(3.into()).unwrap();
        assert_eq!(delta.defining_equations().unwrap(), WeightTriple::from_i64(0, 1, -3));
        assert_eq!(
            delta.solver_triple(SignReading::Literal).unwrap(),
            WeightTriple::from_i64(0, 1, 3)
        );
        assert_eq!(
            CanonicalWeightClass::plain(Family::EndS).defining_equations(),
            Err(Error::UnboundedSpace)
        );
    }

    #[test]
    fn delta_validation() {
        assert!(matches!(
            CanonicalWeightClass::with_delta(0.into()),
            Err(Error::BadDelta(_))
        ));
        assert!(matches!(
            CanonicalWeightClass::with_delta(1.into()),
            Err(Error::BadDelta(_))
        ));
        assert!(matches!(
            CanonicalWeightClass::from_family(Family::D01Delta, None),
            Err(Error::BadDelta(_))
        ));
    }

    #[test]
    fn family_tags_parse() {
        for f in Family::TABLE_ORDER {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f);
        }
        assert!("112".parse::<Family>().is_err());
    }
}
