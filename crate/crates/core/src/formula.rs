//! Closed-form counting formulas for `dim HHⁿ` of a quadratic string
//! algebra, with the gentle specialization.

use std::fmt;

use serde::Serialize;

use crate::algebra::{HypothesisError, StringAlgebra};
use crate::combinatorics::{
    count_minus_vertex_loops, enumerate_ap, parallel_pairs, Decoration, DegreeCensus, GammaRange, PairTag,
};
use crate::linalg::Field;

/// Which branch of the characteristic / parity split a report used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CharCase {
    Any,
    CharNotTwo,
    CharTwo,
    EvenCharNotTwo,
    OddCharNotTwo,
}

impl CharCase {
    pub fn as_str(self) -> &'static str {
        match self {
            CharCase::Any => "any",
            CharCase::CharNotTwo => "char != 2",
            CharCase::CharTwo => "char = 2",
            CharCase::EvenCharNotTwo => "n even, char != 2",
            CharCase::OddCharNotTwo => "n odd, char != 2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub name: &'static str,
    pub value: usize,
    /// `+1` or `-1`.
    pub sign: i8,
}

/// A dimension together with the named counts it was assembled from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub degree: usize,
    pub dim: usize,
    pub summands: Vec<Summand>,
    pub char_case: CharCase,
}

impl DimensionReport {
    fn assemble(degree: usize, char_case: CharCase, summands: Vec<Summand>) -> DimensionReport {
        let total: i64 = summands.iter().map(|s| i64::from(s.sign) * s.value as i64).sum();
        assert!(total >= 0, "closed form evaluated to a negative dimension in degree {degree}");
        DimensionReport { degree, dim: total as usize, summands, char_case }
    }

    pub fn summand(&self, name: &str) -> Option<usize> {
        self.summands.iter().find(|s| s.name == name).map(|s| s.value)
    }
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HH^{} = {} =", self.degree, self.dim)?;
        for (i, s) in self.summands.iter().enumerate() {
            let op = if s.sign < 0 {
                "-"
            } else if i == 0 {
                ""
            } else {
                "+"
            };
            write!(f, " {op}{}[{}]", s.value, s.name)?;
        }
        write!(f, " ({})", self.char_case.as_str())
    }
}

fn plus(name: &'static str, value: usize) -> Summand {
    Summand { name, value, sign: 1 }
}

fn minus(name: &'static str, value: usize) -> Summand {
    Summand { name, value, sign: -1 }
}

fn census(alg: &StringAlgebra, n: usize) -> DegreeCensus {
    DegreeCensus::new(alg.quiver(), alg.basis(), n).expect("validated algebra")
}

fn minus_zero_zero_minus(c: &DegreeCensus) -> usize {
    c.count(PairTag::ZeroZero, GammaRange::Positive, Some(Decoration::Minus), Some(Decoration::Minus))
}

/// `|⁻(Q₀//𝒫₁)⁻| + 1`
pub fn hh0_dim(alg: &StringAlgebra) -> DimensionReport {
    let loops = count_minus_vertex_loops(alg.quiver(), alg.basis());
    DimensionReport::assemble(0, CharCase::Any, vec![plus("-(Q0//P1)-", loops), plus("one", 1)])
}

/// `|⁻(0,0)₁⁻| + |Q₁| − |Q₀| + 1`, plus `|𝒢₁|` in characteristic 2.
pub fn hh1_dim(alg: &StringAlgebra, field: Field) -> DimensionReport {
    let q = alg.quiver();
    let c1 = census(alg, 1);
    let mut summands = vec![
        plus("-(0,0)_1-", minus_zero_zero_minus(&c1)),
        plus("Q1", q.arrow_count()),
        minus("Q0", q.vertex_count()),
        plus("one", 1),
    ];
    let case = if field.characteristic() == 2 {
        summands.push(plus("G_1", c1.gentle()));
        CharCase::CharTwo
    } else {
        CharCase::CharNotTwo
    };
    DimensionReport::assemble(1, case, summands)
}

fn orbit_terms(
    alg: &StringAlgebra,
    field: Field,
    n: usize,
    current: &DegreeCensus,
    previous: &DegreeCensus,
) -> (CharCase, Vec<Summand>) {
    let q = alg.quiver();
    let here = || plus("orbits(G_n)", current.gentle_orbits(q));
    let before = || plus("orbits(G_n-1)", previous.gentle_orbits(q));
    if field.characteristic() == 2 {
        (CharCase::CharTwo, vec![here(), before()])
    } else if n.is_multiple_of(2) {
        (CharCase::EvenCharNotTwo, vec![here()])
    } else {
        (CharCase::OddCharNotTwo, vec![before()])
    }
}

/// The general formula for `n ≥ 2`.
pub fn hhn_dim(alg: &StringAlgebra, n: usize, field: Field) -> DimensionReport {
    assert!(n >= 2, "hhn_dim needs n >= 2");
    let current = census(alg, n);
    let previous = census(alg, n - 1);
    let one_zero = current.count(PairTag::OneZero, GammaRange::Arrow, None, None);
    let zero_one = current.count(PairTag::ZeroOne, GammaRange::Arrow, Some(Decoration::Minus), None);
    let mut summands = vec![
        plus("-(0,0)_n-", minus_zero_zero_minus(&current)),
        plus("E_n", current.empty()),
        minus("nE_n-1", previous.non_empty()),
        plus("((1,0)_n + -(0,1)_n) & (AP_n//Q1)", one_zero + zero_one),
    ];
    let (case, orbits) = orbit_terms(alg, field, n, &current, &previous);
    summands.extend(orbits);
    DimensionReport::assemble(n, case, summands)
}

/// The gentle specialization for `n ≥ 2`; rejects non-gentle algebras.
pub fn hhn_dim_gentle(alg: &StringAlgebra, n: usize, field: Field) -> Result<DimensionReport, HypothesisError> {
    assert!(n >= 2, "hhn_dim_gentle needs n >= 2");
    alg.require_gentle()?;
    let current = census(alg, n);
    let previous = census(alg, n - 1);
    let mut summands = vec![plus("-(0,0)_n-", minus_zero_zero_minus(&current)), plus("E_n", current.empty())];
    let (case, orbits) = orbit_terms(alg, field, n, &current, &previous);
    summands.extend(orbits);
    Ok(DimensionReport::assemble(n, case, summands))
}

/// Gentle version of the degree-one formula: the characteristic-2 extra
/// term is `|(Q₁//Q₀)|`.
pub fn hh1_dim_gentle(alg: &StringAlgebra, field: Field) -> Result<DimensionReport, HypothesisError> {
    alg.require_gentle()?;
    let q = alg.quiver();
    let c1 = census(alg, 1);
    let mut summands = vec![
        plus("-(0,0)_1-", minus_zero_zero_minus(&c1)),
        plus("Q1", q.arrow_count()),
        minus("Q0", q.vertex_count()),
        plus("one", 1),
    ];
    let case = if field.characteristic() == 2 {
        let loops = parallel_pairs(&enumerate_ap(q, 1), alg.basis(), 0).iter().filter(|p| p.gamma.is_trivial()).count();
        summands.push(plus("(Q1//Q0)", loops));
        CharCase::CharTwo
    } else {
        CharCase::CharNotTwo
    };
    Ok(DimensionReport::assemble(1, case, summands))
}

/// `dim HHⁿ` by the closed form appropriate to `n`.
pub fn hh_dim_formula(alg: &StringAlgebra, n: usize, field: Field) -> DimensionReport {
    match n {
        0 => hh0_dim(alg),
        1 => hh1_dim(alg, field),
        _ => hhn_dim(alg, n, field),
    }
}

/// `|n̄ℰ_{n−1}|` and `|((1,0)_n ⊔ ⁻(0,1)_n) ∩ (AP_n//Q₁)|`, which agree on
/// gentle algebras.
pub fn gentle_identity_counts(alg: &StringAlgebra, n: usize) -> (usize, usize) {
    assert!(n >= 2);
    let current = census(alg, n);
    let previous = census(alg, n - 1);
    let rhs = current.count(PairTag::OneZero, GammaRange::Arrow, None, None)
        + current.count(PairTag::ZeroOne, GammaRange::Arrow, Some(Decoration::Minus), None);
    (previous.non_empty(), rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::BoundQuiver;

    fn loop_algebra() -> StringAlgebra {
        StringAlgebra::new(BoundQuiver::builder().vertex("v").arrow("a", "v", "v").relation("a", "a").build().unwrap())
            .unwrap()
    }

    fn two_cycle() -> StringAlgebra {
        StringAlgebra::new(
            BoundQuiver::builder()
                .vertex("1")
                .vertex("2")
                .arrow("a", "1", "2")
                .arrow("b", "2", "1")
                .relation("a", "b")
                .relation("b", "a")
                .build()
                .unwrap(),
        )
        .unwrap()
    }

    fn a3() -> StringAlgebra {
        StringAlgebra::new(
            BoundQuiver::builder()
                .vertex("1")
                .vertex("2")
                .vertex("3")
                .arrow("a", "1", "2")
                .arrow("b", "2", "3")
                .relation("a", "b")
                .build()
                .unwrap(),
        )
        .unwrap()
    }

    fn star() -> StringAlgebra {
        StringAlgebra::new(
            BoundQuiver::builder()
                .vertex("1")
                .vertex("2")
                .vertex("3")
                .vertex("4")
                .arrow("a", "1", "2")
                .arrow("b", "2", "3")
                .arrow("c", "2", "4")
                .relation("a", "b")
                .relation("a", "c")
                .build()
                .unwrap(),
        )
        .unwrap()
    }

    fn dims(alg: &StringAlgebra, field: Field, max: usize) -> Vec<usize> {
        (0..=max).map(|n| hh_dim_formula(alg, n, field).dim).collect()
    }

    #[test]
    fn hh0_examples() {
        assert_eq!(hh0_dim(&loop_algebra()).dim, 2);
        assert_eq!(hh0_dim(&two_cycle()).dim, 1);
        assert_eq!(hh0_dim(&a3()).dim, 1);
    }

    #[test]
    fn hh1_examples() {
        assert_eq!(hh1_dim(&loop_algebra(), Field::Rational).dim, 1);
        assert_eq!(hh1_dim(&loop_algebra(), Field::Prime(2)).dim, 2);
        assert_eq!(hh1_dim(&two_cycle(), Field::Rational).dim, 1);
        for f in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            assert_eq!(hh1_dim(&a3(), f).dim, 0);
        }
    }

    #[test]
    fn hhn_examples() {
        assert_eq!(dims(&loop_algebra(), Field::Rational, 6)[2..], [1, 1, 1, 1, 1]);
        assert_eq!(dims(&two_cycle(), Field::Rational, 8)[2..], [1; 7]);
        for f in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            assert_eq!(dims(&a3(), f, 5), [1, 0, 0, 0, 0, 0]);
        }
    }

    #[test]
    fn gentle_matches_general() {
        for alg in [loop_algebra(), two_cycle(), a3()] {
            for f in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
                for n in 2..=8 {
                    assert_eq!(hhn_dim_gentle(&alg, n, f).unwrap().dim, hhn_dim(&alg, n, f).dim);
                }
                assert_eq!(hh1_dim_gentle(&alg, f).unwrap().dim, hh1_dim(&alg, f).dim);
            }
        }
        assert_eq!(hhn_dim_gentle(&a3(), 3, Field::Rational).unwrap().dim, 0);
    }

    #[test]
    fn gentle_rejects_non_gentle() {
        assert_eq!(hhn_dim_gentle(&star(), 2, Field::Rational).unwrap_err(), HypothesisError::NotGentle);
    }

    #[test]
    fn report_breakdown_is_consistent() {
        let r = hhn_dim(&two_cycle(), 4, Field::Prime(2));
        assert_eq!(r.char_case, CharCase::CharTwo);
        assert_eq!(r.summand("orbits(G_n)"), Some(1));
        assert_eq!(r.summand("orbits(G_n-1)"), Some(0));
        let total: i64 = r.summands.iter().map(|s| i64::from(s.sign) * s.value as i64).sum();
        assert_eq!(total as usize, r.dim);
    }
}
