//! Named manifolds behind canonical classes, and their branched sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classification::{CanonicalClass, Family};
use crate::error::Result;
use crate::homology::{h1, seifert_h1_oracle, Fibre, H1Invariants};

/// Second summand of a lens-space connected sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Summand {
    S1xS2,
    Rp3,
    /// `L(l,1)`; `l = 0` reads as `S¹×S²`.
    Lens {
        l: i64,
    },
}

/// A manifold from one of the recognised families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ManifoldId {
    LensSum {
        n: i64,
        m: i64,
        with: Summand,
    },
    Prism {
        m: i64,
        n: i64,
    },
    Seifert {
        fibres: [Fibre; 3],
    },
    Fig8Surgery {
        k: i64,
        geometry: String,
    },
    Unidentified {
        hyperbolic_candidate: bool,
        note: String,
    },
}

fn lens_name(p: i64, q: i64) -> String {
    match p.abs() {
        0 => "S1xS2".into(),
        1 => "S3".into(),
        2 => "RP3".into(),
        a => format!("L({a},{q})"),
    }
}

/// `β/α` with the sign carried by the numerator.
fn fraction(f: &Fibre) -> String {
    if f.alpha < 0 {
        format!("{}/{}", -f.beta, -f.alpha)
    } else {
        format!("{}/{}", f.beta, f.alpha)
    }
}

impl fmt::Display for ManifoldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldId::LensSum { n, m, with } => {
                let rhs = match with {
                    Summand::S1xS2 => "S1xS2".to_string(),
                    Summand::Rp3 => "RP3".to_string(),
                    Summand::Lens { l } => lens_name(*l, 1),
                };
                write!(f, "{} # {}", lens_name(*n, *m), rhs)
            }
            ManifoldId::Prism { m, n } => write!(f, "P({m},{n})"),
            ManifoldId::Seifert { fibres } => {
                let parts: Vec<String> = fibres.iter().map(fraction).collect();
                write!(f, "S2({})", parts.join(","))
            }
            ManifoldId::Fig8Surgery { k, .. } => write!(f, "S3_{{{k}}}(4_1)"),
            ManifoldId::Unidentified {
                hyperbolic_candidate: true,
                ..
            } => f.write_str("unidentified (hyperbolic candidate)"),
            ManifoldId::Unidentified { .. } => f.write_str("unidentified"),
        }
    }
}

impl ManifoldId {
    /// Expected `H₁` from the standard rules, `None` when there is no rule.
    pub fn oracle_h1(&self) -> Result<Option<H1Invariants>> {
        let g = match self {
            ManifoldId::LensSum { n, with, .. } => {
                let other = match with {
                    Summand::S1xS2 => 0,
                    Summand::Rp3 => 2,
                    Summand::Lens { l } => l.unsigned_abs(),
                };
                H1Invariants::from_cyclic_orders(&[n.unsigned_abs(), other])
            }
            ManifoldId::Prism { m, n } => seifert_h1_oracle(
                Fibre::new(0, 1),
                &[Fibre::new(-1, 2), Fibre::new(1, 2), Fibre::new(*m, *n)],
            )?,
            ManifoldId::Seifert { fibres } => seifert_or_connected_sum(fibres)?,
            ManifoldId::Fig8Surgery { k, .. } => H1Invariants::cyclic(k.unsigned_abs()),
            ManifoldId::Unidentified { .. } => return Ok(None),
        };
        Ok(Some(g))
    }

    pub fn is_identified(&self) -> bool {
        !matches!(self, ManifoldId::Unidentified { .. })
    }
}

/// A fibre `β/0` collapses the fibration into a connected sum of the lens
/// spaces of the remaining fibres; `z` such fibres leave `z − 1` copies of `S¹×S²`.
fn seifert_or_connected_sum(fibres: &[Fibre]) -> Result<H1Invariants> {
    let zeros = fibres.iter().filter(|f| f.alpha == 0).count();
    if zeros == 0 {
        return seifert_h1_oracle(Fibre::new(0, 1), fibres);
    }
    let orders: Vec<u64> = std::iter::repeat_n(0, zeros - 1)
        .chain(
            fibres
                .iter()
                .filter(|f| f.alpha != 0)
                .map(|f| f.alpha.unsigned_abs()),
        )
        .collect();
    Ok(H1Invariants::from_cyclic_orders(&orders))
}

/// Geometry of integral surgery on the figure-eight knot.
pub fn fig8_slope_classify(k: i64) -> String {
    match k.abs() {
        0 => "Sol torus bundle, monodromy [[1,1],[1,2]]".into(),
        1 => "S2(-1/2,1/3,1/7)".into(),
        2 => "S2(-1/2,1/4,1/5)".into(),
        3 => "S2(-2/3,1/3,1/4)".into(),
        4 => "toroidal: trefoil complement ∪ twisted I-bundle over Klein bottle".into(),
        _ => "hyperbolic".into(),
    }
}

fn fig8(k: i64) -> ManifoldId {
    ManifoldId::Fig8Surgery {
        k,
        geometry: fig8_slope_classify(k),
    }
}

/// Every family the class belongs to; overlaps are all reported.
pub fn identify(cls: &CanonicalClass) -> Vec<ManifoldId> {
    let CanonicalClass {
        family,
        n,
        k: [k1, k2, k3],
        l,
        r,
    } = *cls;
    let mut out = Vec::new();
    let s = k1 + k2 + 2 * k3;
    let m = s - n;
    let untwisted = l == 0 && r == 0;
    let in_range = |m: i64| 0 <= m && m < n;
    match family {
        Family::M1 => {
            if untwisted && k3 == 0 && in_range(m) {
                out.push(ManifoldId::LensSum {
                    n,
                    m,
                    with: Summand::S1xS2,
                });
            }
            if untwisted && k1 == 0 && k2 == n - k3 && 0 < k3 && k3 < n {
                out.push(ManifoldId::Prism { m: k3, n });
            }
            if r == 0 && k1 == 0 && k3 == 0 && in_range(k2 - n) {
                out.push(ManifoldId::LensSum {
                    n,
                    m: k2 - n,
                    with: Summand::Lens { l },
                });
            }
            if r == 0 && k1 == 0 && k2 == n - k3 && in_range(k3) {
                let fibres = [Fibre::new(-1, 2), Fibre::new(1, l + 2), Fibre::new(k3, n)];
                out.push(ManifoldId::Seifert { fibres });
            }
            if k1 == 0 && k2 == 1 && k3 == 0 {
                let fibres = [Fibre::new(1, l), Fibre::new(1, r), Fibre::new(1, n)];
                out.push(ManifoldId::Seifert { fibres });
            }
        }
        Family::M2 => {
            if untwisted && k3 == 0 && in_range(m) {
                out.push(ManifoldId::LensSum {
                    n,
                    m,
                    with: Summand::Rp3,
                });
            }
            if untwisted && 0 < k3 && 2 * k3 < n && k1 == k3 - 1 && k2 == n - 2 * k3 + 1 {
                let fibres = [Fibre::new(-1, 2), Fibre::new(1, 4), Fibre::new(k3, n)];
                out.push(ManifoldId::Seifert { fibres });
            }
            if n == 5 && r == 0 && k1 == 0 && k2 == 4 && k3 == 1 {
                out.push(fig8(l - 2));
            }
            if r == 0 && l == 1 && k1 == 0 && k2 == n - 3 && k3 == 2 {
                out.push(fig8(n - 2));
            }
            if untwisted && n >= 5 && k1 == 0 && k2 == n - 3 && k3 == 2 {
                out.push(ManifoldId::Unidentified {
                    hyperbolic_candidate: true,
                    note: "hyperbolic except for finitely many n (not verified)".into(),
                });
            }
        }
    }
    if out.is_empty() {
        out.push(ManifoldId::Unidentified {
            hyperbolic_candidate: false,
            note: "no family matches".into(),
        });
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkMode {
    Pillowcase,
    Tangles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Walk {
    /// From `L_s` along the oriented circle (alternating classes).
    Along,
    /// From `L_t` against it (weak classes).
    Against,
}

/// Blue two-bridge link on the `n × n` pillowcase plus the Yellow component.
///
/// Front arcs have slope `−m/n`, back arcs `m/n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pillowcase {
    pub n: i64,
    pub m: i64,
    pub yellow_offset: i64,
    pub walk: Walk,
    /// Half-twist counts of the `k`-boxes, `[l]` or `[l, r]`.
    pub boxes: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MontesinosLinkData {
    pub mode: LinkMode,
    pub pillowcase: Pillowcase,
    /// Rational tangles `(β, α)`.
    pub tangles: Vec<(i64, i64)>,
    pub notes: Vec<String>,
}

pub fn branch_link(cls: &CanonicalClass) -> MontesinosLinkData {
    let CanonicalClass {
        family,
        n,
        k: [k1, k2, k3],
        l,
        r,
    } = *cls;
    let m = cls.m();
    let weak = !cls.is_alternating();
    let boxes = match (l, r) {
        (0, 0) => vec![],
        (l, 0) => vec![l],
        (l, r) => vec![l, r],
    };
    let pillowcase = Pillowcase {
        n,
        m,
        yellow_offset: 2 * k3,
        walk: if weak { Walk::Against } else { Walk::Along },
        boxes,
    };
    let mut tangles = Vec::new();
    let mut notes = Vec::new();
    match family {
        Family::M1 if !weak && k1 == 0 && k2 == n - k3 && 0 < k3 && k3 < n => {
            tangles = vec![(-1, 2), (1, 2), (k3, n)];
        }
        Family::M2 if !weak && 0 < k3 && 2 * k3 < n && k1 == k3 - 1 && k2 == n - 2 * k3 + 1 => {
            tangles = vec![(-1, 2), (1, 4), (k3, n)];
        }
        Family::M1 if r == 0 && l != 0 && k1 == 0 && k2 == n - k3 => {
            tangles = vec![(1, l), (-1, 2), (k3, n)];
        }
        Family::M1 if k1 == 0 && k2 == 1 && k3 == 0 && (l != 0 || r != 0) => {
            tangles = vec![(1, l), (1, r), (1, n)];
            notes.push("pretzel link".into());
        }
        _ => {}
    }
    if tangles.iter().any(|&(_, a)| a == 0) {
        notes.push("tangle with zero denominator: the cover is a connected sum".into());
    }
    let mode = if tangles.is_empty() {
        LinkMode::Pillowcase
    } else {
        LinkMode::Tangles
    };
    MontesinosLinkData {
        mode,
        pillowcase,
        tangles,
        notes,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Match,
    Mismatch,
    /// No homology rule for this identification.
    Unchecked,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Match => "match",
            CheckStatus::Mismatch => "mismatch",
            CheckStatus::Unchecked => "unchecked",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub id: ManifoldId,
    pub name: String,
    pub oracle: Option<H1Invariants>,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub class: CanonicalClass,
    pub diagram_h1: H1Invariants,
    pub entries: Vec<CheckEntry>,
}

impl ConsistencyReport {
    pub fn all_match(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.status != CheckStatus::Mismatch)
    }
}

/// Diagram `H₁` against the oracle `H₁` of each identification.
pub fn consistency_check(cls: &CanonicalClass) -> Result<ConsistencyReport> {
    let diagram_h1 = h1(&cls.to_params()?)?;
    let mut entries = Vec::new();
    for id in identify(cls) {
        let oracle = id.oracle_h1()?;
        let status = match &oracle {
            None => CheckStatus::Unchecked,
            Some(g) if *g == diagram_h1 => CheckStatus::Match,
            Some(_) => CheckStatus::Mismatch,
        };
        entries.push(CheckEntry {
            name: id.to_string(),
            id,
            oracle,
            status,
        });
    }
    Ok(ConsistencyReport {
        class: *cls,
        diagram_h1,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(s: &str) -> CanonicalClass {
        s.parse().unwrap()
    }

    fn names(s: &str) -> Vec<String> {
        identify(&cls(s)).iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn identify_examples() {
        assert_eq!(names("M1(2;0,1,1)"), ["P(1,2)", "S2(-1/2,1/2,1/2)"]);
        assert_eq!(names("M1(5;0[1],4,1)"), ["S2(-1/2,1/3,1/5)"]);
        let ids = identify(&cls("M2(5;0[4],4,1)"));
        assert_eq!(ids, [fig8(2)]);
        assert_eq!(ids[0].to_string(), "S3_{2}(4_1)");
        assert!(
            matches!(&ids[0], ManifoldId::Fig8Surgery { geometry, .. } if geometry == "S2(-1/2,1/4,1/5)")
        );
        assert_eq!(names("M1(3;2,2,0)"), ["L(3,1) # S1xS2"]);
        assert_eq!(names("M2(3;2,2,0)"), ["L(3,1) # RP3"]);
        assert_eq!(
            names("M1(1;0,1,0)"),
            [
                "S3 # S1xS2",
                "S3 # S1xS2",
                "S2(-1/2,1/2,0/1)",
                "S2(1/0,1/0,1/1)"
            ]
        );
        let hyp = identify(&cls("M2(7;0,4,2)"));
        assert!(matches!(
            hyp[..],
            [ManifoldId::Unidentified {
                hyperbolic_candidate: true,
                ..
            }]
        ));
        assert_eq!(names("M2(7;0[1],4,2)"), ["S3_{5}(4_1)"]);
        assert!(matches!(
            identify(&cls("M1(5;2,3,1)"))[..],
            [ManifoldId::Unidentified {
                hyperbolic_candidate: false,
                ..
            }]
        ));
    }

    #[test]
    fn slopes() {
        assert_eq!(fig8_slope_classify(1), "S2(-1/2,1/3,1/7)");
        assert_eq!(fig8_slope_classify(-3), "S2(-2/3,1/3,1/4)");
        assert!(fig8_slope_classify(0).starts_with("Sol"));
        assert!(fig8_slope_classify(4).starts_with("toroidal"));
        assert_eq!(fig8_slope_classify(100), "hyperbolic");
        assert_eq!(fig8_slope_classify(-5), "hyperbolic");
    }

    #[test]
    fn fig8_family_annotation_tracks_slope() {
        for l in -6..=12 {
            let ids = identify(&CanonicalClass {
                family: Family::M2,
                n: 5,
                k: [0, 4, 1],
                l,
                r: 0,
            });
            assert!(ids.contains(&ManifoldId::Fig8Surgery {
                k: l - 2,
                geometry: fig8_slope_classify(l - 2)
            }));
        }
    }

    #[test]
    fn branch_examples() {
        let b = branch_link(&cls("M1(5;2,3,1)"));
        assert_eq!(b.mode, LinkMode::Pillowcase);
        assert_eq!(
            (b.pillowcase.m, b.pillowcase.n, b.pillowcase.yellow_offset),
            (2, 5, 2)
        );
        assert_eq!(b.pillowcase.walk, Walk::Along);
        let b = branch_link(&cls("M1(2;0,1,1)"));
        assert_eq!(b.tangles, [(-1, 2), (1, 2), (1, 2)]);
        let b = branch_link(&cls("M1(4;0[3],1[-2],0)"));
        assert_eq!(b.tangles, [(1, 3), (1, -2), (1, 4)]);
        assert_eq!(b.pillowcase.boxes, [3, -2]);
        assert_eq!(b.pillowcase.walk, Walk::Against);
        let b = branch_link(&cls("M1(4;0[3],1[0],0)"));
        assert!(b.notes.iter().any(|s| s.contains("connected sum")));
    }

    #[test]
    fn consistency_examples() {
        for s in [
            "M1(2;0,1,1)",
            "M1(5;0[1],4,1)",
            "M1(3;2,2,0)",
            "M2(5;0[7],4,1)",
            "M2(6;0[1],3,2)",
        ] {
            let rep = consistency_check(&cls(s)).unwrap();
            assert!(rep.all_match(), "{s}: {rep:?}");
            assert!(
                rep.entries.iter().all(|e| e.status == CheckStatus::Match),
                "{s}"
            );
        }
        let rep = consistency_check(&cls("M1(2;0,1,1)")).unwrap();
        assert_eq!(rep.diagram_h1.order(), Some(4));
        let rep = consistency_check(&cls("M1(3;2,2,0)")).unwrap();
        assert_eq!(rep.diagram_h1.to_string(), "Z + Z/3");
    }

    #[test]
    fn zero_denominator_rule() {
        let g = seifert_or_connected_sum(&[Fibre::new(1, 0), Fibre::new(1, 3), Fibre::new(1, 5)])
            .unwrap();
        assert_eq!(g, H1Invariants::cyclic(15));
        let g = seifert_or_connected_sum(&[Fibre::new(1, 0), Fibre::new(1, 0), Fibre::new(1, 5)])
            .unwrap();
        assert_eq!(g.to_string(), "Z + Z/5");
    }

    #[test]
    fn id_json_round_trip() {
        for s in [
            "M1(2;0,1,1)",
            "M1(3;2,2,0)",
            "M2(5;0[4],4,1)",
            "M2(7;0,4,2)",
            "M1(4;0[3],4,0)",
        ] {
            for id in identify(&cls(s)) {
                let j = serde_json::to_string(&id).unwrap();
                assert_eq!(serde_json::from_str::<ManifoldId>(&j).unwrap(), id);
            }
        }
    }
}
