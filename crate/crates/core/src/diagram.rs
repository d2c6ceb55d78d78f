//! Cut-surface model of `D(4n; m1, m2, m3)` and the curve tracer.
//!
//! Cutting the genus-two surface along `α₂, β₂, γ₂` leaves two pairs of pants.
//! The left one is bounded by `α₂⁺, α₂⁻, γ₂ˡ`, the right one by `β₂⁺, β₂⁻, γ₂ʳ`.
//! Each `α/β` copy carries `4n` slots, each `γ` copy `8n`.
//!
//! Every pants is drawn in the plane with `γ` as the outer circle and all
//! slots indexed clockwise about their own circle. The base arc pattern is
//!
//! * `γˡ` slot `j` ↔ `α⁻` slot `j` and `γˡ` slot `4n + i` ↔ `α⁺` slot `i`,
//! * the same on the right with `β` in place of `α`.
//!
//! Gluing two circles reverses their parametrisations, so each
//! pasting is `slot ↦ c − slot`. The trivial diagram of `4n` parallel curves is
//! `c = −1` on all three cuts, and the twist offsets move it to
//!
//! * `c₁ = m₁ − 1 (mod 4n)`, `c₂ = m₂ − 1 (mod 4n)`,
//! * `c₃ = −1 − m₃ (mod 8n)`; one twist step along `c₃` moves one `γ` slot
//!   and runs opposite to the `α/β` shifts in this parametrisation.
//!
//! The push-offs `c₁, c₂, c₃` sit in a collar on the `α⁻` (`β⁻`, `γʳ`) side.
//! The reference curves `c₄` and `c₅` cross `α₂` (resp. `β₂`) once, at the gap
//! with base coordinate `−1/2`, and otherwise avoid the colored arcs. Inside the twist
//! collar `c₄` meets `|m₁|` strands, which for `m₁ = 1` is the strand through slot 0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::DiagramParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cut {
    Alpha,
    Beta,
    Gamma,
}

impl Cut {
    pub const ALL: [Cut; 3] = [Cut::Alpha, Cut::Beta, Cut::Gamma];

    pub fn name(self) -> &'static str {
        match self {
            Cut::Alpha => "alpha2",
            Cut::Beta => "beta2",
            Cut::Gamma => "gamma2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// One of the six boundary circles of the two pants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Boundary {
    AlphaPlus,
    AlphaMinus,
    GammaLeft,
    BetaPlus,
    BetaMinus,
    GammaRight,
}

impl Boundary {
    pub fn side(self) -> Side {
        match self {
            Boundary::AlphaPlus | Boundary::AlphaMinus | Boundary::GammaLeft => Side::Left,
            _ => Side::Right,
        }
    }

    pub fn cut(self) -> Cut {
        match self {
            Boundary::AlphaPlus | Boundary::AlphaMinus => Cut::Alpha,
            Boundary::BetaPlus | Boundary::BetaMinus => Cut::Beta,
            Boundary::GammaLeft | Boundary::GammaRight => Cut::Gamma,
        }
    }

    /// Number of slots on this circle.
    pub fn slots(self, n: usize) -> usize {
        match self.cut() {
            Cut::Gamma => 8 * n,
            _ => 4 * n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundaryPoint {
    pub boundary: Boundary,
    pub slot: usize,
}

impl BoundaryPoint {
    pub fn new(boundary: Boundary, slot: usize) -> Self {
        BoundaryPoint { boundary, slot }
    }
}

/// An arc of a pants. `ends[0]` lies on the `γ` copy, `ends[1]` on `α±` or `β±`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub ends: [BoundaryPoint; 2],
}

/// Reference to an arc: pants side plus index into that side's arc list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcRef {
    pub side: Side,
    pub index: usize,
}

/// Fixed base arc systems on the two pants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSurfaceModel {
    n: usize,
    pub arcs_left: Vec<Arc>,
    pub arcs_right: Vec<Arc>,
}

impl CutSurfaceModel {
    pub fn base(n: usize) -> Self {
        assert!(n >= 1, "n must be positive");
        let w = 4 * n;
        let pants = |gamma: Boundary, minus: Boundary, plus: Boundary| {
            (0..w)
                .map(|j| Arc {
                    ends: [BoundaryPoint::new(gamma, j), BoundaryPoint::new(minus, j)],
                })
                .chain((0..w).map(|i| Arc {
                    ends: [
                        BoundaryPoint::new(gamma, w + i),
                        BoundaryPoint::new(plus, i),
                    ],
                }))
                .collect::<Vec<_>>()
        };
        CutSurfaceModel {
            n,
            arcs_left: pants(
                Boundary::GammaLeft,
                Boundary::AlphaMinus,
                Boundary::AlphaPlus,
            ),
            arcs_right: pants(
                Boundary::GammaRight,
                Boundary::BetaMinus,
                Boundary::BetaPlus,
            ),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self, side: Side) -> &[Arc] {
        match side {
            Side::Left => &self.arcs_left,
            Side::Right => &self.arcs_right,
        }
    }

    /// Arc containing the given boundary point.
    pub fn arc_at(&self, p: BoundaryPoint) -> ArcRef {
        let w = 4 * self.n;
        let index = match p.boundary {
            Boundary::GammaLeft | Boundary::GammaRight => p.slot,
            Boundary::AlphaMinus | Boundary::BetaMinus => p.slot,
            Boundary::AlphaPlus | Boundary::BetaPlus => w + p.slot,
        };
        ArcRef {
            side: p.boundary.side(),
            index,
        }
    }

    /// The other endpoint of the arc through `p`.
    pub fn partner(&self, p: BoundaryPoint) -> BoundaryPoint {
        let arc = &self.arcs(p.boundary.side())[self.arc_at(p).index];
        if arc.ends[0] == p {
            arc.ends[1]
        } else {
            debug_assert_eq!(arc.ends[1], p);
            arc.ends[0]
        }
    }
}

/// The three cyclic pastings `α⁺↔α⁻`, `β⁺↔β⁻`, `γˡ↔γʳ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PastingMap {
    n: usize,
    m: [i64; 3],
}

impl PastingMap {
    pub fn new(n: usize, m: [i64; 3]) -> Self {
        PastingMap { n, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw twist offsets `(m1, m2, m3)`.
    pub fn offsets(&self) -> [i64; 3] {
        self.m
    }

    /// Reflection constant `c` of the pasting `slot ↦ c − slot` on a cut.
    pub fn constant(&self, cut: Cut) -> usize {
        let w = 4 * self.n as i64;
        let c = match cut {
            Cut::Alpha => (self.m[0] - 1).rem_euclid(w),
            Cut::Beta => (self.m[1] - 1).rem_euclid(w),
            Cut::Gamma => (-1 - self.m[2]).rem_euclid(2 * w),
        };
        c as usize
    }

    /// Image of a boundary point across its cut.
    pub fn glue(&self, p: BoundaryPoint) -> BoundaryPoint {
        let len = p.boundary.slots(self.n);
        let c = self.constant(p.boundary.cut());
        let slot = (c + len - p.slot % len) % len;
        let boundary = match p.boundary {
            Boundary::AlphaPlus => Boundary::AlphaMinus,
            Boundary::AlphaMinus => Boundary::AlphaPlus,
            Boundary::BetaPlus => Boundary::BetaMinus,
            Boundary::BetaMinus => Boundary::BetaPlus,
            Boundary::GammaLeft => Boundary::GammaRight,
            Boundary::GammaRight => Boundary::GammaLeft,
        };
        BoundaryPoint { boundary, slot }
    }
}

/// Base arc pattern plus pasting for an untwisted parameter set.
///
/// Prefactor twists `m4, m5` are full Dehn twists along `c1, c2`; they leave the
/// pasting unchanged and are ignored here.
pub fn build_cut_model(params: &DiagramParams) -> Result<(CutSurfaceModel, PastingMap)> {
    if params.n < 1 {
        return Err(Error::NonPositiveN(params.n));
    }
    if !params.is_untwisted() {
        return Err(Error::TwistedInput {
            l: params.l,
            r: params.r,
        });
    }
    let n = params.n as usize;
    Ok((CutSurfaceModel::base(n), PastingMap::new(n, params.m())))
}

/// A transverse crossing of a cut.
///
/// `slot` is the index on `α⁺`, `β⁺` or `γˡ`. `sign` is `+1` for `α⁺→α⁻`,
/// `β⁺→β⁻` and `γˡ→γʳ` along the component's traversal direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub cut: Cut,
    pub slot: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCounts {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
}

impl CutCounts {
    pub fn get(&self, cut: Cut) -> usize {
        match cut {
            Cut::Alpha => self.alpha,
            Cut::Beta => self.beta,
            Cut::Gamma => self.gamma,
        }
    }
}

/// Coordinates `(x1, y1, x2, y2)` in `H₁(S) ≅ Z⁴`.
///
/// `y1`, `y2` are signed crossings with `α₂`, `β₂`; `x1`, `x2` signed
/// intersections with `c₄`, `c₅`. These pair against the basis `c₄, α₂, c₅, β₂`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyClass {
    pub x1: i64,
    pub y1: i64,
    pub x2: i64,
    pub y2: i64,
}

impl HomologyClass {
    pub fn is_zero(&self) -> bool {
        *self == HomologyClass::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub crossings: Vec<Crossing>,
    pub counts: CutCounts,
    pub homology: HomologyClass,
    pub separating: bool,
    pub arcs: Vec<ArcRef>,
}

impl Component {
    /// Signed `γ₂` crossings. Always zero, `γ₂` separates the surface.
    pub fn gamma_signed_sum(&self) -> i64 {
        self.crossings
            .iter()
            .filter(|c| c.cut == Cut::Gamma)
            .map(|c| c.sign as i64)
            .sum()
    }
}

/// Components of the traced multicurve and the order they meet each cut.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TracedCurveSystem {
    pub n: usize,
    pub components: Vec<Component>,
    /// Component id at each `α⁺` slot.
    pub alpha_order: Vec<usize>,
    /// Component id at each `β⁺` slot.
    pub beta_order: Vec<usize>,
    /// Component id at each `γˡ` slot.
    pub gamma_order: Vec<usize>,
}

impl TracedCurveSystem {
    pub fn order(&self, cut: Cut) -> &[usize] {
        match cut {
            Cut::Alpha => &self.alpha_order,
            Cut::Beta => &self.beta_order,
            Cut::Gamma => &self.gamma_order,
        }
    }

    pub fn separating_ids(&self) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&i| self.components[i].separating)
            .collect()
    }
}

/// Decompose the arc/pasting permutation into cycles.
///
/// Components are numbered by their first `γˡ` slot.
pub fn trace_components(model: &CutSurfaceModel, pasting: &PastingMap) -> TracedCurveSystem {
    assert_eq!(model.n(), pasting.n(), "model and pasting disagree on n");
    let n = model.n();
    let w = 4 * n;
    let mut gamma_order = vec![usize::MAX; 2 * w];
    let mut alpha_order = vec![usize::MAX; w];
    let mut beta_order = vec![usize::MAX; w];
    let mut components = Vec::new();

    for start in 0..2 * w {
        if gamma_order[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut crossings = Vec::new();
        let mut arcs = Vec::new();
        let mut cur = BoundaryPoint::new(Boundary::GammaLeft, start);
        loop {
            // entering the left pants at `cur`
            gamma_order[cur.slot] = id;
            crossings.push(Crossing {
                cut: Cut::Gamma,
                slot: cur.slot,
                sign: -1,
            });
            arcs.push(model.arc_at(cur));
            let a = model.partner(cur);
            let (slot, sign) = plus_slot(a, pasting);
            alpha_order[slot] = id;
            crossings.push(Crossing {
                cut: Cut::Alpha,
                slot,
                sign,
            });
            let a2 = pasting.glue(a);
            arcs.push(model.arc_at(a2));
            let g = model.partner(a2);
            gamma_order[g.slot] = id;
            crossings.push(Crossing {
                cut: Cut::Gamma,
                slot: g.slot,
                sign: 1,
            });
            let g2 = pasting.glue(g);
            arcs.push(model.arc_at(g2));
            let b = model.partner(g2);
            let (slot, sign) = plus_slot(b, pasting);
            beta_order[slot] = id;
            crossings.push(Crossing {
                cut: Cut::Beta,
                slot,
                sign,
            });
            let b2 = pasting.glue(b);
            arcs.push(model.arc_at(b2));
            let back = pasting.glue(model.partner(b2));
            if back.slot == start {
                break;
            }
            cur = back;
        }
        let counts = CutCounts {
            alpha: crossings.iter().filter(|c| c.cut == Cut::Alpha).count(),
            beta: crossings.iter().filter(|c| c.cut == Cut::Beta).count(),
            gamma: crossings.iter().filter(|c| c.cut == Cut::Gamma).count(),
        };
        let homology = homology_from_crossings(&crossings, pasting);
        components.push(Component {
            separating: homology.is_zero(),
            crossings,
            counts,
            homology,
            arcs,
        });
    }

    TracedCurveSystem {
        n,
        components,
        alpha_order,
        beta_order,
        gamma_order,
    }
}

/// `(plus-side slot, sign)` of the crossing made when leaving the pants through `p`.
fn plus_slot(p: BoundaryPoint, pasting: &PastingMap) -> (usize, i8) {
    match p.boundary {
        Boundary::AlphaPlus | Boundary::BetaPlus => (p.slot, 1),
        Boundary::AlphaMinus | Boundary::BetaMinus => (pasting.glue(p).slot, -1),
        _ => unreachable!("gamma points never leave through alpha/beta"),
    }
}

/// Signed number of times the strand at plus-slot `slot` meets the reference
/// curve inside a collar twisted by `m` steps.
fn collar_hits(slot: usize, m: i64, width: usize) -> i64 {
    let w = width as i64;
    // base coordinate of the strand on the minus side
    let b = (-1 - slot as i64).rem_euclid(w);
    if m >= 0 {
        (b + m).div_euclid(w) - b.div_euclid(w)
    } else {
        -(b.div_euclid(w) - (b + m).div_euclid(w))
    }
}

fn homology_from_crossings(crossings: &[Crossing], pasting: &PastingMap) -> HomologyClass {
    let w = 4 * pasting.n();
    let [m1, m2, _] = pasting.offsets();
    let mut h = HomologyClass::default();
    for c in crossings {
        let s = c.sign as i64;
        match c.cut {
            Cut::Alpha => {
                h.y1 += s;
                h.x1 += s * collar_hits(c.slot, m1, w);
            }
            Cut::Beta => {
                h.y2 += s;
                h.x2 += s * collar_hits(c.slot, m2, w);
            }
            Cut::Gamma => {}
        }
    }
    h
}

/// Homology coordinates of a traced component.
pub fn homology_class(component: &Component, pasting: &PastingMap) -> HomologyClass {
    homology_from_crossings(&component.crossings, pasting)
}

/// Image of the component in `H₁(N₂) = Z²`, dual to the `α₂`, `β₂` disks.
pub fn attaching_row(component: &Component) -> [i64; 2] {
    [component.homology.y1, component.homology.y2]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Red,
    Green,
    Black,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Green => 'G',
            Color::Black => 'B',
        }
    }
}

/// Color assignment for a three-component system: `[red, green, black]` ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub red: usize,
    pub green: usize,
    pub black: usize,
}

impl Coloring {
    pub fn color_of(&self, id: usize) -> Color {
        if id == self.black {
            Color::Black
        } else if id == self.red {
            Color::Red
        } else {
            Color::Green
        }
    }
}

/// Black is the unique separating component. Red is the non-separating one
/// met first along `α⁺`, which also covers the case where only one of them
/// crosses `α₂`.
pub fn coloring(traced: &TracedCurveSystem) -> Result<Coloring> {
    if traced.components.len() != 3 {
        return Err(Error::Uncolorable(format!(
            "{} components",
            traced.components.len()
        )));
    }
    let sep = traced.separating_ids();
    if sep.len() != 1 {
        return Err(Error::Uncolorable(format!(
            "{} separating components",
            sep.len()
        )));
    }
    let black = sep[0];
    let others: Vec<usize> = (0..3).filter(|&i| i != black).collect();
    let red = traced
        .alpha_order
        .iter()
        .copied()
        .find(|&id| id != black)
        .unwrap_or(others[0]);
    let green = if red == others[0] {
        others[1]
    } else {
        others[0]
    };
    Ok(Coloring { red, green, black })
}

/// Colors met walking once around a cut, starting at slot 0.
pub fn cyclic_order(traced: &TracedCurveSystem, cut: Cut) -> Result<Vec<Color>> {
    let col = coloring(traced)?;
    Ok(traced
        .order(cut)
        .iter()
        .map(|&id| col.color_of(id))
        .collect())
}

/// True if the cyclic word reads `R, B, G, B, …` up to rotation and swapping R/G.
pub fn is_alternating_word(word: &[Color]) -> bool {
    let len = word.len();
    if len == 0 || !len.is_multiple_of(4) {
        return false;
    }
    (0..len).all(|i| {
        let a = word[i];
        let b = word[(i + 1) % len];
        let c = word[(i + 2) % len];
        (a == Color::Black) != (b == Color::Black)
            && (a == Color::Black || (c != a && c != Color::Black))
    })
}

/// Trace a parameter set in one step.
pub fn trace(params: &DiagramParams) -> Result<TracedCurveSystem> {
    let (model, pasting) = build_cut_model(params)?;
    Ok(trace_components(&model, &pasting))
}
