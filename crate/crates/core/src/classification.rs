//! Which `D(4n; m1[l], m2[r], m3)` are (weakly) alternating, and canonical
//! representatives of their parameter classes.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{cyclic_order, is_alternating_word, trace, Cut};
use crate::error::{Error, Result};
use crate::params::DiagramParams;

pub const ETA1: [i64; 3] = [1, -3, 1];
pub const ETA2: [i64; 3] = [1, -5, 2];

/// Tried in this order: `η₁, −η₁, η₂, −η₂`.
const ETAS: [[i64; 3]; 4] = [ETA1, [-1, 3, -1], ETA2, [-1, 5, -2]];

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    M1,
    M2,
}

impl Family {
    pub fn eta(self) -> [i64; 3] {
        match self {
            Family::M1 => ETA1,
            Family::M2 => ETA2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::M1 => "M1",
            Family::M2 => "M2",
        })
    }
}

/// Certificate that `m = η + 4k` with `gcd(n, s) = 1`, `s = k1 + k2 + 2k3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingWitness {
    pub eta: [i64; 3],
    pub k: [i64; 3],
    pub s: i64,
}

impl AlternatingWitness {
    pub fn family(&self) -> Family {
        if self.eta[2].abs() == 1 {
            Family::M1
        } else {
            Family::M2
        }
    }

    /// `+1` for `η₁, η₂`, `-1` for their negatives.
    pub fn sign(&self) -> i64 {
        self.eta[0]
    }
}

/// Closed-form test.
pub fn validate_alternating_closed(n: i64, m: [i64; 3]) -> Result<AlternatingWitness> {
    if n < 1 {
        return Err(Error::NonPositiveN(n));
    }
    for eta in ETAS {
        let d = [m[0] - eta[0], m[1] - eta[1], m[2] - eta[2]];
        if d.iter().all(|x| x.rem_euclid(4) == 0) {
            let k = d.map(|x| x.div_euclid(4));
            let s = k[0] + k[1] + 2 * k[2];
            if gcd(n, s) == 1 {
                return Ok(AlternatingWitness { eta, k, s });
            }
            // residues of the four η are distinct, nothing else can match
            break;
        }
    }
    Err(Error::NotAlternating {
        n,
        m1: m[0],
        m2: m[1],
        m3: m[2],
    })
}

/// Trace-based test, straight from the definition: three components, one of
/// them separating, and on every cut the colors read `B, x, B, y, …` with the
/// non-Black entries alternating between Red and Green.
///
/// Only the untwisted diagram is traced; twisted input returns `false`.
pub fn validate_alternating_trace(params: &DiagramParams) -> bool {
    let Ok(traced) = trace(params) else {
        return false;
    };
    Cut::ALL
        .iter()
        .all(|&cut| cyclic_order(&traced, cut).is_ok_and(|w| is_alternating_word(&w)))
}

/// `t_{c1}^{m4} t_{c2}^{m5} D(4n; m1[l], m2[r], m3)` is weakly alternating.
pub fn validate_weakly_alternating(params: &DiagramParams) -> bool {
    validate_alternating_closed(params.n, params.m()).is_ok()
        && (params.m1 * params.m1 - 1) * params.l == 0
        && (params.m2 * params.m2 - 1) * params.r == 0
}

/// Orbits of the dihedral group generated by two reflections of the `2n`
/// Black classes, `i ↦ −1 − i` and `i ↦ 2s − 1 − i` (mod 2n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralOrbits {
    pub orbits: Vec<Vec<usize>>,
    pub transitive: bool,
}

pub fn dihedral_orbits(n: i64, s: i64) -> Result<DihedralOrbits> {
    if n < 1 {
        return Err(Error::NonPositiveN(n));
    }
    let size = 2 * n;
    let reflections = [-1, 2 * s - 1];
    let mut orbit_of = vec![usize::MAX; size as usize];
    let mut orbits = Vec::new();
    for start in 0..size as usize {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![start];
        orbit_of[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for c in reflections {
                let j = (c - i as i64).rem_euclid(size) as usize;
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(DihedralOrbits {
        transitive: orbits.len() == 1,
        orbits,
    })
}

/// Closure of `m` under reduction mod 4n, swapping `m1, m2` and negation.
pub fn symmetry_orbit(n: i64, m: [i64; 3]) -> BTreeSet<[i64; 3]> {
    let w = 4 * n;
    let reduce = |v: [i64; 3]| v.map(|x| x.rem_euclid(w));
    let start = reduce(m);
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(a) = stack.pop() {
        for b in [[a[1], a[0], a[2]], reduce(a.map(|x| -x))] {
            if seen.insert(b) {
                stack.push(b);
            }
        }
    }
    seen
}

/// A parameter class `M_i(n; k1[l], k2[r], k3)`.
///
/// Alternating classes have `l = r = 0`. The weak normal forms are
/// `M1(n;0[l],k2,k3)` and `M1(n;0[l],1[r],k3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalClass {
    pub family: Family,
    pub n: i64,
    pub k: [i64; 3],
    #[serde(default)]
    pub l: i64,
    #[serde(default)]
    pub r: i64,
}

impl CanonicalClass {
    pub fn alternating(family: Family, n: i64, k: [i64; 3]) -> Self {
        CanonicalClass {
            family,
            n,
            k,
            l: 0,
            r: 0,
        }
    }

    pub fn is_alternating(&self) -> bool {
        self.l == 0 && self.r == 0
    }

    /// `m = η + 4k`; the class shares `l, r`.
    pub fn to_params(&self) -> Result<DiagramParams> {
        let eta = self.family.eta();
        let m = [0, 1, 2].map(|i| eta[i] + 4 * self.k[i]);
        DiagramParams::with_twists(self.n, m, self.l, self.r, [0, 0])
    }

    /// `s - n`, the pillowcase slope numerator when `s` is in range.
    pub fn m(&self) -> i64 {
        self.k[0] + self.k[1] + 2 * self.k[2] - self.n
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("class serialize")
    }
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let twist = |k: i64, t: i64| {
            if t == 0 {
                k.to_string()
            } else {
                format!("{k}[{t}]")
            }
        };
        write!(
            f,
            "{}({};{},{},{})",
            self.family,
            self.n,
            twist(self.k[0], self.l),
            twist(self.k[1], self.r),
            self.k[2]
        )
    }
}

impl FromStr for CanonicalClass {
    type Err = Error;

    /// `M1(2;0,1,1)`, `M1(5;0[1],4,1)`, `M1(3;0[2],1[-1],0)`, or the JSON form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        let bad = || Error::Parse(format!("expected M1(n;k1,k2,k3) style class, got {s:?}"));
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let family = match head.trim() {
            "M1" => Family::M1,
            "M2" => Family::M2,
            _ => return Err(bad()),
        };
        let body = rest.strip_suffix(')').ok_or_else(bad)?;
        let (n, ks) = body.split_once(';').ok_or_else(bad)?;
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let parts: Vec<&str> = ks.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let entry = |p: &str| -> Result<(i64, i64)> {
            match p.split_once('[') {
                Some((k, t)) => {
                    let t = t.strip_suffix(']').ok_or_else(bad)?;
                    Ok((
                        k.trim().parse().map_err(|_| bad())?,
                        t.trim().parse().map_err(|_| bad())?,
                    ))
                }
                None => Ok((p.parse().map_err(|_| bad())?, 0)),
            }
        };
        let (k1, l) = entry(parts[0])?;
        let (k2, r) = entry(parts[1])?;
        let k3: i64 = parts[2].parse().map_err(|_| bad())?;
        if n < 1 {
            return Err(Error::NonPositiveN(n));
        }
        Ok(CanonicalClass {
            family,
            n,
            k: [k1, k2, k3],
            l,
            r,
        })
    }
}

/// Bring `k` into `0 < k2 ≤ n`, `0 ≤ k3 < n`, `n ≤ s < 2n` by shifts of `n`.
fn range_reduce(n: i64, k: [i64; 3]) -> [i64; 3] {
    let k2 = (k[1] - 1).rem_euclid(n) + 1;
    let k3 = k[2].rem_euclid(n);
    let t = n - (k2 + 2 * k3);
    let k1 = t + (k[0] - t).rem_euclid(n);
    [k1, k2, k3]
}

/// Least in-range representative of the symmetry orbit of `m`.
pub fn canonical_form_alternating(n: i64, m: [i64; 3]) -> Result<CanonicalClass> {
    validate_alternating_closed(n, m)?;
    symmetry_orbit(n, m)
        .into_iter()
        .filter_map(|v| {
            let w = validate_alternating_closed(n, v).ok()?;
            (w.sign() > 0).then(|| CanonicalClass::alternating(w.family(), n, range_reduce(n, w.k)))
        })
        .min()
        .ok_or(Error::NotAlternating {
            n,
            m1: m[0],
            m2: m[1],
            m3: m[2],
        })
}

/// All in-range `(k1, k2, k3)` for both families, sorted.
pub fn enumerate_alternating(n: i64) -> Result<Vec<CanonicalClass>> {
    if n < 1 {
        return Err(Error::NonPositiveN(n));
    }
    let mut out = Vec::new();
    for family in [Family::M1, Family::M2] {
        for k2 in 1..=n {
            for k3 in 0..n {
                for s in n..2 * n {
                    if gcd(n, s) == 1 {
                        out.push(CanonicalClass::alternating(
                            family,
                            n,
                            [s - k2 - 2 * k3, k2, k3],
                        ));
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// State of the weak rewrite search: `(m1, l, m2, r, m3)`.
type WeakState = (i64, i64, i64, i64, i64);

/// Residue reductions that are homeomorphisms: `m3` always, `m1`/`m2` only
/// when the matching twist power is zero.
fn normalize(n: i64, s: WeakState) -> WeakState {
    let w = 4 * n;
    let (m1, l, m2, r, m3) = s;
    (
        if l == 0 { m1.rem_euclid(w) } else { m1 },
        l,
        if r == 0 { m2.rem_euclid(w) } else { m2 },
        r,
        m3.rem_euclid(w),
    )
}

fn state_params(n: i64, s: WeakState) -> DiagramParams {
    let (m1, l, m2, r, m3) = s;
    DiagramParams {
        n,
        m1,
        m2,
        m3,
        l,
        r,
        m4: 0,
        m5: 0,
    }
}

fn neighbours(n: i64, s: WeakState) -> Vec<WeakState> {
    let w = 4 * n;
    let (m1, l, m2, r, m3) = s;
    let mut out = vec![(m2, r, m1, l, m3), (-m1, -l, -m2, -r, -m3)];
    if 0 < m1 && m1 < w {
        out.push((-m1, l + 2, m2, r, m1 + m3));
    }
    if -w < m1 && m1 < 0 {
        out.push((-m1, l - 2, m2, r, m3 + m1));
    }
    out
}

/// Every state reachable from `params` through the weak symmetry relations
/// without leaving the weakly alternating diagrams.
pub fn weak_rewrite_closure(params: &DiagramParams) -> Result<Vec<DiagramParams>> {
    const LIMIT: usize = 100_000;
    if !validate_weakly_alternating(params) {
        return Err(Error::NotWeaklyAlternating(params.to_string()));
    }
    let n = params.n;
    let start = normalize(n, (params.m1, params.l, params.m2, params.r, params.m3));
    let mut seen = HashSet::from([start]);
    let mut order = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for t in neighbours(n, s) {
            let t = normalize(n, t);
            if !seen.contains(&t) && validate_weakly_alternating(&state_params(n, t)) {
                seen.insert(t);
                order.push(t);
                queue.push_back(t);
                if seen.len() > LIMIT {
                    return Err(Error::NotWeaklyAlternating(format!(
                        "{params}: rewrite search diverged"
                    )));
                }
            }
        }
    }
    order.sort_unstable();
    Ok(order.into_iter().map(|s| state_params(n, s)).collect())
}

/// Weak normal form of a state, if it already has one of the two shapes.
fn weak_normal_form(p: &DiagramParams) -> Option<CanonicalClass> {
    let n = p.n;
    if p.m1 != 1 || p.l == 0 || (p.m3 - 1).rem_euclid(4) != 0 {
        return None;
    }
    let k3 = (p.m3 - 1).div_euclid(4).rem_euclid(n);
    if p.r == 0 {
        if (p.m2 + 3).rem_euclid(4) != 0 {
            return None;
        }
        let k2 = (p.m2 + 3).div_euclid(4);
        let t = n - 2 * k3;
        let k2 = t + (k2 - t).rem_euclid(n);
        return Some(CanonicalClass {
            family: Family::M1,
            n,
            k: [0, k2, k3],
            l: p.l,
            r: 0,
        });
    }
    (p.m2 == 1).then_some(CanonicalClass {
        family: Family::M1,
        n,
        k: [0, 1, k3],
        l: p.l,
        r: p.r,
    })
}

fn weak_key(c: &CanonicalClass) -> (u8, i64, i64, i64, i64) {
    (u8::from(c.r != 0), c.l, c.r, c.k[1], c.k[2])
}

/// Canonical class of a weakly alternating diagram.
///
/// If the manifold is reachable with `l = r = 0` the alternating canonical
/// form is returned; otherwise the least of the two weak normal forms that
/// the rewrite search meets.
pub fn canonical_form_weak(params: &DiagramParams) -> Result<CanonicalClass> {
    if !validate_weakly_alternating(params) {
        return Err(Error::NotWeaklyAlternating(params.to_string()));
    }
    if params.m4 != 0 || params.m5 != 0 {
        log::info!(
            "dropping prefactor twists t_c1^{} t_c2^{}: they extend over the handlebody",
            params.m4,
            params.m5
        );
    }
    if params.is_untwisted() {
        return canonical_form_alternating(params.n, params.m());
    }
    let states = weak_rewrite_closure(params)?;
    let untwisted = states
        .iter()
        .filter(|p| p.is_untwisted())
        .filter_map(|p| canonical_form_alternating(p.n, p.m()).ok())
        .min();
    if let Some(c) = untwisted {
        return Ok(c);
    }
    states
        .iter()
        .filter_map(weak_normal_form)
        .min_by_key(weak_key)
        .ok_or_else(|| Error::NotWeaklyAlternating(format!("{params}: no normal form reached")))
}

/// Canonical class of any valid diagram.
pub fn classify(params: &DiagramParams) -> Result<CanonicalClass> {
    canonical_form_weak(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::h1;
    use proptest::prelude::*;

    fn p(n: i64, m1: i64, m2: i64, m3: i64) -> DiagramParams {
        DiagramParams::new(n, m1, m2, m3).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        let w = validate_alternating_closed(2, [1, 1, 5]).unwrap();
        assert_eq!(
            w,
            AlternatingWitness {
                eta: ETA1,
                k: [0, 1, 1],
                s: 3
            }
        );
        assert_eq!(w.family(), Family::M1);
        assert!(validate_alternating_closed(2, [1, -3, 1]).is_err());
        assert!(validate_alternating_closed(1, [0, 0, 0]).is_err());
        assert_eq!(
            validate_alternating_closed(0, [1, 1, 1]),
            Err(Error::NonPositiveN(0))
        );
        let w = validate_alternating_closed(3, [3, 5, -2]).unwrap();
        assert_eq!((w.family(), w.sign()), (Family::M2, -1));
    }

    #[test]
    fn eta_residues_distinct() {
        let res: HashSet<_> = ETAS.iter().map(|e| e.map(|x| x.rem_euclid(4))).collect();
        assert_eq!(res.len(), 4);
    }

    #[test]
    fn trace_examples() {
        assert!(validate_alternating_trace(&p(2, 1, 1, 5)));
        assert!(!validate_alternating_trace(&p(1, 0, 0, 0)));
        assert!(!validate_alternating_trace(&p(2, 1, -3, 1)));
    }

    #[test]
    fn weak_examples() {
        let poincare = DiagramParams::with_twists(5, [1, 13, 5], 1, 0, [0, 0]).unwrap();
        assert!(validate_weakly_alternating(&poincare));
        let bad = DiagramParams::with_twists(2, [1, 5, 5], 0, 3, [0, 0]).unwrap();
        assert!(!validate_weakly_alternating(&bad));
        let pre = DiagramParams::with_twists(2, [1, 1, 5], 0, 0, [7, -3]).unwrap();
        assert!(validate_weakly_alternating(&pre));
    }

    #[test]
    fn dihedral_examples() {
        assert!(dihedral_orbits(5, 7).unwrap().transitive);
        assert!(dihedral_orbits(1, 4).unwrap().transitive);
        let d = dihedral_orbits(4, 2).unwrap();
        assert!(!d.transitive);
        assert_eq!(d.orbits.len(), 2);
        assert!(dihedral_orbits(0, 1).is_err());
    }

    #[test]
    fn orbit_examples() {
        let o = symmetry_orbit(2, [1, 1, 5]);
        assert!(o.contains(&[1, 1, 5]) && o.contains(&[7, 7, 3]));
        assert!(symmetry_orbit(2, [1, 5, 1]).contains(&[5, 1, 1]));
    }

    #[test]
    fn canonical_examples() {
        let c = canonical_form_alternating(2, [1, 1, 5]).unwrap();
        assert_eq!(c.to_string(), "M1(2;0,1,1)");
        assert_eq!(canonical_form_alternating(2, [1, 1, -3]).unwrap(), c);
        assert!(canonical_form_alternating(2, [1, -3, 1]).is_err());
        let m = c.to_params().unwrap().m();
        assert_eq!(canonical_form_alternating(2, m).unwrap(), c);
    }

    #[test]
    fn enumeration_examples() {
        let one = enumerate_alternating(1).unwrap();
        assert_eq!(
            one.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            ["M1(1;0,1,0)", "M2(1;0,1,0)"]
        );
        let two: Vec<[i64; 3]> = enumerate_alternating(2)
            .unwrap()
            .iter()
            .filter(|c| c.family == Family::M1)
            .map(|c| c.k)
            .collect();
        assert_eq!(two, [[-1, 2, 1], [0, 1, 1], [1, 2, 0], [2, 1, 0]]);
        for c in enumerate_alternating(5).unwrap() {
            assert!(
                validate_alternating_closed(5, c.to_params().unwrap().m()).is_ok(),
                "{c}"
            );
        }
        assert!(enumerate_alternating(0).is_err());
    }

    #[test]
    fn class_notation() {
        for s in [
            "M1(2;0,1,1)",
            "M1(5;0[1],4,1)",
            "M1(3;0[2],1[-1],0)",
            "M2(5;0[7],4,1)",
        ] {
            let c: CanonicalClass = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
            assert_eq!(c.to_json().parse::<CanonicalClass>().unwrap(), c);
        }
        let c: CanonicalClass = "M1(5;0[1],4,1)".parse().unwrap();
        assert_eq!(
            c.to_params().unwrap(),
            DiagramParams::with_twists(5, [1, 13, 5], 1, 0, [0, 0]).unwrap()
        );
        assert!("M3(1;0,1,0)".parse::<CanonicalClass>().is_err());
        assert!("M1(1;0,1)".parse::<CanonicalClass>().is_err());
        assert!("M1(0;0,1,0)".parse::<CanonicalClass>().is_err());
    }

    #[test]
    fn weak_canonical_examples() {
        let poincare = DiagramParams::with_twists(5, [1, 13, 5], 1, 0, [0, 0]).unwrap();
        assert_eq!(
            canonical_form_weak(&poincare).unwrap().to_string(),
            "M1(5;0[1],4,1)"
        );
        let alt = p(2, 1, 1, 5);
        assert_eq!(
            canonical_form_weak(&alt).unwrap(),
            canonical_form_alternating(2, [1, 1, 5]).unwrap()
        );
        let pre = DiagramParams::with_twists(2, [1, 1, 5], 0, 0, [1, 1]).unwrap();
        assert_eq!(
            canonical_form_weak(&pre).unwrap().to_string(),
            "M1(2;0,1,1)"
        );
        assert!(canonical_form_weak(&p(2, 1, -3, 1)).is_err());
    }

    #[test]
    fn eta2_weak_forms_map_to_eta1_with_equal_h1() {
        for n in 1..=5 {
            for k2 in -n..=n {
                for k3 in -n..=n {
                    if gcd(n, k2 + 2 * k3) != 1 {
                        continue;
                    }
                    for l in [-3, -1, 1, 4] {
                        let src = DiagramParams::with_twists(
                            n,
                            [1, -5 + 4 * k2, 2 + 4 * k3],
                            l,
                            0,
                            [0, 0],
                        )
                        .unwrap();
                        let c = canonical_form_weak(&src).unwrap();
                        assert_eq!(c.family, Family::M1, "{src}");
                        assert_eq!(
                            h1(&c.to_params().unwrap()).unwrap(),
                            h1(&src).unwrap(),
                            "{src} -> {c}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rewrite_closure_preserves_h1() {
        for n in 1..=4 {
            for m2 in -2 * n..=2 * n {
                for m3 in 0..4 * n {
                    for l in [-4, -1, 2, 3] {
                        let src = DiagramParams::with_twists(n, [1, m2, m3], l, 0, [0, 0]).unwrap();
                        if !validate_weakly_alternating(&src) {
                            continue;
                        }
                        let want = h1(&src).unwrap();
                        for q in weak_rewrite_closure(&src).unwrap() {
                            assert_eq!(h1(&q).unwrap(), want, "{src} ~ {q}");
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn orbit_preserves_alternating(n in 1i64..8, m in prop::array::uniform3(-40i64..40)) {
            let ok = validate_alternating_closed(n, m).is_ok();
            for v in symmetry_orbit(n, m) {
                prop_assert_eq!(validate_alternating_closed(n, v).is_ok(), ok);
            }
        }

        #[test]
        fn canonical_idempotent_and_in_range(n in 1i64..8, m in prop::array::uniform3(-40i64..40)) {
            if let Ok(c) = canonical_form_alternating(n, m) {
                let [k1, k2, k3] = c.k;
                prop_assert!(0 < k2 && k2 <= n && 0 <= k3 && k3 < n);
                prop_assert!(n <= k1 + k2 + 2 * k3 && k1 + k2 + 2 * k3 < 2 * n);
                let again = canonical_form_alternating(n, c.to_params().unwrap().m()).unwrap();
                prop_assert_eq!(again, c);
                for v in symmetry_orbit(n, m) {
                    prop_assert_eq!(canonical_form_alternating(n, v).unwrap(), c);
                }
            }
        }
    }
}
