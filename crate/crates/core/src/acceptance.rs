//! Exhaustive end-to-end checks shared by the test suite and `altdiag sweep`.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::classification::{
    canonical_form_alternating, dihedral_orbits, enumerate_alternating, symmetry_orbit,
    validate_alternating_closed, validate_alternating_trace, validate_weakly_alternating,
    CanonicalClass, Family,
};
use crate::diagram::{coloring, trace};
use crate::homology::{h1, h1_mod2_nontrivial, seifert_h1_oracle, Fibre, H1Invariants};
use crate::identify::{branch_link, consistency_check, CheckStatus};
use crate::params::DiagramParams;
use crate::render::{render_branch_link, render_cut_surface};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub number: u8,
    pub title: String,
    pub passed: bool,
    /// Failures first, then a summary of what was checked.
    pub detail: Vec<String>,
    pub elapsed_ms: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {}. {} ({} ms){}",
            if self.passed { "PASS" } else { "FAIL" },
            self.number,
            self.title,
            self.elapsed_ms,
            self.detail
                .last()
                .map(|d| format!(" - {d}"))
                .unwrap_or_default()
        )
    }
}

/// Collects failures, keeping only the first few verbatim.
struct Tally {
    checked: usize,
    failures: usize,
    samples: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failures: 0,
            samples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.samples.len() < 5 {
                self.samples.push(what());
            }
        }
    }

    fn ok(&self) -> bool {
        self.failures == 0
    }
}

fn finish(number: u8, title: &str, start: Instant, tallies: &[(&str, Tally)]) -> CriterionResult {
    let mut detail = Vec::new();
    for (name, t) in tallies {
        detail.extend(t.samples.iter().map(|s| format!("{name}: {s}")));
    }
    let summary: Vec<String> = tallies
        .iter()
        .map(|(name, t)| format!("{name} {}/{}", t.checked - t.failures, t.checked))
        .collect();
    detail.push(summary.join(", "));
    CriterionResult {
        number,
        title: title.into(),
        passed: tallies.iter().all(|(_, t)| t.ok()),
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn p(n: i64, m: [i64; 3]) -> DiagramParams {
    DiagramParams::new(n, m[0], m[1], m[2]).expect("n >= 1")
}

fn cube(lo: i64, hi: i64) -> impl Iterator<Item = [i64; 3]> {
    (lo..=hi).flat_map(move |a| (lo..=hi).flat_map(move |b| (lo..=hi).map(move |c| [a, b, c])))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Closed form agrees with the trace oracle on `[−2n, 2n]³`.
pub fn oracle_equivalence(max_n: i64) -> CriterionResult {
    let start = Instant::now();
    let mut t = Tally::new();
    for n in 1..=max_n {
        for m in cube(-2 * n, 2 * n) {
            let closed = validate_alternating_closed(n, m).is_ok();
            let traced = validate_alternating_trace(&p(n, m));
            t.check(closed == traced, || {
                format!("n={n} m={m:?} closed={closed} trace={traced}")
            });
        }
    }
    finish(
        1,
        "closed form agrees with trace oracle",
        start,
        &[("triples", t)],
    )
}

/// Two reflections act transitively on the Black classes iff `gcd(n, s) = 1`.
pub fn dihedral_claim(max_n: i64) -> CriterionResult {
    let start = Instant::now();
    let mut t = Tally::new();
    for n in 1..=max_n {
        for s in 0..2 * n {
            let d = dihedral_orbits(n, s).expect("n >= 1");
            let want = gcd(n, s) == 1;
            t.check(d.transitive == want, || {
                format!("n={n} s={s}: {} orbits", d.orbits.len())
            });
        }
    }
    finish(
        2,
        "dihedral orbits transitive iff gcd(n,s)=1",
        start,
        &[("pairs", t)],
    )
}

/// Component counts on each cut for every alternating diagram.
///
/// The per-color "only" clause contradicts the counts (both colors meet both
/// cuts `n` times) and is not asserted.
pub fn trace_structure(max_n: i64) -> CriterionResult {
    let start = Instant::now();
    let mut t = Tally::new();
    for n in 1..=max_n {
        let nu = n as usize;
        for m in cube(-2 * n, 2 * n) {
            if validate_alternating_closed(n, m).is_err() {
                continue;
            }
            let traced = trace(&p(n, m)).expect("untwisted");
            let ok = traced.components.len() == 3
                && traced.separating_ids().len() == 1
                && coloring(&traced).is_ok_and(|c| {
                    let b = &traced.components[c.black].counts;
                    let colored = [c.red, c.green].map(|i| traced.components[i].counts);
                    (b.gamma, b.alpha, b.beta) == (4 * nu, 2 * nu, 2 * nu)
                        && colored
                            .iter()
                            .all(|k| (k.gamma, k.alpha, k.beta) == (2 * nu, nu, nu))
                        && traced.components[c.black].homology.is_zero()
                });
            t.check(ok, || format!("n={n} m={m:?}"));
        }
    }
    finish(
        3,
        "alternating traces: 3 components, counts, one separating",
        start,
        &[("diagrams", t)],
    )
}

fn class(family: Family, n: i64, k: [i64; 3], l: i64, r: i64) -> CanonicalClass {
    CanonicalClass { family, n, k, l, r }
}

fn weak_h1(c: &CanonicalClass) -> Option<H1Invariants> {
    let params = c.to_params().ok()?;
    if !validate_weakly_alternating(&params) {
        return None;
    }
    h1(&params).ok()
}

/// Diagram `H₁` for the identified families.
pub fn h1_table(max_n: i64, twist: i64) -> CriterionResult {
    let start = Instant::now();
    let mut lens_s1 = Tally::new();
    let mut lens_rp3 = Tally::new();
    let mut prism = Tally::new();
    let mut lens_lens = Tally::new();
    let mut seifert = Tally::new();
    let mut fig8 = Tally::new();
    for n in 1..=max_n {
        for c in enumerate_alternating(n).expect("n >= 1") {
            if c.k[2] != 0 {
                continue;
            }
            let g = weak_h1(&c);
            match c.family {
                Family::M1 => lens_s1.check(
                    g == Some(H1Invariants::from_cyclic_orders(&[0, n as u64])),
                    || format!("{c}: {g:?}"),
                ),
                Family::M2 => lens_rp3.check(
                    g.as_ref().and_then(H1Invariants::order) == Some(2 * n as u64),
                    || format!("{c}: {g:?}"),
                ),
            }
        }
        for m in 1..n {
            if gcd(m, n) != 1 {
                continue;
            }
            let c = class(Family::M1, n, [0, n - m, m], 0, 0);
            let g = weak_h1(&c);
            prism.check(
                g.as_ref().and_then(H1Invariants::order) == Some(4 * m as u64),
                || format!("{c}: {g:?}"),
            );
        }
        for l in -twist..=twist {
            for m in 0..n {
                if gcd(n, n + m) != 1 {
                    continue;
                }
                let c = class(Family::M1, n, [0, n + m, 0], l, 0);
                let g = weak_h1(&c);
                let want = H1Invariants::from_cyclic_orders(&[n as u64, l.unsigned_abs()]);
                lens_lens.check(g.as_ref() == Some(&want), || {
                    format!("{c}: {g:?} want {want}")
                });
            }
            for m in 1..n {
                if gcd(m, n) != 1 {
                    continue;
                }
                let c = class(Family::M1, n, [0, n - m, m], l, 0);
                let g = weak_h1(&c);
                let fibres = [Fibre::new(-1, 2), Fibre::new(1, l + 2), Fibre::new(m, n)];
                let want = if l == -2 {
                    // 1/0 fibre: L(2,1) # L(n,m)
                    Some(H1Invariants::from_cyclic_orders(&[2, n as u64]))
                } else {
                    seifert_h1_oracle(Fibre::new(0, 1), &fibres).ok()
                };
                seifert.check(g.is_some() && g == want, || {
                    format!("{c}: {g:?} want {want:?}")
                });
            }
        }
    }
    for l in -twist..=twist {
        let c = class(Family::M2, 5, [0, 4, 1], l, 0);
        let g = weak_h1(&c);
        let want = H1Invariants::cyclic((l - 2).unsigned_abs());
        fig8.check(g.as_ref() == Some(&want), || {
            format!("{c}: {g:?} want {want}")
        });
    }
    finish(
        4,
        "H1 identification table",
        start,
        &[
            ("L#S1xS2", lens_s1),
            ("L#RP3", lens_rp3),
            ("prism", prism),
            ("L#L(l,1)", lens_lens),
            ("seifert", seifert),
            ("fig8", fig8),
        ],
    )
}

/// The Poincaré sphere is weakly but not alternating; alternating diagrams
/// always have `H₁(M; Z/2) ≠ 0`.
pub fn poincare_sphere(max_n: i64) -> CriterionResult {
    let start = Instant::now();
    let mut special = Tally::new();
    let c = class(Family::M1, 5, [0, 4, 1], 1, 0);
    let params = c.to_params().expect("n >= 1");
    let g = h1(&params);
    special.check(g.as_ref().is_ok_and(H1Invariants::is_trivial), || {
        format!("{c}: {g:?}")
    });
    special.check(h1_mod2_nontrivial(&params) == Ok(false), || {
        format!("{c}: mod 2 nontrivial")
    });
    let mut alternating = Tally::new();
    for n in 1..=max_n {
        for m in cube(0, 4 * n - 1) {
            if validate_alternating_closed(n, m).is_ok() {
                let r = h1_mod2_nontrivial(&p(n, m));
                alternating.check(r == Ok(true), || format!("n={n} m={m:?}: {r:?}"));
            }
        }
    }
    finish(
        5,
        "Poincare sphere vs alternating mod-2 homology",
        start,
        &[("poincare", special), ("alternating", alternating)],
    )
}

/// Idempotence, orbit constancy and agreement with the enumeration.
pub fn canonicalization(max_n: i64) -> CriterionResult {
    let start = Instant::now();
    let mut idem = Tally::new();
    let mut orbit = Tally::new();
    let mut equal = Tally::new();
    let mut counts = Tally::new();
    for n in 1..=max_n {
        let mut forms = BTreeSet::new();
        for m in cube(0, 4 * n - 1) {
            let Ok(c) = canonical_form_alternating(n, m) else {
                continue;
            };
            forms.insert(c);
            let again = canonical_form_alternating(n, c.to_params().expect("n >= 1").m());
            idem.check(again == Ok(c), || {
                format!("n={n} m={m:?}: {c} -> {again:?}")
            });
            for v in symmetry_orbit(n, m) {
                let cv = canonical_form_alternating(n, v);
                orbit.check(cv == Ok(c), || {
                    format!("n={n} {m:?} ~ {v:?}: {c} vs {cv:?}")
                });
            }
        }
        let listed: BTreeSet<_> = enumerate_alternating(n)
            .expect("n >= 1")
            .into_iter()
            .collect();
        equal.check(listed == forms, || {
            let missing: Vec<String> = listed.difference(&forms).map(|c| c.to_string()).collect();
            let extra: Vec<String> = forms.difference(&listed).map(|c| c.to_string()).collect();
            format!(
                "n={n}: {} enumerated, {} canonical; never canonical [{}]; not enumerated [{}]",
                listed.len(),
                forms.len(),
                missing.join(" "),
                extra.join(" ")
            )
        });
        let per = |f: Family| listed.iter().filter(|c| c.family == f).count();
        match n {
            1 => counts.check(per(Family::M1) == 1 && per(Family::M2) == 1, || {
                "n=1 class count".into()
            }),
            2 => counts.check(per(Family::M1) == 4 && per(Family::M2) == 4, || {
                "n=2 class count".into()
            }),
            _ => {}
        }
    }
    finish(
        6,
        "canonicalization",
        start,
        &[
            ("idempotent", idem),
            ("orbit-constant", orbit),
            ("enumeration = canonical set", equal),
            ("counts", counts),
        ],
    )
}

/// Every class of the identification sweep, including the weak families.
pub fn identification_sweep(max_n: i64, twist: i64) -> Vec<CanonicalClass> {
    let mut out = BTreeSet::new();
    for n in 1..=max_n {
        out.extend(enumerate_alternating(n).expect("n >= 1"));
        for l in -twist..=twist {
            for m in 0..n {
                out.insert(class(Family::M1, n, [0, n + m, 0], l, 0));
                out.insert(class(Family::M1, n, [0, n - m, m], l, 0));
            }
            for r in -twist..=twist {
                out.insert(class(Family::M1, n, [0, 1, 0], l, r));
            }
        }
        if n >= 4 {
            out.insert(class(Family::M2, n, [0, n - 3, 2], 1, 0));
        }
    }
    for l in -twist..=twist {
        out.insert(class(Family::M2, 5, [0, 4, 1], l, 0));
    }
    out.into_iter()
        .filter(|c| c.to_params().is_ok_and(|p| validate_weakly_alternating(&p)))
        .collect()
}

/// Diagram `H₁` matches every identification that has an oracle.
pub fn consistency_reports(max_n: i64, twist: i64) -> CriterionResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut unchecked = 0;
    for c in identification_sweep(max_n, twist) {
        match consistency_check(&c) {
            Ok(rep) => {
                for e in &rep.entries {
                    match e.status {
                        CheckStatus::Unchecked => unchecked += 1,
                        s => t.check(s == CheckStatus::Match, || {
                            format!(
                                "{c}: {} oracle {:?} diagram {}",
                                e.name, e.oracle, rep.diagram_h1
                            )
                        }),
                    }
                }
            }
            Err(e) => t.check(false, || format!("{c}: {e}")),
        }
    }
    let mut r = finish(
        7,
        "consistency reports match",
        start,
        &[("identifications", t)],
    );
    if let Some(last) = r.detail.last_mut() {
        last.push_str(&format!(", {unchecked} without an oracle"));
    }
    r
}

/// Renders are byte-identical across runs and the whole sweep is fast.
pub fn determinism(sweep_ms: u128) -> CriterionResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let diagrams = [
        p(2, [1, 1, 5]),
        p(1, [0, 0, 0]),
        p(5, [9, 9, 5]),
        DiagramParams::with_twists(5, [1, 13, 5], 1, 0, [0, 0]).expect("n >= 1"),
    ];
    for d in &diagrams {
        let a = render_cut_surface(d).to_svg();
        let b = render_cut_surface(d).to_svg();
        t.check(a == b, || format!("{d}"));
        let arcs = if d.is_untwisted() {
            16 * d.n as usize
        } else {
            0
        };
        t.check(render_cut_surface(d).count("arc") == arcs, || {
            format!("{d}: arc count")
        });
    }
    for s in [
        "M1(5;2,3,1)",
        "M1(2;0,1,1)",
        "M1(5;0[1],4,1)",
        "M1(3;0[2],1[-1],0)",
    ] {
        let c: CanonicalClass = s.parse().expect("valid notation");
        let a = render_branch_link(&branch_link(&c)).to_svg();
        let b = render_branch_link(&branch_link(&c)).to_svg();
        t.check(a == b, || s.to_string());
    }
    let mut timing = Tally::new();
    let total = sweep_ms + start.elapsed().as_millis();
    timing.check(total < 300_000, || format!("sweep took {total} ms"));
    let mut r = finish(
        8,
        "deterministic renders, sweep under 5 minutes",
        start,
        &[("renders", t), ("timing", timing)],
    );
    if let Some(last) = r.detail.last_mut() {
        last.push_str(&format!(", total {total} ms"));
    }
    r
}

/// Parameter bounds for a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scale {
    /// `n` bound for the exhaustive `m`-cube sweeps.
    pub triples: i64,
    pub dihedral: i64,
    /// `n` bound for the homology table and consistency sweep.
    pub table: i64,
    /// `n` bound for the mod-2 and canonicalization sweeps.
    pub alternating: i64,
    /// `|l|, |r|` bound.
    pub twist: i64,
}

impl Default for Scale {
    fn default() -> Self {
        Scale {
            triples: 6,
            dihedral: 50,
            table: 10,
            alternating: 4,
            twist: 6,
        }
    }
}

impl Scale {
    /// Same `n` bound everywhere.
    pub fn uniform(max_n: i64) -> Self {
        Scale {
            triples: max_n,
            dihedral: max_n,
            table: max_n,
            alternating: max_n,
            twist: 6,
        }
    }
}

/// Every criterion, in order.
pub fn run(scale: Scale) -> Vec<CriterionResult> {
    let start = Instant::now();
    let mut out = vec![
        oracle_equivalence(scale.triples),
        dihedral_claim(scale.dihedral),
        trace_structure(scale.triples),
        h1_table(scale.table, scale.twist),
        poincare_sphere(scale.alternating),
        canonicalization(scale.alternating),
        consistency_reports(scale.table, scale.twist),
    ];
    out.push(determinism(start.elapsed().as_millis()));
    out
}

pub fn run_all() -> Vec<CriterionResult> {
    run(Scale::default())
}
