//! Command implementations behind the `altdiag` binary.
//!
//! Every command returns a [`Report`]; the binary prints it as text or JSON.

use std::path::Path;

use altdiag::acceptance::{self, Scale};
use altdiag::homology::presentation_matrix;
use altdiag::identify::{LinkMode, ManifoldId};
use altdiag::{
    branch_link, canonical_form_weak, consistency_check, enumerate_alternating, h1, identify,
    render_branch_link, render_cut_surface, smith_normal_form, validate_alternating_closed,
    validate_alternating_trace, validate_weakly_alternating, CanonicalClass, DiagramParams,
    MontesinosLinkData,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_SEED: u64 = 20_111_014;

/// Input formats, printed on usage errors.
pub const INPUT_SCHEMA: &str = "diagram input:
  --params \"n m1 m2 m3 [l r [m4 m5]]\"   e.g. \"2 1 1 5\" or \"5 1 13 5 1 0\"
  --params \"D(4n;m1[l],m2[r],m3)\"      e.g. \"D(20;1[1],13,5)\"
  --json FILE                            {\"n\":5,\"m\":[1,13,5],\"l\":1,\"r\":0,\"prefactor\":[0,0]}
  --class CLASS                          M1(2;0,1,1), M1(5;0[1],4,1), M1(3;0[2],1[-1],0)";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Field {
    pub key: String,
    pub text: String,
    pub value: Value,
}

/// Result of one command. Text and JSON output are both rendered from this.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: Option<String>,
    pub params: Option<DiagramParams>,
    pub summary: String,
    pub results: Vec<Field>,
    pub warnings: Vec<String>,
    pub exit_status: i32,
}

impl Report {
    fn new(command: &str, input: Option<&Input>) -> Self {
        Report {
            command: command.into(),
            input: input.map(Input::label),
            params: input.and_then(|i| i.params().ok()),
            summary: String::new(),
            results: Vec::new(),
            warnings: Vec::new(),
            exit_status: EXIT_OK,
        }
    }

    fn field(&mut self, key: &str, text: impl Into<String>, value: Value) {
        self.results.push(Field {
            key: key.into(),
            text: text.into(),
            value,
        });
    }

    fn invalid(mut self, why: impl Into<String>) -> Self {
        self.summary = why.into();
        self.exit_status = EXIT_INVALID;
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.summary);
        if let Some(i) = &self.input {
            out.push_str(&format!("  input: {i}\n"));
        }
        for f in &self.results {
            out.push_str(&format!("  {}: {}\n", f.key, f.text));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialize")
    }
}

/// A diagram given either by parameters or by class notation.
#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Params(DiagramParams),
    Class(CanonicalClass),
}

impl Input {
    pub fn params(&self) -> altdiag::Result<DiagramParams> {
        match self {
            Input::Params(p) => Ok(*p),
            Input::Class(c) => c.to_params(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Input::Params(p) => p.to_string(),
            Input::Class(c) => c.to_string(),
        }
    }

    /// The class as given, or the canonical class of the parameters.
    fn class(&self) -> altdiag::Result<CanonicalClass> {
        match self {
            Input::Params(p) => canonical_form_weak(p),
            Input::Class(c) => Ok(*c),
        }
    }
}

/// Parse `--params`. A flat record is read as `n m1 m2 m3 …`; when that is not
/// weakly alternating but reading the first field as `4n` is, the second reading
/// wins and a warning says so.
pub fn parse_params(s: &str) -> altdiag::Result<(DiagramParams, Option<String>)> {
    let p: DiagramParams = s.parse()?;
    let flat = s
        .trim()
        .starts_with(|c: char| c.is_ascii_digit() || c == '-');
    if !flat || p.n % 4 != 0 || validate_weakly_alternating(&p) {
        return Ok((p, None));
    }
    let alt = DiagramParams::with_twists(p.n / 4, p.m(), p.l, p.r, [p.m4, p.m5])?;
    if !validate_weakly_alternating(&alt) {
        return Ok((p, None));
    }
    let note = format!(
        "n = {} gives no weakly alternating diagram; first field read as 4n, i.e. {alt} (n = {})",
        p.n, alt.n
    );
    Ok((alt, Some(note)))
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

fn prefactor_warning(report: &mut Report, p: &DiagramParams) {
    if p.m4 != 0 || p.m5 != 0 {
        report.warnings.push(format!(
            "prefactor twists t_c1^{} t_c2^{} dropped: they extend over the handlebody",
            p.m4, p.m5
        ));
    }
}

pub fn validate(input: &Input, oracle: bool) -> Report {
    let mut r = Report::new("validate", Some(input));
    let p = match input.params() {
        Ok(p) => p,
        Err(e) => return r.invalid(e.to_string()),
    };
    let closed = validate_alternating_closed(p.n, p.m());
    let weak = validate_weakly_alternating(&p);
    r.field(
        "closed_form",
        match &closed {
            Ok(w) => format!("eta={:?} k={:?} s={}", w.eta, w.k, w.s),
            Err(e) => e.to_string(),
        },
        closed.as_ref().map_or(Value::Null, |w| json!(w)),
    );
    r.field(
        "weakly_alternating",
        if weak { "yes" } else { "no" },
        json!(weak),
    );
    let traced = oracle.then(|| validate_alternating_trace(&p.base()));
    if let Some(t) = traced {
        r.field(
            "trace",
            if t { "alternating" } else { "not alternating" },
            json!(t),
        );
        if t != closed.is_ok() {
            r.warnings
                .push("closed form and trace oracle disagree".into());
        }
    }
    if !weak {
        return r.invalid("alternating: no");
    }
    prefactor_warning(&mut r, &p);
    let class = canonical_form_weak(&p);
    if let Ok(c) = &class {
        r.field("class", c.to_string(), json!(c));
    }
    let class_text = class.map(|c| format!(", class {c}")).unwrap_or_default();
    r.summary = if p.is_untwisted() {
        let checks = match traced {
            Some(t) => format!("closed-form {}, trace {}", mark(closed.is_ok()), mark(t)),
            None => format!("closed-form {}", mark(closed.is_ok())),
        };
        format!("alternating: yes ({checks}){class_text}")
    } else {
        let base = match traced {
            Some(t) => format!(", untwisted trace {}", mark(t)),
            None => String::new(),
        };
        format!(
            "weakly alternating: yes (closed-form {}{base}){class_text}",
            mark(closed.is_ok())
        )
    };
    r
}

pub fn canon(input: &Input) -> Report {
    let mut r = Report::new("canon", Some(input));
    let p = match input.params() {
        Ok(p) => p,
        Err(e) => return r.invalid(e.to_string()),
    };
    prefactor_warning(&mut r, &p);
    match canonical_form_weak(&p) {
        Ok(c) => {
            r.summary = c.to_string();
            r.field("class", c.to_string(), json!(c));
            r
        }
        Err(e) => r.invalid(e.to_string()),
    }
}

pub fn enumerate(n: i64, max_n: Option<i64>) -> Report {
    let mut r = Report::new("enumerate", None);
    let hi = max_n.unwrap_or(n);
    let mut total = 0;
    for k in n..=hi {
        match enumerate_alternating(k) {
            Ok(list) => {
                total += list.len();
                let names: Vec<String> = list.iter().map(|c| c.to_string()).collect();
                r.field(&format!("n={k}"), names.join(", "), json!(list));
            }
            Err(e) => return r.invalid(e.to_string()),
        }
    }
    r.summary = format!("{total} classes");
    r.warnings.push(
        "parameter classes, not homeomorphism classes; distinct classes may give the same manifold"
            .into(),
    );
    r
}

pub fn homology(input: &Input) -> Report {
    let mut r = Report::new("homology", Some(input));
    let p = match input.params() {
        Ok(p) => p,
        Err(e) => return r.invalid(e.to_string()),
    };
    let pm = match presentation_matrix(&p) {
        Ok(pm) => pm,
        Err(e) => return r.invalid(e.to_string()),
    };
    let g = pm.h1();
    let (d1, d2) = smith_normal_form(pm.rows);
    r.field("matrix", format!("{:?}", pm.rows), json!(pm.rows));
    r.field("smith", format!("({d1}, {d2})"), json!([d1, d2]));
    r.field("h1", g.to_string(), json!(g));
    r.field(
        "h1_mod2_nontrivial",
        g.mod2_nontrivial().to_string(),
        json!(g.mod2_nontrivial()),
    );
    prefactor_warning(&mut r, &p);
    r.summary = format!("H1 = {g}");
    r
}

fn nickname(id: &ManifoldId) -> Option<&'static str> {
    match id.to_string().as_str() {
        "S2(-1/2,1/3,1/5)" => Some("Poincaré"),
        "S3 # S1xS2" => Some("S1xS2"),
        _ => None,
    }
}

fn link_text(link: &MontesinosLinkData) -> String {
    let mut text = match link.mode {
        LinkMode::Tangles => {
            let t: Vec<String> = link
                .tangles
                .iter()
                .map(|&(b, a)| format!("{}/{}", b * a.signum(), a.abs()))
                .collect();
            format!("Montesinos link ({})", t.join(", "))
        }
        LinkMode::Pillowcase => {
            let pc = &link.pillowcase;
            format!(
                "pillowcase {0}x{0}, slope {1}/{0}, yellow offset {2}",
                pc.n, pc.m, pc.yellow_offset
            )
        }
    };
    for n in &link.notes {
        text.push_str(&format!("; {n}"));
    }
    text
}

pub fn identify_cmd(input: &Input, check: bool) -> Report {
    let mut r = Report::new("identify", Some(input));
    let p = match input.params() {
        Ok(p) => p,
        Err(e) => return r.invalid(e.to_string()),
    };
    if !validate_weakly_alternating(&p) {
        return r.invalid(format!("{p} is not weakly alternating"));
    }
    let cls = match input.class() {
        Ok(c) => c,
        Err(e) => return r.invalid(e.to_string()),
    };
    r.field("class", cls.to_string(), json!(cls));
    let ids = identify(&cls);
    let mut names = Vec::new();
    for id in &ids {
        let name = match nickname(id) {
            Some(nick) => format!("{id} [{nick}]"),
            None => id.to_string(),
        };
        match id {
            ManifoldId::Fig8Surgery { geometry, .. } => {
                r.field("manifold", format!("{name} ({geometry})"), json!(id));
                if geometry == "hyperbolic" {
                    r.warnings.push(
                        "figure-eight surgeries with |k| > 4 are hyperbolic; not verified here"
                            .into(),
                    );
                }
            }
            ManifoldId::Unidentified { note, .. } => {
                r.field("manifold", format!("{name}: {note}"), json!(id))
            }
            _ => r.field("manifold", name.clone(), json!(id)),
        }
        if let ManifoldId::Unidentified {
            hyperbolic_candidate: true,
            ..
        } = id
        {
            r.warnings.push(
                "hyperbolicity is an annotation, true except for finitely many n, never verified"
                    .into(),
            );
        }
        if let ManifoldId::Seifert { fibres } = id {
            if fibres[2].alpha == cls.n
                && fibres[0].beta == 1
                && fibres[1].beta == 1
                && fibres[2].beta == 1
            {
                r.warnings.push("S2(1/l,1/s,1/n) is read with s = r".into());
            }
        }
        names.push(name);
    }
    if ids.len() > 1 {
        r.warnings.push(format!(
            "{} overlapping identifications, all reported",
            ids.len()
        ));
    }
    let link = branch_link(&cls);
    r.field("branch_link", link_text(&link), json!(link));
    r.summary = names.join(", ");
    if check {
        match consistency_check(&cls) {
            Ok(rep) => {
                let verdict = if rep.all_match() { "match" } else { "mismatch" };
                let g = if rep.diagram_h1.is_trivial() {
                    "trivial".to_string()
                } else {
                    rep.diagram_h1.to_string()
                };
                let unchecked = rep.entries.iter().filter(|e| e.oracle.is_none()).count();
                let mut text = format!("{verdict} ({g})");
                if unchecked == rep.entries.len() {
                    text = format!("unchecked, no oracle ({g})");
                }
                r.field("h1_check", text.clone(), json!(rep));
                r.summary = format!("{}; H1 check: {text}", r.summary);
                if !rep.all_match() {
                    r.exit_status = EXIT_INVALID;
                }
            }
            Err(e) => return r.invalid(e.to_string()),
        }
    }
    r
}

pub fn render(input: &Input, out: &Path, branch: bool) -> anyhow::Result<Report> {
    let mut r = Report::new("render", Some(input));
    let p = match input.params() {
        Ok(p) => p,
        Err(e) => return Ok(r.invalid(e.to_string())),
    };
    let doc = if branch {
        if !validate_weakly_alternating(&p) {
            return Ok(r.invalid(format!("{p} is not weakly alternating")));
        }
        let cls = match input.class() {
            Ok(c) => c,
            Err(e) => return Ok(r.invalid(e.to_string())),
        };
        r.field("class", cls.to_string(), json!(cls));
        render_branch_link(&branch_link(&cls))
    } else {
        if !p.is_untwisted() {
            r.warnings
                .push("the cut-surface picture needs l = r = 0".into());
        }
        render_cut_surface(&p)
    };
    let svg = doc.to_svg();
    std::fs::write(out, &svg)?;
    r.field("out", out.display().to_string(), json!(out));
    r.field("bytes", svg.len().to_string(), json!(svg.len()));
    r.field(
        "arcs",
        doc.count("arc").to_string(),
        json!(doc.count("arc")),
    );
    r.summary = format!("wrote {}", out.display());
    Ok(r)
}

/// `count` random 2×2 matrices: `d1 = gcd`, `d1·d2 = |det|`.
pub fn smith_random_check(seed: u64, count: usize) -> Result<(), String> {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let m: [[i64; 2]; 2] = [
            [rng.gen_range(-99..=99), rng.gen_range(-99..=99)],
            [rng.gen_range(-99..=99), rng.gen_range(-99..=99)],
        ];
        let (d1, d2) = smith_normal_form(m);
        let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs();
        if d1 != gcd(gcd(m[0][0], m[0][1]), gcd(m[1][0], m[1][1])) || d1 * d2 != det {
            return Err(format!("{m:?} -> ({d1}, {d2})"));
        }
    }
    Ok(())
}

pub fn sweep(max_n: Option<i64>, seed: u64, color: bool) -> Report {
    let mut r = Report::new("sweep", None);
    let scale = max_n.map_or_else(Scale::default, Scale::uniform);
    r.field("scale", format!("{scale:?}"), json!(scale));
    let results = acceptance::run(scale);
    let paint = |line: String, ok: bool| {
        if !color {
            line
        } else if ok {
            line.replacen("[PASS]", "\x1b[32m[PASS]\x1b[0m", 1)
        } else {
            line.replacen("[FAIL]", "\x1b[31m[FAIL]\x1b[0m", 1)
        }
    };
    let mut passed = 0;
    for c in &results {
        passed += usize::from(c.passed);
        r.field(
            &format!("criterion {}", c.number),
            paint(c.line(), c.passed),
            json!(c),
        );
        for d in &c.detail[..c.detail.len() - 1] {
            r.warnings.push(format!("criterion {}: {d}", c.number));
        }
    }
    let smith = smith_random_check(seed, 10_000);
    r.field(
        "smith_random",
        match &smith {
            Ok(()) => format!("10000 matrices ok (seed {seed})"),
            Err(e) => format!("failed (seed {seed}): {e}"),
        },
        json!({ "seed": seed, "ok": smith.is_ok() }),
    );
    r.summary = format!("{passed}/{} criteria passed", results.len());
    if passed != results.len() || smith.is_err() {
        r.exit_status = EXIT_INVALID;
    }
    r
}

pub fn h1_text(p: &DiagramParams) -> String {
    h1(p)
        .map(|g| g.to_string())
        .unwrap_or_else(|e| e.to_string())
}
