//! First homology of the manifold of a (weakly) alternating diagram.
//!
//! The Heegaard presentation is abelianised against generators dual to the
//! `α₂`, `β₂` disks of `N₂`. Only the Red and Green relators carry information,
//! so every diagram yields a 2×2 relation matrix.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::classification::validate_weakly_alternating;
use crate::diagram::{coloring, trace, Component};
use crate::error::{Error, Result};
use crate::params::DiagramParams;

/// Diagonal of the Smith normal form of an arbitrary integer matrix.
///
/// Entries are non-negative and each divides the next; zeros come last.
/// The result has `min(rows, cols)` entries.
#[allow(clippy::needless_range_loop)] // row operations read two rows at once
pub fn smith_diagonal(matrix: &[Vec<i64>]) -> Vec<i64> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    assert!(matrix.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let size = rows.min(cols);

    for t in 0..size {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
    }

    let mut diag: Vec<i128> = (0..size).map(|i| a[i][i].abs()).collect();
    // elimination order already gives divisibility among nonzeros; zeros trail
    diag.sort_by_key(|&d| (d == 0, d));
    diag.into_iter()
        .map(|d| i64::try_from(d).expect("SNF entry overflow"))
        .collect()
}

/// Smith form `(d1, d2)` of a 2×2 integer matrix; `d1 | d2`, both non-negative.
pub fn smith_normal_form(m: [[i64; 2]; 2]) -> (i64, i64) {
    let d = smith_diagonal(&[m[0].to_vec(), m[1].to_vec()]);
    (d[0], d[1])
}

/// Free rank plus torsion coefficients `d1 | d2 | …`, each ≥ 2.
///
/// Serialises as a JSON array of cyclic orders, `0` standing for a `Z` summand:
/// `Z + Z/3` is `[0,3]`, the trivial group `[]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct H1Invariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl H1Invariants {
    pub fn trivial() -> Self {
        H1Invariants::default()
    }

    /// `Z/d`, with `d = 0` meaning `Z`.
    pub fn cyclic(d: u64) -> Self {
        Self::from_cyclic_orders(&[d])
    }

    /// Direct sum of cyclic groups with the given orders, normalised.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let k = orders.len();
        let m: Vec<Vec<i64>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if i == j { orders[i] as i64 } else { 0 })
                    .collect()
            })
            .collect();
        Self::from_relations(&m, k)
    }

    /// Cokernel of the relation matrix on `generators` generators.
    pub fn from_relations(matrix: &[Vec<i64>], generators: usize) -> Self {
        let diag = if matrix.is_empty() {
            Vec::new()
        } else {
            smith_diagonal(matrix)
        };
        let rank = diag.iter().filter(|&&d| d != 0).count();
        H1Invariants {
            free_rank: generators - rank,
            torsion: diag
                .iter()
                .filter(|&&d| d >= 2)
                .map(|&d| d as u64)
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let orders: Vec<u64> = self
            .cyclic_orders()
            .into_iter()
            .chain(other.cyclic_orders())
            .collect();
        Self::from_cyclic_orders(&orders)
    }

    /// Orders of the cyclic summands, free summands first as `0`.
    pub fn cyclic_orders(&self) -> Vec<u64> {
        std::iter::repeat_n(0, self.free_rank)
            .chain(self.torsion.iter().copied())
            .collect()
    }

    /// `|H₁|`, or `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// `H₁ ⊗ Z/2 ≠ 0`.
    pub fn mod2_nontrivial(&self) -> bool {
        self.free_rank > 0 || self.torsion.iter().any(|d| d % 2 == 0)
    }
}

impl fmt::Display for H1Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" + "))
    }
}

impl std::str::FromStr for H1Invariants {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let mut orders = Vec::new();
        for part in s.split('+').map(str::trim) {
            let bad = || Error::Parse(format!("bad homology summand {part:?}"));
            if part == "Z" {
                orders.push(0);
            } else if let Some(r) = part.strip_prefix("Z^") {
                let r: usize = r.parse().map_err(|_| bad())?;
                orders.extend(std::iter::repeat_n(0, r));
            } else if let Some(d) = part.strip_prefix("Z/") {
                orders.push(d.parse().map_err(|_| bad())?);
            } else {
                return Err(bad());
            }
        }
        Ok(Self::from_cyclic_orders(&orders))
    }
}

impl Serialize for H1Invariants {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.cyclic_orders().serialize(s)
    }
}

impl<'de> Deserialize<'de> for H1Invariants {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let orders = Vec::<u64>::deserialize(d)?;
        Ok(Self::from_cyclic_orders(&orders))
    }
}

/// Red and Green relators in `H₁(N₂) = Z²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationMatrix {
    pub rows: [[i64; 2]; 2],
}

impl PresentationMatrix {
    pub fn det(&self) -> i64 {
        let [[a, b], [c, d]] = self.rows;
        a * d - b * c
    }

    pub fn smith(&self) -> (i64, i64) {
        smith_normal_form(self.rows)
    }

    pub fn h1(&self) -> H1Invariants {
        H1Invariants::from_relations(&[self.rows[0].to_vec(), self.rows[1].to_vec()], 2)
    }
}

/// Row of a component after Dehn twists `t_{c4}^l t_{c5}^r`.
///
/// `c4` and `c5` push to the two generators, so the twist formula only
/// touches the matching coordinate.
fn twisted_row(c: &Component, l: i64, r: i64) -> [i64; 2] {
    let h = c.homology;
    [h.y1 + l * h.x1, h.y2 + r * h.x2]
}

pub fn presentation_matrix(params: &DiagramParams) -> Result<PresentationMatrix> {
    if !validate_weakly_alternating(params) {
        return Err(Error::NotWeaklyAlternating(params.to_string()));
    }
    let traced = trace(&params.base())?;
    let col = coloring(&traced)?;
    let black = &traced.components[col.black];
    debug_assert!(black.homology.is_zero());
    let rows = [
        twisted_row(&traced.components[col.red], params.l, params.r),
        twisted_row(&traced.components[col.green], params.l, params.r),
    ];
    Ok(PresentationMatrix { rows })
}

pub fn h1(params: &DiagramParams) -> Result<H1Invariants> {
    Ok(presentation_matrix(params)?.h1())
}

pub fn h1_mod2_nontrivial(params: &DiagramParams) -> Result<bool> {
    Ok(h1(params)?.mod2_nontrivial())
}

/// Seifert invariant `β/α` of an exceptional fibre (or the obstruction term).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fibre {
    pub beta: i64,
    pub alpha: i64,
}

impl Fibre {
    pub const fn new(beta: i64, alpha: i64) -> Self {
        Fibre { beta, alpha }
    }
}

impl fmt::Display for Fibre {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.alpha)
    }
}

/// `H₁` of the Seifert fibration over `S²` with obstruction `b` and the given fibres.
///
/// Generators `c₁ … c_k, h`; relations `αᵢcᵢ + βᵢh = 0` and `Σcᵢ = 0`.
/// A nonzero `b` enters as one more fibre.
pub fn seifert_h1_oracle(b: Fibre, fibres: &[Fibre]) -> Result<H1Invariants> {
    let mut all: Vec<Fibre> = fibres.to_vec();
    if b.beta != 0 {
        all.push(b);
    }
    if let Some(f) = all.iter().find(|f| f.alpha == 0) {
        return Err(Error::ZeroMultiplicity(f.beta));
    }
    let k = all.len();
    let mut m = Vec::with_capacity(k + 1);
    for (i, f) in all.iter().enumerate() {
        let mut row = vec![0; k + 1];
        row[i] = f.alpha;
        row[k] = f.beta;
        m.push(row);
    }
    let mut last = vec![1; k + 1];
    last[k] = 0;
    m.push(last);
    Ok(H1Invariants::from_relations(&m, k + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_normal_form([[2, 0], [0, 3]]), (1, 6));
        assert_eq!(smith_normal_form([[0, 0], [0, 0]]), (0, 0));
        assert_eq!(smith_normal_form([[1, 2], [3, 4]]), (1, 2));
        assert_eq!(smith_normal_form([[2, 4], [4, 8]]), (2, 0));
        assert_eq!(smith_normal_form([[0, 3], [0, 0]]), (3, 0));
        assert_eq!(
            smith_diagonal(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            vec![2, 6, 12]
        );
        assert_eq!(smith_diagonal(&[vec![6, 4]]), vec![2]);
    }

    #[test]
    fn smith_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..10_000 {
            let m = [[0; 2]; 2].map(|r: [i64; 2]| r.map(|_| rng.gen_range(-99..=99)));
            let (d1, d2) = smith_normal_form(m);
            let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs();
            let g = gcd(gcd(m[0][0], m[0][1]), gcd(m[1][0], m[1][1]));
            assert_eq!(d1, g, "{m:?}");
            assert_eq!(d1 * d2, det, "{m:?}");
            if d1 != 0 {
                assert_eq!(d2 % d1, 0);
            }
        }
    }

    #[test]
    fn invariants_render_and_parse() {
        let g = H1Invariants::from_cyclic_orders(&[0, 3]);
        assert_eq!(g.to_string(), "Z + Z/3");
        assert_eq!(serde_json::to_string(&g).unwrap(), "[0,3]");
        assert_eq!("Z + Z/3".parse::<H1Invariants>().unwrap(), g);
        assert_eq!(H1Invariants::trivial().to_string(), "0");
        assert_eq!(
            H1Invariants::from_cyclic_orders(&[2, 3]),
            H1Invariants::cyclic(6)
        );
        assert_eq!(
            H1Invariants::from_cyclic_orders(&[4, 6]).torsion,
            vec![2, 12]
        );
        assert_eq!(H1Invariants::from_cyclic_orders(&[0, 0]).to_string(), "Z^2");
        assert_eq!(H1Invariants::cyclic(1), H1Invariants::trivial());
        assert!("Q".parse::<H1Invariants>().is_err());
    }

    #[test]
    fn seifert_oracle() {
        let prism = seifert_h1_oracle(
            Fibre::new(0, 1),
            &[Fibre::new(-1, 2), Fibre::new(1, 2), Fibre::new(1, 2)],
        )
        .unwrap();
        assert_eq!(prism.order(), Some(4));
        let poincare = seifert_h1_oracle(
            Fibre::new(0, 1),
            &[Fibre::new(-1, 2), Fibre::new(1, 3), Fibre::new(1, 5)],
        )
        .unwrap();
        assert!(poincare.is_trivial());
        // e = -1/2 + 1/4 + 1/4 = 0
        let flat = seifert_h1_oracle(
            Fibre::new(0, 1),
            &[Fibre::new(-1, 2), Fibre::new(1, 4), Fibre::new(1, 4)],
        )
        .unwrap();
        assert!(flat.free_rank >= 1);
        assert_eq!(
            seifert_h1_oracle(Fibre::new(0, 1), &[Fibre::new(1, 0)]),
            Err(Error::ZeroMultiplicity(1))
        );
        // obstruction term behaves like an extra fibre
        let with_b = seifert_h1_oracle(
            Fibre::new(-1, 1),
            &[Fibre::new(1, 2), Fibre::new(1, 2), Fibre::new(1, 2)],
        )
        .unwrap();
        assert_eq!(with_b, prism);
    }

    #[test]
    fn prism_and_connected_sum_diagrams() {
        let p = DiagramParams::new(2, 1, 1, 5).unwrap();
        assert_eq!(presentation_matrix(&p).unwrap().det().abs(), 4);
        assert_eq!(h1(&p).unwrap().order(), Some(4));

        let p = DiagramParams::new(3, 1, 5, 1).unwrap();
        let pm = presentation_matrix(&p).unwrap();
        assert_eq!(pm.det(), 0);
        assert_eq!(pm.smith(), (3, 0));
        assert_eq!(
            h1(&p).unwrap(),
            H1Invariants {
                free_rank: 1,
                torsion: vec![3]
            }
        );
    }

    #[test]
    fn poincare_and_figure_eight_diagrams() {
        let poincare = DiagramParams::with_twists(5, [1, 13, 5], 1, 0, [0, 0]).unwrap();
        assert_eq!(presentation_matrix(&poincare).unwrap().det().abs(), 1);
        assert!(h1(&poincare).unwrap().is_trivial());
        assert!(!h1_mod2_nontrivial(&poincare).unwrap());

        // M2(5;0[l],4,1) = D(20;1[l],11,6)
        let fig8 = |l| DiagramParams::with_twists(5, [1, 11, 6], l, 0, [0, 0]).unwrap();
        assert_eq!(h1(&fig8(7)).unwrap(), H1Invariants::cyclic(5));
        assert!(!h1_mod2_nontrivial(&fig8(5)).unwrap());
        assert_eq!(h1(&fig8(2)).unwrap(), H1Invariants::cyclic(0));
    }

    #[test]
    fn prefactor_twists_do_not_change_h1() {
        let a = DiagramParams::with_twists(5, [1, 13, 5], 1, 0, [0, 0]).unwrap();
        let b = DiagramParams::with_twists(5, [1, 13, 5], 1, 0, [3, -2]).unwrap();
        assert_eq!(h1(&a).unwrap(), h1(&b).unwrap());
    }

    #[test]
    fn invalid_diagrams_rejected() {
        let p = DiagramParams::new(2, 1, -3, 1).unwrap();
        assert!(matches!(h1(&p), Err(Error::NotWeaklyAlternating(_))));
        let p = DiagramParams::with_twists(2, [1, 5, 5], 0, 3, [0, 0]).unwrap();
        assert!(h1(&p).is_err());
    }

    proptest! {
        #[test]
        fn smith_matches_gcd_and_det(m in prop::array::uniform2(prop::array::uniform2(-500i64..500))) {
            let (d1, d2) = smith_normal_form(m);
            let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs();
            prop_assert_eq!(d1, gcd(gcd(m[0][0], m[0][1]), gcd(m[1][0], m[1][1])));
            prop_assert_eq!(d1 * d2, det);
        }

        #[test]
        fn smith_is_unimodular_invariant(m in prop::array::uniform2(prop::array::uniform2(-40i64..40)),
                                         k in -5i64..5) {
            let moved = [m[0], [m[1][0] + k * m[0][0], m[1][1] + k * m[0][1]]];
            let swapped = [[m[0][1], m[0][0]], [m[1][1], m[1][0]]];
            prop_assert_eq!(smith_normal_form(m), smith_normal_form(moved));
            prop_assert_eq!(smith_normal_form(m), smith_normal_form(swapped));
        }

        #[test]
        fn json_array_round_trip(orders in prop::collection::vec(0u64..40, 0..5)) {
            let g = H1Invariants::from_cyclic_orders(&orders);
            let back: H1Invariants = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(g.to_string().parse::<H1Invariants>().unwrap(), g);
        }
    }
}
