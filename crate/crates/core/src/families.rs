//! Diagram generators for torus knots, pretzels, connected sums of trefoils,
//! two-bridge knots and twisted plats, plus the torus-knot tree-width lower bound.
//!
//! Everything is drawn with strands running upward through columns `0..n`. A
//! generator `sigma(i, ±)` crosses columns `i` and `i + 1`; closures either join
//! each column's top to its bottom (braid closure) or pair columns with caps
//! and cups (plat closure).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, Result};

struct StrandBuilder {
    initial: Vec<usize>,
    current: Vec<usize>,
    parent: Vec<usize>,
    crossings: Vec<[usize; 4]>,
}

impl StrandBuilder {
    fn new(columns: usize) -> Self {
        Self {
            initial: (0..columns).collect(),
            current: (0..columns).collect(),
            parent: (0..columns).collect(),
            crossings: Vec::new(),
        }
    }

    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn join(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra.max(rb)] = ra.min(rb);
    }

    /// Crosses columns `i` and `i + 1`, returning the crossing index.
    fn sigma(&mut self, i: usize, positive: bool) -> usize {
        let (bl, br) = (self.current[i], self.current[i + 1]);
        let (tl, tr) = (self.fresh(), self.fresh());
        self.current[i] = tl;
        self.current[i + 1] = tr;
        // Counterclockwise from the bottom-right; the under-strand goes first.
        let slots = if positive {
            [br, tr, tl, bl]
        } else {
            [tr, tl, bl, br]
        };
        self.crossings.push(slots);
        self.crossings.len() - 1
    }

    fn close_braid(&mut self) {
        for c in 0..self.current.len() {
            self.join(self.current[c], self.initial[c]);
        }
    }

    fn close_plat(&mut self, pairs: &[(usize, usize)]) {
        for &(a, b) in pairs {
            self.join(self.initial[a], self.initial[b]);
            self.join(self.current[a], self.current[b]);
        }
    }

    fn finish(mut self) -> Result<Diagram> {
        let total = self.parent.len();
        let mut uses = vec![0usize; total];
        let crossings: Vec<[i64; 4]> = self
            .crossings
            .clone()
            .iter()
            .map(|c| c.map(|l| self.find(l)))
            .inspect(|c| c.iter().for_each(|&l| uses[l] += 1))
            .map(|c| c.map(|l| l as i64 + 1))
            .collect();
        let free_loops = (0..total)
            .filter(|&l| self.find(l) == l && uses[l] == 0)
            .count();
        if crossings.is_empty() {
            return if free_loops == 1 {
                Ok(Diagram::round_unknot(3))
            } else {
                Err(Error::NotAKnot {
                    components: free_loops,
                })
            };
        }
        match Diagram::from_crossings(&crossings) {
            Ok(_) if free_loops > 0 => Err(Error::NotAKnot {
                components: 1 + free_loops,
            }),
            Ok(d) => Ok(d),
            Err(Error::NotAKnot { components }) => Err(Error::NotAKnot {
                components: components + free_loops,
            }),
            Err(e) => Err(e),
        }
    }
}

/// Closure of a braid on `strands` strands. Generator `k` (1-based, signed)
/// crosses columns `|k| - 1` and `|k|`.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Diagram> {
    let mut b = StrandBuilder::new(strands);
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(Error::InvalidFamily(format!(
                "generator {g} out of range for {strands} strands"
            )));
        }
        b.sigma(i - 1, g > 0);
    }
    b.close_braid();
    b.finish()
}

/// Plat closure: caps and cups pair columns `(0,1), (2,3), ...`.
pub fn plat_closure(strands: usize, word: &[i32]) -> Result<Diagram> {
    if strands % 2 != 0 {
        return Err(Error::InvalidFamily(
            "plats need an even number of strands".into(),
        ));
    }
    let mut b = StrandBuilder::new(strands);
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(Error::InvalidFamily(format!(
                "generator {g} out of range for {strands} strands"
            )));
        }
        b.sigma(i - 1, g > 0);
    }
    let pairs: Vec<_> = (0..strands / 2).map(|k| (2 * k, 2 * k + 1)).collect();
    b.close_plat(&pairs);
    b.finish()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// The closed-braid diagram of `(σ1 ··· σ_{q-1})^p`, with `p(q-1)` crossings.
pub fn torus_diagram(p: i64, q: i64) -> Result<Diagram> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidFamily(format!(
            "torus knot parameters must be at least 2, got ({p}, {q})"
        )));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let word: Vec<i32> = (0..p).flat_map(|_| 1..q as i32).collect();
    braid_closure(q as usize, &word)
}

/// A pretzel diagram together with the crossings of each twist column.
#[derive(Debug, Clone)]
pub struct PretzelDiagram {
    pub diagram: Diagram,
    pub columns: Vec<Vec<usize>>,
}

/// Three vertical twist columns of `a`, `b`, `c` half-twists joined at top and bottom.
pub fn pretzel_diagram(a: i64, b: i64, c: i64) -> Result<PretzelDiagram> {
    let twists = [a, b, c];
    if twists.contains(&0) {
        return Err(Error::InvalidFamily(
            "pretzel parameters must be nonzero".into(),
        ));
    }
    let mut builder = StrandBuilder::new(6);
    let mut columns = Vec::new();
    for (k, &t) in twists.iter().enumerate() {
        let col = (0..t.unsigned_abs())
            .map(|_| builder.sigma(2 * k, t > 0))
            .collect();
        columns.push(col);
    }
    builder.close_plat(&[(1, 2), (3, 4), (0, 5)]);
    let diagram = builder.finish()?;
    Ok(PretzelDiagram { diagram, columns })
}

/// `n` trefoils summed in a chain: the closure of `σ1³ σ2³ ··· σn³`.
pub fn trefoil_connect_sum(n: usize) -> Result<Diagram> {
    if n == 0 {
        return Err(Error::InvalidFamily("need at least one trefoil".into()));
    }
    let word: Vec<i32> = (1..=n as i32).flat_map(|i| [i, i, i]).collect();
    braid_closure(n + 1, &word)
}

/// Rewrites a continued fraction to odd length without changing its value.
fn odd_length(cf: &[i64]) -> Vec<i64> {
    let mut v = cf.to_vec();
    if v.len() % 2 == 0 {
        let last = v.pop().unwrap();
        if last.abs() == 1 {
            *v.last_mut().unwrap() += last;
        } else {
            v.push(last - last.signum());
            v.push(last.signum());
        }
    }
    v
}

/// Four-plat `σ2^{a1} σ1^{-a2} σ2^{a3} ···` for the continued fraction `[a1, ..., an]`.
pub fn two_bridge_diagram(cf: &[i64]) -> Result<Diagram> {
    if cf.is_empty() || cf.contains(&0) {
        return Err(Error::InvalidFamily(
            "continued fraction entries must be nonzero".into(),
        ));
    }
    let cf = odd_length(cf);
    let mut word = Vec::new();
    for (i, &a) in cf.iter().enumerate() {
        let (gen, sign) = if i % 2 == 0 {
            (2, a.signum())
        } else {
            (1, -a.signum())
        };
        word.extend(std::iter::repeat_n(
            gen * sign as i32,
            a.unsigned_abs() as usize,
        ));
    }
    plat_closure(4, &word)
}

/// Plat on `2b` strands whose rows alternate between the `b - 1` inner pairs
/// and the `b` capped pairs, with the given twist count per region. No
/// distance certificate is attempted.
pub fn twisted_plat(bridges: usize, rows: &[Vec<i64>]) -> Result<Diagram> {
    if bridges < 2 {
        return Err(Error::InvalidFamily(
            "twisted plats need at least two bridges".into(),
        ));
    }
    let mut word = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        let regions: Vec<i32> = if r % 2 == 0 {
            (1..bridges).map(|j| 2 * j as i32).collect()
        } else {
            (0..bridges).map(|j| 2 * j as i32 + 1).collect()
        };
        if row.len() != regions.len() {
            return Err(Error::InvalidFamily(format!(
                "row {r} needs {} twist counts",
                regions.len()
            )));
        }
        for (&g, &t) in regions.iter().zip(row) {
            word.extend(std::iter::repeat_n(
                g * t.signum() as i32,
                t.unsigned_abs() as usize,
            ));
        }
    }
    plat_closure(2 * bridges, &word)
}

/// Seeded random reduced knot diagrams from short 3- and 4-strand braids.
pub fn random_small_diagrams(
    seed: u64,
    count: usize,
    max_crossings: usize,
) -> Vec<(Vec<i32>, Diagram)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let strands = rng.random_range(3..=4usize);
        let len = rng.random_range(4..=max_crossings.max(4));
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.random_range(1..strands as i32);
                if rng.random_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        if let Ok(d) = braid_closure(strands, &word) {
            if d.is_reduced() {
                out.push((word, d));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Torus { p: i64, q: i64 },
    Pretzel { a: i64, b: i64, c: i64 },
    TrefoilConnectSum { n: usize },
    TwoBridge { cf: Vec<i64> },
}

impl FamilySpec {
    /// Parses `torus:9,7`, `pretzel:-2,3,7`, `sum:5` or `two-bridge:2,2`.
    pub fn parse(s: &str) -> Result<Self> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidFamily(format!("missing ':' in {s:?}")))?;
        let nums: Vec<i64> = args
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidFamily(format!("bad number {t:?}")))
            })
            .collect::<Result<_>>()?;
        let want = |n: usize| {
            if nums.len() == n {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!("{name} takes {n} parameters")))
            }
        };
        let spec = match name.trim() {
            "torus" => {
                want(2)?;
                FamilySpec::Torus {
                    p: nums[0],
                    q: nums[1],
                }
            }
            "pretzel" => {
                want(3)?;
                FamilySpec::Pretzel {
                    a: nums[0],
                    b: nums[1],
                    c: nums[2],
                }
            }
            "sum" | "trefoil-sum" => {
                want(1)?;
                if nums[0] < 1 {
                    return Err(Error::InvalidFamily("sum needs n >= 1".into()));
                }
                FamilySpec::TrefoilConnectSum {
                    n: nums[0] as usize,
                }
            }
            "two-bridge" | "2bridge" => FamilySpec::TwoBridge { cf: nums },
            other => return Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Torus { p, q } => {
                if *p < 2 || *q < 2 {
                    Err(Error::InvalidFamily(
                        "torus parameters must be at least 2".into(),
                    ))
                } else if gcd(*p, *q) != 1 {
                    Err(Error::NotCoprime(*p, *q))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Pretzel { a, b, c } if *a == 0 || *b == 0 || *c == 0 => Err(
                Error::InvalidFamily("pretzel parameters must be nonzero".into()),
            ),
            FamilySpec::TrefoilConnectSum { n: 0 } => {
                Err(Error::InvalidFamily("sum needs n >= 1".into()))
            }
            FamilySpec::TwoBridge { cf } if cf.is_empty() || cf.contains(&0) => Err(
                Error::InvalidFamily("continued fraction entries must be nonzero".into()),
            ),
            _ => Ok(()),
        }
    }

    pub fn diagram(&self) -> Result<Diagram> {
        match self {
            FamilySpec::Torus { p, q } => torus_diagram(*p, *q),
            FamilySpec::Pretzel { a, b, c } => pretzel_diagram(*a, *b, *c).map(|p| p.diagram),
            FamilySpec::TrefoilConnectSum { n } => trefoil_connect_sum(*n),
            FamilySpec::TwoBridge { cf } => two_bridge_diagram(cf),
        }
    }

    pub fn label(&self) -> String {
        match self {
            FamilySpec::Torus { p, q } => format!("T({p},{q})"),
            FamilySpec::Pretzel { a, b, c } => format!("P({a},{b},{c})"),
            FamilySpec::TrefoilConnectSum { n } => format!("#{n} trefoil"),
            FamilySpec::TwoBridge { cf } => {
                let parts: Vec<String> = cf.iter().map(|x| x.to_string()).collect();
                format!("C({})", parts.join(","))
            }
        }
    }
}

/// Diagrammatic tree-width lower bound for `T(p, q)`.
///
/// Torus knots carry no essential planar meridional surface and have bridge
/// number `b = min(p, q)`; both are external theorem inputs. A diagram of
/// tree-width at most `k` forces bridge number at most `4k + 4`, so every
/// `k` with `4k + 4 < b` is excluded and the tree-width is at least
/// `k_min = max(0, ceil((b - 4) / 4))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundReport {
    pub p: i64,
    pub q: i64,
    pub bridge_number: i64,
    pub k_min: i64,
}

pub fn tw_lower_bound_report(p: i64, q: i64) -> Result<LowerBoundReport> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidFamily(
            "torus parameters must be at least 2".into(),
        ));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let b = p.min(q);
    let k_min = if b > 4 { (b - 4 + 3).div_euclid(4) } else { 0 };
    Ok(LowerBoundReport {
        p,
        q,
        bridge_number: b,
        k_min,
    })
}

impl LowerBoundReport {
    pub fn text(&self) -> String {
        format!(
            "T({p},{q}): external theorem input: no essential planar meridional surface (Tsau) and bridge number \
             min(p,q) = {b} (Schubert). A diagram of tree-width k forces bridge number <= 4k+4, which fails for \
             every k < {k}; hence every diagram has tree-width >= {k}.",
            p = self.p,
            q = self.q,
            b = self.bridge_number,
            k = self.k_min
        )
    }
}
