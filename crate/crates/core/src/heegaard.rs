//! Multiple Heegaard splittings obtained by adding one thick sphere to every
//! component of a sphere-decomposition.
//!
//! A ball gets a push-off of its boundary. A pants with boundary spheres
//! `U, V, W` gets `U` tubed to `V` along a strand joining them, leaving the
//! strand outside the tube; the thick sphere meets the knot `u + v` times.
//! Each component then splits into two compression bodies whose tangles are
//! checked to be vertical arcs and bridges.

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spheres::{ComponentKind, SphereDecomposition};

pub const SPLITTING_SCHEMA: &str = "knotwidth/splitting/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TubeChoice {
    /// The tubed spheres `U` and `V`.
    pub joined: [usize; 2],
    /// The remaining boundary sphere `W`.
    pub other: usize,
    /// Index of the strand the tube follows among the component's arcs.
    pub strand: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThickSphere {
    pub weight: usize,
    pub component: usize,
    pub tube: Option<TubeChoice>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BodyKind {
    Ball,
    Shell,
    Pants,
}

/// Which piece of its sphere-decomposition component a compression body is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BodyRole {
    /// Inside the push-off of a ball.
    BallCore,
    /// Between a ball's boundary and its push-off.
    BallCollar,
    /// Between `W` and the tubed sphere.
    PantsCollar,
    /// Between `U`, `V` and the tubed sphere.
    PantsCore,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompressionBody {
    pub kind: BodyKind,
    pub role: BodyRole,
    pub component: usize,
    /// Thick sphere forming the upper boundary.
    pub plus: usize,
    /// Thin spheres forming the lower boundary.
    pub minus: Vec<usize>,
    pub vertical: usize,
    pub bridges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipleHeegaardSplitting {
    pub thick: Vec<ThickSphere>,
    /// Weights of the thin spheres, indexed like the sphere-decomposition.
    pub thin: Vec<usize>,
    pub bodies: Vec<CompressionBody>,
}

/// Ordered multiset of `(genus, weight)` over thick surfaces, largest first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingWidth {
    pub complexities: Vec<(usize, usize)>,
}

impl SplittingWidth {
    pub fn new(mut complexities: Vec<(usize, usize)>) -> Self {
        complexities.sort_unstable_by(|a, b| b.cmp(a));
        Self { complexities }
    }

    pub fn cost(&self) -> usize {
        self.complexities.iter().map(|c| c.1).max().unwrap_or(0)
    }
}

impl PartialOrd for SplittingWidth {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SplittingWidth {
    fn cmp(&self, other: &Self) -> Ordering {
        self.complexities.cmp(&other.complexities)
    }
}

impl std::fmt::Display for SplittingWidth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .complexities
            .iter()
            .map(|(g, w)| format!("({g},{w})"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Picks the strand to tube along in pants component `c`: the joined pair
/// minimizing `u + v`, ties broken by sphere indices, then the first such strand.
pub fn choose_tube_strand(sd: &SphereDecomposition, c: usize) -> Result<TubeChoice> {
    let comp = &sd.components[c];
    let mut best: Option<(usize, [usize; 2], usize)> = None;
    for (i, arc) in comp.arcs.iter().enumerate() {
        let [a, b] = arc.ends;
        if a == b {
            continue;
        }
        let pair = [a.min(b), a.max(b)];
        let key = (sd.spheres[a].weight + sd.spheres[b].weight, pair, i);
        if best.is_none_or(|bk| key < bk) {
            best = Some(key);
        }
    }
    let (_, joined, strand) = best.ok_or(Error::NoCrossStrand { component: c })?;
    let other = *comp
        .spheres
        .iter()
        .find(|s| !joined.contains(s))
        .ok_or_else(|| {
            Error::InvalidSplitting(format!("pants {c} has a repeated boundary sphere"))
        })?;
    Ok(TubeChoice {
        joined,
        other,
        strand,
    })
}

pub fn tube(sd: &SphereDecomposition) -> Result<MultipleHeegaardSplitting> {
    sd.validate()?;
    let thin: Vec<usize> = sd.weights();
    let mut thick = Vec::with_capacity(sd.components.len());
    let mut bodies = Vec::with_capacity(2 * sd.components.len());
    for (c, comp) in sd.components.iter().enumerate() {
        let plus = thick.len();
        match comp.kind {
            ComponentKind::Ball => {
                let s = comp.spheres[0];
                thick.push(ThickSphere {
                    weight: thin[s],
                    component: c,
                    tube: None,
                });
                bodies.push(CompressionBody {
                    kind: BodyKind::Ball,
                    role: BodyRole::BallCore,
                    component: c,
                    plus,
                    minus: Vec::new(),
                    vertical: 0,
                    bridges: comp.arcs.len(),
                });
                bodies.push(CompressionBody {
                    kind: BodyKind::Shell,
                    role: BodyRole::BallCollar,
                    component: c,
                    plus,
                    minus: vec![s],
                    vertical: thin[s],
                    bridges: 0,
                });
            }
            ComponentKind::Pants => {
                let choice = choose_tube_strand(sd, c)?;
                let [u, v] = choice.joined;
                let w = choice.other;
                thick.push(ThickSphere {
                    weight: thin[u] + thin[v],
                    component: c,
                    tube: Some(choice),
                });
                let mut vertical = 0;
                let mut bridges = 0;
                for arc in &comp.arcs {
                    let touches_w = arc.ends.iter().filter(|&&s| s == w).count();
                    match touches_w {
                        0 => bridges += 1,
                        1 => vertical += 1,
                        _ => {
                            return Err(Error::InvalidSplitting(format!(
                                "pants {c} has a strand with both ends on the untubed sphere"
                            )))
                        }
                    }
                }
                bodies.push(CompressionBody {
                    kind: BodyKind::Shell,
                    role: BodyRole::PantsCollar,
                    component: c,
                    plus,
                    minus: vec![w],
                    vertical,
                    bridges,
                });
                bodies.push(CompressionBody {
                    kind: BodyKind::Pants,
                    role: BodyRole::PantsCore,
                    component: c,
                    plus,
                    minus: vec![u, v],
                    vertical: thin[u] + thin[v],
                    bridges: 0,
                });
            }
        }
    }
    let mhs = MultipleHeegaardSplitting {
        thick,
        thin,
        bodies,
    };
    mhs.validate()?;
    Ok(mhs)
}

/// Checks one compression body against the rule for its role.
pub fn classify_compression_body(
    mhs: &MultipleHeegaardSplitting,
    body: &CompressionBody,
) -> Result<BodyKind> {
    let bad = |m: String| Err(Error::InvalidSplitting(m));
    let kind = match body.minus.len() {
        0 => BodyKind::Ball,
        1 => BodyKind::Shell,
        2 => BodyKind::Pants,
        k => return bad(format!("compression body with {k} lower boundary spheres")),
    };
    if kind != body.kind {
        return bad(format!("{:?} recorded as {:?}", kind, body.kind));
    }
    let plus = mhs.thick[body.plus].weight;
    let minus: usize = body.minus.iter().map(|&s| mhs.thin[s]).sum();
    if body.vertical != minus {
        return bad(format!(
            "{} vertical arcs but the lower boundary meets the knot {minus} times",
            body.vertical
        ));
    }
    if body.vertical + 2 * body.bridges != plus {
        return bad(format!(
            "{} vertical arcs and {} bridges do not meet the upper boundary {plus} times",
            body.vertical, body.bridges
        ));
    }
    let fits = match body.role {
        BodyRole::BallCore => kind == BodyKind::Ball && body.bridges >= 1,
        BodyRole::BallCollar => kind == BodyKind::Shell && body.bridges == 0,
        BodyRole::PantsCollar => kind == BodyKind::Shell,
        BodyRole::PantsCore => kind == BodyKind::Pants && body.bridges == 0,
    };
    if !fits {
        return bad(format!(
            "{:?} body does not match its {:?} case",
            kind, body.role
        ));
    }
    Ok(kind)
}

impl MultipleHeegaardSplitting {
    pub fn validate(&self) -> Result<()> {
        let mut plus_count = vec![0usize; self.thick.len()];
        let mut minus_count = vec![0usize; self.thin.len()];
        for body in &self.bodies {
            if body.plus >= self.thick.len() || body.minus.iter().any(|&s| s >= self.thin.len()) {
                return Err(Error::InvalidSplitting("surface index out of range".into()));
            }
            plus_count[body.plus] += 1;
            for &s in &body.minus {
                minus_count[s] += 1;
            }
            classify_compression_body(self, body)?;
        }
        if let Some(t) = plus_count.iter().position(|&k| k != 2) {
            return Err(Error::InvalidSplitting(format!(
                "thick sphere {t} bounds {} compression bodies",
                plus_count[t]
            )));
        }
        if let Some(s) = minus_count.iter().position(|&k| k != 2) {
            return Err(Error::InvalidSplitting(format!(
                "thin sphere {s} bounds {} compression bodies",
                minus_count[s]
            )));
        }
        Ok(())
    }

    pub fn cost(&self) -> usize {
        self.thick.iter().map(|t| t.weight).max().unwrap_or(0)
    }

    /// All surfaces here are spheres, so every genus is zero.
    pub fn width(&self) -> SplittingWidth {
        SplittingWidth::new(self.thick.iter().map(|t| (0, t.weight)).collect())
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Record<'a> {
            schema: &'a str,
            #[serde(flatten)]
            mhs: &'a MultipleHeegaardSplitting,
        }
        serde_json::to_string_pretty(&Record {
            schema: SPLITTING_SCHEMA,
            mhs: self,
        })
        .expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Record {
            schema: String,
            #[serde(flatten)]
            mhs: MultipleHeegaardSplitting,
        }
        let rec: Record = serde_json::from_str(text)?;
        if rec.schema != SPLITTING_SCHEMA {
            return Err(Error::Json(format!("unexpected schema {:?}", rec.schema)));
        }
        rec.mhs.validate()?;
        Ok(rec.mhs)
    }

    /// Compression bodies as nodes, joined across the surfaces they share.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph splitting {\n");
        for (i, b) in self.bodies.iter().enumerate() {
            let _ = writeln!(
                s,
                "  c{i} [label=\"{:?} {}v {}b\"];",
                b.kind, b.vertical, b.bridges
            );
        }
        for t in 0..self.thick.len() {
            let pair: Vec<usize> = (0..self.bodies.len())
                .filter(|&i| self.bodies[i].plus == t)
                .collect();
            if let [a, b] = pair[..] {
                let _ = writeln!(
                    s,
                    "  c{a} -- c{b} [style=bold,label=\"{}\"];",
                    self.thick[t].weight
                );
            }
        }
        for (t, w) in self.thin.iter().enumerate() {
            let pair: Vec<usize> = (0..self.bodies.len())
                .filter(|&i| self.bodies[i].minus.contains(&t))
                .collect();
            if let [a, b] = pair[..] {
                let _ = writeln!(s, "  c{a} -- c{b} [style=dashed,label=\"{w}\"];");
            }
        }
        s.push_str("}\n");
        s
    }
}
