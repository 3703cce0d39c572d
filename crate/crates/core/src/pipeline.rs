//! End-to-end run from a diagram to a multiple Heegaard splitting, checking
//! each inequality of the chain
//! `sphere cost <= cw <= 4k + 4` and `splitting cost <= 2 * sphere cost <= 8k + 8`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::carving::{
    exact_carving_width_with_cap, heuristic_bond_carving, tw_bounds_from_cw, CarvingDecomposition,
    WidthBounds,
};
use crate::diagram::{subdivide_to_simple, Diagram, SimpleDiagramGraph};
use crate::error::Result;
use crate::heegaard::{tube, MultipleHeegaardSplitting};
use crate::realize::{realize, CurveFamily};
use crate::spheres::{spheres_from_carving, SphereDecomposition};

#[derive(Debug, Clone, Copy)]
pub struct PipelineOptions {
    /// Tree-width bound to check against; derived from the carving when absent.
    pub k: Option<usize>,
    pub exact_cap: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            k: None,
            exact_cap: crate::carving::DEFAULT_EXACT_CAP,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub graph: SimpleDiagramGraph,
    pub carving: CarvingDecomposition,
    pub exact: bool,
    pub curves: CurveFamily,
    pub spheres: SphereDecomposition,
    pub splitting: MultipleHeegaardSplitting,
}

/// Carves the subdivided diagram graph with a bond decomposition, exactly when
/// it has at most `exact_cap` vertices, and builds every later stage.
pub fn run_pipeline(d: &Diagram, exact_cap: usize) -> Result<PipelineRun> {
    let graph = subdivide_to_simple(d);
    let g = graph.graph();
    let (carving, exact) = if g.vertex_count() <= exact_cap {
        (exact_carving_width_with_cap(&g, true, exact_cap)?.1, true)
    } else {
        (heuristic_bond_carving(&g)?, false)
    };
    let curves = realize(&graph, &carving)?;
    let spheres = spheres_from_carving(&graph, &carving, &curves)?;
    let splitting = tube(&spheres)?;
    Ok(PipelineRun {
        graph,
        carving,
        exact,
        curves,
        spheres,
        splitting,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCheck {
    pub name: String,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremMainReport {
    pub crossings: usize,
    pub graph_vertices: usize,
    pub carving_width: usize,
    pub carving_exact: bool,
    pub bounds: WidthBounds,
    pub k: usize,
    pub k_given: bool,
    pub sphere_cost: usize,
    pub sphere_width: Vec<usize>,
    pub pruned_sphere_width: Vec<usize>,
    pub splitting_cost: usize,
    pub splitting_width: String,
    pub checks: Vec<ChainCheck>,
}

pub fn theorem_main_report(d: &Diagram, opts: PipelineOptions) -> Result<TheoremMainReport> {
    let run = run_pipeline(d, opts.exact_cap)?;
    Ok(report_from_run(d, &run, opts.k))
}

pub fn report_from_run(d: &Diagram, run: &PipelineRun, k: Option<usize>) -> TheoremMainReport {
    let cw = run.carving.width();
    let g = run.graph.graph();
    let bounds = tw_bounds_from_cw(cw, g.max_degree());
    // Smallest k with cw <= 4(k + 1); every later bound only uses this inequality.
    let derived = cw.div_ceil(4).saturating_sub(1);
    let k_val = k.unwrap_or(derived);
    let sphere_cost = run.spheres.cost();
    let splitting_cost = run.splitting.cost();
    let check = |name: &str, lhs: usize, rhs: usize| ChainCheck {
        name: name.into(),
        lhs,
        rhs,
        holds: lhs <= rhs,
    };
    let checks = vec![
        check("sphere cost <= carving width", sphere_cost, cw),
        check("carving width <= 4k+4", cw, 4 * k_val + 4),
        check("sphere cost <= 4k+4", sphere_cost, 4 * k_val + 4),
        check(
            "splitting cost <= 2 * sphere cost",
            splitting_cost,
            2 * sphere_cost,
        ),
        check("splitting cost <= 8k+8", splitting_cost, 8 * k_val + 8),
    ];
    TheoremMainReport {
        crossings: d.crossing_count(),
        graph_vertices: run.graph.vertex_count(),
        carving_width: cw,
        carving_exact: run.exact,
        bounds,
        k: k_val,
        k_given: k.is_some(),
        sphere_cost,
        sphere_width: run.spheres.width_list(),
        pruned_sphere_width: run.spheres.pruned_width_list(),
        splitting_cost,
        splitting_width: run.splitting.width().to_string(),
        checks,
    }
}

impl TheoremMainReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn conclusion(&self) -> String {
        format!(
            "Either K has an essential planar meridional surface with at most {} boundary components, \
             or K has bridge number at most {}.",
            8 * self.k + 8,
            4 * self.k + 4
        )
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let list = |w: &[usize]| {
            w.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let _ = writeln!(
            s,
            "crossings: {}  graph vertices: {}",
            self.crossings, self.graph_vertices
        );
        let _ = writeln!(
            s,
            "carving width: {} ({})",
            self.carving_width,
            if self.carving_exact {
                "exact"
            } else {
                "heuristic upper bound"
            }
        );
        let _ = writeln!(
            s,
            "tree-width interval: [{}, {}]",
            self.bounds.tw_lower, self.bounds.tw_upper
        );
        let _ = writeln!(
            s,
            "k = {} ({})",
            self.k,
            if self.k_given {
                "given"
            } else {
                "from carving width"
            }
        );
        let _ = writeln!(s, "4k+4 = {}  8k+8 = {}", 4 * self.k + 4, 8 * self.k + 8);
        let _ = writeln!(
            s,
            "sphere cost: {}  width: {{{}}}",
            self.sphere_cost,
            list(&self.sphere_width)
        );
        let _ = writeln!(
            s,
            "pruned sphere width: {{{}}}",
            list(&self.pruned_sphere_width)
        );
        let _ = writeln!(
            s,
            "splitting cost: {}  width: {}",
            self.splitting_cost, self.splitting_width
        );
        for c in &self.checks {
            let _ = writeln!(
                s,
                "[{}] {}: {} <= {}",
                if c.holds { "ok" } else { "FAIL" },
                c.name,
                c.lhs,
                c.rhs
            );
        }
        let _ = writeln!(s, "{}", self.conclusion());
        s
    }

    pub fn markdown(&self) -> String {
        let mut s = String::from("| quantity | value |\n|---|---|\n");
        let rows = [
            ("crossings", self.crossings.to_string()),
            ("carving width", self.carving_width.to_string()),
            ("exact", self.carving_exact.to_string()),
            (
                "tree-width interval",
                format!("[{}, {}]", self.bounds.tw_lower, self.bounds.tw_upper),
            ),
            ("k", self.k.to_string()),
            ("4k+4", (4 * self.k + 4).to_string()),
            ("8k+8", (8 * self.k + 8).to_string()),
            ("sphere cost", self.sphere_cost.to_string()),
            ("splitting cost", self.splitting_cost.to_string()),
            ("splitting width", self.splitting_width.clone()),
        ];
        for (k, v) in rows {
            let _ = writeln!(s, "| {k} | {v} |");
        }
        s.push_str("\n| check | lhs | rhs | holds |\n|---|---|---|---|\n");
        for c in &self.checks {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} |",
                c.name,
                c.lhs,
                c.rhs,
                if c.holds { "yes" } else { "no" }
            );
        }
        let _ = writeln!(s, "\n{}", self.conclusion());
        s
    }
}
