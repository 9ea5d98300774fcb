use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ComponentClass {
    /// `K_m`, including the single vertex `K_1`.
    Complete { m: usize },
    /// `K_{a,b}` with `a <= b`; a lone edge is reported as `K_{1,1}`.
    CompleteBipartite { a: usize, b: usize },
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub vertices: Vec<usize>,
    pub class: ComponentClass,
}

/// Connected components ordered by their smallest vertex. Loops are ignored.
pub fn connected_components(g: &Graph) -> Vec<ComponentSummary> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for w in g.neighbors(comp[i]).iter() {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        let class = classify(g, &comp);
        out.push(ComponentSummary { vertices: comp, class });
    }
    out
}

fn classify(g: &Graph, comp: &[usize]) -> ComponentClass {
    let m = comp.len();
    if m == 1 {
        return ComponentClass::Complete { m: 1 };
    }
    if let Some((a, b)) = complete_bipartite_sides(g, comp) {
        return ComponentClass::CompleteBipartite { a: a.min(b), b: a.max(b) };
    }
    if comp.iter().all(|&v| g.degree(v) == m - 1) {
        return ComponentClass::Complete { m };
    }
    ComponentClass::Other
}

/// Side sizes if the connected vertex set `comp` induces a complete bipartite graph.
fn complete_bipartite_sides(g: &Graph, comp: &[usize]) -> Option<(usize, usize)> {
    let side: Vec<bool> = comp.iter().map(|&v| g.has_edge(comp[0], v)).collect();
    let a = side.iter().filter(|&&s| !s).count();
    let b = comp.len() - a;
    for (i, &u) in comp.iter().enumerate() {
        for (j, &v) in comp.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) != (side[i] != side[j]) {
                return None;
            }
        }
    }
    Some((a, b))
}
