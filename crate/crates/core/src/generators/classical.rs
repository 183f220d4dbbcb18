use super::{check_max, check_min, finish, GeneratorError};
use crate::graph::{Graph, Vertex};

/// Small textbook families used as solver inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classical {
    Path(u32),
    Cycle(u32),
    Complete(u32),
    CompleteBipartite(u32, u32),
    /// `K_s + K̄_t`
    JoinCompleteEmpty(u32, u32),
    /// `K_s + (K_1 ∪ K_t)`
    JoinCompleteK1UnionKt(u32, u32),
}

const MAX_PART: u32 = 4096;

fn clique(vs: &[Vertex], edges: &mut Vec<(Vertex, Vertex)>) {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            edges.push((a, b));
        }
    }
}

fn join(xs: &[Vertex], ys: &[Vertex], edges: &mut Vec<(Vertex, Vertex)>) {
    for &a in xs {
        for &b in ys {
            edges.push((a, b));
        }
    }
}

fn named(prefix: &str, count: u32) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

pub fn classical(family: Classical) -> Result<Graph, GeneratorError> {
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let part = |labels: &mut Vec<String>, names: Vec<String>| -> Vec<Vertex> {
        let start = labels.len();
        labels.extend(names);
        (start..labels.len()).collect()
    };
    match family {
        Classical::Path(n) => {
            check_min("path", "n", n, 1)?;
            check_max("path", "n", n, MAX_PART)?;
            let vs = part(&mut labels, named("v", n));
            edges.extend(vs.windows(2).map(|w| (w[0], w[1])));
        }
        Classical::Cycle(n) => {
            check_min("cycle", "n", n, 3)?;
            check_max("cycle", "n", n, MAX_PART)?;
            let vs = part(&mut labels, named("v", n));
            edges.extend(vs.windows(2).map(|w| (w[0], w[1])));
            edges.push((vs[vs.len() - 1], vs[0]));
        }
        Classical::Complete(n) => {
            check_min("kn", "n", n, 1)?;
            check_max("kn", "n", n, MAX_PART)?;
            let vs = part(&mut labels, named("v", n));
            clique(&vs, &mut edges);
        }
        Classical::CompleteBipartite(s, t) => {
            check_min("kst", "s", s, 1)?;
            check_min("kst", "t", t, 1)?;
            check_max("kst", "s", s, MAX_PART)?;
            check_max("kst", "t", t, MAX_PART)?;
            let a = part(&mut labels, named("a", s));
            let b = part(&mut labels, named("b", t));
            join(&a, &b, &mut edges);
        }
        Classical::JoinCompleteEmpty(s, t) => {
            check_min("ks-plus-empty", "s", s, 1)?;
            check_min("ks-plus-empty", "t", t, 1)?;
            check_max("ks-plus-empty", "s", s, MAX_PART)?;
            check_max("ks-plus-empty", "t", t, MAX_PART)?;
            let k = part(&mut labels, named("k", s));
            let e = part(&mut labels, named("e", t));
            clique(&k, &mut edges);
            join(&k, &e, &mut edges);
        }
        Classical::JoinCompleteK1UnionKt(s, t) => {
            check_min("ks-plus-k1kt", "s", s, 1)?;
            check_min("ks-plus-k1kt", "t", t, 1)?;
            check_max("ks-plus-k1kt", "s", s, MAX_PART)?;
            check_max("ks-plus-k1kt", "t", t, MAX_PART)?;
            let k = part(&mut labels, named("k", s));
            let single = part(&mut labels, vec!["i1".to_string()]);
            let kt = part(&mut labels, named("t", t));
            clique(&k, &mut edges);
            clique(&kt, &mut edges);
            join(&k, &single, &mut edges);
            join(&k, &kt, &mut edges);
        }
    }
    let meta = vec![(); labels.len()];
    Ok(finish(labels, meta, &edges).0)
}
