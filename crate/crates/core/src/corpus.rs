//! Named test instances: small graphs and a few non-graphic matroids.

use crate::elemset::ElemSet;
use crate::graph::Multigraph;
use crate::matroid::{build_matroid, dual_matroid, Matroid};

/// Named graphs, roughly in order of size.
pub const GRAPH_NAMES: &[&str] = &[
    "C3",
    "parallel3",
    "theta",
    "loop-edge",
    "K4",
    "W4",
    "K3,3",
    "prism",
    "K5",
    "W5",
    "Petersen",
];

/// Named matroids that are not given as graphs.
pub const MATROID_NAMES: &[&str] = &["U24", "F7", "F7*", "M*(K5)", "M*(K3,3)"];

fn from_pairs(pairs: &[(&str, &str)]) -> Multigraph {
    let triples: Vec<(String, String, String)> = pairs
        .iter()
        .map(|(u, v)| (u.to_string(), v.to_string(), format!("{u}{v}")))
        .collect();
    Multigraph::from_triples(&triples).expect("corpus graphs are well formed")
}

fn from_triples(triples: &[(&str, &str, &str)]) -> Multigraph {
    Multigraph::from_triples(triples).expect("corpus graphs are well formed")
}

fn wheel(n: usize) -> Multigraph {
    let rim: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut triples = Vec::new();
    for r in &rim {
        triples.push(("h".to_string(), r.clone(), format!("h{r}")));
    }
    for i in 0..n {
        let (u, v) = (&rim[i], &rim[(i + 1) % n]);
        triples.push((u.clone(), v.clone(), format!("{u}{v}")));
    }
    Multigraph::from_triples(&triples).expect("wheels are well formed")
}

pub fn graph(name: &str) -> Option<Multigraph> {
    let g = match name {
        "C3" => from_triples(&[("1", "2", "a"), ("2", "3", "b"), ("3", "1", "c")]),
        "parallel3" => from_triples(&[("u", "v", "e"), ("u", "v", "f"), ("u", "v", "g")]),
        "theta" => from_triples(&[
            ("u", "a", "p1"),
            ("a", "v", "p2"),
            ("u", "b", "q1"),
            ("b", "v", "q2"),
            ("u", "v", "r"),
        ]),
        "loop-edge" => from_triples(&[
            ("u", "u", "l"),
            ("u", "v", "e"),
            ("v", "w", "f"),
            ("w", "u", "g"),
        ]),
        "K4" => from_pairs(&[
            ("1", "2"),
            ("2", "3"),
            ("3", "4"),
            ("4", "1"),
            ("1", "3"),
            ("2", "4"),
        ]),
        "K5" => {
            let mut pairs = Vec::new();
            let names = ["1", "2", "3", "4", "5"];
            for i in 0..5 {
                for j in i + 1..5 {
                    pairs.push((names[i], names[j]));
                }
            }
            from_pairs(&pairs)
        }
        "K3,3" => {
            let mut pairs = Vec::new();
            for u in ["1", "2", "3"] {
                for v in ["a", "b", "c"] {
                    pairs.push((u, v));
                }
            }
            from_pairs(&pairs)
        }
        "W4" => wheel(4),
        "W5" => wheel(5),
        "prism" => from_pairs(&[
            ("1", "2"),
            ("2", "3"),
            ("1", "3"),
            ("4", "5"),
            ("5", "6"),
            ("4", "6"),
            ("1", "4"),
            ("2", "5"),
            ("3", "6"),
        ]),
        "Petersen" => from_pairs(&[
            ("0", "1"),
            ("1", "2"),
            ("2", "3"),
            ("3", "4"),
            ("0", "4"),
            ("0", "5"),
            ("1", "6"),
            ("2", "7"),
            ("3", "8"),
            ("4", "9"),
            ("5", "7"),
            ("7", "9"),
            ("6", "9"),
            ("6", "8"),
            ("5", "8"),
        ]),
        _ => return None,
    };
    Some(g)
}

/// The uniform matroid `U_{r,n}` on labels `1..=n`.
pub fn uniform(r: usize, n: usize) -> Matroid {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let circuits: Vec<Vec<String>> = ElemSet::full(n)
        .subsets()
        .filter(|s| s.len() == r + 1)
        .map(|s| s.iter().map(|i| labels[i].clone()).collect())
        .collect();
    build_matroid(&labels, &circuits).expect("uniform matroids are valid")
}

pub fn fano() -> Matroid {
    let lines = [
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 7],
        [5, 6, 1],
        [6, 7, 2],
        [7, 1, 3],
    ];
    let labels: Vec<String> = (1..=7).map(|i: usize| i.to_string()).collect();
    let mut circuits: Vec<Vec<String>> = Vec::new();
    for line in lines {
        circuits.push(line.iter().map(|i| i.to_string()).collect());
        circuits.push(
            (1..=7)
                .filter(|i| !line.contains(i))
                .map(|i| i.to_string())
                .collect(),
        );
    }
    build_matroid(&labels, &circuits).expect("the Fano plane is a matroid")
}

/// Corpus matroid by name: a named non-graphic matroid, or the cycle
/// matroid of a named graph.
pub fn matroid(name: &str) -> Option<Matroid> {
    match name {
        "U24" => Some(uniform(2, 4)),
        "F7" => Some(fano()),
        "F7*" => Some(dual_matroid(&fano())),
        "M*(K5)" => Some(dual_matroid(&graph("K5")?.cycle_matroid().ok()?)),
        "M*(K3,3)" => Some(dual_matroid(&graph("K3,3")?.cycle_matroid().ok()?)),
        _ => graph(name)?.cycle_matroid().ok(),
    }
}

/// Every connected simple graph on the labeled vertex sets `{1}`, `{1,2}`,
/// `{1,2,3}` and `{1,2,3,4}`, named `n<k>:<edge labels>`.
pub fn small_connected_graphs() -> Vec<(String, Multigraph)> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(String, usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &(i, j))| (format!("{}{}", names[i], names[j]), i, j))
                .collect();
            let labels: Vec<&str> = edges.iter().map(|e| e.0.as_str()).collect();
            let name = format!("n{n}:{}", labels.join(","));
            let g = Multigraph::new(names.clone(), edges.clone()).expect("simple graphs are valid");
            if g.components().len() == 1 {
                out.push((name, g));
            }
        }
    }
    out
}
