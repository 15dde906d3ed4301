//! The Misra–Miwa crystal on partitions.
//!
//! For a residue `i`, the `i`-signature lists `+` for every addable `i`-box and
//! `-` for every removable `i`-box, read along the rim from bottom left to top
//! right. Cancelling adjacent `+-` pairs leaves a word `-^a +^b`; the rightmost
//! surviving `-` is the good box (removed by `ẽ_i`) and the leftmost surviving
//! `+` is the cogood box (added by `f̃_i`).

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::fock::{weight, Weight};
use crate::partition::{partitions_up_to, Cell, Modulus, Partition, Residue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A signed word of boxes in rim order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub symbols: Vec<(Sign, Cell)>,
}

impl Signature {
    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        self.symbols.iter().map(|s| s.0)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    fn count(&self, sign: Sign) -> usize {
        self.signs().filter(|&s| s == sign).count()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.signs() {
            f.write_char(match s {
                Sign::Plus => '+',
                Sign::Minus => '-',
            })?;
        }
        Ok(())
    }
}

pub fn signature(lambda: &Partition, i: Residue) -> Signature {
    let e = i.modulus();
    let mut symbols: Vec<(Sign, Cell)> = lambda
        .addable_cells()
        .into_iter()
        .filter(|c| c.residue(e) == i)
        .map(|c| (Sign::Plus, c))
        .chain(lambda.removable_cells().into_iter().filter(|c| c.residue(e) == i).map(|c| (Sign::Minus, c)))
        .collect();
    // addable and removable boxes sit on distinct diagonals
    symbols.sort_by_key(|(_, c)| c.content());
    Signature { symbols }
}

/// Cancels `+-` pairs with a single left-to-right stack scan.
pub fn reduced_signature(s: &Signature) -> Signature {
    let mut minus = Vec::new();
    let mut plus: Vec<(Sign, Cell)> = Vec::new();
    for &sym in &s.symbols {
        match sym.0 {
            Sign::Plus => plus.push(sym),
            Sign::Minus => {
                if plus.pop().is_none() {
                    minus.push(sym);
                }
            }
        }
    }
    minus.extend(plus);
    Signature { symbols: minus }
}

pub fn good_cell(lambda: &Partition, i: Residue) -> Option<Cell> {
    reduced_signature(&signature(lambda, i)).symbols.iter().rev().find(|s| s.0 == Sign::Minus).map(|s| s.1)
}

pub fn cogood_cell(lambda: &Partition, i: Residue) -> Option<Cell> {
    reduced_signature(&signature(lambda, i)).symbols.iter().find(|s| s.0 == Sign::Plus).map(|s| s.1)
}

/// Removes the `i`-good box, if there is one.
pub fn e_tilde(lambda: &Partition, i: Residue) -> Option<Partition> {
    good_cell(lambda, i).map(|c| lambda.remove_cell(c).expect("good boxes are removable"))
}

/// Adds the `i`-cogood box, if there is one.
pub fn f_tilde(lambda: &Partition, i: Residue) -> Option<Partition> {
    cogood_cell(lambda, i).map(|c| lambda.add_cell(c).expect("cogood boxes are addable"))
}

/// Number of `i`-normal boxes.
pub fn epsilon(lambda: &Partition, i: Residue) -> usize {
    reduced_signature(&signature(lambda, i)).count(Sign::Minus)
}

/// Number of `i`-conormal boxes.
pub fn phi(lambda: &Partition, i: Residue) -> usize {
    reduced_signature(&signature(lambda, i)).count(Sign::Plus)
}

/// Distinct residues of the addable boxes of `λ`; the only `i` with `f̃_i λ` possibly defined.
fn addable_residues(lambda: &Partition, e: Modulus) -> BTreeSet<Residue> {
    lambda.addable_cells().into_iter().map(|c| c.residue(e)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalNode {
    pub partition: Partition,
    pub size: usize,
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalEdge {
    pub src: Partition,
    pub dst: Partition,
    pub residue: i64,
}

/// The crystal restricted to partitions of size at most `max_size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalGraph {
    #[serde(serialize_with = "ser_modulus")]
    pub modulus: Modulus,
    #[serde(skip)]
    pub max_size: usize,
    pub nodes: Vec<CrystalNode>,
    /// Sorted by (position of source in `nodes`, residue).
    pub edges: Vec<CrystalEdge>,
}

fn ser_modulus<S: serde::Serializer>(m: &Modulus, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u32(m.value())
}

pub fn crystal_graph(modulus: Modulus, max_size: usize) -> CrystalGraph {
    let nodes: Vec<CrystalNode> = partitions_up_to(max_size)
        .into_iter()
        .map(|p| CrystalNode { size: p.size(), weight: weight(&p, modulus), partition: p })
        .collect();
    let mut edges = Vec::new();
    for node in nodes.iter().filter(|n| n.size < max_size) {
        for i in addable_residues(&node.partition, modulus) {
            if let Some(dst) = f_tilde(&node.partition, i) {
                edges.push(CrystalEdge { src: node.partition.clone(), dst, residue: i.value() });
            }
        }
    }
    CrystalGraph { modulus, max_size, nodes, edges }
}

impl CrystalGraph {
    /// Nodes reachable from `∅` along edges.
    pub fn reachable_from_empty(&self) -> BTreeSet<Partition> {
        let mut out_edges: BTreeMap<&Partition, Vec<&Partition>> = BTreeMap::new();
        for e in &self.edges {
            out_edges.entry(&e.src).or_default().push(&e.dst);
        }
        let mut seen = BTreeSet::from([Partition::empty()]);
        let mut queue = VecDeque::from([Partition::empty()]);
        while let Some(p) = queue.pop_front() {
            for &q in out_edges.get(&p).map(Vec::as_slice).unwrap_or_default() {
                if seen.insert(q.clone()) {
                    queue.push_back(q.clone());
                }
            }
        }
        seen
    }

    /// Nodes with no incoming edge, i.e. `ẽ_i λ = 0` for every `i`.
    pub fn highest_weight_nodes(&self) -> Vec<Partition> {
        let targets: BTreeSet<&Partition> = self.edges.iter().map(|e| &e.dst).collect();
        self.nodes.iter().map(|n| &n.partition).filter(|p| !targets.contains(p)).cloned().collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph crystal {{").unwrap();
        writeln!(out, "  // modulus {}", self.modulus).unwrap();
        for n in &self.nodes {
            writeln!(out, "  \"{}\" [label=\"{}\"];", n.partition, n.partition).unwrap();
        }
        for e in &self.edges {
            writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", e.src, e.dst, e.residue).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn r(v: i64, e: u32) -> Residue {
        Residue::new(v, Modulus::new(e).unwrap()).unwrap()
    }

    fn word(s: &str) -> Signature {
        Signature {
            symbols: s
                .chars()
                .enumerate()
                .map(|(k, ch)| {
                    let sign = if ch == '+' { Sign::Plus } else { Sign::Minus };
                    (sign, Cell::new(1, k as u32 + 1))
                })
                .collect(),
        }
    }

    #[test]
    fn signatures() {
        let s = signature(&partition![1], r(1, 2));
        assert_eq!(s.to_string(), "++");
        assert_eq!(s.symbols[0].1, Cell::new(2, 1));
        assert_eq!(s.symbols[1].1, Cell::new(1, 2));
        assert_eq!(signature(&partition![2], r(1, 2)).to_string(), "+-");
        assert_eq!(signature(&Partition::empty(), r(0, 3)).to_string(), "+");
    }

    #[test]
    fn reduction() {
        assert_eq!(reduced_signature(&word("+-")).to_string(), "");
        assert_eq!(reduced_signature(&word("-+")).to_string(), "-+");
        let red = reduced_signature(&word("++-"));
        assert_eq!(red.to_string(), "+");
        assert_eq!(red.symbols[0].1, Cell::new(1, 1));
    }

    #[test]
    fn operators() {
        for i in 0..3 {
            assert_eq!(e_tilde(&Partition::empty(), r(i, 3)), None);
        }
        assert_eq!(e_tilde(&partition![1, 1], r(1, 2)), Some(partition![1]));
        assert_eq!(e_tilde(&partition![2], r(1, 2)), None);
        assert_eq!(f_tilde(&Partition::empty(), r(0, 3)), Some(partition![1]));
        assert_eq!(f_tilde(&partition![1], r(1, 2)), Some(partition![1, 1]));
        assert_eq!(f_tilde(&partition![2], r(1, 2)), None);
    }

    #[test]
    fn string_counts() {
        assert_eq!((epsilon(&Partition::empty(), r(0, 2)), phi(&Partition::empty(), r(0, 2))), (0, 1));
        assert_eq!((epsilon(&partition![1, 1], r(1, 2)), phi(&partition![1, 1], r(1, 2))), (1, 1));
        assert_eq!((epsilon(&partition![1], r(1, 2)), phi(&partition![1], r(1, 2))), (0, 2));
    }

    #[test]
    fn small_graphs() {
        let e2 = Modulus::new(2).unwrap();
        let g = crystal_graph(e2, 1);
        assert_eq!(g.nodes.len(), 2);
        assert_eq!(g.edges, vec![CrystalEdge { src: Partition::empty(), dst: partition![1], residue: 0 }]);

        let g = crystal_graph(Modulus::new(3).unwrap(), 2);
        let edges: Vec<(String, String, i64)> =
            g.edges.iter().map(|e| (e.src.to_string(), e.dst.to_string(), e.residue)).collect();
        assert_eq!(
            edges,
            vec![("[]".into(), "[1]".into(), 0), ("[1]".into(), "[2]".into(), 1), ("[1]".into(), "[1,1]".into(), 2),]
        );

        assert_eq!(crystal_graph(e2, 4).nodes.len(), 12);
    }

    #[test]
    fn dot_output() {
        let dot = crystal_graph(Modulus::new(2).unwrap(), 1).to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("\"[]\" -> \"[1]\" [label=\"0\"];"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn json_shape() {
        let g = crystal_graph(Modulus::new(3).unwrap(), 1);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(
            json,
            r#"{"modulus":3,"nodes":[{"partition":"[]","size":0,"weight":{}},{"partition":"[1]","size":1,"weight":{"0":1}}],"edges":[{"src":"[]","dst":"[1]","residue":0}]}"#
        );
    }
}
