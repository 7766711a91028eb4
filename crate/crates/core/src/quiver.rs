//! The three blocks of simple Harish-Chandra modules as quivers with
//! relations, radical filtrations of their indecomposable projectives, and
//! the decomposition of `Q(k)` and of `L(k) ⊗ P`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::multiset::Multiset;
use crate::sl2rep::{hc_tensor, parse_label, HCMultiset, ParseLabelError, SimpleFinDim, SimpleHC};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Block {
    /// `V(n)`, `n` odd
    Odd,
    /// `V(n)`, `n ≡ 2 mod 4`
    TwoMod4,
    /// `V'(0)`, `V'(2)` and `V(n)`, `n ≡ 0 mod 4`
    ZeroMod4,
}

impl Block {
    pub const ALL: [Block; 3] = [Block::Odd, Block::TwoMod4, Block::ZeroMod4];

    pub fn number(self) -> u8 {
        match self {
            Block::Odd => 1,
            Block::TwoMod4 => 2,
            Block::ZeroMod4 => 3,
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "block {}", self.number())
    }
}

pub fn block_of(s: SimpleHC) -> Block {
    match s {
        SimpleHC::VPrime0 | SimpleHC::VPrime2 => Block::ZeroMod4,
        SimpleHC::V(n) if n % 2 == 1 => Block::Odd,
        SimpleHC::V(n) if n % 4 == 2 => Block::TwoMod4,
        SimpleHC::V(_) => Block::ZeroMod4,
    }
}

/// Number of arrows `s -> t` (0 or 1).
pub fn ext_dim(s: SimpleHC, t: SimpleHC) -> u32 {
    use SimpleHC::*;
    let arrow = match (s, t) {
        (VPrime0, V(4)) | (V(4), VPrime0) | (VPrime2, V(4)) | (V(4), VPrime2) => true,
        (V(2), V(2)) => true,
        (V(1), V(3)) | (V(3), V(1)) => true,
        (V(m), V(n)) => block_of(s) == block_of(t) && m.abs_diff(n) == 4,
        _ => false,
    };
    arrow as u32
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub name: String,
    pub source: SimpleHC,
    pub target: SimpleHC,
}

/// A path as arrow indices in the order they are traversed.
pub type Path = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    Zero(Path),
    Equal(Path, Path),
}

/// One block, truncated to vertices of index at most `max_index`.
#[derive(Debug, Clone)]
pub struct QuiverPresentation {
    pub block: Block,
    pub max_index: u32,
    pub vertices: Vec<SimpleHC>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl QuiverPresentation {
    pub fn new(block: Block, max_index: u32) -> Self {
        let mut vertices: Vec<SimpleHC> = Vec::new();
        if block == Block::ZeroMod4 {
            vertices.extend([SimpleHC::VPrime0, SimpleHC::VPrime2]);
        }
        vertices.extend(
            (1..=max_index)
                .map(SimpleHC::V)
                .filter(|&v| block_of(v) == block),
        );

        let mut arrows = Vec::new();
        let named = |s: SimpleHC, t: SimpleHC| match (s, t) {
            (SimpleHC::VPrime0, _) => "a".to_string(),
            (_, SimpleHC::VPrime0) => "b".to_string(),
            (SimpleHC::VPrime2, _) => "c".to_string(),
            (_, SimpleHC::VPrime2) => "d".to_string(),
            _ if s == t => "loop".to_string(),
            _ => format!("{}>{}", s.index(), t.index()),
        };
        for &s in &vertices {
            for &t in &vertices {
                if ext_dim(s, t) == 1 {
                    arrows.push(Arrow {
                        name: named(s, t),
                        source: s,
                        target: t,
                    });
                }
            }
        }

        let find = |name: &str| arrows.iter().position(|a| a.name == name);
        let mut relations = Vec::new();
        for (i, x) in arrows.iter().enumerate() {
            for (j, y) in arrows.iter().enumerate() {
                if x.target != y.source || y.target != x.source {
                    continue;
                }
                let kept = matches!((x.name.as_str(), y.name.as_str()), ("b", "a") | ("d", "c"));
                if !kept {
                    relations.push(Relation::Zero(vec![i, j]));
                }
            }
        }
        if let (Some(a), Some(b), Some(c), Some(d)) = (find("a"), find("b"), find("c"), find("d")) {
            relations.push(Relation::Equal(vec![b, a], vec![d, c]));
            relations.push(Relation::Zero(vec![a, d]));
            relations.push(Relation::Zero(vec![c, b]));
        }
        QuiverPresentation {
            block,
            max_index,
            vertices,
            arrows,
            relations,
        }
    }

    /// A path written as a composition of arrow names, right to left.
    pub fn path_name(&self, p: &[usize]) -> String {
        let names: Vec<&str> = p
            .iter()
            .rev()
            .map(|&i| self.arrows[i].name.as_str())
            .collect();
        if names.iter().all(|n| n.len() == 1) {
            names.concat()
        } else {
            names.iter().map(|n| format!("[{n}]")).collect()
        }
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|r| match r {
                Relation::Zero(p) => format!("{} = 0", self.path_name(p)),
                Relation::Equal(p, q) => format!("{} = {}", self.path_name(p), self.path_name(q)),
            })
            .collect()
    }

    /// Layer multiplicities of the projective cover of `top`: layer `l` counts
    /// the endpoints of length-`l` paths from `top` that survive the relations.
    pub fn layers(&self, top: SimpleHC, depth: usize) -> Vec<HCMultiset> {
        assert!(
            self.vertices.contains(&top),
            "{top} is not a vertex of this block"
        );
        let mut zero: Vec<Path> = Vec::new();
        let mut swaps: Vec<(Path, Path)> = Vec::new();
        for r in &self.relations {
            match r {
                Relation::Zero(p) => zero.push(p.clone()),
                Relation::Equal(p, q) => {
                    swaps.push((p.clone(), q.clone()));
                    swaps.push((q.clone(), p.clone()));
                }
            }
        }
        let contains =
            |hay: &[usize], needle: &[usize]| hay.windows(needle.len()).any(|w| w == needle);

        let mut out = vec![HCMultiset::from_iter([top])];
        let mut paths: Vec<Path> = vec![Vec::new()];
        for _ in 1..=depth {
            paths = paths
                .iter()
                .flat_map(|p| {
                    let end = p.last().map_or(top, |&i| self.arrows[i].target);
                    self.arrows
                        .iter()
                        .enumerate()
                        .filter(move |(_, a)| a.source == end)
                        .map(move |(i, _)| {
                            let mut q = p.clone();
                            q.push(i);
                            q
                        })
                })
                .collect();

            let index: HashMap<&Path, usize> =
                paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut uf = UnionFind::new(paths.len());
            for (i, p) in paths.iter().enumerate() {
                for (from, to) in &swaps {
                    for pos in 0..p.len().saturating_sub(from.len() - 1) {
                        if p[pos..pos + from.len()] == from[..] {
                            let mut q = p.clone();
                            q.splice(pos..pos + from.len(), to.iter().copied());
                            if let Some(&j) = index.get(&q) {
                                uf.union(i, j);
                            }
                        }
                    }
                }
            }
            let mut dead = vec![false; paths.len()];
            for (i, p) in paths.iter().enumerate() {
                if zero.iter().any(|z| contains(p, z)) {
                    let r = uf.find(i);
                    dead[r] = true;
                }
            }
            let mut layer = HCMultiset::new();
            let mut seen = vec![false; paths.len()];
            for (i, p) in paths.iter().enumerate() {
                let r = uf.find(i);
                if !dead[r] && !seen[r] {
                    seen[r] = true;
                    layer.insert(self.arrows[*p.last().expect("nonempty")].target, 1);
                }
            }
            out.push(layer);
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

/// Vertex window that contains every path of length `depth` from `top`.
pub fn window(top: SimpleHC, depth: usize) -> u32 {
    top.index() + 4 * (depth as u32 + 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalFiltration {
    pub top: SimpleHC,
    pub depth: usize,
    pub layers: Vec<HCMultiset>,
}

impl RadicalFiltration {
    /// Union of all computed layers.
    pub fn composition_factors(&self) -> HCMultiset {
        let mut all = HCMultiset::new();
        for l in &self.layers {
            all.add(l);
        }
        all
    }

    pub fn is_uniserial(&self) -> bool {
        self.layers.iter().all(|l| l.total() == 1)
    }
}

impl fmt::Display for RadicalFiltration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .layers
            .iter()
            .map(|l| {
                let items: Vec<String> = l
                    .iter()
                    .flat_map(|(s, m)| std::iter::repeat_n(s.to_string(), m as usize))
                    .collect();
                if items.len() == 1 {
                    items[0].clone()
                } else {
                    format!("{{{}}}", items.join(", "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" / "))
    }
}

pub fn radical_filtration(top: SimpleHC, depth: usize) -> RadicalFiltration {
    let q = QuiverPresentation::new(block_of(top), window(top, depth));
    RadicalFiltration {
        top,
        depth,
        layers: q.layers(top, depth),
    }
}

/// Indecomposable projective, named by its simple top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Projective(pub SimpleHC);

impl fmt::Display for Projective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0.to_string();
        write!(f, "P{}", &s[1..])
    }
}

impl Serialize for Projective {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Projective {
    type Err = ParseLabelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_label(s).map(Projective)
    }
}

impl From<SimpleHC> for Projective {
    fn from(s: SimpleHC) -> Self {
        Projective(s)
    }
}

pub type ProjMultiset = Multiset<Projective>;

/// `Q(k) = L(k) ⊗ Q(0)` as a sum of indecomposable projectives.
#[allow(non_snake_case)]
pub fn decompose_Q(k: u32) -> ProjMultiset {
    let mut out = ProjMultiset::new();
    let p = |n| Projective(SimpleHC::V(n));
    if k % 2 == 1 {
        (1..=k).step_by(2).for_each(|n| out.insert(p(n), 1));
    } else {
        let prime = if k.is_multiple_of(4) {
            SimpleHC::VPrime0
        } else {
            SimpleHC::VPrime2
        };
        out.insert(Projective(prime), 1);
        (2..=k).step_by(2).for_each(|n| out.insert(p(n), 1));
    }
    out
}

/// Same decomposition from g-types: `P_V` appears `[V : L(k)]` times.
pub fn decompose_q_by_g_types(k: u32) -> ProjMultiset {
    let mut out = ProjMultiset::new();
    let candidates = [SimpleHC::VPrime0, SimpleHC::VPrime2]
        .into_iter()
        .chain((1..=k).map(SimpleHC::V));
    for v in candidates {
        let m = v.g_types(k).count(&SimpleFinDim(k));
        if m > 0 {
            out.insert(Projective(v), m);
        }
    }
    out
}

/// `L(k) ⊗ P` by adjunction: `P_W` appears `[L(k) ⊗ W : top P]` times.
pub fn tensor_projective(k: u32, p: Projective) -> ProjMultiset {
    let top = p.0;
    let mut out = ProjMultiset::new();
    let candidates = [SimpleHC::VPrime0, SimpleHC::VPrime2]
        .into_iter()
        .chain((1..=top.index() + k + 2).map(SimpleHC::V));
    for w in candidates {
        let m = hc_tensor(k, w).count(&top);
        if m > 0 {
            out.insert(Projective(w), m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> SimpleHC {
        s.parse().unwrap()
    }

    fn ms(items: &[&str]) -> HCMultiset {
        items.iter().map(|s| v(s)).collect()
    }

    fn pm(items: &[&str]) -> ProjMultiset {
        items
            .iter()
            .map(|s| s.parse::<Projective>().unwrap())
            .collect()
    }

    #[test]
    fn blocks() {
        assert_eq!(block_of(v("V(7)")), Block::Odd);
        assert_eq!(block_of(v("V(2)")), Block::TwoMod4);
        assert_eq!(block_of(v("V'(2)")), Block::ZeroMod4);
        assert_eq!(block_of(v("V(8)")), Block::ZeroMod4);
    }

    #[test]
    fn ext_table() {
        assert_eq!(ext_dim(v("V1"), v("V5")), 1);
        assert_eq!(ext_dim(v("V2"), v("V2")), 1);
        assert_eq!(ext_dim(v("V1"), v("V7")), 0);
        assert_eq!(ext_dim(v("V3"), v("V1")), 1);
        assert_eq!(ext_dim(v("V'0"), v("V'2")), 0);
        assert_eq!(ext_dim(v("V4"), v("V'2")), 1);
        assert_eq!(ext_dim(v("V6"), v("V6")), 0);
        assert_eq!(ext_dim(v("V2"), v("V6")), 1);
        assert_eq!(ext_dim(v("V4"), v("V6")), 0);
    }

    #[test]
    fn arrows_come_in_pairs() {
        for b in Block::ALL {
            let q = QuiverPresentation::new(b, 40);
            for a in &q.arrows {
                assert_eq!(ext_dim(a.source, a.target), 1);
                assert!(q
                    .arrows
                    .iter()
                    .any(|x| x.source == a.target && x.target == a.source));
            }
            let n = q.arrows.len();
            let total: u32 = q
                .vertices
                .iter()
                .flat_map(|&s| q.vertices.iter().map(move |&t| ext_dim(s, t)))
                .sum();
            assert_eq!(total as usize, n);
        }
    }

    #[test]
    fn block_three_relations() {
        let q = QuiverPresentation::new(Block::ZeroMod4, 12);
        let r = q.relation_strings();
        assert!(r.contains(&"ab = cd".to_string()));
        assert!(r.contains(&"da = 0".to_string()));
        assert!(r.contains(&"bc = 0".to_string()));
        assert!(r.contains(&"ba = 0".to_string()));
        assert!(r.contains(&"dc = 0".to_string()));
        assert!(!r.contains(&"ab = 0".to_string()));
        let q2 = QuiverPresentation::new(Block::TwoMod4, 10);
        assert!(q2
            .relation_strings()
            .contains(&"[loop][loop] = 0".to_string()));
    }

    #[test]
    fn prime_tops_are_uniserial() {
        let f = radical_filtration(SimpleHC::VPrime0, 3);
        assert_eq!(
            f.layers,
            vec![ms(&["V'0"]), ms(&["V4"]), ms(&["V8"]), ms(&["V12"])]
        );
        for top in [SimpleHC::VPrime0, SimpleHC::VPrime2] {
            let f = radical_filtration(top, 10);
            assert!(f.is_uniserial());
            for (l, layer) in f.layers.iter().enumerate().skip(1) {
                assert_eq!(layer, &ms(&[&format!("V{}", 4 * l)]));
            }
        }
    }

    #[test]
    fn two_layer_diagrams() {
        let second = |s: &str| radical_filtration(v(s), 1).layers[1].clone();
        assert_eq!(second("V1"), ms(&["V3", "V5"]));
        assert_eq!(second("V2"), ms(&["V2", "V6"]));
        assert_eq!(second("V3"), ms(&["V1", "V7"]));
        assert_eq!(second("V4"), ms(&["V'0", "V'2", "V8"]));
        for k in 5..=20 {
            assert_eq!(
                second(&format!("V{k}")),
                ms(&[&format!("V{}", k - 4), &format!("V{}", k + 4)])
            );
        }
    }

    #[test]
    fn p2_and_p4() {
        let f = radical_filtration(v("V2"), 2);
        assert_eq!(
            f.layers,
            vec![ms(&["V2"]), ms(&["V2", "V6"]), ms(&["V6", "V10"])]
        );
        let f = radical_filtration(v("V4"), 3);
        assert_eq!(f.layers[2], ms(&["V4", "V12"]));
        assert_eq!(f.layers[3], ms(&["V8", "V16"]));
        assert_eq!(
            f.to_string(),
            "V(4) / {V'(0), V'(2), V(8)} / {V(4), V(12)} / {V(8), V(16)}"
        );
    }

    #[test]
    fn window_is_large_enough() {
        for top in [v("V1"), v("V4"), v("V'0"), v("V9")] {
            let d = 5;
            let wide = QuiverPresentation::new(block_of(top), window(top, d) + 20).layers(top, d);
            assert_eq!(radical_filtration(top, d).layers, wide);
        }
    }

    #[test]
    fn q_decomposition() {
        assert_eq!(decompose_Q(0), pm(&["P'0"]));
        assert_eq!(decompose_Q(5), pm(&["P1", "P3", "P5"]));
        assert_eq!(decompose_Q(6), pm(&["P'2", "P2", "P4", "P6"]));
        for k in 0..=16 {
            assert_eq!(decompose_Q(k), decompose_q_by_g_types(k), "k={k}");
        }
    }

    #[test]
    fn tensor_identities() {
        assert_eq!(tensor_projective(1, v("V'0").into()), pm(&["P1"]));
        assert_eq!(tensor_projective(1, v("V'2").into()), pm(&["P1"]));
        assert_eq!(
            tensor_projective(2, v("V1").into()),
            pm(&["P1", "P1", "P3"])
        );
        assert_eq!(
            tensor_projective(1, v("V1").into()),
            pm(&["P'0", "P'2", "P2"])
        );
        assert_eq!(
            tensor_projective(2, v("V5").into()),
            pm(&["P3", "P5", "P7"])
        );
        assert_eq!(tensor_projective(1, v("V6").into()), pm(&["P5", "P7"]));
        assert_eq!(tensor_projective(2, v("V'0").into()), pm(&["P'2", "P2"]));
    }

    #[test]
    fn projective_labels() {
        assert_eq!(Projective(SimpleHC::VPrime0).to_string(), "P'(0)");
        assert_eq!(Projective(SimpleHC::V(4)).to_string(), "P(4)");
        assert_eq!(
            "P(4)".parse::<Projective>().unwrap(),
            Projective(SimpleHC::V(4))
        );
    }
}
