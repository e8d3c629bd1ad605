//! Basic commutators (Hall elements) on an ordered alphabet.
//!
//! Generators are basic commutators of weight one, ordered by their position
//! in the alphabet. A bracket `[d_i, d_j]` of weight `t` is basic when both
//! children are basic with weights summing to `t`, `d_i > d_j` in the
//! canonical order, and, if `d_i = [d_s, d_t]`, additionally `d_j >= d_t`.
//! Within one weight class trees are ordered lexicographically by the order
//! indices of their children; classes are concatenated by ascending weight.
//!
//! The alphabet may be partitioned into letter groups (`x` letters before `y`
//! letters) so that mixed commutators, those using at least one letter from
//! each group, can be filtered and mapped to their two-letter group pattern.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::Error;

/// An ordered alphabet split into consecutive letter groups.
///
/// With groups `(d1, d2)` the letters are `x1 < ... < x{d1} < y1 < ... < y{d2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    group_sizes: Vec<usize>,
}

const GROUP_LETTERS: [char; 6] = ['x', 'y', 'z', 'u', 'v', 'w'];

impl Alphabet {
    pub fn single(d: usize) -> Self {
        Alphabet {
            group_sizes: vec![d],
        }
    }

    pub fn grouped(sizes: &[usize]) -> Self {
        assert!(!sizes.is_empty(), "alphabet needs at least one group");
        assert!(
            sizes.len() <= GROUP_LETTERS.len(),
            "at most {} letter groups supported",
            GROUP_LETTERS.len()
        );
        Alphabet {
            group_sizes: sizes.to_vec(),
        }
    }

    pub fn total_letters(&self) -> usize {
        self.group_sizes.iter().sum()
    }

    pub fn group_count(&self) -> usize {
        self.group_sizes.len()
    }

    pub fn group_sizes(&self) -> &[usize] {
        &self.group_sizes
    }

    /// Group containing the letter with the given index.
    pub fn group_of(&self, letter: usize) -> usize {
        let mut rest = letter;
        for (g, &size) in self.group_sizes.iter().enumerate() {
            if rest < size {
                return g;
            }
            rest -= size;
        }
        panic!("letter {letter} outside alphabet of {} letters", self.total_letters());
    }

    /// Printable name, e.g. `x2` for the second letter of the first group.
    pub fn letter_name(&self, letter: usize) -> String {
        let mut rest = letter;
        for (g, &size) in self.group_sizes.iter().enumerate() {
            if rest < size {
                return format!("{}{}", GROUP_LETTERS[g], rest + 1);
            }
            rest -= size;
        }
        panic!("letter {letter} outside alphabet of {} letters", self.total_letters());
    }
}

/// A basic commutator as a binary bracket tree with memoized weight and
/// multidegree. Nodes are reference-counted so generation at weight `w`
/// shares all lower-weight subtrees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CommTree(Arc<Node>);

#[derive(PartialEq, Eq, Hash)]
struct Node {
    kind: NodeKind,
    weight: usize,
    multidegree: Vec<usize>,
}

#[derive(PartialEq, Eq, Hash)]
enum NodeKind {
    Leaf(usize),
    Branch(CommTree, CommTree),
}

impl CommTree {
    pub fn leaf(letter: usize, alphabet: &Alphabet) -> Self {
        let n = alphabet.total_letters();
        assert!(letter < n);
        let mut multidegree = vec![0; n];
        multidegree[letter] = 1;
        CommTree(Arc::new(Node {
            kind: NodeKind::Leaf(letter),
            weight: 1,
            multidegree,
        }))
    }

    pub fn bracket(left: CommTree, right: CommTree) -> Self {
        assert_eq!(
            left.0.multidegree.len(),
            right.0.multidegree.len(),
            "children from different alphabets"
        );
        let weight = left.weight() + right.weight();
        let multidegree = left
            .0
            .multidegree
            .iter()
            .zip(&right.0.multidegree)
            .map(|(a, b)| a + b)
            .collect();
        CommTree(Arc::new(Node {
            kind: NodeKind::Branch(left, right),
            weight,
            multidegree,
        }))
    }

    pub fn weight(&self) -> usize {
        self.0.weight
    }

    /// Per-letter leaf tally, indexed like the alphabet.
    pub fn multidegree(&self) -> &[usize] {
        &self.0.multidegree
    }

    pub fn as_leaf(&self) -> Option<usize> {
        match self.0.kind {
            NodeKind::Leaf(letter) => Some(letter),
            NodeKind::Branch(..) => None,
        }
    }

    pub fn children(&self) -> Option<(&CommTree, &CommTree)> {
        match &self.0.kind {
            NodeKind::Leaf(_) => None,
            NodeKind::Branch(l, r) => Some((l, r)),
        }
    }

    /// Total leaf count drawn from letter group `g`.
    pub fn group_degree(&self, alphabet: &Alphabet, g: usize) -> usize {
        let mut start = 0;
        for (gi, &size) in alphabet.group_sizes().iter().enumerate() {
            if gi == g {
                return self.0.multidegree[start..start + size].iter().sum();
            }
            start += size;
        }
        panic!("group {g} outside alphabet");
    }

    /// Uses at least one letter from each of the two groups.
    pub fn is_mixed(&self, alphabet: &Alphabet) -> bool {
        alphabet.group_count() == 2
            && self.group_degree(alphabet, 0) >= 1
            && self.group_degree(alphabet, 1) >= 1
    }

    /// Nested-bracket text form, e.g. `[[y1,x1],x2]`.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        self.write_display(alphabet, &mut out);
        out
    }

    fn write_display(&self, alphabet: &Alphabet, out: &mut String) {
        match &self.0.kind {
            NodeKind::Leaf(letter) => {
                let _ = write!(out, "{}", alphabet.letter_name(*letter));
            }
            NodeKind::Branch(l, r) => {
                out.push('[');
                l.write_display(alphabet, out);
                out.push(',');
                r.write_display(alphabet, out);
                out.push(']');
            }
        }
    }

    /// Replaces each leaf by its group letter, mapping a mixed tree on groups
    /// `(d1, d2)` to its pattern on the two-letter alphabet `{x, y}`.
    pub fn shape_on_two_letters(&self, alphabet: &Alphabet) -> Result<CommTree, Error> {
        if alphabet.group_count() != 2 {
            return Err(Error::NeedTwoGroups(alphabet.group_count()));
        }
        if !self.is_mixed(alphabet) {
            return Err(Error::NotMixed);
        }
        let two = Alphabet::grouped(&[1, 1]);
        Ok(self.substitute_groups(alphabet, &two))
    }

    fn substitute_groups(&self, alphabet: &Alphabet, two: &Alphabet) -> CommTree {
        match &self.0.kind {
            NodeKind::Leaf(letter) => CommTree::leaf(alphabet.group_of(*letter), two),
            NodeKind::Branch(l, r) => CommTree::bracket(
                l.substitute_groups(alphabet, two),
                r.substitute_groups(alphabet, two),
            ),
        }
    }
}

impl std::fmt::Debug for CommTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.0.kind {
            NodeKind::Leaf(letter) => write!(f, "g{letter}"),
            NodeKind::Branch(l, r) => write!(f, "[{:?},{:?}]", l, r),
        }
    }
}

/// Reference to a generated tree as (weight, position within its weight class).
type TreeRef = (usize, usize);

struct HallEntry {
    tree: CommTree,
    /// Children refs; `None` for leaves.
    left: Option<TreeRef>,
    right: Option<TreeRef>,
}

/// The basic commutators of an alphabet, generated weight by weight up to a
/// bound. Generation is deterministic; the table is immutable afterwards.
pub struct HallSet {
    alphabet: Alphabet,
    max_weight: usize,
    by_weight: Vec<Vec<HallEntry>>,
    offsets: Vec<usize>,
    index_of: HashMap<CommTree, TreeRef>,
}

impl HallSet {
    pub fn new(alphabet: Alphabet, max_weight: usize) -> Self {
        assert!(max_weight >= 1, "max weight must be at least 1");
        let mut set = HallSet {
            alphabet,
            max_weight,
            by_weight: Vec::with_capacity(max_weight),
            offsets: Vec::with_capacity(max_weight),
            index_of: HashMap::new(),
        };
        for w in 1..=max_weight {
            let entries = set.generate_weight(w);
            set.offsets.push(set.index_of.len());
            for (pos, e) in entries.iter().enumerate() {
                set.index_of.insert(e.tree.clone(), (w, pos));
            }
            set.by_weight.push(entries);
        }
        set
    }

    fn generate_weight(&self, w: usize) -> Vec<HallEntry> {
        if w == 1 {
            return (0..self.alphabet.total_letters())
                .map(|letter| HallEntry {
                    tree: CommTree::leaf(letter, &self.alphabet),
                    left: None,
                    right: None,
                })
                .collect();
        }
        let mut candidates: Vec<(TreeRef, TreeRef)> = Vec::new();
        for w1 in 1..w {
            let w2 = w - w1;
            for i1 in 0..self.by_weight[w1 - 1].len() {
                let gi = self.global_index((w1, i1));
                let right_of_left = self.by_weight[w1 - 1][i1].right;
                for i2 in 0..self.by_weight[w2 - 1].len() {
                    let gj = self.global_index((w2, i2));
                    if gi <= gj {
                        continue; // d_i > d_j
                    }
                    if let Some(rt) = right_of_left {
                        if gj < self.global_index(rt) {
                            continue; // d_j >= d_t when d_i = [d_s, d_t]
                        }
                    }
                    candidates.push(((w1, i1), (w2, i2)));
                }
            }
        }
        candidates.sort_by_key(|&(l, r)| (self.global_index(l), self.global_index(r)));
        candidates
            .into_iter()
            .map(|(l, r)| HallEntry {
                tree: CommTree::bracket(self.tree(l).clone(), self.tree(r).clone()),
                left: Some(l),
                right: Some(r),
            })
            .collect()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// Trees of one weight class, in canonical order.
    pub fn trees_of_weight(&self, w: usize) -> impl ExactSizeIterator<Item = &CommTree> {
        assert!((1..=self.max_weight).contains(&w));
        self.by_weight[w - 1].iter().map(|e| &e.tree)
    }

    pub fn count_of_weight(&self, w: usize) -> usize {
        assert!((1..=self.max_weight).contains(&w));
        self.by_weight[w - 1].len()
    }

    /// Total number of trees across all generated weights.
    pub fn len(&self) -> usize {
        self.index_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index_of.is_empty()
    }

    fn tree(&self, r: TreeRef) -> &CommTree {
        &self.by_weight[r.0 - 1][r.1].tree
    }

    /// Position of a tree in the canonical total order across weights.
    pub fn global_index(&self, r: TreeRef) -> usize {
        self.offsets[r.0 - 1] + r.1
    }

    pub fn tree_at(&self, global: usize) -> &CommTree {
        let r = self.ref_at(global);
        self.tree(r)
    }

    pub fn weight_at(&self, global: usize) -> usize {
        self.ref_at(global).0
    }

    /// Children of the tree at a global index, as global indices.
    pub fn children_at(&self, global: usize) -> Option<(usize, usize)> {
        let (w, pos) = self.ref_at(global);
        let e = &self.by_weight[w - 1][pos];
        match (e.left, e.right) {
            (Some(l), Some(r)) => Some((self.global_index(l), self.global_index(r))),
            _ => None,
        }
    }

    fn ref_at(&self, global: usize) -> TreeRef {
        assert!(global < self.len());
        let w = match self.offsets.binary_search(&global) {
            Ok(i) => i + 1,
            Err(i) => i,
        };
        (w, global - self.offsets[w - 1])
    }

    /// Global index range of one weight class.
    pub fn weight_range(&self, w: usize) -> std::ops::Range<usize> {
        assert!((1..=self.max_weight).contains(&w));
        let start = self.offsets[w - 1];
        let end = if w == self.max_weight {
            self.len()
        } else {
            self.offsets[w]
        };
        start..end
    }

    /// Standalone check of the two basic-commutator conditions against this
    /// set's canonical order. A tree whose subtrees were not generated by the
    /// set is not basic.
    pub fn is_basic(&self, tree: &CommTree) -> bool {
        assert!(tree.weight() <= self.max_weight);
        let Some((left, right)) = tree.children() else {
            return self.index_of.contains_key(tree);
        };
        if !self.is_basic(left) || !self.is_basic(right) {
            return false;
        }
        let gi = self.global_index(self.index_of[left]);
        let gj = self.global_index(self.index_of[right]);
        if gi <= gj {
            return false;
        }
        if let Some((_, lt_right)) = left.children() {
            let gt = self.global_index(self.index_of[lt_right]);
            if gj < gt {
                return false;
            }
        }
        true
    }
}

/// The basic commutators of the given weight, in canonical order.
pub fn generate(alphabet: &Alphabet, weight: usize) -> Vec<CommTree> {
    assert!(weight >= 1);
    let set = HallSet::new(alphabet.clone(), weight);
    set.trees_of_weight(weight).cloned().collect()
}

/// Retains the trees that involve at least one letter from each of the two
/// groups of a two-group alphabet.
pub fn mixed_filter(trees: &[CommTree], alphabet: &Alphabet) -> Result<Vec<CommTree>, Error> {
    if alphabet.group_count() != 2 {
        return Err(Error::NeedTwoGroups(alphabet.group_count()));
    }
    Ok(trees
        .iter()
        .filter(|t| t.is_mixed(alphabet))
        .cloned()
        .collect())
}
