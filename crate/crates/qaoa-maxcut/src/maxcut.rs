//! Max-Cut instances: graph model, bitstring scoring, expectation values,
//! and an exhaustive oracle for desk-scale problems.
//!
//! A bitstring assigns one of two colors to every vertex; its score is the
//! number of edges whose endpoints got different colors. Bit `i` of a basis
//! index is the color of vertex `i`, matching the register convention in
//! [`crate::statevector`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::statevector::SampleSet;

/// Exhaustive search enumerates 2^n bitstrings; refuse past this.
pub const MAX_BRUTE_FORCE_VERTICES: usize = 20;

/// An unweighted Max-Cut instance: `n_vertices` vertices and a list of
/// edges between distinct vertices.
///
/// Edges keep their given orientation (it decides which qubit acts as the
/// CNOT control later) but are deduplicated as unordered pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validate and build a graph. Rejects endpoints out of range,
    /// self-loops, and duplicate edges (in either orientation).
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::EdgeOutOfRange { u, v, n_vertices });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { u, v });
            }
        }
        Ok(Graph { n_vertices, edges })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in stored order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Cut score of the coloring encoded by a basis index: the number of
    /// edges whose endpoint bits differ.
    pub fn cut_score_index(&self, index: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| ((index >> u) ^ (index >> v)) & 1 == 1)
            .count()
    }

    /// Cut score of an explicit bitstring.
    pub fn cut_score(&self, bits: &Bitstring) -> Result<usize, Error> {
        if bits.len() != self.n_vertices {
            return Err(Error::BitstringLength {
                got: bits.len(),
                expected: self.n_vertices,
            });
        }
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| bits.bit(u) != bits.bit(v))
            .count())
    }

    /// Enumerate all 2^n colorings and return the maximum cut together with
    /// every bitstring that attains it, in lexicographic order.
    ///
    /// The argmax set is always closed under complement: flipping every
    /// color cuts exactly the same edges.
    pub fn brute_force_max(&self) -> Result<(usize, Vec<Bitstring>), Error> {
        if self.n_vertices > MAX_BRUTE_FORCE_VERTICES {
            return Err(Error::GraphTooLarge {
                n: self.n_vertices,
                max: MAX_BRUTE_FORCE_VERTICES,
            });
        }
        let mut best = 0;
        let mut argmax = Vec::new();
        for index in 0..(1usize << self.n_vertices) {
            let score = self.cut_score_index(index);
            if score > best {
                best = score;
                argmax.clear();
            }
            if score == best {
                argmax.push(Bitstring::from_index(index, self.n_vertices));
            }
        }
        argmax.sort();
        Ok((best, argmax))
    }

    /// Expected cut score under a full measurement distribution:
    /// sum over k of probs[k] * score(k).
    pub fn exact_expectation(&self, probs: &[f64]) -> Result<f64, Error> {
        if self.n_vertices >= usize::BITS as usize || probs.len() != 1usize << self.n_vertices {
            return Err(Error::ProbabilityLength {
                got: probs.len(),
                n_vertices: self.n_vertices,
            });
        }
        Ok(probs
            .iter()
            .enumerate()
            .map(|(index, p)| p * self.cut_score_index(index) as f64)
            .sum())
    }

    /// Average cut score over an observed sample set:
    /// (sum of score(z) * count(z)) / total count.
    pub fn sample_expectation(&self, samples: &SampleSet) -> Result<f64, Error> {
        if samples.n_qubits() != self.n_vertices {
            return Err(Error::SampleWidth {
                got: samples.n_qubits(),
                expected: self.n_vertices,
            });
        }
        let total = samples.total();
        if total == 0 {
            return Err(Error::EmptySampleSet);
        }
        let score_sum: u64 = samples
            .iter()
            .map(|(index, count)| self.cut_score_index(index) as u64 * count)
            .sum();
        Ok(score_sum as f64 / total as f64)
    }

    /// Highest-scoring bitstring in a sample set, ties broken by bitstring
    /// order. `None` when the set is empty.
    pub fn best_sampled(&self, samples: &SampleSet) -> Result<Option<ScoredBitstring>, Error> {
        if samples.n_qubits() != self.n_vertices {
            return Err(Error::SampleWidth {
                got: samples.n_qubits(),
                expected: self.n_vertices,
            });
        }
        let mut best: Option<(usize, usize)> = None; // (score, index)
        for (index, _) in samples.iter() {
            let score = self.cut_score_index(index);
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, index));
            }
        }
        Ok(best.map(|(score, index)| ScoredBitstring {
            bitstring: Bitstring::from_index(index, self.n_vertices),
            score,
        }))
    }

    /// Parse the edge-list text format.
    ///
    /// Lines starting with `#` are comments and blank lines are ignored.
    /// The first meaningful line must be `n <vertex count>`; every later
    /// line is an edge `<u> <v>`. Errors carry the 1-based line number.
    pub fn from_edge_list(text: &str) -> Result<Self, Error> {
        let mut n_vertices: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut seen = BTreeSet::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line_no = line_no + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match n_vertices {
                None => {
                    let count = match fields.as_slice() {
                        ["n", value] => value.parse::<usize>().ok(),
                        _ => None,
                    };
                    match count {
                        Some(count) => n_vertices = Some(count),
                        None => {
                            return Err(Error::MalformedLine(line.to_string()).at_line(line_no))
                        }
                    }
                }
                Some(n) => {
                    let edge = match fields.as_slice() {
                        [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
                        _ => None,
                    };
                    let (u, v) = edge
                        .ok_or_else(|| Error::MalformedLine(line.to_string()).at_line(line_no))?;
                    if u >= n || v >= n {
                        return Err(Error::EdgeOutOfRange {
                            u,
                            v,
                            n_vertices: n,
                        }
                        .at_line(line_no));
                    }
                    if u == v {
                        return Err(Error::SelfLoop(u).at_line(line_no));
                    }
                    if !seen.insert((u.min(v), u.max(v))) {
                        return Err(Error::DuplicateEdge { u, v }.at_line(line_no));
                    }
                    edges.push((u, v));
                }
            }
        }
        match n_vertices {
            Some(n) => Graph::new(n, edges),
            None => Err(Error::MissingHeader),
        }
    }

    /// Render the graph in the edge-list text format parsed by
    /// [`Graph::from_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n_vertices);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// A two-coloring of the vertices; bit `i` is the color of vertex `i`.
///
/// Displayed and parsed as the characters `z0 z1 ... z(n-1)` left to right,
/// so the basis index 10 on four vertices renders as "0101".
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bitstring {
    bits: Vec<bool>,
}

impl Bitstring {
    pub fn new(bits: Vec<bool>) -> Self {
        Bitstring { bits }
    }

    /// Decode a basis index into `n_bits` bits, least significant first.
    pub fn from_index(index: usize, n_bits: usize) -> Self {
        assert!(
            n_bits <= usize::BITS as usize,
            "{n_bits} bits do not fit a basis index"
        );
        assert!(
            n_bits == usize::BITS as usize || index >> n_bits == 0,
            "index {index} does not fit in {n_bits} bits"
        );
        Bitstring {
            bits: (0..n_bits).map(|i| (index >> i) & 1 == 1).collect(),
        }
    }

    /// The basis index this bitstring encodes. Inverse of
    /// [`Bitstring::from_index`].
    pub fn to_index(&self) -> usize {
        assert!(
            self.bits.len() <= usize::BITS as usize,
            "bitstring too long for a basis index"
        );
        self.bits
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &bit)| acc | (usize::from(bit) << i))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    /// Flip every bit. Cut scores are invariant under this.
    pub fn complement(&self) -> Self {
        Bitstring {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.bits {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Bitstring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::MalformedBitstring(s.to_string())),
            })
            .collect::<Result<Vec<bool>, Error>>()
            .map(Bitstring::new)
    }
}

impl Serialize for Bitstring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Bitstring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A bitstring together with its cut score.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScoredBitstring {
    pub bitstring: Bitstring,
    pub score: usize,
}
