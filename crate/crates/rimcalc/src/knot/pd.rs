//! Planar-diagram (PD) codes.
//!
//! A crossing `X(a,b,c,d)` lists its four incident edge labels
//! counterclockwise starting at the incoming under-strand, so `a` is the
//! under-strand entering, `c` is it leaving, and `{b, d}` is the over-strand
//! pair. Which of `b`/`d` is the incoming over-edge is not part of the code;
//! it is recovered by propagating orientation constraints (every edge leaves
//! exactly one crossing slot and enters exactly one).

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<[usize; 4]>,
}

/// One crossing with resolved edge directions. `sign` is the crossing sign
/// under the counterclockwise listing convention (+1 when the over-strand
/// enters at the fourth slot). A global mirror ambiguity remains — a PD code
/// does not pin down the plane's orientation — but every quantity computed
/// downstream (the Alexander polynomial) is mirror-invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientedCrossing {
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
    pub sign: i8,
}

/// A PD code with orientations resolved, its edges grouped into Wirtinger
/// arcs (maximal over-strand runs): `arc_of_edge[e]` is the arc index of
/// edge `e` (1-based; index 0 unused).
#[derive(Clone, Debug)]
pub struct OrientedDiagram {
    pub crossings: Vec<OrientedCrossing>,
    pub n_edges: usize,
    pub arc_of_edge: Vec<usize>,
    pub n_arcs: usize,
}

impl PdCode {
    pub fn new(crossings: Vec<[usize; 4]>) -> Result<Self> {
        let c = crossings.len();
        let mut counts = vec![0usize; 2 * c + 1];
        for x in &crossings {
            for &label in x {
                if label == 0 || label > 2 * c {
                    return Err(Error::InvalidLabels(format!(
                        "edge label {label} outside 1..{}",
                        2 * c
                    )));
                }
                counts[label] += 1;
            }
        }
        if let Some(label) = (1..=2 * c).find(|&l| counts[l] != 2) {
            return Err(Error::InvalidLabels(format!(
                "edge label {label} appears {} times, expected 2",
                counts[label]
            )));
        }
        Ok(Self { crossings })
    }

    /// Grammar: whitespace-separated `X(a,b,c,d)` tuples; empty text is the
    /// 0-crossing unknot diagram.
    pub fn parse(text: &str) -> Result<Self> {
        let mut crossings = Vec::new();
        for tok in text.split_whitespace() {
            let inner = tok
                .strip_prefix("X(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| {
                    Error::SyntaxError(format!("expected X(a,b,c,d), got {tok:?}"))
                })?;
            let fields = inner
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::SyntaxError(format!("unreadable edge label {p:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let [a, b, c, d] = fields[..] else {
                return Err(Error::SyntaxError(format!(
                    "crossing {tok:?} does not have exactly 4 labels"
                )));
            };
            crossings.push([a, b, c, d]);
        }
        Self::new(crossings)
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    /// Resolves edge orientations, checks the diagram traces a single closed
    /// component, and groups edges into Wirtinger arcs.
    pub fn orient(&self) -> Result<OrientedDiagram> {
        let c = self.crossings.len();
        let n_edges = 2 * c;
        if c == 0 {
            return Ok(OrientedDiagram {
                crossings: Vec::new(),
                n_edges: 0,
                arc_of_edge: Vec::new(),
                n_arcs: 0,
            });
        }

        // Slot direction state: slot 0 is the incoming under-edge, slot 2 the
        // outgoing one; slots 1 and 3 belong to the over-strand and start
        // undetermined. At each crossing exactly one of slots 1/3 is incoming.
        const UNKNOWN: i8 = 0;
        const IN: i8 = 1;
        const OUT: i8 = -1;
        let mut state = vec![[UNKNOWN; 4]; c];
        let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_edges + 1];
        for (x, tuple) in self.crossings.iter().enumerate() {
            for (slot, &label) in tuple.iter().enumerate() {
                occurrences[label].push((x, slot));
            }
        }

        let mut queue: Vec<(usize, usize, i8)> = Vec::new();
        for x in 0..c {
            queue.push((x, 0, IN));
            queue.push((x, 2, OUT));
        }
        while let Some((x, slot, dir)) = queue.pop() {
            if state[x][slot] == dir {
                continue;
            }
            if state[x][slot] == -dir {
                return Err(Error::InvalidLabels(format!(
                    "edge {} at crossing {} cannot be oriented consistently",
                    self.crossings[x][slot],
                    x + 1
                )));
            }
            state[x][slot] = dir;
            // the other occurrence of this edge points the opposite way
            let label = self.crossings[x][slot];
            for &(y, s) in &occurrences[label] {
                if (y, s) != (x, slot) {
                    queue.push((y, s, -dir));
                }
            }
            // an over-strand passes through: its two slots are one in, one out
            if slot == 1 || slot == 3 {
                queue.push((x, 4 - slot, -dir));
            }
        }
        if state
            .iter()
            .any(|s| s[1] == UNKNOWN || s[3] == UNKNOWN)
        {
            // only possible when some component never passes under anything
            return Err(Error::NotAKnot(
                "diagram contains a closed component that is never an under-strand".into(),
            ));
        }

        let crossings: Vec<OrientedCrossing> = self
            .crossings
            .iter()
            .enumerate()
            .map(|(x, &[a, b, _c, d])| {
                let (over_in, over_out, sign) = if state[x][3] == IN {
                    (d, b, 1)
                } else {
                    (b, d, -1)
                };
                OrientedCrossing {
                    under_in: a,
                    under_out: self.crossings[x][2],
                    over_in,
                    over_out,
                    sign,
                }
            })
            .collect();

        // single-component check: follow each strand passage through its
        // crossing and count the orbit of edge 1
        let mut successor = vec![0usize; n_edges + 1];
        for x in &crossings {
            successor[x.under_in] = x.under_out;
            successor[x.over_in] = x.over_out;
        }
        let mut reached = 0;
        let mut e = 1;
        loop {
            reached += 1;
            e = successor[e];
            if e == 1 {
                break;
            }
            if reached > n_edges {
                return Err(Error::InvalidLabels(
                    "edge successor walk does not close up".into(),
                ));
            }
        }
        if reached != n_edges {
            return Err(Error::NotAKnot(format!(
                "diagram traces more than one component ({reached} of {n_edges} edges in one loop)"
            )));
        }

        // Wirtinger arcs: edges merge where a strand passes over
        let mut parent: Vec<usize> = (0..=n_edges).collect();
        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        for x in &crossings {
            let (ra, rb) = (find(&mut parent, x.over_in), find(&mut parent, x.over_out));
            parent[ra] = rb;
        }
        let mut arc_of_edge = vec![0usize; n_edges + 1];
        let mut arc_index: Vec<Option<usize>> = vec![None; n_edges + 1];
        let mut n_arcs = 0;
        for e in 1..=n_edges {
            let root = find(&mut parent, e);
            let idx = *arc_index[root].get_or_insert_with(|| {
                let i = n_arcs;
                n_arcs += 1;
                i
            });
            arc_of_edge[e] = idx;
        }
        debug_assert_eq!(n_arcs, c, "a knot diagram has one arc per crossing");

        Ok(OrientedDiagram {
            crossings,
            n_edges,
            arc_of_edge,
            n_arcs,
        })
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &[a, b, c, d] in &self.crossings {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "X({a},{b},{c},{d})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // A left-handed trefoil: all crossings resolve negative.
    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    // The same knot with the opposite handedness convention.
    const TREFOIL_RH: &str = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
    const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    #[test]
    fn parse_and_display_round_trip() {
        for text in [TREFOIL, TREFOIL_RH, FIGURE_EIGHT, ""] {
            let pd = PdCode::parse(text).unwrap();
            assert_eq!(pd.to_string(), text);
        }
    }

    #[test]
    fn label_validation() {
        assert!(matches!(
            PdCode::parse("X(1,2,3,5)"),
            Err(Error::InvalidLabels(_))
        ));
        assert!(matches!(
            PdCode::parse("X(1,1,2,2) X(3,3,1,4)"),
            Err(Error::InvalidLabels(_))
        ));
        assert!(matches!(
            PdCode::parse("X(0,1,2,3)"),
            Err(Error::InvalidLabels(_))
        ));
        assert!(matches!(
            PdCode::parse("X(1,2,3)"),
            Err(Error::SyntaxError(_))
        ));
        assert!(matches!(
            PdCode::parse("Y(1,2,3,4)"),
            Err(Error::SyntaxError(_))
        ));
    }

    #[test]
    fn orientation_of_the_trefoil() {
        let pd = PdCode::parse(TREFOIL).unwrap();
        let d = pd.orient().unwrap();
        assert_eq!(d.n_edges, 6);
        assert_eq!(d.n_arcs, 3);
        assert!(d.crossings.iter().all(|x| x.sign == -1));

        let rh = PdCode::parse(TREFOIL_RH).unwrap().orient().unwrap();
        assert!(rh.crossings.iter().all(|x| x.sign == 1));
    }

    #[test]
    fn figure_eight_has_mixed_signs() {
        let d = PdCode::parse(FIGURE_EIGHT).unwrap().orient().unwrap();
        let total: i32 = d.crossings.iter().map(|x| x.sign as i32).sum();
        assert_eq!(total, 0, "figure-eight has writhe 0");
        assert_eq!(d.n_arcs, 4);
    }

    #[test]
    fn multi_component_codes_are_rejected() {
        // two disjoint kinks: a 2-component diagram with valid labels
        let two = PdCode::parse("X(1,2,2,1) X(3,4,4,3)").unwrap();
        assert!(matches!(two.orient(), Err(Error::NotAKnot(_))));
        // Hopf-link-like code: labels consistent but two components
        let hopf = PdCode::parse("X(1,3,2,4) X(3,1,4,2)");
        if let Ok(pd) = hopf {
            assert!(pd.orient().is_err());
        }
    }

    #[test]
    fn kink_diagram_orients() {
        let pd = PdCode::parse("X(2,1,1,2)").unwrap();
        let d = pd.orient().unwrap();
        assert_eq!(d.n_arcs, 1);
        assert_eq!(d.crossings[0].under_in, 2);
        assert_eq!(d.crossings[0].under_out, 1);
    }

    #[test]
    fn zero_crossing_diagram() {
        let d = PdCode::parse("").unwrap().orient().unwrap();
        assert_eq!(d.n_arcs, 0);
        assert_eq!(d.n_edges, 0);
    }
}
