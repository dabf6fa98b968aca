//! Braid words and their trace closures.

use crate::diagram::{Crossing, Diagram};
use crate::error::{Error, Result};

/// One letter of a braid word: generator index (1-based) and sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BraidLetter {
    pub index: usize,
    pub positive: bool,
}

/// Parse a whitespace-separated braid word. Tokens are `sK`, `sK^-1`
/// (braces allowed, any integer exponent) or the alias `-sK`.
pub fn parse_braid_word(word: &str) -> Result<Vec<BraidLetter>> {
    let mut letters = Vec::new();
    for tok in word.split_whitespace() {
        let (negated, rest) = match tok.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, tok),
        };
        let rest = rest
            .strip_prefix(['s', 'S'])
            .ok_or_else(|| Error::BadLine {
                line: tok.to_string(),
                reason: "expected a generator token like s1 or s2^-1".into(),
            })?;
        let (idx_str, exp) = match rest.find('^') {
            Some(i) => {
                let e = rest[i + 1..].replace(['{', '}'], "");
                let exp: i64 = e.parse().map_err(|_| Error::BadLine {
                    line: tok.to_string(),
                    reason: format!("bad exponent {e:?}"),
                })?;
                (&rest[..i], exp)
            }
            None => (rest, 1),
        };
        let index: usize = idx_str.parse().map_err(|_| Error::BadLine {
            line: tok.to_string(),
            reason: format!("bad generator index {idx_str:?}"),
        })?;
        if index == 0 || exp == 0 {
            return Err(Error::BadLine {
                line: tok.to_string(),
                reason: "generator index and exponent must be nonzero".into(),
            });
        }
        let positive = (exp > 0) != negated;
        for _ in 0..exp.unsigned_abs() {
            letters.push(BraidLetter { index, positive });
        }
    }
    Ok(letters)
}

/// Diagram of the trace closure of a braid word on `strands` strands.
///
/// Strands are drawn downward; a positive generator `sK` crosses strand
/// K over strand K+1.
pub fn parse_braid(word: &str, strands: usize) -> Result<Diagram> {
    let letters = parse_braid_word(word)?;
    if letters.is_empty() {
        return Err(Error::EmptyBraid);
    }
    closure_diagram(&letters, strands)
}

pub fn closure_diagram(letters: &[BraidLetter], strands: usize) -> Result<Diagram> {
    for l in letters {
        if l.index + 1 > strands {
            return Err(Error::BadGenerator {
                index: l.index,
                strands,
            });
        }
    }
    // Work edges: positions hold the current dangling edge id.
    let mut next_edge = 0usize;
    let mut fresh = || {
        let e = next_edge;
        next_edge += 1;
        e
    };
    let init: Vec<usize> = (0..strands).map(|_| fresh()).collect();
    let mut cur = init.clone();
    let mut crossings = Vec::new();
    for l in letters {
        let left = cur[l.index - 1];
        let right = cur[l.index];
        let new_left = fresh();
        let new_right = fresh();
        // Slots counterclockwise from the incoming under-edge; strands run
        // downward, so the incident directions are NE, NW, SW, SE.
        let c = if l.positive {
            // Left over right: under-in is the right strand at NE.
            Crossing([right, left, new_left, new_right])
        } else {
            // Left under right: under-in is the left strand at NW.
            Crossing([left, new_left, new_right, right])
        };
        crossings.push(c);
        cur[l.index - 1] = new_left;
        cur[l.index] = new_right;
    }
    // Close the braid: each bottom edge joins its top edge.
    let mut canon: Vec<usize> = (0..next_edge).collect();
    fn find(canon: &mut Vec<usize>, x: usize) -> usize {
        if canon[x] != x {
            let r = find(canon, canon[x]);
            canon[x] = r;
        }
        canon[x]
    }
    for p in 0..strands {
        let (a, b) = (find(&mut canon, init[p]), find(&mut canon, cur[p]));
        if a != b {
            canon[a.max(b)] = a.min(b);
        }
    }
    for c in &mut crossings {
        for slot in &mut c.0 {
            *slot = find(&mut canon, *slot);
        }
    }
    // Classes never incident to a crossing are crossing-free circles.
    let mut used = std::collections::HashSet::new();
    for c in &crossings {
        for &e in &c.0 {
            used.insert(e);
        }
    }
    let mut free_loops = 0usize;
    for p in 0..strands {
        let root = find(&mut canon, init[p]);
        if !used.contains(&root) && root == init[p] {
            free_loops += 1;
        }
    }
    // Renumber densely in order of first appearance.
    let mut relabel = std::collections::HashMap::new();
    for c in &mut crossings {
        for slot in &mut c.0 {
            let next_id = relabel.len();
            *slot = *relabel.entry(*slot).or_insert(next_id);
        }
    }
    Diagram::new(crossings, free_loops)
}

/// The standard n-crossing closed 2-braid diagram of the (2, n) torus knot.
pub fn torus_2n(n: i64) -> Result<Diagram> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadTorusParameter(n));
    }
    let letters = vec![
        BraidLetter {
            index: 1,
            positive: true
        };
        n as usize
    ];
    closure_diagram(&letters, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_as_sigma1_cubed() {
        let d = parse_braid("s1 s1 s1", 2).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.edge_count(), 6);
        assert_eq!(d.arcs().arc_count, 3);
        assert_eq!(d.faces().len(), 5);
    }

    #[test]
    fn exponent_syntax() {
        let a = parse_braid("s1^3", 2).unwrap();
        let b = parse_braid("s1 s1 s1", 2).unwrap();
        assert_eq!(a, b);
        let c = parse_braid("s1^{-1} s1", 2).unwrap();
        assert_eq!(c.crossing_count(), 2);
        let d = parse_braid("-s1 s1", 2).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn torus_parameters() {
        assert!(torus_2n(2).is_err());
        assert!(torus_2n(1).is_err());
        let t11 = torus_2n(11).unwrap();
        assert_eq!(t11.crossing_count(), 11);
        assert_eq!(t11.arcs().arc_count, 11);
        assert_eq!(t11.faces().len(), 13);
    }

    #[test]
    fn generator_out_of_range() {
        assert!(matches!(
            parse_braid("s2", 2),
            Err(Error::BadGenerator { .. })
        ));
        assert!(matches!(parse_braid("  ", 2), Err(Error::EmptyBraid)));
    }

    #[test]
    fn unused_strand_closes_to_free_loop() {
        let d = parse_braid("s1 s1 s1", 3).unwrap();
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.arcs().arc_count, 4);
    }
}
