//! The generators `A, B, C, D` acting on pointed subshift windows by moving
//! the origin across the letter on either side of it.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::letter_edges;
use crate::group::Generator;
use crate::word::{Letter, PointedWord};

/// Whether generator `gen` moves the origin across a seam carrying `letter`:
/// `A` crosses `a`; `B` crosses `x, y`; `C` crosses `x, z`; `D` crosses
/// `y, z`.
pub fn crosses(gen: Generator, letter: Letter) -> bool {
    letter_edges(letter).0.contains(&gen)
}

/// Applies `A`, `B`, `C` or `D`: moves the origin right when `ω₁` carries
/// the generator, left when `ω₀` does, and fixes the window otherwise.
/// Needs `ω₀` and `ω₁` visible, and the moved origin must keep both visible.
pub fn subshift_generator(gen: Generator, w: &PointedWord) -> Result<PointedWord> {
    let (Some(left), Some(right)) = (w.get(0), w.get(1)) else {
        return Err(Error::WindowTooShort {
            needed: 2,
            have: w.len(),
        });
    };
    let delta = if crosses(gen, right) {
        1
    } else if crosses(gen, left) {
        -1
    } else {
        return Ok(w.clone());
    };
    let moved = w.with_origin_offset(delta)?;
    if moved.get(0).is_none() || moved.get(1).is_none() {
        return Err(Error::WindowTooShort {
            needed: w.len() + 1,
            have: w.len(),
        });
    }
    Ok(moved)
}

/// Breadth-first search over `A, B, C, D` from `w`, confined to origins
/// within `steps` of the start. True iff every shift by `-steps..=steps` is
/// reached and each generator step lands on a shift of the same sequence.
pub fn orbit_coincidence_check(w: &PointedWord, steps: usize) -> Result<bool> {
    let start = w.origin() as i64;
    let lo = start - steps as i64;
    let hi = start + steps as i64;
    // Origins lo - 1 and hi + 1 must still show both neighbours.
    if lo < 3 || hi > w.len() as i64 - 1 {
        return Err(Error::WindowTooShort {
            needed: 2 * steps + 4,
            have: w.len(),
        });
    }
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        for gen in Generator::ALL {
            let next = subshift_generator(gen, &cur)?;
            if next.word() != cur.word() {
                return Ok(false);
            }
            let o = next.origin() as i64;
            if (o - cur.origin() as i64).abs() > 1 {
                return Ok(false);
            }
            if (lo..=hi).contains(&o) && seen.insert(o) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len() == 2 * steps + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::special_sequence_window;
    use crate::substitution::eta_prefix;

    fn pw(s: &str) -> PointedWord {
        s.parse().unwrap()
    }

    #[test]
    fn a_moves_across_a() {
        let w = pw("xax|axa");
        let moved = subshift_generator(Generator::A, &w).unwrap();
        assert_eq!(moved.to_string(), "xaxa|xa");
        assert_eq!(subshift_generator(Generator::A, &moved).unwrap(), w);
    }

    #[test]
    fn b_fixes_z_seams() {
        let w = pw("axaz|axa");
        assert_eq!(subshift_generator(Generator::B, &w).unwrap(), w);
        let moved = subshift_generator(Generator::C, &w).unwrap();
        assert_eq!(moved.to_string(), "axa|zaxa");
    }

    #[test]
    fn boundary_errors() {
        assert!(subshift_generator(Generator::A, &pw("|axa")).is_err());
        assert!(subshift_generator(Generator::A, &pw("x|a")).is_err());
    }

    #[test]
    fn klein_relation_on_eta() {
        let w = PointedWord::new(eta_prefix(300).unwrap(), 150).unwrap();
        for o in 3..298 {
            let p = w.with_origin_offset(o - 150).unwrap();
            let bc =
                subshift_generator(Generator::B, &subshift_generator(Generator::C, &p).unwrap())
                    .unwrap();
            assert_eq!(bc, subshift_generator(Generator::D, &p).unwrap());
        }
    }

    #[test]
    fn orbit_small_steps() {
        let w = special_sequence_window(Letter::Y, 40).unwrap();
        assert!(orbit_coincidence_check(&w, 0).unwrap());
        assert!(orbit_coincidence_check(&w, 1).unwrap());
        assert!(orbit_coincidence_check(&w, 30).unwrap());
        assert!(orbit_coincidence_check(&w, 39).is_err());
    }
}
