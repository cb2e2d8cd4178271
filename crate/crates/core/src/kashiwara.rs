//! Raising and lowering operators on letters, boxes and paths, and a
//! brute-force construction of the combinatorial R as the unique isomorphism
//! commuting with all of them.  Serves as an oracle for the closed formula.

use crate::boxstate::{BoxState, Letter, Path};
use crate::error::{Error, Result};
use crate::rmatrix::{apply_r, Pieces};
use std::collections::HashMap;

/// Lowering operator on a single letter, `0 <= i <= n`.
pub fn letter_f(n: usize, lt: Letter, i: usize) -> Option<Letter> {
    let v = lt.0;
    let ni = n as i32;
    let j = i as i32;
    if i == 0 {
        match v {
            -1 => Some(Letter(2)),
            -2 => Some(Letter(1)),
            _ => None,
        }
    } else if i < n {
        if v == j {
            Some(Letter(j + 1))
        } else if v == -(j + 1) {
            Some(Letter(-j))
        } else {
            None
        }
    } else {
        if v == ni - 1 {
            Some(Letter(-ni))
        } else if v == ni {
            Some(Letter(-(ni - 1)))
        } else {
            None
        }
    }
}

/// Raising operator on a single letter.
pub fn letter_e(n: usize, lt: Letter, i: usize) -> Option<Letter> {
    let v = lt.0;
    let ni = n as i32;
    let j = i as i32;
    if i == 0 {
        match v {
            2 => Some(Letter(-1)),
            1 => Some(Letter(-2)),
            _ => None,
        }
    } else if i < n {
        if v == j + 1 {
            Some(Letter(j))
        } else if v == -j {
            Some(Letter(-(j + 1)))
        } else {
            None
        }
    } else {
        if v == -ni {
            Some(Letter(ni - 1))
        } else if v == -(ni - 1) {
            Some(Letter(ni))
        } else {
            None
        }
    }
}

fn letter_sig(n: usize, lt: Letter, i: usize) -> (i64, i64) {
    let e = letter_e(n, lt, i).is_some() as i64;
    let f = letter_f(n, lt, i).is_some() as i64;
    (e, f)
}

/// Index of the factor receiving the lowering operator, given the signatures
/// `(eps, phi)` in the order the cancellation reads them.
fn choose_f(sigs: &[(i64, i64)]) -> Option<usize> {
    let mut stack: Vec<usize> = Vec::new();
    for (idx, &(e, f)) in sigs.iter().enumerate() {
        for _ in 0..e {
            stack.pop();
        }
        for _ in 0..f {
            stack.push(idx);
        }
    }
    stack.first().copied()
}

/// Index of the factor receiving the raising operator.
fn choose_e(sigs: &[(i64, i64)]) -> Option<usize> {
    let mut depth = 0i64;
    let mut survivor = None;
    for (idx, &(e, f)) in sigs.iter().enumerate() {
        for _ in 0..e {
            if depth > 0 {
                depth -= 1;
            } else {
                survivor = Some(idx);
            }
        }
        depth += f;
    }
    survivor
}

fn total_sig(sigs: &[(i64, i64)]) -> (i64, i64) {
    let mut depth = 0i64;
    let mut eps = 0i64;
    for &(e, f) in sigs {
        for _ in 0..e {
            if depth > 0 {
                depth -= 1;
            } else {
                eps += 1;
            }
        }
        depth += f;
    }
    (eps, depth)
}

// the tensor rule reads the factors right to left, so every chooser below
// works on the reversed sequence and maps the index back

fn box_word_sigs(b: &BoxState, i: usize) -> Vec<(i64, i64)> {
    let n = b.n();
    b.letters()
        .into_iter()
        .rev()
        .map(|lt| letter_sig(n, lt, i))
        .collect()
}

/// `(eps_i, phi_i)` of a box, any `0 <= i <= n`.
pub fn box_eps_phi(b: &BoxState, i: usize) -> (i64, i64) {
    if i == 0 {
        return box_eps_phi(&b.sigma1(), 1);
    }
    total_sig(&box_word_sigs(b, i))
}

fn box_apply(b: &BoxState, i: usize, lower: bool) -> Option<BoxState> {
    if i == 0 {
        // node 0 acts through the involution exchanging the roles of 1, 1bar
        return box_apply(&b.sigma1(), 1, lower).map(|c| c.sigma1());
    }
    let n = b.n();
    let sigs = box_word_sigs(b, i);
    let pos = if lower {
        choose_f(&sigs)?
    } else {
        choose_e(&sigs)?
    };
    let mut word = b.letters();
    word.reverse();
    let lt = word[pos];
    word[pos] = if lower {
        letter_f(n, lt, i).expect("chosen letter admits the operator")
    } else {
        letter_e(n, lt, i).expect("chosen letter admits the operator")
    };
    Some(BoxState::from_letters(n, &word).expect("operators keep the box valid"))
}

pub fn box_f(b: &BoxState, i: usize) -> Option<BoxState> {
    box_apply(b, i, true)
}

pub fn box_e(b: &BoxState, i: usize) -> Option<BoxState> {
    box_apply(b, i, false)
}

fn path_sigs(p: &Path, i: usize) -> Vec<(i64, i64)> {
    p.boxes().iter().map(|b| box_eps_phi(b, i)).collect()
}

/// `(eps_i, phi_i)` of a whole path.
pub fn path_eps_phi(p: &Path, i: usize) -> (i64, i64) {
    total_sig(&path_sigs(p, i))
}

fn path_apply(p: &Path, i: usize, lower: bool) -> Option<Path> {
    let sigs = path_sigs(p, i);
    let j = if lower {
        choose_f(&sigs)?
    } else {
        choose_e(&sigs)?
    };
    let mut boxes = p.boxes().to_vec();
    boxes[j] = if lower {
        box_f(&boxes[j], i).expect("chosen factor admits the operator")
    } else {
        box_e(&boxes[j], i).expect("chosen factor admits the operator")
    };
    Some(Path::new(p.n(), boxes).expect("ranks preserved"))
}

pub fn path_f(p: &Path, i: usize) -> Option<Path> {
    path_apply(p, i, true)
}

pub fn path_e(p: &Path, i: usize) -> Option<Path> {
    path_apply(p, i, false)
}

/// `phi_0`: how many times the affine lowering operator applies.
pub fn phi0(p: &Path) -> i64 {
    path_eps_phi(p, 0).1
}

/// Killed by every classical raising operator.
pub fn is_highest(p: &Path) -> bool {
    (1..=p.n()).all(|i| path_eps_phi(p, i).0 == 0)
}

type PairKey = (Vec<i64>, Vec<i64>);

fn key(a: &BoxState, b: &BoxState) -> PairKey {
    (a.zeta().to_vec(), b.zeta().to_vec())
}

fn pair_apply(
    n: usize,
    pair: &(BoxState, BoxState),
    i: usize,
    lower: bool,
) -> Option<(BoxState, BoxState)> {
    let p = Path::new(n, vec![pair.0.clone(), pair.1.clone()]).unwrap();
    let q = path_apply(&p, i, lower)?;
    Some((q.boxes()[0].clone(), q.boxes()[1].clone()))
}

/// Which factor of the pair the affine lowering operator acts on.
fn f0_on_left(pair: &(BoxState, BoxState)) -> bool {
    let sigs = vec![box_eps_phi(&pair.0, 0), box_eps_phi(&pair.1, 0)];
    choose_f(&sigs) == Some(0)
}

/// The unique isomorphism from `B_l (x) B_m` commuting with every operator,
/// grown edge by edge from the vacuum pair, together with the local energy
/// fixed to its vacuum value `l + m` and changed only across affine edges.
pub struct BruteForceR {
    pub map: HashMap<PairKey, (BoxState, BoxState)>,
    pub h: HashMap<PairKey, i64>,
}

pub fn brute_force_r(n: usize, l: i64, m: i64) -> Result<BruteForceR> {
    let seed = (BoxState::vacuum(n, l), BoxState::vacuum(n, m));
    let seed_img = (BoxState::vacuum(n, m), BoxState::vacuum(n, l));
    let mut map: HashMap<PairKey, (BoxState, BoxState)> = HashMap::new();
    let mut h: HashMap<PairKey, i64> = HashMap::new();
    map.insert(key(&seed.0, &seed.1), seed_img);
    h.insert(key(&seed.0, &seed.1), l + m);
    let mut queue = vec![seed];
    let fail = |what: String| Error::InvalidBox(format!("no crystal isomorphism: {what}"));
    while let Some(x) = queue.pop() {
        let y = map[&key(&x.0, &x.1)].clone();
        let hx = h[&key(&x.0, &x.1)];
        for i in 0..=n {
            for lower in [true, false] {
                let x2 = pair_apply(n, &x, i, lower);
                let y2 = pair_apply(n, &y, i, lower);
                match (x2, y2) {
                    (None, None) => {}
                    (Some(x2), Some(y2)) => {
                        let dh = if i != 0 {
                            0
                        } else {
                            // the energy shifts only when the affine operator
                            // acts on the same side before and after R
                            let (sx, sy) = if lower {
                                (f0_on_left(&x), f0_on_left(&y))
                            } else {
                                (f0_on_left(&x2), f0_on_left(&y2))
                            };
                            let step = match (sx, sy) {
                                (true, true) => -1,
                                (false, false) => 1,
                                _ => 0,
                            };
                            if lower {
                                step
                            } else {
                                -step
                            }
                        };
                        let k2 = key(&x2.0, &x2.1);
                        match map.get(&k2) {
                            Some(prev) => {
                                if *prev != y2 || h[&k2] != hx + dh {
                                    return Err(fail(format!("clash at {k2:?}")));
                                }
                            }
                            None => {
                                map.insert(k2.clone(), y2);
                                h.insert(k2, hx + dh);
                                queue.push(x2);
                            }
                        }
                    }
                    _ => return Err(fail(format!("arrow {i} breaks at {:?}", key(&x.0, &x.1)))),
                }
            }
        }
    }
    let expect = BoxState::enumerate(n, l).len() * BoxState::enumerate(n, m).len();
    if map.len() != expect {
        return Err(fail(format!("reached {} of {} pairs", map.len(), expect)));
    }
    Ok(BruteForceR { map, h })
}

impl BruteForceR {
    /// Checks the closed formula against this oracle on every pair: the image
    /// must agree and the piece `V_0` must differ from the propagated energy
    /// by one global constant.
    pub fn verify_formula(&self) -> Result<()> {
        let mut shift: Option<i64> = None;
        for (k, want) in &self.map {
            let a = BoxState::new(want.1.n(), k.0.clone())?;
            let b = BoxState::new(want.0.n(), k.1.clone())?;
            let r = apply_r(&a, &b);
            if (r.left.clone(), r.right.clone()) != *want {
                return Err(Error::InvalidBox(format!(
                    "oracle image differs from the formula at {k:?}"
                )));
            }
            let d = self.h[k] - Pieces::compute(&a.to_x(), &b.to_x()).piece(crate::kind::EnergyKind::V(0))?;
            match shift {
                None => shift = Some(d),
                Some(s) if s == d => {}
                Some(s) => {
                    return Err(Error::InvalidBox(format!(
                        "energy shift {d} differs from {s} at {k:?}"
                    )))
                }
            }
        }
        Ok(())
    }
}
