//! The box-ball dynamics on a row of boxes: carrier time evolutions, their
//! stabilized limit, the factorized single-letter algorithm, counting
//! functions over the evolution pattern and state reconstruction from them.

use crate::boxstate::{BoxState, Letter, Path};
use crate::error::{Error, Result};
use crate::kind::EnergyKind;
use crate::rmatrix::apply_r;

/// One time step `T_l`: a carrier `u_l` enters from the left, exchanges with
/// every box and exits on the right.  Returns the new state and the carrier.
pub fn evolve(p: &Path, l: i64) -> (Path, BoxState) {
    let mut carrier = BoxState::vacuum(p.n(), l);
    let mut boxes = Vec::with_capacity(p.len());
    for b in p.boxes() {
        let r = apply_r(&carrier, b);
        boxes.push(r.left);
        carrier = r.right;
    }
    (Path::new(p.n(), boxes).expect("ranks preserved"), carrier)
}

/// Mirrored step `T*_l`: a carrier `u*_l` enters from the right, exchanges
/// with every box leftwards and exits on the left.
pub fn star_evolve(p: &Path, l: i64) -> (Path, BoxState) {
    let mut carrier = BoxState::star_vacuum(p.n(), l);
    let mut boxes = p.boxes().to_vec();
    for b in boxes.iter_mut().rev() {
        let r = apply_r(b, &carrier);
        *b = r.right;
        carrier = r.left;
    }
    (Path::new(p.n(), boxes).expect("ranks preserved"), carrier)
}

fn stabilized(
    p: &Path,
    l0: i64,
    step: impl Fn(&Path, i64) -> (Path, BoxState),
) -> Result<Path> {
    let l0 = l0.max(1);
    let mut l = l0;
    let mut prev = step(p, l).0;
    while l <= 64 * l0 {
        let next = step(p, 2 * l).0;
        if next == prev {
            return Ok(prev);
        }
        prev = next;
        l *= 2;
    }
    Err(Error::CarrierUnstable { cap: 64 * l0 })
}

/// The stable evolution `T_inf`, realized by a carrier big enough to hold
/// everything and confirmed by one doubling.
pub fn t_infinity(p: &Path) -> Result<Path> {
    let load: i64 = p.boxes().iter().map(|b| b.a_count()).sum();
    let cap = p.shape().into_iter().max().unwrap_or(0);
    stabilized(p, load + cap + 1, evolve)
}

/// The stable mirrored evolution `T*_inf`.
pub fn t_star_infinity(p: &Path) -> Result<Path> {
    let load: i64 = p.boxes().iter().map(|b| b.a_count_star()).sum();
    let cap = p.shape().into_iter().max().unwrap_or(0);
    stabilized(p, load + cap + 1, star_evolve)
}

/// The next `steps` rows of the evolution pattern under `T_inf`.
pub fn trace(p: &Path, steps: usize) -> Result<Vec<Path>> {
    let mut rows = Vec::with_capacity(steps);
    let mut cur = p.clone();
    for _ in 0..steps {
        cur = t_infinity(&cur)?;
        rows.push(cur.clone());
    }
    Ok(rows)
}

// cell content while one color moves in the factorized step
#[derive(Clone, Copy, PartialEq)]
enum Cell {
    Empty,
    One(i32),
    Pair,
}

/// One pass `K_a` of the factorized algorithm on a row of unit boxes: bound
/// pairs open into `a, abar`, every `a` hops once to the nearest admissible
/// box on its right, and the remaining pairs close back into `1bar`.
fn ka(p: &mut [i32], a: i32) -> Result<()> {
    let mut cells: Vec<Cell> = p
        .iter()
        .map(|&v| match v {
            1 => Cell::Empty,
            -1 => Cell::Pair,
            v => Cell::One(v),
        })
        .collect();
    let movers: Vec<usize> = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(c, Cell::Pair) || matches!(c, Cell::One(v) if *v == a))
        .map(|(i, _)| i)
        .collect();
    // letters only ever hop rightwards and never displace a waiting mover,
    // so the initial left-to-right order is the processing order
    for src in movers {
        let dest = (src + 1..cells.len())
            .find(|&j| cells[j] == Cell::Empty || cells[j] == Cell::One(-a))
            .ok_or(Error::KaBlocked { color: a, pos: src })?;
        cells[src] = match cells[src] {
            Cell::Pair => Cell::One(-a),
            _ => Cell::Empty,
        };
        cells[dest] = match cells[dest] {
            Cell::Empty => Cell::One(a),
            _ => Cell::Pair,
        };
    }
    for (slot, c) in p.iter_mut().zip(&cells) {
        *slot = match c {
            Cell::Empty => 1,
            Cell::Pair => -1,
            Cell::One(v) => *v,
        };
    }
    Ok(())
}

/// The factorized form of `T_inf` on states whose boxes all have capacity 1:
/// the passes `K_2 K_3 ... K_n K_nbar ... K_2bar` composed right to left.
/// Fails with `KaBlocked` if a letter would be pushed past the last box.
pub fn evolve_ka(p: &Path) -> Result<Path> {
    let n = p.n();
    if p.shape().iter().any(|&l| l != 1) {
        return Err(Error::InvalidBox(
            "the factorized evolution needs unit boxes".into(),
        ));
    }
    let mut row: Vec<i32> = p.boxes().iter().map(|b| b.letters()[0].0).collect();
    let barred = (2..=n as i32).map(|c| -c);
    let unbarred = (2..=n as i32).rev();
    for a in barred.chain(unbarred) {
        ka(&mut row, a)?;
    }
    let boxes: Result<Vec<BoxState>> = row
        .iter()
        .map(|&v| BoxState::from_letters(n, &[Letter(v)]))
        .collect();
    Path::new(n, boxes?)
}

/// Sum of the particle count over the whole evolution pattern strictly below
/// the top row.  Finite because an ever-growing prefix of empty boxes forms;
/// that is also verified here.
fn quadrant(p: &Path, star: bool) -> Result<i64> {
    let len = p.len();
    let mut total = 0;
    let mut row = p.clone();
    for t in 1.. {
        row = if star {
            t_star_infinity(&row)?
        } else {
            t_infinity(&row)?
        };
        let done = if star {
            row.is_star_vacuum()
        } else {
            row.is_vacuum()
        };
        if done {
            break;
        }
        assert!(t < len, "evolution must clear out after L steps");
        let clear = t.min(len);
        let quiet = if star {
            row.boxes()[len - clear..].iter().all(|b| b.is_star_vacuum())
        } else {
            row.boxes()[..clear].iter().all(|b| b.is_vacuum())
        };
        assert!(quiet, "an empty region must spread from the carrier side");
        total += row
            .boxes()
            .iter()
            .map(|b| if star { b.a_count_star() } else { b.a_count() })
            .sum::<i64>();
    }
    Ok(total)
}

/// The multiset of colors whose top-row count matches the first-term weight
/// of the given kind.
pub fn color_list(g: EnergyKind, n: usize) -> Result<Vec<Letter>> {
    g.validate(n)?;
    let unbarred = |hi: usize| (2..=hi as i32).map(Letter);
    Ok(match g {
        EnergyKind::V(a) if a <= n - 2 => {
            let mut v: Vec<Letter> = unbarred(n).collect();
            v.extend((a + 1..=n).rev().map(|c| Letter(-(c as i32))));
            v.push(Letter(-1));
            v
        }
        EnergyKind::V(_) => {
            let mut v: Vec<Letter> = unbarred(n).collect();
            v.push(Letter(-1));
            v
        }
        EnergyKind::VStar(a) if a == n - 1 => {
            let mut v: Vec<Letter> = unbarred(n - 1).collect();
            v.push(Letter(-(n as i32)));
            v.push(Letter(-1));
            v
        }
        EnergyKind::WMinusV(a) => {
            let mut v: Vec<Letter> = unbarred(a).collect();
            v.push(Letter(-1));
            v
        }
        EnergyKind::V0Sigma1 => Vec::new(),
        _ => {
            return Err(Error::UnsupportedKind(
                g.to_string(),
                "no single color list for this kind".into(),
            ))
        }
    })
}

fn count_colors(b: &BoxState, colors: &[Letter]) -> i64 {
    colors
        .iter()
        .map(|lt| {
            if lt.is_barred() {
                b.zbar(lt.color())
            } else {
                b.z(lt.color())
            }
        })
        .sum()
}

/// Counting function for an explicit list of colors.
pub fn rho_colors(p: &Path, colors: &[Letter]) -> Result<i64> {
    for lt in colors {
        lt.validate(p.n())?;
        if *lt == Letter(1) {
            return Err(Error::Parse("colors must differ from 1".into()));
        }
    }
    let top: i64 = p.boxes().iter().map(|b| count_colors(b, colors)).sum();
    Ok(top + quadrant(p, false)?)
}

/// Counting function attached to a generalized local energy.
pub fn rho_g(p: &Path, g: EnergyKind) -> Result<i64> {
    let n = p.n();
    g.validate(n)?;
    if let EnergyKind::W(a) = g {
        // coefficient two on the quadrant, split into the two summands
        let lower = if a == n - 1 {
            EnergyKind::VStar(a)
        } else {
            EnergyKind::WMinusV(a)
        };
        return Ok(rho_g(p, EnergyKind::V(a))? + rho_g(p, lower)?);
    }
    let top: Result<i64> = p.boxes().iter().map(|b| b.gamma(g)).sum();
    Ok(top? + quadrant(p, false)?)
}

/// Mirrored counting function for `v*_a` with `1 <= a <= n-2`.
pub fn rho_star(p: &Path, a: usize) -> Result<i64> {
    let top: Result<i64> = p.boxes().iter().map(|b| b.gamma_star(a)).sum();
    Ok(top? + quadrant(p, true)?)
}

/// Rebuilds one box of capacity `cap` from the increments of the counting
/// functions across it.  `delta` serves the increments; the kinds queried are
/// `v_0..v_{n-1}`, `v*_{n-1}` and `w_a-v_a` for `1 <= a <= n-2`.
pub fn reconstruct(
    n: usize,
    cap: i64,
    delta: impl Fn(EnergyKind) -> Option<i64>,
) -> Result<BoxState> {
    if n < 3 {
        return Err(Error::Rank(n));
    }
    let get = |g: EnergyKind| {
        delta(g).ok_or_else(|| Error::InconsistentDeltas(format!("missing increment for {g}")))
    };
    let dv: Result<Vec<i64>> = (0..n).map(|a| get(EnergyKind::V(a))).collect();
    let dv = dv?;
    let dvs = get(EnergyKind::VStar(n - 1))?;
    let dwv: Result<Vec<i64>> = (1..=n - 2).map(|a| get(EnergyKind::WMinusV(a))).collect();
    let dwv = dwv?; // dwv[a-1] holds the increment for w_a - v_a
    let mut zeta = vec![0i64; 2 * n];
    zeta[0] = cap - dv[0] + dwv[0];
    for a in 2..=n - 2 {
        zeta[a - 1] = dwv[a - 1] - dwv[a - 2];
    }
    zeta[n - 2] = dv[n - 1].min(dvs) - dwv[n - 3];
    zeta[n - 1] = (dv[n - 1] - dvs).max(0);
    zeta[n] = (dvs - dv[n - 1]).max(0);
    zeta[n + 1] = dv[n - 2] - dv[n - 1].max(dvs);
    for a in 1..=n - 2 {
        zeta[2 * n - a] = dv[a - 1] - dv[a];
    }
    if zeta.iter().any(|&c| c < 0) || zeta.iter().sum::<i64>() != cap {
        return Err(Error::InconsistentDeltas(format!(
            "increments give multiplicities {zeta:?} for capacity {cap}"
        )));
    }
    BoxState::new(n, zeta).map_err(|e| Error::InconsistentDeltas(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_path;
    use std::collections::HashMap;

    use crate::textio::load_trace;

    #[test]
    fn golden_unit_boxes() {
        let (_, rows) = load_trace("b1_collision.trace");
        assert_eq!(rows.len(), 7);
        for w in rows.windows(2) {
            assert_eq!(t_infinity(&w[0]).unwrap(), w[1]);
        }
    }

    #[test]
    fn golden_mixed_capacities() {
        let (_, rows) = load_trace("mixed_capacity.trace");
        assert_eq!(rows.len(), 11);
        assert_eq!(rows[0].shape(), vec![6, 3, 4, 4, 2, 2, 2, 2, 2, 2, 2, 2]);
        for w in rows.windows(2) {
            assert_eq!(t_infinity(&w[0]).unwrap(), w[1]);
        }
    }

    #[test]
    fn factorized_step_matches_carrier_step() {
        let (_, rows) = load_trace("b1_collision.trace");
        for w in rows.windows(2) {
            assert_eq!(evolve_ka(&w[0]).unwrap(), w[1]);
        }
    }

    #[test]
    fn factorized_step_needs_room() {
        let p = parse_path(3, "1 | 2").unwrap();
        assert!(matches!(evolve_ka(&p), Err(Error::KaBlocked { .. })));
    }

    #[test]
    fn evolutions_commute() {
        let p = parse_path(4, "1 2 | -3 1 | 2 2 | 1 1 | 1 1 | 1 1 | 1 1").unwrap();
        for (l, m) in [(1, 2), (2, 3), (1, 4)] {
            let a = evolve(&evolve(&p, l).0, m).0;
            let b = evolve(&evolve(&p, m).0, l).0;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn mirrored_evolution_is_the_star_conjugate() {
        let p = parse_path(4, "1 2 4 | -3 1 | 2 -1 | 1 1 | 1 1").unwrap();
        for l in 1..=6 {
            let direct = star_evolve(&p, l).0;
            let conjugated = evolve(&p.star(), l).0.star();
            assert_eq!(direct, conjugated);
        }
        assert_eq!(
            t_star_infinity(&p).unwrap(),
            t_infinity(&p.star()).unwrap().star()
        );
    }

    #[test]
    fn counting_table_first_columns() {
        let (n, rows) = load_trace("mixed_capacity.trace");
        let want: [(EnergyKind, [i64; 2]); 8] = [
            (EnergyKind::V(0), [6, 11]),
            (EnergyKind::V(1), [5, 10]),
            (EnergyKind::V(2), [4, 9]),
            (EnergyKind::V(3), [3, 8]),
            (EnergyKind::VStar(3), [2, 6]),
            (EnergyKind::WMinusV(2), [2, 5]),
            (EnergyKind::WMinusV(1), [1, 3]),
            (EnergyKind::V0Sigma1, [0, 2]),
        ];
        for k in 1..=2usize {
            let prefix = rows[0].prefix(k);
            for (g, cols) in &want {
                assert_eq!(rho_g(&prefix, *g).unwrap(), cols[k - 1], "{g} at k={k}");
                let direct = rho_colors(&prefix, &color_list(*g, n).unwrap()).unwrap();
                assert_eq!(direct, cols[k - 1], "{g} via colors at k={k}");
            }
        }
    }

    #[test]
    fn empty_color_set_counts_next_row() {
        let (n, rows) = load_trace("mixed_capacity.trace");
        let p = rows[0].prefix(3);
        let all: Vec<Letter> = color_list(EnergyKind::V(0), n).unwrap();
        assert_eq!(
            rho_colors(&p, &[]).unwrap(),
            rho_colors(&t_infinity(&p).unwrap(), &all).unwrap()
        );
    }

    #[test]
    fn subsidiary_counting_relation() {
        let (_, rows) = load_trace("mixed_capacity.trace");
        for k in 1..=4 {
            let p = rows[0].prefix(k);
            assert_eq!(
                rho_g(&p, EnergyKind::V0Sigma1).unwrap(),
                rho_g(&p, EnergyKind::WMinusV(1)).unwrap() - rho_g(&p, EnergyKind::V(0)).unwrap()
                    + rho_g(&p, EnergyKind::V(1)).unwrap()
            );
        }
    }

    #[test]
    fn reconstruction_roundtrip() {
        let (n, rows) = load_trace("mixed_capacity.trace");
        let p = &rows[0];
        let kinds: Vec<EnergyKind> = (0..n)
            .map(EnergyKind::V)
            .chain([EnergyKind::VStar(n - 1)])
            .chain((1..=n - 2).map(EnergyKind::WMinusV))
            .collect();
        let mut prev: HashMap<EnergyKind, i64> = kinds.iter().map(|&g| (g, 0)).collect();
        for k in 1..=p.len() {
            let prefix = p.prefix(k);
            let cur: HashMap<EnergyKind, i64> = kinds
                .iter()
                .map(|&g| (g, rho_g(&prefix, g).unwrap()))
                .collect();
            let b = reconstruct(n, p.boxes()[k - 1].capacity(), |g| {
                Some(cur.get(&g)? - prev.get(&g)?)
            })
            .unwrap();
            assert_eq!(b, p.boxes()[k - 1], "box {k}");
            if k == 3 {
                // frozen spot check of the increments feeding the formulas
                let d = |g: EnergyKind| cur[&g] - prev[&g];
                assert_eq!(d(EnergyKind::V(0)), 10);
                assert_eq!(d(EnergyKind::V(1)), 9);
                assert_eq!(d(EnergyKind::V(2)), 8);
                assert_eq!(d(EnergyKind::V(3)), 7);
                assert_eq!(d(EnergyKind::VStar(3)), 7);
                assert_eq!(d(EnergyKind::WMinusV(2)), 7);
                assert_eq!(d(EnergyKind::WMinusV(1)), 6);
            }
            prev = cur;
        }
    }

    #[test]
    fn reconstruction_rejects_bad_increments() {
        let deltas: HashMap<EnergyKind, i64> = [
            (EnergyKind::V(0), 5),
            (EnergyKind::V(1), 0),
            (EnergyKind::V(2), 0),
            (EnergyKind::VStar(2), 0),
            (EnergyKind::WMinusV(1), 0),
        ]
        .into();
        let r = reconstruct(3, 1, |g| deltas.get(&g).copied());
        assert!(matches!(r, Err(Error::InconsistentDeltas(_))));
        let r = reconstruct(3, 1, |_| None);
        assert!(matches!(r, Err(Error::InconsistentDeltas(_))));
    }
}
