//! Generalized energies of a state: the defining double sum over dragged
//! factors, the equivalent corner-diagram sum, the mirrored corner sum, and
//! the per-corner vertex sums used for invariance checks.

use crate::boxstate::{BoxState, Path};
use crate::error::{Error, Result};
use crate::kind::EnergyKind;
use crate::rmatrix::{apply_r, stable_energies, Pieces};

/// Energies of every kind for every prefix of a state.
#[derive(Clone, Debug)]
pub struct EnergyTable {
    pub kinds: Vec<EnergyKind>,
    /// `rows[k-1]` holds the energies of the length-`k` prefix.
    pub rows: Vec<Vec<i64>>,
}

impl EnergyTable {
    pub fn value(&self, g: EnergyKind, k: usize) -> Option<i64> {
        let col = self.kinds.iter().position(|&h| h == g)?;
        if k == 0 {
            return Some(0);
        }
        Some(self.rows.get(k - 1)?[col])
    }

    pub fn last(&self, g: EnergyKind) -> Option<i64> {
        self.value(g, self.rows.len())
    }
}

/// Drags the box at `j` (0-based) to the front through the original factors,
/// accumulating every kind of local energy at the crossings, and finishes at
/// the infinite-capacity vacuum.  Returns the vertex sums, kind by kind.
fn drag_contribution(boxes: &[BoxState], j: usize, kinds: &[EnergyKind]) -> Result<Vec<i64>> {
    let mut sums = vec![0i64; kinds.len()];
    let mut q = boxes[j].clone();
    for k in (0..j).rev() {
        let r = apply_r(&boxes[k], &q);
        for (acc, &g) in sums.iter_mut().zip(kinds) {
            *acc += r.pieces.energy(g)?;
        }
        q = r.left;
    }
    let (_, stable) = stable_energies(&q, kinds)?;
    for (acc, v) in sums.iter_mut().zip(stable) {
        *acc += v;
    }
    Ok(sums)
}

/// The vertex sum of one corner: all crossings produced while the last box
/// of `p` is dragged to the front, the leading vacuum included.
pub fn vertex_sum(p: &Path, g: EnergyKind) -> Result<i64> {
    g.validate(p.n())?;
    if p.is_empty() {
        return Ok(0);
    }
    Ok(drag_contribution(p.boxes(), p.len() - 1, &[g])?[0])
}

/// Every generalized energy of every prefix, via the defining sum.  One drag
/// per prefix serves all kinds at once.
pub fn energies(p: &Path) -> Result<EnergyTable> {
    let kinds = EnergyKind::report_kinds(p.n());
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(p.len());
    let mut acc = vec![0i64; kinds.len()];
    for j in 0..p.len() {
        let inc = drag_contribution(p.boxes(), j, &kinds)?;
        for (a, v) in acc.iter_mut().zip(inc) {
            *a += v;
        }
        rows.push(acc.clone());
    }
    Ok(EnergyTable { kinds, rows })
}

/// One generalized energy of the whole state.
pub fn energy(p: &Path, g: EnergyKind) -> Result<i64> {
    g.validate(p.n())?;
    if p.is_empty() {
        return Ok(0);
    }
    let mut total = 0;
    for j in 0..p.len() {
        total += drag_contribution(p.boxes(), j, &[g])?[0];
    }
    Ok(total)
}

fn corner_pass(p: &Path, kinds: &[EnergyKind], l: i64) -> Result<Vec<i64>> {
    let mut sums = vec![0i64; kinds.len()];
    let mut carrier = BoxState::vacuum(p.n(), l);
    let mut reflected: Vec<BoxState> = Vec::new();
    for b in p.boxes() {
        let mut c = b.clone();
        let r = apply_r(&carrier, &c);
        for (acc, &g) in sums.iter_mut().zip(kinds) {
            *acc += r.pieces.energy(g)?;
        }
        c = r.left;
        carrier = r.right;
        for q in reflected.iter_mut() {
            let r = apply_r(q, &c);
            for (acc, &g) in sums.iter_mut().zip(kinds) {
                *acc += r.pieces.energy(g)?;
            }
            c = r.left;
            *q = r.right;
        }
        reflected.push(c);
    }
    Ok(sums)
}

fn corner_star_pass(p: &Path, a: usize, l: i64) -> Result<i64> {
    let mut sum = 0;
    let mut carrier = BoxState::star_vacuum(p.n(), l);
    let mut reflected: Vec<BoxState> = Vec::new();
    for b in p.boxes().iter().rev() {
        let mut c = b.clone();
        let r = apply_r(&c, &carrier);
        sum += r.pieces.energy(EnergyKind::VStar(a))?;
        c = r.right;
        carrier = r.left;
        for q in reflected.iter_mut() {
            let r = apply_r(&c, q);
            sum += r.pieces.energy(EnergyKind::VStar(a))?;
            c = r.right;
            *q = r.left;
        }
        reflected.push(c);
    }
    Ok(sum)
}

fn corner_carrier_capacity(p: &Path) -> i64 {
    let load: i64 = p.boxes().iter().map(|b| b.a_count() + b.a_count_star()).sum();
    let cap = p.shape().into_iter().max().unwrap_or(0);
    (load + cap + 1).max(1)
}

/// The corner-diagram form of the generalized energy: one big carrier sweeps
/// down-right while every box, reflected at the wall, crosses all later ones.
/// Valid for `v_i`, `w_i`, `w_i - v_i`, `v0^s1` and `v*_{n-1}`.
pub fn corner_energy(p: &Path, g: EnergyKind) -> Result<i64> {
    let n = p.n();
    g.validate(n)?;
    if matches!(g, EnergyKind::VStar(a) if a != n - 1) {
        return Err(Error::UnsupportedKind(
            g.to_string(),
            "the corner sum only covers the mirrored kind for a = n-1".into(),
        ));
    }
    if p.is_empty() {
        return Ok(0);
    }
    let l0 = corner_carrier_capacity(p);
    let mut l = l0;
    let mut prev = corner_pass(p, &[g], l)?;
    while l <= 64 * l0 {
        let next = corner_pass(p, &[g], 2 * l)?;
        if next == prev {
            return Ok(prev[0]);
        }
        prev = next;
        l *= 2;
    }
    Err(Error::CarrierUnstable { cap: 64 * l0 })
}

/// The mirrored corner sum for `v*_a`, `1 <= a <= n-2`: the big dual carrier
/// enters from the right and the boxes reflect off the right wall.
pub fn corner_energy_star(p: &Path, a: usize) -> Result<i64> {
    let n = p.n();
    if !(1..=n - 2).contains(&a) {
        return Err(Error::UnsupportedKind(
            format!("v*{a}"),
            format!("the mirrored corner sum needs 1 <= a <= n-2, n={n}"),
        ));
    }
    if p.is_empty() {
        return Ok(0);
    }
    let l0 = corner_carrier_capacity(p);
    let mut l = l0;
    let mut prev = corner_star_pass(p, a, l)?;
    while l <= 64 * l0 {
        let next = corner_star_pass(p, a, 2 * l)?;
        if next == prev {
            return Ok(prev);
        }
        prev = next;
        l *= 2;
    }
    Err(Error::CarrierUnstable { cap: 64 * l0 })
}

/// Replaces the adjacent pair at positions `i, i+1` (0-based) by its image
/// under the combinatorial R.
pub fn r_swap(p: &Path, i: usize) -> Path {
    let mut boxes = p.boxes().to_vec();
    let r = apply_r(&boxes[i], &boxes[i + 1]);
    boxes[i] = r.left;
    boxes[i + 1] = r.right;
    Path::new(p.n(), boxes).expect("ranks preserved")
}

/// Local energies of one adjacent pair, for reporting.
pub fn pair_pieces(a: &BoxState, b: &BoxState) -> Pieces {
    Pieces::compute(&a.to_x(), &b.to_x())
}
