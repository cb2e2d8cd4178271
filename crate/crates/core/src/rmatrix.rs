//! The combinatorial R on `B_l (x) B_m` via the piecewise linear formula,
//! the piece functions `V_i`, `W_i` and the generalized local energies.

use crate::boxstate::{BoxState, XCoords};
use crate::error::{Error, Result};
use crate::kind::EnergyKind;

/// `V_i(x, y)` for `0 <= i <= n-1`.
fn v_of(x: &XCoords, y: &XCoords, i: usize) -> i64 {
    let n = x.n();
    debug_assert!(i <= n - 1);
    let lx = x.ell();
    let ly = y.ell();
    let mut best = i64::MIN;
    // theta
    for j in 1..=n - 2 {
        let t = if j <= i {
            lx + (j + 1..=i).map(|k| y.xb(k) - x.xb(k)).sum::<i64>()
        } else {
            ly + (i + 1..=j).map(|k| x.xb(k) - y.xb(k)).sum::<i64>()
        };
        best = best.max(t);
    }
    // theta'
    for j in 1..=n - 2 {
        let t = lx
            + (1..=i).map(|k| y.xb(k) - x.xb(k)).sum::<i64>()
            + (1..=j).map(|k| y.xu(k) - x.xu(k)).sum::<i64>();
        best = best.max(t);
    }
    // eta
    for j in 1..=n {
        let t = if j <= i {
            lx + (j + 1..=i).map(|k| y.xb(k) - x.xb(k)).sum::<i64>() + y.xb(j) - x.xu(j)
        } else if j <= n - 1 {
            ly + (i + 1..=j).map(|k| x.xb(k) - y.xb(k)).sum::<i64>() + y.xb(j) - x.xu(j)
        } else {
            ly + (i + 1..=n - 1).map(|k| x.xb(k) - y.xb(k)).sum::<i64>() + x.xu(n)
        };
        best = best.max(t);
    }
    // eta'
    for j in 1..=n {
        let t = if j <= n - 1 {
            lx + (1..=i).map(|k| y.xb(k) - x.xb(k)).sum::<i64>()
                + (1..=j).map(|k| y.xu(k) - x.xu(k)).sum::<i64>()
                + x.xu(j)
                - y.xb(j)
        } else {
            let delta = if i == n - 1 { lx - ly } else { 0 };
            lx + delta
                + (1..=i).map(|k| y.xb(k) - x.xb(k)).sum::<i64>()
                + (1..=n - 1).map(|k| y.xu(k) - x.xu(k)).sum::<i64>()
                - x.xu(n)
        };
        best = best.max(t);
    }
    best
}

/// All piece values of one ordered pair, used both for the R image and for
/// every generalized local energy.
#[derive(Clone, Debug)]
pub struct Pieces {
    n: usize,
    ell_x: i64,
    ell_y: i64,
    v: Vec<i64>,
    vstar: Vec<i64>,
    v0s1: i64,
    w: Vec<i64>,
}

impl Pieces {
    pub fn compute(x: &XCoords, y: &XCoords) -> Pieces {
        let n = x.n();
        assert_eq!(n, y.n(), "rank mismatch in pair");
        let xs = x.star();
        let ys = y.star();
        let v: Vec<i64> = (0..n).map(|i| v_of(x, y, i)).collect();
        let vstar: Vec<i64> = (0..n).map(|i| v_of(&ys, &xs, i)).collect();
        debug_assert_eq!(v[0], vstar[0]);
        let v0s1 = v_of(&x.sigma1(), &y.sigma1(), 0);
        let mut w = vec![0i64; n];
        w[0] = 2 * v[0];
        w[1] = v[0] + v0s1;
        w[n - 1] = v[n - 1] + vstar[n - 1];
        for i in 2..n - 1 {
            w[i] = (v[i] + vstar[i - 1] - y.xu(i)).max(v[i - 1] + vstar[i] - x.xb(i))
                + x.xu(i).min(y.xb(i));
        }
        Pieces {
            n,
            ell_x: x.ell(),
            ell_y: y.ell(),
            v,
            vstar,
            v0s1,
            w,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Uppercase piece value.
    pub fn piece(&self, g: EnergyKind) -> Result<i64> {
        g.validate(self.n)?;
        Ok(match g {
            EnergyKind::V(a) => self.v[a],
            EnergyKind::V0Sigma1 => self.v0s1,
            EnergyKind::VStar(a) => self.vstar[a],
            EnergyKind::W(a) => self.w[a],
            EnergyKind::WMinusV(a) => self.w[a] - self.v[a],
        })
    }

    /// Lowercase generalized local energy: nonnegative, zero on vacuum pairs.
    pub fn energy(&self, g: EnergyKind) -> Result<i64> {
        let s = self.ell_x + self.ell_y;
        Ok(match g {
            EnergyKind::W(_) => 2 * s - self.piece(g)?,
            _ => s - self.piece(g)?,
        })
    }

    /// Local energy `H = V_0`.
    pub fn h(&self) -> i64 {
        self.v[0]
    }
}

/// Result of one application `R(left (x) right) = left' (x) right'`; the
/// capacities of the two factors are exchanged.
#[derive(Clone, Debug)]
pub struct RApply {
    pub left: BoxState,
    pub right: BoxState,
    pub pieces: Pieces,
}

pub fn apply_r(xi: &BoxState, zeta: &BoxState) -> RApply {
    let n = xi.n();
    assert_eq!(n, zeta.n(), "rank mismatch in pair");
    let x = xi.to_x();
    let y = zeta.to_x();
    let p = Pieces::compute(&x, &y);
    let mut xp = vec![0i64; 2 * n - 1];
    let mut yp = vec![0i64; 2 * n - 1];
    for i in 1..=n - 1 {
        xp[i - 1] = x.xu(i) + p.vstar[i - 1] - p.vstar[i];
        xp[2 * n - 1 - i] = x.xb(i) + p.vstar[i - 1] + p.w[i] - p.vstar[i] - p.w[i - 1];
        yp[i - 1] = y.xu(i) + p.v[i - 1] + p.w[i] - p.v[i] - p.w[i - 1];
        yp[2 * n - 1 - i] = y.xb(i) + p.v[i - 1] - p.v[i];
    }
    xp[n - 1] = x.xu(n) + p.vstar[n - 1] - p.v[n - 1];
    yp[n - 1] = y.xu(n) + p.v[n - 1] - p.vstar[n - 1];
    let xnew = XCoords::new(n, xp).expect("R image is a valid element");
    let ynew = XCoords::new(n, yp).expect("R image is a valid element");
    debug_assert_eq!(xnew.ell(), x.ell());
    debug_assert_eq!(ynew.ell(), y.ell());
    RApply {
        left: ynew.to_box(),
        right: xnew.to_box(),
        pieces: p,
    }
}

/// All lowercase energies of one pair.
pub fn local_energy(xi: &BoxState, zeta: &BoxState, g: EnergyKind) -> Result<i64> {
    Pieces::compute(&xi.to_x(), &zeta.to_x()).energy(g)
}

/// Verifies every cell of the transformation table for one pair; returns a
/// description of the first mismatch.
pub fn check_table1(xi: &BoxState, zeta: &BoxState) -> std::result::Result<(), String> {
    let n = xi.n();
    let x = xi.to_x();
    let y = zeta.to_x();
    let base = Pieces::compute(&x, &y);
    let r = apply_r(xi, zeta);
    let pairs: Vec<(&str, Pieces)> = vec![
        ("s1", Pieces::compute(&x.sigma1(), &y.sigma1())),
        ("sn", Pieces::compute(&x.sigman(), &y.sigman())),
        ("star", Pieces::compute(&y.star(), &x.star())),
        ("R", Pieces::compute(&r.left.to_x(), &r.right.to_x())),
    ];
    let expect = |op: &str, got: i64, want: i64, cell: &str| {
        if got != want {
            return Err(format!(
                "{op} on {cell}: got {got}, want {want} for pair {:?} {:?}",
                xi.zeta(),
                zeta.zeta()
            ));
        }
        Ok(())
    };
    for (op, p) in &pairs {
        // V_0 column
        let want_v0 = if *op == "s1" { base.v0s1 } else { base.v[0] };
        expect(op, p.v[0], want_v0, "V0")?;
        // middle V column
        for i in 1..=n - 2 {
            let want = match *op {
                "star" => base.vstar[i],
                "R" => base.w[i] - base.vstar[i],
                _ => base.v[i],
            };
            expect(op, p.v[i], want, &format!("V{i}"))?;
        }
        // V_{n-1} column
        let want_tail = match *op {
            "sn" | "star" => base.vstar[n - 1],
            _ => base.v[n - 1],
        };
        expect(op, p.v[n - 1], want_tail, "Vn-1")?;
        // W column
        for i in 1..=n - 1 {
            expect(op, p.w[i], base.w[i], &format!("W{i}"))?;
        }
    }
    // R fixes the twisted piece as well
    let pr = &pairs[3].1;
    expect("R", pr.v0s1, base.v0s1, "V0^s1")?;
    Ok(())
}

/// Applying R twice gives the pair back, with the same local energy.
pub fn inverse_property(a: &BoxState, b: &BoxState) -> std::result::Result<(), String> {
    let r = apply_r(a, b);
    let back = apply_r(&r.left, &r.right);
    if back.left != *a || back.right != *b {
        return Err(format!(
            "double R moved {:?} (x) {:?}",
            a.zeta(),
            b.zeta()
        ));
    }
    if back.pieces.h() != r.pieces.h() {
        return Err(format!(
            "local energy changed across the inverse at {:?} (x) {:?}",
            a.zeta(),
            b.zeta()
        ));
    }
    Ok(())
}

/// The Yang-Baxter equation on the affinization: both orders of the three
/// adjacent R applications must agree, boxes and energy shifts alike.
pub fn affine_ybe(
    a: &BoxState,
    b: &BoxState,
    c: &BoxState,
) -> std::result::Result<(), String> {
    type Slot = (BoxState, i64);
    let cross = |t: &mut [Slot; 3], at: usize| {
        let r = apply_r(&t[at].0, &t[at + 1].0);
        let h = r.pieces.h();
        let (da, db) = (t[at].1, t[at + 1].1);
        t[at] = (r.left, db + h);
        t[at + 1] = (r.right, da - h);
    };
    let start: [Slot; 3] = [(a.clone(), 0), (b.clone(), 0), (c.clone(), 0)];
    let mut lhs = start.clone();
    cross(&mut lhs, 0);
    cross(&mut lhs, 1);
    cross(&mut lhs, 0);
    let mut rhs = start;
    cross(&mut rhs, 1);
    cross(&mut rhs, 0);
    cross(&mut rhs, 1);
    if lhs != rhs {
        return Err(format!(
            "sides differ on {:?} (x) {:?} (x) {:?}",
            a.zeta(),
            b.zeta(),
            c.zeta()
        ));
    }
    Ok(())
}

/// Energies of `u_l (x) zeta` in the stable large-`l` regime, together with
/// the stabilized right-to-left image of `zeta`.  Doubles the carrier until
/// two consecutive runs agree.
pub fn stable_energies(
    zeta: &BoxState,
    kinds: &[EnergyKind],
) -> Result<(BoxState, Vec<i64>)> {
    let m = zeta.capacity();
    let l0 = m.max(1);
    let run = |l: i64| -> Result<(BoxState, Vec<i64>)> {
        let u = BoxState::vacuum(zeta.n(), l);
        let r = apply_r(&u, zeta);
        let es: Result<Vec<i64>> = kinds.iter().map(|&g| r.pieces.energy(g)).collect();
        Ok((r.left, es?))
    };
    let mut l = l0;
    let mut prev = run(l)?;
    while l <= 64 * l0 {
        let next = run(2 * l)?;
        if next == prev {
            return Ok(prev);
        }
        prev = next;
        l *= 2;
    }
    Err(Error::CarrierUnstable { cap: 64 * l0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_box;

    fn bx(n: usize, s: &str) -> BoxState {
        parse_box(n, s).unwrap()
    }

    #[test]
    fn braid_and_inverse_on_mixed_capacities() {
        let a = bx(3, "2 -3");
        let b = bx(3, "-1");
        let c = bx(3, "3 -2");
        affine_ybe(&a, &b, &c).unwrap();
        affine_ybe(&b, &a, &c).unwrap();
        inverse_property(&a, &b).unwrap();
        inverse_property(&c, &a).unwrap();
        for x in BoxState::enumerate(3, 1) {
            for y in BoxState::enumerate(3, 2) {
                inverse_property(&x, &y).unwrap();
                affine_ybe(&x, &y, &bx(3, "1")).unwrap();
            }
        }
    }

    #[test]
    fn identity_pair_with_all_pieces() {
        let a = bx(3, "2");
        let b = bx(3, "1");
        let r = apply_r(&a, &b);
        assert_eq!(r.left, a);
        assert_eq!(r.right, b);
        let p = &r.pieces;
        assert_eq!(p.v, vec![2, 2, 2]);
        assert_eq!(p.vstar, vec![2, 1, 2]);
        assert_eq!(p.v0s1, 1);
        assert_eq!(p.w, vec![4, 3, 4]);
        assert_eq!(p.h(), 2);
        assert_eq!(p.energy(EnergyKind::V(0)).unwrap(), 0);
    }

    #[test]
    fn carrier_over_barred_box() {
        let u2 = BoxState::vacuum(3, 2);
        let c = bx(3, "-3");
        let r = apply_r(&u2, &c);
        assert_eq!(r.left, BoxState::vacuum(3, 1));
        assert_eq!(r.right, bx(3, "1 -3"));
        let p = &r.pieces;
        assert_eq!(p.v, vec![2, 2, 3]);
        assert_eq!(p.vstar, vec![2, 3, 2]);
        assert_eq!(p.v0s1, 3);
        assert_eq!(p.w, vec![4, 5, 5]);
        for (g, want) in [
            (EnergyKind::V(0), 1),
            (EnergyKind::V(1), 1),
            (EnergyKind::V(2), 0),
            (EnergyKind::VStar(1), 0),
            (EnergyKind::VStar(2), 1),
            (EnergyKind::V0Sigma1, 0),
            (EnergyKind::W(1), 1),
            (EnergyKind::W(2), 1),
            (EnergyKind::WMinusV(1), 0),
        ] {
            assert_eq!(p.energy(g).unwrap(), want, "{g}");
        }
    }

    #[test]
    fn vacuum_pair_attains_maximum() {
        for n in [3usize, 4, 5] {
            let p = Pieces::compute(
                &BoxState::vacuum(n, 3).to_x(),
                &BoxState::vacuum(n, 2).to_x(),
            );
            for i in 0..n {
                assert_eq!(p.v[i], 5);
                assert_eq!(p.vstar[i], 5);
            }
            assert_eq!(p.v0s1, 5);
            for i in 1..n {
                assert_eq!(p.w[i], 10);
            }
            for g in EnergyKind::report_kinds(n) {
                assert_eq!(p.energy(g).unwrap(), 0, "{g}");
            }
        }
    }

    #[test]
    fn involutive_and_identity_on_equal_capacities() {
        for a in BoxState::enumerate(3, 2) {
            for b in BoxState::enumerate(3, 2) {
                let r = apply_r(&a, &b);
                assert_eq!(r.left, a, "R is the identity on equal capacities");
                assert_eq!(r.right, b);
            }
        }
        for a in BoxState::enumerate(3, 2) {
            for b in BoxState::enumerate(3, 1) {
                let r = apply_r(&a, &b);
                assert_eq!(r.left.capacity(), 1);
                assert_eq!(r.right.capacity(), 2);
                let back = apply_r(&r.left, &r.right);
                assert_eq!(back.left, a, "R inverts R");
                assert_eq!(back.right, b);
                // weight is conserved
                let mut w1 = a.weight();
                for (acc, v) in w1.iter_mut().zip(b.weight()) {
                    *acc += v;
                }
                let mut w2 = r.left.weight();
                for (acc, v) in w2.iter_mut().zip(r.right.weight()) {
                    *acc += v;
                }
                assert_eq!(w1, w2);
            }
        }
    }

    #[test]
    fn table_small_exhaustive() {
        for a in BoxState::enumerate(3, 2) {
            for b in BoxState::enumerate(3, 1) {
                check_table1(&a, &b).unwrap();
                check_table1(&b, &a).unwrap();
            }
        }
    }

    #[test]
    fn tail_identity() {
        // w_{n-1} - v_{n-1} = v*_{n-1}
        for a in BoxState::enumerate(4, 1) {
            for b in BoxState::enumerate(4, 2) {
                let p = Pieces::compute(&a.to_x(), &b.to_x());
                assert_eq!(
                    p.energy(EnergyKind::W(3)).unwrap() - p.energy(EnergyKind::V(3)).unwrap(),
                    p.energy(EnergyKind::VStar(3)).unwrap()
                );
            }
        }
    }

    #[test]
    fn large_carrier_matches_first_term_weights() {
        let kinds: Vec<EnergyKind> = EnergyKind::counting_kinds(4)
            .into_iter()
            .chain([EnergyKind::W(1), EnergyKind::W(2)])
            .collect();
        for zeta in BoxState::enumerate(4, 2) {
            let (zp, es) = stable_energies(&zeta, &kinds).unwrap();
            for (&g, &e) in kinds.iter().zip(&es) {
                let coeff = if matches!(g, EnergyKind::W(_)) { 2 } else { 1 };
                let want = zeta.gamma(g).unwrap() + coeff * zp.a_count() - zp.gamma(g).unwrap();
                assert_eq!(e, want, "{g} on {:?}", zeta.zeta());
            }
        }
    }
}
