use crate::error::{Error, Result};
use crate::kind::EnergyKind;

/// One letter of the alphabet `1 < 2 < ... < n-1 < {n, n-bar} < ... < 1-bar`.
/// Letter `a` is stored as `a`, its barred partner as `-a`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter(pub i32);

impl Letter {
    pub fn bar(self) -> Letter {
        Letter(-self.0)
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// The color `a` of the letter, ignoring the bar.
    pub fn color(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// Position in the total order; `n` sorts just before `n-bar` but the two
    /// never share a box.
    pub fn order_key(self, n: usize) -> usize {
        if self.is_barred() {
            2 * n + 1 - self.color()
        } else {
            self.color()
        }
    }

    pub fn validate(self, n: usize) -> Result<()> {
        if self.0 == 0 || self.color() > n {
            return Err(Error::Parse(format!("letter {} out of range", self.0)));
        }
        Ok(())
    }
}

/// Largest supported box capacity.
pub const MAX_CAPACITY: i64 = 1 << 40;

/// A box of capacity `l`: multiplicities `(z_1..z_n, zbar_n..zbar_1)` of each
/// letter, all nonnegative, summing to `l`, with `z_n * zbar_n = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BoxState {
    n: usize,
    zeta: Vec<i64>,
}

impl BoxState {
    pub fn new(n: usize, zeta: Vec<i64>) -> Result<Self> {
        if n < 3 {
            return Err(Error::Rank(n));
        }
        if zeta.len() != 2 * n {
            return Err(Error::InvalidBox(format!(
                "need 2n={} multiplicities, got {}",
                2 * n,
                zeta.len()
            )));
        }
        if zeta.iter().any(|&c| c < 0) {
            return Err(Error::InvalidBox("negative multiplicity".into()));
        }
        // cap the capacity so the linear and quadratic forms downstream can
        // never leave i64
        if zeta.iter().sum::<i64>() > MAX_CAPACITY {
            return Err(Error::InvalidBox(format!(
                "capacity above the supported bound {MAX_CAPACITY}"
            )));
        }
        let b = BoxState { n, zeta };
        if b.z(n) != 0 && b.zbar(n) != 0 {
            return Err(Error::InvalidBox(format!(
                "letters {n} and -{n} cannot share a box"
            )));
        }
        Ok(b)
    }

    /// The vacuum `u_l`, all letters equal to 1.  Exempt from the capacity
    /// bound: stabilized evolutions grow their carriers past it.
    pub fn vacuum(n: usize, l: i64) -> Self {
        assert!(n >= 3 && l >= 0, "vacuum needs a rank and a capacity");
        let mut zeta = vec![0; 2 * n];
        zeta[0] = l;
        BoxState { n, zeta }
    }

    /// The dual vacuum `u*_l`, all letters equal to 1-bar.
    pub fn star_vacuum(n: usize, l: i64) -> Self {
        assert!(n >= 3 && l >= 0, "vacuum needs a rank and a capacity");
        let mut zeta = vec![0; 2 * n];
        zeta[2 * n - 1] = l;
        BoxState { n, zeta }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Multiplicity of letter `i`, `1 <= i <= n`.
    pub fn z(&self, i: usize) -> i64 {
        debug_assert!((1..=self.n).contains(&i));
        self.zeta[i - 1]
    }

    /// Multiplicity of letter `i-bar`, `1 <= i <= n`.
    pub fn zbar(&self, i: usize) -> i64 {
        debug_assert!((1..=self.n).contains(&i));
        self.zeta[2 * self.n - i]
    }

    pub fn zeta(&self) -> &[i64] {
        &self.zeta
    }

    pub fn capacity(&self) -> i64 {
        self.zeta.iter().sum()
    }

    pub fn is_vacuum(&self) -> bool {
        self.z(1) == self.capacity()
    }

    pub fn is_star_vacuum(&self) -> bool {
        self.zbar(1) == self.capacity()
    }

    /// `a(zeta) = l - z_1 + zbar_1`: every letter other than 1 counts once,
    /// 1-bar counts twice.
    pub fn a_count(&self) -> i64 {
        self.capacity() - self.z(1) + self.zbar(1)
    }

    /// `a` of the star image.
    pub fn a_count_star(&self) -> i64 {
        self.star().a_count()
    }

    /// First-term weight of the counting function for the given kind.
    pub fn gamma(&self, g: EnergyKind) -> Result<i64> {
        let n = self.n;
        g.validate(n)?;
        let z_tail: i64 = (2..=n).map(|i| self.z(i)).sum();
        match g {
            EnergyKind::V(a) if a <= n - 2 => {
                let zb: i64 = (a + 1..=n).map(|i| self.zbar(i)).sum();
                Ok(z_tail + zb + self.zbar(1))
            }
            EnergyKind::V(_) => Ok(z_tail + self.zbar(1)),
            EnergyKind::VStar(a) if a == n - 1 => {
                let z_mid: i64 = (2..=n - 1).map(|i| self.z(i)).sum();
                Ok(z_mid + self.zbar(n) + self.zbar(1))
            }
            EnergyKind::WMinusV(a) => {
                let z_mid: i64 = (2..=a).map(|i| self.z(i)).sum();
                Ok(z_mid + self.zbar(1))
            }
            EnergyKind::V0Sigma1 => Ok(0),
            EnergyKind::W(a) if a <= n - 2 => {
                Ok(self.gamma(EnergyKind::WMinusV(a))? + self.gamma(EnergyKind::V(a))?)
            }
            _ => Err(Error::UnsupportedKind(
                g.to_string(),
                "no first-term weight for this kind".into(),
            )),
        }
    }

    /// First-term weight on the star side, `gamma*_{v*_a} (1 <= a <= n-2)`.
    pub fn gamma_star(&self, a: usize) -> Result<i64> {
        if !(1..=self.n - 2).contains(&a) {
            return Err(Error::UnsupportedKind(
                format!("v*{a}"),
                format!("star-side weight needs 1 <= a <= n-2, n={}", self.n),
            ));
        }
        self.star().gamma(EnergyKind::V(a))
    }

    /// Swaps `z_i` with `zbar_i` for all `i < n`, keeping `z_n`, `zbar_n`.
    pub fn star(&self) -> Self {
        let n = self.n;
        let mut zeta = self.zeta.clone();
        for i in 1..n {
            zeta.swap(i - 1, 2 * n - i);
        }
        BoxState { n, zeta }
    }

    /// Swaps the multiplicities of 1 and 1-bar.
    pub fn sigma1(&self) -> Self {
        let mut zeta = self.zeta.clone();
        let last = zeta.len() - 1;
        zeta.swap(0, last);
        BoxState { n: self.n, zeta }
    }

    /// Swaps the multiplicities of n and n-bar.
    pub fn sigman(&self) -> Self {
        let n = self.n;
        let mut zeta = self.zeta.clone();
        zeta.swap(n - 1, n);
        BoxState { n, zeta }
    }

    /// Classical weight `(z_1 - zbar_1, ..., z_n - zbar_n)`.
    pub fn weight(&self) -> Vec<i64> {
        (1..=self.n).map(|i| self.z(i) - self.zbar(i)).collect()
    }

    /// The letters of the box in weakly increasing order.
    pub fn letters(&self) -> Vec<Letter> {
        let n = self.n;
        let mut out = Vec::with_capacity(self.capacity() as usize);
        for i in 1..=n {
            out.extend(std::iter::repeat(Letter(i as i32)).take(self.z(i) as usize));
        }
        for i in (1..=n).rev() {
            out.extend(std::iter::repeat(Letter(-(i as i32))).take(self.zbar(i) as usize));
        }
        out
    }

    pub fn from_letters(n: usize, letters: &[Letter]) -> Result<Self> {
        let mut zeta = vec![0i64; 2 * n];
        for &lt in letters {
            lt.validate(n)?;
            let idx = if lt.is_barred() {
                2 * n - lt.color()
            } else {
                lt.color() - 1
            };
            zeta[idx] += 1;
        }
        BoxState::new(n, zeta)
    }

    /// Conversion to the unconstrained coordinates.
    pub fn to_x(&self) -> XCoords {
        let n = self.n;
        let mut x = vec![0i64; 2 * n - 1];
        for i in 1..=n - 2 {
            x[i - 1] = self.z(i);
            x[2 * n - 1 - i] = self.zbar(i);
        }
        x[n - 2] = self.z(n - 1) + self.zbar(n);
        x[n - 1] = self.z(n) - self.zbar(n);
        x[n] = self.zbar(n - 1) + self.zbar(n);
        XCoords { n, x }
    }

    /// Every box of rank `n` and capacity `l`.
    pub fn enumerate(n: usize, l: i64) -> Vec<BoxState> {
        let mut out = Vec::new();
        let mut zeta = vec![0i64; 2 * n];
        fn rec(out: &mut Vec<BoxState>, zeta: &mut Vec<i64>, pos: usize, rest: i64, n: usize) {
            if pos + 1 == zeta.len() {
                zeta[pos] = rest;
                if let Ok(b) = BoxState::new(n, zeta.clone()) {
                    out.push(b);
                }
                return;
            }
            for c in 0..=rest {
                zeta[pos] = c;
                rec(out, zeta, pos + 1, rest - c, n);
            }
            zeta[pos] = 0;
        }
        rec(&mut out, &mut zeta, 0, l, n);
        out
    }
}

/// Coordinates `(x_1..x_n, xbar_{n-1}..xbar_1)` with `x_i, xbar_i >= 0` for
/// `i <= n-1` and `x_n >= -min(x_{n-1}, xbar_{n-1})`; `x_n` may be negative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XCoords {
    n: usize,
    x: Vec<i64>,
}

impl XCoords {
    pub fn new(n: usize, x: Vec<i64>) -> Result<Self> {
        if n < 3 {
            return Err(Error::Rank(n));
        }
        if x.len() != 2 * n - 1 {
            return Err(Error::InvalidX(format!(
                "need 2n-1={} coordinates, got {}",
                2 * n - 1,
                x.len()
            )));
        }
        let c = XCoords { n, x };
        for i in 1..=n - 1 {
            if c.xu(i) < 0 || c.xb(i) < 0 {
                return Err(Error::InvalidX(format!("coordinate {i} negative")));
            }
        }
        if c.xu(n) < -c.xu(n - 1).min(c.xb(n - 1)) {
            return Err(Error::InvalidX("x_n below the allowed floor".into()));
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x_i`, `1 <= i <= n`.
    pub fn xu(&self, i: usize) -> i64 {
        debug_assert!((1..=self.n).contains(&i));
        self.x[i - 1]
    }

    /// `xbar_i`, `1 <= i <= n-1`.
    pub fn xb(&self, i: usize) -> i64 {
        debug_assert!((1..=self.n - 1).contains(&i));
        self.x[2 * self.n - 1 - i]
    }

    /// Capacity `l(x) = sum_{i<n} (x_i + xbar_i) + x_n`.
    pub fn ell(&self) -> i64 {
        let head: i64 = (1..=self.n - 1).map(|i| self.xu(i) + self.xb(i)).sum();
        head + self.xu(self.n)
    }

    pub fn to_box(&self) -> BoxState {
        let n = self.n;
        let mut zeta = vec![0i64; 2 * n];
        for i in 1..=n - 2 {
            zeta[i - 1] = self.xu(i);
            zeta[2 * n - i] = self.xb(i);
        }
        let xn = self.xu(n);
        zeta[n - 1] = xn.max(0);
        zeta[n] = (-xn).max(0);
        zeta[n - 2] = self.xu(n - 1) + xn.min(0);
        zeta[n + 1] = self.xb(n - 1) + xn.min(0);
        BoxState::new(n, zeta).expect("x-coordinate invariants give a valid box")
    }

    /// Swaps `x_1` and `xbar_1`.
    pub fn sigma1(&self) -> Self {
        let n = self.n;
        let mut x = self.x.clone();
        x.swap(0, 2 * n - 2);
        XCoords { n, x }
    }

    /// `x_{n-1} += x_n`, `xbar_{n-1} += x_n`, `x_n := -x_n`.
    pub fn sigman(&self) -> Self {
        let n = self.n;
        let mut x = self.x.clone();
        let xn = x[n - 1];
        x[n - 2] += xn;
        x[n] += xn;
        x[n - 1] = -xn;
        XCoords { n, x }
    }

    /// Swaps `x_i` with `xbar_i` for all `i < n`.
    pub fn star(&self) -> Self {
        let n = self.n;
        let mut x = self.x.clone();
        for i in 1..n {
            x.swap(i - 1, 2 * n - 1 - i);
        }
        XCoords { n, x }
    }
}

/// A finite sequence of boxes of a common rank, leftmost first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Path {
    n: usize,
    boxes: Vec<BoxState>,
}

impl Path {
    pub fn new(n: usize, boxes: Vec<BoxState>) -> Result<Self> {
        if n < 3 {
            return Err(Error::Rank(n));
        }
        for b in &boxes {
            if b.n() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    got: b.n(),
                });
            }
        }
        Ok(Path { n, boxes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn boxes(&self) -> &[BoxState] {
        &self.boxes
    }

    pub fn shape(&self) -> Vec<i64> {
        self.boxes.iter().map(|b| b.capacity()).collect()
    }

    pub fn prefix(&self, k: usize) -> Path {
        Path {
            n: self.n,
            boxes: self.boxes[..k].to_vec(),
        }
    }

    pub fn is_vacuum(&self) -> bool {
        self.boxes.iter().all(|b| b.is_vacuum())
    }

    pub fn is_star_vacuum(&self) -> bool {
        self.boxes.iter().all(|b| b.is_star_vacuum())
    }

    /// Star of the whole tensor product: reverses the order and stars each box.
    pub fn star(&self) -> Path {
        Path {
            n: self.n,
            boxes: self.boxes.iter().rev().map(|b| b.star()).collect(),
        }
    }

    pub fn weight(&self) -> Vec<i64> {
        let mut w = vec![0i64; self.n];
        for b in &self.boxes {
            for (acc, v) in w.iter_mut().zip(b.weight()) {
                *acc += v;
            }
        }
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bx(n: usize, zeta: &[i64]) -> BoxState {
        BoxState::new(n, zeta.to_vec()).unwrap()
    }

    #[test]
    fn coordinate_conversion_example() {
        // the box 1113 44bar 2bar of capacity 7
        let b = bx(4, &[3, 0, 1, 0, 2, 0, 1, 0]);
        let x = b.to_x();
        assert_eq!(x.x, vec![3, 0, 3, -2, 2, 1, 0]);
        assert_eq!(x.ell(), 7);
        assert_eq!(x.to_box(), b);
    }

    #[test]
    fn star_example() {
        let b = bx(4, &[1, 1, 0, 1, 0, 1, 1, 1]);
        assert_eq!(b.star(), bx(4, &[1, 1, 1, 1, 0, 0, 1, 1]));
        assert_eq!(b.star().star(), b);
    }

    #[test]
    fn functional_values() {
        let b = bx(4, &[1, 1, 0, 1, 0, 1, 1, 1]);
        assert_eq!(b.a_count(), 6);
        assert_eq!(b.gamma(EnergyKind::V(0)).unwrap(), 6);
        assert_eq!(b.gamma(EnergyKind::WMinusV(1)).unwrap(), 1);
        // v1: letters 2..n once, bars from 2 up, 1bar once
        assert_eq!(b.gamma(EnergyKind::V(1)).unwrap(), 5);
        assert_eq!(b.gamma(EnergyKind::V(3)).unwrap(), 3);
        assert_eq!(b.gamma(EnergyKind::VStar(3)).unwrap(), 2);
        assert_eq!(b.gamma(EnergyKind::V0Sigma1).unwrap(), 0);
        assert_eq!(
            b.gamma(EnergyKind::W(2)).unwrap(),
            b.gamma(EnergyKind::WMinusV(2)).unwrap() + b.gamma(EnergyKind::V(2)).unwrap()
        );
        assert!(b.gamma(EnergyKind::VStar(1)).is_err());
        assert!(b.gamma(EnergyKind::W(3)).is_err());
    }

    #[test]
    fn vacuum_functionals_vanish() {
        let u = BoxState::vacuum(4, 5);
        assert_eq!(u.a_count(), 0);
        for g in EnergyKind::counting_kinds(4) {
            assert_eq!(u.gamma(g).unwrap(), 0);
        }
        let us = BoxState::star_vacuum(4, 5);
        assert_eq!(us.a_count_star(), 0);
        assert_eq!(us, BoxState::vacuum(4, 5).star());
    }

    #[test]
    fn roundtrip_and_involutions_exhaustive() {
        for n in 3..=5 {
            for l in 0..=2 {
                for b in BoxState::enumerate(n, l) {
                    let x = b.to_x();
                    assert_eq!(x.ell(), l);
                    assert_eq!(x.to_box(), b);
                    XCoords::new(n, x.x.clone()).unwrap();
                    // involutions agree between the two coordinate systems
                    assert_eq!(x.star().to_box(), b.star());
                    assert_eq!(x.sigma1().to_box(), b.sigma1());
                    assert_eq!(x.sigman().to_box(), b.sigman());
                    // and are involutions
                    assert_eq!(x.star().star(), x);
                    assert_eq!(x.sigma1().sigma1(), x);
                    assert_eq!(x.sigman().sigman().to_box(), b);
                    // capacities survive
                    assert_eq!(x.star().ell(), l);
                    assert_eq!(x.sigman().ell(), l);
                }
            }
        }
    }

    #[test]
    fn letters_roundtrip() {
        for b in BoxState::enumerate(3, 3) {
            let w = b.letters();
            assert_eq!(w.len(), 3);
            assert!(w.windows(2).all(|p| p[0].order_key(3) <= p[1].order_key(3)));
            assert_eq!(BoxState::from_letters(3, &w).unwrap(), b);
        }
    }

    #[test]
    fn rejects_invalid() {
        assert!(BoxState::new(2, vec![0; 4]).is_err());
        assert!(BoxState::new(3, vec![1, 0, 1, 1, 0, 0]).is_err());
        assert!(BoxState::new(3, vec![1, 0, -1, 1, 0, 0]).is_err());
        assert!(XCoords::new(3, vec![0, 0, -1, 0, 0]).is_err());
        assert!(XCoords::new(3, vec![0, 1, -1, 1, 0]).is_ok());
    }
}
