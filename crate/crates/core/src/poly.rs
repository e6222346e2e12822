//! Multivariate polynomials with algebra-valued coefficients.
//!
//! An [`AmbientPoly`] is a sparse map from exponent vectors to
//! [`AlgebraElement`] coefficients over a fixed [`Setting`]. The variable
//! count is explicit: ambient functions use `m + 1` slots, stem components
//! use `p + 2` slots (last slot `u = r^2`), slice restrictions use `p + 2`
//! slots (last slot `r`).
//!
//! The product is the bilinear extension of the algebra product and is not
//! associative in general; [`assoc_product`] folds a factor list under an
//! explicit [`AssocTree`] parenthesization. Terms are kept in graded
//! lexicographic order, which fixes the serialization order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, Setting};
use crate::error::{Error, Result};
use crate::rational::Rat;

/// Exponent vector; ordered by total degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Monomial {
        Monomial(exps)
    }

    pub fn unit(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `nvars` real variables with algebra coefficients.
/// Zero coefficients are never stored; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq)]
pub struct AmbientPoly {
    setting: Setting,
    nvars: usize,
    terms: BTreeMap<Monomial, AlgebraElement>,
}

impl fmt::Debug for AmbientPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    write!(f, "*x{i}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl AmbientPoly {
    pub fn zero(setting: &Setting, nvars: usize) -> AmbientPoly {
        AmbientPoly {
            setting: setting.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(setting: &Setting, nvars: usize, value: AlgebraElement) -> AmbientPoly {
        let mut p = AmbientPoly::zero(setting, nvars);
        if !value.is_zero() {
            p.terms.insert(Monomial::unit(nvars), value);
        }
        p
    }

    pub fn scalar(setting: &Setting, nvars: usize, value: Rat) -> AmbientPoly {
        AmbientPoly::constant(setting, nvars, setting.algebra().scalar(value))
    }

    pub fn one(setting: &Setting, nvars: usize) -> AmbientPoly {
        AmbientPoly::scalar(setting, nvars, Rat::one())
    }

    /// The coordinate function `x_idx`.
    pub fn var(setting: &Setting, nvars: usize, idx: usize) -> Result<AmbientPoly> {
        if idx >= nvars {
            return Err(Error::VariableOutOfRange { index: idx, nvars });
        }
        let mut p = AmbientPoly::zero(setting, nvars);
        p.terms
            .insert(Monomial::var(nvars, idx), setting.algebra().one());
        Ok(p)
    }

    pub fn from_terms(
        setting: &Setting,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, AlgebraElement)>,
    ) -> Result<AmbientPoly> {
        let mut p = AmbientPoly::zero(setting, nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::InvalidInput(format!(
                    "monomial has {} slots, expected {nvars}",
                    m.nvars()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn setting(&self) -> &Setting {
        &self.setting
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &AlgebraElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &Monomial) -> AlgebraElement {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.setting.algebra().zero())
    }

    fn add_term(&mut self, m: Monomial, c: AlgebraElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &AmbientPoly) -> Result<()> {
        if self.setting != other.setting || self.nvars != other.nvars {
            return Err(Error::SettingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &AmbientPoly) -> AmbientPoly {
        debug_assert!(self.check_compatible(other).is_ok());
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn try_add(&self, other: &AmbientPoly) -> Result<AmbientPoly> {
        self.check_compatible(other)?;
        Ok(self.add(other))
    }

    pub fn sub(&self, other: &AmbientPoly) -> AmbientPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AmbientPoly {
        AmbientPoly {
            setting: self.setting.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> AmbientPoly {
        if r.is_zero() {
            return AmbientPoly::zero(&self.setting, self.nvars);
        }
        AmbientPoly {
            setting: self.setting.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.scale(r)))
                .collect(),
        }
    }

    /// Left multiplication of every coefficient: `a . f`.
    pub fn leftmul(&self, a: &AlgebraElement) -> AmbientPoly {
        let mut out = AmbientPoly::zero(&self.setting, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), a.mul(c));
        }
        out
    }

    /// Right multiplication of every coefficient: `f . a`.
    pub fn rightmul(&self, a: &AlgebraElement) -> AmbientPoly {
        let mut out = AmbientPoly::zero(&self.setting, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(a));
        }
        out
    }

    /// Conjugates every coefficient.
    pub fn conj_coeffs(&self) -> AmbientPoly {
        AmbientPoly {
            setting: self.setting.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj()))
                .collect(),
        }
    }

    /// Binary product: bilinear extension of the algebra product. Not
    /// associative over the octonions.
    pub fn mul(&self, other: &AmbientPoly) -> AmbientPoly {
        debug_assert!(self.check_compatible(other).is_ok());
        let mut out = AmbientPoly::zero(&self.setting, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn try_mul(&self, other: &AmbientPoly) -> Result<AmbientPoly> {
        self.check_compatible(other)?;
        Ok(self.mul(other))
    }

    /// Power by left-to-right folding. Unambiguous for real-coefficient
    /// polynomials and for powers of a single hypercomplex variable
    /// (power-associativity).
    pub fn pow(&self, k: u32) -> AmbientPoly {
        let mut out = AmbientPoly::one(&self.setting, self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative with respect to variable `s`.
    pub fn partial(&self, s: usize) -> Result<AmbientPoly> {
        if s >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: s,
                nvars: self.nvars,
            });
        }
        let mut out = AmbientPoly::zero(&self.setting, self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps()[s];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[s] = e - 1;
            out.add_term(Monomial::new(exps), c.scale(&Rat::from_integer((e as i64).into())));
        }
        Ok(out)
    }

    /// Exact substitution of rational coordinates.
    pub fn evaluate(&self, point: &[Rat]) -> AlgebraElement {
        debug_assert_eq!(point.len(), self.nvars);
        let mut out = self.setting.algebra().zero();
        for (m, c) in &self.terms {
            let mut factor = Rat::one();
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    factor *= x;
                }
            }
            out = out.add(&c.scale(&factor));
        }
        out
    }

    /// Substitutes `x_s -> -x_s` for all `s > p` (the setting's split point).
    /// Only meaningful for ambient polynomials in `m + 1` variables.
    pub fn reflect(&self) -> AmbientPoly {
        let p = self.setting.p();
        let mut out = AmbientPoly::zero(&self.setting, self.nvars);
        for (m, c) in &self.terms {
            let odd: u32 = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(s, _)| *s > p)
                .map(|(_, &e)| e as u32)
                .sum();
            let coeff = if odd.is_multiple_of(2) { c.clone() } else { c.neg() };
            out.add_term(m.clone(), coeff);
        }
        out
    }

    /// Drops all terms that involve any variable in `vars`; i.e. restricts to
    /// the subspace where those variables vanish (keeping the slot count).
    pub fn restrict_zero(&self, vars: impl Iterator<Item = usize> + Clone) -> AmbientPoly {
        let mut out = AmbientPoly::zero(&self.setting, self.nvars);
        'terms: for (m, c) in &self.terms {
            for v in vars.clone() {
                if m.exps()[v] > 0 {
                    continue 'terms;
                }
            }
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Reinterprets the polynomial in a larger slot space (new slots unused).
    pub fn pad_vars(&self, nvars: usize) -> AmbientPoly {
        debug_assert!(nvars >= self.nvars);
        let mut out = AmbientPoly::zero(&self.setting, nvars);
        for (m, c) in &self.terms {
            let mut exps = m.exps().to_vec();
            exps.resize(nvars, 0);
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Exact division by a polynomial with real scalar coefficients and an
    /// invertible leading coefficient. Returns `None` when not divisible.
    pub fn div_exact_by_real(&self, divisor: &AmbientPoly) -> Option<AmbientPoly> {
        debug_assert_eq!(self.nvars, divisor.nvars);
        let (lt_m, lt_c) = divisor.terms.iter().next_back()?;
        debug_assert!(lt_c.is_real());
        let lt_inv = lt_c.real_part().recip();
        let mut rem = self.clone();
        let mut quot = AmbientPoly::zero(&self.setting, self.nvars);
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !lt_m.divides(&m) {
                return None;
            }
            let qm = m.div(lt_m);
            let qc = c.scale(&lt_inv);
            // rem -= (qc x^qm) * divisor
            for (dm, dc) in &divisor.terms {
                rem.add_term(qm.mul(dm), qc.mul(dc).neg());
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

/// The vector part `x_q = sum_{s > p} x_s v_s` as an ambient polynomial.
pub fn x_q_poly(setting: &Setting) -> AmbientPoly {
    let n = setting.nvars();
    let mut out = AmbientPoly::zero(setting, n);
    for s in setting.p() + 1..=setting.m() {
        out.add_term(Monomial::var(n, s), setting.v(s).clone());
    }
    out
}

/// `rho = sum_{s > p} x_s^2` (so `x_q^2 = -rho`) as an ambient polynomial.
pub fn rho_poly(setting: &Setting) -> AmbientPoly {
    let n = setting.nvars();
    let mut out = AmbientPoly::zero(setting, n);
    for s in setting.p() + 1..=setting.m() {
        let mut exps = vec![0u16; n];
        exps[s] = 2;
        out.add_term(Monomial::new(exps), setting.algebra().one());
    }
    out
}

/// The hypercomplex variable `x = sum_{s=0}^{m} x_s v_s`.
pub fn x_poly(setting: &Setting) -> AmbientPoly {
    let n = setting.nvars();
    let mut out = AmbientPoly::zero(setting, n);
    for s in 0..=setting.m() {
        out.add_term(Monomial::var(n, s), setting.v(s).clone());
    }
    out
}

/// The conjugated variable `x^c = sum_s x_s v_s^c`.
pub fn x_conj_poly(setting: &Setting) -> AmbientPoly {
    let n = setting.nvars();
    let mut out = AmbientPoly::zero(setting, n);
    for s in 0..=setting.m() {
        out.add_term(Monomial::var(n, s), setting.v(s).conj());
    }
    out
}

/// Binary parenthesization of a factor list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssocTree {
    Leaf,
    Node(Box<AssocTree>, Box<AssocTree>),
}

impl AssocTree {
    pub fn leaf_count(&self) -> usize {
        match self {
            AssocTree::Leaf => 1,
            AssocTree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// `(((a1 a2) a3) ... ) ak` — multiplication left to right.
    pub fn left_comb(k: usize) -> AssocTree {
        assert!(k >= 1);
        let mut t = AssocTree::Leaf;
        for _ in 1..k {
            t = AssocTree::Node(Box::new(t), Box::new(AssocTree::Leaf));
        }
        t
    }

    /// `a1 (a2 ( ... (a_{k-1} ak)))` — multiplication right to left.
    pub fn right_comb(k: usize) -> AssocTree {
        assert!(k >= 1);
        let mut t = AssocTree::Leaf;
        for _ in 1..k {
            t = AssocTree::Node(Box::new(AssocTree::Leaf), Box::new(t));
        }
        t
    }
}

/// Folds `factors` per the tree's parenthesization.
pub fn assoc_product(factors: &[AmbientPoly], tree: &AssocTree) -> Result<AmbientPoly> {
    if factors.is_empty() {
        return Err(Error::InvalidInput("assoc_product of zero factors".into()));
    }
    if tree.leaf_count() != factors.len() {
        return Err(Error::InvalidInput(format!(
            "association tree has {} leaves for {} factors",
            tree.leaf_count(),
            factors.len()
        )));
    }
    fn go(factors: &[AmbientPoly], tree: &AssocTree) -> AmbientPoly {
        match tree {
            AssocTree::Leaf => factors[0].clone(),
            AssocTree::Node(l, r) => {
                let nl = l.leaf_count();
                go(&factors[..nl], l).mul(&go(&factors[nl..], r))
            }
        }
    }
    Ok(go(factors, tree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::rational::{rat, rat_int};

    fn setting_r03() -> Setting {
        Setting::new(Algebra::clifford(3).unwrap(), 3, 1).unwrap()
    }

    fn oct_setting() -> Setting {
        Setting::new(Algebra::octonion(), 7, 4).unwrap()
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![1, 0]);
        let b = Monomial::new(vec![0, 2]);
        let c = Monomial::new(vec![2, 0]);
        assert!(a < b); // degree 1 < 2
        assert!(b < c); // same degree, lex
    }

    #[test]
    fn mul_unit_and_bilinear() {
        let st = setting_r03();
        let n = st.nvars();
        let x0 = AmbientPoly::var(&st, n, 0).unwrap();
        let x1 = AmbientPoly::var(&st, n, 1).unwrap();
        let e1 = st.algebra().basis_element(1);
        let f = x0.add(&x1.leftmul(&e1)); // x_0 + e1 x_1
        assert_eq!(f.mul(&AmbientPoly::one(&st, n)), f);
        // (x_0 + e1 x_1) * e1 = e1 x_0 - x_1
        let g = f.mul(&AmbientPoly::constant(&st, n, e1.clone()));
        let expected = x0.rightmul(&e1).sub(&x1);
        assert_eq!(g, expected);
    }

    #[test]
    fn octonion_product_not_associative() {
        let st = oct_setting();
        let n = st.nvars();
        let c = |i: usize| AmbientPoly::constant(&st, n, st.algebra().basis_element(i));
        let (f, g, h) = (c(1), c(2), c(4));
        assert_ne!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }

    #[test]
    fn assoc_trees() {
        let st = oct_setting();
        let n = st.nvars();
        let c = |i: usize| AmbientPoly::constant(&st, n, st.algebra().basis_element(i));
        let factors = vec![c(1), c(2), c(4)];
        let single = assoc_product(&factors[..1], &AssocTree::Leaf).unwrap();
        assert_eq!(single, factors[0]);
        let left = assoc_product(&factors, &AssocTree::left_comb(3)).unwrap();
        assert_eq!(left, c(1).mul(&c(2)).mul(&c(4)));
        let right = assoc_product(&factors, &AssocTree::right_comb(3)).unwrap();
        assert_eq!(right, c(1).mul(&c(2).mul(&c(4))));
        assert_ne!(left, right);
        // tree/operand mismatch
        assert!(assoc_product(&factors, &AssocTree::left_comb(2)).is_err());

        // Clifford: all trees agree
        let st = setting_r03();
        let n = st.nvars();
        let x0 = AmbientPoly::var(&st, n, 0).unwrap();
        let e = |i: usize| AmbientPoly::constant(&st, n, st.algebra().basis_element(i));
        let factors = vec![e(1), x0, e(2)];
        let l = assoc_product(&factors, &AssocTree::left_comb(3)).unwrap();
        let r = assoc_product(&factors, &AssocTree::right_comb(3)).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn partial_derivatives() {
        let st = setting_r03();
        let n = st.nvars();
        let x0 = AmbientPoly::var(&st, n, 0).unwrap();
        let x1 = AmbientPoly::var(&st, n, 1).unwrap();
        // d/dx0 (x0^2) = 2 x0
        assert_eq!(
            x0.mul(&x0).partial(0).unwrap(),
            x0.scale(&rat_int(2))
        );
        // d/dx1 (x0 x1 e12) = x0 e12
        let e12 = st.algebra().basis_element(3);
        let f = x0.mul(&x1).rightmul(&e12);
        assert_eq!(f.partial(1).unwrap(), x0.rightmul(&e12));
        assert!(f.partial(99).is_err());
    }

    #[test]
    fn evaluate_substitution() {
        let st = setting_r03();
        let n = st.nvars();
        let x0 = AmbientPoly::var(&st, n, 0).unwrap();
        let x1 = AmbientPoly::var(&st, n, 1).unwrap();
        let e1 = st.algebra().basis_element(1);
        let f = x0.add(&x1.leftmul(&e1));
        let mut pt = vec![rat_int(0); n];
        pt[0] = rat_int(2);
        pt[1] = rat_int(3);
        let got = f.evaluate(&pt);
        let expected = st.algebra().scalar(rat_int(2)).add(&e1.scale(&rat_int(3)));
        assert_eq!(got, expected);
        // constants evaluate to themselves
        let a = st.algebra().basis_element(2);
        let c = AmbientPoly::constant(&st, n, a.clone());
        assert_eq!(c.evaluate(&pt), a);
    }

    #[test]
    fn reflect_behaviour() {
        let st = setting_r03(); // p = 1
        let n = st.nvars();
        let x0 = AmbientPoly::var(&st, n, 0).unwrap();
        let x2 = AmbientPoly::var(&st, n, 2).unwrap();
        assert_eq!(x0.reflect(), x0);
        assert_eq!(x2.reflect(), x2.neg());
        let f = x0.mul(&x2).add(&x2.mul(&x2));
        assert_eq!(f.reflect().reflect(), f);
    }

    #[test]
    fn division_by_rho_square() {
        let st = setting_r03();
        let rho = rho_poly(&st);
        let x0 = AmbientPoly::var(&st, st.nvars(), 0).unwrap();
        let f = rho.mul(&rho).mul(&x0).scale(&rat(3, 2));
        let q = f.div_exact_by_real(&rho).unwrap();
        assert_eq!(q, rho.mul(&x0).scale(&rat(3, 2)));
        assert!(x0.div_exact_by_real(&rho).is_none());
    }

    #[test]
    fn x_q_squares_to_minus_rho() {
        for st in [setting_r03(), oct_setting()] {
            let xq = x_q_poly(&st);
            assert_eq!(xq.mul(&xq), rho_poly(&st).neg());
        }
    }

    #[test]
    fn setting_mismatch_reported() {
        let a = AmbientPoly::one(&setting_r03(), 4);
        let b = AmbientPoly::one(&oct_setting(), 8);
        assert!(matches!(a.try_mul(&b), Err(crate::error::Error::SettingMismatch)));
        assert!(matches!(a.try_add(&b), Err(crate::error::Error::SettingMismatch)));
        // same setting, different slot counts also mismatch
        let c = AmbientPoly::one(&setting_r03(), 3);
        assert!(a.try_mul(&c).is_err());
    }
}
