//! Even-odd stem representation of generalized partial-slice functions.
//!
//! A [`StemPair`] stores `G1, G2` as polynomials in `(x_0..x_p, u)` with
//! `u = r^2`, encoding the slice function
//! `f(x) = G1(x_p, rho) + x_q . G2(x_p, rho)` with `rho = sum_{s>p} x_s^2`.
//! The even-odd conditions `F1(x_p, -r) = F1(x_p, r)`,
//! `F2(x_p, -r) = -F2(x_p, r)` hold by construction, and the radial operators
//! `(1/r d_r)`, `(d_r 1/r)` become the exact polynomial map `2 d_u`.
//!
//! The spherical derivative is defined away from `r = 0` for general slice
//! functions; the polynomial `G2(x_p, rho)` is its continuous extension and is
//! what this module returns.

use crate::algebra::{AlgebraElement, Setting, SpherePoint};
use crate::error::{Error, Result};
use crate::poly::{rho_poly, x_q_poly, AmbientPoly, Monomial};
use crate::rational::{rat, Rat};

/// Pair `(G1, G2)` of polynomials in `(x_0..x_p, u)`; slot `p+1` holds `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StemPair {
    setting: Setting,
    g1: AmbientPoly,
    g2: AmbientPoly,
}

/// Number of stem variable slots: `x_0..x_p` plus `u`.
pub fn stem_nvars(setting: &Setting) -> usize {
    setting.p() + 2
}

impl StemPair {
    pub fn new(setting: &Setting, g1: AmbientPoly, g2: AmbientPoly) -> Result<StemPair> {
        let n = stem_nvars(setting);
        if g1.setting() != setting
            || g2.setting() != setting
            || g1.nvars() != n
            || g2.nvars() != n
        {
            return Err(Error::SettingMismatch);
        }
        Ok(StemPair {
            setting: setting.clone(),
            g1,
            g2,
        })
    }

    pub fn zero(setting: &Setting) -> StemPair {
        let n = stem_nvars(setting);
        StemPair {
            setting: setting.clone(),
            g1: AmbientPoly::zero(setting, n),
            g2: AmbientPoly::zero(setting, n),
        }
    }

    pub fn setting(&self) -> &Setting {
        &self.setting
    }

    pub fn g1(&self) -> &AmbientPoly {
        &self.g1
    }

    pub fn g2(&self) -> &AmbientPoly {
        &self.g2
    }

    pub fn is_zero(&self) -> bool {
        self.g1.is_zero() && self.g2.is_zero()
    }

    pub fn add(&self, other: &StemPair) -> StemPair {
        StemPair {
            setting: self.setting.clone(),
            g1: self.g1.add(&other.g1),
            g2: self.g2.add(&other.g2),
        }
    }

    pub fn sub(&self, other: &StemPair) -> StemPair {
        StemPair {
            setting: self.setting.clone(),
            g1: self.g1.sub(&other.g1),
            g2: self.g2.sub(&other.g2),
        }
    }

    pub fn scale(&self, r: &Rat) -> StemPair {
        StemPair {
            setting: self.setting.clone(),
            g1: self.g1.scale(r),
            g2: self.g2.scale(r),
        }
    }

    /// Flips the sign of the odd component; the stem of `f(x_p - x_q)`.
    pub fn reflected(&self) -> StemPair {
        StemPair {
            setting: self.setting.clone(),
            g1: self.g1.clone(),
            g2: self.g2.neg(),
        }
    }

    /// `G1(x_p, rho) + x_q . G2(x_p, rho)` as an ambient polynomial.
    pub fn materialize(&self) -> AmbientPoly {
        let even = subst_u_with_rho(&self.g1);
        let odd = x_q_poly(&self.setting).mul(&subst_u_with_rho(&self.g2));
        even.add(&odd)
    }

    /// Spherical value `f_s^o` in stem variables (an even function of `r`).
    pub fn spherical_value(&self) -> AmbientPoly {
        self.g1.clone()
    }

    /// Spherical derivative `f_s'` in stem variables; the division by `x_q`
    /// is already resolved by the `u`-encoding.
    pub fn spherical_derivative(&self) -> AmbientPoly {
        self.g2.clone()
    }

    /// `(f_s^o, f_s')` in one call; after materialization they satisfy
    /// `f = f_s^o + x_q f_s'`.
    pub fn spherical_parts(&self) -> (AmbientPoly, AmbientPoly) {
        (self.spherical_value(), self.spherical_derivative())
    }

    /// Restriction `f|_{x_q = 0}` of the encoded function, i.e. `G1(x_p, 0)`,
    /// as a polynomial in the base variables `x_0..x_p`.
    pub fn trace_at_zero(&self) -> AmbientPoly {
        let p = self.setting.p();
        let mut out = AmbientPoly::zero(&self.setting, p + 1);
        for (m, c) in self.g1.terms() {
            if m.exps()[p + 1] > 0 {
                continue;
            }
            let exps = m.exps()[..=p].to_vec();
            out = out.add(
                &AmbientPoly::from_terms(&self.setting, p + 1, [(Monomial::new(exps), c.clone())])
                    .unwrap(),
            );
        }
        out
    }

    /// Checks the representation formula at one exact configuration:
    /// `f(x_p + r w) = (f(x_p + r n) + f(x_p - r n))/2
    ///               + w (n (f(x_p - r n) - f(x_p + r n)))/2`
    /// and that the recovered even/odd components do not depend on the chosen
    /// sphere point.
    pub fn representation_check(
        &self,
        xp: &[Rat],
        r: &Rat,
        omega: &SpherePoint,
        eta: &SpherePoint,
    ) -> bool {
        representation_check_ambient(&self.materialize(), xp, r, omega, eta)
    }
}

/// Substitutes `u -> rho = sum_{s>p} x_s^2`, mapping a stem-space polynomial
/// into the ambient variable space.
pub fn subst_u_with_rho(g: &AmbientPoly) -> AmbientPoly {
    let setting = g.setting().clone();
    let p = setting.p();
    debug_assert_eq!(g.nvars(), p + 2);
    let n = setting.nvars();
    let rho = rho_poly(&setting);
    let max_u = g.terms().map(|(m, _)| m.exps()[p + 1]).max().unwrap_or(0);
    let mut rho_pows = Vec::with_capacity(max_u as usize + 1);
    rho_pows.push(AmbientPoly::one(&setting, n));
    for j in 1..=max_u as usize {
        let next = rho_pows[j - 1].mul(&rho);
        rho_pows.push(next);
    }
    let mut out = AmbientPoly::zero(&setting, n);
    for (m, c) in g.terms() {
        let exps = m.exps();
        let mut base = vec![0u16; n];
        base[..=p].copy_from_slice(&exps[..=p]);
        let base_poly =
            AmbientPoly::from_terms(&setting, n, [(Monomial::new(base), c.clone())])
                .expect("slot count");
        out = out.add(&base_poly.mul(&rho_pows[exps[p + 1] as usize]));
    }
    out
}

/// `(PE[f], PO[f]) = ((f + f(x_diamond))/2, (f - f(x_diamond))/2)`.
pub fn partial_even_odd(f: &AmbientPoly) -> (AmbientPoly, AmbientPoly) {
    let half = rat(1, 2);
    let reflected = f.reflect();
    (
        f.add(&reflected).scale(&half),
        f.sub(&reflected).scale(&half),
    )
}

/// Restriction of an ambient polynomial to the line `x_{p+2} = .. = x_m = 0`,
/// keeping `x_{p+1}` as the last slot of a `(p+2)`-variable polynomial.
fn restrict_to_first_q_var(f: &AmbientPoly) -> AmbientPoly {
    let setting = f.setting().clone();
    let p = setting.p();
    let mut out = AmbientPoly::zero(&setting, p + 2);
    'terms: for (m, c) in f.terms() {
        let exps = m.exps();
        for &e in &exps[p + 2..] {
            if e > 0 {
                continue 'terms;
            }
        }
        let mut e = vec![0u16; p + 2];
        e[..=p].copy_from_slice(&exps[..=p]);
        e[p + 1] = exps[p + 1];
        out = out.add(
            &AmbientPoly::from_terms(&setting, p + 2, [(Monomial::new(e), c.clone())]).unwrap(),
        );
    }
    out
}

pub(crate) fn format_monomial(m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{i}")
            } else {
                format!("x{i}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Inverse of [`StemPair::materialize`] on polynomials of slice form. Solves
/// the coefficient equations exactly; failure is a structural error, not a
/// projection.
pub fn extract(f: &AmbientPoly) -> Result<StemPair> {
    let setting = f.setting().clone();
    let p = setting.p();
    debug_assert_eq!(f.nvars(), setting.nvars());
    let (pe, po) = partial_even_odd(f);

    // On the line x_q = (t, 0, .., 0) the even part is G1(x_p, t^2) and the
    // odd part is t * v_{p+1} G2(x_p, t^2); unwind both, then verify the
    // candidate globally.
    let h1 = restrict_to_first_q_var(&pe);
    let mut g1 = AmbientPoly::zero(&setting, p + 2);
    for (m, c) in h1.terms() {
        let e = m.exps()[p + 1];
        if e % 2 != 0 {
            return Err(Error::NotSliceForm(format_monomial(m)));
        }
        let mut exps = m.exps().to_vec();
        exps[p + 1] = e / 2;
        g1 = g1.add(
            &AmbientPoly::from_terms(&setting, p + 2, [(Monomial::new(exps), c.clone())]).unwrap(),
        );
    }

    let h2 = restrict_to_first_q_var(&po);
    // v_{p+1}^{-1} = -v_{p+1}
    let v_inv = setting.v(p + 1).neg();
    let h2 = h2.leftmul(&v_inv);
    let mut g2 = AmbientPoly::zero(&setting, p + 2);
    for (m, c) in h2.terms() {
        let e = m.exps()[p + 1];
        if e % 2 != 1 {
            return Err(Error::NotSliceForm(format_monomial(m)));
        }
        let mut exps = m.exps().to_vec();
        exps[p + 1] = (e - 1) / 2;
        g2 = g2.add(
            &AmbientPoly::from_terms(&setting, p + 2, [(Monomial::new(exps), c.clone())]).unwrap(),
        );
    }

    let stem = StemPair::new(&setting, g1, g2)?;
    let diff = stem.materialize().sub(f);
    if let Some((m, _)) = diff.terms().next() {
        return Err(Error::NotSliceForm(format_monomial(m)));
    }
    Ok(stem)
}

/// Evaluates an ambient polynomial at `x_p + r omega`.
pub fn evaluate_on_slice(
    f: &AmbientPoly,
    xp: &[Rat],
    r: &Rat,
    omega: &SpherePoint,
) -> AlgebraElement {
    let setting = f.setting();
    let p = setting.p();
    debug_assert_eq!(xp.len(), p + 1);
    let mut point = Vec::with_capacity(setting.nvars());
    point.extend_from_slice(xp);
    for w in omega.coords() {
        point.push(r * w);
    }
    f.evaluate(&point)
}

/// Representation-formula check for an arbitrary ambient polynomial (slice
/// functions satisfy it; non-slice polynomials generically violate it).
pub fn representation_check_ambient(
    f: &AmbientPoly,
    xp: &[Rat],
    r: &Rat,
    omega: &SpherePoint,
    eta: &SpherePoint,
) -> bool {
    let setting = f.setting();
    let half = rat(1, 2);
    let omega_el = omega.induced(setting);
    let eta_el = eta.induced(setting);

    let lhs = evaluate_on_slice(f, xp, r, omega);
    let f_plus = evaluate_on_slice(f, xp, r, eta);
    let f_minus = evaluate_on_slice(f, xp, &(-r), eta);

    let even_eta = f_plus.add(&f_minus).scale(&half);
    let odd_eta = eta_el.mul(&f_minus.sub(&f_plus)).scale(&half);
    let rhs = even_eta.add(&omega_el.mul(&odd_eta));
    if lhs != rhs {
        return false;
    }

    // F1, F2 recovered from omega must match those recovered from eta.
    let g_minus = evaluate_on_slice(f, xp, &(-r), omega);
    let even_omega = lhs.add(&g_minus).scale(&half);
    let odd_omega = omega_el.mul(&g_minus.sub(&lhs)).scale(&half);
    even_omega == even_eta && odd_omega == odd_eta
}

/// A constant stem `(a, 0)`.
pub fn constant_stem(setting: &Setting, a: AlgebraElement) -> StemPair {
    let n = stem_nvars(setting);
    StemPair {
        setting: setting.clone(),
        g1: AmbientPoly::constant(setting, n, a),
        g2: AmbientPoly::zero(setting, n),
    }
}

/// The stem variable `u` as a polynomial.
pub fn u_var(setting: &Setting) -> AmbientPoly {
    let n = stem_nvars(setting);
    AmbientPoly::var(setting, n, n - 1).expect("u slot")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{sphere_point_from_parameters, Algebra};
    use crate::rational::rat_int;

    fn setting(p: usize, q: usize) -> Setting {
        let m = p + q;
        Setting::new(Algebra::clifford(m as u32).unwrap(), m, p).unwrap()
    }

    fn var(st: &Setting, n: usize, i: usize) -> AmbientPoly {
        AmbientPoly::var(st, n, i).unwrap()
    }

    #[test]
    fn materialize_fueter_variable_shape() {
        // (G1 = x_1, G2 = v_1) materializes to x_1 + sum_{s>p} x_s (v_s v_1)
        let st = setting(1, 2);
        let n = stem_nvars(&st);
        let g1 = var(&st, n, 1);
        let g2 = AmbientPoly::constant(&st, n, st.v(1).clone());
        let s = StemPair::new(&st, g1, g2).unwrap();
        let f = s.materialize();
        let expected = var(&st, st.nvars(), 1).add(
            &x_q_poly(&st).mul(&AmbientPoly::constant(&st, st.nvars(), st.v(1).clone())),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn materialize_minus_u() {
        // (G1 = -u, G2 = 0), q = 2 -> -x_2^2 - x_3^2
        let st = setting(1, 2);
        let s = StemPair::new(
            &st,
            u_var(&st).neg(),
            AmbientPoly::zero(&st, stem_nvars(&st)),
        )
        .unwrap();
        let f = s.materialize();
        let n = st.nvars();
        let x2 = var(&st, n, 2);
        let x3 = var(&st, n, 3);
        assert_eq!(f, x2.mul(&x2).add(&x3.mul(&x3)).neg());
    }

    #[test]
    fn constants_round_trip() {
        let st = setting(1, 2);
        let a = st.algebra().basis_element(3);
        let s = constant_stem(&st, a.clone());
        assert_eq!(s.materialize(), AmbientPoly::constant(&st, st.nvars(), a));
        let back = extract(&s.materialize()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn extract_fueter_variable() {
        let st = setting(1, 2);
        let n = stem_nvars(&st);
        let g1 = var(&st, n, 1);
        let g2 = AmbientPoly::constant(&st, n, st.v(1).clone());
        let s = StemPair::new(&st, g1, g2).unwrap();
        assert_eq!(extract(&s.materialize()).unwrap(), s);
    }

    #[test]
    fn extract_rejects_non_slice() {
        // x_{p+1} alone is not of slice form when q >= 2
        let st = setting(1, 2);
        let f = var(&st, st.nvars(), 2);
        match extract(&f) {
            Err(Error::NotSliceForm(_)) => {}
            other => panic!("expected NotSliceForm, got {other:?}"),
        }
    }

    #[test]
    fn partial_even_odd_examples() {
        let st = setting(1, 2);
        let n = st.nvars();
        let x0 = var(&st, n, 0);
        let x2 = var(&st, n, 2);
        let (pe, po) = partial_even_odd(&x0);
        assert_eq!(pe, x0);
        assert!(po.is_zero());
        let (pe, po) = partial_even_odd(&x2);
        assert!(pe.is_zero());
        assert_eq!(po, x2);
        // f = (x_0 + x_q)^2 -> PE = x_0^2 + x_q^2, PO = 2 x_0 x_q
        let f = x0.add(&x_q_poly(&st));
        let f2 = f.mul(&f);
        let (pe, po) = partial_even_odd(&f2);
        let xq = x_q_poly(&st);
        assert_eq!(pe, x0.mul(&x0).add(&xq.mul(&xq)));
        assert_eq!(po, x0.mul(&xq).scale(&rat_int(2)));
        assert_eq!(pe.add(&po), f2);
    }

    #[test]
    fn spherical_parts_identity() {
        // f = f_s^o + x_q f_s' after materialization
        let st = setting(0, 3);
        let n = stem_nvars(&st);
        let x0 = var(&st, n, 0);
        let u = u_var(&st);
        let g1 = x0.mul(&x0).sub(&u);
        let g2 = x0.scale(&rat_int(2));
        let s = StemPair::new(&st, g1.clone(), g2.clone()).unwrap();
        assert_eq!(s.spherical_value(), g1);
        assert_eq!(s.spherical_derivative(), g2);
        let value_m = subst_u_with_rho(&s.spherical_value());
        let deriv_m = subst_u_with_rho(&s.spherical_derivative());
        let recomposed = value_m.add(&x_q_poly(&st).mul(&deriv_m));
        assert_eq!(recomposed, s.materialize());
        // PE = value, PO = x_q * derivative
        let (pe, po) = partial_even_odd(&s.materialize());
        assert_eq!(pe, value_m);
        assert_eq!(po, x_q_poly(&st).mul(&deriv_m));
    }

    #[test]
    fn reflect_materialize_commutes() {
        let st = setting(1, 2);
        let n = stem_nvars(&st);
        let g1 = var(&st, n, 0).mul(&u_var(&st));
        let g2 = var(&st, n, 1).leftmul(&st.algebra().basis_element(2));
        let s = StemPair::new(&st, g1, g2).unwrap();
        assert_eq!(s.materialize().reflect(), s.reflected().materialize());
    }

    #[test]
    fn representation_formula_on_slice_function() {
        let st = setting(0, 2);
        let n = stem_nvars(&st);
        let x0 = var(&st, n, 0);
        let g1 = x0.mul(&x0).sub(&u_var(&st));
        let g2 = x0.scale(&rat_int(2));
        let s = StemPair::new(&st, g1, g2).unwrap();
        let omega = sphere_point_from_parameters(&[rat(1, 2)]); // (4/5, 3/5)
        let eta = sphere_point_from_parameters(&[rat_int(0)]); // (0, 1)
        assert!(s.representation_check(&[rat(2, 3)], &rat(1, 7), &omega, &eta));
        // eta = omega collapses trivially
        assert!(s.representation_check(&[rat(2, 3)], &rat(1, 7), &omega, &omega));
    }

    #[test]
    fn representation_formula_fails_for_non_slice() {
        let st = setting(0, 2);
        let f = var(&st, st.nvars(), 1); // x_{p+1}, not slice form for q = 2
        let omega = sphere_point_from_parameters(&[rat_int(1)]);
        let eta = sphere_point_from_parameters(&[rat_int(0)]);
        assert!(!representation_check_ambient(
            &f,
            &[rat_int(1)],
            &rat_int(1),
            &omega,
            &eta
        ));
    }
}
