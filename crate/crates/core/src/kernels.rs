//! Kelvin-type functions `N(x) rho^{-s}`: a polynomial numerator over an
//! integer power of the Euclidean norm `rho = |x|`, closed under
//! differentiation (`d_i (N rho^{-s}) = (d_i N) rho^{-s} - s x_i N rho^{-s-2}`).
//!
//! This space hosts the Cauchy kernel `E = x^c rho^{-(m+1)}` and the
//! poly-monogenic family `E^[k] = x^c x_0^{k-1} / ((k-1)! rho^{m+1})` with
//! `D^n E^[k] = E^[k] D^n = E^[k-n]`. Surface-area normalizations are omitted
//! throughout (they are irrational and every checked identity is linear in the
//! kernel).
//!
//! The slice Cauchy kernel is handled with a formal slice unit: a pair
//! `(K1, K2)` stands for `K1 + w K2` where the symbol `w` satisfies `w^2 = -1`
//! and `a (w b) = w (a^c b)` for `a` in the span of `v_0..v_p`. Under those
//! rewrite rules the slice Dirac action reduces to an exact pair computation,
//! which proves the annihilation identity for every unit at once;
//! rational-point instantiation stays available as a cross-check.

use num_traits::Zero;

use crate::algebra::{AlgebraKind, Setting};
use crate::error::{Error, Result};
use crate::poly::{AmbientPoly, Monomial};
use crate::rational::{factorial, Rat};

/// `N(x) rho^{-s}` in `nvars` variables, kept in canonical form: zero is
/// `(0, 0)` and the numerator is reduced modulo `rho^2` (so two values are
/// equal iff their canonical fields are equal). All terms share the parity of
/// `s`; mixing parities is a construction error surfaced by [`KelvinFunction::add`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KelvinFunction {
    nvars: usize,
    numerator: AmbientPoly,
    s: u32,
}

/// `rho^2 = sum_i x_i^2` over all `nvars` slots.
fn rho_squared(setting: &Setting, nvars: usize) -> AmbientPoly {
    let mut out = AmbientPoly::zero(setting, nvars);
    for i in 0..nvars {
        let mut exps = vec![0u16; nvars];
        exps[i] = 2;
        out = out.add(
            &AmbientPoly::from_terms(setting, nvars, [(Monomial::new(exps), setting.algebra().one())])
                .unwrap(),
        );
    }
    out
}

impl KelvinFunction {
    /// Builds `numerator * rho^{-s}` and reduces to canonical form.
    pub fn new(numerator: AmbientPoly, s: u32) -> KelvinFunction {
        let nvars = numerator.nvars();
        let mut k = KelvinFunction {
            nvars,
            numerator,
            s,
        };
        k.canonicalize();
        k
    }

    pub fn zero(setting: &Setting, nvars: usize) -> KelvinFunction {
        KelvinFunction {
            nvars,
            numerator: AmbientPoly::zero(setting, nvars),
            s: 0,
        }
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.s = 0;
            return;
        }
        let sigma = rho_squared(self.numerator.setting(), self.nvars);
        while self.s >= 2 {
            match self.numerator.div_exact_by_real(&sigma) {
                Some(q) => {
                    self.numerator = q;
                    self.s -= 2;
                }
                None => break,
            }
        }
    }

    pub fn numerator(&self) -> &AmbientPoly {
        &self.numerator
    }

    pub fn denominator_exponent(&self) -> u32 {
        self.s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn setting(&self) -> &Setting {
        self.numerator.setting()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Sum; errors when the denominator-exponent parities differ (such a sum
    /// leaves the Kelvin space).
    pub fn add(&self, other: &KelvinFunction) -> Result<KelvinFunction> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.s % 2 != other.s % 2 {
            return Err(Error::KernelParity(self.s, other.s));
        }
        let setting = self.numerator.setting().clone();
        let sigma = rho_squared(&setting, self.nvars);
        let (hi, lo) = if self.s >= other.s {
            (self, other)
        } else {
            (other, self)
        };
        let mut lifted = lo.numerator.clone();
        let mut t = lo.s;
        while t < hi.s {
            lifted = lifted.mul(&sigma);
            t += 2;
        }
        Ok(KelvinFunction::new(hi.numerator.add(&lifted), hi.s))
    }

    pub fn neg(&self) -> KelvinFunction {
        KelvinFunction {
            nvars: self.nvars,
            numerator: self.numerator.neg(),
            s: self.s,
        }
    }

    pub fn sub(&self, other: &KelvinFunction) -> Result<KelvinFunction> {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Rat) -> KelvinFunction {
        KelvinFunction::new(self.numerator.scale(r), self.s)
    }

    pub fn leftmul(&self, a: &crate::algebra::AlgebraElement) -> KelvinFunction {
        KelvinFunction::new(self.numerator.leftmul(a), self.s)
    }

    pub fn rightmul(&self, a: &crate::algebra::AlgebraElement) -> KelvinFunction {
        KelvinFunction::new(self.numerator.rightmul(a), self.s)
    }

    /// Exact partial derivative; stays in the space with `s` increased by 2.
    pub fn derivative(&self, i: usize) -> Result<KelvinFunction> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let setting = self.numerator.setting().clone();
        let sigma = rho_squared(&setting, self.nvars);
        let xi = AmbientPoly::var(&setting, self.nvars, i)?;
        let dn = self.numerator.partial(i)?;
        let num = dn
            .mul(&sigma)
            .sub(&xi.mul(&self.numerator).scale(&Rat::from_integer((self.s as i64).into())));
        Ok(KelvinFunction::new(num, self.s + 2))
    }

    /// Laplacian (two derivatives per slot, exact).
    pub fn laplacian(&self) -> Result<KelvinFunction> {
        let setting = self.numerator.setting().clone();
        let mut out = KelvinFunction::zero(&setting, self.nvars);
        for i in 0..self.nvars {
            out = out.add(&self.derivative(i)?.derivative(i)?)?;
        }
        Ok(out)
    }
}

/// Ambient left Dirac `D K = sum_{s=0}^{m} v_s d_s K` (requires `nvars = m+1`).
pub fn kelvin_dirac(k: &KelvinFunction) -> Result<KelvinFunction> {
    let setting = k.setting().clone();
    debug_assert_eq!(k.nvars(), setting.nvars());
    let mut out = KelvinFunction::zero(&setting, k.nvars());
    for s in 0..=setting.m() {
        out = out.add(&k.derivative(s)?.leftmul(setting.v(s)))?;
    }
    Ok(out)
}

/// Ambient right Dirac `K D = sum_s (d_s K) v_s`.
pub fn kelvin_dirac_right(k: &KelvinFunction) -> Result<KelvinFunction> {
    let setting = k.setting().clone();
    debug_assert_eq!(k.nvars(), setting.nvars());
    let mut out = KelvinFunction::zero(&setting, k.nvars());
    for s in 0..=setting.m() {
        out = out.add(&k.derivative(s)?.rightmul(setting.v(s)))?;
    }
    Ok(out)
}

pub fn kelvin_dirac_power(k: &KelvinFunction, n: u32) -> Result<KelvinFunction> {
    let mut out = k.clone();
    for _ in 0..n {
        out = kelvin_dirac(&out)?;
    }
    Ok(out)
}

pub fn kelvin_dirac_power_right(k: &KelvinFunction, n: u32) -> Result<KelvinFunction> {
    let mut out = k.clone();
    for _ in 0..n {
        out = kelvin_dirac_right(&out)?;
    }
    Ok(out)
}

/// The poly-monogenic kernel `E^[k] = x^c x_0^{k-1} / ((k-1)! rho^{m+1})`
/// (normalization by the sphere area dropped); `E^[1]` is the Cauchy kernel.
pub fn poly_kernel(setting: &Setting, k: u32) -> Result<KelvinFunction> {
    if k < 1 {
        return Err(Error::KernelOrder(k));
    }
    let n = setting.nvars();
    let x0 = AmbientPoly::var(setting, n, 0)?;
    let mut num = crate::poly::x_conj_poly(setting);
    for _ in 0..k - 1 {
        num = num.mul(&x0);
    }
    Ok(KelvinFunction::new(
        num.scale(&factorial(k - 1).recip()),
        setting.m() as u32 + 1,
    ))
}

/// The Cauchy kernel `E = x^c rho^{-(m+1)}` (normalization dropped).
pub fn cauchy_kernel(setting: &Setting) -> Result<KelvinFunction> {
    poly_kernel(setting, 1)
}

/// `rho^{-(nu - 2)}`: the fundamental solution shape; annihilated by the
/// Laplacian.
pub fn fundamental_solution(setting: &Setting, nvars: usize) -> KelvinFunction {
    KelvinFunction::new(AmbientPoly::one(setting, nvars), nvars as u32 - 2)
}

/// Slice-restricted kernel pair `K1 + w K2` in the variables `(x_p, r)`
/// (`nvars = p+2`, slot `p+1` holds `r`), where `w` is the formal slice unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceKernel {
    pub k1: KelvinFunction,
    pub k2: KelvinFunction,
}

/// The slice Cauchy kernel `(x_p^c - r w) rho'^{-(p+2)}` with
/// `rho'^2 = |x_p|^2 + r^2`.
pub fn slice_cauchy_kernel(setting: &Setting) -> SliceKernel {
    let p = setting.p();
    let n = p + 2;
    let mut xpc = AmbientPoly::zero(setting, n);
    for l in 0..=p {
        xpc = xpc.add(
            &AmbientPoly::var(setting, n, l)
                .unwrap()
                .leftmul(&setting.v(l).conj()),
        );
    }
    let r = AmbientPoly::var(setting, n, p + 1).unwrap();
    SliceKernel {
        k1: KelvinFunction::new(xpc, p as u32 + 2),
        k2: KelvinFunction::new(r.neg(), p as u32 + 2),
    }
}

/// `D_{x_p} K = sum_{l=0}^{p} v_l d_l K` on slice-space Kelvin functions.
pub fn kelvin_dirac_base_left(k: &KelvinFunction) -> Result<KelvinFunction> {
    kelvin_dirac_base(k, false, false)
}

/// Slice-restricted poly-monogenic kernel
/// `(x_p^c - r w) x_0^{k-1} / ((k-1)! rho'^{p+2})`; order `k` under the
/// iterated formal slice Dirac (the `k = 1` case is the slice Cauchy
/// kernel).
pub fn slice_poly_kernel(setting: &Setting, k: u32) -> Result<SliceKernel> {
    if k < 1 {
        return Err(Error::KernelOrder(k));
    }
    let base = slice_cauchy_kernel(setting);
    let n = setting.p() + 2;
    let x0 = AmbientPoly::var(setting, n, 0)?;
    let mut num1 = base.k1.numerator().clone();
    let mut num2 = base.k2.numerator().clone();
    for _ in 0..k - 1 {
        num1 = num1.mul(&x0);
        num2 = num2.mul(&x0);
    }
    let c = factorial(k - 1).recip();
    let s = setting.p() as u32 + 2;
    Ok(SliceKernel {
        k1: KelvinFunction::new(num1.scale(&c), s),
        k2: KelvinFunction::new(num2.scale(&c), s),
    })
}

/// One application of the formal slice Dirac, re-wrapped as a kernel pair.
pub fn slice_kernel_dirac_left_kernel(k: &SliceKernel) -> Result<SliceKernel> {
    let (k1, k2) = slice_kernel_dirac_left(k)?;
    Ok(SliceKernel { k1, k2 })
}

fn kelvin_dirac_base(k: &KelvinFunction, conj: bool, right: bool) -> Result<KelvinFunction> {
    let setting = k.setting().clone();
    let mut out = KelvinFunction::zero(&setting, k.nvars());
    for l in 0..=setting.p() {
        let v = if conj {
            setting.v(l).conj()
        } else {
            setting.v(l).clone()
        };
        let d = k.derivative(l)?;
        out = out.add(&if right { d.rightmul(&v) } else { d.leftmul(&v) })?;
    }
    Ok(out)
}

/// Left slice Dirac `(D_{x_p} + w d_r)(K1 + w K2)` reduced by the formal
/// rules to the pair `(D_{x_p} K1 - d_r K2, Dbar_{x_p} K2 + d_r K1)`; the
/// kernel is annihilated iff both components vanish.
pub fn slice_kernel_dirac_left(k: &SliceKernel) -> Result<(KelvinFunction, KelvinFunction)> {
    let p = k.k1.setting().p();
    let even = kelvin_dirac_base(&k.k1, false, false)?.sub(&k.k2.derivative(p + 1)?)?;
    let odd = kelvin_dirac_base(&k.k2, true, false)?.add(&k.k1.derivative(p + 1)?)?;
    Ok((even, odd))
}

fn coeffs_in_base_span(f: &AmbientPoly) -> bool {
    let setting = f.setting();
    let mut allowed = vec![false; setting.algebra().dim()];
    allowed[0] = true;
    for s in 1..=setting.p() {
        let idx = match setting.algebra().kind() {
            AlgebraKind::Clifford { .. } => 1usize << (s - 1),
            AlgebraKind::Octonion => s,
        };
        allowed[idx] = true;
    }
    f.terms().all(|(_, c)| {
        c.coeffs()
            .iter()
            .enumerate()
            .all(|(i, r)| allowed[i] || r.is_zero())
    })
}

/// Right slice Dirac `(K1 + w K2) D_omega` reduced to the pair
/// `(K1 D_{x_p} - d_r K2', K2' Dbar_{x_p} + d_r K1)` with `K2'` the
/// coefficient-conjugate of `K2`. Valid when all coefficients lie in
/// `span(v_0..v_p)` (which holds for the slice Cauchy kernel); errors
/// otherwise.
pub fn slice_kernel_dirac_right(k: &SliceKernel) -> Result<(KelvinFunction, KelvinFunction)> {
    if !coeffs_in_base_span(&k.k1.numerator) || !coeffs_in_base_span(&k.k2.numerator) {
        return Err(Error::SliceKernelCoefficients);
    }
    let p = k.k1.setting().p();
    let k2p = KelvinFunction::new(k.k2.numerator.conj_coeffs(), k.k2.s);
    let even = kelvin_dirac_base(&k.k1, false, true)?.sub(&k2p.derivative(p + 1)?)?;
    let odd = kelvin_dirac_base(&k2p, true, true)?.add(&k.k1.derivative(p + 1)?)?;
    Ok((even, odd))
}

/// Instantiates the slice kernel at a concrete rational sphere point:
/// `K1 + omega K2` as a Kelvin function in `(x_p, r)` with the slice unit
/// realized inside the algebra. Used as a cross-check of the formal route.
pub fn slice_kernel_at(
    k: &SliceKernel,
    omega: &crate::algebra::SpherePoint,
) -> Result<KelvinFunction> {
    let setting = k.k1.setting().clone();
    let w = omega.induced(&setting);
    let lifted = KelvinFunction::new(k.k2.numerator.leftmul(&w), k.k2.s);
    k.k1.add(&lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{sphere_point_from_parameters, Algebra};
    use crate::rational::{rat, rat_int};

    fn setting(m: usize, p: usize) -> Setting {
        Setting::new(Algebra::clifford(m as u32).unwrap(), m, p).unwrap()
    }

    #[test]
    fn derivative_of_pure_power() {
        // d_i rho^{-s} = -s x_i rho^{-s-2}
        let st = setting(3, 0);
        let n = st.nvars();
        let k = KelvinFunction::new(AmbientPoly::one(&st, n), 5);
        let d = k.derivative(1).unwrap();
        let expected = KelvinFunction::new(
            AmbientPoly::var(&st, n, 1).unwrap().scale(&rat_int(-5)),
            7,
        );
        assert_eq!(d, expected);
    }

    #[test]
    fn canonical_form_reduces() {
        let st = setting(2, 0);
        let n = st.nvars();
        let sigma = rho_squared(&st, n);
        let k = KelvinFunction::new(sigma.clone(), 4);
        assert_eq!(k.denominator_exponent(), 2);
        assert_eq!(k.numerator(), &AmbientPoly::one(&st, n));
        let k = KelvinFunction::new(sigma.mul(&sigma), 4);
        assert_eq!(k.denominator_exponent(), 0);
    }

    #[test]
    fn parity_mismatch_is_error() {
        let st = setting(2, 0);
        let n = st.nvars();
        let a = KelvinFunction::new(AmbientPoly::one(&st, n), 3);
        let b = KelvinFunction::new(AmbientPoly::one(&st, n), 4);
        assert!(matches!(a.add(&b), Err(Error::KernelParity(3, 4))));
    }

    #[test]
    fn closure_under_differentiation() {
        let st = setting(3, 1);
        let n = st.nvars();
        let x1 = AmbientPoly::var(&st, n, 1).unwrap();
        let k = KelvinFunction::new(x1.leftmul(&st.algebra().basis_element(2)), 5);
        let d = k.derivative(2).unwrap();
        assert_eq!(d.denominator_exponent(), 7);
    }

    #[test]
    fn fundamental_solution_is_harmonic() {
        for m in [2usize, 3, 4] {
            let st = setting(m, 0);
            let k = fundamental_solution(&st, st.nvars());
            assert!(k.laplacian().unwrap().is_zero(), "m = {m}");
        }
    }

    #[test]
    fn cauchy_kernel_is_monogenic_both_sides() {
        for m in [2usize, 3] {
            let st = setting(m, 0);
            let e = cauchy_kernel(&st).unwrap();
            assert!(kelvin_dirac(&e).unwrap().is_zero(), "left, m = {m}");
            assert!(kelvin_dirac_right(&e).unwrap().is_zero(), "right, m = {m}");
        }
        // octonion setting too
        let st = Setting::new(Algebra::octonion(), 3, 0).unwrap();
        let e = cauchy_kernel(&st).unwrap();
        assert!(kelvin_dirac(&e).unwrap().is_zero());
    }

    #[test]
    fn dirac_power_ladder() {
        let st = setting(3, 0);
        for k in 2..=4u32 {
            let ek = poly_kernel(&st, k).unwrap();
            for n in 1..k {
                let expected = poly_kernel(&st, k - n).unwrap();
                assert_eq!(kelvin_dirac_power(&ek, n).unwrap(), expected, "D^{n} E^[{k}]");
                assert_eq!(
                    kelvin_dirac_power_right(&ek, n).unwrap(),
                    expected,
                    "E^[{k}] D^{n}"
                );
            }
            assert!(kelvin_dirac_power(&ek, k).unwrap().is_zero());
            assert!(kelvin_dirac_power_right(&ek, k).unwrap().is_zero());
        }
        assert!(poly_kernel(&st, 0).is_err());
    }

    #[test]
    fn slice_kernel_annihilated_formally() {
        for p in [0usize, 1, 2] {
            let st = setting(p + 2, p);
            let k = slice_cauchy_kernel(&st);
            let (even, odd) = slice_kernel_dirac_left(&k).unwrap();
            assert!(even.is_zero(), "p = {p} even part");
            assert!(odd.is_zero(), "p = {p} odd part");
            let (even, odd) = slice_kernel_dirac_right(&k).unwrap();
            assert!(even.is_zero(), "p = {p} right even part");
            assert!(odd.is_zero(), "p = {p} right odd part");
        }
    }

    #[test]
    fn slice_kernel_p0_is_complex_cauchy_shape() {
        // p = 0: conj(z)/|z|^2 pattern: K1 = x_0 rho^{-2}, K2 = -r rho^{-2}
        let st = setting(2, 0);
        let k = slice_cauchy_kernel(&st);
        let n = 2;
        assert_eq!(
            k.k1,
            KelvinFunction::new(AmbientPoly::var(&st, n, 0).unwrap(), 2)
        );
        assert_eq!(
            k.k2,
            KelvinFunction::new(AmbientPoly::var(&st, n, 1).unwrap().neg(), 2)
        );
    }

    #[test]
    fn slice_poly_kernel_ladder() {
        // D_w^n E^[k] = E^[k-n] in the formal pair calculus, D_w^k E^[k] = 0
        for p in [0usize, 1] {
            let st = setting(p + 2, p);
            for k in 1..=3u32 {
                let mut cur = slice_poly_kernel(&st, k).unwrap();
                for n in 1..=k {
                    cur = slice_kernel_dirac_left_kernel(&cur).unwrap();
                    if n < k {
                        assert_eq!(cur, slice_poly_kernel(&st, k - n).unwrap(), "p={p} k={k} n={n}");
                    } else {
                        assert!(cur.k1.is_zero() && cur.k2.is_zero(), "p={p} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn formal_route_agrees_with_rational_instantiation() {
        let st = setting(3, 1);
        let k = slice_cauchy_kernel(&st);
        let omega = sphere_point_from_parameters(&[rat(1, 2)]);
        let inst = slice_kernel_at(&k, &omega).unwrap();
        // slice Dirac at the instantiated point: D_base + leftmul(omega) d_r
        let w = omega.induced(&st);
        let p = st.p();
        let d = kelvin_dirac_base(&inst, false, false)
            .unwrap()
            .add(&inst.derivative(p + 1).unwrap().leftmul(&w))
            .unwrap();
        assert!(d.is_zero());
    }
}
