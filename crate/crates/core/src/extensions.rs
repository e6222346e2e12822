//! The three Cauchy-Kovalevskaya extensions on polynomial data, Fueter
//! variables, and Fueter polynomials.
//!
//! On polynomial seeds every extension series is a finite sum: the series
//! index stops at `k = deg/2` because iterated base Laplacians vanish. All
//! Gamma-function coefficient ratios are exact rational products:
//!
//! - CK: `G1 = sum_k (-1)^k u^k / (2k)! Delta^k f0`,
//!   `G2 = sum_k (-1)^k u^k / (2k+1)! Delta^k (D_p f0)`
//! - GCK: even coefficient `c_k = 1 / ((2k)!! q(q+2)...(q+2k-2))`,
//!   odd coefficient `d_k = 1 / ((2k)!! q(q+2)...(q+2k))`
//! - HGCK: even `c_k` as above, odd `e_k = 1 / ((2k)!! (q+2)(q+4)...(q+2k))`
//!
//! in the `u = r^2` encoding (`x_q^{2k} = (-1)^k r^{2k}` accounts for the
//! alternating signs).

use num_traits::One;

use crate::algebra::Setting;
use crate::error::{Error, Result};
use crate::operators::{dirac_base, dirac_bar_base, laplacian_base};
use crate::poly::{assoc_product, x_q_poly, AmbientPoly, AssocTree, Monomial};
use crate::rational::{factorial, rat_int, Rat};
use crate::stem::{stem_nvars, u_var, StemPair};

/// Normalizes a polynomial in the base variables `x_0..x_p` to exactly `p+1`
/// slots; errors when any variable beyond `x_p` occurs.
pub fn to_seed(f: &AmbientPoly) -> Result<AmbientPoly> {
    let setting = f.setting().clone();
    let p = setting.p();
    let mut out = AmbientPoly::zero(&setting, p + 1);
    for (m, c) in f.terms() {
        let exps = m.exps();
        for (s, &e) in exps.iter().enumerate().skip(p + 1) {
            if e > 0 {
                return Err(Error::VariableOutOfRange {
                    index: s,
                    nvars: p + 1,
                });
            }
        }
        let mut base = vec![0u16; p + 1];
        let upto = exps.len().min(p + 1);
        base[..upto].copy_from_slice(&exps[..upto]);
        out = out.add(
            &AmbientPoly::from_terms(&setting, p + 1, [(Monomial::new(base), c.clone())]).unwrap(),
        );
    }
    Ok(out)
}

fn lift_to_stem_space(seed: &AmbientPoly) -> AmbientPoly {
    seed.pad_vars(seed.setting().p() + 2)
}

/// Embeds a seed polynomial into the ambient variable space.
pub fn seed_to_ambient(seed: &AmbientPoly) -> AmbientPoly {
    seed.pad_vars(seed.setting().nvars())
}

/// CK-extension of data on the base space: the unique stem with
/// `cr_check = true` restricting to `f0` at `u = 0`.
pub fn ck_extend(f0: &AmbientPoly) -> Result<StemPair> {
    let setting = f0.setting().clone();
    let seed = to_seed(f0)?;
    let u = u_var(&setting);
    let mut g1 = AmbientPoly::zero(&setting, stem_nvars(&setting));
    let mut g2 = AmbientPoly::zero(&setting, stem_nvars(&setting));
    let mut lap = seed.clone();
    let mut u_pow = AmbientPoly::one(&setting, stem_nvars(&setting));
    let mut k = 0u32;
    loop {
        if lap.is_zero() {
            break;
        }
        let sign = if k.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
        let c1 = &sign / factorial(2 * k);
        let c2 = &sign / factorial(2 * k + 1);
        g1 = g1.add(&u_pow.mul(&lift_to_stem_space(&lap)).scale(&c1));
        g2 = g2.add(
            &u_pow
                .mul(&lift_to_stem_space(&dirac_base(&lap)))
                .scale(&c2),
        );
        lap = laplacian_base(&lap);
        u_pow = u_pow.mul(&u);
        k += 1;
    }
    StemPair::new(&setting, g1, g2)
}

// start (start+2) (start+4) ... (start + 2(count-1)) as an exact rational
fn rising_even_product(start: i64, count: u32) -> Rat {
    let mut acc = Rat::one();
    for j in 0..count as i64 {
        acc *= rat_int(start + 2 * j);
    }
    acc
}

fn double_fact_even(k: u32) -> Rat {
    // (2k)!! = 2^k k!
    let mut acc = Rat::one();
    for j in 1..=k as i64 {
        acc *= rat_int(2 * j);
    }
    acc
}

/// Stem of the monogenic generalized CK-extension of `A0`.
pub fn gck_stem(a0: &AmbientPoly) -> Result<StemPair> {
    let setting = a0.setting().clone();
    let q = setting.q() as i64;
    let seed = to_seed(a0)?;
    let u = u_var(&setting);
    let mut g1 = AmbientPoly::zero(&setting, stem_nvars(&setting));
    let mut g2 = AmbientPoly::zero(&setting, stem_nvars(&setting));
    let mut lap_even = seed.clone();
    let mut lap_odd = dirac_base(&seed);
    let mut u_pow = AmbientPoly::one(&setting, stem_nvars(&setting));
    let mut k = 0u32;
    while !(lap_even.is_zero() && lap_odd.is_zero()) {
        let sign = if k.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
        let denom_shared = double_fact_even(k) * rising_even_product(q, k);
        let c_k = &sign / &denom_shared;
        let d_k = &sign / (denom_shared * rat_int(q + 2 * k as i64));
        g1 = g1.add(&u_pow.mul(&lift_to_stem_space(&lap_even)).scale(&c_k));
        g2 = g2.add(&u_pow.mul(&lift_to_stem_space(&lap_odd)).scale(&d_k));
        lap_even = laplacian_base(&lap_even);
        lap_odd = laplacian_base(&lap_odd);
        u_pow = u_pow.mul(&u);
        k += 1;
    }
    StemPair::new(&setting, g1, g2)
}

/// Monogenic generalized CK-extension, materialized: `dirac` of the result
/// vanishes identically.
pub fn gck_extend(a0: &AmbientPoly) -> Result<AmbientPoly> {
    Ok(gck_stem(a0)?.materialize())
}

/// Stem of the harmonic generalized CK-extension of the pair `(A0, A1)`.
pub fn hgck_stem(a0: &AmbientPoly, a1: &AmbientPoly) -> Result<StemPair> {
    let setting = a0.setting().clone();
    if a1.setting() != &setting {
        return Err(Error::SettingMismatch);
    }
    let q = setting.q() as i64;
    let seed0 = to_seed(a0)?;
    let seed1 = to_seed(a1)?;
    let u = u_var(&setting);
    let mut g1 = AmbientPoly::zero(&setting, stem_nvars(&setting));
    let mut g2 = AmbientPoly::zero(&setting, stem_nvars(&setting));
    let mut lap_even = seed0;
    let mut lap_odd = seed1;
    let mut u_pow = AmbientPoly::one(&setting, stem_nvars(&setting));
    let mut k = 0u32;
    while !(lap_even.is_zero() && lap_odd.is_zero()) {
        let sign = if k.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
        let c_k = &sign / (double_fact_even(k) * rising_even_product(q, k));
        let e_k = &sign / (double_fact_even(k) * rising_even_product(q + 2, k));
        g1 = g1.add(&u_pow.mul(&lift_to_stem_space(&lap_even)).scale(&c_k));
        g2 = g2.add(&u_pow.mul(&lift_to_stem_space(&lap_odd)).scale(&e_k));
        lap_even = laplacian_base(&lap_even);
        lap_odd = laplacian_base(&lap_odd);
        u_pow = u_pow.mul(&u);
        k += 1;
    }
    StemPair::new(&setting, g1, g2)
}

/// Harmonic generalized CK-extension with initial value `A0` and initial
/// slope `D_{x_q} f|_{x_q=0} = -q A1`.
pub fn hgck_extend(a0: &AmbientPoly, a1: &AmbientPoly) -> Result<AmbientPoly> {
    Ok(hgck_stem(a0, a1)?.materialize())
}

/// Recovers the coefficient sequence `A_k` of a slice series
/// `f = sum_k x_q^k A_k(x_p)`; errors when `f` is not of that form.
pub fn slice_series_coefficients(f: &AmbientPoly) -> Result<Vec<AmbientPoly>> {
    let setting = f.setting().clone();
    let p = setting.p();
    // restrict to the line x_q = (t, 0, ..., 0)
    let mut by_tdeg: Vec<AmbientPoly> = Vec::new();
    'terms: for (m, c) in f.terms() {
        let exps = m.exps();
        for &e in &exps[p + 2..] {
            if e > 0 {
                continue 'terms;
            }
        }
        let t = exps[p + 1] as usize;
        while by_tdeg.len() <= t {
            by_tdeg.push(AmbientPoly::zero(&setting, p + 1));
        }
        let base = exps[..=p].to_vec();
        by_tdeg[t] = by_tdeg[t].add(
            &AmbientPoly::from_terms(&setting, p + 1, [(Monomial::new(base), c.clone())]).unwrap(),
        );
    }
    // on the line, x_q^k = (t v_{p+1})^k = t^k v_{p+1}^k; unwind the power
    let v = setting.v(p + 1);
    let v_inv = v.neg();
    let mut coeffs = Vec::with_capacity(by_tdeg.len());
    for (k, h) in by_tdeg.iter().enumerate() {
        let mut a = h.clone();
        for _ in 0..k % 4 {
            a = a.leftmul(&v_inv);
        }
        coeffs.push(a);
    }
    // verify the reconstruction sum_k x_q^k A_k = f
    let xq = x_q_poly(&setting);
    let mut recon = AmbientPoly::zero(&setting, setting.nvars());
    let mut xq_pow = AmbientPoly::one(&setting, setting.nvars());
    for a in &coeffs {
        recon = recon.add(&xq_pow.mul(&seed_to_ambient(a)));
        xq_pow = xq_pow.mul(&xq);
    }
    let diff = recon.sub(f);
    if let Some((m, _)) = diff.terms().next() {
        return Err(Error::NotSliceForm(crate::stem::format_monomial(m)));
    }
    Ok(coeffs)
}

/// Left Fueter variable `z_l = x_l + x_q v_l`.
pub fn fueter_variable(setting: &Setting, l: usize) -> Result<AmbientPoly> {
    if l > setting.p() {
        return Err(Error::VariableOutOfRange {
            index: l,
            nvars: setting.p() + 1,
        });
    }
    let n = setting.nvars();
    let xl = AmbientPoly::var(setting, n, l)?;
    Ok(xl.add(&x_q_poly(setting).mul(&AmbientPoly::constant(setting, n, setting.v(l).clone()))))
}

/// Right Fueter variable `z_l^R = x_l + v_l x_q`.
pub fn fueter_variable_right(setting: &Setting, l: usize) -> Result<AmbientPoly> {
    if l > setting.p() {
        return Err(Error::VariableOutOfRange {
            index: l,
            nvars: setting.p() + 1,
        });
    }
    let n = setting.nvars();
    let xl = AmbientPoly::var(setting, n, l)?;
    Ok(xl.add(&AmbientPoly::constant(setting, n, setting.v(l).clone()).mul(&x_q_poly(setting))))
}

/// All distinguishable permutations of a sorted multiset, in lexicographic
/// order.
fn multiset_permutations(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        // next lexicographic permutation
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

fn multi_index_alignment(k: &[i64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (l, &count) in k.iter().enumerate() {
        for _ in 0..count {
            out.push(l);
        }
    }
    out
}

/// Fueter polynomial: the order-symmetrized product
/// `P_k = (1/k!) sum over distinguishable permutations of z_{i_1} .. z_{i_k}`
/// folded with the given association-tree builder. Indices with a negative
/// component give the zero polynomial; the empty index gives 1.
pub fn fueter_polynomial_with(
    setting: &Setting,
    k: &[i64],
    tree: impl Fn(usize) -> AssocTree,
) -> Result<AmbientPoly> {
    if k.len() > setting.p() + 1 {
        return Err(Error::InvalidInput(format!(
            "multi-index has {} components, expected at most p+1 = {}",
            k.len(),
            setting.p() + 1
        )));
    }
    let n = setting.nvars();
    if k.iter().any(|&c| c < 0) {
        return Ok(AmbientPoly::zero(setting, n));
    }
    let align = multi_index_alignment(k);
    let total = align.len();
    if total == 0 {
        return Ok(AmbientPoly::one(setting, n));
    }
    let vars: Vec<AmbientPoly> = (0..=setting.p())
        .map(|l| fueter_variable(setting, l))
        .collect::<Result<_>>()?;
    let mut sum = AmbientPoly::zero(setting, n);
    for perm in multiset_permutations(&align) {
        let factors: Vec<AmbientPoly> = perm.iter().map(|&l| vars[l].clone()).collect();
        sum = sum.add(&assoc_product(&factors, &tree(total))?);
    }
    Ok(sum.scale(&factorial(total as u32).recip()))
}

/// Fueter polynomial with the default left-to-right association order.
pub fn fueter_polynomial(setting: &Setting, k: &[i64]) -> Result<AmbientPoly> {
    fueter_polynomial_with(setting, k, AssocTree::left_comb)
}

/// `V_k = CK[x_p^k] / k!`, materialized.
pub fn v_polynomial(setting: &Setting, k: &[i64]) -> Result<AmbientPoly> {
    let n = setting.nvars();
    if k.iter().any(|&c| c < 0) {
        return Ok(AmbientPoly::zero(setting, n));
    }
    if k.len() > setting.p() + 1 {
        return Err(Error::InvalidInput(format!(
            "multi-index has {} components, expected at most p+1 = {}",
            k.len(),
            setting.p() + 1
        )));
    }
    let mut exps = vec![0u16; setting.p() + 1];
    let mut kfact = Rat::one();
    for (l, &c) in k.iter().enumerate() {
        exps[l] = c as u16;
        kfact *= factorial(c as u32);
    }
    let seed = AmbientPoly::from_terms(
        setting,
        setting.p() + 1,
        [(Monomial::new(exps), setting.algebra().one())],
    )?;
    Ok(ck_extend(&seed)?.materialize().scale(&kfact.recip()))
}

/// Right CK-extension series (used by exploratory right-monogenicity tests):
/// `sum_k x_q^{2k}/(2k)! Delta^k f0 + sum_k Delta^k (f0 D_p) x_q^{2k+1}/(2k+1)!`.
pub fn ck_extend_right_materialized(f0: &AmbientPoly) -> Result<AmbientPoly> {
    let setting = f0.setting().clone();
    let seed = to_seed(f0)?;
    let xq = x_q_poly(&setting);
    let n = setting.nvars();
    let mut out = AmbientPoly::zero(&setting, n);
    let mut lap_even = seed.clone();
    let mut lap_odd = crate::operators::dirac_base_right(&seed);
    let mut xq_even = AmbientPoly::one(&setting, n);
    let mut k = 0u32;
    while !(lap_even.is_zero() && lap_odd.is_zero()) {
        let xq_odd = xq_even.mul(&xq);
        out = out.add(
            &xq_even
                .mul(&seed_to_ambient(&lap_even))
                .scale(&factorial(2 * k).recip()),
        );
        out = out.add(
            &seed_to_ambient(&lap_odd)
                .mul(&xq_odd)
                .scale(&factorial(2 * k + 1).recip()),
        );
        lap_even = laplacian_base(&lap_even);
        lap_odd = laplacian_base(&lap_odd);
        xq_even = xq_odd.mul(&xq);
        k += 1;
    }
    Ok(out)
}

/// The GCK coefficient recursion residuals for an extracted sequence:
/// `(2k+q) A_{2k+1} - D_p A_{2k}` and `(2k+2) A_{2k+2} - Dbar_p A_{2k+1}`.
pub fn gck_recursion_residuals(setting: &Setting, coeffs: &[AmbientPoly]) -> Vec<AmbientPoly> {
    let q = setting.q() as i64;
    let mut out = Vec::new();
    for k in 0.. {
        let even_idx = 2 * k;
        if even_idx >= coeffs.len() {
            break;
        }
        let zero = AmbientPoly::zero(setting, setting.p() + 1);
        let a_even = &coeffs[even_idx];
        let a_odd = coeffs.get(even_idx + 1).unwrap_or(&zero);
        out.push(
            a_odd
                .scale(&rat_int(2 * k as i64 + q))
                .sub(&dirac_base(a_even)),
        );
        let a_next = coeffs.get(even_idx + 2).unwrap_or(&zero);
        out.push(
            a_next
                .scale(&rat_int(2 * k as i64 + 2))
                .sub(&dirac_bar_base(a_odd)),
        );
    }
    out
}

/// `f|_{x_q = 0}` of an ambient polynomial, as a seed polynomial.
pub fn restrict_to_base(f: &AmbientPoly) -> AmbientPoly {
    let setting = f.setting().clone();
    let p = setting.p();
    let mut out = AmbientPoly::zero(&setting, p + 1);
    'terms: for (m, c) in f.terms() {
        let exps = m.exps();
        for &e in &exps[p + 1..] {
            if e > 0 {
                continue 'terms;
            }
        }
        let base = exps[..=p].to_vec();
        out = out.add(
            &AmbientPoly::from_terms(&setting, p + 1, [(Monomial::new(base), c.clone())]).unwrap(),
        );
    }
    out
}

/// Initial slope `D_{x_q} f|_{x_q = 0}` as a seed polynomial.
pub fn initial_slope(f: &AmbientPoly) -> AmbientPoly {
    restrict_to_base(&crate::operators::dirac_q(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::operators::{cr_check, dirac, laplacian, vekua_check};
    use crate::rational::rat;
    use crate::stem::constant_stem;

    fn setting(p: usize, q: usize) -> Setting {
        let m = p + q;
        Setting::new(Algebra::clifford(m as u32).unwrap(), m, p).unwrap()
    }

    fn seed_var(st: &Setting, i: usize) -> AmbientPoly {
        AmbientPoly::var(st, st.p() + 1, i).unwrap()
    }

    #[test]
    fn ck_of_coordinate_is_fueter_variable() {
        for (p, q) in [(0usize, 3usize), (1, 2), (2, 3)] {
            let st = setting(p, q);
            for l in 0..=p {
                let s = ck_extend(&seed_var(&st, l)).unwrap();
                assert_eq!(s.materialize(), fueter_variable(&st, l).unwrap());
                assert!(cr_check(&s));
            }
        }
    }

    #[test]
    fn ck_of_constant() {
        let st = setting(1, 2);
        let a = st.algebra().basis_element(2);
        let c = AmbientPoly::constant(&st, st.p() + 1, a.clone());
        let s = ck_extend(&c).unwrap();
        assert_eq!(s, constant_stem(&st, a));
    }

    #[test]
    fn ck_of_x0_squared() {
        // p = 0: CK[x_0^2] = (x_0^2 - u, 2 x_0)
        let st = setting(0, 3);
        let x0 = seed_var(&st, 0);
        let s = ck_extend(&x0.mul(&x0)).unwrap();
        let n = stem_nvars(&st);
        let sx0 = AmbientPoly::var(&st, n, 0).unwrap();
        assert_eq!(s.g1(), &sx0.mul(&sx0).sub(&u_var(&st)));
        assert_eq!(s.g2(), &sx0.scale(&rat_int(2)));
        assert!(cr_check(&s));
        assert_eq!(s.trace_at_zero(), x0.mul(&x0));
    }

    #[test]
    fn ck_rejects_out_of_range_variable() {
        let st = setting(1, 2);
        let f = AmbientPoly::var(&st, st.nvars(), 3).unwrap();
        assert!(matches!(
            ck_extend(&f),
            Err(Error::VariableOutOfRange { .. })
        ));
    }

    #[test]
    fn gck_examples() {
        let st = setting(1, 3);
        // constants extend to themselves
        let a = st.algebra().basis_element(1);
        let c = AmbientPoly::constant(&st, st.p() + 1, a.clone());
        assert_eq!(
            gck_extend(&c).unwrap(),
            AmbientPoly::constant(&st, st.nvars(), a)
        );
        // gck(x_0) = x_0 + x_q / q, and dirac kills it
        let x0 = seed_var(&st, 0);
        let f = gck_extend(&x0).unwrap();
        let expected = seed_to_ambient(&x0).add(&x_q_poly(&st).scale(&rat(1, st.q() as i64)));
        assert_eq!(f, expected);
        assert!(dirac(&f).is_zero());
        assert!(vekua_check(&gck_stem(&x0).unwrap()));
    }

    #[test]
    fn gck_q1_matches_ck() {
        let st = setting(2, 1);
        let x0 = seed_var(&st, 0);
        let x1 = seed_var(&st, 1);
        let f0 = x0.mul(&x0).mul(&x1).add(&x1.mul(&x1).scale(&rat(1, 3)));
        let via_gck = gck_extend(&f0).unwrap();
        let via_ck = ck_extend(&f0).unwrap().materialize();
        assert_eq!(via_gck, via_ck);
    }

    #[test]
    fn gck_coefficient_recursion() {
        let st = setting(1, 2);
        let x0 = seed_var(&st, 0);
        let x1 = seed_var(&st, 1);
        let a0 = x0.mul(&x0).mul(&x0).add(&x0.mul(&x1).leftmul(st.v(1)));
        let f = gck_extend(&a0).unwrap();
        let coeffs = slice_series_coefficients(&f).unwrap();
        assert_eq!(restrict_to_base(&f), a0);
        for r in gck_recursion_residuals(&st, &coeffs) {
            assert!(r.is_zero());
        }
    }

    #[test]
    fn hgck_examples() {
        let st = setting(1, 2);
        let one = AmbientPoly::one(&st, st.p() + 1);
        let zero = AmbientPoly::zero(&st, st.p() + 1);
        assert_eq!(
            hgck_extend(&one, &zero).unwrap(),
            AmbientPoly::one(&st, st.nvars())
        );
        // HGCK[0,1] = x_q, with initial slope -q
        let f = hgck_extend(&zero, &one).unwrap();
        assert_eq!(f, x_q_poly(&st));
        assert_eq!(
            initial_slope(&f),
            AmbientPoly::scalar(&st, st.p() + 1, rat_int(-(st.q() as i64)))
        );
        // HGCK[x_0^2, 0] = x_0^2 - rho/q, harmonic
        let x0 = seed_var(&st, 0);
        let f = hgck_extend(&x0.mul(&x0), &zero).unwrap();
        let expected = seed_to_ambient(&x0.mul(&x0)).sub(
            &crate::poly::rho_poly(&st).scale(&rat(1, st.q() as i64)),
        );
        assert_eq!(f, expected);
        assert!(laplacian(&f).is_zero());
    }

    #[test]
    fn hgck_split_identity() {
        let st = setting(1, 3);
        let x0 = seed_var(&st, 0);
        let x1 = seed_var(&st, 1);
        let a0 = x0.mul(&x0).sub(&x1.mul(&x1).scale(&rat(2, 5)));
        let a1 = x0.mul(&x1).leftmul(&st.algebra().basis_element(2));
        let whole = hgck_extend(&a0, &a1).unwrap();
        let zero = AmbientPoly::zero(&st, st.p() + 1);
        let even = hgck_extend(&a0, &zero).unwrap();
        let odd = hgck_extend(&zero, &a1).unwrap();
        assert_eq!(whole, even.add(&odd));
        let (pe, po) = crate::stem::partial_even_odd(&whole);
        assert_eq!(pe, even);
        assert_eq!(po, odd);
        assert!(laplacian(&whole).is_zero());
        assert_eq!(restrict_to_base(&whole), a0);
        assert_eq!(initial_slope(&whole), a1.scale(&rat_int(-(st.q() as i64))));
    }

    #[test]
    fn corollary_gck_equals_hgck_combination() {
        let st = setting(1, 3);
        let x0 = seed_var(&st, 0);
        let x1 = seed_var(&st, 1);
        let a0 = x0.mul(&x0).mul(&x1);
        let zero = AmbientPoly::zero(&st, st.p() + 1);
        let lhs = gck_extend(&a0).unwrap();
        let rhs = hgck_extend(&a0, &zero).unwrap().add(
            &hgck_extend(&zero, &dirac_base(&a0))
                .unwrap()
                .scale(&rat(1, st.q() as i64)),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dbar_of_hgck_identities() {
        use crate::operators::dirac_bar;
        let st = setting(1, 3);
        let x0 = seed_var(&st, 0);
        let x1 = seed_var(&st, 1);
        let f0 = x0.mul(&x1).mul(&x1).add(&x0.scale(&rat(3, 4)));
        let zero = AmbientPoly::zero(&st, st.p() + 1);
        // Dbar HGCK[f0, 0] = GCK[Dbar_p f0]
        let lhs = dirac_bar(&hgck_extend(&f0, &zero).unwrap());
        let rhs = gck_extend(&dirac_bar_base(&f0)).unwrap();
        assert_eq!(lhs, rhs);
        // Dbar HGCK[0, f0] = q GCK[f0]
        let lhs = dirac_bar(&hgck_extend(&zero, &f0).unwrap());
        let rhs = gck_extend(&f0).unwrap().scale(&rat_int(st.q() as i64));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fueter_variable_examples() {
        // z_0 = x_0 + x_q
        let st = setting(1, 2);
        let z0 = fueter_variable(&st, 0).unwrap();
        assert_eq!(
            z0,
            AmbientPoly::var(&st, st.nvars(), 0)
                .unwrap()
                .add(&x_q_poly(&st))
        );
        // z_1 in R_{0,3} with p=1: x_1 + x_2 e2e1 + x_3 e3e1
        let st = Setting::new(Algebra::clifford(3).unwrap(), 3, 1).unwrap();
        let z1 = fueter_variable(&st, 1).unwrap();
        let n = st.nvars();
        let e2e1 = st.v(2).mul(st.v(1));
        let e3e1 = st.v(3).mul(st.v(1));
        let expected = AmbientPoly::var(&st, n, 1)
            .unwrap()
            .add(&AmbientPoly::var(&st, n, 2).unwrap().rightmul(&e2e1))
            .add(&AmbientPoly::var(&st, n, 3).unwrap().rightmul(&e3e1));
        assert_eq!(z1, expected);
        assert!(fueter_variable(&st, 2).is_err());
    }

    #[test]
    fn right_fueter_variable_is_conjugate_for_positive_index() {
        let st = setting(2, 2);
        let mut rng = crate::rng::TrialRng::new(11, 0);
        let pt = rng.point(st.nvars());
        for l in 1..=st.p() {
            let z = fueter_variable(&st, l).unwrap();
            let zr = fueter_variable_right(&st, l).unwrap();
            assert_eq!(z.evaluate(&pt).conj(), zr.evaluate(&pt));
        }
        // l = 0: conjugation also reflects the vector part
        let z0 = fueter_variable(&st, 0).unwrap();
        let z0r = fueter_variable_right(&st, 0).unwrap();
        assert_eq!(z0.evaluate(&pt).conj(), z0r.reflect().evaluate(&pt));
    }

    #[test]
    fn fueter_polynomial_base_cases() {
        let st = setting(1, 2);
        assert_eq!(
            fueter_polynomial(&st, &[]).unwrap(),
            AmbientPoly::one(&st, st.nvars())
        );
        assert_eq!(
            fueter_polynomial(&st, &[0, 0]).unwrap(),
            AmbientPoly::one(&st, st.nvars())
        );
        assert!(fueter_polynomial(&st, &[1, -1]).unwrap().is_zero());
        assert_eq!(
            fueter_polynomial(&st, &[0, 1]).unwrap(),
            fueter_variable(&st, 1).unwrap()
        );
        // (1,1): (z_0 z_1 + z_1 z_0)/2
        let z0 = fueter_variable(&st, 0).unwrap();
        let z1 = fueter_variable(&st, 1).unwrap();
        let expected = z0.mul(&z1).add(&z1.mul(&z0)).scale(&rat(1, 2));
        assert_eq!(fueter_polynomial(&st, &[1, 1]).unwrap(), expected);
    }

    #[test]
    fn v_polynomial_matches_fueter_polynomial_spot() {
        let st = setting(1, 2);
        for k in [vec![1i64, 0], vec![0, 1], vec![1, 1], vec![2, 0], vec![2, 1]] {
            let v = v_polynomial(&st, &k).unwrap();
            let p = fueter_polynomial(&st, &k).unwrap();
            assert_eq!(v, p, "k = {k:?}");
        }
        assert_eq!(
            v_polynomial(&st, &[0, 0]).unwrap(),
            AmbientPoly::one(&st, st.nvars())
        );
    }

    #[test]
    fn multiset_permutation_count() {
        let perms = multiset_permutations(&[0, 0, 1]);
        assert_eq!(perms.len(), 3);
        let perms = multiset_permutations(&[0, 1, 2]);
        assert_eq!(perms.len(), 6);
        let perms = multiset_permutations(&[1, 1, 1]);
        assert_eq!(perms.len(), 1);
    }

    #[test]
    fn right_ck_series_right_monogenic_at_sphere_points() {
        // exploratory: the right-sided extension series is annihilated by
        // the right slice Dirac at rational sphere points (degree <= 3)
        use crate::operators::slice_dirac_right;
        use crate::rng::TrialRng;
        for (p, q) in [(0usize, 3usize), (1, 2)] {
            let st = setting(p, q);
            for t in 0..4 {
                let mut rng = TrialRng::new(23, t);
                let seed = rng.seed_poly(&st, 3);
                let f = ck_extend_right_materialized(&seed).unwrap();
                for _ in 0..3 {
                    let omega = rng.sphere(&st);
                    assert!(slice_dirac_right(&f, &omega).is_zero());
                }
            }
        }
    }
}
