//! Seeded random generation for the verification suites.
//!
//! Coefficients come from a bounded rational distribution (numerators in
//! `-16..=16`, denominators in `1..=16`) so counterexamples stay readable and
//! reproducible. Elements of algebras with dimension above 8 get at most 8
//! random basis positions; the laws are still exercised on multi-blade
//! elements while keeping the 500-triple suites fast.
//!
//! Each trial owns an independent stream: `TrialRng::new(seed, trial)` seeds
//! ChaCha8 with the suite seed and selects the trial as the stream, so trials
//! can run in any order (or in parallel) with identical results.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rational_sphere_point, Algebra, AlgebraElement, Setting, SpherePoint};
use crate::error::Result;
use crate::extensions::ck_extend;
use crate::poly::{AmbientPoly, Monomial};
use crate::rational::Rat;
use crate::stem::{stem_nvars, StemPair};

pub struct TrialRng {
    rng: ChaCha8Rng,
}

impl TrialRng {
    pub fn new(seed: u64, trial: u64) -> TrialRng {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial.wrapping_add(1));
        TrialRng { rng }
    }

    pub fn rat(&mut self) -> Rat {
        let num = self.rng.gen_range(-16i64..=16);
        let den = self.rng.gen_range(1i64..=16);
        Rat::new(num.into(), den.into())
    }

    pub fn nonzero_rat(&mut self) -> Rat {
        loop {
            let r = self.rat();
            if !num_traits::Zero::is_zero(&r) {
                return r;
            }
        }
    }

    pub fn small_index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    pub fn point(&mut self, n: usize) -> Vec<Rat> {
        (0..n).map(|_| self.rat()).collect()
    }

    /// Random algebra element with bounded support (8 positions max).
    pub fn element(&mut self, algebra: &Algebra) -> AlgebraElement {
        let dim = algebra.dim();
        let mut out = algebra.zero();
        if dim <= 8 {
            for i in 0..dim {
                out = out.add(&algebra.basis_element(i).scale(&self.rat()));
            }
        } else {
            for _ in 0..8 {
                let i = self.rng.gen_range(0..dim);
                out = out.add(&algebra.basis_element(i).scale(&self.rat()));
            }
        }
        out
    }

    /// Random element of the hypercomplex subspace `M = span(v_0..v_m)`.
    pub fn element_in_m(&mut self, setting: &Setting) -> AlgebraElement {
        let mut out = setting.algebra().zero();
        for s in 0..=setting.m() {
            out = out.add(&setting.v(s).scale(&self.rat()));
        }
        out
    }

    /// Random element of `span(v_0..v_p)` (the base span).
    pub fn element_in_base(&mut self, setting: &Setting) -> AlgebraElement {
        let mut out = setting.algebra().zero();
        for s in 0..=setting.p() {
            out = out.add(&setting.v(s).scale(&self.rat()));
        }
        out
    }

    /// Random sparse polynomial: up to `max_terms` monomials of total degree
    /// at most `max_degree`, algebra-valued coefficients.
    pub fn poly(
        &mut self,
        setting: &Setting,
        nvars: usize,
        max_degree: u32,
        max_terms: usize,
    ) -> AmbientPoly {
        let mut out = AmbientPoly::zero(setting, nvars);
        let terms = self.rng.gen_range(1..=max_terms);
        for _ in 0..terms {
            let mut exps = vec![0u16; nvars];
            let mut budget = self.rng.gen_range(0..=max_degree);
            while budget > 0 {
                let v = self.rng.gen_range(0..nvars);
                exps[v] += 1;
                budget -= 1;
            }
            let coeff = self.element(setting.algebra());
            out = out.add(
                &AmbientPoly::from_terms(setting, nvars, [(Monomial::new(exps), coeff)]).unwrap(),
            );
        }
        out
    }

    /// Random polynomial in the base variables `x_0..x_p`.
    pub fn seed_poly(&mut self, setting: &Setting, max_degree: u32) -> AmbientPoly {
        self.poly(setting, setting.p() + 1, max_degree, 4)
    }

    /// Random ambient polynomial in all `m + 1` variables.
    pub fn ambient_poly(&mut self, setting: &Setting, max_degree: u32) -> AmbientPoly {
        self.poly(setting, setting.nvars(), max_degree, 4)
    }

    /// Random stem (an arbitrary slice function, not necessarily regular).
    pub fn stem(&mut self, setting: &Setting, max_degree: u32) -> StemPair {
        let n = stem_nvars(setting);
        let g1 = self.poly(setting, n, max_degree, 3);
        let g2 = self.poly(setting, n, max_degree, 3);
        StemPair::new(setting, g1, g2).expect("matching setting")
    }

    /// Random GPS-regular stem: the CK-extension of a random seed.
    pub fn gps_stem(&mut self, setting: &Setting, max_degree: u32) -> Result<StemPair> {
        let seed = self.seed_poly(setting, max_degree);
        ck_extend(&seed)
    }

    pub fn sphere(&mut self, setting: &Setting) -> SpherePoint {
        rational_sphere_point(setting, &mut self.rng)
    }
}
