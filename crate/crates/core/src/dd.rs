//! Double-double (two-float compensated) arithmetic, real and complex.
//!
//! The Maclaurin evaluation of the Airy functions loses up to ~16 decimal
//! digits to cancellation near the top of the series radius used here
//! (partial sums reach ~1e7 while Ai(9) ~ 2.5e-9), so plain f64 cannot
//! certify 1e-10. Carrying the sums in ~32-digit double-double leaves the
//! result with full f64 accuracy. Algorithms are the classic error-free
//! transforms (Dekker splits via fused multiply-add, Knuth two-sum).

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd {
        hi: s,
        lo: (a - (s - bb)) + (b - bb),
    }
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    // requires |a| >= |b| (or a == 0)
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl Dd {
    #[cfg_attr(not(test), allow(dead_code))]
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    #[cfg_attr(not(test), allow(dead_code))]
    pub fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        let t = two_sum(self.lo, o.lo);
        let r = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(r.hi, r.lo + t.lo)
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        let lo = p.lo + (self.hi * o.lo + self.lo * o.hi);
        quick_two_sum(p.hi, lo)
    }

    #[inline]
    #[cfg_attr(not(test), allow(dead_code))]
    pub fn mul_f64(self, c: f64) -> Dd {
        let p = two_prod(self.hi, c);
        quick_two_sum(p.hi, p.lo + self.lo * c)
    }

    #[inline]
    pub fn div_f64(self, c: f64) -> Dd {
        let q1 = self.hi / c;
        let p = two_prod(q1, c);
        let s = two_sum(self.hi, -p.hi);
        let q2 = (s.hi + (s.lo - p.lo + self.lo)) / c;
        quick_two_sum(q1, q2)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    #[inline]
    pub fn from_c64(z: num_complex::Complex64) -> Self {
        DdComplex {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    #[inline]
    pub fn to_c64(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.value(), self.im.value())
    }

    #[inline]
    pub fn add(self, o: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    #[inline]
    pub fn mul(self, o: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    /// Scale by a real double-double constant.
    #[inline]
    pub fn scale(self, c: Dd) -> DdComplex {
        DdComplex {
            re: self.re.mul(c),
            im: self.im.mul(c),
        }
    }

    #[inline]
    pub fn div_f64(self, c: f64) -> DdComplex {
        DdComplex {
            re: self.re.div_f64(c),
            im: self.im.div_f64(c),
        }
    }

    /// Cheap magnitude estimate (hi parts only), for convergence tests.
    #[inline]
    pub fn mag_hi(self) -> f64 {
        self.re.hi.abs() + self.im.hi.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_carries_the_low_part() {
        let a = Dd::from_f64(1.0);
        let tiny = Dd::from_f64(1e-25);
        let s = a.add(tiny).sub(a);
        assert_eq!(s.value(), 1e-25);
    }

    #[test]
    fn mul_is_error_free_for_exact_products() {
        let a = Dd::from_f64(1.0 + 2f64.powi(-30));
        let b = a.mul(a);
        // (1 + eps)^2 = 1 + 2 eps + eps^2; eps^2 = 2^-60 survives in the low word
        let exact = 1.0 + 2f64.powi(-29);
        assert_eq!(b.hi, exact);
        assert_eq!(b.lo, 2f64.powi(-60));
    }

    #[test]
    fn div_round_trips() {
        let a = Dd::new(std::f64::consts::PI, 1.2246467991473532e-16);
        let b = a.div_f64(7.0).mul_f64(7.0);
        assert!((b.hi - a.hi).abs() < 1e-30);
        assert!((b.value() - a.value()).abs() < 1e-30);
    }

    #[test]
    fn complex_mul_matches_f64_for_small_inputs() {
        let z = num_complex::Complex64::new(0.3, -1.7);
        let w = DdComplex::from_c64(z);
        let sq = w.mul(w).to_c64();
        let expect = z * z;
        assert!((sq - expect).norm() < 1e-15 * expect.norm());
    }

    #[test]
    fn geometric_series_in_dd_hits_32_digits() {
        // sum_{k=0}^{120} r^k = (1 - r^121)/(1 - r) with r = 9/10
        let r = Dd::from_f64(0.9);
        let mut term = Dd::from_f64(1.0);
        let mut sum = Dd::ZERO;
        for _ in 0..=120 {
            sum = sum.add(term);
            term = term.mul(r);
        }
        // closed form, stated multiplicatively: sum * (1 - r) = 1 - r^121
        // (1 - r is not the f64 literal 0.1; dividing by that would cost
        // 3e-17 relative all by itself)
        let mut pow = Dd::from_f64(1.0);
        for _ in 0..121 {
            pow = pow.mul(r);
        }
        let one = Dd::from_f64(1.0);
        let diff = sum.mul(one.sub(r)).sub(one.sub(pow));
        assert!(diff.value().abs() < 1e-27, "diff {}", diff.value());
    }
}
