//! Oracles shared by the integration tests and the acceptance runner.
//!
//! Nothing here calls into the library: the quadrature, the rational
//! arithmetic and the frozen high-precision values are all independent.

#![allow(dead_code, clippy::excessive_precision, clippy::suspicious_arithmetic_impl)]

use std::ops::{Add, Div, Mul, Neg, Sub};

pub const PI: f64 = std::f64::consts::PI;

// ---------------------------------------------------------------------------
// Frozen reference values, computed with mpmath at 30 significant digits.

/// `(nu, Re log Gamma(1 + i nu), Im log Gamma(1 + i nu))`.
pub const LOG_GAMMA_1_PLUS_I_NU: [(f64, f64, f64); 8] = [
    (0.5, -0.1909454991867793643322, -0.2440582989054277626598),
    (1.0, -0.6509231993018563388852, -0.3016403204675331978875),
    (2.0, -1.87607878643092934123, 0.1296463163097883113837),
    (5.0, -6.130324144552748811571, 3.8158985746149244778),
    (10.0, -13.63773218824727060852, 13.80291297422990069401),
    (20.0, -28.99912186591626414613, 40.69587662033989673317),
    (50.0, -75.66486630382608519048, 146.3848817459133219068),
    (100.0, -153.8581090532909434973, 361.3015834260953946311),
];

/// `(Re z, Im z, Re log Gamma(z), Im log Gamma(z))`.
pub const LOG_GAMMA_GENERAL: [(f64, f64, f64, f64); 4] = [
    (2.0, 3.0, -2.092851753092733349564, 2.302396543466867626154),
    (0.5, 0.5, 0.1123872428096231125187, -0.750729202122050744645),
    (3.7, -20.0, -20.89742013928892083085, -44.68830654108373655214),
    (0.1, 1.0, -0.6440629807745180222505, -1.668945500070289978999),
];

/// `(nu, x, K_{i nu}(x))`.
pub const K_VALUES: [(f64, f64, f64); 12] = [
    (1.0, 0.5, 0.48339609004387797407),
    (1.0, 1.0, 0.28942803702599212763),
    (1.0, 2.0, 0.092385459890391181537),
    (2.0, 0.5, 0.016502018949481442656),
    (2.0, 1.0, 0.08061699762236597857),
    (2.0, 2.0, 0.047997990856470642072),
    (5.0, 0.5, -0.00042411714808406798747),
    (5.0, 1.0, 0.00038046182799756372805),
    (5.0, 2.0, -0.00034633788080657143473),
    (10.0, 0.5, 6.7717246719100322276e-8),
    (10.0, 1.0, 1.1294550821681802405e-7),
    (10.0, 2.0, 1.1735704221220611526e-7),
];

pub const L_1_1: f64 = 0.5170727395235033537017;
pub const W_OF_2: f64 = 0.8526055020137254913464724;

/// Orders listed in the reference tables.
pub const TABLE_N: [u32; 8] = [1, 2, 3, 4, 5, 10, 20, 50];

/// `(zero, three-term estimate)` at `x = 1`, to 6 dp, one entry per [`TABLE_N`].
pub const TABLE1_L: [(f64, f64); 8] = [
    (3.790205, 3.786398),
    (5.225963, 5.223461),
    (6.505143, 6.503534),
    (7.691206, 7.690065),
    (8.812990, 8.812124),
    (13.861303, 13.860936),
    (22.620755, 22.620598),
    (45.082187, 45.082135),
];

pub const TABLE1_K: [(f64, f64); 8] = [
    (2.962549, 2.962961),
    (4.534491, 4.531277),
    (5.879867, 5.877888),
    (7.107584, 7.106243),
    (8.258936, 8.257949),
    (13.385883, 13.385492),
    (22.207659, 22.207497),
    (44.732940, 44.732888),
];

pub const TABLE2_F: [(f64, f64); 8] = [
    (3.850274, 3.844515),
    (5.265045, 5.263499),
    (6.534299, 6.534022),
    (7.714536, 7.714724),
    (8.832476, 8.832846),
    (13.872097, 13.872514),
    (22.626541, 22.626791),
    (45.084649, 45.084747),
];

pub const TABLE2_G: [(f64, f64); 8] = [
    (3.045668, 3.031436),
    (4.581762, 4.578794),
    (5.913240, 5.912492),
    (7.133494, 7.133503),
    (8.280167, 8.280467),
    (13.397175, 13.397602),
    (22.213581, 22.213837),
    (44.735426, 44.735525),
];

/// Zeros at `x = 1` to 12 digits, `n = 1`.
pub const K_ZERO_1: f64 = 2.962548534570952348;
pub const L_ZERO_1: f64 = 3.790204798853014726;

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod quadrature (7/15 point).

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kron += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

fn adapt(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let (k, err) = gk15(f, a, b);
    if err <= tol || depth == 0 {
        return k;
    }
    let m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, depth - 1) + adapt(f, m, b, 0.5 * tol, depth - 1)
}

/// `int_a^b f` to absolute tolerance `tol`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    adapt(&f, a, b, tol, 30)
}

/// `K_{i nu}(x) = int_0^inf exp(-x cosh t) cos(nu t) dt` on the real line.
pub fn k_quadrature_direct(nu: f64, x: f64) -> f64 {
    let upper = (60.0 / x).acosh();
    integrate(|t| (-x * t.cosh()).exp() * (nu * t).cos(), 0.0, upper, 1e-13)
}

/// The same integral with the path moved to `t = u + i theta`:
/// `K = exp(-nu theta) int_0^inf exp(-x cos(theta) cosh u) cos(nu u - x sin(theta) sinh u) du`.
/// Returns `(ln |K|, sign K)`.
pub fn k_quadrature_shifted(nu: f64, x: f64, theta: f64) -> (f64, f64) {
    let (s, c) = theta.sin_cos();
    let upper = (60.0 / (x * c)).acosh();
    let v = integrate(
        |u| (-x * c * u.cosh()).exp() * (nu * u - x * s * u.sinh()).cos(),
        0.0,
        upper,
        1e-13,
    );
    (v.abs().ln() - nu * theta, v.signum())
}

/// Plain bisection on `[lo, hi]` down to adjacent floats.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    assert!(flo.signum() != f(hi).signum(), "no sign change on [{lo}, {hi}]");
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        if f(mid).signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

// ---------------------------------------------------------------------------
// Exact rational arithmetic for coefficient identities.

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Q {
    pub num: i128,
    pub den: i128,
}

impl Q {
    pub fn new(num: i128, den: i128) -> Q {
        assert!(den != 0);
        let g = gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Q {
            num: s * num / g,
            den: s * den / g,
        }
    }

    pub fn int(n: i128) -> Q {
        Q::new(n, 1)
    }

    pub fn zero() -> Q {
        Q::int(0)
    }

    pub fn one() -> Q {
        Q::int(1)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, o: Q) -> Q {
        Q::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
}

impl Sub for Q {
    type Output = Q;
    fn sub(self, o: Q) -> Q {
        self + (-o)
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q::new(-self.num, self.den)
    }
}

impl Mul for Q {
    type Output = Q;
    fn mul(self, o: Q) -> Q {
        let g1 = gcd(self.num, o.den).max(1);
        let g2 = gcd(o.num, self.den).max(1);
        Q::new((self.num / g1) * (o.num / g2), (self.den / g2) * (o.den / g1))
    }
}

impl Div for Q {
    type Output = Q;
    fn div(self, o: Q) -> Q {
        self * Q::new(o.den, o.num)
    }
}

/// Product of two power series in `t`, truncated after `t^5`.
pub fn series_mul(a: &[Q; 6], b: &[Q; 6]) -> [Q; 6] {
    let mut out = [Q::zero(); 6];
    for i in 0..6 {
        for j in 0..6 - i {
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    out
}

/// Coefficients of `sum_k chi^k / (k! (1 + i nu)_k)` in powers of `t = 1/(i nu)`,
/// from `1/(j + i nu) = t / (1 + j t)` expanded term by term.
pub fn bessel_series_in_t(chi: Q) -> [Q; 6] {
    let mut total = [Q::zero(); 6];
    total[0] = Q::one();
    // running product  prod_{j<=k} t chi / (j (1 + j t))
    let mut running = total;
    for k in 1..6i128 {
        let mut geometric = [Q::zero(); 6];
        let mut p = Q::one();
        for g in geometric.iter_mut() {
            *g = p;
            p = p * Q::int(-k);
        }
        let mut factor = [Q::zero(); 6];
        for i in 0..5 {
            factor[i + 1] = geometric[i] * chi / Q::int(k);
        }
        running = series_mul(&running, &factor);
        for i in 0..6 {
            total[i] = total[i] + running[i];
        }
    }
    total
}

pub fn stirling_q() -> [Q; 6] {
    [
        Q::one(),
        Q::new(-1, 12),
        Q::new(1, 288),
        Q::new(139, 51840),
        Q::new(-571, 2488320),
        Q::new(-163879, 209018880),
    ]
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
