//! Exact phase vectors and the butterfly kernels.
//!
//! Amplitudes are Gaussian integers; the 1/sqrt(2) of each kernel is
//! deferred into a half-power exponent, so flatness and identity checks
//! are exact integer comparisons with no tolerances anywhere.

use std::fmt;

use crate::anf::{BooleanFunction, Z4Function};
use crate::error::{Error, Result};

/// Complex number with integer parts.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: i64,
    pub im: i64,
}

impl Gaussian {
    pub const ZERO: Gaussian = Gaussian { re: 0, im: 0 };
    pub const ONE: Gaussian = Gaussian { re: 1, im: 0 };

    pub fn new(re: i64, im: i64) -> Self {
        Gaussian { re, im }
    }

    /// i^k for k mod 4.
    pub fn i_power(k: u8) -> Self {
        match k & 3 {
            0 => Gaussian::new(1, 0),
            1 => Gaussian::new(0, 1),
            2 => Gaussian::new(-1, 0),
            _ => Gaussian::new(0, -1),
        }
    }

    /// Multiplication by i.
    pub fn times_i(self) -> Self {
        Gaussian::new(-self.im, self.re)
    }

    /// Multiplication by -i.
    pub fn times_neg_i(self) -> Self {
        Gaussian::new(self.im, -self.re)
    }

    pub fn scale(self, k: i64) -> Self {
        Gaussian::new(self.re * k, self.im * k)
    }

    pub fn norm_sqr(self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }
}

impl std::ops::Add for Gaussian {
    type Output = Gaussian;

    fn add(self, other: Self) -> Self {
        Gaussian::new(self.re + other.re, self.im + other.im)
    }
}

impl std::ops::Sub for Gaussian {
    type Output = Gaussian;

    fn sub(self, other: Self) -> Self {
        Gaussian::new(self.re - other.re, self.im - other.im)
    }
}

impl std::ops::Mul for Gaussian {
    type Output = Gaussian;

    fn mul(self, other: Self) -> Self {
        Gaussian::new(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )
    }
}

impl std::ops::Neg for Gaussian {
    type Output = Gaussian;

    fn neg(self) -> Self {
        Gaussian::new(-self.re, -self.im)
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}{im}i"),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

/// Per-position kernel choice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum KernelKind {
    I,
    H,
    N,
}

impl KernelKind {
    pub fn as_char(self) -> char {
        match self {
            KernelKind::I => 'I',
            KernelKind::H => 'H',
            KernelKind::N => 'N',
        }
    }
}

/// Assignment of one kernel to each of the n tensor positions; position k
/// acts on variable x_k.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TransformSpec {
    kinds: Vec<KernelKind>,
}

impl TransformSpec {
    pub fn identity(n: usize) -> Self {
        TransformSpec { kinds: vec![KernelKind::I; n] }
    }

    pub fn new(kinds: Vec<KernelKind>) -> Self {
        TransformSpec { kinds }
    }

    /// Spec with H exactly at the positions of the mask.
    pub fn h_at(n: usize, mask: u32) -> Self {
        TransformSpec {
            kinds: (0..n)
                .map(|i| if mask >> i & 1 == 1 { KernelKind::H } else { KernelKind::I })
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.kinds.len()
    }

    pub fn kinds(&self) -> &[KernelKind] {
        &self.kinds
    }

    pub fn kind(&self, i: usize) -> KernelKind {
        self.kinds[i]
    }

    /// The positions carrying H and N, as bitmasks.
    pub fn masks(&self) -> (u32, u32) {
        let mut h = 0u32;
        let mut nn = 0u32;
        for (i, k) in self.kinds.iter().enumerate() {
            match k {
                KernelKind::H => h |= 1 << i,
                KernelKind::N => nn |= 1 << i,
                KernelKind::I => {}
            }
        }
        (h, nn)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let kinds = s
            .chars()
            .map(|c| match c {
                'I' | 'i' => Ok(KernelKind::I),
                'H' | 'h' => Ok(KernelKind::H),
                'N' | 'n' => Ok(KernelKind::N),
                other => Err(Error::Parse(format!("bad kernel letter `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TransformSpec { kinds })
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in &self.kinds {
            write!(f, "{}", k.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Transform family searched for flat spectra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// I or H per position: 2^n members.
    IH,
    /// I, H, or N per position: 3^n members.
    IHN,
    /// H or N per position: 2^n members.
    HN,
}

impl Family {
    pub fn size(self, n: usize) -> u64 {
        match self {
            Family::IH | Family::HN => 1u64 << n,
            Family::IHN => 3u64.pow(n as u32),
        }
    }

    /// The index-th member, in a fixed enumeration order.
    pub fn member(self, n: usize, index: u64) -> TransformSpec {
        let mut kinds = Vec::with_capacity(n);
        let mut rest = index;
        for _ in 0..n {
            let kind = match self {
                Family::IH => {
                    let k = if rest & 1 == 1 { KernelKind::H } else { KernelKind::I };
                    rest >>= 1;
                    k
                }
                Family::HN => {
                    let k = if rest & 1 == 1 { KernelKind::N } else { KernelKind::H };
                    rest >>= 1;
                    k
                }
                Family::IHN => {
                    let k = match rest % 3 {
                        0 => KernelKind::I,
                        1 => KernelKind::H,
                        _ => KernelKind::N,
                    };
                    rest /= 3;
                    k
                }
            };
            kinds.push(kind);
        }
        TransformSpec { kinds }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "IH" => Ok(Family::IH),
            "IHN" => Ok(Family::IHN),
            "HN" => Ok(Family::HN),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::IH => "IH",
            Family::IHN => "IHN",
            Family::HN => "HN",
        }
    }
}

/// One of the butterfly kernels (the identity never needs applying).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kernel {
    H,
    N,
}

/// Length-2^n vector of Gaussian integers scaled by 2^(-half_pow/2).
/// Index bit i of a component is the value of variable x_i.
#[derive(Clone, PartialEq, Eq)]
pub struct SpectralVector {
    n: usize,
    half_pow: u32,
    amps: Vec<Gaussian>,
}

impl SpectralVector {
    /// The bipolar vector (-1)^p.
    pub fn bipolar(p: &BooleanFunction) -> Self {
        let n = p.n();
        let amps = (0..1u32 << n)
            .map(|k| if p.evaluate(k) { Gaussian::new(-1, 0) } else { Gaussian::ONE })
            .collect();
        SpectralVector { n, half_pow: 0, amps }
    }

    /// The vector [m(x)] i^{p(x)}: the bracket zeroes components where m
    /// vanishes, the Z4 exponent supplies a fourth-root phase.
    pub fn phase_vector(m: &BooleanFunction, p: &Z4Function) -> Result<Self> {
        if m.n() != p.n() {
            return Err(Error::DimensionMismatch { left: m.n(), right: p.n() });
        }
        let n = m.n();
        let amps = (0..1u32 << n)
            .map(|k| {
                if m.evaluate(k) {
                    Gaussian::i_power(p.value(k))
                } else {
                    Gaussian::ZERO
                }
            })
            .collect();
        Ok(SpectralVector { n, half_pow: 0, amps })
    }

    pub fn from_amps(n: usize, half_pow: u32, amps: Vec<Gaussian>) -> Self {
        assert_eq!(amps.len(), 1 << n);
        SpectralVector { n, half_pow, amps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn half_pow(&self) -> u32 {
        self.half_pow
    }

    pub fn amps(&self) -> &[Gaussian] {
        &self.amps
    }

    /// Applies the kernel at one position. Each application contributes a
    /// deferred factor 2^(-1/2).
    pub fn apply_kernel(mut self, i: usize, kernel: Kernel) -> Result<Self> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        self.apply_kernel_in_place(i, kernel);
        Ok(self)
    }

    pub(crate) fn apply_kernel_in_place(&mut self, i: usize, kernel: Kernel) {
        debug_assert!(i < self.n);
        let stride = 1usize << i;
        let len = self.amps.len();
        let mut base = 0;
        while base < len {
            for k0 in base..base + stride {
                let k1 = k0 + stride;
                let a = self.amps[k0];
                let b = self.amps[k1];
                match kernel {
                    Kernel::H => {
                        self.amps[k0] = a + b;
                        self.amps[k1] = a - b;
                    }
                    Kernel::N => {
                        self.amps[k0] = a + b.times_i();
                        self.amps[k1] = a - b.times_i();
                    }
                }
            }
            base += stride << 1;
        }
        self.half_pow += 1;
        debug_assert!(self.norm_check());
    }

    /// Unitarity: the squared norm scaled by 2^(-half_pow) is invariant.
    fn norm_check(&self) -> bool {
        // Only sound to evaluate against the start norm if tracked by the
        // caller; here we simply guard against overflow territory.
        self.amps.iter().all(|a| a.re.abs() < i64::MAX / 4 && a.im.abs() < i64::MAX / 4)
    }

    /// Total squared norm times 2^{half_pow needed}: returns (sum |a|^2, half_pow).
    pub fn norm_profile(&self) -> (i64, u32) {
        (self.amps.iter().map(|a| a.norm_sqr()).sum(), self.half_pow)
    }

    /// Applies all non-identity kernels of the spec, lowest position first.
    pub fn apply(mut self, spec: &TransformSpec) -> Result<Self> {
        if spec.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: spec.n() });
        }
        for (i, kind) in spec.kinds().iter().enumerate() {
            match kind {
                KernelKind::I => {}
                KernelKind::H => self.apply_kernel_in_place(i, Kernel::H),
                KernelKind::N => self.apply_kernel_in_place(i, Kernel::N),
            }
        }
        Ok(self)
    }

    /// Flat means every component has the same squared magnitude.
    /// For unit-magnitude inputs this is exactly the unimodularity of the
    /// normalized spectrum.
    pub fn is_flat(&self) -> bool {
        let first = self.amps[0].norm_sqr();
        self.amps.iter().all(|a| a.norm_sqr() == first)
    }

    /// Exact equality after aligning the deferred normalizations. Vectors
    /// whose half powers differ by an odd amount can only agree when both
    /// are zero.
    pub fn eq_normalized(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        let (hi, lo, flipped) = if self.half_pow >= other.half_pow {
            (self, other, false)
        } else {
            (other, self, true)
        };
        let diff = hi.half_pow - lo.half_pow;
        if diff % 2 == 1 {
            return hi.amps.iter().all(|a| a.is_zero()) && lo.amps.iter().all(|a| a.is_zero());
        }
        let scale = 1i64 << (diff / 2);
        let _ = flipped;
        hi.amps
            .iter()
            .zip(&lo.amps)
            .all(|(a, b)| *a == b.scale(scale))
    }

    /// Multiplies every component by a unit and bumps the half power, used
    /// by the diagonal operators.
    pub fn scale_all(mut self, factor: Gaussian, extra_half_pow: u32) -> Self {
        for a in &mut self.amps {
            *a = *a * factor;
        }
        self.half_pow += extra_half_pow;
        self
    }
}

impl fmt::Debug for SpectralVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpectralVector(2^(-{}/2) * {:?})", self.half_pow, self.amps)
    }
}

/// A per-position diagonal or anti-diagonal unitary with a global unit
/// scalar, exactly the shape of the correction operators in the local
/// complementation chain.
#[derive(Clone, Debug)]
pub struct DiagonalOp {
    n: usize,
    entries: Vec<DiagEntry>,
    /// Global factor scalar * 2^(-scalar_half_pow/2).
    scalar: Gaussian,
    scalar_half_pow: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiagEntry {
    Identity,
    /// diag(1, i)
    D,
    /// diag(1, -i)
    DInv,
    /// ((0, -1), (1, 0)): sends (a, b) to (-b, a).
    AntiD,
}

impl DiagonalOp {
    pub fn identity(n: usize) -> Self {
        DiagonalOp {
            n,
            entries: vec![DiagEntry::Identity; n],
            scalar: Gaussian::ONE,
            scalar_half_pow: 0,
        }
    }

    /// The operator (sqrt2/(1+i)) * d_l d_j with d = diag(1, i): the global
    /// scalar is (1-i)/sqrt2 in deferred form.
    pub fn delta(n: usize, l: usize, j: usize) -> Self {
        let mut entries = vec![DiagEntry::Identity; n];
        entries[l] = DiagEntry::D;
        entries[j] = DiagEntry::D;
        DiagonalOp { n, entries, scalar: Gaussian::new(1, -1), scalar_half_pow: 1 }
    }

    /// The operator -(d'_l d'_j) with d' = ((0,-1),(1,0)).
    pub fn gamma(n: usize, l: usize, j: usize) -> Self {
        let mut entries = vec![DiagEntry::Identity; n];
        entries[l] = DiagEntry::AntiD;
        entries[j] = DiagEntry::AntiD;
        DiagonalOp { n, entries, scalar: Gaussian::new(-1, 0), scalar_half_pow: 0 }
    }

    pub fn entries(&self) -> &[DiagEntry] {
        &self.entries
    }

    pub fn set_entry(&mut self, position: usize, entry: DiagEntry) {
        self.entries[position] = entry;
    }

    pub fn scalar(&self) -> (Gaussian, u32) {
        (self.scalar, self.scalar_half_pow)
    }

    pub fn apply(&self, mut s: SpectralVector) -> Result<SpectralVector> {
        if s.n() != self.n {
            return Err(Error::DimensionMismatch { left: s.n(), right: self.n });
        }
        for (i, entry) in self.entries.iter().enumerate() {
            let stride = 1usize << i;
            match entry {
                DiagEntry::Identity => {}
                DiagEntry::D => {
                    for k in 0..s.amps.len() {
                        if k & stride != 0 {
                            s.amps[k] = s.amps[k].times_i();
                        }
                    }
                }
                DiagEntry::DInv => {
                    for k in 0..s.amps.len() {
                        if k & stride != 0 {
                            s.amps[k] = s.amps[k].times_neg_i();
                        }
                    }
                }
                DiagEntry::AntiD => {
                    let len = s.amps.len();
                    let mut base = 0;
                    while base < len {
                        for k0 in base..base + stride {
                            let k1 = k0 + stride;
                            let a = s.amps[k0];
                            let b = s.amps[k1];
                            s.amps[k0] = -b;
                            s.amps[k1] = a;
                        }
                        base += stride << 1;
                    }
                }
            }
        }
        Ok(s.scale_all(self.scalar, self.scalar_half_pow))
    }
}
