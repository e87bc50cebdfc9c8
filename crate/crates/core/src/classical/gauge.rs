use num_complex::Complex64;

/// Single-valued gauge function `χ(α) = Σ_{n≥1} a_n cos(nα) + b_n sin(nα)`
/// on the ring, in radians of phase (the charge over ħ is folded in).
///
/// Off the ring it is continued harmonically as
/// `Σ a_n Re(zⁿ) + b_n Im(zⁿ)` with `z = x + iy`, which agrees with `χ` on
/// the unit circle and is smooth at the origin, so its gradient can be
/// integrated along any path in the plane.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GaugeChoice {
    pub fourier_cos: Vec<f64>,
    pub fourier_sin: Vec<f64>,
}

impl GaugeChoice {
    pub fn new(fourier_cos: Vec<f64>, fourier_sin: Vec<f64>) -> Self {
        Self {
            fourier_cos,
            fourier_sin,
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.fourier_cos.iter().chain(&self.fourier_sin).all(|&c| c == 0.0)
    }

    /// `χ(α)` on the unit ring.
    pub fn on_ring(&self, alpha: f64) -> f64 {
        let c: f64 = self
            .fourier_cos
            .iter()
            .enumerate()
            .map(|(k, a)| a * ((k + 1) as f64 * alpha).cos())
            .sum();
        let s: f64 = self
            .fourier_sin
            .iter()
            .enumerate()
            .map(|(k, b)| b * ((k + 1) as f64 * alpha).sin())
            .sum();
        c + s
    }

    /// Gradient of the harmonic continuation at `(x, y)`.
    pub fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        // d/dx Re(zⁿ) = Re(n zⁿ⁻¹), d/dy Re(zⁿ) = -Im(n zⁿ⁻¹)
        // d/dx Im(zⁿ) = Im(n zⁿ⁻¹), d/dy Im(zⁿ) =  Re(n zⁿ⁻¹)
        let z = Complex64::new(x, y);
        let terms = self.fourier_cos.len().max(self.fourier_sin.len());
        let mut power = Complex64::new(1.0, 0.0); // z^(n-1)
        let (mut gx, mut gy) = (0.0, 0.0);
        for k in 0..terms {
            let n = (k + 1) as f64;
            let d = power * n;
            let a = self.fourier_cos.get(k).copied().unwrap_or(0.0);
            let b = self.fourier_sin.get(k).copied().unwrap_or(0.0);
            gx += a * d.re + b * d.im;
            gy += -a * d.im + b * d.re;
            power *= z;
        }
        (gx, gy)
    }
}
