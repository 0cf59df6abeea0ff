#include "tridspec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tridspec::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// Lanczos g = 7, n = 9 coefficient set (double-precision classic).
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_real_nonpositive_integer(Complex z) {
  if (z.imag() != 0.0) return false;
  const double x = z.real();
  return x <= 0.0 && std::abs(x - std::round(x)) < 1e-14 * std::max(1.0, std::abs(x));
}

Complex log_gamma_core(Complex z) {
  // Requires Re z >= 0.5.
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + 7.5;
  return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("log_gamma: non-finite argument");
  if (is_real_nonpositive_integer(z))
    throw PoleError("log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return log_gamma_core(z);
  // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
  // Keep the branch continuous by unwinding with floor(Re z).
  const Complex lg = std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_core(1.0 - z);
  if (z.imag() == 0.0) return Complex(lg.real(), lg.imag());
  return lg;
}

double log_gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("log_gamma: non-finite argument");
  if (!(x > 0.0)) throw DomainError("log_gamma(double): requires x > 0");
  return log_gamma(Complex(x, 0.0)).real();
}

double abs_gamma_sq(Complex z) { return std::exp(2.0 * log_gamma(z).real()); }

double pochhammer(double c, int n) {
  if (n < 0) throw DomainError("pochhammer: n < 0");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= c + k;
  return p;
}

double laguerre(int n, double nu, double y) {
  if (n < 0) throw DomainError("laguerre: n < 0");
  if (!(nu > -1.0)) throw DomainError("laguerre: requires nu > -1");
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 1.0 + nu - y;
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0 + nu - y) * p1 - (k + nu) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double hermite(int n, double y) {
  if (n < 0) throw DomainError("hermite: n < 0");
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 2.0 * y;
  for (int k = 1; k < n; ++k) {
    const double p2 = 2.0 * y * p1 - 2.0 * k * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

std::vector<double> hermite_functions(int m_max, double t) {
  if (m_max < 0) throw DomainError("hermite_functions: m_max < 0");
  std::vector<double> w(static_cast<size_t>(m_max) + 1);
  w[0] = std::exp(-0.5 * t * t) / std::pow(kPi, 0.25);
  if (m_max == 0) return w;
  w[1] = std::sqrt(2.0) * t * w[0];
  for (int m = 1; m < m_max; ++m)
    w[m + 1] = (t * w[m] - std::sqrt(0.5 * m) * w[m - 1]) / std::sqrt(0.5 * (m + 1));
  return w;
}

std::vector<double> laguerre_functions(int n_max, double nu, double y) {
  if (n_max < 0) throw DomainError("laguerre_functions: n_max < 0");
  if (!(nu > -1.0)) throw DomainError("laguerre_functions: requires nu > -1");
  if (!(y >= 0.0)) throw DomainError("laguerre_functions: requires y >= 0");
  std::vector<double> chi(static_cast<size_t>(n_max) + 1);
  // chi_n = pref * lhat_n with pref = y^{nu/2} e^{-y/2} / sqrt(Gamma(nu+1)),
  // lhat_n = sqrt(n! Gamma(nu+1) / Gamma(n+nu+1)) L_n^nu(y).
  double pref;
  if (y == 0.0) {
    pref = (nu > 0.0) ? 0.0 : (nu == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
    if (!std::isfinite(pref)) throw DomainError("laguerre_functions: y = 0 with nu < 0");
    pref /= std::exp(0.5 * log_gamma(nu + 1.0));
  } else {
    pref = std::exp(0.5 * nu * std::log(y) - 0.5 * y - 0.5 * log_gamma(nu + 1.0));
  }
  double l0 = 1.0;
  chi[0] = pref * l0;
  if (n_max == 0) return chi;
  double l1 = (nu + 1.0 - y) / std::sqrt(nu + 1.0);
  chi[1] = pref * l1;
  for (int n = 1; n < n_max; ++n) {
    const double l2 = ((2.0 * n + nu + 1.0 - y) * l1 - std::sqrt(n * (n + nu)) * l0) /
                      std::sqrt((n + 1.0) * (n + 1.0 + nu));
    chi[n + 1] = pref * l2;
    l0 = l1;
    l1 = l2;
  }
  return chi;
}

Complex hyp_terminating(const std::vector<Complex>& numerators,
                        const std::vector<Complex>& denominators,
                        Complex arg, int n) {
  if (n < 0) throw DomainError("hyp_terminating: n < 0");
  bool terminates = false;
  for (const auto& a : numerators)
    if (std::abs(a + static_cast<double>(n)) <= 1e-9 * (1.0 + std::abs(a))) terminates = true;
  if (!terminates)
    throw InvariantError("hyp_terminating: no numerator parameter equals -n");
  for (const auto& b : denominators) {
    if (b.imag() != 0.0) continue;
    const double br = b.real();
    const double r = std::round(br);
    if (std::abs(br - r) < 1e-12 && r <= 0.0 && -r <= n - 1)
      throw PoleError("hyp_terminating: denominator parameter pole before termination");
  }
  Complex sum = 1.0, comp = 0.0, term = 1.0;
  for (int m = 0; m < n; ++m) {
    Complex ratio = arg / (m + 1.0);
    for (const auto& a : numerators) ratio *= a + static_cast<double>(m);
    for (const auto& b : denominators) ratio /= b + static_cast<double>(m);
    term *= ratio;
    // Kahan step.
    const Complex yk = term - comp;
    const Complex tk = sum + yk;
    comp = (tk - sum) - yk;
    sum = tk;
  }
  return sum;
}

double hyp_terminating(const std::vector<double>& numerators,
                       const std::vector<double>& denominators,
                       double arg, int n) {
  std::vector<Complex> a(numerators.begin(), numerators.end());
  std::vector<Complex> b(denominators.begin(), denominators.end());
  return hyp_terminating(a, b, Complex(arg, 0.0), n).real();
}

double bessel_j_half(int l, double x) {
  if (l < 0) throw DomainError("bessel_j_half: l < 0");
  if (!(x > 0.0)) throw DomainError("bessel_j_half: requires x > 0");
  const double pref = std::sqrt(2.0 / (kPi * x));
  const double j0 = pref * std::sin(x);
  if (l == 0) return j0;
  const double j1 = pref * (std::sin(x) / x - std::cos(x));
  if (l == 1) return j1;
  if (x >= static_cast<double>(l)) {
    // Upward recurrence J_{v+1} = (2v/x) J_v - J_{v-1}, v = l - 1/2 stepping.
    double jm = j0, jc = j1;
    for (int k = 1; k < l; ++k) {
      const double v = k + 0.5;
      const double jn = (2.0 * v / x) * jc - jm;
      jm = jc;
      jc = jn;
    }
    return jc;
  }
  // Miller downward recurrence, normalized against the closed J_{1/2}.
  const int start = l + static_cast<int>(std::ceil(std::sqrt(40.0 * (l + 1)))) + 20;
  double jp = 0.0;     // J_{k+3/2}
  double jc = 1e-290;  // J_{k+1/2}
  double jl = 0.0;
  for (int k = start; k >= 1; --k) {
    const double v = k + 0.5;
    const double jm = (2.0 * v / x) * jc - jp;  // J_{k-1/2}
    jp = jc;
    jc = jm;
    if (k - 1 == l) jl = jc;
    if (std::abs(jc) > 1e280) {  // rescale to avoid overflow
      jc *= 1e-280;
      jp *= 1e-280;
      jl *= 1e-280;
    }
  }
  // jc now corresponds to order 1/2.
  return jl * (j0 / jc);
}

}  // namespace tridspec::specfun
