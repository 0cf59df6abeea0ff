#include "tridspec/potentials.hpp"

#include <cmath>

#include "tridspec/specfun.hpp"

namespace tridspec::potentials {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

PotentialMatrixElements matrix_elements(const systems::SystemClass& c, InitialValues iv) {
  const auto s = systems::coefficient_stream(c);
  const double lam = systems::scale_lambda(c);
  const double half = 0.5 * lam * lam;
  return {half * (iv.beta / iv.alpha - s.a(0)), half * (1.0 / iv.alpha - s.b(0))};
}

double induced_potential(const systems::SystemClass& c, InitialValues iv, double x,
                         PotentialMode mode, int order, bool* quadrature_fallback) {
  if (quadrature_fallback) *quadrature_fallback = false;
  const auto [v00, v01] = matrix_elements(c, iv);
  double f0 = 0.0, f1 = 0.0;
  const bool has_exact = systems::quad_basis_info(c).has_exact_f;
  if (mode == PotentialMode::kExact && has_exact) {
    f0 = systems::exact_basis_integral(c, 0);
    f1 = systems::exact_basis_integral(c, 1);
  } else {
    if (mode == PotentialMode::kExact && quadrature_fallback) *quadrature_fallback = true;
    const auto bi = quadrature::basis_integrals(c, 1, order);
    f0 = bi.approx[0];
    f1 = bi.approx[1];
  }
  const auto phi = systems::basis_values(c, 1, x);
  return v00 * f0 * phi[0] + v01 * (f0 * phi[1] + f1 * phi[0]);
}

double printed_closed_form(const systems::SystemClass& c, InitialValues iv, double x) {
  using namespace systems;
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        const double al = iv.alpha, be = iv.beta;
        if constexpr (std::is_same_v<T, Free1DEven>) {
          const double t = s.lambda * x;
          const double lam2 = s.lambda * s.lambda;
          return lam2 / std::sqrt(2.0) * std::exp(-0.5 * t * t) *
                 (be / al - 0.5 + (1.0 + std::sqrt(2.0) / al) * t * t);
        } else if constexpr (std::is_same_v<T, Free1DOdd>) {
          const double t = s.lambda * x;
          const double lam2 = s.lambda * s.lambda;
          return 2.0 * lam2 / std::sqrt(kPi) * t * std::exp(-0.5 * t * t) *
                 (be / al - 1.5 + (1.0 + 1.0 / (al * std::sqrt(3.0))) * (t * t - 1.0));
        } else if constexpr (std::is_same_v<T, Free3D>) {
          const double lam2 = s.lambda * s.lambda;
          const double t = s.lambda * x;
          const double p = s.l + 1.5;
          const double pref =
              lam2 *
              std::exp(0.5 * s.l * std::log(2.0) + specfun::log_gamma(0.5 * s.l + 1.0) -
                       specfun::log_gamma(p)) *
              std::pow(t, s.l + 1) * std::exp(-0.5 * t * t);
          return pref * (be / al - p + (s.l + 1.0 - t * t) * ((1.0 / al) / std::sqrt(p) - 1.0));
        } else if constexpr (std::is_same_v<T, Oscillator3D>) {
          const double lam2 = s.lambda * s.lambda;
          const double t = s.lambda * x;
          const double p = s.l + 1.5;
          const double c2 = s.kappa * s.kappa / (lam2 * lam2);
          const double pref =
              lam2 *
              std::exp(0.5 * s.l * std::log(2.0) + specfun::log_gamma(0.5 * s.l + 1.0) -
                       specfun::log_gamma(p)) *
              std::pow(t, s.l + 1) * std::exp(-0.5 * t * t);
          return pref * (be / al - p * (c2 + 1.0) +
                         (c2 - 1.0 + (1.0 / al) / std::sqrt(p)) * (s.l + 1.0 - t * t));
        } else if constexpr (std::is_same_v<T, Morse1D>) {
          const double lam2 = s.lambda * s.lambda;
          const double y = std::exp(-s.lambda * x);
          const double pref = std::exp(0.5 * s.nu * std::log(2.0) + specfun::log_gamma(0.5 * s.nu) -
                                       specfun::log_gamma(s.nu)) *
                              0.5 * lam2 * std::pow(y, 0.5 * s.nu) * std::exp(-0.5 * y);
          return pref * (be / al - 0.5 * s.nu * (0.5 * s.nu + s.mu + 1.0) +
                         ((1.0 / al) / std::sqrt(s.nu) + 0.5 * (s.nu + s.mu + 1.0)) * (s.nu - y));
        } else {
          throw DomainError("printed_closed_form: no printed formula for ChebyshevTest");
        }
      },
      c);
}

double total_potential(const systems::SystemClass& c, InitialValues iv, double x) {
  const bool has_exact = systems::quad_basis_info(c).has_exact_f;
  const double induced = induced_potential(
      c, iv, x, has_exact ? PotentialMode::kExact : PotentialMode::kQuadrature);
  return systems::reference_potential(c, x) + induced;
}

Discrepancy closed_form_discrepancy(const systems::SystemClass& c, InitialValues iv,
                                    const std::vector<double>& grid) {
  Discrepancy d;
  d.expected_mismatch = std::holds_alternative<systems::Free1DOdd>(c);
  d.equation = std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        (void)s;
        if constexpr (std::is_same_v<T, systems::Free1DEven>) return "even-1d";
        else if constexpr (std::is_same_v<T, systems::Free1DOdd>) return "odd-1d";
        else if constexpr (std::is_same_v<T, systems::Free3D>) return "free-3d";
        else if constexpr (std::is_same_v<T, systems::Oscillator3D>) return "oscillator-3d";
        else if constexpr (std::is_same_v<T, systems::Morse1D>) return "morse-1d";
        else return "none";
      },
      c);
  double max_abs = 0.0;
  for (double x : grid) {
    const double a = induced_potential(c, iv, x, PotentialMode::kExact);
    const double b = printed_closed_form(c, iv, x);
    max_abs = std::max(max_abs, std::abs(a - b));
  }
  d.max_abs_difference = max_abs;
  return d;
}

}  // namespace tridspec::potentials
