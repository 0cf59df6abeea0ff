#include "tridspec/greens.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tridspec::greens {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::pair<double, double> tail_parameters(const CoefficientStream& s, int depth) {
  if (s.limit_hint) return *s.limit_hint;
  return {s.a(depth), s.b(depth)};
}

// Continued fraction from level `from` down to level 1 (exclusive of the
// level-0 assembly): returns D_1 = z - a_1 - b_1^2 / (... - T).
Complex tail_denominator(const CoefficientStream& s, Complex z, int depth) {
  const auto [ai, bi] = tail_parameters(s, depth);
  Complex d = z - s.a(depth) - terminator(ai, bi, z);
  for (int n = depth - 1; n >= 1; --n) {
    if (std::abs(d) == 0.0)
      throw PoleError("continued fraction hit a zero denominator at level " + std::to_string(n + 1));
    const double bn = s.b(n);
    d = z - s.a(n) - bn * bn / d;
  }
  return d;
}

}  // namespace

Complex terminator(double a_inf, double b_inf, Complex z) {
  if (b_inf == 0.0) throw InvariantError("terminator: b_inf must be nonzero");
  const Complex disc = (z - a_inf) * (z - a_inf) - 4.0 * b_inf * b_inf;
  const Complex root = std::sqrt(disc);
  const Complex t1 = 0.5 * (z - a_inf) + 0.5 * root;
  const Complex t2 = 0.5 * (z - a_inf) - 0.5 * root;
  const double m1 = std::abs(t1), m2 = std::abs(t2);
  const double tie = 1e-12 * std::max(m1, m2);
  if (m1 < m2 - tie) return t1;
  if (m2 < m1 - tie) return t2;
  // On the support both roots have |T| = |b_inf|; keep the branch that makes
  // every CF level preserve the sign of Im.
  if (z.imag() >= 0.0) return (t1.imag() <= 0.0) ? t1 : t2;
  return (t1.imag() >= 0.0) ? t1 : t2;
}

Complex green_reference(const CoefficientStream& s, Complex z, int depth) {
  if (depth < 1) throw DomainError("green_reference: depth >= 1 required");
  const Complex d1 = tail_denominator(s, z, depth);
  if (std::abs(d1) == 0.0) throw PoleError("continued fraction hit a zero denominator at level 1");
  const double b0 = s.b(0);
  const Complex d0 = z - s.a(0) - b0 * b0 / d1;
  if (std::abs(d0) == 0.0) throw PoleError("continued fraction hit a zero denominator at level 0");
  return -1.0 / d0;
}

Complex green_row_replaced(const CoefficientStream& s, InitialValues iv, Complex z, int depth) {
  if (depth < 1) throw DomainError("green_row_replaced: depth >= 1 required");
  const Complex d1 = tail_denominator(s, z, depth);
  const Complex d0 = z - iv.beta / iv.alpha - (1.0 / (iv.alpha * iv.alpha)) / d1;
  if (std::abs(d0) == 0.0) throw PoleError("row-replaced continued fraction hit a pole");
  return -1.0 / d0;
}

Complex green_modified(const CoefficientStream& s, InitialValues iv, Complex z, int depth) {
  if (depth < 1) throw DomainError("green_modified: depth >= 1 required");
  const double b0 = s.b(0);
  const Complex d1 = tail_denominator(s, z, depth);

  // Path A: Wronskian transform of the reference function.
  const Complex gref = -1.0 / (z - s.a(0) - b0 * b0 / d1);
  const Complex w = recursion::wronskian(s, iv, z);
  const Complex denomA = 1.0 + w * gref;
  if (std::abs(denomA) == 0.0) throw PoleError("green_modified: 1 + W G vanished (mass point)");
  const Complex ga = gref / denomA;

  // Path B: alternative continued fraction, a_0 -> beta/alpha, b_0^2 -> b_0/alpha.
  const Complex d0 = z - iv.beta / iv.alpha - (b0 / iv.alpha) / d1;
  if (std::abs(d0) == 0.0) throw PoleError("green_modified: alternative fraction hit a pole");
  const Complex gb = (-1.0 / d0) / (iv.alpha * b0);

  const double scale = std::max(std::abs(ga), std::abs(gb));
  if (std::abs(ga - gb) > 1e-8 * std::max(1e-300, scale))
    throw ConvergenceError("green_modified: path A/B disagreement (pole proximity)");
  return gb;
}

double weight_from_green(Complex g) { return g.imag() / kPi; }

double weight_modified_analytic(const CoefficientStream& s, InitialValues iv, double z,
                                double rho_ref, int depth, double eps) {
  const Complex zeps(z, eps);
  const Complex gref = green_reference(s, zeps, depth);
  const Complex w = recursion::wronskian(s, iv, zeps);
  const double denom = std::norm(1.0 + w * gref);
  if (denom == 0.0) throw PoleError("weight_modified: |1 + W G|^2 vanished");
  const double rho = rho_ref / denom;
  if (rho < 0.0)
    throw InvariantError("weight_modified: negative weight (invalid (alpha,beta) region)");
  return rho;
}

double weight_modified_numeric(const CoefficientStream& s, InitialValues iv, double z, int depth,
                               double eps) {
  const Complex g = green_modified(s, iv, Complex(z, eps), depth);
  const double rho = weight_from_green(g);
  if (rho < -1e-12)
    throw InvariantError("weight_modified: negative weight (invalid (alpha,beta) region)");
  return rho;
}

double rho_reference_depth_averaged(const CoefficientStream& s, double z, int base_depth,
                                    double eps, int samples) {
  if (base_depth < 8) throw DomainError("rho_reference_depth_averaged: depth too small");
  const double zeff = std::max(std::abs(z), 1e-3);
  const int window = std::max(8, static_cast<int>(std::ceil(2.0 * kPi * std::sqrt(base_depth / zeff))));
  const int step = std::max(1, window / std::max(2, samples));
  double acc = 0.0;
  int cnt = 0;
  for (int d = base_depth; d <= base_depth + window; d += step) {
    acc += green_reference(s, Complex(z, eps), d).imag();
    ++cnt;
  }
  return acc / cnt / kPi;
}

MassPointResult mass_point_weight(const CoefficientStream& s, InitialValues iv, double z_point,
                                  int n_cap, MassPointFamily family) {
  const double b0 = s.b(0);
  auto walker = (family == MassPointFamily::kRowReplaced)
                    ? recursion::walk_row_replaced<double>(s, iv, z_point)
                    : recursion::walk_p<double>(s, iv, z_point);
  const double first_term = (family == MassPointFamily::kCoRecursive) ? iv.alpha * b0 : 1.0;

  double sum = first_term;  // P_0 = 1 contribution (kernel-normalized)
  double min_term = std::numeric_limits<double>::infinity();
  double sum_at_min = 0.0;
  int n_min = -1;
  {
    const double t1 = walker.current() * walker.current();
    sum += t1;
    min_term = t1;
    sum_at_min = sum;
    n_min = 1;
  }
  for (int n = 2; n <= n_cap; ++n) {
    try {
      walker.advance();
    } catch (const ConvergenceError&) {
      break;  // magnitude guard tripped: contamination blow-up, plateau (if any) is behind us
    }
    const double p = walker.current();
    const double t = p * p;
    sum += t;
    if (t < min_term) {
      min_term = t;
      sum_at_min = sum;
      n_min = n;
    }
    if (n > n_min + 4 && t > 1e8 * min_term) break;
  }
  if (!(sum_at_min > 0.0))
    throw ConvergenceError("mass_point_weight: kernel sum did not stay positive");
  const double quality = min_term / sum_at_min;
  if (!(quality < 1e-8))
    throw ConvergenceError(
        "mass_point_weight: no convergence plateau; z is not an isolated mass point");
  return {1.0 / sum_at_min, n_min, quality};
}

}  // namespace tridspec::greens
