#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tridspec/errors.hpp"

namespace tridspec::recursion {

/// Provider of recursion coefficients (a_n, b_n) plus the reference initial
/// values derived from them. b_n must never vanish.
struct CoefficientStream {
  std::function<double(int)> a;
  std::function<double(int)> b;
  double alpha_hat = 0.0;  ///< 1 / b_0
  double beta_hat = 0.0;   ///< a_0 / b_0
  std::optional<std::pair<double, double>> limit_hint;  ///< (a_inf, b_inf) when known
};

inline CoefficientStream make_stream(std::function<double(int)> a,
                                     std::function<double(int)> b,
                                     std::optional<std::pair<double, double>> limit_hint = {}) {
  const double b0 = b(0);
  if (b0 == 0.0 || !std::isfinite(b0))
    throw InvariantError("coefficient stream requires b_0 != 0");
  CoefficientStream s;
  s.alpha_hat = 1.0 / b0;
  s.beta_hat = a(0) / b0;
  s.a = std::move(a);
  s.b = std::move(b);
  s.limit_hint = limit_hint;
  return s;
}

struct InitialValues {
  double alpha;
  double beta;
  InitialValues(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (alpha == 0.0 || !std::isfinite(alpha) || !std::isfinite(beta))
      throw InvariantError("initial values require finite alpha != 0, finite beta");
  }
};

inline InitialValues reference_init(const CoefficientStream& s) {
  return InitialValues(s.alpha_hat, s.beta_hat);
}

template <class Scalar>
struct SpectralSequence {
  Scalar z{};
  std::vector<Scalar> values;
};

namespace detail {
constexpr double kOverflowGuard = 1e280;
}

/// Steps any solution of the shared n >= 1 recursion rows,
///   p_{n+1} = ((z - a_n) p_n - c_{n-1} p_{n-1}) / b_n,
/// where c_0 may differ from b_0 (row-replaced families) and c_n = b_n for
/// n >= 1. Seeds (p_0, p_1) select the family: first kind, second kind, or
/// the row-replaced orthonormal family.
template <class Scalar>
class ThreeTermWalker {
 public:
  ThreeTermWalker(const CoefficientStream& s, Scalar z, Scalar p0, Scalar p1, double c0)
      : stream_(&s), z_(z), pm_(p0), pc_(p1), cprev_(c0), n_(1) {}

  Scalar current() const { return pc_; }   ///< p_n at the current index
  Scalar previous() const { return pm_; }  ///< p_{n-1}
  int index() const { return n_; }

  /// Advance to p_{n+1}; throws on b_n = 0 or magnitude overflow.
  void advance() {
    const double bn = stream_->b(n_);
    if (bn == 0.0) throw InvariantError("coefficient stream has b_n = 0 at n = " + std::to_string(n_));
    const Scalar p2 = ((z_ - stream_->a(n_)) * pc_ - cprev_ * pm_) / bn;
    if (std::abs(p2) > detail::kOverflowGuard)
      throw ConvergenceError("three-term recursion magnitude exceeded 1e280 at n = " +
                             std::to_string(n_ + 1));
    pm_ = pc_;
    pc_ = p2;
    cprev_ = bn;
    ++n_;
  }

 private:
  const CoefficientStream* stream_;
  Scalar z_;
  Scalar pm_, pc_;
  double cprev_;
  int n_;
};

/// Co-recursive first-kind walker: P_0 = 1, P_1 = alpha z - beta, row 1 uses b_0.
template <class Scalar>
ThreeTermWalker<Scalar> walk_p(const CoefficientStream& s, InitialValues iv, Scalar z) {
  return ThreeTermWalker<Scalar>(s, z, Scalar(1.0), Scalar(iv.alpha) * z - Scalar(iv.beta), s.b(0));
}

/// Second-kind walker: Q_0 = 0, Q_1 = 1/b_0.
template <class Scalar>
ThreeTermWalker<Scalar> walk_q(const CoefficientStream& s, Scalar z) {
  return ThreeTermWalker<Scalar>(s, z, Scalar(0.0), Scalar(1.0 / s.b(0)), s.b(0));
}

/// Orthonormal family of the row-replaced matrix (diag_0 = beta/alpha,
/// offdiag_0 = 1/alpha): same seeds as walk_p but row 1 carries 1/alpha.
template <class Scalar>
ThreeTermWalker<Scalar> walk_row_replaced(const CoefficientStream& s, InitialValues iv, Scalar z) {
  return ThreeTermWalker<Scalar>(s, z, Scalar(1.0), Scalar(iv.alpha) * z - Scalar(iv.beta),
                                 1.0 / iv.alpha);
}

/// P_0..P_{n_max} at fixed z.
template <class Scalar>
SpectralSequence<Scalar> eval_p(const CoefficientStream& s, InitialValues iv, int n_max, Scalar z) {
  if (n_max < 1) throw DomainError("eval_p: n_max >= 1 required");
  SpectralSequence<Scalar> r;
  r.z = z;
  r.values.resize(static_cast<size_t>(n_max) + 1);
  auto w = walk_p(s, iv, z);
  r.values[0] = Scalar(1.0);
  r.values[1] = w.current();
  for (int n = 1; n < n_max; ++n) {
    w.advance();
    r.values[static_cast<size_t>(n) + 1] = w.current();
  }
  return r;
}

/// Q_0..Q_{n_max} at fixed z.
template <class Scalar>
SpectralSequence<Scalar> eval_q(const CoefficientStream& s, int n_max, Scalar z) {
  if (n_max < 1) throw DomainError("eval_q: n_max >= 1 required");
  SpectralSequence<Scalar> r;
  r.z = z;
  r.values.resize(static_cast<size_t>(n_max) + 1);
  auto w = walk_q(s, z);
  r.values[0] = Scalar(0.0);
  r.values[1] = w.current();
  for (int n = 1; n < n_max; ++n) {
    w.advance();
    r.values[static_cast<size_t>(n) + 1] = w.current();
  }
  return r;
}

/// Wronskian of the reference and modified first-kind families:
/// (1 - alpha b_0) z + beta b_0 - a_0, independent of n.
template <class Scalar>
Scalar wronskian(const CoefficientStream& s, InitialValues iv, Scalar z) {
  const double b0 = s.b(0);
  return (1.0 - iv.alpha * b0) * z + Scalar(iv.beta * b0 - s.a(0));
}

}  // namespace tridspec::recursion
