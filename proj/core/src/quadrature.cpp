#include "tridspec/quadrature.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace tridspec::quadrature {

namespace {

std::shared_mutex g_cache_mutex;
std::map<std::pair<std::string, int>, GaussRule> g_cache;

std::string cache_key(const systems::SystemClass& c) {
  // Class name plus the parameters that define the quadrature family.
  std::string key = systems::class_name(c);
  key += ':';
  key += std::to_string(systems::quad_basis_info(c).nu);
  return key;
}

GaussRule build_rule(const systems::SystemClass& c, int order) {
  tridiag::TridiagonalMatrix j;
  j.diag.resize(order);
  j.offdiag.resize(order > 0 ? order - 1 : 0);
  for (int n = 0; n < order; ++n) j.diag[n] = systems::jacobi_diag(c, n);
  for (int n = 0; n + 1 < order; ++n) j.offdiag[n] = systems::jacobi_offdiag(c, n);
  GaussRule rule;
  rule.order = order;
  rule.nodes = tridiag::eigenvalues(j);
  rule.weights = tridiag::first_components_by_deletion(j);
  return rule;
}

}  // namespace

GaussRule gauss_rule(const systems::SystemClass& c, int order) {
  if (order < 1) throw DomainError("gauss_rule: order >= 1 required");
  const auto key = std::make_pair(cache_key(c), order);
  {
    std::shared_lock lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  GaussRule rule = build_rule(c, order);
  std::unique_lock lock(g_cache_mutex);
  return g_cache.emplace(key, std::move(rule)).first->second;
}

double integrate_configuration(const systems::SystemClass& c, const GaussRule& rule,
                               const std::function<double(double)>& f) {
  const auto info = systems::quad_basis_info(c);
  double acc = 0.0;
  for (int k = 0; k < rule.order; ++k) {
    const double y = rule.nodes[k];
    const double x = systems::x_of_y(c, y);
    acc += rule.weights[k] * f(x) / (systems::xi_weight(c, y) * systems::yprime(c, y));
  }
  return info.domain_factor * acc;
}

BasisIntegrals basis_integrals(const systems::SystemClass& c, int m_max, int order) {
  if (m_max < 1) throw DomainError("basis_integrals: m_max >= 1 required");
  const auto info = systems::quad_basis_info(c);
  const GaussRule rule = gauss_rule(c, order);
  BasisIntegrals out;
  out.order = order;
  out.approx.resize(static_cast<size_t>(m_max) + 1, 0.0);
  for (int k = 0; k < order; ++k) {
    const double y = rule.nodes[k];
    const double x = systems::x_of_y(c, y);
    const auto phi = systems::basis_values(c, m_max, x);
    const double factor =
        rule.weights[k] / (systems::xi_weight(c, y) * systems::yprime(c, y));
    for (int m = 0; m <= m_max; ++m) out.approx[m] += factor * phi[m];
  }
  for (auto& g : out.approx) g *= info.domain_factor;
  if (info.has_exact_f) {
    std::vector<double> exact(static_cast<size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) exact[m] = systems::exact_basis_integral(c, m);
    out.exact = std::move(exact);
  }
  return out;
}

}  // namespace tridspec::quadrature
