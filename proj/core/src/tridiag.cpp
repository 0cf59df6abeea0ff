#include "tridspec/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace tridspec::tridiag {

namespace {

void validate(const TridiagonalMatrix& m) {
  if (m.diag.empty()) throw DomainError("tridiagonal matrix must have N >= 1");
  if (m.offdiag.size() + 1 != m.diag.size())
    throw DomainError("tridiagonal matrix offdiag must have length N-1");
  for (double d : m.diag)
    if (!std::isfinite(d)) throw DomainError("tridiagonal matrix has non-finite diagonal entry");
  for (double e : m.offdiag)
    if (!std::isfinite(e)) throw DomainError("tridiagonal matrix has non-finite off-diagonal entry");
}

struct SturmContext {
  const double* d;
  const double* e2;  // squared off-diagonals
  int n;
  double pivmin;
};

int sturm_count(const SturmContext& c, double x) {
  int count = 0;
  double q = c.d[0] - x;
  if (std::abs(q) < c.pivmin) q = -c.pivmin;
  if (q < 0.0) ++count;
  for (int i = 1; i < c.n; ++i) {
    q = c.d[i] - x - c.e2[i - 1] / q;
    if (std::abs(q) < c.pivmin) q = -c.pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

struct Workspace {
  std::vector<double> e2;
  SturmContext ctx;
  double lo, hi, tol;

  explicit Workspace(const TridiagonalMatrix& m) {
    validate(m);
    const int n = static_cast<int>(m.diag.size());
    e2.resize(m.offdiag.size());
    for (size_t i = 0; i < m.offdiag.size(); ++i) e2[i] = m.offdiag[i] * m.offdiag[i];
    double norm = 0.0, maxe2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = std::abs(m.diag[i]);
      if (i > 0) r += std::abs(m.offdiag[i - 1]);
      if (i + 1 < n) r += std::abs(m.offdiag[i]);
      norm = std::max(norm, r);
    }
    for (double v : e2) maxe2 = std::max(maxe2, v);
    const double safemin = std::numeric_limits<double>::min();
    ctx = SturmContext{m.diag.data(), e2.data(), n,
                       std::max(safemin, safemin * maxe2)};
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (int i = 0; i < n; ++i) {
      double r = (i > 0 ? std::abs(m.offdiag[i - 1]) : 0.0) +
                 (i + 1 < n ? std::abs(m.offdiag[i]) : 0.0);
      lo = std::min(lo, m.diag[i] - r);
      hi = std::max(hi, m.diag[i] + r);
    }
    const double span = std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    lo -= 1e-12 * span;
    hi += 1e-12 * span;
    tol = 1e-13 * std::max(1.0, norm);
  }
};

// Resolve all eigenvalue indices in [klo, khi) within (lo, hi] by interval
// subdivision on Sturm counts.
void bisect_range(const Workspace& w, double lo, double hi, int klo, int khi,
                  std::vector<double>& out) {
  struct Task {
    double lo, hi;
    int klo, khi;
  };
  std::vector<Task> stack{{lo, hi, klo, khi}};
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.khi <= t.klo) continue;
    if (t.hi - t.lo <= w.tol) {
      const double mid = 0.5 * (t.lo + t.hi);
      for (int k = t.klo; k < t.khi; ++k) out[k] = mid;
      continue;
    }
    const double mid = 0.5 * (t.lo + t.hi);
    int c = sturm_count(w.ctx, mid);
    c = std::clamp(c, t.klo, t.khi);
    if (c > t.klo) stack.push_back({t.lo, mid, t.klo, c});
    if (c < t.khi) stack.push_back({mid, t.hi, c, t.khi});
  }
}

}  // namespace

double gershgorin_norm(const TridiagonalMatrix& m) {
  Workspace w(m);
  return std::max(std::abs(w.lo), std::abs(w.hi));
}

int count_below(const TridiagonalMatrix& m, double x) {
  Workspace w(m);
  return sturm_count(w.ctx, x);
}

double eigenvalue_at(const TridiagonalMatrix& m, int k) {
  Workspace w(m);
  const int n = w.ctx.n;
  if (k < 0 || k >= n) throw DomainError("eigenvalue_at: index out of range");
  double lo = w.lo, hi = w.hi;
  while (hi - lo > w.tol) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(w.ctx, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> eigenvalues(const TridiagonalMatrix& m) {
  Workspace w(m);
  const int n = w.ctx.n;
  std::vector<double> out(n);
  const unsigned hw = std::thread::hardware_concurrency();
  const int nthreads = (n >= 512 && hw > 1) ? static_cast<int>(std::min<unsigned>(hw, 8)) : 1;
  if (nthreads == 1) {
    bisect_range(w, w.lo, w.hi, 0, n, out);
  } else {
    // Split the index range; locate chunk boundaries first, then resolve
    // chunks concurrently. Deterministic regardless of schedule.
    std::vector<int> cut(nthreads + 1);
    std::vector<double> cutx(nthreads + 1);
    cut[0] = 0;
    cutx[0] = w.lo;
    cut[nthreads] = n;
    cutx[nthreads] = w.hi;
    for (int t = 1; t < nthreads; ++t) {
      cut[t] = n * t / nthreads;
      double lo = cutx[t - 1], hi = w.hi;
      // find x with count(x) == cut[t] (any point separating the chunks)
      for (int it = 0; it < 200 && hi - lo > w.tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(w.ctx, mid) >= cut[t])
          hi = mid;
        else
          lo = mid;
      }
      cutx[t] = hi;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        bisect_range(w, (t == 0 ? w.lo : cutx[t]), cutx[t + 1], cut[t], cut[t + 1], out);
      });
    for (auto& th : pool) th.join();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> eigenvalues_in(const TridiagonalMatrix& m, double lo, double hi) {
  Workspace w(m);
  const int klo = sturm_count(w.ctx, lo);
  const int khi = sturm_count(w.ctx, hi);
  std::vector<double> out(w.ctx.n);
  if (khi <= klo) return {};
  bisect_range(w, std::max(lo, w.lo), std::min(hi, w.hi), klo, khi, out);
  std::vector<double> r(out.begin() + klo, out.begin() + khi);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<double> eigenvalues_index_range(const TridiagonalMatrix& m, int k_lo, int k_hi) {
  Workspace w(m);
  const int n = w.ctx.n;
  if (k_lo < 0 || k_hi >= n || k_lo > k_hi)
    throw DomainError("eigenvalues_index_range: bad index range");
  std::vector<double> out(n);
  bisect_range(w, w.lo, w.hi, k_lo, k_hi + 1, out);
  std::vector<double> r(out.begin() + k_lo, out.begin() + k_hi + 1);
  std::sort(r.begin(), r.end());
  return r;
}

EigenDecomposition eigen_with_first_components(const TridiagonalMatrix& m) {
  validate(m);
  const int n = static_cast<int>(m.diag.size());
  std::vector<double> d = m.diag;
  std::vector<double> e(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = m.offdiag[i];
  // First row of the accumulated rotations is all we need.
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;

  // Implicit-shift QL (EISPACK tql2 style, accumulating only row 0).
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int mIdx;
    do {
      for (mIdx = l; mIdx < n - 1; ++mIdx) {
        const double dd = std::abs(d[mIdx]) + std::abs(d[mIdx + 1]);
        if (std::abs(e[mIdx]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (mIdx != l) {
        if (++iter == 50) throw ConvergenceError("QL iteration failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[mIdx] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = mIdx - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[mIdx] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && mIdx - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[mIdx] = 0.0;
      }
    } while (mIdx != l);
  }
  // Sort ascending, carrying first components along.
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
  EigenDecomposition out;
  out.values.resize(n);
  out.first_components.resize(n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = d[idx[i]];
    out.first_components[i] = z[idx[i]];
  }
  return out;
}

std::vector<double> first_components_by_deletion(const TridiagonalMatrix& m) {
  validate(m);
  const int n = static_cast<int>(m.diag.size());
  if (n == 1) return {1.0};
  const std::vector<double> tau = eigenvalues(m);
  TridiagonalMatrix minor;
  minor.diag.assign(m.diag.begin() + 1, m.diag.end());
  minor.offdiag.assign(m.offdiag.begin() + 1, m.offdiag.end());
  const std::vector<double> tau_minor = eigenvalues(minor);

  const double scale = std::max(1.0, gershgorin_norm(m));
  for (int k = 0; k + 1 < n; ++k)
    if (std::abs(tau[k + 1] - tau[k]) < 1e-10 * scale)
      throw ConvergenceError("first_components_by_deletion: (nearly) degenerate eigenvalues");

  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) {
    double logw = 0.0;
    int sign = 1;
    for (int j = 0; j < n - 1; ++j) {
      const double t = tau[k] - tau_minor[j];
      logw += std::log(std::abs(t));
      if (t < 0.0) sign = -sign;
    }
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      const double t = tau[k] - tau[j];
      logw -= std::log(std::abs(t));
      if (t < 0.0) sign = -sign;
    }
    w[k] = sign * std::exp(logw);
  }
  return w;
}

}  // namespace tridspec::tridiag
