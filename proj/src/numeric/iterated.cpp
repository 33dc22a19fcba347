#include "zagier/numeric/iterated.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zagier/errors.hpp"
#include "zagier/hyperlog/iterm.hpp"

namespace zagier {
namespace {

// Gauss–Legendre nodes, weights and the collocation integration matrix
// S[i][j] = ∫_{−1}^{x_i} ℓ_j(x) dx on [−1, 1].
struct Collocation {
  int q;
  std::vector<double> x, w;
  std::vector<std::vector<double>> S;

  explicit Collocation(int order) : q(order), x(order), w(order), S(order, std::vector<double>(order)) {
    for (int i = 0; i < q; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (q + 0.5));
      for (int it = 0; it < 100; ++it) {
        auto [p, dp] = legendre(q, z);
        const double dz = p / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = z;
      w[i] = 2 / ((1 - z * z) * std::pow(legendre(q, z).second, 2));
    }
    // ℓ_j(x) = w_j Σ_m (2m+1)/2 P_m(x_j) P_m(x), so
    // ∫_{−1}^{x} ℓ_j = w_j [ (x+1)/2 + Σ_{m≥1} (P_{m+1}(x) − P_{m−1}(x))/2 · P_m(x_j) ].
    std::vector<std::vector<double>> Pn(q, std::vector<double>(q + 1));
    for (int i = 0; i < q; ++i) Pn[i] = legendre_all(q, x[i]);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) {
        double s = (x[i] + 1) / 2;
        for (int m = 1; m < q; ++m) s += (Pn[i][m + 1] - Pn[i][m - 1]) / 2 * Pn[j][m];
        S[i][j] = w[j] * s;
      }
  }

  static std::pair<double, double> legendre(int n, double z) {
    double p0 = 1, p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return {p1, n * (z * p1 - p0) / (z * z - 1)};
  }
  static std::vector<double> legendre_all(int n, double z) {
    std::vector<double> p(n + 1);
    p[0] = 1;
    if (n >= 1) p[1] = z;
    for (int k = 2; k <= n; ++k) p[k] = ((2 * k - 1) * z * p[k - 1] - (k - 1) * p[k - 2]) / k;
    return p;
  }
};

const Collocation& rule(int q) {
  static const Collocation r20(20), r14(14);
  return q == 20 ? r20 : r14;
}

double dist_to_segment(cplx p, cplx a, cplx b) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

bool same(cplx a, cplx b) { return std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(a)); }

struct Integrator {
  std::vector<cplx> word;
  std::vector<cplx> singular;  // non-removable singularities of the system
  const Collocation& c;
  std::vector<cplx> F;         // F_0..F_n at the current position

  // Advances every F_k over the straight panel [u, v].
  void panel(cplx u, cplx v) {
    const int n = static_cast<int>(word.size());
    const int q = c.q;
    const cplx half = (v - u) / 2.0;
    std::vector<cplx> t(q);
    for (int i = 0; i < q; ++i) t[i] = u + (c.x[i] + 1) * half;
    std::vector<cplx> prev(q, 1.0), cur(q);
    for (int k = 1; k <= n; ++k) {
      std::vector<cplx> g(q);
      for (int i = 0; i < q; ++i) g[i] = prev[i] / (t[i] - word[k - 1]);
      cplx total = 0;
      for (int j = 0; j < q; ++j) total += c.w[j] * g[j];
      for (int i = 0; i < q; ++i) {
        cplx s = 0;
        for (int j = 0; j < q; ++j) s += c.S[i][j] * g[j];
        cur[i] = F[k] + half * s;
      }
      F[k] += half * total;
      prev.swap(cur);
    }
  }

  double radius(cplx p) const {
    double r = INFINITY;
    for (const auto& s : singular) r = std::min(r, std::abs(p - s));
    return r;
  }

  // Panels sized to half the distance to the nearest singularity; this
  // grades geometrically toward a singular endpoint.
  void segment(cplx a, cplx b) {
    const double len = std::abs(b - a);
    if (len == 0) return;
    const double floor_len = 1e-15 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
    double s = 0;
    while (s < len) {
      const cplx u = a + (b - a) * (s / len);
      double h = std::min(len - s, 0.5 * radius(u));
      for (int tries = 0; tries < 60; ++tries) {
        const cplx v = a + (b - a) * ((s + h) / len);
        double r = INFINITY;
        for (const auto& sg : singular) r = std::min(r, dist_to_segment(sg, u, v));
        if (h <= 0.5 * r || h <= floor_len) break;
        h /= 2;
      }
      if (h <= floor_len || len - s - h <= floor_len) h = len - s;
      panel(u, a + (b - a) * ((s + h) / len));
      s += h;
    }
  }
};

cplx run(cplx a0, const std::vector<cplx>& word, const Path& path, int order) {
  Integrator it{word, {}, rule(order), std::vector<cplx>(word.size() + 1, 0.0)};
  it.F[0] = 1;
  // a_k = a0 (k ≥ 2) is removable: F_{k−1} vanishes at a0.
  for (const auto& a : word)
    if (!same(a, a0)) it.singular.push_back(a);
  const auto& pts = path.waypoints();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) it.segment(pts[i], pts[i + 1]);
  return it.F.back();
}

}  // namespace

Path::Path(std::vector<cplx> waypoints) : pts_(std::move(waypoints)) {
  if (pts_.size() < 2) throw std::invalid_argument("Path needs at least two waypoints");
}

Path Path::avoiding(cplx from, cplx to, const std::vector<cplx>& singularities, double clearance) {
  const double len = std::abs(to - from);
  if (len == 0) return Path({from, to});
  const cplx u = (to - from) / len;
  const cplx left = u * cplx(0, 1);
  const double rad = std::max(1e-2, len / 10);
  std::vector<std::pair<double, cplx>> hits;  // (position along path, singularity)
  for (const auto& s : singularities) {
    if (same(s, from) || same(s, to)) continue;
    if (dist_to_segment(s, from, to) < clearance) hits.emplace_back(((s - from) * std::conj(u)).real(), s);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Nearby singularities share one detour; detours stay strictly inside the
  // segment so they never back up past an endpoint.
  std::vector<cplx> pts{from};
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j + 1 < hits.size() && hits[j + 1].first - hits[j].first < 2 * rad) ++j;
    const double lo = std::max(hits[i].first - rad, hits[i].first / 2);
    const double hi = std::min(hits[j].first + rad, (hits[j].first + len) / 2);
    pts.push_back(from + lo * u);
    pts.push_back(from + lo * u + rad * left);
    pts.push_back(from + hi * u + rad * left);
    pts.push_back(from + hi * u);
    i = j + 1;
  }
  pts.push_back(to);
  return Path(std::move(pts));
}

ComplexVal iterated_integral_num(cplx a0, const std::vector<cplx>& word, cplx end, const Path& path,
                                 double clearance) {
  if (word.empty()) return ComplexVal(cplx(1.0), 0.0);
  if (same(a0, word.front()) || same(word.back(), end))
    throw DivergentTerm("iterated_integral_num: divergent endpoints");
  if (!same(path.start(), a0) || !same(path.end(), end))
    throw PathError("iterated_integral_num: path does not join the endpoints");
  const auto& pts = path.waypoints();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    for (const auto& a : word) {
      // Endpoint singularities are handled by the graded panels.
      const bool at_start = i == 0 && same(a, pts.front());
      const bool at_end = i + 2 == pts.size() && same(a, pts.back());
      if (at_start || at_end) continue;
      if (dist_to_segment(a, pts[i], pts[i + 1]) < clearance)
        throw PathError("iterated_integral_num: path passes within clearance of a singularity");
    }
  const cplx hi = run(a0, word, path, 20);
  const cplx lo = run(a0, word, path, 14);
  return {hi, std::abs(hi - lo) + 1e-15 * std::max(1.0, std::abs(hi))};
}

ComplexVal iterated_integral_num(cplx a0, const std::vector<cplx>& word, cplx end) {
  return iterated_integral_num(a0, word, end, Path::straight(a0, end));
}

double shuffle_check_num(const std::vector<cplx>& w1, const std::vector<cplx>& w2, cplx a0, cplx end,
                         const Path& path) {
  if (w1.empty() || w2.empty()) return 0.0;
  const cplx lhs = iterated_integral_num(a0, w1, end, path).v * iterated_integral_num(a0, w2, end, path).v;
  cplx rhs = 0;
  for (const auto& [w, m] : shuffle(w1, w2)) rhs += static_cast<double>(m) * iterated_integral_num(a0, w, end, path).v;
  return std::abs(lhs - rhs);
}

}  // namespace zagier
