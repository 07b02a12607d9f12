#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace oracle {

bool adjacent(const filtforge::SampledSpace& space, std::size_t p, std::size_t q) {
  return p != q && space.dist(p, q) <= space.resolution();
}

std::vector<bool> interior(const filtforge::SampledSpace& space, const std::vector<bool>& x) {
  std::vector<bool> out(x.size(), false);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (!x[p]) continue;
    bool inside = true;
    for (std::size_t q = 0; q < x.size() && inside; ++q)
      if (adjacent(space, p, q) && !x[q]) inside = false;
    out[p] = inside;
  }
  return out;
}

double hausdorff(const filtforge::SampledSpace& space, const Ids& x, const Ids& y) {
  auto directed = [&](const Ids& from, const Ids& to) {
    double worst = 0.0;
    for (auto p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (auto q : to) best = std::min(best, space.dist(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(x, y), directed(y, x));
}

std::vector<int> components(const filtforge::SampledSpace& space, const std::vector<bool>& mask) {
  const std::size_t n = mask.size();
  std::vector<int> label(n, -1);
  int next = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t p) {
    for (std::size_t q = 0; q < n; ++q)
      if (mask[q] && label[q] < 0 && adjacent(space, p, q)) {
        label[q] = label[p];
        visit(q);
      }
  };
  for (std::size_t p = 0; p < n; ++p)
    if (mask[p] && label[p] < 0) {
      label[p] = next++;
      visit(p);
    }
  return label;
}

filtforge::PersistenceDiagram pd0(const filtforge::SampledSpace& space, const std::vector<double>& phi) {
  std::vector<double> t(phi.begin(), phi.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  const std::size_t m = t.size();
  const std::size_t n = phi.size();

  // r[s][u] for s ≤ u, indices into t.
  std::vector<std::vector<long>> r(m, std::vector<long>(m, 0));
  for (std::size_t u = 0; u < m; ++u) {
    std::vector<bool> mask(n);
    for (std::size_t p = 0; p < n; ++p) mask[p] = phi[p] <= t[u];
    const auto label = components(space, mask);
    for (std::size_t s = 0; s <= u; ++s) {
      std::set<int> met;
      for (std::size_t p = 0; p < n; ++p)
        if (phi[p] <= t[s]) met.insert(label[p]);
      r[s][u] = static_cast<long>(met.size());
    }
  }
  auto rank = [&](long s, long u) -> long { return s < 0 ? 0 : r[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)]; };

  filtforge::PersistenceDiagram d;
  for (long i = 0; i < static_cast<long>(m); ++i) {
    for (long j = i + 1; j < static_cast<long>(m); ++j) {
      const long mu = rank(i, j - 1) - rank(i - 1, j - 1) - rank(i, j) + rank(i - 1, j);
      for (long k = 0; k < mu; ++k) d.pairs.push_back({t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]});
    }
    const long ess = rank(i, static_cast<long>(m) - 1) - rank(i - 1, static_cast<long>(m) - 1);
    for (long k = 0; k < ess; ++k) d.essential.push_back(t[static_cast<std::size_t>(i)]);
  }
  std::sort(d.pairs.begin(), d.pairs.end());
  std::sort(d.essential.begin(), d.essential.end());
  return d;
}

double bottleneck(const filtforge::PersistenceDiagram& a, const filtforge::PersistenceDiagram& b) {
  if (a.essential.size() != b.essential.size()) return std::numeric_limits<double>::infinity();
  auto ea = a.essential, eb = b.essential;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  double ess = 0.0;
  for (std::size_t k = 0; k < ea.size(); ++k) ess = std::max(ess, std::abs(ea[k] - eb[k]));

  const auto& pa = a.pairs;
  const auto& pb = b.pairs;
  auto diag = [](const filtforge::PersistencePair& x) { return (x.death - x.birth) / 2.0; };
  double best = std::numeric_limits<double>::infinity();
  // assign[i] = index into pb or -1 for the diagonal.
  std::vector<int> assign(pa.size(), -1);
  std::vector<bool> used(pb.size(), false);
  std::function<void(std::size_t, double)> search = [&](std::size_t i, double cost) {
    if (cost >= best) return;
    if (i == pa.size()) {
      double total = cost;
      for (std::size_t j = 0; j < pb.size(); ++j)
        if (!used[j]) total = std::max(total, diag(pb[j]));
      best = std::min(best, total);
      return;
    }
    search(i + 1, std::max(cost, diag(pa[i])));
    for (std::size_t j = 0; j < pb.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      const double c = std::max(std::abs(pa[i].birth - pb[j].birth), std::abs(pa[i].death - pb[j].death));
      search(i + 1, std::max(cost, c));
      used[j] = false;
    }
  };
  search(0, 0.0);
  return std::max(ess, best);
}

}  // namespace oracle
