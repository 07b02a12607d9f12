#include "filtforge/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include "filtforge/error.hpp"
#include "filtforge/kernels.hpp"

namespace filtforge {

void PersistenceDiagram::normalize() {
  std::sort(pairs.begin(), pairs.end());
  std::sort(essential.begin(), essential.end());
}

double linf_distance(const FilteringFunction& a, const FilteringFunction& b) {
  if (a.dim() != b.dim() || a.point_count() != b.point_count())
    throw StructuralError("functions differ in dimension or point count");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.values().size(); ++k)
    worst = std::max(worst, std::abs(a.values()[k] - b.values()[k]));
  return worst;
}

std::vector<std::uint32_t> cycle_order(const SampledSpace& space) {
  const std::size_t n = space.size();
  if (n < 3) throw UnsupportedTopologyError("a cycle needs at least three points");
  for (std::size_t p = 0; p < n; ++p)
    if (space.neighbors(p).size() != 2)
      throw UnsupportedTopologyError("point " + std::to_string(p) + " has " +
                                     std::to_string(space.neighbors(p).size()) +
                                     " neighbors; the neighborhood graph is not a cycle");
  std::vector<std::uint32_t> order{0};
  std::uint32_t prev = 0;
  std::uint32_t cur = space.neighbors(0)[0];
  while (cur != 0) {
    if (order.size() == n) throw UnsupportedTopologyError("neighborhood graph is not a single cycle");
    order.push_back(cur);
    const auto nb = space.neighbors(cur);
    const std::uint32_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (order.size() != n) throw UnsupportedTopologyError("neighborhood graph is not a single cycle");
  return order;
}

double pseudo_distance_cycle(const SampledSpace& space, const FilteringFunction& a,
                             const FilteringFunction& b, Exec exec) {
  if (a.dim() != 1 || b.dim() != 1) throw StructuralError("pseudo-distance needs real-valued functions");
  if (a.point_count() != space.size() || b.point_count() != space.size())
    throw StructuralError("function and space sizes differ");
  const auto order = cycle_order(space);
  std::vector<double> seq_a, seq_b;
  for (auto p : order) {
    seq_a.push_back(a(p));
    seq_b.push_back(b(p));
  }
  auto run = exec == Exec::parallel ? kernels::cyclic_correspondence_omp
                                    : kernels::cyclic_correspondence_serial;
  const double forward = run(seq_a, seq_b);
  std::reverse(seq_b.begin(), seq_b.end());
  return std::min(forward, run(seq_a, seq_b));
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  std::vector<std::uint32_t> parent;
};

}  // namespace

PersistenceDiagram sublevel_pd0(const SampledSpace& space, const FilteringFunction& phi) {
  if (phi.dim() != 1) throw StructuralError("degree-0 persistence needs a real-valued function");
  const std::size_t n = space.size();
  if (phi.point_count() != n) throw StructuralError("function and space sizes differ");

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t p, std::uint32_t q) {
    return phi(p) != phi(q) ? phi(p) < phi(q) : p < q;
  });
  // rank[p] is the processing step of p; a root's rank names its oldest point.
  std::vector<std::uint32_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = static_cast<std::uint32_t>(k);

  UnionFind uf(n);
  std::vector<std::uint32_t> oldest(n);
  std::vector<char> active(n, 0);
  PersistenceDiagram diagram;
  for (auto p : order) {
    active[p] = 1;
    oldest[p] = p;
    for (auto q : space.neighbors(p)) {
      if (!active[q]) continue;
      auto rp = uf.find(p);
      auto rq = uf.find(q);
      if (rp == rq) continue;
      if (rank[oldest[rp]] > rank[oldest[rq]]) std::swap(rp, rq);
      const double birth = phi(oldest[rq]);
      const double death = phi(p);
      if (birth < death) diagram.pairs.push_back({birth, death});
      uf.parent[rq] = rp;
    }
  }
  for (std::uint32_t p = 0; p < n; ++p)
    if (uf.find(p) == p) diagram.essential.push_back(phi(oldest[p]));
  diagram.normalize();
  return diagram;
}

PersistenceDiagram essential_h1_cycle(const SampledSpace& space, const FilteringFunction& phi) {
  if (phi.dim() != 1) throw StructuralError("degree-1 persistence needs a real-valued function");
  if (phi.point_count() != space.size()) throw StructuralError("function and space sizes differ");
  cycle_order(space);
  PersistenceDiagram diagram;
  diagram.degree = 1;
  diagram.essential.push_back(*std::max_element(phi.values().begin(), phi.values().end()));
  return diagram;
}

namespace {

/// Hopcroft–Karp on a bipartite graph with equal sides; true when perfect.
class Matcher {
 public:
  explicit Matcher(std::size_t n) : n_(n), adj_(n), match_l_(n, kNone), match_r_(n, kNone), dist_(n) {}
  void add(std::size_t l, std::size_t r) { adj_[l].push_back(r); }

  bool perfect() {
    std::size_t size = 0;
    while (bfs())
      for (std::size_t l = 0; l < n_; ++l)
        if (match_l_[l] == kNone && dfs(l)) ++size;
    return size == n_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t l = 0; l < n_; ++l) {
      dist_[l] = match_l_[l] == kNone ? 0 : kNone;
      if (match_l_[l] == kNone) q.push(l);
    }
    while (!q.empty()) {
      const auto l = q.front();
      q.pop();
      for (auto r : adj_[l]) {
        const auto m = match_r_[r];
        if (m == kNone) {
          found = true;
        } else if (dist_[m] == kNone) {
          dist_[m] = dist_[l] + 1;
          q.push(m);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t l) {
    for (auto r : adj_[l]) {
      const auto m = match_r_[r];
      if (m == kNone || (dist_[m] == dist_[l] + 1 && dfs(m))) {
        match_l_[l] = r;
        match_r_[r] = l;
        return true;
      }
    }
    dist_[l] = kNone;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_l_, match_r_, dist_;
};

double pair_cost(const PersistencePair& x, const PersistencePair& y) {
  return std::max(std::abs(x.birth - y.birth), std::abs(x.death - y.death));
}

double diagonal_cost(const PersistencePair& x) { return (x.death - x.birth) / 2.0; }

// Left side: A pairs then diagonal slots for B. Right side: B pairs then
// diagonal slots for A.
bool feasible(const std::vector<PersistencePair>& a, const std::vector<PersistencePair>& b, double c) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  Matcher matcher(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if (pair_cost(a[i], b[j]) <= c) matcher.add(i, j);
    if (diagonal_cost(a[i]) <= c) matcher.add(i, m + i);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (diagonal_cost(b[j]) <= c) matcher.add(n + j, j);
    for (std::size_t i = 0; i < n; ++i) matcher.add(n + j, m + i);
  }
  return matcher.perfect();
}

}  // namespace

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  if (a.degree != b.degree)
    throw StructuralError("cannot compare diagrams of degree " + std::to_string(a.degree) + " and " +
                          std::to_string(b.degree));
  if (a.essential.size() != b.essential.size()) return kInfinity;
  auto ea = a.essential;
  auto eb = b.essential;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  double essential = 0.0;
  for (std::size_t k = 0; k < ea.size(); ++k) essential = std::max(essential, std::abs(ea[k] - eb[k]));

  const auto& pa = a.pairs;
  const auto& pb = b.pairs;
  std::vector<double> candidates{0.0};
  for (const auto& x : pa) candidates.push_back(diagonal_cost(x));
  for (const auto& y : pb) candidates.push_back(diagonal_cost(y));
  for (const auto& x : pa)
    for (const auto& y : pb) candidates.push_back(pair_cost(x, y));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // The largest candidate is always feasible: every pair can go to the diagonal.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(pa, pb, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return std::max(essential, candidates[lo]);
}

}  // namespace filtforge
