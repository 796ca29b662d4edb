#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

Plain plain(const pebble::Graph& g) {
  Plain p;
  p.n = g.vertex_count();
  p.root = g.root();
  for (const auto& e : g.edges()) p.edges.emplace_back(e.u, e.v);
  return p;
}

std::vector<std::vector<std::uint32_t>> distances(const Plain& g) {
  const std::uint32_t inf = 1U << 30;
  std::vector<std::vector<std::uint32_t>> d(g.n, std::vector<std::uint32_t>(g.n, inf));
  for (std::size_t v = 0; v < g.n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < g.n; ++k)
    for (std::size_t i = 0; i < g.n; ++i)
      for (std::size_t j = 0; j < g.n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

bool solvable(const Plain& g, const Counts& p, std::uint32_t target) {
  std::set<Counts> seen{p};
  std::deque<Counts> queue{p};
  while (!queue.empty()) {
    Counts c = queue.front();
    queue.pop_front();
    if (c[g.root] >= target) return true;
    for (auto [u, v] : g.edges) {
      for (auto [from, to] : {std::pair{u, v}, std::pair{v, u}}) {
        if (c[from] < 2) continue;
        Counts next = c;
        next[from] -= 2;
        next[to] += 1;
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

std::vector<Counts> compositions(std::size_t n, std::uint32_t size, std::optional<std::uint32_t> zero) {
  std::vector<Counts> out;
  Counts cur(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (zero && *zero == i) {
      rec(i + 1, left);
      return;
    }
    for (std::uint32_t c = 0; c <= left; ++c) {
      cur[i] = c;
      rec(i + 1, left - c);
    }
    cur[i] = 0;
  };
  rec(0, size);
  return out;
}

std::uint32_t pebbling_number(const Plain& g) {
  for (std::uint32_t s = 1;; ++s) {
    bool all = true;
    for (const Counts& p : compositions(g.n, s, g.root)) {
      if (!solvable(g, p)) {
        all = false;
        break;
      }
    }
    if (all) return s;
  }
}

MaxWeight max_unsolvable(const Plain& g, const std::vector<Q>& w, std::uint32_t bound) {
  MaxWeight best{Q(-1), Counts(g.n, 0)};
  for (std::uint32_t s = 0; s <= bound; ++s) {
    for (const Counts& p : compositions(g.n, s, g.root)) {
      Q value = 0;
      for (std::size_t v = 0; v < g.n; ++v) value += w[v] * p[v];
      if (value > best.weight && !solvable(g, p)) best = {value, p};
    }
  }
  return best;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t orbit_count(const Plain& g, std::uint32_t size, bool exclude_root,
                        const std::vector<std::vector<std::uint32_t>>& gens) {
  auto all = compositions(g.n, size, exclude_root ? std::optional<std::uint32_t>(g.root) : std::nullopt);
  std::set<Counts> unvisited(all.begin(), all.end());
  std::size_t orbits = 0;
  while (!unvisited.empty()) {
    ++orbits;
    std::deque<Counts> queue{*unvisited.begin()};
    unvisited.erase(unvisited.begin());
    while (!queue.empty()) {
      Counts c = queue.front();
      queue.pop_front();
      for (const auto& perm : gens) {
        Counts img(g.n);
        for (std::size_t v = 0; v < g.n; ++v) img[perm[v]] = c[v];
        if (unvisited.erase(img)) queue.push_back(std::move(img));
      }
    }
  }
  return orbits;
}

bool isomorphic(const Plain& a, const Plain& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  std::vector<std::vector<bool>> adj_a(a.n, std::vector<bool>(a.n)), adj_b(b.n, std::vector<bool>(b.n));
  for (auto [u, v] : a.edges) adj_a[u][v] = adj_a[v][u] = true;
  for (auto [u, v] : b.edges) adj_b[u][v] = adj_b[v][u] = true;
  std::vector<std::uint32_t> map(a.n, 0);
  std::vector<bool> used(b.n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t v) {
    if (v == a.n) return true;
    for (std::uint32_t x = 0; x < b.n; ++x) {
      if (used[x] || ((v == a.root) != (x == b.root))) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = adj_a[u][v] == adj_b[map[u]][x];
      if (!ok) continue;
      used[x] = true;
      map[v] = x;
      if (rec(v + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  return rec(0);
}

namespace {

// Solves the square system m x = r; nullopt when singular.
std::optional<std::vector<Q>> gauss(std::vector<std::vector<Q>> m, std::vector<Q> r) {
  std::size_t n = r.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(r[piv], r[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Q f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      r[i] -= f * r[col];
    }
  }
  std::vector<Q> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r[i] / m[i][i];
  return x;
}

}  // namespace

std::optional<Q> lp_vertex_max(const std::vector<Q>& c, const std::vector<std::vector<Q>>& a,
                               const std::vector<Q>& b) {
  std::size_t n = c.size();
  std::size_t m = a.size();
  // Constraint k < m is row k; k >= m is x_{k-m} >= 0 written as -x <= 0.
  auto row = [&](std::size_t k) {
    if (k < m) return a[k];
    std::vector<Q> e(n, Q(0));
    e[k - m] = -1;
    return e;
  };
  auto rhs = [&](std::size_t k) { return k < m ? b[k] : Q(0); };
  std::optional<Q> best;
  std::vector<bool> pick(m + n, false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(n), pick.end(), true);
  do {
    std::vector<std::vector<Q>> sys;
    std::vector<Q> r;
    for (std::size_t k = 0; k < m + n; ++k) {
      if (pick[k]) {
        sys.push_back(row(k));
        r.push_back(rhs(k));
      }
    }
    auto x = gauss(sys, r);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t k = 0; k < m + n && feasible; ++k) {
      auto rk = row(k);
      Q lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += rk[j] * (*x)[j];
      feasible = lhs <= rhs(k);
    }
    if (!feasible) continue;
    Q value = 0;
    for (std::size_t j = 0; j < n; ++j) value += c[j] * (*x)[j];
    if (!best || value > *best) best = value;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

pebble::Graph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::uint32_t> pick(0, v - 1);
    std::uint32_t u = pick(rng);
    edges.emplace(u, v);
  }
  std::bernoulli_distribution extra(density);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (extra(rng)) edges.emplace(u, v);
  std::vector<pebble::Edge> list;
  for (auto [u, v] : edges) list.emplace_back(u, v);
  std::uniform_int_distribution<std::uint32_t> root(0, static_cast<std::uint32_t>(n - 1));
  return pebble::Graph(n, std::move(list), root(rng));
}

pebble::Graph random_tree(std::mt19937_64& rng, std::size_t n) { return random_graph(rng, n, 0.0); }

Counts random_counts(std::mt19937_64& rng, const Plain& g, std::uint32_t size) {
  Counts p(g.n, 0);
  if (g.n == 1) return p;
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.n - 2));
  for (std::uint32_t i = 0; i < size; ++i) {
    std::uint32_t v = pick(rng);
    if (v >= g.root) ++v;
    ++p[v];
  }
  return p;
}

}  // namespace oracle
