#include "pebble/constructions.hpp"

#include <bit>
#include <string>

#include "pebble/errors.hpp"

namespace pebble {

namespace {

void want(std::string_view name, std::span<const std::uint32_t> params, std::size_t count) {
  if (params.size() != count) {
    throw Error(ErrorCode::BadParameter, std::string(name) + " takes " + std::to_string(count) + " parameter(s), got " +
                                             std::to_string(params.size()));
  }
}

void in_range(std::string_view what, std::uint32_t value, std::uint32_t lo, std::uint32_t hi) {
  if (value < lo || value > hi) {
    throw Error(ErrorCode::BadParameter, std::string(what) + "=" + std::to_string(value) + " outside [" +
                                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

Rational pow2(std::uint32_t e) { return Rational(BigInt(1) << e, BigInt(1)); }

// Weight as a function of distance from the root; by_distance[0] is unused.
WeightFunction by_distance(const GraphPtr& g, const std::vector<Rational>& by_dist) {
  std::vector<Rational> w(g->vertex_count());
  auto dist = g->root_distances();
  for (VertexId v = 0; v < g->vertex_count(); ++v) {
    if (v != g->root()) w[v] = by_dist.at(dist[v]);
  }
  return WeightFunction(g, std::move(w));
}

WeightFunction lollipop_weights(std::uint32_t n, std::uint32_t arms) {
  auto g = share(generate(FamilySpec::lollipop(n, arms)));
  std::vector<Rational> w(g->vertex_count(), Rational(1));
  w[0] = Rational(0);
  for (std::uint32_t j = 1; j <= n; ++j) w[n + 1 - j] = pow2(j);
  return WeightFunction(g, std::move(w));
}

}  // namespace

std::vector<std::string_view> paper_weight_names() {
  return {"fig2",     "q3prime",          "lemma5",         "q4star", "conjecture",
          "lollipop", "lollipop_general", "cycle_combined", "path"};
}

WeightFunction paper_weight(std::string_view name, std::span<const std::uint32_t> params) {
  if (name == "fig2") {
    want(name, params, 0);
    auto g = share(generate(FamilySpec::named("fig2")));
    return by_distance(g, {Rational(0), Rational(2), Rational(2, 3), Rational(1, 3)});
  }
  if (name == "q3prime") {
    want(name, params, 0);
    auto g = share(generate(FamilySpec::hypercube(3)));
    return by_distance(g, {Rational(0), Rational(2), Rational(4, 3), Rational(1)});
  }
  if (name == "lemma5") {
    want(name, params, 0);
    auto g = share(generate(FamilySpec::named("lemma5")));
    return by_distance(g, {Rational(0), Rational(4), Rational(2), Rational(4, 3), Rational(1)});
  }
  if (name == "q4star") {
    want(name, params, 0);
    auto g = share(generate(FamilySpec::hypercube(4)));
    return by_distance(g, std::vector<Rational>(5, Rational(4)));
  }
  if (name == "conjecture") {
    want(name, params, 1);
    in_range("n", params[0], 2, 12);
    auto g = share(generate(FamilySpec::rooted_cube(params[0])));
    std::vector<Rational> by_dist(params[0] + 1);
    for (std::uint32_t d = 1; d <= params[0]; ++d) by_dist[d] = Rational(1, d);
    return by_distance(g, by_dist);
  }
  if (name == "lollipop") {
    want(name, params, 1);
    in_range("n", params[0], 1, 20);
    return lollipop_weights(params[0], 0);
  }
  if (name == "lollipop_general") {
    want(name, params, 2);
    in_range("n", params[0], 1, 20);
    std::uint32_t least = (1U << (params[0] + 1)) + 1;
    in_range("m", params[1], least, 1U << 24);
    return lollipop_weights(params[0], params[1]);
  }
  if (name == "cycle_combined") {
    want(name, params, 1);
    in_range("k", params[0], 1, 30);
    std::uint32_t k = params[0];
    std::uint32_t len = 2 * k + 1;
    auto g = share(generate(FamilySpec::cycle(len)));
    std::vector<Rational> w(len);
    for (std::uint32_t i = 1; i < len; ++i) {
      if (i <= k + 1) w[i] += pow2(k + 1 - i);
      if (i >= k) w[i] += pow2(i - k);
    }
    return WeightFunction(g, std::move(w));
  }
  if (name == "path") {
    want(name, params, 1);
    in_range("k", params[0], 1, 30);
    auto g = share(generate(FamilySpec::path(params[0] + 1)));
    std::vector<Rational> w(params[0] + 1);
    for (std::uint32_t i = 0; i < params[0]; ++i) w[i] = pow2(i);
    return WeightFunction(g, std::move(w));
  }
  throw Error(ErrorCode::UnknownName, "unknown construction '" + std::string(name) + "'");
}

Embedding cube_slice_embedding(std::uint32_t n, std::uint32_t i) {
  in_range("n", n, 2, 16);
  in_range("i", i, 1, n);
  std::uint32_t dims = n - 1;
  Embedding e;
  e.image.push_back(0);
  std::vector<int> coords(n);
  for (std::uint32_t mask = 0; mask < (1U << dims); ++mask) {
    std::uint32_t k = 0;
    for (std::uint32_t c = 1; c <= n; ++c) {
      if (c == i) {
        coords[c - 1] = 1;
      } else {
        ++k;
        coords[c - 1] = static_cast<int>((mask >> (dims - k)) & 1U);
      }
    }
    e.image.push_back(hypercube_vertex(coords));
  }
  return e;
}

std::vector<WeightCopy> cube_slice_copies(const WeightFunction& base, const GraphPtr& cube) {
  std::size_t sub = base.graph()->vertex_count();
  if (sub < 2 || !std::has_single_bit(sub - 1)) {
    throw Error(ErrorCode::BadParameter, "base graph is not a rooted cube");
  }
  auto n = static_cast<std::uint32_t>(std::countr_zero(sub - 1)) + 1;
  if (cube->vertex_count() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::DimensionMismatch, "cube has " + std::to_string(cube->vertex_count()) +
                                                  " vertices, base needs dimension " + std::to_string(n));
  }
  std::vector<WeightCopy> copies;
  for (std::uint32_t i = 1; i <= n; ++i) copies.push_back({cube_slice_embedding(n, i), base});
  return copies;
}

PathPair cycle_path_pair(std::uint32_t k) {
  std::uint32_t params[] = {k + 1};
  WeightFunction path = paper_weight("path", params);
  std::uint32_t len = 2 * k + 1;
  Embedding forward, backward;
  forward.image.resize(k + 2);
  backward.image.resize(k + 2);
  for (std::uint32_t i = 0; i <= k; ++i) {
    forward.image[i] = k + 1 - i;
    backward.image[i] = len - (k + 1 - i);
  }
  forward.image[k + 1] = 0;
  backward.image[k + 1] = 0;
  return {std::move(path), std::move(forward), std::move(backward)};
}

}  // namespace pebble
