#include "ctsp/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <string>
#include <vector>

#include "ctsp/error.hpp"

namespace ctsp {

Graph petersen() { return generalized_petersen(5, 2); }

Graph prism(int k) {
  if (k < 3) throw ContractViolation("prism needs k >= 3");
  return generalized_petersen(k, 1);
}

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n)
    throw ContractViolation("generalized Petersen GP(" + std::to_string(n) + "," + std::to_string(k) +
                            ") needs n >= 3 and 1 <= k < n/2");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n + i);
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + k) % n;
    if (!g.adjacent(n + i, n + j)) g.add_edge(n + i, n + j);
  }
  return g;
}

Graph flower_snark(int k) {
  if (k < 3) throw ContractViolation("flower snark needs k >= 3");
  // a_i = i, b_i = k+i, c_i = 2k+i, d_i = 3k+i
  Graph g(4 * k);
  auto a = [&](int i) { return i; };
  auto b = [&](int i) { return k + i; };
  auto c = [&](int i) { return 2 * k + i; };
  auto d = [&](int i) { return 3 * k + i; };
  for (int i = 0; i < k; ++i) {
    g.add_edge(a(i), b(i));
    g.add_edge(a(i), c(i));
    g.add_edge(a(i), d(i));
    g.add_edge(b(i), b((i + 1) % k));
  }
  // c_0 .. c_{k-1} d_0 .. d_{k-1} back to c_0 is one 2k-cycle
  for (int i = 0; i + 1 < k; ++i) {
    g.add_edge(c(i), c(i + 1));
    g.add_edge(d(i), d(i + 1));
  }
  g.add_edge(c(k - 1), d(0));
  g.add_edge(d(k - 1), c(0));
  return g;
}

Graph random_cubic_bridgeless(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw ContractViolation("cubic graphs need an even order >= 4, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points(3 * static_cast<std::size_t>(n));
  for (;;) {
    for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
    std::shuffle(points.begin(), points.end(), rng);
    Graph g(n);
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      const Vertex u = points[i], v = points[i + 1];
      if (u == v || g.adjacent(u, v))
        ok = false;
      else
        g.add_edge(u, v);
    }
    if (ok && validate(g).all()) return g;
  }
}

namespace {

std::vector<long long> parse_args(std::string_view s, std::string_view spec) {
  std::vector<long long> out;
  while (!s.empty()) {
    auto cut = s.find_first_of(",:");
    auto tok = s.substr(0, cut);
    long long x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ContractViolation("bad generator spec '" + std::string(spec) + "'");
    out.push_back(x);
    s.remove_prefix(cut == std::string_view::npos ? s.size() : cut + 1);
  }
  return out;
}

}  // namespace

Graph generate(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::vector<long long>{}
                                                    : parse_args(spec.substr(colon + 1), spec);
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw ContractViolation("generator '" + std::string(name) + "' takes " +
                                                  std::to_string(k) + " argument(s)");
  };
  if (name == "petersen") {
    need(0);
    return petersen();
  }
  if (name == "k4") {
    need(0);
    Graph g(4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    return g;
  }
  if (name == "k33") {
    need(0);
    Graph g(6);
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) g.add_edge(i, j);
    return g;
  }
  if (name == "prism") {
    need(1);
    return prism(static_cast<int>(args[0]));
  }
  if (name == "gp") {
    need(2);
    return generalized_petersen(static_cast<int>(args[0]), static_cast<int>(args[1]));
  }
  if (name == "flower") {
    need(1);
    return flower_snark(static_cast<int>(args[0]));
  }
  if (name == "random") {
    need(2);
    return random_cubic_bridgeless(static_cast<int>(args[0]), static_cast<std::uint64_t>(args[1]));
  }
  throw ContractViolation("unknown graph family '" + std::string(name) + "'");
}

}  // namespace ctsp
