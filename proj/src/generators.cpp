#include "berge/generators.hpp"

namespace berge {

Multigraph theta_graph() { return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

Multigraph complete_k4() {
  return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Multigraph prism() { return generalized_petersen(3, 1); }

Multigraph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n)
    throw BadParams("GP(n,k) needs n >= 3 and 1 <= k < n/2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
  for (int i = 0; i < n; ++i) edges.push_back({n + i, n + (i + k) % n});
  return Multigraph(2 * n, std::move(edges));
}

Multigraph petersen() { return generalized_petersen(5, 2); }

Multigraph moebius_kantor() { return generalized_petersen(8, 3); }

Multigraph flower_snark(int n) {
  if (n < 5 || n % 2 == 0) throw BadParams("flower snark J_n needs odd n >= 5");
  const int b = n, c = 2 * n, d = 3 * n;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, b + i});
    edges.push_back({i, c + i});
    edges.push_back({i, d + i});
  }
  for (int i = 0; i < n; ++i) edges.push_back({b + i, b + (i + 1) % n});
  for (int i = 0; i + 1 < n; ++i) edges.push_back({c + i, c + i + 1});
  edges.push_back({c + n - 1, d});
  for (int i = 0; i + 1 < n; ++i) edges.push_back({d + i, d + i + 1});
  edges.push_back({d + n - 1, c});
  return Multigraph(4 * n, std::move(edges));
}

Multigraph generate(const std::string& family, const std::vector<int>& params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw BadParams(family + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (family == "theta") return want(0), theta_graph();
  if (family == "k4") return want(0), complete_k4();
  if (family == "prism") return want(0), prism();
  if (family == "petersen") return want(0), petersen();
  if (family == "moebius_kantor") return want(0), moebius_kantor();
  if (family == "gp") return want(2), generalized_petersen(params[0], params[1]);
  if (family == "flower") return want(1), flower_snark(params[0]);
  throw BadParams("unknown family " + family);
}

}  // namespace berge
