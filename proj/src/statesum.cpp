#include "hss/statesum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace hss {

bool nearly_equal(cplx a, cplx b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

std::vector<cplx> lowered_twisted_constants(const Algebra& alg,
                                            const GAction& action,
                                            const GroupElement& g) {
  std::vector<cplx> twisted = action.twisted_constants(g);
  const std::size_t d = alg.dim();
  const Matrix& metric = alg.metric();
  std::vector<cplx> out(d * d * d, cplx(0.0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        cplx v = 0;
        for (std::size_t m = 0; m < d; ++m)
          v += twisted[(i * d + j) * d + m] *
               metric(static_cast<Eigen::Index>(m),
                      static_cast<Eigen::Index>(k));
        out[(i * d + j) * d + k] = v;
      }
  return out;
}

std::vector<cplx> vertex_tensor(int triangle, const LabeledSurface& surface,
                                const Algebra& alg, const GAction& action) {
  if (triangle < 0 ||
      static_cast<std::size_t>(triangle) >= surface.num_triangles())
    fail(Err::DimensionMismatch, "triangle index out of range");
  const GroupElement& label =
      surface.labels()[static_cast<std::size_t>(triangle)];
  return lowered_twisted_constants(alg, action, label);
}

Matrix edge_propagator(const Algebra& alg) { return alg.inv_metric(); }

double ContractionPlan::cost(std::size_t d) const {
  double total = 0;
  for (const PlanStep& s : steps)
    total += std::pow(static_cast<double>(d), s.rank_a + s.rank_b - s.shared);
  return total;
}

int ContractionPlan::max_rank() const {
  int m = 0;
  for (const PlanStep& s : steps)
    m = std::max(m, s.rank_a + s.rank_b - 2 * s.shared);
  return m;
}

ContractionPlan plan_contraction(
    std::size_t num_vertices, std::vector<int> ranks,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  // Cluster id = smallest member vertex. shared[{a,b}] counts edges between
  // live clusters a < b.
  std::vector<std::size_t> rep(num_vertices);
  for (std::size_t v = 0; v < num_vertices; ++v) rep[v] = v;
  std::map<std::pair<std::size_t, std::size_t>, int> shared;
  for (auto [u, v] : edges) {
    if (u == v) continue;  // self-loops are pre-absorbed into ranks
    auto key = std::minmax(u, v);
    ++shared[{key.first, key.second}];
  }

  ContractionPlan plan;
  while (!shared.empty()) {
    auto best = shared.end();
    int best_open = 0;
    for (auto it = shared.begin(); it != shared.end(); ++it) {
      auto [a, b] = it->first;
      int open = ranks[a] + ranks[b] - 2 * it->second;
      // std::map iterates key-ascending, so the first minimum already has
      // the lowest (a, b); strict < keeps it.
      if (best == shared.end() || open < best_open) {
        best = it;
        best_open = open;
      }
    }
    auto [a, b] = best->first;
    plan.steps.push_back(PlanStep{a, b, ranks[a], ranks[b], best->second});
    ranks[a] = best_open;
    shared.erase(best);
    // Redirect b's remaining adjacencies to a.
    std::map<std::pair<std::size_t, std::size_t>, int> next;
    for (auto& [key, count] : shared) {
      auto [u, v] = key;
      if (u == b) u = a;
      if (v == b) v = a;
      auto nk = std::minmax(u, v);
      next[{nk.first, nk.second}] += count;
    }
    shared = std::move(next);
  }
  return plan;
}

ContractionPlan plan_contraction(const DualGraph& graph) {
  std::vector<int> ranks(graph.num_vertices, 3);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [a, b] : graph.edges) {
    if (a.tri == b.tri) {
      ranks[static_cast<std::size_t>(a.tri)] -= 2;
    } else {
      edges.emplace_back(static_cast<std::size_t>(a.tri),
                         static_cast<std::size_t>(b.tri));
    }
  }
  return plan_contraction(graph.num_vertices, std::move(ranks), edges);
}

namespace {

/// Dense tensor over a fixed dimension d, flat row-major (first open flag
/// most significant). flags identify open slots as 3*tri + edge.
struct ClusterTensor {
  std::vector<cplx> data;
  std::vector<int> flags;
};

std::size_t checked_size(std::size_t d, std::size_t rank, double cap) {
  double sz = std::pow(static_cast<double>(d), static_cast<double>(rank));
  if (sz > cap) {
    std::ostringstream os;
    os << "intermediate tensor of rank " << rank << " needs " << sz
       << " entries, above the cap " << cap;
    fail(Err::PlanOverflow, os.str());
  }
  std::size_t n = 1;
  for (std::size_t i = 0; i < rank; ++i) n *= d;
  return n;
}

/// Multiply the propagator into one mode: out[..., j, ...] =
/// sum_i in[..., i, ...] P(i, j).
void apply_propagator(ClusterTensor& t, std::size_t mode, const Matrix& P,
                      std::size_t d, double cap) {
  const std::size_t rank = t.flags.size();
  const std::size_t size = checked_size(d, rank, cap);
  std::size_t stride = 1;
  for (std::size_t p = mode + 1; p < rank; ++p) stride *= d;
  std::vector<cplx> out(size, cplx(0.0));
  for (std::size_t idx = 0; idx < size; ++idx) {
    const cplx v = t.data[idx];
    if (v == cplx(0.0)) continue;
    const std::size_t i = (idx / stride) % d;
    const std::size_t base = idx - i * stride;
    for (std::size_t j = 0; j < d; ++j)
      out[base + j * stride] += v * P(static_cast<Eigen::Index>(i),
                                      static_cast<Eigen::Index>(j));
  }
  t.data = std::move(out);
}

/// Contract two modes of one tensor against each other (their propagator
/// already applied): out[rest] = sum_i t[.., i at p .., i at q ..].
void trace_modes(ClusterTensor& t, std::size_t p, std::size_t q,
                 std::size_t d, double cap) {
  const std::size_t rank = t.flags.size();
  std::vector<std::size_t> stride(rank, 1);
  for (std::size_t m = rank; m-- > 1;) stride[m - 1] = stride[m] * d;
  const std::size_t out_size = checked_size(d, rank - 2, cap);
  std::vector<cplx> out(out_size, cplx(0.0));
  const std::size_t in_size = t.data.size();
  for (std::size_t idx = 0; idx < in_size; ++idx) {
    std::size_t rem = idx, out_idx = 0;
    std::size_t ip = 0, iq = 0;
    for (std::size_t m = 0; m < rank; ++m) {
      std::size_t digit = rem / stride[m];
      rem %= stride[m];
      if (m == p)
        ip = digit;
      else if (m == q)
        iq = digit;
      else
        out_idx = out_idx * d + digit;
    }
    if (ip == iq) out[out_idx] += t.data[idx];
  }
  t.data = std::move(out);
  std::vector<int> flags;
  for (std::size_t m = 0; m < rank; ++m)
    if (m != p && m != q) flags.push_back(t.flags[m]);
  t.flags = std::move(flags);
}

/// Reorder modes so the listed ones come last (in the given order); then the
/// tensor flattens to a (free x moved) row-major matrix.
ClusterTensor move_modes_last(const ClusterTensor& t,
                              const std::vector<std::size_t>& last,
                              std::size_t d) {
  const std::size_t rank = t.flags.size();
  std::vector<std::size_t> perm;  // output mode -> input mode
  for (std::size_t m = 0; m < rank; ++m)
    if (std::find(last.begin(), last.end(), m) == last.end())
      perm.push_back(m);
  perm.insert(perm.end(), last.begin(), last.end());

  std::vector<std::size_t> in_stride(rank, 1);
  for (std::size_t m = rank; m-- > 1;) in_stride[m - 1] = in_stride[m] * d;

  ClusterTensor out;
  out.data.assign(t.data.size(), cplx(0.0));
  out.flags.resize(rank);
  for (std::size_t m = 0; m < rank; ++m)
    out.flags[m] = t.flags[perm[m]];
  const std::size_t size = t.data.size();
  std::vector<std::size_t> digits(rank);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rem = idx;
    for (std::size_t m = 0; m < rank; ++m) {
      digits[m] = rem / in_stride[m];
      rem %= in_stride[m];
    }
    std::size_t out_idx = 0;
    for (std::size_t m = 0; m < rank; ++m)
      out_idx = out_idx * d + digits[perm[m]];
    out.data[out_idx] = t.data[idx];
  }
  return out;
}

using RowMajor =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Contract clusters a and b over the paired modes (propagators already
/// applied on a's side). Open flags of the result: a's free then b's free.
ClusterTensor contract_clusters(const ClusterTensor& a,
                                const ClusterTensor& b,
                                const std::vector<std::size_t>& modes_a,
                                const std::vector<std::size_t>& modes_b,
                                std::size_t d, double cap) {
  const std::size_t s = modes_a.size();
  const std::size_t fa = a.flags.size() - s;
  const std::size_t fb = b.flags.size() - s;
  checked_size(d, fa + fb, cap);

  ClusterTensor ap = move_modes_last(a, modes_a, d);
  // For b, move the paired modes FIRST by moving the free ones last.
  std::vector<std::size_t> free_b;
  for (std::size_t m = 0; m < b.flags.size(); ++m)
    if (std::find(modes_b.begin(), modes_b.end(), m) == modes_b.end())
      free_b.push_back(m);
  std::vector<std::size_t> order_b = modes_b;
  order_b.insert(order_b.end(), free_b.begin(), free_b.end());
  // move_modes_last with ALL modes listed = full permutation.
  ClusterTensor bp = move_modes_last(b, order_b, d);

  std::size_t na = 1, nb = 1, ns = 1;
  for (std::size_t i = 0; i < fa; ++i) na *= d;
  for (std::size_t i = 0; i < fb; ++i) nb *= d;
  for (std::size_t i = 0; i < s; ++i) ns *= d;

  Eigen::Map<const RowMajor> ma(ap.data.data(),
                                static_cast<Eigen::Index>(na),
                                static_cast<Eigen::Index>(ns));
  Eigen::Map<const RowMajor> mb(bp.data.data(),
                                static_cast<Eigen::Index>(ns),
                                static_cast<Eigen::Index>(nb));
  RowMajor prod = ma * mb;

  ClusterTensor out;
  out.data.assign(prod.data(), prod.data() + na * nb);
  for (std::size_t m = 0; m < fa; ++m) out.flags.push_back(ap.flags[m]);
  for (std::size_t m = s; m < bp.flags.size(); ++m)
    out.flags.push_back(bp.flags[m]);
  return out;
}

std::size_t mode_of_flag(const ClusterTensor& t, int flag) {
  for (std::size_t m = 0; m < t.flags.size(); ++m)
    if (t.flags[m] == flag) return m;
  fail(Err::OpenSlot, "flag " + std::to_string(flag) +
                          " is not open on its cluster tensor");
}

}  // namespace

cplx evaluate(const LabeledSurface& surface, const Algebra& alg,
              const GAction& action, const EvalOptions& opts) {
  const std::size_t T = surface.num_triangles();
  if (T == 0) return cplx(1.0);
  const std::size_t d = alg.dim();
  checked_size(d, 3, opts.size_cap);
  const Matrix P = edge_propagator(alg);

  std::map<std::size_t, ClusterTensor> clusters;
  for (std::size_t t = 0; t < T; ++t) {
    ClusterTensor ct;
    ct.data = vertex_tensor(static_cast<int>(t), surface, alg, action);
    ct.flags = {static_cast<int>(3 * t), static_cast<int>(3 * t + 1),
                static_cast<int>(3 * t + 2)};
    clusters[t] = std::move(ct);
  }

  // Absorb self-loop gluings into their vertex tensor right away.
  std::vector<std::pair<Slot, Slot>> cross_edges;
  for (const Gluing& g : surface.gluings()) {
    if (g.a.tri == g.b.tri) {
      ClusterTensor& t = clusters[static_cast<std::size_t>(g.a.tri)];
      std::size_t p = mode_of_flag(t, 3 * g.a.tri + g.a.edge);
      std::size_t q = mode_of_flag(t, 3 * g.b.tri + g.b.edge);
      apply_propagator(t, p, P, d, opts.size_cap);
      trace_modes(t, std::min(p, q), std::max(p, q), d, opts.size_cap);
    } else {
      cross_edges.emplace_back(g.a, g.b);
    }
  }

  std::vector<std::size_t> rep(T);
  for (std::size_t v = 0; v < T; ++v) rep[v] = v;
  auto find_rep = [&](std::size_t v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };

  ContractionPlan plan = plan_contraction(dual_graph(surface));
  for (const PlanStep& step : plan.steps) {
    ClusterTensor& A = clusters[step.a];
    ClusterTensor& B = clusters[step.b];
    std::vector<std::size_t> modes_a, modes_b;
    for (const auto& [sa, sb] : cross_edges) {
      std::size_t ra = find_rep(static_cast<std::size_t>(sa.tri));
      std::size_t rb = find_rep(static_cast<std::size_t>(sb.tri));
      int fa = 3 * sa.tri + sa.edge, fb = 3 * sb.tri + sb.edge;
      if (ra == step.a && rb == step.b) {
        modes_a.push_back(mode_of_flag(A, fa));
        modes_b.push_back(mode_of_flag(B, fb));
      } else if (ra == step.b && rb == step.a) {
        modes_a.push_back(mode_of_flag(A, fb));
        modes_b.push_back(mode_of_flag(B, fa));
      }
    }
    for (std::size_t m : modes_a) apply_propagator(A, m, P, d, opts.size_cap);
    clusters[step.a] =
        contract_clusters(A, B, modes_a, modes_b, d, opts.size_cap);
    clusters.erase(step.b);
    rep[step.b] = step.a;
  }

  cplx z = 1.0;
  for (auto& [id, t] : clusters) {
    if (!t.flags.empty())
      fail(Err::OpenSlot, "contraction left open indices on cluster " +
                              std::to_string(id));
    z *= t.data.at(0);
  }
  return z;
}

cplx evaluate_bruteforce(const LabeledSurface& surface, const Algebra& alg,
                         const GAction& action, const OracleOptions& opts) {
  const std::size_t T = surface.num_triangles();
  if (T == 0) return cplx(1.0);
  const std::size_t d = alg.dim();
  const std::size_t nflags = 3 * T;
  double count = std::pow(static_cast<double>(d),
                          static_cast<double>(nflags));
  if (count > opts.guard) {
    std::ostringstream os;
    os << "brute-force sum needs " << count << " colorings, above the guard "
       << opts.guard;
    fail(Err::TooLarge, os.str());
  }

  std::vector<std::vector<cplx>> tensors;
  for (std::size_t t = 0; t < T; ++t)
    tensors.push_back(vertex_tensor(static_cast<int>(t), surface, alg, action));
  const Matrix P = edge_propagator(alg);
  const auto& gluings = surface.gluings();

  std::vector<std::size_t> color(nflags, 0);
  cplx total = 0.0;
  while (true) {
    cplx term = 1.0;
    for (std::size_t t = 0; t < T && term != cplx(0.0); ++t)
      term *= tensors[t][(color[3 * t] * d + color[3 * t + 1]) * d +
                         color[3 * t + 2]];
    if (term != cplx(0.0)) {
      for (const Gluing& g : gluings)
        term *= P(static_cast<Eigen::Index>(
                      color[static_cast<std::size_t>(3 * g.a.tri + g.a.edge)]),
                  static_cast<Eigen::Index>(
                      color[static_cast<std::size_t>(3 * g.b.tri + g.b.edge)]));
      total += term;
    }
    std::size_t pos = nflags;
    while (pos > 0) {
      if (++color[pos - 1] < d) break;
      color[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return total;
}

}  // namespace hss
