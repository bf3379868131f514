#include "morbit/transport.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace morbit {

bool CostMatrix::all_exact() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Num& n) { return n.exact(); });
}

CostMatrix cost_matrix(const System& s, const std::vector<Point>& a,
                       const std::vector<Point>& b) {
  CostMatrix c;
  c.rows = static_cast<int>(a.size());
  c.cols = static_cast<int>(b.size());
  c.entries.reserve(a.size() * b.size());
  for (const Point& pa : a)
    for (const Point& pb : b) c.entries.push_back(dist(s, pa, pb));
  return c;
}

namespace {

template <class T>
struct Dense {
  int n = 0;
  std::vector<T> c;
  const T& at(int i, int j) const {
    return c[static_cast<std::size_t>(i) * n + j];
  }
};

// Jonker-Volgenant style shortest augmenting row algorithm on the 1-based
// dual formulation. Returns row->col matching and the dual potentials.
template <class T>
void jv_solve(const Dense<T>& m, std::vector<int>& row_to_col,
              std::vector<T>& u, std::vector<T>& v, const T& inf) {
  int n = m.n;
  u.assign(n + 1, T(0));
  v.assign(n + 1, T(0));
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<T> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      T delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        T cur = m.at(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  row_to_col.assign(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j]) row_to_col[p[j] - 1] = j - 1;
}

// Lexicographically smallest perfect matching inside the tight subgraph of
// an optimal dual solution. Complementary slackness makes every optimal
// assignment live there, so the greedy row-by-row choice with augmenting-path
// feasibility repair is exact.
template <class T>
struct LexCanon {
  int n;
  std::vector<std::vector<int>> adj;  // tight columns per row, ascending
  std::vector<int> row_of_col;
  std::vector<int> col_of_row;
  std::vector<char> visited_col;
  std::vector<char> row_fixed;

  bool augment(int row, int min_col_excl) {
    for (int j : adj[row]) {
      if (visited_col[j] || j < min_col_excl) continue;
      visited_col[j] = 1;
      int owner = row_of_col[j];
      if (owner == -1 || (!row_fixed[owner] && augment(owner, min_col_excl))) {
        row_of_col[j] = row;
        col_of_row[row] = j;
        return true;
      }
    }
    return false;
  }

  // min_col_excl guards fixed columns: all fixed columns have indices held
  // in fixed_cols and are never revisited because their rows are fixed.
  std::vector<int> run(std::vector<int> initial) {
    col_of_row = initial;
    row_of_col.assign(n, -1);
    for (int i = 0; i < n; ++i) row_of_col[initial[i]] = i;
    row_fixed.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j : adj[i]) {
        if (j >= col_of_row[i]) break;  // current choice already minimal
        if (row_of_col[j] != -1 && row_fixed[row_of_col[j]]) continue;
        // try to steal column j: re-match its current owner elsewhere
        int owner = row_of_col[j];
        int old = col_of_row[i];
        visited_col.assign(n, 0);
        visited_col[j] = 1;
        row_of_col[old] = -1;
        bool ok = owner == -1 ? true : augment(owner, 0);
        if (ok) {
          row_of_col[j] = i;
          col_of_row[i] = j;
          break;
        }
        row_of_col[old] = i;  // revert
      }
      row_fixed[i] = 1;
    }
    return col_of_row;
  }
};

template <class T>
std::vector<int> lex_canonicalize(const Dense<T>& m, const std::vector<int>& match,
                                  const std::vector<T>& u, const std::vector<T>& v,
                                  bool exact) {
  int n = m.n;
  LexCanon<T> canon;
  canon.n = n;
  canon.adj.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      T slack = m.at(i, j) - u[i + 1] - v[j + 1];
      bool tight;
      if (exact) {
        tight = slack == T(0);
      } else {
        double s = static_cast<double>(slack);
        double scale = 1.0 + std::abs(static_cast<double>(m.at(i, j)));
        tight = std::abs(s) <= 1e-12 * scale;
      }
      if (tight) canon.adj[i].push_back(j);
    }
  }
  return canon.run(match);
}

template <class T>
AssignmentResult solve_assignment(Dense<T> m, const T& inf, bool exact) {
  std::vector<int> match;
  std::vector<T> u, v;
  jv_solve(m, match, u, v, inf);
  std::vector<int> canon = lex_canonicalize(m, match, u, v, exact);
  T total(0);
  for (int i = 0; i < m.n; ++i) total += m.at(i, canon[i]);
  AssignmentResult out;
  out.perm = std::move(canon);
  if constexpr (std::is_same_v<T, Rat>) {
    out.cost = Num(Rat(total / m.n));
  } else {
    out.cost = Num(total / m.n);
  }
  return out;
}

}  // namespace

AssignmentResult assignment_cost(const CostMatrix& c, int cap) {
  if (c.rows != c.cols) throw Error("assignment needs a square cost matrix");
  if (c.rows < 1) throw Error("assignment on an empty matrix");
  if (c.rows > cap)
    throw Error("assignment size " + std::to_string(c.rows) +
                " exceeds cap " + std::to_string(cap));
  int n = c.rows;
  if (c.all_exact()) {
    Dense<Rat> m;
    m.n = n;
    m.c.reserve(c.entries.size());
    Rat cmax(0);
    for (const Num& e : c.entries) {
      m.c.push_back(e.rat());
      if (m.c.back() > cmax) cmax = m.c.back();
    }
    Rat inf = (cmax + 1) * (3 * n + 3);
    return solve_assignment(std::move(m), inf, true);
  }
  Dense<double> m;
  m.n = n;
  m.c.reserve(c.entries.size());
  for (const Num& e : c.entries) m.c.push_back(e.value());
  return solve_assignment(std::move(m), std::numeric_limits<double>::infinity(),
                          false);
}

namespace {

// Dense successive-shortest-paths min cost flow specialized to the bipartite
// transport instance: sources with integer supplies, sinks with integer
// demands, every source-sink arc present with unlimited capacity. Each
// augmentation saturates a node, so there are at most n + m of them.
// Johnson potentials keep every residual reduced cost nonnegative; after a
// round, potentials advance by the Dijkstra label capped at the chosen
// sink's label (the cap keeps labels of nodes beyond the sink consistent).
template <class T>
struct BipartiteFlow {
  int n, m;
  const Dense<T>* cost;  // n x m, rectangular stride
  std::vector<long long> supply, demand;
  std::vector<std::vector<long long>> flow;

  const T& c(int i, int j) const {
    return cost->c[static_cast<std::size_t>(i) * m + j];
  }

  void run() {
    flow.assign(n, std::vector<long long>(m, 0));
    int V = n + m;  // nodes: 0..n-1 sources, n..n+m-1 sinks
    std::vector<T> phi(V, T(0));
    auto rc_fwd = [&](int i, int j) { return c(i, j) + phi[i] - phi[n + j]; };
    auto rc_back = [&](int i, int j) { return phi[n + j] - phi[i] - c(i, j); };
    long long remaining = 0;
    for (long long s : supply) remaining += s;
    while (remaining > 0) {
      std::vector<T> dist_(V, T(0));
      std::vector<char> reached(V, 0), done(V, 0);
      std::vector<int> prev(V, -1);
      for (int i = 0; i < n; ++i)
        if (supply[i] > 0) reached[i] = 1;
      for (;;) {
        int best = -1;
        for (int x = 0; x < V; ++x)
          if (reached[x] && !done[x] && (best == -1 || dist_[x] < dist_[best]))
            best = x;
        if (best == -1) break;
        done[best] = 1;
        if (best < n) {
          int i = best;
          for (int j = 0; j < m; ++j) {
            int t = n + j;
            if (done[t]) continue;
            T nd = dist_[i] + rc_fwd(i, j);
            if (!reached[t] || nd < dist_[t]) {
              reached[t] = 1;
              dist_[t] = nd;
              prev[t] = i;
            }
          }
        } else {
          int j = best - n;
          for (int i = 0; i < n; ++i) {
            if (done[i] || flow[i][j] <= 0) continue;
            T nd = dist_[best] + rc_back(i, j);
            if (!reached[i] || nd < dist_[i]) {
              reached[i] = 1;
              dist_[i] = nd;
              prev[i] = n + j;
            }
          }
        }
      }
      int sink = -1;
      for (int j = 0; j < m; ++j) {
        int t = n + j;
        if (demand[j] > 0 && reached[t] && (sink == -1 || dist_[t] < dist_[sink]))
          sink = t;
      }
      if (sink == -1) throw Error("transport instance is infeasible");
      T dt = dist_[sink];
      long long push = demand[sink - n];
      int root = sink;
      for (int x = sink; prev[x] != -1; x = prev[x]) {
        int p = prev[x];
        if (!(p < n && x >= n)) push = std::min(push, flow[x][p - n]);
        root = p;
      }
      push = std::min(push, supply[root]);
      for (int x = sink; prev[x] != -1; x = prev[x]) {
        int p = prev[x];
        if (p < n && x >= n)
          flow[p][x - n] += push;
        else
          flow[x][p - n] -= push;
      }
      supply[root] -= push;
      demand[sink - n] -= push;
      remaining -= push;
      for (int x = 0; x < V; ++x)
        phi[x] += reached[x] ? std::min(dist_[x], dt) : dt;
    }
  }
};

template <class T>
TransportPlan flow_plan(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                        const CostMatrix& cm, long long scale) {
  int n = static_cast<int>(mu.size());
  int m = static_cast<int>(nu.size());
  BipartiteFlow<T> f;
  f.n = n;
  f.m = m;
  Dense<T> dm;
  dm.n = n;
  dm.c.reserve(cm.entries.size());
  for (const Num& e : cm.entries) {
    if constexpr (std::is_same_v<T, Rat>)
      dm.c.push_back(e.rat());
    else
      dm.c.push_back(e.value());
  }
  f.cost = &dm;
  auto scaled = [&](const Rat& w) {
    Rat s = w * scale;
    if (denominator(s) != 1) throw Error("weight scaling lost exactness");
    return numerator(s).convert_to<long long>();
  };
  for (const Rat& w : mu.weights) f.supply.push_back(scaled(w));
  for (const Rat& w : nu.weights) f.demand.push_back(scaled(w));
  f.run();
  TransportPlan plan;
  Num total(Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (f.flow[i][j] == 0) continue;
      Rat mass(f.flow[i][j], scale);
      plan.arcs.push_back({i, j, mass});
      total += Num(mass) * cm.at(i, j);
    }
  }
  plan.cost = total;
  return plan;
}

}  // namespace

TransportPlan w1_discrete(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                          const System& s, long long scale_cap) {
  Rat sum_mu = std::accumulate(mu.weights.begin(), mu.weights.end(), Rat(0));
  Rat sum_nu = std::accumulate(nu.weights.begin(), nu.weights.end(), Rat(0));
  if (sum_mu != 1 || sum_nu != 1)
    throw Error("transport needs probability measures (weight sums " +
                rat_to_string(sum_mu) + ", " + rat_to_string(sum_nu) + ")");
  BigInt l(1);
  for (const Rat& w : mu.weights) l = big_lcm(l, denominator(w));
  for (const Rat& w : nu.weights) l = big_lcm(l, denominator(w));
  if (l > scale_cap)
    throw Error("weight denominators need scale " + l.str() +
                " beyond cap " + std::to_string(scale_cap));
  long long scale = l.convert_to<long long>();
  CostMatrix cm = cost_matrix(s, mu.support, nu.support);
  if (cm.all_exact()) return flow_plan<Rat>(mu, nu, cm, scale);
  return flow_plan<double>(mu, nu, cm, scale);
}

Num w1_sorted_interval(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu) {
  if (mu.size() != nu.size())
    throw Error("sorted 1-D transport needs equal atom counts");
  if (mu.size() == 0) throw Error("empty empirical measure");
  auto values = [](const EmpiricalMeasure& m) {
    std::vector<Num> v;
    v.reserve(m.size());
    for (const Point& p : m.atoms) {
      const auto* ip = std::get_if<IntervalPoint>(&p);
      if (!ip) throw Error("sorted 1-D transport needs interval points");
      v.push_back(ip->value);
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<Num> a = values(mu), b = values(nu);
  Num total = a.front().exact() && b.front().exact() ? Num(Rat(0)) : Num(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) total += num_abs(a[i] - b[i]);
  return total / Num(static_cast<long long>(a.size()));
}

}  // namespace morbit
