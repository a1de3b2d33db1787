#include "togglekit/ehrhart.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "togglekit/chain_stats.hpp"

namespace togglekit {

namespace {

void chains_of_rect(const MaxRect& r, RectCoord at, std::vector<RectCoord>& path,
                    std::set<std::vector<RectCoord>>& out) {
  path.push_back(at);
  if (at.i == r.i2 && at.j == r.j2) {
    out.insert(path);
  } else {
    if (at.i < r.i2) chains_of_rect(r, {at.i + 1, at.j}, path, out);
    if (at.j < r.j2) chains_of_rect(r, {at.i, at.j + 1}, path, out);
  }
  path.pop_back();
}

// G_M adjacency: distinct cells comparable in the product order whose spanned
// rectangle lies inside M.
bool gm_edge(const MoonPoly& m, RectCoord a, RectCoord b) {
  if (a == b) return false;
  if (!((a.i <= b.i && a.j <= b.j) || (b.i <= a.i && b.j <= a.j))) return false;
  for (int i = std::min(a.i, b.i); i <= std::max(a.i, b.i); ++i)
    for (int j = std::min(a.j, b.j); j <= std::max(a.j, b.j); ++j)
      if (!m.contains({i, j})) return false;
  return true;
}

void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint64_t px = p | x;
  int pivot = -1, best = -1;
  for (int v = 0; v < 64; ++v)
    if (px >> v & 1) {
      int deg = __builtin_popcountll(p & adj[v]);
      if (deg > best) {
        best = deg;
        pivot = v;
      }
    }
  std::uint64_t candidates = p & ~adj[pivot];
  for (int v = 0; v < 64; ++v)
    if (candidates >> v & 1) {
      std::uint64_t bit = 1ULL << v;
      bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
      p &= ~bit;
      x |= bit;
    }
}

// Descent-count distribution over the linear extensions of the cell poset of
// lambda, relative to the lexicographic natural labeling. States are order
// ideals, so the table stays small even when extensions are numerous.
std::vector<Int> descent_distribution(const std::vector<int>& lambda) {
  std::vector<RectCoord> cells = partition_poly(lambda).cells;  // sorted lex
  int n = static_cast<int>(cells.size());
  std::vector<Int> dist(std::max(n, 1), 0);
  if (n == 0) return dist;
  if (n > 62) throw std::length_error("shape too large for extension enumeration");

  auto label_of = [&](RectCoord p) {
    return static_cast<int>(std::lower_bound(cells.begin(), cells.end(), p) - cells.begin());
  };
  std::vector<std::uint64_t> preds(n, 0);
  for (int c = 0; c < n; ++c) {
    RectCoord p = cells[c];
    if (RectCoord up{p.i - 1, p.j}; std::binary_search(cells.begin(), cells.end(), up))
      preds[c] |= 1ULL << label_of(up);
    if (RectCoord left{p.i, p.j - 1}; std::binary_search(cells.begin(), cells.end(), left))
      preds[c] |= 1ULL << label_of(left);
  }

  auto key = [n](std::uint64_t mask, int last, int des) {
    return (mask * static_cast<std::uint64_t>(n) + last) * static_cast<std::uint64_t>(n) + des;
  };
  std::unordered_map<std::uint64_t, Int> level;
  for (int c = 0; c < n; ++c)
    if (preds[c] == 0) level[key(1ULL << c, c, 0)] = 1;

  for (int placed = 1; placed < n; ++placed) {
    std::unordered_map<std::uint64_t, Int> next;
    for (const auto& [k, count] : level) {
      int des = static_cast<int>(k % n);
      int last = static_cast<int>((k / n) % n);
      std::uint64_t mask = k / n / n;
      for (int c = 0; c < n; ++c) {
        if (mask >> c & 1) continue;
        if ((preds[c] & mask) != preds[c]) continue;
        next[key(mask | 1ULL << c, c, des + (c < last ? 1 : 0))] += count;
      }
    }
    level = std::move(next);
  }
  for (const auto& [k, count] : level) dist[k % n] += count;
  return dist;
}

Int binomial(const Int& top, unsigned long n) {
  if (top < 0) return 0;
  Int out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), n);
  return out;
}

std::vector<RectCoord> mask_to_cells(std::uint64_t mask, const std::vector<RectCoord>& cells) {
  std::vector<RectCoord> out;
  for (size_t v = 0; v < cells.size(); ++v)
    if (mask >> v & 1) out.push_back(cells[v]);
  return out;
}

void oracle_guard(const MoonPoly& m, int k) {
  if (m.size() > max_cells_guard(8))
    throw std::length_error("dilate oracle refuses shapes beyond the cell guard");
  if (k > 5) throw std::length_error("dilate oracle refuses k > 5");
}

// Depth-first enumeration of nonnegative integer fillings with all clique
// sums <= k; `sink` sees each complete assignment.
template <typename Sink>
void enumerate_pruned(const MoonPoly& m, int k, Sink&& sink) {
  QstabDescription q = qstab(m);
  const std::vector<RectCoord>& cells = m.cells;
  int n = static_cast<int>(cells.size());

  std::vector<std::vector<int>> cliques_at(n);
  for (size_t c = 0; c < q.cliques.size(); ++c)
    for (RectCoord p : q.cliques[c]) {
      int idx = static_cast<int>(std::lower_bound(cells.begin(), cells.end(), p) - cells.begin());
      cliques_at[idx].push_back(static_cast<int>(c));
    }

  std::vector<int> values(n, 0);
  std::vector<int> clique_sum(q.cliques.size(), 0);
  auto rec = [&](auto&& self, int at) -> void {
    if (at == n) {
      sink(values);
      return;
    }
    for (int v = 0; v <= k; ++v) {
      values[at] = v;
      bool ok = true;
      for (int c : cliques_at[at]) {
        clique_sum[c] += v;
        if (clique_sum[c] > k) ok = false;
      }
      if (ok) self(self, at + 1);
      for (int c : cliques_at[at]) clique_sum[c] -= v;
    }
    values[at] = 0;
  };
  rec(rec, 0);
}

int rank_of(std::vector<std::vector<Rat>> rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank) || rows[r][col] == 0) continue;
      Rat factor = rows[r][col] / rows[rank][col];
      for (size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

QstabDescription qstab(const MoonPoly& m) {
  std::set<std::vector<RectCoord>> cliques;
  std::vector<RectCoord> path;
  for (const MaxRect& rect : maximal_rectangles(m))
    chains_of_rect(rect, {rect.i1, rect.j1}, path, cliques);
  QstabDescription out;
  out.poly = m;
  for (std::vector<RectCoord> clique : cliques) {
    std::sort(clique.begin(), clique.end());
    out.cliques.push_back(std::move(clique));
  }
  std::sort(out.cliques.begin(), out.cliques.end());
  out.cliques.erase(std::unique(out.cliques.begin(), out.cliques.end()), out.cliques.end());
  return out;
}

std::vector<std::vector<RectCoord>> cliques_brute_force(const MoonPoly& m) {
  if (!validate_moon(m).ok) throw std::domain_error("not a moon polyomino");
  int n = m.size();
  if (n > 62) throw std::length_error("shape too large for clique enumeration");
  std::vector<std::uint64_t> adj(64, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (gm_edge(m, m.cells[a], m.cells[b])) adj[a] |= 1ULL << b;

  std::vector<std::uint64_t> masks;
  std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~0ULL : (1ULL << n) - 1);
  if (n > 0) bron_kerbosch(adj, 0, all, 0, masks);

  std::vector<std::vector<RectCoord>> out;
  for (std::uint64_t mask : masks) out.push_back(mask_to_cells(mask, m.cells));
  std::sort(out.begin(), out.end());
  return out;
}

Int count_dilate(const MoonPoly& m, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  std::vector<int> lambda = straighten(m).lambda;
  int n = m.size();
  if (n == 0) return 1;
  std::vector<Int> dist = descent_distribution(lambda);
  Int total = 0;
  for (int d = 0; d < static_cast<int>(dist.size()); ++d) {
    if (dist[d] == 0) continue;
    total += dist[d] * binomial(Int(k + n - d), static_cast<unsigned long>(n));
  }
  return total;
}

Int count_dilate_oracle(const MoonPoly& m, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  oracle_guard(m, k);
  Int count = 0;
  enumerate_pruned(m, k, [&](const std::vector<int>&) { ++count; });
  return count;
}

std::vector<Filling> enumerate_dilate(const MoonPoly& m, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  oracle_guard(m, k);
  std::vector<Filling> out;
  enumerate_pruned(m, k, [&](const std::vector<int>& values) {
    std::map<RectCoord, Rat> vals;
    for (size_t t = 0; t < values.size(); ++t) vals[m.cells[t]] = Rat(values[t]);
    out.push_back(Filling::of(m, std::move(vals)));
  });
  return out;
}

std::vector<Rat> interpolate_counts(const std::vector<Int>& counts, int degree) {
  if (degree < 0 || static_cast<int>(counts.size()) < degree + 1)
    throw std::invalid_argument("need counts for k = 0..degree");
  std::vector<Rat> total(degree + 1, Rat(0));
  for (int i = 0; i <= degree; ++i) {
    std::vector<Rat> basis{Rat(1)};
    Rat denom(1);
    for (int j = 0; j <= degree; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (size_t t = 0; t < basis.size(); ++t) {
        next[t] += basis[t] * Rat(-j);
        next[t + 1] += basis[t];
      }
      basis = std::move(next);
      denom *= Rat(i - j);
    }
    Rat scale = Rat(counts[i]) / denom;
    for (size_t t = 0; t < basis.size(); ++t) total[t] += basis[t] * scale;
  }
  return total;
}

Rat eval_poly(const std::vector<Rat>& coefficients, int k) {
  Rat acc(0);
  for (size_t t = coefficients.size(); t-- > 0;) acc = acc * Rat(k) + coefficients[t];
  return acc;
}

CollapseReport period_collapse_check(const MoonPoly& m, int K) {
  int d = m.size();
  if (K < 0) K = d + 3;
  if (K < d + 1) throw std::invalid_argument("K must exceed the dimension");
  std::vector<Int> counts;
  for (int k = 0; k <= d; ++k) counts.push_back(count_dilate(m, k));
  std::vector<Rat> coeffs = interpolate_counts(counts, d);

  CollapseReport report;
  for (int k = d + 1; k <= K; ++k) {
    Rat predicted = eval_poly(coeffs, k);
    Int actual = count_dilate(m, k);
    report.predicted.push_back(predicted.get_num());
    report.actual.push_back(actual);
    if (predicted != Rat(actual) && report.ok) {
      report.ok = false;
      report.first_mismatch = k;
    }
  }
  return report;
}

Int syt_count(const std::vector<int>& lambda) {
  int n = 0;
  for (int part : lambda) n += part;
  if (n == 0) return 1;
  std::vector<int> conj(lambda.empty() ? 0 : lambda[0], 0);
  for (int part : lambda)
    for (int j = 0; j < part; ++j) ++conj[j];

  Int hooks = 1;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) {
      int hook = (lambda[i] - j) + (conj[j - 1] - static_cast<int>(i) - 1) + 1;
      hooks *= hook;
    }
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  return fact / hooks;
}

SytReport syt_volume_check(const MoonPoly& m) {
  int d = m.size();
  std::vector<Int> counts;
  for (int k = 0; k <= d; ++k) counts.push_back(count_dilate(m, k));
  std::vector<Rat> coeffs = interpolate_counts(counts, d);

  SytReport report;
  report.syt = syt_count(straighten(m).lambda);
  report.leading = coeffs.empty() ? Rat(0) : coeffs.back();
  Int fact(1);
  if (d > 0) mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
  report.scaled_leading = report.leading * Rat(fact);
  report.ok = report.scaled_leading == Rat(report.syt);
  return report;
}

VertexReport vertex_certificate(const MoonPoly& m, const std::map<RectCoord, Rat>& point) {
  if (static_cast<int>(point.size()) != m.size())
    throw std::invalid_argument("point dimension does not match the polyomino");
  for (const auto& [p, v] : point)
    if (!m.contains(p)) throw std::invalid_argument("point coordinate outside the polyomino");

  QstabDescription q = qstab(m);
  int n = m.size();
  auto index_of = [&](RectCoord p) {
    return static_cast<int>(std::lower_bound(m.cells.begin(), m.cells.end(), p) -
                            m.cells.begin());
  };

  VertexReport report;
  report.member = true;
  report.integral = true;
  std::vector<std::vector<Rat>> tight;

  for (RectCoord p : m.cells) {
    const Rat& v = point.at(p);
    if (v < 0) report.member = false;
    if (v.get_den() != 1) report.integral = false;
    if (v == 0) {
      std::vector<Rat> row(n, Rat(0));
      row[index_of(p)] = Rat(1);
      tight.push_back(std::move(row));
    }
  }
  for (const std::vector<RectCoord>& clique : q.cliques) {
    Rat sum(0);
    for (RectCoord p : clique) sum += point.at(p);
    if (sum > 1) report.member = false;
    if (sum == 1) {
      std::vector<Rat> row(n, Rat(0));
      for (RectCoord p : clique) row[index_of(p)] = Rat(1);
      tight.push_back(std::move(row));
    }
  }
  report.tight_rank = rank_of(std::move(tight));
  report.vertex = report.member && report.tight_rank == n;
  return report;
}

EhrhartTable ehrhart_table(const MoonPoly& m, int max_k, bool use_oracle) {
  if (max_k < 0) throw std::invalid_argument("max-k must be nonnegative");
  EhrhartTable table;
  for (int k = 0; k <= max_k; ++k)
    table.counts.push_back(use_oracle ? count_dilate_oracle(m, k) : count_dilate(m, k));
  if (max_k >= m.size() && m.size() > 0)
    table.coefficients = interpolate_counts(table.counts, m.size());
  table.syt = syt_count(straighten(m).lambda);
  return table;
}

}  // namespace togglekit
