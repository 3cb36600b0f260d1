#include "tnomial/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <string>

namespace tnomial::oracle {

namespace {

void charge(std::uint64_t items, std::uint64_t budget, const char* what) {
  if (items > budget) {
    throw BudgetExceeded(std::string(what) + ": enumeration of " + std::to_string(items) +
                         " objects exceeds the budget of " + std::to_string(budget));
  }
}

void require_bound(bool ok, const std::string& message) {
  if (!ok) {
    throw BudgetExceeded(message);
  }
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) {
      return UINT64_MAX;
    }
    r *= base;
  }
  return r;
}

// Visits every index sequence 0 <= b_1 (<= or <) b_2 ... < n of length k and
// accumulates the product of the chosen weights.
void enumerate_selections(const std::vector<BigInt>& w, long k, bool repetition, long start, const BigInt& product,
                          BigInt& total) {
  if (k == 0) {
    total += product;
    return;
  }
  const long n = static_cast<long>(w.size());
  for (long b = start; b < n; ++b) {
    enumerate_selections(w, k - 1, repetition, repetition ? b : b + 1, product * w[b], total);
  }
}

bool is_acyclic(long n, const std::vector<std::pair<int, int>>& arcs, const std::vector<int>& mult) {
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (mult[a] != 0) {
      ++indegree[arcs[a].second];
    }
  }
  std::vector<int> ready;
  for (long v = 0; v < n; ++v) {
    if (indegree[v] == 0) {
      ready.push_back(static_cast<int>(v));
    }
  }
  long removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      if (mult[a] != 0 && arcs[a].first == v && --indegree[arcs[a].second] == 0) {
        ready.push_back(arcs[a].second);
      }
    }
  }
  return removed == n;
}

// Advances a base-`radix` odometer; false once it wraps to all zeros.
bool advance(std::vector<int>& digits, int radix) {
  for (auto& d : digits) {
    if (++d < radix) {
      return true;
    }
    d = 0;
  }
  return false;
}

}  // namespace

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("TNOMIAL_MAX_BUDGET");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultBudget;
  }
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParameterError("TNOMIAL_MAX_BUDGET must be a nonnegative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ParameterError("TNOMIAL_MAX_BUDGET out of range: " + text);
  }
}

BoxWeights::BoxWeights(std::int64_t p, std::int64_t q, long n) : p_(p), q_(q) {
  if (p < 1 || q < 1) {
    throw ParameterError("box weights need p, q >= 1");
  }
  if (n < 1) {
    throw ParameterError("box weights need n >= 1");
  }
  for (long i = 1; i <= n; ++i) {
    weights_.push_back(ipow(q, static_cast<std::uint64_t>(i - 1)) * ipow(p, static_cast<std::uint64_t>(n - i)));
  }
}

BigInt count_selections(const BoxWeights& w, long k, bool repetition, std::uint64_t budget) {
  const long n = w.n();
  require_bound(n <= 8 && k <= 6, "selection oracle limited to n <= 8, k <= 6");
  require_bound(w.p() <= 3 && w.q() <= 3, "selection oracle limited to p, q <= 3");
  if (k < 0) {
    throw ParameterError("k must be nonnegative");
  }
  const BigInt items = repetition ? binomial(n + k - 1, k) : binomial(n, k);
  charge(static_cast<std::uint64_t>(items), budget, "count_selections");
  BigInt total = 0;
  enumerate_selections(w.weights(), k, repetition, 0, BigInt(1), total);
  return total;
}

BigInt count_bipartite_multigraphs(long alpha, long n, long k, std::uint64_t budget) {
  if (alpha < 1 || n < 1 || k < 0 || k > n) {
    throw ParameterError("bipartite oracle needs alpha >= 1, n >= 1, 0 <= k <= n");
  }
  require_bound(n <= 5 && alpha <= 3, "bipartite oracle limited to n <= 5, alpha <= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  const std::uint64_t graphs = saturating_pow(static_cast<std::uint64_t>(alpha), pairs.size());
  charge(graphs * static_cast<std::uint64_t>(binomial(n, k)), budget, "count_bipartite_multigraphs");

  BigInt count = 0;
  for (unsigned side = 0; side < (1U << n); ++side) {
    if (std::popcount(side) != k) {
      continue;
    }
    std::vector<int> mult(pairs.size(), 0);
    do {
      bool bipartite = true;
      for (std::size_t e = 0; e < pairs.size() && bipartite; ++e) {
        const bool a = (side >> pairs[e].first) & 1U;
        const bool b = (side >> pairs[e].second) & 1U;
        bipartite = mult[e] == 0 || a != b;
      }
      if (bipartite) {
        ++count;
      }
    } while (advance(mult, static_cast<int>(alpha)));
  }
  return count;
}

BigInt count_acyclic_multidigraphs(long p, long n, AcyclicRoute route, std::uint64_t budget) {
  if (p < 1 || n < 0) {
    throw ParameterError("acyclic oracle needs p >= 1 and n >= 0");
  }
  if (route == AcyclicRoute::recurrence) {
    require_bound(n <= 12, "acyclic recurrence limited to n <= 12");
    std::vector<BigInt> a{1};
    for (long m = 1; m <= n; ++m) {
      BigInt acc = 0;
      for (long k = 1; k <= m; ++k) {
        BigInt term = binomial(m, k) * ipow(p, static_cast<std::uint64_t>(k * (m - k))) * a[m - k];
        acc += (k % 2 == 1) ? term : BigInt(-term);
      }
      a.push_back(acc);
    }
    return a[n];
  }
  require_bound(n <= 4, "acyclic brute force limited to n <= 4");
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        arcs.emplace_back(i, j);
      }
    }
  }
  charge(saturating_pow(static_cast<std::uint64_t>(p), arcs.size()), budget, "count_acyclic_multidigraphs");
  BigInt count = 0;
  std::vector<int> mult(arcs.size(), 0);
  do {
    if (is_acyclic(n, arcs, mult)) {
      ++count;
    }
  } while (advance(mult, static_cast<int>(p)));
  return count;
}

TriMatrix::TriMatrix(std::size_t order) {
  rows_.reserve(order);
  for (std::size_t i = 0; i < order; ++i) {
    rows_.emplace_back(i + 1, Rational(0));
  }
}

Rational TriMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= order() || j >= order()) {
    throw ParameterError("matrix index out of range");
  }
  return j > i ? Rational(0) : rows_[i][j];
}

void TriMatrix::set(std::size_t i, std::size_t j, Rational v) {
  if (i >= order() || j > i) {
    throw ParameterError("only lower-triangular entries can be set");
  }
  rows_[i][j] = std::move(v);
}

TriMatrix TriMatrix::identity(std::size_t order) {
  TriMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) {
    m.set(i, i, 1);
  }
  return m;
}

TriMatrix operator*(const TriMatrix& a, const TriMatrix& b) {
  if (a.order() != b.order()) {
    throw ParameterError("matrix orders differ");
  }
  TriMatrix c(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rational acc = 0;
      for (std::size_t l = j; l <= i; ++l) {
        acc += a.rows_[i][l] * b.rows_[l][j];
      }
      c.rows_[i][j] = std::move(acc);
    }
  }
  return c;
}

TriMatrix invert_triangular(const TriMatrix& m) {
  const std::size_t order = m.order();
  TriMatrix inv(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (m.at(i, i) == Rational(0)) {
      throw SingularMatrix("zero diagonal entry at " + std::to_string(i));
    }
  }
  for (std::size_t j = 0; j < order; ++j) {
    inv.set(j, j, Rational(1) / m.at(j, j));
    for (std::size_t i = j + 1; i < order; ++i) {
      Rational acc = 0;
      for (std::size_t l = j; l < i; ++l) {
        acc += m.at(i, l) * inv.at(l, j);
      }
      inv.set(i, j, -acc / m.at(i, i));
    }
  }
  return inv;
}

BigInt volume_ratio(std::span<const BigInt> terms, long k, long n) {
  if (k < 1 || n < k) {
    throw ParameterError("volume ratio needs 1 <= k <= n");
  }
  if (static_cast<long>(terms.size()) <= n) {
    throw ParameterError("volume ratio needs terms up to index n");
  }
  const long m = n - k + 1;
  BigInt box = 1;
  BigInt brick = 1;
  for (long s = k; s <= n; ++s) {
    if (terms[s] <= 0) {
      throw ParameterError("volume ratio needs positive sequence terms");
    }
    box *= terms[s];
  }
  for (long s = 1; s <= m; ++s) {
    if (terms[s] <= 0) {
      throw ParameterError("volume ratio needs positive sequence terms");
    }
    brick *= terms[s];
  }
  return exact_div(box, brick);
}

BigInt volume_ratio(const SeqParams& params, long k, long n) {
  const auto t = terms(params, n);
  return volume_ratio(t, k, n);
}

}  // namespace tnomial::oracle
