#include "tnomial/coeff.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace tnomial {

namespace {

void require_ordered(long n, long k) {
  if (k < 0 || n < k) {
    throw ParameterError("coefficient needs n >= k >= 0, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

std::uint64_t u(long v) { return static_cast<std::uint64_t>(v); }

}  // namespace

RecurrenceTriangle::RecurrenceTriangle(SeqParams params, long n_max) : params_(params), n_max_(n_max) {
  if (n_max < 0) {
    throw ParameterError("triangle bound must be nonnegative");
  }
}

void RecurrenceTriangle::extend_to(long n) const {
  const BigInt p = params_.p;
  const BigInt q = params_.q;
  if (rows_.empty()) {
    rows_.push_back({BigInt(1)});
  }
  for (long m = static_cast<long>(rows_.size()); m <= n; ++m) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
    row.front() = 1;
    row.back() = 1;
    for (long k = 1; k < m; ++k) {
      row[k] = ipow(p, u(m - k)) * prev[k - 1] + ipow(q, u(k)) * prev[k];
    }
    rows_.push_back(std::move(row));
  }
}

BigInt RecurrenceTriangle::at(long n, long k) const {
  if (n > n_max_) {
    throw ParameterError("n=" + std::to_string(n) + " exceeds the memo bound " + std::to_string(n_max_));
  }
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  std::lock_guard lock(mutex_);
  if (static_cast<long>(rows_.size()) <= n) {
    extend_to(n);
  }
  return rows_[n][k];
}

bool factorial_route_defined(const SeqParams& params, long n, long k) {
  for (long i = 1; i <= std::max(k, n - k); ++i) {
    if (term_closed(params, i) == 0) {
      return false;
    }
  }
  return true;
}

bool product_route_defined(const SeqParams& params, long k) {
  if (params.p == params.q) {
    return true;
  }
  for (long i = 1; i <= k; ++i) {
    if (ipow(params.p, u(i)) == ipow(params.q, u(i))) {
      return false;
    }
  }
  return true;
}

bool partial_fractions_defined(const SeqParams& params, long k) {
  if (params.p == params.q || k < 0) {
    return false;
  }
  const auto mu = partial_fraction_nodes(params, k);
  for (long i = 0; i <= k; ++i) {
    for (long j = i + 1; j <= k; ++j) {
      if (mu[i] == mu[j]) {
        return false;
      }
    }
  }
  return true;
}

BigInt coeff_factorial(const CoeffQuery& query) {
  require_ordered(query.n, query.k);
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (long i = 1; i <= query.n; ++i) {
    numerator *= term_closed(query.params, i);
  }
  for (long i = 1; i <= query.k; ++i) {
    denominator *= term_closed(query.params, i);
  }
  for (long i = 1; i <= query.n - query.k; ++i) {
    denominator *= term_closed(query.params, i);
  }
  if (denominator == 0) {
    throw DegenerateParameters("factorial ratio undefined: a sequence term below n is zero for " +
                               query.params.str());
  }
  return exact_div(numerator, denominator);
}

BigInt coeff_recurrence(const CoeffQuery& query) {
  require_ordered(query.n, query.k);
  // The recurrence does not involve the scale.
  thread_local std::map<std::pair<std::int64_t, std::int64_t>, RecurrenceTriangle> cache;
  auto key = std::make_pair(query.params.p, query.params.q);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.try_emplace(key, SeqParams(query.params.p, query.params.q)).first;
  }
  return it->second.at(query.n, query.k);
}

BiPoly coeff_symbolic(long n, long k) {
  require_ordered(n, k);
  thread_local std::vector<std::vector<BiPoly>> rows;
  if (static_cast<long>(rows.size()) <= n) {
    rows = tnomial_triangle(BiPoly::p(), BiPoly::q(), n);
  }
  return rows[n][k];
}

BigInt coeff_product(const CoeffQuery& query) {
  require_ordered(query.n, query.k);
  const BigInt p = query.params.p;
  const BigInt q = query.params.q;
  const long n = query.n;
  const long k = query.k;
  if (p == q) {
    return binomial(n, k) * ipow(p, u(k) * u(n - k));
  }
  Rational acc = 1;
  for (long i = 1; i <= k; ++i) {
    const BigInt den = ipow(p, u(i)) - ipow(q, u(i));
    if (den == 0) {
      throw DegenerateParameters("product formula undefined: p^" + std::to_string(i) + " = q^" + std::to_string(i) +
                                 " for " + query.params.str());
    }
    acc *= Rational(ipow(p, u(n - i + 1)) - ipow(q, u(n - i + 1)), den);
  }
  return acc.to_integer();
}

namespace {

std::vector<BigInt> box_weights(const SeqParams& params, long n) {
  std::vector<BigInt> lambda;
  lambda.reserve(u(n));
  for (long i = 1; i <= n; ++i) {
    lambda.push_back(ipow(params.q, u(i - 1)) * ipow(params.p, u(n - i)));
  }
  return lambda;
}

}  // namespace

BigInt coeff_lambda_multiset(const SeqParams& params, long n, long k) {
  if (n < 1 || k < 0) {
    throw ParameterError("multiset form needs n >= 1 and k >= 0");
  }
  // complete homogeneous symmetric polynomial h_k(lambda_1..lambda_n)
  std::vector<BigInt> h(u(k) + 1, 0);
  h[0] = 1;
  for (const auto& lambda : box_weights(params, n)) {
    for (long j = 1; j <= k; ++j) {
      h[j] += lambda * h[j - 1];
    }
  }
  return h[k];
}

BigInt coeff_lambda_subset(const SeqParams& params, long n, long k) {
  if (n < 1) {
    throw ParameterError("subset form needs n >= 1");
  }
  require_ordered(n, k);
  // elementary symmetric polynomial e_k(lambda_1..lambda_n)
  std::vector<BigInt> e(u(k) + 1, 0);
  e[0] = 1;
  for (const auto& lambda : box_weights(params, n)) {
    for (long j = k; j >= 1; --j) {
      e[j] += lambda * e[j - 1];
    }
  }
  return e[k];
}

std::vector<BigInt> partial_fraction_nodes(const SeqParams& params, long k) {
  if (k < 0) {
    throw ParameterError("k must be nonnegative");
  }
  std::vector<BigInt> mu;
  for (long s = 0; s <= k; ++s) {
    mu.push_back(ipow(params.q, u(s)) * ipow(params.p, u(k - s)));
  }
  return mu;
}

Rational coeff_partial_fractions(const SeqParams& params, long n, long k) {
  if (params.p == params.q) {
    throw DegenerateParameters("partial-fraction form needs p != q");
  }
  const auto mu = partial_fraction_nodes(params, k);
  for (long i = 0; i <= k; ++i) {
    for (long j = i + 1; j <= k; ++j) {
      if (mu[i] == mu[j]) {
        throw DegenerateParameters("partial-fraction nodes coincide: mu_" + std::to_string(i) + " = mu_" +
                                   std::to_string(j) + " = " + mu[i].str() + " for " + params.str());
      }
    }
  }
  Rational sum = 0;
  for (long i = 0; i <= k; ++i) {
    Rational power;
    if (n >= 0) {
      power = ipow(mu[i], u(n));
    } else {
      if (mu[i] == 0) {
        throw DegenerateParameters("negative power of a zero node");
      }
      power = Rational(1, ipow(mu[i], u(-n)));
    }
    BigInt den = 1;
    for (long j = 0; j < i; ++j) {
      den *= mu[i] - mu[j];
    }
    for (long j = i + 1; j <= k; ++j) {
      den *= mu[j] - mu[i];
    }
    Rational term = power / Rational(den);
    if ((k - i) % 2 != 0) {
      term = -term;
    }
    sum += term;
  }
  return sum;
}

BigInt multinomial(const MultinomialQuery& query) {
  long remaining = query.n;
  BigInt acc = 1;
  for (long part : query.parts) {
    if (part < 0) {
      throw ParameterError("multinomial parts must be nonnegative");
    }
    if (part > remaining) {
      throw ParameterError("multinomial parts sum past n=" + std::to_string(query.n));
    }
    acc *= coeff_recurrence({query.params, remaining, part});
    remaining -= part;
  }
  return acc;
}

BigInt coeff_inverse(const CoeffQuery& query) {
  require_ordered(query.n, query.k);
  const long gap = query.n - query.k;
  if (gap == 0) {
    return 1;
  }
  BigInt sum = 0;
  for (long s = 1; s <= gap; ++s) {
    BigInt inner = 0;
    CompositionStream stream(gap, s);
    while (auto c = stream.next()) {
      inner += multinomial({query.params, gap, c->parts()});
    }
    sum += (s % 2 == 0) ? inner : BigInt(-inner);
  }
  return coeff_recurrence(query) * sum;
}

}  // namespace tnomial
