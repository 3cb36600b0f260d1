#include "tnomial/tseq.hpp"

#include <array>

#include "tnomial/series.hpp"

namespace tnomial {

SeqParams::SeqParams(std::int64_t p_, std::int64_t q_, std::int64_t scale_) : p(p_), q(q_), scale(scale_) {
  if (scale < 1) {
    throw ParameterError("sequence scale must be a positive integer, got " + std::to_string(scale));
  }
}

std::string SeqParams::str() const {
  std::string s = "p=" + std::to_string(p) + " q=" + std::to_string(q);
  if (scale != 1) {
    s += " scale=" + std::to_string(scale);
  }
  return s;
}

Composition::Composition(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw ParameterError("composition must have at least one part");
  }
  for (long b : parts_) {
    if (b < 1) {
      throw ParameterError("composition parts must be positive");
    }
    total_ += b;
  }
}

CompositionStream::CompositionStream(long n, long parts) {
  if (parts < 1 || parts > n) {
    done_ = true;
    return;
  }
  current_.assign(static_cast<std::size_t>(parts), 1);
  current_.back() = n - parts + 1;
}

std::optional<Composition> CompositionStream::next() {
  if (done_) {
    return std::nullopt;
  }
  Composition out(current_);
  // Lexicographic successor: bump the rightmost non-final part whose suffix
  // still has slack, then push all remaining weight into the last part.
  const long s = static_cast<long>(current_.size());
  long suffix = current_.back();
  done_ = true;
  for (long i = s - 2; i >= 0; --i) {
    const long positions_after = s - 1 - i;
    if (suffix > positions_after) {
      ++current_[i];
      for (long j = i + 1; j < s - 1; ++j) {
        current_[j] = 1;
      }
      current_.back() = suffix - 1 - (positions_after - 1);
      done_ = false;
      break;
    }
    suffix += current_[i];
  }
  return out;
}

std::vector<Composition> compositions_of(long n, long parts) {
  std::vector<Composition> out;
  CompositionStream stream(n, parts);
  while (auto c = stream.next()) {
    out.push_back(std::move(*c));
  }
  return out;
}

namespace {

void require_nonnegative(long n) {
  if (n < 0) {
    throw ParameterError("sequence index must be nonnegative, got " + std::to_string(n));
  }
}

}  // namespace

BigInt term_closed(const SeqParams& params, long n) {
  require_nonnegative(n);
  if (n == 0) {
    return 0;
  }
  const BigInt p = params.p;
  const BigInt q = params.q;
  const auto un = static_cast<std::uint64_t>(n);
  BigInt value = (p == q) ? BigInt(n * ipow(q, un - 1)) : exact_div(ipow(q, un) - ipow(p, un), q - p);
  return value * params.scale;
}

BigInt term_sum(const SeqParams& params, long n) {
  require_nonnegative(n);
  BigInt acc = 0;
  for (long i = 1; i <= n; ++i) {
    acc += ipow(params.q, static_cast<std::uint64_t>(n - i)) * ipow(params.p, static_cast<std::uint64_t>(i - 1));
  }
  return acc * params.scale;
}

BigInt term_generating_function(const SeqParams& params, long n) {
  require_nonnegative(n);
  const auto order = static_cast<std::size_t>(n) + 1;
  const std::array<XSeries<BigInt>, 3> factors = {
      XSeries<BigInt>::linear(0, params.scale, order),
      XSeries<BigInt>::geometric(params.p, order),
      XSeries<BigInt>::geometric(params.q, order),
  };
  return series_product<BigInt>(factors, order)[static_cast<std::size_t>(n)];
}

BiPoly term_symbolic(long n) {
  require_nonnegative(n);
  BiPoly acc;
  for (long i = 1; i <= n; ++i) {
    acc += BiPoly::monomial({static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(n - i)});
  }
  return acc;
}

std::vector<BigInt> terms(const SeqParams& params, long n_max) {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    out.push_back(term_closed(params, n));
  }
  return out;
}

bool check_split_recurrence(const SeqParams& params, long k, long m) {
  if (k < 1 || m < 1) {
    throw ParameterError("split recurrence needs k, m >= 1");
  }
  const BigInt lhs = term_closed(params, k + m);
  const BigInt rhs = ipow(params.p, static_cast<std::uint64_t>(m)) * term_closed(params, k) +
                     ipow(params.q, static_cast<std::uint64_t>(k)) * term_closed(params, m);
  return lhs == rhs;
}

bool check_composition_recurrence(const SeqParams& params, const Composition& c) {
  const auto& b = c.parts();
  BigInt rhs = 0;
  long before = 0;
  long after = c.total();
  for (long part : b) {
    after -= part;
    rhs += ipow(params.p, static_cast<std::uint64_t>(after)) * ipow(params.q, static_cast<std::uint64_t>(before)) *
           term_closed(params, part);
    before += part;
  }
  return term_closed(params, c.total()) == rhs;
}

BigInt alpha_fibonacci(long alpha, long n) {
  if (alpha < 1) {
    throw ParameterError("alpha must be >= 1");
  }
  if (n < -1) {
    throw ParameterError("alpha-Fibonacci index must be >= -1");
  }
  if (n == -1) {
    return 1;
  }
  BigInt prev = 1;  // F(-1)
  BigInt cur = 0;   // F(0)
  for (long i = 0; i < n; ++i) {
    BigInt next = cur * alpha + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BigInt> alpha_fibonacci_terms(long alpha, long n_max) {
  std::vector<BigInt> out;
  for (long n = 0; n <= n_max; ++n) {
    out.push_back(alpha_fibonacci(alpha, n));
  }
  return out;
}

}  // namespace tnomial
