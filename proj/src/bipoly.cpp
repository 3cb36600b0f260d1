#include "tnomial/bipoly.hpp"

#include <sstream>

namespace tnomial {

BiPoly::BiPoly(const BigInt& c) {
  if (c != 0) {
    terms_.emplace(Monomial{}, c);
  }
}

BiPoly BiPoly::monomial(Monomial m, const BigInt& coeff) {
  BiPoly r;
  r.add_term(m, coeff);
  return r;
}

void BiPoly::add_term(Monomial m, const BigInt& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

BigInt BiPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt BiPoly::eval(const BigInt& p0, const BigInt& q0) const {
  BigInt acc = 0;
  for (const auto& [m, c] : terms_) {
    acc += c * ipow(p0, m.p_deg) * ipow(q0, m.q_deg);
  }
  return acc;
}

bool BiPoly::is_homogeneous(std::uint32_t d) const {
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) {
      return false;
    }
  }
  return true;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    r.terms_.emplace(Monomial{m.q_deg, m.p_deg}, c);
  }
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, c] : r.terms_) {
    c = -c;
  }
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    add_term(m, c);
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    add_term(m, -c);
  }
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term({ma.p_deg + mb.p_deg, ma.q_deg + mb.q_deg}, ca * cb);
    }
  }
  return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  *this = *this * o;
  return *this;
}

namespace {

void append_power(std::ostringstream& os, char var, std::uint32_t deg, bool& first_factor) {
  if (deg == 0) {
    return;
  }
  if (!first_factor) {
    os << '*';
  }
  os << var;
  if (deg > 1) {
    os << '^' << deg;
  }
  first_factor = false;
}

}  // namespace

std::string BiPoly::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first_term) {
      if (c < 0) {
        os << '-';
      }
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first_term = false;
    bool first_factor = true;
    if (mag != 1 || m.degree() == 0) {
      os << mag;
      first_factor = false;
    }
    append_power(os, 'p', m.p_deg, first_factor);
    append_power(os, 'q', m.q_deg, first_factor);
  }
  return os.str();
}

}  // namespace tnomial
