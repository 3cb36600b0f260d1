#include "tnomial/quad.hpp"

#include <utility>

namespace tnomial {

QuadElem::QuadElem(BigInt a, BigInt b, long alpha) : a_(std::move(a)), b_(std::move(b)), alpha_(alpha) {
  if (alpha < 1) {
    throw ParameterError("quadratic ring parameter alpha must be >= 1, got " + std::to_string(alpha));
  }
}

void QuadElem::require_same_ring(const QuadElem& o) const {
  if (alpha_ != o.alpha_) {
    throw ParameterError("quadratic ring mismatch: alpha " + std::to_string(alpha_) + " vs " +
                         std::to_string(o.alpha_));
  }
}

QuadElem QuadElem::conjugate() const { return {a_ + b_ * alpha_, -b_, alpha_}; }

BigInt QuadElem::norm() const {
  QuadElem n = *this * conjugate();
  return n.a_;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  require_same_ring(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  require_same_ring(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

// (a1 + b1 t)(a2 + b2 t) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 + alpha b1 b2) t
QuadElem& QuadElem::operator*=(const QuadElem& o) {
  require_same_ring(o);
  BigInt bb = b_ * o.b_;
  BigInt a = a_ * o.a_ + bb;
  BigInt b = a_ * o.b_ + o.a_ * b_ + bb * alpha_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string QuadElem::str() const {
  if (b_ == 0) {
    return a_.str();
  }
  std::string s = a_ == 0 ? std::string() : a_.str() + (b_ < 0 ? " - " : " + ");
  BigInt mag = (a_ != 0 && b_ < 0) ? BigInt(-b_) : b_;
  if (mag == 1) {
    s += "t";
  } else if (mag == -1) {
    s += "-t";
  } else {
    s += mag.str() + "*t";
  }
  return s;
}

}  // namespace tnomial
