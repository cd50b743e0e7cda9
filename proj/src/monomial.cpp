#include "germ/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace germ {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(i) = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.nvars() == b.nvars());
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  assert(a.divides(b));
  Monomial r = b;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= a.exps_[i];
  r.degree_ = b.degree_ - a.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  assert(a.nvars() == b.nvars());
  Monomial r = a;
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

}  // namespace germ
