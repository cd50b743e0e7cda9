#include "germ/polynomial_format.hpp"

#include <algorithm>
#include <vector>

namespace germ {

std::string to_string(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  std::vector<const Polynomial::Term*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](const auto* a, const auto* b) { return order.greater(a->first, b->first); });

  const auto& names = f.ring()->names();
  std::string out;
  bool first = true;
  for (const auto* t : terms) {
    const Monomial& m = t->first;
    Rational c = t->second;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    c = abs(c);

    std::string factors;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += factors;
    } else {
      out += c.get_str() + "*" + factors;
    }
  }
  return out;
}

}  // namespace germ
