#include "germ/truncated_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace germ {

namespace {

// All exponent vectors of total degree <= d, grouped by increasing degree.
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint64_t d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(nvars, 0);
  for (std::uint64_t deg = 0; deg <= d; ++deg) {
    // Compositions of `deg` into nvars parts, lexicographically descending.
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
      if (i + 1 == nvars) {
        e[i] = static_cast<Monomial::Exponent>(left);
        out.emplace_back(e);
        return;
      }
      for (std::uint64_t k = left + 1; k-- > 0;) {
        e[i] = static_cast<Monomial::Exponent>(k);
        self(self, i + 1, left - k);
      }
    };
    rec(rec, 0, deg);
  }
  return out;
}

}  // namespace

TruncatedIdeal::TruncatedIdeal(const IdealPresentation& ideal, std::uint64_t degree)
    : ring_(ideal.ring()), degree_(degree) {
  if (degree < 1) throw std::invalid_argument("oracle degree must be at least 1");
  const auto monomials = monomials_up_to(ring_->nvars(), degree_);
  for (std::uint32_t k = 0; k < monomials.size(); ++k) index_.emplace(monomials[k], k);

  if (ideal.has_unit_generator()) {
    everything_ = true;
    return;
  }
  for (const auto& g : ideal.generators()) {
    const std::uint64_t lowest = order_of(g);
    for (const auto& m : monomials) {
      if (m.degree() + lowest > degree_) break;
      Row row = to_row(multiply_truncated(Polynomial::term(ring_, m, 1), g, degree_));
      reduce(row);
      if (row.empty()) continue;
      const Rational inv = 1 / row.front().second;
      for (auto& entry : row) entry.second *= inv;
      rows_.emplace(row.front().first, std::move(row));
    }
  }
}

TruncatedIdeal::Row TruncatedIdeal::to_row(const Polynomial& f) const {
  Row row;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() > degree_) continue;
    row.emplace_back(index_.at(m), c);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

void TruncatedIdeal::reduce(Row& row) const {
  // Eliminate pivots left to right; every subtraction only touches larger columns.
  std::size_t start = 0;
  while (start < row.size()) {
    auto it = rows_.find(row[start].first);
    if (it == rows_.end()) {
      ++start;
      continue;
    }
    const Row& pivot = it->second;
    const Rational factor = row[start].second;
    Row next;
    next.reserve(row.size() + pivot.size());
    next.insert(next.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(start));
    std::size_t a = start, b = 0;
    while (a < row.size() || b < pivot.size()) {
      if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
        next.push_back(row[a++]);
      } else if (a == row.size() || pivot[b].first < row[a].first) {
        next.emplace_back(pivot[b].first, -factor * pivot[b].second);
        ++b;
      } else {
        Rational v = row[a].second - factor * pivot[b].second;
        if (sgn(v) != 0) next.emplace_back(row[a].first, std::move(v));
        ++a;
        ++b;
      }
    }
    row = std::move(next);
  }
}

bool TruncatedIdeal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  if (everything_) return true;
  Row row = to_row(f);
  reduce(row);
  return row.empty();
}

bool truncated_membership_oracle(const Polynomial& f, const IdealPresentation& ideal, std::uint64_t degree) {
  require_same_ring(f.ring(), ideal.ring());
  return TruncatedIdeal(ideal, degree).contains(f);
}

}  // namespace germ
