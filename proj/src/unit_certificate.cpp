#include "germ/unit_certificate.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace germ {

namespace {

using Sparse = std::vector<std::pair<std::uint32_t, Rational>>;

// Columns run over monomials by increasing degree and the pivot of a row is
// its first column, so elimination proceeds degree by degree.
struct Row {
  Sparse entries;
  Sparse combo;  // over input labels; empty in untracked mode
};

// a - factor*b for sparse vectors sorted by index.
Sparse axpy(const Sparse& a, const Rational& factor, const Sparse& b, std::size_t from = 0) {
  Sparse out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(from));
  std::size_t i = from, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - factor * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

class Echelon {
 public:
  explicit Echelon(bool track) : track_(track) {}

  // Full reduction against the stored pivots, left to right.
  void reduce(Row& row) const {
    std::size_t start = 0;
    while (start < row.entries.size()) {
      const auto it = pivots_.find(row.entries[start].first);
      if (it == pivots_.end()) {
        ++start;
        continue;
      }
      const Rational factor = row.entries[start].second;
      row.entries = axpy(row.entries, factor, it->second.entries, start);
      if (track_) row.combo = axpy(row.combo, factor, it->second.combo);
    }
  }

  void insert(Row row) {
    reduce(row);
    if (row.entries.empty()) return;
    const Rational inv = 1 / row.entries.front().second;
    for (auto& e : row.entries) e.second *= inv;
    for (auto& e : row.combo) e.second *= inv;
    const std::uint32_t key = row.entries.front().first;
    pivots_.emplace(key, std::move(row));
  }

 private:
  bool track_;
  std::unordered_map<std::uint32_t, Row> pivots_;
};

template <typename Fn>
void for_each_monomial(std::size_t nvars, std::uint64_t max_degree, Fn&& fn) {
  std::vector<Monomial::Exponent> e(nvars, 0);
  for (std::uint64_t deg = 0; deg <= max_degree; ++deg) {
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
      if (i + 1 == nvars) {
        e[i] = static_cast<Monomial::Exponent>(left);
        fn(Monomial(e));
        return;
      }
      for (std::uint64_t k = left + 1; k-- > 0;) {
        e[i] = static_cast<Monomial::Exponent>(k);
        self(self, i + 1, left - k);
      }
    };
    rec(rec, 0, deg);
  }
}

std::optional<Division> search(const Polynomial& f, std::span<const Polynomial> basis, std::uint64_t degree_bound,
                               bool track) {
  const Ring& ring = f.ring();
  const std::size_t n = ring->nvars();
  const Polynomial zero(ring);
  const Polynomial one = Polynomial::constant(ring, 1);
  const std::size_t width = track ? basis.size() : 0;
  if (f.is_zero()) return Division{zero, one, std::vector<Polynomial>(width, zero)};
  const auto fdeg = static_cast<std::uint64_t>(f.total_degree());
  if (fdeg > degree_bound) return std::nullopt;

  std::map<Monomial, std::uint32_t> column;
  for_each_monomial(n, degree_bound, [&](const Monomial& m) {
    column.emplace(m, static_cast<std::uint32_t>(column.size()));
  });
  auto to_sparse = [&](const Polynomial& p) {
    Sparse s;
    for (const auto& [m, c] : p.terms()) s.emplace_back(column.at(m), c);
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return s;
  };

  // Label k stands for shifts[k] * (basis[owner[k]], or f when owner[k] == basis.size()).
  std::vector<Monomial> shifts;
  std::vector<std::size_t> owner;
  Echelon echelon(track);
  auto add = [&](const Monomial& m, std::size_t who, const Polynomial& p) {
    Row row{to_sparse(Polynomial::term(ring, m, 1) * p), {}};
    if (track) row.combo = {{static_cast<std::uint32_t>(shifts.size()), Rational(1)}};
    shifts.push_back(m);
    owner.push_back(who);
    echelon.insert(std::move(row));
  };

  for (std::size_t i = 0; i < basis.size(); ++i) {
    require_same_ring(ring, basis[i].ring());
    if (basis[i].is_zero()) continue;
    const auto gdeg = static_cast<std::uint64_t>(basis[i].total_degree());
    if (gdeg > degree_bound) continue;
    for_each_monomial(n, degree_bound - gdeg, [&](const Monomial& m) { add(m, i, basis[i]); });
  }
  for_each_monomial(n, degree_bound - fdeg, [&](const Monomial& m) {
    if (!m.is_one()) add(m, basis.size(), f);
  });

  // Invariant: target == f + sum_k combo[k] * (vector of label k). At zero,
  // (1 + sum over f-labels) * f = -(sum over basis labels), and the f-labels
  // carry monomials of positive degree.
  Row target{to_sparse(f), {}};
  echelon.reduce(target);
  if (!target.entries.empty()) return std::nullopt;

  Division d{zero, one, std::vector<Polynomial>(width, zero)};
  for (const auto& [k, c] : target.combo) {
    if (owner[k] == basis.size()) {
      d.unit += Polynomial::term(ring, shifts[k], c);
    } else {
      d.cofactors[owner[k]] -= Polynomial::term(ring, shifts[k], c);
    }
  }
  return d;
}

}  // namespace

std::optional<Division> unit_multiple_certificate(const Polynomial& f, std::span<const Polynomial> basis,
                                                  std::uint64_t degree_bound) {
  return search(f, basis, degree_bound, true);
}

bool has_unit_multiple_certificate(const Polynomial& f, std::span<const Polynomial> basis,
                                   std::uint64_t degree_bound) {
  return search(f, basis, degree_bound, false).has_value();
}

}  // namespace germ
