#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "germ/ideal.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// The image of an ideal in Q[x]/m^{D+1}, as a row-echelon basis of the span of
/// all generator * monomial products of degree <= D.
///
/// This is plain linear algebra over Q and shares nothing with the Mora engine;
/// it exists to check that engine. Membership in the local ring implies
/// membership here for every D; one failure at any D certifies non-membership.
class TruncatedIdeal {
 public:
  TruncatedIdeal(const IdealPresentation& ideal, std::uint64_t degree);

  /// f lies in ideal + m^{D+1}.
  bool contains(const Polynomial& f) const;

  std::uint64_t degree() const noexcept { return degree_; }
  /// Dimension of the image of the ideal in Q[x]/m^{D+1}.
  std::size_t rank() const noexcept { return rows_.size(); }
  /// Dimension of Q[x]/m^{D+1}.
  std::size_t ambient_dimension() const noexcept { return index_.size(); }

 private:
  using Row = std::vector<std::pair<std::uint32_t, Rational>>;

  Row to_row(const Polynomial& f) const;
  void reduce(Row& row) const;

  Ring ring_;
  std::uint64_t degree_;
  bool everything_ = false;
  std::map<Monomial, std::uint32_t> index_;
  // Pivot column -> row with pivot coefficient 1 and no smaller column.
  std::map<std::uint32_t, Row> rows_;
};

/// f lies in (ideal + m^{D+1}).
bool truncated_membership_oracle(const Polynomial& f, const IdealPresentation& ideal, std::uint64_t degree);

}  // namespace germ
