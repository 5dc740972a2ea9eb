#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "til/monomial.hpp"

namespace til {

/// A monomial order on exponent vectors of a fixed length.
///
/// - lex, grevlex: the textbook orders with x_1 > x_2 > ... > x_n.
/// - block: the variables flagged in the mask form a first block compared by
///   grevlex; ties are broken by grevlex on the remaining variables. Any
///   monomial involving a flagged variable beats every monomial free of them,
///   which makes this an elimination order for the flagged variables.
/// - weight: compares the dot product with a weight vector, then breaks ties
///   with lex or grevlex.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block, weight };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder block(std::vector<bool> first_block);
  static MonomialOrder weight(std::vector<int> weights, Kind tie = Kind::grevlex);

  Kind kind() const { return kind_; }
  Kind tie() const { return tie_; }
  const std::vector<bool>& mask() const { return mask_; }
  const std::vector<int>& weights() const { return weights_; }

  /// Three-way comparison; throws std::invalid_argument on length mismatch.
  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;
  bool less(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  /// Textual form used by the Groebner cache files: "lex", "grevlex",
  /// "block:1,1,0", "weight:0,0,1;grevlex".
  std::string to_string() const;
  static MonomialOrder parse(std::string_view text);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_ = Kind::grevlex;
  Kind tie_ = Kind::grevlex;
  std::vector<bool> mask_;
  std::vector<int> weights_;
};

}  // namespace til
