#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "til/field.hpp"
#include "til/multidegree.hpp"
#include "til/order.hpp"

namespace til {

/// Polynomial ring k[x_1, ..., x_n] with a default monomial order and an
/// optional multigrading (one MultiDegree per variable).
///
/// Variables are stored 0-based; `gen_index(i)` maps the 1-based position
/// used in variable subscripts to storage.
class Ring {
 public:
  using Grading = std::vector<MultiDegree>;

  /// Throws std::invalid_argument on duplicate or malformed names, too many
  /// variables, or a grading of the wrong length.
  Ring(std::vector<std::string> vars, Field field,
       MonomialOrder order = MonomialOrder::grevlex(), std::optional<Grading> grading = {});

  std::size_t nvars() const { return d_->vars.size(); }
  const std::vector<std::string>& vars() const { return d_->vars; }
  const std::string& var(std::size_t i) const { return d_->vars.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Storage index of a variable by name; throws if absent.
  std::size_t at(std::string_view name) const;
  static std::size_t gen_index(std::size_t one_based) { return one_based - 1; }

  const Field& field() const { return d_->field; }
  const MonomialOrder& order() const { return d_->order; }
  const Grading* grading() const { return d_->grading ? &*d_->grading : nullptr; }

  Ring with_order(MonomialOrder order) const;
  Ring with_grading(std::optional<Grading> grading) const;

  /// Structural equality: same variables, field, order and grading.
  friend bool operator==(const Ring& a, const Ring& b);
  /// Same variables and field (orders may differ).
  bool same_space(const Ring& o) const {
    return d_ == o.d_ || (d_->vars == o.d_->vars && d_->field == o.d_->field);
  }

 private:
  struct Data {
    std::vector<std::string> vars;
    Field field;
    MonomialOrder order;
    std::optional<Grading> grading;
  };
  explicit Ring(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static void validate(const Data& d);

  std::shared_ptr<const Data> d_;
};

/// Names "prefix1", ..., "prefixN".
std::vector<std::string> indexed_names(std::string_view prefix, std::size_t n,
                                       std::size_t first = 1);

}  // namespace til
