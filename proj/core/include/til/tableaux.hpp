#pragma once

// Semistandard tableaux and concrete hook Schur modules.

#include <map>
#include <string>
#include <vector>

#include "til/linalg.hpp"

namespace til {

/// Rows of a Young tableau, entries 1-based.
using Tableau = std::vector<std::vector<int>>;

bool is_semistandard(const Tableau& t, int m);
/// All semistandard tableaux of the given shape with entries at most m,
/// ordered lexicographically by their rows.
std::vector<Tableau> semistandard_tableaux(const std::vector<int>& shape, int m);
/// Number of semistandard tableaux by the hook-content formula.
long hook_content_count(const std::vector<int>& shape, int m);

/// Tableau of shape (2, 1^(k-1)): first column and the second entry of row 1.
struct HookTableau {
  std::vector<int> column;
  int arm;
  friend bool operator==(const HookTableau&, const HookTableau&) = default;
  friend auto operator<=>(const HookTableau&, const HookTableau&) = default;
  Tableau rows() const;
  /// Row-major text, rows separated by '/', e.g. "12/3".
  std::string to_string() const;
};

/// Semistandard tableaux of shape (2, 1^(k-1)), entries at most m, sorted by
/// the word (column, arm).
struct HookTableauBasis {
  int column_length;
  int m;
  std::vector<HookTableau> tableaux;
};
HookTableauBasis hook_schur_basis(int column_length, int m);

/// Image of column^arm under the map wedge^k W (x) W -> W^(x)(k-1) (x) S^2 W,
/// where the last column entry of each term is multiplied with the arm.
/// Keys encode the tensor coordinates.
SparseVector<Rational> hook_embedding(const std::vector<int>& column, int arm, int m);

/// The Schur module of shape (2, 1^(k-1)) realized inside the tensor space;
/// expresses arbitrary column^arm elements in the semistandard basis.
class HookSchurModule {
 public:
  HookSchurModule(int column_length, int m);
  const HookTableauBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.tableaux.size(); }
  /// Coordinates of column^arm for a strictly increasing column; throws if
  /// the column is not strictly increasing.
  const std::vector<Rational>& coordinates(const std::vector<int>& column, int arm);
  std::size_t index_of(const HookTableau& t) const;

 private:
  HookTableauBasis basis_;
  SpanSolver<Rational> solver_;
  std::map<std::pair<std::vector<int>, int>, std::vector<Rational>> cache_;
};

}  // namespace til
