#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpslice/rational.hpp"

namespace gpslice {

// Sorted (column, value) pairs without zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Real linear system sum_j a_ij x_j = b_ik with rational coefficients and any
// number of right-hand sides (k). With no right-hand sides the system is
// homogeneous.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns = 0, std::size_t rhs_count = 0);

  std::size_t add_unknown(std::string name = {});
  std::size_t unknown_count() const noexcept { return unknowns_; }
  std::size_t rhs_count() const noexcept { return rhs_count_; }
  // Names are optional labels; unnamed unknowns return "".
  const std::string& name(std::size_t j) const;

  // `lhs` columns index unknowns, `rhs` columns index right-hand sides.
  // Entries need not be sorted; duplicates are summed.
  void add_row(SparseRow lhs, SparseRow rhs = {});

  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<std::pair<SparseRow, SparseRow>>& rows() const noexcept { return rows_; }

 private:
  std::size_t unknowns_;
  std::size_t rhs_count_;
  std::vector<std::string> names_;
  std::vector<std::pair<SparseRow, SparseRow>> rows_;
};

// Reduced row echelon form over the unknown columns. Right-hand sides ride
// along as trailing columns.
struct RowEchelon {
  std::size_t unknowns = 0;
  std::size_t rhs_count = 0;
  // Sorted by pivot column; each row has a 1 at its pivot and zeros at every
  // other pivot column. Columns >= unknowns are right-hand sides.
  std::vector<std::pair<std::size_t, SparseRow>> pivot_rows;
  std::vector<bool> consistent;  // per right-hand side

  std::size_t rank() const noexcept { return pivot_rows.size(); }
  std::vector<std::size_t> free_columns() const;
};

RowEchelon row_reduce(const LinearSystem& system);

// Canonical nullspace basis of the homogeneous part: one vector per free
// column in increasing order, equal to 1 there and 0 at every other free
// column. Depends only on the solution space and the column order.
std::vector<std::vector<Rational>> nullspace(const LinearSystem& system);
std::vector<std::vector<Rational>> nullspace(const RowEchelon& echelon);

struct SolveResult {
  std::size_t rank = 0;
  std::size_t unknowns = 0;
  // Particular solution (free unknowns set to 0) per right-hand side, or
  // nullopt when that right-hand side is inconsistent.
  std::vector<std::optional<std::vector<Rational>>> solutions;

  bool unique() const noexcept { return rank == unknowns; }
};

SolveResult solve(const LinearSystem& system);

}  // namespace gpslice
