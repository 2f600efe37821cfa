#include "gpslice/linear_system.hpp"

#include <algorithm>

#include "gpslice/errors.hpp"

namespace gpslice {

namespace {

void canonicalize(SparseRow& row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < row.size();) {
    const std::size_t col = row[i].first;
    Rational sum = std::move(row[i].second);
    std::size_t j = i + 1;
    for (; j < row.size() && row[j].first == col; ++j) sum += row[j].second;
    if (sum != 0) row[out++] = {col, std::move(sum)};
    i = j;
  }
  row.resize(out);
}

// a - factor * b, both sorted.
SparseRow axpy(const SparseRow& a, const Rational& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - factor * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Rational* entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

LinearSystem::LinearSystem(std::size_t unknowns, std::size_t rhs_count)
    : unknowns_(unknowns), rhs_count_(rhs_count), names_(unknowns) {}

std::size_t LinearSystem::add_unknown(std::string name) {
  names_.push_back(std::move(name));
  return unknowns_++;
}

const std::string& LinearSystem::name(std::size_t j) const { return names_.at(j); }

void LinearSystem::add_row(SparseRow lhs, SparseRow rhs) {
  for (const auto& e : lhs) {
    if (e.first >= unknowns_) throw InputError("linear system row references unknown column");
  }
  for (const auto& e : rhs) {
    if (e.first >= rhs_count_) throw InputError("linear system row references unknown rhs");
  }
  canonicalize(lhs);
  canonicalize(rhs);
  rows_.emplace_back(std::move(lhs), std::move(rhs));
}

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> free;
  std::size_t k = 0;
  for (std::size_t c = 0; c < unknowns; ++c) {
    if (k < pivot_rows.size() && pivot_rows[k].first == c) {
      ++k;
    } else {
      free.push_back(c);
    }
  }
  return free;
}

// Incremental RREF: every incoming row is reduced against the current pivot
// rows (which carry zeros at each other's pivots, so one pass suffices); a
// surviving row becomes a new pivot and is eliminated from the existing ones.
RowEchelon row_reduce(const LinearSystem& system) {
  RowEchelon ech;
  ech.unknowns = system.unknown_count();
  ech.rhs_count = system.rhs_count();
  ech.consistent.assign(system.rhs_count(), true);

  std::vector<std::ptrdiff_t> pivot_of(system.unknown_count(), -1);
  std::vector<std::pair<std::size_t, SparseRow>> pivots;

  for (const auto& [lhs, rhs] : system.rows()) {
    SparseRow row = lhs;
    for (const auto& [c, v] : rhs) row.emplace_back(ech.unknowns + c, v);

    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [c, v] : row) {
      if (c < ech.unknowns && pivot_of[c] >= 0) hits.emplace_back(c, v);
    }
    for (const auto& [c, v] : hits) row = axpy(row, v, pivots[pivot_of[c]].second);

    if (row.empty()) continue;
    if (row.front().first >= ech.unknowns) {
      for (const auto& [c, v] : row) ech.consistent[c - ech.unknowns] = false;
      continue;
    }
    const std::size_t col = row.front().first;
    const Rational lead = row.front().second;
    if (lead != 1) {
      for (auto& e : row) e.second /= lead;
    }
    for (auto& [pc, prow] : pivots) {
      if (const Rational* v = entry(prow, col)) {
        const Rational factor = *v;
        prow = axpy(prow, factor, row);
      }
    }
    pivot_of[col] = static_cast<std::ptrdiff_t>(pivots.size());
    pivots.emplace_back(col, std::move(row));
  }

  std::sort(pivots.begin(), pivots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ech.pivot_rows = std::move(pivots);
  return ech;
}

std::vector<std::vector<Rational>> nullspace(const RowEchelon& ech) {
  const auto free = ech.free_columns();
  std::vector<std::ptrdiff_t> free_slot(ech.unknowns, -1);
  for (std::size_t k = 0; k < free.size(); ++k) free_slot[free[k]] = static_cast<std::ptrdiff_t>(k);

  std::vector<std::vector<Rational>> basis(free.size(), std::vector<Rational>(ech.unknowns));
  for (std::size_t k = 0; k < free.size(); ++k) basis[k][free[k]] = 1;
  for (const auto& [pc, prow] : ech.pivot_rows) {
    for (const auto& [c, v] : prow) {
      if (c >= ech.unknowns || c == pc) continue;
      basis[free_slot[c]][pc] = -v;
    }
  }
  return basis;
}

std::vector<std::vector<Rational>> nullspace(const LinearSystem& system) {
  return nullspace(row_reduce(system));
}

SolveResult solve(const LinearSystem& system) {
  const RowEchelon ech = row_reduce(system);
  SolveResult result;
  result.rank = ech.rank();
  result.unknowns = ech.unknowns;
  for (std::size_t k = 0; k < ech.rhs_count; ++k) {
    if (!ech.consistent[k]) {
      result.solutions.emplace_back(std::nullopt);
      continue;
    }
    std::vector<Rational> x(ech.unknowns);
    for (const auto& [pc, prow] : ech.pivot_rows) {
      if (const Rational* v = entry(prow, ech.unknowns + k)) x[pc] = *v;
    }
    result.solutions.emplace_back(std::move(x));
  }
  return result;
}

}  // namespace gpslice
