#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qalg/scalar.hpp"

namespace qalg {

// Sparse row over the Laurent ring: (column, coefficient) sorted by column.
using SparseRow = std::vector<std::pair<int, QScalar>>;

// Divide a row by its content and fix the sign so the first entry has a
// positive leading coefficient. Keeps entries in the Laurent ring.
void row_make_primitive(SparseRow& r);

/**
 * Incremental exact row echelon form over the fraction field, kept
 * fraction-free: rows stay primitive over the Laurent ring and elimination
 * uses cross-multiplication with gcd reduction per step.
 */
class EchelonBasis {
public:
  explicit EchelonBasis(int ncols) : ncols_(ncols) {}

  // Reduces r against the current pivots and installs it if independent.
  // Returns true when the rank grew.
  bool add_row(SparseRow r);
  // Reduction only; the result is the residue of r modulo the row space.
  SparseRow reduce(SparseRow r) const;
  bool in_row_space(const SparseRow& r) const { return reduce(r).empty(); }

  int rank() const { return static_cast<int>(pivots_.size()); }
  int ncols() const { return ncols_; }
  const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

  // Primitive kernel vectors, one per pivot-free column in ascending
  // column order; exact, deterministic.
  std::vector<std::vector<QScalar>> kernel() const;

private:
  int ncols_;
  std::map<int, SparseRow> pivots_;  // leading column -> row
};

std::vector<std::vector<QScalar>> kernel_basis(const std::vector<SparseRow>& rows,
                                               int ncols);
int rank_of(const std::vector<SparseRow>& rows, int ncols);

/**
 * Dense exact solver over the fraction field: reduced row echelon form,
 * kernel basis, and a particular solution when a right-hand side is given.
 */
struct FractionSolveResult {
  std::vector<std::vector<QFraction>> rref;
  std::vector<int> pivot_cols;
  std::vector<std::vector<QFraction>> kernel;
  bool consistent = true;
  std::vector<QFraction> particular;  // meaningful when consistent and rhs given
};

FractionSolveResult fraction_solve(
    std::vector<std::vector<QFraction>> matrix,
    const std::optional<std::vector<QFraction>>& rhs = std::nullopt);

}  // namespace qalg
