#include "qalg/linalg.hpp"

#include <algorithm>

#include "qalg/errors.hpp"

namespace qalg {

void row_make_primitive(SparseRow& r) {
  r.erase(std::remove_if(r.begin(), r.end(),
                         [](const auto& e) { return e.second.is_zero(); }),
          r.end());
  if (r.empty()) return;
  QScalar g = QScalar::zero();
  long vmin = r.front().second.valuation();
  for (const auto& [c, v] : r) {
    g = qgcd(g, v);
    vmin = std::min(vmin, v.valuation());
  }
  QScalar u = g.shift(vmin);
  for (auto& [c, v] : r) v = divide_exact(v, u);
  if (r.front().second.leading_coeff() < 0)
    for (auto& [c, v] : r) v = -v;
}

namespace {

// r = a*r - b*piv, sparse merge by column.
SparseRow cross_eliminate(const SparseRow& r, const SparseRow& piv,
                          const QScalar& a, const QScalar& b) {
  SparseRow out;
  out.reserve(r.size() + piv.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < piv.size()) {
    if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
      QScalar v = a * r[i].second;
      if (!v.is_zero()) out.push_back({r[i].first, v});
      ++i;
    } else if (i == r.size() || piv[j].first < r[i].first) {
      QScalar v = b * piv[j].second;
      if (!v.is_zero()) out.push_back({piv[j].first, -v});
      ++j;
    } else {
      QScalar v = a * r[i].second - b * piv[j].second;
      if (!v.is_zero()) out.push_back({r[i].first, v});
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow EchelonBasis::reduce(SparseRow r) const {
  row_make_primitive(r);
  while (!r.empty()) {
    auto it = pivots_.find(r.front().first);
    if (it == pivots_.end()) break;
    r = cross_eliminate(r, it->second, it->second.front().second,
                        r.front().second);
    row_make_primitive(r);
  }
  return r;
}

bool EchelonBasis::add_row(SparseRow r) {
  r = reduce(std::move(r));
  if (r.empty()) return false;
  pivots_.emplace(r.front().first, std::move(r));
  return true;
}

std::vector<std::vector<QScalar>> EchelonBasis::kernel() const {
  std::vector<std::vector<QScalar>> out;
  std::vector<bool> has_pivot(ncols_, false);
  for (const auto& [lead, row] : pivots_) has_pivot[lead] = true;
  for (int f = 0; f < ncols_; ++f) {
    if (has_pivot[f]) continue;
    std::vector<QFraction> x(ncols_);
    x[f] = QFraction(QScalar::one());
    // Pivot columns in descending order; each pivot row determines x[lead]
    // from already-fixed later coordinates.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const SparseRow& row = it->second;
      QFraction acc;
      for (size_t k = 1; k < row.size(); ++k) {
        const auto& [c, v] = row[k];
        if (!x[c].is_zero()) acc = acc + QFraction(v) * x[c];
      }
      x[it->first] = -(acc / QFraction(row.front().second));
    }
    // Clear denominators to return a primitive Laurent-ring vector.
    QScalar l = QScalar::one();
    for (const auto& xi : x)
      if (!xi.is_zero()) l = divide_exact(l * xi.den(), qgcd(l, xi.den()));
    std::vector<QScalar> v(ncols_);
    SparseRow nz;
    for (int c = 0; c < ncols_; ++c) {
      if (x[c].is_zero()) continue;
      v[c] = x[c].num() * divide_exact(l, x[c].den());
      nz.push_back({c, v[c]});
    }
    row_make_primitive(nz);
    std::fill(v.begin(), v.end(), QScalar::zero());
    for (const auto& [c, val] : nz) v[c] = val;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<QScalar>> kernel_basis(const std::vector<SparseRow>& rows,
                                               int ncols) {
  EchelonBasis eb(ncols);
  for (const auto& r : rows) eb.add_row(r);
  return eb.kernel();
}

int rank_of(const std::vector<SparseRow>& rows, int ncols) {
  EchelonBasis eb(ncols);
  for (const auto& r : rows) eb.add_row(r);
  return eb.rank();
}

FractionSolveResult fraction_solve(
    std::vector<std::vector<QFraction>> m,
    const std::optional<std::vector<QFraction>>& rhs) {
  FractionSolveResult res;
  size_t nrows = m.size();
  size_t ncols = nrows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != ncols) fail(ErrCode::bad_argument, "ragged matrix");
  std::vector<QFraction> b;
  if (rhs) {
    if (rhs->size() != nrows) fail(ErrCode::size_mismatch, "rhs length mismatch");
    b = *rhs;
  } else {
    b.assign(nrows, QFraction());
  }

  size_t prow = 0;
  for (size_t col = 0; col < ncols && prow < nrows; ++col) {
    size_t sel = nrows;
    for (size_t r = prow; r < nrows; ++r)
      if (!m[r][col].is_zero()) { sel = r; break; }
    if (sel == nrows) continue;
    std::swap(m[prow], m[sel]);
    std::swap(b[prow], b[sel]);
    QFraction inv = QFraction(QScalar::one()) / m[prow][col];
    for (size_t c = col; c < ncols; ++c) m[prow][c] = m[prow][c] * inv;
    b[prow] = b[prow] * inv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == prow || m[r][col].is_zero()) continue;
      QFraction f = m[r][col];
      for (size_t c = col; c < ncols; ++c)
        m[r][c] = m[r][c] - f * m[prow][c];
      b[r] = b[r] - f * b[prow];
    }
    res.pivot_cols.push_back(static_cast<int>(col));
    ++prow;
  }
  for (size_t r = prow; r < nrows; ++r)
    if (!b[r].is_zero()) res.consistent = false;

  res.rref = std::move(m);
  if (rhs && res.consistent) {
    res.particular.assign(ncols, QFraction());
    for (size_t k = 0; k < res.pivot_cols.size(); ++k)
      res.particular[res.pivot_cols[k]] = b[k];
  }

  std::vector<bool> is_pivot(ncols, false);
  for (int c : res.pivot_cols) is_pivot[c] = true;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<QFraction> v(ncols);
    v[f] = QFraction(QScalar::one());
    for (size_t k = 0; k < res.pivot_cols.size(); ++k)
      v[res.pivot_cols[k]] = -res.rref[k][f];
    res.kernel.push_back(std::move(v));
  }
  return res;
}

}  // namespace qalg
