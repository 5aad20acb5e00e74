#include "qalg/coinv.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include "qalg/errors.hpp"
#include "qalg/hopf.hpp"
#include "qalg/linalg.hpp"

namespace qalg {

namespace {

// Column index of a degree-d normal-ordered word in the ascending
// pbw_words(n, d) list.
int word_col(const std::vector<Word>& cols, const Word& w) {
  auto it = std::lower_bound(cols.begin(), cols.end(), w);
  if (it == cols.end() || *it != w)
    fail(ErrCode::bad_argument, "monomial outside the graded component");
  return static_cast<int>(it - cols.begin());
}

SparseRow row_of(const AlgElem& a, const std::vector<Word>& cols) {
  SparseRow r;
  for (const auto& [w, c] : a.terms()) r.emplace_back(word_col(cols, w), c);
  return r;
}

using RowMap = std::map<std::pair<Word, Word>, std::map<int, QScalar>>;

std::vector<AlgElem> kernel_to_elems(int n, const std::vector<Word>& cols,
                                     RowMap rows) {
  EchelonBasis eb(static_cast<int>(cols.size()));
  for (auto& [key, entries] : rows) {
    SparseRow r;
    for (auto& [col, c] : entries)
      if (!c.is_zero()) r.emplace_back(col, std::move(c));
    if (!r.empty()) eb.add_row(std::move(r));
  }
  std::vector<AlgElem> out;
  for (const auto& v : eb.kernel()) {
    AlgElem e(n);
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
      if (!v[j].is_zero()) e.add_term(cols[j], v[j]);
    out.push_back(std::move(e));
  }
  return out;
}

// Coinvariants of alpha (plain) and beta (s2-twisted): within one graded
// component both coproduct legs have the full degree, where the quotient
// map is injective, so the cocommutativity characterization becomes an
// exact linear system over word pairs. Independent of the target.
std::vector<AlgElem> flip_kernel(int n, int d, bool s2_twist) {
  const std::vector<Word> cols = pbw_words(n, d);
  RowMap rows;
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    const TensorElem dw = coproduct(GLElem::from(AlgElem::monomial(n, cols[j])));
    for (const auto& [key, c] : dw.terms()) {
      rows[{key[0].w, key[1].w}][j] += c;
      const QScalar back = s2_twist ? c * s2_scalar(n, key[0].w) : c;
      rows[{key[1].w, key[0].w}][j] -= back;
    }
  }
  return kernel_to_elems(n, cols, std::move(rows));
}

// Coinvariants of lambda and rho, pinned against the degree-d
// representative of the class of 1 in the target: det_q^{d/n} for sl when
// n | d, the unit otherwise. When no degree-d representative exists the
// pinned keys are disjoint from the coaction keys and the kernel is zero,
// which is the correct space.
std::vector<AlgElem> pinned_kernel(int n, int d, bool group_first,
                                   Target target) {
  const std::vector<Word> cols = pbw_words(n, d);
  AlgElem lift = AlgElem::unit(n);
  if (target == Target::sl && d % n == 0)
    for (int t = 0; t < d / n; ++t) lift = lift * quantum_det(n);
  RowMap rows;
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    const TensorElem dw = coproduct(GLElem::from(AlgElem::monomial(n, cols[j])));
    for (const auto& [key, c] : dw.terms()) rows[{key[0].w, key[1].w}][j] += c;
    for (const auto& [lw, lc] : lift.terms()) {
      if (group_first)
        rows[{lw, cols[j]}][j] -= lc;
      else
        rows[{cols[j], lw}][j] -= lc;
    }
  }
  return kernel_to_elems(n, cols, std::move(rows));
}

std::vector<AlgElem> compute_basis(CoKind kind, Target target, int n, int d) {
  switch (kind) {
    case CoKind::alpha:
      return flip_kernel(n, d, false);
    case CoKind::beta:
      return flip_kernel(n, d, true);
    case CoKind::lambda:
      return pinned_kernel(n, d, true, target);
    case CoKind::rho:
      return pinned_kernel(n, d, false, target);
    default:
      fail(ErrCode::bad_argument,
           "coinvariants are computed for lambda, rho, alpha, beta");
  }
}

// Degree computations are independent of one another; finished bases are
// kept so that Hilbert prefixes, generator extraction and spanning checks
// do not redo the kernel work.
const std::vector<AlgElem>& cached_basis(CoKind kind, Target target, int n,
                                         int d) {
  // alpha/beta coinvariants agree for both targets; normalize the key.
  const Target key_target =
      (kind == CoKind::alpha || kind == CoKind::beta) ? Target::sl : target;
  using Key = std::tuple<CoKind, Target, int, int>;
  static std::mutex mu;
  static std::map<Key, std::vector<AlgElem>>* cache =
      new std::map<Key, std::vector<AlgElem>>;
  const Key key{kind, key_target, n, d};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
  }
  std::vector<AlgElem> basis = compute_basis(kind, key_target, n, d);
  std::lock_guard<std::mutex> lock(mu);
  return cache->emplace(key, std::move(basis)).first->second;
}

// Walks every product of gens (as a multiset, indices nondecreasing) with
// total degree exactly `remaining` added on top of acc.
void for_each_product(const std::vector<AlgElem>& gens,
                      const std::vector<int>& degs, size_t start,
                      int remaining, const AlgElem& acc,
                      const std::function<void(const AlgElem&)>& emit) {
  if (remaining == 0) {
    emit(acc);
    return;
  }
  for (size_t i = start; i < gens.size(); ++i)
    if (degs[i] <= remaining)
      for_each_product(gens, degs, i, remaining - degs[i], acc * gens[i],
                       emit);
}

int checked_degree(const AlgElem& g) {
  int deg = 0;
  if (g.is_zero() || !g.is_homogeneous(&deg) || deg < 1)
    fail(ErrCode::bad_argument,
         "generators must be nonzero, homogeneous, of positive degree");
  return deg;
}

}  // namespace

CoinvBasis coinvariant_basis(CoKind kind, Target target, int n, int degree) {
  if (degree < 0) fail(ErrCode::bad_argument, "degree must be nonnegative");
  CoinvBasis out;
  out.degree = degree;
  out.kind = kind;
  out.target = target;
  out.basis = cached_basis(kind, target, n, degree);
  return out;
}

HilbertPrefix hilbert_prefix(CoKind kind, Target target, int n,
                             int max_degree) {
  if (max_degree < 0)
    fail(ErrCode::bad_argument, "max_degree must be nonnegative");
  HilbertPrefix dims;
  for (int d = 0; d <= max_degree; ++d)
    dims.push_back(static_cast<int>(cached_basis(kind, target, n, d).size()));
  return dims;
}

std::vector<AlgElem> generators_up_to(CoKind kind, Target target, int n,
                                      int max_degree) {
  if (max_degree < 0)
    fail(ErrCode::bad_argument, "max_degree must be nonnegative");
  std::vector<AlgElem> gens;
  std::vector<int> degs;
  for (int d = 1; d <= max_degree; ++d) {
    const std::vector<Word> cols = pbw_words(n, d);
    EchelonBasis span(static_cast<int>(cols.size()));
    for_each_product(gens, degs, 0, d, AlgElem::unit(n),
                     [&](const AlgElem& p) { span.add_row(row_of(p, cols)); });
    for (const AlgElem& b : cached_basis(kind, target, n, d)) {
      SparseRow residue = span.reduce(row_of(b, cols));
      if (residue.empty()) continue;
      row_make_primitive(residue);
      AlgElem g(n);
      for (const auto& [col, c] : residue) g.add_term(cols[col], c);
      span.add_row(std::move(residue));
      gens.push_back(std::move(g));
      degs.push_back(d);
    }
  }
  return gens;
}

bool spanning_check(CoKind kind, Target target, int n,
                    const std::vector<AlgElem>& gens, int max_degree) {
  if (max_degree < 0)
    fail(ErrCode::bad_argument, "max_degree must be nonnegative");
  std::vector<int> degs;
  for (const AlgElem& g : gens) {
    const int deg = checked_degree(g);
    if (!is_coinvariant(kind, target, GLElem::from(g)))
      fail(ErrCode::not_coinvariant,
           "spanning_check: generator fails the coinvariance predicate");
    degs.push_back(deg);
  }
  for (int d = 1; d <= max_degree; ++d) {
    const std::vector<Word> cols = pbw_words(n, d);
    EchelonBasis span(static_cast<int>(cols.size()));
    long products = 0;
    for_each_product(gens, degs, 0, d, AlgElem::unit(n),
                     [&](const AlgElem& p) {
                       ++products;
                       span.add_row(row_of(p, cols));
                     });
    // Full rank over the multiset count certifies algebraic independence;
    // absorbing the kernel basis certifies spanning.
    if (span.rank() != products) return false;
    for (const AlgElem& b : cached_basis(kind, target, n, d))
      if (!span.in_row_space(row_of(b, cols))) return false;
  }
  return true;
}

std::vector<AlgElem> relative_invariant_basis(CoKind kind, int n, int degree,
                                              int weight) {
  if (degree < 0 || weight < 0)
    fail(ErrCode::bad_argument, "degree and weight must be nonnegative");
  if (kind == CoKind::alpha_bar || kind == CoKind::beta_bar)
    fail(ErrCode::bad_argument,
         "relative invariants are computed for lambda, rho, alpha, beta");
  const bool group_first = (kind == CoKind::lambda);
  const std::vector<Word> cols = pbw_words(n, degree);

  // Group slots may carry det_q^{-p} factors (alpha and beta produce
  // antipode legs); everything is multiplied through by a common power
  // before comparing coordinates, which is exact at fixed det power.
  struct Entry {
    int col;
    Word carrier;
    TSlot group;
    QScalar c;
  };
  std::vector<Entry> entries;
  int max_power = 0;
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    const TensorElem im =
        coact(kind, Target::gl, GLElem::from(AlgElem::monomial(n, cols[j])));
    for (const auto& [key, c] : im.terms()) {
      const TSlot& carrier = key[group_first ? 1 : 0];
      const TSlot& group = key[group_first ? 0 : 1];
      if (carrier.det_power != 0)
        fail(ErrCode::bad_argument, "carrier slot acquired a det power");
      max_power = std::max(max_power, group.det_power);
      entries.push_back(Entry{j, carrier.w, group, c});
    }
  }

  const AlgElem det = quantum_det(n);
  auto det_multiple = [&](const AlgElem& a, int k) {
    AlgElem r = a;
    for (int t = 0; t < k; ++t) r = r * det;
    return r;
  };

  RowMap rows;
  for (const Entry& e : entries) {
    const AlgElem lifted =
        det_multiple(AlgElem::monomial(n, e.group.w), max_power - e.group.det_power);
    for (const auto& [u, uc] : lifted.terms()) {
      if (group_first)
        rows[{u, e.carrier}][e.col] += e.c * uc;
      else
        rows[{e.carrier, u}][e.col] += e.c * uc;
    }
  }
  const AlgElem pinned = det_multiple(AlgElem::unit(n), weight + max_power);
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    for (const auto& [u, uc] : pinned.terms()) {
      if (group_first)
        rows[{u, cols[j]}][j] -= uc;
      else
        rows[{cols[j], u}][j] -= uc;
    }
  }
  return kernel_to_elems(n, cols, std::move(rows));
}

}  // namespace qalg
