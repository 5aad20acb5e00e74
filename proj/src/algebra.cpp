#include "qalg/algebra.hpp"

#include <algorithm>

#include "qalg/errors.hpp"

namespace qalg {

void check_index(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n)
    fail(ErrCode::index_out_of_range,
         "generator index (" + std::to_string(i) + "," + std::to_string(j) +
             ") outside 1.." + std::to_string(n));
}

bool is_normal_order(const Word& w) {
  for (size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p + 1] < w[p]) return false;
  return true;
}

std::vector<int> row_content(const Word& w) {
  std::vector<int> r;
  r.reserve(w.size());
  for (const auto& l : w) r.push_back(l.first);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> col_content(const Word& w) {
  std::vector<int> c;
  c.reserve(w.size());
  for (const auto& l : w) c.push_back(l.second);
  std::sort(c.begin(), c.end());
  return c;
}

AlgElem AlgElem::unit(int n) { return monomial(n, {}); }

AlgElem AlgElem::generator(int n, int i, int j) {
  check_index(n, i, j);
  return monomial(n, {{i, j}});
}

AlgElem AlgElem::monomial(int n, const Word& w, const QScalar& c) {
  AlgElem e(n);
  e.add_term(w, c);
  return e;
}

void AlgElem::add_term(const Word& w, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QScalar AlgElem::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QScalar::zero() : it->second;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  if (n_ != o.n_) fail(ErrCode::size_mismatch, "mixed matrix sizes");
  AlgElem r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

AlgElem AlgElem::operator-(const AlgElem& o) const { return *this + (-o); }

AlgElem AlgElem::operator-() const {
  AlgElem r(n_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

AlgElem AlgElem::scale(const QScalar& c) const {
  AlgElem r(n_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

AlgElem AlgElem::operator*(const AlgElem& o) const {
  if (n_ != o.n_) fail(ErrCode::size_mismatch, "mixed matrix sizes");
  AlgElem r(n_);
  for (const auto& [wb, cb] : o.terms_) {
    // Appending one letter at a time keeps every intermediate result
    // collected, which merges the rewrite branches that a per-pair
    // normalization of the full concatenation would explore separately.
    AlgElem acc = scale(cb);
    for (const Letter& l : wb) {
      AlgElem next(n_);
      for (const auto& [w, c] : acc.terms_) {
        Word cat = w;
        cat.push_back(l);
        AlgElem piece = normal_form(n_, cat, c);
        for (const auto& [nw, nc] : piece.terms_) next.add_term(nw, nc);
      }
      acc = std::move(next);
    }
    for (const auto& [w, c] : acc.terms_) r.add_term(w, c);
  }
  return r;
}

int AlgElem::max_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, word_degree(w));
  return d;
}

bool AlgElem::is_homogeneous(int* deg) const {
  int d = -1;
  for (const auto& [w, c] : terms_) {
    if (d < 0) d = word_degree(w);
    else if (d != word_degree(w)) return false;
  }
  if (deg) *deg = d < 0 ? 0 : d;
  return true;
}

std::map<int, AlgElem> AlgElem::homogeneous_components() const {
  std::map<int, AlgElem> out;
  for (const auto& [w, c] : terms_) {
    auto [it, ins] = out.try_emplace(word_degree(w), n_);
    it->second.add_term(w, c);
  }
  return out;
}

namespace {

// One rewriting step on the descent at position p. The four relation
// families, oriented toward normal order:
//   x_il x_ij -> q^{-1} x_ij x_il            (same row, j < l)
//   x_kj x_ij -> q^{-1} x_ij x_kj            (same column, i < k)
//   x_kj x_il -> x_il x_kj                   (i < k, j < l)
//   x_kl x_ij -> x_ij x_kl - (q - q^{-1}) x_il x_kj   (i < k, j < l)
// The correction term in the last family is strictly lex-larger, which
// makes the induced order on words well-founded.
template <typename Emit>
void apply_rule(int n, const Word& w, size_t p, const QScalar& c, Emit&& emit) {
  const Letter a = w[p], b = w[p + 1];  // a > b
  Word sw = w;
  std::swap(sw[p], sw[p + 1]);
  if (a.first == b.first || a.second == b.second) {
    emit(std::move(sw), c * QScalar::q_power(-1, n));
  } else if (a.second < b.second) {
    emit(std::move(sw), c);
  } else {
    emit(std::move(sw), c);
    Word cross = w;
    cross[p] = {b.first, a.second};
    cross[p + 1] = {a.first, b.second};
    QScalar qmqinv = QScalar::q_power(1, n) - QScalar::q_power(-1, n);
    emit(std::move(cross), -(c * qmqinv));
  }
}

}  // namespace

AlgElem normal_form(int n, const Word& raw, const QScalar& coeff) {
  for (const auto& l : raw) check_index(n, l.first, l.second);
  AlgElem out(n);
  if (coeff.is_zero()) return out;
  std::vector<std::pair<Word, QScalar>> todo;
  todo.push_back({raw, coeff});
  while (!todo.empty()) {
    auto [w, c] = std::move(todo.back());
    todo.pop_back();
    size_t p = 0;
    for (; p + 1 < w.size(); ++p)
      if (w[p + 1] < w[p]) break;
    if (p + 1 >= w.size()) {
      out.add_term(w, c);
      continue;
    }
    apply_rule(n, w, p, c, [&](Word nw, QScalar nc) {
      todo.push_back({std::move(nw), std::move(nc)});
    });
  }
  return out;
}

AlgElem normal_form_random(int n, const Word& raw, std::mt19937& rng) {
  for (const auto& l : raw) check_index(n, l.first, l.second);
  AlgElem out(n);
  std::vector<std::pair<Word, QScalar>> todo;
  todo.push_back({raw, QScalar::one()});
  std::vector<size_t> descents;
  while (!todo.empty()) {
    auto [w, c] = std::move(todo.back());
    todo.pop_back();
    descents.clear();
    for (size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p + 1] < w[p]) descents.push_back(p);
    if (descents.empty()) {
      out.add_term(w, c);
      continue;
    }
    std::uniform_int_distribution<size_t> pick(0, descents.size() - 1);
    apply_rule(n, w, descents[pick(rng)], c, [&](Word nw, QScalar nc) {
      todo.push_back({std::move(nw), std::move(nc)});
    });
  }
  return out;
}

AlgElem quantum_minor(int n, std::vector<int> rows, std::vector<int> cols) {
  if (rows.size() != cols.size())
    fail(ErrCode::size_mismatch, "minor needs equally many rows and columns");
  if (rows.empty()) return AlgElem::unit(n);
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  for (size_t k = 0; k + 1 < rows.size(); ++k)
    if (rows[k] == rows[k + 1] || cols[k] == cols[k + 1])
      fail(ErrCode::bad_argument, "minor index sets must be distinct");
  for (size_t k = 0; k < rows.size(); ++k) {
    check_index(n, rows[k], 1);
    check_index(n, 1, cols[k]);
  }
  const size_t t = rows.size();
  std::vector<size_t> perm(t);
  for (size_t k = 0; k < t; ++k) perm[k] = k;
  AlgElem out(n);
  QScalar minus_q = -QScalar::q_power(1, n);
  do {
    int inv = 0;
    for (size_t a = 0; a < t; ++a)
      for (size_t b = a + 1; b < t; ++b)
        if (perm[a] > perm[b]) ++inv;
    Word w(t);
    for (size_t k = 0; k < t; ++k) w[k] = {rows[k], cols[perm[k]]};
    // Rows strictly increase, so the word is already normal-ordered.
    QScalar c = QScalar::one();
    for (int k = 0; k < inv; ++k) c *= minus_q;
    out.add_term(w, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

AlgElem quantum_det(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return quantum_minor(n, all, all);
}

namespace {

template <typename F>
void for_each_subset(int n, int size, F&& f) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i + 1;
  while (true) {
    f(idx);
    int k = size - 1;
    while (k >= 0 && idx[k] == n - (size - 1 - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

AlgElem sigma(int n, int i) {
  if (i < 1 || i > n) fail(ErrCode::index_out_of_range, "sigma index outside 1..n");
  AlgElem out(n);
  for_each_subset(n, i, [&](const std::vector<int>& I) {
    out = out + quantum_minor(n, I, I);
  });
  return out;
}

AlgElem tau(int n, int i) {
  if (i < 1 || i > n) fail(ErrCode::index_out_of_range, "tau index outside 1..n");
  AlgElem out(n);
  for_each_subset(n, i, [&](const std::vector<int>& I) {
    long w = 0;
    for (int v : I) w += v;
    out = out + quantum_minor(n, I, I).scale(QScalar::q_power(-2 * w, n));
  });
  return out;
}

std::vector<Word> pbw_words(int n, int degree) {
  std::vector<Word> out;
  Word cur;
  // Nondecreasing words over the n*n letters, smallest letter first.
  auto rec = [&](auto&& self, Letter min_letter, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = min_letter.first; i <= n; ++i) {
      int jstart = (i == min_letter.first) ? min_letter.second : 1;
      for (int j = jstart; j <= n; ++j) {
        cur.push_back({i, j});
        self(self, {i, j}, remaining - 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, {1, 1}, degree);
  return out;
}

}  // namespace qalg
