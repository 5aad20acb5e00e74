#pragma once

#include <map>
#include <random>
#include <vector>

#include "qalg/scalar.hpp"

namespace qalg {

// Generator x_{ij}, 1-based indices. Letters compare lexicographically by
// (row, col); a word is in normal order when its letters are nondecreasing.
using Letter = std::pair<int, int>;
using Word = std::vector<Letter>;

inline int word_degree(const Word& w) { return static_cast<int>(w.size()); }
bool is_normal_order(const Word& w);
std::vector<int> row_content(const Word& w);  // sorted row indices
std::vector<int> col_content(const Word& w);  // sorted column indices

struct GradedLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/**
 * Element of the quantized matrix algebra O_q(M_n): a finite linear
 * combination of normal-ordered monomials with QScalar coefficients.
 */
class AlgElem {
public:
  explicit AlgElem(int n) : n_(n) {}
  static AlgElem zero(int n) { return AlgElem(n); }
  static AlgElem unit(int n);
  static AlgElem generator(int n, int i, int j);
  // The word must already be in normal order.
  static AlgElem monomial(int n, const Word& w, const QScalar& c = QScalar::one());

  int n() const { return n_; }
  const std::map<Word, QScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Adds c*w assuming w is normal-ordered; prunes a cancelled term.
  void add_term(const Word& w, const QScalar& c);
  QScalar coeff(const Word& w) const;

  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem operator*(const AlgElem& o) const;
  AlgElem operator-() const;
  AlgElem scale(const QScalar& c) const;
  bool operator==(const AlgElem& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const AlgElem& o) const { return !(*this == o); }

  int max_degree() const;  // 0 for the zero element
  bool is_homogeneous(int* deg = nullptr) const;
  std::map<int, AlgElem> homogeneous_components() const;

private:
  int n_;
  std::map<Word, QScalar> terms_;
};

// Rewrites an arbitrary word to its normal form, leftmost descent first.
AlgElem normal_form(int n, const Word& raw, const QScalar& coeff = QScalar::one());
// Same result, but each rewriting step picks a random reducible position.
AlgElem normal_form_random(int n, const Word& raw, std::mt19937& rng);

// Quantum minor [rows|cols]: the alternating (-q)^{l(sigma)}-weighted sum
// over permutations of the column set. Sizes must match.
AlgElem quantum_minor(int n, std::vector<int> rows, std::vector<int> cols);
AlgElem quantum_det(int n);
// Sum of the principal i x i minors.
AlgElem sigma(int n, int i);
// The q^{-2w(I)}-weighted sum of principal i x i minors, w(I) = sum of I.
AlgElem tau(int n, int i);

// All normal-ordered words of the given degree, ascending lexicographically.
std::vector<Word> pbw_words(int n, int degree);

void check_index(int n, int i, int j);

}  // namespace qalg
