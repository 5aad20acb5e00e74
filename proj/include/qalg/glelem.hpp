#pragma once

#include <compare>
#include <map>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/scalar.hpp"

namespace qalg {

/// Decides whether det_q divides a, and if so computes the quotient.
///
/// Works monomial by monomial: the lex-least word of det_q * u is the
/// sorted merge of the diagonal word into the lex-least word of u, with
/// unit coefficient, so repeatedly peeling the lex-least word of the
/// remainder either exhausts it or certifies non-divisibility.
bool det_try_divide(const AlgElem& a, AlgElem* quotient);

/// Element of the localization of the quantized matrix algebra at det_q,
/// stored as num * det_q^{-det_power} with det_power >= 0 and minimal
/// (num is not divisible by det_q while det_power > 0).
class GLElem {
 public:
  explicit GLElem(int n) : n_(n), num_(n), det_power_(0) {}
  GLElem(AlgElem num, int det_power);

  static GLElem zero(int n) { return GLElem(n); }
  static GLElem unit(int n) { return from(AlgElem::unit(n)); }
  static GLElem from(const AlgElem& a) { return GLElem(a, 0); }
  static GLElem generator(int n, int i, int j) {
    return from(AlgElem::generator(n, i, j));
  }
  /// det_q^k for any integer k.
  static GLElem det_power_elem(int n, int k);

  int n() const { return n_; }
  const AlgElem& num() const { return num_; }
  int det_power() const { return det_power_; }
  bool is_zero() const { return num_.is_zero(); }

  GLElem operator+(const GLElem& o) const;
  GLElem operator-(const GLElem& o) const { return *this + (-o); }
  GLElem operator-() const;
  GLElem operator*(const GLElem& o) const;
  GLElem scale(const QScalar& c) const;
  bool operator==(const GLElem& o) const {
    return n_ == o.n_ && det_power_ == o.det_power_ && num_ == o.num_;
  }
  bool operator!=(const GLElem& o) const { return !(*this == o); }

 private:
  int n_;
  AlgElem num_;
  int det_power_;
  void canonicalize();
};

/// Equality by cross-multiplication, a.num*det^{b.k} == b.num*det^{a.k}.
/// Agrees with operator== because representations are kept canonical.
bool gl_equal(const GLElem& a, const GLElem& b);

/// One tensor factor of a TensorElem term: a normal-ordered monomial
/// times det_q^{-det_power}.
struct TSlot {
  Word w;
  int det_power = 0;
  auto operator<=>(const TSlot&) const = default;
};

using TensorKey = std::vector<TSlot>;

/// Finite linear combination of pure tensors of monomial slots; models
/// elements of two- and three-fold tensor powers of the localization.
class TensorElem {
 public:
  TensorElem(int n, int arity);

  static TensorElem unit(int n, int arity);
  static TensorElem of(const GLElem& a, const GLElem& b);
  static TensorElem of(const GLElem& a, const GLElem& b, const GLElem& c);

  int n() const { return n_; }
  int arity() const { return arity_; }
  const std::map<TensorKey, QScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TensorKey& key, const QScalar& c);

  TensorElem operator+(const TensorElem& o) const;
  TensorElem operator-(const TensorElem& o) const { return *this + (-o); }
  TensorElem operator-() const;
  /// Slotwise product: (a1⊗a2)(b1⊗b2) = a1b1 ⊗ a2b2.
  TensorElem operator*(const TensorElem& o) const;
  TensorElem scale(const QScalar& c) const;

 private:
  int n_;
  int arity_;
  std::map<TensorKey, QScalar> terms_;
};

/// How a tensor slot is to be read when testing for zero: as the matrix
/// bialgebra itself (plain, no det powers), its det_q-localization (gl),
/// or the quotient where det_q is identified with 1 (sl).
enum class SlotType { plain, gl, sl };

/// Exact zero test. gl slots are brought to a common det power; sl slots
/// are additionally bucketed by word-degree residue mod N and lifted by
/// central det_q factors to a common degree before comparing, which is
/// faithful because the quotient map is injective in each fixed degree.
bool tensor_is_zero(const TensorElem& t, const std::vector<SlotType>& slots);

bool tensor_equal(const TensorElem& a, const TensorElem& b,
                  const std::vector<SlotType>& slots);

}  // namespace qalg
