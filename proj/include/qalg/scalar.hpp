#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qalg {

/**
 * Exact Laurent polynomial in a formal variable s over arbitrary-precision
 * rationals. A context of matrix size n works with q = s^n, so fractional
 * powers q^{k/n} stay exact monomials. Terms are kept sorted by strictly
 * increasing exponent with no zero coefficients; the zero value is the
 * empty term list.
 */
class QScalar {
public:
  using Term = std::pair<long, mpq_class>;

  QScalar() = default;

  static QScalar zero() { return QScalar(); }
  static QScalar one() { return term(0, 1); }
  static QScalar rational(const mpq_class& c) { return term(0, c); }
  static QScalar s_power(long e) { return term(e, 1); }
  // q^k with q = s^n.
  static QScalar q_power(long k, int n) { return term(k * n, 1); }
  static QScalar term(long e, const mpq_class& c);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  // Single-term test; unit elements of the Laurent ring are exactly these.
  bool is_monomial() const { return t_.size() == 1; }

  long valuation() const;  // lowest exponent; 0 for the zero value
  long degree() const;     // highest exponent; 0 for the zero value
  const mpq_class& leading_coeff() const;

  QScalar operator-() const;
  QScalar operator+(const QScalar& o) const;
  QScalar operator-(const QScalar& o) const;
  QScalar operator*(const QScalar& o) const;
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  bool operator==(const QScalar& o) const { return t_ == o.t_; }
  bool operator!=(const QScalar& o) const { return !(*this == o); }
  bool operator<(const QScalar& o) const { return t_ < o.t_; }

  QScalar scale(const mpq_class& c) const;
  QScalar shift(long e) const;  // multiply by s^e
  // Multiplicative inverse, defined only for monomials c*s^e.
  QScalar invert_monomial() const;

  std::string str(int n = 0) const;  // human rendering; n > 0 prefers q = s^n

private:
  std::vector<Term> t_;
};

// Exact quotient c with b*c = a. Throws not_divisible / division_by_zero.
QScalar divide_exact(const QScalar& a, const QScalar& b);
bool divides(const QScalar& a, const QScalar& b);  // b | a

// Gcd up to units, normalized to valuation 0, primitive integer
// coefficients and positive leading coefficient. qgcd(0, 0) = 0.
QScalar qgcd(const QScalar& a, const QScalar& b);

/**
 * Fraction field element over the Laurent ring. Canonical form: gcd-reduced,
 * denominator a monic polynomial with nonzero constant term (valuation 0),
 * so equality is componentwise.
 */
class QFraction {
public:
  QFraction() : num_(QScalar::zero()), den_(QScalar::one()) {}
  QFraction(const QScalar& n) : num_(n), den_(QScalar::one()) {}
  QFraction(const QScalar& n, const QScalar& d);

  const QScalar& num() const { return num_; }
  const QScalar& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QFraction operator-() const;
  QFraction operator+(const QFraction& o) const;
  QFraction operator-(const QFraction& o) const;
  QFraction operator*(const QFraction& o) const;
  QFraction operator/(const QFraction& o) const;
  bool operator==(const QFraction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QFraction& o) const { return !(*this == o); }

private:
  void normalize();
  QScalar num_, den_;
};

}  // namespace qalg
