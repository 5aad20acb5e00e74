#include "qalg/scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

QScalar QScalar::term(long e, const mpq_class& c) {
  QScalar r;
  if (c != 0) r.t_.push_back({e, c});
  return r;
}

bool QScalar::is_one() const {
  return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1;
}

long QScalar::valuation() const { return t_.empty() ? 0 : t_.front().first; }
long QScalar::degree() const { return t_.empty() ? 0 : t_.back().first; }

const mpq_class& QScalar::leading_coeff() const {
  static const mpq_class z(0);
  return t_.empty() ? z : t_.back().second;
}

QScalar QScalar::operator-() const {
  QScalar r;
  r.t_.reserve(t_.size());
  for (const auto& [e, c] : t_) r.t_.push_back({e, -c});
  return r;
}

QScalar QScalar::operator+(const QScalar& o) const {
  QScalar r;
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
      r.t_.push_back(t_[i++]);
    } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
      r.t_.push_back(o.t_[j++]);
    } else {
      mpq_class c = t_[i].second + o.t_[j].second;
      if (c != 0) r.t_.push_back({t_[i].first, c});
      ++i, ++j;
    }
  }
  return r;
}

QScalar QScalar::operator-(const QScalar& o) const { return *this + (-o); }

QScalar QScalar::operator*(const QScalar& o) const {
  if (t_.empty() || o.t_.empty()) return QScalar();
  std::map<long, mpq_class> acc;
  for (const auto& [ea, ca] : t_)
    for (const auto& [eb, cb] : o.t_) acc[ea + eb] += ca * cb;
  QScalar r;
  for (const auto& [e, c] : acc)
    if (c != 0) r.t_.push_back({e, c});
  return r;
}

QScalar QScalar::scale(const mpq_class& c) const {
  if (c == 0) return QScalar();
  QScalar r;
  r.t_.reserve(t_.size());
  for (const auto& [e, k] : t_) r.t_.push_back({e, k * c});
  return r;
}

QScalar QScalar::shift(long e) const {
  QScalar r = *this;
  for (auto& t : r.t_) t.first += e;
  return r;
}

QScalar QScalar::invert_monomial() const {
  if (t_.size() != 1) fail(ErrCode::not_divisible, "inverse of a non-monomial scalar");
  return term(-t_[0].first, mpq_class(1) / t_[0].second);
}

std::string QScalar::str(int n) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    mpq_class a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string var;
    if (e != 0) {
      std::ostringstream vs;
      if (n > 0 && e % n == 0) {
        vs << "q";
        if (e / n != 1) vs << "^" << e / n;
      } else {
        vs << "s";
        if (e != 1) vs << "^" << e;
      }
      var = vs.str();
    }
    if (var.empty()) {
      os << a.get_str();
    } else if (a == 1) {
      os << var;
    } else {
      os << a.get_str() << "*" << var;
    }
  }
  return os.str();
}

namespace {

// Dense polynomial utilities on coefficient vectors indexed from exponent 0.
using Dense = std::vector<mpq_class>;

Dense to_dense(const QScalar& a, long base) {
  Dense d(static_cast<size_t>(a.degree() - base) + 1, mpq_class(0));
  for (const auto& [e, c] : a.terms()) d[static_cast<size_t>(e - base)] = c;
  return d;
}

QScalar from_dense(const Dense& d, long base) {
  QScalar r;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) r += QScalar::term(base + static_cast<long>(i), d[i]);
  return r;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

// Remainder of a by b over the rationals; b nonzero.
Dense poly_rem(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  return a;
}

// Scale to integer coefficients with content 1 and positive leading term.
void make_primitive(Dense& d) {
  trim(d);
  if (d.empty()) return;
  mpz_class l(1);
  for (const auto& c : d) {
    mpz_class den = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    l = l / g * den;
  }
  mpz_class g(0);
  for (auto& c : d) {
    c *= l;
    mpz_class num = c.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) g = 1;
  for (auto& c : d) c /= g;
  if (d.back() < 0)
    for (auto& c : d) c = -c;
}

}  // namespace

bool divides(const QScalar& a, const QScalar& b) {
  if (b.is_zero()) return false;
  if (a.is_zero()) return true;
  Dense da = to_dense(a, a.valuation());
  Dense db = to_dense(b, b.valuation());
  return poly_rem(da, db).empty();
}

QScalar divide_exact(const QScalar& a, const QScalar& b) {
  if (b.is_zero()) fail(ErrCode::division_by_zero, "scalar division by zero");
  if (a.is_zero()) return QScalar::zero();
  long va = a.valuation(), vb = b.valuation();
  Dense A = to_dense(a, va);
  Dense B = to_dense(b, vb);
  if (A.size() < B.size())
    fail(ErrCode::not_divisible, "scalar quotient does not exist");
  Dense Q(A.size() - B.size() + 1, mpq_class(0));
  for (size_t k = Q.size(); k-- > 0;) {
    mpq_class c = A[k + B.size() - 1] / B.back();
    Q[k] = c;
    if (c != 0)
      for (size_t i = 0; i < B.size(); ++i) A[k + i] -= c * B[i];
  }
  for (const auto& c : A)
    if (c != 0) fail(ErrCode::not_divisible, "scalar quotient does not exist");
  return from_dense(Q, va - vb);
}

QScalar qgcd(const QScalar& a, const QScalar& b) {
  if (a.is_zero() && b.is_zero()) return QScalar::zero();
  Dense da = a.is_zero() ? Dense() : to_dense(a, a.valuation());
  Dense db = b.is_zero() ? Dense() : to_dense(b, b.valuation());
  make_primitive(da);
  make_primitive(db);
  while (!db.empty()) {
    Dense r = poly_rem(da, db);
    make_primitive(r);
    da = std::move(db);
    db = std::move(r);
  }
  return from_dense(da, 0);
}

QFraction::QFraction(const QScalar& n, const QScalar& d) : num_(n), den_(d) {
  if (den_.is_zero()) fail(ErrCode::division_by_zero, "fraction with zero denominator");
  normalize();
}

void QFraction::normalize() {
  if (num_.is_zero()) {
    den_ = QScalar::one();
    return;
  }
  QScalar g = qgcd(num_, den_);
  if (!g.is_one()) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  // Spend the remaining unit freedom: denominator monic with valuation 0.
  QScalar u = QScalar::term(den_.valuation(), den_.leading_coeff()).invert_monomial();
  num_ = num_ * u;
  den_ = den_ * u;
}

QFraction QFraction::operator-() const {
  QFraction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

QFraction QFraction::operator+(const QFraction& o) const {
  return QFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QFraction QFraction::operator-(const QFraction& o) const { return *this + (-o); }

QFraction QFraction::operator*(const QFraction& o) const {
  return QFraction(num_ * o.num_, den_ * o.den_);
}

QFraction QFraction::operator/(const QFraction& o) const {
  if (o.is_zero()) fail(ErrCode::division_by_zero, "fraction division by zero");
  return QFraction(num_ * o.den_, den_ * o.num_);
}

}  // namespace qalg
