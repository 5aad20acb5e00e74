#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qalg/errors.hpp"
#include "qalg/linalg.hpp"
#include "qalg/scalar.hpp"

using namespace qalg;

namespace {

constexpr int kN = 2;  // q = s^2 throughout this file

QScalar q(long k = 1) { return QScalar::q_power(k, kN); }

QScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), expo(-4, 4), num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  QScalar r;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    mpq_class c(num(rng), den(rng));
    c.canonicalize();
    r += QScalar::term(expo(rng), c);
  }
  return r;
}

QFraction random_fraction(std::mt19937& rng) {
  QScalar d;
  while (d.is_zero()) d = random_scalar(rng);
  return QFraction(random_scalar(rng), d);
}

}  // namespace

TEST_CASE("basic arithmetic identities") {
  CHECK(q(1) * q(-1) == QScalar::one());
  CHECK((q(1) - q(-1)) + q(-1) == q(1));
  QScalar one = QScalar::one();
  CHECK((one + q()) * (one - q()) == one - q(2));
  CHECK(QScalar::zero().is_zero());
  CHECK((q() - q()).is_zero());
}

TEST_CASE("ring axioms on random values") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("exact division") {
  CHECK(divide_exact(q(2) - QScalar::one(), q(1) - QScalar::one()) ==
        q(1) + QScalar::one());
  CHECK(divide_exact(q(), q()) == QScalar::one());
  CHECK_THROWS_AS(divide_exact(q() + QScalar::one(), q() - QScalar::one()), Error);
  CHECK_THROWS_AS(divide_exact(q(), QScalar::zero()), Error);

  std::mt19937 rng(777);
  for (int i = 0; i < 100; ++i) {
    QScalar a = random_scalar(rng);
    QScalar b;
    while (b.is_zero()) b = random_scalar(rng);
    CHECK(divide_exact(a * b, b) == a);
  }
}

TEST_CASE("laurent units divide everything they should") {
  QScalar u = QScalar::term(-3, mpq_class(5, 2));
  CHECK(u * u.invert_monomial() == QScalar::one());
  CHECK(divide_exact(q(3) + q(-1), u) * u == q(3) + q(-1));
}

TEST_CASE("gcd normalization") {
  QScalar a = (q() - QScalar::one()) * (q() + QScalar::one());
  QScalar b = (q() - QScalar::one()) * q(3);
  QScalar g = qgcd(a, b);
  CHECK(divides(a, g));
  CHECK(divides(b, g));
  CHECK(g.valuation() == 0);
  CHECK(g.leading_coeff() > 0);
  CHECK(qgcd(QScalar::zero(), QScalar::zero()).is_zero());
}

TEST_CASE("fraction canonical form and field axioms") {
  QFraction half(QScalar::one(), QScalar::rational(2));
  CHECK(half + half == QFraction(QScalar::one()));
  QFraction x(q() - QScalar::one(), q(2) - QScalar::one());
  QFraction y(QScalar::one(), q() + QScalar::one());
  CHECK(x == y);  // cancels to the same canonical form
  CHECK(x.den().valuation() == 0);
  CHECK(x.den().leading_coeff() == 1);
  CHECK_THROWS_AS(QFraction(QScalar::one(), QScalar::zero()), Error);

  std::mt19937 rng(999);
  for (int i = 0; i < 60; ++i) {
    QFraction a = random_fraction(rng), b = random_fraction(rng), c = random_fraction(rng);
    CHECK((a + b) * c == a * c + b * c);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("fraction_solve on pinned small systems") {
  using Row = std::vector<QFraction>;
  QFraction one{QScalar::one()}, zero{};

  auto id2 = fraction_solve({Row{one, zero}, Row{zero, one}});
  CHECK(id2.kernel.empty());
  CHECK(id2.pivot_cols == std::vector<int>{0, 1});

  auto rel = fraction_solve({Row{QFraction(q()), -one}});
  REQUIRE(rel.kernel.size() == 1);
  // kernel of [q, -1] is spanned by (1, q)
  CHECK(rel.kernel[0][0] * QFraction(q()) == rel.kernel[0][1]);
}

TEST_CASE("fraction_solve kernel residual is exactly zero") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<QFraction>> m(4, std::vector<QFraction>(4));
    for (auto& row : m)
      for (auto& e : row) e = QFraction(random_scalar(rng));
    auto res = fraction_solve(m);
    for (const auto& v : res.kernel) {
      for (const auto& row : m) {
        QFraction acc;
        for (size_t c = 0; c < row.size(); ++c) acc = acc + row[c] * v[c];
        CHECK(acc.is_zero());
      }
    }
    CHECK(res.pivot_cols.size() + res.kernel.size() == 4);
  }
}

TEST_CASE("sparse echelon kernel matches residual oracle") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<SparseRow> rows;
    std::uniform_int_distribution<int> col(0, 5);
    for (int r = 0; r < 7; ++r) {
      SparseRow row;
      for (int c = 0; c < 6; ++c) {
        QScalar v = random_scalar(rng);
        if (!v.is_zero() && col(rng) < 3) row.push_back({c, v});
      }
      rows.push_back(row);
    }
    auto ker = kernel_basis(rows, 6);
    for (const auto& v : ker) {
      for (const auto& row : rows) {
        QScalar acc;
        for (const auto& [c, val] : row) acc += val * v[c];
        CHECK(acc.is_zero());
      }
    }
    CHECK(rank_of(rows, 6) + static_cast<int>(ker.size()) == 6);
  }
}

TEST_CASE("particular solutions solve the system") {
  using Row = std::vector<QFraction>;
  QFraction one{QScalar::one()};
  std::vector<Row> m{Row{QFraction(q()), one}, Row{one, one}};
  std::vector<QFraction> rhs{QFraction(q(2)), QFraction(q())};
  auto res = fraction_solve(m, rhs);
  REQUIRE(res.consistent);
  for (size_t r = 0; r < m.size(); ++r) {
    QFraction acc;
    for (size_t c = 0; c < m[r].size(); ++c) acc = acc + m[r][c] * res.particular[c];
    CHECK(acc == rhs[r]);
  }
}
