#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <string>

#include "doctest.h"
#include "qalg/errors.hpp"
#include "qalg/expr.hpp"
#include "qalg/hopf.hpp"
#include "qalg/serialize.hpp"

using namespace qalg;
using nlohmann::json;

namespace {

Word rand_word(int n, std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> idx(1, n);
  Word w(len(rng));
  for (Letter& l : w) l = {idx(rng), idx(rng)};
  return w;
}

GLElem rand_elem(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), qe(-3, 3), num(-5, 5),
      den(1, 4), dp(0, 2);
  AlgElem a(n);
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    mpq_class c(num(rng), den(rng));
    c.canonicalize();
    if (c == 0) continue;
    a = a + normal_form(n, rand_word(n, rng, 3),
                        QScalar::term(qe(rng), c));
  }
  return GLElem(a, dp(rng));
}

}  // namespace

TEST_CASE("fixed encodings match the wire format") {
  CHECK(json_of(GLElem::zero(2)) ==
        json::parse(R"({"n":2,"det_power":0,"terms":[]})"));

  const json det = json_of(GLElem::from(quantum_det(2)));
  REQUIRE(det["terms"].size() == 2);
  CHECK(det["terms"][0]["coeff"] == json::parse(R"([[0,"1"]])"));
  CHECK(det["terms"][0]["word"] == json::parse("[[1,1],[2,2]]"));
  CHECK(det["terms"][1]["coeff"] == json::parse(R"([[2,"-1"]])"));
  CHECK(det["terms"][1]["word"] == json::parse("[[1,2],[2,1]]"));

  CHECK(json_of(GLElem::det_power_elem(2, -1))["det_power"] == 1);

  const json t = json_of(coproduct(GLElem::generator(2, 1, 1)));
  CHECK(t["arity"] == 2);
  REQUIRE(t["terms"].size() == 2);
  CHECK(t["terms"][0].contains("left"));
  CHECK(t["terms"][0].contains("right"));
  CHECK(!t["terms"][0].contains("mid"));

  const json g = json_of_graded(iota_embed(GLElem::generator(2, 1, 2)));
  CHECK(g["components"].size() == 1);
  CHECK(g["components"].contains("1"));
}

TEST_CASE("random elements round-trip to equality") {
  std::mt19937 rng(424242);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 2;
    const GLElem v = rand_elem(n, rng);
    const GLElem back = glelem_of_json(json_of(v));
    CHECK(gl_equal(v, back));
    // the encoding itself is canonical: one JSON per element
    CHECK(json_of(back) == json_of(v));
  }
}

TEST_CASE("scalar round-trip keeps exact coefficients") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(-6, 6), num(-20, 20), den(1, 9);
  for (int t = 0; t < 50; ++t) {
    QScalar c = QScalar::zero();
    for (int k = 0; k < 3; ++k) {
      mpq_class r(num(rng), den(rng));
      r.canonicalize();
      c += QScalar::term(e(rng), r);
    }
    CHECK(qscalar_of_json(json_of(c)) == c);
  }
}

TEST_CASE("parse inverts serialization through the grammar") {
  // pretty() output is valid grammar for det-power-free elements; the
  // canonical JSON of the reparse matches.
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    AlgElem a = normal_form(2, rand_word(2, rng, 3));
    const GLElem v = GLElem::from(a);
    if (v.is_zero()) continue;
    const GLElem back = parse_expr(pretty(v), 2);
    CHECK(gl_equal(v, back));
  }
  CHECK(gl_equal(parse_expr(pretty(GLElem::det_power_elem(2, -2)), 2),
                 GLElem::det_power_elem(2, -2)));
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(glelem_of_json(json::parse("[]")), Error);
  CHECK_THROWS_AS(glelem_of_json(json::parse(R"({"n":2,"terms":[]})")),
                  Error);  // det_power missing
  CHECK_THROWS_AS(
      glelem_of_json(json::parse(
          R"({"n":2,"det_power":-1,"terms":[]})")),
      Error);
  // word out of normal order
  CHECK_THROWS_AS(
      glelem_of_json(json::parse(
          R"({"n":2,"det_power":0,
              "terms":[{"coeff":[[0,"1"]],"word":[[2,1],[1,2]]}]})")),
      Error);
  // exponents not strictly increasing
  CHECK_THROWS_AS(
      glelem_of_json(json::parse(
          R"({"n":2,"det_power":0,
              "terms":[{"coeff":[[1,"1"],[0,"1"]],"word":[[1,1]]}]})")),
      Error);
  // zero coefficient encodes nothing
  CHECK_THROWS_AS(
      glelem_of_json(json::parse(
          R"({"n":2,"det_power":0,
              "terms":[{"coeff":[[0,"0"]],"word":[[1,1]]}]})")),
      Error);
  // generator index outside the matrix
  CHECK_THROWS_AS(
      glelem_of_json(json::parse(
          R"({"n":2,"det_power":0,
              "terms":[{"coeff":[[0,"1"]],"word":[[3,1]]}]})")),
      Error);
}
