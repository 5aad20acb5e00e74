#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

#include "qalg/errors.hpp"
#include "qalg/rform.hpp"

using namespace qalg;

namespace {

QScalar q(int k, int n) { return QScalar::q_power(k, n); }

GLElem gen(int n, int i, int j) { return GLElem::generator(n, i, j); }

Word rand_word(int n, int len, std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(1, n);
  Word w(len);
  for (auto& l : w) l = {idx(rng), idx(rng)};
  return w;
}

GLElem slot_elem(int n, const TSlot& s, const QScalar& c = QScalar::one()) {
  return GLElem(AlgElem::monomial(n, s.w, c), s.det_power);
}

// Convolution identities r * rbar = rbar * r = eps x eps at (a, b).
bool conv_check(const RForm& F, const GLElem& a, const GLElem& b) {
  const int n = a.n();
  const TensorElem da = coproduct(a);
  const TensorElem db = coproduct(b);
  QScalar lhs, rhs;
  for (const auto& [ka, ca] : da.terms())
    for (const auto& [kb, cb] : db.terms()) {
      const GLElem a1 = slot_elem(n, ka[0]), a2 = slot_elem(n, ka[1]);
      const GLElem b1 = slot_elem(n, kb[0]), b2 = slot_elem(n, kb[1]);
      const QScalar c = ca * cb;
      lhs += c * F.eval(FormKind::r, a1, b1) * F.eval(FormKind::rbar, a2, b2);
      rhs += c * F.eval(FormKind::rbar, a1, b1) * F.eval(FormKind::r, a2, b2);
    }
  const QScalar want = counit(a) * counit(b);
  return lhs == want && rhs == want;
}

// Braided commutativity: b a == sum r(a1, b1) a2 b2 rbar(a3, b3), compared
// in the algebra named by the form's target.
bool braid_check(const RForm& F, const GLElem& a, const GLElem& b) {
  const int n = a.n();
  const TensorElem da = coproduct2(a);
  const TensorElem db = coproduct2(b);
  GLElem got(n);
  for (const auto& [ka, ca] : da.terms())
    for (const auto& [kb, cb] : db.terms()) {
      const QScalar c =
          ca * cb *
          F.eval(FormKind::r, slot_elem(n, ka[0]), slot_elem(n, kb[0])) *
          F.eval(FormKind::rbar, slot_elem(n, ka[2]), slot_elem(n, kb[2]));
      if (c.is_zero()) continue;
      got = got + (slot_elem(n, ka[1]) * slot_elem(n, kb[1])).scale(c);
    }
  const GLElem want = b * a;
  return F.target() == Target::sl ? sl_equal(got, want) : gl_equal(got, want);
}

// r(ab, c) == sum r(a, c1) r(b, c2), with the legs paired the other way
// around for rbar. The left side evaluates the normalized product, so the
// law is not true by construction.
bool law1_check(const RForm& F, FormKind f, const GLElem& a, const GLElem& b,
                const GLElem& c) {
  const int n = a.n();
  QScalar rhs;
  const TensorElem dc = coproduct(c);
  for (const auto& [kc, cc] : dc.terms()) {
    const GLElem c1 = slot_elem(n, kc[0]), c2 = slot_elem(n, kc[1]);
    rhs += cc * (f == FormKind::r ? F.eval(f, a, c1) * F.eval(f, b, c2)
                                  : F.eval(f, b, c1) * F.eval(f, a, c2));
  }
  return F.eval(f, a * b, c) == rhs;
}

// r(a, bc) == sum r(a1, c) r(a2, b), legs swapped for rbar.
bool law2_check(const RForm& F, FormKind f, const GLElem& a, const GLElem& b,
                const GLElem& c) {
  const int n = a.n();
  QScalar rhs;
  const TensorElem da = coproduct(a);
  for (const auto& [ka, ca] : da.terms()) {
    const GLElem a1 = slot_elem(n, ka[0]), a2 = slot_elem(n, ka[1]);
    rhs += ca * (f == FormKind::r ? F.eval(f, a1, c) * F.eval(f, a2, b)
                                  : F.eval(f, a2, c) * F.eval(f, a1, b));
  }
  return F.eval(f, a, b * c) == rhs;
}

// Applies psi (or phi) to the first tensor leg.
TensorElem map_first_leg(const TensorElem& t, PsiDirection dir,
                         Target target) {
  const int n = t.n();
  TensorElem out(n, 2);
  std::map<TSlot, GLElem> memo;
  for (const auto& [key, c] : t.terms()) {
    auto it = memo.find(key[0]);
    if (it == memo.end())
      it = memo.emplace(key[0], psi_map(slot_elem(n, key[0]), dir, target))
               .first;
    const GLElem& g = it->second;
    for (const auto& [w, gc] : g.num().terms())
      out.add_term({TSlot{w, g.det_power()}, key[1]}, c * gc);
  }
  return out;
}

}  // namespace

TEST_CASE("generator table has the braid pattern") {
  for (int n = 2; n <= 3; ++n) {
    const RForm& F = RForm::instance(n, Target::gl);
    CHECK(F.n() == n);
    CHECK(F.normalization_s_power() == 0);
    CHECK(F.letter_pair(FormKind::r, 1, 1, 1, 1) == q(1, n));
    CHECK(F.letter_pair(FormKind::r, 1, 1, 2, 2) == QScalar::one());
    CHECK(F.letter_pair(FormKind::rbar, 1, 1, 1, 1) == q(-1, n));

    // Exactly one orientation of each off-diagonal band is live.
    const QScalar band = q(1, n) - q(-1, n);
    const bool low = F.letter_pair(FormKind::r, 2, 1, 1, 2) == band;
    const bool high = F.letter_pair(FormKind::r, 1, 2, 2, 1) == band;
    CHECK(low != high);
    CHECK((low ? F.letter_pair(FormKind::r, 1, 2, 2, 1)
               : F.letter_pair(FormKind::r, 2, 1, 1, 2))
              .is_zero());

    int nonzero = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            const QScalar& c = F.letter_pair(FormKind::r, i, j, k, l);
            if (c.is_zero()) continue;
            ++nonzero;
            if (i == j && k == l)
              CHECK(c == (i == k ? q(1, n) : QScalar::one()));
            else {
              CHECK(i == l);
              CHECK(j == k);
              CHECK(c == band);
            }
          }
    CHECK(nonzero == n * n + n * (n - 1) / 2);

    // The sl table is the same one with s^{-1} per pairing, reciprocally
    // on the inverse form.
    const RForm& S = RForm::instance(n, Target::sl);
    CHECK(S.normalization_s_power() == -1);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            CHECK(S.letter_pair(FormKind::r, i, j, k, l) ==
                  F.letter_pair(FormKind::r, i, j, k, l) *
                      QScalar::s_power(-1));
            CHECK(S.letter_pair(FormKind::rbar, i, j, k, l) ==
                  F.letter_pair(FormKind::rbar, i, j, k, l) *
                      QScalar::s_power(1));
          }
  }
}

TEST_CASE("pairing with the unit is the counit") {
  for (int n = 2; n <= 3; ++n) {
    const RForm& F = RForm::instance(n, Target::gl);
    const GLElem one = GLElem::unit(n);
    CHECK(F.eval(FormKind::r, one, gen(n, 1, 1)) == QScalar::one());
    CHECK(F.eval(FormKind::r, gen(n, 1, 1), one) == QScalar::one());
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int f = 0; f < 2; ++f) {
          const FormKind fk = static_cast<FormKind>(f);
          const QScalar want = i == j ? QScalar::one() : QScalar::zero();
          CHECK(F.eval(fk, one, gen(n, i, j)) == want);
          CHECK(F.eval(fk, gen(n, i, j), one) == want);
        }
    const GLElem s1 = GLElem::from(sigma(n, 1));
    CHECK(F.eval(FormKind::r, one, s1) == counit(s1));
    const GLElem dinv = GLElem::det_power_elem(n, -1);
    CHECK(F.eval(FormKind::r, dinv, one) == QScalar::one());
    CHECK(F.eval(FormKind::rbar, one, dinv) == QScalar::one());
  }
}

TEST_CASE("the two forms are convolution inverses") {
  for (int n = 2; n <= 3; ++n)
    for (Target t : {Target::gl, Target::sl}) {
      const RForm& F = RForm::instance(n, t);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
              CHECK(conv_check(F, gen(n, i, j), gen(n, k, l)));
    }

  // Random degree-2 pairs, with inverse determinant powers thrown in on
  // the gl side.
  std::mt19937 rng(12345);
  const RForm& G2 = RForm::instance(2, Target::gl);
  const RForm& S2 = RForm::instance(2, Target::sl);
  std::uniform_int_distribution<int> kp(0, 1);
  for (int t = 0; t < 30; ++t) {
    const GLElem a(normal_form(2, rand_word(2, 2, rng)), kp(rng));
    const GLElem b(normal_form(2, rand_word(2, 2, rng)), kp(rng));
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(conv_check(G2, a, b));
    if (t < 8) CHECK(conv_check(S2, a, b));
  }
}

TEST_CASE("braided commutativity on generator pairs") {
  for (int n = 2; n <= 3; ++n)
    for (Target t : {Target::gl, Target::sl}) {
      const RForm& F = RForm::instance(n, t);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
              CHECK(braid_check(F, gen(n, i, j), gen(n, k, l)));
    }

  std::mt19937 rng(2025);
  const RForm& G2 = RForm::instance(2, Target::gl);
  for (int t = 0; t < 6; ++t) {
    const GLElem a = GLElem::from(normal_form(2, rand_word(2, 2, rng)));
    const GLElem b = GLElem::from(normal_form(2, rand_word(2, 2, rng)));
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(braid_check(G2, a, b));
  }
}

TEST_CASE("multiplicative extension laws") {
  for (Target t : {Target::gl, Target::sl}) {
    const RForm& F = RForm::instance(2, t);
    for (int f = 0; f < 2; ++f)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c) {
            const FormKind fk = static_cast<FormKind>(f);
            const GLElem A = gen(2, a / 2 + 1, a % 2 + 1);
            const GLElem B = gen(2, b / 2 + 1, b % 2 + 1);
            const GLElem C = gen(2, c / 2 + 1, c % 2 + 1);
            CHECK(law1_check(F, fk, A, B, C));
            CHECK(law2_check(F, fk, A, B, C));
          }
  }

  // A seeded sample of the 729 generator triples at n = 3, plus mixed
  // degrees: the left sides normalize products before evaluating.
  const RForm& G3 = RForm::instance(3, Target::gl);
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> idx(1, 3);
  for (int t = 0; t < 40; ++t) {
    const GLElem A = gen(3, idx(rng), idx(rng));
    const GLElem B = gen(3, idx(rng), idx(rng));
    const GLElem C = gen(3, idx(rng), idx(rng));
    const FormKind fk = t % 2 ? FormKind::r : FormKind::rbar;
    CHECK(law1_check(G3, fk, A, B, C));
    CHECK(law2_check(G3, fk, A, B, C));
  }
  const RForm& G2 = RForm::instance(2, Target::gl);
  for (int t = 0; t < 10; ++t) {
    const GLElem a = GLElem::from(normal_form(2, rand_word(2, 2, rng)));
    if (a.is_zero()) continue;
    const GLElem b = gen(2, idx(rng) % 2 + 1, idx(rng) % 2 + 1);
    const GLElem c = gen(2, idx(rng) % 2 + 1, idx(rng) % 2 + 1);
    CHECK(law1_check(G2, FormKind::r, a, b, c));
    CHECK(law2_check(G2, FormKind::r, c, b, a));
  }
}

TEST_CASE("inverse determinant pairings") {
  for (int n = 2; n <= 3; ++n) {
    const RForm& F = RForm::instance(n, Target::gl);
    const GLElem det = GLElem::from(quantum_det(n));
    const GLElem dinv = GLElem::det_power_elem(n, -1);

    // det_q pairs diagonally against letters and the stored inverse-det
    // tables are its convolution inverses.
    for (int f = 0; f < 2; ++f) {
      const FormKind fk = static_cast<FormKind>(f);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          QScalar conv, vnoc;
          for (int v = 1; v <= n; ++v) {
            conv += F.inv_det_letter(fk, k, v) *
                    F.eval(fk, det, gen(n, v, l));
            vnoc += F.eval(fk, gen(n, k, v), det) *
                    F.letter_inv_det(fk, v, l);
          }
          const QScalar want =
              k == l ? QScalar::one() : QScalar::zero();
          if (fk == FormKind::r) {
            CHECK(conv == want);
            CHECK(vnoc == want);
          }
          CHECK(F.eval(fk, dinv, gen(n, k, l)) ==
                F.inv_det_letter(fk, k, l));
          CHECK(F.eval(fk, gen(n, k, l), dinv) ==
                F.letter_inv_det(fk, k, l));
        }
      CHECK(F.inv_det_pair(fk) == F.eval(fk, det, det));
    }
    CHECK(F.eval(FormKind::r, det, det) == q(n, n));
    CHECK(F.eval(FormKind::r, det, gen(n, 1, 1)) == q(1, n));
    CHECK(F.eval(FormKind::r, det, gen(n, 1, 2)).is_zero());
    CHECK(F.eval(FormKind::r, dinv, dinv) == F.inv_det_pair(FormKind::r));
  }

  const RForm& S = RForm::instance(2, Target::sl);
  CHECK_THROWS_AS((void)S.inv_det_letter(FormKind::r, 1, 1), Error);
  try {
    (void)S.letter_inv_det(FormKind::r, 1, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::bad_argument);
  }
  CHECK_THROWS_AS(
      (void)RForm::instance(2, Target::gl).letter_pair(FormKind::r, 0, 1, 1, 1),
      Error);
}

TEST_CASE("antipode compatibility") {
  // rbar is r composed with the antipode on the first argument; checking
  // it on generators drives the inverse-det tables through eval.
  for (int n = 2; n <= 3; ++n) {
    const RForm& F = RForm::instance(n, Target::gl);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            CHECK(F.eval(FormKind::rbar, gen(n, i, j), gen(n, k, l)) ==
                  F.eval(FormKind::r, antipode(gen(n, i, j)), gen(n, k, l)));
  }
  const RForm& S = RForm::instance(2, Target::sl);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          CHECK(S.eval(FormKind::rbar, gen(2, i, j), gen(2, k, l)) ==
                S.eval(FormKind::r, antipode(gen(2, i, j)), gen(2, k, l)));

  // r(S^2 x, S^2 y) = r(x, y) on generators.
  for (int n = 2; n <= 3; ++n)
    for (Target t : {Target::gl, Target::sl}) {
      const RForm& F = RForm::instance(n, t);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              const GLElem a = antipode(antipode(gen(n, i, j)));
              const GLElem b = antipode(antipode(gen(n, k, l)));
              CHECK(F.eval(FormKind::r, a, b) ==
                    F.eval(FormKind::r, gen(n, i, j), gen(n, k, l)));
            }
    }
}

TEST_CASE("sl form is constant on classes") {
  const RForm& S = RForm::instance(2, Target::sl);
  const AlgElem det = quantum_det(2);

  // det_q itself pairs like the unit.
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) {
      const QScalar want = k == l ? QScalar::one() : QScalar::zero();
      CHECK(S.eval(FormKind::r, GLElem::from(det), gen(2, k, l)) == want);
      CHECK(S.eval(FormKind::r, gen(2, k, l), GLElem::from(det)) == want);
    }

  // Linearity across representatives: det_q u + v is reduced as a whole,
  // so its words still contain the det_q factor and the pairing must not
  // notice.
  std::mt19937 rng(4242);
  for (int t = 0; t < 6; ++t) {
    const AlgElem u = normal_form(2, rand_word(2, 1 + t % 2, rng));
    const AlgElem v = normal_form(2, rand_word(2, 2, rng));
    if (u.is_zero() || v.is_zero()) continue;
    const GLElem mixed = GLElem::from(det * u + v);
    const GLElem b = t % 2 ? gen(2, 1, 1) : GLElem::from(sigma(2, 1));
    const QScalar split = S.eval(FormKind::r, GLElem::from(u), b) +
                          S.eval(FormKind::r, GLElem::from(v), b);
    CHECK(S.eval(FormKind::r, mixed, b) == split);
    CHECK(S.eval(FormKind::rbar, b, mixed) ==
          S.eval(FormKind::rbar, b, GLElem::from(u)) +
              S.eval(FormKind::rbar, b, GLElem::from(v)));
  }
}

TEST_CASE("psi and phi are mutually inverse") {
  for (Target t : {Target::gl, Target::sl}) {
    CHECK(gl_equal(psi_map(GLElem::unit(2), PsiDirection::psi, t),
                   GLElem::unit(2)));
    CHECK(gl_equal(psi_map(GLElem::unit(2), PsiDirection::phi, t),
                   GLElem::unit(2)));
  }

  std::mt19937 rng(9001);
  std::uniform_int_distribution<int> len(0, 2), kp(0, 1);
  int done = 0;
  for (int t = 0; t < 40 && done < 30; ++t) {
    const GLElem v(normal_form(2, rand_word(2, len(rng), rng)), kp(rng));
    if (v.is_zero()) continue;
    ++done;
    const GLElem back = psi_map(psi_map(v, PsiDirection::psi, Target::gl),
                                PsiDirection::phi, Target::gl);
    CHECK(gl_equal(back, v));
  }
  CHECK(done == 30);
  for (int t = 0; t < 12; ++t) {
    const GLElem v = GLElem::from(normal_form(2, rand_word(2, len(rng), rng)));
    if (v.is_zero()) continue;
    const GLElem back = psi_map(psi_map(v, PsiDirection::phi, Target::sl),
                                PsiDirection::psi, Target::sl);
    CHECK(sl_equal(back, v));
  }
  for (int t = 0; t < 8; ++t) {
    const GLElem v(normal_form(3, rand_word(3, len(rng), rng)), kp(rng));
    if (v.is_zero()) continue;
    const GLElem back = psi_map(psi_map(v, PsiDirection::psi, Target::gl),
                                PsiDirection::phi, Target::gl);
    CHECK(gl_equal(back, v));
  }
}

TEST_CASE("psi exchanges the conjugation coactions") {
  for (int n = 2; n <= 3; ++n) {
    const GLElem t1 = GLElem::from(tau(n, 1));
    const GLElem s1 = GLElem::from(sigma(n, 1));
    for (Target t : {Target::gl, Target::sl}) {
      // tau_1 is beta-coinvariant, so psi moves it into the
      // alpha-coinvariants; sigma_1 goes the other way through phi.
      CHECK(is_coinvariant(CoKind::alpha, t,
                           psi_map(t1, PsiDirection::psi, t)));
      CHECK(is_coinvariant(CoKind::beta, t,
                           psi_map(s1, PsiDirection::phi, t)));
    }
  }

  // Degree preservation on a sample of monomials.
  std::mt19937 rng(31337);
  for (int t = 0; t < 6; ++t) {
    const GLElem v = GLElem::from(normal_form(2, rand_word(2, 1 + t % 3, rng)));
    if (v.is_zero()) continue;
    const GLElem p = psi_map(v, PsiDirection::psi, Target::sl);
    const auto grades = pi_Z_grade(p);
    CHECK(grades.size() <= 1);
    if (!p.is_zero()) {
      CHECK(grades.size() == 1);
      CHECK(grades.begin()->first == 1 + t % 3);
    }
  }

  // alpha(psi(v)) == (psi x id)(beta(v)) on the monomial basis through
  // degree 3, and the phi direction on degree <= 2.
  const std::vector<SlotType> slots{SlotType::gl, SlotType::sl};
  for (int d = 1; d <= 3; ++d)
    for (const Word& w : pbw_words(2, d)) {
      const GLElem v = GLElem::from(AlgElem::monomial(2, w));
      const TensorElem lhs =
          coact(CoKind::alpha, Target::sl,
                psi_map(v, PsiDirection::psi, Target::sl));
      const TensorElem rhs = map_first_leg(
          coact(CoKind::beta, Target::sl, v), PsiDirection::psi, Target::sl);
      CHECK(tensor_equal(lhs, rhs, slots));
      if (d <= 2) {
        const TensorElem blhs =
            coact(CoKind::beta, Target::sl,
                  psi_map(v, PsiDirection::phi, Target::sl));
        const TensorElem brhs = map_first_leg(
            coact(CoKind::alpha, Target::sl, v), PsiDirection::phi,
            Target::sl);
        CHECK(tensor_equal(blhs, brhs, slots));
      }
    }
}

TEST_CASE("shared instances evaluate consistently across threads") {
  const RForm& F = RForm::instance(2, Target::gl);
  CHECK(&F == &RForm::instance(2, Target::gl));

  std::vector<std::pair<GLElem, GLElem>> pairs;
  std::mt19937 rng(555);
  for (int t = 0; t < 12; ++t) {
    const GLElem a(normal_form(2, rand_word(2, 1 + t % 3, rng)), t % 2);
    const GLElem b = GLElem::from(normal_form(2, rand_word(2, 2, rng)));
    if (a.is_zero() || b.is_zero()) continue;
    pairs.emplace_back(a, b);
  }
  std::vector<QScalar> want;
  for (const auto& [a, b] : pairs) want.push_back(F.eval(FormKind::r, a, b));

  std::vector<int> ok(4, 0);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&, i] {
      int good = 0;
      for (size_t p = 0; p < pairs.size(); ++p)
        if (F.eval(FormKind::r, pairs[p].first, pairs[p].second) == want[p])
          ++good;
      ok[i] = good;
    });
  for (auto& th : threads) th.join();
  for (int i = 0; i < 4; ++i) CHECK(ok[i] == static_cast<int>(pairs.size()));
}
