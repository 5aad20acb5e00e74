#include "qalg/hopf.hpp"

#include <mutex>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

// Per-size caches for antipode images. Generators are filled eagerly;
// word numerators accumulate on demand.
struct AntipodeCache {
  std::vector<GLElem> gens;  // index (i-1)*n + (j-1)
  std::map<Word, AlgElem> words;
  std::mutex mu;
};

AntipodeCache& antipode_cache(int n) {
  static std::mutex registry_mu;
  static std::map<int, AntipodeCache*> registry;
  std::lock_guard<std::mutex> lock(registry_mu);
  auto it = registry.find(n);
  if (it != registry.end()) return *it->second;
  auto* cache = new AntipodeCache;
  cache->gens.reserve(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 1; k <= n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      AlgElem minor = quantum_minor(n, rows, cols);
      QScalar sign = QScalar::one();
      QScalar mq = -QScalar::q_power(i >= j ? 1 : -1, n);
      for (int k = 0; k < std::abs(i - j); ++k) sign *= mq;
      cache->gens.push_back(GLElem(minor.scale(sign), 1));
    }
  registry.emplace(n, cache);
  return *cache;
}

}  // namespace

GLElem antipode_generator(int n, int i, int j) {
  check_index(n, i, j);
  return antipode_cache(n).gens[(i - 1) * n + (j - 1)];
}

AlgElem antipode_word_numerator(int n, const Word& w) {
  if (w.empty()) return AlgElem::unit(n);
  AntipodeCache& cache = antipode_cache(n);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.words.find(w);
    if (it != cache.words.end()) return it->second;
  }
  // S is an anti-homomorphism: S(head · tail) = S(tail) · S(head).
  Word tail(w.begin() + 1, w.end());
  AlgElem result =
      antipode_word_numerator(n, tail) *
      antipode_generator(n, w[0].first, w[0].second).num();
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.words.emplace(w, result);
  return result;
}

GLElem antipode(const GLElem& a) {
  const int n = a.n();
  const int k = a.det_power();
  GLElem out(n);
  for (const auto& [w, c] : a.num().terms()) {
    // S(w · det^{-k}) has numerator S(w)'s and det power |w| - k; the
    // power is folded in directly instead of multiplying by det^k and
    // dividing it back out during canonicalization.
    AlgElem num = antipode_word_numerator(n, w).scale(c);
    int p = (int)w.size() - k;
    if (p < 0) {
      AlgElem det = quantum_det(n);
      for (; p < 0; ++p) num = num * det;
    }
    out = out + GLElem(std::move(num), p);
  }
  return out;
}

QScalar s2_scalar(int n, const Word& w) {
  long e = 0;
  for (const Letter& l : w) e += 2 * (l.first - l.second);
  return QScalar::q_power(e, n);
}

namespace {

// Distributes Δ or Δ² over one monomial numerator, collecting terms as
// it goes; legs = 2 or 3.
void coproduct_of_word(int n, const Word& w, const QScalar& c, int legs,
                       int det_power, TensorElem* out) {
  std::map<std::vector<Word>, QScalar> partial;
  partial.emplace(std::vector<Word>(legs), c);
  for (const Letter& l : w) {
    std::map<std::vector<Word>, QScalar> next;
    // Middle indices run over all chains i -> k (-> k2) -> j.
    std::vector<int> mid(legs - 1, 1);
    while (true) {
      std::vector<std::pair<int, int>> factor(legs);
      factor[0] = {l.first, mid[0]};
      for (int t = 1; t < legs - 1; ++t) factor[t] = {mid[t - 1], mid[t]};
      factor[legs - 1] = {mid[legs - 2], l.second};
      for (const auto& [key, cc] : partial) {
        std::vector<std::pair<std::vector<Word>, QScalar>> grown;
        grown.push_back({{}, cc});
        for (int t = 0; t < legs; ++t) {
          Word cat = key[t];
          cat.push_back(factor[t]);
          AlgElem nf = normal_form(n, cat);
          std::vector<std::pair<std::vector<Word>, QScalar>> g2;
          for (const auto& [kp, cp] : grown)
            for (const auto& [nw, cw] : nf.terms()) {
              auto nk = kp;
              nk.push_back(nw);
              g2.push_back({std::move(nk), cp * cw});
            }
          grown = std::move(g2);
        }
        for (auto& [k, v] : grown) {
          auto [it, ins] = next.try_emplace(std::move(k), v);
          if (!ins) {
            it->second += v;
            if (it->second.is_zero()) next.erase(it);
          }
        }
      }
      int t = legs - 2;
      while (t >= 0 && mid[t] == n) mid[t--] = 1;
      if (t < 0) break;
      ++mid[t];
    }
    partial = std::move(next);
  }
  for (const auto& [key, cc] : partial) {
    TensorKey tk(legs);
    for (int t = 0; t < legs; ++t) tk[t] = {key[t], det_power};
    out->add_term(tk, cc);
  }
}

}  // namespace

TensorElem coproduct(const GLElem& a) {
  TensorElem out(a.n(), 2);
  for (const auto& [w, c] : a.num().terms())
    coproduct_of_word(a.n(), w, c, 2, a.det_power(), &out);
  return out;
}

TensorElem coproduct2(const GLElem& a) {
  TensorElem out(a.n(), 3);
  for (const auto& [w, c] : a.num().terms())
    coproduct_of_word(a.n(), w, c, 3, a.det_power(), &out);
  return out;
}

QScalar counit(const GLElem& a) {
  QScalar e = QScalar::zero();
  for (const auto& [w, c] : a.num().terms()) {
    bool diag = true;
    for (const Letter& l : w)
      if (l.first != l.second) {
        diag = false;
        break;
      }
    if (diag) e += c;
  }
  return e;
}

std::map<int, GLElem> pi_Z_grade(const GLElem& a) {
  std::map<int, GLElem> out;
  const int n = a.n();
  std::map<int, AlgElem> byd;
  for (const auto& [w, c] : a.num().terms()) {
    auto [it, ins] = byd.try_emplace((int)w.size(), n);
    it->second.add_term(w, c);
  }
  for (const auto& [d, num] : byd)
    out.emplace(d - n * a.det_power(), GLElem(num, a.det_power()));
  return out;
}

bool sl_is_zero(const GLElem& a) {
  const int n = a.n();
  if (a.is_zero()) return true;
  auto graded = pi_Z_grade(a);
  const AlgElem det = quantum_det(n);
  // Top degree present in each residue class mod n.
  std::map<int, int> top;
  for (const auto& [d, comp] : graded) {
    int r = ((d % n) + n) % n;
    auto [it, ins] = top.try_emplace(r, d);
    if (!ins && d > it->second) it->second = d;
  }
  // Multiplying by det is the identity in the quotient; lift every
  // component to the top degree of its class and sum there.
  std::map<int, GLElem> sums;
  for (const auto& [d, comp] : graded) {
    int r = ((d % n) + n) % n;
    AlgElem m = comp.num();
    for (int t = 0; t < (top[r] - d) / n; ++t) m = m * det;
    auto [it, ins] = sums.try_emplace(r, GLElem(m, comp.det_power()));
    if (!ins) it->second = it->second + GLElem(m, comp.det_power());
  }
  for (const auto& [r, sum] : sums)
    if (!sum.is_zero()) return false;
  return true;
}

bool sl_equal(const GLElem& a, const GLElem& b) {
  if (a.n() != b.n()) fail(ErrCode::size_mismatch, "mixed matrix sizes");
  return sl_is_zero(a - b);
}

GLElem sl_reduce(const GLElem& a) {
  // det_q is identified with 1, so the denominator drops outright and
  // any det_q factor of the numerator is stripped.
  AlgElem num = a.num();
  AlgElem u(a.n());
  while (!num.is_zero() && det_try_divide(num, &u)) num = u;
  return GLElem(num, 0);
}

std::map<int, GLElem> iota_embed(const GLElem& a) {
  std::map<int, GLElem> out;
  for (const auto& [d, comp] : pi_Z_grade(a)) out.emplace(d, sl_reduce(comp));
  return out;
}

}  // namespace qalg
