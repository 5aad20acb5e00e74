#include "qalg/glelem.hpp"

#include <algorithm>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

// Removes one copy of each diagonal letter (1,1)..(n,n) from the sorted
// word w. Returns false if some diagonal letter is absent.
bool strip_diagonal(const Word& w, int n, Word* rest) {
  rest->clear();
  int need = 1;
  for (const Letter& l : w) {
    if (need <= n && l.first == need && l.second == need) {
      ++need;
    } else {
      rest->push_back(l);
    }
  }
  return need > n;
}

}  // namespace

bool det_try_divide(const AlgElem& a, AlgElem* quotient) {
  const int n = a.n();
  AlgElem out(n);
  if (a.is_zero()) {
    *quotient = out;
    return true;
  }
  const AlgElem det = quantum_det(n);
  AlgElem r = a;
  Word u0;
  while (!r.is_zero()) {
    const auto& [w0, c0] = *r.terms().begin();
    if (!strip_diagonal(w0, n, &u0)) return false;
    AlgElem prod = det * AlgElem::monomial(n, u0);
    const auto& [wmin, cmin] = *prod.terms().begin();
    // wmin is the merge of the diagonal word back into u0, i.e. w0, and
    // cmin is a unit power of q.
    QScalar kappa = divide_exact(c0, cmin);
    out.add_term(u0, kappa);
    r = r - prod.scale(kappa);
  }
  *quotient = out;
  return true;
}

GLElem::GLElem(AlgElem num, int det_power)
    : n_(num.n()), num_(std::move(num)), det_power_(det_power) {
  if (det_power_ < 0)
    fail(ErrCode::bad_argument, "negative det power in localized element");
  canonicalize();
}

void GLElem::canonicalize() {
  if (num_.is_zero()) {
    det_power_ = 0;
    return;
  }
  AlgElem u(n_);
  while (det_power_ > 0 && det_try_divide(num_, &u)) {
    num_ = u;
    --det_power_;
  }
}

GLElem GLElem::det_power_elem(int n, int k) {
  if (k >= 0) {
    AlgElem p = AlgElem::unit(n);
    const AlgElem det = quantum_det(n);
    for (int t = 0; t < k; ++t) p = p * det;
    return from(p);
  }
  return GLElem(AlgElem::unit(n), -k);
}

GLElem GLElem::operator+(const GLElem& o) const {
  if (n_ != o.n_) fail(ErrCode::size_mismatch, "mixed matrix sizes");
  const int k = std::max(det_power_, o.det_power_);
  const AlgElem det = quantum_det(n_);
  AlgElem a = num_, b = o.num_;
  for (int t = det_power_; t < k; ++t) a = a * det;
  for (int t = o.det_power_; t < k; ++t) b = b * det;
  return GLElem(a + b, k);
}

GLElem GLElem::operator-() const {
  GLElem r(n_);
  r.num_ = -num_;
  r.det_power_ = det_power_;
  return r;
}

GLElem GLElem::operator*(const GLElem& o) const {
  if (n_ != o.n_) fail(ErrCode::size_mismatch, "mixed matrix sizes");
  return GLElem(num_ * o.num_, det_power_ + o.det_power_);
}

GLElem GLElem::scale(const QScalar& c) const {
  GLElem r(n_);
  r.num_ = num_.scale(c);
  r.det_power_ = r.num_.is_zero() ? 0 : det_power_;
  return r;
}

bool gl_equal(const GLElem& a, const GLElem& b) {
  if (a.n() != b.n()) fail(ErrCode::size_mismatch, "mixed matrix sizes");
  const AlgElem det = quantum_det(a.n());
  AlgElem lhs = a.num(), rhs = b.num();
  for (int t = 0; t < b.det_power(); ++t) lhs = lhs * det;
  for (int t = 0; t < a.det_power(); ++t) rhs = rhs * det;
  return lhs == rhs;
}

TensorElem::TensorElem(int n, int arity) : n_(n), arity_(arity) {
  if (arity != 2 && arity != 3)
    fail(ErrCode::bad_argument, "tensor arity must be 2 or 3");
}

TensorElem TensorElem::unit(int n, int arity) {
  TensorElem t(n, arity);
  t.add_term(TensorKey(arity), QScalar::one());
  return t;
}

TensorElem TensorElem::of(const GLElem& a, const GLElem& b) {
  if (a.n() != b.n()) fail(ErrCode::size_mismatch, "mixed matrix sizes");
  TensorElem t(a.n(), 2);
  for (const auto& [wa, ca] : a.num().terms())
    for (const auto& [wb, cb] : b.num().terms())
      t.add_term({{wa, a.det_power()}, {wb, b.det_power()}}, ca * cb);
  return t;
}

TensorElem TensorElem::of(const GLElem& a, const GLElem& b, const GLElem& c) {
  if (a.n() != b.n() || a.n() != c.n())
    fail(ErrCode::size_mismatch, "mixed matrix sizes");
  TensorElem t(a.n(), 3);
  for (const auto& [wa, ca] : a.num().terms())
    for (const auto& [wb, cb] : b.num().terms())
      for (const auto& [wc, cc] : c.num().terms())
        t.add_term({{wa, a.det_power()},
                    {wb, b.det_power()},
                    {wc, c.det_power()}},
                   ca * cb * cc);
  return t;
}

void TensorElem::add_term(const TensorKey& key, const QScalar& c) {
  if (c.is_zero()) return;
  if ((int)key.size() != arity_)
    fail(ErrCode::size_mismatch, "tensor key arity mismatch");
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
  if (n_ != o.n_ || arity_ != o.arity_)
    fail(ErrCode::size_mismatch, "tensor shape mismatch");
  TensorElem r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

TensorElem TensorElem::operator-() const {
  TensorElem r(n_, arity_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

TensorElem TensorElem::scale(const QScalar& c) const {
  TensorElem r(n_, arity_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

TensorElem TensorElem::operator*(const TensorElem& o) const {
  if (n_ != o.n_ || arity_ != o.arity_)
    fail(ErrCode::size_mismatch, "tensor shape mismatch");
  TensorElem r(n_, arity_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      // Expand the slotwise products over their normal forms.
      std::vector<std::pair<TensorKey, QScalar>> partial;
      partial.push_back({TensorKey(), ca * cb});
      for (int s = 0; s < arity_; ++s) {
        Word cat = ka[s].w;
        cat.insert(cat.end(), kb[s].w.begin(), kb[s].w.end());
        AlgElem nf = normal_form(n_, cat);
        std::vector<std::pair<TensorKey, QScalar>> next;
        for (const auto& [kp, cp] : partial) {
          for (const auto& [w, cw] : nf.terms()) {
            TensorKey nk = kp;
            nk.push_back({w, ka[s].det_power + kb[s].det_power});
            next.push_back({std::move(nk), cp * cw});
          }
        }
        partial = std::move(next);
      }
      for (auto& [k, c] : partial) r.add_term(k, c);
    }
  }
  return r;
}

namespace {

int slot_z_degree(const TSlot& s, int n) {
  return (int)s.w.size() - n * s.det_power;
}

}  // namespace

bool tensor_is_zero(const TensorElem& t, const std::vector<SlotType>& slots) {
  if ((int)slots.size() != t.arity())
    fail(ErrCode::size_mismatch, "slot type list does not match arity");
  if (t.is_zero()) return true;
  const int n = t.n();
  for (const auto& [key, c] : t.terms())
    for (int s = 0; s < t.arity(); ++s)
      if (slots[s] == SlotType::plain && key[s].det_power != 0)
        fail(ErrCode::bad_argument, "plain tensor slot carries a det power");

  // Bucket terms by the residue vector of their sl slots.
  std::map<std::vector<int>, std::vector<const std::pair<const TensorKey, QScalar>*>>
      buckets;
  for (const auto& term : t.terms()) {
    std::vector<int> res;
    for (int s = 0; s < t.arity(); ++s)
      if (slots[s] == SlotType::sl)
        res.push_back(((slot_z_degree(term.first[s], n) % n) + n) % n);
    buckets[res].push_back(&term);
  }

  const AlgElem det = quantum_det(n);
  for (const auto& [res, members] : buckets) {
    // Per-slot targets: max z-degree (sl only) and max det power.
    std::vector<int> maxz(t.arity(), 0), maxk(t.arity(), 0);
    for (int s = 0; s < t.arity(); ++s) {
      bool first = true;
      for (const auto* m : members) {
        const TSlot& slot = m->first[s];
        int z = slot_z_degree(slot, n);
        if (first || z > maxz[s]) maxz[s] = z;
        if (first || slot.det_power > maxk[s]) maxk[s] = slot.det_power;
        first = false;
      }
    }
    std::map<std::vector<Word>, QScalar> acc;
    for (const auto* m : members) {
      std::vector<std::pair<std::vector<Word>, QScalar>> partial;
      partial.push_back({{}, m->second});
      for (int s = 0; s < t.arity(); ++s) {
        const TSlot& slot = m->first[s];
        int lift = 0;
        if (slots[s] == SlotType::sl)
          lift = (maxz[s] - slot_z_degree(slot, n)) / n;
        int pin = maxk[s] - slot.det_power;
        AlgElem e = AlgElem::monomial(n, slot.w);
        for (int j = 0; j < lift + pin; ++j) e = e * det;
        std::vector<std::pair<std::vector<Word>, QScalar>> next;
        for (const auto& [kp, cp] : partial)
          for (const auto& [w, cw] : e.terms()) {
            auto nk = kp;
            nk.push_back(w);
            next.push_back({std::move(nk), cp * cw});
          }
        partial = std::move(next);
      }
      for (auto& [k, c] : partial) {
        auto [it, inserted] = acc.try_emplace(std::move(k), c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
    if (!acc.empty()) return false;
  }
  return true;
}

bool tensor_equal(const TensorElem& a, const TensorElem& b,
                  const std::vector<SlotType>& slots) {
  if (a.n() != b.n() || a.arity() != b.arity())
    fail(ErrCode::size_mismatch, "tensor shape mismatch");
  return tensor_is_zero(a - b, slots);
}

}  // namespace qalg
