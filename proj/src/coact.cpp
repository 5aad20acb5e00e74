#include "qalg/coact.hpp"

#include <map>
#include <utility>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

// Expands g into monomial slots at position pos, the other slot fixed.
void emit_slot(TensorElem* out, const GLElem& g, int pos,
               const TSlot& other) {
  for (const auto& [w, c] : g.num().terms()) {
    TensorKey key(2);
    key[pos] = TSlot{w, g.det_power()};
    key[1 - pos] = other;
    out->add_term(key, c);
  }
}

GLElem slot_canonical(Target target, const GLElem& g) {
  return target == Target::sl ? sl_reduce(g) : g;
}

// λ and ρ: one leg of the coproduct is pushed into the group.
TensorElem coact_projected(CoKind kind, Target target, const GLElem& a) {
  const int n = a.n();
  const int gslot = kind == CoKind::lambda ? 0 : 1;
  TensorElem raw = coproduct(a);
  std::map<TSlot, GLElem> acc;  // keyed by the untouched leg
  for (const auto& [key, c] : raw.terms()) {
    const TSlot& g = key[gslot];
    auto it = acc.try_emplace(key[1 - gslot], GLElem::zero(n)).first;
    it->second =
        it->second + GLElem(AlgElem::monomial(n, g.w, c), g.det_power);
  }
  TensorElem out(n, 2);
  for (const auto& [other, g] : acc)
    emit_slot(&out, slot_canonical(target, g), gslot, other);
  return out;
}

// α, β and their counterparts on the group: the outer coproduct legs are
// contracted through the antipode, α(a) = Σ a₂ ⊗ π(a₃)S(π(a₁)) and
// β(a) = Σ a₂ ⊗ S(π(a₁))π(a₃); the bar variants also project the middle
// leg into the target.
TensorElem coact_conjugation(CoKind kind, Target target, const GLElem& a) {
  const int n = a.n();
  const int k = a.det_power();
  const bool s_left = kind == CoKind::beta || kind == CoKind::beta_bar;
  const bool bar = kind == CoKind::alpha_bar || kind == CoKind::beta_bar;
  TensorElem d2 = coproduct2(a);
  // Group the third legs per (middle leg, first leg): one product with a
  // collected element beats one product per chain.
  std::map<std::pair<TSlot, Word>, AlgElem> grouped;
  for (const auto& [key, c] : d2.terms()) {
    auto it = grouped
                  .try_emplace(std::pair{key[1], key[0].w}, AlgElem::zero(n))
                  .first;
    it->second.add_term(key[2].w, c);
  }
  std::map<TSlot, GLElem> acc;  // keyed by the middle leg
  for (const auto& [mw, third] : grouped) {
    GLElem s1 = antipode(GLElem(AlgElem::monomial(n, mw.second), k));
    GLElem g3(third, k);
    GLElem r = s_left ? s1 * g3 : g3 * s1;
    auto it = acc.try_emplace(mw.first, GLElem::zero(n)).first;
    it->second = it->second + r;
  }
  TensorElem out(n, 2);
  if (!bar) {
    for (const auto& [mid, g] : acc)
      emit_slot(&out, slot_canonical(target, g), 1, mid);
    return out;
  }
  // Regroup by the group leg to bring the middle leg into the target too.
  std::map<TSlot, GLElem> byright;
  for (const auto& [mid, g] : acc) {
    GLElem gg = slot_canonical(target, g);
    for (const auto& [w, c] : gg.num().terms()) {
      auto it = byright.try_emplace(TSlot{w, gg.det_power()}, GLElem::zero(n))
                    .first;
      it->second =
          it->second + GLElem(AlgElem::monomial(n, mid.w, c), mid.det_power);
    }
  }
  for (const auto& [right, g] : byright)
    emit_slot(&out, slot_canonical(target, g), 0, right);
  return out;
}

}  // namespace

bool group_leg_first(CoKind kind) { return kind == CoKind::lambda; }

std::vector<SlotType> coact_slots(CoKind kind, Target target,
                                  const GLElem& a) {
  SlotType group = target == Target::sl ? SlotType::sl : SlotType::gl;
  SlotType carrier = a.det_power() == 0 ? SlotType::plain : SlotType::gl;
  switch (kind) {
    case CoKind::lambda:
      return {group, carrier};
    case CoKind::rho:
    case CoKind::alpha:
    case CoKind::beta:
      return {carrier, group};
    default:
      return {group, group};
  }
}

TensorElem coact(CoKind kind, Target target, const GLElem& a) {
  if (kind == CoKind::lambda || kind == CoKind::rho)
    return coact_projected(kind, target, a);
  return coact_conjugation(kind, target, a);
}

bool is_coinvariant(CoKind kind, Target target, const GLElem& a) {
  const int n = a.n();
  TensorElem expect = group_leg_first(kind)
                          ? TensorElem::of(GLElem::unit(n), a)
                          : TensorElem::of(a, GLElem::unit(n));
  TensorElem diff = coact(kind, target, a) - expect;
  return tensor_is_zero(diff, coact_slots(kind, target, a));
}

bool check_weak_mult(CoKind kind, Target target, const GLElem& a,
                     const GLElem& c) {
  if (kind != CoKind::alpha && kind != CoKind::beta)
    throw Error(ErrCode::bad_argument,
                "weak multiplicativity is about alpha and beta");
  if (!is_coinvariant(kind, target, c))
    throw Error(ErrCode::not_coinvariant,
                "the second argument is not coinvariant");
  const int n = a.n();
  TensorElem cten = TensorElem::of(c, GLElem::unit(n));
  TensorElem lhs = kind == CoKind::alpha ? coact(kind, target, a * c)
                                         : coact(kind, target, c * a);
  TensorElem rhs = kind == CoKind::alpha ? coact(kind, target, a) * cten
                                         : cten * coact(kind, target, a);
  SlotType carrier = a.det_power() == 0 && c.det_power() == 0
                         ? SlotType::plain
                         : SlotType::gl;
  SlotType group = target == Target::sl ? SlotType::sl : SlotType::gl;
  return tensor_is_zero(lhs - rhs, {carrier, group});
}

bool is_cocommutative(const GLElem& x, CocommVariant variant) {
  const int n = x.n();
  TensorElem t = coproduct(x);
  TensorElem diff(n, 2);
  for (const auto& [key, c] : t.terms()) {
    diff.add_term(key, c);
    QScalar f = c;
    if (variant == CocommVariant::s2) f = f * s2_scalar(n, key[0].w);
    diff.add_term({key[1], key[0]}, -f);
  }
  SlotType carrier = x.det_power() == 0 ? SlotType::plain : SlotType::gl;
  return tensor_is_zero(diff, {carrier, SlotType::sl});
}

}  // namespace qalg
