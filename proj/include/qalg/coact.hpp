#pragma once

#include "qalg/glelem.hpp"
#include "qalg/hopf.hpp"

namespace qalg {

/// The six coactions: λ = (π⊗id)Δ and ρ = (id⊗π)Δ; the conjugation-type
/// coactions α(a) = Σ a₂ ⊗ π(a₃)S(π(a₁)) and β(a) = Σ a₂ ⊗ S(π(a₁))π(a₃);
/// and their counterparts ᾱ(x) = Σ x₂ ⊗ x₃S(x₁), β̄(x) = Σ x₂ ⊗ S(x₁)x₃
/// acting on the quantum group itself.
enum class CoKind { lambda, rho, alpha, beta, alpha_bar, beta_bar };

/// Which quantum group the coaction lands in. For sl, group legs are
/// stored as minimal representatives modulo det_q = 1.
enum class Target { gl, sl };

/// λ puts the group leg first; everything else puts it second.
bool group_leg_first(CoKind kind);

/// Slot types of coact's output, suitable for tensor_is_zero.
std::vector<SlotType> coact_slots(CoKind kind, Target target,
                                  const GLElem& a);

TensorElem coact(CoKind kind, Target target, const GLElem& a);

/// True iff coact(kind, target, a) equals a⊗1 (1⊗a for λ) exactly.
bool is_coinvariant(CoKind kind, Target target, const GLElem& a);

/// Weak multiplicativity at a coinvariant c: for alpha,
/// coact(a·c) = coact(a)·(c⊗1); for beta, coact(c·a) = (c⊗1)·coact(a).
/// Throws not_coinvariant when c fails the predicate.
bool check_weak_mult(CoKind kind, Target target, const GLElem& a,
                     const GLElem& c);

enum class CocommVariant { plain, s2 };

/// plain: Σ x₁⊗π(x₂) = Σ x₂⊗π(x₁); s2: Σ x₁⊗π(x₂) = Σ x₂⊗S²(π(x₁)),
/// with π the projection modulo det_q = 1. The plain variant cuts out
/// exactly the α-coinvariants, the s2 variant the β-coinvariants.
bool is_cocommutative(const GLElem& x, CocommVariant variant);

}  // namespace qalg
