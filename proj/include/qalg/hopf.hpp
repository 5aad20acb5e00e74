#pragma once

#include <map>

#include "qalg/glelem.hpp"

namespace qalg {

/// Coproduct, extended multiplicatively from the generator rule
/// Δ(x_ij) = Σ_k x_ik ⊗ x_kj and Δ(det_q^{-1}) = det_q^{-1} ⊗ det_q^{-1}.
TensorElem coproduct(const GLElem& a);

/// Two-fold coproduct (Δ⊗id)Δ = (id⊗Δ)Δ, arity 3.
TensorElem coproduct2(const GLElem& a);

/// Counit: ε(x_ij) = δ_ij, extended as an algebra map; ε(det_q) = 1.
QScalar counit(const GLElem& a);

/// Antipode: anti-algebra map sending x_ij to (-q)^{i-j} times the
/// complementary quantum minor (rows omit j, columns omit i) over det_q.
GLElem antipode(const GLElem& a);

/// Cached antipode image of a generator.
GLElem antipode_generator(int n, int i, int j);

/// Numerator of S(w) for a normal word w; the det power is w.size().
AlgElem antipode_word_numerator(int n, const Word& w);

/// The scalar by which S² rescales the monomial w: Π q^{2(i-j)}.
QScalar s2_scalar(int n, const Word& w);

/// Splits by the ℤ-degree d = word length − N · det power, the grading
/// induced by projecting onto the central Laurent subalgebra.
std::map<int, GLElem> pi_Z_grade(const GLElem& a);

/// True iff a maps to zero in the quotient identifying det_q with 1.
/// Components are grouped by degree residue mod N and lifted by central
/// det_q factors to a common degree, where the quotient map is injective.
bool sl_is_zero(const GLElem& a);

bool sl_equal(const GLElem& a, const GLElem& b);

/// Minimal representative of the class of a modulo det_q = 1: strips all
/// det_q factors from the numerator, beyond what canonicalization does.
GLElem sl_reduce(const GLElem& a);

/// The graded embedding a ↦ Σ_d π(a_d) ⊗ z^d, returned as the family
/// {d ↦ minimal representative of the degree-d component}.
std::map<int, GLElem> iota_embed(const GLElem& a);

}  // namespace qalg
