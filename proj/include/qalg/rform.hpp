#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "qalg/coact.hpp"

namespace qalg {

/// Which of the two forms to evaluate: the universal r-form itself or its
/// convolution inverse.
enum class FormKind { r, rbar };

/**
 * Universal r-form of the quantized function algebra, together with its
 * convolution inverse. The generator table is solved from the
 * braided-commutativity equations on generator pairs (plus a gauge and the
 * normalization r(x_11, x_11) = q), never transcribed; the inverse table is
 * the matrix inverse of the degree-(1,1) pairing matrix. Pairings against
 * det_q^{-1} are derived from the counit identities for det_q * det_q^{-1}.
 *
 * For the sl target every degree-(1,1) pairing carries an extra factor
 * q^{-1/n} = s^{-1}, which makes the form constant on classes modulo
 * det_q = 1; eval then reduces its arguments to minimal representatives.
 *
 * Instances are immutable after solve; eval is const and thread-safe
 * (internal memo behind a mutex).
 */
class RForm {
 public:
  /// Solves the generator tables for both forms. Tries both gauge branches
  /// and keeps the one whose extension satisfies the inverse, braiding and
  /// multiplicativity conditions; throws inconsistent_convention when
  /// neither does.
  static RForm solve(int n, Target target);

  /// Process-wide cache of solved forms, keyed by (n, target).
  static const RForm& instance(int n, Target target);

  RForm(RForm&& o) noexcept;
  ~RForm();

  int n() const { return n_; }
  Target target() const { return target_; }
  /// Exponent of the s-factor applied per degree-(1,1) pairing: -1 for the
  /// sl target, 0 for gl.
  int normalization_s_power() const { return target_ == Target::sl ? -1 : 0; }

  /// Generator pairing r(x_ij, x_kl) resp. rbar. 1-based indices.
  const QScalar& letter_pair(FormKind f, int i, int j, int k, int l) const;
  /// r(det_q^{-1}, x_kl); gl target only.
  const QScalar& inv_det_letter(FormKind f, int k, int l) const;
  /// r(x_kl, det_q^{-1}); gl target only.
  const QScalar& letter_inv_det(FormKind f, int k, int l) const;
  /// r(det_q^{-1}, det_q^{-1}); gl target only.
  const QScalar& inv_det_pair(FormKind f) const;

  /// Bilinear evaluation, extended from the letter tables by the product
  /// laws, recursively splitting the longer argument.
  QScalar eval(FormKind f, const GLElem& a, const GLElem& b) const;

 private:
  RForm(int n, Target target);

  QScalar eval_slot(FormKind f, const TSlot& a, const TSlot& b) const;
  const TensorElem& delta_slot(const TSlot& s) const;
  QScalar base_pair(FormKind f, const TSlot& a, const TSlot& b) const;

  int n_;
  Target target_;
  // Flat n^4 tables indexed ((i-1)n+(j-1))n^2 + ((k-1)n+(l-1)), one per form.
  std::vector<QScalar> xx_[2];
  std::vector<QScalar> dx_[2], xd_[2];  // n^2 tables against det_q^{-1}
  QScalar dd_[2];

  struct Cache;
  std::unique_ptr<Cache> cache_;

  friend struct RFormSolver;
};

enum class PsiDirection { psi, phi };

/**
 * The comodule isomorphism exchanging the two conjugation coactions:
 * psi(v) = sum r(S(v_(1)), v_(3)) v_(2), phi the same with rbar. psi and
 * phi are mutually inverse, degree-preserving, and intertwine alpha with
 * beta: alpha(psi(v)) = (psi tensor id)(beta(v)).
 */
GLElem psi_map(const GLElem& v, PsiDirection dir, Target target);

/// Evaluation through the process-wide instance for (a.n(), target).
QScalar r_eval(const GLElem& a, const GLElem& b, FormKind f, Target target);

}  // namespace qalg
