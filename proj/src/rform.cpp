#include "qalg/rform.hpp"

#include <algorithm>
#include <utility>

#include "qalg/errors.hpp"
#include "qalg/hopf.hpp"
#include "qalg/linalg.hpp"

namespace qalg {

namespace {

// Flat index of the pairing r(x_ij, x_kl) into an n^4 table, 1-based letters.
int pair_index(int n, int i, int j, int k, int l) {
  return (((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1);
}

// Counit of a monomial slot: 1 when every letter is diagonal, else 0; a
// det_q^{-1} factor contributes 1.
QScalar slot_counit(const TSlot& s) {
  for (const Letter& l : s.w)
    if (l.first != l.second) return QScalar::zero();
  return QScalar::one();
}

// Dense exact inverse over the fraction field; throws when singular.
std::vector<std::vector<QFraction>> invert_matrix(
    std::vector<std::vector<QFraction>> m) {
  const int d = static_cast<int>(m.size());
  std::vector<std::vector<QFraction>> inv(d, std::vector<QFraction>(d));
  for (int i = 0; i < d; ++i) inv[i][i] = QFraction(QScalar::one());
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0)
      fail(ErrCode::inconsistent_convention, "singular pairing matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const QFraction lead = m[col][col];
    for (int c = 0; c < d; ++c) {
      m[col][c] = m[col][c] / lead;
      inv[col][c] = inv[col][c] / lead;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const QFraction f = m[r][col];
      for (int c = 0; c < d; ++c) {
        m[r][c] = m[r][c] - f * m[col][c];
        inv[r][c] = inv[r][c] - f * inv[col][c];
      }
    }
  }
  return inv;
}

QScalar as_laurent(const QFraction& f, const char* what) {
  if (!f.den().is_one()) fail(ErrCode::inconsistent_convention, what);
  return f.num();
}

}  // namespace

struct RForm::Cache {
  std::mutex mu;
  std::map<std::tuple<int, TSlot, TSlot>, QScalar> memo;
  std::map<TSlot, TensorElem> delta;
};

RForm::RForm(int n, Target target)
    : n_(n), target_(target), cache_(new Cache) {
  const size_t nn = static_cast<size_t>(n) * n;
  for (int f = 0; f < 2; ++f) {
    xx_[f].assign(nn * nn, QScalar::zero());
    dx_[f].assign(nn, QScalar::zero());
    xd_[f].assign(nn, QScalar::zero());
    dd_[f] = QScalar::one();
  }
}

RForm::RForm(RForm&&) noexcept = default;
RForm::~RForm() = default;

const QScalar& RForm::letter_pair(FormKind f, int i, int j, int k,
                                  int l) const {
  check_index(n_, i, j);
  check_index(n_, k, l);
  return xx_[static_cast<int>(f)][pair_index(n_, i, j, k, l)];
}

const QScalar& RForm::inv_det_letter(FormKind f, int k, int l) const {
  if (target_ != Target::gl)
    fail(ErrCode::bad_argument, "det_q^{-1} pairings exist for gl only");
  check_index(n_, k, l);
  return dx_[static_cast<int>(f)][(k - 1) * n_ + (l - 1)];
}

const QScalar& RForm::letter_inv_det(FormKind f, int k, int l) const {
  if (target_ != Target::gl)
    fail(ErrCode::bad_argument, "det_q^{-1} pairings exist for gl only");
  check_index(n_, k, l);
  return xd_[static_cast<int>(f)][(k - 1) * n_ + (l - 1)];
}

const QScalar& RForm::inv_det_pair(FormKind f) const {
  if (target_ != Target::gl)
    fail(ErrCode::bad_argument, "det_q^{-1} pairings exist for gl only");
  return dd_[static_cast<int>(f)];
}

const TensorElem& RForm::delta_slot(const TSlot& s) const {
  std::lock_guard lk(cache_->mu);
  auto it = cache_->delta.find(s);
  if (it == cache_->delta.end()) {
    TensorElem d =
        coproduct(GLElem(AlgElem::monomial(n_, s.w), s.det_power));
    it = cache_->delta.emplace(s, std::move(d)).first;
  }
  return it->second;
}

QScalar RForm::base_pair(FormKind f, const TSlot& a, const TSlot& b) const {
  const int fi = static_cast<int>(f);
  if (a.det_power > 0 && b.det_power > 0) return dd_[fi];
  if (a.det_power > 0) {
    const Letter& l = b.w[0];
    return dx_[fi][(l.first - 1) * n_ + (l.second - 1)];
  }
  if (b.det_power > 0) {
    const Letter& l = a.w[0];
    return xd_[fi][(l.first - 1) * n_ + (l.second - 1)];
  }
  const Letter& p = a.w[0];
  const Letter& t = b.w[0];
  return xx_[fi][pair_index(n_, p.first, p.second, t.first, t.second)];
}

QScalar RForm::eval_slot(FormKind f, const TSlot& a, const TSlot& b) const {
  const int la = static_cast<int>(a.w.size()) + a.det_power;
  const int lb = static_cast<int>(b.w.size()) + b.det_power;
  if (la == 0) return slot_counit(b);
  if (lb == 0) return slot_counit(a);
  if (la == 1 && lb == 1) return base_pair(f, a, b);

  const auto key = std::tuple{static_cast<int>(f), a, b};
  {
    std::lock_guard lk(cache_->mu);
    auto it = cache_->memo.find(key);
    if (it != cache_->memo.end()) return it->second;
  }

  QScalar out;
  if (la >= lb) {
    // Split the first argument as head * rest, det_q^{-1} factor first;
    // det_q^{-1} is central, so the order is a free choice.
    TSlot head, rest = a;
    if (a.det_power > 0) {
      head.det_power = 1;
      rest.det_power -= 1;
    } else {
      head.w = {a.w.front()};
      rest.w.erase(rest.w.begin());
    }
    // r(uv, c) = sum r(u, c1) r(v, c2); rbar pairs the legs the other way.
    for (const auto& [k, c] : delta_slot(b).terms()) {
      const QScalar p =
          f == FormKind::r
              ? eval_slot(f, head, k[0]) * eval_slot(f, rest, k[1])
              : eval_slot(f, rest, k[0]) * eval_slot(f, head, k[1]);
      out += c * p;
    }
  } else {
    // Split the second argument as head * last, det_q^{-1} factor last.
    TSlot last, head = b;
    if (b.det_power > 0) {
      last.det_power = 1;
      head.det_power -= 1;
    } else {
      last.w = {b.w.back()};
      head.w.pop_back();
    }
    // r(a, uv) = sum r(a1, v) r(a2, u); rbar pairs the legs the other way.
    for (const auto& [k, c] : delta_slot(a).terms()) {
      const QScalar p =
          f == FormKind::r
              ? eval_slot(f, k[0], last) * eval_slot(f, k[1], head)
              : eval_slot(f, k[1], last) * eval_slot(f, k[0], head);
      out += c * p;
    }
  }
  std::lock_guard lk(cache_->mu);
  return cache_->memo.emplace(key, std::move(out)).first->second;
}

QScalar RForm::eval(FormKind f, const GLElem& a, const GLElem& b) const {
  if (a.n() != n_ || b.n() != n_)
    fail(ErrCode::size_mismatch, "mixed matrix sizes");
  GLElem ar = a, br = b;
  if (target_ == Target::sl) {
    ar = sl_reduce(a);
    br = sl_reduce(b);
  }
  QScalar acc;
  for (const auto& [wa, ca] : ar.num().terms())
    for (const auto& [wb, cb] : br.num().terms())
      acc += ca * cb *
             eval_slot(f, TSlot{wa, ar.det_power()},
                       TSlot{wb, br.det_power()});
  return acc;
}

/// Solve-time internals; a friend so candidate tables can be installed and
/// validated before the instance is published.
struct RFormSolver {
  // The homogeneous linear system expressing braided commutativity on all
  // generator pairs: for a = x_ij, b = x_kl,
  //   sum_{u,v} r(x_iu, x_kv) x_uj x_vl  =  sum_{u,v} r(x_uj, x_vl) x_kv x_iu
  // collected per normal word, over the n^4 pairing unknowns plus one
  // affine column used by the normalization row.
  static std::vector<SparseRow> braiding_rows(int n) {
    std::vector<SparseRow> rows;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            std::map<Word, std::map<int, QScalar>> eq;
            for (int u = 1; u <= n; ++u)
              for (int v = 1; v <= n; ++v) {
                const AlgElem lhs = AlgElem::generator(n, u, j) *
                                    AlgElem::generator(n, v, l);
                for (const auto& [w, c] : lhs.terms())
                  eq[w][pair_index(n, i, u, k, v)] += c;
                const AlgElem rhs = AlgElem::generator(n, k, v) *
                                    AlgElem::generator(n, i, u);
                for (const auto& [w, c] : rhs.terms())
                  eq[w][pair_index(n, u, j, v, l)] -= c;
              }
            for (auto& [w, cols] : eq) {
              SparseRow r;
              for (auto& [c, val] : cols)
                if (!val.is_zero()) r.emplace_back(c, val);
              if (!r.empty()) rows.push_back(std::move(r));
            }
          }
    return rows;
  }

  // Cuts the solution space down with one gauge branch (r(x_ab, x_ba) = 0
  // for a < b, or for a > b) and the normalization r(x_11, x_11) = q, and
  // extracts the unique solution if there is one.
  static bool solve_branch(int n, const std::vector<SparseRow>& sys,
                           int branch, std::vector<QScalar>* table) {
    const int ncols = n * n * n * n + 1;
    const int zcol = ncols - 1;
    EchelonBasis eb(ncols);
    for (const auto& r : sys) eb.add_row(r);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        const int c = branch == 0 ? pair_index(n, a, b, b, a)
                                  : pair_index(n, b, a, a, b);
        eb.add_row({{c, QScalar::one()}});
      }
    eb.add_row({{pair_index(n, 1, 1, 1, 1), QScalar::one()},
                {zcol, -QScalar::q_power(1, n)}});
    const auto ker = eb.kernel();
    if (ker.size() != 1) return false;
    const auto& v = ker[0];
    if (v[zcol].is_zero()) return false;
    const QFraction z{v[zcol]};
    table->assign(ncols - 1, QScalar::zero());
    for (int c = 0; c < ncols - 1; ++c) {
      if (v[c].is_zero()) continue;
      const QFraction e = QFraction(v[c]) / z;
      if (!e.den().is_one()) return false;
      (*table)[c] = e.num();
    }
    return true;
  }

  // rbar on letters is the inverse of the degree-(1,1) pairing matrix
  // M[(i,k)][(u,v)] = r(x_iu, x_kv).
  static bool invert_letter_table(int n, const std::vector<QScalar>& r,
                                  std::vector<QScalar>* rbar) {
    const int d = n * n;
    std::vector<std::vector<QFraction>> m(d, std::vector<QFraction>(d));
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k)
        for (int u = 1; u <= n; ++u)
          for (int v = 1; v <= n; ++v)
            m[(i - 1) * n + (k - 1)][(u - 1) * n + (v - 1)] =
                QFraction(r[pair_index(n, i, u, k, v)]);
    std::vector<std::vector<QFraction>> inv;
    try {
      inv = invert_matrix(std::move(m));
    } catch (const Error&) {
      return false;
    }
    rbar->assign(static_cast<size_t>(d) * d, QScalar::zero());
    for (int u = 1; u <= n; ++u)
      for (int j = 1; j <= n; ++j)
        for (int v = 1; v <= n; ++v)
          for (int l = 1; l <= n; ++l) {
            const QFraction& e = inv[(u - 1) * n + (v - 1)][(j - 1) * n + (l - 1)];
            if (!e.den().is_one()) return false;
            (*rbar)[pair_index(n, u, j, v, l)] = e.num();
          }
    return true;
  }

  // Braided commutativity with both forms on all generator pairs:
  // NF(b a) == sum r(a1, b1) a2 b2 rbar(a3, b3).
  static bool check_braiding(const RForm& F) {
    const int n = F.n_;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            const AlgElem want =
                AlgElem::generator(n, k, l) * AlgElem::generator(n, i, j);
            AlgElem got(n);
            for (int u = 1; u <= n; ++u)
              for (int v = 1; v <= n; ++v)
                for (int p = 1; p <= n; ++p)
                  for (int t = 1; t <= n; ++t) {
                    const QScalar c =
                        F.xx_[0][pair_index(n, i, u, k, p)] *
                        F.xx_[1][pair_index(n, v, j, t, l)];
                    if (c.is_zero()) continue;
                    got = got + (AlgElem::generator(n, u, v) *
                                 AlgElem::generator(n, p, t))
                                    .scale(c);
                  }
            if (got != want) return false;
          }
    return true;
  }

  // Both multiplicative extension laws on all generator triples. The left
  // sides evaluate normalized products, so this genuinely tests that the
  // table is compatible with the defining relations.
  static bool check_product_laws(const RForm& F, FormKind f) {
    const int n = F.n_;
    for (int ai = 1; ai <= n; ++ai)
      for (int aj = 1; aj <= n; ++aj)
        for (int bi = 1; bi <= n; ++bi)
          for (int bj = 1; bj <= n; ++bj) {
            const GLElem A = GLElem::generator(n, ai, aj);
            const GLElem B = GLElem::generator(n, bi, bj);
            const GLElem AB = A * B;
            for (int ci = 1; ci <= n; ++ci)
              for (int cj = 1; cj <= n; ++cj) {
                const GLElem C = GLElem::generator(n, ci, cj);
                QScalar rhs;
                for (int m = 1; m <= n; ++m) {
                  const GLElem c1 = GLElem::generator(n, ci, m);
                  const GLElem c2 = GLElem::generator(n, m, cj);
                  rhs += f == FormKind::r
                             ? F.eval(f, A, c1) * F.eval(f, B, c2)
                             : F.eval(f, B, c1) * F.eval(f, A, c2);
                }
                if (F.eval(f, AB, C) != rhs) return false;
                const GLElem BC = B * C;
                rhs = QScalar::zero();
                for (int m = 1; m <= n; ++m) {
                  const GLElem a1 = GLElem::generator(n, ai, m);
                  const GLElem a2 = GLElem::generator(n, m, aj);
                  rhs += f == FormKind::r
                             ? F.eval(f, a1, C) * F.eval(f, a2, B)
                             : F.eval(f, a2, C) * F.eval(f, a1, B);
                }
                if (F.eval(f, A, BC) != rhs) return false;
              }
          }
    return true;
  }

  // Pairings against det_q^{-1}, from the counit identities for
  // det_q^{-1} det_q: the inverse-det tables are the matrix inverses of
  // the det-against-letter tables, and r(det^{-1}, det^{-1}) equals
  // r(det, det) because r(det^{-1}, det) = r(det, det)^{-1}.
  static void fill_inv_det_tables(RForm& F) {
    const int n = F.n_;
    const GLElem det = GLElem::from(quantum_det(n));
    for (int fi = 0; fi < 2; ++fi) {
      const FormKind f = static_cast<FormKind>(fi);
      std::vector<std::vector<QFraction>> gd(n, std::vector<QFraction>(n));
      std::vector<std::vector<QFraction>> hd(n, std::vector<QFraction>(n));
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          const GLElem x = GLElem::generator(n, a, b);
          gd[a - 1][b - 1] = QFraction(F.eval(f, det, x));
          hd[a - 1][b - 1] = QFraction(F.eval(f, x, det));
        }
      const auto gi = invert_matrix(gd);
      const auto hi = invert_matrix(hd);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          F.dx_[fi][(a - 1) * n + (b - 1)] =
              as_laurent(gi[a - 1][b - 1], "inverse-det pairing not Laurent");
          F.xd_[fi][(a - 1) * n + (b - 1)] =
              as_laurent(hi[a - 1][b - 1], "inverse-det pairing not Laurent");
        }
      F.dd_[fi] = F.eval(f, det, det);
    }
  }

  // The sl normalization: q^{-1/n} = s^{-1} per degree-(1,1) pairing of r,
  // and the reciprocal on rbar so the two stay convolution inverses.
  static void apply_sl_twist(RForm& F) {
    const QScalar tw = QScalar::s_power(-1);
    const QScalar twb = QScalar::s_power(1);
    for (auto& c : F.xx_[0]) c *= tw;
    for (auto& c : F.xx_[1]) c *= twb;
  }
};

RForm RForm::solve(int n, Target target) {
  if (n < 1) fail(ErrCode::bad_argument, "matrix size must be positive");
  RForm F(n, target);
  const auto sys = RFormSolver::braiding_rows(n);
  bool found = false;
  for (int branch = 0; branch < 2 && !found; ++branch) {
    std::vector<QScalar> r, rbar;
    if (!RFormSolver::solve_branch(n, sys, branch, &r)) continue;
    if (!RFormSolver::invert_letter_table(n, r, &rbar)) continue;
    RForm cand(n, Target::gl);
    cand.xx_[0] = std::move(r);
    cand.xx_[1] = std::move(rbar);
    if (!RFormSolver::check_braiding(cand)) continue;
    if (!RFormSolver::check_product_laws(cand, FormKind::r)) continue;
    if (!RFormSolver::check_product_laws(cand, FormKind::rbar)) continue;
    F.xx_[0] = std::move(cand.xx_[0]);
    F.xx_[1] = std::move(cand.xx_[1]);
    found = true;
  }
  if (!found)
    fail(ErrCode::inconsistent_convention,
         "no gauge branch extends to a consistent pair of forms");
  if (target == Target::sl)
    RFormSolver::apply_sl_twist(F);
  else
    RFormSolver::fill_inv_det_tables(F);
  return F;
}

const RForm& RForm::instance(int n, Target target) {
  static std::mutex mu;
  static auto* reg =
      new std::map<std::pair<int, int>, std::unique_ptr<RForm>>;
  std::lock_guard lk(mu);
  const auto key = std::pair{n, static_cast<int>(target)};
  auto it = reg->find(key);
  if (it == reg->end())
    it = reg->emplace(key, std::unique_ptr<RForm>(new RForm(solve(n, target))))
             .first;
  return *it->second;
}

QScalar r_eval(const GLElem& a, const GLElem& b, FormKind f, Target target) {
  return RForm::instance(a.n(), target).eval(f, a, b);
}

GLElem psi_map(const GLElem& v, PsiDirection dir, Target target) {
  const int n = v.n();
  const RForm& F = RForm::instance(n, target);
  const FormKind f = dir == PsiDirection::psi ? FormKind::r : FormKind::rbar;
  const TensorElem d2 = coproduct2(v);
  // All legs share the det power of v, so the outer pairings repeat across
  // middle legs; cache them, and the antipode images of the first legs.
  std::map<std::pair<TSlot, TSlot>, QScalar> pair_memo;
  std::map<TSlot, GLElem> s_memo;
  AlgElem acc(n);
  for (const auto& [key, c] : d2.terms()) {
    const auto pk = std::pair{key[0], key[2]};
    auto it = pair_memo.find(pk);
    if (it == pair_memo.end()) {
      auto si = s_memo.find(key[0]);
      if (si == s_memo.end()) {
        GLElem s1 = antipode(
            GLElem(AlgElem::monomial(n, key[0].w), key[0].det_power));
        si = s_memo.emplace(key[0], std::move(s1)).first;
      }
      QScalar val =
          F.eval(f, si->second,
                 GLElem(AlgElem::monomial(n, key[2].w), key[2].det_power));
      it = pair_memo.emplace(pk, std::move(val)).first;
    }
    if (it->second.is_zero()) continue;
    acc.add_term(key[1].w, c * it->second);
  }
  return GLElem(std::move(acc), v.det_power());
}

}  // namespace qalg
