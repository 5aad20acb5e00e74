#include "qalg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qalg/checks.hpp"
#include "qalg/coinv.hpp"
#include "qalg/errors.hpp"
#include "qalg/expr.hpp"
#include "qalg/serialize.hpp"

using namespace qalg;

struct qalg_elem {
  GLElem v;
};

namespace {

thread_local std::string g_last_error = "no error";

qalg_status code_of(ErrCode c) {
  switch (c) {
    case ErrCode::index_out_of_range:
      return QALG_ERR_INDEX_OUT_OF_RANGE;
    case ErrCode::size_mismatch:
      return QALG_ERR_SIZE_MISMATCH;
    case ErrCode::division_by_zero:
      return QALG_ERR_DIVISION_BY_ZERO;
    case ErrCode::not_divisible:
      return QALG_ERR_NOT_DIVISIBLE;
    case ErrCode::syntax_error:
      return QALG_ERR_SYNTAX;
    case ErrCode::negative_power_of_generator:
      return QALG_ERR_NEGATIVE_POWER_OF_GENERATOR;
    case ErrCode::not_coinvariant:
      return QALG_ERR_NOT_COINVARIANT;
    case ErrCode::inconsistent_convention:
      return QALG_ERR_INCONSISTENT_CONVENTION;
    case ErrCode::bad_argument:
      return QALG_ERR_BAD_ARGUMENT;
  }
  return QALG_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes.
template <typename F>
qalg_status guarded(F&& f) {
  try {
    f();
    return QALG_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QALG_ERR_BAD_ARGUMENT;
  } catch (...) {
    g_last_error = "unknown failure";
    return QALG_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qalg_status require(bool ok, const char* what) {
  if (ok) return QALG_OK;
  g_last_error = what;
  return QALG_ERR_BAD_ARGUMENT;
}

CoKind kind_of(const std::string& s) {
  if (s == "lambda") return CoKind::lambda;
  if (s == "rho") return CoKind::rho;
  if (s == "alpha") return CoKind::alpha;
  if (s == "beta") return CoKind::beta;
  if (s == "alpha_bar") return CoKind::alpha_bar;
  if (s == "beta_bar") return CoKind::beta_bar;
  fail(ErrCode::bad_argument, "unknown coaction kind '" + s + "'");
}

Target target_of(const std::string& s) {
  if (s == "gl") return Target::gl;
  if (s == "sl") return Target::sl;
  fail(ErrCode::bad_argument, "unknown target group '" + s + "'");
}

void emit_elem(GLElem v, qalg_elem** out) {
  *out = new qalg_elem{std::move(v)};
}

void emit_string(const std::string& s, char** out) { *out = dup_string(s); }

}  // namespace

extern "C" {

const char* qalg_last_error(void) { return g_last_error.c_str(); }

void qalg_elem_free(qalg_elem* e) { delete e; }

void qalg_string_free(char* s) { std::free(s); }

qalg_status qalg_parse(const char* text, int n, qalg_elem** out) {
  if (qalg_status s = require(text && out, "null argument")) return s;
  return guarded([&] { emit_elem(parse_expr(text, n), out); });
}

qalg_status qalg_elem_from_json(const char* json_text, qalg_elem** out) {
  if (qalg_status s = require(json_text && out, "null argument")) return s;
  return guarded([&] {
    emit_elem(glelem_of_json(nlohmann::json::parse(json_text)), out);
  });
}

qalg_status qalg_det(int n, qalg_elem** out) {
  if (qalg_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { emit_elem(GLElem::from(quantum_det(n)), out); });
}

qalg_status qalg_minor(int n, const int* rows, const int* cols, int k,
                       qalg_elem** out) {
  if (qalg_status s = require(rows && cols && out && k >= 0, "null argument"))
    return s;
  return guarded([&] {
    emit_elem(GLElem::from(quantum_minor(n, std::vector<int>(rows, rows + k),
                                         std::vector<int>(cols, cols + k))),
              out);
  });
}

qalg_status qalg_sigma(int n, int i, qalg_elem** out) {
  if (qalg_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { emit_elem(GLElem::from(sigma(n, i)), out); });
}

qalg_status qalg_tau(int n, int i, qalg_elem** out) {
  if (qalg_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { emit_elem(GLElem::from(tau(n, i)), out); });
}

qalg_status qalg_add(const qalg_elem* a, const qalg_elem* b, qalg_elem** out) {
  if (qalg_status s = require(a && b && out, "null argument")) return s;
  return guarded([&] { emit_elem(a->v + b->v, out); });
}

qalg_status qalg_sub(const qalg_elem* a, const qalg_elem* b, qalg_elem** out) {
  if (qalg_status s = require(a && b && out, "null argument")) return s;
  return guarded([&] { emit_elem(a->v - b->v, out); });
}

qalg_status qalg_mul(const qalg_elem* a, const qalg_elem* b, qalg_elem** out) {
  if (qalg_status s = require(a && b && out, "null argument")) return s;
  return guarded([&] { emit_elem(a->v * b->v, out); });
}

qalg_status qalg_equal(const qalg_elem* a, const qalg_elem* b, int* out) {
  if (qalg_status s = require(a && b && out, "null argument")) return s;
  return guarded([&] { *out = (a->v == b->v) ? 1 : 0; });
}

qalg_status qalg_sl_equal(const qalg_elem* a, const qalg_elem* b, int* out) {
  if (qalg_status s = require(a && b && out, "null argument")) return s;
  return guarded([&] { *out = sl_equal(a->v, b->v) ? 1 : 0; });
}

int qalg_elem_n(const qalg_elem* e) { return e ? e->v.n() : 0; }

qalg_status qalg_elem_to_json(const qalg_elem* e, char** out) {
  if (qalg_status s = require(e && out, "null argument")) return s;
  return guarded([&] { emit_string(json_of(e->v).dump(), out); });
}

qalg_status qalg_elem_pretty(const qalg_elem* e, char** out) {
  if (qalg_status s = require(e && out, "null argument")) return s;
  return guarded([&] { emit_string(pretty(e->v), out); });
}

qalg_status qalg_coact_json(const qalg_elem* e, const char* kind,
                            const char* target, char** out) {
  if (qalg_status s = require(e && kind && target && out, "null argument"))
    return s;
  return guarded([&] {
    emit_string(
        json_of(coact(kind_of(kind), target_of(target), e->v)).dump(), out);
  });
}

qalg_status qalg_is_coinvariant(const qalg_elem* e, const char* kind,
                                const char* target, int* out) {
  if (qalg_status s = require(e && kind && target && out, "null argument"))
    return s;
  return guarded([&] {
    *out = is_coinvariant(kind_of(kind), target_of(target), e->v) ? 1 : 0;
  });
}

qalg_status qalg_coinv_basis_json(const char* kind, const char* target, int n,
                                  int degree, char** out) {
  if (qalg_status s = require(kind && target && out, "null argument"))
    return s;
  return guarded([&] {
    const CoinvBasis cb =
        coinvariant_basis(kind_of(kind), target_of(target), n, degree);
    nlohmann::json basis = nlohmann::json::array();
    for (const AlgElem& v : cb.basis) basis.push_back(json_of(v));
    emit_string(nlohmann::json{{"degree", cb.degree},
                               {"dim", cb.basis.size()},
                               {"basis", basis}}
                    .dump(),
                out);
  });
}

qalg_status qalg_hilbert_json(const char* kind, const char* target, int n,
                              int max_degree, char** out) {
  if (qalg_status s = require(kind && target && out, "null argument"))
    return s;
  return guarded([&] {
    emit_string(nlohmann::json(hilbert_prefix(kind_of(kind), target_of(target),
                                              n, max_degree))
                    .dump(),
                out);
  });
}

qalg_status qalg_generators_json(const char* kind, const char* target, int n,
                                 int max_degree, char** out) {
  if (qalg_status s = require(kind && target && out, "null argument"))
    return s;
  return guarded([&] {
    nlohmann::json gens = nlohmann::json::array();
    for (const AlgElem& g :
         generators_up_to(kind_of(kind), target_of(target), n, max_degree))
      gens.push_back(json_of(g));
    emit_string(gens.dump(), out);
  });
}

qalg_status qalg_embed_json(const qalg_elem* e, char** out) {
  if (qalg_status s = require(e && out, "null argument")) return s;
  return guarded([&] { emit_string(json_of_graded(iota_embed(e->v)).dump(), out); });
}

qalg_status qalg_check_suite_json(const char* suite, int n,
                                  unsigned long seed, char** out,
                                  int* all_pass) {
  if (qalg_status s = require(suite && out && all_pass, "null argument"))
    return s;
  return guarded([&] {
    const SuiteReport rep = run_suite(suite, n, seed);
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : rep.checks)
      checks.push_back(nlohmann::json{{"name", c.name}, {"pass", c.pass}});
    nlohmann::json j{{"suite", rep.suite},
                     {"checks", checks},
                     {"all_pass", rep.all_pass()}};
    if (!rep.extra.empty()) j["extra"] = rep.extra;
    *all_pass = rep.all_pass() ? 1 : 0;
    emit_string(j.dump(), out);
  });
}

}  // extern "C"
