#include "qalg/serialize.hpp"

#include <string>

#include "qalg/algebra.hpp"
#include "qalg/errors.hpp"

namespace qalg {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  fail(ErrCode::bad_argument, "malformed JSON: " + what);
}

json json_of_slot(int n, const TSlot& s) {
  return json_of(GLElem(AlgElem::monomial(n, s.w), s.det_power));
}

}  // namespace

json json_of(const QScalar& c) {
  json out = json::array();
  for (const auto& [e, coeff] : c.terms())
    out.push_back(json::array({e, coeff.get_str()}));
  return out;
}

json json_of(const AlgElem& a) {
  json terms = json::array();
  for (const auto& [w, c] : a.terms()) {
    json word = json::array();
    for (const Letter& l : w) word.push_back(json::array({l.first, l.second}));
    terms.push_back(json{{"coeff", json_of(c)}, {"word", word}});
  }
  return json{{"n", a.n()}, {"terms", terms}};
}

json json_of(const GLElem& a) {
  json out = json_of(a.num());
  out["det_power"] = a.det_power();
  return out;
}

json json_of(const TensorElem& t) {
  static const char* kSlotNames[3] = {"left", "mid", "right"};
  json terms = json::array();
  for (const auto& [key, c] : t.terms()) {
    json term{{"coeff", json_of(c)}};
    for (int s = 0; s < t.arity(); ++s) {
      const char* name =
          (t.arity() == 2 && s == 1) ? "right" : kSlotNames[s];
      term[name] = json_of_slot(t.n(), key[s]);
    }
    terms.push_back(std::move(term));
  }
  return json{{"arity", t.arity()}, {"terms", terms}};
}

json json_of_graded(const std::map<int, GLElem>& parts) {
  json comps = json::object();
  for (const auto& [d, v] : parts) comps[std::to_string(d)] = json_of(v);
  return json{{"components", comps}};
}

QScalar qscalar_of_json(const json& j) {
  if (!j.is_array()) malformed("scalar must be an array of pairs");
  QScalar out = QScalar::zero();
  long prev = 0;
  bool first = true;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_string())
      malformed("scalar term must be [exponent, \"num/den\"]");
    const long e = p[0].get<long>();
    if (!first && e <= prev) malformed("scalar exponents must increase");
    first = false;
    prev = e;
    mpq_class c;
    try {
      c = mpq_class(p[1].get<std::string>());
    } catch (const std::invalid_argument&) {
      malformed("bad rational literal '" + p[1].get<std::string>() + "'");
    }
    c.canonicalize();
    if (c == 0) malformed("zero coefficient in scalar");
    out += QScalar::term(e, c);
  }
  return out;
}

AlgElem algelem_of_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms") ||
      !j["n"].is_number_integer() || !j["terms"].is_array())
    malformed("element must have integer \"n\" and array \"terms\"");
  const int n = j["n"].get<int>();
  if (n < 1) malformed("matrix size must be positive");
  AlgElem out(n);
  for (const json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("word") ||
        !t["word"].is_array())
      malformed("term must have \"coeff\" and \"word\"");
    Word w;
    for (const json& l : t["word"]) {
      if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() ||
          !l[1].is_number_integer())
        malformed("letter must be [i, j]");
      const int i = l[0].get<int>();
      const int k = l[1].get<int>();
      check_index(n, i, k);
      w.emplace_back(i, k);
    }
    if (!is_normal_order(w)) malformed("word is not normal-ordered");
    out.add_term(w, qscalar_of_json(t["coeff"]));
  }
  return out;
}

GLElem glelem_of_json(const json& j) {
  if (!j.is_object() || !j.contains("det_power") ||
      !j["det_power"].is_number_integer())
    malformed("element must have integer \"det_power\"");
  const int p = j["det_power"].get<int>();
  if (p < 0) malformed("det_power must be nonnegative");
  return GLElem(algelem_of_json(j), p);
}

std::string pretty(const GLElem& a) {
  if (a.num().is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.num().terms()) {
    if (!first) out += " + ";
    first = false;
    std::string piece = "(" + c.str(a.n()) + ")";
    for (const Letter& l : w)
      piece += "*x[" + std::to_string(l.first) + "," +
               std::to_string(l.second) + "]";
    out += piece;
  }
  if (a.det_power() > 0)
    out = "(" + out + ")*detq^-" + std::to_string(a.det_power());
  return out;
}

}  // namespace qalg
