// Command-line front end. Links the C interface only; all algebra flows
// through qalg.h handles and JSON strings.
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qalg.h"

namespace {

using nlohmann::json;

struct ElemDeleter {
  void operator()(qalg_elem* e) const { qalg_elem_free(e); }
};
using Elem = std::unique_ptr<qalg_elem, ElemDeleter>;

struct StrDeleter {
  void operator()(char* s) const { qalg_string_free(s); }
};
using Str = std::unique_ptr<char, StrDeleter>;

// Nonzero statuses on user-supplied input are usage errors: report and
// exit 2, matching the CLI contract.
[[noreturn]] void usage_error() {
  std::fprintf(stderr, "error: %s\n", qalg_last_error());
  std::exit(2);
}

void check(qalg_status s) {
  if (s != QALG_OK) usage_error();
}

Elem parse(const std::string& text, int n) {
  qalg_elem* raw = nullptr;
  check(qalg_parse(text.c_str(), n, &raw));
  return Elem(raw);
}

void print_json(const std::string& text, bool pretty_flag) {
  if (!pretty_flag) {
    std::printf("%s\n", text.c_str());
    return;
  }
  std::printf("%s\n", json::parse(text).dump(2).c_str());
}

void print_elem(const qalg_elem* e, bool pretty_flag) {
  if (pretty_flag) {
    char* s = nullptr;
    check(qalg_elem_pretty(e, &s));
    Str guard(s);
    std::printf("%s\n", s);
    return;
  }
  char* s = nullptr;
  check(qalg_elem_to_json(e, &s));
  Str guard(s);
  std::printf("%s\n", s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in quantized function algebras"};
  app.require_subcommand(1);

  int n = 2;
  bool pretty_flag = false;
  bool q_power = false;
  app.add_flag("--pretty", pretty_flag,
               "human-readable rendering instead of compact JSON");
  app.add_flag("--q-power", q_power,
               "display with q as a formal symbol (always exact; no numeric "
               "specialization exists)");

  std::string expr_text, lhs_text, rhs_text;
  std::string coaction = "alpha", group = "sl", suite = "all";
  int index = 1, degree = 0, max_degree = 3;
  unsigned long seed = 12345;
  std::vector<int> rows, cols;

  auto add_n = [&n](CLI::App* cmd) {
    cmd->fallthrough();  // lets the global --pretty / --q-power follow the subcommand
    cmd->add_option("--n", n, "matrix size N")->check(CLI::PositiveNumber);
  };

  CLI::App* c_normal = app.add_subcommand("normalform",
                                          "normal form of an expression");
  add_n(c_normal);
  c_normal->add_option("--expr", expr_text, "expression")->required();

  CLI::App* c_det = app.add_subcommand("det", "quantum determinant");
  add_n(c_det);

  CLI::App* c_minor = app.add_subcommand("minor", "quantum minor [rows|cols]");
  add_n(c_minor);
  c_minor->add_option("--rows", rows, "row indices")
      ->required()
      ->delimiter(',');
  c_minor->add_option("--cols", cols, "column indices")
      ->required()
      ->delimiter(',');

  CLI::App* c_sigma = app.add_subcommand("sigma", "sum of principal minors");
  add_n(c_sigma);
  c_sigma->add_option("--i", index, "minor size")->required();

  CLI::App* c_tau = app.add_subcommand("tau", "weighted sum of principal minors");
  add_n(c_tau);
  c_tau->add_option("--i", index, "minor size")->required();

  CLI::App* c_coact = app.add_subcommand("coact", "apply a coaction");
  add_n(c_coact);
  c_coact->add_option("--expr", expr_text, "expression")->required();
  c_coact->add_option("--coaction", coaction,
                      "lambda | rho | alpha | beta | alpha_bar | beta_bar");
  c_coact->add_option("--group", group, "gl | sl");

  CLI::App* c_coinv = app.add_subcommand("coinv",
                                         "coinvariant basis in one degree");
  add_n(c_coinv);
  c_coinv->add_option("--coaction", coaction, "lambda | rho | alpha | beta");
  c_coinv->add_option("--group", group, "gl | sl");
  c_coinv->add_option("--degree", degree, "degree")->required();

  CLI::App* c_hilbert = app.add_subcommand("hilbert",
                                           "coinvariant dimensions by degree");
  add_n(c_hilbert);
  c_hilbert->add_option("--coaction", coaction, "lambda | rho | alpha | beta");
  c_hilbert->add_option("--group", group, "gl | sl");
  c_hilbert->add_option("--max-degree", max_degree, "largest degree");

  CLI::App* c_gens = app.add_subcommand(
      "generators", "minimal generating set of the coinvariants, truncated");
  add_n(c_gens);
  c_gens->add_option("--coaction", coaction, "lambda | rho | alpha | beta");
  c_gens->add_option("--group", group, "gl | sl");
  c_gens->add_option("--max-degree", max_degree, "largest degree");

  CLI::App* c_check = app.add_subcommand("check", "run a property suite");
  add_n(c_check);
  c_check->add_option("--suite", suite,
                      "relations | hopf | coact | rform | coinv | embed | "
                      "pi-cocomm | all");
  c_check->add_option("--seed", seed, "seed for randomized cases");

  CLI::App* c_embed = app.add_subcommand(
      "embed", "graded embedding into the quotient with a Laurent leg");
  add_n(c_embed);
  c_embed->add_option("--expr", expr_text, "expression")->required();

  CLI::App* c_sleq = app.add_subcommand("sl-eq",
                                        "equality modulo det_q = 1");
  add_n(c_sleq);
  c_sleq->add_option("--lhs", lhs_text, "left expression")->required();
  c_sleq->add_option("--rhs", rhs_text, "right expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  if (c_normal->parsed()) {
    print_elem(parse(expr_text, n).get(), pretty_flag);
  } else if (c_det->parsed()) {
    qalg_elem* d = nullptr;
    check(qalg_det(n, &d));
    print_elem(Elem(d).get(), pretty_flag);
  } else if (c_minor->parsed()) {
    if (rows.size() != cols.size()) {
      std::fprintf(stderr, "error: --rows and --cols must have equal length\n");
      return 2;
    }
    qalg_elem* m = nullptr;
    check(qalg_minor(n, rows.data(), cols.data(),
                     static_cast<int>(rows.size()), &m));
    print_elem(Elem(m).get(), pretty_flag);
  } else if (c_sigma->parsed()) {
    qalg_elem* e = nullptr;
    check(qalg_sigma(n, index, &e));
    print_elem(Elem(e).get(), pretty_flag);
  } else if (c_tau->parsed()) {
    qalg_elem* e = nullptr;
    check(qalg_tau(n, index, &e));
    print_elem(Elem(e).get(), pretty_flag);
  } else if (c_coact->parsed()) {
    const Elem e = parse(expr_text, n);
    char* s = nullptr;
    check(qalg_coact_json(e.get(), coaction.c_str(), group.c_str(), &s));
    print_json(Str(s).get(), pretty_flag);
  } else if (c_coinv->parsed()) {
    char* s = nullptr;
    check(qalg_coinv_basis_json(coaction.c_str(), group.c_str(), n, degree, &s));
    print_json(Str(s).get(), pretty_flag);
  } else if (c_hilbert->parsed()) {
    char* s = nullptr;
    check(qalg_hilbert_json(coaction.c_str(), group.c_str(), n, max_degree, &s));
    print_json(Str(s).get(), pretty_flag);
  } else if (c_gens->parsed()) {
    char* s = nullptr;
    check(qalg_generators_json(coaction.c_str(), group.c_str(), n, max_degree, &s));
    print_json(Str(s).get(), pretty_flag);
  } else if (c_check->parsed()) {
    char* s = nullptr;
    int all_pass = 0;
    check(qalg_check_suite_json(suite.c_str(), n, seed, &s, &all_pass));
    print_json(Str(s).get(), pretty_flag);
    return all_pass ? 0 : 1;
  } else if (c_embed->parsed()) {
    const Elem e = parse(expr_text, n);
    char* s = nullptr;
    check(qalg_embed_json(e.get(), &s));
    print_json(Str(s).get(), pretty_flag);
  } else if (c_sleq->parsed()) {
    const Elem a = parse(lhs_text, n);
    const Elem b = parse(rhs_text, n);
    int eq = 0;
    check(qalg_sl_equal(a.get(), b.get(), &eq));
    print_json(json{{"equal", eq != 0}}.dump(), pretty_flag);
  }
  return 0;
}
