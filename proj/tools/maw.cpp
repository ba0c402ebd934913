// maw — measure-algebra workbench CLI.
//
// Reads the shared JSON text format, dispatches to the workbench
// operations, and emits canonical output (sorted keys, "p/q" rationals), so
// identical inputs and flags always produce byte-identical bytes.
//
// Exit codes: 0 success, 1 domain error (stable error name on stderr),
// 2 parse or usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "maw/canmodel.hpp"
#include "maw/disint.hpp"
#include "maw/errors.hpp"
#include "maw/funcalg.hpp"
#include "maw/kolmo.hpp"
#include "maw/serialize.hpp"
#include "maw/suites.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw maw::ParseError("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw maw::ParseError("cannot open \"" + out_path + "\" for writing");
  out << text;
}

bool color_enabled() {
  const char* v = std::getenv("MAW_COLOR");
  return v != nullptr && std::string(v) == "1";
}

void print_summary(const std::vector<maw::LawReport>& reports) {
  const bool color = color_enabled();
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::size_t width = 4;
  for (const auto& r : reports) width = std::max(width, r.law.size());
  for (const auto& r : reports) {
    std::cerr << (r.pass() ? green : red) << (r.pass() ? "PASS" : "FAIL") << reset << "  "
              << r.law << std::string(width - r.law.size() + 2, ' ') << r.checked
              << " checked, " << r.violations.size() << " violations\n";
    for (const auto& v : r.violations) std::cerr << "      " << v << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maw — exact-arithmetic workbench for finite measure algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // --out etc. may follow the subcommand

  std::string out_path;
  app.add_option("--out", out_path, "write output to PATH instead of stdout");

  std::string in1, in2;
  std::vector<std::string> in_many;
  std::string family_path, cylinder_text;
  std::string suite = "all";
  std::size_t max_atoms = 3;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;

  auto* spectrum = app.add_subcommand("spectrum", "Stone space of a finite Boolean algebra");
  spectrum->add_option("algebra", in1)->required();
  auto* mes_cmd = app.add_subcommand("mes", "delete the null atoms of a measured algebra");
  mes_cmd->add_option("measured", in1)->required();
  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of probability algebras");
  tensor_cmd->add_option("factors", in_many)->required()->expected(-1);
  auto* model_cmd = app.add_subcommand("model", "canonical model of a probability algebra");
  model_cmd->add_option("algebra", in1)->required();
  auto* action_cmd =
      app.add_subcommand("model-action", "model a group action on the canonical model");
  action_cmd->add_option("action", in1)->required();
  auto* represent_cmd =
      app.add_subcommand("represent", "continuous representative of a measurable map");
  represent_cmd->add_option("spec", in1)->required();
  auto* disint_cmd =
      app.add_subcommand("disintegrate", "canonical disintegration of a morphism");
  disint_cmd->add_option("morphism", in1)->required();
  auto* relprod_cmd = app.add_subcommand("relprod", "relative product over a common factor");
  relprod_cmd->add_option("spec", in1)->required();
  auto* condexp_cmd = app.add_subcommand("condexp", "conditional expectation onto a factor");
  condexp_cmd->add_option("spec", in1)->required();
  auto* integrate_cmd = app.add_subcommand("integrate", "trace of a function element");
  integrate_cmd->add_option("spec", in1)->required();
  auto* lpnorm_cmd = app.add_subcommand("lpnorm", "abstract L^p quantity, p in {1,2,inf}");
  lpnorm_cmd->add_option("spec", in1)->required();
  auto* riesz_cmd = app.add_subcommand("riesz", "measure representing a state on C(K)");
  riesz_cmd->add_option("state", in1)->required();
  auto* kolmo_cmd = app.add_subcommand("kolmo", "exact cylinder query on a consistent family");
  kolmo_cmd->add_option("--family", family_path)->required();
  kolmo_cmd->add_option("--cylinder", cylinder_text)->required();
  auto* invariant_cmd = app.add_subcommand("invariant", "invariant factor of a group action");
  invariant_cmd->add_option("action", in1)->required();
  auto* ergodic_cmd =
      app.add_subcommand("ergodic", "ergodic components over the invariant factor");
  ergodic_cmd->add_option("action", in1)->required();
  auto* check_cmd = app.add_subcommand("check", "run category-law suites");
  check_cmd->add_option("--suite", suite, "stone-duality|prob-duality|disint|monoidal|all");
  check_cmd->add_option("--max-atoms", max_atoms, "exhaustive size cap");
  check_cmd->add_option("--seed", seed, "seed for randomized property suites");
  check_cmd->add_option("--jobs", jobs, "parallelism for law suites");
  (void)in2;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    using namespace maw;
    if (*spectrum) {
      emit(out_path, serialize_stone_space(stone(parse_algebra(slurp(in1)))));
    } else if (*mes_cmd) {
      emit(out_path, serialize_mes(mes(parse_measured(slurp(in1)))));
    } else if (*tensor_cmd) {
      std::vector<ProbAlgebra> factors;
      for (const auto& p : in_many) factors.push_back(parse_prob_algebra(slurp(p)));
      emit(out_path, serialize_tensor(tensor(factors)));
    } else if (*model_cmd) {
      emit(out_path, serialize_model(stone_model(parse_prob_algebra(slurp(in1)))));
    } else if (*action_cmd) {
      ActionSpec spec = parse_action(slurp(in1));
      emit(out_path, serialize_model_action(model_action(spec.space, spec.generators)));
    } else if (*represent_cmd) {
      RepresentSpec spec = parse_represent(slurp(in1));
      emit(out_path,
           serialize_point_map(represent(spec.space, spec.points, spec.element_map)));
    } else if (*disint_cmd) {
      emit(out_path, serialize_kernel(disintegrate(parse_morphism(slurp(in1)))));
    } else if (*relprod_cmd) {
      RelProductSpec spec = parse_relprod(slurp(in1));
      emit(out_path, serialize_relprod(rel_product(spec.pi1, spec.pi2)));
    } else if (*condexp_cmd) {
      MorphismElem spec = parse_condexp(slurp(in1));
      emit(out_path, serialize_elem(linfty(spec.morphism.target()),
                                    cond_exp(spec.morphism, spec.elem)));
    } else if (*integrate_cmd) {
      AlgebraElem spec = parse_algebra_elem(slurp(in1));
      emit(out_path, serialize_gauss(integrate(linfty(spec.space), spec.elem)));
    } else if (*lpnorm_cmd) {
      LpQuery spec = parse_lpnorm(slurp(in1));
      emit(out_path, serialize_rat(lp_norm(linfty(spec.space), spec.elem, spec.p)));
    } else if (*riesz_cmd) {
      FiniteState state = parse_state(slurp(in1));
      emit(out_path, serialize_measure(state.points, riesz_finite(state)));
    } else if (*kolmo_cmd) {
      CylinderMeasure mu(parse_family(slurp(family_path)));
      CylinderQuery q = parse_cylinder(cylinder_text);
      emit(out_path, serialize_rat(mu.query(q.indices, q.tuples)));
    } else if (*invariant_cmd) {
      ActionSpec spec = parse_action(slurp(in1));
      emit(out_path, serialize_invariant(invariant_factor(spec.space, spec.generators)));
    } else if (*ergodic_cmd) {
      ActionSpec spec = parse_action(slurp(in1));
      emit(out_path, serialize_ergodic(ergodic_components(spec.space, spec.generators)));
    } else if (*check_cmd) {
      SuiteOptions options{max_atoms, seed, jobs};
      auto reports = run_suite(suite, options);
      emit(out_path, serialize_reports(reports));
      print_summary(reports);
      for (const auto& r : reports)
        if (!r.pass()) return 1;
    }
  } catch (const maw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const maw::DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
