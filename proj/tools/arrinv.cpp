#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrinv/report.hpp"

using namespace arrinv;

namespace {

// "fixture:<name>" selects a built-in arrangement; anything else is a path.
Arrangement load_input(const std::string& input) {
  constexpr std::string_view prefix = "fixture:";
  if (input.starts_with(prefix)) {
    const std::string name = input.substr(prefix.size());
    const Fixture* f = find_fixture(name);
    if (f == nullptr) {
      throw ValidationError("unknown fixture '" + name + "' (see 'arrinv examples list')");
    }
    return f->arrangement();
  }
  return load_arrangement(input);
}

struct Output {
  bool pretty = false;

  void emit(const Json& doc) const {
    if (pretty) {
      std::cout << render_pretty(doc);
    } else {
      std::cout << doc.dump(2) << '\n';
    }
  }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial and sheaf-theoretic invariants of projective hyperplane arrangements"};
  app.require_subcommand(1);

  AnalysisOptions options;
  Output output;
  std::vector<std::uint64_t> primes;
  bool json_flag = true;
  bool no_literature = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json_flag, "JSON output (default)");
    sub->add_flag("--pretty", output.pretty, "indented key/value output instead of JSON");
    sub->add_option("--prime", primes, "prime for the finite-field oracle (repeatable; default 7, 11, 101)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-subsets", options.max_subsets, "cap on subsets examined by the Torelli subset search")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--no-literature-rules", no_literature, "disable stability rules quoted from the literature");
  };

  std::string input;
  auto with_input = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "arrangement JSON file, or fixture:<name>")->required();
    add_common(sub);
    return sub;
  };

  CLI::App* analyze = with_input("analyze", "full report");
  CLI::App* lattice = with_input("lattice", "intersection lattice with Möbius function");
  CLI::App* invariants = with_input("invariants", "Poincaré and Chern polynomials, local data");
  CLI::App* stability = with_input("stability", "stability verdict with witnesses");
  CLI::App* torelli = with_input("torelli", "Torelli verdict");
  CLI::App* gale = with_input("gale", "associated (Gale-dual) arrangement as input JSON");
  CLI::App* tensor = with_input("tensor", "slices of the defining tensor");
  CLI::App* verify_cmd = with_input("verify", "run the oracle suite; exit 1 on any failure");
  CLI::App* conjecture = with_input("conjecture", "stability of A and of its associated arrangement");

  CLI::App* examples = app.add_subcommand("examples", "built-in fixtures");
  examples->require_subcommand(1);
  CLI::App* list = examples->add_subcommand("list", "list fixture names");
  CLI::App* show = examples->add_subcommand("show", "print a fixture as input JSON");
  std::string fixture_name;
  show->add_option("name", fixture_name, "fixture name")->required();
  add_common(list);
  add_common(show);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!primes.empty()) {
    options.primes = primes;
  }
  options.literature_rules = !no_literature;

  try {
    if (list->parsed()) {
      Json out = Json::array();
      for (const Fixture& f : fixture_library()) {
        out.push_back(Json{{"name", f.name}, {"n", f.n}, {"m", f.hyperplanes.size()}, {"description", f.description}});
      }
      output.emit(out);
      return 0;
    }
    if (show->parsed()) {
      const Fixture* f = find_fixture(fixture_name);
      if (f == nullptr) {
        throw ValidationError("unknown fixture '" + fixture_name + "'");
      }
      output.emit(fixture_to_json(*f));
      return 0;
    }

    const Arrangement a = load_input(input);
    if (analyze->parsed()) {
      output.emit(analyze_report(a, options));
    } else if (lattice->parsed()) {
      const IntersectionLattice l = build_lattice(a);
      output.emit(Json{{"n", a.n()}, {"m", a.m()}, {"flats", lattice_json(l)}});
    } else if (invariants->parsed()) {
      output.emit(invariants_report(a, build_lattice(a)));
    } else if (stability->parsed()) {
      output.emit(stability_json(stability_of(a, build_lattice(a), options)));
    } else if (torelli->parsed()) {
      const IntersectionLattice l = build_lattice(a);
      const StabilityVerdict v = stability_of(a, l, options);
      output.emit(torelli_json(torelli_verdict(a, l, v, TorelliOptions{options.max_subsets})));
    } else if (gale->parsed()) {
      output.emit(arrangement_to_json(gale_dual(a)));
    } else if (tensor->parsed()) {
      output.emit(tensor_json(steiner_tensor(a)));
    } else if (verify_cmd->parsed()) {
      const VerifyReport r = verify(a, build_lattice(a), options);
      output.emit(verify_json(r));
      return r.all_passed() ? 0 : 1;
    } else if (conjecture->parsed()) {
      bool counterexample = false;
      output.emit(conjecture_report(a, options, counterexample));
      if (counterexample) {
        std::cerr << "warning: stability of the arrangement and of its associated arrangement disagree\n";
      }
    }
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
