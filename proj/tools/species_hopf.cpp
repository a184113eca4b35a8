#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "species/errors.hpp"
#include "species/verify.hpp"

using namespace species;

namespace {

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open model file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("model file is not valid JSON: ") + e.what());
  }
  return model_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Hopf monoid of set compositions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON report to FILE instead of stdout");

  int n = 4;
  unsigned order = 2;
  bool witnesses = false;
  bool heavy = false;
  app.add_flag("--heavy", heavy, "Allow the larger sizes (n = 5 suites, n = 6 cells)");
  std::string model_path;
  std::function<RunReport()> run;

  // Largest n without and with --heavy.
  std::pair<int, int> n_limits{4, 5};
  std::pair<unsigned, unsigned> order_limits{6, 6};
  auto add_n = [&](CLI::App* cmd, int def, std::pair<int, int> limits = {4, 5}) {
    cmd->add_option("--n", n, "Ground set size")->check(CLI::NonNegativeNumber);
    cmd->preparse_callback([&n, &n_limits, def, limits](std::size_t) {
      n = def;
      n_limits = limits;
    });
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* cmd = parent->add_subcommand(name, desc);
    cmd->fallthrough();
    return cmd;
  };

  CLI::App* hopf = app.add_subcommand("hopf", "Hopf monoid axioms")->require_subcommand(1);
  CLI::App* hopf_check_cmd = leaf(hopf, "check", "Axioms, antipode, basis change and primitive dimensions");
  add_n(hopf_check_cmd, 4);
  hopf_check_cmd->callback([&] { run = [&] { return hopf_check(n); }; });

  CLI::App* cells = app.add_subcommand("cells", "Cells of the braid arrangement")->require_subcommand(1);
  CLI::App* cells_count = leaf(cells, "count", "Count the cells on [n]");
  add_n(cells_count, 4, {5, 6});
  cells_count->callback([&] { run = [&] { return cells_count_report(n); }; });
  CLI::App* cells_enum = leaf(cells, "enumerate", "List the cells on [n]");
  add_n(cells_enum, 4, {5, 6});
  cells_enum->add_flag("--witnesses", witnesses, "Attach an exact separating point to each cell");
  cells_enum->callback([&] { run = [&] { return cells_enumerate_report(n, witnesses); }; });

  CLI::App* dyn = app.add_subcommand("dynkin", "Dynkin elements")->require_subcommand(1);
  CLI::App* dyn_rank = leaf(dyn, "rank", "Span of the Dynkin elements against dim Zie[n]");
  add_n(dyn_rank, 4);
  dyn_rank->callback([&] { run = [&] { return dynkin_report(n); }; });

  auto verify_group = [&](const std::string& name, const std::string& desc, int def,
                          std::function<RunReport(int)> fn) {
    CLI::App* grp = app.add_subcommand(name, desc)->require_subcommand(1);
    CLI::App* cmd = leaf(grp, "verify", desc);
    add_n(cmd, def);
    cmd->callback([&run, &n, fn] { run = [&n, fn] { return fn(n); }; });
  };
  verify_group("steinmann", "Steinmann relations", 4, steinmann_report);
  verify_group("ruelle", "Ruelle identity", 4, ruelle_report);
  verify_group("glz", "GLZ relation", 4, glz_report);
  verify_group("arrows", "Steinmann arrows", 3, arrows_report);
  verify_group("lie", "Antisymmetry and Jacobi on tree images", 4, jacobi_report);

  CLI::App* series = app.add_subcommand("series", "Series and product systems")->require_subcommand(1);
  CLI::App* series_id = leaf(series, "identities", "Convolution, group-like and homomorphism identities");
  series_id->add_option("--order", order, "Truncation order")->check(CLI::Range(1, 6));
  series_id->preparse_callback([&](std::size_t) { order = kDefaultOrder; });
  series_id->callback([&] { run = [&] { return series_report(order); }; });
  CLI::App* causal = leaf(series, "causal", "Causal factorization and generating-function identities");
  causal->add_option("--n", n, "Largest ground set for the exhaustive factorization check")
      ->check(CLI::NonNegativeNumber);
  causal->add_option("--order", order, "Truncation order")->check(CLI::Range(1, 3));
  causal->preparse_callback([&](std::size_t) {
    n = 4;
    n_limits = {4, 5};
    order = 2;
    order_limits = {3, 3};
  });
  causal->callback([&] { run = [&] { return causal_report(n, order); }; });

  CLI::App* toy = app.add_subcommand("toy", "Toy causal field theory")->require_subcommand(1);
  for (const std::string name : {"demo", "bogoliubov"}) {
    CLI::App* cmd = leaf(toy, name, name == "demo" ? "S-matrix and generating functions of a model"
                                                    : "Bogoliubov formula for a model");
    cmd->add_option("--model", model_path, "Model JSON file")->required();
    cmd->add_option("--order", order, "Truncation order")->check(CLI::Range(1, 5));
    if (name == "demo") {
      cmd->callback([&] { run = [&] { return toy_demo(load_model(model_path), order); }; });
    } else {
      cmd->callback([&] { run = [&] { return toy_bogoliubov(load_model(model_path), order); }; });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const int n_max = heavy ? n_limits.second : n_limits.first;
    if (n > n_max) {
      throw DomainError("--n " + std::to_string(n) + " exceeds the limit " + std::to_string(n_max) +
                        (heavy ? "" : " (pass --heavy to raise it)"));
    }
    const unsigned order_max = heavy ? order_limits.second : order_limits.first;
    if (order > order_max) {
      throw DomainError("--order " + std::to_string(order) + " exceeds the limit " + std::to_string(order_max) +
                        (heavy ? "" : " (pass --heavy to raise it)"));
    }
    const RunReport report = run();
    const std::string text = report.to_json().dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw DomainError("cannot write " + out_path);
      out << text;
    }
    return report.passed() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
