#include "wallcx/json_io.hpp"
#include "wallcx/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

/* sysexits-style: 64 usage, 65 bad input data. Verification outcomes use
   0 (all pass), 1 (any failure), 2 (inconclusive only). */
constexpr int exit_usage = 64;
constexpr int exit_data = 65;

struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw DataError("cannot write " + out_path);
  out << text;
  if (!out) throw DataError("cannot write " + out_path);
}

long long floor_div2(long long n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

}  // namespace

int main(int argc, char** argv) {
  using namespace wallcx;

  CLI::App app{"bounded Wall-pairing complexes: builders, exact homology, verification suites"};
  app.set_version_flag("--version", library_version());
  app.require_subcommand(1);
  int rc = 0;

  // build <kind> --g G [--bound B] [--maxdim D] [--maxlen L] [--out PATH]
  auto* build = app.add_subcommand("build", "construct a bounded complex or poset as JSON");
  std::string kind;
  std::size_t g = 0;
  long long bound = 1;
  std::size_t maxdim = 3, maxlen = 0;
  std::string out_path;
  build->add_option("kind", kind, "one of: kpi, unimodular, L, M")
      ->required()
      ->check(CLI::IsMember({"kpi", "unimodular", "L", "M"}));
  build->add_option("--g", g, "rank of the standard model")->required();
  build->add_option("--bound", bound, "sup-norm coefficient bound")->check(CLI::PositiveNumber);
  build->add_option("--maxdim", maxdim, "top simplex dimension kept");
  build->add_option("--maxlen", maxlen, "sequence length cap (0 = automatic)");
  build->add_option("--out", out_path, "output file (default stdout)");
  build->callback([&] {
    EnumerationBounds b;
    b.coeff_bound = bound;
    b.max_dim = maxdim;
    b.max_seq_len = maxlen;
    emit(out_path, to_json(build_artifact(kind, g, b)).dump(2) + "\n");
  });

  // homology <in> [--maxdim D] [--format json|csv] [--out PATH]
  auto* hom = app.add_subcommand("homology", "exact integer homology of a stored complex or poset");
  std::string in_path, format = "json";
  long long through_dim = -1;
  hom->add_option("input", in_path, "JSON file holding a complex, poset, or build artifact")
      ->required();
  hom->add_option("--maxdim", through_dim, "compute degrees 0..maxdim (-1 = all)");
  hom->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  hom->add_option("--out", out_path, "output file (default stdout)");
  hom->callback([&] {
    const SimplicialComplex c = load_complex_any(read_file(in_path));
    const HomologyResult h = homology(c, false, through_dim);
    emit(out_path, format == "csv" ? homology_to_csv(h) : to_json(h).dump(2) + "\n");
  });

  // verify <suite> [--seed N] [--budget K] [--timings] [--out PATH]
  auto* ver = app.add_subcommand("verify", "run a verification suite and report per-check verdicts");
  std::string suite;
  SuiteOptions opt;
  bool timings = false;
  ver->add_option("suite", suite, "one of: algebra, posets, complexes, connectivity, all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--seed", opt.seed, "seed for the randomized checks");
  ver->add_option("--budget", opt.budget, "extra bound steps for connectivity probes");
  ver->add_flag("--timings", timings, "append wall-clock durations (not part of the canonical report)");
  ver->add_option("--out", out_path, "output file (default stdout)");
  ver->callback([&] {
    const VerificationReport rep = run_suite(suite, opt);
    emit(out_path, rep.to_text(timings));
    rc = rep.exit_code();
  });

  // stable_range --g G
  auto* sr = app.add_subcommand("stable_range", "degree bound of the stability isomorphism");
  sr->add_option("--g", g, "rank")->required();
  sr->callback([&] {
    const long long k = floor_div2(static_cast<long long>(g) - 3);
    std::cout << "stable range: k <= " << k << (k < 0 ? " (empty range)" : "") << "\n"
              << "formula: floor((g - 3) / 2), g = " << g << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  } catch (const JsonFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const ComplexTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
