// latmax: search, verify and classify maximal lattice-free polytopes.
//
// Exit status: 0 when every assertion holds, 1 on usage or input errors,
// 2 when a mathematical assertion fails (the report is still written).

#include "latmax/latmax.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kAssertion = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const latmax::Json& report, const std::string& path) {
  const std::string text = latmax::dump(report);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::vector<latmax::Integer> parse_ld(const std::string& s) {
  if (s == "all") return {1, 2, 3};
  if (s == "1" || s == "2" || s == "3") return {std::stoll(s)};
  throw UsageError("--ld must be 1, 2, 3 or all (got '" + s + "')");
}

unsigned resolve_jobs(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  if (flag < 0) throw UsageError("--jobs must be positive");
  if (const char* env = std::getenv("LATMAX_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw UsageError("LATMAX_JOBS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return 1;
}

std::pair<latmax::Integer, latmax::Integer> parse_window(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--window expects LO,HI");
  try {
    std::size_t a = 0, b = 0;
    auto lo = std::stoll(s.substr(0, comma), &a);
    auto hi = std::stoll(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw UsageError("--window expects LO,HI");
    if (lo > 0 || hi < 1) throw UsageError("--window must contain [0,1]");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--window expects integers LO,HI");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and certify maximal lattice-free integral polytopes in dimension three"};
  app.require_subcommand(1);

  std::string ld = "all", out;
  int margin = 2, jobs = 0;
  auto* search = app.add_subcommand("search", "exhaustive search over lattice width >= 3");
  search->add_option("--ld", ld, "lattice diameter: 1, 2, 3 or all")->capture_default_str();
  search->add_option("--margin", margin, "integer margin of the Z-nonmaximality certificate box")->capture_default_str();
  search->add_option("--jobs", jobs, "worker threads (default: $LATMAX_JOBS or 1)");
  search->add_option("--out", out, "report path (default: stdout)");

  std::string input, verify_out;
  int verify_margin = 2;
  auto* verify = app.add_subcommand("verify", "check the stored catalogs, or a polytope file");
  verify->add_option("--input", input, "polytope JSON file");
  verify->add_option("--margin", verify_margin, "certificate margin in file mode")->capture_default_str();
  verify->add_option("--out", verify_out, "report path (default: stdout)");

  std::string window = "-2,4", classify_out;
  int classify_margin = 3;
  auto* classify = app.add_subcommand("classify2d", "brute-force classification of half-integral polygons");
  classify->add_option("--window", window, "LO,HI: vertex window [LO,HI]^2")->capture_default_str();
  classify->add_option("--margin", classify_margin, "certificate margin")->capture_default_str();
  classify->add_option("--out", classify_out, "report path (default: stdout)");

  std::string catalog_dir;
  auto* catalog = app.add_subcommand("catalog", "export the width-two catalog as polytope files");
  catalog->add_option("--dir", catalog_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*search) {
      if (margin < 1) throw UsageError("--margin must be at least 1");
      latmax::SearchConfig cfg;
      cfg.ld_values = parse_ld(ld);
      cfg.certificate_margin = margin;
      cfg.parallelism = resolve_jobs(jobs);
      cfg.output_path = out;
      auto report = latmax::run_search(cfg);
      emit(latmax::search_report_json(report), out);
      std::cerr << "apexes " << report.apex_total << ", survivors " << report.survivors.size() << ", classes "
                << report.classes.size() << ", " << (report.ok() ? "ok" : "FAILED") << "\n";
      for (const auto& f : report.failures) std::cerr << "failure: " << f << "\n";
      return report.ok() ? kOk : kAssertion;
    }
    if (*verify) {
      if (verify_margin < 1) throw UsageError("--margin must be at least 1");
      latmax::CommandResult r = input.empty()
                                    ? latmax::verify_catalogs_report()
                                    : latmax::verify_file_report(latmax::parse_polytope_file(read_file(input)),
                                                                 verify_margin);
      emit(r.report, verify_out);
      std::cerr << "verify: " << (r.ok ? "ok" : "FAILED") << "\n";
      return r.ok ? kOk : kAssertion;
    }
    if (*classify) {
      if (classify_margin < 1) throw UsageError("--margin must be at least 1");
      auto [lo, hi] = parse_window(window);
      auto r = latmax::classify2d_report(lo, hi, classify_margin);
      emit(r.report, classify_out);
      std::cerr << "classify2d: " << r.report["classes"].size() << " classes, " << (r.ok ? "ok" : "FAILED") << "\n";
      return r.ok ? kOk : kAssertion;
    }
    if (*catalog) {
      std::filesystem::create_directories(catalog_dir);
      for (const auto& e : latmax::width_two_catalog()) {
        latmax::Json meta = {{"facets", e.facet_label}, {"lattice_diameter", e.ld_label}};
        auto file = latmax::make_polytope_file(e.name, e.polytope, meta);
        std::string stem;
        for (char c : e.name)
          if (std::isalnum(static_cast<unsigned char>(c))) stem += c;
          else if (c == '\'') stem += 'p';
        const auto path = std::filesystem::path(catalog_dir) / (stem + ".json");
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + path.string() + "'");
        f << latmax::serialize_polytope_file(file);
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const latmax::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
