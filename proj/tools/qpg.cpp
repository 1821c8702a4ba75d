// Command-line front end: prime-sum statistics, primorial inequality tables,
// and single-qudit commutation geometry reports.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qpg/errors.hpp"
#include "qpg/numtheory.hpp"
#include "qpg/report.hpp"

namespace {

constexpr std::uint64_t kScanLimitCap = 20'000'000;

void emit(const qpg::cli::OutputRecord& rec, const std::string& format,
          const std::string& out_path) {
  const std::string text = rec.render(format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
  }
}

std::uint64_t default_scan_limit(const std::string& which) {
  if (which == "theorem1") return 1'000'000;
  if (which == "conjecture1") return 100'000;
  if (which == "prop2") return 1'000'000;
  if (which == "gd-champions") return 9'240;
  if (which == "x-champions") return 30'030;
  return 10'000;  // max-g
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "arithmetic-function scans, prime-pair statistics, and qudit "
      "commutation-geometry reports"};
  app.set_config("--config");
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  bool precise = false;
  std::uint32_t capacity = 36;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_flag("--precise", precise, "print full double precision");
  app.add_option("--capacity", capacity,
                 "largest modulus accepted by the graph builders")
      ->check(CLI::Range(2u, 60u));

  auto* t1 = app.add_subcommand("table1", "totally-Goldbach index table");
  std::uint64_t max_index = 10, max_n = 200;
  t1->add_option("--max-index", max_index, "largest index bucket");
  t1->add_option("--max-n", max_n, "largest n scanned");

  auto* qt = app.add_subcommand(
      "qudit-table", "per-modulus pair counts, geometry, and spectra");
  std::vector<std::uint32_t> qs;
  qt->add_option("q", qs, "moduli (default 2..36)");

  auto* t4 = app.add_subcommand("table4", "primorial inequality table");
  std::vector<std::size_t> rs;
  t4->add_option("r", rs, "primorial orders (default 2 10 100 1000 10000 100000)");

  auto* sc = app.add_subcommand("scan", "inequality and champion scans");
  std::string which;
  std::uint64_t limit = 0;
  sc->add_option("name", which, "scan name")
      ->required()
      ->check(CLI::IsMember({"theorem1", "conjecture1", "prop2", "gd-champions",
                             "x-champions", "max-g"}));
  sc->add_option("--limit", limit, "scan bound (default depends on the scan)");

  auto* gr = app.add_subcommand("graph", "dual-graph payloads for one modulus");
  std::uint32_t gq = 2;
  std::string what;
  bool projective = false;
  gr->add_option("q", gq, "modulus")->required();
  gr->add_option("what", what, "payload")
      ->required()
      ->check(CLI::IsMember({"edges", "spectrum", "aut", "components"}));
  gr->add_flag("--projective", projective,
               "use the free-line part instead of the full dual graph");

  CLI11_PARSE(app, argc, argv);

  const qpg::cli::Options opts{precise, capacity};
  try {
    if (t1->parsed()) {
      const qpg::nt::PrimeTable pt(std::max<std::uint64_t>(max_n + 1, 1000));
      emit(qpg::cli::cmd_table1(max_index, max_n, pt), format, out_path);
      return 0;
    }
    if (qt->parsed()) {
      if (qs.empty()) {
        for (std::uint32_t q = 2; q <= 36; ++q) qs.push_back(q);
      }
      const qpg::nt::PrimeTable pt(1000);
      emit(qpg::cli::cmd_qudit_table(qs, pt, opts), format, out_path);
      return 0;
    }
    if (t4->parsed()) {
      if (rs.empty()) rs = {2, 10, 100, 1000, 10000, 100000};
      const qpg::nt::PrimeTable pt;
      emit(qpg::cli::cmd_table4(rs, pt, opts), format, out_path);
      return 0;
    }
    if (sc->parsed()) {
      if (limit == 0) limit = default_scan_limit(which);
      if (limit > kScanLimitCap)
        throw qpg::capacity_error("scan: --limit exceeds 20000000");
      const qpg::nt::PrimeTable pt(
          std::max<std::uint64_t>(limit + 1, qpg::nt::PrimeTable::kDefaultLimit));
      const qpg::cli::OutputRecord rec = qpg::cli::cmd_scan(which, limit, pt, opts);
      emit(rec, format, out_path);
      return rec.violations_empty ? 0 : 1;
    }
    if (gr->parsed()) {
      const qpg::nt::PrimeTable pt(1000);
      emit(qpg::cli::cmd_graph(gq, what, projective, pt, opts), format, out_path);
      return 0;
    }
  } catch (const qpg::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
