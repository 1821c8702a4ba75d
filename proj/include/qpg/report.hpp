#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpg/numtheory.hpp"

namespace qpg::cli {

// One command's output in structured form, renderable as CSV or JSON. When
// `raw` is nonempty it is the entire payload (edge lists, spectrum reports)
// and the format flag is ignored.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  bool violations_empty = true;
  std::string raw;

  std::string to_csv() const;
  std::string to_json() const;
  std::string render(const std::string& format) const;
};

struct Options {
  bool precise = false;
  std::uint32_t capacity = 36;
};

// "%.4g", or "%.17g" with precise.
std::string format_double(double v, bool precise);
// "%.2f".
std::string format_fixed2(double v);

OutputRecord cmd_table1(std::uint64_t max_index, std::uint64_t max_n,
                        const nt::PrimeTable& pt);

OutputRecord cmd_qudit_table(const std::vector<std::uint32_t>& qs,
                             const nt::PrimeTable& pt, const Options& opts);

OutputRecord cmd_table4(const std::vector<std::size_t>& rs,
                        const nt::PrimeTable& pt, const Options& opts);

// which: theorem1 | conjecture1 | prop2 | gd-champions | x-champions | max-g.
OutputRecord cmd_scan(const std::string& which, std::uint64_t limit,
                      const nt::PrimeTable& pt, const Options& opts);

// what: edges | spectrum | aut | components. `projective` switches from the
// full dual graph to its free-line part.
OutputRecord cmd_graph(std::uint32_t q, const std::string& what,
                       bool projective, const nt::PrimeTable& pt,
                       const Options& opts);

}  // namespace qpg::cli
