#include "qpg/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "qpg/goldbach.hpp"
#include "qpg/graphanalysis.hpp"
#include "qpg/hardy_littlewood.hpp"
#include "qpg/pauligraph.hpp"

namespace qpg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string spectrum_string(const analysis::IntegerSpectrum& spec) {
  std::vector<std::string> parts;
  for (const auto& [lambda, mult] : spec.entries) {
    parts.push_back(std::to_string(lambda) + "^" + std::to_string(mult));
  }
  if (!spec.certified) parts.push_back("(uncertified)");
  return join(parts, ' ');
}

std::string class_string(const analysis::SpectrumClass& cls) {
  if (cls.parameters.empty()) return cls.tag;
  std::vector<std::string> parts;
  for (const auto& [k, v] : cls.parameters) {
    parts.push_back(k + "=" + std::to_string(v));
  }
  return cls.tag + "(" + join(parts, ' ') + ")";
}

std::string name_string(const analysis::NamedGraph& named) {
  std::string s = named.name;
  if (!named.params.empty()) {
    std::vector<std::string> parts;
    for (std::size_t p : named.params) parts.push_back(std::to_string(p));
    s += "(" + join(parts, 'x') + ")";
  }
  if (named.spectral_only) s += "?";
  return s;
}

std::string aut_string(const analysis::AutResult& aut) {
  std::string s = aut.order.str();
  if (!aut.complete) s += "*";
  return s;
}

std::vector<std::size_t> component_sizes_desc(const graphs::Graph& g) {
  std::vector<std::size_t> sizes;
  for (const auto& comp : g.connected_components()) sizes.push_back(comp.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace

std::string format_double(double v, bool precise) {
  char buf[64];
  std::snprintf(buf, sizeof buf, precise ? "%.17g" : "%.4g", v);
  return buf;
}

std::string format_fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string OutputRecord::to_csv() const {
  std::ostringstream os;
  os << "# command=" << command << '\n';
  for (const auto& [k, v] : parameters) os << "# " << k << '=' << v << '\n';
  os << join(columns, ',') << '\n';
  for (const auto& row : rows) os << join(row, ',') << '\n';
  for (const auto& note : notes) os << "# note: " << note << '\n';
  return os.str();
}

std::string OutputRecord::to_json() const {
  ordered_json j;
  j["command"] = command;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = params;
  j["columns"] = columns;
  j["rows"] = rows;
  j["notes"] = notes;
  j["violations_empty"] = violations_empty;
  return j.dump(2) + "\n";
}

std::string OutputRecord::render(const std::string& format) const {
  if (!raw.empty()) return raw;
  return format == "json" ? to_json() : to_csv();
}

OutputRecord cmd_table1(std::uint64_t max_index, std::uint64_t max_n,
                        const nt::PrimeTable& pt) {
  OutputRecord rec;
  rec.command = "table1";
  rec.parameters = {{"max_index", std::to_string(max_index)},
                    {"max_n", std::to_string(max_n)}};
  rec.columns = {"index", "count", "values"};
  const auto buckets = goldbach::atg_table(max_index, max_n, pt);
  for (std::uint64_t k = 0; k <= max_index; ++k) {
    std::vector<std::string> vals;
    for (std::uint64_t n : buckets[k]) vals.push_back(std::to_string(n));
    rec.rows.push_back({std::to_string(k), std::to_string(buckets[k].size()),
                        join(vals, ' ')});
  }
  return rec;
}

OutputRecord cmd_qudit_table(const std::vector<std::uint32_t>& qs,
                             const nt::PrimeTable& pt, const Options& opts) {
  OutputRecord rec;
  rec.command = "qudit-table";
  rec.parameters = {{"count", std::to_string(qs.size())}};
  rec.columns = {"q",    "index",    "pairs", "mc",   "epsilon",   "aut_dual",
                 "aut_proj", "spectrum", "class", "name", "components"};
  for (std::uint32_t q : qs) {
    const std::uint64_t index = goldbach::atg_index(q, pt);
    const std::uint64_t pairs = goldbach::ordered_pair_count(q, pt);
    const auto [free_count, extra] = pauli::decomposition(q, opts.capacity);
    std::string mc = std::to_string(free_count);
    if (extra > 0) mc += "+" + std::to_string(extra);
    const double eps = hl::epsilon(q, pt);

    const pauli::DualGraph dual = pauli::build_dual_graph(q, opts.capacity);
    const pauli::ProjectivePart proj =
        pauli::projective_component(q, opts.capacity);
    const analysis::AutResult aut_dual = analysis::automorphism_order(dual.graph);
    const analysis::AutResult aut_proj =
        proj.graph.order() == dual.graph.order()
            ? aut_dual
            : analysis::automorphism_order(proj.graph);

    const analysis::IntegerSpectrum spec =
        analysis::exact_integer_spectrum(proj.graph);
    const std::string cls =
        spec.certified ? class_string(analysis::classify_spectrum(q, spec, pt))
                       : "unclassified";
    const analysis::NamedGraph named = analysis::recognize_named_graph(proj.graph);

    std::vector<std::string> comp_parts;
    for (std::size_t s : component_sizes_desc(dual.graph)) {
      comp_parts.push_back(std::to_string(s));
    }

    rec.rows.push_back({std::to_string(q), std::to_string(index),
                        std::to_string(pairs), mc, format_fixed2(eps),
                        aut_string(aut_dual), aut_string(aut_proj),
                        spectrum_string(spec), cls, name_string(named),
                        join(comp_parts, ' ')});
  }
  rec.notes.push_back(
      "spectrum/class/name describe the free-line part; components describe "
      "the full dual graph");
  rec.notes.push_back("aut values marked * hit the search budget");
  return rec;
}

OutputRecord cmd_table4(const std::vector<std::size_t>& rs,
                        const nt::PrimeTable& pt, const Options& opts) {
  OutputRecord rec;
  rec.command = "table4";
  rec.parameters = {{"count", std::to_string(rs.size())}};
  rec.columns = {"r", "p_r", "N", "u", "u_minus_eg"};
  for (std::size_t r : rs) {
    const hl::PrimorialRecord pr = hl::u_ratio(r, pt);
    const auto [mantissa, exponent] = nt::primorial_scientific(r, pt);
    rec.rows.push_back({std::to_string(r), std::to_string(pr.p_r),
                        format_double(mantissa, opts.precise) + "e" +
                            std::to_string(exponent),
                        format_double(pr.u, opts.precise),
                        format_double(pr.u_minus_eg, opts.precise)});
  }
  return rec;
}

OutputRecord cmd_scan(const std::string& which, std::uint64_t limit,
                      const nt::PrimeTable& pt, const Options& opts) {
  OutputRecord rec;
  rec.command = "scan " + which;
  rec.parameters = {{"limit", std::to_string(limit)}};

  if (which == "theorem1") {
    const hl::ScanReport rep = hl::theorem1_scan(limit, pt);
    rec.columns = {"q", "epsilon"};
    for (std::uint64_t q : rep.satisfied) {
      rec.rows.push_back({std::to_string(q),
                          format_double(hl::epsilon(q, pt), opts.precise)});
    }
    rec.violations_empty = rep.violations.empty();
    if (rep.violations.empty()) {
      rec.notes.push_back("positivity support matches the expected set");
    } else {
      std::vector<std::string> v;
      for (std::uint64_t q : rep.violations) v.push_back(std::to_string(q));
      rec.notes.push_back("unexpected support difference at: " + join(v, ' '));
    }
  } else if (which == "conjecture1") {
    const hl::ScanReport rep = hl::conjecture1_scan(limit, pt);
    rec.columns = {"r", "u"};
    for (std::uint64_t r : rep.violations) {
      rec.rows.push_back(
          {std::to_string(r),
           format_double(hl::u_ratio(r, pt).u, opts.precise)});
    }
    rec.violations_empty = rep.violations.empty();
    rec.notes.push_back(rep.violations.empty()
                            ? "u stays above e^gamma for all checked r"
                            : "u dropped to e^gamma or below at the rows above");
  } else if (which == "prop2") {
    const hl::ScanReport rep = hl::prop2_scan(limit, pt);
    rec.columns = {"q", "x"};
    for (std::uint64_t q : rep.violations) {
      rec.rows.push_back(
          {std::to_string(q), format_double(hl::x_ratio(q, pt), opts.precise)});
    }
    rec.violations_empty = rep.violations.empty();
    rec.notes.push_back(rep.violations.empty()
                            ? "x stays below 1 for all checked even q"
                            : "x reached 1 at the rows above");
  } else if (which == "gd-champions") {
    rec.columns = {"q", "gd"};
    for (std::uint64_t q : goldbach::gd_champions(limit, pt)) {
      rec.rows.push_back({std::to_string(q),
                          format_double(goldbach::goldbach_defect(q, pt),
                                        opts.precise)});
    }
  } else if (which == "x-champions") {
    rec.columns = {"q", "x"};
    for (std::uint64_t q : hl::x_champions(limit, pt)) {
      rec.rows.push_back(
          {std::to_string(q), format_double(hl::x_ratio(q, pt), opts.precise)});
    }
  } else if (which == "max-g") {
    rec.columns = {"n", "pairs"};
    for (std::uint64_t n : goldbach::maximal_g_set(limit, pt)) {
      rec.rows.push_back(
          {std::to_string(n),
           std::to_string(goldbach::goldbach_pair_count(n, pt))});
    }
  } else {
    throw std::domain_error("cmd_scan: unknown scan name: " + which);
  }
  return rec;
}

OutputRecord cmd_graph(std::uint32_t q, const std::string& what,
                       bool projective, const nt::PrimeTable& pt,
                       const Options& opts) {
  OutputRecord rec;
  rec.command = "graph " + what;
  rec.parameters = {{"q", std::to_string(q)},
                    {"graph", projective ? "projective" : "dual"}};

  const pauli::DualGraph dual = pauli::build_dual_graph(q, opts.capacity);
  const pauli::ProjectivePart proj = pauli::projective_component(q, opts.capacity);
  const graphs::Graph& g = projective ? proj.graph : dual.graph;

  if (what == "edges") {
    rec.raw = g.to_edge_list();
  } else if (what == "spectrum") {
    const analysis::IntegerSpectrum spec = analysis::exact_integer_spectrum(g);
    const analysis::IntegerSpectrum proj_spec =
        projective ? spec : analysis::exact_integer_spectrum(proj.graph);
    ordered_json j;
    j["command"] = rec.command;
    j["q"] = q;
    j["graph"] = projective ? "projective" : "dual";
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    ordered_json entries = ordered_json::array();
    for (const auto& [lambda, mult] : spec.entries) {
      entries.push_back(ordered_json::array({lambda, mult}));
    }
    j["spectrum"] = entries;
    j["certified"] = spec.certified;
    j["class"] = proj_spec.certified
                     ? class_string(analysis::classify_spectrum(q, proj_spec, pt))
                     : "unclassified";
    rec.raw = j.dump(2) + "\n";
  } else if (what == "aut") {
    const analysis::AutResult aut = analysis::automorphism_order(g);
    rec.columns = {"graph", "aut_order", "complete", "nodes"};
    rec.rows.push_back({projective ? "projective" : "dual", aut.order.str(),
                        aut.complete ? "true" : "false",
                        std::to_string(aut.nodes)});
  } else if (what == "components") {
    rec.columns = {"size"};
    for (std::size_t s : component_sizes_desc(g)) {
      rec.rows.push_back({std::to_string(s)});
    }
  } else {
    throw std::domain_error("cmd_graph: unknown payload: " + what);
  }
  return rec;
}

}  // namespace qpg::cli
