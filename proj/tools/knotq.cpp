// Command-line front end: enumerate quandles of the supported link
// families, analyze their automorphism groups, and rebuild the bundled
// reference tables, checking every cell against the computed values.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knotq/enumerator.hpp"
#include "knotq/errors.hpp"
#include "knotq/groups.hpp"
#include "knotq/links.hpp"
#include "knotq/quandle.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;
constexpr int kExitMismatch = 5;

int default_cap() {
  if (const char* env = std::getenv("KNOTQ_CAP")) {
    try {
      const int value = std::stoi(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring bad KNOTQ_CAP value '" << env << "'\n";
  }
  return 100000;
}

struct CommonArgs {
  std::vector<std::string> spec_parts;
  std::optional<int> n;
  bool fundamental = false;
  int cap = default_cap();
  std::string dot_path;
  std::string json_path;

  std::string spec() const {
    std::string out;
    for (const auto& part : spec_parts) {
      if (!out.empty()) out += ' ';
      out += part;
    }
    return out;
  }
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("spec", args.spec_parts,
                  "link spec, e.g. two-bridge:3/5, torus:2,4:+-, "
                  "torus-axis:5, braid:3:1 2 1 2, braid-axis:2:1 1 1, "
                  "unknot, hopf, file:<path>")
      ->required()
      ->expected(-1);
  auto* n_opt = cmd->add_option("--n", args.n, "quandle exponent (default 2)");
  cmd->add_flag("--fundamental", args.fundamental,
                "enumerate the fundamental quandle (no exponent)")
      ->excludes(n_opt);
  cmd->add_option("--cap", args.cap,
                  "vertex budget before declaring the quandle infinite");
  cmd->add_option("--dot", args.dot_path, "write the Cayley graph as DOT");
  cmd->add_option("--json", args.json_path, "write the Cayley table as JSON");
}

void write_outputs(const knotq::CayleyTable& table, const CommonArgs& args) {
  if (!args.dot_path.empty()) {
    std::ofstream out(args.dot_path);
    if (!out) throw knotq::ParseError("cannot write '" + args.dot_path + "'");
    out << knotq::to_dot(table);
  }
  if (!args.json_path.empty()) {
    std::ofstream out(args.json_path);
    if (!out) throw knotq::ParseError("cannot write '" + args.json_path + "'");
    out << knotq::cayley_to_json(table).dump(2) << '\n';
  }
}

int run_enumerate(const CommonArgs& args) {
  knotq::QuandlePresentation p =
      knotq::parse_link_spec(args.spec(), args.n, args.fundamental);
  knotq::EnumerateOptions opts;
  opts.cap = args.cap;
  const knotq::CayleyTable table = knotq::enumerate(p, opts);
  std::cout << "elements: " << table.size
            << ", components: " << table.components().size() << "\n";
  write_outputs(table, args);
  return 0;
}

std::string group_line(const knotq::PermGroup& g,
                       const std::vector<knotq::CatalogEntry>& catalog) {
  std::ostringstream out;
  out << "order " << g.order() << " = " << knotq::identify(g, catalog);
  return out.str();
}

int run_analyze(const CommonArgs& args) {
  knotq::QuandlePresentation p =
      knotq::parse_link_spec(args.spec(), args.n, args.fundamental);
  knotq::EnumerateOptions opts;
  opts.cap = args.cap;
  const knotq::CayleyTable table = knotq::enumerate(p, opts);
  const knotq::FiniteQuandle q = knotq::from_cayley(table);

  const auto comps = knotq::components(q);
  std::ostringstream comp_sizes;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) comp_sizes << ", ";
    comp_sizes << comps[i].size();
  }

  const knotq::PermGroup aut = knotq::automorphism_group(q);
  const knotq::PermGroup inn = knotq::inner_group(q);
  const knotq::PermGroup trans = knotq::transvection_group(q);
  const auto catalog = knotq::default_catalog(q.size());

  std::cout << "link: " << args.spec() << "\n";
  if (p.exponent_n()) {
    std::cout << "n: " << *p.exponent_n() << "\n";
  } else {
    std::cout << "n: fundamental\n";
  }
  std::cout << "elements: " << q.size() << "\n"
            << "components: " << comps.size() << " (sizes: "
            << comp_sizes.str() << ")\n"
            << "Aut: " << group_line(aut, catalog) << "\n"
            << "Inn: " << group_line(inn, catalog) << "\n"
            << "Trans: " << group_line(trans, catalog) << "\n"
            << "medial: " << (knotq::is_medial(q) ? "yes" : "no") << "\n";
  write_outputs(table, args);
  return 0;
}

struct TableRow {
  std::string label;
  int expected_size = 0;
  std::string expected_aut;
  std::string expected_inn;
  std::string expected_trans;
  knotq::QuandlePresentation presentation;
};

struct RowResult {
  bool ok = true;
  std::vector<std::string> cells;
  std::vector<std::string> mismatches;
};

RowResult check_row(const TableRow& row, int cap) {
  RowResult result;
  const knotq::CayleyTable table = knotq::enumerate(row.presentation, cap);
  const knotq::FiniteQuandle q = knotq::from_cayley(table);

  auto record = [&](const std::string& column, const std::string& computed,
                    bool matches) {
    result.cells.push_back(computed);
    if (!matches) {
      result.ok = false;
      result.mismatches.push_back(row.label + " / " + column + ": computed " +
                                  computed);
    }
  };

  record("order", std::to_string(q.size()), q.size() == row.expected_size);
  const struct {
    const char* column;
    const std::string& name;
    knotq::PermGroup group;
  } checks[] = {
      {"Aut", row.expected_aut, knotq::automorphism_group(q)},
      {"Inn", row.expected_inn, knotq::inner_group(q)},
      {"Trans", row.expected_trans, knotq::transvection_group(q)},
  };
  for (const auto& check : checks) {
    const bool matches =
        knotq::group_isomorphic(check.group, knotq::reference_group(check.name));
    const std::string computed =
        matches ? check.name + " (order " + std::to_string(check.group.order()) +
                      ")"
                : "order " + std::to_string(check.group.order()) +
                      ", expected " + check.name;
    record(check.column, computed, matches);
  }
  return result;
}

std::vector<TableRow> two_bridge_rows(int q_lo, int q_hi) {
  std::vector<TableRow> rows;
  for (int q = q_lo; q <= q_hi; ++q) {
    TableRow row;
    row.label = "two-bridge q=" + std::to_string(q);
    row.expected_size = q;
    const int half = q / std::gcd(2, q);
    row.expected_aut = "Hol(Z" + std::to_string(q) + ")";
    row.expected_inn = "D" + std::to_string(half);
    row.expected_trans = "Z" + std::to_string(half);
    row.presentation = knotq::two_bridge(1, q, 2);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> torus_rows() {
  auto make = [](std::string label, int p, int q, const char* orient, int n,
                 int size, std::string aut, std::string inn,
                 std::string trans) {
    TableRow row;
    row.label = std::move(label);
    row.expected_size = size;
    row.expected_aut = std::move(aut);
    row.expected_inn = std::move(inn);
    row.expected_trans = std::move(trans);
    std::vector<knotq::StrandOrientation> flags;
    for (const char* c = orient; *c; ++c) {
      flags.push_back(*c == '+' ? knotq::StrandOrientation::forward
                                : knotq::StrandOrientation::reversed);
    }
    row.presentation = knotq::torus(p, q, flags, n);
    return row;
  };
  return {
      make("Q3 torus(2,3)", 2, 3, "+", 3, 4, "A4", "A4", "Z2 x Z2"),
      make("Q4 torus(2,3)", 2, 3, "+", 4, 6, "S4", "S4", "A4"),
      make("Q5 torus(2,3)", 2, 3, "+", 5, 12, "A5", "A5", "A5"),
      make("Q3 torus(2,4)", 2, 4, "++", 3, 8, "S4", "A4", "A4"),
      make("Q3 torus(2,4,+-)", 2, 4, "+-", 3, 8, "Z2 x A4", "A4", "Z2 x Z2"),
      make("Q3 torus(2,5)", 2, 5, "+", 3, 20, "S5", "A5", "A5"),
      make("Q2 torus(3,3)", 3, 3, "+++", 2, 6, "Z2 x S4", "Z2 x Z2",
           "Z2 x Z2"),
      make("Q2 torus(3,4)", 3, 4, "+", 2, 12, "Z2 x S4", "A4", "A4"),
      make("Q2 torus(3,5)", 3, 5, "+", 2, 30, "Z2 x S5", "A5", "A5"),
  };
}

std::vector<TableRow> axis_rows(int q_lo, int q_hi) {
  std::vector<TableRow> rows;
  for (int q = std::max(q_lo, 2); q <= q_hi; ++q) {
    TableRow row;
    row.label = "Q2 torus-axis q=" + std::to_string(q);
    row.expected_size = 2 + 2 * q;
    if (q >= 3) {
      row.expected_aut = "Z2 x Hol(Z" + std::to_string(2 * q) + ")";
      row.expected_inn = "D" + std::to_string(2 * q / std::gcd(2, q));
      row.expected_trans = "D" + std::to_string(q);
    }
    row.presentation = knotq::torus_with_axis(q);
    rows.push_back(std::move(row));
  }
  TableRow b_row;
  b_row.label = "Q2 trefoil-axis-b";
  b_row.expected_size = 18;
  b_row.expected_aut = "Z2 x Z2 x S4";
  b_row.expected_inn = "S4";
  b_row.expected_trans = "S4";
  b_row.presentation = knotq::named_link("trefoil-axis-b");
  rows.push_back(std::move(b_row));
  return rows;
}

RowResult check_order_only_row(const TableRow& row, int cap) {
  RowResult result;
  const knotq::CayleyTable table = knotq::enumerate(row.presentation, cap);
  result.cells.push_back(std::to_string(table.size));
  result.cells.insert(result.cells.end(), {"-", "-", "-"});
  if (table.size != row.expected_size) {
    result.ok = false;
    result.mismatches.push_back(row.label + " / order: computed " +
                                std::to_string(table.size) + ", expected " +
                                std::to_string(row.expected_size));
  }
  return result;
}

std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    throw knotq::ParseError("expected a range like 3..15");
  }
  try {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw knotq::ParseError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw knotq::ParseError("bad range '" + text + "'");
  }
}

int run_tables(const std::string& selector, const std::string& q_range,
               int cap, const std::string& tsv_path) {
  std::vector<std::pair<std::string, std::vector<TableRow>>> sections;
  std::vector<TableRow> order_only;
  if (selector == "2" || selector == "all") {
    auto range = q_range.empty() ? std::pair<int, int>{3, 15}
                                 : parse_range(q_range);
    sections.push_back({"two-bridge involutory quandles",
                        two_bridge_rows(range.first, range.second)});
  }
  if (selector == "4" || selector == "all") {
    sections.push_back({"torus link n-quandles", torus_rows()});
  }
  if (selector == "5" || selector == "all") {
    auto range = q_range.empty() ? std::pair<int, int>{2, 8}
                                 : parse_range(q_range);
    sections.push_back({"torus links with axis",
                        axis_rows(range.first, range.second)});
  }
  if (sections.empty()) {
    throw knotq::ParseError("selector must be one of 2, 4, 5, all");
  }

  std::ostringstream tsv;
  tsv << "section\trow\torder\tAut\tInn\tTrans\tstatus\n";
  bool all_ok = true;
  std::vector<std::string> mismatches;
  for (const auto& [title, rows] : sections) {
    std::cout << "== " << title << " ==\n";
    for (const TableRow& row : rows) {
      const RowResult result = row.expected_aut.empty()
                                   ? check_order_only_row(row, cap)
                                   : check_row(row, cap);
      all_ok = all_ok && result.ok;
      mismatches.insert(mismatches.end(), result.mismatches.begin(),
                        result.mismatches.end());
      std::cout << "  " << row.label << ": order " << result.cells[0]
                << ", Aut " << result.cells[1] << ", Inn " << result.cells[2]
                << ", Trans " << result.cells[3] << " ["
                << (result.ok ? "ok" : "MISMATCH") << "]\n";
      tsv << title << '\t' << row.label;
      for (const std::string& cell : result.cells) tsv << '\t' << cell;
      tsv << '\t' << (result.ok ? "ok" : "mismatch") << '\n';
    }
  }
  if (tsv_path.empty()) {
    std::cout << "\n" << tsv.str();
  } else {
    std::ofstream out(tsv_path);
    if (!out) throw knotq::ParseError("cannot write '" + tsv_path + "'");
    out << tsv.str();
  }
  if (!all_ok) {
    std::cerr << "mismatches:\n";
    for (const std::string& m : mismatches) std::cerr << "  " << m << "\n";
    return kExitMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite n-quandles of two-bridge and torus links"};
  app.require_subcommand(1);

  CommonArgs enum_args;
  CLI::App* cmd_enum = app.add_subcommand(
      "enumerate", "enumerate a quandle and print its size");
  add_common(cmd_enum, enum_args);

  CommonArgs analyze_args;
  CLI::App* cmd_analyze = app.add_subcommand(
      "analyze", "enumerate plus automorphism group report");
  add_common(cmd_analyze, analyze_args);

  std::string selector;
  std::string q_range;
  std::string tsv_path;
  int tables_cap = default_cap();
  CLI::App* cmd_tables = app.add_subcommand(
      "reproduce-tables",
      "recompute the bundled reference tables and diff every cell");
  cmd_tables->add_option("selector", selector, "2, 4, 5 or all")->required();
  cmd_tables->add_option("--q", q_range,
                         "range for parametrized rows, e.g. 3..15");
  cmd_tables->add_option("--cap", tables_cap, "vertex budget");
  cmd_tables->add_option("--tsv", tsv_path,
                         "write the machine-readable table here instead of "
                         "stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (cmd_enum->parsed()) return run_enumerate(enum_args);
    if (cmd_analyze->parsed()) return run_analyze(analyze_args);
    return run_tables(selector, q_range, tables_cap, tsv_path);
  } catch (const knotq::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (reached " << e.count() << ")\n";
    return kExitCap;
  } catch (const knotq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const knotq::InvalidPresentation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const knotq::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
