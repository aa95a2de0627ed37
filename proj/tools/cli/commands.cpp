#include "commands.hpp"

#include "bicount/bounds.hpp"
#include "bicount/dirichlet.hpp"
#include "bicount/enumeration.hpp"
#include "bicount/exact.hpp"
#include "bicount/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bicount::cli {

namespace {

constexpr int kDecimalPlaces = 6;

Json decimal_field(const QSqrt2& x, int places = kDecimalPlaces) {
  Json j = Json::object();
  j["exact"] = to_string(x);
  j["decimal"] = decimal_render(x, places);
  j["places"] = places;
  return j;
}

void flatten(const Json& value, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) flatten(v, prefix.empty() ? key : prefix + "." + key, out);
  } else if (value.is_string()) {
    out.emplace_back(prefix, value.get<std::string>());
  } else if (value.is_null()) {
    out.emplace_back(prefix, "");
  } else {
    out.emplace_back(prefix, value.dump());
  }
}

std::string tsv_field(std::string text) {
  std::replace_if(text.begin(), text.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return text;
}

std::string join_row(const std::vector<std::string>& fields, Format format) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += format == Format::csv ? ',' : '\t';
    line += format == Format::csv ? csv_field(fields[i]) : tsv_field(fields[i]);
  }
  return line + "\n";
}

// --------------------------------------------------------------- commands

struct Globals {
  Format format = Format::json;
  std::uint64_t seed = 0;
  EnumerationLimits limits;
};

OutputRecord cmd_count(std::uint32_t p, std::uint32_t q, const std::string& oracle, const Globals& g, bool& agree) {
  OutputRecord rec{"count"};
  rec.parameters["p"] = p;
  rec.parameters["q"] = q;
  if (!oracle.empty()) rec.parameters["oracle"] = oracle;

  const BigInt value = count_exact(p, q, g.limits);
  rec.results["count"] = to_string(value);
  agree = true;
  if (!oracle.empty()) {
    const BigInt check = oracle == "naive" ? count_naive(p, q, g.limits) : orbit_census(p, q, g.limits).orbit_count;
    agree = check == value;
    rec.results["oracle_count"] = to_string(check);
    rec.results["agreement"] = agree;
  }
  return rec;
}

OutputRecord cmd_bound(std::uint32_t p, std::uint32_t q, const Globals& g) {
  OutputRecord rec{"bound"};
  rec.parameters["p"] = p;
  rec.parameters["q"] = q;
  const auto rep = bound_report(p, q, g.limits);
  rec.results["theorem_bound"] = decimal_field(rep.theorem_bound);
  rec.results["ao_lower"] = to_string(rep.ao_lower);
  rec.results["ao_upper"] = to_string(rep.ao_upper);
  rec.results["exact"] = rep.exact ? Json(to_string(*rep.exact)) : Json(nullptr);
  auto flag = [](std::optional<bool> v) { return v ? Json(*v) : Json(nullptr); };
  rec.results["ao_lower_holds"] = flag(rep.ao_lower_holds());
  rec.results["ao_upper_holds"] = flag(rep.ao_upper_holds());
  rec.results["theorem_holds"] = flag(rep.theorem_holds());
  rec.results["sandwich_holds"] = flag(rep.sandwich_holds());
  return rec;
}

struct TableArgs {
  std::uint32_t p_min = 3, p_max = 48, p_step = 3;
  std::uint32_t k_min = 0, k_max = 4;
  int places = kDecimalPlaces;
};

std::vector<RatioCell> table_cells(const TableArgs& a) {
  if (a.p_min < 1 || a.p_step < 1 || a.p_min > a.p_max || a.k_min > a.k_max) {
    throw std::invalid_argument("table: empty or invalid grid");
  }
  std::vector<std::uint32_t> ps, ks;
  for (std::uint32_t p = a.p_min; p <= a.p_max; p += a.p_step) ps.push_back(p);
  for (std::uint32_t k = a.k_min; k <= a.k_max; ++k) ks.push_back(k);
  return ratio_table(ps, ks, a.places);
}

OutputRecord table_record(const TableArgs& a, const std::vector<RatioCell>& cells) {
  OutputRecord rec{"table"};
  rec.parameters["p_min"] = a.p_min;
  rec.parameters["p_max"] = a.p_max;
  rec.parameters["p_step"] = a.p_step;
  rec.parameters["k_min"] = a.k_min;
  rec.parameters["k_max"] = a.k_max;
  rec.parameters["places"] = a.places;
  Json rows = Json::array();
  for (const auto& c : cells) {
    Json cell = Json::object();
    cell["p"] = c.p;
    cell["k"] = c.k;
    cell["ratio"] = c.decimal;
    cell["places"] = a.places;
    cell["exact"] = to_string(c.ratio);
    rows.push_back(cell);
  }
  rec.results["cells"] = rows;
  return rec;
}

Grid table_grid(const TableArgs& a, const std::vector<RatioCell>& cells) {
  Grid grid;
  for (std::uint32_t k = a.k_min; k <= a.k_max; ++k) grid.column_labels.push_back("k=" + std::to_string(k));
  for (const auto& c : cells) {
    if (grid.row_labels.empty() || grid.row_labels.back() != "p=" + std::to_string(c.p)) {
      grid.row_labels.push_back("p=" + std::to_string(c.p));
      grid.cells.emplace_back();
    }
    grid.cells.back().push_back(c.decimal);
  }
  return grid;
}

OutputRecord cmd_orbits(std::uint32_t p, std::uint32_t q, const Globals& g) {
  OutputRecord rec{"orbits"};
  rec.parameters["p"] = p;
  rec.parameters["q"] = q;
  const auto lower = free_fraction_lower_bound(p, q, g.limits);
  if (static_cast<std::uint64_t>(p) * q > std::min(g.limits.max_pq, EnumerationLimits::kHardMaxPq)) {
    rec.results["census_skipped"] = true;
    rec.results["lower_bound"] = to_string(lower);
    return rec;
  }
  const auto census = orbit_census(p, q, g.limits);
  rec.results["census_skipped"] = false;
  rec.results["orbit_count"] = to_string(census.orbit_count);
  rec.results["free_elements"] = to_string(census.free_element_count);
  rec.results["free_orbits"] = to_string(census.free_orbit_count);
  rec.results["total"] = to_string(census.total);
  rec.results["free_fraction"] = to_string(make_rational(census.free_element_count, census.total));
  rec.results["lower_bound"] = to_string(lower);
  Json sizes = Json::object();
  for (const auto& [size, n] : census.orbit_sizes) sizes[std::to_string(size)] = n;
  rec.results["orbit_sizes"] = sizes;
  return rec;
}

OutputRecord cmd_char(std::uint32_t p, const std::string& z_text, std::optional<std::uint32_t> q,
                      const std::string& zq_text) {
  OutputRecord rec{"char"};
  const QSqrt2 z = parse_qsqrt2(z_text);
  const CyclicCharacter chi(p, z);
  rec.parameters["p"] = p;
  rec.parameters["z"] = to_string(z);
  Json values = Json::array();
  for (const auto& v : class_function_table(chi).values) values.push_back(to_string(v));
  rec.results["cycle_values"] = values;
  rec.results["average"] = decimal_field(avg_char(chi));
  if (q) {
    const QSqrt2 w = parse_qsqrt2(zq_text);
    const CyclicCharacter chi2(*q, w);
    rec.parameters["q"] = *q;
    rec.parameters["zq"] = to_string(w);
    rec.results["twisted_product"] = decimal_field(twisted_product(chi, chi2));
  }
  return rec;
}

OutputRecord cmd_verify(Suite suite, const std::string& perturb, const Globals& g, bool& passed) {
  OutputRecord rec{"verify"};
  rec.parameters["suite"] = std::string(suite_name(suite));
  rec.parameters["seed"] = g.seed;

  std::unique_ptr<StirlingTable> perturbed;
  VerifyOptions opt;
  opt.seed = g.seed;
  opt.limits = g.limits;
  if (!perturb.empty()) {
    const auto colon = perturb.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--perturb-stirling expects n:k");
    const auto n = static_cast<std::uint32_t>(std::stoul(perturb.substr(0, colon)));
    const auto k = static_cast<std::uint32_t>(std::stoul(perturb.substr(colon + 1)));
    perturbed = stirling_table().with_override(n, k, stirling_first(n, k) + 1);
    opt.stirling = perturbed.get();
    rec.parameters["perturb_stirling"] = perturb;
  }

  const auto results = run_suite(suite, opt);
  passed = std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
  Json props = Json::array();
  for (const auto& r : results) {
    Json j = Json::object();
    j["suite"] = r.suite;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    props.push_back(j);
  }
  rec.results["passed"] = passed;
  rec.results["properties"] = props;
  return rec;
}

std::string render_verify(const OutputRecord& rec, Format format) {
  if (format == Format::json) return render(rec, format);
  std::string text;
  if (format == Format::plain) {
    for (const auto& p : rec.results["properties"]) {
      text += std::string(p["passed"].get<bool>() ? "PASS " : "FAIL ") + p["suite"].get<std::string>() + ": " +
              p["name"].get<std::string>();
      if (!p["detail"].get<std::string>().empty()) text += " (" + p["detail"].get<std::string>() + ")";
      text += "\n";
    }
    text += rec.results["passed"].get<bool>() ? "all properties hold\n" : "some properties FAILED\n";
    return text;
  }
  text = join_row({"suite", "name", "passed", "detail"}, format);
  for (const auto& p : rec.results["properties"]) {
    text += join_row({p["suite"].get<std::string>(), p["name"].get<std::string>(),
                      p["passed"].get<bool>() ? "true" : "false", p["detail"].get<std::string>()},
                     format);
  }
  return text;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "tsv") return Format::tsv;
  if (name == "plain") return Format::plain;
  return std::nullopt;
}

Json OutputRecord::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["parameters"] = parameters;
  j["results"] = results;
  return j;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render(const OutputRecord& record, Format format) {
  if (format == Format::json) return record.to_json().dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("command", record.command);
  flatten(record.parameters, "", fields);
  flatten(record.results, "", fields);
  std::string text;
  if (format == Format::plain) {
    for (const auto& [k, v] : fields) text += k + ": " + v + "\n";
    return text;
  }
  text = join_row({"field", "value"}, format);
  for (const auto& [k, v] : fields) text += join_row({k, v}, format);
  return text;
}

std::string render_grid(const Grid& grid, Format format) {
  std::string text;
  if (format == Format::csv || format == Format::tsv) {
    std::vector<std::string> header{""};
    header.insert(header.end(), grid.column_labels.begin(), grid.column_labels.end());
    text += join_row(header, format);
    for (std::size_t r = 0; r < grid.row_labels.size(); ++r) {
      std::vector<std::string> row{grid.row_labels[r]};
      row.insert(row.end(), grid.cells[r].begin(), grid.cells[r].end());
      text += join_row(row, format);
    }
    return text;
  }
  std::size_t label_width = 0, cell_width = 0;
  for (const auto& l : grid.row_labels) label_width = std::max(label_width, l.size());
  for (const auto& l : grid.column_labels) cell_width = std::max(cell_width, l.size());
  for (const auto& row : grid.cells) {
    for (const auto& c : row) cell_width = std::max(cell_width, c.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  text += std::string(label_width, ' ');
  for (const auto& l : grid.column_labels) text += "  " + pad(l, cell_width);
  text += "\n";
  for (std::size_t r = 0; r < grid.row_labels.size(); ++r) {
    text += pad(grid.row_labels[r], label_width);
    for (const auto& c : grid.cells[r]) text += "  " + pad(c, cell_width);
    text += "\n";
  }
  return text;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts unlabelled bicolored graphs and checks bounds on the count.", "bicount"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "tsv", "plain"}))
      ->capture_default_str();
  app.add_option("--max-pq", g.limits.max_pq, "Orbit census cap on p*q")
      ->check(CLI::Range(0u, EnumerationLimits::kHardMaxPq))
      ->capture_default_str();
  app.add_option("--max-degree", g.limits.max_degree, "Cap on p and q for exact counting")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized property checks")->capture_default_str();
  app.add_option("--threads", g.limits.threads, "Worker threads, 0 for all cores")->capture_default_str();

  std::uint32_t p = 0, q = 0;
  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("p", p, "Red vertices")->required();
    sub->add_option("q", q, "Blue vertices")->required();
  };

  auto* count = app.add_subcommand("count", "Exact number of unlabelled bicolored graphs");
  add_pq(count);
  std::string oracle;
  count->add_option("--oracle", oracle, "Cross-check against a brute-force method")
      ->check(CLI::IsMember({"naive", "census"}));

  auto* bound = app.add_subcommand("bound", "Character bound, Atmaca-Oruc bounds and the exact count");
  add_pq(bound);

  auto* table = app.add_subcommand("table", "Ratio of the Atmaca-Oruc upper bound to the character bound");
  TableArgs targs;
  table->add_option("--p-min", targs.p_min)->capture_default_str();
  table->add_option("--p-max", targs.p_max)->capture_default_str();
  table->add_option("--p-step", targs.p_step)->capture_default_str();
  table->add_option("--k-min", targs.k_min)->capture_default_str();
  table->add_option("--k-max", targs.k_max)->capture_default_str();
  table->add_option("--places", targs.places)->check(CLI::Range(1, 50))->capture_default_str();

  auto* orbits = app.add_subcommand("orbits", "Orbit census and free-orbit fraction");
  add_pq(orbits);

  auto* chr = app.add_subcommand("char", "Cyclic character values, average and twisted product");
  std::string z_text, zq_text;
  std::optional<std::uint32_t> char_q;
  chr->add_option("p", p, "Degree")->required();
  chr->add_option("z", z_text, "Value on a transposition, e.g. 1/2 or 1+sqrt2")->required();
  auto* q_opt = chr->add_option("--q", char_q, "Degree of the second character");
  chr->add_option("--zq", zq_text, "Base of the second character")->needs(q_opt);
  q_opt->needs(chr->get_option("--zq"));

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  std::string suite_text = "all";
  verify->add_option("--suite", suite_text)
      ->check(CLI::IsMember({"all", "characters", "cycleform", "bounds", "asymptotics"}))
      ->capture_default_str();
  std::string perturb;
  verify->add_option("--perturb-stirling", perturb)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  g.format = *parse_format(format_name);

  try {
    std::string text;
    int status = 0;
    if (count->parsed()) {
      bool agree = true;
      text = render(cmd_count(p, q, oracle, g, agree), g.format);
      status = agree ? 0 : 1;
    } else if (bound->parsed()) {
      text = render(cmd_bound(p, q, g), g.format);
    } else if (table->parsed()) {
      const auto cells = table_cells(targs);
      text = g.format == Format::json ? render(table_record(targs, cells), g.format)
                                      : render_grid(table_grid(targs, cells), g.format);
    } else if (orbits->parsed()) {
      text = render(cmd_orbits(p, q, g), g.format);
    } else if (chr->parsed()) {
      text = render(cmd_char(p, z_text, char_q, zq_text), g.format);
    } else if (verify->parsed()) {
      bool passed = false;
      text = render_verify(cmd_verify(*parse_suite(suite_text), perturb, g, passed), g.format);
      status = passed ? 0 : 1;
    }
    out << text;
    return status;
  } catch (const ResourceCapExceeded& e) {
    err << "bicount: resource cap exceeded: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "bicount: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace bicount::cli
