#include "hurwitz/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/monodromy.hpp"

#ifndef HURWITZ_VERSION
#define HURWITZ_VERSION "0.0.0"
#endif

namespace hurwitz::cli {

using Json = nlohmann::ordered_json;

const char* version() { return HURWITZ_VERSION; }

IntRange parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad range '" + text + "': expected n or a..b");
    }
    return std::stoi(s);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  const IntRange r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (r.first > r.last) throw UsageError("empty range '" + text + "'");
  return r;
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Monodromy enumeration and slope computation for simply branched covers of an elliptic curve",
               "hurwitz-slope"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  RunConfig config;
  std::string d_text;
  std::string g_text;
  std::string format_text = "table";
  int k = 0;
  std::vector<CLI::Option*> k_options;
  std::string dump;
  std::string output;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-d", d_text, "degree n or range a..b")->required();
    sub->add_option("-g", g_text, "genus n or range a..b")->required();
    k_options.push_back(sub->add_option("--k", k, "section intersection number (default 2g-3)"));
    sub->add_option("--genus-x", config.genus_X, "genus of the base curve X (default 1)");
    sub->add_option("--workers", config.workers, "worker threads (default: all)");
    sub->add_option("--budget", config.budget, "inner-loop step budget");
    sub->add_option("--format", format_text, "table | structured | csv")
        ->check(CLI::IsMember({"table", "structured", "csv"}));
    sub->add_option("-o", output, "write results to this file");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "count Cov/~ and its subsets");
  add_common(enumerate);
  enumerate->add_option("--dump", dump, "write the class list to this file");
  CLI::App* slope = app.add_subcommand("slope", "slope, boundary profile, lambda and genus of W");
  add_common(slope);
  slope->add_flag("--closed-form", config.closed_form, "use divisor-sum counts (g = 2, odd d)");
  CLI::App* components = app.add_subcommand("components", "monodromy orbits = components of W(E)");
  add_common(components);
  CLI::App* verify = app.add_subcommand("verify", "run identity and oracle checks");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    throw HelpRequested(parsed.empty() ? app.help() : parsed.front()->help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::CallForVersion&) {
    throw HelpRequested(version());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (enumerate->parsed()) config.command = Command::kEnumerate;
  if (slope->parsed()) config.command = Command::kSlope;
  if (components->parsed()) config.command = Command::kComponents;
  if (verify->parsed()) config.command = Command::kVerify;
  config.d = parse_range(d_text);
  config.g = parse_range(g_text);
  for (const auto* opt : k_options) {
    if (opt->count() > 0) config.k = k;
  }
  if (!dump.empty()) config.dump_path = dump;
  if (!output.empty()) config.output_path = output;
  config.format = format_text == "structured" ? OutputFormat::kStructured
                  : format_text == "csv"      ? OutputFormat::kCsv
                                              : OutputFormat::kTable;
  check_config(config);
  return config;
}

void check_config(const RunConfig& config) {
  if (config.d.first < 2) throw UsageError("d must be >= 2");
  // only enumeration is bounded by the permutation storage
  if (!config.closed_form && config.d.last > kMaxDegree) {
    throw UsageError("d must lie in [2, " + std::to_string(kMaxDegree) + "] unless --closed-form is used");
  }
  if (config.g.first < 2) throw UsageError("g must be >= 2");
  if (config.k && *config.k < 1) throw UsageError("k must be >= 1");
  if (config.genus_X < 0) throw UsageError("genus of X must be >= 0");
  if (config.budget == 0) throw UsageError("budget must be positive");
  if (config.workers < 0) throw UsageError("workers must be >= 0");
  if (config.closed_form) {
    if (config.command != Command::kSlope) throw UsageError("--closed-form only applies to slope");
    if (config.g.first != 2 || config.g.last != 2) throw UsageError("--closed-form requires g = 2");
    // a range steps over its odd members, so only a single even d is rejected
    if (config.d.first == config.d.last && config.d.first % 2 == 0) {
      throw UsageError("--closed-form requires odd d (closed forms exist for odd degree only)");
    }
  }
}

std::string dump_line(int d, int g, const CovClass& cls) {
  std::string s = std::to_string(d) + " " + std::to_string(g) + " " + kind_name(cls.classification.kind);
  if (cls.classification.kind == CovKind::kCov1) s += " " + std::to_string(cls.classification.h);
  return s + " | " + to_string(cls.rep);
}

DumpRecord parse_dump_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  for (std::string f; std::getline(ss, f, '|');) fields.push_back(f);
  if (fields.size() != 4) throw std::invalid_argument("dump line needs 4 '|'-separated fields: " + line);

  DumpRecord r;
  std::istringstream head(fields[0]);
  std::string kind;
  if (!(head >> r.d >> r.g >> kind)) throw std::invalid_argument("bad dump header: " + fields[0]);
  r.classification.kind = parse_kind(kind);
  if (r.classification.kind == CovKind::kCov1 && !(head >> r.classification.h)) {
    throw std::invalid_argument("Cov1 record without h: " + fields[0]);
  }
  std::vector<Permutation> entries{parse_cycles(fields[1], r.d), parse_cycles(fields[2], r.d)};
  const std::string& gammas = fields[3];
  for (std::size_t pos = gammas.find_first_not_of(' '); pos != std::string::npos;
       pos = gammas.find_first_not_of(' ', pos)) {
    const std::size_t end = gammas[pos] == '(' ? gammas.find(')', pos) : gammas.find(' ', pos);
    const std::size_t stop = end == std::string::npos ? gammas.size() : end + (gammas[pos] == '(' ? 1 : 0);
    entries.push_back(parse_cycles(gammas.substr(pos, stop - pos), r.d));
    pos = stop;
  }
  r.tuple = CoverTuple(std::move(entries));
  return r;
}

namespace {

struct PairResult {
  int d = 0;
  int g = 0;
  SlopeReport report;
  std::string provenance;
  std::uint64_t tuple_count = 0;
  std::optional<ComponentReport> components;
  std::optional<BigInt> space_components;
  std::vector<Check> checks;
};

Json optional_big(const std::optional<BigInt>& v) { return v ? Json(v->str()) : Json(nullptr); }

Json to_json(const PairResult& r, Command command) {
  const SlopeReport& s = r.report;
  const bool complete = s.counts_complete;
  Json doc;
  doc["version"] = version();
  doc["command"] = command == Command::kEnumerate    ? "enumerate"
                   : command == Command::kSlope      ? "slope"
                   : command == Command::kComponents ? "components"
                                                     : "verify";
  doc["d"] = r.d;
  doc["g"] = r.g;
  doc["k"] = s.k;
  doc["genus_X"] = s.genus_X;
  doc["N"] = complete ? Json(s.counts.N) : Json(nullptr);
  doc["N0"] = s.counts.N0;
  Json by_h = Json::object();
  for (const auto& [h, n] : s.counts.N1_by_h) by_h[std::to_string(h)] = n;
  doc["N1_by_h"] = by_h;
  doc["N1"] = s.counts.N1;
  doc["N2"] = complete ? Json(s.counts.N2) : Json(nullptr);
  doc["N3"] = s.counts.N3;
  doc["slope"] = s.slope ? Json(to_fraction_string(*s.slope)) : Json(nullptr);
  doc["delta0"] = to_fraction_string(s.intersections.delta0);
  Json profile = Json::object();
  for (const auto& [i, v] : s.delta_profile) profile[std::to_string(i)] = to_fraction_string(v);
  doc["delta_profile"] = profile;
  doc["delta_total"] = to_fraction_string(s.intersections.delta_total);
  doc["lambda"] = to_fraction_string(s.intersections.lambda);
  doc["genus_W"] = optional_big(s.genus_W);
  Json comps = Json::array();
  if (r.components) {
    for (std::size_t i = 0; i < r.components->components.size(); ++i) {
      const auto& c = r.components->components[i];
      Json jc;
      jc["id"] = i;
      jc["size"] = c.class_indices.size();
      jc["N0"] = c.counts.N0;
      Json ch = Json::object();
      for (const auto& [h, n] : c.counts.N1_by_h) ch[std::to_string(h)] = n;
      jc["N1_by_h"] = ch;
      jc["N1"] = c.counts.N1;
      jc["N2"] = c.counts.N2;
      jc["N3"] = c.counts.N3;
      jc["slope"] = c.slope ? Json(to_fraction_string(*c.slope)) : Json(nullptr);
      jc["signature"] = to_string(c.signature);
      comps.push_back(jc);
    }
  }
  doc["components"] = comps;
  if (r.space_components) doc["hurwitz_space_component_count"] = r.space_components->str();
  if (!r.checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["checks"] = checks;
  }
  doc["provenance"] = r.provenance;
  return doc;
}

std::string by_h_string(const std::map<int, std::uint64_t>& by_h) {
  std::string s;
  for (const auto& [h, n] : by_h) {
    if (!s.empty()) s += ";";
    s += std::to_string(h) + ":" + std::to_string(n);
  }
  return s;
}

void write_csv_header(std::ostream& out) {
  out << "command,d,g,k,genus_X,N,N0,N1_by_h,N1,N2,N3,slope,delta0,delta_total,lambda,genus_W,components,provenance\n";
}

void write_csv_row(std::ostream& out, const PairResult& r, Command command) {
  const Json doc = to_json(r, command);
  auto field = [&](const char* name) {
    const Json& v = doc[name];
    if (v.is_null()) return std::string();
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  out << field("command") << ',' << r.d << ',' << r.g << ',' << r.report.k << ',' << r.report.genus_X << ','
      << field("N") << ',' << field("N0") << ',' << by_h_string(r.report.counts.N1_by_h) << ',' << field("N1") << ','
      << field("N2") << ',' << field("N3") << ',' << field("slope") << ',' << field("delta0") << ','
      << field("delta_total") << ',' << field("lambda") << ',' << field("genus_W") << ','
      << (r.components ? std::to_string(r.components->components.size()) : std::string()) << ',' << r.provenance
      << '\n';
}

std::string human(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return to_fraction_string(r) + " (~" + to_decimal_string(r) + ")";
}

void write_table(std::ostream& out, const PairResult& r, Command command, bool first) {
  const SlopeReport& s = r.report;
  const ClassCounts& c = s.counts;
  if (command == Command::kEnumerate) {
    if (first) out << "   d   g          N         N0         N1         N2         N3   N1_by_h          |Cov|\n";
    char line[256];
    std::snprintf(line, sizeof line, "%4d%4d%11llu%11llu%11llu%11llu%11llu   %-14s %llu\n", r.d, r.g,
                  static_cast<unsigned long long>(c.N), static_cast<unsigned long long>(c.N0),
                  static_cast<unsigned long long>(c.N1), static_cast<unsigned long long>(c.N2),
                  static_cast<unsigned long long>(c.N3), by_h_string(c.N1_by_h).c_str(),
                  static_cast<unsigned long long>(r.tuple_count));
    out << line;
    return;
  }
  out << "== d=" << r.d << " g=" << r.g << " k=" << s.k << " genus(X)=" << s.genus_X << " [" << r.provenance << "]\n";
  out << "  N=" << (s.counts_complete ? std::to_string(c.N) : std::string("?")) << " N0=" << c.N0 << " N1=" << c.N1
      << " (" << by_h_string(c.N1_by_h) << ") N2=" << (s.counts_complete ? std::to_string(c.N2) : std::string("?"))
      << " N3=" << c.N3 << "\n";
  if (command == Command::kSlope || command == Command::kComponents) {
    out << "  slope    " << (s.slope ? human(*s.slope) : std::string("undefined")) << "\n";
    out << "  delta    " << human(s.intersections.delta_total) << "  (delta0 " << human(s.intersections.delta0)
        << ", higher " << human(s.intersections.delta_higher) << ")\n";
    out << "  profile ";
    for (const auto& [i, v] : s.delta_profile) out << " delta" << i << "=" << human(v);
    out << "\n  lambda   " << human(s.intersections.lambda) << "\n";
    out << "  genus(W) " << (s.genus_W ? s.genus_W->str() : std::string("? (N unknown)")) << "\n";
    if (!s.counts_complete && s.g == 2) {
      out << "  genus(W) closed form 1 + (9/8)(s3 - 2d s1 + s1) = " << genus_W_d2_closed(r.d)
          << "; with the printed coefficient 8/9 it would be " << human(genus_W_d2_printed(r.d)) << "\n";
    }
  }
  if (r.components) {
    out << "  components: " << r.components->components.size() << " (generators " << r.components->generator_count
        << ")\n";
    out << "     id   size     N0     N1     N2     N3  slope          signature\n";
    for (std::size_t i = 0; i < r.components->components.size(); ++i) {
      const auto& comp = r.components->components[i];
      char line[160];
      std::snprintf(line, sizeof line, "  %5zu %6zu %6llu %6llu %6llu %6llu  %-14s ", i, comp.class_indices.size(),
                    static_cast<unsigned long long>(comp.counts.N0), static_cast<unsigned long long>(comp.counts.N1),
                    static_cast<unsigned long long>(comp.counts.N2), static_cast<unsigned long long>(comp.counts.N3),
                    comp.slope ? to_fraction_string(*comp.slope).c_str() : "undefined");
      const std::string sig = to_string(comp.signature);
      out << line << sig.substr(0, sig.find(':')) << "\n";
    }
    if (!r.components->slopes_equal) out << "  note: per-component slopes differ\n";
    if (r.space_components) {
      const auto n = r.components->components.size();
      out << "  Hurwitz space component count (odd d, g=2): " << *r.space_components << "; W(E) has " << n
          << (BigInt(n) >= *r.space_components ? " >= " : " < ") << *r.space_components << "\n";
    }
  }
  for (const auto& check : r.checks) {
    out << "  " << (check.pass ? "PASS" : "FAIL") << "  " << check.name;
    if (!check.detail.empty()) out << "  [" << check.detail << "]";
    out << "\n";
  }
}

PairResult compute_pair(const RunConfig& config, int d, int g) {
  PairResult r;
  r.d = d;
  r.g = g;
  const int k = config.k.value_or(wE_section_intersections(g));
  if (config.closed_form) {
    r.report = make_closed_slope_report(d, k, config.genus_X);
    r.provenance = "closedform";
    return r;
  }
  const ClassSet set = enumerate_classes(d, g, {config.budget, config.workers});
  r.provenance = "bruteforce";
  r.tuple_count = set.tuple_count;
  r.report = make_slope_report(set, k, config.genus_X);
  if (config.dump_path) {
    std::ofstream dump(*config.dump_path, std::ios::app);
    if (!dump) throw std::runtime_error("cannot open dump file " + *config.dump_path);
    for (const auto& cls : set.classes) dump << dump_line(d, g, cls) << "\n";
  }
  if (config.command == Command::kComponents) {
    r.components = components(set);
    if (g == 2 && d % 2 == 1) r.space_components = hurwitz_space_component_count(d);
  }
  if (config.command == Command::kVerify) r.checks = verification_checks(set, k, config.genus_X);
  return r;
}

}  // namespace

std::vector<Check> count_checks(const ClassCounts& c, int k) {
  std::vector<Check> out;
  std::uint64_t by_h = 0;
  for (const auto& [h, n] : c.N1_by_h) by_h += n;
  out.push_back({"N1 = sum_h N1(h)", by_h == c.N1, std::to_string(c.N1) + " vs " + std::to_string(by_h)});
  if (c.g == 2) {
    const BigInt lhs = 5 * BigInt(c.N3);
    const BigInt rhs = 27 * BigInt(c.N1) - 9 * BigInt(c.N0);
    out.push_back({"5N3 = 27N1 - 9N0", verify_relation_identity(c), lhs.str() + " vs " + rhs.str()});
    const auto in = intersection_numbers(c, k);
    out.push_back({"lambda = delta0/10 + delta1/5", verify_g2_hodge_relation(c, k),
                   to_fraction_string(in.lambda) + " vs " + to_fraction_string(in.delta0 / 10 + in.delta_higher / 5)});
  }
  try {
    const Rational s = slope_from_counts(c);
    const auto in = intersection_numbers(c, k);
    out.push_back({"slope * lambda = delta", s * in.lambda == in.delta_total, to_fraction_string(s)});
    if (c.g == 2 && c.N0 + 2 * c.N1 > 0) {
      out.push_back({"slope = 10(N0+N1)/(N0+2N1)", s == slope_g2_reduced(c), to_fraction_string(slope_g2_reduced(c))});
    }
  } catch (const std::domain_error& e) {
    out.push_back({"slope defined", false, e.what()});
  }
  return out;
}

std::vector<Check> verification_checks(const ClassSet& set, int k, int genus_X) {
  const ClassCounts& c = set.counts;
  const int d = set.d;
  std::vector<Check> out;
  out.push_back({"N = N0 + N1 + N2 + N3", c.N == c.N0 + c.N1 + c.N2 + c.N3,
                 std::to_string(c.N) + " classes"});
  for (auto& check : count_checks(c, k)) out.push_back(std::move(check));

  BigInt factorial = 1;
  for (int i = 2; i <= d; ++i) factorial *= i;
  BigInt orbit_total = 0;
  bool divides = true;
  for (const auto& cls : set.classes) {
    divides = divides && factorial % cls.stabilizer_order == 0;
    orbit_total += factorial / cls.stabilizer_order;
  }
  out.push_back({"|Cov| = sum d!/|Stab|", divides && orbit_total == BigInt(set.tuple_count),
                 std::to_string(set.tuple_count) + " tuples"});

  const auto profile = boundary_profile(set.classes, set.g, k);
  Rational higher = 0;
  for (const auto& [i, v] : profile) {
    if (i > 0) higher += v;
  }
  const auto in = intersection_numbers(c, k);
  out.push_back({"boundary profile matches W.delta0 and W.(delta1+...)",
                 profile.at(0) == in.delta0 && higher == in.delta_higher,
                 to_fraction_string(profile.at(0)) + ", " + to_fraction_string(higher)});

  out.push_back({"sigma convolution identity at d", verify_sigma_convolution_identity(d), "d=" + std::to_string(d)});

  const BigInt g_w = genus_W(BigInt(c.N), BigInt(c.N3), genus_X, k);
  const BigInt g_rh = genus_from_ramification(ramification_profile(set.classes), genus_X, k);
  out.push_back({"genus(W) = Riemann-Hurwitz over triple points", g_w == g_rh, g_w.str() + " vs " + g_rh.str()});

  if (set.g == 2 && d % 2 == 1) {
    const ClosedCounts closed = closed_counts_g2_odd(d);
    bool by_h_ok = true;
    for (const auto& [h, n] : closed.N1_by_h) by_h_ok = by_h_ok && BigInt(c.N1_by_h.at(h)) == n;
    out.push_back({"closed forms N0, N1(h), N3 match enumeration",
                   BigInt(c.N0) == closed.N0 && by_h_ok && BigInt(c.N3) == closed.N3,
                   closed.N0.str() + "/" + closed.N1.str() + "/" + closed.N3.str()});
    if (genus_X == 1 && k == 1) {
      const BigInt closed_genus = genus_W_d2_closed(d);
      out.push_back({"genus(W) = 1 + N3 = closed form with 9/8", g_w == 1 + BigInt(c.N3) && g_w == closed_genus,
                     closed_genus.str() + "; printed 8/9 coefficient gives " +
                         to_fraction_string(genus_W_d2_printed(d))});
    }
  }

  try {
    const ComponentReport comps = components(set);
    out.push_back({"monodromy images stay in Cov/~", true,
                   std::to_string(comps.components.size()) + " component(s)"});
    out.push_back({"subgroup signature constant on components", comps.signatures_constant, ""});
    if (set.g == 2 && d % 2 == 1) {
      const BigInt expected = hurwitz_space_component_count(d);
      out.push_back({"components of W(E) >= Hurwitz space components", BigInt(comps.components.size()) >= expected,
                     std::to_string(comps.components.size()) + " >= " + expected.str()});
    }
  } catch (const InconsistencyError& e) {
    out.push_back({"monodromy images stay in Cov/~", false, e.what()});
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output_path) {
    file.open(*config.output_path);
    if (!file) {
      err << "cannot open " << *config.output_path << "\n";
      return kExitUsage;
    }
    sink = &file;
  }
  if (config.dump_path) std::ofstream(*config.dump_path, std::ios::trunc);

  int status = kExitOk;
  bool first = true;
  if (config.format == OutputFormat::kCsv) write_csv_header(*sink);
  try {
    for (int d = config.d.first; d <= config.d.last; ++d) {
      if (config.closed_form && d % 2 == 0) continue;
      for (int g = config.g.first; g <= config.g.last; ++g) {
        const PairResult r = compute_pair(config, d, g);
        switch (config.format) {
          case OutputFormat::kStructured: *sink << to_json(r, config.command).dump() << "\n"; break;
          case OutputFormat::kCsv: write_csv_row(*sink, r, config.command); break;
          case OutputFormat::kTable: write_table(*sink, r, config.command, first); break;
        }
        sink->flush();
        first = false;
        for (const auto& c : r.checks) {
          if (!c.pass && status == kExitOk) {
            err << "verification failed at d=" << d << " g=" << g << ": " << c.name << " [" << c.detail << "]\n";
            status = kExitVerifyFailed;
          }
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (raise --budget)\n";
    return kExitBudget;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const HelpRequested& e) {
    out << e.what() << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace hurwitz::cli
