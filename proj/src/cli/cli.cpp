#include "hyperarea/cli.hpp"

#include "hyperarea/errors.hpp"
#include "hyperarea/geometry/bodies.hpp"
#include "hyperarea/geometry/body_io.hpp"
#include "hyperarea/geometry/polytope.hpp"
#include "hyperarea/parallel.hpp"
#include "hyperarea/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <memory>
#include <sstream>

namespace hyperarea::cli {

namespace {

using geometry::Vec;

struct Options {
  std::string format = "pretty";
  std::string output;
  std::uint64_t seed = 7;
  int threads = 0;
  std::string kind = "pal_firey";

  std::string n_range;
  bool per_n = false;
  std::string quantity = "log_h_n";
  int thresholds = 0;

  std::string suite = "default";
  int samples = 10000;
  int polytopes = 20;

  std::string body;
  std::string body_file;
  std::string from, to;
  int subdivision = 8;

  std::string input;
  std::string input_format = "csv";
};

// Writes to --output when given, else to the command's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ConfigurationError("cannot open output file " + path);
      out_ = file_.get();
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

void emit(const table::Table& t, const Options& o, std::ostream& out) {
  Sink sink(o.output, out);
  table::write(sink.stream(), t, table::parse_format(o.format));
}

int cmd_constants(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ns = parse_n_values(o.n_range.empty() ? "2..10" : o.n_range);
  const auto kind = constants::parse_pal_kind(o.kind);
  emit(constants_table(ns, kind), o, out);
  if (std::find(ns.begin(), ns.end(), 2) != ns.end()) {
    const auto h2 = constants::h_n(2, kind).to_double();
    err << "note: paper_closed_form = " << table::format_number(static_cast<double>(constants::quoted_h2_closed_form()))
        << " is the crossing of I_2 with J_2/2; the pipeline h_2 = " << table::format_number(h2) << "\n";
  }
  return kOk;
}

int cmd_scan_ab(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ns = parse_n_values(o.n_range.empty() ? "2..100000" : o.n_range);
  for (size_t i = 1; i < ns.size(); ++i)
    if (ns[i] != ns[i - 1] + 1) throw ConfigurationError("scan-ab needs a contiguous range a..b");
  const auto kind = constants::parse_pal_kind(o.kind);
  std::vector<double> ratios;
  const bool per_n = o.per_n || ns.size() <= 100;
  const ScanSummary s = scan_ab(ns.front(), ns.back(), kind, per_n ? &ratios : nullptr);
  if (per_n) {
    table::Table t;
    t.name = "scan_ab_rows";
    t.columns = {"n", "ab_ratio", "a_gt_b"};
    for (size_t i = 0; i < ratios.size(); ++i)
      t.add_row({static_cast<std::int64_t>(ns[i]), ratios[i], ratios[i] > 1});
    emit(t, o, out);
    err << "violations: " << s.violations << ", min ratio " << table::format_number(s.min_ratio) << " at n = " << s.argmin
        << "\n";
  } else {
    emit(scan_summary_table(s), o, out);
  }
  return s.violations == 0 ? kOk : kViolation;
}

int cmd_asymptotics(const Options& o, std::ostream& out) {
  const auto kind = constants::parse_pal_kind(o.kind);
  if (o.thresholds > 0) {
    emit(thresholds_table(o.thresholds, kind), o, out);
    return kOk;
  }
  const auto ns = parse_n_values(o.n_range.empty() ? "100,1000,10000" : o.n_range);
  emit(asymptotics_table(ns, asymptotics::parse_quantity(o.quantity), kind), o, out);
  return kOk;
}

int cmd_verify(const Options& o, bool samples_given, bool polytopes_given, std::ostream& out, std::ostream& err) {
  verify::SuiteConfig config;
  if (o.suite == "quick") {
    config.polytopes = 3;
    config.samples = 1000;
    config.crofton_samples = 50000;
  } else if (o.suite != "default") {
    throw ConfigurationError("unknown suite '" + o.suite + "' (default, quick)");
  }
  config.seed = o.seed;
  config.kind = constants::parse_pal_kind(o.kind);
  if (samples_given) config.samples = o.samples;
  if (polytopes_given) config.polytopes = o.polytopes;
  const auto records = verify::run_suite(config);
  emit(verify::records_table(records), o, out);
  const auto s = verify::summarize(records);
  err << "records " << s.records << ": pass " << s.passed << ", fail " << s.failed << ", advisory " << s.advisory
      << ", not_applicable " << s.not_applicable << ", error " << s.errors << ", missing notes " << s.missing_notes << "\n";
  if (s.errors > 0) return kNumerical;
  return s.failed == 0 && s.missing_notes == 0 ? kOk : kViolation;
}

geometry::BodyPtr load_body(const Options& o) {
  if (!o.body.empty() && !o.body_file.empty()) throw ConfigurationError("give --body or --body-file, not both");
  if (!o.body_file.empty()) {
    const auto bodies = geometry::read_body_file(o.body_file);
    if (bodies.size() != 1) throw ConfigurationError("--body-file must hold exactly one body");
    if (const auto* p = dynamic_cast<const geometry::Polytope3*>(bodies.front().get()))
      return std::make_shared<geometry::Polytope3>(p->with_subdivision(o.subdivision));
    return bodies.front();
  }
  if (o.body.empty()) throw ConfigurationError("geodesic needs --body or --body-file");
  return geometry::named_body(o.body, o.subdivision);
}

Vec parse_point(const geometry::ConvexBody& body, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto index = [&](size_t limit) {
    size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(tail, &used);
    } catch (const std::exception&) {
    }
    if (used != tail.size() || k < 0 || static_cast<size_t>(k) >= limit)
      throw ConfigurationError("bad index in point '" + spec + "'");
    return static_cast<size_t>(k);
  };
  if (head == "face-center" || head == "vertex") {
    const auto* p = dynamic_cast<const geometry::Polytope3*>(&body);
    if (!p) throw ConfigurationError(head + " points need a polytope body");
    if (head == "face-center") return p->face_center(static_cast<int>(index(p->faces().size())));
    return Vec(p->vertices()[index(p->vertices().size())]);
  }
  if (head == "cap-center") {
    const auto* c = dynamic_cast<const geometry::CylinderBody*>(&body);
    if (!c || (tail != "top" && tail != "bottom")) throw ConfigurationError("cap-center:top|bottom needs a cylinder body");
    return c->cap_center(tail == "top");
  }
  std::vector<double> xs;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
    }
    if (used == 0 || used != item.size()) throw ConfigurationError("bad point '" + spec + "'");
    xs.push_back(v);
  }
  if (static_cast<int>(xs.size()) != body.ambient_dimension())
    throw ConfigurationError("point '" + spec + "' has the wrong dimension for " + body.id());
  return Eigen::Map<const Vec>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

int cmd_geodesic(const Options& o, std::ostream& out) {
  const auto body = load_body(o);
  const Vec x = parse_point(*body, o.from);
  const Vec y = parse_point(*body, o.to);
  const geometry::Distance d = body->intrinsic_distance(x, y);
  table::Table t;
  t.name = "geodesic";
  t.columns = {"body_id", "from", "to", "subdivision", "distance", "distance_kind", "lower_bound", "euclidean"};
  t.add_row({body->id(), o.from, o.to, static_cast<std::int64_t>(o.subdivision), d.value, std::string(to_string(d.kind)),
             body->intrinsic_distance_lower_refined(x, y), (y - x).norm()});
  emit(t, o, out);
  return kOk;
}

int cmd_export(const Options& o, std::ostream& out) {
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw ConfigurationError("cannot open " + o.input);
    const auto records = verify::records_from_table(table::read(in, table::parse_format(o.input_format)));
    emit(verify::records_table(records), o, out);
    return kOk;
  }
  verify::SuiteConfig config;
  config.seed = o.seed;
  config.polytopes = o.polytopes;
  Sink sink(o.output, out);
  for (const auto& body : verify::suite_bodies(config)) sink.stream() << geometry::format_body(*body);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constants, asymptotics and geometric checks for displacement area bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "csv, json-lines or pretty")->check(CLI::IsMember({"csv", "json-lines", "json_lines", "pretty"}));
  app.add_option("--output", o.output, "write to this file instead of standard output");
  app.add_option("--seed", o.seed, "seed for every stochastic output");
  app.add_option("--threads", o.threads, "worker threads (default: $HYPERAREA_THREADS or 1)")->check(CLI::NonNegativeNumber);
  app.add_option("--kind", o.kind, "pal_firey or bezdek");

  auto* constants_cmd = app.add_subcommand("constants", "table of rho_n, A_n, B_n, C_n, rho_n*, h_n");
  constants_cmd->add_option("--n", o.n_range, "n values: a..b or a comma list (default 2..10)");

  auto* scan = app.add_subcommand("scan-ab", "check A_n > B_n over a range");
  scan->add_option("--n", o.n_range, "range a..b (default 2..100000)");
  scan->add_flag("--per-n", o.per_n, "print every ratio");

  auto* asym = app.add_subcommand("asymptotics", "exact values beside the asymptotic formulas");
  asym->add_option("--quantity", o.quantity, "c_n, rho_star, log_h_n, ab_ratio or bezdek_log_h_n");
  asym->add_option("--n", o.n_range, "n values (default 100,1000,10000)");
  asym->add_option("--thresholds", o.thresholds, "measure the bracket / radius / monotone-terms n0 up to this n");

  auto* ver = app.add_subcommand("verify", "run the inequality suite");
  ver->add_option("--suite", o.suite, "default or quick");
  ver->add_option("--samples", o.samples, "boundary samples per estimator")->check(CLI::PositiveNumber);
  ver->add_option("--polytopes", o.polytopes, "random polytopes")->check(CLI::NonNegativeNumber);

  auto* geo = app.add_subcommand("geodesic", "intrinsic distance between two boundary points");
  geo->add_option("--body", o.body, "named body (cube, tetrahedron, unit_sphere, cylinder_rho20, random:<seed>, ...)");
  geo->add_option("--body-file", o.body_file, "body file with one body");
  geo->add_option("--from", o.from, "face-center:k, vertex:k, cap-center:top|bottom or x,y,z")->required();
  geo->add_option("--to", o.to, "as --from")->required();
  geo->add_option("--subdiv", o.subdivision, "Steiner points per polytope edge")->check(CLI::PositiveNumber);

  auto* exp = app.add_subcommand("export", "write the suite bodies, or convert a records file");
  exp->add_option("--polytopes", o.polytopes, "random polytopes")->check(CLI::NonNegativeNumber);
  exp->add_option("--input", o.input, "records file to convert");
  exp->add_option("--input-format", o.input_format, "csv or json-lines");

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  for (auto* sub : app.get_subcommands())
    if (sub->count("--help")) return kOk;

  try {
    if (o.threads > 0) parallel::set_thread_count(o.threads);
    int code = kOk;
    if (constants_cmd->parsed()) code = cmd_constants(o, out, err);
    else if (scan->parsed()) code = cmd_scan_ab(o, out, err);
    else if (asym->parsed()) code = cmd_asymptotics(o, out);
    else if (ver->parsed()) code = cmd_verify(o, ver->count("--samples") > 0, ver->count("--polytopes") > 0, out, err);
    else if (geo->parsed()) code = cmd_geodesic(o, out);
    else if (exp->parsed()) code = cmd_export(o, out);
    parallel::set_thread_count(0);
    return code;
  } catch (const ConfigurationError& e) {
    parallel::set_thread_count(0);
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    parallel::set_thread_count(0);
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    parallel::set_thread_count(0);
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
}

}  // namespace hyperarea::cli
