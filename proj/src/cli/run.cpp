#include "maschke/cli/run.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "maschke/algebra/int_matrix.hpp"
#include "maschke/cli/report.hpp"
#include "maschke/counting/counting.hpp"
#include "maschke/grouprep/classfunc.hpp"
#include "maschke/hecke/hecke.hpp"
#include "maschke/lefschetz/lefschetz.hpp"
#include "maschke/nslattice/nslattice.hpp"
#include "maschke/tangent/tangent.hpp"

namespace maschke::cli {

namespace {

using nlohmann::json;
using counting::VarietyId;
using lefschetz::Target;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

PrimeRange parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("--primes expects lo..hi, got '" + s + "'");
  PrimeRange r;
  try {
    std::size_t used = 0;
    r.lo = std::stoull(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(s);
    std::string hi = s.substr(dots + 2);
    r.hi = std::stoull(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(s);
  } catch (const std::logic_error&) {
    throw UsageError("--primes expects integers lo..hi, got '" + s + "'");
  }
  if (r.lo <= 5) throw UsageError("--primes: lo must exceed 5");
  if (r.hi < r.lo) throw UsageError("--primes: hi must be at least lo");
  return r;
}

std::vector<VarietyId> parse_varieties(const std::vector<std::string>& names) {
  std::vector<VarietyId> out;
  for (const auto& n : names) {
    auto v = counting::parse_variety(n);
    if (!v) throw UsageError("unknown variety '" + n + "'");
    out.push_back(*v);
  }
  return out;
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("unsupported --format '" + f + "'");
}

// command-line ids of the trace targets and the counts each is computed from
struct TargetInfo {
  Target target;
  const char* id;
  std::vector<VarietyId> inputs;
};

const std::vector<TargetInfo>& target_table() {
  static const std::vector<TargetInfo> t{
      {Target::aW, "aW", {VarietyId::W}},
      {Target::aSbar, "aSbar", {VarietyId::Sbar}},
      {Target::aU, "aU", {VarietyId::U}},
      {Target::bS, "bS", {VarietyId::S, VarietyId::W}},
      {Target::trYhat, "trYhat", {VarietyId::Y}},
      {Target::trXc, "trXc", {VarietyId::X, VarietyId::Y}},
      {Target::trCplus, "trCplus", {VarietyId::Cplus}},
      {Target::trCminus, "trCminus", {VarietyId::Cminus}},
      {Target::trCtilde, "trCtilde", {VarietyId::Ctilde}},
      {Target::trC3, "trC3", {VarietyId::C3}},
      {Target::trCbar, "trCbar", {VarietyId::Cbar}},
      {Target::trC7, "trC7", {VarietyId::C7}},
      {Target::prym, "prym", {VarietyId::Cplus, VarietyId::Ctilde}}};
  return t;
}

const TargetInfo& target_info(Target t) {
  for (const auto& i : target_table())
    if (i.target == t) return i;
  throw std::logic_error("unlisted trace target");
}

Target parse_target(const std::string& s) {
  for (const auto& i : target_table())
    if (s == i.id) return i.target;
  throw UsageError("unknown trace target '" + s + "'");
}

// targets that can be extracted from the given varieties alone
std::vector<Target> targets_for(const std::vector<VarietyId>& ids) {
  std::vector<Target> out;
  for (const auto& i : target_table()) {
    bool has = std::all_of(i.inputs.begin(), i.inputs.end(),
                           [&](VarietyId v) { return std::find(ids.begin(), ids.end(), v) != ids.end(); });
    if (has) out.push_back(i.target);
  }
  return out;
}

struct Options {
  std::string primes;
  std::vector<std::string> varieties;
  std::vector<std::string> targets;
  std::vector<std::string> checks;
  std::vector<int> criteria;
  unsigned workers = 1;
  unsigned k = 1;
  std::uint64_t line_p = 61;
  std::string fixtures, checkpoint, output, kernel = "structured", format;
  bool all = false, no_timing = false;
};

std::uint32_t narrow(std::uint64_t p) { return static_cast<std::uint32_t>(p); }

// ---- subcommands

int cmd_count(const Options& o, std::ostream& out) {
  std::string fmt = o.format.empty() ? "csv" : o.format;
  check_format(fmt, {"csv", "json"});
  if (o.varieties.empty()) throw UsageError("count: --variety is required");
  auto ids = parse_varieties(o.varieties);
  auto kernel = counting::parse_kernel(o.kernel);
  if (!kernel) throw UsageError("unknown kernel '" + o.kernel + "'");
  if (o.k < 1 || o.k > 4) throw UsageError("--k must be in 1..4");
  PrimeRange r = o.primes.empty() ? PrimeRange{} : parse_range(o.primes);
  std::vector<counting::SweepTask> tasks;
  for (auto p : r.primes())
    for (auto id : ids) tasks.push_back({id, narrow(p), o.k});
  counting::SweepOptions so{*kernel, o.workers, o.checkpoint};
  auto rows = counting::run_sweep(tasks, so);
  if (fmt == "csv") {
    counting::write_counts_csv(out, rows, !o.no_timing);
  } else {
    json list = json::array();
    for (const auto& c : rows) {
      json row{{"variety", counting::to_string(c.id)}, {"p", c.p},          {"k", c.k},
               {"q", c.q},                            {"count", c.count}, {"kernel", counting::to_string(c.kernel)}};
      if (!o.no_timing) row["ms"] = c.ms;
      list.push_back(row);
    }
    out << list.dump(2) << "\n";
  }
  return kAllPass;
}

int cmd_traces(const Options& o, std::ostream& out) {
  std::string fmt = o.format.empty() ? "csv" : o.format;
  check_format(fmt, {"csv", "json"});
  std::vector<Target> targets;
  for (const auto& t : o.targets) targets.push_back(parse_target(t));
  if (targets.empty()) {
    if (o.varieties.empty()) throw UsageError("traces: give --target or --variety");
    targets = targets_for(parse_varieties(o.varieties));
    if (targets.empty()) throw UsageError("traces: no trace target uses only the selected varieties");
  }
  std::vector<VarietyId> needed;
  for (auto t : targets)
    for (auto v : target_info(t).inputs)
      if (std::find(needed.begin(), needed.end(), v) == needed.end()) needed.push_back(v);
  PrimeRange r = o.primes.empty() ? PrimeRange{} : parse_range(o.primes);
  std::vector<counting::SweepTask> tasks;
  for (auto p : r.primes())
    for (auto v : needed) tasks.push_back({v, narrow(p), o.k});
  auto rows = counting::run_sweep(tasks, {counting::Kernel::structured, o.workers, o.checkpoint});
  std::map<std::uint32_t, lefschetz::CountMap> by_p;
  for (const auto& c : rows) by_p[c.p][c.id] = c.count;

  json list = json::array();
  if (fmt == "csv") out << "target,p,k,q,value\n";
  for (const auto& [p, counts] : by_p)
    for (auto t : targets) {
      auto rec = lefschetz::extract_trace(t, p, o.k, counts);
      if (fmt == "csv")
        out << target_info(t).id << "," << rec.p << "," << rec.k << "," << rec.q << "," << rec.value << "\n";
      else
        list.push_back({{"target", target_info(t).id}, {"p", rec.p}, {"k", rec.k}, {"q", rec.q}, {"value", rec.value}});
    }
  if (fmt == "json") out << list.dump(2) << "\n";
  return kAllPass;
}

int cmd_group(const Options& o, std::ostream& out) {
  check_format(o.format.empty() ? "json" : o.format, {"json"});
  using namespace grouprep;
  auto g = make_group_data({maschke_g1(), maschke_g2()});
  auto tf = trace_class_functions(g, o.workers);
  auto eps = determinant_character(g);
  auto iso = h_isotypic_dims(tf.t_X);
  GroupTable h = GroupTable::generate(heisenberg_generators());
  auto q = [](const BigRational& v) { return algebra::to_string(v); };

  json classes = json::array();
  for (std::size_t c = 0; c < g->classes.classes.size(); ++c)
    classes.push_back({{"size", g->classes.classes[c].size},
                       {"t_S", q(tf.t_S.at_class(c))},
                       {"t_X", q(tf.t_X.at_class(c))},
                       {"eps", q(eps.at_class(c))}});
  json dims = json::object();
  for (const auto& [w, d] : iso.dims)
    dims[std::to_string(w[0]) + std::to_string(w[1]) + std::to_string(w[2]) + std::to_string(w[3])] = q(d);
  json doc{{"order", g->table.order()},
           {"heisenberg_order", h.order()},
           {"classes", g->classes.classes.size()},
           {"class_functions", classes},
           {"inner_products",
            {{"t_X,t_X", q(class_inner(tf.t_X, tf.t_X))},
             {"t_S,t_S", q(class_inner(tf.t_S, tf.t_S))},
             {"t_X,eps", q(class_inner(tf.t_X, eps))}}},
           {"h_isotypic", {{"dims", dims}, {"total", q(iso.total)}}}};
  out << doc.dump(2) << "\n";
  return kAllPass;
}

int cmd_lines(const Options& o, std::ostream& out) {
  check_format(o.format.empty() ? "json" : o.format, {"json"});
  using namespace nslattice;
  if (o.line_p <= 5) throw UsageError("--p must exceed 5");
  auto ctx = ffield::build_ext(narrow(o.line_p), o.k);
  LineSet all = enumerate_lines(ctx);
  json orbits = json::object();
  for (auto [name, seed] : {std::pair{"l3", Seed::l3}, std::pair{"l5", Seed::l5}}) {
    try {
      orbits[name] = orbit_lines(seed, ctx).size();
    } catch (const SeedError& e) {
      orbits[name] = nullptr;
    }
  }
  json doc{{"p", o.line_p},
           {"k", o.k},
           {"q", ctx->q()},
           {"lines", all.size()},
           {"orbits", orbits},
           {"rank", algebra::int_rank(gram_matrix(all))}};
  if (o.all) {
    auto g = galois_multiplicities(signature_primes());
    doc["multiplicities"] = g.multiplicity;
    json samples = json::array();
    for (const auto& s : g.samples)
      samples.push_back({{"p", s.p}, {"signs", s.signs}, {"lines", s.lines}, {"rank", s.rank}, {"trace", s.trace}});
    doc["samples"] = samples;
  }
  out << doc.dump(2) << "\n";
  return kAllPass;
}

int cmd_hecke(const Options& o, std::ostream& out) {
  std::string fmt = o.format.empty() ? "csv" : o.format;
  check_format(fmt, {"csv", "json"});
  PrimeRange r = o.primes.empty() ? PrimeRange{7, 200} : parse_range(o.primes);
  json list = json::array();
  if (fmt == "csv") out << "p,type,a,b,ap\n";
  for (auto p : r.primes()) {
    auto v = hecke::hecke_value(p);
    std::string a = v.beta ? algebra::to_string(v.beta->a) : "", b = v.beta ? algebra::to_string(v.beta->b) : "";
    if (fmt == "csv") {
      out << p << "," << hecke::to_string(v.type) << "," << a << "," << b << "," << v.ap << "\n";
    } else {
      json row{{"p", p}, {"type", hecke::to_string(v.type)}, {"ap", v.ap}};
      row["a"] = v.beta ? json(a) : json(nullptr);
      row["b"] = v.beta ? json(b) : json(nullptr);
      list.push_back(row);
    }
  }
  if (fmt == "json") out << list.dump(2) << "\n";
  return kAllPass;
}

int cmd_tangent(const Options& o, std::ostream& out) {
  check_format(o.format.empty() ? "json" : o.format, {"json"});
  std::vector<tangent::CheckId> ids;
  for (const auto& c : o.checks) {
    auto id = tangent::parse_check(c);
    if (!id) throw UsageError("unknown check '" + c + "'");
    ids.push_back(*id);
  }
  if (ids.empty() || o.all) ids = tangent::all_checks();
  bool pass = true;
  json list = json::array();
  for (const auto& r : tangent::run_checks(ids, o.workers)) {
    pass = pass && r.pass;
    list.push_back({{"id", tangent::to_string(r.id)},
                    {"verdict", r.pass ? "pass" : "fail"},
                    {"digest", r.digest()},
                    {"witness", r.witness}});
  }
  json doc{{"checks", list}, {"pass", pass}};
  if (o.all) {
    auto g = tangent::curve_invariants();
    doc["genus"] = {{"C+", g.genus_cplus},   {"C-", g.genus_cminus},       {"C~+", g.genus_ctilde},
                    {"Cbar", g.genus_cbar},  {"C3", g.genus_c3},           {"C7", g.genus_c7},
                    {"branch_points", g.branch_points}, {"certificates", g.certificates}};
    pass = pass && g.expected();
    doc["pass"] = pass;
  }
  out << doc.dump(2) << "\n";
  return pass ? kAllPass : kVerificationFailure;
}

int cmd_report(const Options& o, std::ostream& out) {
  std::string fmt = o.format.empty() ? "json" : o.format;
  check_format(fmt, {"json", "text"});
  ReportOptions ro;
  if (!o.primes.empty()) ro.surfaces = ro.threefold = ro.curves = parse_range(o.primes);
  ro.workers = o.workers;
  ro.fixtures = o.fixtures;
  ro.checkpoint = o.checkpoint;
  if (!o.all) {
    for (int c : o.criteria)
      if (c < 1 || c > 12) throw UsageError("--criteria: no criterion " + std::to_string(c));
    ro.criteria = o.criteria;
  }
  Report r = build_report(ro);
  if (fmt == "json") {
    out << report_json(r, !o.no_timing);
  } else {
    for (const auto& c : r.criteria) {
      out << (c.pass ? "PASS" : "FAIL") << " " << c.number << " " << c.title << " (" << c.failures() << " of "
          << c.decisive() << " checks failing)\n";
      for (const auto& f : c.findings)
        if (!f.pass) out << "  " << (f.informational ? "info: " : "fail: ") << f.check << ": " << f.detail << "\n";
    }
  }
  return r.pass() ? kAllPass : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for the Maschke octic and its double cover", "maschke"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  Options o;

  auto add_primes = [&](CLI::App* s) { s->add_option("--primes", o.primes, "prime range lo..hi"); };
  auto add_workers = [&](CLI::App* s) {
    s->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* s, const char* what) { s->add_option("--format", o.format, what); };
  auto add_output = [&](CLI::App* s) { s->add_option("--output,-o", o.output, "write the payload to FILE"); };

  auto* count = app.add_subcommand("count", "point counts over F_q");
  count->add_option("--variety", o.varieties, "varieties, e.g. S or S,X")->delimiter(',');
  count->add_option("--k", o.k, "extension degree");
  count->add_option("--kernel", o.kernel, "naive or structured");
  count->add_option("--checkpoint", o.checkpoint, "resumable checkpoint file");
  count->add_flag("--no-timing", o.no_timing, "leave out timing columns");
  add_primes(count);
  add_workers(count);
  add_format(count, "csv or json");
  add_output(count);

  auto* traces = app.add_subcommand("traces", "Frobenius traces from point counts");
  traces->add_option("--variety", o.varieties, "derive targets from these varieties")->delimiter(',');
  traces->add_option("--target", o.targets, "trace targets, e.g. aW,bS")->delimiter(',');
  traces->add_option("--k", o.k, "extension degree");
  traces->add_option("--checkpoint", o.checkpoint, "resumable checkpoint file");
  add_primes(traces);
  add_workers(traces);
  add_format(traces, "csv or json");
  add_output(traces);

  auto* group = app.add_subcommand("group", "group order, classes and trace class functions");
  add_workers(group);
  add_format(group, "json");
  add_output(group);

  auto* lines = app.add_subcommand("lines", "lines on the octic over a finite field");
  lines->add_option("--p", o.line_p, "characteristic");
  lines->add_option("--k", o.k, "extension degree");
  lines->add_flag("--all", o.all, "add the Galois multiplicities");
  add_format(lines, "json");
  add_output(lines);

  auto* hecke = app.add_subcommand("hecke", "values of the Hecke character");
  add_primes(hecke);
  add_format(hecke, "csv or json");
  add_output(hecke);

  auto* tangent = app.add_subcommand("tangent", "symbolic identities");
  tangent->add_option("--check", o.checks, "check ids")->delimiter(',');
  tangent->add_flag("--all", o.all, "every check and the genus report");
  add_workers(tangent);
  add_format(tangent, "json");
  add_output(tangent);

  auto* report = app.add_subcommand("report", "consolidated verification report");
  report->add_flag("--all", o.all, "every criterion");
  report->add_option("--criteria", o.criteria, "criterion numbers")->delimiter(',');
  report->add_option("--fixtures", o.fixtures, "fixture directory");
  report->add_option("--checkpoint", o.checkpoint, "resumable checkpoint file");
  report->add_flag("--no-timing", o.no_timing, "leave out timing");
  add_primes(report);
  add_workers(report);
  add_format(report, "json or text");
  add_output(report);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPass;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kAllPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  std::ofstream file;
  std::ostream* dst = &out;
  try {
    if (!o.output.empty()) {
      file.open(o.output);
      if (!file) throw UsageError("cannot write " + o.output);
      dst = &file;
    }
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "count") return cmd_count(o, *dst);
    if (name == "traces") return cmd_traces(o, *dst);
    if (name == "group") return cmd_group(o, *dst);
    if (name == "lines") return cmd_lines(o, *dst);
    if (name == "hecke") return cmd_hecke(o, *dst);
    if (name == "tangent") return cmd_tangent(o, *dst);
    return cmd_report(o, *dst);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const lefschetz::FixtureError& e) {
    err << "fixture error: " << e.what() << "\n";
  } catch (const counting::CheckpointError& e) {
    err << "checkpoint error: " << e.what() << "\n";
  } catch (const hecke::BadPrime& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const lefschetz::MissingCount& e) {
    err << "configuration error: " << e.what() << "\n";
  }
  return kUsageError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace maschke::cli
