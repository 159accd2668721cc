#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "dyckgram/bijection.hpp"
#include "dyckgram/families.hpp"
#include "dyckgram/oracle.hpp"
#include "dyckgram/sequences.hpp"
#include "dyckgram/verify.hpp"

namespace dyckgram::cli {

namespace {

using nlohmann::json;

struct QuadFlags {
  std::string peaks, valleys, upruns, downruns;

  void attach(CLI::App* app) {
    app->add_option("--peaks", peaks, "avoid-set for peak heights");
    app->add_option("--valleys", valleys, "avoid-set for valley heights");
    app->add_option("--upruns", upruns, "avoid-set for up-run lengths");
    app->add_option("--downruns", downruns, "avoid-set for down-run lengths");
  }

  RestrictionQuad quad() const {
    return {parse_set(peaks), parse_set(valleys), parse_set(upruns), parse_set(downruns)};
  }
};

json quad_json(const RestrictionQuad& q) {
  return {{"peaks", q.peaks.str()}, {"valleys", q.valleys.str()}, {"upruns", q.up_runs.str()},
          {"downruns", q.down_runs.str()}};
}

json strings(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::string status(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string join(const std::vector<BigInt>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + x.get_str();
  return out;
}

struct Options {
  bool as_json = false;

  std::size_t n = 0;
  QuadFlags quad;

  std::size_t n_max = 10;
  std::string method = "dp";

  std::string family;
  std::string params;
  std::size_t order = kDefaultOrder;
  bool dump_grammar = false;
  std::size_t max_len = 20;

  std::string terms;
  std::size_t semilength = 0;
};

int do_enumerate(const Options& o, std::ostream& out) {
  auto quad = o.quad.quad();
  auto paths = enumerate(o.n, quad);
  if (o.as_json) {
    json j{{"command", "enumerate"}, {"n", std::to_string(o.n)}, {"quad", quad_json(quad)},
           {"count", std::to_string(paths.size())}, {"paths", json::array()}};
    for (const auto& p : paths) j["paths"].push_back(p.str());
    out << j.dump() << "\n";
  } else {
    for (const auto& p : paths) out << p.str() << "\n";
  }
  return kExitPass;
}

int do_count(const Options& o, std::ostream& out) {
  auto quad = o.quad.quad();
  std::optional<CountTable> brute, dp;
  if (o.method == "brute" || o.method == "both") brute = count_brute(o.n_max, quad);
  if (o.method == "dp" || o.method == "both") dp = count_dp(o.n_max, quad);
  bool pass = !(brute && dp) || same_counts(*brute, *dp);
  if (o.as_json) {
    json j{{"command", "count"}, {"n_max", std::to_string(o.n_max)}, {"quad", quad_json(quad)}, {"method", o.method}};
    if (brute) j["brute"] = strings(brute->entries);
    if (dp) j["dp"] = strings(dp->entries);
    j["status"] = status(pass);
    out << j.dump() << "\n";
  } else {
    out << "n";
    if (brute) out << "\tbrute";
    if (dp) out << "\tdp";
    out << "\n";
    for (std::size_t n = 0; n <= o.n_max; ++n) {
      out << n;
      if (brute) out << "\t" << (*brute)[n].get_str();
      if (dp) out << "\t" << (*dp)[n].get_str();
      out << "\n";
    }
    if (brute && dp) out << status(pass) << "\n";
  }
  return pass ? kExitPass : kExitFail;
}

FamilyInstance family_from(const Options& o) { return build(parse_family_id(o.family), parse_params(o.params)); }

int do_series(const Options& o, std::ostream& out) {
  auto f = family_from(o);
  auto system = lower(f);
  auto solution = solve(system, o.order);
  if (o.as_json) {
    json j{{"command", "series"}, {"family", std::string(to_string(f.id))}, {"params", json::object()},
           {"order", std::to_string(o.order)}, {"system", json::array()}, {"solution", json::object()}};
    for (const auto& [k, v] : f.params) j["params"][k] = std::to_string(v);
    for (const auto& eq : system.equations) j["system"].push_back(eq.str());
    for (const auto& [name, s] : solution) j["solution"][name] = strings(s.counts());
    if (o.dump_grammar) j["grammar"] = dump_body(f);
    out << j.dump() << "\n";
  } else {
    out << f.name() << "\n";
    if (o.dump_grammar) out << dump_body(f);
    out << system.str();
    for (const auto& [name, s] : solution) out << name << ": " << join(s.counts()) << "\n";
  }
  return kExitPass;
}

int do_verify(const Options& o, std::ostream& out) {
  auto f = family_from(o);
  auto report = verify_family(f, {o.max_len, o.n_max});
  if (o.as_json) {
    json j{{"command", "verify"}, {"family", report.family}, {"max_len", std::to_string(o.max_len)},
           {"n_max", std::to_string(o.n_max)}, {"checks", json::array()}, {"status", status(report.pass())}};
    for (const auto& c : report.checks)
      j["checks"].push_back({{"name", c.name}, {"status", status(c.pass)}, {"detail", c.detail}});
    out << j.dump() << "\n";
  } else {
    out << report.family << "\n";
    for (const auto& c : report.checks) out << status(c.pass) << "  " << c.name << "  " << c.detail << "\n";
    out << status(report.pass()) << "\n";
  }
  return report.pass() ? kExitPass : kExitFail;
}

int do_identify(const Options& o, std::ostream& out) {
  std::vector<BigInt> terms;
  std::stringstream in(o.terms);
  std::string item;
  while (std::getline(in, item, ',')) {
    BigInt v;
    if (item.empty() || v.set_str(item, 10) != 0) throw Error("bad term '" + item + "'");
    terms.push_back(v);
  }
  auto matches = identify(terms);
  if (o.as_json) {
    json j{{"command", "identify"}, {"terms", strings(terms)}, {"matches", json::array()}};
    for (auto id : matches) j["matches"].push_back(std::string(to_string(id)));
    out << j.dump() << "\n";
  } else {
    if (matches.empty()) out << "no match\n";
    for (auto id : matches) out << to_string(id) << "\n";
  }
  return kExitPass;
}

int do_bijection(const Options& o, std::ostream& out) {
  auto report = verify_counts(o.semilength);
  if (o.as_json) {
    json j{{"command", "bijection"}, {"semilength", std::to_string(o.semilength)}, {"rows", json::array()},
           {"status", status(report.pass)}};
    for (const auto& r : report.rows)
      j["rows"].push_back({{"semilength", std::to_string(r.semilength)},
                           {"oracle", r.oracle_count.get_str()},
                           {"formula", r.formula_count.get_str()},
                           {"walks", std::to_string(r.walks)},
                           {"counts", status(r.counts_match)},
                           {"round_trip", status(r.round_trip)}});
    if (!report.pass) j["witness"] = report.failure;
    out << j.dump() << "\n";
  } else {
    out << "m\toracle\tformula\twalks\tround-trip\n";
    for (const auto& r : report.rows)
      out << r.semilength << "\t" << r.oracle_count.get_str() << "\t" << r.formula_count.get_str() << "\t" << r.walks
          << "\t" << status(r.round_trip) << "\n";
    if (!report.pass) out << "witness: " << report.failure << "\n";
    out << status(report.pass) << "\n";
  }
  return report.pass ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Restricted Dyck path grammars: enumeration, counting, series and verification", "dyckgram"};
  app.require_subcommand(1);
  app.add_flag("--json", o.as_json, "emit a single JSON object");

  auto* en = app.add_subcommand("enumerate", "list restricted paths of one semilength");
  en->add_option("-n", o.n, "semilength")->required();
  o.quad.attach(en);

  auto* co = app.add_subcommand("count", "count restricted paths for n = 0..n-max");
  co->add_option("--n-max", o.n_max, "largest semilength")->required();
  co->add_option("--method", o.method, "brute, dp or both")->check(CLI::IsMember({"brute", "dp", "both"}));
  o.quad.attach(co);

  auto* se = app.add_subcommand("series", "lower a family and solve its system");
  se->add_option("--family", o.family, "F1..F3, F5..F11")->required();
  se->add_option("--param", o.params, "e.g. A=2,B=1");
  se->add_option("--order", o.order, "number of coefficients");
  se->add_flag("--dump-grammar", o.dump_grammar, "print the grammar or equation");

  auto* ve = app.add_subcommand("verify", "check a family against the oracles");
  ve->add_option("--family", o.family, "F1..F3, F5..F11")->required();
  ve->add_option("--param", o.params, "e.g. A=2,B=1");
  ve->add_option("--max-len", o.max_len, "word length bound");
  ve->add_option("--n-max", o.n_max, "largest semilength for coefficient checks");

  auto* id = app.add_subcommand("identify", "match a prefix against the reference sequences");
  id->add_option("--terms", o.terms, "comma-separated integers")->required();

  auto* bi = app.add_subcommand("bijection", "verify the parity-path / walk bijection");
  bi->add_option("--semilength", o.semilength, "largest semilength")->required();

  for (auto* sub : {en, co, se, ve, id, bi}) sub->add_flag("--json", o.as_json, "emit a single JSON object");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*en) return do_enumerate(o, out);
    if (*co) return do_count(o, out);
    if (*se) return do_series(o, out);
    if (*ve) return do_verify(o, out);
    if (*id) return do_identify(o, out);
    if (*bi) return do_bijection(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dyckgram::cli
