#include "setalg/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "setalg/decomp.hpp"
#include "setalg/dsl.hpp"
#include "setalg/fuzzy.hpp"
#include "setalg/genspan.hpp"
#include "setalg/maps.hpp"
#include "setalg/parallel.hpp"

namespace setalg::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string json_path;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::uint64_t enum_cap = dsl::kDefaultEnumCap;
  std::size_t exact_cap = kDefaultExactCap;
  bool square = false;
  std::string profile;
};

struct CheckResult {
  std::string name;
  std::string op;
  Verdict verdict = Verdict::proven;
  std::string headline;
  std::vector<std::string> lines;
  std::vector<Violation> violations;
  json result = json::object();
  double ms = 0;
};

/// Failure inside a check that is not an axiom violation, e.g. a cap.
struct CheckFailed {
  std::string message;
};

json witness_json(const std::vector<Binding>& w) {
  json out = json::array();
  for (const auto& b : w) out.push_back({{"name", b.name}, {"value", b.value.to_string()}});
  return out;
}

std::string witness_text(const std::vector<Binding>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i].name + "=" + w[i].value.to_string();
  return s;
}

std::string tuple_text(const std::vector<std::size_t>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + ")";
}

json elements_json(const std::vector<Element>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

json members_json(const MemberSet& m, std::size_t limit = 64) {
  json out = json::array();
  for (std::size_t i = 0; i < m.size() && i < limit; ++i) out.push_back(m.element(i).to_string());
  return out;
}

class Runner {
 public:
  Runner(const dsl::Registry& reg, const Options& opt) : reg_(reg), opt_(opt) {}

  CheckResult execute(const dsl::CheckStmt& c) {
    CheckResult r;
    r.op = c.verb;
    r.name = c.verb;
    for (const auto& a : c.args) r.name += " " + (a.is_name ? a.name : dsl::format_literal(a.literal));
    const auto start = std::chrono::steady_clock::now();
    try {
      dispatch(c, r);
    } catch (const CheckFailed& f) {
      r.verdict = Verdict::fail;
      r.lines.push_back(f.message);
      r.result["error"] = f.message;
    } catch (const Error& e) {
      r.verdict = Verdict::fail;
      r.lines.push_back(std::string(to_string(e.code())) + ": " + e.what());
      r.result["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

 private:
  const SpacePtr& space(const std::string& n) const { return reg_.spaces.at(n); }
  const SpecialSpace& special(const std::string& n) const { return reg_.specials.at(n); }
  const FiniteMap& map(const std::string& n) const { return *reg_.maps.at(n); }

  std::vector<Element> literals(const dsl::CheckStmt& c, std::size_t from, const Carrier& carrier) const {
    std::vector<Element> out;
    for (std::size_t i = from; i < c.args.size(); ++i)
      out.emplace_back(carrier, dsl::encode_literal(c.args[i].literal, carrier));
    return out;
  }

  static std::int64_t integer_arg(const dsl::CheckStmt& c, std::size_t i) { return c.args[i].literal.entries[0].value.num(); }

  static void take_report(CheckResult& r, const AxiomReport& rep) {
    r.verdict = rep.verdict;
    r.violations = rep.violations;
    r.result["checked"] = rep.checked;
    if (!rep.warnings.empty()) r.result["warnings"] = rep.warnings;
    if (!rep.notes.empty()) r.result["notes"] = rep.notes;
    for (const auto& w : rep.warnings) r.lines.push_back("warning: " + w);
  }

  void dispatch(const dsl::CheckStmt& c, CheckResult& r) {
    const std::string& v = c.verb;
    const std::string& a0 = c.args.empty() ? std::string() : c.args[0].name;
    if (v == "verify") return verify(a0, r);
    if (v == "dim") {
      const std::size_t cap = c.args.size() > 1 ? static_cast<std::size_t>(integer_arg(c, 1)) : opt_.exact_cap;
      return dim(a0, cap, r);
    }
    if (v == "span") return span_check(c, r);
    if (v == "independent") return independent(c, r);
    if (v == "map") return linear(a0, r);
    if (v == "idempotent") return idempotent(a0, r);
    if (v == "power") return power(a0, static_cast<unsigned>(integer_arg(c, 1)), r);
    if (v == "inverse") return inverse(a0, r);
    if (v == "special_map") return special_map(c, r);
    if (v == "decompose") return take_report(r, verify_direct_sum(reg_.decomps.at(a0)));
    if (v == "projections") return projections(a0, r);
    if (v == "fuzzy") return fuzzy(a0, c.args.size() > 1 ? c.args[1].name : opt_.profile, r);
    if (v == "fuzzy_special") return fuzzy_special(c, r);
    if (v == "classify") return classify(a0, r);
    if (v == "subspace") return subspace(a0, c.args[1].name, r);
    if (v == "dual") return dual(a0, {}, r);
    if (v == "annihilator") return dual(a0, literals(c, 1, space(a0)->carrier()), r);
    if (v == "intersect") return intersect(c, r);
    if (v == "adjoin_zero") return adjoin(a0, r);
    throw CheckFailed{"unknown check verb '" + v + "'"};
  }

  void verify(const std::string& n, CheckResult& r) {
    if (reg_.spaces.count(n)) return take_report(r, verify_component_space(*space(n)));
    if (reg_.specials.count(n)) return take_report(r, verify_special_space(special(n)));
    return take_report(r, verify_n_space(reg_.nspaces.at(n)));
  }

  void dim(const std::string& n, std::size_t cap, CheckResult& r) {
    std::vector<GeneratingReport> reports;
    if (reg_.spaces.count(n))
      reports.push_back(minimum_generating_set(*space(n), cap));
    else if (reg_.specials.count(n))
      reports = n_dimension(special(n), cap);
    else
      throw CheckFailed{"dim needs a space or a special space"};
    std::vector<std::size_t> dims;
    json minimality = json::array(), independent = json::array(), bases = json::array();
    std::string levels;
    for (const auto& g : reports) {
      dims.push_back(g.cardinality);
      minimality.push_back(std::string(to_string(g.minimality)));
      independent.push_back(g.independent);
      bases.push_back(elements_json(g.basis));
      levels += (levels.empty() ? "" : ", ") + std::string(to_string(g.minimality));
    }
    r.headline = tuple_text(dims);
    r.lines.push_back("minimality: " + levels);
    r.result["dimension"] = dims;
    r.result["minimality"] = minimality;
    r.result["independent"] = independent;
    r.result["bases"] = bases;
  }

  void span_check(const dsl::CheckStmt& c, CheckResult& r) {
    const ComponentSpace& V = *space(c.args[0].name);
    const auto basis = literals(c, 1, V.carrier());
    const MemberSet s = span(basis, V.scalars(), V.profile());
    const bool inside = s.subset_of(V.members());
    const bool generating = inside && s.size() == V.size();
    r.headline = "span has " + std::to_string(s.size()) + " elements; generating=" + (generating ? "true" : "false");
    r.result["size"] = s.size();
    r.result["members"] = members_json(s);
    r.result["generating"] = generating;
    if (generating) return;
    r.verdict = Verdict::fail;
    for (const Code x : V.members())
      if (!s.contains(x)) {
        r.violations.push_back({"generating", {{"v", Element(V.carrier(), x)}}, {}, "v is not in the span"});
        return;
      }
    for (const Code x : s)
      if (!V.contains(x)) {
        r.violations.push_back({"generating", {{"v", Element(V.carrier(), x)}}, {}, "the span leaves " + V.name()});
        return;
      }
  }

  void independent(const dsl::CheckStmt& c, CheckResult& r) {
    const ComponentSpace& V = *space(c.args[0].name);
    const auto basis = literals(c, 1, V.carrier());
    const auto dep = find_dependence(basis, V.scalars());
    r.result["independent"] = !dep.has_value();
    r.headline = dep ? "dependent" : "independent";
    if (!dep) return;
    r.verdict = Verdict::fail;
    const std::string rel = dep->x.to_string() + " = " + dep->s.to_string() + "·" + dep->y.to_string();
    r.result["relation"] = rel;
    r.violations.push_back({"independence", {{"x", dep->x}, {"s", dep->s}, {"y", dep->y}}, {}, rel});
  }

  void linear(const std::string& n, CheckResult& r) {
    const FiniteMap& t = map(n);
    take_report(r, verify_linear_map(t));
    if (opt_.square) {
      if (!t.is_operator()) throw CheckFailed{n + " is not an operator, so it cannot be squared"};
      const bool idem = is_idempotent(t);
      r.result["idempotent"] = idem;
      r.lines.push_back(std::string("idempotent=") + (idem ? "true" : "false"));
    }
  }

  void idempotent(const std::string& n, CheckResult& r) {
    const FiniteMap& t = map(n);
    if (!t.is_operator()) throw CheckFailed{n + " is not an operator"};
    const auto diff = first_difference(compose_maps(t, t), t);
    r.result["idempotent"] = !diff.has_value();
    r.headline = std::string("idempotent=") + (diff ? "false" : "true");
    if (!diff) return;
    r.verdict = Verdict::fail;
    r.violations.push_back({"idempotent", {{"v", *diff}}, {}, n + "(" + n + "(v)) differs from " + n + "(v)"});
  }

  void power(const std::string& n, unsigned k, CheckResult& r) {
    const FiniteMap& t = map(n);
    if (!t.is_operator()) throw CheckFailed{n + " is not an operator"};
    if (k == 0) throw CheckFailed{"power needs k >= 1"};
    const auto diff = first_difference(map_power(t, k), FiniteMap::identity(t.domain_ptr()));
    const std::string label = n + "^" + std::to_string(k);
    r.result["identity"] = !diff.has_value();
    r.headline = label + (diff ? " != I" : " = I");
    if (!diff) return;
    r.verdict = Verdict::fail;
    r.violations.push_back({"power-identity", {{"v", *diff}}, {}, label + "(v) differs from v"});
  }

  void inverse(const std::string& n, CheckResult& r) {
    try {
      const FiniteMap inv = invert_map(map(n));
      r.result["bijective"] = true;
      r.headline = n + " is invertible";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_bijective) throw;
      r.result["bijective"] = false;
      r.verdict = Verdict::fail;
      r.violations.push_back({"bijective", {}, {}, e.what()});
    }
  }

  void special_map(const dsl::CheckStmt& c, CheckResult& r) {
    const SpecialSpace& dom = special(c.args[0].name);
    const SpecialSpace& cod = special(c.args[1].name);
    SpecialMap m;
    m.name = c.args[2].name;
    for (std::size_t i = 2; i < c.args.size(); ++i) {
      const FiniteMap& t = map(c.args[i].name);
      std::size_t route = cod.size();
      for (std::size_t j = 0; j < cod.size() && route == cod.size(); ++j)
        if (cod.components()[j] == t.codomain_ptr()) route = j;
      for (std::size_t j = 0; j < cod.size() && route == cod.size(); ++j)
        if (cod[j].members() == t.codomain().members()) route = j;
      if (route == cod.size()) throw CheckFailed{t.name() + " does not land in a component of " + cod.name()};
      m.parts.push_back(t);
      m.index_map.push_back(route);
    }
    take_report(r, verify_special_map(m, dom, cod));
    r.result["pseudo"] = m.pseudo();
  }

  void projections(const std::string& n, CheckResult& r) {
    const auto ps = projection_family(reg_.decomps.at(n));
    take_report(r, verify_projection_family(ps));
    r.result["projections"] = ps.size();
    r.result["domain_size"] = ps.front().size();
    r.headline = std::to_string(ps.size()) + " projections over " + std::to_string(ps.front().size()) + " elements";
  }

  void fuzzy(const std::string& n, const std::string& word, CheckResult& r) {
    const MembershipMap& eta = reg_.fuzzies.at(n);
    FuzzyProfile p = FuzzyProfile::of(eta.domain().profile());
    if (word == "set_vs") p = {FuzzyId::set_vs};
    else if (word == "set_la") p = {FuzzyId::set_la};
    else if (word == "semigroup") p = {FuzzyId::semigroup};
    else if (word == "semigroup_la") p = {FuzzyId::semigroup_la};
    else if (word == "group") p = {FuzzyId::group};
    else if (!word.empty()) throw CheckFailed{"unknown fuzzy profile '" + word + "'"};
    take_report(r, verify_membership(eta, p));
    r.result["profile"] = std::string(to_string(p.id));
  }

  void fuzzy_special(const dsl::CheckStmt& c, CheckResult& r) {
    std::vector<MembershipMap> etas;
    for (std::size_t i = 1; i < c.args.size(); ++i) etas.push_back(reg_.fuzzies.at(c.args[i].name));
    take_report(r, verify_special_membership(etas, special(c.args[0].name)));
  }

  void classify(const std::string& n, CheckResult& r) {
    const SimplicityVerdict s = classify_simplicity(special(n));
    auto evidence = [](const SubstructureEvidence& e) {
      json j = {{"kind", std::string(to_string(e.kind))}, {"proper", e.proper.size()}};
      if (!e.proper.empty()) j["example"] = members_json(e.proper.front());
      return j;
    };
    json comps = json::array();
    for (const auto& e : s.components) comps.push_back(evidence(e));
    r.headline = std::string(to_string(s.level));
    r.result["level"] = std::string(to_string(s.level));
    r.result["simple"] = s.simple;
    r.result["strong_simple"] = s.strong_simple;
    r.result["doubly_simple"] = s.doubly_simple;
    r.result["components"] = comps;
    r.result["scalars"] = evidence(s.scalars);
    r.lines.push_back(std::string("simple=") + (s.simple ? "true" : "false") +
                      " strong_simple=" + (s.strong_simple ? "true" : "false") +
                      " doubly_simple=" + (s.doubly_simple ? "true" : "false"));
  }

  void subspace(const std::string& w, const std::string& v, CheckResult& r) {
    const SubspaceReport sr = verify_subspace(*space(w), *space(v));
    take_report(r, sr.report);
    r.result["mode"] = std::string(to_string(sr.mode));
  }

  void dual(const std::string& n, const std::vector<Element>& a, CheckResult& r) {
    const auto fs = annihilator(a, space(n));
    r.result["count"] = fs.size();
    r.headline = (a.empty() ? "|L(V,S)| = " : "|annihilator| = ") + std::to_string(fs.size());
  }

  void intersect(const dsl::CheckStmt& c, CheckResult& r) {
    std::vector<SpacePtr> ws;
    for (const auto& a : c.args) ws.push_back(space(a.name));
    const auto meet = intersect_subspaces(ws);
    r.result["empty"] = !meet.has_value();
    r.result["size"] = meet ? meet->size() : 0;
    r.headline = meet ? "intersection has " + std::to_string(meet->size()) + " elements" : "intersection is empty";
  }

  void adjoin(const std::string& n, CheckResult& r) {
    const AdjoinedSpace a = adjoin_zero(*space(n));
    take_report(r, a.report);
    r.result["size"] = a.space.size();
  }

  const dsl::Registry& reg_;
  const Options& opt_;
};

json check_json(const CheckResult& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back(
        {{"axiom", v.axiom}, {"context", v.context}, {"witness", witness_json(v.witness)}, {"detail", v.detail}});
  json j;
  j["name"] = r.name;
  j["op"] = r.op;
  j["verdict"] = std::string(to_string(r.verdict));
  j["witness"] = r.violations.empty() ? json(nullptr) : witness_json(r.violations.front().witness);
  j["violations"] = violations;
  j["result"] = r.result;
  j["timing_ms"] = std::round(r.ms * 1000.0) / 1000.0;
  return j;
}

std::string status(const CheckResult& r) { return r.verdict == Verdict::fail ? "FAIL" : "PASS"; }

void print_check(std::ostream& out, const CheckResult& r, bool bare_headline) {
  if (bare_headline && !r.headline.empty()) {
    out << r.headline << "\n";
  } else {
    out << status(r) << " " << r.name << ": " << to_string(r.verdict);
    if (!r.headline.empty()) out << " " << r.headline;
    out << "\n";
  }
  for (const auto& l : r.lines) out << "  " << l << "\n";
  for (const auto& v : r.violations) {
    out << "  " << v.axiom;
    if (!v.context.empty()) out << " [" << v.context << "]";
    if (!v.witness.empty()) out << " " << witness_text(v.witness);
    if (!v.detail.empty()) out << ": " << v.detail;
    out << "\n";
  }
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Invocation {
  std::string command;
  std::string file;
  std::vector<dsl::CheckStmt> checks;  // empty for `verify`, which takes the document's own
};

int execute(const Invocation& inv, const Options& opt, std::ostream& out, std::ostream& err) {
  const auto text = read_file(inv.file);
  if (!text) {
    err << "salg: cannot read " << inv.file << "\n";
    return exit_usage;
  }
  dsl::Registry reg;
  try {
    reg = dsl::resolve(dsl::parse(*text), {opt.enum_cap});
  } catch (const dsl::LocatedError& e) {
    err << inv.file << ":" << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << inv.file << ": " << e.what() << "\n";
    return exit_usage;
  }
  std::vector<dsl::CheckStmt> checks = inv.checks;
  if (inv.command == "verify")
    for (const auto& [c, _] : reg.checks) checks.push_back(c);
  // Subcommand subjects must exist and have the right kind.
  for (const auto& c : checks) {
    if (inv.command == "verify" || c.args.empty()) continue;
    const std::string& n = c.args[0].name;
    const bool known = reg.spaces.count(n) || reg.specials.count(n) || reg.nspaces.count(n) || reg.maps.count(n) ||
                       reg.fuzzies.count(n) || reg.decomps.count(n);
    if (!known) {
      err << "salg: " << inv.file << " declares no '" << n << "'\n";
      return exit_usage;
    }
  }
  Runner runner(reg, opt);
  std::vector<CheckResult> results;
  for (const auto& c : checks) {
    try {
      results.push_back(runner.execute(c));
    } catch (const std::out_of_range&) {
      err << "salg: '" << (c.args.empty() ? c.verb : c.args[0].name) << "' has the wrong kind for " << c.verb << "\n";
      return exit_usage;
    }
  }
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.verdict == Verdict::fail;
  const int code = failed ? exit_fail : exit_pass;
  const bool bare = inv.command == "dim";
  for (const auto& r : results) print_check(out, r, bare);
  if (inv.command == "verify")
    out << results.size() << " checks, " << results.size() - failed << " passed, " << failed << " failed\n";
  if (!opt.json_path.empty()) {
    json report;
    report["schema"] = kSchemaId;
    report["tool"] = {{"name", "salg"}, {"version", kVersion}};
    report["command"] = inv.command;
    report["file"] = inv.file;
    report["seed"] = opt.seed;
    json cs = json::array();
    for (const auto& r : results) cs.push_back(check_json(r));
    report["checks"] = cs;
    report["summary"] = {{"checks", results.size()}, {"passed", results.size() - failed}, {"failed", failed}};
    report["exit_code"] = code;
    std::ofstream f(opt.json_path, std::ios::binary);
    if (!f) {
      err << "salg: cannot write " << opt.json_path << "\n";
      return exit_usage;
    }
    f << report.dump(2) << "\n";
  }
  return code;
}

dsl::CheckArg name_arg(const std::string& n) { return {true, n, {}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Builds finite set-based algebraic structures from .salg files and verifies them", "salg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("salg ") + kVersion);
  Options opt;
  Invocation inv;
  app.add_option("--json", opt.json_path, "write a report-v1 JSON report to this path");
  app.add_option("--seed", opt.seed, "seed for randomized sweeps (recorded in the report)");
  app.add_option("--threads", opt.threads, "worker threads for partitioned checks (default SALG_THREADS or 1)");
  app.add_option("--enum-cap", opt.enum_cap, "largest member set the resolver will enumerate");
  app.fallthrough();

  std::string subject;
  std::vector<std::string> basis;
  auto file_opt = [&](CLI::App* sub) { sub->add_option("file", inv.file, "input .salg document")->required(); };
  auto subject_opt = [&](CLI::App* sub, const char* what) { sub->add_option("name", subject, what)->required(); };

  auto* verify = app.add_subcommand("verify", "run every check directive in a document");
  file_opt(verify);
  auto* dim = app.add_subcommand("dim", "minimum generating set cardinalities of a space or special space");
  file_opt(dim);
  subject_opt(dim, "space or special space");
  dim->add_option("--cap", opt.exact_cap, "largest component for the exact minimality search");
  auto* spn = app.add_subcommand("span", "span of explicit elements inside a space");
  file_opt(spn);
  subject_opt(spn, "space");
  spn->add_option("basis", basis, "element literals, e.g. (1,0)")->required();
  auto* cmap = app.add_subcommand("check-map", "linearity of a declared map");
  file_opt(cmap);
  subject_opt(cmap, "map");
  cmap->add_flag("--square", opt.square, "also compare T∘T with T");
  auto* dec = app.add_subcommand("decompose", "direct sum and projection family of a decomposition");
  file_opt(dec);
  subject_opt(dec, "decomposition");
  auto* fz = app.add_subcommand("fuzzy", "axioms of a fuzzy membership map");
  file_opt(fz);
  subject_opt(fz, "membership map");
  fz->add_option("--profile", opt.profile, "set_vs, set_la, semigroup, semigroup_la or group");
  auto* cls = app.add_subcommand("classify", "simplicity level of a special space");
  file_opt(cls);
  subject_opt(cls, "special space");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForVersion&) {
    out << "salg " << kVersion << "\n";
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "salg: " << e.what() << "\n" << "usage: salg <verify|dim|span|check-map|decompose|fuzzy|classify> <file> ...; see salg --help\n";
    return exit_usage;
  }

  if (opt.threads == 0)
    if (const char* env = std::getenv("SALG_THREADS")) opt.threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  set_max_threads(opt.threads);

  auto check = [&](std::string verb, std::vector<dsl::CheckArg> a) { inv.checks.push_back({std::move(verb), std::move(a)}); };
  const CLI::App* chosen = app.get_subcommands().front();
  inv.command = chosen->get_name();
  if (chosen == dim) {
    check("dim", {name_arg(subject)});
  } else if (chosen == spn) {
    std::vector<dsl::CheckArg> a{name_arg(subject)};
    for (const auto& b : basis) {
      try {
        a.push_back({false, {}, dsl::parse_literal(b)});
      } catch (const Error& e) {
        err << "salg: bad element literal '" << b << "': " << e.what() << "\n";
        return exit_usage;
      }
    }
    check("span", std::move(a));
  } else if (chosen == cmap) {
    check("map", {name_arg(subject)});
  } else if (chosen == dec) {
    check("decompose", {name_arg(subject)});
    check("projections", {name_arg(subject)});
  } else if (chosen == fz) {
    check("fuzzy", {name_arg(subject)});
  } else if (chosen == cls) {
    check("classify", {name_arg(subject)});
  }
  return execute(inv, opt, out, err);
}

}  // namespace setalg::cli
