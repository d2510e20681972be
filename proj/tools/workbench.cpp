// workbench: command-line front end over the ssg library.
//
// Every command prints one JSON report on stdout (and to --json when given).
// Exit status: 0 pass, 1 a check failed (witness in the report), 2 bad input,
// 3 a size guard was exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssg/error.hpp"
#include "ssg/fixtures.hpp"
#include "ssg/search.hpp"
#include "ssg/theorems.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ssg;

struct Options {
  std::string in;
  std::string fixture;
  std::string dot;
  std::string json_out;
  int max_order = 24;
  std::size_t max_sections = 64;
  std::size_t max_relations = 1u << 20;
  std::string property = "theorems";
  bool timing = false;
};

enum Exit { kPass = 0, kFail = 1, kInput = 2, kGuard = 3 };

json set_json(ElementSet s) { return s.to_vector(); }

json checks_json(const Report& r) {
  json out = json::array();
  for (const auto& c : r.checks()) {
    json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) j["witness"] = c.witness;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<std::vector<int>> read_table(const json& j, int order) {
  if (!j.is_array() || static_cast<int>(j.size()) != order)
    throw Error(ErrorKind::InvalidInput, "mul must be an order x order array");
  std::vector<std::vector<int>> t;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw Error(ErrorKind::InvalidInput, "mul must be an order x order array");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(ErrorKind::InvalidInput, "mul entries must be integers");
      r.push_back(x.get<int>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

ElementSet read_set(const json& j, const char* field, int order) {
  if (!j.contains(field) || !j[field].is_array())
    throw Error(ErrorKind::InvalidInput, std::string(field) + " must be an array of indices");
  ElementSet out;
  for (const auto& x : j[field]) {
    if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= order)
      throw Error(ErrorKind::InvalidInput, std::string(field) + " holds an index outside 0..order-1");
    out.insert(x.get<int>());
  }
  return out;
}

struct Input {
  std::string name;
  FiniteSemigroup sg;
  ElementSet n, z;
  BundlePtr bundle;  // bundle fixtures only
};

Input load(const Options& o) {
  Input in;
  if (!o.fixture.empty()) {
    in.name = o.fixture;
    const Fixture f = gen_fixture(o.fixture);
    if (f.bundle) {
      in.bundle = f.bundle;
      const SectionSemigroup ss = slice_sections(f.bundle, o.max_sections);
      in.sg = ss.sg;
      in.n = ss.n_pi;
      in.z = ss.e;
    } else {
      in.sg = f.semigroup->sg();
      in.n = f.semigroup->N();
      in.z = f.semigroup->Z();
    }
    return in;
  }
  if (o.in.empty()) throw Error(ErrorKind::InvalidInput, "give --in FILE or --fixture NAME");
  in.name = o.in;
  std::ifstream file(o.in);
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot read " + o.in);
  json j;
  try {
    j = json::parse(file);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j["order"].is_number_integer() || !j.contains("mul"))
    throw Error(ErrorKind::InvalidInput, "input needs integer order and mul");
  const int order = j["order"].get<int>();
  if (order < 1 || order > kMaxOrder) throw Error(ErrorKind::InvalidInput, "order must lie in 1..64");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != order)
      throw Error(ErrorKind::InvalidInput, "labels must hold one string per element");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw Error(ErrorKind::InvalidInput, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  in.sg = FiniteSemigroup::from_table(read_table(j["mul"], order), labels);
  in.n = read_set(j, "N", order);
  in.z = read_set(j, "Z", order);
  return in;
}

json semigroup_json(const FiniteSemigroup& s, ElementSet n, ElementSet z) {
  return {{"order", s.order()}, {"mul", s.table()}, {"N", set_json(n)}, {"Z", set_json(z)}, {"labels", s.labels()}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  f << text;
}

class Run {
 public:
  Run(std::string command, const Options& o) : o_(o), start_(std::chrono::steady_clock::now()) {
    out_["command"] = std::move(command);
  }

  json& result() { return out_["result"]; }
  void checks(const Report& r, const std::string& prefix = {}) { report_.merge(r, prefix); }
  void check(const std::string& name, bool ok, const std::string& witness = {}) { report_.add(name, ok, witness); }
  void artifact(const std::string& path) { artifacts_.push_back(path); }
  void phase(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    timing_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

  int finish() {
    out_["status"] = report_.ok() ? "pass" : "fail";
    out_["checks"] = checks_json(report_);
    if (const Check* c = report_.first_failure()) out_["first_failure"] = {{"name", c->name}, {"witness", c->witness}};
    if (!artifacts_.empty()) out_["artifacts"] = artifacts_;
    if (o_.timing) {
      timing_["total"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
      out_["timing_ms"] = timing_;
    }
    emit(out_, o_);
    return report_.ok() ? kPass : kFail;
  }

  static void emit(const json& j, const Options& o) {
    const std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!o.json_out.empty()) write_file(o.json_out, text);
  }

 private:
  const Options& o_;
  json out_;
  Report report_;
  json artifacts_ = json::array();
  json timing_ = json::object();
  std::chrono::steady_clock::time_point start_, last_ = std::chrono::steady_clock::now();
};

CosetOptions coset_options(const Options& o) { return {CosetMethod::Exhaustive, o.max_order}; }

Workbench workbench(const Input& in, const Options& o) {
  return build_workbench(validate_structured(in.sg, in.n, in.z), coset_options(o));
}

int cmd_validate(const Options& o) {
  Run run("validate", o);
  Input in = load(o);
  run.result()["input"] = in.name;
  const auto ss = make_structured_unchecked(in.sg, in.n, in.z);
  const auto& f = ss.flags();
  json flags{{"structured", f.structured},           {"n_subsemigroup", f.n_subsemigroup},
             {"z_subsemigroup", f.z_subsemigroup},   {"z_central_in_n", f.z_central_in_n},
             {"z_binormal", f.z_binormal},           {"n_z_trinormal", f.n_trinormal},
             {"n_normal", f.n_normal},               {"z_normal", f.z_normal},
             {"n_binormal", f.n_binormal},           {"z_symmetric", f.z_symmetric},
             {"n_diagonal", f.n_diagonal},           {"z_diagonal", f.z_diagonal}};
  flags["zero"] = f.zero ? json(*f.zero) : json(nullptr);
  run.result()["order"] = in.sg.order();
  run.result()["flags"] = flags;
  std::string w = f.violation;
  if (!f.witness.empty()) {
    w += " at";
    for (Element x : f.witness) w += " " + in.sg.label(x);
  }
  run.check("structured", f.structured, w);
  return run.finish();
}

int cmd_cosets(const Options& o) {
  Run run("cosets", o);
  Input in = load(o);
  const auto d = make_domination(validate_structured(in.sg, in.n, in.z));
  run.phase("load");
  const auto ex = all_cosets(*d, coset_options(o));
  run.phase("exhaustive");
  const auto gen = all_cosets(*d, {CosetMethod::Generator, o.max_order});
  run.phase("generator");
  run.result()["input"] = in.name;
  run.result()["labels"] = in.sg.labels();
  run.result()["count"] = ex.size();
  json cs = json::array();
  for (ElementSet c : ex) {
    const auto rec = make_coset_record(*d, c);
    cs.push_back({{"members", set_json(c)}, {"unit", rec.is_unit}, {"directed", rec.is_directed}});
  }
  run.result()["cosets"] = cs;
  run.check("enumerators agree", ex == gen,
            std::to_string(ex.size()) + " exhaustive vs " + std::to_string(gen.size()) + " generated");
  return run.finish();
}

json groupoid_json(const CosetGroupoid& cg) {
  json cs = json::array();
  for (int c = 0; c < cg.size(); ++c)
    cs.push_back({{"id", c},
                  {"members", set_json(cg.coset(c).members)},
                  {"source", cg.g().src(c)},
                  {"range", cg.g().rng(c)},
                  {"inverse", cg.g().inv(c)},
                  {"unit", cg.g().is_unit(c)}});
  return cs;
}

int cmd_groupoid(const Options& o) {
  Run run("groupoid", o);
  Input in = load(o);
  const auto d = make_domination(validate_structured(in.sg, in.n, in.z));
  const auto cg = build_coset_groupoid(d, coset_options(o));
  run.phase("build");
  run.result()["input"] = in.name;
  run.result()["labels"] = in.sg.labels();
  run.result()["size"] = cg.size();
  run.result()["cosets"] = groupoid_json(cg);
  json slices = json::array();
  for (int a = 0; a < d->order(); ++a) slices.push_back(members(cg.slice_of(a)));
  run.result()["slices"] = slices;
  run.checks(check_groupoid(cg.g()), "groupoid: ");
  run.checks(check_etale(*cg.groupoid()), "etale: ");
  run.phase("checks");
  if (!o.dot.empty()) {
    write_file(o.dot, to_dot(cg.g(), "C"));
    run.artifact(o.dot);
  }
  return run.finish();
}

int cmd_bundle(const Options& o) {
  Run run("bundle", o);
  Input in = load(o);
  const auto d = make_domination(validate_structured(in.sg, in.n, in.z));
  const auto cg = std::make_shared<const CosetGroupoid>(build_coset_groupoid(d, coset_options(o)));
  const auto cb = build_coset_bundle(cg);
  run.phase("build");
  run.result()["input"] = in.name;
  run.result()["labels"] = in.sg.labels();
  run.result()["points"] = cb.size();
  json fibres = json::array();
  for (int c = 0; c < cg->size(); ++c) {
    json classes = json::array();
    for (const auto& p : cb.points())
      if (p.coset == c) classes.push_back(set_json(p.cls));
    fibres.push_back({{"coset", set_json(cg->coset(c).members)}, {"classes", classes}});
  }
  run.result()["fibres"] = fibres;
  run.checks(check_etale_bundle(*cb.bundle()), "bundle: ");
  run.phase("checks");
  if (!o.dot.empty()) {
    write_file(o.dot, to_dot(cb.bundle()->total->g, "CS"));
    run.artifact(o.dot);
  }
  return run.finish();
}

int cmd_filters(const Options& o) {
  Run run("filters", o);
  Input in = load(o);
  const auto w = workbench(in, o);
  run.phase("build");
  const auto& cg = *w.cg;
  run.result()["input"] = in.name;
  run.result()["labels"] = in.sg.labels();
  json dirs = json::array();
  for (int i : w.dc.ids) dirs.push_back(set_json(cg.coset(i).members));
  run.result()["directed_cosets"] = dirs;
  json tri = json::array();
  const auto rel = triangle_relation(w.dc);
  for (auto [di, c] : rel.pairs())
    tri.push_back({set_json(cg.coset(w.dc.ids[static_cast<std::size_t>(di)]).members), set_json(cg.coset(c).members)});
  run.result()["triangle"] = tri;
  PointSet mask(static_cast<std::size_t>(cg.size()));
  for (int i : w.dc.ids) mask.set(static_cast<std::size_t>(i));
  run.check("directed cosets form an ideal", is_ideal(cg.g(), mask));
  run.checks(check_etale(*w.dc.groupoid), "directed etale: ");
  run.checks(is_zakrzewski(rel).report, "triangle: ");
  run.checks(is_pierce(iota_morphism(*w.cb, w.dc, w.db)), "iota: ");
  if (w.d->ctx().flags().zero) {
    const auto ufs = ultrafilters(*w.d, o.max_order);
    json u = json::array();
    for (ElementSet f : ufs) u.push_back(set_json(f));
    run.result()["ultrafilters"] = u;
    run.checks(check_ultrafilters(cg, ufs), "ultrafilters: ");
  } else {
    run.result()["ultrafilters"] = nullptr;
  }
  run.phase("checks");
  return run.finish();
}

int cmd_faithful(const Options& o) {
  Run run("faithful", o);
  Input in = load(o);
  const auto d = make_domination(validate_structured(in.sg, in.n, in.z));
  const auto cg = std::make_shared<const CosetGroupoid>(build_coset_groupoid(d, coset_options(o)));
  const auto res = check_faithful(build_coset_bundle(cg));
  run.result()["input"] = in.name;
  run.result()["faithful"] = res.faithful;
  std::string w;
  if (res.witness) {
    run.result()["witness"] = {in.sg.label(res.witness->first), in.sg.label(res.witness->second)};
    w = "(" + in.sg.label(res.witness->first) + "," + in.sg.label(res.witness->second) + ")";
  }
  if (!d->ctx().flags().z_symmetric) run.result()["notes"] = {"SymmetryRequired"};
  run.check("faithful", res.faithful, w);
  return run.finish();
}

int cmd_theorems(const Options& o) {
  Run run("theorems", o);
  Input in = load(o);
  run.result()["input"] = in.name;
  run.checks(run_theorems(workbench(in, o)));
  run.phase("semigroup laws");
  if (in.bundle) {
    run.checks(run_bundle_theorems(in.bundle, o.max_sections), "sections: ");
    run.phase("bundle laws");
  }
  return run.finish();
}

int cmd_search(const Options& o) {
  Run run("search", o);
  const auto prop = find_property(o.property);
  if (!prop) throw Error(ErrorKind::InvalidInput, "unknown property " + o.property);
  const auto all = enumerate_structured(o.max_order, o.max_relations);
  run.phase("enumerate");
  int applicable = 0, holds = 0;
  json witnesses = json::array();
  std::string first;
  for (const auto& s : all) {
    const auto r = (*prop)(s);
    if (!r.applicable) continue;
    ++applicable;
    if (r.holds) {
      ++holds;
      continue;
    }
    if (first.empty()) first = r.witness;
    if (witnesses.size() < 10) {
      json j = semigroup_json(s.sg(), s.N(), s.Z());
      j["detail"] = r.witness;
      witnesses.push_back(std::move(j));
    }
  }
  run.phase("evaluate");
  run.result()["property"] = o.property;
  run.result()["max_order"] = o.max_order;
  run.result()["enumerated"] = all.size();
  run.result()["applicable"] = applicable;
  run.result()["holds"] = holds;
  run.result()["fails"] = applicable - holds;
  run.result()["witnesses"] = witnesses;
  run.check("property holds on every applicable structured semigroup", applicable == holds, first);
  return run.finish();
}

int cmd_fixture(const Options& o) {
  if (o.fixture.empty()) throw Error(ErrorKind::InvalidInput, "fixture needs --fixture NAME");
  const Input in = load(o);
  Run::emit(semigroup_json(in.sg, in.n, in.z), o);
  return kPass;
}

int cmd_list(const Options& o) {
  json j{{"semigroup_fixtures", semigroup_fixture_names(true)},
         {"bundle_fixtures", bundle_fixture_names()},
         {"properties", property_names()}};
  Run::emit(j, o);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite structured semigroups: cosets, groupoids, bundles and their checks"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--in", o.in, "input JSON {order, mul, N, Z, labels?}");
    c->add_option("--fixture", o.fixture, "built-in fixture name");
    c->add_option("--json", o.json_out, "also write the report to this file");
    c->add_option("--max-order", o.max_order, "largest order for exhaustive subset scans")->capture_default_str();
    c->add_option("--max-sections", o.max_sections, "largest slice-section semigroup")->capture_default_str();
    c->add_flag("--timing", o.timing, "include wall-clock timings in the report");
  };

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Cmd cmds[] = {
      {"validate", "check the structured-semigroup axioms and report flags", cmd_validate},
      {"cosets", "enumerate cosets with both enumerators", cmd_cosets},
      {"groupoid", "build the coset groupoid and check it is etale", cmd_groupoid},
      {"bundle", "build the coset bundle and check it", cmd_bundle},
      {"filters", "directed cosets, ultrafilters and the triangle relation", cmd_filters},
      {"faithful", "check whether the coset bundle separates elements", cmd_faithful},
      {"theorems", "run the full law battery", cmd_theorems},
      {"fixture", "print a fixture in the input format", cmd_fixture},
  };
  const Cmd* chosen = nullptr;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    common(sub);
    if (std::string(c.name) == "groupoid" || std::string(c.name) == "bundle")
      sub->add_option("--dot", o.dot, "write the groupoid as Graphviz DOT");
    sub->callback([&chosen, &c] { chosen = &c; });
  }
  auto* search = app.add_subcommand("search", "enumerate small structured semigroups and test a property");
  int search_order = 3;
  search->add_option("--max-order", search_order, "largest order enumerated")->capture_default_str();
  search->add_option("--property", o.property, "property name")->capture_default_str();
  search->add_option("--max-relations", o.max_relations, "most structured semigroups enumerated")->capture_default_str();
  search->add_option("--json", o.json_out, "also write the report to this file");
  search->add_flag("--timing", o.timing, "include wall-clock timings in the report");
  static const Cmd search_cmd{"search", "", cmd_search};
  search->callback([&] {
    o.max_order = search_order;
    chosen = &search_cmd;
  });
  auto* list = app.add_subcommand("list", "list fixtures and search properties");
  list->add_option("--json", o.json_out, "also write the listing to this file");
  static const Cmd list_cmd{"list", "", cmd_list};
  list->callback([&chosen] { chosen = &list_cmd; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    return chosen->run(o);
  } catch (const Error& e) {
    json j{{"status", "error"}, {"error", to_string(e.kind())}, {"message", e.what()}};
    if (!e.witness().empty()) j["witness"] = e.witness();
    if (e.kind() == ErrorKind::NotAssociative && chosen->run == cmd_validate) {
      j["status"] = "fail";
      Run::emit(j, o);
      return kFail;
    }
    Run::emit(j, o);
    return is_guard(e.kind()) ? kGuard : kInput;
  }
}
