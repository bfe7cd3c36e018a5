#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "ftc/coloring.hpp"
#include "ftc/complex.hpp"
#include "ftc/io.hpp"
#include "ftc/witness.hpp"
#include "headline.hpp"

using json = nlohmann::ordered_json;
using namespace ftc;

namespace {

enum Exit { proven = 0, usage = 1, bounds_only = 2, internal = 3 };

struct Globals {
  std::string format = "text";
  unsigned threads = 1;
  std::size_t budget = 1'000'000;
  std::size_t node_budget = 200'000'000;
  double time_limit = 0;
  bool force = false;

  bool json() const { return format == "json"; }
  SearchConfig search() const {
    SearchConfig c;
    c.budget = budget;
    c.node_budget = node_budget;
    c.threads = threads;
    c.force = force;
    if (time_limit > 0) c.time_limit = std::chrono::milliseconds(static_cast<long>(time_limit * 1000));
    return c;
  }
  HomotopyOptions homotopy() const {
    HomotopyOptions o;
    o.budget = budget;
    return o;
  }
};

json envelope(const std::string& command) { return json{{"schema", 1}, {"command", command}}; }

json ids(const PointSet& s) { return s.members(); }

json fence_json(const Fence& f) {
  json out = json::array();
  for (const auto& m : f.maps()) out.push_back(m.table());
  return out;
}

json verdict_json(const HomotopyVerdict& v) {
  json j{{"verdict", to_string(v.result)}, {"reason", v.reason}};
  if (v.certificate) j["certificate"] = fence_json(*v.certificate);
  if (!v.obstruction.empty()) j["obstruction"] = v.obstruction;
  return j;
}

std::string labels(const FiniteSpace& x, const PointSet& s) {
  std::string out;
  s.for_each([&](Point p) { out += (out.empty() ? "" : " ") + x.label(p); });
  return out.empty() ? "-" : out;
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json()) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

/// Map table given as ids or as a circle map.
OrderMap read_map(const std::string& text, const SpacePtr& source, const SpacePtr& target) {
  if (text.rfind("circlemap", 0) == 0) {
    CircleMap f = parse_circle_map(text);
    OrderMap m = to_order_map(f);
    if (!same_space(m.source(), source) || !same_space(m.target(), target))
      throw Error(ErrorCode::mismatched_spaces, "circle map sizes do not match the spaces");
    return OrderMap(source, target, m.table());
  }
  std::istringstream in(text);
  std::vector<Point> table;
  long v;
  while (in >> v) {
    if (v < 0 || static_cast<std::size_t>(v) >= target->size())
      throw Error(ErrorCode::parse_error, "map value out of range: " + std::to_string(v));
    table.push_back(static_cast<Point>(v));
  }
  if (!in.eof()) throw Error(ErrorCode::parse_error, "map tables are lists of ids");
  if (table.size() != source->size())
    throw Error(ErrorCode::mismatched_spaces, "map table has " + std::to_string(table.size()) +
                                                  " entries, the source has " + std::to_string(source->size()));
  return OrderMap(source, target, std::move(table));
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

// ---------------------------------------------------------------------------

int cmd_space(const Globals& g, const std::string& spec, bool dot, const std::string& out) {
  SpacePtr x = load_space(spec);
  if (!out.empty()) {
    std::ostringstream s;
    write_space(s, *x);
    write_file(out, s.str());
  }
  if (dot) {
    std::cout << hasse_dot(*x);
    return proven;
  }
  auto beats = beat_points(*x);
  auto chart = circle_chart(*x);
  const bool contractible = is_contractible(x);
  json j = envelope("space");
  j["name"] = x->name();
  j["size"] = x->size();
  json covers = json::array();
  for (const auto& c : x->covers()) covers.push_back({c.lo, c.hi});
  j["covers"] = covers;
  j["minimal"] = ids(minimal_elements(*x));
  j["maximal"] = ids(maximal_elements(*x));
  json bj = json::array();
  for (const auto& b : beats) bj.push_back({{"point", b.point}, {"kind", b.kind == BeatKind::up ? "up" : "down"}});
  j["beat_points"] = bj;
  j["circle"] = chart ? json(chart->n) : json(nullptr);
  j["contractible"] = contractible;
  std::ostringstream t;
  t << "space " << x->name() << " (" << x->size() << " points, " << x->covers().size() << " covers)\n";
  t << "minimal: " << labels(*x, minimal_elements(*x)) << "\n";
  t << "maximal: " << labels(*x, maximal_elements(*x)) << "\n";
  t << "beat points: " << beats.size() << "\n";
  t << "circle: " << (chart ? "half-size " + std::to_string(chart->n) : std::string("no")) << "\n";
  t << "contractible: " << (contractible ? "yes" : "no") << "\n";
  emit(g, j, t.str());
  return proven;
}

int cmd_core(const Globals& g, const std::string& spec, const std::string& priority, const std::string& out) {
  SpacePtr x = load_space(spec);
  std::vector<Point> order;
  if (!priority.empty()) order = parse_ids(priority, x->size()).members();
  CoreResult r = core(x, order);
  if (!out.empty()) {
    std::ostringstream s;
    write_space(s, *r.core);
    write_file(out, s.str());
  }
  json j = envelope("core");
  json removals = json::array();
  std::ostringstream t;
  t << "removed " << r.sequence.removals.size() << " beat points:";
  for (const auto& b : r.sequence.removals) {
    removals.push_back({{"point", b.point}, {"kind", b.kind == BeatKind::up ? "up" : "down"}, {"witness", b.witness}});
    t << ' ' << x->label(b.point) << (b.kind == BeatKind::up ? "(up)" : "(down)");
  }
  t << "\ncore: " << r.core->size() << " points: " << labels(*x, r.sequence.remaining) << "\n";
  auto chart = recognize_circle(*r.core);
  t << "core is " << (r.core->size() == 1 ? "a point" : chart ? "a circle of half-size " + std::to_string(chart->n)
                                                                : "not a point or circle")
    << "\nfence to the retraction: " << r.fence.length() << " steps\n";
  j["removals"] = removals;
  j["core"] = r.core_to_parent;
  j["circle"] = chart ? json(chart->n) : json(nullptr);
  j["fence"] = fence_json(r.fence);
  emit(g, j, t.str());
  return proven;
}

int cmd_homotopic(const Globals& g, const std::string& source, const std::string& target, const std::string& f_text,
                  const std::string& g_text, const std::string& strategy, const std::string& cert_out) {
  SpacePtr x, y;
  const bool circles = f_text.rfind("circlemap", 0) == 0 && g_text.rfind("circlemap", 0) == 0;
  if (circles && source.empty() && target.empty()) {
    CircleMap cf = parse_circle_map(f_text);
    CircleMap cg = parse_circle_map(g_text);
    if (cf.m != cg.m || cf.n != cg.n) throw Error(ErrorCode::mismatched_spaces, "circle maps between different circles");
    x = khalimsky_circle(cf.m).space;
    y = khalimsky_circle(cf.n).space;
  } else {
    if (source.empty() || target.empty()) throw Error(ErrorCode::invalid_parameter, "--source and --target are required");
    x = load_space(source);
    y = load_space(target);
  }
  OrderMap f = read_map(f_text, x, y);
  OrderMap h = read_map(g_text, x, y);
  HomotopyOptions opt = g.homotopy();
  auto s = parse_strategy(strategy);
  if (!s) throw Error(ErrorCode::invalid_parameter, "unknown strategy " + strategy);
  opt.strategy = *s;
  auto v = homotopic(f, h, opt);
  if (v.certificate && !cert_out.empty()) {
    std::ostringstream o;
    write_fence(o, *v.certificate);
    write_file(cert_out, o.str());
  }
  json j = envelope("homotopic");
  j.update(verdict_json(v));
  std::ostringstream t;
  t << to_string(v.result) << "\n" << v.reason << "\n";
  if (v.certificate) t << "certificate: fence of " << v.certificate->length() << " steps\n";
  if (!v.obstruction.empty()) {
    t << "obstruction:";
    for (Point p : v.obstruction) t << ' ' << x->label(p);
    t << "\n";
  }
  emit(g, j, t.str());
  return v.result == Verdict::unknown ? bounds_only : proven;
}

int cmd_degree(const Globals& g, const std::string& text) {
  CircleMap f = parse_circle_map(text);
  LiftRecord l = lift(f, 0, 2L * f.m, f.table[0]);
  json j = envelope("degree");
  j["map"] = format_circle_map(f);
  j["degree"] = *l.degree;
  j["lift"] = l.values;
  std::ostringstream t;
  t << "degree " << *l.degree << "\nlift:";
  for (long v : l.values) t << ' ' << v;
  t << "\n";
  emit(g, j, t.str());
  return proven;
}

int cmd_classify(const Globals& g, const std::string& f_text, const std::string& g_text, bool fence) {
  CircleMap f = parse_circle_map(f_text);
  CircleMap h = parse_circle_map(g_text);
  if (f.m != h.m || f.n != h.n) throw Error(ErrorCode::mismatched_spaces, "circle maps between different circles");
  const bool same = classify_homotopic(f, h);
  const long df = degree(f), dh = degree(h);
  json j = envelope("classify");
  j["homotopic"] = same;
  j["degrees"] = {df, dh};
  j["rule"] = "equal maps, or equal degree d with |d| * n < m";
  std::ostringstream t;
  t << (same ? "Homotopic" : "NotHomotopic") << "\ndegrees " << df << " and " << dh << " (m=" << f.m << ", n=" << f.n
    << ")\n";
  if (fence && same) {
    auto steps = circle_fence(f, h);
    json fj = json::array();
    t << "fence:\n";
    for (const auto& s : *steps) {
      fj.push_back(s.table);
      t << "  " << format_circle_map(s) << "\n";
    }
    j["fence"] = fj;
  }
  emit(g, j, t.str());
  return proven;
}

json level_json(const Level& l) {
  json j{{"pieces", l.pieces},
         {"outcome", to_string(l.outcome)},
         {"nodes", l.nodes},
         {"pieces_checked", l.pieces_checked},
         {"pieces_unknown", l.pieces_unknown}};
  if (!l.note.empty()) j["note"] = l.note;
  return j;
}

int report_invariant(const Globals& g, const InvariantResult& r, const std::string& command) {
  json j = envelope(command);
  j["lower"] = r.lower;
  j["upper"] = r.upper ? json(*r.upper) : json(nullptr);
  j["exact"] = r.exact();
  if (!r.lower_reason.empty()) j["lower_reason"] = r.lower_reason;
  json levels = json::array();
  for (const auto& l : r.levels) levels.push_back(level_json(l));
  j["levels"] = levels;
  std::ostringstream t;
  if (r.exact()) t << r.lower << "\n";
  else t << "bounds " << r.lower << " <= " << command << " <= " << (r.upper ? std::to_string(*r.upper) : "?") << "\n";
  if (!r.lower_reason.empty()) t << "lower bound: " << r.lower_reason << "\n";
  for (const auto& l : r.levels)
    t << "  " << l.pieces << " pieces: " << to_string(l.outcome) << " (" << l.nodes << " nodes"
      << (l.note.empty() ? "" : ", " + l.note) << ")\n";
  if (r.witness) {
    json pieces = json::array();
    for (std::size_t i = 0; i < r.witness->pieces.size(); ++i) {
      json p{{"points", ids(r.witness->pieces[i].members())}};
      if (i < r.witness->certificates.size()) p.update(verdict_json(r.witness->certificates[i]));
      pieces.push_back(p);
      t << "  piece " << i << ": " << r.witness->pieces[i].size() << " points, "
        << (i < r.witness->certificates.size() ? std::string(to_string(r.witness->certificates[i].result)) : "-")
        << "\n";
    }
    j["witness"] = pieces;
  }
  emit(g, j, t.str());
  return r.exact() ? proven : bounds_only;
}

int cmd_invariant(const Globals& g, Invariant kind, std::string spec, int circle, bool exact, long limit,
                  const std::string& witness) {
  if (circle > 0) {
    if (!spec.empty()) throw Error(ErrorCode::invalid_parameter, "give a space or --circle, not both");
    spec = "circle:" + std::to_string(circle);
  }
  if (spec.empty()) throw Error(ErrorCode::invalid_parameter, "no space given");
  if (exact == !witness.empty()) throw Error(ErrorCode::invalid_parameter, "choose exactly one of --exact and --witness");
  SpacePtr x = load_space(spec);
  const std::string name(to_string(kind));
  if (exact) {
    auto r = kind == Invariant::cat ? cat_exact(x, limit, g.search()) : tc_exact(x, limit, g.search());
    return report_invariant(g, r, name);
  }
  std::istringstream in(read_file(witness));
  Cover cover = read_cover(in, search_space(x, kind));
  auto r = kind == Invariant::cat ? cat_witness(cover, g.search()) : tc_witness(cover, g.search());
  return report_invariant(g, r, name);
}

int cmd_colorings(const Globals& g, int n, int colors, const std::string& symmetry, bool argue) {
  if (symmetry != "full" && symmetry != "none") throw Error(ErrorCode::invalid_parameter, "symmetry is full or none");
  auto grid = square_grid(n);
  auto classes = enumerate_simple_colorings(grid, colors, symmetry == "full" ? Symmetry::full : Symmetry::none);
  json j = envelope("colorings");
  j["n"] = n;
  j["colors"] = colors;
  j["symmetry"] = symmetry;
  json cj = json::array();
  std::ostringstream t;
  t << classes.size() << " classes of simple colorings\n";
  for (const auto& c : classes) {
    cj.push_back({{"representative", to_string(c.representative)}, {"members", c.members.size()}});
    t << "  " << to_string(c.representative) << "  (" << c.members.size() << " colorings)\n";
  }
  j["classes"] = cj;
  int code = proven;
  if (argue) {
    if (colors != 2) throw Error(ErrorCode::invalid_parameter, "--check needs --colors 2");
    auto arg = two_piece_argument(n, g.search());
    j["check"] = {{"colorings", arg.colorings},
                  {"with_line", arg.with_line},
                  {"simple", arg.simple},
                  {"refuted", arg.refutations.size()},
                  {"undecided", arg.undecided},
                  {"two_pieces_impossible", arg.impossible()}};
    t << arg.colorings << " colorings: " << arg.with_line << " hold a monochromatic line, " << arg.simple
      << " simple, " << arg.refutations.size() << " refuted piecewise, " << arg.undecided << " undecided\n";
    t << (arg.impossible() ? "no 2-piece cover exists\n" : "2-piece covers not ruled out\n");
    if (!arg.impossible()) code = bounds_only;
  }
  emit(g, j, t.str());
  return code;
}

int cmd_verify_witness(const Globals& g, int k, const std::string& report, const std::string& variant,
                       const std::string& cover_out) {
  if (report != "text" && report != "json") throw Error(ErrorCode::invalid_parameter, "report is text or json");
  ChainVariant v = ChainVariant::repaired;
  if (variant == "literal") v = ChainVariant::literal;
  else if (variant != "repaired") throw Error(ErrorCode::invalid_parameter, "variant is repaired or literal");
  WitnessReport r = verify_bundle(k, v, g.homotopy());
  if (!cover_out.empty()) {
    Cover cover{witness_space(k), {build_U(k), build_V(k)}, {}};
    std::ostringstream o;
    write_cover(o, cover);
    write_file(cover_out, o.str());
  }
  json j = envelope("verify-witness");
  j["k"] = r.k;
  j["m"] = r.m;
  j["variant"] = to_string(r.variant);
  json stages = json::array();
  for (const auto& s : r.stages) {
    json sj{{"name", s.name},         {"domain", s.domain_size},    {"image", s.image_size},
            {"continuous", s.continuous}, {"into_domain", s.into_domain}, {"fixes_image", s.fixes_image},
            {"against_previous", to_string(s.against_previous)}};
    if (!s.violation.empty()) sj["violation"] = s.violation;
    stages.push_back(sj);
  }
  j["stages"] = stages;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  auto open_json = [](const OpenSetReport& o) {
    return json{{"size", o.size},
                {"core_size", o.core_size},
                {"circle", o.circle_n ? json(*o.circle_n) : json(nullptr)},
                {"degrees", o.degree1 ? json{*o.degree1, *o.degree2} : json(nullptr)},
                {"verdict", to_string(o.verdict)}};
  };
  j["U"] = open_json(r.U);
  j["V"] = open_json(r.V);
  j["n_C"] = r.n_C ? json(*r.n_C) : json(nullptr);
  j["claimed_n"] = r.claimed_n;
  j["a5_inferred"] = r.a5_inferred;
  j["divergences"] = r.divergences;
  j["passed"] = r.passed();

  std::ostringstream t;
  t << "k=" << r.k << " m=" << r.m << " (" << to_string(r.variant) << " chain)\n";
  t << "U: " << r.U.size << " points, V: " << r.V.size << " points\n";
  for (const auto& s : r.stages) {
    t << "  " << s.name << ": " << s.domain_size << " -> " << s.image_size << ", "
      << (s.continuous ? "continuous" : "NOT continuous (" + s.violation + ")") << ", "
      << to_string(s.against_previous) << " previous" << (s.into_domain ? "" : ", leaves domain")
      << (s.fixes_image ? "" : ", moves its image") << "\n";
  }
  int i = 1;
  for (const auto& c : r.checks) t << (c.passed ? "PASS " : "FAIL ") << i++ << ". " << c.name << ": " << c.detail << "\n";
  t << "n_C = " << (r.n_C ? std::to_string(*r.n_C) : "-") << " (claimed " << r.claimed_n << ")\n";
  for (const auto& d : r.divergences) t << "note: " << d << "\n";
  t << (r.passed() ? "witness verified\n" : "witness NOT verified\n");
  if (report == "json") std::cout << j.dump(2) << '\n';
  else std::cout << t.str();
  return r.passed() ? proven : bounds_only;
}

int cmd_export_complex(const Globals& g, const std::string& spec, const std::string& out, const std::string& dot) {
  SpacePtr x = load_space(spec);
  SimplicialComplex k = order_complex(*x);
  if (out == "-") {
    if (k.vertices.empty()) throw Error(ErrorCode::invalid_parameter, "refusing to export an empty complex");
    write_asc(std::cout, k);
  } else {
    export_complex(k, out);
  }
  if (!dot.empty()) export_hasse_dot(*x, dot);
  if (out != "-") {
    json j = envelope("export-complex");
    j["vertices"] = k.vertices.size();
    j["facets"] = k.facets.size();
    j["dimension"] = k.dimension();
    j["path"] = out;
    std::ostringstream t;
    t << "wrote " << k.facets.size() << " facets on " << k.vertices.size() << " vertices (dimension "
      << k.dimension() << ") to " << out << "\n";
    emit(g, j, t.str());
  }
  return proven;
}

int cmd_reproduce(const Globals& g) {
  auto rows = cli::headline_table(g.search());
  bool all = true;
  json j = envelope("reproduce-paper");
  json rj = json::array();
  for (const auto& r : rows) {
    all = all && r.agrees;
    rj.push_back({{"quantity", r.quantity}, {"expected", r.expected}, {"computed", r.computed}, {"method", r.method},
                  {"agrees", r.agrees}});
  }
  j["rows"] = rj;
  emit(g, j, cli::render_table(rows));
  return proven;
}

std::size_t default_budget() {
  const char* env = std::getenv("FTC_BUDGET");
  if (!env || !*env) return 1'000'000;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error(ErrorCode::invalid_parameter, "FTC_BUDGET must be a positive integer");
  return static_cast<std::size_t>(v);
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::budget_exceeded: return bounds_only;
    case ErrorCode::internal: return internal;
    default: return usage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  try {
    g.budget = default_budget();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }

  CLI::App app{"Homotopy invariants of finite spaces and Khalimsky circles"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Map budget per homotopy decision (default from FTC_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-budget", g.node_budget, "Search node budget per level")->check(CLI::PositiveNumber);
  app.add_option("--time-limit", g.time_limit, "Seconds per search level (0 = none)")->check(CLI::NonNegativeNumber);
  app.add_flag("--force", g.force, "Search beyond the size gate");

  std::string spec, out, dot_out, priority, source, target, f_text, g_text, strategy = "auto", cert, witness;
  std::vector<std::string> words;
  bool dot = false, exact = false, fence = false, argue = false;
  long limit = 3;
  int circle = 0, n = 4, colors = 2, k = 5;
  std::string symmetry = "full", report = "text", variant = "repaired";

  auto* space = app.add_subcommand("space", "Describe a space, write it, or print its Hasse diagram");
  space->add_option("spec", spec, "File or circle:N, interval:K:L, point, joined by *")->required();
  space->add_flag("--dot", dot, "Print DOT");
  space->add_option("--out", out, "Write the space file");

  auto* core_cmd = app.add_subcommand("core", "Remove beat points down to the core");
  core_cmd->add_option("spec", spec)->required();
  core_cmd->add_option("--priority", priority, "Removal priority as an id list");
  core_cmd->add_option("--out", out, "Write the core as a space file");

  auto* hom = app.add_subcommand("homotopic", "Decide whether two maps are homotopic");
  hom->add_option("--source", source, "Source space");
  hom->add_option("--target", target, "Target space");
  hom->add_option("f", f_text, "Value table or circlemap")->required();
  hom->add_option("g", g_text, "Value table or circlemap")->required();
  hom->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "fence-bfs", "core-degree", "exhaustive-components"}));
  hom->add_option("--certificate", cert, "Write the fence here");

  auto* deg = app.add_subcommand("degree", "Degree of a circle map");
  deg->add_option("map", words, "circlemap m n v0 ...")->required();

  auto* cls = app.add_subcommand("classify", "Classify two circle maps up to homotopy");
  cls->add_option("f", f_text, "circlemap m n v0 ...")->required();
  cls->add_option("g", g_text, "circlemap m n v0 ...")->required();
  cls->add_flag("--fence", fence, "Print a fence when homotopic");

  auto add_invariant = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("spec", spec, "Space");
    c->add_option("--circle", circle, "Use the circle on 2N points")->check(CLI::Range(2, 64));
    c->add_flag("--exact", exact, "Exact search");
    c->add_option("--limit", limit, "Largest value tried by exact search")->check(CLI::NonNegativeNumber);
    c->add_option("--witness", witness, "Cover file to certify");
    return c;
  };
  auto* cat_cmd = add_invariant("cat", "Category of a space");
  auto* tc_cmd = add_invariant("tc", "Topological complexity of a space");

  auto* col = app.add_subcommand("colorings", "Simple colorings of the square grid");
  col->add_option("--n", n)->check(CLI::Range(2, 6));
  col->add_option("--colors", colors)->check(CLI::Range(1, 9));
  col->add_option("--symmetry", symmetry)->check(CLI::IsMember({"full", "none"}));
  col->add_flag("--check", argue, "Also rule out 2-piece covers colouring by colouring");

  auto* vw = app.add_subcommand("verify-witness", "Build and check the two-set cover for k >= 5");
  vw->add_option("--k", k)->required()->check(CLI::Range(5, 64));
  vw->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
  vw->add_option("--variant", variant)->check(CLI::IsMember({"repaired", "literal"}));
  vw->add_option("--write-cover", out, "Write {U, V} as a cover file");

  auto* ex = app.add_subcommand("export-complex", "Write the order complex as .asc");
  ex->add_option("spec", spec)->required();
  ex->add_option("--out", out, "Output path, - for stdout")->required();
  ex->add_option("--dot", dot_out, "Also write the Hasse diagram");

  auto* rp = app.add_subcommand("reproduce-paper", "Recompute the headline values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? proven : usage;
  }

  try {
    if (space->parsed()) return cmd_space(g, spec, dot, out);
    if (core_cmd->parsed()) return cmd_core(g, spec, priority, out);
    if (hom->parsed()) return cmd_homotopic(g, source, target, f_text, g_text, strategy, cert);
    if (deg->parsed()) return cmd_degree(g, joined(words));
    if (cls->parsed()) return cmd_classify(g, f_text, g_text, fence);
    if (cat_cmd->parsed()) return cmd_invariant(g, Invariant::cat, spec, circle, exact, limit, witness);
    if (tc_cmd->parsed()) return cmd_invariant(g, Invariant::tc, spec, circle, exact, limit, witness);
    if (col->parsed()) return cmd_colorings(g, n, colors, symmetry, argue);
    if (vw->parsed()) return cmd_verify_witness(g, k, report, variant, out);
    if (ex->parsed()) return cmd_export_complex(g, spec, out, dot_out);
    if (rp->parsed()) return cmd_reproduce(g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return internal;
  }
  return usage;
}
