#include "arcposet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcposet/arc_diagram.hpp"
#include "arcposet/poset.hpp"
#include "arcposet/qpoly.hpp"
#include "arcposet/rook.hpp"
#include "arcposet/theorems.hpp"

namespace arcposet::cli {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;

// Thrown for bad input that passed flag parsing (bounds, unknown elements).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_bound(const char* what, int value, int lo, int safe, int hard, bool unsafe) {
  const int hi = unsafe ? hard : safe;
  if (value < lo || value > hi) {
    std::ostringstream os;
    os << what << " must lie in " << lo << ".." << hi;
    if (!unsafe && hard > safe) os << " (up to " << hard << " with --unsafe-nmax)";
    throw UsageError(os.str());
  }
}

ArcDiagram read_diagram(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed JSON diagram: ") + e.what());
    }
    return j.get<ArcDiagram>();
  }
  return parse_diagram(text);
}

// X, Y, Z, W name diagrams of A_{2n}; anything else is a partition string.
ArcDiagram resolve(const std::string& text, std::optional<int> n) {
  if (text == "X" || text == "Y" || text == "Z" || text == "W") {
    if (!n) throw UsageError("--n is required for the named diagram " + text);
    SpecialDiagrams s = special_diagrams(*n);
    if (text == "X") return s.x;
    if (text == "Y") return s.y;
    if (text == "Z") return s.z;
    return s.w;
  }
  return read_diagram(text);
}

Universe parse_universe(const std::string& name, int n, int k) {
  if (name == "R") return Universe::full(n);
  if (name == "B") return Universe::upper(n);
  if (name == "Bnil") return Universe::strictly_upper(n);
  if (name == "E") return Universe::idempotents(n);
  if (name == "Ek") return Universe::idempotents_of_rank(n, k);
  if (name == "P") return Universe::rank_slice(n, k);
  throw UsageError("unknown universe " + name);
}

json arc_json(const ArcDiagram& a) {
  json j = a;
  j["partition"] = to_string(a);
  j["t"] = t_index(a);
  return j;
}

void emit_poset(std::ostream& out, const FinitePoset& p, const std::string& format, const std::string& name,
                json extra = json::object()) {
  if (format == "dot") {
    out << to_dot(p, {name, true});
    return;
  }
  json j = to_json(p);
  j["schema"] = kSchema;
  j["name"] = name;
  for (auto& [k, v] : extra.items()) j[k] = v;
  out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  std::optional<int> arcs;
  std::string format = "text";
};

int do_enumerate(const EnumerateArgs& a, bool unsafe, std::ostream& out) {
  check_bound("--n", a.n, 1, 9, kMaxEnumerateN, unsafe);
  std::vector<ArcDiagram> ds = a.arcs ? enumerate_with_arcs(a.n, *a.arcs) : enumerate(a.n);
  if (a.format == "text") {
    for (const ArcDiagram& d : ds) out << to_string(d) << '\n';
    return kExitOk;
  }
  json list = json::array();
  for (const ArcDiagram& d : ds) list.push_back(arc_json(d));
  json j{{"schema", kSchema}, {"n", a.n}, {"count", ds.size()}, {"diagrams", std::move(list)}};
  j["arcs"] = a.arcs ? json(*a.arcs) : json(nullptr);
  out << j.dump(2) << '\n';
  return kExitOk;
}

struct StatsArgs {
  std::string partition;
  std::string rook;
  std::string format = "text";
};

int do_stats(const StatsArgs& a, std::ostream& out) {
  if (!a.partition.empty()) {
    ArcDiagram d = read_diagram(a.partition);
    if (d.n() > 64) throw UsageError("diagrams are limited to 64 vertices");
    json arcs = json::array();
    for (const Arc& x : d.arcs()) {
      arcs.push_back({{"arc", {x.left, x.right}}, {"depth", depth_arc(d, x)}, {"cross", cross_arc(d, x)}});
    }
    json chains = json::array();
    for (const auto& c : d.chains()) chains.push_back({{"chain", c}, {"depth", depth_chain(d, c)}});
    json vertices = json::array();
    for (int v = 1; v <= d.n(); ++v) vertices.push_back(depth_vertex(d, v));
    Rook x = phi(d);
    if (a.format == "json") {
      json j{{"schema", kSchema},   {"partition", to_string(d)}, {"n", d.n()},       {"t", t_index(d)},
             {"c", c_index(d)},     {"rook", x},                 {"arcs", arcs},     {"chains", chains},
             {"vertex_depths", vertices}, {"crossings", total_crossings(d)}};
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    out << "partition: " << to_string(d) << '\n';
    out << "n: " << d.n() << '\n';
    out << "t: " << t_index(d) << '\n';
    out << "c: " << c_index(d) << '\n';
    out << "rook: " << x.to_string() << '\n';
    out << "crossings: " << total_crossings(d) << '\n';
    out << "vertex depths:";
    for (int v = 1; v <= d.n(); ++v) out << ' ' << depth_vertex(d, v);
    out << '\n';
    for (const Arc& y : d.arcs()) {
      out << "arc {" << y.left << ',' << y.right << "}: depth " << depth_arc(d, y) << ", cross "
          << cross_arc(d, y) << '\n';
    }
    for (const auto& c : d.chains()) {
      out << "chain (";
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
      out << "): depth " << depth_chain(d, c) << '\n';
    }
    return kExitOk;
  }

  Rook x = Rook::parse(a.rook);
  if (a.format == "json") {
    json j{{"schema", kSchema},      {"rook", x},
           {"rank", x.rank()},       {"length", length(x)},
           {"length_via_coinv", length_via_coinv(x)}, {"inv", inversions(x)},
           {"coinv", coinversions(x)}, {"upper", x.is_upper()},
           {"strictly_upper", x.is_strictly_upper()}, {"idempotent", x.is_idempotent()}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "rook: " << x.to_string() << '\n';
  out << "rank: " << x.rank() << '\n';
  out << "length: " << length(x) << '\n';
  out << "length via coinv: " << length_via_coinv(x) << '\n';
  out << "inv: " << inversions(x) << '\n';
  out << "coinv: " << coinversions(x) << '\n';
  out << "upper: " << (x.is_upper() ? "yes" : "no") << '\n';
  out << "strictly upper: " << (x.is_strictly_upper() ? "yes" : "no") << '\n';
  out << "idempotent: " << (x.is_idempotent() ? "yes" : "no") << '\n';
  if (x.is_strictly_upper()) out << "diagram: " << to_string(phi_inv(x)) << '\n';
  return kExitOk;
}

struct HasseArgs {
  std::string family;
  std::optional<int> n;
  int k = 0;
  std::string universe = "B";
  std::string x, y;
  std::string format = "dot";
};

// Interval of A_m between two resolved diagrams.
Subposet arc_interval(const ArcDiagram& lo, const ArcDiagram& hi, bool unsafe) {
  if (lo.n() != hi.n()) throw UsageError("interval endpoints have different vertex counts");
  check_bound("vertex count", lo.n(), 1, 7, 8, unsafe);
  auto ap = arc_poset(lo.n());
  auto at = [&](const ArcDiagram& d) {
    return static_cast<std::size_t>(std::find(ap->elements.begin(), ap->elements.end(), d) - ap->elements.begin());
  };
  return interval(ap->poset, at(lo), at(hi));
}

int do_hasse(const HasseArgs& a, bool unsafe, std::ostream& out) {
  if (a.family == "interval") {
    if (a.x.empty() || a.y.empty()) throw UsageError("--family interval needs --x and --y");
    ArcDiagram lo = resolve(a.x, a.n);
    ArcDiagram hi = resolve(a.y, a.n);
    Subposet iv = arc_interval(lo, hi, unsafe);
    emit_poset(out, iv.poset, a.format, "interval");
    return kExitOk;
  }
  if (!a.n) throw UsageError("--n is required");
  const int n = *a.n;
  if (a.family == "full") {
    check_bound("--n", n, 1, 7, 8, unsafe);
    emit_poset(out, arc_poset(n)->poset, a.format, "A_" + std::to_string(n));
    return kExitOk;
  }
  if (a.family == "stirling") {
    check_bound("--n", n, 1, 7, 8, unsafe);
    check_bound("--k", a.k, 0, n - 1, n - 1, unsafe);
    emit_poset(out, stirling_poset(n, a.k).poset, a.format,
               "A_" + std::to_string(n) + "," + std::to_string(a.k));
    return kExitOk;
  }
  // rook
  const bool full = a.universe == "R";
  check_bound("--n", n, 1, full ? 5 : 7, full ? 7 : 8, unsafe);
  Universe u = parse_universe(a.universe, n, a.k);
  emit_poset(out, rook_poset(u).poset, a.format, u.name());
  return kExitOk;
}

struct QpolyArgs {
  std::optional<int> n, k, sweep;
  std::string method = "direct";
  std::string format = "text";
};

QPolynomial compute(const std::string& method, int n, int k) {
  if (method == "direct") return bracket_direct(n, k);
  if (method == "recurrence") return bracket_recurrence(n, k);
  if (method == "gr") return gr_stirling(n, k);
  return staircase_rook_poly(n, k);
}

int do_qpoly(const QpolyArgs& a, bool unsafe, std::ostream& out) {
  const bool enumerative = a.method == "direct" || a.method == "staircase";
  const int safe = enumerative ? 8 : 30;
  const int hard = enumerative ? 9 : 200;
  if (a.sweep) {
    check_bound("--sweep", *a.sweep, 1, safe, hard, unsafe);
    out << "n,k,polynomial\n";
    for (int n = 1; n <= *a.sweep; ++n) {
      for (int k = 0; k <= n; ++k) out << n << ',' << k << ",\"" << compute(a.method, n, k).to_string() << "\"\n";
    }
    return kExitOk;
  }
  if (!a.n || !a.k) throw UsageError("qpoly needs --n and --k, or --sweep");
  check_bound("--n", *a.n, 1, safe, hard, unsafe);
  QPolynomial p = compute(a.method, *a.n, *a.k);
  if (a.format == "json") {
    json j = p;
    j["schema"] = kSchema;
    j["n"] = *a.n;
    j["k"] = *a.k;
    j["method"] = a.method;
    j["polynomial"] = p.to_string();
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "n,k,polynomial\n" << *a.n << ',' << *a.k << ",\"" << p.to_string() << "\"\n";
  } else {
    out << p.to_string() << '\n';
  }
  return kExitOk;
}

struct IntervalArgs {
  std::optional<int> n;
  std::string from, to;
  std::string format = "json";
};

int do_interval(const IntervalArgs& a, bool unsafe, std::ostream& out) {
  ArcDiagram lo = resolve(a.from, a.n);
  ArcDiagram hi = resolve(a.to, a.n);
  Subposet iv = arc_interval(lo, hi, unsafe);
  if (a.format == "dot") {
    out << to_dot(iv.poset, {"interval", true});
    return kExitOk;
  }
  const FinitePoset& p = iv.poset;
  GradedResult g = is_graded(p);
  json j = to_json(p);
  j["schema"] = kSchema;
  j["from"] = to_string(lo);
  j["to"] = to_string(hi);
  j["size"] = p.size();
  j["graded"] = g.graded;
  j["rank_length"] = p.empty() ? json(nullptr) : json(t_index(hi) - t_index(lo));
  j["lattice"] = p.empty() ? false : is_lattice(p).lattice;
  out << j.dump(2) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  bool all = false;
  std::string theorem;
  int nmax = 0;
  std::string report;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.all == !a.theorem.empty()) throw UsageError("verify needs exactly one of --all and --theorem");
  check_bound("--nmax", a.nmax, 1, 8, 8, false);
  std::vector<CheckReport> reports;
  if (a.all) {
    reports = run_all(a.nmax);
  } else {
    const auto& ids = theorem_ids();
    if (std::find(ids.begin(), ids.end(), a.theorem) == ids.end()) {
      std::string known;
      for (const auto& id : ids) known += (known.empty() ? "" : ", ") + id;
      throw UsageError("unknown theorem " + a.theorem + "; known: " + known);
    }
    reports = run_theorem(a.theorem, a.nmax);
  }
  bool passed = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  json list = json::array();
  for (const CheckReport& r : reports) list.push_back(to_json(r));
  json j{{"schema", kSchema}, {"nmax", a.nmax}, {"verdict", passed ? "pass" : "fail"}, {"reports", list}};
  const std::string text = j.dump(2) + "\n";
  out << text;
  if (!a.report.empty()) {
    std::ofstream f(a.report, std::ios::binary);
    if (!f) throw UsageError("cannot write " + a.report);
    f << text;
  }
  return passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arc-diagram posets, rook monoid orders and q-Stirling polynomials", "arcposet"};
  app.require_subcommand(1);
  app.fallthrough();
  bool unsafe = false;
  app.add_flag("--unsafe-nmax", unsafe, "Lift the default size budgets");

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "List the diagrams on n vertices");
  en->add_option("--n", ea.n, "Vertex count")->required();
  en->add_option("--arcs", ea.arcs, "Keep only diagrams with this many arcs");
  en->add_option("--format", ea.format)->check(CLI::IsMember({"text", "json"}));

  StatsArgs sa;
  auto* st = app.add_subcommand("stats", "Statistics of one diagram or rook");
  auto* sp = st->add_option("--partition", sa.partition, "Bar notation such as 18|2569|37|4, or JSON");
  auto* sr = st->add_option("--rook", sa.rook, "One-line notation a1,...,an");
  sp->excludes(sr);
  st->add_option("--format", sa.format)->check(CLI::IsMember({"text", "json"}));

  HasseArgs ha;
  auto* hs = app.add_subcommand("hasse", "Hasse diagram export");
  hs->add_option("--family", ha.family)->required()->check(CLI::IsMember({"full", "stirling", "rook", "interval"}));
  hs->add_option("--n", ha.n);
  hs->add_option("--k", ha.k, "Arc count (stirling) or rank (rook universes Ek, P)");
  hs->add_option("--universe", ha.universe, "Rook universe: R, B, Bnil, E, Ek, P")
      ->check(CLI::IsMember({"R", "B", "Bnil", "E", "Ek", "P"}));
  hs->add_option("--x", ha.x, "Interval bottom: partition or X, Y, Z, W");
  hs->add_option("--y", ha.y, "Interval top: partition or X, Y, Z, W");
  hs->add_option("--format", ha.format)->check(CLI::IsMember({"dot", "json"}));

  QpolyArgs qa;
  auto* qp = app.add_subcommand("qpoly", "q-Stirling polynomials");
  qp->add_option("--n", qa.n);
  qp->add_option("--k", qa.k);
  qp->add_option("--sweep", qa.sweep, "Emit a CSV table for all n up to this bound");
  qp->add_option("--method", qa.method)->check(CLI::IsMember({"direct", "recurrence", "gr", "staircase"}));
  qp->add_option("--format", qa.format)->check(CLI::IsMember({"text", "json", "csv"}));

  IntervalArgs ia;
  auto* iv = app.add_subcommand("interval", "Extract an interval of the arc-diagram poset");
  iv->add_option("--n", ia.n, "Parameter of the named diagrams X, Y, Z, W (they live on 2n vertices)");
  iv->add_option("--from", ia.from)->required();
  iv->add_option("--to", ia.to)->required();
  iv->add_option("--format", ia.format)->check(CLI::IsMember({"json", "dot"}));

  VerifyArgs va;
  auto* vf = app.add_subcommand("verify", "Run the theorem checks");
  vf->add_flag("--all", va.all);
  vf->add_option("--theorem", va.theorem);
  vf->add_option("--nmax", va.nmax)->required();
  vf->add_option("--report", va.report, "Also write the JSON report to this path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*en) return do_enumerate(ea, unsafe, out);
    if (*st) {
      if (sa.partition.empty() == sa.rook.empty()) throw UsageError("stats needs exactly one of --partition and --rook");
      return do_stats(sa, out);
    }
    if (*hs) return do_hasse(ha, unsafe, out);
    if (*qp) return do_qpoly(qa, unsafe, out);
    if (*iv) return do_interval(ia, unsafe, out);
    return do_verify(va, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace arcposet::cli
