// chromkh: chromatic and Khovanov homology from the command line.
//
// Exit codes: 0 ok, 1 mismatch, 2 usage or parse error, 3 resource limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chromkh/chromkh.hpp"

namespace {

using namespace chromkh;

constexpr int kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + s);
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

Range parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int a = parse_ints(s).at(0);
    return {a, a};
  }
  int a = parse_ints(s.substr(0, dots)).at(0), b = parse_ints(s.substr(dots + 2)).at(0);
  if (a > b) throw UsageError("empty range " + s);
  return {a, b};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "X[1,5,2,4] X[3,1,4,6]" on one line becomes one crossing per line.
std::string split_pd_line(const std::string& s) {
  static const std::regex before_record(R"(\s+(?=[XO](\[|\s|$)))");
  return std::regex_replace(s, before_record, "\n");
}

bool looks_like_pd(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    return line[p] == 'X' || line[p] == 'O';
  }
  return false;
}

struct ComputeArgs {
  std::string dsl, file, pd, pretzel, rational;
  int torus = 0, ld = 0, m = 2;
  std::optional<int> i_min, i_max;
  std::string j;
  bool json = false;
};

int run_compute(const ComputeArgs& a, int workers) {
  int sources = !a.dsl.empty() + !a.file.empty() + !a.pd.empty() + !a.pretzel.empty() + !a.rational.empty() +
                (a.torus != 0) + (a.ld != 0);
  if (sources != 1) throw UsageError("compute needs exactly one input source");
  if (a.m < 2) throw UsageError("-m must be at least 2");

  std::optional<LinkDiagram> diagram;
  std::optional<SimpleGraph> graph;
  if (!a.dsl.empty()) graph = build(a.dsl);
  if (!a.pd.empty()) diagram = parse_pd(split_pd_line(a.pd));
  if (!a.file.empty()) {
    std::string text = read_file(a.file);
    if (looks_like_pd(text))
      diagram = parse_pd(text);
    else
      graph = parse_graph(text);
  }
  if (!a.pretzel.empty()) diagram = pretzel_diagram(parse_ints(a.pretzel));
  if (!a.rational.empty()) {
    auto pq = parse_ints(a.rational);
    if (pq.size() != 2) throw UsageError("--rational takes P,Q");
    diagram = rational_diagram(pq[0], pq[1]);
  }
  if (a.torus) diagram = torus_diagram(a.torus);
  if (a.ld) diagram = ld_diagram(a.ld);

  std::optional<std::set<int>> js;
  if (!a.j.empty()) {
    auto v = parse_ints(a.j);
    js = std::set<int>(v.begin(), v.end());
  }

  if (graph) {
    CubeOptions co;
    co.i_min = a.i_min;
    co.i_max = a.i_max;
    co.gradings = js;
    co.workers = workers;
    BigradedGroups h = chromatic_homology(*graph, a.m, co);
    if (a.json) {
      nlohmann::json out = to_json(h);
      out["graph"] = serialize_graph(*graph);
      out["m"] = a.m;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "H_{A_" << a.m << "}, v=" << graph->vertex_count() << " e=" << graph->edge_count() << "\n"
                << render_grid(h);
    }
    return kOk;
  }

  if (a.m != 2) throw UsageError("Khovanov homology is over A_2 only");
  KhovanovOptions ko;
  ko.p_min = a.i_min;
  ko.p_max = a.i_max;
  ko.q = js;
  ko.workers = workers;
  BigradedGroups kh = khovanov_homology(*diagram, ko);
  if (a.json) {
    nlohmann::json out = to_json(kh, "p", "q");
    out["crossings"] = diagram->size();
    out["c_plus"] = diagram->c_plus();
    out["c_minus"] = diagram->c_minus();
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  GridOptions go;
  go.khovanov = true;
  std::cout << "Kh, " << diagram->size() << " crossings, c+=" << diagram->c_plus() << " c-=" << diagram->c_minus()
            << "\n"
            << render_grid(kh, go);
  auto tor = kh.torsion_by_degree(2);
  if (auto r = kh.i_range()) {
    std::cout << "Z2 exponents by p:";
    for (int p = r->first; p <= r->second; ++p) std::cout << " " << p << ":" << (tor.count(p) ? tor[p] : 0);
    std::cout << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string theorem, s, t, n, pretzel, rational, ms;
  std::optional<int> max_v;
  int sample = 200;
  std::uint64_t seed = 1;
  bool json = false;
};

int run_verify(const VerifyArgs& a, int workers) {
  VerifyConfig cfg;
  cfg.max_v = a.max_v;
  cfg.sample = a.sample;
  cfg.seed = a.seed;
  cfg.workers = workers;
  if (!a.s.empty()) cfg.s_range = parse_range(a.s);
  if (!a.t.empty()) cfg.t_range = parse_range(a.t);
  if (!a.n.empty()) cfg.n_range = parse_range(a.n);
  if (!a.pretzel.empty()) cfg.pretzel = parse_ints(a.pretzel);
  if (!a.rational.empty()) {
    auto pq = parse_ints(a.rational);
    if (pq.size() != 2) throw UsageError("--rational takes P,Q");
    cfg.rational = std::make_pair(pq[0], pq[1]);
  }
  if (!a.ms.empty()) cfg.ms = parse_ints(a.ms);
  VerifyReport rep;
  try {
    rep = verify(a.theorem, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    for (const auto& r : rep.records) {
      std::cout << (r.match ? "ok   " : "FAIL ") << r.theorem << " " << r.instance << "\n";
      if (!r.match) std::cout << "     " << to_json(r).dump() << "\n";
    }
    std::cout << rep.records.size() << " instances, " << rep.mismatches() << " mismatches\n";
  }
  return rep.all_match() ? kOk : kMismatch;
}

int run_distinguish(int v, int m, bool json, int workers) {
  if (v < 1 || v > 7) throw UsageError("--v must lie in 1..7");
  if (m < 2) throw UsageError("-m must be at least 2");
  DistinguishReport rep = distinguish(v, m, workers);
  if (json) {
    std::cout << to_json(rep).dump(2) << "\n";
    return kOk;
  }
  std::cout << "v=" << v << " m=" << m << ": " << rep.classes.size() << " cochromatic classes, " << rep.split_count()
            << " split by H^0/H^1\n";
  for (const auto& c : rep.classes) {
    if (!c.split) continue;
    std::cout << c.polynomial.str("λ") << "\n";
    for (const auto& mem : c.members) {
      std::cout << "  " << detail::graph_label(mem.graph) << "\n";
      for (int j : c.separating_j) std::cout << "    H^{1," << j << "} = " << mem.low.at(1, j).str() << "\n";
    }
  }
  return kOk;
}

int run_table(int id, bool json, int workers) {
  if (id < 1 || id > 3) throw UsageError("table id must be 1, 2 or 3");
  RenderedTable t = render_table(id, workers);
  if (json)
    std::cout << t.json.dump(2) << "\n";
  else
    std::cout << t.text;
  return t.match ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic graph homology over Z[x]/(x^m) and Khovanov homology"};
  app.require_subcommand(1);
  int workers = 1;
  int max_cube = 0;
  app.add_option("--workers", workers, "worker threads; 1 is the serial reference mode")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-cube-dim", max_cube, "largest cube dimension (same as CHROMKH_MAX_CUBE_DIM)")
      ->check(CLI::PositiveNumber);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "homology of a graph or link diagram");
  compute->add_option("--dsl", ca.dsl, "graph expression, e.g. cycle(5) or theta(3,2,3)");
  compute->add_option("--file", ca.file, "edge list or PD code file");
  compute->add_option("--pd", ca.pd, "PD code, e.g. \"X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\"");
  compute->add_option("--pretzel", ca.pretzel, "all-negative pretzel diagram a1,a2,...");
  compute->add_option("--rational", ca.rational, "rational diagram P,Q");
  compute->add_option("--torus", ca.torus, "T(2,n) diagram");
  compute->add_option("--ld", ca.ld, "LD_n diagram");
  compute->add_option("-m", ca.m, "algebra Z[x]/(x^m)");
  compute->add_option("--i-min", ca.i_min, "lowest homological degree");
  compute->add_option("--i-max", ca.i_max, "highest homological degree");
  compute->add_option("--j", ca.j, "quantum degrees to keep, comma separated");
  compute->add_flag("--json", ca.json);

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "closed forms against direct computation");
  ver->add_option("theorem", va.theorem, "one of: " + [] {
    std::string s;
    for (const auto& id : theorem_ids()) s += (s.empty() ? "" : ", ") + id;
    return s;
  }())->required();
  ver->add_option("--max-v", va.max_v, "largest vertex count in graph sweeps");
  ver->add_option("--s", va.s, "range a..b");
  ver->add_option("--t", va.t, "range a..b");
  ver->add_option("--n", va.n, "range a..b");
  ver->add_option("--pretzel", va.pretzel, "a1,a2,...");
  ver->add_option("--rational", va.rational, "P,Q");
  ver->add_option("--ms", va.ms, "algebras, comma separated");
  ver->add_option("--seed", va.seed);
  ver->add_option("--sample", va.sample, "graphs drawn at v = 7");
  ver->add_flag("--json", va.json);

  int dv = 6, dm = 3;
  bool djson = false;
  auto* dis = app.add_subcommand("distinguish", "cochromatic graphs separated by H^0 and H^1");
  dis->add_option("--v", dv, "vertex count (<= 7)");
  dis->add_option("-m", dm, "algebra Z[x]/(x^m)");
  dis->add_flag("--json", djson);

  int tid = 0;
  bool tjson = false;
  auto* tab = app.add_subcommand("table", "recompute a reference table");
  tab->add_option("id", tid, "1, 2 or 3")->required();
  tab->add_flag("--json", tjson);

  int emax = 5;
  bool experimental = false;
  auto* exp = app.add_subcommand("experiment", "conjecture observations (nothing asserted)");
  exp->add_flag("--experimental", experimental, "required acknowledgement");
  exp->add_option("--max-v", emax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (max_cube > 0) setenv("CHROMKH_MAX_CUBE_DIM", std::to_string(max_cube).c_str(), 1);

  try {
    if (*compute) return run_compute(ca, workers);
    if (*ver) return run_verify(va, workers);
    if (*dis) return run_distinguish(dv, dm, djson, workers);
    if (*tab) return run_table(tid, tjson, workers);
    if (*exp) {
      if (!experimental) throw UsageError("experiment reports unproven observations; pass --experimental");
      std::cout << experiment(emax, workers).dump(2) << "\n";
      return kOk;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const DslError& e) {
    std::cerr << "graph expression " << e.what() << "\n";
    return kUsage;
  } catch (const PdError& e) {
    std::cerr << "PD code " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "graph file: " << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "graph: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
