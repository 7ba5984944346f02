// circ3: command-line front end. Exit codes: 0 positive verdict or success,
// 1 negative verdict, 2 usage or input error, 3 internal failure.

#include "circ3/chromatic.hh"
#include "circ3/circular_arc.hh"
#include "circ3/ebs.hh"
#include "circ3/error.hh"
#include "circ3/extension.hh"
#include "circ3/json_io.hh"
#include "circ3/obstructions.hh"
#include "circ3/representation.hh"
#include "circ3/sweep.hh"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace circ3;

namespace {

struct Options {
  bool json_errors = false;
  bool unsafe = false;
  int max_exponential = SizeGuard{}.exponential;
  int max_hom = SizeGuard{}.hom;
  std::string input = "-";
  std::string cert;
  std::string kind;
  std::string route = "all";
  bool exact = false;
  bool spanning = false;
  int cap = 0;
  int n = 6;
  std::string check = "all";
  int threads = 0;
};

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

SizeGuard guard(const Options& o) {
  const SizeGuard def;
  if ((o.max_exponential != def.exponential || o.max_hom != def.hom) && !o.unsafe)
    throw InputError("raising the size guards requires --unsafe-size");
  return {o.max_exponential, o.max_hom};
}

int recognize(const Options& o) {
  const Graph g = read_graph_file(o.input);
  if (auto w = classify_free(g)) {
    std::cout << "OBSTRUCTION " << pattern_name(w->kind);
    for (int v : w->vertices) std::cout << ' ' << v;
    std::cout << '\n';
    return 1;
  }
  std::cout << "FREE\n";
  return 0;
}

int extend(const Options& o) {
  const Graph g = read_graph_file(o.input);
  const auto r = o.spanning ? spanning_free_extension(g) : to_maximal_triangle_free(g);
  print({{"spanning", o.spanning}, {"graph", to_json(r.graph)}, {"trace", to_json(r.trace)}});
  return 0;
}

int represent(const Options& o) {
  const Graph g = read_graph_file(o.input);
  const auto r = find_circle_representation(g, o.cap);
  switch (r.outcome) {
    case RepresentationOutcome::Represented:
      print(to_json(r.rep, r.k));
      return 0;
    case RepresentationOutcome::Obstructed:
      print({{"obstruction", to_json(*r.obstruction)}});
      return 1;
    case RepresentationOutcome::CapExhausted:
      print({{"cap_exhausted", r.cap}});
      return 1;
  }
  return 3;
}

int chic(const Options& o) {
  const Graph g = read_graph_file(o.input);
  if (o.exact) {
    if (g.order() > guard(o).hom) throw InputError("graph too large for exact search; see --unsafe-size");
    std::cout << chi_c_exact(g).to_string() << '\n';
    return 0;
  }
  const auto route = parse_route(o.route);
  if (!route) throw InputError("unknown route " + o.route);
  const auto v = chi_c_below_three(g, *route, guard(o));
  print(to_json(v));
  return v.below_three ? 0 : 1;
}

int arcs(const Options& o) {
  const Graph g = read_graph_file(o.input);
  if (auto m = arc_model(g)) {
    print(to_json(*m));
    return 0;
  }
  print({{"obstruction", to_json(*is_uca_alpha_lt_3(g))}, {"in", "complement"}});
  return 1;
}

int ebs_check(const Options& o) {
  const auto a = ebs_from_json(read_json(o.input));
  const auto report = check_universal_axioms(a);
  print(to_json(report));
  return report.ok() ? 0 : 1;
}

int ebs_embed(const Options& o) {
  const auto a = ebs_from_json(read_json(o.input));
  const auto rep = incremental_embed(a);
  print(to_json(rep, 0));
  return 0;
}

int sweep(const Options& o) {
  const auto check = parse_check(o.check);
  if (!check) throw InputError("unknown check " + o.check);
  int status = 0;
  for (const auto& s : run_sweep(o.n, *check, o.threads)) {
    std::cout << "check=" << check_name(s.check) << " n=" << s.n << " graphs=" << s.graphs
              << " positive=" << s.positive << " failures=" << s.failures << '\n';
    if (s.first) {
      std::cout << "  first failure: code=" << s.first->code << ' ' << s.first->reason << '\n';
      status = 3;
    }
  }
  return status;
}

bool verify_extension(const Graph& g, const Json& c) {
  const Graph h = graph_from_json(c.at("graph"));
  const bool span = c.value("spanning", false);
  if (!(replay(g, trace_from_json(c.at("trace"))) == h)) return false;
  if (!is_free(h) || !is_maximal_triangle_free(h)) return false;
  if (span) {
    if (h.order() != g.order()) return false;
    for (auto [u, v] : g.edges())
      if (!h.adjacent(u, v)) return false;
    return true;
  }
  if (h.order() < g.order()) return false;
  VertexSet first(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) first[i] = i;
  return h.induced(first) == g;
}

int verify(const Options& o) {
  const Graph g = read_graph_file(o.input);
  const Json c = read_json(o.cert);
  bool ok = false;
  try {
    if (o.kind == "representation") {
      ok = c.contains("obstruction") ? verify_witness(g, obstruction_from_json(c.at("obstruction")))
                                     : verify_representation(g, representation_from_json(c));
    } else if (o.kind == "obstruction") {
      ok = verify_witness(g, obstruction_from_json(c.contains("obstruction") ? c.at("obstruction") : c));
    } else if (o.kind == "arcs") {
      ok = c.contains("obstruction") ? verify_witness(complement(g), obstruction_from_json(c.at("obstruction")))
                                     : verify_arc_model(g, arcs_from_json(c));
    } else if (o.kind == "chic") {
      ok = verify_certificate(g, verdict_from_json(c));
    } else if (o.kind == "extension") {
      ok = verify_extension(g, c);
    } else {
      throw InputError("unknown certificate kind " + o.kind);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  std::cout << (ok ? "VALID" : "INVALID") << '\n';
  return ok ? 0 : 1;
}

void report_error(const Options& o, const char* kind, const std::string& what, const std::string& witness = {}) {
  if (o.json_errors) {
    Json j = {{"error", kind}, {"message", what}};
    if (!witness.empty()) j["witness"] = witness;
    std::cerr << j.dump() << '\n';
  } else {
    std::cerr << "circ3: " << what;
    if (!witness.empty()) std::cerr << " (witness: " << witness << ")";
    std::cerr << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circular triangle-free graphs: recognition, representations and certificates"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_errors, "Machine-readable errors on stderr");
  app.add_flag("--unsafe-size", o.unsafe, "Allow raising the size guards");
  app.add_option("--max-exponential", o.max_exponential, "Vertex limit for the exponential routes");
  app.add_option("--max-hom", o.max_hom, "Vertex limit for homomorphism searches");

  auto graph_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", o.input, "Graph file, '-' for stdin")->required();
    return c;
  };
  auto* rec = graph_cmd("recognize", "Decide membership in the age of C3");
  auto* ext = graph_cmd("extend", "Extend a free graph to a maximal triangle-free free graph");
  ext->add_flag("--spanning", o.spanning, "Keep the vertex set, add edges only");
  auto* rep = graph_cmd("represent", "Circle representation or obstruction");
  rep->add_option("--cap", o.cap, "Largest clique index tried");
  auto* chc = graph_cmd("chic", "Decide chi_c < 3 with a certificate");
  chc->add_option("--route", o.route, "hom|spanning|brandt|complement|all");
  chc->add_flag("--exact", o.exact, "Print chi_c as p/q");
  auto* arc = graph_cmd("arcs", "Unit Helly circular-arc model with independence number < 3");
  auto* ebs = app.add_subcommand("ebs", "EBS structures");
  ebs->require_subcommand(1);
  auto* ebs_chk = ebs->add_subcommand("check", "Evaluate the universal axioms");
  ebs_chk->add_option("file", o.input, "Structure JSON")->required();
  auto* ebs_emb = ebs->add_subcommand("embed", "Embed into the circle point by point");
  ebs_emb->add_option("file", o.input, "Structure JSON")->required();
  auto* swp = app.add_subcommand("sweep", "Exhaustive checks over all labeled graphs");
  swp->add_option("--n", o.n, "Number of vertices (at most 7)")->required();
  swp->add_option("--check", o.check, "ageC3|chic|uca|extension|all");
  swp->add_option("--threads", o.threads, "Worker count (default: CIRC3_THREADS or all cores)");
  auto* ver = app.add_subcommand("verify", "Re-check a certificate");
  ver->add_option("kind", o.kind, "representation|obstruction|arcs|chic|extension")->required();
  ver->add_option("graph", o.input, "Graph file")->required();
  ver->add_option("certificate", o.cert, "Certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    report_error(o, "usage", e.what());
    return 2;
  }

  try {
    if (*rec) return recognize(o);
    if (*ext) return extend(o);
    if (*rep) return represent(o);
    if (*chc) return chic(o);
    if (*arc) return arcs(o);
    if (*ebs_chk) return ebs_check(o);
    if (*ebs_emb) return ebs_embed(o);
    if (*swp) return sweep(o);
    if (*ver) return verify(o);
  } catch (const PreconditionError& e) {
    report_error(o, "precondition", e.what(), e.witness());
    return 2;
  } catch (const InputError& e) {
    report_error(o, "input", e.what());
    return 2;
  } catch (const InternalError& e) {
    report_error(o, "internal", e.what());
    return 3;
  }
  return 2;
}
