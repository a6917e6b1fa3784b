#include "bshopf/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "bshopf/cdindex.hpp"
#include "bshopf/chromatic.hpp"
#include "bshopf/errors.hpp"
#include "bshopf/eulerian.hpp"
#include "bshopf/symfunc.hpp"
#include "json.hpp"

namespace bshopf::cli {

using nlohmann::json;

namespace {

struct Output {
  json doc = json::object();
  std::vector<std::string> text;  // human-readable rendering
};

std::string name_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw InputError("malformed document: names must be strings or integers");
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("malformed document: missing \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_array()) throw InputError(std::string("malformed document: \"") + key + "\" must be an array");
  return v;
}

std::map<std::string, int> index_names(const json& names, std::vector<std::string>& labels) {
  std::map<std::string, int> index;
  for (const json& v : names) {
    std::string s = name_of(v);
    if (!index.emplace(s, static_cast<int>(labels.size())).second)
      throw InputError("duplicate name '" + s + "'");
    labels.push_back(std::move(s));
  }
  if (labels.size() > static_cast<std::size_t>(kMaxGround))
    throw GuardError("ground set size: " + std::to_string(labels.size()) + " exceeds limit 64");
  return index;
}

int lookup(const std::map<std::string, int>& index, const json& v) {
  const std::string s = name_of(v);
  auto it = index.find(s);
  if (it == index.end()) throw InputError("unknown name '" + s + "'");
  return it->second;
}

BuildingSet parse_building_set(const json& j) {
  std::vector<std::string> labels;
  const auto index = index_names(field(j, "ground_set"), labels);
  std::vector<Mask> gens;
  if (j.contains("generators")) {
    for (const json& g : field(j, "generators")) {
      if (!g.is_array()) throw InputError("malformed document: a generator must be an array of names");
      Mask s = 0;
      for (const json& v : g) {
        const int e = lookup(index, v);
        if (s & bit(e)) throw InputError("repeated name '" + name_of(v) + "' in a generator");
        s |= bit(e);
      }
      if (popcount(s) < 2) throw InputError("generator must have ≥ 2 elements");
      if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
    }
  }
  return closure(SetFamily(static_cast<int>(labels.size()), std::move(gens))).with_labels(labels);
}

SimpleGraph parse_graph_json(const json& j) {
  std::vector<std::string> labels;
  const auto index = index_names(field(j, "vertices"), labels);
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    for (const json& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("malformed document: an edge must be a pair of names");
      edges.emplace_back(lookup(index, e[0]), lookup(index, e[1]));
    }
  }
  const int v = static_cast<int>(labels.size());
  return SimpleGraph(v, std::move(edges), std::move(labels));
}

SimpleGraph parse_edge_lines(const std::string& doc) {
  std::map<std::string, int> index;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  auto vertex = [&](const std::string& s) {
    auto [it, inserted] = index.emplace(s, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(s);
    return it->second;
  };
  std::istringstream in(doc);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok.size() > 2)
      throw InputError("edge line " + std::to_string(lineno) + " must have one or two vertex names");
    const int a = vertex(tok[0]);
    if (tok.size() == 2) edges.emplace_back(a, vertex(tok[1]));
  }
  if (labels.size() > static_cast<std::size_t>(kMaxGround))
    throw GuardError("vertex count: " + std::to_string(labels.size()) + " exceeds limit 64");
  const int v = static_cast<int>(labels.size());
  return SimpleGraph(v, std::move(edges), std::move(labels));
}

// ---------------------------------------------------------------------------

json names(const BuildingSet& b, Mask s) {
  json out = json::array();
  for (int e : elements(s)) out.push_back(b.label(e));
  return out;
}

json name_lists(const BuildingSet& b, std::span<const Mask> sets) {
  json out = json::array();
  for (Mask s : sets) out.push_back(names(b, s));
  return out;
}

json ground_names(const BuildingSet& b) {
  json out = json::array();
  for (int i = 0; i < b.rank(); ++i) out.push_back(b.label(i));
  return out;
}

std::string show_set(const BuildingSet& b, Mask s) {
  std::string out = "{";
  for (int e : elements(s)) out += (out.size() > 1 ? "," : "") + b.label(e);
  return out + "}";
}

void require_rank(const char* command, int rank, int limit) {
  if (rank > limit)
    throw GuardError(std::string(command) + ": rank " + std::to_string(rank) + " exceeds limit " +
                     std::to_string(limit));
}

BuildingSet as_building_set(const Input& in) {
  if (const auto* b = std::get_if<BuildingSet>(&in)) return *b;
  const auto& g = std::get<SimpleGraph>(in);
  require_rank("graphical building set", g.vertex_count(), 16);
  return graphical(g);
}

const SimpleGraph& as_graph(const Input& in, const char* command) {
  if (const auto* g = std::get_if<SimpleGraph>(&in)) return *g;
  throw InputError(std::string(command) + " needs a graph document");
}

void add_values(Output& out, const JobSpec& spec, const std::function<std::int64_t(std::int64_t)>& f) {
  if (!spec.m_range) return;
  json values = json::array();
  for (std::int64_t m = spec.m_range->first; m <= spec.m_range->second; ++m) {
    const std::int64_t v = f(m);
    values.push_back({{"m", m}, {"value", v}});
    out.text.push_back("  m = " + std::to_string(m) + ": " + std::to_string(v));
  }
  out.doc["values"] = values;
}

// ---------------------------------------------------------------------------
// Commands

Output cmd_closure(const BuildingSet& b) {
  Output out;
  const Generators g = minimal_generators(b);
  out.doc = json::parse(building_set_document(b));
  out.doc["rank"] = b.rank();
  out.doc["members"] = name_lists(b, b.members());
  out.doc["minimal_generators"] = name_lists(b, g.minimal.sets());
  out.doc["connected"] = b.is_connected();
  out.text.push_back("rank: " + std::to_string(b.rank()));
  std::string line = "members:";
  for (Mask s : b.members()) line += " " + show_set(b, s);
  out.text.push_back(line);
  line = "minimal generators:";
  for (Mask s : g.minimal.sets()) line += " " + show_set(b, s);
  out.text.push_back(line);
  return out;
}

Output cmd_chi(const BuildingSet& b, const JobSpec& spec) {
  require_rank("chi", b.rank(), 16);
  Output out;
  const ChromaticPolynomial chi = chromatic_polynomial(b);
  out.doc["rank"] = b.rank();
  out.doc["coefficients"] = chi.coeffs();
  out.text.push_back("chi(m) = " + chi.to_string());
  add_values(out, spec, [&](std::int64_t m) { return chi(m); });
  return out;
}

Output cmd_csf(const BuildingSet& b, const JobSpec& spec) {
  Output out;
  out.doc["basis"] = spec.basis;
  json terms = json::array();
  if (spec.basis == "monomial") {
    require_rank("csf", b.rank(), 12);
    const QSymElement psi = psi_monomial(b);
    for (const auto& [alpha, c] : psi.terms()) {
      terms.push_back({{"composition", alpha.parts()}, {"coefficient", c}});
      out.text.push_back(std::to_string(c) + " M" + alpha.to_string());
    }
    add_values(out, spec, [&](std::int64_t m) { return specialize(psi, m); });
  } else {
    const PSymElement p = psi_powersum_subsets(b);
    if (b.rank() <= 9 && p != psi_powersum_moebius(b))
      throw CrossCheckError("power-sum expansions from subsets and from the partition lattice differ");
    if (b.rank() <= 12 && powersum_to_monomial(p) != psi_monomial(b))
      throw CrossCheckError("power-sum and monomial expansions differ");
    for (const auto& [lambda, c] : p.terms()) {
      terms.push_back({{"partition", lambda.parts()}, {"coefficient", c}});
      out.text.push_back(std::to_string(c) + " p" + lambda.to_string());
    }
    add_values(out, spec, [&](std::int64_t m) { return specialize(p, m); });
  }
  out.doc["terms"] = terms;
  return out;
}

Output cmd_zetainv(const BuildingSet& b) {
  require_rank("zetainv", b.rank(), 16);
  Output out;
  const CharacterValueReport r = zeta_inverse(b);
  out.doc = {{"zeta_inverse", r.zeta_inv},
             {"conjugate", r.conjugate},
             {"routes", {{"chromatic_polynomial", r.by_polynomial},
                         {"subset_formula", r.by_subsets},
                         {"antipode", r.by_antipode}}}};
  out.text.push_back("zeta^-1 = " + std::to_string(r.zeta_inv));
  out.text.push_back("conjugate = " + std::to_string(r.conjugate));
  return out;
}

Output cmd_eulerian(const BuildingSet& b) {
  Output out;
  json detectors = json::object();
  const bool geometric = is_eulerian_geometric(b);
  detectors["geometric"] = geometric;
  if (b.rank() <= 14) {
    const bool algebraic = is_eulerian(b), dehn_sommerville = dehn_sommerville_check(b);
    detectors["algebraic"] = algebraic;
    detectors["dehn_sommerville"] = dehn_sommerville;
    if (algebraic != geometric || dehn_sommerville != geometric)
      throw CrossCheckError("eulerian detectors disagree");
  }
  out.doc["eulerian"] = geometric;
  out.doc["detectors"] = detectors;
  out.text.push_back(std::string("eulerian: ") + (geometric ? "yes" : "no"));
  for (const auto& [name, v] : detectors.items())
    out.text.push_back("  " + name + ": " + (v.get<bool>() ? "yes" : "no"));
  if (b.rank() <= 10) {
    json violations = json::array();
    for (const auto& v : bayer_billera_check(b)) {
      violations.push_back({{"composition", v.alpha.parts()}, {"position", v.position}, {"value", v.value}});
      out.text.push_back("  violated relation at " + v.alpha.to_string() + ", part " +
                         std::to_string(v.position) + ": " + std::to_string(v.value));
    }
    out.doc["bayer_billera_violations"] = violations;
  }
  return out;
}

Output cmd_cdindex(const BuildingSet& b) {
  require_rank("cdindex", b.rank(), 12);
  if (b.rank() < 1) throw InputError("cd-index needs rank >= 1");
  Output out;
  const CDPolynomial phi = cd_index(b);
  out.doc["cd_index"] = phi.terms();
  out.doc["ab_index"] = ab_index(b).terms();
  out.text.push_back("cd-index: " + phi.to_string());
  return out;
}

Output cmd_tutte(const SimpleGraph& g) {
  if (g.edge_count() > 20)
    throw GuardError("tutte: edge count " + std::to_string(g.edge_count()) + " exceeds limit 20");
  Output out;
  const BivariatePolynomial t = tutte(g);
  json terms = json::array();
  for (const auto& [deg, c] : t.terms()) terms.push_back({{"x", deg.first}, {"y", deg.second}, {"coefficient", c}});
  out.doc["terms"] = terms;
  out.doc["T(2,0)"] = t(2, 0);
  out.doc["T(0,2)"] = t(0, 2);
  out.text.push_back("T(x,y) = " + t.to_string());
  if (g.edge_count() <= 16) {
    const OrientationCounts o = orientation_counts(g);
    if (o.acyclic != t(2, 0) || o.totally_cyclic != t(0, 2))
      throw CrossCheckError("orientation counts disagree with the Tutte polynomial");
    out.doc["acyclic_orientations"] = o.acyclic;
    out.doc["totally_cyclic_orientations"] = o.totally_cyclic;
    out.text.push_back("acyclic orientations: " + std::to_string(o.acyclic));
    out.text.push_back("totally cyclic orientations: " + std::to_string(o.totally_cyclic));
  }
  return out;
}

Output cmd_beta(const SimpleGraph& g, int n) {
  const long long rank = g.vertex_count() + static_cast<long long>(std::max(n - 2, 0)) * g.edge_count();
  if (rank > 20) throw GuardError("beta: rank " + std::to_string(rank) + " exceeds limit 20");
  return cmd_closure(beta_n(g, n));
}

Output cmd_selftest() {
  Output out;
  json checks = json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"passed", ok}});
    out.text.push_back((ok ? "PASS " : "FAIL ") + name);
    all = all && ok;
  };
  for (int n = 1; n <= 10; ++n) record("multinomial identity n=" + std::to_string(n), multinomial_identity_check(n));

  const std::map<int, std::map<std::string, std::int64_t>> printed = {
      {2, {{"c", 1}}},
      {3, {{"cc", 1}, {"d", 1}}},
      {4, {{"ccc", 1}, {"cd", 2}, {"dc", 2}}},
      {5, {{"cccc", 1}, {"ccd", 3}, {"dcc", 3}, {"cdc", 5}, {"dd", 4}}}};
  for (const auto& [n, terms] : printed) {
    CDPolynomial want;
    for (const auto& [w, c] : terms) want.add(w, c);
    record("Phi_" + std::to_string(n) + " (recursion in n)", andre_phi(n) == want);
    record("Phi_" + std::to_string(n) + " (cd-index of D_n)", cd_index(BuildingSet::discrete(n)) == want);
  }
  for (int n = 1; n <= 10; ++n)
    record("[c^" + std::to_string(n - 1) + "] Phi_" + std::to_string(n) + " = 1",
           andre_phi(n).coefficient(std::string(n - 1, 'c')) == 1);
  out.doc["checks"] = checks;
  out.doc["passed"] = all;
  if (!all) throw CrossCheckError(out.doc.dump());
  return out;
}

Output dispatch(const JobSpec& spec) {
  static const std::vector<std::string> commands = {"closure", "chi",   "csf",  "zetainv", "eulerian",
                                                    "cdindex", "tutte", "beta", "selftest"};
  if (std::find(commands.begin(), commands.end(), spec.command) == commands.end())
    throw InputError("unknown command '" + spec.command + "'");
  if (spec.basis != "monomial" && spec.basis != "powersum")
    throw InputError("--basis must be monomial or powersum");
  if (spec.format != "json" && spec.format != "text") throw InputError("--format must be json or text");
  if (spec.command == "beta" && spec.n < 2) throw InputError("--n must be at least 2");
  if (spec.m_range && spec.m_range->first > spec.m_range->second) throw InputError("empty --m-range");
  if (spec.command == "selftest") return cmd_selftest();

  const Input in = parse_input(spec.document);
  if (spec.command == "tutte") return cmd_tutte(as_graph(in, "tutte"));
  if (spec.command == "beta") return cmd_beta(as_graph(in, "beta"), spec.n);
  const BuildingSet b = as_building_set(in);
  if (spec.command == "closure") return cmd_closure(b);
  if (spec.command == "chi") return cmd_chi(b, spec);
  if (spec.command == "csf") return cmd_csf(b, spec);
  if (spec.command == "zetainv") return cmd_zetainv(b);
  if (spec.command == "eulerian") return cmd_eulerian(b);
  return cmd_cdindex(b);
}

}  // namespace

Input parse_input(const std::string& doc) {
  const auto start = doc.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw InputError("empty input document");
  if (doc[start] != '{') return parse_edge_lines(doc);
  json j;
  try {
    j = json::parse(doc);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (j.contains("ground_set")) return parse_building_set(j);
  if (j.contains("vertices")) return parse_graph_json(j);
  throw InputError("malformed document: expected a \"ground_set\" or a \"vertices\" field");
}

std::string building_set_document(const BuildingSet& b) {
  json out;
  out["ground_set"] = ground_names(b);
  out["generators"] = name_lists(b, minimal_generators(b).all.sets());
  return out.dump();
}

std::pair<std::int64_t, std::int64_t> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("--m-range must look like A..B");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const std::int64_t lo = std::stoll(a, &used_a), hi = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("--m-range must look like A..B with integers A, B");
  }
}

JobResult run(const JobSpec& spec) {
  JobResult r;
  try {
    Output out = dispatch(spec);
    if (spec.format == "json") {
      r.output = out.doc.dump(2) + "\n";
    } else {
      for (const std::string& line : out.text) r.output += line + "\n";
    }
  } catch (const InputError& e) {
    r.exit_code = 1;
    r.diagnostics = e.what();
  } catch (const GuardError& e) {
    r.exit_code = 2;
    r.diagnostics = e.what();
  } catch (const CrossCheckError& e) {
    r.exit_code = 3;
    r.diagnostics = e.what();
  }
  return r;
}

}  // namespace bshopf::cli
