// Copyright 2026 The hbkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hbkit/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hbkit/constructions.hpp"
#include "hbkit/corpus.hpp"
#include "hbkit/detect.hpp"
#include "hbkit/edge_list.hpp"
#include "hbkit/helly.hpp"
#include "hbkit/hull.hpp"
#include "hbkit/hyperbolicity.hpp"
#include "hbkit/isometry.hpp"

namespace hbkit {
namespace {

using nlohmann::json;

class Stopwatch {
 public:
  std::int64_t Lap() {
    const auto now = std::chrono::steady_clock::now();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(now - last_)
            .count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

json DisksJson(const std::vector<DiskConstraint>& disks) {
  json out = json::array();
  for (const auto& c : disks) {
    out.push_back({{"center", c.center}, {"radius", c.radius}});
  }
  return out;
}

json WitnessJson(const ObstructionWitness& w) {
  json out{{"family", FamilyName(w.family)},
           {"k", w.k},
           {"l", w.l},
           {"corners", w.corners},
           {"basis", w.basis}};
  if (w.materialized) out["materialized"] = *w.materialized;
  return out;
}

std::optional<std::uint64_t> EnvNumber(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

void WriteText(const std::string& path, const std::string& text,
               std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

// Thresholds probed by the classifiers: 0, 1/2, ..., up to hb + 1.
int TopThreshold(HalfInt hb) { return hb.doubled() + 2; }

}  // namespace

int DefaultThreads() {
  if (auto v = EnvNumber("HBKIT_THREADS"); v && *v > 0) {
    return static_cast<int>(*v);
  }
  return 1;
}

std::uint64_t DefaultHullBudget() {
  if (auto v = EnvNumber("HBKIT_HULL_BUDGET"); v && *v > 0) return *v;
  return kDefaultHullBudget;
}

AnalysisOutcome Analyze(const Graph& g, const AnalyzeOptions& options) {
  AnalysisOutcome out;
  json& r = out.report;
  json timing;
  Stopwatch clock;

  const DistanceMatrix d = DistanceMatrix::Compute(g);
  r["input"] = {{"name", g.name()},
                {"n", g.num_vertices()},
                {"m", g.num_edges()},
                {"diameter", d.diameter()}};
  timing["distances"] = clock.Lap();

  const HellyCheck helly = CheckHelly(d);
  const PseudoModularCheck pm = CheckPseudoModular(d);
  r["is_helly"] = helly.holds;
  r["is_pseudo_modular"] = pm.holds;
  if (!helly.holds) {
    r["helly_witness"] = {{"triple", helly.triple},
                          {"disks", DisksJson(helly.witness)}};
  }
  if (!pm.holds) {
    r["pseudo_modular_witness"] = DisksJson(
        std::vector<DiskConstraint>(pm.violation.begin(), pm.violation.end()));
  }
  timing["helly"] = clock.Lap();

  const HyperbolicityResult hb = Hyperbolicity(d, options.threads);
  const auto& hw = hb.witness;
  r["hb_doubled"] = hb.value.doubled();
  r["hb_witness"] = {{"quadruple", hw.quadruple},
                     {"sums", hw.sums},
                     {"delta_doubled", hw.delta.doubled()}};
  const auto& q = hw.quadruple;
  if (QuadrupleDelta(d, q[0], q[1], q[2], q[3]).delta != hb.value) {
    out.consistent = false;
  }
  timing["hyperbolicity"] = clock.Lap();

  const ThinnessResult tau = IntervalThinness(d);
  const auto& tw = tau.witness;
  r["tau"] = tau.tau;
  r["tau_witness"] = {{"x", tw.x},     {"y", tw.y}, {"slice", tw.slice},
                      {"u", tw.u},     {"v", tw.v}, {"distance", tw.distance}};
  if (tau.tau > 0) {
    const auto slice = IntervalSlice(d, tw.x, tw.y, tw.slice);
    const auto in = [&](Vertex v) {
      return std::binary_search(slice.begin(), slice.end(), v);
    };
    if (!in(tw.u) || !in(tw.v) || d(tw.u, tw.v) != tau.tau) {
      out.consistent = false;
    }
  }
  // Holds in every graph.
  if (tau.tau > hb.value.doubled()) out.consistent = false;
  timing["thinness"] = clock.Lap();

  json classifiers{{"direct_doubled", hb.value.doubled()}};
  if (helly.holds) {
    const ObstructionBound obs = HbByObstructions(d);
    const ThinnessBound thin = HbByThinness(d);
    classifiers["obstructions_doubled"] = obs.hb.doubled();
    classifiers["thinness_doubled"] = thin.hb.doubled();
    timing["obstruction_classifiers"] = clock.Lap();

    json probes = json::array();
    for (int t = 0; t <= TopThreshold(hb.value); ++t) {
      auto w = t % 2 == 0 ? DetectH2(d, t / 2) : DetectH1OrH3(d, t / 2);
      json probe{{"threshold_doubled", t}, {"found", w.has_value()}};
      if (w) {
        if (!WitnessPatternHolds(d, *w)) out.consistent = false;
        probe["witness"] = WitnessJson(*w);
      }
      // An obstruction at t means hb > t.
      if (w.has_value() != (hb.value.doubled() > t)) out.consistent = false;
      probes.push_back(std::move(probe));
    }
    r["obstructions"] = std::move(probes);
    timing["obstruction_probes"] = clock.Lap();

    int power = -1;
    bool power_consistent = true;
    for (int t = 0; t <= TopThreshold(hb.value); ++t) {
      const bool holds =
          PowerCharacterization(g, d, HalfInt::FromDoubled(t)).holds;
      if (holds && power < 0) power = t;
      if (holds != (hb.value.doubled() <= t)) power_consistent = false;
    }
    classifiers["power_doubled"] = power;
    timing["powers"] = clock.Lap();

    const HalfHyperbolicStatements half = HalfHyperbolicEquivalents(g, d);
    r["half_hyperbolic"] = {
        {"hb_at_most_half", half.hb_at_most_half},
        {"no_isometric_c4_or_sun", half.no_isometric_c4_or_sun},
        {"g_and_square_c4_free", half.g_and_square_c4_free},
        {"thin_and_no_sun", half.thin_and_no_sun}};
    timing["half_hyperbolic"] = clock.Lap();

    const bool agree = obs.hb == hb.value && thin.hb == hb.value &&
                       power == hb.value.doubled() && power_consistent &&
                       half.consistent();
    classifiers["agree"] = agree;
    if (!agree) out.consistent = false;
  } else {
    classifiers["agree"] = true;
    classifiers["note"] =
        "input is not Helly; obstruction classifiers are not applicable";
  }
  r["classifiers"] = std::move(classifiers);

  if (options.hull) {
    try {
      const HullResult h = Hull(d, options.hull_budget);
      const HullReport hr = HullValidate(d, h, options.threads);
      r["hull"] = {{"vertices", h.hull.num_vertices()},
                   {"edges", h.hull.num_edges()},
                   {"hb_doubled", hr.hb_hull.doubled()},
                   {"farthest_from_image", hr.farthest_from_image},
                   {"valid", hr.ok()},
                   {"failures", hr.failures}};
      if (!hr.ok()) out.consistent = false;
    } catch (const HullBudgetError& e) {
      r["hull"] = {{"skipped", e.what()}};
    }
    timing["hull"] = clock.Lap();
  }
  r["timing_ms"] = std::move(timing);
  r["consistent"] = out.consistent;
  return out;
}

std::string ToDot(const Graph& g, const std::vector<Vertex>& red,
                  const std::vector<std::pair<int, int>>& positions) {
  std::vector<bool> is_red(g.num_vertices(), false);
  for (Vertex v : red) is_red[v] = true;
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle, width=0.3, fontsize=9];\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v << " [";
    if (is_red[v]) out << "color=red, fontcolor=red, ";
    if (!positions.empty()) {
      out << "pos=\"" << positions[v].second << "," << -positions[v].first
          << "!\", ";
    }
    out << "label=\"" << v << "\"];\n";
  }
  for (const auto& [u, v] : g.Edges()) {
    out << "  " << u << " -- " << v;
    if (is_red[u] && is_red[v]) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string FamilyToDot(const FamilyGraph& f) {
  const Graph host = KingGrid(f.host_p, f.host_q);
  std::vector<Vertex> red;
  for (Vertex v = 0; v < f.graph.num_vertices(); ++v) red.push_back(f.HostId(v));
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < f.host_p; ++i) {
    for (int j = 0; j < f.host_q; ++j) pos.emplace_back(i, j);
  }
  return ToDot(host, red, pos);
}

namespace {

struct Common {
  std::string input;
  int threads = 0;
  std::string json_path;
};

Graph LoadConnected(const std::string& path) {
  return ReadEdgeListFile(path, /*require_connected=*/true).graph;
}

int CmdAnalyze(const Common& c, bool no_hull, const std::string& dot_path,
               std::ostream& out) {
  const Graph g = LoadConnected(c.input);
  AnalyzeOptions opt;
  opt.threads = c.threads > 0 ? c.threads : DefaultThreads();
  opt.hull = !no_hull;
  opt.hull_budget = DefaultHullBudget();
  const AnalysisOutcome res = Analyze(g, opt);
  const auto& r = res.report;
  if (!c.json_path.empty()) WriteText(c.json_path, r.dump(2) + "\n", out);
  if (!dot_path.empty()) {
    const std::vector<Vertex> q = r["hb_witness"]["quadruple"];
    WriteText(dot_path, ToDot(g, q), out);
  }
  if (c.json_path != "-") {
    out << "n=" << r["input"]["n"] << " m=" << r["input"]["m"]
        << " diameter=" << r["input"]["diameter"] << "\n";
    out << "helly=" << r["is_helly"] << " pseudo_modular="
        << r["is_pseudo_modular"] << "\n";
    out << "hb=" << HalfInt::FromDoubled(r["hb_doubled"]) << " tau="
        << r["tau"] << "\n";
    out << "classifiers agree=" << r["classifiers"]["agree"] << "\n";
  }
  if (!res.consistent) {
    out << "INCONSISTENT: classifier disagreement or unverifiable witness\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int CmdGenerate(const std::string& family, int k, int l, int p, int q, int n,
                double prob, std::uint64_t seed, const std::string& path,
                const std::string& dot_path, std::ostream& out) {
  Graph g;
  std::vector<std::string> notes;
  std::string dot;
  if (family == "king") {
    if (p < 1 || q < 1) throw Error("king needs --p and --q >= 1");
    g = KingGrid(p, q);
    notes.push_back("king_grid " + std::to_string(p) + " " + std::to_string(q));
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        notes.push_back("cell " + std::to_string(KingCell(q, i, j)) + "=(" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
    dot = ToDot(g, {});
  } else if (family == "random-hull") {
    if (n < 1) throw Error("random-hull needs --n >= 1");
    if (prob < 0 || prob > 1) throw Error("--prob must lie in [0,1]");
    g = RandomHullGraph(n, prob, seed, DefaultHullBudget());
    std::ostringstream p_text;
    p_text << prob;
    notes.push_back("random-hull n=" + std::to_string(n) + " prob=" +
                    p_text.str() + " seed=" + std::to_string(seed));
    dot = ToDot(g, {});
  } else {
    const Family f = ParseFamily(family);
    const FamilyGraph fg = BuildObstruction(f, k, l < 0 ? k : l);
    g = fg.graph;
    notes = FamilyAnnotations(fg);
    dot = FamilyToDot(fg);
  }
  WriteText(path, FormatEdgeList(g, notes), out);
  if (!dot_path.empty()) WriteText(dot_path, dot, out);
  return kExitOk;
}

int CmdDetect(const Common& c, const std::string& family, int k,
              bool materialize, std::ostream& out) {
  const Graph g = LoadConnected(c.input);
  const DistanceMatrix d = DistanceMatrix::Compute(g);
  const bool helly = IsHelly(d);
  const Family f = ParseFamily(family);
  std::optional<ObstructionWitness> w;
  switch (f) {
    case Family::kH1:
      if (k < 1) throw Error("h1 needs --k >= 1");
      w = DetectH1(d, k - 1);
      break;
    case Family::kH2:
      if (k < 0) throw Error("h2 needs --k >= 0");
      w = DetectH2(d, k);
      break;
    case Family::kH3:
      if (k < 0) throw Error("h3 needs --k >= 0");
      w = DetectH1OrH3(d, k);
      break;
  }
  json r{{"is_helly", helly}, {"found", w.has_value()}};
  int code = kExitOk;
  if (w) {
    out << "witness " << FamilyName(w->family) << "^{" << w->k << "," << w->l
        << "} corners";
    for (Vertex v : w->corners) out << ' ' << v;
    out << " (" << w->basis << ")\n";
    if (materialize) {
      try {
        const auto phi = Materialize(d, *w);
        const auto iso = CheckIsometric(g, d, phi);
        const bool same =
            AreIsomorphic(Induce(g, phi).graph,
                          BuildObstruction(w->family, w->k, w->l).graph);
        w->materialized = phi;
        out << "materialized " << phi.size() << " vertices, isometric="
            << (iso.isometric ? "yes" : "no")
            << " isomorphic=" << (same ? "yes" : "no") << "\n";
        out << "vertices";
        for (Vertex v : phi) out << ' ' << v;
        out << "\n";
        if (!iso.isometric || !same) code = kExitDisagreement;
      } catch (const MaterializeError& e) {
        out << "materialization failed: " << e.what() << "\n";
        r["materialize_error"] = {{"message", e.what()},
                                  {"disks", DisksJson(e.disks())}};
        code = helly ? kExitDisagreement : kExitNotHelly;
      }
    }
    r["witness"] = WitnessJson(*w);
  } else {
    out << (helly ? "certified absence\n"
                  : "no witness (input is not Helly: absence is not certified)\n");
    code = helly ? kExitAbsent : kExitNotHelly;
  }
  if (!helly && code == kExitOk) {
    out << "warning: input is not Helly; the witness is sound but the "
           "detector is not complete\n";
    code = kExitNotHelly;
  }
  if (!c.json_path.empty()) WriteText(c.json_path, r.dump(2) + "\n", out);
  return code;
}

int CmdHull(const Common& c, const std::string& path, std::ostream& out) {
  const Graph g = LoadConnected(c.input);
  const DistanceMatrix d = DistanceMatrix::Compute(g);
  const HullResult h = Hull(d, DefaultHullBudget());
  WriteText(path,
            FormatEdgeList(h.hull, {"injective hull of " + c.input + ", " +
                                        std::to_string(h.functions.size()) +
                                        " vertices"}),
            out);
  if (!c.json_path.empty()) {
    json side{{"functions", h.functions}, {"embedding", h.embedding}};
    WriteText(c.json_path, side.dump(2) + "\n", out);
  }
  return kExitOk;
}

int CmdPower(const Common& c, int k, const std::string& path,
             std::ostream& out) {
  const Graph g = LoadConnected(c.input);
  const Graph p = GraphPower(g, k);
  WriteText(path, FormatEdgeList(p, {"power " + std::to_string(k)}), out);
  return kExitOk;
}

int CmdVerify(const Common& c, std::ostream& out) {
  const Graph g = LoadConnected(c.input);
  const DistanceMatrix d = DistanceMatrix::Compute(g);
  const int threads = c.threads > 0 ? c.threads : DefaultThreads();
  const HalfInt hb = Hyperbolicity(d, threads).value;
  const int tau = IntervalThinness(d).tau;
  bool all = true;
  json r;
  const auto claim = [&](const std::string& name, bool pass) {
    out << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
    r[name] = pass;
    all = all && pass;
  };
  claim("thinness-bound", tau <= hb.doubled());
  if (!IsHelly(d)) {
    for (const char* name :
         {"thinness-window", "obstructions-integer", "obstructions-half",
          "power-windows", "even-thinness-parity",
          "half-hyperbolic-equivalents"}) {
      out << name << ": SKIP (input is not Helly)\n";
    }
    if (!c.json_path.empty()) WriteText(c.json_path, r.dump(2) + "\n", out);
    return all ? kExitNotHelly : kExitDisagreement;
  }
  const int two_hb = hb.doubled();
  bool window = tau <= two_hb && two_hb <= tau + 1;
  if (two_hb == tau + 1) {
    window = window && tau % 2 == 1 && DetectH1OrH3(d, tau / 2).has_value();
  }
  claim("thinness-window", window);

  bool int_ok = true;
  bool half_ok = true;
  bool power_ok = true;
  for (int t = 0; t <= two_hb + 2; ++t) {
    const bool below = two_hb <= t;
    if (t % 2 == 0) {
      int_ok = int_ok && below == !DetectH2(d, t / 2).has_value();
    } else {
      half_ok = half_ok && below == !DetectH1OrH3(d, t / 2).has_value();
    }
    power_ok = power_ok &&
               PowerCharacterization(g, d, HalfInt::FromDoubled(t)).holds == below;
  }
  claim("obstructions-integer", int_ok);
  claim("obstructions-half", half_ok);
  claim("power-windows", power_ok);
  claim("even-thinness-parity", tau % 2 == 1 || hb.is_integer());
  claim("half-hyperbolic-equivalents",
        HalfHyperbolicEquivalents(g, d).consistent());
  if (!c.json_path.empty()) WriteText(c.json_path, r.dump(2) + "\n", out);
  return all ? kExitOk : kExitDisagreement;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact hyperbolicity, thinness and Helly-graph obstructions"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", common.input, "edge-list file")->required();
    sub->add_option("--json", common.json_path, "write JSON to this path ('-' for stdout)");
  };

  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  add_common(analyze);
  bool no_hull = false;
  std::string dot_path;
  analyze->add_option("--threads", common.threads, "worker threads");
  analyze->add_flag("--no-hull", no_hull, "skip the injective hull");
  analyze->add_option("--dot", dot_path, "DOT file with the hb witness in red");

  auto* generate = app.add_subcommand("generate", "write a generated graph");
  std::string family;
  int k = 1, l = -1, p = 0, q = 0, n = 0;
  double prob = 0.3;
  std::uint64_t seed = 1;
  std::string out_path;
  generate->add_option("--family", family, "king|h1|h2|h3|random-hull")
      ->required()
      ->check(CLI::IsMember({"king", "h1", "h2", "h3", "random-hull"}));
  generate->add_option("--k", k);
  generate->add_option("--l", l, "defaults to k");
  generate->add_option("--p", p);
  generate->add_option("--q", q);
  generate->add_option("--n", n);
  generate->add_option("--prob", prob);
  generate->add_option("--seed", seed);
  generate->add_option("-o,--output", out_path);
  generate->add_option("--dot", dot_path);

  auto* detect = app.add_subcommand("detect", "search for an obstruction");
  add_common(detect);
  bool materialize = false;
  detect->add_option("--family", family, "h1|h2|h3")
      ->required()
      ->check(CLI::IsMember({"h1", "h2", "h3", "H1", "H2", "H3"}));
  detect->add_option("--k", k)->required();
  detect->add_flag("--materialize", materialize);

  auto* hull = app.add_subcommand("hull", "injective hull as an edge list");
  add_common(hull);
  hull->add_option("-o,--output", out_path);

  auto* power = app.add_subcommand("power", "k-th power as an edge list");
  add_common(power);
  power->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  power->add_option("-o,--output", out_path);

  auto* verify = app.add_subcommand("verify", "check every applicable theorem");
  add_common(verify);
  verify->add_option("--threads", common.threads);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze) return CmdAnalyze(common, no_hull, dot_path, out);
    if (*generate) {
      return CmdGenerate(family, k, l, p, q, n, prob, seed, out_path, dot_path,
                         out);
    }
    if (*detect) return CmdDetect(common, family, k, materialize, out);
    if (*hull) return CmdHull(common, out_path, out);
    if (*power) return CmdPower(common, k, out_path, out);
    if (*verify) return CmdVerify(common, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace hbkit
