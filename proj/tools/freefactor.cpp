// Command-line front end: word reduction, Whitehead automorphism application,
// Whitehead/core graphs as DOT, primitivity and free-factor decisions with
// certificates, the non-primitive witness search, and free-factor-complex
// distances.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ff/algorithms.hpp"
#include "ff/factor_complex.hpp"
#include "ff/oracle.hpp"
#include "ff/whitehead_graph.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitDecided = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;

struct Options {
  int rank = 2;
  std::string word;
  std::string aut;
  std::vector<std::string> subgroups;
  std::string format = "plain";
  std::string out_file;
  bool cyclic = false;
  bool certificate = false;
  bool verify = false;
  bool cross_check = false;
  std::size_t state_cap = ff::default_state_cap();
  int max_witness_length = 12;
};

ff::SubgroupPresentation parse_subgroup(const std::string& spec, int rank) {
  ff::SubgroupPresentation gens{rank, {}};
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) gens.generators.push_back(ff::parse_word(item, rank));
  }
  gens.check_valid();
  return gens;
}

void emit(const Options& opt, const json& payload, const std::string& plain) {
  if (opt.format == "json")
    std::cout << payload.dump(2) << '\n';
  else
    std::cout << plain;
}

void emit_dot(const Options& opt, const std::string& dot) {
  if (opt.out_file.empty()) {
    std::cout << dot;
    return;
  }
  std::ofstream out(opt.out_file);
  if (!out) throw std::runtime_error("cannot open " + opt.out_file);
  out << dot;
}

json certificate_json(const ff::Certificate& cert) {
  json steps = json::array();
  for (const auto& phi : cert.steps) steps.push_back(ff::automorphism_to_string(phi));
  json terminal;
  if (std::holds_alternative<ff::CyclicWord>(cert.terminal)) {
    terminal = ff::word_to_string(std::get<ff::CyclicWord>(cert.terminal));
  } else {
    const ff::LabeledGraph& g = std::get<ff::LabeledGraph>(cert.terminal);
    terminal = json{{"vertices", g.num_vertices}, {"edges", g.num_edges()}};
  }
  return json{{"steps", steps}, {"terminal", terminal}};
}

// Replays a primitivity certificate: applying the steps to w must reach the
// recorded terminal with strictly decreasing cyclic length.
bool replay_word_certificate(const ff::Word& w, const ff::Certificate& cert) {
  ff::CyclicWord cur = ff::cyclic_reduce(w).first;
  for (const auto& phi : cert.steps) {
    ff::CyclicWord next = ff::marked_cyclic_reduce(ff::apply_whitehead_to_word(phi, cur)).first;
    if (next.length() >= cur.length()) return false;
    cur = next;
  }
  return std::holds_alternative<ff::CyclicWord>(cert.terminal) &&
         cur == std::get<ff::CyclicWord>(cert.terminal);
}

bool replay_graph_certificate(const ff::SubgroupPresentation& gens,
                              const ff::Certificate& cert) {
  ff::LabeledGraph cur = ff::subgroup_core_unpointed(gens);
  for (const auto& phi : cert.steps) {
    ff::LabeledGraph next = ff::apply_whitehead_to_subgroup(phi, cur);
    if (next.num_edges() >= cur.num_edges()) return false;
    cur = next;
  }
  return std::holds_alternative<ff::LabeledGraph>(cert.terminal) &&
         ff::graphs_isomorphic(cur, std::get<ff::LabeledGraph>(cert.terminal));
}

int run_reduce(const Options& opt) {
  ff::Word w = ff::parse_word(opt.word, opt.rank);
  if (opt.cyclic) {
    ff::CyclicWord c = ff::cyclic_reduce(w).first;
    emit(opt, json{{"word", ff::word_to_string(c)}}, ff::word_to_string(c) + "\n");
  } else {
    emit(opt, json{{"word", ff::word_to_string(w)}}, ff::word_to_string(w) + "\n");
  }
  return kExitDecided;
}

int run_apply(const Options& opt) {
  ff::WhiteheadAutomorphism phi = ff::parse_automorphism(opt.aut, opt.rank);
  ff::Word w = ff::parse_word(opt.word, opt.rank);
  ff::CyclicWord c = ff::cyclic_reduce(w).first;
  auto [image, surviving] = ff::marked_cyclic_reduce(ff::apply_whitehead_to_word(phi, c));
  bool fine = surviving == 0;
  std::ostringstream plain;
  plain << ff::word_to_string(image) << "\nfine=" << (fine ? "true" : "false") << '\n';
  emit(opt,
       json{{"word", ff::word_to_string(image)}, {"fine", fine}, {"surviving", surviving}},
       plain.str());
  return kExitDecided;
}

int run_wgraph(const Options& opt) {
  ff::WhiteheadGraph wg;
  if (!opt.subgroups.empty()) {
    ff::SubgroupPresentation gens = parse_subgroup(opt.subgroups.front(), opt.rank);
    wg = ff::whitehead_graph_of_graph(ff::subgroup_core_unpointed(gens));
  } else {
    ff::Word w = ff::parse_word(opt.word, opt.rank);
    wg = ff::whitehead_graph_of_word(ff::cyclic_reduce(w).first);
  }
  emit_dot(opt, ff::whitehead_graph_to_dot(wg));
  return kExitDecided;
}

int run_graph(const Options& opt) {
  ff::SubgroupPresentation gens = parse_subgroup(opt.subgroups.front(), opt.rank);
  emit_dot(opt, ff::graph_to_dot(ff::subgroup_core(gens)));
  return kExitDecided;
}

int run_primitive(const Options& opt) {
  ff::Word w = ff::parse_word(opt.word, opt.rank);
  ff::PrimitivityResult res = ff::is_primitive(w);
  json payload{{"primitive", res.primitive}};
  std::ostringstream plain;
  plain << "primitive: " << (res.primitive ? "yes" : "no") << '\n';
  if (opt.certificate) {
    payload["certificate"] = certificate_json(res.certificate);
    plain << ff::certificate_to_string(res.certificate);
  }
  if (opt.verify) {
    bool ok = replay_word_certificate(w, res.certificate);
    payload["verified"] = ok;
    plain << "verified: " << (ok ? "yes" : "no") << '\n';
    if (!ok) return kExitInconclusive;
  }
  int code = kExitDecided;
  if (opt.cross_check) {
    bool oracle_true = ff::oracle_is_primitive(w, 6) == ff::OracleVerdict::True;
    long g = ff::abelianization_gcd(w);
    // the oracle is a semi-decision: it must confirm primitives and must
    // never reach a letter from a non-primitive
    bool consistent = res.primitive ? (oracle_true && g == 1) : !oracle_true;
    payload["cross_check"] = consistent;
    plain << "cross-check: " << (consistent ? "consistent" : "INCONSISTENT") << '\n';
    if (!consistent) code = kExitInconclusive;
  }
  emit(opt, payload, plain.str());
  return code;
}

int run_freefactor(const Options& opt) {
  ff::SubgroupPresentation gens = parse_subgroup(opt.subgroups.front(), opt.rank);
  ff::FreeFactorResult res = ff::is_free_factor(gens);
  json payload{{"free_factor", res.free_factor}};
  std::ostringstream plain;
  plain << "free factor: " << (res.free_factor ? "yes" : "no") << '\n';
  if (opt.certificate) {
    payload["certificate"] = certificate_json(res.certificate);
    plain << ff::certificate_to_string(res.certificate);
  }
  if (opt.verify) {
    bool ok = replay_graph_certificate(gens, res.certificate);
    payload["verified"] = ok;
    plain << "verified: " << (ok ? "yes" : "no") << '\n';
    if (!ok) return kExitInconclusive;
  }
  emit(opt, payload, plain.str());
  return kExitDecided;
}

int run_witness(const Options& opt) {
  ff::SubgroupPresentation gens = parse_subgroup(opt.subgroups.front(), opt.rank);
  ff::WitnessResult res = ff::find_nonprimitive_witness(gens, opt.max_witness_length);
  json payload{{"search_bound", res.search_bound}};
  std::ostringstream plain;
  int code = kExitDecided;
  switch (res.outcome) {
    case ff::WitnessOutcome::IsFreeFactor:
      payload["outcome"] = "free-factor";
      plain << "free factor: every element primitive in H is primitive ambiently\n";
      break;
    case ff::WitnessOutcome::WitnessFound:
      payload["outcome"] = "witness";
      payload["witness"] = ff::word_to_string(*res.witness);
      payload["witness_in_subgroup_basis"] = ff::word_to_string(*res.witness_in_h);
      plain << "witness: " << ff::word_to_string(*res.witness) << " (over the subgroup basis: "
            << ff::word_to_string(*res.witness_in_h) << ")\n";
      break;
    case ff::WitnessOutcome::InconclusiveAtBound:
      payload["outcome"] = "inconclusive-at-bound";
      plain << "inconclusive at search bound " << res.search_bound << '\n';
      code = kExitInconclusive;
      break;
  }
  emit(opt, payload, plain.str());
  return code;
}

json factor_json(const ff::FactorClass& c) {
  json gens = json::array();
  for (const ff::Word& w : ff::class_generators(c)) gens.push_back(ff::word_to_string(w));
  return gens;
}

int run_distance(const Options& opt) {
  if (opt.subgroups.size() != 2)
    throw CLI::ValidationError("distance needs exactly two --subgroup arguments");
  ff::FactorClass c1 = ff::class_of(parse_subgroup(opt.subgroups[0], opt.rank));
  ff::FactorClass c2 = ff::class_of(parse_subgroup(opt.subgroups[1], opt.rank));
  ff::DistanceResult res = ff::distance(c1, c2, opt.state_cap);
  json payload;
  std::ostringstream plain;
  int code = kExitDecided;
  if (res.value) {
    payload["distance"] = *res.value;
    plain << "distance: " << *res.value << '\n';
  } else if (res.inapplicable) {
    payload["distance"] = "inapplicable";
    payload["greaterThan"] = *res.greater_than;
    plain << "distance: > " << *res.greater_than << ", exact value undecidable here\n";
    code = kExitInconclusive;
  } else if (res.resource_limited) {
    payload["distance"] = json{{"greaterThan", *res.greater_than}};
    plain << "distance: > " << *res.greater_than << " (state cap reached)\n";
    code = kExitInconclusive;
  } else if (res.greater_than) {
    payload["distance"] = json{{"greaterThan", *res.greater_than}};
    plain << "distance: > " << *res.greater_than << '\n';
  }
  payload["statesExplored"] = res.states_explored;
  json witnesses = json::array();
  for (const ff::FactorClass& c : res.witnesses) witnesses.push_back(factor_json(c));
  payload["witnesses"] = witnesses;
  if (!res.witnesses.empty()) {
    plain << "chain:";
    for (const ff::FactorClass& c : res.witnesses) {
      plain << " <";
      bool first = true;
      for (const ff::Word& w : ff::class_generators(c)) {
        if (!first) plain << ',';
        first = false;
        plain << ff::word_to_string(w);
      }
      plain << '>';
    }
    plain << '\n';
  }
  if (opt.verify && res.value && *res.value >= 1) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < res.witnesses.size(); ++i)
      ok = ok && ff::distance_one(res.witnesses[i], res.witnesses[i + 1]);
    payload["verified"] = ok;
    plain << "chain verified: " << (ok ? "yes" : "no") << '\n';
    if (!ok) code = kExitInconclusive;
  }
  emit(opt, payload, plain.str());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Whitehead machinery for free groups: reduction, primitivity, "
               "free factors, witnesses, and free-factor-complex distances"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--rank", opt.rank, "ambient free group rank")
        ->check(CLI::Range(1, 26));
    cmd->add_option("--format", opt.format, "output format: plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
  };

  CLI::App* reduce = app.add_subcommand("reduce", "freely (or cyclically) reduce a word");
  add_common(reduce);
  reduce->add_option("word", opt.word, "the word")->required();
  reduce->add_flag("--cyclic", opt.cyclic, "cyclic reduction");

  CLI::App* apply = app.add_subcommand("apply", "apply a Whitehead automorphism to a word");
  add_common(apply);
  apply->add_option("--aut", opt.aut, "automorphism, e.g. ({X},y)")->required();
  apply->add_option("word", opt.word, "the word")->required();

  CLI::App* wgraph = app.add_subcommand("wgraph", "Whitehead graph as DOT");
  add_common(wgraph);
  wgraph->add_option("word", opt.word, "the word");
  wgraph->add_option("--subgroup", opt.subgroups, "comma-separated generators");
  wgraph->add_option("-o", opt.out_file, "output file");

  CLI::App* graph = app.add_subcommand("graph", "pointed core graph of a subgroup as DOT");
  add_common(graph);
  graph->add_option("--subgroup", opt.subgroups, "comma-separated generators")->required();
  graph->add_option("-o", opt.out_file, "output file");

  CLI::App* primitive = app.add_subcommand("primitive", "decide primitivity of a word");
  add_common(primitive);
  primitive->add_option("word", opt.word, "the word")->required();
  primitive->add_flag("--certificate", opt.certificate, "print the reduction certificate");
  primitive->add_flag("--verify", opt.verify, "replay the certificate");
  primitive->add_flag("--cross-check", opt.cross_check, "compare with the brute-force oracle");

  CLI::App* freefactor = app.add_subcommand("freefactor", "decide the free-factor property");
  add_common(freefactor);
  freefactor->add_option("--subgroup", opt.subgroups, "comma-separated generators")
      ->required();
  freefactor->add_flag("--certificate", opt.certificate, "print the reduction certificate");
  freefactor->add_flag("--verify", opt.verify, "replay the certificate");

  CLI::App* witness = app.add_subcommand(
      "witness", "search for an element primitive in the subgroup but not ambiently");
  add_common(witness);
  witness->add_option("--subgroup", opt.subgroups, "comma-separated generators")->required();
  witness->add_option("--max-witness-length", opt.max_witness_length,
                      "search bound in subgroup letters");

  CLI::App* dist = app.add_subcommand("distance", "distance in the free factor complex");
  add_common(dist);
  dist->add_option("--subgroup", opt.subgroups,
                   "comma-separated generators; give this twice")
      ->required();
  dist->add_option("--state-cap", opt.state_cap, "visited-state budget for the searches");
  dist->add_flag("--verify", opt.verify, "re-validate the witness chain hop by hop");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitDecided : kExitUsage;
  }

  try {
    if (reduce->parsed()) return run_reduce(opt);
    if (apply->parsed()) return run_apply(opt);
    if (wgraph->parsed()) return run_wgraph(opt);
    if (graph->parsed()) return run_graph(opt);
    if (primitive->parsed()) return run_primitive(opt);
    if (freefactor->parsed()) return run_freefactor(opt);
    if (witness->parsed()) return run_witness(opt);
    if (dist->parsed()) return run_distance(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
