// Command-line front end: pi | relations | clusters | verify | kernel | decompose.
//
// Exit codes: 0 success, 2 usage or configuration error, 3 verification failure.

#include "exrel/driver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace exrel;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

struct Options {
  std::string type = "A";
  int rank = 2;
  std::string coxeter;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string level = "structural";
  std::string out;
  std::size_t limit = 0;
  int jobs = 1;
  std::string weight;
};

json config_json(const Options& o, const RootSystem& rs, const std::string& coxeter) {
  return {{"type", rs.name()},
          {"family", std::string(1, family_letter(rs.family()))},
          {"rank", rs.rank()},
          {"coxeter", coxeter},
          {"seed", o.seed},
          {"level", o.level},
          {"basis",
           {{"weights", "fundamental weights omega_1..omega_n"},
            {"roots", "simple roots alpha_1..alpha_n"},
            {"coroots", "simple coroots alpha_1^vee..alpha_n^vee"}}}};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error(ErrorKind::InvalidWord, "cannot open output file " + o.out);
  file << text;
}

std::string render(const Options& o, const json& doc, const std::string& text) {
  return o.format == "json" ? doc.dump(2) + "\n" : text;
}

Weight parse_weight(const std::string& s, int rank) {
  std::vector<Int> values;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      values.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::IndexOutOfRange, "bad weight entry '" + item + "'");
    }
  }
  if (static_cast<int>(values.size()) != rank)
    throw Error(ErrorKind::IndexOutOfRange,
                "weight has " + std::to_string(values.size()) + " entries, rank is " + std::to_string(rank));
  return from_std(values);
}

int run(const std::string& command, const Options& o) {
  const RootSystem rs(parse_family(o.type), o.rank);
  JobConfig job;
  job.coxeter = o.coxeter.empty() ? (command == "verify" ? "all" : identity_word(rs).to_string()) : o.coxeter;
  job.seed = o.seed;
  const auto words = resolve_words(rs, job);
  std::optional<Weight> weight;
  if (command == "decompose") weight = parse_weight(o.weight, rs.rank());

  json doc{{"config", config_json(o, rs, job.coxeter)}, {"results", json::array()}, {"invariant_report", json::object()}};
  std::ostringstream text;
  int exit_code = 0;

  if (command == "verify") {
    VerifyOptions options;
    options.level = o.level == "symbolic" ? Level::Symbolic : o.level == "none" ? Level::None : Level::Structural;
    options.limit = o.limit;
    const auto start = std::chrono::steady_clock::now();
    std::vector<WordVerification> results(words.size());
    parallel_for(words.size(), o.jobs, [&](std::size_t i) { results[i] = verify_word(rs, words[i], options); });
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::size_t pairs = 0, matched = 0, mismatched = 0, multi = 0, failing = 0, symbolic = 0, symbolic_failed = 0,
                violations = 0;
    json counterexamples = json::array();
    for (const auto& r : results) {
      doc["results"].push_back(verification_json(r));
      pairs += r.formula_edges;
      matched += r.cross.matched;
      mismatched += r.cross.mismatched;
      multi += r.eq1_multisolution_pairs;
      violations += r.theorem_violations;
      if (r.counterexample) counterexamples.push_back(counterexample_json(*r.counterexample));
      symbolic += r.symbolic_checked;
      symbolic_failed += r.symbolic_failed + r.coefficient_free_failed;
      if (!r.ok()) ++failing;
      text << "c=" << r.word << "  relations=" << r.formula_edges << " matched=" << r.cross.matched
           << " mismatched=" << r.cross.mismatched << " eq1_multi=" << r.eq1_multisolution_pairs
           << (r.theorem_violations ? " theorem_violations=" + std::to_string(r.theorem_violations) : "")
           << (r.symbolic_run ? " symbolic=" + std::to_string(r.symbolic_checked - r.symbolic_failed) + "/" +
                                    std::to_string(r.symbolic_checked)
                              : "")
           << (r.ok() ? "  ok" : "  FAIL") << "\n";
    }
    doc["invariant_report"] = {{"words", words.size()},
                               {"pairs", pairs},
                               {"matched", matched},
                               {"mismatched", mismatched},
                               {"failing_words", failing},
                               {"eq1_multisolution_count", multi},
                               {"theorem_violations", violations},
                               {"counterexamples", counterexamples},
                               {"symbolic_checked", symbolic},
                               {"symbolic_failed", symbolic_failed},
                               {"runtime_seconds", seconds}};
    text << "words=" << words.size() << " pairs=" << pairs << " matched=" << matched << " mismatched=" << mismatched
         << " eq1_multisolution_count=" << multi << " theorem_violations=" << violations << " runtime=" << seconds
         << "s\n";
    if (failing) exit_code = kExitVerification;
    emit(o, render(o, doc, text.str()));
    return exit_code;
  }

  std::vector<json> per_word(words.size());
  std::vector<std::string> per_text(words.size());
  std::vector<std::size_t> eq1_failures(words.size(), 0), eq2_failures(words.size(), 0),
      wall_failures(words.size(), 0), records(words.size(), 0);
  std::vector<std::optional<Counterexample>> counterexamples(words.size());

  parallel_for(words.size(), o.jobs, [&](std::size_t i) {
    const Configuration cfg(rs, words[i]);
    std::ostringstream t;
    if (command == "pi") {
      per_word[i] = pi_json(cfg);
      t << "c=" << cfg.word.to_string() << " |Pi(c)|=" << cfg.pi.size() << " tau order=" << cfg.pi.order() << "\n";
      t << "h =";
      for (int h : cfg.pi.heights()) t << ' ' << h;
      t << "\n";
      for (const auto& w : cfg.pi.elements()) t << "  " << format_vector(w) << "\n";
    } else if (command == "clusters") {
      per_word[i] = clusters_json(cfg);
      t << "c=" << cfg.word.to_string() << " clusters=" << cfg.clusters.size() << "\n";
      for (const auto& c : cfg.clusters.clusters()) {
        t << " ";
        for (auto e : c) t << ' ' << format_vector(cfg.pi[e]);
        t << "\n";
      }
    } else if (command == "kernel") {
      per_word[i] = kernel_json(cfg);
      t << "c=" << cfg.word.to_string() << " dim ker B_c=" << per_word[i]["dimension"].get<int>() << "\n";
      for (std::size_t b = 0; b < per_word[i]["basis"].size(); ++b)
        t << "  " << per_word[i]["basis"][b].dump() << " components=" << per_word[i]["support_components"][b].dump()
          << "\n";
    } else if (command == "decompose") {
      per_word[i] = decompose_json(cfg, *weight);
      t << "c=" << cfg.word.to_string() << " " << format_vector(*weight) << " =";
      const auto mono = cfg.clusters.monomial(*weight);
      if (mono.empty()) t << " (empty monomial)";
      for (const auto& [e, mult] : mono) t << ' ' << mult << "*" << format_vector(cfg.pi[e]);
      t << "\n";
    } else if (command == "relations") {
      Configuration& mutable_cfg = const_cast<Configuration&>(cfg);
      json list = json::array();
      try {
        for (const auto& inst : mutable_cfg.builder.all_relations()) {
          const auto& r = inst.relation;
          const Weight lhs = -(cfg.bc * r.alpha.root);
          if (lhs != r.sum - r.uplus) ++eq1_failures[i];
          if (pair(r.lambda, r.alpha) * pair(r.mu, r.alpha) != -1) ++eq2_failures[i];
          if (wall_violations(inst) != 0) ++wall_failures[i];
          ++records[i];
          list.push_back(relation_json(r));
          t << relation_text(r) << "\n";
        }
      } catch (const TheoremViolation& tv) {
        counterexamples[i] = tv.counterexample();
      }
      per_word[i] = {{"word", cfg.word.to_string()}, {"count", list.size()}, {"relations", std::move(list)}};
    }
    per_text[i] = t.str();
  });

  for (std::size_t i = 0; i < words.size(); ++i) {
    doc["results"].push_back(per_word[i]);
    text << per_text[i];
  }
  if (command == "relations") {
    std::size_t total = 0, e1 = 0, e2 = 0, wall = 0;
    json ces = json::array();
    for (std::size_t i = 0; i < words.size(); ++i) {
      total += records[i];
      e1 += eq1_failures[i];
      e2 += eq2_failures[i];
      wall += wall_failures[i];
      if (counterexamples[i]) ces.push_back(counterexample_json(*counterexamples[i]));
    }
    doc["invariant_report"] = {{"records", total},
                               {"homogeneity_failures", e1},
                               {"pairing_failures", e2},
                               {"wall_failures", wall},
                               {"counterexamples", ces}};
    if (e1 || e2 || wall || !ces.empty()) exit_code = kExitVerification;
  }
  emit(o, render(o, doc, text.str()));
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exchange relations of finite type cluster algebras with principal coefficients"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Cartan type family A..G")->required();
    sub->add_option("--rank", o.rank, "rank n")->required();
    sub->add_option("--coxeter", o.coxeter, "Coxeter word 1,2,..,n | all | sample:k");
    sub->add_option("--seed", o.seed, "seed for sample:k");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "write output to FILE");
    sub->add_option("--jobs", o.jobs, "worker threads over Coxeter words");
  };

  std::vector<CLI::App*> subs{
      app.add_subcommand("pi", "g-vectors of cluster variables, h(i;c) and tau orbits"),
      app.add_subcommand("relations", "all exchange relations"),
      app.add_subcommand("clusters", "all clusters as sets of g-vectors"),
      app.add_subcommand("verify", "check the formula against seed mutation"),
      app.add_subcommand("kernel", "kernel of B_c"),
      app.add_subcommand("decompose", "cluster monomial with a given g-vector"),
  };
  for (auto* sub : subs) add_common(sub);
  subs[3]->add_option("--level", o.level, "none, structural or symbolic")->check(CLI::IsMember({"none", "structural", "symbolic"}));
  subs[3]->add_option("--limit", o.limit, "maximum number of seeds in the exchange graph");
  subs[5]->add_option("--weight", o.weight, "comma-separated weight")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string command;
  for (auto* sub : subs)
    if (sub->parsed()) command = sub->get_name();

  try {
    return run(command, o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::UnsupportedType:
      case ErrorKind::InvalidWord:
      case ErrorKind::IndexOutOfRange:
        return kExitUsage;
      default:
        return kExitVerification;
    }
  }
}
