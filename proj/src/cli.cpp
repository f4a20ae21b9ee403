#include "tangle/cli.hpp"

#include "tangle/error.hpp"
#include "tangle/experiment.hpp"
#include "tangle/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifndef TANGLE_VERSION
#define TANGLE_VERSION "unknown"
#endif

namespace tangle::cli {

namespace {

struct CommonOptions {
  int rank = 2;
  std::string degrees = "3";
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 0;
  std::uint64_t budget = default_enumeration_budget;
  unsigned threads = 1;
  std::string out;
  std::string format = "json";
};

void add_output_options(CLI::App &cmd, CommonOptions &o) {
  cmd.add_option("--out", o.out, "Write the report to this file");
  cmd.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_degree_options(CLI::App &cmd, CommonOptions &o) {
  auto *degrees = cmd.add_option(
      "--degrees", o.degrees, "Degrees n as start:stop[:step] (inclusive)");
  cmd.add_option("--degree", o.degrees, "A single degree n")
      ->excludes(degrees);
}

void add_sampling_options(CLI::App &cmd, CommonOptions &o) {
  cmd.add_option("--seed", o.seed, "Seed of the sample streams");
  cmd.add_option("--samples", o.samples, "Monte Carlo samples per degree");
  cmd.add_option("--threads", o.threads,
                 "Worker threads (does not change results)")
      ->check(CLI::Range(1u, 1024u));
}

std::string csv_field(const Json &value) {
  std::string text = value.is_string() ? value.get<std::string>()
                                       : value.dump();
  if (text.find_first_of(",\"\n") == std::string::npos)
    return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string render(const Json &report, const std::string &format) {
  if (format == "json")
    return report.dump(2) + "\n";

  std::ostringstream os;
  os << "# tool=" << report["tool"].get<std::string>()
     << " version=" << report["version"].get<std::string>() << "\n";
  os << "# command=" << report["command"].get<std::string>() << "\n";
  os << "# config=" << report["config"].dump() << "\n";
  for (const auto &w : report["warnings"])
    os << "# warning=" << w.get<std::string>() << "\n";
  const Json &rows = report["rows"];
  if (rows.empty())
    return os.str();
  bool first = true;
  for (const auto &[key, value] : rows.front().items()) {
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << "\n";
  for (const Json &row : rows) {
    first = true;
    for (const auto &[key, value] : row.items()) {
      os << (first ? "" : ",") << csv_field(value);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

Json fraction_row(const FractionEstimate &e) {
  return Json{{"degree", e.degree},
              {"numerator", e.numerator},
              {"denominator", e.denominator},
              {"estimate", e.estimate},
              {"std_error", e.std_error},
              {"exact", e.exact},
              {"n_times_estimate",
               static_cast<double>(e.degree) * e.estimate}};
}

Json labelling_json(const VertexLabelling &f) {
  return Json(f.labels);
}

Json witness_json(const HoroballWitness &w) {
  return Json{{"pair_id", w.pair_id},
              {"k", w.k},
              {"d1", w.degrees.d1},
              {"d2", w.degrees.d2},
              {"lift_length", w.lift_length},
              {"tangled", w.tangled}};
}

std::uint64_t require_seed(const CommonOptions &o, const std::string &cmd) {
  if (!o.seed)
    throw InvalidArgument(cmd + ": --seed is required for Monte Carlo runs");
  return *o.seed;
}

class Runner {
public:
  explicit Runner(std::ostream &err) : err_(err) {}

  Json report(const std::string &command, Json config, Json rows) {
    return Json{{"tool", "tangle"},
                {"version", version()},
                {"command", command},
                {"config", std::move(config)},
                {"warnings", std::move(warnings_)},
                {"rows", std::move(rows)}};
  }

  void warn(const std::string &message) {
    err_ << "warning: " << message << "\n";
    warnings_.push_back(message);
  }

private:
  std::ostream &err_;
  Json warnings_ = Json::array();
};

} // namespace

const char *version() { return TANGLE_VERSION; }

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Tangling, carrier graphs and horoball checks for random "
               "permutation representations of free groups",
               "tangle"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  CommonOptions o;
  std::string w1_text, w2_text, graph_path, hom_path, surface_path;
  std::uint64_t R = 2;
  bool transitive = false;
  double L = 1.0;
  Point k = 1;
  std::size_t witness_limit = default_witness_limit;
  std::vector<std::string> word_texts;

  auto add_word_pair = [&](CLI::App &cmd) {
    cmd.add_option("--w1", w1_text, "First word")->required();
    cmd.add_option("--w2", w2_text, "Second word")->required();
    cmd.add_option("--rank", o.rank, "Rank m of the free group")
        ->check(CLI::PositiveNumber);
  };

  auto *tangle_exact =
      app.add_subcommand("tangle-exact", "Exact fraction of R-tangling "
                                         "homomorphisms by enumeration");
  add_word_pair(*tangle_exact);
  tangle_exact->add_option("--R", R, "Tangling radius R")->required();
  tangle_exact->add_flag("--transitive", transitive,
                         "Restrict to transitive homomorphisms");
  add_degree_options(*tangle_exact, o);
  tangle_exact->add_option("--budget", o.budget, "Enumeration budget");
  add_output_options(*tangle_exact, o);

  auto *tangle_mc = app.add_subcommand(
      "tangle-mc", "Monte Carlo fraction of R-tangling homomorphisms");
  add_word_pair(*tangle_mc);
  tangle_mc->add_option("--R", R, "Tangling radius R")->required();
  tangle_mc->add_flag("--transitive", transitive,
                      "Restrict to transitive homomorphisms");
  add_degree_options(*tangle_mc, o);
  add_sampling_options(*tangle_mc, o);
  add_output_options(*tangle_mc, o);

  auto *transitive_frac = app.add_subcommand(
      "transitive-frac",
      "Fraction of transitive homomorphisms (exact when --samples is 0)");
  transitive_frac->add_option("--rank", o.rank, "Rank m")
      ->check(CLI::PositiveNumber);
  add_degree_options(*transitive_frac, o);
  add_sampling_options(*transitive_frac, o);
  transitive_frac->add_option("--budget", o.budget, "Enumeration budget");
  add_output_options(*transitive_frac, o);

  auto *count_bound = app.add_subcommand(
      "count-bound", "Compare exact carried counts with the counting bound");
  count_bound->add_option("--graph", graph_path, "Graph JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  add_degree_options(*count_bound, o);
  count_bound->add_option("--budget", o.budget, "Enumeration budget");
  add_output_options(*count_bound, o);

  auto *horoball = app.add_subcommand(
      "horoball", "Fraction of transitive covers with the L-horoball property "
                  "(exhaustive when --samples is 0)");
  horoball->add_option("--surface", surface_path, "Surface descriptor JSON")
      ->required()
      ->check(CLI::ExistingFile);
  horoball->add_option("--L", L, "Horocycle perimeter L")->required();
  add_degree_options(*horoball, o);
  add_sampling_options(*horoball, o);
  horoball->add_option("--budget", o.budget, "Enumeration budget");
  horoball->add_option("--witnesses", witness_limit,
                       "Failure witnesses to report per degree");
  add_output_options(*horoball, o);

  auto *demo = app.add_subcommand(
      "carrier-demo", "Carrier graph, label quotient and fold for one "
                      "common fixed point");
  add_word_pair(*demo);
  demo->add_option("--hom", hom_path, "Homomorphism JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  demo->add_option("--k", k, "Common fixed point")->required();
  add_output_options(*demo, o);

  auto *fold = app.add_subcommand(
      "fold", "Stallings-fold the subgroup generated by the given words");
  fold->add_option("--word", word_texts, "Generator word (repeatable)")
      ->required();
  fold->add_option("--rank", o.rank, "Rank m")->check(CLI::PositiveNumber);
  add_output_options(*fold, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    std::ostringstream help_out, help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? success : usage_error;
  }

  Runner runner(err);
  try {
    Json result;
    if (tangle_exact->parsed() || tangle_mc->parsed()) {
      const Word w1 = parse_word(w1_text, o.rank);
      const Word w2 = parse_word(w2_text, o.rank);
      const bool mc = tangle_mc->parsed();
      Json config{{"w1", to_string(w1)},       {"w2", to_string(w2)},
                  {"rank", o.rank},            {"R", R},
                  {"degrees", o.degrees},      {"transitive_only", transitive}};
      MonteCarloConfig mcc;
      if (mc) {
        mcc = {o.samples, require_seed(o, "tangle-mc"), o.threads};
        config["seed"] = mcc.seed;
        config["samples"] = mcc.samples;
      } else {
        config["budget"] = o.budget;
      }
      Json rows = Json::array();
      for (std::size_t n : parse_degree_range(o.degrees))
        rows.push_back(fraction_row(
            mc ? mc_tangled_fraction(w1, w2, R, n, transitive, mcc)
               : exact_tangled_fraction(w1, w2, R, n, transitive, o.budget)));
      result = runner.report(mc ? "tangle-mc" : "tangle-exact",
                             std::move(config), std::move(rows));
    } else if (transitive_frac->parsed()) {
      Json config{{"rank", o.rank}, {"degrees", o.degrees}};
      const bool mc = o.samples > 0;
      MonteCarloConfig mcc;
      if (mc) {
        mcc = {o.samples, require_seed(o, "transitive-frac"), o.threads};
        config["seed"] = mcc.seed;
        config["samples"] = mcc.samples;
      } else {
        config["budget"] = o.budget;
      }
      Json rows = Json::array();
      for (std::size_t n : parse_degree_range(o.degrees)) {
        Json row = fraction_row(
            mc ? mc_transitive_fraction(o.rank, n, mcc)
               : exact_transitive_fraction(o.rank, n, o.budget));
        row.erase("n_times_estimate");
        rows.push_back(std::move(row));
      }
      result = runner.report("transitive-frac", std::move(config),
                             std::move(rows));
    } else if (count_bound->parsed()) {
      const RootedGraph g = graph_from_json(read_json_file(graph_path));
      if (!is_valid(g.graph))
        throw InvalidArgument("count-bound needs a valid graph (no two edges "
                              "with the same endpoints and label)");
      Json config{{"graph", to_json(g.graph, g.basepoint)},
                  {"degrees", o.degrees},
                  {"budget", o.budget}};
      Json rows = Json::array();
      const auto degrees = parse_degree_range(o.degrees);
      for (const CountBoundRow &r : verify_count_bound(g.graph, degrees,
                                                       o.budget)) {
        const double n_pow_chi =
            std::pow(static_cast<double>(r.degree), static_cast<double>(r.chi));
        rows.push_back(Json{
            {"degree", r.degree},
            {"exact_count", r.exact},
            {"bound", r.bound.str()},
            {"exact_ratio", r.exact_ratio},
            {"bound_ratio", r.bound_ratio},
            {"constant", r.constant.str()},
            {"chi", r.chi},
            {"c_n_chi", r.constant.convert_to<double>() * n_pow_chi},
            {"holds", r.holds}});
        if (!r.holds)
          throw Error("internal: carried count exceeds the counting bound");
      }
      result = runner.report("count-bound", std::move(config), std::move(rows));
    } else if (horoball->parsed()) {
      const BaseSurface surface =
          surface_from_json(read_json_file(surface_path));
      if (!(L > 0.0) || !std::isfinite(L))
        throw InvalidArgument("--L must be positive");
      if (L < 1.0)
        runner.warn("L < 1: the horoball property holds trivially");
      Json config{{"surface", to_json(surface)},
                  {"L", L},
                  {"degrees", o.degrees},
                  {"witnesses", witness_limit}};
      const bool mc = o.samples > 0;
      MonteCarloConfig mcc;
      if (mc) {
        mcc = {o.samples, require_seed(o, "horoball"), o.threads};
        config["seed"] = mcc.seed;
        config["samples"] = mcc.samples;
      } else {
        config["budget"] = o.budget;
      }
      Json rows = Json::array();
      for (std::size_t n : parse_degree_range(o.degrees)) {
        const HoroballRow r =
            mc ? horoball_mc(surface, L, n, mcc, witness_limit)
               : horoball_exact(surface, L, n, o.budget, witness_limit);
        Json witnesses = Json::array();
        for (const auto &w : r.witnesses)
          witnesses.push_back(witness_json(w));
        rows.push_back(Json{{"degree", r.degree},
                            {"covers", r.covers},
                            {"with_property", r.with_property},
                            {"fraction", r.fraction},
                            {"std_error", r.std_error},
                            {"exact", r.exact},
                            {"failures", r.covers - r.with_property},
                            {"failures_tangled", r.failures_tangled},
                            {"witnesses", std::move(witnesses)}});
      }
      result = runner.report("horoball", std::move(config), std::move(rows));
    } else if (demo->parsed()) {
      const Homomorphism phi = hom_from_json(read_json_file(hom_path));
      const Word w1 = parse_word(w1_text, phi.rank());
      const Word w2 = parse_word(w2_text, phi.rank());
      const CarrierDemo d = carrier_demo(w1, w2, phi, k);
      if (!d.hypothesis_holds)
        runner.warn("w1 and w2 commute; the folded carrier need not have "
                    "negative Euler characteristic");
      Json config{{"w1", to_string(w1)},
                  {"w2", to_string(w2)},
                  {"hom", to_json(phi)},
                  {"k", k}};
      auto stage = [](const char *name, const LabelledGraph &g,
                      const VertexLabelling &f, std::size_t basepoint) {
        return Json{{"stage", name},
                    {"vertices", g.vertex_count()},
                    {"edges", g.edge_count()},
                    {"chi", euler_characteristic(g)},
                    {"injective", f.is_injective()},
                    {"graph", to_json(g, basepoint)},
                    {"labelling", labelling_json(f)}};
      };
      Json rows = Json::array();
      rows.push_back(stage("carrier", d.carrier.graph, d.carrier.labelling,
                           d.carrier.basepoint));
      rows.push_back(stage("quotient", d.quotient.graph, d.quotient.labelling,
                           d.quotient.basepoint));
      rows.push_back(stage("folded", d.folded, d.quotient.labelling,
                           d.quotient.basepoint));
      result = runner.report("carrier-demo", std::move(config),
                             std::move(rows));
    } else if (fold->parsed()) {
      std::vector<Word> words;
      for (const auto &text : word_texts)
        words.push_back(parse_word(text, o.rank));
      const RootedGraph folded = stallings_fold(words);
      Json config{{"rank", o.rank}, {"words", Json::array()}};
      for (const Word &w : words)
        config["words"].push_back(to_string(w));
      Json rows = Json::array();
      rows.push_back(Json{{"vertices", folded.graph.vertex_count()},
                          {"edges", folded.graph.edge_count()},
                          {"chi", euler_characteristic(folded.graph)},
                          {"subgroup_rank", cycle_rank(folded.graph)},
                          {"graph", to_json(folded.graph, folded.basepoint)}});
      result = runner.report("fold", std::move(config), std::move(rows));
    }

    const std::string text = render(result, o.format);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file)
        throw InvalidArgument("cannot write '" + o.out + "'");
      file << text;
    }
    return success;
  } catch (const BudgetExceeded &e) {
    err << "error: " << e.what() << "\n";
    return budget_exceeded;
  } catch (const HypothesisViolation &e) {
    err << "error: " << e.what() << "\n";
    return hypothesis_violation;
  } catch (const InvalidArgument &e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
}

} // namespace tangle::cli
