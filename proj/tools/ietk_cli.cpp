#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ietk/errors.hpp"
#include "ietk/golden.hpp"
#include "ietk/io.hpp"

using namespace ietk;
using io::json;

namespace {

struct Common {
  int precision_bits = 256;
  int max_bits = kDefaultMaxBits;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

json config_json(const Common& c, const std::string& command) {
  return {{"command", command},
          {"precision_bits", c.precision_bits},
          {"max_bits", c.max_bits},
          {"seed", c.seed},
          {"out", c.out},
          {"format", c.format}};
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot open " + c.out + " for writing");
  f << text;
}

// "5,4,3,2,1", "[5,4,3,2,1]" or {"m": 5, "image": [...]}.
Permutation parse_perm(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ValidationError(std::string("permutation JSON: ") + e.what());
    }
    return io::permutation_from_json(j);
  }
  std::vector<int> image;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      image.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ValidationError("permutation: bad entry \"" + item + "\"");
    }
  }
  return Permutation(std::move(image));
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::vector<CertifiedReal> parse_reals(const std::string& text) {
  std::vector<CertifiedReal> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(CertifiedReal::parse(item));
  return v;
}

void print_checklist(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    std::cerr << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : " :: " + c.detail) << "\n";
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval exchange toolkit: Rauzy classes, self-similar IETs, witnesses and flow diagnostics"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--precision-bits", c.precision_bits, "target enclosure precision")->check(CLI::PositiveNumber);
  app.add_option("--max-bits", c.max_bits, "cap for precision escalation")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "random seed");
  app.add_option("--out", c.out, "output file (default stdout)");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "dot"}));

  std::string perm_text = "5,4,3,2,1";
  std::string labels = golden::kLoop;

  auto* graph = app.add_subcommand("graph", "Rauzy graph of a permutation's class");
  graph->add_option("--perm", perm_text, "permutation image, e.g. 5,4,3,2,1, or its JSON");

  auto* cls = app.add_subcommand("class", "Rauzy class summary");
  cls->add_option("--perm", perm_text, "permutation");

  std::string iet_file, lengths_text;
  int steps = 12;
  auto* induce_cmd = app.add_subcommand("induce", "Rauzy induction steps");
  induce_cmd->add_option("--iet", iet_file, "IET JSON file");
  induce_cmd->add_option("--perm", perm_text, "permutation (with --lengths)");
  induce_cmd->add_option("--lengths", lengths_text, "comma separated lengths, p/q or decimals");
  induce_cmd->add_option("--steps", steps, "number of steps")->check(CLI::NonNegativeNumber);

  int max_len = 12;
  std::size_t limit = 0;
  auto* find = app.add_subcommand("find-periodic", "closed primitive paths at a permutation");
  find->add_option("--perm", perm_text, "permutation");
  find->add_option("--max-len", max_len, "maximal path length")->check(CLI::PositiveNumber);
  find->add_option("--limit", limit, "keep only the first paths (0 = all)");

  bool tamper = false;
  auto* verify = app.add_subcommand("verify-golden", "reproduce the golden 5-interval example");
  verify->add_flag("--tamper-matrix", tamper, "negative control: perturb one matrix entry");

  int witness_len = 64;
  auto* search = app.add_subcommand("search-witness", "witness pair for the self-similar IET of a loop");
  search->add_option("--perm", perm_text, "start permutation of the loop");
  search->add_option("--path", labels, "loop labels");
  search->add_option("--max-len", witness_len, "witness word length cap")->check(CLI::PositiveNumber);

  ReductionOptions ropt;
  int m = 5;
  auto* reduce = app.add_subcommand("reduce", "witness certificate at the symmetric permutation for odd m");
  reduce->add_option("--m", m, "number of intervals (odd, >= 5)");
  reduce->add_option("--max-m", ropt.max_m, "cap on m");
  reduce->add_option("--draws", ropt.max_draws, "perturbation draws")->check(CLI::PositiveNumber);
  reduce->add_option("--idoc-horizon", ropt.idoc_horizon, "IDOC horizon")->check(CLI::PositiveNumber);
  reduce->add_option("--path-max-len", ropt.path_max_len, "closed path length cap")->check(CLI::PositiveNumber);
  reduce->add_option("--witness-max-len", ropt.witness_max_len, "witness length cap")->check(CLI::PositiveNumber);

  int periods = 4, samples = 3;
  std::string w1_text, w2_text, roof_text;
  auto* flow = app.add_subcommand("flow-diag", "Rohlin tower and cocycle diagnostics");
  flow->add_option("--perm", perm_text, "start permutation of the loop");
  flow->add_option("--path", labels, "loop labels");
  flow->add_option("--w1", w1_text, "first witness word (default sigma(251534) for the golden loop)");
  flow->add_option("--w2", w2_text, "second witness word (default sigma(5153351))");
  flow->add_option("--periods", periods, "number of periods")->check(CLI::PositiveNumber);
  flow->add_option("--samples", samples, "cocycle samples per word")->check(CLI::PositiveNumber);
  flow->add_option("--roof", roof_text, "roof heights, comma separated (default all 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    json cfg;
    if (graph->parsed()) {
      cfg = config_json(c, "graph");
      Permutation p = parse_perm(perm_text);
      cfg["perm"] = io::to_json(p);
      RauzyClass rc(p);
      std::cerr << "vertices: " << rc.size() << "\n";
      if (c.format == "dot") {
        emit(c, rc.to_dot());
      } else {
        json vs = json::array(), es = json::array();
        for (std::size_t v = 0; v < rc.size(); ++v) {
          vs.push_back(rc.vertices()[v].image());
          for (Label l : {Label::a, Label::b})
            es.push_back({{"from", v}, {"to", rc.successor(static_cast<int>(v), l)}, {"label", std::string(1, to_char(l))}});
        }
        emit(c, io::dump(io::envelope("graph", cfg, {{"vertices", vs}, {"edges", es}})));
      }
      return 0;
    }
    if (cls->parsed()) {
      cfg = config_json(c, "class");
      Permutation p = parse_perm(perm_text);
      cfg["perm"] = io::to_json(p);
      RauzyClass rc(p);
      json vs = json::array();
      for (const auto& v : rc.vertices()) vs.push_back(v.image());
      json sets = json::array();
      for (const auto& s : cyclic_sets(p))
        sets.push_back({{"S", s.members}, {"b", b_vector(s, p.size())}});
      emit(c, io::dump(io::envelope("class", cfg,
                                    {{"size", rc.size()},
                                     {"vertices", vs},
                                     {"cyclic_sets", sets},
                                     {"tilde_class", in_tilde_class(p)}})));
      return 0;
    }
    if (induce_cmd->parsed()) {
      cfg = config_json(c, "induce");
      cfg["steps"] = steps;
      IetPair t;
      if (!iet_file.empty()) {
        cfg["iet"] = iet_file;
        t = io::iet_from_json(read_json_file(iet_file), c.precision_bits, c.max_bits);
      } else {
        if (lengths_text.empty()) throw ValidationError("induce: give --iet or --perm with --lengths");
        cfg["perm"] = perm_text;
        cfg["lengths"] = lengths_text;
        t = make_iet(parse_reals(lengths_text), parse_perm(perm_text), {}, c.max_bits);
      }
      InductionRun run = induce(t, steps);
      std::string ls;
      for (Label l : run.labels) ls += to_char(l);
      emit(c, io::dump(io::envelope("induction", cfg,
                                    {{"start", io::to_json(t)},
                                     {"labels", ls},
                                     {"matrix", io::to_json(run.matrix)},
                                     {"end", io::to_json(run.end)}})));
      return 0;
    }
    if (find->parsed()) {
      cfg = config_json(c, "find-periodic");
      Permutation p = parse_perm(perm_text);
      cfg["perm"] = io::to_json(p);
      cfg["max_len"] = max_len;
      cfg["limit"] = limit;
      auto paths = find_closed_primitive_paths(p, max_len, limit);
      json list = json::array();
      for (const auto& path : paths) {
        ComposedPath cp = compose_path(path);
        list.push_back({{"labels", path.label_string()}, {"length", path.size()}, {"matrix", io::to_json(cp.matrix)}});
      }
      std::cerr << "closed primitive paths: " << paths.size() << "\n";
      emit(c, io::dump(io::envelope("periodic_paths", cfg, {{"paths", list}, {"count", paths.size()}})));
      return paths.empty() ? 1 : 0;
    }
    if (verify->parsed()) {
      cfg = config_json(c, "verify-golden");
      cfg["tamper_matrix"] = tamper;
      golden::Options o;
      o.precision_bits = c.precision_bits;
      o.max_bits = c.max_bits;
      o.tamper_matrix = tamper;
      auto checks = golden::verify(o);
      print_checklist(checks);
      bool ok = all_passed(checks);
      emit(c, io::dump(io::envelope("golden_report", cfg, {{"checks", io::to_json(checks)}, {"passed", ok}})));
      return ok ? 0 : 1;
    }
    if (search->parsed()) {
      cfg = config_json(c, "search-witness");
      RauzyPath path(parse_perm(perm_text), labels);
      cfg["path"] = io::to_json(path);
      cfg["max_len"] = witness_len;
      PeriodicIet pi = periodic_iet_from_path(path, c.precision_bits, c.max_bits);
      Substitution s = substitution_from_induction(pi.iet, static_cast<int>(path.size()));
      WitnessPair wp = find_witness_pair(s, cyclic_sets(path.start), witness_len);
      std::vector<Check> checks{
          {"w1 recurrence on the IET", is_recurrence_word(pi.iet, wp.w1), ""},
          {"w2 recurrence on the IET", is_recurrence_word(pi.iet, wp.w2), ""},
          {"difference is b(S)",
           population(wp.w1, path.start.size()) - population(wp.w2, path.start.size()) == b_vector(wp.set, path.start.size()),
           ""}};
      print_checklist(checks);
      bool ok = all_passed(checks);
      emit(c, io::dump(io::envelope("witness", cfg,
                                    {{"iet", io::to_json(pi.iet.pair())},
                                     {"substitution", io::to_json(s)},
                                     {"witness", io::to_json(wp, path.start.size())},
                                     {"checks", io::to_json(checks)},
                                     {"passed", ok}})));
      return ok ? 0 : 1;
    }
    if (reduce->parsed()) {
      ropt.seed = c.seed;
      ropt.bits = c.precision_bits;
      cfg = config_json(c, "reduce");
      cfg["m"] = m;
      cfg["max_m"] = ropt.max_m;
      cfg["draws"] = ropt.max_draws;
      cfg["idoc_horizon"] = ropt.idoc_horizon;
      cfg["path_max_len"] = ropt.path_max_len;
      cfg["witness_max_len"] = ropt.witness_max_len;
      WitnessCertificate cert = full_reduction(m, ropt);
      print_checklist(cert.transcript);
      emit(c, io::dump(io::envelope("certificate", cfg, io::to_json(cert))));
      return cert.verified() ? 0 : 1;
    }
    if (flow->parsed()) {
      cfg = config_json(c, "flow-diag");
      RauzyPath path(parse_perm(perm_text), labels);
      cfg["path"] = io::to_json(path);
      cfg["periods"] = periods;
      cfg["samples"] = samples;
      PeriodicIet pi = periodic_iet_from_path(path, c.precision_bits, c.max_bits);
      Word w1, w2;
      if (w1_text.empty() || w2_text.empty()) {
        if (!(path.start == tau_sym(5) && path.label_string() == golden::kLoop))
          throw ValidationError("flow-diag: --w1 and --w2 are required for a non-golden loop");
        Substitution s = substitution_from_induction(pi.iet, static_cast<int>(path.size()));
        w1 = s.apply(parse_word(golden::kWord1));
        w2 = s.apply(parse_word(golden::kWord2));
      } else {
        w1 = parse_word(w1_text);
        w2 = parse_word(w2_text);
      }
      StepRoof roof = roof_text.empty() ? StepRoof::unit(path.start.size()) : StepRoof(parse_reals(roof_text));
      cfg["roof"] = roof_text.empty() ? "unit" : roof_text;
      auto words = prepare_tower_words(pi.iet, w1, w2);
      json wj = json::array();
      for (const auto& w : words) wj.push_back({{"w", to_string(w.w)}, {"ext", to_string(w.ext)}, {"theta", io::to_json(w.theta, 20)}});
      auto diags = tower_diagnostics(pi, words, periods);
      json series = json::array(), cocycles = json::array(), partitions = json::array();
      bool ok = true;
      int period = pi.positive_power * static_cast<int>(path.size());
      for (const auto& d : diags) {
        series.push_back(io::to_json(d));
        ok = ok && d.ok();
        CocycleReport r = cocycle_constancy_check(pi, words, roof, d.depth, samples, c.seed);
        cocycles.push_back(io::to_json(r));
        ok = ok && r.ok();
        std::cerr << "depth " << d.depth << ": towers " << (d.ok() ? "ok" : "FAIL") << ", cocycle "
                  << (r.ok() ? "ok" : "FAIL") << "\n";
      }
      for (int depth : {0, period}) {
        TowerPartition tp = tower_partition_check(pi, depth);
        partitions.push_back(io::to_json(tp));
        ok = ok && tp.ok();
      }
      emit(c, io::dump(io::envelope("flow_diagnostics", cfg,
                                    {{"words", wj},
                                     {"series", series},
                                     {"cocycle", cocycles},
                                     {"partition", partitions},
                                     {"passed", ok}})));
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << error_kind(e) << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}
