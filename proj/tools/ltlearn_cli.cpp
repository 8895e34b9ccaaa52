// Command-line front end: learn separating formulas, generate reduction
// benchmarks, and check formulas against samples.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ltlearn/ltlearn.hpp"

namespace {

using namespace ltlearn;

// learn/check exit codes: 0 found/separates, 1 does not separate,
// 2 input error, 3 no separator exists, 4 none within the size bound.
constexpr int exit_found = 0;
constexpr int exit_not_separating = 1;
constexpr int exit_input_error = 2;
constexpr int exit_no_separator = 3;
constexpr int exit_none_within_bound = 4;

std::vector<std::vector<std::size_t>> parse_subset_list(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(';', i);
    if (j == std::string::npos) j = text.size();
    std::string part = text.substr(i, j - i);
    std::vector<std::size_t> subset;
    std::size_t p = 0;
    while (p <= part.size()) {
      std::size_t q = part.find(',', p);
      if (q == std::string::npos) q = part.size();
      std::string tok = part.substr(p, q - p);
      while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
      while (!tok.empty() && tok.back() == ' ') tok.pop_back();
      if (!tok.empty()) subset.push_back(std::stoull(tok));
      if (q == part.size()) break;
      p = q + 1;
    }
    if (!subset.empty()) out.push_back(std::move(subset));
    if (j == text.size()) break;
    i = j + 1;
  }
  return out;
}

struct learn_args {
  std::string input;
  std::string fragment;
  std::string mode = "auto";
  std::size_t max_size = 0;
  std::string output = "text";
  unsigned jobs = 1;
};

void print_result(const learn_result& r, double ms, const std::string& output) {
  if (output == "json") {
    nlohmann::json j;
    j["time_ms"] = ms;
    switch (r.kind()) {
      case learn_result::outcome::found:
        j["result"] = "found";
        j["formula"] = format_formula(r.found_formula());
        j["size"] = r.found_size();
        break;
      case learn_result::outcome::no_separator:
        j["result"] = "no-separator";
        break;
      case learn_result::outcome::none_within_bound:
        j["result"] = "none-within-bound";
        j["bound"] = r.bound();
        break;
    }
    std::cout << j.dump(2) << '\n';
    return;
  }
  switch (r.kind()) {
    case learn_result::outcome::found:
      std::cout << "result: found\n"
                << "formula: " << format_formula(r.found_formula()) << '\n'
                << "size: " << r.found_size() << '\n';
      break;
    case learn_result::outcome::no_separator:
      std::cout << "result: no separating formula exists in this fragment\n";
      break;
    case learn_result::outcome::none_within_bound:
      std::cout << "result: no separating formula of size <= " << r.bound() << '\n';
      break;
  }
  std::cout << "time_ms: " << ms << '\n';
}

int run_learn(const learn_args& args) {
  sample s = load_sample(args.input);

  std::string fragment_text = args.fragment;
  if (fragment_text.empty()) {
    if (args.mode == "greedy-xand") fragment_text = "X,and";
    else if (args.mode == "fattern") fragment_text = "F,and";
    else fragment_text = "F,G,X,and,or";
  }
  operator_set ops = operator_set::parse_tokens(fragment_text);

  exact_options opt;
  opt.jobs = args.jobs;

  auto t0 = std::chrono::steady_clock::now();
  learn_result r = learn_result::no_separator();

  if (args.mode == "exact") {
    if (args.max_size == 0) throw error("--mode exact requires --max-size");
    r = learn_exact(s, ops, args.max_size, opt);
  } else if (args.mode == "minimal") {
    r = learn_minimal(s, ops, opt);
  } else if (args.mode == "greedy-xand") {
    if (ops != operator_set(op_next | op_and))
      throw error("--mode greedy-xand requires --fragment X,and");
    auto p = greedy_xand(s);
    r = p ? learn_result::found(p->to_formula()) : learn_result::no_separator();
  } else if (args.mode == "fattern") {
    if (ops != operator_set(op_eventually | op_and))
      throw error("--mode fattern requires --fragment F,and");
    r = learn_fand_heuristic(s);
  } else if (args.mode == "auto") {
    try {
      r = learn_minimal(s, ops, opt);
    } catch (const unsupported_error&) {
      if (args.max_size == 0) throw;
      r = learn_exact(s, ops, args.max_size, opt);
    }
  } else {
    throw error("unknown --mode '" + args.mode + "'");
  }

  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  print_result(r, ms, args.output);

  switch (r.kind()) {
    case learn_result::outcome::found: return exit_found;
    case learn_result::outcome::no_separator: return exit_no_separator;
    default: return exit_none_within_bound;
  }
}

int run_check(const std::string& formula_text, const std::string& input) {
  formula f = parse_formula(formula_text);
  sample s = load_sample(input);
  bool ok = true;
  for (const word& u : s.positives) {
    bool sat = evaluate(f, u, 1);
    ok = ok && sat;
    std::cout << "+ " << to_string(u) << "\t" << (sat ? "sat" : "UNSAT") << '\n';
  }
  for (const word& v : s.negatives) {
    bool sat = evaluate(f, v, 1);
    ok = ok && !sat;
    std::cout << "- " << to_string(v) << "\t" << (sat ? "SAT" : "unsat") << '\n';
  }
  std::cout << (ok ? "separating" : "not separating") << '\n';
  return ok ? exit_found : exit_not_separating;
}

int write_benchmark(const generated_benchmark& b, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::filesystem::path dir(out_dir);
  std::string sample_path = (dir / "sample.json").string();
  {
    std::ofstream out(sample_path);
    out << sample_to_json(b.instance_sample).dump(2) << '\n';
  }
  {
    std::ofstream out(dir / "manifest.json");
    out << benchmark_manifest(b, "sample.json").dump(2) << '\n';
  }
  std::cout << "K = " << b.threshold << '\n';
  if (b.witness)
    std::cout << "witness size = " << b.witness->size() << '\n';
  else
    std::cout << "witness: none\n";
  if (b.unsatisfiable_cover) std::cout << "note: cover is unsatisfiable\n";
  std::cout << "wrote " << sample_path << '\n';
  return exit_found;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Passive learning of LTL formulas over finite traces"};
  app.set_version_flag("--version", "ltlearn 0.1.0");
  app.require_subcommand(1);

  // learn
  learn_args largs;
  auto* learn = app.add_subcommand("learn", "learn a separating formula from a sample");
  learn->add_option("--input", largs.input, "sample file (json or text)")->required();
  learn->add_option("--fragment", largs.fragment,
                    "comma list from {U,F,G,X,and,or}; default F,G,X,and,or");
  learn->add_option("--mode", largs.mode, "exact|minimal|greedy-xand|fattern|auto");
  learn->add_option("--max-size", largs.max_size, "size bound for exact search");
  learn->add_option("--output", largs.output, "text|json");
  learn->add_option("--jobs", largs.jobs, "worker threads for the exact learner");

  // check
  std::string check_formula, check_input;
  auto* check = app.add_subcommand("check", "check a formula against a sample");
  check->add_option("--formula", check_formula, "formula text")->required();
  check->add_option("--input", check_input, "sample file")->required();

  // generate
  auto* gen = app.add_subcommand("generate", "generate reduction benchmarks");
  gen->require_subcommand(1);

  struct gen_args {
    std::size_t ground = 0;
    std::string subsets;
    std::size_t budget = 0;
    std::string instance_file;
    std::string out_dir = ".";
  };
  auto add_hitting_opts = [](CLI::App* cmd, gen_args& a) {
    cmd->add_option("-m,--ground", a.ground, "ground set size");
    cmd->add_option("-T,--subsets", a.subsets, "subsets, e.g. \"1;2,3\"");
    cmd->add_option("-k,--budget", a.budget, "budget k");
    cmd->add_option("--instance", a.instance_file, "instance json file");
    cmd->add_option("--out", a.out_dir, "output directory");
  };

  gen_args hf, fu, f3, g3;
  auto* gen_hf = gen->add_subcommand("hitting-for", "hitting set -> LTL(F,or), one letter pair per element");
  add_hitting_opts(gen_hf, hf);
  auto* gen_fu = gen->add_subcommand("hitting-fand", "hitting set -> LTL(F,and) over alphabet 0..m");
  add_hitting_opts(gen_fu, fu);
  auto* gen_f3 = gen->add_subcommand("fixed3-fand", "hitting set -> LTL(F,and) over {a,b,c}");
  add_hitting_opts(gen_f3, f3);
  auto* gen_g3 = gen->add_subcommand("fixed3-gor", "hitting set -> LTL(G,or) over {a,b,c}");
  add_hitting_opts(gen_g3, g3);

  gen_args sc;
  auto* gen_sc = gen->add_subcommand("setcover-xand", "set cover -> LTL(X,and) over {a,b}");
  gen_sc->add_option("-n,--universe", sc.ground, "universe size");
  gen_sc->add_option("-S,--sets", sc.subsets, "sets, e.g. \"1;2,3\"");
  gen_sc->add_option("-k,--budget", sc.budget, "budget k");
  gen_sc->add_option("--instance", sc.instance_file, "instance json file");
  gen_sc->add_option("--out", sc.out_dir, "output directory");

  std::string padx_input, padx_out = ".";
  bool padx_dual = false;
  auto* gen_px = gen->add_subcommand("pad-x", "pad a single-positive sample so F and G are useless");
  gen_px->add_option("--input", padx_input, "sample file")->required();
  gen_px->add_flag("--dual", padx_dual, "swap the roles of positive and negative words");
  gen_px->add_option("--out", padx_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*learn) return run_learn(largs);
    if (*check) return run_check(check_formula, check_input);

    auto hitting_instance = [](const gen_args& a) {
      if (!a.instance_file.empty()) {
        std::ifstream in(a.instance_file);
        if (!in) throw error("cannot open instance file: " + a.instance_file);
        nlohmann::json j;
        in >> j;
        return hitting_from_json(j);
      }
      hitting_set_instance inst{a.ground, parse_subset_list(a.subsets), a.budget};
      inst.validate();
      return inst;
    };

    if (*gen_hf) return write_benchmark(gen_hitting_for(hitting_instance(hf)), hf.out_dir);
    if (*gen_fu)
      return write_benchmark(gen_hitting_fand_unbounded(hitting_instance(fu)), fu.out_dir);
    if (*gen_f3)
      return write_benchmark(gen_hitting_fand_fixed3(hitting_instance(f3)), f3.out_dir);
    if (*gen_g3)
      return write_benchmark(gen_hitting_gor_fixed3(hitting_instance(g3)), g3.out_dir);

    if (*gen_sc) {
      set_cover_instance inst;
      if (!sc.instance_file.empty()) {
        std::ifstream in(sc.instance_file);
        if (!in) throw error("cannot open instance file: " + sc.instance_file);
        nlohmann::json j;
        in >> j;
        inst = setcover_from_json(j);
      } else {
        inst = set_cover_instance{sc.ground, parse_subset_list(sc.subsets), sc.budget};
        inst.validate();
      }
      return write_benchmark(gen_setcover_xand(inst), sc.out_dir);
    }

    if (*gen_px) {
      sample s = load_sample(padx_input);
      auto r = pad_for_x_fragments(s, padx_dual);
      if (!r) {
        std::cout << "answer: no (a negative word equals the positive word)\n";
        return exit_no_separator;
      }
      std::filesystem::create_directories(padx_out);
      std::filesystem::path dir(padx_out);
      save_sample(r->padded, dir / "sample.json");
      nlohmann::json manifest{{"reduction", "pad-x"},
                              {"instance", sample_to_json(s)},
                              {"sample", "sample.json"},
                              {"fragment", operator_set(ops_full_no_until).tokens()},
                              {"constants", {{"M", r->pin_formula_size}}}};
      std::ofstream mf(dir / "manifest.json");
      mf << manifest.dump(2) << '\n';
      std::cout << "M = " << r->pin_formula_size << '\n';
      if (r->oversized)
        std::cout << "warning: padded sample holds " << r->total_length << " letters\n";
      std::cout << "wrote " << (dir / "sample.json").string() << '\n';
      return exit_found;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}
