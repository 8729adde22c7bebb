// vfree: construct virtually free groups from graphs of finite groups,
// verify local exclusion against the brute-force oracle, and answer
// word queries with the length-reducing rewrite system / pushdown stack.
//
// All deterministic output goes to stdout; timings go to stderr so that
// reports are byte-identical across runs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "vfree/dehn.hpp"
#include "vfree/io.hpp"
#include "vfree/oracle.hpp"

namespace {

// Exit codes: 0 claim held, 1 claim failed (counterexample / non-identity),
// 2 parse error, 3 validation failure, 4 budget exceeded.
constexpr int kExitClaimFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitBudget = 4;

struct options {
  std::string input;
  std::string word_text;
  int k = 0;  // 0 = use the plan's guaranteed k'
  int max_len = 0;
  int radius = 5;
  std::size_t budget = 1'000'000;
  unsigned long seed = 0;
  std::string emit;
  std::string emit_exclusions;
  bool paranoid = false;
};

void print_plan(const vfree::constructed_group& g) {
  const auto& plan = g.plan;
  std::cout << "construction plan (" << plan.steps.size() << " steps):\n";
  int idx = 0;
  for (const auto& st : plan.steps) {
    ++idx;
    std::cout << "  step " << idx << ": ";
    switch (st.what) {
      case vfree::plan_step::kind::base:
        std::cout << "base vertex " << st.vertex << "  k = " << st.k_after;
        break;
      case vfree::plan_step::kind::amalgamate:
        std::cout << "amalgamate vertex " << st.vertex << " over edge "
                  << st.edge << "  k: " << st.k_before << " -> " << st.k_after;
        break;
      case vfree::plan_step::kind::hnn_extend:
        std::cout << "HNN extension over edge " << st.edge
                  << "  k: " << st.k_before << " -> " << st.k_after;
        break;
    }
    std::cout << "  new letters:";
    if (st.new_letters.empty()) std::cout << " (none)";
    for (const auto& l : st.new_letters) std::cout << ' ' << l;
    std::cout << '\n';
  }
  std::cout << "X' (" << plan.x_size << " letters):";
  for (vfree::letter l = 0; l < g.gens.x.size(); ++l)
    std::cout << ' ' << g.gens.x.name(l);
  std::cout << "\nguaranteed k' = " << plan.k_final << '\n';
}

int default_max_len(const vfree::constructed_group& g) {
  return std::max(8, 2 * g.k());
}

// Certification for running the rewrite engine at level k: the plan's
// guarantee covers k >= k'; anything smaller must pass verification.
vfree::dehn_system make_system(vfree::geodesic_oracle& oracle,
                               const vfree::constructed_group& g,
                               const options& opt) {
  int k = opt.k ? opt.k : g.k();
  bool certified = k >= g.k();
  if (!certified) {
    int len = opt.max_len ? opt.max_len : default_max_len(g);
    auto cex = oracle.verify_locally_excluding(k, len);
    if (cex)
      throw vfree::validation_error(
          "k = " + std::to_string(k) + " failed verification; counterexample: " +
          format_word(oracle.gens().x, *cex));
    certified = true;
    std::cout << "note: k = " << k << " verified to length " << len << '\n';
  }
  return vfree::dehn_system::synthesize(oracle, k, certified);
}

int run(const std::string& cmd, const options& opt) {
  vfree::constructed_group g = vfree::build(vfree::load_graph_file(opt.input));
  vfree::geodesic_oracle oracle(g.gens, opt.budget);

  if (cmd == "build") {
    print_plan(g);
    return 0;
  }

  if (cmd == "ball") {
    oracle.grow(opt.radius);
    std::cout << "ball growth to radius " << opt.radius << ":";
    for (auto c : oracle.counts_by_length()) std::cout << ' ' << c;
    std::cout << "\nball size: " << oracle.ball_size() << '\n';
    return 0;
  }

  if (cmd == "verify") {
    int k = opt.k ? opt.k : g.k();
    int len = opt.max_len ? opt.max_len : default_max_len(g);
    auto cex = oracle.verify_locally_excluding(k, len);
    if (cex) {
      std::cout << "counterexample (k = " << k << ", length <= " << len
                << "): " << format_word(g.gens.x, *cex) << '\n';
      return kExitClaimFailed;
    }
    std::cout << "ok: every " << k << "-locally geodesic word of length <= "
              << len << " is geodesic\n";
    return 0;
  }

  if (cmd == "minimal-k") {
    int len = opt.max_len ? opt.max_len : default_max_len(g);
    auto k = oracle.minimal_k(len);
    if (!k) {
      std::cout << "no k <= " << len << " verifies at length " << len
                << " (plan guarantees k' = " << g.k() << ")\n";
      return kExitClaimFailed;
    }
    std::cout << "empirical minimal k = " << *k << " at length " << len
              << " (plan guarantees k' = " << g.k() << ")\n";
    return 0;
  }

  // The remaining subcommands need the rewrite system.
  vfree::dehn_system sys = make_system(oracle, g, opt);

  if (cmd == "rules") {
    std::cout << sys.rules().size() << " rules at k = " << sys.k() << ":\n";
    for (const auto& r : sys.rules())
      std::cout << "  " << format_word(g.gens.x, r.lhs) << " -> "
                << format_word(g.gens.x, r.rhs) << '\n';
    if (!opt.emit.empty()) {
      std::ofstream out(opt.emit);
      for (const auto& r : sys.rules())
        out << format_word(g.gens.x, r.lhs) << " -> "
            << format_word(g.gens.x, r.rhs) << '\n';
    }
    if (!opt.emit_exclusions.empty()) {
      std::ofstream out(opt.emit_exclusions);
      for (const auto& r : sys.rules())
        out << format_word(g.gens.x, r.lhs) << '\n';
    }
    return 0;
  }

  vfree::word w = parse_word(g.gens.x, opt.word_text);

  if (cmd == "reduce") {
    vfree::word r = sys.reduce(w);
    std::cout << "reduced: " << format_word(g.gens.x, r) << '\n';
    std::cout << "length: " << r.size() << '\n';
    return 0;
  }

  if (cmd == "len") {
    auto res = word_problem(sys, w, opt.paranoid);
    std::cout << "geodesic length: " << res.final_stack.size() << '\n';
    return 0;
  }

  if (cmd == "wp") {
    auto res = word_problem(sys, w, opt.paranoid);
    std::cout << "identity: " << (res.is_identity ? "yes" : "no") << '\n';
    std::cout << "final stack: " << format_word(g.gens.x, res.final_stack)
              << '\n';
    std::cout << "length: " << res.final_stack.size() << '\n';
    return res.is_identity ? 0 : kExitClaimFailed;
  }

  std::cerr << "unknown subcommand: " << cmd << '\n';
  return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtually free groups: Dehn rewriting and pushdown word problem"};
  app.require_subcommand(1);

  options opt;
  std::string cmd;
  for (const char* name :
       {"build", "ball", "verify", "minimal-k", "rules", "reduce", "wp",
        "len"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("input", opt.input, "graph-of-groups JSON file")
        ->required();
    sub->add_option("--k", opt.k, "k level (default: the plan's k')");
    sub->add_option("--max-len", opt.max_len,
                    "exhaustive check length (default: max(8, 2k'))");
    sub->add_option("--budget", opt.budget, "ball element budget");
    sub->add_option("--seed", opt.seed, "seed echoed into reports");
    sub->add_flag("--paranoid", opt.paranoid,
                  "re-check the whole stack after every push");
    if (std::string(name) == "ball")
      sub->add_option("--radius", opt.radius, "ball radius");
    if (std::string(name) == "rules") {
      sub->add_option("--emit", opt.emit, "write rules, one per line");
      sub->add_option("--emit-exclusions", opt.emit_exclusions,
                      "write forbidden factors, one word per line");
    }
    if (std::string(name) == "reduce" || std::string(name) == "wp" ||
        std::string(name) == "len")
      sub->add_option("--word", opt.word_text, "word over X'")->required();
    sub->callback([&cmd, name] { cmd = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitParse : 0;
  }

  auto t0 = std::chrono::steady_clock::now();
  int rc;
  try {
    rc = run(cmd, opt);
  } catch (const vfree::budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const vfree::validation_error& e) {
    std::cerr << "validation failure: " << e.what() << '\n';
    return kExitValidation;
  } catch (const vfree::spec_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "elapsed: " << ms << " ms\n";
  return rc;
}
