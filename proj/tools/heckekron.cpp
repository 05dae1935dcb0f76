// Command-line front end. Documents go to stdout, diagnostics to stderr.
// Exit status: 0 success, 1 bad input, 2 over budget, 3 internal error.

#include <array>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "heckekron/acceptance.hpp"
#include "heckekron/blocks.hpp"
#include "heckekron/cache.hpp"
#include "heckekron/characters.hpp"
#include "heckekron/errors.hpp"
#include "heckekron/llt.hpp"
#include "heckekron/saxl.hpp"
#include "heckekron/serialize.hpp"
#include "heckekron/twosep.hpp"

using namespace heckekron;

namespace {

struct Globals {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string format = "json";
  bool no_cache = false;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (g.format == f) return;
  throw DomainError("format '" + g.format + "' is not available for this command");
}

MatrixCache make_cache(const Globals& g) {
  return MatrixCache(default_cache_dir(), !g.no_cache,
                     [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; });
}

Json decomposition_json(const std::map<Partition, LaurentPoly>& row) {
  Json out = Json::object();
  for (const auto& [col, f] : row) out[col.str()] = f.str();
  return out;
}

Json two_sep_json(const TwoSeparated& ts) {
  return Json{{"k", ts.k},
              {"lam", to_json(ts.lam)},
              {"mu", to_json(ts.mu)},
              {"partition", to_json(ts.whole)},
              {"label", ts.str()}};
}

std::string certificates_csv(const std::map<Partition, SaxlCertificate>& certs) {
  std::ostringstream out;
  out << "lambda,kind,bound,theorem,beta,multiplicity,g\n";
  for (auto it = certs.rbegin(); it != certs.rend(); ++it) {
    const auto& c = it->second;
    out << '"' << c.lam.str() << "\"," << kind_name(c.kind) << ',' << c.bound << ','
        << c.theorem << ',' << (c.beta ? '"' + c.beta->str() + '"' : std::string()) << ','
        << (c.beta ? std::to_string(c.multiplicity) : std::string()) << ','
        << (c.g ? c.g->str() : std::string()) << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded decomposition numbers and Saxl square certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format (json or csv)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--no-cache", g.no_cache, "Neither read nor write the matrix cache");

  std::function<int()> action;

  // decomp
  int d_n = 0, d_e = 2, d_core = 0;
  auto* decomp = app.add_subcommand("decomp", "Graded decomposition matrix of one block");
  decomp->add_option("--n", d_n, "Size")->required();
  decomp->add_option("--e", d_e, "Quantum characteristic");
  decomp->add_option("--core", d_core, "Core index: K for the 2-core rho(K), else block position");
  decomp->callback([&] {
    action = [&] {
      require_format(g, {"json", "csv"});
      const BlockId block = block_from_index(d_n, d_e, d_core);
      auto cache = make_cache(g);
      const auto m = cache.get_or_compute(block, LltOptions{g.threads});
      if (g.format == "csv")
        std::cout << matrix_to_csv(m);
      else
        emit(to_json(m));
      return 0;
    };
  });

  // saxl
  int s_k = 0, s_llt = 21;
  std::string s_method = "certificates";
  auto* saxl = app.add_subcommand("saxl", "Positivity certificates for g(rho(k), rho(k), lam)");
  saxl->add_option("--k", s_k, "Staircase index")->required()->check(CLI::PositiveNumber);
  saxl->add_option("--method", s_method, "certificates, brute or both")
      ->check(CLI::IsMember({"certificates", "brute", "both"}));
  saxl->add_option("--llt-max-n", s_llt, "Largest n for which Carter-Saxl pairs are searched");
  saxl->callback([&] {
    action = [&] {
      require_format(g, {"json", "csv"});
      if (s_method == "brute") {
        auto values = saxl_brute(s_k, SaxlBudget{}, g.threads);
        Json out = Json::object();
        for (const auto& [lam, v] : values) out[lam.str()] = to_json(v);
        emit(out);
        return 0;
      }
      auto cache = make_cache(g);
      CertifyOptions opts;
      opts.threads = g.threads;
      opts.llt_max_n = s_llt;
      opts.matrices = [&](const BlockId& b) { return cache.get_or_compute(b, LltOptions{g.threads}); };
      if (s_method == "both") opts.cross_check_max_n = CharacterTable::kMaxN;
      const auto certs = certify(s_k, opts);
      if (g.format == "csv") {
        std::cout << certificates_csv(certs);
      } else {
        std::size_t skipped = 0;
        for (const auto& [lam, c] : certs) skipped += !c.certified();
        emit(Json{{"k", s_k},
                  {"n", s_k * (s_k + 1) / 2},
                  {"uncertified", skipped},
                  {"certificates", to_json(certs)}});
      }
      return 0;
    };
  });

  // saxl-brute
  int b_k = 0;
  bool b_override = false;
  auto* brute = app.add_subcommand("saxl-brute", "g(rho(k), rho(k), lam) for every lam, by characters");
  brute->add_option("--k", b_k, "Staircase index")->required()->check(CLI::NonNegativeNumber);
  brute->add_flag("--allow-large", b_override, "Lift the k <= 6 budget");
  brute->callback([&] {
    action = [&] {
      require_format(g, {"json", "csv"});
      SaxlBudget budget;
      // The character table keeps its own limit on n.
      if (b_override) budget.max_k = std::numeric_limits<int>::max();
      const auto values = saxl_brute(b_k, budget, g.threads);
      if (g.format == "csv") {
        std::cout << "lambda,g\n";
        for (auto it = values.rbegin(); it != values.rend(); ++it)
          std::cout << '"' << it->first.str() << "\"," << it->second << '\n';
      } else {
        Json out = Json::object();
        for (const auto& [lam, v] : values) out[lam.str()] = to_json(v);
        emit(out);
      }
      return 0;
    };
  });

  // kron, lr
  std::array<std::string, 3> k_args, l_args;
  auto* kron = app.add_subcommand("kron", "Kronecker coefficient g(lam, mu, nu)");
  kron->add_option("lam", k_args[0], "Partition such as [2,1]")->required();
  kron->add_option("mu", k_args[1])->required();
  kron->add_option("nu", k_args[2])->required();
  kron->callback([&] {
    action = [&] {
      std::cout << kronecker(parse_partition(k_args[0]), parse_partition(k_args[1]),
                             parse_partition(k_args[2]))
                << '\n';
      return 0;
    };
  });
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^outer_{inner1,inner2}");
  lr->add_option("outer", l_args[0])->required();
  lr->add_option("inner1", l_args[1])->required();
  lr->add_option("inner2", l_args[2])->required();
  lr->callback([&] {
    action = [&] {
      std::cout << lr_coefficient(parse_partition(l_args[0]), parse_partition(l_args[1]),
                                  parse_partition(l_args[2]))
                << '\n';
      return 0;
    };
  });

  // height0
  int h_n = 0, h_core = -1;
  bool h_count = false, h_list = false;
  auto* h0 = app.add_subcommand("height0", "Characters of height zero in the 2-blocks of S_n");
  h0->add_option("--n", h_n, "Size")->required()->check(CLI::NonNegativeNumber);
  h0->add_option("--core", h_core, "Restrict to the block with 2-core rho(K)");
  auto* count_flag = h0->add_flag("--count", h_count, "Print the number only");
  h0->add_flag("--list", h_list, "List the labels")->excludes(count_flag);
  h0->callback([&] {
    action = [&] {
      std::vector<BlockId> blocks;
      if (h_core >= 0)
        blocks.push_back(block_from_index(h_n, 2, h_core));
      else
        for (const auto& [b, members] : block_members(h_n, 2)) blocks.push_back(b);
      if (h_count) {
        std::size_t total = 0;
        for (const auto& b : blocks) total += enumerate_height0(b).size();
        std::cout << total << '\n';
        return 0;
      }
      Json out = Json::array();
      for (const auto& b : blocks) {
        const auto labels = enumerate_height0(b);
        Json entry{{"core", to_json(b.core)},
                   {"weight", b.weight},
                   {"defect", defect(b)},
                   {"k0", to_json(k0(b))},
                   {"count", labels.size()}};
        if (h_list) {
          entry["labels"] = Json::array();
          for (const auto& p : labels) entry["labels"].push_back(to_json(p));
        }
        out.push_back(entry);
      }
      emit(out);
      return 0;
    };
  });

  // carter-saxl
  std::string c_alpha;
  auto* cs = app.add_subcommand("carter-saxl", "Carter-Saxl pairs (alpha, beta) at e = 2");
  cs->add_option("--alpha", c_alpha, "Partition such as [3,1,1]")->required();
  cs->callback([&] {
    action = [&] {
      const Partition alpha = parse_partition(c_alpha);
      auto cache = make_cache(g);
      const auto m = cache.get_or_compute(block_of(alpha, 2), LltOptions{g.threads});
      Json pairs = Json::array();
      for (const auto& p : carter_saxl_pairs(alpha, m))
        pairs.push_back(Json{{"beta", to_json(p.beta)},
                             {"multiplicity", p.multiplicity},
                             {"note", "lower bound for characteristic 2"}});
      emit(Json{{"alpha", to_json(alpha)},
                {"carter", carter_criterion(alpha)},
                {"pairs", pairs}});
      return 0;
    };
  });

  // two-sep
  int t_k = -1;
  std::string t_lam = "[]", t_mu = "[]", t_partition;
  auto* ts = app.add_subcommand("two-sep", "Semisimple decomposition of a 2-separated Specht module");
  auto* k_opt = ts->add_option("--k", t_k, "Staircase index");
  ts->add_option("--lam", t_lam, "Partition glued to the right")->needs(k_opt);
  ts->add_option("--mu", t_mu, "Partition glued below")->needs(k_opt);
  ts->add_option("--partition", t_partition, "Recognise this partition instead")->excludes(k_opt);
  ts->callback([&] {
    action = [&] {
      TwoSeparated sep;
      if (!t_partition.empty()) {
        const Partition p = parse_partition(t_partition);
        auto found = detect_two_separated(p);
        if (!found) throw DomainError(p.str() + " is not 2-separated");
        sep = *found;
      } else {
        if (t_k < 0) throw DomainError("give --k with --lam/--mu, or --partition");
        sep = build_two_separated(t_k, parse_partition(t_lam), parse_partition(t_mu));
      }
      Json out = two_sep_json(sep);
      out["decomposition"] = decomposition_json(theorem_a_row(sep));
      emit(out);
      return 0;
    };
  });

  // framed
  int f_n = 0;
  auto* framed = app.add_subcommand("framed", "Framed staircase partitions of n");
  framed->add_option("--n", f_n, "Size")->required()->check(CLI::NonNegativeNumber);
  framed->callback([&] {
    action = [&] {
      const FramedCounts counts = count_framed_staircases(f_n);
      Json list = Json::array();
      for (const auto& t : framed_staircases(f_n)) {
        Json entry = two_sep_json(t);
        const int w = t.weight();
        const auto top = build_two_separated(t.k, w ? Partition{w} : Partition{}, Partition{});
        entry["carter_partner"] = to_json(top.whole);
        entry["partner_is_carter"] = carter_criterion(top.whole);
        list.push_back(entry);
      }
      emit(Json{{"n", f_n},
                {"raw", counts.raw},
                {"up_to_conjugation", counts.up_to_conjugation},
                {"proper_up_to_conjugation", counts.proper_up_to_conjugation},
                {"framed", list}});
      return 0;
    };
  });

  // verify
  std::vector<std::string> v_only;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--only", v_only, "Criteria to run, e.g. A1 A3")->delimiter(',');
  verify->callback([&] {
    action = [&] {
      auto cache = make_cache(g);
      AcceptanceContext ctx(g.threads, [&](const BlockId& b) {
        return cache.get_or_compute(b, LltOptions{g.threads});
      });
      const auto ids = v_only.empty() ? acceptance_ids() : v_only;
      std::vector<CriterionResult> results;
      for (const auto& id : ids) {
        results.push_back(run_criterion(id, ctx));
        if (g.format == "json") continue;
        std::cout << format_result(results.back()) << std::endl;
      }
      if (g.format == "json") {
        Json out = Json::array();
        for (const auto& r : results)
          out.push_back(Json{{"id", r.id},
                             {"title", r.title},
                             {"passed", r.passed},
                             {"known_discrepancy", r.known_discrepancy},
                             {"detail", r.detail}});
        emit(out);
      }
      return acceptable(results) ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return action ? action() : 0;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
