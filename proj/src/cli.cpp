#include "braidtrace/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "braidtrace/braid.hpp"
#include "braidtrace/errors.hpp"
#include "braidtrace/invariants.hpp"
#include "braidtrace/laurent.hpp"
#include "braidtrace/trace.hpp"

namespace braidtrace {

namespace {

using Json = nlohmann::ordered_json;

Json trace_json(const TraceValue& v) {
  Json j;
  j["num"] = v.num().canonical_text();
  j["denomExp"] = v.denom_exp();
  return j;
}

Json word_json(const BraidWord& w) {
  Json j;
  j["rank"] = w.rank;
  j["letters"] = w.letters;
  return j;
}

Json jones_json(const JonesValue& v) {
  Json terms = Json::array();
  for (const auto& [e2, c] : v.terms())
    terms.push_back(Json::array({e2, c.get_str()}));
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["n"] = c.n;
    jc["pass"] = c.pass;
    jc["lhs"] = c.lhs;
    jc["rhs"] = c.rhs;
    jc["epsilon"] = r.epsilon ? Json(*r.epsilon) : Json(nullptr);
    jc["mirrorBranch"] =
        r.mirror_branch ? Json(std::string(1, *r.mirror_branch)) : Json(nullptr);
    checks.push_back(std::move(jc));
  }
  Json j;
  j["title"] = r.title;
  j["pass"] = r.all_pass();
  j["checks"] = std::move(checks);
  return j;
}

void print_report_lines(const Report& r, std::ostream& out) {
  out << r.title << "\n";
  for (const auto& c : r.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " n=" << c.n << "\n";
    if (!c.pass) {
      out << "  lhs: " << c.lhs << "\n";
      out << "  rhs: " << c.rhs << "\n";
    }
  }
}

void print_report_summary(const Report& r, std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& c : r.checks)
    if (c.pass) ++passed;
  out << r.title << ": " << passed << "/" << r.checks.size() << "\n";
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    out << "[FAIL] " << c.name << " n=" << c.n << "\n";
    out << "  lhs: " << c.lhs << "\n";
    out << "  rhs: " << c.rhs << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact braid-closure engine: algebra traces and link invariants"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  std::string word_text;
  int rank = 0;

  auto* trace_cmd = app.add_subcommand("trace", "trace of a braid word");
  auto* homfly_cmd = app.add_subcommand("homfly", "two-variable invariant of the closure");
  auto* jones_cmd = app.add_subcommand("jones", "one-variable invariant of the closure");
  std::vector<CLI::Option*> rank_opts;
  for (auto* sub : {trace_cmd, homfly_cmd, jones_cmd}) {
    sub->add_option("word", word_text, "braid word, e.g. \"1 2 -1\"")->required();
    rank_opts.push_back(
        sub->add_option("--rank", rank, "strand count (overrides inference)"));
  }

  std::string family_kind;
  int family_n = 0;
  auto* family_cmd = app.add_subcommand("family", "emit a built-in braid word");
  family_cmd->add_option("kind", family_kind, "coxeter or lcb")
      ->required()
      ->check(CLI::IsMember({"coxeter", "lcb"}));
  family_cmd->add_option("n", family_n, "strand count")->required();

  int min_n = 4;
  int max_n = 8;
  auto* verify_cmd =
      app.add_subcommand("verify-recursion", "check the looped coxeter trace recursion");
  verify_cmd->add_option("--min", min_n, "first rank (default 4)");
  verify_cmd->add_option("--max", max_n, "last rank (default 8)");

  std::uint64_t seed = 12345;
  int samples = 200;
  auto* selftest_cmd = app.add_subcommand("selftest", "randomized law checks");
  selftest_cmd->add_option("--seed", seed, "RNG seed (default 12345)");
  selftest_cmd->add_option("--samples", samples, "samples per suite (default 200)");

  for (auto* sub : {trace_cmd, homfly_cmd, jones_cmd, family_cmd, verify_cmd,
                    selftest_cmd})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (trace_cmd->parsed() || homfly_cmd->parsed() || jones_cmd->parsed()) {
      std::size_t which = trace_cmd->parsed() ? 0 : homfly_cmd->parsed() ? 1 : 2;
      std::optional<int> hint;
      if (rank_opts[which]->count() > 0) hint = rank;
      BraidWord w = parse_braid_word(word_text, hint);
      if (w.letters.empty() && !hint.has_value()) {
        err << "error: an empty braid word needs an explicit --rank\n";
        return 2;
      }
      if (which == 0) {
        TraceValue v = trace_of_braid(w);
        if (json)
          out << trace_json(v).dump(2) << "\n";
        else
          out << v.pretty_text() << "\n";
      } else if (which == 1) {
        HomflyValue h = homfly_of_braid(w);
        if (json) {
          Json j = trace_json(h.value);
          j["word"] = word_json(h.source_word);
          j["strands"] = h.strands;
          j["writhe"] = h.writhe;
          j["epsilon"] = calibration().epsilon;
          out << j.dump(2) << "\n";
        } else {
          out << h.value.pretty_text() << "\n";
        }
      } else {
        JonesValue v = jones_of_braid(w);
        if (json) {
          Json j = jones_json(v);
          j["epsilon"] = calibration().epsilon;
          j["mirrorBranch"] = std::string(1, calibration().mirror_branch);
          out << j.dump(2) << "\n";
        } else {
          out << v.pretty_text() << "\n";
        }
      }
      return 0;
    }

    if (family_cmd->parsed()) {
      BraidWord w =
          family_kind == "coxeter" ? coxeter(family_n) : looped_coxeter(family_n);
      if (json)
        out << word_json(w).dump(2) << "\n";
      else
        out << braid_word_text(w) << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      Report r = verify_lcb_recursion(min_n, max_n);
      if (json)
        out << report_json(r).dump(2) << "\n";
      else
        print_report_lines(r, out);
      return r.all_pass() ? 0 : 3;
    }

    // selftest
    Report axioms = trace_axiom_report(5, samples, seed);
    Report markov = markov_invariance_report(samples, seed + 1);
    Report split = split_union_report(samples, seed + 2);
    bool ok = axioms.all_pass() && markov.all_pass() && split.all_pass();
    if (json) {
      Json j;
      j["pass"] = ok;
      j["reports"] =
          Json::array({report_json(axioms), report_json(markov), report_json(split)});
      out << j.dump(2) << "\n";
    } else {
      print_report_summary(axioms, out);
      print_report_summary(markov, out);
      print_report_summary(split, out);
      out << (ok ? "selftest passed" : "selftest FAILED") << "\n";
    }
    return ok ? 0 : 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const RankError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotDivisibleError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace braidtrace
