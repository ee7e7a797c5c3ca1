#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "twistpoly/checks.hpp"
#include "twistpoly/families.hpp"
#include "twistpoly/hn.hpp"
#include "twistpoly/render.hpp"

using namespace twistpoly;

namespace {

struct Config {
  std::string format = "text";
  std::uint64_t seed = CheckOptions{}.seed;
  int samples = CheckOptions{}.samples;
  bool json() const { return format == "json"; }
};

// Thrown for failed verifications (exit 1).
struct VerifyFailed {};
// Thrown for semantic usage errors after parsing (exit 2).
struct UsageError {
  std::string what;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_poly(const Config& c, const char* cmd, const Poly& p, Json extra = Json::object()) {
  if (c.json()) {
    Json j = envelope(cmd);
    j.update(extra);
    j["poly"] = to_json(p);
    emit(j);
  } else {
    p.write(std::cout);
    std::cout << '\n';
  }
}

void verdict(const Config& c, const char* cmd, const std::string& what, bool ok) {
  if (c.json()) {
    Json j = envelope(cmd);
    j["check"] = what;
    j["pass"] = ok;
    emit(j);
  } else {
    std::cout << (ok ? "PASS " : "FAIL ") << what << '\n';
  }
  if (!ok) throw VerifyFailed{};
}

Slope slope_arg(const std::string& s) {
  try {
    return Slope::parse(s);
  } catch (const std::exception& e) {
    throw UsageError{e.what()};
  }
}

void run_selftest(const Config& c, bool quick, const std::string& module, bool criteria) {
  CheckOptions o{c.seed, c.samples, quick};
  std::vector<std::pair<std::string, CheckResult>> rows;
  if (criteria) {
    for (int id = 1; id <= kCriteria; ++id) {
      CheckResult r = run_criterion(id, o);
      r.name = criterion_title(id);
      rows.emplace_back("criterion " + std::to_string(id), r);
    }
  } else {
    std::vector<std::string> names = suite_names();
    if (!module.empty()) {
      if (std::find(names.begin(), names.end(), module) == names.end())
        throw UsageError{"unknown module '" + module + "'"};
      names = {module};
    }
    for (const auto& n : names)
      for (auto& r : run_suite(n, o)) rows.emplace_back(n, r);
  }
  int failed = 0;
  for (const auto& [_, r] : rows) failed += !r.pass;
  if (c.json()) {
    Json j = envelope("selftest");
    j["results"] = Json::array();
    for (const auto& [g, r] : rows)
      j["results"].push_back({{"group", g}, {"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    j["failed"] = failed;
    emit(j);
  } else {
    for (const auto& [g, r] : rows) {
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << g << "  " << r.name;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << '\n';
    }
    std::cout << rows.size() - failed << "/" << rows.size() << " passed\n";
  }
  if (failed) throw VerifyFailed{};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact A-polynomial factors for Dehn-filled knot families"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->envname("TWISTPOLY_FORMAT")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for evaluation-point sampling")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Evaluation points per numeric check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::function<void()> action;

  int n = 0;
  bool check_matchings = false, list = false;
  auto* hn = app.add_subcommand("hn", "Print H_n");
  hn->add_option("--n", n, "Tail length")->required()->check(CLI::Range(1, kMaxLadder / 2));
  hn->add_flag("--check-matchings", check_matchings, "Verify H(n) = P(2n)");
  hn->callback([&] {
    action = [&] {
      Poly h = H(n);
      if (check_matchings) {
        verdict(cfg, "hn", "H(" + std::to_string(n) + ") = P(" + std::to_string(2 * n) + ")", h == P(2 * n));
        return;
      }
      print_poly(cfg, "hn", h, {{"n", n}});
    };
  });

  auto* pn = app.add_subcommand("pn", "Print the ladder matching polynomial P_n");
  pn->add_option("--n", n, "Number of rungs")->required()->check(CLI::Range(0, kMaxLadder));
  pn->callback([&] { action = [&] { print_poly(cfg, "pn", P(n), {{"n", n}}); }; });

  auto* mt = app.add_subcommand("matchings", "Enumerate matchings of the ladder G_n");
  mt->add_option("--n", n, "Number of rungs")->required()->check(CLI::Range(1, kMaxLadder));
  mt->add_flag("--list", list, "List every matching with its weight");
  mt->callback([&] {
    action = [&] {
      auto ms = enumerate_matchings(n);
      LadderGraph g(n);
      if (cfg.json()) {
        Json j = envelope("matchings");
        j["n"] = n;
        j["count"] = ms.size();
        if (list) {
          j["matchings"] = Json::array();
          for (const auto& m : ms) j["matchings"].push_back({{"chosen", m.chosen}, {"weight", to_json(matching_weight(g, m))}});
        }
        emit(j);
        return;
      }
      std::cout << "count: " << ms.size() << '\n';
      if (!list) return;
      for (const auto& m : ms) {
        std::cout << '[';
        for (std::size_t i = 0; i < m.chosen.size(); ++i) std::cout << (i ? ", " : "") << m.chosen[i];
        std::cout << "] " << matching_weight(g, m) << '\n';
      }
    };
  });

  auto* fr = app.add_subcommand("farey", "Farey triangulation utilities");
  fr->require_subcommand(1);
  std::string from, to, walk_spec, word;
  int oracle_bound = 0;
  auto* cross = fr->add_subcommand("cross", "Edges crossed by the geodesic between two slopes");
  cross->add_option("--from", from, "Start slope p/q")->required();
  cross->add_option("--to", to, "End slope p/q")->required();
  cross->add_option("--oracle-bound", oracle_bound, "Also count by edge enumeration up to this bound")
      ->check(CLI::Range(1, 512));
  cross->callback([&] {
    action = [&] {
      Slope s = slope_arg(from), h = slope_arg(to);
      if (s == h) throw UsageError{"slopes must differ"};
      int c = crossing_count(s, h);
      std::optional<int> oc;
      if (oracle_bound) oc = crossing_count_oracle(s, h, oracle_bound);
      if (cfg.json()) {
        Json j = envelope("farey cross");
        j["from"] = s.to_string();
        j["to"] = h.to_string();
        j["crossings"] = c;
        if (oc) j["oracle"] = *oc;
        emit(j);
      } else {
        std::cout << c << '\n';
        if (oc) std::cout << "oracle (bound " << oracle_bound << "): " << *oc << '\n';
      }
      if (oc && *oc != c) throw VerifyFailed{};
    };
  });
  auto* labels = fr->add_subcommand("labels", "Per-step slope labels of a walk");
  labels->add_option("--walk", walk_spec, "e.g. triangle=3/1,4/1,1/0;word=LLRLLL")->required();
  labels->callback([&] {
    action = [&] {
      Walk w = [&] {
        try {
          return Walk::parse(walk_spec);
        } catch (const std::exception& e) {
          throw UsageError{e.what()};
        }
      }();
      auto ls = walk_labels(w);
      if (cfg.json()) {
        Json j = envelope("farey labels");
        j["walk"] = w.to_string();
        j["steps"] = Json::array();
        for (const auto& s : ls) j["steps"].push_back(to_json(s));
        emit(j);
        return;
      }
      for (const auto& s : ls)
        std::cout << "step " << s.k << " " << s.direction << ": o=" << s.o.to_string() << " h=" << s.h.to_string()
                  << " p=" << s.p.to_string() << " f=" << s.f.to_string() << '\n';
    };
  });
  auto* anat = fr->add_subcommand("anatomy", "Split a word into body, tail and tip");
  anat->add_option("--word", word, "Word in L and R")->required();
  anat->callback([&] {
    action = [&] {
      WordAnatomy a;
      try {
        a = anatomy(word);
      } catch (const std::invalid_argument& e) {
        throw UsageError{e.what()};
      }
      if (cfg.json()) {
        Json j = envelope("farey anatomy");
        j.update(to_json(a));
        emit(j);
        return;
      }
      std::cout << "body: " << a.body << "\ntail: " << a.tail << "\ntip: " << a.tip
                << "\ntail start step: " << a.tail_start_step
                << "\ntip matches tail: " << (a.tip_matches_tail ? "yes" : "no") << '\n';
    };
  });

  std::string family, sign;
  int m = 0;
  bool basis = false, as_json = false;
  auto* ap = app.add_subcommand("apoly", "Filling polynomial for a knot family");
  ap->add_option("--family", family, "pretzel238 or whitehead")
      ->required()
      ->check(CLI::IsMember({"pretzel238", "whitehead"}));
  ap->add_option("--sign", sign, "pos or neg")->required()->check(CLI::IsMember({"pos", "neg"}));
  ap->add_option("--m", m, "Tail length")->required()->check(CLI::Range(1, 64));
  ap->add_flag("--basis-change", basis, "Also print the result after the meridian/longitude change");
  ap->add_flag("--json", as_json, "Same as --format json");
  ap->callback([&] {
    action = [&] {
      const FamilySpec& spec = family_spec(parse_family(family), parse_sign(sign));
      FillingResult r = run_family(spec, m, basis);
      if (cfg.json() || as_json)
        emit(to_json(r));
      else
        write_filling(std::cout, r, basis);
    };
  });

  int max_n = 8;
  auto* tw = app.add_subcommand("twist", "Twist-knot polynomials A_n");
  tw->require_subcommand(0, 1);
  tw->add_option("--n", n, "Index")->check(CLI::Range(0, 64));
  tw->add_option("--sign", sign, "pos or neg")->check(CLI::IsMember({"pos", "neg"}));
  auto* verify = tw->add_subcommand("verify", "Check the recurrence and base identities");
  verify->add_option("--max-n", max_n, "Largest index")->check(CLI::Range(2, 40))->capture_default_str();
  verify->callback([&] {
    action = [&] {
      bool ok = true;
      for (int k = 2; k <= max_n; ++k) ok = ok && twist_recurrence_check(k, Sign::Positive);
      for (int k = 1; k <= max_n; ++k) ok = ok && twist_recurrence_check(k, Sign::Negative);
      for (Sign s : {Sign::Positive, Sign::Negative})
        ok = ok && twist_base_identity_lhs(s) == twist_base_identity_rhs(s);
      verdict(cfg, "twist verify", "twist recurrences up to n = " + std::to_string(max_n), ok);
    };
  });
  tw->callback([&] {
    if (action) return;
    if (tw->count("--n") == 0 || sign.empty()) throw CLI::ValidationError("twist", "needs --n and --sign, or the verify subcommand");
    action = [&] {
      Sign s = parse_sign(sign);
      if (s == Sign::Positive && n < 1) throw UsageError{"positive twist chain starts at n = 1"};
      print_poly(cfg, "twist", twist_A(n, s), {{"n", n}, {"sign", sign}});
    };
  });

  bool quick = false, criteria = false;
  std::string module;
  auto* st = app.add_subcommand("selftest", "Run the invariant suites");
  st->add_flag("--quick", quick, "Smaller ranges");
  st->add_option("--module", module, "Run one suite only");
  st->add_flag("--criteria", criteria, "Run the acceptance criteria instead of the suites");
  st->callback([&] { action = [&] { run_selftest(cfg, quick, module, criteria); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
  } catch (const VerifyFailed&) {
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
