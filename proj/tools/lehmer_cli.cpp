// lehmer: command-line front end for the Lehmer parking function library.
//
// Every data verb takes its input as a positional argument or, when that is
// omitted, as one input per line on stdin. JSON output is one object per line.
// Exit codes: 0 success, 1 domain or parse error (JSON on stderr), 2 when a
// verification finds a discrepancy.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lehmer/armleg.hpp"
#include "lehmer/bijection.hpp"
#include "lehmer/enumerate.hpp"
#include "lehmer/error.hpp"
#include "lehmer/io.hpp"
#include "lehmer/paren.hpp"
#include "lehmer/parking.hpp"
#include "lehmer/render.hpp"
#include "lehmer/setpartition.hpp"

namespace {

using lehmer::json;

constexpr int kExitDomainError = 1;
constexpr int kExitDiscrepancy = 2;

bool looks_like_json(const std::string& s) { return !s.empty() && (s.front() == '{' || s.front() == '['); }

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Positional input if given, else every non-blank stdin line.
template <typename Fn>
void for_each_input(const std::optional<std::string>& arg, Fn&& fn) {
  if (arg) {
    fn(trim(*arg));
    return;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    line = trim(line);
    if (!line.empty()) fn(line);
  }
}

lehmer::Permutation read_permutation(const std::string& s) {
  if (!looks_like_json(s)) return lehmer::parse_permutation(s);
  const json j = json::parse(s);
  if (j.is_object()) {
    for (const char* key : {"outcome", "permutation"}) {
      if (j.contains(key)) return lehmer::permutation_from_json(j.at(key));
    }
    throw lehmer::Error(lehmer::ErrorCode::parse_error, "expected an \"outcome\" or \"permutation\" member");
  }
  return lehmer::permutation_from_json(j);
}

std::vector<int> read_int_list(const std::string& s, const char* key) {
  if (!looks_like_json(s)) return lehmer::parse_int_list(s);
  json j = json::parse(s);
  if (j.is_object() && j.contains(key)) j = j.at(key);
  if (!j.is_array()) throw lehmer::Error(lehmer::ErrorCode::parse_error, "expected a JSON array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw lehmer::Error(lehmer::ErrorCode::parse_error, "expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

lehmer::PrefTuple read_pref_tuple(const std::string& s) { return lehmer::PrefTuple(read_int_list(s, "prefs")); }

// "{1,4}|{2}" is text; JSON objects start with a quoted key.
bool partition_is_json(const std::string& s) {
  if (s.empty()) return false;
  if (s.front() == '[') return true;
  if (s.front() != '{') return false;
  const auto next = s.find_first_not_of(" \t", 1);
  return next == std::string::npos || s[next] == '"' || s[next] == '}';
}

lehmer::SetPartition read_partition(const std::string& s) {
  if (partition_is_json(s)) return lehmer::set_partition_from_json(json::parse(s));
  return lehmer::parse_set_partition(s);
}

lehmer::GBsp read_gbsp(const std::string& s) {
  if (looks_like_json(s)) return lehmer::gbsp_from_json(json::parse(s));
  return lehmer::parse_gbsp(s);
}

bool has_choice_digits(const std::string& s) {
  return s.find_first_of("0123456789") != std::string::npos;
}

lehmer::SpacedParen read_spaced_paren(const std::string& s) {
  if (looks_like_json(s)) return lehmer::spaced_paren_from_json(json::parse(s));
  if (has_choice_digits(s)) return lehmer::parse_gbsp(s).base();
  return lehmer::parse_spaced_paren(s);
}

json outcome_json(const lehmer::Permutation& p) { return json{{"outcome", p}}; }

// Partitions on the command line omit "n"; it is implied by the blocks.
json blocks_json(const lehmer::SetPartition& b) {
  return json{{"blocks", std::vector<std::vector<int>>(b.blocks().begin(), b.blocks().end())}};
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void emit_error(const lehmer::Error& e) {
  json err{{"code", std::string(lehmer::to_string(e.code()))}, {"message", e.what()}};
  if (e.position()) err["position"] = *e.position();
  std::cerr << json{{"error", err}}.dump() << '\n';
}

void print_report_table(const lehmer::VerificationReport& r) {
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.theorem << "  n=" << r.n_min << ".." << r.n_max
            << "  objects=" << r.objects_checked << "  time=" << r.wall_seconds << "s\n";
  for (const auto& line : r.details) std::cout << "    " << line << '\n';
  for (const auto& line : r.discrepancies) std::cout << "    ! " << line << '\n';
}

json report_json(const lehmer::VerificationReport& r) {
  return json{{"theorem", r.theorem},
              {"n_min", r.n_min},
              {"n_max", r.n_max},
              {"objects_checked", r.objects_checked},
              {"discrepancies", r.discrepancies},
              {"passed", r.passed()},
              {"wall_seconds", r.wall_seconds}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lehmer parking functions, their outcomes, and the bijection with set partitions"};
  app.require_subcommand(1);

  std::optional<std::string> input;
  std::string format = "json";
  auto add_input = [&](CLI::App* cmd, const std::string& what) {
    cmd->add_option("input", input, what + " (read one per line from stdin when omitted)");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* park_cmd = app.add_subcommand("park", "Park cars with the given preferences");
  add_input(park_cmd, "preference tuple, e.g. 5,2,4,2,1,1");
  add_format(park_cmd);

  std::string check_kind;
  auto* check_cmd = app.add_subcommand("check", "Test a tuple or permutation against a predicate");
  check_cmd->add_option("kind", check_kind, "predicate")
      ->required()
      ->check(CLI::IsMember({"parking-function", "lehmer", "weakly-decreasing", "outcome-membership"}));
  add_input(check_cmd, "preference tuple, or a permutation for outcome-membership");

  bool decode = false;
  auto* invtable_cmd = app.add_subcommand("invtable", "Inversion table of a permutation, or --decode a table");
  add_input(invtable_cmd, "permutation, or inversion table with --decode");
  invtable_cmd->add_flag("--decode", decode, "map an inversion table back to its permutation");

  bool plain = false;
  auto* phi_cmd = app.add_subcommand("phi", "Outcome permutation to its g-balanced spaced parenthesization");
  add_input(phi_cmd, "outcome permutation");
  phi_cmd->add_flag("--plain", plain, "emit only the arms/legs parenthesization (F, L)");
  add_format(phi_cmd);

  auto* to_gbsp_cmd = app.add_subcommand("to-gbsp", "Set partition to its g-balanced spaced parenthesization");
  add_input(to_gbsp_cmd, "set partition, e.g. {1,4}|{2,3,6}|{5}");
  add_format(to_gbsp_cmd);

  std::string target = "outcome";
  auto* from_gbsp_cmd = app.add_subcommand("from-gbsp", "g-balanced spaced parenthesization to an outcome or partition");
  add_input(from_gbsp_cmd, "gBSP, e.g. \"(_ (_ 2 1) (_) 1)\"");
  from_gbsp_cmd->add_option("--target", target, "what to build")->check(CLI::IsMember({"outcome", "partition"}));
  add_format(from_gbsp_cmd);

  auto* to_partition_cmd = app.add_subcommand("to-partition", "Outcome permutation to set partition");
  add_input(to_partition_cmd, "outcome permutation");
  add_format(to_partition_cmd);

  auto* from_partition_cmd = app.add_subcommand("from-partition", "Set partition to outcome permutation");
  add_input(from_partition_cmd, "set partition");
  add_format(from_partition_cmd);

  bool count_only = false;
  auto* fiber_cmd = app.add_subcommand("fiber", "All outcomes with the given arms/legs parenthesization");
  add_input(fiber_cmd, "balanced spaced parenthesization, e.g. \"(_ (_ _ _) (_) _)\"");
  fiber_cmd->add_flag("--count", count_only, "print only the fiber size");
  add_format(fiber_cmd);

  std::string enum_kind;
  int n = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream every object of a kind as JSON lines");
  enumerate_cmd->add_option("kind", enum_kind, "object kind")
      ->required()
      ->check(CLI::IsMember({"lehmer", "outcomes", "partitions", "bsp", "gbsp"}));
  enumerate_cmd->add_option("--n", n, "length")->required()->check(CLI::Range(0, 12));

  std::string count_kind;
  unsigned threads = 0;
  auto* count_cmd = app.add_subcommand("count", "Bell, Catalan, or outcome counts");
  count_cmd->add_option("kind", count_kind, "quantity")
      ->required()
      ->check(CLI::IsMember({"bell", "catalan", "outcomes"}));
  count_cmd->add_option("--n", n, "length")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--threads", threads, "worker threads (default: LEHMER_THREADS or all cores)");

  std::string theorem;
  std::optional<int> n_max;
  bool report_as_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check a result for n = 0..n_max");
  verify_cmd->add_option("theorem", theorem, "check id, or 'all'")->required();
  verify_cmd->add_option("--n-max", n_max, "largest n to check (default: per check)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--json", report_as_json, "emit one JSON report per line instead of a table");
  verify_cmd->add_option("--threads", threads, "worker threads for outcome enumeration");

  std::string render_kind;
  std::string render_format = "ascii";
  bool extend = false;
  bool show_depth = false;
  auto* render_cmd = app.add_subcommand("render", "Draw an arm-leg diagram or a parenthesization");
  render_cmd->add_option("kind", render_kind, "what to draw")->required()->check(CLI::IsMember({"armleg", "paren"}));
  add_input(render_cmd, "permutation (armleg) or parenthesization (paren)");
  render_cmd->add_option("--format", render_format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
  render_cmd->add_flag("--extend", extend, "run arms and legs slightly past the antidiagonal (svg)");
  render_cmd->add_flag("--depth", show_depth, "label spaces with their depth instead of their index (ascii)");

  CLI11_PARSE(app, argc, argv);
  const bool text = format == "text";

  try {
    if (*park_cmd) {
      for_each_input(input, [&](const std::string& s) {
        const auto result = lehmer::park(read_pref_tuple(s));
        if (text) {
          std::cout << (result.parked() ? lehmer::format_list(result.outcome().word())
                                        : "failed_car " + std::to_string(result.failure().failed_car))
                    << '\n';
        } else if (result.parked()) {
          emit(outcome_json(result.outcome()));
        } else {
          emit(json{{"failed_car", result.failure().failed_car}});
        }
      });
    } else if (*check_cmd) {
      for_each_input(input, [&](const std::string& s) {
        bool result = false;
        if (check_kind == "outcome-membership") {
          result = !lehmer::contains_armleg_pattern(read_permutation(s));
        } else {
          const auto a = read_pref_tuple(s);
          if (check_kind == "parking-function") result = lehmer::is_parking_function(a);
          if (check_kind == "lehmer") result = lehmer::is_lehmer(a);
          if (check_kind == "weakly-decreasing") result = lehmer::is_weakly_decreasing(a);
        }
        emit(json{{"check", check_kind}, {"result", result}});
      });
    } else if (*invtable_cmd) {
      for_each_input(input, [&](const std::string& s) {
        if (decode) {
          const lehmer::InversionTable t(read_int_list(s, "table"));
          emit(json{{"permutation", lehmer::from_inversion_table(t)}});
        } else {
          const auto t = lehmer::inversion_table(read_permutation(s));
          emit(json{{"table", t}, {"lehmer", lehmer::lehmer_from_inversion_table(t)}});
        }
      });
    } else if (*phi_cmd) {
      for_each_input(input, [&](const std::string& s) {
        const lehmer::OutcomePermutation p(read_permutation(s));
        if (plain) {
          const auto sp = lehmer::phi(p);
          text ? void(std::cout << lehmer::render(sp) << '\n') : emit(json(sp));
        } else {
          const auto gb = lehmer::phi_prime(p);
          text ? void(std::cout << lehmer::render(gb) << '\n') : emit(json(gb));
        }
      });
    } else if (*to_gbsp_cmd) {
      for_each_input(input, [&](const std::string& s) {
        const auto gb = lehmer::to_gbsp(read_partition(s));
        text ? void(std::cout << lehmer::render(gb) << '\n') : emit(json(gb));
      });
    } else if (*from_gbsp_cmd) {
      for_each_input(input, [&](const std::string& s) {
        const auto gb = read_gbsp(s);
        if (target == "partition") {
          const auto b = lehmer::from_gbsp(gb);
          text ? void(std::cout << lehmer::render(b) << '\n') : emit(blocks_json(b));
        } else {
          const auto p = lehmer::phi_prime_inv(gb).perm();
          text ? void(std::cout << lehmer::format_list(p.word()) << '\n') : emit(outcome_json(p));
        }
      });
    } else if (*to_partition_cmd) {
      for_each_input(input, [&](const std::string& s) {
        const auto b = lehmer::outcome_to_partition(lehmer::OutcomePermutation(read_permutation(s)));
        text ? void(std::cout << lehmer::render(b) << '\n') : emit(blocks_json(b));
      });
    } else if (*from_partition_cmd) {
      for_each_input(input, [&](const std::string& s) {
        const auto p = lehmer::partition_to_outcome(read_partition(s)).perm();
        text ? void(std::cout << lehmer::format_list(p.word()) << '\n') : emit(outcome_json(p));
      });
    } else if (*fiber_cmd) {
      for_each_input(input, [&](const std::string& s) {
        const auto sp = read_spaced_paren(s);
        if (count_only) {
          emit(json{{"fiber_size", lehmer::fiber_size(sp)}});
          return;
        }
        lehmer::for_each_in_fiber(sp, [&](const lehmer::OutcomePermutation& p) {
          text ? void(std::cout << lehmer::format_list(p.perm().word()) << '\n') : emit(outcome_json(p.perm()));
        });
      });
    } else if (*enumerate_cmd) {
      if (enum_kind == "lehmer") {
        lehmer::for_each_lehmer(n, [](const lehmer::PrefTuple& a) { emit(json(a)); });
      } else if (enum_kind == "outcomes") {
        for (const auto& p : lehmer::outcome_set(n)) emit(outcome_json(p.perm()));
      } else if (enum_kind == "partitions") {
        lehmer::for_each_partition(n, [](const lehmer::SetPartition& b) { emit(blocks_json(b)); });
      } else if (enum_kind == "bsp") {
        lehmer::for_each_bsp(n, [](const lehmer::SpacedParen& sp) { emit(json(sp)); });
      } else {
        lehmer::for_each_gbsp(n, [](const lehmer::GBsp& gb) { emit(json(gb)); });
      }
    } else if (*count_cmd) {
      std::uint64_t value = 0;
      if (count_kind == "bell") value = lehmer::bell(n);
      if (count_kind == "catalan") value = lehmer::catalan(n);
      if (count_kind == "outcomes") value = lehmer::count_outcomes(n, threads);
      std::cout << value << '\n';
    } else if (*verify_cmd) {
      std::vector<std::string> ids;
      if (theorem == "all") {
        for (auto id : lehmer::theorem_ids()) ids.emplace_back(id);
      } else {
        ids.push_back(theorem);
      }
      bool all_passed = true;
      for (const auto& id : ids) {
        const int limit = n_max ? *n_max : lehmer::default_n_max(id);
        const auto report = lehmer::verify(id, limit, threads);
        all_passed = all_passed && report.passed();
        report_as_json ? emit(report_json(report)) : print_report_table(report);
      }
      if (!all_passed) return kExitDiscrepancy;
    } else if (*render_cmd) {
      for_each_input(input, [&](const std::string& s) {
        if (render_kind == "armleg") {
          const auto p = read_permutation(s);
          std::cout << (render_format == "svg" ? lehmer::render_armleg_svg(p, {.extend = extend})
                                               : lehmer::render_armleg_ascii(p));
          return;
        }
        const bool with_choices = looks_like_json(s) ? json::parse(s).contains("g") : has_choice_digits(s);
        if (with_choices) {
          const auto gb = read_gbsp(s);
          std::cout << (render_format == "svg" ? lehmer::render_paren_svg(gb)
                                               : lehmer::render_paren_ascii(gb, show_depth));
        } else {
          const auto sp = read_spaced_paren(s);
          std::cout << (render_format == "svg" ? lehmer::render_paren_svg(sp)
                                               : lehmer::render_paren_ascii(sp, show_depth));
        }
      });
    }
  } catch (const lehmer::Error& e) {
    emit_error(e);
    return kExitDomainError;
  } catch (const json::exception& e) {
    emit_error(lehmer::Error(lehmer::ErrorCode::parse_error, e.what()));
    return kExitDomainError;
  }
  return 0;
}
