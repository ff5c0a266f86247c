// nmonoid: command-line front end for the numerical monoid library.
//
// Every subcommand prints a human-readable answer by default, or a single
// JSON object {command, parameters, result, elapsed_ms} with --json.
// Exit codes: 0 success, 1 usage error, 2 domain error (name on stderr).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "nmonoid/nmonoid.hpp"

namespace {

using namespace nmonoid;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text) {
  std::size_t used = 0;
  Int v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

std::vector<Int> parse_list(const std::string& text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  return out;
}

// "lo..hi" (empty when hi < lo) or a single value.
std::vector<Int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {parse_int(text)};
  const Int lo = parse_int(text.substr(0, dots));
  const Int hi = parse_int(text.substr(dots + 2));
  std::vector<Int> out;
  for (Int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

ArithmeticalMonoid parse_arith(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 3) throw UsageError("--arith expects a,d,w");
  return {v[0], v[1], v[2]};
}

struct MonoidInput {
  std::string gens;
  std::string arith;

  bool is_arith() const { return !arith.empty(); }

  void require() const {
    if (gens.empty() && arith.empty()) throw UsageError("one of --gens or --arith is required");
  }

  NumericalMonoid monoid() const { return is_arith() ? expand(parse_arith(arith)) : make_monoid(parse_list(gens)); }

  json echo() const {
    json j;
    if (is_arith()) {
      const auto m = parse_arith(arith);
      j["arith"] = {{"a", m.a()}, {"d", m.d()}, {"w", m.w()}};
    } else {
      j["gens"] = parse_list(gens);
    }
    return j;
  }
};

void add_monoid_options(CLI::App* cmd, MonoidInput& input, bool arith_only = false) {
  auto* arith = cmd->add_option("--arith", input.arith, "arithmetical monoid a,d,w");
  if (arith_only) {
    arith->required();
    return;
  }
  auto* gens = cmd->add_option("--gens", input.gens, "comma-separated generators");
  gens->excludes(arith);
  arith->excludes(gens);
}

std::uint64_t oracle_budget() {
  if (const char* env = std::getenv("MONOID_ORACLE_BUDGET"); env != nullptr && *env != '\0') {
    const Int v = parse_int(env);
    if (v <= 0) throw UsageError("MONOID_ORACLE_BUDGET must be positive");
    return static_cast<std::uint64_t>(v);
  }
  return kDefaultOracleBudget;
}

std::string join(const std::vector<Int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

std::string join_sets(const std::vector<IndexSet>& sets) {
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? ", " : "") + join(sets[i]);
  return out + "]";
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; }

struct Outcome {
  json parameters;
  json result;
  std::string text;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization length sets and Frobenius numbers of numerical monoids"};
  app.fallthrough();
  app.require_subcommand(1);

  bool as_json = false;
  bool stable = false;
  unsigned threads = 0;
  app.add_flag("--json", as_json, "emit one JSON object on stdout");
  app.add_flag("--stable", stable, "omit elapsed_ms from JSON output");
  app.add_option("--threads", threads, "worker threads for complex/scan/survey (0 = all cores)");

  MonoidInput input;
  Int n = 0;
  Int bound = 0;
  std::optional<Int> modulus;
  std::string omit_text;
  std::string what = "both";
  bool no_shortcut = false;
  bool fast = false;
  std::string w_range, d_range, a_range;

  auto* frob_cmd = app.add_subcommand("frobenius", "Frobenius number");
  add_monoid_options(frob_cmd, input);

  auto* lenset_cmd = app.add_subcommand("lenset", "length set of one element");
  add_monoid_options(lenset_cmd, input);
  lenset_cmd->add_option("--n", n, "element")->required();

  auto* apery_cmd = app.add_subcommand("apery", "Apéry set with respect to a member m");
  add_monoid_options(apery_cmd, input);
  apery_cmd->add_option("--m", modulus, "modulus (default: smallest generator)");

  auto* factor_cmd = app.add_subcommand("factor", "all factorizations of one element (brute force)");
  add_monoid_options(factor_cmd, input);
  factor_cmd->add_option("--n", n, "element")->required();

  auto* table_cmd = app.add_subcommand("table", "length sets of every n up to a bound");
  add_monoid_options(table_cmd, input);
  table_cmd->add_option("--bound", bound, "largest n")->required()->check(CLI::NonNegativeNumber);

  auto* omit_cmd = app.add_subcommand("omit-check", "does omitting generators preserve L(S) / F(S)");
  add_monoid_options(omit_cmd, input, true);
  omit_cmd->add_option("--omit", omit_text, "generator indices i of a + i*d, comma-separated")->required();
  omit_cmd->add_option("--what", what, "lengths|frobenius|both")
      ->check(CLI::IsMember({"lengths", "frobenius", "both"}));
  omit_cmd->add_flag("--no-shortcut", no_shortcut, "always run the full computation");

  auto* boundary_cmd = app.add_subcommand("boundary", "compare L(S_1) and L(S_{w-1}) up to a bound");
  add_monoid_options(boundary_cmd, input, true);
  boundary_cmd->add_option("--bound", bound, "largest n")->required()->check(CLI::NonNegativeNumber);

  auto* complex_cmd = app.add_subcommand("complex", "omission sets preserving L(S)");
  add_monoid_options(complex_cmd, input, true);
  complex_cmd->add_flag("--no-shortcut", no_shortcut, "enumerate even when a >= w^2 - 3w");
  complex_cmd->add_flag("--fast", fast, "skip supersets of non-faces");

  auto* scan_cmd = app.add_subcommand("scan-tightness", "largest a with F(S) != F(S_*) per (w, d)");
  scan_cmd->add_option("--w", w_range, "w range lo..hi")->required();
  scan_cmd->add_option("--d", d_range, "d range lo..hi")->required();

  auto* survey_cmd = app.add_subcommand("survey", "omission complexes over a parameter grid");
  survey_cmd->add_option("--a", a_range, "a range lo..hi")->required();
  survey_cmd->add_option("--d", d_range, "d range lo..hi")->required();
  survey_cmd->add_option("--w", w_range, "w range lo..hi")->required();
  survey_cmd->add_flag("--fast", fast, "skip supersets of non-faces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  const auto started = std::chrono::steady_clock::now();
  CLI::App* cmd = app.get_subcommands().front();
  Outcome out;

  try {
    if (cmd != scan_cmd && cmd != survey_cmd) input.require();
    if (cmd == frob_cmd) {
      out.parameters = input.echo();
      const Int f = input.is_arith() ? frobenius_closed(parse_arith(input.arith)) : frobenius(input.monoid());
      out.result = f;
      out.text = std::to_string(f);
    } else if (cmd == lenset_cmd) {
      out.parameters = input.echo();
      out.parameters["n"] = n;
      const auto ls = length_set(input.monoid(), n);
      out.result = length_set_json(ls);
      out.text = ls ? join(ls->lengths()) : "gap";
    } else if (cmd == apery_cmd) {
      const auto s = input.monoid();
      const Int m = modulus.value_or(s.multiplicity());
      out.parameters = input.echo();
      out.parameters["m"] = m;
      const auto ap = apery_set(s, m);
      out.result = ap;
      out.text = join(ap);
    } else if (cmd == factor_cmd) {
      out.parameters = input.echo();
      out.parameters["n"] = n;
      const auto fs = factorizations(input.monoid(), n, oracle_budget());
      out.result = fs;
      for (const auto& z : fs) out.text += join(z) + "  length " + std::to_string(factorization_length(z)) + "\n";
      if (fs.empty()) out.text = "gap";
      if (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
    } else if (cmd == table_cmd) {
      out.parameters = input.echo();
      out.parameters["bound"] = bound;
      const auto t = build_length_table(input.monoid(), bound);
      out.result = length_table_json(t);
      for (Int k = 0; k <= bound; ++k) {
        const auto row = t.at(k);
        out.text += std::to_string(k) + ": " + (row ? join(row->lengths()) : "gap") + (k < bound ? "\n" : "");
      }
    } else if (cmd == omit_cmd) {
      const auto m = parse_arith(input.arith);
      const auto g = parse_list(omit_text);
      out.parameters = input.echo();
      out.parameters["omit"] = g;
      out.parameters["what"] = what;
      out.parameters["shortcuts"] = !no_shortcut;
      const Question q = what == "lengths" ? Question::lengths
                         : what == "frobenius" ? Question::frobenius
                                               : Question::both;
      const auto v = check_omission(m, g, q, {.use_shortcut = !no_shortcut});
      out.result = verdict_json(v);
      out.text = "lengths_equal: " + yes_no(v.lengths_equal) + "\nfrobenius_equal: " + yes_no(v.frobenius_equal) +
                 "\nshortcut_used: " + std::string(shortcut_name(v.shortcut_used)) +
                 "\nwitness: " + (v.witness ? std::to_string(*v.witness) : "none");
    } else if (cmd == boundary_cmd) {
      const auto m = parse_arith(input.arith);
      out.parameters = input.echo();
      out.parameters["bound"] = bound;
      const auto report = check_boundary_lenset_match(m, bound);
      out.result = boundary_json(report);
      out.text = "checked " + std::to_string(report.checked_s1) + " elements of S_1 and " +
                 std::to_string(report.checked_sw1) + " of S_{w-1}; failures: " +
                 std::to_string(report.failures.size());
    } else if (cmd == complex_cmd) {
      const auto m = parse_arith(input.arith);
      out.parameters = input.echo();
      out.parameters["fast"] = fast;
      out.parameters["shortcuts"] = !no_shortcut;
      const auto c = build_complex(m, {.use_shortcut = !no_shortcut, .fast = fast, .threads = threads});
      out.result = complex_json(c);
      out.text = "ground set: " + join(c.ground_set()) + "\nfaces: " + std::to_string(c.faces().size()) + " of " +
                 std::to_string(c.subset_count()) + "\nmaximal faces (" + std::to_string(c.maximal_faces().size()) +
                 "): " + join_sets(c.maximal_faces()) + "\nminimal non-faces (" +
                 std::to_string(c.minimal_nonfaces().size()) + "): " + join_sets(c.minimal_nonfaces()) +
                 "\ndownward closed: " + (c.downward_closed() ? "true" : "false") +
                 "\nshortcut_used: " + std::string(shortcut_name(c.shortcut_used()));
    } else if (cmd == scan_cmd) {
      const auto ws = parse_range(w_range);
      const auto ds = parse_range(d_range);
      out.parameters = {{"w", ws}, {"d", ds}};
      const auto cells = tightness_scan(ws, ds, threads);
      out.result = tightness_json(cells);
      std::ostringstream text;
      text << "w\td\tlargest_bad_a\tw^2-3w+1";
      for (const auto& c : cells) {
        text << "\n" << c.w << "\t" << c.d << "\t"
             << (c.largest_bad_a ? std::to_string(*c.largest_bad_a) : "none") << "\t" << tightness_limit(c.w);
      }
      out.text = text.str();
    } else if (cmd == survey_cmd) {
      const auto as = parse_range(a_range);
      const auto ds = parse_range(d_range);
      const auto ws = parse_range(w_range);
      out.parameters = {{"a", as}, {"d", ds}, {"w", ws}, {"fast", fast}};
      const auto cells = complex_survey(as, ds, ws, {.fast = fast}, threads);
      out.result = survey_json(cells);
      std::size_t open = 0;
      for (const auto& c : cells) open += c.downward_closed ? 0 : 1;
      std::ostringstream text;
      text << "a\td\tw\tfaces\tmaximal\tminimal_nonfaces\tdownward_closed";
      for (const auto& c : cells) {
        text << "\n" << c.a << "\t" << c.d << "\t" << c.w << "\t" << c.faces << "/" << c.subsets << "\t"
             << c.maximal_faces.size() << "\t" << join_sets(c.minimal_nonfaces) << "\t"
             << (c.downward_closed ? "true" : "false");
      }
      text << "\ncells: " << cells.size() << ", not downward closed: " << open;
      out.text = text.str();
    }
  } catch (const MonoidError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  if (as_json) {
    json doc = {{"command", cmd->get_name()}, {"parameters", out.parameters}, {"result", out.result}};
    if (!stable) {
      doc["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << out.text << "\n";
  }
  return 0;
}
