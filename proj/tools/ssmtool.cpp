// ssmtool: command-line front end for the ssm library.
//
// Every subcommand prints one JSON document on stdout (indented with
// --pretty), except `construct --emit matrix|code`, which prints the text
// file format so the output can be fed back into the other subcommands.
//
// Exit status: 0 success, 1 negative verdict under --assert, 2 usage,
// input or parameter error.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <string>
#include <thread>
#include <algorithm>

#include "ssm/decoder.hpp"
#include "ssm/io.hpp"
#include "ssm/properties.hpp"
#include "ssm/random_construction.hpp"
#include "ssm/search.hpp"
#include "ssm/serialize.hpp"
#include "ssm/ssc.hpp"

namespace {

using namespace ssm;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Globals {
  bool pretty = false;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
};

void emit(const Globals& g, const Json& j) { std::cout << (g.pretty ? j.dump(2) : j.dump()) << '\n'; }

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

// A code header has three fields, a matrix header two.
bool looks_like_code(const std::string& text) {
  if (looks_like_json(text)) return nlohmann::json::parse(text).contains("q");
  const auto header = text.substr(0, text.find('\n'));
  return std::count(header.begin(), header.end(), ' ') == 2;
}

BinaryMatrix load_matrix(const std::string& path) {
  const auto text = read_file(path);
  return looks_like_json(text) ? matrix_from_json(nlohmann::json::parse(text)) : read_matrix(text);
}

QaryCode load_code(const std::string& path) {
  const auto text = read_file(path);
  return looks_like_json(text) ? code_from_json(nlohmann::json::parse(text)) : read_code(text);
}

int cmd_verify(const Globals& g, const std::string& path, const std::string& property, std::size_t d, bool as_code,
               bool assert_holds) {
  PropertyReport report;
  Json input;
  if (property == "ssc") {
    const auto code = as_code ? load_code(path) : columns_as_code(load_matrix(path));
    report = is_ssc(code, d);
    input = {{"t", code.length()}, {"n", code.size()}, {"q", code.alphabet()}};
  } else {
    const auto m = as_code ? concatenate(load_code(path)) : load_matrix(path);
    if (property == "ssm") report = is_ssm(m, d);
    else if (property == "ssm-bar") report = is_ssm_bruteforce(m, d, true);
    else if (property == "ssm-brute") report = is_ssm_bruteforce(m, d, false);
    else if (property == "dm") report = is_disjunct(m, d);
    else report = is_bar_separable(m, d);
    input = {{"t", m.tests()}, {"n", m.items()}};
  }
  Json out = to_json(report);
  out["input"] = std::move(input);
  emit(g, out);
  return assert_holds && !report.holds ? kExitViolation : 0;
}

int cmd_decode(const Globals& g, const std::string& path, const std::string& outcome, std::size_t d,
               const std::string& method, bool assert_identified) {
  const auto m = load_matrix(path);
  if (outcome.size() != m.tests())
    throw Error("outcome has " + std::to_string(outcome.size()) + " symbols, matrix has t = " + std::to_string(m.tests()));
  const auto r = BooleanVector::from_string(outcome);
  DecodeResult result;
  if (method == "ssm") result = decode_ssm(m, r, d);
  else if (method == "dm") result = decode_dm(m, r, d);
  else result = decode_sm_table(m, r, d);
  Json out = to_json(result);
  out["method"] = method;
  emit(g, out);
  return assert_identified && !result.identified() ? kExitViolation : 0;
}

int cmd_simulate(const Globals& g, const std::string& path, CampaignOptions o, bool assert_all) {
  const auto m = load_matrix(path);
  o.workers = g.jobs;
  const auto report = run_campaign(m, o);
  Json out = to_json(report);
  out["d"] = o.d;
  out["seed"] = o.seed;
  out["sampler"] = o.sampler == PositiveSampler::uniform_size ? "uniform_size" : "uniform_subset";
  emit(g, out);
  return assert_all && report.successes != report.trials ? kExitViolation : 0;
}

int cmd_construct(const Globals& g, std::size_t t, std::size_t n, std::size_t q, std::uint64_t seed,
                  const std::string& what) {
  const auto c = build_2ssm(t, n, q, seed);
  if (what == "matrix") {
    std::cout << write_matrix(c.matrix);
  } else if (what == "code") {
    std::cout << write_code(c.code);
  } else if (what == "log") {
    emit(g, to_json(c.log));
  } else {
    Json out;
    out["t"] = t;
    out["q"] = q;
    out["seed"] = seed;
    out["initial_n"] = c.log.initial_n;
    out["final_n"] = c.log.final_n;
    out["rows"] = c.matrix.tests();
    out["rate"] = c.rate;
    out["removed"] = c.log.removed.size();
    emit(g, out);
  }
  return 0;
}

int cmd_search(const Globals& g, SearchOptions o, const std::string& seed_path) {
  if (!seed_path.empty()) {
    const auto m = load_matrix(seed_path);
    if (m.tests() != o.t) throw Error("seed matrix has " + std::to_string(m.tests()) + " rows, --t is " + std::to_string(o.t));
    o.seed_columns = canonical_columns(m);
  }
  const auto r = search_max(o);
  Json out = to_json(r);
  out["rate"] = rate_entry(r.t, std::max<std::size_t>(r.max_n, 1), r.exhaustive).rate;
  emit(g, out);
  return 0;
}

int cmd_bounds(const Globals& g, std::size_t q, std::size_t m_cap, bool table) {
  if (table) {
    emit(g, to_json(known_bounds()));
    return 0;
  }
  const auto r = rate_bound(q, m_cap);
  Json out = to_json(r);
  out["bound_rounded"] = std::round(r.bound * 1e4) / 1e4;
  emit(g, out);
  return 0;
}

int cmd_convert(const Globals& g, const std::string& path, const std::string& to) {
  const auto text = read_file(path);
  if (looks_like_code(text)) {
    const auto code = looks_like_json(text) ? code_from_json(nlohmann::json::parse(text)) : read_code(text);
    if (to == "text") std::cout << write_code(code);
    else emit(g, code_to_json(code));
  } else {
    const auto m = looks_like_json(text) ? matrix_from_json(nlohmann::json::parse(text)) : read_matrix(text);
    if (to == "text") std::cout << write_matrix(m);
    else emit(g, matrix_to_json(m));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly separable matrices: verification, decoding, construction and search"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--pretty", g.pretty, "Indent JSON output");
  app.add_option("--jobs", g.jobs, "Worker threads for campaigns")->check(CLI::Range(1U, 1024U));

  std::string path, property = "ssm", method = "ssm", outcome, emit_what = "summary", to = "json", seed_path;
  std::size_t d = 2;
  bool as_code = false, assert_flag = false;

  auto* verify = app.add_subcommand("verify", "Check a matrix or code for a property");
  verify->add_option("file", path, "Matrix or code file")->required();
  verify->add_option("--property", property, "Property to check")
      ->check(CLI::IsMember({"ssm", "ssm-bar", "ssm-brute", "dm", "sm", "ssc"}));
  verify->add_option("--d", d, "Number of positives")->check(CLI::PositiveNumber);
  verify->add_flag("--code", as_code, "Input is a q-ary code (concatenated for matrix properties)");
  verify->add_flag("--assert", assert_flag, "Exit 1 when the property fails");

  auto* decode = app.add_subcommand("decode", "Identify positives from a test outcome");
  decode->add_option("file", path, "Matrix file")->required();
  decode->add_option("outcome", outcome, "Outcome vector as a string of t characters from {0,1}")->required();
  decode->add_option("--d", d, "Number of positives")->check(CLI::PositiveNumber);
  decode->add_option("--method", method, "Decoder")->check(CLI::IsMember({"ssm", "dm", "table"}));
  decode->add_flag("--assert", assert_flag, "Exit 1 when the outcome is not identified");

  CampaignOptions campaign;
  std::string sampler = "subset";
  std::size_t fixed_size = 0;
  auto* simulate = app.add_subcommand("simulate", "Run a seeded decoding campaign");
  simulate->add_option("file", path, "Matrix file")->required();
  simulate->add_option("--d", campaign.d, "Largest positive set")->check(CLI::PositiveNumber);
  simulate->add_option("--trials", campaign.trials, "Number of sampled trials");
  simulate->add_option("--seed", campaign.seed, "Random seed");
  simulate->add_flag("--exhaustive", campaign.exhaustive, "Enumerate every positive set");
  simulate->add_option("--size", fixed_size, "Draw positive sets of exactly this size")->check(CLI::PositiveNumber);
  simulate->add_option("--sampler", sampler, "subset: uniform over sets; size: uniform size first")
      ->check(CLI::IsMember({"subset", "size"}));
  simulate->add_option("--max-failures", campaign.max_failure_examples, "Failure examples to report");
  simulate->add_flag("--assert", assert_flag, "Exit 1 unless every trial succeeds");

  std::size_t t = 0, n = 0, q = 4;
  std::uint64_t seed = 0;
  auto* construct = app.add_subcommand("construct", "Random code, expurgation and concatenation into a 2-SSM");
  construct->add_option("--t", t, "Code length")->required()->check(CLI::PositiveNumber);
  construct->add_option("--n", n, "Initial number of words")->required()->check(CLI::PositiveNumber);
  construct->add_option("--q", q, "Alphabet size")->check(CLI::Range(std::size_t{2}, kMaxAlphabet));
  construct->add_option("--seed", seed, "Random seed");
  construct->add_option("--emit", emit_what, "summary (JSON), log (JSON), matrix or code (text formats)")
      ->check(CLI::IsMember({"summary", "log", "matrix", "code"}));

  SearchOptions search;
  std::string search_property = "ssm";
  auto* search_cmd = app.add_subcommand("search", "Largest column count for a property and row count");
  search_cmd->add_option("--property", search_property, "Property")->check(CLI::IsMember({"ssm", "dm", "sm"}));
  search_cmd->add_option("--d", search.d, "Number of positives")->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  search_cmd->add_option("--t", search.t, "Number of rows")->required()->check(CLI::Range(std::size_t{1}, kSearchMaxTests));
  search_cmd->add_option("--budget", search.budget, "Sub-check budget, 0 for none");
  search_cmd->add_option("--seed-matrix", seed_path, "Matrix whose columns start the search as the incumbent");

  std::size_t m_cap = 64;
  bool table = false;
  auto* bounds = app.add_subcommand("bounds", "Random-coding rate bound, or the table of known bounds");
  bounds->add_option("--q", q, "Alphabet size")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  bounds->add_option("--m-cap", m_cap, "Largest m evaluated")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  bounds->add_flag("--table", table, "Print the known bounds instead");

  auto* convert = app.add_subcommand("convert", "Convert a matrix or code between text and JSON");
  convert->add_option("file", path, "Matrix or code file")->required();
  convert->add_option("--to", to, "Target format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(g, path, property, d, as_code, assert_flag);
    if (*decode) return cmd_decode(g, path, outcome, d, method, assert_flag);
    if (*simulate) {
      if (fixed_size) campaign.fixed_size = fixed_size;
      campaign.sampler = sampler == "size" ? PositiveSampler::uniform_size : PositiveSampler::uniform_subset;
      return cmd_simulate(g, path, campaign, assert_flag);
    }
    if (*construct) return cmd_construct(g, t, n, q, seed, emit_what);
    if (*search_cmd) {
      search.property = search_property == "dm" ? SearchProperty::dm
                        : search_property == "sm" ? SearchProperty::sm
                                                  : SearchProperty::ssm;
      return cmd_search(g, search, seed_path);
    }
    if (*bounds) return cmd_bounds(g, q, m_cap, table);
    if (*convert) return cmd_convert(g, path, to);
  } catch (const ParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
