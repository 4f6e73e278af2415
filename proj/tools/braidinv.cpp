#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "braidinv/errors.hpp"
#include "braidinv/invariants.hpp"
#include "braidinv/sieve.hpp"
#include "braidinv/verify.hpp"

namespace {

int cmd_invariants(const std::string& word_text, std::optional<int> n,
                   bool json, std::uint64_t max_order) {
  const braidinv::BraidWord w = braidinv::parse_word(word_text, n);
  const braidinv::InvariantReport r = braidinv::invariant_report(w, max_order);
  if (json)
    std::cout << braidinv::report_to_json(r).dump(2) << '\n';
  else
    std::cout << braidinv::report_to_text(r);
  return 0;
}

int cmd_sieve(int n, int max_len, bool json) {
  const braidinv::SieveResult res = braidinv::run_sieve(n, max_len);
  if (json)
    std::cout << braidinv::sieve_to_json(res).dump(2) << '\n';
  else
    std::cout << braidinv::sieve_to_text(res);
  return 0;
}

int cmd_verify(const braidinv::VerifyOptions& opts) {
  const auto results = braidinv::run_property_suite(opts);
  std::cout << braidinv::property_results_to_text(results);
  for (const braidinv::PropertyResult& r : results)
    if (r.failures > 0) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integer invariants of braid words"};
  app.require_subcommand(1);

  std::string word_text;
  int inv_n = 0;  // only read when --n is given
  bool inv_json = false;
  std::uint64_t max_order = braidinv::kDefaultMaxOrder;
  CLI::App* inv = app.add_subcommand(
      "invariants", "report every invariant of one braid word");
  inv->add_option("--word", word_text,
                  "braid word as signed generator indices, e.g. \"1 -2 1\"")
      ->required();
  inv->add_option("--n", inv_n, "strand count (default: inferred)");
  inv->add_flag("--json", inv_json, "emit JSON instead of text");
  inv->add_option("--max-order", max_order,
                  "bail out when the permutation order exceeds this");

  int sieve_n = 0;
  int sieve_max_len = 0;
  bool sieve_json = false;
  CLI::App* sv = app.add_subcommand(
      "sieve", "bucket all short words by their conjugacy key");
  sv->add_option("--n", sieve_n, "strand count")->required();
  sv->add_option("--max-len", sieve_max_len, "maximum word length")->required();
  sv->add_flag("--json", sieve_json, "emit JSON instead of text");

  braidinv::VerifyOptions vopts;
  CLI::App* vf = app.add_subcommand(
      "verify", "run the randomized property suite");
  vf->add_option("--n", vopts.n, "maximum strand count of generated values");
  vf->add_option("--trials", vopts.trials, "checks per randomized property");
  vf->add_option("--seed", vopts.seed, "random seed");
  vf->add_option("--max-len", vopts.max_len, "maximum generated word length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed())
      return cmd_invariants(
          word_text,
          inv->count("--n") ? std::optional<int>(inv_n) : std::nullopt,
          inv_json, max_order);
    if (sv->parsed()) return cmd_sieve(sieve_n, sieve_max_len, sieve_json);
    return cmd_verify(vopts);
  } catch (const braidinv::OrderGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
