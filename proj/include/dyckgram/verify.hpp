#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dyckgram/families.hpp"

namespace dyckgram {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct FamilyReport {
  std::string family;
  std::vector<CheckResult> checks;

  bool pass() const;
};

struct VerifyOptions {
  std::size_t max_len = 20;
  std::size_t n_max = 10;
};

// Runs, for one instance:
//   lowering       lower(body) equals the hand-written expected system
//   language:X     grammar words for nonterminal X equal the oracle language (plain grammars)
//   unambiguous:X  every such word has exactly one derivation (plain grammars)
//   equation       both sides agree as word multisets (grammatical equations)
//   gf-vs-brute    solved coefficients equal exhaustive counts
//   gf-vs-dp       solved coefficients equal the run-state DP counts
//   printed-gf     (F7, F8) the printed k = 0 variant exceeds the true series by exactly 1 at z^0
FamilyReport verify_family(const FamilyInstance& f, const VerifyOptions& opts = {});

// verify_family over many instances, in parallel; results keep input order.
std::vector<FamilyReport> verify_all(const std::vector<FamilyInstance>& instances, const VerifyOptions& opts = {});

}  // namespace dyckgram
