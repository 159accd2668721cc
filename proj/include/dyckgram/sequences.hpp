#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dyckgram/bigint.hpp"

namespace dyckgram {

enum class SeqId { Catalan, Motzkin, GenCatalan, Powers2Prop, Prop4Binom, AllOnes };

std::string_view to_string(SeqId id);
const std::vector<SeqId>& all_sequences();

// Catalan: binomial formula. Motzkin: series solution of M = 1 + zM + z^2M^2.
// GenCatalan: G_0 = G_1 = 1, G_{n+2} = G_{n+1} + sum_{1<=k<n+1} G_k G_{n-k}.
// Powers2Prop: 1, then 2^(n-1). Prop4Binom: 1 at 0, binom(2j-1, j) at 2j,
// binom(2j, j) at 2j+1. AllOnes: 1.
BigInt reference(SeqId id, std::size_t n);
std::vector<BigInt> reference_prefix(SeqId id, std::size_t count);

// Every sequence whose first terms equal prefix (offset 0). Needs at least
// four terms; throws Error otherwise.
std::vector<SeqId> identify(const std::vector<BigInt>& prefix);

}  // namespace dyckgram
