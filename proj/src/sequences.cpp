#include "dyckgram/sequences.hpp"

#include <mutex>

#include "dyckgram/error.hpp"
#include "dyckgram/series.hpp"

namespace dyckgram {

namespace {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Motzkin and generalized Catalan values are tabulated once and grown on demand.
class Tables {
 public:
  BigInt motzkin(std::size_t n) {
    std::lock_guard lock(mutex_);
    if (n >= motzkin_.size()) {
      std::size_t order = std::max<std::size_t>(2 * n + 2, kDefaultOrder);
      auto P = Polynomial::unknown("M");
      SeriesSystem sys{{{"M", P, Polynomial::constant(1) + Polynomial::z_power(1) * P +
                                      Polynomial::z_power(2) * P * P}}};
      motzkin_ = solve(sys, order).at("M").counts();
    }
    return motzkin_[n];
  }

  BigInt gen_catalan(std::size_t n) {
    std::lock_guard lock(mutex_);
    if (gen_.empty()) gen_ = {1, 1};
    while (gen_.size() <= n) {
      // index i = m + 2
      std::size_t m = gen_.size() - 2;
      BigInt next = gen_[m + 1];
      for (std::size_t k = 1; k < m + 1; ++k) next += gen_[k] * gen_[m - k];
      gen_.push_back(next);
    }
    return gen_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<BigInt> motzkin_;
  std::vector<BigInt> gen_;
};

Tables& tables() {
  static Tables t;
  return t;
}

}  // namespace

std::string_view to_string(SeqId id) {
  switch (id) {
    case SeqId::Catalan: return "CATALAN";
    case SeqId::Motzkin: return "MOTZKIN";
    case SeqId::GenCatalan: return "GEN_CATALAN";
    case SeqId::Powers2Prop: return "POWERS2_PROP";
    case SeqId::Prop4Binom: return "PROP4_BINOM";
    case SeqId::AllOnes: return "ALL_ONES";
  }
  return "?";
}

const std::vector<SeqId>& all_sequences() {
  static const std::vector<SeqId> ids{SeqId::Catalan,     SeqId::Motzkin,    SeqId::GenCatalan,
                                      SeqId::Powers2Prop, SeqId::Prop4Binom, SeqId::AllOnes};
  return ids;
}

BigInt reference(SeqId id, std::size_t n) {
  switch (id) {
    case SeqId::Catalan: return binomial(2 * n, n) / (n + 1);
    case SeqId::Motzkin: return tables().motzkin(n);
    case SeqId::GenCatalan: return tables().gen_catalan(n);
    case SeqId::Powers2Prop: {
      if (n == 0) return 1;
      BigInt out;
      mpz_ui_pow_ui(out.get_mpz_t(), 2, n - 1);
      return out;
    }
    case SeqId::Prop4Binom: {
      if (n == 0) return 1;
      std::size_t j = n / 2;
      return n % 2 == 0 ? binomial(2 * j - 1, j) : binomial(2 * j, j);
    }
    case SeqId::AllOnes: return 1;
  }
  throw Error("unknown sequence");
}

std::vector<BigInt> reference_prefix(SeqId id, std::size_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(reference(id, n));
  return out;
}

std::vector<SeqId> identify(const std::vector<BigInt>& prefix) {
  if (prefix.size() < 4) throw Error("identify needs at least 4 terms, got " + std::to_string(prefix.size()));
  std::vector<SeqId> out;
  for (SeqId id : all_sequences())
    if (reference_prefix(id, prefix.size()) == prefix) out.push_back(id);
  return out;
}

}  // namespace dyckgram
