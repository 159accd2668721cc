#include <map>
#include <tuple>

#include "dyckgram/oracle.hpp"

namespace dyckgram::serial {

namespace {

void walk(std::vector<Step>& buf, long height, std::size_t ups, std::size_t n, const RestrictionQuad& quad,
          unsigned long& hits) {
  if (buf.size() == 2 * n) {
    if (satisfies(buf, quad)) ++hits;
    return;
  }
  if (ups < n) {
    buf.push_back(Step::Up);
    walk(buf, height + 1, ups + 1, n, quad, hits);
    buf.pop_back();
  }
  if (height > 0) {
    buf.push_back(Step::Down);
    walk(buf, height - 1, ups, n, quad, hits);
    buf.pop_back();
  }
}

}  // namespace

CountTable count_brute(std::size_t n_max, const RestrictionQuad& quad, std::size_t cap) {
  if (n_max > cap)
    throw ResourceLimit("semilength " + std::to_string(n_max) + " exceeds the enumeration cap " +
                        std::to_string(cap));
  CountTable table{CountMethod::Brute, {}};
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<Step> buf;
    unsigned long hits = 0;
    walk(buf, 0, 0, n, quad, hits);
    table.entries.emplace_back(hits);
  }
  return table;
}

// Forward (push) formulation over an ordered map of live states.
CountTable count_dp(std::size_t n_max, const RestrictionQuad& quad) {
  // (height, last step, run length); the empty prefix is (0, Down, 0).
  using State = std::tuple<long, Step, long>;
  std::map<State, BigInt> live{{{0, Step::Down, 0}, 1}};
  CountTable table{CountMethod::DP, {BigInt(1)}};
  for (std::size_t step = 1; step <= 2 * n_max; ++step) {
    std::map<State, BigInt> next;
    for (const auto& [state, ways] : live) {
      auto [h, dir, run] = state;
      bool started = run > 0;
      // Up step.
      if (dir == Step::Up) {
        next[{h + 1, Step::Up, run + 1}] += ways;
      } else if (!started || (!quad.down_runs.contains(run) && !quad.valleys.contains(h))) {
        next[{h + 1, Step::Up, 1}] += ways;
      }
      // Down step.
      if (h > 0) {
        if (dir == Step::Down)
          next[{h - 1, Step::Down, run + 1}] += ways;
        else if (!quad.up_runs.contains(run) && !quad.peaks.contains(h))
          next[{h - 1, Step::Down, 1}] += ways;
      }
    }
    live = std::move(next);
    if (step % 2 == 0) {
      BigInt closed = 0;
      for (const auto& [state, ways] : live) {
        auto [h, dir, run] = state;
        if (h == 0 && dir == Step::Down && !quad.down_runs.contains(run)) closed += ways;
      }
      table.entries.push_back(closed);
    }
  }
  return table;
}

}  // namespace dyckgram::serial
