#include "dyckgram/oracle.hpp"

#include <cstdint>
#include <vector>

namespace dyckgram {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw ResourceLimit("semilength " + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(cap));
}

// Backtracking over step buffers. `visit` sees each complete Dyck path of
// semilength n extending the given prefix, in lexicographic order.
template <typename Visit>
void extend(std::vector<Step>& buf, std::size_t pos, long height, std::size_t ups, std::size_t n,
            Visit& visit) {
  if (pos == 2 * n) {
    visit(std::span<const Step>(buf.data(), pos));
    return;
  }
  if (ups < n) {
    buf[pos] = Step::Up;
    extend(buf, pos + 1, height + 1, ups + 1, n, visit);
  }
  if (height > 0) {
    buf[pos] = Step::Down;
    extend(buf, pos + 1, height - 1, ups, n, visit);
  }
}

struct Prefix {
  std::vector<Step> steps;
  long height;
  std::size_t ups;
};

// Every valid prefix of the given depth (clamped to the path length).
std::vector<Prefix> prefixes(std::size_t n, std::size_t depth) {
  std::vector<Prefix> level{{{}, 0, 0}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Prefix> next;
    for (auto& p : level) {
      if (p.ups < n) {
        auto q = p;
        q.steps.push_back(Step::Up);
        ++q.height;
        ++q.ups;
        next.push_back(std::move(q));
      }
      if (p.height > 0) {
        auto q = p;
        q.steps.push_back(Step::Down);
        --q.height;
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::uint64_t count_one_brute(std::size_t n, const RestrictionQuad& quad) {
  auto roots = prefixes(n, std::min<std::size_t>(2 * n, 12));
  std::uint64_t total = 0;
  const std::int64_t count = static_cast<std::int64_t>(roots.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& root = roots[static_cast<std::size_t>(i)];
    std::vector<Step> buf(2 * n);
    std::copy(root.steps.begin(), root.steps.end(), buf.begin());
    std::uint64_t local = 0;
    auto visit = [&](std::span<const Step> steps) {
      if (satisfies(steps, quad)) ++local;
    };
    extend(buf, root.steps.size(), root.height, root.ups, n, visit);
    total += local;
  }
  return total;
}

}  // namespace

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Brute: return "brute";
    case CountMethod::DP: return "dp";
    case CountMethod::Grammar: return "grammar";
  }
  return "?";
}

std::vector<DyckPath> enumerate(std::size_t n, const RestrictionQuad& quad, std::size_t cap) {
  check_cap(n, cap);
  std::vector<DyckPath> out;
  std::vector<Step> buf(2 * n);
  auto visit = [&](std::span<const Step> steps) {
    if (satisfies(steps, quad)) out.push_back(DyckPath::validate({steps.begin(), steps.end()}));
  };
  extend(buf, 0, 0, 0, n, visit);
  return out;
}

CountTable count_brute(std::size_t n_max, const RestrictionQuad& quad, std::size_t cap) {
  check_cap(n_max, cap);
  CountTable table{CountMethod::Brute, {}};
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::uint64_t c = count_one_brute(n, quad);
    table.entries.emplace_back(static_cast<unsigned long>(c));
  }
  return table;
}

CountTable count_dp(std::size_t n_max, const RestrictionQuad& quad) {
  // up[h][l]: paths ending at height h inside an up-run of length l; same for down.
  const std::size_t H = n_max + 2;
  const std::size_t L = n_max + 2;
  using Layer = std::vector<BigInt>;
  auto at = [L](std::size_t h, std::size_t l) { return h * L + l; };
  Layer up(H * L), down(H * L), next_up(H * L), next_down(H * L);

  // Admissibility of completed runs and turning points; hoisted out of the kernel.
  std::vector<char> up_run_ok(L), down_run_ok(L), peak_ok(H), valley_ok(H);
  for (std::size_t l = 0; l < L; ++l) {
    up_run_ok[l] = !quad.up_runs.contains(static_cast<long>(l));
    down_run_ok[l] = !quad.down_runs.contains(static_cast<long>(l));
  }
  for (std::size_t h = 0; h < H; ++h) {
    peak_ok[h] = !quad.peaks.contains(static_cast<long>(h));
    valley_ok[h] = !quad.valleys.contains(static_cast<long>(h));
  }

  CountTable table{CountMethod::DP, {BigInt(1)}};
  for (std::size_t step = 1; step <= 2 * n_max; ++step) {
    const std::int64_t heights = static_cast<std::int64_t>(std::min(step, n_max) + 1);
#pragma omp parallel for schedule(static)
    for (std::int64_t hi = 0; hi < heights; ++hi) {
      const auto h = static_cast<std::size_t>(hi);
      for (std::size_t l = 0; l < L; ++l) {
        next_up[at(h, l)] = 0;
        next_down[at(h, l)] = 0;
      }
      if (h >= 1) {
        BigInt fresh = (step == 1 && h == 1) ? 1 : 0;
        if (valley_ok[h - 1])
          for (std::size_t l = 1; l < L; ++l)
            if (down_run_ok[l]) fresh += down[at(h - 1, l)];
        next_up[at(h, 1)] = fresh;
        for (std::size_t l = 2; l < L; ++l) next_up[at(h, l)] = up[at(h - 1, l - 1)];
      }
      if (h + 1 < H) {
        BigInt fresh = 0;
        if (peak_ok[h + 1])
          for (std::size_t l = 1; l < L; ++l)
            if (up_run_ok[l]) fresh += up[at(h + 1, l)];
        next_down[at(h, 1)] = fresh;
        for (std::size_t l = 2; l < L; ++l) next_down[at(h, l)] = down[at(h + 1, l - 1)];
      }
    }
    for (std::size_t h = static_cast<std::size_t>(heights); h < H; ++h)
      for (std::size_t l = 0; l < L; ++l) {
        next_up[at(h, l)] = 0;
        next_down[at(h, l)] = 0;
      }
    std::swap(up, next_up);
    std::swap(down, next_down);
    if (step % 2 == 0) {
      BigInt closed = 0;
      for (std::size_t l = 1; l < L; ++l)
        if (down_run_ok[l]) closed += down[at(0, l)];
      table.entries.push_back(closed);
    }
  }
  return table;
}

}  // namespace dyckgram
