#include "dyckgram/bijection.hpp"

#include <set>

#include "dyckgram/oracle.hpp"
#include "dyckgram/sequences.hpp"

namespace dyckgram {

long Walk::end_height() const {
  long h = 0;
  for (int s : steps) h += s;
  return h;
}

std::vector<long> Walk::heights() const {
  std::vector<long> out;
  long h = 0;
  for (int s : steps) out.push_back(h += s);
  return out;
}

std::string Walk::str() const {
  std::string out;
  for (int s : steps) out += s > 0 ? 'U' : 'D';
  return out;
}

RestrictionQuad parity_quad() {
  RestrictionQuad q;
  q.peaks = IntSet::progression(2, 2);
  q.valleys = IntSet::progression(2, 2);
  return q;
}

bool is_parity_path(const DyckPath& p) { return satisfies(p, parity_quad()); }

namespace {

// Step of the walk moving away from (sign = +1) or toward (-1) the 0/-1 boundary.
int relative_step(long w, int sign) { return w >= 0 ? sign : -sign; }

}  // namespace

Walk path_to_walk(const DyckPath& p) {
  if (p.empty()) throw NotInDomain("the empty path has no walk");
  if (!is_parity_path(p)) throw NotInDomain(p.str() + " has a peak or valley at positive even height");
  auto steps = p.steps();
  const std::size_t s = p.semilength();
  Walk w;
  long height = steps[0] == Step::Up ? 1 : -1;  // path height after step 1
  long at = 0;                                   // walk height
  for (std::size_t k = 1; k < s; ++k) {
    // 0-based indices of steps 2k and 2k+1.
    Step even = steps[2 * k - 1];
    Step odd = steps[2 * k];
    height += even == Step::Up ? 1 : -1;
    int step;
    if (height == 0) {
      step = at == 0 ? -1 : 1;
    } else if (even == Step::Up && odd == Step::Up) {
      step = relative_step(at, +1);
    } else if (even == Step::Down && odd == Step::Down) {
      step = relative_step(at, -1);
    } else {
      throw NotInDomain(p.str() + ": mixed step pair at positive height after step " + std::to_string(2 * k));
    }
    height += odd == Step::Up ? 1 : -1;
    at += step;
    w.steps.push_back(step);
  }
  return w;
}

DyckPath walk_to_path(const Walk& w) {
  for (int s : w.steps)
    if (s != 1 && s != -1) throw NotInCodomain("walk steps must be +1 or -1");
  const long expected_end = w.size() % 2 == 0 ? 0 : -1;
  if (w.end_height() != expected_end)
    throw NotInCodomain("walk of length " + std::to_string(w.size()) + " must end at " + std::to_string(expected_end) +
                        ", ends at " + std::to_string(w.end_height()));
  std::vector<Step> steps{Step::Up};
  long at = 0;
  for (int s : w.steps) {
    long next = at + s;
    bool crossing = (at == 0 && next == -1) || (at == -1 && next == 0);
    if (crossing) {
      steps.push_back(Step::Down);
      steps.push_back(Step::Up);
    } else if (s == relative_step(at, +1)) {
      steps.push_back(Step::Up);
      steps.push_back(Step::Up);
    } else {
      steps.push_back(Step::Down);
      steps.push_back(Step::Down);
    }
    at = next;
  }
  steps.push_back(Step::Down);
  return DyckPath::validate(std::move(steps));
}

namespace {

std::vector<Walk> all_walks(std::size_t length, long end) {
  std::vector<Walk> out;
  for (unsigned long mask = 0; mask < (1UL << length); ++mask) {
    Walk w;
    for (std::size_t i = 0; i < length; ++i) w.steps.push_back((mask >> (length - 1 - i)) & 1UL ? -1 : 1);
    if (w.end_height() == end) out.push_back(std::move(w));
  }
  return out;
}

BijectionRow check_semilength(std::size_t m, std::string& failure) {
  BijectionRow row;
  row.semilength = m;
  auto paths = enumerate(m, parity_quad());
  row.oracle_count = static_cast<unsigned long>(paths.size());
  row.formula_count = reference(SeqId::Prop4Binom, m);
  row.counts_match = row.oracle_count == row.formula_count;
  if (!row.counts_match) failure = "count mismatch at semilength " + std::to_string(m);
  if (m == 0) return row;

  auto walks = all_walks(m - 1, (m - 1) % 2 == 0 ? 0 : -1);
  row.walks = walks.size();
  std::set<DyckPath> domain(paths.begin(), paths.end());
  std::set<Walk> images;
  for (const auto& p : paths) {
    Walk w = path_to_walk(p);
    if (walk_to_path(w) != p) {
      row.round_trip = false;
      failure = "round trip fails for " + p.str();
      return row;
    }
    images.insert(w);
  }
  for (const auto& w : walks) {
    DyckPath p = walk_to_path(w);
    if (!domain.contains(p) || path_to_walk(p) != w) {
      row.round_trip = false;
      failure = "walk " + w.str() + " does not map back into the parity paths";
      return row;
    }
  }
  if (images.size() != walks.size() || images.size() != paths.size()) {
    row.round_trip = false;
    failure = "image sizes differ at semilength " + std::to_string(m);
  }
  return row;
}

}  // namespace

BijectionReport verify_counts(std::size_t max_semilength) {
  if (max_semilength > kDefaultEnumerationCap)
    throw ResourceLimit("semilength " + std::to_string(max_semilength) + " exceeds the enumeration cap");
  BijectionReport report;
  report.rows.resize(max_semilength + 1);
  std::vector<std::string> failures(max_semilength + 1);
  const auto count = static_cast<std::int64_t>(max_semilength + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t m = 0; m < count; ++m) {
    const auto i = static_cast<std::size_t>(m);
    try {
      report.rows[i] = check_semilength(i, failures[i]);
    } catch (const std::exception& e) {
      report.rows[i].semilength = i;
      report.rows[i].round_trip = false;
      failures[i] = e.what();
    }
  }
  for (std::size_t i = 0; i <= max_semilength; ++i) {
    const auto& row = report.rows[i];
    if (!row.counts_match || !row.round_trip) {
      report.pass = false;
      if (report.failure.empty()) report.failure = failures[i];
    }
  }
  return report;
}

}  // namespace dyckgram
