#include "dyckgram/path.hpp"

#include <algorithm>

#include "dyckgram/intset.hpp"

namespace dyckgram {

NegativePrefix::NegativePrefix(std::size_t position)
    : Error("path goes below height 0 at step " + std::to_string(position)), position_(position) {}

UnbalancedPath::UnbalancedPath(long final_height)
    : Error("path ends at height " + std::to_string(final_height) + ", not 0"), final_height_(final_height) {}

DyckPath DyckPath::validate(std::vector<Step> steps) {
  long height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] == Step::Up ? 1 : -1;
    if (height < 0) throw NegativePrefix(i + 1);
  }
  if (height != 0) throw UnbalancedPath(height);
  return DyckPath(std::move(steps));
}

std::string DyckPath::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += to_char(s);
  return out;
}

std::vector<Step> parse_steps(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'U')
      steps.push_back(Step::Up);
    else if (text[i] == 'D')
      steps.push_back(Step::Down);
    else
      throw Error("invalid step character '" + std::string(1, text[i]) + "' at offset " + std::to_string(i));
  }
  return steps;
}

DyckPath parse_path(std::string_view text) { return DyckPath::validate(parse_steps(text)); }

PathFeatures features(const DyckPath& path) {
  PathFeatures out;
  auto steps = path.steps();
  long height = 0;
  long run = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] == Step::Up ? 1 : -1;
    ++run;
    bool last = i + 1 == steps.size();
    if (last || steps[i + 1] != steps[i]) {
      if (steps[i] == Step::Up) {
        out.up_runs.push_back(run);
        if (!last) out.peaks.push_back(height);
      } else {
        out.down_runs.push_back(run);
        if (!last) out.valleys.push_back(height);
      }
      run = 0;
    }
  }
  return out;
}

bool satisfies(std::span<const Step> steps, const RestrictionQuad& quad) {
  long height = 0;
  long run = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] == Step::Up ? 1 : -1;
    ++run;
    bool last = i + 1 == steps.size();
    if (last || steps[i + 1] != steps[i]) {
      if (steps[i] == Step::Up) {
        if (quad.up_runs.contains(run)) return false;
        if (!last && quad.peaks.contains(height)) return false;
      } else {
        if (quad.down_runs.contains(run)) return false;
        if (!last && quad.valleys.contains(height)) return false;
      }
      run = 0;
    }
  }
  return true;
}

bool satisfies(const DyckPath& path, const RestrictionQuad& quad) { return satisfies(path.steps(), quad); }

DyckPath reverse_complement(const DyckPath& path) {
  std::vector<Step> out(path.steps().rbegin(), path.steps().rend());
  for (Step& s : out) s = s == Step::Up ? Step::Down : Step::Up;
  return DyckPath::validate(std::move(out));
}

}  // namespace dyckgram
