#include "medianlab/walk.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "medianlab/errors.hpp"

namespace medianlab {

namespace {

constexpr char kLetters[4] = {'a', 'A', 'b', 'B'};
constexpr int kMaxExtensions = 100;

int inverse_letter(int l) { return l ^ 1; }

std::size_t cylinder_index(const std::vector<std::uint8_t>& word, unsigned depth) {
  std::size_t index = word[0];
  for (unsigned i = 1; i < depth; ++i) {
    // rank of word[i] among the three letters that do not cancel word[i-1]
    const int forbidden = inverse_letter(word[i - 1]);
    const int rank = word[i] - (word[i] > forbidden ? 1 : 0);
    index = index * 3 + static_cast<std::size_t>(rank);
  }
  return index;
}

}  // namespace

StepDistribution::StepDistribution(std::array<Rational, 8> exact) : exact_(std::move(exact)) {
  Rational total = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    if (exact_[i] < 0) throw MedianError(ErrorCode::InvalidInput, "negative step weight");
    total += exact_[i];
    weights_[i] = exact_[i].get_d();
  }
  if (total != 1) {
    throw MedianError(ErrorCode::InvalidInput,
                      "step weights sum to " + format_rational(total) + ", not 1");
  }
}

StepDistribution StepDistribution::uniform() {
  std::array<Rational, 8> w;
  w.fill(Rational(1, 8));
  return StepDistribution(w);
}

StepDistribution StepDistribution::parse(std::string_view spec) {
  std::array<Rational, 8> w;
  w.fill(0);
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view item = spec.substr(pos, end - pos);
    pos = end + 1;
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq != 2) throw MedianError(ErrorCode::InvalidInput, "bad step entry '" + std::string(item) + "'");
    int letter = -1;
    for (int l = 0; l < 4; ++l) {
      if (item[0] == kLetters[l]) letter = l;
    }
    if (letter < 0 || (item[1] != '+' && item[1] != '-')) {
      throw MedianError(ErrorCode::InvalidInput, "bad step key '" + std::string(item.substr(0, 2)) + "'");
    }
    w[static_cast<std::size_t>(2 * letter + (item[1] == '-' ? 1 : 0))] =
        parse_rational(item.substr(eq + 1));
  }
  return StepDistribution(w);
}

double StepDistribution::letter_weight(std::size_t letter) const {
  return weights_[2 * letter] + weights_[2 * letter + 1];
}

double StepDistribution::plus_weight() const {
  double p = 0;
  for (std::size_t l = 0; l < 4; ++l) p += weights_[2 * l];
  return p;
}

std::string StepDistribution::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < 8; ++i) {
    if (i) os << ',';
    os << kLetters[i / 2] << (i % 2 ? '-' : '+') << '=' << format_rational(exact_[i]);
  }
  return os.str();
}

void WalkConfig::validate() const {
  if (depth < 1) throw MedianError(ErrorCode::InvalidInput, "depth must be at least 1");
  if (steps <= depth) throw MedianError(ErrorCode::InvalidInput, "steps must exceed depth");
  if (max_flip_window > steps) {
    throw MedianError(ErrorCode::InvalidInput, "flip window longer than the walk");
  }
  if (depth > 12) throw MedianError(ErrorCode::TooLarge, "depth above 12");
}

std::vector<std::string> cylinder_words(unsigned depth) {
  std::vector<std::string> out;
  if (depth == 0) return {""};
  for (int l = 0; l < 4; ++l) out.emplace_back(1, kLetters[l]);
  for (unsigned level = 1; level < depth; ++level) {
    std::vector<std::string> next;
    for (const std::string& w : out) {
      int last = 0;
      for (int l = 0; l < 4; ++l) {
        if (w.back() == kLetters[l]) last = l;
      }
      for (int l = 0; l < 4; ++l) {
        if (l != inverse_letter(last)) next.push_back(w + kLetters[l]);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<double> WalkReport::prefix_distribution() const {
  std::uint64_t total = 0;
  for (auto c : prefix_counts) total += c;
  std::vector<double> p(prefix_counts.size(), 0.0);
  if (total == 0) return p;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = static_cast<double>(prefix_counts[i]) / static_cast<double>(total);
  }
  return p;
}

double WalkReport::sign_plus_fraction() const {
  return trajectories ? static_cast<double>(sign_counts[0]) / static_cast<double>(trajectories) : 0.0;
}

std::vector<double> WalkReport::sign_flip_stats() const {
  std::vector<double> out;
  for (auto c : constant_sign_counts) {
    out.push_back(trajectories ? static_cast<double>(c) / static_cast<double>(trajectories) : 0.0);
  }
  return out;
}

WalkReport simulate_walk(const WalkConfig& config) {
  config.validate();
  std::array<double, 8> cumulative{};
  double acc = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    acc += config.mu.weight(i);
    cumulative[i] = acc;
  }
  cumulative[7] = 1.0;

  WalkReport report;
  report.cylinders = cylinder_words(config.depth);
  report.prefix_counts.assign(report.cylinders.size(), 0);
  report.constant_sign_counts.assign(config.max_flip_window, 0);
  report.trajectories = config.trajectories;

  std::vector<std::uint8_t> word;
  word.reserve(config.steps * 2);
  for (std::size_t t = 0; t < config.trajectories; ++t) {
    std::mt19937_64 rng(derive_seed(config.seed, t));
    auto draw = [&] {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      std::size_t slot = 0;
      while (slot < 7 && u >= cumulative[slot]) ++slot;
      return slot;
    };
    word.clear();
    int sign = 1;
    std::size_t plus_run = 0;  // trailing steps with sign multiplier +1
    auto step = [&](bool track_sign) {
      const std::size_t slot = draw();
      const auto letter = static_cast<std::uint8_t>(slot / 2);
      if (!word.empty() && word.back() == inverse_letter(letter)) {
        word.pop_back();
      } else {
        word.push_back(letter);
      }
      if (!track_sign) return;
      if (slot % 2) {
        sign = -sign;
        plus_run = 0;
      } else {
        ++plus_run;
      }
    };
    for (std::size_t i = 0; i < config.steps; ++i) step(true);

    report.sign_counts[sign == 1 ? 0 : 1] += 1;
    for (std::size_t k = 1; k <= config.max_flip_window; ++k) {
      if (plus_run >= k) report.constant_sign_counts[k - 1] += 1;
    }
    int extensions = 0;
    while (word.size() < config.depth && extensions < kMaxExtensions) {
      for (std::size_t i = 0; i < config.steps; ++i) step(false);
      ++extensions;
    }
    if (word.size() < config.depth) {
      ++report.unresolved;
    } else {
      report.prefix_counts[cylinder_index(word, config.depth)] += 1;
    }
  }
  return report;
}

WalkPrediction predict_walk(const WalkConfig& config) {
  config.validate();
  std::array<double, 4> p{};
  for (std::size_t l = 0; l < 4; ++l) p[l] = config.mu.letter_weight(l);

  // F[s] = P(walk from e ever visits s) solves
  // F[s] = p[s] + sum_{t != s} p[t] F[t^-1] F[s]; iterate upward from 0.
  std::array<double, 4> f{};
  for (int iter = 0; iter < 100000; ++iter) {
    std::array<double, 4> next{};
    double change = 0;
    for (int s = 0; s < 4; ++s) {
      double back = 0;
      for (int t = 0; t < 4; ++t) {
        if (t != s) back += p[t] * f[inverse_letter(t)];
      }
      next[s] = back < 1.0 ? p[s] / (1.0 - back) : 1.0;
      change = std::max(change, std::abs(next[s] - f[s]));
    }
    f = next;
    if (change < 1e-15) break;
  }

  WalkPrediction pred;
  for (const std::string& w : cylinder_words(config.depth)) {
    double mass = 1.0;
    int last = 0;
    for (char c : w) {
      for (int l = 0; l < 4; ++l) {
        if (c == kLetters[l]) last = l;
      }
      mass *= f[last];
    }
    const double up = f[inverse_letter(last)];
    const double denom = 1.0 - up * f[last];
    mass = denom > 0 ? mass * (1.0 - up) / denom : std::nan("");
    pred.cylinders.push_back(mass);
  }
  const double plus = config.mu.plus_weight();
  pred.sign_plus = 0.5 * (1.0 + std::pow(2.0 * plus - 1.0, static_cast<double>(config.steps)));
  for (unsigned k = 1; k <= config.max_flip_window; ++k) {
    pred.constant_sign.push_back(std::pow(plus, static_cast<double>(k)));
  }
  return pred;
}

}  // namespace medianlab
