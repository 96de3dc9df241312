#include "npcx/subst.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace npcx {

namespace {

inline int signed_inverse(int s) { return s ^ 1; }

std::vector<int> signed_letters(const FreeWord& w) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(w.length()));
  for (const auto& run : w.runs()) {
    int s = run.exp > 0 ? 2 * run.gen : 2 * run.gen + 1;
    for (long long i = 0; i < std::abs(run.exp); ++i) out.push_back(s);
  }
  return out;
}

}  // namespace

int SubstitutionFamily::add(const std::vector<FreeWord>& images) {
  if (static_cast<int>(images.size()) != rank_)
    throw std::invalid_argument("SubstitutionFamily: wrong image count");
  std::vector<std::vector<int>> table(2 * rank_);
  for (int g = 0; g < rank_; ++g) {
    table[2 * g] = signed_letters(images[g]);
    std::vector<int> inv(table[2 * g].rbegin(), table[2 * g].rend());
    for (int& s : inv) s = signed_inverse(s);
    table[2 * g + 1] = std::move(inv);
  }
  std::vector<std::vector<std::pair<int, long long>>> tally(2 * rank_);
  for (int s = 0; s < 2 * rank_; ++s) {
    std::vector<long long> mult(2 * rank_, 0);
    for (int t : table[s]) ++mult[t];
    for (int t = 0; t < 2 * rank_; ++t)
      if (mult[t] > 0) tally[s].push_back({t, mult[t]});
  }
  images_.push_back(std::move(table));
  tallies_.push_back(std::move(tally));
  return size() - 1;
}

bool SubstitutionFamily::certify(const FreeWord& start) const {
  const int n = 2 * rank_;
  std::vector<int> word = signed_letters(start);
  if (word.empty()) return false;

  std::vector<bool> letter_seen(n, false);
  std::vector<bool> pair_seen(static_cast<size_t>(n) * n, false);
  std::deque<int> letters;
  std::deque<std::pair<int, int>> pairs;
  auto see_letter = [&](int a) {
    if (!letter_seen[a]) {
      letter_seen[a] = true;
      letters.push_back(a);
    }
  };
  auto see_pair = [&](int a, int b) {
    size_t key = static_cast<size_t>(a) * n + b;
    if (!pair_seen[key]) {
      pair_seen[key] = true;
      pairs.push_back({a, b});
    }
  };

  for (int s : word) see_letter(s);
  for (size_t i = 0; i + 1 < word.size(); ++i) see_pair(word[i], word[i + 1]);

  while (!letters.empty() || !pairs.empty()) {
    if (!letters.empty()) {
      int a = letters.front();
      letters.pop_front();
      for (const auto& sub : images_) {
        const std::vector<int>& img = sub[a];
        if (img.empty()) return false;  // junctions would skip over it
        for (int s : img) see_letter(s);
        for (size_t i = 0; i + 1 < img.size(); ++i)
          see_pair(img[i], img[i + 1]);
      }
      continue;
    }
    auto [a, b] = pairs.front();
    pairs.pop_front();
    if (b == signed_inverse(a)) return false;  // a cancellation is reachable
    for (const auto& sub : images_)
      see_pair(sub[a].back(), sub[b].front());
  }
  return true;
}

std::vector<Int> SubstitutionFamily::counts(const FreeWord& w) const {
  std::vector<Int> v(2 * rank_, 0);
  for (const auto& run : w.runs())
    v[run.exp > 0 ? 2 * run.gen : 2 * run.gen + 1] += std::abs(run.exp);
  return v;
}

std::vector<Int> SubstitutionFamily::advance(
    int sub, const std::vector<Int>& counts) const {
  const auto& tally = tallies_.at(sub);
  std::vector<Int> out(2 * rank_, 0);
  for (int a = 0; a < 2 * rank_; ++a) {
    if (counts[a] == 0) continue;
    for (const auto& [s, mult] : tally[a]) out[s] += counts[a] * mult;
  }
  return out;
}

Int SubstitutionFamily::total(const std::vector<Int>& counts) {
  Int sum = 0;
  for (const Int& v : counts) sum += v;
  return sum;
}

Int SubstitutionFamily::composed_length(const std::vector<int>& seq,
                                        const FreeWord& start) const {
  std::vector<Int> v = counts(start);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) v = advance(*it, v);
  return total(v);
}

long long SubstitutionFamily::max_image_length() const {
  long long best = 1;
  for (const auto& sub : images_)
    for (const auto& img : sub)
      best = std::max(best, static_cast<long long>(img.size()));
  return best;
}

}  // namespace npcx
