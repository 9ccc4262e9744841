#pragma once

// Deterministic lasso-word enumeration and seeded random sampling, the test
// vehicles for all membership cross-checks. The sampling seed defaults to
// the COCOA_KIT_SEED environment variable (0 when unset).

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "cocoa/automaton.hpp"

namespace cocoa {

// All lassos with |stem| <= max_stem and 1 <= |period| <= max_period over
// the given letter subset, stem-major, lengths ascending, letters in subset
// order. The callback may be invoked with a reused LassoWord.
template <typename Fn>
inline void for_each_lasso(const std::vector<int>& letters, int max_stem, int max_period, Fn&& fn) {
  if (letters.empty()) throw std::invalid_argument("lasso enumeration: empty letter subset");
  const int nl = static_cast<int>(letters.size());
  LassoWord w;
  std::vector<int> stem_ix, period_ix;

  auto advance = [&](std::vector<int>& ix) {
    for (int pos = static_cast<int>(ix.size()) - 1; pos >= 0; --pos) {
      if (++ix[pos] < nl) return true;
      ix[pos] = 0;
    }
    return false;
  };

  for (int ls = 0; ls <= max_stem; ++ls) {
    stem_ix.assign(ls, 0);
    do {
      w.stem.clear();
      for (int i : stem_ix) w.stem.push_back(letters[i]);
      for (int lp = 1; lp <= max_period; ++lp) {
        period_ix.assign(lp, 0);
        do {
          w.period.clear();
          for (int i : period_ix) w.period.push_back(letters[i]);
          fn(w);
        } while (advance(period_ix));
      }
    } while (advance(stem_ix));
  }
}

inline std::vector<LassoWord> sub_alphabet_lassos(const Alphabet& sigma,
                                                  const std::vector<int>& letters, int max_stem,
                                                  int max_period) {
  for (int l : letters)
    if (l < 0 || l >= sigma.size())
      throw std::invalid_argument("lasso enumeration: letter outside the alphabet");
  std::vector<LassoWord> out;
  for_each_lasso(letters, max_stem, max_period, [&](const LassoWord& w) { out.push_back(w); });
  return out;
}

inline unsigned default_seed() {
  const char* env = std::getenv("COCOA_KIT_SEED");
  if (!env || !*env) return 0;
  return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
}

inline std::vector<LassoWord> sample_lassos(const std::vector<int>& letters, int count,
                                            int max_stem, int max_period, unsigned seed) {
  if (letters.empty()) throw std::invalid_argument("lasso sampling: empty letter subset");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> stem_len(0, max_stem);
  std::uniform_int_distribution<int> period_len(1, max_period);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(letters.size()) - 1);
  std::vector<LassoWord> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    LassoWord w;
    const int ls = stem_len(rng), lp = period_len(rng);
    for (int j = 0; j < ls; ++j) w.stem.push_back(letters[pick(rng)]);
    for (int j = 0; j < lp; ++j) w.period.push_back(letters[pick(rng)]);
    out.push_back(std::move(w));
  }
  return out;
}

inline std::vector<int> all_letters(const Alphabet& sigma) {
  std::vector<int> ls(sigma.size());
  for (int i = 0; i < sigma.size(); ++i) ls[i] = i;
  return ls;
}

}  // namespace cocoa
