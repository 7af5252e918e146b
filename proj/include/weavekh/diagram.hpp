#pragma once

// Braid words for weaving links W(p,q), loop counting of smoothed braid
// closures, and the alternating-diagram signature o(D) - y(D) - 1.

#include <span>
#include <vector>

namespace weavekh::diagram {

struct Letter {
  int generator = 1;  // sigma_i acts on strands i, i+1 (1-based)
  int sign = +1;      // +1 for sigma_i, -1 for sigma_i^-1

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct BraidWord {
  int strands = 2;
  std::vector<Letter> letters;

  int crossings() const { return static_cast<int>(letters.size()); }
  int writhe() const;
  /// Throws kInvalidArgument on an out-of-range generator or sign.
  void validate() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// (sigma_1 sigma_2^-1 sigma_3 ...)^q on p strands, signs alternating from +.
BraidWord weaving_braid(int p, int q);
/// Cyclic rotation by k letters (same closure).
BraidWord rotated(const BraidWord& word, int k);

/// Resolution of one crossing: strands pass straight, or cap below and cup above.
enum class Smoothing { kIdentity, kCapCup };

/// The A-smoothing of a letter: identity for positive, cap-cup for negative.
constexpr Smoothing a_smoothing(const Letter& l) {
  return l.sign > 0 ? Smoothing::kIdentity : Smoothing::kCapCup;
}

/// Number of closed loops in the closure of `word` with the crossings
/// resolved by `state` (one entry per letter).
int count_loops(const BraidWord& word, std::span<const Smoothing> state);

struct SmoothingStats {
  int c = 0;  // crossings
  int x = 0;  // negative crossings
  int y = 0;  // positive crossings
  int o = 0;  // loops of the all-A smoothing
};

SmoothingStats smooth_stats(const BraidWord& word);

/// o - y - 1. Valid only for reduced alternating diagrams of non-split links;
/// the caller owns that precondition.
int signature_alternating(const BraidWord& word);
/// 0 for odd p, 1 - q for even p.
int signature_closed_form(int p, int q);

struct SignatureReport {
  int p = 0;
  int q = 0;
  SmoothingStats stats;
  int signature = 0;
  int closed_form = 0;
  bool agree = false;
  bool alternating = false;  // p >= 3; W(2,q) is not a weaving diagram
};

SignatureReport signature_report(int p, int q);

}  // namespace weavekh::diagram
