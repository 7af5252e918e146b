#include "weavekh/diagram.hpp"

#include <numeric>
#include <string>

#include "weavekh/error.hpp"

namespace weavekh::diagram {
namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --components_;
  }

  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
  std::size_t components_;
};

void check_pq(int p, int q) {
  if (p < 2 || q < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "need p >= 2 and q >= 1, got p=" + std::to_string(p) + " q=" + std::to_string(q));
  }
}

}  // namespace

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& l : letters) w += l.sign;
  return w;
}

void BraidWord::validate() const {
  if (strands < 1) throw Error(ErrorCode::kInvalidArgument, "braid needs at least one strand");
  for (const auto& l : letters) {
    if (l.generator < 1 || l.generator >= strands || (l.sign != 1 && l.sign != -1)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad letter (" + std::to_string(l.generator) + "," + std::to_string(l.sign) +
                      ") on " + std::to_string(strands) + " strands");
    }
  }
}

BraidWord weaving_braid(int p, int q) {
  check_pq(p, q);
  BraidWord word{p, {}};
  word.letters.reserve(static_cast<std::size_t>((p - 1) * q));
  for (int rep = 0; rep < q; ++rep) {
    for (int g = 1; g < p; ++g) word.letters.push_back({g, g % 2 == 1 ? +1 : -1});
  }
  return word;
}

BraidWord rotated(const BraidWord& word, int k) {
  BraidWord out{word.strands, {}};
  const int len = word.crossings();
  if (len == 0) return out;
  const int start = ((k % len) + len) % len;
  out.letters.reserve(word.letters.size());
  for (int i = 0; i < len; ++i) out.letters.push_back(word.letters[(start + i) % len]);
  return out;
}

// Endpoints are (strand, level) with level 0..c-1; the top of the last letter
// is identified with level 0 by the closure. Every endpoint has degree two,
// so components of the union-find are exactly the closed loops.
int count_loops(const BraidWord& word, std::span<const Smoothing> state) {
  word.validate();
  if (state.size() != word.letters.size()) {
    throw Error(ErrorCode::kInvalidArgument, "state length does not match the braid word");
  }
  const auto p = static_cast<std::size_t>(word.strands);
  const std::size_t c = word.letters.size();
  if (c == 0) return word.strands;

  auto node = [&](std::size_t strand, std::size_t level) { return (level % c) * p + strand; };
  DisjointSet loops(p * c);
  for (std::size_t t = 0; t < c; ++t) {
    const auto g = static_cast<std::size_t>(word.letters[t].generator) - 1;
    for (std::size_t s = 0; s < p; ++s) {
      if (state[t] == Smoothing::kCapCup && (s == g || s == g + 1)) continue;
      loops.unite(node(s, t), node(s, t + 1));
    }
    if (state[t] == Smoothing::kCapCup) {
      loops.unite(node(g, t), node(g + 1, t));
      loops.unite(node(g, t + 1), node(g + 1, t + 1));
    }
  }
  return static_cast<int>(loops.components());
}

SmoothingStats smooth_stats(const BraidWord& word) {
  SmoothingStats stats;
  std::vector<Smoothing> state;
  state.reserve(word.letters.size());
  for (const auto& l : word.letters) {
    (l.sign > 0 ? stats.y : stats.x) += 1;
    state.push_back(a_smoothing(l));
  }
  stats.c = word.crossings();
  stats.o = count_loops(word, state);
  return stats;
}

int signature_alternating(const BraidWord& word) {
  const auto s = smooth_stats(word);
  return s.o - s.y - 1;
}

int signature_closed_form(int p, int q) {
  check_pq(p, q);
  return p % 2 == 1 ? 0 : 1 - q;
}

SignatureReport signature_report(int p, int q) {
  SignatureReport r;
  r.p = p;
  r.q = q;
  const auto word = weaving_braid(p, q);
  r.stats = smooth_stats(word);
  r.signature = r.stats.o - r.stats.y - 1;
  r.closed_form = signature_closed_form(p, q);
  r.agree = r.signature == r.closed_form;
  r.alternating = p >= 3;
  return r;
}

}  // namespace weavekh::diagram
