#include "weavekh/jones.hpp"

#include <cstdint>
#include <numeric>
#include <string>

#include "weavekh/error.hpp"

namespace weavekh::jones {

using hecke::Basis;

TracePoly trace_h3(const hecke::HeckeElement& e) {
  const LaurentPoly q = LaurentPoly::from_coeffs({0, 1});
  const LaurentPoly q_minus_1 = LaurentPoly::from_coeffs({-1, 1});
  TracePoly tr;
  tr.by_z_power = {
      e[Basis::kOne],
      e[Basis::kT1] + e[Basis::kT2] + q * e[Basis::kT1T2T1],
      e[Basis::kT1T2] + e[Basis::kT2T1] + q_minus_1 * e[Basis::kT1T2T1],
  };
  while (!tr.by_z_power.empty() && tr.by_z_power.back().is_zero()) tr.by_z_power.pop_back();
  return tr;
}

JonesResult jones_from_coeffs(const hecke::HeckeCoeffs& row) {
  if (row.n < 1) throw Error(ErrorCode::kInvalidArgument, "Jones polynomial needs n >= 1");
  const LaurentPoly one_plus_t = LaurentPoly::from_coeffs({1, 1}, 0, "t");

  const LaurentPoly c0 = row.c0.renamed("t");
  const LaurentPoly c1_c2 = (row.c1 + row.c2).renamed("t");
  const LaurentPoly c12_c21 = (row.c12 + row.c21).renamed("t");

  LaurentPoly body = one_plus_t * one_plus_t * c0;
  body += shift(one_plus_t * c1_c2, 2);
  body += shift(c12_c21, 4);

  JonesResult out;
  out.n = row.n;
  out.v = shift(body, -row.n - 1);
  out.is_knot = row.n % 3 != 0;
  if (!out.v.is_zero()) {
    out.min_deg = out.v.min_degree();
    out.max_deg = out.v.max_degree();
    out.span = out.max_deg - out.min_deg;
  }
  return out;
}

JonesResult jones_w3(int n) { return jones_from_coeffs(hecke::coeffs(n)); }

LaurentPoly kauffman_oracle(const diagram::BraidWord& word) {
  word.validate();
  const int c = word.crossings();
  if (c > kMaxOracleCrossings) {
    throw Error(ErrorCode::kTooManyCrossings,
                std::to_string(c) + " crossings (limit " + std::to_string(kMaxOracleCrossings) + ")");
  }

  // histogram[a][loops] = number of states with `a` A-smoothings and `loops` loops.
  const auto cs = static_cast<std::size_t>(c);
  const std::size_t max_loops = static_cast<std::size_t>(word.strands) + cs + 1;
  std::vector<std::vector<std::uint64_t>> histogram(cs + 1, std::vector<std::uint64_t>(max_loops + 1));
  std::vector<diagram::Smoothing> state(cs);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    std::size_t a_count = 0;
    for (std::size_t k = 0; k < cs; ++k) {
      const auto a_side = diagram::a_smoothing(word.letters[k]);
      const bool use_b = (mask >> k) & 1U;
      if (use_b) {
        state[k] = a_side == diagram::Smoothing::kIdentity ? diagram::Smoothing::kCapCup
                                                           : diagram::Smoothing::kIdentity;
      } else {
        state[k] = a_side;
        ++a_count;
      }
    }
    ++histogram[a_count][static_cast<std::size_t>(diagram::count_loops(word, state))];
  }

  // <D> = sum A^(a-b) d^(loops-1), d = -A^2 - A^-2.
  const LaurentPoly loop_value = LaurentPoly::from_coeffs({-1, 0, 0, 0, -1}, -2, "A");
  std::vector<LaurentPoly> loop_powers{LaurentPoly::constant(1, "A")};
  for (std::size_t k = 1; k <= max_loops; ++k) loop_powers.push_back(loop_powers.back() * loop_value);

  LaurentPoly bracket("A");
  for (std::size_t a = 0; a <= cs; ++a) {
    const int exponent = static_cast<int>(a) - static_cast<int>(cs - a);
    for (std::size_t loops = 1; loops <= max_loops; ++loops) {
      const std::uint64_t count = histogram[a][loops];
      if (count == 0) continue;
      bracket += shift(loop_powers[loops - 1], exponent) * BigInt(static_cast<unsigned long>(count));
    }
  }

  // (-A^3)^(-w) <D>, then A^k -> t^(-k/4).
  const int w = word.writhe();
  LaurentPoly normalized = shift(bracket, -3 * w);
  if (w % 2 != 0) normalized = -normalized;

  LaurentPoly::TermMap terms;
  for (const auto& [e, coeff] : normalized.terms()) {
    if (e % 4 != 0) {
      throw Error(ErrorCode::kFractionalExponent, "closure has a half-integer Jones exponent");
    }
    terms.emplace(-e / 4, coeff);
  }
  return LaurentPoly("t", std::move(terms));
}

}  // namespace weavekh::jones
