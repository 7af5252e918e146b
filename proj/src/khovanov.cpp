#include "weavekh/khovanov.hpp"

#include "weavekh/diagram.hpp"
#include "weavekh/error.hpp"

namespace weavekh::khovanov {
namespace {

BiLaurentPoly unpaired(int sigma) {
  return BiLaurentPoly::monomial(1, 0, -1 - sigma) + BiLaurentPoly::monomial(1, 0, 1 - sigma);
}

BiLaurentPoly knight_factor() {
  return BiLaurentPoly::monomial(1, 0, -1) + BiLaurentPoly::monomial(1, 1, 3);
}

}  // namespace

BiLaurentPoly kh_prime(const LaurentPoly& v, int sigma) {
  // Q^sigma V(Q^2) - 1
  LaurentPoly numerator = shift(scale_exponents(v.renamed("Q"), 2), sigma);
  numerator -= LaurentPoly::constant(1, "Q");
  const LaurentPoly one_minus_q2 = LaurentPoly::from_coeffs({1, 0, -1}, 0, "Q");
  return substitute_knight(exact_div(numerator, one_minus_q2));
}

BiLaurentPoly kh_poly(const BiLaurentPoly& khp, int sigma) {
  BiLaurentPoly kh = unpaired(0) + knight_factor() * khp;
  BiLaurentPoly::TermMap shifted;
  for (const auto& [key, c] : kh.terms()) {
    if (c < 0) {
      throw Error(ErrorCode::kNegativeRank, "coefficient " + c.get_str() + " at t^" +
                                                std::to_string(key.first) + " Q^" +
                                                std::to_string(key.second - sigma));
    }
    shifted.emplace(BiLaurentPoly::Exponent{key.first, key.second - sigma}, c);
  }
  return BiLaurentPoly(std::move(shifted));
}

KhovanovTable build_table(int n, const LaurentPoly& v, int sigma) {
  KhovanovTable tbl;
  tbl.n = n;
  tbl.sigma = sigma;
  tbl.kh_prime = kh_prime(v, sigma);
  tbl.kh_poly = kh_poly(tbl.kh_prime, sigma);
  for (const auto& [key, c] : tbl.kh_poly.terms()) {
    if (key.second == 2 * key.first - sigma + 1) tbl.betti_line.emplace(key.first, c);
  }
  return tbl;
}

KhovanovTable khovanov_from_jones(const jones::JonesResult& jones) {
  const int sigma = diagram::signature_alternating(diagram::weaving_braid(3, jones.n));
  return build_table(jones.n, jones.v, sigma);
}

KhovanovTable khovanov_w3(int n) { return khovanov_from_jones(jones::jones_w3(n)); }

BettiLine betti_line(const KhovanovTable& tbl) {
  return BettiLine(tbl.betti_line.begin(), tbl.betti_line.end());
}

BigInt total_rank_line(const KhovanovTable& tbl) {
  BigInt total = 0;
  for (const auto& [i, r] : tbl.betti_line) total += r;
  return total;
}

BigInt h01(const KhovanovTable& tbl) { return tbl.rank(0, 1); }

BigInt h01_paired(const KhovanovTable& tbl) {
  return (tbl.kh_poly - unpaired(tbl.sigma)).coeff(0, 1);
}

BettiLine knight_partner_line(const KhovanovTable& tbl) {
  BettiLine out;
  for (const auto& [key, c] : tbl.kh_poly.terms()) {
    if (key.second == 2 * key.first - tbl.sigma - 1) out.emplace_back(key.first + 1, c);
  }
  return out;
}

bool euler_identity_holds(const KhovanovTable& tbl, const LaurentPoly& v) {
  const LaurentPoly q_plus_inverse = LaurentPoly::from_coeffs({1, 0, 1}, -1, "Q");
  return tbl.kh_poly.at_t_minus_one() == q_plus_inverse * scale_exponents(v.renamed("Q"), 2);
}

bool support_on_lines(const KhovanovTable& tbl) {
  for (const auto& [key, c] : tbl.kh_poly.terms()) {
    const int offset = key.second - 2 * key.first + tbl.sigma;
    if (offset != 1 && offset != -1) return false;
  }
  return true;
}

bool knight_move_divisible(const KhovanovTable& tbl) {
  const BiLaurentPoly rest = tbl.kh_poly - unpaired(tbl.sigma);
  try {
    exact_div(rest, knight_factor());
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonExactDivision) throw;
    return false;
  }
}

}  // namespace weavekh::khovanov
