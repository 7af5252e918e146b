#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "weavekh/error.hpp"
#include "weavekh/khovanov.hpp"

using namespace weavekh;

namespace {

BiLaurentPoly mono(long c, int i, int j) { return BiLaurentPoly::monomial(c, i, j); }

BigInt determinant(const LaurentPoly& v) {
  BigInt s = 0;
  for (const auto& [e, c] : v.terms()) s += abs(c);
  return s;
}

}  // namespace

TEST_CASE("figure-eight golden polynomial") {
  const auto tbl = khovanov::khovanov_w3(2);
  CHECK(tbl.sigma == 0);
  const auto expected = mono(1, -2, -5) + mono(1, -1, -1) + mono(1, 0, -1) + mono(1, 0, 1) +
                        mono(1, 1, 1) + mono(1, 2, 5);
  CHECK(tbl.kh_poly == expected);
}

TEST_CASE("unknot") {
  const auto tbl = khovanov::khovanov_w3(1);
  CHECK(tbl.kh_poly == mono(1, 0, -1) + mono(1, 0, 1));
  CHECK(khovanov::total_rank_line(tbl) == 1);
}

TEST_CASE("W(3,10) Betti line") {
  const auto tbl = khovanov::khovanov_w3(10);
  const std::vector<long> ranks{1,   9,   36,  94,  196, 346, 529, 721, 879, 971,
                                970, 879, 721, 529, 346, 196, 94,  36,  9,   1};
  const auto line = khovanov::betti_line(tbl);
  REQUIRE(line.size() == ranks.size());
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    CHECK(line[k].first == static_cast<int>(k) - 9);
    CHECK(line[k].second == ranks[k]);
  }
  CHECK(khovanov::total_rank_line(tbl) == 7563);
  CHECK(khovanov::h01(tbl) == 971);
  CHECK(khovanov::h01_paired(tbl) == 970);

  // The knight partners of the line carry the same ranks with 0 and 1 swapped.
  const auto partner = khovanov::knight_partner_line(tbl);
  REQUIRE(partner.size() == ranks.size());
  const std::vector<long> swapped{1,   9,   36,  94,  196, 346, 529, 721, 879, 970,
                                  971, 879, 721, 529, 346, 196, 94,  36,  9,   1};
  for (std::size_t k = 0; k < swapped.size(); ++k) {
    CHECK(partner[k].first == static_cast<int>(k) - 9);
    CHECK(partner[k].second == swapped[k]);
  }
}

TEST_CASE("exact table rows") {
  struct Row {
    int n;
    const char* total;
    const char* h01;
  };
  for (const Row r : {Row{11, "19801", "2431"}, Row{22, "784198803", "69337015"},
                      Row{46, "8430103512748703523", "520131503664409798"},
                      Row{47, "22070297525055988321", "1347390412214087833"}}) {
    CAPTURE(r.n);
    const auto tbl = khovanov::khovanov_w3(r.n);
    CHECK(khovanov::total_rank_line(tbl) == BigInt(r.total));
    CHECK(khovanov::h01_paired(tbl) == BigInt(r.h01));
    CHECK(khovanov::h01(tbl) == BigInt(r.h01) + 1);
  }
}

TEST_CASE("structural properties for knots up to 100") {
  for (int n = 1; n <= 100; ++n) {
    if (n % 3 == 0) continue;
    CAPTURE(n);
    const auto jr = jones::jones_w3(n);
    const auto tbl = khovanov::khovanov_from_jones(jr);
    CHECK(tbl.sigma == 0);
    CHECK(khovanov::euler_identity_holds(tbl, jr.v));
    CHECK(khovanov::support_on_lines(tbl));
    CHECK(khovanov::knight_move_divisible(tbl));
    for (const auto& [key, c] : tbl.kh_poly.terms()) CHECK(c > 0);
    // Thin knots: total rank is det + 1, split evenly between the two lines.
    CHECK(2 * khovanov::total_rank_line(tbl) == determinant(jr.v) + 1);
    const auto line = khovanov::betti_line(tbl);
    CHECK(line.front().first >= -2 * n);
    CHECK(line.back().first <= 2 * n + 1);
  }
}

TEST_CASE("negative ranks are reported") {
  // V = t divides exactly but gives Kh' = -1.
  try {
    khovanov::build_table(0, LaurentPoly::monomial(1, 1, "t"), 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNegativeRank);
  }
  try {
    khovanov::build_table(0, LaurentPoly::from_coeffs({1, -3, 1}, -1, "t"), 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonExactDivision);
  }
}

TEST_CASE("an odd shift breaks the substitution") {
  const auto v = jones::jones_w3(2).v;
  try {
    khovanov::kh_prime(v, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::kOddExponent || e.code() == ErrorCode::kNonExactDivision));
  }
}
