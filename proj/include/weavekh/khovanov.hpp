#pragma once

// Khovanov Poincaré polynomial of an alternating knot recovered from its
// Jones polynomial and signature:
//
//   Kh'(-Q^2)  = (Q^sigma V(Q^2) - 1) / (1 - Q^2)
//   Kh(t, Q)   = Q^-sigma ((Q^-1 + Q) + (Q^-1 + t Q^3) Kh'(t Q^2))
//
// Ranks are supported on the lines j = 2i - sigma ± 1. The "Betti line" is
// the upper one, j = 2i - sigma + 1 (j = 2i + 1 for the W(3,n) knots).

#include <map>
#include <utility>
#include <vector>

#include "weavekh/jones.hpp"
#include "weavekh/laurent.hpp"

namespace weavekh::khovanov {

using BettiLine = std::vector<std::pair<int, BigInt>>;

struct KhovanovTable {
  int n = 0;
  int sigma = 0;
  BiLaurentPoly kh_poly;  // coefficient of t^i Q^j is dim H^{i,j}
  BiLaurentPoly kh_prime;
  std::map<int, BigInt> betti_line;

  BigInt rank(int i, int j) const { return kh_poly.coeff(i, j); }
};

/// Kh'(L)(tQ^2) from V_L(t); throws kNonExactDivision if (1 - Q^2) does not divide.
BiLaurentPoly kh_prime(const LaurentPoly& v, int sigma);
/// Throws kNegativeRank if any coefficient comes out negative.
BiLaurentPoly kh_poly(const BiLaurentPoly& khp, int sigma);

KhovanovTable build_table(int n, const LaurentPoly& v, int sigma);
/// Signature taken from the all-A smoothing of the W(3,n) braid word.
KhovanovTable khovanov_from_jones(const jones::JonesResult& jones);
KhovanovTable khovanov_w3(int n);

/// Nonzero ranks on j = 2i - sigma + 1, ascending in i.
BettiLine betti_line(const KhovanovTable& tbl);
BigInt total_rank_line(const KhovanovTable& tbl);

/// Coefficient of t^0 Q^1, i.e. dim H^{0,1}.
BigInt h01(const KhovanovTable& tbl);
/// dim H^{0,1} without the unpaired Q^-sigma (Q^-1 + Q) summand: the part of
/// H^{0,1} that belongs to a knight-move pair.
BigInt h01_paired(const KhovanovTable& tbl);
/// The lower line j = 2i - sigma - 1 translated by the knight move (1, 4)
/// onto the upper line. Equal to betti_line() except where the unpaired
/// generators sit.
BettiLine knight_partner_line(const KhovanovTable& tbl);

// Structural checks, each exact.
/// Kh(-1, Q) == (Q^-1 + Q) V(Q^2).
bool euler_identity_holds(const KhovanovTable& tbl, const LaurentPoly& v);
/// Every nonzero rank lies on j = 2i - sigma ± 1.
bool support_on_lines(const KhovanovTable& tbl);
/// Kh - Q^-sigma (Q^-1 + Q) is divisible by (Q^-1 + t Q^3).
bool knight_move_divisible(const KhovanovTable& tbl);

}  // namespace weavekh::khovanov
