#pragma once

#include <string>
#include <vector>

#include "hyperfact/exact.hpp"

namespace hyperfact {

// The quartic R_n(X, Y), the Jacobi quartic J_Q, the long and short
// Weierstrass curves, and the exact isomorphisms I, J, K between them.

// Z^2 = a X^4 + b X^3 + c X^2 + d X + e^2
struct JacobiQuartic {
  Int n;
  Int a, b, c, d;
  Int e;  // the constant term of the quartic is e^2
  Int e_squared() const { return e * e; }
};

JacobiQuartic jacobi_coeffs(const Int& n);

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassLong {
  Rat a1, a2, a3, a4, a6;
};

// Y^2 = X'^3 + a X' + b, with the completing-square constants kept around
// because the K shift needs A.
struct WeierstrassShort {
  Rat a, b;
  Rat A, B, C;
};

struct RnPoint {
  Rat x, y;
  friend bool operator==(const RnPoint&, const RnPoint&) = default;
};

struct JqPoint {
  Rat x, z;
  friend bool operator==(const JqPoint&, const JqPoint&) = default;
};

struct EwPoint {
  bool at_infinity = false;
  Rat x, y;
  static EwPoint infinity() { return EwPoint{true, Rat(0), Rat(0)}; }
  friend bool operator==(const EwPoint&, const EwPoint&) = default;
};

struct EkPoint {
  bool at_infinity = false;
  Rat x, y;
  static EkPoint infinity() { return EkPoint{true, Rat(0), Rat(0)}; }
  friend bool operator==(const EkPoint&, const EkPoint&) = default;
};

// All coefficient records for a given n, computed once and shareable.
class CurveSystem {
 public:
  explicit CurveSystem(Int n);  // n >= 2

  const Int& n() const { return n_; }
  const JacobiQuartic& quartic() const { return jq_; }
  const WeierstrassLong& long_curve() const { return ew_; }
  const WeierstrassShort& short_curve() const { return ek_; }

  // The 13-term quartic; zero exactly on R_n. Horner form per variable.
  Rat rn_eval(const Rat& x, const Rat& y) const;
  Int rn_eval(const Int& x, const Int& y) const;

  // Decomposition R_n = R_X + R_XY + gamma.
  Rat rx_eval(const Rat& x) const;
  Rat rxy_eval(const Rat& x, const Rat& y) const;
  const Int& gamma_term() const { return gamma_; }

  bool jq_on_curve(const Rat& x, const Rat& z) const;
  bool ew_on_curve(const EwPoint& p) const;  // infinity counts as on-curve
  bool ek_on_curve(const EkPoint& p) const;

  // I: (X, Y) -> (X, Z) with
  //   Z = (n^2-1)^2 / (n(n^2+1)) * (Y + Q(X) / (32(n^3-n)^2)),
  //   Q(X) = 64n^4 X^2 - (384n^5+64n^7+64n^3) X + (192n^8+640n^6+192n^4).
  JqPoint map_I(const RnPoint& p) const;
  RnPoint map_I_inv(const JqPoint& p) const;

  // J: (X, Z) -> ((2e(Z+e)+dX)/X^2, (4e^2(Z+e)+2e(dX+cX^2)-d^2X^2/2e)/X^3).
  // X = 0 is exceptional: (0, e) maps to the point at infinity, (0, -e) to
  // the finite two-torsion point (-2e, 0).
  EwPoint map_J(const JqPoint& p) const;
  // Throws std::domain_error when p.y == 0 (the two-torsion fiber).
  JqPoint map_J_inv(const EwPoint& p) const;

  EkPoint map_K(const EwPoint& p) const;
  EwPoint map_K_inv(const EkPoint& p) const;

  // ((-2 a2 + a1^2/4)/3, (a1 a2 - a3)/2); the Y-coordinate is identically 0
  // here because a1 a2 = a3.
  EkPoint two_torsion_point() const;

  // The rational-root points X = +-(n^4+14n^2+1) with both Z signs, each
  // verified against the quartic.
  std::vector<JqPoint> rational_root_candidates() const;

  // Y (n+1)^2 = n (X + (n-1)^2)^2, satisfied by every true root pair.
  bool parabola_check(const Rat& x, const Rat& y) const;

 private:
  Int n_;
  // R_n coefficients, grouped as C0(X) + C1(X) Y + C2 Y^2.
  Int c4_, c3_, c2x_, c1x_, gamma_;
  Int cy2_, cxxy_, cxy_, cy_;
  // Map I constants.
  Int qa_, qb_, qc_;       // Q(X) = qa X^2 + qb X + qc
  Int i_denom_;            // 32 (n^3 - n)^2
  Rat i_scale_;            // (n^2-1)^2 / (n (n^2+1))
  JacobiQuartic jq_;
  WeierstrassLong ew_;
  WeierstrassShort ek_;
};

// Discriminant of the quartic's right side, extracted from the 7x7
// Sylvester resultant of k and k'; identically zero (the quartic is
// singular: its right side is the square of X^2 - 8nX + e).
Int sylvester_discriminant(const Int& n);

enum class ChainStage { kRn, kJq, kEw, kEk };
std::string stage_name(ChainStage s);

struct ChainEntry {
  ChainStage stage;
  bool at_infinity = false;
  Rat first, second;
};

// Ordered record of one point's image at every stage, adjacency verified
// on construction with both the forward and the inverse maps.
struct ChainTrace {
  std::vector<ChainEntry> entries;
  static ChainTrace forward(const CurveSystem& cs, const RnPoint& start);
};

}  // namespace hyperfact
