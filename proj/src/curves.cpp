#include "hyperfact/curves.hpp"

#include <stdexcept>

namespace hyperfact {

JacobiQuartic jacobi_coeffs(const Int& n) {
  if (n < 2) throw std::domain_error("jacobi_coeffs: n must be >= 2");
  const Int n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
  const Int n6 = n5 * n, n8 = n6 * n2;
  JacobiQuartic jq;
  jq.n = n;
  jq.a = 1;
  jq.b = -16 * n;
  jq.c = 2 * n4 + 92 * n2 + 2;
  jq.d = -(16 * n5 + 224 * n3 + 16 * n);
  const Int e_sq = n8 + 28 * n6 + 198 * n4 + 28 * n2 + 1;
  const auto root = is_perfect_square(e_sq);
  if (!root) throw std::logic_error("jacobi_coeffs: e^2 is not a perfect square");
  jq.e = *root;
  if (jq.e != n4 + 14 * n2 + 1)
    throw std::logic_error("jacobi_coeffs: e != n^4 + 14n^2 + 1");
  if (jq.d != -16 * n * jq.e)
    throw std::logic_error("jacobi_coeffs: d != -16n*e");
  return jq;
}

CurveSystem::CurveSystem(Int n) : n_(std::move(n)) {
  if (n_ < 2) throw std::domain_error("CurveSystem: n must be >= 2");
  const Int n2 = n_ * n_, n3 = n2 * n_, n4 = n3 * n_, n5 = n4 * n_;
  const Int n6 = n5 * n_, n7 = n6 * n_, n8 = n7 * n_, n9 = n8 * n_;
  const Int n10 = n9 * n_, n12 = n10 * n2;

  c4_ = 16 * n4;
  c3_ = -128 * n5;
  c2x_ = 320 * n6 - 32 * n8 - 32 * n4;
  c1x_ = 128 * n9 - 256 * n7 + 128 * n5;
  gamma_ = 16 * n12 - 64 * n10 + 96 * n8 - 64 * n6 + 16 * n4;
  cy2_ = -(16 * n6 + 16 * n2 - 32 * n4);
  cxxy_ = -64 * n4;
  cxy_ = 384 * n5 + 64 * n7 + 64 * n3;
  cy_ = -(192 * n8 + 640 * n6 + 192 * n4);

  qa_ = 64 * n4;
  qb_ = -(384 * n5 + 64 * n7 + 64 * n3);
  qc_ = 192 * n8 + 640 * n6 + 192 * n4;
  i_denom_ = 32 * (n3 - n_) * (n3 - n_);
  i_scale_ = make_rat((n2 - 1) * (n2 - 1), n_ * (n2 + 1));

  jq_ = jacobi_coeffs(n_);

  const Rat e(jq_.e), b(jq_.b), c(jq_.c), d(jq_.d), a(jq_.a);
  ew_.a1 = make_rat(jq_.d, jq_.e);
  ew_.a3 = 2 * e * b;
  ew_.a2 = c - make_rat(jq_.d * jq_.d, 4 * jq_.e * jq_.e);
  ew_.a4 = -4 * e * e * a;
  ew_.a6 = a * (d * d - 4 * e * e * c);

  ek_.A = ew_.a2 + ew_.a1 * ew_.a1 / 4;
  ek_.B = ew_.a4 + ew_.a1 * ew_.a3 / 2;
  ek_.C = ew_.a6 + ew_.a3 * ew_.a3 / 4;
  ek_.a = ek_.B - ek_.A * ek_.A / 3;
  ek_.b = (27 * ek_.C - 9 * ek_.A * ek_.B + 2 * ek_.A * ek_.A * ek_.A) / 27;
  for (Rat* r : {&ew_.a1, &ew_.a2, &ew_.a3, &ew_.a4, &ew_.a6, &ek_.A, &ek_.B,
                 &ek_.C, &ek_.a, &ek_.b})
    r->canonicalize();
}

Rat CurveSystem::rn_eval(const Rat& x, const Rat& y) const {
  Rat r = (((Rat(c4_) * x + c3_) * x + c2x_) * x + c1x_) * x + gamma_;
  r += y * ((Rat(cxxy_) * x + cxy_) * x + cy_);
  r += y * y * cy2_;
  r.canonicalize();
  return r;
}

Int CurveSystem::rn_eval(const Int& x, const Int& y) const {
  Int r = (((c4_ * x + c3_) * x + c2x_) * x + c1x_) * x + gamma_;
  r += y * ((cxxy_ * x + cxy_) * x + cy_);
  r += y * y * cy2_;
  return r;
}

Rat CurveSystem::rx_eval(const Rat& x) const {
  Rat r = (((Rat(c4_) * x + c3_) * x + c2x_) * x + c1x_) * x;
  r.canonicalize();
  return r;
}

Rat CurveSystem::rxy_eval(const Rat& x, const Rat& y) const {
  Rat r = y * ((Rat(cxxy_) * x + cxy_) * x + cy_) + y * y * cy2_;
  r.canonicalize();
  return r;
}

bool CurveSystem::jq_on_curve(const Rat& x, const Rat& z) const {
  const Rat rhs =
      (((Rat(jq_.a) * x + jq_.b) * x + jq_.c) * x + jq_.d) * x + jq_.e_squared();
  return z * z == rhs;
}

bool CurveSystem::ew_on_curve(const EwPoint& p) const {
  if (p.at_infinity) return true;
  const Rat lhs = p.y * p.y + ew_.a1 * p.x * p.y + ew_.a3 * p.y;
  const Rat rhs = p.x * p.x * p.x + ew_.a2 * p.x * p.x + ew_.a4 * p.x + ew_.a6;
  return lhs == rhs;
}

bool CurveSystem::ek_on_curve(const EkPoint& p) const {
  if (p.at_infinity) return true;
  return p.y * p.y == p.x * p.x * p.x + ek_.a * p.x + ek_.b;
}

JqPoint CurveSystem::map_I(const RnPoint& p) const {
  const Rat q_of_x = (Rat(qa_) * p.x + qb_) * p.x + qc_;
  Rat z = i_scale_ * (p.y + q_of_x / i_denom_);
  z.canonicalize();
  return JqPoint{p.x, z};
}

RnPoint CurveSystem::map_I_inv(const JqPoint& p) const {
  const Int n2 = n_ * n_;
  const Rat q_of_x = (Rat(qa_) * p.x + qb_) * p.x + qc_;
  Rat y = (32 * Rat(n_ * n2) * (n2 + 1) * p.z - q_of_x) / i_denom_;
  y.canonicalize();
  return RnPoint{p.x, y};
}

EwPoint CurveSystem::map_J(const JqPoint& p) const {
  const Rat e(jq_.e), c(jq_.c), d(jq_.d);
  if (p.x == 0) {
    if (p.z == e) return EwPoint::infinity();
    if (p.z == -e) return EwPoint{false, Rat(-2 * jq_.e), Rat(0)};
    throw std::domain_error("map_J: (0, Z) is not on the quartic");
  }
  Rat x = (2 * e * (p.z + e) + d * p.x) / (p.x * p.x);
  Rat y = (4 * e * e * (p.z + e) + 2 * e * (d * p.x + c * p.x * p.x) -
           d * d * p.x * p.x / (2 * e)) /
          (p.x * p.x * p.x);
  x.canonicalize();
  y.canonicalize();
  return EwPoint{false, x, y};
}

JqPoint CurveSystem::map_J_inv(const EwPoint& p) const {
  const Rat e(jq_.e), c(jq_.c), d(jq_.d);
  if (p.at_infinity) return JqPoint{Rat(0), e};
  if (p.y == 0)
    throw std::domain_error("map_J_inv: y = 0 lies outside the generic domain");
  Rat x = (2 * e * (p.x + c) - d * d / (2 * e)) / p.y;
  x.canonicalize();
  Rat z = -e + x * (x * p.x - d) / (2 * e);
  z.canonicalize();
  return JqPoint{x, z};
}

EkPoint CurveSystem::map_K(const EwPoint& p) const {
  if (p.at_infinity) return EkPoint::infinity();
  Rat x = p.x + ek_.A / 3;
  Rat y = p.y + (ew_.a1 * p.x + ew_.a3) / 2;
  x.canonicalize();
  y.canonicalize();
  return EkPoint{false, x, y};
}

EwPoint CurveSystem::map_K_inv(const EkPoint& p) const {
  if (p.at_infinity) return EwPoint::infinity();
  Rat x = p.x - ek_.A / 3;
  Rat y = p.y - (ew_.a1 * x + ew_.a3) / 2;
  x.canonicalize();
  y.canonicalize();
  return EwPoint{false, x, y};
}

EkPoint CurveSystem::two_torsion_point() const {
  Rat x = (-2 * ew_.a2 + ew_.a1 * ew_.a1 / 4) / 3;
  Rat y = (ew_.a1 * ew_.a2 - ew_.a3) / 2;
  x.canonicalize();
  y.canonicalize();
  return EkPoint{false, x, y};
}

std::vector<JqPoint> CurveSystem::rational_root_candidates() const {
  const Int& e = jq_.e;
  const Int n2 = n_ * n_, n4 = n2 * n2;
  const Int z_pos = (n4 + 14 * n2 - 8 * n_ + 2) * e;
  const Int z_neg = (n4 + 14 * n2 + 8 * n_ + 2) * e;
  std::vector<JqPoint> pts = {
      {Rat(e), Rat(z_pos)},  {Rat(e), Rat(-z_pos)},
      {Rat(-e), Rat(z_neg)}, {Rat(-e), Rat(-z_neg)},
  };
  for (const auto& p : pts)
    if (!jq_on_curve(p.x, p.z))
      throw std::logic_error("rational_root_candidates: point off the quartic");
  return pts;
}

bool CurveSystem::parabola_check(const Rat& x, const Rat& y) const {
  const Rat shift = x + (n_ - 1) * (n_ - 1);
  return y * (n_ + 1) * (n_ + 1) == n_ * shift * shift;
}

Int sylvester_discriminant(const Int& n) {
  const JacobiQuartic jq = jacobi_coeffs(n);
  const Int a = jq.a, b = jq.b, c = jq.c, d = jq.d, e2 = jq.e_squared();
  const Int z = 0;
  std::vector<std::vector<Int>> m = {
      {a, b, c, d, e2, z, z},
      {z, a, b, c, d, e2, z},
      {z, z, a, b, c, d, e2},
      {4 * a, 3 * b, 2 * c, d, z, z, z},
      {z, 4 * a, 3 * b, 2 * c, d, z, z},
      {z, z, 4 * a, 3 * b, 2 * c, d, z},
      {z, z, z, 4 * a, 3 * b, 2 * c, d},
  };
  // R(k, k') = (-1)^{deg(deg-1)/2} * a_deg * D with deg = 4 and a_deg = 1,
  // so D equals the determinant directly.
  return determinant(std::move(m));
}

std::string stage_name(ChainStage s) {
  switch (s) {
    case ChainStage::kRn: return "R_n";
    case ChainStage::kJq: return "J_Q";
    case ChainStage::kEw: return "E_w";
    case ChainStage::kEk: return "E_k";
  }
  return "?";
}

ChainTrace ChainTrace::forward(const CurveSystem& cs, const RnPoint& start) {
  ChainTrace trace;
  const JqPoint jq = cs.map_I(start);
  const EwPoint ew = cs.map_J(jq);
  const EkPoint ek = cs.map_K(ew);

  if (cs.map_I_inv(jq) != start)
    throw std::logic_error("ChainTrace: I roundtrip mismatch");
  if (!ew.at_infinity && ew.y != 0 && cs.map_J_inv(ew) != jq)
    throw std::logic_error("ChainTrace: J roundtrip mismatch");
  if (cs.map_K_inv(ek) != ew)
    throw std::logic_error("ChainTrace: K roundtrip mismatch");

  trace.entries.push_back({ChainStage::kRn, false, start.x, start.y});
  trace.entries.push_back({ChainStage::kJq, false, jq.x, jq.z});
  trace.entries.push_back({ChainStage::kEw, ew.at_infinity, ew.x, ew.y});
  trace.entries.push_back({ChainStage::kEk, ek.at_infinity, ek.x, ek.y});
  return trace;
}

}  // namespace hyperfact
