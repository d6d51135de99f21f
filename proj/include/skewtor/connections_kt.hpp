#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "skewtor/connection.hpp"
#include "skewtor/frame.hpp"
#include "skewtor/structures.hpp"
#include "skewtor/tensor.hpp"

namespace skewtor {

// A connection together with its torsion in both valences.
// t3 is the fully lowered (0,3) torsion; t12 is t3 with the last slot raised.
struct TorsionPack {
  Tensor t3;
  Tensor t12;
  Connection conn;
};

struct CurvatureReport {
  Tensor r4;     // (0,4) curvature of the pack's connection
  Tensor ricci;  // contraction of first and last slots
  Scalar tau;
  std::vector<std::pair<std::string, bool>> flags;
};

// The metric as a (0,2) tensor with constant components.
Tensor metric_tensor(const LieFrame& f);

// Gamma' = Gamma + 1/2 * t3 with its last slot raised.
Connection connection_from_torsion(const Connection& lc, const Tensor& t3);

// Checks that the connection annihilates every structure tensor of the pack
// and the metric; one item per tensor.
std::vector<ValidationItem> naturality_check(const LieFrame& f, const StructurePack& s,
                                             const Connection& conn);

// Metric connection with totally skew torsion on a quasi-Kaehler Norden pack:
// T(x,y,z) = -1/2 { F(x,y,Jz) + F(y,z,Jx) + F(z,x,Jy) }.
// Throws ClassViolation when the cyclic sum of F does not vanish.
TorsionPack kt_build(const LieFrame& f, const NordenStructure& s);

struct PhiKTBuild {
  TorsionPack pack;
  // Connection coefficients from the direct D formula; must equal
  // pack.conn.gamma (the torsion route) identically.
  Tensor d_explicit;
  // Specialized torsion formula valid on the vertical class:
  // T(x,y) = 2{ eta(x) grad_y xi - eta(y) grad_x xi + (grad_x eta)(y) xi }, lowered.
  Tensor t_closed_form;
};

// Torsion route: T(x,y,z) = -1/2 S_{xyz} { F(x,y,phi z) - 3 eta(x) F(y,phi z,xi) }.
// Precondition: cyclic sum of F vanishes.  Both construction routes are
// computed and compared; disagreement is an internal error.
PhiKTBuild phikt_build(const LieFrame& f, const ContactBStructure& s);

struct PHKTBuild {
  TorsionPack pack;  // the distinguished connection D
  Connection d1;     // g(D1_x y,z) = g(LC_x y,z) + 1/2 F1(x,y,J1 z)
  Connection d2;     // g(D2_x y,z) = g(LC_x y,z) - 1/4 S_{xyz} F2(x,y,J2 z)
  Connection d3;     // likewise with F3, J3
};

// Precondition: the W133 class flag (nearly-Kaehler for J1, vanishing cyclic
// sums for J2 and J3); the flat case is contained in it.
PHKTBuild phkt_build(const LieFrame& f, const HyperStructure& s);

CurvatureReport connection_curvature(const TorsionPack& tp);

// Four exact identities: antisymmetry in (1,2) and (3,4), the first Bianchi
// identity, and L(x,y,Op z,Op w) = -L(x,y,z,w).
struct KaehlerBreakdown {
  bool antisym_12 = false;
  bool antisym_34 = false;
  bool bianchi = false;
  bool op_line = false;
  std::string witness;
  bool all() const { return antisym_12 && antisym_34 && bianchi && op_line; }
};

KaehlerBreakdown kaehler_tensor_breakdown(const Tensor& l4, const Tensor& op);
bool kaehler_tensor_check(const Tensor& l4, const Tensor& op);

// Equivalence report for the curvature of the skew-torsion connection on a
// quasi-Kaehler Norden pack: the predicate and the two residual conditions
// must be simultaneously true or simultaneously false.
struct Thm21Report {
  bool kaehler = false;
  bool residual_ii_zero = false;
  bool residual_iii_zero = false;
  std::string witness;
  bool consistent() const {
    return kaehler == residual_ii_zero && kaehler == residual_iii_zero;
  }
};

Thm21Report thm21_checks(const LieFrame& f, const NordenStructure& s, const TorsionPack& tp,
                         const CurvatureReport& cr);

struct ScalarRelationReport {
  bool kaehler = false;        // predicate branch trigger
  bool parallel_own = false;   // own-connection parallel-torsion branch trigger
  bool rel_kaehler_ok = true;  // 3|grad J|^2 = 8(tau' - tau) when triggered
  bool rel_parallel_ok = true; // |grad J|^2 = 8(tau - tau') when triggered
  bool rel_both_ok = true;     // |grad J|^2 = 0 when both trigger
  Scalar norm_grad_j;
  Scalar tau_lc;
  Scalar tau_conn;
  bool pass() const { return rel_kaehler_ok && rel_parallel_ok && rel_both_ok; }
};

ScalarRelationReport scalar_relation_checks(const LieFrame& f, const NordenStructure& s,
                                            const TorsionPack& tp, const CurvatureReport& cr);

// Vertical-class curvature theorems for the skew-torsion connection D on an
// almost contact B-metric pack.
struct PhiCurvatureReport {
  bool f7 = false;
  bool predicate = false;     // phi-Kaehler predicate on K
  bool closed1_zero = false;  // K equals the first closed form
  bool equiv_ok = false;      // predicate <=> closed1_zero
  bool dt_zero = false;       // D T = 0
  bool closed2_zero = false;  // K equals the parallel-torsion closed form
  bool ricci_match = false;   // rho(K) = rho
  bool tau_match = false;     // tau(K) = tau
  std::string witness;
};

PhiCurvatureReport phi_curvature_checks(const LieFrame& f, const ContactBStructure& s,
                                        const TorsionPack& tp, const CurvatureReport& cr);

// A_alpha(x,y,z,w) = g((grad_x J_alpha) y, (grad_z J_alpha) w) with the
// Levi-Civita connection.
Tensor w133_a_alpha(const Connection& lc, const Tensor& j_alpha);

// Residual of  R(x,y,z,w) + sum_a R(x,y,J_a z,J_a w)
//            = sum_a { A_a(x,z,y,w) - A_a(y,z,x,w) }
// evaluated on an explicitly supplied (0,4) tensor in place of R.
Tensor w133_identity_residual(const LieFrame& f, const HyperStructure& s, const Connection& lc,
                              const Tensor& r4);

// Residual of  K = R + 1/4 A_1 + 1/4 S_{xyz} A_1.
Tensor w133_kr_residual(const LieFrame& f, const HyperStructure& s, const Connection& lc,
                        const Tensor& k4, const Tensor& r4);

struct W133Report {
  bool identity_zero = false;
  bool kr_zero = false;
  bool strong = false;       // d T = 0
  bool parallel_lc = false;  // Levi-Civita-parallel torsion
  bool flat_k = false;       // K = 0
  bool triple_equal = false;
  bool r_zero = false;
  std::array<bool, 3> grad_norm_zero{false, false, false};
  bool torsion_norm_zero = false;
  std::string witness;
};

W133Report w133_checks(const LieFrame& f, const HyperStructure& s, const Connection& lc,
                       const PHKTBuild& b);

struct TorsionFlags {
  bool parallel_own = false;
  bool parallel_lc = false;
  bool strong = false;
  bool coclosed = false;
  bool isotropic = false;
};

TorsionFlags torsion_analysis(const LieFrame& f, const Connection& lc, const TorsionPack& tp);

}  // namespace skewtor
