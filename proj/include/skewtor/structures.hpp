#pragma once

#include "skewtor/connection.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace skewtor {

// Almost complex structure J with g(Jx,Jy) = -g(x,y) (anti-isometry), J^2 = -I.
struct NordenStructure {
  Tensor J;  // (1,1), rational constant entries

  bool operator==(const NordenStructure& o) const { return J == o.J; }
};

// Almost contact structure (phi, xi, eta) with a B-metric:
// phi^2 = -I + eta (x) xi, g(phi x, phi y) = -g(x,y) + eta(x) eta(y).
struct ContactBStructure {
  Tensor phi;  // (1,1)
  Tensor xi;   // (1,0)
  Tensor eta;  // (0,1)

  bool operator==(const ContactBStructure& o) const {
    return phi == o.phi && xi == o.xi && eta == o.eta;
  }
};

// Almost hypercomplex triple with metric compatibilities
// g(x,y) = eps_a g(J_a x, J_a y), eps = (1,-1,-1): Hermitian for J_1 and
// anti-Hermitian (Norden) for J_2, J_3.
struct HyperStructure {
  std::array<Tensor, 3> J;  // (1,1) each

  bool operator==(const HyperStructure& o) const { return J == o.J; }
};

inline constexpr std::array<int, 3> kEpsilon{1, -1, -1};

using StructurePack = std::variant<NordenStructure, ContactBStructure, HyperStructure>;

struct ValidationItem {
  std::string name;
  bool ok = false;
  std::string witness;  // index tuple / residual when not ok
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool pass() const;
};

// Checks every structure axiom exactly and reports each as an item.
// Throws ValidationError when the frame dimension does not fit the structure
// kind (Norden: even; ContactB: odd; Hyper: divisible by 4).
ValidationReport validate_structure(const LieFrame& f, const StructurePack& s);

// Constant matrix Op^m_j (row m, column j) of a (1,1) tensor; throws when an
// entry is not a rational constant.
RationalMatrix endo_matrix(const Tensor& op);

// Constant coefficient vector of a rank-1 tensor (either kind).
std::vector<Rational> coefficient_vector(const Tensor& v);

// F(x,y,z) = g((nabla_x Op) y, z) for an endomorphism Op (J, phi or J_a);
// conn must be the Levi-Civita connection of the frame.
Tensor fundamental_from_op(const Connection& conn, const Tensor& op);

// The fundamental tensors of the pack: one tensor for Norden/ContactB,
// three (F_1, F_2, F_3) for Hyper.
std::vector<Tensor> fundamental_tensor(const LieFrame& f, const Connection& conn,
                                       const StructurePack& s);

struct ClassReport {
  // flag name -> exact polynomial-identity verdict, in fixed report order
  std::vector<std::pair<std::string, bool>> flags;
  bool flag(const std::string& name) const;
};

// Class-membership predicates:
//   Norden:   W0 (F = 0), W3 (cyclic sum of F vanishes)
//   ContactB: F0, F3, F7, F3+F7 (cyclic sum), xi-Killing
//   Hyper:    G1(J1), NK(J1), W3(J2), W3(J3), W133
ClassReport classify(const LieFrame& f, const Connection& conn, const StructurePack& s);

enum class NijenhuisMode { Complex, Contact };

// Complex mode (Norden pack):
//   N(x,y) = (nabla_x J)Jy - (nabla_y J)Jx + (nabla_{Jx} J)y - (nabla_{Jy} J)x.
// Contact mode (ContactB pack):
//   N(x,y) = [phi,phi](x,y) + d eta(x,y) xi, with
//   [phi,phi](x,y) = phi^2 [x,y] + [phi x, phi y] - phi[phi x, y] - phi[x, phi y]
//   and d eta(x,y) = -eta([x,y]).
Tensor nijenhuis(const LieFrame& f, const Connection& conn, const StructurePack& s,
                 NijenhuisMode mode);

// True iff g(nabla_{e_i} v, e_j) + g(e_i, nabla_{e_j} v) = 0 identically.
bool killing_check(const LieFrame& f, const Connection& conn, const Tensor& v);

// Square norm of a lowered gradient tensor (nabla J, nabla phi, T, ...);
// its vanishing as a polynomial is the isotropy condition.
struct IsotropyResult {
  Scalar norm;              // the polynomial whose zero set is the isotropy locus
  bool identically_zero;    // norm == 0 as a polynomial
};
IsotropyResult isotropy(const MetricData& m, const Tensor& grad3);

}  // namespace skewtor
