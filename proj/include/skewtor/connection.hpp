#pragma once

#include "skewtor/frame.hpp"

namespace skewtor {

// Affine connection in a frame: nabla_{X_i} X_j = Gamma^k_{ij} X_k.  Whether a
// given instance is metric-compatible or torsion-free is a property of its
// construction, not of the type.
struct Connection {
  LieFrame frame;
  // kinds (Contra, Cov, Cov); gamma.at({k, i, j}) = Gamma^k_{ij}.
  Tensor gamma;

  bool operator==(const Connection& o) const { return frame == o.frame && gamma == o.gamma; }
};

// Levi-Civita connection of the frame metric by the Koszul formula for
// left-invariant fields:
//   2 g(nabla_{X_i} X_j, X_k) = g([X_i,X_j],X_k) - g([X_j,X_k],X_i) + g([X_k,X_i],X_j).
// Precondition: jacobi_check(f); throws ValidationError otherwise.
Connection levi_civita(const LieFrame& f);

// Covariant derivative of an invariant tensor.  The result gains one covariant
// slot, inserted before the first existing covariant slot (or appended if the
// input has none); that new slot is the direction of differentiation.
// Component functions are constant in the frame, so only the connection terms
// contribute: +Gamma on contravariant slots, -Gamma on covariant slots.
Tensor covariant_derivative(const Connection& conn, const Tensor& t);

// Torsion T^k_{ij} = Gamma^k_{ij} - Gamma^k_{ji} - c^k_{ij}, kinds (Contra, Cov, Cov).
Tensor torsion_of(const Connection& conn);

// Curvature (0,4) tensor of the connection:
//   R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z,
//   R(x,y,z,w) = g(R(x,y)z, w);  slots (x, y, z, w).
Tensor curvature(const Connection& conn);

// Ricci tensor rho(y,z) = g^{ij} R(e_i, y, z, e_j) and scalar curvature
// tau = g^{jk} rho(e_j, e_k).
struct RicciScalar {
  Tensor rho;  // (0,2)
  Scalar tau;
};
RicciScalar ricci_scalar(const Tensor& r4, const MetricData& m);

}  // namespace skewtor
