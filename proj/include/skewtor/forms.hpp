#pragma once

#include "skewtor/connection.hpp"

namespace skewtor {

// Exterior derivative of an invariant p-form by the frame formula
//   d w(x_0,..,x_p) = sum_{a<b} (-1)^{a+b} w([x_a,x_b], x_0,..,^x_a,..,^x_b,..,x_p).
// Precondition: w fully covariant and skew; throws Error otherwise.
Tensor exterior_derivative(const LieFrame& f, const Tensor& w);

// Codifferential of an invariant 3-form with respect to the Levi-Civita
// connection: (delta T)(y,z) = -g^{ij} (nabla_{e_i} T)(e_j, y, z).
// Precondition: T (0,3) skew; conn is the Levi-Civita connection of f.
Tensor codifferential_3form(const LieFrame& f, const Connection& conn, const Tensor& t3);

// Full metric contraction of a fully covariant tensor with itself:
// for (0,3), g^{ij} g^{ks} g^{lt} S_{ikl} S_{jst}.  Works for any (0,k).
Scalar square_norm(const MetricData& m, const Tensor& s);

}  // namespace skewtor
