#pragma once

#include <map>
#include <string>

#include "skewtor/frame.hpp"
#include "skewtor/structures.hpp"

namespace skewtor {

// A frame together with its structure pack and optional parameter bindings.
// The frame stays symbolic; bindings are applied on demand.
struct ManifoldSpec {
  std::string name;
  LieFrame frame;
  StructurePack pack;
  std::string note;
  std::map<std::string, Rational> bindings;
};

// Four-dimensional Lie group with a symbolic four-parameter bracket table,
// Norden pack, metric diag(+,+,-,-).
ManifoldSpec build_example_4d();

// Five-dimensional Lie group with parameters l1..l4, m1, m2, almost contact
// B-metric pack, metric diag(+,+,-,-,+).
ManifoldSpec build_example_5d();

// Abelian 4k-dimensional frame with the standard hypercomplex triple acting
// blockwise and metric diag(+,+,-,-) per quadruple.  Requires k >= 2; throws
// InputError otherwise.
ManifoldSpec build_flat_hyper(int k);

// Resolves a binding map keyed by (possibly unicode) parameter names to global
// ids; throws InputError for names not declared by the frame.
std::map<int, Rational> resolve_bindings(const LieFrame& f,
                                         const std::map<std::string, Rational>& named);

// Applies spec.bindings plus `extra` to every symbolic entry; the result's
// frame keeps only the still-unbound parameters.
ManifoldSpec bind_params(const ManifoldSpec& spec, const std::map<std::string, Rational>& extra);

// True when the spec is, up to positional renaming of its parameters, the same
// frame-and-pack as the reference (structure constants, metric, structure
// tensors all equal).
bool same_family(const ManifoldSpec& spec, const ManifoldSpec& reference);

}  // namespace skewtor
