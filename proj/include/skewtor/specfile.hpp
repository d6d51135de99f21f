#pragma once

#include <string>

#include "skewtor/examples.hpp"

namespace skewtor {

// Line-oriented manifold description with sections [params], [algebra],
// [metric], [structure]; see the shipped examples/*.spec files.  Parse errors
// are InputError with a line reference; antisymmetry conflicts between
// explicit bracket statements are ValidationError naming (i,j,k).
ManifoldSpec parse_spec_text(const std::string& text, const std::string& origin);
ManifoldSpec parse_spec(const std::string& path);

// Canonical serialization; parse_spec_text(serialize_spec(s)) reproduces s
// field by field.
std::string serialize_spec(const ManifoldSpec& spec);
void write_spec(const ManifoldSpec& spec, const std::string& path);

}  // namespace skewtor
