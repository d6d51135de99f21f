#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewtor/examples.hpp"

namespace skewtor {

// Outcome levels for a registry entry, ordered by strength of the evidence.
enum class VerifyStatus {
  ProvedSymbolically,  // residual vanishes identically in the free parameters
  HoldsAtPoints,       // checked at sampled rational points only
  Failed,              // counterexample found; witness is mandatory
  Vacuous,             // the entry's hypotheses do not apply to this input
};

std::string verify_status_name(VerifyStatus s);

struct VerificationResult {
  std::string id;
  VerifyStatus status = VerifyStatus::Vacuous;
  std::string claim;    // the mathematical statement being checked
  std::string detail;   // evidence: point counts, trigger counts, reasons
  std::string witness;  // counterexample data when status == Failed
  long long micros = 0;
};

// The fixed list of verifiable statements, in canonical order.
std::vector<std::string> registry_ids();

// Runs one registry entry (or all of them for id == "all") against a spec.
// Bindings carried by the spec are applied before any point evaluation;
// symbolic checks run over whatever parameters remain free.  Unknown ids
// throw InputError.
std::vector<VerificationResult> verify(const ManifoldSpec& spec,
                                       const std::string& id,
                                       std::uint64_t seed);

}  // namespace skewtor
