#ifndef SMI_DECISION_HPP
#define SMI_DECISION_HPP

#include <optional>
#include <variant>

#include "smi/sai.hpp"
#include "smi/starrow.hpp"
#include "smi/unitnorm.hpp"

namespace smi {

// Outcome of the decision layer: a canonical representative, a proof of
// absence, or endpoints outside the decidable fragment.
enum class CanonStatus { Some, None, Undecided };

struct CanonResult {
  CanonStatus status;
  std::optional<StTerm> term;  // set when status == Some
};

// The canonical arrow a -> b when both endpoints are letterless or both are
// pure and diversified.  None is returned exactly when no arrow exists
// (letter mismatch, purity obstruction, or the unit-free skeletons are not
// connected); Undecided when the endpoints leave the decidable fragment.
CanonResult canonical_arrow(const StrictObject& a, const StrictObject& b);

enum class EqualStatus { EqualByCoherence, NotParallel, Unknown };

struct EqualReport {
  EqualStatus status;
  std::string reason;
};

// Equality of parallel arrows by coherence: decided positively when the
// shared endpoints are letterless or pure and diversified.
EqualReport equal_arrows(const StTerm& f, const StTerm& g);

// Unit-free commutative skeleton of a strict term with pure endpoints:
// unit_reduce followed by the erasure of symmetries.  Test support for
// comparing decorated arrows with their unit-free counterparts.
SaiTerm sai_skeleton(const StTerm& t);

}  // namespace smi

#endif
