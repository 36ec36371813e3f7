#ifndef SMI_UNITNORM_HPP
#define SMI_UNITNORM_HPP

#include <optional>

#include "smi/starrow.hpp"

namespace smi {

struct NotLetterless : std::runtime_error {
  NotLetterless() : std::runtime_error("a letter occurs in a letterless-only context") {}
};
struct NotPure : std::runtime_error {
  explicit NotPure(const std::string& w) : std::runtime_error(w) {}
};

// Directed unit elimination i_A : A -> strict_nu(A), built from w_or_fw and
// w_and_fw at the innermost-leftmost redex first.  Identity when A is
// already reduced.  The inverse is st_invert(unit_iso(A)).
StTerm unit_iso(const StrictObject& a);

// The canonical arrow between letterless objects: conjugation of the
// identity or of kappa by the unit isomorphisms.  nullopt when the only
// candidate would run from top to bot.  Throws NotLetterless.
std::optional<StTerm> letterless_arrow(const StrictObject& a, const StrictObject& b);

// Rewrites f : A -> B with pure endpoints into f' : nu(A) -> nu(B) in which
// no unit occurs in any generator index and no w or kappa generator remains.
// Works factor by factor on the developed term: unit-indexed symmetry, w,
// kappa and degenerate-ck heads vanish under nu, the remaining heads get
// nu-reduced indices.
StTerm unit_reduce(const StTerm& f);

}  // namespace smi

#endif
