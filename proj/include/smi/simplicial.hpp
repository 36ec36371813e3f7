#ifndef SMI_SIMPLICIAL_HPP
#define SMI_SIMPLICIAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace smi {

struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& w) : std::runtime_error(w) {}
};
struct ObjectMismatch : std::runtime_error {
  explicit ObjectMismatch(const std::string& w) : std::runtime_error(w) {}
};
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& w) : std::runtime_error(w) {}
};

// Arrow n -> m of the opposite topologists' simplicial category, stored as
// its representation among endpoint-preserving monotone maps: a weakly
// monotone image sequence on n+2 points with values in 0..m+1, fixing the
// first and the last point.
struct SimplexMap {
  int src = 0;
  int dst = 0;
  std::vector<int> image;  // length src + 2

  bool operator==(const SimplexMap& o) const = default;
  std::string str() const;
};

SimplexMap simplex_identity(int n);
// face d_i : n -> n-1 (merge of the adjacent pair i, i+1 in the
// representation); degeneracy s_i : n-1 -> n (skip of the point i+1).
SimplexMap gen_d(int n, int i);
SimplexMap gen_s(int n, int i);
SimplexMap compose_simplex(const SimplexMap& g, const SimplexMap& f);  // g after f
void validate(const SimplexMap& m);

// Order preserving partial function n -> m; -1 marks an undefined point.
struct PartialMonotoneMap {
  int src = 0;
  int dst = 0;
  std::vector<int> image;  // length src, values in 0..dst-1 or -1

  bool operator==(const PartialMonotoneMap& o) const = default;
  bool defined(int x) const { return image[x] >= 0; }
  std::string str() const;
};

enum class DeltapGen { Delta, Sigma, Rho };

PartialMonotoneMap deltap_identity(int n);
// delta_i : n -> n+1 skips the value i; sigma_i : n+1 -> n merges i, i+1;
// rho_i : n+1 -> n deletes the point i.
PartialMonotoneMap deltap_gen(DeltapGen kind, int n, int i);
PartialMonotoneMap compose_deltap(const PartialMonotoneMap& g, const PartialMonotoneMap& f);
void validate(const PartialMonotoneMap& m);

// The point-deleting functor: source points 0 and n+1 are omitted along
// with the extreme target points; evaluated by a closed form, with the
// composite of generators available as a cross-check.
PartialMonotoneMap hj(const SimplexMap& f);
PartialMonotoneMap hj_via_generators(const SimplexMap& f);

PartialMonotoneMap embed_total(const SimplexMap& f);  // as a partial map

enum class HomCat { Delta2, DeltaPlusOp };

// All maps n -> m of the chosen presentation (both enumerate the same
// representation; the guard keeps the search tame).
std::vector<SimplexMap> enumerate_homs(HomCat cat, int n, int m);

// Two-row diagram of a map: filled dots are defined / hit points, open dots
// are undefined sources or missed targets.  The header line carries the
// exact map so rendering round-trips through parse_rendered.
std::string render_ascii(const SimplexMap& m);
std::string render_ascii(const PartialMonotoneMap& m);
std::optional<SimplexMap> parse_rendered(const std::string& text);

}  // namespace smi

#endif
