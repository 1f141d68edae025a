#pragma once

#include <iosfwd>
#include <utility>

#include "latticeflaw/core.hpp"
#include "latticeflaw/enumeration.hpp"
#include "latticeflaw/report.hpp"

namespace latticeflaw {

// A pair of mutually inverse rearrangements: add_flaw sends a path with k
// flaws to one with k+1, remove_flaw undoes it. Each map classifies its
// input, cuts it into three segments at two canonical indices, and swaps
// the last two segments. Together they witness, path by path, that the
// count of k-flaw paths minus the reducible ones equals the count of
// (k+1)-flaw paths.
//
// Both classifications hinge on the split of the path at its last
// non-terminal boundary point into a prefix and a tail: the tail touches
// the line only at its ends.

// Where the rearrangement acts.
//  - TailPivot: the tail is rotated at its last highest-point-below; the
//    segment after that point moves before the segment ending at it. The
//    prefix is untouched. Adds exactly one flaw plus lifts the tail's
//    sub-boundary contacts; net effect is +1 on the whole path.
//  - PrefixPivot: the prefix is cut at its last lowest-point-above and the
//    whole tail moves in between the two prefix pieces. Chosen exactly
//    when the prefix has a flaw and its lowest-above elevation is smaller
//    in magnitude than the tail's highest-below elevation (vacuously when
//    the tail never dips below).
enum class PivotClass { TailPivot, PrefixPivot };

std::string to_string(PivotClass cls);

// A classified path cut into the three segments the rearrangement swaps:
// split.parts = {left, middle, right} and the image is left+right+middle.
struct CanonicalSplit {
  PivotClass cls = PivotClass::TailPivot;
  SplitDecomposition split;
};

// The prefix/tail split. The prefix may be empty (when the only
// non-terminal boundary point is the startpoint, the tail is the whole
// path); the tail is never empty.
std::pair<LatticePath, LatticePath> split_at_last_nonterminal_boundary(
    const BoundarySpec& spec, const LatticePath& path);

// Classifies a path the flaw-raising map accepts. Throws std::domain_error
// for max-flaw paths (nothing left to raise) and for reducible paths (set
// aside so the raised counts match).
CanonicalSplit classify_domain(const BoundarySpec& spec,
                               const LatticePath& path);

// Classifies a path the flaw-lowering map accepts: PrefixPivot when the
// path has at least two lowest-points-above and no boundary point strictly
// between the last two, TailPivot otherwise. Throws std::domain_error for
// flawless paths.
CanonicalSplit classify_codomain(const BoundarySpec& spec,
                                 const LatticePath& path);

// The rearrangements themselves. add_flaw(p) has exactly one more flaw
// than p; remove_flaw exactly one fewer; they are mutually inverse and
// preserve the step multiset.
LatticePath add_flaw(const BoundarySpec& spec, const LatticePath& path);
LatticePath remove_flaw(const BoundarySpec& spec, const LatticePath& path);

struct BijectionVerifyOptions {
  long long cap = kDefaultEnumerationCap;
  // When set, one JSON line per forward application:
  // {"input","class","split_indices","output"}.
  std::ostream* trace = nullptr;
};

// Exhaustively checks, for every flaw level k below the maximum:
//  - classify_domain accepts exactly the non-reducible, non-max paths;
//  - add_flaw raises the flaw count by exactly one and preserves steps;
//  - images are distinct and exactly fill the (k+1)-flaw level;
//  - remove_flaw returns to the original path, and the reverse direction
//    add_flaw(remove_flaw(q)) == q holds for every q with k+1 flaws;
//  - forward and backward classifications agree (TailPivot images are
//    classified TailPivot, PrefixPivot likewise), and the class counts
//    match across the two sides;
//  - after a TailPivot the rearranged tail touches the line only at its
//    start.
// Details of failing items carry counterexample paths.
CheckReport verify_bijection(const BoundarySpec& spec,
                             const BijectionVerifyOptions& options = {});

}  // namespace latticeflaw
