// Jordan-block algebra for tempered representations and packets: parity of
// blocks against the dual group, extended cuspidal supports, reducibility
// points, Jacquet-module feasibility, and the block lowering/raising maps.
#pragma once

#include "parind/segcalc.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace parind {

struct JordanBlock {
    SymbolId rho;
    int a = 1;
    auto operator<=>(const JordanBlock&) const = default;
};

using BlockMultiset = std::map<JordanBlock, int>;

// Multiset of blocks (rho,a) attached to a group space. Always closed under
// contragredient with equal multiplicities, and the total weight
// sum of a*d_rho matches the dual dimension of the group.
class JordanSet {
public:
    static JordanSet make(GroupSpace group, BlockMultiset blocks, const Universe& u);

    const GroupSpace& group() const { return group_; }
    const BlockMultiset& blocks() const { return blocks_; }
    int multiplicity(const JordanBlock& b) const;
    bool contains(const JordanBlock& b) const { return multiplicity(b) > 0; }
    bool empty() const { return blocks_.empty(); }

    bool operator==(const JordanSet&) const = default;

private:
    JordanSet() = default;
    GroupSpace group_;
    BlockMultiset blocks_;
};

// Multiset of cuspidal points, stored sorted. Stable under
// rho^x -> dual(rho)^{-x} whenever produced by the operations below.
struct ExtendedSupport {
    std::vector<CuspidalPoint> points; // sorted

    bool operator==(const ExtendedSupport&) const = default;
    bool dual_closed(const Universe& u) const;
};

// Whether the parameter of St(rho,a) lands in a classical group of the same
// type as the dual group of g. Always false for non-self-dual rho.
bool good_parity(SymbolId rho, int a, const GroupSpace& g, const Universe& u);

// Discrete series <=> every block has good parity and multiplicity 1.
bool is_discrete_series(const JordanSet& j, const Universe& u);

// Union over blocks (rho,a) of { rho^x : x in [(a-1)/2, -(a-1)/2] }.
ExtendedSupport extended_support_tempered(const JordanSet& j, const Universe& u);

// Extended support of (x_i segs_i) x pi: the tempered support of j joined with
// the ordinary supports of each segment and its contragredient.
ExtendedSupport extended_support_induced(std::span<const Segment> segs, const JordanSet& j,
                                         const Universe& u);

// Block update when a tempered representation embeds in <e,f>_rho x pi'
// (requires e >= 0 >= f): self-dual rho with half-integer endpoints adds
// (rho,2e+1),(rho,-2f+1); non-self-dual rho with e = -f adds
// (rho,2e+1),(dual rho,2e+1); anything else is incompatible (nullopt).
std::optional<JordanSet> jord_update_from_segment(const Segment& seg, const JordanSet& j,
                                                  const Universe& u);

// Membership in RP(pi), the set of possible reducibility points.
bool rp_contains(SymbolId rho, const Rat& x, const JordanSet& j, const Universe& u);

// Necessary condition for a nonzero Jacquet module along m copies of
// rho|.|^x with x > 0: x half-integer and mult(rho,2x+1) >= m.
bool jacquet_const_necessary(SymbolId rho, const Rat& x, int m, const JordanSet& j,
                             const Universe& u);

// Shuffle feasibility of a cuspidal exponent sequence against j, decided by
// exhaustive backtracking over per-block-copy prefix choices.
bool jacquet_feasible(std::span<const CuspidalPoint> points, const JordanSet& j,
                      const Universe& u);

// Replaces all copies of (rho,a) by (rho,a-2), deleting them when a = 2; the
// group shrinks by 2*m*d_rho. Requires (rho,a) in j and a >= 2.
JordanSet lower_blocks(SymbolId rho, int a, const JordanSet& j, const Universe& u);

// Inverse direction: replaces m copies of (rho,2x-1) by (rho,2x+1); at
// x = 1/2 the (rho,0) blocks are created from nothing. Requires x > 0
// half-integer and enough copies available.
JordanSet raise_blocks(SymbolId rho, const Rat& x, int m, const JordanSet& j, const Universe& u);

} // namespace parind
