#include "parind/jordan.hpp"

#include <algorithm>
#include <set>

namespace parind {

JordanSet JordanSet::make(GroupSpace group, BlockMultiset blocks, const Universe& u) {
    group.validate();
    long long weight = 0;
    for (const auto& [block, mult] : blocks) {
        if (block.a < 1)
            throw ValidationError("Jordan block (" + u.name(block.rho) + "," +
                                  std::to_string(block.a) + "): a must be >= 1");
        if (mult < 1)
            throw ValidationError("Jordan block multiplicities must be >= 1");
        weight += static_cast<long long>(mult) * block.a * u.dim(block.rho);
        JordanBlock dual{u.dual(block.rho), block.a};
        auto it = blocks.find(dual);
        int dual_mult = it == blocks.end() ? 0 : it->second;
        if (dual_mult != mult)
            throw ValidationError("Jordan set not closed under contragredient at (" +
                                  u.name(block.rho) + "," + std::to_string(block.a) + ")");
    }
    if (weight != group.dual_dim())
        throw ValidationError("Jordan set weight " + std::to_string(weight) +
                              " does not match dual dimension " +
                              std::to_string(group.dual_dim()));
    JordanSet j;
    j.group_ = std::move(group);
    j.blocks_ = std::move(blocks);
    return j;
}

int JordanSet::multiplicity(const JordanBlock& b) const {
    auto it = blocks_.find(b);
    return it == blocks_.end() ? 0 : it->second;
}

bool ExtendedSupport::dual_closed(const Universe& u) const {
    std::vector<CuspidalPoint> dualized;
    dualized.reserve(points.size());
    for (const auto& p : points)
        dualized.push_back({u.dual(p.rho), -p.x});
    std::sort(dualized.begin(), dualized.end());
    return dualized == points;
}

bool good_parity(SymbolId rho, int a, const GroupSpace& g, const Universe& u) {
    if (a < 1)
        throw DomainError("good_parity: a must be >= 1");
    const auto type = u.at(rho).selfdual;
    if (type == SelfDualType::NotSelfDual)
        return false;
    // Tensor rule: the a-dimensional SL(2) factor is symplectic for even a,
    // orthogonal for odd a; mixed types multiply to symplectic.
    bool st_symplectic = (type == SelfDualType::Symplectic) != (a % 2 == 0);
    bool need_symplectic = g.kind == GroupKind::OddSpecialOrthogonal;
    return st_symplectic == need_symplectic;
}

bool is_discrete_series(const JordanSet& j, const Universe& u) {
    for (const auto& [block, mult] : j.blocks())
        if (mult != 1 || !good_parity(block.rho, block.a, j.group(), u))
            return false;
    return true;
}

ExtendedSupport extended_support_tempered(const JordanSet& j, const Universe&) {
    ExtendedSupport support;
    for (const auto& [block, mult] : j.blocks()) {
        Rat top(block.a - 1, 2);
        for (int copy = 0; copy < mult; ++copy)
            for (Rat x = top; x >= -top; x -= Rat(1))
                support.points.push_back({block.rho, x});
    }
    std::sort(support.points.begin(), support.points.end());
    return support;
}

ExtendedSupport extended_support_induced(std::span<const Segment> segs, const JordanSet& j,
                                         const Universe& u) {
    ExtendedSupport support = extended_support_tempered(j, u);
    for (const Segment& s : segs) {
        for (const auto& p : segment_set(s))
            support.points.push_back(p);
        for (const auto& p : segment_set(contragredient_segment(s, u)))
            support.points.push_back(p);
    }
    std::sort(support.points.begin(), support.points.end());
    return support;
}

namespace {

GroupSpace resized(GroupSpace g, int delta) {
    g.dim += delta;
    g.validate();
    return g;
}

} // namespace

std::optional<JordanSet> jord_update_from_segment(const Segment& seg, const JordanSet& j,
                                                  const Universe& u) {
    if (!(seg.e() >= Rat(0) && Rat(0) >= seg.f()))
        throw DomainError("jord_update_from_segment requires a segment with e >= 0 >= f");
    BlockMultiset blocks = j.blocks();
    if (u.selfdual(seg.rho()) && is_half_integer(seg.e())) {
        int up = static_cast<int>(twice(seg.e())) + 1;
        int down = static_cast<int>(-twice(seg.f())) + 1;
        blocks[{seg.rho(), up}] += 1;
        blocks[{seg.rho(), down}] += 1;
    } else if (!u.selfdual(seg.rho()) && seg.e() == -seg.f()) {
        int a = static_cast<int>(twice(seg.e())) + 1;
        blocks[{seg.rho(), a}] += 1;
        blocks[{u.dual(seg.rho()), a}] += 1;
    } else {
        return std::nullopt;
    }
    int delta = static_cast<int>(2 * seg.length()) * u.dim(seg.rho());
    return JordanSet::make(resized(j.group(), delta), std::move(blocks), u);
}

bool rp_contains(SymbolId rho, const Rat& x, const JordanSet& j, const Universe& u) {
    if (!u.selfdual(rho))
        return false;
    if (x == Rat(0))
        return good_parity(rho, 1, j.group(), u) && !j.contains({rho, 1});
    if (!is_half_integer(x))
        return false;
    Rat ax = abs(x);
    if (ax == Rat(1, 2))
        return good_parity(rho, 2, j.group(), u);
    if (ax >= Rat(1))
        return j.contains({rho, static_cast<int>(twice(ax)) - 1});
    return false;
}

bool jacquet_const_necessary(SymbolId rho, const Rat& x, int m, const JordanSet& j,
                             const Universe&) {
    if (x <= Rat(0) || m < 1)
        throw DomainError("jacquet_const_necessary requires x > 0 and m >= 1");
    if (!is_half_integer(x))
        return false;
    return j.multiplicity({rho, static_cast<int>(twice(x)) + 1}) >= m;
}

namespace {

// One block copy (rho,a) contributes a forced run of exponents in each
// direction: forward runs start at (a-1)/2 and decrease, reversed-dual runs
// start at -(a-1)/2 and increase. A copy may supply lf forward and lb
// backward elements subject to lf + lb <= a.
struct BlockCopy {
    SymbolId rho;
    int a;
    Rat top; // (a-1)/2
};

// All length vectors (one entry per copy, canonicalized inside groups of
// identical copies) realizing `target` as an interleaving of the forced runs.
void enumerate_shuffles(const std::vector<BlockCopy>& copies,
                        const std::vector<CuspidalPoint>& target, bool forward,
                        std::set<std::vector<int>>& out) {
    std::vector<int> lens(copies.size(), 0);
    std::set<std::vector<int>> seen;

    auto canonical = [&](std::vector<int> v) {
        // identical copies are interchangeable; sort lengths inside each group
        std::size_t i = 0;
        while (i < v.size()) {
            std::size_t k = i + 1;
            while (k < v.size() && copies[k].rho == copies[i].rho && copies[k].a == copies[i].a)
                ++k;
            std::sort(v.begin() + i, v.begin() + k);
            i = k;
        }
        return v;
    };

    auto next_exponent = [&](std::size_t i) {
        return forward ? copies[i].top - Rat(lens[i]) : -copies[i].top + Rat(lens[i]);
    };

    auto dfs = [&](auto&& self, std::size_t pos) -> void {
        if (!seen.insert(lens).second)
            return;
        if (pos == target.size()) {
            out.insert(canonical(lens));
            return;
        }
        for (std::size_t i = 0; i < copies.size(); ++i) {
            if (lens[i] >= copies[i].a)
                continue;
            // skip duplicates: only the first copy of a group at this length
            bool dup = false;
            for (std::size_t k = 0; k < i; ++k)
                if (copies[k].rho == copies[i].rho && copies[k].a == copies[i].a &&
                    lens[k] == lens[i]) {
                    dup = true;
                    break;
                }
            if (dup)
                continue;
            if (copies[i].rho == target[pos].rho && next_exponent(i) == target[pos].x) {
                ++lens[i];
                self(self, pos + 1);
                --lens[i];
            }
        }
    };
    dfs(dfs, 0);
}

} // namespace

bool jacquet_feasible(std::span<const CuspidalPoint> points, const JordanSet& j,
                      const Universe& u) {
    std::vector<BlockCopy> copies;
    for (const auto& [block, mult] : j.blocks())
        for (int c = 0; c < mult; ++c)
            copies.push_back({block.rho, block.a, Rat(block.a - 1, 2)});

    std::vector<CuspidalPoint> forward(points.begin(), points.end());
    // Reversed dual sequence, read with the reversal folded back in: the
    // backward runs then grow from -(a-1)/2 upward.
    std::vector<CuspidalPoint> backward;
    backward.reserve(forward.size());
    for (const auto& p : forward)
        backward.push_back({u.dual(p.rho), -p.x});

    std::set<std::vector<int>> fwd_lens, bwd_lens;
    enumerate_shuffles(copies, forward, true, fwd_lens);
    if (fwd_lens.empty())
        return false;
    enumerate_shuffles(copies, backward, false, bwd_lens);
    if (bwd_lens.empty())
        return false;

    // Compatibility: a pairing of forward and backward lengths with
    // lf + lb <= a on every copy. Copies inside a group are interchangeable
    // and both length vectors are sorted ascending there, so it suffices to
    // match ascending forward lengths against descending backward ones.
    for (const auto& lf : fwd_lens) {
        for (const auto& lb : bwd_lens) {
            bool ok = true;
            std::size_t i = 0;
            while (ok && i < copies.size()) {
                std::size_t k = i + 1;
                while (k < copies.size() && copies[k].rho == copies[i].rho &&
                       copies[k].a == copies[i].a)
                    ++k;
                for (std::size_t t = 0; t < k - i; ++t)
                    if (lf[i + t] + lb[k - 1 - t] > copies[i].a) {
                        ok = false;
                        break;
                    }
                i = k;
            }
            if (ok)
                return true;
        }
    }
    return false;
}

JordanSet lower_blocks(SymbolId rho, int a, const JordanSet& j, const Universe& u) {
    if (a < 2)
        throw DomainError("lower_blocks: a must be >= 2");
    int m = j.multiplicity({rho, a});
    if (m == 0)
        throw DomainError("lower_blocks: (" + u.name(rho) + "," + std::to_string(a) +
                          ") not present");
    BlockMultiset blocks = j.blocks();
    blocks.erase({rho, a});
    if (a > 2)
        blocks[{rho, a - 2}] += m;
    return JordanSet::make(resized(j.group(), -2 * m * u.dim(rho)), std::move(blocks), u);
}

JordanSet raise_blocks(SymbolId rho, const Rat& x, int m, const JordanSet& j, const Universe& u) {
    if (!(x > Rat(0)) || !is_half_integer(x))
        throw DomainError("raise_blocks: x must be a positive half-integer");
    if (m < 1)
        throw DomainError("raise_blocks: m must be >= 1");
    const int low = static_cast<int>(twice(x)) - 1;
    const int high = low + 2;
    BlockMultiset blocks = j.blocks();
    if (low > 0) { // (rho,0) blocks are freely available
        int have = j.multiplicity({rho, low});
        if (have < m)
            throw DomainError("raise_blocks: need " + std::to_string(m) + " copies of (" +
                              u.name(rho) + "," + std::to_string(low) + "), have " +
                              std::to_string(have));
        if (have == m)
            blocks.erase({rho, low});
        else
            blocks[{rho, low}] = have - m;
    }
    blocks[{rho, high}] += m;
    return JordanSet::make(resized(j.group(), 2 * m * u.dim(rho)), std::move(blocks), u);
}

} // namespace parind
