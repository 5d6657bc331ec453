// Exact segment calculus on the GL side.
//
// A segment <e,f>_rho is the decreasing set {e, e-1, ..., f} of twists of a
// cuspidal symbol rho; e - f = -1 encodes the empty segment, which is a
// first-class value here, not an error.
#pragma once

#include "parind/rational.hpp"
#include "parind/symbols.hpp"

#include <optional>
#include <vector>

namespace parind {

struct CuspidalPoint {
    SymbolId rho;
    Rat x;
    bool operator==(const CuspidalPoint&) const = default;
    bool operator<(const CuspidalPoint& o) const {
        return rho != o.rho ? rho < o.rho : x < o.x;
    }
};

class Segment {
public:
    // Requires e - f to be an integer >= -1.
    Segment(SymbolId rho, Rat e, Rat f);

    SymbolId rho() const { return rho_; }
    const Rat& e() const { return e_; }
    const Rat& f() const { return f_; }

    bool empty() const { return e_ - f_ == Rat(-1); }
    // Number of points; e - f + 1.
    long long length() const { return (e_ - f_).numerator() + 1; }
    // Exponent of the twisted Steinberg this segment names: (e+f)/2.
    Rat exponent() const { return (e_ + f_) / 2; }

    bool operator==(const Segment&) const = default;

private:
    SymbolId rho_;
    Rat e_, f_;
};

// The decreasing sequence (rho^e, rho^{e-1}, ..., rho^f); empty for e-f = -1.
std::vector<CuspidalPoint> segment_set(const Segment& s);

// Zelevinsky linkage: same cuspidal line, union is a segment, neither set
// contains the other. Both segments must be non-empty.
bool linked(const Segment& s1, const Segment& s2);

// The induced product of two non-empty segments is irreducible iff they are
// not linked.
bool gl_pair_irreducible(const Segment& s1, const Segment& s2);

// <e,f>_rho  ->  <-f,-e>_{dual rho}; an involution.
Segment contragredient_segment(const Segment& s, const Universe& u);

// k-th derivative of St(rho,a)|.|^b: nullopt when d_rho does not divide k,
// otherwise the segment <(a-1)/2 + b, (1-a)/2 + b + k/d_rho>_rho (empty at the
// top derivative k = a*d_rho). Requires 0 <= k <= a*d_rho.
std::optional<Segment> derivative(SymbolId rho, int a, const Rat& b, long long k,
                                  const Universe& u);

// Multiset of segment points, as a sorted vector.
std::vector<CuspidalPoint> cuspidal_support(const Segment& s);

} // namespace parind
