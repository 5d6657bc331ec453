#include "parind/segcalc.hpp"

#include <algorithm>

namespace parind {

Segment::Segment(SymbolId rho, Rat e, Rat f) : rho_(rho), e_(std::move(e)), f_(std::move(f)) {
    Rat diff = e_ - f_;
    if (!is_integer(diff) || diff < Rat(-1))
        throw DomainError("invalid segment endpoints: e-f must be an integer >= -1, got e=" +
                          to_string(e_) + ", f=" + to_string(f_));
}

std::vector<CuspidalPoint> segment_set(const Segment& s) {
    std::vector<CuspidalPoint> points;
    if (s.empty())
        return points;
    points.reserve(static_cast<std::size_t>(s.length()));
    for (Rat x = s.e(); x >= s.f(); x -= Rat(1))
        points.push_back({s.rho(), x});
    return points;
}

namespace {

// set(inner) subset of set(outer), both non-empty on the same line.
bool segment_contains(const Segment& outer, const Segment& inner) {
    return outer.e() >= inner.e() && outer.f() <= inner.f();
}

} // namespace

bool linked(const Segment& s1, const Segment& s2) {
    if (s1.empty() || s2.empty())
        throw DomainError("linked: segments must be non-empty");
    if (s1.rho() != s2.rho() || !is_integer(s1.e() - s2.e()))
        return false; // distinct cuspidal lines are never linked
    // Union of the two point sets is again a gapless run.
    if (std::max(s1.f(), s2.f()) > std::min(s1.e(), s2.e()) + Rat(1))
        return false;
    return !segment_contains(s1, s2) && !segment_contains(s2, s1);
}

bool gl_pair_irreducible(const Segment& s1, const Segment& s2) {
    return !linked(s1, s2);
}

Segment contragredient_segment(const Segment& s, const Universe& u) {
    return Segment(u.dual(s.rho()), -s.f(), -s.e());
}

std::optional<Segment> derivative(SymbolId rho, int a, const Rat& b, long long k,
                                  const Universe& u) {
    if (a < 1)
        throw DomainError("derivative: a must be >= 1");
    const long long d = u.dim(rho);
    if (k < 0 || k > static_cast<long long>(a) * d)
        throw DomainError("derivative: k out of range [0, a*d_rho]");
    if (k % d != 0)
        return std::nullopt;
    const long long l = k / d;
    Rat e = Rat(a - 1, 2) + b;
    Rat f = Rat(1 - a, 2) + b + Rat(l);
    return Segment(rho, e, f);
}

std::vector<CuspidalPoint> cuspidal_support(const Segment& s) {
    auto points = segment_set(s);
    std::sort(points.begin(), points.end());
    return points;
}

} // namespace parind
