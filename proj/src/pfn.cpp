#include "pfz/pfn.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "pfz/error.hpp"

namespace pfz {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_component(const char* name, double v) {
    if (!(v >= -kSumEps && v <= 1.0 + kSumEps)) {
        throw Error(Errc::ComponentOutOfRange,
                    std::string(name) + " = " + fmt17(v) + " is outside [0, 1]");
    }
}

std::strong_ordering cmp_double(double a, double b) noexcept {
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Snaps an order key to the kOrderQuantum grid. Rounding is monotone, so a
// lexicographic comparison of snapped keys is still a total preorder.
double snap(double v) noexcept { return std::nearbyint(v / kOrderQuantum); }

}  // namespace

Pfn make_pfn(double mu, double eta, double nu) {
    check_component("mu", mu);
    check_component("eta", eta);
    check_component("nu", nu);
    const double sum = mu + eta + nu;
    if (sum > 1.0 + kSumEps) {
        throw Error(Errc::SumExceedsOne, "mu + eta + nu = " + fmt17(sum) + " exceeds 1 for <" +
                                             fmt17(mu) + "," + fmt17(eta) + "," + fmt17(nu) + ">");
    }
    return Pfn(mu, eta, nu);
}

ScoreProfile score_profile(const Pfn& x) noexcept {
    return {x.mu() - x.nu(), x.mu() + x.nu(), x.mu() + x.eta() + x.nu()};
}

Pfn from_profile(const ScoreProfile& p) {
    return make_pfn((p.s + p.h1) / 2.0, p.h2 - p.h1, (p.h1 - p.s) / 2.0);
}

std::strong_ordering cmp_admissible(const Pfn& x, const Pfn& y) noexcept {
    const ScoreProfile a = score_profile(x);
    const ScoreProfile b = score_profile(y);
    if (auto c = cmp_double(snap(a.s), snap(b.s)); c != 0) return c;
    if (auto c = cmp_double(snap(a.h1), snap(b.h1)); c != 0) return c;
    if (auto c = cmp_double(snap(a.h2), snap(b.h2)); c != 0) return c;
    // Equal snapped profiles can still hide a difference in the components;
    // fall back to them so that equal really means identical.
    if (auto c = cmp_double(x.mu(), y.mu()); c != 0) return c;
    if (auto c = cmp_double(y.nu(), x.nu()); c != 0) return c;
    return cmp_double(x.eta(), y.eta());
}

WangVerdict cmp_wang(const Pfn& x, const Pfn& y) noexcept {
    const double sx = snap(x.mu() - x.nu());
    const double sy = snap(y.mu() - y.nu());
    if (sx < sy) return WangVerdict::Less;
    if (sx > sy) return WangVerdict::Greater;
    const double hx = snap(x.mu() + x.eta() + x.nu());
    const double hy = snap(y.mu() + y.eta() + y.nu());
    if (hx < hy) return WangVerdict::Less;
    if (hx > hy) return WangVerdict::Greater;
    return WangVerdict::Indistinguishable;
}

bool leq_componentwise(const Pfn& x, const Pfn& y) noexcept {
    return x.mu() <= y.mu() && x.eta() <= y.eta() && x.nu() >= y.nu();
}

Pfn join_w(std::span<const Pfn> xs) {
    if (xs.empty()) throw Error(Errc::EmptyInput, "join of an empty set");
    return *std::max_element(xs.begin(), xs.end(),
                             [](const Pfn& a, const Pfn& b) { return cmp_admissible(a, b) < 0; });
}

Pfn meet_w(std::span<const Pfn> xs) {
    if (xs.empty()) throw Error(Errc::EmptyInput, "meet of an empty set");
    return *std::min_element(xs.begin(), xs.end(),
                             [](const Pfn& a, const Pfn& b) { return cmp_admissible(a, b) < 0; });
}

std::string to_text(const Pfn& x) {
    return "<" + fmt17(x.mu()) + "," + fmt17(x.eta()) + "," + fmt17(x.nu()) + ">";
}

Pfn parse_text(std::string_view text) {
    auto fail = [&] { return Error(Errc::ParseError, "expected <mu,eta,nu>, got '" + std::string(text) + "'"); };
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.size() < 2 || s.front() != '<' || s.back() != '>') throw fail();
    s = s.substr(1, s.size() - 2);
    double v[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t end = s.find(',', pos);
        if ((i < 2) == (end == std::string::npos)) throw fail();
        const std::string part = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        char* stop = nullptr;
        v[i] = std::strtod(part.c_str(), &stop);
        if (part.empty() || *stop != '\0') throw fail();
        pos = end + 1;
    }
    return make_pfn(v[0], v[1], v[2]);
}

}  // namespace pfz
