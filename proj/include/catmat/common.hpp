#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace catmat {

/// Subset of {1,...,64}; bit (i-1) is set iff element i is present.
using Subset = std::uint64_t;
using BigInt = mpz_class;

inline constexpr int kMaxGround = 64;

/// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a request exceeds a configured enumeration bound.
class ResourceError : public std::length_error {
public:
    using std::length_error::length_error;
};

constexpr Subset element_bit(int e) { return Subset{1} << (e - 1); }

constexpr bool contains(Subset s, int e) { return (s >> (e - 1)) & 1u; }

constexpr int cardinality(Subset s) { return std::popcount(s); }

/// {1,...,m}
constexpr Subset full_set(int m) {
    return m >= kMaxGround ? ~Subset{0} : (Subset{1} << m) - 1;
}

/// Smallest element, or 0 for the empty set.
constexpr int min_element(Subset s) { return s == 0 ? 0 : std::countr_zero(s) + 1; }

/// Largest element, or 0 for the empty set.
constexpr int max_element(Subset s) { return s == 0 ? 0 : kMaxGround - std::countl_zero(s); }

inline Subset make_subset(std::initializer_list<int> elems) {
    Subset s = 0;
    for (int e : elems) s |= element_bit(e);
    return s;
}

inline Subset make_subset(const std::vector<int>& elems) {
    Subset s = 0;
    for (int e : elems) {
        if (e < 1 || e > kMaxGround) throw DomainError("element " + std::to_string(e) + " out of range");
        s |= element_bit(e);
    }
    return s;
}

/// Elements in increasing order.
inline std::vector<int> elements(Subset s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality(s)));
    while (s != 0) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

/// Strict lexicographic order on the increasing element lists.
inline bool lex_less(Subset a, Subset b) {
    while (a != 0 && b != 0) {
        int x = min_element(a), y = min_element(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

inline std::string to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

/// Calls fn(sub) for every k-subset of {1..m}, in increasing numeric order of the bitmask.
template <typename Fn>
void for_each_k_subset(int m, int k, Fn&& fn) {
    if (k < 0 || k > m) return;
    if (k == 0) {
        fn(Subset{0});
        return;
    }
    Subset s = full_set(k);
    const Subset limit = full_set(m);
    while (true) {
        fn(s);
        // Gosper's hack
        Subset c = s & (~s + 1);
        Subset r = s + c;
        if (r == 0 || r > limit) break;
        s = (((r ^ s) >> 2) / c) | r;
        if (s > limit) break;
    }
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// floor(a / b) for b > 0.
constexpr int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

/// Upper bound on half-length n for path and Catalan enumerations.
/// Reads MATROID_FORGE_MAX_N once; defaults to 14.
inline int max_half_length() {
    static const int value = [] {
        if (const char* env = std::getenv("MATROID_FORGE_MAX_N")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v >= 0 && v <= 30) return static_cast<int>(v);
        }
        return 14;
    }();
    return value;
}

inline void require_bound(bool ok, const std::string& what) {
    if (!ok) throw ResourceError("bound exceeded: " + what);
}

}  // namespace catmat
