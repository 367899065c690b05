#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace covsolve {

// Set of attribute indices backed by a fixed 128-bit bitset.
class AttrSet {
public:
    static constexpr int max_universe = 128;

    constexpr AttrSet() = default;

    static AttrSet of(std::initializer_list<int> members) {
        AttrSet s;
        for (int i : members) s.set(i);
        return s;
    }

    static AttrSet single(int i) {
        AttrSet s;
        s.set(i);
        return s;
    }

    // {0, 1, ..., n-1}
    static AttrSet full(int n) {
        AttrSet s;
        for (int w = 0; w < 2; ++w) {
            int lo = w * 64;
            if (n <= lo) break;
            int bits = n - lo >= 64 ? 64 : n - lo;
            s.w_[w] = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
        }
        return s;
    }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    AttrSet& set(int i) {
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
        return *this;
    }
    AttrSet& reset(int i) {
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
        return *this;
    }

    bool empty() const { return w_[0] == 0 && w_[1] == 0; }
    int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }

    // Smallest member, or -1 when empty.
    int front() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    bool subset_of(const AttrSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }
    bool proper_subset_of(const AttrSet& o) const { return subset_of(o) && *this != o; }
    bool intersects(const AttrSet& o) const {
        return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
    }

    AttrSet& operator|=(const AttrSet& o) {
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }
    AttrSet& operator&=(const AttrSet& o) {
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }
    AttrSet& operator-=(const AttrSet& o) {
        w_[0] &= ~o.w_[0];
        w_[1] &= ~o.w_[1];
        return *this;
    }
    friend AttrSet operator|(AttrSet a, const AttrSet& b) { return a |= b; }
    friend AttrSet operator&(AttrSet a, const AttrSet& b) { return a &= b; }
    friend AttrSet operator-(AttrSet a, const AttrSet& b) { return a -= b; }

    friend bool operator==(const AttrSet& a, const AttrSet& b) = default;
    // Total order (compares as a 128-bit integer); used for canonical sorting.
    friend bool operator<(const AttrSet& a, const AttrSet& b) {
        if (a.w_[1] != b.w_[1]) return a.w_[1] < b.w_[1];
        return a.w_[0] < b.w_[0];
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (int w = 0; w < 2; ++w)
            for (std::uint64_t bits = w_[w]; bits; bits &= bits - 1)
                out.push_back(w * 64 + std::countr_zero(bits));
        return out;
    }

private:
    std::array<std::uint64_t, 2> w_{};
};

// "{0,2,5}" with members ascending; "{}" when empty.
inline std::string to_string(const AttrSet& s) {
    std::string out = "{";
    bool first = true;
    for (int i : s.members()) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace covsolve
