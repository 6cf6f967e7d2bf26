// bijection.hpp — position -> person assignments and Lehmer-code ranking.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "graph.hpp"

namespace fsg {

// map[position] = person; positions index V(X), persons index V(Y).
class Bijection {
public:
    static Bijection identity(int n) {
        check_order(n);
        Bijection b;
        b.n_ = n;
        for (int i = 0; i < n; ++i) b.map_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        return b;
    }

    static Bijection from_values(const std::vector<int>& values) {
        check_order(static_cast<int>(values.size()));
        Bijection b;
        b.n_ = static_cast<int>(values.size());
        std::uint16_t seen = 0;
        for (int i = 0; i < b.n_; ++i) {
            const int v = values[static_cast<std::size_t>(i)];
            if (v < 0 || v >= b.n_) throw std::invalid_argument("Bijection: value " + std::to_string(v) + " out of range");
            if ((seen >> v) & 1u) throw std::invalid_argument("Bijection: duplicate value " + std::to_string(v));
            seen |= static_cast<std::uint16_t>(1u << v);
            b.map_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
        }
        return b;
    }

    int size() const { return n_; }

    int at(int position) const {
        if (position < 0 || position >= n_) throw std::out_of_range("Bijection: position out of range");
        return map_[static_cast<std::size_t>(position)];
    }

    int operator[](int position) const { return map_[static_cast<std::size_t>(position)]; }

    int position_of(int person) const {
        for (int i = 0; i < n_; ++i)
            if (map_[static_cast<std::size_t>(i)] == person) return i;
        throw std::out_of_range("Bijection: person out of range");
    }

    void swap_positions(int a, int b) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_) throw std::out_of_range("Bijection: position out of range");
        std::swap(map_[static_cast<std::size_t>(a)], map_[static_cast<std::size_t>(b)]);
    }

    std::vector<int> to_vector() const {
        return std::vector<int>(map_.begin(), map_.begin() + n_);
    }

    friend bool operator==(const Bijection&, const Bijection&) = default;

private:
    static void check_order(int n) {
        if (n < 1 || n > kMaxOrder)
            throw std::invalid_argument("Bijection: size must be in [1, " + std::to_string(kMaxOrder) + "]");
    }

    std::array<std::uint8_t, kMaxOrder> map_{};
    int n_ = 0;
};

// Lehmer rank: identity -> 0, reversal -> n!-1.
inline std::uint64_t rank(const Bijection& b) {
    const int n = b.size();
    std::uint64_t r = 0;
    std::uint64_t f = factorial(n - 1);
    for (int i = 0; i < n; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j < n; ++j)
            if (b[j] < b[i]) ++smaller_later;
        r += static_cast<std::uint64_t>(smaller_later) * f;
        if (i + 1 < n) f /= static_cast<std::uint64_t>(n - 1 - i);
    }
    return r;
}

inline Bijection unrank(std::uint64_t index, int n) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("unrank: n out of range");
    if (index >= factorial(n)) throw std::invalid_argument("unrank: index >= n!");
    std::array<std::uint8_t, kMaxOrder> pool{};
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    std::vector<int> values(static_cast<std::size_t>(n));
    int remaining = n;
    std::uint64_t f = factorial(n - 1);
    for (int i = 0; i < n; ++i) {
        const int d = static_cast<int>(index / f);
        index %= f;
        values[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(d)];
        for (int j = d; j + 1 < remaining; ++j) pool[static_cast<std::size_t>(j)] = pool[static_cast<std::size_t>(j + 1)];
        --remaining;
        if (remaining > 0) f /= static_cast<std::uint64_t>(remaining);
    }
    return Bijection::from_values(values);
}

}  // namespace fsg
