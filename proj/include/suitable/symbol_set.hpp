#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "suitable/errors.hpp"

namespace suitable {

// Symbols are 1-based: a table over v symbols uses exactly 1..v.
using Symbol = int;

// Set of symbols as a 64-bit mask (bit i-1 <=> symbol i). The whole library
// is capped at v <= 64; verification over subsets is only practical for far
// smaller v anyway.
class SymbolSet {
public:
    static constexpr int max_symbol = 64;

    constexpr SymbolSet() = default;
    constexpr explicit SymbolSet(std::uint64_t bits) : bits_(bits) {}

    SymbolSet(std::initializer_list<Symbol> symbols) {
        for (Symbol s : symbols) insert(s);
    }

    // {1, ..., v}
    static constexpr SymbolSet full(int v) {
        return SymbolSet(v == 0 ? 0 : (~std::uint64_t{0} >> (64 - v)));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return __builtin_popcountll(bits_); }

    constexpr bool contains(Symbol s) const { return (bits_ >> (s - 1)) & 1u; }
    constexpr bool subset_of(SymbolSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(SymbolSet other) const { return (bits_ & other.bits_) != 0; }

    void insert(Symbol s) {
        if (s < 1 || s > max_symbol)
            throw PreconditionError("symbol out of range for SymbolSet");
        bits_ |= std::uint64_t{1} << (s - 1);
    }

    constexpr SymbolSet with(Symbol s) const {
        return SymbolSet(bits_ | (std::uint64_t{1} << (s - 1)));
    }
    constexpr SymbolSet without(Symbol s) const {
        return SymbolSet(bits_ & ~(std::uint64_t{1} << (s - 1)));
    }

    std::vector<Symbol> to_vector() const {
        std::vector<Symbol> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(__builtin_ctzll(b) + 1);
        return out;
    }

    friend constexpr bool operator==(SymbolSet a, SymbolSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(SymbolSet a, SymbolSet b) { return a.bits_ != b.bits_; }
    friend constexpr SymbolSet operator&(SymbolSet a, SymbolSet b) { return SymbolSet(a.bits_ & b.bits_); }
    friend constexpr SymbolSet operator|(SymbolSet a, SymbolSet b) { return SymbolSet(a.bits_ | b.bits_); }

private:
    std::uint64_t bits_ = 0;
};

} // namespace suitable
