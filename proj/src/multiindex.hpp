#ifndef XW_MULTIINDEX_HPP
#define XW_MULTIINDEX_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace xw {

inline constexpr int kMaxParties = 10;

// Subset of the parties {1,...,n}. Bit (k-1) of the mask stores party k.
class PartySet {
public:
    PartySet(int n, std::uint32_t mask);

    static PartySet empty_set(int n) { return PartySet(n, 0); }
    static PartySet full(int n) { return PartySet(n, full_mask(n)); }
    static PartySet of(int n, const std::vector<int>& parties);

    int n() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    int size() const;
    bool contains(int party) const { return (mask_ >> (party - 1)) & 1u; }
    bool empty() const { return mask_ == 0; }
    bool is_full() const { return mask_ == full_mask(n_); }
    bool nontrivial() const { return !empty() && !is_full(); }

    PartySet complement() const { return PartySet(n_, full_mask(n_) & ~mask_); }
    bool disjoint_with(const PartySet& o) const { return (mask_ & o.mask_) == 0; }
    PartySet united(const PartySet& o) const;

    std::vector<int> parties() const;  // ascending

    friend bool operator==(const PartySet&, const PartySet&) = default;

private:
    static std::uint32_t full_mask(int n) { return (1u << n) - 1u; }
    int n_;
    std::uint32_t mask_;
};

// {0,1}-valued function on a party subset. Bit (k-1) of `bits` holds the
// value of party k; bits outside the support are kept at zero.
class MultiIndex {
public:
    MultiIndex(PartySet support, std::uint32_t bits);

    // Index on the full set [n], bit (k-1) = value of party k.
    static MultiIndex on_full(int n, std::uint32_t bits) {
        return MultiIndex(PartySet::full(n), bits);
    }
    // Parse "010"-style string: characters in ascending party order of `support`.
    static MultiIndex parse(const PartySet& support, std::string_view str);

    const PartySet& support() const { return support_; }
    std::uint32_t bits() const { return bits_; }
    int bit(int party) const;
    bool full_support() const { return support_.is_full(); }

    // Position under the lexicographic order on I_[n]: party 1 is the most
    // significant binary digit. Requires full support.
    std::size_t lex_rank() const;
    static MultiIndex from_lex_rank(int n, std::size_t rank);

    std::string str() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    // Lexicographic by party number; comparable only for equal supports.
    friend bool operator<(const MultiIndex& a, const MultiIndex& b);

private:
    PartySet support_;
    std::uint32_t bits_;
};

// i on S and k on T with S, T disjoint -> the index on S∪T agreeing with both.
MultiIndex diamond(const MultiIndex& i, const MultiIndex& k);

// Flip the bits of i (supported on [n]) exactly on S.
MultiIndex flip_on(const MultiIndex& i, const PartySet& s);

// Full complement: flip every bit.
MultiIndex bar(const MultiIndex& i);

// Restriction of a full-support index to a subset (diamond's inverse).
MultiIndex restrict_to(const MultiIndex& i, const PartySet& s);

struct CanonicalRep {
    MultiIndex rep;
    bool flipped;
};

// B0 representative of the diagonal/anti-diagonal slot pair of i.
CanonicalRep canonical_rep(const MultiIndex& i);

// All indices on [n] beginning with 0, lexicographically ordered. Position of
// an index equals its binary expansion value (0-based).
std::vector<MultiIndex> enumerate_b0(int n);

struct Bipartition {
    PartySet s;
    PartySet t;
};

// Every nontrivial split S ⊔ T of [n] exactly once, oriented so party 1 ∈ T.
// 2^{n-1} - 1 entries, ordered by the bitmask of S.
std::vector<Bipartition> enumerate_bipartitions(int n);

}  // namespace xw

#endif
