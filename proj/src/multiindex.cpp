#include "multiindex.hpp"

#include <bit>

namespace xw {

PartySet::PartySet(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n < 1 || n > kMaxParties)
        throw precondition_error("party count must be in [1, " +
                                 std::to_string(kMaxParties) + "], got " + std::to_string(n));
    if (mask & ~full_mask(n))
        throw precondition_error("subset mask refers to parties beyond " + std::to_string(n));
}

PartySet PartySet::of(int n, const std::vector<int>& parties) {
    std::uint32_t mask = 0;
    for (int p : parties) {
        if (p < 1 || p > n)
            throw precondition_error("party " + std::to_string(p) + " outside [1," +
                                     std::to_string(n) + "]");
        mask |= 1u << (p - 1);
    }
    return PartySet(n, mask);
}

int PartySet::size() const { return std::popcount(mask_); }

PartySet PartySet::united(const PartySet& o) const {
    if (n_ != o.n_) throw precondition_error("party sets live on different [n]");
    return PartySet(n_, mask_ | o.mask_);
}

std::vector<int> PartySet::parties() const {
    std::vector<int> out;
    for (int k = 1; k <= n_; ++k)
        if (contains(k)) out.push_back(k);
    return out;
}

MultiIndex::MultiIndex(PartySet support, std::uint32_t bits)
    : support_(support), bits_(bits & support.mask()) {
    if (bits & ~support.mask())
        throw precondition_error("index bits set outside the support");
}

MultiIndex MultiIndex::parse(const PartySet& support, std::string_view str) {
    auto parties = support.parties();
    if (str.size() != parties.size())
        throw parse_error("index string \"" + std::string(str) + "\" has " +
                          std::to_string(str.size()) + " digits, support has " +
                          std::to_string(parties.size()) + " parties");
    std::uint32_t bits = 0;
    for (std::size_t k = 0; k < parties.size(); ++k) {
        char c = str[k];
        if (c != '0' && c != '1')
            throw parse_error("index string \"" + std::string(str) + "\" is not {0,1}-valued");
        if (c == '1') bits |= 1u << (parties[k] - 1);
    }
    return MultiIndex(support, bits);
}

int MultiIndex::bit(int party) const {
    if (!support_.contains(party))
        throw precondition_error("party " + std::to_string(party) + " not in index support");
    return (bits_ >> (party - 1)) & 1u;
}

std::size_t MultiIndex::lex_rank() const {
    if (!full_support())
        throw precondition_error("lexicographic rank requires full support");
    const int n = support_.n();
    std::size_t rank = 0;
    for (int k = 1; k <= n; ++k) rank = (rank << 1) | ((bits_ >> (k - 1)) & 1u);
    return rank;
}

MultiIndex MultiIndex::from_lex_rank(int n, std::size_t rank) {
    if (rank >= (std::size_t{1} << n))
        throw precondition_error("lexicographic rank out of range for n=" + std::to_string(n));
    std::uint32_t bits = 0;
    for (int k = 1; k <= n; ++k)
        if ((rank >> (n - k)) & 1u) bits |= 1u << (k - 1);
    return on_full(n, bits);
}

std::string MultiIndex::str() const {
    std::string out;
    for (int p : support_.parties()) out.push_back(bit(p) ? '1' : '0');
    return out;
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
    if (!(a.support_ == b.support_))
        throw precondition_error("indices with different supports are not ordered");
    auto parties = a.support_.parties();
    for (int p : parties) {
        int ab = a.bit(p), bb = b.bit(p);
        if (ab != bb) return ab < bb;
    }
    return false;
}

MultiIndex diamond(const MultiIndex& i, const MultiIndex& k) {
    if (!i.support().disjoint_with(k.support()))
        throw precondition_error("diamond requires disjoint supports (invalid bipartition)");
    return MultiIndex(i.support().united(k.support()), i.bits() | k.bits());
}

MultiIndex flip_on(const MultiIndex& i, const PartySet& s) {
    if (!i.full_support())
        throw precondition_error("flip_on requires an index on the full party set");
    if (s.n() != i.support().n())
        throw precondition_error("subset lives on a different [n]");
    return MultiIndex(i.support(), i.bits() ^ s.mask());
}

MultiIndex bar(const MultiIndex& i) { return flip_on(i, PartySet::full(i.support().n())); }

MultiIndex restrict_to(const MultiIndex& i, const PartySet& s) {
    if (!i.full_support())
        throw precondition_error("restriction requires an index on the full party set");
    return MultiIndex(s, i.bits() & s.mask());
}

CanonicalRep canonical_rep(const MultiIndex& i) {
    if (!i.full_support())
        throw precondition_error("canonical representative requires full support");
    if (i.bit(1) == 0) return {i, false};
    return {bar(i), true};
}

std::vector<MultiIndex> enumerate_b0(int n) {
    std::vector<MultiIndex> out;
    const std::size_t count = std::size_t{1} << (n - 1);
    out.reserve(count);
    for (std::size_t r = 0; r < count; ++r) out.push_back(MultiIndex::from_lex_rank(n, r));
    return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
    if (n < 2) throw precondition_error("bipartitions need at least 2 parties");
    std::vector<Bipartition> out;
    // S runs over nonempty subsets of {2,...,n}; party 1 always stays in T.
    for (std::uint32_t m = 2; m < (1u << n); m += 2) {
        PartySet s(n, m);
        out.push_back({s, s.complement()});
    }
    return out;
}

}  // namespace xw
