#ifndef XW_XMATRIX_HPP
#define XW_XMATRIX_HPP

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multiindex.hpp"

namespace xw {

using cplx = std::complex<double>;

// Structural (exact) comparisons.
inline constexpr double kStructuralTol = 1e-12;
// Semidefinite / inequality verdicts absorb this much float noise.
inline constexpr double kVerdictTol = 1e-9;
// Decomposition certificates must recompose within this bound.
inline constexpr double kCertTol = 1e-10;

enum class Role { generic, witness, state };

// One diagonal/anti-diagonal slot: s at (i,i), t at (ī,ī), u at (i,ī).
// The (ī,i) entry is implicitly conj(u); Hermiticity is structural.
struct Triple {
    double s = 0.0;
    double t = 0.0;
    cplx u{0.0, 0.0};
};

// X-shaped Hermitian matrix on n qubits, stored as one Triple per B0 slot
// in lexicographic order.
class XMatrix {
public:
    explicit XMatrix(int n, Role role = Role::generic);

    // Keys are B0 index strings ("010"); missing keys stay zero. Imaginary
    // parts of s and t above kStructuralTol are rejected.
    static XMatrix build(int n, const std::map<std::string, std::array<cplx, 3>>& triples,
                         Role role = Role::generic);

    int n() const { return n_; }
    std::size_t slots() const { return slots_.size(); }
    std::size_t dim() const { return std::size_t{2} << (n_ - 1); }
    Role role() const { return role_; }
    void set_role(Role r) { role_ = r; }

    Triple& slot(std::size_t r) { return slots_[r]; }
    const Triple& slot(std::size_t r) const { return slots_[r]; }
    const Triple& slot(const MultiIndex& i) const;
    Triple& slot(const MultiIndex& i);

    MultiIndex b0_index(std::size_t r) const { return MultiIndex::from_lex_rank(n_, r); }

    // Plain transpose: s, t fixed, u -> conj(u).
    XMatrix transposed() const;

    double trace() const;
    double max_abs() const;
    double max_abs_diff(const XMatrix& o) const;
    bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }

    XMatrix& operator+=(const XMatrix& o);
    XMatrix& operator-=(const XMatrix& o);
    XMatrix& operator*=(double c);
    friend XMatrix operator+(XMatrix a, const XMatrix& b) { return a += b; }
    friend XMatrix operator-(XMatrix a, const XMatrix& b) { return a -= b; }
    friend XMatrix operator*(double c, XMatrix a) { return a *= c; }

private:
    int n_;
    Role role_;
    std::vector<Triple> slots_;
};

struct PsdVerdict {
    bool psd;
    double margin;  // min over B0 slots of the 2x2 block's least eigenvalue
    std::optional<MultiIndex> violating;
};

// PSD iff every slot block [[s,u],[conj(u),t]] is PSD; the reported margin is
// exactly the least eigenvalue of the dense form.
PsdVerdict is_positive_semidefinite(const XMatrix& x, double tol = kVerdictTol);

// T(S): diagonals fixed; u_i moves to slot flip(i,S) when that stays in B0,
// otherwise conj(u_i) lands at slot flip(i, S^c).
XMatrix partial_transpose(const XMatrix& x, const PartySet& s);

// <A,B> = Tr(A B^t) = sum_i [a_i s_i + b_i t_i + 2 Re(z_i u_i)].
double pairing(const XMatrix& a, const XMatrix& b);

// The 4x4 X-form sub-matrix with corners (s_i,t_i,u_i) and middle (s_j,t_j,u_j).
struct BlockPair {
    MultiIndex i;
    MultiIndex j;
    Triple corner;
    Triple middle;
};

BlockPair block_pair(const XMatrix& x, const MultiIndex& i, const MultiIndex& j);

// Dense 2^n x 2^n complex Hermitian matrix, row-major, lexicographic basis.
class DenseHermitian {
public:
    explicit DenseHermitian(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    cplx& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    double herm_defect() const;  // max |A_rc - conj(A_cr)|
    double max_abs_diff(const DenseHermitian& o) const;

private:
    std::size_t dim_;
    std::vector<cplx> a_;
};

DenseHermitian to_dense(const XMatrix& x);

// Diagonal/anti-diagonal part of a dense matrix as an XMatrix (to_dense inverse
// on X-shaped inputs).
XMatrix x_part(const DenseHermitian& a, int n, Role role = Role::generic);

}  // namespace xw

#endif
