#include "xmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace xw {

XMatrix::XMatrix(int n, Role role) : n_(n), role_(role) {
    if (n < 1 || n > kMaxParties)
        throw precondition_error("party count must be in [1, " +
                                 std::to_string(kMaxParties) + "], got " + std::to_string(n));
    slots_.assign(std::size_t{1} << (n - 1), Triple{});
}

XMatrix XMatrix::build(int n, const std::map<std::string, std::array<cplx, 3>>& triples,
                       Role role) {
    XMatrix x(n, role);
    const PartySet full = PartySet::full(n);
    for (const auto& [key, stu] : triples) {
        MultiIndex idx = MultiIndex::parse(full, key);
        if (idx.bit(1) != 0)
            throw precondition_error("index \"" + key + "\" is not in B0 (must begin with 0)");
        for (const cplx& v : stu)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw precondition_error("non-finite entry at index \"" + key + "\"");
        if (std::abs(stu[0].imag()) > kStructuralTol || std::abs(stu[1].imag()) > kStructuralTol)
            throw precondition_error("diagonal entries at \"" + key +
                                     "\" must be real (Hermitian diagonal)");
        x.slots_[idx.lex_rank()] = {stu[0].real(), stu[1].real(), stu[2]};
    }
    return x;
}

const Triple& XMatrix::slot(const MultiIndex& i) const {
    if (i.support().n() != n_ || !i.full_support() || i.bit(1) != 0)
        throw precondition_error("slot lookup needs a B0 index on this matrix's [n]");
    return slots_[i.lex_rank()];
}

Triple& XMatrix::slot(const MultiIndex& i) {
    return const_cast<Triple&>(static_cast<const XMatrix&>(*this).slot(i));
}

XMatrix XMatrix::transposed() const {
    XMatrix out = *this;
    for (auto& tr : out.slots_) tr.u = std::conj(tr.u);
    return out;
}

double XMatrix::trace() const {
    double tr = 0.0;
    for (const auto& t : slots_) tr += t.s + t.t;
    return tr;
}

double XMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& t : slots_)
        m = std::max({m, std::abs(t.s), std::abs(t.t), std::abs(t.u)});
    return m;
}

double XMatrix::max_abs_diff(const XMatrix& o) const {
    if (n_ != o.n_) throw precondition_error("matrix sizes differ");
    double m = 0.0;
    for (std::size_t r = 0; r < slots_.size(); ++r) {
        m = std::max(m, std::abs(slots_[r].s - o.slots_[r].s));
        m = std::max(m, std::abs(slots_[r].t - o.slots_[r].t));
        m = std::max(m, std::abs(slots_[r].u - o.slots_[r].u));
    }
    return m;
}

XMatrix& XMatrix::operator+=(const XMatrix& o) {
    if (n_ != o.n_) throw precondition_error("matrix sizes differ");
    for (std::size_t r = 0; r < slots_.size(); ++r) {
        slots_[r].s += o.slots_[r].s;
        slots_[r].t += o.slots_[r].t;
        slots_[r].u += o.slots_[r].u;
    }
    return *this;
}

XMatrix& XMatrix::operator-=(const XMatrix& o) {
    if (n_ != o.n_) throw precondition_error("matrix sizes differ");
    for (std::size_t r = 0; r < slots_.size(); ++r) {
        slots_[r].s -= o.slots_[r].s;
        slots_[r].t -= o.slots_[r].t;
        slots_[r].u -= o.slots_[r].u;
    }
    return *this;
}

XMatrix& XMatrix::operator*=(double c) {
    for (auto& t : slots_) {
        t.s *= c;
        t.t *= c;
        t.u *= c;
    }
    return *this;
}

// Least eigenvalue of [[s,u],[conj(u),t]].
static double block_min_eig(const Triple& t) {
    return 0.5 * (t.s + t.t) - std::hypot(0.5 * (t.s - t.t), std::abs(t.u));
}

PsdVerdict is_positive_semidefinite(const XMatrix& x, double tol) {
    PsdVerdict v{true, std::numeric_limits<double>::infinity(), std::nullopt};
    for (std::size_t r = 0; r < x.slots(); ++r) {
        double lam = block_min_eig(x.slot(r));
        if (lam < v.margin) v.margin = lam;
        if (lam < -tol && !v.violating) v.violating = x.b0_index(r);
    }
    v.psd = !v.violating.has_value();
    return v;
}

XMatrix partial_transpose(const XMatrix& x, const PartySet& s) {
    if (s.n() != x.n()) throw precondition_error("subset lives on a different [n]");
    XMatrix out(x.n(), x.role());
    const PartySet sc = s.complement();
    std::vector<bool> written(x.slots(), false);
    for (std::size_t r = 0; r < x.slots(); ++r) {
        MultiIndex i = x.b0_index(r);
        const Triple& src = x.slot(r);
        out.slot(r).s = src.s;
        out.slot(r).t = src.t;
        // |i><ī| -> |j><j̄| with j = flip(i,S); store at the B0 member of {j, j̄}.
        MultiIndex j = flip_on(i, s);
        std::size_t target;
        cplx value;
        if (j.bit(1) == 0) {
            target = j.lex_rank();
            value = src.u;
        } else {
            target = flip_on(i, sc).lex_rank();
            value = std::conj(src.u);
        }
        if (written[target])
            throw precondition_error("partial transpose slot collision (broken invariant)");
        written[target] = true;
        out.slot(target).u = value;
    }
    return out;
}

double pairing(const XMatrix& a, const XMatrix& b) {
    if (a.n() != b.n()) throw precondition_error("pairing requires equal party counts");
    double acc = 0.0;
    for (std::size_t r = 0; r < a.slots(); ++r) {
        const Triple& p = a.slot(r);
        const Triple& q = b.slot(r);
        acc += p.s * q.s + p.t * q.t + 2.0 * (p.u * q.u).real();
    }
    return acc;
}

BlockPair block_pair(const XMatrix& x, const MultiIndex& i, const MultiIndex& j) {
    if (i == j) throw precondition_error("block pair needs two distinct B0 indices");
    return {i, j, x.slot(i), x.slot(j)};
}

double DenseHermitian::herm_defect() const {
    double m = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            m = std::max(m, std::abs(at(r, c) - std::conj(at(c, r))));
    return m;
}

double DenseHermitian::max_abs_diff(const DenseHermitian& o) const {
    if (dim_ != o.dim_) throw precondition_error("matrix sizes differ");
    double m = 0.0;
    for (std::size_t k = 0; k < a_.size(); ++k) m = std::max(m, std::abs(a_[k] - o.a_[k]));
    return m;
}

DenseHermitian to_dense(const XMatrix& x) {
    DenseHermitian a(x.dim());
    for (std::size_t r = 0; r < x.slots(); ++r) {
        const Triple& t = x.slot(r);
        std::size_t i = r;
        std::size_t ibar = x.dim() - 1 - r;  // full bit-flip reverses the lex rank
        a.at(i, i) = t.s;
        a.at(ibar, ibar) = t.t;
        a.at(i, ibar) = t.u;
        a.at(ibar, i) = std::conj(t.u);
    }
    return a;
}

XMatrix x_part(const DenseHermitian& a, int n, Role role) {
    if (a.dim() != (std::size_t{2} << (n - 1)))
        throw precondition_error("dense dimension does not match 2^n");
    XMatrix x(n, role);
    for (std::size_t r = 0; r < x.slots(); ++r) {
        std::size_t ibar = a.dim() - 1 - r;
        x.slot(r).s = a.at(r, r).real();
        x.slot(r).t = a.at(ibar, ibar).real();
        x.slot(r).u = a.at(r, ibar);
    }
    return x;
}

}  // namespace xw
