#ifndef XW_WITNESS_HPP
#define XW_WITNESS_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "xmatrix.hpp"

namespace xw {

struct PairVerdict {
    bool ok;
    double margin;  // min over unordered pairs of sqrt(s_i t_i)+sqrt(s_j t_j)-|u_i|-|u_j|
    MultiIndex i;
    MultiIndex j;
};

// Full bi-block positivity of an X-shaped Hermitian with nonnegative diagonals:
// the pairwise anti-diagonal inequality over all unordered B0 pairs. Reports the
// worst pair (lexicographically smallest among ties).
PairVerdict is_fully_bi_block_positive(const XMatrix& w, double tol = kVerdictTol);

// Non-positive + fully bi-block positive.
bool is_genuine_witness(const XMatrix& w, double tol = kVerdictTol);

struct DecomVerdict {
    bool ok;
    double margin;  // sum of sqrt(s t) minus sum of |u|
};

DecomVerdict is_decomposable(const XMatrix& w, double tol = kVerdictTol);

struct CertificatePart {
    PartySet subset;
    XMatrix q;  // positive semidefinite
};

// W = sum over parts of Q^{T(S)}.
struct DecompositionCertificate {
    std::vector<CertificatePart> parts;
    double residual;  // max-entry reconstruction error against the input
    double epsilon;   // 0 for the exact path; the regularization step otherwise
};

// Constructive decomposition of a decomposable witness. Throws unsatisfied_error
// (carrying the margin) when the decomposability inequality fails. When some
// slot of the positive part degenerates (p q = 0) while strict violators exist,
// the certificate is taken from W + eps*I over the ladder eps = 1e-4, 1e-6, 1e-8
// and the residual reflects the final eps.
DecompositionCertificate decompose(const XMatrix& w, double tol = kVerdictTol);

XMatrix reconstruct(const DecompositionCertificate& cert, int n);

// All parts PSD and the reconstruction matches w within recomp_tol (plus the
// certificate's own declared epsilon slack). Residual reported via out-param.
bool verify_certificate(const XMatrix& w, const DecompositionCertificate& cert,
                        double* residual = nullptr, double psd_tol = kVerdictTol,
                        double recomp_tol = kCertTol);

// P + Q^{T(S)} = W with P, Q PSD, for a fully bi-block positive W and a
// nontrivial subset S. Subsets containing party 1 are handled by working on the
// complement and transposing Q.
std::pair<XMatrix, XMatrix> decompose_bipartition(const XMatrix& w, const PartySet& s,
                                                  double tol = kVerdictTol);

struct OptimalVerdict {
    bool optimal;
    std::optional<MultiIndex> i0;
    double r;
};

// Closed-form optimality: a single slot i0 with zero diagonals carrying the
// whole anti-diagonal weight r, every other slot with sqrt(s t) = r and u = 0.
// Comparisons are relative to r; pass rel_tol = 0 for exact arithmetic inputs.
OptimalVerdict is_optimal_gew(const XMatrix& w, double rel_tol = 1e-9);

// Builds the witness family realizing the optimality condition: slot i0 gets
// (0, 0, r e^{i theta}); slot i gets (scales[i], r^2/scales[i], 0). scales is
// indexed by B0 rank; the value at i0 is ignored.
XMatrix construct_optimal(int n, const MultiIndex& i0, double theta,
                          const std::vector<double>& scales, double r);
XMatrix construct_optimal(int n, const MultiIndex& i0, double theta, double scale = 1.0,
                          double r = 1.0);

struct SpanningVector {
    Bipartition split;
    cplx alpha;
    std::vector<cplx> vec;  // dim 2^n, product across the split
};

inline constexpr std::array<cplx, 4> kDefaultAlphas{cplx{1, 0}, cplx{-1, 0}, cplx{0, 1},
                                                    cplx{2, 0}};

// Zero-pairing bi-product vectors of an optimal witness, one per
// (bipartition, alpha). The family spans the whole 2^n-dimensional space.
std::vector<SpanningVector> spanning_family(
    const XMatrix& w, std::span<const cplx> alphas = kDefaultAlphas);

struct Violation {
    std::string inequality;
    std::vector<MultiIndex> indices;
    double margin;
};

struct ClassificationReport {
    int n;
    bool is_psd;
    double psd_margin;
    std::optional<MultiIndex> psd_violating;
    bool fully_bi_block_positive;
    double pair_margin;
    MultiIndex worst_pair_i;
    MultiIndex worst_pair_j;
    bool genuine_witness;
    bool decomposable;
    double decom_margin;
    bool optimal;
    std::optional<MultiIndex> optimal_index;
    double optimal_r;
    std::vector<Violation> violations;
};

ClassificationReport classify_witness(const XMatrix& w, double tol = kVerdictTol);

// <|z><z|, W> for X-shaped W; equals the dense quadratic form of the
// conjugated vector.
double projector_pairing(const XMatrix& w, std::span<const cplx> z);

}  // namespace xw

#endif
