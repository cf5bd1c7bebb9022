#ifndef RKC_BOUNDS_HPP
#define RKC_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rkc::bounds {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Parameter bundle for a length-n dimension-k rank-metric code over
/// GF(q^m): d = n-k+1, r = n-k, t = floor((d-1)/2). Requires n <= m.
struct BoundParams {
    int q, m, n, k;
    int d, r, t;

    BoundParams(int q_, int m_, int n_, int k_);
};

/// Number of v-dimensional subspaces of GF(q)^n; 0 when v is out of range.
BigInt gaussian_binomial(int n, int v, int q);

/// A(m,u) = prod_{i<u} (q^m - q^i); ordered u-tuples of independent elements.
/// 0 when u > m.
BigInt a_mu(int m, int u, int q);

/// Number of vectors in GF(q^m)^n of rank exactly u.
BigInt num_rank_u(int n, int m, int q, int u);

/// Volume of a rank-metric ball of radius t in GF(q^m)^n.
BigInt ball_volume(int n, int m, int t, int q);

/// sigma(q) = (1/ln q) * sum_{k>=1} 1/(k(q^k-1)), summed until the tail
/// bound drops below 1e-12.
double sigma_q(int q);

/// Upper bound on the number of codewords of rank u in an MRD code:
/// [n u] (q^m-1)^{u-r}, valid for u >= d.
BigInt rank_dist_bound(const BoundParams& p, int u);

/// Upper bound on the number of decodable vectors of rank u.
/// For u >= d this is [n u](q^m-1)^{u-r} V_t; for d-t <= u < d it is the
/// double-sum bound over restrictions (exact rational, since the inner
/// exponent w-r' may be negative). cor2 carries the closed-form relaxation
/// q^2/(q^2-1) [n u](q^m-1)^{u-r} V_t for comparison.
struct DuBound {
    BigRat value;
    BigRat cor2;
    bool from_sum = false;  // true when the double-sum branch applied
    BigInt floor_value() const;
};
DuBound du_bound(const BoundParams& p, int u);

/// Probability (or count) carried both in log base q and, when the quantity
/// is rational, exactly. The two views agree to ~1e-12 relative.
struct LogProb {
    double log_q = 0.0;
    double approx = 0.0;  // q^log_q
    std::optional<BigRat> exact;
};

/// Decoder error probability bounds for error rank u >= d-t:
/// regime = q^2/(q^2-1) (q^m-1)^{u-r} V_t / A(m,u)  for d-t <= u < d,
///          (q^m-1)^{u-r} V_t / A(m,u)              for u >= d;
/// global  = q^{-t^2 + 2 sigma(q)}, independent of u and m.
struct PeBound {
    LogProb regime;
    bool tail_regime = false;  // true when the u >= d branch applied
    LogProb global;
};
PeBound pe_bound(const BoundParams& p, int u);

/// log2 of a positive big integer / rational, accurate to ~1e-15 relative.
double log2_big(const BigInt& x);
double log2_big(const BigRat& x);

/// Sweep report for the two in-proof combinatorial facts:
/// sum_w [v w][u s-w] q^{w(u-s+w)} = [v+u s]   (q-Vandermonde), and
/// q^{ms} <= q^2/(q^2-1) A(m,s) for s <= m/2.
struct IdentityReport {
    long vandermonde_checked = 0;
    long power_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
IdentityReport identity_checks(int max_vu, int max_m, const std::vector<int>& qs);

}  // namespace rkc::bounds

#endif
