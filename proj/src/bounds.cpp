#include "rkc/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace rkc::bounds {

namespace {

BigInt qpow(int q, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= q;
    return r;
}

/// x^e for integer e of either sign.
BigRat rat_pow(const BigInt& x, long e) {
    if (e >= 0) return BigRat(boost::multiprecision::pow(x, (unsigned)e));
    return BigRat(1, boost::multiprecision::pow(x, (unsigned)(-e)));
}

}  // namespace

BoundParams::BoundParams(int q_, int m_, int n_, int k_) : q(q_), m(m_), n(n_), k(k_) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (n < 1 || m < 1 || n > m) throw std::invalid_argument("need 1 <= n <= m");
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    d = n - k + 1;
    r = n - k;
    t = (d - 1) / 2;
}

BigInt gaussian_binomial(int n, int v, int q) {
    if (v < 0 || v > n || n < 0) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < v; ++i) {
        num *= qpow(q, n) - qpow(q, i);
        den *= qpow(q, v) - qpow(q, i);
    }
    return num / den;
}

BigInt a_mu(int m, int u, int q) {
    if (u < 0 || u > m) return 0;
    BigInt r = 1;
    for (int i = 0; i < u; ++i) r *= qpow(q, m) - qpow(q, i);
    return r;
}

BigInt num_rank_u(int n, int m, int q, int u) {
    if (u < 0 || u > std::min(m, n)) throw std::out_of_range("rank out of range");
    return gaussian_binomial(n, u, q) * a_mu(m, u, q);
}

BigInt ball_volume(int n, int m, int t, int q) {
    if (t < 0 || t > std::min(m, n)) throw std::out_of_range("radius out of range");
    BigInt v = 0;
    for (int i = 0; i <= t; ++i) v += num_rank_u(n, m, q, i);
    return v;
}

double sigma_q(int q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    const double lnq = std::log((double)q);
    double sum = 0.0;
    for (int k = 1;; ++k) {
        double qk = std::pow((double)q, k);
        double term = 1.0 / (k * (qk - 1.0));
        sum += term;
        double tail = 1.0 / (k * (qk - 1.0) * (q - 1)) / lnq;
        if (tail < 1e-12) break;
        if (k > 256) break;  // unreachable for q >= 2
    }
    return sum / lnq;
}

BigInt rank_dist_bound(const BoundParams& p, int u) {
    if (u < p.d) throw std::out_of_range("rank-distribution bound requires u >= d");
    BigInt f = boost::multiprecision::pow(qpow(p.q, p.m) - 1, (unsigned)(u - p.r));
    return gaussian_binomial(p.n, u, p.q) * f;
}

BigInt DuBound::floor_value() const {
    return boost::multiprecision::numerator(value) / boost::multiprecision::denominator(value);
}

DuBound du_bound(const BoundParams& p, int u) {
    if (u < p.d - p.t) throw std::out_of_range("decodable-count bound requires u >= d-t");
    if (u > p.n) throw std::out_of_range("u exceeds the code length");
    DuBound out;
    BigInt qm1 = qpow(p.q, p.m) - 1;
    BigInt vt = ball_volume(p.n, p.m, p.t, p.q);
    out.cor2 = BigRat(qpow(p.q, 2), qpow(p.q, 2) - 1) * gaussian_binomial(p.n, u, p.q) *
               rat_pow(qm1, u - p.r) * vt;
    if (u >= p.d) {
        out.value = BigRat(rank_dist_bound(p, u) * vt);
        return out;
    }
    out.from_sum = true;
    int v = p.n - u;
    int rp = p.r - u;
    BigRat total = 0;
    for (int w = p.d - u; w <= p.t; ++w) {
        BigRat inner = 0;
        for (int s = w; s <= p.t; ++s)
            inner += BigRat(gaussian_binomial(u, s - w, p.q) * a_mu(p.m, s - w, p.q) *
                            qpow(p.q, (long)w * (u - s + w)));
        total += BigRat(gaussian_binomial(v, w, p.q)) * rat_pow(qm1, w - rp) * inner;
    }
    out.value = BigRat(gaussian_binomial(p.n, u, p.q)) * total;
    return out;
}

double log2_big(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log of non-positive value");
    size_t bits = boost::multiprecision::msb(x);
    if (bits <= 52) return std::log2(x.convert_to<double>());
    BigInt top = x >> (bits - 52);
    return std::log2(top.convert_to<double>()) + (double)(bits - 52);
}

double log2_big(const BigRat& x) {
    return log2_big(boost::multiprecision::numerator(x)) -
           log2_big(boost::multiprecision::denominator(x));
}

PeBound pe_bound(const BoundParams& p, int u) {
    if (u < p.d - p.t) throw std::out_of_range("error-probability bound requires u >= d-t");
    if (u > p.n) throw std::out_of_range("u exceeds the code length");
    PeBound out;
    BigInt qm1 = qpow(p.q, p.m) - 1;
    BigRat val = rat_pow(qm1, u - p.r) * ball_volume(p.n, p.m, p.t, p.q) / a_mu(p.m, u, p.q);
    out.tail_regime = u >= p.d;
    if (!out.tail_regime) val *= BigRat(qpow(p.q, 2), qpow(p.q, 2) - 1);
    out.regime.exact = val;
    out.regime.log_q = log2_big(val) / std::log2((double)p.q);
    out.regime.approx = std::pow((double)p.q, out.regime.log_q);
    out.global.log_q = -(double)p.t * p.t + 2.0 * sigma_q(p.q);
    out.global.approx = std::pow((double)p.q, out.global.log_q);
    out.global.exact = std::nullopt;
    if (out.regime.log_q > out.global.log_q + 1e-9)
        throw std::logic_error("regime bound exceeds the global t^2 bound");
    return out;
}

IdentityReport identity_checks(int max_vu, int max_m, const std::vector<int>& qs) {
    IdentityReport rep;
    for (int q : qs) {
        for (int v = 0; v <= max_vu; ++v)
            for (int u = 0; u <= max_vu; ++u)
                for (int s = 0; s <= v + u; ++s) {
                    BigInt lhs = 0;
                    for (int w = 0; w <= s; ++w)
                        lhs += gaussian_binomial(v, w, q) * gaussian_binomial(u, s - w, q) *
                               qpow(q, (long)w * (u - s + w));
                    BigInt rhs = gaussian_binomial(v + u, s, q);
                    ++rep.vandermonde_checked;
                    if (lhs != rhs)
                        rep.violations.push_back("vandermonde q=" + std::to_string(q) + " v=" +
                                                 std::to_string(v) + " u=" + std::to_string(u) +
                                                 " s=" + std::to_string(s));
                }
        for (int m = 1; m <= max_m; ++m)
            for (int s = 0; s <= m / 2; ++s) {
                BigInt lhs = qpow(q, (long)m * s) * (qpow(q, 2) - 1);
                BigInt rhs = qpow(q, 2) * a_mu(m, s, q);
                ++rep.power_checked;
                if (lhs > rhs)
                    rep.violations.push_back("qms q=" + std::to_string(q) + " m=" +
                                             std::to_string(m) + " s=" + std::to_string(s));
            }
    }
    return rep;
}

}  // namespace rkc::bounds
