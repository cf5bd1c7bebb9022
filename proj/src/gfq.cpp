#include "rkc/gfq.hpp"

#include <algorithm>
#include <stdexcept>

namespace rkc {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
        if (b != 0 && r > ~0ULL / b) throw std::overflow_error("field cardinality overflows 64 bits");
        r *= b;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

// --- GF(q) polynomial helpers ---

namespace gfpoly {

int degree(const std::vector<int>& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

static void trim(std::vector<int>& p) { p.resize(degree(p) + 1); }

std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b, int q) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
    }
    trim(r);
    return r;
}

std::vector<int> mod(std::vector<int> a, const std::vector<int>& f, int q) {
    int df = degree(f);
    if (df < 0) throw std::invalid_argument("gfpoly::mod by zero");
    // small inverse table for the leading coefficient
    int lead_inv = 0;
    for (int x = 1; x < q; ++x)
        if (f[df] * x % q == 1) lead_inv = x;
    for (int i = degree(a); i >= df; --i) {
        if (a[i] == 0) continue;
        int c = a[i] * lead_inv % q;
        for (int j = 0; j <= df; ++j) a[i - df + j] = ((a[i - df + j] - c * f[j]) % q + q) % q;
    }
    trim(a);
    return a;
}

// g(x)^q mod f via the freshman's dream: coefficients are in GF(q).
static std::vector<int> pow_q_mod(const std::vector<int>& g, const std::vector<int>& f, int q) {
    std::vector<int> s;
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) continue;
        if (s.size() < i * q + 1) s.resize(i * q + 1, 0);
        s[i * q] = g[i];
    }
    return mod(std::move(s), f, q);
}

static std::vector<int> gcd(std::vector<int> a, std::vector<int> b, int q) {
    while (degree(b) >= 0) {
        auto r = mod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const std::vector<int>& f, int q) {
    int m = degree(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // x^{q^m} == x mod f, and gcd(x^{q^{m/p}} - x, f) == 1 for prime p | m
    std::vector<int> x = {0, 1};
    std::vector<int> h = x;
    std::vector<std::vector<int>> power_at(m + 1);  // x^{q^j} mod f
    for (int j = 1; j <= m; ++j) {
        h = pow_q_mod(h, f, q);
        power_at[j] = h;
    }
    std::vector<int> xm = power_at[m];
    if (degree(xm) != 1 || xm[1] != 1 || xm[0] != 0) return false;
    for (std::uint64_t p : prime_factors((std::uint64_t)m)) {
        auto diff = power_at[m / p];
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % q + q) % q;
        trim(diff);
        if (degree(gcd(f, diff, q)) > 0) return false;
    }
    return true;
}

std::vector<int> smallest_irreducible(int q, int m) {
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    // odometer over (c_0, ..., c_{m-1}) in lexicographic order
    std::vector<int> f(m + 1, 0);
    f[m] = 1;
    while (true) {
        if (is_irreducible(f, q)) return f;
        int i = 0;
        while (i < m && f[i] == q - 1) f[i++] = 0;
        if (i == m) throw std::logic_error("no irreducible polynomial found");
        ++f[i];
    }
}

}  // namespace gfpoly

// --- ExtField ---

ExtField::ExtField(int q, int m) : ExtField(q, m, gfpoly::smallest_irreducible(q, m)) {}

ExtField::ExtField(int q, int m, std::vector<int> modulus) : q_(q), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime_supported(q_)) throw std::invalid_argument("unsupported base field size");
    if (m_ < 1) throw std::invalid_argument("extension degree must be >= 1");
    if ((int)modulus_.size() != m_ + 1 || modulus_[m_] != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
    for (int c : modulus_)
        if (c < 0 || c >= q_) throw std::invalid_argument("modulus coefficient out of range");
    if (!gfpoly::is_irreducible(modulus_, q_)) throw std::invalid_argument("modulus is reducible");
    card_ = ipow((std::uint64_t)q_, m_);
    init();
}

void ExtField::init() {
    if (card_ > kTableLimit) return;
    // find a generator of the multiplicative group, then tabulate
    std::uint64_t ord = card_ - 1;
    if (ord == 0) return;
    auto ps = prime_factors(ord);
    Elem gen = 0;
    for (Elem g = 1; g < card_; ++g) {
        bool ok = g != 0;
        for (auto p : ps)
            if (ok && pow_u64(g, ord / p) == 1) ok = false;
        if (ok && pow_u64(g, ord) == 1) {
            gen = g;
            break;
        }
    }
    if (gen == 0) throw std::logic_error("no multiplicative generator found");
    exp_.resize(ord);
    log_.assign(card_, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < ord; ++i) {
        exp_[i] = cur;
        log_[cur] = (std::uint32_t)i;
        cur = mul_generic(cur, gen);
    }
    if (cur != 1) throw std::logic_error("generator order mismatch");
}

int ExtField::coord(Elem a, int i) const {
    if (q_ == 2) return (int)((a >> i) & 1);
    for (int k = 0; k < i; ++k) a /= (unsigned)q_;
    return (int)(a % (unsigned)q_);
}

std::vector<int> ExtField::coords(Elem a) const {
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i) {
        c[i] = (int)(a % (unsigned)q_);
        a /= (unsigned)q_;
    }
    return c;
}

Elem ExtField::from_coords(const std::vector<int>& c) const {
    if ((int)c.size() != m_) throw std::invalid_argument("coordinate count != m");
    Elem a = 0;
    for (int i = m_ - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= q_) throw std::invalid_argument("coordinate out of range");
        a = a * (unsigned)q_ + (unsigned)c[i];
    }
    return a;
}

Elem ExtField::basis_elem(int i) const {
    if (i < 0 || i >= m_) throw std::invalid_argument("basis index out of range");
    return ipow((std::uint64_t)q_, i);
}

void ExtField::check(Elem a) const {
    if (a >= card_) throw std::invalid_argument("element does not belong to this field");
}

Elem ExtField::add(Elem a, Elem b) const {
    if (q_ == 2) return a ^ b;
    Elem r = 0, base = 1;
    for (int i = 0; i < m_; ++i) {
        r += base * ((a % (unsigned)q_ + b % (unsigned)q_) % (unsigned)q_);
        a /= (unsigned)q_;
        b /= (unsigned)q_;
        base *= (unsigned)q_;
    }
    return r;
}

Elem ExtField::neg(Elem a) const {
    if (q_ == 2) return a;
    Elem r = 0, base = 1;
    for (int i = 0; i < m_; ++i) {
        r += base * ((((unsigned)q_ - a % (unsigned)q_) % (unsigned)q_));
        a /= (unsigned)q_;
        base *= (unsigned)q_;
    }
    return r;
}

Elem ExtField::sub(Elem a, Elem b) const {
    if (q_ == 2) return a ^ b;
    return add(a, neg(b));
}

Elem ExtField::mul_generic(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (q_ == 2) {
        // carry-less multiply with reduce-as-you-shift
        Elem acc = 0;
        Elem hi = card_ >> 1;  // bit m-1
        Elem modmask = 0;
        for (int i = 0; i < m_; ++i)
            if (modulus_[i]) modmask |= 1ULL << i;
        while (b) {
            if (b & 1) acc ^= a;
            b >>= 1;
            bool carry = (a & hi) != 0;
            a = (a << 1) & (card_ - 1);
            if (carry) a ^= modmask;
        }
        return acc;
    }
    auto da = coords(a), db = coords(b);
    std::vector<int> prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % q_;
    }
    auto red = gfpoly::mod(std::move(prod), modulus_, q_);
    red.resize(m_, 0);
    return from_coords(red);
}

Elem ExtField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
        std::uint64_t s = (std::uint64_t)log_[a] + log_[b];
        if (s >= order()) s -= order();
        return exp_[s];
    }
    return mul_generic(a, b);
}

Elem ExtField::pow_u64(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul_generic(r, a);
        a = mul_generic(a, a);
        e >>= 1;
    }
    return r;
}

Elem ExtField::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("division by zero in GF(q^m)");
    if (!log_.empty()) return exp_[(order() - log_[a]) % order()];
    return inv_euclid(a);
}

Elem ExtField::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem ExtField::inv_euclid(Elem a) const {
    if (a == 0) throw std::invalid_argument("division by zero in GF(q^m)");
    // extended Euclid over GF(q)[x] on (modulus, a)
    std::vector<int> r0 = modulus_, r1 = coords(a);
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<int> t0 = {}, t1 = {1};
    while (gfpoly::degree(r1) > 0) {
        // one division step: r0 = qq*r1 + r2
        std::vector<int> r2 = r0;
        std::vector<int> qq(std::max<size_t>(r0.size(), 1), 0);
        int d1 = gfpoly::degree(r1);
        int lead_inv = 0;
        for (int x = 1; x < q_; ++x)
            if (r1[d1] * x % q_ == 1) lead_inv = x;
        for (int i = gfpoly::degree(r2); i >= d1; --i) {
            if (r2[i] == 0) continue;
            int c = r2[i] * lead_inv % q_;
            qq[i - d1] = c;
            for (int j = 0; j <= d1; ++j)
                r2[i - d1 + j] = ((r2[i - d1 + j] - c * r1[j]) % q_ + q_) % q_;
            while (!r2.empty() && r2.back() == 0) r2.pop_back();
            if (gfpoly::degree(r2) < i) i = gfpoly::degree(r2) + 1;
        }
        // t2 = t0 - qq*t1
        auto qt = gfpoly::mul(qq, t1, q_);
        std::vector<int> t2(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < t2.size(); ++i) {
            int v0 = i < t0.size() ? t0[i] : 0;
            int v1 = i < qt.size() ? qt[i] : 0;
            t2[i] = ((v0 - v1) % q_ + q_) % q_;
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (gfpoly::degree(r1) != 0) throw std::logic_error("element not invertible (modulus reducible?)");
    int c = r1[0];  // r1 is a nonzero constant; scale t1 by its inverse
    int cinv = 0;
    for (int x = 1; x < q_; ++x)
        if (c * x % q_ == 1) cinv = x;
    std::vector<int> out(m_, 0);
    for (size_t i = 0; i < t1.size() && i < (size_t)m_; ++i) out[i] = t1[i] * cinv % q_;
    auto full = gfpoly::mod(std::move(out), modulus_, q_);
    full.resize(m_, 0);
    return from_coords(full);
}

Elem ExtField::mul_base(Elem a, int c) const {
    if (c < 0 || c >= q_) throw std::invalid_argument("base-field scalar out of range");
    if (c == 0) return 0;
    if (q_ == 2) return a;
    Elem r = 0;
    for (int i = 1; i <= c; ++i) r = add(r, a);
    return r;
}

Elem ExtField::frobenius(Elem a, long i) const {
    long e = ((i % m_) + m_) % m_;
    if (a == 0 || e == 0) return a;
    if (!log_.empty()) {
        std::uint64_t ord = order();
        std::uint64_t p = 1;
        for (long k = 0; k < e; ++k) p = p * (std::uint64_t)q_ % ord;
        return exp_[(std::uint64_t)log_[a] * p % ord];
    }
    Elem r = a;
    for (long k = 0; k < e; ++k) r = pow_u64(r, (std::uint64_t)q_);
    return r;
}

int ExtField::trace(Elem a) const {
    Elem acc = 0, t = a;
    for (int i = 0; i < m_; ++i) {
        acc = add(acc, t);
        t = frobenius(t, 1);
    }
    if (acc >= (unsigned)q_)  // trace must land in the base field
        throw std::logic_error("trace left the base field");
    return (int)acc;
}

std::string ExtField::to_string(Elem a) const {
    std::string s(m_, '0');
    for (int i = 0; i < m_; ++i) {
        s[i] = char('0' + a % (unsigned)q_);
        a /= (unsigned)q_;
    }
    return s;
}

Elem ExtField::parse(const std::string& s) const {
    if ((int)s.size() != m_) throw std::invalid_argument("element string length != m");
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i) {
        if (s[i] < '0' || s[i] >= '0' + q_) throw std::invalid_argument("bad digit in element string");
        c[i] = s[i] - '0';
    }
    return from_coords(c);
}

FieldPtr make_field(int q, int m) { return std::make_shared<const ExtField>(q, m); }

// --- dense GF(q) linear algebra ---

namespace {
inline int modq(int x, int q) { return ((x % q) + q) % q; }

int inv_digit(int x, int q) {
    for (int y = 1; y < q; ++y)
        if (x * y % q == 1) return y;
    throw std::invalid_argument("digit not invertible");
}
}  // namespace

std::vector<int> gf_rref(GfMat& mat) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < mat.cols && r < mat.rows; ++c) {
        int pr = -1;
        for (int i = r; i < mat.rows; ++i)
            if (mat.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < mat.cols; ++j) std::swap(mat.at(pr, j), mat.at(r, j));
        int s = inv_digit(mat.at(r, c), mat.q);
        if (s != 1)
            for (int j = 0; j < mat.cols; ++j) mat.at(r, j) = (std::uint8_t)(mat.at(r, j) * s % mat.q);
        for (int i = 0; i < mat.rows; ++i) {
            if (i == r || mat.at(i, c) == 0) continue;
            int f = mat.at(i, c);
            for (int j = 0; j < mat.cols; ++j)
                mat.at(i, j) = (std::uint8_t)modq(mat.at(i, j) - f * mat.at(r, j), mat.q);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int gf_rank(GfMat mat) { return (int)gf_rref(mat).size(); }

int gf_rank(const std::vector<std::vector<std::uint8_t>>& rows, int q) {
    if (rows.empty()) return 0;
    GfMat m(q, (int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return gf_rank(std::move(m));
}

std::vector<std::vector<std::uint8_t>> gf_nullspace(const GfMat& mat) {
    GfMat m = mat;
    auto pivots = gf_rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint8_t> v(m.cols, 0);
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (std::uint8_t)modq(-(int)m.at((int)r, c), m.q);
        basis.push_back(std::move(v));
    }
    return basis;
}

GfSolve gf_solve(GfMat mat, const std::vector<std::uint8_t>& b) {
    if ((int)b.size() != mat.rows) throw std::invalid_argument("rhs size mismatch");
    GfMat aug(mat.q, mat.rows, mat.cols + 1);
    for (int i = 0; i < mat.rows; ++i) {
        for (int j = 0; j < mat.cols; ++j) aug.at(i, j) = mat.at(i, j);
        aug.at(i, mat.cols) = b[i];
    }
    auto pivots = gf_rref(aug);
    GfSolve out;
    for (int c : pivots)
        if (c == mat.cols) return out;  // inconsistent
    out.ok = true;
    out.x.assign(mat.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) out.x[pivots[r]] = aug.at((int)r, mat.cols);
    return out;
}

GfMat gf_inverse(const GfMat& mat) {
    if (mat.rows != mat.cols) throw std::invalid_argument("inverse of non-square matrix");
    GfMat aug(mat.q, mat.rows, 2 * mat.cols);
    for (int i = 0; i < mat.rows; ++i) {
        for (int j = 0; j < mat.cols; ++j) aug.at(i, j) = mat.at(i, j);
        aug.at(i, mat.cols + i) = 1;
    }
    auto pivots = gf_rref(aug);
    if ((int)pivots.size() != mat.rows || pivots.back() != mat.cols - 1)
        throw std::invalid_argument("matrix is singular");
    GfMat inv(mat.q, mat.rows, mat.cols);
    for (int i = 0; i < mat.rows; ++i)
        for (int j = 0; j < mat.cols; ++j) inv.at(i, j) = aug.at(i, mat.cols + j);
    return inv;
}

}  // namespace rkc
