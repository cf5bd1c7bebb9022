#ifndef RKC_GFQ_HPP
#define RKC_GFQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rkc {

// Dense element handle for GF(q^m): the integer whose base-q digits are the
// coordinates w.r.t. the polynomial basis (1, a, ..., a^{m-1}), constant
// term first.  elem = sum coords[i] * q^i.
using Elem = std::uint64_t;

/// Arithmetic in GF(q) for prime q and in the extension GF(q^m).
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree m over GF(q) (coefficients compared from the constant term
/// upward), so serialized data is portable. Fields with q^m below an internal
/// threshold precompute discrete log/antilog tables; larger fields fall back
/// to polynomial arithmetic. Descriptors are immutable after construction and
/// all operations are pure, so a field may be shared freely across threads.
class ExtField {
  public:
    ExtField(int q, int m);
    ExtField(int q, int m, std::vector<int> modulus);  // c0..cm, monic

    int q() const { return q_; }
    int m() const { return m_; }
    std::uint64_t cardinality() const { return card_; }
    std::uint64_t order() const { return card_ - 1; }  // multiplicative group
    const std::vector<int>& modulus() const { return modulus_; }

    bool operator==(const ExtField& o) const {
        return q_ == o.q_ && m_ == o.m_ && modulus_ == o.modulus_;
    }
    bool operator!=(const ExtField& o) const { return !(*this == o); }

    // coordinates
    int coord(Elem a, int i) const;
    std::vector<int> coords(Elem a) const;
    Elem from_coords(const std::vector<int>& c) const;
    Elem basis_elem(int i) const;  // a^i, 0 <= i < m

    // arithmetic; operands must satisfy check(a)
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;          // nonzero a
    Elem div(Elem a, Elem b) const;  // nonzero b
    Elem mul_base(Elem a, int c) const;  // scalar from GF(q)
    Elem pow_u64(Elem a, std::uint64_t e) const;

    /// a^{q^i}; i may be any integer, reduced mod m (x^{q^m} = x).
    Elem frobenius(Elem a, long i) const;
    /// Tr(a) = sum_{i<m} a^{q^i}, always in GF(q); returned as a digit.
    int trace(Elem a) const;

    /// Inverse by extended Euclid on coordinate polynomials; independent of
    /// the table route, cross-checked in tests.
    Elem inv_euclid(Elem a) const;

    /// Throws std::invalid_argument unless a is an element of this field.
    void check(Elem a) const;

    bool has_tables() const { return !log_.empty(); }

    // little-endian digit string, constant term first ("1011" for m=4)
    std::string to_string(Elem a) const;
    Elem parse(const std::string& s) const;

    static bool is_prime_supported(int q) { return q == 2 || q == 3 || q == 5; }

  private:
    void init();
    Elem mul_generic(Elem a, Elem b) const;

    int q_ = 0;
    int m_ = 0;
    std::uint64_t card_ = 0;
    std::vector<int> modulus_;           // degree m, monic; modulus_[i] = c_i
    std::vector<std::uint32_t> log_;     // log_[elem], elem > 0
    std::vector<std::uint64_t> exp_;     // exp_[i] = gen^i, i < order
};

using FieldPtr = std::shared_ptr<const ExtField>;

FieldPtr make_field(int q, int m);

// --- GF(q) polynomial helpers (dense digit vectors, coeff[i] = degree i) ---

namespace gfpoly {
int degree(const std::vector<int>& p);  // -1 for zero
std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b, int q);
std::vector<int> mod(std::vector<int> a, const std::vector<int>& f, int q);
bool is_irreducible(const std::vector<int>& f, int q);
/// Lexicographically smallest monic irreducible of degree m over GF(q),
/// coefficients compared constant-term first.
std::vector<int> smallest_irreducible(int q, int m);
}  // namespace gfpoly

// --- dense matrices over GF(q) ---

struct GfMat {
    int q = 2;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a;

    GfMat() = default;
    GfMat(int q_, int r, int c) : q(q_), rows(r), cols(c), a((size_t)r * c, 0) {}
    std::uint8_t& at(int r, int c) { return a[(size_t)r * cols + c]; }
    std::uint8_t at(int r, int c) const { return a[(size_t)r * cols + c]; }
    bool operator==(const GfMat& o) const {
        return q == o.q && rows == o.rows && cols == o.cols && a == o.a;
    }
};

/// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<int> gf_rref(GfMat& mat);
int gf_rank(GfMat mat);
int gf_rank(const std::vector<std::vector<std::uint8_t>>& rows, int q);
/// Basis of the right null space {x : M x = 0}, one vector per column.
std::vector<std::vector<std::uint8_t>> gf_nullspace(const GfMat& mat);
/// Solves M x = b; empty optional when inconsistent. M is not assumed square.
struct GfSolve {
    bool ok = false;
    std::vector<std::uint8_t> x;
};
GfSolve gf_solve(GfMat mat, const std::vector<std::uint8_t>& b);
/// Inverse of a square matrix; throws std::invalid_argument if singular.
GfMat gf_inverse(const GfMat& mat);

}  // namespace rkc

#endif
