#ifndef RKC_LINPOLY_HPP
#define RKC_LINPOLY_HPP

#include "rkc/gfq.hpp"

#include <string>
#include <vector>

namespace rkc {

/// Linearized polynomial sum_i c[i] x^{q^i} over GF(q^m). The evaluation map
/// is GF(q)-linear; the ring operation is composition, which does not
/// commute. Coefficients are kept trimmed: empty() means the zero polynomial
/// and q_degree() is -1 for it.
struct LinPoly {
    std::vector<Elem> c;

    int q_degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    Elem lead() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    static LinPoly zero() { return {}; }
    static LinPoly identity() { return {{1}}; }
    static LinPoly monomial(Elem coeff, int qdeg);
};

namespace linpoly {

Elem eval(const ExtField& f, const LinPoly& p, Elem a);
LinPoly add(const ExtField& f, const LinPoly& a, const LinPoly& b);
LinPoly sub(const ExtField& f, const LinPoly& a, const LinPoly& b);
LinPoly scale(const ExtField& f, Elem c, const LinPoly& p);  // (c x) o p

/// Composition p o r: eval(result, a) = eval(p, eval(r, a)); q-degrees add.
LinPoly compose(const ExtField& f, const LinPoly& p, const LinPoly& r);

/// Right division a = (quot o b) + rem with q_degree(rem) < q_degree(b).
struct DivResult {
    LinPoly quot, rem;
};
DivResult right_divide(const ExtField& f, const LinPoly& a, const LinPoly& b);

/// Extended Euclidean algorithm on the remainder sequence of (a, b) under
/// right division, maintaining r = (u o a) + (v o b) at every step. Advances
/// while the current remainder is nonzero with q_degree >= stop_degree; if
/// the remainder sequence hits zero, the previous row (whose r is a greatest
/// common symbolic divisor) is returned.
struct EeaResult {
    LinPoly u, v, r;
};
EeaResult eea(const ExtField& f, const LinPoly& a, const LinPoly& b, int stop_degree);

/// GF(q)-basis of {a : p(a) = 0}, via the null space of the m x m coordinate
/// matrix of the evaluation map. Dimension is at most q_degree(p).
std::vector<Elem> root_space_basis(const ExtField& f, const LinPoly& p);

std::string to_string(const ExtField& f, const LinPoly& p);  // "c0 + c1*X^[1] + ..."

}  // namespace linpoly

}  // namespace rkc

#endif
