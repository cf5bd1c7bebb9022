#include "rkc/linpoly.hpp"

#include <stdexcept>

namespace rkc {

LinPoly LinPoly::monomial(Elem coeff, int qdeg) {
    if (coeff == 0) return zero();
    LinPoly p;
    p.c.assign(qdeg + 1, 0);
    p.c[qdeg] = coeff;
    return p;
}

namespace linpoly {

Elem eval(const ExtField& f, const LinPoly& p, Elem a) {
    Elem acc = 0, t = a;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] != 0) acc = f.add(acc, f.mul(p.c[i], t));
        t = f.frobenius(t, 1);
    }
    return acc;
}

LinPoly add(const ExtField& f, const LinPoly& a, const LinPoly& b) {
    LinPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        Elem x = i < a.c.size() ? a.c[i] : 0;
        Elem y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = f.add(x, y);
    }
    r.trim();
    return r;
}

LinPoly sub(const ExtField& f, const LinPoly& a, const LinPoly& b) {
    LinPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        Elem x = i < a.c.size() ? a.c[i] : 0;
        Elem y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = f.sub(x, y);
    }
    r.trim();
    return r;
}

LinPoly scale(const ExtField& f, Elem c, const LinPoly& p) {
    LinPoly r;
    if (c == 0) return r;
    r.c.resize(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r.c[i] = f.mul(c, p.c[i]);
    r.trim();
    return r;
}

LinPoly compose(const ExtField& f, const LinPoly& p, const LinPoly& r) {
    if (p.is_zero() || r.is_zero()) return LinPoly::zero();
    LinPoly out;
    out.c.assign(p.c.size() + r.c.size() - 1, 0);
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        for (size_t j = 0; j < r.c.size(); ++j) {
            if (r.c[j] == 0) continue;
            out.c[i + j] = f.add(out.c[i + j], f.mul(p.c[i], f.frobenius(r.c[j], (long)i)));
        }
    }
    out.trim();
    return out;
}

DivResult right_divide(const ExtField& f, const LinPoly& a, const LinPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("right division by the zero polynomial");
    DivResult res;
    res.rem = a;
    if (a.q_degree() < b.q_degree()) return res;
    res.quot.c.assign(a.q_degree() - b.q_degree() + 1, 0);
    while (!res.rem.is_zero() && res.rem.q_degree() >= b.q_degree()) {
        int e = res.rem.q_degree() - b.q_degree();
        Elem c = f.div(res.rem.lead(), f.frobenius(b.lead(), e));
        res.quot.c[e] = f.add(res.quot.c[e], c);
        // rem -= (c x^{[e]}) o b
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            res.rem.c[j + e] = f.sub(res.rem.c[j + e], f.mul(c, f.frobenius(b.c[j], e)));
        }
        res.rem.trim();
    }
    res.quot.trim();
    return res;
}

EeaResult eea(const ExtField& f, const LinPoly& a, const LinPoly& b, int stop_degree) {
    if (stop_degree < 0) throw std::invalid_argument("stop_degree must be >= 0");
    if (!b.is_zero() && a.q_degree() < b.q_degree())
        throw std::invalid_argument("eea requires q_degree(a) >= q_degree(b)");
    EeaResult prev{LinPoly::identity(), LinPoly::zero(), a};
    EeaResult cur{LinPoly::zero(), LinPoly::identity(), b};
    while (!cur.r.is_zero() && cur.r.q_degree() >= stop_degree) {
        auto [quot, rem] = right_divide(f, prev.r, cur.r);
        EeaResult next{sub(f, prev.u, compose(f, quot, cur.u)),
                       sub(f, prev.v, compose(f, quot, cur.v)), rem};
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur.r.is_zero() ? prev : cur;
}

std::vector<Elem> root_space_basis(const ExtField& f, const LinPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root space of the zero polynomial");
    const int m = f.m();
    GfMat mat(f.q(), m, m);
    for (int j = 0; j < m; ++j) {
        Elem img = eval(f, p, f.basis_elem(j));
        for (int i = 0; i < m; ++i) {
            mat.at(i, j) = (std::uint8_t)(img % (unsigned)f.q());
            img /= (unsigned)f.q();
        }
    }
    std::vector<Elem> basis;
    for (const auto& v : gf_nullspace(mat)) {
        std::vector<int> coords(v.begin(), v.end());
        basis.push_back(f.from_coords(coords));
    }
    return basis;
}

std::string to_string(const ExtField& f, const LinPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += f.to_string(p.c[i]);
        if (i > 0) s += "*X^[" + std::to_string(i) + "]";
    }
    return s;
}

}  // namespace linpoly

}  // namespace rkc
