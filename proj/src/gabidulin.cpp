#include "rkc/gabidulin.hpp"

#include <json.hpp>

#include <stdexcept>

namespace rkc {

namespace {

// Gaussian elimination over GF(q^m): kernel vector of an (n-1) x n matrix
// whose null space has dimension exactly 1.
std::vector<Elem> kernel_vector(const ExtField& f, std::vector<std::vector<Elem>> mat, int cols) {
    int rows = (int)mat.size();
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (mat[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(mat[pr], mat[r]);
        Elem s = f.inv(mat[r][c]);
        for (int j = 0; j < cols; ++j) mat[r][j] = f.mul(mat[r][j], s);
        for (int i = 0; i < rows; ++i) {
            if (i == r || mat[i][c] == 0) continue;
            Elem fac = mat[i][c];
            for (int j = 0; j < cols; ++j)
                mat[i][j] = f.sub(mat[i][j], f.mul(fac, mat[r][j]));
        }
        pivot_col[r] = c;
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < r; ++i) is_pivot[pivot_col[i]] = true;
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col < 0) throw std::logic_error("parity system has a trivial kernel");
    std::vector<Elem> v(cols, 0);
    v[free_col] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = f.neg(mat[i][free_col]);
    return v;
}

}  // namespace

GabidulinCode build_code(FieldPtr field, int n, int k) {
    const ExtField& f = *field;
    if (n < 1 || n > f.m()) throw std::invalid_argument("need 1 <= n <= m");
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    GabidulinCode code;
    code.field = field;
    code.n = n;
    code.k = k;
    code.d = n - k + 1;
    code.t = (code.d - 1) / 2;
    code.g.resize(n);
    for (int j = 0; j < n; ++j) code.g[j] = f.basis_elem(j);
    code.generator.assign(k, std::vector<Elem>(n));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) code.generator[i][j] = f.frobenius(code.g[j], i);

    if (code.d > 1) {
        // h spans the kernel of the Moore system sum_j g_j^{q^p} h_j = 0,
        // p = -(d-2) .. k-1; this makes every codeword orthogonal to all
        // q-power shifts h^{q^l}, l = 0..d-2.
        std::vector<std::vector<Elem>> mat;
        for (int p = -(code.d - 2); p <= k - 1; ++p) {
            std::vector<Elem> row(n);
            for (int j = 0; j < n; ++j) row[j] = f.frobenius(code.g[j], p);
            mat.push_back(std::move(row));
        }
        code.h = kernel_vector(f, std::move(mat), n);
        if (rank_norm(f, code.h) != n)
            throw std::logic_error("parity vector is not GF(q)-independent");
        code.h_expansion = expand(RankVector{field, code.h});
        GfMat aug(f.q(), f.m(), n + f.m());
        for (int i = 0; i < f.m(); ++i) {
            for (int j = 0; j < n; ++j) aug.at(i, j) = code.h_expansion.at(i, j);
            aug.at(i, n + i) = 1;
        }
        code.h_pivots = gf_rref(aug);
        code.h_rref = std::move(aug);
    }
    return code;
}

GabidulinCode build_code(int q, int m, int n, int k) { return build_code(make_field(q, m), n, k); }

RankVector encode(const GabidulinCode& code, const std::vector<Elem>& message) {
    if ((int)message.size() != code.k) throw std::invalid_argument("message length != k");
    const ExtField& f = *code.field;
    std::vector<Elem> c(code.n, 0);
    for (int i = 0; i < code.k; ++i) {
        if (message[i] == 0) continue;
        f.check(message[i]);
        for (int j = 0; j < code.n; ++j)
            c[j] = f.add(c[j], f.mul(message[i], code.generator[i][j]));
    }
    return RankVector{code.field, std::move(c)};
}

std::vector<Elem> syndromes(const GabidulinCode& code, const RankVector& received) {
    if (received.n() != code.n) throw std::invalid_argument("received length != n");
    if (*received.field != *code.field) throw std::invalid_argument("field mismatch");
    const ExtField& f = *code.field;
    std::vector<Elem> s(code.d - 1, 0);
    for (int l = 0; l < code.d - 1; ++l) {
        Elem acc = 0;
        for (int j = 0; j < code.n; ++j)
            acc = f.add(acc, f.mul(received.entries[j], f.frobenius(code.h[j], l)));
        s[l] = acc;
    }
    return s;
}

const char* to_string(DecodeFailure fr) {
    switch (fr) {
        case DecodeFailure::none: return "none";
        case DecodeFailure::degenerate_span: return "degenerate_span";
        case DecodeFailure::locator_inconsistent: return "locator_inconsistent";
        case DecodeFailure::rank_exceeds_capability: return "rank_exceeds_capability";
        case DecodeFailure::residual_syndrome: return "residual_syndrome";
    }
    return "?";
}

namespace {

DecodeOutcome fail(DecodeFailure reason) {
    DecodeOutcome out;
    out.reason = reason;
    return out;
}

// Expands x over the h_j: x = sum_j y_j h_j with y_j in GF(q). The RREF of
// [H | I] precomputed at build is [R H | R] with R the cumulative row-op
// matrix; since H has full column rank, rows < n read off y and rows >= n
// are consistency checks. Returns false when x is outside the span of h.
bool expand_over_h(const GabidulinCode& code, Elem x, std::vector<std::uint8_t>& y) {
    const ExtField& f = *code.field;
    const int m = f.m(), n = code.n, q = f.q();
    std::vector<int> xc = f.coords(x);
    y.assign(n, 0);
    for (int i = 0; i < m; ++i) {
        int acc = 0;
        for (int j2 = 0; j2 < m; ++j2) {
            int w = code.h_rref.at(i, n + j2);
            if (w) acc += w * xc[j2];
        }
        acc %= q;
        if (i < n) {
            y[i] = (std::uint8_t)acc;
        } else if (acc != 0) {
            return false;  // x is not a GF(q)-combination of the h_j
        }
    }
    return true;
}

}  // namespace

DecodeOutcome decode(const GabidulinCode& code, const RankVector& received) {
    const ExtField& f = *code.field;
    if (received.n() != code.n) throw std::invalid_argument("received length != n");
    if (*received.field != *code.field) throw std::invalid_argument("field mismatch");

    if (code.d == 1)
        return DecodeOutcome{true, received, zero_vector(code.field, code.n), DecodeFailure::none};

    std::vector<Elem> s = syndromes(code, received);
    LinPoly spoly;
    spoly.c = s;
    spoly.trim();
    if (spoly.is_zero())
        return DecodeOutcome{true, received, zero_vector(code.field, code.n), DecodeFailure::none};

    // key equation: run the EEA on (x^{[d-1]}, S) down to q-degree d-1-t;
    // the Bezout cofactor of S is the error span polynomial
    auto res = linpoly::eea(f, LinPoly::monomial(1, code.d - 1), spoly, code.d - 1 - code.t);
    LinPoly span = res.v;
    if (span.is_zero()) return fail(DecodeFailure::degenerate_span);

    std::vector<Elem> values = linpoly::root_space_basis(f, span);
    int w = (int)values.size();
    if (w != span.q_degree()) return fail(DecodeFailure::degenerate_span);
    if (w > code.t) return fail(DecodeFailure::rank_exceeds_capability);

    // locator recovery: s_l = sum_p values[p] * x_p^{q^l}; taking the q^{-l}
    // root of each equation makes the system linear in the x_p
    std::vector<std::vector<Elem>> sys(w, std::vector<Elem>(w + 1));
    for (int l = 0; l < w; ++l) {
        for (int p = 0; p < w; ++p) sys[l][p] = f.frobenius(values[p], -l);
        sys[l][w] = f.frobenius(s[l], -l);
    }
    // solve the w x w system by elimination
    std::vector<Elem> locators(w, 0);
    {
        int r = 0;
        std::vector<int> pivot_col(w, -1);
        for (int c = 0; c < w && r < w; ++c) {
            int pr = -1;
            for (int i = r; i < w; ++i)
                if (sys[i][c] != 0) {
                    pr = i;
                    break;
                }
            if (pr < 0) return fail(DecodeFailure::locator_inconsistent);
            std::swap(sys[pr], sys[r]);
            Elem sc = f.inv(sys[r][c]);
            for (int j = 0; j <= w; ++j) sys[r][j] = f.mul(sys[r][j], sc);
            for (int i = 0; i < w; ++i) {
                if (i == r || sys[i][c] == 0) continue;
                Elem fac = sys[i][c];
                for (int j = 0; j <= w; ++j) sys[i][j] = f.sub(sys[i][j], f.mul(fac, sys[r][j]));
            }
            pivot_col[r] = c;
            ++r;
        }
        for (int i = 0; i < r; ++i) locators[pivot_col[i]] = sys[i][w];
    }
    // the remaining syndrome equations are overdetermined consistency checks
    for (int l = w; l < code.d - 1; ++l) {
        Elem acc = 0;
        for (int p = 0; p < w; ++p)
            acc = f.add(acc, f.mul(values[p], f.frobenius(locators[p], l)));
        if (acc != s[l]) return fail(DecodeFailure::locator_inconsistent);
    }

    // each locator must expand over h with GF(q) coefficients
    std::vector<std::vector<std::uint8_t>> y(w);
    for (int p = 0; p < w; ++p)
        if (!expand_over_h(code, locators[p], y[p]))
            return fail(DecodeFailure::locator_inconsistent);

    std::vector<Elem> err(code.n, 0);
    for (int j = 0; j < code.n; ++j)
        for (int p = 0; p < w; ++p)
            if (y[p][j]) err[j] = f.add(err[j], f.mul_base(values[p], y[p][j]));
    if (rank_norm(f, err) > code.t) return fail(DecodeFailure::rank_exceeds_capability);

    RankVector error{code.field, std::move(err)};
    RankVector codeword = vec_sub(received, error);
    for (Elem sl : syndromes(code, codeword))
        if (sl != 0) return fail(DecodeFailure::residual_syndrome);
    return DecodeOutcome{true, std::move(codeword), std::move(error), DecodeFailure::none};
}

std::vector<Elem> solve_message(const GabidulinCode& code, const RankVector& codeword) {
    const ExtField& f = *code.field;
    if (codeword.n() != code.n) throw std::invalid_argument("codeword length != n");
    // the leading k x k block of the generator is a Moore matrix of the
    // independent g_0..g_{k-1}, hence invertible
    std::vector<std::vector<Elem>> sys(code.k, std::vector<Elem>(code.k + 1));
    for (int j = 0; j < code.k; ++j) {
        for (int i = 0; i < code.k; ++i) sys[j][i] = code.generator[i][j];
        sys[j][code.k] = codeword.entries[j];
    }
    for (int r = 0; r < code.k; ++r) {
        int pr = -1;
        for (int i = r; i < code.k; ++i)
            if (sys[i][r] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) throw std::logic_error("generator block is singular");
        std::swap(sys[pr], sys[r]);
        Elem sc = f.inv(sys[r][r]);
        for (int j = 0; j <= code.k; ++j) sys[r][j] = f.mul(sys[r][j], sc);
        for (int i = 0; i < code.k; ++i) {
            if (i == r || sys[i][r] == 0) continue;
            Elem fac = sys[i][r];
            for (int j = 0; j <= code.k; ++j) sys[i][j] = f.sub(sys[i][j], f.mul(fac, sys[r][j]));
        }
    }
    std::vector<Elem> msg(code.k);
    for (int i = 0; i < code.k; ++i) msg[i] = sys[i][code.k];
    if (!(encode(code, msg) == codeword))
        throw std::invalid_argument("word is not in the code");
    return msg;
}

std::string code_to_json(const GabidulinCode& code) {
    nlohmann::json j;
    j["q"] = code.field->q();
    j["m"] = code.field->m();
    j["n"] = code.n;
    j["k"] = code.k;
    j["modulus"] = code.field->modulus();
    std::vector<std::string> g;
    for (Elem e : code.g) g.push_back(code.field->to_string(e));
    j["g"] = g;
    return j.dump();
}

GabidulinCode code_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    auto field = std::make_shared<const ExtField>(j.at("q").get<int>(), j.at("m").get<int>(),
                                                  j.at("modulus").get<std::vector<int>>());
    GabidulinCode code = build_code(field, j.at("n").get<int>(), j.at("k").get<int>());
    auto g = j.at("g").get<std::vector<std::string>>();
    for (int i = 0; i < code.n; ++i)
        if (field->parse(g[i]) != code.g[i])
            throw std::invalid_argument("serialized evaluation vector does not match");
    return code;
}

}  // namespace rkc
