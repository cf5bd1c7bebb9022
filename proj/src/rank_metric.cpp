#include "rkc/rank_metric.hpp"

#include <sstream>
#include <stdexcept>

namespace rkc {

RankVector make_vector(FieldPtr field, std::vector<Elem> entries) {
    if (entries.empty()) throw std::invalid_argument("vector length must be >= 1");
    for (Elem e : entries) field->check(e);
    return RankVector{std::move(field), std::move(entries)};
}

RankVector zero_vector(FieldPtr field, int n) {
    if (n < 1) throw std::invalid_argument("vector length must be >= 1");
    return RankVector{std::move(field), std::vector<Elem>(n, 0)};
}

GfMat expand(const RankVector& x) {
    const ExtField& f = *x.field;
    GfMat mat(f.q(), f.m(), x.n());
    for (int j = 0; j < x.n(); ++j) {
        Elem v = x.entries[j];
        for (int i = 0; i < f.m(); ++i) {
            mat.at(i, j) = (std::uint8_t)(v % (unsigned)f.q());
            v /= (unsigned)f.q();
        }
    }
    return mat;
}

RankVector assemble(FieldPtr field, const GfMat& mat) {
    if (mat.rows != field->m()) throw std::invalid_argument("row count != m");
    std::vector<Elem> entries(mat.cols);
    for (int j = 0; j < mat.cols; ++j) {
        Elem v = 0;
        for (int i = mat.rows - 1; i >= 0; --i) v = v * (unsigned)field->q() + mat.at(i, j);
        entries[j] = v;
    }
    return RankVector{std::move(field), std::move(entries)};
}

int rank_norm(const ExtField& f, const std::vector<Elem>& entries) {
    if (f.q() == 2) {
        // over GF(2) the entry values are the expansion columns; xor basis
        std::vector<std::uint64_t> basis;
        for (Elem e : entries) {
            std::uint64_t v = e;
            for (std::uint64_t p : basis) v = std::min(v, v ^ p);
            if (v) basis.push_back(v);
        }
        return (int)basis.size();
    }
    GfMat mat(f.q(), f.m(), (int)entries.size());
    for (int j = 0; j < (int)entries.size(); ++j) {
        Elem v = entries[j];
        for (int i = 0; i < f.m(); ++i) {
            mat.at(i, j) = (std::uint8_t)(v % (unsigned)f.q());
            v /= (unsigned)f.q();
        }
    }
    return gf_rank(std::move(mat));
}

int rank_norm(const RankVector& x) { return rank_norm(*x.field, x.entries); }

int rank_distance(const RankVector& x, const RankVector& y) {
    if (*x.field != *y.field) throw std::invalid_argument("vectors live in different fields");
    if (x.n() != y.n()) throw std::invalid_argument("vector length mismatch");
    std::vector<Elem> diff(x.entries.size());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = x.field->sub(x.entries[i], y.entries[i]);
    return rank_norm(*x.field, diff);
}

RankVector vec_add(const RankVector& x, const RankVector& y) {
    if (*x.field != *y.field) throw std::invalid_argument("vectors live in different fields");
    if (x.n() != y.n()) throw std::invalid_argument("vector length mismatch");
    std::vector<Elem> s(x.entries.size());
    for (size_t i = 0; i < s.size(); ++i) s[i] = x.field->add(x.entries[i], y.entries[i]);
    return RankVector{x.field, std::move(s)};
}

RankVector vec_sub(const RankVector& x, const RankVector& y) {
    if (*x.field != *y.field) throw std::invalid_argument("vectors live in different fields");
    if (x.n() != y.n()) throw std::invalid_argument("vector length mismatch");
    std::vector<Elem> s(x.entries.size());
    for (size_t i = 0; i < s.size(); ++i) s[i] = x.field->sub(x.entries[i], y.entries[i]);
    return RankVector{x.field, std::move(s)};
}

bounds::BigInt count_rank_u(int n, int m, int q, int u) {
    if (u < 0 || u > std::min(m, n)) throw std::out_of_range("rank out of range");
    return bounds::num_rank_u(n, m, q, u);
}

namespace {

// rows x cols matrix over GF(q) with all rows (or columns) independent,
// drawn by rejection; each entry uniform.
GfMat sample_full_rank(int q, int rows, int cols, int want_rank, SplitRng& rng) {
    for (;;) {
        GfMat mat(q, rows, cols);
        for (auto& e : mat.a) e = (std::uint8_t)rng.digit(q);
        if (gf_rank(mat) == want_rank) return mat;
    }
}

}  // namespace

RankVector sample_rank_u(FieldPtr field, int n, int u, SplitRng& rng) {
    const int m = field->m();
    if (u < 0 || u > std::min(m, n)) throw std::out_of_range("rank out of range");
    if (u == 0) return zero_vector(std::move(field), n);
    GfMat a = sample_full_rank(field->q(), m, u, u, rng);
    GfMat b = sample_full_rank(field->q(), u, n, u, rng);
    GfMat prod(field->q(), m, n);
    for (int i = 0; i < m; ++i)
        for (int p = 0; p < u; ++p) {
            int av = a.at(i, p);
            if (av == 0) continue;
            for (int j = 0; j < n; ++j)
                prod.at(i, j) = (std::uint8_t)((prod.at(i, j) + av * b.at(p, j)) % field->q());
        }
    return assemble(std::move(field), prod);
}

std::string vector_to_string(const RankVector& x) {
    std::string s;
    for (int j = 0; j < x.n(); ++j) {
        if (j) s += ' ';
        s += x.field->to_string(x.entries[j]);
    }
    return s;
}

RankVector vector_parse(FieldPtr field, const std::string& line) {
    std::istringstream in(line);
    std::vector<Elem> entries;
    std::string tok;
    while (in >> tok) entries.push_back(field->parse(tok));
    return make_vector(std::move(field), std::move(entries));
}

}  // namespace rkc
