#ifndef RKC_RANK_METRIC_HPP
#define RKC_RANK_METRIC_HPP

#include "rkc/bounds.hpp"
#include "rkc/gfq.hpp"
#include "rkc/rng.hpp"

#include <vector>

namespace rkc {

/// Length-n word over GF(q^m).
struct RankVector {
    FieldPtr field;
    std::vector<Elem> entries;

    int n() const { return (int)entries.size(); }
    bool operator==(const RankVector& o) const {
        return *field == *o.field && entries == o.entries;
    }
};

RankVector make_vector(FieldPtr field, std::vector<Elem> entries);
RankVector zero_vector(FieldPtr field, int n);

/// m x n coordinate expansion; column j holds the coordinates of entry j.
GfMat expand(const RankVector& x);
/// Inverse of expand.
RankVector assemble(FieldPtr field, const GfMat& mat);

int rank_norm(const RankVector& x);
int rank_norm(const ExtField& f, const std::vector<Elem>& entries);
int rank_distance(const RankVector& x, const RankVector& y);

RankVector vec_add(const RankVector& x, const RankVector& y);
RankVector vec_sub(const RankVector& x, const RankVector& y);

/// N_u: number of vectors in GF(q^m)^n of rank exactly u, as an exact integer.
bounds::BigInt count_rank_u(int n, int m, int q, int u);

/// Uniform draw from the rank-u sphere: rejection-sample a full-column-rank
/// m x u matrix and a full-row-rank u x n matrix, output the vector whose
/// expansion is their product. Every rank-u matrix has exactly |GL_u(q)|
/// such factorizations, so the output is uniform.
RankVector sample_rank_u(FieldPtr field, int n, int u, SplitRng& rng);

std::string vector_to_string(const RankVector& x);  // space-separated digit strings
RankVector vector_parse(FieldPtr field, const std::string& line);

}  // namespace rkc

#endif
