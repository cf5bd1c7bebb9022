#ifndef RKC_GABIDULIN_HPP
#define RKC_GABIDULIN_HPP

#include "rkc/linpoly.hpp"
#include "rkc/rank_metric.hpp"

#include <string>
#include <vector>

namespace rkc {

/// Linear MRD code of length n <= m and dimension k over GF(q^m), with
/// evaluation vector g = (1, a, ..., a^{n-1}) and the Moore generator
/// G[i][j] = g_j^{q^i}. Minimum rank distance is d = n-k+1 and the decoder
/// corrects any error of rank at most t = floor((d-1)/2).
struct GabidulinCode {
    FieldPtr field;
    int n = 0, k = 0, d = 0, t = 0;
    std::vector<Elem> g;
    std::vector<std::vector<Elem>> generator;  // k x n
    std::vector<Elem> h;  // parity vector; empty when d == 1

    // precomputed at build: RREF bookkeeping for expanding elements of
    // GF(q^m) over the h_j, used by the decoder's locator solve
    GfMat h_expansion;          // m x n
    std::vector<int> h_pivots;  // pivot rows of the RREF'd expansion
    GfMat h_rref;               // RREF of [h_expansion | I_m]
};

GabidulinCode build_code(FieldPtr field, int n, int k);
GabidulinCode build_code(int q, int m, int n, int k);

RankVector encode(const GabidulinCode& code, const std::vector<Elem>& message);

/// Syndromes s_l = sum_j y_j h_j^{q^l}, l = 0..d-2; all zero iff y is a
/// codeword.
std::vector<Elem> syndromes(const GabidulinCode& code, const RankVector& received);

enum class DecodeFailure {
    none,
    degenerate_span,       // root space dimension != q-degree of the span polynomial
    locator_inconsistent,  // syndrome or expansion system has no solution
    rank_exceeds_capability,
    residual_syndrome,
};

const char* to_string(DecodeFailure f);

/// Bounded rank-distance decode result. A Decoded outcome always satisfies
/// rank(error) <= t and codeword membership; whether it is the transmitted
/// word is only observable against ground truth.
struct DecodeOutcome {
    bool decoded = false;
    RankVector codeword;  // valid when decoded
    RankVector error;     // valid when decoded
    DecodeFailure reason = DecodeFailure::none;
};

DecodeOutcome decode(const GabidulinCode& code, const RankVector& received);

/// Message with encode(message) == codeword; throws if the word is not in
/// the code.
std::vector<Elem> solve_message(const GabidulinCode& code, const RankVector& codeword);

std::string code_to_json(const GabidulinCode& code);
GabidulinCode code_from_json(const std::string& text);

}  // namespace rkc

#endif
