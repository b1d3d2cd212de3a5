#ifndef GCSYM_ENCODER_HPP
#define GCSYM_ENCODER_HPP

#include "gcsym/formula.hpp"
#include "gcsym/graph.hpp"

namespace gcsym {

// Variable layout of the base encodings. x(i,j) is true when vertex i gets
// color j; y(j) is true when color j is used by some vertex. The numbering
// is fixed so emitted files are stable across runs:
//   x(i,j) = (i-1)*K + j        for i in 1..n, j in 1..K
//   y(j)   = n*K + j
struct EncodingLayout {
    int n = 0;
    int K = 0;
    int x(int i, int j) const { return (i - 1) * K + j; }
    int y(int j) const { return n * K + j; }
};

// Minimum-coloring instance as CNF + PB + objective:
//   per vertex:       sum_j x(i,j) = 1                (one PB constraint)
//   per edge, color:  (~x(a,j) | ~x(b,j))             (m*K clauses)
//   per vertex,color: (~x(i,j) | y(j))                (n*K clauses)
//   per color:        (~y(j) | x(1,j) | ... | x(n,j)) (K clauses)
//   objective:        MIN sum_j y(j)
// Totals: n*K + K variables, K*(m+n+1) clauses, n PB constraints.
Formula encode_opt(const Graph& g, int K);

// Pure-CNF K-colorability decision encoding: per-vertex at-least-one clause
// plus the edge conflict clauses. No at-most-one side; a multi-colored
// vertex still witnesses a valid coloring.
Formula encode_decision_cnf(const Graph& g, int K);

EncodingLayout layout_of(const Graph& g, int K);

}  // namespace gcsym

#endif
