#ifndef GCSYM_SBP_HPP
#define GCSYM_SBP_HPP

#include <string>
#include <vector>

#include "gcsym/encoder.hpp"
#include "gcsym/formula.hpp"
#include "gcsym/graph.hpp"

namespace gcsym {

// Instance-independent symmetry-breaking predicate selection. The rows of
// the experiment grid use {}, {NU}, {CA}, {LI}, {SC} and {NU,SC}.
struct SbpConfig {
    bool nu = false;
    bool ca = false;
    bool li = false;
    bool sc = false;

    bool any() const { return nu || ca || li || sc; }
    std::string to_string() const;
    static SbpConfig parse(const std::string& flags);  // "nu,ca,li,sc"
    static std::vector<SbpConfig> experiment_rows();
    bool operator==(const SbpConfig&) const = default;
};

// Null-color elimination: K-1 clauses (~y(k+1) | y(k)). Usage variables
// must exist; throws on decision-CNF input.
void add_nu(Formula& f, const EncodingLayout& L);

// Cardinality ordering: K-1 PB constraints forcing color-class sizes to be
// non-increasing, stored normalized (2n terms each).
void add_ca(Formula& f, const Graph& g, const EncodingLayout& L);

// Lowest-index ordering: n*K fresh variables V(i,k) marking the
// lowest-index vertex of each used color, with uniqueness, existence and
// ordering clauses plus the definitional link to the x variables.
void add_li(Formula& f, const Graph& g, const EncodingLayout& L);

// Selective coloring: pin the max-degree vertex to color 1 and its
// max-degree neighbor to color 2 (ties break to the lowest vertex index).
void add_sc(Formula& f, const Graph& g, const EncodingLayout& L);

// Applies the selected predicates in the fixed order NU, CA, LI, SC and
// records the config as a formula comment.
void apply_sbp(Formula& f, const Graph& g, const EncodingLayout& L, const SbpConfig& cfg);

}  // namespace gcsym

#endif
