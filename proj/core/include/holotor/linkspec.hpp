#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holotor/holonomy.hpp"

namespace holotor {

// A colored braid closure plus evaluation options.  Colors may be given as
// SL2 matrices or as SL2* character coordinates; both forms are kept so that
// emit(parse(s)) round-trips.
struct LinkSpec {
    int strands = 1;
    std::vector<int> word;
    std::vector<SL2Elem> colors;         // empty iff star_colors is used
    std::vector<StarChar> star_colors;   // alternative color form
    std::vector<cplx> mu;                // per link component; empty = default branch
    double tol = 1e-9;
    unsigned long seed = 0;
    bool gauge_auto = true;
    bool stabilize_auto = true;
    std::optional<std::string> name;

    // Colors in SL2 form (defactorizing star colors if needed).
    std::vector<SL2Elem> sl2_colors() const;
    BraidWord braid() const { return BraidWord(strands, word); }
};

// JSON (de)serialization; parse throws parse_error with a description on
// malformed input.
LinkSpec parse_linkspec(const std::string& json_text);
std::string emit_linkspec(const LinkSpec& spec, bool pretty = false);

}  // namespace holotor
