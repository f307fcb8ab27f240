#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lmod/posetmod.hpp"
#include "lmod/rootweyl.hpp"
#include "lmod/thread.hpp"

namespace lmod {

// Truncation patterns on the 3-simplex that give link cohomology in two degrees:
// first = all 4 facets + 3 edges at a common vertex; second = all 4 vertices +
// the 3 edges of one triangle. The base must not be cut.
enum class Rank4Config { none, first, second };
const char* rank4_config_name(Rank4Config c);
Rank4Config classify_rank4(const std::vector<bool>& effective);

// Sp_20 example: Levi {a2,a4,a5,a7,a8,a9} of C10 and the 42-letter word (0-based).
Mask footnote_levi();
std::vector<int> footnote_word();

struct FootnoteProfile {
    std::vector<int> pw;          // p_w per local face (open face excluded)
    std::vector<bool> effective;  // per local face
    Rank4Config config = Rank4Config::none;
    GradedAbelian link;           // link cohomology at the base, thread degrees
};

struct FootnoteCheck {
    bool reduced = false, min_rep = false;
    int length = 0, dim_n = 0, codim = 0;
    FootnoteProfile m, n;
};
FootnoteCheck check_footnote_word(const RootDatum& C10);

// Build the IC thread of a rank-4 profile given by p_w values and classify it.
FootnoteProfile classify_profile(const std::vector<int>& pw);

struct ExhaustiveOptions {
    int jobs = 1;
    std::string checkpoint;        // empty: no checkpoint
    std::ostream* progress = nullptr;
    size_t min_subtrees = 20000;  // breadth-first until a level is this wide
};
struct ExhaustiveResult {
    long visited = 0;
    long first[2] = {0, 0};        // indexed by perversity m, n
    long second[2] = {0, 0};
    std::vector<std::vector<int>> words[2];  // reduced words realizing the first configuration
    long seeds = 0, resumed_seeds = 0;
    long profiles = 0;             // distinct (p_w profile, perversity) pairs evaluated
};
ExhaustiveResult exhaustive_footnote_search(const RootDatum& D, Mask levi, const ExhaustiveOptions& opt);

}  // namespace lmod
