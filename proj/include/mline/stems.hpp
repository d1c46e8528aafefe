#pragma once

#include <string>
#include <vector>

namespace mline {

struct StemElem {
    std::string name;
    int degree = 0;
    long order = 0;  // order in the 2-local group (0 for the infinite-order generator)
};

/* One row of the 2-local stable-stem table.  order 0 means the trivial group;
 * the n = 0 row is the one infinite group and is marked as such. */
struct StemGroup {
    int n = 0;
    long order = 0;  // |pi_n localized at 2|; 0 = trivial
    bool infinite = false;
    std::vector<StemElem> generators;
    std::string citation;  // paper quote or standard-table note
};

/* Stored table rows for 0 <= n <= 20. */
const StemGroup& stem_group(int n);

/* pi_n of the mod-2 Moore spectrum C2, for the n the arguments consume. */
const StemGroup& moore_group(int n);  // n in {5, 6, 11}

/* The element 4{P^(k-1)h_2} carries this name. */
std::string four_ph2_alias();

struct StemRelation {
    std::string name;
    std::string statement;
    std::string citation;
};

std::vector<std::string> relation_names();
const StemRelation& relation_info(const std::string& name);

/* Evaluates the named relation against the stored table.  Unknown names throw. */
bool relation_check(const std::string& name);

} // namespace mline
