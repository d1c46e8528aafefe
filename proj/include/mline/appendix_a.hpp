#pragma once

#include "mline/series.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace mline {

/* Memoized per-k series of (ln(1+z)/z)^(4k+1) at order 4k.
 * Not thread safe; sweeps use one table per worker. */
class BmTable {
public:
    const TruncSeries& series(int k);
    Rat bm(int k, int m);

private:
    std::map<int, TruncSeries> cache_;
};

/* b_m for the parameter k, via the shared process-wide table (mutex guarded). */
Rat bm_coeff(int k, int m);

struct LemmaCheck {
    std::string lemma;     // stable identifier, e.g. "nu_b_4k"
    std::string claimed;   // the relation being checked, human readable
    std::string expected;
    std::string computed;
    bool vacuous = false;  // index range empty at this k
    bool pass = false;
};

/* One row per Appendix A lemma.  Failures are recorded, never thrown. */
struct AppendixAReport {
    int k = 0;
    std::vector<LemmaCheck> results;
    bool all_pass() const;
};

/* Checks, on exact coefficients:
 *   nu(b_{4k}) = -4k
 *   nu(b_m) >= -(4k-2) for 1 <= m <= 4k-1
 *   nu(b_{4k-2}) = nu(k) - (4k-3)
 *   nu(b_{4k-3}) = nu(k) - (4k-3)
 *   nu(b_{4k-4}) = nu(k) - (4k-4)
 *   nu(b_{4k-2} - b_{4k-3}) = nu(k) - (4k-4) for even k, >= nu(k) - (4k-5) for odd k
 *   nu(b_m) >= nu(k) - (4k-5) for 0 <= m <= 4k-5
 * Ranges that are empty at k = 1 are reported vacuous.  k = 0 is accepted as
 * the degenerate case of the first lemma only (b_0 = 1). */
AppendixAReport verify_appendix_a(int k);
AppendixAReport verify_appendix_a(int k, BmTable& table);

/* Rows as {k, lemma, expected, computed, pass} objects. */
nlohmann::json to_json(const AppendixAReport& report);

} // namespace mline
