#pragma once

#include "mline/chern.hpp"
#include "mline/rat.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace mline {

struct AHSSVerdict {
    enum class Kind { PermanentCycle, NontrivialDifferential };
    Kind kind = Kind::PermanentCycle;
    long exponent = 0;   // l in 2^l[-1]
    long targetDim = 0;  // 4m-1, differentials only
    std::string str() const;
};

/* iota(m) = 0 for even m, 1 for odd m. */
int iota(long m);

/* The differential criterion: given ch(c(alpha)) = 2^l + d on a spectrum with
 * single top cell 4m, no (4m-1)-cell, ko-injective skeleton and C-eta bottom,
 * 2^l[-1] is a permanent cycle iff nu(d) >= iota(m); otherwise there is a
 * nontrivial differential onto the (4m-1)-cell.  The structural hypotheses are
 * the caller's preconditions. */
AHSSVerdict decide(long l, const Val2& nu_d, long m);

/* pi_{8k-1} j'' = Z/2^(4+nu(k)). */
long imj_exponent(int k);

/* The Adams-filtration >= 4k-3 candidates, separated by e-invariant valuation:
 * nu >= 1 -> 0;  -2 -> {P^{k-1}h_2};  -1 -> 2{P^{k-1}h_2};  0 -> 4{P^{k-1}h_2}. */
enum class EClassify { ZeroClass, Ph2, TwoPh2, FourPh2 };
EClassify e_classify(const Val2& nu_e);
std::string e_classify_name(EClassify c);

/* Bottom two cells of Sigma^{-2n} CP^m_n form C-eta iff n is odd
 * (hypothesis checker for the criterion on the Z / Z(k) inputs). */
bool cp_bottom_is_eta(long n);

/* Second lock: solve_simple_chern -> realify -> decide(4k-1, nu(2d), 2k).
 * Must produce a nontrivial differential with target dimension 8k-1. */
AHSSVerdict second_lock(int k);
AHSSVerdict second_lock(int k, BmTable& table);

struct FirstLockResult {
    AHSSVerdict verdict;
    std::optional<EClassify> targetClass;  // odd k only
};

/* First lock: build_alpha -> decide.  k even: permanent cycle with exponent
 * 4k-4-nu(k).  k odd: nontrivial differential whose target classifies as
 * {P^{k-1}h_1^3} via the e-invariant table. */
FirstLockResult first_lock(int k, const Rat& e_unit = Rat(1));
FirstLockResult first_lock(int k, const Rat& e_unit, BmTable& table);
FirstLockResult first_lock_from(const GammaClass& gamma, int k, const Rat& e_unit);

/* {k, kind, exponent, targetDim, targetClass} */
nlohmann::json to_json(int k, const AHSSVerdict& v);
nlohmann::json to_json(int k, const FirstLockResult& r);

} // namespace mline
