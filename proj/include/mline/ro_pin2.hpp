#pragma once

#include "mline/rat.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mline {

/* Formal monomial D^d A^a B^b before normalization. */
struct ROMonomial {
    unsigned d = 0, a = 0, b = 0;
};

/* Normal form in RO(Pin(2)) = Z[D,A,B]/(D^2-1, DA-A, DB-B, B^2-4(A-2B)):
 * c1 + cD D + sum over (a, b) with b <= 1, (a,b) != (0,0) of m_{a,b} A^a B^b. */
class ROElem {
public:
    ROElem() = default;
    static ROElem zero() { return ROElem(); }
    static ROElem one() { return from_int(1); }
    static ROElem from_int(const Int& c);
    static ROElem D();
    static ROElem A();
    static ROElem B();

    /* Confluent normalization of a formal integer polynomial in D, A, B. */
    static ROElem normalize(const std::vector<std::pair<Int, ROMonomial>>& formal);

    Int c1() const { return c1_; }
    Int cD() const { return cD_; }
    Int mixed(unsigned a, unsigned b) const;
    const std::map<std::pair<unsigned, unsigned>, Int>& mixed_terms() const { return mixed_; }

    friend ROElem operator+(const ROElem& x, const ROElem& y);
    friend ROElem operator-(const ROElem& x, const ROElem& y);
    friend ROElem operator*(const ROElem& x, const ROElem& y);
    ROElem scaled(const Int& c) const;
    friend bool operator==(const ROElem& x, const ROElem& y);

    std::string str() const;

private:
    void add_term(const Int& coeff, unsigned a, unsigned b);  // normalized monomial A^a B^b, b <= 1
    void prune();
    Int c1_ = 0;
    Int cD_ = 0;
    std::map<std::pair<unsigned, unsigned>, Int> mixed_;
};

ROElem ro_normalize(const std::vector<std::pair<Int, ROMonomial>>& formal);
ROElem ro_mul(const ROElem& x, const ROElem& y);

/* Coefficient of a gamma(D)-power, after (D+1)gamma = 2A gamma = B gamma = 0:
 * an integer plus an A-polynomial with mod-2 coefficients. */
class GammaCoeff {
public:
    GammaCoeff() = default;
    explicit GammaCoeff(const Int& c) : int_part_(c) {}
    static GammaCoeff reduce(const ROElem& e);

    const Int& int_part() const { return int_part_; }
    const std::set<unsigned>& a_part() const { return a_part_; }

    friend bool operator==(const GammaCoeff& x, const GammaCoeff& y) = default;
    std::string str() const;

private:
    Int int_part_ = 0;
    std::set<unsigned> a_part_;  // exponents n >= 1 of A with odd coefficient
};

/* coefficient * (b_{-8D})^bottPower * gamma(D)^gammaPower */
struct EulerExpr {
    unsigned gammaPower = 0;
    unsigned bottPower = 0;
    GammaCoeff coefficient;
    std::string str() const;
};

struct EulerChain {
    std::vector<EulerExpr> steps;  // each line of the reduction, in order
    EulerExpr final;
};

/* Reduces gamma(D)^{8k+2} against k Bott classes to 2^{4k} (b_{-8D})^k gamma(D)^2,
 * reproducing each intermediate line. */
EulerChain euler_reduce(int k);

struct Mod2AResult {
    bool feasible = false;
    int witnessIndex = -1;            // first odd forced coefficient when infeasible
    std::vector<Int> poly;            // P(A) when feasible
};

/* Decides whether some P(A) of degree <= degP satisfies
 * (A+4)^{2k} P(A) = 2^{4k} mod 2A Z[A], by exact constant-term matching plus a
 * linear system over F_2 for the higher coefficients. */
Mod2AResult mod2A_feasible(int k, int degP);

/* {k, coefficient, witnessIndex, pass} */
nlohmann::json ro_report_row(int k, const EulerChain& chain, const Mod2AResult& mod2a);

} // namespace mline
