#pragma once

#include "qcircle/goettsche.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace qc {

using ResiduePair = std::pair<long, long>;

struct EquidistVerdict {
    bool equidistributed = false;
    std::vector<int> cases;  // every matching case, ascending
    std::set<ResiduePair> R;  // from the lowest matching case
    std::optional<ResiduePair> lambda_min_witness;
    // Proof-sketch variant of case 7 (k-scaled minimum); diagnostic only.
    bool sketch_case7 = false;
    bool sketch_disagrees = false;
};

struct LambdaProfile {
    std::map<ResiduePair, Rational> values;
};

Rational lambda(const HodgeDiamond& S, const Rational& x, const Rational& y);
LambdaProfile lambda_profile(const HodgeDiamond& S, long l1, long l2);
EquidistVerdict classify(const HodgeDiamond& S, long l1, long l2);

Rational theta(const HilbertHodgeTable& t, long r1, long l1, long r2, long l2, int n);

struct ConvergenceRow {
    ResiduePair r;
    std::vector<Rational> values;  // one per n
};

struct ConvergenceReport {
    long l1, l2;
    std::vector<int> n_list;
    std::vector<ConvergenceRow> rows;
    std::vector<Rational> max_deviation;  // max over R of |Theta - 1/|R||, per n
    EquidistVerdict verdict;
};

ConvergenceReport convergence_report(const HodgeDiamond& S, long l1, long l2, const std::vector<int>& n_list);

}  // namespace qc
