#pragma once

#include <string>
#include <string_view>

namespace vpart {

enum class TNormKind { Minimum, Product, Lukasiewicz, Drastic };
enum class TConormKind { Maximum, ProbabilisticSum, BoundedSum, Drastic };
enum class NegationKind { Standard, StrictSquare, Goedel };

// Wire names: min, product, lukasiewicz, drastic / max, probsum, boundedsum,
// drastic / standard, square, goedel. Unknown names throw invalid_argument.
std::string to_string(TNormKind k);
std::string to_string(TConormKind k);
std::string to_string(NegationKind k);
TNormKind tnorm_from_string(std::string_view name);
TConormKind tconorm_from_string(std::string_view name);
NegationKind negation_from_string(std::string_view name);

// Arguments outside [0,1] throw std::domain_error. Boundary identities
// (T(x,1) = x, S(x,0) = x, absorption at the other end) hold bit-exactly.
double tnorm_apply(TNormKind k, double x, double y);
double tconorm_apply(TConormKind k, double x, double y);
double negation_apply(NegationKind k, double x);

// Strong = involutive strict negation; only the standard one qualifies here.
bool negation_is_strong(NegationKind k);

TConormKind dual_of(TNormKind k);

struct DualityCertificate {
    bool dual;         // residual within 1e-12
    double residual;   // worst |S(x,y) - N(T(N(x),N(y)))| over the grid
    double witness_x;
    double witness_y;
};

// Certifies S(x,y) = N(T(N(x),N(y))) on the grid {i/n : 0 <= i <= n},
// n = round(1/grid_step). Both sides are evaluated in exact rational
// arithmetic, so a genuinely dual pair reports residual 0 rather than
// double-rounding noise. Requires a strong negation and grid_step in
// [5e-4, 1]; violations throw invalid_argument.
DualityCertificate check_duality(NegationKind n, TNormKind t, TConormKind s,
                                 double grid_step = 0.01);

// An N-dual (t-norm, t-conorm) pair under a strong negation. Immutable.
class ConnectiveTriple {
public:
    // Throws invalid_argument unless the pair certifies as dual under n.
    static ConnectiveTriple create(NegationKind n, TNormKind t, TConormKind s);
    static ConnectiveTriple standard();  // standard / min / max

    NegationKind negation() const { return negation_; }
    TNormKind tnorm() const { return tnorm_; }
    TConormKind tconorm() const { return tconorm_; }

    double conj(double x, double y) const { return tnorm_apply(tnorm_, x, y); }
    double disj(double x, double y) const { return tconorm_apply(tconorm_, x, y); }
    double neg(double x) const { return negation_apply(negation_, x); }

    bool operator==(const ConnectiveTriple&) const = default;

private:
    ConnectiveTriple(NegationKind n, TNormKind t, TConormKind s)
        : negation_(n), tnorm_(t), tconorm_(s) {}

    NegationKind negation_;
    TNormKind tnorm_;
    TConormKind tconorm_;
};

// Left folds; the empty fold is the unit (1 for t-norms, 0 for t-conorms).
template <typename It>
double tnorm_fold(TNormKind k, It first, It last) {
    double acc = 1.0;
    for (; first != last; ++first) acc = tnorm_apply(k, acc, *first);
    return acc;
}

template <typename It>
double tconorm_fold(TConormKind k, It first, It last) {
    double acc = 0.0;
    for (; first != last; ++first) acc = tconorm_apply(k, acc, *first);
    return acc;
}

}  // namespace vpart
