#include "vpart/connectives.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace vpart {

namespace {

void require_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::domain_error(std::string(what) + " argument outside [0,1]: " +
                                std::to_string(v));
}

[[noreturn]] void bad_name(const char* what, std::string_view name) {
    throw std::invalid_argument("unknown " + std::string(what) + " name: " +
                                std::string(name));
}

}  // namespace

std::string to_string(TNormKind k) {
    switch (k) {
        case TNormKind::Minimum: return "min";
        case TNormKind::Product: return "product";
        case TNormKind::Lukasiewicz: return "lukasiewicz";
        case TNormKind::Drastic: return "drastic";
    }
    throw std::logic_error("unreachable t-norm kind");
}

std::string to_string(TConormKind k) {
    switch (k) {
        case TConormKind::Maximum: return "max";
        case TConormKind::ProbabilisticSum: return "probsum";
        case TConormKind::BoundedSum: return "boundedsum";
        case TConormKind::Drastic: return "drastic";
    }
    throw std::logic_error("unreachable t-conorm kind");
}

std::string to_string(NegationKind k) {
    switch (k) {
        case NegationKind::Standard: return "standard";
        case NegationKind::StrictSquare: return "square";
        case NegationKind::Goedel: return "goedel";
    }
    throw std::logic_error("unreachable negation kind");
}

TNormKind tnorm_from_string(std::string_view name) {
    if (name == "min") return TNormKind::Minimum;
    if (name == "product") return TNormKind::Product;
    if (name == "lukasiewicz") return TNormKind::Lukasiewicz;
    if (name == "drastic") return TNormKind::Drastic;
    bad_name("t-norm", name);
}

TConormKind tconorm_from_string(std::string_view name) {
    if (name == "max") return TConormKind::Maximum;
    if (name == "probsum") return TConormKind::ProbabilisticSum;
    if (name == "boundedsum") return TConormKind::BoundedSum;
    if (name == "drastic") return TConormKind::Drastic;
    bad_name("t-conorm", name);
}

NegationKind negation_from_string(std::string_view name) {
    if (name == "standard") return NegationKind::Standard;
    if (name == "square") return NegationKind::StrictSquare;
    if (name == "goedel") return NegationKind::Goedel;
    bad_name("negation", name);
}

double tnorm_apply(TNormKind k, double x, double y) {
    require_unit(x, "t-norm");
    require_unit(y, "t-norm");
    switch (k) {
        case TNormKind::Minimum:
            return std::min(x, y);
        case TNormKind::Product:
            return x * y;
        case TNormKind::Lukasiewicz:
            // Short-circuit the unit so T(x,1) = x survives rounding.
            if (x == 1.0) return y;
            if (y == 1.0) return x;
            return std::max(x + y - 1.0, 0.0);
        case TNormKind::Drastic:
            if (x == 1.0) return y;
            if (y == 1.0) return x;
            return 0.0;
    }
    throw std::logic_error("unreachable t-norm kind");
}

double tconorm_apply(TConormKind k, double x, double y) {
    require_unit(x, "t-conorm");
    require_unit(y, "t-conorm");
    switch (k) {
        case TConormKind::Maximum:
            return std::max(x, y);
        case TConormKind::ProbabilisticSum:
            // x+y-xy drifts an ulp off the absorbing/neutral elements.
            if (x == 0.0) return y;
            if (y == 0.0) return x;
            if (x == 1.0 || y == 1.0) return 1.0;
            return (x + y) - x * y;
        case TConormKind::BoundedSum:
            if (x == 0.0) return y;
            if (y == 0.0) return x;
            return std::min(x + y, 1.0);
        case TConormKind::Drastic:
            if (x == 0.0) return y;
            if (y == 0.0) return x;
            return 1.0;
    }
    throw std::logic_error("unreachable t-conorm kind");
}

double negation_apply(NegationKind k, double x) {
    require_unit(x, "negation");
    switch (k) {
        case NegationKind::Standard: return 1.0 - x;
        case NegationKind::StrictSquare: return 1.0 - x * x;
        case NegationKind::Goedel: return x == 0.0 ? 1.0 : 0.0;
    }
    throw std::logic_error("unreachable negation kind");
}

bool negation_is_strong(NegationKind k) { return k == NegationKind::Standard; }

TConormKind dual_of(TNormKind k) {
    switch (k) {
        case TNormKind::Minimum: return TConormKind::Maximum;
        case TNormKind::Product: return TConormKind::ProbabilisticSum;
        case TNormKind::Lukasiewicz: return TConormKind::BoundedSum;
        case TNormKind::Drastic: return TConormKind::Drastic;
    }
    throw std::logic_error("unreachable t-norm kind");
}

namespace {

// Exact rationals over __int128, unnormalized. Grid denominators are capped
// at 2000, residual chains multiply denominators at most four times, so the
// worst cross product stays near 1e26, far inside the 128-bit range.
struct Rat {
    __int128 num;
    __int128 den;  // > 0
};

Rat make_rat(long long num, long long den) { return {num, den}; }

Rat add(Rat a, Rat b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
Rat sub(Rat a, Rat b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
Rat mul(Rat a, Rat b) { return {a.num * b.num, a.den * b.den}; }

int cmp(Rat a, Rat b) {
    __int128 lhs = a.num * b.den;
    __int128 rhs = b.num * a.den;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

Rat rat_min(Rat a, Rat b) { return cmp(a, b) <= 0 ? a : b; }
Rat rat_max(Rat a, Rat b) { return cmp(a, b) >= 0 ? a : b; }
Rat rat_abs(Rat a) { return {a.num < 0 ? -a.num : a.num, a.den}; }

const Rat kZero = {0, 1};
const Rat kOne = {1, 1};

Rat one_minus(Rat a) { return sub(kOne, a); }

Rat rat_tnorm(TNormKind k, Rat x, Rat y) {
    switch (k) {
        case TNormKind::Minimum: return rat_min(x, y);
        case TNormKind::Product: return mul(x, y);
        case TNormKind::Lukasiewicz: return rat_max(sub(add(x, y), kOne), kZero);
        case TNormKind::Drastic:
            if (cmp(x, kOne) == 0) return y;
            if (cmp(y, kOne) == 0) return x;
            return kZero;
    }
    throw std::logic_error("unreachable t-norm kind");
}

Rat rat_tconorm(TConormKind k, Rat x, Rat y) {
    switch (k) {
        case TConormKind::Maximum: return rat_max(x, y);
        case TConormKind::ProbabilisticSum: return sub(add(x, y), mul(x, y));
        case TConormKind::BoundedSum: return rat_min(add(x, y), kOne);
        case TConormKind::Drastic:
            if (cmp(x, kZero) == 0) return y;
            if (cmp(y, kZero) == 0) return x;
            return kOne;
    }
    throw std::logic_error("unreachable t-conorm kind");
}

double rat_to_double(Rat a) {
    return static_cast<double>(static_cast<long double>(a.num) /
                               static_cast<long double>(a.den));
}

}  // namespace

DualityCertificate check_duality(NegationKind n, TNormKind t, TConormKind s,
                                 double grid_step) {
    if (!negation_is_strong(n))
        throw std::invalid_argument("duality check requires a strong negation, got " +
                                    to_string(n));
    if (!(grid_step > 0.0 && grid_step <= 1.0))
        throw std::invalid_argument("grid step must lie in (0,1]");
    long long cells = std::llround(1.0 / grid_step);
    if (cells < 1) cells = 1;
    if (cells > 2000)
        throw std::invalid_argument("grid step below 5e-4 is not supported");

    Rat worst = kZero;
    long long wi = 0, wj = 0;
    for (long long i = 0; i <= cells; ++i) {
        for (long long j = 0; j <= cells; ++j) {
            Rat x = make_rat(i, cells);
            Rat y = make_rat(j, cells);
            Rat lhs = rat_tconorm(s, x, y);
            Rat rhs = one_minus(rat_tnorm(t, one_minus(x), one_minus(y)));
            Rat r = rat_abs(sub(lhs, rhs));
            if (cmp(r, worst) > 0) {
                worst = r;
                wi = i;
                wj = j;
            }
        }
    }

    DualityCertificate cert;
    cert.residual = rat_to_double(worst);
    cert.dual = cert.residual <= 1e-12;
    cert.witness_x = static_cast<double>(wi) / static_cast<double>(cells);
    cert.witness_y = static_cast<double>(wj) / static_cast<double>(cells);
    return cert;
}

ConnectiveTriple ConnectiveTriple::create(NegationKind n, TNormKind t, TConormKind s) {
    DualityCertificate cert = check_duality(n, t, s);
    if (!cert.dual)
        throw std::invalid_argument(
            "connectives are not dual under " + to_string(n) + ": " + to_string(t) +
            " / " + to_string(s) + " differ by " + std::to_string(cert.residual));
    return ConnectiveTriple(n, t, s);
}

ConnectiveTriple ConnectiveTriple::standard() {
    return ConnectiveTriple(NegationKind::Standard, TNormKind::Minimum,
                            TConormKind::Maximum);
}

}  // namespace vpart
