// Release gate: every acceptance criterion, one PASS/FAIL line each.
// Exits nonzero if anything fails; numbers and tolerances are asserted
// exactly as promised by the library's contracts.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "vpart/assets.hpp"
#include "vpart/connectives.hpp"
#include "vpart/expr.hpp"
#include "vpart/inverse.hpp"
#include "vpart/measure.hpp"
#include "vpart/partition.hpp"
#include "vpart/specio.hpp"

using namespace vpart;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void line(const std::string& tag, bool ok, const std::string& note) {
    std::printf("%s  criterion %s: %s\n", ok ? "PASS" : "FAIL", tag.c_str(),
                note.c_str());
    if (!ok) ++g_failures;
}

struct RunResult {
    int code;
    std::string out;
    double seconds;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(VPART_CLI_PATH) + " " + args + " 2>&1";
    auto t0 = Clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "", 0.0};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, secs};
}

double parse_named(const std::string& out, const std::string& name) {
    auto pos = out.find(name + "=");
    if (pos == std::string::npos) return NAN;
    return std::stod(out.substr(pos + name.size() + 1));
}

const std::string kHeightDoc =
    std::string(VPART_DATA_DIR) + "/height_nl_2006.vpart.json";

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ExprPtr random_expr(std::mt19937_64& rng, const std::vector<std::string>& names,
                    int depth) {
    std::uint64_t r = rng() % (depth > 0 ? 8 : 4);
    switch (r) {
        case 0:
        case 1:
        case 2: return VagueExpr::atom(names[rng() % names.size()]);
        case 3: return rng() % 2 ? VagueExpr::bottom() : VagueExpr::top();
        case 4:
        case 5: return VagueExpr::conj(random_expr(rng, names, depth - 1),
                                       random_expr(rng, names, depth - 1));
        case 6: return VagueExpr::disj(random_expr(rng, names, depth - 1),
                                       random_expr(rng, names, depth - 1));
        default: return VagueExpr::neg(random_expr(rng, names, depth - 1));
    }
}

std::string fmt_secs(double s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

PartitionCandidate scaled_height(const std::string& block, double factor) {
    auto c = read_candidate(std::string(assets::height_partition_json()));
    for (auto& b : c.blocks)
        if (b.name == block)
            for (auto& p : b.points) p.y *= factor;
    return c;
}

double candidate_sum_at(const PartitionCandidate& c, double x) {
    double sum = 0.0;
    for (const auto& b : c.blocks) {
        // plain interpolation straight off the raw breakpoints
        if (x <= b.points.front().x) { sum += b.points.front().y; continue; }
        if (x >= b.points.back().x) { sum += b.points.back().y; continue; }
        for (std::size_t i = 1; i < b.points.size(); ++i)
            if (b.points[i].x >= x) {
                const auto& a = b.points[i - 1];
                const auto& q = b.points[i];
                sum += a.y + (x - a.x) / (q.x - a.x) * (q.y - a.y);
                break;
            }
    }
    return sum;
}

void criterion_1() {
    auto r = run_cli("eval " + kHeightDoc + " --x 1.5");
    double s = parse_named(r.out, "short");
    double m = parse_named(r.out, "medium");
    double t = parse_named(r.out, "tall");
    bool values_ok = r.code == 0 && std::abs(s - 0.625) <= 1e-12 &&
                     std::abs(m - 0.375) <= 1e-12 && std::abs(t - 0.0) <= 1e-12;
    bool fast = r.seconds < 1.0;
    char note[160];
    std::snprintf(note, sizeof note,
                  "eval at 1.5 gives 0.625 / 0.375 / 0 within 1e-12 (%s, %s)",
                  values_ok ? "values ok" : "values WRONG", fmt_secs(r.seconds).c_str());
    line("1", values_ok && fast, note);
}

void criterion_2() {
    auto r = run_cli("invert " + kHeightDoc + " short=0 medium=0.4 tall=0.6");
    bool printed = r.code == 0 && r.out == "x = 1.92\n";

    auto p = load_partition_text(std::string(assets::height_partition_json()));
    auto inv = invert(*p, {{{"short", 0.0}, {"medium", 0.4}, {"tall", 0.6}}});
    bool single = inv.solutions.pieces.size() == 1 &&
                  inv.solutions.pieces[0].width() <= 1e-9 &&
                  std::abs(inv.solutions.pieces[0].lo - 1.92) <= 1e-9;
    bool fast = r.seconds < 1.0;
    line("2", printed && single && fast,
         "inverting {short 0, medium 0.4, tall 0.6} yields exactly x = 1.92 "
         "within 1e-9 (" +
             fmt_secs(r.seconds) + ")");
}

void criterion_3() {
    Judgement j(35.0, {{"young", 0.6}, {"old", 0.4}});
    auto t = ConnectiveTriple::standard();
    auto rep = check_axioms(j, t);
    double disj = eval_measure(j, t, parse_expr("young | old"));
    double negd = eval_measure(j, t, parse_expr("!old"));
    bool ok = rep.axiom1.pass && rep.axiom5.pass && rep.regular && !rep.normal &&
              disj == 0.6 && negd == 0.6;
    line("3", ok,
         "graded age judgement is regular but not normal; young|old and !old "
         "are exactly 0.6");
}

void criterion_4() {
    Judgement j(25.0, {{"0-40", 1.0},
                       {"40-80", 0.0},
                       {"80-120", 0.0},
                       {"120-160", 0.0},
                       {"160-200", 0.0}});
    auto rep = check_axioms(j, ConnectiveTriple::standard());
    bool closures_ok = true;
    for (const auto& c : rep.closures) closures_ok = closures_ok && c.value == 1.0;
    bool ok = rep.axiom1.pass && rep.axiom5.pass && closures_ok && rep.regular &&
              rep.normal && rep.crisp;
    line("4", ok, "crisp age classification at 25 is regular, normal, and crisp");
}

void criterion_5() {
    auto p = load_partition_text(std::string(assets::height_partition_json()));
    std::size_t medium = *p->index_of("medium");
    bool ok = true;
    for (double x : {1.51, 1.92}) {
        double mu = p->block(medium)(x);
        double nu = 1.0 - mu;
        ok = ok && std::abs(mu - 0.4) <= 1e-12 && std::abs(nu - 0.6) <= 1e-12;
    }
    line("5", ok,
         "medium carries (membership 0.4, non-membership 0.6) at both 1.51 and "
         "1.92, within 1e-12");
}

void criterion_6() {
    auto hue = load_partition_text(std::string(assets::ball_hue_partition_json()));
    auto size = load_partition_text(std::string(assets::ball_size_partition_json()));
    auto t = ConnectiveTriple::standard();
    auto red = derive_fuzzy_set(hue, t, parse_expr("red"));
    auto small = derive_fuzzy_set(size, t, parse_expr("small"));

    bool rejected = false;
    try {
        fs_combine(red, small, FsOp::And);
    } catch (const CrossPartitionError&) {
        rejected = true;
    }

    struct Ball { double hue_v, size_v, r, s; };
    const std::vector<Ball> balls = {
        {0.125, 0.5, 1.0, 0.5}, {0.5, 0.5, 0.5, 0.5}, {0.5, 0.875, 0.5, 0.0}};
    bool values_ok = true;
    for (const auto& b : balls) {
        double r = red.membership(b.hue_v);
        double s = small.membership(b.size_v);
        values_ok = values_ok && r == b.r && s == b.s &&
                    std::min(r, s) == std::min(b.r, b.s) &&
                    std::max(r, s) == std::max(b.r, b.s);
    }
    line("6", rejected && values_ok,
         "cross-attribute combination is refused; forced pointwise min/max on "
         "the raw degrees are exact");
}

void criterion_7(double* suite_seconds) {
    auto t0 = Clock::now();
    auto standard = ConnectiveTriple::standard();
    const std::vector<ConnectiveTriple> triples = {
        standard,
        ConnectiveTriple::create(NegationKind::Standard, TNormKind::Product,
                                 TConormKind::ProbabilisticSum),
        ConnectiveTriple::create(NegationKind::Standard, TNormKind::Lukasiewicz,
                                 TConormKind::BoundedSum),
        ConnectiveTriple::create(NegationKind::Standard, TNormKind::Drastic,
                                 TConormKind::Drastic)};

    {  // 7a: the membership axioms on judgements drawn from valid partitions
        std::mt19937_64 rng(71);
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            auto p = random_partition(50000 + i, {0.0, 4.0}, 1 + i % 4);
            Judgement j = judge(*p, 4.0 * uniform01(rng));
            auto rep = check_axioms(j, standard);
            ok = rep.axiom1.pass && rep.axiom5.pass;
        }
        line("7a", ok,
             "positivity and the closure bound hold on 1000 random partition "
             "judgements under the max disjunction");
    }

    {  // 7b: pointwise bound and exclusivity of full membership
        std::mt19937_64 rng(72);
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            auto p = random_partition(60000 + i, {0.0, 4.0}, 1 + i % 4);
            Judgement j = judge(*p, 4.0 * uniform01(rng));
            const auto& d = j.degrees();
            for (std::size_t a = 0; a < d.size() && ok; ++a) {
                double others = 0.0;
                for (std::size_t b = 0; b < d.size(); ++b)
                    if (b != a) others = std::max(others, d[b].second);
                double closure = d[a].second + others;
                ok = closure > 0.0 && closure <= 1.0 + 2e-9;
                if (d[a].second >= 1.0 - 1e-9)
                    for (std::size_t b = 0; b < d.size(); ++b)
                        if (b != a) ok = ok && d[b].second <= 2e-9;
            }
        }
        line("7b", ok,
             "degree plus best rival stays in (0, 1], and full membership "
             "silences every rival, on the same corpus");
    }

    {  // 7c: normal implies regular
        std::mt19937_64 rng(73);
        bool ok = true;
        int normal_seen = 0;
        for (int i = 0; i < 10000 && ok; ++i) {
            std::size_t n = 1 + rng() % 5;
            std::vector<std::pair<std::string, double>> degrees;
            for (std::size_t k = 0; k < n; ++k) {
                double d = uniform01(rng);
                if (rng() % 4 == 0) d = 1.0;
                if (rng() % 4 == 1) d = 0.0;
                degrees.emplace_back("b" + std::to_string(k), d);
            }
            auto rep = check_axioms(Judgement(0.0, std::move(degrees)),
                                    triples[i % triples.size()]);
            if (rep.normal) {
                ++normal_seen;
                ok = rep.regular;
            }
        }
        line("7c", ok && normal_seen > 0,
             "normal implies regular across 10000 random judgements (" +
                 std::to_string(normal_seen) + " normal cases seen)");
    }

    {  // 7d: duality certificates
        auto exact = [](TNormKind t) {
            return check_duality(NegationKind::Standard, t, dual_of(t)).residual;
        };
        bool ok = exact(TNormKind::Minimum) == 0.0 &&
                  exact(TNormKind::Lukasiewicz) == 0.0 &&
                  exact(TNormKind::Drastic) == 0.0 &&
                  exact(TNormKind::Product) <= 1e-15;
        line("7d", ok,
             "duality residuals: exactly 0 for min, bounded-sum, drastic; at "
             "most 1e-15 for product");
    }

    {  // 7e: De Morgan and double negation
        std::mt19937_64 rng(75);
        std::vector<std::string> names = {"a", "b", "c"};
        bool ok = true;
        for (int i = 0; i < 10000 && ok; ++i) {
            std::vector<std::pair<std::string, double>> degrees;
            for (const auto& n : names)
                degrees.emplace_back(n, static_cast<double>(rng() % 257) / 256.0);
            Judgement j(0.0, std::move(degrees));
            const auto& t = triples[i % triples.size()];
            auto a = random_expr(rng, names, 3);
            auto b = random_expr(rng, names, 3);
            double lhs = eval_measure(j, t, VagueExpr::neg(VagueExpr::disj(a, b)));
            double rhs = eval_measure(
                j, t, VagueExpr::conj(VagueExpr::neg(a), VagueExpr::neg(b)));
            double once = eval_measure(j, t, a);
            double twice = eval_measure(j, t, VagueExpr::neg(VagueExpr::neg(a)));
            ok = std::abs(lhs - rhs) <= 1e-12 && std::abs(once - twice) <= 1e-12;
        }
        line("7e", ok,
             "De Morgan and double negation hold within 1e-12 on 10000 random "
             "formulas");
    }

    {  // 7f: inversion recovers the judged point
        std::mt19937_64 rng(76);
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            auto p = random_partition(70000 + i, {-1.0, 5.0}, 1 + i % 4);
            double x = -1.0 + 6.0 * uniform01(rng);
            Judgement j = judge(*p, x);
            TargetVector tv;
            tv.tolerance = 1e-9;
            for (const auto& [name, degree] : j.degrees())
                tv.targets.emplace_back(name, degree);
            ok = invert(*p, tv).solutions.contains(x);
        }
        line("7f", ok,
             "judging then inverting contains the original point, 1000 round "
             "trips at tolerance 1e-9");
    }

    {  // 7g: exact paths against the grid oracle
        std::mt19937_64 rng(77);
        std::vector<std::string> names = {"a", "b", "c", "d"};
        bool eval_ok = true;
        for (int i = 0; i < 10000 && eval_ok; ++i) {
            std::vector<std::pair<std::string, double>> degrees;
            for (const auto& n : names)
                degrees.emplace_back(n, static_cast<double>(rng() % 257) / 256.0);
            Judgement j(0.0, std::move(degrees));
            const auto& t = triples[i % triples.size()];
            auto e = random_expr(rng, names, 4);
            eval_ok = std::abs(eval_measure(j, t, e) - oracle::o_eval(j, t, e)) <=
                      1e-12;
        }

        bool validate_ok = true;
        std::vector<PartitionCandidate> cases;
        cases.push_back(read_candidate(std::string(assets::height_partition_json())));
        cases.push_back(scaled_height("medium", 1.05));
        cases.push_back(scaled_height("tall", 0.9));
        for (int i = 0; i < 25; ++i)
            cases.push_back(
                to_candidate(*random_partition(80000 + i, {0.0, 5.0}, 1 + i % 4)));
        for (const auto& c : cases) {
            auto rep = validate_partition(c);
            auto o = oracle::o_validate(c, oracle::GridSpec{20001});
            validate_ok = validate_ok && rep.checks[0].pass == o.well_formed &&
                          rep.checks[1].pass == o.positive_cover &&
                          rep.checks[3].pass == o.attains_one &&
                          rep.checks[4].pass == o.unimodal &&
                          rep.checks[5].pass == o.bounded_sum &&
                          rep.regular == o.regular;
        }

        auto p = load_partition_text(std::string(assets::height_partition_json()));
        auto standard_t = ConnectiveTriple::standard();
        double slope_band = 3.0 / 1e5 * 20.0;  // oracle grid step times max slope
        auto sep = separation(*p, standard_t);
        auto osep = oracle::o_minimum(
            [&](double x) { return sharpness(*p, standard_t, x); }, p->domain());
        bool sep_ok = sep.exact &&
                      std::abs((1.0 - sep.value) - osep.value) <=
                          std::max(1e-9, slope_band);
        auto cd = consistent_degree(*p, standard_t, parse_expr("short"),
                                    parse_expr("medium"));
        auto ocd = oracle::o_maximum(
            [&](double x) {
                Judgement j = judge(*p, x);
                return standard_t.conj(eval_measure(j, standard_t, parse_expr("short")),
                                       eval_measure(j, standard_t, parse_expr("medium")));
            },
            p->domain());
        bool cd_ok = cd.exact &&
                     std::abs(cd.value - ocd.value) <= std::max(1e-9, slope_band);

        line("7g", eval_ok && validate_ok && sep_ok && cd_ok,
             "exact evaluation, validation verdicts, separation, and "
             "consistency all agree with the independent grid oracle");
    }

    *suite_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    line("7 (time)", *suite_seconds < 60.0,
         "property suite finished in " + fmt_secs(*suite_seconds) +
             " (budget 60s)");
}

void criterion_8() {
    bool ok = true;
    std::string detail;
    for (const std::string block : {"short", "medium", "tall"}) {
        auto up = scaled_height(block, 1.05);
        auto up_rep = validate_partition(up);
        auto up_oracle = oracle::o_validate(up, oracle::GridSpec{20001});
        bool sum_fails = !up_rep.checks[5].pass &&
                         up_rep.checks[5].witness_x.has_value() &&
                         candidate_sum_at(up, *up_rep.checks[5].witness_x) > 1.0;
        bool up_agree = up_oracle.bounded_sum == up_rep.checks[5].pass &&
                        !up_rep.valid && !up_rep.regular;

        auto down = scaled_height(block, 0.9);
        auto down_rep = validate_partition(down);
        auto down_oracle = oracle::o_validate(down, oracle::GridSpec{20001});
        bool sum_kept = down_rep.checks[5].pass && !down_rep.regular &&
                        !down_rep.checks[3].pass && !down_rep.valid;
        bool down_agree = down_oracle.bounded_sum == down_rep.checks[5].pass &&
                          down_oracle.attains_one == down_rep.checks[3].pass &&
                          down_oracle.regular == down_rep.regular;

        if (!(sum_fails && up_agree && sum_kept && down_agree)) {
            ok = false;
            detail = " (block '" + block + "' misbehaved)";
        }
    }
    line("8", ok,
         "scaling any block by 1.05 breaks the sum bound with a witness above "
         "1; by 0.9 keeps the sum bound but costs regularity; the grid oracle "
         "concurs" +
             detail);
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    double suite_seconds = 0.0;
    criterion_7(&suite_seconds);
    criterion_8();
    double total = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%d criterion line(s) failed; total %s\n", g_failures,
                fmt_secs(total).c_str());
    return g_failures == 0 ? 0 : 1;
}
