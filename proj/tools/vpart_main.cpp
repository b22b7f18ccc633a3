#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vpart/assets.hpp"
#include "vpart/inverse.hpp"
#include "vpart/measure.hpp"
#include "vpart/specio.hpp"

using namespace vpart;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_report(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
}

ConnectiveTriple parse_triple(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3)
        throw std::invalid_argument("--triple expects negation,tnorm,tconorm");
    return ConnectiveTriple::create(negation_from_string(parts[0]),
                                    tnorm_from_string(parts[1]),
                                    tconorm_from_string(parts[2]));
}

// The document's own triple unless --triple was given explicitly.
ConnectiveTriple pick_triple(const std::optional<std::string>& spec,
                             const VaguePartition& p) {
    return spec ? parse_triple(*spec) : p.triple();
}

constexpr const char* kCheckLabels[6] = {"well-formed",      "positive cover",
                                         "continuity",       "attains one",
                                         "unimodal plateau", "bounded sum"};

int cmd_validate(const std::string& file, const std::string& report_path) {
    ValidationReport rep = validate_partition(read_candidate(read_file(file)));
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const ConditionVerdict& v = rep.checks[i];
        if (v.pass)
            std::printf("%s: pass\n", kCheckLabels[i]);
        else
            std::printf("%s: FAIL (%s)\n", kCheckLabels[i], v.detail.c_str());
    }
    if (rep.sum)
        std::printf("sum range: [%s, %s]\n", fmt(rep.sum->min_value).c_str(),
                     fmt(rep.sum->max_value).c_str());
    std::printf("valid: %s\n", rep.valid ? "yes" : "no");
    std::printf("regular: %s\n", rep.regular ? "yes" : "no");
    if (!report_path.empty()) write_report(report_path, validation_report_to_json(rep));
    return rep.valid ? 0 : 1;
}

int cmd_eval(const std::string& file, double x, const std::optional<std::string>& expr,
             const std::optional<std::string>& triple_spec,
             const std::string& report_path) {
    PartitionPtr p = load_partition(file);
    ConnectiveTriple t = pick_triple(triple_spec, *p);
    Judgement j = judge(*p, x);

    ordered_json report;
    report["x"] = x;
    if (expr) {
        double v = eval_measure(j, t, parse_expr(*expr));
        std::printf("%s\n", fmt(v).c_str());
        report["expr"] = *expr;
        report["value"] = v;
    } else {
        for (const auto& [name, d] : j.degrees())
            std::printf("%s=%s\n", name.c_str(), fmt(d).c_str());
        report["degrees"] = ordered_json::object();
        for (const auto& [name, d] : j.degrees()) report["degrees"][name] = d;
    }
    if (!report_path.empty()) write_report(report_path, report.dump(2) + "\n");
    return 0;
}

std::string level_set_text(const LevelSet& s) {
    if (s.pieces.size() == 1 && s.pieces[0].lo == s.pieces[0].hi)
        return "x = " + fmt(s.pieces[0].lo);
    bool all_points = true;
    for (const Interval& piece : s.pieces)
        all_points = all_points && piece.lo == piece.hi;
    std::string out = "x ∈ ";
    if (all_points) {
        out += "{";
        for (std::size_t i = 0; i < s.pieces.size(); ++i)
            out += (i ? ", " : "") + fmt(s.pieces[i].lo);
        out += "}";
        return out;
    }
    for (std::size_t i = 0; i < s.pieces.size(); ++i) {
        const Interval& piece = s.pieces[i];
        if (i) out += " ∪ ";
        if (piece.lo == piece.hi)
            out += "{" + fmt(piece.lo) + "}";
        else
            out += "[" + fmt(piece.lo) + ", " + fmt(piece.hi) + "]";
    }
    return out;
}

int cmd_invert(const std::string& file, const std::vector<std::string>& pairs,
               double tol, const std::string& report_path) {
    PartitionPtr p = load_partition(file);
    TargetVector tv;
    tv.tolerance = tol;
    for (const std::string& pair : pairs) {
        auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("target '" + pair + "' is not name=value");
        std::size_t used = 0;
        double value = std::stod(pair.substr(eq + 1), &used);
        if (eq + 1 + used != pair.size())
            throw std::invalid_argument("target '" + pair + "' has a malformed value");
        tv.targets.emplace_back(pair.substr(0, eq), value);
    }
    InversionResult res = invert(*p, tv);
    if (!report_path.empty()) write_report(report_path, inversion_to_json(res));
    if (res.solutions.empty()) {
        std::printf("no solution\n");
        for (const BlockFeasibility& f : res.feasibility)
            std::printf("  %s: target %s, nearest attainable %s at x = %s\n",
                        f.name.c_str(), fmt(f.target).c_str(),
                        fmt(f.nearest_value).c_str(), fmt(f.nearest_x).c_str());
        return 1;
    }
    std::printf("%s\n", level_set_text(res.solutions).c_str());
    return 0;
}

int cmd_measure(const std::string& file, const std::optional<double>& sharp_x,
                bool want_separation, const std::vector<std::string>& consistency,
                const std::optional<std::string>& triple_spec, double grid_step,
                const std::string& report_path) {
    int modes = (sharp_x ? 1 : 0) + (want_separation ? 1 : 0) +
                (consistency.empty() ? 0 : 1);
    if (modes != 1)
        throw std::invalid_argument(
            "pick exactly one of --sharpness, --separation, --consistency");

    PartitionPtr p = load_partition(file);
    ConnectiveTriple t = pick_triple(triple_spec, *p);
    ordered_json report;

    if (sharp_x) {
        double a = sharpness(*p, t, *sharp_x);
        std::printf("sharpness = %s\n", fmt(a).c_str());
        report = {{"quantity", "sharpness"}, {"x", *sharp_x}, {"value", a}};
    } else if (want_separation) {
        MeasuredValue m = separation(*p, t, grid_step);
        if (m.exact)
            std::printf("separation = %s (exact)\n", fmt(m.value).c_str());
        else
            std::printf("separation = %s (grid, step %s)\n", fmt(m.value).c_str(),
                        fmt(m.grid_step).c_str());
        report = {{"quantity", "separation"},
                  {"value", m.value},
                  {"exact", m.exact},
                  {"grid_step", m.grid_step},
                  {"witness_x", m.witness_x}};
    } else {
        ExprPtr a = parse_expr(consistency[0]);
        ExprPtr b = parse_expr(consistency[1]);
        MeasuredValue m = consistent_degree(*p, t, a, b, grid_step);
        if (m.exact)
            std::printf("consistency = %s (exact) at x = %s\n", fmt(m.value).c_str(),
                        fmt(m.witness_x).c_str());
        else
            std::printf("consistency = %s (grid, step %s) at x = %s\n",
                        fmt(m.value).c_str(), fmt(m.grid_step).c_str(),
                        fmt(m.witness_x).c_str());
        std::printf("incompatible: %s\n", incompatible(*p, t, a, b) ? "yes" : "no");
        report = {{"quantity", "consistency"},
                  {"value", m.value},
                  {"exact", m.exact},
                  {"grid_step", m.grid_step},
                  {"witness_x", m.witness_x},
                  {"incompatible", incompatible(*p, t, a, b)}};
    }
    if (!report_path.empty()) write_report(report_path, report.dump(2) + "\n");
    return 0;
}

void print_line(const std::string& label, double expected, double computed) {
    std::printf("%-14s expected %-6s computed %s\n", (label + ":").c_str(),
                fmt(expected).c_str(), fmt(computed).c_str());
}

int demo_example51() {
    PartitionPtr p = load_partition_text(std::string(assets::height_partition_json()));
    ConnectiveTriple t = p->triple();
    std::printf("height partition: valid, %s\n",
                p->regular() ? "regular" : "sub-regular");

    std::printf("\njudgement at x = 1.5\n");
    Judgement j = judge(*p, 1.5);
    print_line("short", 0.625, j.find("short").value());
    print_line("medium", 0.375, j.find("medium").value());
    print_line("tall", 0.0, j.find("tall").value());

    std::printf("\nrecover x from short=0, medium=0.4, tall=0.6\n");
    InversionResult res =
        invert(*p, {{{"short", 0.0}, {"medium", 0.4}, {"tall", 0.6}}, 0.0});
    std::printf("%s (expected x = 1.92)\n", level_set_text(res.solutions).c_str());

    std::printf("\nrecover x from medium=0.4 alone\n");
    InversionResult amb = invert(*p, {{{"medium", 0.4}}, 0.0});
    std::printf("%s (expected two candidates, 1.51 and 1.92)\n",
                level_set_text(amb.solutions).c_str());

    MeasuredValue sep = separation(*p, t);
    std::printf("\n");
    print_line("separation", 0.5, sep.value);
    return 0;
}

int demo_example44() {
    std::printf("crisp age classification, x = 25\n");
    Judgement j(25.0, {{"0-40", 1.0},
                       {"40-80", 0.0},
                       {"80-120", 0.0},
                       {"120-160", 0.0},
                       {"160-200", 0.0}});
    MembershipSpaceReport rep = check_axioms(j, ConnectiveTriple::standard());
    std::printf("axiom 1: %s, axiom 5: %s\n", rep.axiom1.pass ? "pass" : "FAIL",
                rep.axiom5.pass ? "pass" : "FAIL");
    std::printf("regular: %s (expected yes)\n", rep.regular ? "yes" : "no");
    std::printf("normal: %s (expected yes)\n", rep.normal ? "yes" : "no");
    std::printf("crisp: %s (expected yes)\n", rep.crisp ? "yes" : "no");
    return 0;
}

int demo_example45() {
    std::printf("vague age judgement, x = 35: young 0.6, old 0.4\n");
    Judgement j(35.0, {{"young", 0.6}, {"old", 0.4}});
    ConnectiveTriple t = ConnectiveTriple::standard();
    MembershipSpaceReport rep = check_axioms(j, t);
    std::printf("regular: %s (expected yes)\n", rep.regular ? "yes" : "no");
    std::printf("normal: %s (expected no)\n", rep.normal ? "yes" : "no");
    print_line("young | old", 0.6, eval_measure(j, t, parse_expr("young | old")));
    print_line("!old", 0.6, eval_measure(j, t, parse_expr("!old")));
    return 0;
}

int demo_edgington() {
    PartitionPtr hue = load_partition_text(std::string(assets::ball_hue_partition_json()));
    PartitionPtr size =
        load_partition_text(std::string(assets::ball_size_partition_json()));
    ConnectiveTriple t = ConnectiveTriple::standard();
    FuzzySet red = derive_fuzzy_set(hue, t, parse_expr("red"));
    FuzzySet small = derive_fuzzy_set(size, t, parse_expr("small"));

    struct Ball {
        const char* name;
        double hue, diameter;
    };
    const Ball balls[] = {{"a", 0.125, 0.5}, {"b", 0.5, 0.5}, {"c", 0.5, 0.875}};
    const double expect_r[] = {1.0, 0.5, 0.5};
    const double expect_s[] = {0.5, 0.5, 0.0};

    std::printf("three balls, judged on two separate attributes\n");
    for (int i = 0; i < 3; ++i) {
        std::printf("ball %s: ", balls[i].name);
        print_line("red", expect_r[i], red.membership(balls[i].hue));
        std::printf("         ");
        print_line("small", expect_s[i], small.membership(balls[i].diameter));
    }

    std::printf("\ncombining across the two partitions:\n");
    try {
        fs_combine(red, small, FsOp::And);
        std::printf("unexpectedly accepted\n");
        return 1;
    } catch (const CrossPartitionError& e) {
        std::printf("rejected: %s\n", e.what());
    }

    std::printf("\nforced pointwise min/max on the bare degrees, for contrast:\n");
    const double expect_and[] = {0.5, 0.5, 0.0};
    const double expect_or[] = {1.0, 0.5, 0.5};
    for (int i = 0; i < 3; ++i) {
        double r = red.membership(balls[i].hue);
        double s = small.membership(balls[i].diameter);
        std::printf("ball %s: ", balls[i].name);
        print_line("min(red,small)", expect_and[i], std::min(r, s));
        std::printf("         ");
        print_line("max(red,small)", expect_or[i], std::max(r, s));
    }
    return 0;
}

int demo_intuitionistic() {
    PartitionPtr p = load_partition_text(std::string(assets::height_partition_json()));
    std::printf("membership/non-membership pairs for the middle block\n");
    for (double x : {1.51, 1.92}) {
        double mu = p->block(1)(x);
        double nu = 1.0 - mu;
        std::printf("x = %s: ", fmt(x).c_str());
        print_line("membership", 0.4, mu);
        std::printf("           ");
        print_line("non-member", 0.6, nu);
    }
    std::printf("\nthe pairs coincide, yet the full judgements differ:\n");
    for (double x : {1.51, 1.92}) {
        std::printf("x = %s:", fmt(x).c_str());
        Judgement j = judge(*p, x);
        for (const auto& [name, d] : j.degrees())
            std::printf(" %s=%s", name.c_str(), fmt(d).c_str());
        std::printf("\n");
    }
    return 0;
}

int cmd_demo(const std::string& name) {
    if (name == "example51") return demo_example51();
    if (name == "example44") return demo_example44();
    if (name == "example45") return demo_example45();
    if (name == "edgington") return demo_edgington();
    if (name == "intuitionistic") return demo_intuitionistic();
    std::fprintf(stderr, "error: unknown demo '%s'\n", name.c_str());
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vague-partition membership toolkit"};
    app.require_subcommand(1);

    std::string triple_spec;
    std::string report_path;
    double grid_step = 0.0;
    auto* triple_opt =
        app.add_option("--triple", triple_spec,
                       "connectives as negation,tnorm,tconorm (default: the "
                       "document's, else standard,min,max)");
    app.add_option("--report", report_path, "write a JSON report to this path");
    app.add_option("--grid-step", grid_step,
                   "sample step for quantities with no exact path");

    auto* validate = app.add_subcommand("validate", "check a partition document");
    std::string validate_file;
    validate->add_option("file", validate_file, "partition document")->required();
    validate->fallthrough();

    auto* eval = app.add_subcommand("eval", "judge an object, optionally through "
                                            "an expression");
    std::string eval_file, eval_expr;
    double eval_x = 0.0;
    eval->add_option("file", eval_file, "partition document")->required();
    eval->add_option("--x", eval_x, "object to judge")->required();
    auto* expr_opt = eval->add_option("--expr", eval_expr,
                                      "expression over block names (&, |, !, "
                                      "bot, top)");
    eval->fallthrough();

    auto* invert_cmd =
        app.add_subcommand("invert", "find the objects matching target degrees");
    std::string invert_file;
    std::vector<std::string> invert_pairs;
    double invert_tol = 0.0;
    invert_cmd->add_option("file", invert_file, "partition document")->required();
    invert_cmd->add_option("targets", invert_pairs, "name=degree targets")
        ->required()
        ->expected(-1);
    invert_cmd->add_option("--tol", invert_tol, "match |degree - target| <= tol");
    invert_cmd->fallthrough();

    auto* measure = app.add_subcommand("measure", "sharpness, separation, or "
                                                  "consistency");
    std::string measure_file;
    double measure_sharp_x = 0.0;
    bool measure_separation = false;
    std::vector<std::string> measure_consistency;
    measure->add_option("file", measure_file, "partition document")->required();
    auto* sharp_opt =
        measure->add_option("--sharpness", measure_sharp_x, "at this object");
    measure->add_flag("--separation", measure_separation,
                      "how cleanly the blocks divide the domain");
    measure->add_option("--consistency", measure_consistency,
                        "two expressions to test jointly")
        ->expected(2);
    measure->fallthrough();

    auto* demo = app.add_subcommand("demo", "run a bundled worked scenario");
    std::string demo_name;
    demo->add_option("name", demo_name,
                     "example51 | example44 | example45 | edgington | "
                     "intuitionistic")
        ->required();
    demo->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::optional<std::string> triple_arg;
    if (triple_opt->count() > 0) triple_arg = triple_spec;

    try {
        if (validate->parsed()) return cmd_validate(validate_file, report_path);
        if (eval->parsed())
            return cmd_eval(eval_file, eval_x,
                            expr_opt->count() ? std::optional(eval_expr) : std::nullopt,
                            triple_arg, report_path);
        if (invert_cmd->parsed())
            return cmd_invert(invert_file, invert_pairs, invert_tol, report_path);
        if (measure->parsed())
            return cmd_measure(measure_file,
                               sharp_opt->count() ? std::optional(measure_sharp_x)
                                                  : std::nullopt,
                               measure_separation, measure_consistency, triple_arg,
                               grid_step, report_path);
        if (demo->parsed()) return cmd_demo(demo_name);
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "partition invalid: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
