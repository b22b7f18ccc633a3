#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "vpart/assets.hpp"
#include "vpart/inverse.hpp"
#include "vpart/measure.hpp"
#include "vpart/specio.hpp"

namespace py = pybind11;
using namespace vpart;

namespace {

// Python has no const view; every bound class is immutable anyway.
std::shared_ptr<VaguePartition> unconst(PartitionPtr p) {
    return std::const_pointer_cast<VaguePartition>(std::move(p));
}
std::shared_ptr<VagueExpr> unconst(ExprPtr e) {
    return std::const_pointer_cast<VagueExpr>(std::move(e));
}

std::vector<std::pair<double, double>> pieces_of(const LevelSet& s) {
    std::vector<std::pair<double, double>> out;
    for (const Interval& piece : s.pieces) out.emplace_back(piece.lo, piece.hi);
    return out;
}

TargetVector targets_from(const std::vector<std::pair<std::string, double>>& targets,
                          double tolerance) {
    return TargetVector{targets, tolerance};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "vague-partition membership toolkit";
    m.attr("__version__") = "0.1.0";

    py::enum_<NegationKind>(m, "NegationKind")
        .value("STANDARD", NegationKind::Standard)
        .value("STRICT_SQUARE", NegationKind::StrictSquare)
        .value("GOEDEL", NegationKind::Goedel);
    py::enum_<TNormKind>(m, "TNormKind")
        .value("MINIMUM", TNormKind::Minimum)
        .value("PRODUCT", TNormKind::Product)
        .value("LUKASIEWICZ", TNormKind::Lukasiewicz)
        .value("DRASTIC", TNormKind::Drastic);
    py::enum_<TConormKind>(m, "TConormKind")
        .value("MAXIMUM", TConormKind::Maximum)
        .value("PROBABILISTIC_SUM", TConormKind::ProbabilisticSum)
        .value("BOUNDED_SUM", TConormKind::BoundedSum)
        .value("DRASTIC", TConormKind::Drastic);

    m.def("tnorm_apply", &tnorm_apply);
    m.def("tconorm_apply", &tconorm_apply);
    m.def("negation_apply", &negation_apply);
    m.def("negation_is_strong", &negation_is_strong);
    m.def("dual_of", &dual_of);

    py::class_<DualityCertificate>(m, "DualityCertificate")
        .def_readonly("dual", &DualityCertificate::dual)
        .def_readonly("residual", &DualityCertificate::residual)
        .def_readonly("witness_x", &DualityCertificate::witness_x)
        .def_readonly("witness_y", &DualityCertificate::witness_y);
    m.def("check_duality", &check_duality, py::arg("negation"), py::arg("tnorm"),
          py::arg("tconorm"), py::arg("grid_step") = 0.01);

    py::class_<ConnectiveTriple>(m, "ConnectiveTriple")
        .def_static("standard", &ConnectiveTriple::standard)
        .def_static("create", &ConnectiveTriple::create)
        .def_static(
            "of",
            [](const std::string& n, const std::string& t, const std::string& s) {
                return ConnectiveTriple::create(negation_from_string(n),
                                                tnorm_from_string(t),
                                                tconorm_from_string(s));
            },
            py::arg("negation"), py::arg("tnorm"), py::arg("tconorm"))
        .def_property_readonly("negation", &ConnectiveTriple::negation)
        .def_property_readonly("tnorm", &ConnectiveTriple::tnorm)
        .def_property_readonly("tconorm", &ConnectiveTriple::tconorm)
        .def("conj", &ConnectiveTriple::conj)
        .def("disj", &ConnectiveTriple::disj)
        .def("neg", &ConnectiveTriple::neg)
        .def(py::self == py::self)
        .def("__repr__", [](const ConnectiveTriple& t) {
            return "ConnectiveTriple(" + to_string(t.negation()) + ", " +
                   to_string(t.tnorm()) + ", " + to_string(t.tconorm()) + ")";
        });

    py::class_<VagueExpr, std::shared_ptr<VagueExpr>>(m, "VagueExpr")
        .def("__str__", [](const std::shared_ptr<VagueExpr>& e) {
            return format_expr(e);
        })
        .def("__repr__", [](const std::shared_ptr<VagueExpr>& e) {
            return "parse_expr('" + format_expr(e) + "')";
        });
    m.def("parse_expr",
          [](const std::string& text) { return unconst(parse_expr(text)); });
    m.def("format_expr",
          [](const std::shared_ptr<VagueExpr>& e) { return format_expr(e); });
    m.def("atoms_of",
          [](const std::shared_ptr<VagueExpr>& e) { return atoms_of(e); });

    py::class_<PiecewiseLinearFn>(m, "PiecewiseLinearFn")
        .def("__call__", &PiecewiseLinearFn::operator())
        .def_property_readonly("domain",
                               [](const PiecewiseLinearFn& f) {
                                   return std::pair(f.domain().lo, f.domain().hi);
                               })
        .def_property_readonly("breakpoints", [](const PiecewiseLinearFn& f) {
            std::vector<std::pair<double, double>> pts;
            for (const Breakpoint& p : f.breakpoints()) pts.emplace_back(p.x, p.y);
            return pts;
        });

    py::class_<ConditionVerdict>(m, "ConditionVerdict")
        .def_readonly("ok", &ConditionVerdict::pass)
        .def_readonly("detail", &ConditionVerdict::detail)
        .def_readonly("witness_x", &ConditionVerdict::witness_x)
        .def_readonly("block", &ConditionVerdict::block);
    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("checks", &ValidationReport::checks)
        .def_readonly("valid", &ValidationReport::valid)
        .def_readonly("regular", &ValidationReport::regular);

    py::class_<VaguePartition, std::shared_ptr<VaguePartition>>(m, "VaguePartition")
        .def_property_readonly("concept", &VaguePartition::concept_label)
        .def_property_readonly("attribute", &VaguePartition::attribute)
        .def_property_readonly("domain",
                               [](const VaguePartition& p) {
                                   return std::pair(p.domain().lo, p.domain().hi);
                               })
        .def_property_readonly("triple", &VaguePartition::triple)
        .def_property_readonly("regular", &VaguePartition::regular)
        .def_property_readonly("block_names",
                               [](const VaguePartition& p) {
                                   std::vector<std::string> names;
                                   for (std::size_t i = 0; i < p.size(); ++i)
                                       names.push_back(p.block_name(i));
                                   return names;
                               })
        .def("__len__", &VaguePartition::size)
        .def("block",
             [](const VaguePartition& p, std::size_t i) { return p.block(i); })
        .def("block",
             [](const VaguePartition& p, const std::string& name) {
                 auto idx = p.index_of(name);
                 if (!idx) throw py::key_error(name);
                 return p.block(*idx);
             })
        .def(py::self == py::self);

    m.def("load_partition_text",
          [](const std::string& text, double tol) {
              return unconst(load_partition_text(text, tol));
          },
          py::arg("text"), py::arg("tol") = 1e-9);
    m.def("load_partition",
          [](const std::string& path, double tol) {
              return unconst(load_partition(path, tol));
          },
          py::arg("path"), py::arg("tol") = 1e-9);
    m.def("partition_to_json",
          [](const std::shared_ptr<VaguePartition>& p) {
              return partition_to_json(*p);
          });
    m.def("save_partition",
          [](const std::shared_ptr<VaguePartition>& p, const std::string& path) {
              save_partition(*p, path);
          });
    m.def("validate_text", [](const std::string& text) {
        return validate_partition(read_candidate(text));
    });
    m.def("random_partition",
          [](std::uint64_t seed, std::pair<double, double> domain, std::size_t n) {
              return unconst(
                  random_partition(seed, {domain.first, domain.second}, n));
          },
          py::arg("seed"), py::arg("domain") = std::pair(0.0, 1.0),
          py::arg("n_blocks") = 3);

    py::class_<Judgement>(m, "Judgement")
        .def(py::init<double, std::vector<std::pair<std::string, double>>>(),
             py::arg("x"), py::arg("degrees"))
        .def_property_readonly("x", &Judgement::x)
        .def_property_readonly("degrees", &Judgement::degrees)
        .def("find", [](const Judgement& j, const std::string& name) {
            return j.find(name);
        });
    m.def("judge", [](const std::shared_ptr<VaguePartition>& p, double x) {
        return judge(*p, x);
    });
    m.def("eval_measure",
          [](const Judgement& j, const ConnectiveTriple& t,
             const std::shared_ptr<VagueExpr>& e) { return eval_measure(j, t, e); });

    py::class_<AxiomVerdict>(m, "AxiomVerdict")
        .def_readonly("ok", &AxiomVerdict::pass)
        .def_readonly("detail", &AxiomVerdict::detail)
        .def_readonly("witness", &AxiomVerdict::witness);
    py::class_<BlockClosure>(m, "BlockClosure")
        .def_readonly("name", &BlockClosure::name)
        .def_readonly("value", &BlockClosure::value);
    py::class_<MembershipSpaceReport>(m, "MembershipSpaceReport")
        .def_readonly("axiom1", &MembershipSpaceReport::axiom1)
        .def_readonly("axiom5", &MembershipSpaceReport::axiom5)
        .def_readonly("closures", &MembershipSpaceReport::closures)
        .def_readonly("regular", &MembershipSpaceReport::regular)
        .def_readonly("normal", &MembershipSpaceReport::normal)
        .def_readonly("crisp", &MembershipSpaceReport::crisp);
    m.def("check_axioms",
          [](const Judgement& j, const ConnectiveTriple& t, double tol) {
              return check_axioms(j, t, tol);
          },
          py::arg("judgement"), py::arg("triple"), py::arg("tol") = 1e-9);

    py::enum_<FsOp>(m, "FsOp").value("AND", FsOp::And).value("OR", FsOp::Or);
    py::class_<FuzzySet>(m, "FuzzySet")
        .def("__call__", &FuzzySet::membership)
        .def("membership", &FuzzySet::membership)
        .def_property_readonly("partition",
                               [](const FuzzySet& f) { return unconst(f.partition()); })
        .def_property_readonly("triple", &FuzzySet::triple)
        .def_property_readonly("expr",
                               [](const FuzzySet& f) { return unconst(f.expr()); })
        .def_property_readonly("exact",
                               [](const FuzzySet& f) { return f.derived().exact; })
        .def_property_readonly(
            "grid_step", [](const FuzzySet& f) { return f.derived().grid_step; })
        .def_property_readonly("derived_fn",
                               [](const FuzzySet& f) { return f.derived().fn; });
    m.def("derive_fuzzy_set",
          [](const std::shared_ptr<VaguePartition>& p, const ConnectiveTriple& t,
             const std::shared_ptr<VagueExpr>& e, double grid_step) {
              return derive_fuzzy_set(p, t, e, grid_step);
          },
          py::arg("partition"), py::arg("triple"), py::arg("expr"),
          py::arg("grid_step") = 0.0);
    m.def("fs_membership", &fs_membership);
    m.def("fs_combine", &fs_combine);

    py::class_<MeasuredValue>(m, "MeasuredValue")
        .def_readonly("value", &MeasuredValue::value)
        .def_readonly("exact", &MeasuredValue::exact)
        .def_readonly("grid_step", &MeasuredValue::grid_step)
        .def_readonly("witness_x", &MeasuredValue::witness_x);
    m.def("sharpness",
          [](const std::shared_ptr<VaguePartition>& p, const ConnectiveTriple& t,
             double x) { return sharpness(*p, t, x); });
    m.def("separation",
          [](const std::shared_ptr<VaguePartition>& p, const ConnectiveTriple& t,
             double grid_step) { return separation(*p, t, grid_step); },
          py::arg("partition"), py::arg("triple"), py::arg("grid_step") = 0.0);
    m.def("consistent_degree",
          [](const std::shared_ptr<VaguePartition>& p, const ConnectiveTriple& t,
             const std::shared_ptr<VagueExpr>& a, const std::shared_ptr<VagueExpr>& b,
             double grid_step) { return consistent_degree(*p, t, a, b, grid_step); },
          py::arg("partition"), py::arg("triple"), py::arg("a"), py::arg("b"),
          py::arg("grid_step") = 0.0);
    m.def("incompatible",
          [](const std::shared_ptr<VaguePartition>& p, const ConnectiveTriple& t,
             const std::shared_ptr<VagueExpr>& a, const std::shared_ptr<VagueExpr>& b,
             double tol) { return incompatible(*p, t, a, b, tol); },
          py::arg("partition"), py::arg("triple"), py::arg("a"), py::arg("b"),
          py::arg("tol") = 1e-9);

    py::class_<BlockFeasibility>(m, "BlockFeasibility")
        .def_readonly("name", &BlockFeasibility::name)
        .def_readonly("target", &BlockFeasibility::target)
        .def_readonly("feasible", &BlockFeasibility::feasible)
        .def_readonly("nearest_value", &BlockFeasibility::nearest_value)
        .def_readonly("nearest_x", &BlockFeasibility::nearest_x);
    py::class_<InversionResult>(m, "InversionResult")
        .def_property_readonly(
            "solutions", [](const InversionResult& r) { return pieces_of(r.solutions); })
        .def_readonly("feasibility", &InversionResult::feasibility)
        .def("__bool__",
             [](const InversionResult& r) { return !r.solutions.empty(); });
    m.def("invert",
          [](const std::shared_ptr<VaguePartition>& p,
             const std::vector<std::pair<std::string, double>>& targets,
             double tolerance) { return invert(*p, targets_from(targets, tolerance)); },
          py::arg("partition"), py::arg("targets"), py::arg("tolerance") = 0.0);
    m.def("invert_approx",
          [](const std::shared_ptr<VaguePartition>& p,
             const std::vector<std::pair<std::string, double>>& targets, double tol) {
              return invert_approx(*p, targets_from(targets, 0.0), tol);
          },
          py::arg("partition"), py::arg("targets"), py::arg("tol"));

    m.def("height_partition_json",
          [] { return std::string(assets::height_partition_json()); });
    m.def("ball_hue_partition_json",
          [] { return std::string(assets::ball_hue_partition_json()); });
    m.def("ball_size_partition_json",
          [] { return std::string(assets::ball_size_partition_json()); });

    py::register_exception<ValidationError>(m, "PartitionValidationError");
    py::register_exception<CrossPartitionError>(m, "CrossPartitionError");
    py::register_exception<BindingError>(m, "BindingError");
    py::register_exception<ParseError>(m, "ExprParseError");
    py::register_exception<SyntaxError>(m, "DocumentSyntaxError");
    py::register_exception<SchemaError>(m, "DocumentSchemaError");
}
