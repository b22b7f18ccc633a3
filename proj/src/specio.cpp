#include "vpart/specio.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vpart {

namespace {

using ordered_json = nlohmann::ordered_json;

void reject_unknown_keys(const ordered_json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) throw SchemaError(path.empty() ? key : path + "." + key,
                                      "unknown field");
    }
}

const ordered_json& require(const ordered_json& obj, const std::string& path,
                            const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw SchemaError(path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

double as_number(const ordered_json& v, const std::string& path) {
    if (!v.is_number()) throw SchemaError(path, "expected a number");
    return v.get<double>();
}

std::string as_string(const ordered_json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path, "expected a string");
    return v.get<std::string>();
}

}  // namespace

PartitionCandidate read_candidate(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(e.byte, e.what());
    }
    if (!doc.is_object()) throw SchemaError("", "document must be a JSON object");
    reject_unknown_keys(doc, "",
                        {"format_version", "concept", "attribute", "domain",
                         "blocks", "triple"});

    const ordered_json& ver = require(doc, "", "format_version");
    if (!ver.is_number_integer() || ver.get<long long>() != 1)
        throw SchemaError("format_version", "only version 1 is supported");

    PartitionCandidate c;
    c.concept_label = as_string(require(doc, "", "concept"), "concept");
    c.attribute = as_string(require(doc, "", "attribute"), "attribute");

    const ordered_json& dom = require(doc, "", "domain");
    if (!dom.is_array() || dom.size() != 2)
        throw SchemaError("domain", "expected [lo, hi]");
    c.domain = {as_number(dom[0], "domain[0]"), as_number(dom[1], "domain[1]")};

    const ordered_json& blocks = require(doc, "", "blocks");
    if (!blocks.is_array()) throw SchemaError("blocks", "expected an array");
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::string bpath = "blocks[" + std::to_string(b) + "]";
        const ordered_json& blk = blocks[b];
        if (!blk.is_object()) throw SchemaError(bpath, "expected an object");
        reject_unknown_keys(blk, bpath, {"name", "breakpoints"});
        BlockCandidate bc;
        bc.name = as_string(require(blk, bpath, "name"), join(bpath, "name"));
        const ordered_json& pts = require(blk, bpath, "breakpoints");
        std::string ppath = join(bpath, "breakpoints");
        if (!pts.is_array()) throw SchemaError(ppath, "expected an array");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::string ipath = ppath + "[" + std::to_string(i) + "]";
            const ordered_json& pt = pts[i];
            if (!pt.is_array() || pt.size() != 2)
                throw SchemaError(ipath, "expected [x, y]");
            bc.points.push_back({as_number(pt[0], ipath + "[0]"),
                                 as_number(pt[1], ipath + "[1]")});
        }
        c.blocks.push_back(std::move(bc));
    }

    if (auto it = doc.find("triple"); it != doc.end()) {
        const ordered_json& t = *it;
        if (!t.is_object()) throw SchemaError("triple", "expected an object");
        reject_unknown_keys(t, "triple", {"negation", "tnorm", "tconorm"});
        std::string n = as_string(require(t, "triple", "negation"), "triple.negation");
        std::string tn = as_string(require(t, "triple", "tnorm"), "triple.tnorm");
        std::string tc = as_string(require(t, "triple", "tconorm"), "triple.tconorm");
        try {
            c.triple = ConnectiveTriple::create(negation_from_string(n),
                                                tnorm_from_string(tn),
                                                tconorm_from_string(tc));
        } catch (const std::invalid_argument& e) {
            throw SchemaError("triple", e.what());
        }
    }
    return c;
}

PartitionPtr load_partition_text(const std::string& text, double tol) {
    return VaguePartition::create(read_candidate(text), tol);
}

PartitionPtr load_partition(const std::string& path, double tol) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failed on '" + path + "'");
    return load_partition_text(buf.str(), tol);
}

std::string partition_to_json(const VaguePartition& p) {
    ordered_json doc;
    doc["format_version"] = 1;
    doc["concept"] = p.concept_label();
    doc["attribute"] = p.attribute();
    doc["domain"] = {p.domain().lo, p.domain().hi};
    doc["blocks"] = ordered_json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        ordered_json blk;
        blk["name"] = p.block_name(i);
        blk["breakpoints"] = ordered_json::array();
        for (const Breakpoint& pt : p.block(i).breakpoints())
            blk["breakpoints"].push_back({pt.x, pt.y});
        doc["blocks"].push_back(std::move(blk));
    }
    const ConnectiveTriple& t = p.triple();
    doc["triple"] = {{"negation", to_string(t.negation())},
                     {"tnorm", to_string(t.tnorm())},
                     {"tconorm", to_string(t.tconorm())}};
    return doc.dump(2) + "\n";
}

void save_partition(const VaguePartition& p, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << partition_to_json(p);
    out.flush();
    if (!out) throw IoError("write failed on '" + path + "'");
}

namespace {

ordered_json verdict_json(const ConditionVerdict& v) {
    ordered_json o;
    o["pass"] = v.pass;
    if (!v.detail.empty()) o["detail"] = v.detail;
    if (v.witness_x) o["witness_x"] = *v.witness_x;
    if (v.block) o["block"] = *v.block;
    return o;
}

ordered_json verdict_json(const AxiomVerdict& v) {
    ordered_json o;
    o["pass"] = v.pass;
    if (!v.detail.empty()) o["detail"] = v.detail;
    if (v.witness) o["witness"] = *v.witness;
    return o;
}

constexpr const char* kCheckNames[6] = {"well-formed",  "positive-cover",
                                        "continuity",   "attains-one",
                                        "unimodal-plateau", "bounded-sum"};

}  // namespace

std::string validation_report_to_json(const ValidationReport& r) {
    ordered_json doc;
    doc["checks"] = ordered_json::object();
    for (std::size_t i = 0; i < r.checks.size(); ++i)
        doc["checks"][kCheckNames[i]] = verdict_json(r.checks[i]);
    if (r.sum) {
        doc["sum"] = {{"min", r.sum->min_value},
                      {"min_x", r.sum->min_x},
                      {"max", r.sum->max_value},
                      {"max_x", r.sum->max_x}};
    }
    doc["valid"] = r.valid;
    doc["regular"] = r.regular;
    return doc.dump(2) + "\n";
}

std::string space_report_to_json(const MembershipSpaceReport& r) {
    ordered_json doc;
    doc["axiom1"] = verdict_json(r.axiom1);
    doc["axiom5"] = verdict_json(r.axiom5);
    doc["closures"] = ordered_json::object();
    for (const BlockClosure& c : r.closures) doc["closures"][c.name] = c.value;
    doc["regular"] = r.regular;
    doc["normal"] = r.normal;
    doc["crisp"] = r.crisp;
    return doc.dump(2) + "\n";
}

std::string judgement_to_json(const Judgement& j) {
    ordered_json doc;
    doc["x"] = j.x();
    doc["degrees"] = ordered_json::object();
    for (const auto& [name, d] : j.degrees()) doc["degrees"][name] = d;
    return doc.dump(2) + "\n";
}

std::string inversion_to_json(const InversionResult& r) {
    ordered_json doc;
    doc["solutions"] = ordered_json::array();
    for (const Interval& piece : r.solutions.pieces) {
        if (piece.lo == piece.hi)
            doc["solutions"].push_back(piece.lo);
        else
            doc["solutions"].push_back({piece.lo, piece.hi});
    }
    doc["feasibility"] = ordered_json::array();
    for (const BlockFeasibility& f : r.feasibility) {
        ordered_json o;
        o["name"] = f.name;
        o["target"] = f.target;
        o["feasible"] = f.feasible;
        o["nearest_value"] = f.nearest_value;
        o["nearest_x"] = f.nearest_x;
        doc["feasibility"].push_back(std::move(o));
    }
    return doc.dump(2) + "\n";
}

}  // namespace vpart
