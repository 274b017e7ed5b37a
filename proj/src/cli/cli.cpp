#include "loophom/cli/cli.hpp"

#include "loophom/loops/decompose.hpp"
#include "loophom/loops/factors.hpp"
#include "loophom/manifold/ring.hpp"
#include "loophom/pitables/sphere_table.hpp"
#include "loophom/rational/coformality.hpp"
#include "loophom/rational/lie.hpp"
#include "loophom/rational/quadratic.hpp"
#include "loophom/rational/sullivan.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace loophom::cli {

using nlohmann::json;
using pitables::integer_to_json;

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

json series_to_json(const series::TruncatedSeries& s)
{
    json out = json::array();
    for (const auto& c : s.coefficients())
        out.push_back(is_integral(c) ? integer_to_json(numerator_of(c)) : json(to_string(c)));
    return out;
}

json lie_to_json(const series::GradedLieDims& dims)
{
    json out = json::array();
    for (const auto& v : dims.values())
        out.push_back(integer_to_json(v));
    return out;
}

std::string json_list_text(const json& values)
{
    std::vector<std::string> parts;
    for (const auto& v : values)
        parts.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    return join(parts, ", ");
}

std::string vector_text(const json& values) { return "(" + json_list_text(values) + ")"; }

json describe(const ValidatedInput& in)
{
    const auto ring = manifold::cohomology_ring(in.base, in.bundle);
    json out;
    out["betti"] = ring.ring.betti_numbers();
    out["rationally_elliptic"] = rational::is_rationally_elliptic(in.base, in.bundle);
    if (in.base.rank() == 0) {
        out["k"] = manifold::d0_cell_structure(in.base, in.bundle).k;
    } else {
        const auto y = loops::y_space_report(in.base, in.bundle);
        out["y_space"] = {{"beta", y.beta}, {"case", y.case_label}, {"cells", y.y_cells}, {"route", y.route}};
    }
    return out;
}

json decompose_result(const ValidatedInput& in, std::vector<std::string>& warnings)
{
    const auto dec = loops::decompose(in.base, in.bundle);
    json out{{"loop_space", dec.loop_space.to_json()}, {"text", dec.loop_space.render()}};
    if (dec.extension_note) {
        out["extension_note"] = *dec.extension_note;
        warnings.push_back(*dec.extension_note);
    }
    return out;
}

json pi_result(const ValidatedInput& in, const pitables::SphereTable& table, int max_k,
               std::vector<std::string>& warnings)
{
    const auto cutoff = static_cast<std::size_t>(max_k);
    const auto factors = loops::loop_factors(in.base, in.bundle, cutoff);
    if (factors.truncated)
        warnings.push_back("loop factors listed through Loop(S^" + std::to_string(cutoff + 1) + ")");
    json groups = json::array();
    for (int k = 2; k <= max_k; ++k) {
        try {
            const auto g = pitables::pi_manifold(factors, table, k);
            groups.push_back({{"k", k}, {"group", g.to_json()}});
        } catch (const Error& e) {
            groups.push_back({{"k", k}, {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}});
            warnings.push_back("pi_" + std::to_string(k) + "(M) not determined");
        }
    }
    return {{"max", max_k}, {"groups", groups}};
}

json series_result(const ValidatedInput& in, std::size_t cutoff)
{
    const auto dec = loops::decompose(in.base, in.bundle);
    return {{"cutoff", cutoff}, {"loop_homology", series_to_json(loops::loop_homology_series(dec.loop_space, cutoff))}};
}

json rational_result(const ValidatedInput& in, std::size_t cutoff)
{
    const std::size_t d = in.base.rank();
    json out;
    out["cutoff"] = cutoff;
    out["ranks"] = lie_to_json(rational::ranks_from_decomposition(loops::loop_factors(in.base, in.bundle, cutoff), cutoff));
    out["rationally_elliptic"] = rational::is_rationally_elliptic(in.base, in.bundle);
    if (d >= 1) {
        const auto c = rational::coformality_check(in.base, in.bundle, cutoff);
        out["coformality"] = {{"verdict", rational::to_string(c.verdict)}, {"witness", c.witness}};
        if (c.lie_dims)
            out["koszul_ranks"] = lie_to_json(*c.lie_dims);
    }
    return out;
}

json koszul_result(const ValidatedInput& in, std::size_t cutoff)
{
    const auto ring = manifold::cohomology_ring(in.base, in.bundle);
    const auto p = rational::quadratic_presentation(ring);
    const auto dual = rational::koszul_dual(p, cutoff);
    return {{"cutoff", cutoff},
            {"generators", p.labels()},
            {"relations", p.relations().size()},
            {"hilbert", series_to_json(rational::hilbert_series(p, cutoff))},
            {"dual", series_to_json(dual.series)},
            {"checked_weight", dual.checked_weight},
            {"lie_dims", lie_to_json(series::pbw_invert(dual.series))}};
}

json model_result(const ValidatedInput& in, const std::optional<std::string>& k_text, std::size_t cutoff)
{
    if (in.base.rank() != 1)
        fail(ErrorCode::Unsupported, "an explicit Sullivan model is provided for d = 1 only");
    const Rational k = k_text ? parse_rational(*k_text) : rational::d1_model_parameter(in.base, in.bundle);
    const auto m = rational::d1_model(k);
    json diffs = json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!m.differential(i).empty())
            diffs.push_back(m.render_differential(i));
    return {{"k", to_string(k)},
            {"model", m.to_json()},
            {"differentials", diffs},
            {"cohomology", rational::cdga_cohomology(m, cutoff)}};
}

json compare_result(const ValidatedInput& a, const ValidatedInput& b)
{
    const bool equivalent = manifold::loop_rigidity_equivalent(a.base, a.bundle, b.base, b.bundle);
    const auto da = loops::decompose(a.base, a.bundle);
    const auto db = loops::decompose(b.base, b.bundle);
    return {{"loop_spaces_equivalent", equivalent},
            {"decompositions_equal", da.loop_space == db.loop_space},
            {"loop_spaces", {da.loop_space.render(), db.loop_space.render()}}};
}

std::vector<std::string> summary_lines(const json& s)
{
    std::vector<std::string> lines;
    if (s.contains("name"))
        lines.push_back("name: " + s["name"].get<std::string>());
    lines.push_back("d: " + s["d"].dump());
    lines.push_back(std::string("spin: ") + (s["spin"].get<bool>() ? "true" : "false"));
    lines.push_back("alpha: " + vector_text(s["alpha"]));
    lines.push_back("ell: " + s["ell"].dump());
    if (s.contains("case"))
        lines.push_back("case: " + s["case"].get<std::string>());
    return lines;
}

std::vector<std::string> result_lines(const std::string& command, const json& r)
{
    std::vector<std::string> lines;
    if (command == "describe") {
        lines.push_back("betti: " + json_list_text(r["betti"]));
        if (r.contains("k"))
            lines.push_back("k: " + r["k"].dump());
        if (r.contains("y_space")) {
            lines.push_back("Y: " + r["y_space"]["cells"].get<std::string>());
            lines.push_back("route: " + r["y_space"]["route"].get<std::string>());
        }
        lines.push_back(std::string("rationally elliptic: ") + (r["rationally_elliptic"].get<bool>() ? "true" : "false"));
    } else if (command == "decompose") {
        lines.push_back(r["text"].get<std::string>());
    } else if (command == "pi") {
        for (const auto& g : r["groups"]) {
            const std::string head = "pi_" + g["k"].dump() + "(M)";
            if (g.contains("group"))
                lines.push_back(head + " = " + g["group"]["text"].get<std::string>());
            else
                lines.push_back(head + ": " + g["error"]["code"].get<std::string>() + ": " +
                                g["error"]["message"].get<std::string>());
        }
    } else if (command == "series") {
        lines.push_back(json_list_text(r["loop_homology"]));
    } else if (command == "rational") {
        lines.push_back("ranks: " + json_list_text(r["ranks"]));
        if (r.contains("koszul_ranks"))
            lines.push_back("koszul ranks: " + json_list_text(r["koszul_ranks"]));
        if (r.contains("coformality"))
            lines.push_back(r["coformality"]["verdict"].get<std::string>() + ": " +
                            r["coformality"]["witness"].get<std::string>());
        lines.push_back(std::string("rationally elliptic: ") + (r["rationally_elliptic"].get<bool>() ? "true" : "false"));
    } else if (command == "koszul") {
        lines.push_back("generators: " + json_list_text(r["generators"]));
        lines.push_back("relations: " + r["relations"].dump());
        lines.push_back("hilbert: " + json_list_text(r["hilbert"]));
        lines.push_back("dual: " + json_list_text(r["dual"]));
        lines.push_back("checked through weight: " + r["checked_weight"].dump());
        lines.push_back("lie: " + json_list_text(r["lie_dims"]));
    } else if (command == "model") {
        std::vector<std::string> gens;
        for (const auto& g : r["model"]["generators"])
            gens.push_back(g["name"].get<std::string>() + "_" + g["degree"].dump());
        lines.push_back("generators: " + join(gens, ", "));
        for (const auto& d : r["differentials"])
            lines.push_back(d.get<std::string>());
        lines.push_back("cohomology: " + json_list_text(r["cohomology"]));
    } else if (command == "compare") {
        lines.push_back(std::string("loop spaces equivalent: ") +
                        (r["loop_spaces_equivalent"].get<bool>() ? "true" : "false"));
        lines.push_back(std::string("decompositions equal: ") +
                        (r["decompositions_equal"].get<bool>() ? "true" : "false"));
    }
    return lines;
}

} // namespace

ManifoldSpec parse_spec(const json& j)
{
    try {
        if (!j.is_object())
            fail(ErrorCode::ParseError, "manifold spec must be a JSON object");
        if (j.contains("schema") && j.at("schema").get<int>() != kSchemaVersion)
            fail(ErrorCode::ParseError, "unsupported schema version " + j.at("schema").dump());
        ManifoldSpec spec;
        if (j.contains("name"))
            spec.name = j.at("name").get<std::string>();
        spec.intersection_form = j.at("intersection_form").get<IntMatrix>();
        spec.w2 = j.contains("w2") ? j.at("w2").get<manifold::Z2Vector>() : manifold::Z2Vector{};
        spec.p1 = j.at("p1").get<std::int64_t>();
        return spec;
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("malformed manifold spec: ") + e.what());
    }
}

ManifoldSpec load_spec(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
        fail(ErrorCode::ParseError, "'" + path.string() + "' is not valid JSON");
    return parse_spec(j);
}

json spec_to_json(const ManifoldSpec& spec)
{
    json j{{"schema", kSchemaVersion}, {"intersection_form", spec.intersection_form}, {"w2", spec.w2}, {"p1", spec.p1}};
    if (j["intersection_form"].is_null())
        j["intersection_form"] = json::array();
    if (spec.name)
        j["name"] = *spec.name;
    return j;
}

ValidatedInput validate_spec(const ManifoldSpec& spec)
{
    for (auto bit : spec.w2)
        if (bit > 1)
            fail(ErrorCode::InvalidBundle, "w2 entries must be 0 or 1");
    auto base = manifold::FourManifold::from_form(spec.intersection_form);
    auto bundle = manifold::bundle_from_classes(base, spec.w2, spec.p1);
    return {std::move(base), std::move(bundle)};
}

json input_summary(const ManifoldSpec& spec, const ValidatedInput& in)
{
    json s{{"d", in.base.rank()},
           {"spin", manifold::is_spin(in.bundle)},
           {"w2", in.bundle.w2},
           {"p1", in.bundle.p1},
           {"alpha", in.bundle.alpha},
           {"ell", in.bundle.ell}};
    if (spec.name)
        s["name"] = *spec.name;
    if (in.base.rank() >= 1)
        s["case"] = loops::y_space_report(in.base, in.bundle).case_label;
    return s;
}

json Report::to_json() const
{
    json j{{"schema", kSchemaVersion}, {"command", command}, {"inputs", inputs}, {"result", result}, {"warnings", warnings}};
    if (j["inputs"].is_null())
        j["inputs"] = json::array();
    if (j["warnings"].is_null())
        j["warnings"] = json::array();
    if (error)
        j["error"] = {{"code", error->code}, {"message", error->message}};
    return j;
}

Report Report::from_json(const json& j)
{
    try {
        if (j.at("schema").get<int>() != kSchemaVersion)
            fail(ErrorCode::ParseError, "unsupported report schema " + j.at("schema").dump());
        Report r;
        r.command = j.at("command").get<std::string>();
        for (const auto& s : j.at("inputs"))
            r.inputs.push_back(s);
        r.result = j.at("result");
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        if (j.contains("error"))
            r.error = ReportError{j["error"].at("code").get<std::string>(), j["error"].at("message").get<std::string>()};
        return r;
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
    }
}

std::string emit_report(const Report& r, Format format)
{
    if (format == Format::Json)
        return r.to_json().dump(2) + "\n";
    std::vector<std::string> lines;
    if (r.command == "describe")
        for (const auto& s : r.inputs) {
            auto more = summary_lines(s);
            lines.insert(lines.end(), more.begin(), more.end());
        }
    if (!r.error) {
        auto more = result_lines(r.command, r.result);
        lines.insert(lines.end(), more.begin(), more.end());
    }
    for (const auto& w : r.warnings)
        lines.push_back("warning: " + w);
    if (r.error)
        lines.push_back("error: " + r.error->code + ": " + r.error->message);
    return join(lines, "\n") + "\n";
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::UnsupportedCase:
    case ErrorCode::Unsupported:
    case ErrorCode::UnsupportedNode:
    case ErrorCode::UnsupportedDegree:
        return kExitUnsupported;
    default:
        return kExitValidation;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Loop-space homotopy of S^2-bundles over simply connected 4-manifolds", "loophom"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    std::optional<std::string> table_path;
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--table", table_path, "Sphere homotopy table overriding the built-in one");

    std::vector<std::string> files;
    int max_k = 6;
    std::size_t cutoff = 10;
    std::optional<std::string> k_param;

    auto single = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("spec", files, "Manifold JSON file")->required()->expected(1);
        return sub;
    };
    single("describe", "Invariants, cohomology and the splitting route");
    single("decompose", "Loop space as a product of elementary factors");
    single("pi", "Homotopy groups pi_2..pi_K")
        ->add_option("--max", max_k, "Largest k")
        ->check(CLI::Range(2, 200));
    single("series", "Poincare series of the loop space homology")
        ->add_option("--cutoff", cutoff, "Largest degree")
        ->check(CLI::Range(0, 200));
    single("rational", "Rational homotopy ranks of the loop space")
        ->add_option("--cutoff", cutoff, "Largest degree")
        ->check(CLI::Range(1, 200));
    single("koszul", "Koszul dual series of the cohomology algebra")
        ->add_option("--cutoff", cutoff, "Largest weight")
        ->check(CLI::Range(0, 200));
    auto* model = single("model", "Sullivan model (d = 1)");
    model->add_option("--k", k_param, "Parameter k in db = a^2 + k c^2 (rational)");
    model->add_option("--cutoff", cutoff, "Largest cohomology degree")->check(CLI::Range(0, 60));
    auto* compare = app.add_subcommand("compare", "Compare the loop spaces of two inputs");
    compare->add_option("specs", files, "Two manifold JSON files")->required()->expected(2);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Report report;
    report.command = app.get_subcommands().front()->get_name();
    const Format format = format_name == "json" ? Format::Json : Format::Text;
    int status = kExitOk;
    try {
        std::vector<ValidatedInput> inputs;
        for (const auto& f : files) {
            const ManifoldSpec spec = load_spec(f);
            inputs.push_back(validate_spec(spec));
            report.inputs.push_back(input_summary(spec, inputs.back()));
        }
        std::vector<std::string>& warnings = report.warnings;
        const auto& cmd = report.command;
        if (cmd == "describe")
            report.result = describe(inputs[0]);
        else if (cmd == "decompose")
            report.result = decompose_result(inputs[0], warnings);
        else if (cmd == "pi") {
            const auto table = table_path ? pitables::SphereTable::load(*table_path) : pitables::SphereTable::builtin();
            report.result = pi_result(inputs[0], table, max_k, warnings);
            report.result["table"] = table_path ? *table_path : "builtin";
        } else if (cmd == "series")
            report.result = series_result(inputs[0], cutoff);
        else if (cmd == "rational")
            report.result = rational_result(inputs[0], cutoff);
        else if (cmd == "koszul")
            report.result = koszul_result(inputs[0], cutoff);
        else if (cmd == "model")
            report.result = model_result(inputs[0], k_param, cutoff);
        else if (cmd == "compare")
            report.result = compare_result(inputs[0], inputs[1]);
    } catch (const Error& e) {
        report.result = json::object();
        report.error = ReportError{std::string(to_string(e.code())), e.what()};
        status = exit_code_for(e.code());
    }
    out << emit_report(report, format);
    return status;
}

int run(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

} // namespace loophom::cli
