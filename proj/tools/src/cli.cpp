#include "sextic_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sextic/catalog.hpp"
#include "sextic/enumerator.hpp"
#include "sextic_cli/export.hpp"

namespace sextic::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<CubicAmbient> ambients_from(const std::string& text) {
    if (text == "all") return {std::begin(all_ambients), std::end(all_ambients)};
    if (auto a = parse_ambient(text)) return {*a};
    throw UsageError("unknown ambient '" + text + "' (expected RP2, RP2+S2, 3RP2, 5RP2, 7RP2 or all)");
}

CubicAmbient single_ambient(const std::string& text) {
    if (auto a = parse_ambient(text)) return *a;
    throw UsageError("unknown ambient '" + text + "' (expected RP2, RP2+S2, 3RP2, 5RP2, 7RP2)");
}

// Ambient of a bare code: forests go to RP2 (RP2+S2 when tagged with @S2),
// pair codes to the negative cubic their chi adds up to.
Scheme parse_any(const std::string& code) {
    if (code.find('@') != std::string::npos && code.find("S2") != std::string::npos &&
        code.find(',') == std::string::npos)
        return parse_scheme(code, CubicAmbient::RP2_S2);
    if (code.find(',') == std::string::npos) return parse_scheme(code, CubicAmbient::RP2);
    const auto pair = parse_pair(code);
    std::string reason;
    for (auto a : {CubicAmbient::RP2_T1, CubicAmbient::RP2_T2, CubicAmbient::RP2_T3}) {
        try {
            return Scheme::from_pair(a, pair);
        } catch (const PairError& e) {
            if (e.kind() != PairErrorKind::ChiMismatch) reason = e.what();
        }
    }
    if (reason.empty()) reason = "chi of the pair matches no cubic with a negative Euler characteristic";
    throw PairError(PairErrorKind::ChiMismatch, reason);
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
    return out;
}

std::string sides(const Scheme& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& h : colorings(s)) {
        os << (first ? "" : "; ") << "chi(B+) = " << h.chi_plus() << ", chi(B-) = " << h.chi_minus();
        first = false;
    }
    return first ? "none admissible" : os.str();
}

void print_table(std::ostream& out, const ClassifyResult& r, bool admitted, bool excluded) {
    out << "# " << to_string(r.ambient) << ": " << r.structural() << " structural, " << r.admitted.size()
        << " admitted, " << r.excluded.size() << " excluded\n";
    if (admitted)
        for (const auto& s : r.admitted) out << "admitted  " << to_string(s) << '\n';
    if (excluded)
        for (const auto& [s, v] : r.excluded) out << "excluded  " << to_string(s) << "  [" << join(v.violated, ", ") << "]\n";
}

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << j.dump(2) << '\n';
}

int cmd_enumerate(const std::string& ambient, const std::string& json_path, const std::string& show, std::ostream& out) {
    const bool admitted = show == "admitted" || show == "all";
    const bool excluded = show == "excluded" || show == "all";
    auto selected = ambients_from(ambient);
    nlohmann::json docs = nlohmann::json::array();
    for (auto a : selected) {
        const auto r = classify(a);
        if (json_path.empty())
            print_table(out, r, admitted, excluded);
        else
            docs.push_back(classification_json(r, admitted, excluded));
    }
    if (!json_path.empty()) {
        write_json(json_path, selected.size() == 1 ? docs.front() : docs);
        out << "wrote " << json_path << '\n';
    }
    return exit_ok;
}

int cmd_verify(const std::string& ambient, std::ostream& out) {
    std::size_t matched = 0;
    std::size_t expected = 0;
    bool ok = true;
    for (auto a : ambients_from(ambient)) {
        const auto v = verify(a);
        expected += v.expected;
        if (v.ok()) matched += v.expected;
        out << to_string(a) << ": " << v.admitted << " admitted, " << v.expected << " listed, "
            << (v.ok() ? "match" : "MISMATCH") << '\n';
        for (const auto& s : v.missing) out << "  missing  " << to_string(s) << '\n';
        for (const auto& s : v.extra) out << "  extra    " << to_string(s) << '\n';
        ok = ok && v.ok();
        if (has_positive_chi(a)) continue;
        const auto c = closure_check(a);
        out << to_string(a) << ": closure covers " << c.covered << ", " << c.uncovered.size() << " uncovered, "
            << c.overreach.size() << " beyond the list\n";
        for (const auto& s : c.uncovered) out << "  uncovered  " << to_string(s) << '\n';
        for (const auto& s : c.overreach) out << "  beyond     " << to_string(s) << '\n';
        ok = ok && c.ok();
    }
    out << matched << '/' << expected << " admitted types match\n";
    return ok ? exit_ok : exit_mismatch;
}

int cmd_explain(const std::string& ambient, const std::string& code, std::ostream& out) {
    out << to_text(explain(parse_scheme(code, single_ambient(ambient))));
    return exit_ok;
}

int cmd_parse(const std::string& ambient, const std::string& code, std::ostream& out) {
    const Scheme s = ambient.empty() ? parse_any(code) : parse_scheme(code, single_ambient(ambient));
    out << "canonical: " << (s.has_forests() && s.ambient() == CubicAmbient::RP2 ? print_forest(s.forests().projective)
                                                                                 : to_string(s))
        << '\n';
    out << "ambient: " << to_string(s.ambient()) << " (chi = " << euler_characteristic(s.ambient()) << ")\n";
    out << "b0 = " << b0(s) << '\n';
    out << "sides: " << sides(s) << '\n';
    const auto c = classify_shape(s);
    out << "family: " << c.tag;
    if (c.params)
        out << " (alpha = " << c.params->alpha << ", beta = " << c.params->beta << ", gamma = " << c.params->gamma
            << ", k = " << c.params->k << ")";
    out << '\n';
    return exit_ok;
}

int cmd_catalog(const std::string& ambient, const std::string& format, std::ostream& out) {
    const auto a = single_ambient(ambient);
    if (format == "json") {
        out << catalog_json(a).dump(2) << '\n';
        return exit_ok;
    }
    const auto entries = ground_truth(a);
    out << "# " << to_string(a) << ": " << entries.size() << " types\n";
    for (const auto& e : entries) {
        out << std::left << std::setw(12) << e.family << std::setw(40) << to_string(e.scheme);
        if (e.construction) {
            out << to_string(e.construction->method);
            if (e.construction->source) out << ' ' << *e.construction->source;
        }
        out << '\n';
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Real schemes of sextic curves on real cubic surfaces", "sextic"};
    app.require_subcommand(1);

    std::string ambient = "all";
    std::string json_path;
    std::string show = "admitted";
    std::string code;
    std::string format = "table";
    std::string parse_ambient_flag;

    auto* enumerate = app.add_subcommand("enumerate", "classify every candidate scheme");
    enumerate->add_option("--ambient", ambient, "RP2, RP2+S2, 3RP2, 5RP2, 7RP2 or all")->required();
    enumerate->add_option("--json", json_path, "write JSON to PATH instead of a table");
    enumerate->add_option("--show", show, "which schemes to list")
        ->check(CLI::IsMember({"excluded", "admitted", "all"}));

    auto* verify_cmd = app.add_subcommand("verify", "compare the rules against the transcribed lists");
    verify_cmd->add_option("--ambient", ambient, "ambient or all");

    auto* explain_cmd = app.add_subcommand("explain", "evaluate every rule on one scheme");
    explain_cmd->add_option("--ambient", ambient, "ambient of the scheme")->required();
    explain_cmd->add_option("code", code, "scheme code")->required();

    auto* parse_cmd = app.add_subcommand("parse", "print the canonical form of a code");
    parse_cmd->add_option("--ambient", parse_ambient_flag, "ambient (inferred when omitted)");
    parse_cmd->add_option("code", code, "scheme code")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "print the transcribed list");
    catalog_cmd->add_option("--ambient", ambient, "ambient")->required();
    catalog_cmd->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "sextic: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*enumerate) return cmd_enumerate(ambient, json_path, show, out);
        if (*verify_cmd) return cmd_verify(ambient, out);
        if (*explain_cmd) return cmd_explain(ambient, code, out);
        if (*parse_cmd) return cmd_parse(parse_ambient_flag, code, out);
        if (*catalog_cmd) return cmd_catalog(ambient, format, out);
    } catch (const ParseError& e) {
        err << "sextic: parse error at " << e.position() << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const PairError& e) {
        err << "sextic: invalid pair: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        err << "sextic: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "sextic: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace sextic::cli
