#include "betticone/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "betticone/bounds.hpp"
#include "betticone/error.hpp"
#include "betticone/io.hpp"
#include "betticone/survey.hpp"

namespace betticone {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw BettiError(errc::invalid_argument, "cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

DegreeSequence parse_degree_option(const std::string& text) {
    std::vector<int> degrees;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        try {
            degrees.push_back(std::stoi(text.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            throw BettiError(errc::syntax_error, "malformed degree list '" + text + "'");
        }
        pos = comma + 1;
    }
    return DegreeSequence(std::move(degrees));
}

// Human-readable rendering: exact value, with a marked approximation when
// the value is not an integer.
std::string display(const Rational& value) {
    if (value.get_den() == 1)
        return to_string(value);
    char approx_text[64];
    std::snprintf(approx_text, sizeof approx_text, "%.6g", approx(value));
    return to_string(value) + " (~" + approx_text + ")";
}

const char* status_name(BoundStatus status) {
    switch (status) {
    case BoundStatus::holds: return "holds";
    case BoundStatus::violated: return "violated";
    case BoundStatus::not_applicable: return "not_applicable";
    }
    return "unknown";
}

std::string display(const BoundValue& bound) {
    if (!bound.value)
        return "n/a";
    return display(*bound.value) + " " + status_name(bound.status);
}

json to_json(const BoundValue& bound) {
    json out;
    if (bound.value)
        out["value"] = to_string(*bound.value);
    out["status"] = status_name(bound.status);
    return out;
}

json degrees_json(const DegreeSequence& d) {
    json out = json::array();
    for (int i = 0; i <= d.length(); ++i)
        out.push_back(d[i]);
    return out;
}

int cmd_pure(const std::string& degrees, bool clear_denominators, bool as_json,
             std::ostream& out) {
    const DegreeSequence d = parse_degree_option(degrees);
    BettiTable table = pure_table(d);
    if (clear_denominators) {
        Integer common = 1;
        for (const auto& [key, value] : table.entries())
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), value.get_den().get_mpz_t());
        table = scale(Rational(common), table);
    }
    out << (as_json ? serialize_json(table) : serialize(table));
    return 0;
}

int cmd_mult(const std::string& path, bool force, std::ostream& out) {
    const BettiTable table = parse_table(read_file(path));
    const int s = table.length();
    out << "s = " << s << '\n';
    bool consistent = true;
    for (int l = 0; l <= s; ++l) {
        const Rational value = ps_functional(table, static_cast<unsigned long>(l));
        out << "ps[" << l << "] = " << to_string(value) << '\n';
        if (l < s && value != 0)
            consistent = false;
    }
    if (consistent)
        out << "e = " << to_string(multiplicity(table)) << '\n';
    else if (force)
        out << "formal multiplicity = " << to_string(multiplicity(table, true)) << '\n';
    else
        throw BettiError(errc::not_cm_consistent,
                         "a power-sum functional below l = " + std::to_string(s) +
                             " is nonzero; pass --force for the formal value");
    return 0;
}

int cmd_decompose(const std::string& path, bool symmetrized, bool as_json,
                  std::ostream& out) {
    const BettiTable table = parse_table(read_file(path));
    const ChainDecomposition chain = es_decompose(table);
    if (!symmetrized) {
        out << (as_json ? serialize_json(chain) : serialize(chain));
        return 0;
    }
    const ShiftProfile p = shifts(table);
    const SymmetrizedDecomposition sd = symmetrize(chain, p.N);
    out << (as_json ? serialize_json(sd) : serialize(sd));
    return 0;
}

int cmd_bounds(const std::string& path, bool as_json, std::ostream& out) {
    const BettiTable table = parse_table(read_file(path));
    const BoundsReport report = bounds_report(table);
    const ShiftProfile& p = report.profile;

    if (as_json) {
        json document;
        document["s"] = p.s;
        document["m"] = p.m;
        document["M"] = p.M;
        document["k"] = p.k;
        document["N"] = p.N;
        document["beta0"] = to_string(report.beta0);
        document["e"] = to_string(report.e);
        document["quasi_pure"] = report.quasi_pure;
        document["cyclic"] = report.cyclic;
        document["theorem"] = to_json(report.theorem);
        document["srinivasan_lower"] = to_json(report.srinivasan_lower);
        document["srinivasan_upper"] = to_json(report.srinivasan_upper);
        document["lower_ref"] = to_json(report.lower_ref);
        document["n1"] = report.n1 ? json(*report.n1) : json(nullptr);
        document["mnz"] = to_json(report.mnz);
        document["codim3"] = to_json(report.codim3);
        out << document.dump(2) << '\n';
        return 0;
    }

    auto join = [](const std::vector<int>& values) {
        std::string text;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i)
                text += ',';
            text += std::to_string(values[i]);
        }
        return text;
    };
    out << "s = " << p.s << '\n';
    out << "m = " << join(p.m) << '\n';
    out << "M = " << join(p.M) << '\n';
    out << "k = " << p.k << '\n';
    out << "N = " << p.N << '\n';
    out << "beta0 = " << to_string(report.beta0) << '\n';
    out << "e = " << display(report.e) << '\n';
    out << "quasi_pure = " << (report.quasi_pure ? "true" : "false") << '\n';
    out << "theorem = " << display(report.theorem) << '\n';
    out << "srinivasan_lower = " << display(report.srinivasan_lower) << '\n';
    out << "srinivasan_upper = " << display(report.srinivasan_upper) << '\n';
    out << "lower_ref = " << display(report.lower_ref) << '\n';
    out << "n1 = " << (report.n1 ? std::to_string(*report.n1) : "n/a") << '\n';
    out << "mnz = " << display(report.mnz) << '\n';
    out << "codim3 = " << display(report.codim3) << '\n';
    return 0;
}

int cmd_survey(int codim, int max_socle, const std::string& check, unsigned long trials,
               std::uint64_t seed, bool as_json, std::ostream& out) {
    SurveyResult result;
    if (check == "lemma")
        result = survey_lemma(codim, max_socle);
    else if (check == "prop")
        result = survey_proposition(codim, max_socle);
    else
        result = survey_theorem(codim, max_socle, trials, seed);

    if (as_json) {
        json document;
        document["check"] = result.check;
        document["s"] = result.s;
        document["max_socle"] = result.max_socle;
        if (result.check == "theorem") {
            document["trials"] = trials;
            document["seed"] = seed;
        } else {
            document["sequences"] = result.sequence_count;
        }
        document["checked"] = result.checked;
        if (result.check == "prop") {
            json evaluations = json::array();
            for (const auto& [d, value] : result.evaluations)
                evaluations.push_back(
                    {{"degrees", degrees_json(d)}, {"value", to_string(value)}});
            document["evaluations"] = std::move(evaluations);
        }
        json violations = json::array();
        for (const auto& violation : result.violations) {
            json entry;
            json sequences = json::array();
            for (const auto& d : violation.sequences)
                sequences.push_back(degrees_json(d));
            entry["sequences"] = std::move(sequences);
            json values = json::array();
            for (const auto& value : violation.values)
                values.push_back(to_string(value));
            entry["values"] = std::move(values);
            entry["note"] = violation.note;
            if (violation.trial)
                entry["trial"] = *violation.trial;
            if (violation.witness)
                entry["witness"] = json::parse(serialize_json(*violation.witness));
            violations.push_back(std::move(entry));
        }
        document["violations"] = std::move(violations);
        out << document.dump(2) << '\n';
    } else {
        out << "survey " << result.check << " s=" << result.s
            << " max_socle=" << result.max_socle;
        if (result.check == "theorem")
            out << " trials=" << trials << " seed=" << seed;
        out << '\n';
        if (result.check != "theorem")
            out << "sequences = " << result.sequence_count << '\n';
        out << "checked = " << result.checked << '\n';
        for (const auto& [d, value] : result.evaluations)
            out << "value " << to_string(d) << ' ' << to_string(value) << '\n';
        for (const auto& violation : result.violations) {
            out << "violation";
            if (violation.trial)
                out << " trial " << *violation.trial;
            for (const auto& d : violation.sequences)
                out << ' ' << to_string(d);
            out << " values";
            for (const auto& value : violation.values)
                out << ' ' << to_string(value);
            out << " (" << violation.note << ")\n";
            if (violation.witness)
                for (const auto& term : violation.witness->terms())
                    out << "  witness term " << to_string(term.d) << ' '
                        << to_string(term.r) << ' ' << (term.self_dual ? "self" : "pair")
                        << '\n';
        }
        out << "violations = " << result.violations.size() << '\n';
    }
    return result.violations.empty() ? 0 : 2;
}

int cmd_synth(const std::string& path, bool as_json, std::ostream& out) {
    const DecompositionDocument document = parse_decomposition(read_file(path));
    const BettiTable table = std::visit(
        [](const auto& decomposition) { return synthesize(decomposition); }, document);
    out << (as_json ? serialize_json(table) : serialize(table));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rational Betti table decompositions and multiplicity bounds"};
    app.require_subcommand(1);

    std::string degrees;
    bool clear_denominators = false;
    bool as_json = false;
    auto* pure_cmd = app.add_subcommand("pure", "Print the pure table of a degree sequence");
    pure_cmd->add_option("--degrees", degrees, "Comma-separated degree sequence")->required();
    pure_cmd->add_flag("--clear-denominators", clear_denominators,
                       "Print the smallest integral multiple");
    pure_cmd->add_flag("--json", as_json, "JSON output");

    std::string mult_file;
    bool force = false;
    auto* mult_cmd =
        app.add_subcommand("mult", "Print power-sum functionals and the multiplicity");
    mult_cmd->add_option("file", mult_file, "Table document")->required();
    mult_cmd->add_flag("--force", force, "Report the formal value even when the lower "
                                         "functionals do not vanish");

    std::string decompose_file;
    bool symmetrized = false;
    bool decompose_json = false;
    auto* decompose_cmd =
        app.add_subcommand("decompose", "Decompose a table into pure tables");
    decompose_cmd->add_option("file", decompose_file, "Table document")->required();
    decompose_cmd->add_flag("--symmetrized", symmetrized,
                            "Fold the chain into symmetrized terms");
    decompose_cmd->add_flag("--json", decompose_json, "JSON output");

    std::string bounds_file;
    bool bounds_json = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "Print the full bounds report");
    bounds_cmd->add_option("file", bounds_file, "Table document")->required();
    bounds_cmd->add_flag("--json", bounds_json, "JSON output");

    int codim = 0;
    int max_socle = 0;
    std::string check;
    unsigned long trials = 100;
    std::uint64_t seed = 1;
    bool survey_json = false;
    auto* survey_cmd = app.add_subcommand("survey", "Check an inequality over a range");
    survey_cmd->add_option("--codim", codim, "Sequence length")->required();
    survey_cmd->add_option("--max-socle", max_socle, "Largest socle degree")->required();
    survey_cmd->add_option("--check", check, "Which inequality to survey")
        ->required()
        ->check(CLI::IsMember({"lemma", "prop", "theorem"}));
    survey_cmd->add_option("--trials", trials, "Random tables for the theorem check");
    survey_cmd->add_option("--seed", seed, "Random seed for the theorem check");
    survey_cmd->add_flag("--json", survey_json, "JSON output");

    std::string synth_file;
    bool synth_json = false;
    auto* synth_cmd =
        app.add_subcommand("synth", "Synthesize the table of a decomposition document");
    synth_cmd->add_option("file", synth_file, "Decomposition document")->required();
    synth_cmd->add_flag("--json", synth_json, "JSON output");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("betticone");
    for (const auto& arg : args)
        argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (pure_cmd->parsed())
            return cmd_pure(degrees, clear_denominators, as_json, out);
        if (mult_cmd->parsed())
            return cmd_mult(mult_file, force, out);
        if (decompose_cmd->parsed())
            return cmd_decompose(decompose_file, symmetrized, decompose_json, out);
        if (bounds_cmd->parsed())
            return cmd_bounds(bounds_file, bounds_json, out);
        if (survey_cmd->parsed())
            return cmd_survey(codim, max_socle, check, trials, seed, survey_json, out);
        if (synth_cmd->parsed())
            return cmd_synth(synth_file, synth_json, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::ParseError& error) {
        err << "error: " << error.what() << '\n' << app.help();
        return 1;
    } catch (const BettiError& error) {
        err << "error: " << error.what() << '\n';
        return 1;
    } catch (const std::exception& error) {
        err << "error: " << error.what() << '\n';
        return 1;
    }
}

}  // namespace betticone
