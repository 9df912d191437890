#include "betticone/io.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <sstream>

#include "betticone/error.hpp"

namespace betticone {

namespace {

using json = nlohmann::ordered_json;

struct Token {
    std::string text;
    std::size_t line;    // 1-based
    std::size_t column;  // 1-based
};

[[noreturn]] void syntax_fail(std::size_t line, std::size_t column, const std::string& what) {
    throw BettiError(errc::syntax_error, "line " + std::to_string(line) + ", column " +
                                             std::to_string(column) + ": " + what);
}

[[noreturn]] void syntax_fail(const Token& at, const std::string& what) {
    syntax_fail(at.line, at.column, what);
}

// Whitespace-delimited tokens per line; blank lines are skipped.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream stream(text);
    std::string raw;
    for (std::size_t number = 1; std::getline(stream, raw); ++number) {
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::vector<Token> tokens;
        std::size_t pos = 0;
        while (pos < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[pos]))) {
                ++pos;
                continue;
            }
            std::size_t end = pos;
            while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end])))
                ++end;
            tokens.push_back({raw.substr(pos, end - pos), number, pos + 1});
            pos = end;
        }
        if (!tokens.empty())
            lines.push_back(std::move(tokens));
    }
    return lines;
}

int parse_int(const Token& token) {
    int value = 0;
    const char* begin = token.text.data();
    const char* end = begin + token.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        syntax_fail(token, "expected an integer, got '" + token.text + "'");
    return value;
}

Rational parse_value(const Token& token) {
    try {
        return parse_rational(token.text);
    } catch (const BettiError& error) {
        syntax_fail(token, error.message());
    }
}

DegreeSequence parse_degrees(const Token& token) {
    std::vector<int> degrees;
    std::size_t pos = 0;
    while (pos <= token.text.size()) {
        std::size_t comma = token.text.find(',', pos);
        if (comma == std::string::npos)
            comma = token.text.size();
        const std::string piece = token.text.substr(pos, comma - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
            syntax_fail(token.line, token.column + pos,
                        "expected an integer, got '" + piece + "'");
        degrees.push_back(value);
        pos = comma + 1;
    }
    try {
        return DegreeSequence(std::move(degrees));
    } catch (const BettiError& error) {
        syntax_fail(token, error.message());
    }
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        return c == '{';
    }
    return false;
}

json parse_json_document(const std::string& text, const char* expected_format) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& error) {
        throw BettiError(errc::syntax_error, error.what());
    }
    if (!document.is_object() || document.value("format", "") != expected_format ||
        document.value("version", 0) != 1)
        throw BettiError(errc::syntax_error,
                         std::string("expected a document with format \"") + expected_format +
                             "\", version 1");
    return document;
}

Rational rational_from_json(const json& value) {
    if (value.is_number_integer())
        return Rational(static_cast<long>(value.get<long long>()));
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    throw BettiError(errc::syntax_error,
                     "rational values must be integers or strings, got " + value.dump());
}

json rational_to_json(const Rational& value) { return to_string(value); }

json degrees_to_json(const DegreeSequence& d) {
    json out = json::array();
    for (int i = 0; i <= d.length(); ++i)
        out.push_back(d[i]);
    return out;
}

DegreeSequence degrees_from_json(const json& value) {
    if (!value.is_array())
        throw BettiError(errc::syntax_error, "degrees must be an array");
    std::vector<int> degrees;
    for (const auto& piece : value) {
        if (!piece.is_number_integer())
            throw BettiError(errc::syntax_error, "degrees must be integers");
        degrees.push_back(piece.get<int>());
    }
    return DegreeSequence(std::move(degrees));
}

BettiTable table_from_json(const std::string& text) {
    const json document = parse_json_document(text, "betti-table");
    if (!document.contains("entries") || !document["entries"].is_array())
        throw BettiError(errc::syntax_error, "missing \"entries\" array");
    std::vector<std::tuple<int, int, Rational>> raw;
    for (const auto& entry : document["entries"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw BettiError(errc::syntax_error,
                             "each entry must be [i, j, value], got " + entry.dump());
        const int i = entry[0].get<int>();
        if (i < 0)
            throw BettiError(errc::syntax_error,
                             "homological index must be nonnegative, got " + entry[0].dump());
        raw.emplace_back(i, entry[1].get<int>(), rational_from_json(entry[2]));
    }
    return BettiTable::from_entries(raw);
}

DecompositionDocument decomposition_from_json(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& error) {
        throw BettiError(errc::syntax_error, error.what());
    }
    const std::string format = document.is_object() ? document.value("format", "") : "";
    const bool symmetrized = format == "symmetrized-decomposition";
    if (!symmetrized && format != "chain-decomposition")
        throw BettiError(errc::syntax_error,
                         "expected a chain-decomposition or symmetrized-decomposition document");
    if (document.value("version", 0) != 1)
        throw BettiError(errc::syntax_error, "expected version 1");
    if (!document.contains("terms") || !document["terms"].is_array())
        throw BettiError(errc::syntax_error, "missing \"terms\" array");

    if (symmetrized) {
        if (!document.contains("N") || !document["N"].is_number_integer())
            throw BettiError(errc::syntax_error, "missing integer \"N\"");
        std::vector<SymmetrizedTerm> terms;
        for (const auto& term : document["terms"]) {
            if (!term.is_object() || !term.contains("degrees") ||
                !term.contains("coefficient") || !term.contains("self_dual") ||
                !term["self_dual"].is_boolean())
                throw BettiError(errc::syntax_error,
                                 "each term needs degrees, coefficient, self_dual");
            terms.push_back({degrees_from_json(term["degrees"]),
                             rational_from_json(term["coefficient"]),
                             term["self_dual"].get<bool>()});
        }
        return SymmetrizedDecomposition(document["N"].get<int>(), std::move(terms));
    }

    std::vector<ChainTerm> terms;
    for (const auto& term : document["terms"]) {
        if (!term.is_object() || !term.contains("degrees") || !term.contains("coefficient"))
            throw BettiError(errc::syntax_error, "each term needs degrees and coefficient");
        terms.push_back({degrees_from_json(term["degrees"]),
                         rational_from_json(term["coefficient"])});
    }
    return ChainDecomposition(std::move(terms));
}

}  // namespace

std::string serialize(const BettiTable& t) {
    std::ostringstream out;
    out << "betti v1\n";
    for (const auto& [key, value] : t.entries())
        out << key.first << ' ' << key.second << ' ' << to_string(value) << '\n';
    return out.str();
}

std::string serialize_json(const BettiTable& t) {
    json document;
    document["format"] = "betti-table";
    document["version"] = 1;
    json entries = json::array();
    for (const auto& [key, value] : t.entries())
        entries.push_back(json::array({key.first, key.second, rational_to_json(value)}));
    document["entries"] = std::move(entries);
    return document.dump(2) + "\n";
}

BettiTable parse_table(const std::string& text) {
    if (looks_like_json(text))
        return table_from_json(text);
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0].size() != 2 || lines[0][0].text != "betti" ||
        lines[0][1].text != "v1")
        syntax_fail(1, 1, "expected header 'betti v1'");
    std::vector<std::tuple<int, int, Rational>> raw;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto& tokens = lines[l];
        if (tokens.size() != 3)
            syntax_fail(tokens[0], "expected 'i j value'");
        const int i = parse_int(tokens[0]);
        if (i < 0)
            syntax_fail(tokens[0], "homological index must be nonnegative");
        raw.emplace_back(i, parse_int(tokens[1]), parse_value(tokens[2]));
    }
    return BettiTable::from_entries(raw);
}

std::string serialize(const ChainDecomposition& c) {
    std::ostringstream out;
    out << "chaindec v1\ns " << c.length() << '\n';
    for (const auto& term : c.terms())
        out << "term " << to_string(term.d) << ' ' << to_string(term.r) << '\n';
    return out.str();
}

std::string serialize_json(const ChainDecomposition& c) {
    json document;
    document["format"] = "chain-decomposition";
    document["version"] = 1;
    document["s"] = c.length();
    json terms = json::array();
    for (const auto& term : c.terms())
        terms.push_back({{"degrees", degrees_to_json(term.d)},
                         {"coefficient", rational_to_json(term.r)}});
    document["terms"] = std::move(terms);
    return document.dump(2) + "\n";
}

std::string serialize(const SymmetrizedDecomposition& sd) {
    std::ostringstream out;
    out << "symdec v1\ns " << sd.length() << "\nN " << sd.n() << '\n';
    for (const auto& term : sd.terms())
        out << "term " << to_string(term.d) << ' ' << to_string(term.r) << ' '
            << (term.self_dual ? "self" : "pair") << '\n';
    return out.str();
}

std::string serialize_json(const SymmetrizedDecomposition& sd) {
    json document;
    document["format"] = "symmetrized-decomposition";
    document["version"] = 1;
    document["s"] = sd.length();
    document["N"] = sd.n();
    json terms = json::array();
    for (const auto& term : sd.terms())
        terms.push_back({{"degrees", degrees_to_json(term.d)},
                         {"coefficient", rational_to_json(term.r)},
                         {"self_dual", term.self_dual}});
    document["terms"] = std::move(terms);
    return document.dump(2) + "\n";
}

DecompositionDocument parse_decomposition(const std::string& text) {
    if (looks_like_json(text))
        return decomposition_from_json(text);
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0].size() != 2 || lines[0][1].text != "v1" ||
        (lines[0][0].text != "chaindec" && lines[0][0].text != "symdec"))
        syntax_fail(1, 1, "expected header 'chaindec v1' or 'symdec v1'");
    const bool symmetrized = lines[0][0].text == "symdec";

    std::size_t next = 1;
    auto field = [&](const char* name) {
        if (next >= lines.size() || lines[next].size() != 2 || lines[next][0].text != name)
            syntax_fail(next < lines.size() ? lines[next][0] : lines.back()[0],
                        std::string("expected '") + name + " <integer>'");
        return parse_int(lines[next++][1]);
    };
    const int s = field("s");
    const int n = symmetrized ? field("N") : 0;

    std::vector<ChainTerm> chain_terms;
    std::vector<SymmetrizedTerm> sym_terms;
    for (; next < lines.size(); ++next) {
        const auto& tokens = lines[next];
        const std::size_t expected = symmetrized ? 4 : 3;
        if (tokens[0].text != "term" || tokens.size() != expected)
            syntax_fail(tokens[0], symmetrized ? "expected 'term <degrees> <r> pair|self'"
                                               : "expected 'term <degrees> <r>'");
        DegreeSequence d = parse_degrees(tokens[1]);
        if (d.length() != s)
            syntax_fail(tokens[1], "sequence length " + std::to_string(d.length()) +
                                       " does not match s = " + std::to_string(s));
        Rational r = parse_value(tokens[2]);
        if (symmetrized) {
            if (tokens[3].text != "pair" && tokens[3].text != "self")
                syntax_fail(tokens[3], "expected 'pair' or 'self'");
            sym_terms.push_back({std::move(d), std::move(r), tokens[3].text == "self"});
        } else {
            chain_terms.push_back({std::move(d), std::move(r)});
        }
    }
    if (symmetrized)
        return SymmetrizedDecomposition(n, std::move(sym_terms));
    return ChainDecomposition(std::move(chain_terms));
}

}  // namespace betticone
