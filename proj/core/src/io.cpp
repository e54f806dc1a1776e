#include "afreg/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace afreg {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string trim(std::string s) {
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

/// Yields (line_number, content) for non-blank lines, comments removed.
std::vector<std::pair<std::size_t, std::string>> logical_lines(
    const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (!line.empty()) out.push_back({no, line});
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

AfSpec parse_afs(const std::string& text) {
    std::map<std::string, std::pair<std::size_t, std::string>> fields;
    for (auto& [no, line] : logical_lines(text)) {
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'key: value' in specification file", no);
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key != "alphabet" && key != "arguments" && key != "attack")
            throw ParseError("unknown key '" + key + "'", no);
        if (!fields.emplace(key, std::make_pair(no, value)).second)
            throw ParseError("duplicate key '" + key + "'", no);
    }
    for (const char* key : {"alphabet", "arguments", "attack"})
        if (!fields.count(key))
            throw ParseError(std::string("missing key '") + key + "'", 0);

    Alphabet a(split_ws(fields["alphabet"].second));
    RegexPtr args = parse_regex(fields["arguments"].second, a);
    AttackPtr attack = parse_attack_expr(fields["attack"].second, a);
    return AfSpec(std::move(a), std::move(args), std::move(attack));
}

AfSpec load_afs(const std::string& path) { return parse_afs(read_file(path)); }

std::string render_afs(const AfSpec& spec) {
    std::string out = "alphabet:";
    for (const auto& s : spec.alphabet().symbols()) out += " " + s;
    out += "\narguments: " + render_regex(spec.argument_regex());
    out += "\nattack: " + render_attack_expr(spec.attack()) + "\n";
    return out;
}

FiniteAf parse_apx(const std::string& text) {
    FiniteAf f;
    std::map<std::string, int> index;
    for (auto& [no, raw] : logical_lines(text)) {
        std::string line;
        for (char c : raw)
            if (!std::isspace(static_cast<unsigned char>(c))) line += c;
        auto fact = [&](const std::string& head) -> std::string {
            // Matches head + "(BODY)." and returns BODY, or "" if the
            // line has a different head.
            if (line.rfind(head + "(", 0) != 0) return "";
            if (line.size() < head.size() + 3 ||
                line.substr(line.size() - 2) != ").")
                throw ParseError("malformed '" + head + "' line", no);
            return line.substr(head.size() + 1,
                               line.size() - head.size() - 3);
        };
        if (std::string body = fact("arg"); !body.empty()) {
            if (!index.emplace(body, static_cast<int>(f.argument_names.size()))
                     .second)
                throw ParseError("duplicate argument '" + body + "'", no);
            f.argument_names.push_back(body);
        } else if (std::string pair = fact("att"); !pair.empty()) {
            auto comma = pair.find(',');
            if (comma == std::string::npos)
                throw ParseError("malformed 'att' line", no);
            std::string x = pair.substr(0, comma), y = pair.substr(comma + 1);
            auto ix = index.find(x), iy = index.find(y);
            if (ix == index.end())
                throw ParseError("attack references undeclared argument '" +
                                     x + "'",
                                 no);
            if (iy == index.end())
                throw ParseError("attack references undeclared argument '" +
                                     y + "'",
                                 no);
            f.attack_pairs.push_back({ix->second, iy->second});
        } else {
            throw ParseError("unrecognized line '" + raw + "'", no);
        }
    }
    f.check();
    return f;
}

FiniteAf load_apx(const std::string& path) {
    return parse_apx(read_file(path));
}

AfSpec load_manifest(const std::string& path) {
    namespace fs = std::filesystem;
    fs::path base = fs::path(path).parent_path();
    auto resolve = [&](const std::string& file) {
        fs::path p(file);
        return (p.is_absolute() ? p : base / p).string();
    };

    std::optional<FiniteAf> finite;
    std::vector<std::string> part_names;
    std::vector<AfSpec> parts;
    std::vector<CrossSpec> cross;

    auto part_index = [&](const std::string& name, std::size_t no) -> int {
        if (name == "finite") {
            if (!finite)
                throw ParseError("cross references 'finite' but no finite "
                                 "part was declared",
                                 no);
            return -1;
        }
        for (std::size_t i = 0; i < part_names.size(); ++i)
            if (part_names[i] == name) return static_cast<int>(i);
        throw ParseError("unknown part '" + name + "'", no);
    };

    for (auto& [no, line] : logical_lines(read_file(path))) {
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'key: value' in manifest", no);
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key == "part") {
            auto toks = split_ws(value);
            if (toks.size() != 2)
                throw ParseError("expected 'part: NAME FILE'", no);
            if (toks[0] == "finite")
                throw ParseError("'finite' is reserved as a part name", no);
            part_names.push_back(toks[0]);
            parts.push_back(load_afs(resolve(toks[1])));
        } else if (key == "finite") {
            if (finite) throw ParseError("duplicate 'finite' line", no);
            finite = load_apx(resolve(value));
        } else if (key == "cross") {
            auto arrow = value.find("->");
            auto sep = value.find(':');
            if (arrow == std::string::npos || sep == std::string::npos ||
                sep < arrow)
                throw ParseError("expected 'cross: FROM -> TO : u v'", no);
            CrossSpec c;
            c.from = part_index(trim(value.substr(0, arrow)), no);
            c.to = part_index(trim(value.substr(arrow + 2, sep - arrow - 2)),
                              no);
            auto words = split_ws(value.substr(sep + 1));
            if (words.size() != 2)
                throw ParseError(
                    "expected one attacking pair 'u v' (use middle dots "
                    "inside multi-symbol words)",
                    no);
            c.pairs.push_back({words[0], words[1]});
            cross.push_back(std::move(c));
        } else {
            throw ParseError("unknown key '" + key + "'", no);
        }
    }
    return combine(finite, parts, cross);
}

}  // namespace afreg
