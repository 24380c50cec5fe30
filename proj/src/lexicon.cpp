#include "ewaq/lexicon.hpp"

#include <fstream>
#include <functional>
#include <iostream>

#include "ewaq/error.hpp"
#include "ewaq/textproc.hpp"
#include "ewaq/utf8.hpp"

namespace ewaq {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

std::string chomp(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

// Reads a resource file line by line; returns false if the file is absent.
bool for_each_line(const std::filesystem::path& file,
                   const std::function<void(const std::string&, std::size_t)>& fn) {
    std::ifstream in(file);
    if (!in.is_open()) return false;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = chomp(raw);
        utf8::decode_or_throw(line, file.filename().string() + ":" + std::to_string(lineno));
        fn(line, lineno);
    }
    return true;
}

} // namespace

bool related_roots(const Lexicon& lex, const std::string& a, const std::string& b) {
    if (a == b) return true;
    const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    return lex.relations.count(key) != 0;
}

Lexicon load_lexicon(const std::filesystem::path& dir) {
    Lexicon lex;

    const auto stopwords_file = dir / "stopwords.txt";
    bool found = for_each_line(stopwords_file, [&](const std::string& line, std::size_t) {
        if (line.empty() || line[0] == '#') return;
        std::string w = normalize(line);
        if (!w.empty()) lex.stopwords.insert(std::move(w));
    });
    if (!found)
        std::cerr << "ewaq: warning: " << stopwords_file.string()
                  << " not found; stop word list is empty\n";

    const auto roots_file = dir / "roots.tsv";
    found = for_each_line(roots_file, [&](const std::string& line, std::size_t lineno) {
        if (line.empty() || line[0] == '#') return;
        auto fields = split_tabs(line);
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
            throw LoadError(roots_file.filename().string() + ":" + std::to_string(lineno) +
                            ": expected 2 non-empty tab-separated fields (surface, root)");
        std::string surface = normalize(fields[0]);
        std::string root = normalize(fields[1]);
        if (surface.empty() || root.empty())
            throw LoadError(roots_file.filename().string() + ":" + std::to_string(lineno) +
                            ": field is empty after normalization");
        lex.roots[std::move(surface)] = std::move(root);
    });
    if (!found)
        std::cerr << "ewaq: warning: " << roots_file.string()
                  << " not found; roots map is empty\n";

    const auto relations_file = dir / "relations.tsv";
    found = for_each_line(relations_file, [&](const std::string& line, std::size_t lineno) {
        if (line.empty() || line[0] == '#') return;
        auto fields = split_tabs(line);
        if ((fields.size() != 2 && fields.size() != 3) ||
            fields[0].empty() || fields[1].empty())
            throw LoadError(relations_file.filename().string() + ":" + std::to_string(lineno) +
                            ": expected 2 or 3 non-empty tab-separated fields (rootA, rootB, [type])");
        std::string a = normalize(fields[0]);
        std::string b = normalize(fields[1]);
        if (a.empty() || b.empty())
            throw LoadError(relations_file.filename().string() + ":" + std::to_string(lineno) +
                            ": field is empty after normalization");
        std::string label = fields.size() == 3 ? fields[2] : "";
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        lex.relations.emplace(std::move(key), std::move(label));
    });
    if (!found)
        std::cerr << "ewaq: warning: " << relations_file.string()
                  << " not found; relation table is empty\n";

    return lex;
}

} // namespace ewaq
