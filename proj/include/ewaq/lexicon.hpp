#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace ewaq {

// The three lexical resources driving preprocessing and term matching:
// stop words, surface->root map, and root-level semantic relations.
// Immutable after load; safe to share across threads.
struct Lexicon {
    std::unordered_set<std::string> stopwords;
    std::unordered_map<std::string, std::string> roots;
    // Unordered root pairs stored under a canonical (lexicographically
    // sorted) key; the relation-type label is carried but never used
    // for matching.
    std::map<std::pair<std::string, std::string>, std::string> relations;

    bool is_stopword(const std::string& w) const { return stopwords.count(w) != 0; }
    std::size_t relation_count() const { return relations.size(); }
};

// Loads stopwords.txt, roots.tsv and relations.tsv from dir. Missing
// files degrade to empty collections with a warning on stderr; malformed
// lines and invalid UTF-8 raise LoadError naming file and line.
// All entries are normalized on the way in.
Lexicon load_lexicon(const std::filesystem::path& dir);

// True iff a == b or the unordered pair {a, b} is in the relation table.
// Symmetric and reflexive by construction.
bool related_roots(const Lexicon& lex, const std::string& a, const std::string& b);

} // namespace ewaq
