#pragma once

#include <set>
#include <string>
#include <vector>

#include "ewaq/lexicon.hpp"

namespace ewaq {

// Affix-stripping stemmer interface. The bundled LightStemmer strips one
// longest-match prefix and one longest-match suffix; a stronger stemmer
// can be swapped in behind this interface.
class Stemmer {
public:
    virtual ~Stemmer() = default;
    virtual std::string stem(const std::string& normalized_word) const = 0;
};

class LightStemmer final : public Stemmer {
public:
    std::string stem(const std::string& normalized_word) const override;
};

struct TextOptions {
    bool fold_taa_marbuta = false;
    // Additional sentence delimiters beyond '.', as a UTF-8 string of
    // single characters, e.g. "؟!?".
    std::string extra_sentence_delimiters;
    std::vector<std::string> why_particles = default_why_particles();
    const Stemmer* stemmer = nullptr;  // null -> bundled LightStemmer

    static std::vector<std::string> default_why_particles();
};

struct Token {
    std::string surface;     // as it appeared in the input
    std::string normalized;  // post-normalization form
    std::string root;        // lexicon hit or light-stem fallback
};

// Normalized, stop-word-filtered, root-reduced view of a question or
// passage. terms is the distinct-root set; length() is what the scorer
// uses as n (question) or m (passage).
struct ProcessedText {
    std::vector<Token> tokens;    // stop words removed, input order kept
    std::set<std::string> terms;  // distinct roots of tokens

    std::size_t length() const { return terms.size(); }
};

// Strips Arabic diacritics and tatweel, folds alef variants to bare alef
// and alef maqsura to yeh. Combining marks never survive, so the output
// is composition-stable. Punctuation passes through untouched.
std::string normalize(const std::string& text, const TextOptions& opts = {});

// Splits on whitespace and punctuation; punctuation is dropped.
std::vector<std::string> tokenize(const std::string& text);

// Lexicon roots map hit wins; otherwise light-stem the word.
// Throws std::invalid_argument on empty input.
std::string stem(const std::string& normalized_word, const Lexicon& lex,
                 const Stemmer* stemmer = nullptr);

// normalize -> tokenize -> drop stop words -> stem survivors.
ProcessedText preprocess(const std::string& text, const Lexicon& lex,
                         const TextOptions& opts = {});

// Splits on '.' plus any configured extra delimiters. Segments are
// trimmed; empty segments are dropped. Every returned sentence is a
// contiguous substring of the input.
std::vector<std::string> split_sentences(const std::string& passage_text,
                                         const TextOptions& opts = {});

// True iff the normalized question contains one of the why particles as
// a (possibly multi-word) token sequence, anywhere in the question.
bool detect_why(const std::string& question, const TextOptions& opts = {});

} // namespace ewaq
