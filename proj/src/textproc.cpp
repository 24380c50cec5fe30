// Arabic normalization, tokenization, light stemming and sentence split.

#include "ewaq/textproc.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ewaq/utf8.hpp"

namespace ewaq {

namespace {

constexpr char32_t kTatweel = 0x0640;
constexpr char32_t kAlef = 0x0627;
constexpr char32_t kYeh = 0x064A;
constexpr char32_t kAlefMaksura = 0x0649;
constexpr char32_t kTehMarbuta = 0x0629;
constexpr char32_t kHeh = 0x0647;

// Harakat, tanween, shadda, sukun, superscript alef and the Quranic
// annotation marks. Stripping all of them also collapses decomposed
// hamza/madda-on-alef sequences onto the bare alef path below.
bool is_diacritic(char32_t cp) {
    return (cp >= 0x0610 && cp <= 0x061A) ||
           (cp >= 0x064B && cp <= 0x065F) ||
           cp == 0x0670 ||
           (cp >= 0x06D6 && cp <= 0x06DC) ||
           (cp >= 0x06DF && cp <= 0x06E4) ||
           cp == 0x06E7 || cp == 0x06E8 ||
           (cp >= 0x06EA && cp <= 0x06ED);
}

bool is_alef_variant(char32_t cp) {
    return cp == 0x0622 || cp == 0x0623 || cp == 0x0625 || cp == 0x0671;
}

// Word constituents: ASCII alphanumerics plus the Arabic block letters,
// digits and combining marks (marks belong to the word they sit on; they
// are removed by normalize, not by the tokenizer).
bool is_word_char(char32_t cp) {
    if ((cp >= '0' && cp <= '9') || (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z'))
        return true;
    if (cp >= 0x0610 && cp <= 0x061A) return true;
    if (cp >= 0x0620 && cp <= 0x0669) return true;  // letters, tatweel, marks, digits
    if (cp >= 0x066E && cp <= 0x06D3) return true;
    if (cp == 0x06D5) return true;
    if (cp >= 0x06D6 && cp <= 0x06E8) return true;
    if (cp >= 0x06EA && cp <= 0x06FF) return true;
    return false;
}

bool is_ascii_space(char32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v';
}

const std::array<std::u32string, 10>& prefixes() {
    static const std::array<std::u32string, 10> p = {
        U"وال",  // وال
        U"بال",  // بال
        U"كال",  // كال
        U"فال",  // فال
        U"ال",        // ال
        U"و",              // و
        U"ف",              // ف
        U"ب",              // ب
        U"ك",              // ك
        U"ل",              // ل
    };
    return p;
}

const std::array<std::u32string, 12>& suffixes() {
    static const std::array<std::u32string, 12> s = {
        U"ها",  // ها
        U"هم",  // هم
        U"كم",  // كم
        U"نا",  // نا
        U"ات",  // ات
        U"ان",  // ان
        U"ون",  // ون
        U"ين",  // ين
        U"ية",  // ية
        U"ه",        // ه
        U"ة",        // ة
        U"ي",        // ي
    };
    return s;
}

} // namespace

std::vector<std::string> TextOptions::default_why_particles() {
    return {
        "لماذا",              // لماذا
        "لمَ",                          // لمَ
        "لم",                                // لم
        "ما سبب",             // ما سبب
        "ما السبب", // ما السبب
    };
}

std::string normalize(const std::string& text, const TextOptions& opts) {
    std::u32string cps;
    if (!utf8::decode(text, cps)) {
        // Tolerant path for direct API use; loaders validate separately.
        return text;
    }
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : cps) {
        if (is_diacritic(cp) || cp == kTatweel) continue;
        if (is_alef_variant(cp)) {
            utf8::append(out, kAlef);
        } else if (cp == kAlefMaksura) {
            utf8::append(out, kYeh);
        } else if (opts.fold_taa_marbuta && cp == kTehMarbuta) {
            utf8::append(out, kHeh);
        } else {
            utf8::append(out, cp);
        }
    }
    return out;
}

std::vector<std::string> tokenize(const std::string& text) {
    std::u32string cps;
    if (!utf8::decode(text, cps)) return {};
    std::vector<std::string> tokens;
    std::string current;
    for (char32_t cp : cps) {
        if (is_word_char(cp)) {
            utf8::append(current, cp);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::string LightStemmer::stem(const std::string& normalized_word) const {
    std::u32string w;
    if (!utf8::decode(normalized_word, w) || w.empty()) return normalized_word;

    // One longest matching prefix, then one longest matching suffix;
    // each strip must leave at least 2 letters.
    std::size_t best = 0;
    for (const auto& p : prefixes()) {
        if (p.size() > best && w.size() >= p.size() + 2 &&
            w.compare(0, p.size(), p) == 0) {
            best = p.size();
        }
    }
    if (best > 0) w.erase(0, best);

    best = 0;
    for (const auto& s : suffixes()) {
        if (s.size() > best && w.size() >= s.size() + 2 &&
            w.compare(w.size() - s.size(), s.size(), s) == 0) {
            best = s.size();
        }
    }
    if (best > 0) w.erase(w.size() - best);

    return utf8::encode(w);
}

std::string stem(const std::string& normalized_word, const Lexicon& lex,
                 const Stemmer* stemmer) {
    if (normalized_word.empty())
        throw std::invalid_argument("stem: empty input");
    auto it = lex.roots.find(normalized_word);
    if (it != lex.roots.end()) return it->second;
    static const LightStemmer fallback;
    return (stemmer ? *stemmer : static_cast<const Stemmer&>(fallback))
        .stem(normalized_word);
}

ProcessedText preprocess(const std::string& text, const Lexicon& lex,
                         const TextOptions& opts) {
    ProcessedText pt;
    const std::string norm = normalize(text, opts);
    for (auto& surface : tokenize(norm)) {
        if (lex.is_stopword(surface)) continue;
        Token tok;
        tok.surface = surface;
        tok.normalized = surface;  // tokenized from already-normalized text
        tok.root = stem(surface, lex, opts.stemmer);
        pt.terms.insert(tok.root);
        pt.tokens.push_back(std::move(tok));
    }
    return pt;
}

std::vector<std::string> split_sentences(const std::string& passage_text,
                                         const TextOptions& opts) {
    std::u32string delims = U".";
    if (!opts.extra_sentence_delimiters.empty()) {
        std::u32string extra;
        if (utf8::decode(opts.extra_sentence_delimiters, extra))
            delims += extra;
    }
    std::u32string cps;
    if (!utf8::decode(passage_text, cps)) return {};

    std::vector<std::string> sentences;
    auto flush = [&](std::size_t begin, std::size_t end) {
        while (begin < end && is_ascii_space(cps[begin])) ++begin;
        while (end > begin && is_ascii_space(cps[end - 1])) --end;
        if (begin < end)
            sentences.push_back(utf8::encode(cps.substr(begin, end - begin)));
    };
    std::size_t start = 0;
    for (std::size_t i = 0; i < cps.size(); ++i) {
        if (delims.find(cps[i]) != std::u32string::npos) {
            flush(start, i);
            start = i + 1;
        }
    }
    flush(start, cps.size());
    return sentences;
}

bool detect_why(const std::string& question, const TextOptions& opts) {
    const auto qtokens = tokenize(normalize(question, opts));
    if (qtokens.empty()) return false;
    for (const auto& particle : opts.why_particles) {
        const auto ptokens = tokenize(normalize(particle, opts));
        if (ptokens.empty() || ptokens.size() > qtokens.size()) continue;
        for (std::size_t i = 0; i + ptokens.size() <= qtokens.size(); ++i) {
            if (std::equal(ptokens.begin(), ptokens.end(), qtokens.begin() + i))
                return true;
        }
    }
    return false;
}

} // namespace ewaq
