#include "epss/rake.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace epss {

std::set<std::string> load_stopwords_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::transform(line.begin(), line.end(), line.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        words.insert(line);
    }
    return words;
}

const std::set<std::string>& default_stopwords() {
    // Compact English function-word list; a larger one can be supplied via file.
    static const std::set<std::string> words = {
        "a",     "about", "after", "all",   "also",  "an",    "and",  "any",   "are",  "as",
        "at",    "be",    "been",  "before", "being", "between", "both", "but", "by",  "can",
        "could", "did",   "do",    "does",  "down",  "during", "each", "for",  "from", "further",
        "had",   "has",   "have",  "having", "he",   "her",   "here", "his",  "how",  "i",
        "if",    "in",    "into",  "is",    "it",    "its",   "may",  "more", "most", "no",
        "not",   "of",    "on",    "only",  "or",    "other", "our",  "out",  "over", "own",
        "same",  "she",   "should", "so",   "some",  "such",  "than", "that", "the",  "their",
        "them",  "then",  "there", "these", "they",  "this",  "those", "through", "to", "under",
        "until", "up",    "via",   "was",   "we",    "were",  "what", "when", "where", "which",
        "while", "who",   "will",  "with",  "would", "you",   "your",
    };
    return words;
}

std::vector<std::pair<std::string, double>> rake_keywords(std::string_view text,
                                                          const RakeParams& params) {
    // Normalize: lowercase, delimiters become fragment breaks.
    std::string norm(text);
    std::transform(norm.begin(), norm.end(), norm.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (char& c : norm)
        if (params.delimiters.find(c) != std::string::npos) c = '\n';

    // Candidate phrases: maximal runs of non-stopword tokens.
    std::vector<std::vector<std::string>> candidates;
    std::istringstream fragments(norm);
    std::string fragment;
    while (std::getline(fragments, fragment)) {
        std::istringstream words(fragment);
        std::string word;
        std::vector<std::string> run;
        while (words >> word) {
            if (params.stopwords.count(word)) {
                if (!run.empty()) candidates.push_back(std::move(run));
                run.clear();
            } else {
                run.push_back(word);
            }
        }
        if (!run.empty()) candidates.push_back(std::move(run));
    }
    if (candidates.empty()) return {};

    // deg(w): summed phrase lengths over occurrences (co-occurrences plus the
    // word itself); freq(w): occurrence count.
    std::map<std::string, double> degree, frequency;
    for (const auto& phrase : candidates) {
        for (const auto& word : phrase) {
            degree[word] += double(phrase.size());
            frequency[word] += 1.0;
        }
    }

    struct Scored {
        std::string phrase;
        double score;
        size_t first_seen;
    };
    std::vector<Scored> scored;
    std::map<std::string, size_t> seen;
    for (const auto& phrase : candidates) {
        std::string joined;
        for (const auto& word : phrase) {
            if (!joined.empty()) joined += ' ';
            joined += word;
        }
        if (seen.count(joined)) continue;
        seen[joined] = scored.size();
        double s = 0.0;
        for (const auto& word : phrase) s += degree[word] / frequency[word];
        scored.push_back({std::move(joined), s, scored.size()});
    }

    std::stable_sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.first_seen < b.first_seen;
    });

    std::vector<std::pair<std::string, double>> out;
    out.reserve(scored.size());
    for (auto& s : scored) out.emplace_back(std::move(s.phrase), s.score);
    return out;
}

} // namespace epss
