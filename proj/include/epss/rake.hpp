#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace epss {

// RAKE keyword extraction. Candidate phrases are maximal runs of non-stopword
// tokens between delimiters; each word scores deg(w)/freq(w) over the
// candidate set and a phrase scores the sum over its words. Results are
// sorted by score descending, ties by first occurrence.
struct RakeParams {
    std::set<std::string> stopwords;
    // Characters that terminate a candidate phrase. '-' is deliberately not a
    // delimiter so hyphenated terms survive as single words.
    std::string delimiters = ".,;:!?()[]{}<>\"'`/\\|@#$%^&*_=+~";
};

std::set<std::string> load_stopwords_file(const std::string& path);
const std::set<std::string>& default_stopwords();

std::vector<std::pair<std::string, double>> rake_keywords(std::string_view text,
                                                          const RakeParams& params);

} // namespace epss
